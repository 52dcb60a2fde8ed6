//! Expression grammar, parser and printer.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := [rational '*'] factor ('*' factor)*
//! factor := 'I(' dec ';' [dec-list] ';' dec ')'
//!         | 'Li[' int-list '](' dec-list ')'
//!         | 'zeta(' int-list ')'
//!         | '(' expr ')'
//! dec    := identifier | ['-'] rational | 'w' int '/' int
//! ```

use std::fmt;

use iterhopf::{Dec, Q};
use num_bigint::BigInt;
use num_traits::Zero;

/// A positioned syntax error; displays as `SYNTAX_ERROR at line:col: message`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyntaxError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl fmt::Display for SyntaxError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SYNTAX_ERROR at {}:{}: {}", self.line, self.col, self.message)
    }
}

impl std::error::Error for SyntaxError {}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Factor {
    Word { a0: Dec, letters: Vec<Dec>, a_end: Dec },
    Li { ns: Vec<u32>, xs: Vec<Dec> },
    Zeta(Vec<u32>),
    Paren(Box<ExprAst>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub coeff: Option<Q>,
    pub factors: Vec<Factor>,
}

/// Parse tree of an expression: signed terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExprAst {
    pub terms: Vec<(Sign, Term)>,
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Factor::Word { a0, letters, a_end } => {
                let ls: Vec<String> = letters.iter().map(|d| d.to_string()).collect();
                if ls.is_empty() {
                    write!(f, "I({};; {})", a0, a_end)
                } else {
                    write!(f, "I({}; {}; {})", a0, ls.join(", "), a_end)
                }
            }
            Factor::Li { ns, xs } => {
                let ns: Vec<String> = ns.iter().map(|n| n.to_string()).collect();
                let xs: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
                write!(f, "Li[{}]({})", ns.join(","), xs.join(", "))
            }
            Factor::Zeta(ns) => {
                let ns: Vec<String> = ns.iter().map(|n| n.to_string()).collect();
                write!(f, "zeta({})", ns.join(","))
            }
            Factor::Paren(e) => write!(f, "({})", e),
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(c) = &self.coeff {
            write!(f, "{} * ", c)?;
        }
        let fs: Vec<String> = self.factors.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", fs.join(" * "))
    }
}

impl fmt::Display for ExprAst {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (s, t)) in self.terms.iter().enumerate() {
            match (i, s) {
                (0, Sign::Plus) => {}
                (0, Sign::Minus) => write!(f, "-")?,
                (_, Sign::Plus) => write!(f, " + ")?,
                (_, Sign::Minus) => write!(f, " - ")?,
            }
            write!(f, "{}", t)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Cyc(u64, u64),
    Sym(char),
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "'{}'", s),
            Tok::Int(n) => write!(f, "'{}'", n),
            Tok::Cyc(k, n) => write!(f, "'w{}/{}'", k, n),
            Tok::Sym(c) => write!(f, "'{}'", c),
        }
    }
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    line: usize,
    col: usize,
}

fn lex(input: &str) -> Result<(Vec<Spanned>, (usize, usize)), SyntaxError> {
    let chars: Vec<char> = input.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0, 1, 1);
    let digits = |chars: &[char], mut j: usize| {
        let start = j;
        while j < chars.len() && chars[j].is_ascii_digit() {
            j += 1;
        }
        (chars[start..j].iter().collect::<String>(), j)
    };
    while i < chars.len() {
        let c = chars[i];
        let (l0, c0) = (line, col);
        if c == '\n' {
            i += 1;
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            col += 1;
            continue;
        }
        let start = i;
        let tok = if c.is_ascii_digit() {
            let (s, j) = digits(&chars, i);
            i = j;
            Tok::Int(s.parse().expect("digit run"))
        } else if c.is_ascii_alphabetic() || c == '_' {
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            let cyc_k = s.strip_prefix('w').filter(|k| !k.is_empty() && k.bytes().all(|b| b.is_ascii_digit()));
            match cyc_k {
                Some(k) if i + 1 < chars.len() && chars[i] == '/' && chars[i + 1].is_ascii_digit() => {
                    let (n, j) = digits(&chars, i + 1);
                    i = j;
                    let parse = |s: &str| {
                        s.parse::<u64>().map_err(|_| SyntaxError {
                            line: l0,
                            col: c0,
                            message: "cyclotomic exponent out of range".into(),
                        })
                    };
                    Tok::Cyc(parse(k)?, parse(&n)?)
                }
                _ => Tok::Ident(s),
            }
        } else if "()[];,*/+-".contains(c) {
            i += 1;
            Tok::Sym(c)
        } else {
            return Err(SyntaxError { line, col, message: format!("unexpected character '{}'", c) });
        };
        col += i - start;
        out.push(Spanned { tok, line: l0, col: c0 });
    }
    Ok((out, (line, col)))
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
    end: (usize, usize),
}

impl Parser {
    fn new(input: &str) -> Result<Parser, SyntaxError> {
        let (toks, end) = lex(input)?;
        Ok(Parser { toks, pos: 0, end })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|s| &s.tok)
    }

    fn peek2(&self) -> Option<&Tok> {
        self.toks.get(self.pos + 1).map(|s| &s.tok)
    }

    fn error(&self, message: String) -> SyntaxError {
        let (line, col) = self.toks.get(self.pos).map(|s| (s.line, s.col)).unwrap_or(self.end);
        SyntaxError { line, col, message }
    }

    fn expected(&self, what: &str) -> SyntaxError {
        match self.peek() {
            Some(t) => self.error(format!("expected {}, found {}", what, t)),
            None => self.error(format!("expected {}, found end of input", what)),
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), SyntaxError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.expected(&format!("'{}'", c)))
        }
    }

    fn finish(&self) -> Result<(), SyntaxError> {
        match self.peek() {
            None => Ok(()),
            Some(t) => Err(self.error(format!("unexpected {}", t))),
        }
    }

    fn expr(&mut self) -> Result<ExprAst, SyntaxError> {
        let mut terms = Vec::new();
        let mut sign = if self.eat('-') {
            Sign::Minus
        } else {
            self.eat('+');
            Sign::Plus
        };
        loop {
            terms.push((sign, self.term()?));
            sign = if self.eat('+') {
                Sign::Plus
            } else if self.eat('-') {
                Sign::Minus
            } else {
                break;
            };
        }
        Ok(ExprAst { terms })
    }

    fn term(&mut self) -> Result<Term, SyntaxError> {
        let coeff = if matches!(self.peek(), Some(Tok::Int(_))) {
            let c = self.rational()?;
            self.expect('*')?;
            Some(c)
        } else {
            None
        };
        let mut factors = vec![self.factor()?];
        while self.eat('*') {
            factors.push(self.factor()?);
        }
        Ok(Term { coeff, factors })
    }

    fn factor(&mut self) -> Result<Factor, SyntaxError> {
        match (self.peek().cloned(), self.peek2()) {
            (Some(Tok::Ident(s)), Some(Tok::Sym('('))) if s == "I" => {
                self.pos += 2;
                let a0 = self.dec()?;
                self.expect(';')?;
                let letters = if self.peek() == Some(&Tok::Sym(';')) { Vec::new() } else { self.dec_list()? };
                self.expect(';')?;
                let a_end = self.dec()?;
                self.expect(')')?;
                Ok(Factor::Word { a0, letters, a_end })
            }
            (Some(Tok::Ident(s)), Some(Tok::Sym('['))) if s == "Li" => {
                self.pos += 2;
                let ns = self.int_list()?;
                self.expect(']')?;
                self.expect('(')?;
                let xs = self.dec_list()?;
                self.expect(')')?;
                Ok(Factor::Li { ns, xs })
            }
            (Some(Tok::Ident(s)), Some(Tok::Sym('('))) if s == "zeta" => {
                self.pos += 2;
                let ns = self.int_list()?;
                self.expect(')')?;
                Ok(Factor::Zeta(ns))
            }
            (Some(Tok::Sym('(')), _) => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(Factor::Paren(Box::new(e)))
            }
            _ => Err(self.expected("'I(', 'Li[', 'zeta(' or '('")),
        }
    }

    fn int(&mut self) -> Result<BigInt, SyntaxError> {
        match self.peek() {
            Some(Tok::Int(n)) => {
                let n = n.clone();
                self.pos += 1;
                Ok(n)
            }
            _ => Err(self.expected("an integer")),
        }
    }

    fn rational(&mut self) -> Result<Q, SyntaxError> {
        let n = self.int()?;
        if self.peek() == Some(&Tok::Sym('/')) && matches!(self.peek2(), Some(Tok::Int(_))) {
            self.pos += 1;
            let d = self.int()?;
            if d.is_zero() {
                self.pos -= 1;
                return Err(self.error("zero denominator".into()));
            }
            Ok(Q::new(n, d))
        } else {
            Ok(Q::from_integer(n))
        }
    }

    fn int_list(&mut self) -> Result<Vec<u32>, SyntaxError> {
        let mut out = Vec::new();
        loop {
            let n = self.int()?;
            let v = u32::try_from(&n).ok().filter(|&v| v > 0).ok_or_else(|| {
                self.pos -= 1;
                self.error(format!("index {} must be a positive integer", n))
            })?;
            out.push(v);
            if !self.eat(',') {
                return Ok(out);
            }
        }
    }

    fn dec_list(&mut self) -> Result<Vec<Dec>, SyntaxError> {
        let mut out = vec![self.dec()?];
        while self.eat(',') {
            out.push(self.dec()?);
        }
        Ok(out)
    }

    fn dec(&mut self) -> Result<Dec, SyntaxError> {
        match self.peek().cloned() {
            Some(Tok::Ident(s)) => {
                self.pos += 1;
                Ok(Dec::sym(&s))
            }
            Some(Tok::Cyc(k, n)) => {
                if n == 0 || n > u32::MAX as u64 {
                    return Err(self.error(format!("bad cyclotomic order {}", n)));
                }
                self.pos += 1;
                Ok(Dec::cyc((k % n) as i64, n as u32))
            }
            Some(Tok::Int(_)) => Ok(Dec::rat(self.rational()?)),
            Some(Tok::Sym('-')) if matches!(self.peek2(), Some(Tok::Int(_))) => {
                self.pos += 1;
                Ok(Dec::rat(-self.rational()?))
            }
            _ => Err(self.expected("a decoration")),
        }
    }
}

/// Parses a full expression.
pub fn parse(input: &str) -> Result<ExprAst, SyntaxError> {
    let mut p = Parser::new(input)?;
    let e = p.expr()?;
    p.finish()?;
    Ok(e)
}

/// Parses a comma-separated list of decorations.
pub fn parse_decs(input: &str) -> Result<Vec<Dec>, SyntaxError> {
    let mut p = Parser::new(input)?;
    let ds = p.dec_list()?;
    p.finish()?;
    Ok(ds)
}

/// Parses a single decoration.
pub fn parse_dec(input: &str) -> Result<Dec, SyntaxError> {
    let mut p = Parser::new(input)?;
    let d = p.dec()?;
    p.finish()?;
    Ok(d)
}

/// Parses a rational `p` or `p/q`, optionally negative.
pub fn parse_rational(input: &str) -> Result<Q, SyntaxError> {
    let mut p = Parser::new(input)?;
    let neg = p.eat('-');
    let x = p.rational()?;
    p.finish()?;
    Ok(if neg { -x } else { x })
}

impl ExprAst {
    /// The single factor of a one-term expression with no coefficient and a plus sign.
    pub fn as_factor(&self) -> Option<&Factor> {
        match self.terms.as_slice() {
            [(Sign::Plus, Term { coeff: None, factors })] if factors.len() == 1 => Some(&factors[0]),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn roundtrip(s: &str) {
        let a = parse(s).unwrap();
        let printed = a.to_string();
        assert_eq!(parse(&printed).unwrap(), a, "{} printed as {}", s, printed);
    }

    #[test]
    fn word_with_letters() {
        let e = parse("I(0; 1, 0; 1)").unwrap();
        match e.as_factor() {
            Some(Factor::Word { a0, letters, a_end }) => {
                assert_eq!(a0, &Dec::zero());
                assert_eq!(letters, &vec![Dec::one(), Dec::zero()]);
                assert_eq!(a_end, &Dec::one());
            }
            other => panic!("unexpected {:?}", other),
        }
    }

    #[test]
    fn zeta_and_scaled_li() {
        assert_eq!(parse("zeta(3,5)").unwrap().as_factor(), Some(&Factor::Zeta(vec![3, 5])));
        let e = parse("2/3 * Li[2,1](x, y)").unwrap();
        let (s, t) = &e.terms[0];
        assert_eq!(*s, Sign::Plus);
        assert_eq!(t.coeff, Some(Q::new(2.into(), 3.into())));
        assert_eq!(t.factors, vec![Factor::Li { ns: vec![2, 1], xs: vec![Dec::sym("x"), Dec::sym("y")] }]);
    }

    #[test]
    fn cyclotomic_and_negative_decorations() {
        let ds = parse_decs("w1/3, -1/2, x, w2").unwrap();
        assert_eq!(ds, vec![Dec::cyc(1, 3), Dec::rat(Q::new((-1).into(), 2.into())), Dec::sym("x"), Dec::sym("w2")]);
    }

    #[test]
    fn roundtrips() {
        for s in [
            "I(a0; a1, a2; a3)",
            "-I(a;; b) + 3 * zeta(3) * zeta(5) - 1/2 * Li[1,2](w1/4, -3)",
            "(I(0; 1; x) - Li[2](1/2)) * (zeta(2) + zeta(3))",
        ] {
            roundtrip(s);
        }
    }

    #[test]
    fn error_positions() {
        assert_eq!(parse("I(a; b c)").unwrap_err().to_string(), "SYNTAX_ERROR at 1:8: expected ';', found 'c'");
        let e = parse("zeta(3)\n + Li[0](x)").unwrap_err();
        assert_eq!((e.line, e.col), (2, 7));
        let e = parse("I(a; b; c").unwrap_err();
        assert_eq!((e.line, e.col), (1, 10));
        assert!(parse("2 * ").is_err());
        assert!(parse("x$").is_err());
    }
}
