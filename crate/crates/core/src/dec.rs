//! Decorations: the letters carried by words, trees and paths, and the
//! weight-one log symbols `[x]` they generate in `F* ⊗ Q`.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::coeff::{Generator, LinComb};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qf(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// A formal Laurent monomial `c · x₁^e₁ ⋯ x_r^e_r` with at least one symbol.
#[derive(Clone, Debug)]
pub struct SymMono {
    coeff: Q,
    vars: Vec<(String, i32)>,
}

impl PartialEq for SymMono {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self, other) || (self.coeff == other.coeff && self.vars == other.vars)
    }
}

impl Eq for SymMono {}

impl std::hash::Hash for SymMono {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.coeff.hash(state);
        self.vars.hash(state);
    }
}

impl PartialOrd for SymMono {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SymMono {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        if std::ptr::eq(self, other) {
            return std::cmp::Ordering::Equal;
        }
        (&self.coeff, &self.vars).cmp(&(&other.coeff, &other.vars))
    }
}

impl SymMono {
    pub fn coeff(&self) -> &Q {
        &self.coeff
    }

    pub fn vars(&self) -> &[(String, i32)] {
        &self.vars
    }

    fn leading_exponent(&self) -> i32 {
        self.vars[0].1
    }
}

/// A letter of the alphabet S.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Dec {
    /// An exact rational; `Rat(0)` is the distinguished point 0.
    Rat(Q),
    /// A formal symbol, or a monomial in formal symbols.
    Sym(Arc<SymMono>),
    /// The root of unity `ζ_n^k` with `0 < k < n`.
    Cyc { k: u32, n: u32 },
}

impl Dec {
    pub fn zero() -> Dec {
        Dec::Rat(Q::zero())
    }

    pub fn one() -> Dec {
        Dec::Rat(Q::one())
    }

    pub fn int(n: i64) -> Dec {
        Dec::Rat(q(n))
    }

    pub fn rat(x: Q) -> Dec {
        Dec::Rat(x)
    }

    pub fn sym(name: &str) -> Dec {
        Dec::Sym(Arc::new(SymMono { coeff: Q::one(), vars: vec![(name.to_string(), 1)] }))
    }

    /// `ζ_n^k`; the exponent is reduced mod `n` and `ζ^0` becomes the rational 1.
    pub fn cyc(k: i64, n: u32) -> Dec {
        assert!(n > 0, "cyclotomic order must be positive");
        let k = k.rem_euclid(n as i64) as u32;
        if k == 0 {
            Dec::one()
        } else {
            Dec::Cyc { k, n }
        }
    }

    /// Builds `c · Π x^e`, collapsing to a rational when no symbol survives.
    pub fn monomial(coeff: Q, vars: &[(String, i32)]) -> Dec {
        if coeff.is_zero() {
            return Dec::zero();
        }
        let mut vs: Vec<(String, i32)> = Vec::new();
        let mut sorted = vars.to_vec();
        sorted.sort();
        for (name, e) in sorted {
            match vs.last_mut() {
                Some((last, le)) if *last == name => *le += e,
                _ => vs.push((name, e)),
            }
        }
        vs.retain(|(_, e)| *e != 0);
        if vs.is_empty() {
            Dec::Rat(coeff)
        } else {
            Dec::Sym(Arc::new(SymMono { coeff, vars: vs }))
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Dec::Rat(x) if x.is_zero())
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Dec::Rat(x) if x.is_one())
    }

    pub fn as_rat(&self) -> Option<&Q> {
        match self {
            Dec::Rat(x) => Some(x),
            _ => None,
        }
    }

    fn as_monomial(&self) -> Option<(Q, Vec<(String, i32)>)> {
        match self {
            Dec::Rat(x) => Some((x.clone(), Vec::new())),
            Dec::Sym(m) => Some((m.coeff.clone(), m.vars.clone())),
            Dec::Cyc { .. } => None,
        }
    }

    /// Product of two decorations, when it is representable.
    pub fn mul(&self, other: &Dec) -> Option<Dec> {
        match (self, other) {
            (Dec::Cyc { k: a, n: na }, Dec::Cyc { k: b, n: nb }) if na == nb => {
                Some(Dec::cyc(*a as i64 + *b as i64, *na))
            }
            (Dec::Cyc { k, n }, Dec::Rat(x)) | (Dec::Rat(x), Dec::Cyc { k, n }) => {
                if x.is_one() {
                    Some(Dec::Cyc { k: *k, n: *n })
                } else if *x == -Q::one() && n % 2 == 0 {
                    Some(Dec::cyc(*k as i64 + (*n / 2) as i64, *n))
                } else if x.is_zero() {
                    Some(Dec::zero())
                } else {
                    None
                }
            }
            (Dec::Cyc { .. }, _) | (_, Dec::Cyc { .. }) => None,
            _ => {
                let (c1, v1) = self.as_monomial()?;
                let (c2, v2) = other.as_monomial()?;
                let mut vs = v1;
                vs.extend(v2);
                Some(Dec::monomial(c1 * c2, &vs))
            }
        }
    }

    pub fn inv(&self) -> Option<Dec> {
        match self {
            Dec::Rat(x) if x.is_zero() => None,
            Dec::Rat(x) => Some(Dec::Rat(x.recip())),
            Dec::Sym(m) => {
                let vs: Vec<(String, i32)> = m.vars.iter().map(|(s, e)| (s.clone(), -e)).collect();
                Some(Dec::monomial(m.coeff.recip(), &vs))
            }
            Dec::Cyc { k, n } => Some(Dec::cyc(*n as i64 - *k as i64, *n)),
        }
    }

    pub fn div(&self, other: &Dec) -> Option<Dec> {
        self.mul(&other.inv()?)
    }

    /// The cyclotomic order, if this is a root of unity `ζ_n^k`.
    pub fn cyc_order(&self) -> Option<u32> {
        match self {
            Dec::Cyc { n, .. } => Some(*n),
            _ => None,
        }
    }

    pub fn latex(&self) -> String {
        match self {
            Dec::Rat(x) => rat_latex(x),
            Dec::Sym(_) => {
                let s = self.to_string();
                s.replace('*', " ")
            }
            Dec::Cyc { k, n } => format!("\\zeta_{{{}}}^{{{}}}", n, k),
        }
    }
}

pub(crate) fn rat_latex(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        let sign = if x.is_negative() { "-" } else { "" };
        format!("{}\\frac{{{}}}{{{}}}", sign, x.numer().abs(), x.denom())
    }
}

impl fmt::Display for Dec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dec::Rat(x) => write!(f, "{}", x),
            Dec::Cyc { k, n } => write!(f, "w{}/{}", k, n),
            Dec::Sym(m) => {
                let mut num: Vec<String> = Vec::new();
                let mut den: Vec<String> = Vec::new();
                let c = &m.coeff;
                let neg = c.is_negative();
                let cn = c.numer().abs();
                if !cn.is_one() {
                    num.push(cn.to_string());
                }
                if !c.denom().is_one() {
                    den.push(c.denom().to_string());
                }
                for (s, e) in &m.vars {
                    let piece = |p: i32| if p == 1 { s.clone() } else { format!("{}^{}", s, p) };
                    if *e > 0 {
                        num.push(piece(*e));
                    } else {
                        den.push(piece(-*e));
                    }
                }
                let numer = if num.is_empty() { "1".to_string() } else { num.join("*") };
                let sign = if neg { "-" } else { "" };
                match den.len() {
                    0 => write!(f, "{}{}", sign, numer),
                    1 => write!(f, "{}{}/{}", sign, numer, den[0]),
                    _ => write!(f, "{}{}/({})", sign, numer, den.join("*")),
                }
            }
        }
    }
}

/// An atom of the additive group `F* ⊗ Q`; sign and roots of unity are torsion and dropped.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LogAtom {
    /// `[p]` for a rational prime `p`.
    Prime(BigInt),
    /// `[x]` for a formal symbol `x`.
    Var(String),
    /// `[1 − ζ_n^k]` with `0 < k < n/2` up to the symmetry `k ↔ n − k`.
    CycUnit { k: u32, n: u32 },
    /// `[1 − u]` for a non-constant monomial `u` whose leading exponent is positive.
    OneMinus(Arc<SymMono>),
    /// The formal difference `[a − b]`, stored with `a < b`.
    Diff(Dec, Dec),
}

impl fmt::Display for LogAtom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LogAtom::Prime(p) => write!(f, "[{}]", p),
            LogAtom::Var(s) => write!(f, "[{}]", s),
            LogAtom::CycUnit { k, n } => write!(f, "[1 - w{}/{}]", k, n),
            LogAtom::OneMinus(m) => write!(f, "[1 - {}]", Dec::Sym(m.clone())),
            LogAtom::Diff(a, b) => write!(f, "[{} - {}]", b, a),
        }
    }
}

impl LogAtom {
    pub fn latex(&self) -> String {
        match self {
            LogAtom::Prime(p) => format!("[{}]", p),
            LogAtom::Var(s) => format!("[{}]", s),
            LogAtom::CycUnit { k, n } => format!("[1-\\zeta_{{{}}}^{{{}}}]", n, k),
            LogAtom::OneMinus(m) => format!("[1-{}]", Dec::Sym(m.clone()).latex()),
            LogAtom::Diff(a, b) => format!("[{}-{}]", b.latex(), a.latex()),
        }
    }
}

fn atom(a: LogAtom) -> LinComb {
    LinComb::from_gen(Generator::Log(a))
}

/// Prime factorisation by trial division; a cofactor left after the search bound is kept whole.
pub fn factor(n: &BigInt) -> Vec<(BigInt, i64)> {
    let mut n = n.abs();
    let mut out = Vec::new();
    if n.is_zero() {
        return out;
    }
    let mut p = BigInt::from(2u32);
    let bound = BigInt::from(1_000_000u32);
    while &p * &p <= n && p <= bound {
        let mut e = 0;
        while (&n % &p).is_zero() {
            n /= &p;
            e += 1;
        }
        if e > 0 {
            out.push((p.clone(), e));
        }
        p += if p == BigInt::from(2u32) { 1u32 } else { 2u32 };
    }
    if !n.is_one() {
        out.push((n, 1));
    }
    out
}

/// `[x]` for a nonzero rational: `Σ v_ℓ(x) [ℓ]` over primes ℓ.
pub fn log_rat(x: &Q) -> LinComb {
    assert!(!x.is_zero(), "log of zero");
    let mut out = LinComb::zero();
    for (p, e) in factor(x.numer()) {
        out.add_term_gen(Generator::Log(LogAtom::Prime(p)), q(e));
    }
    for (p, e) in factor(x.denom()) {
        out.add_term_gen(Generator::Log(LogAtom::Prime(p)), q(-e));
    }
    out
}

/// `[d]` for a nonzero decoration.
pub fn log_of(d: &Dec) -> LinComb {
    match d {
        Dec::Rat(x) => log_rat(x),
        Dec::Cyc { .. } => LinComb::zero(),
        Dec::Sym(m) => {
            let mut out = log_rat(&m.coeff);
            for (s, e) in &m.vars {
                out.add_term_gen(Generator::Log(LogAtom::Var(s.clone())), q(*e as i64));
            }
            out
        }
    }
}

fn cyc_unit(k: i64, n: u32) -> LinComb {
    let k = k.rem_euclid(n as i64) as u32;
    assert!(k != 0);
    if 2 * k == n {
        return log_rat(&q(2));
    }
    atom(LogAtom::CycUnit { k: k.min(n - k), n })
}

/// `[a − b]` for `a ≠ b`. Rational and cyclotomic differences are reduced;
/// symbolic differences stay formal.
pub fn log_diff(a: &Dec, b: &Dec) -> LinComb {
    assert!(a != b, "log of a zero difference");
    if a.is_zero() {
        return log_of(b);
    }
    if b.is_zero() {
        return log_of(a);
    }
    match (a, b) {
        (Dec::Rat(x), Dec::Rat(y)) => log_rat(&(x - y)),
        (Dec::Cyc { k: ka, n: na }, Dec::Cyc { k: kb, n: nb }) if na == nb => {
            cyc_unit(*kb as i64 - *ka as i64, *na)
        }
        (Dec::Cyc { k, n }, Dec::Rat(x)) | (Dec::Rat(x), Dec::Cyc { k, n }) if x.is_one() => {
            cyc_unit(*k as i64, *n)
        }
        _ => {
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            atom(LogAtom::Diff(lo.clone(), hi.clone()))
        }
    }
}

/// `[1 − u]` for a monomial decoration `u ≠ 1`, in canonical form.
fn one_minus(u: &Dec) -> LinComb {
    match u {
        Dec::Rat(x) => log_rat(&(Q::one() - x)),
        Dec::Sym(m) => {
            if m.leading_exponent() > 0 {
                atom(LogAtom::OneMinus(m.clone()))
            } else {
                let inv = u.inv().expect("monomial is invertible");
                let mut out = log_of(u);
                out.add_assign(&one_minus(&inv));
                out
            }
        }
        Dec::Cyc { .. } => unreachable!("cyclotomic differences are reduced by log_diff"),
    }
}

/// Rewrites a formal difference of monomials as `[b] + [1 − a/b]`, which identifies
/// all differences related by rescaling.
pub fn expand_atom(a: &LogAtom) -> LinComb {
    match a {
        LogAtom::Diff(x, y) => match x.div(y) {
            Some(u) if !matches!(x, Dec::Cyc { .. }) && !matches!(y, Dec::Cyc { .. }) => {
                let mut out = log_of(y);
                out.add_assign(&one_minus(&u));
                out
            }
            _ => atom(a.clone()),
        },
        _ => atom(a.clone()),
    }
}

/// Applies [`expand_atom`] to every log generator of a linear combination.
pub fn expand_logs(x: &LinComb) -> LinComb {
    x.map_gens(&|g| match g {
        Generator::Log(a) => expand_atom(a),
        other => LinComb::from_gen(other.clone()),
    })
}

/// `v_p(x)` for a nonzero rational and a prime `p`.
pub fn valuation_rat(x: &Q, p: &BigInt) -> i64 {
    fn val(n: &BigInt, p: &BigInt) -> i64 {
        let mut n = n.abs();
        let mut e = 0;
        while !n.is_zero() && n.is_multiple_of(p) {
            n /= p;
            e += 1;
        }
        e
    }
    val(x.numer(), p) - val(x.denom(), p)
}

pub fn to_f64(x: &Q) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}
