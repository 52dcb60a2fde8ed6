//! The generator `I(a₀; a₁, …, aₙ; aₙ₊₁)` of the free algebra of iterated integrals.

use std::fmt;

use crate::dec::Dec;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IterWord {
    pub a0: Dec,
    pub letters: Vec<Dec>,
    pub a_end: Dec,
}

impl IterWord {
    pub fn new(a0: Dec, letters: Vec<Dec>, a_end: Dec) -> IterWord {
        IterWord { a0, letters, a_end }
    }

    /// Builds a word with symbolic letters from names; `"0"` and integers become rationals.
    pub fn parse_names(a0: &str, letters: &[&str], a_end: &str) -> IterWord {
        let d = |s: &str| match s.parse::<i64>() {
            Ok(n) => Dec::int(n),
            Err(_) => Dec::sym(s),
        };
        IterWord::new(d(a0), letters.iter().map(|s| d(s)).collect(), d(a_end))
    }

    pub fn weight(&self) -> usize {
        self.letters.len()
    }

    pub fn depth(&self) -> usize {
        self.letters.iter().filter(|l| !l.is_zero()).count()
    }

    /// All decorations in reading order, endpoints included.
    pub fn decorations(&self) -> Vec<Dec> {
        let mut v = Vec::with_capacity(self.letters.len() + 2);
        v.push(self.a0.clone());
        v.extend(self.letters.iter().cloned());
        v.push(self.a_end.clone());
        v
    }

    /// Rejects words mixing roots of unity of different orders.
    pub fn check_alphabet(&self) -> Result<()> {
        let mut order = None;
        for d in self.decorations() {
            if let Some(n) = d.cyc_order() {
                match order {
                    None => order = Some(n),
                    Some(m) if m != n => {
                        return Err(Error::MixedAlphabet(format!(
                            "roots of unity of orders {} and {} in {}",
                            m, n, self
                        )))
                    }
                    _ => {}
                }
            }
        }
        Ok(())
    }

    pub fn latex(&self) -> String {
        let ls: Vec<String> = self.letters.iter().map(|l| l.latex()).collect();
        format!("I({}; {}; {})", self.a0.latex(), ls.join(", "), self.a_end.latex())
    }
}

impl fmt::Display for IterWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ls: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        if ls.is_empty() {
            write!(f, "I({};; {})", self.a0, self.a_end)
        } else {
            write!(f, "I({}; {}; {})", self.a0, ls.join(", "), self.a_end)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weight_depth_display() {
        let w = IterWord::parse_names("0", &["1", "0", "x"], "1");
        assert_eq!(w.weight(), 3);
        assert_eq!(w.depth(), 2);
        assert_eq!(w.to_string(), "I(0; 1, 0, x; 1)");
        assert_eq!(IterWord::parse_names("a", &[], "b").to_string(), "I(a;; b)");
    }

    #[test]
    fn mixed_roots_rejected() {
        let w = IterWord::new(Dec::zero(), vec![Dec::cyc(1, 3), Dec::cyc(1, 4)], Dec::one());
        assert_eq!(w.check_alphabet().unwrap_err().code(), "MIXED_ALPHABET");
        let ok = IterWord::new(Dec::zero(), vec![Dec::cyc(1, 3)], Dec::cyc(2, 3));
        assert!(ok.check_alphabet().is_ok());
    }
}
