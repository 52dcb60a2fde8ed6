//! Exact coefficients, the free commutative algebra on an open universe of
//! generators, and k-fold tensor and wedge containers.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::dec::{rat_latex, LogAtom, Q};
use crate::tree::PlaneTree;
use crate::word::IterWord;

/// A generator of the free commutative algebra. Weight-zero content is the scalar 1
/// and never appears as a generator.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    Log(LogAtom),
    Word(IterWord),
    Zeta(Vec<u32>),
    Tree(PlaneTree),
}

impl Generator {
    pub fn weight(&self) -> usize {
        match self {
            Generator::Log(_) => 1,
            Generator::Word(w) => w.weight(),
            Generator::Zeta(ns) => ns.iter().map(|&n| n as usize).sum(),
            Generator::Tree(t) => t.vertex_count(),
        }
    }

    /// Number of nonzero letters for words, depth for zetas, 0 for logs and trees.
    pub fn depth(&self) -> usize {
        match self {
            Generator::Log(_) => 0,
            Generator::Word(w) => w.depth(),
            Generator::Zeta(ns) => ns.len(),
            Generator::Tree(_) => 0,
        }
    }

    pub fn latex(&self) -> String {
        match self {
            Generator::Log(a) => a.latex(),
            Generator::Word(w) => w.latex(),
            Generator::Zeta(ns) => format!(
                "\\zeta({})",
                ns.iter().map(|n| n.to_string()).collect::<Vec<_>>().join(",")
            ),
            Generator::Tree(t) => t.latex(),
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Log(a) => write!(f, "{}", a),
            Generator::Word(w) => write!(f, "{}", w),
            Generator::Zeta(ns) => write!(
                f,
                "zeta({})",
                ns.iter().map(|n| n.to_string()).collect::<Vec<_>>().join(",")
            ),
            Generator::Tree(t) => write!(f, "{}", t),
        }
    }
}

/// A commutative monomial: a sorted multiset of generators. The empty monomial is 1.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<(Generator, u32)>);

impl Monomial {
    pub fn one() -> Monomial {
        Monomial(Vec::new())
    }

    pub fn gen(g: Generator) -> Monomial {
        Monomial(vec![(g, 1)])
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn factors(&self) -> &[(Generator, u32)] {
        &self.0
    }

    /// Total number of generator factors counted with multiplicity.
    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    /// The generator, if this monomial is a single generator to the first power.
    pub fn single(&self) -> Option<&Generator> {
        match self.0.as_slice() {
            [(g, 1)] => Some(g),
            _ => None,
        }
    }

    pub fn weight(&self) -> usize {
        self.0.iter().map(|(g, e)| g.weight() * *e as usize).sum()
    }

    pub fn depth(&self) -> usize {
        self.0.iter().map(|(g, e)| g.depth() * *e as usize).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out: Vec<(Generator, u32)> = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].0.cmp(&other.0[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(self.0[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(other.0[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((self.0[i].0.clone(), self.0[i].1 + other.0[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Monomial(out)
    }

    /// Iterates over the factors with repetition.
    pub fn expanded(&self) -> impl Iterator<Item = &Generator> {
        self.0.iter().flat_map(|(g, e)| std::iter::repeat_n(g, *e as usize))
    }

    pub fn latex(&self) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        self.0
            .iter()
            .map(|(g, e)| if *e == 1 { g.latex() } else { format!("{}^{{{}}}", g.latex(), e) })
            .collect::<Vec<_>>()
            .join(" \\cdot ")
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.expanded().map(|g| g.to_string()).collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// A finite Q-linear combination of monomials with no stored zero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LinComb {
    terms: BTreeMap<Monomial, Q>,
}

impl LinComb {
    pub fn zero() -> LinComb {
        LinComb { terms: BTreeMap::new() }
    }

    pub fn one() -> LinComb {
        LinComb::scalar(Q::one())
    }

    pub fn scalar(c: Q) -> LinComb {
        let mut out = LinComb::zero();
        out.add_term(Monomial::one(), c);
        out
    }

    pub fn from_gen(g: Generator) -> LinComb {
        LinComb::from_mono(Monomial::gen(g))
    }

    pub fn from_mono(m: Monomial) -> LinComb {
        let mut out = LinComb::zero();
        out.add_term(m, Q::one());
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Q)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Q {
        self.terms.get(m).cloned().unwrap_or_else(Q::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: Q) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_term_gen(&mut self, g: Generator, c: Q) {
        self.add_term(Monomial::gen(g), c);
    }

    pub fn add_assign(&mut self, other: &LinComb) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub fn sub_assign(&mut self, other: &LinComb) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }

    pub fn add_scaled(&mut self, other: &LinComb, s: &Q) {
        if s.is_zero() {
            return;
        }
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c * s);
        }
    }

    pub fn add(&self, other: &LinComb) -> LinComb {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn sub(&self, other: &LinComb) -> LinComb {
        let mut out = self.clone();
        out.sub_assign(other);
        out
    }

    pub fn neg(&self) -> LinComb {
        self.scale(&-Q::one())
    }

    pub fn scale(&self, s: &Q) -> LinComb {
        if s.is_zero() {
            return LinComb::zero();
        }
        LinComb { terms: self.terms.iter().map(|(m, c)| (m.clone(), c * s)).collect() }
    }

    /// `self += c · x · m`.
    pub fn add_mul_mono(&mut self, x: &LinComb, m: &Monomial, c: &Q) {
        if c.is_zero() {
            return;
        }
        let unit = if c.is_one() {
            Some(false)
        } else if (-c).is_one() {
            Some(true)
        } else {
            None
        };
        for (m1, c1) in &x.terms {
            let coeff = match unit {
                Some(false) => c1.clone(),
                Some(true) => -c1.clone(),
                None => c1 * c,
            };
            let key = if m.is_one() { m1.clone() } else { m1.mul(m) };
            self.add_term(key, coeff);
        }
    }

    pub fn mul(&self, other: &LinComb) -> LinComb {
        let mut out = LinComb::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> LinComb {
        let mut out = LinComb::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// The constant term.
    pub fn scalar_part(&self) -> Q {
        self.coeff(&Monomial::one())
    }

    /// The homogeneous component of the given weight.
    pub fn part(&self, weight: usize) -> LinComb {
        LinComb {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.weight() == weight)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn max_weight(&self) -> usize {
        self.terms.keys().map(|m| m.weight()).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut ws = self.terms.keys().map(|m| m.weight());
        match ws.next() {
            None => true,
            Some(w) => ws.all(|x| x == w),
        }
    }

    /// Extends a map on generators to the unique algebra morphism.
    pub fn map_gens(&self, f: &dyn Fn(&Generator) -> LinComb) -> LinComb {
        let mut cache: BTreeMap<&Generator, LinComb> = BTreeMap::new();
        let mut out = LinComb::zero();
        for (m, c) in &self.terms {
            let mut prod = LinComb::scalar(c.clone());
            for (g, e) in m.factors() {
                let img = cache.entry(g).or_insert_with(|| f(g)).clone();
                for _ in 0..*e {
                    prod = prod.mul(&img);
                }
                if prod.is_zero() {
                    break;
                }
            }
            out.add_assign(&prod);
        }
        out
    }

    /// Extends a map on monomials linearly.
    pub fn map_monos(&self, f: &dyn Fn(&Monomial) -> LinComb) -> LinComb {
        let mut out = LinComb::zero();
        for (m, c) in &self.terms {
            out.add_scaled(&f(m), c);
        }
        out
    }

    pub fn latex(&self) -> String {
        render_sum(self.terms.iter().map(|(m, c)| (c, m.latex(), m.is_one())), true)
    }
}

/// `Σ cᵢ xᵢ` with zero pruning.
pub fn lin_combine(xs: &[(Q, LinComb)]) -> LinComb {
    let mut out = LinComb::zero();
    for (c, x) in xs {
        out.add_scaled(x, c);
    }
    out
}

/// The commutative product of two linear combinations.
pub fn mono_mul(x: &LinComb, y: &LinComb) -> LinComb {
    x.mul(y)
}

fn coeff_text(c: &Q, latex: bool) -> String {
    if latex {
        rat_latex(c)
    } else {
        c.to_string()
    }
}

/// Renders `Σ c · body` with signs folded into the separators.
pub(crate) fn render_sum<'a>(
    terms: impl Iterator<Item = (&'a Q, String, bool)>,
    latex: bool,
) -> String {
    let mut out = String::new();
    let mul = if latex { " " } else { " * " };
    for (i, (c, body, is_scalar)) in terms.enumerate() {
        let neg = c.is_negative();
        let a = c.abs();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if is_scalar {
            out.push_str(&coeff_text(&a, latex));
        } else if a.is_one() {
            out.push_str(&body);
        } else {
            out.push_str(&coeff_text(&a, latex));
            out.push_str(mul);
            out.push_str(&body);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for LinComb {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = render_sum(self.terms.iter().map(|(m, c)| (c, m.to_string(), m.is_one())), false);
        write!(f, "{}", s)
    }
}

/// An element of the k-fold tensor power, stored on pure tensors of monomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorK {
    arity: usize,
    terms: BTreeMap<Vec<Monomial>, Q>,
}

impl TensorK {
    /// The zero tensor; arity 0 holds scalars.
    pub fn zero(arity: usize) -> TensorK {
        TensorK { arity, terms: BTreeMap::new() }
    }

    /// The unit `1 ⊗ ⋯ ⊗ 1`.
    pub fn unit(arity: usize) -> TensorK {
        let mut t = TensorK::zero(arity);
        t.add_term(vec![Monomial::one(); arity], Q::one());
        t
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Monomial>, &Q)> {
        self.terms.iter()
    }

    pub fn coeff(&self, slots: &[Monomial]) -> Q {
        self.terms.get(slots).cloned().unwrap_or_else(Q::zero)
    }

    pub fn add_term(&mut self, slots: Vec<Monomial>, c: Q) {
        assert_eq!(slots.len(), self.arity, "slot count does not match arity");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(slots) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Adds `c · x₁ ⊗ ⋯ ⊗ x_k`, expanding each factor.
    pub fn add_pure(&mut self, factors: &[LinComb], c: &Q) {
        assert_eq!(factors.len(), self.arity);
        let mut partial: Vec<(Vec<Monomial>, Q)> = vec![(Vec::new(), c.clone())];
        for f in factors {
            let mut next = Vec::with_capacity(partial.len() * f.len());
            for (slots, pc) in &partial {
                for (m, mc) in f.terms() {
                    let mut s = slots.clone();
                    s.push(m.clone());
                    next.push((s, pc * mc));
                }
            }
            partial = next;
        }
        for (slots, pc) in partial {
            self.add_term(slots, pc);
        }
    }

    pub fn pure(factors: &[LinComb]) -> TensorK {
        let mut t = TensorK::zero(factors.len());
        t.add_pure(factors, &Q::one());
        t
    }

    pub fn add_assign(&mut self, other: &TensorK) {
        assert_eq!(self.arity, other.arity);
        for (s, c) in &other.terms {
            self.add_term(s.clone(), c.clone());
        }
    }

    pub fn sub_assign(&mut self, other: &TensorK) {
        assert_eq!(self.arity, other.arity);
        for (s, c) in &other.terms {
            self.add_term(s.clone(), -c.clone());
        }
    }

    pub fn add_scaled(&mut self, other: &TensorK, k: &Q) {
        assert_eq!(self.arity, other.arity);
        if k.is_zero() {
            return;
        }
        for (s, c) in &other.terms {
            self.add_term(s.clone(), c * k);
        }
    }

    pub fn add(&self, other: &TensorK) -> TensorK {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn sub(&self, other: &TensorK) -> TensorK {
        let mut out = self.clone();
        out.sub_assign(other);
        out
    }

    pub fn scale(&self, k: &Q) -> TensorK {
        let mut out = TensorK::zero(self.arity);
        out.add_scaled(self, k);
        out
    }

    /// Slotwise product in the tensor product of algebras.
    pub fn mul(&self, other: &TensorK) -> TensorK {
        assert_eq!(self.arity, other.arity);
        let mut out = TensorK::zero(self.arity);
        for (s1, c1) in &self.terms {
            for (s2, c2) in &other.terms {
                let slots = s1.iter().zip(s2).map(|(a, b)| a.mul(b)).collect();
                out.add_term(slots, c1 * c2);
            }
        }
        out
    }

    /// The outer tensor product, of arity `self.arity + other.arity`.
    pub fn tensor(&self, other: &TensorK) -> TensorK {
        let mut out = TensorK::zero(self.arity + other.arity);
        for (s1, c1) in &self.terms {
            for (s2, c2) in &other.terms {
                let mut slots = s1.clone();
                slots.extend(s2.iter().cloned());
                out.add_term(slots, c1 * c2);
            }
        }
        out
    }

    /// Applies a linear map `A → A^{⊗r}` to slot `i`, producing arity `k − 1 + r`.
    pub fn map_slot(&self, i: usize, r: usize, f: &dyn Fn(&Monomial) -> TensorK) -> TensorK {
        assert!(i < self.arity);
        let mut out = TensorK::zero(self.arity - 1 + r);
        let mut cache: BTreeMap<&Monomial, TensorK> = BTreeMap::new();
        for (slots, c) in &self.terms {
            let img = cache.entry(&slots[i]).or_insert_with(|| f(&slots[i]));
            assert_eq!(img.arity, r);
            for (islots, ic) in &img.terms {
                let mut s: Vec<Monomial> = slots[..i].to_vec();
                s.extend(islots.iter().cloned());
                s.extend(slots[i + 1..].iter().cloned());
                out.add_term(s, c * ic);
            }
        }
        out
    }

    /// Applies a linear endomorphism to every slot.
    pub fn map_each(&self, f: &dyn Fn(&Monomial) -> LinComb) -> TensorK {
        let mut cache: BTreeMap<&Monomial, LinComb> = BTreeMap::new();
        let mut out = TensorK::zero(self.arity);
        for (slots, c) in &self.terms {
            let imgs: Vec<LinComb> =
                slots.iter().map(|m| cache.entry(m).or_insert_with(|| f(m)).clone()).collect();
            out.add_pure(&imgs, c);
        }
        out
    }

    /// Keeps the terms satisfying a predicate.
    pub fn filter(&self, keep: &dyn Fn(&[Monomial]) -> bool) -> TensorK {
        TensorK {
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .filter(|(s, _)| keep(s))
                .map(|(s, c)| (s.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn latex(&self) -> String {
        render_sum(
            self.terms.iter().map(|(s, c)| {
                let body = s.iter().map(|m| m.latex()).collect::<Vec<_>>().join(" \\otimes ");
                (c, body, false)
            }),
            true,
        )
    }
}

impl fmt::Display for TensorK {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = render_sum(
            self.terms.iter().map(|(s, c)| {
                let body = s.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(" (x) ");
                (c, body, false)
            }),
            false,
        );
        write!(f, "{}", s)
    }
}

/// `½(x⊗y − y⊗x)`, extended linearly; the result is antisymmetric and `x∧x = 0`.
pub fn wedge2(t: &TensorK) -> TensorK {
    assert_eq!(t.arity(), 2, "wedge2 needs arity 2");
    let half = Q::new(1.into(), 2.into());
    let mut out = TensorK::zero(2);
    for (s, c) in t.terms() {
        if s[0] == s[1] {
            continue;
        }
        out.add_term(vec![s[0].clone(), s[1].clone()], c * &half);
        out.add_term(vec![s[1].clone(), s[0].clone()], -(c * &half));
    }
    out
}

/// An element of `Λ²`, stored in the basis `x∧y` with `x < y`, where `x∧y = ½(x⊗y − y⊗x)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Wedge2 {
    terms: BTreeMap<(Monomial, Monomial), Q>,
}

impl Wedge2 {
    pub fn zero() -> Wedge2 {
        Wedge2::default()
    }

    /// Adds `c · x∧y`, reordering with a sign.
    pub fn add_wedge(&mut self, x: Monomial, y: Monomial, c: Q) {
        if c.is_zero() || x == y {
            return;
        }
        let (key, c) = if x < y { ((x, y), c) } else { ((y, x), -c) };
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Adds `c · x∧y` for linear combinations.
    pub fn add_wedge_lc(&mut self, x: &LinComb, y: &LinComb, c: &Q) {
        for (mx, cx) in x.terms() {
            for (my, cy) in y.terms() {
                self.add_wedge(mx.clone(), my.clone(), c * cx * cy);
            }
        }
    }

    /// The image of a 2-tensor under `x⊗y ↦ x∧y`.
    pub fn from_tensor(t: &TensorK) -> Wedge2 {
        assert_eq!(t.arity(), 2);
        let mut out = Wedge2::zero();
        for (s, c) in t.terms() {
            out.add_wedge(s[0].clone(), s[1].clone(), c.clone());
        }
        out
    }

    pub fn to_tensor(&self) -> TensorK {
        let mut t = TensorK::zero(2);
        let half = Q::new(1.into(), 2.into());
        for ((x, y), c) in &self.terms {
            t.add_term(vec![x.clone(), y.clone()], c * &half);
            t.add_term(vec![y.clone(), x.clone()], -(c * &half));
        }
        t
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Monomial, Monomial), &Q)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_assign(&mut self, other: &Wedge2) {
        for ((x, y), c) in &other.terms {
            self.add_wedge(x.clone(), y.clone(), c.clone());
        }
    }

    pub fn sub(&self, other: &Wedge2) -> Wedge2 {
        let mut out = self.clone();
        for ((x, y), c) in &other.terms {
            out.add_wedge(x.clone(), y.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, k: &Q) -> Wedge2 {
        let mut out = Wedge2::zero();
        for ((x, y), c) in &self.terms {
            out.add_wedge(x.clone(), y.clone(), c * k);
        }
        out
    }

    /// Applies a linear map to both factors.
    pub fn map_each(&self, f: &dyn Fn(&Monomial) -> LinComb) -> Wedge2 {
        let mut out = Wedge2::zero();
        for ((x, y), c) in &self.terms {
            out.add_wedge_lc(&f(x), &f(y), c);
        }
        out
    }

    pub fn latex(&self) -> String {
        render_sum(
            self.terms.iter().map(|((x, y), c)| (c, format!("{} \\wedge {}", x.latex(), y.latex()), false)),
            true,
        )
    }
}

impl fmt::Display for Wedge2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = render_sum(self.terms.iter().map(|((x, y), c)| (c, format!("{} ^ {}", x, y), false)), false);
        write!(f, "{}", s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dec::{q, qf};

    fn g(name: &str) -> LinComb {
        LinComb::from_gen(Generator::Log(LogAtom::Var(name.to_string())))
    }

    #[test]
    fn additive_inverse_prunes() {
        let x = g("x");
        assert!(lin_combine(&[(q(1), x.clone()), (q(-1), x)]).is_zero());
    }

    #[test]
    fn scaling_and_disjoint_merge() {
        let m = g("m");
        let half = m.scale(&qf(1, 2));
        assert_eq!(lin_combine(&[(q(2), half)]), m);
        let s = lin_combine(&[(q(1), g("m")), (q(1), g("n"))]);
        assert_eq!(s.len(), 2);
    }

    #[test]
    fn products() {
        let x = g("x");
        assert_eq!(mono_mul(&LinComb::one(), &x), x);
        let gg = mono_mul(&g("g"), &g("g"));
        assert_eq!(gg.to_string(), "[g]*[g]");
        let lhs = mono_mul(&g("g").add(&g("h")), &g("g"));
        let rhs = gg.add(&mono_mul(&g("g"), &g("h")));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn wedge_examples() {
        let gg = TensorK::pure(&[g("g"), g("g")]);
        assert!(wedge2(&gg).is_zero());
        let gh = TensorK::pure(&[g("g"), g("h")]);
        let w = wedge2(&gh);
        assert_eq!(w.len(), 2);
        assert_eq!(w.to_string(), "1/2 * [g] (x) [h] - 1/2 * [h] (x) [g]");
        let sym = gh.add(&TensorK::pure(&[g("h"), g("g")]));
        assert!(wedge2(&sym).is_zero());
        assert_eq!(Wedge2::from_tensor(&gh).to_tensor(), w);
    }

    #[test]
    fn rendering_signs() {
        let x = g("x").scale(&q(-5)).add(&LinComb::scalar(qf(1, 3)));
        assert_eq!(x.to_string(), "1/3 - 5 * [x]");
        assert_eq!(LinComb::zero().to_string(), "0");
    }
}
