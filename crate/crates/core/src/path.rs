//! The path algebra `P(S)` with products `∘`, `∗` and coproduct `δ`, and
//! degree-truncated automorphisms whose composition realises the coproduct of words.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;
use serde_json::{json, Value};

use crate::coeff::{Generator, LinComb, Monomial};
use crate::dec::{q, qf, Dec, Q};
use crate::error::{Error, Result};
use crate::iterint::coproduct_word;
use crate::word::IterWord;

/// A basis path `p_{s₀,…,sₙ}`; its degree is the number of interior letters.
pub type Path = Vec<Dec>;

pub fn degree(p: &Path) -> usize {
    p.len() - 2
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PathVec {
    terms: BTreeMap<Path, Q>,
}

impl PathVec {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(p: Path) -> Self {
        assert!(p.len() >= 2, "a path has at least two points");
        let mut v = PathVec::zero();
        v.add(p, Q::one());
        v
    }

    /// `e₀ = Σ p_{i,i}`.
    pub fn unit(alphabet: &[Dec]) -> Self {
        let mut v = PathVec::zero();
        for a in alphabet {
            v.add(vec![a.clone(), a.clone()], Q::one());
        }
        v
    }

    pub fn add(&mut self, p: Path, c: Q) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(p.clone()).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&p);
        }
    }

    pub fn add_scaled(&mut self, other: &PathVec, k: &Q) {
        for (p, c) in &other.terms {
            self.add(p.clone(), c * k);
        }
    }

    pub fn coeff(&self, p: &[Dec]) -> Q {
        self.terms.get(p).cloned().unwrap_or_else(Q::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Path, &Q)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn truncate(&self, d: usize) -> PathVec {
        PathVec { terms: self.terms.iter().filter(|(p, _)| degree(p) <= d).map(|(p, c)| (p.clone(), c.clone())).collect() }
    }

    fn bilinear(&self, other: &PathVec, f: &dyn Fn(&Path, &Path) -> Option<Path>) -> PathVec {
        let mut out = PathVec::zero();
        for (x, cx) in &self.terms {
            for (y, cy) in &other.terms {
                if let Some(z) = f(x, y) {
                    out.add(z, cx * cy);
                }
            }
        }
        out
    }
}

/// `p_{a,X,b} ∘ p_{b,Y,d} = p_{a,X,Y,d}`; zero when the endpoints differ.
pub fn circ_product(x: &PathVec, y: &PathVec) -> PathVec {
    x.bilinear(y, &|p, r| {
        if p.last() != r.first() {
            return None;
        }
        let mut z = p[..p.len() - 1].to_vec();
        z.extend_from_slice(&r[1..]);
        Some(z)
    })
}

/// `p_{X,b} ∗ p_{b,Y} = p_{X,b,Y}`; zero when the endpoints differ.
pub fn star_product(x: &PathVec, y: &PathVec) -> PathVec {
    x.bilinear(y, &|p, r| {
        if p.last() != r.first() {
            return None;
        }
        let mut z = p.clone();
        z.extend_from_slice(&r[1..]);
        Some(z)
    })
}

/// An element of `P(S) ⊗ P(S)`.
pub type PathTensor = BTreeMap<(Path, Path), Q>;

fn tensor_add(t: &mut PathTensor, k: (Path, Path), c: Q) {
    if c.is_zero() {
        return;
    }
    let e = t.entry(k.clone()).or_insert_with(Q::zero);
    *e += c;
    if e.is_zero() {
        t.remove(&k);
    }
}

/// `δ p_{a,x₁…xₙ,b} = Σ p_{a,x_I,b} ⊗ p_{a,x_J,b}` over ordered splittings `I ⊔ J`.
pub fn path_coproduct(x: &PathVec) -> PathTensor {
    let mut out = PathTensor::new();
    for (p, c) in x.terms() {
        let (a, b) = (&p[0], &p[p.len() - 1]);
        let inner = &p[1..p.len() - 1];
        let n = inner.len();
        for mask in 0u32..(1u32 << n) {
            let mut l = vec![a.clone()];
            let mut r = vec![a.clone()];
            for (k, s) in inner.iter().enumerate() {
                if mask & (1 << k) != 0 {
                    l.push(s.clone());
                } else {
                    r.push(s.clone());
                }
            }
            l.push(b.clone());
            r.push(b.clone());
            tensor_add(&mut out, (l, r), c.clone());
        }
    }
    out
}

/// `δ` applied to a tensor factor-wise, for coassociativity tests: `(δ ⊗ id)` and `(id ⊗ δ)`.
pub fn path_coproduct_sides(x: &PathVec) -> (BTreeMap<[Path; 3], Q>, BTreeMap<[Path; 3], Q>) {
    let d = path_coproduct(x);
    let mut left = BTreeMap::new();
    let mut right = BTreeMap::new();
    for ((u, v), c) in &d {
        for ((u1, u2), c1) in path_coproduct(&PathVec::basis(u.clone())) {
            *left.entry([u1, u2, v.clone()]).or_insert_with(Q::zero) += c * c1;
        }
        for ((v1, v2), c2) in path_coproduct(&PathVec::basis(v.clone())) {
            *right.entry([u.clone(), v1, v2]).or_insert_with(Q::zero) += c * c2;
        }
    }
    left.retain(|_, c: &mut Q| !c.is_zero());
    right.retain(|_, c: &mut Q| !c.is_zero());
    (left, right)
}

/// A unipotent automorphism of the `∗`-algebra, truncated at degree `D`:
/// `F(p_{a,b}) = p_{a,b} + Σ c[a,s₁…sₘ,b] p_{a,s₁…sₘ,b}` with `1 ≤ m ≤ D`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncAut {
    pub degree: usize,
    pub alphabet: Vec<Dec>,
    table: BTreeMap<Path, Q>,
}

/// Nonempty sequences over the alphabet of length at most `d`.
fn sequences(alphabet: &[Dec], d: usize) -> Vec<Vec<Dec>> {
    let mut out = Vec::new();
    let mut layer: Vec<Vec<Dec>> = vec![Vec::new()];
    for _ in 0..d {
        let mut next = Vec::new();
        for s in &layer {
            for a in alphabet {
                let mut t = s.clone();
                t.push(a.clone());
                next.push(t);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

fn small_rational<R: Rng>(rng: &mut R) -> Q {
    let n: i64 = rng.gen_range(-4..=4);
    let d: i64 = rng.gen_range(1..=3);
    qf(n, d)
}

/// A noncommutative truncated series `Σ ⟨g, w⟩ w` over words in the alphabet.
type NcSeries = BTreeMap<Vec<Dec>, Q>;

fn nc_mul(x: &NcSeries, y: &NcSeries, d: usize) -> NcSeries {
    let mut out = NcSeries::new();
    for (u, a) in x {
        for (v, b) in y {
            if u.len() + v.len() > d {
                continue;
            }
            let mut w = u.clone();
            w.extend(v.iter().cloned());
            *out.entry(w).or_insert_with(Q::zero) += a * b;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// `exp(λ x)` for a single letter.
fn nc_exp_letter(x: &Dec, lambda: &Q, d: usize) -> NcSeries {
    let mut out = NcSeries::new();
    let mut c = Q::one();
    for k in 0..=d {
        out.insert(vec![x.clone(); k], c.clone());
        c = &c * lambda / q(k as i64 + 1);
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// The inverse of a series with constant term 1, by `Σ (1 − g)^k`.
fn nc_inverse(g: &NcSeries, d: usize) -> NcSeries {
    let mut y = g.clone();
    y.remove(&Vec::new());
    for v in y.values_mut() {
        *v = -v.clone();
    }
    let mut out = NcSeries::new();
    out.insert(Vec::new(), Q::one());
    let mut pow = out.clone();
    for _ in 0..d {
        pow = nc_mul(&pow, &y, d);
        for (w, c) in &pow {
            *out.entry(w.clone()).or_insert_with(Q::zero) += c;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn random_grouplike<R: Rng>(alphabet: &[Dec], d: usize, rng: &mut R) -> NcSeries {
    let mut g = NcSeries::new();
    g.insert(Vec::new(), Q::one());
    for _ in 0..(2 * d + 2) {
        let x = &alphabet[rng.gen_range(0..alphabet.len())];
        g = nc_mul(&g, &nc_exp_letter(x, &small_rational(rng), d), d);
    }
    g
}

impl TruncAut {
    pub fn identity(alphabet: &[Dec], degree: usize) -> Self {
        TruncAut { degree, alphabet: alphabet.to_vec(), table: BTreeMap::new() }
    }

    fn check_guard(alphabet: &[Dec], degree: usize) -> Result<()> {
        if alphabet.len() > 4 || degree > 5 {
            return Err(Error::InstanceTooLarge(format!(
                "alphabet {} and degree {} exceed the limits 4 and 5",
                alphabet.len(),
                degree
            )));
        }
        Ok(())
    }

    /// Independent random small rationals for every table entry.
    pub fn random<R: Rng>(alphabet: &[Dec], degree: usize, rng: &mut R) -> Result<Self> {
        Self::check_guard(alphabet, degree)?;
        let mut f = TruncAut::identity(alphabet, degree);
        for a in alphabet {
            for b in alphabet {
                for s in sequences(alphabet, degree) {
                    let mut p = vec![a.clone()];
                    p.extend(s);
                    p.push(b.clone());
                    f.set(p, small_rational(rng));
                }
            }
        }
        Ok(f)
    }

    /// A random point satisfying every defining relation: group-like series `g_b` from a base
    /// point `o` give `F(p_{a,b}) ↔ g_a⁻¹ g_b`.
    pub fn random_gs<R: Rng>(alphabet: &[Dec], degree: usize, rng: &mut R) -> Result<Self> {
        Self::check_guard(alphabet, degree)?;
        let base = alphabet.iter().min().expect("nonempty alphabet").clone();
        let mut g: BTreeMap<Dec, NcSeries> = BTreeMap::new();
        for b in alphabet {
            let s = if *b == base {
                let mut one = NcSeries::new();
                one.insert(Vec::new(), Q::one());
                one
            } else {
                random_grouplike(alphabet, degree, rng)
            };
            g.insert(b.clone(), s);
        }
        let mut f = TruncAut::identity(alphabet, degree);
        for a in alphabet {
            let inv = nc_inverse(&g[a], degree);
            for b in alphabet {
                for (w, c) in nc_mul(&inv, &g[b], degree) {
                    if w.is_empty() {
                        continue;
                    }
                    let mut p = vec![a.clone()];
                    p.extend(w);
                    p.push(b.clone());
                    f.set(p, c);
                }
            }
        }
        Ok(f)
    }

    pub fn set(&mut self, p: Path, c: Q) {
        assert!(p.len() >= 3 && degree(&p) <= self.degree);
        if c.is_zero() {
            self.table.remove(&p);
        } else {
            self.table.insert(p, c);
        }
    }

    /// `c[a, s₁…sₘ, b]`, with the empty word read as 1.
    pub fn entry(&self, p: &[Dec]) -> Q {
        if p.len() == 2 {
            return Q::one();
        }
        self.table.get(p).cloned().unwrap_or_else(Q::zero)
    }

    pub fn table(&self) -> &BTreeMap<Path, Q> {
        &self.table
    }

    /// `F(p_{a,b})`.
    pub fn image_gen(&self, a: &Dec, b: &Dec) -> PathVec {
        let mut v = PathVec::basis(vec![a.clone(), b.clone()]);
        for (p, c) in self.table.range(vec![a.clone()]..) {
            if p[0] != *a {
                break;
            }
            if p[p.len() - 1] == *b {
                v.add(p.clone(), c.clone());
            }
        }
        v
    }

    /// `F(p_{s₀…sₙ}) = F(p_{s₀,s₁}) ∗ ⋯ ∗ F(p_{sₙ₋₁,sₙ})`, truncated at degree `D`.
    pub fn apply_path(&self, p: &Path) -> PathVec {
        let d = self.degree;
        let mut acc = self.image_gen(&p[0], &p[1]).truncate(d);
        for k in 1..p.len() - 1 {
            let img = self.image_gen(&p[k], &p[k + 1]);
            let mut next = PathVec::zero();
            for (x, cx) in acc.terms() {
                for (y, cy) in img.terms() {
                    if degree(x) + degree(y) < d {
                        let mut z = x.clone();
                        z.extend_from_slice(&y[1..]);
                        next.add(z, cx * cy);
                    }
                }
            }
            acc = next;
        }
        acc
    }

    pub fn apply(&self, x: &PathVec) -> PathVec {
        let mut out = PathVec::zero();
        for (p, c) in x.terms() {
            out.add_scaled(&self.apply_path(p), c);
        }
        out.truncate(self.degree)
    }

    /// The table entry of a word, `I(a; w; b) ↦ c[a, w, b]`.
    pub fn eval_word(&self, w: &IterWord) -> Q {
        let mut p = vec![w.a0.clone()];
        p.extend(w.letters.iter().cloned());
        p.push(w.a_end.clone());
        self.entry(&p)
    }

    /// Evaluates a polynomial in words at this point; other generators are rejected.
    pub fn eval(&self, x: &LinComb) -> Result<Q> {
        let mut total = Q::zero();
        for (m, c) in x.terms() {
            total += c * self.eval_mono(m)?;
        }
        Ok(total)
    }

    pub fn eval_mono(&self, m: &Monomial) -> Result<Q> {
        let mut v = Q::one();
        for g in m.expanded() {
            match g {
                Generator::Word(w) => {
                    if w.weight() > self.degree {
                        return Err(Error::TruncationExceeded(format!("{} exceeds degree {}", w, self.degree)));
                    }
                    v *= self.eval_word(w);
                }
                other => return Err(Error::InvalidArgument(format!("cannot evaluate {} on a path automorphism", other))),
            }
        }
        Ok(v)
    }

    pub fn to_json(&self) -> Value {
        let table: serde_json::Map<String, Value> = self
            .table
            .iter()
            .map(|(p, c)| (p.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(","), json!(c.to_string())))
            .collect();
        json!({
            "degree": self.degree,
            "alphabet": self.alphabet.iter().map(|d| d.to_string()).collect::<Vec<_>>(),
            "table": table,
        })
    }

    /// Reads the JSON produced by [`TruncAut::to_json`]; `parse_dec` maps letter strings back.
    pub fn from_json(v: &Value, parse_dec: &dyn Fn(&str) -> Option<Dec>) -> Result<Self> {
        let bad = |m: &str| Error::InvalidArgument(format!("malformed automorphism table: {}", m));
        let degree = v["degree"].as_u64().ok_or_else(|| bad("degree"))? as usize;
        let alphabet: Vec<Dec> = v["alphabet"]
            .as_array()
            .ok_or_else(|| bad("alphabet"))?
            .iter()
            .map(|s| s.as_str().and_then(parse_dec).ok_or_else(|| bad("letter")))
            .collect::<Result<_>>()?;
        let mut f = TruncAut::identity(&alphabet, degree);
        for (k, c) in v["table"].as_object().ok_or_else(|| bad("table"))? {
            let p: Path = k.split(',').map(|s| parse_dec(s.trim()).ok_or_else(|| bad("letter"))).collect::<Result<_>>()?;
            if p.len() < 3 || p.len() - 2 > degree {
                return Err(bad("path length"));
            }
            let c: Q = parse_q(c.as_str().ok_or_else(|| bad("coefficient"))?).ok_or_else(|| bad("coefficient"))?;
            f.set(p, c);
        }
        Ok(f)
    }
}

fn parse_q(s: &str) -> Option<Q> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Q::new(n.trim().parse().ok()?, d))
        }
        None => Some(Q::from_integer(s.parse().ok()?)),
    }
}

/// `x ↦ F(G(x))`: `G` is applied first.
pub fn compose_auts(f: &TruncAut, g: &TruncAut) -> Result<TruncAut> {
    if f.alphabet != g.alphabet || f.degree != g.degree {
        return Err(Error::InvalidArgument("automorphisms over different alphabets or degrees".into()));
    }
    let mut h = TruncAut::identity(&f.alphabet, f.degree);
    for a in &f.alphabet {
        for b in &f.alphabet {
            let img = f.apply(&g.image_gen(a, b));
            for (p, c) in img.terms() {
                if p.len() > 2 {
                    h.set(p.clone(), c.clone());
                }
            }
        }
    }
    Ok(h)
}

/// `⟨w, F∘G⟩ = Σ_{Δ(w)} ⟨L, G⟩ ⟨R, F⟩`, given the precomputed composite `h = F∘G`.
pub fn pairing_holds(w: &IterWord, f: &TruncAut, g: &TruncAut, h: &TruncAut) -> Result<bool> {
    if w.weight() > h.degree {
        return Err(Error::TruncationExceeded(format!("{} exceeds degree {}", w, h.degree)));
    }
    let mut rhs = Q::zero();
    for (slots, c) in coproduct_word(w).terms() {
        rhs += c * g.eval_mono(&slots[0])? * f.eval_mono(&slots[1])?;
    }
    Ok(h.eval_word(w) == rhs)
}

pub fn coproduct_pairing_check(w: &IterWord, f: &TruncAut, g: &TruncAut) -> Result<bool> {
    if w.weight() > f.degree {
        return Err(Error::TruncationExceeded(format!("{} exceeds degree {}", w, f.degree)));
    }
    let h = compose_auts(f, g)?;
    pairing_holds(w, f, g, &h)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GsReport {
    pub respects_circ: bool,
    pub commutes_with_delta: bool,
    pub preserves_projectors: bool,
}

/// Tests the `∘`-automorphism, `δ`-compatibility and projector conditions up to degree `D`.
pub fn check_gs_constraints(f: &TruncAut) -> GsReport {
    let d = f.degree;
    let al = &f.alphabet;
    let mut respects_circ = true;
    for a in al {
        for b in al {
            for c in al {
                let lhs = f.image_gen(a, c);
                let rhs = circ_product(&f.image_gen(a, b), &f.image_gen(b, c)).truncate(d);
                if lhs != rhs {
                    respects_circ = false;
                }
            }
        }
    }
    let mut commutes_with_delta = true;
    for a in al {
        for b in al {
            let img = f.image_gen(a, b);
            let lhs = path_coproduct(&img);
            let mut rhs = PathTensor::new();
            for (x, cx) in img.terms() {
                for (y, cy) in img.terms() {
                    if degree(x) + degree(y) <= d {
                        tensor_add(&mut rhs, (x.clone(), y.clone()), cx * cy);
                    }
                }
            }
            if lhs != rhs {
                commutes_with_delta = false;
            }
        }
    }
    let mut preserves_projectors = al.iter().all(|a| f.image_gen(a, a) == PathVec::basis(vec![a.clone(), a.clone()]));
    let endpoints: BTreeSet<(Dec, Dec)> = f.table.keys().map(|p| (p[0].clone(), p[p.len() - 1].clone())).collect();
    for (a, b) in endpoints {
        if !al.contains(&a) || !al.contains(&b) {
            preserves_projectors = false;
        }
    }
    GsReport { respects_circ, commutes_with_delta, preserves_projectors }
}
