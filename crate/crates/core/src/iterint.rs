//! The free Hopf algebra of iterated integrals: coproduct, relations, antipode,
//! the iterated map `Δ^[m]`, weight-one classes and the cobracket.

use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::coeff::{Generator, LinComb, Monomial, TensorK, Wedge2};
use crate::dec::{log_diff, q, Dec, Q};
use crate::error::{Error, Result};
use crate::word::IterWord;

/// The monomial of `I(a; letters; b)`, with the empty word read as 1.
pub fn word_mono(a: &Dec, letters: &[Dec], b: &Dec) -> Monomial {
    if letters.is_empty() {
        Monomial::one()
    } else {
        Monomial::gen(Generator::Word(IterWord::new(a.clone(), letters.to_vec(), b.clone())))
    }
}

pub fn word_lc(w: &IterWord) -> LinComb {
    LinComb::from_mono(word_mono(&w.a0, &w.letters, &w.a_end))
}

/// `Δ I(a₀; a₁…aₙ; aₙ₊₁)`: subsequence words on the left, products of gap words on the right.
pub fn coproduct_word(w: &IterWord) -> TensorK {
    let n = w.weight();
    assert!(n < 31, "word too long for subset enumeration");
    let decs = w.decorations();
    let mut out = TensorK::zero(2);
    for mask in 0u32..(1u32 << n) {
        let idx: Vec<usize> = (1..=n).filter(|&i| mask & (1 << (i - 1)) != 0).collect();
        let sub: Vec<Dec> = idx.iter().map(|&i| decs[i].clone()).collect();
        let left = word_mono(&w.a0, &sub, &w.a_end);
        let mut right = Monomial::one();
        let mut cuts = vec![0];
        cuts.extend(idx.iter().copied());
        cuts.push(n + 1);
        for p in cuts.windows(2) {
            let (i, j) = (p[0], p[1]);
            right = right.mul(&word_mono(&decs[i], &decs[i + 1..j], &decs[j]));
        }
        out.add_term(vec![left, right], Q::one());
    }
    out
}

/// `Δ` on a generator; weight-one log symbols are primitive.
pub fn coproduct_gen(g: &Generator) -> TensorK {
    match g {
        Generator::Word(w) => coproduct_word(w),
        Generator::Tree(t) => crate::tree::coproduct_tree(t),
        Generator::Log(_) | Generator::Zeta(_) => {
            let x = LinComb::from_gen(g.clone());
            let mut t = TensorK::pure(&[x.clone(), LinComb::one()]);
            t.add_pure(&[LinComb::one(), x], &Q::one());
            t
        }
    }
}

/// `Δ` on a monomial, as the product of the generator coproducts.
pub fn coproduct_mono(m: &Monomial) -> TensorK {
    let mut t = TensorK::unit(2);
    for g in m.expanded() {
        t = t.mul(&coproduct_gen(g));
    }
    t
}

/// `Δ`, extended multiplicatively and linearly.
pub fn coproduct(x: &LinComb) -> TensorK {
    let mut out = TensorK::zero(2);
    for (m, c) in x.terms() {
        out.add_scaled(&coproduct_mono(m), c);
    }
    out
}

/// `Δ'(x) = Δ(x) − x⊗1 − 1⊗x` on the augmentation ideal; scalars map to 0.
pub fn reduced_coproduct(x: &LinComb) -> TensorK {
    let mut aug = x.clone();
    aug.add_term(Monomial::one(), -x.scalar_part());
    let mut t = coproduct(&aug);
    t.sub_assign(&TensorK::pure(&[aug.clone(), LinComb::one()]));
    t.sub_assign(&TensorK::pure(&[LinComb::one(), aug]));
    t
}

/// Sum over all interleavings of the letters of two words with common endpoints.
pub fn shuffle_product(u: &IterWord, v: &IterWord) -> Result<LinComb> {
    if u.a0 != v.a0 || u.a_end != v.a_end {
        return Err(Error::EndpointMismatch(format!("{} and {}", u, v)));
    }
    let mut out = LinComb::zero();
    for s in shuffles(&u.letters, &v.letters) {
        out.add_term(word_mono(&u.a0, &s, &u.a_end), Q::one());
    }
    Ok(out)
}

/// All interleavings of two sequences, with multiplicity.
pub fn shuffles<T: Clone>(a: &[T], b: &[T]) -> Vec<Vec<T>> {
    if a.is_empty() {
        return vec![b.to_vec()];
    }
    if b.is_empty() {
        return vec![a.to_vec()];
    }
    let mut out = Vec::new();
    for mut s in shuffles(&a[1..], b) {
        s.insert(0, a[0].clone());
        out.push(s);
    }
    for mut s in shuffles(a, &b[1..]) {
        s.insert(0, b[0].clone());
        out.push(s);
    }
    out
}

/// `Σₖ I(s₀; s₁…sₖ; x) · I(x; sₖ₊₁…sₘ; sₘ₊₁)`.
pub fn path_compose(w: &IterWord, x: &Dec) -> LinComb {
    let n = w.weight();
    let mut out = LinComb::zero();
    for k in 0..=n {
        let l = word_mono(&w.a0, &w.letters[..k], x);
        let r = word_mono(x, &w.letters[k..], &w.a_end);
        out.add_term(l.mul(&r), Q::one());
    }
    out
}

/// Applies the unit relation and `I(a; s…; a) = 0`.
pub fn normalize(x: &LinComb) -> LinComb {
    x.map_gens(&|g| match g {
        Generator::Word(w) if w.letters.is_empty() => LinComb::one(),
        Generator::Word(w) if w.a0 == w.a_end => LinComb::zero(),
        other => LinComb::from_gen(other.clone()),
    })
}

/// `(−1)ᵐ I(aₘ₊₁; aₘ, …, a₁; a₀)`.
pub fn reverse(w: &IterWord) -> LinComb {
    let mut ls = w.letters.clone();
    ls.reverse();
    let sign = if w.weight().is_multiple_of(2) { q(1) } else { q(-1) };
    LinComb::from_mono(word_mono(&w.a_end, &ls, &w.a0)).scale(&sign)
}

/// Antipode for any coproduct on generators whose reduced part has single-generator left slots
/// or products thereof.
pub struct Antipode<'a> {
    delta: &'a dyn Fn(&Generator) -> TensorK,
    memo: HashMap<Generator, LinComb>,
    mono_memo: HashMap<Monomial, LinComb>,
}

impl<'a> Antipode<'a> {
    pub fn new(delta: &'a dyn Fn(&Generator) -> TensorK) -> Self {
        Antipode { delta, memo: HashMap::new(), mono_memo: HashMap::new() }
    }

    /// `S(g) = −g − Σ S(L)·R` over the reduced coproduct terms `L ⊗ R`.
    pub fn gen(&mut self, g: &Generator) -> LinComb {
        if let Some(v) = self.memo.get(g) {
            return v.clone();
        }
        let x = LinComb::from_gen(g.clone());
        let full = (self.delta)(g);
        let mut out = x.neg();
        for (slots, c) in full.terms() {
            let (l, r) = (&slots[0], &slots[1]);
            if l.is_one() || r.is_one() {
                continue;
            }
            let sl = self.mono(l);
            out.add_mul_mono(&sl, r, &-c);
        }
        self.memo.insert(g.clone(), out.clone());
        out
    }

    pub fn mono(&mut self, m: &Monomial) -> LinComb {
        if let Some(g) = m.single() {
            return self.gen(g);
        }
        if let Some(v) = self.mono_memo.get(m) {
            return v.clone();
        }
        let mut out = LinComb::one();
        for g in m.expanded() {
            out = out.mul(&self.gen(g));
        }
        self.mono_memo.insert(m.clone(), out.clone());
        out
    }

    pub fn apply(&mut self, x: &LinComb) -> LinComb {
        let mut out = LinComb::zero();
        for (m, c) in x.terms() {
            out.add_scaled(&self.mono(m), c);
        }
        out
    }
}

/// The antipode of the iterated-integral Hopf algebra.
pub fn antipode(x: &LinComb) -> LinComb {
    Antipode::new(&coproduct_gen).apply(x)
}

/// `μ ∘ (S ⊗ id)` applied to a 2-tensor.
pub fn mu_s_id(t: &TensorK, s: &mut Antipode) -> LinComb {
    let mut out = LinComb::zero();
    for (slots, c) in t.terms() {
        out.add_mul_mono(&s.mono(&slots[0]), &slots[1], c);
    }
    out
}

/// The class of a weight-one word in `F* ⊗ Q`, following the four-case table.
pub fn weight1_class(w: &IterWord) -> LinComb {
    assert_eq!(w.weight(), 1, "weight1_class needs a weight-one word");
    let (a, b, c) = (&w.a0, &w.letters[0], &w.a_end);
    match (a == b, b == c) {
        (false, false) => log_diff(c, b).sub(&log_diff(a, b)),
        (true, false) => log_diff(c, b),
        (false, true) => log_diff(a, b).neg(),
        (true, true) => LinComb::zero(),
    }
}

/// [`weight1_class`] on a linear combination of weight-one generators; logs pass through.
pub fn weight1_class_lc(x: &LinComb) -> LinComb {
    x.map_gens(&|g| match g {
        Generator::Word(w) if w.weight() == 1 => weight1_class(w),
        Generator::Log(_) => LinComb::from_gen(g.clone()),
        other => panic!("not a weight-one generator: {}", other),
    })
}

/// `Δ^[m]`: peel off one weight-one right factor at a time, then take weight-one classes.
pub fn delta_m(w: &IterWord) -> TensorK {
    let n = w.weight();
    assert!(n >= 1, "delta_m needs positive weight");
    let mut memo: HashMap<IterWord, TensorK> = HashMap::new();
    delta_m_rec(w, &mut memo)
}

fn delta_m_rec(w: &IterWord, memo: &mut HashMap<IterWord, TensorK>) -> TensorK {
    if let Some(t) = memo.get(w) {
        return t.clone();
    }
    let n = w.weight();
    let out = if n == 1 {
        TensorK::pure(&[weight1_class(w)])
    } else {
        let decs = w.decorations();
        let mut acc = TensorK::zero(n);
        for k in 1..=n {
            let mut rest = w.letters.clone();
            rest.remove(k - 1);
            let left = IterWord::new(w.a0.clone(), rest, w.a_end.clone());
            let right = IterWord::new(decs[k - 1].clone(), vec![decs[k].clone()], decs[k + 1].clone());
            let r = weight1_class(&right);
            if r.is_zero() {
                continue;
            }
            let l = delta_m_rec(&left, memo);
            acc.add_assign(&l.tensor(&TensorK::pure(&[r])));
        }
        acc
    };
    memo.insert(w.clone(), out.clone());
    out
}

/// The number of raw terms `Δ^[m]` expands into before any cancellation: `m!`.
pub fn delta_m_raw_count(m: usize) -> u64 {
    (1..=m as u64).product()
}

/// `δ = ∧ ∘ Δ'` followed by dropping decomposable slots.
pub fn cobracket(x: &LinComb) -> Wedge2 {
    let t = reduced_coproduct(x).filter(&|s| s[0].degree() == 1 && s[1].degree() == 1);
    Wedge2::from_tensor(&t)
}

/// The cobracket as an antisymmetric 2-tensor.
pub fn cobracket_tensor(x: &LinComb) -> TensorK {
    cobracket(x).to_tensor()
}

/// An element of `Λ³`, keyed by strictly increasing triples.
pub type Wedge3 = std::collections::BTreeMap<[Monomial; 3], Q>;

fn add_wedge3(out: &mut Wedge3, mut v: [Monomial; 3], c: Q) {
    if c.is_zero() || v[0] == v[1] || v[1] == v[2] || v[0] == v[2] {
        return;
    }
    let mut sign = 1;
    for i in 0..3 {
        for j in 0..2 - i {
            if v[j] > v[j + 1] {
                v.swap(j, j + 1);
                sign = -sign;
            }
        }
    }
    let e = out.entry(v).or_insert_with(Q::zero);
    *e += if sign > 0 { c } else { -c };
}

/// `Σ c (δu ∧ v − u ∧ δv)` for `δx = Σ c u∧v`; zero exactly when co-Jacobi holds at `x`.
pub fn co_jacobi_defect(x: &LinComb, delta: &dyn Fn(&LinComb) -> Wedge2) -> Wedge3 {
    let mut out = Wedge3::new();
    for ((u, v), c) in delta(x).terms() {
        for ((a, b), d) in delta(&LinComb::from_mono(u.clone())).terms() {
            add_wedge3(&mut out, [a.clone(), b.clone(), v.clone()], c * d);
        }
        for ((a, b), d) in delta(&LinComb::from_mono(v.clone())).terms() {
            add_wedge3(&mut out, [u.clone(), a.clone(), b.clone()], -(c * d));
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// The counit: the scalar part.
pub fn counit(x: &LinComb) -> Q {
    x.scalar_part()
}

/// `(ε ⊗ id)` and `(id ⊗ ε)` of a 2-tensor.
pub fn counit_slots(t: &TensorK) -> (LinComb, LinComb) {
    let mut left = LinComb::zero();
    let mut right = LinComb::zero();
    for (s, c) in t.terms() {
        if s[0].is_one() {
            left.add_term(s[1].clone(), c.clone());
        }
        if s[1].is_one() {
            right.add_term(s[0].clone(), c.clone());
        }
    }
    (left, right)
}

/// `(Δ ⊗ id)∘Δ` and `(id ⊗ Δ)∘Δ`.
pub fn coassociativity_sides(x: &LinComb) -> (TensorK, TensorK) {
    let d = coproduct(x);
    (d.map_slot(0, 2, &coproduct_mono), d.map_slot(1, 2, &coproduct_mono))
}
