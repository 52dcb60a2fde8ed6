//! Membership in the ideal `J` generated by the unit, shuffle, path-composition and
//! loop relations, by an exact normal form and by brute-force linear algebra.
//!
//! The normal form rewrites every word through a base point of the alphabet into
//! polynomials in the Lyndon words of the shuffle algebras `I(base; ·; b)`.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_traits::{One, Zero};

use crate::coeff::{Generator, LinComb, Monomial, TensorK};
use crate::dec::{q, Dec, Q};
use crate::error::{Error, Result};
use crate::iterint::{path_compose, shuffles, word_mono};
use crate::linalg::{integer_row, Echelon};
use crate::word::IterWord;

/// Size limits for [`relation_ideal_member_linalg`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Guard {
    pub max_alphabet: usize,
    pub max_weight: usize,
}

impl Default for Guard {
    fn default() -> Self {
        Guard { max_alphabet: 3, max_weight: 4 }
    }
}

pub fn is_lyndon<T: Ord>(w: &[T]) -> bool {
    !w.is_empty() && (1..w.len()).all(|k| w < &w[k..])
}

/// Duval's factorisation into a nonincreasing sequence of Lyndon words.
pub fn lyndon_factorization<T: Ord + Clone>(w: &[T]) -> Vec<Vec<T>> {
    let n = w.len();
    let mut out = Vec::new();
    let mut i = 0;
    while i < n {
        let (mut j, mut k) = (i + 1, i);
        while j < n && w[k] <= w[j] {
            k = if w[k] < w[j] { i } else { k + 1 };
            j += 1;
        }
        while i <= k {
            out.push(w[i..i + j - k].to_vec());
            i += j - k;
        }
    }
    out
}

/// A polynomial in Lyndon words: sorted multisets of Lyndon words with coefficients.
type LyndonPoly = BTreeMap<Vec<Vec<Dec>>, Q>;

fn poly_add(acc: &mut LyndonPoly, p: &LyndonPoly, c: &Q) {
    for (k, v) in p {
        let e = acc.entry(k.clone()).or_insert_with(Q::zero);
        *e += v * c;
        if e.is_zero() {
            acc.remove(k);
        }
    }
}

/// Normal forms in the shuffle algebra on the Lyndon basis.
#[derive(Default)]
pub struct ShuffleNf {
    memo: HashMap<Vec<Dec>, LyndonPoly>,
}

impl ShuffleNf {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn nf(&mut self, w: &[Dec]) -> LyndonPoly {
        if let Some(p) = self.memo.get(w) {
            return p.clone();
        }
        let mut out = LyndonPoly::new();
        if w.is_empty() {
            out.insert(Vec::new(), Q::one());
        } else if is_lyndon(w) {
            out.insert(vec![w.to_vec()], Q::one());
        } else {
            let factors = lyndon_factorization(w);
            let mut prod: BTreeMap<Vec<Dec>, Q> = BTreeMap::new();
            prod.insert(Vec::new(), Q::one());
            for f in &factors {
                let mut next: BTreeMap<Vec<Dec>, Q> = BTreeMap::new();
                for (u, c) in &prod {
                    for s in shuffles(u, f) {
                        *next.entry(s).or_insert_with(Q::zero) += c;
                    }
                }
                prod = next;
            }
            let lead = prod.remove(w).expect("leading word of the shuffle of the factors");
            let mut key = factors.clone();
            key.sort();
            out.insert(key, Q::one());
            for (u, c) in prod {
                if !c.is_zero() {
                    debug_assert!(u.as_slice() < w);
                    let sub = self.nf(&u);
                    poly_add(&mut out, &sub, &-c);
                }
            }
            let inv = Q::one() / lead;
            for v in out.values_mut() {
                *v *= &inv;
            }
        }
        self.memo.insert(w.to_vec(), out.clone());
        out
    }
}

/// The algebra map `Ĩ → Q[Lyndon coordinates]` whose kernel is `J`.
pub struct IdealNf {
    base: Dec,
    shuffle: ShuffleNf,
    memo: HashMap<IterWord, LinComb>,
}

impl IdealNf {
    pub fn new(base: Dec) -> Self {
        IdealNf { base, shuffle: ShuffleNf::new(), memo: HashMap::new() }
    }

    /// Uses the least decoration occurring in `x` and `extra` as base point.
    pub fn for_element(x: &LinComb, extra: &[Dec]) -> Self {
        let mut letters: BTreeSet<Dec> = extra.iter().cloned().collect();
        collect_letters(x, &mut letters);
        IdealNf::new(letters.into_iter().next().unwrap_or_else(Dec::zero))
    }

    pub fn base(&self) -> &Dec {
        &self.base
    }

    fn split(&mut self, a: &Dec, ls: &[Dec], b: &Dec) -> LinComb {
        self.word(&IterWord::new(a.clone(), ls.to_vec(), b.clone()))
    }

    pub fn word(&mut self, w: &IterWord) -> LinComb {
        if w.letters.is_empty() {
            return LinComb::one();
        }
        if w.a0 == w.a_end {
            return LinComb::zero();
        }
        if let Some(v) = self.memo.get(w) {
            return v.clone();
        }
        let base = self.base.clone();
        let n = w.weight();
        let out = if w.a0 == base {
            let p = self.shuffle.nf(&w.letters);
            let mut out = LinComb::zero();
            for (ls, c) in p {
                let mut m = Monomial::one();
                for l in ls {
                    m = m.mul(&word_mono(&base, &l, &w.a_end));
                }
                out.add_term(m, c);
            }
            out
        } else if w.a_end == base {
            let mut out = LinComb::zero();
            for k in 0..n {
                let l = self.split(&w.a0, &w.letters[..k], &base);
                let r = self.split(&base, &w.letters[k..], &w.a0);
                out.sub_assign(&l.mul(&r));
            }
            out
        } else {
            let mut out = LinComb::zero();
            for k in 0..=n {
                let l = self.split(&w.a0, &w.letters[..k], &base);
                let r = self.split(&base, &w.letters[k..], &w.a_end);
                out.add_assign(&l.mul(&r));
            }
            out
        };
        self.memo.insert(w.clone(), out.clone());
        out
    }

    pub fn apply(&mut self, x: &LinComb) -> LinComb {
        let mut out = LinComb::zero();
        for (m, c) in x.terms() {
            let mut prod = LinComb::scalar(c.clone());
            for g in m.expanded() {
                let img = match g {
                    Generator::Word(w) => self.word(w),
                    other => LinComb::from_gen(other.clone()),
                };
                prod = prod.mul(&img);
                if prod.is_zero() {
                    break;
                }
            }
            out.add_assign(&prod);
        }
        out
    }

    /// `(N ⊗ ⋯ ⊗ N)(t)`, which vanishes exactly on `Σ A⊗⋯⊗J⊗⋯⊗A`.
    pub fn apply_tensor(&mut self, t: &TensorK) -> TensorK {
        let mut cache: HashMap<Monomial, LinComb> = HashMap::new();
        let mut out = TensorK::zero(t.arity());
        for (slots, c) in t.terms() {
            let imgs: Vec<LinComb> = slots
                .iter()
                .map(|m| {
                    if let Some(v) = cache.get(m) {
                        return v.clone();
                    }
                    let v = self.apply(&LinComb::from_mono(m.clone()));
                    cache.insert(m.clone(), v.clone());
                    v
                })
                .collect();
            out.add_pure(&imgs, c);
        }
        out
    }
}

pub fn collect_letters(x: &LinComb, out: &mut BTreeSet<Dec>) {
    for (m, _) in x.terms() {
        for (g, _) in m.factors() {
            if let Generator::Word(w) = g {
                out.extend(w.decorations());
            }
        }
    }
}

fn max_word_weight(x: &LinComb) -> usize {
    x.terms().map(|(m, _)| m.weight()).max().unwrap_or(0)
}

fn check_scope(x: &LinComb, alphabet: &[Dec], max_weight: usize) -> Result<()> {
    let mut letters = BTreeSet::new();
    collect_letters(x, &mut letters);
    if let Some(d) = letters.iter().find(|d| !alphabet.contains(d)) {
        return Err(Error::InvalidArgument(format!("decoration {} is not in the alphabet", d)));
    }
    if max_word_weight(x) > max_weight {
        return Err(Error::InvalidArgument(format!("element has weight above {}", max_weight)));
    }
    for (m, _) in x.terms() {
        for (g, _) in m.factors() {
            if !matches!(g, Generator::Word(_)) {
                return Err(Error::InvalidArgument(format!("{} is not an iterated-integral word", g)));
            }
        }
    }
    Ok(())
}

/// Whether `x` lies in `J`, decided by the normal form.
pub fn relation_ideal_member(x: &LinComb, alphabet: &[Dec], max_weight: usize) -> Result<bool> {
    check_scope(x, alphabet, max_weight)?;
    Ok(IdealNf::for_element(x, alphabet).apply(x).is_zero())
}

/// Whether a tensor lies in `Σ A⊗⋯⊗J⊗⋯⊗A`.
pub fn tensor_in_ideal(t: &TensorK) -> bool {
    let mut letters = BTreeSet::new();
    for (slots, _) in t.terms() {
        for m in slots {
            collect_letters(&LinComb::from_mono(m.clone()), &mut letters);
        }
    }
    let base = letters.into_iter().next().unwrap_or_else(Dec::zero);
    IdealNf::new(base).apply_tensor(t).is_zero()
}

/// All words `I(a; w; b)` over the alphabet with `1 ≤ |w| ≤ n` grouped by weight.
fn words_by_weight(alphabet: &[Dec], n: usize) -> Vec<Vec<IterWord>> {
    let mut out = vec![Vec::new(); n + 1];
    let mut seqs: Vec<Vec<Dec>> = vec![Vec::new()];
    for k in 1..=n {
        let mut next = Vec::new();
        for s in &seqs {
            for d in alphabet {
                let mut t = s.clone();
                t.push(d.clone());
                next.push(t);
            }
        }
        seqs = next;
        for a in alphabet {
            for b in alphabet {
                for s in &seqs {
                    out[k].push(IterWord::new(a.clone(), s.clone(), b.clone()));
                }
            }
        }
    }
    out
}

/// All monomials of exact weight `n` in the given words.
fn monomials_of_weight(words: &[Vec<IterWord>], n: usize) -> Vec<Monomial> {
    fn go(words: &[Vec<IterWord>], rem: usize, maxw: usize, min_idx: usize, cur: Monomial, out: &mut Vec<Monomial>) {
        if rem == 0 {
            out.push(cur);
            return;
        }
        for w in (1..=rem.min(maxw)).rev() {
            let start = if w == maxw { min_idx } else { 0 };
            for (i, word) in words[w].iter().enumerate().skip(start) {
                let m = cur.mul(&Monomial::gen(Generator::Word(word.clone())));
                go(words, rem - w, w, i, m, out);
            }
        }
    }
    let mut out = Vec::new();
    go(words, n, n, 0, Monomial::one(), &mut out);
    out
}

/// The defining relations of `J` of each weight up to `n`.
fn relations(alphabet: &[Dec], words: &[Vec<IterWord>], n: usize) -> Vec<Vec<LinComb>> {
    let mut out = vec![Vec::new(); n + 1];
    for (k, ws) in words.iter().enumerate().skip(1) {
        for w in ws {
            let x = LinComb::from_gen(Generator::Word(w.clone()));
            if w.a0 == w.a_end {
                out[k].push(x.clone());
            }
            for p in alphabet {
                out[k].push(x.sub(&path_compose(w, p)));
            }
        }
    }
    for a in alphabet {
        for b in alphabet {
            for k1 in 1..n {
                for k2 in 1..=n - k1 {
                    for u in words[k1].iter().filter(|w| &w.a0 == a && &w.a_end == b) {
                        for v in words[k2].iter().filter(|w| &w.a0 == a && &w.a_end == b) {
                            let lhs = LinComb::from_mono(word_mono(a, &u.letters, b).mul(&word_mono(a, &v.letters, b)));
                            let mut rhs = LinComb::zero();
                            for s in shuffles(&u.letters, &v.letters) {
                                rhs.add_term(word_mono(a, &s, b), q(1));
                            }
                            out[k1 + k2].push(lhs.sub(&rhs));
                        }
                    }
                }
            }
        }
    }
    out
}

/// Whether `x` lies in `J`, by exact elimination over the spanning set
/// `{relation · monomial}` of each homogeneous component.
pub fn relation_ideal_member_linalg(x: &LinComb, alphabet: &[Dec], max_weight: usize, guard: Guard) -> Result<bool> {
    if alphabet.len() > guard.max_alphabet || max_weight > guard.max_weight {
        return Err(Error::InstanceTooLarge(format!(
            "alphabet {} and weight {} exceed the limits {} and {}",
            alphabet.len(),
            max_weight,
            guard.max_alphabet,
            guard.max_weight
        )));
    }
    check_scope(x, alphabet, max_weight)?;
    if x.is_zero() {
        return Ok(true);
    }
    if !x.scalar_part().is_zero() {
        return Ok(false);
    }
    let words = words_by_weight(alphabet, max_weight);
    let rels = relations(alphabet, &words, max_weight);
    for n in 1..=max_weight {
        let part = x.part(n);
        if part.is_zero() {
            continue;
        }
        let mut cols: HashMap<Monomial, usize> = HashMap::new();
        let mut col_of = |m: &Monomial| {
            let k = cols.len();
            *cols.entry(m.clone()).or_insert(k)
        };
        let to_row = |v: &LinComb, col_of: &mut dyn FnMut(&Monomial) -> usize| {
            let r: Vec<(usize, Q)> = v.terms().map(|(m, c)| (col_of(m), c.clone())).collect();
            integer_row(&r)
        };
        let mut ech = Echelon::new();
        for k in 1..=n {
            let monos = monomials_of_weight(&words, n - k);
            for r in &rels[k] {
                for m in &monos {
                    let v = r.mul(&LinComb::from_mono(m.clone()));
                    if !v.is_zero() {
                        ech.insert(&to_row(&v, &mut col_of));
                    }
                }
            }
        }
        if !ech.contains(&to_row(&part, &mut col_of)) {
            return Ok(false);
        }
    }
    Ok(true)
}
