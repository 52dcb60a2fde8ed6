//! Multiple polylogarithms and multiple zetas as iterated-integral words, the
//! generating-series coproduct of `Li`, depth, symbols, the depth-two cobracket and
//! the dihedral kernel of double zetas.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::coeff::{Generator, LinComb, Monomial, TensorK, Wedge2};
use crate::dec::{expand_atom, log_of, q, Dec, Q};
use crate::error::{Error, Result};
use crate::iterint::{coproduct, delta_m, normalize, shuffles, word_mono};
use crate::linalg::{integer_row, null_space, Echelon};
use crate::series::{
    form_powers, form_sub, poly_mul, rescale_lc, series_coproduct_special, var,
    Exps, LinForm, TensorSeries,
};
use crate::word::IterWord;

/// How depth-one zetas are reduced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ZetaMode {
    /// `ζ(2k) = 0` and `ζ(1) = 0`.
    Motivic,
    /// `ζ(2k) = 0` with `ζ(1)` kept as a formal basis element.
    FormalZeta1,
}

/// `Li_{n₁…n_m}(x₁…x_m)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LiSym {
    pub ns: Vec<u32>,
    pub xs: Vec<Dec>,
}

impl LiSym {
    pub fn new(ns: Vec<u32>, xs: Vec<Dec>) -> Result<LiSym> {
        if ns.is_empty() || ns.len() != xs.len() || ns.contains(&0) {
            return Err(Error::InvalidArgument(format!("bad Li indices {:?} for {} arguments", ns, xs.len())));
        }
        if xs.iter().any(|x| x.is_zero()) {
            return Err(Error::ZeroArgument(format!("Li{:?} with a zero argument", ns)));
        }
        Ok(LiSym { ns, xs })
    }

    pub fn weight(&self) -> usize {
        self.ns.iter().map(|&n| n as usize).sum()
    }

    pub fn depth(&self) -> usize {
        self.ns.len()
    }

    /// `(−1)^m` times the word, as an element of the word algebra.
    pub fn to_lc(&self) -> Result<LinComb> {
        let (sign, w) = li_to_word(&self.ns, &self.xs)?;
        Ok(LinComb::from_gen(Generator::Word(w)).scale(&q(sign)))
    }
}

impl fmt::Display for LiSym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ns: Vec<String> = self.ns.iter().map(|n| n.to_string()).collect();
        let xs: Vec<String> = self.xs.iter().map(|x| x.to_string()).collect();
        write!(f, "Li[{}]({})", ns.join(","), xs.join(", "))
    }
}

/// `ζ(n₁…n_m)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ZetaSym {
    pub ns: Vec<u32>,
}

impl ZetaSym {
    pub fn weight(&self) -> usize {
        self.ns.iter().map(|&n| n as usize).sum()
    }

    pub fn depth(&self) -> usize {
        self.ns.len()
    }

    /// `I(0; 1, 0^{n₁−1}, …, 1, 0^{n_m−1}; 1)`, with sign +1.
    pub fn to_word(&self) -> IterWord {
        IterWord::new(Dec::zero(), spread(&self.ns, &vec![Dec::one(); self.ns.len()]), Dec::one())
    }
}

impl fmt::Display for ZetaSym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", Generator::Zeta(self.ns.clone()))
    }
}

/// `a₁, 0^{n₁−1}, a₂, 0^{n₂−1}, …`.
fn spread(ns: &[u32], a: &[Dec]) -> Vec<Dec> {
    let mut out = Vec::new();
    for (n, x) in ns.iter().zip(a) {
        out.push(x.clone());
        out.extend(std::iter::repeat_n(Dec::zero(), *n as usize - 1));
    }
    out
}

/// `Li_{n}(x) = (−1)^m I(0; a₁, 0^{n₁−1}, …, a_m, 0^{n_m−1}; 1)` with `a_k = (x_k⋯x_m)^{−1}`.
pub fn li_to_word(ns: &[u32], xs: &[Dec]) -> Result<(i64, IterWord)> {
    let li = LiSym::new(ns.to_vec(), xs.to_vec())?;
    let m = li.depth();
    let mut a = vec![Dec::one(); m];
    let mut prod = Dec::one();
    for k in (0..m).rev() {
        prod = prod
            .mul(&li.xs[k])
            .ok_or_else(|| Error::InvalidArgument(format!("cannot multiply {} and {}", prod, li.xs[k])))?;
        a[k] = prod.inv().ok_or_else(|| Error::ZeroArgument(format!("{} is not invertible", prod)))?;
    }
    let sign = if m % 2 == 0 { 1 } else { -1 };
    Ok((sign, IterWord::new(Dec::zero(), spread(ns, &a), Dec::one())))
}

/// Inverse of [`li_to_word`] on words `I(0; a₁, 0…, a_m, 0…; 1)` with `a₁ ≠ 0`.
pub fn word_to_li(w: &IterWord) -> Result<(i64, LiSym)> {
    let bad = || Error::NotConvertible(format!("{} is not a polylogarithm word", w));
    if !w.a0.is_zero() || !w.a_end.is_one() || w.letters.first().map(|a| a.is_zero()).unwrap_or(true) {
        return Err(bad());
    }
    let mut a: Vec<Dec> = Vec::new();
    let mut ns: Vec<u32> = Vec::new();
    for l in &w.letters {
        if l.is_zero() {
            *ns.last_mut().expect("first letter is nonzero") += 1;
        } else {
            a.push(l.clone());
            ns.push(1);
        }
    }
    let m = a.len();
    let mut xs = Vec::with_capacity(m);
    for k in 0..m {
        let next = if k + 1 < m { a[k + 1].clone() } else { Dec::one() };
        xs.push(next.div(&a[k]).ok_or_else(bad)?);
    }
    let sign = if m.is_multiple_of(2) { 1 } else { -1 };
    Ok((sign, LiSym::new(ns, xs)?))
}

/// Largest monomial depth in a linear combination.
pub fn depth(x: &LinComb) -> usize {
    x.terms().map(|(m, _)| m.depth()).max().unwrap_or(0)
}

/// Whether every term `L⊗R` satisfies `depth L + depth R ≤ bound`.
pub fn depth_filtration_holds(t: &TensorK, bound: usize) -> bool {
    t.terms().all(|(s, _)| s.iter().map(|m| m.depth()).sum::<usize>() <= bound)
}

/// Checks that `Δ(w)` after the unit and loop relations respects the depth filtration.
pub fn depth_filtration_check(w: &IterWord) -> bool {
    let t = coproduct(&LinComb::from_gen(Generator::Word(w.clone()))).map_each(&|m| normalize(&LinComb::from_mono(m.clone())));
    depth_filtration_holds(&t, w.depth())
}

/// `Δ I(0; a₁…a_m; 1 | 0; t₁; …; t_m)` from the special segments, with every slot rewritten
/// into log powers and words `I(0; b, …; 1)` without leading zeros. `decs` lists `a₁…a_m`.
pub fn polylog_coproduct(decs: &[Dec], d: usize) -> Result<TensorSeries> {
    if decs.iter().any(|a| a.is_zero()) {
        return Err(Error::ZeroArgument("polylogarithm decorations must be nonzero".into()));
    }
    let mut all = decs.to_vec();
    all.push(Dec::one());
    let s = series_coproduct_special(&all, d).set_zero(0);
    let mut out = TensorSeries::zero(s.nvars(), d);
    for (e, t) in s.terms() {
        let mut r = TensorK::zero(2);
        for (slots, c) in t.terms() {
            let l = rescale_lc(&LinComb::from_mono(slots[0].clone()))?;
            let rr = rescale_lc(&LinComb::from_mono(slots[1].clone()))?;
            r.add_pure(&[l, rr], c);
        }
        out.add_coeff(e.clone(), &r);
    }
    Ok(out)
}

/// `Δ Li(x₁…x_m | 0: t₁: …: t_m)`: the coefficient of `t₁^{n₁−1}⋯t_m^{n_m−1}` is `Δ Li_{n}(x)`.
pub fn li_coproduct(xs: &[Dec], d: usize) -> Result<TensorSeries> {
    let ns = vec![1; xs.len()];
    let (sign, w) = li_to_word(&ns, xs)?;
    let a: Vec<Dec> = w.letters.clone();
    Ok(polylog_coproduct(&a, d)?.scale(&q(sign)))
}

/// `Δ Li_{n}(x)` read off [`li_coproduct`].
pub fn li_coproduct_at(ns: &[u32], xs: &[Dec]) -> Result<TensorK> {
    let li = LiSym::new(ns.to_vec(), xs.to_vec())?;
    let d = li.weight() - li.depth();
    let mut e: Exps = vec![0];
    e.extend(ns.iter().map(|n| n - 1));
    Ok(li_coproduct(xs, d)?.coeff(&e))
}

/// `Δ' = Δ − x⊗1 − 1⊗x` for a tensor already known to be `Δ x`.
pub fn reduce_coproduct(t: &TensorK, x: &LinComb) -> TensorK {
    let mut out = t.clone();
    out.sub_assign(&TensorK::pure(&[x.clone(), LinComb::one()]));
    out.sub_assign(&TensorK::pure(&[LinComb::one(), x.clone()]));
    out
}

/// Symbols of a linear combination, split by weight: each word goes to `Δ^[w]` with
/// log atoms expanded, products to shuffles.
pub fn symbol(x: &LinComb) -> Result<BTreeMap<usize, TensorK>> {
    let mut out: BTreeMap<usize, TensorK> = BTreeMap::new();
    for (m, c) in x.terms() {
        let s = symbol_mono(m)?;
        let w = m.weight();
        out.entry(w).or_insert_with(|| TensorK::zero(w)).add_scaled(&s, c);
    }
    out.retain(|_, t| !t.is_zero());
    Ok(out)
}

fn symbol_gen(g: &Generator) -> Result<TensorK> {
    let expand = |m: &Monomial| match m.single() {
        Some(Generator::Log(a)) => expand_atom(a),
        _ => LinComb::from_mono(m.clone()),
    };
    match g {
        Generator::Log(a) => Ok(TensorK::pure(&[expand_atom(a)])),
        Generator::Word(w) => Ok(delta_m(w).map_each(&expand)),
        Generator::Zeta(ns) => Ok(delta_m(&ZetaSym { ns: ns.clone() }.to_word()).map_each(&expand)),
        Generator::Tree(t) => Err(Error::InvalidArgument(format!("no symbol for tree {}", t))),
    }
}

fn symbol_mono(m: &Monomial) -> Result<TensorK> {
    let mut acc = TensorK::unit(0);
    for g in m.expanded() {
        acc = shuffle_tensors(&acc, &symbol_gen(g)?);
    }
    Ok(acc)
}

fn shuffle_tensors(a: &TensorK, b: &TensorK) -> TensorK {
    let (p, r) = (a.arity(), b.arity());
    let mut out = TensorK::zero(p + r);
    let tags: Vec<bool> = vec![false; p];
    let others: Vec<bool> = vec![true; r];
    let patterns = shuffles(&tags, &others);
    for (sa, ca) in a.terms() {
        for (sb, cb) in b.terms() {
            for pat in &patterns {
                let (mut i, mut j) = (0, 0);
                let slots: Vec<Monomial> = pat
                    .iter()
                    .map(|&from_b| {
                        if from_b {
                            j += 1;
                            sb[j - 1].clone()
                        } else {
                            i += 1;
                            sa[i - 1].clone()
                        }
                    })
                    .collect();
                out.add_term(slots, ca * cb);
            }
        }
    }
    out
}

/// Slotwise symbol of a 2-tensor, keyed by the weights of the two slots.
pub fn symbol2(t: &TensorK) -> Result<BTreeMap<(usize, usize), TensorK>> {
    let mut out: BTreeMap<(usize, usize), TensorK> = BTreeMap::new();
    for (slots, c) in t.terms() {
        let l = symbol_mono(&slots[0])?;
        let r = symbol_mono(&slots[1])?;
        let key = (slots[0].weight(), slots[1].weight());
        out.entry(key).or_insert_with(|| TensorK::zero(key.0 + key.1)).add_scaled(&l.tensor(&r), c);
    }
    out.retain(|_, t| !t.is_zero());
    Ok(out)
}

/// `I(0; a, 0^{p−1}; b)`, or 0 for `p = 0`.
pub fn i1(p: u32, a: &Dec, b: &Dec) -> LinComb {
    if p == 0 {
        return LinComb::zero();
    }
    LinComb::from_mono(word_mono(&Dec::zero(), &spread(&[p], std::slice::from_ref(a)), b))
}

/// `I(0; a, 0^{p−1}, b, 0^{r−1}; c)`, or 0 if an index vanishes.
pub fn i2(p: u32, r: u32, a: &Dec, b: &Dec, c: &Dec) -> LinComb {
    if p == 0 || r == 0 {
        return LinComb::zero();
    }
    LinComb::from_mono(word_mono(&Dec::zero(), &spread(&[p, r], &[a.clone(), b.clone()]), c))
}

/// Replaces words `I(0; 1, 0…, 1, 0…; 1)` by zeta generators and applies the reduction
/// of depth-one zetas.
pub fn zeta_reduce(x: &LinComb, mode: ZetaMode) -> LinComb {
    x.map_gens(&|g| {
        let g = match g {
            Generator::Word(w) => match as_zeta(w) {
                Some(ns) => Generator::Zeta(ns),
                None => return LinComb::from_gen(g.clone()),
            },
            other => other.clone(),
        };
        match &g {
            Generator::Zeta(ns) if ns.len() == 1 && ns[0] % 2 == 0 => LinComb::zero(),
            Generator::Zeta(ns) if ns == &[1] && mode == ZetaMode::Motivic => LinComb::zero(),
            _ => LinComb::from_gen(g),
        }
    })
}

fn as_zeta(w: &IterWord) -> Option<Vec<u32>> {
    if !w.a0.is_zero() || !w.a_end.is_one() || !w.letters.first()?.is_one() {
        return None;
    }
    let mut ns: Vec<u32> = Vec::new();
    for l in &w.letters {
        if l.is_one() {
            ns.push(1);
        } else if l.is_zero() {
            *ns.last_mut()? += 1;
        } else {
            return None;
        }
    }
    Some(ns)
}

fn binom(n: u32, k: u32) -> Q {
    let mut r = Q::one();
    for i in 0..k {
        r = r * q((n - i) as i64) / q((i + 1) as i64);
    }
    r
}

fn sign(k: u32) -> Q {
    if k.is_multiple_of(2) {
        q(1)
    } else {
        q(-1)
    }
}

fn quotient(a: &Dec, b: &Dec) -> Result<Dec> {
    a.div(b).ok_or_else(|| Error::InvalidArgument(format!("cannot divide {} by {}", a, b)))
}

/// Which sign the last sum of the explicit depth-two formula carries.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Depth2Variant {
    /// `−(−1)^{m−1} Σⱼ C(m+j−1, j) I_{n−j}(a) ∧ I_{m+j}(b/a)`, which matches the generating series.
    Consistent,
    /// The same sum with an extra `(−1)ʲ`.
    Printed,
}

/// `δ I_{m,n}(a, b)` by the explicit depth-two formula, with `I_{p,r}(a,b) = I(0; a, 0^{p−1}, b, 0^{r−1}; 1)`
/// and `I_p(a) = I(0; a, 0^{p−1}; 1)`.
pub fn depth2_cobracket_with(m: u32, n: u32, a: &Dec, b: &Dec, mode: ZetaMode, variant: Depth2Variant) -> Result<Wedge2> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidArgument("depth-two indices must be positive".into()));
    }
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroArgument("depth-two arguments must be nonzero".into()));
    }
    let one = Dec::one();
    let (ab, ba) = (quotient(a, b)?, quotient(b, a)?);
    let mut out = Wedge2::zero();
    out.add_wedge_lc(&i2(m - 1, n, a, b, &one), &log_of(&ba), &Q::one());
    out.add_wedge_lc(&i2(m, n - 1, a, b, &one), &log_of(&quotient(&one, b)?), &Q::one());
    out.add_wedge_lc(&i1(m, &ab, &one), &i1(n, b, &one), &q(-1));
    for i in 0..m {
        out.add_wedge_lc(&i1(m - i, a, &one), &i1(n + i, b, &one), &(sign(i) * binom(n + i - 1, i)));
    }
    for j in 0..n {
        let mut c = -sign(m - 1) * binom(m + j - 1, j);
        if variant == Depth2Variant::Printed {
            c *= sign(j);
        }
        out.add_wedge_lc(&i1(n - j, a, &one), &i1(m + j, &ba, &one), &c);
    }
    Ok(reduce_wedge(&out, mode))
}

/// [`depth2_cobracket_with`] using [`Depth2Variant::Consistent`].
pub fn depth2_cobracket(m: u32, n: u32, a: &Dec, b: &Dec, mode: ZetaMode) -> Result<Wedge2> {
    depth2_cobracket_with(m, n, a, b, mode, Depth2Variant::Consistent)
}

fn reduce_wedge(x: &Wedge2, mode: ZetaMode) -> Wedge2 {
    let mut out = Wedge2::zero();
    for ((l, r), c) in x.terms() {
        let l = zeta_reduce(&LinComb::from_mono(l.clone()), mode);
        let r = zeta_reduce(&LinComb::from_mono(r.clone()), mode);
        out.add_wedge_lc(&l, &r, c);
    }
    out
}

/// Coefficient of `t₁^{p} t₂^{r}` in `f^e · g^k` for linear forms in `(t₁, t₂)`.
fn coeff2(f: &LinForm, e: u32, g: &LinForm, k: u32, p: u32, r: u32) -> Q {
    let d = (e + k) as usize;
    let prod = poly_mul(&form_powers(f, d)[e as usize], &form_powers(g, d)[k as usize], d);
    prod.get(&vec![p, r]).cloned().unwrap_or_else(Q::zero)
}

/// `δ I_{m,n}(a, b)` read off the generating series
/// `Σ δI_{p,r}(a:b:1) t₁^{p−1}t₂^{r−1}`, whose four terms are a log part,
/// `−I(a:b|t₁) ∧ I(b:1|t₂)`, `I(a:1|t₁) ∧ I(b:1|t₂−t₁)` and `−I(a:1|t₂) ∧ I(b:a|t₂−t₁)`.
pub fn depth2_cobracket_series(m: u32, n: u32, a: &Dec, b: &Dec, mode: ZetaMode) -> Result<Wedge2> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidArgument("depth-two indices must be positive".into()));
    }
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroArgument("depth-two arguments must be nonzero".into()));
    }
    let one = Dec::one();
    let (t1, t2) = (var(2, 0), var(2, 1));
    let t21 = form_sub(&t2, &t1);
    let (pm, pn) = (m - 1, n - 1);
    let mut out = Wedge2::zero();
    out.add_wedge_lc(&i2(m - 1, n, a, b, &one), &log_of(&quotient(b, a)?), &Q::one());
    out.add_wedge_lc(&i2(m, n - 1, a, b, &one), &log_of(&quotient(&one, b)?), &Q::one());
    out.add_wedge_lc(&rescale_lc(&i1(m, a, b))?, &i1(n, b, &one), &q(-1));
    let w = m + n;
    for p in 1..w {
        let r = w - p;
        let c3 = coeff2(&t1, p - 1, &t21, r - 1, pm, pn);
        if !c3.is_zero() {
            out.add_wedge_lc(&i1(p, a, &one), &i1(r, b, &one), &c3);
        }
        let c4 = coeff2(&t2, p - 1, &t21, r - 1, pm, pn);
        if !c4.is_zero() {
            out.add_wedge_lc(&i1(p, a, &one), &rescale_lc(&i1(r, b, a))?, &(-c4));
        }
    }
    Ok(reduce_wedge(&out, mode))
}

/// `δζ̄(m, n)` for all `m + n = w` from `δζ̄(t₁,t₂) = −(I + U + U²) ζ(t₁)∧ζ(t₂)` with
/// `U(t₁,t₂) = (t₁−t₂, t₁)` and `ζ(t) = Σ ζ(k) t^{k−1}`.
pub fn zeta_cobracket_series(w: u32, mode: ZetaMode) -> Result<BTreeMap<(u32, u32), Wedge2>> {
    if w < 2 {
        return Err(Error::InvalidArgument("weight must be at least 2".into()));
    }
    let (t1, t2) = (var(2, 0), var(2, 1));
    let u1 = form_sub(&t1, &t2);
    let images: [(LinForm, LinForm); 3] = [(t1.clone(), t2.clone()), (u1.clone(), t1.clone()), (form_sub(&u1, &t1), u1)];
    let mut out = BTreeMap::new();
    for m in 1..w {
        let n = w - m;
        let mut x = Wedge2::zero();
        for k in 1..w {
            let l = w - k;
            let mut c = Q::zero();
            for (f, g) in &images {
                c += coeff2(f, k - 1, g, l - 1, m - 1, n - 1);
            }
            if !c.is_zero() {
                x.add_wedge_lc(
                    &LinComb::from_gen(Generator::Zeta(vec![k])),
                    &LinComb::from_gen(Generator::Zeta(vec![l])),
                    &(-c),
                );
            }
        }
        out.insert((m, n), reduce_wedge(&x, mode));
    }
    Ok(out)
}

/// The kernel of `δ` on the span of `ζ̄(m, n)`, `m + n = w`, in the formal-`ζ(1)` mode,
/// against the span of the dihedral symmetry relations.
#[derive(Clone, Debug, PartialEq)]
pub struct DihedralReport {
    pub weight: u32,
    /// Column order: `(1, w−1), (2, w−2), …`.
    pub basis: Vec<(u32, u32)>,
    pub kernel: Vec<Vec<Q>>,
    pub relations: Vec<Vec<Q>>,
    pub relation_rank: usize,
    pub relations_in_kernel: bool,
    pub kernel_equals_relations: bool,
}

/// How `ζ̄(t₀, t₁, t₂)` with `t₀ + t₁ + t₂ = 0` is read in the variables of `ζ̄(t₁, t₂)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DihedralChart {
    /// `ζ̄(t₀, t₁, t₂) = ζ̄(t₁, t₂)`.
    Plain,
    /// `ζ̄(t₀, t₁, t₂) = ζ̄(t₁, −t₂)`; the cyclic shift is then `U²`.
    SignedT2,
}

/// Coefficient vectors over `ζ̄(m,n)` of `G − s·G(L₁,L₂)` for each dihedral symmetry, where
/// `G(t₁,t₂) = Σ ζ̄(m,n) t₁^{m−1}t₂^{n−1}`, read in every monomial of degree `w − 2`.
pub fn dihedral_relations(w: u32, chart: DihedralChart) -> Vec<Vec<Q>> {
    let (t1, t2) = (var(2, 0), var(2, 1));
    let zero: LinForm = vec![0, 0];
    let neg = |f: &LinForm| form_sub(&zero, f);
    let t0 = neg(&form_sub(&t1, &neg(&t2)));
    let symmetries: [(LinForm, LinForm, Q); 3] = match chart {
        DihedralChart::Plain => [(t2.clone(), t0, q(1)), (t2.clone(), t1.clone(), q(-1)), (neg(&t1), neg(&t2), q(1))],
        DihedralChart::SignedT2 => [
            (neg(&t2), form_sub(&t1, &t2), q(1)),
            (neg(&t2), neg(&t1), q(-1)),
            (neg(&t1), neg(&t2), q(1)),
        ],
    };
    let mut out = Vec::new();
    for (f, g, s) in &symmetries {
        for p in 0..=(w - 2) {
            let e = [p, w - 2 - p];
            let mut v = vec![Q::zero(); (w - 1) as usize];
            for m in 1..w {
                let n = w - m;
                let mut c = if [m - 1, n - 1] == e { Q::one() } else { Q::zero() };
                c -= s * coeff2(f, m - 1, g, n - 1, e[0], e[1]);
                v[(m - 1) as usize] = c;
            }
            if v.iter().any(|c| !c.is_zero()) {
                out.push(v);
            }
        }
    }
    out
}

/// [`dihedral_kernel_in`] with [`DihedralChart::SignedT2`].
pub fn dihedral_kernel(w: u32) -> Result<DihedralReport> {
    dihedral_kernel_in(w, DihedralChart::SignedT2)
}

pub fn dihedral_kernel_in(w: u32, chart: DihedralChart) -> Result<DihedralReport> {
    if !(4..=14).contains(&w) {
        return Err(Error::InstanceTooLarge(format!("dihedral kernel needs 4 <= w <= 14, got {}", w)));
    }
    let deltas = zeta_cobracket_series(w, ZetaMode::FormalZeta1)?;
    let basis: Vec<(u32, u32)> = deltas.keys().cloned().collect();
    let mut rows: BTreeMap<(Monomial, Monomial), Vec<Q>> = BTreeMap::new();
    for (col, key) in basis.iter().enumerate() {
        for (pair, c) in deltas[key].terms() {
            rows.entry(pair.clone()).or_insert_with(|| vec![Q::zero(); basis.len()])[col] = c.clone();
        }
    }
    let matrix: Vec<Vec<Q>> = rows.into_values().collect();
    let kernel = null_space(&matrix, basis.len());
    let relations = dihedral_relations(w, chart);
    let relations_in_kernel = relations
        .iter()
        .all(|v| matrix.iter().all(|row| row.iter().zip(v).map(|(a, b)| a * b).sum::<Q>().is_zero()));
    let mut ech = Echelon::new();
    for v in &relations {
        ech.insert(&integer_row(&v.iter().cloned().enumerate().collect::<Vec<_>>()));
    }
    let relation_rank = ech.rank();
    let kernel_equals_relations = relations_in_kernel && relation_rank == kernel.len();
    Ok(DihedralReport {
        weight: w,
        basis,
        kernel,
        relations,
        relation_rank,
        relations_in_kernel,
        kernel_equals_relations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(name: &str) -> Dec {
        Dec::sym(name)
    }

    fn zeta(ns: &[u32]) -> LinComb {
        LinComb::from_gen(Generator::Zeta(ns.to_vec()))
    }

    #[test]
    fn li_word_examples() {
        let x = s("x");
        let (sg, w) = li_to_word(&[2], std::slice::from_ref(&x)).unwrap();
        assert_eq!(sg, -1);
        assert_eq!(w, IterWord::new(Dec::zero(), vec![x.inv().unwrap(), Dec::zero()], Dec::one()));
        assert_eq!(li_to_word(&[1], &[Dec::zero()]).unwrap_err().code(), "ZERO_ARGUMENT");
        let (sg, back) = word_to_li(&w).unwrap();
        assert_eq!((sg, back), (-1, LiSym::new(vec![2], vec![x]).unwrap()));
        assert_eq!(ZetaSym { ns: vec![3, 5] }.to_word().to_string(), "I(0; 1, 0, 0, 1, 0, 0, 0, 0; 1)");
    }

    #[test]
    fn depth_examples() {
        let l = LinComb::from_gen(Generator::Log(crate::dec::LogAtom::Var("a".into())));
        assert_eq!(depth(&l), 0);
        assert_eq!(depth(&LinComb::from_gen(Generator::Word(ZetaSym { ns: vec![3, 5] }.to_word()))), 2);
        let (_, w) = li_to_word(&[2, 1], &[s("x"), s("y")]).unwrap();
        assert!(depth_filtration_check(&w));
        let mut bad = TensorK::zero(2);
        let word = LinComb::from_gen(Generator::Word(w.clone()));
        bad.add_pure(&[word.clone(), word], &Q::one());
        assert!(!depth_filtration_holds(&bad, w.depth()));
    }

    #[test]
    fn classical_li_coproduct() {
        let x = s("x");
        for n in 1..=4u32 {
            let t = li_coproduct_at(&[n], std::slice::from_ref(&x)).unwrap();
            let li = |k: u32| LiSym::new(vec![k], vec![x.clone()]).unwrap().to_lc().unwrap();
            let mut expect = TensorK::zero(2);
            let mut fact = Q::one();
            for k in 1..n {
                fact *= q(k as i64);
                expect.add_pure(&[li(n - k), log_of(&x).pow(k)], &(Q::one() / &fact));
            }
            assert_eq!(reduce_coproduct(&t, &li(n)), expect, "n = {}", n);
        }
    }

    #[test]
    fn zeta_3_5() {
        let expect = {
            let mut w = Wedge2::zero();
            w.add_wedge_lc(&zeta(&[3]), &zeta(&[5]), &q(-5));
            w
        };
        let series = zeta_cobracket_series(8, ZetaMode::Motivic).unwrap();
        assert_eq!(series[&(3, 5)], expect);
        let one = Dec::one();
        assert_eq!(depth2_cobracket(3, 5, &one, &one, ZetaMode::Motivic).unwrap(), expect);
        assert_eq!(
            depth2_cobracket_with(3, 5, &one, &one, ZetaMode::Motivic, Depth2Variant::Printed).unwrap(),
            expect
        );
        assert!(depth2_cobracket(1, 1, &one, &one, ZetaMode::Motivic).unwrap().is_zero());
        assert!(zeta_cobracket_series(4, ZetaMode::Motivic).unwrap().values().all(|x| x.is_zero()));
    }

    #[test]
    fn depth2_paths_agree() {
        let one = Dec::one();
        let series = |w| zeta_cobracket_series(w, ZetaMode::Motivic).unwrap();
        for w in 2..=10u32 {
            let ser = series(w);
            for m in 1..w {
                let n = w - m;
                let explicit = depth2_cobracket(m, n, &one, &one, ZetaMode::Motivic).unwrap();
                assert_eq!(explicit, ser[&(m, n)], "({}, {})", m, n);
                let (a, b) = (s("a"), s("b"));
                assert_eq!(
                    depth2_cobracket(m, n, &a, &b, ZetaMode::Motivic).unwrap(),
                    depth2_cobracket_series(m, n, &a, &b, ZetaMode::Motivic).unwrap(),
                    "({}, {}) symbolic",
                    m,
                    n
                );
            }
        }
    }

    #[test]
    fn printed_sign_differs_at_2_6() {
        let one = Dec::one();
        let printed = depth2_cobracket_with(2, 6, &one, &one, ZetaMode::Motivic, Depth2Variant::Printed).unwrap();
        assert_ne!(printed, depth2_cobracket(2, 6, &one, &one, ZetaMode::Motivic).unwrap());
    }

    #[test]
    fn dihedral_small_weights() {
        for w in 4..=12 {
            let r = dihedral_kernel(w).unwrap();
            assert!(r.relations_in_kernel, "w = {}", w);
            assert!(r.kernel_equals_relations, "w = {}", w);
        }
        assert!(!dihedral_kernel_in(8, DihedralChart::Plain).unwrap().relations_in_kernel);
        assert_eq!(dihedral_kernel(3).unwrap_err().code(), "INSTANCE_TOO_LARGE");
    }
}
