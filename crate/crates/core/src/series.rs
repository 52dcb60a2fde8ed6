//! Truncated generating series in t-variables with coefficients in the word algebra,
//! and the coproduct of the series `I(a₀; a₁…a_m; a_{m+1} | t₀; …; t_m)` computed
//! coefficientwise, by marked decorated segments, and by special segments.

use std::cell::RefCell;
use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::coeff::{Generator, LinComb, Monomial, TensorK};
use crate::dec::{log_of, q, Dec, Q};
use crate::error::{Error, Result};
use crate::iterint::{coproduct, normalize, reverse, word_mono};
use crate::word::IterWord;

/// Exponent vector of a monomial in the t-variables.
pub type Exps = Vec<u32>;

/// Integer coefficients of a linear form in the t-variables.
pub type LinForm = Vec<i64>;

/// The coordinate form `t_i` among `n` variables.
pub fn var(n: usize, i: usize) -> LinForm {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

pub fn form_neg(f: &LinForm) -> LinForm {
    f.iter().map(|c| -c).collect()
}

pub fn form_sub(f: &LinForm, g: &LinForm) -> LinForm {
    f.iter().zip(g).map(|(a, b)| a - b).collect()
}

fn total(e: &[u32]) -> usize {
    e.iter().map(|&k| k as usize).sum()
}

/// All exponent vectors in `n` variables of total degree at most `d`.
pub fn exponents(n: usize, d: usize) -> Vec<Exps> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        let mut next = Vec::new();
        for e in &out {
            for k in 0..=(d - total(e)) {
                let mut f = e.clone();
                f.push(k as u32);
                next.push(f);
            }
        }
        out = next;
    }
    out
}

/// A polynomial with rational coefficients in the t-variables.
pub type Poly = BTreeMap<Exps, Q>;

pub fn poly_one(n: usize) -> Poly {
    let mut p = Poly::new();
    p.insert(vec![0; n], Q::one());
    p
}

/// Product truncated at total degree `d`.
pub fn poly_mul(a: &Poly, b: &Poly, d: usize) -> Poly {
    let mut out = Poly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Exps = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            if total(&e) > d {
                continue;
            }
            let c = ca * cb;
            let slot = out.entry(e).or_insert_with(Q::zero);
            *slot += c;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// `f⁰, f¹, …, f^d` for a linear form.
pub fn form_powers(f: &LinForm, d: usize) -> Vec<Poly> {
    let n = f.len();
    let mut lin = Poly::new();
    for (i, c) in f.iter().enumerate() {
        if *c != 0 {
            lin.insert(var(n, i).iter().map(|&x| x as u32).collect(), q(*c));
        }
    }
    let mut out = vec![poly_one(n)];
    for k in 1..=d {
        let next = poly_mul(&out[k - 1], &lin, d);
        out.push(next);
    }
    out
}

/// A truncated power series with word-algebra coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct Series {
    nvars: usize,
    degree: usize,
    coeffs: BTreeMap<Exps, LinComb>,
}

impl Series {
    pub fn zero(nvars: usize, degree: usize) -> Series {
        Series { nvars, degree, coeffs: BTreeMap::new() }
    }

    pub fn one(nvars: usize, degree: usize) -> Series {
        let mut s = Series::zero(nvars, degree);
        s.add_term(vec![0; nvars], &LinComb::one());
        s
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeff(&self, e: &[u32]) -> LinComb {
        self.coeffs.get(e).cloned().unwrap_or_else(LinComb::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exps, &LinComb)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Adds `c · tᵉ`, dropping terms above the truncation degree.
    pub fn add_term(&mut self, e: Exps, c: &LinComb) {
        assert_eq!(e.len(), self.nvars, "exponent arity mismatch");
        if total(&e) > self.degree || c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(e.clone()).or_insert_with(LinComb::zero);
        slot.add_assign(c);
        if slot.is_zero() {
            self.coeffs.remove(&e);
        }
    }

    pub fn add_assign(&mut self, other: &Series) {
        for (e, c) in &other.coeffs {
            self.add_term(e.clone(), c);
        }
    }

    pub fn sub(&self, other: &Series) -> Series {
        let mut out = self.clone();
        out.add_assign(&other.scale(&q(-1)));
        out
    }

    pub fn scale(&self, k: &Q) -> Series {
        self.map_coeffs(&|c| c.scale(k))
    }

    pub fn mul(&self, other: &Series) -> Series {
        let mut out = Series::zero(self.nvars, self.degree.min(other.degree));
        for (ea, ca) in &self.coeffs {
            for (eb, cb) in &other.coeffs {
                let e: Exps = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                if total(&e) <= out.degree {
                    out.add_term(e, &ca.mul(cb));
                }
            }
        }
        out
    }

    pub fn map_coeffs(&self, f: &dyn Fn(&LinComb) -> LinComb) -> Series {
        let mut out = Series::zero(self.nvars, self.degree);
        for (e, c) in &self.coeffs {
            out.add_term(e.clone(), &f(c));
        }
        out
    }

    /// Substitutes local variable `i` by `forms[i]`, a linear form in `nglobal` variables.
    pub fn substitute(&self, forms: &[LinForm], nglobal: usize) -> Series {
        assert_eq!(forms.len(), self.nvars, "one form per variable");
        let pows: Vec<Vec<Poly>> = forms.iter().map(|f| form_powers(f, self.degree)).collect();
        let mut out = Series::zero(nglobal, self.degree);
        for (e, c) in &self.coeffs {
            let mut p = poly_one(nglobal);
            for (i, &k) in e.iter().enumerate() {
                p = poly_mul(&p, &pows[i][k as usize], self.degree);
                if p.is_empty() {
                    break;
                }
            }
            for (ge, gc) in p {
                out.add_term(ge, &c.scale(&gc));
            }
        }
        out
    }

    /// Sets the variable `i` to zero.
    pub fn set_zero(&self, i: usize) -> Series {
        let mut out = Series::zero(self.nvars, self.degree);
        for (e, c) in &self.coeffs {
            if e[i] == 0 {
                out.add_term(e.clone(), c);
            }
        }
        out
    }
}

/// `exp(x · f)` truncated at degree `d`, for a coefficient `x` of weight one.
pub fn exp_series(x: &LinComb, f: &LinForm, d: usize) -> Series {
    let pows = form_powers(f, d);
    let mut out = Series::zero(f.len(), d);
    let mut xk = LinComb::one();
    let mut fact = Q::one();
    for (k, p) in pows.iter().enumerate() {
        if k > 0 {
            xk = xk.mul(x);
            fact *= q(k as i64);
        }
        for (e, c) in p {
            out.add_term(e.clone(), &xk.scale(&(c / &fact)));
        }
    }
    out
}

/// `a^f = Σ [a]ᵏ fᵏ / k!` with `[a]` expanded into log atoms.
pub fn power_series(a: &Dec, f: &LinForm, d: usize) -> Series {
    exp_series(&log_of(a), f, d)
}

fn zeros_then(letters: &mut Vec<Dec>, k: u32) {
    letters.extend(std::iter::repeat_n(Dec::zero(), k as usize));
}

/// `I(a₀; a₁…a_m; a_{m+1} | t₀; …; t_m)`: the coefficient of `t₀^{k₀}⋯t_m^{k_m}` is
/// `I(a₀; 0^{k₀}, a₁, 0^{k₁}, …, a_m, 0^{k_m}; a_{m+1})`.
pub fn gen_series(decs: &[Dec], d: usize) -> Series {
    assert!(decs.len() >= 2, "a series needs two endpoints");
    let m = decs.len() - 2;
    let mut out = Series::zero(m + 1, d);
    for e in exponents(m + 1, d) {
        let mut letters = Vec::new();
        zeros_then(&mut letters, e[0]);
        for i in 1..=m {
            letters.push(decs[i].clone());
            zeros_then(&mut letters, e[i]);
        }
        out.add_term(e, &LinComb::from_mono(word_mono(&decs[0], &letters, &decs[m + 1])));
    }
    out
}

/// [`gen_series`] with its variables replaced by linear forms in `nglobal` variables.
pub fn gen_series_at(decs: &[Dec], forms: &[LinForm], nglobal: usize, d: usize) -> Series {
    gen_series(decs, d).substitute(forms, nglobal)
}

/// A truncated power series with 2-tensor coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct TensorSeries {
    nvars: usize,
    degree: usize,
    coeffs: BTreeMap<Exps, TensorK>,
}

impl TensorSeries {
    pub fn zero(nvars: usize, degree: usize) -> TensorSeries {
        TensorSeries { nvars, degree, coeffs: BTreeMap::new() }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeff(&self, e: &[u32]) -> TensorK {
        self.coeffs.get(e).cloned().unwrap_or_else(|| TensorK::zero(2))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exps, &TensorK)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add_coeff(&mut self, e: Exps, t: &TensorK) {
        if total(&e) > self.degree || t.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(e.clone()).or_insert_with(|| TensorK::zero(2));
        slot.add_assign(t);
        if slot.is_zero() {
            self.coeffs.remove(&e);
        }
    }

    /// Adds `c · (l ⊗ r)` with the t-variables multiplied.
    pub fn add_product(&mut self, l: &Series, r: &Series, c: &Q) {
        for (ea, ca) in l.terms() {
            for (eb, cb) in r.terms() {
                let e: Exps = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                if total(&e) <= self.degree {
                    let mut t = TensorK::zero(2);
                    t.add_pure(&[ca.clone(), cb.clone()], c);
                    self.add_coeff(e, &t);
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &TensorSeries) {
        for (e, t) in &other.coeffs {
            self.add_coeff(e.clone(), t);
        }
    }

    pub fn sub(&self, other: &TensorSeries) -> TensorSeries {
        let mut out = self.clone();
        for (e, t) in &other.coeffs {
            out.add_coeff(e.clone(), &t.scale(&q(-1)));
        }
        out
    }

    pub fn scale(&self, k: &Q) -> TensorSeries {
        let mut out = TensorSeries::zero(self.nvars, self.degree);
        for (e, t) in &self.coeffs {
            out.add_coeff(e.clone(), &t.scale(k));
        }
        out
    }

    /// Applies a slotwise rewrite to every coefficient.
    pub fn map_each(&self, f: &dyn Fn(&Monomial) -> LinComb) -> TensorSeries {
        let mut out = TensorSeries::zero(self.nvars, self.degree);
        for (e, t) in &self.coeffs {
            out.add_coeff(e.clone(), &t.map_each(f));
        }
        out
    }

    pub fn set_zero(&self, i: usize) -> TensorSeries {
        let mut out = TensorSeries::zero(self.nvars, self.degree);
        for (e, t) in &self.coeffs {
            if e[i] == 0 {
                out.add_coeff(e.clone(), t);
            }
        }
        out
    }
}

fn normalize_mono(m: &Monomial) -> LinComb {
    normalize(&LinComb::from_mono(m.clone()))
}

/// The coproduct applied to every coefficient, followed by the unit and loop relations.
pub fn series_coproduct_raw(decs: &[Dec], d: usize) -> TensorSeries {
    let s = gen_series(decs, d);
    let mut out = TensorSeries::zero(s.nvars(), d);
    for (e, c) in s.terms() {
        out.add_coeff(e.clone(), &coproduct(c).map_each(&normalize_mono));
    }
    out
}

/// Strictly increasing subsets of `1..=m`.
fn subsets(m: usize) -> Vec<Vec<usize>> {
    (0u32..(1 << m))
        .map(|mask| (1..=m).filter(|i| mask & (1 << (i - 1)) != 0).collect())
        .collect()
}

/// All `j` with `i_α ≤ j_α < i_{α+1}`, for `α` from `first` to `k`.
fn j_choices(is: &[usize], first: usize) -> Vec<Vec<usize>> {
    let k = is.len() - 2;
    let mut out: Vec<Vec<usize>> = vec![Vec::new()];
    for a in first..=k {
        let mut next = Vec::new();
        for js in &out {
            for j in is[a]..is[a + 1] {
                let mut v = js.clone();
                v.push(j);
                next.push(v);
            }
        }
        out = next;
    }
    out
}

/// `I(0; a_{j+1}…a_{i'−1}; a_{i'} | t_j; …; t_{i'−1})`.
fn forward_gap(decs: &[Dec], j: usize, i_next: usize, n: usize, d: usize) -> Series {
    let mut ds = vec![Dec::zero()];
    ds.extend_from_slice(&decs[j + 1..=i_next]);
    let forms: Vec<LinForm> = (j..i_next).map(|p| var(n, p)).collect();
    gen_series_at(&ds, &forms, n, d)
}

/// The coproduct as the sum over marked decorated segments.
pub fn series_coproduct_marked(decs: &[Dec], d: usize) -> TensorSeries {
    assert!(decs.len() >= 2, "a series needs two endpoints");
    let m = decs.len() - 2;
    let n = m + 1;
    let mut out = TensorSeries::zero(n, d);
    for sub in subsets(m) {
        let mut is = vec![0];
        is.extend(&sub);
        is.push(m + 1);
        let k = sub.len();
        for js in j_choices(&is, 0) {
            let mut lds = vec![decs[0].clone()];
            lds.extend(sub.iter().map(|&i| decs[i].clone()));
            lds.push(decs[m + 1].clone());
            let lforms: Vec<LinForm> = js.iter().map(|&j| var(n, j)).collect();
            let left = gen_series_at(&lds, &lforms, n, d);
            let mut right = Series::one(n, d);
            for a in 0..=k {
                let (i, j) = (is[a], js[a]);
                let mut bds: Vec<Dec> = decs[i..=j].to_vec();
                bds.push(Dec::zero());
                let bforms: Vec<LinForm> = (i..=j).map(|p| var(n, p)).collect();
                right = right.mul(&gen_series_at(&bds, &bforms, n, d));
                right = right.mul(&forward_gap(decs, j, is[a + 1], n, d));
            }
            out.add_product(&left, &right, &Q::one());
        }
    }
    out
}

/// The coproduct of `I(0; a₁…a_m; a_{m+1} | t₀; …; t_m)` as the sum over special marked
/// segments, with reversed backward gaps. `decs` lists `a₁…a_{m+1}`.
pub fn series_coproduct_special(decs: &[Dec], d: usize) -> TensorSeries {
    assert!(!decs.is_empty(), "a series needs an endpoint");
    let mut all = vec![Dec::zero()];
    all.extend_from_slice(decs);
    let m = all.len() - 2;
    let n = m + 1;
    let mut out = TensorSeries::zero(n, d);
    for sub in subsets(m) {
        let mut is = vec![0];
        is.extend(&sub);
        is.push(m + 1);
        let k = sub.len();
        for tail in j_choices(&is, 1) {
            let mut js = vec![0];
            js.extend(tail);
            let mut lds = vec![Dec::zero()];
            lds.extend(sub.iter().map(|&i| all[i].clone()));
            lds.push(all[m + 1].clone());
            let lforms: Vec<LinForm> = js.iter().map(|&j| var(n, j)).collect();
            let left = gen_series_at(&lds, &lforms, n, d);
            let mut right = forward_gap(&all, 0, is[1], n, d);
            let mut sign = Q::one();
            for a in 1..=k {
                let (i, j) = (is[a], js[a]);
                let mut bds = vec![Dec::zero()];
                bds.extend((i..=j).rev().map(|p| all[p].clone()));
                let bforms: Vec<LinForm> = (i..=j).rev().map(|p| form_neg(&var(n, p))).collect();
                if (j - i) % 2 == 1 {
                    sign = -sign;
                }
                right = right.mul(&gen_series_at(&bds, &bforms, n, d));
                right = right.mul(&forward_gap(&all, j, is[a + 1], n, d));
            }
            out.add_product(&left, &right, &sign);
        }
    }
    out
}

/// Rewrites `I(a; w; 0)` with `a ≠ 0` as `(−1)^{|w|} I(0; w reversed; a)`; the unit and
/// loop relations are applied as well.
pub fn reversal_rewrite(x: &LinComb) -> LinComb {
    normalize(x).map_gens(&|g| match g {
        Generator::Word(w) if w.a_end.is_zero() && !w.a0.is_zero() => reverse(w),
        other => LinComb::from_gen(other.clone()),
    })
}

/// `(−1)^{m−1} I(0; a_m…a₂; a₁ | −t_m; …; −t₁)`, the reversed form of
/// `I(a₁; a₂…a_m; 0 | t₁; …; t_m)`. `decs` lists `a₁…a_m`.
pub fn reversal_series(decs: &[Dec], d: usize) -> Series {
    let m = decs.len();
    assert!(m >= 1, "at least one decoration");
    let mut ds = vec![Dec::zero()];
    ds.extend(decs[1..].iter().rev().cloned());
    ds.push(decs[0].clone());
    let forms: Vec<LinForm> = (0..m).rev().map(|p| form_neg(&var(m, p))).collect();
    let sign = if (m - 1).is_multiple_of(2) { q(1) } else { q(-1) };
    gen_series_at(&ds, &forms, m, d).scale(&sign)
}

fn check_rescalable(decs: &[Dec]) -> Result<()> {
    if decs.len() < 2 || !decs[0].is_zero() {
        return Err(Error::NotRescalable("the leading decoration must be 0".into()));
    }
    if let Some(p) = decs[1..].iter().position(|a| a.is_zero()) {
        return Err(Error::NotRescalable(format!("decoration {} is zero", p + 1)));
    }
    Ok(())
}

/// `a_{m+1}^{t₀} · I(0; a₁/a_{m+1}, …; 1 | 0; t₁−t₀; …; t_m−t₀)` for
/// `decs = (0, a₁, …, a_{m+1})`.
pub fn rescale_series(decs: &[Dec], d: usize) -> Result<Series> {
    check_rescalable(decs)?;
    let m = decs.len() - 2;
    let n = m + 1;
    let c = &decs[m + 1];
    let mut ds = vec![Dec::zero()];
    for a in &decs[1..=m] {
        ds.push(a.div(c).ok_or_else(|| Error::NotRescalable(format!("{} / {}", a, c)))?);
    }
    ds.push(Dec::one());
    let mut forms = vec![vec![0; n]];
    forms.extend((1..=m).map(|i| form_sub(&var(n, i), &var(n, 0))));
    let inner = gen_series_at(&ds, &forms, n, d);
    Ok(power_series(c, &var(n, 0), d).mul(&inner))
}

/// The shift part of [`rescale_series`] alone: `I(0;0;c)^{t₀}`-powers times the series
/// with shifted variables and unscaled letters. Agrees with [`gen_series`] modulo `J`.
pub fn shift_series(decs: &[Dec], d: usize) -> Result<Series> {
    check_rescalable(decs)?;
    let m = decs.len() - 2;
    let n = m + 1;
    let c = &decs[m + 1];
    let mut forms = vec![vec![0; n]];
    forms.extend((1..=m).map(|i| form_sub(&var(n, i), &var(n, 0))));
    let inner = gen_series_at(decs, &forms, n, d);
    let log_c = LinComb::from_mono(word_mono(&Dec::zero(), &[Dec::zero()], c));
    Ok(exp_series(&log_c, &var(n, 0), d).mul(&inner))
}

fn binom(n: u32, k: u32) -> Q {
    let mut r = Q::one();
    for i in 0..k {
        r = r * q((n - i) as i64) / q((i + 1) as i64);
    }
    r
}

/// Rewrites `I(0; 0^{k₀}, b₁, 0^{k₁}, …, b_r, 0^{k_r}; c)` with `c ≠ 0` into log powers of
/// `c` times words `I(0; b₁/c, 0^{…}, …; 1)` without leading zeros.
pub fn rescale_word(w: &IterWord) -> Result<LinComb> {
    if !w.a0.is_zero() {
        return Err(Error::NotRescalable(format!("{} does not start at 0", w)));
    }
    let c = &w.a_end;
    if c.is_zero() {
        return Err(Error::NotRescalable(format!("{} ends at 0", w)));
    }
    let k0 = w.letters.iter().take_while(|a| a.is_zero()).count() as u32;
    let mut bs: Vec<Dec> = Vec::new();
    let mut ks: Vec<u32> = Vec::new();
    for a in &w.letters[k0 as usize..] {
        if a.is_zero() {
            *ks.last_mut().expect("a letter precedes") += 1;
        } else {
            bs.push(a.div(c).ok_or_else(|| Error::NotRescalable(format!("{} / {}", a, c)))?);
            ks.push(0);
        }
    }
    let log_c = log_of(c);
    let log_pow = |p: u32| -> LinComb {
        let mut f = Q::one();
        for i in 1..=p {
            f *= q(i as i64);
        }
        log_c.pow(p).scale(&(Q::one() / f))
    };
    if bs.is_empty() {
        return Ok(log_pow(k0));
    }
    let r = bs.len();
    let mut out = LinComb::zero();
    for qs in exponents(r, k0 as usize) {
        let p = k0 - qs.iter().sum::<u32>();
        let mut coeff = Q::one();
        let mut letters = Vec::new();
        for i in 0..r {
            coeff *= binom(ks[i] + qs[i], qs[i]);
            if qs[i] % 2 == 1 {
                coeff = -coeff;
            }
            letters.push(bs[i].clone());
            zeros_then(&mut letters, ks[i] + qs[i]);
        }
        let word = LinComb::from_mono(word_mono(&Dec::zero(), &letters, &Dec::one()));
        out.add_assign(&log_pow(p).mul(&word).scale(&coeff));
    }
    Ok(out)
}

/// Applies [`rescale_word`] to every word from 0 to a nonzero point; other generators
/// are kept.
pub fn rescale_lc(x: &LinComb) -> Result<LinComb> {
    let err = RefCell::new(None);
    let out = normalize(x).map_gens(&|g| match g {
        Generator::Word(w) if w.a0.is_zero() && !w.a_end.is_zero() => {
            rescale_word(w).unwrap_or_else(|e| {
                err.borrow_mut().get_or_insert(e);
                LinComb::zero()
            })
        }
        other => LinComb::from_gen(other.clone()),
    });
    match err.into_inner() {
        Some(e) => Err(e),
        None => Ok(out),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::tensor_in_ideal;

    fn s(name: &str) -> Dec {
        Dec::sym(name)
    }

    fn word(a: Dec, ls: Vec<Dec>, b: Dec) -> LinComb {
        LinComb::from_mono(word_mono(&a, &ls, &b))
    }

    #[test]
    fn gen_series_coefficients() {
        let g = gen_series(&[Dec::zero(), s("a"), s("b")], 2);
        assert_eq!(g.coeff(&[0, 0]), word(Dec::zero(), vec![s("a")], s("b")));
        assert_eq!(g.coeff(&[1, 1]), word(Dec::zero(), vec![Dec::zero(), s("a"), Dec::zero()], s("b")));
        assert_eq!(g.terms().count(), 6);
    }

    #[test]
    fn substitution_expands_forms() {
        let g = gen_series(&[Dec::zero(), s("a")], 2);
        let h = g.substitute(&[form_sub(&var(2, 1), &var(2, 0))], 2);
        let w2 = word(Dec::zero(), vec![Dec::zero(), Dec::zero()], s("a"));
        assert_eq!(h.coeff(&[1, 1]), w2.scale(&q(-2)));
        assert_eq!(h.coeff(&[2, 0]), w2);
    }

    #[test]
    fn power_series_is_exponential() {
        let p = power_series(&s("a"), &var(1, 0), 3);
        let la = log_of(&s("a"));
        assert_eq!(p.coeff(&[3]), la.pow(3).scale(&Q::new(1.into(), 6.into())));
    }

    #[test]
    fn raw_constant_term_is_plain_coproduct() {
        let decs = [Dec::zero(), s("a"), Dec::one()];
        let raw = series_coproduct_raw(&decs, 2);
        let w = word(Dec::zero(), vec![s("a")], Dec::one());
        assert_eq!(raw.coeff(&[0, 0]), coproduct(&w));
    }

    #[test]
    fn marked_matches_raw_modulo_relations() {
        let alph = [Dec::zero(), Dec::one(), s("a")];
        for decs in [
            vec![s("a"), Dec::one()],
            vec![Dec::zero(), s("a"), Dec::one()],
            vec![Dec::one(), Dec::zero(), s("a")],
            vec![Dec::zero(), s("a"), Dec::one(), s("a")],
            vec![s("a"), Dec::one(), Dec::zero(), Dec::one()],
        ] {
            assert!(decs.iter().all(|d| alph.contains(d)));
            let d = 4 - (decs.len() - 2);
            let diff = series_coproduct_marked(&decs, d).sub(&series_coproduct_raw(&decs, d));
            for (e, t) in diff.terms() {
                assert!(tensor_in_ideal(t), "{:?} at {:?}", decs, e);
            }
        }
    }

    #[test]
    fn special_is_marked_after_reversal() {
        let decs = [s("a"), s("b"), Dec::one()];
        let mut all = vec![Dec::zero()];
        all.extend_from_slice(&decs);
        let marked = series_coproduct_marked(&all, 3).map_each(&|m| reversal_rewrite(&LinComb::from_mono(m.clone())));
        let special = series_coproduct_special(&decs, 3);
        assert_eq!(marked, special);
    }

    #[test]
    fn reversal_series_identity() {
        let decs = [s("a"), s("b"), Dec::one()];
        let mut lds = decs.to_vec();
        lds.push(Dec::zero());
        let lhs = gen_series(&lds, 3).map_coeffs(&reversal_rewrite);
        assert_eq!(lhs, reversal_series(&decs, 3));
    }

    #[test]
    fn shift_agrees_modulo_relations() {
        let decs = [Dec::zero(), s("a"), s("b")];
        let diff = gen_series(&decs, 3).sub(&shift_series(&decs, 3).unwrap());
        for (_, c) in diff.terms() {
            assert!(tensor_in_ideal(&TensorK::pure(std::slice::from_ref(c))));
        }
        assert!(rescale_series(&[Dec::zero(), Dec::zero(), s("b")], 2).is_err());
    }

    #[test]
    fn rescale_word_example() {
        let w = IterWord::new(Dec::zero(), vec![Dec::zero(), s("b")], s("c"));
        let beta = s("b").div(&s("c")).unwrap();
        let mut expect = log_of(&s("c")).mul(&word(Dec::zero(), vec![beta.clone()], Dec::one()));
        expect.sub_assign(&word(Dec::zero(), vec![beta, Dec::zero()], Dec::one()));
        assert_eq!(rescale_word(&w).unwrap(), expect);
    }
}
