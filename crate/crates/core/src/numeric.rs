//! Double-precision evaluation of multiple polylogarithm series inside the
//! unit polydisc, and numeric checks of the stuffle, shuffle and weight-one
//! identities. Iterated integrals are un-normalized: no `(2πi)^{−n}` factor.

use num_traits::Zero;

use crate::arith::{r_tilde, RTilde};
use crate::dec::{to_f64, Dec, Q};
use crate::error::{Error, Result};
use crate::iterint::shuffles;
use crate::polylog::{li_to_word, word_to_li, LiSym};
use crate::word::IterWord;

/// Bound on `|x_i|` required by [`li_eval`].
pub const MAX_ABS_ARG: f64 = 0.8;

/// A truncated series value with an a-posteriori bound on the neglected tail.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EvalResult {
    pub value: f64,
    pub truncation: usize,
    pub error_bound: f64,
}

/// `Li_{n₁,…,n_m}(x₁,…,x_m) = Σ_{0<k₁<…<k_m} Π x_i^{k_i} / k_i^{n_i}` truncated at `k_m ≤ K`.
///
/// Requires `|x_i| ≤ 0.8` and every tail product `Π_{i≥j} |x_i| < 1`.
pub fn li_eval(ns: &[u32], xs: &[Q], k: usize) -> Result<EvalResult> {
    let xf: Vec<f64> = xs.iter().map(to_f64).collect();
    if let Some(x) = xf.iter().find(|x| x.abs() > MAX_ABS_ARG) {
        return Err(Error::DivergentRegion(format!("|{}| > {}", x, MAX_ABS_ARG)));
    }
    li_eval_f64(ns, &xf, k)
}

/// As [`li_eval`], requiring only that every tail product `Π_{i≥j} |x_i|` is at most 0.8.
pub fn li_eval_f64(ns: &[u32], xs: &[f64], k: usize) -> Result<EvalResult> {
    if ns.is_empty() || ns.len() != xs.len() || ns.contains(&0) {
        return Err(Error::InvalidArgument(format!("bad Li indices {:?} for {} arguments", ns, xs.len())));
    }
    let m = xs.len();
    let mut rho: f64 = 0.0;
    let mut tail = 1.0;
    for x in xs.iter().rev() {
        tail *= x.abs();
        rho = rho.max(tail);
    }
    if rho.is_nan() || rho > MAX_ABS_ARG {
        return Err(Error::DivergentRegion(format!("tail product {} > {}", rho, MAX_ABS_ARG)));
    }
    // level[k] holds the depth-j partial sum with largest index exactly k.
    let mut level = vec![0.0; k + 1];
    let mut abs_level = vec![0.0; k + 1];
    for j in 0..m {
        let mut prefix = if j == 0 { 1.0 } else { 0.0 };
        let mut abs_prefix = prefix;
        let mut power = 1.0;
        let mut next = vec![0.0; k + 1];
        let mut abs_next = vec![0.0; k + 1];
        for kk in 1..=k {
            power *= xs[j];
            if j > 0 {
                prefix += level[kk - 1];
                abs_prefix += abs_level[kk - 1];
            }
            let w = power / (kk as f64).powi(ns[j] as i32);
            next[kk] = w * prefix;
            abs_next[kk] = w.abs() * abs_prefix;
        }
        level = next;
        abs_level = abs_next;
    }
    let value: f64 = level.iter().sum();
    let magnitude: f64 = abs_level.iter().sum();
    let rounding = 4.0 * (m * (k + 1)) as f64 * f64::EPSILON * magnitude;
    let error_bound = tail_bound(m, ns[m - 1], rho, k) + rounding;
    Ok(EvalResult { value, truncation: k, error_bound })
}

/// `(K+1)^{−n_m} Σ_{s>K} C(s−1, m−1) ρ^s`, closed off by a geometric remainder.
fn tail_bound(m: usize, n_last: u32, rho: f64, k: usize) -> f64 {
    if rho == 0.0 {
        return 0.0;
    }
    let binom = |s: usize| -> f64 {
        (0..m - 1).fold(1.0, |acc, i| acc * (s - 1 - i) as f64 / (i + 1) as f64)
    };
    let mut sum = 0.0f64;
    let mut s = (k + 1).max(m);
    loop {
        let term = binom(s) * rho.powi(s as i32);
        let ratio = rho * s as f64 / (s + 1 - m) as f64;
        if ratio < 0.99 && term * ratio / (1.0 - ratio) < 1e-3 * sum.max(f64::MIN_POSITIVE) {
            sum += term + term * ratio / (1.0 - ratio);
            break;
        }
        sum += term;
        s += 1;
        if s > k + 100_000 {
            return f64::INFINITY;
        }
    }
    sum / ((k + 1) as f64).powi(n_last as i32)
}

/// Doubles `K` from 32 until the tail bound drops below `tol / 10`.
pub fn li_value(ns: &[u32], xs: &[f64], tol: f64) -> Result<EvalResult> {
    let mut k = 32;
    loop {
        let r = li_eval_f64(ns, xs, k)?;
        if r.error_bound < tol / 10.0 || k >= 1 << 16 {
            return Ok(r);
        }
        k *= 2;
    }
}

fn check_region(xs: &[f64]) -> Result<()> {
    if let Some(x) = xs.iter().find(|x| x.abs() > MAX_ABS_ARG) {
        return Err(Error::DivergentRegion(format!("|{}| > {}", x, MAX_ABS_ARG)));
    }
    Ok(())
}

/// `Li_n(x)·Li_m(y) − Li_{n,m}(x,y) − Li_{m,n}(y,x) − Li_{n+m}(xy)`.
pub fn stuffle_residual(n: u32, m: u32, x: f64, y: f64, tol: f64) -> Result<f64> {
    check_region(&[x, y])?;
    let v = |ns: &[u32], xs: &[f64]| li_value(ns, xs, tol).map(|r| r.value);
    Ok(v(&[n], &[x])? * v(&[m], &[y])? - v(&[n, m], &[x, y])? - v(&[m, n], &[y, x])? - v(&[n + m], &[x * y])?)
}

/// The quasi-shuffle relation for depth-one polylogarithms, within `tol`.
pub fn stuffle_check(n: u32, m: u32, x: f64, y: f64, tol: f64) -> Result<bool> {
    Ok(stuffle_residual(n, m, x, y, tol)?.abs() < tol)
}

fn li_sym_value(li: &LiSym, tol: f64) -> Result<f64> {
    let xs = li
        .xs
        .iter()
        .map(|d| {
            d.as_rat()
                .map(to_f64)
                .ok_or_else(|| Error::InvalidArgument(format!("{} is not a rational argument", d)))
        })
        .collect::<Result<Vec<f64>>>()?;
    Ok(li_value(&li.ns, &xs, tol)?.value)
}

/// `Li(u)·Li(v)` minus the sum of the polylogarithms read off the shuffle of
/// their words.
pub fn shuffle_residual(u: &LiSym, v: &LiSym, tol: f64) -> Result<f64> {
    for li in [u, v] {
        let xs: Vec<f64> = li.xs.iter().filter_map(|d| d.as_rat().map(to_f64)).collect();
        check_region(&xs)?;
    }
    let (su, wu) = li_to_word(&u.ns, &u.xs)?;
    let (sv, wv) = li_to_word(&v.ns, &v.xs)?;
    let mut rhs = 0.0;
    for letters in shuffles(&wu.letters, &wv.letters) {
        let (s, li) = word_to_li(&IterWord::new(Dec::zero(), letters, Dec::one()))?;
        rhs += s as f64 * li_sym_value(&li, tol)?;
    }
    let lhs = li_sym_value(u, tol)? * li_sym_value(v, tol)?;
    Ok(lhs - (su * sv) as f64 * rhs)
}

/// The shuffle relation `Li(u)·Li(v) = Σ Li(shuffle terms)`, within `tol`.
pub fn shuffle_check(u: &LiSym, v: &LiSym, tol: f64) -> Result<bool> {
    Ok(shuffle_residual(u, v, tol)?.abs() < tol)
}

/// `(I(a; b; c), log r̃(a, b, c))` for rationals with `a ≠ b ≠ c`, the
/// integral taken from the series `−Li₁((c−a)/(b−a))`.
pub fn weight1_values(a: &Q, b: &Q, c: &Q, tol: f64) -> Result<(f64, f64)> {
    if a == b || b == c {
        return Err(Error::InvalidArgument("weight-one check needs a ≠ b and b ≠ c".into()));
    }
    let RTilde::Rat(r) = r_tilde(&Dec::rat(a.clone()), &Dec::rat(b.clone()), &Dec::rat(c.clone()))? else {
        unreachable!("rational input")
    };
    if r <= Q::zero() {
        return Err(Error::DivergentRegion(format!("r̃ = {} is not positive", r)));
    }
    let z = to_f64(&((c - a) / (b - a)));
    check_region(&[z])?;
    let integral = -li_value(&[1], &[z], tol)?.value;
    Ok((integral, to_f64(&r).ln()))
}

/// The weight-one identity `I(a; b; c) = log r̃(a, b, c)`, within `tol`.
pub fn weight1_check(a: &Q, b: &Q, c: &Q, tol: f64) -> Result<bool> {
    let (i, l) = weight1_values(a, b, c, tol)?;
    Ok((i - l).abs() < tol)
}
