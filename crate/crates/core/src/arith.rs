//! The r̃ ratio, p-adic valuations, unramifiedness certificates over rational
//! and cyclotomic alphabets, and graded dimensions of free tensor algebras.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::dec::{factor, valuation_rat, Dec, Q};
use crate::error::{Error, Result};

/// `v_p(x)` for a nonzero rational and a prime `p`.
pub fn valuation(x: &Q, p: &BigInt) -> Result<i64> {
    if x.is_zero() {
        return Err(Error::ZeroValuation("valuation of 0 is undefined".into()));
    }
    if *p < BigInt::from(2) {
        return Err(Error::InvalidArgument(format!("{} is not a prime", p)));
    }
    Ok(valuation_rat(x, p))
}

/// `±ζ_N^root · Π (1 − ζ_N^k)^{m_k}` with each `k` normalized to `1 ≤ k ≤ N/2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycValue {
    pub n: u32,
    pub negative: bool,
    pub root: u32,
    pub factors: BTreeMap<u32, i32>,
}

impl CycValue {
    fn unit(n: u32) -> Self {
        CycValue { n, negative: false, root: 0, factors: BTreeMap::new() }
    }

    fn root_of(n: u32, e: i64, negative: bool) -> Self {
        CycValue { root: e.rem_euclid(n as i64) as u32, negative, ..Self::unit(n) }
    }

    /// `1 − ζ^k` for `k ≢ 0`, normalized with `1 − ζ^{N−k} = −ζ^{−k}(1 − ζ^k)`.
    fn one_minus(n: u32, k: i64) -> Self {
        let k = k.rem_euclid(n as i64) as u32;
        assert!(k != 0, "1 - ζ^0 vanishes");
        if 2 * k <= n {
            let mut v = Self::unit(n);
            v.factors.insert(k, 1);
            v
        } else {
            let mut v = Self::root_of(n, -((n - k) as i64), true);
            v.factors.insert(n - k, 1);
            v
        }
    }

    fn mul(&self, o: &CycValue) -> CycValue {
        let mut f = self.factors.clone();
        for (k, m) in &o.factors {
            *f.entry(*k).or_insert(0) += m;
        }
        f.retain(|_, m| *m != 0);
        CycValue {
            n: self.n,
            negative: self.negative != o.negative,
            root: (self.root + o.root) % self.n,
            factors: f,
        }
    }

    fn inv(&self) -> CycValue {
        CycValue {
            n: self.n,
            negative: self.negative,
            root: (self.n - self.root) % self.n,
            factors: self.factors.iter().map(|(k, m)| (*k, -m)).collect(),
        }
    }

    /// `v_p` normalized by `v_p(p) = 1`; only `1 − ζ^k` of `p`-power order contributes.
    pub fn valuation(&self, p: &BigInt) -> Q {
        let mut v = Q::zero();
        for (k, m) in &self.factors {
            let ord = self.n / (*k).gcd(&self.n);
            let f = factor(&BigInt::from(ord));
            if f.len() == 1 && f[0].0 == *p {
                v += Q::from_integer(BigInt::from(*m)) / Q::from_integer(BigInt::from(euler_phi(ord)));
            }
        }
        v
    }
}

impl fmt::Display for CycValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.root != 0 {
            parts.push(format!("w{}/{}", self.root, self.n));
        }
        for (k, m) in &self.factors {
            let base = format!("(1 - w{}/{})", k, self.n);
            parts.push(if *m == 1 { base } else { format!("{}^{}", base, m) });
        }
        let body = if parts.is_empty() { "1".to_string() } else { parts.join(" * ") };
        if self.negative {
            write!(f, "-{}", body)
        } else {
            write!(f, "{}", body)
        }
    }
}

fn euler_phi(n: u32) -> u64 {
    factor(&BigInt::from(n)).iter().fold(1u64, |acc, (p, e)| {
        let p: u64 = p.try_into().expect("small prime");
        acc * (p - 1) * p.pow(*e as u32 - 1)
    })
}

/// A value of r̃, either rational or a cyclotomic unit expression.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RTilde {
    Rat(Q),
    Cyc(CycValue),
}

impl RTilde {
    pub fn mul(&self, o: &RTilde) -> Result<RTilde> {
        match (self, o) {
            (RTilde::Rat(a), RTilde::Rat(b)) => Ok(RTilde::Rat(a * b)),
            (RTilde::Cyc(a), RTilde::Cyc(b)) if a.n == b.n => Ok(RTilde::Cyc(a.mul(b))),
            _ => Err(Error::MixedAlphabet("cannot multiply values of different kinds".into())),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            RTilde::Rat(x) => x.is_one(),
            RTilde::Cyc(c) => !c.negative && c.root == 0 && c.factors.is_empty(),
        }
    }

    /// `v_p`, normalized by `v_p(p) = 1`.
    pub fn valuation(&self, p: &BigInt) -> Q {
        match self {
            RTilde::Rat(x) => Q::from_integer(BigInt::from(valuation_rat(x, p))),
            RTilde::Cyc(c) => c.valuation(p),
        }
    }

    /// The primes at which the valuation can be nonzero.
    pub fn support(&self) -> BTreeSet<BigInt> {
        match self {
            RTilde::Rat(x) => factor(x.numer())
                .into_iter()
                .chain(factor(x.denom()))
                .map(|(p, _)| p)
                .collect(),
            RTilde::Cyc(c) => c
                .factors
                .keys()
                .filter_map(|k| {
                    let f = factor(&BigInt::from(c.n / k.gcd(&c.n)));
                    (f.len() == 1).then(|| f[0].0.clone())
                })
                .collect(),
        }
    }
}

impl fmt::Display for RTilde {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RTilde::Rat(x) => write!(f, "{}", x),
            RTilde::Cyc(c) => write!(f, "{}", c),
        }
    }
}

/// A decoration as a point of `μ_N ∪ {0}`: `None` is 0, `Some(e)` is `ζ_N^e`.
type CycPoint = Option<u32>;

enum Alphabet {
    Rat(Vec<Q>),
    Cyc(u32, Vec<CycPoint>),
}

fn classify(decs: &[Dec]) -> Result<Alphabet> {
    let orders: BTreeSet<u32> = decs.iter().filter_map(|d| d.cyc_order()).collect();
    if decs.iter().any(|d| matches!(d, Dec::Sym(_))) {
        return Err(Error::MixedAlphabet("symbolic decorations have no valuation".into()));
    }
    if orders.is_empty() {
        return Ok(Alphabet::Rat(decs.iter().map(|d| d.as_rat().unwrap().clone()).collect()));
    }
    if orders.len() > 1 {
        return Err(Error::MixedAlphabet(format!("roots of unity of orders {:?}", orders)));
    }
    let n = *orders.iter().next().unwrap();
    let pts = decs
        .iter()
        .map(|d| match d {
            Dec::Cyc { k, .. } => Ok(Some(*k)),
            Dec::Rat(x) if x.is_zero() => Ok(None),
            Dec::Rat(x) if x.is_one() => Ok(Some(0)),
            Dec::Rat(x) if *x == -Q::one() && n.is_multiple_of(2) => Ok(Some(n / 2)),
            other => Err(Error::MixedAlphabet(format!("{} is not in μ_{} ∪ {{0}}", other, n))),
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Alphabet::Cyc(n, pts))
}

fn r_rat(a: &Q, b: &Q, c: &Q) -> Q {
    match (a == b, b == c) {
        (false, false) => (c - b) / (a - b),
        (true, false) => c - b,
        (false, true) => (a - b).recip(),
        (true, true) => Q::one(),
    }
}

/// `x − y` for distinct points of `μ_N ∪ {0}`.
fn cyc_diff(n: u32, x: CycPoint, y: CycPoint) -> CycValue {
    match (x, y) {
        (Some(a), Some(b)) => {
            CycValue::root_of(n, a as i64, false).mul(&CycValue::one_minus(n, b as i64 - a as i64))
        }
        (Some(a), None) => CycValue::root_of(n, a as i64, false),
        (None, Some(b)) => CycValue::root_of(n, b as i64, true),
        (None, None) => unreachable!("difference of equal points"),
    }
}

fn r_cyc(n: u32, a: CycPoint, b: CycPoint, c: CycPoint) -> CycValue {
    match (a == b, b == c) {
        (false, false) => cyc_diff(n, c, b).mul(&cyc_diff(n, a, b).inv()),
        (true, false) => cyc_diff(n, c, b),
        (false, true) => cyc_diff(n, a, b).inv(),
        (true, true) => CycValue::unit(n),
    }
}

/// r̃(a, b, c) with the degenerate cases `a = b`, `b = c` and `a = b = c`.
pub fn r_tilde(a: &Dec, b: &Dec, c: &Dec) -> Result<RTilde> {
    match classify(&[a.clone(), b.clone(), c.clone()])? {
        Alphabet::Rat(v) => Ok(RTilde::Rat(r_rat(&v[0], &v[1], &v[2]))),
        Alphabet::Cyc(n, v) => Ok(RTilde::Cyc(r_cyc(n, v[0], v[1], v[2]))),
    }
}

/// The primes of interest for a certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Place {
    Primes(Vec<BigInt>),
    AllPrimes,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    CertifiedUnramified,
    NotCertified,
}

/// A triple of decoration indices whose r̃ has nonzero valuation at `prime`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Witness {
    pub triple: (usize, usize, usize),
    pub prime: BigInt,
    pub valuation: Q,
}

/// Outcome of the r̃ unit test. `NotCertified` does not prove ramification.
#[derive(Clone, Debug)]
pub struct RamReport {
    pub decorations: Vec<Dec>,
    pub place: Place,
    pub verdict: Verdict,
    pub witnesses: Vec<Witness>,
}

impl RamReport {
    /// The primes that carry at least one witness.
    pub fn witness_primes(&self) -> BTreeSet<BigInt> {
        self.witnesses.iter().map(|w| w.prime.clone()).collect()
    }
}

/// Checks that every r̃ over ordered triples of the alphabet is a unit at the
/// primes of interest.
///
/// Triples range over all of `decs³`, so the certificate covers every word
/// whose letters and endpoints come from `decs`.
pub fn unramified_certificate(decs: &[Dec], place: &Place) -> Result<RamReport> {
    if let Place::Primes(ps) = place {
        if let Some(p) = ps.iter().find(|p| **p < BigInt::from(2) || factor(p).len() != 1 || factor(p)[0].1 != 1) {
            return Err(Error::InvalidArgument(format!("{} is not a prime", p)));
        }
    }
    let alphabet = classify(decs)?;
    let n = decs.len();
    let mut witnesses = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let r = match &alphabet {
                    Alphabet::Rat(v) => RTilde::Rat(r_rat(&v[i], &v[j], &v[k])),
                    Alphabet::Cyc(m, v) => RTilde::Cyc(r_cyc(*m, v[i], v[j], v[k])),
                };
                let primes: Vec<BigInt> = match place {
                    Place::Primes(ps) => ps.clone(),
                    Place::AllPrimes => r.support().into_iter().collect(),
                };
                for p in primes {
                    let v = r.valuation(&p);
                    if !v.is_zero() {
                        witnesses.push(Witness { triple: (i, j, k), prime: p, valuation: v });
                    }
                }
            }
        }
    }
    witnesses.sort();
    witnesses.dedup();
    let verdict = if witnesses.is_empty() { Verdict::CertifiedUnramified } else { Verdict::NotCertified };
    Ok(RamReport { decorations: decs.to_vec(), place: place.clone(), verdict, witnesses })
}

/// `μ_N ∪ {0}` as decorations.
pub fn cyclotomic_alphabet(n: u32) -> Vec<Dec> {
    let mut v = vec![Dec::zero()];
    v.extend((0..n as i64).map(|k| Dec::cyc(k, n)));
    v
}

/// Largest degree accepted by [`dim_bound`].
pub const MAX_DIM_DEGREE: usize = 64;

/// Generator dimensions of a graded space together with the graded
/// dimensions of its tensor algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimTable {
    pub generators: Vec<u64>,
    pub dims: Vec<BigInt>,
}

/// `dim T(V)_n` where `dims[k−1] = dim V_k`, summing over compositions by
/// their first part.
pub fn dim_table(dims: &[u64], n: usize) -> Result<DimTable> {
    if n > MAX_DIM_DEGREE {
        return Err(Error::InstanceTooLarge(format!("degree {} exceeds {}", n, MAX_DIM_DEGREE)));
    }
    let mut out = vec![BigInt::one()];
    for m in 1..=n {
        let mut s = BigInt::zero();
        for k in 1..=m.min(dims.len()) {
            if dims[k - 1] != 0 {
                s += BigInt::from(dims[k - 1]) * &out[m - k];
            }
        }
        out.push(s);
    }
    Ok(DimTable { generators: dims.to_vec(), dims: out })
}

/// The degree-`n` entry of [`dim_table`].
pub fn dim_bound(dims: &[u64], n: usize) -> Result<BigInt> {
    Ok(dim_table(dims, n)?.dims.pop().unwrap())
}

/// Generators for `F = ℚ`, `S = ∅`: one in each odd degree `≥ 3`.
pub fn preset_q(n: usize) -> Vec<u64> {
    (1..=n).map(|k| u64::from(k >= 3 && k % 2 == 1)).collect()
}

/// Borel ranks: `rank O_S^*` in degree 1, then `r₁ + r₂` in odd and `r₂`
/// in even degrees.
pub fn preset_borel(r1: u64, r2: u64, unit_rank: u64, n: usize) -> Vec<u64> {
    (1..=n)
        .map(|k| match k {
            1 => unit_rank,
            k if k % 2 == 1 => r1 + r2,
            _ => r2,
        })
        .collect()
}

/// Borel preset for `ℤ[ζ_N][1/N]`.
pub fn preset_cyclotomic(big_n: u32, n: usize) -> Result<Vec<u64>> {
    if big_n == 0 {
        return Err(Error::InvalidArgument("N must be positive".into()));
    }
    if big_n <= 2 {
        return Ok(preset_borel(1, 0, u64::from(big_n == 2), n));
    }
    let r2 = euler_phi(big_n) / 2;
    let mut places = 0u64;
    for (p, e) in factor(&BigInt::from(big_n)) {
        let p: u64 = (&p).try_into().expect("small prime");
        let rest = big_n as u64 / p.pow(e as u32);
        let mut f = 1u64;
        let mut x = p % rest.max(1);
        while rest > 1 && x != 1 {
            x = x * p % rest;
            f += 1;
        }
        places += euler_phi(rest as u32) / f;
    }
    Ok(preset_borel(0, r2, r2 - 1 + places, n))
}
