//! Exact linear algebra: incremental fraction-free echelon forms over sparse
//! integer rows, and rational null spaces.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::dec::Q;

/// A sparse integer row, sorted by column, without zero entries.
pub type SparseRow = Vec<(usize, BigInt)>;

fn content_normalize(row: &mut SparseRow) {
    let mut g = BigInt::zero();
    for (_, v) in row.iter() {
        g = g.gcd(v);
        if g.is_one() {
            break;
        }
    }
    if row.first().map(|(_, v)| v.is_negative()).unwrap_or(false) {
        g = -g;
    }
    if !g.is_zero() && !g.is_one() {
        for (_, v) in row.iter_mut() {
            *v /= &g;
        }
    }
}

/// `a·x − b·y` on sparse rows.
fn combine(x: &SparseRow, a: &BigInt, y: &SparseRow, b: &BigInt) -> SparseRow {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let ci = x.get(i).map(|e| e.0).unwrap_or(usize::MAX);
        let cj = y.get(j).map(|e| e.0).unwrap_or(usize::MAX);
        let (c, v) = if ci < cj {
            i += 1;
            (ci, a * &x[i - 1].1)
        } else if cj < ci {
            j += 1;
            (cj, -(b * &y[j - 1].1))
        } else {
            i += 1;
            j += 1;
            (ci, a * &x[i - 1].1 - b * &y[j - 1].1)
        };
        if !v.is_zero() {
            out.push((c, v));
        }
    }
    out
}

/// Integer rows in echelon form by leading column, grown one row at a time.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: Vec<SparseRow>,
    pivot_of: BTreeMap<usize, usize>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Eliminates leading entries until the leading column has no pivot.
    pub fn reduce(&self, v: &SparseRow) -> SparseRow {
        let mut v = v.clone();
        content_normalize(&mut v);
        while let Some((c, vc)) = v.first().cloned() {
            let Some(&r) = self.pivot_of.get(&c) else { break };
            let row = &self.rows[r];
            let p = &row[0].1;
            let g = p.gcd(&vc);
            v = combine(&v, &(p / &g), row, &(&vc / &g));
            content_normalize(&mut v);
        }
        v
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: &SparseRow) -> bool {
        let r = self.reduce(v);
        match r.first() {
            None => false,
            Some((c, _)) => {
                self.pivot_of.insert(*c, self.rows.len());
                self.rows.push(r);
                true
            }
        }
    }

    pub fn contains(&self, v: &SparseRow) -> bool {
        self.reduce(v).is_empty()
    }
}

/// Clears denominators of a rational row.
pub fn integer_row(v: &[(usize, Q)]) -> SparseRow {
    let mut l = BigInt::one();
    for (_, x) in v {
        l = l.lcm(x.denom());
    }
    let mut out: SparseRow = v
        .iter()
        .filter(|(_, x)| !x.is_zero())
        .map(|(c, x)| (*c, x.numer() * (&l / x.denom())))
        .collect();
    out.sort_by_key(|e| e.0);
    out
}

/// A basis of `{x : A x = 0}` for a dense rational matrix with `ncols` columns.
pub fn null_space(a: &[Vec<Q>], ncols: usize) -> Vec<Vec<Q>> {
    let mut m: Vec<Vec<Q>> = a.to_vec();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else { continue };
        m.swap(row, p);
        let inv = Q::one() / &m[row][col];
        for x in m[row].iter_mut() {
            *x *= &inv;
        }
        for r in 0..m.len() {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in 0..ncols {
                    let d = &f * &m[row][c];
                    m[r][c] -= d;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == m.len() {
            break;
        }
    }
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Q::zero(); ncols];
        v[free] = Q::one();
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = -m[r][free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Rank of a dense rational matrix.
pub fn rank(a: &[Vec<Q>]) -> usize {
    let mut e = Echelon::new();
    for r in a {
        let row: Vec<(usize, Q)> = r.iter().cloned().enumerate().collect();
        e.insert(&integer_row(&row));
    }
    e.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dec::{q, qf};

    fn row(v: &[i64]) -> SparseRow {
        v.iter()
            .enumerate()
            .filter(|(_, x)| **x != 0)
            .map(|(c, x)| (c, BigInt::from(*x)))
            .collect()
    }

    #[test]
    fn echelon_span_membership() {
        let mut e = Echelon::new();
        assert!(e.insert(&row(&[2, 4, 0])));
        assert!(e.insert(&row(&[0, 3, 3])));
        assert!(!e.insert(&row(&[2, 7, 3])));
        assert!(e.contains(&row(&[4, 5, -3])));
        assert!(!e.contains(&row(&[0, 0, 1])));
        assert_eq!(e.rank(), 2);
    }

    #[test]
    fn null_space_of_rank_one() {
        let a = vec![vec![q(1), q(2), q(3)], vec![q(2), q(4), q(6)]];
        let ns = null_space(&a, 3);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            let dot: Q = a[0].iter().zip(v).map(|(x, y)| x * y).sum();
            assert!(dot.is_zero());
        }
        assert_eq!(rank(&a), 1);
        assert_eq!(integer_row(&[(0, qf(1, 2)), (2, qf(1, 3))]), row(&[3, 0, 2]));
    }
}
