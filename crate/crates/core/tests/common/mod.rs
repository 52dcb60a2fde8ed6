//! Expected depth-two coproduct formulas built independently of the engine.

#![allow(dead_code)]

use std::collections::BTreeMap;

use iterhopf::coeff::{LinComb, TensorK};
use iterhopf::dec::{log_of, q, qf, Dec};
use iterhopf::polylog::{li_coproduct_at, reduce_coproduct, symbol2, LiSym};
use iterhopf::series::{form_neg, form_sub, gen_series_at, power_series, rescale_lc, var, LinForm, Series, TensorSeries};

pub fn li(ns: &[u32], xs: &[Dec]) -> LinComb {
    LiSym::new(ns.to_vec(), xs.to_vec()).unwrap().to_lc().unwrap()
}

/// The five-term depth-two generating-series coproduct of `I(0; a₁, a₂; 1)`
/// in the variables `t₁, t₂`, rescaled to endpoint 1.
pub fn depth2_five_terms(a1: &Dec, a2: &Dec, d: usize) -> TensorSeries {
    let z: LinForm = vec![0, 0, 0];
    let (t1, t2) = (var(3, 1), var(3, 2));
    let g = |decs: &[Dec], f: &[LinForm]| gen_series_at(decs, f, 3, d);
    let pw = |a: &Dec, f: &LinForm| power_series(a, f, d);
    let full = g(&[Dec::zero(), a1.clone(), a2.clone(), Dec::one()], &[z.clone(), t1.clone(), t2.clone()]);
    let mut ex = TensorSeries::zero(3, d);
    ex.add_product(&Series::one(3, d), &full, &q(1));
    ex.add_product(&full, &pw(a1, &form_neg(&t1)).mul(&pw(a2, &form_sub(&t1, &t2))), &q(1));
    ex.add_product(
        &g(&[Dec::zero(), a1.clone(), Dec::one()], &[z.clone(), t1.clone()]),
        &pw(a1, &form_neg(&t1)).mul(&g(&[Dec::zero(), a2.clone(), Dec::one()], &[z.clone(), form_sub(&t2, &t1)])),
        &q(1),
    );
    ex.add_product(
        &g(&[Dec::zero(), a1.clone(), Dec::one()], &[z.clone(), t2.clone()]),
        &pw(a1, &form_neg(&t2)).mul(&g(&[Dec::zero(), a2.clone(), a1.clone()], &[z.clone(), form_sub(&t2, &t1)])),
        &q(-1),
    );
    ex.add_product(
        &g(&[Dec::zero(), a2.clone(), Dec::one()], &[z.clone(), t2.clone()]),
        &g(&[Dec::zero(), a1.clone(), a2.clone()], &[z, t1]).mul(&pw(a2, &form_neg(&t2))),
        &q(1),
    );
    ex.map_each(&|m| rescale_lc(&LinComb::from_mono(m.clone())).unwrap())
}

pub struct Display65 {
    pub ns: [u32; 2],
    pub printed: TensorK,
    pub corrected: TensorK,
}

/// The weight-three depth-two displays, as printed and with the
/// weight-inconsistent terms repaired.
pub fn displays_65() -> Vec<Display65> {
    let (x, y) = (Dec::sym("x"), Dec::sym("y"));
    let xy = x.mul(&y).unwrap();
    let (lx, lxy, ly) = (log_of(&x), log_of(&xy), log_of(&y));
    let half_sq = lx.pow(2).scale(&qf(1, 2));
    let li1 = |a: &Dec| li(&[1], std::slice::from_ref(a));
    let li2 = |a: &Dec| li(&[2], std::slice::from_ref(a));
    let l11 = li(&[1, 1], &[x.clone(), y.clone()]);

    let mut common21 = TensorK::zero(2);
    common21.add_pure(&[l11.clone(), lx.clone()], &q(1));
    common21.add_pure(&[li1(&y), li2(&x)], &q(1));
    common21.add_pure(&[li2(&xy), li1(&y)], &q(1));
    let mut printed21 = common21.clone();
    let inner = li2(&x).add(&li2(&y)).sub(&li1(&y).mul(&lxy.add(&half_sq)));
    printed21.add_pure(&[li1(&xy), inner], &q(-1));
    let mut corrected21 = common21;
    let inner = li2(&x).add(&li2(&y)).sub(&li1(&y).mul(&lxy)).add(&half_sq);
    corrected21.add_pure(&[li1(&xy), inner], &q(-1));

    let mut common12 = TensorK::zero(2);
    common12.add_pure(&[l11, ly.clone()], &q(1));
    common12.add_pure(&[li2(&xy), lx.clone()], &q(-1));
    common12.add_pure(&[li2(&y), li1(&x)], &q(1));
    common12.add_pure(&[li1(&y), li1(&x).mul(&ly)], &q(1));
    common12.add_pure(&[li1(&xy), li2(&y)], &q(1));
    common12.add_pure(&[li2(&xy), li1(&x)], &q(-1));
    common12.add_pure(&[li1(&xy), li1(&x).mul(&lxy)], &q(-1));
    let mut printed12 = common12.clone();
    printed12.add_pure(&[li1(&xy), lxy.clone()], &q(-1));
    printed12.add_pure(&[li1(&xy), li2(&x)], &q(-1));
    let mut corrected12 = common12;
    corrected12.add_pure(&[li1(&xy), lxy.mul(&lx).sub(&half_sq)], &q(-1));
    corrected12.add_pure(&[li1(&xy), li2(&x)], &q(1));

    vec![
        Display65 { ns: [2, 1], printed: printed21, corrected: corrected21 },
        Display65 { ns: [1, 2], printed: printed12, corrected: corrected12 },
    ]
}

/// The reduced coproduct of `Li_{n₁,n₂}(x, y)` from the generating-series engine.
pub fn engine_reduced(ns: &[u32; 2]) -> TensorK {
    let xs = [Dec::sym("x"), Dec::sym("y")];
    let t = li_coproduct_at(ns, &xs).unwrap();
    reduce_coproduct(&t, &li(ns, &xs))
}

/// Symbol of `a − b` in every bidegree, keeping only nonzero parts.
pub fn symbol_difference(a: &TensorK, b: &TensorK) -> BTreeMap<(usize, usize), TensorK> {
    let sa = symbol2(a).unwrap();
    let sb = symbol2(b).unwrap();
    let mut out = BTreeMap::new();
    for k in sa.keys().chain(sb.keys()) {
        let z = TensorK::zero(k.0 + k.1);
        let d = sa.get(k).unwrap_or(&z).sub(sb.get(k).unwrap_or(&z));
        if !d.is_zero() {
            out.insert(*k, d);
        }
    }
    out
}

/// Whether two tensors in the polylogarithm layer agree up to torsion and
/// products of constants, as detected by the symbol.
pub fn same_symbol(a: &TensorK, b: &TensorK) -> bool {
    symbol_difference(a, b).is_empty()
}
