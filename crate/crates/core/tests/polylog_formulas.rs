mod common;

use common::{depth2_five_terms, displays_65, engine_reduced, li, same_symbol, symbol_difference};
use iterhopf::coeff::TensorK;
use iterhopf::dec::Dec;
use iterhopf::polylog::{li_coproduct_at, polylog_coproduct, reduce_coproduct, symbol, symbol2};

#[test]
fn depth_two_five_term_formula_is_exact() {
    let (a1, a2) = (Dec::sym("a"), Dec::sym("b"));
    let engine = polylog_coproduct(&[a1.clone(), a2.clone()], 4).unwrap();
    assert!(engine.sub(&depth2_five_terms(&a1, &a2, 4)).is_zero());
}

#[test]
fn engine_coproduct_deconcatenates_the_symbol() {
    let xs = [Dec::sym("x"), Dec::sym("y")];
    for ns in [[2u32, 1], [1, 2], [1, 1]] {
        let x = li(&ns, &xs);
        let red = reduce_coproduct(&li_coproduct_at(&ns, &xs).unwrap(), &x);
        let s2 = symbol2(&red).unwrap();
        let s = symbol(&x).unwrap();
        let w = (ns[0] + ns[1]) as usize;
        for k in 1..w {
            let z = TensorK::zero(w);
            assert_eq!(s2.get(&(k, w - k)).unwrap_or(&z), s.get(&w).unwrap(), "{:?} at {}", ns, k);
        }
    }
}

#[test]
fn repaired_weight_three_displays_match_engine() {
    for d in displays_65() {
        assert!(same_symbol(&engine_reduced(&d.ns), &d.corrected), "Li{:?}", d.ns);
    }
}

#[test]
fn printed_weight_three_displays_are_weight_inconsistent() {
    for d in displays_65() {
        let diff = symbol_difference(&engine_reduced(&d.ns), &d.printed);
        assert!(!diff.is_empty());
        assert!(diff.keys().any(|(l, r)| l + r != 3), "Li{:?}", d.ns);
    }
}
