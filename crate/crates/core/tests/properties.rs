//! Randomized invariants of the kernel.

use iterhopf::arith::{dim_bound, preset_q, r_tilde, unramified_certificate, valuation, Place, Verdict};
use iterhopf::dec::q;
use iterhopf::ideal::relation_ideal_member;
use iterhopf::iterint::{
    antipode, coassociativity_sides, coproduct, counit, counit_slots, mu_s_id, reverse, shuffle_product, word_lc,
    Antipode,
};
use iterhopf::numeric::li_eval;
use iterhopf::path::{compose_auts, pairing_holds, TruncAut};
use iterhopf::polylog::{li_to_word, word_to_li};
use iterhopf::tree::{coproduct_forest, tree_map, tree_map_mono};
use iterhopf::{Dec, IterWord, LinComb, Q};
use num_bigint::BigInt;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn letter() -> impl Strategy<Value = Dec> {
    prop_oneof![
        prop::sample::select(vec!["a", "b", "c"]).prop_map(Dec::sym),
        (0i64..3).prop_map(Dec::int),
    ]
}

fn word(max: usize) -> impl Strategy<Value = IterWord> {
    (letter(), prop::collection::vec(letter(), 0..=max), letter()).prop_map(|(a, ls, b)| IterWord::new(a, ls, b))
}

fn small_alphabet_word(max: usize) -> impl Strategy<Value = IterWord> {
    let l = || prop::sample::select(vec![Dec::sym("a"), Dec::sym("b"), Dec::sym("c"), Dec::int(0)]);
    (l(), prop::collection::vec(l(), 0..=max), l()).prop_map(|(a, ls, b)| IterWord::new(a, ls, b))
}

fn rational() -> impl Strategy<Value = Q> {
    (-40i64..40, 1i64..40).prop_map(|(n, d)| Q::new(n.into(), d.into()))
}

fn primes() -> Vec<BigInt> {
    [2, 3, 5, 7, 11, 13].iter().map(|&p| BigInt::from(p)).collect()
}

fn antipode_right(t: &iterhopf::TensorK, s: &mut Antipode) -> LinComb {
    let mut out = LinComb::zero();
    for (slots, c) in t.terms() {
        out.add_mul_mono(&s.mono(&slots[1]), &slots[0], c);
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn hopf_axioms_on_random_words(w in word(5), v in word(3)) {
        let x = word_lc(&w);
        let (l, r) = coassociativity_sides(&x);
        prop_assert_eq!(l, r);
        let d = coproduct(&x);
        let (cl, cr) = counit_slots(&d);
        prop_assert_eq!(&cl, &x);
        prop_assert_eq!(&cr, &x);
        let y = word_lc(&v);
        prop_assert_eq!(coproduct(&x.mul(&y)), d.mul(&coproduct(&y)));
        let delta = iterhopf::iterint::coproduct_gen;
        let mut s = Antipode::new(&delta);
        let unit = LinComb::scalar(counit(&x));
        prop_assert_eq!(mu_s_id(&d, &mut s), unit.clone());
        prop_assert_eq!(antipode_right(&d, &mut s), unit);
    }

    #[test]
    fn antipode_is_an_involution(w in word(4)) {
        let x = word_lc(&w);
        prop_assert_eq!(antipode(&antipode(&x)), x);
    }

    #[test]
    fn shuffle_is_commutative(a in letter(), b in letter(), u in prop::collection::vec(letter(), 0..3), v in prop::collection::vec(letter(), 0..3)) {
        let wu = IterWord::new(a.clone(), u, b.clone());
        let wv = IterWord::new(a, v, b);
        prop_assert_eq!(shuffle_product(&wu, &wv).unwrap(), shuffle_product(&wv, &wu).unwrap());
    }

    #[test]
    fn reversal_lies_in_the_ideal(w in word(3)) {
        let x = word_lc(&w).sub(&reverse(&w));
        let alphabet: Vec<Dec> = w.decorations();
        prop_assert!(relation_ideal_member(&x, &alphabet, w.weight()).unwrap());
    }

    #[test]
    fn tree_map_commutes_with_coproduct(w in word(4)) {
        let lhs = coproduct(&word_lc(&w)).map_each(&tree_map_mono);
        prop_assert_eq!(lhs, coproduct_forest(&tree_map(&w)));
    }

    #[test]
    fn r_tilde_is_a_cocycle(a in rational(), b in rational(), c in rational(), d in rational()) {
        prop_assume!(a != b && c != b && d != b);
        let (a, b, c, d) = (Dec::rat(a), Dec::rat(b), Dec::rat(c), Dec::rat(d));
        let lhs = r_tilde(&a, &b, &c).unwrap().mul(&r_tilde(&c, &b, &d).unwrap()).unwrap();
        prop_assert_eq!(lhs.clone(), r_tilde(&a, &b, &d).unwrap());
        for p in primes() {
            let v = r_tilde(&a, &b, &c).unwrap().valuation(&p) + r_tilde(&c, &b, &d).unwrap().valuation(&p);
            prop_assert_eq!(v, lhs.valuation(&p));
        }
    }

    #[test]
    fn valuation_is_additive(x in rational(), y in rational(), pi in 0usize..6) {
        prop_assume!(x != q(0) && y != q(0));
        let p = &primes()[pi];
        prop_assert_eq!(valuation(&(&x * &y), p).unwrap(), valuation(&x, p).unwrap() + valuation(&y, p).unwrap());
    }

    #[test]
    fn certificates_are_monotone_in_the_prime_set(xs in prop::collection::vec(-12i64..12, 2..5), mask in 1u32..64) {
        let decs: Vec<Dec> = xs.into_iter().map(Dec::int).collect();
        let all = primes();
        let subset: Vec<BigInt> = all.iter().enumerate().filter(|(i, _)| mask & (1 << i) != 0).map(|(_, p)| p.clone()).collect();
        let big = unramified_certificate(&decs, &Place::Primes(all)).unwrap();
        let small = unramified_certificate(&decs, &Place::Primes(subset.clone())).unwrap();
        if big.verdict == Verdict::CertifiedUnramified {
            prop_assert_eq!(small.verdict, Verdict::CertifiedUnramified);
        }
        let expected: std::collections::BTreeSet<BigInt> = big.witness_primes().into_iter().filter(|p| subset.contains(p)).collect();
        prop_assert_eq!(small.witness_primes(), expected);
    }

    #[test]
    fn li_truncation_bound_covers_doubling(ns in prop::collection::vec(1u32..4, 1..4), xs in prop::collection::vec(-8i64..=8, 3), k in 8usize..40) {
        let xs: Vec<Q> = xs.into_iter().take(ns.len()).map(|n| Q::new(n.into(), 10.into())).collect();
        prop_assume!(xs.iter().all(|x| *x != q(0)));
        let coarse = li_eval(&ns, &xs, k).unwrap();
        let fine = li_eval(&ns, &xs, 2 * k).unwrap();
        prop_assert!((coarse.value - fine.value).abs() <= coarse.error_bound + fine.error_bound);
    }

    #[test]
    fn word_to_li_inverts_li_to_word(ns in prop::collection::vec(1u32..4, 1..4), names in prop::collection::vec(prop::sample::select(vec!["x", "y", "z"]), 3)) {
        let xs: Vec<Dec> = names.into_iter().take(ns.len()).map(Dec::sym).collect();
        let (s1, w) = li_to_word(&ns, &xs).unwrap();
        let (s2, li) = word_to_li(&w).unwrap();
        prop_assert_eq!(s1 * s2, 1);
        prop_assert_eq!(li.ns, ns);
        prop_assert_eq!(li.xs, xs);
    }

    #[test]
    fn q_preset_recurrence(n in 3usize..=64) {
        let d = |k: usize| dim_bound(&preset_q(k), k).unwrap();
        prop_assert_eq!(d(n), d(n - 2) + d(n - 3));
    }

    #[test]
    fn pairing_holds_for_random_automorphisms(seed in any::<u64>(), w in small_alphabet_word(3)) {
        let alphabet: Vec<Dec> = w.decorations().into_iter().collect::<std::collections::BTreeSet<_>>().into_iter().collect();
        let d = w.weight().max(1);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = TruncAut::random(&alphabet, d, &mut rng).unwrap();
        let g = TruncAut::random(&alphabet, d, &mut rng).unwrap();
        let h = compose_auts(&f, &g).unwrap();
        prop_assert!(pairing_holds(&w, &f, &g, &h).unwrap());
    }
}
