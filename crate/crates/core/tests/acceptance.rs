//! One pass/fail line per acceptance criterion.
//!
//! Criterion 7 asks for the weight-three depth-two displays exactly as
//! printed. Those displays contain weight-inconsistent terms, so that part
//! cannot hold; the line reports FAIL and the test pins that outcome.

mod common;

use std::collections::BTreeSet;
use std::io::Write;
use std::time::Instant;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{depth2_five_terms, displays_65, engine_reduced, li, same_symbol, symbol_difference};
use iterhopf::arith::{cyclotomic_alphabet, dim_table, preset_q, unramified_certificate, Place};
use iterhopf::coeff::{Generator, LinComb, TensorK, Wedge2};
use iterhopf::dec::{factor, log_of, q, qf, Dec, Q};
use iterhopf::ideal::{relation_ideal_member, tensor_in_ideal};
use iterhopf::iterint::{
    coassociativity_sides, coproduct, coproduct_word, counit, counit_slots, delta_m,
    delta_m_raw_count, mu_s_id, reverse, word_lc, Antipode,
};
use iterhopf::numeric::{li_eval, shuffle_residual, stuffle_residual};
use iterhopf::path::{compose_auts, pairing_holds, TruncAut};
use iterhopf::polylog::{
    depth2_cobracket_with, dihedral_kernel, li_coproduct_at, polylog_coproduct, reduce_coproduct, Depth2Variant,
    zeta_cobracket_series, LiSym, ZetaMode,
};
use iterhopf::series::{series_coproduct_marked, series_coproduct_raw};
use iterhopf::tree::{catalan, coproduct_forest, enumerate_trees, omega, tree_map, tree_map_mono};
use iterhopf::IterWord;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn syms(names: &[&str]) -> Vec<Dec> {
    names.iter().map(|n| Dec::sym(n)).collect()
}

/// Every word `I(a₀; a₁…aₙ; aₙ₊₁)` with all entries from `alphabet`.
fn all_words(alphabet: &[Dec], weight: usize) -> Vec<IterWord> {
    let len = weight + 2;
    let mut out = Vec::new();
    let mut idx = vec![0usize; len];
    loop {
        let e: Vec<Dec> = idx.iter().map(|&i| alphabet[i].clone()).collect();
        out.push(IterWord::new(e[0].clone(), e[1..len - 1].to_vec(), e[len - 1].clone()));
        let mut k = 0;
        while k < len {
            idx[k] += 1;
            if idx[k] < alphabet.len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
        if k == len {
            return out;
        }
    }
}

fn words_up_to(alphabet: &[Dec], max_weight: usize) -> Vec<IterWord> {
    (0..=max_weight).flat_map(|n| all_words(alphabet, n)).collect()
}

fn random_word<R: Rng>(alphabet: &[Dec], max_weight: usize, rng: &mut R) -> IterWord {
    let n = rng.gen_range(0..=max_weight);
    let mut pick = || alphabet[rng.gen_range(0..alphabet.len())].clone();
    let a0 = pick();
    let letters = (0..n).map(|_| pick()).collect();
    IterWord::new(a0, letters, pick())
}

fn c1_golden() -> Outcome {
    let lc = |a: &str, ls: &[&str], b: &str| word_lc(&IterWord::parse_names(a, ls, b));
    let mut m2 = TensorK::zero(2);
    m2.add_pure(&[LinComb::one(), lc("a0", &["a1", "a2"], "a3")], &q(1));
    m2.add_pure(&[lc("a0", &["a1"], "a3"), lc("a1", &["a2"], "a3")], &q(1));
    m2.add_pure(&[lc("a0", &["a2"], "a3"), lc("a0", &["a1"], "a2")], &q(1));
    m2.add_pure(&[lc("a0", &["a1", "a2"], "a3"), LinComb::one()], &q(1));
    let mut m3 = TensorK::zero(2);
    m3.add_pure(&[LinComb::one(), lc("a0", &["a1", "a2", "a3"], "a4")], &q(1));
    m3.add_pure(&[lc("a0", &["a1"], "a4"), lc("a1", &["a2", "a3"], "a4")], &q(1));
    m3.add_pure(&[lc("a0", &["a2"], "a4"), lc("a0", &["a1"], "a2").mul(&lc("a2", &["a3"], "a4"))], &q(1));
    m3.add_pure(&[lc("a0", &["a3"], "a4"), lc("a0", &["a1", "a2"], "a3")], &q(1));
    m3.add_pure(&[lc("a0", &["a1", "a2"], "a4"), lc("a2", &["a3"], "a4")], &q(1));
    m3.add_pure(&[lc("a0", &["a1", "a3"], "a4"), lc("a1", &["a2"], "a3")], &q(1));
    m3.add_pure(&[lc("a0", &["a2", "a3"], "a4"), lc("a0", &["a1"], "a2")], &q(1));
    m3.add_pure(&[lc("a0", &["a1", "a2", "a3"], "a4"), LinComb::one()], &q(1));
    let golden2 = "1 (x) I(a0; a1, a2; a3) + I(a0; a1; a3) (x) I(a1; a2; a3) + I(a0; a1, a2; a3) (x) 1 \
                   + I(a0; a2; a3) (x) I(a0; a1; a2)";
    let golden3 = "1 (x) I(a0; a1, a2, a3; a4) + I(a0; a1; a4) (x) I(a1; a2, a3; a4) \
                   + I(a0; a1, a2; a4) (x) I(a2; a3; a4) + I(a0; a1, a2, a3; a4) (x) 1 \
                   + I(a0; a1, a3; a4) (x) I(a1; a2; a3) + I(a0; a2; a4) (x) I(a0; a1; a2)*I(a2; a3; a4) \
                   + I(a0; a2, a3; a4) (x) I(a0; a1; a2) + I(a0; a3; a4) (x) I(a0; a1, a2; a3)";
    let e2 = coproduct_word(&IterWord::parse_names("a0", &["a1", "a2"], "a3"));
    let e3 = coproduct_word(&IterWord::parse_names("a0", &["a1", "a2", "a3"], "a4"));
    let ok2 = e2 == m2 && e2.to_string() == golden2 && e2.len() == 4;
    let ok3 = e3 == m3 && e3.to_string() == golden3 && e3.len() == 8;
    outcome(ok2 && ok3, format!("weight 2: {} terms {}, weight 3: {} terms {}", e2.len(), ok2, e3.len(), ok3))
}

fn antipode_right(t: &TensorK, s: &mut Antipode) -> LinComb {
    let mut out = LinComb::zero();
    for (slots, c) in t.terms() {
        out.add_mul_mono(&s.mono(&slots[1]), &slots[0], c);
    }
    out
}

fn hopf_axioms(x: &LinComb, y: &LinComb, s: &mut Antipode) -> Result<(), String> {
    let (l, r) = coassociativity_sides(x);
    if l != r {
        return Err(format!("coassociativity fails at {}", x));
    }
    let d = coproduct(x);
    let (cl, cr) = counit_slots(&d);
    if cl != *x || cr != *x {
        return Err(format!("counit fails at {}", x));
    }
    if coproduct(&x.mul(y)) != d.mul(&coproduct(y)) {
        return Err(format!("algebra morphism fails at {} * {}", x, y));
    }
    let unit = LinComb::scalar(counit(x));
    if mu_s_id(&d, s) != unit || antipode_right(&d, s) != unit {
        return Err(format!("antipode fails at {}", x));
    }
    Ok(())
}

fn c2_hopf() -> Outcome {
    let al = syms(&["a", "b", "c"]);
    let words = words_up_to(&al, 5);
    let coproduct_gen = iterhopf::iterint::coproduct_gen;
    let mut s = Antipode::new(&coproduct_gen);
    let lcs: Vec<LinComb> = words.iter().map(word_lc).collect();
    for (i, x) in lcs.iter().enumerate() {
        let y = &lcs[(i * 7 + 1) % lcs.len()];
        if let Err(e) = hopf_axioms(x, y, &mut s) {
            return outcome(false, e);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let random: Vec<IterWord> = (0..200).map(|_| random_word(&al, 8, &mut rng)).collect();
    for (i, w) in random.iter().enumerate() {
        let y = word_lc(&random[(i + 1) % random.len()]);
        let y = if y.max_weight() + w.weight() > 10 { word_lc(&random_word(&al, 2, &mut rng)) } else { y };
        if let Err(e) = hopf_axioms(&word_lc(w), &y, &mut s) {
            return outcome(false, e);
        }
    }
    outcome(true, format!("{} words of weight <= 5 and 200 random words of weight <= 8", words.len()))
}

fn c3_trees() -> Outcome {
    for m in 1..=8 {
        let decs: Vec<Dec> = (0..m + 2).map(|k| Dec::sym(&format!("a{}", k))).collect();
        if enumerate_trees(&decs).len() as u64 != catalan(m) {
            return outcome(false, format!("tree count differs from Catalan({})", m));
        }
    }
    let mut checked = 0;
    let generic: Vec<IterWord> = (1..=5)
        .map(|n| {
            let d: Vec<Dec> = (0..n + 2).map(|k| Dec::sym(&format!("a{}", k))).collect();
            IterWord::new(d[0].clone(), d[1..=n].to_vec(), d[n + 1].clone())
        })
        .collect();
    let small = words_up_to(&syms(&["a", "b"]), 5).into_iter().filter(|w| w.weight() >= 1);
    for w in generic.into_iter().chain(small) {
        let lhs = coproduct(&word_lc(&w)).map_each(&tree_map_mono);
        let rhs = coproduct_forest(&tree_map(&w));
        if lhs != rhs {
            return outcome(false, format!("tree map not compatible at {}", w));
        }
        checked += 1;
    }
    outcome(true, format!("Catalan counts m <= 8, compatibility on {} generators", checked))
}

fn c4_omega() -> Outcome {
    let mut fact = 1u64;
    for m in 1..=4usize {
        fact *= m as u64;
        let decs: Vec<Dec> = (0..m + 2).map(|k| Dec::sym(&format!("a{}", k))).collect();
        let o = omega(&decs);
        let w = IterWord::new(decs[0].clone(), decs[1..=m].to_vec(), decs[m + 1].clone());
        if o.tensor != delta_m(&w) {
            return outcome(false, format!("Omega_{} differs from Delta^[{}]", m, m));
        }
        if o.raw_terms != fact || delta_m_raw_count(m) != fact {
            return outcome(false, format!("term count {} at m = {}", o.raw_terms, m));
        }
    }
    outcome(true, "Omega_m = Delta^[m] and term counts m! for m <= 4")
}

fn c5_pairing() -> Outcome {
    let al = syms(&["a", "b", "c"]);
    let words = words_up_to(&al, 4);
    let mut rng = ChaCha8Rng::seed_from_u64(2005);
    for pair in 0..50 {
        let f = TruncAut::random(&al, 4, &mut rng).unwrap();
        let g = TruncAut::random(&al, 4, &mut rng).unwrap();
        let h = compose_auts(&f, &g).unwrap();
        for w in &words {
            if !pairing_holds(w, &f, &g, &h).unwrap() {
                return outcome(false, format!("pair {} fails at {}", pair, w));
            }
        }
    }
    outcome(true, format!("{} words x 50 automorphism pairs", words.len()))
}

fn c6_ideal() -> Outcome {
    let two = syms(&["a", "b"]);
    let mut reversals = 0;
    for w in words_up_to(&two, 3) {
        let d = word_lc(&w).sub(&reverse(&w));
        if !relation_ideal_member(&d, &two, 3).unwrap() {
            return outcome(false, format!("reversal of {} not in the ideal", w));
        }
        reversals += 1;
    }
    let al = vec![Dec::zero(), Dec::one(), Dec::sym("a")];
    let mut cases = 0;
    for m in 1..=2usize {
        for w in all_words(&al, m) {
            let mut decs = vec![w.a0.clone()];
            decs.extend(w.letters.iter().cloned());
            decs.push(w.a_end.clone());
            let diff = series_coproduct_marked(&decs, 4 - m).sub(&series_coproduct_raw(&decs, 4 - m));
            if diff.terms().any(|(_, t)| !tensor_in_ideal(t)) {
                return outcome(false, format!("marked and raw differ outside the ideal at {:?}", decs));
            }
            cases += 1;
        }
    }
    outcome(true, format!("{} reversals, {} decoration sequences up to weight 4", reversals, cases))
}

fn c7_polylog() -> Outcome {
    let x = Dec::sym("x");
    let mut classical = true;
    for n in 1..=5u32 {
        let t = li_coproduct_at(&[n], std::slice::from_ref(&x)).unwrap();
        let lin = |k: u32| li(&[k], std::slice::from_ref(&x));
        let mut expect = TensorK::zero(2);
        let mut fact = Q::from_integer(1.into());
        for k in 1..n {
            fact *= q(k as i64);
            expect.add_pure(&[lin(n - k), log_of(&x).pow(k)], &(Q::from_integer(1.into()) / &fact));
        }
        classical &= reduce_coproduct(&t, &lin(n)) == expect;
    }
    let (a1, a2) = (Dec::sym("a"), Dec::sym("b"));
    let five = polylog_coproduct(&[a1.clone(), a2.clone()], 4).unwrap().sub(&depth2_five_terms(&a1, &a2, 4)).is_zero();
    let mut printed = Vec::new();
    let mut repaired = true;
    for d in displays_65() {
        let engine = engine_reduced(&d.ns);
        let diff = symbol_difference(&engine, &d.printed);
        let bad: BTreeSet<(usize, usize)> = diff.keys().cloned().collect();
        printed.push(format!("Li{:?} printed: {}", d.ns, if bad.is_empty() { "ok".into() } else { format!("symbol differs in {:?}", bad) }));
        repaired &= same_symbol(&engine, &d.corrected);
    }
    let printed_ok = printed.iter().all(|s| s.ends_with("ok"));
    outcome(
        classical && five && printed_ok,
        format!(
            "Li_n n <= 5: {}, five-term depth 2 at D = 4: {}, {}, repaired displays: {}",
            classical,
            five,
            printed.join(", "),
            repaired
        ),
    )
}

fn c8_zeta() -> Outcome {
    let one = Dec::one();
    let z = |n: u32| LinComb::from_gen(Generator::Zeta(vec![n]));
    let mut expect = Wedge2::zero();
    expect.add_wedge_lc(&z(3), &z(5), &q(-5));
    let consistent = depth2_cobracket_with(3, 5, &one, &one, ZetaMode::Motivic, Depth2Variant::Consistent).unwrap();
    let printed = depth2_cobracket_with(3, 5, &one, &one, ZetaMode::Motivic, Depth2Variant::Printed).unwrap();
    let series = zeta_cobracket_series(8, ZetaMode::Motivic).unwrap()[&(3, 5)].clone();
    let explicit_ok = consistent == expect && printed == expect;
    let series_ok = series == expect;
    let mut dims = Vec::new();
    let mut kernel_ok = true;
    for w in 4..=12 {
        let r = dihedral_kernel(w).unwrap();
        kernel_ok &= r.relations_in_kernel && r.kernel_equals_relations;
        dims.push(format!("{}:{}", w, r.kernel.len()));
    }
    outcome(
        explicit_ok && series_ok && kernel_ok,
        format!(
            "explicit {}, series {}, dihedral kernel w 4..12 [{}]: {}",
            explicit_ok,
            series_ok,
            dims.join(" "),
            kernel_ok
        ),
    )
}

fn c9_arith() -> Outcome {
    for n in 1..=12u32 {
        let rep = unramified_certificate(&cyclotomic_alphabet(n), &Place::AllPrimes).unwrap();
        let divisors: BTreeSet<BigInt> = factor(&BigInt::from(n)).into_iter().map(|(p, _)| p).collect();
        if !rep.witness_primes().is_subset(&divisors) {
            return outcome(false, format!("mu_{} reports primes {:?}", n, rep.witness_primes()));
        }
    }
    let t = dim_table(&preset_q(40), 40).unwrap();
    let want = [1, 0, 0, 1, 0, 1, 1, 1, 2, 2, 3, 4, 5];
    let table_ok = want.iter().enumerate().all(|(n, w)| t.dims[n] == BigInt::from(*w));
    let rec_ok = (3..=40).all(|n| t.dims[n] == &t.dims[n - 2] + &t.dims[n - 3]);
    outcome(
        table_ok && rec_ok,
        format!("mu_N certificates N <= 12, Q table {}, recurrence to 40 {}", table_ok, rec_ok),
    )
}

fn stuffle_grid() -> Vec<(u32, u32, f64, f64)> {
    let idx = [(1, 1), (1, 2), (2, 1), (2, 2), (2, 3), (3, 2), (1, 3), (3, 3), (4, 1), (1, 4)];
    let pts = [(0.3, 0.2), (-0.5, 0.7)];
    idx.iter().flat_map(|&(n, m)| pts.iter().map(move |&(x, y)| (n, m, x, y))).collect()
}

fn shuffle_grid() -> Vec<(LiSym, LiSym)> {
    let li = |ns: &[u32], xs: &[(i64, i64)]| {
        LiSym::new(ns.to_vec(), xs.iter().map(|(p, d)| Dec::rat(qf(*p, *d))).collect()).unwrap()
    };
    let depth1 = [[1u32], [2], [3]];
    let args = [(3, 10), (1, 5), (-1, 2), (7, 10)];
    let mut out = Vec::new();
    for (i, n) in depth1.iter().enumerate() {
        for (j, m) in depth1.iter().enumerate().skip(i) {
            out.push((li(n, &[args[i]]), li(m, &[args[(j + 1) % 4]])));
        }
    }
    out.push((li(&[1, 1], &[(1, 2), (2, 5)]), li(&[1], &[(1, 4)])));
    out.push((li(&[2, 1], &[(-1, 3), (3, 5)]), li(&[1], &[(1, 2)])));
    out.push((li(&[1, 2], &[(1, 2), (2, 5)]), li(&[2], &[(-1, 3)])));
    out.push((li(&[1, 1], &[(3, 4), (1, 5)]), li(&[1, 1], &[(1, 3), (-1, 2)])));
    out.push((li(&[3], &[(1, 10)]), li(&[1, 1], &[(2, 3), (1, 2)])));
    out.push((li(&[2], &[(-7, 10)]), li(&[2], &[(7, 10)])));
    out.push((li(&[1], &[(1, 4)]), li(&[1], &[(1, 4)])));
    out.push((li(&[2], &[(1, 4)]), li(&[1], &[(1, 4)])));
    out.push((li(&[1, 1, 1], &[(1, 2), (1, 2), (1, 2)]), li(&[1], &[(-1, 5)])));
    out.push((li(&[1, 2], &[(4, 5), (1, 2)]), li(&[1, 1], &[(1, 5), (1, 5)])));
    out.push((li(&[4], &[(1, 3)]), li(&[1], &[(-3, 10)])));
    out.push((li(&[2, 2], &[(1, 2), (1, 2)]), li(&[1], &[(3, 5)])));
    out.push((li(&[1], &[(3, 10)]), li(&[1], &[(1, 5)])));
    out.push((li(&[1, 1], &[(-1, 2), (-2, 5)]), li(&[2], &[(1, 5)])));
    out
}

fn c10_numeric() -> Outcome {
    let tol = 1e-9;
    let mut worst: f64 = 0.0;
    let sg = stuffle_grid();
    for &(n, m, x, y) in &sg {
        worst = worst.max(stuffle_residual(n, m, x, y, 1e-12).unwrap().abs());
    }
    let hg = shuffle_grid();
    for (u, v) in &hg {
        worst = worst.max(shuffle_residual(u, v, 1e-12).unwrap().abs());
    }
    let log2 = (li_eval(&[1], &[qf(1, 2)], 60).unwrap().value - std::f64::consts::LN_2).abs();
    outcome(
        sg.len() == 20 && hg.len() == 20 && worst < tol && log2 < 1e-12,
        format!("{} stuffle + {} shuffle points, max residual {:.1e}, |Li1(1/2) - ln 2| = {:.1e}", sg.len(), hg.len(), worst, log2),
    )
}

#[test]
fn acceptance() {
    let criteria: [(u32, &str, fn() -> Outcome, bool); 10] = [
        (1, "coproduct golden tests", c1_golden, true),
        (2, "Hopf axiom suite", c2_hopf, true),
        (3, "tree layer", c3_trees, true),
        (4, "Omega versus Delta^[m]", c4_omega, true),
        (5, "path-algebra group law", c5_pairing, true),
        (6, "relation-ideal equivalences", c6_ideal, true),
        (7, "polylogarithm formulas", c7_polylog, false),
        (8, "double zeta cobracket and dihedral kernel", c8_zeta, true),
        (9, "arithmetic", c9_arith, true),
        (10, "numeric oracle", c10_numeric, true),
    ];
    let mut mismatches = Vec::new();
    for (n, title, run, expected) in criteria {
        let start = Instant::now();
        let o = run();
        let _ = writeln!(
            std::io::stdout(),
            "criterion {:>2} {} {}: {} ({:.1}s)",
            n,
            if o.pass { "PASS" } else { "FAIL" },
            title,
            o.detail,
            start.elapsed().as_secs_f64()
        );
        if o.pass != expected {
            mismatches.push(n);
        }
    }
    assert!(mismatches.is_empty(), "criteria with unexpected outcome: {:?}", mismatches);
}
