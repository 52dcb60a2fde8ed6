//! Printing a parsed expression and parsing it again gives the same tree.

use iterhopf::{Dec, Q};
use iterhopf_cli::parse::{parse, ExprAst, Factor, Sign, Term};
use proptest::prelude::*;

fn dec() -> impl Strategy<Value = Dec> {
    prop_oneof![
        prop::sample::select(vec!["a", "b", "x0", "y_1", "w", "w3", "I", "Li", "zeta"]).prop_map(Dec::sym),
        (-20i64..20, 1i64..9).prop_map(|(n, d)| Dec::rat(Q::new(n.into(), d.into()))),
        (0i64..12, 1u32..12).prop_map(|(k, n)| Dec::cyc(k, n)),
    ]
}

fn ints() -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(1u32..6, 1..4)
}

fn leaf() -> impl Strategy<Value = Factor> {
    prop_oneof![
        (dec(), prop::collection::vec(dec(), 0..4), dec()).prop_map(|(a0, letters, a_end)| Factor::Word { a0, letters, a_end }),
        ints().prop_flat_map(|ns| {
            let k = ns.len();
            (Just(ns), prop::collection::vec(dec(), k)).prop_map(|(ns, xs)| Factor::Li { ns, xs })
        }),
        ints().prop_map(Factor::Zeta),
    ]
}

fn expr_of(factor: BoxedStrategy<Factor>) -> impl Strategy<Value = ExprAst> {
    let term = (prop::option::of((1i64..30, 1i64..7)), prop::collection::vec(factor, 1..3)).prop_map(|(c, factors)| Term {
        coeff: c.map(|(n, d)| Q::new(n.into(), d.into())),
        factors,
    });
    let sign = prop_oneof![Just(Sign::Plus), Just(Sign::Minus)];
    prop::collection::vec((sign, term), 1..4).prop_map(|terms| ExprAst { terms })
}

fn expr() -> impl Strategy<Value = ExprAst> {
    let factor = leaf().prop_recursive(2, 12, 3, |inner| {
        prop_oneof![leaf(), expr_of(inner.boxed()).prop_map(|e| Factor::Paren(Box::new(e)))]
    });
    expr_of(factor.boxed())
}

proptest! {
    #[test]
    fn print_then_parse_is_identity(e in expr()) {
        let printed = e.to_string();
        prop_assert_eq!(parse(&printed).unwrap(), e, "printed: {}", printed);
    }
}
