use num_rational::BigRational;
use proptest::prelude::*;
use proptest::sample::select;

use thrall_core::jdt::{rectify, rectify_with, restricted_rectify};
use thrall_core::rsk::{rsk, subword_standardize, Permutation};
use thrall_core::shapes::enumerate_partitions;
use thrall_core::symfunc::{p_to_schur, plethysm, schur_to_p, SchurExpansion, SymFunc};
use thrall_core::tableau::{enumerate_syt, enumerate_syt_of_size};
use thrall_core::thrall::{in_syt_lambda, syt_lambda, thrall_subset};
use thrall_core::{Interval, Partition, SkewShape, StandardTableau, Tableau};

fn partition(max: usize) -> impl Strategy<Value = Partition> {
    (1..=max).prop_flat_map(|n| select(enumerate_partitions(n)))
}

fn standard_tableau(max: usize) -> impl Strategy<Value = StandardTableau> {
    (1..=max).prop_flat_map(|n| select(enumerate_syt_of_size(n)))
}

fn permutation(max: usize) -> impl Strategy<Value = Permutation> {
    (1..=max)
        .prop_flat_map(|n| Just((1..=n).collect::<Vec<usize>>()).prop_shuffle())
        .prop_map(|v| Permutation::new(v).unwrap())
}

/// A standard skew tableau: a subinterval of a straight standard tableau.
fn skew_tableau(max: usize) -> impl Strategy<Value = Tableau> {
    standard_tableau(max).prop_flat_map(|t| {
        let n = t.len();
        (1..=n).prop_map(move |start| t.restrict(Interval::new(start, n)).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn schur_round_trip(nu in partition(7)) {
        let back = p_to_schur(&schur_to_p(&nu)).unwrap();
        let expected: SchurExpansion = [(nu, 1)].into_iter().collect();
        prop_assert_eq!(back, expected);
    }

    #[test]
    fn plethysm_with_p1_is_identity(terms in proptest::collection::vec((partition(6), -5i64..=5), 1..4), d in 1usize..=6) {
        let g = terms
            .into_iter()
            .filter(|(mu, _)| mu.size() == d)
            .fold(SymFunc::zero(d), |acc, (mu, c)| &acc + &schur_to_p(&mu).scale(&BigRational::from_integer(c.into())));
        let p1 = SymFunc::p(Partition::row(1));
        prop_assert_eq!(plethysm(&g, &p1), g);
    }

    #[test]
    fn rsk_subword(w in permutation(8), a in 0usize..8, b in 0usize..8) {
        let n = w.len();
        let (start, end) = (a.min(b) % n + 1, a.max(b) % n + 1);
        let (start, end) = (start.min(end), start.max(end));
        let interval = Interval::new(start, end);
        let (p, _) = rsk(&w);
        let (sub, _) = rsk(&subword_standardize(&w, interval).unwrap());
        prop_assert_eq!(sub, restricted_rectify(&p, interval).unwrap());
    }

    #[test]
    fn rsk_shapes_agree(w in permutation(8)) {
        let (p, q) = rsk(&w);
        prop_assert_eq!(p.straight_shape(), q.straight_shape());
        let (p_inv, q_inv) = rsk(&w.inverse());
        prop_assert_eq!((p_inv, q_inv), (q, p));
    }

    #[test]
    fn slide_order_is_irrelevant(t in skew_tableau(8), picks in proptest::collection::vec(any::<usize>(), 20)) {
        let expected = rectify(&t).unwrap();
        let mut it = picks.into_iter().cycle();
        let (got, _) = rectify_with(&t, |corners| it.next().unwrap() % corners.len()).unwrap();
        prop_assert_eq!(got, expected);
    }

    #[test]
    fn restricted_rectification_is_standard(t in standard_tableau(8), a in 0usize..8, b in 0usize..8) {
        let n = t.len();
        let (start, end) = ((a % n + 1).min(b % n + 1), (a % n + 1).max(b % n + 1));
        let r = restricted_rectify(&t, Interval::new(start, end)).unwrap();
        prop_assert_eq!(r.len(), end - start + 1);
        prop_assert!(r.straight_shape().is_some());
    }

    #[test]
    fn thrall_subsets_lie_in_block_class(lambda in partition(7), mu_index in any::<prop::sample::Index>()) {
        let mus = enumerate_partitions(lambda.size());
        let mu = mu_index.get(&mus);
        let all = syt_lambda(&lambda, mu).unwrap();
        for t in thrall_subset(&lambda, mu).unwrap() {
            prop_assert!(in_syt_lambda(&lambda, &t));
            prop_assert!(all.contains(&t));
        }
    }

    #[test]
    fn tableau_text_round_trip(t in skew_tableau(8)) {
        let text = t.to_string();
        prop_assert_eq!(text.parse::<Tableau>().unwrap(), t.clone());
        let json = serde_json::to_string(&t).unwrap();
        prop_assert_eq!(serde_json::from_str::<Tableau>(&json).unwrap(), t);
    }

    #[test]
    fn expansion_json_round_trip(lambda in partition(6)) {
        let e = thrall_core::symfunc::higher_lie_character(&lambda).unwrap();
        let json = serde_json::to_string(&e).unwrap();
        prop_assert_eq!(serde_json::from_str::<SchurExpansion>(&json).unwrap(), e);
    }
}

#[test]
fn syt_enumeration_is_complete() {
    for n in 0..=7 {
        let total: usize = enumerate_partitions(n)
            .into_iter()
            .map(|mu| enumerate_syt(&SkewShape::straight(mu)).len())
            .sum();
        assert_eq!(enumerate_syt_of_size(n).len(), total);
    }
}
