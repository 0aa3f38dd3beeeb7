use aldkit_core::ald::Lambda;
use aldkit_core::ball::binomial;
use aldkit_core::hyperbound::{
    class_matrix, lp_hypergraph_bound, naive_weight_bound, optimal1_bound, simple_bound, weights1_bound,
};
use aldkit_core::lp::{solve, LpOutcome, LpProblem, Relation, Sense};
use aldkit_core::report::BoundValue;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn rat(v: &num_bigint::BigUint) -> BigRational {
    BigRational::from_integer(BigInt::from(v.clone()))
}

fn value(b: &aldkit_core::report::BoundReport) -> BigRational {
    match &b.value {
        BoundValue::Finite(v) => v.as_rational().expect("rational bound").clone(),
        BoundValue::Unbounded => panic!("hypergraph bounds are finite"),
    }
}

/// The dual (fractional matching) LP: max Σ C(n,i) 2^n y_i s.t. Σ_i C(n,i) K[i][j] y_i <= C(n,j), y >= 0.
fn dual_value(n: usize, r: u64, lambda: Lambda) -> BigRational {
    let k = class_matrix(n, r, lambda);
    let size = |i: usize| rat(&binomial(n, i)) * BigRational::from_integer(BigInt::one() << n);
    let mut p = LpProblem::new(Sense::Maximize, (0..=n).map(size).collect());
    for j in 0..=n {
        let coeffs = (0..=n).map(|i| size(i) * rat(k.get(i, j))).collect();
        p.add_constraint(coeffs, Relation::LessEq, size(j)).unwrap();
    }
    match solve(&p) {
        LpOutcome::Optimal { value, .. } => value,
        other => panic!("dual LP not optimal: {other:?}"),
    }
}

#[test]
fn closed_form_equals_lp_at_distance_three() {
    for n in 1..=10 {
        assert_eq!(value(&optimal1_bound(n, Lambda::ONE)), value(&lp_hypergraph_bound(n, 3, Lambda::ONE).unwrap()));
    }
}

#[test]
fn lp_duality_holds() {
    for lambda in [Lambda::ONE, Lambda::new(2).unwrap()] {
        for n in 1..=6 {
            for d in [3, 5, 7] {
                let r = (d - 1) / 2;
                assert_eq!(value(&lp_hypergraph_bound(n, d, lambda).unwrap()), dual_value(n, r, lambda), "n={n} d={d}");
            }
        }
    }
}

#[test]
fn lp_is_the_tightest_hypergraph_bound() {
    for n in 1..=12 {
        for d in [3, 5, 7, 9] {
            let lp = value(&lp_hypergraph_bound(n, d, Lambda::ONE).unwrap());
            assert!(lp <= value(&naive_weight_bound(n, d, Lambda::ONE).unwrap()));
            assert!(lp <= value(&simple_bound(n, d, Lambda::ONE).unwrap()));
        }
    }
    for n in 5..=15 {
        let lp = value(&lp_hypergraph_bound(n, 5, Lambda::ONE).unwrap());
        assert!(lp <= value(&weights1_bound(n, 2).unwrap()));
    }
}

#[test]
fn closed_form_weights_are_transversals() {
    for lambda in [Lambda::ONE, Lambda::new(2).unwrap()] {
        for n in 1..=10 {
            let b = optimal1_bound(n, lambda);
            let k = class_matrix(n, lambda.class1(), lambda);
            assert!(k.covers(b.weights.as_ref().unwrap()));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn bounds_are_sane(n in 1usize..=9, d in 1u64..=12, l in 1u32..=2) {
        let lambda = Lambda::new(l).unwrap();
        let total = BigRational::from_integer(BigInt::one() << (2 * n));
        for b in [
            lp_hypergraph_bound(n, d, lambda).unwrap(),
            naive_weight_bound(n, d, lambda).unwrap(),
            simple_bound(n, d, lambda).unwrap(),
        ] {
            let v = value(&b);
            prop_assert!(v >= BigRational::one() && v <= total);
            prop_assert!(b.weights.as_ref().unwrap().iter().all(|w| *w >= BigRational::zero()));
        }
        let here = value(&lp_hypergraph_bound(n, d, lambda).unwrap());
        let further = value(&lp_hypergraph_bound(n, d + 2, lambda).unwrap());
        prop_assert!(further <= here);
    }
}
