use std::collections::BTreeMap;

use aldkit_core::ald::{ald_distance, Lambda, PairedWord};
use aldkit_core::ball::{ball_size, enumerate_ball, sphere_size, BallSpec};
use aldkit_core::hyperbound::class_matrix;
use num_bigint::BigUint;
use proptest::prelude::*;

fn lambdas() -> [Lambda; 2] {
    [Lambda::ONE, Lambda::new(2).unwrap()]
}

/// Distance histogram from a canonical center of weight `w`, by exhaustive scan.
fn histogram(n: usize, w: usize, lambda: Lambda) -> BTreeMap<u64, u64> {
    let center = PairedWord::from_strands(n, 0, (1 << w) - 1).unwrap();
    let mut h = BTreeMap::new();
    for y in PairedWord::all(n).unwrap() {
        *h.entry(ald_distance(&center, &y, lambda).unwrap()).or_insert(0) += 1;
    }
    h
}

#[test]
fn ball_and_sphere_sizes_match_enumeration() {
    for lambda in lambdas() {
        for n in 1..=4 {
            for w in 0..=n {
                let h = histogram(n, w, lambda);
                let mut cumulative = 0;
                for r in 0..=2 * lambda.class2() * n as u64 {
                    let exact = h.get(&r).copied().unwrap_or(0);
                    cumulative += exact;
                    let spec = BallSpec::new(n, w, r, lambda).unwrap();
                    assert_eq!(sphere_size(&spec), BigUint::from(exact), "sphere n={n} w={w} r={r} λ={lambda}");
                    assert_eq!(ball_size(&spec), BigUint::from(cumulative), "ball n={n} w={w} r={r} λ={lambda}");
                }
            }
        }
    }
}

#[test]
fn ball_size_depends_only_on_weight() {
    for lambda in lambdas() {
        for n in 1..=3 {
            for r in 0..=2 * lambda.class2() * n as u64 {
                let mut by_weight: BTreeMap<usize, usize> = BTreeMap::new();
                for x in PairedWord::all(n).unwrap() {
                    let size = enumerate_ball(&x, r, lambda).unwrap().len();
                    assert_eq!(*by_weight.entry(x.weight()).or_insert(size), size, "n={n} r={r} x={x}");
                }
            }
        }
    }
}

#[test]
fn ball_size_monotone_on_grid() {
    for lambda in lambdas() {
        for n in 1..=4 {
            for r in 0..=2 * lambda.class2() * n as u64 {
                for w in 0..=n {
                    let v = ball_size(&BallSpec::new(n, w, r, lambda).unwrap());
                    if w > 0 {
                        assert!(v >= ball_size(&BallSpec::new(n, w - 1, r, lambda).unwrap()));
                    }
                    assert!(ball_size(&BallSpec::new(n, w, r + 1, lambda).unwrap()) >= v);
                }
            }
        }
    }
}

#[test]
fn class_matrix_matches_enumeration() {
    for lambda in lambdas() {
        for n in 1..=4 {
            for r in 0..=8 {
                let k = class_matrix(n, r, lambda);
                for i in 0..=n {
                    let center = PairedWord::from_strands(n, 0, (1 << i) - 1).unwrap();
                    let mut counts = vec![0u64; n + 1];
                    for y in enumerate_ball(&center, r, lambda).unwrap() {
                        counts[y.weight()] += 1;
                    }
                    for (j, &c) in counts.iter().enumerate() {
                        assert_eq!(*k.get(i, j), BigUint::from(c), "n={n} r={r} i={i} j={j} λ={lambda}");
                    }
                }
            }
        }
    }
}

proptest! {
    #[test]
    fn monotone_at_larger_lengths(n in 1usize..=40, w_frac in 0.0f64..=1.0, r in 0u64..=30, l in 1u32..=3) {
        let lambda = Lambda::new(l).unwrap();
        let w = ((n as f64) * w_frac) as usize;
        let v = ball_size(&BallSpec::new(n, w, r, lambda).unwrap());
        if w > 0 {
            prop_assert!(v >= ball_size(&BallSpec::new(n, w - 1, r, lambda).unwrap()));
        }
        prop_assert!(ball_size(&BallSpec::new(n, w, r + 1, lambda).unwrap()) >= v);
        prop_assert!(v <= BigUint::from(1u8) << (2 * n));
    }
}
