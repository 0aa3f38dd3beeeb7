//! Sphere and ball volumes under the asymmetric Lee distance.
//!
//! Around a center of pair weight `w`, a word at distance `r` arises from
//! `m` Class 1 changes on the `w` split positions, `k` Class 3 changes on the
//! `n - w` unsplit positions, and `l` Class 2 changes (two choices each) on the
//! remaining positions, with `(2k + l)(1 + λ) + λm = r`.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::ald::{ald_distance, Lambda, PairedWord};
use crate::error::{invalid, Result};

/// Largest length for which [`enumerate_ball`] will scan all `4^n` words.
pub const ENUMERATION_LIMIT: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BallSpec {
    pub n: usize,
    pub w: usize,
    pub r: u64,
    pub lambda: Lambda,
}

impl BallSpec {
    pub fn new(n: usize, w: usize, r: u64, lambda: Lambda) -> Result<BallSpec> {
        if w > n {
            return Err(invalid(format!("center weight {w} exceeds length {n}")));
        }
        Ok(BallSpec { n, w, r, lambda })
    }
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

fn error_pattern_terms(spec: &BallSpec) -> impl Iterator<Item = (u64, BigUint)> + '_ {
    let BallSpec { n, w, lambda, .. } = *spec;
    (0..=w).flat_map(move |m| {
        (0..=n - w).flat_map(move |k| {
            (0..=n - k - m).map(move |l| {
                let cost = (2 * k as u64 + l as u64) * lambda.class2() + lambda.class1() * m as u64;
                let count = (binomial(w, m) * binomial(n - w, k) * binomial(n - k - m, l)) << l;
                (cost, count)
            })
        })
    })
}

/// Number of words at distance exactly `r` from a center of weight `w`.
pub fn sphere_size(spec: &BallSpec) -> BigUint {
    error_pattern_terms(spec).filter(|(cost, _)| *cost == spec.r).map(|(_, c)| c).sum()
}

/// Number of words within distance `r` of a center of weight `w`.
pub fn ball_size(spec: &BallSpec) -> BigUint {
    error_pattern_terms(spec).filter(|(cost, _)| *cost <= spec.r).map(|(_, c)| c).sum()
}

/// Ball size with the convention that negative center weights behave like weight zero.
pub fn ball_size_clamped(n: usize, w: i64, r: u64, lambda: Lambda) -> Result<BigUint> {
    let w = w.max(0) as usize;
    Ok(ball_size(&BallSpec::new(n, w, r, lambda)?))
}

/// All words within distance `r` of `center`, by exhaustive scan.
pub fn enumerate_ball(center: &PairedWord, r: u64, lambda: Lambda) -> Result<Vec<PairedWord>> {
    let n = center.len();
    if n > ENUMERATION_LIMIT {
        return Err(invalid(format!(
            "ball enumeration scans 4^n words; n = {n} exceeds the limit of {ENUMERATION_LIMIT}"
        )));
    }
    let mut out = Vec::new();
    for y in PairedWord::all(n)? {
        if ald_distance(center, &y, lambda)? <= r {
            out.push(y);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(n: usize, w: usize, r: u64) -> BallSpec {
        BallSpec::new(n, w, r, Lambda::ONE).unwrap()
    }

    #[test]
    fn spheres_at_small_radius() {
        assert_eq!(sphere_size(&spec(3, 1, 0)), BigUint::from(1u32));
        assert_eq!(sphere_size(&spec(3, 1, 1)), BigUint::from(1u32));
        assert_eq!(sphere_size(&spec(3, 1, 2)), BigUint::from(6u32));
    }

    #[test]
    fn worked_example_balls() {
        assert_eq!(ball_size(&spec(3, 1, 2)), BigUint::from(8u32));
        assert_eq!(ball_size(&spec(3, 0, 2)), BigUint::from(7u32));
        for w in 0..=5 {
            assert_eq!(ball_size(&spec(5, w, 0)), BigUint::one());
        }
    }

    #[test]
    fn worked_example_members() {
        let center = PairedWord::from_bits(&[0, 1, 1], &[1, 1, 1]).unwrap();
        let ball = enumerate_ball(&center, 2, Lambda::ONE).unwrap();
        let expected: Vec<PairedWord> = [
            ([0, 1, 1], [1, 1, 1]),
            ([1, 1, 1], [1, 1, 1]),
            ([0, 1, 1], [0, 1, 1]),
            ([1, 1, 1], [0, 1, 1]),
            ([0, 0, 1], [1, 1, 1]),
            ([0, 1, 1], [1, 0, 1]),
            ([0, 1, 0], [1, 1, 1]),
            ([0, 1, 1], [1, 1, 0]),
        ]
        .iter()
        .map(|(a, b)| PairedWord::from_bits(a, b).unwrap())
        .collect();
        assert_eq!(ball.len(), 8);
        for x in &expected {
            assert!(ball.contains(x), "{x} missing");
        }
    }

    #[test]
    fn weight_above_length_rejected() {
        assert!(BallSpec::new(2, 3, 1, Lambda::ONE).is_err());
    }

    #[test]
    fn negative_weight_clamps_to_zero() {
        assert_eq!(ball_size_clamped(4, -2, 3, Lambda::ONE).unwrap(), ball_size(&spec(4, 0, 3)));
    }

    #[test]
    fn enumeration_refuses_large_n() {
        let x = PairedWord::zero(13).unwrap();
        assert!(enumerate_ball(&x, 1, Lambda::ONE).is_err());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(10, 3), BigUint::from(120u32));
        assert_eq!(binomial(3, 5), BigUint::zero());
        assert_eq!(binomial(0, 0), BigUint::one());
    }
}
