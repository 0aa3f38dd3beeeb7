//! Upper bounds from the fractional transversal of the ALD ball hypergraph.
//!
//! Coordinate permutations and per-position complementation act on paired
//! words, and their orbits are the `n + 1` pair-weight classes (class `ℓ` has
//! `2ⁿ C(n, ℓ)` members). The transversal LP collapses to
//!
//! ```text
//! minimise 2ⁿ Σ_ℓ C(n, ℓ) w_ℓ   subject to   K w >= 1,  w >= 0
//! ```
//!
//! where `K[i][j]` counts weight-`j` words in a radius-`r` ball around a
//! weight-`i` center. Closed-form feasible `w` give the other bounds.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::ald::Lambda;
use crate::ball::{ball_size_clamped, binomial};
use crate::error::{invalid, Error, Result};
use crate::lp::{self, solve_linear_system, LpOutcome, LpProblem, RationalMatrix, Relation, Sense};
use crate::report::{BoundReport, BoundValue, ExactValue, Method};

/// Word counts between pair-weight classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassMatrix {
    pub n: usize,
    pub r: u64,
    pub lambda: Lambda,
    /// `entries[i][j]`: words of weight `j` within distance `r` of a weight-`i` word.
    pub entries: Vec<Vec<BigUint>>,
}

impl ClassMatrix {
    pub fn get(&self, i: usize, j: usize) -> &BigUint {
        &self.entries[i][j]
    }

    fn rational_rows(&self) -> Vec<Vec<BigRational>> {
        self.entries.iter().map(|row| row.iter().map(to_rational).collect()).collect()
    }

    /// Whether `Σ_j K[i][j] w_j >= 1` for every center class `i`.
    pub fn covers(&self, w: &[BigRational]) -> bool {
        let one = BigRational::one();
        self.rational_rows().iter().all(|row| row.iter().zip(w).map(|(a, b)| a * b).sum::<BigRational>() >= one)
    }
}

fn to_rational(v: &BigUint) -> BigRational {
    BigRational::from_integer(BigInt::from(v.clone()))
}

/// Radius used for minimum distance `d`; even `d` shares the radius of `d - 1`.
pub fn radius_for(d: u64) -> Result<u64> {
    if d == 0 {
        return Err(invalid("minimum distance must be positive"));
    }
    Ok((d - 1) / 2)
}

pub fn class_matrix(n: usize, r: u64, lambda: Lambda) -> ClassMatrix {
    let c2 = lambda.class2();
    let c1 = lambda.class1();
    let mut entries = vec![vec![BigUint::zero(); n + 1]; n + 1];
    for (i, row) in entries.iter_mut().enumerate() {
        // Class 2 flips: `up` on the n - i agreeing positions, `down` on the i split ones.
        for up in 0..=n - i {
            for down in 0..=i {
                let base = c2 * (up + down) as u64;
                if base > r {
                    break;
                }
                let flips = (binomial(n - i, up) * binomial(i, down)) << (up + down);
                let j = i + up - down;
                let mut sum = BigUint::zero();
                // Class 3 on remaining agreeing positions, Class 1 on remaining split ones.
                for k in 0..=n - i - up {
                    let cost3 = base + 2 * c2 * k as u64;
                    if cost3 > r {
                        break;
                    }
                    let max_m = ((r - cost3) / c1).min((i - down) as u64) as usize;
                    let ones: BigUint = (0..=max_m).map(|m| binomial(i - down, m)).sum();
                    sum += binomial(n - i - up, k) * ones;
                }
                row[j] += flips * sum;
            }
        }
    }
    ClassMatrix { n, r, lambda, entries }
}

fn class_sizes(n: usize) -> Vec<BigRational> {
    let two_n = BigUint::one() << n;
    (0..=n).map(|l| to_rational(&(binomial(n, l) * &two_n))).collect()
}

fn weighted_total(n: usize, w: &[BigRational]) -> BigRational {
    class_sizes(n).iter().zip(w).map(|(s, x)| s * x).sum()
}

fn report(method: Method, n: usize, d: u64, lambda: Lambda, w: Vec<BigRational>) -> BoundReport {
    let value = BoundValue::Finite(ExactValue::Rational(weighted_total(n, &w)));
    BoundReport { method, n, d, lambda, value, weights: Some(w) }
}

fn check_feasible(k: &ClassMatrix, w: &[BigRational], what: &str) -> Result<()> {
    if w.iter().any(|x| *x < BigRational::zero()) || !k.covers(w) {
        return Err(Error::Internal(format!("{what} weights are not a feasible transversal")));
    }
    Ok(())
}

/// The optimum of the class-reduced transversal LP.
pub fn lp_hypergraph_bound(n: usize, d: u64, lambda: Lambda) -> Result<BoundReport> {
    let r = radius_for(d)?;
    let k = class_matrix(n, r, lambda);
    let mut p = LpProblem::new(Sense::Minimize, class_sizes(n));
    for row in k.rational_rows() {
        p.add_constraint(row, Relation::GreaterEq, BigRational::one())?;
    }
    match lp::solve(&p) {
        LpOutcome::Optimal { solution, .. } => Ok(report(Method::HypergraphLp, n, d, lambda, solution)),
        other => Err(Error::Internal(format!("transversal LP ended {:?}", other.status()))),
    }
}

/// Weights `w_i = 1 / V(n, i - μ, r)` with `μ = ⌊r / (1 + λ)⌋`.
pub fn naive_weight_bound(n: usize, d: u64, lambda: Lambda) -> Result<BoundReport> {
    let r = radius_for(d)?;
    let mu = (r / lambda.class2()) as i64;
    let w = (0..=n)
        .map(|i| Ok(BigRational::new(BigInt::one(), BigInt::from(ball_size_clamped(n, i as i64 - mu, r, lambda)?))))
        .collect::<Result<Vec<_>>>()?;
    check_feasible(&class_matrix(n, r, lambda), &w, "naive")?;
    Ok(report(Method::Naive, n, d, lambda, w))
}

/// Closed form `2ⁿ(2ⁿ⁺¹ - 1)/(n + 1)`, exact for `d = 2λ + 1`.
pub fn optimal1_bound(n: usize, lambda: Lambda) -> BoundReport {
    let two_n = BigInt::one() << n;
    let value = BigRational::new(&two_n * ((BigInt::one() << (n + 1)) - 1), BigInt::from(n + 1));
    let w = (0..=n).map(|l| BigRational::new(BigInt::one(), BigInt::from(l + 1))).collect();
    BoundReport {
        method: Method::Optimal1,
        n,
        d: 2 * lambda.class1() + 1,
        lambda,
        value: BoundValue::Finite(ExactValue::Rational(value)),
        weights: Some(w),
    }
}

/// Weights `w_ℓ = 1 / Σ_{j <= ⌊r/λ⌋} C(ℓ, j)`.
pub fn simple_bound(n: usize, d: u64, lambda: Lambda) -> Result<BoundReport> {
    let r = radius_for(d)?;
    let t = (r / lambda.class1()) as usize;
    let w: Vec<BigRational> = (0..=n)
        .map(|l| {
            let denom: BigUint = (0..=t.min(l)).map(|j| binomial(l, j)).sum();
            BigRational::new(BigInt::one(), BigInt::from(denom))
        })
        .collect();
    check_feasible(&class_matrix(n, r, lambda), &w, "simple")?;
    Ok(report(Method::Simple, n, d, lambda, w))
}

/// The diagonally dominant surrogate `Â(n, r)` of the `λ = 1` class matrix.
///
/// Off-diagonal entries are capped at `(K[i][i] - 1) / r`, which keeps every
/// row strictly diagonally dominant relative to the other diagonals.
pub fn weights1_matrix(n: usize, r: u64) -> Result<RationalMatrix> {
    if r == 0 {
        return Err(invalid("the dominant-diagonal weights need r >= 1"));
    }
    let k = class_matrix(n, r, Lambda::ONE);
    let rows = (0..=n)
        .map(|i| {
            let diag = to_rational(k.get(i, i));
            let cap = (&diag - BigRational::one()) / BigRational::from_integer(BigInt::from(r));
            (0..=n).map(|j| if i == j { diag.clone() } else { to_rational(k.get(i, j)).min(cap.clone()) }).collect()
        })
        .collect();
    RationalMatrix::from_rows(rows)
}

/// Weights `Â(n, r)⁻¹ 1`, for `λ = 1` only.
pub fn weights1_bound(n: usize, r: u64) -> Result<BoundReport> {
    if n == 0 {
        return Err(invalid("the dominant-diagonal weights need n >= 1"));
    }
    let a_hat = weights1_matrix(n, r)?;
    let ones = vec![BigRational::one(); n + 1];
    let w = solve_linear_system(&a_hat, &ones)
        .map_err(|e| Error::Internal(format!("dominant-diagonal matrix not invertible: {e}")))?;
    check_feasible(&class_matrix(n, r, Lambda::ONE), &w, "dominant-diagonal")?;
    Ok(report(Method::Weights1, n, 2 * r + 1, Lambda::ONE, w))
}

/// Sphere-packing comparison for `n = 2^(v-1) - 1`, `λ = 1`, `d = 5`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PackingComparison {
    pub v: u32,
    pub n: usize,
    /// `2^{2n} / Σ_{j<=4} C(2n, j)`.
    pub binary_packing: BigRational,
    /// `4ⁿ / Σ_{j<=2} C(n, j) 3ʲ`.
    pub quaternary_packing: BigRational,
    /// `4ⁿ / (2n + 2)²`.
    pub cl_lower_bound: BigRational,
}

pub fn packing_comparison(v: u32) -> Result<PackingComparison> {
    if !(3..=20).contains(&v) {
        return Err(invalid(format!("v must be in 3..=20, got {v}")));
    }
    let n = (1usize << (v - 1)) - 1;
    let four_n = BigInt::one() << (2 * n);
    let big = |x: BigUint| BigInt::from(x);
    let bin_den: BigUint = (0..=4).map(|j| binomial(2 * n, j)).sum();
    let quat_den: BigUint = (0..=2u32).map(|j| binomial(n, j as usize) * BigUint::from(3u32).pow(j)).sum();
    let cl_den = BigInt::from((2 * n + 2) * (2 * n + 2));
    Ok(PackingComparison {
        v,
        n,
        binary_packing: BigRational::new(four_n.clone(), big(bin_den)),
        quaternary_packing: BigRational::new(four_n.clone(), big(quat_den)),
        cl_lower_bound: BigRational::new(four_n, cl_den),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lp::int;

    fn floor(b: &BoundReport) -> i64 {
        b.floor().unwrap().try_into().unwrap()
    }

    #[test]
    fn single_position_radius_one() {
        let k = class_matrix(1, 1, Lambda::ONE);
        let expect = |v: u32| BigUint::from(v);
        assert_eq!(k.entries, vec![vec![expect(1), expect(0)], vec![expect(0), expect(2)]]);
    }

    #[test]
    fn worked_example_row_sum() {
        let k = class_matrix(3, 2, Lambda::ONE);
        let sum: BigUint = k.entries[1].iter().sum();
        assert_eq!(sum, BigUint::from(8u32));
    }

    #[test]
    fn table_anchors() {
        assert_eq!(floor(&lp_hypergraph_bound(5, 3, Lambda::ONE).unwrap()), 336);
        assert_eq!(floor(&lp_hypergraph_bound(5, 11, Lambda::ONE).unwrap()), 9);
        assert_eq!(floor(&simple_bound(5, 5, Lambda::ONE).unwrap()), 254);
        assert_eq!(floor(&weights1_bound(5, 2).unwrap()), 141);
    }

    #[test]
    fn naive_stays_below_trivial_packing() {
        // Every ball at n = 5, r = 2 holds at least 11 words.
        let b = naive_weight_bound(5, 5, Lambda::ONE).unwrap();
        assert_eq!(floor(&b), 77);
        assert!(b.value.exact().unwrap().to_f64() <= 1024.0 / 11.0);
    }

    #[test]
    fn naive_equals_optimal1_at_radius_lambda() {
        for n in 1..=8 {
            assert_eq!(naive_weight_bound(n, 3, Lambda::ONE).unwrap().value, optimal1_bound(n, Lambda::ONE).value);
        }
    }

    #[test]
    fn optimal1_closed_form() {
        let b = optimal1_bound(2, Lambda::ONE);
        assert_eq!(b.value.exact().unwrap().as_rational(), Some(&(int(28) / int(3))));
        assert_eq!(floor(&optimal1_bound(1, Lambda::ONE)), 3);
        let lp = lp_hypergraph_bound(2, 3, Lambda::ONE).unwrap();
        assert_eq!(lp.value, b.value);
    }

    #[test]
    fn simple_trivial_case() {
        assert_eq!(simple_bound(1, 3, Lambda::ONE).unwrap().value.exact().unwrap().as_rational(), Some(&int(3)));
    }

    #[test]
    fn packing_v5() {
        let p = packing_comparison(5).unwrap();
        assert_eq!(p.n, 15);
        assert_eq!(p.cl_lower_bound, BigRational::new(BigInt::one() << 30, BigInt::from(1024)));
        // 991 < 1024 denominators: the quaternary bound is still the larger one here.
        assert!(p.quaternary_packing > p.cl_lower_bound);
        for v in 6..=10 {
            let p = packing_comparison(v).unwrap();
            assert!(p.quaternary_packing < p.cl_lower_bound, "v = {v}");
        }
        assert!(packing_comparison(2).is_err());
    }

    #[test]
    fn weights1_rejects_degenerate_input() {
        assert!(weights1_bound(3, 0).is_err());
        assert!(weights1_bound(0, 2).is_err());
    }
}
