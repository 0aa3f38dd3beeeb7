//! Exact square linear systems by fraction-free (Bareiss) elimination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

use super::Scalar;

/// A dense row-major rational matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> RationalMatrix {
        RationalMatrix { rows, cols, data: vec![BigRational::zero(); rows * cols] }
    }

    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Result<RationalMatrix> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::LengthMismatch { left: bad.len(), right: cols });
        }
        let n = rows.len();
        Ok(RationalMatrix { rows: n, cols, data: rows.into_iter().flatten().collect() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigRational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigRational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul_vec(&self, x: &[BigRational]) -> Result<Vec<BigRational>> {
        if x.len() != self.cols {
            return Err(Error::LengthMismatch { left: x.len(), right: self.cols });
        }
        Ok((0..self.rows).map(|i| self.row(i).iter().zip(x).map(|(a, b)| a * b).sum()).collect())
    }

    pub fn transpose(&self) -> RationalMatrix {
        let mut t = RationalMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }
}

/// Solves `m x = b` for square nonsingular `m`.
pub fn solve_linear_system(m: &RationalMatrix, b: &[BigRational]) -> Result<Vec<BigRational>> {
    let n = m.rows();
    if m.cols() != n {
        return Err(Error::LengthMismatch { left: m.rows(), right: m.cols() });
    }
    if b.len() != n {
        return Err(Error::LengthMismatch { left: b.len(), right: n });
    }

    // Clear denominators row by row to get an integer augmented matrix.
    let mut a: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            let entries: Vec<&BigRational> = m.row(i).iter().chain(std::iter::once(&b[i])).collect();
            let lcm = entries.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
            entries.iter().map(|v| v.numer() * (&lcm / v.denom())).collect()
        })
        .collect();

    let mut prev = BigInt::one();
    for k in 0..n {
        let p = (k..n).find(|&i| !a[i][k].is_zero()).ok_or(Error::SingularMatrix)?;
        a.swap(k, p);
        for i in k + 1..n {
            for j in k + 1..=n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }

    let mut x = vec![BigRational::zero(); n];
    for i in (0..n).rev() {
        let mut acc = BigRational::from_integer(a[i][n].clone());
        for j in i + 1..n {
            acc -= BigRational::from_integer(a[i][j].clone()) * &x[j];
        }
        x[i] = acc / BigRational::from_integer(a[i][i].clone());
    }
    Ok(x)
}

/// Solves a dense square system over any exact field; `None` when singular.
///
/// Pivot rows are chosen with the fewest nonzeros to limit fill-in.
pub(crate) fn solve_dense<T: Scalar>(mut a: Vec<Vec<T>>, mut b: Vec<T>) -> Option<Vec<T>> {
    let n = a.len();
    let mut order = Vec::with_capacity(n);
    let mut used = vec![false; n];
    for k in 0..n {
        let p = (0..n)
            .filter(|&i| !used[i] && !a[i][k].is_zero())
            .min_by_key(|&i| a[i].iter().filter(|v| !v.is_zero()).count())?;
        used[p] = true;
        order.push(p);
        let pivot = a[p][k].clone();
        let prow = a[p].clone();
        let pb = b[p].clone();
        let nz: Vec<usize> = (k..n).filter(|&j| !prow[j].is_zero()).collect();
        for i in 0..n {
            if used[i] || a[i][k].is_zero() {
                continue;
            }
            let mut f = a[i][k].clone();
            f /= &pivot;
            for &j in &nz {
                let mut t = prow[j].clone();
                t *= &f;
                a[i][j] -= &t;
            }
            let mut t = pb.clone();
            t *= &f;
            b[i] -= &t;
        }
    }
    let mut x = vec![T::zero(); n];
    for k in (0..n).rev() {
        let p = order[k];
        let mut acc = b[p].clone();
        for j in k + 1..n {
            if !a[p][j].is_zero() {
                let mut t = a[p][j].clone();
                t *= &x[j];
                acc -= &t;
            }
        }
        acc /= &a[p][k];
        x[k] = acc;
    }
    Some(x)
}
