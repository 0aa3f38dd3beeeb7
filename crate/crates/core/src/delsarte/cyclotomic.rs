//! The cyclotomic field of 10th roots of unity, in the basis `1, ζ, ζ², ζ³`.
//!
//! Elements are reduced modulo the minimal polynomial `ζ⁴ - ζ³ + ζ² - ζ + 1`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::sqrt5::Sqrt5;

/// `c[0] + c[1]ζ + c[2]ζ² + c[3]ζ³` with `ζ = exp(2πi/10)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic10<C = BigRational> {
    pub c: [C; 4],
}

/// Coefficient ring requirements.
pub trait Coeff:
    Clone + PartialEq + Zero + One + Neg<Output = Self> + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self>
{
}

impl<T> Coeff for T where
    T: Clone + PartialEq + Zero + One + Neg<Output = T> + Add<Output = T> + Sub<Output = T> + Mul<Output = T>
{
}

impl<C: Coeff> Cyclotomic10<C> {
    pub fn new(c: [C; 4]) -> Self {
        Cyclotomic10 { c }
    }

    pub fn from_coeff(v: C) -> Self {
        Cyclotomic10 { c: [v, C::zero(), C::zero(), C::zero()] }
    }

    /// `ζ^k` for any integer `k`.
    pub fn zeta_pow(k: i64) -> Self {
        let k = k.rem_euclid(10) as usize;
        // ζ⁵ = -1, so ζ^k = -ζ^(k-5).
        let (sign, e) = if k >= 5 { (-C::one(), k - 5) } else { (C::one(), k) };
        let mut c = [C::zero(), C::zero(), C::zero(), C::zero()];
        if e < 4 {
            c[e] = sign;
        } else {
            // ζ⁴ = ζ³ - ζ² + ζ - 1
            c = [-sign.clone(), sign.clone(), -sign.clone(), sign];
        }
        Cyclotomic10 { c }
    }

    pub fn scale(&self, k: &C) -> Self {
        Cyclotomic10 { c: self.c.clone().map(|x| x * k.clone()) }
    }

    /// Multiplication by `ζ^k`, cheaper than a general product.
    pub fn mul_zeta_pow(&self, k: i64) -> Self {
        let k = k.rem_euclid(10);
        let mut out = self.clone();
        for _ in 0..k {
            let [c0, c1, c2, c3] = out.c;
            // (c0 + c1ζ + c2ζ² + c3ζ³)ζ = c0ζ + c1ζ² + c2ζ³ + c3(ζ³ - ζ² + ζ - 1)
            out.c = [-c3.clone(), c0 + c3.clone(), c1 - c3.clone(), c2 + c3];
        }
        out
    }

    /// Complex conjugate, sending `ζ` to `ζ⁻¹`.
    pub fn conjugate(&self) -> Self {
        let mut out = Self::zero();
        for (k, ck) in self.c.iter().enumerate() {
            out = out + Self::zeta_pow(-(k as i64)).scale(ck);
        }
        out
    }

    pub fn is_real(&self) -> bool {
        *self == self.conjugate()
    }

    pub fn to_complex(&self) -> (f64, f64)
    where
        C: Into<f64>,
    {
        let mut re = 0.0;
        let mut im = 0.0;
        for (k, ck) in self.c.iter().enumerate() {
            let v: f64 = ck.clone().into();
            let t = std::f64::consts::PI * k as f64 / 5.0;
            re += v * t.cos();
            im += v * t.sin();
        }
        (re, im)
    }
}

impl Cyclotomic10<i64> {
    pub fn to_rational(&self) -> Cyclotomic10<BigRational> {
        Cyclotomic10 { c: self.c.map(|x| BigRational::from_integer(x.into())) }
    }
}

impl Cyclotomic10<BigRational> {
    /// The element as a member of `Q(sqrt 5)`, if it is real.
    ///
    /// A real element has `c1 = 0` and `c3 = -c2`, and equals
    /// `c0 + c2(ζ² - ζ³) = c0 + c2 (sqrt 5 - 1)/2`.
    pub fn to_real(&self) -> Option<Sqrt5> {
        let [c0, c1, c2, c3] = &self.c;
        if !c1.is_zero() || *c3 != -c2.clone() {
            return None;
        }
        let half = BigRational::new(1.into(), 2.into());
        Some(Sqrt5::new(c0 - c2 * &half, c2 * &half))
    }
}

impl<C: Coeff> Zero for Cyclotomic10<C> {
    fn zero() -> Self {
        Cyclotomic10 { c: [C::zero(), C::zero(), C::zero(), C::zero()] }
    }

    fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }
}

impl<C: Coeff> One for Cyclotomic10<C> {
    fn one() -> Self {
        Self::from_coeff(C::one())
    }
}

impl<C: Coeff> Add for Cyclotomic10<C> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let [a0, a1, a2, a3] = self.c;
        let [b0, b1, b2, b3] = rhs.c;
        Cyclotomic10 { c: [a0 + b0, a1 + b1, a2 + b2, a3 + b3] }
    }
}

impl<C: Coeff> Sub for Cyclotomic10<C> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<C: Coeff> Neg for Cyclotomic10<C> {
    type Output = Self;
    fn neg(self) -> Self {
        Cyclotomic10 { c: self.c.map(|x| -x) }
    }
}

impl<C: Coeff> Mul for Cyclotomic10<C> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let mut p: [C; 7] = std::array::from_fn(|_| C::zero());
        for i in 0..4 {
            if self.c[i].is_zero() {
                continue;
            }
            for j in 0..4 {
                p[i + j] = p[i + j].clone() + self.c[i].clone() * rhs.c[j].clone();
            }
        }
        for k in (4..7).rev() {
            let t = std::mem::replace(&mut p[k], C::zero());
            if t.is_zero() {
                continue;
            }
            p[k - 1] = p[k - 1].clone() + t.clone();
            p[k - 2] = p[k - 2].clone() - t.clone();
            p[k - 3] = p[k - 3].clone() + t.clone();
            p[k - 4] = p[k - 4].clone() - t;
        }
        let [c0, c1, c2, c3, ..] = p;
        Cyclotomic10 { c: [c0, c1, c2, c3] }
    }
}

impl<C: Coeff + fmt::Display> fmt::Display for Cyclotomic10<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}ζ + {}ζ² + {}ζ³", self.c[0], self.c[1], self.c[2], self.c[3])
    }
}

/// The character `χ(i, j) = ζ^(-ij)` of `Z₁₀`.
pub fn chi<C: Coeff>(i: u8, j: u8) -> Cyclotomic10<C> {
    Cyclotomic10::zeta_pow(-((i as i64) * (j as i64)))
}

#[cfg(test)]
mod tests {
    use super::*;

    type Z = Cyclotomic10<i64>;

    fn close(x: &Z, re: f64, im: f64) -> bool {
        let v: Cyclotomic10<f64> = Cyclotomic10 { c: x.c.map(|c| c as f64) };
        let (a, b) = v.to_complex();
        (a - re).abs() < 1e-9 && (b - im).abs() < 1e-9
    }

    #[test]
    fn powers_of_zeta() {
        for k in 0..20 {
            let t = std::f64::consts::PI * k as f64 / 5.0;
            assert!(close(&Z::zeta_pow(k), t.cos(), t.sin()), "k = {k}");
        }
        assert_eq!(Z::zeta_pow(5), -Z::one());
        let mut acc = Z::one();
        for _ in 0..10 {
            acc = acc * Z::zeta_pow(1);
        }
        assert_eq!(acc, Z::one());
    }

    #[test]
    fn rotation_matches_product() {
        let x = Z::new([3, -1, 4, 1]);
        for k in 0..10 {
            assert_eq!(x.mul_zeta_pow(k), x.clone() * Z::zeta_pow(k));
        }
    }

    #[test]
    fn chi_values() {
        for j in 0..10 {
            assert_eq!(chi::<i64>(0, j), Z::one());
        }
        assert_eq!(chi::<i64>(1, 5), -Z::one());
        for i in 0..10u8 {
            for j in 0..10u8 {
                for k in 0..10u8 {
                    assert_eq!(chi::<i64>(i, j) * chi::<i64>(i, k), chi::<i64>(i, (j + k) % 10));
                }
            }
        }
    }

    #[test]
    fn real_elements_map_into_sqrt5() {
        for k in 0..10 {
            let x = Z::zeta_pow(k) + Z::zeta_pow(-k);
            let r = x.to_rational().to_real().expect("2 cos is real");
            let expected = 2.0 * (std::f64::consts::PI * k as f64 / 5.0).cos();
            assert!((r.approx() - expected).abs() < 1e-12);
        }
        assert!(Z::zeta_pow(1).to_rational().to_real().is_none());
        assert!(!Z::zeta_pow(1).is_real());
        assert!((Z::zeta_pow(2) - Z::zeta_pow(3)).is_real());
    }
}
