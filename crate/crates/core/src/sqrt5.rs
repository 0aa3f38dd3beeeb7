//! Exact arithmetic in the real quadratic field `Q(sqrt 5)`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::lp::Scalar;

/// The number `a + b * sqrt(5)` with rational `a`, `b`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Sqrt5 {
    pub a: BigRational,
    pub b: BigRational,
}

impl Sqrt5 {
    pub fn new(a: BigRational, b: BigRational) -> Sqrt5 {
        Sqrt5 { a, b }
    }

    pub fn from_integer(v: i64) -> Sqrt5 {
        Sqrt5 { a: BigRational::from_integer(v.into()), b: BigRational::zero() }
    }

    #[allow(clippy::self_named_constructors)]
    pub fn sqrt5() -> Sqrt5 {
        Sqrt5 { a: BigRational::zero(), b: BigRational::one() }
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Norm `a^2 - 5 b^2`, zero only for zero.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - BigRational::from_integer(5.into()) * &self.b * &self.b
    }

    pub fn conjugate(&self) -> Sqrt5 {
        Sqrt5 { a: self.a.clone(), b: -self.b.clone() }
    }

    pub fn signum(&self) -> Ordering {
        let sa = self.a.cmp(&BigRational::zero());
        let sb = self.b.cmp(&BigRational::zero());
        match (sa, sb) {
            (Ordering::Equal, s) | (s, Ordering::Equal) => s,
            (x, y) if x == y => x,
            // Opposite signs: the term with the larger square wins.
            (sa, _) => {
                let a2 = &self.a * &self.a;
                let b2 = BigRational::from_integer(5.into()) * &self.b * &self.b;
                match a2.cmp(&b2) {
                    Ordering::Greater => sa,
                    Ordering::Less => sa.reverse(),
                    Ordering::Equal => Ordering::Equal,
                }
            }
        }
    }

    pub fn approx(&self) -> f64 {
        let a = ToPrimitive::to_f64(&self.a).unwrap_or(f64::NAN);
        let b = ToPrimitive::to_f64(&self.b).unwrap_or(f64::NAN);
        a + b * 5f64.sqrt()
    }

    /// Writes the value as `(A + B sqrt 5) / D` with integers and `D > 0`.
    pub fn common_denominator(&self) -> (BigInt, BigInt, BigInt) {
        let d = self.a.denom().lcm(self.b.denom());
        let num_a = self.a.numer() * (&d / self.a.denom());
        let num_b = self.b.numer() * (&d / self.b.denom());
        (num_a, num_b, d)
    }

    fn inverse(&self) -> Sqrt5 {
        let n = self.norm();
        assert!(!n.is_zero(), "division by zero in Q(sqrt 5)");
        Sqrt5 { a: &self.a / &n, b: -(&self.b / &n) }
    }
}

impl fmt::Display for Sqrt5 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        let sign = if self.b.is_negative() { '-' } else { '+' };
        write!(f, "{}{}{}*sqrt(5)", self.a, sign, self.b.abs())
    }
}

impl PartialOrd for Sqrt5 {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Sqrt5 {
    fn cmp(&self, other: &Self) -> Ordering {
        if self.b == other.b {
            return self.a.cmp(&other.a);
        }
        (self.clone() - other.clone()).signum()
    }
}

impl From<BigRational> for Sqrt5 {
    fn from(a: BigRational) -> Sqrt5 {
        Sqrt5 { a, b: BigRational::zero() }
    }
}

impl<'a> AddAssign<&'a Sqrt5> for Sqrt5 {
    fn add_assign(&mut self, rhs: &'a Sqrt5) {
        self.a += &rhs.a;
        self.b += &rhs.b;
    }
}

impl<'a> SubAssign<&'a Sqrt5> for Sqrt5 {
    fn sub_assign(&mut self, rhs: &'a Sqrt5) {
        self.a -= &rhs.a;
        self.b -= &rhs.b;
    }
}

impl<'a> MulAssign<&'a Sqrt5> for Sqrt5 {
    fn mul_assign(&mut self, rhs: &'a Sqrt5) {
        if rhs.b.is_zero() {
            self.a *= &rhs.a;
            self.b *= &rhs.a;
            return;
        }
        let five = BigRational::from_integer(5.into());
        let a = &self.a * &rhs.a + five * &self.b * &rhs.b;
        let b = &self.a * &rhs.b + &self.b * &rhs.a;
        self.a = a;
        self.b = b;
    }
}

impl<'a> DivAssign<&'a Sqrt5> for Sqrt5 {
    fn div_assign(&mut self, rhs: &'a Sqrt5) {
        if rhs.b.is_zero() {
            self.a /= &rhs.a;
            self.b /= &rhs.a;
            return;
        }
        *self *= &rhs.inverse();
    }
}

macro_rules! by_value_op {
    ($tr:ident, $f:ident, $assign:ident) => {
        impl $tr for Sqrt5 {
            type Output = Sqrt5;
            fn $f(mut self, rhs: Sqrt5) -> Sqrt5 {
                self.$assign(&rhs);
                self
            }
        }
    };
}

by_value_op!(Add, add, add_assign);
by_value_op!(Sub, sub, sub_assign);
by_value_op!(Mul, mul, mul_assign);
by_value_op!(Div, div, div_assign);

impl Neg for Sqrt5 {
    type Output = Sqrt5;
    fn neg(self) -> Sqrt5 {
        Sqrt5 { a: -self.a, b: -self.b }
    }
}

impl Zero for Sqrt5 {
    fn zero() -> Sqrt5 {
        Sqrt5 { a: BigRational::zero(), b: BigRational::zero() }
    }

    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for Sqrt5 {
    fn one() -> Sqrt5 {
        Sqrt5 { a: BigRational::one(), b: BigRational::zero() }
    }
}

impl Scalar for Sqrt5 {
    fn from_rational(r: BigRational) -> Sqrt5 {
        r.into()
    }

    fn floor(&self) -> BigInt {
        if self.b.is_zero() {
            return self.a.floor().to_integer();
        }
        let guess = self.approx().floor();
        let mut k = BigInt::from(guess as i128);
        let as_field = |k: &BigInt| Sqrt5::from(BigRational::from_integer(k.clone()));
        while as_field(&k) > *self {
            k -= 1;
        }
        while as_field(&(&k + 1)) <= *self {
            k += 1;
        }
        k
    }

    fn to_rational(&self) -> Option<BigRational> {
        self.b.is_zero().then(|| self.a.clone())
    }

    fn to_f64(&self) -> f64 {
        self.approx()
    }
}
