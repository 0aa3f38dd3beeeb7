//! Bound results shared by the hypergraph and Delsarte frameworks.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::ald::Lambda;
use crate::lp::Scalar;
use crate::sqrt5::Sqrt5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    HypergraphLp,
    Naive,
    Optimal1,
    Simple,
    Weights1,
    Delsarte,
}

impl Method {
    pub const ALL: [Method; 6] =
        [Method::HypergraphLp, Method::Naive, Method::Optimal1, Method::Simple, Method::Weights1, Method::Delsarte];

    pub fn name(self) -> &'static str {
        match self {
            Method::HypergraphLp => "lp",
            Method::Naive => "naive",
            Method::Optimal1 => "optimal1",
            Method::Simple => "simple",
            Method::Weights1 => "weights1",
            Method::Delsarte => "delsarte",
        }
    }

    pub fn from_name(name: &str) -> Option<Method> {
        Method::ALL.into_iter().find(|m| m.name() == name)
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// An exact bound value, rational or in `Q(sqrt 5)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExactValue {
    Rational(BigRational),
    Surd(Sqrt5),
}

impl ExactValue {
    pub fn floor(&self) -> BigInt {
        match self {
            ExactValue::Rational(r) => Scalar::floor(r),
            ExactValue::Surd(s) => Scalar::floor(s),
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            ExactValue::Rational(r) => num_traits::ToPrimitive::to_f64(r).unwrap_or(f64::NAN),
            ExactValue::Surd(s) => s.approx(),
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            ExactValue::Rational(r) => Some(r),
            ExactValue::Surd(_) => None,
        }
    }

    /// Numerator and denominator strings; a surd numerator reads `A+B*sqrt(5)`.
    pub fn num_den(&self) -> (String, String) {
        match self {
            ExactValue::Rational(r) => (r.numer().to_string(), r.denom().to_string()),
            ExactValue::Surd(s) => {
                let (a, b, d) = s.common_denominator();
                let sign = if b < BigInt::from(0) { "-" } else { "+" };
                let b_abs = if b < BigInt::from(0) { -b } else { b };
                (format!("{a}{sign}{b_abs}*sqrt(5)"), d.to_string())
            }
        }
    }
}

impl From<Sqrt5> for ExactValue {
    fn from(s: Sqrt5) -> ExactValue {
        match s.to_rational() {
            Some(r) => ExactValue::Rational(r),
            None => ExactValue::Surd(s),
        }
    }
}

impl From<BigRational> for ExactValue {
    fn from(r: BigRational) -> ExactValue {
        ExactValue::Rational(r)
    }
}

impl fmt::Display for ExactValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactValue::Rational(r) => write!(f, "{r}"),
            ExactValue::Surd(s) => write!(f, "{s}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BoundValue {
    Finite(ExactValue),
    Unbounded,
}

impl BoundValue {
    pub fn floor(&self) -> Option<BigInt> {
        match self {
            BoundValue::Finite(v) => Some(v.floor()),
            BoundValue::Unbounded => None,
        }
    }

    pub fn exact(&self) -> Option<&ExactValue> {
        match self {
            BoundValue::Finite(v) => Some(v),
            BoundValue::Unbounded => None,
        }
    }

    pub fn is_unbounded(&self) -> bool {
        matches!(self, BoundValue::Unbounded)
    }
}

impl fmt::Display for BoundValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundValue::Finite(v) => write!(f, "{v}"),
            BoundValue::Unbounded => f.write_str("unbounded"),
        }
    }
}

/// An upper bound on the size of a code of length `n` and minimum distance `d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub method: Method,
    pub n: usize,
    pub d: u64,
    pub lambda: Lambda,
    pub value: BoundValue,
    /// Class weights `w_0..w_n` behind a hypergraph bound.
    pub weights: Option<Vec<BigRational>>,
}

impl BoundReport {
    pub fn floor(&self) -> Option<BigInt> {
        self.value.floor()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lp::rational;

    #[test]
    fn surd_num_den() {
        let v = ExactValue::from(Sqrt5::new(rational(1, 2), rational(-3, 4)));
        assert_eq!(v.num_den(), ("2-3*sqrt(5)".to_string(), "4".to_string()));
    }

    #[test]
    fn rational_surds_collapse() {
        let v = ExactValue::from(Sqrt5::new(rational(7, 3), rational(0, 1)));
        assert_eq!(v, ExactValue::Rational(rational(7, 3)));
        assert_eq!(v.floor(), BigInt::from(2));
    }

    #[test]
    fn method_names_round_trip() {
        for m in Method::ALL {
            assert_eq!(Method::from_name(m.name()), Some(m));
        }
    }
}
