//! Exact linear programming.
//!
//! Problems are solved with a dense two-phase simplex method over any ordered
//! field implementing [`Scalar`]. Rational problems use
//! [`BigRational`]; the Delsarte bound needs the real quadratic field
//! `Q(sqrt 5)`, provided by [`crate::sqrt5::Sqrt5`].

mod linsolve;
mod simplex;

use std::fmt::{Debug, Display};
use std::ops::{AddAssign, DivAssign, MulAssign, Neg, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::budget::Budget;
use crate::error::Result;

pub use linsolve::{solve_linear_system, RationalMatrix};

/// An exact ordered field element usable by the simplex method.
pub trait Scalar:
    Clone
    + Ord
    + Debug
    + Display
    + Send
    + Sync
    + Zero
    + One
    + Neg<Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + for<'a> MulAssign<&'a Self>
    + for<'a> DivAssign<&'a Self>
{
    fn from_rational(r: BigRational) -> Self;

    /// Largest integer not exceeding the value.
    fn floor(&self) -> BigInt;

    /// The value as a rational, when it is one.
    fn to_rational(&self) -> Option<BigRational>;

    /// Nearest double, for pivot guidance only.
    fn to_f64(&self) -> f64;
}

impl Scalar for BigRational {
    fn from_rational(r: BigRational) -> Self {
        r
    }

    fn floor(&self) -> BigInt {
        num_integer::Integer::div_floor(self.numer(), self.denom())
    }

    fn to_rational(&self) -> Option<BigRational> {
        Some(self.clone())
    }

    fn to_f64(&self) -> f64 {
        num_traits::ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
}

pub fn rational(numer: i64, denom: i64) -> BigRational {
    BigRational::new(numer.into(), denom.into())
}

pub fn int(v: i64) -> BigRational {
    BigRational::from_integer(v.into())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    Minimize,
    Maximize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    LessEq,
    GreaterEq,
    Equal,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constraint<T> {
    pub coeffs: Vec<T>,
    pub relation: Relation,
    pub rhs: T,
}

/// A linear program `opt c.x` subject to row constraints and per-variable
/// lower bounds (zero unless changed; `None` makes a variable free).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LpProblem<T> {
    pub sense: Sense,
    pub objective: Vec<T>,
    pub constraints: Vec<Constraint<T>>,
    pub lower_bounds: Vec<Option<T>>,
}

impl<T: Scalar> LpProblem<T> {
    pub fn new(sense: Sense, objective: Vec<T>) -> LpProblem<T> {
        let lower_bounds = vec![Some(T::zero()); objective.len()];
        LpProblem { sense, objective, constraints: Vec::new(), lower_bounds }
    }

    pub fn num_vars(&self) -> usize {
        self.objective.len()
    }

    pub fn add_constraint(&mut self, coeffs: Vec<T>, relation: Relation, rhs: T) -> Result<()> {
        if coeffs.len() != self.num_vars() {
            return Err(crate::Error::LengthMismatch { left: coeffs.len(), right: self.num_vars() });
        }
        self.constraints.push(Constraint { coeffs, relation, rhs });
        Ok(())
    }

    pub fn set_lower_bound(&mut self, var: usize, bound: Option<T>) {
        self.lower_bounds[var] = bound;
    }

    pub fn objective_value(&self, x: &[T]) -> T {
        dot(&self.objective, x)
    }

    /// Whether `x` satisfies every constraint and bound exactly.
    pub fn is_feasible(&self, x: &[T]) -> bool {
        if x.len() != self.num_vars() {
            return false;
        }
        let bounds_ok = self.lower_bounds.iter().zip(x).all(|(lb, v)| lb.as_ref().is_none_or(|l| v >= l));
        bounds_ok
            && self.constraints.iter().all(|c| {
                let lhs = dot(&c.coeffs, x);
                match c.relation {
                    Relation::LessEq => lhs <= c.rhs,
                    Relation::GreaterEq => lhs >= c.rhs,
                    Relation::Equal => lhs == c.rhs,
                }
            })
    }
}

pub(crate) fn dot<T: Scalar>(a: &[T], b: &[T]) -> T {
    let mut acc = T::zero();
    for (x, y) in a.iter().zip(b) {
        if x.is_zero() || y.is_zero() {
            continue;
        }
        let mut t = x.clone();
        t *= y;
        acc += &t;
    }
    acc
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    Unbounded,
    Infeasible,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome<T> {
    Optimal { value: T, solution: Vec<T> },
    Unbounded,
    Infeasible,
}

impl<T> LpOutcome<T> {
    pub fn status(&self) -> LpStatus {
        match self {
            LpOutcome::Optimal { .. } => LpStatus::Optimal,
            LpOutcome::Unbounded => LpStatus::Unbounded,
            LpOutcome::Infeasible => LpStatus::Infeasible,
        }
    }

    pub fn value(&self) -> Option<&T> {
        match self {
            LpOutcome::Optimal { value, .. } => Some(value),
            _ => None,
        }
    }

    pub fn solution(&self) -> Option<&[T]> {
        match self {
            LpOutcome::Optimal { solution, .. } => Some(solution),
            _ => None,
        }
    }
}

pub fn solve<T: Scalar>(problem: &LpProblem<T>) -> LpOutcome<T> {
    simplex::solve(problem, &Budget::unlimited()).expect("an unlimited budget cannot expire")
}

/// As [`solve`], giving up with [`crate::Error::BudgetExceeded`] once the budget runs out.
pub fn solve_within<T: Scalar>(problem: &LpProblem<T>, budget: &Budget) -> Result<LpOutcome<T>> {
    simplex::solve(problem, budget)
}
