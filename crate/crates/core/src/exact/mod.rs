//! Exact arithmetic: rationals, sparse multivariate Laurent polynomials and
//! rational functions over ℚ.
//!
//! Variables are named and kept in lexicographic order. Every value is stored
//! in a canonical form, so structural equality is mathematical equality.

mod gcd;
mod json;
mod linalg;
mod poly;
mod ratfun;
mod resultant;

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

pub use gcd::{content_in, gcd, gcd_many};
pub use json::{PolyJson, RatFunJson, TermJson};
pub use linalg::{determinant, nullspace, Echelon};
pub use poly::{Exps, LaurentPoly};
pub use ratfun::{substitute_poly, RationalFunction};
pub use resultant::{radical, resultant};

/// Exact rational number.
pub type Rational = BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExactError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("substitution hits a pole")]
    Pole,
    #[error("{0} is not a polynomial")]
    NotPolynomial(String),
    #[error("inexact division")]
    InexactDivision,
    #[error("radical of the zero polynomial")]
    ZeroRadical,
    #[error("variable {0} has an odd exponent, cannot coerce to integral powers")]
    NonIntegral(String),
    #[error("variable {0} does not occur")]
    MissingVariable(String),
    #[error("malformed polynomial: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, ExactError>;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Operation for [`poly_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    /// Exact division; fails unless the divisor divides the dividend.
    Div,
}

pub fn poly_arith(a: &LaurentPoly, b: &LaurentPoly, op: ArithOp) -> Result<LaurentPoly> {
    Ok(match op {
        ArithOp::Add => a + b,
        ArithOp::Sub => a - b,
        ArithOp::Mul => a * b,
        ArithOp::Div => {
            if b.is_zero() {
                return Err(ExactError::DivisionByZero);
            }
            a.div_exact(b).ok_or(ExactError::InexactDivision)?
        }
    })
}
