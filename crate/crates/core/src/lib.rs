//! Twist knots through the lens of q-holonomic sequences.
//!
//! The crate computes the cyclotomic function of the twist knots `K_p`, the
//! non-commutative C-polynomials `C_p(E, Q)` that annihilate it, and their
//! image on the A-polynomial side under the map `φ`. Every computation is
//! exact over ℚ.
//!
//! The main entry points are the runnable examples:
//!
//! ```text
//! cargo run --example cyclotomic     # Ĵ_p(n), colored Jones, q = 1 limit
//! cargo run --example cpoly          # C_p: closed form, recursion, tables
//! cargo run --example annihilate     # C_p · Ĵ_p = 0
//! cargo run --example telescope      # Sister Celine and WZ certificates
//! cargo run --example apoly          # φ-map, A-polynomials, inversion
//! cargo run --example json_io        # polynomial exchange format
//! ```
//!
//! The `qknot` binary wraps the same functionality behind subcommands.

pub mod acurve;
pub mod cli;
pub mod cpoly;
pub mod cyclotomic;
pub mod exact;
pub mod qweyl;
pub mod telescope;

pub use exact::{ExactError, LaurentPoly, Rational, RationalFunction};
pub use qweyl::{QSequence, WeylOp};

/// Variable names shared by all modules.
pub mod names {
    /// Shift operator, `E f(n) = f(n+1)`.
    pub const E: &str = "E";
    /// Multiplication by `q^n`.
    pub const Q: &str = "Q";
    pub const SMALL_Q: &str = "q";
    /// `q^k` for the summation variable.
    pub const K: &str = "K";
    pub const L: &str = "L";
    pub const M: &str = "M";
    /// `q^{1/2}`.
    pub const U: &str = "u";
}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("{0} is not a polynomial")]
    NotPolynomial(String),
    #[error("integrality violated: {0}")]
    Integrality(String),
    #[error("pole: {0}")]
    Pole(String),
    #[error("no solution found within the given bounds")]
    NoSolution,
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
