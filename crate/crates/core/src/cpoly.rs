//! The non-commutative C-polynomial `C_p(E,Q,q)` of the twist knot `K_p`,
//! its `q = 1` evaluation `C_p(E,Q)`, the backward form `D_p = C_p^op`, and
//! the coefficient tables for `|p| ≤ 3`.
//!
//! The coefficients `a_p(q^n, i)` are stated as functions of `n`. They become
//! Laurent polynomials in `Q = q^n` because the only `n`-dependence sits in
//! explicit powers of `q` and in a ratio of factorials; every q-binomial has
//! constant arguments. Concretely, for `p > 0`,
//!
//! ```text
//! q^{(p−i)(n+p+1)}            = Q^{p−i} q^{(p−i)(p+1)}
//! (q;q)_{n+p−1}/(q;q)_{n+i}   = ∏_{j=i+1}^{p−1} (1 − q^j Q)
//! q^{(2n+p+i+1)j}             = Q^{2j} q^{(p+i+1)j}
//! ```
//!
//! and analogously for `p < 0`.

use std::fmt::{self, Write as _};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::cyclotomic::{alexander_twist, alexander_z, q_binomial};
use crate::exact::{LaurentPoly, Rational, RationalFunction};
use crate::names::{E, Q, SMALL_Q};
use crate::qweyl::{op_reverse, Specialization, Specialized, WeylOp};
use crate::{Error, Result};

fn q_pow(e: i64) -> LaurentPoly {
    LaurentPoly::monomial(&[(SMALL_Q, e as i32)], Rational::one())
}

fn big_q_pow(e: i64) -> LaurentPoly {
    LaurentPoly::monomial(&[(Q, e as i32)], Rational::one())
}

fn e_pow(e: i64) -> LaurentPoly {
    LaurentPoly::monomial(&[(E, e as i32)], Rational::one())
}

/// `∏_{j=lo}^{hi} (1 − q^j Q)`.
fn q_shifted_product(lo: i64, hi: i64) -> LaurentPoly {
    let mut acc = LaurentPoly::one();
    for j in lo..=hi {
        acc = acc * (LaurentPoly::one() - q_pow(j) * big_q_pow(1));
    }
    acc
}

/// Binomial coefficient with arbitrary integer top and `0` for `n < 0`.
pub fn binom(m: i64, n: i64) -> BigInt {
    if n < 0 {
        return BigInt::zero();
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for j in 0..n {
        num *= BigInt::from(m - j);
        den *= BigInt::from(j + 1);
    }
    num / den
}

fn int_poly(c: BigInt) -> LaurentPoly {
    LaurentPoly::constant(Rational::from_integer(c))
}

/// `a_p(Q, i)` for `0 ≤ i < |p|`.
pub fn nc_coeff(p: i64, i: i64) -> LaurentPoly {
    let qb = q_binomial;
    if p > 0 {
        let mut sum = LaurentPoly::zero();
        for j in 0..=i {
            sum = sum
                + big_q_pow(2 * j)
                    * q_pow((p + i + 1) * j)
                    * qb(p - j, p - i)
                    * qb(p - i + j - 1, j);
        }
        for j in 0..i {
            sum = sum
                - big_q_pow(2 * j + 1)
                    * q_pow((p + i + 1) * j + p)
                    * qb(p - j - 1, p - i)
                    * qb(p - i + j - 1, j);
        }
        big_q_pow(p - i) * q_pow((p - i) * (p + 1)) * q_shifted_product(i + 1, p - 1) * sum
    } else if p < 0 {
        let mut sum = LaurentPoly::zero();
        for j in 0..=i {
            sum = sum
                - big_q_pow(2 * j) * q_pow((i - p) * j) * qb(-p - j - 1, i - j) * qb(-p - i + j, j);
        }
        for j in 0..i {
            sum = sum
                + big_q_pow(2 * j + 1)
                    * q_pow((i - p) * j - p)
                    * qb(-p - j - 2, i - j - 1)
                    * qb(-p - i + j, j);
        }
        big_q_pow(p - i + 1) * q_pow(-(p - i + 1) * p) * q_shifted_product(i + 1, -p - 1) * sum
    } else {
        LaurentPoly::zero()
    }
}

/// `C_p(E, Q, q)`, monic of degree `|p|` in `E`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CPolyNC {
    pub p: i64,
    pub op: WeylOp,
}

impl CPolyNC {
    /// The operator as a polynomial in `E, Q, q`.
    pub fn poly(&self) -> LaurentPoly {
        self.op.to_poly().expect("C_p has polynomial coefficients")
    }
}

pub fn nc_cpoly(p: i64) -> CPolyNC {
    let d = p.abs();
    let mut coeffs: Vec<RationalFunction> = (0..d)
        .map(|i| RationalFunction::from_poly(nc_coeff(p, i)))
        .collect();
    coeffs.push(RationalFunction::one());
    CPolyNC {
        p,
        op: WeylOp::from_coeffs(coeffs),
    }
}

/// `C_p(E, Q)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CPolyC {
    pub p: i64,
    pub poly: LaurentPoly,
}

/// `b_p(Q, i)`, the `q = 1` value of `a_p(Q, i)`.
pub fn closed_coeff(p: i64, i: i64) -> LaurentPoly {
    let one = LaurentPoly::one();
    let qq = big_q_pow(1);
    if p > 0 {
        let mut sum = LaurentPoly::zero();
        for j in 0..=i {
            sum = sum + big_q_pow(2 * j) * int_poly(binom(p - j, p - i) * binom(p - i + j - 1, j));
        }
        for j in 0..i {
            sum = sum
                - big_q_pow(2 * j + 1)
                    * int_poly(binom(p - j - 1, p - i) * binom(p - i + j - 1, j));
        }
        big_q_pow(p - i) * (&one - &qq).pow((p - i - 1) as u32) * sum
    } else if p < 0 {
        let mut sum = LaurentPoly::zero();
        for j in 0..=i {
            sum =
                sum - big_q_pow(2 * j) * int_poly(binom(-p - j - 1, i - j) * binom(-p - i + j, j));
        }
        for j in 0..i {
            sum = sum
                + big_q_pow(2 * j + 1)
                    * int_poly(binom(-p - j - 2, i - j - 1) * binom(-p - i + j, j));
        }
        big_q_pow(p - i + 1) * (&one - &qq).pow((-p - i - 1) as u32) * sum
    } else {
        LaurentPoly::zero()
    }
}

pub fn cpoly_closed(p: i64) -> CPolyC {
    let d = p.abs();
    let mut poly = e_pow(d);
    for i in 0..d {
        poly = poly + closed_coeff(p, i) * e_pow(i);
    }
    CPolyC { p, poly }
}

/// `Q − Q² + E + Q²E`.
fn three_term_factor() -> LaurentPoly {
    let qq = big_q_pow(1);
    let e = e_pow(1);
    &qq - &qq.pow(2) + &e + &qq.pow(2) * &e
}

/// `C_p(E, Q)` from the three-term recursions in `p`.
pub fn cpoly_recursive(p: i64) -> CPolyC {
    let x = three_term_factor();
    let q2 = big_q_pow(2);
    let e2 = e_pow(2);
    let mut prev = LaurentPoly::one();
    if p == 0 {
        return CPolyC { p, poly: prev };
    }
    let mut cur = if p > 0 {
        big_q_pow(1) + e_pow(1)
    } else {
        e_pow(1) - LaurentPoly::one()
    };
    let qm2 = big_q_pow(-2);
    for _ in 1..p.abs() {
        let next = if p > 0 {
            &x * &cur - &q2 * &e2 * &prev
        } else {
            &x * &qm2 * &cur - &e2 * &qm2 * &prev
        };
        prev = cur;
        cur = next;
    }
    CPolyC { p, poly: cur }
}

/// `D_p = C_p^op`.
pub fn backward_form(p: i64) -> LaurentPoly {
    op_reverse(&cpoly_closed(p).poly)
}

/// `b′_p(Q, i)`, the coefficient of `E^i` in `D_p`.
pub fn backward_coeff(p: i64, i: i64) -> LaurentPoly {
    let one = LaurentPoly::one();
    let qq = big_q_pow(1);
    let head = big_q_pow(i) * (&one - &qq).pow_i((i - 1) as i32);
    let b = |m, n| int_poly(binom(m, n));
    let body = if p > 0 {
        let mut s = LaurentPoly::zero();
        for j in 0..=p - i {
            s = s + big_q_pow(2 * j) * b(p - j, i) * b(i + j - 1, j);
        }
        for j in 0..p - i {
            s = s - big_q_pow(2 * j + 1) * b(p - j - 1, i) * b(i + j - 1, j);
        }
        s
    } else if p < 0 {
        let mut s = LaurentPoly::zero();
        for j in 0..=-p - i {
            s = s - big_q_pow(2 * j) * b(-p - j - 1, i - 1) * b(i + j, j);
        }
        for j in 0..-p - i {
            s = s + big_q_pow(2 * j + 1) * b(-p - j - 2, i - 1) * b(i + j, j);
        }
        big_q_pow(2 * p + 1) * s
    } else {
        LaurentPoly::zero()
    };
    head * body
}

/// `1 + Σ_{i=1}^{|p|} b′_p(Q, i) E^i`.
pub fn backward_form_closed(p: i64) -> LaurentPoly {
    let mut d = LaurentPoly::one();
    for i in 1..=p.abs() {
        d = d + backward_coeff(p, i) * e_pow(i);
    }
    d
}

/// Checks `D_p = (QE − Q²(E−1) + 1) D_{p−1} − Q² D_{p−2}`.
pub fn backward_recursion_holds(p: i64) -> bool {
    let qq = big_q_pow(1);
    let e = e_pow(1);
    let x = &qq * &e - qq.pow(2) * (&e - LaurentPoly::one()) + LaurentPoly::one();
    backward_form(p) == x * backward_form(p - 1) - qq.pow(2) * backward_form(p - 2)
}

/// `a′_p(Q, i)` of the backward recursion `Ĵ_p(n) + Σ_{i=1}^{|p|} a′_p(q^n, i) Ĵ_p(n−i) = 0`.
///
/// The factorial ratio `(q;q)_{n−1}/(q;q)_{n−i}` is rewritten as
/// `∏_{j=1}^{i−1} (1 − q^{−j} Q)`, valid for `n ≥ i`.
pub fn nc_backward_coeff(p: i64, i: i64) -> Result<RationalFunction> {
    let d = p.abs();
    if p == 0 || i < 1 || i > d {
        return Err(Error::InvalidArgument(format!(
            "backward coefficient index {i} outside 1..={d}"
        )));
    }
    let qb = q_binomial;
    let mut ratio = LaurentPoly::one();
    for j in 1..i {
        ratio = ratio * (LaurentPoly::one() - q_pow(-j) * big_q_pow(1));
    }
    let v = if p > 0 {
        let mut s = LaurentPoly::zero();
        for j in 0..=p - i {
            s = s + big_q_pow(2 * j) * q_pow((1 - i) * j) * qb(p - j, i) * qb(i + j - 1, j);
        }
        for j in 0..p - i {
            s = s - big_q_pow(2 * j + 1) * q_pow((1 - i) * j) * qb(p - j - 1, i) * qb(i + j - 1, j);
        }
        big_q_pow(i) * q_pow(i) * ratio * s
    } else {
        let mut s = LaurentPoly::zero();
        for j in 0..=-p - i {
            s = s - big_q_pow(2 * j) * q_pow(-i * j) * qb(-p - j - 1, i - 1) * qb(i + j, j);
        }
        for j in 0..-p - i {
            s = s + big_q_pow(2 * j + 1) * q_pow(-i * j) * qb(-p - j - 2, i - 1) * qb(i + j, j);
        }
        big_q_pow(2 * p + i + 1) * ratio * s
    };
    Ok(RationalFunction::from_poly(v))
}

/// `C_p^op(M − 2 + M^{−1}, 1) = Δ_p(M)`.
pub fn alexander_specialization(p: i64) -> bool {
    let d = backward_form(p);
    let at_q1 = d.subs_monomial(Q, &Rational::one(), &[]);
    match at_q1.subs_poly(E, &alexander_z()) {
        Ok(v) => v == alexander_twist(p),
        Err(_) => false,
    }
}

/// `specialize(C_p(E,Q,q), q → 1) = C_p(E,Q)`.
pub fn q1_consistency(p: i64) -> Result<bool> {
    match nc_cpoly(p).op.specialize(Specialization::SmallQ)? {
        Specialized::Commutative(c) => Ok(c == cpoly_closed(p).poly),
        Specialized::Operator(_) => Ok(false),
    }
}

/// Summands `s^{(l)}_p(E, Q, i, j)` of `D_p` for `p > 0`, with
/// `D_p = 1 + Σ s^{(1)} − Σ s^{(2)}`.
pub fn backward_summand(l: u8, p: i64, i: i64, j: i64) -> RationalFunction {
    let one = LaurentPoly::one();
    let qq = big_q_pow(1);
    let head = RationalFunction::from_poly(big_q_pow(i) * e_pow(i))
        * RationalFunction::from_poly(&one - &qq)
            .pow((i - 1) as i32)
            .unwrap();
    let c = match l {
        1 => big_q_pow(2 * j) * int_poly(binom(p - j, p - i - j) * binom(i + j - 1, j)),
        _ => big_q_pow(2 * j + 1) * int_poly(binom(p - j - 1, p - i - j - 1) * binom(i + j - 1, j)),
    };
    head * RationalFunction::from_poly(c)
}

/// The five-term recursion in `p` shared by both summands, checked for
/// `1 ≤ i ≤ p`, `0 ≤ j ≤ p`.
pub fn summand_recursion_holds(p: i64) -> bool {
    let qq = RationalFunction::from_poly(big_q_pow(1));
    let q2 = &qq * &qq;
    let e_term =
        RationalFunction::from_poly(e_pow(1) * (big_q_pow(1) - LaurentPoly::one()) * big_q_pow(1));
    for l in [1u8, 2] {
        let s = |pp: i64, i: i64, j: i64| backward_summand(l, pp, i, j);
        for i in 1..=p {
            for j in 0..=p {
                let lhs = -(&q2 * &s(p - 2, i, j - 1)) - &e_term * &s(p - 1, i - 1, j)
                    + &q2 * &s(p - 1, i, j - 1)
                    + s(p - 1, i, j)
                    - s(p, i, j);
                if !lhs.is_zero() {
                    return false;
                }
            }
        }
    }
    true
}

/// Sum of the summands, `1 + D^{(1)}_p − D^{(2)}_p`.
pub fn backward_form_from_summands(p: i64) -> RationalFunction {
    let mut acc = RationalFunction::one();
    for i in 1..=p {
        for j in 0..=p - i {
            acc = acc + backward_summand(1, p, i, j);
        }
        for j in 0..p - i {
            acc = acc - backward_summand(2, p, i, j);
        }
    }
    acc
}

/// Coefficients of `C_p(E,Q,q)` arranged by `E`-row and `Q`-column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeffMatrix {
    pub p: i64,
    pub q_min: i64,
    /// `rows[i][j]` is the coefficient of `Q^{q_min + j} E^i`.
    pub rows: Vec<Vec<LaurentPoly>>,
}

impl CoeffMatrix {
    pub fn from_poly(p: i64, poly: &LaurentPoly) -> Self {
        let d = p.unsigned_abs() as usize;
        let by_e = poly.coeffs_in(E);
        let mut lo = 0i64;
        let mut hi = 0i64;
        for c in by_e.values() {
            lo = lo.min(c.min_degree_in(Q).unwrap_or(0) as i64);
            hi = hi.max(c.max_degree_in(Q).unwrap_or(0) as i64);
        }
        let width = (hi - lo + 1) as usize;
        let mut rows = vec![vec![LaurentPoly::zero(); width]; d + 1];
        for (i, c) in by_e {
            for (j, v) in c.coeffs_in(Q) {
                rows[i as usize][(j as i64 - lo) as usize] = v;
            }
        }
        CoeffMatrix { p, q_min: lo, rows }
    }

    pub fn cell(&self, i: usize, q_exp: i64) -> LaurentPoly {
        let j = q_exp - self.q_min;
        if j < 0 {
            return LaurentPoly::zero();
        }
        self.rows
            .get(i)
            .and_then(|r| r.get(j as usize))
            .cloned()
            .unwrap_or_default()
    }

    pub fn q_max(&self) -> i64 {
        self.q_min + self.rows.first().map_or(0, |r| r.len() as i64) - 1
    }

    pub fn to_latex(&self) -> String {
        let name = if self.p < 0 {
            format!("C_{{{}}}", self.p)
        } else {
            format!("C_{}", self.p)
        };
        let mut out = String::from("\\mat{\n");
        let mut header = vec![name];
        for e in self.q_min..=self.q_max() {
            header.push(latex_power("Q", e));
        }
        let _ = writeln!(out, "{} \\\\ \\hline", header.join(" & "));
        for (i, row) in self.rows.iter().enumerate() {
            let mut cells = vec![format!("E^{i}")];
            cells.extend(row.iter().map(latex_qpoly));
            let sep = if i + 1 == self.rows.len() {
                ""
            } else {
                " \\\\"
            };
            let _ = writeln!(out, "{}{}", cells.join(" & "), sep);
        }
        out.push('}');
        out
    }
}

impl fmt::Display for CoeffMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut header = vec![format!("C_{}", self.p)];
        header.extend((self.q_min..=self.q_max()).map(|e| format!("Q^{e}")));
        let mut table = vec![header];
        for (i, row) in self.rows.iter().enumerate() {
            let mut r = vec![format!("E^{i}")];
            r.extend(row.iter().map(|c| c.to_string()));
            table.push(r);
        }
        let cols = table[0].len();
        let widths: Vec<usize> = (0..cols)
            .map(|c| table.iter().map(|r| r[c].chars().count()).max().unwrap())
            .collect();
        for r in &table {
            let cells: Vec<String> = r
                .iter()
                .zip(&widths)
                .map(|(s, w)| format!("{s:<w$}"))
                .collect();
            writeln!(f, "{}", cells.join("  ").trim_end())?;
        }
        Ok(())
    }
}

fn latex_power(var: &str, e: i64) -> String {
    if (0..10).contains(&e) {
        format!("{var}^{e}")
    } else {
        format!("{var}^{{{e}}}")
    }
}

/// A Laurent polynomial in `q` in the table style: ascending powers, e.g.
/// `-q^{10}-2 q^{11}-q^{12}`.
fn latex_qpoly(p: &LaurentPoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, (e, c)) in p.terms().enumerate() {
        let exp = e.first().copied().unwrap_or(0) as i64;
        let neg = c.is_negative();
        let a = c.abs();
        if neg {
            out.push('-');
        } else if k > 0 {
            out.push('+');
        }
        let mono = if exp == 0 {
            String::new()
        } else if exp == 1 {
            "q".into()
        } else {
            latex_power("q", exp)
        };
        if mono.is_empty() {
            let _ = write!(out, "{a}");
        } else if a.is_one() {
            out.push_str(&mono);
        } else {
            let _ = write!(out, "{a} {mono}");
        }
    }
    out
}

/// The coefficient tables for `p = −3, …, 3`, as printed.
///
/// Two reading rules apply to the printed layout. The top row `E^{|p|}` is
/// the monic term `E^{|p|}`, whatever column its `1` is printed in. The
/// single column of the `C_{−1}` table is `Q^0`.
const APPENDIX: &[(i64, &str)] = &[
    (
        1,
        r"
C_1 & Q^0 & Q^1 \\
E^0 & 0 & q^2 \\
E^1 & 1 & 0",
    ),
    (
        2,
        r"
C_2 & Q^0 & Q^1 & Q^2 & Q^3  \\
E^0 & 0 & 0 & q^6 & -q^7 \\
E^1 & 0 & q^3+q^4 & -q^5 & q^7 \\
E^2 & 1 & 0 & 0 & 0",
    ),
    (
        3,
        r"
C_3 & Q^0 & Q^1 & Q^2 & Q^3 & Q^4 & Q^5  \\
E^0 & 0 & 0 & 0 & q^{12} & -q^{13}-q^{14} & q^{15} \\
E^1 & 0 & 0 & q^8 + q^9 + q^{10} & -q^{10}-2 q^{11} -q^{12} & 2 q^{13}+q^{14} & -q^{15}-q^{16} \\
E^2 & 0 & q^4 +q^5+q^6 & -q^7-q^8 & q^{10}+q^{11} & -q^{13} & q^{16} \\
E^3 & 1 & 0 & 0 & 0 & 0 & 0",
    ),
    (
        -1,
        r"
C_{-1} & Q^0 \\
E^0  & -1 \\
E^1 & 1",
    ),
    (
        -2,
        r"
C_{-2} & Q^{-2} & Q^{-1} & Q^0 \\
E^0 & 0 & -q^{-2} & q^{-1} \\
E^1 & -q^{-4} & q^{-2} & -q^{-1}-1 \\
E^2 & 1 & 0 & 0",
    ),
    (
        -3,
        r"
C_{-3}  & Q^{-4} & Q^{-3} & Q^{-2} & Q^{-1} & Q^0 \\
E^0 &  0 & 0 & -q^{-6} & q^{-5} + q^{-4} & -q^{-3} \\
E^1 &  0 & -q^{-9} -q^{-8} & q^{-7} + 2 q^{-6} & -q^{-5}-2 q^{-4}-q^{-3} & q^{-3}+q^{-2}+q^{-1} \\
E^2 & -q^{-12} & q^{-9} & -q^{-7} -q^{-6} & q^{-4}+q^{-3} & -q^{-2}-q^{-1}-1 \\
E^3 & 1 & 0 & 0 & 0 & 0",
    ),
];

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AppendixError {
    #[error("no table for p = {0}")]
    NoTable(i64),
    #[error("cannot parse table entry {0:?}")]
    Parse(String),
    #[error("C_{p}: cell E^{e} Q^{q}: expected {expected}, computed {computed}")]
    Mismatch {
        p: i64,
        e: usize,
        q: i64,
        expected: String,
        computed: String,
    },
}

fn parse_exponent(s: &str) -> std::result::Result<i64, AppendixError> {
    let t = s.trim().trim_start_matches('{').trim_end_matches('}');
    t.parse().map_err(|_| AppendixError::Parse(s.into()))
}

/// Parses entries such as `-q^{-5}-2 q^{-4}-q^{-3}` or `q^3+q^4`.
fn parse_entry(s: &str) -> std::result::Result<LaurentPoly, AppendixError> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut acc = LaurentPoly::zero();
    let mut rest = compact.as_str();
    while !rest.is_empty() {
        let mut sign = 1i64;
        if let Some(r) = rest.strip_prefix('-') {
            sign = -1;
            rest = r;
        } else if let Some(r) = rest.strip_prefix('+') {
            rest = r;
        }
        let digits: String = rest.chars().take_while(|c| c.is_ascii_digit()).collect();
        rest = &rest[digits.len()..];
        let coef: i64 = if digits.is_empty() {
            1
        } else {
            digits.parse().unwrap()
        };
        let mut exp = 0i64;
        if let Some(r) = rest.strip_prefix('q') {
            rest = r;
            exp = 1;
            if let Some(r) = rest.strip_prefix('^') {
                let (tok, r) = if r.starts_with('{') {
                    let end = r.find('}').ok_or_else(|| AppendixError::Parse(s.into()))?;
                    (&r[..=end], &r[end + 1..])
                } else {
                    let end = r
                        .char_indices()
                        .find(|(k, c)| !(c.is_ascii_digit() || (*k == 0 && *c == '-')))
                        .map_or(r.len(), |(k, _)| k);
                    (&r[..end], &r[end..])
                };
                exp = parse_exponent(tok)?;
                rest = r;
            }
        } else if digits.is_empty() {
            return Err(AppendixError::Parse(s.into()));
        }
        acc = acc + q_pow(exp) * LaurentPoly::from_int(sign * coef);
    }
    Ok(acc)
}

/// The printed table for `p`, read into a coefficient matrix.
pub fn appendix_golden(p: i64) -> std::result::Result<CoeffMatrix, AppendixError> {
    let (_, text) = APPENDIX
        .iter()
        .find(|(k, _)| *k == p)
        .ok_or(AppendixError::NoTable(p))?;
    let lines: Vec<&str> = text.trim().lines().collect();
    let cells = |line: &str| -> Vec<String> {
        line.trim()
            .trim_end_matches("\\\\")
            .split('&')
            .map(|c| c.trim().to_string())
            .collect()
    };
    let header = cells(lines[0]);
    let cols: Vec<i64> = header[1..]
        .iter()
        .map(|h| parse_exponent(h.trim_start_matches("Q^")))
        .collect::<std::result::Result<_, _>>()?;
    let d = p.unsigned_abs() as usize;
    let mut poly = e_pow(d as i64);
    for (i, line) in lines[1..].iter().enumerate().take(d) {
        let row = cells(line);
        for (k, entry) in row[1..].iter().enumerate() {
            poly = poly + parse_entry(entry)? * big_q_pow(cols[k]) * e_pow(i as i64);
        }
    }
    Ok(CoeffMatrix::from_poly(p, &poly))
}

/// The coefficient matrix of `nc_cpoly(p)`.
pub fn appendix_table(p: i64) -> CoeffMatrix {
    CoeffMatrix::from_poly(p, &nc_cpoly(p).poly())
}

/// Compares `nc_cpoly(p)` with the printed table, naming the first differing cell.
pub fn check_appendix(p: i64) -> std::result::Result<(), AppendixError> {
    let golden = appendix_golden(p)?;
    let computed = appendix_table(p);
    let lo = golden.q_min.min(computed.q_min);
    let hi = golden.q_max().max(computed.q_max());
    for e in 0..=p.unsigned_abs() as usize {
        for q in lo..=hi {
            let (a, b) = (golden.cell(e, q), computed.cell(e, q));
            if a != b {
                return Err(AppendixError::Mismatch {
                    p,
                    e,
                    q,
                    expected: a.to_string(),
                    computed: b.to_string(),
                });
            }
        }
    }
    Ok(())
}

pub const APPENDIX_RANGE: [i64; 6] = [-3, -2, -1, 1, 2, 3];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::cyclotomic_sequence;

    fn poly(s: &[(i64, i64, i64, i64)]) -> LaurentPoly {
        s.iter().fold(LaurentPoly::zero(), |acc, &(c, e, qq, q)| {
            acc + LaurentPoly::from_int(c) * e_pow(e) * big_q_pow(qq) * q_pow(q)
        })
    }

    #[test]
    fn small_operators() {
        assert_eq!(nc_cpoly(1).poly(), poly(&[(1, 1, 0, 0), (1, 0, 1, 2)]));
        assert_eq!(nc_cpoly(-1).poly(), poly(&[(1, 1, 0, 0), (-1, 0, 0, 0)]));
        assert_eq!(nc_coeff(2, 0), poly(&[(1, 0, 2, 6), (-1, 0, 3, 7)]));
        assert!(nc_cpoly(0).poly().is_one());
    }

    #[test]
    fn commutative_examples() {
        assert_eq!(cpoly_closed(1).poly, poly(&[(1, 0, 1, 0), (1, 1, 0, 0)]));
        assert_eq!(cpoly_closed(-1).poly, poly(&[(1, 1, 0, 0), (-1, 0, 0, 0)]));
        let c2 = poly(&[
            (1, 2, 0, 0),
            (2, 1, 1, 0),
            (-1, 1, 2, 0),
            (1, 1, 3, 0),
            (1, 0, 2, 0),
            (-1, 0, 3, 0),
        ]);
        assert_eq!(cpoly_closed(2).poly, c2);
        assert!(cpoly_recursive(0).poly.is_one());
    }

    #[test]
    fn closed_equals_recursive() {
        for p in -6..=6 {
            assert_eq!(cpoly_closed(p), cpoly_recursive(p), "p = {p}");
        }
    }

    #[test]
    fn backward_forms() {
        for p in -5..=5 {
            assert_eq!(backward_form(p), backward_form_closed(p), "p = {p}");
            assert!(backward_recursion_holds(p), "p = {p}");
        }
        assert_eq!(backward_form(1), poly(&[(1, 0, 0, 0), (1, 1, 1, 0)]));
    }

    #[test]
    fn summands() {
        for p in 2..=5 {
            assert!(summand_recursion_holds(p), "p = {p}");
        }
        for p in 1..=5 {
            assert_eq!(
                backward_form_from_summands(p),
                RationalFunction::from_poly(backward_form(p))
            );
        }
    }

    #[test]
    fn backward_coefficients_follow_forward_ones() {
        for p in [-3i64, -2, -1, 1, 2, 3] {
            let d = p.abs();
            for i in 1..=d {
                let fwd = nc_coeff(p, d - i).subs_monomial(
                    Q,
                    &Rational::one(),
                    &[(Q, 1), (SMALL_Q, -d as i32)],
                );
                assert_eq!(
                    nc_backward_coeff(p, i).unwrap(),
                    RationalFunction::from_poly(fwd),
                    "p={p} i={i}"
                );
            }
        }
        assert_eq!(
            nc_backward_coeff(1, 1).unwrap(),
            RationalFunction::from_poly(poly(&[(1, 0, 1, 1)]))
        );
    }

    #[test]
    fn backward_recursion_annihilates() {
        let seq = cyclotomic_sequence(1);
        for n in 1..=10 {
            let a = nc_backward_coeff(1, 1).unwrap();
            let an = a
                .subs_monomial(Q, &Rational::one(), &[(SMALL_Q, n as i32)])
                .unwrap();
            let v = seq.get(n).unwrap() + an * seq.get(n - 1).unwrap();
            assert!(v.is_zero(), "n = {n}");
        }
    }

    #[test]
    fn alexander() {
        for p in -10..=10 {
            assert!(alexander_specialization(p), "p = {p}");
        }
    }

    #[test]
    fn appendix_tables() {
        for p in APPENDIX_RANGE {
            check_appendix(p).unwrap();
        }
        let m = appendix_table(-2);
        assert_eq!(m.q_min, -2);
        assert_eq!(m.cell(1, -2), -q_pow(-4));
        assert_eq!(m.cell(1, 0), -q_pow(-1) - LaurentPoly::one());
    }

    #[test]
    fn mismatch_names_cell() {
        let err = CoeffMatrix::from_poly(1, &nc_cpoly(1).poly());
        assert_eq!(err.cell(0, 1), q_pow(2));
        assert!(matches!(check_appendix(7), Err(AppendixError::NoTable(7))));
    }

    #[test]
    fn latex_layout() {
        let s = appendix_table(2).to_latex();
        assert!(s.contains("E^1 & 0 & q^3+q^4 & -q^5 & q^7 \\\\"));
        let s = appendix_table(3).to_latex();
        assert!(s.contains("-q^{10}-2 q^{11}-q^{12}"));
    }

    #[test]
    fn annihilates_cyclotomic_function() {
        for p in [-3i64, -2, -1, 1, 2, 3] {
            let seq = cyclotomic_sequence(p);
            let op = nc_cpoly(p).op;
            for n in 0..=6 {
                assert!(op.apply(&seq, n).unwrap().is_zero(), "p={p} n={n}");
            }
        }
    }

    #[test]
    fn q_to_one() {
        for p in -5..=5 {
            assert!(q1_consistency(p).unwrap(), "p = {p}");
        }
    }
}
