//! Quantum factorials and binomials, the colored Jones weights `C(n, k)`,
//! and the cyclotomic function of the twist knots
//!
//! ```text
//! Ĵ_p(n) = Σ_{k=0}^{n} q^{n(n+3)/2 + pk(k+1) + k(k-1)/2} (−1)^{n+k+1}
//!          (q^{2k+1} − 1) (q;q)_n / ((q;q)_{n+k+1} (q;q)_{n−k})
//! ```
//!
//! Terms with `k > n` vanish because `1/(q;q)_m = 0` for `m < 0`.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::exact::{ExactError, LaurentPoly, Rational, RationalFunction};
use crate::names::{M, SMALL_Q, U};
use crate::qweyl::QSequence;
use crate::{Error, Result};

/// Dense Laurent polynomial in `q` with integer coefficients, used where
/// long products of `(1 − q^j)` are multiplied and divided out.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Series {
    lo: i64,
    c: Vec<BigInt>,
}

impl Series {
    fn one() -> Self {
        Series {
            lo: 0,
            c: vec![BigInt::one()],
        }
    }

    fn zero() -> Self {
        Series {
            lo: 0,
            c: Vec::new(),
        }
    }

    fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    fn shift(mut self, e: i64) -> Self {
        self.lo += e;
        self
    }

    fn negate(mut self) -> Self {
        for x in self.c.iter_mut() {
            *x = -std::mem::take(x);
        }
        self
    }

    /// `self · (1 − q^t)`.
    fn mul_binom(self, t: i64) -> Self {
        if t == 0 {
            return Series::zero();
        }
        if t < 0 {
            return self.mul_binom(-t).negate().shift(t);
        }
        let t = t as usize;
        let n = self.c.len();
        let mut out = vec![BigInt::zero(); n + t];
        for (i, x) in self.c.iter().enumerate() {
            out[i] += x;
            out[i + t] -= x;
        }
        Series {
            lo: self.lo,
            c: out,
        }
    }

    /// `self / (1 − q^j)` for `j > 0`; `None` when the division is inexact.
    fn div_binom(&self, j: usize) -> Option<Self> {
        if self.is_zero() {
            return Some(Series::zero());
        }
        let n = self.c.len();
        if n <= j {
            return None;
        }
        let m = n - j;
        let mut q = vec![BigInt::zero(); m];
        for i in 0..m {
            let mut v = self.c[i].clone();
            if i >= j {
                v += &q[i - j];
            }
            q[i] = v;
        }
        for i in m..n {
            let back = if i >= j {
                self.c[i].clone() + &q[i - j]
            } else {
                self.c[i].clone()
            };
            if !back.is_zero() {
                return None;
            }
        }
        Some(Series { lo: self.lo, c: q })
    }

    fn add(&self, other: &Series) -> Series {
        if self.c.is_empty() {
            return other.clone();
        }
        if other.c.is_empty() {
            return self.clone();
        }
        let lo = self.lo.min(other.lo);
        let hi = (self.lo + self.c.len() as i64).max(other.lo + other.c.len() as i64);
        let mut c = vec![BigInt::zero(); (hi - lo) as usize];
        for (i, x) in self.c.iter().enumerate() {
            c[(self.lo - lo) as usize + i] += x;
        }
        for (i, x) in other.c.iter().enumerate() {
            c[(other.lo - lo) as usize + i] += x;
        }
        Series { lo, c }.trimmed()
    }

    fn trimmed(mut self) -> Self {
        while self.c.last().is_some_and(|x| x.is_zero()) {
            self.c.pop();
        }
        let skip = self.c.iter().take_while(|x| x.is_zero()).count();
        if skip > 0 {
            self.c.drain(..skip);
            self.lo += skip as i64;
        }
        self
    }

    fn to_poly(&self) -> LaurentPoly {
        let terms = self
            .c
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(i, x)| {
                (
                    vec![(self.lo + i as i64) as i32],
                    Rational::from_integer(x.clone()),
                )
            });
        LaurentPoly::from_terms(&[SMALL_Q], terms).unwrap()
    }
}

/// The q-Pochhammer symbol `(q^a; q)_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct QFactorialArg {
    pub base: i64,
    pub len: i64,
}

impl QFactorialArg {
    pub fn new(base: i64, len: i64) -> Self {
        QFactorialArg { base, len }
    }

    /// Exponents `t` of the factors `(1 − q^t)` and whether they sit in the
    /// denominator.
    fn factors(&self) -> (Vec<i64>, bool) {
        if self.len >= 0 {
            ((0..self.len).map(|j| self.base + j).collect(), false)
        } else {
            ((1..=-self.len).map(|j| self.base - j).collect(), true)
        }
    }

    fn product(exps: &[i64]) -> RationalFunction {
        let mut s = Series::one();
        for &t in exps {
            s = s.mul_binom(t);
        }
        RationalFunction::from_poly(s.to_poly())
    }

    /// `(1−q^a)⋯(1−q^{a+n−1})` for `n > 0`, `1` for `n = 0` and
    /// `1/((1−q^{a−1})⋯(1−q^{a+n}))` for `n < 0`.
    pub fn value(&self) -> Result<RationalFunction> {
        let (exps, inverted) = self.factors();
        let p = Self::product(&exps);
        if !inverted {
            return Ok(p);
        }
        if p.is_zero() {
            return Err(ExactError::Pole.into());
        }
        Ok(p.recip()?)
    }

    /// `1/(q^a; q)_n`, taken to be `0` when the `n < 0` branch has a
    /// vanishing factor.
    pub fn reciprocal(&self) -> Result<RationalFunction> {
        let (exps, inverted) = self.factors();
        let p = Self::product(&exps);
        if inverted {
            return Ok(p);
        }
        if p.is_zero() {
            return Err(ExactError::Pole.into());
        }
        Ok(p.recip()?)
    }
}

pub fn q_pochhammer(a: i64, n: i64) -> Result<RationalFunction> {
    QFactorialArg::new(a, n).value()
}

pub fn inv_q_pochhammer(a: i64, n: i64) -> Result<RationalFunction> {
    QFactorialArg::new(a, n).reciprocal()
}

/// `(q;q)_n`, with the conventions of [`QFactorialArg`].
pub fn q_factorial(n: i64) -> Result<RationalFunction> {
    q_pochhammer(1, n)
}

/// Gaussian binomial `(q^{m−n+1};q)_n / (q;q)_n` for `n ≥ 0`, zero for `n < 0`.
pub fn q_binomial(m: i64, n: i64) -> LaurentPoly {
    if n < 0 {
        return LaurentPoly::zero();
    }
    let mut s = Series::one();
    for j in 0..n {
        s = s.mul_binom(m - n + 1 + j);
        if s.is_zero() {
            return LaurentPoly::zero();
        }
    }
    for j in 1..=n {
        s = s
            .div_binom(j as usize)
            .expect("Gaussian binomial is a Laurent polynomial");
    }
    s.to_poly()
}

/// `{a} = (u^a − u^{−a})/(u − u^{−1})` as a Laurent polynomial in `u = q^{1/2}`.
fn brace(a: i64) -> LaurentPoly {
    let sign = if a < 0 { -1 } else { 1 };
    let a = a.abs();
    let terms = (0..a).map(|j| {
        (
            vec![(a - 1 - 2 * j) as i32],
            Rational::from_integer(BigInt::from(sign)),
        )
    });
    LaurentPoly::from_terms(&[U], terms).unwrap()
}

/// `C(n,k) = {n−k}⋯{n−1}{n+1}⋯{n+k}`, computed over `u = q^{1/2}` and
/// returned in integral powers of `q`.
pub fn block_coeff(n: i64, k: i64) -> Result<LaurentPoly> {
    let mut acc = LaurentPoly::one();
    for j in 1..=k {
        acc = acc * brace(n - j) * brace(n + j);
        if acc.is_zero() {
            return Ok(acc);
        }
    }
    Ok(acc.coerce_half(U, SMALL_Q)?)
}

/// `Ĵ_p(n)` together with its arguments.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclotomicValue {
    pub p: i64,
    pub n: i64,
    pub value: LaurentPoly,
}

fn twist_exponent(p: i64, n: i64, k: i64) -> i64 {
    n * (n + 3) / 2 + p * k * (k + 1) + k * (k - 1) / 2
}

fn sign(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// The `k`-th summand of `Ĵ_p(n)` as a rational function of `q`. Defined
/// for every integer `k`; it vanishes outside `−n−1 ≤ k ≤ n`.
pub fn twist_summand(p: i64, n: i64, k: i64) -> Result<RationalFunction> {
    let inv1 = inv_q_pochhammer(1, n + k + 1)?;
    let inv2 = inv_q_pochhammer(1, n - k)?;
    if inv1.is_zero() || inv2.is_zero() {
        return Ok(RationalFunction::zero());
    }
    let e = twist_exponent(p, n, k);
    let mono = LaurentPoly::monomial(
        &[(SMALL_Q, e as i32)],
        Rational::from_integer(BigInt::from(sign(n + k + 1))),
    );
    let lin = LaurentPoly::monomial(&[(SMALL_Q, (2 * k + 1) as i32)], Rational::one())
        - LaurentPoly::one();
    let head = RationalFunction::from_poly(mono * lin);
    Ok(head * q_factorial(n)? * inv1 * inv2)
}

/// `Ĵ_p(n)` summed term by term in `ℚ(q)`. Slow; an oracle for
/// [`cyclotomic_twist`].
pub fn cyclotomic_twist_termwise(p: i64, n: i64) -> Result<RationalFunction> {
    let terms = (0..=n)
        .map(|k| twist_summand(p, n, k))
        .collect::<Result<Vec<_>>>()?;
    Ok(RationalFunction::sum(terms.iter()))
}

/// `Ĵ_p(n)`, computed over the common denominator `(q;q)_{2n+1}`.
pub fn cyclotomic_twist(p: i64, n: i64) -> Result<CyclotomicValue> {
    if n < 0 {
        return Err(Error::InvalidArgument(format!("color index {n} < 0")));
    }
    let mut total = Series::zero();
    for k in 0..=n {
        let mut s = Series::one();
        for j in n + k + 2..=2 * n + 1 {
            s = s.mul_binom(j);
        }
        for j in n - k + 1..=n {
            s = s.mul_binom(j);
        }
        // (q^{2k+1} − 1) = −(1 − q^{2k+1})
        s = s.mul_binom(2 * k + 1).negate();
        s = s.shift(twist_exponent(p, n, k));
        if sign(n + k + 1) < 0 {
            s = s.negate();
        }
        total = total.add(&s);
    }
    for j in 1..=(2 * n + 1) as usize {
        total = total
            .div_binom(j)
            .ok_or_else(|| Error::Integrality(format!("Ĵ_{p}({n}) is not a Laurent polynomial")))?;
    }
    let value = total.to_poly();
    if value.terms().any(|(_, c)| !c.is_integer()) {
        return Err(Error::Integrality(format!(
            "Ĵ_{p}({n}) has non-integral coefficients"
        )));
    }
    Ok(CyclotomicValue { p, n, value })
}

/// The memoized sequence `n ↦ Ĵ_p(n)`, shared per `p` across the process.
pub fn cyclotomic_sequence(p: i64) -> QSequence {
    static REGISTRY: OnceLock<Mutex<HashMap<i64, QSequence>>> = OnceLock::new();
    let reg = REGISTRY.get_or_init(|| Mutex::new(HashMap::new()));
    reg.lock()
        .unwrap()
        .entry(p)
        .or_insert_with(|| {
            QSequence::new(move |n| {
                if n < 0 {
                    return Ok(RationalFunction::zero());
                }
                Ok(RationalFunction::from_poly(cyclotomic_twist(p, n)?.value))
            })
        })
        .clone()
}

/// `J_p(n) = Σ_{k=0}^{n−1} C(n,k) Ĵ_p(k)` for `n ≥ 1`.
pub fn colored_jones_twist(p: i64, n: i64) -> Result<LaurentPoly> {
    if n < 1 {
        return Err(Error::InvalidArgument(format!(
            "colored Jones needs n ≥ 1, got {n}"
        )));
    }
    let seq = cyclotomic_sequence(p);
    let mut acc = LaurentPoly::zero();
    for k in 0..n {
        let c = block_coeff(n, k)?;
        let v = seq.get(k)?;
        acc = acc + c * v.numer();
    }
    Ok(acc)
}

/// `Ĵ_p(n)` at `q = 1`, taken on the summed polynomial.
pub fn eval_q1(p: i64, n: i64) -> Result<Rational> {
    let v = cyclotomic_sequence(p).get(n)?;
    Ok(v.numer().coeff_sum())
}

/// `Δ_p(M) = 1 + p(M + M^{−1} − 2)`.
pub fn alexander_twist(p: i64) -> LaurentPoly {
    let m = LaurentPoly::var(M);
    let z = &m + &m.pow_i(-1) - LaurentPoly::from_int(2);
    LaurentPoly::one() + z * LaurentPoly::from_int(p)
}

/// `z = M − 2 + M^{−1}`.
pub fn alexander_z() -> LaurentPoly {
    let m = LaurentPoly::var(M);
    &m + &m.pow_i(-1) - LaurentPoly::from_int(2)
}

/// Checks `Δ_p(M) · Σ_{n≤N} I_p(n) zⁿ ≡ 1 (mod z^{N+1})` in `ℤ[M^±]`,
/// where `I_p(n) = Ĵ_p(n)|_{q=1}` and `z = M − 2 + M^{−1}`.
pub fn genfun_check(p: i64, big_n: i64) -> Result<bool> {
    let z = alexander_z();
    let mut series = LaurentPoly::zero();
    let mut zn = LaurentPoly::one();
    for n in 0..=big_n {
        let i = eval_q1(p, n)?;
        series = series + zn.scale(&i);
        zn = &zn * &z;
    }
    let defect = alexander_twist(p) * series - LaurentPoly::one();
    Ok(defect.div_exact(&zn).is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    fn q() -> LaurentPoly {
        LaurentPoly::var(SMALL_Q)
    }

    fn one() -> LaurentPoly {
        LaurentPoly::one()
    }

    #[test]
    fn pochhammer_branches() {
        assert!(q_factorial(0).unwrap().is_one());
        let two = q_factorial(2).unwrap();
        assert_eq!(
            two,
            RationalFunction::from_poly((one() - q()) * (one() - q().pow(2)))
        );
        assert!(inv_q_pochhammer(1, -1).unwrap().is_zero());
        assert!(q_pochhammer(1, -1).is_err());
        let neg = q_pochhammer(3, -2).unwrap();
        let expect = RationalFunction::from_poly((one() - q().pow(2)) * (one() - q()))
            .recip()
            .unwrap();
        assert_eq!(neg, expect);
    }

    #[test]
    fn binomials() {
        assert_eq!(q_binomial(2, 1), one() + q());
        assert_eq!(q_binomial(5, 0), one());
        assert!(q_binomial(3, -1).is_zero());
        assert!(q_binomial(2, 3).is_zero());
        assert_eq!(q_binomial(-1, 1), -q().pow_i(-1));
        assert_eq!(
            q_binomial(4, 2),
            one() + q() + q().pow(2).scale(&int(2)) + q().pow(3) + q().pow(4)
        );
    }

    #[test]
    fn block_coefficients() {
        assert!(block_coeff(5, 0).unwrap().is_one());
        assert!(block_coeff(1, 1).unwrap().is_zero());
        assert_eq!(block_coeff(2, 1).unwrap(), q().pow_i(-1) + one() + q());
    }

    #[test]
    fn small_values() {
        for p in -3..=3 {
            assert!(cyclotomic_twist(p, 0).unwrap().value.is_one());
        }
        assert_eq!(cyclotomic_twist(1, 1).unwrap().value, -q().pow(2));
        for n in 1..5 {
            assert!(cyclotomic_twist(0, n).unwrap().value.is_zero());
        }
    }

    #[test]
    fn fast_sum_matches_termwise() {
        for p in [-2, -1, 1, 2] {
            for n in 0..5 {
                let fast = cyclotomic_twist(p, n).unwrap().value;
                let slow = cyclotomic_twist_termwise(p, n).unwrap();
                assert_eq!(RationalFunction::from_poly(fast), slow, "p={p} n={n}");
            }
        }
    }

    #[test]
    fn colored_jones_small() {
        assert!(colored_jones_twist(3, 1).unwrap().is_one());
        assert_eq!(
            colored_jones_twist(1, 2).unwrap(),
            one() - q() - q().pow(2) - q().pow(3)
        );
        for n in 1..5 {
            assert!(colored_jones_twist(0, n).unwrap().is_one());
        }
    }

    #[test]
    fn alexander() {
        let m = LaurentPoly::var(M);
        assert!(alexander_twist(0).is_one());
        assert_eq!(alexander_twist(1), &m - &one() + m.pow_i(-1));
        let d = alexander_twist(-3);
        assert_eq!(d.subs_monomial(M, &int(1), &[(M, -1)]), d);
    }

    #[test]
    fn generating_function() {
        assert!(genfun_check(0, 4).unwrap());
        assert!(genfun_check(1, 6).unwrap());
        assert!(genfun_check(-3, 8).unwrap());
    }
}
