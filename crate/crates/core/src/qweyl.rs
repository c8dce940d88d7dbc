//! The q-Weyl algebra `ℚ(q, Q)⟨E⟩` with `E·α(Q) = α(qQ)·E`, acting on
//! q-holonomic sequences by `(E f)(n) = f(n+1)` and `(Q f)(n) = q^n f(n)`.
//!
//! Operators are stored left-normalized: `Σ aᵢ(Q) Eⁱ`, coefficients on the
//! left.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex};

use num_traits::One;

use crate::exact::{ExactError, LaurentPoly, Rational, RationalFunction};
use crate::names::{E, Q, SMALL_Q};
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct WeylOp {
    coeffs: BTreeMap<u32, RationalFunction>,
}

/// Which variable [`WeylOp::specialize`] sets to one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Specialization {
    /// `q = 1`: the operator becomes a commutative polynomial in `E, Q`.
    SmallQ,
    /// `Q = 1`: coefficients become functions of `q` alone.
    BigQ,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Specialized {
    Commutative(LaurentPoly),
    Operator(WeylOp),
}

/// `α(Q) ↦ α(q^a Q)`.
pub fn sigma(c: &RationalFunction, a: i32) -> RationalFunction {
    c.q_shift(Q, SMALL_Q, a)
}

impl WeylOp {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::scalar(RationalFunction::one())
    }

    /// The shift `E`.
    pub fn e() -> Self {
        Self::monomial(1, RationalFunction::one())
    }

    pub fn scalar(c: RationalFunction) -> Self {
        Self::monomial(0, c)
    }

    pub fn monomial(deg: u32, c: RationalFunction) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(deg, c);
        }
        WeylOp { coeffs }
    }

    /// `Σ coeffs[i] Eⁱ`.
    pub fn from_coeffs(coeffs: Vec<RationalFunction>) -> Self {
        WeylOp {
            coeffs: coeffs
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i as u32, c))
                .collect(),
        }
    }

    /// Reads a polynomial in `E` whose `E`-free parts are the coefficients.
    pub fn from_poly(p: &LaurentPoly) -> Result<Self> {
        let mut coeffs = BTreeMap::new();
        for (d, c) in p.coeffs_in(E) {
            if d < 0 {
                return Err(Error::InvalidArgument("negative power of E".into()));
            }
            coeffs.insert(d as u32, RationalFunction::from_poly(c));
        }
        Ok(WeylOp { coeffs })
    }

    /// The polynomial `Σ aᵢ Eⁱ`, when every coefficient is a Laurent polynomial.
    pub fn to_poly(&self) -> Result<LaurentPoly> {
        let mut map = BTreeMap::new();
        for (&d, c) in &self.coeffs {
            let p = c
                .as_poly()
                .ok_or_else(|| Error::NotPolynomial(format!("coefficient of E^{d}")))?;
            map.insert(d as i32, p.clone());
        }
        Ok(LaurentPoly::from_coeffs_in(E, &map))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn coeff(&self, i: u32) -> RationalFunction {
        self.coeffs
            .get(&i)
            .cloned()
            .unwrap_or_else(RationalFunction::zero)
    }

    /// Dense coefficient list `[a₀, …, a_d]`.
    pub fn coeff_vec(&self) -> Vec<RationalFunction> {
        match self.degree() {
            None => Vec::new(),
            Some(d) => (0..=d).map(|i| self.coeff(i)).collect(),
        }
    }

    pub fn leading_coeff(&self) -> RationalFunction {
        self.degree()
            .map_or_else(RationalFunction::zero, |d| self.coeff(d))
    }

    /// Left multiplication by a scalar.
    pub fn scale_left(&self, c: &RationalFunction) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        WeylOp {
            coeffs: self.coeffs.iter().map(|(&i, a)| (i, c * a)).collect(),
        }
    }

    /// Left multiple with leading coefficient one.
    pub fn monic(&self) -> Result<Self> {
        let lc = self.leading_coeff();
        if lc.is_zero() {
            return Err(Error::Exact(ExactError::DivisionByZero));
        }
        Ok(self.scale_left(&lc.recip()?))
    }

    /// Left multiple with coprime polynomial coefficients whose leading
    /// coefficient has positive leading term.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut den = LaurentPoly::one();
        for c in self.coeffs.values() {
            let g = crate::exact::gcd(&den, c.denom());
            den = &den * &c.denom().div_exact(&g).unwrap();
        }
        let polys: Vec<LaurentPoly> = self
            .coeffs
            .values()
            .map(|c| c.numer() * &den.div_exact(c.denom()).unwrap())
            .collect();
        let g = crate::exact::gcd_many(polys.iter());
        let mut out: Vec<LaurentPoly> = polys.iter().map(|p| p.div_exact(&g).unwrap()).collect();
        let lead = out.last().unwrap().unit_normal();
        let unit = out.last().unwrap().div_exact(&lead).unwrap();
        for p in out.iter_mut() {
            *p = p.div_exact(&unit).unwrap();
        }
        WeylOp {
            coeffs: self
                .coeffs
                .keys()
                .zip(out)
                .map(|(&i, p)| (i, RationalFunction::from_poly(p)))
                .collect(),
        }
    }

    /// True when `self = c · other` for a nonzero scalar `c`.
    pub fn is_left_associate(&self, other: &WeylOp) -> bool {
        if self.degree() != other.degree() || self.is_zero() {
            return self.is_zero() && other.is_zero();
        }
        let Ok(c) = self.leading_coeff().checked_div(&other.leading_coeff()) else {
            return false;
        };
        other.scale_left(&c) == *self
    }

    /// `(self · f)(n) = Σ aᵢ(q^n) f(n+i)`.
    pub fn apply(&self, f: &QSequence, n: i64) -> Result<RationalFunction> {
        let mut terms = Vec::with_capacity(self.coeffs.len());
        for (&i, a) in &self.coeffs {
            let an = a.subs_monomial(Q, &Rational::one(), &[(SMALL_Q, n as i32)])?;
            terms.push(&an * &f.get(n + i as i64)?);
        }
        Ok(RationalFunction::sum(terms.iter()))
    }

    pub fn specialize(&self, which: Specialization) -> Result<Specialized> {
        match which {
            Specialization::SmallQ => {
                let mut map = BTreeMap::new();
                for (&i, a) in &self.coeffs {
                    let v = a.subs_monomial(SMALL_Q, &Rational::one(), &[])?;
                    let p = v.as_poly().ok_or_else(|| {
                        Error::NotPolynomial(format!("coefficient of E^{i} at q = 1"))
                    })?;
                    map.insert(i as i32, p.clone());
                }
                Ok(Specialized::Commutative(LaurentPoly::from_coeffs_in(
                    E, &map,
                )))
            }
            Specialization::BigQ => {
                let mut coeffs = BTreeMap::new();
                for (&i, a) in &self.coeffs {
                    let v = a.subs_monomial(Q, &Rational::one(), &[])?;
                    if !v.is_zero() {
                        coeffs.insert(i, v);
                    }
                }
                Ok(Specialized::Operator(WeylOp { coeffs }))
            }
        }
    }

    /// `Σ aᵢ E^{d−i}` for `d = deg self`.
    pub fn reversed(&self) -> Self {
        let Some(d) = self.degree() else {
            return Self::zero();
        };
        WeylOp {
            coeffs: self
                .coeffs
                .iter()
                .map(|(&i, a)| (d - i, a.clone()))
                .collect(),
        }
    }

    /// Euclidean division on the right: `self = quot · divisor + rem` with
    /// `deg rem < deg divisor`.
    pub fn right_divide(&self, divisor: &WeylOp) -> Result<(WeylOp, WeylOp)> {
        let db = divisor
            .degree()
            .ok_or(Error::Exact(ExactError::DivisionByZero))?;
        let lb = divisor.leading_coeff();
        let mut rem = self.clone();
        let mut quot = WeylOp::zero();
        while let Some(dr) = rem.degree() {
            if dr < db {
                break;
            }
            let s = dr - db;
            let c = rem.leading_coeff().checked_div(&sigma(&lb, s as i32))?;
            let t = WeylOp::monomial(s, c);
            rem = &rem - &(&t * divisor);
            quot = &quot + &t;
        }
        Ok((quot, rem))
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (u32, &RationalFunction)> {
        self.coeffs.iter().map(|(&i, c)| (i, c))
    }
}

/// `Σ aᵢ(Q) E^{d−i}`: reverses the coefficient order of a polynomial in `E`.
pub fn op_reverse(p: &LaurentPoly) -> LaurentPoly {
    let coeffs = p.coeffs_in(E);
    let Some(&d) = coeffs.keys().next_back() else {
        return LaurentPoly::zero();
    };
    let rev: BTreeMap<i32, LaurentPoly> = coeffs.into_iter().map(|(i, c)| (d - i, c)).collect();
    LaurentPoly::from_coeffs_in(E, &rev)
}

fn add_op(a: &WeylOp, b: &WeylOp, negate: bool) -> WeylOp {
    let mut coeffs = a.coeffs.clone();
    for (&i, c) in &b.coeffs {
        let c = if negate { -c } else { c.clone() };
        let v = match coeffs.remove(&i) {
            Some(x) => x + c,
            None => c,
        };
        if !v.is_zero() {
            coeffs.insert(i, v);
        }
    }
    WeylOp { coeffs }
}

fn mul_op(a: &WeylOp, b: &WeylOp) -> WeylOp {
    let mut acc: BTreeMap<u32, Vec<RationalFunction>> = BTreeMap::new();
    for (&i, x) in &a.coeffs {
        for (&j, y) in &b.coeffs {
            acc.entry(i + j).or_default().push(x * &sigma(y, i as i32));
        }
    }
    WeylOp {
        coeffs: acc
            .into_iter()
            .map(|(d, v)| (d, RationalFunction::sum(v.iter())))
            .filter(|(_, c)| !c.is_zero())
            .collect(),
    }
}

impl Add for &WeylOp {
    type Output = WeylOp;
    fn add(self, rhs: &WeylOp) -> WeylOp {
        add_op(self, rhs, false)
    }
}

impl Sub for &WeylOp {
    type Output = WeylOp;
    fn sub(self, rhs: &WeylOp) -> WeylOp {
        add_op(self, rhs, true)
    }
}

impl Mul for &WeylOp {
    type Output = WeylOp;
    fn mul(self, rhs: &WeylOp) -> WeylOp {
        mul_op(self, rhs)
    }
}

impl Neg for &WeylOp {
    type Output = WeylOp;
    fn neg(self) -> WeylOp {
        WeylOp {
            coeffs: self.coeffs.iter().map(|(&i, c)| (i, -c)).collect(),
        }
    }
}

impl fmt::Display for WeylOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .rev()
            .map(|(&i, c)| match i {
                0 => format!("({c})"),
                1 => format!("({c})*E"),
                _ => format!("({c})*E^{i}"),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for WeylOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeylOp({self})")
    }
}

type Generator = dyn Fn(i64) -> Result<RationalFunction> + Send + Sync;

/// A sequence `n ↦ f(n) ∈ ℚ(q)` with a memo cache.
///
/// Cloning shares the cache. The cache sits behind a mutex, so a sequence may
/// be read from several threads.
#[derive(Clone)]
pub struct QSequence {
    inner: Arc<SeqInner>,
}

struct SeqInner {
    gen: Box<Generator>,
    cache: Mutex<HashMap<i64, RationalFunction>>,
}

impl QSequence {
    pub fn new(gen: impl Fn(i64) -> Result<RationalFunction> + Send + Sync + 'static) -> Self {
        QSequence {
            inner: Arc::new(SeqInner {
                gen: Box::new(gen),
                cache: Mutex::new(HashMap::new()),
            }),
        }
    }

    pub fn get(&self, n: i64) -> Result<RationalFunction> {
        if let Some(v) = self.inner.cache.lock().unwrap().get(&n) {
            return Ok(v.clone());
        }
        let v = (self.inner.gen)(n)?;
        self.inner.cache.lock().unwrap().insert(n, v.clone());
        Ok(v)
    }

    /// The sequence `n ↦ (op · self)(n)`.
    pub fn apply_op(&self, op: &WeylOp) -> QSequence {
        let base = self.clone();
        let op = op.clone();
        QSequence::new(move |n| op.apply(&base, n))
    }
}

impl fmt::Debug for QSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.inner.cache.lock().map(|c| c.len()).unwrap_or(0);
        write!(f, "QSequence({n} cached)")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(p: LaurentPoly) -> RationalFunction {
        RationalFunction::from_poly(p)
    }

    fn qq() -> LaurentPoly {
        LaurentPoly::var(Q)
    }

    #[test]
    fn commutation_rule() {
        let lhs = &WeylOp::e() * &WeylOp::scalar(rf(qq()));
        let expect = WeylOp::monomial(1, rf(qq() * LaurentPoly::var(SMALL_Q)));
        assert_eq!(lhs, expect);
    }

    #[test]
    fn apply_matches_definition() {
        let seq = QSequence::new(|n| Ok(RationalFunction::from_int(n * n)));
        let op = &WeylOp::e() - &WeylOp::scalar(rf(qq()));
        let v = op.apply(&seq, 3).unwrap();
        let q3 = LaurentPoly::var(SMALL_Q).pow(3);
        assert_eq!(
            v,
            rf(LaurentPoly::from_int(16) - q3.scale(&crate::exact::int(9)))
        );
    }

    #[test]
    fn right_division_recovers_factor() {
        let a = &WeylOp::e() + &WeylOp::scalar(rf(qq()));
        let b = &WeylOp::e() - &WeylOp::scalar(rf(LaurentPoly::one() - qq()));
        let prod = &a * &b;
        let (quot, rem) = prod.right_divide(&b).unwrap();
        assert!(rem.is_zero());
        assert_eq!(quot, a);
    }

    #[test]
    fn reversal() {
        let p = LaurentPoly::var(E).pow(2) * qq() + LaurentPoly::one();
        assert_eq!(op_reverse(&p), LaurentPoly::var(E).pow(2) + qq());
    }
}
