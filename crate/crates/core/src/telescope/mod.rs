//! q-creative telescoping for proper q-hypergeometric terms `F(n, k)`.
//!
//! A term is described by its shift ratios in `Q = q^n`, `K = q^k`.
//! Two ansätze are solved by fraction-free elimination:
//!
//! * [`celine_solve`]: `Σ_{i≤I, j≤J} a_{ij}(Q) F(n+i, k+j) = 0` (k-free);
//! * [`certificate_solve`]: `Σ_{i≤I} b_i(Q) F(n−i, k) = G(n,k) − G(n,k−1)`
//!   with `G = R·F` and `R` a rational function whose denominator is the
//!   polynomial factor of the term in `K`.
//!
//! Summing over `k` turns either relation into a recursion for
//! `S(n) = Σ_k F(n, k)`.

mod apparatus;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::One;

use crate::cyclotomic::{q_binomial, twist_summand};
use crate::exact::{gcd, nullspace, LaurentPoly, Rational, RationalFunction};
use crate::names::{K, Q, SMALL_Q};
use crate::qweyl::{QSequence, WeylOp};
use crate::{Error, Result};

pub use apparatus::{
    explicit_apparatus, explicit_certificate, r_term, t_term, ApparatusReport, IdentityCheck,
};

type ValueFn = Arc<dyn Fn(i64, i64) -> Result<RationalFunction> + Send + Sync>;
type RangeFn = Arc<dyn Fn(i64) -> (i64, i64) + Send + Sync>;

/// Explicit values of a term, used for summation and boundary terms.
#[derive(Clone)]
pub struct TermValues {
    pub value: ValueFn,
    /// Inclusive `k`-range outside of which `F(n, ·)` vanishes.
    pub support: RangeFn,
}

/// A proper q-hypergeometric term.
#[derive(Clone)]
pub struct HGTerm {
    pub name: String,
    /// `F(n+1,k)/F(n,k)`.
    pub ratio_n: RationalFunction,
    /// `F(n,k+1)/F(n,k)`.
    pub ratio_k: RationalFunction,
    /// Polynomial factor of `F` in `K`; the certificate denominator.
    pub k_factor: LaurentPoly,
    pub values: Option<TermValues>,
}

impl fmt::Debug for HGTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("HGTerm")
            .field("name", &self.name)
            .field("ratio_n", &self.ratio_n)
            .field("ratio_k", &self.ratio_k)
            .field("k_factor", &self.k_factor)
            .finish()
    }
}

fn poly(s: &[(i64, &[(&str, i32)])]) -> LaurentPoly {
    s.iter().fold(LaurentPoly::zero(), |acc, (c, m)| {
        acc + LaurentPoly::monomial(m, Rational::from_integer((*c).into()))
    })
}

fn rf(num: LaurentPoly, den: LaurentPoly) -> RationalFunction {
    RationalFunction::new(num, den).expect("nonzero denominator")
}

impl HGTerm {
    pub fn from_ratios(name: &str, ratio_n: RationalFunction, ratio_k: RationalFunction) -> Self {
        HGTerm {
            name: name.into(),
            ratio_n,
            ratio_k,
            k_factor: LaurentPoly::one(),
            values: None,
        }
    }

    /// The summand `s_p(n,k)` of the cyclotomic function `Ĵ_p(n)`.
    pub fn twist(p: i64) -> Self {
        // F(n+1,k)/F(n,k) = −q²Q(1 − qQ) / ((1 − q²QK)(1 − qQ/K))
        let ratio_n = rf(
            poly(&[(-1, &[(SMALL_Q, 2), (Q, 1)]), (1, &[(SMALL_Q, 3), (Q, 2)])]),
            poly(&[(1, &[]), (-1, &[(SMALL_Q, 2), (Q, 1), (K, 1)])])
                * poly(&[(1, &[]), (-1, &[(SMALL_Q, 1), (Q, 1), (K, -1)])]),
        );
        // F(n,k+1)/F(n,k) = −q^{2p}K^{2p+1}(1 − q³K²)(1 − Q/K) / ((1 − qK²)(1 − q²QK))
        let ratio_k = rf(
            poly(&[(-1, &[(SMALL_Q, 2 * p as i32), (K, 2 * p as i32 + 1)])])
                * poly(&[(1, &[]), (-1, &[(SMALL_Q, 3), (K, 2)])])
                * poly(&[(1, &[]), (-1, &[(Q, 1), (K, -1)])]),
            poly(&[(1, &[]), (-1, &[(SMALL_Q, 1), (K, 2)])])
                * poly(&[(1, &[]), (-1, &[(SMALL_Q, 2), (Q, 1), (K, 1)])]),
        );
        HGTerm {
            name: format!("twist:{p}"),
            ratio_n,
            ratio_k,
            k_factor: poly(&[(1, &[(SMALL_Q, 1), (K, 2)]), (-1, &[])]),
            values: Some(TermValues {
                value: Arc::new(move |n, k| twist_summand(p, n, k)),
                support: Arc::new(|n| (-n - 1, n)),
            }),
        }
    }

    /// `F(n,k) = [n k]_q (−1)^k q^{k(k−1)/2}`, summing to `δ_{n,0}`.
    pub fn q_binomial_theorem() -> Self {
        let ratio_n = rf(
            poly(&[(1, &[]), (-1, &[(SMALL_Q, 1), (Q, 1)])]),
            poly(&[(1, &[]), (-1, &[(SMALL_Q, 1), (Q, 1), (K, -1)])]),
        );
        let ratio_k = rf(
            poly(&[(-1, &[(K, 1)]), (1, &[(Q, 1)])]),
            poly(&[(1, &[]), (-1, &[(SMALL_Q, 1), (K, 1)])]),
        );
        HGTerm {
            name: "qbinomial".into(),
            ratio_n,
            ratio_k,
            k_factor: LaurentPoly::one(),
            values: Some(TermValues {
                value: Arc::new(|n, k| {
                    let sign = if k.rem_euclid(2) == 0 { 1 } else { -1 };
                    let mono = LaurentPoly::monomial(
                        &[(SMALL_Q, (k * (k - 1) / 2) as i32)],
                        Rational::from_integer(sign.into()),
                    );
                    Ok(RationalFunction::from_poly(q_binomial(n, k) * mono))
                }),
                support: Arc::new(|n| (0, n)),
            }),
        }
    }

    /// `ratio_n(Q, qK)·ratio_k(Q, K) = ratio_k(qQ, K)·ratio_n(Q, K)`.
    pub fn is_compatible(&self) -> bool {
        let lhs = self.ratio_n.q_shift(K, SMALL_Q, 1) * &self.ratio_k;
        let rhs = self.ratio_k.q_shift(Q, SMALL_Q, 1) * &self.ratio_n;
        lhs == rhs
    }

    /// `F(n, k)` from the explicit values, if known.
    pub fn value(&self, n: i64, k: i64) -> Result<RationalFunction> {
        let v = self.values.as_ref().ok_or_else(|| {
            Error::InvalidArgument(format!("term {} has no explicit values", self.name))
        })?;
        (v.value)(n, k)
    }

    /// `S(n) = Σ_k F(n, k)` over the support.
    pub fn sum(&self, n: i64) -> Result<RationalFunction> {
        let v = self.values.as_ref().ok_or_else(|| {
            Error::InvalidArgument(format!("term {} has no explicit values", self.name))
        })?;
        let (lo, hi) = (v.support)(n);
        let terms = (lo..=hi)
            .map(|k| (v.value)(n, k))
            .collect::<Result<Vec<_>>>()?;
        Ok(RationalFunction::sum(terms.iter()))
    }

    pub fn sum_sequence(&self) -> QSequence {
        let t = self.clone();
        QSequence::new(move |n| t.sum(n))
    }
}

fn pole(what: &str, r: &RationalFunction) -> Error {
    Error::Pole(format!("{what} vanishes identically: {r}"))
}

/// `F(n+dn, k+dk)/F(n, k)`.
pub fn shift_ratio(t: &HGTerm, dn: i64, dk: i64) -> Result<RationalFunction> {
    let mut acc = RationalFunction::one();
    if dn >= 0 {
        for a in 0..dn {
            acc = acc * t.ratio_n.q_shift(Q, SMALL_Q, a as i32);
        }
    } else {
        for a in 1..=-dn {
            let r = t.ratio_n.q_shift(Q, SMALL_Q, -a as i32);
            acc = acc.checked_div(&r).map_err(|_| pole("ratio_n", &r))?;
        }
    }
    let rk = t.ratio_k.q_shift(Q, SMALL_Q, dn as i32);
    if dk >= 0 {
        for b in 0..dk {
            acc = acc * rk.q_shift(K, SMALL_Q, b as i32);
        }
    } else {
        for b in 1..=-dk {
            let r = rk.q_shift(K, SMALL_Q, -b as i32);
            acc = acc.checked_div(&r).map_err(|_| pole("ratio_k", &r))?;
        }
    }
    Ok(acc)
}

/// `Σ_i a_i F(n+i, k)/F(n, k) = 0`.
pub fn verify_kfree(t: &HGTerm, coeffs: &[RationalFunction]) -> Result<bool> {
    let mut terms = Vec::new();
    for (i, a) in coeffs.iter().enumerate() {
        if !a.is_zero() {
            terms.push(a * &shift_ratio(t, i as i64, 0)?);
        }
    }
    Ok(RationalFunction::sum(terms.iter()).is_zero())
}

/// `Σ_{i,j} a_{ij} F(n+i, k+j)/F(n, k) = 0`.
pub fn verify_double(t: &HGTerm, a: &[Vec<RationalFunction>]) -> Result<bool> {
    let mut terms = Vec::new();
    for (i, row) in a.iter().enumerate() {
        for (j, c) in row.iter().enumerate() {
            if !c.is_zero() {
                terms.push(c * &shift_ratio(t, i as i64, j as i64)?);
            }
        }
    }
    Ok(RationalFunction::sum(terms.iter()).is_zero())
}

/// `Σ_i a_i F(n+i,k) = G(n,k+1) − G(n,k)` with `G = cert·F`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub coeffs: Vec<RationalFunction>,
    pub cert: RationalFunction,
}

impl Certificate {
    /// Converts `Σ_{i≤I} b_i F(n−i,k) = R(n,k)F(n,k) − R(n,k−1)F(n,k−1)`
    /// by the shift `n ↦ n+I`.
    pub fn from_backward(
        t: &HGTerm,
        b: &[RationalFunction],
        cert: &RationalFunction,
    ) -> Result<Self> {
        let order = b.len().saturating_sub(1) as i32;
        let coeffs = (0..b.len())
            .map(|i| b[b.len() - 1 - i].q_shift(Q, SMALL_Q, order))
            .collect();
        let cert = cert.q_shift(Q, SMALL_Q, order).q_shift(K, SMALL_Q, -1)
            * shift_ratio(t, order as i64, -1)?;
        Ok(Certificate { coeffs, cert })
    }

    pub fn operator(&self) -> WeylOp {
        WeylOp::from_coeffs(self.coeffs.clone())
    }
}

pub fn verify_certificate(t: &HGTerm, c: &Certificate) -> Result<bool> {
    let mut terms = Vec::new();
    for (i, a) in c.coeffs.iter().enumerate() {
        if !a.is_zero() {
            terms.push(a * &shift_ratio(t, i as i64, 0)?);
        }
    }
    terms.push(c.cert.clone());
    terms.push(-(c.cert.q_shift(K, SMALL_Q, 1) * &t.ratio_k));
    Ok(RationalFunction::sum(terms.iter()).is_zero())
}

/// `Σ_i b_i F(n−i,k)/F(n,k) = R(n,k) − R(n,k−1)F(n,k−1)/F(n,k)`.
pub fn verify_backward(
    t: &HGTerm,
    b: &[RationalFunction],
    cert: &RationalFunction,
) -> Result<bool> {
    let mut terms = Vec::new();
    for (i, c) in b.iter().enumerate() {
        if !c.is_zero() {
            terms.push(c * &shift_ratio(t, -(i as i64), 0)?);
        }
    }
    terms.push(-cert.clone());
    terms.push(cert.q_shift(K, SMALL_Q, -1) * shift_ratio(t, 0, -1)?);
    Ok(RationalFunction::sum(terms.iter()).is_zero())
}

fn lcm(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let g = gcd(a, b);
    a * &b.div_exact(&g).expect("gcd divides")
}

/// Kernel of the map `x ↦ Σ_u x_u·cols[u]` over `ℚ(q, Q)`, where each column
/// is a rational function in `q, Q, K` and the coefficients of every power
/// of `K` must vanish.
///
/// The system is first solved at a sample point `(q, Q) ∈ ℚ²`. The rank can
/// only drop under specialization, so an empty kernel there is conclusive;
/// otherwise the exact solve is tried on the columns used by the sampled
/// kernel before falling back to all columns.
fn k_kernel(cols: &[RationalFunction]) -> Vec<Vec<LaurentPoly>> {
    let den = cols
        .iter()
        .fold(LaurentPoly::one(), |l, c| lcm(&l, c.denom()));
    let mut rows: BTreeMap<i32, Vec<LaurentPoly>> = BTreeMap::new();
    for (u, c) in cols.iter().enumerate() {
        let cleared = c.numer() * &den.div_exact(c.denom()).expect("lcm is a multiple");
        for (e, v) in cleared.coeffs_in(K) {
            rows.entry(e)
                .or_insert_with(|| vec![LaurentPoly::zero(); cols.len()])[u] = v;
        }
    }
    let matrix: Vec<Vec<LaurentPoly>> = rows.into_values().collect();
    let Some(sampled) = sample_kernel(&matrix) else {
        return nullspace(matrix);
    };
    if sampled.is_empty() {
        return Vec::new();
    }
    let support: Vec<usize> = (0..cols.len())
        .filter(|&u| sampled.iter().any(|v| !v[u].is_zero()))
        .collect();
    if support.len() < cols.len() {
        let sub: Vec<Vec<LaurentPoly>> = matrix
            .iter()
            .map(|r| support.iter().map(|&u| r[u].clone()).collect())
            .collect();
        let ker = nullspace(sub);
        if !ker.is_empty() {
            return ker
                .into_iter()
                .map(|v| {
                    let mut full = vec![LaurentPoly::zero(); cols.len()];
                    for (x, &u) in v.into_iter().zip(&support) {
                        full[u] = x;
                    }
                    full
                })
                .collect();
        }
    }
    nullspace(matrix)
}

/// Kernel at a sample point, or `None` if every tried point is a pole.
fn sample_kernel(matrix: &[Vec<LaurentPoly>]) -> Option<Vec<Vec<LaurentPoly>>> {
    for (a, b) in [(7i64, 11i64), (13, 17), (19, 23)] {
        let point = [
            (SMALL_Q, Rational::new(a.into(), 3.into())),
            (Q, Rational::new(b.into(), 5.into())),
        ];
        let evaluated: Option<Vec<Vec<LaurentPoly>>> = matrix
            .iter()
            .map(|r| {
                r.iter()
                    .map(|x| x.eval(&point).ok().map(LaurentPoly::constant))
                    .collect()
            })
            .collect();
        if let Some(m) = evaluated {
            return Some(nullspace(m));
        }
    }
    None
}

/// A solution of the k-free ansatz.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CelineSolution {
    /// `a[i][j]` multiplies `F(n+i, k+j)`.
    pub a: Vec<Vec<RationalFunction>>,
}

impl CelineSolution {
    pub fn order(&self) -> usize {
        self.a.len() - 1
    }

    /// The recursion `Σ_i (Σ_j a_{ij}) S(n+i) = 0` for the full sum.
    pub fn operator(&self) -> WeylOp {
        WeylOp::from_coeffs(
            self.a
                .iter()
                .map(|row| RationalFunction::sum(row.iter()))
                .collect(),
        )
    }

    /// Inhomogeneous part for `S(n) = Σ_{k≥0} F(n,k)`:
    /// `Σ_{i,j} a_{ij} Σ_{0≤k<j} F(n+i,k)`, as a rational function of `Q`
    /// given `F(n, 0)` as one.
    pub fn boundary(&self, t: &HGTerm, f_n0: &RationalFunction) -> Result<RationalFunction> {
        let mut terms = Vec::new();
        for (i, row) in self.a.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                for k in 0..j as i64 {
                    let r = shift_ratio(t, i as i64, k)?.subs_monomial(K, &Rational::one(), &[])?;
                    terms.push(c * &r * f_n0);
                }
            }
        }
        Ok(RationalFunction::sum(terms.iter()))
    }
}

/// Solves `Σ_{i≤I, j≤J} a_{ij}(Q) F(n+i,k+j) = 0`. The returned solution has
/// a nonzero k-summed operator and has been checked with [`verify_double`].
pub fn celine_solve(t: &HGTerm, order: usize, kdeg: usize) -> Result<Option<CelineSolution>> {
    let mut cols = Vec::new();
    for i in 0..=order {
        for j in 0..=kdeg {
            cols.push(shift_ratio(t, i as i64, j as i64)?);
        }
    }
    for v in k_kernel(&cols) {
        let a: Vec<Vec<RationalFunction>> = (0..=order)
            .map(|i| {
                (0..=kdeg)
                    .map(|j| RationalFunction::from_poly(v[i * (kdeg + 1) + j].clone()))
                    .collect()
            })
            .collect();
        let sol = CelineSolution { a };
        if sol.operator().is_zero() {
            continue;
        }
        if !verify_double(t, &sol.a)? {
            return Err(Error::Integrality(
                "solver output fails the k-free check".into(),
            ));
        }
        return Ok(Some(sol));
    }
    Ok(None)
}

/// A solution of the certificate ansatz, in backward form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BackwardSolution {
    /// `b[0] = 1`; `b[i]` multiplies `F(n−i, k)`.
    pub b: Vec<RationalFunction>,
    pub cert: RationalFunction,
}

impl BackwardSolution {
    pub fn forward(&self, t: &HGTerm) -> Result<Certificate> {
        Certificate::from_backward(t, &self.b, &self.cert)
    }
}

/// Solves `Σ_{i≤I} b_i F(n−i,k) = R(n,k)F(n,k) − R(n,k−1)F(n,k−1)` with
/// `R = Σ_{l=klo}^{khi} c_l(Q) K^l / k_factor(K)`, normalized to `b_0 = 1`.
/// Solutions are checked with [`verify_backward`] and [`verify_certificate`].
pub fn certificate_solve(
    t: &HGTerm,
    order: usize,
    klo: i32,
    khi: i32,
) -> Result<Option<BackwardSolution>> {
    let mut cols = Vec::new();
    for i in 0..=order {
        cols.push(shift_ratio(t, -(i as i64), 0)?);
    }
    let back_k = shift_ratio(t, 0, -1)?;
    let d = RationalFunction::from_poly(t.k_factor.clone());
    let basis: Vec<RationalFunction> = (klo..=khi)
        .map(|l| {
            RationalFunction::from_poly(LaurentPoly::monomial(&[(K, l)], Rational::one()))
                .checked_div(&d)
        })
        .collect::<std::result::Result<_, _>>()?;
    for r in &basis {
        cols.push(r.q_shift(K, SMALL_Q, -1) * &back_k - r);
    }
    for v in k_kernel(&cols) {
        if v[0].is_zero() {
            continue;
        }
        let b0 = RationalFunction::from_poly(v[0].clone());
        let scale = |x: &LaurentPoly| RationalFunction::from_poly(x.clone()).checked_div(&b0);
        let b = v[..=order]
            .iter()
            .map(scale)
            .collect::<std::result::Result<Vec<_>, _>>()?;
        let mut cert_terms = Vec::new();
        for (x, r) in v[order + 1..].iter().zip(&basis) {
            cert_terms.push(scale(x)? * r);
        }
        let sol = BackwardSolution {
            b,
            cert: RationalFunction::sum(cert_terms.iter()),
        };
        if !verify_backward(t, &sol.b, &sol.cert)? || !verify_certificate(t, &sol.forward(t)?)? {
            return Err(Error::Integrality(
                "solver output fails the certificate check".into(),
            ));
        }
        return Ok(Some(sol));
    }
    Ok(None)
}

/// The least order `I ≤ max_order` at which [`certificate_solve`] succeeds.
pub fn minimal_certificate(
    t: &HGTerm,
    max_order: usize,
    klo: i32,
    khi: i32,
) -> Result<Option<(usize, BackwardSolution)>> {
    for order in 0..=max_order {
        if let Some(s) = certificate_solve(t, order, klo, khi)? {
            return Ok(Some((order, s)));
        }
    }
    Ok(None)
}

/// `Σ a_i E^i`, or for a remainder `R` the homogenized operator
/// `(E − 1)·(1/R)·Σ a_i E^i`.
pub fn telescoped_operator(
    a: &[RationalFunction],
    boundary: Option<&RationalFunction>,
) -> Result<WeylOp> {
    let op = WeylOp::from_coeffs(a.to_vec());
    let Some(r) = boundary else { return Ok(op) };
    if r.is_zero() {
        return Err(Error::InvalidArgument(
            "boundary remainder is identically zero".into(),
        ));
    }
    let inv = WeylOp::scalar(r.recip()?);
    Ok(&(&(&WeylOp::e() - &WeylOp::one()) * &inv) * &op)
}

/// Applies `op` to the explicitly summed sequence for `0 ≤ n ≤ nmax`.
pub fn telescoping_check(t: &HGTerm, op: &WeylOp, nmax: i64) -> Result<bool> {
    let seq = t.sum_sequence();
    for n in 0..=nmax {
        if !op.apply(&seq, n)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Default `K`-window for the certificate numerator of `twist:p`.
pub fn twist_window(p: i64) -> (i32, i32) {
    let w = p.unsigned_abs() as i32 + 2;
    (-w, w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cpoly::nc_cpoly;

    #[test]
    fn ratios_match_values() {
        for p in [-2i64, 1, 2] {
            let t = HGTerm::twist(p);
            assert!(t.is_compatible());
            let (n, k) = (5i64, 2i64);
            let at = |r: RationalFunction| {
                r.subs_monomial(Q, &Rational::one(), &[(SMALL_Q, n as i32)])
                    .unwrap()
                    .subs_monomial(K, &Rational::one(), &[(SMALL_Q, k as i32)])
                    .unwrap()
            };
            for (dn, dk) in [(1, 0), (0, 1), (2, 1), (-1, 0), (0, -1), (-2, 1)] {
                let want = t
                    .value(n + dn, k + dk)
                    .unwrap()
                    .checked_div(&t.value(n, k).unwrap())
                    .unwrap();
                assert_eq!(
                    at(shift_ratio(&t, dn, dk).unwrap()),
                    want,
                    "p={p} ({dn},{dk})"
                );
            }
        }
        let b = HGTerm::q_binomial_theorem();
        assert!(b.is_compatible());
        assert!(b.sum(0).unwrap().is_one());
        assert!(b.sum(4).unwrap().is_zero());
    }

    #[test]
    fn trivial_shifts() {
        let t = HGTerm::twist(1);
        assert!(shift_ratio(&t, 0, 0).unwrap().is_one());
        assert_eq!(shift_ratio(&t, 1, 0).unwrap(), t.ratio_n);
        assert!(verify_kfree(&t, &[RationalFunction::zero(), RationalFunction::zero()]).unwrap());
        assert!(!verify_kfree(&t, &[RationalFunction::one()]).unwrap());
        let zero = Certificate {
            coeffs: vec![RationalFunction::zero()],
            cert: RationalFunction::zero(),
        };
        assert!(verify_certificate(&t, &zero).unwrap());
    }

    #[test]
    fn full_sum_is_twice_the_cyclotomic_function() {
        let t = HGTerm::twist(2);
        let seq = crate::cyclotomic::cyclotomic_sequence(2);
        for n in 0..4 {
            assert_eq!(
                t.sum(n).unwrap(),
                seq.get(n).unwrap().scale(&crate::exact::int(2))
            );
        }
    }

    #[test]
    fn certificate_recovers_c1() {
        let t = HGTerm::twist(1);
        let (lo, hi) = twist_window(1);
        let (order, sol) = minimal_certificate(&t, 2, lo, hi).unwrap().unwrap();
        assert_eq!(order, 1);
        let c = sol.forward(&t).unwrap();
        assert!(c.operator().is_left_associate(&nc_cpoly(1).op));
    }

    #[test]
    fn homogenization() {
        let r = RationalFunction::from_poly(LaurentPoly::var(Q) + LaurentPoly::one());
        let op = telescoped_operator(&[RationalFunction::one()], Some(&r)).unwrap();
        assert_eq!(op.coeff(1), r.q_shift(Q, SMALL_Q, 1).recip().unwrap());
        assert_eq!(op.coeff(0), -r.recip().unwrap());
        assert!(
            telescoped_operator(&[RationalFunction::one()], Some(&RationalFunction::zero()))
                .is_err()
        );
    }

    #[test]
    fn q_binomial_theorem_telescopes() {
        let t = HGTerm::q_binomial_theorem();
        let sol = celine_solve(&t, 1, 1).unwrap().expect("solution");
        let op = sol.operator();
        assert!(telescoping_check(&t, &op, 8).unwrap());
    }
}
