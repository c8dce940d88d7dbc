//! The rational map `φ` from the `(L, M)`-plane of the A-polynomial to the
//! `(E, Q)`-plane of the C-polynomial, and the checks relating the two curves.
//!
//! ```text
//! φ(E) = L(M² − 1)² / (M(L + M)(1 + LM)),    φ(Q) = (1 + LM)/(L + M)
//! ```

use num_traits::{One, Signed};
use serde::Serialize;

use crate::cpoly::cpoly_closed;
use crate::cyclotomic::{alexander_twist, alexander_z, block_coeff};
use crate::exact::{
    gcd, radical, resultant, substitute_poly, LaurentPoly, Rational, RationalFunction,
};
use crate::names::{E, L, M, Q, SMALL_Q};
use crate::qweyl::op_reverse;
use crate::{Error, Result};

fn var(name: &str) -> LaurentPoly {
    LaurentPoly::var(name)
}

fn int(n: i64) -> LaurentPoly {
    LaurentPoly::from_int(n)
}

/// Images of `E` and `Q` under `φ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiMap {
    pub image_e: RationalFunction,
    pub image_q: RationalFunction,
}

impl Default for PhiMap {
    fn default() -> Self {
        let (l, m) = (var(L), var(M));
        let lm1 = LaurentPoly::one() + &l * &m;
        let l_plus_m = &l + &m;
        let image_e = RationalFunction::new(
            &l * &(m.pow(2) - LaurentPoly::one()).pow(2),
            &m * &l_plus_m * &lm1,
        )
        .expect("nonzero");
        let image_q = RationalFunction::new(lm1, l_plus_m).expect("nonzero");
        PhiMap { image_e, image_q }
    }
}

impl PhiMap {
    pub fn apply(&self, p: &LaurentPoly) -> Result<RationalFunction> {
        Ok(substitute_poly(
            p,
            &[(E, self.image_e.clone()), (Q, self.image_q.clone())],
        )?)
    }
}

/// `P(φ(E), φ(Q))`.
pub fn phi_substitute(p: &LaurentPoly) -> Result<RationalFunction> {
    PhiMap::default().apply(p)
}

fn powers(x: &LaurentPoly, n: i32) -> Vec<LaurentPoly> {
    let mut v = vec![LaurentPoly::one()];
    for i in 1..=n.max(0) as usize {
        v.push(&v[i - 1] * x);
    }
    v
}

/// `φ(P)` as an unreduced pair `(numerator, denominator)` of polynomials in `L, M`.
/// Much cheaper than [`phi_substitute`], which reduces by a gcd.
pub fn phi_parts(p: &LaurentPoly) -> (LaurentPoly, LaurentPoly) {
    let (l, m) = (var(L), var(M));
    let a = &l * &(m.pow(2) - LaurentPoly::one()).pow(2);
    let c = LaurentPoly::one() + &l * &m;
    let d = &l + &m;
    let b = &m * &d * &c;
    let lo_e = p.min_degree_in(E).unwrap_or(0);
    let hi_e = p.max_degree_in(E).unwrap_or(0);
    let lo_q = p.min_degree_in(Q).unwrap_or(0);
    let hi_q = p.max_degree_in(Q).unwrap_or(0);
    let (pa, pb) = (powers(&a, hi_e - lo_e), powers(&b, hi_e - lo_e));
    let (pc, pd) = (powers(&c, hi_q - lo_q), powers(&d, hi_q - lo_q));
    let mut num = LaurentPoly::zero();
    for (i, ci) in p.coeffs_in(E) {
        for (j, cij) in ci.coeffs_in(Q) {
            let (i0, j0) = ((i - lo_e) as usize, (j - lo_q) as usize);
            let (i1, j1) = ((hi_e - i) as usize, (hi_q - j) as usize);
            num = num + &cij * &pa[i0] * &pb[i1] * &pc[j0] * &pd[j1];
        }
    }
    let (mut top, mut bottom) = (
        LaurentPoly::one(),
        b.pow(hi_e.max(0) as u32) * d.pow(hi_q.max(0) as u32),
    );
    // E^lo_e Q^lo_q pulled out front
    for (x, e) in [(&a, lo_e), (&c, lo_q)] {
        if e > 0 {
            top = top * x.pow(e as u32);
        } else {
            bottom = bottom * x.pow((-e) as u32);
        }
    }
    for (x, e) in [(&b, hi_e), (&d, hi_q)] {
        if e < 0 {
            top = top * x.pow((-e) as u32);
        }
    }
    (num * top, bottom)
}

/// `x(L, M)` of the Hoste–Shanahan recursion.
pub fn hs_x() -> LaurentPoly {
    let (l, m) = (var(L), var(M));
    -&l + l.pow(2)
        + int(2) * &l * m.pow(2)
        + m.pow(4)
        + int(2) * &l * m.pow(4)
        + l.pow(2) * m.pow(4)
        + int(2) * &l * m.pow(6)
        + m.pow(8)
        - &l * m.pow(8)
}

/// `y(L, M) = M⁴(L + M²)⁴`.
pub fn hs_y() -> LaurentPoly {
    let (l, m) = (var(L), var(M));
    m.pow(4) * (&l + &m.pow(2)).pow(4)
}

/// `f(L, M^{1/2})` for `f` with even powers of `M`.
pub fn half_m(f: &LaurentPoly) -> Result<LaurentPoly> {
    Ok(f.coerce_half(M, M)?)
}

/// `Â_p = φ(C_p^op)` divided by the monomial-type factor of the twist knots.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct APolyCandidate {
    pub p: i64,
    pub poly: LaurentPoly,
}

/// The factor as `(numerator, denominator)`.
fn cphi_factor(p: i64) -> (LaurentPoly, LaurentPoly) {
    let (l, m) = (var(L), var(M));
    let lm1 = LaurentPoly::one() + &l * &m;
    let l_plus_m = &l + &m;
    if p > 0 {
        (
            lm1.pow(p as u32),
            m.pow(p as u32) * l_plus_m.pow((3 * p - 1) as u32),
        )
    } else {
        (
            LaurentPoly::one(),
            (m * l_plus_m * lm1).pow(p.unsigned_abs() as u32),
        )
    }
}

/// `φ(C_p^op)` divided by the factor, before sign normalization.
fn a_raw(p: i64) -> Result<LaurentPoly> {
    if p == 0 {
        return Ok(LaurentPoly::one());
    }
    let (num, den) = phi_parts(&op_reverse(&cpoly_closed(p).poly));
    let (fnum, fden) = cphi_factor(p);
    match (num * fden).div_exact(&(den * fnum)) {
        Some(x) if x.is_polynomial() => Ok(x),
        _ => Err(Error::NotPolynomial(format!(
            "φ(C_{p}^op) over its factor, p = {p}"
        ))),
    }
}

/// Sign so that the leading term in total degree (ties broken
/// lexicographically) is positive.
fn sign_normal(p: LaurentPoly) -> LaurentPoly {
    let lead = p
        .terms()
        .max_by(|(a, _), (b, _)| {
            let (da, db): (i32, i32) = (a.iter().sum(), b.iter().sum());
            da.cmp(&db).then_with(|| a.cmp(b))
        })
        .map(|(_, c)| c.is_negative());
    if lead == Some(true) {
        -p
    } else {
        p
    }
}

pub fn a_candidate(p: i64) -> Result<APolyCandidate> {
    Ok(APolyCandidate {
        p,
        poly: sign_normal(a_raw(p)?),
    })
}

/// `A_p = x·A_{p−s} − y·A_{p−2s}` at `(L, M^{1/2})`, `s = sgn p`, for every
/// `p` in the range whose two predecessors also lie in it.
pub fn hs_recursion_check(pmin: i64, pmax: i64) -> Result<bool> {
    if pmin <= 0 && pmax >= 0 && pmin < pmax {
        return Err(Error::InvalidArgument(
            "range must lie on one side of 0".into(),
        ));
    }
    let x = half_m(&hs_x())?;
    let y = half_m(&hs_y())?;
    let a: std::collections::BTreeMap<i64, LaurentPoly> = (pmin..=pmax)
        .map(|p| Ok((p, a_raw(p)?)))
        .collect::<Result<_>>()?;
    for p in pmin..=pmax {
        let s = p.signum();
        let (p1, p2) = (p - s, p - 2 * s);
        let (Some(a1), Some(a2)) = (a.get(&p1), a.get(&p2)) else {
            continue;
        };
        if a[&p] != &x * a1 - &y * a2 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `EMQ − M²Q − Q + Q²M + M`.
pub fn eliminant() -> LaurentPoly {
    let (e, m, q) = (var(E), var(M), var(Q));
    &e * &m * &q - m.pow(2) * &q - &q + q.pow(2) * &m + &m
}

/// `rad(Res_M(G((MQ − 1)/(M − Q), M)·(M − Q)^{deg_L G}, EMQ − M²Q − Q + Q²M + M))`.
pub fn invert_phi(g: &LaurentPoly) -> Result<LaurentPoly> {
    if g.is_zero() {
        return Err(Error::InvalidArgument(
            "cannot invert the zero polynomial".into(),
        ));
    }
    if g.as_constant().is_some() {
        return Ok(g.clone());
    }
    let (m, q) = (var(M), var(Q));
    let num = &m * &q - LaurentPoly::one();
    let den = &m - &q;
    let coeffs = g.coeffs_in(L);
    let lo = *coeffs.keys().next().unwrap();
    let hi = *coeffs.keys().next_back().unwrap();
    let mut cleared = LaurentPoly::zero();
    for (&j, c) in &coeffs {
        cleared = cleared + c * &num.pow((j - lo) as u32) * den.pow((hi - j) as u32);
    }
    if cleared.is_zero() {
        return Err(Error::InvalidArgument("cleared polynomial vanishes".into()));
    }
    let (_, cleared) = cleared.split_monomial();
    let r = resultant(&cleared, &eliminant(), M)?;
    Ok(radical(&r)?.unit_normal())
}

/// The unit list for [`monomial_equiv`]: `1 + 2Q + Q² + QE` and `1 − 2Q + Q² + QE`,
/// besides the monomials in `E` and `Q`.
pub fn clasp_units() -> Vec<LaurentPoly> {
    let (e, q) = (var(E), var(Q));
    let base = LaurentPoly::one() + q.pow(2) + &q * &e;
    vec![&base + &(int(2) * &q), &base - &(int(2) * &q)]
}

/// Whether `f/g` is a constant times a product of integer powers of
/// monomials and the given units.
pub fn monomial_equiv(f: &LaurentPoly, g: &LaurentPoly, units: &[LaurentPoly]) -> bool {
    if f.is_zero() || g.is_zero() {
        return false;
    }
    let c = gcd(f, g);
    let strip = |mut x: LaurentPoly| {
        for u in units {
            while let Some(y) = x.div_exact(u) {
                if y == x {
                    break;
                }
                x = y;
            }
        }
        x.split_monomial().1
    };
    let a = strip(f.div_exact(&c).expect("gcd divides"));
    let b = strip(g.div_exact(&c).expect("gcd divides"));
    a.as_constant().is_some() && b.as_constant().is_some()
}

/// Neither `(Q − 1)² + QE` nor `(Q + 1)² + QE` divides `C_p^op`.
pub fn clasp_factor_check(p: i64) -> bool {
    let d = op_reverse(&cpoly_closed(p).poly);
    clasp_units().iter().all(|u| d.div_exact(u).is_none())
}

/// Total degree of `C_p(E, Q)`, monomial content removed, equals `3|p| − 2`.
pub fn degree_check(p: i64) -> bool {
    let (_, c) = cpoly_closed(p).poly.split_monomial();
    c.total_degree() == Some((3 * p.abs() - 2) as i32)
}

/// Checks, for `0 ≤ n ≤ nmax`, `0 ≤ k ≤ kmax`, the shift relations of the
/// colored Jones weights `C(n, k)`, cross-multiplied:
///
/// ```text
/// C(n+1,k)(1 − q^{k−n})(1 − q^{1+n}) = C(n,k)(1 − q^{−n})(1 − q^{1+k+n})
/// C(n,k+1)(1 − q)² = −q^{−k}(1 − q^{1+k−n})(1 − q^{1+k+n}) C(n,k)
/// ```
///
/// The factor `q/(1 − q)²` in the second ratio is `{1}`'s denominator squared.
pub fn heuristic_annihilators(nmax: i64, kmax: i64) -> Result<bool> {
    let qp = |e: i64| LaurentPoly::monomial(&[(SMALL_Q, e as i32)], Rational::one());
    let f = |e: i64| LaurentPoly::one() - qp(e);
    for n in 0..=nmax {
        for k in 0..=kmax {
            let c = block_coeff(n, k)?;
            let lhs = block_coeff(n + 1, k)? * f(k - n) * f(1 + n);
            if lhs != &c * &(f(-n) * f(1 + k + n)) {
                return Ok(false);
            }
            let next = block_coeff(n, k + 1)?;
            if next * f(1).pow(2) != -(qp(-k) * f(1 + k - n) * f(1 + k + n) * &c) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `φ(C_p^op)|_{L=1} = C_p^op(M − 2 + M^{−1}, 1) = Δ_p(M)`.
pub fn specialization_chain(p: i64) -> Result<bool> {
    let d = op_reverse(&cpoly_closed(p).poly);
    let (num, den) = phi_parts(&d);
    let (num, den) = (
        num.subs_monomial(L, &Rational::one(), &[]),
        den.subs_monomial(L, &Rational::one(), &[]),
    );
    let direct = d
        .subs_monomial(Q, &Rational::one(), &[])
        .subs_poly(E, &alexander_z())?;
    Ok(!den.is_zero() && num == &direct * &den && direct == alexander_twist(p))
}

/// `invert_phi(Â_p) ≡′ rad(C_p^op)`.
pub fn round_trip(p: i64) -> Result<bool> {
    let back = invert_phi(&a_candidate(p)?.poly)?;
    let target = radical(&op_reverse(&cpoly_closed(p).poly))?;
    Ok(monomial_equiv(&back, &target, &clasp_units()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lm(c: i64, l: i32, m: i32) -> LaurentPoly {
        LaurentPoly::monomial(&[(L, l), (M, m)], Rational::from_integer(c.into()))
    }

    #[test]
    fn phi_images() {
        let phi = PhiMap::default();
        assert_eq!(phi_substitute(&var(Q)).unwrap(), phi.image_q);
        assert!(phi_substitute(&LaurentPoly::one()).unwrap().is_one());
        let p = LaurentPoly::one() + var(Q) * var(E);
        let lm1 = LaurentPoly::one() + var(L) * var(M);
        let want = RationalFunction::new(
            &lm1 * &(var(L) + var(M).pow(3)),
            var(M) * (var(L) + var(M)).pow(2),
        )
        .unwrap();
        assert_eq!(phi_substitute(&p).unwrap(), want);
        let (n, d) = phi_parts(&p);
        assert_eq!(RationalFunction::new(n, d).unwrap(), want);
        let (e, q) = (var(E), var(Q));
        let p = &e * &q - &e * &q.pow(2) + LaurentPoly::one() + q.pow(2);
        let x = half_m(&hs_x()).unwrap();
        let want = RationalFunction::new(&lm1 * &x, var(M) * (var(L) + var(M)).pow(3)).unwrap();
        assert_eq!(phi_substitute(&p).unwrap(), want);
        let p = var(E).pow(2) * var(Q).pow_i(-1) - var(Q).pow(3) * var(E).pow_i(-1);
        let (n, d) = phi_parts(&p);
        assert_eq!(
            RationalFunction::new(n, d).unwrap(),
            phi_substitute(&p).unwrap()
        );
    }

    #[test]
    fn candidates() {
        assert_eq!(a_candidate(1).unwrap().poly, lm(1, 1, 0) + lm(1, 0, 3));
        assert!(a_candidate(0).unwrap().poly.is_one());
        let fig8 = lm(1, 1, 0)
            * (lm(1, 0, 0) - lm(1, 0, 1) - lm(2, 0, 2) - lm(1, 0, 3) + lm(1, 0, 4))
            - lm(1, 0, 2)
            - lm(1, 2, 2);
        let a = a_candidate(-1).unwrap().poly;
        assert!(a == fig8 || a == -fig8);
    }

    #[test]
    fn recursion() {
        assert!(hs_recursion_check(1, 6).unwrap());
        assert!(hs_recursion_check(-6, -1).unwrap());
        assert!(hs_recursion_check(3, 4).unwrap());
        assert!(hs_recursion_check(-2, 2).is_err());
    }

    #[test]
    fn inversion() {
        let back = invert_phi(&a_candidate(1).unwrap().poly).unwrap();
        assert!(monomial_equiv(
            &back,
            &(LaurentPoly::one() + var(Q) * var(E)),
            &clasp_units()
        ));
        assert_eq!(invert_phi(&int(3)).unwrap(), int(3));
        for p in [-3i64, -2, -1, 1, 2, 3] {
            assert!(round_trip(p).unwrap(), "p = {p}");
        }
    }

    #[test]
    fn unit_equivalence() {
        let u = clasp_units();
        let (e, q) = (var(E), var(Q));
        let f = LaurentPoly::one() + &q * &e;
        assert!(monomial_equiv(&(q.pow(2) * &f), &f, &u));
        assert!(!monomial_equiv(
            &f,
            &(LaurentPoly::one() + q.pow(2) * &e),
            &u
        ));
        let h = &e + &int(3);
        assert!(monomial_equiv(&(&u[1] * &h), &h, &u));
    }

    #[test]
    fn structure() {
        for p in (-10..=10).filter(|&p| p != 0) {
            assert!(clasp_factor_check(p), "p = {p}");
            assert!(degree_check(p), "p = {p}");
        }
        assert!(heuristic_annihilators(8, 8).unwrap());
    }

    #[test]
    fn brace_normalization() {
        // C(4,2)/C(4,1) = {2}{6}
        let (c1, c2) = (block_coeff(4, 1).unwrap(), block_coeff(4, 2).unwrap());
        let q = var(SMALL_Q);
        let printed =
            -(q.pow_i(-2)) * (LaurentPoly::one() - q.pow_i(-2)) * (LaurentPoly::one() - q.pow(6));
        let ratio = RationalFunction::new(c2, c1).unwrap();
        assert_ne!(ratio, RationalFunction::from_poly(printed.clone()));
        let one_q = LaurentPoly::one() - q.clone();
        assert_eq!(
            ratio,
            RationalFunction::new(printed * q, one_q.pow(2)).unwrap()
        );
    }

    #[test]
    fn chain() {
        for p in -6..=6 {
            assert!(specialization_chain(p).unwrap(), "p = {p}");
        }
    }
}
