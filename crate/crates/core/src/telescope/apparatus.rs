//! The explicit WZ apparatus for the twist knots: the split summands
//! `t^{(h)}_p(n,k,i,j)`, their sums `r_p(n,k)`, the certificate `Cert_p(n,k)`
//! and `D_p(n,k)`, all as rational functions of `q, Q = q^n, K = q^k`.

use num_traits::One;

use super::{shift_ratio, verify_backward, verify_certificate, Certificate, HGTerm};
use crate::cpoly::nc_backward_coeff;
use crate::cyclotomic::q_binomial;
use crate::exact::{LaurentPoly, Rational, RationalFunction};
use crate::names::{K, Q, SMALL_Q};
use crate::{Error, Result};

fn mono(c: i64, m: &[(&str, i32)]) -> LaurentPoly {
    LaurentPoly::monomial(m, Rational::from_integer(c.into()))
}

fn lift(p: LaurentPoly) -> RationalFunction {
    RationalFunction::from_poly(p)
}

/// `(q;q)_{m+a}/(q;q)_{m+b}` where `q^m = x` is a monomial.
fn pr(x: &LaurentPoly, a: i64, b: i64) -> RationalFunction {
    let factor = |l: i64| LaurentPoly::one() - mono(1, &[(SMALL_Q, l as i32)]) * x;
    let mut acc = LaurentPoly::one();
    let (lo, hi) = if a >= b { (b + 1, a) } else { (a + 1, b) };
    for l in lo..=hi {
        acc = acc * factor(l);
    }
    if a >= b {
        lift(acc)
    } else {
        RationalFunction::new(LaurentPoly::one(), acc).expect("nonzero product")
    }
}

fn sign(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// `t^{(h)}_p(n,k,i,j)`. The branch (`p > 0` or `p < 0` formula) is chosen
/// by `positive`, independently of the sign of `p`, so that the recursions in
/// `p` can be stated with one formula.
pub fn t_term(positive: bool, h: u8, p: i64, i: i64, j: i64) -> RationalFunction {
    let qq = mono(1, &[(Q, 1)]);
    let qk = mono(1, &[(Q, 1), (K, 1)]);
    let q_over_k = mono(1, &[(Q, 1), (K, -1)]);
    let ratio = pr(&qq, -1, 0) * pr(&qk, 1, 1 - i) * pr(&q_over_k, 0, -i);
    let (head, b) = if positive {
        let head = mono(
            sign(i),
            &[
                (SMALL_Q, (i * (i - 1) / 2 + (1 - i) * j) as i32),
                (Q, 2 * j as i32),
            ],
        );
        let b = match h {
            1 => q_binomial(p - j, p - i - j),
            _ => &qq * &q_binomial(p - j - 1, p - i - j - 1),
        };
        (head, b * q_binomial(i + j - 1, j))
    } else {
        let head = mono(
            sign(i),
            &[
                (SMALL_Q, (i * (i - 3) / 2 - i * j) as i32),
                (Q, (2 * p + 1 + 2 * j) as i32),
            ],
        );
        let b = match h {
            1 => q_binomial(-p - j - 1, -p - i - j),
            _ => &qq * &q_binomial(-p - j - 2, -p - i - j - 1),
        };
        (head, b * q_binomial(i + j, j))
    };
    if b.is_zero() {
        return RationalFunction::zero();
    }
    lift(head * b) * ratio
}

/// Signed difference `t^{(1)} − t^{(2)}` (`p > 0`) or `t^{(2)} − t^{(1)}` (`p < 0`).
fn t_diff(positive: bool, p: i64, i: i64, j: i64) -> RationalFunction {
    let d = t_term(positive, 1, p, i, j) - t_term(positive, 2, p, i, j);
    if positive {
        d
    } else {
        -d
    }
}

fn span(p: i64) -> i64 {
    p.abs() + 3
}

/// `r_p(n,k) = Σ_{i≥1} Σ_{j≥0} (t^{(1)} − t^{(2)})` on the given branch.
pub fn r_term(positive: bool, p: i64) -> RationalFunction {
    let n = span(p);
    let terms: Vec<RationalFunction> = (1..=n)
        .flat_map(|i| (0..=n).map(move |j| t_diff(positive, p, i, j)))
        .collect();
    RationalFunction::sum(terms.iter())
}

/// `r_p(n,k) = Σ_i a′_p(n,i) s_p(n−i,k)/s_p(n,k)`.
fn r_from_coefficients(p: i64) -> Result<RationalFunction> {
    let t = HGTerm::twist(p);
    let mut terms = Vec::new();
    for i in 1..=p.abs() {
        terms.push(nc_backward_coeff(p, i)? * shift_ratio(&t, -i, 0)?);
    }
    Ok(RationalFunction::sum(terms.iter()))
}

/// `Cert_p(n,k) = q^{p(k+n+1)} (q^{k+1} − 1)(q^n − q^k) / ((q^{2k+1} − 1)(q^n − 1))`.
pub fn cert_term(p: i64) -> RationalFunction {
    let num = mono(1, &[(SMALL_Q, p as i32), (K, p as i32), (Q, p as i32)])
        * (mono(1, &[(SMALL_Q, 1), (K, 1)]) - LaurentPoly::one())
        * (mono(1, &[(Q, 1)]) - mono(1, &[(K, 1)]));
    let den = (mono(1, &[(SMALL_Q, 1), (K, 2)]) - LaurentPoly::one())
        * (mono(1, &[(Q, 1)]) - LaurentPoly::one());
    RationalFunction::new(num, den).expect("nonzero denominator")
}

/// `D_p(n,k) = Cert_p(n,k) − Cert_p(n,k−1) s_p(n,k−1)/s_p(n,k) − 1`.
pub fn d_term(p: i64) -> Result<RationalFunction> {
    let c = cert_term(p);
    let back = shift_ratio(&HGTerm::twist(p), 0, -1)?;
    Ok(&c - &(c.q_shift(K, SMALL_Q, -1) * back) - RationalFunction::one())
}

/// The coefficients `(1, a′_p(n,1), …, a′_p(n,|p|))` and `Cert_p` of the
/// backward recursion.
pub fn explicit_certificate(p: i64) -> Result<(Vec<RationalFunction>, RationalFunction)> {
    let mut b = vec![RationalFunction::one()];
    for i in 1..=p.abs() {
        b.push(nc_backward_coeff(p, i)?);
    }
    Ok((b, cert_term(p)))
}

/// The five coefficients of the recursion in `p`:
/// `(−q^p(K−Q)(Q−q)(qKQ−1), q²KQ²(Q−1), −q²KQ²(Q−1), −q²K(Q−1), q²K(Q−1))`.
fn recursion_coefficients(p: i64) -> [RationalFunction; 5] {
    let qq = mono(1, &[(Q, 1)]);
    let kk = mono(1, &[(K, 1)]);
    let one = LaurentPoly::one();
    let c0 = mono(-1, &[(SMALL_Q, p as i32)])
        * (&kk - &qq)
        * (&qq - &mono(1, &[(SMALL_Q, 1)]))
        * (mono(1, &[(SMALL_Q, 1), (K, 1), (Q, 1)]) - &one);
    let c1 = mono(1, &[(SMALL_Q, 2), (K, 1), (Q, 2)]) * (&qq - &one);
    let c3 = mono(-1, &[(SMALL_Q, 2), (K, 1)]) * (&qq - &one);
    [
        lift(c0),
        lift(c1.clone()),
        lift(-c1),
        lift(c3.clone()),
        lift(-c3),
    ]
}

fn down(r: &RationalFunction) -> RationalFunction {
    r.q_shift(Q, SMALL_Q, -1)
}

/// Right side of the summed recursion: the `i = 0` column of the first term.
fn summed_rhs(positive: bool, p: i64) -> RationalFunction {
    let [c0, ..] = recursion_coefficients(p);
    let col: Vec<RationalFunction> = (0..=span(p))
        .map(|j| down(&t_diff(positive, p - 1, 0, j)))
        .collect();
    -(c0 * RationalFunction::sum(col.iter()))
}

fn summed_lhs(p: i64, f: &dyn Fn(i64) -> Result<RationalFunction>) -> Result<RationalFunction> {
    let [c0, c1, c2, c3, c4] = recursion_coefficients(p);
    let f1 = f(p - 1)?;
    let terms = [
        c0 * down(&f1),
        c1 * f(p - 2)?,
        c2 * &f1,
        c3 * &f1,
        c4 * f(p)?,
    ];
    Ok(RationalFunction::sum(terms.iter()))
}

/// One identity of the apparatus.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct IdentityCheck {
    pub class: u8,
    pub name: String,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct ApparatusReport {
    pub p: i64,
    pub checks: Vec<IdentityCheck>,
}

impl ApparatusReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &IdentityCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn classes(&self) -> Vec<u8> {
        let mut v: Vec<u8> = self.checks.iter().map(|c| c.class).collect();
        v.dedup();
        v
    }
}

/// Verifies, for one `p` with `1 ≤ |p| ≤ 5`:
///
/// 1. the five-term recursion of `t^{(1)}_p` and `t^{(2)}_p`, their vanishing
///    range, and `Σ_{i,j} (t^{(1)} − t^{(2)}) = r_p`;
/// 2. the summed recursion for `r_p`;
/// 3. the same recursion for `D_p` (not for `p = 1`, where `D_{p−2}` is on
///    the other branch);
/// 4. `Cert_p(n, −1) = 0`;
/// 5. `1 + r_p(n,k) = Cert_p(n,k) − Cert_p(n,k−1) s_p(n,k−1)/s_p(n,k)`, also in
///    the forward certificate form.
pub fn explicit_apparatus(p: i64) -> Result<ApparatusReport> {
    if p == 0 || p.abs() > 5 {
        return Err(Error::InvalidArgument(format!(
            "apparatus needs 1 ≤ |p| ≤ 5, got {p}"
        )));
    }
    let positive = p > 0;
    let mut checks = Vec::new();
    let mut push = |class: u8, name: String, passed: bool| {
        checks.push(IdentityCheck {
            class,
            name,
            passed,
        })
    };

    let [c0, c1, c2, c3, c4] = recursion_coefficients(p);
    let n = span(p);
    for h in [1u8, 2] {
        let t = |pp: i64, i: i64, j: i64| t_term(positive, h, pp, i, j);
        let mut ok = true;
        for i in 1..=n {
            for j in 0..=n {
                let terms = if positive {
                    [
                        &c0 * &down(&t(p - 1, i - 1, j)),
                        &c1 * &t(p - 2, i, j - 1),
                        &c2 * &t(p - 1, i, j - 1),
                        &c3 * &t(p - 1, i, j),
                        &c4 * &t(p, i, j),
                    ]
                } else {
                    [
                        &c0 * &down(&t(p - 1, i - 1, j)),
                        &c1 * &t(p - 2, i, j),
                        &c2 * &t(p - 1, i, j - 1),
                        &c3 * &t(p - 1, i, j),
                        &c4 * &t(p, i, j - 1),
                    ]
                };
                ok &= RationalFunction::sum(terms.iter()).is_zero();
            }
        }
        push(1, format!("t^({h}) recursion"), ok);
        if positive {
            let vanish = (1..=n).all(|i| (p - i - h as i64 + 2..=n).all(|j| t(p, i, j).is_zero()));
            push(1, format!("t^({h}) = 0 for j > p − i − {h} + 1"), vanish);
        }
    }
    let r = r_term(positive, p);
    push(
        1,
        "Σ (t^(1) − t^(2)) = Σ a′ s(n−i,k)/s(n,k)".into(),
        r == r_from_coefficients(p)?,
    );

    let rhs = summed_rhs(positive, p);
    let lhs_r = summed_lhs(p, &|pp| Ok(r_term(positive, pp)))?;
    push(2, "summed recursion for r_p".into(), lhs_r == rhs);

    // D_{p−2} lies on the other branch when p = 1
    if p != 1 {
        let lhs_d = summed_lhs(p, &d_term)?;
        push(3, "same recursion for D_p".into(), lhs_d == rhs);
    }

    let at_minus_one = cert_term(p).subs_monomial(K, &Rational::one(), &[(SMALL_Q, -1)])?;
    push(4, "Cert_p(n, −1) = 0".into(), at_minus_one.is_zero());

    let term = HGTerm::twist(p);
    let (b, cert) = explicit_certificate(p)?;
    push(
        5,
        "1 + r_p = Cert_p(n,k) − Cert_p(n,k−1) s(n,k−1)/s(n,k)".into(),
        verify_backward(&term, &b, &cert)?,
    );
    let fwd = Certificate::from_backward(&term, &b, &cert)?;
    push(
        5,
        "forward certificate form".into(),
        verify_certificate(&term, &fwd)?,
    );

    Ok(ApparatusReport { p, checks })
}
