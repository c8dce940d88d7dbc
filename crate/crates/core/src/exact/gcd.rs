//! Multivariate gcd in the Laurent ring ℚ[x₁^±, …, xₙ^±].
//!
//! Monomials are units there, so results are normalized by
//! [`LaurentPoly::unit_normal`]. The algorithm recurses on one variable at a
//! time: contents by recursion, primitive parts by the subresultant PRS.

use std::collections::BTreeMap;

use super::LaurentPoly;

/// Dense coefficients in one variable, lowest degree first.
type Uni = Vec<LaurentPoly>;

fn to_uni(p: &LaurentPoly, x: &str) -> Uni {
    let (_, p) = shift_to_zero(p, x);
    let coeffs = p.coeffs_in(x);
    let top = coeffs.keys().next_back().copied().unwrap_or(0);
    let mut v = vec![LaurentPoly::zero(); top as usize + 1];
    for (d, c) in coeffs {
        v[d as usize] = c;
    }
    v
}

fn from_uni(u: &Uni, x: &str) -> LaurentPoly {
    let map: BTreeMap<i32, LaurentPoly> = u
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(d, c)| (d as i32, c.clone()))
        .collect();
    LaurentPoly::from_coeffs_in(x, &map)
}

fn shift_to_zero(p: &LaurentPoly, x: &str) -> (i32, LaurentPoly) {
    match p.min_degree_in(x) {
        Some(m) if m != 0 => (m, p.mul_monomial(&[(x, -m)])),
        _ => (0, p.clone()),
    }
}

fn deg(u: &Uni) -> usize {
    u.len() - 1
}

fn trim(u: &mut Uni) {
    while u.len() > 1 && u.last().unwrap().is_zero() {
        u.pop();
    }
}

fn is_zero_uni(u: &Uni) -> bool {
    u.iter().all(|c| c.is_zero())
}

fn prem(a: &Uni, b: &Uni) -> Uni {
    let db = deg(b);
    let lb = b[db].clone();
    let mut r = a.clone();
    let mut e = deg(a) as i64 - db as i64 + 1;
    while !is_zero_uni(&r) && deg(&r) >= db {
        let dr = deg(&r);
        let lr = r[dr].clone();
        let shift = dr - db;
        for c in r.iter_mut() {
            *c = &*c * &lb;
        }
        for (i, c) in b.iter().enumerate() {
            r[i + shift] = &r[i + shift] - &(c * &lr);
        }
        trim(&mut r);
        e -= 1;
    }
    if e > 0 {
        let f = lb.pow(e as u32);
        for c in r.iter_mut() {
            *c = &*c * &f;
        }
    }
    r
}

fn div_uni(u: &Uni, d: &LaurentPoly) -> Uni {
    u.iter()
        .map(|c| c.div_exact(d).expect("subresultant division is exact"))
        .collect()
}

fn uni_content(u: &Uni) -> LaurentPoly {
    gcd_many(u.iter())
}

fn primitive(u: &Uni) -> Uni {
    let c = uni_content(u);
    if c.is_one() {
        return u.clone();
    }
    div_uni(u, &c)
}

/// Subresultant gcd of two primitive polynomials in one variable.
fn subresultant_gcd(a: Uni, b: Uni) -> Uni {
    let (mut a, mut b) = if deg(&a) >= deg(&b) { (a, b) } else { (b, a) };
    let mut g = LaurentPoly::one();
    let mut h = LaurentPoly::one();
    loop {
        let delta = deg(&a) - deg(&b);
        let r = prem(&a, &b);
        if is_zero_uni(&r) {
            return primitive(&b);
        }
        if deg(&r) == 0 {
            return vec![LaurentPoly::one()];
        }
        let divisor = &g * &h.pow(delta as u32);
        a = b;
        b = div_uni(&r, &divisor);
        g = a[deg(&a)].clone();
        h = match delta {
            0 => h,
            1 => g.clone(),
            _ => g
                .pow(delta as u32)
                .div_exact(&h.pow(delta as u32 - 1))
                .expect("subresultant division is exact"),
        };
    }
}

/// Gcd of `a` and `b`, normalized up to units (sign, scalar, monomial).
/// `gcd(0, 0) = 0`.
pub fn gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    if a.is_zero() {
        return b.unit_normal();
    }
    if b.is_zero() {
        return a.unit_normal();
    }
    let a = a.unit_normal();
    let b = b.unit_normal();
    if a.is_constant() || b.is_constant() {
        return LaurentPoly::one();
    }
    if a == b {
        return a;
    }
    if a.num_terms() <= b.num_terms() && b.div_exact(&a).is_some() {
        return a;
    }
    if b.num_terms() <= a.num_terms() && a.div_exact(&b).is_some() {
        return b;
    }
    let in_a = |v: &String| a.has_var(v);
    let in_b = |v: &String| b.has_var(v);
    if let Some(x) = a.vars().iter().find(|v| !in_b(v)) {
        return gcd(&content_in(&a, x), &b);
    }
    if let Some(x) = b.vars().iter().find(|v| !in_a(v)) {
        return gcd(&a, &content_in(&b, x));
    }
    let x = a
        .vars()
        .iter()
        .min_by_key(|v| {
            let da = a.max_degree_in(v).unwrap();
            let db = b.max_degree_in(v).unwrap();
            da.max(db)
        })
        .unwrap()
        .clone();
    let ua = to_uni(&a, &x);
    let ub = to_uni(&b, &x);
    let ca = uni_content(&ua);
    let cb = uni_content(&ub);
    let c = gcd(&ca, &cb);
    let pa = if ca.is_one() { ua } else { div_uni(&ua, &ca) };
    let pb = if cb.is_one() { ub } else { div_uni(&ub, &cb) };
    let g = subresultant_gcd(pa, pb);
    (&c * &from_uni(&g, &x)).unit_normal()
}

/// Gcd of the coefficients of `p` with respect to `x`.
pub fn content_in(p: &LaurentPoly, x: &str) -> LaurentPoly {
    let coeffs = p.coeffs_in(x);
    gcd_many(coeffs.values())
}

pub fn gcd_many<'a>(items: impl IntoIterator<Item = &'a LaurentPoly>) -> LaurentPoly {
    let mut items: Vec<&LaurentPoly> = items.into_iter().filter(|p| !p.is_zero()).collect();
    items.sort_by_key(|p| p.num_terms());
    let mut g = LaurentPoly::zero();
    for p in items {
        g = gcd(&g, p);
        if g.is_one() {
            break;
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(s: &str) -> LaurentPoly {
        LaurentPoly::var(s)
    }

    fn one() -> LaurentPoly {
        LaurentPoly::one()
    }

    #[test]
    fn univariate() {
        let q = v("q");
        let a = (&q - one()) * (&q + one()).pow(2);
        let b = (&q + one()) * (&q.pow(2) + one());
        assert_eq!(gcd(&a, &b), &q + one());
    }

    #[test]
    fn laurent_monomials_are_units() {
        let q = v("q");
        let a = q.pow_i(-2) * (&q - one());
        let b = q.pow(5) * (&q - one()) * (&q + one());
        assert_eq!(gcd(&a, &b), &q - one());
    }

    #[test]
    fn bivariate() {
        let (x, y) = (v("x"), v("y"));
        let f = &x * &y - one();
        let g = &x + &y.pow(2);
        let h = &x - &y;
        let a = &f * &g * &g;
        let b = &f * &g * &h;
        assert_eq!(gcd(&a, &b), (&f * &g).unit_normal());
    }

    #[test]
    fn trivariate_coprime() {
        let (q, qq, k) = (v("q"), v("Q"), v("K"));
        let a = one() - &q * &k * &k;
        let b = one() - &q.pow(2) * &qq * &k;
        assert!(gcd(&a, &b).is_one());
        let c = &a * &b;
        assert_eq!(gcd(&c, &(&a * (&qq - &k))), a.unit_normal());
    }

    #[test]
    fn scalar_content_ignored() {
        let x = v("x");
        let a = LaurentPoly::from_int(6) * (&x - one());
        let b = LaurentPoly::from_int(4) * (&x - one()) * &x;
        assert_eq!(gcd(&a, &b), &x - one());
    }
}
