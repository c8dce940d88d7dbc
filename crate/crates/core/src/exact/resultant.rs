use super::{determinant, gcd_many, ExactError, LaurentPoly, Result};

fn dense_in(p: &LaurentPoly, x: &str) -> Result<Vec<LaurentPoly>> {
    let coeffs = p.coeffs_in(x);
    if coeffs.keys().next().is_some_and(|&d| d < 0) {
        return Err(ExactError::NotPolynomial(format!("negative power of {x}")));
    }
    let top = coeffs.keys().next_back().copied().unwrap_or(0) as usize;
    let mut v = vec![LaurentPoly::zero(); top + 1];
    for (d, c) in coeffs {
        v[d as usize] = c;
    }
    Ok(v)
}

/// Resultant of `f` and `g` with respect to `x`.
///
/// This is the determinant of the Sylvester matrix with the rows of `f`
/// first, so `Res(f, g) = lc(f)^deg(g) · ∏ g(α)` over the roots `α` of `f`.
/// In particular `Res(x − a, x − b) = a − b`.
pub fn resultant(f: &LaurentPoly, g: &LaurentPoly, x: &str) -> Result<LaurentPoly> {
    if f.is_zero() || g.is_zero() {
        return Ok(LaurentPoly::zero());
    }
    let a = dense_in(f, x)?;
    let b = dense_in(g, x)?;
    let m = a.len() - 1;
    let n = b.len() - 1;
    if m == 0 && n == 0 {
        return Ok(LaurentPoly::one());
    }
    if m == 0 {
        return Ok(a[0].pow(n as u32));
    }
    if n == 0 {
        return Ok(b[0].pow(m as u32));
    }
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut r = vec![LaurentPoly::zero(); size];
        for (j, c) in a.iter().rev().enumerate() {
            r[i + j] = c.clone();
        }
        rows.push(r);
    }
    for i in 0..m {
        let mut r = vec![LaurentPoly::zero(); size];
        for (j, c) in b.iter().rev().enumerate() {
            r[i + j] = c.clone();
        }
        rows.push(r);
    }
    Ok(determinant(rows))
}

/// Product of the distinct irreducible factors, each to the sign of its
/// multiplicity: monomial factors `x^e` become `x^sgn(e)`. Normalized to
/// coprime integer coefficients with positive leading coefficient.
pub fn radical(f: &LaurentPoly) -> Result<LaurentPoly> {
    if f.is_zero() {
        return Err(ExactError::ZeroRadical);
    }
    let (mono, p) = f.split_monomial();
    let vars = f.vars().to_vec();
    let mut parts: Vec<LaurentPoly> = vec![p.clone()];
    for v in p.vars() {
        parts.push(p.derivative(v));
    }
    let g = gcd_many(parts.iter());
    let sq = p.div_exact(&g).expect("gcd divides");
    let powers: Vec<(&str, i32)> = vars
        .iter()
        .zip(mono.iter())
        .filter(|(_, &e)| e != 0)
        .map(|(v, &e)| (v.as_str(), e.signum()))
        .collect();
    Ok(sq.mul_monomial(&powers).integer_normal().1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(s: &str) -> LaurentPoly {
        LaurentPoly::var(s)
    }

    #[test]
    fn linear_resultant() {
        let (x, a, b) = (v("x"), v("a"), v("b"));
        let r = resultant(&(&x - &a), &(&x - &b), "x").unwrap();
        assert_eq!(r, &a - &b);
    }

    #[test]
    fn resultant_evaluates_second_argument() {
        let (e, m, q) = (v("E"), v("M"), v("Q"));
        let g = &e * &m * &q - &m * &m * &q - &q + &q * &q * &m + &m;
        let r = resultant(&(&m - &q), &g, "M").unwrap();
        assert_eq!(r, &e * &q * &q);
    }

    #[test]
    fn common_root_gives_zero() {
        let (x, y) = (v("x"), v("y"));
        let one = LaurentPoly::one();
        let f = (&x - &y) * (&x + &one);
        let g = (&x - &y) * (&x - &one);
        assert!(resultant(&f, &g, "x").unwrap().is_zero());
    }

    #[test]
    fn radical_examples() {
        let q = v("Q");
        let one = LaurentPoly::one();
        let f = q.pow(3) * (&one - &q);
        assert_eq!(radical(&f).unwrap(), &q * &q - &q);
        let g = (&q + &one).pow(3) * (&q - &one).pow(2) * q.pow_i(-2);
        assert_eq!(radical(&g).unwrap(), (&q * &q - &one) * q.pow_i(-1));
        assert!(radical(&LaurentPoly::zero()).is_err());
    }
}
