use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{gcd, ExactError, LaurentPoly, Rational, Result};

/// Quotient of Laurent polynomials in lowest terms.
///
/// The denominator is a polynomial with no monomial factor, coprime integer
/// coefficients and a positive leading coefficient; all units live in the
/// numerator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalFunction {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_monomial() {
            return RationalFunction {
                num: num.div_exact(&den).unwrap(),
                den: LaurentPoly::one(),
            };
        }
        let g = gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g).unwrap(), den.div_exact(&g).unwrap())
        };
        Self::normalize_den(num, den)
    }

    /// Moves units of an already coprime pair into the numerator.
    fn normalize_den(num: LaurentPoly, den: LaurentPoly) -> Self {
        let unit_den = den.unit_normal();
        if unit_den == den {
            return RationalFunction { num, den };
        }
        let unit = den.div_exact(&unit_den).unwrap();
        RationalFunction {
            num: num.div_exact(&unit).unwrap(),
            den: unit_den,
        }
    }

    pub fn zero() -> Self {
        RationalFunction {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        RationalFunction {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_poly(LaurentPoly::from_int(n))
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(LaurentPoly::constant(c))
    }

    pub fn var(name: &str) -> Self {
        Self::from_poly(LaurentPoly::var(name))
    }

    pub fn numer(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denom(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn into_parts(self) -> (LaurentPoly, LaurentPoly) {
        (self.num, self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The numerator when the denominator is one.
    pub fn as_poly(&self) -> Option<&LaurentPoly> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn as_constant(&self) -> Option<Rational> {
        self.as_poly().and_then(|p| p.as_constant())
    }

    pub fn vars(&self) -> Vec<String> {
        let mut v: Vec<String> = self
            .num
            .vars()
            .iter()
            .chain(self.den.vars())
            .cloned()
            .collect();
        v.sort();
        v.dedup();
        v
    }

    pub fn has_var(&self, name: &str) -> bool {
        self.num.has_var(name) || self.den.has_var(name)
    }

    pub fn recip(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, n: i32) -> Result<Self> {
        if n < 0 {
            return self.recip()?.pow(-n);
        }
        Ok(RationalFunction {
            num: self.num.pow(n as u32),
            den: self.den.pow(n as u32),
        })
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RationalFunction {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// Substitutes `name ↦ coef · ∏ var^exp`.
    pub fn subs_monomial(
        &self,
        name: &str,
        coef: &Rational,
        powers: &[(&str, i32)],
    ) -> Result<Self> {
        if !self.has_var(name) {
            return Ok(self.clone());
        }
        let num = self.num.subs_monomial(name, coef, powers);
        let den = self.den.subs_monomial(name, coef, powers);
        if den.is_zero() {
            return Err(ExactError::Pole);
        }
        Ok(Self::reduce(num, den))
    }

    /// `name ↦ q^a · name`, the action of the shift on coefficients.
    pub fn q_shift(&self, name: &str, q: &str, a: i32) -> Self {
        if a == 0 || !self.has_var(name) {
            return self.clone();
        }
        let one = Rational::one();
        let num = self.num.subs_monomial(name, &one, &[(name, 1), (q, a)]);
        let den = self.den.subs_monomial(name, &one, &[(name, 1), (q, a)]);
        Self::normalize_den(num, den)
    }

    /// Simultaneous substitution of rational functions for variables.
    pub fn substitute(&self, bindings: &[(&str, RationalFunction)]) -> Result<Self> {
        let n = substitute_poly(&self.num, bindings)?;
        let d = substitute_poly(&self.den, bindings)?;
        &n / &d
    }

    pub fn eval(&self, point: &[(&str, Rational)]) -> Result<Rational> {
        let d = self.den.eval(point)?;
        if d.is_zero() {
            return Err(ExactError::Pole);
        }
        Ok(self.num.eval(point)? / d)
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Ok(self * &rhs.recip()?)
    }

    /// Sum of many terms with one gcd at the end.
    pub fn sum<'a>(items: impl IntoIterator<Item = &'a RationalFunction>) -> Self {
        let items: Vec<&RationalFunction> = items.into_iter().filter(|r| !r.is_zero()).collect();
        if items.is_empty() {
            return Self::zero();
        }
        let mut den_factors: Vec<LaurentPoly> = Vec::new();
        let mut lcm = LaurentPoly::one();
        for r in &items {
            if r.den.is_one() || den_factors.contains(&r.den) {
                continue;
            }
            den_factors.push(r.den.clone());
            let g = gcd(&lcm, &r.den);
            lcm = &lcm * &r.den.div_exact(&g).unwrap();
        }
        let mut num = LaurentPoly::zero();
        for r in &items {
            let cof = lcm.div_exact(&r.den).unwrap();
            num = num + &r.num * &cof;
        }
        Self::reduce(num, lcm)
    }
}

/// `p(bindings)` for a Laurent polynomial `p`, put over one common denominator.
pub fn substitute_poly(
    p: &LaurentPoly,
    bindings: &[(&str, RationalFunction)],
) -> Result<RationalFunction> {
    let bound: Vec<(usize, &RationalFunction)> = bindings
        .iter()
        .filter_map(|(v, r)| p.var_index(v).map(|i| (i, r)))
        .collect();
    if bound.is_empty() {
        return Ok(RationalFunction::from_poly(p.clone()));
    }
    let vars = p.vars().to_vec();
    let mut lo = vec![0i32; bound.len()];
    let mut hi = vec![0i32; bound.len()];
    for (e, _) in p.terms() {
        for (k, (i, _)) in bound.iter().enumerate() {
            lo[k] = lo[k].min(e[*i]);
            hi[k] = hi[k].max(e[*i]);
        }
    }
    for (k, (_, r)) in bound.iter().enumerate() {
        if lo[k] < 0 && r.is_zero() {
            return Err(ExactError::Pole);
        }
    }
    let mut pow_cache: Vec<BTreeMap<(i32, bool), LaurentPoly>> = vec![BTreeMap::new(); bound.len()];
    let mut num = LaurentPoly::zero();
    for (e, c) in p.terms() {
        let mut rest = e.clone();
        let mut t = LaurentPoly::zero();
        let mut factors = Vec::new();
        for (k, (i, r)) in bound.iter().enumerate() {
            let d = e[*i];
            rest[*i] = 0;
            let np = pow_cache[k]
                .entry((d - lo[k], true))
                .or_insert_with(|| r.num.pow((d - lo[k]) as u32))
                .clone();
            let dp = pow_cache[k]
                .entry((hi[k] - d, false))
                .or_insert_with(|| r.den.pow((hi[k] - d) as u32))
                .clone();
            factors.push(np);
            factors.push(dp);
        }
        let mut rest_map = BTreeMap::new();
        rest_map.insert(rest, c.clone());
        t = t + LaurentPoly::from_map(vars.clone(), rest_map);
        for f in factors {
            t = &t * &f;
        }
        num = num + t;
    }
    let mut den = LaurentPoly::one();
    for (k, (_, r)) in bound.iter().enumerate() {
        den = &den * &r.num.pow((-lo[k]) as u32) * &r.den.pow(hi[k] as u32);
    }
    RationalFunction::new(num, den)
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}

fn add_rf(a: &RationalFunction, b: &RationalFunction, negate: bool) -> RationalFunction {
    let bn = if negate { -&b.num } else { b.num.clone() };
    if a.is_zero() {
        return RationalFunction {
            num: bn,
            den: b.den.clone(),
        };
    }
    if b.is_zero() {
        return a.clone();
    }
    if a.den == b.den {
        let num = &a.num + &bn;
        if a.den.is_one() {
            return RationalFunction::from_poly(num);
        }
        return RationalFunction::reduce(num, a.den.clone());
    }
    if a.den.is_one() {
        return RationalFunction {
            num: &a.num * &b.den + bn,
            den: b.den.clone(),
        };
    }
    if b.den.is_one() {
        return RationalFunction {
            num: &a.num + &(&bn * &a.den),
            den: a.den.clone(),
        };
    }
    let g = gcd(&a.den, &b.den);
    let ad = a.den.div_exact(&g).unwrap();
    let bd = b.den.div_exact(&g).unwrap();
    let num = &a.num * &bd + &bn * &ad;
    let den = &a.den * &bd;
    RationalFunction::reduce(num, den)
}

fn mul_rf(a: &RationalFunction, b: &RationalFunction) -> RationalFunction {
    if a.is_zero() || b.is_zero() {
        return RationalFunction::zero();
    }
    if a.den.is_one() && b.den.is_one() {
        return RationalFunction::from_poly(&a.num * &b.num);
    }
    let g1 = gcd(&a.num, &b.den);
    let g2 = gcd(&b.num, &a.den);
    let (an, bd) = if g1.is_one() {
        (a.num.clone(), b.den.clone())
    } else {
        (a.num.div_exact(&g1).unwrap(), b.den.div_exact(&g1).unwrap())
    };
    let (bn, ad) = if g2.is_one() {
        (b.num.clone(), a.den.clone())
    } else {
        (b.num.div_exact(&g2).unwrap(), a.den.div_exact(&g2).unwrap())
    };
    RationalFunction::normalize_den(&an * &bn, &ad * &bd)
}

macro_rules! forward_rf {
    ($tr:ident, $m:ident, $body:expr) => {
        impl $tr<&RationalFunction> for &RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: &RationalFunction) -> RationalFunction {
                $body(self, rhs)
            }
        }
        impl $tr<RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: RationalFunction) -> RationalFunction {
                $body(&self, &rhs)
            }
        }
        impl $tr<&RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: &RationalFunction) -> RationalFunction {
                $body(&self, rhs)
            }
        }
        impl $tr<RationalFunction> for &RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: RationalFunction) -> RationalFunction {
                $body(self, &rhs)
            }
        }
    };
}

forward_rf!(Add, add, |a, b| add_rf(a, b, false));
forward_rf!(Sub, sub, |a, b| add_rf(a, b, true));
forward_rf!(Mul, mul, mul_rf);

impl Div<&RationalFunction> for &RationalFunction {
    type Output = Result<RationalFunction>;
    fn div(self, rhs: &RationalFunction) -> Result<RationalFunction> {
        self.checked_div(rhs)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -self.num,
            den: self.den,
        }
    }
}

impl From<LaurentPoly> for RationalFunction {
    fn from(p: LaurentPoly) -> Self {
        Self::from_poly(p)
    }
}

impl From<i64> for RationalFunction {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(s: &str) -> RationalFunction {
        RationalFunction::var(s)
    }

    #[test]
    fn lowest_terms() {
        let q = LaurentPoly::var("q");
        let one = LaurentPoly::one();
        let r = RationalFunction::new(&q * &q - &one, (&q - &one) * &q).unwrap();
        assert_eq!(r.numer(), &((&q + &one) * q.pow_i(-1)));
        assert_eq!(r.denom(), &LaurentPoly::one());
    }

    #[test]
    fn denominator_normalized() {
        let q = LaurentPoly::var("q");
        let one = LaurentPoly::one();
        let r = RationalFunction::new(one.clone(), LaurentPoly::from_int(-2) * &q * (&one - &q))
            .unwrap();
        assert_eq!(r.denom(), &(&q - &one));
        assert_eq!(r.numer(), &(q.pow_i(-1).scale(&crate::exact::rat(1, 2))));
    }

    #[test]
    fn field_arithmetic() {
        let q = v("q");
        let one = RationalFunction::one();
        let a = (&one / &(&one - &q)).unwrap();
        let b = (&q / &(&one - &q)).unwrap();
        assert_eq!(&a - &b, one);
        let c = (&a * &(&one - &q)) - RationalFunction::one();
        assert!(c.is_zero());
    }

    #[test]
    fn substitution() {
        let x = LaurentPoly::var("x");
        let p = &x * &x + LaurentPoly::from_int(2) * x.pow_i(-1);
        let val = (&RationalFunction::one() / &(RationalFunction::one() + v("y"))).unwrap();
        let r = substitute_poly(&p, &[("x", val.clone())]).unwrap();
        let expect =
            &(&val * &val) + &(RationalFunction::from_int(2) * (RationalFunction::one() + v("y")));
        assert_eq!(r, expect);
    }

    #[test]
    fn sum_of_many() {
        let q = v("q");
        let one = RationalFunction::one();
        let terms: Vec<RationalFunction> = (1..5)
            .map(|j| (&one / &(&one - &q.pow(j).unwrap())).unwrap())
            .collect();
        let s = RationalFunction::sum(terms.iter());
        let mut t = RationalFunction::zero();
        for x in &terms {
            t = t + x;
        }
        assert_eq!(s, t);
    }
}
