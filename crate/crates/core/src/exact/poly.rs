use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use smallvec::SmallVec;

use super::{ExactError, Rational, Result};

/// Exponent vector, one entry per variable of the owning polynomial.
pub type Exps = SmallVec<[i32; 4]>;

/// Sparse Laurent polynomial over ℚ in named variables.
///
/// Canonical form: variables sorted and each one actually occurring, no zero
/// coefficients, terms ordered lexicographically by exponent vector. The last
/// term is the leading term.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    vars: Vec<String>,
    terms: BTreeMap<Exps, Rational>,
}

fn add_into(map: &mut BTreeMap<Exps, Rational>, e: Exps, c: Rational) {
    if c.is_zero() {
        return;
    }
    match map.entry(e) {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

fn merge_vars(a: &[String], b: &[String]) -> Vec<String> {
    let mut v: Vec<String> = a.iter().chain(b.iter()).cloned().collect();
    v.sort();
    v.dedup();
    v
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        add_into(&mut terms, Exps::new(), c);
        LaurentPoly {
            vars: Vec::new(),
            terms,
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(Rational::from_integer(BigInt::from(n)))
    }

    pub fn var(name: &str) -> Self {
        Self::monomial(&[(name, 1)], Rational::one())
    }

    /// `coef · ∏ var^exp`; repeated variables multiply.
    pub fn monomial(powers: &[(&str, i32)], coef: Rational) -> Self {
        let mut vars: Vec<String> = powers.iter().map(|(v, _)| v.to_string()).collect();
        vars.sort();
        vars.dedup();
        let mut e = Exps::from_elem(0, vars.len());
        for (v, x) in powers {
            let i = vars.iter().position(|w| w == v).unwrap();
            e[i] += x;
        }
        let mut terms = BTreeMap::new();
        add_into(&mut terms, e, coef);
        LaurentPoly { vars, terms }.trimmed()
    }

    /// Builds a polynomial from terms given over `vars` in any order.
    /// Duplicate exponent vectors are summed.
    pub fn from_terms<S, I>(vars: &[S], terms: I) -> Result<Self>
    where
        S: AsRef<str>,
        I: IntoIterator<Item = (Vec<i32>, Rational)>,
    {
        let names: Vec<String> = vars.iter().map(|s| s.as_ref().to_string()).collect();
        let mut sorted = names.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != names.len() {
            return Err(ExactError::Parse("duplicate variable".into()));
        }
        let perm: Vec<usize> = names
            .iter()
            .map(|n| sorted.iter().position(|s| s == n).unwrap())
            .collect();
        let mut map = BTreeMap::new();
        for (exp, c) in terms {
            if exp.len() != names.len() {
                return Err(ExactError::Parse(format!(
                    "exponent vector of length {} for {} variables",
                    exp.len(),
                    names.len()
                )));
            }
            let mut e = Exps::from_elem(0, sorted.len());
            for (i, x) in exp.into_iter().enumerate() {
                e[perm[i]] = x;
            }
            add_into(&mut map, e, c);
        }
        Ok(LaurentPoly {
            vars: sorted,
            terms: map,
        }
        .trimmed())
    }

    /// Drops variables that no longer occur.
    fn trimmed(mut self) -> Self {
        if self.vars.is_empty() {
            return self;
        }
        let n = self.vars.len();
        let used: Vec<bool> = (0..n)
            .map(|i| self.terms.keys().any(|e| e[i] != 0))
            .collect();
        if used.iter().all(|&u| u) {
            return self;
        }
        let vars = self
            .vars
            .iter()
            .zip(&used)
            .filter(|(_, &u)| u)
            .map(|(v, _)| v.clone())
            .collect();
        let terms = std::mem::take(&mut self.terms)
            .into_iter()
            .map(|(e, c)| {
                let e: Exps = e
                    .iter()
                    .zip(&used)
                    .filter(|(_, &u)| u)
                    .map(|(x, _)| *x)
                    .collect();
                (e, c)
            })
            .collect();
        LaurentPoly { vars, terms }
    }

    fn embed(&self, vars: &[String]) -> BTreeMap<Exps, Rational> {
        if self.vars == vars {
            return self.terms.clone();
        }
        let pos: Vec<usize> = self
            .vars
            .iter()
            .map(|v| vars.iter().position(|w| w == v).unwrap())
            .collect();
        self.terms
            .iter()
            .map(|(e, c)| {
                let mut f = Exps::from_elem(0, vars.len());
                for (i, x) in e.iter().enumerate() {
                    f[pos[i]] = *x;
                }
                (f, c.clone())
            })
            .collect()
    }

    /// Exponent vectors of `self` re-expressed over the variable list `vars`,
    /// which must contain every variable of `self`.
    pub fn terms_over(&self, vars: &[String]) -> BTreeMap<Exps, Rational> {
        self.embed(vars)
    }

    pub fn from_map(vars: Vec<String>, terms: BTreeMap<Exps, Rational>) -> Self {
        let terms = terms.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        LaurentPoly { vars, terms }.trimmed()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exps, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.vars.is_empty() && self.terms.values().next().is_some_and(|c| c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// The value of a constant polynomial.
    pub fn as_constant(&self) -> Option<Rational> {
        if self.is_zero() {
            Some(Rational::zero())
        } else if self.is_constant() {
            self.terms.values().next().cloned()
        } else {
            None
        }
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn has_var(&self, name: &str) -> bool {
        self.var_index(name).is_some()
    }

    /// Coefficient of the monomial `∏ var^exp`.
    pub fn coeff(&self, powers: &[(&str, i32)]) -> Rational {
        let mut e = Exps::from_elem(0, self.vars.len());
        for (v, x) in powers {
            match self.var_index(v) {
                Some(i) => e[i] += x,
                None if *x == 0 => {}
                None => return Rational::zero(),
            }
        }
        self.terms.get(&e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading(&self) -> Option<(&Exps, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coeff(&self) -> Rational {
        self.leading()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rational::zero)
    }

    pub fn max_degree_in(&self, name: &str) -> Option<i32> {
        if self.is_zero() {
            return None;
        }
        Some(match self.var_index(name) {
            Some(i) => self.terms.keys().map(|e| e[i]).max().unwrap(),
            None => 0,
        })
    }

    pub fn min_degree_in(&self, name: &str) -> Option<i32> {
        if self.is_zero() {
            return None;
        }
        Some(match self.var_index(name) {
            Some(i) => self.terms.keys().map(|e| e[i]).min().unwrap(),
            None => 0,
        })
    }

    /// Maximum of the exponent sums over all terms.
    pub fn total_degree(&self) -> Option<i32> {
        self.terms.keys().map(|e| e.iter().sum::<i32>()).max()
    }

    /// True when no exponent is negative.
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x >= 0))
    }

    /// Coefficients with respect to `name`, keyed by exponent.
    pub fn coeffs_in(&self, name: &str) -> BTreeMap<i32, LaurentPoly> {
        let Some(i) = self.var_index(name) else {
            let mut m = BTreeMap::new();
            if !self.is_zero() {
                m.insert(0, self.clone());
            }
            return m;
        };
        let mut vars = self.vars.clone();
        vars.remove(i);
        let mut parts: BTreeMap<i32, BTreeMap<Exps, Rational>> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut f = e.clone();
            let d = f.remove(i);
            parts.entry(d).or_default().insert(f, c.clone());
        }
        parts
            .into_iter()
            .map(|(d, t)| {
                (
                    d,
                    LaurentPoly {
                        vars: vars.clone(),
                        terms: t,
                    }
                    .trimmed(),
                )
            })
            .collect()
    }

    /// Inverse of [`coeffs_in`](Self::coeffs_in).
    pub fn from_coeffs_in(name: &str, coeffs: &BTreeMap<i32, LaurentPoly>) -> Self {
        let x = LaurentPoly::var(name);
        let mut acc = LaurentPoly::zero();
        for (d, c) in coeffs {
            acc = acc + c * &x.pow_i(*d);
        }
        acc
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, d)| (e.clone(), d * c)).collect(),
        }
    }

    /// Multiplies by the monomial `∏ var^exp`.
    pub fn mul_monomial(&self, powers: &[(&str, i32)]) -> Self {
        if powers.iter().all(|(_, x)| *x == 0) {
            return self.clone();
        }
        self * &Self::monomial(powers, Rational::one())
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = &result * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Integer power; negative powers exist only for monomials.
    pub fn pow_i(&self, n: i32) -> Self {
        if n >= 0 {
            return self.pow(n as u32);
        }
        let (e, c) = self.leading().expect("negative power of zero");
        assert!(self.is_monomial(), "negative power of a non-monomial");
        let m = (-n) as u32;
        let c = c.recip();
        let mut c_pow = Rational::one();
        for _ in 0..m {
            c_pow *= &c;
        }
        let e: Exps = e.iter().map(|x| x * n).collect();
        let mut terms = BTreeMap::new();
        terms.insert(e, c_pow);
        LaurentPoly {
            vars: self.vars.clone(),
            terms,
        }
    }

    pub fn derivative(&self, name: &str) -> Self {
        let Some(i) = self.var_index(name) else {
            return Self::zero();
        };
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            if e[i] != 0 {
                let mut f = e.clone();
                f[i] -= 1;
                add_into(
                    &mut terms,
                    f,
                    c * Rational::from_integer(BigInt::from(e[i])),
                );
            }
        }
        LaurentPoly {
            vars: self.vars.clone(),
            terms,
        }
        .trimmed()
    }

    /// Splits off the monomial content: `self = x^m · rest` where `rest`
    /// has minimum exponent zero in every variable.
    pub fn split_monomial(&self) -> (Vec<i32>, LaurentPoly) {
        if self.is_zero() {
            return (vec![0; self.vars.len()], self.clone());
        }
        let n = self.vars.len();
        let mins: Vec<i32> = (0..n)
            .map(|i| self.terms.keys().map(|e| e[i]).min().unwrap())
            .collect();
        if mins.iter().all(|&m| m == 0) {
            return (mins, self.clone());
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let f: Exps = e.iter().zip(&mins).map(|(x, m)| x - m).collect();
                (f, c.clone())
            })
            .collect();
        (
            mins,
            LaurentPoly {
                vars: self.vars.clone(),
                terms,
            }
            .trimmed(),
        )
    }

    /// Writes `self = c · prim` with `prim` having coprime integer
    /// coefficients and a positive leading coefficient.
    pub fn integer_normal(&self) -> (Rational, LaurentPoly) {
        if self.is_zero() {
            return (Rational::one(), Self::zero());
        }
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut num_gcd = BigInt::zero();
        for c in self.terms.values() {
            let v = c.numer() * (&den_lcm / c.denom());
            num_gcd = num_gcd.gcd(&v);
        }
        let mut content = Rational::new(num_gcd, den_lcm);
        if self.leading_coeff().is_negative() {
            content = -content;
        }
        if content.is_one() {
            return (content, self.clone());
        }
        let inv = content.recip();
        (content, self.scale(&inv))
    }

    /// Associate of `self` with monomial and scalar content removed.
    pub fn unit_normal(&self) -> LaurentPoly {
        let (_, p) = self.split_monomial();
        p.integer_normal().1
    }

    /// Exact division in the Laurent ring, or `None` when `other` does not divide `self`.
    pub fn div_exact(&self, other: &LaurentPoly) -> Option<LaurentPoly> {
        if other.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if other.is_monomial() {
            let (e, c) = other.leading().unwrap();
            let c = c.recip();
            let pos: Vec<usize> = other
                .vars
                .iter()
                .map(|v| self.var_index(v).unwrap_or(usize::MAX))
                .collect();
            if pos.iter().all(|&p| p != usize::MAX) {
                let terms = self
                    .terms
                    .iter()
                    .map(|(f, d)| {
                        let mut g = f.clone();
                        for (i, &p) in pos.iter().enumerate() {
                            g[p] -= e[i];
                        }
                        (g, d * &c)
                    })
                    .collect();
                return Some(
                    LaurentPoly {
                        vars: self.vars.clone(),
                        terms,
                    }
                    .trimmed(),
                );
            }
            let inv = LaurentPoly {
                vars: other.vars.clone(),
                terms: std::iter::once((e.iter().map(|x| -x).collect(), c)).collect(),
            };
            return Some(self * &inv);
        }
        let vars = merge_vars(&self.vars, &other.vars);
        let a = LaurentPoly {
            vars: vars.clone(),
            terms: self.embed(&vars),
        };
        let b = LaurentPoly {
            vars: vars.clone(),
            terms: other.embed(&vars),
        };
        let (ma, a0) = a.split_monomial_keep();
        let (mb, b0) = b.split_monomial_keep();
        let q0 = poly_div_exact(&a0, &b0)?;
        let shift: Exps = ma.iter().zip(&mb).map(|(x, y)| x - y).collect();
        let terms = q0
            .terms
            .into_iter()
            .map(|(e, c)| {
                let f: Exps = e.iter().zip(&shift).map(|(x, s)| x + s).collect();
                (f, c)
            })
            .collect();
        Some(LaurentPoly { vars, terms }.trimmed())
    }

    /// Like `split_monomial` but keeps the variable list intact.
    fn split_monomial_keep(&self) -> (Vec<i32>, LaurentPoly) {
        let n = self.vars.len();
        let mins: Vec<i32> = (0..n)
            .map(|i| self.terms.keys().map(|e| e[i]).min().unwrap_or(0))
            .collect();
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let f: Exps = e.iter().zip(&mins).map(|(x, m)| x - m).collect();
                (f, c.clone())
            })
            .collect();
        (
            mins,
            LaurentPoly {
                vars: self.vars.clone(),
                terms,
            },
        )
    }

    /// Substitutes `name ↦ coef · ∏ var^exp`.
    pub fn subs_monomial(&self, name: &str, coef: &Rational, powers: &[(&str, i32)]) -> Self {
        let Some(i) = self.var_index(name) else {
            return self.clone();
        };
        if coef.is_zero() && self.terms.keys().any(|e| e[i] < 0) {
            panic!("substituting zero into a negative power");
        }
        let mut vars: Vec<String> = self.vars.clone();
        for (v, _) in powers {
            if !vars.iter().any(|w| w == v) {
                vars.push(v.to_string());
            }
        }
        vars.sort();
        let src = self.embed(&vars);
        let i = vars.iter().position(|v| v == name).unwrap();
        let mut shift = vec![0i32; vars.len()];
        for (v, x) in powers {
            let j = vars.iter().position(|w| w == v).unwrap();
            shift[j] += x;
        }
        let mut cache: BTreeMap<i32, Rational> = BTreeMap::new();
        let mut terms = BTreeMap::new();
        for (e, c) in src {
            let d = e[i];
            let cp = cache
                .entry(d)
                .or_insert_with(|| rational_pow(coef, d))
                .clone();
            let mut f = e.clone();
            f[i] = 0;
            for (j, s) in shift.iter().enumerate() {
                f[j] += d * s;
            }
            add_into(&mut terms, f, c * cp);
        }
        LaurentPoly { vars, terms }.trimmed()
    }

    /// Substitutes `name ↦ value`. Negative powers of `name` need a monomial value.
    pub fn subs_poly(&self, name: &str, value: &LaurentPoly) -> Result<Self> {
        let Some(_) = self.var_index(name) else {
            return Ok(self.clone());
        };
        if value.is_monomial() || value.is_zero() {
            if value.is_zero() {
                if self.min_degree_in(name).unwrap() < 0 {
                    return Err(ExactError::Pole);
                }
                return Ok(self.coeffs_in(name).remove(&0).unwrap_or_default());
            }
            let (e, c) = value.leading().unwrap();
            let powers: Vec<(&str, i32)> = value
                .vars
                .iter()
                .map(|s| s.as_str())
                .zip(e.iter().copied())
                .collect();
            return Ok(self.subs_monomial(name, c, &powers));
        }
        let coeffs = self.coeffs_in(name);
        if coeffs.keys().next().is_some_and(|&d| d < 0) {
            return Err(ExactError::NotPolynomial(format!(
                "{name} has negative powers"
            )));
        }
        let mut acc = LaurentPoly::zero();
        let top = *coeffs.keys().next_back().unwrap();
        for d in (0..=top).rev() {
            acc = &acc * value;
            if let Some(c) = coeffs.get(&d) {
                acc = acc + c;
            }
        }
        Ok(acc)
    }

    /// Evaluates every variable at a rational point.
    pub fn eval(&self, point: &[(&str, Rational)]) -> Result<Rational> {
        let mut vals = Vec::with_capacity(self.vars.len());
        for v in &self.vars {
            let Some((_, x)) = point.iter().find(|(w, _)| w == v) else {
                return Err(ExactError::MissingVariable(v.clone()));
            };
            vals.push(x.clone());
        }
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &d) in vals.iter().zip(e.iter()) {
                if d < 0 && x.is_zero() {
                    return Err(ExactError::Pole);
                }
                t *= rational_pow(x, d);
            }
            acc += t;
        }
        Ok(acc)
    }

    pub fn rename(&self, from: &str, to: &str) -> Self {
        if !self.has_var(from) {
            return self.clone();
        }
        self.subs_monomial(from, &Rational::one(), &[(to, 1)])
    }

    /// Rewrites `u`-powers as powers of `q = u²`; fails on an odd `u`-exponent.
    pub fn coerce_half(&self, u: &str, q: &str) -> Result<Self> {
        let Some(i) = self.var_index(u) else {
            return Ok(self.clone());
        };
        if self.terms.keys().any(|e| e[i] % 2 != 0) {
            return Err(ExactError::NonIntegral(u.to_string()));
        }
        let halved = LaurentPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut f = e.clone();
                    f[i] /= 2;
                    (f, c.clone())
                })
                .collect(),
        };
        Ok(halved.rename(u, q))
    }

    /// Sum of the coefficients, i.e. the value at all variables equal to one.
    pub fn coeff_sum(&self) -> Rational {
        self.terms.values().fold(Rational::zero(), |a, c| a + c)
    }
}

fn rational_pow(x: &Rational, d: i32) -> Rational {
    let mut r = Rational::one();
    let b = if d < 0 { x.recip() } else { x.clone() };
    for _ in 0..d.unsigned_abs() {
        r *= &b;
    }
    r
}

/// Division of polynomials over a shared variable list, lex leading terms.
fn poly_div_exact(a: &LaurentPoly, b: &LaurentPoly) -> Option<LaurentPoly> {
    let (be, bc) = b.terms.iter().next_back()?;
    let n = a.vars.len();
    let mut rem = a.terms.clone();
    let mut quot = BTreeMap::new();
    let bc_inv = bc.recip();
    while let Some((re, rc)) = rem.iter().next_back() {
        let mut qe = Exps::with_capacity(n);
        for i in 0..n {
            let d = re[i] - be[i];
            if d < 0 {
                return None;
            }
            qe.push(d);
        }
        let qc = rc * &bc_inv;
        for (e, c) in &b.terms {
            let f: Exps = e.iter().zip(&qe).map(|(x, y)| x + y).collect();
            add_into(&mut rem, f, -(c * &qc));
        }
        quot.insert(qe, qc);
    }
    Some(LaurentPoly {
        vars: a.vars.clone(),
        terms: quot,
    })
}

fn combine(a: &LaurentPoly, b: &LaurentPoly, negate_b: bool) -> LaurentPoly {
    if b.is_zero() {
        return a.clone();
    }
    if a.is_zero() {
        return if negate_b { -b } else { b.clone() };
    }
    let (vars, mut terms) = if a.vars == b.vars {
        (a.vars.clone(), a.terms.clone())
    } else {
        let vars = merge_vars(&a.vars, &b.vars);
        let t = a.embed(&vars);
        (vars, t)
    };
    let bt = if b.vars == vars {
        None
    } else {
        Some(b.embed(&vars))
    };
    let iter: Box<dyn Iterator<Item = (&Exps, &Rational)>> = match &bt {
        Some(m) => Box::new(m.iter()),
        None => Box::new(b.terms.iter()),
    };
    for (e, c) in iter {
        let c = if negate_b { -c.clone() } else { c.clone() };
        add_into(&mut terms, e.clone(), c);
    }
    LaurentPoly { vars, terms }.trimmed()
}

fn multiply(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    if a.is_zero() || b.is_zero() {
        return LaurentPoly::zero();
    }
    if a.is_constant() {
        return b.scale(&a.leading_coeff());
    }
    if b.is_constant() {
        return a.scale(&b.leading_coeff());
    }
    let vars = if a.vars == b.vars {
        a.vars.clone()
    } else {
        merge_vars(&a.vars, &b.vars)
    };
    let at = if a.vars == vars {
        None
    } else {
        Some(a.embed(&vars))
    };
    let bt = if b.vars == vars {
        None
    } else {
        Some(b.embed(&vars))
    };
    let at = at.as_ref().unwrap_or(&a.terms);
    let bt = bt.as_ref().unwrap_or(&b.terms);
    let mut acc: std::collections::HashMap<Exps, Rational> =
        std::collections::HashMap::with_capacity(at.len() * bt.len() / 2 + 1);
    for (e, c) in at {
        for (f, d) in bt {
            let g: Exps = e.iter().zip(f.iter()).map(|(x, y)| x + y).collect();
            let p = c * d;
            match acc.entry(g) {
                std::collections::hash_map::Entry::Vacant(v) => {
                    v.insert(p);
                }
                std::collections::hash_map::Entry::Occupied(mut o) => {
                    *o.get_mut() += p;
                }
            }
        }
    }
    let terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
    LaurentPoly { vars, terms }.trimmed()
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl $tr<&LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                $body(self, rhs)
            }
        }
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                $body(&self, &rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                $body(&self, rhs)
            }
        }
        impl $tr<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                $body(self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| combine(a, b, false));
forward_binop!(Sub, sub, |a, b| combine(a, b, true));
forward_binop!(Mul, mul, multiply);

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl From<i64> for LaurentPoly {
    fn from(n: i64) -> Self {
        LaurentPoly::from_int(n)
    }
}

impl From<Rational> for LaurentPoly {
    fn from(c: Rational) -> Self {
        LaurentPoly::constant(c)
    }
}

impl fmt::Display for LaurentPoly {
    /// Terms from the leading one down, e.g. `q^2*Q - 3*q^-1 + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let mono: Vec<String> = self
                .vars
                .iter()
                .zip(e.iter())
                .filter(|(_, &x)| x != 0)
                .map(|(v, &x)| {
                    if x == 1 {
                        v.clone()
                    } else {
                        format!("{v}^{x}")
                    }
                })
                .collect();
            if mono.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{a}*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    fn q() -> LaurentPoly {
        LaurentPoly::var("q")
    }

    #[test]
    fn canonical_after_cancellation() {
        let a = q() + LaurentPoly::var("Q");
        let b = a.clone() - LaurentPoly::var("Q");
        assert_eq!(b, q());
        assert_eq!(b.vars(), &["q".to_string()]);
        assert!((&a - &a).is_zero());
    }

    #[test]
    fn vars_sorted_bytewise() {
        let p = LaurentPoly::var("q") * LaurentPoly::var("Q") * LaurentPoly::var("E");
        assert_eq!(p.vars(), &["E", "Q", "q"]);
    }

    #[test]
    fn exact_division() {
        let one = LaurentPoly::one();
        let a = (&one - q()) * (&one + q().pow(2)) * q().pow_i(-3);
        let b = &one - q();
        assert_eq!(
            a.div_exact(&b).unwrap(),
            (&one + q().pow(2)) * q().pow_i(-3)
        );
        assert!(a.div_exact(&(&one + q())).is_none());
    }

    #[test]
    fn multivariate_division() {
        let x = LaurentPoly::var("x");
        let y = LaurentPoly::var("y");
        let f = &x * &y - LaurentPoly::one();
        let g = &x + &y.pow(3);
        let h = &f * &g;
        assert_eq!(h.div_exact(&f).unwrap(), g);
        assert_eq!(h.div_exact(&g).unwrap(), f);
    }

    #[test]
    fn substitution_of_monomials() {
        let qq = LaurentPoly::var("Q");
        let p = &qq * &qq - q();
        let r = p.subs_monomial("Q", &int(1), &[("q", 3)]);
        assert_eq!(r, q().pow(6) - q());
    }

    #[test]
    fn half_power_coercion() {
        let u = LaurentPoly::var("u");
        assert_eq!(u.pow(4).coerce_half("u", "q").unwrap(), q().pow(2));
        assert!(u.pow(3).coerce_half("u", "q").is_err());
    }

    #[test]
    fn display_orders_terms() {
        let p = q().pow(2) - LaurentPoly::from_int(3) * q().pow_i(-1) + LaurentPoly::one();
        assert_eq!(p.to_string(), "q^2 + 1 - 3*q^-1");
    }
}
