//! JSON exchange format:
//! `{"vars":["E","Q","q"],"terms":[{"exp":[1,0,2],"coef":"-3/1"}]}`.
//!
//! Terms are written in ascending exponent order and coefficients always as
//! `num/den`, so output is deterministic.

use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{ExactError, LaurentPoly, Rational, RationalFunction, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exp: Vec<i32>,
    pub coef: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub vars: Vec<String>,
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RatFunJson {
    pub num: PolyJson,
    pub den: PolyJson,
}

fn coef_string(c: &Rational) -> String {
    format!("{}/{}", c.numer(), c.denom())
}

fn parse_coef(s: &str) -> Result<Rational> {
    let s = s.trim();
    match Rational::from_str(s) {
        Ok(c) => Ok(c),
        Err(_) => Err(ExactError::Parse(format!("bad coefficient {s:?}"))),
    }
}

impl PolyJson {
    /// Serializes over `vars`, which must contain every variable of `p`.
    pub fn from_poly_over(p: &LaurentPoly, vars: &[&str]) -> Result<Self> {
        let mut sorted: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
        sorted.sort();
        sorted.dedup();
        if let Some(v) = p.vars().iter().find(|v| !sorted.contains(v)) {
            return Err(ExactError::Parse(format!(
                "variable {v} missing from context"
            )));
        }
        let terms = p
            .terms_over(&sorted)
            .into_iter()
            .map(|(e, c)| TermJson {
                exp: e.to_vec(),
                coef: coef_string(&c),
            })
            .collect();
        Ok(PolyJson {
            vars: sorted,
            terms,
        })
    }

    pub fn to_poly(&self) -> Result<LaurentPoly> {
        let terms = self
            .terms
            .iter()
            .map(|t| Ok((t.exp.clone(), parse_coef(&t.coef)?)))
            .collect::<Result<Vec<_>>>()?;
        LaurentPoly::from_terms(&self.vars, terms)
    }
}

impl From<&LaurentPoly> for PolyJson {
    fn from(p: &LaurentPoly) -> Self {
        let vars: Vec<&str> = p.vars().iter().map(|s| s.as_str()).collect();
        PolyJson::from_poly_over(p, &vars).unwrap()
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolyJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = PolyJson::deserialize(d)?;
        j.to_poly().map_err(serde::de::Error::custom)
    }
}

impl Serialize for RationalFunction {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RatFunJson {
            num: self.numer().into(),
            den: self.denom().into(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for RationalFunction {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = RatFunJson::deserialize(d)?;
        let num = j.num.to_poly().map_err(serde::de::Error::custom)?;
        let den = j.den.to_poly().map_err(serde::de::Error::custom)?;
        RationalFunction::new(num, den).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn round_trip() {
        let p = LaurentPoly::var("E") * LaurentPoly::var("q").pow_i(-2)
            - LaurentPoly::constant(rat(3, 7)) * LaurentPoly::var("Q");
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(
            s,
            r#"{"vars":["E","Q","q"],"terms":[{"exp":[0,1,0],"coef":"-3/7"},{"exp":[1,0,-2],"coef":"1/1"}]}"#
        );
        let back: LaurentPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn unsorted_vars_accepted() {
        let s = r#"{"vars":["q","E"],"terms":[{"exp":[2,1],"coef":"5"}]}"#;
        let p: LaurentPoly = serde_json::from_str(s).unwrap();
        assert_eq!(p.coeff(&[("E", 1), ("q", 2)]), rat(5, 1));
    }

    #[test]
    fn explicit_context() {
        let j = PolyJson::from_poly_over(&LaurentPoly::one(), &["q", "Q", "E"]).unwrap();
        assert_eq!(j.vars, vec!["E", "Q", "q"]);
        assert_eq!(j.terms[0].exp, vec![0, 0, 0]);
    }
}
