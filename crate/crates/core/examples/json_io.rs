//! The JSON exchange format, and a custom summand read from JSON.
//!
//! cargo run --example json_io

use qknot::cpoly::nc_cpoly;
use qknot::exact::{PolyJson, RationalFunction};
use qknot::names::{E, Q, SMALL_Q};
use qknot::telescope::{celine_solve, HGTerm};
use qknot::LaurentPoly;

fn main() -> qknot::Result<()> {
    let c2 = nc_cpoly(2).poly();
    let j = PolyJson::from_poly_over(&c2, &[E, Q, SMALL_Q])?;
    let text = serde_json::to_string(&j)?;
    println!("{text}");
    let back: PolyJson = serde_json::from_str(&text)?;
    println!("round trip exact: {}", back.to_poly()? == c2);

    // F(n,k) = qbinom(n,k), given by its shift ratios in Q = q^n, K = q^k
    let spec = r#"{
      "ratio_n": {"num": {"vars":["Q","q"],"terms":[{"exp":[0,0],"coef":"-1/1"},{"exp":[1,1],"coef":"1/1"}]},
                  "den": {"vars":["K","Q","q"],"terms":[{"exp":[0,0,0],"coef":"-1/1"},{"exp":[-1,1,1],"coef":"1/1"}]}},
      "ratio_k": {"num": {"vars":["K","Q"],"terms":[{"exp":[1,0],"coef":"-1/1"},{"exp":[0,1],"coef":"1/1"}]},
                  "den": {"vars":["K","q"],"terms":[{"exp":[0,0],"coef":"1/1"},{"exp":[1,1],"coef":"-1/1"}]}}
    }"#;
    let v: serde_json::Value = serde_json::from_str(spec)?;
    let rn: RationalFunction = serde_json::from_value(v["ratio_n"].clone())?;
    let rk: RationalFunction = serde_json::from_value(v["ratio_k"].clone())?;
    let t = HGTerm::from_ratios("qbinom", rn, rk);
    println!("{t:?}");
    if let Some(sol) = celine_solve(&t, 1, 1)? {
        println!("Σ_k qbinom(n,k): {:?}", sol.operator().monic()?);
    }
    println!("{}", serde_json::to_string(&LaurentPoly::var(E))?);
    Ok(())
}
