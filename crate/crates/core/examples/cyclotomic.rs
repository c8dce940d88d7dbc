//! Cyclotomic function and colored Jones polynomial of a few twist knots.
//!
//! cargo run --example cyclotomic -- [p] [nmax]

use qknot::cyclotomic::{
    alexander_twist, colored_jones_twist, cyclotomic_twist, eval_q1, genfun_check,
};

fn main() -> qknot::Result<()> {
    let args: Vec<i64> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let p = args.first().copied().unwrap_or(1);
    let nmax = args.get(1).copied().unwrap_or(4);

    println!(
        "twist knot K_{p}, Alexander polynomial {}",
        alexander_twist(p)
    );
    for n in 0..=nmax {
        let v = cyclotomic_twist(p, n)?;
        println!("Ĵ({n}) = {}", v.value);
        println!("  at q = 1: {}", eval_q1(p, n)?);
    }
    for n in 1..=nmax {
        println!("J({n}) = {}", colored_jones_twist(p, n)?);
    }
    println!("Δ·Σ I(n) zⁿ ≡ 1 mod z⁹: {}", genfun_check(p, 8)?);
    Ok(())
}
