//! From C-polynomials to A-polynomials through φ, and back.
//!
//! cargo run --release --example apoly -- [pmax]

use qknot::acurve::{
    a_candidate, degree_check, hs_recursion_check, invert_phi, round_trip, specialization_chain,
};
use qknot::cpoly::cpoly_closed;

fn main() -> qknot::Result<()> {
    let pmax = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(3i64);

    for p in (-pmax..=pmax).filter(|&p| p != 0) {
        let a = a_candidate(p)?;
        println!("p = {p:>2}  C = {}", cpoly_closed(p).poly);
        println!("        Â = {}", a.poly);
        println!(
            "        degree 3|p|−2: {}  φ at L = 1 gives Δ_p: {}",
            degree_check(p),
            specialization_chain(p)?
        );
    }
    println!(
        "Hoste–Shanahan recursion 1..{pmax}: {}",
        hs_recursion_check(1, pmax)?
    );
    println!(
        "Hoste–Shanahan recursion −{pmax}..−1: {}",
        hs_recursion_check(-pmax, -1)?
    );

    println!("invert_phi(Â_1) = {}", invert_phi(&a_candidate(1)?.poly)?);
    for p in [-2i64, -1, 1, 2] {
        println!("round trip p = {p}: {}", round_trip(p)?);
    }
    Ok(())
}
