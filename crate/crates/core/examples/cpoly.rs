//! C-polynomials: the q-Weyl operator C_p(E,Q,q), its q = 1 value and the
//! coefficient table.
//!
//! cargo run --example cpoly -- [p]

use qknot::cpoly::{
    check_appendix, cpoly_closed, cpoly_recursive, nc_cpoly, q1_consistency, CoeffMatrix,
};
use qknot::qweyl::op_reverse;

fn main() -> qknot::Result<()> {
    let p = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(2i64);

    let nc = nc_cpoly(p);
    println!("C_{p}(E,Q,q) = {}", nc.poly());
    let table = CoeffMatrix::from_poly(p, &nc.poly());
    print!("{table}");
    println!("{}", table.to_latex());
    if (1..=3).contains(&p.abs()) {
        println!("matches the printed table: {}", check_appendix(p).is_ok());
    }

    let c = cpoly_closed(p);
    println!("C_{p}(E,Q) = {}", c.poly);
    println!("C_{p}^op  = {}", op_reverse(&c.poly));
    println!("closed form = recursion: {}", c == cpoly_recursive(p));
    println!("q → 1 of the operator gives C_{p}: {}", q1_consistency(p)?);
    Ok(())
}
