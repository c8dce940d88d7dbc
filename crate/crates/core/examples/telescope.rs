//! Creative telescoping on the twist-knot summand.
//!
//! The certificate ansatz finds C_p itself at order |p|; the k-free ansatz
//! needs a larger order and finds a left multiple of C_p.
//!
//! cargo run --release --example telescope -- [p]

use qknot::cpoly::nc_cpoly;
use qknot::telescope::{
    celine_solve, explicit_apparatus, minimal_certificate, telescoping_check, twist_window, HGTerm,
};

fn main() -> qknot::Result<()> {
    let p = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(1i64);
    let t = HGTerm::twist(p);
    println!("{t:?}");

    let (lo, hi) = twist_window(p);
    let order = p.unsigned_abs() as usize;
    match minimal_certificate(&t, order, lo, hi)? {
        Some((i, sol)) => {
            let c = sol.forward(&t)?;
            let op = c.operator();
            println!("certificate at order {i}: {}", c.cert);
            println!("operator {:?}", op.monic()?);
            println!(
                "equals C_{p} up to a left unit: {}",
                op.is_left_associate(&nc_cpoly(p).op)
            );
        }
        None => println!("no certificate up to order {order}"),
    }

    if p.abs() == 1 {
        let sol = celine_solve(&t, 3, 2)?.expect("k-free relation at (3, 2)");
        let op = sol.operator();
        let (_, rem) = op.right_divide(&nc_cpoly(p).op)?;
        println!(
            "k-free relation of order 3, right remainder by C_{p} zero: {}",
            rem.is_zero()
        );
        println!("annihilates Σ_k F(n,k): {}", telescoping_check(&t, &op, 8)?);
    }

    if (1..=5).contains(&p.abs()) {
        let rep = explicit_apparatus(p)?;
        for c in &rep.checks {
            println!("[{}] {:<5} {}", c.class, c.passed, c.name);
        }
    }

    let qb = HGTerm::q_binomial_theorem();
    let sol = celine_solve(&qb, 1, 1)?.expect("first order relation");
    println!("q-binomial sum: {:?}", sol.operator().monic()?);
    Ok(())
}
