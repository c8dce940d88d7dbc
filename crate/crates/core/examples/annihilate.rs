//! Applies C_p(E,Q,q) to the sequence Ĵ_p(n) and prints the residues, which
//! are all zero.
//!
//! cargo run --example annihilate -- [pmax] [nmax]

use qknot::cpoly::nc_cpoly;
use qknot::cyclotomic::cyclotomic_sequence;

fn main() -> qknot::Result<()> {
    let args: Vec<i64> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let pmax = args.first().copied().unwrap_or(3);
    let nmax = args.get(1).copied().unwrap_or(8);

    for p in (-pmax..=pmax).filter(|&p| p != 0) {
        let op = nc_cpoly(p).op;
        let seq = cyclotomic_sequence(p);
        let residues = (0..=nmax)
            .map(|n| op.apply(&seq, n))
            .collect::<qknot::Result<Vec<_>>>()?;
        let zero = residues.iter().all(|r| r.is_zero());
        println!(
            "p = {p:>2}  order {}  C_p Ĵ_p(n) = 0 for n ≤ {nmax}: {zero}",
            op.degree().unwrap_or(0)
        );
    }

    // the operator of the trefoil, written out
    let c1 = nc_cpoly(1).op;
    let seq = cyclotomic_sequence(1);
    for n in 0..4 {
        println!(
            "Ĵ_1({}) = {}   E·Ĵ_1 + q²Q·Ĵ_1 = {}",
            n,
            seq.get(n)?,
            c1.apply(&seq, n)?
        );
    }
    Ok(())
}
