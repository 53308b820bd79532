//! Constructible ideals: certificates, search, polarization.
//!
//! cargo run -p mideal --example constructible

use mideal::constructible::{
    constructible_betti, polarize, search_constructible, search_with_splits, verify_certificate, SearchOutcome,
};
use mideal::oracle::betti_numbers;
use mideal::quotients::{find_order, FindOutcome};
use mideal::{fixtures, Field, MonomialIdeal, Result};

fn main() -> Result<()> {
    let i = MonomialIdeal::parse(3, &["x1*x2", "x1*x3", "x2*x3"])?;
    if let SearchOutcome::Found(c) = search_constructible(&i, 10_000)? {
        println!("{i} is constructible:\n{c}");
        println!("certificate file: {}", c.to_json()?);
    }

    // a constructible ideal without linear quotients
    let ex = fixtures::nonsquarefree_constructible();
    println!("\nI has {} generators of degree {:?}", ex.ideal.len(), ex.ideal.generation_degree());
    println!("linear quotients: {}", matches!(find_order(&ex.ideal, 200_000), FindOutcome::Found(_)));
    let out = search_with_splits(&ex.ideal, &[(ex.first.clone(), ex.second.clone())], 100_000)?;
    let SearchOutcome::Found(cert) = out else {
        println!("no certificate: {}", out.verdict());
        return Ok(());
    };
    println!("split I = I1 + I2 with I1 ∩ I2 = {}", ex.intersection);
    println!("certificate valid: {}", verify_certificate(&ex.ideal, &cert)?.valid);
    let b = constructible_betti(&cert)?;
    println!("Betti numbers from the certificate\n{b}");
    println!("oracle agrees: {}", b == betti_numbers(&ex.ideal, Field::Prime(32003))?.betti);

    let p = polarize(&ex.ideal);
    println!("\npolarization lives in {} variables:", p.target_n());
    for v in p.map.iter().filter(|v| v.index > p.source_n) {
        println!("  copy {} of x{} -> x{}", v.copy, v.var, v.index);
    }
    let ball = fixtures::ziegler_ball();
    println!("equals the dual ideal of Ziegler's ball: {}", Some(p.ideal) == ball.dual_sr_ideal()?);

    let dunce = fixtures::dunce_hat_dual_ideal();
    let out = search_constructible(&dunce, 5_000)?;
    println!("\ndunce hat dual ideal ({} generators): {}", dunce.len(), out.verdict());
    Ok(())
}
