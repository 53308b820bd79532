//! Linear quotients: checking and finding orders, the decomposition
//! function, and Betti numbers read off the quotient sets.
//!
//! cargo run -p mideal --example linear_quotients

use mideal::oracle::betti_numbers;
use mideal::quotients::{
    betti_from_certificate, canonical_decomposition, check_order, find_order, is_stable, CheckOutcome, FindOutcome,
    Regularity,
};
use mideal::{Field, Monomial, MonomialIdeal, Result};

fn main() -> Result<()> {
    let i = MonomialIdeal::parse(3, &["x1*x2*x3", "x1*x3^2", "x2^3", "x2^2*x3", "x2*x3^2"])?;
    println!("I = {i}");

    // descending lex is not an order with linear quotients here
    match check_order(&i, i.gens())? {
        CheckOutcome::Failed(f) => println!("lex order fails at u_{}: colon ({})", f.i, f.colon.join(", ")),
        CheckOutcome::Certified(_) => println!("lex order works"),
    }

    let FindOutcome::Found(c) = find_order(&i, 100_000) else {
        println!("no order found");
        return Ok(());
    };
    println!("\nfound an order:");
    for (u, set) in c.order().iter().zip(c.sets()) {
        let vars: Vec<String> = set.iter().map(|k| format!("x{k}")).collect();
        println!("  {u:<10} set = ({})", vars.join(", "));
    }
    let g = c.decomposition();
    let w = Monomial::parse("x1*x2^2*x3^3", 3)?;
    println!("g({w}) = {}", g.apply(&w)?);
    match g.is_regular() {
        Regularity::Regular => println!("the decomposition function is regular"),
        Regularity::Counterexample { u, s } => println!("not regular: u = {u}, s = {s}"),
    }

    let from_sets = betti_from_certificate(&c)?;
    let oracle = betti_numbers(&i, Field::Rational)?;
    println!("\nBetti numbers from the sets:\n{from_sets}");
    println!("oracle agrees: {}", from_sets == oracle.betti);

    let stable = MonomialIdeal::parse(4, &["x1^2", "x1*x2^2", "x1*x2*x3"])?;
    let w = Monomial::parse("x1^3*x3*x4", 4)?;
    let (u, rest) = canonical_decomposition(&stable, &w)?;
    println!("\n{stable} is stable: {}; {w} = ({u})({rest})", is_stable(&stable));

    let none = MonomialIdeal::parse(2, &["x1^3", "x1*x2^2"])?;
    println!("{none}: {:?}", find_order(&none, 1_000));
    Ok(())
}
