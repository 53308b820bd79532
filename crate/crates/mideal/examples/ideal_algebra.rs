//! Monomials, term orders and the basic algebra of monomial ideals.
//!
//! cargo run -p mideal --example ideal_algebra

use std::cmp::Ordering;

use mideal::{Monomial, MonomialIdeal, Result, TermOrder};

fn main() -> Result<()> {
    let u = Monomial::parse("x1*x2*x3", 4)?;
    let v = Monomial::parse("x1*x3^2", 4)?;
    for ord in [TermOrder::Lex, TermOrder::LexReversed, TermOrder::Prec] {
        let sign = match u.compare(&v, ord)? {
            Ordering::Greater => ">",
            Ordering::Less => "<",
            Ordering::Equal => "=",
        };
        println!("{u} {sign} {v} in {ord:?}");
    }
    println!("gcd {}  lcm {}  {u} : {v} = {}", u.gcd(&v), u.lcm(&v), u.colon(&v));

    // redundant generators are dropped; the rest is kept descending in lex
    let i = MonomialIdeal::parse(4, &["x1*x4", "x2*x4", "x1^2*x4", "x3^2"])?;
    println!("\nI = {i}  ({} generators)", i.len());
    let j = MonomialIdeal::parse(4, &["x1*x2", "x3"])?;
    println!("J = {j}");
    println!("I + J = {}", i.sum(&j)?);
    println!("I ∩ J = {}", i.intersect(&j)?);
    println!("I : x4 = {}", i.colon(&Monomial::var(4, 4)?)?);
    println!("x1^3*x4 in I: {}", i.contains(&Monomial::parse("x1^3*x4", 4)?));

    let (rad, primes) = i.radical_and_primes()?;
    println!("\nradical {rad}");
    for p in &primes.primes {
        let vars: Vec<String> = p.iter().map(|k| format!("x{k}")).collect();
        println!("  minimal prime ({})", vars.join(", "));
    }
    println!("height {}, Krull dimension of S/I {}", i.height()?, i.krull_dim()?);

    // the zero and unit ideals are rejected
    println!("\nempty generator list: {}", MonomialIdeal::parse::<&str>(3, &[]).unwrap_err());
    println!("constant generator:   {}", MonomialIdeal::minimalize(3, vec![Monomial::one(3)]).unwrap_err());
    Ok(())
}
