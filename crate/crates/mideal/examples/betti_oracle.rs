//! The brute-force Betti oracle: strategies, fields, depth and Hilbert counts.
//!
//! cargo run -p mideal --example betti_oracle

use mideal::oracle::{betti_numbers, betti_numbers_with, depth_and_projdim, hilbert_count, multigraded_betti, Strategy};
use mideal::{fixtures, Field, MonomialIdeal, Result};

fn main() -> Result<()> {
    let i = MonomialIdeal::parse(4, &["x1*x3", "x1*x4", "x2*x3", "x2*x4"])?;
    let b = betti_numbers(&i, Field::Rational)?;
    println!("I = {i}\n{}", b.betti);
    println!("projdim {}, linear {}", b.projdim, b.linear);
    let (depth, pd) = depth_and_projdim(&i, Field::Rational)?;
    println!("depth S/I = {depth}, projdim S/I = {pd}");

    for ((i, m), beta) in multigraded_betti(&i, Field::Rational, Strategy::Auto)? {
        println!("  beta_{i},{m} = {beta}");
    }

    let taylor = betti_numbers_with(&i, Field::Rational, Strategy::Taylor)?;
    let koszul = betti_numbers_with(&i, Field::Rational, Strategy::UpperKoszul)?;
    println!("Taylor and upper Koszul agree: {}", taylor.betti == koszul.betti);

    // the dual ideal of the projective plane sees the characteristic
    let j = fixtures::projective_plane().dual_sr_ideal()?.expect("proper");
    for field in [Field::Rational, Field::Prime(2)] {
        let b = betti_numbers(&j, field)?;
        println!("\nRP2 dual ideal over {field}: linear {}\n{}", b.linear, b.betti);
    }

    let s = fixtures::stable_example();
    let counts: Vec<u128> = (0..6).map(|k| hilbert_count(&s, k)).collect::<Result<_>>()?;
    println!("\nmonomials of degree 0..5 in {s}: {counts:?}");
    Ok(())
}
