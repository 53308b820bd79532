//! Subword complexes in S_n through the dual Stanley-Reisner ideal.
//!
//! cargo run -p mideal --example subword_complexes

use mideal::coxeter::{analyze, reduced_words, CoxeterWord, Permutation};
use mideal::resolution::format_poly;
use mideal::Result;

fn main() -> Result<()> {
    let pi = Permutation::from_cycles(4, "(1 2 4)")?;
    println!("pi = {} = {pi}, length {}", pi.to_cycles(), pi.length());
    let words = reduced_words(&pi);
    println!("{} reduced words, e.g. {:?}", words.len(), words[0]);

    let q = CoxeterWord::parse(4, "1,2,1,3,1,2,3,1")?;
    let r = analyze(&q, &pi)?;
    println!("\nQ = {q}");
    println!("facets {:?}", r.facets);
    println!("dual generators {:?}", r.dual_generators);
    if let Some(c) = &r.certificate {
        println!("quotient sets {:?}, d = {:?}", c.sets(), r.d);
    }
    if let Some(b) = &r.bounds {
        println!("projdim of the dual ideal {} <= {}", b.projdim_dual, b.projdim_dual_bound);
    }
    println!("topology {:?}", r.topology);

    let pi = Permutation::from_cycles(4, "(1 4)(2 3)")?;
    let q = CoxeterWord::parse(4, "2,3,2,3,1,3,2,3,2")?;
    let r = analyze(&q, &pi)?;
    println!("\nQ = {q}, pi = {}", pi.to_cycles());
    if let Some(s) = &r.special_class {
        println!("special class: l = x{}, height {}, sphere {}", s.l, s.height, s.sphere);
        println!("Betti numbers {:?}", s.betti.totals());
        println!("K-polynomial {}", format_poly(&s.k_polynomial));
        println!("I_Δ = ({})", s.complete_intersection.join(", "));
    }
    println!("\n{}", serde_json::to_string_pretty(&r).expect("serializable"));
    Ok(())
}
