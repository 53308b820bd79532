//! Simplicial complexes: Stanley-Reisner ideals, Alexander duality,
//! shellability, Reisner's criterion and Eagon-Reiner.
//!
//! cargo run -p mideal --example simplicial_complexes

use mideal::simplicial::{analyze, eagon_reiner_check, SimplicialComplex};
use mideal::{fixtures, Field, Result};

fn main() -> Result<()> {
    let strip = SimplicialComplex::from_facets(5, &[vec![1, 2, 3], vec![2, 3, 4], vec![3, 4, 5]])?;
    let r = analyze(&strip, Field::Rational, 100_000)?;
    println!("triangle strip {strip}");
    println!("  f-vector {:?}", r.f_vector);
    println!("  I_Δ  = {:?}", r.sr_ideal);
    println!("  I_Δ∨ = {:?}", r.dual_sr_ideal);
    println!("  Alexander dual {:?}", r.alexander_dual);
    println!("  shelling {:?}", r.shelling);
    println!("  vertex decomposable {:?}, shifted {:?}", r.vertex_decomposable, r.shifted);

    let edges = fixtures::two_edges();
    let er = eagon_reiner_check(&edges, Field::Rational)?;
    println!("\ntwo disjoint edges: CM {}, dual ideal linear {}", er.cohen_macaulay, er.dual_linear);
    println!("  link of the empty face is disconnected: {}", !edges.is_connected());

    // six-vertex projective plane: CM except in characteristic 2
    let rp2 = fixtures::projective_plane();
    println!("\nprojective plane, f-vector {:?}", rp2.f_vector()?);
    for field in [Field::Rational, Field::Prime(2), Field::Prime(3)] {
        let cm = rp2.cohen_macaulay(field)?;
        let h = rp2.homology(field)?;
        let er = eagon_reiner_check(&rp2, field)?;
        println!(
            "  over {field}: reduced homology {:?}, CM {}, dual linear {}, Terai {:?}",
            h.reduced_betti, cm.cohen_macaulay, er.dual_linear, er.terai
        );
        if let Some(f) = cm.failure {
            println!("    Reisner fails at the link of {:?} in degree {}", f.face, f.degree);
        }
    }
    Ok(())
}
