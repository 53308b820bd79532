//! Lexsegment ideals: generation, classification, quotient orders and the
//! closed formulas for dimension, depth and Cohen-Macaulayness.
//!
//! cargo run -p mideal --example lexsegments

use mideal::lexsegment::{all_segments, classify, quotient_order, report, Lexsegment};
use mideal::oracle::depth_and_projdim;
use mideal::{Field, Result};

fn main() -> Result<()> {
    let seg = Lexsegment::parse(4, 3, "x1*x2*x3", "x2*x3^2")?;
    let gens: Vec<String> = seg.gens().iter().map(|g| g.to_string()).collect();
    println!("L(x1x2x3, x2x3^2) in 4 variables: {}", gens.join(", "));

    for (n, u, v) in [(3, "x1*x2*x3", "x2*x3^2"), (4, "x1*x3^2", "x2*x4^2"), (4, "x1*x3*x4", "x2*x4^2")] {
        let seg = Lexsegment::parse(n, 3, u, v)?;
        let c = classify(&seg)?;
        println!(
            "\nL({u}, {v}), n = {n}: completely {}, linear resolution {} ({:?})",
            c.completely, c.linear_resolution, c.linear_tag
        );
        let cert = quotient_order(&seg)?;
        let order: Vec<String> = cert.order().iter().map(|g| g.to_string()).collect();
        println!("  order {}", order.join(" < "));
        let r = report(&seg)?;
        println!("  dim {}, depth {}, CM {}", r.dim.dim, r.depth.depth, r.cohen_macaulay.cohen_macaulay);
    }

    // the formulas against the oracle for every segment in 4 variables, degree 3
    let mut agree = 0;
    let segs = all_segments(4, 3)?;
    for seg in &segs {
        let r = report(seg)?;
        let (depth, _) = depth_and_projdim(&seg.ideal(), Field::Rational)?;
        if r.depth.depth == depth && r.dim.dim == seg.ideal().krull_dim()? {
            agree += 1;
        }
    }
    println!("\nformulas match the oracle on {agree} of {} segments", segs.len());
    Ok(())
}
