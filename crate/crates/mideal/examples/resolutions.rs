//! Explicit free resolutions: Koszul, Eliahou-Kervaire and mapping cones.
//!
//! cargo run -p mideal --example resolutions

use mideal::quotients::{find_order, FindOutcome};
use mideal::resolution::{ek_resolution, koszul, mapping_cone_resolution, stable_hilbert_series, verify_complex};
use mideal::{fixtures, MonomialIdeal, Result};

fn main() -> Result<()> {
    let (n, seq) = fixtures::koszul_example();
    let k = koszul(n, &seq)?;
    println!("Koszul complex of x1^2, x1x2x3, x3^3\n{}", k.pretty());
    // no unit entries, but not exact: x1^2 and x1x2x3 share x1
    let r = verify_complex(&k);
    println!("d o d = 0: {}, minimal: {}\n", r.dd_zero, r.minimal);

    let stable = fixtures::stable_example();
    let ek = ek_resolution(&stable)?;
    println!("Eliahou-Kervaire resolution of {stable}\n{}", ek.pretty());
    println!("Betti table\n{}", verify_complex(&ek).betti);
    let h = stable_hilbert_series(&stable)?;
    println!("Hilbert series of I: ({h})\n");

    let i = MonomialIdeal::parse(4, &["x1*x2", "x2*x3*x4", "x2*x3^2"])?;
    let FindOutcome::Found(c) = find_order(&i, 10_000) else { unreachable!("the ideal has linear quotients") };
    let cone = mapping_cone_resolution(&c)?;
    println!("mapping cone resolution of {i}\n{}", cone.pretty());
    let r = verify_complex(&cone);
    println!("d o d = 0: {}, minimal: {}, degrees: {}", r.dd_zero, r.minimal, r.degrees_consistent);
    println!("\nas JSON:\n{}", serde_json::to_string(&cone).expect("serializable"));
    Ok(())
}
