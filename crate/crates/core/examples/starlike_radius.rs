//! Bohr radius of Janowski starlike classes `ST[A,B]` over a few parameter pairs.
//!
//! ```text
//! cargo run --example starlike_radius
//! ```

use bohr_radius::janowski::{coeff_bound, distance_lower, JanowskiParams};
use bohr_radius::starlike::{bohr_radius_st, sharpness_residual_st};
use bohr_radius::ToleranceConfig;

fn main() -> bohr_radius::Result<()> {
    let cfg = ToleranceConfig::default();
    let pairs = [(1.0, -1.0), (0.0, -1.0), (0.5, -0.5), (1.0, 1.0 / 3.0), (0.8, 0.0)];

    println!("{:>6} {:>8} {:>12} {:>20} {:>10} {:>10}", "A", "B", "d", "r*", "residual", "sharp");
    for (a, b) in pairs {
        let p = JanowskiParams::new(a, b)?;
        let res = bohr_radius_st(p, &cfg)?;
        let sharp = sharpness_residual_st(p, res.radius, &cfg)?;
        println!(
            "{a:>6.3} {b:>8.4} {:>12.9} {:>20.16} {:>10.1e} {:>10.1e}",
            distance_lower(p).value,
            res.radius,
            res.residual,
            sharp
        );
    }

    // ST[1, 1/3] has a polynomial extremal function: z(1 + z/3)^2.
    let p = JanowskiParams::new(1.0, 1.0 / 3.0)?;
    let coeffs: Vec<f64> = (1..=5).map(|n| coeff_bound(p, n)).collect();
    println!("\ncoefficient bounds of ST[1, 1/3]: {coeffs:?}");
    Ok(())
}
