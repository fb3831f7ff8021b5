//! Radii for `f + βzf' + γz²f'' ≺ h` with `h` Janowski starlike. Damping by
//! `D_n = 1 + (β−γ)n + γn²` pushes the radius up as `β` grows.

use bohr_radius::janowski::JanowskiParams;
use bohr_radius::subord::{bohr_radius_subord, sharpness_residual_subord, subord_starlike_alpha_radius, SubordParams};
use bohr_radius::ToleranceConfig;

fn main() -> bohr_radius::Result<()> {
    let cfg = ToleranceConfig::default();
    let koebe = JanowskiParams::new(1.0, -1.0)?;

    println!("{:>5} {:>5} {:>20} {:>10}", "β", "γ", "r*", "sharp");
    for (beta, gamma) in [(0.0, 0.0), (0.5, 0.0), (1.0, 0.0), (1.0, 1.0), (2.0, 1.0), (4.0, 2.0)] {
        let p = SubordParams::new(beta, gamma, koebe)?;
        let r = bohr_radius_subord(p, &cfg)?.radius;
        let sharp = sharpness_residual_subord(&p, r, &cfg)?;
        println!("{beta:>5} {gamma:>5} {r:>20.16} {sharp:>10.1e}");
    }

    // h starlike of order α solved directly, without going through ST[1−2α, −1].
    let direct = subord_starlike_alpha_radius(0.5, 2.0, 1.0, &cfg)?.radius;
    let via = bohr_radius_subord(SubordParams::new(2.0, 1.0, JanowskiParams::starlike_of_order(0.5)?)?, &cfg)?.radius;
    println!("\norder 1/2, β = 2, γ = 1: {direct:.15} (direct) vs {via:.15}");
    Ok(())
}
