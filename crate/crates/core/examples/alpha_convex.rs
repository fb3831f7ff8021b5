//! α-convex functions: partition-sum coefficient bounds, the boundary distance
//! `|k(−1, α)|` and the resulting radius.

use bohr_radius::alpha_convex::{
    ac_coeff_bound, bohr_radius_alpha_cv, enumerate_partitions, k_min_with_error, partition_sum,
    sharpness_residual_alpha_cv,
};
use bohr_radius::ToleranceConfig;

fn main() -> bohr_radius::Result<()> {
    let cfg = ToleranceConfig::default();

    let parts = enumerate_partitions(4)?;
    println!("partitions of 4 as (part, multiplicity) lists:");
    for p in &parts {
        println!("  {:?}  q = {}", p.parts, p.q);
    }

    println!("\nconditioning of the partition sum at α = 0.25");
    for m in [4, 6, 8, 10] {
        let s = partition_sum(0.25, m)?;
        println!(
            "  m = {m:>2}  raw = {:.15}  Σ|term| = {:.2e}  bound = {:.15}",
            s.value,
            s.abs_sum,
            ac_coeff_bound(0.25, m)?
        );
    }

    println!("\n{:>5} {:>18} {:>9} {:>18} {:>10}", "α", "|k(−1,α)|", "± err", "r*", "sharp");
    for alpha in [0.05, 0.25, 0.5, 0.75, 1.0, 2.0] {
        let k = k_min_with_error(alpha, &cfg)?;
        let r = bohr_radius_alpha_cv(alpha, &cfg)?.radius;
        let sharp = sharpness_residual_alpha_cv(alpha, r, &cfg)?;
        println!("{alpha:>5} {:>18.15} {:>9.1e} {r:>18.15} {sharp:>10.1e}", k.value, k.error);
    }
    Ok(())
}
