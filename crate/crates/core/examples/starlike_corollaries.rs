//! Named subclasses of `ST[A,B]`: starlike of order α, `ST[β,−β]`, `ST[β,0]`
//! and `ST(M)`.

use bohr_radius::starlike::{st_alpha_radius, st_beta0_radius, st_beta_radius, st_beta_radius_closed, st_m_radius};
use bohr_radius::ToleranceConfig;

fn main() -> bohr_radius::Result<()> {
    let cfg = ToleranceConfig::default();

    println!("starlike of order α");
    for k in 0..10 {
        let alpha = k as f64 / 10.0;
        println!("  α = {alpha:.1}  r* = {:.15}", st_alpha_radius(alpha, &cfg)?.radius);
    }

    println!("\nST[β, −β]: closed form against the series route");
    for beta in [0.1, 0.5, 1.0] {
        let closed = st_beta_radius_closed(beta)?;
        let series = st_beta_radius(beta, &cfg)?.radius;
        println!(
            "  β = {beta:.1}  closed = {closed:.15}  series = {series:.15}  diff = {:.1e}",
            (closed - series).abs()
        );
    }

    println!("\nST[β, 0]: root of r e^(βr) = e^(−β)");
    for beta in [0.2, 0.5, 0.8, 1.0] {
        let r = st_beta0_radius(beta, &cfg)?.radius;
        println!("  β = {beta:.1}  r* = {r:.15}  check = {:.1e}", r * (beta * r).exp() - (-beta).exp());
    }

    println!("\nST(M)");
    for m in [0.75, 1.0, 2.0, 10.0] {
        println!("  M = {m:>5}  r* = {:.15}", st_m_radius(m, &cfg)?.radius);
    }
    Ok(())
}
