//! Typically real functions: the radius `3 − 2√2` and the lower coefficient
//! envelope `m_n = min sin(nθ)/sin θ`.

use bohr_radius::typreal::{envelope, sharpness_residual_typreal, typreal_radius};
use bohr_radius::ToleranceConfig;

fn main() -> bohr_radius::Result<()> {
    let cfg = ToleranceConfig::default();
    let res = typreal_radius(&cfg)?;
    println!("r* = {:.16}  (3 − 2√2 = {:.16})", res.radius, 3.0 - 2.0 * 2f64.sqrt());
    println!("sharpness residual: {:.1e}\n", sharpness_residual_typreal(&cfg)?);

    println!("{:>3} {:>20} {:>12}", "n", "m_n", "argmin θ");
    for n in 2..=10 {
        let e = envelope(n);
        println!("{n:>3} {:>20.15} {:>12.9}", e.lower, e.argmin);
    }
    Ok(())
}
