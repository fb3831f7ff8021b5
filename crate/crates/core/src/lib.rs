//! Sharp Bohr radius constants for classes of normalized analytic functions.
//!
//! For a class of functions `f(z) = z + a_2 z^2 + ...` the Bohr radius is the
//! largest `r*` with
//!
//! ```text
//! r + |a_2| r^2 + |a_3| r^3 + ...  <=  d(0, ∂f(D))     for all r <= r*
//! ```
//!
//! Every class handled here reduces to the same shape: a majorant series built
//! from sharp coefficient bounds on the left, a sharp lower bound for the
//! boundary distance on the right. The crate assembles that equation per class
//! and solves it with certified truncation and bisection.
//!
//! | module | class |
//! |--------|-------|
//! | [`starlike`] | Janowski starlike `ST[A,B]` and its special cases |
//! | [`subord`] | `f + βzf' + γz²f'' ≺ h`, `h ∈ ST[A,B]` |
//! | [`alpha_convex`] | Mocanu α-convex functions |
//! | [`typreal`] | typically real functions |
//!
//! [`numerics`] holds the class-agnostic kernels and [`janowski`] the shared
//! coefficient/growth bounds. [`cli`] backs the `bohr` binary.
//!
//! ```
//! use bohr_radius::{janowski::JanowskiParams, numerics::ToleranceConfig, starlike};
//!
//! let cfg = ToleranceConfig::default();
//! let koebe = JanowskiParams::new(1.0, -1.0).unwrap();
//! let res = starlike::bohr_radius_st(koebe, &cfg).unwrap();
//! assert!((res.radius - (3.0 - 2.0 * 2f64.sqrt())).abs() < 1e-9);
//! ```

pub mod alpha_convex;
pub mod cli;
pub mod error;
pub mod janowski;
pub mod numerics;
pub mod starlike;
pub mod subord;
pub mod typreal;

pub use error::{Error, Result};
pub use numerics::{RadiusResult, ToleranceConfig};
