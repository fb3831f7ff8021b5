//! Class-agnostic numerical kernels: certified majorant summation, bisection
//! on monotone radius equations and adaptive Gauss–Kronrod quadrature.

mod compensated;
mod quadrature;
mod root;
mod series;
mod tolerance;

pub use compensated::NeumaierSum;
pub use quadrature::{integrate, integrate_with_estimate, Quadrature};
pub use root::{solve_monotone, BohrProblem, ClosedForm, Lhs, RadiusResult, SeriesLhs, BRACKET_TOP};
pub use series::{dominated_linear_tail, sum_series, sum_series_bounded, MajorantSeries, SeriesSum};
pub use tolerance::ToleranceConfig;
