use std::cmp::Ordering;
use std::collections::BinaryHeap;

use super::ToleranceConfig;
use crate::error::{Error, Result};

// Gauss–Kronrod 7/15 abscissae and weights on [-1, 1]. Odd indices are the
// Gauss nodes.
#[allow(clippy::excessive_precision)]
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];
#[allow(clippy::excessive_precision)]
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];
#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

/// Maximum number of bisections of any subinterval.
const MAX_DEPTH: u32 = 60;
/// Maximum number of live subintervals.
const MAX_INTERVALS: usize = 20_000;

/// Integral estimate and its (conservative) absolute error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quadrature {
    pub value: f64,
    pub error: f64,
    pub intervals: usize,
}

struct Piece {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
    depth: u32,
}

impl PartialEq for Piece {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl Eq for Piece {}
impl PartialOrd for Piece {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Piece {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

fn kronrod15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, depth: u32) -> Piece {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut kronrod = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    for (j, (&x, &w)) in XGK.iter().zip(WGK.iter()).take(7).enumerate() {
        let pair = f(center - half * x) + f(center + half * x);
        kronrod += w * pair;
        if j % 2 == 1 {
            gauss += WG[j / 2] * pair;
        }
    }
    Piece { a, b, value: kronrod * half, error: ((kronrod - gauss) * half).abs(), depth }
}

/// Globally adaptive 7/15-point Gauss–Kronrod quadrature of `f` on `[a, b]`.
///
/// The subinterval with the largest error estimate is halved until the summed
/// estimate drops below `cfg.quad_tol`.
pub fn integrate_with_estimate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, cfg: &ToleranceConfig) -> Result<Quadrature> {
    if !(a.is_finite() && b.is_finite() && a < b) {
        return Err(crate::error::invalid(format!("quadrature needs a finite interval a < b, got [{a}, {b}]")));
    }
    let mut heap = BinaryHeap::new();
    let first = kronrod15(&f, a, b, 0);
    let mut error = first.error;
    heap.push(first);
    loop {
        if error <= cfg.quad_tol {
            // Re-sum from the pieces; the running error total only steers refinement.
            let (value, error) = heap.iter().fold((0.0, 0.0), |(v, e), p| (v + p.value, e + p.error));
            if error <= cfg.quad_tol {
                if !value.is_finite() {
                    return Err(crate::error::invalid("integrand is not finite on the interval"));
                }
                return Ok(Quadrature { value, error, intervals: heap.len() });
            }
        }
        let worst = heap.pop().expect("heap never empties");
        if !worst.value.is_finite() {
            return Err(crate::error::invalid("integrand is not finite on the interval"));
        }
        if worst.depth >= MAX_DEPTH || heap.len() + 2 > MAX_INTERVALS {
            return Err(Error::QuadratureDepthExceeded { a: worst.a, b: worst.b });
        }
        let mid = 0.5 * (worst.a + worst.b);
        let left = kronrod15(&f, worst.a, mid, worst.depth + 1);
        let right = kronrod15(&f, mid, worst.b, worst.depth + 1);
        error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
    }
}

/// As [`integrate_with_estimate`], returning only the value.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, cfg: &ToleranceConfig) -> Result<f64> {
    integrate_with_estimate(f, a, b, cfg).map(|q| q.value)
}
