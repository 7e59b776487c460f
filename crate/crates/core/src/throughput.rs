//! Secrecy transmission capacity, rate/threshold conversion and the scalar
//! optimizer shared by both schemes.

use crate::{Error, Result};

/// Codeword rate, secrecy rate and rate redundancy in bits per channel use.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RateTriple {
    r_b: f64,
    r_e: f64,
}

impl RateTriple {
    /// Builds the triple from codeword rate and redundancy; the secrecy rate
    /// is `max(0, r_b − r_e)`.
    pub fn new(r_b: f64, r_e: f64) -> Result<Self> {
        if !(r_b >= 0.0) || r_b.is_infinite() {
            return Err(Error::domain("r_b", r_b, "must be nonnegative and finite"));
        }
        if !(r_e >= 0.0) {
            return Err(Error::domain("r_e", r_e, "must be nonnegative"));
        }
        Ok(RateTriple { r_b, r_e })
    }

    /// Codeword rate `R_b`.
    pub fn r_b(&self) -> f64 {
        self.r_b
    }
    /// Rate redundancy `R_e`.
    pub fn r_e(&self) -> f64 {
        self.r_e
    }
    /// Secrecy rate `R_s = [R_b − R_e]⁺`.
    pub fn r_s(&self) -> f64 {
        (self.r_b - self.r_e).max(0.0)
    }
}

/// Connection (`sigma`) and secrecy (`epsilon`) outage constraints.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OutageConstraints {
    /// Connection outage constraint.
    pub sigma: f64,
    /// Secrecy outage constraint.
    pub epsilon: f64,
}

impl OutageConstraints {
    /// Both constraints must lie in the open unit interval.
    pub fn new(sigma: f64, epsilon: f64) -> Result<Self> {
        Ok(OutageConstraints {
            sigma: open_unit("sigma", sigma)?,
            epsilon: open_unit("epsilon", epsilon)?,
        })
    }
}

pub(crate) fn open_unit(name: &'static str, v: f64) -> Result<f64> {
    if v > 0.0 && v < 1.0 {
        Ok(v)
    } else {
        Err(Error::domain(name, v, "must lie in (0, 1)"))
    }
}

/// `log₂(1 + β)`.
pub fn rate_from_threshold(beta: f64) -> f64 {
    libm::log1p(beta) / core::f64::consts::LN_2
}

/// `2^r − 1`.
pub fn threshold_from_rate(r: f64) -> f64 {
    libm::expm1(r * core::f64::consts::LN_2)
}

/// Secrecy transmission capacity `(1 − σ) λ_l [R_b − R_e]⁺`.
pub fn stc(lambda_l: f64, sigma: f64, rates: RateTriple) -> f64 {
    (1.0 - sigma) * lambda_l * rates.r_s()
}

/// Lower edge of the search interval for power-split optimization.
pub const PHI_MIN: f64 = 1e-9;
/// Upper edge of the search interval for power-split optimization.
pub const PHI_MAX: f64 = 1.0 - 1e-9;
/// Default number of coarse-scan points when the objective is not known to
/// be unimodal.
pub const DEFAULT_SCAN_POINTS: usize = 512;

const INV_PHI: f64 = 0.618_033_988_749_894_9;

fn eval<F: Fn(f64) -> f64>(f: &F, x: f64) -> Result<f64> {
    let v = f(x);
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::NonFinite { at: x })
    }
}

/// Golden-section search for the maximum of `f` on `[a, b]`.
///
/// Ties move the bracket left, so flat stretches resolve to the smaller
/// argument. Returns `(argmax, max)`.
pub fn golden_section_max<F: Fn(f64) -> f64>(
    f: F,
    mut a: f64,
    mut b: f64,
    abs_tol: f64,
) -> Result<(f64, f64)> {
    let mut x1 = b - INV_PHI * (b - a);
    let mut x2 = a + INV_PHI * (b - a);
    let mut f1 = eval(&f, x1)?;
    let mut f2 = eval(&f, x2)?;
    while b - a > abs_tol {
        if f1 < f2 {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + INV_PHI * (b - a);
            f2 = eval(&f, x2)?;
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - INV_PHI * (b - a);
            f1 = eval(&f, x1)?;
        }
    }
    Ok(if f2 > f1 { (x2, f2) } else { (x1, f1) })
}

/// Scalar maximizer over `(0, 1)`.
#[derive(Clone, Copy, Debug)]
pub struct Maximizer {
    /// Skip the coarse scan and run golden section over the whole interval.
    pub unimodal: bool,
    /// Coarse-scan resolution when `unimodal` is false.
    pub scan_points: usize,
    /// Absolute tolerance on the argument.
    pub abs_tol: f64,
}

impl Maximizer {
    /// Runs the search on `[PHI_MIN, PHI_MAX]`. Returns `(argmax, max)`.
    pub fn run<F: Fn(f64) -> f64>(&self, f: F) -> Result<(f64, f64)> {
        if self.unimodal {
            return golden_section_max(f, PHI_MIN, PHI_MAX, self.abs_tol);
        }
        let m = self.scan_points.max(3);
        let grid = |i: usize| PHI_MIN + (PHI_MAX - PHI_MIN) * i as f64 / (m - 1) as f64;
        let mut best = (0usize, eval(&f, grid(0))?);
        for i in 1..m {
            let v = eval(&f, grid(i))?;
            if v > best.1 {
                best = (i, v);
            }
        }
        let lo = grid(best.0.saturating_sub(1));
        let hi = grid((best.0 + 1).min(m - 1));
        let refined = golden_section_max(&f, lo, hi, self.abs_tol)?;
        if refined.1 > best.1 {
            Ok(refined)
        } else {
            Ok((grid(best.0), best.1))
        }
    }
}

/// Maximizes `objective` on `(0, 1)`: golden section when `unimodal`,
/// otherwise a 512-point scan refined by golden section around the best cell.
pub fn maximize_scalar<F: Fn(f64) -> f64>(
    objective: F,
    unimodal: bool,
    abs_tol: f64,
) -> Result<(f64, f64)> {
    Maximizer {
        unimodal,
        scan_points: DEFAULT_SCAN_POINTS,
        abs_tol,
    }
    .run(objective)
}

/// Bisection for the root of a monotone `f` with `f(lo)` and `f(hi)` of
/// opposite signs. Stops when the bracket is below `tol` or stops shrinking.
pub(crate) fn bisect<F: Fn(f64) -> f64>(f: F, mut lo: f64, mut hi: f64, tol: f64) -> f64 {
    let f_lo = f(lo);
    for _ in 0..400 {
        let mid = 0.5 * (lo + hi);
        if hi - lo <= tol || mid <= lo || mid >= hi {
            break;
        }
        let fm = f(mid);
        if fm == 0.0 {
            return mid;
        }
        if (fm > 0.0) == (f_lo > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}
