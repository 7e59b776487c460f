//! Adaptive Gauss–Kronrod (7/15) quadrature.
//!
//! Used to check densities, moments and CDFs against their closed forms.

use alloc::vec::Vec;

use crate::{Error, Result};

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_8,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

const MAX_SEGMENTS: usize = 20_000;

fn kronrod<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> Result<(f64, f64)> {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    if !fc.is_finite() {
        return Err(Error::NonFinite { at: c });
    }
    let mut k = fc * WGK[7];
    let mut g = fc * WG[3];
    for j in 0..7 {
        let dx = h * XGK[j];
        let f1 = f(c - dx);
        let f2 = f(c + dx);
        if !f1.is_finite() {
            return Err(Error::NonFinite { at: c - dx });
        }
        if !f2.is_finite() {
            return Err(Error::NonFinite { at: c + dx });
        }
        k += WGK[j] * (f1 + f2);
        if j % 2 == 1 {
            g += WG[j / 2] * (f1 + f2);
        }
    }
    Ok((k * h, ((k - g) * h).abs()))
}

/// Integrates `f` over `[a, b]` to a combined absolute/relative tolerance.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> Result<f64> {
    if a == b {
        return Ok(0.0);
    }
    let (whole, err) = kronrod(&f, a, b)?;
    let mut segments: Vec<(f64, f64, f64, f64)> = alloc::vec![(a, b, whole, err)];
    let mut total = whole;
    let mut total_err = err;
    while total_err > tol * total.abs().max(tol) {
        if segments.len() >= MAX_SEGMENTS {
            break;
        }
        // Split the segment with the largest error estimate.
        let (idx, _) =
            segments.iter().enumerate().fold(
                (0, -1.0),
                |acc, (i, s)| if s.3 > acc.1 { (i, s.3) } else { acc },
            );
        let (lo, hi, val, e) = segments.swap_remove(idx);
        let mid = 0.5 * (lo + hi);
        let (v1, e1) = kronrod(&f, lo, mid)?;
        let (v2, e2) = kronrod(&f, mid, hi)?;
        total += v1 + v2 - val;
        total_err += e1 + e2 - e;
        segments.push((lo, mid, v1, e1));
        segments.push((mid, hi, v2, e2));
        if total_err < 0.0 {
            total_err = segments.iter().map(|s| s.3).sum();
        }
    }
    Ok(segments.iter().map(|s| s.2).sum())
}

/// Integrates `f` over `[a, ∞)` via `z = a + scale · t / (1 − t)`.
///
/// `scale` should be of the order of the integrand's decay length.
pub fn integrate_to_infinity<F: Fn(f64) -> f64>(f: F, a: f64, scale: f64, tol: f64) -> Result<f64> {
    integrate(
        |t| {
            if t >= 1.0 {
                return 0.0;
            }
            let u = 1.0 - t;
            let z = a + scale * t / u;
            let v = f(z) * scale / (u * u);
            // Tail beyond double range contributes nothing.
            if v.is_nan() && z.is_infinite() {
                0.0
            } else {
                v
            }
        },
        0.0,
        1.0,
        tol,
    )
}
