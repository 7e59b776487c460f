//! Special-function kernels and the model constants shared by both schemes.

use core::f64::consts::PI;

use crate::{Error, Result};

/// Path-loss exponent `alpha`, strictly greater than 2.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd)]
pub struct PathLossExponent(f64);

impl PathLossExponent {
    /// Validates `alpha > 2` and finiteness.
    pub fn new(alpha: f64) -> Result<Self> {
        if !alpha.is_finite() || alpha <= 2.0 {
            return Err(Error::domain("alpha", alpha, "must exceed 2"));
        }
        Ok(PathLossExponent(alpha))
    }

    /// The exponent itself.
    pub fn get(self) -> f64 {
        self.0
    }

    /// `2 / alpha`, the exponent that shows up in every PPP Laplace transform.
    pub fn delta(self) -> f64 {
        2.0 / self.0
    }
}

/// Number of transmit antennas (or sectors); at least two.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AntennaCount(u32);

impl AntennaCount {
    /// Validates `n >= 2`.
    pub fn new(n: u32) -> Result<Self> {
        if n < 2 {
            return Err(Error::domain("n", n as f64, "must be at least 2"));
        }
        Ok(AntennaCount(n))
    }

    /// The antenna count.
    pub fn get(self) -> u32 {
        self.0
    }

    /// Antenna count as a float.
    pub fn as_f64(self) -> f64 {
        self.0 as f64
    }
}

// Lanczos approximation, g = 7, nine terms.
const LANCZOS_G: f64 = 7.0;
const LANCZOS_P: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

fn lanczos_sum(x: f64) -> f64 {
    // x is the shifted argument (Gamma(x + 1) form).
    let mut t = LANCZOS_P[0];
    for (i, p) in LANCZOS_P.iter().enumerate().skip(1) {
        t += p / (x + i as f64);
    }
    t
}

/// Gamma function without argument checks. Uses reflection below 1/2.
pub(crate) fn gamma(x: f64) -> f64 {
    if x < 0.5 {
        return PI / (libm::sin(PI * x) * gamma(1.0 - x));
    }
    let y = x - 1.0;
    let t = lanczos_sum(y);
    let w = y + LANCZOS_G + 0.5;
    // Split the power so w^(y + 1/2) does not overflow near x = 170.
    let half = libm::pow(w, 0.5 * (y + 0.5));
    libm::sqrt(2.0 * PI) * half * libm::exp(-w) * half * t
}

/// `Γ(x)` for `x > 0`, relative error around 1e-14 on `(0, 170]`.
pub fn gamma_fn(x: f64) -> Result<f64> {
    if !x.is_finite() || x <= 0.0 {
        return Err(Error::domain("x", x, "must be a positive finite number"));
    }
    Ok(gamma(x))
}

/// `ln Γ(x)` for `x > 0`.
pub fn ln_gamma(x: f64) -> f64 {
    if x < 0.5 {
        return libm::log(PI / libm::sin(PI * x).abs()) - ln_gamma(1.0 - x);
    }
    let y = x - 1.0;
    let t = lanczos_sum(y);
    let w = y + LANCZOS_G + 0.5;
    0.5 * libm::log(2.0 * PI) + (y + 0.5) * libm::log(w) - w + libm::log(t)
}

/// `Γ(x + s) / Γ(x)` for `x >= 1/2`, `s >= 0`, stable for large `x`.
pub fn gamma_ratio(x: f64, s: f64) -> f64 {
    debug_assert!(x >= 0.5 && s >= 0.0);
    let y = x - 1.0;
    let w0 = y + LANCZOS_G + 0.5;
    let w1 = w0 + s;
    let log_pow = (y + 0.5) * libm::log1p(s / w0) + s * libm::log(w1) - s;
    libm::exp(log_pow) * lanczos_sum(y + s) / lanczos_sum(y)
}

/// `C_{α,N} = π Γ(N − 1 + 2/α) Γ(1 − 2/α) / Γ(N − 1)`.
///
/// Takes a raw `n` so that `C_{α,2}` (used by sectoring for every antenna
/// count) and `C_{α,N}` share one entry point.
pub fn c_alpha_n(alpha: PathLossExponent, n: u32) -> Result<f64> {
    if n < 2 {
        return Err(Error::domain("n", n as f64, "must be at least 2"));
    }
    let d = alpha.delta();
    Ok(PI * gamma_ratio((n - 1) as f64, d) * gamma(1.0 - d))
}

/// Largest `p` accepted by [`zeta`]; subsets are enumerated as bit masks.
pub const ZETA_MAX_P: u32 = 32;

/// Combinatorial coefficient of the beamforming connection outage series.
///
/// Sums, over every `(p - k)`-element subset `{l_1 < … < l_{p-k}}` of
/// `{1, …, p - 1}`, the product `Π_i (l_i − (2/α)(l_i − i + 1))`. The empty
/// subset contributes 1, so `zeta(p, p, ·) = 1`.
pub fn zeta(p: u32, k: u32, alpha: PathLossExponent) -> Result<f64> {
    if p == 0 || k == 0 || k > p {
        return Err(Error::domain("k", k as f64, "must satisfy 1 <= k <= p"));
    }
    if p > ZETA_MAX_P {
        return Err(Error::Unsupported {
            what: "zeta subset enumeration order p",
            limit: ZETA_MAX_P,
            hint: "use the low-outage approximation for larger antenna counts",
        });
    }
    let d = alpha.delta();
    let size = p - k;
    if size == 0 {
        return Ok(1.0);
    }
    let universe = p - 1;
    let limit: u64 = 1u64 << universe;
    // Gosper's hack: walk all masks with exactly `size` bits set.
    let mut mask: u64 = (1u64 << size) - 1;
    let mut total = 0.0;
    while mask < limit {
        let mut prod = 1.0;
        let mut bits = mask;
        let mut i = 1.0;
        while bits != 0 {
            let l = (bits.trailing_zeros() + 1) as f64;
            prod *= l - d * (l - i + 1.0);
            i += 1.0;
            bits &= bits - 1;
        }
        total += prod;
        let c = mask & mask.wrapping_neg();
        let r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
    }
    Ok(total)
}

/// `K_{α,N} = 1 − (2/α) Σ_{p=1}^{N−1} (1/p!) Π_{l=1}^{p−1} (l − 2/α)`.
pub fn k_alpha_n(alpha: PathLossExponent, n: u32) -> f64 {
    let d = alpha.delta();
    let mut term = 1.0; // p = 1: empty product over 1!
    let mut sum = 0.0;
    for p in 1..n {
        sum += term;
        let pf = p as f64;
        term *= (pf - d) / (pf + 1.0);
    }
    1.0 - d * sum
}

fn poisson_log_pmf(k: u32, x: f64) -> f64 {
    -x + k as f64 * libm::log(x) - ln_gamma(k as f64 + 1.0)
}

/// Regularized lower incomplete gamma `P(n, x) = 1 − e^{−x} Σ_{k<n} x^k/k!`
/// for integer shape `n >= 1`.
///
/// Both branches sum positive Poisson terms: the upper tail directly when
/// `x < n + 1`, the complement otherwise.
pub fn reg_lower_inc_gamma_int(n: u32, x: f64) -> Result<f64> {
    if n == 0 {
        return Err(Error::domain("n", 0.0, "must be at least 1"));
    }
    if x.is_nan() || x < 0.0 {
        return Err(Error::domain("x", x, "must be nonnegative"));
    }
    if x == 0.0 {
        return Ok(0.0);
    }
    if x.is_infinite() {
        return Ok(1.0);
    }
    let nf = n as f64;
    if x < nf + 1.0 {
        let lead = libm::exp(poisson_log_pmf(n, x));
        let mut term = 1.0;
        let mut sum = 1.0;
        let mut j = 1.0;
        while term > 1e-17 * sum {
            term *= x / (nf + j);
            sum += term;
            j += 1.0;
        }
        Ok((lead * sum).min(1.0))
    } else {
        // Terms increase with k for k < x, so walk down from k = n - 1.
        let mut term = libm::exp(poisson_log_pmf(n - 1, x));
        let mut q = 0.0;
        for k in (0..n).rev() {
            q += term;
            if term < 1e-18 * q {
                break;
            }
            term *= k as f64 / x;
        }
        Ok((1.0 - q).max(0.0))
    }
}
