//! Beamforming with artificial noise in the null space of the intended
//! channel.
//!
//! The information signal (power `P_I = φP`) is steered along the intended
//! channel, and the noise (power `P_A = (1 − φ)P`) is spread evenly over the
//! `N − 1` null-space directions, `σ_v = P_A/(N − 1)` each. An unintended
//! receiver therefore sees the power `P_x = P_I|h₁|² + σ_v Σ_{i≥2}|h_i|²`.

use crate::model::{NetworkParams, PowerSplit};
use crate::specfun::{
    c_alpha_n, gamma, gamma_ratio, k_alpha_n, ln_gamma, reg_lower_inc_gamma_int, zeta,
    AntennaCount, PathLossExponent,
};
use crate::throughput::{
    bisect, open_unit, rate_from_threshold, stc, Maximizer, RateTriple, DEFAULT_SCAN_POINTS,
};
use crate::{Approx, Error, Result};
use core::f64::consts::PI;

const INFEASIBLE: &str = "no positive secrecy capacity";

/// Largest antenna count accepted by [`connection_outage_exact`].
pub const EXACT_MAX_N: u32 = 16;

/// Splits closer than this to `1/N` use the equal-split Gamma law.
pub const EQUAL_SPLIT_TOL: f64 = 1e-6;

/// Bracket for the secrecy threshold search.
pub const BETA_E_BRACKET: (f64, f64) = (1e-9, 1e9);

fn check_beta(name: &'static str, beta: f64) -> Result<f64> {
    if beta.is_finite() && beta > 0.0 {
        Ok(beta)
    } else {
        Err(Error::domain(name, beta, "must be positive and finite"))
    }
}

/// Distribution of the power an unintended receiver collects from one
/// beamforming transmitter.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct InterferencePdfSpec {
    split: PowerSplit,
    n: AntennaCount,
}

impl InterferencePdfSpec {
    /// Validates `phi ∈ (0, 1]`, `p_total > 0` and `n ≥ 2`.
    pub fn new(phi: f64, p_total: f64, n: u32) -> Result<Self> {
        Ok(InterferencePdfSpec {
            split: PowerSplit::new(phi, p_total)?,
            n: AntennaCount::new(n)?,
        })
    }

    /// Distribution parameters for a network and power split.
    pub fn from_params(params: &NetworkParams, split: &PowerSplit) -> Self {
        InterferencePdfSpec {
            split: *split,
            n: params.n(),
        }
    }

    /// Power split.
    pub fn split(&self) -> PowerSplit {
        self.split
    }
    /// Antenna count.
    pub fn n(&self) -> AntennaCount {
        self.n
    }
    /// Information power `P_I`.
    pub fn p_info(&self) -> f64 {
        self.split.p_info()
    }
    /// Per-direction noise power `σ_v = P_A/(N − 1)`.
    pub fn sigma_v(&self) -> f64 {
        self.split.p_noise() / (self.n.as_f64() - 1.0)
    }
    /// True when `|φ − 1/N|` is below [`EQUAL_SPLIT_TOL`], where `P_x` is
    /// `Gamma(N, P_I)`.
    pub fn equal_split(&self) -> bool {
        (self.split.phi() - 1.0 / self.n.as_f64()).abs() < EQUAL_SPLIT_TOL
    }
}

fn gamma_density(shape: u32, scale: f64, z: f64) -> f64 {
    let k = shape as f64;
    libm::exp((k - 1.0) * libm::log(z / scale) - z / scale - ln_gamma(k)) / scale
}

/// Probability density of `P_x` at `z > 0`.
pub fn interference_pdf(spec: &InterferencePdfSpec, z: f64) -> Result<f64> {
    if !(z > 0.0) || z.is_infinite() {
        return Err(Error::domain("z", z, "must be positive and finite"));
    }
    let pi = spec.p_info();
    if spec.split.is_noiseless() {
        return Ok(gamma_density(1, pi, z));
    }
    let n_ant = spec.n.get();
    if spec.equal_split() {
        return Ok(gamma_density(n_ant, pi, z));
    }
    let n = n_ant - 1;
    let nf = n as f64;
    let sv = spec.sigma_v();
    let a = 1.0 / pi;
    let b = 1.0 / sv;
    let c = 1.0 - sv / pi;
    let x = (b - a) * z;
    if x > 0.0 {
        let p = reg_lower_inc_gamma_int(n, x)?;
        return Ok(a * libm::pow(c, -nf) * libm::exp(-a * z) * p);
    }
    let mu = -x;
    if mu <= 2.0 * nf + 2.0 {
        // Kummer series: every term positive.
        let mut term = 1.0;
        let mut sum = 1.0;
        let mut j = 1.0;
        loop {
            term *= mu / j;
            let add = term * nf / (nf + j);
            sum += add;
            if add < 1e-17 * sum && j > mu {
                break;
            }
            j += 1.0;
        }
        let log_f =
            libm::log(a) - a * z + nf * libm::log(b * z) - ln_gamma(nf + 1.0) + libm::log(sum);
        return Ok(libm::exp(log_f));
    }
    // Far tail: the finite alternating sum is dominated by its last term.
    let mut s = 0.0;
    let mut term = 1.0;
    for k in 0..n {
        s += term;
        term *= -mu / (k as f64 + 1.0);
    }
    let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
    let bracket = sign * (libm::exp(-mu) - s);
    Ok(a * libm::pow(c.abs(), -nf) * libm::exp(-b * z) * bracket)
}

/// `E[P_x^{2/α}] / P_I^{2/α}`.
fn moment_ratio(spec: &InterferencePdfSpec, s: f64) -> f64 {
    let n = spec.n.as_f64();
    if spec.split.is_noiseless() {
        return gamma(1.0 + s);
    }
    if spec.equal_split() {
        return gamma_ratio(n, s);
    }
    let rho = spec.sigma_v() / spec.p_info();
    let c = 1.0 - rho;
    let g = |m: f64| gamma_ratio(m, s);
    let m = spec.n.get() - 1;
    if c > 0.0 {
        if (n - 1.0) * -libm::log(c) < 9.2 {
            let mut acc = 0.0;
            let mut ck = 1.0;
            for k in 0..m {
                acc += ck * g(k as f64 + 1.0);
                ck *= c;
            }
            return libm::pow(c, 1.0 - n) * (gamma(1.0 + s) - libm::pow(rho, 1.0 + s) * acc);
        }
        // Geometric mixture over Gamma(N + j) shapes.
        let mut acc = 0.0;
        let mut cj = 1.0;
        let mut j = 0.0;
        loop {
            let t = cj * g(n + j);
            acc += t;
            if t < 1e-17 * acc {
                break;
            }
            cj *= c;
            j += 1.0;
        }
        return libm::pow(rho, 1.0 + s) * acc;
    }
    if rho > 3.0 {
        let mut acc = 0.0;
        for k in 0..m {
            acc += libm::pow(c, k as f64 + 1.0 - n) * g(k as f64 + 1.0);
        }
        return libm::pow(c, 1.0 - n) * gamma(1.0 + s) - libm::pow(rho, 1.0 + s) * acc;
    }
    // Negative binomial mixture over Gamma(N + j) shapes.
    let q = 1.0 / rho;
    let mut w = libm::pow(q, n - 1.0);
    let mut mass = 0.0;
    let mut acc = 0.0;
    let mode = (n - 1.0) * (1.0 - q) / q;
    let mut j = 0.0;
    loop {
        mass += w;
        acc += w * g(n + j);
        if j > mode && w < 1e-17 * mass {
            break;
        }
        w *= (n - 1.0 + j) / (j + 1.0) * (1.0 - q);
        j += 1.0;
    }
    acc
}

/// `E[P_x^{2/α}]`.
pub fn fractional_moment(spec: &InterferencePdfSpec, alpha: PathLossExponent) -> f64 {
    let s = alpha.delta();
    libm::pow(spec.p_info(), s) * moment_ratio(spec, s)
}

/// Exponent scale `ψ(φ) = πλ_l r² Γ(1 − 2/α) E[P_x^{2/α}] / P_I^{2/α}`.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd)]
pub struct PsiValue(f64);

impl PsiValue {
    /// The value of `ψ`.
    pub fn value(self) -> f64 {
        self.0
    }
}

/// Evaluates `ψ(φ)` for a network and power split.
pub fn psi(params: &NetworkParams, split: &PowerSplit) -> PsiValue {
    let d = params.alpha().delta();
    let r = params.r();
    let spec = InterferencePdfSpec::from_params(params, split);
    PsiValue(PI * params.lambda_l() * r * r * gamma(1.0 - d) * moment_ratio(&spec, d))
}

/// Connection outage from the exponent `X = β_b^{2/α} ψ` with `n ≥ 1`
/// antennas: `1 − e^{−X}[1 + Σ_p (1/p!) Σ_k (2X/α)^k ζ(p, k)]`.
pub fn pco_from_exponent(exponent: f64, n: u32, alpha: PathLossExponent) -> Result<f64> {
    if n == 0 {
        return Err(Error::domain("n", 0.0, "must be at least 1"));
    }
    if n > EXACT_MAX_N {
        return Err(Error::Unsupported {
            what: "exact beamforming connection outage antenna count",
            limit: EXACT_MAX_N,
            hint: "use the low-outage approximation (pco_approx) for larger N",
        });
    }
    let y = alpha.delta() * exponent;
    let mut tail = 0.0;
    let mut inv_fact = 1.0;
    for p in 1..n {
        inv_fact /= p as f64;
        let mut inner = 0.0;
        let mut yk = 1.0;
        for k in 1..=p {
            yk *= y;
            inner += yk * zeta(p, k, alpha)?;
        }
        tail += inv_fact * inner;
    }
    let e = libm::exp(-exponent);
    Ok((-libm::expm1(-exponent) - e * tail).clamp(0.0, 1.0))
}

/// Exact connection outage probability for `N ≤ 16`.
pub fn connection_outage_exact(
    params: &NetworkParams,
    split: &PowerSplit,
    beta_b: f64,
) -> Result<f64> {
    let beta_b = check_beta("beta_b", beta_b)?;
    let x = libm::pow(beta_b, params.alpha().delta()) * psi(params, split).value();
    pco_from_exponent(x, params.n().get(), params.alpha())
}

/// Low-outage approximation `β_b^{2/α} ψ K_{α,N}`. Not clamped: it exceeds
/// one far outside the low-outage region.
pub fn connection_outage_approx(
    params: &NetworkParams,
    split: &PowerSplit,
    beta_b: f64,
) -> Result<Approx> {
    let beta_b = check_beta("beta_b", beta_b)?;
    let a = params.alpha();
    Ok(Approx(
        libm::pow(beta_b, a.delta()) * psi(params, split).value() * k_alpha_n(a, params.n().get()),
    ))
}

fn t_of(params: &NetworkParams, split: &PowerSplit, beta_e: f64) -> f64 {
    beta_e * split.noise_ratio() / (params.n().as_f64() - 1.0)
}

fn c_n(params: &NetworkParams) -> f64 {
    c_alpha_n(params.alpha(), params.n().get()).expect("n >= 2 by construction")
}

/// `ln p_so^Lead`, computed in log form so it stays finite for large `N`.
fn ln_lead(params: &NetworkParams, split: &PowerSplit, beta_e: f64) -> f64 {
    let t = t_of(params, split, beta_e);
    let n = params.n().as_f64();
    libm::log(params.lambda_e() / params.lambda_l() * PI / c_n(params)) + (1.0 - n) * libm::log1p(t)
        - params.alpha().delta() * libm::log(t)
}

/// Leading-order secrecy outage term shared by both bounds.
pub fn secrecy_outage_lead(params: &NetworkParams, split: &PowerSplit, beta_e: f64) -> Result<f64> {
    let beta_e = check_beta("beta_e", beta_e)?;
    if params.lambda_e() == 0.0 {
        return Ok(0.0);
    }
    if split.is_noiseless() {
        return Ok(f64::INFINITY);
    }
    Ok(libm::exp(ln_lead(params, split, beta_e)))
}

/// Upper bound on the secrecy outage probability, `1 − e^{−Lead}`.
pub fn secrecy_outage_ub(params: &NetworkParams, split: &PowerSplit, beta_e: f64) -> Result<f64> {
    let lead = secrecy_outage_lead(params, split, beta_e)?;
    Ok(-libm::expm1(-lead))
}

/// Lower bound on the secrecy outage probability from the nearest
/// eavesdropper.
pub fn secrecy_outage_lb(params: &NetworkParams, split: &PowerSplit, beta_e: f64) -> Result<f64> {
    let beta_e = check_beta("beta_e", beta_e)?;
    let le = params.lambda_e();
    if le == 0.0 {
        return Ok(0.0);
    }
    if split.is_noiseless() {
        return Ok(1.0);
    }
    let t = t_of(params, split, beta_e);
    let n = params.n().as_f64();
    let d = params.alpha().delta();
    let own = libm::exp((1.0 - n) * libm::log1p(t));
    Ok(own * PI * le / (PI * le + params.lambda_l() * c_n(params) * libm::pow(t, d)))
}

/// Approximate codeword rate meeting `p_co ≈ σ` through the low-outage
/// approximation.
pub fn rb_approx(params: &NetworkParams, split: &PowerSplit, sigma: f64) -> Result<Approx> {
    let sigma = open_unit("sigma", sigma)?;
    let a = params.alpha();
    let denom = psi(params, split).value() * k_alpha_n(a, params.n().get());
    Ok(Approx(rate_from_threshold(libm::pow(
        sigma / denom,
        0.5 * a.get(),
    ))))
}

/// Secrecy threshold solving `p_so^Lead(β_e) = ε`, found by bisection on
/// `ln β_e` over [`BETA_E_BRACKET`].
///
/// When the lead term is already below `ε` at the lower bracket edge, that
/// edge is returned: it satisfies the constraint with negligible redundancy.
pub fn beta_e_from_epsilon(
    params: &NetworkParams,
    split: &PowerSplit,
    epsilon: f64,
) -> Result<f64> {
    let epsilon = open_unit("epsilon", epsilon)?;
    if params.lambda_e() == 0.0 {
        return Ok(0.0);
    }
    if split.is_noiseless() {
        return Err(Error::Infeasible(
            "secrecy constraint unreachable without artificial noise",
        ));
    }
    let target = libm::log(epsilon);
    let f = |lb: f64| ln_lead(params, split, libm::exp(lb)) - target;
    let (lo, hi) = (libm::log(BETA_E_BRACKET.0), libm::log(BETA_E_BRACKET.1));
    if f(hi) > 0.0 {
        return Err(Error::Infeasible(
            "secrecy constraint unreachable within the threshold bracket",
        ));
    }
    if f(lo) <= 0.0 {
        return Ok(BETA_E_BRACKET.0);
    }
    Ok(libm::exp(bisect(f, lo, hi, 1e-14)))
}

/// Approximate rate redundancy `log₂(1 + β_e)` with `β_e` from
/// [`beta_e_from_epsilon`].
pub fn re_from_epsilon(params: &NetworkParams, split: &PowerSplit, epsilon: f64) -> Result<Approx> {
    Ok(Approx(rate_from_threshold(beta_e_from_epsilon(
        params, split, epsilon,
    )?)))
}

/// Closed-form rate redundancy for `α = 4`, `N = 2` via the real root of
/// `y³ + y = A`.
pub fn re_closed_form_alpha4_n2(
    params: &NetworkParams,
    split: &PowerSplit,
    epsilon: f64,
) -> Result<Approx> {
    let epsilon = open_unit("epsilon", epsilon)?;
    if params.alpha().get() != 4.0 || params.n().get() != 2 {
        return Err(Error::domain(
            "alpha",
            params.alpha().get(),
            "closed form needs alpha = 4 and N = 2",
        ));
    }
    if split.is_noiseless() {
        return Err(Error::Infeasible(
            "secrecy constraint unreachable without artificial noise",
        ));
    }
    let a = PI * params.lambda_e() / (epsilon * params.lambda_l() * c_n(params));
    let w = 108.0 * a + 12.0 * libm::sqrt(81.0 * a * a + 12.0);
    let y = (libm::pow(w, 2.0 / 3.0) - 12.0) / (6.0 * libm::cbrt(w));
    let phi = split.phi();
    Ok(Approx(rate_from_threshold(phi / (1.0 - phi) * y * y)))
}

/// Approximate rate pair; the redundancy is infinite when the secrecy
/// constraint cannot be met.
pub fn rates_approx(
    params: &NetworkParams,
    split: &PowerSplit,
    sigma: f64,
    epsilon: f64,
) -> Result<RateTriple> {
    let rb = rb_approx(params, split, sigma)?.value();
    let re = match re_from_epsilon(params, split, epsilon) {
        Ok(r) => r.value(),
        Err(Error::Infeasible(_)) => f64::INFINITY,
        Err(e) => return Err(e),
    };
    RateTriple::new(rb, re)
}

/// Approximate secrecy transmission capacity, clamped at zero.
pub fn capacity_approx(
    params: &NetworkParams,
    split: &PowerSplit,
    sigma: f64,
    epsilon: f64,
) -> Result<Approx> {
    let rt = rates_approx(params, split, sigma, epsilon)?;
    Ok(Approx(stc(params.lambda_l(), sigma, rt)))
}

/// Capacity-maximizing power split with a configurable coarse-scan size.
pub fn optimal_phi_numeric_with(
    params: &NetworkParams,
    sigma: f64,
    epsilon: f64,
    scan_points: usize,
) -> Result<PowerSplit> {
    open_unit("sigma", sigma)?;
    open_unit("epsilon", epsilon)?;
    let objective = |phi: f64| {
        params
            .split(phi)
            .and_then(|s| capacity_approx(params, &s, sigma, epsilon))
            .map(Approx::value)
            .unwrap_or(f64::NAN)
    };
    let (phi, value) = Maximizer {
        unimodal: false,
        scan_points,
        abs_tol: 1e-10,
    }
    .run(objective)?;
    if value <= 0.0 {
        return Err(Error::Infeasible(INFEASIBLE));
    }
    params.split(phi)
}

/// Capacity-maximizing power split: coarse scan, then golden-section
/// refinement around the best cell.
pub fn optimal_phi_numeric(params: &NetworkParams, sigma: f64, epsilon: f64) -> Result<PowerSplit> {
    optimal_phi_numeric_with(params, sigma, epsilon, DEFAULT_SCAN_POINTS)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadrature::{integrate, integrate_to_infinity};
    use crate::sectoring;
    use alloc::vec::Vec;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn net(alpha: f64, n: u32) -> NetworkParams {
        NetworkParams::new(0.01, 0.001, 1.0, alpha, n, 1.0).unwrap()
    }
    fn split(phi: f64) -> PowerSplit {
        PowerSplit::new(phi, 1.0).unwrap()
    }
    fn spec(phi: f64, n: u32) -> InterferencePdfSpec {
        InterferencePdfSpec::new(phi, 1.0, n).unwrap()
    }
    fn a(alpha: f64) -> PathLossExponent {
        PathLossExponent::new(alpha).unwrap()
    }

    // Density of P_I E + σ_v G(N − 1) by direct convolution quadrature,
    // split so that neither factor's peak hides inside one panel.
    fn convolution_pdf(s: &InterferencePdfSpec, z: f64) -> f64 {
        let pi = s.p_info();
        let sv = s.sigma_v();
        let m = s.n().get() - 1;
        let f = |v: f64| gamma_density(1, pi, v) * gamma_density(m, sv, z - v);
        let mut cuts: Vec<f64> = alloc::vec![0.0, z];
        for k in [1.0, 4.0, 16.0, 64.0] {
            for v in [k * pi, z - k * sv] {
                if v > 0.0 && v < z {
                    cuts.push(v);
                }
            }
        }
        cuts.sort_by(|a, b| a.partial_cmp(b).unwrap());
        cuts.windows(2)
            .map(|w| integrate(f, w[0], w[1], 1e-13).unwrap())
            .sum()
    }

    fn pdf_integral(s: &InterferencePdfSpec, weight: impl Fn(f64) -> f64) -> f64 {
        integrate_to_infinity(
            |z| {
                if z <= 0.0 {
                    0.0
                } else {
                    weight(z) * interference_pdf(s, z).unwrap()
                }
            },
            0.0,
            1.0,
            1e-11,
        )
        .unwrap()
    }

    #[test]
    fn equal_split_is_gamma() {
        let s = spec(0.5, 2);
        assert!(s.equal_split());
        // Gamma(2, 1/2): 4 z e^{−2z}.
        for &z in &[0.1, 0.5, 1.0, 3.0] {
            assert_relative_eq!(
                interference_pdf(&s, z).unwrap(),
                4.0 * z * libm::exp(-2.0 * z),
                max_relative = 1e-12
            );
        }
        let f = |z: f64| interference_pdf(&s, z).unwrap();
        assert!(f(0.5) > f(0.49) && f(0.5) > f(0.51));
        assert!(interference_pdf(&s, 0.0).is_err());
        assert!(interference_pdf(&s, -1.0).is_err());
    }

    #[test]
    fn pdf_matches_convolution() {
        for &n in &[2u32, 3, 4, 8, 16] {
            for &phi in &[0.03, 0.2, 0.5, 0.8, 0.97] {
                let s = spec(phi, n);
                if s.equal_split() {
                    continue;
                }
                for &z in &[0.01, 0.1, 0.4, 1.0, 2.5, 6.0, 15.0] {
                    let f = interference_pdf(&s, z).unwrap();
                    let o = convolution_pdf(&s, z);
                    if o < 1e-250 {
                        continue;
                    }
                    assert!(
                        ((f - o) / o).abs() < 1e-8,
                        "N {n} phi {phi} z {z}: {f} vs {o}"
                    );
                }
            }
        }
    }

    #[test]
    fn pdf_normalized_with_total_power_mean() {
        for &n in &[2u32, 4, 8] {
            for &phi in &[0.2, 1.0 / n as f64, 0.5, 0.8, 1.0] {
                let s = spec(phi, n);
                let mass = pdf_integral(&s, |_| 1.0);
                assert!((mass - 1.0).abs() < 1e-8, "N {n} phi {phi}: {mass}");
                let mean = pdf_integral(&s, |z| z);
                assert!((mean - 1.0).abs() < 1e-6, "N {n} phi {phi}: {mean}");
            }
        }
    }

    #[test]
    fn pdf_continuous_across_equal_split() {
        for &n in &[2u32, 4, 8, 16] {
            let e = 1.0 / n as f64;
            for &z in &[0.05, 0.3, 1.0, 4.0] {
                let mid = interference_pdf(&spec(e, n), z).unwrap();
                for &phi in &[e - 1e-7, e + 1e-7, e - 2e-6, e + 2e-6] {
                    let f = interference_pdf(&spec(phi, n), z).unwrap();
                    assert!(((f - mid) / mid).abs() < 1e-4, "N {n} phi {phi} z {z}");
                }
            }
        }
    }

    #[test]
    fn moment_reference_values() {
        let s = spec(0.5, 2);
        assert_relative_eq!(
            fractional_moment(&s, a(4.0)),
            libm::pow(0.5, 0.5) * gamma(2.5) / gamma(2.0),
            max_relative = 1e-13
        );
        // P_I = 1 form of the same identity.
        let s1 = InterferencePdfSpec::new(0.5, 2.0, 2).unwrap();
        assert_relative_eq!(
            fractional_moment(&s1, a(4.0)),
            1.329_340_388_179_137,
            max_relative = 1e-12
        );
        // φ → 1: exponential of mean P.
        for &phi in &[1.0, 1.0 - 1e-9] {
            assert_relative_eq!(
                fractional_moment(&spec(phi, 4), a(4.0)),
                gamma(1.5),
                max_relative = 1e-7
            );
        }
    }

    #[test]
    fn moment_matches_quadrature() {
        for &alpha in &[2.5, 3.0, 4.0, 6.0] {
            for &n in &[2u32, 3, 4, 8, 16] {
                for &phi in &[0.02, 0.1, 0.2, 0.3, 0.5, 0.8, 0.95] {
                    let s = spec(phi, n);
                    let d = 2.0 / alpha;
                    let o = pdf_integral(&s, |z| libm::pow(z, d));
                    let m = fractional_moment(&s, a(alpha));
                    assert!(
                        ((m - o) / o).abs() < 1e-6,
                        "alpha {alpha} N {n} phi {phi}: {m} vs {o}"
                    );
                }
            }
        }
    }

    #[test]
    fn moment_routes_agree_at_switch_points() {
        // Each evaluation route against a brute-force mixture at a point where
        // it is not the one chosen.
        for &n in &[3u32, 8, 40, 200] {
            for &phi in &[0.004, 0.01, 0.05, 0.1, 0.3, 0.6, 0.9, 0.999] {
                let s = spec(phi, n);
                let nf = n as f64;
                let d = 0.5;
                let rho = s.sigma_v() / s.p_info();
                let c = 1.0 - rho;
                // Direct closed form with generous cancellation budget.
                if c > 0.0 && (nf - 1.0) * -libm::log(c) < 20.0 {
                    let mut acc = 0.0;
                    for k in 0..(n - 1) {
                        acc += libm::pow(c, k as f64) * gamma_ratio(k as f64 + 1.0, d);
                    }
                    let direct =
                        libm::pow(c, 1.0 - nf) * (gamma(1.0 + d) - libm::pow(rho, 1.0 + d) * acc);
                    let r = moment_ratio(&s, d);
                    assert!(((r - direct) / r).abs() < 1e-6, "N {n} phi {phi}");
                }
            }
        }
    }

    #[test]
    fn moment_large_n_stays_finite() {
        for &n in &[64u32, 256, 1024, 8192] {
            for i in 1..100 {
                let s = spec(i as f64 / 100.0, n);
                let m = fractional_moment(&s, a(4.0));
                assert!(m.is_finite() && m > 0.0, "N {n} phi {}", i as f64 / 100.0);
            }
        }
    }

    #[test]
    fn psi_reference_and_scaling() {
        let p = net(4.0, 2);
        let v = psi(&p, &split(0.5)).value();
        assert_relative_eq!(
            v,
            PI * 0.01 * gamma(0.5) * gamma(2.5) / gamma(2.0),
            max_relative = 1e-13
        );
        assert!((v - 0.074022).abs() < 1e-6);
        let s = split(0.3);
        let base = psi(&net(4.0, 4), &s).value();
        let p2 = net(4.0, 4)
            .with_lambda_l(0.03)
            .unwrap()
            .with_r(2.0)
            .unwrap();
        assert_relative_eq!(psi(&p2, &s).value(), 12.0 * base, max_relative = 1e-13);
    }

    #[test]
    fn psi_continuous_across_equal_split() {
        for &n in &[2u32, 4, 8, 16, 64] {
            let p = net(4.0, n);
            let e = 1.0 / n as f64;
            let mid = psi(&p, &split(e)).value();
            for &phi in &[e - 1e-7, e + 1e-7] {
                let v = psi(&p, &split(phi)).value();
                assert!(((v - mid) / mid).abs() < 1e-6, "N {n}");
            }
        }
    }

    #[test]
    fn pco_single_antenna_form() {
        for &x in &[1e-4, 0.1, 2.0] {
            assert_relative_eq!(
                pco_from_exponent(x, 1, a(4.0)).unwrap(),
                1.0 - libm::exp(-x),
                max_relative = 1e-12
            );
        }
    }

    #[test]
    fn pco_matches_laplace_derivative_oracle() {
        // p_co = 1 − Σ_{p<N} (−s)^p/p! L^{(p)}(s) with L(s) = e^{−c s^δ}.
        // Derivatives of e^{−c s^δ} via the recurrence on coefficients of
        // s^{jδ − p} (independent of the subset enumeration).
        for &alpha in &[3.0, 4.0, 5.0] {
            for n in 1..=10u32 {
                for &x in &[0.01, 0.3, 2.0] {
                    let d = 2.0 / alpha;
                    // With s = 1 and c = x.
                    let mut coeffs: Vec<f64> = alloc::vec![1.0]; // index j: coefficient of (−c)^j s^{jδ−p}
                    let mut total = 0.0;
                    let mut fact = 1.0;
                    for p in 0..n {
                        if p > 0 {
                            fact *= p as f64;
                        }
                        let mut deriv = 0.0;
                        for (j, cj) in coeffs.iter().enumerate() {
                            deriv += cj * libm::pow(-x, j as f64);
                        }
                        let sign = if p % 2 == 0 { 1.0 } else { -1.0 };
                        total += sign / fact * deriv * libm::exp(-x);
                        // Differentiate Σ_j c_j (−x)^j s^{jδ−p} e^{−x s^δ}.
                        let mut next = alloc::vec![0.0; coeffs.len() + 1];
                        for (j, cj) in coeffs.iter().enumerate() {
                            next[j] += cj * (j as f64 * d - p as f64);
                            next[j + 1] += cj * d;
                        }
                        coeffs = next;
                    }
                    let oracle = 1.0 - total;
                    let v = pco_from_exponent(x, n, a(alpha)).unwrap();
                    assert!(
                        (v - oracle).abs() < 1e-12,
                        "alpha {alpha} N {n} x {x}: {v} vs {oracle}"
                    );
                }
            }
        }
    }

    #[test]
    fn pco_exact_cap_and_range() {
        let p = net(4.0, 17);
        assert!(matches!(
            connection_outage_exact(&p, &split(0.5), 3.0),
            Err(Error::Unsupported { limit: 16, .. })
        ));
        assert!(connection_outage_approx(&p, &split(0.5), 3.0).is_ok());
        for &n in &[2u32, 4] {
            let p = net(4.0, n);
            let mut prev = 2.0;
            for i in 1..=50 {
                let v = connection_outage_exact(&p, &split(i as f64 / 50.0), 3.0).unwrap();
                assert!((0.0..=1.0).contains(&v));
                assert!(v < prev, "N {n} i {i}");
                prev = v;
            }
        }
    }

    #[test]
    fn approx_reference_and_fidelity() {
        let p = net(4.0, 2);
        let v = connection_outage_approx(&p, &split(0.5), 1.0)
            .unwrap()
            .value();
        assert!((v - 0.037011).abs() < 1e-6);
        for &n in &[2u32, 4, 8] {
            let p = net(4.0, n);
            for i in 1..=20 {
                let s = split(i as f64 / 20.0);
                let e = connection_outage_exact(&p, &s, 3.0).unwrap();
                let ap = connection_outage_approx(&p, &s, 3.0).unwrap().value();
                if e <= 0.05 {
                    assert!(((ap - e) / e).abs() < 0.05, "N {n} phi {}", i as f64 / 20.0);
                }
            }
        }
        // Halving ψ halves the approximation exactly.
        let s = split(0.4);
        let full = connection_outage_approx(&net(4.0, 4), &s, 3.0)
            .unwrap()
            .value();
        let half = connection_outage_approx(&net(4.0, 4).with_lambda_l(0.005).unwrap(), &s, 3.0)
            .unwrap()
            .value();
        assert_relative_eq!(half, full / 2.0, max_relative = 1e-13);
    }

    #[test]
    fn secrecy_identities() {
        let p = net(4.0, 4);
        let s = split(0.5);
        let ub = secrecy_outage_ub(&p, &s, 3.0).unwrap();
        let lb = secrecy_outage_lb(&p, &s, 3.0).unwrap();
        let lead = secrecy_outage_lead(&p, &s, 3.0).unwrap();
        assert!(lb <= ub);
        assert_relative_eq!(lead, -libm::log1p(-ub), max_relative = 1e-12);
        // Shared subexpressions: t = β_e(1/φ − 1)/(N − 1).
        let t = 3.0 * 1.0 / 3.0;
        let cn = c_alpha_n(a(4.0), 4).unwrap();
        let own = libm::pow(1.0 + t, -3.0);
        assert_relative_eq!(
            lead,
            0.1 * PI * own / (cn * libm::sqrt(t)),
            max_relative = 1e-13
        );
        assert_relative_eq!(
            lb,
            own * PI * 0.001 / (PI * 0.001 + 0.01 * cn * libm::sqrt(t)),
            max_relative = 1e-13
        );
        let quiet = p.with_lambda_e(0.0).unwrap();
        assert_eq!(secrecy_outage_ub(&quiet, &s, 3.0).unwrap(), 0.0);
        assert_eq!(secrecy_outage_lb(&quiet, &s, 3.0).unwrap(), 0.0);
        assert_eq!(secrecy_outage_ub(&p, &split(1.0), 3.0).unwrap(), 1.0);
        assert_eq!(secrecy_outage_lb(&p, &split(1.0), 3.0).unwrap(), 1.0);
    }

    #[test]
    fn bounds_approach_lead() {
        let p = NetworkParams::new(0.01, 1e-6, 1.0, 4.0, 4, 1.0).unwrap();
        for &phi in &[0.1, 0.5, 0.9] {
            let s = split(phi);
            let lead = secrecy_outage_lead(&p, &s, 3.0).unwrap();
            assert!((secrecy_outage_ub(&p, &s, 3.0).unwrap() / lead - 1.0).abs() < 0.01);
            assert!((secrecy_outage_lb(&p, &s, 3.0).unwrap() / lead - 1.0).abs() < 0.01);
        }
    }

    #[test]
    fn lead_and_ub_monotone() {
        let p = net(4.0, 4);
        let s = split(0.5);
        let mut prev = f64::INFINITY;
        for i in 0..=120 {
            let b = libm::pow(10.0, -3.0 + i as f64 * 0.05);
            let v = secrecy_outage_lead(&p, &s, b).unwrap();
            assert!(v < prev);
            prev = v;
        }
        let mut prev = -1.0;
        for i in 1..50 {
            let v = secrecy_outage_ub(&p, &split(i as f64 / 50.0), 3.0).unwrap();
            assert!(v > prev);
            prev = v;
        }
    }

    #[test]
    fn rb_round_trip_and_exact_oracle() {
        let p = net(4.0, 2);
        let s = split(0.5);
        let rb = rb_approx(&p, &s, 0.1).unwrap().value();
        let bb = crate::throughput::threshold_from_rate(rb);
        assert_relative_eq!(
            connection_outage_approx(&p, &s, bb).unwrap().value(),
            0.1,
            max_relative = 1e-12
        );
        // Bisection on the exact outage.
        let (mut lo, mut hi) = (1e-6f64, 1e6f64);
        for _ in 0..200 {
            let mid = libm::sqrt(lo * hi);
            if connection_outage_exact(&p, &s, mid).unwrap() < 0.1 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let rb_exact = rate_from_threshold(lo);
        // The approximation overestimates p_co, so it underestimates the rate.
        assert!(rb < rb_exact);
        assert!((rb_exact - rb) / rb_exact < 0.1);
        assert!(rb_approx(&p, &s, 1e-12).unwrap().value() < 1e-9);
    }

    #[test]
    fn re_round_trip_and_closed_form() {
        let p = net(4.0, 2);
        let s = split(0.5);
        let be = beta_e_from_epsilon(&p, &s, 0.01).unwrap();
        assert_relative_eq!(
            secrecy_outage_lead(&p, &s, be).unwrap(),
            0.01,
            max_relative = 1e-10
        );
        let re = re_from_epsilon(&p, &s, 0.01).unwrap().value();
        let cf = re_closed_form_alpha4_n2(&p, &s, 0.01).unwrap().value();
        assert!((re - cf).abs() < 1e-6, "{re} vs {cf}");
        for &phi in &[0.1, 0.3, 0.7, 0.95] {
            for &eps in &[1e-3, 0.01, 0.2] {
                let s = split(phi);
                let r1 = re_from_epsilon(&p, &s, eps).unwrap().value();
                let r2 = re_closed_form_alpha4_n2(&p, &s, eps).unwrap().value();
                assert!((r1 - r2).abs() < 1e-9, "phi {phi} eps {eps}");
            }
        }
        // Cubic root check.
        let a_ = PI * 0.001 / (0.01 * 0.01 * c_alpha_n(a(4.0), 2).unwrap());
        let w = 108.0 * a_ + 12.0 * libm::sqrt(81.0 * a_ * a_ + 12.0);
        let y = (libm::pow(w, 2.0 / 3.0) - 12.0) / (6.0 * libm::cbrt(w));
        assert_relative_eq!(y * y * y + y, a_, max_relative = 1e-12);
        assert!(re_from_epsilon(&p, &s, 0.05).unwrap().value() < re);
        assert!(matches!(
            re_from_epsilon(&p, &split(1.0), 0.01),
            Err(Error::Infeasible(_))
        ));
        assert!(re_closed_form_alpha4_n2(&net(4.0, 3), &s, 0.01).is_err());
    }

    #[test]
    fn capacity_clamps_and_matches_stc() {
        let p = net(4.0, 4);
        let s = split(0.5);
        let rb = rb_approx(&p, &s, 0.1).unwrap().value();
        let re = re_from_epsilon(&p, &s, 0.01).unwrap().value();
        let c = capacity_approx(&p, &s, 0.1, 0.01).unwrap().value();
        assert_eq!(c, stc(0.01, 0.1, RateTriple::new(rb, re).unwrap()));
        assert_eq!(capacity_approx(&p, &s, 0.1, 1e-15).unwrap().value(), 0.0);
        assert_eq!(
            capacity_approx(&p, &split(1.0), 0.1, 0.01).unwrap().value(),
            0.0
        );
    }

    #[test]
    fn optimum_matches_dense_grid() {
        let p = net(4.0, 4);
        let opt = optimal_phi_numeric(&p, 0.1, 0.01).unwrap();
        let c = capacity_approx(&p, &opt, 0.1, 0.01).unwrap().value();
        let mut best = 0.0f64;
        for i in 1..20_000 {
            let v = capacity_approx(&p, &split(i as f64 / 20_000.0), 0.1, 0.01)
                .unwrap()
                .value();
            best = best.max(v);
        }
        assert!(c >= best * (1.0 - 1e-9));
        assert!((c - best) / best < 1e-3);
        let opt2 = optimal_phi_numeric_with(&p, 0.1, 0.01, 2 * DEFAULT_SCAN_POINTS).unwrap();
        assert!((opt.phi() - opt2.phi()).abs() < 1e-6);
    }

    #[test]
    fn optimum_plateaus_below_one() {
        let f = |n: u32| optimal_phi_numeric(&net(4.0, n), 0.1, 0.01).unwrap().phi();
        let (p32, p64) = (f(32), f(64));
        assert!((p64 - p32).abs() < 0.01);
        assert!(p64 < 0.95);
        let g = |alpha: f64| {
            optimal_phi_numeric(&net(alpha, 8), 0.1, 0.01)
                .unwrap()
                .phi()
        };
        assert!(g(3.0) > g(4.0) && g(4.0) > g(5.0));
        // Contrast with sectoring, which heads to one.
        let sec = sectoring::optimal_phi_numeric(&net(4.0, 64), 0.1, 0.01)
            .unwrap()
            .phi();
        assert!(sec > p64);
    }

    proptest! {
        #[test]
        fn bounds_sandwich(
            alpha in 2.2f64..6.0,
            n in 2u32..48,
            phi in 0.001f64..0.999,
            beta in 1e-3f64..1e3,
            ratio in 1e-5f64..10.0,
        ) {
            let p = NetworkParams::new(0.01, 0.01 * ratio, 1.0, alpha, n, 1.0).unwrap();
            let s = split(phi);
            let ub = secrecy_outage_ub(&p, &s, beta).unwrap();
            let lb = secrecy_outage_lb(&p, &s, beta).unwrap();
            prop_assert!(lb <= ub * (1.0 + 1e-12) + 1e-300);
            prop_assert!((0.0..=1.0).contains(&ub));
        }

        #[test]
        fn pco_exact_monotone(
            alpha in 2.5f64..6.0,
            n in 2u32..=12,
            phi in 0.01f64..0.99,
            beta in 1e-2f64..1e2,
            k in 1.05f64..2.0,
        ) {
            let p = net(alpha, n);
            let s = split(phi);
            let base = connection_outage_exact(&p, &s, beta).unwrap();
            prop_assert!((0.0..=1.0).contains(&base));
            prop_assert!(connection_outage_exact(&p, &s, beta * k).unwrap() >= base - 1e-14);
            prop_assert!(connection_outage_exact(&p.with_r(k).unwrap(), &s, beta).unwrap() >= base - 1e-14);
            prop_assert!(connection_outage_exact(&p.with_lambda_l(0.01 * k).unwrap(), &s, beta).unwrap() >= base - 1e-14);
        }

        #[test]
        fn psi_positive_finite(alpha in 2.1f64..8.0, n in 2u32..300, phi in 1e-6f64..=1.0) {
            let v = psi(&net(alpha, n), &split(phi)).value();
            prop_assert!(v.is_finite() && v > 0.0);
        }

        #[test]
        fn re_inverse_pair(alpha in 2.5f64..6.0, n in 2u32..64, phi in 0.05f64..0.95, eps in 1e-4f64..0.5) {
            let p = net(alpha, n);
            let s = split(phi);
            let be = beta_e_from_epsilon(&p, &s, eps).unwrap();
            if be > BETA_E_BRACKET.0 {
                let lead = secrecy_outage_lead(&p, &s, be).unwrap();
                prop_assert!(((lead - eps) / eps).abs() < 1e-10);
            }
        }
    }
}
