//! Sectoring with artificial noise.
//!
//! The transmitter radiates the information signal into the sector that holds
//! its intended receiver and artificial noise, split evenly, into the other
//! `N − 1` sectors. Throughout, `δ = 2/α` and
//! `x(φ) = (N − 1)^{1−δ} (1/φ − 1)^δ` is the noise-to-information term shared
//! by every expression below.

use crate::model::{NetworkParams, PowerSplit};
use crate::specfun::c_alpha_n;
use crate::throughput::{
    golden_section_max, open_unit, rate_from_threshold, stc, RateTriple, PHI_MAX, PHI_MIN,
};
use crate::{Error, Result};
use core::f64::consts::PI;

const INFEASIBLE: &str = "no positive secrecy capacity";

fn check_beta(name: &'static str, beta: f64) -> Result<f64> {
    if beta.is_finite() && beta > 0.0 {
        Ok(beta)
    } else {
        Err(Error::domain(name, beta, "must be positive and finite"))
    }
}

fn c2(params: &NetworkParams) -> f64 {
    c_alpha_n(params.alpha(), 2).expect("n = 2 is always valid")
}

/// `(N − 1)^{1−δ} (1/φ − 1)^δ`; zero at `φ = 1`.
pub fn noise_term(params: &NetworkParams, split: &PowerSplit) -> f64 {
    if split.is_noiseless() {
        return 0.0;
    }
    let d = params.alpha().delta();
    let n1 = params.n().as_f64() - 1.0;
    libm::pow(n1, 1.0 - d) * libm::pow(split.noise_ratio(), d)
}

fn phi_from_noise_term(params: &NetworkParams, x: f64) -> f64 {
    let d = params.alpha().delta();
    let n1 = params.n().as_f64() - 1.0;
    let ratio = libm::pow(x / libm::pow(n1, 1.0 - d), 1.0 / d);
    1.0 / (1.0 + ratio)
}

/// Connection outage probability at the typical receiver.
pub fn connection_outage(params: &NetworkParams, split: &PowerSplit, beta_b: f64) -> Result<f64> {
    let beta_b = check_beta("beta_b", beta_b)?;
    let d = params.alpha().delta();
    let r = params.r();
    let e = libm::pow(beta_b, d) * params.lambda_l() * c2(params) * r * r / params.n().as_f64()
        * (1.0 + noise_term(params, split));
    Ok(-libm::expm1(-e))
}

/// Leading-order term shared by the two secrecy outage bounds; infinite at
/// `φ = 1` when eavesdroppers are present.
pub fn secrecy_outage_lead(params: &NetworkParams, split: &PowerSplit, beta_e: f64) -> Result<f64> {
    let beta_e = check_beta("beta_e", beta_e)?;
    if params.lambda_e() == 0.0 {
        return Ok(0.0);
    }
    let x = noise_term(params, split);
    if x == 0.0 {
        return Ok(f64::INFINITY);
    }
    let d = params.alpha().delta();
    Ok(PI / c2(params) * (params.lambda_e() / params.lambda_l()) / (libm::pow(beta_e, d) * x))
}

/// Upper bound on the secrecy outage probability (union over all
/// eavesdroppers in the intended sector).
pub fn secrecy_outage_ub(params: &NetworkParams, split: &PowerSplit, beta_e: f64) -> Result<f64> {
    let lead = secrecy_outage_lead(params, split, beta_e)?;
    Ok(-libm::expm1(-lead))
}

/// Lower bound on the secrecy outage probability from the nearest
/// eavesdropper alone.
pub fn secrecy_outage_lb(params: &NetworkParams, split: &PowerSplit, beta_e: f64) -> Result<f64> {
    let beta_e = check_beta("beta_e", beta_e)?;
    let le = params.lambda_e();
    if le == 0.0 {
        return Ok(0.0);
    }
    let d = params.alpha().delta();
    let x = noise_term(params, split);
    Ok(PI * le / (PI * le + params.lambda_l() * c2(params) * libm::pow(beta_e, d) * x))
}

/// `ϱ = N ln(1/(1 − σ)) / (λ_l C_{α,2} r²)`.
pub fn varrho(params: &NetworkParams, sigma: f64) -> Result<f64> {
    let sigma = open_unit("sigma", sigma)?;
    let r = params.r();
    Ok(params.n().as_f64() * -libm::log1p(-sigma) / (params.lambda_l() * c2(params) * r * r))
}

/// `ς = (π / C_{α,2}) (λ_e/λ_l) / ln(1/(1 − ε))`.
pub fn varsigma(params: &NetworkParams, epsilon: f64) -> Result<f64> {
    let epsilon = open_unit("epsilon", epsilon)?;
    Ok(PI / c2(params) * (params.lambda_e() / params.lambda_l()) / -libm::log1p(-epsilon))
}

/// Connection threshold meeting `p_co = σ` exactly.
pub fn beta_b_from_sigma(params: &NetworkParams, split: &PowerSplit, sigma: f64) -> Result<f64> {
    let rho = varrho(params, sigma)?;
    let a2 = 0.5 * params.alpha().get();
    Ok(libm::pow(rho / (1.0 + noise_term(params, split)), a2))
}

/// Secrecy threshold meeting the upper bound `p_so = ε` exactly.
///
/// Without artificial noise (`φ = 1`) the constraint cannot be met when
/// eavesdroppers are present.
pub fn beta_e_from_epsilon(
    params: &NetworkParams,
    split: &PowerSplit,
    epsilon: f64,
) -> Result<f64> {
    let s = varsigma(params, epsilon)?;
    if s == 0.0 {
        return Ok(0.0);
    }
    let x = noise_term(params, split);
    if x == 0.0 {
        return Err(Error::Infeasible(
            "secrecy constraint unreachable without artificial noise",
        ));
    }
    let a2 = 0.5 * params.alpha().get();
    Ok(libm::pow(s / x, a2))
}

/// Codeword rate and redundancy meeting both outage constraints at `split`.
/// The redundancy is infinite when the secrecy constraint cannot be met.
pub fn rates(
    params: &NetworkParams,
    split: &PowerSplit,
    sigma: f64,
    epsilon: f64,
) -> Result<RateTriple> {
    let rb = rate_from_threshold(beta_b_from_sigma(params, split, sigma)?);
    let re = match beta_e_from_epsilon(params, split, epsilon) {
        Ok(b) => rate_from_threshold(b),
        Err(Error::Infeasible(_)) => f64::INFINITY,
        Err(e) => return Err(e),
    };
    RateTriple::new(rb, re)
}

/// Lower bound on the secrecy transmission capacity under the outage
/// constraints `σ` and `ε`; zero where the redundancy exceeds the rate.
pub fn capacity_lb(
    params: &NetworkParams,
    split: &PowerSplit,
    sigma: f64,
    epsilon: f64,
) -> Result<f64> {
    let rt = rates(params, split, sigma, epsilon)?;
    Ok(stc(params.lambda_l(), sigma, rt))
}

/// `ϱ`, `ς` and the auxiliary `κ` of the closed-form optimum at `α = 4`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Alpha4Intermediates {
    /// Normalized connection constraint.
    pub varrho: f64,
    /// Normalized secrecy constraint.
    pub varsigma: f64,
    /// Root helper of the cubic.
    pub kappa: f64,
}

impl Alpha4Intermediates {
    /// Evaluates the three quantities; `κ` uses `α = 4` regardless of
    /// `params`.
    pub fn new(params: &NetworkParams, sigma: f64, epsilon: f64) -> Result<Self> {
        let p = varrho(params, sigma)?;
        let s = varsigma(params, epsilon)?;
        let d2 = p * p - s * s;
        let root = libm::sqrt(((p - s) * (p - s) + 1.0) * ((p + s) * (p + s) + 1.0));
        let kappa = p * p + s * s + (d2 + root) * d2;
        Ok(Alpha4Intermediates {
            varrho: p,
            varsigma: s,
            kappa,
        })
    }
}

fn ensure_feasible(p: f64, s: f64) -> Result<()> {
    if p > s {
        Ok(())
    } else {
        Err(Error::Infeasible(INFEASIBLE))
    }
}

/// Closed-form capacity-maximizing power split for `α = 4`.
pub fn optimal_phi_alpha4(params: &NetworkParams, sigma: f64, epsilon: f64) -> Result<PowerSplit> {
    if params.alpha().get() != 4.0 {
        return Err(Error::domain(
            "alpha",
            params.alpha().get(),
            "must equal 4 for the closed-form optimum",
        ));
    }
    let Alpha4Intermediates {
        varrho: p,
        varsigma: s,
        kappa: k,
    } = Alpha4Intermediates::new(params, sigma, epsilon)?;
    ensure_feasible(p, s)?;
    let c = |v: f64, e: f64| libm::pow(v, e);
    let inner = c(2.0, 2.0 / 3.0) * c(p, 4.0 / 3.0) * c(s, 1.0 / 3.0) * c(k, 2.0 / 3.0)
        + c(2.0, 4.0 / 3.0) * p * p * s
        + 2.0 * c(p, 2.0 / 3.0) * c(s, 5.0 / 3.0) * c(k, 1.0 / 3.0);
    let d2 = p * p - s * s;
    let n1 = params.n().as_f64() - 1.0;
    let frac =
        c(s, 2.0 / 3.0) * inner * inner / (4.0 * n1 * c(p, 4.0 / 3.0) * c(k, 2.0 / 3.0) * d2 * d2);
    params.split(1.0 / (1.0 + frac))
}

/// Largest power split with positive capacity, `None` when infeasible.
pub fn feasible_phi_limit(params: &NetworkParams, sigma: f64, epsilon: f64) -> Result<Option<f64>> {
    let p = varrho(params, sigma)?;
    let s = varsigma(params, epsilon)?;
    if p <= s {
        return Ok(None);
    }
    if s == 0.0 {
        return Ok(Some(1.0));
    }
    // β_b > β_e  ⇔  x (ϱ − ς) > ς.
    Ok(Some(phi_from_noise_term(params, s / (p - s))))
}

/// Numeric capacity-maximizing power split for any `α`.
///
/// The capacity is positive and unimodal on `(0, φ₀)` and zero beyond, so a
/// golden-section search over that interval converges to the unique optimum.
pub fn optimal_phi_numeric(params: &NetworkParams, sigma: f64, epsilon: f64) -> Result<PowerSplit> {
    let hi = feasible_phi_limit(params, sigma, epsilon)?
        .ok_or(Error::Infeasible(INFEASIBLE))?
        .min(PHI_MAX);
    let objective = |phi: f64| {
        params
            .split(phi)
            .and_then(|s| capacity_lb(params, &s, sigma, epsilon))
            .unwrap_or(f64::NAN)
    };
    let (phi, value) = golden_section_max(objective, PHI_MIN, hi, 1e-10)?;
    if value <= 0.0 {
        return Err(Error::Infeasible(INFEASIBLE));
    }
    params.split(phi)
}

/// `|φ_closed − φ_numeric|` at `α = 4`, used to guard the closed form.
pub fn alpha4_discrepancy(params: &NetworkParams, sigma: f64, epsilon: f64) -> Result<f64> {
    let closed = optimal_phi_alpha4(params, sigma, epsilon)?.phi();
    let numeric = optimal_phi_numeric(params, sigma, epsilon)?.phi();
    Ok((closed - numeric).abs())
}
