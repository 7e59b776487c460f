//! Network parameters and power split shared by both schemes.

use crate::specfun::{AntennaCount, PathLossExponent};
use crate::{Error, Result};

/// Poisson-field network: transmitter and eavesdropper densities, link
/// distance, path loss, antenna count and total transmit power.
///
/// There is no antenna-gain parameter: the sector gain multiplies the desired
/// signal and every interference term alike and cancels from each SIR.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NetworkParams {
    lambda_l: f64,
    lambda_e: f64,
    r: f64,
    alpha: PathLossExponent,
    n: AntennaCount,
    p_total: f64,
}

fn positive(name: &'static str, v: f64) -> Result<f64> {
    if v.is_finite() && v > 0.0 {
        Ok(v)
    } else {
        Err(Error::domain(name, v, "must be positive and finite"))
    }
}

impl NetworkParams {
    /// Validates and bundles the network parameters.
    pub fn new(
        lambda_l: f64,
        lambda_e: f64,
        r: f64,
        alpha: f64,
        n: u32,
        p_total: f64,
    ) -> Result<Self> {
        let lambda_l = positive("lambda_l", lambda_l)?;
        if !lambda_e.is_finite() || lambda_e < 0.0 {
            return Err(Error::domain(
                "lambda_e",
                lambda_e,
                "must be nonnegative and finite",
            ));
        }
        Ok(NetworkParams {
            lambda_l,
            lambda_e,
            r: positive("r", r)?,
            alpha: PathLossExponent::new(alpha)?,
            n: AntennaCount::new(n)?,
            p_total: positive("p_total", p_total)?,
        })
    }

    /// Transmitter density.
    pub fn lambda_l(&self) -> f64 {
        self.lambda_l
    }
    /// Eavesdropper density.
    pub fn lambda_e(&self) -> f64 {
        self.lambda_e
    }
    /// Transmitter to intended receiver distance.
    pub fn r(&self) -> f64 {
        self.r
    }
    /// Path-loss exponent.
    pub fn alpha(&self) -> PathLossExponent {
        self.alpha
    }
    /// Antenna count.
    pub fn n(&self) -> AntennaCount {
        self.n
    }
    /// Total transmit power.
    pub fn p_total(&self) -> f64 {
        self.p_total
    }

    /// Copy with a different antenna count.
    pub fn with_n(self, n: u32) -> Result<Self> {
        Ok(NetworkParams {
            n: AntennaCount::new(n)?,
            ..self
        })
    }
    /// Copy with a different path-loss exponent.
    pub fn with_alpha(self, alpha: f64) -> Result<Self> {
        Ok(NetworkParams {
            alpha: PathLossExponent::new(alpha)?,
            ..self
        })
    }
    /// Copy with a different transmitter density.
    pub fn with_lambda_l(self, lambda_l: f64) -> Result<Self> {
        Ok(NetworkParams {
            lambda_l: positive("lambda_l", lambda_l)?,
            ..self
        })
    }
    /// Copy with a different eavesdropper density.
    pub fn with_lambda_e(self, lambda_e: f64) -> Result<Self> {
        Self::new(
            self.lambda_l,
            lambda_e,
            self.r,
            self.alpha.get(),
            self.n.get(),
            self.p_total,
        )
    }
    /// Copy with a different link distance.
    pub fn with_r(self, r: f64) -> Result<Self> {
        Ok(NetworkParams {
            r: positive("r", r)?,
            ..self
        })
    }

    /// Power split at this network's total power.
    pub fn split(&self, phi: f64) -> Result<PowerSplit> {
        PowerSplit::new(phi, self.p_total)
    }
}

/// Fraction `phi ∈ (0, 1]` of the total power carried by the information
/// signal; the remainder feeds the artificial noise.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PowerSplit {
    phi: f64,
    p_total: f64,
}

impl PowerSplit {
    /// `phi = 0` is rejected: the connection outage is then identically one.
    pub fn new(phi: f64, p_total: f64) -> Result<Self> {
        if !(phi > 0.0 && phi <= 1.0) {
            return Err(Error::domain("phi", phi, "must lie in (0, 1]"));
        }
        Ok(PowerSplit {
            phi,
            p_total: positive("p_total", p_total)?,
        })
    }

    /// Information power ratio.
    pub fn phi(&self) -> f64 {
        self.phi
    }
    /// Total power.
    pub fn p_total(&self) -> f64 {
        self.p_total
    }
    /// Information-signal power `P·φ`.
    ///
    /// Rounded so that `p_info() + p_noise()` reproduces `p_total` exactly.
    pub fn p_info(&self) -> f64 {
        self.p_total - self.p_noise()
    }
    /// Artificial-noise power `P·(1 − φ)`.
    pub fn p_noise(&self) -> f64 {
        self.p_total - self.p_total * self.phi
    }
    /// `1/φ − 1`, the noise-to-information power ratio.
    pub fn noise_ratio(&self) -> f64 {
        (1.0 - self.phi) / self.phi
    }
    /// True when no power goes to artificial noise.
    pub fn is_noiseless(&self) -> bool {
        self.phi >= 1.0
    }
}

/// Connection and secrecy SIR thresholds (linear scale).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SirThresholds {
    /// Connection threshold `β_b`.
    pub beta_b: f64,
    /// Secrecy threshold `β_e`.
    pub beta_e: f64,
}

impl SirThresholds {
    /// Both thresholds must be positive.
    pub fn new(beta_b: f64, beta_e: f64) -> Result<Self> {
        Ok(SirThresholds {
            beta_b: positive("beta_b", beta_b)?,
            beta_e: positive("beta_e", beta_e)?,
        })
    }
}
