//! Point evaluation of analytic quantities.

use ansec_core::{beamforming as bf, sectoring as sec, Error};
use clap::ValueEnum;

use crate::config::Settings;
use crate::error::{CliError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, ValueEnum)]
pub enum Scheme {
    Sectoring,
    Beamforming,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum Quantity {
    /// Connection outage (exact for both schemes).
    Pco,
    PsoUb,
    PsoLb,
    PsoLead,
    /// Beamforming only.
    PcoExact,
    /// Beamforming only.
    PcoApprox,
    /// Secrecy transmission capacity at the configured `phi`.
    Capacity,
    /// Capacity-maximizing `phi` and the capacity it reaches.
    PhiOpt,
}

/// How a value relates to the true quantity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Exact,
    Bound,
    Approximation,
}

impl Scheme {
    pub fn name(self) -> &'static str {
        match self {
            Scheme::Sectoring => "sectoring",
            Scheme::Beamforming => "beamforming",
        }
    }
}

impl Quantity {
    pub fn name(self) -> &'static str {
        self.columns()[0]
    }

    pub fn kind(self, scheme: Scheme) -> Kind {
        use Quantity::*;
        match (scheme, self) {
            (_, PsoUb | PsoLb) => Kind::Bound,
            (_, PsoLead | PcoApprox) => Kind::Approximation,
            (Scheme::Sectoring, Capacity | PhiOpt) => Kind::Bound,
            (Scheme::Beamforming, Capacity | PhiOpt) => Kind::Approximation,
            _ => Kind::Exact,
        }
    }

    /// Column names produced by [`evaluate`]; the first one names the
    /// quantity.
    pub fn columns(self) -> &'static [&'static str] {
        match self {
            Quantity::Pco => &["pco"],
            Quantity::PsoUb => &["pso_ub"],
            Quantity::PsoLb => &["pso_lb"],
            Quantity::PsoLead => &["pso_lead"],
            Quantity::PcoExact => &["pco_exact"],
            Quantity::PcoApprox => &["pco_approx"],
            Quantity::Capacity => &["capacity", "r_b", "r_e", "feasible"],
            Quantity::PhiOpt => &["phi_opt", "capacity_opt", "feasible"],
        }
    }
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Exact => "exact",
            Kind::Bound => "bound",
            Kind::Approximation => "approximation",
        }
    }
}

fn flag(b: bool) -> f64 {
    if b {
        1.0
    } else {
        0.0
    }
}

/// Evaluates `quantity` at `s`, returning values in [`Quantity::columns`]
/// order. Infeasible capacity points yield zero capacity with `feasible = 0`
/// instead of an error.
pub fn evaluate(scheme: Scheme, quantity: Quantity, s: &Settings) -> Result<Vec<f64>> {
    use Quantity::*;
    let p = s.network()?;
    let needs_split = !matches!(quantity, PhiOpt);
    let split = if needs_split { Some(s.split()?) } else { None };
    let sp = || split.expect("split evaluated");
    Ok(match (scheme, quantity) {
        (Scheme::Sectoring, Pco) => vec![sec::connection_outage(&p, &sp(), s.beta_b)?],
        (Scheme::Sectoring, PsoUb) => vec![sec::secrecy_outage_ub(&p, &sp(), s.beta_e)?],
        (Scheme::Sectoring, PsoLb) => vec![sec::secrecy_outage_lb(&p, &sp(), s.beta_e)?],
        (Scheme::Sectoring, PsoLead) => vec![sec::secrecy_outage_lead(&p, &sp(), s.beta_e)?],
        (Scheme::Sectoring, PcoExact | PcoApprox) => {
            return Err(CliError::usage(format!(
                "{} is a beamforming quantity; use pco for sectoring",
                quantity.name()
            )))
        }
        (Scheme::Beamforming, Pco | PcoExact) => {
            vec![bf::connection_outage_exact(&p, &sp(), s.beta_b)?]
        }
        (Scheme::Beamforming, PcoApprox) => {
            vec![bf::connection_outage_approx(&p, &sp(), s.beta_b)?.value()]
        }
        (Scheme::Beamforming, PsoUb) => vec![bf::secrecy_outage_ub(&p, &sp(), s.beta_e)?],
        (Scheme::Beamforming, PsoLb) => vec![bf::secrecy_outage_lb(&p, &sp(), s.beta_e)?],
        (Scheme::Beamforming, PsoLead) => vec![bf::secrecy_outage_lead(&p, &sp(), s.beta_e)?],
        (_, Capacity) => {
            let rt = match scheme {
                Scheme::Sectoring => sec::rates(&p, &sp(), s.sigma, s.epsilon)?,
                Scheme::Beamforming => bf::rates_approx(&p, &sp(), s.sigma, s.epsilon)?,
            };
            let c = ansec_core::throughput::stc(p.lambda_l(), s.sigma, rt);
            vec![c, rt.r_b(), rt.r_e(), flag(c > 0.0)]
        }
        (_, PhiOpt) => {
            let opt = match scheme {
                Scheme::Sectoring => sec::optimal_phi_numeric(&p, s.sigma, s.epsilon),
                Scheme::Beamforming => bf::optimal_phi_numeric(&p, s.sigma, s.epsilon),
            };
            match opt {
                Ok(split) => {
                    let mut at = s.clone();
                    at.phi = split.phi();
                    let c = evaluate(scheme, Capacity, &at)?[0];
                    vec![split.phi(), c, 1.0]
                }
                Err(Error::Infeasible(_)) => vec![f64::NAN, 0.0, 0.0],
                Err(e) => return Err(e.into()),
            }
        }
    })
}

/// Evaluates and pairs values with their column names.
pub fn evaluate_named(
    scheme: Scheme,
    quantity: Quantity,
    s: &Settings,
) -> Result<Vec<(String, f64)>> {
    let v = evaluate(scheme, quantity, s)?;
    Ok(quantity
        .columns()
        .iter()
        .map(|c| c.to_string())
        .zip(v)
        .collect())
}
