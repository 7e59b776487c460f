//! Parallel Monte Carlo driver and analytic cross-checks.

use ansec_core::montecarlo::{Experiment, McConfig, McEstimate, Scenario};
use ansec_core::{beamforming as bf, sectoring as sec, NetworkParams, PowerSplit};
use clap::ValueEnum;
use rayon::prelude::*;

use crate::config::Settings;
use crate::error::Result;
use crate::output::Table;
use crate::quantity::Scheme;

/// Trials per parallel work unit. Each trial owns its RNG stream, so the
/// chunking does not affect the result.
const CHUNK: u64 = 2048;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SimQuantity {
    Pco,
    Pso,
}

impl SimQuantity {
    pub fn name(self) -> &'static str {
        match self {
            SimQuantity::Pco => "pco",
            SimQuantity::Pso => "pso",
        }
    }
}

pub fn scenario(scheme: Scheme, q: SimQuantity) -> Scenario {
    match (scheme, q) {
        (Scheme::Sectoring, SimQuantity::Pco) => Scenario::SectoringPco,
        (Scheme::Sectoring, SimQuantity::Pso) => Scenario::SectoringPso,
        (Scheme::Beamforming, SimQuantity::Pco) => Scenario::BeamformingPco,
        (Scheme::Beamforming, SimQuantity::Pso) => Scenario::BeamformingPso,
    }
}

/// Counts outages over trial indices `offset .. offset + cfg.trials` on the
/// rayon pool. Bit-identical to the sequential run for any thread count.
pub fn run_parallel(exp: &Experiment, cfg: &McConfig, offset: u64) -> McEstimate {
    let end = offset + cfg.trials;
    let hits: u64 = (offset..end)
        .step_by(CHUNK as usize)
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|lo| exp.count(cfg.seed, lo..(lo + CHUNK).min(end)))
        .sum();
    McEstimate::from_count(hits, cfg.trials, cfg.seed)
}

/// Estimate plus the analytic values it is checked against.
#[derive(Clone, Debug)]
pub struct SimReport {
    pub scheme: Scheme,
    pub quantity: SimQuantity,
    pub estimate: McEstimate,
    pub window: f64,
    /// `(name, value)`; `pco` for connection outage, `pso_lb` and `pso_ub`
    /// for secrecy outage.
    pub analytic: Vec<(String, f64)>,
    pub pass: bool,
}

/// Standard error used for the 3-SE checks: the larger of the empirical one
/// and the one implied by the reference probability, so a zero-hit run is
/// not declared exact.
pub fn check_se(est: &McEstimate, reference: f64) -> f64 {
    let n = est.trials as f64;
    est.std_err.max((reference * (1.0 - reference) / n).sqrt())
}

/// `true` when `lo − 3·SE ≤ p̂ ≤ hi + 3·SE`.
pub fn within(est: &McEstimate, lo: f64, hi: f64) -> bool {
    let se = check_se(est, lo).max(check_se(est, hi));
    est.p_hat >= lo - 3.0 * se && est.p_hat <= hi + 3.0 * se
}

/// Analytic comparators for one point.
pub fn analytic(
    scheme: Scheme,
    q: SimQuantity,
    p: &NetworkParams,
    split: &PowerSplit,
    beta: f64,
) -> Result<Vec<(String, f64)>> {
    Ok(match (scheme, q) {
        (Scheme::Sectoring, SimQuantity::Pco) => {
            vec![("pco".into(), sec::connection_outage(p, split, beta)?)]
        }
        (Scheme::Beamforming, SimQuantity::Pco) => {
            vec![("pco".into(), bf::connection_outage_exact(p, split, beta)?)]
        }
        (Scheme::Sectoring, SimQuantity::Pso) => vec![
            ("pso_lb".into(), sec::secrecy_outage_lb(p, split, beta)?),
            ("pso_ub".into(), sec::secrecy_outage_ub(p, split, beta)?),
        ],
        (Scheme::Beamforming, SimQuantity::Pso) => vec![
            ("pso_lb".into(), bf::secrecy_outage_lb(p, split, beta)?),
            ("pso_ub".into(), bf::secrecy_outage_ub(p, split, beta)?),
        ],
    })
}

/// Simulates one point with trial indices starting at `offset`.
pub fn simulate_at(scheme: Scheme, q: SimQuantity, s: &Settings, offset: u64) -> Result<SimReport> {
    let p = s.network()?;
    let split = s.split()?;
    let cfg = s.mc_config(&p)?;
    let beta = match q {
        SimQuantity::Pco => s.beta_b,
        SimQuantity::Pso => s.beta_e,
    };
    let analytic = analytic(scheme, q, &p, &split, beta)?;
    let exp = Experiment::new(scenario(scheme, q), p, split, beta, cfg.window)?;
    let estimate = run_parallel(&exp, &cfg, offset);
    let lo = analytic[0].1;
    let hi = analytic[analytic.len() - 1].1;
    Ok(SimReport {
        scheme,
        quantity: q,
        estimate,
        window: cfg.window.radius(),
        pass: within(&estimate, lo, hi),
        analytic,
    })
}

pub fn simulate(scheme: Scheme, q: SimQuantity, s: &Settings) -> Result<SimReport> {
    simulate_at(scheme, q, s, 0)
}

/// Column names of the MC part of a row.
pub const MC_COLUMNS: [&str; 4] = ["mc_p", "mc_se", "mc_ci_lo", "mc_ci_hi"];

pub fn mc_values(est: &McEstimate) -> [f64; 4] {
    [est.p_hat, est.std_err, est.ci95.0, est.ci95.1]
}

impl SimReport {
    /// One-row table with metadata; stable across runs with the same seed.
    pub fn to_table(&self, s: &Settings) -> Table {
        let mut meta = crate::base_meta("simulate");
        meta.push(("scheme".into(), self.scheme.name().into()));
        meta.push(("quantity".into(), self.quantity.name().into()));
        meta.extend(s.pairs().into_iter().map(|(k, v)| (k.to_owned(), v)));
        meta.push(("window_radius".into(), format!("{:?}", self.window)));
        let mut columns: Vec<String> = MC_COLUMNS.iter().map(|c| c.to_string()).collect();
        columns.extend(self.analytic.iter().map(|(k, _)| k.clone()));
        columns.push("pass".into());
        let mut row = mc_values(&self.estimate).to_vec();
        row.extend(self.analytic.iter().map(|(_, v)| *v));
        row.push(if self.pass { 1.0 } else { 0.0 });
        let mut t = Table::new(meta, columns);
        t.rows.push(row);
        t
    }

    pub fn summary(&self) -> String {
        let e = &self.estimate;
        let mut s = format!(
            "{} {} estimate {:.6} (se {:.2e}, 95% CI [{:.6}, {:.6}], {} trials, seed {})\n",
            self.scheme.name(),
            self.quantity.name(),
            e.p_hat,
            e.std_err,
            e.ci95.0,
            e.ci95.1,
            e.trials,
            e.seed
        );
        for (k, v) in &self.analytic {
            s += &format!("  {k} = {v:.6}\n");
        }
        s += if self.pass { "PASS\n" } else { "FAIL\n" };
        s
    }
}
