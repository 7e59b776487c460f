//! Data series for the six standard figures.
//!
//! Every file is a sweep table (see [`crate::sweep`]) so its analytic columns
//! can be rebuilt from the metadata. Figures 1 to 3 carry extra Monte Carlo
//! columns; the trials of grid point `i` use streams
//! `i·trials .. (i + 1)·trials` of the configured seed.

use std::path::{Path, PathBuf};

use rayon::prelude::*;

use crate::config::Settings;
use crate::error::{CliError, Result};
use crate::output::Table;
use crate::quantity::{Quantity, Scheme};
use crate::simulate::{mc_values, simulate_at, SimQuantity, MC_COLUMNS};
use crate::sweep::{self, SweepSpec};

/// One output file.
#[derive(Clone, Debug)]
pub struct Curve {
    pub name: String,
    pub spec: SweepSpec,
    pub settings: Settings,
    /// Scheme and quantity of the Monte Carlo columns, if any.
    pub mc: Option<(Scheme, SimQuantity)>,
}

fn phi_spec(schemes: Vec<Scheme>, quantities: Vec<Quantity>) -> SweepSpec {
    SweepSpec {
        schemes,
        quantities,
        param: "phi".into(),
        start: 0.05,
        stop: 0.95,
        count: 19,
        log: false,
    }
}

fn n_spec() -> SweepSpec {
    SweepSpec {
        schemes: vec![Scheme::Sectoring, Scheme::Beamforming],
        quantities: vec![Quantity::PhiOpt],
        param: "n".into(),
        start: 2.0,
        stop: 64.0,
        count: 63,
        log: false,
    }
}

/// Caption parameters on top of the run-wide trials, seed and window.
fn caption(run: &Settings, f: impl FnOnce(&mut Settings)) -> Settings {
    let mut s = Settings {
        trials: run.trials,
        seed: run.seed,
        delta_trunc: run.delta_trunc,
        window: run.window,
        ..Settings::default()
    };
    s.lambda_l = 0.01;
    s.lambda_e = 0.001;
    s.r = 1.0;
    s.alpha = 4.0;
    f(&mut s);
    s
}

/// Curves of figure `fig`, or a usage error for an unknown id.
pub fn curves(fig: u8, run: &Settings) -> Result<Vec<Curve>> {
    use Quantity::*;
    let mut out = Vec::new();
    match fig {
        1 => {
            for n in [2, 4, 8] {
                out.push(Curve {
                    name: format!("fig1_n{n}"),
                    spec: phi_spec(vec![Scheme::Sectoring], vec![PsoUb, PsoLb, PsoLead]),
                    settings: caption(run, |s| {
                        s.n = n;
                        s.beta_e = 1.0;
                    }),
                    mc: Some((Scheme::Sectoring, SimQuantity::Pso)),
                });
            }
        }
        2 => {
            for n in [2, 4] {
                out.push(Curve {
                    name: format!("fig2_n{n}"),
                    spec: phi_spec(vec![Scheme::Beamforming], vec![PcoExact, PcoApprox]),
                    settings: caption(run, |s| {
                        s.n = n;
                        s.beta_b = 3.0;
                    }),
                    mc: Some((Scheme::Beamforming, SimQuantity::Pco)),
                });
            }
        }
        3 => {
            for n in [2, 4, 8] {
                out.push(Curve {
                    name: format!("fig3_n{n}"),
                    spec: phi_spec(vec![Scheme::Beamforming], vec![PsoUb, PsoLb, PsoLead]),
                    settings: caption(run, |s| {
                        s.n = n;
                        s.beta_e = 3.0;
                    }),
                    mc: Some((Scheme::Beamforming, SimQuantity::Pso)),
                });
            }
        }
        4 => {
            for scheme in [Scheme::Sectoring, Scheme::Beamforming] {
                out.push(Curve {
                    name: format!("fig4_{}", scheme.name()),
                    spec: phi_spec(vec![scheme], vec![Pco, PsoUb]),
                    settings: caption(run, |s| {
                        s.n = 4;
                        s.beta_b = 10.0;
                        s.beta_e = 1.0;
                    }),
                    mc: None,
                });
            }
        }
        5 | 6 => {
            let eps: &[f64] = if fig == 5 { &[0.01] } else { &[0.01, 0.001] };
            for &e in eps {
                for alpha in [3.0, 4.0, 5.0] {
                    let suffix = if e == 0.01 {
                        String::new()
                    } else {
                        format!("_eps{e}")
                    };
                    out.push(Curve {
                        name: format!("fig{fig}_alpha{alpha}{suffix}"),
                        spec: n_spec(),
                        settings: caption(run, |s| {
                            s.alpha = alpha;
                            s.sigma = 0.1;
                            s.epsilon = e;
                        }),
                        mc: None,
                    });
                }
            }
        }
        _ => {
            return Err(CliError::usage(format!(
                "unknown figure {fig}; expected 1 to 6"
            )))
        }
    }
    Ok(out)
}

/// Builds the table of one curve.
pub fn table(curve: &Curve) -> Result<Table> {
    let mut t = sweep::run(&curve.spec, &curve.settings)?;
    t.meta[0].1 = "reproduce".into();
    t.meta.insert(1, ("curve".into(), curve.name.clone()));
    let Some((scheme, q)) = curve.mc else {
        return Ok(t);
    };
    t.columns.extend(MC_COLUMNS.iter().map(|c| c.to_string()));
    let trials = curve.settings.trials;
    let mc = t
        .rows
        .par_iter()
        .enumerate()
        .map(|(i, row)| {
            let mut s = curve.settings.clone();
            s.set_f64(&curve.spec.param, row[0])?;
            simulate_at(scheme, q, &s, i as u64 * trials).map(|r| mc_values(&r.estimate))
        })
        .collect::<Result<Vec<_>>>()?;
    for (row, v) in t.rows.iter_mut().zip(mc) {
        row.extend(v);
    }
    Ok(t)
}

/// Writes every curve of `fig` as `<dir>/<curve>.csv`.
pub fn reproduce(fig: u8, run: &Settings, dir: &Path) -> Result<Vec<PathBuf>> {
    let mut written = Vec::new();
    for c in curves(fig, run)? {
        let t = table(&c)?;
        let path = dir.join(format!("{}.csv", c.name));
        t.write(&path, false)?;
        log::info!("wrote {}", path.display());
        written.push(path);
    }
    Ok(written)
}
