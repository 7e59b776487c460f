//! Run settings: built-in defaults, overridden by a `key = value` file, then
//! by command-line flags.

use std::path::Path;

use ansec_core::montecarlo::{McConfig, SimWindow};
use ansec_core::{NetworkParams, PowerSplit};

use crate::error::{CliError, Result};

/// Every tunable a command can read. Defaults: `λ_l = 0.01`, `λ_e = 0.001`,
/// `r = 1`, `α = 4`, `N = 4`, `β_b = 10`, `β_e = 1`, `σ = 0.1`, `ε = 0.01`.
#[derive(Clone, Debug, PartialEq)]
pub struct Settings {
    pub lambda_l: f64,
    pub lambda_e: f64,
    pub r: f64,
    pub alpha: f64,
    pub n: u32,
    pub p_total: f64,
    pub phi: f64,
    pub beta_b: f64,
    pub beta_e: f64,
    pub sigma: f64,
    pub epsilon: f64,
    pub trials: u64,
    pub seed: u64,
    pub delta_trunc: f64,
    /// Simulation window radius; `None` sizes it from `delta_trunc`.
    pub window: Option<f64>,
}

impl Default for Settings {
    fn default() -> Self {
        Settings {
            lambda_l: 0.01,
            lambda_e: 0.001,
            r: 1.0,
            alpha: 4.0,
            n: 4,
            p_total: 1.0,
            phi: 0.5,
            beta_b: 10.0,
            beta_e: 1.0,
            sigma: 0.1,
            epsilon: 0.01,
            trials: ansec_core::montecarlo::DEFAULT_TRIALS,
            seed: 1,
            delta_trunc: ansec_core::montecarlo::DEFAULT_DELTA_TRUNC,
            window: None,
        }
    }
}

/// Keys accepted by [`Settings::set`], in metadata order.
pub const KEYS: &[&str] = &[
    "lambda_l",
    "lambda_e",
    "r",
    "alpha",
    "n",
    "p_total",
    "phi",
    "beta_b",
    "beta_e",
    "sigma",
    "epsilon",
    "trials",
    "seed",
    "delta_trunc",
    "window",
];

fn parse<T: std::str::FromStr>(key: &str, value: &str) -> Result<T> {
    value
        .trim()
        .parse()
        .map_err(|_| CliError::usage(format!("{key}: cannot parse {value:?}")))
}

fn canonical(key: &str) -> String {
    key.trim().replace('-', "_").to_ascii_lowercase()
}

impl Settings {
    /// Sets one key from its textual value. Dashes and underscores are
    /// interchangeable in `key`.
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        let key = canonical(key);
        match key.as_str() {
            "n" => self.n = parse(&key, value)?,
            "trials" => self.trials = parse(&key, value)?,
            "seed" => self.seed = parse(&key, value)?,
            "window" => {
                self.window = match value.trim() {
                    "auto" => None,
                    v => Some(parse(&key, v)?),
                }
            }
            _ => self.set_f64(&key, parse(&key, value)?)?,
        }
        Ok(())
    }

    /// Sets a numeric key; `n` must be a whole number.
    pub fn set_f64(&mut self, key: &str, v: f64) -> Result<()> {
        let key = canonical(key);
        let slot = match key.as_str() {
            "lambda_l" => &mut self.lambda_l,
            "lambda_e" => &mut self.lambda_e,
            "r" => &mut self.r,
            "alpha" => &mut self.alpha,
            "p_total" => &mut self.p_total,
            "phi" => &mut self.phi,
            "beta_b" => &mut self.beta_b,
            "beta_e" => &mut self.beta_e,
            "sigma" => &mut self.sigma,
            "epsilon" => &mut self.epsilon,
            "delta_trunc" => &mut self.delta_trunc,
            "n" => {
                if !(v >= 1.0 && v <= u32::MAX as f64 && v.fract() == 0.0) {
                    return Err(CliError::usage(format!(
                        "n must be a whole number >= 2 (got {v})"
                    )));
                }
                self.n = v as u32;
                return Ok(());
            }
            "window" => {
                self.window = Some(v);
                return Ok(());
            }
            _ => {
                return Err(CliError::usage(format!(
                    "unknown parameter {key:?}; expected one of {}",
                    KEYS.join(", ")
                )))
            }
        };
        *slot = v;
        Ok(())
    }

    /// Applies `key = value` lines; blank lines and `#` comments are skipped.
    pub fn apply_str(&mut self, text: &str) -> Result<()> {
        for (i, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| CliError::usage(format!("line {}: expected key = value", i + 1)))?;
            self.set(k, v)?;
        }
        Ok(())
    }

    pub fn apply_file(&mut self, path: &Path) -> Result<()> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        self.apply_str(&text)
    }

    /// `(key, value)` pairs in [`KEYS`] order; floats use the shortest
    /// representation that parses back to the same value.
    pub fn pairs(&self) -> Vec<(&'static str, String)> {
        let f = |v: f64| format!("{v:?}");
        vec![
            ("lambda_l", f(self.lambda_l)),
            ("lambda_e", f(self.lambda_e)),
            ("r", f(self.r)),
            ("alpha", f(self.alpha)),
            ("n", self.n.to_string()),
            ("p_total", f(self.p_total)),
            ("phi", f(self.phi)),
            ("beta_b", f(self.beta_b)),
            ("beta_e", f(self.beta_e)),
            ("sigma", f(self.sigma)),
            ("epsilon", f(self.epsilon)),
            ("trials", self.trials.to_string()),
            ("seed", self.seed.to_string()),
            ("delta_trunc", f(self.delta_trunc)),
            ("window", self.window.map_or("auto".into(), f)),
        ]
    }

    pub fn network(&self) -> Result<NetworkParams> {
        Ok(NetworkParams::new(
            self.lambda_l,
            self.lambda_e,
            self.r,
            self.alpha,
            self.n,
            self.p_total,
        )?)
    }

    pub fn split(&self) -> Result<PowerSplit> {
        Ok(PowerSplit::new(self.phi, self.p_total)?)
    }

    pub fn mc_config(&self, params: &NetworkParams) -> Result<McConfig> {
        let cfg = McConfig::with_delta(params, self.trials, self.seed, self.delta_trunc)?;
        Ok(match self.window {
            Some(radius) => cfg.with_window(SimWindow::new(radius, params.r())?),
            None => cfg,
        })
    }
}
