//! Parameter sweeps over one swept parameter.

use rayon::prelude::*;

use crate::config::Settings;
use crate::error::{CliError, Result};
use crate::output::Table;
use crate::quantity::{evaluate, Quantity, Scheme};

#[derive(Clone, Debug, PartialEq)]
pub struct SweepSpec {
    pub schemes: Vec<Scheme>,
    pub quantities: Vec<Quantity>,
    pub param: String,
    pub start: f64,
    pub stop: f64,
    pub count: usize,
    pub log: bool,
}

const SWEEPABLE: &[&str] = &[
    "phi", "n", "alpha", "lambda_l", "lambda_e", "r", "p_total", "beta_b", "beta_e", "sigma",
    "epsilon",
];

impl SweepSpec {
    pub fn validate(&self) -> Result<()> {
        if self.count < 2 {
            return Err(CliError::usage(format!(
                "count must be at least 2 (got {})",
                self.count
            )));
        }
        if self.schemes.is_empty() || self.quantities.is_empty() {
            return Err(CliError::usage("need at least one scheme and one quantity"));
        }
        let param = self.param.replace('-', "_");
        if !SWEEPABLE.contains(&param.as_str()) {
            return Err(CliError::usage(format!(
                "cannot sweep {:?}; expected one of {}",
                self.param,
                SWEEPABLE.join(", ")
            )));
        }
        if !(self.start.is_finite() && self.stop.is_finite()) {
            return Err(CliError::usage("range ends must be finite"));
        }
        if self.log && !(self.start > 0.0 && self.stop > 0.0) {
            return Err(CliError::usage("log range needs positive ends"));
        }
        Ok(())
    }

    /// Grid in ascending order of index; both ends are hit exactly and `n`
    /// is rounded to whole numbers.
    pub fn grid(&self) -> Vec<f64> {
        let last = (self.count - 1) as f64;
        let mut g: Vec<f64> = (0..self.count)
            .map(|i| {
                let t = i as f64 / last;
                if i + 1 == self.count {
                    self.stop
                } else if self.log {
                    (self.start.ln() + t * (self.stop.ln() - self.start.ln())).exp()
                } else {
                    self.start + t * (self.stop - self.start)
                }
            })
            .collect();
        if self.param == "n" {
            for v in &mut g {
                *v = v.round();
            }
        }
        g
    }

    pub fn columns(&self) -> Vec<String> {
        let mut cols = vec![self.param.clone()];
        for s in &self.schemes {
            for q in &self.quantities {
                for c in q.columns() {
                    cols.push(format!("{}_{c}", s.name()));
                }
            }
        }
        cols
    }

    fn meta(&self, base: &Settings) -> Vec<(String, String)> {
        let names = |v: Vec<&str>| v.join(";");
        let mut m = crate::base_meta("sweep");
        m.push((
            "schemes".into(),
            names(self.schemes.iter().map(|s| s.name()).collect()),
        ));
        m.push((
            "quantities".into(),
            names(self.quantities.iter().map(|q| q.name()).collect()),
        ));
        let kinds: Vec<String> = self
            .schemes
            .iter()
            .flat_map(|s| {
                self.quantities
                    .iter()
                    .map(move |q| format!("{}_{}:{}", s.name(), q.name(), q.kind(*s).name()))
            })
            .collect();
        m.push(("kinds".into(), kinds.join(";")));
        m.push(("param".into(), self.param.clone()));
        m.push(("start".into(), format!("{:?}", self.start)));
        m.push(("stop".into(), format!("{:?}", self.stop)));
        m.push(("count".into(), self.count.to_string()));
        m.push((
            "spacing".into(),
            if self.log { "log" } else { "linear" }.into(),
        ));
        m.extend(base.pairs().into_iter().map(|(k, v)| (k.to_owned(), v)));
        m
    }
}

/// Evaluates one grid point: the swept value followed by every
/// scheme/quantity column.
pub fn row(spec: &SweepSpec, base: &Settings, value: f64) -> Result<Vec<f64>> {
    let mut s = base.clone();
    s.set_f64(&spec.param, value)?;
    let mut out = vec![value];
    for scheme in &spec.schemes {
        for q in &spec.quantities {
            out.extend(evaluate(*scheme, *q, &s)?);
        }
    }
    Ok(out)
}

/// Runs the sweep; grid points are evaluated in parallel and returned in
/// grid order.
pub fn run(spec: &SweepSpec, base: &Settings) -> Result<Table> {
    spec.validate()?;
    let rows = spec
        .grid()
        .into_par_iter()
        .map(|v| row(spec, base, v))
        .collect::<Result<Vec<_>>>()?;
    let mut t = Table::new(spec.meta(base), spec.columns());
    t.rows = rows;
    Ok(t)
}

fn parse_list<T: clap::ValueEnum>(s: &str) -> Result<Vec<T>> {
    s.split(';')
        .map(|x| T::from_str(x, false).map_err(CliError::usage))
        .collect()
}

fn meta_field<'a>(t: &'a Table, key: &str) -> Result<&'a str> {
    t.meta(key)
        .ok_or_else(|| CliError::usage(format!("missing metadata key {key:?}")))
}

/// Rebuilds the sweep definition and base settings from a sweep table's metadata.
pub fn from_meta(t: &Table) -> Result<(SweepSpec, Settings)> {
    let num = |k: &str| -> Result<f64> {
        meta_field(t, k)?
            .parse()
            .map_err(|_| CliError::usage(format!("bad metadata value for {k}")))
    };
    let spec = SweepSpec {
        schemes: parse_list(meta_field(t, "schemes")?)?,
        quantities: parse_list(meta_field(t, "quantities")?)?,
        param: meta_field(t, "param")?.to_owned(),
        start: num("start")?,
        stop: num("stop")?,
        count: num("count")? as usize,
        log: meta_field(t, "spacing")? == "log",
    };
    let mut s = Settings::default();
    for k in crate::config::KEYS {
        s.set(k, meta_field(t, k)?)?;
    }
    Ok((spec, s))
}
