//! Command-line interface.

use std::io::Write;
use std::path::PathBuf;

use ansec_core::sectoring as sec;
use clap::{Args, Parser, Subcommand};

use crate::config::Settings;
use crate::error::{CliError, Result};
use crate::output::render_record;
use crate::quantity::{evaluate_named, Quantity, Scheme};
use crate::simulate::{simulate, SimQuantity};
use crate::sweep::SweepSpec;
use crate::{base_meta, reproduce, sweep};

#[derive(Debug, Parser)]
#[command(
    name = "ansec",
    version,
    about = "Outage and secrecy capacity of artificial-noise sectoring and beamforming"
)]
pub struct Cli {
    /// `key = value` file applied before command-line flags.
    #[arg(long, global = true, value_name = "FILE")]
    pub config: Option<PathBuf>,
    /// Emit JSON instead of text or CSV.
    #[arg(long, global = true)]
    pub json: bool,
    /// Worker threads for sweeps and simulations (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

/// Model and simulation parameters; unset flags keep the config-file or
/// default value.
#[derive(Debug, Default, Clone, Args)]
pub struct ParamArgs {
    #[arg(long)]
    pub lambda_l: Option<f64>,
    #[arg(long)]
    pub lambda_e: Option<f64>,
    #[arg(long)]
    pub r: Option<f64>,
    #[arg(long)]
    pub alpha: Option<f64>,
    /// Antenna count.
    #[arg(long)]
    pub n: Option<u32>,
    #[arg(long)]
    pub p_total: Option<f64>,
    /// Fraction of power on the information signal.
    #[arg(long)]
    pub phi: Option<f64>,
    #[arg(long)]
    pub beta_b: Option<f64>,
    #[arg(long)]
    pub beta_e: Option<f64>,
    /// Connection outage constraint.
    #[arg(long)]
    pub sigma: Option<f64>,
    /// Secrecy outage constraint.
    #[arg(long)]
    pub epsilon: Option<f64>,
    /// Monte Carlo trials.
    #[arg(long)]
    pub trials: Option<u64>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Tolerated relative truncation bias when sizing the window.
    #[arg(long)]
    pub delta_trunc: Option<f64>,
    /// Explicit simulation window radius.
    #[arg(long)]
    pub window: Option<f64>,
}

impl ParamArgs {
    fn apply(&self, s: &mut Settings) {
        macro_rules! put {
            ($($f:ident),*) => { $( if let Some(v) = self.$f { s.$f = v; } )* };
        }
        put!(
            lambda_l,
            lambda_e,
            r,
            alpha,
            n,
            p_total,
            phi,
            beta_b,
            beta_e,
            sigma,
            epsilon,
            trials,
            seed,
            delta_trunc
        );
        if self.window.is_some() {
            s.window = self.window;
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate one quantity at one parameter point.
    Eval {
        #[arg(value_enum)]
        scheme: Scheme,
        #[arg(value_enum)]
        quantity: Quantity,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Evaluate quantities over a range of one parameter.
    Sweep {
        #[arg(long, value_enum, value_delimiter = ',', required = true)]
        scheme: Vec<Scheme>,
        #[arg(long, value_enum, value_delimiter = ',', required = true)]
        quantity: Vec<Quantity>,
        /// Swept parameter, e.g. phi or n.
        #[arg(long)]
        param: String,
        #[arg(long, allow_negative_numbers = true)]
        start: f64,
        #[arg(long, allow_negative_numbers = true)]
        stop: f64,
        #[arg(long)]
        count: usize,
        /// Logarithmic spacing.
        #[arg(long)]
        log: bool,
        /// Output file; standard output when absent.
        #[arg(long, short)]
        out: Option<PathBuf>,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Maximize the secrecy transmission capacity over the power split.
    Optimize {
        #[arg(value_enum)]
        scheme: Scheme,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Monte Carlo estimate checked against the analytic value.
    Simulate {
        #[arg(value_enum)]
        scheme: Scheme,
        #[arg(value_enum)]
        quantity: SimQuantity,
        /// Also write the record as CSV (or JSON with --json).
        #[arg(long, short)]
        out: Option<PathBuf>,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Write the data series of figure 1 to 6.
    Reproduce {
        figure: u8,
        #[arg(long, env = "ANSEC_OUT_DIR", default_value = ".")]
        out_dir: PathBuf,
        #[command(flatten)]
        params: ParamArgs,
    },
}

impl Command {
    fn params(&self) -> &ParamArgs {
        match self {
            Command::Eval { params, .. }
            | Command::Sweep { params, .. }
            | Command::Optimize { params, .. }
            | Command::Simulate { params, .. }
            | Command::Reproduce { params, .. } => params,
        }
    }
}

impl Cli {
    /// Defaults, then the config file, then flags.
    pub fn settings(&self) -> Result<Settings> {
        let mut s = Settings::default();
        if let Some(path) = &self.config {
            s.apply_file(path)?;
        }
        self.command.params().apply(&mut s);
        Ok(s)
    }
}

fn write_out(out: &mut dyn Write, text: &str) -> Result<()> {
    out.write_all(text.as_bytes())
        .map_err(|e| CliError::io("<stdout>", e))
}

fn with_params(mut meta: Vec<(String, String)>, s: &Settings) -> Vec<(String, String)> {
    meta.extend(s.pairs().into_iter().map(|(k, v)| (k.to_owned(), v)));
    meta
}

fn optimize(scheme: Scheme, s: &Settings) -> Result<Vec<(String, f64)>> {
    let p = s.network()?;
    let split = match scheme {
        Scheme::Sectoring => sec::optimal_phi_numeric(&p, s.sigma, s.epsilon)?,
        Scheme::Beamforming => {
            ansec_core::beamforming::optimal_phi_numeric(&p, s.sigma, s.epsilon)?
        }
    };
    let mut at = s.clone();
    at.phi = split.phi();
    let cap = evaluate_named(scheme, Quantity::Capacity, &at)?;
    let mut v = vec![("phi_opt".to_owned(), split.phi())];
    v.extend(cap.into_iter().filter(|(k, _)| k != "feasible"));
    if scheme == Scheme::Sectoring && s.alpha == 4.0 {
        let closed = sec::optimal_phi_alpha4(&p, s.sigma, s.epsilon)?.phi();
        v.push(("phi_closed_form".into(), closed));
        v.push(("phi_numeric".into(), split.phi()));
        v.push(("phi_discrepancy".into(), (closed - split.phi()).abs()));
    }
    Ok(v)
}

/// Executes the parsed command, writing results to `out`.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<()> {
    let s = cli.settings()?;
    match &cli.command {
        Command::Eval {
            scheme, quantity, ..
        } => {
            let values = evaluate_named(*scheme, *quantity, &s)?;
            let mut meta = base_meta("eval");
            meta.push(("scheme".into(), scheme.name().into()));
            meta.push(("quantity".into(), quantity.name().into()));
            meta.push(("kind".into(), quantity.kind(*scheme).name().into()));
            write_out(
                out,
                &render_record(&with_params(meta, &s), &values, cli.json),
            )
        }
        Command::Sweep {
            scheme,
            quantity,
            param,
            start,
            stop,
            count,
            log,
            out: path,
            ..
        } => {
            let spec = SweepSpec {
                schemes: scheme.clone(),
                quantities: quantity.clone(),
                param: param.trim().replace('-', "_").to_ascii_lowercase(),
                start: *start,
                stop: *stop,
                count: *count,
                log: *log,
            };
            let t = sweep::run(&spec, &s)?;
            match path {
                Some(p) => t.write(p, cli.json),
                None => write_out(out, &t.render(cli.json)),
            }
        }
        Command::Optimize { scheme, .. } => {
            let values = optimize(*scheme, &s)?;
            let mut meta = base_meta("optimize");
            meta.push(("scheme".into(), scheme.name().into()));
            meta.push(("kind".into(), Quantity::PhiOpt.kind(*scheme).name().into()));
            write_out(
                out,
                &render_record(&with_params(meta, &s), &values, cli.json),
            )
        }
        Command::Simulate {
            scheme,
            quantity,
            out: path,
            ..
        } => {
            let report = simulate(*scheme, *quantity, &s)?;
            let t = report.to_table(&s);
            if let Some(p) = path {
                t.write(p, cli.json)?;
            }
            if cli.json {
                write_out(out, &t.render(true))
            } else {
                write_out(out, &report.summary())
            }
        }
        Command::Reproduce {
            figure, out_dir, ..
        } => {
            let files = reproduce::reproduce(*figure, &s, out_dir)?;
            let list: Vec<String> = files.iter().map(|p| p.display().to_string()).collect();
            write_out(out, &(list.join("\n") + "\n"))
        }
    }
}
