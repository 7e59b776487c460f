//! Command-line front end, file formats and a parallel Monte Carlo driver
//! for [`ansec_core`].

pub mod cli;
pub mod config;
pub mod error;
pub mod output;
pub mod quantity;
pub mod reproduce;
pub mod simulate;
pub mod sweep;

pub use error::{CliError, Result};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Leading metadata shared by every output: command, then tool version.
pub fn base_meta(command: &str) -> Vec<(String, String)> {
    vec![
        ("command".into(), command.into()),
        ("tool".into(), format!("ansec {VERSION}")),
    ]
}

/// Compares the closed-form and numeric sectoring optima at `α = 4` with
/// `λ_l = 0.01`, `λ_e = 0.001`, `r = 1`, `σ = 0.1`, `ε = 0.01` for
/// `N ∈ {2, 4, 8, 16}`; returns `(N, |Δφ|)`. Points where both routes find
/// no feasible split are skipped.
pub fn alpha4_self_check() -> Result<Vec<(u32, f64)>> {
    let base = ansec_core::NetworkParams::new(0.01, 0.001, 1.0, 4.0, 2, 1.0)?;
    let mut out = Vec::new();
    for n in [2, 4, 8, 16] {
        match ansec_core::sectoring::alpha4_discrepancy(&base.with_n(n)?, 0.1, 0.01) {
            Ok(d) => out.push((n, d)),
            Err(ansec_core::Error::Infeasible(_)) => {}
            Err(e) => return Err(e.into()),
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    #[test]
    fn self_check_agrees() {
        let rows = super::alpha4_self_check().unwrap();
        assert!(rows.len() >= 3);
        assert!(rows.iter().all(|&(_, d)| d < 1e-4), "{rows:?}");
    }
}
