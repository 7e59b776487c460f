use std::io::Write;
use std::process::ExitCode;

use ansec::cli::{run, Cli};
use clap::Parser;

fn self_check() {
    match ansec::alpha4_self_check() {
        Ok(rows) => {
            for (n, d) in rows {
                if d > 1e-4 {
                    log::warn!("closed-form optimum off by {d:.3e} at N = {n}");
                } else {
                    log::debug!("closed-form optimum agrees to {d:.1e} at N = {n}");
                }
            }
        }
        Err(e) => log::warn!("closed-form self-check failed: {e}"),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
        {
            log::warn!("thread pool: {e}");
        }
    }
    self_check();
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    match run(&cli, &mut lock) {
        Ok(()) => {
            let _ = lock.flush();
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
