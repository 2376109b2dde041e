use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use fracdelay_cli::{parse_config, run, solution_csv, RunOptions, RunOutput};

/// Thread count override; all cores otherwise.
const THREADS_VAR: &str = "FRACDELAY_THREADS";

#[derive(Parser)]
#[command(name = "fracdelay", version, about = "Spectral method-of-steps solver for fractional delay equations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve the problem described by a TOML config.
    Solve {
        config: PathBuf,
        /// Overrides `output.dir` from the config.
        #[arg(long)]
        output_dir: Option<PathBuf>,
        /// Cross-check the lowest modes against the ABM oracle.
        #[arg(long)]
        oracle: bool,
        /// Cap on the truncation radius.
        #[arg(long, value_name = "M")]
        modes_max: Option<usize>,
        #[arg(long)]
        quiet: bool,
    },
}

fn write_outputs(dir: &Path, out: &RunOutput) -> Result<()> {
    fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    let write = |name: &str, text: String| -> Result<()> {
        let p = dir.join(name);
        fs::write(&p, text).with_context(|| format!("writing {}", p.display()))
    };
    write("solution.csv", solution_csv(&out.field))?;
    write("diagnostics.json", serde_json::to_string_pretty(&out.diagnostics)? + "\n")?;
    write("provenance.json", serde_json::to_string_pretty(&out.provenance)? + "\n")?;
    Ok(())
}

fn solve(config: &Path, output_dir: Option<PathBuf>, opts: RunOptions, quiet: bool) -> Result<i32> {
    let text = fs::read_to_string(config).with_context(|| format!("reading {}", config.display()))?;
    let cfg = parse_config(&text)?;
    if !quiet {
        for w in &cfg.warnings {
            eprintln!("warning: {w}");
        }
    }
    let mut out = run(&cfg, opts)?;
    out.provenance.config_path = Some(config.display().to_string());
    out.provenance.config_text = Some(text);
    let dir = output_dir.unwrap_or_else(|| PathBuf::from(&cfg.output.dir));
    write_outputs(&dir, &out)?;
    let d = &out.diagnostics;
    if !quiet {
        println!(
            "solved {} of {} modes; rho = {:.6}; residual {:.3e}; max |u| {:.6e}",
            d.field.modes_solved, d.field.modes_total, d.riesz.rho, d.residual.relative, d.field.max_abs
        );
        for r in &d.status.reasons {
            println!("diagnostics: {r}");
        }
        println!("wrote {}", dir.display());
    }
    Ok(out.exit_code())
}

fn init_threads() -> Result<()> {
    if let Ok(v) = std::env::var(THREADS_VAR) {
        let n: usize = v.trim().parse().with_context(|| format!("{THREADS_VAR} must be a positive integer, got {v:?}"))?;
        rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global()?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = init_threads().and_then(|_| match cli.command {
        Command::Solve {
            config,
            output_dir,
            oracle,
            modes_max,
            quiet,
        } => solve(&config, output_dir, RunOptions { oracle, modes_max }, quiet),
    });
    match result {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
