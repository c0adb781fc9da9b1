use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use elliptica::classifier::enumerate_lens_cases;
use elliptica::verify::{census_csv, run_suite, Suite};
use elliptica_cli::{
    census_json, classification_report, family_descriptor, lens_descriptor, render_report, resolve_max_m,
    tables, CliError,
};

#[derive(Parser)]
#[command(name = "elliptica", version, about = "Exact isometry groups of elliptic 3-manifolds")]
struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,
    /// Also print floating-point approximations of exact values.
    #[arg(long, global = true)]
    approx: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify one manifold.
    Classify {
        #[command(subcommand)]
        target: Target,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long)]
        max_m: Option<u64>,
    },
    /// Lens-space case census for all m ≤ max-m.
    EnumerateLens {
        #[arg(long)]
        max_m: Option<u64>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Print the recomputed tables.
    Tables {
        #[arg(long)]
        which: Option<u8>,
    },
}

#[derive(Subcommand)]
enum Target {
    /// The lens space L(m,q).
    Lens { m: u64, q: u64 },
    /// A non-lens family: quaternionic, prism, prism-diagonal, tetrahedral,
    /// tetrahedral-diagonal, octahedral, icosahedral.
    Family {
        name: String,
        #[arg(long)]
        m: Option<u64>,
        #[arg(long)]
        n: Option<u64>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

fn run(cli: Cli) -> Result<String, CliError> {
    let env_max = std::env::var("ELLIPTICA_MAX_M").ok();
    match cli.command {
        Command::Classify { target } => {
            let d = match target {
                Target::Lens { m, q } => lens_descriptor(m, q)?,
                Target::Family { name, m, n } => family_descriptor(&name, m, n)?,
            };
            let report = classification_report(&d, cli.approx)?;
            let out = if cli.json {
                serde_json::to_string_pretty(&report).expect("serializable") + "\n"
            } else {
                render_report(&report)
            };
            if !report.realization_verified || !report.phi_injective {
                print!("{out}");
                return Err(CliError::Verification(format!("{}: realization check failed", report.manifold)));
            }
            Ok(out)
        }
        Command::Verify { suite, max_m } => {
            let suite: Suite = suite.parse().map_err(CliError::Usage)?;
            let max_m = resolve_max_m(max_m, env_max.as_deref(), 1)?;
            let checks = run_suite(suite, max_m);
            let failed = checks.iter().filter(|c| !c.passed).count();
            let out = if cli.json {
                let v = serde_json::json!({
                    "suite": suite,
                    "max_m": max_m,
                    "passed": checks.len() - failed,
                    "failed": failed,
                    "checks": checks,
                });
                serde_json::to_string_pretty(&v).expect("serializable") + "\n"
            } else {
                let mut s: String = checks.iter().map(|c| format!("{c}\n")).collect();
                s += &format!("{} checks, {} failed\n", checks.len(), failed);
                s
            };
            if failed > 0 {
                print!("{out}");
                return Err(CliError::Verification(format!("{failed} checks failed")));
            }
            Ok(out)
        }
        Command::EnumerateLens { max_m, format } => {
            let max_m = resolve_max_m(max_m, env_max.as_deref(), 2)?;
            let rows = enumerate_lens_cases(max_m);
            Ok(match (format, cli.json) {
                (Format::Json, _) | (_, true) => census_json(&rows),
                (Format::Csv, false) => census_csv(&rows),
            })
        }
        Command::Tables { which } => {
            let ids: Vec<u8> = match which {
                None => vec![2, 3, 4],
                Some(w @ 2..=4) => vec![w],
                Some(_) => return Err(CliError::Usage("--which must be 2, 3 or 4".into())),
            };
            let ts: Vec<tables::Table> = ids.into_iter().map(tables::table).collect();
            Ok(if cli.json {
                serde_json::to_string_pretty(&ts).expect("serializable") + "\n"
            } else {
                ts.iter().map(tables::render).collect::<Vec<_>>().join("\n")
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.as_bytes());
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
