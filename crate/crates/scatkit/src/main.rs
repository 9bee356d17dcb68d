use std::io::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use scatkit::report::{run, run_bghk, run_check, CheckKind, RunOptions};
use scatkit::svg::render_svg;
use scatkit_core::cases::{build_case, CaseId, CoeffMode};

#[derive(Parser)]
#[command(
    name = "scatkit",
    about = "Exact checks for rank-2 scattering diagrams",
    version
)]
struct Cli {
    /// Wall-function coefficients: all set to 1, or formal generators.
    #[arg(long, global = true, default_value = "specialized", value_parser = parse_mode)]
    coeffs: CoeffMode,
    /// Write the JSON report (or SVG) here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Power-series truncation order.
    #[arg(long, global = true, default_value_t = 20)]
    truncation: usize,
    /// Seed for the randomized sweeps.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build one case diagram and run the full check battery.
    Case {
        #[arg(value_parser = parse_case)]
        case: CaseId,
        /// Also estimate the central-charge growth exponent numerically.
        #[arg(long)]
        periods: bool,
    },
    /// Run one focused suite across all cases.
    Check {
        #[arg(value_parser = parse_check)]
        which: CheckKind,
    },
    /// Build an affine structure from a self-intersection sequence.
    Bghk {
        /// Comma-separated self-intersections, e.g. -1,-1,-1,-1,-1.
        #[arg(
            long,
            value_delimiter = ',',
            required = true,
            allow_hyphen_values = true
        )]
        selfints: Vec<i64>,
    },
    /// Render a case diagram as an SVG picture.
    Svg {
        #[arg(value_parser = parse_case)]
        case: CaseId,
        /// Replace the single branch cut by two cuts in cluster form.
        #[arg(long)]
        cluster_cuts: bool,
    },
}

fn parse_case(s: &str) -> Result<CaseId, String> {
    CaseId::parse(s).ok_or_else(|| format!("unknown case '{s}' (expected a2, b2, or g2)"))
}

fn parse_mode(s: &str) -> Result<CoeffMode, String> {
    match s {
        "specialized" => Ok(CoeffMode::Specialized),
        "ghk" => Ok(CoeffMode::Ghk),
        _ => Err(format!(
            "unknown coefficient mode '{s}' (expected specialized or ghk)"
        )),
    }
}

fn parse_check(s: &str) -> Result<CheckKind, String> {
    CheckKind::parse(s).ok_or_else(|| {
        format!(
            "unknown check '{s}' (expected pentagon, focus-focus, consistency, theta, \
             angles, affine, or trop)"
        )
    })
}

/// Writes the machine-readable document to `--out` (summary then goes to
/// stdout) or to stdout itself (summary then goes to stderr), so stdout
/// always carries exactly one of the two.
fn emit(doc: &str, summary: &str, out: Option<&PathBuf>) -> std::io::Result<()> {
    match out {
        Some(path) => {
            std::fs::write(path, doc)?;
            print!("{summary}");
        }
        None => {
            print!("{doc}");
            eprint!("{summary}");
        }
    }
    std::io::stdout().flush()
}

fn main() {
    let cli = Cli::parse();
    let opts = RunOptions {
        truncation: cli.truncation,
        seed: cli.seed,
        periods: false,
        period_grid: 400,
    };
    let code = match cli.cmd {
        Cmd::Case { case, periods } => {
            let opts = RunOptions { periods, ..opts };
            match run(case, cli.coeffs, &opts) {
                Ok(report) => {
                    eprintln!("elapsed: {} ms", report.elapsed_ms);
                    if emit(&report.to_json(), &report.summary(), cli.out.as_ref()).is_err() {
                        eprintln!("error: could not write report");
                        2
                    } else if report.all_pass {
                        0
                    } else {
                        1
                    }
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    2
                }
            }
        }
        Cmd::Check { which } => {
            let suite = run_check(which, cli.coeffs, &opts);
            if emit(&suite.to_json(), &suite.summary(), cli.out.as_ref()).is_err() {
                eprintln!("error: could not write report");
                2
            } else if suite.all_pass {
                0
            } else {
                1
            }
        }
        Cmd::Bghk { selfints } => match run_bghk(&selfints) {
            Ok(report) => {
                if emit(&report.to_json(), &report.summary(), cli.out.as_ref()).is_err() {
                    eprintln!("error: could not write report");
                    2
                } else if report.all_pass {
                    0
                } else {
                    1
                }
            }
            Err(e) => {
                eprintln!("error: {e}");
                2
            }
        },
        Cmd::Svg { case, cluster_cuts } => match build_case(case, cli.coeffs) {
            Ok(d) => {
                let svg = render_svg(&d, cluster_cuts);
                let summary = format!("rendered {} with {} rays\n", case.name(), d.wall_count());
                if emit(&svg, &summary, cli.out.as_ref()).is_err() {
                    eprintln!("error: could not write SVG");
                    2
                } else {
                    0
                }
            }
            Err(e) => {
                eprintln!("error: {e}");
                2
            }
        },
    };
    std::process::exit(code);
}
