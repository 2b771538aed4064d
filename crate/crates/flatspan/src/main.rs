//! Thin command-line front end over the flatspan library.
//!
//! Exit codes: 0 on success, 1 when a verification suite records failures,
//! 2 on usage or parse errors.

use clap::{Args, Parser, Subcommand};
use flatspan::constructions;
use flatspan::essdim;
use flatspan::incidence::{
    is_alpha_degenerate, is_essentially_alpha_degenerate, is_gamma_saturated, spanned_flats,
};
use flatspan::io::{config_to_string, load_config, save_config, LoadedConfig};
use flatspan::scalar::{format_scalar, parse_scalar, Scalar};
use flatspan::suites::{
    render_report, rich_report, save_report, verify_beck_constructions,
    verify_degeneracy_implication, verify_dim_identities, verify_rich_degenerate_bound, ReportFormat,
    SuiteReport,
};
use flatspan::Configuration;
use std::error::Error;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "flatspan", version, about = "Exact incidence geometry toolkit")]
struct Cli {
    /// Seed for anything randomized (generation, sampled suites).
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Safety cap on configuration size (distinct points).
    #[arg(long, global = true, default_value_t = 64)]
    max_n: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a named construction and write it as a config file.
    Gen {
        #[command(subcommand)]
        construction: Construction,
    },
    /// Count spanned k-flats of a configuration.
    Count {
        config: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// Classify every spanned k-flat: degenerate, essentially, saturated.
    Degeneracy {
        config: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        alpha: String,
    },
    /// Essential dimension with a witness cover.
    Essdim { config: PathBuf },
    /// Run a verification suite; exits 1 if any case fails.
    Verify {
        #[command(subcommand)]
        suite: Suite,
    },
    /// Tabulate rich/degenerate/saturated counts over (r, alpha) pairs.
    Report {
        config: PathBuf,
        #[arg(long)]
        k: usize,
        /// Richness thresholds (repeatable).
        #[arg(long = "r")]
        r: Vec<u64>,
        /// Degeneracy ratios as "a" or "a/b" (repeatable).
        #[arg(long = "alpha")]
        alpha: Vec<String>,
        #[command(flatten)]
        out: ReportOut,
    },
}

#[derive(Subcommand)]
enum Construction {
    /// m points per axis in P^d, m^d points total.
    Grid {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        d: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// n/2 points on each of two skew lines in P^3.
    SkewLines {
        #[arg(long)]
        n: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// n/2 points on a (k-1)-flat plus n/2 on a disjoint line in P^d.
    FlatPlusLine {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        d: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// n/k points on each of k pairwise skew lines in P^d.
    KLines {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        d: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// n collinear points in P^3 (negative control for rich planes).
    CommonLine {
        #[arg(long)]
        n: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// n seeded points in general position in P^d.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum Suite {
    /// Join/meet dimension identities on random flats in P^4.
    DimIdentities {
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[command(flatten)]
        out: ReportOut,
    },
    /// Rich-degenerate count bound and the ordered-list lower bounds.
    RichDegenerateBound {
        config: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: u64,
        #[arg(long)]
        alpha: String,
        #[command(flatten)]
        out: ReportOut,
    },
    /// Essentially-degenerate implies degenerate, over all spanned k-flats.
    Implication {
        config: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        alpha: String,
        #[command(flatten)]
        out: ReportOut,
    },
    /// Extremal constructions: counts, containment, partition trichotomy.
    Beck {
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        out: ReportOut,
    },
}

#[derive(Args)]
struct ReportOut {
    #[arg(long, value_parser = ["json", "csv"], default_value = "json")]
    format: String,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

impl ReportOut {
    fn emit(&self, report: &SuiteReport) -> Result<(), Box<dyn Error>> {
        let format = if self.format == "csv" {
            ReportFormat::Csv
        } else {
            ReportFormat::Json
        };
        match &self.output {
            Some(path) => save_report(report, path, format)?,
            None => emit_stdout(&render_report(report, format))?,
        }
        Ok(())
    }
}

/// Single buffered write; a closed pipe (e.g. piping into head) is not an
/// error for a reporting tool.
fn emit_stdout(text: &str) -> Result<(), Box<dyn Error>> {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    match out.write_all(text.as_bytes()) {
        Ok(()) => Ok(()),
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
        Err(e) => Err(e.into()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn load_capped(path: &Path, max_n: usize) -> Result<LoadedConfig, Box<dyn Error>> {
    let config = load_config(path)?;
    if config.support_len() > max_n {
        return Err(format!(
            "configuration has {} distinct points, over the --max-n cap of {}",
            config.support_len(),
            max_n
        )
        .into());
    }
    Ok(config)
}

fn write_points(
    points: flatspan::PointSet,
    output: Option<&PathBuf>,
    max_n: usize,
) -> Result<(), Box<dyn Error>> {
    if points.support_len() > max_n {
        return Err(format!(
            "construction has {} points, over the --max-n cap of {}",
            points.support_len(),
            max_n
        )
        .into());
    }
    let config = LoadedConfig::from(points);
    match output {
        Some(path) => save_config(&config, path)?,
        None => emit_stdout(&config_to_string(&config))?,
    }
    Ok(())
}

fn run(cli: Cli) -> Result<bool, Box<dyn Error>> {
    match cli.command {
        Command::Gen { construction } => {
            let (points, output) = match construction {
                Construction::Grid { m, d, output } => (constructions::grid(m, d)?, output),
                Construction::SkewLines { n, output } => (constructions::skew_lines(n)?, output),
                Construction::FlatPlusLine { n, k, d, output } => {
                    (constructions::flat_plus_line_family(n, k, d)?.points, output)
                }
                Construction::KLines { n, k, d, output } => {
                    (constructions::k_lines_family(n, k, d)?.points, output)
                }
                Construction::CommonLine { n, output } => {
                    (constructions::planes_through_common_line(n)?.points, output)
                }
                Construction::Random { n, d, output } => {
                    (constructions::random_general_position(n, d, cli.seed)?, output)
                }
            };
            write_points(points, output.as_ref(), cli.max_n)?;
            Ok(true)
        }
        Command::Count { config, k } => {
            let config = load_capped(&config, cli.max_n)?;
            let inventory = spanned_flats(&config, k)?;
            let mut text = format!("spanned {k}-flats: {}\n", inventory.len());
            for (flat, inc) in inventory.iter() {
                let _ = writeln!(text, "  weight {:>3}  {}", inc.weight, describe_flat(flat));
            }
            emit_stdout(&text)?;
            Ok(true)
        }
        Command::Degeneracy { config, k, alpha } => {
            let config = load_capped(&config, cli.max_n)?;
            let alpha = parse_scalar(&alpha)?;
            let inventory = spanned_flats(&config, k)?;
            let mut text = format!(
                "spanned {k}-flats: {} (alpha = {})\n",
                inventory.len(),
                format_scalar(&alpha)
            );
            for (flat, inc) in inventory.iter() {
                let deg = is_alpha_degenerate(flat, &config, &alpha)?;
                let ess = is_essentially_alpha_degenerate(flat, &config, &alpha)?;
                let sat = is_gamma_saturated(flat, &config, &alpha)?;
                let _ = writeln!(
                    text,
                    "  weight {:>3}  degenerate {:<5}  essentially {:<5}  saturated {:<5}  {}",
                    inc.weight,
                    deg,
                    ess,
                    sat,
                    describe_flat(flat)
                );
            }
            emit_stdout(&text)?;
            Ok(true)
        }
        Command::Essdim { config } => {
            let config = load_capped(&config, cli.max_n.min(essdim::MAX_SUPPORT))?;
            let (k, witness) = essdim::essential_dimension(&config)?;
            let mut text = format!("essential dimension: {k}\n");
            for flat in &witness.flats {
                let _ = writeln!(text, "  cover flat: {}", describe_flat(flat));
            }
            emit_stdout(&text)?;
            Ok(true)
        }
        Command::Verify { suite } => {
            let (report, out) = match suite {
                Suite::DimIdentities { trials, out } => {
                    (verify_dim_identities(cli.seed, trials), out)
                }
                Suite::RichDegenerateBound {
                    config,
                    k,
                    r,
                    alpha,
                    out,
                } => {
                    let config = load_capped(&config, cli.max_n)?;
                    let alpha = parse_scalar(&alpha)?;
                    (verify_rich_degenerate_bound(&config, k, r, &alpha)?, out)
                }
                Suite::Implication {
                    config,
                    k,
                    alpha,
                    out,
                } => {
                    let config = load_capped(&config, cli.max_n)?;
                    let alpha = parse_scalar(&alpha)?;
                    (verify_degeneracy_implication(&config, k, &alpha)?, out)
                }
                Suite::Beck { k, out } => (verify_beck_constructions(k)?, out),
            };
            out.emit(&report)?;
            if !report.passed() {
                eprintln!(
                    "suite {} failed {} of {} cases",
                    report.suite,
                    report.failures.len(),
                    report.cases_run
                );
            }
            Ok(report.passed())
        }
        Command::Report {
            config,
            k,
            r,
            alpha,
            out,
        } => {
            let config = load_capped(&config, cli.max_n)?;
            let alphas: Vec<Scalar> = alpha
                .iter()
                .map(|a| parse_scalar(a))
                .collect::<Result<_, _>>()?;
            let report = rich_report(&config, k, &r, &alphas)?;
            out.emit(&report)?;
            Ok(true)
        }
    }
}

fn describe_flat(flat: &flatspan::Flat) -> String {
    let mut text = format!("dim {} span(", flat.dim());
    for (i, row) in flat.basis().iter().enumerate() {
        if i > 0 {
            text.push_str(", ");
        }
        let coords: Vec<String> = row.iter().map(format_scalar).collect();
        let _ = write!(text, "[{}]", coords.join(" "));
    }
    text.push(')');
    text
}
