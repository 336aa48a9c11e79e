//! Command-line driver for Grover-walk analysis on finite graphs.
//!
//! Subcommands: `spectrum` (adjacency / discriminant / evolution spectra),
//! `period` (spectral and brute-force periodicity, cross-checked), `pst`
//! (perfect state transfer certificates and criterion diagnostics) and
//! `verify` (named batteries of independent cross-checks).
//!
//! Exit codes: 0 success, 1 usage error, 2 validation/domain error,
//! 3 internal consistency failure (including a failed `verify` battery).

mod commands;
mod report;
mod selector;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use grover_walk::{Error, Tolerances};

use commands::{Ctx, VerifyParams};
use report::{dec12, Format, RunReport, Results, TolerancesOut};
use selector::SelectorError;

/// Grover walks on finite graphs: spectra, periodicity and perfect state
/// transfer.
///
/// Graphs are selected with a small grammar: `uc:N` (unitary Cayley graph
/// on Z_N), `cycle:N`, `complete:N`, `circulant:N:s1,s2,...` (connection
/// set, closed under s -> N-s automatically), `named:hamming:S:T`,
/// `named:kbip:M` (K_{M,M}), `named:ktri:M` (K_{M,M,M}), or `file:PATH`
/// for a whitespace-separated edge list: a header line `n m` followed by
/// exactly `m` lines `u v` with vertices in `0..n`.
#[derive(Parser)]
#[command(name = "grover-walk", version, arg_required_else_help = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Max-norm residual below which a walk power counts as the identity.
    #[arg(long, global = true, default_value_t = 1e-9, allow_negative_numbers = true)]
    tol_identity: f64,

    /// Transfer amplitudes within this distance of modulus 1 certify.
    #[arg(long, global = true, default_value_t = 1e-7, allow_negative_numbers = true)]
    tol_amplitude: f64,

    /// Clustering width for numeric eigenvalue multiplicities.
    #[arg(long, global = true, default_value_t = 1e-6, allow_negative_numbers = true)]
    tol_cluster: f64,
}

#[derive(Subcommand)]
enum Command {
    /// Adjacency, discriminant and evolution spectra of the selected graph.
    Spectrum {
        /// Graph selector (see top-level help for the grammar).
        selector: String,
    },
    /// Periodicity decision by eigenvalue-angle orders and by brute-force
    /// powering, with a cross-check between the two.
    Period {
        /// Graph selector (see top-level help for the grammar).
        selector: String,
        /// Brute-force horizon: powers of the walk tried for the identity.
        #[arg(long, default_value_t = 144)]
        tau_max: u64,
        /// Largest angle order scanned by the spectral method.
        #[arg(long, default_value_t = 360)]
        q_max: u64,
    },
    /// Perfect state transfer search: certificates for every ordered
    /// vertex pair, plus eigenvalue-criterion diagnostics on circulants.
    Pst {
        /// Graph selector (see top-level help for the grammar).
        selector: String,
        /// Steps to scan; defaults to one period when the walk is
        /// periodic, 100 otherwise.
        #[arg(long)]
        tau_max: Option<u64>,
    },
    /// Named batteries of independent cross-checks; any failing check
    /// exits with code 3.
    Verify {
        /// Which battery to run.
        #[arg(value_enum)]
        suite: Suite,
        /// Largest graph order in the periodicity and transfer sweeps
        /// (brute-force parts cap internally at 30).
        #[arg(long, default_value_t = 30)]
        n_max: usize,
        /// Number of random circulants in the criterion battery.
        #[arg(long, default_value_t = 50)]
        samples: usize,
        /// Seed for the random circulant battery.
        #[arg(long, default_value_t = 0x5EED_CA7A)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    /// Unitary Cayley periodicity versus the 2^a*3^b predicate.
    Thm36,
    /// Circulant transfer criterion versus brute-force amplitudes.
    Thm42,
    /// Perfect state transfer classification over unitary Cayley graphs.
    Thm46,
    /// Integral regular fixtures: Hoffman identity, category labels,
    /// walk-regularity.
    Sec5,
    /// Every battery above, in order.
    All,
}

impl Suite {
    fn name(self) -> &'static str {
        match self {
            Suite::Thm36 => "thm36",
            Suite::Thm42 => "thm42",
            Suite::Thm46 => "thm46",
            Suite::Sec5 => "sec5",
            Suite::All => "all",
        }
    }
}

fn error_exit_code(e: &Error) -> u8 {
    match e {
        Error::Internal(_) => 3,
        Error::Domain(_) | Error::Validation(_) | Error::Io(_) => 2,
    }
}

fn run(cli: &Cli) -> Result<ExitCode, (u8, String)> {
    let tol = Tolerances {
        identity: cli.tol_identity,
        amplitude: cli.tol_amplitude,
        cluster: cli.tol_cluster,
    };
    for (name, value) in [
        ("--tol-identity", tol.identity),
        ("--tol-amplitude", tol.amplitude),
        ("--tol-cluster", tol.cluster),
    ] {
        if !(value.is_finite() && value > 0.0) {
            return Err((2, format!("{name} must be finite and positive, got {value}")));
        }
    }
    let ctx = Ctx { tol };

    let parse = |selector: &str| {
        selector::parse(selector).map_err(|e| match e {
            SelectorError::Usage(msg) => (1, msg),
            SelectorError::Build(err) => (error_exit_code(&err), err.to_string()),
        })
    };
    let lift = |e: Error| (error_exit_code(&e), e.to_string());

    let (command, selector_text, results, consistent) = match &cli.command {
        Command::Spectrum { selector } => {
            let target = parse(selector)?;
            let results = commands::spectrum(&target, &ctx).map_err(lift)?;
            ("spectrum", selector.clone(), results, true)
        }
        Command::Period {
            selector,
            tau_max,
            q_max,
        } => {
            let target = parse(selector)?;
            let (results, agree) =
                commands::period(&target, *tau_max, *q_max, &ctx).map_err(lift)?;
            ("period", selector.clone(), results, agree)
        }
        Command::Pst { selector, tau_max } => {
            let target = parse(selector)?;
            let results = commands::pst(&target, *tau_max, &ctx).map_err(lift)?;
            ("pst", selector.clone(), results, true)
        }
        Command::Verify {
            suite,
            n_max,
            samples,
            seed,
        } => {
            let params = VerifyParams {
                suite: suite.name().to_string(),
                n_max: *n_max,
                samples: *samples,
                seed: *seed,
            };
            let (results, all_pass) = commands::verify(&params, &ctx).map_err(lift)?;
            ("verify", params.suite, results, all_pass)
        }
    };

    let disagreement = describe_disagreement(&results, consistent);
    let rendered = report::render(
        &RunReport {
            command: command.to_string(),
            selector: selector_text,
            tolerances: TolerancesOut {
                identity: dec12(tol.identity),
                amplitude: dec12(tol.amplitude),
                cluster: dec12(tol.cluster),
            },
            results,
            version: env!("CARGO_PKG_VERSION").to_string(),
        },
        cli.format,
    );
    print!("{rendered}");
    if consistent {
        Ok(ExitCode::SUCCESS)
    } else {
        if let Some(message) = disagreement {
            eprintln!("error: {message}");
        }
        Ok(ExitCode::from(3))
    }
}

fn describe_disagreement(results: &Results, consistent: bool) -> Option<String> {
    if consistent {
        return None;
    }
    Some(match results {
        Results::Period(_) => {
            "internal consistency failure: spectral and brute-force periodicity disagree"
                .to_string()
        }
        Results::Verify(v) => {
            let failed: Vec<&str> = v
                .checks
                .iter()
                .filter(|c| !c.pass)
                .map(|c| c.name.as_str())
                .collect();
            format!("verification failed: {}", failed.join(", "))
        }
        _ => "internal consistency failure".to_string(),
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let informational = matches!(
                e.kind(),
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
            );
            let _ = e.print();
            return if informational {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            };
        }
    };
    match run(&cli) {
        Ok(code) => code,
        Err((code, message)) => {
            eprintln!("error: {message}");
            ExitCode::from(code)
        }
    }
}
