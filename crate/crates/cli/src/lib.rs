//! The `quivermod` command line: JSON in, JSON or text out, exit code 0 (holds), 1 (fails) or 2 (bad input).

pub mod acceptance;
pub mod commands;
mod error;
pub mod schema;

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;

pub use error::CliError;

use crate::commands::Report;
use crate::schema::{CyclicSpecJson, EquationSetJson, FramingJson, MultiRootsJson, QuiverJson, RepJson, RootDataJson, SubspaceJson};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "quivermod", version, about = "Framed quiver representations, injective embeddings and their fibers")]
struct Cli {
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

/// File arguments take a path, or the JSON document itself when it starts with `{` or `[`.
#[derive(Debug, Subcommand)]
enum Command {
    /// Path basis of the quotient algebra.
    Basis {
        #[arg(long)]
        quiver: String,
    },
    /// Whether a framed representation is stable.
    Stability {
        #[arg(long)]
        quiver: String,
        #[arg(long)]
        rep: String,
        #[arg(long)]
        framing: Option<String>,
    },
    /// Whether a representation admits a stable framing of dimension ζ.
    FramingExists {
        #[arg(long)]
        quiver: String,
        #[arg(long)]
        rep: String,
        #[arg(long)]
        zeta: String,
    },
    /// Whether every oriented cycle acts nilpotently.
    Nullcone {
        #[arg(long)]
        quiver: String,
        #[arg(long)]
        rep: String,
        /// Exponent for the product-of-cycles test; defaults to the largest dimension.
        #[arg(long)]
        bound: Option<usize>,
    },
    /// The injective module J with its path labels.
    Injective {
        #[arg(long)]
        quiver: String,
        #[arg(long)]
        zeta: String,
    },
    /// The embedding of a framed representation into J.
    Phi {
        #[arg(long)]
        quiver: String,
        #[arg(long)]
        rep: String,
        #[arg(long)]
        framing: Option<String>,
    },
    /// The framed representation carried by a submodule of J.
    Recover {
        #[arg(long)]
        quiver: String,
        #[arg(long)]
        zeta: String,
        #[arg(long)]
        subspace: String,
    },
    /// Whether a graded subspace of J is a submodule, directly and through the inclusion system.
    GrassCheck {
        #[arg(long)]
        quiver: String,
        #[arg(long)]
        zeta: String,
        #[arg(long)]
        subspace: String,
    },
    /// Dagger maps and the inclusion system describing submodules of J.
    DaggerReport {
        #[arg(long)]
        quiver: String,
        #[arg(long)]
        zeta: String,
    },
    /// Characteristic polynomials of the cycle operators.
    Charpolys {
        #[arg(long)]
        quiver: String,
        #[arg(long)]
        rep: String,
    },
    /// Jordan-string factors and their equations over a cyclic quiver.
    Fiber {
        #[arg(long)]
        spec: String,
        #[arg(long)]
        roots: String,
    },
    /// Plücker equations of the invariant m-planes for the loop with framing q.
    Equations {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        q: usize,
    },
    /// Residuals of an equation set at a subspace.
    CheckPoint {
        #[arg(long)]
        eqs: String,
        #[arg(long)]
        subspace: String,
    },
    /// The spade quiver, its dimension vector and module.
    Spade {
        #[arg(long)]
        quiver: String,
        #[arg(long)]
        roots: String,
        #[arg(long)]
        zeta: String,
    },
    /// Membership and round trip of a point of a spade bundle.
    SpadeCheck {
        #[arg(long)]
        bundle: String,
        #[arg(long)]
        subspace: String,
    },
    /// Runs the acceptance suite.
    Selftest,
}

fn load<T: DeserializeOwned>(arg: &str, what: &str) -> Result<T, CliError> {
    let trimmed = arg.trim_start();
    let text = if trimmed.starts_with('{') || trimmed.starts_with('[') {
        arg.to_string()
    } else {
        std::fs::read_to_string(arg).map_err(|source| CliError::Io { path: arg.to_string(), source })?
    };
    serde_json::from_str(&text).map_err(|source| CliError::Json { what: what.to_string(), source })
}

fn load_framing(arg: Option<&String>) -> Result<Option<FramingJson>, CliError> {
    arg.map(|a| load(a, "framing")).transpose()
}

fn render<R: Report>(report: &R, format: Format) -> (String, bool) {
    let body = match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("reports serialize");
            s.push('\n');
            s
        }
        Format::Text => report.text(),
    };
    (body, report.holds())
}

fn dispatch(command: &Command, seed: u64, format: Format) -> Result<(String, bool), CliError> {
    use commands as c;
    Ok(match command {
        Command::Basis { quiver } => render(&c::basis(&load(quiver, "quiver")?)?, format),
        Command::Stability { quiver, rep, framing } => render(
            &c::stability(&load(quiver, "quiver")?, &load::<RepJson>(rep, "representation")?, load_framing(framing.as_ref())?.as_ref())?,
            format,
        ),
        Command::FramingExists { quiver, rep, zeta } => render(
            &c::framing_exists(&load(quiver, "quiver")?, &load(rep, "representation")?, &load::<Vec<usize>>(zeta, "zeta")?)?,
            format,
        ),
        Command::Nullcone { quiver, rep, bound } => {
            render(&c::nullcone(&load(quiver, "quiver")?, &load(rep, "representation")?, *bound)?, format)
        }
        Command::Injective { quiver, zeta } => {
            render(&c::injective(&load(quiver, "quiver")?, &load::<Vec<usize>>(zeta, "zeta")?)?, format)
        }
        Command::Phi { quiver, rep, framing } => render(
            &c::phi_command(&load(quiver, "quiver")?, &load(rep, "representation")?, load_framing(framing.as_ref())?.as_ref())?,
            format,
        ),
        Command::Recover { quiver, zeta, subspace } => render(
            &c::recover_command(&load(quiver, "quiver")?, &load::<Vec<usize>>(zeta, "zeta")?, &load(subspace, "subspace")?)?,
            format,
        ),
        Command::GrassCheck { quiver, zeta, subspace } => render(
            &c::grass_check(&load(quiver, "quiver")?, &load::<Vec<usize>>(zeta, "zeta")?, &load(subspace, "subspace")?)?,
            format,
        ),
        Command::DaggerReport { quiver, zeta } => {
            render(&c::dagger_command(&load(quiver, "quiver")?, &load::<Vec<usize>>(zeta, "zeta")?)?, format)
        }
        Command::Charpolys { quiver, rep } => {
            render(&c::charpolys(&load(quiver, "quiver")?, &load(rep, "representation")?)?, format)
        }
        Command::Fiber { spec, roots } => render(
            &c::fiber(&load::<CyclicSpecJson>(spec, "cyclic spec")?, &load::<RootDataJson>(roots, "roots")?)?,
            format,
        ),
        Command::Equations { m, q } => {
            if *m == 0 || *q == 0 {
                return Err(error::input("--m and --q must be positive"));
            }
            render(&c::equations(*m, *q), format)
        }
        Command::CheckPoint { eqs, subspace } => render(
            &c::check_point(&load::<EquationSetJson>(eqs, "equation set")?, &load::<SubspaceJson>(subspace, "subspace")?)?,
            format,
        ),
        Command::Spade { quiver, roots, zeta } => {
            let bundle = c::spade(&load::<QuiverJson>(quiver, "quiver")?, &load::<MultiRootsJson>(roots, "roots")?, &load::<Vec<usize>>(zeta, "zeta")?)?;
            render(&c::SpadeBundleJson::from_bundle(&bundle), format)
        }
        Command::SpadeCheck { bundle, subspace } => render(
            &c::spade_check(&load(bundle, "spade bundle")?, &load(subspace, "subspace")?)?,
            format,
        ),
        Command::Selftest => render(&c::selftest(seed), format),
    })
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let informational = !e.use_stderr();
            let _ = if informational { write!(out, "{}", e.render()) } else { write!(err, "{}", e.render()) };
            return if informational { 0 } else { 2 };
        }
    };
    match dispatch(&cli.command, cli.seed, cli.format) {
        Ok((body, holds)) => {
            let _ = out.write_all(body.as_bytes());
            if holds {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn reserialize<R: Report>(json: &str) -> Result<String, CliError> {
    let report: R = serde_json::from_str(json).map_err(|source| CliError::Json { what: "report".into(), source })?;
    let mut s = serde_json::to_string_pretty(&report).expect("reports serialize");
    s.push('\n');
    Ok(s)
}

/// Parses the JSON output of `subcommand` with its own report type and writes it again.
pub fn reparse(subcommand: &str, json: &str) -> Result<String, CliError> {
    use commands as c;
    match subcommand {
        "basis" => reserialize::<c::BasisReport>(json),
        "stability" => reserialize::<c::StabilityReport>(json),
        "framing-exists" => reserialize::<c::FramingReport>(json),
        "nullcone" => reserialize::<c::NullconeReport>(json),
        "injective" => reserialize::<c::InjectiveReport>(json),
        "phi" => reserialize::<c::PhiReport>(json),
        "recover" => reserialize::<c::RecoverReport>(json),
        "grass-check" => reserialize::<c::GrassReport>(json),
        "dagger-report" => reserialize::<c::DaggerReport>(json),
        "charpolys" => reserialize::<c::CharpolyReport>(json),
        "fiber" => reserialize::<c::FiberReport>(json),
        "equations" => reserialize::<EquationSetJson>(json),
        "check-point" => reserialize::<c::CheckReport>(json),
        "spade" => reserialize::<c::SpadeBundleJson>(json),
        "spade-check" => reserialize::<c::SpadeCheckReport>(json),
        "selftest" => reserialize::<c::SelftestReport>(json),
        other => Err(error::input(format!("unknown subcommand {other:?}"))),
    }
}
