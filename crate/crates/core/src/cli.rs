//! Command-line front end.
//!
//! Exit codes: 0 success, 1 failed check or internal error, 2 malformed
//! input, 3 size bound exceeded, 4 unmet precondition.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::check::{self, CheckConfig, Suite, SuiteReport, UnknownSuite};
use crate::coeff::{LocalizedScalar, RingMode};
use crate::diagram::{parse_link, parse_word, DiagramError};
use crate::homfly::{HomflyEngine, HomflyError, DEFAULT_MAX_CROSSINGS};
use crate::skein::{
    OrderedSkeinElement, SkeinConfig, SkeinEngine, SkeinError, SkeinPolynomial,
    DEFAULT_MAX_SINGULAR,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_BOUNDS: i32 = 3;
pub const EXIT_PRECONDITION: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "skeinforge",
    version,
    about = "HOMFLY-PT skein invariants of closed singular braids"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub run: RunConfig,
}

#[derive(Debug, Clone, clap::Args)]
pub struct RunConfig {
    /// Coefficient ring: generic, conway, or gf:<p>
    #[arg(long, global = true, default_value = "generic", value_parser = parse_ring)]
    pub ring: RingMode,
    /// Worker threads for the resolution cube
    #[arg(long, global = true, env = "SKEINFORGE_JOBS", default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    pub jobs: u32,
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_CROSSINGS as u32, value_parser = clap::value_parser!(u32).range(1..))]
    pub max_crossings: u32,
    #[arg(long = "max-sing", global = true, default_value_t = DEFAULT_MAX_SINGULAR as u32, value_parser = clap::value_parser!(u32).range(1..))]
    pub max_sing: u32,
    /// Emit JSON instead of text
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for the check suites
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
}

fn parse_ring(s: &str) -> Result<RingMode, String> {
    s.parse()
        .map_err(|e: crate::coeff::RingError| e.to_string())
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Class of a singular link in R[X, Y]
    Invariant {
        /// Word such as "3: s1 t2 s1^-1", optionally followed by "| o = 2 1"
        word: String,
        /// Also print the coordinates in the ordered basis Z_eps
        #[arg(long)]
        ordered: bool,
    },
    /// HOMFLY-PT polynomial of a nonsingular closed braid
    Homfly { word: String },
    /// Run a property suite: skein, markov, star, lemma22, ordering,
    /// specialize, oracle, or all
    Check {
        suite: String,
        /// Random cases per property
        #[arg(long, default_value_t = 100)]
        cases: usize,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Skein(SkeinError),
    #[error(transparent)]
    Homfly(HomflyError),
    #[error(transparent)]
    UnknownSuite(#[from] UnknownSuite),
    #[error("{0} suite(s) failed")]
    CheckFailed(usize),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl From<SkeinError> for CliError {
    fn from(e: SkeinError) -> Self {
        match e {
            SkeinError::Diagram(d) => CliError::Diagram(d),
            SkeinError::Homfly(h) => CliError::Homfly(h),
            other => CliError::Skein(other),
        }
    }
}

impl From<HomflyError> for CliError {
    fn from(e: HomflyError) -> Self {
        CliError::Homfly(e)
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Diagram(_) | CliError::UnknownSuite(_) => EXIT_PARSE,
            CliError::Skein(SkeinError::TooManySingularPoints { .. }) => EXIT_BOUNDS,
            CliError::Homfly(HomflyError::TooManyCrossings { .. }) => EXIT_BOUNDS,
            CliError::Homfly(_) => EXIT_PRECONDITION,
            _ => EXIT_CHECK_FAILED,
        }
    }
}

/// One coefficient `num / D^dpow` of `X^i Y^j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonCoeff {
    pub i: u32,
    pub j: u32,
    pub num: String,
    pub dpow: u32,
}

/// One ordered coordinate `num / D^dpow` of `Z_eps`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonCoord {
    pub eps: String,
    pub num: String,
    pub dpow: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonInvariant {
    pub d: usize,
    pub coeffs: Vec<JsonCoeff>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ordered: Option<Vec<JsonCoord>>,
    pub ring: String,
}

impl JsonInvariant {
    pub fn new(d: usize, p: &SkeinPolynomial, ordered: Option<&OrderedSkeinElement>) -> Self {
        JsonInvariant {
            d,
            coeffs: p
                .coeffs()
                .iter()
                .map(|((i, j), c)| JsonCoeff {
                    i: *i,
                    j: *j,
                    num: c.numerator().to_string(),
                    dpow: c.dpow(),
                })
                .collect(),
            ordered: ordered.map(|a| {
                a.coords()
                    .iter()
                    .map(|(eps, c)| JsonCoord {
                        eps: eps.to_string(),
                        num: c.numerator().to_string(),
                        dpow: c.dpow(),
                    })
                    .collect()
            }),
            ring: p.mode().to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonHomfly {
    pub homfly: String,
    pub ring: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonSuite {
    pub suite: String,
    pub ring: String,
    pub seed: u64,
    pub cases: usize,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

impl From<&SuiteReport> for JsonSuite {
    fn from(r: &SuiteReport) -> Self {
        JsonSuite {
            suite: r.suite.to_string(),
            ring: r.mode.to_string(),
            seed: r.seed,
            cases: r.cases,
            passed: r.passed(),
            counterexample: r
                .failure
                .as_ref()
                .map(|c| format!("case {}: {}", c.case, c.detail)),
        }
    }
}

fn skein_engine(run: &RunConfig) -> SkeinEngine {
    SkeinEngine::with_config(
        run.ring,
        SkeinConfig {
            jobs: run.jobs as usize,
            max_crossings: run.max_crossings as usize,
            max_singular: run.max_sing as usize,
        },
    )
}

fn cmd_invariant(
    run: &RunConfig,
    word: &str,
    ordered: bool,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let link = parse_link(word)?;
    let a = skein_engine(run).invariant_ordered(&link)?;
    let p = a.project();
    if run.json {
        let doc = JsonInvariant::new(link.singular_count(), &p, ordered.then_some(&a));
        writeln!(out, "{}", serde_json::to_string(&doc)?)?;
    } else {
        writeln!(out, "{p}")?;
        if ordered {
            writeln!(out, "{a}")?;
        }
    }
    Ok(())
}

fn cmd_homfly(run: &RunConfig, word: &str, out: &mut dyn Write) -> Result<(), CliError> {
    let w = parse_word(word)?;
    let v = HomflyEngine::with_max_crossings(run.ring, run.max_crossings as usize).homfly(&w)?;
    if run.json {
        let doc = JsonHomfly {
            homfly: v.to_string(),
            ring: run.ring.to_string(),
        };
        writeln!(out, "{}", serde_json::to_string(&doc)?)?;
    } else {
        writeln!(out, "{v}")?;
    }
    Ok(())
}

fn cmd_check(
    run: &RunConfig,
    suite: &str,
    cases: usize,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let suites = Suite::select(suite)?;
    let config = CheckConfig {
        mode: run.ring,
        seed: run.seed,
        cases,
        jobs: run.jobs as usize,
        max_crossings: run.max_crossings as usize,
        max_singular: run.max_sing as usize,
        ..CheckConfig::default()
    };
    let reports: Vec<SuiteReport> = suites.into_iter().map(|s| check::run(s, &config)).collect();
    if run.json {
        let docs: Vec<JsonSuite> = reports.iter().map(JsonSuite::from).collect();
        writeln!(out, "{}", serde_json::to_string(&docs)?)?;
    } else {
        for r in &reports {
            writeln!(out, "{r}")?;
        }
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    if failed > 0 {
        return Err(CliError::CheckFailed(failed));
    }
    Ok(())
}

pub fn execute(cli: &Cli, out: &mut dyn Write) -> Result<(), CliError> {
    match &cli.command {
        Command::Invariant { word, ordered } => cmd_invariant(&cli.run, word, *ordered, out),
        Command::Homfly { word } => cmd_homfly(&cli.run, word, out),
        Command::Check { suite, cases } => cmd_check(&cli.run, suite, *cases, out),
    }
}

/// Parses `args` (including the program name), runs the command, and
/// returns the process exit code.
pub fn main_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let _ = write!(err, "{}", e.render());
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            if !matches!(e, CliError::CheckFailed(_)) || !cli.run.json {
                let _ = writeln!(err, "error: {e}");
            }
            e.exit_code()
        }
    }
}

/// Coefficient back from its JSON fields.
pub fn scalar_from_json(mode: RingMode, num: &str, dpow: u32) -> Option<LocalizedScalar> {
    let num = crate::coeff::LaurentPoly::parse(mode.base(), num).ok()?;
    LocalizedScalar::new(mode, num, dpow).ok()
}
