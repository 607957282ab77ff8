//! JSON-in, JSON-out command line front end. [`run_args`] does all the work
//! in-process so tests and the `selftest` determinism check need no child
//! process.

use std::ffi::OsString;
use std::io::Read;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};

use crate::classify::{catalog, classify_triple, product_flatness_check};
use crate::curvature::{first_bianchi_defect, weyl_part, CurvatureTensor};
use crate::error::Error;
use crate::json::to_json_string;
use crate::linalg::{Endo, QMatrix, SympSpace};
use crate::models::{build_model, Family, ModelParams};
use crate::scalar::Rational;
use crate::selftest;
use crate::triple::{validate_triple, SymmetricTriple};

pub const MAX_DIM_VAR: &str = "RTK_MAX_DIM";
pub const DEFAULT_MAX_DIM: usize = 12;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "rtk",
    version,
    about = "Symplectic curvature of Ricci type and symmetric triples"
)]
pub struct Cli {
    /// Write the JSON result to this file instead of standard output.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a model triple.
    Build(BuildArgs),
    /// Check the triple axioms on a serialized triple.
    Validate {
        /// Triple JSON file, `-` for standard input.
        input: String,
    },
    /// Classify a serialized triple.
    Classify {
        /// Triple JSON file, `-` for standard input.
        input: String,
    },
    /// Split a curvature tensor into its Ricci-type part and `W`.
    Decompose {
        /// Curvature JSON file, `-` for standard input.
        input: String,
    },
    /// Flatness check for the product of two Ricci-type tensors.
    ProductCheck {
        /// `{"a1", "a2", "omega1"?, "omega2"?}` JSON file, `-` for standard input.
        input: String,
    },
    /// Every case in dimension `dim`.
    Catalog {
        #[arg(long, default_value_t = 4)]
        dim: usize,
    },
    /// Run the acceptance checks.
    Selftest {
        /// Run only this criterion (1 to 9).
        #[arg(long)]
        criterion: Option<u8>,
    },
}

#[derive(Debug, Args)]
pub struct BuildArgs {
    /// sl, su or nilpotent
    #[arg(long)]
    pub family: Family,
    #[arg(long)]
    pub n: usize,
    /// Nonzero rational scale, e.g. `1` or `-3/2` (sl and su only).
    #[arg(long, allow_hyphen_values = true)]
    pub s: Option<Rational>,
    #[arg(long)]
    pub p: Option<usize>,
    #[arg(long)]
    pub q: Option<usize>,
    /// Rank of `A` (nilpotent only).
    #[arg(long)]
    pub rank: Option<usize>,
}

impl BuildArgs {
    pub fn params(&self) -> ModelParams {
        ModelParams {
            family: self.family,
            n: self.n,
            s: self.s.clone(),
            p: self.p,
            q: self.q,
            rank: self.rank,
        }
    }
}

/// Input of `product-check`. Forms default to the standard one of the
/// matching size.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ProductInput {
    pub a1: Endo,
    pub a2: Endo,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub omega1: Option<QMatrix>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub omega2: Option<QMatrix>,
}

/// Output of `decompose`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DecomposeOutput {
    pub ricci: QMatrix,
    #[serde(rename = "A")]
    pub a: Endo,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<Rational>,
    #[serde(rename = "W")]
    pub w: CurvatureTensor,
    pub is_ricci_type: bool,
}

/// Structured failure written on exit code 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FailureReport {
    pub error: String,
    pub failures: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn json<T: Serialize>(code: i32, value: &T) -> Self {
        Outcome {
            code,
            stdout: to_json_string(value),
            stderr: String::new(),
        }
    }

    fn usage(msg: impl std::fmt::Display) -> Self {
        Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        }
    }

    fn failed(error: &str, failures: Vec<String>) -> Self {
        Outcome::json(
            EXIT_FAILED,
            &FailureReport {
                error: error.to_string(),
                failures,
            },
        )
    }

    /// Parameter and shape errors are usage errors; the rest are
    /// mathematical failures.
    fn from_error(e: Error) -> Self {
        match e {
            Error::InvalidParams(_)
            | Error::Parse(_)
            | Error::DimensionMismatch { .. }
            | Error::NotSquare(..)
            | Error::InvalidForm(_) => Outcome::usage(e),
            e => Outcome::failed(&e.to_string(), vec![e.to_string()]),
        }
    }
}

/// `RTK_MAX_DIM` or the default.
pub fn max_dim() -> Result<usize, String> {
    match std::env::var(MAX_DIM_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| format!("{MAX_DIM_VAR}={v:?} is not a nonnegative integer")),
        Err(_) => Ok(DEFAULT_MAX_DIM),
    }
}

fn check_dim(dim: usize, limit: usize) -> Result<(), Outcome> {
    if dim > limit {
        Err(Outcome::usage(format!(
            "dimension {dim} exceeds {MAX_DIM_VAR} = {limit}"
        )))
    } else {
        Ok(())
    }
}

fn read_json<T: for<'de> Deserialize<'de>>(
    input: &str,
    stdin: &mut dyn Read,
) -> Result<T, Outcome> {
    let mut text = String::new();
    let read = if input == "-" {
        stdin.read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(input).map(|t| text = t)
    };
    read.map_err(|e| Outcome::usage(format!("cannot read {input}: {e}")))?;
    serde_json::from_str(&text)
        .map_err(|e| Outcome::usage(format!("malformed JSON in {input}: {e}")))
}

/// Parses `args` (without the program name) and runs the command, reading
/// `-` inputs from `stdin`.
pub fn run_args<I, T>(args: I, mut stdin: impl Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv = std::iter::once(OsString::from("rtk")).chain(args.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    let output = cli.output.clone();
    let mut outcome = run(cli.command, &mut stdin);
    if let Some(path) = output {
        if !outcome.stdout.is_empty() {
            if let Err(e) = std::fs::write(&path, &outcome.stdout) {
                return Outcome::usage(format!("cannot write {}: {e}", path.display()));
            }
            outcome.stdout.clear();
        }
    }
    outcome
}

pub fn run(command: Command, stdin: &mut dyn Read) -> Outcome {
    let limit = match max_dim() {
        Ok(l) => l,
        Err(e) => return Outcome::usage(e),
    };
    match dispatch(command, stdin, limit) {
        Ok(o) | Err(o) => o,
    }
}

fn dispatch(command: Command, stdin: &mut dyn Read, limit: usize) -> Result<Outcome, Outcome> {
    match command {
        Command::Build(args) => {
            check_dim(2 * args.n, limit)?;
            let model = build_model(&args.params()).map_err(Outcome::from_error)?;
            Ok(Outcome::json(EXIT_OK, model.triple()))
        }
        Command::Validate { input } => {
            let t: SymmetricTriple = read_json(&input, stdin)?;
            check_dim(t.dim_p(), limit)?;
            let report = validate_triple(&t);
            let code = if report.is_valid() {
                EXIT_OK
            } else {
                EXIT_FAILED
            };
            Ok(Outcome::json(code, &report))
        }
        Command::Classify { input } => {
            let t: SymmetricTriple = read_json(&input, stdin)?;
            check_dim(t.dim_p(), limit)?;
            let report = validate_triple(&t);
            if !report.is_valid() {
                return Err(Outcome::failed("invalid symmetric triple", report.failures));
            }
            let c = classify_triple(&t).map_err(Outcome::from_error)?;
            Ok(Outcome::json(EXIT_OK, &c))
        }
        Command::Decompose { input } => {
            let r: CurvatureTensor = read_json(&input, stdin)?;
            check_dim(r.dim(), limit)?;
            let defect = first_bianchi_defect(&r);
            if !defect.is_zero() {
                let failures = defect
                    .nonzero_triples()
                    .into_iter()
                    .map(|(i, j, k)| format!("Bianchi fails on (e_{i}, e_{j}, e_{k})"))
                    .collect();
                return Err(Outcome::failed("first Bianchi identity fails", failures));
            }
            let dec = weyl_part(&r).map_err(Outcome::from_error)?;
            Ok(Outcome::json(
                EXIT_OK,
                &DecomposeOutput {
                    ricci: dec.ricci_data.r.matrix().clone(),
                    a: dec.ricci_data.a,
                    lambda: dec.ricci_data.lambda,
                    w: dec.w,
                    is_ricci_type: dec.is_ricci_type,
                },
            ))
        }
        Command::ProductCheck { input } => {
            let p: ProductInput = read_json(&input, stdin)?;
            let space = |omega: Option<QMatrix>, a: &Endo| -> Result<SympSpace, Outcome> {
                let s = match omega {
                    Some(o) => SympSpace::new(o),
                    None if a.is_square() && a.rows().is_multiple_of(2) && a.rows() > 0 => {
                        SympSpace::standard(a.rows() / 2)
                    }
                    None => Err(Error::Parse(format!(
                        "A must be square of positive even size, got {}x{}",
                        a.rows(),
                        a.cols()
                    ))),
                };
                s.map_err(Outcome::from_error)
            };
            let s1 = space(p.omega1, &p.a1)?;
            let s2 = space(p.omega2, &p.a2)?;
            check_dim(s1.dim() + s2.dim(), limit)?;
            let report =
                product_flatness_check(&s1, &p.a1, &s2, &p.a2).map_err(Outcome::from_error)?;
            let code = if report.theorem_holds && report.cross_block_matches {
                EXIT_OK
            } else {
                EXIT_FAILED
            };
            Ok(Outcome::json(code, &report))
        }
        Command::Catalog { dim } => {
            check_dim(dim, limit)?;
            let entries = catalog(dim).map_err(Outcome::from_error)?;
            let code = if entries.iter().all(|e| e.validation.is_valid()) {
                EXIT_OK
            } else {
                EXIT_FAILED
            };
            Ok(Outcome::json(code, &entries))
        }
        Command::Selftest { criterion } => {
            let report = match criterion {
                Some(id) if selftest::CRITERIA.iter().any(|c| c.0 == id) => {
                    let c = selftest::run_criterion(id);
                    let passed = usize::from(c.passed);
                    selftest::SelftestReport {
                        passed,
                        failed: 1 - passed,
                        criteria: vec![c],
                    }
                }
                Some(id) => {
                    return Err(Outcome::usage(format!(
                        "no criterion {id}, expected 1 to 9"
                    )))
                }
                None => selftest::run_all(),
            };
            let code = if report.failed == 0 {
                EXIT_OK
            } else {
                EXIT_FAILED
            };
            Ok(Outcome::json(code, &report))
        }
    }
}
