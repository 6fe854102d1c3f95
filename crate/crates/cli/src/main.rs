//! Command-line front end for exact Jordan-Chevalley decompositions.
//!
//! Exit codes: 0 success, 1 a verification check failed, 2 element not in
//! the derived algebra, 3 basis not bracket-closed, 4 parse or validation
//! error, 5 internal invariant violation.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use lie_jcd::abstract_jcd::{verify_decomposition, AbstractJordanPair, Decomposer, VerifyOptions};
use lie_jcd::io::{self, AlgebraDocument, CertificateInput, ElementDocument};
use lie_jcd::reps::build_representation;
use lie_jcd::{levi_decomposition, matrix_jordan_chevalley, Error, LieAlgebra, RepDescriptor, Representation};

const EXIT_CHECK_FAILED: u8 = 1;
const EXIT_NOT_IN_DERIVED: u8 = 2;
const EXIT_NOT_CLOSED: u8 = 3;
const EXIT_INVALID: u8 = 4;
const EXIT_INTERNAL: u8 = 5;

#[derive(Debug, Parser)]
#[command(
    name = "lie-jcd",
    version,
    about = "Exact Jordan-Chevalley decompositions in Lie algebras over Q"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Semisimple and nilpotent parts of a single matrix.
    MatrixJcd { matrix: PathBuf },
    /// Abstract decomposition of an element of [g, g].
    Decompose {
        algebra: PathBuf,
        element: PathBuf,
        #[command(flatten)]
        reps: RepArgs,
        /// Include the bases of n0, n_* and [g, r].
        #[arg(long)]
        emit_internals: bool,
    },
    /// Re-check the S and N of a decomposition certificate.
    Verify {
        algebra: PathBuf,
        certificate: PathBuf,
        #[command(flatten)]
        reps: RepArgs,
    },
    /// Solvable radical, derived algebra and center.
    Radical { algebra: PathBuf },
    /// Levi subalgebra, radical and [g, r].
    Levi { algebra: PathBuf },
    /// Check bracket closure of a matrix basis.
    Closure {
        algebra: PathBuf,
        /// Extend the basis to its Lie closure instead of failing.
        #[arg(long)]
        auto_close: bool,
    },
}

#[derive(Debug, Args)]
struct RepArgs {
    /// Representation descriptor, e.g. "tensor(natural,adjoint)". Repeatable.
    #[arg(long = "rep", value_name = "DESC")]
    reps: Vec<String>,
    /// Random samples per shift check.
    #[arg(long, default_value_t = 10)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

impl RepArgs {
    fn options(&self) -> VerifyOptions {
        VerifyOptions {
            samples: self.samples,
            seed: self.seed,
        }
    }
}

#[derive(Debug)]
enum Failure {
    Lib(Error),
    Io(PathBuf, std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Lib(Error::NotInDerivedAlgebra(_)) => EXIT_NOT_IN_DERIVED,
            Failure::Lib(Error::NotClosed { .. }) => EXIT_NOT_CLOSED,
            Failure::Lib(Error::InternalInvariantViolation(_)) => EXIT_INTERNAL,
            _ => EXIT_INVALID,
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Lib(Error::NotInDerivedAlgebra(w)) => format!(
                "element is not in the derived algebra: the functional {:?} vanishes on [g, g] but takes the value {} on it",
                io::rational_strings(&w.functional),
                w.value
            ),
            Failure::Lib(e) => e.to_string(),
            Failure::Io(path, e) => format!("{}: {e}", path.display()),
        }
    }
}

/// A finished command: exit code and the JSON written to standard output.
struct Outcome {
    code: u8,
    output: Value,
}

impl Outcome {
    fn ok(output: Value) -> Self {
        Outcome { code: 0, output }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Io(path.to_path_buf(), e))
}

fn load_algebra(path: &Path) -> Result<LieAlgebra, Failure> {
    Ok(AlgebraDocument::parse(&read(path)?)?.to_algebra()?)
}

/// Default representations (natural in matrix mode, adjoint) followed by
/// the requested ones, without repeats.
fn representations<'g>(g: &'g LieAlgebra, extra: &[String]) -> Result<Vec<Representation<'g>>, Failure> {
    let mut descriptors = Vec::new();
    if g.is_matrix_mode() {
        descriptors.push(RepDescriptor::Natural);
    }
    descriptors.push(RepDescriptor::Adjoint);
    for text in extra {
        let d: RepDescriptor = text.parse()?;
        if !descriptors.contains(&d) {
            descriptors.push(d);
        }
    }
    Ok(descriptors
        .iter()
        .map(|d| build_representation(g, d))
        .collect::<lie_jcd::Result<Vec<_>>>()?)
}

fn descriptor_names(reps: &[Representation<'_>]) -> Vec<String> {
    reps.iter().map(|r| r.descriptor().to_string()).collect()
}

fn run(command: Command) -> Result<Outcome, Failure> {
    match command {
        Command::MatrixJcd { matrix } => {
            let m = io::parse_matrix(&read(&matrix)?)?;
            let pair = matrix_jordan_chevalley(&m)?;
            Ok(Outcome::ok(serde_json::to_value(&pair).expect("serializable")))
        }
        Command::Decompose {
            algebra,
            element,
            reps,
            emit_internals,
        } => {
            let g = load_algebra(&algebra)?;
            let x = ElementDocument::parse(&read(&element)?)?.coordinates(&g)?;
            let decomposer = Decomposer::new(&g)?;
            let pair = decomposer.decompose(&x)?;
            let family = representations(&g, &reps.reps)?;
            let report = verify_decomposition(&g, &pair, &family, reps.options())?;
            let mut doc = io::certificate_json(&g, &pair, &report, &descriptor_names(&family), emit_internals)?;
            if emit_internals {
                doc["internals"]["levi"] = io::basis_json(decomposer.levi().levi());
            }
            let code = if report.all_passed() { 0 } else { EXIT_INTERNAL };
            Ok(Outcome { code, output: doc })
        }
        Command::Verify {
            algebra,
            certificate,
            reps,
        } => {
            let g = load_algebra(&algebra)?;
            let cert = CertificateInput::parse(&read(&certificate)?)?;
            for v in [&cert.x, &cert.semisimple, &cert.nilpotent] {
                if v.len() != g.dim() {
                    return Err(Error::DimensionMismatch {
                        expected: g.dim(),
                        found: v.len(),
                    }
                    .into());
                }
            }
            let reference = Decomposer::new(&g)?.decompose(&cert.x)?;
            let agrees = reference.semisimple == cert.semisimple && reference.nilpotent == cert.nilpotent;
            let pair = AbstractJordanPair {
                element: cert.x.clone(),
                semisimple: cert.semisimple.clone(),
                nilpotent: cert.nilpotent.clone(),
                internals: reference.internals,
            };
            let mut requested = cert.reps.clone();
            requested.extend(reps.reps.iter().cloned());
            let family = representations(&g, &requested)?;
            let report = verify_decomposition(&g, &pair, &family, reps.options())?;
            let mut doc = io::report_json(&report);
            doc["agrees_with_recomputation"] = Value::Bool(agrees);
            doc["reps"] = json!(descriptor_names(&family));
            let passed = report.all_passed() && agrees;
            doc["all_passed"] = Value::Bool(passed);
            Ok(Outcome {
                code: if passed { 0 } else { EXIT_CHECK_FAILED },
                output: doc,
            })
        }
        Command::Radical { algebra } => {
            let g = load_algebra(&algebra)?;
            Ok(Outcome::ok(io::radical_json(&g)))
        }
        Command::Levi { algebra } => {
            let g = load_algebra(&algebra)?;
            let ld = levi_decomposition(&g)?;
            Ok(Outcome::ok(io::levi_json(&ld)))
        }
        Command::Closure { algebra, auto_close } => {
            let doc = AlgebraDocument::parse(&read(&algebra)?)?;
            let doc = if auto_close { doc.closed()? } else { doc };
            doc.to_algebra()?;
            Ok(Outcome::ok(serde_json::to_value(&doc).expect("serializable")))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(outcome) => {
            let text = serde_json::to_string_pretty(&outcome.output).expect("serializable");
            // a closed pipe downstream is not our failure
            let _ = writeln!(std::io::stdout(), "{text}");
            if outcome.code != 0 {
                eprintln!("error: verification failed");
            }
            ExitCode::from(outcome.code)
        }
        Err(failure) => {
            eprintln!("error: {}", failure.message());
            ExitCode::from(failure.exit_code())
        }
    }
}
