//! Command-line front end over model files.
//!
//! Exit codes: 0 success or pass, 1 negative verdict, 2 usage, parse or
//! precondition error. `--porcelain` switches every report to stable
//! `key=value` lines.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::bmatrix::{self, BMatrix, Reduction};
use crate::bvec::{BVec, VecSet};
use crate::chains;
use crate::error::{Error, Result};
use crate::model::ModelFile;
use crate::oracle::{self, Theorem};

#[derive(Parser, Debug)]
#[command(name = "boolspace", about = "Boolean matrices and vectors over finite Boolean algebras")]
struct Args {
    /// Emit stable key=value lines instead of human-readable reports.
    #[arg(long, global = true)]
    porcelain: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Stochastic and unitary verdicts for matrices (all of them by default).
    Check { file: PathBuf, names: Vec<String> },
    /// A common invariant stochastic vector of one or more matrices.
    Invariant {
        file: PathBuf,
        #[arg(required = true)]
        names: Vec<String>,
    },
    /// Reduce a unitary matrix; with vectors, reduce by that invariant set.
    Reduce {
        file: PathBuf,
        matrix: String,
        vectors: Vec<String>,
    },
    /// Check the power theorem on a stochastic matrix.
    Powers { file: PathBuf, matrix: String },
    /// Exponent and period of a square matrix.
    Period { file: PathBuf, matrix: String },
    /// Atoms of a stochastic matrix.
    Atoms { file: PathBuf, matrix: String },
    /// Site reachability of a Boolean Markov chain.
    Reach { file: PathBuf, matrix: String },
    /// Extend named stochastic orthonormal vectors to a basis.
    BasisExtend {
        file: PathBuf,
        #[arg(required = true)]
        vectors: Vec<String>,
    },
    /// Brute-force a registered theorem (exhaustive, or random with --seed).
    Verify {
        #[arg(long)]
        theorem: String,
        #[arg(long)]
        n: usize,
        #[arg(long = "atoms")]
        k: usize,
        /// Largest exhaustive workload to accept.
        #[arg(long, default_value_t = oracle::DEFAULT_BUDGET)]
        budget: u128,
        /// Run a seeded random sweep instead of exhaustive enumeration.
        #[arg(long)]
        seed: Option<u64>,
        /// Sample count for random sweeps.
        #[arg(long, default_value_t = 500)]
        samples: u64,
    },
}

/// Result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String, positive: bool) -> Self {
        Outcome {
            code: if positive { 0 } else { 1 },
            stdout,
            stderr: String::new(),
        }
    }

    fn error(msg: String) -> Self {
        Outcome {
            code: 2,
            stdout: String::new(),
            stderr: msg,
        }
    }
}

/// Parses `argv` (program name first) and runs the command.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = match Args::try_parse_from(argv) {
        Ok(a) => a,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => Outcome::ok(text, true),
                _ => Outcome::error(text),
            };
        }
    };
    match dispatch(&args.command, args.porcelain) {
        Ok((out, positive)) => Outcome::ok(out, positive),
        Err(e) => Outcome::error(format!("error: {e}\n")),
    }
}

fn load(path: &PathBuf) -> Result<ModelFile> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Unsupported(format!("cannot read {}: {e}", path.display())))?;
    ModelFile::parse(&text).map_err(|e| match e {
        Error::Syntax { line, column, message } => {
            Error::Unsupported(format!("{}:{line}:{column}: {message}", path.display()))
        }
        other => other,
    })
}

/// Rows joined by `;`, entries by spaces.
fn flat(m: &BMatrix) -> String {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| m.get(i, j).to_string()).collect::<Vec<_>>().join(" "))
        .collect::<Vec<_>>()
        .join(";")
}

fn indent(text: &str) -> String {
    text.lines().map(|l| format!("  {l}\n")).collect()
}

fn dispatch(cmd: &Command, porcelain: bool) -> Result<(String, bool)> {
    let mut out = String::new();
    match cmd {
        Command::Check { file, names } => {
            let model = load(file)?;
            let chosen: Vec<(&str, &BMatrix)> = if names.is_empty() {
                model.matrices().collect()
            } else {
                names
                    .iter()
                    .map(|n| model.matrix(n).map(|m| (n.as_str(), m)))
                    .collect::<Result<_>>()?
            };
            if chosen.is_empty() {
                return Err(Error::precondition("the model has no matrices"));
            }
            let mut all_stochastic = true;
            for (name, m) in chosen {
                let stochastic = m.is_square() && m.is_stochastic()?;
                let unitary = m.is_unitary();
                all_stochastic &= stochastic;
                if porcelain {
                    writeln!(out, "{name}.stochastic={stochastic}\n{name}.unitary={unitary}").unwrap();
                } else {
                    let yn = |b: bool| if b { "yes" } else { "no" };
                    writeln!(out, "{name}: stochastic {}, unitary {}", yn(stochastic), yn(unitary)).unwrap();
                }
            }
            Ok((out, all_stochastic))
        }
        Command::Invariant { file, names } => {
            let model = load(file)?;
            let ms: Vec<BMatrix> = names.iter().map(|n| model.matrix(n).cloned()).collect::<Result<_>>()?;
            let tr = bmatrix::joint_trace(&ms)?;
            let found = bmatrix::find_invariant_stochastic(&ms)?;
            match (&found, porcelain) {
                (Some(b), true) => writeln!(out, "trace={tr}\ninvariant={b}").unwrap(),
                (None, true) => writeln!(out, "trace={tr}\ninvariant=none").unwrap(),
                (Some(b), false) => writeln!(out, "{b}").unwrap(),
                (None, false) => writeln!(out, "none (trace = {tr})").unwrap(),
            }
            Ok((out, found.is_some()))
        }
        Command::Reduce { file, matrix, vectors } => {
            let model = load(file)?;
            let a = model.matrix(matrix)?;
            let red = if vectors.is_empty() {
                bmatrix::reduce_fully(a)?
            } else {
                let vs: Vec<BVec> = vectors.iter().map(|n| model.vector(n).cloned()).collect::<Result<_>>()?;
                bmatrix::reduce_by_orthogonal_set(a, &VecSet::new(a.algebra(), a.rows(), vs)?)?
            };
            report_reduction(&mut out, &red, porcelain)?;
            Ok((out, red.fixed_count > 0))
        }
        Command::Powers { file, matrix } => {
            let model = load(file)?;
            let a = model.matrix(matrix)?;
            let holds = chains::verify_power_theorem(a)?;
            let n = a.rows() as u64;
            let l = chains::lcm_upto(n);
            let unitary = a.is_unitary();
            if porcelain {
                writeln!(out, "n={n}\nlcm={l}\nlhs_exponent={}\nrhs_exponent={}\nunitary={unitary}\nholds={holds}", l + n - 1, n - 1).unwrap();
            } else {
                writeln!(out, "[{n}] = {l}; A^{} = A^{}: {}", l + n - 1, n - 1, if holds { "holds" } else { "FAILS" }).unwrap();
                if unitary {
                    writeln!(out, "unitary, so also A^{l} = I").unwrap();
                }
            }
            Ok((out, holds))
        }
        Command::Period { file, matrix } => {
            let model = load(file)?;
            let a = model.matrix(matrix)?;
            let prof = chains::power_profile(a)?;
            if porcelain {
                writeln!(out, "exponent={}\nperiod={}\ndistinct_powers={}", prof.exponent, prof.period, prof.prefix_powers.len()).unwrap();
            } else {
                writeln!(out, "e={}, p={}", prof.exponent, prof.period).unwrap();
                for (s, m) in prof.prefix_powers.iter().enumerate() {
                    write!(out, "A^{}:\n{}", s + 1, indent(&m.to_string())).unwrap();
                }
                writeln!(out, "A^{} = A^{}", prof.exponent + prof.period, prof.exponent).unwrap();
            }
            Ok((out, true))
        }
        Command::Atoms { file, matrix } => {
            let model = load(file)?;
            let at = chains::matrix_atoms(model.matrix(matrix)?)?;
            if porcelain {
                writeln!(out, "count={}", at.len()).unwrap();
            }
            for (t, w) in at.atoms.iter().enumerate() {
                let sel: Vec<String> = at.selectors[t].iter().map(|k| (k + 1).to_string()).collect();
                if porcelain {
                    writeln!(out, "atom.{}={w}\natom.{}.rows={}", t + 1, t + 1, sel.join(",")).unwrap();
                } else {
                    writeln!(out, "{w}: rows {}", sel.join(" ")).unwrap();
                }
            }
            Ok((out, true))
        }
        Command::Reach { file, matrix } => {
            let model = load(file)?;
            let report = chains::relation_report(model.matrix(matrix)?)?;
            if porcelain {
                out += &report.porcelain();
            } else {
                writeln!(out, "{report}").unwrap();
            }
            Ok((out, true))
        }
        Command::BasisExtend { file, vectors } => {
            let model = load(file)?;
            let vs: Vec<BVec> = vectors.iter().map(|n| model.vector(n).cloned()).collect::<Result<_>>()?;
            let basis = VecSet::from_vectors(vs)?.extend_to_basis()?;
            for (i, v) in basis.iter().enumerate() {
                if porcelain {
                    writeln!(out, "basis.{}={v}", i + 1).unwrap();
                } else {
                    writeln!(out, "{v}").unwrap();
                }
            }
            Ok((out, true))
        }
        Command::Verify {
            theorem,
            n,
            k,
            budget,
            seed,
            samples,
        } => {
            let t: Theorem = theorem.parse()?;
            let verdict = match seed {
                Some(s) => oracle::random_check(t, *n, *k, *samples, *s)?,
                None => oracle::brute_check(t, *n, *k, *budget)?,
            };
            if porcelain {
                out += &verdict.porcelain();
            } else {
                writeln!(out, "{verdict}").unwrap();
            }
            Ok((out, verdict.pass))
        }
    }
}

fn report_reduction(out: &mut String, red: &Reduction, porcelain: bool) -> Result<()> {
    let core_trace = if red.core.rows() > 0 {
        Some(red.core.trace()?)
    } else {
        None
    };
    let further = core_trace.as_ref().is_some_and(|t| t.is_one());
    if porcelain {
        writeln!(out, "fixed_count={}\nconjugator={}\ncore={}", red.fixed_count, flat(&red.conjugator), flat(&red.core)).unwrap();
        match &core_trace {
            Some(t) => writeln!(out, "core_trace={t}").unwrap(),
            None => writeln!(out, "core_trace=none").unwrap(),
        }
        writeln!(out, "further_reduction={further}").unwrap();
        return Ok(());
    }
    write!(out, "B =\n{}", indent(&red.conjugator.to_string())).unwrap();
    if red.core.rows() > 0 {
        write!(out, "C =\n{}", indent(&red.core.to_string())).unwrap();
    } else {
        writeln!(out, "C is empty").unwrap();
    }
    writeln!(out, "fixed_count = {}", red.fixed_count).unwrap();
    match core_trace {
        Some(t) if further => writeln!(out, "tr(C) = {t}; C reduces further").unwrap(),
        Some(t) => writeln!(out, "tr(C) = {t}; no further reduction").unwrap(),
        None => writeln!(out, "fully reduced; no further reduction").unwrap(),
    }
    Ok(())
}
