//! `brace`: build, analyze and verify finite left braces and their
//! Yang-Baxter solutions.
//!
//! Exit codes: 0 success, 1 property failure, 2 precondition or structural
//! error, 3 size guard. JSON goes to stdout (or `--out`), human-readable
//! summaries to stderr.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use brace_core::analysis::{ideal_closure, quotient, summarize};
use brace_core::ybe::{solution_from_brace, verify_braid, verify_involutive, verify_nondegenerate};
use brace_core::{Limits, Subset};
use brace_cli::family::FamilyParams;
use brace_cli::io::{read_brace, read_json, write_json, BraceFile, SolutionFile};
use brace_cli::report::{AnalysisReport, VerifyReport, YbeReport};
use brace_cli::{CliError, CliResult, EXIT_OK, EXIT_PROPERTY};
use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(name = "brace", version, about = "Finite left braces: products, simple families, analysis and Yang-Baxter solutions")]
struct Cli {
    /// Largest order any command may build or load (at most 16384).
    #[arg(long, global = true, env = "BRACE_MAX_ORDER")]
    max_order: Option<usize>,
    /// Above this order the O(n³) checks are sampled instead of exhaustive.
    #[arg(long, global = true)]
    full_check_threshold: Option<usize>,
    /// Largest order accepted by ideal-lattice enumeration.
    #[arg(long, global = true)]
    analysis_cap: Option<usize>,
    /// Run every check exhaustively regardless of order.
    #[arg(long, global = true)]
    force_full: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a brace from a named family and write it as JSON.
    Build(BuildArgs),
    /// Print the structural analysis report of a brace file.
    Analyze {
        file: PathBuf,
        /// Also enumerate the ideal lattice (subject to the analysis cap).
        #[arg(long)]
        ideals: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the brace axioms of a file; exit 1 with a witness if one fails.
    Verify { file: PathBuf },
    /// Derive the Yang-Baxter solution of a brace.
    Ybe {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Check braid relation, involutivity and non-degeneracy.
        #[arg(long)]
        verify: bool,
    },
    /// Quotient by the ideal generated by the given elements.
    Quotient {
        file: PathBuf,
        /// Comma-separated generators of the ideal.
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        ideal: Vec<usize>,
        /// Fail (exit 2) when the generated ideal is the whole brace.
        #[arg(long)]
        proper: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct BuildArgs {
    /// trivial, b3, perfect_not_simple, wreath, wreath_simple, generalized,
    /// concrete, h_brace or matched.
    #[arg(long)]
    family: Option<String>,
    /// Family parameter JSON file, `{"family": …, …}`.
    #[arg(long, conflicts_with = "family")]
    params: Option<PathBuf>,
    #[arg(long)]
    p1: Option<u64>,
    #[arg(long)]
    p2: Option<u64>,
    #[arg(long)]
    p: Option<u64>,
    #[arg(long, value_delimiter = ',')]
    l: Vec<u64>,
    #[arg(long, value_delimiter = ',')]
    orders: Vec<usize>,
    #[arg(long, value_delimiter = ',')]
    base: Vec<usize>,
    #[arg(long, value_delimiter = ',')]
    top: Vec<usize>,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn required<T>(value: Option<T>, flag: &str, family: &str) -> CliResult<T> {
    value.ok_or_else(|| CliError::Usage(format!("family {family} needs --{flag}")))
}

fn nonempty<T: Clone>(values: &[T], flag: &str, family: &str) -> CliResult<Vec<T>> {
    if values.is_empty() {
        return Err(CliError::Usage(format!("family {family} needs --{flag}")));
    }
    Ok(values.to_vec())
}

impl BuildArgs {
    fn params(&self) -> CliResult<FamilyParams> {
        if let Some(path) = &self.params {
            return read_json(path);
        }
        let family = self.family.as_deref().ok_or_else(|| CliError::Usage("give --family or --params".into()))?;
        Ok(match family {
            "trivial" => FamilyParams::Trivial { orders: nonempty(&self.orders, "orders", family)? },
            "b3" => FamilyParams::B3,
            "perfect_not_simple" => FamilyParams::PerfectNotSimple {
                p1: required(self.p1, "p1", family)?,
                p2: required(self.p2, "p2", family)?,
            },
            "wreath" => FamilyParams::Wreath {
                base: nonempty(&self.base, "base", family)?,
                top: nonempty(&self.top, "top", family)?,
            },
            "wreath_simple" => FamilyParams::WreathSimple {
                p1: required(self.p1, "p1", family)?,
                p2: required(self.p2, "p2", family)?,
            },
            "concrete" => FamilyParams::Concrete { p: required(self.p, "p", family)?, l: nonempty(&self.l, "l", family)? },
            "generalized" | "h_brace" | "matched" => {
                return Err(CliError::Usage(format!("family {family} takes its matrices from --params")))
            }
            other => return Err(CliError::Usage(format!("unknown family {other}"))),
        })
    }
}

fn limits(cli: &Cli) -> CliResult<Limits> {
    let mut limits = match cli.max_order {
        Some(m) => Limits::with_max_order(m)?,
        None => Limits::default(),
    };
    if let Some(t) = cli.full_check_threshold {
        limits.full_check_threshold = t;
    }
    if let Some(c) = cli.analysis_cap {
        limits.analysis_cap = c;
    }
    limits.force_full = cli.force_full;
    Ok(limits)
}

fn run(cli: &Cli) -> CliResult<u8> {
    let limits = limits(cli)?;
    match &cli.command {
        Command::Build(args) => {
            let params = args.params()?;
            let b = params.build(&limits)?;
            write_json(&BraceFile::from_brace(&b), args.out.as_deref())?;
            eprintln!("built {} brace of order {}", params.name(), b.order());
            Ok(EXIT_OK)
        }
        Command::Analyze { file, ideals, out } => {
            let b = read_brace(file, &limits)?;
            let report = AnalysisReport::from(summarize(&b, *ideals, &limits)?);
            write_json(&report, out.as_deref())?;
            eprintln!(
                "order {}: simple {}, perfect {}, socle {}, derived length {:?}",
                report.order, report.simple, report.perfect, report.socle_size, report.derived_length_mult
            );
            Ok(EXIT_OK)
        }
        Command::Verify { file } => {
            let report = read_json::<BraceFile>(file)?.verify(&limits)?;
            let out = VerifyReport::from(&report);
            write_json(&out, None)?;
            if out.valid {
                eprintln!("valid brace of order {} ({})", out.order, out.mode);
                Ok(EXIT_OK)
            } else {
                for v in &out.violations {
                    eprintln!("violated {}: {}", v.axiom, v.message);
                }
                Ok(EXIT_PROPERTY)
            }
        }
        Command::Ybe { file, out, verify } => {
            let b = read_brace(file, &limits)?;
            let s = solution_from_brace(&b);
            let solution = SolutionFile::from_solution(&s);
            if !verify {
                write_json(&solution, out.as_deref())?;
                eprintln!("solution on {} elements", s.size());
                return Ok(EXIT_OK);
            }
            let report = YbeReport {
                size: s.size(),
                braid: verify_braid(&s, &limits).into(),
                involutive: verify_involutive(&s).into(),
                nondegenerate: verify_nondegenerate(&s).into(),
            };
            // With --out the solution goes to the file and the report to
            // stdout; otherwise stdout carries the solution.
            match out {
                Some(path) => {
                    write_json(&solution, Some(path))?;
                    write_json(&report, None)?;
                }
                None => write_json(&solution, None)?,
            }
            eprintln!(
                "braid {}, involutive {}, non-degenerate {}",
                report.braid.passed, report.involutive.passed, report.nondegenerate.passed
            );
            Ok(if report.passed() { EXIT_OK } else { EXIT_PROPERTY })
        }
        Command::Quotient { file, ideal, proper, out } => {
            let b = read_brace(file, &limits)?;
            if let Some(&x) = ideal.iter().find(|&&x| x >= b.order()) {
                return Err(CliError::Usage(format!("element {x} is out of range for order {}", b.order())));
            }
            let seed = Subset::from_elements(b.order(), ideal.iter().copied().chain([0]));
            let closure = ideal_closure(&b, &seed);
            eprintln!("generated ideal has {} of {} elements", closure.len(), b.order());
            if *proper && closure.is_full() {
                return Err(CliError::Usage("the generated ideal is the whole brace".into()));
            }
            let q = quotient(&b, &closure, &limits)?;
            let mut brace = q.brace;
            brace.set_meta("family", "quotient");
            brace.set_meta("parent_order", b.order().to_string());
            if let Some(family) = b.meta().get("family") {
                brace.set_meta("parent_family", family.clone());
            }
            brace.set_meta("ideal", format!("{:?}", closure.to_vec()));
            brace.set_meta("projection", format!("{:?}", q.projection.image()));
            write_json(&BraceFile::from_brace(&brace), out.as_deref())?;
            eprintln!("quotient of order {}", brace.order());
            Ok(EXIT_OK)
        }
    }
}

fn report_error(e: &CliError) -> u8 {
    eprintln!("error: {e}");
    // The machine-readable record is best effort: stdout may be closed.
    let _ = write_json(&e.to_json(), None::<&Path>);
    e.exit_code()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match run(&cli) {
        Ok(code) => code,
        Err(e) => report_error(&e),
    };
    ExitCode::from(code)
}
