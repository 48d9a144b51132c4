use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use tripotent_core::classes::{classify, signature};
use tripotent_core::decomp::{hs_decompose, mp_inverse};
use tripotent_core::generators::{generate, Construction, GenSpec};
use tripotent_core::{Check, ClassLabel, Signature, TheoremReport, ToleranceConfig};
use tripotent_harness::json::{matrix_to_string, read_matrix, HsJson, MatrixJson, ReportJson};
use tripotent_harness::search::{search_counterexample, Ensemble};
use tripotent_harness::suite::{run_suite, CellStatus, SuiteConfig, SuiteReport};
use tripotent_harness::HarnessError;

const EXIT_USAGE: u8 = 2;
const EXIT_NOT_SQUARE: u8 = 3;
const EXIT_INCONSISTENT: u8 = 4;
const EXIT_SIDE_CONDITION: u8 = 5;

#[derive(Parser)]
#[command(name = "tripotent", version, about = "Classify matrices and verify orthogonal-tripotent characterizations")]
struct Cli {
    /// Override the equality tolerance.
    #[arg(long, global = true)]
    tol: Option<f64>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// Class memberships with residuals, and the signature of a tripotent.
    Classify { file: PathBuf },
    /// Moore-Penrose inverse, as matrix JSON.
    Pinv { file: PathBuf },
    /// Hartwig-Spindelböck decomposition.
    Decompose { file: PathBuf },
    /// Run one checker.
    Check {
        file: PathBuf,
        /// Family name (`power-family`) or full id (`power-family/b[s=2,t=0]`).
        #[arg(long)]
        theorem: String,
        #[arg(long)]
        variant: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        s: Option<i32>,
        #[arg(long, allow_hyphen_values = true)]
        t: Option<i32>,
        #[arg(long)]
        k: Option<u32>,
    },
    /// Generate a matrix, as matrix JSON.
    Generate {
        #[arg(long)]
        n: usize,
        /// Class label or named construction.
        #[arg(long)]
        label: String,
        /// `p,q,z` (ThreeOP only).
        #[arg(long)]
        signature: Option<String>,
        #[arg(long)]
        rank: Option<usize>,
        #[arg(long, env = "TRIPOTENT_SEED", default_value_t = 0)]
        seed: u64,
    },
    /// Soundness and completeness sweeps.
    Suite {
        /// JSON suite configuration; flags below override it.
        #[arg(long)]
        config: Option<PathBuf>,
        /// Comma-separated sizes.
        #[arg(long, value_delimiter = ',')]
        sizes: Option<Vec<usize>>,
        #[arg(long)]
        trials: Option<usize>,
        #[arg(long, env = "TRIPOTENT_SEED")]
        seed: Option<u64>,
        /// Family name or full id; repeatable.
        #[arg(long)]
        theorem: Vec<String>,
    },
    /// Search an ensemble for a matrix where condition and target disagree.
    Search {
        #[arg(long)]
        identity: String,
        /// Construction name or `all`.
        #[arg(long)]
        ensemble: String,
        #[arg(long)]
        budget: u64,
        #[arg(long, env = "TRIPOTENT_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = Ensemble::DEFAULT_MAX_N)]
        max_n: usize,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl From<HarnessError> for Failure {
    fn from(e: HarnessError) -> Self {
        use tripotent_core::Error as E;
        let code = match &e {
            HarnessError::Core(E::NotSquare { .. }) => EXIT_NOT_SQUARE,
            HarnessError::Core(E::SideCondition { .. }) => EXIT_SIDE_CONDITION,
            HarnessError::Core(E::NoConvergence { .. }) => 1,
            _ => EXIT_USAGE,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<tripotent_core::Error> for Failure {
    fn from(e: tripotent_core::Error) -> Self {
        HarnessError::from(e).into()
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_USAGE, message: message.into() }
}

type Outcome = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut cfg = ToleranceConfig::default();
    if let Some(t) = cli.tol {
        cfg.eq_tol = t;
    }
    let result = cfg.validate().map_err(Failure::from).and_then(|()| run(&cli, &cfg));
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: &Cli, cfg: &ToleranceConfig) -> Outcome {
    let fmt = cli.format;
    match &cli.command {
        Command::Classify { file } => cmd_classify(file, cfg, fmt),
        Command::Pinv { file } => {
            let a = read_matrix(file)?;
            println!("{}", matrix_to_string(&mp_inverse(&a, cfg)?));
            Ok(0)
        }
        Command::Decompose { file } => cmd_decompose(file, cfg, fmt),
        Command::Check { file, theorem, variant, s, t, k } => {
            let a = read_matrix(file)?;
            a.require_square()?;
            let check = Check::parse(theorem, variant.as_deref(), *s, *t, *k)?;
            let r = tripotent_core::characterizations::check(&a, &check, cfg)?;
            print_report(&r, fmt);
            Ok(if r.verdict_consistent { 0 } else { EXIT_INCONSISTENT })
        }
        Command::Generate { n, label, signature, rank, seed } => {
            let construction: Construction = label.parse()?;
            let signature = signature.as_deref().map(parse_signature).transpose()?;
            let spec = GenSpec { n: *n, construction, signature, rank: *rank, seed: *seed };
            println!("{}", matrix_to_string(&generate(&spec)?));
            Ok(0)
        }
        Command::Suite { config, sizes, trials, seed, theorem } => {
            let mut sc = match config {
                Some(path) => read_suite_config(path)?,
                None => SuiteConfig::default(),
            };
            if let Some(s) = sizes {
                sc.sizes = s.clone();
            }
            if let Some(t) = trials {
                sc.trials_per_cell = *t;
            }
            if let Some(s) = seed {
                sc.seed = *s;
            }
            if !theorem.is_empty() {
                sc.theorems = theorem.clone();
            }
            if cli.tol.is_some() {
                sc.tolerance.eq_tol = cfg.eq_tol;
            }
            let report = run_suite(&sc)?;
            print_suite(&report, fmt);
            Ok(if report.all_pass() { 0 } else { EXIT_INCONSISTENT })
        }
        Command::Search { identity, ensemble, budget, seed, max_n } => {
            let check: Check = identity.parse()?;
            let e = Ensemble::parse(ensemble, *max_n)?;
            let hit = search_counterexample(&check, &e, *budget, *seed, cfg)?;
            match (&hit, fmt) {
                (_, Format::Json) => {
                    let v = json!({
                        "identity": check.id(),
                        "found": hit.is_some(),
                        "sample": hit.as_ref().map(|w| w.sample),
                        "witness": hit.as_ref().map(|w| MatrixJson(&w.matrix)),
                        "report": hit.as_ref().map(|w| ReportJson(&w.report)),
                    });
                    println!("{}", serde_json::to_string_pretty(&v).expect("serializes"));
                }
                (Some(w), Format::Table) => {
                    println!("{}: witness at sample {}", check.id(), w.sample);
                    print_report(&w.report, Format::Table);
                }
                (None, Format::Table) => println!("{}: no witness in {budget} samples", check.id()),
            }
            Ok(0)
        }
    }
}

fn parse_signature(s: &str) -> Result<Signature, Failure> {
    let parts: Vec<usize> = s
        .split(',')
        .map(|p| p.trim().parse::<usize>())
        .collect::<Result<_, _>>()
        .map_err(|_| usage(format!("signature `{s}` is not p,q,z")))?;
    match parts[..] {
        [p, q, z] => Ok(Signature { p, q, z }),
        _ => Err(usage(format!("signature `{s}` is not p,q,z"))),
    }
}

fn read_suite_config(path: &Path) -> Result<SuiteConfig, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| HarnessError::from(e).into())
}

fn cmd_classify(file: &Path, cfg: &ToleranceConfig, fmt: Format) -> Outcome {
    let a = read_matrix(file)?;
    a.require_square()?;
    let classes = classify(&a, cfg)?;
    let three_op = classes.iter().any(|&(l, m, _)| l == ClassLabel::ThreeOP && m);
    let sig = if three_op { Some(signature(&a, cfg)?) } else { None };
    match fmt {
        Format::Json => {
            let rows: Vec<_> =
                classes.iter().map(|&(l, m, r)| json!({ "label": l.name(), "member": m, "residual": r })).collect();
            let sig = sig.map(|s| json!({ "p": s.p, "q": s.q, "z": s.z }));
            print_json(&json!({ "classes": rows, "signature": sig }));
        }
        Format::Table => {
            for (l, m, r) in classes {
                println!("{:<8} {:<5} {:.3e}", l.name(), m, r);
            }
            if let Some(s) = sig {
                println!("signature ({},{},{})", s.p, s.q, s.z);
            }
        }
    }
    Ok(0)
}

fn cmd_decompose(file: &Path, cfg: &ToleranceConfig, fmt: Format) -> Outcome {
    let a = read_matrix(file)?;
    let d = hs_decompose(&a, cfg)?;
    match fmt {
        Format::Json => print_json(&HsJson(&d)),
        Format::Table => {
            let rec = d.reconstruct().frobenius_distance(&a).expect("same shape") / 1f64.max(a.frobenius_norm());
            println!("rank      {}", d.rank);
            println!("sigma     {:?}", d.sigma);
            println!("A - U[SK SL;0 0]U*   {rec:.3e}");
            println!("KK* + LL* - I        {:.3e}", d.coisometry_residual());
        }
    }
    Ok(0)
}

fn print_json<T: Serialize>(v: &T) {
    println!("{}", serde_json::to_string_pretty(v).expect("serializes"));
}

fn print_report(r: &TheoremReport, fmt: Format) {
    match fmt {
        Format::Json => print_json(&ReportJson(r)),
        Format::Table => {
            println!("theorem      {}", r.theorem_id);
            println!("condition    {}", r.condition_holds);
            println!("3-OP         {}", r.is_three_op);
            if r.target != "3-OP" {
                println!("target       {} = {}", r.target, r.target_holds);
            }
            if let Some(x) = r.exclusion_flag {
                println!("exclusion    {x}");
            }
            println!("consistent   {}", r.verdict_consistent);
            for (name, v) in &r.residuals {
                println!("  {name:<48} {v:.3e}");
            }
        }
    }
}

fn print_suite(r: &SuiteReport, fmt: Format) {
    match fmt {
        Format::Json => print_json(r),
        Format::Table => {
            let count = |s: CellStatus| r.cells.iter().filter(|c| c.status() == s).count();
            for c in r.cells.iter().filter(|c| c.status() != CellStatus::Pass) {
                let status = if c.status() == CellStatus::Fail { "FAIL" } else { "EXCEPTION" };
                println!(
                    "{status:<9} {:<40} {:<24} n={:<2} {}/{} failed",
                    c.theorem,
                    c.class,
                    c.size,
                    c.failed,
                    c.trials()
                );
            }
            println!(
                "{} cells: {} pass, {} expected-exception, {} fail ({:.1}s)",
                r.cells.len(),
                count(CellStatus::Pass),
                count(CellStatus::ExpectedException),
                count(CellStatus::Fail),
                r.duration_secs
            );
        }
    }
}
