mod report;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use eigencubic::algebra::{FloatAlgebra, DEFAULT_BIN_TOL};
use eigencubic::clifford::hurwitz_radon;
use eigencubic::cubics::catalog::{self, CATALOG};
use eigencubic::identities::{
    check_eiconal, check_harmonic, check_radial, classify, sample_cone, trace_identity_cubic,
    trace_identity_quadratic, DEFAULT_BOUND, DEFAULT_GRADIENT_THRESHOLD, DEFAULT_TRIALS, EXACT_MAX_DIM,
};
use eigencubic::tables::{self, Status};
use eigencubic::{CliffordSystem, CubicForm, Mode};
use serde_json::{json, Value};

/// Verification workbench for cubic minimal cones.
///
/// Cubic forms are read and written in the JSON format
/// {"dim": n, "terms": [{"ijk": [i,j,k], "c": "p/q"}, ...]}.
/// Exit status: 0 when every requested check passes, 1 when a mathematical
/// check fails, 2 on a usage or input error.
#[derive(Parser, Debug)]
#[command(name = "eigencubic", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[command(flatten)]
    run: RunArgs,
}

#[derive(Args, Debug, Clone)]
struct RunArgs {
    /// Machine-readable output for commands that default to text
    #[arg(long, global = true)]
    json: bool,

    /// Seed for every randomized step; required whenever randomness is used
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Decide identities by full symbolic expansion
    #[arg(long, global = true, conflicts_with = "random")]
    exact: bool,

    /// Decide identities by N random trials on [0, 10^6)^n.
    /// Without --exact or --random, forms of dimension <= 15 are expanded
    /// exactly and larger ones use 20 random trials.
    #[arg(long, global = true, value_name = "N")]
    random: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List or write the built-in forms
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Check differential identities of a form
    Verify {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Check::All)]
        check: Check,
    },
    /// Find idempotents and their Peirce spectra (one JSON line each)
    Spectrum {
        file: PathBuf,
        #[arg(long, default_value_t = 64)]
        restarts: usize,
        /// Eigenvalue binning tolerance
        #[arg(long, default_value_t = DEFAULT_BIN_TOL)]
        tol: f64,
    },
    /// Print the classification record of a form
    Classify { file: PathBuf },
    /// Print the admissible Peirce triples
    Triples {
        #[arg(long, value_enum, default_value_t = StatusFilter::All)]
        status: StatusFilter,
        /// Run every realizable row through the verification pipeline
        #[arg(long)]
        validate: bool,
        /// Idempotent search restarts per witness when validating
        #[arg(long, default_value_t = 64)]
        restarts: usize,
    },
    /// Print the Hurwitz-Radon number rho(m)
    Rho { m: u64 },
    /// Build and verify a symmetric Clifford system A_0..A_q
    Clifford {
        #[arg(long)]
        q: usize,
        /// Write the system as JSON to this file instead of stdout
        #[arg(long, value_name = "PATH")]
        emit: Option<PathBuf>,
    },
    /// Sample regular points of the zero cone and their mean curvature
    ConeSample {
        file: PathBuf,
        #[arg(long, default_value_t = 200)]
        count: usize,
        /// Minimum gradient norm of an accepted point (normalized form, unit sphere)
        #[arg(long, default_value_t = DEFAULT_GRADIENT_THRESHOLD)]
        threshold: f64,
        /// Largest |mean curvature| counted as a pass
        #[arg(long, default_value_t = 1e-6)]
        max_curvature: f64,
    },
}

#[derive(Subcommand, Debug)]
enum CatalogAction {
    /// Name, dimension, expected Peirce triple and table status of each form
    List,
    /// Write a catalog form to a JSON file
    Emit { name: String, path: PathBuf },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Check {
    Radial,
    Eiconal,
    Harmonic,
    Trace2,
    Trace3,
    All,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum StatusFilter {
    All,
    Realizable,
    Eliminated,
    Open,
}

impl StatusFilter {
    fn admits(self, s: Status) -> bool {
        match self {
            StatusFilter::All => true,
            StatusFilter::Realizable => s == Status::Realizable,
            StatusFilter::Eliminated => s == Status::Eliminated,
            StatusFilter::Open => s == Status::Open,
        }
    }
}

/// Usage or input problem; maps to exit status 2.
struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

type Outcome = Result<bool, InputError>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Outcome {
    let run = &cli.run;
    match &cli.command {
        Command::Catalog { action: CatalogAction::List } => catalog_list(run.json),
        Command::Catalog { action: CatalogAction::Emit { name, path } } => catalog_emit(name, path),
        Command::Verify { file, check } => verify(&load(file)?, *check, run),
        Command::Spectrum { file, restarts, tol } => spectrum(&load(file)?, *restarts, *tol, run),
        Command::Classify { file } => {
            let form = load(file)?;
            let record = classify(&form, &mode(form.dim(), run)?)?;
            emit(&report::classification(&record));
            Ok(true)
        }
        Command::Triples { status, validate, restarts } => triples(*status, *validate, *restarts, run),
        Command::Rho { m } => {
            let r = hurwitz_radon(*m)?;
            if run.json {
                emit(&json!({"m": m, "rho": r}));
            } else {
                println!("{r}");
            }
            Ok(true)
        }
        Command::Clifford { q, emit: path } => clifford(*q, path.as_deref()),
        Command::ConeSample { file, count, threshold, max_curvature } => {
            cone_sample(&load(file)?, *count, *threshold, *max_curvature, run)
        }
    }
}

fn emit(v: &Value) {
    println!("{v}");
}

fn load(path: &Path) -> Result<CubicForm, InputError> {
    let text = fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    CubicForm::from_json(&text).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn require_seed(run: &RunArgs, what: &str) -> Result<u64, InputError> {
    run.seed.ok_or_else(|| InputError(format!("{what} is randomized; pass --seed")))
}

fn mode(n: usize, run: &RunArgs) -> Result<Mode, InputError> {
    if run.exact {
        return Ok(Mode::Exact);
    }
    let trials = match run.random {
        Some(0) => return Err(InputError("--random needs at least one trial".into())),
        Some(t) => t,
        None if n <= EXACT_MAX_DIM => return Ok(Mode::Exact),
        None => DEFAULT_TRIALS,
    };
    let seed = require_seed(run, &format!("identity testing in dimension {n}"))?;
    Ok(Mode::Random { trials, bound: DEFAULT_BOUND, seed })
}

fn catalog_list(as_json: bool) -> Outcome {
    for e in CATALOG {
        let status = e.expected_triple.and_then(|(a, b, c)| tables::status(a, b, c));
        if as_json {
            emit(&json!({
                "name": e.name,
                "dim": e.dim,
                "expected_triple": e.expected_triple.map(report::triple),
                "status": status.map(|s| s.as_str()),
                "description": e.description,
            }))
        } else {
            let t = e.expected_triple.map_or("-".to_string(), |(a, b, c)| format!("({a},{b},{c})"));
            let s = status.map_or("-", |s| s.as_str());
            println!("{:<16} {:>3}  {:<12} {:<11} {}", e.name, e.dim, t, s, e.description);
        }
    }
    Ok(true)
}

fn catalog_emit(name: &str, path: &Path) -> Outcome {
    if catalog::catalog_entry(name).is_none() {
        return Err(InputError(format!("unknown catalog form {name:?}; see `catalog list`")));
    }
    let form = catalog::build(name)?;
    fs::write(path, form.to_json() + "\n").map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    Ok(true)
}

fn verify(form: &CubicForm, check: Check, run: &RunArgs) -> Outcome {
    let checks = match check {
        Check::All => vec![Check::Radial, Check::Eiconal, Check::Harmonic, Check::Trace2, Check::Trace3],
        c => vec![c],
    };
    let needs_mode = checks.iter().any(|c| *c != Check::Harmonic);
    let mode = if needs_mode { mode(form.dim(), run)? } else { Mode::Exact };
    let mut all = true;
    for c in checks {
        let line = match c {
            Check::Harmonic => {
                let pass = check_harmonic(form);
                json!({"check": "harmonic", "pass": pass, "constant": Value::Null, "mode": "exact", "error_bound": Value::Null})
            }
            Check::Radial if form.is_zero() => {
                json!({"check": "radial", "pass": false, "constant": Value::Null, "mode": mode.label(), "error_bound": Value::Null})
            }
            Check::Radial => report::outcome("radial", &check_radial(form, &mode)?),
            Check::Eiconal => report::outcome("eiconal", &check_eiconal(form, &mode)?),
            Check::Trace2 => report::outcome("trace2", &trace_identity_quadratic(form, &mode)?),
            Check::Trace3 => report::outcome("trace3", &trace_identity_cubic(form, &mode)?),
            Check::All => unreachable!(),
        };
        all &= line["pass"] == Value::Bool(true);
        emit(&line);
    }
    Ok(all)
}

fn spectrum(form: &CubicForm, restarts: usize, tol: f64, run: &RunArgs) -> Outcome {
    let seed = require_seed(run, "the idempotent search")?;
    if !(tol > 0.0) {
        return Err(InputError("--tol must be positive".into()));
    }
    let found = FloatAlgebra::new(form).find_idempotents(restarts, seed, tol);
    for p in &found {
        emit(&report::peirce(p));
    }
    Ok(!found.is_empty())
}

fn triples(filter: StatusFilter, validate: bool, restarts: usize, run: &RunArgs) -> Outcome {
    let rows = tables::admissible_triples().iter().filter(|r| filter.admits(r.status));
    if validate {
        let seed = require_seed(run, "cross-validation")?;
        let mut all = true;
        for r in rows {
            let v = tables::validate_row(r, restarts, seed);
            all &= v.pass != Some(false);
            emit(&report::validation(&v));
        }
        return Ok(all);
    }
    for r in rows {
        if run.json {
            emit(&report::triple_record(r));
        } else {
            println!(
                "({},{},{})  dim {:>2}  {:<10} {}",
                r.n1,
                r.n2,
                r.n3,
                r.dim,
                r.status.as_str(),
                r.witness.unwrap_or("-")
            );
        }
    }
    Ok(true)
}

fn clifford(q: usize, path: Option<&Path>) -> Outcome {
    let system = CliffordSystem::build(q);
    let verified = system.verify();
    let doc = report::clifford(&system);
    match path {
        Some(p) => fs::write(p, format!("{doc}\n")).map_err(|e| InputError(format!("{}: {e}", p.display())))?,
        None => emit(&doc),
    }
    if let Err(v) = &verified {
        eprintln!("violated: {v}");
    }
    Ok(verified.is_ok())
}

fn cone_sample(form: &CubicForm, count: usize, threshold: f64, max_curvature: f64, run: &RunArgs) -> Outcome {
    let seed = require_seed(run, "cone sampling")?;
    let sample = sample_cone(form, count, seed, threshold)?;
    for p in &sample.points {
        emit(&report::cone_point(p));
    }
    let pass = !sample.points.is_empty() && sample.max_abs_curvature < max_curvature;
    emit(&json!({
        "points": sample.points.len(),
        "max_abs_curvature": report::float(sample.max_abs_curvature),
        "rejected": sample.rejected,
        "failed_rays": sample.failed_rays,
        "pass": pass,
    }));
    Ok(pass)
}
