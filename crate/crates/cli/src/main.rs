//! `qflag`: build objects, dump them as JSON and run the verification suites.
//!
//! Exit status: 0 when everything passes, 1 when a verification fails, 2 on
//! invalid input.

use clap::{Args, Parser, Subcommand, ValueEnum};
use qflag::cartan::{CartanDatum, RootSum, Weight};
use qflag::coord::CoordAlgebra;
use qflag::rmatrix::{r_check, r_matrix, Pairing};
use qflag::uqg::{QuantumGroup, DEFAULT_MAX_HEIGHT};
use qflag::verify::{full_run, run_suite, Report, Suite, SuiteConfig};
use qflag::wmod::{dual_verma, simple, verma, verma_right, WeightModule};
use serde::Serialize;
use serde_json::Value;
use std::io::Write;
use std::process::ExitCode;

const SCHEMA: u32 = 1;
/// Largest coordinate sum accepted for a cutoff or highest weight.
const MAX_WEIGHT_SUM: i32 = 6;
/// Largest height accepted for a depth or degree.
const MAX_DEPTH_HEIGHT: i32 = 8;
const CAP_ENV: &str = "QFLAG_MAX_HEIGHT";

#[derive(Parser)]
#[command(name = "qflag", version, about = "Exact computations for quantum groups and the quantized flag manifold")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Default)]
struct TypeArgs {
    /// Preset type: A1, A2, B2 or G2.
    #[arg(long = "type", value_name = "TYPE", conflicts_with = "cartan_matrix")]
    cartan_type: Option<String>,
    /// Explicit Cartan matrix, rows separated by ';' (e.g. "2,-1;-1,2").
    #[arg(long, value_name = "ROWS")]
    cartan_matrix: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModuleKind {
    Simple,
    Verma,
    VermaRight,
    DualVerma,
}

#[derive(Subcommand)]
enum Command {
    /// Cartan data: matrix, symmetrizers, positive roots, form.
    Cartan {
        #[command(flatten)]
        ty: TypeArgs,
    },
    /// Standard basis of U^+ in one degree.
    Basis {
        #[command(flatten)]
        ty: TypeArgs,
        /// Degree in root coordinates, e.g. "<1,1>".
        #[arg(long)]
        degree: String,
    },
    /// Matrix of the Drinfeld pairing in one degree.
    Pairing {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long)]
        degree: String,
    },
    /// R (or R-check with --check) on V(lambda) (x) V(mu).
    Rmatrix {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
        /// Export R-check = flip o R instead of R.
        #[arg(long)]
        check: bool,
    },
    /// Generator matrices of a weight module.
    Module {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long)]
        lambda: String,
        #[arg(long = "kind", value_enum, default_value = "simple")]
        module_kind: ModuleKind,
        /// Truncation depth for Verma modules, e.g. "<2,2>".
        #[arg(long)]
        depth: Option<String>,
    },
    /// Graded dimensions and Schubert kernel dimensions of A up to a cutoff.
    Coord {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long)]
        cutoff: String,
    },
    /// Run a verification suite (or `all`).
    Verify(VerifyArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite name, or `all`.
    name: Option<String>,
    #[arg(long = "suite", conflicts_with = "name")]
    suite: Option<String>,
    #[command(flatten)]
    ty: TypeArgs,
    #[arg(long)]
    cutoff: Option<String>,
    #[arg(long)]
    depth: Option<String>,
    /// Height or size bound, meaning depends on the suite.
    #[arg(long)]
    max: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Print the full JSON report instead of one line per instance.
    #[arg(long)]
    json: bool,
    /// Deliberately corrupt the operator realisation (negative control).
    #[arg(long)]
    inject_fault: bool,
}

/// An error that maps to exit status 2.
#[derive(Debug)]
struct Invalid(String);

impl<E: std::fmt::Display> From<E> for Invalid {
    fn from(e: E) -> Self {
        Invalid(e.to_string())
    }
}

fn cap_override() -> Result<Option<i32>, Invalid> {
    match std::env::var(CAP_ENV) {
        Ok(v) => v
            .parse()
            .map(Some)
            .map_err(|_| Invalid(format!("{CAP_ENV} must be a positive integer"))),
        Err(_) => Ok(None),
    }
}

fn datum(ty: &TypeArgs) -> Result<CartanDatum, Invalid> {
    match (&ty.cartan_type, &ty.cartan_matrix) {
        (Some(name), _) => Ok(CartanDatum::preset(name)?),
        (None, Some(rows)) => {
            let a = rows
                .split(';')
                .map(|r| r.split(',').map(|x| x.trim().parse::<i32>()).collect::<Result<Vec<_>, _>>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|_| Invalid(format!("cannot read Cartan matrix {rows:?}")))?;
            Ok(CartanDatum::from_matrix(a)?)
        }
        (None, None) => Err(Invalid("one of --type or --cartan-matrix is required".into())),
    }
}

fn weight(d: &CartanDatum, s: &str) -> Result<Weight, Invalid> {
    let w = Weight::parse(s).ok_or_else(|| Invalid(format!("cannot read weight {s:?}, expected e.g. [1,0]")))?;
    if w.rank() != d.rank() {
        return Err(Invalid(format!("weight {w} has the wrong rank for {}", d.name())));
    }
    let limit = cap_override()?.unwrap_or(MAX_WEIGHT_SUM);
    if w.coords().iter().map(|c| c.abs()).sum::<i32>() > limit {
        return Err(Invalid(format!("weight {w} exceeds the coordinate-sum cap {limit} (see {CAP_ENV})")));
    }
    Ok(w)
}

fn depth(d: &CartanDatum, s: &str) -> Result<RootSum, Invalid> {
    let g = RootSum::parse(s).ok_or_else(|| Invalid(format!("cannot read degree {s:?}, expected e.g. <1,1>")))?;
    if g.rank() != d.rank() || !g.is_nonnegative() {
        return Err(Invalid(format!("degree {g} is not a nonnegative root sum for {}", d.name())));
    }
    let limit = cap_override()?.unwrap_or(MAX_DEPTH_HEIGHT);
    if g.height() > limit {
        return Err(Invalid(format!("degree {g} exceeds the height cap {limit} (see {CAP_ENV})")));
    }
    Ok(g)
}

fn algebra(d: CartanDatum) -> Result<QuantumGroup, Invalid> {
    let cap = cap_override()?.map_or(DEFAULT_MAX_HEIGHT, |c| (c as usize).max(DEFAULT_MAX_HEIGHT));
    Ok(QuantumGroup::with_max_height(d, cap.max(2 * MAX_DEPTH_HEIGHT as usize)))
}

fn emit(v: impl Serialize) -> Result<(), Invalid> {
    let mut v = serde_json::to_value(v)?;
    if let Value::Object(map) = &mut v {
        map.insert("schema".into(), SCHEMA.into());
    }
    out(&serde_json::to_string_pretty(&v)?);
    Ok(())
}

/// Print a line, exiting quietly if the reader has gone away.
fn out(line: &str) {
    let mut stdout = std::io::stdout().lock();
    if writeln!(stdout, "{line}").is_err() {
        std::process::exit(0);
    }
}

fn word_label(w: &[u8]) -> String {
    w.iter().map(|i| format!("e{}", i + 1)).collect()
}

#[derive(Serialize)]
struct BasisDump {
    cartan: String,
    degree: RootSum,
    dimension: usize,
    partition_count: u64,
    words: Vec<String>,
}

#[derive(Serialize)]
struct MatrixDump {
    cartan: String,
    operator: &'static str,
    lambda: Weight,
    mu: Weight,
    rows: Vec<String>,
    columns: Vec<String>,
    matrix: Vec<Vec<String>>,
}

#[derive(Serialize)]
struct GradeDump {
    grade: Weight,
    dim: usize,
    schubert_kernels: Vec<(String, usize)>,
}

#[derive(Serialize)]
struct CoordDump {
    cartan: String,
    cutoff: Weight,
    grades: Vec<GradeDump>,
}

fn tensor_labels(a: &WeightModule, b: &WeightModule) -> Vec<String> {
    let (la, lb) = (a.export().basis, b.export().basis);
    la.iter()
        .flat_map(|x| lb.iter().map(move |y| format!("{} (x) {}", x.label, y.label)))
        .collect()
}

fn dominant_box(cutoff: &Weight) -> Vec<Weight> {
    let mut out = vec![Weight::zero(cutoff.rank())];
    for i in 0..cutoff.rank() {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..=cutoff[i]).map(move |c| {
                    let mut x = w;
                    x[i] = c;
                    x
                })
            })
            .collect();
    }
    out
}

fn verify(args: VerifyArgs) -> Result<bool, Invalid> {
    let name = args.name.or(args.suite).unwrap_or_else(|| "all".into());
    let typed = args.ty.cartan_type.is_some() || args.ty.cartan_matrix.is_some();
    let report = if name == "all" && !typed {
        full_run(args.seed)?
    } else {
        let d = datum(&args.ty)?;
        let mut cfg = SuiteConfig::new(d.clone()).with_seed(args.seed);
        cfg.cutoff = args.cutoff.as_deref().map(|s| weight(&d, s)).transpose()?;
        cfg.depth = args.depth.as_deref().map(|s| depth(&d, s)).transpose()?;
        cfg.max = args.max;
        cfg.fault = args.inject_fault;
        let suites = if name == "all" {
            Suite::ALL.to_vec()
        } else {
            vec![name.parse::<Suite>()?]
        };
        let mut outcomes = Vec::new();
        for s in suites {
            outcomes.extend(run_suite(s, &cfg)?);
        }
        Report::new(args.seed, outcomes)
    };
    if args.json {
        out(&report.to_json());
    } else {
        for o in &report.outcomes {
            match &o.counterexample {
                None => out(&format!("PASS {} {}", o.suite, o.instance)),
                Some(c) => out(&format!("FAIL {} {}: {c}", o.suite, o.instance)),
            }
        }
        let failed = report.failures().count();
        out(&format!("{} passed, {failed} failed", report.outcomes.len() - failed));
    }
    Ok(report.pass)
}

fn run(cli: Cli) -> Result<bool, Invalid> {
    match cli.command {
        Command::Cartan { ty } => emit(datum(&ty)?.summary())?,
        Command::Basis { ty, degree } => {
            let d = datum(&ty)?;
            let g = depth(&d, &degree)?;
            let uq = algebra(d)?;
            let basis = uq.basis(&g)?;
            emit(BasisDump {
                cartan: uq.datum().name().to_string(),
                degree: g,
                dimension: basis.dim(),
                partition_count: uq.datum().kostant_dim(&g),
                words: basis.standard.iter().map(|w| word_label(w)).collect(),
            })?;
        }
        Command::Pairing { ty, degree } => {
            let d = datum(&ty)?;
            let g = depth(&d, &degree)?;
            let uq = algebra(d)?;
            emit(Pairing::new(&uq).table(&uq, &g)?)?;
        }
        Command::Rmatrix { ty, lambda, mu, check } => {
            let d = datum(&ty)?;
            let (l, m) = (weight(&d, &lambda)?, weight(&d, &mu)?);
            let uq = algebra(d)?;
            let pairing = Pairing::new(&uq);
            let (v, w) = (simple(&uq, &l)?, simple(&uq, &m)?);
            let (operator, mat, rows) = if check {
                ("R-check", r_check(&uq, &pairing, &v, &w)?, tensor_labels(&w, &v))
            } else {
                ("R", r_matrix(&uq, &pairing, &v, &w)?, tensor_labels(&v, &w))
            };
            let matrix = (0..mat.rows())
                .map(|r| (0..mat.cols()).map(|c| mat[(r, c)].to_string()).collect())
                .collect();
            emit(MatrixDump {
                cartan: uq.datum().name().to_string(),
                operator,
                lambda: l,
                mu: m,
                rows,
                columns: tensor_labels(&v, &w),
                matrix,
            })?;
        }
        Command::Module { ty, lambda, module_kind, depth: dep } => {
            let d = datum(&ty)?;
            let l = weight(&d, &lambda)?;
            let dep = match dep {
                Some(s) => Some(depth(&d, &s)?),
                None => None,
            };
            let uq = algebra(d)?;
            let need = || dep.ok_or_else(|| Invalid("Verma modules need --depth".into()));
            let m = match module_kind {
                ModuleKind::Simple => simple(&uq, &l)?,
                ModuleKind::Verma => verma(&uq, &l, &need()?)?,
                ModuleKind::VermaRight => verma_right(&uq, &l, &need()?)?,
                ModuleKind::DualVerma => dual_verma(&uq, &l, &need()?)?,
            };
            emit(m.export())?;
        }
        Command::Coord { ty, cutoff } => {
            let d = datum(&ty)?;
            let c = weight(&d, &cutoff)?;
            if !c.is_dominant() {
                return Err(Invalid(format!("cutoff {c} is not dominant")));
            }
            let uq = algebra(d)?;
            let a = CoordAlgebra::new(&uq, c);
            let words = uq.datum().weyl_group();
            let mut grades = Vec::new();
            for g in dominant_box(&c) {
                let schubert_kernels = words
                    .iter()
                    .map(|w| Ok((w.to_string(), a.schubert_kernel_dim(w, &g)?)))
                    .collect::<Result<_, Invalid>>()?;
                grades.push(GradeDump {
                    grade: g,
                    dim: a.dim(&g)?,
                    schubert_kernels,
                });
            }
            emit(CoordDump {
                cartan: uq.datum().name().to_string(),
                cutoff: c,
                grades,
            })?;
        }
        Command::Verify(args) => return verify(args),
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Invalid(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
