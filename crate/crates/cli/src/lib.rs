//! The `zpd` command line. Every command prints one JSON document.
//!
//! Exit codes: 0 for a decided answer (certificate or exhaustive negative),
//! 2 for a probabilistic answer, 3 for undecided, 1 for invalid input or a
//! report that fails verification.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use zpd_core::builtins::{self, BuiltinRef};
use zpd_core::commuting::{FiniteScan, SamplerConfig};
use zpd_core::decide::{
    check_comm_preserving, decide_zad, decide_zpd, is_proportional_commuting, verify_report, FamilySet,
    PreserveVerdict, Proportionality,
};
use zpd_core::io::{AnyField, InputDoc};
use zpd_core::liealg::h2_dimension;
use zpd_core::{Error, Field, FieldTag, LieAlgebra, LieModule, Matrix, Result};

const EXIT_DECIDED: i32 = 0;
const EXIT_INVALID: i32 = 1;
const EXIT_PROBABILISTIC: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "zpd", version, about = "Decide zero-product determined Lie algebras and zero-action determined modules")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the Jacobi identity (algebras) or the representation identity (modules).
    Validate(InputArgs),
    /// Decide whether an algebra is zero-product determined.
    Analyze(DecideArgs),
    /// Decide whether a module is zero-action determined.
    Zad(DecideArgs),
    /// Dimension of the second cohomology with trivial coefficients.
    H2(InputArgs),
    /// Whether every commuting pair is linearly dependent.
    Proportional(DecideArgs),
    /// Sample commuting pairs of a source algebra and test a linear map on them.
    Preserve(PreserveArgs),
    /// Replay the certificate or witness of a report.
    Verify {
        #[arg(long)]
        report: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// List builtin reference patterns.
    BuiltinList {
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
struct InputArgs {
    /// Builtin reference, e.g. `heisenberg:2` or `vm:3`.
    #[arg(long, conflicts_with = "input", required_unless_present = "input")]
    builtin: Option<String>,
    /// JSON document of an algebra or a module.
    #[arg(long)]
    input: Option<PathBuf>,
    /// `Q` or `GF:p`; defaults to the field of the input.
    #[arg(long)]
    field: Option<String>,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Toggle {
    On,
    Off,
}

#[derive(Args, Debug)]
struct SamplerArgs {
    /// JSON sampler configuration; the flags below override it.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    exhaustive: bool,
    #[arg(long)]
    rounds: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, value_enum, default_value = "on")]
    families: Toggle,
    #[arg(long)]
    validation: Option<usize>,
    /// Cap on projective points for exhaustive enumeration.
    #[arg(long)]
    budget: Option<u64>,
}

#[derive(Args, Debug)]
struct DecideArgs {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    sampler: SamplerArgs,
}

#[derive(Args, Debug)]
struct PreserveArgs {
    /// Builtin reference or algebra document path for the source.
    #[arg(long)]
    source: String,
    /// Builtin reference or algebra document path for the target.
    #[arg(long)]
    target: String,
    /// JSON matrix (rows of scalar strings), `dim target × dim source`.
    #[arg(long)]
    map: PathBuf,
    #[arg(long)]
    field: Option<String>,
    #[arg(long)]
    output: Option<PathBuf>,
    #[command(flatten)]
    sampler: SamplerArgs,
}

/// Parses `argv` (program name first), runs the command and returns the exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INVALID } else { EXIT_DECIDED };
        }
    };
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error[{}]: {e}", e.code());
            EXIT_INVALID
        }
    }
}

fn dispatch(cmd: Command) -> Result<i32> {
    match cmd {
        Command::Validate(a) => validate(&a),
        Command::Analyze(a) => analyze(&a),
        Command::Zad(a) => zad(&a),
        Command::H2(a) => h2(&a),
        Command::Proportional(a) => proportional(&a),
        Command::Preserve(a) => preserve(&a),
        Command::Verify { report, output } => {
            let v = verify_report(&read(&report)?)?;
            emit(output.as_deref(), &v)?;
            if !v.ok {
                eprintln!("error[E-VERIFY]: {}", v.diagnosis.as_deref().unwrap_or("verification failed"));
            }
            Ok(if v.ok { EXIT_DECIDED } else { EXIT_INVALID })
        }
        Command::BuiltinList { output } => {
            let list: Vec<Value> = builtins::catalogue()
                .into_iter()
                .map(|(pattern, about)| json!({ "pattern": pattern, "description": about }))
                .collect();
            emit(output.as_deref(), &list)?;
            Ok(EXIT_DECIDED)
        }
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

fn emit<T: Serialize>(output: Option<&Path>, value: &T) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    match output {
        Some(p) => fs::write(p, text).map_err(|e| Error::Input(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// An input resolved to either a builtin or a parsed document.
enum Source {
    Builtin(BuiltinRef),
    Doc { doc: InputDoc, path: String },
}

impl Source {
    fn load(a: &InputArgs) -> Result<Source> {
        match (&a.builtin, &a.input) {
            (Some(s), _) => Ok(Source::Builtin(s.parse()?)),
            (None, Some(p)) => Source::from_path(p),
            (None, None) => Err(Error::Input("one of --builtin or --input is required".into())),
        }
    }

    fn from_path(p: &Path) -> Result<Source> {
        let doc: InputDoc = serde_json::from_str(&read(p)?)?;
        Ok(Source::Doc { doc, path: p.display().to_string() })
    }

    /// A builtin reference, or a path to a document when the string names a file.
    fn from_arg(s: &str) -> Result<Source> {
        if Path::new(s).is_file() {
            Source::from_path(Path::new(s))
        } else {
            Ok(Source::Builtin(s.parse()?))
        }
    }

    fn name(&self) -> String {
        match self {
            Source::Builtin(r) => r.to_string(),
            Source::Doc { path, .. } => path.clone(),
        }
    }

    fn is_module(&self) -> bool {
        match self {
            Source::Builtin(r) => r.is_module(),
            Source::Doc { doc, .. } => matches!(doc, InputDoc::Module(_)),
        }
    }

    fn field(&self, flag: Option<&str>) -> Result<AnyField> {
        let tag = match flag {
            Some(s) => s.parse()?,
            None => match self {
                Source::Builtin(_) => FieldTag::Q,
                Source::Doc { doc, .. } => doc.field(),
            },
        };
        AnyField::new(tag)
    }

    fn doc(&self) -> Result<InputDoc> {
        match self {
            Source::Builtin(r) => Ok(r.build()?.to_doc()),
            Source::Doc { doc, .. } => Ok(doc.clone()),
        }
    }

    fn check(&self, f: &impl Field) -> Result<()> {
        if let Source::Builtin(r) = self {
            r.check_characteristic(f.characteristic())?;
        }
        Ok(())
    }

    fn algebra<F: Field>(&self, f: &F) -> Result<LieAlgebra<F>> {
        self.check(f)?;
        match self.doc()? {
            InputDoc::Algebra(d) => d.build(f),
            InputDoc::Module(_) => Err(Error::Input(format!("{} is a module, not an algebra", self.name()))),
        }
    }

    fn module<F: Field>(&self, f: &F) -> Result<LieModule<F>> {
        self.check(f)?;
        match self.doc()? {
            InputDoc::Module(d) => d.build(f),
            InputDoc::Algebra(_) => Err(Error::Input(format!("{} is an algebra, not a module", self.name()))),
        }
    }

    fn families<F: Field>(&self, f: &F, on: Toggle) -> Result<FamilySet<F>> {
        match (self, on) {
            (Source::Builtin(r), Toggle::On) => FamilySet::for_builtin(r, f),
            _ => Ok(FamilySet::default()),
        }
    }
}

/// Runs `$body` with `$f` bound to the concrete field behind an [`AnyField`].
macro_rules! with_field {
    ($any:expr, $f:ident => $body:expr) => {
        match $any {
            AnyField::Q($f) => $body,
            AnyField::Gf($f) => $body,
        }
    };
}

fn sampler(a: &SamplerArgs) -> Result<SamplerConfig> {
    let mut cfg = match &a.config {
        Some(p) => serde_json::from_str(&read(p)?)?,
        None => SamplerConfig::default(),
    };
    cfg.exhaustive |= a.exhaustive;
    if let Some(r) = a.rounds {
        cfg.rounds = r;
    }
    if let Some(s) = a.seed {
        cfg.seed = s;
    }
    if let Some(v) = a.validation {
        cfg.validation = v;
    }
    if let Some(b) = a.budget {
        cfg.budget = b;
    }
    Ok(cfg)
}

fn validate(a: &InputArgs) -> Result<i32> {
    let src = Source::load(a)?;
    let field = src.field(a.field.as_deref())?;
    let (kind, outcome) = with_field!(field, f => {
        if src.is_module() {
            ("module", src.module(&f).map(|m| m.dim()))
        } else {
            ("algebra", src.algebra(&f).map(|l| l.dim()))
        }
    });
    let mut out = json!({ "input": src.name(), "field": field.tag(), "kind": kind });
    let code = match outcome {
        Ok(dim) => {
            out["valid"] = true.into();
            out["dim"] = dim.into();
            EXIT_DECIDED
        }
        Err(e @ (Error::InvalidAlgebra { .. } | Error::InvalidModule { .. })) => {
            out["valid"] = false.into();
            out["code"] = e.code().into();
            out["diagnosis"] = e.to_string().into();
            eprintln!("error[{}]: {e}", e.code());
            EXIT_INVALID
        }
        Err(e) => return Err(e),
    };
    emit(a.output.as_deref(), &out)?;
    Ok(code)
}

fn analyze(a: &DecideArgs) -> Result<i32> {
    let src = Source::load(&a.input)?;
    let cfg = sampler(&a.sampler)?;
    let field = src.field(a.input.field.as_deref())?;
    with_field!(field, f => run_zpd(&src, &f, &cfg, a))
}

fn run_zpd<F: FiniteScan>(src: &Source, f: &F, cfg: &SamplerConfig, a: &DecideArgs) -> Result<i32> {
    let l = src.algebra(f)?;
    let mut report = decide_zpd(&l, cfg, src.families(f, a.sampler.families)?)?;
    report.input = src.name();
    emit(a.input.output.as_deref(), &report)?;
    Ok(report.verdict.exit_code())
}

fn zad(a: &DecideArgs) -> Result<i32> {
    let src = Source::load(&a.input)?;
    let cfg = sampler(&a.sampler)?;
    let field = src.field(a.input.field.as_deref())?;
    with_field!(field, f => run_zad(&src, &f, &cfg, a))
}

fn run_zad<F: FiniteScan>(src: &Source, f: &F, cfg: &SamplerConfig, a: &DecideArgs) -> Result<i32> {
    let m = src.module(f)?;
    let mut report = decide_zad(&m, cfg, src.families(f, a.sampler.families)?)?;
    report.input = src.name();
    emit(a.input.output.as_deref(), &report)?;
    Ok(report.verdict.exit_code())
}

fn h2(a: &InputArgs) -> Result<i32> {
    let src = Source::load(a)?;
    let field = src.field(a.field.as_deref())?;
    let dims = with_field!(field, f => h2_dimension(&src.algebra(&f)?)?);
    let out = json!({
        "input": src.name(),
        "field": field.tag(),
        "z2": dims.z2,
        "b2": dims.b2,
        "h2": dims.h2,
        "centrally_closed": dims.h2 == 0,
    });
    emit(a.output.as_deref(), &out)?;
    Ok(EXIT_DECIDED)
}

fn proportional(a: &DecideArgs) -> Result<i32> {
    let src = Source::load(&a.input)?;
    let cfg = sampler(&a.sampler)?;
    let field = src.field(a.input.field.as_deref())?;
    let report = with_field!(field, f => is_proportional_commuting(&src.algebra(&f)?, &cfg)?);
    let mut out = json!({ "input": src.name(), "field": field.tag() });
    merge(&mut out, serde_json::to_value(&report)?);
    emit(a.input.output.as_deref(), &out)?;
    Ok(match report.verdict {
        Proportionality::TrueProbabilistic => EXIT_PROBABILISTIC,
        Proportionality::TrueExhaustive | Proportionality::False => EXIT_DECIDED,
    })
}

fn preserve(a: &PreserveArgs) -> Result<i32> {
    let (source, target) = (Source::from_arg(&a.source)?, Source::from_arg(&a.target)?);
    let cfg = sampler(&a.sampler)?;
    let field = source.field(a.field.as_deref())?;
    let rows: Vec<Vec<String>> = serde_json::from_str(&read(&a.map)?)?;
    let report = with_field!(field, f => {
        let (s, t) = (source.algebra(&f)?, target.algebra(&f)?);
        let parsed = rows
            .iter()
            .map(|r| zpd_core::exactla::vector::parse(&f, r))
            .collect::<Result<Vec<_>>>()?;
        let phi = Matrix::from_rows(&f, s.dim(), parsed)?;
        check_comm_preserving(&phi, &s, &t, &cfg, source.families(&f, a.sampler.families)?.families)?
    });
    let mut out = json!({ "source": source.name(), "target": target.name(), "field": field.tag() });
    merge(&mut out, serde_json::to_value(&report)?);
    emit(a.output.as_deref(), &out)?;
    Ok(match report.verdict {
        PreserveVerdict::Violation => EXIT_DECIDED,
        PreserveVerdict::PreservesSampled => EXIT_PROBABILISTIC,
    })
}

fn merge(into: &mut Value, from: Value) {
    if let (Value::Object(a), Value::Object(b)) = (into, from) {
        a.extend(b);
    }
}
