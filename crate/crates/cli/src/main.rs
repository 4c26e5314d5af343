//! `moncatkit`: validate models, print coherence traces, dump the
//! strictification and non-strictification, and run the law suites.

use std::path::Path;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use moncatkit::fixtures;
use moncatkit::laws::{
    run_2functor_suite, run_adjunction_suite_q, run_adjunction_suite_str, run_axiom_suite,
    LawReport, SuiteConfig,
};
use moncatkit::models::{
    matrix_universe, thin_universe, validate_with_seed, FreeThinModel, MatrixModCategory,
    TableCategory, Universe,
};
use moncatkit::nonstrictify::{NonStrictification, QObject};
use moncatkit::strictify::{StrObject, Strictification};
use moncatkit::trace::{coherence, validate_trace, Traced};
use moncatkit::{CatError, MagmaTerm, MonoidalCategory, Shape};

#[derive(Parser)]
#[command(name = "moncatkit", version, about = "Strictify and non-strictify finite monoidal category models")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,
    /// Bound on leaves for shapes and C_q objects.
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u64).range(1..), global = true)]
    max_leaves: u64,
    /// Bound on the length of C^str sequences.
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u64).range(1..), global = true)]
    max_seq_len: u64,
    /// Directory holding the named fixtures.
    #[arg(long, env = "MONCATKIT_FIXTURES", global = true)]
    fixtures: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Axioms,
    #[value(name = "2functor")]
    TwoFunctor,
    AdjunctionStr,
    AdjunctionQ,
}

#[derive(Subcommand)]
enum Command {
    /// Check the category and monoidal axioms of a model.
    Validate {
        /// A table file, a fixture name, `thin`, or `matrix`.
        model: String,
    },
    /// Print the canonical isomorphism between two bracketings of a word as
    /// a list of structural factors.
    Coherence { from: String, to: String },
    /// Dump the strictification: `Par(∅)` and the factors of `θ(S, S')`.
    Strictify {
        model: String,
        /// Comma-separated entries of `S`.
        #[arg(long)]
        left: Option<String>,
        /// Comma-separated entries of `S'`.
        #[arg(long)]
        right: Option<String>,
    },
    /// Dump the non-strictification: `Par_q(∅)` and the associator at three
    /// objects, each given as `entries[@shape]`.
    Nonstrictify {
        model: String,
        #[arg(long = "part", num_args = 1)]
        parts: Vec<String>,
    },
    /// Run a law suite on the shipped fixtures.
    Check {
        #[arg(long, value_enum)]
        suite: Suite,
    },
}

/// A failure with its exit code: 1 for a law failure, 2 for bad input.
struct Exit(u8, String);

fn input(msg: impl ToString) -> Exit {
    Exit(2, msg.to_string())
}

enum Model {
    Table(Box<TableCategory>),
    Thin,
    Matrix,
}

fn load_model(arg: &str) -> Result<Model, Exit> {
    match arg {
        "thin" => Ok(Model::Thin),
        "matrix" => Ok(Model::Matrix),
        _ if arg.ends_with(".json") || Path::new(arg).exists() => {
            TableCategory::load(arg).map(|c| Model::Table(Box::new(c))).map_err(input)
        }
        _ => fixtures::load_fixture(arg).map(|c| Model::Table(Box::new(c))).map_err(input),
    }
}

fn entries(text: &str) -> Vec<&str> {
    text.split(',').map(str::trim).filter(|s| !s.is_empty()).collect()
}

fn print_json(value: &impl serde::Serialize) {
    println!("{}", serde_json::to_string_pretty(value).expect("reports serialise"));
}

fn emit_reports(reports: &[LawReport], format: Format) -> Result<(), Exit> {
    let failed = reports.iter().filter(|r| !r.passed()).count();
    match format {
        Format::Json => print_json(&reports),
        Format::Text => {
            for r in reports {
                println!("{r}");
            }
            println!("{} laws, {failed} failed", reports.len());
        }
    }
    if failed > 0 {
        Err(Exit(1, format!("{failed} law(s) failed")))
    } else {
        Ok(())
    }
}

fn validate(cli: &Cli, model: &str) -> Result<(), Exit> {
    let report = match load_model(model)? {
        Model::Table(c) => {
            let c = *c;
            let u = Universe::full(&c).map_err(input)?;
            validate_with_seed(&c, &u, cli.seed)
        }
        Model::Thin => {
            let n = cli.max_leaves as usize;
            validate_with_seed(&FreeThinModel::new(), &thin_universe(n, n), cli.seed)
        }
        Model::Matrix => {
            let m = MatrixModCategory::default();
            validate_with_seed(&m, &matrix_universe(&m, 3, 1, cli.seed), cli.seed)
        }
    };
    match cli.format {
        Format::Json => print_json(&report),
        Format::Text => println!("{report}"),
    }
    if report.passed() {
        Ok(())
    } else {
        Err(Exit(1, format!("{} failure(s)", report.failures.len())))
    }
}

fn run_coherence(cli: &Cli, from: &str, to: &str) -> Result<(), Exit> {
    let a: MagmaTerm = from.parse().map_err(input)?;
    let b: MagmaTerm = to.parse().map_err(input)?;
    let t = coherence(&a, &b).map_err(|e| match e {
        CatError::LengthMismatch { seq, leaves } => Exit(1, format!("leaf counts differ: {seq} vs {leaves}")),
        e => Exit(1, e.to_string()),
    })?;
    let thin = FreeThinModel::new();
    let valid = validate_trace(&thin, &a, &b, &t.trace).map_err(|e| Exit(1, e.to_string()))?;
    let factors = Traced::new(thin).render(&t);
    match cli.format {
        Format::Json => print_json(&json!({
            "from": a.to_string(),
            "to": b.to_string(),
            "factors": factors,
            "valid": valid,
        })),
        Format::Text => {
            println!("{a} -> {b}");
            if factors.is_empty() {
                println!("  identity");
            }
            for f in &factors {
                println!("  {f}");
            }
        }
    }
    if valid {
        Ok(())
    } else {
        Err(Exit(1, "trace does not replay to the thin morphism".into()))
    }
}

/// How a model reads objects from the command line, and a default object.
trait ObjectSyntax: MonoidalCategory + Clone {
    fn parse_obj(&self, text: &str) -> Result<Self::Obj, Exit>;
    fn sample(&self) -> Self::Obj;
}

impl ObjectSyntax for TableCategory {
    fn parse_obj(&self, text: &str) -> Result<Self::Obj, Exit> {
        self.object(text).map_err(input)
    }
    fn sample(&self) -> Self::Obj {
        let objects = self.objects().unwrap_or_default();
        let unit = self.unit();
        objects.iter().find(|x| **x != unit).cloned().unwrap_or(unit)
    }
}

impl ObjectSyntax for FreeThinModel {
    fn parse_obj(&self, text: &str) -> Result<Self::Obj, Exit> {
        text.parse().map_err(input)
    }
    fn sample(&self) -> Self::Obj {
        MagmaTerm::leaf("x")
    }
}

impl ObjectSyntax for MatrixModCategory {
    fn parse_obj(&self, text: &str) -> Result<Self::Obj, Exit> {
        match text.parse::<usize>() {
            Ok(n) if n > 0 => Ok(n),
            _ => Err(input(format!("`{text}` is not a positive dimension"))),
        }
    }
    fn sample(&self) -> Self::Obj {
        2
    }
}

fn parse_seq<C: ObjectSyntax>(c: &C, text: &Option<String>, default: usize) -> Result<Vec<C::Obj>, Exit> {
    match text {
        Some(t) => entries(t).into_iter().map(|s| c.parse_obj(s)).collect(),
        None => Ok(vec![c.sample(); default]),
    }
}

fn dump_strictify<C: ObjectSyntax>(cli: &Cli, c: C, left: &Option<String>, right: &Option<String>) -> Result<(), Exit> {
    let traced = Traced::new(c.clone());
    let s = Strictification::new(traced.clone());
    let a = StrObject::new(parse_seq(&c, left, 2)?);
    let b = StrObject::new(parse_seq(&c, right, 1)?);
    let bad = |e: CatError| input(e);
    let unit = c.obj_label(&s.par_seq(&StrObject::empty()).map_err(bad)?);
    let empty_theta = s.theta(&StrObject::empty(), &StrObject::empty()).map_err(bad)?;
    let theta = s.theta(&a, &b).map_err(bad)?;
    let dom = c.obj_label(&traced.dom(&theta));
    let cod = c.obj_label(&traced.cod(&theta));
    let objects = c.objects().map(|objs| StrObject::all_up_to(&objs, cli.max_seq_len as usize).len());
    match cli.format {
        Format::Json => print_json(&json!({
            "objects": objects,
            "par_empty": unit,
            "theta_empty": traced.render(&empty_theta),
            "theta": {
                "left": s.obj_label(&a),
                "right": s.obj_label(&b),
                "dom": dom,
                "cod": cod,
                "factors": traced.render(&theta),
                "payload": c.mor_label(&theta.payload),
            },
        })),
        Format::Text => {
            if let Some(n) = objects {
                println!("sequences of length <= {}: {n}", cli.max_seq_len);
            }
            println!("Par(∅) = {unit}");
            println!("θ(∅, ∅) = {}", traced.render(&empty_theta).join(" ; "));
            println!("θ({}, {}): {dom} -> {cod}", s.obj_label(&a), s.obj_label(&b));
            for f in traced.render(&theta) {
                println!("  {f}");
            }
            println!("  payload {}", c.mor_label(&theta.payload));
        }
    }
    Ok(())
}

fn parse_part<C: ObjectSyntax>(c: &C, text: &str) -> Result<QObject<C::Obj>, Exit> {
    let (items, shape) = match text.split_once('@') {
        Some((items, shape)) => (items, Some(shape)),
        None => (text, None),
    };
    let seq: Vec<C::Obj> = entries(items).into_iter().map(|s| c.parse_obj(s)).collect::<Result<_, _>>()?;
    let shape = match shape {
        Some(s) => s.parse::<MagmaTerm>().map_err(input)?.collapse(),
        None => Shape::left_comb(seq.len()),
    };
    QObject::new(seq, shape).map_err(input)
}

fn dump_nonstrictify<C: ObjectSyntax>(cli: &Cli, c: C, parts: &[String]) -> Result<(), Exit> {
    let traced = Traced::new(c.clone());
    let q = NonStrictification::new(traced.clone());
    let parts: Vec<QObject<C::Obj>> = match parts.len() {
        0 => vec![QObject::single(c.sample()); 3],
        3 => parts.iter().map(|p| parse_part(&c, p)).collect::<Result<_, _>>()?,
        n => return Err(input(format!("expected 3 parts, got {n}"))),
    };
    let bad = |e: CatError| input(e);
    let unit = c.obj_label(&q.par_q(&QObject::empty()).map_err(bad)?);
    let assoc = q.assoc_q(&parts[0], &parts[1], &parts[2]).map_err(bad)?;
    let objects = c.objects().map(|objs| QObject::all_up_to(&objs, cli.max_leaves as usize).len());
    let factors = traced.render(&assoc.payload);
    let equal = assoc.dom == assoc.cod;
    match cli.format {
        Format::Json => print_json(&json!({
            "objects": objects,
            "par_empty": unit,
            "assoc": {
                "dom": q.obj_label(&assoc.dom),
                "cod": q.obj_label(&assoc.cod),
                "dom_shape": assoc.dom.shape().to_string(),
                "cod_shape": assoc.cod.shape().to_string(),
                "endpoints_equal": equal,
                "factors": factors,
                "payload": c.mor_label(&assoc.payload.payload),
            },
        })),
        Format::Text => {
            if let Some(n) = objects {
                println!("objects with <= {} leaves: {n}", cli.max_leaves);
            }
            println!("Par_q((∅, 1)) = {unit}");
            println!("a_q: {} -> {}", q.obj_label(&assoc.dom), q.obj_label(&assoc.cod));
            println!("  dom shape {}", assoc.dom.shape());
            println!("  cod shape {}", assoc.cod.shape());
            println!("  endpoints equal: {equal}");
            for f in &factors {
                println!("  {f}");
            }
            println!("  payload {}", c.mor_label(&assoc.payload.payload));
        }
    }
    Ok(())
}

fn check(cli: &Cli, suite: Suite) -> Result<(), Exit> {
    // the suites read the shipped fixtures; fail early if they are missing
    for name in ["trivial", "ns2"] {
        fixtures::load_fixture(name).map_err(|e| input(format!("fixture {name}: {e}")))?;
    }
    let cfg = SuiteConfig {
        seed: cli.seed,
        max_seq_len: cli.max_seq_len as usize,
        max_leaves: cli.max_leaves as usize,
        ..SuiteConfig::default()
    };
    let reports = match suite {
        Suite::Axioms => run_axiom_suite(&cfg),
        Suite::TwoFunctor => run_2functor_suite(&cfg),
        Suite::AdjunctionStr => run_adjunction_suite_str(&cfg),
        Suite::AdjunctionQ => run_adjunction_suite_q(&cfg),
    };
    emit_reports(&reports, cli.format)
}

fn run(cli: &Cli) -> Result<(), Exit> {
    match &cli.command {
        Command::Validate { model } => validate(cli, model),
        Command::Coherence { from, to } => run_coherence(cli, from, to),
        Command::Strictify { model, left, right } => match load_model(model)? {
            Model::Table(c) => dump_strictify(cli, *c, left, right),
            Model::Thin => dump_strictify(cli, FreeThinModel::new(), left, right),
            Model::Matrix => dump_strictify(cli, MatrixModCategory::default(), left, right),
        },
        Command::Nonstrictify { model, parts } => match load_model(model)? {
            Model::Table(c) => dump_nonstrictify(cli, *c, parts),
            Model::Thin => dump_nonstrictify(cli, FreeThinModel::new(), parts),
            Model::Matrix => dump_nonstrictify(cli, MatrixModCategory::default(), parts),
        },
        Command::Check { suite } => check(cli, *suite),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(dir) = &cli.fixtures {
        std::env::set_var("MONCATKIT_FIXTURES", dir);
    }
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Exit(code, msg)) => {
            eprintln!("moncatkit: {msg}");
            ExitCode::from(code)
        }
    }
}
