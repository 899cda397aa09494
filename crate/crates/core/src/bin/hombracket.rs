use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use hombracket::big_bracket::big_bracket;
use hombracket::cochain::cohomology_dims;
use hombracket::corpus;
use hombracket::exterior::big_from_cochain;
use hombracket::instance::{
    cochain_json, element_json, parse_element_text, parse_matrix_text, parse_rep_text, parse_square_matrix_text,
    Instance,
};
use hombracket::linalg::TwistMap;
use hombracket::nijenhuis::{check_deformation, check_trivial_deformation, deformation_from_n};
use hombracket::report::Report;
use hombracket::structures::Representation;
use hombracket::suite::{run_suite, SuiteConfig};
use hombracket::Error;

#[derive(Parser)]
#[command(name = "hombracket", version, about = "Exact checks for hom-Lie structures")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[arg(long, default_value_t = 7, global = true)]
    seed: u64,
    #[arg(long, default_value_t = 4, global = true)]
    max_dim: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Check {
    Lie,
    Rep,
    Bialgebra,
    QuasiPhi,
    QuasiPsi,
    RightSymmetric,
    Nijenhuis,
    OOperator,
}

impl Check {
    fn name(self) -> &'static str {
        match self {
            Check::Lie => "lie",
            Check::Rep => "rep",
            Check::Bialgebra => "bialgebra",
            Check::QuasiPhi => "quasi-phi",
            Check::QuasiPsi => "quasi-psi",
            Check::RightSymmetric => "right-symmetric",
            Check::Nijenhuis => "nijenhuis",
            Check::OOperator => "o-operator",
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Verify a structure on an instance file (or a corpus name).
    Check {
        check: Check,
        instance: String,
        /// Operator N (square matrix file), replacing the instance's `n`.
        #[arg(long)]
        n: Option<PathBuf>,
        /// Operator T (matrix file), replacing the instance's `t`.
        #[arg(long)]
        t: Option<PathBuf>,
        /// Representation file, replacing the instance's `rep`.
        #[arg(long)]
        rep: Option<PathBuf>,
    },
    /// Big bracket of two elements under a twist.
    Bracket {
        #[arg(long)]
        alpha: PathBuf,
        a: PathBuf,
        b: PathBuf,
    },
    /// Cohomology dimensions of an instance with coefficients in its
    /// representation (adjoint if none is given).
    Cohomology {
        instance: String,
        #[arg(long)]
        rep: Option<PathBuf>,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
    },
    /// The deformation generated by a Nijenhuis operator.
    Deform {
        instance: String,
        #[arg(long)]
        n: Option<PathBuf>,
    },
    /// Run a property suite.
    Suite { name: String },
    /// Inspect the built-in corpus.
    Corpus {
        #[command(subcommand)]
        action: CorpusAction,
    },
}

#[derive(Subcommand)]
enum CorpusAction {
    List,
    Show { name: String },
}

enum Failure {
    Load(String),
    Precondition(Error),
    Other(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_precondition() {
            Failure::Precondition(e)
        } else {
            Failure::Other(e)
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Load(format!("{}: {e}", path.display())))
}

fn load(arg: &str) -> Result<Instance, Failure> {
    let path = Path::new(arg);
    if !path.exists() {
        if let Some(text) = corpus::source(arg) {
            return Instance::parse(text).map_err(|e| Failure::Load(format!("{arg}: {e}")));
        }
    }
    Instance::parse(&read(path)?).map_err(|e| Failure::Load(format!("{arg}: {e}")))
}

fn parsed<T>(path: &Path, r: hombracket::Result<T>) -> Result<T, Failure> {
    r.map_err(|e| Failure::Load(format!("{}: {e}", path.display())))
}

fn emit_reports(cli: &Cli, reports: &[Report], extra: Value) -> ExitCode {
    let pass = reports.iter().all(Report::pass);
    match cli.format {
        Format::Json => {
            let mut v = json!({ "pass": pass, "reports": reports.iter().map(Report::to_json).collect::<Vec<_>>() });
            if let Value::Object(m) = extra {
                for (k, x) in m {
                    v[k] = x;
                }
            }
            println!("{}", serde_json::to_string_pretty(&v).expect("serializable"));
        }
        Format::Text => {
            for r in reports {
                println!("{r}");
            }
        }
    }
    if pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(2)
    }
}

fn run(cli: &Cli) -> Result<ExitCode, Failure> {
    match &cli.command {
        Command::Check { check, instance, n, t, rep } => {
            let mut inst = load(instance)?;
            let dim = inst.dim();
            if let Some(p) = rep {
                inst.rep = Some(parsed(p, parse_rep_text(&read(p)?, dim))?);
            }
            if let Some(p) = n {
                inst.n = Some(parsed(p, parse_matrix_text(&read(p)?, dim, dim))?);
            }
            if let Some(p) = t {
                let wdim = inst.rep.as_ref().map(Representation::wdim).unwrap_or(dim);
                inst.t = Some(parsed(p, parse_matrix_text(&read(p)?, dim, wdim))?);
            }
            let start = Instant::now();
            let mut report = corpus::run_check(&inst, check.name())?;
            report.check = format!("{} {}", check.name(), inst.name);
            report.elapsed = Some(start.elapsed());
            Ok(emit_reports(cli, &[report], json!({})))
        }
        Command::Bracket { alpha, a, b } => {
            let m = parsed(alpha, parse_square_matrix_text(&read(alpha)?))?;
            let alpha = TwistMap::new(m)?;
            let dim = alpha.dim();
            let x = parsed(a, parse_element_text(&read(a)?, dim))?;
            let y = parsed(b, parse_element_text(&read(b)?, dim))?;
            let z = big_bracket(&x, &y, &alpha)?;
            match cli.format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&element_json(&z)).expect("serializable")),
                Format::Text => println!("{}", z.to_text()),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Cohomology { instance, rep, max_degree } => {
            let inst = load(instance)?;
            let g = inst.algebra()?;
            let rep = match rep {
                Some(p) => parsed(p, parse_rep_text(&read(p)?, g.dim()))?,
                None => Representation::adjoint(&g),
            };
            let dims = cohomology_dims(g.mu(), g.alpha(), &rep, *max_degree)?;
            match cli.format {
                Format::Json => {
                    let rows: Vec<Value> = dims
                        .iter()
                        .map(|d| {
                            json!({ "degree": d.degree, "cochains": d.cochains, "kernel": d.kernel,
                                    "image": d.image, "cohomology": d.cohomology })
                        })
                        .collect();
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&json!({ "instance": inst.name, "degrees": rows }))
                            .expect("serializable")
                    );
                }
                Format::Text => {
                    println!("{}: degree cochains kernel image H", inst.name);
                    for d in &dims {
                        println!("  {} {} {} {} {}", d.degree, d.cochains, d.kernel, d.image, d.cohomology);
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Deform { instance, n } => {
            let mut inst = load(instance)?;
            let dim = inst.dim();
            if let Some(p) = n {
                inst.n = Some(parsed(p, parse_matrix_text(&read(p)?, dim, dim))?);
            }
            let g = inst.algebra()?;
            let n = inst.n.clone().ok_or_else(|| Failure::Load("instance has no `n`; pass --n".into()))?;
            let (omega, poly) = deformation_from_n(&n, &g)?;
            let mut report = check_deformation(&omega, &g)?;
            report.absorb("", &check_trivial_deformation(&n, &omega, &g)?);
            report.check = format!("deform {}", inst.name);
            match cli.format {
                Format::Json => {
                    let coeffs: Vec<Value> = poly.coefficients.iter().map(cochain_json).collect();
                    let v = json!({ "omega": cochain_json(&omega), "polynomial": coeffs });
                    Ok(emit_reports(cli, &[report], v))
                }
                Format::Text => {
                    println!("omega = {}", big_from_cochain(&omega)?.to_text());
                    for (i, c) in poly.coefficients.iter().enumerate() {
                        println!("t^{i}: {}", big_from_cochain(c)?.to_text());
                    }
                    Ok(emit_reports(cli, &[report], json!({})))
                }
            }
        }
        Command::Suite { name } => {
            let mut cfg = SuiteConfig::new(cli.seed)?;
            cfg.max_dim = cli.max_dim;
            let start = Instant::now();
            let mut reports = run_suite(name, &cfg)?;
            if let Some(r) = reports.last_mut() {
                r.elapsed = Some(start.elapsed());
            }
            Ok(emit_reports(cli, &reports, json!({ "suite": name, "seed": cli.seed })))
        }
        Command::Corpus { action: CorpusAction::List } => {
            let insts = corpus::all()?;
            match cli.format {
                Format::Json => {
                    let v: Vec<Value> =
                        insts.iter().map(|i| json!({ "name": i.name, "dim": i.dim(), "checks": i.checks })).collect();
                    println!("{}", serde_json::to_string_pretty(&v).expect("serializable"));
                }
                Format::Text => {
                    for i in &insts {
                        println!("{:<12} dim {}  checks: {}", i.name, i.dim(), i.checks.join(", "));
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Corpus { action: CorpusAction::Show { name } } => {
            let text = corpus::source(name).ok_or_else(|| Failure::Load(format!("no corpus instance `{name}`")))?;
            print!("{text}");
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(Failure::Load(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(4)
        }
        Err(Failure::Precondition(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
        Err(Failure::Other(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(4)
        }
    }
}
