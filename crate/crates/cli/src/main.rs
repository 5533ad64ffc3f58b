//! `tptpi`: lint, assemble, evaluate, check and visualize TPTP
//! interpretations.

mod render;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use tptp_interp::diag::Diagnostic;
use tptp_interp::eval::{eval_in, eval_term, Environment};
use tptp_interp::graph::{to_dot, View};
use tptp_interp::interp::{assemble, regrain, upgrade_legacy, AssemblyError, Granularity, Interpretation, TarskianInterpretation};
use tptp_interp::szs::{szs_report, SzsStatus};
use tptp_interp::syntax::{parse_file, parse_formula, parse_term, print_units, AnnotatedFormula, Language};
use tptp_interp::verify::{
    check_model, check_structure, emit_kripke_verification_problem, emit_verification_problem, is_modal_problem,
    EmitError, EmitOptions,
};

const OK: u8 = 0;
const FAILED: u8 = 1;
const USAGE: u8 = 2;
const GAVE_UP: u8 = 3;

#[derive(Parser)]
#[command(name = "tptpi", version, about = "Work with TPTP interpretations")]
struct Cli {
    /// Which semantics to use when emitting or evaluating.
    #[arg(long, global = true, value_enum, default_value_t = FlavorArg::Auto)]
    flavor: FlavorArg,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FlavorArg {
    Auto,
    Tarskian,
    Kripke,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and type-check files, and check the structure of any
    /// interpretation in them.
    Lint { files: Vec<PathBuf> },
    /// Print a summary of the assembled interpretation.
    Assemble { file: PathBuf },
    /// Evaluate formulae (or terms) in an interpretation.
    Eval {
        #[arg(long)]
        model: PathBuf,
        /// World to evaluate at; defaults to the local world.
        #[arg(long)]
        world: Option<String>,
        /// Treat the arguments as terms and print their values.
        #[arg(long)]
        term: bool,
        #[arg(required = true)]
        formulae: Vec<String>,
    },
    /// Check that an interpretation is a (counter)model of a problem.
    Check {
        #[arg(long)]
        problem: PathBuf,
        #[arg(long)]
        model: PathBuf,
        /// Exit 0 only if the status matches (name or abbreviation).
        #[arg(long)]
        expect: Option<SzsStatus>,
        /// Write the verification problem here when one is produced.
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Write the verification problem for an external prover.
    EmitVerify {
        #[arg(long)]
        problem: PathBuf,
        #[arg(long)]
        model: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// One conjoined goal instead of one per obligation.
        #[arg(long)]
        conjoin_goals: bool,
    },
    /// Rewrite legacy interpretation roles.
    Upgrade {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Split or merge interpretation-formulae.
    Regrain {
        file: PathBuf,
        #[arg(long, value_parser = parse_granularity)]
        to: Granularity,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Draw the interpretation in DOT.
    Dot {
        file: PathBuf,
        #[arg(long, default_value = "domains", value_parser = parse_view)]
        view: View,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

fn parse_granularity(s: &str) -> Result<Granularity, String> {
    s.parse()
}

fn parse_view(s: &str) -> Result<View, String> {
    s.parse()
}

/// Exits early with a code and message.
struct Fail(u8, String);

type Run = Result<u8, Fail>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(Fail(code, msg)) => {
            eprintln!("tptpi: {}", msg);
            ExitCode::from(code)
        }
    }
}

fn run(cli: &Cli) -> Run {
    match &cli.command {
        Command::Lint { files } => lint(files),
        Command::Assemble { file } => {
            let interp = load_interpretation(file)?;
            print!("{}", render::interpretation(&interp));
            Ok(OK)
        }
        Command::Eval {
            model,
            world,
            term,
            formulae,
        } => eval(model, world.as_deref(), *term, formulae),
        Command::Check {
            problem,
            model,
            expect,
            emit,
        } => check(problem, model, *expect, emit.as_deref()),
        Command::EmitVerify {
            problem,
            model,
            output,
            conjoin_goals,
        } => {
            let problem = load(problem)?;
            let interp = load(model)?;
            let opts = EmitOptions {
                conjoin_goals: *conjoin_goals,
            };
            let kripke = match cli.flavor {
                FlavorArg::Auto => is_modal_problem(&problem),
                f => f == FlavorArg::Kripke,
            };
            let vp = if kripke {
                emit_kripke_verification_problem(&problem, &interp, opts)
            } else {
                emit_verification_problem(&problem, &interp, opts)
            };
            let vp = vp.map_err(|e: EmitError| Fail(USAGE, e.to_string()))?;
            write_out(output.as_deref(), &vp.to_text())?;
            Ok(OK)
        }
        Command::Upgrade { file, output } => {
            let units = load(file)?;
            write_out(output.as_deref(), &print_units(&upgrade_legacy(&units)))?;
            Ok(OK)
        }
        Command::Regrain { file, to, output } => {
            let units = load(file)?;
            let out = regrain(&units, *to).map_err(assembly_failure)?;
            write_out(output.as_deref(), &print_units(&out))?;
            Ok(OK)
        }
        Command::Dot { file, view, output } => {
            let units = load(file)?;
            let interp = match assemble(&units) {
                Ok((i, _)) => i,
                Err(AssemblyError::NoInterpretation) => Interpretation::Tarskian(TarskianInterpretation::default()),
                Err(e) => return Err(assembly_failure(e)),
            };
            write_out(output.as_deref(), &to_dot(&interp, *view))?;
            Ok(OK)
        }
    }
}

fn read(path: &Path) -> Result<String, Fail> {
    fs::read_to_string(path).map_err(|e| Fail(USAGE, format!("cannot read {}: {}", path.display(), e)))
}

/// Parses a file, reporting every diagnostic; any parse error is fatal.
fn load(path: &Path) -> Result<Vec<AnnotatedFormula>, Fail> {
    let out = parse_file(&read(path)?);
    report(path, &out.diagnostics);
    if out.has_errors() {
        return Err(Fail(USAGE, format!("{} has syntax errors", path.display())));
    }
    Ok(out.units)
}

fn load_interpretation(path: &Path) -> Result<Interpretation, Fail> {
    let units = load(path)?;
    let (interp, rep) = assemble(&units).map_err(assembly_failure)?;
    report(path, &rep.warnings);
    Ok(interp)
}

fn assembly_failure(e: AssemblyError) -> Fail {
    Fail(FAILED, e.to_string())
}

fn report(path: &Path, diagnostics: &[Diagnostic]) {
    for d in diagnostics {
        eprintln!("{}:{}", path.display(), with_leading_space(d));
    }
}

fn with_leading_space(d: &Diagnostic) -> String {
    match d.position {
        Some(_) => d.to_string(),
        None => format!(" {}", d),
    }
}

fn write_out(path: Option<&Path>, text: &str) -> Result<(), Fail> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Fail(FAILED, format!("cannot write {}: {}", p.display(), e))),
        None => {
            print!("{}", text);
            Ok(())
        }
    }
}

fn lint(files: &[PathBuf]) -> Run {
    if files.is_empty() {
        return Err(Fail(USAGE, "no files given".into()));
    }
    let mut code = OK;
    for f in files {
        let out = parse_file(&read(f)?);
        report(f, &out.diagnostics);
        if out.has_errors() {
            code = code.max(USAGE);
            continue;
        }
        let checked = check_structure(&out.units);
        let diags: Vec<Diagnostic> = checked.diagnostics().cloned().collect();
        report(f, &diags);
        if checked.has_errors() {
            code = code.max(FAILED);
        } else {
            println!("{}: ok ({} units)", f.display(), out.units.len());
        }
    }
    Ok(code)
}

/// The language to read command-line formulae in: the richest one used by
/// the model file.
fn model_language(units: &[AnnotatedFormula]) -> Language {
    let rank = |l: Language| match l {
        Language::Cnf => 0,
        Language::Fof => 1,
        Language::Tff => 2,
        Language::Thf => 3,
    };
    units.iter().map(|u| u.language).max_by_key(|l| rank(*l)).unwrap_or(Language::Tff)
}

fn eval(model: &Path, world: Option<&str>, as_term: bool, inputs: &[String]) -> Run {
    let units = load(model)?;
    let (interp, rep) = assemble(&units).map_err(assembly_failure)?;
    report(model, &rep.warnings);
    let language = model_language(&units);
    let env = match (&interp, world) {
        (_, Some(w)) => Environment::at_world(w),
        (Interpretation::Kripke(k), None) => match &k.local_world {
            Some(w) => Environment::at_world(w),
            None => Environment::new(),
        },
        (Interpretation::Tarskian(_), None) => Environment::new(),
    };
    let mut code = OK;
    for input in inputs {
        if as_term {
            let t = parse_term(input, language).map_err(|d| Fail(USAGE, format!("{}: {}", input, d)))?;
            let base = match (&interp, &env.current_world) {
                (Interpretation::Tarskian(t), _) => t,
                (Interpretation::Kripke(k), Some(w)) => match k.per_world.get(w) {
                    Some(wi) => &wi.tarskian,
                    None => return Err(Fail(USAGE, format!("undeclared world {}", w))),
                },
                (Interpretation::Kripke(_), None) => return Err(Fail(USAGE, "give a world with --world".into())),
            };
            match eval_term(&t, base, &env) {
                Ok(v) => println!("{} = {}", input, v),
                Err(r) => {
                    println!("{} = unknown ({})", input, r);
                    code = code.max(GAVE_UP);
                }
            }
        } else {
            let f = parse_formula(input, language).map_err(|d| Fail(USAGE, format!("{}: {}", input, d)))?;
            let v = eval_in(&f, &interp, &env);
            println!("{}: {}", input, v);
            if v.is_unknown() {
                code = code.max(GAVE_UP);
            }
        }
    }
    Ok(code)
}

fn check(problem_path: &Path, model_path: &Path, expect: Option<SzsStatus>, emit: Option<&Path>) -> Run {
    let problem = load(problem_path)?;
    let interp = load(model_path)?;
    let report = check_model(&problem, &interp);
    for d in report.diagnostics() {
        eprintln!(" {}", d);
    }
    for s in &report.stages {
        println!("stage {}: {}", s.stage, s.outcome);
    }
    if let Some(e) = &report.evaluation {
        print!("{}", render::verdicts(e));
    }
    if let Some(r) = &report.gave_up_reason {
        println!("gave up: {}", r);
    }
    if let (Some(path), Some(vp)) = (emit, &report.verification_problem) {
        write_out(Some(path), &vp.to_text())?;
        println!("verification problem written to {}", path.display());
    }
    let name = problem_path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    let status = report.szs.unwrap_or(SzsStatus::Error);
    println!("{}", szs_report(status, &name));

    if let Some(want) = expect {
        return Ok(if want == status { OK } else { FAILED });
    }
    Ok(match status {
        SzsStatus::GaveUp => GAVE_UP,
        SzsStatus::Error => FAILED,
        _ if report.has_errors() => FAILED,
        _ => OK,
    })
}
