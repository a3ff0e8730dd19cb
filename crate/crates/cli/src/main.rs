use std::fs;
use std::io::{self, Read};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Deserialize;
use serde::Serialize;

use nprob::check::{run_check, CheckConfig, SetOps};
use nprob::dsl::render::{self, NumberStyle};
use nprob::dsl::{evaluate, parse, DslError, Environment, Expr, QueryKind, QueryResult, Statement};
use nprob::worlds::{valuate, Valuation};
use nprob::{Execution, NsSet};

mod output;

const EXIT_IO: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_EVAL: u8 = 3;
const EXIT_CHECK: u8 = 4;

#[derive(Parser)]
#[command(name = "nprob", version, about = "Exact neutrosophic probability")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Number style for text output.
    #[arg(long, global = true, default_value = "fraction", value_parser = parse_style)]
    style: NumberStyle,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the queries of a program.
    Eval {
        /// Program file; `-` or nothing reads stdin.
        file: Option<PathBuf>,
    },
    /// Classify every query, or every declaration if there are none.
    Classify { file: Option<PathBuf> },
    /// Value statements against a JSON world table.
    Worlds { file: Option<PathBuf> },
    /// Run the seeded self-check suites.
    Check {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        cases: u64,
        /// Run cases on one thread.
        #[arg(long)]
        sequential: bool,
        /// Check a deliberately broken addition; the run must fail.
        #[arg(long, hide = true)]
        fault: bool,
    },
}

fn parse_style(s: &str) -> Result<NumberStyle, String> {
    s.parse()
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure { code, message: message.into() }
    }
}

impl From<DslError> for Failure {
    fn from(e: DslError) -> Self {
        let code = if e.is_syntax() { EXIT_PARSE } else { EXIT_EVAL };
        Failure::new(code, e.to_string())
    }
}

fn read_input(file: Option<&PathBuf>) -> Result<String, Failure> {
    match file {
        Some(path) if path.as_os_str() != "-" => fs::read_to_string(path)
            .map_err(|e| Failure::new(EXIT_IO, format!("{}: {e}", path.display()))),
        _ => {
            let mut buf = String::new();
            io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| Failure::new(EXIT_IO, format!("stdin: {e}")))?;
            Ok(buf)
        }
    }
}

fn print_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string(value).expect("serializable"));
}

fn print_results(results: &[QueryResult], cli: &Cli) {
    if cli.json {
        for r in results {
            print_json(&output::JsonQuery::from(r));
        }
        return;
    }
    for (k, r) in results.iter().enumerate() {
        if k > 0 {
            println!();
        }
        println!("{} = {}", r.text, render::triple(&r.triple, cli.style));
        println!("{}", render::report(&r.report, cli.style));
    }
}

fn eval(src: &str, cli: &Cli, classify_all: bool) -> Result<(), Failure> {
    let mut program = parse(src)?;
    if classify_all && !program.statements.iter().any(|s| matches!(s, Statement::Query { .. })) {
        let queries: Vec<Statement> = program
            .statements
            .iter()
            .filter_map(|s| match s {
                Statement::Let { name, pos, .. } => Some(Statement::Query {
                    kind: QueryKind::Classify,
                    expr: Expr::Var { name: name.clone(), pos: *pos },
                    text: format!("classify({name})"),
                }),
                Statement::Query { .. } => None,
            })
            .collect();
        program.statements.extend(queries);
    }
    let results = evaluate(&program, &mut Environment::new()).map_err(DslError::from)?;
    print_results(&results, cli);
    Ok(())
}

#[derive(Deserialize)]
struct WorldTable {
    worlds: Vec<String>,
    statements: serde_json::Map<String, serde_json::Value>,
}

/// Status lists that are not arrays of strings are valued `n/a` like any
/// other malformed statement.
fn statuses(value: &serde_json::Value) -> Option<Vec<&str>> {
    value.as_array()?.iter().map(|s| s.as_str()).collect()
}

fn worlds(src: &str, cli: &Cli) -> Result<(), Failure> {
    let table: WorldTable = serde_json::from_str(src)
        .map_err(|e| Failure::new(EXIT_PARSE, format!("{}:{}: {e}", e.line(), e.column())))?;
    let mut malformed = Vec::new();
    for (name, value) in &table.statements {
        let valuation = match statuses(value) {
            Some(s) => valuate(&table.worlds, &s),
            None => Valuation::NotApplicable,
        };
        if valuation == Valuation::NotApplicable {
            malformed.push(name.as_str());
        }
        if cli.json {
            print_json(&output::JsonValuation::new(name, &valuation));
            continue;
        }
        match valuation {
            Valuation::Defined(nl) => match nl.corner() {
                Some(corner) => println!("{name}: {nl} {}", corner.name()),
                None => println!("{name}: {nl}"),
            },
            Valuation::NotApplicable => println!("{name}: n/a"),
        }
    }
    if malformed.is_empty() {
        Ok(())
    } else {
        Err(Failure::new(EXIT_PARSE, format!("malformed statements: {}", malformed.join(", "))))
    }
}

/// Addition that keeps only the first piece of the true sum.
fn faulty_add(a: &NsSet, b: &NsSet) -> nprob::Result<NsSet> {
    let sum = a.minkowski_add(b)?;
    Ok(NsSet::normalize(sum.pieces().iter().take(1).cloned()))
}

fn check(config: CheckConfig, fault: bool, cli: &Cli) -> Result<(), Failure> {
    let ops = if fault { SetOps { add: faulty_add, ..SetOps::default() } } else { SetOps::default() };
    let report = run_check(&config, &ops);
    if cli.json {
        print_json(&output::JsonCheck::new(config.seed, &report));
    } else {
        println!("{} cases, {} tag checks, seed {}", report.cases, report.tag_checks, config.seed);
        if let Some(cx) = &report.counterexample {
            println!("{cx}");
        }
    }
    match &report.counterexample {
        None => Ok(()),
        Some(cx) => Err(Failure::new(EXIT_CHECK, format!("check failed in the {} suite", cx.suite))),
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Eval { file } => eval(&read_input(file.as_ref())?, cli, false),
        Command::Classify { file } => eval(&read_input(file.as_ref())?, cli, true),
        Command::Worlds { file } => worlds(&read_input(file.as_ref())?, cli),
        Command::Check { seed, cases, sequential, fault } => {
            let execution = if *sequential { Execution::Sequential } else { Execution::default() };
            check(CheckConfig { seed: *seed, cases: *cases, execution }, *fault, cli)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
