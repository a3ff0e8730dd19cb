use std::collections::BTreeMap;

use crate::probability::{ClassificationReport, NpTriple};

use super::parser::{Expr, Program, QueryKind, Statement};
use super::{DslError, EvalError};

pub type Environment = BTreeMap<String, NpTriple>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QueryResult {
    /// Query as written in the source.
    pub text: String,
    pub kind: QueryKind,
    pub triple: NpTriple,
    pub report: ClassificationReport,
}

fn eval_expr(expr: &Expr, env: &Environment) -> Result<NpTriple, EvalError> {
    Ok(match expr {
        Expr::Var { name, pos } => env
            .get(name)
            .cloned()
            .ok_or_else(|| EvalError::Unbound { name: name.clone(), pos: *pos })?,
        Expr::Not(x) => eval_expr(x, env)?.not(),
        Expr::And(a, b) => eval_expr(a, env)?.and(&eval_expr(b, env)?),
        Expr::Or(a, b) => eval_expr(a, env)?.or(&eval_expr(b, env)?),
    })
}

/// Runs a program against `env`, extending it with each declaration in order.
pub fn evaluate(program: &Program, env: &mut Environment) -> Result<Vec<QueryResult>, EvalError> {
    let mut results = Vec::new();
    for statement in &program.statements {
        match statement {
            Statement::Let { name, pos, triple } => {
                if env.contains_key(name) {
                    return Err(EvalError::Duplicate { name: name.clone(), pos: *pos });
                }
                env.insert(name.clone(), triple.clone());
            }
            Statement::Query { kind, expr, text } => {
                let triple = eval_expr(expr, env)?;
                let report = triple.classify();
                results.push(QueryResult { text: text.clone(), kind: *kind, triple, report });
            }
        }
    }
    Ok(results)
}

/// Parses and evaluates `src` in a fresh environment.
pub fn run(src: &str) -> Result<Vec<QueryResult>, DslError> {
    let program = super::parse(src)?;
    Ok(evaluate(&program, &mut Environment::new())?)
}
