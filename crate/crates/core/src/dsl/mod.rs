//! The neutrosophic expression language.
//!
//! Programs declare event probabilities as triple literals and query
//! combinations of them:
//!
//! ```text
//! let Popescu = ((40%..60%), (20%..25%) U (30%..35%), {10%,20%,30%})
//! let Rain    = ([50%..54%], {10%, 20%}, {30%} U [34%..35%])
//! NP(Popescu and not Rain)
//! classify(Popescu)
//! ```
//!
//! Ranges use `..` and are closed whichever bracket is used; a `-` or `+`
//! glued to a numeral marks the left or right monad (`0-..1+`).

use thiserror::Error;

pub mod eval;
pub mod lexer;
pub mod parser;
pub mod render;

pub use eval::{evaluate, run, Environment, QueryResult};
pub use lexer::{tokenize, Position, Token, TokenKind};
pub use parser::{parse, parse_set, parse_triple, Expr, Program, QueryKind, Statement};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DslError {
    #[error("{pos}: {message}")]
    Lex { pos: Position, message: String },
    #[error("{pos}: found {found}, expected {}", .expected.join(" or "))]
    Parse { pos: Position, found: String, expected: Vec<String> },
    #[error(transparent)]
    Eval(#[from] EvalError),
}

impl DslError {
    pub fn position(&self) -> Position {
        match self {
            DslError::Lex { pos, .. } | DslError::Parse { pos, .. } => *pos,
            DslError::Eval(EvalError::Unbound { pos, .. } | EvalError::Duplicate { pos, .. }) => *pos,
        }
    }

    pub fn is_syntax(&self) -> bool {
        !matches!(self, DslError::Eval(_))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("{pos}: unbound identifier `{name}`")]
    Unbound { name: String, pos: Position },
    #[error("{pos}: `{name}` is already declared")]
    Duplicate { name: String, pos: Position },
}
