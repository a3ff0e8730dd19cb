//! Recursive-descent parser.
//!
//! ```text
//! program := (decl | query | ";")*
//! decl    := "let" Ident "=" triple
//! triple  := "(" set "," set "," set ")"
//! set     := term ("U" term)*
//! term    := "[" bound ".." bound "]" | "(" bound ".." bound ")"
//!          | "{" bound ("," bound)* "}" | bound
//! bound   := ["-"] Number ["%"] ["-" | "+"]
//! query   := ("NP" | "classify") "(" expr ")"
//! expr    := and ("or" and)*
//! and     := unary ("and" unary)*
//! unary   := "not" unary | Ident | "(" expr ")"
//! ```

use num_traits::Zero;

use crate::nonstandard::{ratio, Bound, MonadTag};
use crate::nsset::{NsSet, Piece};
use crate::probability::NpTriple;

use super::lexer::{tokenize, Position, Token, TokenKind};
use super::DslError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Var { name: String, pos: Position },
    Not(Box<Expr>),
    And(Box<Expr>, Box<Expr>),
    Or(Box<Expr>, Box<Expr>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QueryKind {
    Np,
    Classify,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Statement {
    Let { name: String, pos: Position, triple: NpTriple },
    Query { kind: QueryKind, expr: Expr, text: String },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Program {
    pub statements: Vec<Statement>,
}

struct Parser<'a> {
    src: &'a str,
    tokens: Vec<Token>,
    next: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&TokenKind> {
        self.tokens.get(self.next).map(|t| &t.kind)
    }

    fn error(&self, expected: &[&str]) -> DslError {
        let (pos, found) = match self.tokens.get(self.next) {
            Some(t) => (t.pos, format!("`{}`", t.lexeme)),
            None => (self.end_position(), "end of input".to_string()),
        };
        DslError::Parse {
            pos,
            found,
            expected: expected.iter().map(|s| s.to_string()).collect(),
        }
    }

    fn end_position(&self) -> Position {
        let mut pos = Position { line: 1, column: 1 };
        for c in self.src.chars() {
            if c == '\n' {
                pos.line += 1;
                pos.column = 1;
            } else {
                pos.column += 1;
            }
        }
        pos
    }

    fn eat(&mut self, kind: &TokenKind) -> bool {
        if self.peek() == Some(kind) {
            self.next += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, kind: TokenKind) -> Result<&Token, DslError> {
        if self.peek() == Some(&kind) {
            self.next += 1;
            Ok(&self.tokens[self.next - 1])
        } else {
            Err(self.error(&[&kind.describe()]))
        }
    }

    fn program(&mut self) -> Result<Program, DslError> {
        let mut statements = Vec::new();
        while let Some(kind) = self.peek() {
            match kind {
                TokenKind::Semicolon => self.next += 1,
                TokenKind::Let => statements.push(self.decl()?),
                TokenKind::Np | TokenKind::Classify => statements.push(self.query()?),
                _ => return Err(self.error(&["`let`", "`NP`", "`classify`"])),
            }
        }
        Ok(Program { statements })
    }

    fn decl(&mut self) -> Result<Statement, DslError> {
        self.expect(TokenKind::Let)?;
        let (name, pos) = match self.tokens.get(self.next) {
            Some(Token { kind: TokenKind::Ident(name), pos, .. }) => (name.clone(), *pos),
            _ => return Err(self.error(&["identifier"])),
        };
        self.next += 1;
        self.expect(TokenKind::Equals)?;
        let triple = self.triple()?;
        Ok(Statement::Let { name, pos, triple })
    }

    fn triple(&mut self) -> Result<NpTriple, DslError> {
        self.expect(TokenKind::LParen)?;
        let t = self.set()?;
        self.expect(TokenKind::Comma)?;
        let i = self.set()?;
        self.expect(TokenKind::Comma)?;
        let f = self.set()?;
        self.expect(TokenKind::RParen)?;
        Ok(NpTriple::new(t, i, f).expect("set literals are non-empty"))
    }

    fn set(&mut self) -> Result<NsSet, DslError> {
        let mut pieces = self.term()?;
        while self.eat(&TokenKind::Union) {
            pieces.extend(self.term()?);
        }
        Ok(NsSet::normalize(pieces))
    }

    fn term(&mut self) -> Result<Vec<Piece>, DslError> {
        let close = match self.peek() {
            Some(TokenKind::LBracket) => TokenKind::RBracket,
            Some(TokenKind::LParen) => TokenKind::RParen,
            Some(TokenKind::LBrace) => {
                self.next += 1;
                let mut points = vec![Piece::point(self.bound()?)];
                while self.eat(&TokenKind::Comma) {
                    points.push(Piece::point(self.bound()?));
                }
                self.expect(TokenKind::RBrace)?;
                return Ok(points);
            }
            Some(TokenKind::Dash | TokenKind::Number(_)) => {
                return Ok(vec![Piece::point(self.bound()?)]);
            }
            _ => return Err(self.error(&["`[`", "`(`", "`{`", "number"])),
        };
        let open_pos = self.tokens[self.next].pos;
        self.next += 1;
        let lo = self.bound()?;
        self.expect(TokenKind::DotDot)?;
        let hi = self.bound()?;
        self.expect(close)?;
        Piece::new(lo, hi).map(|p| vec![p]).map_err(|e| DslError::Parse {
            pos: open_pos,
            found: e.to_string(),
            expected: vec!["a range with lower end <= upper end".into()],
        })
    }

    fn bound(&mut self) -> Result<Bound, DslError> {
        let negative = self.eat(&TokenKind::Dash);
        let mut value = match self.peek() {
            Some(TokenKind::Number(v)) => v.clone(),
            _ => return Err(self.error(&["number"])),
        };
        self.next += 1;
        if self.eat(&TokenKind::Percent) {
            value /= ratio(100, 1);
        }
        if negative && !value.is_zero() {
            value = -value;
        }
        let tag = if self.eat(&TokenKind::MonadMinus) {
            MonadTag::Minus
        } else if self.eat(&TokenKind::MonadPlus) {
            MonadTag::Plus
        } else {
            MonadTag::Standard
        };
        Ok(Bound::new(value, tag))
    }

    fn query(&mut self) -> Result<Statement, DslError> {
        let first = &self.tokens[self.next];
        let start = first.start;
        let kind = if first.kind == TokenKind::Np { QueryKind::Np } else { QueryKind::Classify };
        self.next += 1;
        self.expect(TokenKind::LParen)?;
        let expr = self.expr()?;
        let end = self.expect(TokenKind::RParen)?.end;
        Ok(Statement::Query { kind, expr, text: self.src[start..end].to_string() })
    }

    fn expr(&mut self) -> Result<Expr, DslError> {
        let mut lhs = self.and()?;
        while self.eat(&TokenKind::Or) {
            lhs = Expr::Or(Box::new(lhs), Box::new(self.and()?));
        }
        Ok(lhs)
    }

    fn and(&mut self) -> Result<Expr, DslError> {
        let mut lhs = self.unary()?;
        while self.eat(&TokenKind::And) {
            lhs = Expr::And(Box::new(lhs), Box::new(self.unary()?));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr, DslError> {
        match self.tokens.get(self.next) {
            Some(Token { kind: TokenKind::Not, .. }) => {
                self.next += 1;
                Ok(Expr::Not(Box::new(self.unary()?)))
            }
            Some(Token { kind: TokenKind::Ident(name), pos, .. }) => {
                let var = Expr::Var { name: name.clone(), pos: *pos };
                self.next += 1;
                Ok(var)
            }
            Some(Token { kind: TokenKind::LParen, .. }) => {
                self.next += 1;
                let e = self.expr()?;
                self.expect(TokenKind::RParen)?;
                Ok(e)
            }
            _ => Err(self.error(&["identifier", "`not`", "`(`"])),
        }
    }

    fn finish(&self) -> Result<(), DslError> {
        if self.next < self.tokens.len() {
            return Err(self.error(&["end of input"]));
        }
        Ok(())
    }
}

fn parser(src: &str) -> Result<Parser<'_>, DslError> {
    Ok(Parser { src, tokens: tokenize(src)?, next: 0 })
}

pub fn parse(src: &str) -> Result<Program, DslError> {
    parser(src)?.program()
}

/// Parses a bare triple literal such as `({1/2}, {0}, [0..1/2])`.
pub fn parse_triple(src: &str) -> Result<NpTriple, DslError> {
    let mut p = parser(src)?;
    let triple = p.triple()?;
    p.finish()?;
    Ok(triple)
}

/// Parses a bare set literal such as `[0..1/4] U {1/2}`.
pub fn parse_set(src: &str) -> Result<NsSet, DslError> {
    let mut p = parser(src)?;
    let set = p.set()?;
    p.finish()?;
    Ok(set)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nonstandard::ratio;

    fn var(name: &str) -> Expr {
        Expr::Var { name: name.into(), pos: Position { line: 0, column: 0 } }
    }

    /// Strips positions so AST shapes can be compared.
    fn shape(e: &Expr) -> Expr {
        match e {
            Expr::Var { name, .. } => var(name),
            Expr::Not(x) => Expr::Not(Box::new(shape(x))),
            Expr::And(a, b) => Expr::And(Box::new(shape(a)), Box::new(shape(b))),
            Expr::Or(a, b) => Expr::Or(Box::new(shape(a)), Box::new(shape(b))),
        }
    }

    fn query_expr(src: &str) -> Expr {
        match &parse(src).unwrap().statements[0] {
            Statement::Query { expr, .. } => shape(expr),
            other => panic!("not a query: {other:?}"),
        }
    }

    #[test]
    fn popescu_declaration() {
        let program =
            parse("let Popescu = ((40%..60%), (20%..25%) U (30%..35%), {10%,20%,30%})").unwrap();
        let Statement::Let { name, triple, .. } = &program.statements[0] else {
            panic!("expected declaration");
        };
        assert_eq!(name, "Popescu");
        assert_eq!(triple.t().pieces().len(), 1);
        assert_eq!(triple.i().pieces().len(), 2);
        assert_eq!(triple.f().pieces().len(), 3);
        assert_eq!(triple.t().inf().unwrap(), &Bound::standard(ratio(2, 5)));
    }

    #[test]
    fn precedence() {
        assert_eq!(
            query_expr("NP(A and not B)"),
            Expr::And(Box::new(var("A")), Box::new(Expr::Not(Box::new(var("B")))))
        );
        assert_eq!(
            query_expr("NP(A or B and C)"),
            Expr::Or(
                Box::new(var("A")),
                Box::new(Expr::And(Box::new(var("B")), Box::new(var("C"))))
            )
        );
        assert_eq!(
            query_expr("classify((A or B) and C)"),
            Expr::And(
                Box::new(Expr::Or(Box::new(var("A")), Box::new(var("B")))),
                Box::new(var("C"))
            )
        );
    }

    #[test]
    fn query_text_is_the_source_slice() {
        let program = parse("NP( A  and B ) ; classify(A)").unwrap();
        let texts: Vec<_> = program
            .statements
            .iter()
            .map(|s| match s {
                Statement::Query { text, .. } => text.as_str(),
                _ => unreachable!(),
            })
            .collect();
        assert_eq!(texts, ["NP( A  and B )", "classify(A)"]);
    }

    #[test]
    fn dangling_operator_reports_position() {
        match parse("NP(A and)") {
            Err(DslError::Parse { pos, found, expected }) => {
                assert_eq!(pos, Position { line: 1, column: 9 });
                assert_eq!(found, "`)`");
                assert!(expected.contains(&"identifier".to_string()));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn arithmetic_on_literals_is_rejected() {
        assert!(parse_set("0.5 - 0.2").is_err());
        assert!(parse("let A = ({0.5 - 0.2}, {0}, {0})").is_err());
    }

    #[test]
    fn literal_spellings_agree() {
        let a = parse_set("{40%}").unwrap();
        assert_eq!(a, parse_set("{0.4}").unwrap());
        assert_eq!(a, parse_set("{2/5}").unwrap());
        assert_eq!(a, parse_set("2/5").unwrap());
    }

    #[test]
    fn unit_interval_literal() {
        let unit = parse_set("[0-..1+]").unwrap();
        assert_eq!(unit.inf().unwrap(), &Bound::new(ratio(0, 1), MonadTag::Minus));
        assert_eq!(unit.sup().unwrap(), &Bound::new(ratio(1, 1), MonadTag::Plus));
        assert_eq!(unit, parse_set("(0-..1+)").unwrap());
    }

    #[test]
    fn negative_literals() {
        let s = parse_set("[-1/2..-1/4-]").unwrap();
        assert_eq!(s.inf().unwrap(), &Bound::standard(ratio(-1, 2)));
        assert_eq!(s.sup().unwrap(), &Bound::new(ratio(-1, 4), MonadTag::Minus));
    }

    #[test]
    fn inverted_range_is_a_syntax_error() {
        assert!(matches!(parse_set("[0.5..0.2]"), Err(DslError::Parse { .. })));
    }

    #[test]
    fn trailing_garbage() {
        assert!(parse_triple("({1}, {0}, {0}) x").is_err());
        assert!(parse("let A = ({1}, {0}, {0}) A").is_err());
    }
}
