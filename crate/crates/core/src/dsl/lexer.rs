use std::fmt;

use num_bigint::BigInt;
use num_traits::{Zero, pow::Pow};

use crate::nonstandard::Rational;

use super::DslError;

/// 1-based line and column.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Position {
    pub line: usize,
    pub column: usize,
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TokenKind {
    Number(Rational),
    Percent,
    MonadMinus,
    MonadPlus,
    /// Leading sign of a negative literal.
    Dash,
    Ident(String),
    Let,
    And,
    Or,
    Not,
    Np,
    Classify,
    LParen,
    RParen,
    LBracket,
    RBracket,
    LBrace,
    RBrace,
    Comma,
    DotDot,
    Union,
    Equals,
    Semicolon,
}

impl TokenKind {
    pub fn describe(&self) -> String {
        match self {
            TokenKind::Number(_) => "number".into(),
            TokenKind::Ident(_) => "identifier".into(),
            other => format!("`{}`", other.symbol()),
        }
    }

    fn symbol(&self) -> &'static str {
        match self {
            TokenKind::Number(_) => "number",
            TokenKind::Ident(_) => "identifier",
            TokenKind::Percent => "%",
            TokenKind::MonadMinus => "-",
            TokenKind::MonadPlus => "+",
            TokenKind::Dash => "-",
            TokenKind::Let => "let",
            TokenKind::And => "and",
            TokenKind::Or => "or",
            TokenKind::Not => "not",
            TokenKind::Np => "NP",
            TokenKind::Classify => "classify",
            TokenKind::LParen => "(",
            TokenKind::RParen => ")",
            TokenKind::LBracket => "[",
            TokenKind::RBracket => "]",
            TokenKind::LBrace => "{",
            TokenKind::RBrace => "}",
            TokenKind::Comma => ",",
            TokenKind::DotDot => "..",
            TokenKind::Union => "U",
            TokenKind::Equals => "=",
            TokenKind::Semicolon => ";",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    pub lexeme: String,
    pub pos: Position,
    /// Byte offsets into the source.
    pub start: usize,
    pub end: usize,
}

struct Lexer<'a> {
    src: &'a str,
    offset: usize,
    line: usize,
    column: usize,
    tokens: Vec<Token>,
}

impl<'a> Lexer<'a> {
    fn peek(&self) -> Option<char> {
        self.src[self.offset..].chars().next()
    }

    fn peek_second(&self) -> Option<char> {
        self.src[self.offset..].chars().nth(1)
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.offset += c.len_utf8();
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    fn position(&self) -> Position {
        Position { line: self.line, column: self.column }
    }

    fn push(&mut self, kind: TokenKind, start: usize, pos: Position) {
        self.tokens.push(Token {
            kind,
            lexeme: self.src[start..self.offset].to_string(),
            pos,
            start,
            end: self.offset,
        });
    }

    /// A sign directly after a numeral (or its `%`) is a monad suffix unless
    /// a digit follows it.
    fn suffix_position(&self) -> bool {
        let adjacent = self.tokens.last().is_some_and(|t| {
            t.end == self.offset && matches!(t.kind, TokenKind::Number(_) | TokenKind::Percent)
        });
        adjacent && !self.peek_second().is_some_and(|c| c.is_ascii_digit())
    }

    fn digits(&mut self) -> &'a str {
        let start = self.offset;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.bump();
        }
        &self.src[start..self.offset]
    }

    fn number(&mut self, pos: Position) -> Result<Rational, DslError> {
        let whole = self.digits();
        let whole = if whole.is_empty() { BigInt::zero() } else { whole.parse().expect("digits") };
        let mut value = Rational::from_integer(whole);
        if self.peek() == Some('.') && self.peek_second().is_some_and(|c| c.is_ascii_digit()) {
            self.bump();
            let frac = self.digits();
            let scale = BigInt::from(10u32).pow(frac.len() as u32);
            let frac_value = Rational::new(frac.parse::<BigInt>().expect("digits"), scale);
            value += frac_value;
        } else if self.peek() == Some('/') {
            self.bump();
            let denom = self.digits();
            if denom.is_empty() {
                return Err(DslError::Lex { pos, message: "expected digits after `/`".into() });
            }
            let denom: BigInt = denom.parse().expect("digits");
            if denom.is_zero() {
                return Err(DslError::Lex { pos, message: "zero denominator".into() });
            }
            value /= Rational::from_integer(denom);
        }
        Ok(value)
    }

    fn run(mut self) -> Result<Vec<Token>, DslError> {
        while let Some(c) = self.peek() {
            let start = self.offset;
            let pos = self.position();
            if c.is_whitespace() {
                self.bump();
                continue;
            }
            if c == '#' {
                while self.peek().is_some_and(|c| c != '\n') {
                    self.bump();
                }
                continue;
            }
            let kind = match c {
                '0'..='9' => TokenKind::Number(self.number(pos)?),
                '.' if self.peek_second().is_some_and(|c| c.is_ascii_digit()) => {
                    TokenKind::Number(self.number(pos)?)
                }
                'A'..='Z' | 'a'..='z' | '_' => {
                    while self.peek().is_some_and(|c| c.is_ascii_alphanumeric() || c == '_') {
                        self.bump();
                    }
                    match &self.src[start..self.offset] {
                        "let" => TokenKind::Let,
                        "and" => TokenKind::And,
                        "or" => TokenKind::Or,
                        "not" => TokenKind::Not,
                        "NP" => TokenKind::Np,
                        "classify" => TokenKind::Classify,
                        "U" => TokenKind::Union,
                        ident => TokenKind::Ident(ident.to_string()),
                    }
                }
                '-' | '+' => {
                    let suffix = self.suffix_position();
                    self.bump();
                    match (c, suffix) {
                        ('-', true) => TokenKind::MonadMinus,
                        ('+', true) => TokenKind::MonadPlus,
                        ('-', false) => TokenKind::Dash,
                        _ => {
                            return Err(DslError::Lex {
                                pos,
                                message: "`+` is only valid as a monad suffix".into(),
                            })
                        }
                    }
                }
                '.' if self.peek_second() == Some('.') => {
                    self.bump();
                    self.bump();
                    TokenKind::DotDot
                }
                '%' | '(' | ')' | '[' | ']' | '{' | '}' | ',' | '=' | ';' => {
                    self.bump();
                    match c {
                        '%' => TokenKind::Percent,
                        '(' => TokenKind::LParen,
                        ')' => TokenKind::RParen,
                        '[' => TokenKind::LBracket,
                        ']' => TokenKind::RBracket,
                        '{' => TokenKind::LBrace,
                        '}' => TokenKind::RBrace,
                        ',' => TokenKind::Comma,
                        '=' => TokenKind::Equals,
                        _ => TokenKind::Semicolon,
                    }
                }
                other => {
                    return Err(DslError::Lex {
                        pos,
                        message: format!("unexpected character {other:?}"),
                    })
                }
            };
            self.push(kind, start, pos);
        }
        Ok(self.tokens)
    }
}

pub fn tokenize(src: &str) -> Result<Vec<Token>, DslError> {
    Lexer { src, offset: 0, line: 1, column: 1, tokens: Vec::new() }.run()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nonstandard::ratio;
    use TokenKind::*;

    fn kinds(src: &str) -> Vec<TokenKind> {
        tokenize(src).unwrap().into_iter().map(|t| t.kind).collect()
    }

    #[test]
    fn monad_suffixes() {
        assert_eq!(kinds("0-"), vec![Number(ratio(0, 1)), MonadMinus]);
        assert_eq!(
            kinds("0-..1+"),
            vec![Number(ratio(0, 1)), MonadMinus, DotDot, Number(ratio(1, 1)), MonadPlus]
        );
        assert_eq!(kinds("50%+"), vec![Number(ratio(50, 1)), Percent, MonadPlus]);
        assert_eq!(kinds("-1/2"), vec![Dash, Number(ratio(1, 2))]);
    }

    #[test]
    fn percent_range() {
        assert_eq!(
            kinds("(40%..60%)"),
            vec![
                LParen,
                Number(ratio(40, 1)),
                Percent,
                DotDot,
                Number(ratio(60, 1)),
                Percent,
                RParen
            ]
        );
    }

    #[test]
    fn literals_are_exact() {
        assert_eq!(kinds("0.4"), vec![Number(ratio(2, 5))]);
        assert_eq!(kinds("2/5"), vec![Number(ratio(2, 5))]);
        assert_eq!(kinds("0.125"), vec![Number(ratio(1, 8))]);
        assert_eq!(kinds(".5"), vec![Number(ratio(1, 2))]);
        assert_eq!(kinds("0...5"), vec![Number(ratio(0, 1)), DotDot, Number(ratio(1, 2))]);
    }

    #[test]
    fn spaced_minus_is_a_dash() {
        assert_eq!(kinds("0.5 - 0.2"), vec![Number(ratio(1, 2)), Dash, Number(ratio(1, 5))]);
        // glued but followed by a digit: still not a suffix
        assert_eq!(kinds("0.5-0.2"), vec![Number(ratio(1, 2)), Dash, Number(ratio(1, 5))]);
    }

    #[test]
    fn keywords_and_comments() {
        assert_eq!(
            kinds("let A = # note\nNP classify and or not U B1"),
            vec![
                Let,
                Ident("A".into()),
                Equals,
                Np,
                Classify,
                And,
                Or,
                Not,
                Union,
                Ident("B1".into())
            ]
        );
    }

    #[test]
    fn positions_increase() {
        let toks = tokenize("let A =\n  ({1}, {0}, {0})").unwrap();
        assert_eq!(toks[0].pos, Position { line: 1, column: 1 });
        assert_eq!(toks[3].pos, Position { line: 2, column: 3 });
        assert!(toks.windows(2).all(|w| w[0].pos < w[1].pos));
    }

    #[test]
    fn lex_errors_carry_position() {
        match tokenize("{0.5}\n  @") {
            Err(DslError::Lex { pos, .. }) => assert_eq!(pos, Position { line: 2, column: 3 }),
            other => panic!("unexpected {other:?}"),
        }
        assert!(tokenize("1/0").is_err());
        assert!(tokenize("+1").is_err());
    }
}
