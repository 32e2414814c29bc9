//! The input expression language: complex literals, the variable `z`, the
//! builtin entire series `exp`/`sin`/`cos`, arithmetic operators, and the
//! series-level functions `recip`, `root`, `compose`, `recenter`, `derive`
//! and `laurent`.
//!
//! The language deliberately has no bindings, user functions or loops; it
//! exists to name test functions, not to be a language. The printer emits a
//! canonical form with minimal parentheses whose reparse is AST-identical.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
#[error("line {line}, column {col}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl ParseError {
    fn new(pos: Pos, message: impl Into<String>) -> Self {
        Self { line: pos.line, col: pos.col, message: message.into() }
    }
}

/// Abstract syntax. Literals keep the lexical real/imaginary split (`2i`
/// stays one imaginary literal) so printing is faithful; the parser never
/// produces negative literal values (unary minus is a `Neg` node).
#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    /// A numeric literal; `imaginary` marks the `i` suffix (or bare `i`).
    Literal { value: f64, imaginary: bool },
    /// The series variable `z`.
    Var,
    /// Builtin entire series, used as nullary atoms (`compose(exp, 2*z)`).
    Exp,
    Sin,
    Cos,
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    /// `base ^ k` with a literal positive integer exponent.
    Pow(Box<Expr>, u32),
    Recip(Box<Expr>),
    /// `root(e, p)`: the branch of `e^(1/p)` with principal constant term.
    Root(Box<Expr>, u32),
    /// `compose(outer, inner)`.
    Compose(Box<Expr>, Box<Expr>),
    /// `recenter(e, w)`: re-expand `e` about the constant `w`.
    Recenter(Box<Expr>, Box<Expr>),
    Derive(Box<Expr>),
    /// `laurent(negList; posList)`: entry `m` of the first list is the
    /// coefficient of `z^-(m+1)`, entry `m` of the second that of `z^m`.
    Laurent(Vec<Expr>, Vec<Expr>),
}

#[derive(Debug, Clone, Copy, PartialEq)]
struct Pos {
    line: usize,
    col: usize,
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Number { value: f64, imaginary: bool },
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Comma,
    Semi,
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Number { value, imaginary } => {
                write!(f, "{value}{}", if *imaginary { "i" } else { "" })
            }
            Token::Ident(s) => write!(f, "{s}"),
            Token::Plus => write!(f, "+"),
            Token::Minus => write!(f, "-"),
            Token::Star => write!(f, "*"),
            Token::Slash => write!(f, "/"),
            Token::Caret => write!(f, "^"),
            Token::LParen => write!(f, "("),
            Token::RParen => write!(f, ")"),
            Token::Comma => write!(f, ","),
            Token::Semi => write!(f, ";"),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(Token, Pos)>, ParseError> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut idx = 0;
    let mut line = 1;
    let mut col = 1;
    while idx < chars.len() {
        let c = chars[idx];
        let pos = Pos { line, col };
        let advance = |idx: &mut usize, col: &mut usize| {
            *idx += 1;
            *col += 1;
        };
        match c {
            '\n' => {
                idx += 1;
                line += 1;
                col = 1;
            }
            c if c.is_whitespace() => advance(&mut idx, &mut col),
            '+' => {
                out.push((Token::Plus, pos));
                advance(&mut idx, &mut col);
            }
            '-' => {
                out.push((Token::Minus, pos));
                advance(&mut idx, &mut col);
            }
            '*' => {
                out.push((Token::Star, pos));
                advance(&mut idx, &mut col);
            }
            '/' => {
                out.push((Token::Slash, pos));
                advance(&mut idx, &mut col);
            }
            '^' => {
                out.push((Token::Caret, pos));
                advance(&mut idx, &mut col);
            }
            '(' => {
                out.push((Token::LParen, pos));
                advance(&mut idx, &mut col);
            }
            ')' => {
                out.push((Token::RParen, pos));
                advance(&mut idx, &mut col);
            }
            ',' => {
                out.push((Token::Comma, pos));
                advance(&mut idx, &mut col);
            }
            ';' => {
                out.push((Token::Semi, pos));
                advance(&mut idx, &mut col);
            }
            c if c.is_ascii_digit() => {
                let start = idx;
                while idx < chars.len() && chars[idx].is_ascii_digit() {
                    advance(&mut idx, &mut col);
                }
                if idx < chars.len() && chars[idx] == '.' {
                    advance(&mut idx, &mut col);
                    if idx >= chars.len() || !chars[idx].is_ascii_digit() {
                        return Err(ParseError::new(pos, "digits must follow a decimal point"));
                    }
                    while idx < chars.len() && chars[idx].is_ascii_digit() {
                        advance(&mut idx, &mut col);
                    }
                }
                if idx < chars.len() && (chars[idx] == 'e' || chars[idx] == 'E') {
                    // Exponent only when what follows completes one; `2e`
                    // otherwise stays `2` followed by an identifier.
                    let mut probe = idx + 1;
                    if probe < chars.len() && (chars[probe] == '+' || chars[probe] == '-') {
                        probe += 1;
                    }
                    if probe < chars.len() && chars[probe].is_ascii_digit() {
                        while idx < probe {
                            advance(&mut idx, &mut col);
                        }
                        while idx < chars.len() && chars[idx].is_ascii_digit() {
                            advance(&mut idx, &mut col);
                        }
                    }
                }
                let lexeme: String = chars[start..idx].iter().collect();
                let value: f64 = lexeme
                    .parse()
                    .map_err(|_| ParseError::new(pos, format!("bad number literal `{lexeme}`")))?;
                // `2i` is a single imaginary literal; the suffix only binds
                // when it is not the start of a longer identifier.
                let imaginary = idx < chars.len()
                    && chars[idx] == 'i'
                    && !(idx + 1 < chars.len() && is_ident_char(chars[idx + 1]));
                if imaginary {
                    advance(&mut idx, &mut col);
                }
                out.push((Token::Number { value, imaginary }, pos));
            }
            c if is_ident_start(c) => {
                let start = idx;
                while idx < chars.len() && is_ident_char(chars[idx]) {
                    advance(&mut idx, &mut col);
                }
                out.push((Token::Ident(chars[start..idx].iter().collect()), pos));
            }
            other => {
                return Err(ParseError::new(pos, format!("unexpected character `{other}`")));
            }
        }
    }
    Ok(out)
}

fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

struct Parser {
    tokens: Vec<(Token, Pos)>,
    idx: usize,
    end: Pos,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.idx).map(|(t, _)| t)
    }

    fn pos(&self) -> Pos {
        self.tokens.get(self.idx).map(|&(_, p)| p).unwrap_or(self.end)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.idx).map(|(t, _)| t.clone());
        if t.is_some() {
            self.idx += 1;
        }
        t
    }

    fn expect(&mut self, want: Token, what: &str) -> Result<(), ParseError> {
        let pos = self.pos();
        match self.next() {
            Some(t) if t == want => Ok(()),
            Some(t) => Err(ParseError::new(pos, format!("expected {what}, found `{t}`"))),
            None => Err(ParseError::new(pos, format!("expected {what}, found end of input"))),
        }
    }

    fn parse_expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.parse_term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.next();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.parse_term()?));
                }
                Some(Token::Minus) => {
                    self.next();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.parse_term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn parse_term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.parse_unary()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.next();
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.parse_unary()?));
                }
                Some(Token::Slash) => {
                    self.next();
                    lhs = Expr::Div(Box::new(lhs), Box::new(self.parse_unary()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn parse_unary(&mut self) -> Result<Expr, ParseError> {
        if matches!(self.peek(), Some(Token::Minus)) {
            self.next();
            return Ok(Expr::Neg(Box::new(self.parse_unary()?)));
        }
        self.parse_power()
    }

    fn parse_power(&mut self) -> Result<Expr, ParseError> {
        let base = self.parse_atom()?;
        if matches!(self.peek(), Some(Token::Caret)) {
            self.next();
            let k = self.parse_positive_int("exponent")?;
            return Ok(Expr::Pow(Box::new(base), k));
        }
        Ok(base)
    }

    fn parse_positive_int(&mut self, what: &str) -> Result<u32, ParseError> {
        let pos = self.pos();
        match self.next() {
            Some(Token::Number { value, imaginary: false })
                if value.fract() == 0.0 && value >= 1.0 && value <= u32::MAX as f64 =>
            {
                Ok(value as u32)
            }
            Some(t) =>

                Err(ParseError::new(pos, format!("{what} must be a positive integer, found `{t}`"))),
            None => Err(ParseError::new(pos, format!("{what} must be a positive integer"))),
        }
    }

    fn parse_atom(&mut self) -> Result<Expr, ParseError> {
        let pos = self.pos();
        match self.next() {
            Some(Token::Number { value, imaginary }) => Ok(Expr::Literal { value, imaginary }),
            Some(Token::LParen) => {
                let inner = self.parse_expr()?;
                self.expect(Token::RParen, "`)`")?;
                Ok(inner)
            }
            Some(Token::Ident(name)) => self.parse_named(&name, pos),
            Some(t) => Err(ParseError::new(pos, format!("expected an expression, found `{t}`"))),
            None => Err(ParseError::new(pos, "expected an expression, found end of input")),
        }
    }

    fn parse_named(&mut self, name: &str, pos: Pos) -> Result<Expr, ParseError> {
        match name {
            "z" => Ok(Expr::Var),
            "i" => Ok(Expr::Literal { value: 1.0, imaginary: true }),
            "exp" | "sin" | "cos" => {
                if matches!(self.peek(), Some(Token::LParen)) {
                    return Err(ParseError::new(
                        pos,
                        format!("`{name}` is a series, not a function; write compose({name}, e)"),
                    ));
                }
                Ok(match name {
                    "exp" => Expr::Exp,
                    "sin" => Expr::Sin,
                    _ => Expr::Cos,
                })
            }
            "recip" | "derive" => {
                self.expect(Token::LParen, "`(`")?;
                let arg = self.parse_expr()?;
                self.expect(Token::RParen, "`)`")?;
                Ok(if name == "recip" {
                    Expr::Recip(Box::new(arg))
                } else {
                    Expr::Derive(Box::new(arg))
                })
            }
            "root" => {
                self.expect(Token::LParen, "`(`")?;
                let arg = self.parse_expr()?;
                self.expect(Token::Comma, "`,`")?;
                let p = self.parse_positive_int("root index")?;
                self.expect(Token::RParen, "`)`")?;
                Ok(Expr::Root(Box::new(arg), p))
            }
            "compose" | "recenter" => {
                self.expect(Token::LParen, "`(`")?;
                let first = self.parse_expr()?;
                self.expect(Token::Comma, "`,`")?;
                let second = self.parse_expr()?;
                self.expect(Token::RParen, "`)`")?;
                Ok(if name == "compose" {
                    Expr::Compose(Box::new(first), Box::new(second))
                } else {
                    Expr::Recenter(Box::new(first), Box::new(second))
                })
            }
            "laurent" => {
                self.expect(Token::LParen, "`(`")?;
                let neg = self.parse_expr_list(&[Token::Semi])?;
                self.expect(Token::Semi, "`;`")?;
                let pos_list = self.parse_expr_list(&[Token::RParen])?;
                self.expect(Token::RParen, "`)`")?;
                Ok(Expr::Laurent(neg, pos_list))
            }
            other => Err(ParseError::new(pos, format!("unknown identifier `{other}`"))),
        }
    }

    /// Comma-separated expressions, stopping (possibly empty) before any of
    /// the given terminators.
    fn parse_expr_list(&mut self, stops: &[Token]) -> Result<Vec<Expr>, ParseError> {
        let mut out = Vec::new();
        if self.peek().is_some_and(|t| stops.contains(t)) {
            return Ok(out);
        }
        loop {
            out.push(self.parse_expr()?);
            if matches!(self.peek(), Some(Token::Comma)) {
                self.next();
            } else {
                return Ok(out);
            }
        }
    }
}

/// Parses one expression; the whole text must be consumed.
pub fn parse_series_expr(text: &str) -> Result<Expr, ParseError> {
    let tokens = lex(text)?;
    let last_line = text.lines().count().max(1);
    let last_col = text.lines().last().map(|l| l.chars().count() + 1).unwrap_or(1);
    let mut parser = Parser { tokens, idx: 0, end: Pos { line: last_line, col: last_col } };
    let expr = parser.parse_expr()?;
    if let Some(extra) = parser.peek() {
        return Err(ParseError::new(
            parser.pos(),
            format!("unexpected `{extra}` after the expression"),
        ));
    }
    Ok(expr)
}

/// Binding strength used by the canonical printer; larger binds tighter.
fn precedence(e: &Expr) -> u8 {
    match e {
        Expr::Add(..) | Expr::Sub(..) => 1,
        Expr::Mul(..) | Expr::Div(..) => 2,
        Expr::Neg(..) => 3,
        Expr::Pow(..) => 4,
        _ => 5,
    }
}

fn write_child(f: &mut fmt::Formatter<'_>, child: &Expr, needs_parens: bool) -> fmt::Result {
    if needs_parens {
        write!(f, "({child})")
    } else {
        write!(f, "{child}")
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Literal { value, imaginary: false } => write!(f, "{value}"),
            Expr::Literal { value, imaginary: true } => {
                if *value == 1.0 {
                    write!(f, "i")
                } else {
                    write!(f, "{value}i")
                }
            }
            Expr::Var => write!(f, "z"),
            Expr::Exp => write!(f, "exp"),
            Expr::Sin => write!(f, "sin"),
            Expr::Cos => write!(f, "cos"),
            Expr::Neg(c) => {
                write!(f, "-")?;
                write_child(f, c, precedence(c) < 3)
            }
            Expr::Add(l, r) => {
                write!(f, "{l}+")?;
                // The right operand re-associates left on reparse, so any
                // same-level operator there must keep its parentheses.
                write_child(f, r, precedence(r) <= 1)
            }
            Expr::Sub(l, r) => {
                write!(f, "{l}-")?;
                write_child(f, r, precedence(r) <= 1)
            }
            Expr::Mul(l, r) => {
                write_child(f, l, precedence(l) < 2)?;
                write!(f, "*")?;
                write_child(f, r, precedence(r) <= 2)
            }
            Expr::Div(l, r) => {
                write_child(f, l, precedence(l) < 2)?;
                write!(f, "/")?;
                write_child(f, r, precedence(r) <= 2)
            }
            Expr::Pow(b, k) => {
                write_child(f, b, precedence(b) < 5)?;
                write!(f, "^{k}")
            }
            Expr::Recip(e) => write!(f, "recip({e})"),
            Expr::Root(e, p) => write!(f, "root({e}, {p})"),
            Expr::Compose(a, b) => write!(f, "compose({a}, {b})"),
            Expr::Recenter(e, w) => write!(f, "recenter({e}, {w})"),
            Expr::Derive(e) => write!(f, "derive({e})"),
            Expr::Laurent(neg, pos) => {
                write!(f, "laurent(")?;
                for (k, e) in neg.iter().enumerate() {
                    if k > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{e}")?;
                }
                write!(f, ";")?;
                for (k, e) in pos.iter().enumerate() {
                    write!(f, "{}{e}", if k > 0 { ", " } else { " " })?;
                }
                write!(f, ")")
            }
        }
    }
}
