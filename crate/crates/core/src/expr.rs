//! Ternary expressions: AST, text syntax and evaluation.
//!
//! Grammar, tightest binding first:
//!
//! ```text
//! expr    := gamma
//! gamma   := beta  ( '@' beta  )*        GAMMA  (⋄), left-associative
//! beta    := alpha ( '+' alpha )*        BETA   (+), left-associative
//! alpha   := unary ( '*' unary )*        ALPHA  (×), left-associative
//! unary   := '~' unary | atom            ROTATE (overline)
//! atom    := '0' | '1' | '2' | ident | '(' expr ')'
//! ident   := letter ( letter | digit | '_' )*
//! ```
//!
//! Whitespace between tokens is ignored.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::algebra::{self, Dyadic, Trit};

/// An immutable ternary expression tree.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Expr {
    Const(Trit),
    Var(String),
    Rotate(Box<Expr>),
    Alpha(Box<Expr>, Box<Expr>),
    Beta(Box<Expr>, Box<Expr>),
    Gamma(Box<Expr>, Box<Expr>),
}

impl Expr {
    pub fn constant(t: Trit) -> Expr {
        Expr::Const(t)
    }

    pub fn var(name: impl Into<String>) -> Expr {
        Expr::Var(name.into())
    }

    pub fn rotate(e: Expr) -> Expr {
        Expr::Rotate(Box::new(e))
    }

    /// `times` nested rotations of `e`.
    pub fn rotate_n(mut e: Expr, times: usize) -> Expr {
        for _ in 0..times {
            e = Expr::rotate(e);
        }
        e
    }

    pub fn alpha(l: Expr, r: Expr) -> Expr {
        Expr::Alpha(Box::new(l), Box::new(r))
    }

    pub fn beta(l: Expr, r: Expr) -> Expr {
        Expr::Beta(Box::new(l), Box::new(r))
    }

    pub fn gamma(l: Expr, r: Expr) -> Expr {
        Expr::Gamma(Box::new(l), Box::new(r))
    }

    pub fn dyadic(op: Dyadic, l: Expr, r: Expr) -> Expr {
        match op {
            Dyadic::Alpha => Expr::alpha(l, r),
            Dyadic::Beta => Expr::beta(l, r),
            Dyadic::Gamma => Expr::gamma(l, r),
        }
    }

    /// Splits a dyadic node into its operator and operands.
    pub fn as_dyadic(&self) -> Option<(Dyadic, &Expr, &Expr)> {
        match self {
            Expr::Alpha(l, r) => Some((Dyadic::Alpha, l, r)),
            Expr::Beta(l, r) => Some((Dyadic::Beta, l, r)),
            Expr::Gamma(l, r) => Some((Dyadic::Gamma, l, r)),
            _ => None,
        }
    }

    pub fn is_operator(&self) -> bool {
        !matches!(self, Expr::Const(_) | Expr::Var(_))
    }

    /// Replaces every variable by the expression `f` returns for it.
    pub fn substitute(&self, f: &impl Fn(&str) -> Option<Expr>) -> Expr {
        match self {
            Expr::Const(_) => self.clone(),
            Expr::Var(name) => f(name).unwrap_or_else(|| self.clone()),
            Expr::Rotate(c) => Expr::rotate(c.substitute(f)),
            Expr::Alpha(l, r) => Expr::alpha(l.substitute(f), r.substitute(f)),
            Expr::Beta(l, r) => Expr::beta(l.substitute(f), r.substitute(f)),
            Expr::Gamma(l, r) => Expr::gamma(l.substitute(f), r.substitute(f)),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Expr::Const(_) | Expr::Var(_) => 0,
            Expr::Rotate(c) => 1 + c.depth(),
            Expr::Alpha(l, r) | Expr::Beta(l, r) | Expr::Gamma(l, r) => {
                1 + l.depth().max(r.depth())
            }
        }
    }
}

/// Variable bindings for evaluation.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Assignment(BTreeMap<String, Trit>);

impl Assignment {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set(&mut self, name: impl Into<String>, value: Trit) -> &mut Self {
        self.0.insert(name.into(), value);
        self
    }

    pub fn with(mut self, name: impl Into<String>, value: Trit) -> Self {
        self.set(name, value);
        self
    }

    pub fn get(&self, name: &str) -> Option<Trit> {
        self.0.get(name).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, Trit)> {
        self.0.iter().map(|(k, v)| (k.as_str(), *v))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl<S: Into<String>> FromIterator<(S, Trit)> for Assignment {
    fn from_iter<I: IntoIterator<Item = (S, Trit)>>(iter: I) -> Self {
        Assignment(iter.into_iter().map(|(k, v)| (k.into(), v)).collect())
    }
}

/// Renders as `x=0 y=2`.
impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (k, v)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{k}={v}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty expression")]
    Empty,
    #[error("unexpected character {found:?} at byte {offset}")]
    InvalidChar { offset: usize, found: char },
    #[error("expected {expected} at byte {offset}, found {found}")]
    Unexpected {
        offset: usize,
        expected: &'static str,
        found: String,
    },
}

impl ParseError {
    pub fn offset(&self) -> Option<usize> {
        match self {
            ParseError::Empty => None,
            ParseError::InvalidChar { offset, .. } | ParseError::Unexpected { offset, .. } => {
                Some(*offset)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("variable `{0}` is not bound")]
pub struct UnboundVariable(pub String);

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Const(Trit),
    Ident(String),
    Tilde,
    Op(Dyadic),
    LParen,
    RParen,
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Const(t) => write!(f, "`{t}`"),
            Token::Ident(s) => write!(f, "`{s}`"),
            Token::Tilde => f.write_str("`~`"),
            Token::Op(op) => write!(f, "`{}`", op.token()),
            Token::LParen => f.write_str("`(`"),
            Token::RParen => f.write_str("`)`"),
        }
    }
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>, ParseError> {
    let mut tokens = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some((offset, c)) = chars.next() {
        let token = match c {
            c if c.is_whitespace() => continue,
            '~' => Token::Tilde,
            '*' => Token::Op(Dyadic::Alpha),
            '+' => Token::Op(Dyadic::Beta),
            '@' => Token::Op(Dyadic::Gamma),
            '(' => Token::LParen,
            ')' => Token::RParen,
            '0' | '1' | '2' => Token::Const(Trit::from_char(c).unwrap()),
            c if c.is_ascii_alphabetic() => {
                let mut end = offset + c.len_utf8();
                while let Some(&(i, n)) = chars.peek() {
                    if n.is_ascii_alphanumeric() || n == '_' {
                        end = i + n.len_utf8();
                        chars.next();
                    } else {
                        break;
                    }
                }
                Token::Ident(text[offset..end].to_string())
            }
            found => return Err(ParseError::InvalidChar { offset, found }),
        };
        tokens.push((offset, token));
    }
    Ok(tokens)
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn found(&self) -> String {
        self.peek()
            .map_or_else(|| "end of input".to_string(), |t| t.to_string())
    }

    fn unexpected(&self, expected: &'static str) -> ParseError {
        ParseError::Unexpected {
            offset: self.offset(),
            expected,
            found: self.found(),
        }
    }

    // Precedence climbing over the three left-associative levels:
    // GAMMA (loosest), BETA, ALPHA.
    fn binary(&mut self, level: usize) -> Result<Expr, ParseError> {
        const LEVELS: [Dyadic; 3] = [Dyadic::Gamma, Dyadic::Beta, Dyadic::Alpha];
        let Some(&op) = LEVELS.get(level) else {
            return self.unary();
        };
        let mut lhs = self.binary(level + 1)?;
        while self.peek() == Some(&Token::Op(op)) {
            self.pos += 1;
            let rhs = self.binary(level + 1)?;
            lhs = Expr::dyadic(op, lhs, rhs);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if self.peek() == Some(&Token::Tilde) {
            self.pos += 1;
            return Ok(Expr::rotate(self.unary()?));
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        match self.peek().cloned() {
            Some(Token::Const(t)) => {
                self.pos += 1;
                Ok(Expr::Const(t))
            }
            Some(Token::Ident(name)) => {
                self.pos += 1;
                Ok(Expr::Var(name))
            }
            Some(Token::LParen) => {
                self.pos += 1;
                let inner = self.binary(0)?;
                if self.peek() != Some(&Token::RParen) {
                    return Err(self.unexpected("`)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            _ => Err(self.unexpected("constant, variable, `~` or `(`")),
        }
    }
}

/// Parses the text syntax described in the module docs.
pub fn parse(text: &str) -> Result<Expr, ParseError> {
    let tokens = tokenize(text)?;
    if tokens.is_empty() {
        return Err(ParseError::Empty);
    }
    let mut parser = Parser {
        tokens,
        pos: 0,
        end: text.len(),
    };
    let e = parser.binary(0)?;
    if parser.pos != parser.tokens.len() {
        return Err(parser.unexpected("operator or end of input"));
    }
    Ok(e)
}

impl FromStr for Expr {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse(s)
    }
}

fn level(e: &Expr) -> u8 {
    match e {
        Expr::Gamma(..) => 1,
        Expr::Beta(..) => 2,
        Expr::Alpha(..) => 3,
        Expr::Rotate(_) => 4,
        Expr::Const(_) | Expr::Var(_) => 5,
    }
}

fn write_expr(e: &Expr, out: &mut String) {
    match e {
        Expr::Const(t) => out.push(t.to_char()),
        Expr::Var(name) => out.push_str(name),
        Expr::Rotate(c) => {
            out.push('~');
            write_operand(c, level(c) < 4, out);
        }
        Expr::Alpha(l, r) | Expr::Beta(l, r) | Expr::Gamma(l, r) => {
            let own = level(e);
            write_operand(l, level(l) < own, out);
            out.push(e.as_dyadic().unwrap().0.token());
            // Left-associative: an equal-precedence right operand needs parentheses.
            write_operand(r, level(r) <= own, out);
        }
    }
}

fn write_operand(e: &Expr, parens: bool, out: &mut String) {
    if parens {
        out.push('(');
        write_expr(e, out);
        out.push(')');
    } else {
        write_expr(e, out);
    }
}

/// Minimal-parentheses text; `parse(&pretty_print(e)) == e`.
pub fn pretty_print(e: &Expr) -> String {
    let mut out = String::new();
    write_expr(e, &mut out);
    out
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&pretty_print(self))
    }
}

pub fn evaluate(e: &Expr, env: &Assignment) -> Result<Trit, UnboundVariable> {
    Ok(match e {
        Expr::Const(t) => *t,
        Expr::Var(name) => env.get(name).ok_or_else(|| UnboundVariable(name.clone()))?,
        Expr::Rotate(c) => algebra::rotate(evaluate(c, env)?),
        Expr::Alpha(l, r) => algebra::alpha(evaluate(l, env)?, evaluate(r, env)?),
        Expr::Beta(l, r) => algebra::beta(evaluate(l, env)?, evaluate(r, env)?),
        Expr::Gamma(l, r) => algebra::gamma(evaluate(l, env)?, evaluate(r, env)?),
    })
}

fn collect_vars<'a>(e: &'a Expr, out: &mut BTreeSet<&'a str>) {
    match e {
        Expr::Const(_) => {}
        Expr::Var(name) => {
            out.insert(name);
        }
        Expr::Rotate(c) => collect_vars(c, out),
        Expr::Alpha(l, r) | Expr::Beta(l, r) | Expr::Gamma(l, r) => {
            collect_vars(l, out);
            collect_vars(r, out);
        }
    }
}

/// Distinct variable names, sorted.
pub fn free_vars(e: &Expr) -> Vec<String> {
    let mut set = BTreeSet::new();
    collect_vars(e, &mut set);
    set.into_iter().map(str::to_string).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Expr {
        parse(s).unwrap()
    }

    fn c(v: u8) -> Expr {
        Expr::Const(Trit::try_from(v).unwrap())
    }

    fn v(n: &str) -> Expr {
        Expr::var(n)
    }

    #[test]
    fn precedence() {
        let expected = Expr::gamma(
            Expr::beta(Expr::alpha(Expr::rotate(v("x")), c(1)), c(2)),
            v("y"),
        );
        assert_eq!(p("~x*1+2@y"), expected);
        assert_eq!(pretty_print(&expected), "~x*1+2@y");
    }

    #[test]
    fn parentheses() {
        let e = Expr::alpha(Expr::beta(v("x"), v("y")), c(1));
        assert_eq!(p("(x+y)*1"), e);
        assert_eq!(pretty_print(&e), "(x+y)*1");
        assert_eq!(pretty_print(&c(2)), "2");
        assert_eq!(p(" ( ( x ) ) "), v("x"));
    }

    #[test]
    fn left_associative() {
        assert_eq!(p("a*b*c"), Expr::alpha(Expr::alpha(v("a"), v("b")), v("c")));
        let right = Expr::gamma(v("a"), Expr::gamma(v("b"), v("c")));
        assert_eq!(pretty_print(&right), "a@(b@c)");
        assert_eq!(p("a@(b@c)"), right);
    }

    #[test]
    fn rotate_of_compound() {
        let e = Expr::rotate(Expr::alpha(v("x"), v("y")));
        assert_eq!(pretty_print(&e), "~(x*y)");
        assert_eq!(p("~~x"), Expr::rotate(Expr::rotate(v("x"))));
    }

    #[test]
    fn syntax_errors() {
        assert_eq!(
            p_err("x**y"),
            ParseError::Unexpected {
                offset: 2,
                expected: "constant, variable, `~` or `(`",
                found: "`*`".into()
            }
        );
        assert_eq!(p_err(""), ParseError::Empty);
        assert_eq!(p_err("   "), ParseError::Empty);
        assert_eq!(p_err("x+3").offset(), Some(2));
        assert_eq!(p_err("(x+y").offset(), Some(4));
        assert_eq!(p_err("x y").offset(), Some(2));
        assert_eq!(p_err("12").offset(), Some(1));
        assert!(matches!(
            p_err("_x"),
            ParseError::InvalidChar { offset: 0, .. }
        ));
    }

    fn p_err(s: &str) -> ParseError {
        parse(s).unwrap_err()
    }

    #[test]
    fn identifiers() {
        assert_eq!(p("a_1b"), v("a_1b"));
        assert_eq!(free_vars(&p("x+y*x")), vec!["x", "y"]);
        assert!(free_vars(&p("2")).is_empty());
        assert_eq!(free_vars(&p("b@a")), vec!["a", "b"]);
    }

    #[test]
    fn evaluation() {
        let empty = Assignment::new();
        assert_eq!(evaluate(&p("~0"), &empty).unwrap(), Trit::TWO);
        // alpha(1,2)=1, beta(1,0)=1, gamma(1,1)=1
        assert_eq!(evaluate(&p("1*2+0@1"), &empty).unwrap(), Trit::ONE);
        let env = Assignment::new().with("x", Trit::TWO);
        assert_eq!(evaluate(&p("x"), &env).unwrap(), Trit::TWO);
        // beta(1, alpha(0,0)) = 1, whereas alpha(beta(1,0),0) would be 0
        assert_eq!(evaluate(&p("1+0*0"), &empty).unwrap(), Trit::ONE);
        assert_eq!(evaluate(&p("(1+0)*0"), &empty).unwrap(), Trit::ZERO);
    }

    #[test]
    fn unbound_variable() {
        let env = Assignment::new().with("x", Trit::ZERO);
        assert_eq!(evaluate(&p("x*y"), &env), Err(UnboundVariable("y".into())));
    }

    #[test]
    fn assignment_display() {
        let env: Assignment = [("y", Trit::TWO), ("x", Trit::ZERO)].into_iter().collect();
        assert_eq!(env.to_string(), "x=0 y=2");
    }
}
