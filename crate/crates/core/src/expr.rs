//! Polynomial expressions over octonion-valued variables.
//!
//! Grammar:
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := IDENT | NUMBER | '(' expr ')' | '-' factor | 'conj' '(' expr ')'
//! ```
//!
//! `*` groups to the left, so `a*b*c` is `(a*b)*c`. Octonion multiplication
//! is not associative; write the parentheses you mean.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::algebra::{multiply, AlgebraId};
use crate::error::{Error, ParseError, Result};
use crate::octonion::Octonion;

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Var(String),
    Const(f64),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Conj(Box<Expr>),
}

// Builder names mirror the operators they construct.
#[allow(clippy::should_implement_trait)]
impl Expr {
    pub fn var(name: &str) -> Expr {
        Expr::Var(name.to_string())
    }

    pub fn add(l: Expr, r: Expr) -> Expr {
        Expr::Add(Box::new(l), Box::new(r))
    }

    pub fn sub(l: Expr, r: Expr) -> Expr {
        Expr::Sub(Box::new(l), Box::new(r))
    }

    pub fn mul(l: Expr, r: Expr) -> Expr {
        Expr::Mul(Box::new(l), Box::new(r))
    }

    pub fn neg(x: Expr) -> Expr {
        Expr::Neg(Box::new(x))
    }

    pub fn conj(x: Expr) -> Expr {
        Expr::Conj(Box::new(x))
    }

    /// True if evaluating the expression performs an octonion product.
    pub fn has_product(&self) -> bool {
        match self {
            Expr::Var(_) | Expr::Const(_) => false,
            Expr::Mul(..) => true,
            Expr::Add(l, r) | Expr::Sub(l, r) => l.has_product() || r.has_product(),
            Expr::Neg(x) | Expr::Conj(x) => x.has_product(),
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 0,
            Expr::Mul(..) => 1,
            Expr::Neg(..) => 2,
            Expr::Var(_) | Expr::Const(_) | Expr::Conj(_) => 3,
        }
    }
}

fn write_operand(f: &mut fmt::Formatter<'_>, e: &Expr, min_prec: u8) -> fmt::Result {
    if e.precedence() < min_prec {
        write!(f, "({e})")
    } else {
        write!(f, "{e}")
    }
}

/// Canonical form: minimal parentheses under the grammar above.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Var(name) => f.write_str(name),
            Expr::Const(c) => write!(f, "{c}"),
            Expr::Add(l, r) => {
                write_operand(f, l, 0)?;
                f.write_str(" + ")?;
                write_operand(f, r, 1)
            }
            Expr::Sub(l, r) => {
                write_operand(f, l, 0)?;
                f.write_str(" - ")?;
                write_operand(f, r, 1)
            }
            Expr::Mul(l, r) => {
                write_operand(f, l, 1)?;
                f.write_str("*")?;
                write_operand(f, r, 2)
            }
            Expr::Neg(x) => {
                f.write_str("-")?;
                write_operand(f, x, 2)
            }
            Expr::Conj(x) => write!(f, "conj({x})"),
        }
    }
}

impl Serialize for Expr {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Ident(String),
    Number(f64),
    Plus,
    Minus,
    Star,
    LParen,
    RParen,
}

fn syntax(offset: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        offset,
        message: message.into(),
    }
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => out.push((start, Token::Plus)),
            b'-' => out.push((start, Token::Minus)),
            b'*' => out.push((start, Token::Star)),
            b'(' => out.push((start, Token::LParen)),
            b')' => out.push((start, Token::RParen)),
            b'0'..=b'9' | b'.' => {
                while i < bytes.len() && (bytes[i].is_ascii_digit() || bytes[i] == b'.') {
                    i += 1;
                }
                if i < bytes.len() && (bytes[i] == b'e' || bytes[i] == b'E') {
                    let mut j = i + 1;
                    if j < bytes.len() && (bytes[j] == b'+' || bytes[j] == b'-') {
                        j += 1;
                    }
                    if j < bytes.len() && bytes[j].is_ascii_digit() {
                        while j < bytes.len() && bytes[j].is_ascii_digit() {
                            j += 1;
                        }
                        i = j;
                    }
                }
                let lit = &text[start..i];
                let value: f64 = lit
                    .parse()
                    .map_err(|_| syntax(start, format!("malformed number `{lit}`")))?;
                if !value.is_finite() {
                    return Err(syntax(start, format!("number `{lit}` is out of range")));
                }
                out.push((start, Token::Number(value)));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Token::Ident(text[start..i].to_string())));
                continue;
            }
            _ => {
                let ch = text[start..].chars().next().unwrap_or('?');
                return Err(syntax(start, format!("unexpected character `{ch}`")));
            }
        }
        i += 1;
    }
    Ok(out)
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

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn expect(&mut self, want: Token, what: &str) -> Result<(), ParseError> {
        let offset = self.offset();
        match self.bump() {
            Some(t) if t == want => Ok(()),
            _ => Err(syntax(offset, format!("expected {what}"))),
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.bump();
                    lhs = Expr::add(lhs, self.term()?);
                }
                Some(Token::Minus) => {
                    self.bump();
                    lhs = Expr::sub(lhs, self.term()?);
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.factor()?;
        while let Some(Token::Star) = self.peek() {
            self.bump();
            lhs = Expr::mul(lhs, self.factor()?);
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        let offset = self.offset();
        match self.bump() {
            Some(Token::Ident(name)) if name == "conj" => {
                self.expect(Token::LParen, "`(` after `conj`")?;
                let inner = self.expr()?;
                self.expect(Token::RParen, "`)`")?;
                Ok(Expr::conj(inner))
            }
            Some(Token::Ident(name)) => Ok(Expr::Var(name)),
            Some(Token::Number(v)) => Ok(Expr::Const(v)),
            Some(Token::LParen) => {
                let inner = self.expr()?;
                self.expect(Token::RParen, "`)`")?;
                Ok(inner)
            }
            Some(Token::Minus) => Ok(Expr::neg(self.factor()?)),
            Some(_) => Err(syntax(
                offset,
                "expected a variable, number, `(`, `-` or `conj`",
            )),
            None => Err(syntax(offset, "unexpected end of expression")),
        }
    }
}

pub fn parse(text: &str) -> Result<Expr, ParseError> {
    let tokens = tokenize(text)?;
    if tokens.is_empty() {
        return Err(ParseError::EmptyInput);
    }
    let mut p = Parser {
        tokens,
        pos: 0,
        end: text.len(),
    };
    let e = p.expr()?;
    if p.pos < p.tokens.len() {
        return Err(syntax(p.offset(), "unexpected trailing input"));
    }
    Ok(e)
}

impl std::str::FromStr for Expr {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        parse(s)
    }
}

/// Variable names in order of first occurrence.
pub fn free_vars(e: &Expr) -> Vec<String> {
    fn walk(e: &Expr, out: &mut Vec<String>) {
        match e {
            Expr::Var(name) => {
                if !out.iter().any(|n| n == name) {
                    out.push(name.clone());
                }
            }
            Expr::Const(_) => {}
            Expr::Add(l, r) | Expr::Sub(l, r) | Expr::Mul(l, r) => {
                walk(l, out);
                walk(r, out);
            }
            Expr::Neg(x) | Expr::Conj(x) => walk(x, out),
        }
    }
    let mut out = Vec::new();
    walk(e, &mut out);
    out
}

/// Binding of variable names to octonion values.
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
#[serde(transparent)]
pub struct Assignment(BTreeMap<String, Octonion>);

impl Assignment {
    pub fn new() -> Self {
        Self::default()
    }

    /// Binds `name`; fails if it is already bound.
    pub fn bind(&mut self, name: impl Into<String>, value: Octonion) -> Result<()> {
        let name = name.into();
        if self.0.contains_key(&name) {
            return Err(Error::PreconditionViolation(format!(
                "variable `{name}` bound twice"
            )));
        }
        self.0.insert(name, value);
        Ok(())
    }

    pub fn with(mut self, name: &str, value: Octonion) -> Self {
        self.0.insert(name.to_string(), value);
        self
    }

    pub fn get(&self, name: &str) -> Option<&Octonion> {
        self.0.get(name)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&String, &Octonion)> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl FromIterator<(String, Octonion)> for Assignment {
    fn from_iter<I: IntoIterator<Item = (String, Octonion)>>(iter: I) -> Self {
        Assignment(iter.into_iter().collect())
    }
}

/// Evaluates `e` with every product taken in rule `n`.
pub fn eval(e: &Expr, env: &Assignment, n: AlgebraId) -> Result<Octonion> {
    Ok(match e {
        Expr::Var(name) => *env
            .get(name)
            .ok_or_else(|| Error::UnboundVariable(name.clone()))?,
        Expr::Const(c) => Octonion::real(*c),
        Expr::Add(l, r) => eval(l, env, n)? + eval(r, env, n)?,
        Expr::Sub(l, r) => eval(l, env, n)? - eval(r, env, n)?,
        Expr::Neg(x) => -eval(x, env, n)?,
        Expr::Mul(l, r) => multiply(&eval(l, env, n)?, &eval(r, env, n)?, n),
        Expr::Conj(x) => eval(x, env, n)?.conjugate(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(n: &str) -> Expr {
        Expr::var(n)
    }

    #[test]
    fn parses_grammar_examples() {
        assert_eq!(
            parse("a*b + b*a").unwrap(),
            Expr::add(Expr::mul(v("a"), v("b")), Expr::mul(v("b"), v("a")))
        );
        assert_eq!(
            parse("a*b*c").unwrap(),
            Expr::mul(Expr::mul(v("a"), v("b")), v("c"))
        );
        assert_ne!(parse("a*b*c").unwrap(), parse("a*(b*c)").unwrap());
        assert_eq!(
            parse("conj(a)*a").unwrap(),
            Expr::mul(Expr::conj(v("a")), v("a"))
        );
    }

    #[test]
    fn unary_minus_binds_to_factor() {
        assert_eq!(parse("-a*b").unwrap(), Expr::mul(Expr::neg(v("a")), v("b")));
        assert_eq!(parse("--a").unwrap(), Expr::neg(Expr::neg(v("a"))));
        assert_eq!(
            parse("a - b - c").unwrap(),
            Expr::sub(Expr::sub(v("a"), v("b")), v("c"))
        );
    }

    #[test]
    fn numbers() {
        assert_eq!(parse("2.5").unwrap(), Expr::Const(2.5));
        assert_eq!(parse("1e3").unwrap(), Expr::Const(1000.0));
        assert_eq!(parse(".5").unwrap(), Expr::Const(0.5));
        assert!(matches!(
            parse("1.2.3"),
            Err(ParseError::Syntax { offset: 0, .. })
        ));
    }

    #[test]
    fn syntax_errors_carry_offsets() {
        assert_eq!(parse(""), Err(ParseError::EmptyInput));
        assert_eq!(parse("   "), Err(ParseError::EmptyInput));
        assert!(matches!(
            parse("a + "),
            Err(ParseError::Syntax { offset: 4, .. })
        ));
        assert!(matches!(
            parse("a $ b"),
            Err(ParseError::Syntax { offset: 2, .. })
        ));
        assert!(matches!(
            parse("(a*b"),
            Err(ParseError::Syntax { offset: 4, .. })
        ));
        assert!(matches!(
            parse("a b"),
            Err(ParseError::Syntax { offset: 2, .. })
        ));
        assert!(matches!(
            parse("conj a"),
            Err(ParseError::Syntax { offset: 5, .. })
        ));
        assert!(matches!(
            parse("a*)"),
            Err(ParseError::Syntax { offset: 2, .. })
        ));
    }

    #[test]
    fn canonical_print() {
        for (src, printed) in [
            ("a*b + b*a", "a*b + b*a"),
            ("(a*b)*c", "a*b*c"),
            ("a*(b*c)", "a*(b*c)"),
            ("a - (b - c)", "a - (b - c)"),
            ("-(a*b)", "-(a*b)"),
            ("-a*b", "-a*b"),
            ("conj(x + y)*2", "conj(x + y)*2"),
            ("(a + b)*(c - d)", "(a + b)*(c - d)"),
        ] {
            let e = parse(src).unwrap();
            assert_eq!(e.to_string(), printed);
            assert_eq!(parse(&e.to_string()).unwrap(), e);
        }
    }

    #[test]
    fn free_variable_order() {
        assert_eq!(free_vars(&parse("a*b + b*a").unwrap()), ["a", "b"]);
        assert!(free_vars(&parse("3").unwrap()).is_empty());
        assert_eq!(free_vars(&parse("conj(x)*y + x").unwrap()), ["x", "y"]);
    }

    #[test]
    fn eval_examples() {
        let e = parse("a*b").unwrap();
        let env = Assignment::new()
            .with("a", Octonion::basis(1))
            .with("b", Octonion::basis(2));
        let n0 = AlgebraId::new(0).unwrap();
        let n4 = AlgebraId::new(4).unwrap();
        assert_eq!(eval(&e, &env, n0).unwrap(), Octonion::basis(3));
        assert_eq!(eval(&e, &env, n4).unwrap(), -Octonion::basis(3));

        let sum = parse("a+b").unwrap();
        let first = eval(&sum, &env, n0).unwrap();
        for n in AlgebraId::all() {
            assert_eq!(eval(&sum, &env, n).unwrap(), first);
        }
    }

    #[test]
    fn eval_reports_unbound_name() {
        let e = parse("a*zeta").unwrap();
        let env = Assignment::new().with("a", Octonion::ONE);
        assert_eq!(
            eval(&e, &env, AlgebraId::REFERENCE),
            Err(Error::UnboundVariable("zeta".into()))
        );
    }

    #[test]
    fn constant_scaling_is_linear() {
        let a = Octonion::from_ints([1, -2, 3, 0, 5, -7, 1, 2]);
        let env = Assignment::new().with("a", a);
        for n in AlgebraId::all() {
            assert_eq!(eval(&parse("2*a").unwrap(), &env, n).unwrap(), a.scale(2.0));
        }
    }

    #[test]
    fn bind_twice_fails() {
        let mut env = Assignment::new();
        env.bind("a", Octonion::ONE).unwrap();
        assert!(env.bind("a", Octonion::ONE).is_err());
    }
}
