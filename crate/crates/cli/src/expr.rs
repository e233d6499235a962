//! Recursive-descent parser for function expressions.
//!
//! Grammar (whitespace-insensitive):
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := primary ('*' 'x')?
//! primary := rational | 'x' | name
//!          | 'max' '(' expr (',' expr)* ')'
//!          | 'shift' '(' expr ',' expr ')'      -- second argument constant
//!          | 'e2' '(' expr ',' expr ')'         -- window bounds, constant
//!          | '(' expr ')' | '-' primary
//! ```
//!
//! Rational literals are `p`, `p/q`, or exact decimals like `2.5`; the `*`
//! in `3*x` is required. Names refer to earlier definitions in the scenario
//! document.

use std::fmt;

use num_bigint::BigInt;
use tropnev_core::plfun::e2_on_window;
use tropnev_core::scalar::Rat;
use tropnev_core::PLFunction;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyntaxError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl fmt::Display for SyntaxError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, col {}: {}", self.line, self.col, self.message)
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Number(Rat),
    Name(String),
    LParen,
    RParen,
    Comma,
    Plus,
    Minus,
    Star,
}

struct Lexer<'a> {
    src: &'a str,
    line: usize,
    col_base: usize,
}

fn err(line: usize, col: usize, message: impl Into<String>) -> SyntaxError {
    SyntaxError { line, col, message: message.into() }
}

impl<'a> Lexer<'a> {
    fn tokens(&self) -> Result<Vec<(Tok, usize)>, SyntaxError> {
        let bytes = self.src.as_bytes();
        let mut out = Vec::new();
        let mut i = 0;
        while i < bytes.len() {
            let c = bytes[i] as char;
            let col = self.col_base + i + 1;
            match c {
                ' ' | '\t' => i += 1,
                '(' => {
                    out.push((Tok::LParen, col));
                    i += 1;
                }
                ')' => {
                    out.push((Tok::RParen, col));
                    i += 1;
                }
                ',' => {
                    out.push((Tok::Comma, col));
                    i += 1;
                }
                '+' => {
                    out.push((Tok::Plus, col));
                    i += 1;
                }
                '-' => {
                    out.push((Tok::Minus, col));
                    i += 1;
                }
                '*' => {
                    out.push((Tok::Star, col));
                    i += 1;
                }
                '0'..='9' => {
                    let start = i;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    if i < bytes.len() && bytes[i] == b'/' {
                        i += 1;
                        let dstart = i;
                        while i < bytes.len() && bytes[i].is_ascii_digit() {
                            i += 1;
                        }
                        if i == dstart {
                            return Err(err(self.line, col, "missing denominator"));
                        }
                        let p: BigInt = self.src[start..dstart - 1].parse().unwrap();
                        let q: BigInt = self.src[dstart..i].parse().unwrap();
                        if q == BigInt::from(0) {
                            return Err(err(self.line, col, "zero denominator"));
                        }
                        out.push((Tok::Number(Rat::new(p, q)), col));
                    } else if i < bytes.len() && bytes[i] == b'.' {
                        i += 1;
                        let dstart = i;
                        while i < bytes.len() && bytes[i].is_ascii_digit() {
                            i += 1;
                        }
                        if i == dstart {
                            return Err(err(self.line, col, "missing decimal digits"));
                        }
                        let whole: BigInt = self.src[start..dstart - 1].parse().unwrap();
                        let frac_str = &self.src[dstart..i];
                        let frac: BigInt = frac_str.parse().unwrap();
                        let scale = BigInt::from(10).pow(frac_str.len() as u32);
                        out.push((
                            (Tok::Number(
                                Rat::from_integer(whole) + Rat::new(frac, scale),
                            )),
                            col,
                        ));
                    } else {
                        let p: BigInt = self.src[start..i].parse().unwrap();
                        out.push((Tok::Number(Rat::from_integer(p)), col));
                    }
                }
                'a'..='z' | 'A'..='Z' | '_' => {
                    let start = i;
                    while i < bytes.len()
                        && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_')
                    {
                        i += 1;
                    }
                    out.push((Tok::Name(self.src[start..i].to_string()), col));
                }
                other => {
                    return Err(err(self.line, col, format!("unexpected character '{}'", other)))
                }
            }
        }
        Ok(out)
    }
}

/// Parsed expression tree; evaluation happens against a name environment.
#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Const(Rat),
    X,
    ScaledX(Rat),
    Name(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Max(Vec<Expr>),
    Shift(Box<Expr>, Box<Expr>),
    E2(Box<Expr>, Box<Expr>),
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    line: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn col(&self) -> usize {
        self.toks
            .get(self.pos)
            .or_else(|| self.toks.last())
            .map(|(_, c)| *c)
            .unwrap_or(1)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _)| t.clone());
        self.pos += 1;
        t
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<(), SyntaxError> {
        let col = self.col();
        match self.bump() {
            Some(t) if t == want => Ok(()),
            _ => Err(err(self.line, col, format!("expected {}", what))),
        }
    }

    fn expr(&mut self) -> Result<Expr, SyntaxError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = Expr::Add(Box::new(acc), Box::new(self.term()?));
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = Expr::Sub(Box::new(acc), Box::new(self.term()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, SyntaxError> {
        let p = self.primary()?;
        if self.peek() == Some(&Tok::Star) {
            let col = self.col();
            self.bump();
            match self.bump() {
                Some(Tok::Name(n)) if n == "x" => match const_value(&p) {
                    Some(c) => Ok(Expr::ScaledX(c)),
                    None => Err(err(self.line, col, "only rational*x products are allowed")),
                },
                _ => Err(err(self.line, col, "expected x after '*'")),
            }
        } else {
            Ok(p)
        }
    }

    fn primary(&mut self) -> Result<Expr, SyntaxError> {
        let col = self.col();
        match self.bump() {
            Some(Tok::Number(r)) => Ok(Expr::Const(r)),
            Some(Tok::Minus) => Ok(Expr::Neg(Box::new(self.primary()?))),
            Some(Tok::LParen) => {
                let e = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(e)
            }
            Some(Tok::Name(n)) => match n.as_str() {
                "x" => Ok(Expr::X),
                "max" => {
                    self.expect(Tok::LParen, "'(' after max")?;
                    let mut args = vec![self.expr()?];
                    while self.peek() == Some(&Tok::Comma) {
                        self.bump();
                        args.push(self.expr()?);
                    }
                    self.expect(Tok::RParen, "')' closing max")?;
                    Ok(Expr::Max(args))
                }
                "shift" => {
                    self.expect(Tok::LParen, "'(' after shift")?;
                    let f = self.expr()?;
                    self.expect(Tok::Comma, "',' in shift")?;
                    let c = self.expr()?;
                    self.expect(Tok::RParen, "')' closing shift")?;
                    Ok(Expr::Shift(Box::new(f), Box::new(c)))
                }
                "e2" => {
                    self.expect(Tok::LParen, "'(' after e2")?;
                    let lo = self.expr()?;
                    self.expect(Tok::Comma, "',' in e2")?;
                    let hi = self.expr()?;
                    self.expect(Tok::RParen, "')' closing e2")?;
                    Ok(Expr::E2(Box::new(lo), Box::new(hi)))
                }
                _ => Ok(Expr::Name(n)),
            },
            _ => Err(err(self.line, col, "expected expression")),
        }
    }
}

fn const_value(e: &Expr) -> Option<Rat> {
    match e {
        Expr::Const(r) => Some(r.clone()),
        Expr::Neg(inner) => const_value(inner).map(|r| -r),
        Expr::Add(a, b) => Some(const_value(a)? + const_value(b)?),
        Expr::Sub(a, b) => Some(const_value(a)? - const_value(b)?),
        _ => None,
    }
}

/// Parses one expression; `line` is used for error positions.
pub fn parse_expr(src: &str, line: usize) -> Result<Expr, SyntaxError> {
    let toks = Lexer { src, line, col_base: 0 }.tokens()?;
    if toks.is_empty() {
        return Err(err(line, 1, "empty expression"));
    }
    let mut parser = Parser { toks, pos: 0, line };
    let e = parser.expr()?;
    if parser.pos != parser.toks.len() {
        return Err(err(line, parser.col(), "trailing input after expression"));
    }
    Ok(e)
}

#[derive(Clone, Debug, PartialEq)]
pub enum EvalError {
    UnknownName { name: String, line: usize },
    NotConstant { what: String, line: usize },
    Pl { message: String, line: usize },
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvalError::UnknownName { name, line } => {
                write!(f, "line {}: unknown name '{}'", line, name)
            }
            EvalError::NotConstant { what, line } => {
                write!(f, "line {}: {} must be a rational constant", line, what)
            }
            EvalError::Pl { message, line } => write!(f, "line {}: {}", line, message),
        }
    }
}

/// Evaluates an expression to a canonical piecewise-linear function.
pub fn eval_expr<F>(e: &Expr, env: &F, line: usize) -> Result<PLFunction, EvalError>
where
    F: Fn(&str) -> Option<PLFunction>,
{
    let pl = |message: String| EvalError::Pl { message, line };
    match e {
        Expr::Const(r) => Ok(PLFunction::constant(r.clone())),
        Expr::X => Ok(PLFunction::identity()),
        Expr::ScaledX(c) => Ok(PLFunction::affine(c.clone(), Rat::from_integer(0.into()))),
        Expr::Name(n) => {
            env(n).ok_or_else(|| EvalError::UnknownName { name: n.clone(), line })
        }
        Expr::Neg(inner) => {
            let f = eval_expr(inner, env, line)?;
            PLFunction::constant(Rat::from_integer(0.into()))
                .sub_combine(&f)
                .map_err(|e| pl(e.to_string()))
        }
        Expr::Add(a, b) => {
            let fa = eval_expr(a, env, line)?;
            let fb = eval_expr(b, env, line)?;
            fa.add_combine(&fb).map_err(|e| pl(e.to_string()))
        }
        Expr::Sub(a, b) => {
            let fa = eval_expr(a, env, line)?;
            let fb = eval_expr(b, env, line)?;
            fa.sub_combine(&fb).map_err(|e| pl(e.to_string()))
        }
        Expr::Max(args) => {
            let mut acc = PLFunction::Bottom;
            for a in args {
                let f = eval_expr(a, env, line)?;
                acc = acc.max_combine(&f).map_err(|e| pl(e.to_string()))?;
            }
            Ok(acc)
        }
        Expr::Shift(f, c) => {
            let c = const_value(c).ok_or_else(|| EvalError::NotConstant {
                what: "shift amount".to_string(),
                line,
            })?;
            Ok(eval_expr(f, env, line)?.shift(&c))
        }
        Expr::E2(lo, hi) => {
            let lo = const_value(lo).ok_or_else(|| EvalError::NotConstant {
                what: "e2 window bound".to_string(),
                line,
            })?;
            let hi = const_value(hi).ok_or_else(|| EvalError::NotConstant {
                what: "e2 window bound".to_string(),
                line,
            })?;
            e2_on_window(lo, hi).map_err(|e| pl(e.to_string()))
        }
    }
}

/// Canonical rendering of an expression (used by the round-trip tests).
pub fn print_expr(e: &Expr) -> String {
    match e {
        Expr::Const(r) => format!("{}", r),
        Expr::X => "x".to_string(),
        Expr::ScaledX(c) => format!("{}*x", c),
        Expr::Name(n) => n.clone(),
        Expr::Neg(inner) => format!("-({})", print_expr(inner)),
        Expr::Add(a, b) => format!("{} + {}", print_expr(a), print_expr(b)),
        Expr::Sub(a, b) => format!("{} - ({})", print_expr(a), print_expr(b)),
        Expr::Max(args) => {
            let inner: Vec<String> = args.iter().map(print_expr).collect();
            format!("max({})", inner.join(", "))
        }
        Expr::Shift(f, c) => format!("shift({}, {})", print_expr(f), print_expr(c)),
        Expr::E2(lo, hi) => format!("e2({}, {})", print_expr(lo), print_expr(hi)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use tropnev_core::scalar::{rat, rat_int, TropScalar};

    fn no_env(_: &str) -> Option<PLFunction> {
        None
    }

    fn parse_eval(src: &str) -> PLFunction {
        eval_expr(&parse_expr(src, 1).unwrap(), &no_env, 1).unwrap()
    }

    #[test]
    fn tent_function() {
        let f = parse_eval("max(-1*x+1, 1, 1*x-1)");
        assert_eq!(f.eval(&rat_int(0)).unwrap(), TropScalar::from_int(1));
        assert_eq!(f.eval(&rat_int(3)).unwrap(), TropScalar::from_int(2));
        assert_eq!(f.roots().len(), 2);
    }

    #[test]
    fn ramp_and_rationals() {
        let f = parse_eval("max(0, x)");
        assert_eq!(f.eval(&rat_int(-5)).unwrap(), TropScalar::from_int(0));
        let g = parse_eval("max(1/2, 2.5*x)");
        assert_eq!(g.eval(&rat_int(1)).unwrap(), TropScalar::from_rat(rat(5, 2)));
        assert_eq!(g.eval(&rat_int(0)).unwrap(), TropScalar::from_rat(rat(1, 2)));
    }

    #[test]
    fn unclosed_paren_position() {
        let e = parse_expr("max(-1*x-12", 3).unwrap_err();
        assert_eq!(e.line, 3);
        assert!(e.message.contains("expected"), "{}", e);
    }

    #[test]
    fn shift_and_names() {
        let env = |n: &str| {
            if n == "f" {
                Some(PLFunction::identity())
            } else {
                None
            }
        };
        let e = parse_expr("shift(f, 1) - f", 1).unwrap();
        let g = eval_expr(&e, &env, 1).unwrap();
        assert_eq!(g, PLFunction::constant(rat_int(1)));
        let bad = eval_expr(&parse_expr("g + 1", 1).unwrap(), &env, 1).unwrap_err();
        assert!(matches!(bad, EvalError::UnknownName { .. }));
    }

    #[test]
    fn roundtrip_canonical() {
        for src in ["max(-1*x + 1, 1, 1*x - (1))", "shift(max(0, x), -1/2)", "e2(-4, 4)"] {
            let e = parse_expr(src, 1).unwrap();
            let printed = print_expr(&e);
            let again = parse_expr(&printed, 1).unwrap();
            assert_eq!(print_expr(&again), printed);
        }
    }
}
