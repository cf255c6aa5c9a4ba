//! A small expression language for elements of `U(W)` and module vectors.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' uint)? | '-' factor | '(' expr ')' ('^' uint)?
//! atom   := 'L' '[' int ']' | 'W' '[' int ']' | 'z' | 'w' | uint ('/' uint)?
//! ```
//!
//! `w` stands for the cyclic vector. It may only be the rightmost factor of a
//! product, and either every summand of an expression carries it (a vector
//! expression) or none does (an algebra expression).

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::algebra::Generator;
use crate::error::{Error, Result};
use crate::pbw::{multiply, UeaElement};
use crate::poly::CentralPoly;
use crate::whittaker::{act, ModuleVector, QuotientSpec, WhittakerType};
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Gen(Generator),
    /// The cyclic vector `w`.
    Cyclic,
    Num(Rational),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Pow(Box<Expr>, u32),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Algebra,
    Vector,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "line {}, column {}: {}",
            self.line, self.column, self.message
        )
    }
}

impl std::error::Error for ParseError {}

impl From<ParseError> for Error {
    fn from(e: ParseError) -> Self {
        Error::Expr(e.to_string())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    L,
    W,
    Z,
    Cyclic,
    Int(BigInt),
    Decimal,
    LBracket,
    RBracket,
    LParen,
    RParen,
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    End,
}

impl Tok {
    fn describe(&self) -> &'static str {
        match self {
            Tok::L | Tok::W | Tok::Z | Tok::Cyclic => "a letter",
            Tok::Int(_) | Tok::Decimal => "a number",
            Tok::LBracket => "'['",
            Tok::RBracket => "']'",
            Tok::LParen => "'('",
            Tok::RParen => "')'",
            Tok::Plus => "'+'",
            Tok::Minus => "'-'",
            Tok::Star => "'*'",
            Tok::Caret => "'^'",
            Tok::Slash => "'/'",
            Tok::End => "end of input",
        }
    }
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn lex(src: &str) -> std::result::Result<Vec<Token>, ParseError> {
    let mut out = Vec::new();
    let mut chars = src.chars().peekable();
    let (mut line, mut column) = (1, 1);
    while let Some(&c) = chars.peek() {
        let (l, col) = (line, column);
        let mut bump = |chars: &mut std::iter::Peekable<std::str::Chars>| {
            let c = chars.next();
            if c == Some('\n') {
                line += 1;
                column = 1;
            } else {
                column += 1;
            }
        };
        if c.is_whitespace() {
            bump(&mut chars);
            continue;
        }
        let tok = if c.is_ascii_digit() {
            let mut digits = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                digits.push(d);
                bump(&mut chars);
            }
            if chars.peek() == Some(&'.') {
                bump(&mut chars);
                while chars.peek().is_some_and(char::is_ascii_digit) {
                    bump(&mut chars);
                }
                Tok::Decimal
            } else {
                Tok::Int(digits.parse().expect("ascii digits"))
            }
        } else {
            let t = match c {
                'L' => Tok::L,
                'W' => Tok::W,
                'z' => Tok::Z,
                'w' => Tok::Cyclic,
                '[' => Tok::LBracket,
                ']' => Tok::RBracket,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                '+' => Tok::Plus,
                '-' => Tok::Minus,
                '*' => Tok::Star,
                '^' => Tok::Caret,
                '/' => Tok::Slash,
                other => {
                    return Err(ParseError {
                        line: l,
                        column: col,
                        message: format!("unexpected character '{other}'"),
                    })
                }
            };
            bump(&mut chars);
            t
        };
        out.push(Token {
            tok,
            line: l,
            column: col,
        });
    }
    out.push(Token {
        tok: Tok::End,
        line,
        column,
    });
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn next(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if t.tok != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn error<T>(
        &self,
        at: &Token,
        message: impl Into<String>,
    ) -> std::result::Result<T, ParseError> {
        Err(ParseError {
            line: at.line,
            column: at.column,
            message: message.into(),
        })
    }

    fn expect(&mut self, tok: Tok) -> std::result::Result<(), ParseError> {
        let t = self.next();
        if t.tok == tok {
            Ok(())
        } else {
            self.error(
                &t,
                format!("expected {}, found {}", tok.describe(), t.tok.describe()),
            )
        }
    }

    fn expr(&mut self) -> std::result::Result<(Expr, Kind), ParseError> {
        let (mut lhs, kind) = self.term()?;
        loop {
            let op = self.peek().clone();
            let sub = match op.tok {
                Tok::Plus => false,
                Tok::Minus => true,
                _ => return Ok((lhs, kind)),
            };
            self.next();
            let (rhs, k) = self.term()?;
            if k != kind {
                return self.error(&op, "misplaced w: every summand must end in w, or none");
            }
            lhs = if sub {
                Expr::Sub(Box::new(lhs), Box::new(rhs))
            } else {
                Expr::Add(Box::new(lhs), Box::new(rhs))
            };
        }
    }

    fn term(&mut self) -> std::result::Result<(Expr, Kind), ParseError> {
        let (mut lhs, mut kind) = self.factor()?;
        while self.peek().tok == Tok::Star {
            let op = self.next();
            if kind == Kind::Vector {
                return self.error(&op, "misplaced w: w must be the rightmost factor");
            }
            let (rhs, k) = self.factor()?;
            lhs = Expr::Mul(Box::new(lhs), Box::new(rhs));
            kind = k;
        }
        Ok((lhs, kind))
    }

    fn factor(&mut self) -> std::result::Result<(Expr, Kind), ParseError> {
        if self.peek().tok == Tok::Minus {
            self.next();
            let (e, k) = self.factor()?;
            return Ok((Expr::Neg(Box::new(e)), k));
        }
        let (base, kind) = if self.peek().tok == Tok::LParen {
            self.next();
            let inner = self.expr()?;
            self.expect(Tok::RParen)?;
            inner
        } else {
            self.atom()?
        };
        if self.peek().tok != Tok::Caret {
            return Ok((base, kind));
        }
        let caret = self.next();
        if kind == Kind::Vector {
            return self.error(&caret, "misplaced w: a vector cannot be raised to a power");
        }
        let t = self.next();
        match t.tok.clone() {
            Tok::Int(n) => match u32::try_from(n) {
                Ok(k) => Ok((Expr::Pow(Box::new(base), k), kind)),
                Err(_) => self.error(&t, "exponent too large"),
            },
            Tok::Minus => self.error(&t, "negative exponent"),
            _ => self.error(&t, "non-negative integer exponent expected"),
        }
    }

    fn index(&mut self) -> std::result::Result<i64, ParseError> {
        self.expect(Tok::LBracket)?;
        let negative = self.peek().tok == Tok::Minus;
        if negative {
            self.next();
        }
        let t = self.next();
        let Tok::Int(n) = t.tok.clone() else {
            return self.error(&t, "integer index expected");
        };
        let n = if negative { -n } else { n };
        let Ok(n) = i64::try_from(n) else {
            return self.error(&t, "index out of range");
        };
        self.expect(Tok::RBracket)?;
        Ok(n)
    }

    fn atom(&mut self) -> std::result::Result<(Expr, Kind), ParseError> {
        let t = self.next();
        let e = match t.tok.clone() {
            Tok::L => Expr::Gen(Generator::L(self.index()?)),
            Tok::W => Expr::Gen(Generator::W(self.index()?)),
            Tok::Z => Expr::Gen(Generator::Z),
            Tok::Cyclic => return Ok((Expr::Cyclic, Kind::Vector)),
            Tok::Int(n) => {
                if self.peek().tok != Tok::Slash {
                    Expr::Num(Rational::from_integer(n))
                } else {
                    self.next();
                    let d = self.next();
                    match d.tok {
                        Tok::Int(m) if !m.is_zero() => Expr::Num(Rational::new(n, m)),
                        Tok::Int(_) => return self.error(&d, "zero denominator"),
                        _ => return self.error(&d, "integer denominator expected"),
                    }
                }
            }
            Tok::Decimal => return self.error(&t, "decimal literals are not supported; write a/b"),
            other => return self.error(&t, format!("unexpected {}", other.describe())),
        };
        Ok((e, Kind::Algebra))
    }
}

/// Parses an expression, returning its AST and whether it is a vector
/// expression.
pub fn parse_kind(src: &str) -> std::result::Result<(Expr, Kind), ParseError> {
    let mut p = Parser {
        tokens: lex(src)?,
        pos: 0,
    };
    let out = p.expr()?;
    let t = p.peek().clone();
    if t.tok != Tok::End {
        return p.error(&t, format!("unexpected {}", t.tok.describe()));
    }
    Ok(out)
}

pub fn parse(src: &str) -> std::result::Result<Expr, ParseError> {
    parse_kind(src).map(|(e, _)| e)
}

impl Expr {
    pub fn kind(&self) -> Kind {
        match self {
            Expr::Cyclic => Kind::Vector,
            Expr::Gen(_) | Expr::Num(_) | Expr::Pow(..) => Kind::Algebra,
            Expr::Add(a, _) | Expr::Sub(a, _) => a.kind(),
            Expr::Mul(_, b) => b.kind(),
            Expr::Neg(a) => a.kind(),
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Mul(..) => 2,
            Expr::Neg(_) => 3,
            Expr::Num(r) if r.is_negative() => 3,
            Expr::Pow(..) => 4,
            _ => 5,
        }
    }

    fn write_at(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        if self.precedence() < min {
            write!(f, "(")?;
            self.write_at(f, 0)?;
            return write!(f, ")");
        }
        match self {
            Expr::Gen(g) => write!(f, "{g}"),
            Expr::Cyclic => write!(f, "w"),
            Expr::Num(r) => write!(f, "{r}"),
            Expr::Add(a, b) | Expr::Sub(a, b) => {
                a.write_at(f, 1)?;
                write!(
                    f,
                    " {} ",
                    if matches!(self, Expr::Add(..)) {
                        '+'
                    } else {
                        '-'
                    }
                )?;
                b.write_at(f, 2)
            }
            Expr::Mul(a, b) => {
                a.write_at(f, 2)?;
                write!(f, "*")?;
                b.write_at(f, 3)
            }
            Expr::Neg(a) => {
                write!(f, "-")?;
                a.write_at(f, 3)
            }
            Expr::Pow(a, k) => {
                a.write_at(f, 5)?;
                write!(f, "^{k}")
            }
        }
    }
}

/// Renders with the fewest parentheses that parse back to the same tree.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_at(f, 0)
    }
}

/// Value of an expression: an element of `U(W)` or a module vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Algebra(UeaElement),
    Vector(ModuleVector),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Algebra(u) => write!(f, "{u}"),
            Value::Vector(v) => write!(f, "{v}"),
        }
    }
}

/// Normal form of an algebra expression.
pub fn eval_algebra(e: &Expr) -> Result<UeaElement> {
    Ok(match e {
        Expr::Gen(g) => UeaElement::generator(*g),
        Expr::Num(r) => UeaElement::rational(r.clone()),
        Expr::Cyclic => return Err(Error::Expr("w in an algebra expression".into())),
        Expr::Add(a, b) => eval_algebra(a)?.add(&eval_algebra(b)?),
        Expr::Sub(a, b) => eval_algebra(a)?.sub(&eval_algebra(b)?),
        Expr::Mul(a, b) => multiply(&eval_algebra(a)?, &eval_algebra(b)?),
        Expr::Neg(a) => eval_algebra(a)?.scale(&CentralPoly::from_int(-1)),
        Expr::Pow(a, k) => {
            let base = eval_algebra(a)?;
            let mut acc = UeaElement::one();
            for _ in 0..*k {
                acc = multiply(&acc, &base);
            }
            acc
        }
    })
}

/// Value of a vector expression in `M_φ` or `M_φ/pM_φ`.
pub fn eval_vector(e: &Expr, phi: &WhittakerType, spec: &QuotientSpec) -> Result<ModuleVector> {
    Ok(match e {
        Expr::Cyclic => ModuleVector::cyclic(spec),
        Expr::Add(a, b) => eval_vector(a, phi, spec)?.add(&eval_vector(b, phi, spec)?),
        Expr::Sub(a, b) => eval_vector(a, phi, spec)?.sub(&eval_vector(b, phi, spec)?),
        Expr::Mul(a, b) => act(&eval_algebra(a)?, &eval_vector(b, phi, spec)?, None, phi).0,
        Expr::Neg(a) => eval_vector(a, phi, spec)?.scale(&CentralPoly::from_int(-1)),
        _ => return Err(Error::Expr("vector expression must end in w".into())),
    })
}

pub fn eval(e: &Expr, phi: &WhittakerType, spec: &QuotientSpec) -> Result<Value> {
    match e.kind() {
        Kind::Algebra => eval_algebra(e).map(Value::Algebra),
        Kind::Vector => eval_vector(e, phi, spec).map(Value::Vector),
    }
}

/// Parses a quotient such as `(z-1)^2*(z+3)`; `universal` (or `M`) is `M_φ`.
pub fn parse_quotient(src: &str) -> Result<QuotientSpec> {
    let trimmed = src.trim();
    if trimmed.eq_ignore_ascii_case("universal") || trimmed == "M" {
        return Ok(QuotientSpec::Universal);
    }
    let e = parse(trimmed)?;
    let mut factors = Vec::new();
    flatten_product(&e, &mut factors);
    let mut roots = Vec::new();
    for f in factors {
        let (base, a) = match f {
            Expr::Pow(b, a) => (&**b, *a),
            other => (other, 1),
        };
        let value = eval_algebra(base)?;
        let root = match value.terms().collect::<Vec<_>>().as_slice() {
            [(m, c)] if m.factors().is_empty() && c.degree() == Some(1) && c.coeff(1).is_one() => {
                -c.coeff(0)
            }
            _ => {
                return Err(Error::InvalidQuotient(format!(
                    "factor {base} is not of the form z - r"
                )))
            }
        };
        if a > 0 {
            roots.push((root, a));
        }
    }
    QuotientSpec::quotient(roots)
}

fn flatten_product<'a>(e: &'a Expr, out: &mut Vec<&'a Expr>) {
    match e {
        Expr::Mul(a, b) => {
            flatten_product(a, out);
            flatten_product(b, out);
        }
        other => out.push(other),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratio;

    fn g(g: Generator) -> Box<Expr> {
        Box::new(Expr::Gen(g))
    }

    #[test]
    fn parse_examples() {
        assert_eq!(
            parse("L[-1]^2 * W[0]").unwrap(),
            Expr::Mul(
                Box::new(Expr::Pow(g(Generator::L(-1)), 2)),
                g(Generator::W(0))
            )
        );
        let (e, k) = parse_kind("(W[1] - 3/2) * w").unwrap();
        assert_eq!(k, Kind::Vector);
        assert_eq!(
            e,
            Expr::Mul(
                Box::new(Expr::Sub(
                    g(Generator::W(1)),
                    Box::new(Expr::Num(ratio(3, 2)))
                )),
                Box::new(Expr::Cyclic)
            )
        );
        let err = parse("L[1.5]").unwrap_err();
        assert_eq!((err.line, err.column), (1, 3));
        assert_eq!(err.message, "integer index expected");
    }

    #[test]
    fn errors() {
        for (src, msg, col) in [
            ("w*L[1]", "misplaced w: w must be the rightmost factor", 2),
            (
                "L[1] + w",
                "misplaced w: every summand must end in w, or none",
                6,
            ),
            ("L[1]^-2", "negative exponent", 6),
            ("L[x]", "unexpected character 'x'", 3),
            ("(L[1]", "expected ')', found end of input", 6),
            ("3/0", "zero denominator", 3),
        ] {
            let e = parse(src).unwrap_err();
            assert_eq!((e.message.as_str(), e.column), (msg, col), "{src}");
        }
        let e = parse("L[1]\n  * ]").unwrap_err();
        assert_eq!((e.line, e.column), (2, 5));
    }

    #[test]
    fn eval_examples() {
        let phi = WhittakerType::from_ints(1, 1, 1, 1).unwrap();
        let u = QuotientSpec::Universal;
        let v = eval(&parse("W[1]*L[-1]").unwrap(), &phi, &u).unwrap();
        assert_eq!(v.to_string(), "-2*W[0] + L[-1]*W[1]");
        let v = eval(&parse("W[1]*L[-1]*w").unwrap(), &phi, &u).unwrap();
        assert_eq!(v.to_string(), "-2*W[0]*w + L[-1]*w");
        let v = eval(&parse("z*w").unwrap(), &phi, &u).unwrap();
        assert_eq!(v.to_string(), "z*w");
    }

    #[test]
    fn quotients() {
        let q = parse_quotient("(z-1)^2*(z+3)").unwrap();
        assert_eq!(
            q,
            QuotientSpec::quotient(vec![(ratio(1, 1), 2), (ratio(-3, 1), 1)]).unwrap()
        );
        assert_eq!(
            parse_quotient("z - 1/2").unwrap(),
            QuotientSpec::single(ratio(1, 2), 1).unwrap()
        );
        assert_eq!(
            parse_quotient("universal").unwrap(),
            QuotientSpec::Universal
        );
        assert!(parse_quotient("2*z - 1").is_err());
        assert!(parse_quotient("(z-1)*(z-1)").is_err());
    }

    #[test]
    fn render_round_trip() {
        for src in [
            "-L[1]^2",
            "(-L[1])^2",
            "L[1] - (W[2] - z)",
            "L[1]*(W[2]*z)",
            "--3/2",
            "(3/2)^2*w",
        ] {
            let e = parse(src).unwrap();
            assert_eq!(parse(&e.to_string()).unwrap(), e, "{src} -> {e}");
        }
    }
}
