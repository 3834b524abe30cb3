//! Expression parser for exact field elements.
//!
//! Grammar:
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor)*
//! factor := '-'? atom ('^' int)?
//! atom   := int | 'lambda' | 'sqrt' '(' '-'? int ')' | '(' expr ')'
//! ```
//!
//! Evaluation lands in the tower `u(lambda) + v(lambda) * sqrt(d)` with a
//! single squarefree radicand per expression; the result is classified as a
//! rational, a quadratic number, a rational function or a quadratic
//! extension of the function field. Square parts of radicands are pulled
//! out during evaluation (`sqrt(12) = 2 sqrt(3)`), so the invariant
//! "d squarefree, not 0 or 1" holds by construction.

use crate::error::{Error, Result};
use crate::exact::{Field, QuadExt, QuadNumber, Rat, RatFunc, Ring, UniPoly};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use std::fmt;

/// Abstract syntax of the element grammar.
#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Int(BigInt),
    Lambda,
    Sqrt(BigInt),
    Neg(Box<Expr>),
    Pow(Box<Expr>, u32),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
}

// ---- lexer ----

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes: Vec<char> = src.chars().collect();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            _ if c.is_ascii_digit() => {
                let mut j = i;
                while j < bytes.len() && bytes[j].is_ascii_digit() {
                    j += 1;
                }
                let text: String = bytes[i..j].iter().collect();
                i = j;
                toks.push((
                    start,
                    Tok::Int(text.parse().expect("digit string parses")),
                ));
                continue;
            }
            _ if c.is_alphabetic() => {
                let mut j = i;
                while j < bytes.len() && bytes[j].is_alphanumeric() {
                    j += 1;
                }
                let text: String = bytes[i..j].iter().collect();
                i = j;
                toks.push((start, Tok::Ident(text)));
                continue;
            }
            _ => {
                return Err(Error::Parse {
                    pos: i,
                    msg: format!("unexpected character '{c}'"),
                })
            }
        };
        toks.push((start, tok));
        i += 1;
    }
    Ok(toks)
}

// ---- recursive descent ----

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn expect(&mut self, want: &Tok, what: &str) -> Result<()> {
        if self.peek() == Some(want) {
            self.pos += 1;
            Ok(())
        } else {
            Err(Error::Parse {
                pos: self.here(),
                msg: format!("expected {what}"),
            })
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = Expr::Add(Box::new(acc), Box::new(self.term()?));
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = Expr::Sub(Box::new(acc), Box::new(self.term()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    acc = Expr::Mul(Box::new(acc), Box::new(self.factor()?));
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    acc = Expr::Div(Box::new(acc), Box::new(self.factor()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Expr> {
        if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            let inner = self.factor()?;
            return Ok(Expr::Neg(Box::new(inner)));
        }
        let atom = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            let pos = self.here();
            match self.bump() {
                Some(Tok::Int(n)) => {
                    let e: u32 = n.try_into().map_err(|_| Error::Parse {
                        pos,
                        msg: "exponent too large".into(),
                    })?;
                    if e > 512 {
                        return Err(Error::Parse {
                            pos,
                            msg: "exponent exceeds the supported bound 512".into(),
                        });
                    }
                    return Ok(Expr::Pow(Box::new(atom), e));
                }
                _ => {
                    return Err(Error::Parse {
                        pos,
                        msg: "integer exponent expected after '^'".into(),
                    })
                }
            }
        }
        Ok(atom)
    }

    fn atom(&mut self) -> Result<Expr> {
        let pos = self.here();
        match self.bump() {
            Some(Tok::Int(n)) => Ok(Expr::Int(n)),
            Some(Tok::Ident(name)) if name == "lambda" => Ok(Expr::Lambda),
            Some(Tok::Ident(name)) if name == "sqrt" => {
                self.expect(&Tok::LParen, "'(' after sqrt")?;
                let neg = if self.peek() == Some(&Tok::Minus) {
                    self.pos += 1;
                    true
                } else {
                    false
                };
                let argpos = self.here();
                let n = match self.bump() {
                    Some(Tok::Int(n)) => n,
                    Some(Tok::Ident(id)) if id == "lambda" => {
                        return Err(Error::Parse {
                            pos: argpos,
                            msg: "sqrt of lambda is not supported; radicands are integers".into(),
                        })
                    }
                    _ => {
                        return Err(Error::Parse {
                            pos: argpos,
                            msg: "integer radicand expected in sqrt(...)".into(),
                        })
                    }
                };
                self.expect(&Tok::RParen, "')' closing sqrt")?;
                Ok(Expr::Sqrt(if neg { -n } else { n }))
            }
            Some(Tok::Ident(name)) => Err(Error::Parse {
                pos,
                msg: format!("unknown symbol '{name}' (only 'lambda' and 'sqrt' are defined)"),
            }),
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                self.expect(&Tok::RParen, "closing ')'")?;
                Ok(inner)
            }
            _ => Err(Error::Parse {
                pos,
                msg: "integer, 'lambda', 'sqrt' or '(' expected".into(),
            }),
        }
    }
}

/// Parses the grammar into an [`Expr`].
pub fn parse_expr(src: &str) -> Result<Expr> {
    let toks = lex(src)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: src.len(),
    };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse {
            pos: p.here(),
            msg: "trailing input after expression".into(),
        });
    }
    Ok(e)
}

// ---- tower evaluation ----

/// `u(lambda) + v(lambda) * sqrt(d)` with at most one radicand.
#[derive(Clone, Debug, PartialEq)]
struct Tower {
    u: RatFunc,
    v: RatFunc,
    d: Option<BigInt>,
}

impl Tower {
    fn rational(r: Rat) -> Self {
        Tower {
            u: RatFunc::from_rat(r),
            v: RatFunc::from_rat(Rat::zero()),
            d: None,
        }
    }

    fn merge_radicand(a: &Option<BigInt>, b: &Option<BigInt>) -> Result<Option<BigInt>> {
        match (a, b) {
            (None, x) | (x, None) => Ok(x.clone()),
            (Some(x), Some(y)) if x == y => Ok(Some(x.clone())),
            (Some(x), Some(y)) => Err(Error::Domain(format!(
                "mixed radicals unsupported: sqrt({x}) and sqrt({y}) in one expression"
            ))),
        }
    }

    fn d_ratfunc(&self) -> RatFunc {
        match &self.d {
            Some(d) => RatFunc::from_rat(Rat::new(d.clone(), BigInt::from(1)).expect("unit")),
            None => RatFunc::from_int(0),
        }
    }

    fn add(&self, rhs: &Self) -> Result<Self> {
        let d = Self::merge_radicand(&self.d, &rhs.d)?;
        Ok(Tower {
            u: self.u.add(&rhs.u),
            v: self.v.add(&rhs.v),
            d,
        })
    }

    fn neg(&self) -> Self {
        Tower {
            u: self.u.neg(),
            v: self.v.neg(),
            d: self.d.clone(),
        }
    }

    fn mul(&self, rhs: &Self) -> Result<Self> {
        let d = Self::merge_radicand(&self.d, &rhs.d)?;
        let dval = match &d {
            Some(n) => RatFunc::from_rat(Rat::new(n.clone(), BigInt::from(1)).expect("unit")),
            None => RatFunc::from_int(0),
        };
        // (u1 + v1 s)(u2 + v2 s) with s^2 = d
        let u = self.u.mul(&rhs.u).add(&self.v.mul(&rhs.v).mul(&dval));
        let v = self.u.mul(&rhs.v).add(&self.v.mul(&rhs.u));
        Ok(Tower { u, v, d })
    }

    fn is_zero(&self) -> bool {
        self.u.is_zero() && self.v.is_zero()
    }

    fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::NotInvertible("division by zero".into()));
        }
        let dval = self.d_ratfunc();
        let norm = self.u.mul(&self.u).sub(&self.v.mul(&self.v).mul(&dval));
        let ninv = norm
            .inv()
            .ok_or_else(|| Error::NotInvertible("zero norm in the quadratic tower".into()))?;
        Ok(Tower {
            u: self.u.mul(&ninv),
            v: self.v.neg().mul(&ninv),
            d: self.d.clone(),
        })
    }

    fn pow(&self, e: u32) -> Result<Self> {
        let mut acc = Tower::rational(Rat::one());
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }
}

/// Pulls the largest square divisor out of `n` by trial division:
/// `n = c^2 * d` with d squarefree (up to the factoring bound).
fn extract_square(n: &BigInt) -> (BigInt, BigInt) {
    let mut c = BigInt::from(1);
    let mut rest = n.abs();
    let mut p = BigInt::from(2);
    let bound = BigInt::from(1_000_000u32);
    while &p * &p <= rest && p <= bound {
        let sq = &p * &p;
        while (&rest % &sq).is_zero() {
            rest /= &sq;
            c *= &p;
        }
        p += 1;
    }
    let d = if n.is_negative() { -rest } else { rest };
    (c, d)
}

fn eval(expr: &Expr) -> Result<Tower> {
    match expr {
        Expr::Int(n) => Ok(Tower::rational(
            Rat::new(n.clone(), BigInt::from(1)).expect("unit denominator"),
        )),
        Expr::Lambda => Ok(Tower {
            u: RatFunc::var(),
            v: RatFunc::from_int(0),
            d: None,
        }),
        Expr::Sqrt(n) => {
            if n.is_zero() {
                return Ok(Tower::rational(Rat::zero()));
            }
            let (c, d) = extract_square(n);
            let c_rat = Rat::new(c, BigInt::from(1)).expect("unit denominator");
            if d == BigInt::from(1) {
                return Ok(Tower::rational(c_rat));
            }
            Ok(Tower {
                u: RatFunc::from_int(0),
                v: RatFunc::from_rat(c_rat),
                d: Some(d),
            })
        }
        Expr::Neg(e) => Ok(eval(e)?.neg()),
        Expr::Pow(e, k) => eval(e)?.pow(*k),
        Expr::Add(a, b) => eval(a)?.add(&eval(b)?),
        Expr::Sub(a, b) => eval(a)?.add(&eval(b)?.neg()),
        Expr::Mul(a, b) => eval(a)?.mul(&eval(b)?),
        Expr::Div(a, b) => eval(a)?.mul(&eval(b)?.inv()?),
    }
}

/// A parsed element, classified by the smallest field of the tower that
/// contains it.
#[derive(Clone, Debug, PartialEq)]
pub enum Element {
    /// An element of Q.
    Rational(Rat),
    /// An element of Q(sqrt(d)), not rational.
    Quadratic(QuadNumber),
    /// A non-constant element of Q(lambda).
    Symbolic(RatFunc),
    /// An element of Q(lambda)(sqrt(d)) outside both subfields.
    SymbolicQuadratic(QuadExt<RatFunc>),
}

impl Element {
    /// The field tag reported in JSON output.
    pub fn field_tag(&self) -> &'static str {
        match self {
            Element::Rational(_) => "rational",
            Element::Quadratic(_) => "quadratic",
            Element::Symbolic(_) => "rational-function",
            Element::SymbolicQuadratic(_) => "rational-function-quadratic",
        }
    }

    /// Canonical form; re-parses to the same element.
    pub fn canonical(&self) -> String {
        match self {
            Element::Rational(r) => r.to_string(),
            Element::Quadratic(q) => q.to_string(),
            Element::Symbolic(f) => f.to_string(),
            Element::SymbolicQuadratic(x) => {
                let d = x
                    .ext_constant()
                    .as_constant()
                    .expect("integer radicand context");
                format!(
                    "({})+({})*sqrt({})",
                    x.base_part(),
                    x.radical_part(),
                    d
                )
            }
        }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.canonical())
    }
}

/// Parses and evaluates an element of the coefficient tower.
pub fn parse_element(src: &str) -> Result<Element> {
    let tower = eval(&parse_expr(src)?)?;
    let u_const = tower.u.as_constant();
    let v_const = tower.v.as_constant();
    Ok(match (&tower.d, u_const, v_const) {
        (_, Some(u), Some(v)) if v.is_zero() => Element::Rational(u),
        (None, Some(u), _) => Element::Rational(u),
        (Some(d), Some(u), Some(v)) => Element::Quadratic(
            QuadNumber::new(u, v, d.clone()).expect("squarefree by extraction"),
        ),
        (None, _, _) => Element::Symbolic(tower.u),
        (Some(_), _, _) if tower.v.is_zero() => Element::Symbolic(tower.u),
        (Some(d), _, _) => {
            let d_rf = RatFunc::from_rat(Rat::new(d.clone(), BigInt::from(1)).expect("unit"));
            Element::SymbolicQuadratic(QuadExt::new(tower.u, tower.v, d_rf))
        }
    })
}

/// Renders a polynomial in the CLI's canonical style (used by reports).
pub fn poly_canonical(p: &UniPoly<Rat>, var: &str) -> String {
    struct V<'a>(&'a UniPoly<Rat>, &'a str);
    impl fmt::Display for V<'_> {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            self.0.fmt_with_var(f, self.1)
        }
    }
    format!("{}", V(p, var))
}
