//! The cycle-expression language.
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := [INT '*'] [scalar '*'] body
//! scalar := RAT | 'cbrt(' RAT ')' | scalar '*' scalar
//! body   := atom | '(' expr ')'
//! atom   := 'C1(' RAT ',' RAT ';' RAT ')' | 'C2(' RAT ';' RAT ',' RAT ')'
//!         | 'Gamma1' | 'Gamma2' | 'Gamma3' | 'GammaBar1' | 'GammaBar2'
//!         | 'GammaBar2Fixed' | 'Gamma3Fixed'
//!         | 'Q(' RAT ')' | 'Qtilde(' RAT ')' | 'QtildeFixed(' RAT ')'
//!         | 'Ca(' RAT ')' | 'CaFixed(' RAT ')'
//!         | 'D(' RAT ',' RAT ')' | 'DFixed(' RAT ',' RAT ')'
//!         | 'curve(' RF ',' RF ',' RF ')'
//! ```
//!
//! `RAT` is a signed integer or fraction and `RF` a rational function in `t`
//! built from rationals, `t`, `+ - * /`, integer powers `^` and parentheses.
//! A leading integer factor is the multiplicity; every further factor is part
//! of the star scale. Printing follows the same rule, so `parse(print(e))`
//! returns `e`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::arith::{Poly, RatFunc, Rational};
use crate::cycle::{catalog, CycleSum, ParamCurve};
use crate::error::{Error, Result};
use crate::radical::RadMonomial;

/// A catalog constructor or an explicit curve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Atom {
    C1(Rational, Rational, Rational),
    C2(Rational, Rational, Rational),
    Gamma1,
    Gamma2,
    Gamma3,
    GammaBar1,
    GammaBar2,
    GammaBar2Fixed,
    Gamma3Fixed,
    Q(Rational),
    Qtilde(Rational),
    QtildeFixed(Rational),
    Ca(Rational),
    CaFixed(Rational),
    D(Rational, Rational),
    DFixed(Rational, Rational),
    Curve(RatFunc, RatFunc, RatFunc),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Body {
    Atom(Atom),
    Group(CycleExpr),
}

/// `coeff · (scale * body)`; the sign of the term lives in `coeff`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub coeff: i64,
    pub scale: RadMonomial,
    pub body: Body,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleExpr {
    pub terms: Vec<Term>,
}

impl Atom {
    pub fn eval(&self) -> Result<CycleSum> {
        use Atom::*;
        match self {
            C1(a1, a2, b) => catalog::make_c1(a1, a2, b),
            C2(a, b1, b2) => catalog::make_c2(a, b1, b2),
            Gamma1 => Ok(catalog::gamma1()),
            Gamma2 => Ok(catalog::gamma2()),
            Gamma3 => Ok(catalog::gamma3()),
            GammaBar1 => Ok(catalog::gamma_bar1()),
            GammaBar2 => Ok(catalog::gamma_bar2()),
            GammaBar2Fixed => Ok(catalog::gamma_bar2_fixed()),
            Gamma3Fixed => Ok(catalog::gamma3_fixed()),
            Q(a) => catalog::q_cycle(a),
            Qtilde(a) => catalog::q_tilde(a),
            QtildeFixed(a) => catalog::q_tilde_fixed(a),
            Ca(a) => catalog::c_a(a),
            CaFixed(a) => catalog::c_a_fixed(a),
            D(a, b) => catalog::d_cycle(a, b),
            DFixed(a, b) => catalog::d_cycle_fixed(a, b),
            Curve(x, t1, t2) => Ok(CycleSum::from_curve(ParamCurve::new(x.clone(), t1.clone(), t2.clone())?)),
        }
    }
}

impl CycleExpr {
    /// Expands the expression into a formal sum of scaled curves.
    pub fn eval(&self) -> Result<CycleSum> {
        let mut out = CycleSum::zero();
        for term in &self.terms {
            let body = match &term.body {
                Body::Atom(a) => a.eval()?,
                Body::Group(e) => e.eval()?,
            };
            let body = if term.scale.is_one() { body } else { body.star(&term.scale)? };
            out.add_scaled(term.coeff, &body);
        }
        Ok(out)
    }
}

/// Parses and evaluates in one step.
pub fn eval_str(src: &str) -> Result<CycleSum> {
    parse(src)?.eval()
}

// ---------------------------------------------------------------------------
// Lexer

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
    End,
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    pos: usize,
}

fn syntax(pos: usize, msg: impl Into<String>) -> Error {
    Error::Syntax { pos, msg: msg.into() }
}

fn lex(src: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let mut chars = src.char_indices().peekable();
    while let Some(&(pos, c)) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
        } else if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&(_, d)) = chars.peek() {
                if !d.is_ascii_digit() {
                    break;
                }
                s.push(d);
                chars.next();
            }
            out.push(Token { tok: Tok::Int(s.parse().expect("digits")), pos });
        } else if c.is_ascii_alphabetic() {
            let mut s = String::new();
            while let Some(&(_, d)) = chars.peek() {
                if !d.is_ascii_alphanumeric() {
                    break;
                }
                s.push(d);
                chars.next();
            }
            out.push(Token { tok: Tok::Ident(s), pos });
        } else if "+-*/^(),;".contains(c) {
            out.push(Token { tok: Tok::Sym(c), pos });
            chars.next();
        } else if c == '.' {
            return Err(syntax(pos, "decimal numbers are not accepted; write an exact fraction"));
        } else {
            return Err(syntax(pos, format!("unexpected character '{c}'")));
        }
    }
    out.push(Token { tok: Tok::End, pos: src.len() });
    Ok(out)
}

// ---------------------------------------------------------------------------
// Parser

struct Parser {
    toks: Vec<Token>,
    i: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.i].tok
    }

    fn peek_at(&self, k: usize) -> &Tok {
        &self.toks[(self.i + k).min(self.toks.len() - 1)].tok
    }

    fn pos(&self) -> usize {
        self.toks[self.i].pos
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.i].tok.clone();
        if self.i + 1 < self.toks.len() {
            self.i += 1;
        }
        t
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == &Tok::Sym(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(syntax(self.pos(), format!("expected '{c}'")))
        }
    }

    fn expr(&mut self) -> Result<CycleExpr> {
        let mut terms = Vec::new();
        let mut sign = if self.eat('-') { -1 } else { 1 };
        loop {
            let mut term = self.term()?;
            term.coeff *= sign;
            terms.push(term);
            sign = if self.eat('+') {
                1
            } else if self.eat('-') {
                -1
            } else {
                break;
            };
        }
        Ok(CycleExpr { terms })
    }

    fn term(&mut self) -> Result<Term> {
        let mut coeff = 1i64;
        if let (Tok::Int(n), Tok::Sym('*')) = (self.peek().clone(), self.peek_at(1).clone()) {
            let pos = self.pos();
            coeff = n.to_i64().ok_or_else(|| syntax(pos, "multiplicity out of range"))?;
            self.bump();
            self.bump();
        }
        let mut scale = RadMonomial::one();
        while self.starts_scalar() {
            let f = self.scalar_factor()?;
            scale = scale.mul(&f);
            self.expect('*')?;
        }
        let body = if self.eat('(') {
            let e = self.expr()?;
            self.expect(')')?;
            Body::Group(e)
        } else {
            Body::Atom(self.atom()?)
        };
        Ok(Term { coeff, scale, body })
    }

    fn starts_scalar(&self) -> bool {
        match self.peek() {
            Tok::Int(_) | Tok::Sym('-') => true,
            Tok::Ident(s) => s == "cbrt",
            _ => false,
        }
    }

    fn scalar_factor(&mut self) -> Result<RadMonomial> {
        if matches!(self.peek(), Tok::Ident(s) if s == "cbrt") {
            self.bump();
            self.expect('(')?;
            let pos = self.pos();
            let r = self.rat()?;
            self.expect(')')?;
            return RadMonomial::cbrt(r).map_err(|_| syntax(pos, "cbrt of zero"));
        }
        let pos = self.pos();
        let r = self.rat()?;
        if r.is_zero() {
            return Err(syntax(pos, "star scale must be nonzero"));
        }
        Ok(RadMonomial::rational(r))
    }

    /// `['-'] INT ['/' INT]`.
    fn rat(&mut self) -> Result<Rational> {
        let neg = self.eat('-');
        let pos = self.pos();
        let Tok::Int(n) = self.bump() else {
            return Err(syntax(pos, "expected a rational number"));
        };
        let mut q = Rational::from_integer(n);
        if self.peek() == &Tok::Sym('/') && matches!(self.peek_at(1), Tok::Int(_)) {
            self.bump();
            let pos = self.pos();
            let Tok::Int(d) = self.bump() else { unreachable!() };
            if d.is_zero() {
                return Err(syntax(pos, "zero denominator"));
            }
            q /= Rational::from_integer(d);
        }
        Ok(if neg { -q } else { q })
    }

    fn args(&mut self, seps: &[char]) -> Result<Vec<Rational>> {
        self.expect('(')?;
        let mut out = vec![self.rat()?];
        for &c in seps {
            self.expect(c)?;
            out.push(self.rat()?);
        }
        self.expect(')')?;
        Ok(out)
    }

    fn atom(&mut self) -> Result<Atom> {
        let pos = self.pos();
        let Tok::Ident(name) = self.bump() else {
            return Err(syntax(pos, "expected a cycle name, curve(...) or '('"));
        };
        let one = |p: &mut Parser| -> Result<Rational> { Ok(p.args(&[])?.remove(0)) };
        let two = |p: &mut Parser| -> Result<(Rational, Rational)> {
            let mut v = p.args(&[','])?;
            let b = v.pop().expect("two");
            Ok((v.pop().expect("two"), b))
        };
        Ok(match name.as_str() {
            "C1" => {
                let v = self.args(&[',', ';'])?;
                Atom::C1(v[0].clone(), v[1].clone(), v[2].clone())
            }
            "C2" => {
                let v = self.args(&[';', ','])?;
                Atom::C2(v[0].clone(), v[1].clone(), v[2].clone())
            }
            "Gamma1" => Atom::Gamma1,
            "Gamma2" => Atom::Gamma2,
            "Gamma3" => Atom::Gamma3,
            "GammaBar1" => Atom::GammaBar1,
            "GammaBar2" => Atom::GammaBar2,
            "GammaBar2Fixed" => Atom::GammaBar2Fixed,
            "Gamma3Fixed" => Atom::Gamma3Fixed,
            "Q" => Atom::Q(one(self)?),
            "Qtilde" => Atom::Qtilde(one(self)?),
            "QtildeFixed" => Atom::QtildeFixed(one(self)?),
            "Ca" => Atom::Ca(one(self)?),
            "CaFixed" => Atom::CaFixed(one(self)?),
            "D" => {
                let (a, b) = two(self)?;
                Atom::D(a, b)
            }
            "DFixed" => {
                let (a, b) = two(self)?;
                Atom::DFixed(a, b)
            }
            "curve" => {
                self.expect('(')?;
                let x = self.rf_sum()?;
                self.expect(',')?;
                let t1 = self.rf_sum()?;
                self.expect(',')?;
                let t2 = self.rf_sum()?;
                self.expect(')')?;
                Atom::Curve(x, t1, t2)
            }
            other => return Err(syntax(pos, format!("unknown cycle '{other}'"))),
        })
    }

    // Rational functions in t.

    fn rf_sum(&mut self) -> Result<RatFunc> {
        let mut acc = self.rf_product()?;
        loop {
            if self.eat('+') {
                acc = &acc + &self.rf_product()?;
            } else if self.eat('-') {
                acc = &acc - &self.rf_product()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn rf_product(&mut self) -> Result<RatFunc> {
        let mut acc = self.rf_unary()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.rf_unary()?;
            } else if self.peek() == &Tok::Sym('/') {
                self.bump();
                let pos = self.pos();
                let d = self.rf_unary()?;
                acc = acc.checked_div(&d).map_err(|_| syntax(pos, "division by zero"))?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn rf_unary(&mut self) -> Result<RatFunc> {
        if self.eat('-') {
            return Ok(-&self.rf_unary()?);
        }
        if self.eat('+') {
            return self.rf_unary();
        }
        let base = self.rf_primary()?;
        if self.eat('^') {
            let neg = self.eat('-');
            let pos = self.pos();
            let Tok::Int(e) = self.bump() else {
                return Err(syntax(pos, "expected an integer exponent"));
            };
            let e = e.to_i32().ok_or_else(|| syntax(pos, "exponent out of range"))?;
            let e = if neg { -e } else { e };
            return base.pow(e).map_err(|_| syntax(pos, "negative power of zero"));
        }
        Ok(base)
    }

    fn rf_primary(&mut self) -> Result<RatFunc> {
        let pos = self.pos();
        match self.bump() {
            Tok::Int(n) => Ok(RatFunc::constant(Rational::from_integer(n))),
            Tok::Ident(s) if s == "t" => Ok(RatFunc::t()),
            Tok::Sym('(') => {
                let f = self.rf_sum()?;
                self.expect(')')?;
                Ok(f)
            }
            Tok::Ident(s) => Err(syntax(pos, format!("unknown symbol '{s}' in rational function"))),
            _ => Err(syntax(pos, "expected a rational function term")),
        }
    }
}

/// Parses a cycle expression.
pub fn parse(src: &str) -> Result<CycleExpr> {
    if src.trim().is_empty() {
        return Err(syntax(0, "empty expression"));
    }
    let mut p = Parser { toks: lex(src)?, i: 0 };
    let e = p.expr()?;
    if p.peek() != &Tok::End {
        return Err(syntax(p.pos(), "unexpected trailing input"));
    }
    Ok(e)
}

/// Parses a standalone rational function in `t`.
pub fn parse_ratfunc(src: &str) -> Result<RatFunc> {
    let mut p = Parser { toks: lex(src)?, i: 0 };
    let f = p.rf_sum()?;
    if p.peek() != &Tok::End {
        return Err(syntax(p.pos(), "unexpected trailing input"));
    }
    Ok(f)
}

// ---------------------------------------------------------------------------
// Printer

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Atom::*;
        match self {
            C1(a1, a2, b) => write!(f, "C1({a1},{a2};{b})"),
            C2(a, b1, b2) => write!(f, "C2({a};{b1},{b2})"),
            Gamma1 => f.write_str("Gamma1"),
            Gamma2 => f.write_str("Gamma2"),
            Gamma3 => f.write_str("Gamma3"),
            GammaBar1 => f.write_str("GammaBar1"),
            GammaBar2 => f.write_str("GammaBar2"),
            GammaBar2Fixed => f.write_str("GammaBar2Fixed"),
            Gamma3Fixed => f.write_str("Gamma3Fixed"),
            Q(a) => write!(f, "Q({a})"),
            Qtilde(a) => write!(f, "Qtilde({a})"),
            QtildeFixed(a) => write!(f, "QtildeFixed({a})"),
            Ca(a) => write!(f, "Ca({a})"),
            CaFixed(a) => write!(f, "CaFixed({a})"),
            D(a, b) => write!(f, "D({a},{b})"),
            DFixed(a, b) => write!(f, "DFixed({a},{b})"),
            Curve(x, t1, t2) => write!(f, "curve({x}, {t1}, {t2})"),
        }
    }
}

impl fmt::Display for CycleExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.terms.iter().enumerate() {
            match (i, t.coeff < 0) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if t.coeff.abs() != 1 {
                write!(f, "{}*", t.coeff.abs())?;
            }
            if !t.scale.is_one() {
                write!(f, "{}*", t.scale.to_dsl())?;
            }
            match &t.body {
                Body::Atom(a) => write!(f, "{a}")?,
                Body::Group(e) => write!(f, "({e})")?,
            }
        }
        Ok(())
    }
}

/// Converts an evaluated sum back into an expression of explicit curves.
pub fn from_cycle_sum(z: &CycleSum) -> CycleExpr {
    CycleExpr {
        terms: z
            .terms()
            .iter()
            .map(|t| Term {
                coeff: t.coeff,
                scale: t.scale.clone(),
                body: Body::Atom(Atom::Curve(t.curve.x().clone(), t.curve.t1().clone(), t.curve.t2().clone())),
            })
            .collect(),
    }
}

/// Parses a polynomial; used by tests and examples.
pub fn parse_poly(src: &str) -> Result<Poly> {
    let f = parse_ratfunc(src)?;
    if !f.den().is_constant() {
        return Err(syntax(0, "expected a polynomial"));
    }
    Ok(f.num().scale(&f.den().leading().recip()))
}
