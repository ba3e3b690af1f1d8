//! Telescoping identities among boundaries of correction terms.
//!
//! Each [`Equation`] states `∂(base + Σ kᵢ·Pᵢ) + Σ lhs points = Σ rhs
//! points` in `Z₀(◊₁)`. The lists below are transcribed as published, one
//! equation per displayed line, so that each can be confirmed or refuted
//! on its own. A point `(x, 1)` is read as zero, as in the source.

use std::fmt::Write as _;

use num_traits::{One, Zero};

use crate::arith::{int, rat, Rational};
use crate::boundary::{boundary, ZeroCycle};
use crate::cycle::catalog::{self, Piece};
use crate::cycle::CycleSum;
use crate::error::{Error, Result};

/// `coeff · (x, b)` with rational `x`.
pub type Pt = (i64, Rational, Rational);

#[derive(Clone, Debug)]
pub struct Equation {
    /// Name and value of a non-correction summand such as `Q(c)`.
    pub base: Option<(String, CycleSum)>,
    pub pieces: Vec<Piece>,
    pub lhs: Vec<Pt>,
    pub rhs: Vec<Pt>,
}

fn pt(k: i64, x: Rational, b: Rational) -> Pt {
    (k, x, b)
}

/// Collects points into a 0-cycle, reading `(x, 1)` as zero.
pub fn points(list: &[Pt]) -> Result<ZeroCycle> {
    let mut z = ZeroCycle::zero();
    for (k, x, b) in list {
        if b.is_one() {
            continue;
        }
        if b.is_zero() || x.is_zero() {
            return Err(Error::InvalidParameter(format!("point ({x}, {b}) is not in c0")));
        }
        z = &z + &ZeroCycle::rational_point(*k, x.clone(), b.clone());
    }
    Ok(z)
}

fn signed(out: &mut String, k: i64, body: &str) {
    let sign = if k < 0 { "-" } else { "+" };
    if out.is_empty() {
        if k < 0 {
            out.push('-');
        }
    } else {
        let _ = write!(out, " {sign} ");
    }
    if k.abs() != 1 {
        let _ = write!(out, "{}", k.abs());
    }
    out.push_str(body);
}

fn render_points(list: &[Pt]) -> String {
    let mut s = String::new();
    for (k, x, b) in list {
        signed(&mut s, *k, &format!("({x}, {b})"));
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

impl Equation {
    fn new(pieces: Vec<Piece>, lhs: Vec<Pt>, rhs: Vec<Pt>) -> Self {
        Equation {
            base: None,
            pieces,
            lhs,
            rhs,
        }
    }

    /// The equation as printed, e.g. `-∂C2(-1/6;4,-2) - (-6, -8) = ...`.
    pub fn label(&self) -> String {
        let mut s = String::new();
        if let Some((name, _)) = &self.base {
            let _ = write!(s, "∂({name}");
            for p in &self.pieces {
                signed(&mut s, p.coeff(), &p.to_string());
            }
            s.push(')');
        } else {
            for p in &self.pieces {
                signed(&mut s, p.coeff(), &format!("∂{p}"));
            }
        }
        for (k, x, b) in &self.lhs {
            signed(&mut s, *k, &format!("({x}, {b})"));
        }
        format!("{s} = {}", render_points(&self.rhs))
    }

    /// `(expected, computed)`: the right side, and the left side evaluated.
    pub fn evaluate(&self) -> Result<(ZeroCycle, ZeroCycle)> {
        let base = self.base.as_ref().map(|(_, z)| z.clone()).unwrap_or_default();
        let cycle = catalog::assemble(base, &self.pieces)?;
        let computed = &boundary(&cycle)? + &points(&self.lhs)?;
        Ok((points(&self.rhs)?, computed))
    }
}

/// The twelve steps reducing `∂Γ₂` to `(1, 2)`.
pub fn gamma2_chain() -> Vec<Equation> {
    let h = rat(1, 2);
    let s = rat(-1, 6);
    vec![
        Equation::new(
            vec![Piece::c2(-1, s.clone(), int(4), int(-2))],
            vec![pt(-1, int(-6), int(-8))],
            vec![pt(-1, int(-6), int(4)), pt(-1, int(-6), int(-2))],
        ),
        Equation::new(
            vec![Piece::c2(-1, s.clone(), int(-2), int(-2))],
            vec![pt(-1, int(-6), int(4))],
            vec![pt(-1, int(-6), int(-2)), pt(-1, int(-6), int(-2))],
        ),
        Equation::new(
            vec![Piece::c1(1, -h.clone(), h.clone(), rat(2, 3))],
            vec![pt(1, int(-2), rat(2, 3))],
            vec![pt(-1, int(2), rat(2, 3))],
        ),
        Equation::new(
            vec![Piece::c2(1, h.clone(), rat(2, 3), rat(3, 2))],
            vec![pt(-1, int(2), rat(2, 3))],
            vec![pt(1, int(2), rat(3, 2))],
        ),
        Equation::new(
            vec![Piece::c2(-3, s.clone(), int(2), int(-1))],
            vec![pt(-3, int(-6), int(-2))],
            vec![pt(-3, int(-6), int(2)), pt(-3, int(-6), int(-1))],
        ),
        Equation::new(
            vec![Piece::c1(3, rat(-1, 3), rat(-1, 3), int(-1))],
            vec![pt(-3, int(-6), int(-1))],
            vec![pt(-6, int(-3), int(-1))],
        ),
        Equation::new(
            vec![Piece::c2(-3, rat(-1, 3), int(-1), int(-1))],
            vec![pt(-6, int(-3), int(-1))],
            vec![],
        ),
        Equation::new(
            vec![Piece::c2(1, h.clone(), rat(4, 3), rat(3, 2))],
            vec![pt(1, int(2), rat(4, 3)), pt(1, int(2), rat(3, 2))],
            vec![pt(1, int(2), int(2))],
        ),
        Equation::new(
            vec![Piece::c1(-1, s.clone(), s.clone(), int(2))],
            vec![pt(-2, int(-6), int(2))],
            vec![pt(-1, int(-3), int(2))],
        ),
        Equation::new(
            vec![Piece::c1(-1, s, rat(-1, 3), int(2))],
            vec![pt(-1, int(-6), int(2)), pt(-1, int(-3), int(2))],
            vec![pt(-1, int(-2), int(2))],
        ),
        Equation::new(
            vec![Piece::c1(-1, -h.clone(), h.clone(), int(2))],
            vec![pt(-1, int(-2), int(2))],
            vec![pt(1, int(2), int(2))],
        ),
        Equation::new(
            vec![Piece::c1(1, h.clone(), h, int(2))],
            vec![pt(2, int(2), int(2))],
            vec![pt(1, int(1), int(2))],
        ),
    ]
}

/// The twelve steps reducing `∂Q(c)` to `-(2/(c-1), c-1) + (2/(c+1), c+1)`.
///
/// The third step prints its first `C₂` argument as `1 - 1/2`; the
/// surrounding steps only balance with `1 - 1/c`, which is used here.
pub fn q_chain(c: &Rational) -> Vec<Equation> {
    let one = Rational::one();
    let h = rat(1, 2);
    let q = rat(1, 4);
    let ci = c.recip();
    let hc = c / int(2);
    let two_c = int(2) / c;
    let cm = c - &one;
    let cp = c + &one;
    let ratio = c / &cm;
    vec![
        Equation::new(
            vec![Piece::c2(-1, -h.clone(), &one - c, cp.clone())],
            vec![pt(-1, int(-2), &one - c * c)],
            vec![pt(-1, int(-2), &one - c), pt(-1, int(-2), cp.clone())],
        ),
        Equation::new(
            vec![Piece::c1(1, hc.clone(), -hc.clone(), &one - &ci)],
            vec![pt(1, -two_c.clone(), &one - &ci)],
            vec![pt(-1, two_c.clone(), &one - &ci)],
        ),
        Equation::new(
            vec![Piece::c2(1, hc.clone(), &one - &ci, ratio.clone())],
            vec![pt(-1, two_c.clone(), &one - &ci)],
            vec![pt(1, two_c.clone(), ratio.clone())],
        ),
        Equation::new(
            vec![Piece::c2(1, hc.clone(), &one + &ci, ratio.clone())],
            vec![pt(1, two_c.clone(), &one + &ci), pt(1, two_c.clone(), ratio)],
            vec![pt(1, two_c.clone(), &cp / &cm)],
        ),
        Equation::new(
            vec![Piece::c2(1, hc.clone(), cp.clone(), cm.recip())],
            vec![pt(1, two_c.clone(), &cp / &cm)],
            vec![pt(1, two_c.clone(), cp.clone()), pt(1, two_c.clone(), cm.recip())],
        ),
        Equation::new(
            vec![Piece::c2(-1, hc.clone(), cm.recip(), cm.clone())],
            vec![pt(1, two_c.clone(), cm.recip())],
            vec![pt(-1, two_c.clone(), cm.clone())],
        ),
        Equation::new(
            vec![Piece::c1(1, -h.clone(), h.clone(), cp.clone())],
            vec![pt(-1, int(-2), cp.clone())],
            vec![pt(1, int(2), cp.clone())],
        ),
        Equation::new(
            vec![Piece::c2(1, -h.clone(), -one.clone(), cm.clone())],
            vec![pt(-1, int(-2), &one - c)],
            vec![pt(-1, int(-2), -one.clone()), pt(-1, int(-2), cm.clone())],
        ),
        Equation::new(
            vec![Piece::c1(1, -q.clone(), -q.clone(), -one.clone())],
            vec![pt(-1, int(-2), -one.clone())],
            vec![pt(-2, int(-4), -one.clone())],
        ),
        Equation::new(
            vec![Piece::c2(1, -q, -one.clone(), -one.clone())],
            vec![pt(-2, int(-4), -one.clone())],
            vec![],
        ),
        Equation::new(
            vec![Piece::c1(-1, -h.clone(), hc.clone(), cm.clone())],
            vec![pt(-1, int(-2), cm.clone()), pt(-1, two_c.clone(), cm.clone())],
            vec![pt(-1, int(2) / &cm, cm.clone())],
        ),
        Equation::new(
            vec![Piece::c1(1, h, hc, cp.clone())],
            vec![pt(1, int(2), cp.clone()), pt(1, two_c, cp.clone())],
            vec![pt(1, int(2) / &cp, cp)],
        ),
    ]
}

/// `Q′(c)`: all correction terms of [`q_chain`].
pub fn q_prime_pieces(c: &Rational) -> Vec<Piece> {
    q_chain(c).into_iter().flat_map(|e| e.pieces).collect()
}

/// `∂(Q(c) + Q′(c)) = -(2/(c-1), c-1) + (2/(c+1), c+1)`.
pub fn q_chain_sum(c: &Rational) -> Result<Equation> {
    let one = Rational::one();
    let (cm, cp) = (c - &one, c + &one);
    Ok(Equation {
        base: Some((format!("Q({c})"), catalog::q_cycle(c)?)),
        pieces: q_prime_pieces(c),
        lhs: vec![],
        rhs: vec![pt(-1, int(2) / &cm, cm), pt(1, int(2) / &cp, cp)],
    })
}

/// The same after `c = 1 - 2a`: `-(-1/a, -2a) + (1/(1-a), 2(1-a))`.
pub fn q_chain_substituted(a: &Rational) -> Result<Equation> {
    let one = Rational::one();
    let c = &one - int(2) * a;
    let mut eq = q_chain_sum(&c)?;
    eq.rhs = vec![
        pt(-1, -a.recip(), -(int(2) * a)),
        pt(1, (&one - a).recip(), int(2) * (&one - a)),
    ];
    Ok(eq)
}

/// The seven steps from `∂(Q(1-2a) + Q′(1-2a))` to the claimed `∂Q̃(a)`.
pub fn q_tilde_chain(a: &Rational) -> Vec<Equation> {
    let one = Rational::one();
    let ai = a.recip();
    let b = &one - a;
    let bi = b.recip();
    let m2a = -(int(2) * a);
    vec![
        Equation::new(
            vec![Piece::c1(-1, -a.clone(), a.clone(), m2a.clone())],
            vec![pt(-1, -ai.clone(), m2a.clone())],
            vec![pt(1, ai.clone(), m2a.clone())],
        ),
        Equation::new(
            vec![Piece::c2(1, a.clone(), a.clone(), int(-2))],
            vec![pt(1, ai.clone(), m2a.clone())],
            vec![pt(1, ai.clone(), a.clone()), pt(1, ai.clone(), int(-2))],
        ),
        Equation::new(
            vec![Piece::c2(1, b.clone(), b.clone(), int(2))],
            vec![pt(1, bi.clone(), int(2) * &b)],
            vec![pt(1, bi.clone(), b.clone()), pt(1, bi.clone(), int(2))],
        ),
        Equation::new(
            vec![Piece::c2(1, a.clone(), int(2), int(-1))],
            vec![pt(1, ai.clone(), int(-2))],
            vec![pt(1, ai.clone(), int(2)), pt(1, ai.clone(), int(-1))],
        ),
        Equation::new(
            vec![Piece::c1(1, a / int(2), a / int(2), int(-1))],
            vec![pt(1, ai.clone(), int(-1))],
            vec![pt(2, int(2) / a, int(-1))],
        ),
        Equation::new(
            vec![Piece::c2(-1, a / int(2), int(-1), int(-1))],
            vec![pt(2, int(2) / a, int(-1))],
            vec![],
        ),
        Equation::new(
            vec![Piece::c1(1, a.clone(), b, int(2))],
            vec![pt(1, ai, int(2)), pt(1, bi, int(2))],
            vec![pt(1, int(1), int(2))],
        ),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels_read_like_the_source() {
        let eqs = gamma2_chain();
        assert_eq!(eqs.len(), 12);
        assert_eq!(
            eqs[0].label(),
            "-∂C2(-1/6;4,-2) - (-6, -8) = -(-6, 4) - (-6, -2)"
        );
        assert_eq!(eqs[6].label(), "-3∂C2(-1/3;-1,-1) - 6(-3, -1) = 0");
    }

    #[test]
    fn first_gamma2_step_holds() {
        let (want, got) = gamma2_chain()[0].evaluate().unwrap();
        assert_eq!(want, got);
    }

    #[test]
    fn sixth_gamma2_step_fails() {
        let (want, got) = gamma2_chain()[5].evaluate().unwrap();
        assert_ne!(want, got);
    }

    #[test]
    fn chains_have_expected_lengths() {
        let a = rat(1, 3);
        assert_eq!(q_chain(&(Rational::one() - int(2) * &a)).len(), 12);
        assert_eq!(q_tilde_chain(&a).len(), 7);
        assert_eq!(q_prime_pieces(&a).len(), 12);
    }
}
