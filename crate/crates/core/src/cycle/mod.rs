//! Parametrized curves in `◊₂`, formal cycle sums with star scaling, and the
//! named catalog.

pub mod catalog;

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::One;

use crate::arith::{RatFunc, Rational};
use crate::error::{Error, Result};
use crate::radical::RadMonomial;

/// One of the two cube coordinates of `◊₂`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Coord {
    T1,
    T2,
}

impl Coord {
    pub const ALL: [Coord; 2] = [Coord::T1, Coord::T2];

    pub fn index(self) -> u8 {
        match self {
            Coord::T1 => 1,
            Coord::T2 => 2,
        }
    }

    pub fn other(self) -> Coord {
        match self {
            Coord::T1 => Coord::T2,
            Coord::T2 => Coord::T1,
        }
    }
}

impl fmt::Display for Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t{}", self.index())
    }
}

/// A curve `t ↦ (x(t), t₁(t), t₂(t))` in `◊₂`. The parameter line is taken
/// as the normalization of the image.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ParamCurve {
    x: RatFunc,
    t1: RatFunc,
    t2: RatFunc,
}

impl ParamCurve {
    pub fn new(x: RatFunc, t1: RatFunc, t2: RatFunc) -> Result<Self> {
        if x.is_constant() && t1.is_constant() && t2.is_constant() {
            return Err(Error::InvalidCurve("all coordinates are constant".into()));
        }
        if x.is_zero() {
            return Err(Error::InvalidCurve("curve lies in {x = 0}".into()));
        }
        for (name, ti) in [("t1", &t1), ("t2", &t2)] {
            if ti.is_zero() {
                return Err(Error::InvalidCurve(format!("curve lies in the face {name} = 0")));
            }
            if ti.is_constant_value(&Rational::one()) {
                return Err(Error::InvalidCurve(format!("{name} is identically 1")));
            }
        }
        Ok(ParamCurve { x, t1, t2 })
    }

    pub fn x(&self) -> &RatFunc {
        &self.x
    }

    pub fn t(&self, c: Coord) -> &RatFunc {
        match c {
            Coord::T1 => &self.t1,
            Coord::T2 => &self.t2,
        }
    }

    pub fn t1(&self) -> &RatFunc {
        &self.t1
    }

    pub fn t2(&self) -> &RatFunc {
        &self.t2
    }

    /// Some coordinate has degree one as a map of `P¹`, so the
    /// parametrization is injective and the parameter line is the
    /// normalization.
    pub fn is_evidently_birational(&self) -> bool {
        [&self.x, &self.t1, &self.t2]
            .iter()
            .any(|f| f.map_degree() == 1)
    }
}

impl fmt::Display for ParamCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "curve({}, {}, {})", self.x, self.t1, self.t2)
    }
}

/// `coeff · (scale * curve)`, where `scale * (x, t₁, t₂) = (x/scale, t₁, t₂)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleTerm {
    pub coeff: i64,
    pub scale: RadMonomial,
    pub curve: ParamCurve,
}

/// A formal ℤ-combination of star-scaled curves. Terms with the same
/// `(scale, curve)` are merged; insertion order is kept for stable reports.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CycleSum {
    terms: Vec<CycleTerm>,
}

impl CycleSum {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_curve(curve: ParamCurve) -> Self {
        let mut z = CycleSum::zero();
        z.add_term(1, RadMonomial::one(), curve);
        z
    }

    pub fn terms(&self) -> &[CycleTerm] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, coeff: i64, scale: RadMonomial, curve: ParamCurve) {
        assert!(!scale.is_zero(), "zero star scale");
        if coeff == 0 {
            return;
        }
        if let Some(pos) = self
            .terms
            .iter()
            .position(|t| t.scale == scale && t.curve == curve)
        {
            self.terms[pos].coeff += coeff;
            if self.terms[pos].coeff == 0 {
                self.terms.remove(pos);
            }
        } else {
            self.terms.push(CycleTerm { coeff, scale, curve });
        }
    }

    pub fn add_scaled(&mut self, k: i64, other: &CycleSum) {
        for t in &other.terms {
            self.add_term(k * t.coeff, t.scale.clone(), t.curve.clone());
        }
    }

    pub fn times(&self, k: i64) -> CycleSum {
        let mut out = CycleSum::zero();
        out.add_scaled(k, self);
        out
    }

    /// Star action of a nonzero monomial: multiplies every term's scale.
    pub fn star(&self, lambda: &RadMonomial) -> Result<CycleSum> {
        if lambda.is_zero() {
            return Err(Error::InvalidParameter("star scale must be nonzero".into()));
        }
        let mut out = CycleSum::zero();
        for t in &self.terms {
            out.add_term(t.coeff, t.scale.mul(lambda), t.curve.clone());
        }
        Ok(out)
    }

    /// Star action by a nonzero rational.
    pub fn star_rational(&self, lambda: &Rational) -> Result<CycleSum> {
        self.star(&RadMonomial::rational(lambda.clone()))
    }

    pub fn curves(&self) -> impl Iterator<Item = &ParamCurve> {
        self.terms.iter().map(|t| &t.curve)
    }
}

pub fn star(lambda: &RadMonomial, z: &CycleSum) -> Result<CycleSum> {
    z.star(lambda)
}

impl Add for &CycleSum {
    type Output = CycleSum;
    fn add(self, rhs: &CycleSum) -> CycleSum {
        let mut out = self.clone();
        out.add_scaled(1, rhs);
        out
    }
}

impl Sub for &CycleSum {
    type Output = CycleSum;
    fn sub(self, rhs: &CycleSum) -> CycleSum {
        let mut out = self.clone();
        out.add_scaled(-1, rhs);
        out
    }
}

impl Neg for &CycleSum {
    type Output = CycleSum;
    fn neg(self) -> CycleSum {
        self.times(-1)
    }
}

impl fmt::Display for CycleSum {
    /// Prints in the cycle-expression language: `2*curve(..) - cbrt(-2)*curve(..)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
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
            write!(f, "{}", t.curve)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat, Poly};

    fn curve() -> ParamCurve {
        ParamCurve::new(
            RatFunc::t(),
            RatFunc::from_poly(Poly::from_coeffs(vec![int(1), rat(1, 6)])),
            RatFunc::constant(int(5)),
        )
        .unwrap()
    }

    #[test]
    fn rejects_degenerate_curves() {
        let one = RatFunc::one();
        assert!(ParamCurve::new(RatFunc::t(), one.clone(), RatFunc::t()).is_err());
        assert!(ParamCurve::new(RatFunc::zero(), RatFunc::t(), RatFunc::t()).is_err());
        assert!(ParamCurve::new(RatFunc::t(), RatFunc::zero(), RatFunc::t()).is_err());
        let c = RatFunc::constant(int(2));
        assert!(ParamCurve::new(c.clone(), c.clone(), c).is_err());
    }

    #[test]
    fn sums_merge_and_cancel() {
        let z = CycleSum::from_curve(curve());
        let zz = &z + &z;
        assert_eq!(zz.len(), 1);
        assert_eq!(zz.terms()[0].coeff, 2);
        assert!((&zz - &zz).is_empty());
        assert!((&z + &(-&z)).is_empty());
    }

    #[test]
    fn star_composes() {
        let z = CycleSum::from_curve(curve());
        let alpha = RadMonomial::cbrt(int(-2)).unwrap();
        assert_eq!(z.star(&RadMonomial::one()).unwrap(), z);
        let twice = z.star(&alpha).unwrap().star(&alpha).unwrap();
        assert_eq!(twice.terms()[0].scale, RadMonomial::cbrt(int(4)).unwrap());
        let mixed = z.star(&alpha).unwrap().star_rational(&int(2)).unwrap();
        assert_eq!(mixed.terms()[0].scale.to_string(), "-2*cbrt(2)");
        assert!(z.star(&RadMonomial::zero()).is_err());
    }
}
