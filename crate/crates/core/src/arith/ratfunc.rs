use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{PointP1, Poly, Rational};
use crate::error::{Error, Result};

/// Optional factorizations carried alongside a [`RatFunc`].
///
/// The product of `num` (resp. `den`) with multiplicities equals the reduced
/// numerator (resp. monic denominator) exactly. Constant factors may appear
/// in `num`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factored {
    pub num: Vec<(Poly, u32)>,
    pub den: Vec<(Poly, u32)>,
}

fn expand(factors: &[(Poly, u32)]) -> Poly {
    factors
        .iter()
        .fold(Poly::one(), |acc, (p, e)| &acc * &p.pow(*e))
}

impl Factored {
    fn polynomial(p: &Poly) -> Self {
        Factored {
            num: vec![(p.clone(), 1)],
            den: Vec::new(),
        }
    }

    /// Normalizes to a constant unit plus monic factors, cancelling identical
    /// factors between numerator and denominator.
    fn canonical(num: &[(Poly, u32)], den: &[(Poly, u32)]) -> (Rational, Vec<(Poly, i64)>) {
        let mut unit = Rational::one();
        let mut merged: Vec<(Poly, i64)> = Vec::new();
        let mut push = |p: &Poly, e: i64, unit: &mut Rational| {
            if p.is_constant() {
                let c = p.leading();
                *unit *= if e >= 0 {
                    num_traits::pow(c, e as usize)
                } else {
                    num_traits::pow(c.recip(), (-e) as usize)
                };
                return;
            }
            let lc = p.leading();
            *unit *= if e >= 0 {
                num_traits::pow(lc, e as usize)
            } else {
                num_traits::pow(lc.recip(), (-e) as usize)
            };
            let m = p.monic();
            match merged.iter_mut().find(|(q, _)| *q == m) {
                Some(slot) => slot.1 += e,
                None => merged.push((m, e)),
            }
        };
        for (p, e) in num {
            push(p, *e as i64, &mut unit);
        }
        for (p, e) in den {
            push(p, -(*e as i64), &mut unit);
        }
        merged.retain(|(_, e)| *e != 0);
        (unit, merged)
    }
}

/// Rational function `num/den` over ℚ in reduced form with monic denominator.
///
/// Equality compares the reduced pair only; the optional factorization is a
/// computational hint.
#[derive(Clone, Debug)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
    factors: Option<Factored>,
}

impl PartialEq for RatFunc {
    fn eq(&self, other: &Self) -> bool {
        self.num == other.num && self.den == other.den
    }
}

impl Eq for RatFunc {}

impl std::hash::Hash for RatFunc {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.num.hash(state);
        self.den.hash(state);
    }
}

impl RatFunc {
    /// Reduces `num/den`. Fails only if `den` is zero.
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RatFunc::zero());
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_constant() {
            (num, den)
        } else {
            (num.div_rem(&g).0, den.div_rem(&g).0)
        };
        let lc = den.leading().recip();
        let num = num.scale(&lc);
        let den = den.scale(&lc);
        let factors = den.is_constant().then(|| Factored::polynomial(&num));
        Ok(RatFunc { num, den, factors })
    }

    /// Builds from factor lists, keeping them whenever they stay consistent
    /// with the reduced form.
    pub fn from_factors(num: &[(Poly, u32)], den: &[(Poly, u32)]) -> Result<Self> {
        let (unit, merged) = Factored::canonical(num, den);
        if unit.is_zero() {
            return Ok(RatFunc::zero());
        }
        let nf: Vec<(Poly, u32)> = merged
            .iter()
            .filter(|(_, e)| *e > 0)
            .map(|(p, e)| (p.clone(), *e as u32))
            .collect();
        let df: Vec<(Poly, u32)> = merged
            .iter()
            .filter(|(_, e)| *e < 0)
            .map(|(p, e)| (p.clone(), (-e) as u32))
            .collect();
        let n = expand(&nf).scale(&unit);
        let d = expand(&df);
        if !n.gcd(&d).is_constant() {
            return RatFunc::new(n, d);
        }
        let mut num_factors = nf;
        if !unit.is_one() || num_factors.is_empty() {
            num_factors.insert(0, (Poly::constant(unit), 1));
        }
        Ok(RatFunc {
            num: n,
            den: d,
            factors: Some(Factored {
                num: num_factors,
                den: df,
            }),
        })
    }

    pub fn zero() -> Self {
        RatFunc {
            num: Poly::zero(),
            den: Poly::one(),
            factors: None,
        }
    }

    pub fn constant(c: Rational) -> Self {
        RatFunc::from_poly(Poly::constant(c))
    }

    pub fn one() -> Self {
        RatFunc::constant(Rational::one())
    }

    /// The coordinate function `t`.
    pub fn t() -> Self {
        RatFunc::from_poly(Poly::t())
    }

    pub fn from_poly(p: Poly) -> Self {
        let factors = (!p.is_zero()).then(|| Factored::polynomial(&p));
        RatFunc {
            num: p,
            den: Poly::one(),
            factors,
        }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn factors(&self) -> Option<&Factored> {
        self.factors.as_ref()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    /// The value if `self` is constant.
    pub fn as_constant(&self) -> Option<Rational> {
        self.is_constant().then(|| self.num.coeff(0))
    }

    pub fn is_constant_value(&self, q: &Rational) -> bool {
        self.as_constant().is_some_and(|c| &c == q)
    }

    /// Degree as a map `P¹ → P¹`.
    pub fn map_degree(&self) -> usize {
        self.num.deg0().max(self.den.deg0())
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        RatFunc::one().checked_div(self)
    }

    pub fn checked_div(&self, rhs: &RatFunc) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match (&self.factors, &rhs.factors) {
            (Some(a), Some(b)) => {
                let num: Vec<_> = a.num.iter().chain(b.den.iter()).cloned().collect();
                let den: Vec<_> = a.den.iter().chain(b.num.iter()).cloned().collect();
                RatFunc::from_factors(&num, &den)
            }
            _ => RatFunc::new(&self.num * &rhs.den, &self.den * &rhs.num),
        }
    }

    pub fn pow(&self, e: i32) -> Result<Self> {
        let base = if e < 0 { self.recip()? } else { self.clone() };
        let e = e.unsigned_abs();
        if let Some(fs) = &base.factors {
            let num: Vec<_> = fs.num.iter().map(|(p, k)| (p.clone(), k * e)).collect();
            let den: Vec<_> = fs.den.iter().map(|(p, k)| (p.clone(), k * e)).collect();
            return RatFunc::from_factors(&num, &den);
        }
        RatFunc::new(base.num.pow(e), base.den.pow(e))
    }

    pub fn derivative(&self) -> RatFunc {
        let n = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        let d = &self.den * &self.den;
        RatFunc::new(n, d).expect("nonzero denominator")
    }

    /// Logarithmic derivative `f'/f`.
    pub fn log_derivative(&self) -> Result<RatFunc> {
        self.derivative().checked_div(self)
    }

    /// Value at a point of `P¹`, with poles mapped to `Infinity`.
    pub fn eval(&self, p: &PointP1) -> PointP1 {
        match p {
            PointP1::Finite(x) => {
                let d = self.den.eval(x);
                if d.is_zero() {
                    PointP1::Infinity
                } else {
                    PointP1::Finite(self.num.eval(x) / d)
                }
            }
            PointP1::Infinity => {
                if self.num.is_zero() {
                    return PointP1::Finite(Rational::zero());
                }
                let (dn, dd) = (self.num.deg0(), self.den.deg0());
                if dn > dd {
                    PointP1::Infinity
                } else if dn == dd {
                    PointP1::Finite(self.num.leading() / self.den.leading())
                } else {
                    PointP1::Finite(Rational::zero())
                }
            }
        }
    }

    /// Substitutes `t ↦ g(t)`.
    pub fn compose(&self, g: &RatFunc) -> Result<RatFunc> {
        let horner = |p: &Poly| -> RatFunc {
            p.coeffs().iter().rev().fold(RatFunc::zero(), |acc, c| {
                &(&acc * g) + &RatFunc::constant(c.clone())
            })
        };
        horner(&self.num).checked_div(&horner(&self.den))
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.den == rhs.den {
            return RatFunc::new(&self.num + &rhs.num, self.den.clone()).expect("nonzero");
        }
        RatFunc::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
        .expect("nonzero denominator")
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
            factors: self.factors.as_ref().map(|fs| {
                let mut num = fs.num.clone();
                num.push((Poly::constant(-Rational::one()), 1));
                Factored {
                    num,
                    den: fs.den.clone(),
                }
            }),
        }
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        match (&self.factors, &rhs.factors) {
            (Some(a), Some(b)) => {
                let num: Vec<_> = a.num.iter().chain(b.num.iter()).cloned().collect();
                let den: Vec<_> = a.den.iter().chain(b.den.iter()).cloned().collect();
                RatFunc::from_factors(&num, &den)
            }
            _ => RatFunc::new(&self.num * &rhs.num, &self.den * &rhs.den),
        }
        .expect("nonzero denominator")
    }
}

impl Div for &RatFunc {
    type Output = RatFunc;
    /// Panics on division by the zero function; see [`RatFunc::checked_div`].
    fn div(self, rhs: &RatFunc) -> RatFunc {
        self.checked_div(rhs).expect("division by zero rational function")
    }
}

impl From<Poly> for RatFunc {
    fn from(p: Poly) -> Self {
        RatFunc::from_poly(p)
    }
}

fn needs_parens(p: &Poly) -> bool {
    p.coeffs().iter().filter(|c| !c.is_zero()).count() > 1
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        if needs_parens(&self.num) {
            write!(f, "({})", self.num)?;
        } else {
            write!(f, "{}", self.num)?;
        }
        if needs_parens(&self.den) || self.den.degree() == Some(0) {
            write!(f, "/({})", self.den)
        } else {
            write!(f, "/{}", self.den)
        }
    }
}

impl Poly {
    fn is_one(&self) -> bool {
        self.coeffs().len() == 1 && self.coeffs()[0].is_one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};

    fn lin(r: Rational) -> Poly {
        Poly::linear_root(&r)
    }

    #[test]
    fn reduces_and_normalizes() {
        // (2t - 2)·t / (3(t - 1)) = 2t/3
        let num = &lin(int(1)).scale(&int(2)) * &Poly::t();
        let den = lin(int(1)).scale(&int(3));
        let f = RatFunc::new(num, den).unwrap();
        assert_eq!(f.num(), &Poly::t().scale(&rat(2, 3)));
        assert_eq!(f.den(), &Poly::one());
        assert!(f.den().is_monic());
    }

    #[test]
    fn factors_stay_consistent() {
        let a = RatFunc::from_poly(lin(rat(1, 2)).scale(&int(-3)));
        let b = RatFunc::from_poly(lin(int(4)));
        let f = (&a * &a).checked_div(&b).unwrap();
        let fs = f.factors().expect("factored");
        assert_eq!(expand(&fs.num), *f.num());
        assert_eq!(expand(&fs.den), *f.den());
        // cancelling through factors
        let g = (&f * &b).checked_div(&a).unwrap();
        assert_eq!(g, a);
        let gs = g.factors().unwrap();
        assert_eq!(expand(&gs.num), *g.num());
    }

    #[test]
    fn eval_at_points() {
        // (1 - t/2)^2 / (1 - t)
        let base = RatFunc::from_poly(Poly::from_coeffs(vec![int(1), rat(-1, 2)]));
        let f = base
            .pow(2)
            .unwrap()
            .checked_div(&RatFunc::from_poly(Poly::from_coeffs(vec![int(1), int(-1)])))
            .unwrap();
        assert_eq!(f.eval(&PointP1::Finite(int(2))), PointP1::Finite(int(0)));
        assert_eq!(f.eval(&PointP1::Finite(int(1))), PointP1::Infinity);
        assert_eq!(f.eval(&PointP1::Infinity), PointP1::Infinity);
        assert_eq!(f.eval(&PointP1::Finite(int(0))), PointP1::Finite(int(1)));
    }

    #[test]
    fn derivative_quotient_rule() {
        let f = RatFunc::new(Poly::t(), lin(int(1))).unwrap();
        // d/dt t/(t-1) = -1/(t-1)^2
        let expect = RatFunc::new(Poly::constant(int(-1)), lin(int(1)).pow(2)).unwrap();
        assert_eq!(f.derivative(), expect);
    }

    #[test]
    fn display_round_shape() {
        let f = RatFunc::new(Poly::constant(int(1)), Poly::from_coeffs(vec![int(0), int(0), int(4)]))
            .unwrap();
        assert_eq!(f.to_string(), "1/4/t^2");
        let g = RatFunc::new(Poly::t(), lin(int(1))).unwrap();
        assert_eq!(g.to_string(), "t/(t - 1)");
    }
}
