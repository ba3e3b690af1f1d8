//! Exact scalars `Σ qᵢ·∛cᵢ` built from real cube roots of rationals.
//!
//! Every monomial is kept as `q·∛c` with `c` a positive cube-free integer:
//! signs and cube factors (including denominators, via `∛(n/d) = ∛(n·d²)/d`)
//! are absorbed into `q`. Distinct cube-free radicands are treated as
//! ℚ-linearly independent, which makes zero tests exact.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::Rational;
use crate::error::{Error, Result};

/// Splits a positive integer into `(k, r)` with `n = k³·r` and `r` cube-free.
fn cube_free_part(n: &BigInt) -> (BigInt, BigInt) {
    debug_assert!(n.is_positive());
    let mut rest = n.clone();
    let mut k = BigInt::one();
    let mut r = BigInt::one();
    let mut d = BigInt::from(2u32);
    while &d * &d * &d <= rest {
        if rest.is_multiple_of(&d) {
            let mut e = 0u32;
            while rest.is_multiple_of(&d) {
                rest /= &d;
                e += 1;
            }
            k *= num_traits::pow(d.clone(), (e / 3) as usize);
            r *= num_traits::pow(d.clone(), (e % 3) as usize);
        }
        d += 1u32;
    }
    // any p with p³ | rest would have been reached by the loop
    (k, r * rest)
}

/// `q · ∛c` with `c` a positive cube-free integer; zero is `(0, 1)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RadMonomial {
    q: Rational,
    c: BigInt,
}

impl RadMonomial {
    /// The monomial equal to `q · ∛c`.
    pub fn normalize(q: Rational, c: Rational) -> Result<Self> {
        if c.is_zero() {
            return Err(Error::ZeroRadicand);
        }
        if q.is_zero() {
            return Ok(RadMonomial::zero());
        }
        let sign = if c.is_negative() { -Rational::one() } else { Rational::one() };
        let c = c.abs();
        let (n, d) = (c.numer().clone(), c.denom().clone());
        // ∛(n/d) = ∛(n·d²) / d
        let (k, r) = cube_free_part(&(n * &d * &d));
        Ok(RadMonomial {
            q: q * sign * Rational::new(k, d),
            c: r,
        })
    }

    pub fn rational(q: Rational) -> Self {
        if q.is_zero() {
            return RadMonomial::zero();
        }
        RadMonomial { q, c: BigInt::one() }
    }

    /// `∛c` for a nonzero rational `c`.
    pub fn cbrt(c: Rational) -> Result<Self> {
        RadMonomial::normalize(Rational::one(), c)
    }

    pub fn zero() -> Self {
        RadMonomial {
            q: Rational::zero(),
            c: BigInt::one(),
        }
    }

    pub fn one() -> Self {
        RadMonomial::rational(Rational::one())
    }

    pub fn coefficient(&self) -> &Rational {
        &self.q
    }

    pub fn radicand(&self) -> &BigInt {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.q.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.q.is_one() && self.c.is_one()
    }

    /// The rational value, if the radicand is 1.
    pub fn as_rational(&self) -> Option<&Rational> {
        self.c.is_one().then_some(&self.q)
    }

    /// `(q·∛c)³ = q³·c`.
    pub fn cube(&self) -> Rational {
        num_traits::pow(self.q.clone(), 3) * Rational::from_integer(self.c.clone())
    }

    pub fn mul(&self, other: &RadMonomial) -> RadMonomial {
        if self.is_zero() || other.is_zero() {
            return RadMonomial::zero();
        }
        let (k, r) = cube_free_part(&(&self.c * &other.c));
        RadMonomial {
            q: &self.q * &other.q * Rational::from_integer(k),
            c: r,
        }
    }

    /// `1/(q·∛c) = ∛(c²) / (q·c)`.
    pub fn invert(&self) -> Result<RadMonomial> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let denom = &self.q * Rational::from_integer(self.c.clone());
        RadMonomial::normalize(denom.recip(), Rational::from_integer(&self.c * &self.c))
    }

    pub fn scale(&self, k: &Rational) -> RadMonomial {
        if k.is_zero() {
            return RadMonomial::zero();
        }
        RadMonomial {
            q: &self.q * k,
            c: self.c.clone(),
        }
    }

    pub fn neg(&self) -> RadMonomial {
        self.scale(&-Rational::one())
    }

    /// Literal form for the cycle-expression language: a positive
    /// non-integer rational prints as itself, anything else as `cbrt(q³c)`.
    /// Integers are kept in `cbrt` form so that they cannot be read back as
    /// a multiplicity.
    pub fn to_dsl(&self) -> String {
        match self.as_rational() {
            Some(q) if q.is_positive() && !q.is_integer() => q.to_string(),
            _ => format!("cbrt({})", self.cube()),
        }
    }
}

impl fmt::Display for RadMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.c.is_one() {
            write!(f, "{}", self.q)
        } else {
            write!(f, "{}*cbrt({})", self.q, self.c)
        }
    }
}

/// A ℚ-linear combination of cube-free radicals: radicand ↦ coefficient.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RadScalar {
    terms: BTreeMap<BigInt, Rational>,
}

impl RadScalar {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        RadScalar::from(RadMonomial::one())
    }

    pub fn rational(q: Rational) -> Self {
        RadScalar::from(RadMonomial::rational(q))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn monomials(&self) -> impl Iterator<Item = RadMonomial> + '_ {
        self.terms.iter().map(|(c, q)| RadMonomial {
            q: q.clone(),
            c: c.clone(),
        })
    }

    /// The value if no radicals remain.
    pub fn as_rational(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&BigInt::one()).cloned(),
            _ => None,
        }
    }

    fn add_monomial(&mut self, m: &RadMonomial) {
        if m.is_zero() {
            return;
        }
        let slot = self.terms.entry(m.c.clone()).or_insert_with(Rational::zero);
        *slot += &m.q;
        if slot.is_zero() {
            self.terms.remove(&m.c);
        }
    }

    pub fn scale(&self, m: &RadMonomial) -> RadScalar {
        let mut out = RadScalar::zero();
        for x in self.monomials() {
            out.add_monomial(&x.mul(m));
        }
        out
    }
}

impl From<RadMonomial> for RadScalar {
    fn from(m: RadMonomial) -> Self {
        let mut out = RadScalar::zero();
        out.add_monomial(&m);
        out
    }
}

impl Add for &RadScalar {
    type Output = RadScalar;
    fn add(self, rhs: &RadScalar) -> RadScalar {
        let mut out = self.clone();
        for m in rhs.monomials() {
            out.add_monomial(&m);
        }
        out
    }
}

impl Sub for &RadScalar {
    type Output = RadScalar;
    fn sub(self, rhs: &RadScalar) -> RadScalar {
        self + &(-rhs)
    }
}

impl Neg for &RadScalar {
    type Output = RadScalar;
    fn neg(self) -> RadScalar {
        RadScalar {
            terms: self.terms.iter().map(|(c, q)| (c.clone(), -q)).collect(),
        }
    }
}

impl Mul for &RadScalar {
    type Output = RadScalar;
    fn mul(self, rhs: &RadScalar) -> RadScalar {
        let mut out = RadScalar::zero();
        for a in self.monomials() {
            for b in rhs.monomials() {
                out.add_monomial(&a.mul(&b));
            }
        }
        out
    }
}

impl fmt::Display for RadScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for m in self.monomials() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "{m}")?;
        }
        Ok(())
    }
}
