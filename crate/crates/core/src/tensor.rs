//! `ℚ ⊗ ℚ×` with first factors in the radical scalars, and the maps
//! `g((1/a, b)) = a ⊗ b` and `f(a, b) = (1/a, b)` between it and 0-cycles.
//!
//! An element is stored in the prime basis: `a ⊗ (±∏ pᵉ) = Σ e·a ⊗ p`. The
//! sign is dropped because `ℚ ⊗ {±1} = 0`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde_json::Value;

use crate::arith::Rational;
use crate::boundary::{boundary, ZeroCycle};
use crate::cycle::catalog;
use crate::error::{Error, Result};
use crate::radical::{RadMonomial, RadScalar};

/// Prime factorization of `|n|` by trial division, as `(p, e)` pairs.
pub fn factor_integer(n: &BigInt) -> Vec<(BigInt, u32)> {
    let mut m = n.abs();
    let mut out = Vec::new();
    let mut d = BigInt::from(2u32);
    while &d * &d <= m {
        if m.is_multiple_of(&d) {
            let mut e = 0;
            while m.is_multiple_of(&d) {
                m /= &d;
                e += 1;
            }
            out.push((d.clone(), e));
        }
        d += 1u32;
    }
    if m > BigInt::one() {
        out.push((m, 1));
    }
    out
}

/// Exponent vector of a nonzero rational over the primes.
pub fn prime_exponents(b: &Rational) -> BTreeMap<BigInt, i64> {
    let mut out = BTreeMap::new();
    for (p, e) in factor_integer(b.numer()) {
        *out.entry(p).or_insert(0) += e as i64;
    }
    for (p, e) in factor_integer(b.denom()) {
        *out.entry(p).or_insert(0) -= e as i64;
    }
    out.retain(|_, e| *e != 0);
    out
}

/// An element of `ℚ ⊗ ℚ×`: prime ↦ radical-scalar coefficient.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TensorElem {
    terms: BTreeMap<BigInt, RadScalar>,
}

impl TensorElem {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `a ⊗ b` for `b ≠ 0`.
    pub fn simple(a: &RadScalar, b: &Rational) -> Result<Self> {
        if b.is_zero() {
            return Err(Error::InvalidParameter("second tensor factor must be nonzero".into()));
        }
        let mut out = TensorElem::zero();
        for (p, e) in prime_exponents(b) {
            let k = RadMonomial::rational(Rational::from_integer(e.into()));
            out.add_at(p, &a.scale(&k));
        }
        Ok(out)
    }

    fn add_at(&mut self, p: BigInt, v: &RadScalar) {
        let slot = self.terms.entry(p.clone()).or_default();
        *slot = &*slot + v;
        if slot.is_zero() {
            self.terms.remove(&p);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The coefficient at prime `p`.
    pub fn coefficient(&self, p: &BigInt) -> RadScalar {
        self.terms.get(p).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&BigInt, &RadScalar)> {
        self.terms.iter()
    }

    /// `λ · Σ aₚ ⊗ p`.
    pub fn scale(&self, lambda: &RadMonomial) -> TensorElem {
        let mut out = TensorElem::zero();
        for (p, v) in &self.terms {
            out.add_at(p.clone(), &v.scale(lambda));
        }
        out
    }

    /// `{"2": "1", "3": "-1*cbrt(2)"}`.
    pub fn to_json(&self) -> Value {
        Value::Object(
            self.terms
                .iter()
                .map(|(p, v)| (p.to_string(), Value::String(v.to_string())))
                .collect(),
        )
    }
}

impl Add for &TensorElem {
    type Output = TensorElem;
    fn add(self, rhs: &TensorElem) -> TensorElem {
        let mut out = self.clone();
        for (p, v) in &rhs.terms {
            out.add_at(p.clone(), v);
        }
        out
    }
}

impl Neg for &TensorElem {
    type Output = TensorElem;
    fn neg(self) -> TensorElem {
        TensorElem {
            terms: self.terms.iter().map(|(p, v)| (p.clone(), -v)).collect(),
        }
    }
}

impl Sub for &TensorElem {
    type Output = TensorElem;
    fn sub(self, rhs: &TensorElem) -> TensorElem {
        self + &(-rhs)
    }
}

impl fmt::Display for TensorElem {
    /// `(1) ⊗ 2 + (-1*cbrt(2)) ⊗ 3`, or `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(p, v)| format!("({v}) ⊗ {p}")).collect();
        f.write_str(&parts.join(" + "))
    }
}

/// `g(Σ cᵢ (xᵢ, bᵢ)) = Σ cᵢ · (1/xᵢ) ⊗ bᵢ`.
pub fn g_map(z: &ZeroCycle) -> TensorElem {
    let mut out = TensorElem::zero();
    for (c, x, b) in z.iter() {
        let a = x
            .invert()
            .expect("0-cycle points have x != 0")
            .scale(&Rational::from_integer(c.into()));
        let piece = TensorElem::simple(&RadScalar::from(a), b).expect("0-cycle points have b != 0");
        out = &out + &piece;
    }
    out
}

/// `f(a, b) = (1/a, b)`, zero when `a = 0` or `b = 1`.
pub fn f_map(a: &Rational, b: &Rational) -> Result<ZeroCycle> {
    if b.is_zero() {
        return Err(Error::InvalidParameter("f(a, b) needs b != 0".into()));
    }
    if a.is_zero() || b.is_one() {
        return Ok(ZeroCycle::zero());
    }
    Ok(ZeroCycle::rational_point(1, a.recip(), b.clone()))
}

/// `g(∂D(a, b))` for the four-term combination built from the published
/// generator lists.
pub fn cathelineau_tensor(a: &Rational, b: &Rational) -> Result<TensorElem> {
    Ok(g_map(&boundary(&catalog::d_cycle(a, b)?)?))
}

/// The same with the amended generators.
pub fn cathelineau_tensor_fixed(a: &Rational, b: &Rational) -> Result<TensorElem> {
    Ok(g_map(&boundary(&catalog::d_cycle_fixed(a, b)?)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};

    #[test]
    fn g_of_simple_points() {
        let t = g_map(&ZeroCycle::rational_point(1, int(1), int(2)));
        assert_eq!(t.coefficient(&BigInt::from(2)), RadScalar::one());
        assert_eq!(t.iter().count(), 1);

        // (1/(2α), 2) ↦ 2α ⊗ 2
        let alpha = catalog::alpha();
        let two_alpha = alpha.scale(&int(2));
        let z = ZeroCycle::point(1, two_alpha.invert().unwrap(), int(2));
        let t = g_map(&z);
        assert_eq!(t.coefficient(&BigInt::from(2)).to_string(), "-2*cbrt(2)");
    }

    #[test]
    fn g_kills_c2_boundary() {
        let z = boundary(&catalog::make_c2(&rat(2, 7), &rat(-3, 5), &int(6)).unwrap()).unwrap();
        assert!(!z.is_zero());
        assert!(g_map(&z).is_zero());
    }

    #[test]
    fn f_map_cases() {
        assert!(f_map(&int(0), &int(5)).unwrap().is_zero());
        assert_eq!(f_map(&int(3), &int(5)).unwrap(), ZeroCycle::rational_point(1, rat(1, 3), int(5)));
        assert!(f_map(&int(3), &int(1)).unwrap().is_zero());
        assert!(f_map(&int(3), &int(0)).is_err());
    }

    #[test]
    fn sign_and_inverse_exponents() {
        let t = TensorElem::simple(&RadScalar::one(), &rat(-4, 9)).unwrap();
        assert_eq!(t.coefficient(&BigInt::from(2)), RadScalar::rational(int(2)));
        assert_eq!(t.coefficient(&BigInt::from(3)), RadScalar::rational(int(-2)));
        assert!(TensorElem::simple(&RadScalar::one(), &int(-1)).unwrap().is_zero());
    }

    #[test]
    fn cathelineau_rejects_equal_arguments() {
        assert!(cathelineau_tensor(&int(2), &int(2)).is_err());
    }
}
