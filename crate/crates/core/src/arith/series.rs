//! Local expansions of rational functions at points of `P¹`.
//!
//! At a finite point `p` the local parameter is `s = t - p`; at infinity it
//! is `u = 1/t`.

use num_traits::Zero;

use super::{PointP1, Poly, RatFunc, Rational};
use crate::error::{Error, Result};

/// Truncated Laurent expansion `Σ coeffs[i] · s^(valuation + i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalSeries {
    pub valuation: i64,
    pub coeffs: Vec<Rational>,
}

impl LocalSeries {
    /// Coefficient of `s^k`; zero below the valuation. Panics if `k` lies past
    /// the truncation.
    pub fn coeff(&self, k: i64) -> Rational {
        if k < self.valuation {
            return Rational::zero();
        }
        self.coeffs[(k - self.valuation) as usize].clone()
    }
}

/// Numerator and denominator in the local parameter, plus the extra
/// valuation shift contributed by the change of variables at infinity.
fn local_pair(f: &RatFunc, p: &PointP1) -> (Poly, Poly, i64) {
    match p {
        PointP1::Finite(x) => (f.num().shift(x), f.den().shift(x), 0),
        PointP1::Infinity => {
            let shift = f.den().deg0() as i64 - f.num().deg0() as i64;
            (f.num().reversed(), f.den().reversed(), shift)
        }
    }
}

/// Order of vanishing of `f` at `p` (negative at poles).
pub fn ord_at(f: &RatFunc, p: &PointP1) -> Result<i64> {
    if f.is_zero() {
        return Err(Error::ZeroFunction);
    }
    let (n, d, shift) = local_pair(f, p);
    let vn = n.valuation().expect("nonzero") as i64;
    let vd = d.valuation().expect("nonzero") as i64;
    Ok(vn - vd + shift)
}

/// The first `terms` Laurent coefficients of `f` at `p`.
pub fn local_series(f: &RatFunc, p: &PointP1, terms: usize) -> Result<LocalSeries> {
    if f.is_zero() {
        return Err(Error::ZeroFunction);
    }
    let (n, d, shift) = local_pair(f, p);
    let vn = n.valuation().expect("nonzero");
    let vd = d.valuation().expect("nonzero");
    let n = n.strip_valuation();
    let d = d.strip_valuation();
    let d0_inv = d.coeff(0).recip();
    let mut coeffs: Vec<Rational> = Vec::with_capacity(terms);
    for k in 0..terms {
        let mut acc = n.coeff(k);
        for j in 1..=k.min(d.deg0()) {
            acc -= d.coeff(j) * &coeffs[k - j];
        }
        coeffs.push(acc * &d0_inv);
    }
    Ok(LocalSeries {
        valuation: vn as i64 - vd as i64 + shift,
        coeffs,
    })
}

/// Laurent coefficients of `f` at `p` for exponents `from..=to`.
pub fn laurent_coeffs(f: &RatFunc, p: &PointP1, from: i64, to: i64) -> Result<Vec<Rational>> {
    let val = ord_at(f, p)?;
    if to < from {
        return Ok(Vec::new());
    }
    let needed = (to - val + 1).max(0) as usize;
    let series = local_series(f, p, needed)?;
    Ok((from..=to).map(|k| series.coeff(k)).collect())
}

/// Residue of the differential `f(t) dt` at `p`.
///
/// At a finite point this is the coefficient of `(t - p)⁻¹`. At infinity,
/// `dt = -du/u²`, so it is minus the coefficient of `u¹` in `f(1/u)`.
pub fn residue_at(f: &RatFunc, p: &PointP1) -> Rational {
    if f.is_zero() {
        return Rational::zero();
    }
    let target = match p {
        PointP1::Finite(_) => -1,
        PointP1::Infinity => 1,
    };
    let coeff = laurent_coeffs(f, p, target, target).expect("nonzero")[0].clone();
    match p {
        PointP1::Finite(_) => coeff,
        PointP1::Infinity => -coeff,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat, zeros_poles, Target};

    fn poly(cs: &[Rational]) -> Poly {
        Poly::from_coeffs(cs.to_vec())
    }

    fn rf(n: &[Rational], d: &[Rational]) -> RatFunc {
        RatFunc::new(poly(n), poly(d)).unwrap()
    }

    #[test]
    fn orders() {
        // t^2/(1-t) at 0
        let f = rf(&[int(0), int(0), int(1)], &[int(1), int(-1)]);
        assert_eq!(ord_at(&f, &PointP1::Finite(int(0))).unwrap(), 2);
        assert_eq!(ord_at(&f, &PointP1::Finite(int(1))).unwrap(), -1);
        assert_eq!(ord_at(&RatFunc::t(), &PointP1::Infinity).unwrap(), -1);
        // (1 - t/2)^2/(1 - t) at infinity: 1 - 2
        let g = rf(&[int(1), int(-1), rat(1, 4)], &[int(1), int(-1)]);
        assert_eq!(ord_at(&g, &PointP1::Infinity).unwrap(), -1);
        assert_eq!(ord_at(&RatFunc::zero(), &PointP1::Infinity), Err(Error::ZeroFunction));
    }

    #[test]
    fn geometric_series_expansion() {
        // 1/(4t^2(1-t)) = (1/4)(t^-2 + t^-1 + 1 + ...)
        let f = rf(&[int(1)], &[int(0), int(0), int(4), int(-4)]);
        let c = laurent_coeffs(&f, &PointP1::Finite(int(0)), -2, 0).unwrap();
        assert_eq!(c, vec![rat(1, 4), rat(1, 4), rat(1, 4)]);
        let g = rf(&[int(1)], &[int(1), int(-1)]);
        let c = laurent_coeffs(&g, &PointP1::Finite(int(0)), 0, 2).unwrap();
        assert_eq!(c, vec![int(1), int(1), int(1)]);
        let c = laurent_coeffs(&RatFunc::t(), &PointP1::Infinity, -1, 1).unwrap();
        assert_eq!(c, vec![int(1), int(0), int(0)]);
    }

    #[test]
    fn residues() {
        let f = rf(&[int(1)], &[int(0), int(0), int(4), int(-4)]);
        assert_eq!(residue_at(&f, &PointP1::Finite(int(0))), rat(1, 4));
        // -1/(4t(t+6))
        let g = rf(&[int(-1)], &[int(0), int(24), int(4)]);
        assert_eq!(residue_at(&g, &PointP1::Finite(int(0))), rat(-1, 24));
        // 1/(t(t-1)): -1, 1, 0
        let h = rf(&[int(1)], &[int(0), int(-1), int(1)]);
        assert_eq!(residue_at(&h, &PointP1::Finite(int(0))), int(-1));
        assert_eq!(residue_at(&h, &PointP1::Finite(int(1))), int(1));
        assert_eq!(residue_at(&h, &PointP1::Infinity), int(0));
        // 1/t has residue -1 at infinity
        let inv = rf(&[int(1)], &[int(0), int(1)]);
        assert_eq!(residue_at(&inv, &PointP1::Infinity), int(-1));
        assert_eq!(residue_at(&RatFunc::zero(), &PointP1::Infinity), int(0));
    }

    #[test]
    fn residue_at_regular_point_is_zero() {
        let h = rf(&[int(1)], &[int(0), int(-1), int(1)]);
        assert_eq!(residue_at(&h, &PointP1::Finite(int(5))), int(0));
        let total: Rational = zeros_poles(&h, Target::Infinity)
            .unwrap()
            .support()
            .chain(std::iter::once(&PointP1::Infinity))
            .map(|p| residue_at(&h, p))
            .sum();
        assert_eq!(total, int(0));
    }
}
