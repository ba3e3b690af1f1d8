//! The residue regulator `R₂`.
//!
//! At a point `p` over `x = 0` where `ord(t₁ - 1) ≥ 2·ord(x)`,
//! `R₂(C, p) = res_p (1 - t₁)/x³ · dt₂/t₂`; otherwise, if the condition holds
//! for `t₂`, `R₂(C, p) = -res_p (1 - t₂)/x³ · dt₁/t₁`. The `t₁` branch is
//! preferred when both apply. Star scales enter as `R₂(λ * C) = λ³ R₂(C)`.

use num_traits::Zero;
use serde_json::{json, Value};

use crate::arith::{ord_at, residue_at, zeros_poles, PointP1, RatFunc, Rational, Target};
use crate::boundary::modulus_branches;
use crate::cycle::{Coord, CycleSum, ParamCurve};
use crate::error::{Error, Result};

/// `(1 - tᵢ)/x³ · t_j'/t_j` for the branch `i`, `j = other(i)`.
fn branch_form(c: &ParamCurve, branch: Coord) -> Result<RatFunc> {
    let ti = c.t(branch);
    let tj = c.t(branch.other());
    let one_minus = &RatFunc::one() - ti;
    let x3 = c.x().pow(3)?;
    let dlog = tj.log_derivative()?;
    Ok(&one_minus.checked_div(&x3)? * &dlog)
}

/// The local value of one branch at `p`, with the sign of its definition.
fn branch_value(c: &ParamCurve, p: &PointP1, branch: Coord) -> Result<Rational> {
    let res = residue_at(&branch_form(c, branch)?, p);
    Ok(match branch {
        Coord::T1 => res,
        Coord::T2 => -res,
    })
}

/// Both branch values at a point, when their modulus conditions hold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointValue {
    pub point: PointP1,
    /// Branch used for the value.
    pub branch: Coord,
    pub value: Rational,
    /// The other branch's value, if its modulus condition also holds and it
    /// was requested.
    pub alternative: Option<Rational>,
}

impl PointValue {
    pub fn branches_agree(&self) -> bool {
        self.alternative.as_ref().map_or(true, |v| v == &self.value)
    }
}

fn point_value(c: &ParamCurve, p: &PointP1, crosscheck: bool) -> Result<PointValue> {
    let ord_x = ord_at(c.x(), p)?;
    if ord_x < 1 {
        return Err(Error::NotOverXZero(p.clone()));
    }
    let holds = modulus_branches(c, p, ord_x)?;
    let Some(&branch) = holds.iter().next() else {
        return Err(Error::ModulusViolation(p.clone()));
    };
    let value = branch_value(c, p, branch)?;
    let alternative = if crosscheck && holds.len() == 2 {
        Some(branch_value(c, p, branch.other())?)
    } else {
        None
    };
    Ok(PointValue {
        point: p.clone(),
        branch,
        value,
        alternative,
    })
}

/// `R₂(C, p)` for a point `p` with `ord_p(x) ≥ 1`.
pub fn r2_point(c: &ParamCurve, p: &PointP1) -> Result<Rational> {
    Ok(point_value(c, p, false)?.value)
}

/// Local contributions of a single curve, one per point over `x = 0`.
pub fn curve_points(c: &ParamCurve, crosscheck: bool) -> Result<Vec<PointValue>> {
    if c.x().is_constant() {
        return Ok(Vec::new());
    }
    zeros_poles(c.x(), Target::Zero)?
        .support()
        .map(|p| point_value(c, p, crosscheck))
        .collect()
}

/// `R₂(C) = Σ_p R₂(C, p)` for an unscaled curve.
pub fn r2_curve(c: &ParamCurve) -> Result<Rational> {
    Ok(curve_points(c, false)?.into_iter().map(|v| v.value).sum())
}

/// `R₂(z) = Σ coeff · scale³ · R₂(curve)`.
pub fn r2(z: &CycleSum) -> Result<Rational> {
    let mut total = Rational::zero();
    for term in z.terms() {
        let v = r2_curve(&term.curve)?;
        if !v.is_zero() {
            total += v * term.scale.cube() * Rational::from_integer(term.coeff.into());
        }
    }
    Ok(total)
}

/// A per-term, per-point breakdown of `R₂(z)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Breakdown {
    pub term: usize,
    /// `coeff · scale³`.
    pub weight: Rational,
    pub points: Vec<PointValue>,
}

impl Breakdown {
    pub fn to_json(&self) -> Value {
        let pts: Vec<Value> = self
            .points
            .iter()
            .map(|v| {
                json!({
                    "point": v.point.to_string(),
                    "branch": v.branch.to_string(),
                    "value": v.value.to_string(),
                    "alternative": v.alternative.as_ref().map(|a| a.to_string()),
                })
            })
            .collect();
        json!({"term": self.term, "weight": self.weight.to_string(), "points": pts})
    }
}

/// The breakdown of `R₂(z)`; with `crosscheck` the second branch is also
/// evaluated wherever both modulus conditions hold.
pub fn r2_breakdown(z: &CycleSum, crosscheck: bool) -> Result<Vec<Breakdown>> {
    z.terms()
        .iter()
        .enumerate()
        .map(|(i, term)| {
            Ok(Breakdown {
                term: i,
                weight: term.scale.cube() * Rational::from_integer(term.coeff.into()),
                points: curve_points(&term.curve, crosscheck)?,
            })
        })
        .collect()
}

/// Returns `Some(0)` when `R₂(c)` vanishes for a structural reason: a
/// constant `t₁` or `t₂`, or a curve that never meets `x = 0`.
pub fn vanishing_shortcuts(c: &ParamCurve) -> Option<Rational> {
    let misses_x_zero = c.x().is_constant();
    let constant_t = c.t1().is_constant() || c.t2().is_constant();
    (misses_x_zero || constant_t).then(Rational::zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};
    use crate::cycle::catalog;

    fn curve(z: &CycleSum) -> ParamCurve {
        z.terms()[0].curve.clone()
    }

    #[test]
    fn gamma_points() {
        let zero = PointP1::Finite(int(0));
        assert_eq!(r2_point(&curve(&catalog::gamma1()), &zero).unwrap(), rat(1, 4));
        assert_eq!(r2_point(&curve(&catalog::gamma2()), &zero).unwrap(), rat(-1, 24));
        let q = curve(&catalog::q_cycle(&int(3)).unwrap());
        assert_eq!(r2_point(&q, &zero).unwrap(), rat(-9, 8));
    }

    #[test]
    fn point_preconditions() {
        let g1 = curve(&catalog::gamma1());
        assert_eq!(
            r2_point(&g1, &PointP1::Finite(int(5))),
            Err(Error::NotOverXZero(PointP1::Finite(int(5))))
        );
        let bad = ParamCurve::new(RatFunc::t(), RatFunc::t(), RatFunc::constant(int(5))).unwrap();
        assert_eq!(
            r2_point(&bad, &PointP1::Finite(int(0))),
            Err(Error::ModulusViolation(PointP1::Finite(int(0))))
        );
    }

    #[test]
    fn gamma3_value() {
        assert_eq!(r2(&catalog::gamma3()).unwrap(), rat(7, 24));
    }

    #[test]
    fn correction_terms_vanish() {
        for z in [
            catalog::make_c1(&rat(1, 2), &rat(1, 2), &int(2)).unwrap(),
            catalog::make_c1(&int(3), &int(-3), &int(5)).unwrap(),
            catalog::make_c2(&rat(1, 2), &rat(2, 3), &rat(3, 2)).unwrap(),
        ] {
            assert_eq!(r2(&z).unwrap(), int(0));
            assert_eq!(vanishing_shortcuts(&curve(&z)), Some(int(0)));
        }
        assert_eq!(vanishing_shortcuts(&curve(&catalog::gamma1())), None);
    }

    #[test]
    fn star_cubes() {
        let alpha = catalog::alpha();
        let z = catalog::gamma1().star(&alpha).unwrap();
        assert_eq!(r2(&z).unwrap(), rat(-1, 2));
    }

    #[test]
    fn breakdown_matches_total() {
        let z = catalog::gamma3();
        let parts = r2_breakdown(&z, true).unwrap();
        let total: Rational = parts
            .iter()
            .map(|b| b.points.iter().map(|v| &v.value * &b.weight).sum::<Rational>())
            .sum();
        assert_eq!(total, r2(&z).unwrap());
    }
}
