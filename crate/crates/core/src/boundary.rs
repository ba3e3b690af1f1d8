//! Face intersections, the boundary map `∂ = Σ(-1)ⁱ(∂ᵢ⁰ - ∂ᵢ^∞)` and the
//! admissibility test for parametrized curves.
//!
//! A face point `p` of `{tᵢ = j}` is evaluated as `(x(p), t_other(p))`. Points
//! with `x(p) = ∞` or `t_other(p) = 1` lie outside `◊₁` and are dropped;
//! points with `x(p) = 0` or `t_other(p) ∈ {0, ∞}` would give a 0-cycle off
//! `c₀(◊₁)` and are rejected.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::arith::{ord_at, zeros_poles, PointP1, RatFunc, Rational, Target};
use crate::cycle::{Coord, CycleSum, ParamCurve};
use crate::error::{Error, Result};
use crate::radical::RadMonomial;

/// A formal ℤ-combination of points `(x, b)` of `◊₁` with `x ≠ 0` and
/// `b ∉ {0, 1}`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ZeroCycle {
    terms: BTreeMap<(RadMonomial, Rational), i64>,
}

impl ZeroCycle {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `coeff · (x, b)`. Panics on `x = 0` or `b ∈ {0, 1}`; callers filter
    /// those first.
    pub fn point(coeff: i64, x: RadMonomial, b: Rational) -> Self {
        let mut z = ZeroCycle::zero();
        z.add(coeff, x, b);
        z
    }

    /// The point `(x, b)` for rational `x`.
    pub fn rational_point(coeff: i64, x: Rational, b: Rational) -> Self {
        ZeroCycle::point(coeff, RadMonomial::rational(x), b)
    }

    pub fn add(&mut self, coeff: i64, x: RadMonomial, b: Rational) {
        assert!(!x.is_zero(), "0-cycle point with x = 0");
        assert!(!b.is_zero() && !b.is_one(), "0-cycle point with b = {b}");
        if coeff == 0 {
            return;
        }
        let key = (x, b);
        let slot = self.terms.entry(key.clone()).or_insert(0);
        *slot += coeff;
        if *slot == 0 {
            self.terms.remove(&key);
        }
    }

    pub fn add_scaled(&mut self, k: i64, other: &ZeroCycle) {
        for ((x, b), c) in &other.terms {
            self.add(k * c, x.clone(), b.clone());
        }
    }

    pub fn times(&self, k: i64) -> ZeroCycle {
        let mut out = ZeroCycle::zero();
        out.add_scaled(k, self);
        out
    }

    /// `λ ⋆ (x, b) = (x/λ, b)`.
    pub fn star(&self, lambda: &RadMonomial) -> Result<ZeroCycle> {
        let inv = lambda.invert()?;
        let mut out = ZeroCycle::zero();
        for ((x, b), c) in &self.terms {
            out.add(*c, x.mul(&inv), b.clone());
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms `(coeff, x, b)` in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = (i64, &RadMonomial, &Rational)> {
        self.terms.iter().map(|((x, b), c)| (*c, x, b))
    }

    /// Total multiplicity `Σ coeff`.
    pub fn degree(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.iter()
                .map(|(c, x, b)| {
                    json!({
                        "coeff": c,
                        "x": {"q": x.coefficient().to_string(), "c": x.radicand().to_string()},
                        "b": b.to_string(),
                    })
                })
                .collect(),
        )
    }
}

impl std::ops::Add for &ZeroCycle {
    type Output = ZeroCycle;
    fn add(self, rhs: &ZeroCycle) -> ZeroCycle {
        let mut out = self.clone();
        out.add_scaled(1, rhs);
        out
    }
}

impl std::ops::Sub for &ZeroCycle {
    type Output = ZeroCycle;
    fn sub(self, rhs: &ZeroCycle) -> ZeroCycle {
        let mut out = self.clone();
        out.add_scaled(-1, rhs);
        out
    }
}

impl std::ops::Neg for &ZeroCycle {
    type Output = ZeroCycle;
    fn neg(self) -> ZeroCycle {
        self.times(-1)
    }
}

impl fmt::Display for ZeroCycle {
    /// Signed sum such as `+1·(1, 2) - 2·(-6, 4)`; the empty cycle prints `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (c, x, b)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            let sign = if c < 0 { '-' } else { '+' };
            write!(f, "{sign}{}·({x}, {b})", c.abs())?;
        }
        Ok(())
    }
}

fn face_value(target: Target) -> &'static str {
    match target {
        Target::Zero => "0",
        Target::Infinity => "inf",
    }
}

/// The intersection `∂ᵢʲ c` of a curve with the face `{tᵢ = j}`.
pub fn face_points(c: &ParamCurve, coord: Coord, target: Target) -> Result<ZeroCycle> {
    let ti = c.t(coord);
    if ti.is_constant() {
        // a nonzero rational constant never meets 0 or ∞
        return Ok(ZeroCycle::zero());
    }
    let other = c.t(coord.other());
    let mut out = ZeroCycle::zero();
    for (p, mult) in zeros_poles(ti, target)?.iter() {
        let x = c.x().eval(p);
        let s = other.eval(p);
        let (PointP1::Finite(xv), false) = (&x, s.is_value(&Rational::one())) else {
            continue;
        };
        let reject = |reason: &str| Error::InadmissibleBoundaryPoint {
            coord: coord.index(),
            value: face_value(target),
            point: p.clone(),
            reason: reason.to_string(),
        };
        if xv.is_zero() {
            return Err(reject("x = 0 there"));
        }
        let PointP1::Finite(sv) = s else {
            return Err(reject(&format!("{} = inf there", coord.other())));
        };
        if sv.is_zero() {
            return Err(reject(&format!("{} = 0 there", coord.other())));
        }
        out.add(mult, RadMonomial::rational(xv.clone()), sv);
    }
    Ok(out)
}

/// `∂c = -(∂₁⁰ - ∂₁^∞) + (∂₂⁰ - ∂₂^∞)` for a single unscaled curve.
pub fn curve_boundary(c: &ParamCurve) -> Result<ZeroCycle> {
    let mut out = ZeroCycle::zero();
    for coord in Coord::ALL {
        let sign = if coord == Coord::T1 { -1 } else { 1 };
        out.add_scaled(sign, &face_points(c, coord, Target::Zero)?);
        out.add_scaled(-sign, &face_points(c, coord, Target::Infinity)?);
    }
    Ok(out)
}

/// `∂z`, using `∂(λ * C) = λ ⋆ ∂C` for the star scales.
pub fn boundary(z: &CycleSum) -> Result<ZeroCycle> {
    let mut out = ZeroCycle::zero();
    for term in z.terms() {
        let face = curve_boundary(&term.curve)?.star(&term.scale)?;
        out.add_scaled(term.coeff, &face);
    }
    Ok(out)
}

/// Outcome of [`check_admissible`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AdmissibilityReport {
    /// The curve lies in no face and misses every codimension-2 face at
    /// finite `x`.
    pub proper_faces: bool,
    /// For each parameter point over `x = 0`, the coordinates `tᵢ` whose
    /// modulus condition `ord(tᵢ - 1) ≥ 2·ord(x)` holds there.
    pub modulus: BTreeMap<PointP1, BTreeSet<Coord>>,
    pub violations: Vec<String>,
    /// Non-fatal remarks, e.g. a parametrization not evidently birational.
    pub warnings: Vec<String>,
}

impl AdmissibilityReport {
    pub fn is_admissible(&self) -> bool {
        self.proper_faces && self.violations.is_empty()
    }

    pub fn to_json(&self) -> Value {
        let modulus: serde_json::Map<String, Value> = self
            .modulus
            .iter()
            .map(|(p, set)| {
                let names: Vec<String> = set.iter().map(|c| c.to_string()).collect();
                (p.to_string(), json!(names))
            })
            .collect();
        json!({
            "admissible": self.is_admissible(),
            "proper_faces": self.proper_faces,
            "modulus": modulus,
            "violations": self.violations,
            "warnings": self.warnings,
        })
    }
}

fn in_zero_or_inf(v: &PointP1) -> bool {
    matches!(v, PointP1::Infinity) || v.is_value(&Rational::zero())
}

/// Checks properness of face intersections, membership of the four face
/// 0-cycles in `c₀(◊₁)`, and the modulus condition at every point over
/// `x = 0`.
pub fn check_admissible(c: &ParamCurve) -> Result<AdmissibilityReport> {
    let mut report = AdmissibilityReport {
        proper_faces: true,
        ..Default::default()
    };
    if !c.is_evidently_birational() {
        report
            .warnings
            .push("no coordinate has degree 1; the parameter line is assumed to be the normalization".into());
    }

    // codimension-2 faces: t₁ and t₂ both in {0, ∞} at a point with finite x
    for target in [Target::Zero, Target::Infinity] {
        let t1 = c.t(Coord::T1);
        if t1.is_constant() {
            continue;
        }
        for p in zeros_poles(t1, target)?.support() {
            if c.x().eval(p).is_finite() && in_zero_or_inf(&c.t(Coord::T2).eval(p)) {
                report.proper_faces = false;
                report.violations.push(format!(
                    "meets the codimension-2 face t1 = {}, t2 = {} at t = {p}",
                    face_value(target),
                    c.t(Coord::T2).eval(p)
                ));
            }
        }
    }

    for coord in Coord::ALL {
        for target in [Target::Zero, Target::Infinity] {
            match face_points(c, coord, target) {
                Ok(_) => {}
                Err(e @ Error::InadmissibleBoundaryPoint { .. }) => report.violations.push(e.to_string()),
                Err(e) => return Err(e),
            }
        }
    }

    if !c.x().is_constant() {
        for (p, ord_x) in zeros_poles(c.x(), Target::Zero)?.iter() {
            let holds = modulus_branches(c, p, ord_x)?;
            if holds.is_empty() {
                report
                    .violations
                    .push(format!("modulus condition fails at t = {p}"));
            }
            report.modulus.insert(p.clone(), holds);
        }
    }
    Ok(report)
}

/// `ord_p(t - 1)`, with `t - 1` never identically zero on a valid curve.
fn ord_minus_one(t: &RatFunc, p: &PointP1) -> Result<i64> {
    ord_at(&(t - &RatFunc::one()), p)
}

/// The coordinates whose modulus condition holds at `p`, where `ord_p(x) =
/// ord_x ≥ 1`.
pub(crate) fn modulus_branches(c: &ParamCurve, p: &PointP1, ord_x: i64) -> Result<BTreeSet<Coord>> {
    let mut holds = BTreeSet::new();
    for coord in Coord::ALL {
        if ord_minus_one(c.t(coord), p)? >= 2 * ord_x {
            holds.insert(coord);
        }
    }
    Ok(holds)
}

/// Admissibility of every curve of a cycle sum, in term order.
pub fn check_cycle(z: &CycleSum) -> Result<Vec<(ParamCurve, AdmissibilityReport)>> {
    let mut out: Vec<(ParamCurve, AdmissibilityReport)> = Vec::new();
    for curve in z.curves() {
        if out.iter().any(|(c, _)| c == curve) {
            continue;
        }
        out.push((curve.clone(), check_admissible(curve)?));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat, Poly};
    use crate::cycle::catalog;

    fn only_curve(z: &CycleSum) -> ParamCurve {
        z.terms()[0].curve.clone()
    }

    #[test]
    fn gamma_faces() {
        let g2 = only_curve(&catalog::gamma2());
        let z = face_points(&g2, Coord::T1, Target::Zero).unwrap();
        assert_eq!(z, ZeroCycle::rational_point(1, int(-6), int(-8)));
        let g1 = only_curve(&catalog::gamma1());
        let z = face_points(&g1, Coord::T2, Target::Zero).unwrap();
        assert_eq!(z, ZeroCycle::rational_point(2, int(2), int(2)));
    }

    #[test]
    fn c2_face_t1_zero_is_dropped() {
        let c = only_curve(&catalog::make_c2(&rat(1, 2), &rat(2, 3), &rat(3, 2)).unwrap());
        assert!(face_points(&c, Coord::T1, Target::Zero).unwrap().is_zero());
    }

    #[test]
    fn c1_boundary_formula() {
        let (a1, a2, b) = (rat(1, 3), rat(2, 5), int(7));
        let z = boundary(&catalog::make_c1(&a1, &a2, &b).unwrap()).unwrap();
        let mut want = ZeroCycle::zero();
        want.add(-1, RadMonomial::rational(a1.recip()), b.clone());
        want.add(-1, RadMonomial::rational(a2.recip()), b.clone());
        want.add(1, RadMonomial::rational((&a1 + &a2).recip()), b);
        assert_eq!(z, want);
    }

    #[test]
    fn gamma_bar1_boundary() {
        let z = boundary(&catalog::gamma_bar1()).unwrap();
        assert_eq!(z.to_string(), "+1·(1, 2)");
    }

    #[test]
    fn modulus_examples() {
        let g2 = only_curve(&catalog::gamma2());
        let r = check_admissible(&g2).unwrap();
        assert!(r.is_admissible());
        assert_eq!(r.modulus.len(), 1);
        assert_eq!(
            r.modulus[&PointP1::Finite(int(0))],
            BTreeSet::from([Coord::T2])
        );

        let c2 = only_curve(&catalog::make_c2(&int(3), &int(2), &int(5)).unwrap());
        let r = check_admissible(&c2).unwrap();
        assert!(r.is_admissible() && r.modulus.is_empty());

        let bad = ParamCurve::new(
            RatFunc::t(),
            RatFunc::from_poly(Poly::from_coeffs(vec![int(1), int(1)])),
            RatFunc::constant(int(5)),
        )
        .unwrap();
        let r = check_admissible(&bad).unwrap();
        assert!(!r.is_admissible());
        assert!(r.modulus[&PointP1::Finite(int(0))].is_empty());
    }

    #[test]
    fn rejects_points_on_x_zero() {
        // (t, t, 2): the face t1 = 0 meets x = 0
        let c = ParamCurve::new(RatFunc::t(), RatFunc::t(), RatFunc::constant(int(2))).unwrap();
        assert!(matches!(
            face_points(&c, Coord::T1, Target::Zero),
            Err(Error::InadmissibleBoundaryPoint { coord: 1, .. })
        ));
        let r = check_admissible(&c).unwrap();
        assert!(!r.is_admissible());
    }

    #[test]
    fn improper_codim_two() {
        // (1 + t, t, t): t1 = t2 = 0 at t = 0 with x = 1
        let x = RatFunc::from_poly(Poly::from_coeffs(vec![int(1), int(1)]));
        let c = ParamCurve::new(x, RatFunc::t(), RatFunc::t()).unwrap();
        let r = check_admissible(&c).unwrap();
        assert!(!r.proper_faces);
    }

    #[test]
    fn star_on_zero_cycles() {
        let z = ZeroCycle::rational_point(1, int(1), int(2));
        let alpha = RadMonomial::cbrt(int(-2)).unwrap();
        let s = z.star(&alpha).unwrap();
        let (c, x, _) = s.iter().next().unwrap();
        assert_eq!(c, 1);
        assert_eq!(x, &alpha.invert().unwrap());
        assert_eq!(s.star(&alpha.invert().unwrap()).unwrap(), z);
    }
}
