//! Named cycles: the families `C₁`, `C₂`, the curves `Γ₁`, `Γ₂`, their
//! corrected sums, `Q(a)`, `Q̃(a)`, the generators `C_a`, and the
//! four-term combinations `D(a, b)`.
//!
//! The `*_fixed` constructors are amended versions of `Γ̄₂`, `Γ₃`, `Q̃(a)`,
//! `C_a` and `D(a, b)`. The literal constructors keep the published
//! correction lists term by term, including the terms that do not make
//! their boundaries telescope; the amended ones change exactly those terms
//! (and use the scale `∛2` instead of `∛(-2)` in `C_a`), so both can be
//! evaluated side by side.

use num_traits::{One, Signed, Zero};

use super::{CycleSum, ParamCurve};
use crate::arith::{int, rat, Poly, RatFunc, Rational};
use crate::error::{Error, Result};
use crate::radical::RadMonomial;

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}

/// `1 - a·t` as a polynomial.
fn one_minus(a: &Rational) -> Poly {
    Poly::from_coeffs(vec![Rational::one(), -a.clone()])
}

fn check_b(name: &str, b: &Rational) -> Result<()> {
    if b.is_zero() || b.is_one() {
        return Err(invalid(format!("{name} = {b} must lie outside {{0, 1}}")));
    }
    Ok(())
}

/// `C₁^{(a₁,a₂),b}`: `(t, (1-a₁t)(1-a₂t)/(1-(a₁+a₂)t), b)` when
/// `a₁a₂(a₁+a₂) ≠ 0`, `(t, 1-a²t², b)` when `a = a₁ = -a₂ ≠ 0`, and zero when
/// `a₁a₂ = 0`.
pub fn make_c1(a1: &Rational, a2: &Rational, b: &Rational) -> Result<CycleSum> {
    check_b("b", b)?;
    if a1.is_zero() || a2.is_zero() {
        return Ok(CycleSum::zero());
    }
    let sum = a1 + a2;
    let t1 = if !sum.is_zero() {
        RatFunc::from_factors(
            &[(one_minus(a1), 1), (one_minus(a2), 1)],
            &[(one_minus(&sum), 1)],
        )?
    } else {
        RatFunc::from_factors(&[(one_minus(a1), 1), (one_minus(&-a1.clone()), 1)], &[])?
    };
    let curve = ParamCurve::new(RatFunc::t(), t1, RatFunc::constant(b.clone()))?;
    Ok(CycleSum::from_curve(curve))
}

/// `C₂^{a,(b₁,b₂)}`: `(1/a, t, (b₁t - b₁b₂)/(t - b₁b₂))`, zero when `a = 0`.
pub fn make_c2(a: &Rational, b1: &Rational, b2: &Rational) -> Result<CycleSum> {
    check_b("b1", b1)?;
    check_b("b2", b2)?;
    if a.is_zero() {
        return Ok(CycleSum::zero());
    }
    let p = b1 * b2;
    let num = Poly::from_coeffs(vec![-p.clone(), b1.clone()]);
    let den = Poly::linear_root(&p);
    let t2 = RatFunc::from_factors(&[(num, 1)], &[(den, 1)])?;
    let curve = ParamCurve::new(RatFunc::constant(a.recip()), RatFunc::t(), t2)?;
    Ok(CycleSum::from_curve(curve))
}

/// A correction term `k · C₁^{(a₁,a₂),b}` or `k · C₂^{a,(b₁,b₂)}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Piece {
    C1 { k: i64, a1: Rational, a2: Rational, b: Rational },
    C2 { k: i64, a: Rational, b1: Rational, b2: Rational },
}

impl Piece {
    pub fn c1(k: i64, a1: Rational, a2: Rational, b: Rational) -> Piece {
        Piece::C1 { k, a1, a2, b }
    }

    pub fn c2(k: i64, a: Rational, b1: Rational, b2: Rational) -> Piece {
        Piece::C2 { k, a, b1, b2 }
    }

    pub fn coeff(&self) -> i64 {
        match self {
            Piece::C1 { k, .. } | Piece::C2 { k, .. } => *k,
        }
    }

    /// The unit cycle (coefficient dropped).
    pub fn cycle(&self) -> Result<CycleSum> {
        match self {
            Piece::C1 { a1, a2, b, .. } => make_c1(a1, a2, b),
            Piece::C2 { a, b1, b2, .. } => make_c2(a, b1, b2),
        }
    }

    pub fn to_cycle(&self) -> Result<CycleSum> {
        Ok(self.cycle()?.times(self.coeff()))
    }
}

impl std::fmt::Display for Piece {
    /// The unit term in expression syntax, e.g. `C2(1/2;2/3,3/2)`.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Piece::C1 { a1, a2, b, .. } => write!(f, "C1({a1},{a2};{b})"),
            Piece::C2 { a, b1, b2, .. } => write!(f, "C2({a};{b1},{b2})"),
        }
    }
}

pub fn assemble(base: CycleSum, pieces: &[Piece]) -> Result<CycleSum> {
    let mut z = base;
    for p in pieces {
        z.add_scaled(p.coeff(), &p.cycle()?);
    }
    Ok(z)
}

/// `Γ₁ = (t, t, (1 - t/2)²/(1 - t))`.
pub fn gamma1() -> CycleSum {
    let t2 = RatFunc::from_factors(&[(one_minus(&rat(1, 2)), 2)], &[(one_minus(&int(1)), 1)])
        .expect("valid");
    CycleSum::from_curve(ParamCurve::new(RatFunc::t(), RatFunc::t(), t2).expect("valid"))
}

/// `Γ₂ = (t, 1 + t/6, 1 - t²/4)`.
pub fn gamma2() -> CycleSum {
    let t1 = RatFunc::from_poly(one_minus(&rat(-1, 6)));
    let t2 = RatFunc::from_factors(
        &[(one_minus(&rat(1, 2)), 1), (one_minus(&rat(-1, 2)), 1)],
        &[],
    )
    .expect("valid");
    CycleSum::from_curve(ParamCurve::new(RatFunc::t(), t1, t2).expect("valid"))
}

/// `Γ̄₁ = Γ₁ + C₁^{(1/2,1/2),2}`.
pub fn gamma_bar1() -> CycleSum {
    assemble(gamma1(), &[Piece::c1(1, rat(1, 2), rat(1, 2), int(2))]).expect("valid")
}

/// Correction list of `Γ̄₂` exactly as published.
pub fn gamma_bar2_pieces() -> Vec<Piece> {
    let h = rat(1, 2);
    vec![
        Piece::c1(1, -h.clone(), h.clone(), rat(2, 3)),
        Piece::c1(3, rat(-1, 3), rat(-1, 3), int(-1)),
        Piece::c1(-1, rat(-1, 6), rat(-1, 6), int(2)),
        Piece::c1(-1, rat(-1, 6), rat(-1, 3), int(2)),
        Piece::c1(-1, -h.clone(), h.clone(), int(2)),
        Piece::c1(1, h.clone(), h.clone(), int(2)),
        Piece::c2(-1, rat(-1, 6), int(4), int(-2)),
        Piece::c2(-1, rat(-1, 6), int(-2), int(-2)),
        Piece::c2(1, h.clone(), rat(2, 3), rat(3, 2)),
        Piece::c2(-3, rat(-1, 6), int(2), int(-1)),
        Piece::c2(-3, rat(-1, 3), int(-1), int(-1)),
        Piece::c2(1, h, rat(4, 3), rat(3, 2)),
    ]
}

/// Amended correction list of `Γ̄₂`: `3C₁^{(-1/12,-1/12),-1}` and
/// `+3C₂^{-1/12,(-1,-1)}` replace `3C₁^{(-1/3,-1/3),-1}` and
/// `-3C₂^{-1/3,(-1,-1)}`, and `C₂^{1/2,(4/3,3/2)}` enters with sign `-`.
pub fn gamma_bar2_fixed_pieces() -> Vec<Piece> {
    let mut pieces = gamma_bar2_pieces();
    pieces[1] = Piece::c1(3, rat(-1, 12), rat(-1, 12), int(-1));
    pieces[10] = Piece::c2(3, rat(-1, 12), int(-1), int(-1));
    pieces[11] = Piece::c2(-1, rat(1, 2), rat(4, 3), rat(3, 2));
    pieces
}

pub fn gamma_bar2() -> CycleSum {
    assemble(gamma2(), &gamma_bar2_pieces()).expect("valid")
}

pub fn gamma_bar2_fixed() -> CycleSum {
    assemble(gamma2(), &gamma_bar2_fixed_pieces()).expect("valid")
}

/// `Γ₃ = Γ̄₁ - Γ̄₂`.
pub fn gamma3() -> CycleSum {
    &gamma_bar1() - &gamma_bar2()
}

pub fn gamma3_fixed() -> CycleSum {
    &gamma_bar1() - &gamma_bar2_fixed()
}

/// `Q(a) = (t, 1 + t/2, 1 - a²t²/4)`. For `a = ±1` the face `t₁ = 0` (at
/// `t = -2`) would meet `t₂ = 0`, so those values are rejected.
pub fn q_cycle(a: &Rational) -> Result<CycleSum> {
    if a.is_zero() || a.abs().is_one() {
        return Err(invalid(format!("Q(a) needs a outside {{0, 1, -1}}, got {a}")));
    }
    let half_a = a / int(2);
    let t1 = RatFunc::from_poly(one_minus(&rat(-1, 2)));
    let t2 = RatFunc::from_factors(&[(one_minus(&half_a), 1), (one_minus(&-half_a.clone()), 1)], &[])?;
    Ok(CycleSum::from_curve(ParamCurve::new(RatFunc::t(), t1, t2)?))
}

/// Whether `a` lies in the parameter domain of `Q̃(a)` and `C_a`:
/// `a ∉ {0, 1, 1/2, -1/2}`. At `a = -1/2` two correction terms of `Q̃(a)`
/// would need `b = 1`.
pub fn in_generator_domain(a: &Rational) -> bool {
    !(a.is_zero() || a.is_one() || *a == rat(1, 2) || *a == rat(-1, 2))
}

fn check_generator_domain(name: &str, a: &Rational) -> Result<()> {
    if in_generator_domain(a) {
        Ok(())
    } else {
        Err(invalid(format!("{name} needs a outside {{0, 1, 1/2, -1/2}}, got {a}")))
    }
}

/// Correction list of `Q̃(a)` exactly as published (with `c = 1 - 2a`).
pub fn q_tilde_pieces(a: &Rational) -> Result<Vec<Piece>> {
    check_generator_domain("Qtilde(a)", a)?;
    let one = Rational::one();
    let two = int(2);
    let h = rat(1, 2);
    let q = rat(1, 4);
    let c = &one - &two * a;
    let c2 = &c / &two;
    let m2a = -(&two * a);
    let one_minus_a = &one - a;
    Ok(vec![
        Piece::c1(1, c2.clone(), -c2.clone(), &one - c.recip()),
        Piece::c1(1, -q.clone(), -q.clone(), -one.clone()),
        Piece::c1(1, h.clone(), c2.clone(), &two - &two * a),
        Piece::c1(-1, -h.clone(), h.clone(), &two - &two * a),
        Piece::c1(-1, -h.clone(), c2.clone(), m2a.clone()),
        Piece::c1(1, a.clone(), one_minus_a.clone(), two.clone()),
        Piece::c1(-1, -a.clone(), a.clone(), m2a.clone()),
        Piece::c1(-1, a / &two, a / &two, -one.clone()),
        Piece::c2(1, c2.clone(), &one - c.recip(), &c / &m2a),
        Piece::c2(1, c2.clone(), &one + c.recip(), &c / &m2a),
        Piece::c2(1, c2.clone(), &two - &two * a, m2a.recip()),
        Piece::c2(1, -h.clone(), -one.clone(), m2a.clone()),
        Piece::c2(1, -q, -one.clone(), -one.clone()),
        Piece::c2(-1, -h, &two * a, &two - &two * a),
        Piece::c2(-1, c2, m2a.recip(), m2a.clone()),
        Piece::c2(1, a.clone(), a.clone(), -two.clone()),
        Piece::c2(1, one_minus_a.clone(), one_minus_a, two.clone()),
        Piece::c2(1, a.clone(), two, -one.clone()),
        Piece::c2(-1, a / int(2), -one.clone(), -one),
    ])
}

/// Amended list: `C₂^{c/2,(1+1/c, c/(-2a))}` and `C₂^{-1/2,(-1,-2a)}` enter
/// with sign `-`.
pub fn q_tilde_fixed_pieces(a: &Rational) -> Result<Vec<Piece>> {
    let mut pieces = q_tilde_pieces(a)?;
    for idx in [9, 11] {
        if let Piece::C2 { k, .. } = &mut pieces[idx] {
            *k = -*k;
        }
    }
    Ok(pieces)
}

pub fn q_tilde(a: &Rational) -> Result<CycleSum> {
    let c = Rational::one() - int(2) * a;
    assemble(q_cycle(&c)?, &q_tilde_pieces(a)?)
}

pub fn q_tilde_fixed(a: &Rational) -> Result<CycleSum> {
    let c = Rational::one() - int(2) * a;
    assemble(q_cycle(&c)?, &q_tilde_fixed_pieces(a)?)
}

/// `α = ∛(-2)`.
pub fn alpha() -> RadMonomial {
    RadMonomial::cbrt(int(-2)).expect("nonzero")
}

/// `α′ = ∛(-18/7)`.
pub fn alpha_prime() -> RadMonomial {
    RadMonomial::cbrt(rat(-18, 7)).expect("nonzero")
}

/// `∛2`, the scale for which `R₂(C_a) = a(1 - a)`.
pub fn alpha_fixed() -> RadMonomial {
    RadMonomial::cbrt(int(2)).expect("nonzero")
}

/// `C_a = α * (Q̃(a) - Γ̄₁) - α′ * Γ₃`.
pub fn c_a(a: &Rational) -> Result<CycleSum> {
    check_generator_domain("Ca(a)", a)?;
    let head = (&q_tilde(a)? - &gamma_bar1()).star(&alpha())?;
    let tail = gamma3().star(&alpha_prime())?;
    Ok(&head - &tail)
}

/// `∛2 * (Q̃ᶠ(a) - Γ̄₁) - α′ * Γ₃ᶠ` with the amended lists.
pub fn c_a_fixed(a: &Rational) -> Result<CycleSum> {
    check_generator_domain("CaFixed(a)", a)?;
    let head = (&q_tilde_fixed(a)? - &gamma_bar1()).star(&alpha_fixed())?;
    let tail = gamma3_fixed().star(&alpha_prime())?;
    Ok(&head - &tail)
}

/// The four generator parameters of `D(a, b)`: `a`, `b`, `b/a`,
/// `(1-b)/(1-a)`, or an error if one leaves the generator domain.
pub fn four_term_arguments(a: &Rational, b: &Rational) -> Result<[Rational; 4]> {
    check_generator_domain("D(a,b)", a)?;
    check_generator_domain("D(a,b)", b)?;
    if a == b {
        return Err(invalid("D(a,b) needs a != b"));
    }
    let ratio = b / a;
    let co_ratio = (Rational::one() - b) / (Rational::one() - a);
    check_generator_domain("D(a,b) argument b/a", &ratio)?;
    check_generator_domain("D(a,b) argument (1-b)/(1-a)", &co_ratio)?;
    Ok([a.clone(), b.clone(), ratio, co_ratio])
}

pub fn in_four_term_domain(a: &Rational, b: &Rational) -> bool {
    four_term_arguments(a, b).is_ok()
}

fn four_term(a: &Rational, b: &Rational, gen: fn(&Rational) -> Result<CycleSum>) -> Result<CycleSum> {
    let [a, b, ratio, co_ratio] = four_term_arguments(a, b)?;
    let mut z = gen(&a)?;
    z.add_scaled(-1, &gen(&b)?);
    z.add_scaled(1, &gen(&ratio)?.star_rational(&a)?);
    z.add_scaled(1, &gen(&co_ratio)?.star_rational(&(Rational::one() - &a))?);
    Ok(z)
}

/// `D(a, b) = C_a - C_b + a * C_{b/a} + (1 - a) * C_{(1-b)/(1-a)}`.
pub fn d_cycle(a: &Rational, b: &Rational) -> Result<CycleSum> {
    four_term(a, b, c_a)
}

pub fn d_cycle_fixed(a: &Rational, b: &Rational) -> Result<CycleSum> {
    four_term(a, b, c_a_fixed)
}

/// A named catalog constructor, for listings.
#[derive(Clone, Copy, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub syntax: &'static str,
    pub definition: &'static str,
    pub anchor: &'static str,
}

pub const CATALOG: &[CatalogEntry] = &[
    CatalogEntry {
        name: "C1",
        syntax: "C1(a1,a2;b)",
        definition: "(t, (1-a1 t)(1-a2 t)/(1-(a1+a2)t), b); (t, 1-a^2t^2, b) if a1=-a2; 0 if a1 a2 = 0",
        anchor: "R2(C1) = 0; dC1 = -(1/a1,b) - (1/a2,b) + (1/(a1+a2),b)",
    },
    CatalogEntry {
        name: "C2",
        syntax: "C2(a;b1,b2)",
        definition: "(1/a, t, (b1 t - b1 b2)/(t - b1 b2)); 0 if a = 0",
        anchor: "R2(C2) = 0; dC2 = (1/a,b1) + (1/a,b2) - (1/a,b1 b2)",
    },
    CatalogEntry {
        name: "Gamma1",
        syntax: "Gamma1",
        definition: "(t, t, (1-t/2)^2/(1-t))",
        anchor: "R2(Gamma1) = 1/4",
    },
    CatalogEntry {
        name: "Gamma2",
        syntax: "Gamma2",
        definition: "(t, 1+t/6, 1-t^2/4)",
        anchor: "R2(Gamma2) = -1/24",
    },
    CatalogEntry {
        name: "GammaBar1",
        syntax: "GammaBar1",
        definition: "Gamma1 + C1(1/2,1/2;2)",
        anchor: "R2(GammaBar1) = 1/4; d(GammaBar1) = (1,2)",
    },
    CatalogEntry {
        name: "GammaBar2",
        syntax: "GammaBar2",
        definition: "Gamma2 + 6 C1-terms + 6 C2-terms (published list)",
        anchor: "R2(GammaBar2) = -1/24; d(GammaBar2) = (1,2)",
    },
    CatalogEntry {
        name: "Gamma3",
        syntax: "Gamma3",
        definition: "GammaBar1 - GammaBar2",
        anchor: "d(Gamma3) = 0; R2(Gamma3) = 7/24",
    },
    CatalogEntry {
        name: "Q",
        syntax: "Q(a)",
        definition: "(t, 1+t/2, 1-a^2t^2/4)",
        anchor: "R2(Q(a)) = -a^2/8",
    },
    CatalogEntry {
        name: "Qtilde",
        syntax: "Qtilde(a)",
        definition: "Q(1-2a) + 8 C1-terms + 11 C2-terms (published list)",
        anchor: "d(Qtilde(a)) = (1/a,a) + (1/(1-a),1-a) + (1,2)",
    },
    CatalogEntry {
        name: "Ca",
        syntax: "Ca(a)",
        definition: "cbrt(-2)*(Qtilde(a) - GammaBar1) - cbrt(-18/7)*Gamma3",
        anchor: "R2(Ca) = a(1-a); dCa = alpha*((1/a,a) + (1/(1-a),1-a))",
    },
    CatalogEntry {
        name: "D",
        syntax: "D(a,b)",
        definition: "Ca - Cb + a*C(b/a) + (1-a)*C((1-b)/(1-a))",
        anchor: "D(a,b) = 0 in TP^cy(k): R2(D) = 0 and g(dD) = 0",
    },
    CatalogEntry {
        name: "GammaBar2Fixed",
        syntax: "GammaBar2Fixed",
        definition: "GammaBar2 with 3*C1(-1/12,-1/12;-1) + 3*C2(-1/12;-1,-1) - C2(1/2;4/3,3/2)",
        anchor: "d(GammaBar2Fixed) = (1,2)",
    },
    CatalogEntry {
        name: "Gamma3Fixed",
        syntax: "Gamma3Fixed",
        definition: "GammaBar1 - GammaBar2Fixed",
        anchor: "d(Gamma3Fixed) = 0; R2(Gamma3Fixed) = 7/24",
    },
    CatalogEntry {
        name: "QtildeFixed",
        syntax: "QtildeFixed(a)",
        definition: "Qtilde(a) with C2((1-2a)/2; 1+1/(1-2a), (1-2a)/(-2a)) and C2(-1/2;-1,-2a) negated",
        anchor: "d(QtildeFixed(a)) = (1/a,a) + (1/(1-a),1-a) + (1,2)",
    },
    CatalogEntry {
        name: "CaFixed",
        syntax: "CaFixed(a)",
        definition: "cbrt(2)*(QtildeFixed(a) - GammaBar1) - cbrt(-18/7)*Gamma3Fixed",
        anchor: "R2 = a(1-a); boundary = cbrt(2)*((1/a,a) + (1/(1-a),1-a))",
    },
    CatalogEntry {
        name: "DFixed",
        syntax: "DFixed(a,b)",
        definition: "four-term combination of CaFixed",
        anchor: "R2(DFixed) = 0 and g(dDFixed) = 0",
    },
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c1_branches() {
        assert!(make_c1(&int(0), &int(5), &int(7)).unwrap().is_empty());
        let z = make_c1(&rat(1, 2), &rat(1, 2), &int(2)).unwrap();
        let curve = &z.terms()[0].curve;
        assert_eq!(curve, &gamma1_like_t2());
        let z = make_c1(&int(3), &int(-3), &int(5)).unwrap();
        let t1 = z.terms()[0].curve.t1();
        assert_eq!(t1, &RatFunc::from_poly(Poly::from_coeffs(vec![int(1), int(0), int(-9)])));
        assert!(make_c1(&int(1), &int(1), &int(1)).is_err());
        assert!(make_c1(&int(1), &int(1), &int(0)).is_err());
    }

    /// `(t, (1-t/2)²/(1-t), 2)`
    fn gamma1_like_t2() -> ParamCurve {
        let t1 = RatFunc::new(
            Poly::from_coeffs(vec![int(1), int(-1), rat(1, 4)]),
            Poly::from_coeffs(vec![int(1), int(-1)]),
        )
        .unwrap();
        ParamCurve::new(RatFunc::t(), t1, RatFunc::constant(int(2))).unwrap()
    }

    #[test]
    fn c2_substitution() {
        assert!(make_c2(&int(0), &int(2), &int(3)).unwrap().is_empty());
        let z = make_c2(&rat(1, 2), &rat(2, 3), &rat(3, 2)).unwrap();
        let c = &z.terms()[0].curve;
        assert_eq!(c.x(), &RatFunc::constant(int(2)));
        let want = RatFunc::new(
            Poly::from_coeffs(vec![int(-1), rat(2, 3)]),
            Poly::from_coeffs(vec![int(-1), int(1)]),
        )
        .unwrap();
        assert_eq!(c.t2(), &want);
        let z = make_c2(&rat(-1, 6), &int(4), &int(-2)).unwrap();
        let c = &z.terms()[0].curve;
        assert_eq!(c.x(), &RatFunc::constant(int(-6)));
        let want = RatFunc::new(
            Poly::from_coeffs(vec![int(8), int(4)]),
            Poly::from_coeffs(vec![int(8), int(1)]),
        )
        .unwrap();
        assert_eq!(c.t2(), &want);
        assert!(make_c2(&int(1), &int(1), &int(2)).is_err());
    }

    #[test]
    fn gamma3_term_count() {
        let g3 = gamma3();
        assert_eq!(g3.len(), 13);
        let c1_like = g3
            .terms()
            .iter()
            .filter(|t| t.curve.t2().is_constant() && t.curve.x() == &RatFunc::t())
            .count();
        let c2_like = g3.terms().iter().filter(|t| t.curve.x().is_constant()).count();
        assert_eq!((c1_like, c2_like), (5, 6));
    }

    #[test]
    fn qtilde_contains_expected_c1() {
        let z = q_tilde(&rat(1, 3)).unwrap();
        let c1 = make_c1(&rat(1, 3), &rat(2, 3), &int(2)).unwrap();
        assert!(z.terms().iter().any(|t| t.curve == c1.terms()[0].curve && t.coeff == 1));
        assert!(q_tilde(&rat(1, 2)).is_err());
        assert!(q_tilde(&rat(-1, 2)).is_err());
        assert!(q_tilde(&int(1)).is_err());
    }

    #[test]
    fn ca_scales() {
        let z = c_a(&int(2)).unwrap();
        let alpha = RadMonomial::normalize(int(1), int(-2)).unwrap();
        let alpha_p = RadMonomial::normalize(int(1), rat(-18, 7)).unwrap();
        assert!(z.terms().iter().all(|t| t.scale == alpha || t.scale == alpha_p));
        assert_eq!(alpha.coefficient(), &int(-1));
        let g3_terms = z.terms().iter().filter(|t| t.scale == alpha_p).count();
        assert_eq!(g3_terms, gamma3().len());
    }

    #[test]
    fn catalog_curves_are_birational() {
        let mut all = vec![gamma_bar1(), gamma_bar2(), gamma3(), gamma3_fixed()];
        all.push(q_tilde(&rat(2, 7)).unwrap());
        all.push(d_cycle(&rat(2, 3), &rat(3, 5)).unwrap_or_default());
        for z in &all {
            for c in z.curves() {
                assert!(c.is_evidently_birational(), "{c}");
            }
        }
    }

    #[test]
    fn four_term_domain() {
        assert!(d_cycle(&int(2), &int(2)).is_err());
        assert!(d_cycle(&int(2), &int(3)).is_ok());
        // b/a = 1/2
        assert!(d_cycle(&int(2), &int(1)).is_err());
        assert!(in_four_term_domain(&rat(1, 3), &rat(1, 4)));
    }
}
