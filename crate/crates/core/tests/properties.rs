//! Property-based tests over random rationals, rational functions and
//! radical monomials.

use additive_chow::arith::{int, laurent_coeffs, ord_at, residue_at, zeros_poles, Target};
use additive_chow::cycle::catalog;
use additive_chow::dsl::{from_cycle_sum, parse};
use additive_chow::*;
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=40).prop_map(|(n, d)| additive_chow::arith::rat(n, d))
}

fn nonzero() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |q| q != &additive_chow::arith::int(0))
}

fn monomial() -> impl Strategy<Value = RadMonomial> {
    (nonzero(), nonzero()).prop_map(|(q, c)| RadMonomial::normalize(q, c).unwrap())
}

/// `k · ∏ (t - r)^e / ∏ (t - s)^f` with rational roots.
fn ratfunc() -> impl Strategy<Value = RatFunc> {
    let side = || prop::collection::vec((rational(), 1u32..=3), 0..=3);
    (side(), side(), nonzero()).prop_map(|(num, den, k)| {
        let f = |v: Vec<(Rational, u32)>| v.into_iter().map(|(r, e)| (Poly::linear_root(&r), e)).collect::<Vec<_>>();
        let r = RatFunc::from_factors(&f(num), &f(den)).unwrap();
        &r * &RatFunc::constant(k)
    })
}

fn point() -> impl Strategy<Value = PointP1> {
    prop_oneof![4 => rational().prop_map(PointP1::Finite), 1 => Just(PointP1::Infinity)]
}

fn catalog_cycle() -> impl Strategy<Value = CycleSum> {
    let a = || rational().prop_filter("generator domain", |a| catalog::in_generator_domain(a) && *a != int(-1));
    prop_oneof![
        Just(catalog::gamma_bar1()),
        Just(catalog::gamma3()),
        a().prop_map(|a| catalog::q_cycle(&a).unwrap()),
        a().prop_map(|a| catalog::c_a_fixed(&a).unwrap()),
        (rational(), rational(), rational().prop_filter("b", |b| b != &int(0) && b != &int(1)))
            .prop_map(|(a1, a2, b)| catalog::make_c1(&a1, &a2, &b).unwrap()),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn residues_sum_to_zero(f in ratfunc()) {
        let poles = zeros_poles(&f, Target::Infinity).unwrap();
        let mut total: Rational = poles.support().filter(|p| p.is_finite()).map(|p| residue_at(&f, p)).sum();
        total += residue_at(&f, &PointP1::Infinity);
        prop_assert_eq!(total, int(0));
    }

    #[test]
    fn ord_is_additive(f in ratfunc(), g in ratfunc(), p in point()) {
        let fg = &f * &g;
        prop_assert_eq!(ord_at(&fg, &p).unwrap(), ord_at(&f, &p).unwrap() + ord_at(&g, &p).unwrap());
    }

    #[test]
    fn laurent_of_product_is_cauchy_product(f in ratfunc(), g in ratfunc(), p in point()) {
        let (vf, vg) = (ord_at(&f, &p).unwrap(), ord_at(&g, &p).unwrap());
        let n = 4;
        let sf = laurent_coeffs(&f, &p, vf, vf + n).unwrap();
        let sg = laurent_coeffs(&g, &p, vg, vg + n).unwrap();
        let sfg = laurent_coeffs(&(&f * &g), &p, vf + vg, vf + vg + n).unwrap();
        for k in 0..=n as usize {
            let conv: Rational = (0..=k).map(|j| &sf[j] * &sg[k - j]).sum();
            prop_assert_eq!(&sfg[k], &conv);
        }
    }

    #[test]
    fn monomial_product_laws(x in monomial(), y in monomial(), z in monomial()) {
        prop_assert_eq!(x.mul(&y), y.mul(&x));
        prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
        prop_assert_eq!(x.cube(), x.mul(&x.mul(&x)).as_rational().cloned().unwrap());
        prop_assert_eq!(x.mul(&y).cube(), x.cube() * y.cube());
    }

    #[test]
    fn monomial_inverse(x in monomial()) {
        prop_assert!(x.invert().unwrap().mul(&x).is_one());
    }

    #[test]
    fn scalar_sum_cancels(x in monomial(), y in monomial()) {
        let s = &RadScalar::from(x.clone()) + &RadScalar::from(y.clone());
        let back = &(&s - &RadScalar::from(y)) - &RadScalar::from(x);
        prop_assert!(back.is_zero());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn star_composes(z in catalog_cycle(), l in monomial(), m in monomial()) {
        prop_assert_eq!(z.star(&l).unwrap().star(&m).unwrap(), z.star(&l.mul(&m)).unwrap());
    }

    #[test]
    fn star_equivariance(z in catalog_cycle(), l in monomial()) {
        let sz = z.star(&l).unwrap();
        prop_assert_eq!(r2(&sz).unwrap(), l.cube() * r2(&z).unwrap());
        let d = boundary(&z).unwrap();
        prop_assert_eq!(boundary(&sz).unwrap(), d.star(&l).unwrap());
        prop_assert_eq!(g_map(&d.star(&l).unwrap()), g_map(&d).scale(&l));
    }

    #[test]
    fn boundary_is_additive(z in catalog_cycle(), w in catalog_cycle()) {
        let mut sum = z.clone();
        sum.add_scaled(1, &w);
        prop_assert_eq!(boundary(&sum).unwrap(), &boundary(&z).unwrap() + &boundary(&w).unwrap());
    }

    #[test]
    fn dsl_round_trip(z in catalog_cycle(), k in -3i64..=3, l in monomial()) {
        let mut e = from_cycle_sum(&z.star(&l).unwrap().times(k.max(1)));
        if e.terms.is_empty() {
            return Ok(());
        }
        prop_assert_eq!(parse(&e.to_string()).unwrap(), e.clone());
        e.terms.truncate(3);
        prop_assert_eq!(parse(&e.to_string()).unwrap(), e);
    }
}

#[test]
fn dsl_round_trip_on_catalog_atoms() {
    for src in [
        "C1(1/2,1/2;2)", "C2(-1/6;4,-2)", "Gamma1", "Gamma2", "Gamma3", "GammaBar1", "GammaBar2",
        "GammaBar2Fixed", "Gamma3Fixed", "Q(1/3)", "Qtilde(2/7)", "QtildeFixed(-3)", "Ca(1/3)",
        "CaFixed(5/2)", "D(2,3)", "DFixed(1/3,1/4)", "curve(t, 1/6*t + 1, -1/4*t^2 + 1)",
    ] {
        let e = parse(src).unwrap();
        assert_eq!(e.to_string(), src);
        let z = e.eval().unwrap();
        assert_eq!(additive_chow::dsl::eval_str(&z.to_string()).unwrap(), z, "{src}");
    }
}
