//! Rational root extraction and zero/pole divisors.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Divisor, PointP1, Poly, RatFunc, Rational};
use crate::error::{Error, Result};

/// Trial-division budget when enumerating rational-root candidates.
const TRIAL_DIVISION_LIMIT: u64 = 2_000_000;

/// Which value of the function a divisor is taken over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    Zero,
    Infinity,
}

fn unsupported(p: &Poly) -> Error {
    Error::UnsupportedFactorization {
        poly: p.to_string(),
        degree: p.deg0(),
    }
}

/// Exact square root of a nonnegative rational, if it exists.
fn rational_sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let (n, d) = (q.numer(), q.denom());
    let (rn, rd) = (n.sqrt(), d.sqrt());
    (&rn * &rn == *n && &rd * &rd == *d).then(|| Rational::new(rn, rd))
}

/// Positive divisors of `|n|`, or `None` if `n` is too large to factor by
/// trial division within budget.
fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let mut m = n.abs();
    let mut primes: Vec<(BigInt, u32)> = Vec::new();
    let mut d = BigInt::from(2u32);
    let mut steps = 0u64;
    while &d * &d <= m {
        steps += 1;
        if steps > TRIAL_DIVISION_LIMIT {
            return None;
        }
        if m.is_multiple_of(&d) {
            let mut e = 0;
            while m.is_multiple_of(&d) {
                m /= &d;
                e += 1;
            }
            primes.push((d.clone(), e));
        }
        d += 1u32;
    }
    if m > BigInt::one() {
        primes.push((m, 1));
    }
    let mut out = vec![BigInt::one()];
    for (p, e) in primes {
        let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
        for base in &out {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                next.push(base * &pk);
                pk *= &p;
            }
        }
        out = next;
    }
    Some(out)
}

/// Finds one rational root by the rational root theorem.
fn find_rational_root(p: &Poly) -> Result<Option<Rational>> {
    let ints = p.to_primitive_integer();
    let (a0, an) = (&ints[0], ints.last().expect("nonzero"));
    let (Some(ps), Some(qs)) = (divisors(a0), divisors(an)) else {
        return Err(unsupported(p));
    };
    for q in &qs {
        for num in &ps {
            for cand in [Rational::new(num.clone(), q.clone()), Rational::new(-num, q.clone())] {
                if p.eval(&cand).is_zero() {
                    return Ok(Some(cand));
                }
            }
        }
    }
    Ok(None)
}

/// All roots of `p` with multiplicities, provided they are rational.
///
/// Linear and quadratic pieces are solved in closed form; higher degrees are
/// searched by the rational root theorem. An irreducible factor of degree
/// two or more is reported as [`Error::UnsupportedFactorization`].
pub fn rational_roots(p: &Poly) -> Result<Vec<(Rational, u32)>> {
    if p.is_zero() {
        return Err(Error::ZeroFunction);
    }
    let mut found: BTreeMap<Rational, u32> = BTreeMap::new();
    let zero_mult = p.valuation().unwrap_or(0);
    if zero_mult > 0 {
        found.insert(Rational::zero(), zero_mult as u32);
    }
    let mut rest = p.strip_valuation();
    loop {
        match rest.deg0() {
            0 => break,
            1 => {
                let r = -rest.coeff(0) / rest.coeff(1);
                *found.entry(r).or_insert(0) += 1;
                break;
            }
            2 => {
                let (a, b, c) = (rest.coeff(2), rest.coeff(1), rest.coeff(0));
                let disc = &b * &b - Rational::from_integer(BigInt::from(4)) * &a * &c;
                let Some(s) = rational_sqrt(&disc) else {
                    return Err(unsupported(&rest));
                };
                let two_a = &a + &a;
                for r in [(-&b + &s) / &two_a, (-&b - &s) / &two_a] {
                    *found.entry(r).or_insert(0) += 1;
                }
                break;
            }
            _ => {
                let Some(r) = find_rational_root(&rest)? else {
                    return Err(unsupported(&rest));
                };
                let lin = Poly::linear_root(&r);
                while rest.eval(&r).is_zero() {
                    rest = rest.div_rem(&lin).0;
                    *found.entry(r.clone()).or_insert(0) += 1;
                }
            }
        }
    }
    Ok(found.into_iter().collect())
}

fn finite_roots(f: &RatFunc, of_num: bool, div: &mut Divisor) -> Result<()> {
    let add = |div: &mut Divisor, p: &Poly, e: u32| -> Result<()> {
        if p.is_constant() {
            return Ok(());
        }
        for (r, m) in rational_roots(p)? {
            div.add_point(PointP1::Finite(r), (m * e) as i64);
        }
        Ok(())
    };
    match f.factors() {
        Some(fs) => {
            let list = if of_num { &fs.num } else { &fs.den };
            for (p, e) in list {
                add(div, p, *e)?;
            }
        }
        None => add(div, if of_num { f.num() } else { f.den() }, 1)?,
    }
    Ok(())
}

/// The divisor of points of `P¹` where `f` takes the value `target`, with
/// multiplicities (orders of the zero, or of the pole).
pub fn zeros_poles(f: &RatFunc, target: Target) -> Result<Divisor> {
    if f.is_zero() {
        return Err(Error::ZeroFunction);
    }
    let mut div = Divisor::new();
    let (dn, dd) = (f.num().deg0() as i64, f.den().deg0() as i64);
    match target {
        Target::Zero => {
            finite_roots(f, true, &mut div)?;
            if dd > dn {
                div.add_point(PointP1::Infinity, dd - dn);
            }
        }
        Target::Infinity => {
            finite_roots(f, false, &mut div)?;
            if dn > dd {
                div.add_point(PointP1::Infinity, dn - dd);
            }
        }
    }
    Ok(div)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};

    fn from_roots(roots: &[(Rational, u32)], lead: Rational) -> Poly {
        roots.iter().fold(Poly::constant(lead), |acc, (r, m)| {
            &acc * &Poly::linear_root(r).pow(*m)
        })
    }

    #[test]
    fn double_root_of_square() {
        // (1 - t/2)^2
        let p = Poly::from_coeffs(vec![int(1), rat(-1, 2)]).pow(2);
        assert_eq!(rational_roots(&p).unwrap(), vec![(int(2), 2)]);
    }

    #[test]
    fn cubic_with_rational_roots() {
        let roots = vec![(rat(-3, 2), 1), (int(0), 2), (rat(5, 7), 1), (int(4), 3)];
        let p = from_roots(&roots, rat(-6, 5));
        let mut got = rational_roots(&p).unwrap();
        got.sort();
        let mut want = roots;
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn irreducible_pieces_are_rejected() {
        let quad = Poly::from_coeffs(vec![int(1), int(0), int(1)]);
        assert!(matches!(
            rational_roots(&quad),
            Err(Error::UnsupportedFactorization { degree: 2, .. })
        ));
        // (t - 1)(t^3 - 2)
        let cubic = &Poly::linear_root(&int(1))
            * &Poly::from_coeffs(vec![int(-2), int(0), int(0), int(1)]);
        assert!(matches!(
            rational_roots(&cubic),
            Err(Error::UnsupportedFactorization { degree: 3, .. })
        ));
    }

    #[test]
    fn zeros_poles_examples() {
        let one_minus = |a: Rational| Poly::from_coeffs(vec![int(1), -a]);
        let f = RatFunc::from_poly(one_minus(rat(1, 2)))
            .pow(2)
            .unwrap()
            .checked_div(&RatFunc::from_poly(one_minus(int(1))))
            .unwrap();
        let z = zeros_poles(&f, Target::Zero).unwrap();
        assert_eq!(z.iter().collect::<Vec<_>>(), vec![(&PointP1::Finite(int(2)), 2)]);
        let poles = zeros_poles(&f, Target::Infinity).unwrap();
        assert_eq!(poles.order(&PointP1::Finite(int(1))), 1);
        assert_eq!(poles.order(&PointP1::Infinity), 1);

        // 1 - 9t^2
        let g = RatFunc::from_poly(Poly::from_coeffs(vec![int(1), int(0), int(-9)]));
        let z = zeros_poles(&g, Target::Zero).unwrap();
        assert_eq!(z.order(&PointP1::Finite(rat(1, 3))), 1);
        assert_eq!(z.order(&PointP1::Finite(rat(-1, 3))), 1);
        assert_eq!(z.len(), 2);

        let t = RatFunc::t();
        let p = zeros_poles(&t, Target::Infinity).unwrap();
        assert_eq!(p.iter().collect::<Vec<_>>(), vec![(&PointP1::Infinity, 1)]);
        assert!(matches!(zeros_poles(&RatFunc::zero(), Target::Zero), Err(Error::ZeroFunction)));
    }
}
