//! Exact arithmetic over ℚ: polynomials, rational functions in one variable
//! `t`, and their local behaviour at points of the projective line.

mod point;
mod poly;
mod ratfunc;
mod roots;
mod series;

use num_bigint::BigInt;
use num_traits::Zero;

pub use point::{Divisor, PointP1};
pub use poly::Poly;
pub use ratfunc::{Factored, RatFunc};
pub use roots::{rational_roots, zeros_poles, Target};
pub use series::{laurent_coeffs, local_series, ord_at, residue_at, LocalSeries};

/// Arbitrary-precision rational number, always stored in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

/// Shorthand for the rational `n/d`. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `n`, `-n`, or `n/d` with decimal integers. No floating point.
pub fn parse_rational(src: &str) -> Option<Rational> {
    let s = src.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().ok()?;
    let d: BigInt = d.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(Rational::new(n, d))
}
