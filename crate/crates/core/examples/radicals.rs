//! Cube roots of rationals as exact scalars, and the star scales used by
//! the generator cycles.
use additive_chow::arith::{int, rat};
use additive_chow::cycle::catalog;
use additive_chow::{RadMonomial, RadScalar};

fn main() {
    let alpha = catalog::alpha();
    let alpha_p = catalog::alpha_prime();
    println!("alpha  = {alpha}, alpha^3 = {}", alpha.cube());
    println!("alpha' = {alpha_p}, alpha'^3 = {}", alpha_p.cube());
    println!("alpha * alpha' = {}", alpha.mul(&alpha_p));
    println!("1/alpha = {}", alpha.invert().unwrap());

    // cbrt(54) = 3 cbrt(2): radicands are kept cube-free
    let m = RadMonomial::cbrt(int(54)).unwrap();
    println!("cbrt(54) = {m}");

    let s = &RadScalar::from(m) + &RadScalar::from(RadMonomial::cbrt(int(-16)).unwrap());
    println!("cbrt(54) + cbrt(-16) = {s}");
    let z = &RadScalar::from(RadMonomial::cbrt(rat(1, 4)).unwrap()) - &RadScalar::from(RadMonomial::cbrt(int(2)).unwrap().scale(&rat(1, 2)));
    println!("cbrt(1/4) - cbrt(2)/2 = {z}  (zero: {})", z.is_zero());
}
