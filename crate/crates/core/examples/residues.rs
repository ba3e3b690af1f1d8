//! Orders, Laurent expansions and residues of rational functions on P¹.
use additive_chow::arith::{laurent_coeffs, ord_at, residue_at, zeros_poles, PointP1, Target};
use additive_chow::dsl::parse_ratfunc;
use additive_chow::arith::int;

fn main() {
    let f = parse_ratfunc("(1-t/2)^2/(t^3*(1-t))").expect("valid rational function");
    println!("f = {f}");

    let poles = zeros_poles(&f, Target::Infinity).expect("rational roots");
    let mut total = int(0);
    for p in poles.support().filter(|p| p.is_finite()).chain(std::iter::once(&PointP1::Infinity)) {
        let r = residue_at(&f, p);
        println!("  ord_{p} f = {:>2}   res_{p} f = {r}", ord_at(&f, p).unwrap());
        total += r;
    }
    println!("sum of residues = {total}");

    let zero = PointP1::Finite(int(0));
    let coeffs = laurent_coeffs(&f, &zero, -3, 1).unwrap();
    let shown: Vec<String> = coeffs.iter().map(|c| c.to_string()).collect();
    println!("Laurent coefficients at t = 0, from t^-3 to t^1: [{}]", shown.join(", "));
}
