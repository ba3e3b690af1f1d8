//! Parsing, evaluating and printing cycle expressions.
use additive_chow::dsl::{eval_str, from_cycle_sum, parse};
use additive_chow::r2;

fn main() {
    for src in [
        "Gamma1 + C1(1/2,1/2;2)",
        "cbrt(-2)*Q(1/3) - 2*Gamma2",
        "curve(t, 1+t/6, 1-t^2/4)",
        "cbrt(-2)*(Qtilde(1/3) - GammaBar1) - cbrt(-18/7)*Gamma3",
    ] {
        let e = parse(src).unwrap();
        let z = e.eval().unwrap();
        println!("{src}");
        println!("  parsed:   {e}");
        println!("  curves:   {}", from_cycle_sum(&z));
        println!("  R2 = {}", r2(&z).unwrap());
    }
    match eval_str("Gamma1 + Q(0.5)") {
        Err(e) => println!("error: {e}"),
        Ok(_) => unreachable!(),
    }
}
