//! A corrupted correction-cycle builder must be caught by the boundary check.

use additive_chow::cycle::catalog;
use additive_chow::verify::{find, run_check, Builders, Options, Status};
use additive_chow::{CycleSum, Rational, Result};

fn c2_with_flipped_sign(a: &Rational, b1: &Rational, b2: &Rational) -> Result<CycleSum> {
    Ok(catalog::make_c2(a, b1, b2)?.times(-1))
}

#[test]
fn flipped_c2_sign_fails_v1() {
    let opts = Options {
        samples: 50,
        seed: 1,
        builders: Builders { c2: c2_with_flipped_sign, ..Builders::default() },
        ..Options::default()
    };
    let v = run_check(find("V1").unwrap(), &opts);
    assert_eq!(v.status, Status::Fail);
    let w = v.witnesses.iter().find(|w| w.claim == "dC2").expect("a dC2 counterexample");
    assert!(w.input.starts_with("C2("), "{}", w.input);
    assert_ne!(w.expected, w.computed);

    let honest = run_check(find("V1").unwrap(), &Options { samples: 50, seed: 1, ..Options::default() });
    assert_eq!(honest.status, Status::Pass);
}
