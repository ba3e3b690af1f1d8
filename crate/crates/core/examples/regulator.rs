//! The residue regulator on the named cycles, with per-point detail.
use additive_chow::arith::rat;
use additive_chow::cycle::catalog;
use additive_chow::regulator::{r2, r2_breakdown};

fn main() {
    for (name, z) in [
        ("Gamma1", catalog::gamma1()),
        ("Gamma2", catalog::gamma2()),
        ("Gamma3", catalog::gamma3()),
        ("Q(1/3)", catalog::q_cycle(&rat(1, 3)).unwrap()),
        ("Ca(1/3), amended", catalog::c_a_fixed(&rat(1, 3)).unwrap()),
    ] {
        println!("R2({name}) = {}", r2(&z).unwrap());
    }

    println!("per-point values for Gamma3:");
    for part in r2_breakdown(&catalog::gamma3(), true).unwrap() {
        for pv in &part.points {
            println!("  term {} (weight {}) at t = {} via {}: {}", part.term, part.weight, pv.point, pv.branch, pv.value);
        }
    }
}
