//! Face points, boundaries and admissibility of the named cycles.
use additive_chow::arith::{int, rat, Target};
use additive_chow::cycle::{catalog, Coord};
use additive_chow::{boundary, check_admissible, face_points};

fn main() {
    let g2 = catalog::gamma2();
    let curve = &g2.terms()[0].curve;
    println!("Gamma2 = {curve}");
    for coord in [Coord::T1, Coord::T2] {
        for (target, name) in [(Target::Zero, "0"), (Target::Infinity, "inf")] {
            let pts = face_points(curve, coord, target).unwrap();
            println!("  face {coord} = {name}: {pts}");
        }
    }
    let report = check_admissible(curve).unwrap();
    println!("  admissible: {}", report.is_admissible());

    println!("d(GammaBar1) = {}", boundary(&catalog::gamma_bar1()).unwrap());
    println!("d(C1(1/2,1/2;2)) = {}", boundary(&catalog::make_c1(&rat(1, 2), &rat(1, 2), &int(2)).unwrap()).unwrap());
    println!("d(Q(1/3)) = {}", boundary(&catalog::q_cycle(&rat(1, 3)).unwrap()).unwrap());
}
