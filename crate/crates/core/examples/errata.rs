//! Compares the published correction lists with the amended ones: the
//! boundaries and regulator values that each produces.
use additive_chow::arith::{int, rat};
use additive_chow::cycle::catalog;
use additive_chow::tensor::{cathelineau_tensor, cathelineau_tensor_fixed};
use additive_chow::{boundary, r2};

fn main() {
    println!("d(GammaBar2)  published: {}", boundary(&catalog::gamma_bar2()).unwrap());
    println!("              amended:   {}", boundary(&catalog::gamma_bar2_fixed()).unwrap());
    println!("d(Gamma3)     published: {}", boundary(&catalog::gamma3()).unwrap());
    println!("              amended:   {}", boundary(&catalog::gamma3_fixed()).unwrap());
    println!("R2(Gamma3) = {} in both", r2(&catalog::gamma3_fixed()).unwrap());

    let a = rat(1, 3);
    println!("a = {a}");
    println!("  d(Qtilde)   published: {}", boundary(&catalog::q_tilde(&a).unwrap()).unwrap());
    println!("              amended:   {}", boundary(&catalog::q_tilde_fixed(&a).unwrap()).unwrap());
    println!("  R2(Ca)      published: {}", r2(&catalog::c_a(&a).unwrap()).unwrap());
    println!("              amended:   {}  (a(1-a) = {})", r2(&catalog::c_a_fixed(&a).unwrap()).unwrap(), &a * (int(1) - &a));

    let (a, b) = (int(2), int(3));
    println!("(a, b) = (2, 3)");
    println!("  R2(D)       published: {}", r2(&catalog::d_cycle(&a, &b).unwrap()).unwrap());
    println!("              amended:   {}", r2(&catalog::d_cycle_fixed(&a, &b).unwrap()).unwrap());
    println!("  g(dD)       published: {}", cathelineau_tensor(&a, &b).unwrap());
    println!("              amended:   {}", cathelineau_tensor_fixed(&a, &b).unwrap());
}
