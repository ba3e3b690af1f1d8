//! The maps f and g between 0-cycles and Q (x) Q^x.
use additive_chow::arith::{int, rat};
use additive_chow::cycle::catalog;
use additive_chow::tensor::cathelineau_tensor_fixed;
use additive_chow::{boundary, f_map, g_map};

fn main() {
    let z = f_map(&rat(3, 5), &int(12)).unwrap();
    println!("f(3/5, 12) = {z}");
    println!("g(f(3/5, 12)) = {}", g_map(&z));

    let d = boundary(&catalog::make_c2(&rat(2, 7), &rat(-3, 5), &int(6)).unwrap()).unwrap();
    println!("dC2(2/7;-3/5,6) = {d}");
    println!("g of it = {}", g_map(&d));

    let dca = boundary(&catalog::c_a_fixed(&rat(1, 3)).unwrap()).unwrap();
    println!("g(dCa(1/3)), amended = {}", g_map(&dca));
    println!("g(dD(2,3)), amended = {}", cathelineau_tensor_fixed(&int(2), &int(3)).unwrap());
}
