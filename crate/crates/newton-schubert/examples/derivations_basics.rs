//! The two families of derivations on the exterior algebra.
//!
//! D_h spreads a total shift of h over the factors of a wedge by the
//! Leibniz rule; the reduced operator D̄_h instead shifts h distinct
//! factors by one each. Both act on `Multivector` values over a fixed
//! shape (k, n), with ε^m = 0 once m > n.

use newton_schubert::derivations::{apply_d, apply_dbar};
use newton_schubert::exterior::{Multivector, Shape};

fn main() {
    let shape = Shape::new(3, 9);
    let v = Multivector::wedge(&[1, 2, 3], shape);
    println!("v = {v}");

    for h in 1..=3 {
        println!("D_{h}(v)    = {}", apply_d(h, &v));
    }
    for h in 1..=3 {
        println!("D̄_{h}(v)    = {}", apply_dbar(h, &v));
    }

    // D̄_h annihilates every k-wedge once h exceeds k.
    let killed = apply_dbar(4, &v);
    println!("D̄_4(v)    = {killed} (h > k kills everything)");

    // Words of factors compose left to right; D_1 applied twice is the
    // square of the first derivation, not D_2.
    let d1d1 = apply_d(1, &apply_d(1, &v));
    let d2 = apply_d(2, &v);
    println!("D_1(D_1 v) = {d1d1}");
    println!(
        "D_1^2(v) - D_2(v) = {}",
        newton_schubert::exterior::combine(&d1d1, &d2, &1.into(), &(-1).into())
    );
}
