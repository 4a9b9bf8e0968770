//! Closed-form kernels of powers of derivations.
//!
//! Powers of D̄_2 and of D_2 on small wedges admit explicit expansions;
//! both are checked here against the naive repeated application.

use newton_schubert::derivations::{apply_d, apply_dbar};
use newton_schubert::enumerate::{d2_power_kernel, dbar_power_kernel, KernelOutput, KernelVariant};
use newton_schubert::exterior::{IndexTuple, Multivector, Shape};
use newton_schubert::newton::expand_reduced;

fn main() {
    let shape = Shape::new(3, 12);
    let tuple = IndexTuple::new(vec![1, 3, 4], shape);
    let m = 2;

    // D̄_2^m on a 3-wedge: one multinomial term per composition of m.
    let closed = dbar_power_kernel(m, &tuple, shape);
    let mut naive = Multivector::basis(tuple.clone(), shape);
    for _ in 0..m {
        naive = apply_dbar(2, &naive);
    }
    assert_eq!(closed, naive);
    println!("D̄_2^{m} (ε^{tuple}) = {closed}");

    // D_2^m on a 3-wedge, delivered in D_1-normal form.
    let out = d2_power_kernel(KernelVariant::D2OnThreeWedge, m, &tuple, shape);
    let KernelOutput::Reduced(reduced) = out else {
        unreachable!("three-wedge variant is reduced")
    };
    println!("D_2^{m} (ε^{tuple}) in D_1-normal form: {reduced}");

    let expanded = expand_reduced(&reduced);
    let mut naive = Multivector::basis(tuple, shape);
    for _ in 0..m {
        naive = apply_d(2, &naive);
    }
    assert_eq!(expanded, naive);
    println!("expanded: {expanded}");
}
