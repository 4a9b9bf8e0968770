//! Newton-identity reduction of operator words to D_1-normal form.
//!
//! A mixed word in D_h and D̄_h is rewritten as a sum of pure powers
//! D_1^j applied to basis elements; integrating that normal form needs
//! only a table of rational-free closed-form weights, so it is far
//! cheaper than expanding the word on the exterior algebra.

use newton_schubert::derivations::{integral_of_word, Factor, OperatorWord};
use newton_schubert::exterior::{IndexTuple, Shape};
use newton_schubert::newton::{integrate_reduced, reduce_word};

fn main() {
    let shape = Shape::new(3, 9);
    let start = IndexTuple::fundamental(shape);

    // D_1^4 D_2^4 D̄_2^2 on G(3, 9); total degree 4 + 8 + 4 = 16 < 18,
    // so pad with two more D_1 to reach the point.
    let word = OperatorWord::new(vec![
        Factor::D { h: 1, exp: 6 },
        Factor::D { h: 2, exp: 4 },
        Factor::Dbar { h: 2, exp: 2 },
    ]);

    let reduced = reduce_word(&word, &start, shape);
    println!("reduced form ({} terms):", reduced.num_terms());
    println!("  {reduced}");

    let fast = integrate_reduced(&reduced);
    let slow = integral_of_word(shape, &word);
    assert_eq!(fast, slow);
    println!("integral via normal form   = {fast}");
    println!("integral via direct action = {slow}");
}
