//! Degrees of Grassmannians and of individual Schubert cycles.
//!
//! The degree of G(k, n) in its Plücker embedding is the integral of
//! D_1^{k(n-k)} against the fundamental element; for G(2, n) the values
//! are the Catalan numbers.

use newton_schubert::enumerate::{schubert_degree, DegreeTable};
use newton_schubert::exterior::Shape;

fn main() {
    println!("degrees of G(2, n) (Catalan numbers):");
    for n in 4..=12 {
        let shape = Shape::new(2, n);
        let deg = schubert_degree(&[1, 2], shape);
        println!("  deg G(2, {n:2}) = {deg}");
    }

    println!("\ndegrees of G(3, n):");
    for n in 6..=10 {
        let shape = Shape::new(3, n);
        let deg = schubert_degree(&[1, 2, 3], shape);
        println!("  deg G(3, {n:2}) = {deg}");
    }

    // A DegreeTable caches every degree for a fixed shape and accepts
    // unsorted index tuples, returning the signed value.
    let shape = Shape::new(3, 8);
    let table = DegreeTable::new(shape);
    println!("\nsome Schubert cycle degrees on G(3, 8):");
    for tuple in [[1, 2, 3], [1, 2, 5], [2, 3, 4], [1, 4, 6]] {
        println!("  deg of cycle {tuple:?} = {}", table.signed(&tuple));
    }
    println!(
        "  signed lookup of (2, 1, 3) = {} (one transposition away from (1, 2, 3))",
        table.signed(&[2, 1, 3])
    );
}
