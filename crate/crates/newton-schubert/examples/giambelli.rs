//! Schur determinants of derivations realise Schubert cycles.
//!
//! For an index tuple I, the operator Δ_I(D) = det(D_{i_c - r}) applied
//! to the fundamental element produces the basis element ε^I, so the
//! integral of Δ_I(D) · D_1^{complementary} recovers the degree of the
//! cycle — the operator form of the Giambelli determinant.

use newton_schubert::derivations::schur_operator;
use newton_schubert::enumerate::schubert_degree;
use newton_schubert::exterior::{IndexTuple, Multivector, Shape};

fn main() {
    let shape = Shape::new(3, 8);
    let fundamental = Multivector::basis(IndexTuple::fundamental(shape), shape);

    for entries in [vec![1, 2, 4], vec![1, 3, 5], vec![2, 4, 6]] {
        let tuple = IndexTuple::new(entries.clone(), shape);
        let delta = schur_operator(&tuple);
        let image = delta.apply(&fundamental);
        println!("Δ_{tuple}(D) applied to the fundamental element: {image}");

        // Push the image to the point with D_1 and read off the degree.
        let remaining = shape.top_weight() - tuple.weight();
        let mut v = image;
        for _ in 0..remaining {
            v = newton_schubert::derivations::apply_d(1, &v);
        }
        let via_operator = v.degree_functional();
        let direct = schubert_degree(&entries, shape);
        assert_eq!(via_operator, direct);
        println!("  degree via operators = {via_operator}, closed form = {direct}\n");
    }
}
