//! Exact Schubert calculus on Grassmannians G(k,n), computed inside the
//! exterior algebra of a truncated polynomial module.
//!
//! The engine represents Schubert cycles as derivation operators acting on
//! wedge monomials, reduces operator words to a normal form in powers of the
//! first special derivation via binomial recursion, and integrates the result
//! with a closed-form degree functional.  Several enumerative families
//! (pencils, nets, webs of plane and space rational curves) get dedicated
//! closed-form evaluators that bypass the generic reduction entirely.
//!
//! See the `examples/` directory for runnable entry points covering each
//! capability, and the `newton-schubert` binary for a command-line interface.

pub mod bigcomb;
pub mod cli;
pub mod derivations;
pub mod enumerate;
pub mod exterior;
pub mod newton;

pub use derivations::{apply_d, apply_dbar, integral_of_word, Factor, OperatorWord};
pub use enumerate::{
    count_nets, count_webs, hyperstalls, pencil_product, ranestad, scherbak, schubert_degree,
    DegreeTable,
};
pub use exterior::{IndexTuple, Multivector, Shape};
pub use newton::{expand_reduced, integrate_reduced, reduce_power, reduce_word, ReducedForm};
