//! Small finite fields `F_{p^e}`, polynomials over them and dense linear
//! algebra, including enumeration of subspaces by reduced echelon form.

mod field;
mod fpoly;
mod matrix;
mod subspace;

pub use field::{field_of_order, is_prime, make_field, make_field_with_budget, Fel, Field, FieldCtx};
pub use fpoly::{monic_irreducibles, FPoly, MonicPolys};
pub use matrix::{Matrix, Rref};
pub use subspace::{gaussian_binomial, Subspace, Subspaces};
