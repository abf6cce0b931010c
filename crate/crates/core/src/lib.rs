//! Exact Ringel–Hall numbers for quiver representations over small finite
//! fields, and the universal polynomials they assemble into.
//!
//! The crate is `no_std` (it needs `alloc`). Everything is exact: field
//! arithmetic is table driven over `F_{p^e}`, counts are arbitrary precision
//! integers and polynomials have rational coefficients.
//!
//! Layout, bottom up:
//!
//! - [`gfq`]: finite fields, polynomials over them, dense matrices, subspace
//!   enumeration.
//! - [`upoly`]: rational polynomials and exact interpolation.
//! - [`quiver`]: quivers, dimension vectors, Euler form, `δ`, defect.
//! - [`rep`]: representations, Hom spaces, automorphism counts, isomorphism.
//! - [`count`]: invariant subspaces, Hall numbers, isomorphism-class tables,
//!   Krull–Schmidt decomposition.
//! - [`hallpoly`]: partitions, `a_λ`, classical and discrete Hall polynomials.
//! - [`segre`]: Segre symbols, Segre Hall polynomials, Kronecker
//!   decomposition classes.
//! - [`verify`]: identity sweeps (Green, associativity, Riedtmann, ...).

#![no_std]

extern crate alloc;

pub mod budget;
pub mod count;
pub mod error;
pub mod gfq;
pub mod hallpoly;
pub mod quiver;
pub mod rep;
pub mod segre;
pub mod upoly;
pub mod verify;

pub use budget::Budget;
pub use error::{Error, Result};
pub use gfq::{field_of_order, make_field, make_field_with_budget, FPoly, Fel, Field, FieldCtx, Matrix, Subspace};
pub use quiver::{DimVec, Quiver};
pub use rep::Rep;
pub use upoly::RatPoly;

/// Arbitrary precision count type used for every returned count.
pub type Count = num_bigint::BigUint;
/// Exact rational used in polynomial coefficients and identity checks.
pub type Rational = num_rational::BigRational;
