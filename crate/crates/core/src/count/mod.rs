//! Counting: invariant subspaces, Hall numbers, quiver Grassmannians,
//! isomorphism-class tables and Krull–Schmidt decomposition.

mod classes;
mod decompose;
mod hall;
mod subreps;

pub use classes::{iso_classes, iso_classes_filtered, ClassEntry, ClassFilter, ClassId, ClassUniverse, HallTensor, IsoClassTable};
pub use decompose::{decompose, is_indecomposable};
pub(crate) use decompose::decompose_local;
pub use hall::{grassmannian_count, hall_number, hall_number_by_enumeration, p_number};
pub use subreps::{for_each_invariant_subspace, invariant_subspaces};
