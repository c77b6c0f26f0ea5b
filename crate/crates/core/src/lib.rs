//! Simplicial complexes, fillings by minimal non-faces, and the Whitehead
//! product identities they determine.

pub mod chain;
pub mod complex;
pub mod error;
pub mod filling;
pub mod generators;
pub mod homology;
pub mod lattice;
pub mod matrix;
pub mod ordering;
pub mod whitehead;

pub use chain::{boundary, Chain};
pub use complex::{parse_complex, MinimalNonFace, Simplex, SimplicialComplex};
pub use error::{Error, Result};
pub use filling::{
    certify_contractible, filling_shape, find_fillings, is_filling, sphere_skeleton_filling,
    union_with, ContractibilityCertificate, Filling, FillingShape,
};
pub use homology::{reduced_homology, HomologyProfile};
pub use lattice::{solve_chain_relation, ChainSolution};
pub use matrix::{smith_normal_form, IntegerMatrix};
pub use ordering::{contraction_ordering, validate_ordering, ContractionOrdering};
pub use whitehead::{derive_identity, sphere_identity, WhiteheadExpr, WhiteheadIdentity};
