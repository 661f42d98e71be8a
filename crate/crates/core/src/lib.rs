//! Level-l fusion products of finite-dimensional sl2-modules, realized through
//! crossingless-match combinatorics.
//!
//! - [`fusion_ring`]: the representation ring, its level-l quotient and the
//!   truncated tensor product.
//! - [`diagrams`]: lower crossingless matches and orientations.
//! - [`bracketing`]: bracketings, the truncation predicate and closed-form
//!   three-factor counts.
//! - [`module_action`]: the sl2 action on truncated oriented matches.
//! - [`geometry`]: dimension formulas and kernel/rank conditions.
//! - [`verify`]: bounded property sweeps.

pub mod bracketing;
pub mod diagrams;
pub mod error;
pub mod fusion_ring;
pub mod geometry;
pub mod module_action;
pub mod verify;

pub use bracketing::{
    count_truncated, enumerate_trees, ra_count, ra_count_c, rb_count, rb_count_c, satisfies_truncation,
    BracketTree, NodeScope,
};
pub use diagrams::{
    arc_census, enumerate_cm, enumerate_lcm, orientations, ArcCensus, BoxConfig, LowerMatch,
    OrientedLowerMatch,
};
pub use error::{Error, Result};
pub use fusion_ring::{
    dim_hom_fusion, dim_hom_tensor, fuse_many, fuse_pair, quotient_reduce, ring_mul, tensor_cg,
    weight_multiplicities, HighestWeight, Level, RingElement,
};
pub use geometry::{
    component_census, dim_m, dim_z, hw_from_rank, kernel_profile, nl_condition, ComponentCensus, DimPair,
    KernelProfile,
};
pub use module_action::{
    action_matrices, build_basis, isotypic_census, verify_sl2, ActionMatrices, ModuleBasis,
};
