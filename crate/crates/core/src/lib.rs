//! Exact-arithmetic toolkit for finite reflection groups: noncrossing
//! partition lattices, Catalan-family counting polynomials, and cyclic
//! sieving verification.
//!
//! Module map:
//! - [`cyclotomic`]: integer polynomials, q-analogs, cyclotomic fields.
//! - [`groups`]: reflection group construction, enumeration, Coxeter
//!   elements, centralizer restriction.
//! - [`noncrossing`]: the absolute-order interval below a Coxeter element and
//!   cyclic actions on chains in it.
//! - [`sieving`]: cyclic sieving checks pairing counting polynomials with
//!   cyclic actions.
//! - [`roots`]: crystallographic root systems, antichain rotation, and torus
//!   point counts.
//! - [`partitions`]: classical noncrossing set partitions and their refined
//!   counts.
//! - [`verify`]: the batch verification matrix shared by the test suite and
//!   the command-line interface.

pub mod cyclotomic;
pub mod error;
pub mod groups;
pub(crate) mod linalg;
pub mod noncrossing;
pub mod partitions;
pub mod roots;
pub mod verify;
pub mod sieving;

pub use cyclotomic::{
    catalan_poly, cyclotomic_poly, eval_at_root, eval_integer_at_root, limit_ratio, q_binomial,
    q_factorial, q_int, CatalanVariant, CycloElem, EvalOutcome, IntPoly, QCatalanSpec,
};
pub use error::Error;
pub use groups::{
    build_group, build_group_with_catalog, parse_spec, GroupElement, GroupSpec, MonomialElem,
    ReflectionGroup, RestrictedGroup,
};
pub use noncrossing::{
    armstrong_action, below, conjugation_action, enumerate_nc, enumerate_nc_m, kreweras_action,
    rotation_action, MDivisibleTuple, NcPoset,
};
pub use partitions::{
    all_block_types, enumerate_ncn, kreweras_count, partition_rotation_action, perm_to_partition,
    q_kreweras_poly, refined_csp, symmetric_type_count, BlockType, SetPartition,
};
pub use roots::{
    build_root_system, enumerate_antichains, panyushev_action, panyushev_step,
    panyushev_step_with, smith_normal_form, torus_character_identity_holds, torus_fixed_count,
    torus_orbit_count, Antichain, IntMatrix, PanyushevConvention, RootSystem,
};
pub use sieving::{
    csp_check, faithfulness_analysis, CspReport, CspRow, CyclicActionInstance, Faithfulness,
};
pub use verify::{matrix, run_all, Budgets, ClaimStatus, ItemOutcome, ItemReport, MatrixItem};

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
