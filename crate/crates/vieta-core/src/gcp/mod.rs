//! Generalized cluster patterns: labeled seeds, the three mutation rules,
//! the mutation-invariance audit, the seed registry, specialization to the
//! Diophantine trees, the finite rank-2 pattern, and the symmetric-equation
//! builder.

pub mod a2;
pub mod matrix;
pub mod registry;
pub mod seed;
pub mod symmetric;

pub use a2::{enumerate_a2, A2Error, A2Orbit};
pub use matrix::{mutate_matrix, BdClass, DegreeMatrix, ExchangeMatrix, MatrixError};
pub use registry::{
    registry, registry_entry, registry_json, resolve_name, templates, EquationBinding,
    Rank2Equation, RegistryError, RegistrySeed, SeedTemplate,
};
pub use seed::{
    check_condition51, mutate_cluster, mutate_seed, mutate_zpolys, specialize_cluster,
    specialize_walk, walk_tree_specializations, walk_tree_specializations_sequential,
    walks_of_depth, Condition51Report, GcpError, PatternWalk, Seed, WalkPoint,
};
pub use symmetric::{
    build_symmetric_equation, SymmetricEquation, SymmetricError, SymmetricPoly,
};
