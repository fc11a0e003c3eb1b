//! Stanley-Reisner complexes, homology over GF(p), Hochster Betti tables and
//! the Cohen-Macaulay family of predicates.

mod betti;
mod complex;
mod criteria;
mod field;
mod splitting;

pub(crate) use betti::profile_from_table;
pub use betti::{
    betti_table, generator_degrees, homological_profile, BettiJson, BettiTable, HomologicalProfile,
};
pub use complex::{alexander_dual, stanley_reisner, SimplicialComplex};
pub use criteria::{
    bi_cm_report, complex_is_cohen_macaulay, depth_via_links, has_linear_resolution,
    has_linear_resolution_via_dual, is_betti_splitting, is_bi_cm, is_cohen_macaulay, BiCmReport,
};
pub use field::{is_prime, PrimeField, SparseMatrix};
pub use splitting::{
    find_vertex_splitting, is_vertex_splittable, vertex_splitting_at, VertexSplitting,
};

#[cfg(test)]
mod tests;
