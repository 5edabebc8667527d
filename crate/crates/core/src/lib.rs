//! Exact Cayley-Dickson algebras of any level: structure constants by
//! doubling, rational element arithmetic, signed-permutation
//! multiplication matrices, Clifford generator scans and division-algebra
//! diagnostics.

pub mod algebra;
mod bits;
pub mod diagnostics;
pub mod element;
pub mod error;
pub mod level;
pub mod matrix;
pub mod scan;
pub mod triplets;

pub use algebra::{build_algebra, build_level, SignedIndex, StructureConstants, OCTONION_CYCLES};
pub use diagnostics::{
    check_identities, check_inverses, check_norm_composition, find_zero_divisors, find_zero_divisors_bounded, n_vs_dim,
    verify_against_paper_tables, Budget, Identity, IdentityReport, Outcome, TableDiff, TableMatch, ZeroDivisorWitness,
    DEFAULT_SEED,
};
pub use element::{conjugate, inverse, multiply, norm, Element, Inverse};
pub use error::{Error, Result};
pub use level::{AlgebraLevel, DEFAULT_MAX_LEVEL};
pub use matrix::{
    anticommutator, check_symplectic, closed_form_matrix, left_mult_matrix, right_mult_matrix, symplectic_form,
    AnticommutatorReport, IntMatrix, Side, SignedPermMatrix, SymplecticReport,
};
pub use scan::{
    anticommutation_graph, extend_with_volume_element, hurwitz_radon, max_anticommuting_sets, no_sixteen_dim_cliff15,
    AnticommutationGraph, CliffordSet, CliqueSearch, ExtensionReport,
};
pub use triplets::{count_triplets_formula, enumerate_triplets, Triplet, TripletTable};
