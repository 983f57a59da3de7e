//! Independent Cohen-Macaulay oracle: polarization, Stanley-Reisner complexes,
//! exact simplicial homology and Reisner's criterion.

pub mod complex;
pub mod homology;
pub mod polarize;
pub mod reisner;

pub use complex::{stanley_reisner_complex, stanley_reisner_ideal, SimplicialComplex};
pub use homology::{reduced_homology_ranks, Field};
pub use polarize::{polarize, polarized_variable_count, PolarizationMap};
pub use reisner::{is_cm_reisner, ReisnerVerdict};
