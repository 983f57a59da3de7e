//! Monomial ideals over a polynomial ring: decompositions, monomial
//! localization, polymatroid recognition, connectivity in codimension one and
//! (generalized) Cohen-Macaulay classification, with an independent
//! Stanley-Reisner homology oracle and an exhaustive verification harness.

pub mod classify;
pub mod codim1;
pub mod decompose;
pub mod error;
pub mod fixtures;
pub mod harness;
pub mod ideal;
pub mod localize;
pub mod oracle;
pub mod polymatroid;
pub mod text;

pub use classify::{
    cap_prod, is_cm_polymatroidal, is_generalized_cm, is_generalized_cm_oracle, lemma_akhar_check,
    split_maximal_component, theorem_th_classify, GcmVerdict, ThClauses, ThReport,
};
pub use codim1::{is_connected_codim_one, Codim1Certificate, Codim1Verdict};
pub use decompose::{
    associated_primes, hv_presentation, irreducible_decomposition, is_equidimensional, is_unmixed, minimal_primes,
    primary_decomposition, Decomposition, HvPresentation, MonomialPrime,
};
pub use error::{Error, Result};
pub use ideal::{minimalize, Monomial, MonomialIdeal, VarMask, VariableSet, MAX_VARS};
pub use localize::{killing, monomial_localization};
pub use oracle::{is_cm_reisner, Field};
pub use polymatroid::{is_matroidal, is_polymatroidal, recognize_cm_shape, CmShape, PolymatroidVerdict};
pub use text::{parse_ideal, render_document, render_ideal, ParseError};
