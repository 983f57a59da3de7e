//! Cohen-Macaulayness via polarization and Reisner's criterion: `Δ` is CM over
//! `k` iff `H̃_i(lk F; k) = 0` for every face `F` and every `i < dim lk F`.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::ideal::{MonomialIdeal, VarMask};
use crate::oracle::complex::{stanley_reisner_complex, SimplicialComplex};
use crate::oracle::homology::{reduced_homology_ranks, Field};
use crate::oracle::polarize::polarize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReisnerVerdict {
    pub cohen_macaulay: bool,
    /// A face whose link has homology below its top dimension, in polarized names.
    pub failing_face: Option<Vec<String>>,
    /// Reduced Betti numbers of the failing link.
    pub failing_link_betti: Option<Vec<usize>>,
    pub polarized_vars: usize,
}

/// True when the reduced homology vanishes in every degree below the top one.
pub fn homology_vanishes_below_top(complex: &SimplicialComplex, field: Field) -> bool {
    let betti = reduced_homology_ranks(complex, field);
    // betti[slot] is for dimension slot - 1; the last slot is the top dimension
    betti.iter().rev().skip(1).all(|&b| b == 0)
}

/// First face (in size-then-mask order) violating Reisner's criterion.
pub fn reisner_failure(complex: &SimplicialComplex, field: Field) -> Option<VarMask> {
    let faces = complex.faces();
    faces
        .par_iter()
        .find_first(|&&f| !homology_vanishes_below_top(&complex.link(f), field))
        .copied()
}

pub fn is_cm_complex(complex: &SimplicialComplex, field: Field) -> bool {
    reisner_failure(complex, field).is_none()
}

pub fn is_cm_reisner(ideal: &MonomialIdeal, field: Field) -> Result<ReisnerVerdict> {
    let (polarized, _) = polarize(ideal)?;
    let complex = stanley_reisner_complex(&polarized)?;
    let failure = reisner_failure(&complex, field);
    let vars = polarized.vars();
    Ok(ReisnerVerdict {
        cohen_macaulay: failure.is_none(),
        failing_face: failure.map(|f| vars.mask_names(f)),
        failing_link_betti: failure.map(|f| reduced_homology_ranks(&complex.link(f), field)),
        polarized_vars: vars.len(),
    })
}
