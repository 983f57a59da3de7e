//! Monomial localization `I(p)`: set every variable outside `p` to 1.
//!
//! Results stay over the ambient variable set; killed variables simply never
//! appear in the generators.

use crate::decompose::{Decomposition, MonomialPrime};
use crate::error::{Error, Result};
use crate::ideal::{MonomialIdeal, VarMask};

/// Localization keeping only the variables in `keep`.
pub fn at_mask(ideal: &MonomialIdeal, keep: VarMask) -> MonomialIdeal {
    let killed = keep.complement(ideal.nvars());
    MonomialIdeal::from_gens_unchecked(
        ideal.vars().clone(),
        ideal.gens().iter().map(|g| g.erase(killed)).collect(),
    )
}

/// Localization with the variables in `killed` set to 1.
pub fn killing(ideal: &MonomialIdeal, killed: VarMask) -> MonomialIdeal {
    at_mask(ideal, killed.complement(ideal.nvars()))
}

pub fn monomial_localization(ideal: &MonomialIdeal, prime: &MonomialPrime) -> Result<MonomialIdeal> {
    if prime.vars() != ideal.vars() {
        return Err(Error::VariableMismatch);
    }
    Ok(at_mask(ideal, prime.members()))
}

/// Intersection of the components whose support avoids the killed variables.
pub fn localization_via_components(dec: &Decomposition, prime: &MonomialPrime) -> Result<MonomialIdeal> {
    if prime.vars() != dec.ideal.vars() {
        return Err(Error::VariableMismatch);
    }
    let keep = prime.members();
    MonomialIdeal::intersect_all(
        dec.ideal.vars(),
        dec.components.iter().filter(|c| c.ideal.support().is_subset(keep)).map(|c| &c.ideal),
    )
}

/// Localization at the prime killing the single variable `x_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SingleVariableLocalization {
    /// Largest exponent of `x_i` among the generators.
    pub max_exponent: u32,
    /// Generating degree of the localization, when it has one; equals `d - max_exponent`.
    pub degree: Option<u32>,
    pub ideal: MonomialIdeal,
}

/// For `I` generated in degree `d`, the generators of `I(p_{i})` are
/// `u / x_i^{a_i}` over `u` divisible by `x_i^{a_i}`, `a_i` the largest exponent of `x_i`.
pub fn single_variable_localization(ideal: &MonomialIdeal, i: usize) -> Result<SingleVariableLocalization> {
    ideal.require_single_degree()?;
    let a = ideal.max_exponent(i);
    let local = killing(ideal, VarMask::single(i));
    let degree = if local.is_unit() {
        Some(0)
    } else {
        local.single_degree()?
    };
    Ok(SingleVariableLocalization { max_exponent: a, degree, ideal: local })
}

/// The generators predicted for `I(p_{i})`: those divisible by `x_i^{a_i}`, divided by it.
pub fn predicted_single_variable_generators(ideal: &MonomialIdeal, i: usize) -> MonomialIdeal {
    let a = ideal.max_exponent(i);
    let n = ideal.nvars();
    let divisor = crate::ideal::Monomial::pure_power(n, i, a);
    MonomialIdeal::from_gens_unchecked(
        ideal.vars().clone(),
        ideal.gens().iter().filter_map(|u| u.checked_div(&divisor)).collect(),
    )
}
