//! Polymatroidal and matroidal ideals, Veronese-type constructors, and the
//! principal / Veronese / squarefree Veronese shape recognizer.

use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::{monomials_of_degree, Monomial, MonomialIdeal, VarMask, VariableSet};

/// Outcome of the exchange-property check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolymatroidVerdict {
    Polymatroidal,
    NotSingleDegree,
    /// `deg_{x_i}(u) > deg_{x_i}(v)` but no admissible `j` gives `x_j u / x_i` in the ideal.
    ExchangeFails { u: Monomial, v: Monomial, i: usize },
}

impl PolymatroidVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, PolymatroidVerdict::Polymatroidal)
    }
}

#[derive(Clone, Copy)]
enum ExchangeTarget {
    /// `x_j u / x_i ∈ I`
    Membership,
    /// `x_j u / x_i ∈ G(I)`
    Generator,
}

fn exchange_check(ideal: &MonomialIdeal, target: ExchangeTarget) -> Result<PolymatroidVerdict> {
    ideal.ensure_proper()?;
    if ideal.single_degree()?.is_none() {
        return Ok(PolymatroidVerdict::NotSingleDegree);
    }
    let gens = ideal.gens();
    let lookup: HashSet<&Monomial> = gens.iter().collect();
    let n = ideal.nvars();
    let lands = |m: &Monomial| match target {
        ExchangeTarget::Generator => lookup.contains(m),
        ExchangeTarget::Membership => lookup.contains(m) || ideal.contains(m),
    };
    for u in gens {
        for v in gens {
            if u == v {
                continue;
            }
            for i in 0..n {
                if u.exponent(i) <= v.exponent(i) {
                    continue;
                }
                let ok = (0..n).any(|j| {
                    u.exponent(j) < v.exponent(j) && u.exchange(i, j).is_some_and(|w| lands(&w))
                });
                if !ok {
                    return Ok(PolymatroidVerdict::ExchangeFails { u: u.clone(), v: v.clone(), i });
                }
            }
        }
    }
    Ok(PolymatroidVerdict::Polymatroidal)
}

/// Exchange property with the target tested by ideal membership.
pub fn is_polymatroidal(ideal: &MonomialIdeal) -> Result<PolymatroidVerdict> {
    exchange_check(ideal, ExchangeTarget::Membership)
}

/// Exchange property with the target required to be a minimal generator.
pub fn is_polymatroidal_generator_form(ideal: &MonomialIdeal) -> Result<PolymatroidVerdict> {
    exchange_check(ideal, ExchangeTarget::Generator)
}

/// Squarefree polymatroidal.
pub fn is_matroidal(ideal: &MonomialIdeal) -> Result<bool> {
    Ok(is_polymatroidal(ideal)?.holds() && ideal.is_squarefree())
}

/// All degree-`d` monomials `u` with `deg_{x_i}(u) <= caps[i]`.
pub fn veronese_type(vars: &VariableSet, d: u32, caps: &[u32]) -> Result<MonomialIdeal> {
    let n = vars.len();
    if caps.len() != n {
        return Err(Error::Arity { expected: n, found: caps.len() });
    }
    let sum: u64 = caps.iter().map(|&c| u64::from(c)).sum();
    if d == 0 || sum < u64::from(d) {
        return Err(Error::EmptyVeroneseType { sum, degree: d });
    }
    let gens = monomials_of_degree(n, vars.full_mask(), d)
        .into_iter()
        .filter(|m| m.exponents().iter().zip(caps).all(|(e, c)| e <= c))
        .collect();
    MonomialIdeal::new(vars.clone(), gens)
}

/// Squarefree Veronese ideal of degree `d` on the variables of `mask`.
pub fn squarefree_veronese(vars: &VariableSet, mask: VarMask, d: u32) -> MonomialIdeal {
    let gens = crate::ideal::squarefree_monomials_of_degree(vars.len(), mask, d);
    MonomialIdeal::from_gens_unchecked(vars.clone(), gens)
}

/// The Cohen-Macaulay shapes of polymatroidal ideals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "shape", rename_all = "snake_case")]
pub enum CmShape {
    Principal,
    /// `q^d` with `q` the prime on `support`.
    Veronese { support: VarMask, degree: u32 },
    /// All squarefree degree-`d` monomials in `support`.
    SquarefreeVeronese { support: VarMask, degree: u32 },
    None,
}

impl CmShape {
    pub fn is_cm(&self) -> bool {
        !matches!(self, CmShape::None)
    }
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

fn single_degree_on_support(ideal: &MonomialIdeal) -> Option<(u32, VarMask)> {
    let d = ideal.single_degree().ok()??;
    Some((d, ideal.support()))
}

/// True when `I` is the squarefree Veronese ideal on its own support
/// (principal squarefree monomials and primes included).
pub fn is_squarefree_veronese(ideal: &MonomialIdeal) -> bool {
    match single_degree_on_support(ideal) {
        Some((d, supp)) => {
            ideal.is_squarefree()
                && ideal.gens().len() as u64 == binomial(supp.len() as u64, u64::from(d))
        }
        None => false,
    }
}

/// True when `I = q^d` for the prime `q` on the support of `I`.
pub fn is_veronese(ideal: &MonomialIdeal) -> bool {
    match single_degree_on_support(ideal) {
        Some((d, supp)) => {
            let k = supp.len() as u64;
            ideal.gens().len() as u64 == binomial(k + u64::from(d) - 1, u64::from(d))
        }
        None => false,
    }
}

/// First matching shape in the order principal, Veronese, squarefree Veronese.
pub fn recognize_cm_shape(ideal: &MonomialIdeal) -> Result<CmShape> {
    ideal.ensure_proper()?;
    if ideal.gens().len() == 1 {
        return Ok(CmShape::Principal);
    }
    let Some((degree, support)) = single_degree_on_support(ideal) else {
        return Ok(CmShape::None);
    };
    if is_veronese(ideal) {
        Ok(CmShape::Veronese { support, degree })
    } else if is_squarefree_veronese(ideal) {
        Ok(CmShape::SquarefreeVeronese { support, degree })
    } else {
        Ok(CmShape::None)
    }
}
