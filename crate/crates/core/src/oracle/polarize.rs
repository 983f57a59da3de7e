//! Polarization: `x_i^k ↦ x_i#1 ⋯ x_i#k`, turning a monomial ideal into a
//! squarefree one over an enlarged variable set.

use crate::error::Result;
use crate::ideal::{Monomial, MonomialIdeal, VariableSet};

/// Where each original variable went.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolarizationMap {
    /// `copies[i]` lists the new variable indices standing for `x_i`, in order.
    pub copies: Vec<Vec<usize>>,
}

impl PolarizationMap {
    pub fn is_identity(&self) -> bool {
        self.copies.iter().enumerate().all(|(i, c)| c.as_slice() == [i])
    }
}

/// Number of variables after polarization: each variable keeps at least one copy.
pub fn polarized_variable_count(ideal: &MonomialIdeal) -> usize {
    (0..ideal.nvars()).map(|i| ideal.max_exponent(i).max(1) as usize).sum()
}

pub fn polarize(ideal: &MonomialIdeal) -> Result<(MonomialIdeal, PolarizationMap)> {
    ideal.ensure_proper()?;
    let vars = ideal.vars();
    let mut names = Vec::new();
    let mut copies = Vec::with_capacity(vars.len());
    for i in 0..vars.len() {
        let e = ideal.max_exponent(i);
        let start = names.len();
        if e <= 1 {
            names.push(vars.name(i).to_string());
        } else {
            names.extend((1..=e).map(|k| format!("{}#{k}", vars.name(i))));
        }
        copies.push((start..names.len()).collect::<Vec<_>>());
    }
    let new_vars = VariableSet::new(names)?;
    let m = new_vars.len();
    let gens = ideal
        .gens()
        .iter()
        .map(|g| {
            let mut exps = vec![0u32; m];
            for (i, &e) in g.exponents().iter().enumerate() {
                for &c in &copies[i][..e as usize] {
                    exps[c] = 1;
                }
            }
            Monomial::new(exps)
        })
        .collect();
    Ok((MonomialIdeal::new(new_vars, gens)?, PolarizationMap { copies }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::{parse_ideal, render_ideal};

    fn p(text: &str) -> MonomialIdeal {
        parse_ideal(text).unwrap().ideal
    }

    #[test]
    fn pure_power() {
        let (pol, _) = polarize(&p("(x1^2)")).unwrap();
        assert_eq!(render_ideal(&pol), "(x1#1*x1#2)");
    }

    #[test]
    fn square_of_maximal_ideal() {
        let (pol, map) = polarize(&p("(x1^2, x1*x2, x2^2)")).unwrap();
        assert_eq!(pol.vars().names(), &["x1#1", "x1#2", "x2#1", "x2#2"]);
        assert_eq!(render_ideal(&pol), "(x1#1*x1#2, x1#1*x2#1, x2#1*x2#2)");
        assert_eq!(map.copies, vec![vec![0, 1], vec![2, 3]]);
    }

    #[test]
    fn squarefree_is_unchanged() {
        let i = p("vars a,b,c,d\n(a*b, b*c)");
        let (pol, map) = polarize(&i).unwrap();
        assert_eq!(pol, i);
        assert!(map.is_identity());
        assert_eq!(polarized_variable_count(&i), 4);
    }
}
