//! Streamed populations of monomial ideals.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::ideal::{monomials_of_degree, squarefree_monomials_of_degree, Monomial, MonomialIdeal, VarMask, VariableSet};
use crate::polymatroid::veronese_type;

/// Number of predicate evaluations a run may spend unless overridden.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// The degree-`d` monomials in `n` variables, indexed, with precomputed
/// exchanges so subsets can be screened as bitmasks.
#[derive(Debug, Clone)]
pub struct MonomialTable {
    pub vars: VariableSet,
    pub degree: u32,
    pub monomials: Vec<Monomial>,
    /// `exchange[a][i * n + j]` is the index of `x_j * m_a / x_i`.
    exchange: Vec<Vec<Option<u8>>>,
}

impl MonomialTable {
    pub fn new(n: usize, d: u32, squarefree: bool) -> Result<Self> {
        let vars = VariableSet::indexed(n);
        let full = VarMask::full(n);
        let mut monomials =
            if squarefree { squarefree_monomials_of_degree(n, full, d) } else { monomials_of_degree(n, full, d) };
        monomials.sort_by(|a, b| b.cmp(a));
        if monomials.len() > 63 {
            return Err(Error::BudgetExceeded { budget: 63, needed: monomials.len() as u64 });
        }
        let exchange = monomials
            .iter()
            .map(|m| {
                let mut row = vec![None; n * n];
                for i in 0..n {
                    for j in 0..n {
                        if let Some(e) = m.exchange(i, j) {
                            row[i * n + j] = monomials.iter().position(|x| *x == e).map(|p| p as u8);
                        }
                    }
                }
                row
            })
            .collect();
        Ok(MonomialTable { vars, degree: d, monomials, exchange })
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn ideal(&self, subset: u64) -> MonomialIdeal {
        let gens = (0..self.len()).filter(|&k| subset >> k & 1 == 1).map(|k| self.monomials[k].clone()).collect();
        MonomialIdeal::from_gens_unchecked(self.vars.clone(), gens)
    }

    /// Exchange property of the subset: for `u, v` in it and `u_i > v_i` some
    /// `j` with `u_j < v_j` has `x_j u / x_i` in it.
    pub fn is_polymatroidal(&self, subset: u64) -> bool {
        let n = self.vars.len();
        let members: Vec<usize> = (0..self.len()).filter(|&k| subset >> k & 1 == 1).collect();
        for &a in &members {
            let u = self.monomials[a].exponents();
            for &b in &members {
                if a == b {
                    continue;
                }
                let v = self.monomials[b].exponents();
                for i in (0..n).filter(|&i| u[i] > v[i]) {
                    let ok = (0..n).filter(|&j| u[j] < v[j]).any(|j| {
                        self.exchange[a][i * n + j].is_some_and(|c| subset >> c & 1 == 1)
                    });
                    if !ok {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn support(&self, subset: u64) -> VarMask {
        (0..self.len())
            .filter(|&k| subset >> k & 1 == 1)
            .fold(VarMask::EMPTY, |acc, k| acc.union(self.monomials[k].support()))
    }
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

/// All nonempty subsets of a [`MonomialTable`] with at most `max_gens`
/// elements, walked in increasing bitmask order. The cursor is the next
/// bitmask to visit, so a run can be resumed.
#[derive(Debug, Clone)]
pub struct SubsetEnumerator {
    pub table: MonomialTable,
    pub max_gens: usize,
    pub cursor: u64,
}

impl SubsetEnumerator {
    pub fn new(table: MonomialTable, max_gens: usize, budget: u64) -> Result<Self> {
        let e = SubsetEnumerator { table, max_gens, cursor: 1 };
        let needed = e.population();
        if needed > budget {
            return Err(Error::BudgetExceeded { budget, needed });
        }
        Ok(e)
    }

    /// Number of subsets the enumerator yields in total.
    pub fn population(&self) -> u64 {
        let m = self.table.len() as u64;
        (1..=self.max_gens.min(self.table.len()) as u64).map(|k| binomial(m, k)).fold(0u64, u64::saturating_add)
    }

    /// One past the largest bitmask.
    pub fn end(&self) -> u64 {
        1u64 << self.table.len()
    }

    pub fn admits(&self, subset: u64) -> bool {
        subset != 0 && subset.count_ones() as usize <= self.max_gens
    }
}

impl Iterator for SubsetEnumerator {
    type Item = MonomialIdeal;

    fn next(&mut self) -> Option<MonomialIdeal> {
        while self.cursor < self.end() {
            let s = self.cursor;
            self.cursor += 1;
            if self.admits(s) {
                return Some(self.table.ideal(s));
            }
        }
        None
    }
}

/// All nonempty sets of degree-`d` monomials in `n` variables with at most `max_gens` elements.
pub fn enumerate_single_degree_ideals(
    n: usize,
    d: u32,
    squarefree: bool,
    max_gens: usize,
    budget: u64,
) -> Result<SubsetEnumerator> {
    SubsetEnumerator::new(MonomialTable::new(n, d, squarefree)?, max_gens, budget)
}

/// Antichains of squarefree monomials in `n` variables whose members all
/// have degree at least `min_degree`, as sets of variable masks. The empty
/// antichain is omitted.
pub fn squarefree_antichains(n: usize, min_degree: usize, budget: u64) -> Result<Vec<Vec<VarMask>>> {
    let candidates: Vec<VarMask> = VarMask::full(n).subsets().filter(|m| m.len() >= min_degree).collect();
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn extend(
        candidates: &[VarMask],
        start: usize,
        current: &mut Vec<VarMask>,
        out: &mut Vec<Vec<VarMask>>,
        budget: u64,
    ) -> Result<()> {
        for k in start..candidates.len() {
            let c = candidates[k];
            if current.iter().any(|m| m.is_subset(c) || c.is_subset(*m)) {
                continue;
            }
            current.push(c);
            out.push(current.clone());
            if out.len() as u64 > budget {
                return Err(Error::BudgetExceeded { budget, needed: out.len() as u64 });
            }
            extend(candidates, k + 1, current, out, budget)?;
            current.pop();
        }
        Ok(())
    }
    extend(&candidates, 0, &mut current, &mut out, budget)?;
    Ok(out)
}

/// Veronese-type ideals `I_{d; caps}` for all caps in `[0, d]^n`, skipping empty ones.
pub fn veronese_type_ideals(n: usize, d: u32) -> Vec<(Vec<u32>, MonomialIdeal)> {
    let vars = VariableSet::indexed(n);
    let mut out = Vec::new();
    let mut caps = vec![0u32; n];
    loop {
        if let Ok(i) = veronese_type(&vars, d, &caps) {
            out.push((caps.clone(), i));
        }
        let mut k = 0;
        while k < n && caps[k] == d {
            caps[k] = 0;
            k += 1;
        }
        if k == n {
            break;
        }
        caps[k] += 1;
    }
    out
}

/// Single-degree intersections `p_1^{a_1} ∩ ⋯ ∩ p_r^{a_r} ∩ m^s` over non-maximal
/// primes in `n` variables, `r <= max_primes`, exponents `<= max_exp`, `s <= max_exp`.
pub fn prime_power_intersections(n: usize, max_primes: usize, max_exp: u32) -> Result<Vec<MonomialIdeal>> {
    let vars = VariableSet::indexed(n);
    let full = VarMask::full(n);
    let primes: Vec<VarMask> = full.subsets().filter(|m| !m.is_empty() && *m != full).collect();
    let maximal: Vec<MonomialIdeal> = (0..=max_exp).map(|s| MonomialIdeal::maximal_power(vars.clone(), s)).collect();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut chosen: Vec<(VarMask, u32)> = Vec::new();

    #[allow(clippy::too_many_arguments)]
    fn walk(
        vars: &VariableSet,
        primes: &[VarMask],
        maximal: &[MonomialIdeal],
        start: usize,
        max_primes: usize,
        max_exp: u32,
        chosen: &mut Vec<(VarMask, u32)>,
        seen: &mut HashSet<MonomialIdeal>,
        out: &mut Vec<MonomialIdeal>,
    ) -> Result<()> {
        if !chosen.is_empty() {
            let parts: Vec<MonomialIdeal> =
                chosen.iter().map(|&(p, a)| MonomialIdeal::prime_power(vars.clone(), p, a)).collect();
            let j = MonomialIdeal::intersect_all(vars, &parts)?;
            for m in maximal {
                let i = j.intersection(m)?;
                if i.single_degree()?.is_some() && seen.insert(i.clone()) {
                    out.push(i);
                }
            }
        }
        if chosen.len() == max_primes {
            return Ok(());
        }
        for k in start..primes.len() {
            // associated primes of an intersection form an antichain
            if chosen.iter().any(|(p, _)| p.is_subset(primes[k]) || primes[k].is_subset(*p)) {
                continue;
            }
            for a in 1..=max_exp {
                chosen.push((primes[k], a));
                walk(vars, primes, maximal, k + 1, max_primes, max_exp, chosen, seen, out)?;
                chosen.pop();
            }
        }
        Ok(())
    }
    walk(&vars, &primes, &maximal, 0, max_primes, max_exp, &mut chosen, &mut seen, &mut out)?;
    Ok(out)
}

/// A random monomial ideal in `n` variables with up to `max_gens` generators
/// of degree `1..=max_degree`.
pub fn random_ideal(rng: &mut ChaCha8Rng, n: usize, max_gens: usize, max_degree: u32) -> MonomialIdeal {
    let vars = VariableSet::indexed(n);
    let k = rng.gen_range(1..=max_gens);
    let gens = (0..k)
        .map(|_| {
            let d = rng.gen_range(1..=max_degree);
            random_monomial(rng, n, d)
        })
        .collect();
    crate::ideal::minimalize(vars, gens).expect("arity matches")
}

pub fn random_monomial(rng: &mut ChaCha8Rng, n: usize, d: u32) -> Monomial {
    let mut exps = vec![0u32; n];
    for _ in 0..d {
        exps[rng.gen_range(0..n)] += 1;
    }
    Monomial::new(exps)
}

/// A random ideal generated in the single degree `d`.
pub fn random_single_degree_ideal(rng: &mut ChaCha8Rng, n: usize, d: u32, max_gens: usize) -> MonomialIdeal {
    let vars = VariableSet::indexed(n);
    let mut all = monomials_of_degree(n, VarMask::full(n), d);
    all.shuffle(rng);
    let k = rng.gen_range(1..=max_gens.min(all.len()));
    all.truncate(k);
    MonomialIdeal::new(vars, all).expect("arity matches")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polymatroid::is_polymatroidal;

    #[test]
    fn small_populations() {
        assert_eq!(enumerate_single_degree_ideals(2, 2, false, usize::MAX, DEFAULT_BUDGET).unwrap().count(), 7);
        assert_eq!(enumerate_single_degree_ideals(4, 2, true, usize::MAX, DEFAULT_BUDGET).unwrap().count(), 63);
        let e = enumerate_single_degree_ideals(4, 2, true, 2, DEFAULT_BUDGET).unwrap();
        assert_eq!(e.population(), 6 + 15);
        assert_eq!(e.count(), 21);
    }

    #[test]
    fn budget_guard() {
        let err = enumerate_single_degree_ideals(4, 2, false, usize::MAX, 100).unwrap_err();
        assert_eq!(err, Error::BudgetExceeded { budget: 100, needed: 1023 });
    }

    #[test]
    fn cursor_resumes() {
        let mut e = enumerate_single_degree_ideals(3, 2, false, usize::MAX, DEFAULT_BUDGET).unwrap();
        let first: Vec<_> = e.by_ref().take(10).collect();
        let rest: Vec<_> = e.clone().collect();
        let mut fresh = enumerate_single_degree_ideals(3, 2, false, usize::MAX, DEFAULT_BUDGET).unwrap();
        fresh.cursor = e.cursor;
        assert_eq!(fresh.collect::<Vec<_>>(), rest);
        assert_eq!(first.len() + rest.len(), 63);
    }

    #[test]
    fn mask_screen_matches_exchange_check() {
        for (n, d) in [(3usize, 2u32), (2, 3), (3, 3)] {
            let t = MonomialTable::new(n, d, false).unwrap();
            for s in 1..(1u64 << t.len()).min(1 << 12) {
                assert_eq!(t.is_polymatroidal(s), is_polymatroidal(&t.ideal(s)).unwrap().holds(), "{}", t.ideal(s));
            }
        }
    }

    #[test]
    fn antichain_counts() {
        // nonempty antichains of the Boolean lattice on 3 points: 20 - 1 (empty) and
        // excluding those containing the empty set leaves 18
        assert_eq!(squarefree_antichains(3, 0, DEFAULT_BUDGET).unwrap().len(), 19);
        assert_eq!(squarefree_antichains(3, 1, DEFAULT_BUDGET).unwrap().len(), 18);
    }

    #[test]
    fn veronese_type_seeds_are_polymatroidal() {
        for (_, i) in veronese_type_ideals(3, 3) {
            assert!(is_polymatroidal(&i).unwrap().holds());
        }
    }

    #[test]
    fn prime_power_intersections_are_single_degree() {
        let all = prime_power_intersections(3, 2, 2).unwrap();
        assert!(!all.is_empty());
        assert!(all.iter().all(|i| i.single_degree().unwrap().is_some()));
    }
}
