//! Monomials and monomial ideals in `k[x_1, ..., x_n]`.
//!
//! A [`MonomialIdeal`] always stores its minimal generating set, sorted in
//! descending graded-lexicographic order, so two ideals are equal exactly when
//! their generator lists are equal.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Largest supported number of variables (bound by [`VarMask`]).
pub const MAX_VARS: usize = 64;

/// A set of variable indices stored as a bitmask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct VarMask(pub u64);

impl VarMask {
    pub const EMPTY: VarMask = VarMask(0);

    pub fn full(n: usize) -> Self {
        if n >= 64 {
            VarMask(u64::MAX)
        } else {
            VarMask((1u64 << n) - 1)
        }
    }

    pub fn single(i: usize) -> Self {
        VarMask(1u64 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        VarMask(indices.into_iter().fold(0u64, |acc, i| acc | (1u64 << i)))
    }

    pub fn contains(self, i: usize) -> bool {
        i < 64 && self.0 & (1u64 << i) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        VarMask(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VarMask(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VarMask(self.0 & !other.0)
    }

    /// Complement relative to the first `n` variables.
    pub fn complement(self, n: usize) -> Self {
        VarMask::full(n).difference(self)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn with(self, i: usize) -> Self {
        VarMask(self.0 | (1u64 << i))
    }

    pub fn without(self, i: usize) -> Self {
        VarMask(self.0 & !(1u64 << i))
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }

    /// All subsets of `self`, in increasing numeric order of the mask.
    pub fn subsets(self) -> impl Iterator<Item = VarMask> {
        let full = self.0;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full { None } else { Some((cur.wrapping_sub(full)) & full) };
            Some(VarMask(cur))
        })
    }
}

/// Ordered, immutable list of variable names shared by every monomial built on it.
#[derive(Clone, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<String>", into = "Vec<String>")]
pub struct VariableSet {
    names: Arc<[String]>,
}

impl VariableSet {
    pub fn new<S: Into<String>, I: IntoIterator<Item = S>>(names: I) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.len() > MAX_VARS {
            return Err(Error::TooManyVariables { max: MAX_VARS, found: names.len() });
        }
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() {
                return Err(Error::EmptyVariableName);
            }
            if names[..i].contains(name) {
                return Err(Error::DuplicateVariable(name.clone()));
            }
        }
        Ok(VariableSet { names: names.into() })
    }

    /// `x1, ..., xn`.
    pub fn indexed(n: usize) -> Self {
        Self::new((1..=n).map(|i| format!("x{i}"))).expect("indexed names are distinct")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn full_mask(&self) -> VarMask {
        VarMask::full(self.len())
    }

    pub fn mask_names(&self, mask: VarMask) -> Vec<String> {
        mask.iter().map(|i| self.names[i].clone()).collect()
    }

    /// True when the names are exactly `x1, ..., xn`.
    pub fn is_indexed(&self) -> bool {
        self.names.iter().enumerate().all(|(i, n)| *n == format!("x{}", i + 1))
    }
}

impl PartialEq for VariableSet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.names, &other.names) || self.names == other.names
    }
}

impl std::hash::Hash for VariableSet {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.names.hash(state)
    }
}

impl fmt::Debug for VariableSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.names.iter()).finish()
    }
}

impl TryFrom<Vec<String>> for VariableSet {
    type Error = Error;
    fn try_from(names: Vec<String>) -> Result<Self> {
        VariableSet::new(names)
    }
}

impl From<VariableSet> for Vec<String> {
    fn from(v: VariableSet) -> Self {
        v.names.to_vec()
    }
}

pub type Exponents = SmallVec<[u32; 8]>;

/// Exponent vector over a fixed variable order. Degree 0 is the monomial 1.
///
/// `Ord` is graded lexicographic: higher total degree first decides, ties are
/// broken lexicographically with `x_1` most significant.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Exponents,
}

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial { exps: SmallVec::from_elem(0, n) }
    }

    pub fn new<I: IntoIterator<Item = u32>>(exps: I) -> Self {
        Monomial { exps: exps.into_iter().collect() }
    }

    pub fn variable(n: usize, i: usize) -> Self {
        let mut m = Self::one(n);
        m.exps[i] = 1;
        m
    }

    pub fn pure_power(n: usize, i: usize, e: u32) -> Self {
        let mut m = Self::one(n);
        m.exps[i] = e;
        m
    }

    /// Squarefree product of the variables in `mask`.
    pub fn from_mask(n: usize, mask: VarMask) -> Self {
        Monomial { exps: (0..n).map(|i| u32::from(mask.contains(i))).collect() }
    }

    pub fn arity(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn support(&self) -> VarMask {
        VarMask::from_indices(self.exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i))
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// `Some((i, e))` when the monomial is `x_i^e` with `e >= 1`.
    pub fn as_pure_power(&self) -> Option<(usize, u32)> {
        let mut found = None;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some((i, e));
            }
        }
        found
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        let exps = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::ExponentOverflow))
            .collect::<Result<Exponents>>()?;
        Ok(Monomial { exps })
    }

    /// `self / other`, or `None` if `other` does not divide `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        let exps = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Exponents>>()?;
        Some(Monomial { exps })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial { exps: self.exps.iter().zip(other.exps.iter()).map(|(a, b)| *a.max(b)).collect() }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial { exps: self.exps.iter().zip(other.exps.iter()).map(|(a, b)| *a.min(b)).collect() }
    }

    /// Every exponent clamped to at most one.
    pub fn squarefree_part(&self) -> Monomial {
        Monomial { exps: self.exps.iter().map(|&e| e.min(1)).collect() }
    }

    /// Sets the exponents of the variables in `killed` to zero (substitution `x_i -> 1`).
    pub fn erase(&self, killed: VarMask) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .enumerate()
                .map(|(i, &e)| if killed.contains(i) { 0 } else { e })
                .collect(),
        }
    }

    pub fn with_exponent(&self, i: usize, e: u32) -> Monomial {
        let mut m = self.clone();
        m.exps[i] = e;
        m
    }

    /// Multiplies by `x_j` and divides by `x_i` (`x_j * self / x_i`), if `x_i` divides.
    pub fn exchange(&self, i: usize, j: usize) -> Option<Monomial> {
        if self.exps[i] == 0 {
            return None;
        }
        let mut m = self.clone();
        m.exps[i] -= 1;
        m.exps[j] += 1;
        Some(m)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All monomials of degree `d` in the variables of `mask`, over `n` variables.
pub fn monomials_of_degree(n: usize, mask: VarMask, d: u32) -> Vec<Monomial> {
    fn go(vars: &[usize], d: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        match vars.split_first() {
            None => {
                if d == 0 {
                    out.push(Monomial::new(cur.iter().copied()));
                }
            }
            Some((&i, rest)) => {
                let top = if rest.is_empty() { d } else { 0 };
                for e in (top..=d).rev() {
                    cur[i] = e;
                    go(rest, d - e, cur, out);
                }
                cur[i] = 0;
            }
        }
    }
    let vars: Vec<usize> = mask.iter().collect();
    let mut out = Vec::new();
    if vars.is_empty() {
        if d == 0 {
            out.push(Monomial::one(n));
        }
        return out;
    }
    go(&vars, d, &mut vec![0; n], &mut out);
    out
}

/// Squarefree monomials of degree `d` in the variables of `mask`.
pub fn squarefree_monomials_of_degree(n: usize, mask: VarMask, d: u32) -> Vec<Monomial> {
    let mut out: Vec<Monomial> = mask
        .subsets()
        .filter(|s| s.len() == d as usize)
        .map(|s| Monomial::from_mask(n, s))
        .collect();
    out.sort_by(|a, b| b.cmp(a));
    out
}

fn minimal_antichain(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.cmp(a)));
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept.sort_by(|a, b| b.cmp(a));
    kept
}

/// A monomial ideal, stored by its minimal monomial generators `G(I)`.
///
/// The zero ideal has no generators; the unit ideal is generated by `1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    vars: VariableSet,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Builds the ideal generated by `gens`, discarding non-minimal generators.
    pub fn new(vars: VariableSet, gens: Vec<Monomial>) -> Result<Self> {
        let n = vars.len();
        if let Some(bad) = gens.iter().find(|g| g.arity() != n) {
            return Err(Error::Arity { expected: n, found: bad.arity() });
        }
        Ok(MonomialIdeal { vars, gens: minimal_antichain(gens) })
    }

    /// Like [`MonomialIdeal::new`] for generators already known to share the arity.
    pub(crate) fn from_gens_unchecked(vars: VariableSet, gens: Vec<Monomial>) -> Self {
        debug_assert!(gens.iter().all(|g| g.arity() == vars.len()));
        MonomialIdeal { vars, gens: minimal_antichain(gens) }
    }

    pub fn zero(vars: VariableSet) -> Self {
        MonomialIdeal { vars, gens: Vec::new() }
    }

    pub fn unit(vars: VariableSet) -> Self {
        let one = Monomial::one(vars.len());
        MonomialIdeal { vars, gens: vec![one] }
    }

    /// The monomial prime generated by the variables in `mask`.
    pub fn prime(vars: VariableSet, mask: VarMask) -> Self {
        let n = vars.len();
        Self::from_gens_unchecked(vars, mask.iter().map(|i| Monomial::variable(n, i)).collect())
    }

    /// `p^a` for the monomial prime `p` on `mask`.
    pub fn prime_power(vars: VariableSet, mask: VarMask, a: u32) -> Self {
        let n = vars.len();
        if mask.is_empty() {
            return if a == 0 { Self::unit(vars) } else { Self::zero(vars) };
        }
        Self::from_gens_unchecked(vars, monomials_of_degree(n, mask, a))
    }

    /// `m^s` for the maximal ideal `m = (x_1, ..., x_n)`.
    pub fn maximal_power(vars: VariableSet, s: u32) -> Self {
        let mask = vars.full_mask();
        Self::prime_power(vars, mask, s)
    }

    pub fn vars(&self) -> &VariableSet {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    /// Errors unless the ideal is proper and nonzero.
    pub fn ensure_proper(&self) -> Result<()> {
        if self.is_zero() {
            Err(Error::ZeroIdeal)
        } else if self.is_unit() {
            Err(Error::UnitIdeal)
        } else {
            Ok(())
        }
    }

    fn same_ring(&self, other: &Self) -> Result<()> {
        if self.vars == other.vars {
            Ok(())
        } else {
            Err(Error::VariableMismatch)
        }
    }

    /// Variables dividing some minimal generator.
    pub fn support(&self) -> VarMask {
        self.gens.iter().fold(VarMask::EMPTY, |acc, g| acc.union(g.support()))
    }

    pub fn is_fully_supported(&self) -> bool {
        self.support() == self.vars.full_mask()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let gens = self.gens.iter().chain(other.gens.iter()).cloned().collect();
        Ok(Self::from_gens_unchecked(self.vars.clone(), gens))
    }

    pub fn product(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.checked_mul(b)?);
            }
        }
        Ok(Self::from_gens_unchecked(self.vars.clone(), gens))
    }

    pub fn power(&self, k: u32) -> Result<Self> {
        let mut acc = Self::unit(self.vars.clone());
        for _ in 0..k {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    pub fn intersection(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.lcm(b));
            }
        }
        Ok(Self::from_gens_unchecked(self.vars.clone(), gens))
    }

    /// Intersection of all ideals in `ideals`; the empty intersection is the unit ideal of `vars`.
    pub fn intersect_all<'a, I>(vars: &VariableSet, ideals: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a MonomialIdeal>,
    {
        ideals
            .into_iter()
            .try_fold(Self::unit(vars.clone()), |acc, next| acc.intersection(next))
    }

    pub fn radical(&self) -> Self {
        Self::from_gens_unchecked(self.vars.clone(), self.gens.iter().map(Monomial::squarefree_part).collect())
    }

    /// `Some(d)` when every minimal generator has degree `d`.
    pub fn single_degree(&self) -> Result<Option<u32>> {
        self.ensure_proper()?;
        let d = self.gens[0].degree();
        Ok(self.gens.iter().all(|g| g.degree() == d).then_some(d))
    }

    /// Degree of the generators, erroring when the ideal is not generated in one degree.
    pub fn require_single_degree(&self) -> Result<u32> {
        self.single_degree()?.ok_or(Error::NotSingleDegree)
    }

    pub fn max_degree(&self) -> u32 {
        self.gens.iter().map(Monomial::degree).max().unwrap_or(0)
    }

    /// Largest exponent of `x_i` among the minimal generators.
    pub fn max_exponent(&self, i: usize) -> u32 {
        self.gens.iter().map(|g| g.exponent(i)).max().unwrap_or(0)
    }

    /// Re-expresses the ideal over a relabeled variable set: variable `i` becomes `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        let n = self.nvars();
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let mut e = vec![0u32; n];
                for (i, &x) in g.exponents().iter().enumerate() {
                    e[perm[i]] = x;
                }
                Monomial::new(e)
            })
            .collect();
        Self::from_gens_unchecked(self.vars.clone(), gens)
    }
}

/// Minimal generators of the ideal generated by `gens` (all over `vars`).
pub fn minimalize(vars: VariableSet, gens: Vec<Monomial>) -> Result<MonomialIdeal> {
    MonomialIdeal::new(vars, gens)
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::text::render_ideal(self))
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::text::render_ideal(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(n: usize) -> VariableSet {
        VariableSet::indexed(n)
    }

    fn mono(e: &[u32]) -> Monomial {
        Monomial::new(e.iter().copied())
    }

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(v(n), gens.iter().map(|g| mono(g)).collect()).unwrap()
    }

    #[test]
    fn minimalize_drops_multiples() {
        let i = ideal(3, &[&[2, 0, 0], &[2, 1, 0], &[0, 1, 1]]);
        assert_eq!(i.gens(), &[mono(&[2, 0, 0]), mono(&[0, 1, 1])]);
    }

    #[test]
    fn unit_absorbs() {
        let i = ideal(1, &[&[0], &[1]]);
        assert!(i.is_unit());
    }

    #[test]
    fn incomparable_generators_survive() {
        let i = ideal(2, &[&[1, 3], &[2, 2]]);
        assert_eq!(i.gens().len(), 2);
    }

    #[test]
    fn arity_mismatch_is_rejected() {
        let err = MonomialIdeal::new(v(2), vec![mono(&[1, 0, 0])]).unwrap_err();
        assert_eq!(err, Error::Arity { expected: 2, found: 3 });
    }

    #[test]
    fn mismatched_rings_are_rejected() {
        let a = ideal(2, &[&[1, 0]]);
        let b = MonomialIdeal::prime(VariableSet::new(["a", "b"]).unwrap(), VarMask::single(0));
        assert_eq!(a.sum(&b).unwrap_err(), Error::VariableMismatch);
    }

    #[test]
    fn support_of_small_ideals() {
        let i = ideal(4, &[&[1, 1, 0, 0], &[0, 1, 1, 0]]);
        assert_eq!(i.support(), VarMask::from_indices([0, 1, 2]));
        assert!(!i.is_fully_supported());
        assert_eq!(MonomialIdeal::zero(v(3)).support(), VarMask::EMPTY);
    }

    #[test]
    fn membership() {
        let i = ideal(3, &[&[1, 0, 0], &[0, 1, 0]]);
        assert!(i.contains(&mono(&[1, 0, 1])));
        let j = ideal(1, &[&[2]]);
        assert!(!j.contains(&mono(&[1])));
    }

    #[test]
    fn product_sum_power() {
        let a = ideal(3, &[&[1, 0, 0], &[0, 1, 0]]);
        let b = ideal(3, &[&[1, 0, 0], &[0, 0, 1]]);
        let p = a.product(&b).unwrap();
        assert_eq!(p, ideal(3, &[&[2, 0, 0], &[1, 0, 1], &[1, 1, 0], &[0, 1, 1]]));
        let m = MonomialIdeal::prime(v(3), VarMask::full(3));
        assert_eq!(m.power(2).unwrap().gens().len(), 6);
        assert!(m.power(0).unwrap().is_unit());
        let s = ideal(2, &[&[1, 0]]).sum(&ideal(2, &[&[0, 1]])).unwrap();
        assert_eq!(s, MonomialIdeal::prime(v(2), VarMask::full(2)));
    }

    #[test]
    fn intersections() {
        let x1 = ideal(2, &[&[1, 0]]);
        let x2sq = ideal(2, &[&[0, 2]]);
        let m4 = MonomialIdeal::maximal_power(v(2), 4);
        let i = MonomialIdeal::intersect_all(&v(2), [&x1, &x2sq, &m4]).unwrap();
        assert_eq!(i, ideal(2, &[&[1, 3], &[2, 2]]));

        let p12 = MonomialIdeal::prime(v(3), VarMask::from_indices([0, 1]));
        let p13 = MonomialIdeal::prime(v(3), VarMask::from_indices([0, 2]));
        let m2 = MonomialIdeal::maximal_power(v(3), 2);
        let j = MonomialIdeal::intersect_all(&v(3), [&p12, &p13, &m2]).unwrap();
        assert_eq!(j, ideal(3, &[&[2, 0, 0], &[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]));

        assert_eq!(j.intersection(&MonomialIdeal::unit(v(3))).unwrap(), j);
    }

    #[test]
    fn radicals() {
        let i = ideal(3, &[&[3, 0, 0], &[0, 2, 1]]);
        assert_eq!(i.radical(), ideal(3, &[&[1, 0, 0], &[0, 1, 1]]));
        let c2 = ideal(3, &[&[3, 0, 0], &[2, 1, 0], &[2, 0, 1], &[1, 1, 1], &[1, 2, 0]]);
        assert_eq!(c2.radical(), ideal(3, &[&[1, 0, 0]]));
    }

    #[test]
    fn single_degree() {
        let m3 = MonomialIdeal::maximal_power(v(3), 3);
        assert_eq!(m3.single_degree().unwrap(), Some(3));
        assert_eq!(ideal(2, &[&[1, 0], &[0, 2]]).single_degree().unwrap(), None);
        assert_eq!(MonomialIdeal::zero(v(2)).single_degree().unwrap_err(), Error::ZeroIdeal);
        assert_eq!(MonomialIdeal::unit(v(2)).single_degree().unwrap_err(), Error::UnitIdeal);
    }

    #[test]
    fn degree_enumeration_counts() {
        assert_eq!(monomials_of_degree(3, VarMask::full(3), 2).len(), 6);
        assert_eq!(monomials_of_degree(4, VarMask::from_indices([1, 3]), 3).len(), 4);
        assert_eq!(squarefree_monomials_of_degree(6, VarMask::full(6), 3).len(), 20);
        assert_eq!(monomials_of_degree(2, VarMask::EMPTY, 0), vec![Monomial::one(2)]);
    }

    #[test]
    fn mask_subsets_cover_powerset() {
        let m = VarMask::from_indices([0, 2, 5]);
        let subs: Vec<_> = m.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.iter().all(|s| s.is_subset(m)));
    }

    #[test]
    fn variable_set_validation() {
        assert_eq!(VariableSet::new(["a", "a"]).unwrap_err(), Error::DuplicateVariable("a".into()));
        assert_eq!(VariableSet::new([""]).unwrap_err(), Error::EmptyVariableName);
        assert!(VariableSet::indexed(3).is_indexed());
    }
}
