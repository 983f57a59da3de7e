//! Irreducible and primary decompositions of monomial ideals, associated and
//! minimal primes, and the prime-power presentation of polymatroidal ideals.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::{Monomial, MonomialIdeal, VarMask, VariableSet};
use crate::localize;
use crate::polymatroid;

/// A monomial prime `(x_i : i in members)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialPrime {
    vars: VariableSet,
    members: VarMask,
}

impl MonomialPrime {
    pub fn new(vars: VariableSet, members: VarMask) -> Self {
        debug_assert!(members.is_subset(vars.full_mask()));
        MonomialPrime { vars, members }
    }

    pub fn maximal(vars: VariableSet) -> Self {
        let members = vars.full_mask();
        MonomialPrime { vars, members }
    }

    pub fn vars(&self) -> &VariableSet {
        &self.vars
    }

    pub fn members(&self) -> VarMask {
        self.members
    }

    pub fn height(&self) -> usize {
        self.members.len()
    }

    pub fn is_maximal(&self) -> bool {
        self.members == self.vars.full_mask()
    }

    pub fn names(&self) -> Vec<String> {
        self.vars.mask_names(self.members)
    }

    pub fn to_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::prime(self.vars.clone(), self.members)
    }

    pub fn power(&self, a: u32) -> MonomialIdeal {
        MonomialIdeal::prime_power(self.vars.clone(), self.members, a)
    }

    pub fn sum(&self, other: &MonomialPrime) -> MonomialPrime {
        MonomialPrime { vars: self.vars.clone(), members: self.members.union(other.members) }
    }
}

impl std::fmt::Display for MonomialPrime {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({})", self.names().join(","))
    }
}

/// Irreducible monomial ideal `(x_i^{e_i} : e_i > 0)`, stored as its exponent vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IrreducibleComponent {
    exps: Vec<u32>,
}

impl IrreducibleComponent {
    pub fn new(exps: Vec<u32>) -> Self {
        IrreducibleComponent { exps }
    }

    /// `(variable index, exponent)` pairs, increasing in the index.
    pub fn entries(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, &e)| (i, e))
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn radical(&self) -> VarMask {
        VarMask::from_indices(self.entries().map(|(i, _)| i))
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.entries().any(|(i, e)| m.exponent(i) >= e)
    }

    /// `other ⊆ self`.
    pub fn contains_component(&self, other: &IrreducibleComponent) -> bool {
        other.entries().all(|(j, b)| self.exps[j] > 0 && self.exps[j] <= b)
    }

    pub fn to_ideal(&self, vars: &VariableSet) -> MonomialIdeal {
        let n = vars.len();
        let gens = self.entries().map(|(i, e)| Monomial::pure_power(n, i, e)).collect();
        MonomialIdeal::from_gens_unchecked(vars.clone(), gens)
    }

    fn sort_key(&self) -> (usize, u64, Vec<u32>) {
        let r = self.radical();
        (r.len(), r.0, self.exps.clone())
    }
}

fn canonical_components(mut comps: Vec<IrreducibleComponent>) -> Vec<IrreducibleComponent> {
    comps.sort_by_key(IrreducibleComponent::sort_key);
    comps.dedup();
    // keep inclusion-minimal components; larger ones are redundant in the intersection
    let mut kept: Vec<IrreducibleComponent> = Vec::with_capacity(comps.len());
    for c in &comps {
        if !comps.iter().any(|o| o != c && c.contains_component(o)) {
            kept.push(c.clone());
        }
    }
    kept
}

/// Irredundant irreducible decomposition by generator splitting:
/// for a generator `u = x_i^a * w` with `w != 1`, `I = (I + x_i^a) ∩ (I + w)`.
pub fn irreducible_decomposition(ideal: &MonomialIdeal) -> Result<Vec<IrreducibleComponent>> {
    ideal.ensure_proper()?;
    let mut memo: HashMap<Vec<Monomial>, Vec<IrreducibleComponent>> = HashMap::new();
    let raw = split(ideal, &mut memo);
    Ok(canonical_components(raw))
}

fn split(
    ideal: &MonomialIdeal,
    memo: &mut HashMap<Vec<Monomial>, Vec<IrreducibleComponent>>,
) -> Vec<IrreducibleComponent> {
    if let Some(hit) = memo.get(ideal.gens()) {
        return hit.clone();
    }
    let n = ideal.nvars();
    let result = match ideal.gens().iter().find(|g| g.as_pure_power().is_none()) {
        None => {
            let mut exps = vec![0u32; n];
            for g in ideal.gens() {
                let (i, e) = g.as_pure_power().expect("pure powers only");
                exps[i] = e;
            }
            vec![IrreducibleComponent::new(exps)]
        }
        Some(g) => {
            let i = g.support().iter().next().expect("non-pure generator has support");
            let head = Monomial::pure_power(n, i, g.exponent(i));
            let tail = g.with_exponent(i, 0);
            let mut out = Vec::new();
            for extra in [head, tail] {
                let mut gens = ideal.gens().to_vec();
                gens.push(extra);
                let next = MonomialIdeal::from_gens_unchecked(ideal.vars().clone(), gens);
                out.extend(split(&next, memo));
            }
            canonical_components(out)
        }
    };
    memo.insert(ideal.gens().to_vec(), result.clone());
    result
}

/// Irreducible decomposition built by adding one generator at a time, using
/// `Q + (u) = ∩_{i in supp u} (Q + x_i^{u_i})` for irreducible `Q`.
pub fn irreducible_decomposition_incremental(ideal: &MonomialIdeal) -> Result<Vec<IrreducibleComponent>> {
    ideal.ensure_proper()?;
    let n = ideal.nvars();
    // start from the unit ideal's empty intersection: the zero ideal is (no entries)
    let mut comps = vec![IrreducibleComponent::new(vec![0; n])];
    for g in ideal.gens() {
        let mut next = Vec::with_capacity(comps.len() * 2);
        for q in &comps {
            if q.contains(g) {
                next.push(q.clone());
                continue;
            }
            for (i, e) in g.exponents().iter().enumerate() {
                if *e > 0 {
                    let mut exps = q.exps.clone();
                    exps[i] = *e;
                    next.push(IrreducibleComponent::new(exps));
                }
            }
        }
        comps = canonical_components(next);
    }
    Ok(comps)
}

/// Intersection of the given irreducible components.
pub fn intersect_components(vars: &VariableSet, comps: &[IrreducibleComponent]) -> Result<MonomialIdeal> {
    let ideals: Vec<MonomialIdeal> = comps.iter().map(|c| c.to_ideal(vars)).collect();
    MonomialIdeal::intersect_all(vars, &ideals)
}

/// Associated primes as masks, sorted by height then mask.
pub fn associated_prime_masks(ideal: &MonomialIdeal) -> Result<Vec<VarMask>> {
    let comps = irreducible_decomposition(ideal)?;
    Ok(sorted_masks(comps.iter().map(IrreducibleComponent::radical)))
}

/// Minimal primes as masks (associated primes of the radical), sorted by height then mask.
pub fn minimal_prime_masks(ideal: &MonomialIdeal) -> Result<Vec<VarMask>> {
    associated_prime_masks(&ideal.radical())
}

fn sorted_masks<I: IntoIterator<Item = VarMask>>(masks: I) -> Vec<VarMask> {
    let mut v: Vec<VarMask> = masks.into_iter().collect();
    v.sort_by_key(|m| (m.len(), m.0));
    v.dedup();
    v
}

/// Inclusion-minimal members of a set of primes.
pub fn inclusion_minimal(masks: &[VarMask]) -> Vec<VarMask> {
    masks
        .iter()
        .copied()
        .filter(|m| !masks.iter().any(|o| o != m && o.is_subset(*m)))
        .collect()
}

pub fn associated_primes(ideal: &MonomialIdeal) -> Result<Vec<MonomialPrime>> {
    let vars = ideal.vars();
    Ok(associated_prime_masks(ideal)?.into_iter().map(|m| MonomialPrime::new(vars.clone(), m)).collect())
}

pub fn minimal_primes(ideal: &MonomialIdeal) -> Result<Vec<MonomialPrime>> {
    let vars = ideal.vars();
    Ok(minimal_prime_masks(ideal)?.into_iter().map(|m| MonomialPrime::new(vars.clone(), m)).collect())
}

/// Height: the least size of a minimal prime.
pub fn height(ideal: &MonomialIdeal) -> Result<usize> {
    Ok(minimal_prime_masks(ideal)?.iter().map(|m| m.len()).min().expect("proper ideal has a minimal prime"))
}

pub fn is_unmixed(ideal: &MonomialIdeal) -> Result<bool> {
    let ass = associated_prime_masks(ideal)?;
    Ok(ass.iter().all(|m| m.len() == ass[0].len()))
}

pub fn is_equidimensional(ideal: &MonomialIdeal) -> Result<bool> {
    let min = minimal_prime_masks(ideal)?;
    Ok(min.iter().all(|m| m.len() == min[0].len()))
}

/// One primary component together with the irreducible pieces it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimaryComponent {
    pub prime: MonomialPrime,
    pub ideal: MonomialIdeal,
    pub irreducibles: Vec<IrreducibleComponent>,
    pub minimal: bool,
}

impl PrimaryComponent {
    /// `Some(a)` when the component equals `prime^a`.
    pub fn prime_power_exponent(&self) -> Option<u32> {
        let a = self.ideal.gens().iter().map(Monomial::degree).min()?;
        (self.prime.power(a) == self.ideal).then_some(a)
    }
}

/// Irredundant primary decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub ideal: MonomialIdeal,
    pub components: Vec<PrimaryComponent>,
}

impl Decomposition {
    pub fn primes(&self) -> Vec<MonomialPrime> {
        self.components.iter().map(|c| c.prime.clone()).collect()
    }

    pub fn intersection(&self) -> Result<MonomialIdeal> {
        MonomialIdeal::intersect_all(self.ideal.vars(), self.components.iter().map(|c| &c.ideal))
    }

    /// Re-intersects the components and checks that dropping any one of them
    /// changes the intersection.
    pub fn verify(&self) -> Result<bool> {
        if self.intersection()? != self.ideal {
            return Ok(false);
        }
        for skip in 0..self.components.len() {
            let others = MonomialIdeal::intersect_all(
                self.ideal.vars(),
                self.components.iter().enumerate().filter(|(i, _)| *i != skip).map(|(_, c)| &c.ideal),
            )?;
            if self.components[skip].ideal.contains_ideal(&others) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Primary decomposition: irreducible components grouped by radical and
/// intersected. Each component is then replaced, in order of height, by the
/// smallest power of its prime that keeps the intersection equal to `I`, when
/// such a power exists.
pub fn primary_decomposition(ideal: &MonomialIdeal) -> Result<Decomposition> {
    let comps = irreducible_decomposition(ideal)?;
    let vars = ideal.vars();
    let mut groups: BTreeMap<(usize, u64), Vec<IrreducibleComponent>> = BTreeMap::new();
    for c in comps {
        let r = c.radical();
        groups.entry((r.len(), r.0)).or_default().push(c);
    }
    let masks: Vec<VarMask> = groups.keys().map(|&(_, m)| VarMask(m)).collect();
    let minimal = inclusion_minimal(&masks);
    let mut components = groups
        .into_iter()
        .map(|((_, m), irreducibles)| {
            let mask = VarMask(m);
            Ok(PrimaryComponent {
                prime: MonomialPrime::new(vars.clone(), mask),
                ideal: intersect_components(vars, &irreducibles)?,
                irreducibles,
                minimal: minimal.contains(&mask),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    for k in 0..components.len() {
        if components[k].prime_power_exponent().is_some() {
            continue;
        }
        let others = MonomialIdeal::intersect_all(
            vars,
            components.iter().enumerate().filter(|(i, _)| *i != k).map(|(_, c)| &c.ideal),
        )?;
        // prime^bound lies inside the component by pigeonhole
        let bound: u32 = components[k].prime.members().iter().map(|i| components[k].ideal.max_exponent(i)).sum();
        for a in 1..=bound {
            let candidate = components[k].prime.power(a);
            if others.intersection(&candidate)? == *ideal {
                components[k].ideal = candidate;
                break;
            }
        }
    }
    Ok(Decomposition { ideal: ideal.clone(), components })
}

/// `prime^exponent`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimePower {
    pub prime: MonomialPrime,
    pub exponent: u32,
}

impl PrimePower {
    pub fn to_ideal(&self) -> MonomialIdeal {
        self.prime.power(self.exponent)
    }
}

/// `I = p_1^{a_1} ∩ ... ∩ p_r^{a_r} ∩ m^s` for a polymatroidal ideal, with
/// `p_i` the non-maximal associated primes and `s = 0` meaning no `m` term.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HvPresentation {
    pub powers: Vec<PrimePower>,
    pub s: u32,
}

impl HvPresentation {
    pub fn intersection(&self, vars: &VariableSet) -> Result<MonomialIdeal> {
        let mut ideals: Vec<MonomialIdeal> = self.powers.iter().map(PrimePower::to_ideal).collect();
        if self.s > 0 {
            ideals.push(MonomialIdeal::maximal_power(vars.clone(), self.s));
        }
        MonomialIdeal::intersect_all(vars, &ideals)
    }
}

fn intersect_powers(vars: &VariableSet, parts: &[(VarMask, u32)]) -> Result<MonomialIdeal> {
    let ideals: Vec<MonomialIdeal> =
        parts.iter().map(|&(m, a)| MonomialIdeal::prime_power(vars.clone(), m, a)).collect();
    MonomialIdeal::intersect_all(vars, &ideals)
}

/// Prime-power presentation of a polymatroidal ideal generated in degree `d`.
///
/// Primes are processed by increasing height. The exponent of `p` is the least
/// `a` in `[1, d]` for which the localization `I(p)` equals `p^a` intersected
/// with the already fixed powers of the primes below `p`; then `s` is the least
/// value in `[0, d]` making the global intersection equal `I`.
pub fn hv_presentation(ideal: &MonomialIdeal) -> Result<HvPresentation> {
    if !polymatroid::is_polymatroidal(ideal)?.holds() {
        return Err(Error::NotPolymatroidal);
    }
    let d = ideal.require_single_degree()?;
    let vars = ideal.vars();
    let full = vars.full_mask();
    let primes: Vec<VarMask> =
        associated_prime_masks(ideal)?.into_iter().filter(|&m| m != full).collect();

    let mut fixed: Vec<(VarMask, u32)> = Vec::with_capacity(primes.len());
    for &p in &primes {
        let local = localize::at_mask(ideal, p);
        let below: Vec<(VarMask, u32)> =
            fixed.iter().copied().filter(|&(q, _)| q != p && q.is_subset(p)).collect();
        let mut found = None;
        for a in 1..=d {
            let mut parts = below.clone();
            parts.push((p, a));
            if intersect_powers(vars, &parts)? == local {
                found = Some(a);
                break;
            }
        }
        fixed.push((p, found.ok_or(Error::NoPresentation { bound: d })?));
    }

    let base = intersect_powers(vars, &fixed)?;
    let mut s_found = None;
    for s in 0..=d {
        let candidate = if s == 0 {
            base.clone()
        } else {
            base.intersection(&MonomialIdeal::maximal_power(vars.clone(), s))?
        };
        if candidate == *ideal {
            s_found = Some(s);
            break;
        }
    }
    let s = s_found.ok_or(Error::NoPresentation { bound: d })?;
    Ok(HvPresentation {
        powers: fixed
            .into_iter()
            .map(|(m, a)| PrimePower { prime: MonomialPrime::new(vars.clone(), m), exponent: a })
            .collect(),
        s,
    })
}

/// JSON shape of one decomposition entry.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ComponentRecord {
    PrimePower {
        prime: Vec<String>,
        exponent: u32,
        minimal: bool,
    },
    Primary {
        prime: Vec<String>,
        generators: Vec<String>,
        minimal: bool,
    },
    Irreducible {
        irreducible: BTreeMap<String, u32>,
        minimal: bool,
    },
}

impl Decomposition {
    /// Primary components: `{prime, exponent}` for prime powers, otherwise `{prime, generators}`.
    pub fn primary_records(&self) -> Vec<ComponentRecord> {
        self.components
            .iter()
            .map(|c| match c.prime_power_exponent() {
                Some(a) => ComponentRecord::PrimePower { prime: c.prime.names(), exponent: a, minimal: c.minimal },
                None => ComponentRecord::Primary {
                    prime: c.prime.names(),
                    generators: c
                        .ideal
                        .gens()
                        .iter()
                        .map(|g| crate::text::render_monomial(self.ideal.vars(), g))
                        .collect(),
                    minimal: c.minimal,
                },
            })
            .collect()
    }

    /// Irreducible components as `{irreducible: {var: exp}}`, flagged by minimality of their radical.
    pub fn irreducible_records(&self) -> Vec<ComponentRecord> {
        let vars = self.ideal.vars();
        self.components
            .iter()
            .flat_map(|c| {
                c.irreducibles.iter().map(move |irr| ComponentRecord::Irreducible {
                    irreducible: irr.entries().map(|(i, e)| (vars.name(i).to_string(), e)).collect(),
                    minimal: c.minimal,
                })
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_ideal;

    fn p(text: &str) -> MonomialIdeal {
        parse_ideal(text).unwrap().ideal
    }

    fn brute_force_equal(vars: &VariableSet, comps: &[IrreducibleComponent], ideal: &MonomialIdeal, deg: u32) -> bool {
        let n = vars.len();
        (0..=deg).all(|d| {
            crate::ideal::monomials_of_degree(n, vars.full_mask(), d)
                .iter()
                .all(|m| comps.iter().all(|c| c.contains(m)) == ideal.contains(m))
        })
    }

    #[test]
    fn principal_squarefree_splits_into_variables() {
        let i = p("(x1*x2)");
        let comps = irreducible_decomposition(&i).unwrap();
        assert_eq!(comps, vec![IrreducibleComponent::new(vec![1, 0]), IrreducibleComponent::new(vec![0, 1])]);
    }

    #[test]
    fn embedded_component_example() {
        let i = p("(x1^2, x1*x2, x1*x3, x2*x3)");
        let comps = irreducible_decomposition(&i).unwrap();
        assert!(brute_force_equal(i.vars(), &comps, &i, 4));
        assert_eq!(intersect_components(i.vars(), &comps).unwrap(), i);
        let ass = associated_prime_masks(&i).unwrap();
        assert_eq!(ass, vec![VarMask(0b011), VarMask(0b101), VarMask(0b111)]);
    }

    #[test]
    fn square_of_maximal_ideal_is_reducible() {
        let i = p("(x1^2, x1*x2, x2^2)");
        let comps = irreducible_decomposition(&i).unwrap();
        assert_eq!(comps, vec![IrreducibleComponent::new(vec![1, 2]), IrreducibleComponent::new(vec![2, 1])]);
        assert!(brute_force_equal(i.vars(), &comps, &i, 4));
    }

    #[test]
    fn splitting_and_incremental_agree() {
        for text in [
            "(x1^3, x1^2*x2, x1^2*x3, x1*x2*x3, x1*x2^2)",
            "(x1^2*x2, x1*x2^2, x1*x2*x3)",
            "(x1*x3, x1*x4, x2*x3, x2*x4)",
            "(x1^2*x3, x2^3, x1*x2*x3^2, x3^4)",
        ] {
            let i = p(text);
            assert_eq!(irreducible_decomposition(&i).unwrap(), irreducible_decomposition_incremental(&i).unwrap());
        }
    }

    #[test]
    fn degenerate_ideals_are_rejected() {
        let vars = VariableSet::indexed(2);
        assert_eq!(irreducible_decomposition(&MonomialIdeal::zero(vars.clone())).unwrap_err(), Error::ZeroIdeal);
        assert_eq!(irreducible_decomposition(&MonomialIdeal::unit(vars)).unwrap_err(), Error::UnitIdeal);
    }

    #[test]
    fn mixed_connected_example() {
        let i = p("(x1^3, x1^2*x2, x1^2*x3, x1*x2*x3, x1*x2^2)");
        let dec = primary_decomposition(&i).unwrap();
        assert!(dec.verify().unwrap());
        let exps: Vec<_> = dec.components.iter().map(|c| (c.prime.members(), c.prime_power_exponent())).collect();
        assert_eq!(exps, vec![(VarMask(0b001), Some(1)), (VarMask(0b011), Some(2)), (VarMask(0b111), Some(3))]);
        assert_eq!(minimal_prime_masks(&i).unwrap(), vec![VarMask(0b001)]);
        assert_eq!(height(&i).unwrap(), 1);
        assert!(is_equidimensional(&i).unwrap());
        assert!(!is_unmixed(&i).unwrap());
    }

    #[test]
    fn unmixed_matroidal_example() {
        let i = p("vars u,x,y,z,w\n(u*x*y, u*y*z, u*z*w, u*x*w, x*y*z, w*x*z)");
        let names: Vec<Vec<String>> = associated_primes(&i).unwrap().iter().map(MonomialPrime::names).collect();
        assert_eq!(names, vec![vec!["u", "x"], vec!["u", "z"], vec!["x", "z"], vec!["y", "w"]]);
        assert_eq!(height(&i).unwrap(), 2);
        assert!(is_unmixed(&i).unwrap());
    }

    #[test]
    fn hv_presentations() {
        let c2 = p("(x1^3, x1^2*x2, x1^2*x3, x1*x2*x3, x1*x2^2)");
        let hv = hv_presentation(&c2).unwrap();
        let got: Vec<_> = hv.powers.iter().map(|pp| (pp.prime.members(), pp.exponent)).collect();
        assert_eq!(got, vec![(VarMask(0b001), 1), (VarMask(0b011), 2)]);
        assert_eq!(hv.s, 3);
        assert_eq!(hv.intersection(c2.vars()).unwrap(), c2);

        let ii = p("(x1^2*x2, x1*x2^2, x1*x2*x3)");
        let hv = hv_presentation(&ii).unwrap();
        let got: Vec<_> = hv.powers.iter().map(|pp| (pp.prime.members(), pp.exponent)).collect();
        assert_eq!(got, vec![(VarMask(0b001), 1), (VarMask(0b010), 1)]);
        assert_eq!(hv.s, 3);

        let m3 = MonomialIdeal::maximal_power(VariableSet::indexed(3), 3);
        let hv = hv_presentation(&m3).unwrap();
        assert!(hv.powers.is_empty());
        assert_eq!(hv.s, 3);
    }

    #[test]
    fn hv_rejects_non_polymatroidal() {
        assert_eq!(hv_presentation(&p("(x1*x2, x3*x4)")).unwrap_err(), Error::NotPolymatroidal);
    }

    #[test]
    fn json_records() {
        let c2 = p("(x1^3, x1^2*x2, x1^2*x3, x1*x2*x3, x1*x2^2)");
        let dec = primary_decomposition(&c2).unwrap();
        let json = serde_json::to_value(dec.primary_records()).unwrap();
        assert_eq!(json[1], serde_json::json!({"prime": ["x1", "x2"], "exponent": 2, "minimal": false}));
        let irr = serde_json::to_value(dec.irreducible_records()).unwrap();
        assert_eq!(irr[0], serde_json::json!({"irreducible": {"x1": 1}, "minimal": true}));
    }
}
