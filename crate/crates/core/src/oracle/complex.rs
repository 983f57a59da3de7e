//! Simplicial complexes on a [`VariableSet`] and the Stanley-Reisner correspondence.
//!
//! Faces are [`VarMask`]s. The void complex has no facets; the complex `{∅}`
//! has the single facet `∅`.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::ideal::{Monomial, MonomialIdeal, VarMask, VariableSet};

/// Largest vertex count accepted by the brute-force subset enumerations here.
pub const MAX_ENUMERATED_VERTICES: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: VariableSet,
    facets: Vec<VarMask>,
}

fn maximal_sets(mut sets: Vec<VarMask>) -> Vec<VarMask> {
    sets.sort_by_key(|s| (std::cmp::Reverse(s.len()), s.0));
    sets.dedup();
    let mut kept: Vec<VarMask> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| s.is_subset(*k)) {
            kept.push(s);
        }
    }
    kept
}

impl SimplicialComplex {
    /// Complex generated by `facets`; non-maximal entries are dropped.
    pub fn from_facets(vertices: VariableSet, facets: Vec<VarMask>) -> Self {
        SimplicialComplex { vertices, facets: maximal_sets(facets) }
    }

    pub fn vertices(&self) -> &VariableSet {
        &self.vertices
    }

    pub fn facets(&self) -> &[VarMask] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// Dimension, or `None` for the void complex. `{∅}` has dimension -1.
    pub fn dim(&self) -> Option<i64> {
        self.facets.iter().map(|f| f.len() as i64 - 1).max()
    }

    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].len() == w[1].len())
    }

    pub fn contains_face(&self, face: VarMask) -> bool {
        self.facets.iter().any(|f| face.is_subset(*f))
    }

    /// Every face, the empty face included, sorted by size then mask.
    pub fn faces(&self) -> Vec<VarMask> {
        let mut seen: HashSet<VarMask> = HashSet::new();
        for f in &self.facets {
            seen.extend(f.subsets());
        }
        let mut faces: Vec<VarMask> = seen.into_iter().collect();
        faces.sort_by_key(|f| (f.len(), f.0));
        faces
    }

    /// `lk(F) = {G : G ∩ F = ∅, G ∪ F ∈ Δ}`; void when `F` is not a face.
    pub fn link(&self, face: VarMask) -> SimplicialComplex {
        let facets = self.facets.iter().filter(|f| face.is_subset(**f)).map(|f| f.difference(face)).collect();
        SimplicialComplex::from_facets(self.vertices.clone(), facets)
    }

    /// Face counts `f_{-1}, f_0, ..., f_dim`.
    pub fn f_vector(&self) -> Vec<usize> {
        let Some(dim) = self.dim() else {
            return Vec::new();
        };
        let mut counts = vec![0usize; (dim + 2) as usize];
        for f in self.faces() {
            counts[f.len()] += 1;
        }
        counts
    }
}

fn check_enumerable(n: usize) -> Result<()> {
    if n > MAX_ENUMERATED_VERTICES {
        Err(Error::TooManyVariables { max: MAX_ENUMERATED_VERTICES, found: n })
    } else {
        Ok(())
    }
}

/// `Δ(I)`: faces are the vertex sets `F` with `x_F ∉ I`, found by testing every subset.
pub fn stanley_reisner_complex(ideal: &MonomialIdeal) -> Result<SimplicialComplex> {
    if !ideal.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let n = ideal.nvars();
    check_enumerable(n)?;
    let gen_masks: Vec<VarMask> = ideal.gens().iter().map(Monomial::support).collect();
    let is_face = |f: VarMask| !gen_masks.iter().any(|g| g.is_subset(f));
    let faces: Vec<VarMask> = VarMask::full(n).subsets().filter(|&f| is_face(f)).collect();
    let facets = faces
        .iter()
        .copied()
        .filter(|&f| (0..n).all(|i| f.contains(i) || !is_face(f.with(i))))
        .collect();
    Ok(SimplicialComplex::from_facets(ideal.vars().clone(), facets))
}

/// `I_Δ`: generated by the minimal non-faces.
pub fn stanley_reisner_ideal(complex: &SimplicialComplex) -> Result<MonomialIdeal> {
    let n = complex.vertices.len();
    check_enumerable(n)?;
    let gens = VarMask::full(n)
        .subsets()
        .filter(|&f| !complex.contains_face(f) && f.iter().all(|i| complex.contains_face(f.without(i))))
        .map(|f| Monomial::from_mask(n, f))
        .collect();
    MonomialIdeal::new(complex.vertices.clone(), gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_ideal;

    fn p(text: &str) -> MonomialIdeal {
        parse_ideal(text).unwrap().ideal
    }

    #[test]
    fn principal_edge_gives_two_points() {
        let c = stanley_reisner_complex(&p("(x1*x2)")).unwrap();
        assert_eq!(c.facets(), &[VarMask(0b01), VarMask(0b10)]);
        assert_eq!(c.dim(), Some(0));
    }

    #[test]
    fn hollow_triangle() {
        let c = stanley_reisner_complex(&p("(x1*x2*x3)")).unwrap();
        assert_eq!(c.facets(), &[VarMask(0b011), VarMask(0b101), VarMask(0b110)]);
        assert_eq!(c.f_vector(), vec![1, 3, 3]);
    }

    #[test]
    fn round_trip_on_five_vertices() {
        let i = p("vars u,x,y,z,w\n(u*x*y, u*y*z, u*z*w, u*x*w, x*y*z, w*x*z)");
        let c = stanley_reisner_complex(&i).unwrap();
        // facets are the complements of the four height-two primes
        assert_eq!(c.facets().len(), 4);
        assert!(c.facets().iter().all(|f| f.len() == 3));
        assert_eq!(stanley_reisner_ideal(&c).unwrap(), i);
    }

    #[test]
    fn maximal_ideal_gives_empty_face_only() {
        let c = stanley_reisner_complex(&MonomialIdeal::prime(VariableSet::indexed(3), VarMask::full(3))).unwrap();
        assert_eq!(c.facets(), &[VarMask::EMPTY]);
        assert_eq!(c.dim(), Some(-1));
    }

    #[test]
    fn links() {
        let c = stanley_reisner_complex(&p("(x1*x2*x3)")).unwrap();
        let lk = c.link(VarMask::single(0));
        assert_eq!(lk.facets(), &[VarMask(0b010), VarMask(0b100)]);
        assert_eq!(c.link(VarMask::EMPTY), c);
        assert!(c.link(VarMask::full(3)).is_void());
    }

    #[test]
    fn non_squarefree_rejected() {
        assert_eq!(stanley_reisner_complex(&p("(x1^2)")).unwrap_err(), Error::NotSquarefree);
    }
}
