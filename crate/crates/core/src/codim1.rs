//! Connectedness in codimension one.
//!
//! Two minimal primes `p, q` of an ideal of height `h` are adjacent when
//! `p + q` is generated by `h + 1` variables; the ideal is connected in
//! codimension one when this graph on `Min(S/I)` is connected.

use std::collections::VecDeque;

use serde::Serialize;

use crate::decompose::{associated_prime_masks, minimal_prime_masks};
use crate::error::{Error, Result};
use crate::ideal::{Monomial, MonomialIdeal, VarMask};
use crate::localize::killing;
use crate::oracle::complex::SimplicialComplex;
use crate::polymatroid::is_matroidal;

/// Graph on the minimal primes of an equidimensional ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinPrimeGraph {
    pub height: usize,
    pub nodes: Vec<VarMask>,
    pub edges: Vec<(usize, usize)>,
}

impl MinPrimeGraph {
    pub fn new(ideal: &MonomialIdeal) -> Result<Self> {
        let nodes = minimal_prime_masks(ideal)?;
        let height = nodes[0].len();
        if nodes.iter().any(|p| p.len() != height) {
            return Err(Error::NotEquidimensional);
        }
        let mut edges = Vec::new();
        for a in 0..nodes.len() {
            for b in a + 1..nodes.len() {
                if nodes[a].union(nodes[b]).len() == height + 1 {
                    edges.push((a, b));
                }
            }
        }
        Ok(MinPrimeGraph { height, nodes, edges })
    }

    fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.nodes.len()];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }
}

/// Breadth-first search from node 0: returns tree edges and the reached set.
fn bfs(adj: &[Vec<usize>]) -> (Vec<(usize, usize)>, Vec<bool>) {
    let mut seen = vec![false; adj.len()];
    let mut tree = Vec::new();
    if adj.is_empty() {
        return (tree, seen);
    }
    let mut queue = VecDeque::from([0usize]);
    seen[0] = true;
    while let Some(a) = queue.pop_front() {
        for &b in &adj[a] {
            if !seen[b] {
                seen[b] = true;
                tree.push((a, b));
                queue.push_back(b);
            }
        }
    }
    (tree, seen)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Codim1Certificate {
    /// Minimal primes are not all of one height.
    NotEquidimensional { heights: Vec<usize> },
    /// Edges of a breadth-first spanning tree, as pairs of primes.
    SpanningTree { edges: Vec<(Vec<String>, Vec<String>)> },
    /// Primes reachable from the first minimal prime versus the rest.
    Bipartition { reached: Vec<Vec<String>>, unreached: Vec<Vec<String>> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Codim1Verdict {
    pub connected: bool,
    pub certificate: Codim1Certificate,
}

pub fn is_connected_codim_one(ideal: &MonomialIdeal) -> Result<Codim1Verdict> {
    ideal.ensure_proper()?;
    let vars = ideal.vars();
    let graph = match MinPrimeGraph::new(ideal) {
        Ok(g) => g,
        Err(Error::NotEquidimensional) => {
            let heights = minimal_prime_masks(ideal)?.iter().map(|p| p.len()).collect();
            return Ok(Codim1Verdict {
                connected: false,
                certificate: Codim1Certificate::NotEquidimensional { heights },
            });
        }
        Err(e) => return Err(e),
    };
    let (tree, seen) = bfs(&graph.adjacency());
    let names = |i: usize| vars.mask_names(graph.nodes[i]);
    if seen.iter().all(|&s| s) {
        Ok(Codim1Verdict {
            connected: true,
            certificate: Codim1Certificate::SpanningTree {
                edges: tree.into_iter().map(|(a, b)| (names(a), names(b))).collect(),
            },
        })
    } else {
        let (reached, unreached): (Vec<usize>, Vec<usize>) = (0..graph.nodes.len()).partition(|&i| seen[i]);
        Ok(Codim1Verdict {
            connected: false,
            certificate: Codim1Certificate::Bipartition {
                reached: reached.into_iter().map(names).collect(),
                unreached: unreached.into_iter().map(names).collect(),
            },
        })
    }
}

/// Facet graph of a pure complex, facets adjacent when they share a codimension-one face.
pub fn strongly_connected(complex: &SimplicialComplex) -> Result<bool> {
    if !complex.is_pure() {
        return Err(Error::NonPureComplex);
    }
    let facets = complex.facets();
    let Some(top) = facets.first().map(|f| f.len()) else {
        return Ok(true);
    };
    let mut adj = vec![Vec::new(); facets.len()];
    for a in 0..facets.len() {
        for b in a + 1..facets.len() {
            if facets[a].intersection(facets[b]).len() + 1 == top {
                adj[a].push(b);
                adj[b].push(a);
            }
        }
    }
    Ok(bfs(&adj).1.into_iter().all(|s| s))
}

/// Verdicts of the three equivalent conditions for a matroidal ideal and a variable set `T`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaLocReport {
    /// No generator is divisible by the product of `T`.
    pub a: bool,
    /// Killing all of `T` equals killing any `t - 1` of its variables.
    pub b: bool,
    /// No associated prime meets `T` in exactly one variable.
    pub c: bool,
}

impl LemmaLocReport {
    pub fn agree(&self) -> bool {
        self.a == self.b && self.b == self.c
    }
}

/// Errors unless `I` is matroidal, `T ⊆ supp(I)` is nonempty, and every
/// `(t-1)`-subset of `T` divides some generator.
pub fn check_lemma_loc_hypothesis(ideal: &MonomialIdeal, t_set: VarMask) -> Result<()> {
    if !is_matroidal(ideal)? {
        return Err(Error::Hypothesis("ideal is not matroidal".into()));
    }
    if t_set.is_empty() || !t_set.is_subset(ideal.support()) {
        return Err(Error::Hypothesis("T must be a nonempty subset of the support".into()));
    }
    let n = ideal.nvars();
    for x in t_set.iter() {
        let sub = Monomial::from_mask(n, t_set.without(x));
        if !ideal.gens().iter().any(|u| sub.divides(u)) {
            let names = ideal.vars().mask_names(t_set.without(x)).join("*");
            return Err(Error::Hypothesis(format!("no generator is divisible by {names}")));
        }
    }
    Ok(())
}

pub fn lemma_loc_equivalence(ideal: &MonomialIdeal, t_set: VarMask) -> Result<LemmaLocReport> {
    check_lemma_loc_hypothesis(ideal, t_set)?;
    let n = ideal.nvars();
    let product = Monomial::from_mask(n, t_set);
    let a = !ideal.gens().iter().any(|u| product.divides(u));
    let all_killed = killing(ideal, t_set);
    let b = t_set.iter().all(|x| killing(ideal, t_set.without(x)) == all_killed);
    let c = associated_prime_masks(ideal)?.iter().all(|p| p.intersection(t_set).len() != 1);
    Ok(LemmaLocReport { a, b, c })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::VariableSet;
    use crate::polymatroid::squarefree_veronese;
    use crate::text::parse_ideal;

    fn p(text: &str) -> MonomialIdeal {
        parse_ideal(text).unwrap().ideal
    }

    #[test]
    fn single_minimal_prime_is_connected() {
        let c2 = p("(x1^3, x1^2*x2, x1^2*x3, x1*x2*x3, x1*x2^2)");
        assert!(is_connected_codim_one(&c2).unwrap().connected);
    }

    #[test]
    fn squarefree_veronese_is_connected() {
        let v = VariableSet::indexed(4);
        let i = squarefree_veronese(&v, v.full_mask(), 2);
        let verdict = is_connected_codim_one(&i).unwrap();
        assert!(verdict.connected);
        assert!(matches!(verdict.certificate, Codim1Certificate::SpanningTree { ref edges } if edges.len() == 3));
    }

    #[test]
    fn disjoint_lines_are_disconnected() {
        let verdict = is_connected_codim_one(&p("(x1*x3, x1*x4, x2*x3, x2*x4)")).unwrap();
        assert!(!verdict.connected);
        assert!(matches!(verdict.certificate, Codim1Certificate::Bipartition { .. }));
    }

    #[test]
    fn mixed_heights_are_refused_with_reason() {
        // (x1) ∩ (x2, x3)
        let verdict = is_connected_codim_one(&p("(x1*x2, x1*x3)")).unwrap();
        assert!(!verdict.connected);
        assert_eq!(verdict.certificate, Codim1Certificate::NotEquidimensional { heights: vec![1, 2] });
        assert_eq!(MinPrimeGraph::new(&p("(x1*x2, x1*x3)")).unwrap_err(), Error::NotEquidimensional);
    }

    #[test]
    fn height_four_primes_example() {
        // (x1..x4) ∩ (x3..x6) ∩ (x1,x2,x5,x6): pairwise sums are all six variables
        let v = VariableSet::indexed(6);
        let i = MonomialIdeal::intersect_all(
            &v,
            &[
                MonomialIdeal::prime(v.clone(), VarMask::from_indices([0, 1, 2, 3])),
                MonomialIdeal::prime(v.clone(), VarMask::from_indices([2, 3, 4, 5])),
                MonomialIdeal::prime(v.clone(), VarMask::from_indices([0, 1, 4, 5])),
            ],
        )
        .unwrap();
        let verdict = is_connected_codim_one(&i).unwrap();
        assert!(!verdict.connected);
    }

    #[test]
    fn strong_connectivity() {
        let v = VariableSet::indexed(4);
        let path = SimplicialComplex::from_facets(v.clone(), vec![VarMask(0b0011), VarMask(0b0110)]);
        assert!(strongly_connected(&path).unwrap());
        let split = SimplicialComplex::from_facets(v.clone(), vec![VarMask(0b0011), VarMask(0b1100)]);
        assert!(!strongly_connected(&split).unwrap());
        let impure = SimplicialComplex::from_facets(v, vec![VarMask(0b0111), VarMask(0b1000)]);
        assert_eq!(strongly_connected(&impure).unwrap_err(), Error::NonPureComplex);
    }

    #[test]
    fn lemma_loc_examples() {
        let ex = p("vars u,x,y,z,w\n(u*x*y, u*y*z, u*z*w, u*x*w, x*y*z, w*x*z)");
        let t = VarMask::from_indices([1, 2]);
        let r = lemma_loc_equivalence(&ex, t).unwrap();
        assert_eq!(r, LemmaLocReport { a: false, b: false, c: false });

        let r = lemma_loc_equivalence(&ex, VarMask::single(0)).unwrap();
        assert!(!r.a && r.agree());

        let v = VariableSet::indexed(3);
        let sv = squarefree_veronese(&v, v.full_mask(), 2);
        let r = lemma_loc_equivalence(&sv, v.full_mask()).unwrap();
        assert_eq!(r, LemmaLocReport { a: true, b: true, c: true });
    }

    #[test]
    fn lemma_loc_hypothesis_is_reported() {
        let c2 = p("(x1^3, x1^2*x2, x1^2*x3, x1*x2*x3, x1*x2^2)");
        assert!(matches!(lemma_loc_equivalence(&c2, VarMask::single(0)), Err(Error::Hypothesis(_))));
        // no generator is divisible by x1*x4
        let i = p("(x1*x2, x1*x3, x2*x4, x3*x4)");
        assert!(matches!(
            lemma_loc_equivalence(&i, VarMask::from_indices([0, 1, 3])),
            Err(Error::Hypothesis(_))
        ));
    }
}
