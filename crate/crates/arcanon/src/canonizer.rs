//! The full pipeline: reduce, generate candidates, flip, canonize the
//! interval matrix, flip back, take the smallest model string, expand.

use std::collections::{BTreeMap, BTreeSet};

use crate::candidates::{all_candidates, CandidateSet};
use crate::error::{Error, Result};
use crate::graph::{expand_representation, Graph, ReductionRecord, Vertex};
use crate::intersection::{flip_matrix, neighborhood_matrix};
use crate::interval::canonical_interval;
use crate::model::{canonical_rotation, model_string_tokens, render_tokens, Representation, Token};

pub const DEFAULT_K_MAX: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    CircularArc,
    NotCircularArc,
}

/// Outcome of the canonical representation pipeline.
#[derive(Debug, Clone)]
pub struct CanonOutcome {
    pub verdict: Verdict,
    /// Canonical token string and a representation of the original input
    /// graph attaining it; present iff the verdict is CircularArc.
    pub canonical: Option<(String, Representation)>,
    pub winning_candidate: Option<CandidateSet>,
    /// The reduced graph, its reduction record and the winning normalized
    /// representation of the reduced graph (before expansion).
    pub reduced_graph: Graph,
    pub record: ReductionRecord,
    pub reduced_representation: Option<Representation>,
}

/// Canonical circular-arc representation of `g`, or the not-CA verdict.
/// A budget overrun in the non-uniform generator surfaces as an error,
/// never as a negative verdict.
pub fn canonical_representation(g: &Graph, k_max: usize) -> Result<CanonOutcome> {
    let (reduced, record) = g.reduce();
    let lambda = neighborhood_matrix(&reduced);
    let candidates = all_candidates(&reduced, k_max)?;

    let mut best: Option<(Vec<Token>, Representation, CandidateSet)> = None;
    for cand in candidates {
        let flipped = flip_matrix(&lambda, &cand.vertices)?;
        // Mark X-membership with an extra color bit so that flipping back
        // is invariant under automorphisms of the canonical interval model.
        let colors: BTreeMap<Vertex, u64> = reduced
            .vertices()
            .map(|v| {
                let bit = u64::from(cand.vertices.contains(&v));
                (v, reduced.color(v) * 2 + bit)
            })
            .collect();
        let Some((_, interval_rep)) = canonical_interval(&flipped, &colors) else {
            continue;
        };
        let arcs_to_flip: BTreeSet<u32> =
            cand.vertices.iter().map(|&v| interval_rep.arc(v)).collect();
        let arc_colors: BTreeMap<u32, u64> = interval_rep
            .assign
            .iter()
            .map(|(&v, &a)| (a, reduced.color(v)))
            .collect();
        // Anchor the model at its canonical rotation; expansion inserts the
        // universal arcs at the anchor, so the anchor must not depend on
        // the search's internal event order.
        let model = canonical_rotation(
            &interval_rep.model.flip_arcs(&arcs_to_flip),
            Some(&arc_colors),
        );
        let rep = Representation { model, assign: interval_rep.assign.clone() };
        let tokens = model_string_tokens(&rep.model, Some(&arc_colors));
        if best.as_ref().is_none_or(|(b, _, _)| tokens < *b) {
            best = Some((tokens, rep, cand));
        }
    }

    match best {
        None => Ok(CanonOutcome {
            verdict: Verdict::NotCircularArc,
            canonical: None,
            winning_candidate: None,
            reduced_graph: reduced,
            record,
            reduced_representation: None,
        }),
        Some((_, reduced_rep, cand)) => {
            let expanded = expand_representation(&reduced_rep, &record)?;
            let emission: BTreeMap<u32, u64> = (1..=g.n() as Vertex)
                .map(|v| (v, record.emission_color(v)))
                .collect();
            let s = render_tokens(&model_string_tokens(&expanded.model, Some(&emission)));
            Ok(CanonOutcome {
                verdict: Verdict::CircularArc,
                canonical: Some((s, expanded)),
                winning_candidate: Some(cand),
                reduced_graph: reduced,
                record,
                reduced_representation: Some(reduced_rep),
            })
        }
    }
}

/// The canonical string of a CA graph, None for non-CA inputs.
pub fn canonical_string(g: &Graph, k_max: usize) -> Result<Option<String>> {
    Ok(canonical_representation(g, k_max)?
        .canonical
        .map(|(s, _)| s))
}

pub fn recognize(g: &Graph, k_max: usize) -> Result<bool> {
    Ok(canonical_representation(g, k_max)?.verdict == Verdict::CircularArc)
}

/// CA-graph isomorphism via canonical strings. Errors if either input is
/// not a CA graph.
pub fn isomorphic(g: &Graph, h: &Graph, k_max: usize) -> Result<bool> {
    let a = canonical_string(g, k_max)?.ok_or(Error::NotCircularArc)?;
    let b = canonical_string(h, k_max)?.ok_or(Error::NotCircularArc)?;
    Ok(a == b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::intersection::matrices_isomorphic;
    use crate::model::{graph_of_model, matrix_of_model};

    fn p4() -> Graph {
        Graph::from_edges(4, &[(1, 2), (2, 3), (3, 4)]).unwrap()
    }

    fn c4() -> Graph {
        Graph::from_edges(4, &[(1, 2), (2, 3), (3, 4), (1, 4)]).unwrap()
    }

    #[test]
    fn p4_is_ca_and_sound() {
        let out = canonical_representation(&p4(), DEFAULT_K_MAX).unwrap();
        assert_eq!(out.verdict, Verdict::CircularArc);
        let reduced_rep = out.reduced_representation.as_ref().unwrap();
        // The winning model realizes λ exactly, including the wrapped cc
        // pair (2,3).
        assert_eq!(
            matrix_of_model(reduced_rep),
            neighborhood_matrix(&out.reduced_graph)
        );
        let (_, expanded) = out.canonical.as_ref().unwrap();
        assert_eq!(graph_of_model(expanded), p4());
    }

    #[test]
    fn two_c4s_are_not_ca() {
        let g = c4().disjoint_union(&c4());
        let out = canonical_representation(&g, DEFAULT_K_MAX).unwrap();
        assert_eq!(out.verdict, Verdict::NotCircularArc);
        assert!(out.canonical.is_none());
    }

    #[test]
    fn octahedron_is_ca() {
        let mut g = Graph::new(6);
        for u in 1..=6u32 {
            for v in (u + 1)..=6u32 {
                if v != u + 3 {
                    g.add_edge(u, v).unwrap();
                }
            }
        }
        let out = canonical_representation(&g, DEFAULT_K_MAX).unwrap();
        assert_eq!(out.verdict, Verdict::CircularArc);
        let reduced_rep = out.reduced_representation.as_ref().unwrap();
        assert!(matrices_isomorphic(
            &matrix_of_model(reduced_rep),
            &neighborhood_matrix(&out.reduced_graph),
            None,
            None
        )
        .is_some());
    }

    #[test]
    fn single_vertex_string() {
        let s = canonical_string(&Graph::new(1), DEFAULT_K_MAX)
            .unwrap()
            .unwrap();
        assert_eq!(s, "l1:0 r1");
    }

    #[test]
    fn p2_string_is_two_nested_arcs() {
        let g = Graph::from_edges(2, &[(1, 2)]).unwrap();
        let out = canonical_representation(&g, DEFAULT_K_MAX).unwrap();
        let (s, rep) = out.canonical.as_ref().unwrap();
        assert_eq!(graph_of_model(rep), g);
        assert_eq!(s, "l1:0 l2:0 r2 r1");
    }

    #[test]
    fn canonical_string_is_label_independent() {
        let g = Graph::from_edges(5, &[(1, 2), (2, 3), (3, 4), (4, 5), (2, 5)]).unwrap();
        let a = canonical_string(&g, DEFAULT_K_MAX).unwrap().unwrap();
        for perm in [[2u32, 3, 4, 5, 1], [5, 4, 3, 2, 1], [3, 1, 5, 2, 4]] {
            let b = canonical_string(&g.permuted(&perm), DEFAULT_K_MAX)
                .unwrap()
                .unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn iso_examples() {
        let g = p4();
        let h = g.permuted(&[4, 1, 3, 2]);
        assert!(isomorphic(&g, &h, DEFAULT_K_MAX).unwrap());
        assert!(!isomorphic(&p4(), &c4(), DEFAULT_K_MAX).unwrap());
        let mut bigger = Graph::new(5);
        for (u, v) in p4().edges() {
            bigger.add_edge(u, v).unwrap();
        }
        assert!(!isomorphic(&p4(), &bigger, DEFAULT_K_MAX).unwrap());
        let not_ca = c4().disjoint_union(&c4());
        assert_eq!(
            isomorphic(&p4(), &not_ca, DEFAULT_K_MAX),
            Err(Error::NotCircularArc)
        );
    }
}
