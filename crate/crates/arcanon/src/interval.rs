//! Interval-matrix realizability and canonical interval representations.
//!
//! A matrix is realized by placing 2n endpoint events left-to-right; the
//! anchor gap is a hole, so the linear order is exactly an interval model.
//! The canonical form is the lexicographically smallest colored token
//! string over all realizing (model, bijection) pairs; the search tries the
//! smallest token first and backtracks, so the first completed sequence
//! under that discipline already attains the minimum.

use std::collections::BTreeMap;

use crate::graph::Vertex;
use crate::intersection::{IntersectionMatrix, IntersectionType};
use crate::model::{ArcModel, Event, Representation, Side, Token};

struct Search<'a> {
    m: &'a IntersectionMatrix,
    colors: Option<&'a BTreeMap<Vertex, u64>>,
    /// Find any realization instead of the lexicographic minimum.
    any: bool,
    vertices: Vec<Vertex>,
    /// arc label (1-based) -> vertex, in open order.
    opened: Vec<Vertex>,
    /// Labels of currently open arcs, ascending.
    open: Vec<u32>,
    assigned: Vec<bool>,
    events: Vec<Event>,
}

#[derive(Clone)]
struct Solution {
    tokens: Vec<Token>,
    events: Vec<Event>,
    opened: Vec<Vertex>,
}

impl<'a> Search<'a> {
    fn new(
        m: &'a IntersectionMatrix,
        colors: Option<&'a BTreeMap<Vertex, u64>>,
        any: bool,
    ) -> Self {
        Search {
            m,
            colors,
            any,
            vertices: m.vertices().to_vec(),
            opened: Vec::new(),
            open: Vec::new(),
            assigned: vec![false; m.n()],
            events: Vec::new(),
        }
    }

    fn color_of(&self, v: Vertex) -> Option<u64> {
        self.colors.map(|c| c.get(&v).copied().unwrap_or(0))
    }

    /// Can vertex v open now? It must overlap-or-nest with every open arc
    /// and be disjoint from every closed one.
    fn can_open(&self, v: Vertex) -> bool {
        for (i, &u) in self.opened.iter().enumerate() {
            let label = i as u32 + 1;
            let t = self.m.get(v, u);
            if self.open.contains(&label) {
                if t != IntersectionType::Cd && t != IntersectionType::Ov {
                    return false;
                }
            } else if t != IntersectionType::Di {
                return false;
            }
        }
        true
    }

    /// Can the open arc with `label` close now? Open arcs that opened
    /// earlier must contain it; later ones must overlap it.
    fn can_close(&self, label: u32) -> bool {
        let v = self.opened[label as usize - 1];
        for &other in &self.open {
            if other == label {
                continue;
            }
            let u = self.opened[other as usize - 1];
            let want = if other < label {
                IntersectionType::Cd
            } else {
                IntersectionType::Ov
            };
            if self.m.get(v, u) != want {
                return false;
            }
        }
        true
    }

    fn solution(&self) -> Solution {
        let tokens = self
            .events
            .iter()
            .map(|e| Token {
                side: e.side,
                idx: e.arc,
                color: match e.side {
                    Side::L => self.color_of(self.opened[e.arc as usize - 1]),
                    Side::R => None,
                },
            })
            .collect();
        Solution {
            tokens,
            events: self.events.clone(),
            opened: self.opened.clone(),
        }
    }

    fn push_open(&mut self, v: Vertex) {
        let label = self.opened.len() as u32 + 1;
        self.opened.push(v);
        self.assigned[self.vertices.iter().position(|&x| x == v).unwrap()] = true;
        self.open.push(label);
        self.events.push(Event { arc: label, side: Side::L });
    }

    fn pop_open(&mut self, v: Vertex) {
        self.open.pop();
        self.opened.pop();
        self.assigned[self.vertices.iter().position(|&x| x == v).unwrap()] = false;
        self.events.pop();
    }

    fn push_close(&mut self, label: u32) {
        self.open.retain(|&l| l != label);
        self.events.push(Event { arc: label, side: Side::R });
    }

    fn pop_close(&mut self, label: u32) {
        self.events.pop();
        self.open.push(label);
        self.open.sort_unstable();
    }

    /// Depth-first search in ascending token order. Distinct candidate
    /// tokens cannot tie, except L moves of equally colored vertices; those
    /// are all explored and the minimal completion kept.
    fn run(&mut self) -> Option<Solution> {
        if self.events.len() == 2 * self.m.n() {
            return Some(self.solution());
        }

        // L moves, grouped by color (ascending); within a group every
        // consistent vertex is a branch with an identical token.
        if self.opened.len() < self.m.n() {
            let mut candidates: Vec<(Option<u64>, Vertex)> = self
                .vertices
                .iter()
                .enumerate()
                .filter(|(i, _)| !self.assigned[*i])
                .map(|(_, &v)| (self.color_of(v), v))
                .collect();
            candidates.sort();
            let mut i = 0;
            while i < candidates.len() {
                let group_color = candidates[i].0;
                let mut group_best: Option<Solution> = None;
                while i < candidates.len() && candidates[i].0 == group_color {
                    let v = candidates[i].1;
                    i += 1;
                    if !self.can_open(v) {
                        continue;
                    }
                    self.push_open(v);
                    if let Some(sol) = self.run() {
                        let better = group_best
                            .as_ref()
                            .is_none_or(|b| sol.tokens < b.tokens);
                        if better {
                            group_best = Some(sol);
                        }
                        if self.any {
                            self.pop_open(v);
                            return group_best;
                        }
                    }
                    self.pop_open(v);
                }
                if group_best.is_some() {
                    // Any completion starting with this smaller L token
                    // beats every later-token alternative.
                    return group_best;
                }
            }
        }

        // R moves in label order; distinct tokens, so first success wins.
        for k in 0..self.open.len() {
            let label = self.open[k];
            if !self.can_close(label) {
                continue;
            }
            self.push_close(label);
            let sol = self.run();
            self.pop_close(label);
            if sol.is_some() {
                return sol;
            }
        }
        None
    }
}

fn search(
    m: &IntersectionMatrix,
    colors: Option<&BTreeMap<Vertex, u64>>,
    any: bool,
) -> Option<(Vec<Token>, Representation)> {
    if m.has_entry(IntersectionType::Cc) {
        // cc arcs jointly cover the circle; impossible with a hole.
        return None;
    }
    let mut s = Search::new(m, colors, any);
    let sol = s.run()?;
    let model = ArcModel::new(sol.events).expect("search yields a well-formed model");
    let assign = sol
        .opened
        .iter()
        .enumerate()
        .map(|(i, &v)| (v, i as u32 + 1))
        .collect();
    Some((sol.tokens, Representation { model, assign }))
}

/// Any interval representation of `m`, or None if `m` is not an interval
/// matrix.
pub fn realize_interval(m: &IntersectionMatrix) -> Option<Representation> {
    search(m, None, true).map(|(_, rep)| rep)
}

/// The canonical colored interval representation: the lexicographically
/// minimal token string over all realizations, with one representation
/// attaining it. Isomorphic colored matrices yield identical strings.
pub fn canonical_interval(
    m: &IntersectionMatrix,
    colors: &BTreeMap<Vertex, u64>,
) -> Option<(Vec<Token>, Representation)> {
    search(m, Some(colors), false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::intersection::{flip_matrix, neighborhood_matrix};
    use crate::model::{matrix_of_model, render_tokens};
    use std::collections::BTreeSet;

    fn p4_flipped() -> IntersectionMatrix {
        let g = Graph::from_edges(4, &[(1, 2), (2, 3), (3, 4)]).unwrap();
        let x: BTreeSet<Vertex> = [2, 3].into_iter().collect();
        flip_matrix(&neighborhood_matrix(&g), &x).unwrap()
    }

    #[test]
    fn realize_p4_flipped() {
        let m = p4_flipped();
        let rep = realize_interval(&m).unwrap();
        assert!(rep.model.has_hole());
        assert_eq!(matrix_of_model(&rep), m);
    }

    #[test]
    fn cc_entry_unrealizable() {
        let g = Graph::from_edges(4, &[(1, 2), (2, 3), (3, 4)]).unwrap();
        let m = neighborhood_matrix(&g); // (2,3) is cc
        assert!(realize_interval(&m).is_none());
    }

    #[test]
    fn single_vertex() {
        let m = IntersectionMatrix::empty(&[1]);
        let rep = realize_interval(&m).unwrap();
        assert_eq!(rep.model.arc_count(), 1);
        let colors = [(1, 7u64)].into_iter().collect();
        let (tokens, _) = canonical_interval(&m, &colors).unwrap();
        assert_eq!(render_tokens(&tokens), "l1:7 r1");
    }

    #[test]
    fn two_disjoint() {
        let m = IntersectionMatrix::empty(&[1, 2]); // both entries di
        let colors = [(1, 0u64), (2, 0u64)].into_iter().collect();
        let (tokens, rep) = canonical_interval(&m, &colors).unwrap();
        assert_eq!(render_tokens(&tokens), "l1:0 r1 l2:0 r2");
        assert_eq!(matrix_of_model(&rep), m);
    }

    #[test]
    fn empty_matrix() {
        let m = IntersectionMatrix::empty(&[]);
        let colors = BTreeMap::new();
        let (tokens, rep) = canonical_interval(&m, &colors).unwrap();
        assert!(tokens.is_empty());
        assert_eq!(rep.model.arc_count(), 0);
    }

    #[test]
    fn canonical_is_permutation_invariant() {
        let g = Graph::from_edges(6, &[(1, 2), (2, 3), (3, 4), (4, 5), (3, 6)]).unwrap();
        let m = neighborhood_matrix(&g);
        if m.has_entry(crate::intersection::IntersectionType::Cc) {
            panic!("fixture must be an interval matrix");
        }
        let colors: BTreeMap<Vertex, u64> =
            g.vertices().map(|v| (v, u64::from(v % 2))).collect();
        let (tok_a, _) = canonical_interval(&m, &colors).unwrap();

        let perm: Vec<Vertex> = vec![4, 2, 6, 1, 3, 5];
        let h = g.permuted(&perm);
        let mh = neighborhood_matrix(&h);
        let colors_h: BTreeMap<Vertex, u64> = g
            .vertices()
            .map(|v| (perm[v as usize - 1], u64::from(v % 2)))
            .collect();
        let (tok_b, _) = canonical_interval(&mh, &colors_h).unwrap();
        assert_eq!(tok_a, tok_b);
    }
}
