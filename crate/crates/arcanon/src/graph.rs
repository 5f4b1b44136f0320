//! Colored, undirected, loop-free graphs together with the neighborhood
//! combinatorics and the twin / universal-vertex reduction.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::model::{ArcModel, Event, Representation, Side};

/// Vertices are 1-based integer ids.
pub type Vertex = u32;

/// An undirected graph without self-loops. Every vertex carries a
/// non-negative color (0 by default).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<BTreeSet<Vertex>>,
    color: Vec<u64>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            n,
            adj: vec![BTreeSet::new(); n],
            color: vec![0; n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        1..=self.n as Vertex
    }

    fn check(&self, v: Vertex) -> Result<()> {
        if v == 0 || v as usize > self.n {
            Err(Error::UnknownVertex(v))
        } else {
            Ok(())
        }
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<()> {
        self.check(u)?;
        self.check(v)?;
        if u == v {
            return Err(Error::Precondition("self-loops are not allowed"));
        }
        self.adj[u as usize - 1].insert(v);
        self.adj[v as usize - 1].insert(u);
        Ok(())
    }

    pub fn is_edge(&self, u: Vertex, v: Vertex) -> bool {
        u != v && self.adj[u as usize - 1].contains(&v)
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v as usize - 1].len()
    }

    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::new();
        for v in self.vertices() {
            for &u in &self.adj[v as usize - 1] {
                if v < u {
                    out.push((v, u));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    pub fn color(&self, v: Vertex) -> u64 {
        self.color[v as usize - 1]
    }

    pub fn set_color(&mut self, v: Vertex, c: u64) -> Result<()> {
        self.check(v)?;
        self.color[v as usize - 1] = c;
        Ok(())
    }

    pub fn colors(&self) -> &[u64] {
        &self.color
    }

    pub fn neighbors(&self, v: Vertex) -> &BTreeSet<Vertex> {
        &self.adj[v as usize - 1]
    }

    /// N[v] = N(v) ∪ {v}.
    pub fn closed_neighborhood(&self, v: Vertex) -> Result<BTreeSet<Vertex>> {
        self.check(v)?;
        let mut s = self.adj[v as usize - 1].clone();
        s.insert(v);
        Ok(s)
    }

    /// N[S] = ⋂_{v ∈ S} N[v]; S must be non-empty.
    pub fn common_neighborhood(&self, s: &BTreeSet<Vertex>) -> Result<BTreeSet<Vertex>> {
        let mut it = s.iter();
        let first = *it.next().ok_or(Error::EmptySet)?;
        let mut acc = self.closed_neighborhood(first)?;
        for &v in it {
            let nv = self.closed_neighborhood(v)?;
            acc = acc.intersection(&nv).copied().collect();
        }
        Ok(acc)
    }

    /// N_S(S'): vertices outside S adjacent to every vertex of S' and to
    /// none of S \ S'.
    pub fn exclusive_neighborhood(
        &self,
        s: &BTreeSet<Vertex>,
        sub: &BTreeSet<Vertex>,
    ) -> Result<BTreeSet<Vertex>> {
        if !sub.is_subset(s) {
            return Err(Error::NotSubset(format!("{sub:?}"), format!("{s:?}")));
        }
        let mut out = BTreeSet::new();
        for v in self.vertices() {
            if s.contains(&v) {
                continue;
            }
            let ok = sub.iter().all(|&x| self.is_edge(v, x))
                && s.iter().all(|&x| sub.contains(&x) || !self.is_edge(v, x));
            if ok {
                out.insert(v);
            }
        }
        Ok(out)
    }

    pub fn is_universal(&self, v: Vertex) -> bool {
        self.degree(v) == self.n - 1
    }

    /// Partition of V(G) by N[u] = N[v] and color(u) = color(v).
    /// Classes are listed by their minimum member; members ascending.
    pub fn twin_classes(&self) -> Vec<Vec<Vertex>> {
        let mut key_to_class: BTreeMap<(Vec<Vertex>, u64), Vec<Vertex>> = BTreeMap::new();
        for v in self.vertices() {
            let nv: Vec<Vertex> = self.closed_neighborhood(v).unwrap().into_iter().collect();
            key_to_class.entry((nv, self.color(v))).or_default().push(v);
        }
        let mut classes: Vec<Vec<Vertex>> = key_to_class.into_values().collect();
        classes.sort_by_key(|c| c[0]);
        classes
    }

    /// Relabel the graph by `perm`, which maps old vertex v to perm[v-1].
    pub fn permuted(&self, perm: &[Vertex]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph::new(self.n);
        for v in self.vertices() {
            g.color[perm[v as usize - 1] as usize - 1] = self.color(v);
        }
        for (u, v) in self.edges() {
            g.add_edge(perm[u as usize - 1], perm[v as usize - 1]).unwrap();
        }
        g
    }

    /// Disjoint union, with `other`'s vertices shifted past ours.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = Graph::new(self.n + other.n);
        for v in self.vertices() {
            g.color[v as usize - 1] = self.color(v);
        }
        for v in other.vertices() {
            g.color[self.n + v as usize - 1] = other.color(v);
        }
        for (u, v) in self.edges() {
            g.add_edge(u, v).unwrap();
        }
        for (u, v) in other.edges() {
            g.add_edge(u + self.n as Vertex, v + self.n as Vertex).unwrap();
        }
        g
    }

    /// Collapse twin classes and strip universal vertices. The record
    /// suffices to expand a representation of the reduced graph back to
    /// one of `self`.
    pub fn reduce(&self) -> (Graph, ReductionRecord) {
        let classes = self.twin_classes();
        let mut rep_of = BTreeMap::new();
        let mut members = BTreeMap::new();
        for class in &classes {
            let rep = class[0];
            for &v in class {
                rep_of.insert(v, rep);
            }
            members.insert(rep, class.clone());
        }
        let reps: Vec<Vertex> = classes.iter().map(|c| c[0]).collect();

        // Composed colors: rank of (original color, multiplicity) among the
        // pairs occurring across all class representatives.
        let mut pairs: Vec<(u64, u64)> = reps
            .iter()
            .map(|&r| (self.color(r), members[&r].len() as u64))
            .collect();
        pairs.sort();
        pairs.dedup();
        let composed: BTreeMap<Vertex, u64> = reps
            .iter()
            .map(|&r| {
                let key = (self.color(r), members[&r].len() as u64);
                (r, pairs.binary_search(&key).unwrap() as u64)
            })
            .collect();

        // Adjacency between class representatives. Distinct classes are
        // joined iff their members are (all twins of adjacent vertices are
        // adjacent).
        let collapsed_edge =
            |a: Vertex, b: Vertex| -> bool { a != b && self.is_edge(a, b) };

        // Universal representatives of the collapsed graph, removed in one
        // pass after the collapse.
        let mut universals: Vec<Vertex> = reps
            .iter()
            .copied()
            .filter(|&r| reps.iter().all(|&o| o == r || collapsed_edge(r, o)))
            .collect();
        universals.sort_by_key(|&r| (composed[&r], r));

        let survivors: Vec<Vertex> = reps
            .iter()
            .copied()
            .filter(|r| !universals.contains(r))
            .collect();

        let mut reduced = Graph::new(survivors.len());
        for (i, &r) in survivors.iter().enumerate() {
            reduced.color[i] = composed[&r];
            for (j, &o) in survivors.iter().enumerate().skip(i + 1) {
                if collapsed_edge(r, o) {
                    reduced.add_edge(i as Vertex + 1, j as Vertex + 1).unwrap();
                }
            }
        }

        let record = ReductionRecord {
            original_n: self.n,
            rep_of,
            members,
            composed,
            survivors,
            universals,
        };
        (reduced, record)
    }
}

/// Bookkeeping produced by [`Graph::reduce`]: which original vertices were
/// collapsed into which twin representative, and which representatives were
/// removed as universal vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionRecord {
    pub original_n: usize,
    /// Every original vertex to its twin-class representative.
    pub rep_of: BTreeMap<Vertex, Vertex>,
    /// Representative to ascending class members (the representative included).
    pub members: BTreeMap<Vertex, Vec<Vertex>>,
    /// Representative to composed color (rank of (color, multiplicity)).
    pub composed: BTreeMap<Vertex, u64>,
    /// Representatives kept in the reduced graph, ascending; reduced vertex
    /// i+1 corresponds to `survivors[i]`.
    pub survivors: Vec<Vertex>,
    /// Universal representatives removed after the collapse, ordered by
    /// (composed color, id); nested outermost-first on expansion.
    pub universals: Vec<Vertex>,
}

impl ReductionRecord {
    pub fn is_identity(&self) -> bool {
        self.universals.is_empty()
            && self.survivors.len() == self.original_n
            && self.members.values().all(|m| m.len() == 1)
    }

    pub fn multiplicity(&self, rep: Vertex) -> usize {
        self.members.get(&rep).map_or(0, |m| m.len())
    }

    /// Emission color of an original vertex: the composed color of its class.
    pub fn emission_color(&self, v: Vertex) -> u64 {
        self.composed[&self.rep_of[&v]]
    }
}

/// Expand a representation of the reduced graph back to one of the original
/// graph: twin copies become nested arcs at their representative's
/// endpoints, universal vertices become outermost near-full-circle arcs.
/// Arc ids of the result are the original vertex ids.
pub fn expand_representation(
    reduced: &Representation,
    rec: &ReductionRecord,
) -> Result<Representation> {
    let n_r = rec.survivors.len();
    if reduced.model.arc_count() != n_r || reduced.assign.len() != n_r {
        return Err(Error::InconsistentRecord(format!(
            "reduced model has {} arcs, record expects {}",
            reduced.model.arc_count(),
            n_r
        )));
    }
    for v in 1..=n_r as Vertex {
        if !reduced.assign.contains_key(&v) {
            return Err(Error::InconsistentRecord(format!(
                "reduced vertex {v} missing from the bijection"
            )));
        }
    }

    // Arc id of each survivor representative in the reduced model.
    let arc_of_rep: BTreeMap<Vertex, u32> = rec
        .survivors
        .iter()
        .enumerate()
        .map(|(i, &r)| (r, reduced.assign[&(i as Vertex + 1)]))
        .collect();
    let rep_of_arc: BTreeMap<u32, Vertex> =
        arc_of_rep.iter().map(|(&r, &a)| (a, r)).collect();

    let mut events: Vec<Event> = Vec::new();
    for &ev in reduced.model.events() {
        let rep = rep_of_arc[&ev.arc];
        let class = &rec.members[&rep];
        match ev.side {
            // Left endpoints of the copies immediately clockwise of the
            // representative's, ascending original id.
            Side::L => {
                for &m in class {
                    events.push(Event { arc: m, side: Side::L });
                }
            }
            // Right endpoints mirrored so the copies nest.
            Side::R => {
                for &m in class.iter().rev() {
                    events.push(Event { arc: m, side: Side::R });
                }
            }
        }
    }

    // Universal arcs wrap everything placed so far, outermost in record
    // order; within a class, ascending id outermost.
    let mut prefix: Vec<Event> = Vec::new();
    let mut suffix: Vec<Event> = Vec::new();
    for &u in &rec.universals {
        for &m in &rec.members[&u] {
            prefix.push(Event { arc: m, side: Side::L });
            suffix.insert(0, Event { arc: m, side: Side::R });
        }
    }
    let mut all = prefix;
    all.extend(events);
    all.extend(suffix);

    let model = ArcModel::new(all)?;
    let assign: BTreeMap<Vertex, u32> = (1..=rec.original_n as Vertex).map(|v| (v, v)).collect();
    Ok(Representation { model, assign })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::graph_of_model;

    fn set(vs: &[Vertex]) -> BTreeSet<Vertex> {
        vs.iter().copied().collect()
    }

    pub fn p4() -> Graph {
        Graph::from_edges(4, &[(1, 2), (2, 3), (3, 4)]).unwrap()
    }

    fn fig1() -> Graph {
        Graph::from_edges(5, &[(1, 2), (2, 3), (3, 4), (4, 5), (2, 5)]).unwrap()
    }

    #[test]
    fn closed_neighborhood_examples() {
        assert_eq!(p4().closed_neighborhood(2).unwrap(), set(&[1, 2, 3]));
        assert_eq!(fig1().closed_neighborhood(2).unwrap(), set(&[1, 2, 3, 5]));
        let g = Graph::new(3); // isolated vertices
        assert_eq!(g.closed_neighborhood(2).unwrap(), set(&[2]));
        assert_eq!(g.closed_neighborhood(5), Err(Error::UnknownVertex(5)));
    }

    #[test]
    fn common_neighborhood_examples() {
        assert_eq!(p4().common_neighborhood(&set(&[2, 3])).unwrap(), set(&[2, 3]));
        assert_eq!(
            p4().common_neighborhood(&set(&[2])).unwrap(),
            p4().closed_neighborhood(2).unwrap()
        );
        assert_eq!(fig1().common_neighborhood(&set(&[1, 4])).unwrap(), set(&[]));
        assert_eq!(p4().common_neighborhood(&set(&[])), Err(Error::EmptySet));
    }

    /// Triangle a,b,c = 1,2,3 with pendants a',b',c' = 4,5,6.
    pub fn net() -> Graph {
        Graph::from_edges(6, &[(1, 2), (2, 3), (1, 3), (1, 4), (2, 5), (3, 6)]).unwrap()
    }

    /// Complement of 3·K2; antipode pairs (1,4), (2,5), (3,6).
    pub fn octahedron() -> Graph {
        let mut g = Graph::new(6);
        for u in 1..=6u32 {
            for v in (u + 1)..=6u32 {
                if v != u + 3 {
                    g.add_edge(u, v).unwrap();
                }
            }
        }
        g
    }

    #[test]
    fn exclusive_neighborhood_examples() {
        let t = set(&[1, 2, 3]);
        assert_eq!(net().exclusive_neighborhood(&t, &set(&[1])).unwrap(), set(&[4]));
        assert_eq!(
            octahedron().exclusive_neighborhood(&t, &set(&[2, 3])).unwrap(),
            set(&[4])
        );
        assert_eq!(octahedron().exclusive_neighborhood(&t, &set(&[1])).unwrap(), set(&[]));
        assert!(net().exclusive_neighborhood(&set(&[1]), &set(&[2])).is_err());
    }

    #[test]
    fn twin_classes_examples() {
        let k3 = Graph::from_edges(3, &[(1, 2), (2, 3), (1, 3)]).unwrap();
        assert_eq!(k3.twin_classes(), vec![vec![1, 2, 3]]);
        let paw = Graph::from_edges(4, &[(1, 2), (2, 3), (1, 3), (1, 4)]).unwrap();
        assert_eq!(paw.twin_classes(), vec![vec![1], vec![2, 3], vec![4]]);
        assert_eq!(p4().twin_classes(), vec![vec![1], vec![2], vec![3], vec![4]]);
    }

    #[test]
    fn twins_refined_by_color() {
        let mut k3 = Graph::from_edges(3, &[(1, 2), (2, 3), (1, 3)]).unwrap();
        k3.set_color(3, 1).unwrap();
        assert_eq!(k3.twin_classes(), vec![vec![1, 2], vec![3]]);
    }

    #[test]
    fn reduce_p2() {
        let g = Graph::from_edges(2, &[(1, 2)]).unwrap();
        let (r, rec) = g.reduce();
        assert_eq!(r.n(), 0);
        assert_eq!(rec.universals, vec![1]);
        assert_eq!(rec.multiplicity(1), 2);
    }

    #[test]
    fn reduce_p4_identity() {
        let (r, rec) = p4().reduce();
        assert_eq!(r, p4());
        assert!(rec.is_identity());
    }

    #[test]
    fn reduce_k3() {
        let k3 = Graph::from_edges(3, &[(1, 2), (2, 3), (1, 3)]).unwrap();
        let (r, rec) = k3.reduce();
        assert_eq!(r.n(), 0);
        assert_eq!(rec.universals, vec![1]);
        assert_eq!(rec.multiplicity(1), 3);
    }

    #[test]
    fn reduce_is_idempotent() {
        for g in [p4(), fig1(), net(), octahedron()] {
            let (r, _) = g.reduce();
            let (r2, rec2) = r.reduce();
            assert_eq!(r, r2);
            assert!(rec2.is_identity());
        }
    }

    #[test]
    fn expand_p2() {
        let g = Graph::from_edges(2, &[(1, 2)]).unwrap();
        let (r, rec) = g.reduce();
        assert_eq!(r.n(), 0);
        let empty = Representation {
            model: ArcModel::new(vec![]).unwrap(),
            assign: BTreeMap::new(),
        };
        let rep = expand_representation(&empty, &rec).unwrap();
        assert_eq!(graph_of_model(&rep), g);
    }

    #[test]
    fn expand_identity() {
        let (r, rec) = p4().reduce();
        assert!(rec.is_identity());
        // A hand-made interval representation of P4.
        let model = ArcModel::parse("l1 l2 r1 l3 r2 l4 r3 r4").unwrap();
        let assign = (1..=4).map(|v| (v, v)).collect();
        let rep = Representation { model, assign };
        let expanded = expand_representation(&rep, &rec).unwrap();
        assert_eq!(expanded.model, rep.model);
        assert_eq!(graph_of_model(&expanded), r);
    }

    #[test]
    fn expand_paw() {
        let paw = Graph::from_edges(4, &[(1, 2), (2, 3), (1, 3), (1, 4)]).unwrap();
        let (r, rec) = paw.reduce();
        // Survivors: 1 is universal in the collapsed graph {1,2,4};
        // remaining reduced graph is 2 (mult 2) and 4, non-adjacent.
        let model = ArcModel::parse("l1 r1 l2 r2").unwrap();
        let assign = (1..=r.n() as Vertex).map(|v| (v, v)).collect();
        let rep = Representation { model, assign };
        let expanded = expand_representation(&rep, &rec).unwrap();
        assert_eq!(graph_of_model(&expanded), paw);
    }

    #[test]
    fn expand_rejects_bad_record() {
        let (_, rec) = p4().reduce();
        let model = ArcModel::parse("l1 r1").unwrap();
        let assign = [(1, 1)].into_iter().collect();
        let rep = Representation { model, assign };
        assert!(matches!(
            expand_representation(&rep, &rec),
            Err(Error::InconsistentRecord(_))
        ));
    }
}
