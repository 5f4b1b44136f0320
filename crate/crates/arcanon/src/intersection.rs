//! Intersection types, the neighborhood matrix λ_G and the flip operation
//! on intersection matrices.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// The five intersection types of two distinct arcs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IntersectionType {
    /// Disjoint.
    Di,
    /// First arc contained in the second.
    Cd,
    /// First arc contains the second.
    Cs,
    /// The two arcs jointly cover the circle.
    Cc,
    /// Overlap without covering the circle.
    Ov,
}

impl IntersectionType {
    /// Type seen from the other arc's perspective.
    pub fn dual(self) -> Self {
        use IntersectionType::*;
        match self {
            Di => Di,
            Ov => Ov,
            Cc => Cc,
            Cd => Cs,
            Cs => Cd,
        }
    }

    pub const ALL: [IntersectionType; 5] = [
        IntersectionType::Di,
        IntersectionType::Cd,
        IntersectionType::Cs,
        IntersectionType::Cc,
        IntersectionType::Ov,
    ];
}

impl fmt::Display for IntersectionType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            IntersectionType::Di => "di",
            IntersectionType::Cd => "cd",
            IntersectionType::Cs => "cs",
            IntersectionType::Cc => "cc",
            IntersectionType::Ov => "ov",
        };
        write!(f, "{s}")
    }
}

/// A square matrix of intersection types over a vertex set; the diagonal is
/// never queried.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionMatrix {
    vertices: Vec<Vertex>,
    index: BTreeMap<Vertex, usize>,
    entries: Vec<IntersectionType>, // row-major, diagonal unused
}

impl IntersectionMatrix {
    pub fn empty(vertices: &[Vertex]) -> Self {
        let vertices = vertices.to_vec();
        let index = vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let n = vertices.len();
        IntersectionMatrix {
            vertices,
            index,
            entries: vec![IntersectionType::Di; n * n],
        }
    }

    pub fn n(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.index.contains_key(&v)
    }

    pub fn get(&self, u: Vertex, v: Vertex) -> IntersectionType {
        assert_ne!(u, v, "diagonal entries are undefined");
        self.entries[self.index[&u] * self.n() + self.index[&v]]
    }

    /// Sets both (u,v) and its dual (v,u).
    pub fn set(&mut self, u: Vertex, v: Vertex, t: IntersectionType) {
        assert_ne!(u, v, "diagonal entries are undefined");
        let n = self.n();
        let (i, j) = (self.index[&u], self.index[&v]);
        self.entries[i * n + j] = t;
        self.entries[j * n + i] = t.dual();
    }

    pub fn is_dual_symmetric(&self) -> bool {
        let vs = &self.vertices;
        vs.iter().enumerate().all(|(i, &u)| {
            vs[i + 1..]
                .iter()
                .all(|&v| self.get(u, v).dual() == self.get(v, u))
        })
    }

    pub fn has_entry(&self, t: IntersectionType) -> bool {
        let vs = &self.vertices;
        vs.iter().enumerate().any(|(i, &u)| {
            vs[i + 1..].iter().any(|&v| self.get(u, v) == t)
        })
    }
}

/// The neighborhood matrix λ_G: the first applicable case of the five-case
/// cascade di / cd / cs / cc / ov decides each entry.
pub fn neighborhood_matrix(g: &Graph) -> IntersectionMatrix {
    let vs: Vec<Vertex> = g.vertices().collect();
    let closed: Vec<BTreeSet<Vertex>> = vs
        .iter()
        .map(|&v| g.closed_neighborhood(v).unwrap())
        .collect();
    let all: BTreeSet<Vertex> = vs.iter().copied().collect();
    let mut m = IntersectionMatrix::empty(&vs);
    for (i, &u) in vs.iter().enumerate() {
        for (jo, &v) in vs[i + 1..].iter().enumerate() {
            let j = i + 1 + jo;
            let nu = &closed[i];
            let nv = &closed[j];
            let t = if !g.is_edge(u, v) {
                IntersectionType::Di
            } else if nu.is_subset(nv) && nu != nv {
                IntersectionType::Cd
            } else if nv.is_subset(nu) && nu != nv {
                IntersectionType::Cs
            } else if cc_entry(g, &closed, &all, nu, nv) {
                IntersectionType::Cc
            } else {
                IntersectionType::Ov
            };
            m.set(u, v, t);
        }
    }
    m
}

fn cc_entry(
    g: &Graph,
    closed: &[BTreeSet<Vertex>],
    all: &BTreeSet<Vertex>,
    nu: &BTreeSet<Vertex>,
    nv: &BTreeSet<Vertex>,
) -> bool {
    let _ = g;
    let overlap = nu.intersection(nv).next().is_some()
        && nu.difference(nv).next().is_some()
        && nv.difference(nu).next().is_some();
    if !overlap {
        return false;
    }
    if !nu.union(nv).eq(all.iter()) {
        return false;
    }
    // The containment here is read as subset-or-equal; on twin-free graphs
    // (where λ is used) equality cannot occur anyway.
    nu.difference(nv)
        .all(|&w| closed[w as usize - 1].is_subset(nu))
        && nv
            .difference(nu)
            .all(|&w| closed[w as usize - 1].is_subset(nv))
}

/// Table-driven effect of flipping one or both arcs on an entry.
fn flip_entry(t: IntersectionType, u_flipped: bool, v_flipped: bool) -> IntersectionType {
    use IntersectionType::*;
    match (u_flipped, v_flipped) {
        (false, false) => t,
        // row μ_{Ā,B}
        (true, false) => match t {
            Di => Cs,
            Cd => Cc,
            Cs => Di,
            Cc => Cd,
            Ov => Ov,
        },
        // row μ_{A,B̄}
        (false, true) => match t {
            Di => Cd,
            Cd => Di,
            Cs => Cc,
            Cc => Cs,
            Ov => Ov,
        },
        // row μ_{Ā,B̄}
        (true, true) => match t {
            Di => Cc,
            Cd => Cs,
            Cs => Cd,
            Cc => Di,
            Ov => Ov,
        },
    }
}

/// Rewrite every entry per the flip table according to membership of the
/// two vertices in X.
pub fn flip_matrix(m: &IntersectionMatrix, x: &BTreeSet<Vertex>) -> Result<IntersectionMatrix> {
    if let Some(&v) = x.iter().find(|v| !m.contains(**v)) {
        return Err(Error::UnknownVertex(v));
    }
    let mut out = m.clone();
    let vs = m.vertices().to_vec();
    for (i, &u) in vs.iter().enumerate() {
        for &v in &vs[i + 1..] {
            out.set(
                u,
                v,
                flip_entry(m.get(u, v), x.contains(&u), x.contains(&v)),
            );
        }
    }
    Ok(out)
}

/// Search for a bijection π with A(u,v) = B(πu, πv), refined by optional
/// vertex colors. Color-refinement pruning plus backtracking; test-scale.
pub fn matrices_isomorphic(
    a: &IntersectionMatrix,
    b: &IntersectionMatrix,
    colors_a: Option<&BTreeMap<Vertex, u64>>,
    colors_b: Option<&BTreeMap<Vertex, u64>>,
) -> Option<BTreeMap<Vertex, Vertex>> {
    if a.n() != b.n() {
        return None;
    }
    let refine = |m: &IntersectionMatrix, colors: Option<&BTreeMap<Vertex, u64>>| {
        let vs = m.vertices().to_vec();
        let mut class: BTreeMap<Vertex, u64> = vs
            .iter()
            .map(|&v| (v, colors.and_then(|c| c.get(&v).copied()).unwrap_or(0)))
            .collect();
        for _ in 0..vs.len() {
            let mut sigs: BTreeMap<Vertex, Vec<(IntersectionType, u64)>> = BTreeMap::new();
            for &v in &vs {
                let mut sig: Vec<(IntersectionType, u64)> = vs
                    .iter()
                    .filter(|&&u| u != v)
                    .map(|&u| (m.get(v, u), class[&u]))
                    .collect();
                sig.sort();
                sigs.insert(v, sig);
            }
            let mut keys: Vec<(u64, Vec<(IntersectionType, u64)>)> = vs
                .iter()
                .map(|&v| (class[&v], sigs[&v].clone()))
                .collect();
            keys.sort();
            keys.dedup();
            let next: BTreeMap<Vertex, u64> = vs
                .iter()
                .map(|&v| {
                    let key = (class[&v], sigs[&v].clone());
                    (v, keys.binary_search(&key).unwrap() as u64)
                })
                .collect();
            if next == class {
                break;
            }
            class = next;
        }
        class
    };
    let ca = refine(a, colors_a);
    let cb = refine(b, colors_b);
    let mut hist_a: BTreeMap<u64, usize> = BTreeMap::new();
    let mut hist_b: BTreeMap<u64, usize> = BTreeMap::new();
    for v in ca.values() {
        *hist_a.entry(*v).or_default() += 1;
    }
    for v in cb.values() {
        *hist_b.entry(*v).or_default() += 1;
    }
    if hist_a != hist_b {
        return None;
    }

    let avs = a.vertices().to_vec();
    let bvs = b.vertices().to_vec();
    let mut mapping: BTreeMap<Vertex, Vertex> = BTreeMap::new();
    let mut used: BTreeSet<Vertex> = BTreeSet::new();
    fn backtrack(
        a: &IntersectionMatrix,
        b: &IntersectionMatrix,
        avs: &[Vertex],
        bvs: &[Vertex],
        ca: &BTreeMap<Vertex, u64>,
        cb: &BTreeMap<Vertex, u64>,
        mapping: &mut BTreeMap<Vertex, Vertex>,
        used: &mut BTreeSet<Vertex>,
        depth: usize,
    ) -> bool {
        if depth == avs.len() {
            return true;
        }
        let u = avs[depth];
        for &w in bvs {
            if used.contains(&w) || ca[&u] != cb[&w] {
                continue;
            }
            if mapping.iter().all(|(&p, &q)| a.get(u, p) == b.get(w, q)) {
                mapping.insert(u, w);
                used.insert(w);
                if backtrack(a, b, avs, bvs, ca, cb, mapping, used, depth + 1) {
                    return true;
                }
                mapping.remove(&u);
                used.remove(&w);
            }
        }
        false
    }
    if backtrack(a, b, &avs, &bvs, &ca, &cb, &mut mapping, &mut used, 0) {
        Some(mapping)
    } else {
        None
    }
}
