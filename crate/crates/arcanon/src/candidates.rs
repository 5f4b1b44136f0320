//! Candidate functions and their supporting predicates: the flip-set test,
//! Δ_G membership, the in-between predicate, the same-side relation, the
//! Γ-partition and the subset-enumerating non-uniform generator.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::intersection::{
    flip_matrix, neighborhood_matrix, IntersectionMatrix, IntersectionType,
};
use crate::interval::realize_interval;

use IntersectionType::*;

/// Where a candidate vertex set came from.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum Provenance {
    Hca { u: Vertex, v: Vertex },
    Uniform { u: Vertex, x: Vertex },
    NonUniform { triple: (Vertex, Vertex, Vertex), omega: BTreeSet<Vertex> },
    Fallback,
}

impl Provenance {
    pub fn tag(&self) -> &'static str {
        match self {
            Provenance::Hca { .. } => "hca",
            Provenance::Uniform { .. } => "uniform",
            Provenance::NonUniform { .. } => "nonuniform",
            Provenance::Fallback => "fallback",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct CandidateSet {
    pub vertices: BTreeSet<Vertex>,
    pub provenance: Provenance,
}

/// X is a flip set iff λ_G flipped by X is an interval matrix. X must be
/// non-empty (the empty case is the canonizer's fallback, not a flip set).
pub fn is_flip_set(g: &Graph, x: &BTreeSet<Vertex>) -> Result<bool> {
    if x.is_empty() {
        return Err(Error::EmptySet);
    }
    let lambda = neighborhood_matrix(g);
    let flipped = flip_matrix(&lambda, x)?;
    Ok(realize_interval(&flipped).is_some())
}

/// N^α(u) = {v | λ(u,v) = α}; α = di is rejected.
pub fn alpha_neighborhood(
    g: &Graph,
    u: Vertex,
    alpha: IntersectionType,
) -> Result<BTreeSet<Vertex>> {
    if alpha == Di {
        return Err(Error::InvalidType("alpha-neighborhood is undefined for di"));
    }
    let lambda = neighborhood_matrix(g);
    Ok(alpha_nbhd(&lambda, u, alpha))
}

fn alpha_nbhd(lambda: &IntersectionMatrix, u: Vertex, alpha: IntersectionType) -> BTreeSet<Vertex> {
    lambda
        .vertices()
        .iter()
        .copied()
        .filter(|&v| v != u && lambda.get(u, v) == alpha)
        .collect()
}

pub fn is_ov_triangle(g: &Graph, t: &BTreeSet<Vertex>) -> bool {
    let lambda = neighborhood_matrix(g);
    ov_triangle(&lambda, t)
}

fn ov_triangle(lambda: &IntersectionMatrix, t: &BTreeSet<Vertex>) -> bool {
    if t.len() != 3 {
        return false;
    }
    let v: Vec<Vertex> = t.iter().copied().collect();
    lambda.get(v[0], v[1]) == Ov && lambda.get(v[0], v[2]) == Ov && lambda.get(v[1], v[2]) == Ov
}

/// Is the ov-triangle T in Δ_G: the closed neighborhoods of T cover V(G)
/// and every exclusive neighbor of a single corner is contained in it.
pub fn delta_membership(g: &Graph, t: &BTreeSet<Vertex>) -> Result<bool> {
    let lambda = neighborhood_matrix(g);
    if !ov_triangle(&lambda, t) {
        return Err(Error::NotOvTriangle);
    }
    Ok(delta(g, &lambda, t))
}

fn delta(g: &Graph, lambda: &IntersectionMatrix, t: &BTreeSet<Vertex>) -> bool {
    let mut union = BTreeSet::new();
    for &v in t {
        union.extend(g.closed_neighborhood(v).unwrap());
    }
    if union.len() != g.n() {
        return false;
    }
    t.iter().all(|&x| {
        let singleton: BTreeSet<Vertex> = [x].into_iter().collect();
        g.exclusive_neighborhood(t, &singleton)
            .unwrap()
            .iter()
            .all(|&v| lambda.get(v, x) == Cd)
    })
}

fn delta_if_ov(g: &Graph, lambda: &IntersectionMatrix, t: &BTreeSet<Vertex>) -> bool {
    ov_triangle(lambda, t) && delta(g, lambda, t)
}

/// Is v in-between u and w, for the ov-triangle T = {u,v,w} outside Δ_G.
pub fn in_between(g: &Graph, u: Vertex, v: Vertex, w: Vertex) -> Result<bool> {
    let lambda = neighborhood_matrix(g);
    let t: BTreeSet<Vertex> = [u, v, w].into_iter().collect();
    if t.len() != 3 || !ov_triangle(&lambda, &t) {
        return Err(Error::NotOvTriangle);
    }
    if delta(g, &lambda, &t) {
        return Err(Error::Precondition("in-between requires T outside Delta_G"));
    }
    Ok(in_btw(g, &lambda, u, v, w))
}

fn in_btw(g: &Graph, lambda: &IntersectionMatrix, u: Vertex, _v: Vertex, w: Vertex) -> bool {
    let t: BTreeSet<Vertex> = [u, _v, w].into_iter().collect();
    let nu = g
        .exclusive_neighborhood(&t, &[u].into_iter().collect())
        .unwrap();
    let nw = g
        .exclusive_neighborhood(&t, &[w].into_iter().collect())
        .unwrap();
    if !nu.is_empty() && !nw.is_empty() {
        return true;
    }
    let nuw = g
        .exclusive_neighborhood(&t, &[u, w].into_iter().collect())
        .unwrap();
    nuw.iter().any(|&z| {
        let tz: BTreeSet<Vertex> = [u, w, z].into_iter().collect();
        tz.len() == 3 && delta_if_ov(g, lambda, &tz)
    })
}

/// Do x and y overlap from the same side with u (x, y ∈ N^ov(u)).
pub fn sim(g: &Graph, u: Vertex, x: Vertex, y: Vertex) -> Result<bool> {
    let lambda = neighborhood_matrix(g);
    let nov = alpha_nbhd(&lambda, u, Ov);
    if !nov.contains(&x) || !nov.contains(&y) {
        return Err(Error::Precondition("sim arguments must overlap u"));
    }
    Ok(sim_impl(g, &lambda, u, x, y))
}

fn sim_impl(g: &Graph, lambda: &IntersectionMatrix, u: Vertex, x: Vertex, y: Vertex) -> bool {
    if x == y {
        return true;
    }
    match lambda.get(x, y) {
        Cd | Cs => true,
        Ov => {
            let t: BTreeSet<Vertex> = [x, y, u].into_iter().collect();
            !delta(g, lambda, &t) && !in_btw(g, lambda, x, u, y)
        }
        _ => false,
    }
}

/// f_HCA: common neighborhoods of all (ordered or equal) vertex pairs.
pub fn f_hca(g: &Graph) -> Vec<CandidateSet> {
    let mut out: Vec<CandidateSet> = Vec::new();
    let mut seen: BTreeSet<BTreeSet<Vertex>> = BTreeSet::new();
    for u in g.vertices() {
        for v in g.vertices() {
            if v < u {
                continue;
            }
            let s: BTreeSet<Vertex> = [u, v].into_iter().collect();
            let common = g.common_neighborhood(&s).unwrap();
            if !common.is_empty() && seen.insert(common.clone()) {
                out.push(CandidateSet {
                    vertices: common,
                    provenance: Provenance::Hca { u, v },
                });
            }
        }
    }
    out
}

/// f_U: one candidate per vertex u and overlap neighbor x, built from u's
/// cd- and cc-neighborhoods and the ~_u class of x.
pub fn f_uniform(g: &Graph) -> Vec<CandidateSet> {
    let lambda = neighborhood_matrix(g);
    let mut out: Vec<CandidateSet> = Vec::new();
    let mut seen: BTreeSet<BTreeSet<Vertex>> = BTreeSet::new();
    for u in g.vertices() {
        let nov = alpha_nbhd(&lambda, u, Ov);
        if nov.is_empty() {
            continue;
        }
        let ncd = alpha_nbhd(&lambda, u, Cd);
        let ncc = alpha_nbhd(&lambda, u, Cc);
        for &x in &nov {
            let mut set: BTreeSet<Vertex> = [u].into_iter().collect();
            set.extend(&ncd);
            set.extend(&ncc);
            set.extend(nov.iter().filter(|&&y| sim_impl(g, &lambda, u, x, y)));
            if seen.insert(set.clone()) {
                out.push(CandidateSet {
                    vertices: set,
                    provenance: Provenance::Uniform { u, x },
                });
            }
        }
    }
    out
}

/// The Γ-partition sets with respect to an ordered triple (u,v,w) ∈ Δ_G
/// (v is the middle vertex).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaSets {
    pub ov_u: BTreeSet<Vertex>,
    pub ov_w: BTreeSet<Vertex>,
    pub cc: BTreeSet<Vertex>,
    pub cd: BTreeSet<Vertex>,
    pub omega: BTreeSet<Vertex>,
}

pub fn gamma_partition(g: &Graph, u: Vertex, v: Vertex, w: Vertex) -> Result<GammaSets> {
    let lambda = neighborhood_matrix(g);
    let t: BTreeSet<Vertex> = [u, v, w].into_iter().collect();
    if t.len() != 3 || !ov_triangle(&lambda, &t) {
        return Err(Error::NotOvTriangle);
    }
    if !delta(g, &lambda, &t) {
        return Err(Error::NotInDelta);
    }
    Ok(gamma(g, &lambda, u, v, w))
}

fn gamma(g: &Graph, lambda: &IntersectionMatrix, u: Vertex, v: Vertex, w: Vertex) -> GammaSets {
    let mut sets = GammaSets {
        ov_u: BTreeSet::new(),
        ov_w: BTreeSet::new(),
        cc: BTreeSet::new(),
        cd: BTreeSet::new(),
        omega: BTreeSet::new(),
    };
    for x in g.vertices() {
        if x == u || x == v || x == w {
            continue;
        }
        let (tu, tv, tw) = (lambda.get(x, u), lambda.get(x, v), lambda.get(x, w));
        if tu == Ov && tv == Ov && tw == Di {
            sets.ov_u.insert(x);
        }
        if tv == Ov && tw == Ov && tu == Di {
            sets.ov_w.insert(x);
        }
        if (tu == Ov && tw == Ov && tv == Di) || tu == Cc || tv == Cc || tw == Cc {
            sets.cc.insert(x);
        }
        if (tu == Ov && tw == Ov && tv == Cs) || tu == Cd || tv == Cd || tw == Cd {
            sets.cd.insert(x);
        }
        if tu == Ov && tv == Ov && tw == Ov {
            sets.omega.insert(x);
        }
    }
    sets
}

/// All unordered ov-triangles of Δ_G.
pub fn delta_triangles(g: &Graph) -> Vec<BTreeSet<Vertex>> {
    let lambda = neighborhood_matrix(g);
    let vs: Vec<Vertex> = g.vertices().collect();
    let mut out = Vec::new();
    for (i, &a) in vs.iter().enumerate() {
        for (j, &b) in vs.iter().enumerate().skip(i + 1) {
            for &c in vs.iter().skip(j + 1) {
                let t: BTreeSet<Vertex> = [a, b, c].into_iter().collect();
                if delta_if_ov(g, &lambda, &t) {
                    out.push(t);
                }
            }
        }
    }
    out
}

/// K_G: vertices overlapping all three corners of some Δ_G triangle.
pub fn k_set(g: &Graph) -> BTreeSet<Vertex> {
    let lambda = neighborhood_matrix(g);
    let mut out = BTreeSet::new();
    for t in delta_triangles(g) {
        for x in g.vertices() {
            if !t.contains(&x) && t.iter().all(|&a| lambda.get(x, a) == Ov) {
                out.insert(x);
            }
        }
    }
    out
}

/// f_N: for every ordered variant of every Δ_G triangle and every subset of
/// its Ω, emit Γ_ov,u ∪ Γ_cc ∪ Ω'. Errors if |K_G| exceeds `k_max`.
pub fn f_nonuniform(g: &Graph, k_max: usize) -> Result<Vec<CandidateSet>> {
    let k = k_set(g).len();
    if k > k_max {
        return Err(Error::BudgetExceeded { k, k_max });
    }
    let lambda = neighborhood_matrix(g);
    let mut out: Vec<CandidateSet> = Vec::new();
    let mut seen: BTreeSet<BTreeSet<Vertex>> = BTreeSet::new();
    for t in delta_triangles(g) {
        let vs: Vec<Vertex> = t.iter().copied().collect();
        let orders = [
            (vs[0], vs[1], vs[2]),
            (vs[0], vs[2], vs[1]),
            (vs[1], vs[0], vs[2]),
            (vs[1], vs[2], vs[0]),
            (vs[2], vs[0], vs[1]),
            (vs[2], vs[1], vs[0]),
        ];
        for (u, v, w) in orders {
            let sets = gamma(g, &lambda, u, v, w);
            let omega: Vec<Vertex> = sets.omega.iter().copied().collect();
            for bits in 0u64..(1u64 << omega.len()) {
                let mut cand: BTreeSet<Vertex> = sets.ov_u.iter().copied().collect();
                cand.extend(&sets.cc);
                let mut chosen = BTreeSet::new();
                for (i, &x) in omega.iter().enumerate() {
                    if bits & (1 << i) != 0 {
                        cand.insert(x);
                        chosen.insert(x);
                    }
                }
                if !cand.is_empty() && seen.insert(cand.clone()) {
                    out.push(CandidateSet {
                        vertices: cand,
                        provenance: Provenance::NonUniform { triple: (u, v, w), omega: chosen },
                    });
                }
            }
        }
    }
    Ok(out)
}

/// The union candidate function, plus the empty fallback (canonize λ_G
/// directly when it is already an interval matrix). Deduplicated by vertex
/// set; deterministic sorted order.
pub fn all_candidates(g: &Graph, k_max: usize) -> Result<Vec<CandidateSet>> {
    let mut out: Vec<CandidateSet> = Vec::new();
    let mut seen: BTreeSet<BTreeSet<Vertex>> = BTreeSet::new();
    let mut push = |c: CandidateSet, out: &mut Vec<CandidateSet>| {
        if seen.insert(c.vertices.clone()) {
            out.push(c);
        }
    };
    for c in f_hca(g) {
        push(c, &mut out);
    }
    for c in f_uniform(g) {
        push(c, &mut out);
    }
    for c in f_nonuniform(g, k_max)? {
        push(c, &mut out);
    }
    push(
        CandidateSet { vertices: BTreeSet::new(), provenance: Provenance::Fallback },
        &mut out,
    );
    out.sort_by(|a, b| a.vertices.cmp(&b.vertices));
    Ok(out)
}
