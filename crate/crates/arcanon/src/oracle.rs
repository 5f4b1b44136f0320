//! Brute-force oracles for small instances: exhaustive model search,
//! enumeration of normalized models, flip-set extraction and seeded random
//! models. Deliberately independent of the main pipeline so the two can be
//! cross-checked.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::intersection::{neighborhood_matrix, IntersectionMatrix, IntersectionType};
use crate::model::{classify_positions, ArcModel, Event, Representation, Side};

/// Largest vertex count the exhaustive oracles accept by default.
pub const DEFAULT_LIMIT: usize = 8;

/// Backtracking placement of the 2n endpoint events on the circle. The
/// first event is pinned to l(1), which picks one representative per
/// rotation class; candidate events are tried in token order, so models
/// come out in lexicographic order of their anchored event sequence.
struct Brute<'a> {
    g: &'a Graph,
    /// In exact mode the model's matrix must equal this; otherwise only
    /// adjacency (di vs. non-di) is enforced.
    lambda: Option<IntersectionMatrix>,
    lpos: Vec<Option<usize>>,
    rpos: Vec<Option<usize>>,
    events: Vec<Event>,
    all: bool,
    out: Vec<ArcModel>,
    stop: bool,
}

impl<'a> Brute<'a> {
    fn new(g: &'a Graph, exact: bool, all: bool) -> Self {
        let n = g.n();
        Brute {
            g,
            lambda: exact.then(|| neighborhood_matrix(g)),
            lpos: vec![None; n],
            rpos: vec![None; n],
            events: Vec::with_capacity(2 * n),
            all,
            out: Vec::new(),
            stop: false,
        }
    }

    /// Check arc `a` (which just received an endpoint) against every other
    /// partially placed arc whose relation to `a` is already determined.
    /// A pair with at most one missing endpoint is decided: the missing
    /// endpoint comes cyclically after every placed event and before the
    /// anchor, so a virtual position one past the prefix classifies it.
    fn placement_ok(&self, a: u32) -> bool {
        let len = self.events.len();
        let virt = len;
        let (la, ra) = (self.lpos[a as usize - 1], self.rpos[a as usize - 1]);
        for b in 1..=self.g.n() as u32 {
            if b == a {
                continue;
            }
            let (lb, rb) = (self.lpos[b as usize - 1], self.rpos[b as usize - 1]);
            if lb.is_none() && rb.is_none() {
                continue;
            }
            let unknowns = [la, ra, lb, rb].iter().filter(|p| p.is_none()).count();
            if unknowns > 1 {
                continue;
            }
            let circle = len + unknowns;
            let t = classify_positions(
                circle,
                la.unwrap_or(virt),
                ra.unwrap_or(virt),
                lb.unwrap_or(virt),
                rb.unwrap_or(virt),
            )
            .expect("distinct circular positions always classify");
            let ok = match &self.lambda {
                Some(lam) => t == lam.get(a, b),
                None => (t == IntersectionType::Di) == !self.g.is_edge(a, b),
            };
            if !ok {
                return false;
            }
        }
        true
    }

    fn place(&mut self, e: Event) {
        let slot = match e.side {
            Side::L => &mut self.lpos,
            Side::R => &mut self.rpos,
        };
        slot[e.arc as usize - 1] = Some(self.events.len());
        self.events.push(e);
    }

    fn unplace(&mut self, e: Event) {
        self.events.pop();
        let slot = match e.side {
            Side::L => &mut self.lpos,
            Side::R => &mut self.rpos,
        };
        slot[e.arc as usize - 1] = None;
    }

    fn run(&mut self) {
        if self.stop {
            return;
        }
        let n = self.g.n();
        if self.events.len() == 2 * n {
            self.out
                .push(ArcModel::new(self.events.clone()).expect("placement is well-formed"));
            if !self.all {
                self.stop = true;
            }
            return;
        }
        for side in [Side::L, Side::R] {
            for arc in 1..=n as u32 {
                let placed = match side {
                    Side::L => &self.lpos,
                    Side::R => &self.rpos,
                };
                if placed[arc as usize - 1].is_some() {
                    continue;
                }
                let e = Event { arc, side };
                self.place(e);
                if self.placement_ok(arc) {
                    self.run();
                }
                self.unplace(e);
                if self.stop {
                    return;
                }
            }
        }
    }
}

fn check_limit(g: &Graph, limit: usize) -> Result<()> {
    if g.n() > limit {
        return Err(Error::SizeLimit { n: g.n(), limit });
    }
    Ok(())
}

fn brute_models(g: &Graph, exact: bool, all: bool) -> Vec<ArcModel> {
    if g.n() == 0 {
        return vec![ArcModel::new(Vec::new()).unwrap()];
    }
    let mut b = Brute::new(g, exact, all);
    b.place(Event { arc: 1, side: Side::L });
    b.run();
    b.out
}

/// Exhaustively search for any arc model realizing `g`; None means `g` is
/// not a circular-arc graph.
pub fn oracle_realize(g: &Graph, limit: usize) -> Result<Option<Representation>> {
    check_limit(g, limit)?;
    Ok(brute_models(g, false, false)
        .into_iter()
        .next()
        .map(Representation::identity))
}

pub fn oracle_is_ca(g: &Graph, limit: usize) -> Result<bool> {
    Ok(oracle_realize(g, limit)?.is_some())
}

/// All normalized models of `g` (matrix exactly the neighborhood matrix,
/// identity bijection), one per rotation class, in lexicographic order of
/// the anchored event sequence. `g` must be twin-free and universal-free.
pub fn oracle_normalized_models(g: &Graph, limit: usize) -> Result<Vec<Representation>> {
    check_limit(g, limit)?;
    if g.twin_classes().iter().any(|c| c.len() > 1) {
        return Err(Error::Precondition("graph must be twin-free"));
    }
    if g.vertices().any(|v| g.is_universal(v)) {
        return Err(Error::Precondition("graph must have no universal vertex"));
    }
    Ok(brute_models(g, true, true)
        .into_iter()
        .map(Representation::identity)
        .collect())
}

/// All flip sets of `g`: flipping X yields a model with a hole iff X is the
/// stab set of some gap of a normalized model. Flip sets are nonempty by
/// definition, so uncovered gaps contribute nothing.
pub fn oracle_flip_sets(g: &Graph, limit: usize) -> Result<BTreeSet<BTreeSet<Vertex>>> {
    let mut out = BTreeSet::new();
    for rep in oracle_normalized_models(g, limit)? {
        let len = rep.model.events().len();
        for i in 0..len {
            let stab = rep.model.stab_set(i);
            if !stab.is_empty() {
                out.insert(stab);
            }
        }
    }
    Ok(out)
}

/// A uniformly random arc model on arcs 1..=n (one representative per
/// rotation class, anchored at l(1)), deterministic in the seed.
pub fn random_model(n: usize, seed: u64) -> ArcModel {
    let mut events: Vec<Event> = (1..=n as u32)
        .flat_map(|arc| [Event { arc, side: Side::L }, Event { arc, side: Side::R }])
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    events.shuffle(&mut rng);
    let anchor = events
        .iter()
        .position(|e| *e == Event { arc: 1, side: Side::L })
        .unwrap();
    events.rotate_left(anchor);
    ArcModel::new(events).expect("one event per arc and side")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::graph_of_model;

    fn c4() -> Graph {
        Graph::from_edges(4, &[(1, 2), (2, 3), (3, 4), (1, 4)]).unwrap()
    }

    fn p4() -> Graph {
        Graph::from_edges(4, &[(1, 2), (2, 3), (3, 4)]).unwrap()
    }

    fn fig1() -> Graph {
        Graph::from_edges(5, &[(1, 2), (2, 3), (3, 4), (4, 5), (2, 5)]).unwrap()
    }

    fn net() -> Graph {
        Graph::from_edges(6, &[(1, 2), (2, 3), (1, 3), (1, 4), (2, 5), (3, 6)]).unwrap()
    }

    #[test]
    fn c4_is_realizable() {
        let rep = oracle_realize(&c4(), DEFAULT_LIMIT).unwrap().unwrap();
        assert_eq!(graph_of_model(&rep), c4());
    }

    #[test]
    fn two_c4s_are_not_realizable() {
        let g = c4().disjoint_union(&c4());
        assert!(!oracle_is_ca(&g, DEFAULT_LIMIT).unwrap());
    }

    #[test]
    fn size_limit_is_enforced() {
        let g = Graph::new(9);
        assert_eq!(
            oracle_realize(&g, DEFAULT_LIMIT),
            Err(Error::SizeLimit { n: 9, limit: 8 })
        );
    }

    #[test]
    fn net_normalized_models_cover_the_circle() {
        let models = oracle_normalized_models(&net(), DEFAULT_LIMIT).unwrap();
        assert!(!models.is_empty());
        for rep in &models {
            assert_eq!(graph_of_model(rep), net());
            assert!(!rep.model.has_hole());
        }
    }

    #[test]
    fn fig1_model_is_among_normalized_models() {
        let models = oracle_normalized_models(&fig1(), DEFAULT_LIMIT).unwrap();
        let expected = ArcModel::parse("l1 r1 l3 r2 l4 r3 l5 r4 l2 r5").unwrap();
        assert!(models.iter().any(|rep| rep.model == expected));
        for rep in &models {
            assert_eq!(graph_of_model(rep), fig1());
        }
    }

    #[test]
    fn normalized_models_reject_twins_and_universals() {
        let twin = Graph::from_edges(3, &[(1, 2), (1, 3)]).unwrap(); // 2,3 twins
        assert!(oracle_normalized_models(&twin, DEFAULT_LIMIT).is_err());
        let star = Graph::from_edges(3, &[(1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(oracle_normalized_models(&star, DEFAULT_LIMIT).is_err());
    }

    #[test]
    fn p4_flip_sets_contain_the_middle_pair() {
        let sets = oracle_flip_sets(&p4(), DEFAULT_LIMIT).unwrap();
        let middle: BTreeSet<Vertex> = [2, 3].into_iter().collect();
        assert!(sets.contains(&middle));
        assert!(!sets.contains(&BTreeSet::new()));
    }

    #[test]
    fn single_arc_random_model() {
        assert_eq!(random_model(1, 0), ArcModel::parse("l1 r1").unwrap());
    }

    #[test]
    fn random_model_is_deterministic_in_the_seed() {
        let a = random_model(5, 42);
        let b = random_model(5, 42);
        let c = random_model(5, 43);
        assert_eq!(a, b);
        assert_ne!(a, c);
        assert_eq!(a.arc_count(), 5);
    }
}
