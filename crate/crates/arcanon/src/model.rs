//! Arc models as circular endpoint-event sequences, the canonical string
//! encoding, arc flipping and model-to-matrix/graph extraction.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::intersection::{IntersectionMatrix, IntersectionType};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    L,
    R,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Event {
    pub arc: u32,
    pub side: Side,
}

/// A circular sequence of 2n endpoint events, clockwise; the start of the
/// sequence is an arbitrary anchor. Only the relative order of endpoints
/// matters, so no coordinates are stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ArcModel {
    events: Vec<Event>,
}

impl ArcModel {
    /// Each arc id must occur exactly once per side.
    pub fn new(events: Vec<Event>) -> Result<Self> {
        let mut seen: BTreeMap<u32, (bool, bool)> = BTreeMap::new();
        for e in &events {
            let entry = seen.entry(e.arc).or_default();
            let slot = match e.side {
                Side::L => &mut entry.0,
                Side::R => &mut entry.1,
            };
            if *slot {
                return Err(Error::Precondition("duplicate endpoint event"));
            }
            *slot = true;
        }
        if seen.values().any(|&(l, r)| !(l && r)) {
            return Err(Error::Precondition("arc with a missing endpoint"));
        }
        Ok(ArcModel { events })
    }

    /// Parse a space-separated token sequence like "l1 r1 l2 r2".
    /// Color suffixes (`l1:3`) are accepted and ignored.
    pub fn parse(s: &str) -> Result<Self> {
        let mut events = Vec::new();
        for tok in s.split_whitespace() {
            let (side, rest) = match tok.split_at(1) {
                ("l", rest) => (Side::L, rest),
                ("r", rest) => (Side::R, rest),
                _ => return Err(Error::Precondition("token must start with l or r")),
            };
            let idx = rest.split(':').next().unwrap();
            let arc: u32 = idx
                .parse()
                .map_err(|_| Error::Precondition("bad arc index in token"))?;
            events.push(Event { arc, side });
        }
        ArcModel::new(events)
    }

    pub fn events(&self) -> &[Event] {
        &self.events
    }

    pub fn arc_count(&self) -> usize {
        self.events.len() / 2
    }

    pub fn arc_ids(&self) -> BTreeSet<u32> {
        self.events.iter().map(|e| e.arc).collect()
    }

    fn position(&self, arc: u32, side: Side) -> Option<usize> {
        self.events.iter().position(|e| e.arc == arc && e.side == side)
    }

    /// Does the gap immediately clockwise of event position `i` lie inside
    /// the arc `[l, r]`?
    fn gap_inside(&self, i: usize, l: usize, r: usize) -> bool {
        let m = self.events.len();
        (i + m - l) % m < (r + m - l) % m
    }

    /// The set of arcs covering the gap immediately clockwise of event `i`.
    pub fn stab_set(&self, i: usize) -> BTreeSet<u32> {
        let mut out = BTreeSet::new();
        for arc in self.arc_ids() {
            let l = self.position(arc, Side::L).unwrap();
            let r = self.position(arc, Side::R).unwrap();
            if self.gap_inside(i, l, r) {
                out.insert(arc);
            }
        }
        out
    }

    /// Swap the L and R events of every arc in `s`; positions unchanged.
    pub fn flip_arcs(&self, s: &BTreeSet<u32>) -> ArcModel {
        let events = self
            .events
            .iter()
            .map(|e| {
                if s.contains(&e.arc) {
                    Event {
                        arc: e.arc,
                        side: match e.side {
                            Side::L => Side::R,
                            Side::R => Side::L,
                        },
                    }
                } else {
                    *e
                }
            })
            .collect();
        ArcModel { events }
    }

    /// True iff some point of the circle is covered by no arc.
    pub fn has_hole(&self) -> bool {
        if self.events.is_empty() {
            return true;
        }
        (0..self.events.len()).any(|i| self.stab_set(i).is_empty())
    }
}

/// Classify two arcs given the positions of their endpoints on a circle of
/// `len` pairwise-distinct event positions. Only the cyclic order of the
/// four positions matters, so this also works on a prefix of a sequence
/// under construction.
pub(crate) fn classify_positions(
    len: usize,
    la: usize,
    ra: usize,
    lb: usize,
    rb: usize,
) -> Result<IntersectionType> {
    let inside = |p: usize, l: usize, r: usize| {
        let off = (p + len - l) % len;
        off > 0 && off < (r + len - l) % len
    };
    let bits = (
        inside(la, lb, rb),
        inside(ra, lb, rb),
        inside(lb, la, ra),
        inside(rb, la, ra),
    );
    match bits {
        (false, false, false, false) => Ok(IntersectionType::Di),
        (true, true, false, false) => Ok(IntersectionType::Cd),
        (false, false, true, true) => Ok(IntersectionType::Cs),
        (true, true, true, true) => Ok(IntersectionType::Cc),
        (true, false, false, true) | (false, true, true, false) => Ok(IntersectionType::Ov),
        _ => Err(Error::BadArcPair),
    }
}

/// Intersection type of two distinct arcs of the model.
pub fn classify_arc_pair(model: &ArcModel, a: u32, b: u32) -> Result<IntersectionType> {
    if a == b {
        return Err(Error::Precondition("arcs must be distinct"));
    }
    let la = model.position(a, Side::L).ok_or(Error::UnknownVertex(a))?;
    let ra = model.position(a, Side::R).ok_or(Error::UnknownVertex(a))?;
    let lb = model.position(b, Side::L).ok_or(Error::UnknownVertex(b))?;
    let rb = model.position(b, Side::R).ok_or(Error::UnknownVertex(b))?;
    classify_positions(model.events().len(), la, ra, lb, rb)
}

/// An arc model together with a vertex-to-arc bijection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    pub model: ArcModel,
    pub assign: BTreeMap<Vertex, u32>,
}

impl Representation {
    /// Arc ids equal to vertex ids.
    pub fn identity(model: ArcModel) -> Self {
        let assign = model.arc_ids().into_iter().map(|a| (a, a)).collect();
        Representation { model, assign }
    }

    pub fn arc(&self, v: Vertex) -> u32 {
        self.assign[&v]
    }
}

/// μ of the model, pulled back along the bijection.
pub fn matrix_of_model(rep: &Representation) -> IntersectionMatrix {
    let vs: Vec<Vertex> = rep.assign.keys().copied().collect();
    let mut m = IntersectionMatrix::empty(&vs);
    for (i, &u) in vs.iter().enumerate() {
        for &v in &vs[i + 1..] {
            let t = classify_arc_pair(&rep.model, rep.arc(u), rep.arc(v))
                .expect("valid model with distinct endpoints");
            m.set(u, v, t);
        }
    }
    m
}

/// The intersection graph of the represented arcs, on the vertex ids of the
/// bijection (which must be 1..n).
pub fn graph_of_model(rep: &Representation) -> Graph {
    let vs: Vec<Vertex> = rep.assign.keys().copied().collect();
    let n = vs.len();
    debug_assert!(vs.iter().enumerate().all(|(i, &v)| v == i as Vertex + 1));
    let mut g = Graph::new(n);
    for (i, &u) in vs.iter().enumerate() {
        for &v in &vs[i + 1..] {
            let t = classify_arc_pair(&rep.model, rep.arc(u), rep.arc(v))
                .expect("valid model with distinct endpoints");
            if t != IntersectionType::Di {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// One token of a model string. Ordering: letter (l < r), then arc index,
/// then color.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Token {
    pub side: Side,
    pub idx: u32,
    pub color: Option<u64>,
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.side {
            Side::L => write!(f, "l{}", self.idx)?,
            Side::R => write!(f, "r{}", self.idx)?,
        }
        if let Some(c) = self.color {
            write!(f, ":{c}")?;
        }
        Ok(())
    }
}

pub fn render_tokens(tokens: &[Token]) -> String {
    tokens
        .iter()
        .map(|t| t.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// Token sequence for one choice of starting arc: relabel arcs 1..n in order
/// of appearance of their left endpoints clockwise from `start` (an L-event
/// position), then emit the events. Colors (by arc id) go on L tokens.
fn rotation_tokens(
    model: &ArcModel,
    start: usize,
    colors: Option<&BTreeMap<u32, u64>>,
) -> (Vec<Token>, BTreeMap<u32, u32>) {
    let m = model.events.len();
    let mut label: BTreeMap<u32, u32> = BTreeMap::new();
    for k in 0..m {
        let e = model.events[(start + k) % m];
        if e.side == Side::L {
            let next = label.len() as u32 + 1;
            label.insert(e.arc, next);
        }
    }
    let tokens = (0..m)
        .map(|k| {
            let e = model.events[(start + k) % m];
            Token {
                side: e.side,
                idx: label[&e.arc],
                color: match e.side {
                    Side::L => colors.and_then(|c| c.get(&e.arc).copied()),
                    Side::R => None,
                },
            }
        })
        .collect();
    (tokens, label)
}

/// The rotation of the model whose anchor attains the canonical string.
/// Ties can only come from rotational symmetries, so the result is a
/// well-defined function of the circular model.
pub fn canonical_rotation(model: &ArcModel, colors: Option<&BTreeMap<u32, u64>>) -> ArcModel {
    let mut best: Option<(Vec<Token>, usize)> = None;
    for (i, e) in model.events.iter().enumerate() {
        if e.side != Side::L {
            continue;
        }
        let (cand, _) = rotation_tokens(model, i, colors);
        if best.as_ref().is_none_or(|(b, _)| cand < *b) {
            best = Some((cand, i));
        }
    }
    let Some((_, start)) = best else {
        return model.clone();
    };
    let mut events = model.events.clone();
    events.rotate_left(start);
    ArcModel { events }
}

/// The lexicographically smallest token sequence over all n choices of
/// starting arc, together with the winning relabeling (arc id to canonical
/// index).
pub fn model_string_relabel(
    model: &ArcModel,
    colors: Option<&BTreeMap<u32, u64>>,
) -> (Vec<Token>, BTreeMap<u32, u32>) {
    let mut best: Option<(Vec<Token>, BTreeMap<u32, u32>)> = None;
    for (i, e) in model.events.iter().enumerate() {
        if e.side != Side::L {
            continue;
        }
        let cand = rotation_tokens(model, i, colors);
        if best.as_ref().is_none_or(|b| cand.0 < b.0) {
            best = Some(cand);
        }
    }
    best.unwrap_or_default()
}

/// The lexicographically smallest token sequence over all n choices of
/// starting arc.
pub fn model_string_tokens(
    model: &ArcModel,
    colors: Option<&BTreeMap<u32, u64>>,
) -> Vec<Token> {
    model_string_relabel(model, colors).0
}

/// Canonical string of a model: colors are keyed by arc id and carried
/// through the relabeling.
pub fn model_string(rep: &Representation, colors: Option<&BTreeMap<u32, u64>>) -> String {
    render_tokens(&model_string_tokens(&rep.model, colors))
}
