//! Maximum matching in convex and circular convex bipartite graphs.
//!
//! The left side holds caller-labelled vertices, each adjacent to an interval of the
//! right side `0..n2`. Circular intervals with `begin > end` wrap past `n2 - 1`.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap, HashSet};

use thiserror::Error;

pub type VertexId = u64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatchingError {
    #[error("vertex id {0} appears twice")]
    DuplicateId(VertexId),
    #[error("vertex id {0} is not present")]
    UnknownId(VertexId),
    #[error("interval [{begin}, {end}] of vertex {id} is invalid for n2 = {n2}")]
    BadInterval { id: VertexId, begin: usize, end: usize, n2: usize },
}

/// Closed interval of right-side positions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Span {
    pub begin: usize,
    pub end: usize,
}

impl Span {
    pub fn new(begin: usize, end: usize) -> Self {
        Span { begin, end }
    }

    /// Circular arc of `len` positions (`1..=n2`) starting at `begin`.
    pub fn arc(begin: usize, len: usize, n2: usize) -> Self {
        debug_assert!(len >= 1 && len <= n2 && begin < n2);
        Span { begin, end: (begin + len - 1) % n2 }
    }

    /// True for circular arcs that wrap past the last position.
    pub fn wraps(&self) -> bool {
        self.begin > self.end
    }

    pub fn contains_circular(&self, j: usize) -> bool {
        if self.wraps() {
            j >= self.begin || j <= self.end
        } else {
            self.begin <= j && j <= self.end
        }
    }
}

/// A left vertex; `None` stands for an empty neighbourhood.
///
/// `unwrapped` marks a circular arc that was cut open and extended past `n2 - 1`. Its
/// extended end stands for a copy of a position after the last one, so at equal `end`
/// it ranks behind vertices that were never wrapped.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IntervalVertex {
    pub id: VertexId,
    pub span: Option<Span>,
    pub unwrapped: bool,
}

impl IntervalVertex {
    pub fn new(id: VertexId, begin: usize, end: usize) -> Self {
        IntervalVertex { id, span: Some(Span::new(begin, end)), unwrapped: false }
    }

    pub fn with_span(id: VertexId, span: Option<Span>) -> Self {
        IntervalVertex { id, span, unwrapped: false }
    }

    pub fn empty(id: VertexId) -> Self {
        IntervalVertex { id, span: None, unwrapped: false }
    }

    /// Greedy priority: earlier deadline first.
    pub(crate) fn key(&self) -> Option<SweepKey> {
        self.span.map(|s| SweepKey { end: s.end, unwrapped: self.unwrapped, id: self.id })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub(crate) struct SweepKey {
    pub end: usize,
    pub unwrapped: bool,
    pub id: VertexId,
}

fn check_ids(vertices: &[IntervalVertex]) -> Result<(), MatchingError> {
    let mut seen = HashSet::with_capacity(vertices.len());
    for v in vertices {
        if !seen.insert(v.id) {
            return Err(MatchingError::DuplicateId(v.id));
        }
    }
    Ok(())
}

/// Convex bipartite graph. `end` may run past `n2 - 1`; edges stop at `n2 - 1` but the
/// full value still orders vertices in the greedy sweep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvexGraph {
    n2: usize,
    vertices: Vec<IntervalVertex>,
}

impl ConvexGraph {
    pub fn new(n2: usize, vertices: Vec<IntervalVertex>) -> Result<Self, MatchingError> {
        check_ids(&vertices)?;
        for v in &vertices {
            if let Some(s) = v.span {
                if s.begin > s.end || s.begin >= n2 {
                    return Err(MatchingError::BadInterval { id: v.id, begin: s.begin, end: s.end, n2 });
                }
            }
        }
        Ok(ConvexGraph { n2, vertices })
    }

    pub fn n2(&self) -> usize {
        self.n2
    }

    pub fn vertices(&self) -> &[IntervalVertex] {
        &self.vertices
    }

    pub fn has_edge(&self, id: VertexId, j: usize) -> bool {
        self.vertices
            .iter()
            .find(|v| v.id == id)
            .and_then(|v| v.span)
            .is_some_and(|s| j < self.n2 && s.begin <= j && j <= s.end)
    }
}

/// Circular convex bipartite graph; every span index lies in `0..n2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CircularGraph {
    n2: usize,
    vertices: Vec<IntervalVertex>,
}

impl CircularGraph {
    pub fn new(n2: usize, vertices: Vec<IntervalVertex>) -> Result<Self, MatchingError> {
        check_ids(&vertices)?;
        for v in &vertices {
            if let Some(s) = v.span {
                if s.begin >= n2 || s.end >= n2 {
                    return Err(MatchingError::BadInterval { id: v.id, begin: s.begin, end: s.end, n2 });
                }
            }
        }
        Ok(CircularGraph { n2, vertices })
    }

    pub fn n2(&self) -> usize {
        self.n2
    }

    pub fn vertices(&self) -> &[IntervalVertex] {
        &self.vertices
    }

    pub fn has_edge(&self, id: VertexId, j: usize) -> bool {
        self.vertices
            .iter()
            .find(|v| v.id == id)
            .and_then(|v| v.span)
            .is_some_and(|s| j < self.n2 && s.contains_circular(j))
    }
}

/// Pairs of (left id, right position).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Matching {
    pairs: Vec<(VertexId, usize)>,
}

impl Matching {
    pub fn from_pairs(mut pairs: Vec<(VertexId, usize)>) -> Self {
        pairs.sort_unstable();
        Matching { pairs }
    }

    pub fn size(&self) -> usize {
        self.pairs.len()
    }

    /// Sorted by left id.
    pub fn pairs(&self) -> &[(VertexId, usize)] {
        &self.pairs
    }

    pub fn partner(&self, id: VertexId) -> Option<usize> {
        self.pairs.binary_search_by_key(&id, |p| p.0).ok().map(|i| self.pairs[i].1)
    }

    pub fn is_matched(&self, id: VertexId) -> bool {
        self.partner(id).is_some()
    }

    pub fn matched_ids(&self) -> HashSet<VertexId> {
        self.pairs.iter().map(|p| p.0).collect()
    }

    /// Both sides duplicate-free and every pair accepted by `edge`.
    pub fn is_valid(&self, edge: impl Fn(VertexId, usize) -> bool) -> bool {
        let mut left = HashSet::new();
        let mut right = HashSet::new();
        self.pairs.iter().all(|&(id, j)| left.insert(id) && right.insert(j) && edge(id, j))
    }
}

/// Greedy sweep over right positions: each position takes the live vertex with the
/// smallest key. `items` are `(begin, key)` with `begin <= key.end`.
pub(crate) fn greedy_sweep(n2: usize, items: &mut [(usize, SweepKey)]) -> Vec<(VertexId, usize)> {
    items.sort_unstable();
    let mut heap = BinaryHeap::new();
    let mut pairs = Vec::new();
    let mut next = 0;
    for j in 0..n2 {
        while next < items.len() && items[next].0 == j {
            heap.push(Reverse(items[next].1));
            next += 1;
        }
        while let Some(Reverse(key)) = heap.pop() {
            if key.end >= j {
                pairs.push((key.id, j));
                break;
            }
        }
    }
    pairs
}

pub fn max_matching_convex(g: &ConvexGraph) -> Matching {
    let mut items: Vec<_> = g.vertices.iter().filter_map(|v| Some((v.span?.begin, v.key()?))).collect();
    Matching::from_pairs(greedy_sweep(g.n2, &mut items))
}

/// Unwraps boundary vertices to `[begin, n2 - 1 + end]`.
pub fn reduce_first_phase(g: &CircularGraph) -> ConvexGraph {
    let n2 = g.n2;
    let vertices = g
        .vertices
        .iter()
        .map(|v| match v.span {
            Some(s) if s.wraps() => IntervalVertex {
                id: v.id,
                span: Some(Span::new(s.begin, n2 - 1 + s.end)),
                unwrapped: true,
            },
            _ => IntervalVertex::with_span(v.id, v.span),
        })
        .collect();
    ConvexGraph { n2, vertices }
}

/// Boundary vertices matched in `m1` keep their upper part `[begin, n2 - 1]`; the
/// others keep their lower part `[0, end]`.
pub fn reduce_second_phase(g: &CircularGraph, m1: &Matching) -> ConvexGraph {
    let n2 = g.n2;
    let vertices = g
        .vertices
        .iter()
        .map(|v| IntervalVertex::with_span(
            v.id,
            v.span.map(|s| {
                if !s.wraps() {
                    s
                } else if m1.is_matched(v.id) {
                    Span::new(s.begin, n2 - 1)
                } else {
                    Span::new(0, s.end)
                }
            }),
        ))
        .collect();
    ConvexGraph { n2, vertices }
}

pub fn max_matching_circular(g: &CircularGraph) -> Matching {
    let m1 = max_matching_convex(&reduce_first_phase(g));
    max_matching_convex(&reduce_second_phase(g, &m1))
}

/// Lookup from id to span for validating matchings against a graph.
pub fn span_index(vertices: &[IntervalVertex]) -> HashMap<VertexId, Option<Span>> {
    vertices.iter().map(|v| (v.id, v.span)).collect()
}
