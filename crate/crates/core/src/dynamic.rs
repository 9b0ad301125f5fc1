//! Maximum matching under insertion and deletion of left vertices.
//!
//! [`DynamicConvexMatching`] keeps the matched set that the greedy sweep of
//! [`max_matching_convex`](crate::matching::max_matching_convex) would produce. It is a
//! segment tree over right positions; each vertex enters at the leaf of its `begin`. A
//! node spanning `[lo, hi]` with children `[lo, mid]` and `[mid + 1, hi]` receives the
//! right child's matched vertices plus the vertices the left child could not place but
//! that reach past `mid`. Inside the node every such vertex starts at `mid + 1`, so a
//! set is placeable iff for every `e` at most `e - mid` members have clipped end `<= e`.
//! The node keeps the minimum-key basis of that matroid with a slack tree over
//! `mid + 1..=hi`. One update changes each node's basis by at most one exchange, which
//! gives `O(log² n)` work per update.
//!
//! [`DynamicCircularMatching`] stacks two of these structures to maintain the two
//! convex graphs of the circular reduction.

use std::collections::{BTreeSet, HashMap, HashSet};

use crate::matching::{
    greedy_sweep, CircularGraph, ConvexGraph, IntervalVertex, Matching, MatchingError, Span, SweepKey, VertexId,
};

const NIL: usize = usize::MAX;

/// Effect of a single vertex update.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct UpdateOutcome {
    pub new_size: usize,
    /// Matched after an insertion, or matched just before a deletion.
    pub matched: bool,
    /// Previously matched vertex that an insertion pushed out.
    pub replacement: Option<VertexId>,
    /// Previously unmatched vertex that a deletion let in.
    pub supplement: Option<VertexId>,
}

/// Range-add / range-min tree over `0..len`.
#[derive(Clone, Debug)]
struct SlackTree {
    len: usize,
    min: Vec<i32>,
    lazy: Vec<i32>,
}

impl SlackTree {
    /// Value at `i` starts at `i + 1`.
    fn new(len: usize) -> Self {
        let mut t = SlackTree { len, min: vec![0; 4 * len], lazy: vec![0; 4 * len] };
        t.build(1, 0, len - 1);
        t
    }

    fn build(&mut self, x: usize, l: usize, r: usize) {
        if l == r {
            self.min[x] = l as i32 + 1;
            return;
        }
        let m = (l + r) / 2;
        self.build(2 * x, l, m);
        self.build(2 * x + 1, m + 1, r);
        self.min[x] = self.min[2 * x].min(self.min[2 * x + 1]);
    }

    fn push(&mut self, x: usize) {
        let z = self.lazy[x];
        if z != 0 {
            for c in [2 * x, 2 * x + 1] {
                self.min[c] += z;
                self.lazy[c] += z;
            }
            self.lazy[x] = 0;
        }
    }

    fn add_suffix(&mut self, from: usize, delta: i32) {
        self.add(1, 0, self.len - 1, from, delta);
    }

    fn add(&mut self, x: usize, l: usize, r: usize, from: usize, delta: i32) {
        if r < from {
            return;
        }
        if from <= l {
            self.min[x] += delta;
            self.lazy[x] += delta;
            return;
        }
        self.push(x);
        let m = (l + r) / 2;
        self.add(2 * x, l, m, from, delta);
        self.add(2 * x + 1, m + 1, r, from, delta);
        self.min[x] = self.min[2 * x].min(self.min[2 * x + 1]);
    }

    fn min_suffix(&mut self, from: usize) -> i32 {
        self.min_from(1, 0, self.len - 1, from)
    }

    fn min_from(&mut self, x: usize, l: usize, r: usize, from: usize) -> i32 {
        if r < from {
            return i32::MAX;
        }
        if from <= l {
            return self.min[x];
        }
        self.push(x);
        let m = (l + r) / 2;
        self.min_from(2 * x, l, m, from).min(self.min_from(2 * x + 1, m + 1, r, from))
    }

    /// First index `>= from` whose value is zero. Values never go negative.
    fn first_zero_from(&mut self, from: usize) -> Option<usize> {
        self.first_zero(1, 0, self.len - 1, from)
    }

    fn first_zero(&mut self, x: usize, l: usize, r: usize, from: usize) -> Option<usize> {
        if r < from || self.min[x] > 0 {
            return None;
        }
        if l == r {
            return Some(l);
        }
        self.push(x);
        let m = (l + r) / 2;
        self.first_zero(2 * x, l, m, from).or_else(|| self.first_zero(2 * x + 1, m + 1, r, from))
    }

    fn last_zero(&mut self) -> Option<usize> {
        let (mut x, mut l, mut r) = (1, 0, self.len - 1);
        if self.min[1] > 0 {
            return None;
        }
        while l < r {
            self.push(x);
            let m = (l + r) / 2;
            if self.min[2 * x + 1] == 0 {
                x = 2 * x + 1;
                l = m + 1;
            } else {
                x *= 2;
                r = m;
            }
        }
        Some(l)
    }
}

/// Net change of a key set; opposite entries for the same key cancel.
#[derive(Clone, Debug, Default)]
struct Delta(Vec<(SweepKey, bool)>);

impl Delta {
    fn push(&mut self, key: SweepKey, added: bool) {
        if let Some(p) = self.0.iter().position(|&(k, a)| k == key && a != added) {
            self.0.swap_remove(p);
        } else {
            self.0.push((key, added));
        }
    }

    fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

#[derive(Clone, Debug)]
struct Node {
    /// First right position owned by the right half (the leaf's own position for leaves).
    first: usize,
    hi: usize,
    mid: usize,
    left: usize,
    right: usize,
    slack: SlackTree,
    taken: BTreeSet<SweepKey>,
    rest: BTreeSet<SweepKey>,
}

impl Node {
    fn clipped(&self, key: &SweepKey) -> usize {
        key.end.min(self.hi) - self.first
    }

    fn take(&mut self, key: SweepKey) {
        let e = self.clipped(&key);
        self.slack.add_suffix(e, -1);
        self.taken.insert(key);
    }

    fn untake(&mut self, key: SweepKey) {
        let e = self.clipped(&key);
        self.slack.add_suffix(e, 1);
        self.taken.remove(&key);
    }

    fn insert(&mut self, x: SweepKey, dm: &mut Delta, dt: &mut Delta) {
        let ex = self.clipped(&x);
        if self.slack.min_suffix(ex) >= 1 {
            self.take(x);
            dm.push(x, true);
            return;
        }
        let tight = self.slack.first_zero_from(ex).expect("suffix has a zero") + self.first;
        let worst = if tight == self.hi {
            *self.taken.last().expect("tight prefix is nonempty")
        } else {
            let bound = SweepKey { end: tight + 1, unwrapped: false, id: 0 };
            *self.taken.range(..bound).next_back().expect("tight prefix is nonempty")
        };
        if worst > x {
            self.untake(worst);
            self.take(x);
            self.rest.insert(worst);
            dm.push(worst, false);
            dm.push(x, true);
            if worst.end > self.hi {
                dt.push(worst, true);
            }
        } else {
            self.rest.insert(x);
            if x.end > self.hi {
                dt.push(x, true);
            }
        }
    }

    fn remove(&mut self, x: SweepKey, dm: &mut Delta, dt: &mut Delta) {
        if self.rest.remove(&x) {
            if x.end > self.hi {
                dt.push(x, false);
            }
            return;
        }
        debug_assert!(self.taken.contains(&x));
        self.untake(x);
        dm.push(x, false);
        let fill = match self.slack.last_zero() {
            None => self.rest.first().copied(),
            Some(t) if t + self.first < self.hi => {
                let bound = SweepKey { end: t + self.first + 1, unwrapped: false, id: 0 };
                self.rest.range(bound..).next().copied()
            }
            Some(_) => None,
        };
        if let Some(z) = fill {
            self.rest.remove(&z);
            self.take(z);
            dm.push(z, true);
            if z.end > self.hi {
                dt.push(z, false);
            }
        }
    }
}

/// Dynamic convex bipartite matching with a fixed right side `0..n2`.
#[derive(Clone, Debug)]
pub struct DynamicConvexMatching {
    n2: usize,
    nodes: Vec<Node>,
    root: usize,
    vertices: HashMap<VertexId, IntervalVertex>,
    matched: HashSet<VertexId>,
}

impl DynamicConvexMatching {
    pub fn new(n2: usize) -> Self {
        let mut d = DynamicConvexMatching {
            n2,
            nodes: Vec::new(),
            root: NIL,
            vertices: HashMap::new(),
            matched: HashSet::new(),
        };
        if n2 > 0 {
            d.root = d.build(0, n2 - 1);
        }
        d
    }

    /// Builds a structure holding `vertices`.
    pub fn from_graph(g: &ConvexGraph) -> Result<Self, MatchingError> {
        let mut d = Self::new(g.n2());
        for v in g.vertices() {
            d.insert(*v)?;
        }
        Ok(d)
    }

    fn build(&mut self, lo: usize, hi: usize) -> usize {
        let (first, mid, left, right) = if lo == hi {
            (lo, lo, NIL, NIL)
        } else {
            let mid = (lo + hi) / 2;
            (mid + 1, mid, self.build(lo, mid), self.build(mid + 1, hi))
        };
        self.nodes.push(Node {
            first,
            hi,
            mid,
            left,
            right,
            slack: SlackTree::new(hi - first + 1),
            taken: BTreeSet::new(),
            rest: BTreeSet::new(),
        });
        self.nodes.len() - 1
    }

    pub fn n2(&self) -> usize {
        self.n2
    }

    /// Current maximum matching size.
    pub fn size(&self) -> usize {
        self.matched.len()
    }

    /// Number of live left vertices.
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, id: VertexId) -> bool {
        self.vertices.contains_key(&id)
    }

    pub fn vertex(&self, id: VertexId) -> Option<&IntervalVertex> {
        self.vertices.get(&id)
    }

    pub fn is_matched(&self, id: VertexId) -> bool {
        self.matched.contains(&id)
    }

    pub fn matched_ids(&self) -> &HashSet<VertexId> {
        &self.matched
    }

    /// Explicit pairs for the current matched set.
    pub fn matching(&self) -> Matching {
        let mut items: Vec<_> = self
            .matched
            .iter()
            .filter_map(|id| {
                let v = &self.vertices[id];
                Some((v.span?.begin, v.key()?))
            })
            .collect();
        let pairs = greedy_sweep(self.n2, &mut items);
        debug_assert_eq!(pairs.len(), items.len());
        Matching::from_pairs(pairs)
    }

    pub fn graph(&self) -> ConvexGraph {
        let mut vs: Vec<_> = self.vertices.values().copied().collect();
        vs.sort_by_key(|v| v.id);
        ConvexGraph::new(self.n2, vs).expect("live vertices form a valid graph")
    }

    fn path_to(&self, begin: usize) -> Vec<usize> {
        let mut path = vec![self.root];
        let mut x = self.root;
        while self.nodes[x].left != NIL {
            x = if begin <= self.nodes[x].mid { self.nodes[x].left } else { self.nodes[x].right };
            path.push(x);
        }
        path
    }

    /// Applies one leaf operation and returns the change of the root's matched set.
    fn propagate(&mut self, begin: usize, key: SweepKey, added: bool) -> Delta {
        let path = self.path_to(begin);
        let mut dm = Delta::default();
        let mut dt = Delta::default();
        let leaf = *path.last().unwrap();
        if added {
            self.nodes[leaf].insert(key, &mut dm, &mut dt);
        } else {
            self.nodes[leaf].remove(key, &mut dm, &mut dt);
        }
        for w in path.windows(2).rev() {
            let (parent, child) = (w[0], w[1]);
            if dm.is_empty() && dt.is_empty() {
                return Delta::default();
            }
            let (mut up_m, mut up_t, ops) = if self.nodes[parent].left == child {
                (dm, Delta::default(), dt)
            } else {
                (Delta::default(), dt, dm)
            };
            let node = &mut self.nodes[parent];
            for &(k, _) in ops.0.iter().filter(|op| !op.1) {
                node.remove(k, &mut up_m, &mut up_t);
            }
            for &(k, _) in ops.0.iter().filter(|op| op.1) {
                node.insert(k, &mut up_m, &mut up_t);
            }
            dm = up_m;
            dt = up_t;
        }
        dm
    }

    fn apply_root(&mut self, dm: &Delta, own: VertexId) -> Option<VertexId> {
        let mut other = None;
        for &(k, added) in &dm.0 {
            if added {
                self.matched.insert(k.id);
            } else {
                self.matched.remove(&k.id);
            }
            if k.id != own {
                debug_assert!(other.is_none(), "one update flips at most one other vertex");
                other = Some(k.id);
            }
        }
        other
    }

    pub fn insert(&mut self, v: IntervalVertex) -> Result<UpdateOutcome, MatchingError> {
        if self.vertices.contains_key(&v.id) {
            return Err(MatchingError::DuplicateId(v.id));
        }
        if let Some(s) = v.span {
            if s.begin > s.end || s.begin >= self.n2 {
                return Err(MatchingError::BadInterval { id: v.id, begin: s.begin, end: s.end, n2: self.n2 });
            }
        }
        self.vertices.insert(v.id, v);
        let replacement = match (v.span, v.key()) {
            (Some(s), Some(key)) => {
                let dm = self.propagate(s.begin, key, true);
                self.apply_root(&dm, v.id)
            }
            _ => None,
        };
        Ok(UpdateOutcome { new_size: self.size(), matched: self.is_matched(v.id), replacement, supplement: None })
    }

    pub fn delete(&mut self, id: VertexId) -> Result<UpdateOutcome, MatchingError> {
        let v = self.vertices.remove(&id).ok_or(MatchingError::UnknownId(id))?;
        let matched = self.is_matched(id);
        let supplement = match (v.span, v.key()) {
            (Some(s), Some(key)) => {
                let dm = self.propagate(s.begin, key, false);
                self.apply_root(&dm, id)
            }
            _ => None,
        };
        Ok(UpdateOutcome { new_size: self.size(), matched, replacement: None, supplement })
    }
}

/// Dynamic matching for circular convex graphs.
#[derive(Clone, Debug)]
pub struct DynamicCircularMatching {
    n2: usize,
    first: DynamicConvexMatching,
    second: DynamicConvexMatching,
    arcs: HashMap<VertexId, Option<Span>>,
}

impl DynamicCircularMatching {
    pub fn new(n2: usize) -> Self {
        DynamicCircularMatching {
            n2,
            first: DynamicConvexMatching::new(n2),
            second: DynamicConvexMatching::new(n2),
            arcs: HashMap::new(),
        }
    }

    pub fn from_graph(g: &CircularGraph) -> Result<Self, MatchingError> {
        let mut d = Self::new(g.n2());
        for v in g.vertices() {
            d.insert(v.id, v.span)?;
        }
        Ok(d)
    }

    pub fn n2(&self) -> usize {
        self.n2
    }

    pub fn size(&self) -> usize {
        self.second.size()
    }

    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    pub fn contains(&self, id: VertexId) -> bool {
        self.arcs.contains_key(&id)
    }

    /// Pairs of a maximum matching of the current circular graph.
    pub fn matching(&self) -> Matching {
        self.second.matching()
    }

    pub fn graph(&self) -> CircularGraph {
        let mut vs: Vec<_> = self.arcs.iter().map(|(&id, &span)| IntervalVertex::with_span(id, span)).collect();
        vs.sort_by_key(|v| v.id);
        CircularGraph::new(self.n2, vs).expect("live arcs form a valid graph")
    }

    /// Interval of `id` in the unwrapped first-phase graph.
    pub fn first_phase_span(&self, id: VertexId) -> Option<Span> {
        self.first.vertex(id).and_then(|v| v.span)
    }

    /// Interval of `id` in the second-phase graph.
    pub fn second_phase_span(&self, id: VertexId) -> Option<Span> {
        self.second.vertex(id).and_then(|v| v.span)
    }

    fn unwrapped(&self, id: VertexId, span: Option<Span>) -> IntervalVertex {
        match span {
            Some(s) if s.wraps() => {
                IntervalVertex { id, span: Some(Span::new(s.begin, self.n2 - 1 + s.end)), unwrapped: true }
            }
            _ => IntervalVertex::with_span(id, span),
        }
    }

    fn upper(&self, id: VertexId, s: Span) -> IntervalVertex {
        IntervalVertex::new(id, s.begin, self.n2 - 1)
    }

    fn lower(&self, id: VertexId, s: Span) -> IntervalVertex {
        IntervalVertex::new(id, 0, s.end)
    }

    fn wrapping_arc(&self, id: VertexId) -> Option<Span> {
        self.arcs.get(&id).copied().flatten().filter(Span::wraps)
    }

    pub fn insert(&mut self, id: VertexId, span: Option<Span>) -> Result<usize, MatchingError> {
        if self.arcs.contains_key(&id) {
            return Err(MatchingError::DuplicateId(id));
        }
        if let Some(s) = span {
            if s.begin >= self.n2 || s.end >= self.n2 {
                return Err(MatchingError::BadInterval { id, begin: s.begin, end: s.end, n2: self.n2 });
            }
        }
        let out = self.first.insert(self.unwrapped(id, span))?;
        self.arcs.insert(id, span);
        if let Some(u) = out.replacement {
            if let Some(su) = self.wrapping_arc(u) {
                self.second.delete(u)?;
                self.second.insert(self.lower(u, su))?;
            }
        }
        let placed = match span {
            Some(s) if s.wraps() && out.matched => self.upper(id, s),
            Some(s) if s.wraps() => self.lower(id, s),
            _ => IntervalVertex::with_span(id, span),
        };
        Ok(self.second.insert(placed)?.new_size)
    }

    pub fn delete(&mut self, id: VertexId) -> Result<usize, MatchingError> {
        if !self.arcs.contains_key(&id) {
            return Err(MatchingError::UnknownId(id));
        }
        let out = self.first.delete(id)?;
        self.arcs.remove(&id);
        if let Some(y) = out.supplement {
            if let Some(sy) = self.wrapping_arc(y) {
                self.second.delete(y)?;
                self.second.insert(self.upper(y, sy))?;
            }
        }
        Ok(self.second.delete(id)?.new_size)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matching::{max_matching_circular, max_matching_convex};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn slack_tree_queries() {
        let mut t = SlackTree::new(5); // 1 2 3 4 5
        t.add_suffix(2, -3); // 1 2 0 1 2
        assert_eq!(t.min_suffix(0), 0);
        assert_eq!(t.min_suffix(3), 1);
        assert_eq!(t.first_zero_from(0), Some(2));
        assert_eq!(t.first_zero_from(3), None);
        t.add_suffix(4, -2); // 1 2 0 1 0
        assert_eq!(t.last_zero(), Some(4));
        assert_eq!(t.first_zero_from(3), Some(4));
        t.add_suffix(0, 1);
        assert_eq!(t.last_zero(), None);
    }

    #[test]
    fn insert_examples() {
        let mut d = DynamicConvexMatching::new(2);
        let o = d.insert(IntervalVertex::new(1, 0, 0)).unwrap();
        assert_eq!((o.new_size, o.matched, o.replacement), (1, true, None));
        let o = d.insert(IntervalVertex::new(2, 0, 0)).unwrap();
        assert_eq!(o.new_size, 1);
        // equal deadlines: the smaller id stays
        assert!(!o.matched && o.replacement.is_none());
        assert_eq!(d.insert(IntervalVertex::new(2, 0, 0)), Err(MatchingError::DuplicateId(2)));
    }

    #[test]
    fn replacement_reported() {
        let mut d = DynamicConvexMatching::new(2);
        d.insert(IntervalVertex::new(5, 0, 0)).unwrap();
        let o = d.insert(IntervalVertex::new(1, 0, 0)).unwrap();
        assert_eq!((o.new_size, o.matched, o.replacement), (1, true, Some(5)));
    }

    #[test]
    fn delete_examples() {
        let mut d = DynamicConvexMatching::new(3);
        d.insert(IntervalVertex::new(1, 0, 0)).unwrap();
        d.insert(IntervalVertex::new(2, 0, 0)).unwrap();
        let o = d.delete(2).unwrap();
        assert_eq!((o.new_size, o.matched, o.supplement), (1, false, None));
        d.insert(IntervalVertex::new(2, 0, 0)).unwrap();
        let o = d.delete(1).unwrap();
        assert_eq!((o.new_size, o.matched, o.supplement), (1, true, Some(2)));
        assert_eq!(d.delete(2).unwrap().new_size, 0);
        assert_eq!(d.delete(2), Err(MatchingError::UnknownId(2)));
    }

    #[test]
    fn empty_span_is_tracked() {
        let mut d = DynamicConvexMatching::new(2);
        let o = d.insert(IntervalVertex::empty(3)).unwrap();
        assert_eq!((o.new_size, o.matched), (0, false));
        assert!(d.contains(3));
        d.delete(3).unwrap();
        assert!(d.is_empty());
    }

    fn random_vertex(rng: &mut ChaCha8Rng, id: u64, n2: usize, extended: bool) -> IntervalVertex {
        if rng.gen_bool(0.05) {
            return IntervalVertex::empty(id);
        }
        let b = rng.gen_range(0..n2);
        let max_end = if extended { 2 * n2 - 2 } else { n2 - 1 };
        let e = rng.gen_range(b..=max_end.max(b));
        IntervalVertex { id, span: Some(Span::new(b, e)), unwrapped: extended && rng.gen_bool(0.5) }
    }

    #[test]
    fn convex_matches_static_greedy_set() {
        for seed in 0..40 {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let n2 = rng.gen_range(1..=24);
            let mut d = DynamicConvexMatching::new(n2);
            let mut live: Vec<u64> = Vec::new();
            for step in 0..300u64 {
                let before = d.matched_ids().clone();
                if live.is_empty() || rng.gen_bool(0.6) {
                    let v = random_vertex(&mut rng, step, n2, seed % 2 == 0);
                    let o = d.insert(v).unwrap();
                    live.push(step);
                    let after = d.matched_ids();
                    let mut expect = before.clone();
                    if o.matched {
                        expect.insert(step);
                    }
                    if let Some(u) = o.replacement {
                        assert!(expect.remove(&u));
                    }
                    assert_eq!(&expect, after);
                } else {
                    let id = live.swap_remove(rng.gen_range(0..live.len()));
                    let o = d.delete(id).unwrap();
                    assert_eq!(o.matched, before.contains(&id));
                    let mut expect = before.clone();
                    expect.remove(&id);
                    if let Some(z) = o.supplement {
                        assert!(expect.insert(z));
                    }
                    assert_eq!(&expect, d.matched_ids());
                }
                let g = d.graph();
                let m = max_matching_convex(&g);
                assert_eq!(m.matched_ids(), *d.matched_ids(), "seed {seed} step {step}");
                let dm = d.matching();
                assert!(dm.is_valid(|id, j| g.has_edge(id, j)));
                assert_eq!(dm.size(), d.size());
            }
        }
    }

    #[test]
    fn circular_examples() {
        let mut d = DynamicCircularMatching::new(4);
        assert_eq!(d.insert(1, Some(Span::new(1, 2))).unwrap(), 1);
        let mut d = DynamicCircularMatching::new(4);
        assert_eq!(d.insert(7, Some(Span::new(3, 0))).unwrap(), 1);
        assert_eq!(d.first_phase_span(7), Some(Span::new(3, 3)));
        assert_eq!(d.second_phase_span(7), Some(Span::new(3, 3)));
        assert_eq!(d.delete(7).unwrap(), 0);
        assert!(d.is_empty());
        assert_eq!(d.delete(7), Err(MatchingError::UnknownId(7)));
    }

    #[test]
    fn circular_tracks_static() {
        for seed in 0..30 {
            let mut rng = ChaCha8Rng::seed_from_u64(1000 + seed);
            let n2 = [1, 2, 3, 5, 8, 16][seed as usize % 6];
            let mut d = DynamicCircularMatching::new(n2);
            let mut live: Vec<u64> = Vec::new();
            for step in 0..300u64 {
                if live.is_empty() || rng.gen_bool(0.55) {
                    let span = if rng.gen_bool(0.05) {
                        None
                    } else {
                        Some(Span::arc(rng.gen_range(0..n2), rng.gen_range(1..=n2), n2))
                    };
                    d.insert(step, span).unwrap();
                    live.push(step);
                } else {
                    let id = live.swap_remove(rng.gen_range(0..live.len()));
                    d.delete(id).unwrap();
                }
                let g = d.graph();
                assert_eq!(d.size(), max_matching_circular(&g).size(), "seed {seed} step {step}");
                let m = d.matching();
                assert!(m.is_valid(|id, j| g.has_edge(id, j)));
            }
        }
    }
}
