//! Exact bottleneck optimum over all rotations.
//!
//! The search first brackets the optimum between two consecutive sensor-to-vertex
//! distances of the unrotated polygon. Inside that strip each sensor contributes at most
//! one rising and one falling distance curve as the polygon turns. Extended by unit-slope
//! tails, these curves form a pseudoline arrangement, and the optimum is the lowest
//! feasible arrangement vertex in the strip (or the top of the strip). Vertices are
//! selected by rank with inversion counting.

use std::f64::consts::{PI, TAU};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::decision::{feasible, FeasibilityWitness};
use crate::geom::{chord, Instance};

/// Seed used when callers do not pick one.
pub const DEFAULT_SEED: u64 = 0x5eed;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum OptError {
    #[error("no array element satisfies the oracle")]
    NoFeasibleElement,
    #[error("rank {k} is outside 1..={total}")]
    RankOutOfRange { k: u64, total: u64 },
}

/// Largest distance from a sensor to its nearest boundary point.
pub fn trivial_lower_bound(inst: &Instance) -> f64 {
    inst.sensors().iter().map(|s| 1.0 - s.r).fold(0.0, f64::max)
}

/// Random-access nondecreasing sequence.
pub trait SortedArray {
    fn size(&self) -> usize;
    fn at(&self, i: usize) -> f64;
}

impl SortedArray for Vec<f64> {
    fn size(&self) -> usize {
        self.len()
    }
    fn at(&self, i: usize) -> f64 {
        self[i]
    }
}

/// Distances from one sensor to the vertices of the unrotated polygon on one side of it,
/// nearest first.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DistanceArray {
    pub sensor: usize,
    r: f64,
    beta: f64,
    h: f64,
    /// Vertex angle of element 0 in pitch units.
    start: i64,
    /// +1 walks counter-clockwise from the sensor, -1 clockwise.
    step: i64,
    len: usize,
}

impl DistanceArray {
    /// Polygon vertex index of element `i`.
    pub fn vertex(&self, i: usize, n: usize) -> usize {
        (-(self.start + self.step * i as i64)).rem_euclid(n as i64) as usize
    }
}

impl SortedArray for DistanceArray {
    fn size(&self) -> usize {
        self.len
    }
    fn at(&self, i: usize) -> f64 {
        let k = self.start + self.step * i as i64;
        chord(self.r, k as f64 * self.h - self.beta)
    }
}

/// The `2n` arrays that together hold all `n²` distances of the unrotated polygon.
pub fn distance_arrays(inst: &Instance) -> Vec<DistanceArray> {
    let n = inst.len();
    let h = inst.pitch();
    let mut out = Vec::with_capacity(2 * n);
    for (i, s) in inst.sensors().iter().enumerate() {
        let first = (s.beta / h).ceil() as i64;
        let ccw = (((s.beta + PI) / h).ceil() as i64 - first).clamp(0, n as i64) as usize;
        out.push(DistanceArray { sensor: i, r: s.r, beta: s.beta, h, start: first, step: 1, len: ccw });
        out.push(DistanceArray { sensor: i, r: s.r, beta: s.beta, h, start: first - 1, step: -1, len: n - ccw });
    }
    out
}

/// First index in `[lo, hi)` whose element is `> x` (or `>= x` when `inclusive`).
fn partition_point<A: SortedArray>(a: &A, lo: usize, hi: usize, x: f64, inclusive: bool) -> usize {
    let (mut l, mut r) = (lo, hi);
    while l < r {
        let m = (l + r) / 2;
        let v = a.at(m);
        if v < x || (!inclusive && v == x) {
            l = m + 1;
        } else {
            r = m;
        }
    }
    l
}

/// Finds consecutive elements `(below, above)` of the merged order with `oracle(below)`
/// false and `oracle(above)` true, probing the weighted median of per-array medians.
/// `below` is 0 when every element satisfies the oracle.
pub fn search_sorted_arrays<A: SortedArray>(
    arrays: &[A],
    mut oracle: impl FnMut(f64) -> bool,
) -> Result<(f64, f64), OptError> {
    let mut ranges: Vec<(usize, usize)> = arrays.iter().map(|a| (0, a.size())).collect();
    let mut below = 0.0f64;
    let mut above = f64::INFINITY;
    loop {
        let mut meds: Vec<(f64, usize)> = ranges
            .iter()
            .zip(arrays)
            .filter(|((l, r), _)| l < r)
            .map(|(&(l, r), a)| (a.at((l + r) / 2), r - l))
            .collect();
        if meds.is_empty() {
            break;
        }
        meds.sort_by(|a, b| a.0.total_cmp(&b.0));
        let total: usize = meds.iter().map(|m| m.1).sum();
        let mut acc = 0;
        let x = meds
            .iter()
            .find(|m| {
                acc += m.1;
                2 * acc >= total
            })
            .map(|m| m.0)
            .unwrap();
        if oracle(x) {
            above = above.min(x);
            for ((l, r), a) in ranges.iter_mut().zip(arrays) {
                *r = partition_point(a, *l, *r, x, true);
            }
        } else {
            below = below.max(x);
            for ((l, r), a) in ranges.iter_mut().zip(arrays) {
                *l = partition_point(a, *l, *r, x, false);
            }
        }
    }
    if above.is_finite() {
        Ok((below, above))
    } else {
        Err(OptError::NoFeasibleElement)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Direction {
    Increasing,
    Decreasing,
}

/// Distance from one sensor to one vertex as a function of sweep time, restricted to
/// the times where it lies inside the strip. The value at time `t` is
/// `chord(radius, phase - t)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Curve {
    pub sensor: usize,
    pub vertex: usize,
    pub direction: Direction,
    pub radius: f64,
    pub phase: f64,
    pub t0: f64,
    pub t1: f64,
    pub y0: f64,
    pub y1: f64,
    /// Number of sensors sharing this exact curve.
    pub multiplicity: usize,
}

/// Angular offset at which a sensor at radius `r` is at distance `y` from the circle.
fn offset_for(r: f64, y: f64) -> f64 {
    let q = ((y * y - (1.0 - r) * (1.0 - r)) / (4.0 * r)).clamp(0.0, 1.0);
    2.0 * q.sqrt().asin()
}

impl Curve {
    pub fn value(&self, t: f64) -> f64 {
        chord(self.radius, self.phase - t)
    }

    /// Abscissa at height `y` on the curve extended by unit-slope tails.
    pub fn abscissa(&self, y: f64) -> f64 {
        match self.direction {
            Direction::Increasing => {
                if y <= self.y0 {
                    self.t0 + (y - self.y0)
                } else if y >= self.y1 {
                    self.t1 + (y - self.y1)
                } else {
                    (self.phase + offset_for(self.radius, y)).clamp(self.t0, self.t1)
                }
            }
            Direction::Decreasing => {
                if y >= self.y0 {
                    self.t0 - (y - self.y0)
                } else if y <= self.y1 {
                    self.t1 + (self.y1 - y)
                } else {
                    (self.phase - offset_for(self.radius, y)).clamp(self.t0, self.t1)
                }
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CurveFamily {
    pub curves: Vec<Curve>,
    pub strip: (f64, f64),
    pub pitch: f64,
    pub extended: bool,
}

/// Rising and falling distance curves whose values stay inside `strip` during one pitch.
pub fn build_curve_family(inst: &Instance, strip: (f64, f64)) -> CurveFamily {
    let (lo, hi) = strip;
    let n = inst.len();
    let h = inst.pitch();
    let mut curves = Vec::new();
    for (i, s) in inst.sensors().iter().enumerate() {
        if s.r <= 0.0 {
            continue;
        }
        let d_lo = offset_for(s.r, lo);
        let d_hi = if hi >= 1.0 + s.r { PI } else { offset_for(s.r, hi) };
        for direction in [Direction::Increasing, Direction::Decreasing] {
            // Offsets (vertex angle minus sensor angle) on this side of the sensor.
            let (a, b) = match direction {
                Direction::Increasing => (-d_hi, -d_lo),
                Direction::Decreasing => (d_lo, d_hi),
            };
            let k = ((s.beta + 0.5 * (a + b)) / h).ceil();
            let phase = k * h - s.beta;
            let (a, b) = (a.max(phase - h), b.min(phase));
            if b <= a {
                continue;
            }
            let (t0, t1) = (phase - b, phase - a);
            let vertex = (-(k as i64)).rem_euclid(n as i64) as usize;
            let mut c = Curve {
                sensor: i,
                vertex,
                direction,
                radius: s.r,
                phase,
                t0,
                t1,
                y0: 0.0,
                y1: 0.0,
                multiplicity: 1,
            };
            c.y0 = c.value(t0);
            c.y1 = c.value(t1);
            curves.push(c);
        }
    }
    CurveFamily { curves: dedup_curves(curves), strip, pitch: h, extended: false }
}

fn dedup_curves(mut curves: Vec<Curve>) -> Vec<Curve> {
    const TOL: f64 = 1e-12;
    curves.sort_by(|a, b| {
        a.direction.cmp(&b.direction).then(a.radius.total_cmp(&b.radius)).then(a.phase.total_cmp(&b.phase))
    });
    let mut out: Vec<Curve> = Vec::with_capacity(curves.len());
    for c in curves {
        let dup = out.iter().rev().take_while(|p| p.direction == c.direction && c.radius - p.radius <= TOL).any(|p| {
            let dphase = (p.phase - c.phase).rem_euclid(TAU);
            (dphase <= TOL || dphase >= TAU - TOL) && (p.t0 - c.t0).abs() <= TOL && (p.t1 - c.t1).abs() <= TOL
        });
        if dup {
            let p = out
                .iter_mut()
                .rev()
                .find(|p| p.direction == c.direction && (p.t0 - c.t0).abs() <= TOL && (p.t1 - c.t1).abs() <= TOL)
                .unwrap();
            p.multiplicity += 1;
        } else {
            out.push(c);
        }
    }
    out.sort_by_key(|c| (c.sensor, c.direction));
    out
}

/// Marks the family as extended: every curve continues with unit-slope tails.
pub fn extend_pseudolines(mut f: CurveFamily) -> CurveFamily {
    f.extended = true;
    f
}

fn count_inversions(seq: &[usize]) -> u64 {
    let n = seq.len();
    let mut tree = vec![0u32; n + 1];
    let mut inv = 0u64;
    for (i, &v) in seq.iter().enumerate() {
        let mut seen_le = 0u64;
        let mut x = v + 1;
        while x > 0 {
            seen_le += tree[x] as u64;
            x &= x - 1;
        }
        inv += i as u64 - seen_le;
        let mut x = v + 1;
        while x <= n {
            tree[x] += 1;
            x += x & x.wrapping_neg();
        }
    }
    inv
}

/// Lists every index pair `(i, j)`, `i < j`, with `seq[i] > seq[j]`, as pairs of `tags`.
fn inversion_pairs(seq: &[usize], tags: &[usize]) -> Vec<(usize, usize)> {
    fn go(items: &mut [(usize, usize)], buf: &mut Vec<(usize, usize)>, out: &mut Vec<(usize, usize)>) {
        if items.len() < 2 {
            return;
        }
        let mid = items.len() / 2;
        go(&mut items[..mid], buf, out);
        go(&mut items[mid..], buf, out);
        buf.clear();
        let (mut p, mut q) = (0, mid);
        while p < mid || q < items.len() {
            if q == items.len() || (p < mid && items[p].0 < items[q].0) {
                buf.push(items[p]);
                p += 1;
            } else {
                for left in &items[p..mid] {
                    out.push((left.1, items[q].1));
                }
                buf.push(items[q]);
                q += 1;
            }
        }
        items.copy_from_slice(buf);
    }
    let mut items: Vec<_> = seq.iter().copied().zip(tags.iter().copied()).collect();
    let mut out = Vec::new();
    go(&mut items, &mut Vec::with_capacity(seq.len()), &mut out);
    out
}

/// Arrangement of an extended curve family with its order above all vertices.
#[derive(Clone, Debug)]
pub struct Arrangement {
    curves: Vec<Curve>,
    top_rank: Vec<usize>,
    y_top: f64,
    y_bottom: f64,
}

impl Arrangement {
    pub fn new(f: &CurveFamily) -> Self {
        let (lo, hi) = f.strip;
        let y_top = hi + f.pitch + 1.0;
        let y_bottom = lo - f.pitch - 1.0;
        let curves = f.curves.clone();
        let mut idx: Vec<usize> = (0..curves.len()).collect();
        let xs: Vec<f64> = curves.iter().map(|c| c.abscissa(y_top)).collect();
        idx.sort_by(|&a, &b| xs[a].total_cmp(&xs[b]).then(a.cmp(&b)));
        let mut top_rank = vec![0; curves.len()];
        for (r, &c) in idx.iter().enumerate() {
            top_rank[c] = r;
        }
        Arrangement { curves, top_rank, y_top, y_bottom }
    }

    pub fn len(&self) -> usize {
        self.curves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.curves.is_empty()
    }

    /// Heights strictly above and below every vertex.
    pub fn bounds(&self) -> (f64, f64) {
        (self.y_bottom, self.y_top)
    }

    fn order_at(&self, y: f64) -> Vec<usize> {
        let xs: Vec<f64> = self.curves.iter().map(|c| c.abscissa(y)).collect();
        let mut idx: Vec<usize> = (0..self.curves.len()).collect();
        idx.sort_by(|&a, &b| xs[a].total_cmp(&xs[b]).then(self.top_rank[a].cmp(&self.top_rank[b])));
        idx
    }

    fn before(&self, a: usize, b: usize, y: f64) -> bool {
        let (xa, xb) = (self.curves[a].abscissa(y), self.curves[b].abscissa(y));
        xa < xb || (xa == xb && self.top_rank[a] < self.top_rank[b])
    }

    /// Number of vertices with ordinate strictly above `y`.
    pub fn count_above(&self, y: f64) -> u64 {
        let seq: Vec<usize> = self.order_at(y).into_iter().map(|c| self.top_rank[c]).collect();
        count_inversions(&seq)
    }

    pub fn total_vertices(&self) -> u64 {
        self.count_above(self.y_bottom)
    }

    /// Height where curves `a` and `b` swap, searched within `[lo, hi]`.
    fn crossing(&self, a: usize, b: usize, mut lo: f64, mut hi: f64) -> Option<f64> {
        let up = self.before(a, b, hi);
        if self.before(a, b, lo) == up {
            return None;
        }
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if self.before(a, b, mid) == up {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        Some(hi)
    }

    /// Ordinates of all vertices in `(lo, hi]`.
    pub fn vertices_between(&self, lo: f64, hi: f64) -> Vec<f64> {
        let upper = self.order_at(hi);
        let lower = self.order_at(lo);
        let mut rank_lo = vec![0; self.len()];
        for (r, &c) in lower.iter().enumerate() {
            rank_lo[c] = r;
        }
        let seq: Vec<usize> = upper.iter().map(|&c| rank_lo[c]).collect();
        inversion_pairs(&seq, &upper)
            .into_iter()
            .filter_map(|(a, b)| self.crossing(a, b, lo, hi))
            .collect()
    }

    /// Ordinate of the `k`-th highest vertex, counting from 1.
    pub fn kth_highest(&self, k: u64, rng: &mut impl Rng) -> Result<f64, OptError> {
        let total = self.total_vertices();
        if k == 0 || k > total {
            return Err(OptError::RankOutOfRange { k, total });
        }
        const SAMPLES: usize = 24;
        let limit = (4 * self.len() as u64).max(256);
        let (mut ya, mut ca) = (self.y_bottom, total);
        let (mut yb, mut cb) = (self.y_top, 0u64);
        let ids: Vec<usize> = (0..self.len()).collect();
        for _ in 0..256 {
            if ca - cb <= limit {
                break;
            }
            let mut samples: Vec<f64> = (0..SAMPLES)
                .filter_map(|_| {
                    let pair: Vec<_> = ids.choose_multiple(rng, 2).copied().collect();
                    self.crossing(pair[0], pair[1], ya, yb)
                })
                .filter(|&y| y > ya && y < yb)
                .collect();
            let mut pivot = 0.5 * (ya + yb);
            if samples.len() >= 2 {
                samples.sort_by(|a, b| b.total_cmp(a));
                let frac = (k - cb) as f64 / (ca - cb) as f64;
                let pos = ((frac * samples.len() as f64) as usize).min(samples.len() - 1);
                pivot = samples[pos];
            }
            if !(pivot > ya && pivot < yb) {
                break;
            }
            let c = self.count_above(pivot);
            if c >= k {
                ya = pivot;
                ca = c;
            } else {
                yb = pivot;
                cb = c;
            }
        }
        let mut ords = self.vertices_between(ya, yb);
        ords.sort_by(|a, b| b.total_cmp(a));
        let pos = (k - cb - 1) as usize;
        Ok(ords.get(pos).copied().unwrap_or_else(|| *ords.last().expect("window holds the rank")))
    }
}

pub fn count_vertices_above(f: &CurveFamily, y: f64) -> u64 {
    Arrangement::new(f).count_above(y)
}

pub fn kth_highest_vertex(f: &CurveFamily, k: u64, seed: u64) -> Result<f64, OptError> {
    Arrangement::new(f).kth_highest(k, &mut ChaCha8Rng::seed_from_u64(seed))
}

#[derive(Clone, Debug, PartialEq)]
pub struct MinmaxSolution {
    pub lambda_c: f64,
    pub witness: FeasibilityWitness,
}

pub fn compute_lambda_c(inst: &Instance) -> MinmaxSolution {
    compute_lambda_c_seeded(inst, DEFAULT_SEED)
}

/// Optimal bottleneck distance; `seed` drives the pivot sampler only.
pub fn compute_lambda_c_seeded(inst: &Instance, seed: u64) -> MinmaxSolution {
    let floor = trivial_lower_bound(inst);
    let w = feasible(inst, floor);
    if w.feasible {
        return MinmaxSolution { lambda_c: floor, witness: w };
    }
    let arrays = distance_arrays(inst);
    let (below, above) = search_sorted_arrays(&arrays, |x| feasible(inst, x).feasible)
        .expect("the largest aligned distance is always feasible");
    let lo = below.max(floor);
    let family = extend_pseudolines(build_curve_family(inst, (lo, above)));
    let arr = Arrangement::new(&family);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // Ranks of the vertices in (lo, above]; feasibility holds for a prefix of ranks.
    let (mut a, mut b) = (arr.count_above(above) + 1, arr.count_above(lo));
    let mut best = above;
    while a <= b {
        let mid = a + (b - a) / 2;
        let y = arr.kth_highest(mid, &mut rng).expect("rank within range");
        if y > lo && y <= above && feasible(inst, y).feasible {
            best = best.min(y);
            a = mid + 1;
        } else {
            if mid == 0 {
                break;
            }
            b = mid - 1;
        }
    }
    MinmaxSolution { lambda_c: best, witness: feasible(inst, best) }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{pitch, Sensor};

    #[test]
    fn lower_bound_examples() {
        let on = Instance::from_points(&[(1.0, 0.0), (0.0, -1.0)]).unwrap();
        assert_eq!(trivial_lower_bound(&on), 0.0);
        assert_eq!(trivial_lower_bound(&Instance::from_points(&[(0.0, 0.0)]).unwrap()), 1.0);
        let mixed = Instance::new(vec![Sensor::from_polar(0.2, 1.0), Sensor::from_polar(0.7, 2.0)]).unwrap();
        assert!((trivial_lower_bound(&mixed) - 0.8).abs() < 1e-15);
    }

    #[test]
    fn array_search_examples() {
        let arrays = vec![vec![1.0, 3.0, 5.0], vec![2.0, 4.0, 6.0]];
        assert_eq!(search_sorted_arrays(&arrays, |x| x >= 3.5), Ok((3.0, 4.0)));
        let single = vec![(1..=20).map(|v| v as f64).collect::<Vec<_>>()];
        for k in 1..20 {
            assert_eq!(search_sorted_arrays(&single, |x| x >= k as f64 + 0.5), Ok((k as f64, k as f64 + 1.0)));
        }
        assert_eq!(search_sorted_arrays(&single, |_| true), Ok((0.0, 1.0)));
        assert_eq!(search_sorted_arrays(&single, |_| false), Err(OptError::NoFeasibleElement));
    }

    #[test]
    fn distance_arrays_cover_all_pairs() {
        let inst = Instance::from_points(&[(0.3, 0.4), (-0.9, 0.1), (0.0, 0.0), (0.5, -0.5), (1.0, 0.0)]).unwrap();
        let n = inst.len();
        let arrays = distance_arrays(&inst);
        assert_eq!(arrays.len(), 2 * n);
        let mut seen = vec![vec![false; n]; n];
        for a in &arrays {
            for i in 0..a.size() {
                if i > 0 {
                    assert!(a.at(i - 1) <= a.at(i) + 1e-15);
                }
                let j = a.vertex(i, n);
                assert!(!seen[a.sensor][j]);
                seen[a.sensor][j] = true;
                let direct = inst.sensor(a.sensor).distance_to_angle(-(j as f64) * pitch(n));
                assert!((direct - a.at(i)).abs() < 1e-12);
            }
        }
        assert!(seen.iter().flatten().all(|&b| b));
    }

    #[test]
    fn two_coincident_boundary_sensors() {
        let inst = Instance::from_points(&[(1.0, 0.0), (1.0, 0.0)]).unwrap();
        let f = build_curve_family(&inst, (1.0, 1.9));
        assert_eq!(f.curves.len(), 2);
        assert!(f.curves.iter().all(|c| c.multiplicity == 2));
        let arr = Arrangement::new(&extend_pseudolines(f));
        assert_eq!(arr.total_vertices(), 1);
        let y = arr.kth_highest(1, &mut ChaCha8Rng::seed_from_u64(1)).unwrap();
        assert!((y - 2f64.sqrt()).abs() < 1e-12);
        assert!((compute_lambda_c(&inst).lambda_c - y).abs() < 1e-12);
    }

    #[test]
    fn center_sensor_has_no_curves() {
        let inst = Instance::from_points(&[(0.0, 0.0), (0.5, 0.5)]).unwrap();
        let f = build_curve_family(&inst, (1.0, 1.5));
        assert!(f.curves.iter().all(|c| c.sensor == 1));
        assert!(f.curves.len() <= 2);
    }

    #[test]
    fn abscissa_inverts_value() {
        let inst = Instance::from_points(&[(0.3, 0.6), (-0.8, -0.1), (0.1, -0.2)]).unwrap();
        let f = build_curve_family(&inst, (0.9, 1.6));
        for c in &f.curves {
            for k in 0..=10 {
                let t = c.t0 + (c.t1 - c.t0) * k as f64 / 10.0;
                let y = c.value(t);
                assert!((c.abscissa(y) - t).abs() < 1e-7, "{c:?} at {t}");
            }
            assert!(c.abscissa(c.y0.min(c.y1) - 1.0).is_finite());
        }
    }

    #[test]
    fn inversion_helpers() {
        assert_eq!(count_inversions(&[2, 0, 1]), 2);
        assert_eq!(count_inversions(&[0, 1, 2, 3]), 0);
        let mut pairs = inversion_pairs(&[3, 1, 2, 0], &[10, 11, 12, 13]);
        pairs.sort();
        assert_eq!(pairs, vec![(10, 11), (10, 12), (10, 13), (11, 13), (12, 13)]);
    }

    #[test]
    fn rank_queries() {
        assert_eq!(
            Arrangement::new(&CurveFamily { curves: vec![], strip: (0.0, 1.0), pitch: 1.0, extended: true })
                .kth_highest(1, &mut ChaCha8Rng::seed_from_u64(0)),
            Err(OptError::RankOutOfRange { k: 1, total: 0 })
        );
    }

    #[test]
    fn closed_forms() {
        let one = Instance::from_points(&[(0.5, 0.0)]).unwrap();
        let s = compute_lambda_c(&one);
        assert_eq!(s.lambda_c, 0.5);
        assert!(s.witness.feasible);
        let square = Instance::new((0..4).map(|j| Sensor::on_circle(0.2 - j as f64 * pitch(4))).collect()).unwrap();
        assert_eq!(compute_lambda_c(&square).lambda_c, 0.0);
    }
}
