//! Minimum total movement.
//!
//! When every sensor is on the circle, some optimal polygon has a sensor sitting on a
//! vertex, so trying each sensor as that anchor and solving a min-cost matching of
//! points on a circle is exact. For interior sensors, solving the problem for their
//! radial projections gives a 3-approximation.

use thiserror::Error;

use crate::geom::{circle_chord, normalize_angle, Instance, Placement, DIST_EPS};

/// Angles closer than this count as the same point.
pub const COINCIDENT_EPS: f64 = 1e-12;
/// Sensors with radius at least `1 - BOUNDARY_EPS` count as on the circle.
pub const BOUNDARY_EPS: f64 = 1e-9;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum MinsumError {
    #[error("point sets differ in size ({red} vs {blue})")]
    SizeMismatch { red: usize, blue: usize },
    #[error("point sets are empty")]
    Empty,
    #[error("sensor {index} is not on the circle (r = {r})")]
    OffBoundary { index: usize, r: f64 },
}

/// Points on the unit circle given by angle, kept in angular order.
#[derive(Clone, Debug, PartialEq)]
pub struct CirclePointSet {
    /// `(angle, original index)` sorted by angle, then index.
    points: Vec<(f64, usize)>,
}

impl CirclePointSet {
    pub fn new(angles: &[f64]) -> Self {
        let mut points: Vec<(f64, usize)> = angles.iter().map(|&a| normalize_angle(a)).zip(0..).collect();
        points.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
        CirclePointSet { points }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Angle of the point with original index `i`.
    pub fn angle(&self, i: usize) -> f64 {
        self.points.iter().find(|p| p.1 == i).expect("index in range").0
    }

    pub fn sorted(&self) -> &[(f64, usize)] {
        &self.points
    }

    /// Angles in original order.
    pub fn angles(&self) -> Vec<f64> {
        let mut out = vec![0.0; self.len()];
        for &(a, i) in &self.points {
            out[i] = a;
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct WeightedMatchingResult {
    /// `assignment[red index] = blue index`.
    pub assignment: Vec<usize>,
    pub total_cost: f64,
}

#[derive(Clone, Copy, Debug)]
struct Mark {
    angle: f64,
    red: bool,
    index: usize,
}

/// Minimum-cost non-crossing red/blue matching of a sequence read along the circle.
fn interval_dp(seq: &[Mark]) -> Vec<(usize, usize)> {
    let len = seq.len();
    if len == 0 {
        return Vec::new();
    }
    let mut pre = vec![0i64; len + 1];
    for (k, m) in seq.iter().enumerate() {
        pre[k + 1] = pre[k] + if m.red { 1 } else { -1 };
    }
    let at = |i: usize, j: usize| i * len + j;
    let mut dp = vec![f64::INFINITY; len * len];
    let mut choice = vec![u32::MAX; len * len];
    // dp over [i, j]; empty ranges cost nothing
    let get = |dp: &[f64], i: usize, j: usize| if i > j { 0.0 } else { dp[at(i, j)] };
    for span in (2..=len).step_by(2) {
        for i in 0..=len - span {
            let j = i + span - 1;
            if pre[j + 1] != pre[i] {
                continue;
            }
            let mut best = f64::INFINITY;
            let mut arg = u32::MAX;
            for k in (i + 1..=j).step_by(2) {
                if seq[k].red == seq[i].red || pre[k] != pre[i + 1] {
                    continue;
                }
                let inner = if k > i + 1 { get(&dp, i + 1, k - 1) } else { 0.0 };
                let outer = if k < j { get(&dp, k + 1, j) } else { 0.0 };
                let c = circle_chord(seq[i].angle, seq[k].angle) + inner + outer;
                if c < best {
                    best = c;
                    arg = k as u32;
                }
            }
            dp[at(i, j)] = best;
            choice[at(i, j)] = arg;
        }
    }
    let mut pairs = Vec::with_capacity(len / 2);
    let mut stack = vec![(0usize, len - 1)];
    while let Some((i, j)) = stack.pop() {
        if i >= j {
            continue;
        }
        let k = choice[at(i, j)] as usize;
        pairs.push((i, k));
        if k > i + 1 {
            stack.push((i + 1, k - 1));
        }
        if k < j {
            stack.push((k + 1, j));
        }
    }
    pairs
}

/// Minimum total chord length perfect matching between two equal-size point sets on the
/// circle. The returned matching is non-crossing.
pub fn min_weight_circle_matching(
    red: &CirclePointSet,
    blue: &CirclePointSet,
) -> Result<WeightedMatchingResult, MinsumError> {
    if red.len() != blue.len() {
        return Err(MinsumError::SizeMismatch { red: red.len(), blue: blue.len() });
    }
    if red.is_empty() {
        return Err(MinsumError::Empty);
    }
    let mut all: Vec<Mark> = red
        .points
        .iter()
        .map(|&(angle, index)| Mark { angle, red: true, index })
        .chain(blue.points.iter().map(|&(angle, index)| Mark { angle, red: false, index }))
        .collect();
    all.sort_by(|a, b| a.angle.total_cmp(&b.angle).then(b.red.cmp(&a.red)).then(a.index.cmp(&b.index)));

    let mut assignment = vec![usize::MAX; red.len()];
    // Pair coincident red/blue points up front.
    let mut rest = Vec::with_capacity(all.len());
    let mut g = 0;
    while g < all.len() {
        let mut e = g + 1;
        while e < all.len() && all[e].angle - all[g].angle <= COINCIDENT_EPS {
            e += 1;
        }
        let reds: Vec<Mark> = all[g..e].iter().filter(|m| m.red).copied().collect();
        let blues: Vec<Mark> = all[g..e].iter().filter(|m| !m.red).copied().collect();
        let paired = reds.len().min(blues.len());
        for (r, b) in reds.iter().zip(&blues) {
            assignment[r.index] = b.index;
        }
        rest.extend_from_slice(&reds[paired..]);
        rest.extend_from_slice(&blues[paired..]);
        g = e;
    }
    if let Some(first_red) = rest.iter().position(|m| m.red) {
        rest.rotate_left(first_red);
    }
    for (i, k) in interval_dp(&rest) {
        let (a, b) = (rest[i], rest[k]);
        let (r, bl) = if a.red { (a, b) } else { (b, a) };
        assignment[r.index] = bl.index;
    }
    let ra = red.angles();
    let ba = blue.angles();
    let total_cost = assignment.iter().enumerate().map(|(i, &j)| circle_chord(ra[i], ba[j])).sum();
    Ok(WeightedMatchingResult { assignment, total_cost })
}

/// True when no two chords from `red[i]` to `blue[assignment[i]]` cross in their interiors.
pub fn is_non_crossing(red: &[f64], blue: &[f64], assignment: &[usize]) -> bool {
    use std::f64::consts::TAU;
    let chords: Vec<(f64, f64)> =
        assignment.iter().enumerate().map(|(i, &j)| (normalize_angle(red[i]), normalize_angle(blue[j]))).collect();
    let same = |x: f64, y: f64| {
        let d = (x - y).rem_euclid(TAU);
        d <= COINCIDENT_EPS || d >= TAU - COINCIDENT_EPS
    };
    let inside = |x: f64, a: f64, b: f64| {
        let (dx, db) = ((x - a).rem_euclid(TAU), (b - a).rem_euclid(TAU));
        dx > 0.0 && dx < db
    };
    for (p, &(a1, b1)) in chords.iter().enumerate() {
        for &(a2, b2) in &chords[p + 1..] {
            if [a2, b2].iter().any(|&x| same(x, a1) || same(x, b1)) || same(a1, b1) || same(a2, b2) {
                continue;
            }
            if inside(a2, a1, b1) != inside(b2, a1, b1) {
                return false;
            }
        }
    }
    true
}

#[derive(Clone, Debug, PartialEq)]
pub struct MinsumSolution {
    pub cost: f64,
    pub placement: Placement,
    /// Vertex index per sensor.
    pub assignment: Vec<usize>,
    /// Sensor whose angle fixed the polygon.
    pub anchor: usize,
}

/// Exact minimum total movement for sensors on the circle. With `require_boundary` off,
/// interior sensors are replaced by their radial projections.
pub fn minsum_boundary(inst: &Instance, require_boundary: bool) -> Result<MinsumSolution, MinsumError> {
    if require_boundary {
        if let Some((index, s)) = inst.sensors().iter().enumerate().find(|(_, s)| s.r < 1.0 - BOUNDARY_EPS) {
            return Err(MinsumError::OffBoundary { index, r: s.r });
        }
    }
    let n = inst.len();
    let red = CirclePointSet::new(&inst.sensors().iter().map(|s| s.beta).collect::<Vec<_>>());
    let mut best: Option<MinsumSolution> = None;
    for (anchor, s) in inst.sensors().iter().enumerate() {
        let placement = Placement::new(n, s.beta);
        let blue = CirclePointSet::new(&(0..n).map(|j| placement.vertex_angle(j)).collect::<Vec<_>>());
        let m = min_weight_circle_matching(&red, &blue)?;
        if best.as_ref().is_none_or(|b| m.total_cost < b.cost - DIST_EPS) {
            best = Some(MinsumSolution { cost: m.total_cost, placement, assignment: m.assignment, anchor });
        }
    }
    Ok(best.expect("instances are nonempty"))
}

/// Moves each sensor to the vertex its projection gets in the boundary solution.
/// `cost` is the true total distance.
pub fn minsum_approx(inst: &Instance) -> MinsumSolution {
    let mut sol = minsum_boundary(inst, false).expect("projected sensors are on the circle");
    sol.cost = inst
        .sensors()
        .iter()
        .zip(&sol.assignment)
        .map(|(s, &j)| s.distance_to_angle(sol.placement.vertex_angle(j)))
        .sum();
    sol
}

/// Total distance of all sensors to the circle.
pub fn minsum_lower_bound(inst: &Instance) -> f64 {
    inst.sensors().iter().map(|s| 1.0 - s.r).sum()
}
