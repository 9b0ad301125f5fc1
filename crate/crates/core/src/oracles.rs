//! Slow reference implementations used to cross-check the fast algorithms.
//!
//! Nothing here depends on the matching, decision or optimization modules; only the
//! chord geometry in [`crate::geom`] is shared.

use thiserror::Error;

use crate::geom::{coverage_arc, pitch, CoverageArc, Instance, Placement};

/// Distance slack used when an oracle builds an explicit threshold graph.
pub const ORACLE_DIST_TOL: f64 = 1e-9;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("edge ({0}, {1}) is out of range")]
    OutOfRange(usize, usize),
    #[error("edge ({0}, {1}) appears twice")]
    DuplicateEdge(usize, usize),
}

/// Bipartite graph with an explicit edge list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExplicitBipartiteGraph {
    n1: usize,
    n2: usize,
    adj: Vec<Vec<usize>>,
}

impl ExplicitBipartiteGraph {
    pub fn new(n1: usize, n2: usize, edges: &[(usize, usize)]) -> Result<Self, OracleError> {
        let mut adj = vec![Vec::new(); n1];
        for &(u, v) in edges {
            if u >= n1 || v >= n2 {
                return Err(OracleError::OutOfRange(u, v));
            }
            if adj[u].contains(&v) {
                return Err(OracleError::DuplicateEdge(u, v));
            }
            adj[u].push(v);
        }
        Ok(ExplicitBipartiteGraph { n1, n2, adj })
    }

    /// Graph given by a predicate over all `n1 × n2` pairs.
    pub fn from_fn(n1: usize, n2: usize, edge: impl Fn(usize, usize) -> bool) -> Self {
        let adj = (0..n1).map(|u| (0..n2).filter(|&v| edge(u, v)).collect()).collect();
        ExplicitBipartiteGraph { n1, n2, adj }
    }

    pub fn n1(&self) -> usize {
        self.n1
    }

    pub fn n2(&self) -> usize {
        self.n2
    }

    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adj[u]
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, vs)| vs.iter().map(move |&v| (u, v)))
    }
}

/// Maximum matching size by repeated augmenting-path search.
pub fn max_matching_generic(g: &ExplicitBipartiteGraph) -> usize {
    fn augment(g: &ExplicitBipartiteGraph, u: usize, seen: &mut [bool], owner: &mut [usize]) -> bool {
        for &v in g.neighbors(u) {
            if !seen[v] {
                seen[v] = true;
                if owner[v] == usize::MAX || augment(g, owner[v], seen, owner) {
                    owner[v] = u;
                    return true;
                }
            }
        }
        false
    }
    let mut owner = vec![usize::MAX; g.n2];
    let mut size = 0;
    for u in 0..g.n1 {
        let mut seen = vec![false; g.n2];
        if augment(g, u, &mut seen, &mut owner) {
            size += 1;
        }
    }
    size
}

/// Minimum-cost perfect assignment of a square matrix; `assignment[row] = column`.
pub fn hungarian_min_weight(costs: &[Vec<f64>]) -> (Vec<usize>, f64) {
    let n = costs.len();
    if n == 0 {
        return (Vec::new(), 0.0);
    }
    // Potentials over rows (u) and columns (v), 1-based with column 0 as a sentinel.
    let mut u = vec![0.0; n + 1];
    let mut v = vec![0.0; n + 1];
    let mut p = vec![0usize; n + 1];
    let mut way = vec![0usize; n + 1];
    let mut minv = vec![0.0; n + 1];
    let mut used = vec![false; n + 1];
    for i in 1..=n {
        p[0] = i;
        let mut j0 = 0;
        minv.fill(f64::INFINITY);
        used.fill(false);
        loop {
            used[j0] = true;
            let i0 = p[j0];
            let row = &costs[i0 - 1];
            let mut delta = f64::INFINITY;
            let mut j1 = 0;
            for j in 1..=n {
                if !used[j] {
                    let cur = row[j - 1] - u[i0] - v[j];
                    if cur < minv[j] {
                        minv[j] = cur;
                        way[j] = j0;
                    }
                    if minv[j] < delta {
                        delta = minv[j];
                        j1 = j;
                    }
                }
            }
            for j in 0..=n {
                if used[j] {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
            if p[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }
    let mut assignment = vec![0; n];
    for j in 1..=n {
        assignment[p[j] - 1] = j - 1;
    }
    let total = assignment.iter().enumerate().map(|(i, &j)| costs[i][j]).sum();
    (assignment, total)
}

fn distance_matrix(inst: &Instance, p: &Placement) -> Vec<Vec<f64>> {
    let angles: Vec<f64> = (0..inst.len()).map(|j| p.vertex_angle(j)).collect();
    inst.sensors().iter().map(|s| angles.iter().map(|&a| s.distance_to_angle(a)).collect()).collect()
}

/// Smallest achievable maximum distance at a fixed placement.
pub fn bottleneck_assignment(inst: &Instance, p: &Placement) -> f64 {
    let n = inst.len();
    let d = distance_matrix(inst, p);
    let mut values: Vec<f64> = d.iter().flatten().copied().collect();
    values.sort_by(f64::total_cmp);
    values.dedup();
    let (mut lo, mut hi) = (0, values.len() - 1);
    while lo < hi {
        let mid = (lo + hi) / 2;
        let g = ExplicitBipartiteGraph::from_fn(n, n, |i, j| d[i][j] <= values[mid]);
        if max_matching_generic(&g) == n {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    values[lo]
}

/// Perfect matching exists when the polygon, rotated clockwise by `tau`, is used.
fn perfect_at(inst: &Instance, lambda: f64, tau: f64) -> bool {
    let n = inst.len();
    let h = pitch(n);
    let g = ExplicitBipartiteGraph::from_fn(n, n, |i, j| {
        inst.sensor(i).distance_to_angle(-(j as f64) * h - tau) <= lambda + ORACLE_DIST_TOL
    });
    max_matching_generic(&g) == n
}

/// Exact answer to "is some rotation within `lambda`?" by testing every moment at
/// which an edge can appear or vanish and every gap between such moments.
pub fn brute_feasible(inst: &Instance, lambda: f64) -> bool {
    if lambda < 0.0 {
        return false;
    }
    let h = inst.pitch();
    let mut times = vec![0.0, h];
    for s in inst.sensors() {
        if let CoverageArc::Arc { center, half_width } = coverage_arc(s, lambda) {
            for a in [center - half_width, center + half_width] {
                times.push((-a).rem_euclid(h).min(h));
            }
        }
    }
    times.sort_by(f64::total_cmp);
    times.dedup();
    let mids: Vec<f64> = times.windows(2).map(|w| 0.5 * (w[0] + w[1])).collect();
    times.iter().chain(&mids).any(|&tau| perfect_at(inst, lambda, tau))
}

/// Monotone piece of one sensor-to-vertex distance over a sub-interval of the pitch.
#[derive(Clone, Copy, Debug)]
struct Piece {
    sensor: usize,
    vertex: usize,
    t0: f64,
    t1: f64,
}

fn piece_value(inst: &Instance, p: &Piece, tau: f64) -> f64 {
    let h = inst.pitch();
    inst.sensor(p.sensor).distance_to_angle(-(p.vertex as f64) * h - tau)
}

fn distance_pieces(inst: &Instance) -> Vec<Piece> {
    let n = inst.len();
    let h = inst.pitch();
    let mut out = Vec::new();
    for (i, s) in inst.sensors().iter().enumerate() {
        for j in 0..n {
            // Extremes where the vertex passes the nearest or farthest boundary point.
            let mut cuts = vec![0.0, h];
            for target in [s.beta, s.beta + std::f64::consts::PI] {
                let mut tau = (-(j as f64) * h - target).rem_euclid(std::f64::consts::TAU);
                while tau <= h {
                    if tau > 0.0 && tau < h {
                        cuts.push(tau);
                    }
                    tau += std::f64::consts::TAU;
                }
            }
            cuts.sort_by(f64::total_cmp);
            for w in cuts.windows(2) {
                if w[1] > w[0] {
                    out.push(Piece { sensor: i, vertex: j, t0: w[0], t1: w[1] });
                }
            }
        }
    }
    out
}

/// All abscissae in `[a, b]` where two distance pieces take equal values.
fn piece_crossings(inst: &Instance, p: &Piece, q: &Piece, out: &mut Vec<f64>) {
    const SAMPLES: usize = 48;
    let a = p.t0.max(q.t0);
    let b = p.t1.min(q.t1);
    if b < a {
        return;
    }
    let diff = |t: f64| piece_value(inst, p, t) - piece_value(inst, q, t);
    let ts: Vec<f64> = (0..=SAMPLES).map(|k| a + (b - a) * k as f64 / SAMPLES as f64).collect();
    let ds: Vec<f64> = ts.iter().map(|&t| diff(t)).collect();
    if ds.iter().all(|d| d.abs() < 1e-14) {
        // identical curves cross everywhere and never define the optimum alone
        return;
    }
    for k in 0..SAMPLES {
        let (mut lo, mut hi) = (ts[k], ts[k + 1]);
        let (dlo, dhi) = (ds[k], ds[k + 1]);
        if dlo == 0.0 {
            out.push(piece_value(inst, p, lo));
        }
        if dlo.signum() * dhi.signum() < 0.0 {
            for _ in 0..200 {
                let mid = 0.5 * (lo + hi);
                if mid <= lo || mid >= hi {
                    break;
                }
                if diff(mid).signum() == dlo.signum() {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            out.push(piece_value(inst, p, lo));
            out.push(piece_value(inst, p, hi));
        }
    }
    if ds[SAMPLES] == 0.0 {
        out.push(piece_value(inst, p, b));
    }
}

/// Optimal bottleneck value over all rotations, found among every value at which
/// two distance curves meet, every nearest-boundary distance and every aligned
/// distance. Meant for `n <= 12`.
pub fn brute_lambda_c(inst: &Instance) -> f64 {
    let n = inst.len();
    let floor = inst.sensors().iter().map(|s| 1.0 - s.r).fold(0.0, f64::max);
    let mut cands = vec![floor];
    let aligned = Placement::new(n, 0.0);
    for s in inst.sensors() {
        for j in 0..n {
            cands.push(s.distance_to_angle(aligned.vertex_angle(j)));
        }
    }
    let pieces = distance_pieces(inst);
    for (k, p) in pieces.iter().enumerate() {
        for q in &pieces[k + 1..] {
            piece_crossings(inst, p, q, &mut cands);
        }
    }
    cands.retain(|&c| c >= floor);
    cands.sort_by(f64::total_cmp);
    cands.dedup();
    let (mut lo, mut hi) = (0, cands.len() - 1);
    while lo < hi {
        let mid = (lo + hi) / 2;
        if brute_feasible(inst, cands[mid]) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    cands[lo]
}

/// Best total distance over `m` evenly spaced rotations of the polygon.
pub fn grid_minsum_upper(inst: &Instance, m: usize) -> f64 {
    assert!(m >= 1, "grid needs at least one placement");
    let h = inst.pitch();
    let n = inst.len();
    let mut costs = vec![vec![0.0; n]; n];
    let mut best = f64::INFINITY;
    for k in 0..m {
        let p = Placement::new(n, h * k as f64 / m as f64);
        for (i, s) in inst.sensors().iter().enumerate() {
            for (j, c) in costs[i].iter_mut().enumerate() {
                *c = s.distance_to_angle(p.vertex_angle(j));
            }
        }
        best = best.min(hungarian_min_weight(&costs).1);
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::Sensor;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::collections::VecDeque;

    /// Edmonds-Karp on source → left → right → sink with unit capacities.
    fn max_flow_matching(n1: usize, n2: usize, edges: &[(usize, usize)]) -> usize {
        let nodes = n1 + n2 + 2;
        let (s, t) = (n1 + n2, n1 + n2 + 1);
        let mut cap = vec![vec![0i32; nodes]; nodes];
        cap[s][..n1].fill(1);
        for v in 0..n2 {
            cap[n1 + v][t] = 1;
        }
        for &(u, v) in edges {
            cap[u][n1 + v] = 1;
        }
        let mut flow = 0;
        loop {
            let mut prev = vec![usize::MAX; nodes];
            prev[s] = s;
            let mut q = VecDeque::from([s]);
            while let Some(x) = q.pop_front() {
                for y in 0..nodes {
                    if prev[y] == usize::MAX && cap[x][y] > 0 {
                        prev[y] = x;
                        q.push_back(y);
                    }
                }
            }
            if prev[t] == usize::MAX {
                return flow;
            }
            let mut y = t;
            while y != s {
                let x = prev[y];
                cap[x][y] -= 1;
                cap[y][x] += 1;
                y = x;
            }
            flow += 1;
        }
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for k in 0..=p.len() {
                let mut q = p.clone();
                q.insert(k, n - 1);
                out.push(q);
            }
        }
        out
    }

    #[test]
    fn generic_matching_examples() {
        let full = ExplicitBipartiteGraph::from_fn(3, 3, |_, _| true);
        assert_eq!(max_matching_generic(&full), 3);
        assert_eq!(max_matching_generic(&ExplicitBipartiteGraph::new(3, 3, &[]).unwrap()), 0);
        assert!(ExplicitBipartiteGraph::new(2, 2, &[(0, 1), (0, 1)]).is_err());
        assert!(ExplicitBipartiteGraph::new(2, 2, &[(0, 2)]).is_err());
    }

    #[test]
    fn generic_matching_agrees_with_flow() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..300 {
            let n1 = rng.gen_range(0..9);
            let n2 = rng.gen_range(0..9);
            let p = rng.gen_range(0.05..0.6);
            let edges: Vec<_> =
                (0..n1).flat_map(|u| (0..n2).map(move |v| (u, v))).filter(|_| rng.gen_bool(p)).collect();
            let g = ExplicitBipartiteGraph::new(n1, n2, &edges).unwrap();
            assert_eq!(max_matching_generic(&g), max_flow_matching(n1, n2, &edges));
        }
    }

    #[test]
    fn hungarian_examples() {
        let id: Vec<Vec<f64>> = (0..4).map(|i| (0..4).map(|j| if i == j { 0.0 } else { 1.0 }).collect()).collect();
        assert_eq!(hungarian_min_weight(&id), (vec![0, 1, 2, 3], 0.0));
        let (a, total) = hungarian_min_weight(&[vec![1.0, 2.0], vec![2.0, 4.0]]);
        assert_eq!((a, total), (vec![1, 0], 4.0));
    }

    #[test]
    fn hungarian_agrees_with_enumeration() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for n in 1..=8 {
            let perms = permutations(n);
            for _ in 0..20 {
                let c: Vec<Vec<f64>> = (0..n).map(|_| (0..n).map(|_| rng.gen_range(0.0..10.0)).collect()).collect();
                let best = perms
                    .iter()
                    .map(|p| p.iter().enumerate().map(|(i, &j)| c[i][j]).sum::<f64>())
                    .fold(f64::INFINITY, f64::min);
                let (a, total) = hungarian_min_weight(&c);
                assert!((total - best).abs() < 1e-9);
                let mut cols = a.clone();
                cols.sort();
                assert_eq!(cols, (0..n).collect::<Vec<_>>());
            }
        }
    }

    fn random_instance(rng: &mut ChaCha8Rng, n: usize) -> Instance {
        let pts = (0..n)
            .map(|_| Sensor::from_polar(rng.gen_range(0.0f64..1.0).sqrt(), rng.gen_range(0.0..std::f64::consts::TAU)))
            .collect();
        Instance::new(pts).unwrap()
    }

    #[test]
    fn bottleneck_examples_and_enumeration() {
        let square = Instance::new((0..4).map(|j| Sensor::on_circle(-(j as f64) * pitch(4))).collect()).unwrap();
        assert!(bottleneck_assignment(&square, &Placement::new(4, 0.0)) < 1e-12);
        let one = Instance::from_points(&[(0.3, 0.2)]).unwrap();
        let p = Placement::new(1, 0.4);
        assert_eq!(bottleneck_assignment(&one, &p), one.sensor(0).distance_to_angle(0.4));

        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for n in 1..=6 {
            let perms = permutations(n);
            for _ in 0..10 {
                let inst = random_instance(&mut rng, n);
                let p = Placement::new(n, rng.gen_range(0.0..pitch(n)));
                let d = distance_matrix(&inst, &p);
                let best = perms
                    .iter()
                    .map(|q| q.iter().enumerate().map(|(i, &j)| d[i][j]).fold(0.0, f64::max))
                    .fold(f64::INFINITY, f64::min);
                assert_eq!(bottleneck_assignment(&inst, &p), best);
            }
        }
    }

    #[test]
    fn brute_optimum_closed_forms() {
        let one = Instance::from_points(&[(0.5, 0.0)]).unwrap();
        assert!((brute_lambda_c(&one) - 0.5).abs() < 1e-12);
        let two = Instance::from_points(&[(1.0, 0.0), (1.0, 0.0)]).unwrap();
        assert!((brute_lambda_c(&two) - 2f64.sqrt()).abs() < 1e-9);
        assert!(brute_feasible(&two, 1.415));
        assert!(!brute_feasible(&two, 1.413));
    }

    #[test]
    fn brute_optimum_is_a_threshold() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..15 {
            let n = rng.gen_range(1..=6);
            let inst = random_instance(&mut rng, n);
            let lc = brute_lambda_c(&inst);
            assert!(brute_feasible(&inst, lc));
            assert!(!brute_feasible(&inst, lc - 1e-7));
            // no placement on a fine grid beats the optimum
            let grid = (0..400)
                .map(|k| bottleneck_assignment(&inst, &Placement::new(n, pitch(n) * k as f64 / 400.0)))
                .fold(f64::INFINITY, f64::min);
            assert!(lc <= grid + 1e-12);
            assert!(grid - lc < 0.05);
        }
    }

    #[test]
    fn grid_bound_refines() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..10 {
            let n = rng.gen_range(1..=8);
            let inst = random_instance(&mut rng, n);
            let a = grid_minsum_upper(&inst, 8);
            let b = grid_minsum_upper(&inst, 16);
            let c = grid_minsum_upper(&inst, 160);
            assert!(b <= a && c <= b);
            let lower: f64 = inst.sensors().iter().map(|s| 1.0 - s.r).sum();
            assert!(c >= lower - 1e-12);
        }
    }
}
