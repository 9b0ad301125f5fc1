//! Is there a rotation of the polygon that lets every sensor reach a distinct vertex
//! within distance λ?
//!
//! The polygon turns clockwise through one pitch. At sweep time `tau` vertex `j` sits at
//! angle `-j·h - tau`. Each sensor covers a circular run of vertex indices; during the
//! sweep the run gains one vertex at its front and loses one at its back. Replaying those
//! changes through a dynamic circular matching finds a moment with a perfect matching
//! whenever one exists.

use crate::dynamic::DynamicCircularMatching;
use crate::geom::{coverage_arc, CoverageArc, Instance, Placement, Sensor, ANGLE_EPS};
use crate::matching::{CircularGraph, IntervalVertex, Span, VertexId};

/// Events closer than this in sweep time are treated as simultaneous.
pub const TIME_EPS: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum EventKind {
    Add,
    Remove,
}

/// A covered run of vertices changes for one sensor.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Event {
    pub time: f64,
    pub kind: EventKind,
    pub sensor: usize,
    /// Covered run after the event.
    pub span: Option<Span>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct EventSequence {
    /// Coverage at `tau = 0`; vertex ids are sensor indices.
    pub initial: CircularGraph,
    /// Grouped by simultaneous instants. Inside a group, adds come first and every
    /// event carries the group's time.
    pub events: Vec<Event>,
}

/// Outcome of a feasibility query.
#[derive(Clone, Debug, PartialEq)]
pub struct FeasibilityWitness {
    pub feasible: bool,
    pub placement: Option<Placement>,
    /// Vertex index per sensor.
    pub assignment: Option<Vec<usize>>,
    pub max_move: Option<f64>,
}

impl FeasibilityWitness {
    fn infeasible() -> Self {
        FeasibilityWitness { feasible: false, placement: None, assignment: None, max_move: None }
    }

    fn found(inst: &Instance, placement: Placement, assignment: Vec<usize>) -> Self {
        let max_move = inst
            .sensors()
            .iter()
            .zip(&assignment)
            .map(|(s, &j)| s.distance_to_angle(placement.vertex_angle(j)))
            .fold(0.0, f64::max);
        FeasibilityWitness { feasible: true, placement: Some(placement), assignment: Some(assignment), max_move: Some(max_move) }
    }
}

/// Covered run of one sensor at `tau = 0` and the times it grows and shrinks.
#[derive(Clone, Copy, Debug, PartialEq)]
struct Run {
    begin: usize,
    len: usize,
    add: Option<f64>,
    remove: Option<f64>,
}

fn run_span(begin: usize, len: usize, n: usize) -> Option<Span> {
    match len {
        0 => None,
        l => Some(Span::arc(begin, l.min(n), n)),
    }
}

fn sensor_run(s: &Sensor, lambda: f64, n: usize) -> Run {
    let h = crate::geom::pitch(n);
    match coverage_arc(s, lambda) {
        CoverageArc::Empty => Run { begin: 0, len: 0, add: None, remove: None },
        CoverageArc::Full => Run { begin: 0, len: n, add: None, remove: None },
        CoverageArc::Arc { center, half_width } => {
            // Vertex with angle k·h is index (-k) mod n at tau = 0.
            let front = (center + half_width) / h;
            let back = (center - half_width) / h;
            let eps = ANGLE_EPS / h;
            let kmax = (front + eps).floor();
            let kmin = (back - eps).ceil();
            let len = (kmax - kmin + 1.0).max(0.0) as usize;
            let begin = (-(kmax as i64)).rem_euclid(n as i64) as usize;
            let add = ((kmax + 1.0 - front) * h).min(h);
            let remove = ((kmin - back) * h).max(0.0);
            Run { begin, len, add: Some(add), remove: Some(remove) }
        }
    }
}

/// Circular graph of sensor-to-vertex distances `<= lambda` at the unrotated placement.
pub fn build_initial_graph(inst: &Instance, lambda: f64) -> CircularGraph {
    let n = inst.len();
    let vertices = inst
        .sensors()
        .iter()
        .enumerate()
        .map(|(i, s)| {
            let run = sensor_run(s, lambda, n);
            IntervalVertex::with_span(i as VertexId, run_span(run.begin, run.len, n))
        })
        .collect();
    CircularGraph::new(n, vertices).expect("sensor indices are unique")
}

pub fn rotation_events(inst: &Instance, lambda: f64) -> EventSequence {
    let n = inst.len();
    let runs: Vec<Run> = inst.sensors().iter().map(|s| sensor_run(s, lambda, n)).collect();
    let mut raw: Vec<(f64, EventKind, usize)> = Vec::with_capacity(2 * n);
    for (i, r) in runs.iter().enumerate() {
        if let (Some(a), Some(d)) = (r.add, r.remove) {
            raw.push((a, EventKind::Add, i));
            raw.push((d, EventKind::Remove, i));
        }
    }
    raw.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)).then(a.2.cmp(&b.2)));
    let mut ordered = Vec::with_capacity(raw.len());
    let mut start = 0;
    while start < raw.len() {
        let t = raw[start].0;
        let mut end = start;
        while end < raw.len() && raw[end].0 - t <= TIME_EPS {
            end += 1;
        }
        let mut group: Vec<_> = raw[start..end].iter().map(|&(_, k, i)| (k, i)).collect();
        group.sort_unstable();
        ordered.extend(group.into_iter().map(|(k, i)| (t, k, i)));
        start = end;
    }
    let mut state: Vec<(usize, usize)> = runs.iter().map(|r| (r.begin, r.len)).collect();
    let events = ordered
        .into_iter()
        .map(|(time, kind, sensor)| {
            let (b, l) = &mut state[sensor];
            match kind {
                EventKind::Add => {
                    *b = (*b + n - 1) % n;
                    *l += 1;
                }
                EventKind::Remove => *l -= 1,
            }
            Event { time, kind, sensor, span: run_span(*b, *l, n) }
        })
        .collect();
    EventSequence { initial: build_initial_graph(inst, lambda), events }
}

fn exact_polygon(inst: &Instance) -> FeasibilityWitness {
    let n = inst.len();
    let h = inst.pitch();
    if !inst.all_on_boundary(crate::geom::DIST_EPS) {
        return FeasibilityWitness::infeasible();
    }
    let base = inst.sensor(0).beta;
    let (placement, q) = Placement::reduce(n, base);
    let mut used = vec![false; n];
    let mut assignment = Vec::with_capacity(n);
    for s in inst.sensors() {
        let k = (base - s.beta) / h;
        let j = k.round();
        if (k - j).abs() * h > ANGLE_EPS {
            return FeasibilityWitness::infeasible();
        }
        let j = ((j as i64).rem_euclid(n as i64) as usize + q) % n;
        if std::mem::replace(&mut used[j], true) {
            return FeasibilityWitness::infeasible();
        }
        assignment.push(j);
    }
    FeasibilityWitness::found(inst, placement, assignment)
}

/// Decides whether some rotation admits a perfect assignment with every move `<= lambda`
/// and returns the earliest such moment of the sweep.
pub fn feasible(inst: &Instance, lambda: f64) -> FeasibilityWitness {
    let n = inst.len();
    if lambda.is_nan() || lambda < 0.0 {
        return FeasibilityWitness::infeasible();
    }
    if lambda == 0.0 {
        return exact_polygon(inst);
    }
    let h = inst.pitch();
    let seq = rotation_events(inst, lambda);
    let mut dyn_match = DynamicCircularMatching::new(n);
    let mut owner: Vec<usize> = (0..n).collect();
    let mut current: Vec<VertexId> = (0..n as VertexId).collect();
    for v in seq.initial.vertices() {
        dyn_match.insert(v.id, v.span).expect("fresh id");
    }
    let witness = |dm: &DynamicCircularMatching, owner: &[usize], tau: f64| {
        let (placement, q) = Placement::reduce(n, -tau);
        let mut assignment = vec![usize::MAX; n];
        for &(id, j) in dm.matching().pairs() {
            assignment[owner[id as usize]] = (j + q) % n;
        }
        FeasibilityWitness::found(inst, placement, assignment)
    };
    if dyn_match.size() == n {
        return witness(&dyn_match, &owner, 0.0);
    }
    let events = &seq.events;
    for (k, e) in events.iter().enumerate() {
        dyn_match.delete(current[e.sensor]).expect("live id");
        let id = owner.len() as VertexId;
        owner.push(e.sensor);
        current[e.sensor] = id;
        if dyn_match.insert(id, e.span).expect("fresh id") == n {
            // The state lasts until the next instant unless this instant still removes an edge.
            let tau = match events[k + 1..].iter().take_while(|x| x.time == e.time).any(|x| x.kind == EventKind::Remove) {
                true => e.time,
                false => {
                    let next = events[k + 1..].iter().find(|x| x.time > e.time).map_or(h, |x| x.time);
                    0.5 * (e.time + next)
                }
            };
            return witness(&dyn_match, &owner, tau);
        }
    }
    FeasibilityWitness::infeasible()
}
