//! The work behind each subcommand, kept free of argument parsing.

use std::f64::consts::TAU;
use std::io::Write;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use anyhow::{bail, Result};
use clap::ValueEnum;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use pgcover::decision::feasible;
use pgcover::geom::{Instance, Placement};
use pgcover::minsum::{minsum_approx, minsum_boundary, minsum_lower_bound, BOUNDARY_EPS};
use pgcover::optimize::compute_lambda_c_seeded;
use pgcover::oracles::{brute_feasible, brute_lambda_c, grid_minsum_upper, hungarian_min_weight};

use crate::io::{Bounds, InstanceFile, Problem, SolutionFile};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Dist {
    UniformDisk,
    Boundary,
    Clustered,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MinsumMode {
    Boundary,
    Approx,
}

/// A random instance in the unit disk.
pub fn generate(n: usize, seed: u64, dist: Dist) -> InstanceFile {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let polar = |r: f64, a: f64| [r * a.cos(), r * a.sin()];
    let sensors = match dist {
        Dist::UniformDisk => (0..n).map(|_| polar(rng.gen::<f64>().sqrt(), rng.gen_range(0.0..TAU))).collect(),
        Dist::Boundary => (0..n).map(|_| polar(1.0, rng.gen_range(0.0..TAU))).collect(),
        Dist::Clustered => {
            let centers: Vec<[f64; 2]> =
                (0..1 + n / 32).map(|_| polar(0.8 * rng.gen::<f64>().sqrt(), rng.gen_range(0.0..TAU))).collect();
            (0..n)
                .map(|_| {
                    let c = centers[rng.gen_range(0..centers.len())];
                    loop {
                        let d = polar(0.15 * rng.gen::<f64>().sqrt(), rng.gen_range(0.0..TAU));
                        let p = [c[0] + d[0], c[1] + d[1]];
                        if p[0].hypot(p[1]) <= 1.0 {
                            break p;
                        }
                    }
                })
                .collect()
        }
    };
    InstanceFile { n, center: [0.0, 0.0], radius: 1.0, sensors }
}

fn placement_fields(p: Placement, assignment: Vec<usize>) -> (Option<f64>, Option<Vec<usize>>) {
    (Some(p.offset()), Some(assignment))
}

pub fn decide(file: &InstanceFile, lambda: f64) -> Result<SolutionFile> {
    if !(lambda.is_finite() && lambda >= 0.0) {
        bail!("lambda must be a finite nonnegative number, got {lambda}");
    }
    let inst = file.to_instance()?;
    let w = feasible(&inst, lambda / file.radius);
    let mut sol = SolutionFile {
        problem: Problem::MinmaxDecision,
        objective: lambda,
        feasible: Some(w.feasible),
        placement_offset: None,
        assignment: None,
        bounds: None,
    };
    if let (Some(p), Some(a), Some(m)) = (w.placement, w.assignment, w.max_move) {
        sol.objective = m * file.radius;
        (sol.placement_offset, sol.assignment) = placement_fields(p, a);
    }
    Ok(sol)
}

pub fn optimize(file: &InstanceFile, seed: u64) -> Result<SolutionFile> {
    let inst = file.to_instance()?;
    let s = compute_lambda_c_seeded(&inst, seed);
    let (placement_offset, assignment) = match (s.witness.placement, s.witness.assignment) {
        (Some(p), Some(a)) => placement_fields(p, a),
        _ => bail!("no witness at the computed optimum"),
    };
    Ok(SolutionFile {
        problem: Problem::Minmax,
        objective: s.lambda_c * file.radius,
        feasible: None,
        placement_offset,
        assignment,
        bounds: None,
    })
}

pub fn minsum(file: &InstanceFile, mode: MinsumMode) -> Result<SolutionFile> {
    let inst = file.to_instance()?;
    let (problem, sol, bounds) = match mode {
        MinsumMode::Boundary => (Problem::MinsumBoundary, minsum_boundary(&inst, true)?, None),
        MinsumMode::Approx => {
            let s = minsum_approx(&inst);
            let b = Bounds { lower: minsum_lower_bound(&inst) * file.radius, upper: s.cost * file.radius };
            (Problem::MinsumApprox, s, Some(b))
        }
    };
    let (placement_offset, assignment) = placement_fields(sol.placement, sol.assignment);
    Ok(SolutionFile { problem, objective: sol.cost * file.radius, feasible: None, placement_offset, assignment, bounds })
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub pass: bool,
    pub checks: Vec<Check>,
}

pub struct VerifyOptions {
    /// Largest n for which the exhaustive min-max oracles run.
    pub brute_max_n: usize,
    /// Placements tried by the min-sum grid bound; 0 skips it.
    pub grid: usize,
    pub seed: u64,
}

const VERIFY_TOL: f64 = 1e-9;

fn placement_cost(inst: &Instance, p: &Placement) -> f64 {
    let costs: Vec<Vec<f64>> =
        inst.sensors().iter().map(|s| (0..inst.len()).map(|j| s.distance_to_angle(p.vertex_angle(j))).collect()).collect();
    hungarian_min_weight(&costs).1
}

/// Runs the fast solvers on one instance and compares them with the slow references.
/// All numbers are in unit-disk scale.
pub fn verify(file: &InstanceFile, opts: &VerifyOptions) -> Result<VerifyReport> {
    let inst = file.to_instance()?;
    let n = inst.len();
    let mut checks = Vec::new();
    let mut check = |name: &str, pass: bool, detail: String| checks.push(Check { name: name.into(), pass, detail });

    let opt = compute_lambda_c_seeded(&inst, opts.seed);
    let lc = opt.lambda_c;
    let witness_move = opt.witness.max_move.unwrap_or(f64::NAN);
    check(
        "minmax-witness",
        opt.witness.feasible && (witness_move - lc).abs() <= VERIFY_TOL,
        format!("optimum {lc}, witness moves at most {witness_move}"),
    );
    let below = lc * (1.0 - 1e-6) - 1e-12;
    check("minmax-bracket", !feasible(&inst, below).feasible, format!("infeasible just below the optimum ({below})"));
    if n <= opts.brute_max_n {
        let slow = brute_lambda_c(&inst);
        check("minmax-optimum", (lc - slow).abs() <= VERIFY_TOL, format!("fast {lc}, brute force {slow}"));
        for lambda in [lc * (1.0 - 1e-4), lc * (1.0 + 1e-4), 0.5 * lc, 1.0] {
            let (fast, brute) = (feasible(&inst, lambda).feasible, brute_feasible(&inst, lambda));
            check("minmax-decision", fast == brute, format!("lambda {lambda}: fast {fast}, brute force {brute}"));
        }
    }

    if inst.all_on_boundary(BOUNDARY_EPS) {
        let sol = minsum_boundary(&inst, true)?;
        let best = inst
            .sensors()
            .iter()
            .map(|s| placement_cost(&inst, &Placement::new(n, s.beta)))
            .fold(f64::INFINITY, f64::min);
        check(
            "minsum-boundary",
            (sol.cost - best).abs() <= VERIFY_TOL,
            format!("fast {}, Hungarian over anchors {best}", sol.cost),
        );
    }
    let approx = minsum_approx(&inst).cost;
    let chain = minsum_lower_bound(&inst) + minsum_boundary(&inst.projected(), true)?.cost;
    check("minsum-approx-chain", approx <= chain + 1e-12, format!("approx {approx}, lower + projected optimum {chain}"));
    if opts.grid > 0 {
        let grid = grid_minsum_upper(&inst, opts.grid);
        check(
            "minsum-approx-ratio",
            approx <= 3.0 * grid + 1e-12,
            format!("approx {approx}, grid bound {grid} over {} placements", opts.grid),
        );
    }
    let pass = checks.iter().all(|c| c.pass);
    Ok(VerifyReport { pass, checks })
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchRow {
    pub problem: Problem,
    pub n: usize,
    pub seed: u64,
    pub wall_time_s: f64,
    pub objective: f64,
}

pub struct BenchPlan {
    pub ns: Vec<usize>,
    pub seeds: Vec<u64>,
    pub problems: Vec<Problem>,
    /// Cap for the decision problem.
    pub lambda: f64,
    /// Overrides the default distribution (boundary for the exact min-sum, uniform otherwise).
    pub dist: Option<Dist>,
    pub pivot_seed: u64,
}

fn bench_cell(plan: &BenchPlan, problem: Problem, n: usize, seed: u64) -> Result<BenchRow> {
    let default = if problem == Problem::MinsumBoundary { Dist::Boundary } else { Dist::UniformDisk };
    let file = generate(n, seed, plan.dist.unwrap_or(default));
    let start = Instant::now();
    let sol = match problem {
        Problem::MinmaxDecision => decide(&file, plan.lambda)?,
        Problem::Minmax => optimize(&file, plan.pivot_seed)?,
        Problem::MinsumBoundary => minsum(&file, MinsumMode::Boundary)?,
        Problem::MinsumApprox => minsum(&file, MinsumMode::Approx)?,
    };
    let wall_time_s = start.elapsed().as_secs_f64();
    Ok(BenchRow { problem, n, seed, wall_time_s, objective: sol.objective })
}

/// Runs every (problem, n, seed) cell on up to `threads` workers. Rows come back in
/// plan order.
pub fn bench(plan: &BenchPlan, threads: usize) -> Result<Vec<BenchRow>> {
    let cells: Vec<(Problem, usize, u64)> = plan
        .problems
        .iter()
        .flat_map(|&p| plan.ns.iter().flat_map(move |&n| plan.seeds.iter().map(move |&s| (p, n, s))))
        .collect();
    let next = AtomicUsize::new(0);
    let results: Mutex<Vec<Option<Result<BenchRow>>>> = Mutex::new((0..cells.len()).map(|_| None).collect());
    std::thread::scope(|scope| {
        for _ in 0..threads.clamp(1, cells.len().max(1)) {
            scope.spawn(|| loop {
                let k = next.fetch_add(1, Ordering::Relaxed);
                let Some(&(p, n, s)) = cells.get(k) else { break };
                let row = bench_cell(plan, p, n, s);
                results.lock().expect("no worker panicked")[k] = Some(row);
            });
        }
    });
    results.into_inner().expect("no worker panicked").into_iter().map(|r| r.expect("every cell ran")).collect()
}

pub fn write_csv(rows: &[BenchRow], out: &mut impl Write) -> std::io::Result<()> {
    writeln!(out, "problem,n,seed,wall_time_s,objective")?;
    for r in rows {
        writeln!(out, "{},{},{},{},{}", r.problem.name(), r.n, r.seed, r.wall_time_s, r.objective)?;
    }
    Ok(())
}

/// Worker count for `bench`: `PGCOVER_THREADS` if set, else the available parallelism.
pub fn bench_threads() -> Result<usize> {
    match std::env::var("PGCOVER_THREADS") {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(t) if t >= 1 => Ok(t),
            _ => bail!("PGCOVER_THREADS must be a positive integer, got {v:?}"),
        },
        Err(_) => Ok(std::thread::available_parallelism().map_or(1, |t| t.get())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generated_instances_fit() {
        for dist in [Dist::UniformDisk, Dist::Boundary, Dist::Clustered] {
            let f = generate(40, 3, dist);
            assert_eq!(f.sensors.len(), 40);
            let inst = f.to_instance().unwrap();
            if dist == Dist::Boundary {
                assert!(inst.all_on_boundary(1e-12));
            }
            assert_eq!(generate(40, 3, dist), f);
        }
    }

    #[test]
    fn objectives_scale_with_radius() {
        let unit = InstanceFile { n: 3, center: [0.0, 0.0], radius: 1.0, sensors: vec![[0.5, 0.0], [0.0, 0.2], [-0.3, -0.3]] };
        let big = InstanceFile {
            n: 3,
            center: [10.0, -4.0],
            radius: 3.0,
            sensors: unit.sensors.iter().map(|p| [10.0 + 3.0 * p[0], -4.0 + 3.0 * p[1]]).collect(),
        };
        let (a, b) = (optimize(&unit, 1).unwrap(), optimize(&big, 1).unwrap());
        assert!((3.0 * a.objective - b.objective).abs() < 1e-12);
        let moves = big.moves(b.placement_offset.unwrap(), b.assignment.as_ref().unwrap());
        assert!((moves.iter().cloned().fold(0.0, f64::max) - b.objective).abs() < 1e-9);
        let m = minsum(&big, MinsumMode::Approx).unwrap();
        let total: f64 = big.moves(m.placement_offset.unwrap(), m.assignment.as_ref().unwrap()).iter().sum();
        assert!((total - m.objective).abs() < 1e-9);
        assert!(m.bounds.unwrap().lower <= m.objective);
    }

    #[test]
    fn decide_reports_witness() {
        let f = generate(6, 9, Dist::UniformDisk);
        let opt = optimize(&f, 0).unwrap().objective;
        let yes = decide(&f, opt * 1.01).unwrap();
        assert_eq!(yes.feasible, Some(true));
        assert!(yes.objective <= opt * 1.01 + 1e-9);
        let no = decide(&f, opt * 0.99).unwrap();
        assert_eq!(no.feasible, Some(false));
        assert!(no.assignment.is_none());
        assert!(decide(&f, -1.0).is_err());
    }

    #[test]
    fn bench_rows_follow_plan_order() {
        let plan = BenchPlan {
            ns: vec![4, 8],
            seeds: vec![1, 2],
            problems: vec![Problem::Minmax, Problem::MinsumBoundary],
            lambda: 1.0,
            dist: None,
            pivot_seed: 0,
        };
        let rows = bench(&plan, 3).unwrap();
        let keys: Vec<(Problem, usize, u64)> = rows.iter().map(|r| (r.problem, r.n, r.seed)).collect();
        assert_eq!(keys[0], (Problem::Minmax, 4, 1));
        assert_eq!(keys[7], (Problem::MinsumBoundary, 8, 2));
        let mut csv = Vec::new();
        write_csv(&rows, &mut csv).unwrap();
        assert_eq!(String::from_utf8(csv).unwrap().lines().count(), 9);
    }
}
