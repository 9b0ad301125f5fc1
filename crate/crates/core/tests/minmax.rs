use pgcover::decision::feasible;
use pgcover::geom::{Instance, Sensor};
use pgcover::oracles::{brute_feasible, brute_lambda_c};
use pgcover::optimize::{
    build_curve_family, compute_lambda_c, compute_lambda_c_seeded, distance_arrays, extend_pseudolines,
    search_sorted_arrays, Arrangement, Curve, Direction, SortedArray,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_instance(rng: &mut ChaCha8Rng, n: usize) -> Instance {
    let pts = (0..n)
        .map(|_| {
            let r = match rng.gen_range(0..4) {
                0 => 1.0,
                _ => rng.gen_range(0.0f64..1.0).sqrt(),
            };
            Sensor::from_polar(r, rng.gen_range(0.0..std::f64::consts::TAU))
        })
        .collect();
    Instance::new(pts).unwrap()
}

#[test]
fn decision_agrees_with_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for _ in 0..60 {
        let n = rng.gen_range(1..=12);
        let inst = random_instance(&mut rng, n);
        for _ in 0..5 {
            let lambda = rng.gen_range(0.0..2.0);
            let w = feasible(&inst, lambda);
            assert_eq!(w.feasible, brute_feasible(&inst, lambda), "n {n} lambda {lambda} {inst:?}");
            if w.feasible {
                assert!(w.max_move.unwrap() <= lambda + 1e-9);
            }
        }
    }
}

#[test]
fn decision_is_monotone() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for _ in 0..100 {
        let n = rng.gen_range(1..=30);
        let inst = random_instance(&mut rng, n);
        let a = rng.gen_range(0.0..2.0);
        let b = rng.gen_range(a..2.0);
        if feasible(&inst, a).feasible {
            assert!(feasible(&inst, b).feasible);
        }
    }
}

#[test]
fn optimum_agrees_with_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(43);
    for _ in 0..40 {
        let n = rng.gen_range(1..=8);
        let inst = random_instance(&mut rng, n);
        let fast = compute_lambda_c(&inst);
        let slow = brute_lambda_c(&inst);
        assert!((fast.lambda_c - slow).abs() < 1e-9, "fast {} slow {slow} {inst:?}", fast.lambda_c);
        assert!(fast.witness.feasible);
        assert!((fast.witness.max_move.unwrap() - fast.lambda_c).abs() < 1e-9);
        assert!(!feasible(&inst, fast.lambda_c * (1.0 - 1e-6) - 1e-12).feasible);
    }
}

#[test]
fn optimum_independent_of_seed() {
    let mut rng = ChaCha8Rng::seed_from_u64(44);
    for _ in 0..5 {
        let inst = random_instance(&mut rng, 60);
        let a = compute_lambda_c_seeded(&inst, 1).lambda_c;
        let b = compute_lambda_c_seeded(&inst, 2).lambda_c;
        assert!((a - b).abs() < 1e-12);
    }
}

#[test]
fn array_search_matches_full_sort() {
    let mut rng = ChaCha8Rng::seed_from_u64(45);
    for _ in 0..200 {
        let n = rng.gen_range(1..=15);
        let inst = random_instance(&mut rng, n);
        let arrays = distance_arrays(&inst);
        let mut all: Vec<f64> = arrays.iter().flat_map(|a| (0..a.size()).map(move |i| a.at(i))).collect();
        all.sort_by(f64::total_cmp);
        assert_eq!(all.len(), n * n);
        let threshold = rng.gen_range(0.0..all[all.len() - 1]);
        let got = search_sorted_arrays(&arrays, |x| x >= threshold).unwrap();
        let above = *all.iter().find(|&&v| v >= threshold).unwrap();
        let below = all.iter().rev().find(|&&v| v < threshold).copied().unwrap_or(0.0);
        assert_eq!(got, (below, above));
    }
}

/// Every pairwise crossing height, found by bisecting each pair's abscissa difference.
fn pairwise_ordinates(curves: &[Curve], lo: f64, hi: f64) -> Vec<f64> {
    let mut out = Vec::new();
    for i in 0..curves.len() {
        for j in i + 1..curves.len() {
            let d = |y: f64| curves[i].abscissa(y) - curves[j].abscissa(y);
            let (mut a, mut b) = (lo, hi);
            let da = d(a);
            if da * d(b) >= 0.0 {
                continue;
            }
            for _ in 0..200 {
                let m = 0.5 * (a + b);
                if d(m) * da > 0.0 {
                    a = m;
                } else {
                    b = m;
                }
            }
            out.push(b);
        }
    }
    out
}

#[test]
fn arrangement_counts_match_pairwise_crossings() {
    let mut rng = ChaCha8Rng::seed_from_u64(46);
    for _ in 0..40 {
        let n = rng.gen_range(2..=30);
        let inst = random_instance(&mut rng, n);
        let lo = rng.gen_range(0.0..1.0f64).max(pgcover::optimize::trivial_lower_bound(&inst));
        let hi = rng.gen_range(lo..2.0);
        let fam = build_curve_family(&inst, (lo, hi));
        assert!(fam.curves.len() <= 2 * n);
        for c in &fam.curves {
            let (a, b) = (c.value(c.t0), c.value(c.t1));
            match c.direction {
                Direction::Increasing => assert!(a <= b),
                Direction::Decreasing => assert!(a >= b),
            }
            assert!(a >= lo - 1e-9 && a <= hi + 1e-9 && b >= lo - 1e-9 && b <= hi + 1e-9);
        }
        let fam = extend_pseudolines(fam);
        let arr = Arrangement::new(&fam);
        let curves = &fam.curves;
        // Independent crossing count: sign changes of the abscissa difference on a fine grid.
        let (yb, yt) = arr.bounds();
        let grid: Vec<f64> = (0..=4000).map(|k| yb + (yt - yb) * k as f64 / 4000.0).collect();
        let mut ords = Vec::new();
        for i in 0..curves.len() {
            for j in i + 1..curves.len() {
                let d: Vec<f64> = grid.iter().map(|&y| curves[i].abscissa(y) - curves[j].abscissa(y)).collect();
                let changes = d.windows(2).filter(|w| w[0] * w[1] < 0.0).count();
                assert!(changes <= 1, "pseudolines cross at most once");
                for (k, w) in d.windows(2).enumerate() {
                    if w[0] * w[1] < 0.0 {
                        ords.push(grid[k]);
                    }
                }
            }
        }
        let total = arr.total_vertices();
        let mut all = pairwise_ordinates(curves, yb, yt);
        assert_eq!(total as usize, all.len());
        assert!(ords.len() as u64 <= total);
        let mut prev = u64::MAX;
        for y in &grid[..] {
            let c = arr.count_above(*y);
            assert!(c <= prev);
            prev = c;
        }
        all.sort_by(|a, b| b.total_cmp(a));
        let mut r = ChaCha8Rng::seed_from_u64(7);
        for k in 1..=total {
            let y = arr.kth_highest(k, &mut r).unwrap();
            assert!((y - all[(k - 1) as usize]).abs() < 1e-9);
        }
    }
}
