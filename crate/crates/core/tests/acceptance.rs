//! Acceptance criteria, one `[PASS]`/`[FAIL]` line each.
//! `cargo test -p vsn-kcover --test acceptance` runs just this target.

mod common;

use std::f64::consts::TAU;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::Rng;
use vsn_kcover::exact::enumerate_exhaustive;
use vsn_kcover::geometry::polar_angle;
use vsn_kcover::greedy::benefit;
use vsn_kcover::harness::{run_sweep, summarize, ExperimentConfig, SummaryRow};
use vsn_kcover::metrics::jain_index;
use vsn_kcover::prelude::*;

type Check = std::result::Result<String, String>;

fn ensure(ok: bool, msg: impl Into<String>) -> std::result::Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn worked_metrics() -> Check {
    let fi_a = jain_index(&[3, 3, 1, 1]).map_err(|e| e.to_string())?;
    let fi_b = jain_index(&[2, 2, 2, 2]).map_err(|e| e.to_string())?;
    let bi = |raw: Vec<u32>| balancing_index(&CoverageVector::from_raw(raw, 3).unwrap()).unwrap();
    let (bi_a, bi_b) = (bi(vec![2, 2, 2]), bi(vec![2, 3, 2]));
    ensure((fi_a - 0.8).abs() <= 1e-9, format!("FI(3,3,1,1) = {fi_a}"))?;
    ensure((fi_b - 1.0).abs() <= 1e-9, format!("FI(2,2,2,2) = {fi_b}"))?;
    ensure((bi_a - 0.666667).abs() <= 1e-4, format!("BI(2,2,2) = {bi_a}"))?;
    ensure((bi_b - 0.747253).abs() <= 1e-4, format!("BI(2,3,2) = {bi_b}"))?;
    Ok(format!("FI {fi_a:.6} {fi_b:.6}, BI {bi_a:.6} {bi_b:.6}"))
}

fn incentive_table() -> Check {
    let row = |mode| (0..3).map(|c| benefit(&[0], &[c], 3, mode)).collect::<Vec<_>>();
    let (quad, lin) = (row(BenefitMode::Quadratic), row(BenefitMode::Linear));
    ensure(quad == [5, 3, 1], format!("quadratic {quad:?}"))?;
    ensure(lin == [1, 1, 1], format!("linear {lin:?}"))?;
    Ok(format!("quadratic {quad:?}, linear {lin:?}"))
}

fn exact_matches_enumeration() -> Check {
    let start = Instant::now();
    let mut r = common::rng(20240);
    let kinds = [
        ObjectiveKind::CoverageMax,
        ObjectiveKind::VectorDistance,
        ObjectiveKind::BalancingIndex,
    ];
    let instances = 210;
    for case in 0..instances {
        let (n, m, k, side) = common::random_shape(&mut r);
        let matrix = common::dense_instance(50_000 + case, n, m, side).coverage_matrix();
        let rho = [1e-4, 1e-2, default_rho(n).unwrap()][r.random_range(0..3)];
        for kind in kinds {
            let spec = ObjectiveSpec::new(kind, k, rho).unwrap();
            let sol = solve_exact(&matrix, &spec, SearchBudget::unlimited()).map_err(|e| e.to_string())?;
            let (_, enumerated) = enumerate_exhaustive(&matrix, &spec).map_err(|e| e.to_string())?;
            let brute = common::brute_force_optimum(&matrix, kind, k, rho);
            ensure(
                sol.stats.optimal && sol.report.objective_value == enumerated,
                format!(
                    "case {case} (n={n}, m={m}, k={k}) {kind:?}: {} vs {enumerated}",
                    sol.report.objective_value
                ),
            )?;
            ensure(
                (enumerated - brute).abs() < 1e-9,
                format!("case {case} {kind:?}: enumeration {enumerated} vs {brute}"),
            )?;
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(300), format!("took {elapsed:?}"))?;
    Ok(format!(
        "{instances} instances x 3 objectives agree, {:.1}s",
        elapsed.as_secs_f64()
    ))
}

struct DeskRuns {
    targets: Vec<ResultRow>,
    sensors: Vec<ResultRow>,
    under: Vec<ResultRow>,
}

fn desk_runs() -> vsn_kcover::Result<DeskRuns> {
    let seeds: Vec<u64> = (1..=30).collect();
    let rho = Rho::Fixed(1e-4);
    let mut targets = ExperimentConfig::desk_targets(2, seeds.clone());
    targets.rho = rho;
    let mut sensors = ExperimentConfig::desk_sensors(2, seeds.clone());
    sensors.rho = rho;
    let mut under = ExperimentConfig::desk_targets(3, seeds);
    under.axis = SweepAxis::VaryTargets { n: 6, m_list: vec![12] };
    under.rho = rho;
    Ok(DeskRuns {
        targets: run_sweep(&targets)?,
        sensors: run_sweep(&sensors)?,
        under: run_sweep(&under)?,
    })
}

fn inlp_dominance(runs: &DeskRuns) -> Check {
    let mut compared = 0;
    let mut worst: f64 = f64::INFINITY;
    // Cells are matched within one sweep: each sweep draws its own family, so
    // equal (seed, n, m) in different sweeps are different instances.
    for rows in [&runs.targets, &runs.sensors, &runs.under] {
        for inlp in rows.iter().filter(|r| r.solver == SolverKind::InlpExact) {
            ensure(
                inlp.optimal,
                format!(
                    "INLP not solved to optimality at seed {} n={} m={}",
                    inlp.seed, inlp.n, inlp.m
                ),
            )?;
            for other in rows
                .iter()
                .filter(|r| r.seed == inlp.seed && r.n == inlp.n && r.m == inlp.m && r.solver != inlp.solver)
            {
                let margin = inlp.balancing_index - other.balancing_index;
                worst = worst.min(margin);
                compared += 1;
                ensure(
                    margin >= -1e-3,
                    format!(
                        "seed {} n={} m={}: INLP {} < {} {}",
                        inlp.seed, inlp.n, inlp.m, inlp.balancing_index, other.solver, other.balancing_index
                    ),
                )?;
            }
        }
    }
    Ok(format!("{compared} comparisons, smallest margin {worst:+.6}"))
}

/// Number of adjacent pairs that break the trend.
fn trend_breaks(values: &[f64], increasing: bool) -> usize {
    values
        .windows(2)
        .filter(|w| if increasing { w[1] < w[0] } else { w[1] > w[0] })
        .count()
}

fn trend_curves(summary: &[SummaryRow], along_m: bool, increasing: bool) -> std::result::Result<Vec<String>, String> {
    let mut lines = Vec::new();
    for solver in SolverKind::ALL {
        let mut pts: Vec<(usize, f64)> = summary
            .iter()
            .filter(|s| s.solver == solver)
            .map(|s| (if along_m { s.m } else { s.n }, s.mean_balancing_index))
            .collect();
        pts.sort_by_key(|p| p.0);
        let values: Vec<f64> = pts.iter().map(|p| p.1).collect();
        let breaks = trend_breaks(&values, increasing);
        let shown: Vec<String> = values.iter().map(|v| format!("{v:.3}")).collect();
        ensure(breaks <= 1, format!("{solver}: {} ({breaks} breaks)", shown.join(" ")))?;
        lines.push(format!("{solver} {}", shown.join(">=")));
    }
    Ok(lines)
}

fn regime_trends(runs: &DeskRuns) -> Check {
    let by_m = trend_curves(&summarize(&runs.targets), true, false)?;
    let by_n = trend_curves(&summarize(&runs.sensors), false, true)?;
    Ok(format!(
        "{} curves non-increasing in m, {} non-decreasing in n",
        by_m.len(),
        by_n.len()
    ))
}

fn uncovered_ordering(runs: &DeskRuns) -> Check {
    let summary = summarize(&runs.under);
    let frac = |solver| {
        summary
            .iter()
            .find(|s| s.solver == solver)
            .map(|s| s.mean_uncovered_fraction)
            .ok_or(format!("{solver} missing"))
    };
    let order = [
        SolverKind::InlpExact,
        SolverKind::IqpExact,
        SolverKind::GreedyQuadratic,
        SolverKind::GreedyLinear,
    ];
    let vals = order
        .iter()
        .map(|&s| frac(s))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    for i in 0..3 {
        ensure(
            vals[i] <= vals[i + 1] + 0.02,
            format!("{} {:.4} > {} {:.4}", order[i], vals[i], order[i + 1], vals[i + 1]),
        )?;
    }
    Ok(format!(
        "uncovered inlp {:.3}, iqp {:.3}, greedy-q {:.3}, greedy-l {:.3}",
        vals[0], vals[1], vals[2], vals[3]
    ))
}

fn greedy_invariants() -> Check {
    let start = Instant::now();
    let mut r = common::rng(77);
    for case in 0..1000u64 {
        let n = r.random_range(1..=20);
        let m = r.random_range(1..=40);
        let k = r.random_range(1..=4);
        let side = r.random_range(10.0..120.0);
        let matrix = common::dense_instance(case, n, m, side).coverage_matrix();
        let spec = ObjectiveSpec::new(ObjectiveKind::BalancingIndex, k, 1e-4).unwrap();
        for mode in [BenefitMode::Linear, BenefitMode::Quadratic] {
            let out = solve_greedy(&matrix, &spec, mode).map_err(|e| e.to_string())?;
            ensure(
                out.trace.len() <= n,
                format!("case {case}: {} iterations for n={n}", out.trace.len()),
            )?;
            let mut pairs = Vec::new();
            let mut last = 0u64;
            for step in &out.trace {
                pairs.push((step.sensor, step.pan));
                let recount = coverage_of(&matrix, &Assignment::from_pairs(n, pairs.iter().copied()), k).unwrap();
                ensure(
                    recount.histogram() == step.histogram,
                    format!("case {case}: counts drift from recount"),
                )?;
                ensure(
                    recount.total() > last,
                    format!("case {case}: capped sum did not increase"),
                )?;
                last = recount.total();
            }
            let again = solve_greedy(&matrix, &spec, mode).map_err(|e| e.to_string())?;
            ensure(
                again.assignment == out.assignment
                    && again.trace == out.trace
                    && again.report.objective_value.to_bits() == out.report.objective_value.to_bits(),
                format!("case {case}: rerun differs"),
            )?;
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(60), format!("took {elapsed:?}"))?;
    Ok(format!("1000 instances x 2 modes, {:.2}s", elapsed.as_secs_f64()))
}

fn geometry_invariants() -> Check {
    let start = Instant::now();
    let mut r = common::rng(8);
    let q = 8;
    let theta = TAU / q as f64;
    let mut checked = 0;
    let mut skipped = 0;
    while checked < 10_000 {
        let s = Point2D::new(r.random_range(-50.0..50.0), r.random_range(-50.0..50.0));
        let t = Point2D::new(r.random_range(-50.0..50.0), r.random_range(-50.0..50.0));
        let range = r.random_range(5.0..80.0);
        let scale = r.random_range(0.1..10.0);
        let (dx, dy) = (t.x - s.x, t.y - s.y);
        let d = dx.hypot(dy);
        let angle = polar_angle(dx, dy);
        let gap = angle.rem_euclid(theta).min(theta - angle.rem_euclid(theta));
        if d < 1e-9 || gap < 1e-9 || (d - range).abs() < 1e-9 * range {
            skipped += 1;
            continue;
        }
        let cam = CameraModel::with_pans(range, q).unwrap();
        let hits: Vec<usize> = (0..q).filter(|&j| target_in_sector(s, PanIndex(j), &cam, t)).collect();
        let expected = usize::from(d <= range);
        ensure(
            hits.len() == expected,
            format!("pair {checked}: {} pans contain the target", hits.len()),
        )?;

        let (sn, cs) = theta.sin_cos();
        let rotated = Point2D::new(s.x + cs * dx - sn * dy, s.y + sn * dx + cs * dy);
        let scaled_cam = CameraModel::with_pans(range * scale, q).unwrap();
        let scaled = Point2D::new(s.x + dx * scale, s.y + dy * scale);
        for j in 0..q {
            let here = target_in_sector(s, PanIndex(j), &cam, t);
            ensure(
                here == target_in_sector(s, PanIndex((j + 1) % q), &cam, rotated),
                format!("pair {checked}: rotation breaks pan {j}"),
            )?;
            ensure(
                here == target_in_sector(s, PanIndex(j), &scaled_cam, scaled),
                format!("pair {checked}: scaling breaks pan {j}"),
            )?;
        }
        checked += 1;
    }
    Ok(format!(
        "{checked} pairs ({skipped} near-boundary draws skipped), {:.2}s",
        start.elapsed().as_secs_f64()
    ))
}

fn median_greedy_time(n: usize, m: usize, reps: usize) -> Duration {
    let camera = CameraModel::with_pans(25.0, 8).unwrap();
    let spec = ObjectiveSpec::new(ObjectiveKind::BalancingIndex, 2, 1e-4).unwrap();
    let mut times: Vec<Duration> = (0..reps)
        .map(|rep| {
            let family = ScenarioFamily::generate(rep as u64 + 1, n, m, camera, Grid::square(125.0).unwrap()).unwrap();
            let start = Instant::now();
            let matrix = family.master().coverage_matrix();
            let out = solve_greedy(&matrix, &spec, BenefitMode::Quadratic).unwrap();
            std::hint::black_box(out);
            start.elapsed()
        })
        .collect();
    times.sort();
    times[reps / 2]
}

fn complexity_smoke() -> Check {
    let base = median_greedy_time(50, 100, 9);
    let doubled = median_greedy_time(100, 100, 9);
    ensure(base < Duration::from_secs(10), format!("n=50 took {base:?}"))?;
    let ratio = doubled.as_secs_f64() / base.as_secs_f64().max(1e-6);
    ensure(ratio <= 16.0, format!("doubling n multiplied time by {ratio:.1}"))?;
    Ok(format!(
        "n=50 median {base:?}, n=100 median {doubled:?}, ratio {ratio:.1}"
    ))
}

fn main() -> ExitCode {
    let mut failed = 0;
    let mut report = |id: u32, name: &str, result: Check| match result {
        Ok(detail) => println!("[PASS] AC-{id} {name}: {detail}"),
        Err(why) => {
            failed += 1;
            println!("[FAIL] AC-{id} {name}: {why}");
        }
    };

    report(1, "worked metric values", worked_metrics());
    report(2, "incentive table", incentive_table());
    report(3, "exact solver equals enumeration", exact_matches_enumeration());
    match desk_runs() {
        Ok(runs) => {
            report(4, "INLP dominance on BI", inlp_dominance(&runs));
            report(5, "regime trends", regime_trends(&runs));
            report(6, "uncovered-target ordering", uncovered_ordering(&runs));
        }
        Err(e) => {
            for (id, name) in [
                (4, "INLP dominance on BI"),
                (5, "regime trends"),
                (6, "uncovered-target ordering"),
            ] {
                report(id, name, Err(format!("sweep failed: {e}")));
            }
        }
    }
    report(7, "greedy invariants", greedy_invariants());
    report(8, "geometry invariants", geometry_invariants());
    report(9, "greedy complexity smoke check", complexity_smoke());

    if failed == 0 {
        println!("acceptance: all 9 criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} of 9 criteria failed");
        ExitCode::FAILURE
    }
}
