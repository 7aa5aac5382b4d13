//! Acceptance suite: every numbered criterion below runs at its stated
//! tolerance and prints one PASS line. The shared benchmark grid behind
//! criteria 2 and 3 runs once (about ten minutes on two cores); run with
//! `cargo test --test acceptance -- --nocapture` to watch the lines appear.

use dcpd::dictionary::project;
use dcpd::matrix::Matrix;
use dcpd::numerics::{assignment_max, nnls, spark_bruteforce, SparkResult};
use dcpd::rng::rng_from_seed;
use dcpd::selfdict::{self_dcpd, spa, HsiMatrix, SelfDictVariant};
use dcpd::solvers::{
    fg_gradient, fg_safety_step, flex_mpals, init_random, report_rel_err, smpals_b_update,
    SolverConfig, SolverKind,
};
use dcpd::synthbench::{
    gen_dictionary, gen_factors, rmse_b, run_grid, BenchSolver, ExperimentReport, GridParam,
    SynthSpec,
};
use dcpd::tensor::{add_gaussian_noise, cpd_reconstruct, khatri_rao, unfold};
use rand::Rng;
use std::sync::OnceLock;
use std::time::Instant;

fn pass(line: &str) {
    println!("ACCEPTANCE {line}: PASS");
}

/// Criterion 1 — exact recovery / fixed point. 20 seeded instances at
/// 10 x 20 x 5, d = 40, c = 8, R = 4, sigma = 0, with the spark checker
/// certifying spark > 4. Every solver initialized at the truth holds the
/// selection and reaches relative error below 1e-10 within two outer
/// iterations; the whole criterion finishes in under five seconds.
#[test]
fn acceptance_1_exact_recovery_fixed_point() {
    let started = Instant::now();
    for seed in 0..20u64 {
        let spec = SynthSpec {
            dims: (10, 20, 5),
            atoms: 40,
            classes: 8,
            rank: 4,
            sigma: 0.0,
            ..Default::default()
        };
        let dict = gen_dictionary(&spec, 1000 + seed).unwrap();
        match spark_bruteforce(dict.atoms(), 5).unwrap() {
            SparkResult::Spark(k) => assert!(k > 4, "seed {seed}: spark {k} <= R"),
            SparkResult::ExceedsKmax => {}
        }
        let (truth, sel) = gen_factors(&spec, &dict, 2000 + seed).unwrap();
        let t = cpd_reconstruct(&truth);
        let cfg = SolverConfig { rank: 4, ..Default::default() };
        for kind in [
            SolverKind::Mpals,
            SolverKind::Smpals,
            SolverKind::FlexMpals,
            SolverKind::AlsFg,
        ] {
            let report =
                dcpd::solvers::run_solver(kind, &t, &cfg, &truth, Some(&dict)).unwrap();
            assert!(
                report.iterations <= 2,
                "seed {seed} {kind}: {} iterations",
                report.iterations
            );
            assert_eq!(
                report.selection.as_ref().unwrap().indices,
                sel.indices,
                "seed {seed} {kind}: selection moved"
            );
            let rel = report_rel_err(&t, &report).unwrap();
            assert!(rel < 1e-10, "seed {seed} {kind}: rel err {rel}");
        }
    }
    let elapsed = started.elapsed().as_secs_f64();
    assert!(elapsed < 5.0, "criterion 1 took {elapsed:.2} s");
    pass(&format!("1 (exact recovery / fixed point, {elapsed:.2} s)"));
}

/// The shared benchmark grid behind criteria 2 and 3: the exact protocol
/// dims, d = 1000 atoms in 50 classes, R = Re = 10, sigma = 0.01, 50 trials,
/// rho in {0.1, 0.5, 1.0} (the rho = 1.0 cell is the R = Re experiment).
struct SharedGrid {
    report: ExperimentReport,
    wall_s: f64,
}

fn shared_grid() -> &'static SharedGrid {
    static GRID: OnceLock<SharedGrid> = OnceLock::new();
    GRID.get_or_init(|| {
        let spec = SynthSpec {
            dims: (20, 50, 7),
            atoms: 1000,
            classes: 50,
            rank: 10,
            re_values: vec![],
            rho_values: vec![0.1, 0.5, 1.0],
            sigma: 0.01,
            trials: 50,
            base_seed: 42,
            ..Default::default()
        };
        let started = Instant::now();
        let report = run_grid(&spec, &BenchSolver::DEFAULT, 0).unwrap();
        SharedGrid { report, wall_s: started.elapsed().as_secs_f64() }
    })
}

fn cell_metric(
    report: &ExperimentReport,
    rho: f64,
    solver: BenchSolver,
) -> (Option<f64>, f64) {
    let s = report
        .summary(GridParam::Rho, rho, solver)
        .unwrap_or_else(|| panic!("missing summary for {solver} at rho {rho}"));
    assert!(!s.flagged, "{solver} at rho {rho}: too many failed trials");
    (s.mean_id_rate, s.mean_rmse_b)
}

/// Criterion 2 — trend reproduction at protocol scale (the rho = 1.0 cell is
/// exactly the R = Re = 10, sigma = 0.01, N = 50 experiment): the realized
/// SNR averages 11.5 +- 1.5 dB, ALS-initialized MPALS beats the projected
/// baseline on identification by at least 0.03 absolute, no dictionary
/// solver has worse mean rMSE on B than the projected baseline, and the grid
/// fits the 15-minute budget.
#[test]
fn acceptance_2_protocol_trend() {
    let grid = shared_grid();
    let report = &grid.report;
    assert!(
        grid.wall_s < 900.0,
        "benchmark grid took {:.0} s (> 15 min)",
        grid.wall_s
    );
    let snr = report
        .summary(GridParam::Rho, 1.0, BenchSolver::Mpals)
        .unwrap()
        .mean_snr_db
        .expect("noisy cells record SNR");
    assert!(
        (snr - 11.5).abs() <= 1.5,
        "mean SNR {snr:.2} dB outside 11.5 +- 1.5"
    );

    let (id_proj, rmse_proj) = cell_metric(report, 1.0, BenchSolver::ProjectedAls);
    let (id_mpals, _) = cell_metric(report, 1.0, BenchSolver::Mpals);
    let gap = id_mpals.unwrap() - id_proj.unwrap();
    assert!(
        gap >= 0.03,
        "MPALS identification gain over projected ALS is {gap:.4} (< 0.03)"
    );

    for solver in [
        BenchSolver::Mpals,
        BenchSolver::Smpals,
        BenchSolver::FlexMpals,
        BenchSolver::AlsFg,
    ] {
        let (_, rmse) = cell_metric(report, 1.0, solver);
        assert!(
            rmse <= rmse_proj,
            "{solver}: mean rMSE {rmse:.5} exceeds projected ALS {:.5}",
            rmse_proj
        );
    }
    pass(&format!(
        "2 (protocol trend: SNR {snr:.2} dB, id gain {gap:.3}, grid {:.0} s)",
        grid.wall_s
    ));
}

/// Criterion 3 — ill-conditioning trend over rho in {0.1, 0.5, 1.0}:
/// randomly initialized MPALS stays steady (its mean rMSE at rho = 0.1 is at
/// most 1.5x its rho = 1.0 value), and at rho = 0.1 the dictionary solvers
/// beat the projected baseline on rMSE — strictly for the MPALS family; the
/// continuous solver is held to the non-strict bound it already answers to
/// in criterion 2.
#[test]
fn acceptance_3_ill_conditioning_trend() {
    let report = &shared_grid().report;
    let (_, rand_01) = cell_metric(report, 0.1, BenchSolver::RandMpals);
    let (_, rand_10) = cell_metric(report, 1.0, BenchSolver::RandMpals);
    assert!(
        rand_01 <= 1.5 * rand_10,
        "rand-MPALS rMSE {rand_01:.5} at rho 0.1 vs {rand_10:.5} at rho 1.0 (ratio {:.2} > 1.5)",
        rand_01 / rand_10
    );

    let (_, rmse_proj) = cell_metric(report, 0.1, BenchSolver::ProjectedAls);
    for solver in [BenchSolver::Mpals, BenchSolver::Smpals, BenchSolver::FlexMpals] {
        let (_, rmse) = cell_metric(report, 0.1, solver);
        assert!(
            rmse < rmse_proj,
            "{solver}: mean rMSE {rmse:.5} does not beat projected ALS {rmse_proj:.5} at rho 0.1"
        );
    }
    let (_, rmse_fg) = cell_metric(report, 0.1, BenchSolver::AlsFg);
    assert!(
        rmse_fg <= rmse_proj,
        "als-fg: mean rMSE {rmse_fg:.5} exceeds projected ALS {rmse_proj:.5} at rho 0.1"
    );
    pass(&format!(
        "3 (ill-conditioning: rand-MPALS ratio {:.2}, DCPD beats projection at rho 0.1)",
        rand_01 / rand_10
    ));
}

/// Criterion 4 — Flex-MPALS monotonicity: the coupled objective is
/// nonincreasing at every block update (1e-9 relative) over 1000 iterations
/// on 20 random unit-norm-atom instances.
#[test]
fn acceptance_4_flex_monotonicity() {
    for seed in 0..20u64 {
        let spec = SynthSpec {
            dims: (6, 12, 4),
            atoms: 24,
            classes: 6,
            rank: 3,
            sigma: 0.0,
            ..Default::default()
        };
        let dict = gen_dictionary(&spec, 300 + seed).unwrap();
        assert!(dict.is_unit_norm());
        let (truth, _) = gen_factors(&spec, &dict, 400 + seed).unwrap();
        let (t, _) = add_gaussian_noise(&cpd_reconstruct(&truth), 0.05, seed).unwrap();
        let cfg = SolverConfig {
            rank: 3,
            lambda: 0.04,
            max_outer_iters: 1000,
            stop_tol: 1e-30, // run the full budget
            record_block_costs: true,
            ..Default::default()
        };
        let init = init_random(t.dims(), 3, 500 + seed);
        let report = flex_mpals(&t, &cfg, &init, &dict).unwrap();
        // either the full budget ran, or the iteration became bit-stationary
        // (cost change exactly zero), in which case every remaining block
        // update would repeat the recorded values verbatim
        if report.iterations < 1000 {
            let n = report.cost_trace.len();
            assert!(n >= 2, "seed {seed}: stopped after {n} iterations without stationarity");
            assert_eq!(
                report.cost_trace[n - 1].to_bits(),
                report.cost_trace[n - 2].to_bits(),
                "seed {seed}: stopped early without an exact fixed point"
            );
        }
        let blocks = report.block_cost_trace.unwrap();
        for (i, w) in blocks.windows(2).enumerate() {
            assert!(
                w[1] <= w[0] * (1.0 + 1e-9),
                "seed {seed} block {i}: {} -> {}",
                w[0],
                w[1]
            );
        }
    }
    pass("4 (Flex-MPALS objective nonincreasing per block, 20 x 1000 iterations)");
}

/// Criterion 5 — ALS-FG gradient correctness on 10 instances of
/// 5 x 8 x 4, d = 20, R = 3: the analytic gradient matches central finite
/// differences (h = 1e-6) to 1e-6 relative for delta = 0 and delta = 0.3,
/// and the safety step never yields a zero column over 1000 steps.
#[test]
fn acceptance_5_fg_gradient_and_safety() {
    for seed in 0..10u64 {
        let spec = SynthSpec {
            dims: (5, 8, 4),
            atoms: 20,
            classes: 5,
            rank: 3,
            sigma: 0.0,
            ..Default::default()
        };
        let dict = gen_dictionary(&spec, 600 + seed).unwrap();
        let (truth, _) = gen_factors(&spec, &dict, 700 + seed).unwrap();
        let t = cpd_reconstruct(&truth);
        let t2 = unfold(&t, 2).unwrap();
        let kr = khatri_rao(&truth.a, &truth.c).unwrap();
        let rhs = t2.matmul(&kr);
        let gram = dcpd::tensor::hadamard(&truth.a.gram(), &truth.c.gram()).unwrap();
        let w = dict.atoms().t_matmul(&rhs);
        let mut rng = rng_from_seed(800 + seed);
        let s = Matrix::from_fn(20, 3, |_, _| rng.gen_range(0.2..1.0));

        let gamma = |s: &Matrix, delta: f64| -> f64 {
            let b = dict.atoms().matmul(s);
            let model = b.matmul_t(&kr);
            let fit: f64 = t2
                .data()
                .iter()
                .zip(model.data())
                .map(|(x, y)| (x - y) * (x - y))
                .sum();
            0.5 * fit + delta * s.data().iter().map(|v| v.abs()).sum::<f64>()
        };
        for delta in [0.0, 0.3] {
            let g = fg_gradient(&dict, &s, &gram, &w, delta);
            let h = 1e-6;
            let mut fd = Matrix::zeros(20, 3);
            for i in 0..20 {
                for j in 0..3 {
                    let mut sp = s.clone();
                    sp.set(i, j, s.get(i, j) + h);
                    let mut sm = s.clone();
                    sm.set(i, j, s.get(i, j) - h);
                    fd.set(i, j, (gamma(&sp, delta) - gamma(&sm, delta)) / (2.0 * h));
                }
            }
            let rel = g.add_scaled(-1.0, &fd).frob_norm() / g.frob_norm();
            assert!(rel < 1e-6, "seed {seed} delta {delta}: FD mismatch {rel}");
        }
    }

    // 1000 safety-capped steps never produce a zero column
    let mut rng = rng_from_seed(999);
    let mut s = Matrix::from_fn(15, 4, |_, _| rng.gen_range(0.0..1.0));
    s.normalize_cols();
    for step_idx in 0..1000 {
        let g = Matrix::from_fn(15, 4, |_, _| rng.gen_range(-1.0..1.0));
        let step = fg_safety_step(&s, &g, 5e-3);
        let mut next = s.add_scaled(-step, &g);
        for v in next.data_mut() {
            if *v < 0.0 {
                *v = 0.0;
            }
        }
        for j in 0..4 {
            assert!(next.col_norm(j) > 0.0, "zero column at step {step_idx}");
        }
        next.normalize_cols();
        s = next;
    }
    pass("5 (ALS-FG gradient matches finite differences; safety step keeps columns alive)");
}

/// Criterion 6 — oracle equivalences: the assignment kernel equals brute
/// force on 200 random score matrices (R <= 5, d <= 8), the rMSE matching
/// equals brute force over all R! permutations on 100 random pairs (R <= 6),
/// and NNLS satisfies its KKT conditions on 200 random instances.
#[test]
fn acceptance_6_oracle_equivalences() {
    let mut rng = rng_from_seed(0xacce97);

    fn assignment_brute(score: &Matrix) -> f64 {
        fn rec(score: &Matrix, row: usize, used: &mut Vec<bool>, acc: f64, best: &mut f64) {
            let (r, d) = score.shape();
            if row == r {
                *best = best.max(acc);
                return;
            }
            for j in 0..d {
                if !used[j] {
                    used[j] = true;
                    rec(score, row + 1, used, acc + score.get(row, j), best);
                    used[j] = false;
                }
            }
        }
        let mut best = f64::NEG_INFINITY;
        rec(score, 0, &mut vec![false; score.cols()], 0.0, &mut best);
        best
    }
    for case in 0..200 {
        let r = rng.gen_range(1..=5);
        let d = rng.gen_range(r..=8);
        let score = Matrix::from_fn(r, d, |_, _| rng.gen_range(0.0..1.0));
        let res = assignment_max(&score).unwrap();
        let brute = assignment_brute(&score);
        assert!(
            (res.total_score - brute).abs() <= 1e-9,
            "case {case}: assignment {} vs brute {}",
            res.total_score,
            brute
        );
        let mut seen = vec![false; d];
        for &j in &res.column_to_atom {
            assert!(!seen[j], "case {case}: not injective");
            seen[j] = true;
        }
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 1 {
            return vec![vec![0]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for pos in 0..=p.len() {
                let mut q: Vec<usize> = p.iter().map(|&v| v + 1).collect();
                q.insert(pos, 0);
                out.push(q);
            }
        }
        out
    }
    for case in 0..100 {
        let r = rng.gen_range(2..=6);
        let rows = rng.gen_range(4..=9);
        let b_true = Matrix::from_fn(rows, r, |_, _| rng.gen_range(-1.0..1.0));
        let b_est = Matrix::from_fn(rows, r, |_, _| rng.gen_range(-1.0..1.0));
        let fast = rmse_b(&b_true, &b_est).unwrap();
        let denom = b_true.frob_norm_sq();
        let mut brute = f64::INFINITY;
        for p in permutations(r) {
            let mut err = 0.0;
            for (i, &j) in p.iter().enumerate() {
                let dot = b_true.col_dot(i, &b_est, j);
                let nb = b_est.col_norm(j).powi(2);
                let alpha = if nb == 0.0 { 0.0 } else { dot / nb };
                for row in 0..rows {
                    let d = b_true.get(row, i) - alpha * b_est.get(row, j);
                    err += d * d;
                }
            }
            brute = brute.min(err / denom);
        }
        assert!(
            (fast - brute).abs() <= 1e-12,
            "case {case}: rmse {fast} vs brute {brute}"
        );
    }

    for case in 0..200 {
        let n = rng.gen_range(2..=6);
        let a = Matrix::from_fn(n + 2, n, |_, _| rng.gen_range(-1.0..1.0));
        let mut g = a.gram();
        for i in 0..n {
            let v = g.get(i, i) + 0.05;
            g.set(i, i, v);
        }
        let h = Matrix::from_fn(1, n, |_, _| rng.gen_range(-2.0..2.0));
        let x = nnls(&g, &h).unwrap();
        let scale = (0..n)
            .map(|i| g.get(i, i).abs())
            .chain(h.data().iter().map(|v| v.abs()))
            .fold(1.0f64, f64::max);
        for j in 0..n {
            let mut grad = -h.get(0, j);
            for k in 0..n {
                grad += g.get(j, k) * x.get(0, k);
            }
            if x.get(0, j) > 0.0 {
                assert!(
                    grad.abs() <= 1e-8 * scale,
                    "case {case} col {j}: active gradient {grad}"
                );
            } else {
                assert!(
                    grad >= -1e-8 * scale,
                    "case {case} col {j}: inactive gradient {grad}"
                );
            }
        }
    }
    pass("6 (assignment, rMSE matching, and NNLS match their oracles)");
}

/// Criterion 7 — SMPALS coupling limit: with lambda = 1e12 the coupled B
/// update returns the selected atoms to 1e-6 relative on 10 random
/// instances.
#[test]
fn acceptance_7_smpals_lambda_limit() {
    for seed in 0..10u64 {
        let spec = SynthSpec {
            dims: (6, 15, 4),
            atoms: 30,
            classes: 6,
            rank: 3,
            sigma: 0.0,
            ..Default::default()
        };
        let dict = gen_dictionary(&spec, 900 + seed).unwrap();
        let (truth, sel) = gen_factors(&spec, &dict, 950 + seed).unwrap();
        let (t, _) = add_gaussian_noise(&cpd_reconstruct(&truth), 0.05, seed).unwrap();
        let t2 = unfold(&t, 2).unwrap();
        let kr = khatri_rao(&truth.a, &truth.c).unwrap();
        let rhs = t2.matmul(&kr);
        let gram = dcpd::tensor::hadamard(&truth.a.gram(), &truth.c.gram()).unwrap();
        let b_sel = project(&sel, &dict).unwrap();
        let b = smpals_b_update(&rhs, &gram, &b_sel, 1e12).unwrap();
        let rel = b.add_scaled(-1.0, &b_sel).frob_norm() / b_sel.frob_norm();
        assert!(rel < 1e-6, "seed {seed}: ||B - DS|| relative {rel}");
    }
    pass("7 (SMPALS B update collapses onto DS at lambda = 1e12)");
}

/// Separable pixels-by-bands data with `r` pure pixels at the front and all
/// other rows strictly inside the simplex.
fn separable_hsi(n: usize, bands: usize, r: usize, sigma: f64, seed: u64) -> HsiMatrix {
    let mut rng = rng_from_seed(seed);
    let spectra = Matrix::from_fn(bands, r, |_, _| rng.gen_range(0.05..1.0));
    let mut weights = Matrix::zeros(n, r);
    for i in 0..r {
        weights.set(i, i, 1.0);
    }
    for i in r..n {
        let mut w: Vec<f64> = (0..r).map(|_| rng.gen_range(0.01..1.0)).collect();
        let total: f64 = w.iter().sum();
        for v in w.iter_mut() {
            *v = 0.85 * *v / total;
        }
        for (j, v) in w.iter().enumerate() {
            weights.set(i, j, *v);
        }
    }
    let mut m = weights.matmul_t(&spectra);
    if sigma > 0.0 {
        for v in m.data_mut() {
            *v = (*v + sigma * rng.gen_range(-1.0..1.0)).max(0.0);
        }
    }
    HsiMatrix::new(m, None).unwrap()
}

/// Criterion 8 — self-dictionary: on 20 separable 500-pixel x 30-band
/// instances (R = 5, noise 1e-3) SPA + refinement never reports a worse
/// error than SPA + NNLS alone, and noiseless instances recover the exact
/// pure-pixel indices. When the user supplies a real scene via
/// `DCPD_URBAN_PATH` (R = 6), the refined selection must strictly improve on
/// SPA's error.
#[test]
fn acceptance_8_self_dictionary() {
    for seed in 0..20u64 {
        let noisy = separable_hsi(500, 30, 5, 1e-3, 8000 + seed);
        let init = spa(&noisy, 5).unwrap();
        let cfg = SolverConfig { rank: 5, max_outer_iters: 50, ..Default::default() };
        let res = self_dcpd(&noisy, 5, &cfg, &init, SelfDictVariant::Mpals).unwrap();
        assert!(
            res.rel_err <= res.init_rel_err,
            "seed {seed}: refined {} > init {}",
            res.rel_err,
            res.init_rel_err
        );

        let clean = separable_hsi(500, 30, 5, 0.0, 8000 + seed);
        let init = spa(&clean, 5).unwrap();
        let res = self_dcpd(&clean, 5, &cfg, &init, SelfDictVariant::Mpals).unwrap();
        let mut got = res.endmember_indices.clone();
        got.sort_unstable();
        assert_eq!(got, vec![0, 1, 2, 3, 4], "seed {seed}: wrong pure pixels");
        assert!(res.rel_err < 1e-10, "seed {seed}: rel err {}", res.rel_err);
    }

    match std::env::var("DCPD_URBAN_PATH") {
        Ok(path) => {
            let hsi = dcpd::io::load_hsi(std::path::Path::new(&path)).unwrap();
            let init = spa(&hsi, 6).unwrap();
            let cfg = SolverConfig { rank: 6, max_outer_iters: 50, ..Default::default() };
            let res = self_dcpd(&hsi, 6, &cfg, &init, SelfDictVariant::Mpals).unwrap();
            assert!(
                res.rel_err < res.init_rel_err,
                "d-SPA {} does not strictly improve on SPA {}",
                res.rel_err,
                res.init_rel_err
            );
            pass(&format!(
                "8 (self-dictionary; Urban: SPA {:.2}% -> d-SPA {:.2}%)",
                100.0 * res.init_rel_err,
                100.0 * res.rel_err
            ));
        }
        Err(_) => {
            pass("8 (self-dictionary on synthetic scenes; Urban skipped: DCPD_URBAN_PATH not set)");
        }
    }
}
