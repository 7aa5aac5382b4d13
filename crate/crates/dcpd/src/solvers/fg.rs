//! ALS-FG: alternating least squares on A and C with a Nesterov fast-gradient
//! estimate of the dense nonnegative score matrix S (columns constrained to
//! the unit l2 sphere), an l1 penalty ramped linearly across outer
//! iterations, and a final binarization of S into an atom selection.

use super::{mode_ctx, objective_from_ctx, solve_ctx, FitReport, SolverConfig, Unfoldings};
use crate::dictionary::{project, select_atoms, Dictionary, Selection};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::numerics::spectral_norm;
use crate::tensor::{Factors, Tensor3};
use std::time::Instant;

/// Largest eigenvalue of `M^T M` via power iteration; when the iteration
/// fails to settle (near-degenerate top eigenvalues) the infinity-norm upper
/// bound of the smaller Gram stands in, which only shortens the step.
fn max_eig_bound(m: &Matrix) -> f64 {
    match spectral_norm(m) {
        Ok(sigma) => sigma * sigma,
        Err(_) => {
            let g = if m.rows() <= m.cols() { m.matmul_t(m) } else { m.t_matmul(m) };
            inf_norm_symmetric(&g)
        }
    }
}

/// Largest eigenvalue of a symmetric PSD matrix, with the same fallback.
fn max_eig_symmetric(g: &Matrix) -> Result<f64> {
    match spectral_norm(g) {
        Ok(sigma) => Ok(sigma),
        Err(Error::NonConvergence(_)) => Ok(inf_norm_symmetric(g)),
        Err(e) => Err(e),
    }
}

/// `max_i sum_j |g[i,j]|`, an upper bound on the spectral radius.
fn inf_norm_symmetric(g: &Matrix) -> f64 {
    (0..g.rows())
        .map(|i| g.row(i).iter().map(|v| v.abs()).sum::<f64>())
        .fold(0.0, f64::max)
}

/// Gradient of the smooth part of the subproblem in S:
/// `D^T D S (A^T A . C^T C) - D^T unfold(T,2) (A kr C) + delta * 1`,
/// evaluated without forming `D^T D`.
pub fn fg_gradient(dict: &Dictionary, s: &Matrix, gram_ac: &Matrix, w: &Matrix, delta: f64) -> Matrix {
    let sg = s.matmul(gram_ac);
    let dsg = dict.atoms().matmul(&sg);
    let mut g = dict.atoms().t_matmul(&dsg);
    for (gv, wv) in g.data_mut().iter_mut().zip(w.data()) {
        *gv = *gv - *wv + delta;
    }
    g
}

/// The safety step bound: at most `1/eps`, and small enough that in every
/// column at least one currently positive entry of S stays positive after
/// the gradient step.
pub fn fg_safety_step(s: &Matrix, g: &Matrix, eps: f64) -> f64 {
    let mut step = 1.0 / eps;
    for j in 0..s.cols() {
        let mut col_bound = f64::NEG_INFINITY;
        let mut constrained = false;
        for i in 0..s.rows() {
            let gv = g.get(i, j);
            let sv = s.get(i, j);
            if gv > 0.0 && sv > 0.0 {
                constrained = true;
                let ratio = sv / gv;
                if ratio > col_bound {
                    col_bound = ratio;
                }
            }
        }
        // a column whose positive entries all have nonpositive gradient
        // survives any step and imposes no bound
        if constrained && col_bound - 1e-12 < step {
            step = col_bound - 1e-12;
        }
    }
    step.max(0.0)
}

/// One Nesterov inner loop on S: gradient steps at the extrapolated point,
/// then clamp at zero and renormalize columns to the unit sphere. Returns the
/// last feasible iterate (every column nonnegative, unit l2 norm).
fn fg_inner(
    dict: &Dictionary,
    s0: &Matrix,
    gram_ac: &Matrix,
    w: &Matrix,
    delta: f64,
    eps: f64,
    iters: usize,
    warnings: &mut Vec<String>,
) -> Result<Matrix> {
    let mut x = s0.clone();
    let mut y = s0.clone();
    let mut alpha = 1.0f64;
    for _ in 0..iters {
        let g = fg_gradient(dict, &y, gram_ac, w, delta);
        let step = fg_safety_step(&y, &g, eps);
        let mut x_new = y.add_scaled(-step, &g);
        for v in x_new.data_mut() {
            if *v < 0.0 {
                *v = 0.0;
            }
        }
        for j in 0..x_new.cols() {
            let n = x_new.col_norm(j);
            if n > 0.0 {
                x_new.scale_col(j, 1.0 / n);
            } else {
                // extrapolation can leave a column with no positive entry;
                // fall back to the previous feasible column
                for i in 0..x_new.rows() {
                    x_new.set(i, j, x.get(i, j));
                }
                if warnings.is_empty() {
                    warnings.push(format!("fast gradient: rescued collapsed S column {j}"));
                }
            }
        }
        let alpha_old = alpha;
        alpha = 0.5 * (-alpha_old * alpha_old
            + (alpha_old.powi(4) + 4.0 * alpha_old).sqrt());
        let beta = alpha_old * (1.0 - alpha_old) / (alpha_old * alpha_old + alpha);
        y = x_new.add_scaled(beta, &x_new.add_scaled(-1.0, &x));
        x = x_new;
    }
    Ok(x)
}

/// Per-column argmax binarization of the dense scores, ties to the lowest
/// atom index.
fn binarize(s: &Matrix) -> Selection {
    let indices = (0..s.cols())
        .map(|j| {
            let mut best = 0usize;
            for i in 1..s.rows() {
                if s.get(i, j) > s.get(best, j) {
                    best = i;
                }
            }
            best
        })
        .collect();
    Selection::new(indices, vec![1; s.cols()]).expect("valid by construction")
}

/// ALS-FG (Algorithm 3 pattern): A and C by (nonnegative) least squares with
/// `B = D S`, S by the fast-gradient inner loop, the l1 weight `delta` ramped
/// linearly from 0 to `cfg.delta_max` across the outer iteration budget. At
/// termination S is binarized per-column, B is replaced by the selected atoms,
/// and A, C are re-solved once.
pub fn als_fg(t: &Tensor3, cfg: &SolverConfig, init: &Factors, dict: &Dictionary) -> Result<FitReport> {
    cfg.validate()?;
    if init.dims() != t.dims() || init.rank() != cfg.rank {
        return Err(Error::InvalidInput("initial factors do not match tensor/config".into()));
    }
    if dict.atom_dim() != t.dims().1 {
        return Err(Error::InvalidInput(format!(
            "atom dimension {} does not match the second tensor mode {}",
            dict.atom_dim(),
            t.dims().1
        )));
    }
    let started = Instant::now();
    let unf = Unfoldings::new(t)?;
    let mut warnings = Vec::new();

    // scores start at the binary selection closest to the initial B (so an
    // exact initialization is an exact fixed point); zeroed entries revive
    // through negative gradients during the inner iterations
    let sel0 = select_atoms(&init.b, dict, cfg.no_repeat, cfg.nonneg)?;
    let mut s = Matrix::zeros(dict.len(), cfg.rank);
    for (col, &j) in sel0.indices.iter().enumerate() {
        s.set(j, col, 1.0);
    }
    let mut f = init.clone();
    f.b = dict.atoms().matmul(&s);

    let lam_d = max_eig_bound(dict.atoms());
    let lip_d = if cfg.fg_squared_lipschitz { lam_d * lam_d } else { lam_d };
    if lip_d == 0.0 {
        return Err(Error::Numerical("zero dictionary spectral norm".into()));
    }

    let mut trace = Vec::new();
    let mut converged = false;
    let mut iterations = 0;
    for iter in 1..=cfg.max_outer_iters {
        iterations = iter;
        let delta = if cfg.max_outer_iters == 1 {
            cfg.delta_max
        } else {
            cfg.delta_max * (iter - 1) as f64 / (cfg.max_outer_iters - 1) as f64
        };
        let ctx = mode_ctx(&unf.t1, &f.b, &f.c)?;
        f.a = solve_ctx(&ctx, cfg.nonneg)?;
        if cfg.normalize_a {
            super::normalize_a_into_c(&mut f.a, &mut f.c);
        }
        let ctx = mode_ctx(&unf.t3, &f.a, &f.b)?;
        f.c = solve_ctx(&ctx, cfg.nonneg)?;

        let ctx = mode_ctx(&unf.t2, &f.a, &f.c)?;
        let w = dict.atoms().t_matmul(&ctx.rhs);
        let lam_g = max_eig_symmetric(&ctx.gram)?;
        let eps = if cfg.fg_squared_lipschitz { lip_d * lam_g * lam_g } else { lip_d * lam_g };
        if eps == 0.0 {
            return Err(Error::Numerical("zero fast-gradient step constant".into()));
        }
        s = fg_inner(dict, &s, &ctx.gram, &w, delta, eps, cfg.fg_inner_iters, &mut warnings)?;
        f.b = dict.atoms().matmul(&s);

        // the subproblem objective: fit residual plus the ramped l1 term.
        // The relative-change rule only applies once the ramp is complete;
        // while delta still grows the objective is a moving target and an
        // early stall would freeze S at its initialization.
        let fit = objective_from_ctx(unf.norm_sq, &f.b, &ctx);
        let fit = super::refined_cost(t, &f, fit, unf.norm_sq);
        let cost = fit + delta * s.data().iter().sum::<f64>();
        trace.push(cost);
        let ramp_done = delta >= cfg.delta_max;
        let done = super::is_zero_cost(cost, unf.norm_sq)
            || (ramp_done && super::trace_stop(&trace, cfg.stop_tol));
        if done {
            converged = true;
            break;
        }
    }

    // binarize and re-solve A, C once against the selected atoms
    let sel = binarize(&s);
    f.b = project(&sel, dict)?;
    let ctx = mode_ctx(&unf.t1, &f.b, &f.c)?;
    f.a = solve_ctx(&ctx, cfg.nonneg)?;
    let ctx = mode_ctx(&unf.t3, &f.a, &f.b)?;
    f.c = solve_ctx(&ctx, cfg.nonneg)?;
    trace.push(objective_from_ctx(unf.norm_sq, &f.c, &ctx));

    Ok(FitReport {
        factors: f,
        selection: Some(sel),
        cost_trace: trace,
        block_cost_trace: None,
        converged,
        iterations,
        wall_time_s: started.elapsed().as_secs_f64(),
        warnings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solvers::{mode_ctx, report_rel_err, SolverConfig, Unfoldings};
    use crate::tensor::cpd_reconstruct;
    use crate::testutil::{dcpd_instance, unit_dictionary};
    use rand::Rng;

    /// The subproblem objective: 0.5 * squared fit residual + delta * l1(S).
    fn gamma(t2: &crate::Matrix, dict: &Dictionary, a: &crate::Matrix, c: &crate::Matrix, s: &crate::Matrix, delta: f64) -> f64 {
        let b = dict.atoms().matmul(s);
        let kr = crate::tensor::khatri_rao(a, c).unwrap();
        let model = b.matmul_t(&kr);
        let fit: f64 = t2
            .data()
            .iter()
            .zip(model.data())
            .map(|(x, y)| (x - y) * (x - y))
            .sum();
        0.5 * fit + delta * s.data().iter().map(|v| v.abs()).sum::<f64>()
    }

    #[test]
    fn gradient_matches_finite_differences() {
        for (seed, delta) in [(1u64, 0.0), (2, 0.3), (3, 0.0), (4, 0.3)] {
            let (t, truth, _, dict) = dcpd_instance((5, 8, 4), 20, 3, seed);
            let unf = Unfoldings::new(&t).unwrap();
            let ctx = mode_ctx(&unf.t2, &truth.a, &truth.c).unwrap();
            let w = dict.atoms().t_matmul(&ctx.rhs);
            let mut rng = crate::rng::rng_from_seed(seed ^ 0xfeed);
            let s = crate::Matrix::from_fn(20, 3, |_, _| rng.gen_range(0.2..1.0));
            let g = fg_gradient(&dict, &s, &ctx.gram, &w, delta);
            let h = 1e-6;
            let mut fd = crate::Matrix::zeros(20, 3);
            for i in 0..20 {
                for j in 0..3 {
                    let mut sp = s.clone();
                    sp.set(i, j, s.get(i, j) + h);
                    let mut sm = s.clone();
                    sm.set(i, j, s.get(i, j) - h);
                    let plus = gamma(&unf.t2, &dict, &truth.a, &truth.c, &sp, delta);
                    let minus = gamma(&unf.t2, &dict, &truth.a, &truth.c, &sm, delta);
                    fd.set(i, j, (plus - minus) / (2.0 * h));
                }
            }
            let diff = g.add_scaled(-1.0, &fd).frob_norm();
            let rel = diff / g.frob_norm();
            assert!(rel < 1e-6, "seed {seed} delta {delta}: rel {rel}");
        }
    }

    #[test]
    fn safety_step_preserves_positive_columns() {
        let mut rng = crate::rng::rng_from_seed(500);
        let mut s = crate::Matrix::from_fn(12, 4, |_, _| rng.gen_range(0.0..1.0));
        s.normalize_cols();
        for step_idx in 0..1000 {
            let g = crate::Matrix::from_fn(12, 4, |_, _| rng.gen_range(-1.0..1.0));
            let step = fg_safety_step(&s, &g, 1e-3);
            assert!(step >= 0.0);
            let mut next = s.add_scaled(-step, &g);
            for v in next.data_mut() {
                if *v < 0.0 {
                    *v = 0.0;
                }
            }
            for j in 0..4 {
                assert!(next.col_norm(j) > 0.0, "column {j} collapsed at step {step_idx}");
            }
            next.normalize_cols();
            s = next;
        }
    }

    #[test]
    fn safety_step_unconstrained_column_gives_lipschitz_step() {
        // all gradients nonpositive on the positive entries: no bound applies
        let s = crate::Matrix::from_vec(2, 1, vec![1.0, 0.0]).unwrap();
        let g = crate::Matrix::from_vec(2, 1, vec![-1.0, 1.0]).unwrap();
        assert_eq!(fg_safety_step(&s, &g, 2.0), 0.5);
    }

    #[test]
    fn inner_loop_keeps_unit_sphere() {
        let (t, truth, _, dict) = dcpd_instance((5, 8, 4), 16, 3, 11);
        let unf = Unfoldings::new(&t).unwrap();
        let ctx = mode_ctx(&unf.t2, &truth.a, &truth.c).unwrap();
        let w = dict.atoms().t_matmul(&ctx.rhs);
        let mut rng = crate::rng::rng_from_seed(3);
        let mut s0 = crate::Matrix::from_fn(16, 3, |_, _| rng.gen_range(0.0..1.0));
        s0.normalize_cols();
        let mut warnings = Vec::new();
        for iters in [1usize, 3, 10] {
            let s = fg_inner(&dict, &s0, &ctx.gram, &w, 0.05, 10.0, iters, &mut warnings).unwrap();
            for j in 0..3 {
                assert!((s.col_norm(j) - 1.0).abs() < 1e-12);
                assert!(s.col_vec(j).iter().all(|&v| v >= 0.0));
            }
        }
    }

    #[test]
    fn fg_truth_init_fixed_point() {
        let (t, truth, sel, dict) = dcpd_instance((6, 10, 4), 15, 3, 77);
        let cfg = SolverConfig { rank: 3, delta_max: 0.1, ..Default::default() };
        let report = als_fg(&t, &cfg, &truth, &dict).unwrap();
        assert!(report.iterations <= 2);
        assert_eq!(report.selection.as_ref().unwrap().indices, sel.indices);
        assert!(report_rel_err(&t, &report).unwrap() < 1e-10);
    }

    #[test]
    fn fg_binarizes_to_valid_selection() {
        let (t, _, _, dict) = dcpd_instance((5, 8, 4), 12, 2, 19);
        let (noisy, _) = crate::tensor::add_gaussian_noise(&t, 0.02, 5).unwrap();
        let cfg = SolverConfig { rank: 2, max_outer_iters: 30, ..Default::default() };
        let init = crate::solvers::init_random(noisy.dims(), 2, 1);
        let report = als_fg(&noisy, &cfg, &init, &dict).unwrap();
        let sel = report.selection.unwrap();
        assert_eq!(sel.rank(), 2);
        assert!(sel.indices.iter().all(|&j| j < dict.len()));
        // final B is the projection of the binarized selection
        let proj = crate::dictionary::project(&sel, &dict).unwrap();
        assert_eq!(report.factors.b, proj);
        let _ = cpd_reconstruct(&report.factors);
        let _ = unit_dictionary(3, 3, 1);
    }
}
