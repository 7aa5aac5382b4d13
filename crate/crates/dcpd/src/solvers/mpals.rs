//! The greedy matching-pursuit solver family.
//!
//! All three share the outer structure: update A, update C, then estimate B
//! against the dictionary. They differ in the B step:
//!
//! * **MPALS** solves the plain least squares for B, selects the closest
//!   (signed) atom per column, and replaces B by the selected atoms.
//! * **SMPALS** solves a ridge-coupled B update that pulls toward the
//!   current selection, re-selects, and anneals the coupling strength
//!   lambda by a factor `p` while B is still far from the selected atoms.
//!   A and C always see the projected B, and the final B is the projection.
//! * **Flex-MPALS** uses the same coupled update with a fixed lambda and
//!   never replaces B by the projection; the reported objective adds the
//!   coupling penalty and is nonincreasing per block update when atoms have
//!   unit norm.

use super::{
    mode_ctx, objective_from_ctx, solve_ctx, FitReport, SolverConfig, Unfoldings,
};
use crate::dictionary::{project, select_atoms, Dictionary, Selection};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::numerics::solve_gram;
use crate::tensor::{Factors, Tensor3};
use std::time::Instant;

fn check_inputs(t: &Tensor3, cfg: &SolverConfig, init: &Factors, dict: &Dictionary) -> Result<()> {
    cfg.validate()?;
    if init.dims() != t.dims() {
        return Err(Error::InvalidInput(format!(
            "initial factors are for dims {:?}, tensor is {:?}",
            init.dims(),
            t.dims()
        )));
    }
    if init.rank() != cfg.rank {
        return Err(Error::InvalidInput(format!(
            "initial factors have rank {}, config says {}",
            init.rank(),
            cfg.rank
        )));
    }
    if dict.atom_dim() != t.dims().1 {
        return Err(Error::InvalidInput(format!(
            "atom dimension {} does not match the second tensor mode {}",
            dict.atom_dim(),
            t.dims().1
        )));
    }
    Ok(())
}

fn warn_zero_columns(b: &Matrix, iter: usize, warnings: &mut Vec<String>) {
    let zeros: Vec<usize> = (0..b.cols()).filter(|&j| b.col_norm(j) == 0.0).collect();
    if !zeros.is_empty() {
        warnings.push(format!(
            "outer iteration {iter}: zero B columns {zeros:?} mapped to atom 0"
        ));
    }
}

/// Matching Pursuit ALS: alternating least squares with a hard projection of
/// B onto the closest atoms each outer iteration. Also the matrix workhorse
/// behind the self-dictionary pipeline.
///
/// There is no descent guarantee (the projection can increase the cost), so
/// the best iterate seen is tracked and returned.
pub fn mpals(t: &Tensor3, cfg: &SolverConfig, init: &Factors, dict: &Dictionary) -> Result<FitReport> {
    check_inputs(t, cfg, init, dict)?;
    let started = Instant::now();
    let unf = Unfoldings::new(t)?;
    let mut f = init.clone();
    let mut trace = Vec::new();
    let mut warnings = Vec::new();
    let mut converged = false;
    let mut iterations = 0;
    let mut best: Option<(f64, Factors, Selection)> = None;
    for iter in 1..=cfg.max_outer_iters {
        iterations = iter;
        let ctx = mode_ctx(&unf.t1, &f.b, &f.c)?;
        f.a = solve_ctx(&ctx, cfg.nonneg)?;
        if cfg.normalize_a {
            super::normalize_a_into_c(&mut f.a, &mut f.c);
        }
        let ctx = mode_ctx(&unf.t3, &f.a, &f.b)?;
        f.c = solve_ctx(&ctx, cfg.nonneg)?;

        let ctx = mode_ctx(&unf.t2, &f.a, &f.c)?;
        let b_ls = solve_ctx(&ctx, false)?;
        warn_zero_columns(&b_ls, iter, &mut warnings);
        let sel = select_atoms(&b_ls, dict, cfg.no_repeat, cfg.nonneg)?;
        f.b = project(&sel, dict)?;

        let cost = objective_from_ctx(unf.norm_sq, &f.b, &ctx);
        let cost = super::refined_cost(t, &f, cost, unf.norm_sq);
        trace.push(cost);
        if best.as_ref().map_or(true, |(c, _, _)| cost < *c) {
            best = Some((cost, f.clone(), sel));
        }
        let done = super::is_zero_cost(cost, unf.norm_sq)
            || super::trace_stop(&trace, cfg.stop_tol);
        if done {
            converged = true;
            break;
        }
    }
    let (_, factors, selection) = best.expect("at least one iteration ran");
    Ok(FitReport {
        factors,
        selection: Some(selection),
        cost_trace: trace,
        block_cost_trace: None,
        converged,
        iterations,
        wall_time_s: started.elapsed().as_secs_f64(),
        warnings,
    })
}

/// The coupled B update shared by SMPALS and Flex-MPALS:
/// `B = (unfold(T,2)(A kr C) + lambda * DS) (A^T A . C^T C + lambda I)^(-1)`,
/// supplied here as `rhs = unfold(T,2)(A kr C)`, `gram = A^T A . C^T C`, and
/// the projected factor `b_sel = DS`. Satisfies `B = DS + O(1/lambda)`.
pub fn smpals_b_update(rhs: &Matrix, gram: &Matrix, b_sel: &Matrix, lambda: f64) -> Result<Matrix> {
    let rhs = rhs.add_scaled(lambda, b_sel);
    let mut gram = gram.clone();
    for i in 0..gram.rows() {
        let v = gram.get(i, i) + lambda;
        gram.set(i, i, v);
    }
    solve_gram(&gram, &rhs)
}

/// Annealing rule of SMPALS: grow lambda by `p` while the flexible B is still
/// far from its projection, `||B - DS||_F^2 > 0.01 ||B||_F^2`; re-checked
/// every iteration.
pub fn smpals_lambda_update(lambda: f64, p: f64, gap_sq: f64, b_norm_sq: f64) -> f64 {
    if gap_sq > 0.01 * b_norm_sq {
        p * lambda
    } else {
        lambda
    }
}

/// Smooth MPALS: the flexible B update with annealed coupling, while A and C
/// always see the projected `B = DS`. Converges as lambda grows; the final B
/// is exactly the selected atoms.
pub fn smpals(t: &Tensor3, cfg: &SolverConfig, init: &Factors, dict: &Dictionary) -> Result<FitReport> {
    check_inputs(t, cfg, init, dict)?;
    if !(cfg.lambda > 0.0) {
        return Err(Error::InvalidInput("smpals requires lambda > 0".into()));
    }
    let started = Instant::now();
    let unf = Unfoldings::new(t)?;
    let mut f = init.clone();
    let mut warnings = Vec::new();
    let mut sel = select_atoms(&f.b, dict, cfg.no_repeat, cfg.nonneg)?;
    f.b = project(&sel, dict)?;
    let mut lambda = cfg.lambda;
    let mut trace = Vec::new();
    let mut converged = false;
    let mut iterations = 0;
    let mut best: Option<(f64, Factors, Selection)> = None;
    for iter in 1..=cfg.max_outer_iters {
        iterations = iter;
        let ctx = mode_ctx(&unf.t1, &f.b, &f.c)?;
        f.a = solve_ctx(&ctx, cfg.nonneg)?;
        if cfg.normalize_a {
            super::normalize_a_into_c(&mut f.a, &mut f.c);
        }
        let ctx = mode_ctx(&unf.t3, &f.a, &f.b)?;
        f.c = solve_ctx(&ctx, cfg.nonneg)?;

        let ctx = mode_ctx(&unf.t2, &f.a, &f.c)?;
        let b_flex = smpals_b_update(&ctx.rhs, &ctx.gram, &f.b, lambda)?;
        warn_zero_columns(&b_flex, iter, &mut warnings);
        sel = select_atoms(&b_flex, dict, cfg.no_repeat, cfg.nonneg)?;
        f.b = project(&sel, dict)?;
        let gap = b_flex.add_scaled(-1.0, &f.b).frob_norm_sq();
        lambda = smpals_lambda_update(lambda, cfg.p, gap, b_flex.frob_norm_sq());

        // reported on the projected B so MPALS and SMPALS traces are comparable
        let cost = objective_from_ctx(unf.norm_sq, &f.b, &ctx);
        let cost = super::refined_cost(t, &f, cost, unf.norm_sq);
        trace.push(cost);
        if best.as_ref().map_or(true, |(c, _, _)| cost < *c) {
            best = Some((cost, f.clone(), sel.clone()));
        }
        let done = super::is_zero_cost(cost, unf.norm_sq)
            || super::trace_stop(&trace, cfg.stop_tol);
        if done {
            converged = true;
            break;
        }
    }
    let (_, factors, selection) = best.expect("at least one iteration ran");
    Ok(FitReport {
        factors,
        selection: Some(selection),
        cost_trace: trace,
        block_cost_trace: None,
        converged,
        iterations,
        wall_time_s: started.elapsed().as_secs_f64(),
        warnings,
    })
}

/// Fully flexible MPALS: fixed lambda, B never replaced by the projection.
/// The objective (fit plus `lambda ||B - DS||_F^2`) is nonincreasing at every
/// block update when the atoms have unit norm; with non-unit atoms the solver
/// still runs but flags the lost guarantee.
pub fn flex_mpals(
    t: &Tensor3,
    cfg: &SolverConfig,
    init: &Factors,
    dict: &Dictionary,
) -> Result<FitReport> {
    check_inputs(t, cfg, init, dict)?;
    let started = Instant::now();
    let unf = Unfoldings::new(t)?;
    let mut f = init.clone();
    let mut warnings = Vec::new();
    if !dict.is_unit_norm() {
        warnings.push(
            "dictionary atoms are not unit-norm: the descent guarantee does not apply".into(),
        );
    }
    let mut sel = select_atoms(&f.b, dict, cfg.no_repeat, cfg.nonneg)?;
    let lambda = cfg.lambda;
    let mut trace = Vec::new();
    let mut block_trace = cfg.record_block_costs.then(Vec::new);
    let mut converged = false;
    let mut iterations = 0;

    // Eq.-(9)-style objective: squared fit residual plus coupling penalty.
    let flex_objective = |f: &Factors, sel: &Selection| -> Result<f64> {
        let recon = crate::tensor::cpd_reconstruct(f);
        let fit: f64 = unf
            .t1
            .data()
            .iter()
            .zip(crate::tensor::unfold(&recon, 1)?.data())
            .map(|(a, b)| (a - b) * (a - b))
            .sum();
        let pen = f.b.add_scaled(-1.0, &project(sel, dict)?).frob_norm_sq();
        Ok(fit + lambda * pen)
    };
    let record = |f: &Factors, sel: &Selection, block_trace: &mut Option<Vec<f64>>| -> Result<()> {
        if let Some(tr) = block_trace.as_mut() {
            tr.push(flex_objective(f, sel)?);
        }
        Ok(())
    };

    for iter in 1..=cfg.max_outer_iters {
        iterations = iter;
        let ctx = mode_ctx(&unf.t1, &f.b, &f.c)?;
        f.a = solve_ctx(&ctx, cfg.nonneg)?;
        if cfg.normalize_a {
            super::normalize_a_into_c(&mut f.a, &mut f.c);
        }
        record(&f, &sel, &mut block_trace)?;
        let ctx = mode_ctx(&unf.t3, &f.a, &f.b)?;
        f.c = solve_ctx(&ctx, cfg.nonneg)?;
        record(&f, &sel, &mut block_trace)?;

        let ctx = mode_ctx(&unf.t2, &f.a, &f.c)?;
        f.b = smpals_b_update(&ctx.rhs, &ctx.gram, &project(&sel, dict)?, lambda)?;
        record(&f, &sel, &mut block_trace)?;
        warn_zero_columns(&f.b, iter, &mut warnings);
        sel = select_atoms(&f.b, dict, cfg.no_repeat, cfg.nonneg)?;
        record(&f, &sel, &mut block_trace)?;

        let fit = objective_from_ctx(unf.norm_sq, &f.b, &ctx);
        let fit = super::refined_cost(t, &f, fit, unf.norm_sq);
        let pen = f.b.add_scaled(-1.0, &project(&sel, dict)?).frob_norm_sq();
        let cost = fit + lambda * pen;
        trace.push(cost);
        let done = super::is_zero_cost(cost, unf.norm_sq)
            || super::trace_stop(&trace, cfg.stop_tol);
        if done {
            converged = true;
            break;
        }
    }
    Ok(FitReport {
        factors: f,
        selection: Some(sel),
        cost_trace: trace,
        block_cost_trace: block_trace,
        converged,
        iterations,
        wall_time_s: started.elapsed().as_secs_f64(),
        warnings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dictionary::normalize_atoms;
    use crate::numerics::solve_gram;
    use crate::solvers::{report_rel_err, SolverConfig};
    use crate::tensor::cpd_reconstruct;
    use crate::testutil::{dcpd_instance, normalized_gaussian, unit_dictionary};

    #[test]
    fn mpals_truth_init_fixed_point() {
        let (t, truth, sel, dict) = dcpd_instance((6, 10, 4), 15, 3, 42);
        let cfg = SolverConfig { rank: 3, ..Default::default() };
        let report = mpals(&t, &cfg, &truth, &dict).unwrap();
        assert!(report.converged);
        assert!(report.iterations <= 2);
        assert_eq!(report.selection.as_ref().unwrap().indices, sel.indices);
        assert!(report_rel_err(&t, &report).unwrap() < 1e-10);
    }

    #[test]
    fn mpals_single_atom_dictionary() {
        let (t, truth, _, _) = dcpd_instance((4, 6, 3), 9, 2, 8);
        let dict = unit_dictionary(6, 1, 3);
        let cfg = SolverConfig { rank: 2, max_outer_iters: 5, ..Default::default() };
        let report = mpals(&t, &cfg, &truth, &dict).unwrap();
        assert_eq!(report.selection.as_ref().unwrap().indices, vec![0, 0]);
    }

    #[test]
    fn mpals_improves_over_noisy_random_init() {
        let (t, _, sel_true, dict) = dcpd_instance((8, 16, 5), 24, 3, 17);
        let (noisy, _) = crate::tensor::add_gaussian_noise(&t, 0.01, 99).unwrap();
        let cfg = SolverConfig { rank: 3, max_outer_iters: 300, ..Default::default() };
        let init = crate::solvers::init_random(noisy.dims(), 3, 4);
        let report = mpals(&noisy, &cfg, &init, &dict).unwrap();
        // at this SNR the greedy solver finds the true atoms
        let mut got = report.selection.unwrap().indices;
        let mut want = sel_true.indices;
        got.sort_unstable();
        want.sort_unstable();
        assert_eq!(got, want);
    }

    #[test]
    fn mpals_cost_decreases_for_most_iterations() {
        // the projection step can raise the cost, but decreases dominate
        let mut decreasing = 0usize;
        let mut total = 0usize;
        for seed in 0..10u64 {
            let (t, _, _, dict) = dcpd_instance((8, 16, 5), 24, 3, 900 + seed);
            let (noisy, _) = crate::tensor::add_gaussian_noise(&t, 0.02, seed).unwrap();
            let cfg = SolverConfig { rank: 3, max_outer_iters: 60, stop_tol: 1e-9, ..Default::default() };
            let init = crate::solvers::init_random(noisy.dims(), 3, seed ^ 0xa5);
            let report = mpals(&noisy, &cfg, &init, &dict).unwrap();
            for w in report.cost_trace.windows(2) {
                total += 1;
                if w[1] <= w[0] {
                    decreasing += 1;
                }
            }
        }
        assert!(
            decreasing * 2 > total,
            "only {decreasing}/{total} iterations decreased the cost"
        );
    }

    #[test]
    fn smpals_b_update_lambda_limit_and_zero() {
        for seed in 0..5u64 {
            let rhs = normalized_gaussian(8, 3, seed);
            let g = {
                let m = normalized_gaussian(6, 3, seed ^ 9);
                m.gram()
            };
            let b_sel = normalized_gaussian(8, 3, seed ^ 7);
            let b = smpals_b_update(&rhs, &g, &b_sel, 1e12).unwrap();
            let rel = b.add_scaled(-1.0, &b_sel).frob_norm() / b_sel.frob_norm();
            assert!(rel < 1e-6, "seed {seed}: rel {rel}");
            // lambda = 0 reduces to the unconstrained least-squares update
            let b0 = smpals_b_update(&rhs, &g, &b_sel, 0.0).unwrap();
            let plain = solve_gram(&g, &rhs).unwrap();
            for (x, y) in b0.data().iter().zip(plain.data()) {
                assert!((x - y).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn smpals_lambda_rule() {
        assert_eq!(smpals_lambda_update(2.0, 1.1, 1.0, 1.0), 2.0 * 1.1);
        assert_eq!(smpals_lambda_update(2.0, 1.1, 0.005, 1.0), 2.0);
        assert_eq!(smpals_lambda_update(2.0, 1.1, 0.01, 1.0), 2.0); // boundary: not strictly greater
    }

    #[test]
    fn smpals_truth_init_fixed_point() {
        let (t, truth, sel, dict) = dcpd_instance((6, 10, 4), 15, 3, 23);
        let cfg = SolverConfig { rank: 3, lambda: 0.04, ..Default::default() };
        let report = smpals(&t, &cfg, &truth, &dict).unwrap();
        assert!(report.iterations <= 2);
        assert_eq!(report.selection.as_ref().unwrap().indices, sel.indices);
        assert!(report_rel_err(&t, &report).unwrap() < 1e-10);
        // final B is exactly the selected atoms
        let proj = project(report.selection.as_ref().unwrap(), &dict).unwrap();
        assert_eq!(report.factors.b, proj);
    }

    #[test]
    fn smpals_requires_positive_lambda() {
        let (t, truth, _, dict) = dcpd_instance((4, 6, 3), 9, 2, 2);
        let cfg = SolverConfig { rank: 2, lambda: 0.0, ..Default::default() };
        assert!(smpals(&t, &cfg, &truth, &dict).is_err());
    }

    #[test]
    fn flex_monotone_block_updates() {
        for seed in 0..5u64 {
            let (t, _, _, dict) = dcpd_instance((5, 8, 4), 12, 3, 60 + seed);
            let (noisy, _) = crate::tensor::add_gaussian_noise(&t, 0.05, seed).unwrap();
            let cfg = SolverConfig {
                rank: 3,
                lambda: 0.04,
                max_outer_iters: 50,
                stop_tol: 1e-12,
                record_block_costs: true,
                ..Default::default()
            };
            let init = crate::solvers::init_random(noisy.dims(), 3, seed);
            let report = flex_mpals(&noisy, &cfg, &init, &dict).unwrap();
            let blocks = report.block_cost_trace.unwrap();
            for w in blocks.windows(2) {
                assert!(
                    w[1] <= w[0] * (1.0 + 1e-9) + 1e-12,
                    "seed {seed}: block cost increased {} -> {}",
                    w[0],
                    w[1]
                );
            }
        }
    }

    #[test]
    fn flex_truth_init_fixed_point() {
        let (t, truth, sel, dict) = dcpd_instance((6, 10, 4), 15, 3, 31);
        let cfg = SolverConfig { rank: 3, lambda: 0.04, ..Default::default() };
        let report = flex_mpals(&t, &cfg, &truth, &dict).unwrap();
        assert!(report.iterations <= 2);
        assert_eq!(report.selection.as_ref().unwrap().indices, sel.indices);
        assert!(report_rel_err(&t, &report).unwrap() < 1e-10);
    }

    #[test]
    fn flex_warns_on_non_unit_atoms() {
        let (t, truth, _, dict) = dcpd_instance((4, 6, 3), 9, 2, 6);
        let mut atoms = dict.atoms().clone();
        atoms.scale_col(0, 2.0);
        let skewed = Dictionary::new(atoms, None).unwrap();
        let cfg = SolverConfig { rank: 2, max_outer_iters: 3, ..Default::default() };
        let report = flex_mpals(&t, &cfg, &truth, &skewed).unwrap();
        assert!(report.warnings.iter().any(|w| w.contains("unit-norm")));
        // and the normalized dictionary clears the warning
        let report = flex_mpals(&t, &cfg, &truth, &normalize_atoms(&skewed)).unwrap();
        assert!(report.warnings.is_empty());
    }

    #[test]
    fn flex_zero_lambda_tracks_inert_selection() {
        let (t, _truth, _, dict) = dcpd_instance((5, 8, 4), 12, 3, 71);
        let cfg = SolverConfig { rank: 3, lambda: 0.0, max_outer_iters: 10, ..Default::default() };
        let init = crate::solvers::init_random(t.dims(), 3, 2);
        let report = flex_mpals(&t, &cfg, &init, &dict).unwrap();
        assert!(report.selection.is_some());
        // with lambda = 0 the B update ignores the dictionary entirely, so the
        // flexible factors fit as well as plain ALS would
        let recon = cpd_reconstruct(&report.factors);
        assert!(crate::tensor::rel_frob_err(&t, &recon).unwrap() < 0.5);
    }
}
