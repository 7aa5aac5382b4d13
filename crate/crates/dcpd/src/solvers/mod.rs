//! Decomposition solvers: baseline ALS, its projected variant, the greedy
//! matching-pursuit family (MPALS, SMPALS, Flex-MPALS), and the fast-gradient
//! solver ALS-FG, with shared configuration, stopping, and reporting.
//!
//! Every solver is deterministic given its inputs; independent runs are safe
//! to execute concurrently.

mod fg;
mod mpals;

pub use fg::{als_fg, fg_gradient, fg_safety_step};
pub use mpals::{flex_mpals, mpals, smpals, smpals_b_update, smpals_lambda_update};

use crate::dictionary::{project, select_atoms, Dictionary, Selection};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::rng::rng_from_seed;
use crate::tensor::{cpd_reconstruct, hadamard, khatri_rao, unfold, Factors, Tensor3};
use rand_distr::{Distribution, StandardNormal};
use serde::{Deserialize, Serialize};
use std::time::Instant;

/// Solver configuration. Defaults follow the benchmark protocol: 1000 outer
/// iterations, stopping tolerance 1e-4, coupling lambda 0.04, growth p = 1.1,
/// and 10 fast-gradient iterations per outer iteration.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default)]
pub struct SolverConfig {
    /// Model rank (the estimated rank, possibly different from the true one).
    pub rank: usize,
    pub max_outer_iters: usize,
    /// Relative cost-change threshold `|E_i - E_{i-1}| / E_i`.
    pub stop_tol: f64,
    /// Use nonnegative least squares for every factor update and raw
    /// (sign-free) atom scoring.
    pub nonneg: bool,
    /// Forbid selecting the same atom twice (assignment-based selection).
    pub no_repeat: bool,
    /// Coupling strength for SMPALS (initial) and Flex-MPALS (fixed);
    /// approximates `1/sigma_c^2` of the flexible model.
    pub lambda: f64,
    /// Multiplicative growth of lambda in SMPALS; must exceed 1.
    pub p: f64,
    /// Ceiling of the l1 penalty ramp in ALS-FG.
    pub delta_max: f64,
    /// Fast-gradient iterations per outer iteration in ALS-FG.
    pub fg_inner_iters: usize,
    /// Use the literal "product of squared largest eigenvalues" step-size
    /// constant in ALS-FG instead of the unsquared product.
    pub fg_squared_lipschitz: bool,
    /// Rescale columns of A to unit norm after each A update, absorbing the
    /// scale into C (leaves the reconstruction unchanged).
    pub normalize_a: bool,
    /// Record the objective after every block update (used by convergence
    /// diagnostics; costs one reconstruction per block).
    pub record_block_costs: bool,
    /// Cap on the batch of exact NNLS abundance passes run after a
    /// self-dictionary refinement (the solver exits the batch at its fixed
    /// point).
    pub abundance_refine_passes: usize,
    pub seed: u64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            rank: 1,
            max_outer_iters: 1000,
            stop_tol: 1e-4,
            nonneg: false,
            no_repeat: false,
            lambda: 0.04,
            p: 1.1,
            delta_max: 0.1,
            fg_inner_iters: 10,
            fg_squared_lipschitz: false,
            normalize_a: false,
            record_block_costs: false,
            abundance_refine_passes: 500,
            seed: 0,
        }
    }
}

impl SolverConfig {
    pub fn with_rank(rank: usize) -> Self {
        SolverConfig { rank, ..Default::default() }
    }

    pub fn validate(&self) -> Result<()> {
        if self.rank == 0 {
            return Err(Error::InvalidInput("rank must be positive".into()));
        }
        if self.max_outer_iters == 0 {
            return Err(Error::InvalidInput("max_outer_iters must be positive".into()));
        }
        if !(self.stop_tol > 0.0) {
            return Err(Error::InvalidInput("stop_tol must be positive".into()));
        }
        if self.lambda < 0.0 {
            return Err(Error::InvalidInput("lambda must be nonnegative".into()));
        }
        if !(self.p > 1.0) {
            return Err(Error::InvalidInput("growth factor p must exceed 1".into()));
        }
        if self.delta_max < 0.0 {
            return Err(Error::InvalidInput("delta_max must be nonnegative".into()));
        }
        if self.fg_inner_iters == 0 {
            return Err(Error::InvalidInput("fg_inner_iters must be at least 1".into()));
        }
        Ok(())
    }
}

/// Result of a solver run.
#[derive(Debug, Clone)]
pub struct FitReport {
    pub factors: Factors,
    /// Atom selection; `None` for the unconstrained baseline.
    pub selection: Option<Selection>,
    /// Objective value after each outer iteration (finite, nonnegative).
    pub cost_trace: Vec<f64>,
    /// Objective after every block update, when requested.
    pub block_cost_trace: Option<Vec<f64>>,
    pub converged: bool,
    pub iterations: usize,
    pub wall_time_s: f64,
    pub warnings: Vec<String>,
}

/// Relative-change stopping rule on the last two trace entries:
/// `|E_i - E_{i-1}| / E_i < stop_tol`. An exactly zero current cost counts
/// as converged.
pub fn stopping(cost_trace: &[f64], stop_tol: f64) -> bool {
    let n = cost_trace.len();
    assert!(n >= 2, "stopping needs at least two cost entries");
    let prev = cost_trace[n - 2];
    let cur = cost_trace[n - 1];
    if cur == 0.0 {
        return true;
    }
    (cur - prev).abs() / cur < stop_tol
}

/// [`stopping`] applied to the tail of a cost trace (no-op until two
/// entries exist).
pub(crate) fn trace_stop(trace: &[f64], stop_tol: f64) -> bool {
    trace.len() >= 2 && stopping(trace, stop_tol)
}

/// Random factors: i.i.d. standard-normal entries with every column scaled to
/// unit l2 norm. Deterministic under `seed`.
pub fn init_random(dims: (usize, usize, usize), rank: usize, seed: u64) -> Factors {
    let mut rng = rng_from_seed(seed);
    let mut draw = |rows: usize| {
        let mut m = Matrix::from_fn(rows, rank, |_, _| StandardNormal.sample(&mut rng));
        m.normalize_cols();
        m
    };
    let a = draw(dims.0);
    let b = draw(dims.1);
    let c = draw(dims.2);
    Factors::new(a, b, c).expect("consistent by construction")
}

/// Normal-equation pieces for one mode: `rhs = unfold(T, mode) * kr` and the
/// Hadamard Gram of the two other factors. Both depend only on the factors
/// of the other modes.
pub(crate) struct ModeCtx {
    pub rhs: Matrix,
    pub gram: Matrix,
}

pub(crate) fn mode_ctx(unfolding: &Matrix, x: &Matrix, y: &Matrix) -> Result<ModeCtx> {
    let kr = khatri_rao(x, y)?;
    if unfolding.cols() != kr.rows() {
        return Err(Error::InvalidInput(format!(
            "unfolding has {} columns but the Khatri-Rao product has {} rows",
            unfolding.cols(),
            kr.rows()
        )));
    }
    let rhs = unfolding.matmul(&kr);
    let gram = hadamard(&x.gram(), &y.gram())?;
    Ok(ModeCtx { rhs, gram })
}

/// `||T||_F^2 - 2 <F, rhs> + <F^T F, gram>`, the squared-residual objective
/// expressed through the normal-equation pieces of the mode that owns factor
/// `f`. Clamped at zero against cancellation.
pub(crate) fn objective_from_ctx(t_norm_sq: f64, f: &Matrix, ctx: &ModeCtx) -> f64 {
    let inner: f64 = f.data().iter().zip(ctx.rhs.data()).map(|(a, b)| a * b).sum();
    let fg: f64 = f.gram().data().iter().zip(ctx.gram.data()).map(|(a, b)| a * b).sum();
    (t_norm_sq - 2.0 * inner + fg).max(0.0)
}

/// The fast objective above cancels three O(||T||^2) terms, so near an exact
/// fit it bottoms out at roundoff. Below this relative level the cost is
/// recomputed entrywise (no cancellation), and below `ZERO_COST` an iterate
/// counts as an exact fixed point.
pub(crate) const NEARLY_EXACT: f64 = 1e-10;
pub(crate) const ZERO_COST: f64 = 1e-26;

pub(crate) fn exact_fit_cost(t: &Tensor3, f: &Factors) -> f64 {
    let recon = cpd_reconstruct(f);
    t.data()
        .iter()
        .zip(recon.data())
        .map(|(a, b)| (a - b) * (a - b))
        .sum()
}

pub(crate) fn refined_cost(t: &Tensor3, f: &Factors, fast_cost: f64, norm_sq: f64) -> f64 {
    if fast_cost < NEARLY_EXACT * norm_sq {
        exact_fit_cost(t, f)
    } else {
        fast_cost
    }
}

pub(crate) fn is_zero_cost(cost: f64, norm_sq: f64) -> bool {
    cost <= ZERO_COST * norm_sq
}

pub(crate) fn solve_ctx(ctx: &ModeCtx, nonneg: bool) -> Result<Matrix> {
    if nonneg {
        crate::numerics::nnls(&ctx.gram, &ctx.rhs)
    } else {
        crate::numerics::solve_gram(&ctx.gram, &ctx.rhs)
    }
}

/// The three unfoldings of the data tensor, computed once per solver run.
pub(crate) struct Unfoldings {
    pub t1: Matrix,
    pub t2: Matrix,
    pub t3: Matrix,
    pub norm_sq: f64,
}

impl Unfoldings {
    pub fn new(t: &Tensor3) -> Result<Self> {
        Ok(Unfoldings {
            t1: unfold(t, 1)?,
            t2: unfold(t, 2)?,
            t3: unfold(t, 3)?,
            norm_sq: t.frob_norm_sq(),
        })
    }
}

fn check_dims(t: &Tensor3, init: &Factors, cfg: &SolverConfig) -> Result<()> {
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
    Ok(())
}

/// Least-squares update of one factor given the other two, solving the
/// normal equations `F (X^T X . Y^T Y) = unfold(T, mode) (X kr Y)`.
pub fn ls_update_factor(t: &Tensor3, mode: usize, f: &Factors) -> Result<Matrix> {
    let unfolding = unfold(t, mode)?;
    let ctx = match mode {
        1 => mode_ctx(&unfolding, &f.b, &f.c)?,
        2 => mode_ctx(&unfolding, &f.a, &f.c)?,
        3 => mode_ctx(&unfolding, &f.a, &f.b)?,
        _ => return Err(Error::InvalidInput(format!("invalid mode {mode}"))),
    };
    solve_ctx(&ctx, false)
}

/// Rescales columns of `a` to unit norm, absorbing the scales into `c`.
/// Leaves the reconstructed tensor unchanged; zero columns are skipped.
pub fn normalize_a_into_c(a: &mut Matrix, c: &mut Matrix) {
    for j in 0..a.cols() {
        let n = a.col_norm(j);
        if n > 0.0 {
            a.scale_col(j, 1.0 / n);
            c.scale_col(j, n);
        }
    }
}

fn attach_iter<T>(res: Result<T>, what: &str, iter: usize) -> Result<T> {
    res.map_err(|e| match e {
        Error::DegenerateGram(ctx) => {
            Error::DegenerateGram(format!("{ctx} ({what} update, outer iteration {iter})"))
        }
        other => other,
    })
}

/// Unconstrained (or nonnegative) CPD by alternating least squares, cycling
/// A, B, C until the relative cost change drops below `stop_tol`.
pub fn als_cpd(t: &Tensor3, cfg: &SolverConfig, init: &Factors) -> Result<FitReport> {
    check_dims(t, init, cfg)?;
    let started = Instant::now();
    let unf = Unfoldings::new(t)?;
    let mut f = init.clone();
    let mut trace = Vec::new();
    let mut converged = false;
    let mut iterations = 0;
    for iter in 1..=cfg.max_outer_iters {
        iterations = iter;
        let ctx = attach_iter(mode_ctx(&unf.t1, &f.b, &f.c), "A", iter)?;
        f.a = attach_iter(solve_ctx(&ctx, cfg.nonneg), "A", iter)?;
        if cfg.normalize_a {
            normalize_a_into_c(&mut f.a, &mut f.c);
        }
        let ctx = attach_iter(mode_ctx(&unf.t2, &f.a, &f.c), "B", iter)?;
        f.b = attach_iter(solve_ctx(&ctx, cfg.nonneg), "B", iter)?;
        let ctx = attach_iter(mode_ctx(&unf.t3, &f.a, &f.b), "C", iter)?;
        f.c = attach_iter(solve_ctx(&ctx, cfg.nonneg), "C", iter)?;
        let cost = objective_from_ctx(unf.norm_sq, &f.c, &ctx);
        let cost = refined_cost(t, &f, cost, unf.norm_sq);
        trace.push(cost);
        let done = is_zero_cost(cost, unf.norm_sq) || trace_stop(&trace, cfg.stop_tol);
        if done {
            converged = true;
            break;
        }
    }
    Ok(FitReport {
        factors: f,
        selection: None,
        cost_trace: trace,
        block_cost_trace: None,
        converged,
        iterations,
        wall_time_s: started.elapsed().as_secs_f64(),
        warnings: Vec::new(),
    })
}

/// Comparison baseline: run [`als_cpd`] to termination, project B onto the
/// dictionary once, then re-solve A and C once by (nonnegative) least squares.
pub fn projected_als(
    t: &Tensor3,
    cfg: &SolverConfig,
    init: &Factors,
    dict: &Dictionary,
) -> Result<FitReport> {
    let started = Instant::now();
    let mut report = als_cpd(t, cfg, init)?;
    let unf = Unfoldings::new(t)?;
    let sel = select_atoms(&report.factors.b, dict, cfg.no_repeat, cfg.nonneg)?;
    report.factors.b = project(&sel, dict)?;
    let ctx = mode_ctx(&unf.t1, &report.factors.b, &report.factors.c)?;
    report.factors.a = solve_ctx(&ctx, cfg.nonneg)?;
    let ctx = mode_ctx(&unf.t3, &report.factors.a, &report.factors.b)?;
    report.factors.c = solve_ctx(&ctx, cfg.nonneg)?;
    report.cost_trace.push(objective_from_ctx(unf.norm_sq, &report.factors.c, &ctx));
    report.selection = Some(sel);
    report.wall_time_s = started.elapsed().as_secs_f64();
    Ok(report)
}

/// Solver selector used by the CLI and the benchmark harness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SolverKind {
    Als,
    ProjectedAls,
    Mpals,
    Smpals,
    FlexMpals,
    AlsFg,
}

impl SolverKind {
    pub const ALL: [SolverKind; 6] = [
        SolverKind::Als,
        SolverKind::ProjectedAls,
        SolverKind::Mpals,
        SolverKind::Smpals,
        SolverKind::FlexMpals,
        SolverKind::AlsFg,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            SolverKind::Als => "als",
            SolverKind::ProjectedAls => "projected-als",
            SolverKind::Mpals => "mpals",
            SolverKind::Smpals => "smpals",
            SolverKind::FlexMpals => "flex-mpals",
            SolverKind::AlsFg => "als-fg",
        }
    }

    pub fn needs_dictionary(&self) -> bool {
        !matches!(self, SolverKind::Als)
    }
}

impl std::fmt::Display for SolverKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for SolverKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SolverKind::ALL
            .iter()
            .copied()
            .find(|k| k.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = SolverKind::ALL.iter().map(|k| k.name()).collect();
                Error::InvalidInput(format!(
                    "unknown solver '{s}'; valid names: {}",
                    names.join(", ")
                ))
            })
    }
}

/// Dispatches to the named solver. `dict` is required by everything except
/// the unconstrained baseline.
pub fn run_solver(
    kind: SolverKind,
    t: &Tensor3,
    cfg: &SolverConfig,
    init: &Factors,
    dict: Option<&Dictionary>,
) -> Result<FitReport> {
    fn need<'a>(kind: SolverKind, d: Option<&'a Dictionary>) -> Result<&'a Dictionary> {
        d.ok_or_else(|| {
            Error::InvalidInput(format!("solver '{}' requires a dictionary", kind.name()))
        })
    }
    match kind {
        SolverKind::Als => als_cpd(t, cfg, init),
        SolverKind::ProjectedAls => projected_als(t, cfg, init, need(kind, dict)?),
        SolverKind::Mpals => mpals(t, cfg, init, need(kind, dict)?),
        SolverKind::Smpals => smpals(t, cfg, init, need(kind, dict)?),
        SolverKind::FlexMpals => flex_mpals(t, cfg, init, need(kind, dict)?),
        SolverKind::AlsFg => als_fg(t, cfg, init, need(kind, dict)?),
    }
}

/// Relative reconstruction error of a report against a reference tensor.
pub fn report_rel_err(t: &Tensor3, report: &FitReport) -> Result<f64> {
    crate::tensor::rel_frob_err(t, &cpd_reconstruct(&report.factors))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tensor::rel_frob_err;
    use crate::testutil::dcpd_instance;

    #[test]
    fn stopping_cases() {
        assert!(stopping(&[1.0, 1.0], 1e-12));
        assert!(!stopping(&[1.0, 0.5], 1e-4));
        assert!(stopping(&[2.0, 1.9999], 1e-4)); // 5e-5 < 1e-4
        assert!(stopping(&[0.5, 0.0], 1e-4));
    }

    #[test]
    fn init_random_properties() {
        let f1 = init_random((4, 5, 3), 2, 9);
        let f2 = init_random((4, 5, 3), 2, 9);
        assert_eq!(f1.a, f2.a);
        assert_eq!(f1.b, f2.b);
        assert_eq!(f1.c, f2.c);
        for m in [&f1.a, &f1.b, &f1.c] {
            for j in 0..m.cols() {
                assert!((m.col_norm(j) - 1.0).abs() < 1e-12);
            }
        }
        let f3 = init_random((4, 5, 3), 2, 10);
        assert_ne!(f1.a, f3.a);
    }

    #[test]
    fn config_validation() {
        let mut cfg = SolverConfig::with_rank(0);
        assert!(cfg.validate().is_err());
        cfg.rank = 2;
        cfg.p = 1.0;
        assert!(cfg.validate().is_err());
        cfg.p = 1.1;
        cfg.fg_inner_iters = 0;
        assert!(cfg.validate().is_err());
        cfg.fg_inner_iters = 10;
        assert!(cfg.validate().is_ok());
    }

    #[test]
    fn ls_update_recovers_exact_factor() {
        let (t, truth, _, _) = dcpd_instance((5, 8, 4), 12, 3, 7);
        let mut guess = truth.clone();
        guess.b = Matrix::zeros(8, 3);
        let b = ls_update_factor(&t, 2, &guess).unwrap();
        for (x, y) in b.data().iter().zip(truth.b.data()) {
            assert!((x - y).abs() < 1e-10);
        }
        // normal-equation residual
        let unf = Unfoldings::new(&t).unwrap();
        let ctx = mode_ctx(&unf.t2, &truth.a, &truth.c).unwrap();
        let resid = b.matmul(&ctx.gram).add_scaled(-1.0, &ctx.rhs);
        assert!(resid.frob_norm() < 1e-8 * unf.norm_sq.sqrt());
    }

    #[test]
    fn ls_update_rank_one_orthonormal() {
        // R = 1 with unit-norm a and c: Gram is 1, so B = unfold(T,2)(a kr c)
        let a = Matrix::from_vec(2, 1, vec![1.0, 0.0]).unwrap();
        let c = Matrix::from_vec(3, 1, vec![0.0, 1.0, 0.0]).unwrap();
        let b = Matrix::from_vec(4, 1, vec![0.4, -0.2, 0.8, 0.1]).unwrap();
        let f = Factors::new(a.clone(), b.clone(), c.clone()).unwrap();
        let t = cpd_reconstruct(&f);
        let unf = unfold(&t, 2).unwrap();
        let kr = khatri_rao(&a, &c).unwrap();
        let expect = unf.matmul(&kr);
        let update = ls_update_factor(&t, 2, &f).unwrap();
        for (x, y) in update.data().iter().zip(expect.data()) {
            assert!((x - y).abs() < 1e-12);
        }
    }

    #[test]
    fn normalize_a_keeps_reconstruction() {
        let (t, mut f, _, _) = dcpd_instance((4, 6, 3), 9, 2, 21);
        f.a.scale_col(0, 3.0);
        f.a.scale_col(1, 0.2);
        let before = cpd_reconstruct(&f);
        normalize_a_into_c(&mut f.a, &mut f.c);
        let after = cpd_reconstruct(&f);
        assert!(rel_frob_err(&before, &after).unwrap() < 1e-12);
        for j in 0..f.a.cols() {
            assert!((f.a.col_norm(j) - 1.0).abs() < 1e-12);
        }
        let _ = t;
    }

    #[test]
    fn als_truth_init_is_fixed_point() {
        let (t, truth, _, _) = dcpd_instance((5, 9, 4), 14, 3, 3);
        let cfg = SolverConfig { rank: 3, ..Default::default() };
        let report = als_cpd(&t, &cfg, &truth).unwrap();
        assert!(report.converged);
        assert_eq!(report.iterations, 1);
        assert!(report_rel_err(&t, &report).unwrap() < 1e-10);
    }

    #[test]
    fn als_cost_nonincreasing_over_seeds() {
        for seed in 0..20u64 {
            let (t, _, _, _) = dcpd_instance((4, 7, 3), 10, 2, 100 + seed);
            let (noisy, _) = crate::tensor::add_gaussian_noise(&t, 0.05, seed).unwrap();
            let cfg = SolverConfig { rank: 2, max_outer_iters: 40, ..Default::default() };
            let init = init_random(noisy.dims(), 2, seed ^ 0xf00d);
            let report = als_cpd(&noisy, &cfg, &init).unwrap();
            for w in report.cost_trace.windows(2) {
                assert!(
                    w[1] <= w[0] * (1.0 + 1e-9) + 1e-12,
                    "seed {seed}: cost increased {} -> {}",
                    w[0],
                    w[1]
                );
            }
        }
    }

    #[test]
    fn als_rank_one_recovery() {
        let (t, _, _, _) = dcpd_instance((5, 6, 4), 8, 1, 55);
        let cfg = SolverConfig { rank: 1, stop_tol: 1e-12, ..Default::default() };
        let init = init_random(t.dims(), 1, 9);
        let report = als_cpd(&t, &cfg, &init).unwrap();
        assert!(report_rel_err(&t, &report).unwrap() < 1e-8);
    }

    #[test]
    fn nonneg_als_produces_nonnegative_factors() {
        // nonnegative ground truth
        let mut f = dcpd_instance((4, 6, 3), 9, 2, 77).1;
        for m in [&mut f.a, &mut f.b, &mut f.c] {
            for v in m.data_mut() {
                *v = v.abs();
            }
        }
        let t = cpd_reconstruct(&f);
        let cfg = SolverConfig { rank: 2, nonneg: true, max_outer_iters: 60, ..Default::default() };
        let init = init_random(t.dims(), 2, 1);
        let mut init = init;
        for m in [&mut init.a, &mut init.b, &mut init.c] {
            for v in m.data_mut() {
                *v = v.abs();
            }
        }
        let report = als_cpd(&t, &cfg, &init).unwrap();
        for m in [&report.factors.a, &report.factors.b, &report.factors.c] {
            assert!(m.data().iter().all(|&v| v >= 0.0));
        }
    }

    #[test]
    fn projected_als_exact_when_b_is_atoms() {
        let (t, truth, sel, dict) = dcpd_instance((5, 8, 4), 12, 3, 13);
        let cfg = SolverConfig { rank: 3, ..Default::default() };
        let report = projected_als(&t, &cfg, &truth, &dict).unwrap();
        assert_eq!(report.selection.as_ref().unwrap().indices, sel.indices);
        assert!(report_rel_err(&t, &report).unwrap() < 1e-10);
    }

    #[test]
    fn dispatch_requires_dictionary() {
        let (t, truth, _, _) = dcpd_instance((4, 6, 3), 9, 2, 5);
        let cfg = SolverConfig { rank: 2, ..Default::default() };
        assert!(run_solver(SolverKind::Mpals, &t, &cfg, &truth, None).is_err());
        assert!(run_solver(SolverKind::Als, &t, &cfg, &truth, None).is_ok());
        assert_eq!("mpals".parse::<SolverKind>().unwrap(), SolverKind::Mpals);
        assert!("bogus".parse::<SolverKind>().is_err());
    }
}
