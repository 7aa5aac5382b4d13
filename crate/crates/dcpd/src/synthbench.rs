//! Synthetic benchmark harness: class-structured dictionary generation,
//! conditioned factor generation, Monte Carlo grids over the estimated rank
//! and the conditioning of C, and the identification / error metrics.
//!
//! Every trial derives its seeds from the base seed and the trial index, so a
//! grid rerun is bit-identical regardless of how trials are scheduled. A
//! single dictionary realization is shared by all trials of a grid.

use crate::dictionary::{project, Dictionary, Selection};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::numerics::assignment_max;
use crate::rng::{derive_seed, rng_from_seed, trial_seed};
use crate::solvers::{
    als_cpd, init_random, mpals, report_rel_err, run_solver, FitReport, SolverConfig, SolverKind,
};
use crate::tensor::{add_gaussian_noise, cpd_reconstruct, Factors, Tensor3};
use rand::seq::index::sample;
use rand::Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::time::Instant;

const DICT_STREAM: u64 = 0xD1C7;
const FACTOR_STREAM: u64 = 1;
const NOISE_STREAM: u64 = 2;
const INIT_STREAM: u64 = 3;
const RAND_INIT_STREAM: u64 = 4;

/// Benchmark specification. Defaults reproduce the synthetic protocol:
/// 20 x 50 x 7 tensors, 1000 atoms in 50 classes, true rank 10, noise 0.01
/// (about 11.5 dB SNR), estimated ranks 7..13, conditioning grid on rho.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default)]
pub struct SynthSpec {
    pub dims: (usize, usize, usize),
    pub atoms: usize,
    pub classes: usize,
    pub rank: usize,
    pub re_values: Vec<usize>,
    pub sigma: f64,
    pub rho_values: Vec<f64>,
    pub trials: usize,
    pub base_seed: u64,
    pub init: InitPolicy,
    /// Template for per-solver configuration; `rank` and `seed` are set per
    /// cell and trial.
    pub solver_cfg: SolverConfig,
}

impl Default for SynthSpec {
    fn default() -> Self {
        SynthSpec {
            dims: (20, 50, 7),
            atoms: 1000,
            classes: 50,
            rank: 10,
            re_values: (7..=13).collect(),
            sigma: 0.01,
            rho_values: vec![0.1, 0.5, 1.0],
            trials: 100,
            base_seed: 0,
            init: InitPolicy::Als,
            solver_cfg: SolverConfig::default(),
        }
    }
}

impl SynthSpec {
    pub fn validate(&self) -> Result<()> {
        let (k, l, m) = self.dims;
        if k == 0 || l == 0 || m == 0 || self.atoms == 0 || self.classes == 0 || self.rank == 0 {
            return Err(Error::InvalidInput("all benchmark sizes must be positive".into()));
        }
        if self.atoms % self.classes != 0 {
            return Err(Error::InvalidInput(format!(
                "class count {} must divide atom count {}",
                self.classes, self.atoms
            )));
        }
        if self.rank > self.classes {
            return Err(Error::InvalidInput(format!(
                "rank {} exceeds class count {} (one atom per class)",
                self.rank, self.classes
            )));
        }
        if self.sigma < 0.0 {
            return Err(Error::InvalidInput("sigma must be nonnegative".into()));
        }
        if self.rho_values.iter().any(|&r| !(0.0..=1.0).contains(&r)) {
            return Err(Error::InvalidInput("rho values must lie in [0, 1]".into()));
        }
        if self.re_values.iter().any(|&re| re == 0) {
            return Err(Error::InvalidInput("estimated ranks must be positive".into()));
        }
        if self.trials == 0 {
            return Err(Error::InvalidInput("at least one trial is required".into()));
        }
        self.solver_cfg.validate_template()
    }
}

/// How solvers are initialized in the grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum InitPolicy {
    /// Run the unconstrained ALS baseline and start every solver from its
    /// output (the protocol default).
    Als,
    /// Start every solver at the ground truth (diagnostics only).
    Truth,
}

impl SolverConfig {
    fn validate_template(&self) -> Result<()> {
        // rank is overridden per cell, everything else must be valid
        let mut probe = self.clone();
        probe.rank = 1;
        probe.validate()
    }
}

/// Solvers the benchmark can run: the standard kinds plus randomly
/// initialized MPALS with a five-fold iteration cap.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BenchSolver {
    Als,
    ProjectedAls,
    Mpals,
    Smpals,
    FlexMpals,
    AlsFg,
    RandMpals,
}

impl BenchSolver {
    /// The comparison set: projected baseline, the DCPD family, and
    /// randomly initialized MPALS.
    pub const DEFAULT: [BenchSolver; 6] = [
        BenchSolver::ProjectedAls,
        BenchSolver::Mpals,
        BenchSolver::Smpals,
        BenchSolver::FlexMpals,
        BenchSolver::AlsFg,
        BenchSolver::RandMpals,
    ];

    pub const ALL: [BenchSolver; 7] = [
        BenchSolver::Als,
        BenchSolver::ProjectedAls,
        BenchSolver::Mpals,
        BenchSolver::Smpals,
        BenchSolver::FlexMpals,
        BenchSolver::AlsFg,
        BenchSolver::RandMpals,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            BenchSolver::Als => "als",
            BenchSolver::ProjectedAls => "projected-als",
            BenchSolver::Mpals => "mpals",
            BenchSolver::Smpals => "smpals",
            BenchSolver::FlexMpals => "flex-mpals",
            BenchSolver::AlsFg => "als-fg",
            BenchSolver::RandMpals => "rand-mpals",
        }
    }
}

impl std::fmt::Display for BenchSolver {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for BenchSolver {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BenchSolver::ALL
            .iter()
            .copied()
            .find(|k| k.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = BenchSolver::ALL.iter().map(|k| k.name()).collect();
                Error::InvalidInput(format!(
                    "unknown benchmark solver '{s}'; valid names: {}",
                    names.join(", ")
                ))
            })
    }
}

fn sinc(x: f64) -> f64 {
    if x == 0.0 {
        1.0
    } else {
        x.sin() / x
    }
}

/// Triangular pulse of support [-2, 2].
fn tri(x: f64) -> f64 {
    (1.0 - x.abs() / 2.0).max(0.0)
}

struct ClassParams {
    slope: f64,
    offset: f64,
}

fn draw_atom(rng: &mut impl Rng, class: &ClassParams, l: usize) -> Vec<f64> {
    let nu = rng.gen_range(-0.25..=0.25);
    let mu = rng.gen_range(-0.25..=0.25);
    let e = rng.gen_range(1..=l) as f64;
    let f = rng.gen_range(1..=l) as f64;
    (1..=l)
        .map(|ui| {
            let u = ui as f64;
            (class.slope * u
                + class.offset
                + nu * sinc(std::f64::consts::PI / 6.0 * u - e)
                + mu * (tri(u - f + 2.0) - tri(u - f - 2.0)))
            .abs()
        })
        .collect()
}

/// Class-structured synthetic dictionary: each class shares a linear
/// baseline, atoms add a sinc feature and a two-lobe triangular feature, all
/// entries are absolute values, and every atom is scaled to unit l2 norm.
/// Collinear atom pairs are regenerated (bounded retries).
pub fn gen_dictionary(spec: &SynthSpec, seed: u64) -> Result<Dictionary> {
    let (_, l, _) = spec.dims;
    let per_class = spec.atoms / spec.classes;
    let mut rng = rng_from_seed(seed);
    let mut columns: Vec<Vec<f64>> = Vec::with_capacity(spec.atoms);
    let mut labels = Vec::with_capacity(spec.atoms);
    let mut class_params = Vec::with_capacity(spec.classes);
    for k in 0..spec.classes {
        let class = ClassParams {
            slope: rng.gen_range(-1.0 / l as f64..=1.0 / l as f64),
            offset: rng.gen_range(-1.0..=1.0),
        };
        for _ in 0..per_class {
            columns.push(draw_atom(&mut rng, &class, l));
            labels.push(k);
        }
        class_params.push(class);
    }
    let normalize = |col: &mut Vec<f64>| -> Result<()> {
        let n: f64 = col.iter().map(|v| v * v).sum::<f64>().sqrt();
        if n == 0.0 {
            return Err(Error::Numerical("generated a zero atom".into()));
        }
        col.iter_mut().for_each(|v| *v /= n);
        Ok(())
    };
    for col in columns.iter_mut() {
        normalize(col)?;
    }
    // regenerate until no two atoms are collinear
    const COLLINEAR: f64 = 1.0 - 1e-10;
    for _round in 0..100 {
        let mut offender = None;
        'scan: for i in 0..spec.atoms {
            for j in i + 1..spec.atoms {
                let dot: f64 = columns[i].iter().zip(&columns[j]).map(|(a, b)| a * b).sum();
                if dot.abs() >= COLLINEAR {
                    offender = Some(j);
                    break 'scan;
                }
            }
        }
        match offender {
            None => {
                let mut atoms = Matrix::zeros(l, spec.atoms);
                for (j, col) in columns.iter().enumerate() {
                    atoms.set_col(j, col);
                }
                return Ok(Dictionary::new(atoms, Some(labels))?);
            }
            Some(j) => {
                let mut col = draw_atom(&mut rng, &class_params[labels[j]], l);
                normalize(&mut col)?;
                columns[j] = col;
            }
        }
    }
    Err(Error::Numerical("failed to generate a collinearity-free dictionary".into()))
}

/// Largest |cosine| between two atoms of the same class; the paper's
/// correlation diagnostic.
pub fn max_intraclass_cosine(dict: &Dictionary) -> f64 {
    let Some(labels) = dict.class_labels() else {
        return f64::NAN;
    };
    let d = dict.len();
    let mut best = 0.0f64;
    for i in 0..d {
        for j in i + 1..d {
            if labels[i] == labels[j] {
                let c = dict.atoms().col_dot(i, dict.atoms(), j).abs()
                    / (dict.atom_norm(i) * dict.atom_norm(j));
                best = best.max(c);
            }
        }
    }
    best
}

/// True factors: A and C standard normal with unit columns, and a selection
/// that picks one atom in each of `rank` distinct classes.
pub fn gen_factors(spec: &SynthSpec, dict: &Dictionary, seed: u64) -> Result<(Factors, Selection)> {
    let (k, _, m) = spec.dims;
    let per_class = spec.atoms / spec.classes;
    let mut rng = rng_from_seed(seed);
    let mut draw = |rows: usize| {
        let mut mtx = Matrix::from_fn(rows, spec.rank, |_, _| StandardNormal.sample(&mut rng));
        mtx.normalize_cols();
        mtx
    };
    let a = draw(k);
    let c = draw(m);
    let classes = sample(&mut rng, spec.classes, spec.rank).into_vec();
    let indices: Vec<usize> = classes
        .iter()
        .map(|&cl| cl * per_class + rng.gen_range(0..per_class))
        .collect();
    let sel = Selection::new(indices, vec![1; spec.rank])?;
    let b = project(&sel, dict)?;
    Ok((Factors::new(a, b, c)?, sel))
}

/// Conditioning transform: `C <- C (rho I + (1 - rho)/R * ones)` followed by
/// column normalization. `rho = 1` leaves C unchanged, `rho = 0` collapses it
/// to column rank one.
pub fn condition_c(c: &Matrix, rho: f64) -> Result<Matrix> {
    if !(0.0..=1.0).contains(&rho) {
        return Err(Error::InvalidInput(format!("rho {rho} outside [0, 1]")));
    }
    let r = c.cols();
    let mix = Matrix::from_fn(r, r, |i, j| {
        let base = (1.0 - rho) / r as f64;
        if i == j {
            rho + base
        } else {
            base
        }
    });
    let mut out = c.matmul(&mix);
    out.normalize_cols();
    Ok(out)
}

/// Fraction of atom indices present in both selections (maximum matching on
/// exact index equality), normalized by `max(R, Re)`; unmatched columns under
/// rank mismatch count as misses.
pub fn identification_rate(s_true: &Selection, s_est: &Selection, r: usize, re: usize) -> f64 {
    let mut true_counts: BTreeMap<usize, usize> = BTreeMap::new();
    for &i in &s_true.indices {
        *true_counts.entry(i).or_insert(0) += 1;
    }
    let mut matched = 0usize;
    for &i in &s_est.indices {
        if let Some(cnt) = true_counts.get_mut(&i) {
            if *cnt > 0 {
                *cnt -= 1;
                matched += 1;
            }
        }
    }
    matched as f64 / r.max(re) as f64
}

/// Best achievable identification rate under rank mismatch.
pub fn oracle_rate(r: usize, re: usize) -> f64 {
    r.min(re) as f64 / r.max(re) as f64
}

/// The forced-miss fraction `|Re - R| / max(Re, R)`, the complementary
/// quantity to [`oracle_rate`].
pub fn oracle_miss(r: usize, re: usize) -> f64 {
    (r as f64 - re as f64).abs() / r.max(re) as f64
}

/// Permutation- and scale-invariant relative squared error on B: columns are
/// matched by an assignment maximizing the summed `||b_i||^2 cos^2`
/// similarity (which exactly minimizes the matched error), each matched
/// column is optimally rescaled, and unmatched true columns count in full.
pub fn rmse_b(b_true: &Matrix, b_est: &Matrix) -> Result<f64> {
    if b_true.rows() != b_est.rows() {
        return Err(Error::InvalidInput(format!(
            "factor row counts differ: {} vs {}",
            b_true.rows(),
            b_est.rows()
        )));
    }
    let denom = b_true.frob_norm_sq();
    if denom == 0.0 {
        return Err(Error::InvalidInput("rmse undefined for zero reference factor".into()));
    }
    let rt = b_true.cols();
    let rest = b_est.cols();
    // weights[i][j] = <b_i, bhat_j>^2 / ||bhat_j||^2 = ||b_i||^2 cos^2
    let weight = |i: usize, j: usize| -> f64 {
        let dot = b_true.col_dot(i, b_est, j);
        let nest = b_est.col_norm(j);
        if nest == 0.0 {
            0.0
        } else {
            (dot / nest).powi(2)
        }
    };
    let matched_weight = if rest >= rt {
        let scores = Matrix::from_fn(rt, rest, |i, j| weight(i, j));
        assignment_max(&scores)?.total_score
    } else {
        // fewer estimated columns: assign each of them to a distinct true one
        let scores = Matrix::from_fn(rest, rt, |j, i| weight(i, j));
        assignment_max(&scores)?.total_score
    };
    Ok(((denom - matched_weight) / denom).max(0.0))
}

/// Identifier of one grid cell.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GridCell {
    /// "Re" or "rho".
    pub param: GridParam,
    pub value: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GridParam {
    Re,
    Rho,
}

impl GridParam {
    pub fn name(&self) -> &'static str {
        match self {
            GridParam::Re => "Re",
            GridParam::Rho => "rho",
        }
    }
}

/// One successful solver run within one trial.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TrialRecord {
    pub cell: GridCell,
    pub solver: BenchSolver,
    pub trial: usize,
    /// `None` when the solver has no atom selection (plain ALS).
    pub id_rate: Option<f64>,
    pub rmse_b: f64,
    pub rel_err: f64,
    pub runtime_s: f64,
    /// `None` for noiseless data (infinite SNR).
    pub snr_db: Option<f64>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TrialFailure {
    pub cell: GridCell,
    pub solver: BenchSolver,
    pub trial: usize,
    pub error: String,
}

/// Aggregated metrics for one (cell, solver) pair.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CellSummary {
    pub cell: GridCell,
    pub solver: BenchSolver,
    pub trials_ok: usize,
    pub trials_failed: usize,
    /// More than 10% of the cell's trials failed.
    pub flagged: bool,
    pub mean_id_rate: Option<f64>,
    pub std_id_rate: Option<f64>,
    pub mean_rmse_b: f64,
    pub std_rmse_b: f64,
    pub mean_rel_err: f64,
    pub mean_runtime_s: f64,
    pub mean_snr_db: Option<f64>,
    pub oracle_rate: f64,
    pub oracle_miss: f64,
}

/// Full benchmark output: per-trial records plus per-cell aggregates.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ExperimentReport {
    pub spec: SynthSpec,
    pub solvers: Vec<BenchSolver>,
    pub max_intraclass_cosine: f64,
    pub records: Vec<TrialRecord>,
    pub failures: Vec<TrialFailure>,
    pub summaries: Vec<CellSummary>,
}

impl ExperimentReport {
    pub fn summary(&self, param: GridParam, value: f64, solver: BenchSolver) -> Option<&CellSummary> {
        self.summaries
            .iter()
            .find(|s| s.cell.param == param && s.cell.value == value && s.solver == solver)
    }
}

fn cells_of(spec: &SynthSpec) -> Vec<GridCell> {
    let mut cells = Vec::new();
    for &re in &spec.re_values {
        cells.push(GridCell { param: GridParam::Re, value: re as f64 });
    }
    for &rho in &spec.rho_values {
        cells.push(GridCell { param: GridParam::Rho, value: rho });
    }
    cells
}

struct TrialOutput {
    records: Vec<TrialRecord>,
    failures: Vec<TrialFailure>,
}

fn run_trial(
    spec: &SynthSpec,
    dict: &Dictionary,
    cell: GridCell,
    trial: usize,
    solvers: &[BenchSolver],
) -> TrialOutput {
    let mut out = TrialOutput { records: Vec::new(), failures: Vec::new() };
    let fail_all = |out: &mut TrialOutput, msg: String| {
        for &s in solvers {
            out.failures.push(TrialFailure { cell, solver: s, trial, error: msg.clone() });
        }
    };
    let ts = trial_seed(spec.base_seed, trial as u64);
    let (re, rho) = match cell.param {
        GridParam::Re => (cell.value as usize, 1.0),
        GridParam::Rho => (spec.rank, cell.value),
    };

    let generated = (|| -> Result<(Tensor3, Factors, Selection, f64)> {
        let (mut truth, sel) = gen_factors(spec, dict, derive_seed(ts, FACTOR_STREAM))?;
        if rho < 1.0 {
            truth.c = condition_c(&truth.c, rho)?;
        }
        let clean = cpd_reconstruct(&truth);
        let (noisy, snr) = add_gaussian_noise(&clean, spec.sigma, derive_seed(ts, NOISE_STREAM))?;
        Ok((noisy, truth, sel, snr))
    })();
    let (t, truth, sel_true, snr_db) = match generated {
        Ok(v) => v,
        Err(e) => {
            fail_all(&mut out, format!("data generation failed: {e}"));
            return out;
        }
    };

    let mut cfg = spec.solver_cfg.clone();
    cfg.rank = re;
    cfg.seed = ts;

    let init = match spec.init {
        InitPolicy::Truth if re == spec.rank => truth.clone(),
        InitPolicy::Truth => {
            fail_all(&mut out, "truth initialization requires Re = R".into());
            return out;
        }
        InitPolicy::Als => init_random(t.dims(), re, derive_seed(ts, INIT_STREAM)),
    };

    // shared baseline: every ALS-initialized solver starts from this output
    let als_report = match als_cpd(&t, &cfg, &init) {
        Ok(r) => r,
        Err(e) => {
            fail_all(&mut out, format!("baseline ALS failed: {e}"));
            return out;
        }
    };
    let shared_init = als_report.factors.clone();

    let push = |out: &mut TrialOutput, solver: BenchSolver, res: Result<FitReport>| {
        match res.and_then(|report| {
            let rel_err = report_rel_err(&t, &report)?;
            let id_rate = report
                .selection
                .as_ref()
                .map(|sel| identification_rate(&sel_true, sel, spec.rank, re));
            // the error on B quantifies the distance between the selected
            // atoms and the true ones; only the unconstrained baseline is
            // measured on its raw factor
            let b_est = match &report.selection {
                Some(sel) => project(sel, dict)?,
                None => report.factors.b.clone(),
            };
            let rmse = rmse_b(&truth.b, &b_est)?;
            Ok(TrialRecord {
                cell,
                solver,
                trial,
                id_rate,
                rmse_b: rmse,
                rel_err,
                runtime_s: report.wall_time_s,
                snr_db: snr_db.is_finite().then_some(snr_db),
            })
        }) {
            Ok(rec) => out.records.push(rec),
            Err(e) => out.failures.push(TrialFailure {
                cell,
                solver,
                trial,
                error: e.to_string(),
            }),
        }
    };

    for &solver in solvers {
        match solver {
            BenchSolver::Als => push(&mut out, solver, Ok(als_report.clone())),
            BenchSolver::ProjectedAls => {
                // reuse the shared baseline; only the projection step is new
                let started = Instant::now();
                let res = (|| -> Result<FitReport> {
                    let mut rep = als_report.clone();
                    let sel = crate::dictionary::select_atoms(
                        &rep.factors.b,
                        dict,
                        cfg.no_repeat,
                        cfg.nonneg,
                    )?;
                    rep.factors.b = project(&sel, dict)?;
                    let unf = crate::solvers::Unfoldings::new(&t)?;
                    let ctx = crate::solvers::mode_ctx(&unf.t1, &rep.factors.b, &rep.factors.c)?;
                    rep.factors.a = crate::solvers::solve_ctx(&ctx, cfg.nonneg)?;
                    let ctx = crate::solvers::mode_ctx(&unf.t3, &rep.factors.a, &rep.factors.b)?;
                    rep.factors.c = crate::solvers::solve_ctx(&ctx, cfg.nonneg)?;
                    rep.selection = Some(sel);
                    rep.wall_time_s = als_report.wall_time_s + started.elapsed().as_secs_f64();
                    Ok(rep)
                })();
                push(&mut out, solver, res);
            }
            BenchSolver::Mpals => {
                push(&mut out, solver, mpals(&t, &cfg, &shared_init, dict));
            }
            BenchSolver::Smpals => {
                push(&mut out, solver, run_solver(SolverKind::Smpals, &t, &cfg, &shared_init, Some(dict)));
            }
            BenchSolver::FlexMpals => {
                push(&mut out, solver, run_solver(SolverKind::FlexMpals, &t, &cfg, &shared_init, Some(dict)));
            }
            BenchSolver::AlsFg => {
                push(&mut out, solver, run_solver(SolverKind::AlsFg, &t, &cfg, &shared_init, Some(dict)));
            }
            BenchSolver::RandMpals => {
                // random init drawn like the true factors (including the
                // conditioning of C), five-fold iteration budget
                let mut rcfg = cfg.clone();
                rcfg.max_outer_iters = cfg.max_outer_iters.saturating_mul(5);
                let rinit = match spec.init {
                    InitPolicy::Truth => Ok(truth.clone()),
                    InitPolicy::Als => {
                        random_truth_like_init(spec, dict, re, rho, derive_seed(ts, RAND_INIT_STREAM))
                    }
                };
                push(&mut out, solver, rinit.and_then(|ri| mpals(&t, &rcfg, &ri, dict)));
            }
        }
    }
    out
}

/// Random initialization drawn from the same distribution as the true
/// factors: normalized Gaussian A and C with the same conditioning applied
/// to C, and B assembled from randomly selected atoms (one per class, `re`
/// classes).
fn random_truth_like_init(
    spec: &SynthSpec,
    dict: &Dictionary,
    re: usize,
    rho: f64,
    seed: u64,
) -> Result<Factors> {
    let mut f = init_random(spec.dims, re, seed);
    if rho < 1.0 {
        f.c = condition_c(&f.c, rho)?;
    }
    let per_class = spec.atoms / spec.classes;
    let mut rng = rng_from_seed(derive_seed(seed, 0xB0));
    let classes = sample(&mut rng, spec.classes, re.min(spec.classes)).into_vec();
    let indices: Vec<usize> = (0..re)
        .map(|i| match classes.get(i) {
            Some(&cl) => cl * per_class + rng.gen_range(0..per_class),
            None => rng.gen_range(0..spec.atoms),
        })
        .collect();
    let sel = Selection::new(indices, vec![1; re])?;
    f.b = project(&sel, dict)?;
    Ok(f)
}

fn mean_std(values: impl Iterator<Item = f64> + Clone) -> (f64, f64) {
    let n = values.clone().count();
    if n == 0 {
        return (f64::NAN, f64::NAN);
    }
    let mean = values.clone().sum::<f64>() / n as f64;
    let var = values.map(|v| (v - mean) * (v - mean)).sum::<f64>() / n as f64;
    (mean, var.sqrt())
}

/// Runs every (cell, trial, solver) combination and aggregates per-cell
/// means. `jobs` bounds the worker threads (0 = one per core); outputs are
/// identical for any job count.
pub fn run_grid(spec: &SynthSpec, solvers: &[BenchSolver], jobs: usize) -> Result<ExperimentReport> {
    spec.validate()?;
    if solvers.is_empty() {
        return Err(Error::InvalidInput("no solvers requested".into()));
    }
    let dict = gen_dictionary(spec, derive_seed(spec.base_seed, DICT_STREAM))?;
    let intra = max_intraclass_cosine(&dict);
    let cells = cells_of(spec);
    if cells.is_empty() {
        return Err(Error::InvalidInput("no grid cells: both Re and rho lists are empty".into()));
    }
    let tasks: Vec<(usize, usize)> = cells
        .iter()
        .enumerate()
        .flat_map(|(ci, _)| (0..spec.trials).map(move |tr| (ci, tr)))
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Numerical(format!("thread pool: {e}")))?;
    let outputs: Vec<TrialOutput> = pool.install(|| {
        use rayon::prelude::*;
        tasks
            .par_iter()
            .map(|&(ci, tr)| run_trial(spec, &dict, cells[ci], tr, solvers))
            .collect()
    });

    let mut records = Vec::new();
    let mut failures = Vec::new();
    for o in outputs {
        records.extend(o.records);
        failures.extend(o.failures);
    }

    let mut summaries = Vec::new();
    for cell in &cells {
        let (re, r) = match cell.param {
            GridParam::Re => (cell.value as usize, spec.rank),
            GridParam::Rho => (spec.rank, spec.rank),
        };
        for &solver in solvers {
            let recs: Vec<&TrialRecord> = records
                .iter()
                .filter(|rec| {
                    rec.cell.param == cell.param && rec.cell.value == cell.value && rec.solver == solver
                })
                .collect();
            let n_fail = failures
                .iter()
                .filter(|f| f.cell.param == cell.param && f.cell.value == cell.value && f.solver == solver)
                .count();
            let ids: Vec<f64> = recs.iter().filter_map(|r| r.id_rate).collect();
            let (mean_id, std_id) = mean_std(ids.iter().copied());
            let (mean_rmse, std_rmse) = mean_std(recs.iter().map(|r| r.rmse_b));
            let (mean_rel, _) = mean_std(recs.iter().map(|r| r.rel_err));
            let (mean_rt, _) = mean_std(recs.iter().map(|r| r.runtime_s));
            let snrs: Vec<f64> = recs.iter().filter_map(|r| r.snr_db).collect();
            let (mean_snr, _) = mean_std(snrs.iter().copied());
            summaries.push(CellSummary {
                cell: *cell,
                solver,
                trials_ok: recs.len(),
                trials_failed: n_fail,
                flagged: n_fail * 10 > spec.trials,
                mean_id_rate: (!ids.is_empty()).then_some(mean_id),
                std_id_rate: (!ids.is_empty()).then_some(std_id),
                mean_rmse_b: mean_rmse,
                std_rmse_b: std_rmse,
                mean_rel_err: mean_rel,
                mean_runtime_s: mean_rt,
                mean_snr_db: (!snrs.is_empty()).then_some(mean_snr),
                oracle_rate: oracle_rate(r, re),
                oracle_miss: oracle_miss(r, re),
            });
        }
    }

    Ok(ExperimentReport {
        spec: spec.clone(),
        solvers: solvers.to_vec(),
        max_intraclass_cosine: intra,
        records,
        failures,
        summaries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{spark_bruteforce, SparkResult};

    fn small_spec() -> SynthSpec {
        SynthSpec {
            dims: (6, 25, 4),
            atoms: 40,
            classes: 8,
            rank: 3,
            re_values: vec![3],
            sigma: 0.0,
            rho_values: vec![],
            trials: 2,
            base_seed: 7,
            ..Default::default()
        }
    }

    #[test]
    fn dictionary_properties() {
        let spec = small_spec();
        let dict = gen_dictionary(&spec, 11).unwrap();
        assert_eq!(dict.len(), 40);
        assert_eq!(dict.atom_dim(), 25);
        assert!(dict.is_unit_norm());
        assert!(dict.atoms().data().iter().all(|&v| v >= 0.0));
        let labels = dict.class_labels().unwrap();
        assert_eq!(labels.len(), 40);
        assert!(labels.iter().all(|&k| k < 8));
        // determinism
        let again = gen_dictionary(&spec, 11).unwrap();
        assert_eq!(dict.atoms(), again.atoms());
        // intra-class correlation is high but below collinearity
        let c = max_intraclass_cosine(&dict);
        assert!(c > 0.5 && c < 1.0 - 1e-10, "intra-class cosine {c}");
    }

    #[test]
    fn generated_dictionary_spark_exceeds_rank() {
        // subsample to stay inside the combinatorial budget
        let spec = SynthSpec { atoms: 22, classes: 11, ..small_spec() };
        let dict = gen_dictionary(&spec, 3).unwrap();
        let res = spark_bruteforce(dict.atoms(), spec.rank + 1).unwrap();
        assert_eq!(res, SparkResult::ExceedsKmax);
    }

    #[test]
    fn factors_pick_distinct_classes() {
        let spec = small_spec();
        let dict = gen_dictionary(&spec, 1).unwrap();
        let (f, sel) = gen_factors(&spec, &dict, 5).unwrap();
        for m in [&f.a, &f.c] {
            for j in 0..m.cols() {
                assert!((m.col_norm(j) - 1.0).abs() < 1e-12);
            }
        }
        let labels = dict.class_labels().unwrap();
        let mut classes: Vec<usize> = sel.indices.iter().map(|&i| labels[i]).collect();
        classes.sort_unstable();
        classes.dedup();
        assert_eq!(classes.len(), spec.rank);
        // same seed, same selection
        let (_, sel2) = gen_factors(&spec, &dict, 5).unwrap();
        assert_eq!(sel.indices, sel2.indices);
    }

    #[test]
    fn condition_c_cases() {
        let c = crate::testutil::normalized_gaussian(5, 2, 3);
        let unchanged = condition_c(&c, 1.0).unwrap();
        for (x, y) in c.data().iter().zip(unchanged.data()) {
            assert!((x - y).abs() < 1e-12);
        }
        let collapsed = condition_c(&c, 0.0).unwrap();
        for i in 0..5 {
            assert!((collapsed.get(i, 0) - collapsed.get(i, 1)).abs() < 1e-12);
        }
        // rho = 0.5, R = 2 mixes with [[0.75, 0.25], [0.25, 0.75]]
        let mixed = condition_c(&c, 0.5).unwrap();
        let mut expect = c.matmul(
            &Matrix::from_vec(2, 2, vec![0.75, 0.25, 0.25, 0.75]).unwrap(),
        );
        expect.normalize_cols();
        for (x, y) in mixed.data().iter().zip(expect.data()) {
            assert!((x - y).abs() < 1e-12);
        }
        assert!(condition_c(&c, 1.5).is_err());
    }

    #[test]
    fn identification_rate_cases() {
        let t = Selection::new(vec![3, 7, 9], vec![1; 3]).unwrap();
        assert_eq!(identification_rate(&t, &t, 3, 3), 1.0);
        let est = Selection::new(vec![9, 3], vec![1; 2]).unwrap();
        assert!((identification_rate(&t, &est, 3, 2) - 2.0 / 3.0).abs() < 1e-15);
        let disjoint = Selection::new(vec![0, 1, 2], vec![1; 3]).unwrap();
        assert_eq!(identification_rate(&t, &disjoint, 3, 3), 0.0);
        // duplicates in the estimate earn credit at most once
        let dup = Selection::new(vec![3, 3, 9], vec![1; 3]).unwrap();
        assert!((identification_rate(&t, &dup, 3, 3) - 2.0 / 3.0).abs() < 1e-15);
        // 7 correct atoms under Re=7, R=10
        let t10 = Selection::new((0..10).collect(), vec![1; 10]).unwrap();
        let est7 = Selection::new((0..7).collect(), vec![1; 7]).unwrap();
        assert!((identification_rate(&t10, &est7, 10, 7) - 0.7).abs() < 1e-15);
    }

    #[test]
    fn oracle_values() {
        assert_eq!(oracle_rate(10, 10), 1.0);
        assert!((oracle_rate(10, 7) - 0.7).abs() < 1e-15);
        assert!((oracle_rate(10, 13) - 10.0 / 13.0).abs() < 1e-15);
        assert!((oracle_miss(10, 7) - 0.3).abs() < 1e-15);
        assert_eq!(oracle_miss(10, 10), 0.0);
    }

    #[test]
    fn rmse_invariances() {
        let b = crate::testutil::normalized_gaussian(8, 4, 17);
        // permuted columns, flipped signs, rescaled: still zero error
        let mut perm = Matrix::zeros(8, 4);
        let order = [2usize, 0, 3, 1];
        let scales = [1.0, -2.0, 0.5, -0.1];
        for (j, (&src, &s)) in order.iter().zip(&scales).enumerate() {
            for i in 0..8 {
                perm.set(i, j, s * b.get(i, src));
            }
        }
        assert!(rmse_b(&b, &perm).unwrap() < 1e-12);
        assert!(rmse_b(&b, &b.scale(-1.0)).unwrap() < 1e-12);
        // orthogonal estimate scores the full norm
        let e = Matrix::identity(8);
        let mut ortho = Matrix::zeros(8, 4);
        for j in 0..4 {
            for i in 0..8 {
                ortho.set(i, j, e.get(i, j));
            }
        }
        let b_disjoint = Matrix::from_fn(8, 4, |i, j| if i == j + 4 { 1.0 } else { 0.0 });
        assert!((rmse_b(&b_disjoint, &ortho).unwrap() - 1.0).abs() < 1e-12);
    }

    /// Brute force over all permutations with per-column optimal scaling.
    fn rmse_brute(b_true: &Matrix, b_est: &Matrix) -> f64 {
        fn perms(n: usize) -> Vec<Vec<usize>> {
            if n == 1 {
                return vec![vec![0]];
            }
            let mut out = Vec::new();
            for p in perms(n - 1) {
                for pos in 0..=p.len() {
                    let mut q: Vec<usize> = p.iter().map(|&v| v + 1).collect();
                    q.insert(pos, 0);
                    out.push(q);
                }
            }
            out
        }
        let r = b_true.cols();
        let denom = b_true.frob_norm_sq();
        let mut best = f64::INFINITY;
        for p in perms(r) {
            let mut err = 0.0;
            for (i, &j) in p.iter().enumerate() {
                let bt = b_true.col_vec(i);
                let be = b_est.col_vec(j);
                let dot: f64 = bt.iter().zip(&be).map(|(a, b)| a * b).sum();
                let nb: f64 = be.iter().map(|v| v * v).sum();
                let alpha = if nb == 0.0 { 0.0 } else { dot / nb };
                err += bt
                    .iter()
                    .zip(&be)
                    .map(|(a, b)| (a - alpha * b) * (a - alpha * b))
                    .sum::<f64>();
            }
            best = best.min(err / denom);
        }
        best
    }

    #[test]
    fn rmse_matches_brute_force() {
        for seed in 0..30u64 {
            let r = 2 + (seed % 5) as usize; // up to 6
            let b_true = crate::testutil::normalized_gaussian(7, r, seed);
            let b_est = crate::testutil::normalized_gaussian(7, r, seed ^ 0xbeef);
            let fast = rmse_b(&b_true, &b_est).unwrap();
            let brute = rmse_brute(&b_true, &b_est);
            assert!(
                (fast - brute).abs() < 1e-12,
                "seed {seed}: fast {fast} brute {brute}"
            );
        }
    }

    #[test]
    fn spec_validation() {
        let mut spec = small_spec();
        spec.classes = 7; // does not divide 40
        assert!(spec.validate().is_err());
        let mut spec = small_spec();
        spec.rank = 9; // exceeds classes
        assert!(spec.validate().is_err());
        assert!(small_spec().validate().is_ok());
    }

    #[test]
    fn grid_truth_init_perfect_recovery() {
        let mut spec = small_spec();
        spec.init = InitPolicy::Truth;
        let report = run_grid(&spec, &BenchSolver::DEFAULT, 2).unwrap();
        assert!(report.failures.is_empty());
        for s in &report.summaries {
            assert_eq!(s.trials_ok, 2);
            assert!(!s.flagged);
            let rate = s.mean_id_rate.unwrap();
            assert!((rate - 1.0).abs() < 1e-12, "{} rate {rate}", s.solver);
            assert!(s.mean_rmse_b < 1e-12);
        }
    }

    #[test]
    fn grid_deterministic_rerun_any_job_count() {
        let spec = SynthSpec { sigma: 0.02, ..small_spec() };
        let solvers = [BenchSolver::ProjectedAls, BenchSolver::Mpals];
        let a = run_grid(&spec, &solvers, 1).unwrap();
        let b = run_grid(&spec, &solvers, 2).unwrap();
        assert_eq!(a.records.len(), b.records.len());
        for (x, y) in a.records.iter().zip(&b.records) {
            assert_eq!(x.solver, y.solver);
            assert_eq!(x.trial, y.trial);
            assert_eq!(x.id_rate.map(f64::to_bits), y.id_rate.map(f64::to_bits));
            assert_eq!(x.rmse_b.to_bits(), y.rmse_b.to_bits());
            assert_eq!(x.rel_err.to_bits(), y.rel_err.to_bits());
        }
    }
}
