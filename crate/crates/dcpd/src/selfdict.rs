//! Matrix-case self-dictionary decomposition for pure-pixel spectral
//! unmixing: the data's own rows serve as the dictionary, so the factorization
//! `M = A (M^T S)^T` selects R pixels whose spectra explain the rest.
//!
//! The pipeline is SPA initialization, greedy refinement of the selected
//! pixels (the matrix specialization of MPALS / SMPALS, nonnegative and with
//! no repeated atoms), exact nonnegative least squares for the abundances,
//! and per-pixel residual maps. The dictionary is the data, referenced rather
//! than copied; one refinement iteration costs O(n * L * R).

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::numerics::{assignment_max, nnls, solve_gram};
use crate::solvers::{smpals_b_update, smpals_lambda_update, trace_stop, SolverConfig};
use std::time::Instant;

/// A hyperspectral image flattened to `n` pixels by `L` bands, entries
/// nonnegative, with optional spatial dims `(H, W)`, `H * W = n`.
#[derive(Debug, Clone)]
pub struct HsiMatrix {
    values: Matrix,
    spatial: Option<(usize, usize)>,
}

impl HsiMatrix {
    pub fn new(values: Matrix, spatial: Option<(usize, usize)>) -> Result<Self> {
        if values.data().iter().any(|&v| v < 0.0) {
            return Err(Error::InvalidInput("pixel matrix has negative entries".into()));
        }
        if let Some((h, w)) = spatial {
            if h * w != values.rows() {
                return Err(Error::InvalidInput(format!(
                    "spatial dims {h}x{w} do not cover {} pixels",
                    values.rows()
                )));
            }
        }
        Ok(HsiMatrix { values, spatial })
    }

    /// Pixel count `n`.
    pub fn pixels(&self) -> usize {
        self.values.rows()
    }

    /// Band count `L`.
    pub fn bands(&self) -> usize {
        self.values.cols()
    }

    pub fn values(&self) -> &Matrix {
        &self.values
    }

    pub fn spatial(&self) -> Option<(usize, usize)> {
        self.spatial
    }
}

/// Which refinement loop to run on top of the initial pixel selection.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SelfDictVariant {
    Mpals,
    Smpals,
    /// Flexible endmembers (not constrained to data rows); excluded from the
    /// error comparisons by default since it trivially lowers the residual.
    Flex,
}

impl SelfDictVariant {
    pub fn name(&self) -> &'static str {
        match self {
            SelfDictVariant::Mpals => "mpals",
            SelfDictVariant::Smpals => "smpals",
            SelfDictVariant::Flex => "flex",
        }
    }
}

/// Unmixing output: the selected pure pixels, nonnegative abundances, the
/// relative reconstruction error, and the per-pixel residual map.
#[derive(Debug, Clone)]
pub struct UnmixResult {
    pub endmember_indices: Vec<usize>,
    /// `L x R` endmember spectra (selected rows of the data, or the flexible
    /// factor for [`SelfDictVariant::Flex`]).
    pub endmembers: Matrix,
    /// `n x R` nonnegative abundances.
    pub abundances: Matrix,
    /// `||M - A B^T||_F / ||M||_F`.
    pub rel_err: f64,
    /// Relative error of the initial selection (before refinement), with
    /// NNLS abundances.
    pub init_rel_err: f64,
    pub residual_map: Vec<f64>,
    pub iterations: usize,
    pub converged: bool,
    pub wall_time_s: f64,
}

/// Default SMPALS coupling strength for self-dictionary runs,
/// `0.01 ||M||_F^2 / (n R)`; a free parameter.
pub fn default_hsi_lambda(m: &HsiMatrix, r: usize) -> f64 {
    0.01 * m.values.frob_norm_sq() / (m.pixels() * r) as f64
}

/// Successive projection algorithm over the rows of `M`: pick the row of
/// largest residual norm, project every row onto its orthogonal complement,
/// repeat `r` times. Ties go to the lowest index.
pub fn spa(m: &HsiMatrix, r: usize) -> Result<Vec<usize>> {
    let n = m.pixels();
    let l = m.bands();
    if r == 0 || r > n.min(l) {
        return Err(Error::InvalidInput(format!(
            "rank {r} out of range for {n} pixels x {l} bands"
        )));
    }
    let mut resid = m.values.clone();
    let mut norms_sq: Vec<f64> = (0..n)
        .map(|i| resid.row(i).iter().map(|v| v * v).sum())
        .collect();
    let scale = norms_sq.iter().cloned().fold(0.0f64, f64::max);
    if scale == 0.0 {
        return Err(Error::Numerical("SPA: all pixels are zero".into()));
    }
    let mut picked = Vec::with_capacity(r);
    for _ in 0..r {
        let mut best = 0usize;
        for i in 1..n {
            if norms_sq[i] > norms_sq[best] {
                best = i;
            }
        }
        if norms_sq[best] <= 1e-24 * scale {
            return Err(Error::Numerical(format!(
                "SPA: residual rank collapsed after {} picks",
                picked.len()
            )));
        }
        picked.push(best);
        let pivot: Vec<f64> = resid.row(best).to_vec();
        let pivot_sq = norms_sq[best];
        for i in 0..n {
            let row = resid.row_mut(i);
            let coef: f64 = row.iter().zip(&pivot).map(|(a, b)| a * b).sum::<f64>() / pivot_sq;
            let mut nsq = 0.0;
            for (x, p) in row.iter_mut().zip(&pivot) {
                *x -= coef * p;
                nsq += *x * *x;
            }
            norms_sq[i] = nsq;
        }
    }
    Ok(picked)
}

/// Per-pixel nonnegative abundances against fixed endmember spectra
/// (`L x R`), one exact NNLS per pixel.
pub fn nnls_abundances(m: &HsiMatrix, endmembers: &Matrix) -> Result<Matrix> {
    if endmembers.rows() != m.bands() {
        return Err(Error::InvalidInput(format!(
            "endmembers have {} bands, data has {}",
            endmembers.rows(),
            m.bands()
        )));
    }
    let gram = endmembers.gram();
    let rhs = m.values.matmul(endmembers);
    nnls(&gram, &rhs)
}

/// Per-pixel l2 residual `||m_i - a_i B^T||_2`.
pub fn residual_map(m: &HsiMatrix, abundances: &Matrix, endmembers: &Matrix) -> Result<Vec<f64>> {
    if abundances.rows() != m.pixels() || endmembers.rows() != m.bands()
        || abundances.cols() != endmembers.cols()
    {
        return Err(Error::InvalidInput("residual_map: shape mismatch".into()));
    }
    let mut out = Vec::with_capacity(m.pixels());
    for i in 0..m.pixels() {
        let arow = abundances.row(i);
        let mrow = m.values.row(i);
        let mut acc = 0.0;
        for (band, &mv) in mrow.iter().enumerate() {
            let mut model = 0.0;
            for (r, &av) in arow.iter().enumerate() {
                model += av * endmembers.get(band, r);
            }
            let d = mv - model;
            acc += d * d;
        }
        out.push(acc.sqrt());
    }
    Ok(out)
}

fn endmembers_from_rows(m: &Matrix, indices: &[usize]) -> Matrix {
    Matrix::from_fn(m.cols(), indices.len(), |band, r| m.get(indices[r], band))
}

/// `||M - A B^T||_F^2` through Gram pieces; exact entrywise recomputation
/// near zero, where the fast form is all cancellation.
fn fit_cost(m: &Matrix, a: &Matrix, b: &Matrix, m_norm_sq: f64, mb: &Matrix) -> f64 {
    let inner: f64 = a.data().iter().zip(mb.data()).map(|(x, y)| x * y).sum();
    let cross: f64 = a
        .gram()
        .data()
        .iter()
        .zip(b.gram().data())
        .map(|(x, y)| x * y)
        .sum();
    let fast = (m_norm_sq - 2.0 * inner + cross).max(0.0);
    if fast < 1e-10 * m_norm_sq {
        let model = a.matmul_t(b);
        m.data()
            .iter()
            .zip(model.data())
            .map(|(x, y)| (x - y) * (x - y))
            .sum()
    } else {
        fast
    }
}

/// Assignment-based selection of `r` distinct rows of `M` maximizing the
/// summed correlation with the columns of `b_ls` (raw scores, nonnegative
/// pipeline).
fn select_rows(m: &Matrix, row_norms: &[f64], b_ls: &Matrix) -> Result<Vec<usize>> {
    let r = b_ls.cols();
    let mb = m.matmul(b_ls); // n x R, <m_j, b_i>
    let score = Matrix::from_fn(r, m.rows(), |i, j| mb.get(j, i) / row_norms[j]);
    Ok(assignment_max(&score)?.column_to_atom)
}

/// Self-dictionary DCPD: refines an initial pure-pixel selection by
/// alternating exact NNLS on the abundances with greedy re-selection of the
/// pixels, then runs a capped batch of NNLS refinement passes on the
/// abundances. `nonneg` and `no_repeat` are always enforced here regardless
/// of the config flags.
pub fn self_dcpd(
    m: &HsiMatrix,
    r: usize,
    cfg: &SolverConfig,
    init_indices: &[usize],
    variant: SelfDictVariant,
) -> Result<UnmixResult> {
    let started = Instant::now();
    let n = m.pixels();
    let l = m.bands();
    if r == 0 || r > n.min(l) {
        return Err(Error::InvalidInput(format!(
            "rank {r} out of range for {n} pixels x {l} bands"
        )));
    }
    if init_indices.len() != r {
        return Err(Error::InvalidInput(format!(
            "{} initial indices for rank {r}",
            init_indices.len()
        )));
    }
    let mut seen = vec![false; n];
    for &i in init_indices {
        if i >= n {
            return Err(Error::InvalidInput(format!("pixel index {i} out of range")));
        }
        if seen[i] {
            return Err(Error::InvalidInput(format!("pixel index {i} repeated")));
        }
        seen[i] = true;
    }
    if matches!(variant, SelfDictVariant::Smpals) && !(cfg.lambda > 0.0) {
        return Err(Error::InvalidInput("smpals variant requires lambda > 0".into()));
    }

    let values = m.values();
    let m_norm_sq = values.frob_norm_sq();
    if m_norm_sq == 0.0 {
        return Err(Error::InvalidInput("zero data matrix".into()));
    }
    let row_norms: Vec<f64> = (0..n)
        .map(|i| values.row(i).iter().map(|v| v * v).sum::<f64>().sqrt().max(1e-300))
        .collect();

    let mut indices = init_indices.to_vec();
    let mut b = endmembers_from_rows(values, &indices);
    let mut mb = values.matmul(&b);
    let mut a = nnls(&b.gram(), &mb)?;
    let init_cost = fit_cost(values, &a, &b, m_norm_sq, &mb);
    let init_iterate = (indices.clone(), a.clone(), b.clone());
    let init_map = residual_map(m, &a, &b)?;
    let init_rel_err = (init_map.iter().map(|v| v * v).sum::<f64>() / m_norm_sq).sqrt();

    let mut trace = vec![init_cost];
    let mut best = (init_cost, indices.clone(), a.clone(), b.clone());
    let mut lambda = cfg.lambda;
    let mut converged = false;
    let mut iterations = 0;
    for _ in 1..=cfg.max_outer_iters {
        iterations += 1;
        // least-squares endmember estimate from the current abundances
        let a_gram = a.gram();
        let mta = values.t_matmul(&a);
        let b_est = match variant {
            SelfDictVariant::Mpals => solve_gram(&a_gram, &mta)?,
            SelfDictVariant::Smpals | SelfDictVariant::Flex => {
                smpals_b_update(&mta, &a_gram, &b, lambda)?
            }
        };
        indices = select_rows(values, &row_norms, &b_est)?;
        match variant {
            SelfDictVariant::Flex => b = b_est,
            _ => {
                b = endmembers_from_rows(values, &indices);
                if matches!(variant, SelfDictVariant::Smpals) {
                    let gap = b_est.add_scaled(-1.0, &b).frob_norm_sq();
                    lambda = smpals_lambda_update(lambda, cfg.p, gap, b_est.frob_norm_sq());
                }
            }
        }
        mb = values.matmul(&b);
        a = nnls(&b.gram(), &mb)?;
        let cost = fit_cost(values, &a, &b, m_norm_sq, &mb);
        trace.push(cost);
        if cost < best.0 {
            best = (cost, indices.clone(), a.clone(), b.clone());
        }
        if cost <= 1e-26 * m_norm_sq || trace_stop(&trace, cfg.stop_tol) {
            converged = true;
            break;
        }
    }
    let (_, indices, mut a, b) = best;

    // refinement batch: exact per-pixel NNLS reaches its fixed point in one
    // pass, so later passes exit early
    let refine_gram = b.gram();
    let refine_rhs = values.matmul(&b);
    for _ in 0..cfg.abundance_refine_passes {
        let next = nnls(&refine_gram, &refine_rhs)?;
        let delta = next.add_scaled(-1.0, &a).frob_norm_sq();
        a = next;
        if delta == 0.0 {
            break;
        }
    }

    let map = residual_map(m, &a, &b)?;
    let rel_err = (map.iter().map(|v| v * v).sum::<f64>() / m_norm_sq).sqrt();
    // the refined result never reports worse than its own initialization;
    // fall back when roundoff in the iteration trace says otherwise
    let (indices, a, b, map, rel_err) = if rel_err <= init_rel_err {
        (indices, a, b, map, rel_err)
    } else {
        let (i0, a0, b0) = init_iterate;
        (i0, a0, b0, init_map, init_rel_err)
    };
    Ok(UnmixResult {
        endmember_indices: indices,
        endmembers: b,
        abundances: a,
        rel_err,
        init_rel_err,
        residual_map: map,
        iterations,
        converged,
        wall_time_s: started.elapsed().as_secs_f64(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::rng_from_seed;
    use rand::Rng;

    /// Exactly separable data: R pure pixels (rows of B^T), the rest convex
    /// combinations strictly inside the hull.
    fn separable(n: usize, l: usize, r: usize, seed: u64) -> (HsiMatrix, Vec<usize>) {
        let mut rng = rng_from_seed(seed);
        let endmembers = Matrix::from_fn(l, r, |_, _| rng.gen_range(0.05..1.0));
        let mut a = Matrix::zeros(n, r);
        for i in 0..r {
            a.set(i, i, 1.0);
        }
        for i in r..n {
            let mut weights: Vec<f64> = (0..r).map(|_| rng.gen_range(0.01..1.0)).collect();
            let sum: f64 = weights.iter().sum();
            // keep interior points clearly away from the vertices
            for w in weights.iter_mut() {
                *w = 0.8 * *w / sum;
            }
            for (j, w) in weights.iter().enumerate() {
                a.set(i, j, *w);
            }
        }
        let m = a.matmul_t(&endmembers);
        (HsiMatrix::new(m, None).unwrap(), (0..r).collect())
    }

    #[test]
    fn hsi_validation() {
        let ok = Matrix::from_vec(4, 2, vec![1., 2., 3., 4., 5., 6., 7., 8.]).unwrap();
        assert!(HsiMatrix::new(ok.clone(), Some((2, 2))).is_ok());
        assert!(HsiMatrix::new(ok.clone(), Some((3, 2))).is_err());
        let neg = Matrix::from_vec(1, 2, vec![1.0, -0.1]).unwrap();
        assert!(HsiMatrix::new(neg, None).is_err());
        let _ = ok;
    }

    #[test]
    fn spa_spec_example() {
        // rows: e1, e2, midpoint; the two unit rows are the vertices
        let m = Matrix::from_vec(3, 2, vec![1., 0., 0., 1., 0.5, 0.5]).unwrap();
        let hsi = HsiMatrix::new(m, None).unwrap();
        let picked = spa(&hsi, 2).unwrap();
        assert_eq!(picked, vec![0, 1]);
        // R = 1 picks the max-norm row
        let m = Matrix::from_vec(3, 2, vec![1., 0., 3., 4., 0.5, 0.5]).unwrap();
        let hsi = HsiMatrix::new(m, None).unwrap();
        assert_eq!(spa(&hsi, 1).unwrap(), vec![1]);
    }

    #[test]
    fn spa_exact_recovery_on_separable_data() {
        for seed in 0..10u64 {
            let (hsi, truth) = separable(60, 12, 4, seed);
            let mut picked = spa(&hsi, 4).unwrap();
            picked.sort_unstable();
            assert_eq!(picked, truth, "seed {seed}");
        }
    }

    #[test]
    fn spa_rank_collapse_errors() {
        // rank-1 data cannot yield two picks
        let base = [1.0f64, 2.0, 3.0];
        let m = Matrix::from_fn(4, 3, |i, j| (i + 1) as f64 * base[j]);
        let hsi = HsiMatrix::new(m, None).unwrap();
        assert!(spa(&hsi, 2).is_err());
        assert!(spa(&hsi, 0).is_err());
        assert!(spa(&hsi, 4).is_err());
    }

    #[test]
    fn abundances_exact_and_edge_cases() {
        let (hsi, _) = separable(40, 10, 3, 5);
        let endmembers = endmembers_from_rows(hsi.values(), &[0, 1, 2]);
        let a = nnls_abundances(&hsi, &endmembers).unwrap();
        let model = a.matmul_t(&endmembers);
        let err = model.add_scaled(-1.0, hsi.values()).frob_norm() / hsi.values().frob_norm();
        assert!(err < 1e-8);
        // pure pixel rows are canonical basis vectors
        for i in 0..3 {
            for j in 0..3 {
                let expect = if i == j { 1.0 } else { 0.0 };
                assert!((a.get(i, j) - expect).abs() < 1e-8);
            }
        }

        // zero pixel row -> zero abundance row; single endmember -> clamp
        let m = Matrix::from_vec(2, 2, vec![0., 0., 2., 4.]).unwrap();
        let hsi = HsiMatrix::new(m, None).unwrap();
        let e = Matrix::from_vec(2, 1, vec![1.0, 2.0]).unwrap();
        let a = nnls_abundances(&hsi, &e).unwrap();
        assert_eq!(a.get(0, 0), 0.0);
        assert!((a.get(1, 0) - 2.0).abs() < 1e-12);
    }

    #[test]
    fn residual_map_identities() {
        let (hsi, _) = separable(30, 8, 3, 9);
        let endmembers = endmembers_from_rows(hsi.values(), &[0, 1, 2]);
        let a = nnls_abundances(&hsi, &endmembers).unwrap();
        let map = residual_map(&hsi, &a, &endmembers).unwrap();
        assert!(map.iter().all(|&v| v < 1e-8));
        // sum of squared map entries equals the squared Frobenius residual
        let a_perturbed = a.scale(0.9);
        let map = residual_map(&hsi, &a_perturbed, &endmembers).unwrap();
        let total: f64 = map.iter().map(|v| v * v).sum();
        let model = a_perturbed.matmul_t(&endmembers);
        let frob = model.add_scaled(-1.0, hsi.values()).frob_norm_sq();
        assert!((total - frob).abs() <= 1e-10 * frob.max(1.0));
    }

    #[test]
    fn self_dcpd_separable_fixed_point() {
        let (hsi, truth) = separable(80, 14, 4, 21);
        let cfg = SolverConfig { rank: 4, max_outer_iters: 50, ..Default::default() };
        let init = spa(&hsi, 4).unwrap();
        let res = self_dcpd(&hsi, 4, &cfg, &init, SelfDictVariant::Mpals).unwrap();
        let mut got = res.endmember_indices.clone();
        got.sort_unstable();
        assert_eq!(got, truth);
        assert!(res.rel_err < 1e-10);
        assert!(res.rel_err <= res.init_rel_err);
        // distinct indices always
        let mut dedup = res.endmember_indices.clone();
        dedup.sort_unstable();
        dedup.dedup();
        assert_eq!(dedup.len(), 4);
    }

    #[test]
    fn self_dcpd_never_worse_than_init() {
        for seed in 0..6u64 {
            let (hsi, _) = separable(70, 12, 4, 100 + seed);
            // noise, clamped to keep the matrix nonnegative
            let mut noisy = hsi.values().clone();
            let mut rng = rng_from_seed(seed);
            for v in noisy.data_mut() {
                *v = (*v + rng.gen_range(-1e-3..1e-3)).max(0.0);
            }
            let hsi = HsiMatrix::new(noisy, None).unwrap();
            let init = spa(&hsi, 4).unwrap();
            for variant in [SelfDictVariant::Mpals, SelfDictVariant::Smpals] {
                let mut cfg = SolverConfig { rank: 4, max_outer_iters: 50, ..Default::default() };
                if variant == SelfDictVariant::Smpals {
                    cfg.lambda = default_hsi_lambda(&hsi, 4);
                }
                let res = self_dcpd(&hsi, 4, &cfg, &init, variant).unwrap();
                assert!(
                    res.rel_err <= res.init_rel_err + 1e-15,
                    "seed {seed} {}: {} > {}",
                    variant.name(),
                    res.rel_err,
                    res.init_rel_err
                );
            }
        }
    }

    #[test]
    fn self_dcpd_validates_inputs() {
        let (hsi, _) = separable(20, 6, 3, 1);
        let cfg = SolverConfig { rank: 3, ..Default::default() };
        assert!(self_dcpd(&hsi, 3, &cfg, &[0, 1], SelfDictVariant::Mpals).is_err());
        assert!(self_dcpd(&hsi, 3, &cfg, &[0, 1, 1], SelfDictVariant::Mpals).is_err());
        assert!(self_dcpd(&hsi, 3, &cfg, &[0, 1, 99], SelfDictVariant::Mpals).is_err());
        assert!(self_dcpd(&hsi, 7, &cfg, &[0; 7], SelfDictVariant::Mpals).is_err());
    }

    #[test]
    fn flex_variant_lowers_or_matches_error() {
        let (hsi, _) = separable(50, 10, 3, 77);
        let mut noisy = hsi.values().clone();
        let mut rng = rng_from_seed(8);
        for v in noisy.data_mut() {
            *v = (*v + rng.gen_range(-5e-3..5e-3)).max(0.0);
        }
        let hsi = HsiMatrix::new(noisy, None).unwrap();
        let init = spa(&hsi, 3).unwrap();
        let cfg = SolverConfig {
            rank: 3,
            max_outer_iters: 50,
            lambda: default_hsi_lambda(&hsi, 3),
            ..Default::default()
        };
        let hard = self_dcpd(&hsi, 3, &cfg, &init, SelfDictVariant::Mpals).unwrap();
        let flex = self_dcpd(&hsi, 3, &cfg, &init, SelfDictVariant::Flex).unwrap();
        assert!(flex.rel_err <= hard.rel_err + 1e-12);
    }
}
