//! Shared numerical kernels: symmetric Gram-system solves, nonnegative least
//! squares in Gram form, rectangular assignment, spectral norms, and a
//! brute-force spark checker.
//!
//! All kernels are pure functions; callers may run independent problems
//! concurrently.

use crate::error::{Error, Result};
use crate::matrix::Matrix;

/// Result of the rectangular assignment problem.
#[derive(Debug, Clone, PartialEq)]
pub struct AssignmentResult {
    /// `column_to_atom[i]` is the atom (column of the score matrix) assigned
    /// to row `i`; the map is injective.
    pub column_to_atom: Vec<usize>,
    pub total_score: f64,
}

/// Lower-triangular Cholesky factor of a symmetric matrix, or `None` if a
/// pivot is not strictly positive.
fn cholesky(g: &Matrix) -> Option<Vec<f64>> {
    let n = g.rows();
    let mut l = vec![0.0; n * n];
    for i in 0..n {
        for j in 0..=i {
            let mut sum = g.get(i, j);
            for k in 0..j {
                sum -= l[i * n + k] * l[j * n + k];
            }
            if i == j {
                if sum <= 0.0 || !sum.is_finite() {
                    return None;
                }
                l[i * n + i] = sum.sqrt();
            } else {
                l[i * n + j] = sum / l[j * n + j];
            }
        }
    }
    Some(l)
}

/// Solves `L L^T x = b` in place.
fn cholesky_solve(l: &[f64], n: usize, b: &mut [f64]) {
    for i in 0..n {
        let mut sum = b[i];
        for k in 0..i {
            sum -= l[i * n + k] * b[k];
        }
        b[i] = sum / l[i * n + i];
    }
    for i in (0..n).rev() {
        let mut sum = b[i];
        for k in i + 1..n {
            sum -= l[k * n + i] * b[k];
        }
        b[i] = sum / l[i * n + i];
    }
}

/// Solves `X G = RHS` for `X` with `G` symmetric positive (semi)definite,
/// row by row via a Cholesky factorization of `G`. When the factorization
/// fails, a diagonal ridge `eps * trace(G) / n` with `eps = 1e-12` is added
/// (escalated a few decades before giving up).
pub fn solve_gram(g: &Matrix, rhs: &Matrix) -> Result<Matrix> {
    let n = g.rows();
    if g.cols() != n {
        return Err(Error::InvalidInput("Gram matrix must be square".into()));
    }
    if rhs.cols() != n {
        return Err(Error::InvalidInput(format!(
            "solve_gram: rhs has {} columns, Gram is {n}x{n}",
            rhs.cols()
        )));
    }
    let trace: f64 = (0..n).map(|i| g.get(i, i)).sum();
    if trace <= 0.0 || !trace.is_finite() {
        return Err(Error::DegenerateGram(String::new()));
    }
    let mut ridge = 0.0;
    let l = loop {
        let candidate = if ridge == 0.0 {
            cholesky(g)
        } else {
            let mut gr = g.clone();
            for i in 0..n {
                let v = gr.get(i, i) + ridge;
                gr.set(i, i, v);
            }
            cholesky(&gr)
        };
        match candidate {
            Some(l) => break l,
            None => {
                if ridge == 0.0 {
                    ridge = 1e-12 * trace / n as f64;
                } else if ridge < 1e-6 * trace / n as f64 {
                    ridge *= 100.0;
                } else {
                    return Err(Error::DegenerateGram(format!(
                        " (ridge up to {ridge:.3e} did not help)"
                    )));
                }
            }
        }
    };
    let mut out = rhs.clone();
    for i in 0..out.rows() {
        cholesky_solve(&l, n, out.row_mut(i));
    }
    Ok(out)
}

/// Nonnegative least squares in Gram form: every row `x` of the result
/// minimizes `x G x^T - 2 x . h` over `x >= 0`, where `h` is the matching row
/// of `rhs`. Active-set (Lawson-Hanson in Gram form), one problem per row.
pub fn nnls(g: &Matrix, rhs: &Matrix) -> Result<Matrix> {
    let n = g.rows();
    if g.cols() != n || rhs.cols() != n {
        return Err(Error::InvalidInput("nnls: shape mismatch".into()));
    }
    let mut out = Matrix::zeros(rhs.rows(), n);
    for i in 0..rhs.rows() {
        let x = nnls_row(g, rhs.row(i))?;
        out.row_mut(i).copy_from_slice(&x);
    }
    Ok(out)
}

fn nnls_row(g: &Matrix, h: &[f64]) -> Result<Vec<f64>> {
    let n = g.rows();
    let scale = h
        .iter()
        .map(|v| v.abs())
        .chain((0..n).map(|i| g.get(i, i).abs()))
        .fold(0.0f64, f64::max)
        .max(1e-300);
    let tol = 1e-10 * scale;

    let mut x = vec![0.0; n];
    let mut passive = vec![false; n];
    // w = h - G x is the negative gradient
    let mut w: Vec<f64> = h.to_vec();
    let cap = 30 * n + 30;
    for _ in 0..cap {
        let mut best = None;
        for j in 0..n {
            if !passive[j] && w[j] > tol {
                match best {
                    Some((_, bw)) if bw >= w[j] => {}
                    _ => best = Some((j, w[j])),
                }
            }
        }
        let Some((j_in, _)) = best else {
            return Ok(x);
        };
        passive[j_in] = true;

        loop {
            let idx: Vec<usize> = (0..n).filter(|&j| passive[j]).collect();
            let p = idx.len();
            let gp = Matrix::from_fn(p, p, |a, b| g.get(idx[a], idx[b]));
            let hp = Matrix::from_fn(1, p, |_, b| h[idx[b]]);
            let z = solve_gram(&gp, &hp)?;
            let z = z.row(0);
            if z.iter().all(|&v| v > 0.0) {
                for (a, &j) in idx.iter().enumerate() {
                    x[j] = z[a];
                }
                break;
            }
            // step back along the segment x -> z until the first coordinate hits zero
            let mut alpha = f64::INFINITY;
            for (a, &j) in idx.iter().enumerate() {
                if z[a] <= 0.0 {
                    let t = x[j] / (x[j] - z[a]);
                    if t < alpha {
                        alpha = t;
                    }
                }
            }
            for (a, &j) in idx.iter().enumerate() {
                x[j] += alpha * (z[a] - x[j]);
            }
            for &j in &idx {
                if x[j] <= tol * 1e-2 {
                    x[j] = 0.0;
                    passive[j] = false;
                }
            }
            if !(0..n).any(|j| passive[j]) {
                break;
            }
        }
        for j in 0..n {
            let mut gx = 0.0;
            for k in 0..n {
                gx += g.get(j, k) * x[k];
            }
            w[j] = h[j] - gx;
        }
    }
    let residual: f64 = w.iter().map(|v| v * v).sum::<f64>().sqrt();
    Err(Error::NonConvergence(format!(
        "nnls hit the iteration cap (KKT residual {residual:.3e})"
    )))
}

/// Injective assignment of each row of `score` (R x d, d >= R) to a distinct
/// column, maximizing the total score. Shortest augmenting path on the
/// negated scores; scanning order makes ties deterministic with a preference
/// for lower column indices.
pub fn assignment_max(score: &Matrix) -> Result<AssignmentResult> {
    let (r, d) = score.shape();
    if d < r {
        return Err(Error::InvalidInput(format!(
            "assignment needs at least as many atoms as columns ({d} < {r})"
        )));
    }
    if r == 0 {
        return Ok(AssignmentResult { column_to_atom: vec![], total_score: 0.0 });
    }
    // 1-based potentials; p[j] = row matched to column j (0 = free)
    let mut u = vec![0.0f64; r + 1];
    let mut v = vec![0.0f64; d + 1];
    let mut p = vec![0usize; d + 1];
    let mut way = vec![0usize; d + 1];
    for i in 1..=r {
        p[0] = i;
        let mut j0 = 0usize;
        let mut minv = vec![f64::INFINITY; d + 1];
        let mut used = vec![false; d + 1];
        loop {
            used[j0] = true;
            let i0 = p[j0];
            let mut delta = f64::INFINITY;
            let mut j1 = 0usize;
            for j in 1..=d {
                if !used[j] {
                    let cur = -score.get(i0 - 1, j - 1) - u[i0] - v[j];
                    if cur < minv[j] {
                        minv[j] = cur;
                        way[j] = j0;
                    }
                    if minv[j] < delta {
                        delta = minv[j];
                        j1 = j;
                    }
                }
            }
            for j in 0..=d {
                if used[j] {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
            if p[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }
    let mut column_to_atom = vec![0usize; r];
    for j in 1..=d {
        if p[j] != 0 {
            column_to_atom[p[j] - 1] = j - 1;
        }
    }
    let total_score = column_to_atom
        .iter()
        .enumerate()
        .map(|(i, &j)| score.get(i, j))
        .sum();
    Ok(AssignmentResult { column_to_atom, total_score })
}

/// Largest singular value via power iteration on the smaller of `M M^T` and
/// `M^T M`, relative tolerance 1e-10, iteration cap 500.
pub fn spectral_norm(m: &Matrix) -> Result<f64> {
    if m.rows() == 0 || m.cols() == 0 {
        return Err(Error::InvalidInput("spectral_norm of empty matrix".into()));
    }
    let g = if m.rows() <= m.cols() { m.matmul_t(m) } else { m.t_matmul(m) };
    let n = g.rows();
    // deterministic start with a mild index ramp so it is never orthogonal
    // to the top eigenvector by symmetry
    let mut v: Vec<f64> = (0..n).map(|i| 1.0 + 1e-3 * i as f64).collect();
    let norm0 = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    v.iter_mut().for_each(|x| *x /= norm0);
    let mut lambda = 0.0f64;
    for _ in 0..500 {
        let mut w = vec![0.0; n];
        for i in 0..n {
            let row = g.row(i);
            w[i] = row.iter().zip(&v).map(|(a, b)| a * b).sum();
        }
        let wnorm = w.iter().map(|x| x * x).sum::<f64>().sqrt();
        if wnorm == 0.0 {
            return Ok(0.0);
        }
        let rayleigh: f64 = v.iter().zip(&w).map(|(a, b)| a * b).sum();
        for (x, ww) in v.iter_mut().zip(&w) {
            *x = ww / wnorm;
        }
        if (rayleigh - lambda).abs() <= 1e-10 * rayleigh.abs().max(1e-300) {
            return Ok(rayleigh.max(0.0).sqrt());
        }
        lambda = rayleigh;
    }
    Err(Error::NonConvergence("power iteration hit the 500-iteration cap".into()))
}

/// Outcome of the brute-force spark search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SparkResult {
    /// Smallest number of linearly dependent columns.
    Spark(usize),
    /// Every subset of size up to `kmax` had full rank.
    ExceedsKmax,
}

impl std::fmt::Display for SparkResult {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SparkResult::Spark(k) => write!(f, "{k}"),
            SparkResult::ExceedsKmax => write!(f, "exceeds kmax"),
        }
    }
}

const SPARK_SUBSET_BUDGET: f64 = 1e6;
const SPARK_RANK_TOL: f64 = 1e-10;

fn binomial(n: usize, k: usize) -> f64 {
    let mut acc = 1.0f64;
    for i in 0..k {
        acc = acc * (n - i) as f64 / (i + 1) as f64;
    }
    acc
}

/// Smallest `k <= kmax` such that some `k`-column subset of `d` is
/// rank-deficient, by exhaustive search level by level. A subset counts as
/// deficient when some column's distance to the span of the previous columns
/// (the Cholesky pivot of the subset Gram) drops below `1e-10` times the
/// largest column norm in the subset. Each level is budgeted at `C(d, k) <= 1e6`
/// subsets.
pub fn spark_bruteforce(d: &Matrix, kmax: usize) -> Result<SparkResult> {
    let (l, natoms) = d.shape();
    if kmax == 0 || kmax > (l + 1).min(natoms) {
        return Err(Error::InvalidInput(format!(
            "kmax must be in 1..=min(L+1, d) = {}",
            (l + 1).min(natoms)
        )));
    }
    let norms: Vec<f64> = (0..natoms).map(|j| d.col_norm(j)).collect();
    if norms.iter().any(|&n| n == 0.0) {
        return Ok(SparkResult::Spark(1));
    }
    // full atom Gram so subset Grams are table lookups
    let gram = d.gram();
    for k in 2..=kmax {
        if binomial(natoms, k) > SPARK_SUBSET_BUDGET {
            return Err(Error::CombinatorialBudget(format!(
                "C({natoms},{k}) > {SPARK_SUBSET_BUDGET:.0} subsets; lower kmax or the atom count"
            )));
        }
        if level_has_deficient_subset(&gram, &norms, k) {
            return Ok(SparkResult::Spark(k));
        }
    }
    Ok(SparkResult::ExceedsKmax)
}

/// DFS over lexicographic k-subsets with an incrementally grown Cholesky
/// factor of the subset Gram. Only the deepest level can fire: smaller
/// deficient subsets would have been found at earlier levels.
fn level_has_deficient_subset(gram: &Matrix, norms: &[f64], k: usize) -> bool {
    let mut chosen = vec![0usize; k];
    let mut chol = vec![0.0f64; k * k];
    let mut maxnorm = vec![0.0f64; k + 1];

    fn dfs(
        gram: &Matrix,
        norms: &[f64],
        k: usize,
        depth: usize,
        start: usize,
        chosen: &mut [usize],
        chol: &mut [f64],
        maxnorm: &mut [f64],
    ) -> bool {
        let natoms = norms.len();
        for c in start..natoms - (k - depth - 1) {
            // forward substitution: w = L^{-1} gram[chosen[..depth], c]
            let mut wnorm_sq = 0.0;
            let mut w = [0.0f64; 32];
            for i in 0..depth {
                let mut s = gram.get(chosen[i], c);
                for (j, wj) in w.iter().enumerate().take(i) {
                    s -= chol[i * k + j] * wj;
                }
                let v = s / chol[i * k + i];
                w[i] = v;
                wnorm_sq += v * v;
            }
            let scale = maxnorm[depth].max(norms[c]);
            let pivot_sq = gram.get(c, c) - wnorm_sq;
            let thresh = SPARK_RANK_TOL * scale;
            if pivot_sq <= thresh * thresh {
                return true;
            }
            if depth + 1 < k {
                chosen[depth] = c;
                for (j, wj) in w.iter().enumerate().take(depth) {
                    chol[depth * k + j] = *wj;
                }
                chol[depth * k + depth] = pivot_sq.sqrt();
                maxnorm[depth + 1] = scale;
                if dfs(gram, norms, k, depth + 1, c + 1, chosen, chol, maxnorm) {
                    return true;
                }
            }
        }
        false
    }

    assert!(k <= 32, "spark levels beyond 32 exceed the subset budget anyway");
    maxnorm[0] = 0.0;
    dfs(gram, norms, k, 0, 0, &mut chosen, &mut chol, &mut maxnorm)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::rng_from_seed;
    use rand::Rng;

    fn random_spd(n: usize, seed: u64) -> Matrix {
        let mut rng = rng_from_seed(seed);
        let a = Matrix::from_fn(n + 3, n, |_, _| rng.gen_range(-1.0..1.0));
        let mut g = a.gram();
        for i in 0..n {
            let v = g.get(i, i) + 0.1;
            g.set(i, i, v);
        }
        g
    }

    #[test]
    fn solve_gram_identity_and_scaled() {
        let rhs = Matrix::from_vec(2, 3, vec![1., 2., 3., 4., 5., 6.]).unwrap();
        let x = solve_gram(&Matrix::identity(3), &rhs).unwrap();
        assert_eq!(x, rhs);
        let x = solve_gram(&Matrix::identity(3).scale(2.0), &rhs).unwrap();
        for (a, b) in x.data().iter().zip(rhs.data()) {
            assert!((a - b / 2.0).abs() < 1e-14);
        }
    }

    #[test]
    fn solve_gram_residual_small() {
        let g = random_spd(6, 3);
        let mut rng = rng_from_seed(4);
        let rhs = Matrix::from_fn(5, 6, |_, _| rng.gen_range(-2.0..2.0));
        let x = solve_gram(&g, &rhs).unwrap();
        let resid = x.matmul(&g).add_scaled(-1.0, &rhs);
        assert!(resid.frob_norm() / rhs.frob_norm() < 1e-10);
    }

    #[test]
    fn solve_gram_degenerate() {
        let g = Matrix::zeros(3, 3);
        let rhs = Matrix::zeros(1, 3);
        match solve_gram(&g, &rhs) {
            Err(Error::DegenerateGram(_)) => {}
            other => panic!("expected degenerate Gram, got {other:?}"),
        }
    }

    #[test]
    fn nnls_matches_unconstrained_when_feasible() {
        let g = random_spd(4, 9);
        // make the unconstrained optimum nonnegative: pick x >= 0, h = G x
        let xtrue = Matrix::from_vec(2, 4, vec![0.5, 1.0, 0.2, 0.0, 1.5, 0.1, 0.7, 2.0]).unwrap();
        let h = xtrue.matmul(&g);
        let x = nnls(&g, &h).unwrap();
        let free = solve_gram(&g, &h).unwrap();
        for (a, b) in x.data().iter().zip(free.data()) {
            assert!((a - b).abs() < 1e-8);
        }
    }

    #[test]
    fn nnls_diagonal_clamp() {
        let g = Matrix::identity(2);
        let h = Matrix::from_vec(1, 2, vec![-1.0, 2.0]).unwrap();
        let x = nnls(&g, &h).unwrap();
        assert!((x.get(0, 0) - 0.0).abs() < 1e-12);
        assert!((x.get(0, 1) - 2.0).abs() < 1e-12);
    }

    /// Exhaustive active-set oracle: tries all 2^n supports and keeps the
    /// best feasible KKT point.
    fn nnls_oracle(g: &Matrix, h: &[f64]) -> Vec<f64> {
        let n = g.rows();
        let mut best: Option<(f64, Vec<f64>)> = None;
        for mask in 0..(1u32 << n) {
            let idx: Vec<usize> = (0..n).filter(|j| mask & (1 << j) != 0).collect();
            let mut x = vec![0.0; n];
            if !idx.is_empty() {
                // Gaussian elimination on the subproblem, independent of solve_gram
                let p = idx.len();
                let mut a = vec![0.0f64; p * (p + 1)];
                for r in 0..p {
                    for c in 0..p {
                        a[r * (p + 1) + c] = g.get(idx[r], idx[c]);
                    }
                    a[r * (p + 1) + p] = h[idx[r]];
                }
                let mut ok = true;
                for col in 0..p {
                    let piv = (col..p)
                        .max_by(|&x1, &x2| {
                            a[x1 * (p + 1) + col]
                                .abs()
                                .partial_cmp(&a[x2 * (p + 1) + col].abs())
                                .unwrap()
                        })
                        .unwrap();
                    if a[piv * (p + 1) + col].abs() < 1e-12 {
                        ok = false;
                        break;
                    }
                    for c in 0..=p {
                        a.swap(col * (p + 1) + c, piv * (p + 1) + c);
                    }
                    let d = a[col * (p + 1) + col];
                    for r in 0..p {
                        if r != col {
                            let f = a[r * (p + 1) + col] / d;
                            for c in col..=p {
                                a[r * (p + 1) + c] -= f * a[col * (p + 1) + c];
                            }
                        }
                    }
                }
                if !ok {
                    continue;
                }
                let mut feasible = true;
                for r in 0..p {
                    let v = a[r * (p + 1) + p] / a[r * (p + 1) + r];
                    if v < 0.0 {
                        feasible = false;
                        break;
                    }
                    x[idx[r]] = v;
                }
                if !feasible {
                    continue;
                }
            }
            let mut obj = 0.0;
            for i in 0..n {
                for j in 0..n {
                    obj += x[i] * g.get(i, j) * x[j];
                }
                obj -= 2.0 * x[i] * h[i];
            }
            match &best {
                Some((b, _)) if *b <= obj => {}
                _ => best = Some((obj, x)),
            }
        }
        best.unwrap().1
    }

    #[test]
    fn nnls_kkt_and_oracle() {
        for seed in 0..25u64 {
            let n = 3 + (seed % 2) as usize;
            let g = random_spd(n, seed * 7 + 1);
            let mut rng = rng_from_seed(seed * 13 + 5);
            let hrow: Vec<f64> = (0..n).map(|_| rng.gen_range(-2.0..2.0)).collect();
            let h = Matrix::from_vec(1, n, hrow.clone()).unwrap();
            let x = nnls(&g, &h).unwrap();
            // KKT: active entries have ~zero gradient, zero entries nonneg-violating at most 1e-8
            for j in 0..n {
                let mut grad = -hrow[j];
                for k in 0..n {
                    grad += g.get(j, k) * x.get(0, k);
                }
                if x.get(0, j) > 0.0 {
                    assert!(grad.abs() < 1e-8, "active gradient {grad}");
                } else {
                    assert!(grad >= -1e-8, "inactive gradient {grad}");
                }
            }
            let oracle = nnls_oracle(&g, &hrow);
            for j in 0..n {
                assert!((x.get(0, j) - oracle[j]).abs() < 1e-7, "seed {seed} col {j}");
            }
        }
    }

    fn brute_force_assignment(score: &Matrix) -> f64 {
        fn rec(score: &Matrix, row: usize, used: &mut Vec<bool>, acc: f64, best: &mut f64) {
            let (r, d) = score.shape();
            if row == r {
                if acc > *best {
                    *best = acc;
                }
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
        let mut used = vec![false; score.cols()];
        rec(score, 0, &mut used, 0.0, &mut best);
        best
    }

    #[test]
    fn assignment_spec_example() {
        let score = Matrix::from_vec(2, 2, vec![0.9, 0.8, 0.9, 0.1]).unwrap();
        let res = assignment_max(&score).unwrap();
        assert_eq!(res.column_to_atom, vec![1, 0]);
        assert!((res.total_score - 1.7).abs() < 1e-12);
    }

    #[test]
    fn assignment_diagonal_dominant() {
        let score = Matrix::from_fn(3, 5, |i, j| if i == j { 10.0 } else { 0.1 });
        let res = assignment_max(&score).unwrap();
        assert_eq!(res.column_to_atom, vec![0, 1, 2]);
    }

    #[test]
    fn assignment_all_equal_prefers_low_indices() {
        let score = Matrix::from_fn(3, 4, |_, _| 1.0);
        let res = assignment_max(&score).unwrap();
        assert_eq!(res.column_to_atom, vec![0, 1, 2]);
    }

    #[test]
    fn assignment_needs_enough_atoms() {
        assert!(assignment_max(&Matrix::zeros(3, 2)).is_err());
    }

    #[test]
    fn assignment_matches_brute_force() {
        let mut rng = rng_from_seed(2024);
        for _ in 0..60 {
            let r = rng.gen_range(1..=5);
            let d = rng.gen_range(r..=8);
            let score = Matrix::from_fn(r, d, |_, _| rng.gen_range(0.0..1.0));
            let res = assignment_max(&score).unwrap();
            let best = brute_force_assignment(&score);
            assert!((res.total_score - best).abs() < 1e-9);
            let mut seen = vec![false; d];
            for &j in &res.column_to_atom {
                assert!(!seen[j]);
                seen[j] = true;
            }
        }
    }

    /// Test-only dense symmetric eigenvalue bound via inertia bisection
    /// (Sylvester's law on LDL^T of G - t I), independent of power iteration.
    fn max_eig_bisect(g: &Matrix) -> f64 {
        let n = g.rows();
        let count_above = |t: f64| -> usize {
            // LDL^T without pivoting; count positive pivots of G - t I
            let mut a = g.clone();
            for i in 0..n {
                let v = a.get(i, i) - t;
                a.set(i, i, v);
            }
            let mut pos = 0;
            let mut l = vec![0.0f64; n * n];
            let mut dvec = vec![0.0f64; n];
            for j in 0..n {
                let mut dj = a.get(j, j);
                for k in 0..j {
                    dj -= l[j * n + k] * l[j * n + k] * dvec[k];
                }
                dvec[j] = dj;
                if dj > 0.0 {
                    pos += 1;
                }
                for i in j + 1..n {
                    let mut v = a.get(i, j);
                    for k in 0..j {
                        v -= l[i * n + k] * l[j * n + k] * dvec[k];
                    }
                    l[i * n + j] = if dj != 0.0 { v / dj } else { 0.0 };
                }
            }
            pos
        };
        let bound: f64 = (0..n)
            .map(|i| (0..n).map(|j| g.get(i, j).abs()).sum::<f64>())
            .fold(0.0, f64::max);
        let (mut lo, mut hi) = (-bound - 1.0, bound + 1.0);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if count_above(mid) >= 1 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    }

    #[test]
    fn spectral_norm_cases() {
        assert!((spectral_norm(&Matrix::identity(4)).unwrap() - 1.0).abs() < 1e-10);
        let d = Matrix::from_vec(2, 2, vec![3., 0., 0., 1.]).unwrap();
        assert!((spectral_norm(&d).unwrap() - 3.0).abs() < 1e-10);
        assert!(spectral_norm(&Matrix::zeros(0, 0)).is_err());

        let mut rng = rng_from_seed(31);
        for _ in 0..5 {
            let m = Matrix::from_fn(10, 10, |_, _| rng.gen_range(-1.0..1.0));
            let sigma = spectral_norm(&m).unwrap();
            let oracle = max_eig_bisect(&m.gram()).max(0.0).sqrt();
            assert!(
                (sigma - oracle).abs() <= 1e-8 * oracle.max(1.0),
                "sigma {sigma} oracle {oracle}"
            );
        }
    }

    #[test]
    fn spark_examples() {
        // [e1, e2, e1+e2]: only the full set of three columns is dependent
        let d = Matrix::from_vec(2, 3, vec![1., 0., 1., 0., 1., 1.]).unwrap();
        assert_eq!(spark_bruteforce(&d, 3).unwrap(), SparkResult::Spark(3));

        assert_eq!(spark_bruteforce(&Matrix::identity(3), 3).unwrap(), SparkResult::ExceedsKmax);

        let dup = Matrix::from_vec(2, 3, vec![1., 2., 2., 0., 1., 1.]).unwrap();
        assert_eq!(spark_bruteforce(&dup, 3).unwrap(), SparkResult::Spark(2));
    }

    #[test]
    fn spark_budget_and_validation() {
        let mut rng = rng_from_seed(5);
        let d = Matrix::from_fn(4, 1000, |_, _| rng.gen_range(-1.0..1.0));
        match spark_bruteforce(&d, 5) {
            Err(Error::CombinatorialBudget(_)) => {}
            other => panic!("expected budget error, got {other:?}"),
        }
        let small = Matrix::identity(3);
        assert!(spark_bruteforce(&small, 5).is_err()); // kmax > min(L+1, d)
    }
}
