//! Dense third-order tensors: storage, unfoldings, Khatri-Rao and Hadamard
//! products, rank-R reconstruction, norms, and seeded noise injection.
//!
//! Conventions (normative for the whole repo):
//! * `Tensor3` with dims `(K, L, M)` stores entry `(k, l, m)` at
//!   `k*L*M + l*M + m` (row-major).
//! * Unfoldings: mode 1 is `K x (L*M)` with column index `l*M + m`;
//!   mode 2 is `L x (K*M)` with column index `k*M + m`;
//!   mode 3 is `M x (K*L)` with column index `k*L + l`.
//!
//! With the Khatri-Rao product `(X kr Y)[i*q + j, r] = X[i,r] * Y[j,r]`
//! these orderings satisfy, for any factors `(A, B, C)`,
//! `unfold(T,1) = A (B kr C)^T`, `unfold(T,2) = B (A kr C)^T`, and
//! `unfold(T,3) = C (A kr B)^T` exactly.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::rng::rng_from_seed;
use rand_distr::{Distribution, StandardNormal};

/// Dense `K x L x M` tensor.
#[derive(Debug, Clone, PartialEq)]
pub struct Tensor3 {
    dims: (usize, usize, usize),
    data: Vec<f64>,
}

impl Tensor3 {
    pub fn zeros(dims: (usize, usize, usize)) -> Self {
        Tensor3 { dims, data: vec![0.0; dims.0 * dims.1 * dims.2] }
    }

    pub fn from_vec(dims: (usize, usize, usize), data: Vec<f64>) -> Result<Self> {
        if data.len() != dims.0 * dims.1 * dims.2 {
            return Err(Error::InvalidInput(format!(
                "tensor data length {} does not match {}x{}x{}",
                data.len(),
                dims.0,
                dims.1,
                dims.2
            )));
        }
        if data.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidInput("tensor contains non-finite entries".into()));
        }
        Ok(Tensor3 { dims, data })
    }

    pub fn dims(&self) -> (usize, usize, usize) {
        self.dims
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    #[inline]
    pub fn get(&self, k: usize, l: usize, m: usize) -> f64 {
        let (_, dl, dm) = self.dims;
        self.data[k * dl * dm + l * dm + m]
    }

    #[inline]
    pub fn set(&mut self, k: usize, l: usize, m: usize, v: f64) {
        let (_, dl, dm) = self.dims;
        self.data[k * dl * dm + l * dm + m] = v;
    }

    pub fn frob_norm_sq(&self) -> f64 {
        self.data.iter().map(|v| v * v).sum()
    }

    pub fn frob_norm(&self) -> f64 {
        self.frob_norm_sq().sqrt()
    }
}

/// CPD factor triple `(A, B, C)` with a shared column count `R`.
#[derive(Debug, Clone, PartialEq)]
pub struct Factors {
    pub a: Matrix,
    pub b: Matrix,
    pub c: Matrix,
}

impl Factors {
    pub fn new(a: Matrix, b: Matrix, c: Matrix) -> Result<Self> {
        if a.cols() != b.cols() || b.cols() != c.cols() {
            return Err(Error::InvalidInput(format!(
                "factor column counts differ: {} / {} / {}",
                a.cols(),
                b.cols(),
                c.cols()
            )));
        }
        if a.cols() == 0 {
            return Err(Error::InvalidInput("factors must have at least one column".into()));
        }
        Ok(Factors { a, b, c })
    }

    pub fn rank(&self) -> usize {
        self.a.cols()
    }

    pub fn dims(&self) -> (usize, usize, usize) {
        (self.a.rows(), self.b.rows(), self.c.rows())
    }
}

/// Matricizes `t` along `mode` (1, 2 or 3) with the crate's fixed column orderings.
pub fn unfold(t: &Tensor3, mode: usize) -> Result<Matrix> {
    let (k, l, m) = t.dims();
    let out = match mode {
        1 => {
            let mut u = Matrix::zeros(k, l * m);
            for kk in 0..k {
                // mode-1 rows are contiguous slabs of the tensor
                u.row_mut(kk).copy_from_slice(&t.data[kk * l * m..(kk + 1) * l * m]);
            }
            u
        }
        2 => {
            let mut u = Matrix::zeros(l, k * m);
            for kk in 0..k {
                for ll in 0..l {
                    for mm in 0..m {
                        u.set(ll, kk * m + mm, t.get(kk, ll, mm));
                    }
                }
            }
            u
        }
        3 => {
            let mut u = Matrix::zeros(m, k * l);
            for kk in 0..k {
                for ll in 0..l {
                    for mm in 0..m {
                        u.set(mm, kk * l + ll, t.get(kk, ll, mm));
                    }
                }
            }
            u
        }
        _ => return Err(Error::InvalidInput(format!("invalid unfolding mode {mode}"))),
    };
    Ok(out)
}

/// Exact inverse of [`unfold`].
pub fn refold(u: &Matrix, mode: usize, dims: (usize, usize, usize)) -> Result<Tensor3> {
    let (k, l, m) = dims;
    let expected = match mode {
        1 => (k, l * m),
        2 => (l, k * m),
        3 => (m, k * l),
        _ => return Err(Error::InvalidInput(format!("invalid unfolding mode {mode}"))),
    };
    if u.shape() != expected {
        return Err(Error::InvalidInput(format!(
            "refold mode {mode}: matrix is {:?} but dims {dims:?} require {expected:?}",
            u.shape()
        )));
    }
    let mut t = Tensor3::zeros(dims);
    match mode {
        1 => {
            for kk in 0..k {
                t.data[kk * l * m..(kk + 1) * l * m].copy_from_slice(u.row(kk));
            }
        }
        2 => {
            for kk in 0..k {
                for ll in 0..l {
                    for mm in 0..m {
                        t.set(kk, ll, mm, u.get(ll, kk * m + mm));
                    }
                }
            }
        }
        3 => {
            for kk in 0..k {
                for ll in 0..l {
                    for mm in 0..m {
                        t.set(kk, ll, mm, u.get(mm, kk * l + ll));
                    }
                }
            }
        }
        _ => unreachable!(),
    }
    Ok(t)
}

/// Khatri-Rao (columnwise Kronecker) product:
/// `(X kr Y)[i*q + j, r] = X[i, r] * Y[j, r]` for `X: p x R`, `Y: q x R`.
pub fn khatri_rao(x: &Matrix, y: &Matrix) -> Result<Matrix> {
    if x.cols() != y.cols() {
        return Err(Error::InvalidInput(format!(
            "khatri_rao column mismatch: {} vs {}",
            x.cols(),
            y.cols()
        )));
    }
    let (p, r) = x.shape();
    let q = y.rows();
    let mut out = Matrix::zeros(p * q, r);
    for i in 0..p {
        let xr = x.row(i);
        for j in 0..q
        {
            let yr = y.row(j);
            let orow = out.row_mut(i * q + j);
            for c in 0..r {
                orow[c] = xr[c] * yr[c];
            }
        }
    }
    Ok(out)
}

/// Elementwise (Hadamard) product of equal-shape matrices.
pub fn hadamard(x: &Matrix, y: &Matrix) -> Result<Matrix> {
    if x.shape() != y.shape() {
        return Err(Error::InvalidInput(format!(
            "hadamard shape mismatch: {:?} vs {:?}",
            x.shape(),
            y.shape()
        )));
    }
    let data = x.data().iter().zip(y.data()).map(|(a, b)| a * b).collect();
    Ok(Matrix::from_vec(x.rows(), x.cols(), data).expect("same shape"))
}

/// Evaluates the rank-R model: `T[k,l,m] = sum_r A[k,r] B[l,r] C[m,r]`.
pub fn cpd_reconstruct(f: &Factors) -> Tensor3 {
    let (k, l, m) = f.dims();
    let r = f.rank();
    let mut t = Tensor3::zeros((k, l, m));
    for kk in 0..k {
        let arow = f.a.row(kk);
        for ll in 0..l {
            let brow = f.b.row(ll);
            let base = kk * l * m + ll * m;
            for mm in 0..m {
                let crow = f.c.row(mm);
                let mut acc = 0.0;
                for rr in 0..r {
                    acc += arow[rr] * brow[rr] * crow[rr];
                }
                t.data[base + mm] = acc;
            }
        }
    }
    t
}

/// Relative Frobenius error `||t - that||_F / ||t||_F`.
pub fn rel_frob_err(t: &Tensor3, that: &Tensor3) -> Result<f64> {
    if t.dims() != that.dims() {
        return Err(Error::InvalidInput(format!(
            "tensor dims differ: {:?} vs {:?}",
            t.dims(),
            that.dims()
        )));
    }
    let denom = t.frob_norm();
    if denom == 0.0 {
        return Err(Error::InvalidInput("relative error undefined for zero tensor".into()));
    }
    let diff: f64 = t
        .data()
        .iter()
        .zip(that.data())
        .map(|(a, b)| (a - b) * (a - b))
        .sum();
    Ok(diff.sqrt() / denom)
}

/// Adds i.i.d. `N(0, sigma^2)` noise from a seeded generator and reports the
/// realized SNR in dB, `10 log10(||T||_F^2 / ||E||_F^2)` (infinite for `sigma = 0`).
pub fn add_gaussian_noise(t: &Tensor3, sigma: f64, seed: u64) -> Result<(Tensor3, f64)> {
    if sigma < 0.0 {
        return Err(Error::InvalidInput(format!("negative noise level {sigma}")));
    }
    if sigma == 0.0 {
        return Ok((t.clone(), f64::INFINITY));
    }
    let mut rng = rng_from_seed(seed);
    let mut noisy = t.clone();
    let mut noise_sq = 0.0;
    for v in noisy.data.iter_mut() {
        let e: f64 = StandardNormal.sample(&mut rng);
        let e = e * sigma;
        noise_sq += e * e;
        *v += e;
    }
    let snr = 10.0 * (t.frob_norm_sq() / noise_sq).log10();
    Ok((noisy, snr))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::Rng;

    fn rank_one(a: &[f64], b: &[f64], c: &[f64]) -> Tensor3 {
        let fa = Matrix::from_vec(a.len(), 1, a.to_vec()).unwrap();
        let fb = Matrix::from_vec(b.len(), 1, b.to_vec()).unwrap();
        let fc = Matrix::from_vec(c.len(), 1, c.to_vec()).unwrap();
        cpd_reconstruct(&Factors::new(fa, fb, fc).unwrap())
    }

    fn random_tensor(dims: (usize, usize, usize), seed: u64) -> Tensor3 {
        let mut rng = rng_from_seed(seed);
        let n = dims.0 * dims.1 * dims.2;
        Tensor3::from_vec(dims, (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect()).unwrap()
    }

    fn random_factors(dims: (usize, usize, usize), r: usize, seed: u64) -> Factors {
        let mut rng = rng_from_seed(seed);
        let mut gen = |rows: usize| {
            Matrix::from_fn(rows, r, |_, _| rng.gen_range(-1.0..1.0))
        };
        let a = gen(dims.0);
        let b = gen(dims.1);
        let c = gen(dims.2);
        Factors::new(a, b, c).unwrap()
    }

    #[test]
    fn unfold_mode2_rank_one() {
        let t = rank_one(&[1., 2.], &[1., 1.], &[1., -1.]);
        let u = unfold(&t, 2).unwrap();
        assert_eq!(u.row(0), &[1., -1., 2., -2.]);
    }

    #[test]
    fn unfold_trivial() {
        let t = Tensor3::from_vec((1, 1, 1), vec![5.0]).unwrap();
        let u = unfold(&t, 2).unwrap();
        assert_eq!(u.shape(), (1, 1));
        assert_eq!(u.get(0, 0), 5.0);
    }

    #[test]
    fn refold_trivial_and_mismatch() {
        let u = Matrix::from_vec(1, 1, vec![7.0]).unwrap();
        for mode in 1..=3 {
            let t = refold(&u, mode, (1, 1, 1)).unwrap();
            assert_eq!(t.data(), &[7.0]);
        }
        let bad = Matrix::zeros(2, 6);
        assert!(refold(&bad, 1, (3, 2, 2)).is_err());
    }

    #[test]
    fn invalid_mode_rejected() {
        let t = Tensor3::zeros((2, 2, 2));
        assert!(unfold(&t, 0).is_err());
        assert!(unfold(&t, 4).is_err());
    }

    #[test]
    fn round_trip_all_modes() {
        let t = random_tensor((3, 4, 5), 11);
        for mode in 1..=3 {
            let u = unfold(&t, mode).unwrap();
            let back = refold(&u, mode, t.dims()).unwrap();
            assert_eq!(back, t);
        }
    }

    #[test]
    fn khatri_rao_single_column() {
        let x = Matrix::from_vec(2, 1, vec![1., 2.]).unwrap();
        let y = Matrix::from_vec(2, 1, vec![3., 4.]).unwrap();
        let kr = khatri_rao(&x, &y).unwrap();
        assert_eq!(kr.data(), &[3., 4., 6., 8.]);
    }

    #[test]
    fn khatri_rao_identity_times_ones() {
        let x = Matrix::identity(2);
        let y = Matrix::from_vec(2, 2, vec![1.0; 4]).unwrap();
        let kr = khatri_rao(&x, &y).unwrap();
        assert_eq!(kr.col_vec(0), vec![1., 1., 0., 0.]);
        assert_eq!(kr.col_vec(1), vec![0., 0., 1., 1.]);
        assert!(khatri_rao(&x, &Matrix::zeros(2, 3)).is_err());
    }

    #[test]
    fn unfoldings_match_khatri_rao_products() {
        let f = random_factors((3, 4, 2), 3, 99);
        let t = cpd_reconstruct(&f);
        let checks = [
            (1, &f.a, khatri_rao(&f.b, &f.c).unwrap()),
            (2, &f.b, khatri_rao(&f.a, &f.c).unwrap()),
            (3, &f.c, khatri_rao(&f.a, &f.b).unwrap()),
        ];
        for (mode, factor, kr) in checks {
            let u = unfold(&t, mode).unwrap();
            let prod = factor.matmul_t(&kr);
            for (x, y) in u.data().iter().zip(prod.data()) {
                assert!((x - y).abs() < 1e-12, "mode {mode}");
            }
        }
    }

    #[test]
    fn hadamard_basics() {
        let x = Matrix::from_vec(2, 2, vec![1., 2., 3., 4.]).unwrap();
        let ones = Matrix::from_vec(2, 2, vec![1.0; 4]).unwrap();
        let zeros = Matrix::zeros(2, 2);
        assert_eq!(hadamard(&x, &ones).unwrap(), x);
        assert_eq!(hadamard(&x, &zeros).unwrap(), zeros);
        let d = Matrix::from_vec(2, 2, vec![2., 0., 0., 2.]).unwrap();
        assert_eq!(hadamard(&x, &d).unwrap().data(), &[2., 0., 0., 8.]);
        assert!(hadamard(&x, &Matrix::zeros(2, 3)).is_err());
    }

    #[test]
    fn reconstruct_trivial_cases() {
        let t = rank_one(&[1.], &[1.], &[1.]);
        assert_eq!(t.data(), &[1.0]);

        let t = rank_one(&[1., 0.], &[0., 1.], &[1.]);
        assert_eq!(t.get(0, 1, 0), 1.0);
        assert_eq!(t.data().iter().filter(|v| **v != 0.0).count(), 1);
    }

    #[test]
    fn reconstruct_scaling_invariance() {
        let f = random_factors((2, 3, 2), 2, 5);
        let t = cpd_reconstruct(&f);
        let (alpha, beta) = (2.5, -0.4);
        let g = Factors::new(
            f.a.scale(alpha),
            f.b.scale(beta),
            f.c.scale(1.0 / (alpha * beta)),
        )
        .unwrap();
        let t2 = cpd_reconstruct(&g);
        for (x, y) in t.data().iter().zip(t2.data()) {
            assert!((x - y).abs() < 1e-12);
        }
    }

    #[test]
    fn rel_err_cases() {
        let t = random_tensor((2, 2, 2), 3);
        assert_eq!(rel_frob_err(&t, &t).unwrap(), 0.0);
        let zero = Tensor3::zeros(t.dims());
        assert!((rel_frob_err(&t, &zero).unwrap() - 1.0).abs() < 1e-15);
        assert!(rel_frob_err(&zero, &t).is_err());

        let t34 = Tensor3::from_vec((1, 1, 2), vec![3., 4.]).unwrap();
        let z = Tensor3::zeros((1, 1, 2));
        assert!((rel_frob_err(&t34, &z).unwrap() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn noise_zero_sigma_and_determinism() {
        let t = random_tensor((2, 3, 2), 8);
        let (same, snr) = add_gaussian_noise(&t, 0.0, 1).unwrap();
        assert_eq!(same, t);
        assert!(snr.is_infinite());

        let (n1, s1) = add_gaussian_noise(&t, 0.1, 77).unwrap();
        let (n2, s2) = add_gaussian_noise(&t, 0.1, 77).unwrap();
        assert_eq!(n1, n2);
        assert_eq!(s1, s2);
        let (n3, _) = add_gaussian_noise(&t, 0.1, 78).unwrap();
        assert_ne!(n1, n3);

        assert!(add_gaussian_noise(&t, -0.1, 0).is_err());
    }

    proptest! {
        #[test]
        fn prop_round_trip(k in 1usize..5, l in 1usize..5, m in 1usize..5, seed in 0u64..1000) {
            let t = random_tensor((k, l, m), seed);
            for mode in 1..=3 {
                let u = unfold(&t, mode).unwrap();
                prop_assert_eq!(refold(&u, mode, t.dims()).unwrap(), t.clone());
            }
        }

        #[test]
        fn prop_unfold_kr_compatibility(seed in 0u64..200) {
            let f = random_factors((2, 3, 4), 2, seed);
            let t = cpd_reconstruct(&f);
            let u2 = unfold(&t, 2).unwrap();
            let kr = khatri_rao(&f.a, &f.c).unwrap();
            let prod = f.b.matmul_t(&kr);
            for (x, y) in u2.data().iter().zip(prod.data()) {
                prop_assert!((x - y).abs() < 1e-12);
            }
        }
    }
}
