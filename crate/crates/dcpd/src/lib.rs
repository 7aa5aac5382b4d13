//! Dictionary-constrained canonical polyadic decomposition (DCPD) of
//! third-order tensors, its matrix/self-dictionary specialization for
//! pure-pixel spectral unmixing, and a reproducible synthetic benchmark
//! harness.

pub mod dictionary;
pub mod error;
pub mod io;
pub mod matrix;
pub mod numerics;
pub mod rng;
pub mod selfdict;
pub mod solvers;
pub mod synthbench;
pub mod tensor;

pub use dictionary::{Dictionary, Selection};
pub use error::{Error, Result};
pub use matrix::Matrix;
pub use solvers::{FitReport, SolverConfig, SolverKind};
pub use tensor::{Factors, Tensor3};

// The guide's code blocks compile and run as doc-tests, keeping the book in
// sync with the library.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub struct Introduction;
    #[doc = include_str!("../../../book/src/tensors.md")]
    pub struct Tensors;
    #[doc = include_str!("../../../book/src/dictionary-model.md")]
    pub struct DictionaryModel;
    #[doc = include_str!("../../../book/src/solvers.md")]
    pub struct Solvers;
    #[doc = include_str!("../../../book/src/self-dictionary.md")]
    pub struct SelfDictionary;
    #[doc = include_str!("../../../book/src/benchmark.md")]
    pub struct Benchmark;
    #[doc = include_str!("../../../book/src/cli.md")]
    pub struct Cli;
}

#[cfg(test)]
pub(crate) mod testutil {
    use crate::dictionary::{project, Dictionary, Selection};
    use crate::matrix::Matrix;
    use crate::rng::rng_from_seed;
    use crate::tensor::{cpd_reconstruct, Factors, Tensor3};
    use rand::seq::index::sample;
    use rand_distr::{Distribution, StandardNormal};

    pub fn unit_dictionary(l: usize, d: usize, seed: u64) -> Dictionary {
        let mut rng = rng_from_seed(seed);
        let mut atoms = Matrix::from_fn(l, d, |_, _| StandardNormal.sample(&mut rng));
        atoms.normalize_cols();
        Dictionary::new(atoms, None).unwrap()
    }

    pub fn normalized_gaussian(rows: usize, cols: usize, seed: u64) -> Matrix {
        let mut rng = rng_from_seed(seed);
        let mut m = Matrix::from_fn(rows, cols, |_, _| StandardNormal.sample(&mut rng));
        m.normalize_cols();
        m
    }

    /// A clean DCPD instance: unit-norm dictionary, distinct selected atoms
    /// with +1 signs, well-conditioned normalized A and C, noiseless tensor.
    pub fn dcpd_instance(
        dims: (usize, usize, usize),
        d: usize,
        r: usize,
        seed: u64,
    ) -> (Tensor3, Factors, Selection, Dictionary) {
        let dict = unit_dictionary(dims.1, d, seed);
        let mut rng = rng_from_seed(seed ^ 0xabcd);
        let indices = sample(&mut rng, d, r).into_vec();
        let sel = Selection::new(indices, vec![1; r]).unwrap();
        let a = normalized_gaussian(dims.0, r, seed ^ 1);
        let c = normalized_gaussian(dims.2, r, seed ^ 2);
        let b = project(&sel, &dict).unwrap();
        let truth = Factors::new(a, b, c).unwrap();
        let t = cpd_reconstruct(&truth);
        (t, truth, sel, dict)
    }
}
