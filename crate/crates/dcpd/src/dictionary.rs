//! Dictionary storage, atom normalization, similarity scoring between factor
//! columns and atoms, and projection of a factor onto selected atoms.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::numerics::assignment_max;

/// An `L x d` atom matrix with optional class labels (one per atom).
#[derive(Debug, Clone)]
pub struct Dictionary {
    atoms: Matrix,
    unit_norm: bool,
    class_labels: Option<Vec<usize>>,
    norms: Vec<f64>,
}

impl Dictionary {
    /// Wraps an atom matrix. Fails if any atom is all-zero or if the label
    /// count does not match the atom count.
    pub fn new(atoms: Matrix, class_labels: Option<Vec<usize>>) -> Result<Self> {
        if atoms.rows() == 0 || atoms.cols() == 0 {
            return Err(Error::InvalidInput("dictionary must be nonempty".into()));
        }
        if let Some(labels) = &class_labels {
            if labels.len() != atoms.cols() {
                return Err(Error::InvalidInput(format!(
                    "{} class labels for {} atoms",
                    labels.len(),
                    atoms.cols()
                )));
            }
        }
        let norms: Vec<f64> = (0..atoms.cols()).map(|j| atoms.col_norm(j)).collect();
        if let Some(j) = norms.iter().position(|&n| n == 0.0) {
            return Err(Error::InvalidInput(format!("atom {j} is all-zero")));
        }
        let unit_norm = norms.iter().all(|&n| (n - 1.0).abs() <= 1e-12);
        Ok(Dictionary { atoms, unit_norm, class_labels, norms })
    }

    pub fn atoms(&self) -> &Matrix {
        &self.atoms
    }

    /// Number of atoms `d`.
    pub fn len(&self) -> usize {
        self.atoms.cols()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.cols() == 0
    }

    /// Row dimension `L` of the atoms.
    pub fn atom_dim(&self) -> usize {
        self.atoms.rows()
    }

    pub fn is_unit_norm(&self) -> bool {
        self.unit_norm
    }

    pub fn class_labels(&self) -> Option<&[usize]> {
        self.class_labels.as_deref()
    }

    pub fn atom_norm(&self, j: usize) -> f64 {
        self.norms[j]
    }
}

/// Scales every atom to unit l2 norm. Idempotent.
pub fn normalize_atoms(dict: &Dictionary) -> Dictionary {
    let mut atoms = dict.atoms.clone();
    for j in 0..atoms.cols() {
        atoms.scale_col(j, 1.0 / dict.norms[j]);
    }
    let norms = vec![1.0; atoms.cols()];
    Dictionary {
        atoms,
        unit_norm: true,
        class_labels: dict.class_labels.clone(),
        norms,
    }
}

/// An atom index and sign per factor column: the concrete encoding of a
/// binary selection matrix with exactly one 1 per column. The sign records
/// the orientation of the matched correlation so projection preserves fit
/// under the CPD sign ambiguity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Selection {
    pub indices: Vec<usize>,
    pub signs: Vec<i8>,
}

impl Selection {
    pub fn new(indices: Vec<usize>, signs: Vec<i8>) -> Result<Self> {
        if indices.len() != signs.len() {
            return Err(Error::InvalidInput("selection indices/signs length mismatch".into()));
        }
        if signs.iter().any(|s| *s != 1 && *s != -1) {
            return Err(Error::InvalidInput("selection signs must be +1 or -1".into()));
        }
        Ok(Selection { indices, signs })
    }

    pub fn rank(&self) -> usize {
        self.indices.len()
    }

    pub fn validate_against(&self, dict: &Dictionary) -> Result<()> {
        if let Some(&j) = self.indices.iter().find(|&&j| j >= dict.len()) {
            return Err(Error::InvalidInput(format!(
                "selection index {j} out of range for {} atoms",
                dict.len()
            )));
        }
        Ok(())
    }
}

/// `score[i, j] = |<b_i, atom_j>| / ||atom_j||`; zero columns of `b` score 0
/// everywhere.
pub fn match_scores(b: &Matrix, dict: &Dictionary) -> Result<Matrix> {
    raw_scores(b, dict).map(|m| {
        let mut m = m;
        for v in m.data_mut() {
            *v = v.abs();
        }
        m
    })
}

/// Signed version of [`match_scores`]: `<b_i, atom_j> / ||atom_j||`.
fn raw_scores(b: &Matrix, dict: &Dictionary) -> Result<Matrix> {
    if b.rows() != dict.atom_dim() {
        return Err(Error::InvalidInput(format!(
            "factor rows {} do not match atom dimension {}",
            b.rows(),
            dict.atom_dim()
        )));
    }
    // (B^T D)[i, j] = <b_i, atom_j>, computed in one pass over rows
    let mut scores = b.t_matmul(dict.atoms());
    for i in 0..scores.rows() {
        let row = scores.row_mut(i);
        for (j, v) in row.iter_mut().enumerate() {
            *v /= dict.norms[j];
        }
    }
    Ok(scores)
}

/// Picks one atom per column of `b`.
///
/// * `no_repeat = false`: per-column argmax of [`match_scores`], ties to the
///   lowest atom index.
/// * `no_repeat = true`: injective selection maximizing the total score via
///   the assignment kernel (requires `d >= R`).
/// * `nonneg = true`: scores are the raw (signed) correlations and every
///   sign is +1, for pipelines that keep all factors nonnegative.
///
/// Columns of `b` with zero norm score 0 everywhere and deterministically
/// select atom 0 with sign +1 (repeat mode); solvers flag this in their
/// reports.
pub fn select_atoms(b: &Matrix, dict: &Dictionary, no_repeat: bool, nonneg: bool) -> Result<Selection> {
    let r = b.cols();
    let scores = if nonneg { raw_scores(b, dict)? } else { match_scores(b, dict)? };
    let indices: Vec<usize> = if no_repeat {
        if dict.len() < r {
            return Err(Error::InvalidInput(format!(
                "no-repeat selection needs at least R={r} atoms, dictionary has {}",
                dict.len()
            )));
        }
        assignment_max(&scores)?.column_to_atom
    } else {
        (0..r)
            .map(|i| {
                let row = scores.row(i);
                let mut best = 0usize;
                for (j, &v) in row.iter().enumerate() {
                    if v > row[best] {
                        best = j;
                    }
                }
                best
            })
            .collect()
    };
    let signs = if nonneg {
        vec![1i8; r]
    } else {
        indices
            .iter()
            .enumerate()
            .map(|(i, &j)| {
                let dot = b.col_dot(i, dict.atoms(), j);
                if dot < 0.0 {
                    -1
                } else {
                    1
                }
            })
            .collect()
    };
    Selection::new(indices, signs)
}

/// Materializes the selected (signed) atoms as an `L x R` factor.
pub fn project(sel: &Selection, dict: &Dictionary) -> Result<Matrix> {
    sel.validate_against(dict)?;
    let l = dict.atom_dim();
    let mut out = Matrix::zeros(l, sel.rank());
    for (i, (&j, &s)) in sel.indices.iter().zip(&sel.signs).enumerate() {
        for row in 0..l {
            out.set(row, i, s as f64 * dict.atoms().get(row, j));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::rng_from_seed;
    use rand::Rng;

    fn dict_from(cols: Vec<Vec<f64>>) -> Dictionary {
        let l = cols[0].len();
        let d = cols.len();
        let atoms = Matrix::from_fn(l, d, |i, j| cols[j][i]);
        Dictionary::new(atoms, None).unwrap()
    }

    #[test]
    fn normalize_basics() {
        let dict = dict_from(vec![vec![3.0, 4.0], vec![0.0, 2.0]]);
        let n = normalize_atoms(&dict);
        assert!((n.atoms().get(0, 0) - 0.6).abs() < 1e-15);
        assert!((n.atoms().get(1, 0) - 0.8).abs() < 1e-15);
        assert!(n.is_unit_norm());
        let again = normalize_atoms(&n);
        assert_eq!(again.atoms(), n.atoms());

        let zero = Matrix::zeros(2, 1);
        assert!(Dictionary::new(zero, None).is_err());
    }

    #[test]
    fn scores_match_definition() {
        let mut rng = rng_from_seed(44);
        let atoms = Matrix::from_fn(5, 7, |_, _| rng.gen_range(-1.0..1.0));
        let dict = Dictionary::new(atoms, None).unwrap();
        let b = Matrix::from_fn(5, 3, |_, _| rng.gen_range(-1.0..1.0));
        let s = match_scores(&b, &dict).unwrap();
        for i in 0..3 {
            for j in 0..7 {
                let dot = b.col_dot(i, dict.atoms(), j);
                let expect = dot.abs() / dict.atom_norm(j);
                assert!((s.get(i, j) - expect).abs() < 1e-12);
            }
        }
        // dimension mismatch
        assert!(match_scores(&Matrix::zeros(4, 2), &dict).is_err());
    }

    #[test]
    fn zero_column_scores_zero_and_selects_atom_zero() {
        let dict = dict_from(vec![vec![1.0, 0.0], vec![0.0, 1.0]]);
        let b = Matrix::zeros(2, 1);
        let s = match_scores(&b, &dict).unwrap();
        assert!(s.data().iter().all(|&v| v == 0.0));
        let sel = select_atoms(&b, &dict, false, false).unwrap();
        assert_eq!(sel.indices, vec![0]);
        assert_eq!(sel.signs, vec![1]);
    }

    #[test]
    fn argmax_invariant_under_column_scaling() {
        let mut rng = rng_from_seed(17);
        let atoms = Matrix::from_fn(6, 9, |_, _| rng.gen_range(-1.0..1.0));
        let dict = normalize_atoms(&Dictionary::new(atoms, None).unwrap());
        let b = Matrix::from_fn(6, 4, |_, _| rng.gen_range(-1.0..1.0));
        let sel = select_atoms(&b, &dict, false, false).unwrap();
        let mut scaled = b.clone();
        for (j, s) in [(0usize, 2.5), (1, -5.0), (2, 0.1), (3, -0.01)] {
            scaled.scale_col(j, s);
        }
        let sel2 = select_atoms(&scaled, &dict, false, false).unwrap();
        assert_eq!(sel.indices, sel2.indices);
    }

    #[test]
    fn select_recovers_scaled_atoms_and_records_sign() {
        let mut rng = rng_from_seed(3);
        let atoms = Matrix::from_fn(8, 12, |_, _| rng.gen_range(-1.0..1.0));
        let dict = normalize_atoms(&Dictionary::new(atoms, None).unwrap());
        let picks = [4usize, 9, 0];
        let scales = [2.0, -3.0, 0.5];
        let b = Matrix::from_fn(8, 3, |i, c| scales[c] * dict.atoms().get(i, picks[c]));
        let sel = select_atoms(&b, &dict, false, false).unwrap();
        assert_eq!(sel.indices, picks.to_vec());
        assert_eq!(sel.signs, vec![1, -1, 1]);
        let proj = project(&sel, &dict).unwrap();
        // projection reproduces b up to the positive per-column scale
        for c in 0..3 {
            let ratio = b.get(0, c) / proj.get(0, c);
            assert!(ratio > 0.0);
            for i in 0..8 {
                assert!((b.get(i, c) - ratio * proj.get(i, c)).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn no_repeat_assigns_distinct_atoms() {
        // two identical columns of b competing for the same best atom
        let dict = dict_from(vec![vec![1.0, 0.0], vec![0.9, 0.1], vec![0.0, 1.0]]);
        let dict = normalize_atoms(&dict);
        let b = Matrix::from_fn(2, 2, |i, _| if i == 0 { 1.0 } else { 0.0 });
        let sel = select_atoms(&b, &dict, true, false).unwrap();
        let mut idx = sel.indices.clone();
        idx.sort_unstable();
        assert_eq!(idx, vec![0, 1]);
        // repeat mode collapses onto the single best atom
        let sel = select_atoms(&b, &dict, false, false).unwrap();
        assert_eq!(sel.indices, vec![0, 0]);
        // d < R in no-repeat mode errors
        let tiny = dict_from(vec![vec![1.0, 0.0]]);
        assert!(select_atoms(&b, &tiny, true, false).is_err());
    }

    #[test]
    fn tie_breaks_to_lowest_index() {
        let dict = dict_from(vec![vec![1.0, 0.0], vec![1.0, 0.0], vec![0.0, 1.0]]);
        let b = Matrix::from_fn(2, 1, |i, _| if i == 0 { 1.0 } else { 0.0 });
        let sel = select_atoms(&b, &dict, false, false).unwrap();
        assert_eq!(sel.indices, vec![0]);
    }

    #[test]
    fn nonneg_mode_uses_raw_scores() {
        // b anti-correlated with atom 0, weakly correlated with atom 1
        let dict = dict_from(vec![vec![1.0, 0.0], vec![0.5, 0.5]]);
        let dict = normalize_atoms(&dict);
        let b = Matrix::from_fn(2, 1, |i, _| if i == 0 { -1.0 } else { 0.2 });
        let signed = select_atoms(&b, &dict, false, false).unwrap();
        assert_eq!(signed.indices, vec![0]);
        assert_eq!(signed.signs, vec![-1]);
        let nn = select_atoms(&b, &dict, false, true).unwrap();
        assert_eq!(nn.indices, vec![1]);
        assert_eq!(nn.signs, vec![1]);
    }

    #[test]
    fn project_flips_sign() {
        let dict = dict_from(vec![vec![1.0, 2.0]]);
        let sel = Selection::new(vec![0], vec![-1]).unwrap();
        let p = project(&sel, &dict).unwrap();
        assert_eq!(p.col_vec(0), vec![-1.0, -2.0]);
    }
}
