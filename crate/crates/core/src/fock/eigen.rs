use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use nalgebra::SymmetricEigen;
use num_complex::Complex64;

use super::basis::TruncatedBasis;
use super::matrix::OperatorMatrix;
use crate::error::{Error, Result};

/// Relative hermiticity defect accepted by [`eigensolve`].
pub const HERMITICITY_TOL: f64 = 1e-12;

/// Eigenvalues ascending, with optional orthonormal eigenvectors stored as
/// full-length columns in the same order.
#[derive(Clone, Debug)]
pub struct SpectrumResult {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: Option<Vec<Vec<Complex64>>>,
    pub basis: Arc<TruncatedBasis>,
}

impl SpectrumResult {
    pub fn ground_energy(&self) -> f64 {
        self.eigenvalues[0]
    }
}

/// Splits the index set into the connected components of the nonzero pattern
/// of `a` (ignoring exact zeros). Components are ordered by smallest index.
pub fn connected_blocks(a: &OperatorMatrix) -> Vec<Vec<usize>> {
    let n = a.dim();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    for i in 0..n {
        for j in (i + 1)..n {
            if a[(i, j)] != Complex64::new(0.0, 0.0) || a[(j, i)] != Complex64::new(0.0, 0.0) {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                if ri != rj {
                    parent[ri.max(rj)] = ri.min(rj);
                }
            }
        }
    }
    let mut slot = vec![usize::MAX; n];
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for i in 0..n {
        let r = find(&mut parent, i);
        if slot[r] == usize::MAX {
            slot[r] = blocks.len();
            blocks.push(Vec::new());
        }
        blocks[slot[r]].push(i);
    }
    blocks
}

/// Full dense eigendecomposition of a Hermitian matrix, block by block.
pub fn eigensolve(a: &OperatorMatrix, with_vectors: bool) -> Result<SpectrumResult> {
    let scale = a.max_abs();
    let defect = a.hermiticity_defect();
    if defect > HERMITICITY_TOL * scale.max(f64::MIN_POSITIVE) {
        return Err(Error::NonHermitianInput { defect });
    }
    let n = a.dim();
    let mut pairs: Vec<(f64, Option<Vec<Complex64>>)> = Vec::with_capacity(n);
    for block in connected_blocks(a) {
        let h = a.hermitian_block(&block);
        if block.len() == 1 {
            let v = with_vectors.then(|| {
                let mut v = vec![Complex64::new(0.0, 0.0); n];
                v[block[0]] = Complex64::new(1.0, 0.0);
                v
            });
            pairs.push((h[(0, 0)].re, v));
        } else if with_vectors {
            let max_iter = 1000 * block.len();
            let eig = SymmetricEigen::try_new(h, f64::EPSILON, max_iter).ok_or(Error::ConvergenceFailure)?;
            for k in 0..block.len() {
                let mut v = vec![Complex64::new(0.0, 0.0); n];
                for (r, &i) in block.iter().enumerate() {
                    v[i] = eig.eigenvectors[(r, k)];
                }
                pairs.push((eig.eigenvalues[k], Some(v)));
            }
        } else {
            for &e in h.symmetric_eigenvalues().iter() {
                pairs.push((e, None));
            }
        }
    }
    if pairs.iter().any(|(e, _)| !e.is_finite()) {
        return Err(Error::ConvergenceFailure);
    }
    pairs.sort_by(|a, b| a.0.total_cmp(&b.0));
    let (eigenvalues, vectors): (Vec<f64>, Vec<Option<Vec<Complex64>>>) = pairs.into_iter().unzip();
    let eigenvectors = with_vectors.then(|| vectors.into_iter().map(|v| v.expect("vector requested")).collect());
    Ok(SpectrumResult { eigenvalues, eigenvectors, basis: a.basis().clone() })
}

/// Eigenvalues of a small Hermitian block, ascending.
pub(crate) fn block_eigenvalues(h: nalgebra::DMatrix<Complex64>) -> Vec<f64> {
    let mut vals: Vec<f64> = h.symmetric_eigenvalues().iter().copied().collect();
    vals.sort_by(f64::total_cmp);
    vals
}
