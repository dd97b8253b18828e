use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::basis::{enumerate_basis_with_capacity, BasisState, TruncatedBasis, DEFAULT_CAPACITY};
use super::ladder::{apply, LadderScales};
use crate::error::{Error, Result};
use crate::model::PhysicalParams;
use crate::opalg::{CanonicalOp, NumericOperatorPolynomial, OpExponents};

/// Dense complex operator matrix over a truncated basis, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct OperatorMatrix {
    basis: Arc<TruncatedBasis>,
    data: Vec<Complex64>,
}

impl OperatorMatrix {
    pub fn zeros(basis: Arc<TruncatedBasis>) -> Self {
        let n = basis.len();
        Self { basis, data: vec![Complex64::new(0.0, 0.0); n * n] }
    }

    pub fn identity(basis: Arc<TruncatedBasis>) -> Self {
        let mut m = Self::zeros(basis);
        for i in 0..m.dim() {
            m[(i, i)] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_diagonal(basis: Arc<TruncatedBasis>, diag: &[f64]) -> Result<Self> {
        if diag.len() != basis.len() {
            return Err(Error::DimensionMismatch { left: diag.len(), right: basis.len() });
        }
        let mut m = Self::zeros(basis);
        for (i, &d) in diag.iter().enumerate() {
            m[(i, i)] = Complex64::new(d, 0.0);
        }
        Ok(m)
    }

    /// Builds a matrix from a row-major function of `(row, column)`.
    pub fn from_fn(basis: Arc<TruncatedBasis>, f: impl Fn(usize, usize) -> Complex64) -> Self {
        let n = basis.len();
        let data = (0..n * n).map(|k| f(k / n, k % n)).collect();
        Self { basis, data }
    }

    pub fn basis(&self) -> &Arc<TruncatedBasis> {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn diagonal(&self) -> Vec<Complex64> {
        (0..self.dim()).map(|i| self[(i, i)]).collect()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// `max |A - A^dag|`
    pub fn hermiticity_defect(&self) -> f64 {
        let n = self.dim();
        let mut worst = 0.0_f64;
        for i in 0..n {
            for j in i..n {
                worst = worst.max((self[(i, j)] - self[(j, i)].conj()).norm());
            }
        }
        worst
    }

    /// Largest off-diagonal modulus.
    pub fn off_diagonal_max(&self) -> f64 {
        let n = self.dim();
        let mut worst = 0.0_f64;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    worst = worst.max(self[(i, j)].norm());
                }
            }
        }
        worst
    }

    pub fn scaled(&self, factor: f64) -> Self {
        Self {
            basis: self.basis.clone(),
            data: self.data.iter().map(|c| c * factor).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch { left: self.dim(), right: other.dim() });
        }
        Ok(Self {
            basis: self.basis.clone(),
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        })
    }

    /// `A v` for a dense vector.
    pub fn apply(&self, v: &[Complex64]) -> Vec<Complex64> {
        let n = self.dim();
        (0..n)
            .map(|i| self.data[i * n..(i + 1) * n].iter().zip(v).map(|(a, x)| a * x).sum())
            .collect()
    }

    /// The principal submatrix on `indices`, as an nalgebra matrix.
    pub fn restrict(&self, indices: &[usize]) -> DMatrix<Complex64> {
        DMatrix::from_fn(indices.len(), indices.len(), |r, c| self[(indices[r], indices[c])])
    }

    /// Hermitian part `(A + A^dag)/2` restricted to `indices`.
    pub(crate) fn hermitian_block(&self, indices: &[usize]) -> DMatrix<Complex64> {
        DMatrix::from_fn(indices.len(), indices.len(), |r, c| {
            let (i, j) = (indices[r], indices[c]);
            (self[(i, j)] + self[(j, i)].conj()) * 0.5
        })
    }
}

impl core::ops::Index<(usize, usize)> for OperatorMatrix {
    type Output = Complex64;
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[i * self.dim() + j]
    }
}

impl core::ops::IndexMut<(usize, usize)> for OperatorMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        let n = self.dim();
        &mut self.data[i * n + j]
    }
}

/// Matrix of a single canonical operator projected onto `basis`. Products of
/// these truncated matrices are not exact near the cutoff; use [`assemble`]
/// for polynomials.
pub fn elementary_matrix(op: CanonicalOp, basis: Arc<TruncatedBasis>, params: &PhysicalParams) -> OperatorMatrix {
    let scales = LadderScales::new(params);
    let mut m = OperatorMatrix::zeros(basis.clone());
    for (col, s) in basis.states().iter().enumerate() {
        for (t, amp) in apply(op, *s, &scales).iter() {
            if let Some(row) = basis.index_of(t) {
                m[(row, col)] += amp;
            }
        }
    }
    m
}

/// Column-sparse operator on a padded basis.
struct SparseOperator {
    columns: Vec<Vec<(usize, Complex64)>>,
}

impl SparseOperator {
    fn build(op: CanonicalOp, basis: &TruncatedBasis, scales: &LadderScales) -> Self {
        let columns = basis
            .states()
            .iter()
            .map(|s| {
                apply(op, *s, scales)
                    .iter()
                    .filter_map(|(t, a)| basis.index_of(t).map(|r| (r, *a)))
                    .collect()
            })
            .collect();
        Self { columns }
    }

    fn apply(&self, v: &BTreeMap<usize, Complex64>) -> BTreeMap<usize, Complex64> {
        let mut out = BTreeMap::new();
        for (&j, &x) in v {
            for &(i, a) in &self.columns[j] {
                *out.entry(i).or_insert(Complex64::new(0.0, 0.0)) += a * x;
            }
        }
        out
    }
}

/// Matrix of a numeric polynomial on `basis`. Each word is applied factor by
/// factor on a basis padded by the polynomial degree, so every matrix element
/// inside `basis` is exact.
pub fn assemble(poly: &NumericOperatorPolynomial, basis: Arc<TruncatedBasis>, params: &PhysicalParams) -> Result<OperatorMatrix> {
    assemble_with_padding(poly, basis, params, poly.degree())
}

/// [`assemble`] with an explicit padding. Paddings below the degree truncate
/// intermediate states and give cutoff-dependent matrix elements.
pub fn assemble_with_padding(
    poly: &NumericOperatorPolynomial,
    basis: Arc<TruncatedBasis>,
    params: &PhysicalParams,
    padding: u32,
) -> Result<OperatorMatrix> {
    let (n_xy, n_z) = basis.cutoffs();
    let padded = enumerate_basis_with_capacity(n_xy + padding, n_z + padding, DEFAULT_CAPACITY)?;
    let scales = LadderScales::new(params);

    let mut used = [false; 6];
    for (ops, _) in poly.terms() {
        for op in ops.factors() {
            used[op.index()] = true;
        }
    }
    let ops: Vec<Option<SparseOperator>> = CanonicalOp::ALL
        .iter()
        .map(|&op| used[op.index()].then(|| SparseOperator::build(op, &padded, &scales)))
        .collect();

    let mut m = OperatorMatrix::zeros(basis.clone());
    let mut word: Vec<CanonicalOp> = Vec::new();
    for (col, s) in basis.states().iter().enumerate() {
        let start = padded.index_of(s).expect("padded basis contains the basis");
        for (exps, c) in poly.terms() {
            word.clear();
            word.extend(exps.factors());
            let mut v = BTreeMap::new();
            v.insert(start, Complex64::new(1.0, 0.0));
            for op in word.iter().rev() {
                v = ops[op.index()].as_ref().expect("operator built").apply(&v);
            }
            for (j, amp) in v {
                let t: BasisState = padded.state(j);
                if let Some(row) = basis.index_of(&t) {
                    m[(row, col)] += c * amp;
                }
            }
        }
    }
    Ok(m)
}

/// `<s|V|s>`, real part.
pub fn expectation(v: &OperatorMatrix, s: &BasisState) -> Result<f64> {
    let i = v.basis().require(s)?;
    Ok(v[(i, i)].re)
}

/// A word as a one-term numeric polynomial with unit coefficient.
pub fn word(ops: OpExponents) -> NumericOperatorPolynomial {
    NumericOperatorPolynomial::from_terms([(ops, Complex64::new(1.0, 0.0))])
}
