use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::model::QuantumNumbers;

/// Default upper bound on the number of basis states.
pub const DEFAULT_CAPACITY: usize = 20_000;

/// Circular oscillator state `|n+, n-, n_z>`; `mu = n+ - n-` and
/// `n_rho = min(n+, n-)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BasisState {
    pub n_plus: u32,
    pub n_minus: u32,
    pub n_z: u32,
}

impl BasisState {
    pub fn new(n_plus: u32, n_minus: u32, n_z: u32) -> Self {
        Self { n_plus, n_minus, n_z }
    }

    pub fn mu(&self) -> i32 {
        self.n_plus as i32 - self.n_minus as i32
    }

    pub fn n_rho(&self) -> u32 {
        self.n_plus.min(self.n_minus)
    }

    /// `n+ + n-`
    pub fn planar_quanta(&self) -> u32 {
        self.n_plus + self.n_minus
    }

    pub fn quantum_numbers(&self) -> QuantumNumbers {
        QuantumNumbers::new(self.n_rho(), self.mu(), self.n_z)
    }

    pub fn from_quantum_numbers(qn: QuantumNumbers) -> Self {
        let shift = qn.mu.unsigned_abs();
        if qn.mu >= 0 {
            Self::new(qn.n_rho + shift, qn.n_rho, qn.n_z)
        } else {
            Self::new(qn.n_rho, qn.n_rho + shift, qn.n_z)
        }
    }

    pub(crate) fn out_of_basis(&self) -> Error {
        Error::StateOutOfBasis { n_plus: self.n_plus, n_minus: self.n_minus, n_z: self.n_z }
    }
}

/// All states with `n+ + n- <= n_xy` and `n_z <= n_z_max`, ordered by
/// `(n+ + n-, n_z, mu)` ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedBasis {
    n_xy: u32,
    n_z: u32,
    states: Vec<BasisState>,
    index: BTreeMap<BasisState, usize>,
}

/// `(n_xy + 1)(n_xy + 2)/2 * (n_z + 1)`
pub fn basis_size(n_xy: u32, n_z: u32) -> usize {
    let xy = (n_xy as usize + 1) * (n_xy as usize + 2) / 2;
    xy * (n_z as usize + 1)
}

pub fn enumerate_basis(n_xy: u32, n_z: u32) -> Result<TruncatedBasis> {
    enumerate_basis_with_capacity(n_xy, n_z, DEFAULT_CAPACITY)
}

pub fn enumerate_basis_with_capacity(n_xy: u32, n_z: u32, capacity: usize) -> Result<TruncatedBasis> {
    let size = basis_size(n_xy, n_z);
    if size > capacity {
        return Err(Error::CapacityExceeded { requested: size, limit: capacity });
    }
    let mut states = Vec::with_capacity(size);
    for total in 0..=n_xy {
        for nz in 0..=n_z {
            // mu ascending means n+ ascending
            for n_plus in 0..=total {
                states.push(BasisState::new(n_plus, total - n_plus, nz));
            }
        }
    }
    let index = states.iter().enumerate().map(|(i, s)| (*s, i)).collect();
    Ok(TruncatedBasis { n_xy, n_z, states, index })
}

impl TruncatedBasis {
    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn cutoffs(&self) -> (u32, u32) {
        (self.n_xy, self.n_z)
    }

    pub fn states(&self) -> &[BasisState] {
        &self.states
    }

    pub fn state(&self, i: usize) -> BasisState {
        self.states[i]
    }

    pub fn contains(&self, s: &BasisState) -> bool {
        s.planar_quanta() <= self.n_xy && s.n_z <= self.n_z
    }

    pub fn index_of(&self, s: &BasisState) -> Option<usize> {
        self.index.get(s).copied()
    }

    pub fn require(&self, s: &BasisState) -> Result<usize> {
        self.index_of(s).ok_or_else(|| s.out_of_basis())
    }
}
