//! Numerical engine in the circular (chiral) oscillator basis.
//!
//! Basis states are `|n+, n-, n_z>` with `L_z = hbar (n+ - n-)`. Ladder
//! operators use the reference frequencies `(w~, w~, omega)` whatever the
//! non-commutativity, so `alpha^2 H0` is exactly diagonal and `theta`, `eta`
//! only change matrix elements, never the basis.

mod basis;
mod eigen;
mod fd;
mod hamiltonian;
mod ladder;
mod matrix;
mod pt;

pub use basis::{basis_size, enumerate_basis, enumerate_basis_with_capacity, BasisState, TruncatedBasis, DEFAULT_CAPACITY};
pub use eigen::{connected_blocks, eigensolve, SpectrumResult, HERMITICITY_TOL};
pub use fd::{fd_slope, fd_slopes, richardson, FdOptions, MIN_TRACKING_OVERLAP};
pub use hamiltonian::{full_spectrum, Channel, ShiftedHamiltonian};
pub use ladder::{apply, Action, LadderScales};
pub use matrix::{assemble, assemble_with_padding, elementary_matrix, expectation, word, OperatorMatrix};
pub use pt::{degeneracy_clusters, first_order_pt, Cluster, PTResult};
