//! Exact and numerical machinery for the three-dimensional charged harmonic
//! oscillator in a constant magnetic field with non-commutative phase space.
//!
//! The crate has two independent engines:
//!
//! * [`opalg`] is an exact computer-algebra kernel over normal-ordered
//!   polynomials in the six canonical operators `x, y, z, p_x, p_y, p_z`,
//!   with Gaussian-rational coefficients and Laurent monomials in the model
//!   symbols. It performs the Bopp-shift substitution and groups the result
//!   by powers of `theta` and `eta`.
//! * [`fock`] represents operators as matrices in a truncated circular
//!   oscillator basis, diagonalises them, and runs first-order perturbation
//!   theory and finite-difference slope checks.
//!
//! [`model`] holds the physical parameters and closed-form energies, and
//! [`verify`] compares everything against the reference expressions.
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod error;
pub mod fock;
pub mod model;
pub mod opalg;
pub mod verify;

pub use error::{Error, Result};
pub use model::{PhysicalParams, QuantumNumbers};
