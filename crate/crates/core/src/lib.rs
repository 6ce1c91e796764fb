//! Entropy gain and information loss of quantum states under measurement.
//!
//! The crate is layered bottom-up:
//!
//! - [`matrix`] and [`eigen`]: dense complex matrices and a Jacobi eigensolver
//!   for Hermitian input.
//! - [`state`]: pure states, validated density matrices, partial traces,
//!   single-qubit gates and constructors for Bell, GHZ, W, Werner and
//!   maximally mixed states.
//! - [`measurement`]: Born-rule PMFs, realized density matrices and
//!   PMF-induced states in declared bases, including the rotated
//!   polarization bases of a two-photon Bell test.
//! - [`metrics`]: von Neumann and Shannon entropy, information
//!   retrievability (`e^{−S}`) and loss (`1 − e^{−S}`), polar bias and mutual
//!   quantum entropy.
//! - [`scenarios`]: end-to-end reproductions (single-qubit and Bell sweeps,
//!   Bell inequality, teleportation, GHZ/W robustness, Werner states).

pub mod eigen;
pub mod error;
pub mod matrix;
pub mod measurement;
pub mod metrics;
pub mod sample;
pub mod scenarios;
pub mod state;

pub use num_complex::Complex64;

pub use eigen::{hermitian_eigensystem, Spectrum};
pub use error::{Error, Result};
pub use matrix::ComplexMatrix;
pub use measurement::{BellSetting, MeasurementBasis, Pmf, PolarizationVariant};
pub use metrics::{InfoReport, LogBase, Transition};
pub use state::{BellKind, DensityMatrix, Gate, StateVector};
