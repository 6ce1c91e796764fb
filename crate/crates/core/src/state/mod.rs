//! Pure states, density matrices, single-qubit gates and the state catalog.

mod catalog;
pub(crate) mod density;
mod gate;
pub(crate) mod vector;

pub use catalog::{
    make_bell, make_cb_state, make_ghz, make_mms, make_u3_state, make_w, make_werner, BellKind,
    WERNER_ALPHA_MAX, WERNER_ALPHA_MIN,
};
pub use density::{DensityMatrix, NEGATIVITY_TOL, TRACE_TOL};
pub use gate::{apply_gate, Gate, GateKind};
pub use vector::{StateVector, NORM_TOL};

use crate::error::Result;
use crate::matrix::ComplexMatrix;

pub fn pure_density(psi: &StateVector) -> Result<DensityMatrix> {
    DensityMatrix::pure(psi)
}

pub fn purity(rho: &DensityMatrix) -> f64 {
    rho.purity()
}

pub fn validate_density(m: ComplexMatrix, dims: Vec<usize>) -> Result<DensityMatrix> {
    DensityMatrix::validate(m, dims)
}

pub fn partial_trace(rho: &DensityMatrix, keep: &[usize]) -> Result<DensityMatrix> {
    rho.partial_trace(keep)
}

pub fn tensor(a: &DensityMatrix, b: &DensityMatrix) -> Result<DensityMatrix> {
    a.tensor(b)
}
