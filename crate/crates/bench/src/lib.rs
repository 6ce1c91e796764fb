//! Seeded fixtures shared by the benchmarks.

use qinfo_core::{sample, ComplexMatrix, DensityMatrix, StateVector};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn hermitian(n: usize) -> ComplexMatrix {
    sample::random_hermitian(&mut rng(n as u64), n).expect("small matrix")
}

pub fn density(dim: usize) -> DensityMatrix {
    sample::random_density(&mut rng(dim as u64 + 100), dim).expect("small matrix")
}

pub fn state(qubits: usize) -> StateVector {
    sample::random_state(&mut rng(qubits as u64 + 200), qubits).expect("small state")
}
