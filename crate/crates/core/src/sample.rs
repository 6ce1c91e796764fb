//! Random states and operators for property checks and benchmarks.

use num_complex::Complex64;
use rand::Rng;
use rand_distr::{Exp1, StandardNormal};

use crate::error::Result;
use crate::matrix::ComplexMatrix;
use crate::state::{DensityMatrix, StateVector};

fn gaussian(rng: &mut impl Rng) -> Complex64 {
    Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

/// Haar-random pure state on `m` qubits.
pub fn random_state(rng: &mut impl Rng, m: usize) -> Result<StateVector> {
    StateVector::normalized((0..1usize << m).map(|_| gaussian(rng)).collect())
}

/// Random full-rank density matrix `G G† / Tr(G G†)` from a Ginibre matrix.
pub fn random_density(rng: &mut impl Rng, dim: usize) -> Result<DensityMatrix> {
    let g = ComplexMatrix::new(dim, dim, (0..dim * dim).map(|_| gaussian(rng)).collect())?;
    let gg = g.matmul(&g.adjoint())?;
    let tr = gg.trace()?.re;
    DensityMatrix::validate(gg.scale_real(tr.recip()), vec![dim])
}

/// Random Hermitian matrix with standard-normal entries.
pub fn random_hermitian(rng: &mut impl Rng, n: usize) -> Result<ComplexMatrix> {
    let mut m = ComplexMatrix::zeros(n, n)?;
    for i in 0..n {
        m[(i, i)] = Complex64::new(rng.sample(StandardNormal), 0.0);
        for j in (i + 1)..n {
            let z = gaussian(rng);
            m[(i, j)] = z;
            m[(j, i)] = z.conj();
        }
    }
    Ok(m)
}

/// Uniform draw from the probability simplex of `n` outcomes.
pub fn random_probabilities(rng: &mut impl Rng, n: usize) -> Vec<f64> {
    let w: Vec<f64> = (0..n).map(|_| rng.sample::<f64, _>(Exp1)).collect();
    let total: f64 = w.iter().sum();
    w.into_iter().map(|x| x / total).collect()
}

/// Random normalized pair `(a, b)` with `|a|² + |b|² = 1`.
pub fn random_qubit_amplitudes(rng: &mut impl Rng) -> (Complex64, Complex64) {
    let (a, b) = (gaussian(rng), gaussian(rng));
    let n = (a.norm_sqr() + b.norm_sqr()).sqrt();
    (a / n, b / n)
}
