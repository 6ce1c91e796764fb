use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::{check_budget, ComplexMatrix};
use crate::state::DensityMatrix;

/// Tolerance on `|Σ|c_i|² − 1|` for a state to count as normalized.
pub const NORM_TOL: f64 = 1e-10;

/// A normalized pure state of `m` qubits.
///
/// Qubit 0 is the leftmost ket symbol and the most significant bit of the
/// basis index, so `|001⟩` has amplitude at index 1.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    amplitudes: Vec<Complex64>,
    qubits: usize,
}

fn qubits_for(dim: usize) -> Result<usize> {
    if dim < 2 || !dim.is_power_of_two() {
        return Err(Error::InvalidShape(format!(
            "state dimension {dim} is not a power of two ≥ 2"
        )));
    }
    check_budget(dim)?;
    Ok(dim.trailing_zeros() as usize)
}

impl StateVector {
    /// Wraps amplitudes that are already normalized within [`NORM_TOL`].
    pub fn new(amplitudes: Vec<Complex64>) -> Result<Self> {
        let qubits = qubits_for(amplitudes.len())?;
        if amplitudes
            .iter()
            .any(|z| !(z.re.is_finite() && z.im.is_finite()))
        {
            return Err(Error::NotNormalized { norm_sqr: f64::NAN });
        }
        let norm_sqr: f64 = amplitudes.iter().map(Complex64::norm_sqr).sum();
        if (norm_sqr - 1.0).abs() > NORM_TOL {
            return Err(Error::NotNormalized { norm_sqr });
        }
        Ok(Self { amplitudes, qubits })
    }

    /// Rescales arbitrary non-zero amplitudes to unit norm.
    pub fn normalized(mut amplitudes: Vec<Complex64>) -> Result<Self> {
        let norm_sqr: f64 = amplitudes.iter().map(Complex64::norm_sqr).sum();
        if !(norm_sqr > 0.0 && norm_sqr.is_finite()) {
            return Err(Error::NotNormalized { norm_sqr });
        }
        let inv = norm_sqr.sqrt().recip();
        for z in &mut amplitudes {
            *z *= inv;
        }
        Self::new(amplitudes)
    }

    /// Computational basis state `|b_0 b_1 … b_{m-1}⟩`.
    pub fn basis(bits: &[u8]) -> Result<Self> {
        if bits.is_empty() {
            return Err(Error::InvalidShape("empty bit list".into()));
        }
        if let Some(&b) = bits.iter().find(|&&b| b > 1) {
            return Err(Error::InvalidShape(format!("bit value {b} is not 0 or 1")));
        }
        let dim = 1usize << bits.len();
        let index = bits.iter().fold(0usize, |acc, &b| (acc << 1) | b as usize);
        Self::basis_index(dim, index)
    }

    /// Standard basis vector `e_index` in dimension `dim`.
    pub fn basis_index(dim: usize, index: usize) -> Result<Self> {
        qubits_for(dim)?;
        if index >= dim {
            return Err(Error::InvalidShape(format!(
                "index {index} ≥ dimension {dim}"
            )));
        }
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); dim];
        amplitudes[index] = Complex64::new(1.0, 0.0);
        Self::new(amplitudes)
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn qubit_count(&self) -> usize {
        self.qubits
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn amplitude(&self, index: usize) -> Complex64 {
        self.amplitudes[index]
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(Complex64::norm_sqr).sum()
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &Self) -> Result<Complex64> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                op: "inner",
                left: (self.dim(), 1),
                right: (other.dim(), 1),
            });
        }
        Ok(self
            .amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    /// `|⟨self|other⟩|²`.
    pub fn fidelity(&self, other: &Self) -> Result<f64> {
        self.inner(other).map(|z| z.norm_sqr())
    }

    /// `|self⟩ ⊗ |other⟩`, with `self` supplying the leading qubits.
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        check_budget(self.dim() * other.dim())?;
        let amplitudes = self
            .amplitudes
            .iter()
            .flat_map(|a| other.amplitudes.iter().map(move |b| a * b))
            .collect();
        Self::new(amplitudes)
    }

    pub fn as_column(&self) -> ComplexMatrix {
        ComplexMatrix::column(&self.amplitudes).expect("state dimension within budget")
    }

    /// Reduced density matrix on the qubits in `keep`, i.e. the partial trace
    /// of `|ψ⟩⟨ψ|` over the rest, computed without forming the full projector.
    pub fn reduced_density(&self, keep: &[usize]) -> Result<DensityMatrix> {
        let dims = vec![2; self.qubits];
        let split = crate::state::density::Split::new(&dims, keep)?;
        let kept = split.kept_offsets.len();
        let mut m = ComplexMatrix::zeros(kept, kept)?;
        for (r, &ro) in split.kept_offsets.iter().enumerate() {
            for (c, &co) in split.kept_offsets.iter().enumerate().skip(r) {
                let z: Complex64 = split
                    .traced_offsets
                    .iter()
                    .map(|&t| self.amplitudes[ro + t] * self.amplitudes[co + t].conj())
                    .sum();
                m[(r, c)] = z;
                m[(c, r)] = z.conj();
            }
        }
        DensityMatrix::validate(m, split.kept_dims)
    }
}
