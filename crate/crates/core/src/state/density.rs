use num_complex::Complex64;

use crate::eigen::{hermitian_eigensystem, Spectrum, HERMITIAN_TOL};
use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;
use crate::state::StateVector;

/// Trace deviation that is silently renormalized away.
pub const TRACE_TOL: f64 = 1e-8;
/// Most negative eigenvalue accepted (and clamped to zero).
pub const NEGATIVITY_TOL: f64 = 1e-10;

/// A validated density matrix: Hermitian, unit trace, positive semidefinite.
///
/// The spectrum is computed once at construction. Subsystem dimensions travel
/// with the matrix so partial traces need no caller-supplied shape.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    matrix: ComplexMatrix,
    spectrum: Spectrum,
    dims: Vec<usize>,
    clamped: usize,
}

impl DensityMatrix {
    /// Checks `m` and caches its spectrum.
    ///
    /// A trace within [`TRACE_TOL`] of one is renormalized; eigenvalues in
    /// `[−NEGATIVITY_TOL, 0)` are clamped to zero and counted.
    pub fn validate(m: ComplexMatrix, dims: Vec<usize>) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::NotSquare {
                rows: m.rows(),
                cols: m.cols(),
            });
        }
        if dims.is_empty() || dims.contains(&0) || dims.iter().product::<usize>() != m.rows() {
            return Err(Error::InvalidSubsystem(format!(
                "dims {dims:?} do not factor dimension {}",
                m.rows()
            )));
        }
        let deviation = m.hermitian_deviation()?;
        if deviation > HERMITIAN_TOL {
            return Err(Error::NotHermitian { deviation });
        }
        let mut matrix = m.hermitian_part()?;
        let trace = matrix.trace()?.re;
        if (trace - 1.0).abs() > TRACE_TOL {
            return Err(Error::TraceViolation { trace });
        }
        if trace != 1.0 {
            matrix = matrix.scale_real(trace.recip());
        }
        let mut spectrum = hermitian_eigensystem(&matrix)?;
        let mut clamped = 0;
        for lambda in &mut spectrum.eigenvalues {
            if *lambda < -NEGATIVITY_TOL {
                return Err(Error::NotPositive {
                    eigenvalue: *lambda,
                });
            }
            if *lambda < 0.0 {
                *lambda = 0.0;
                clamped += 1;
            }
        }
        Ok(Self {
            matrix,
            spectrum,
            dims,
            clamped,
        })
    }

    /// Single-subsystem density matrix.
    pub fn from_matrix(m: ComplexMatrix) -> Result<Self> {
        let n = m.rows();
        Self::validate(m, vec![n])
    }

    /// Rank-one projector `|ψ⟩⟨ψ|` with one subsystem per qubit.
    pub fn pure(psi: &StateVector) -> Result<Self> {
        let norm_sqr = psi.norm_sqr();
        if (norm_sqr - 1.0).abs() > crate::state::vector::NORM_TOL {
            return Err(Error::NotNormalized { norm_sqr });
        }
        let m = ComplexMatrix::outer(psi.amplitudes(), psi.amplitudes())?;
        Self::validate(m, vec![2; psi.qubit_count()])
    }

    /// `Σ_k w_k |ψ_k⟩⟨ψ_k|` for weights summing to one.
    pub fn mixture(components: &[(f64, StateVector)]) -> Result<Self> {
        let first = components
            .first()
            .ok_or_else(|| Error::InvalidShape("empty mixture".into()))?;
        let n = first.1.dim();
        let mut m = ComplexMatrix::zeros(n, n)?;
        for (w, psi) in components {
            if *w < 0.0 {
                return Err(Error::OutOfRange {
                    what: "mixture weight",
                    value: *w,
                    range: "[0, 1]",
                });
            }
            let proj = ComplexMatrix::outer(psi.amplitudes(), psi.amplitudes())?;
            m = m.add(&proj.scale_real(*w))?;
        }
        Self::validate(m, vec![2; first.1.qubit_count()])
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn spectrum(&self) -> &Spectrum {
        &self.spectrum
    }

    /// Clamped eigenvalues, descending.
    pub fn eigenvalues(&self) -> &[f64] {
        &self.spectrum.eigenvalues
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    /// How many slightly negative eigenvalues were clamped to zero.
    pub fn clamped_eigenvalues(&self) -> usize {
        self.clamped
    }

    /// `Tr ρ²`, from the spectrum.
    pub fn purity(&self) -> f64 {
        self.eigenvalues().iter().map(|l| l * l).sum()
    }

    /// Reduced state on the subsystems listed in `keep` (in ascending order).
    pub fn partial_trace(&self, keep: &[usize]) -> Result<Self> {
        let split = Split::new(&self.dims, keep)?;
        let kept = split.kept_offsets.len();
        let mut m = ComplexMatrix::zeros(kept, kept)?;
        for (r, &ro) in split.kept_offsets.iter().enumerate() {
            for (c, &co) in split.kept_offsets.iter().enumerate() {
                m[(r, c)] = split
                    .traced_offsets
                    .iter()
                    .map(|&t| self.matrix[(ro + t, co + t)])
                    .sum::<Complex64>();
            }
        }
        Self::validate(m, split.kept_dims)
    }

    /// `ρ_A ⊗ ρ_B` with concatenated subsystem dimensions.
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        let m = self.matrix.kron(&other.matrix)?;
        let dims = self.dims.iter().chain(&other.dims).copied().collect();
        Self::validate(m, dims)
    }

    /// `⟨v|ρ|v⟩`.
    pub fn expectation_in(&self, v: &[Complex64]) -> Result<f64> {
        let rv = self.matrix.apply(v)?;
        Ok(v.iter()
            .zip(&rv)
            .map(|(a, b)| a.conj() * b)
            .sum::<Complex64>()
            .re)
    }
}

/// Index bookkeeping for splitting a multipartite index into kept and traced
/// parts. With row-major subsystem ordering the full basis index is the sum of
/// a kept offset and a traced offset.
pub(crate) struct Split {
    pub kept_offsets: Vec<usize>,
    pub traced_offsets: Vec<usize>,
    pub kept_dims: Vec<usize>,
}

impl Split {
    pub fn new(dims: &[usize], keep: &[usize]) -> Result<Self> {
        if keep.is_empty() {
            return Err(Error::InvalidSubsystem("empty keep set".into()));
        }
        let mut keep_sorted = keep.to_vec();
        keep_sorted.sort_unstable();
        if keep_sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidSubsystem(format!(
                "duplicate index in {keep:?}"
            )));
        }
        if let Some(&bad) = keep_sorted.iter().find(|&&k| k >= dims.len()) {
            return Err(Error::InvalidSubsystem(format!(
                "index {bad} out of range for {} subsystems",
                dims.len()
            )));
        }
        let mut strides = vec![1usize; dims.len()];
        for k in (0..dims.len().saturating_sub(1)).rev() {
            strides[k] = strides[k + 1] * dims[k + 1];
        }
        let strides = &strides;
        let offsets = |axes: &[usize]| {
            axes.iter().fold(vec![0usize], |acc, &axis| {
                acc.iter()
                    .flat_map(|&base| (0..dims[axis]).map(move |d| base + d * strides[axis]))
                    .collect::<Vec<_>>()
            })
        };
        let traced: Vec<usize> = (0..dims.len())
            .filter(|k| !keep_sorted.contains(k))
            .collect();
        Ok(Self {
            kept_offsets: offsets(&keep_sorted),
            traced_offsets: offsets(&traced),
            kept_dims: keep_sorted.iter().map(|&k| dims[k]).collect(),
        })
    }
}
