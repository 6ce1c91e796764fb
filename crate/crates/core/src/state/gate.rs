use std::f64::consts::{FRAC_1_SQRT_2, PI};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;
use crate::state::StateVector;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GateKind {
    H,
    X,
    U3,
}

/// A single-qubit unitary.
#[derive(Debug, Clone, PartialEq)]
pub struct Gate {
    kind: GateKind,
    /// `(θ, φ, λ)` for U3; zeros otherwise.
    params: [f64; 3],
    matrix: ComplexMatrix,
}

impl Gate {
    pub fn h() -> Self {
        let s = FRAC_1_SQRT_2;
        Self {
            kind: GateKind::H,
            params: [0.0; 3],
            matrix: ComplexMatrix::from_real(2, 2, &[s, s, s, -s]).expect("2x2"),
        }
    }

    pub fn x() -> Self {
        Self {
            kind: GateKind::X,
            params: [0.0; 3],
            matrix: ComplexMatrix::from_real(2, 2, &[0.0, 1.0, 1.0, 0.0]).expect("2x2"),
        }
    }

    /// `U3(θ, φ, λ) = [[cos θ/2, −e^{iλ} sin θ/2], [e^{iφ} sin θ/2, e^{i(φ+λ)} cos θ/2]]`.
    pub fn u3(theta: f64, phi: f64, lambda: f64) -> Self {
        let (s, c) = (theta / 2.0).sin_cos();
        let matrix = ComplexMatrix::new(
            2,
            2,
            vec![
                Complex64::new(c, 0.0),
                -Complex64::from_polar(s, lambda),
                Complex64::from_polar(s, phi),
                Complex64::from_polar(c, phi + lambda),
            ],
        )
        .expect("2x2");
        Self {
            kind: GateKind::U3,
            params: [theta, phi, lambda],
            matrix,
        }
    }

    /// Relative phase gate `U3(0, 0, φ) = diag(1, e^{iφ})`.
    pub fn phase(phi: f64) -> Self {
        Self::u3(0.0, 0.0, phi)
    }

    /// Pauli Z as the phase gate at π.
    pub fn z() -> Self {
        Self::phase(PI)
    }

    pub fn kind(&self) -> GateKind {
        self.kind
    }

    pub fn params(&self) -> [f64; 3] {
        self.params
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    /// Applies the gate to qubit `target` of `psi`.
    pub fn apply(&self, target: usize, psi: &StateVector) -> Result<StateVector> {
        let m = psi.qubit_count();
        if target >= m {
            return Err(Error::QubitIndex {
                index: target,
                qubits: m,
            });
        }
        let stride = 1usize << (m - 1 - target);
        let u = &self.matrix;
        let mut out = psi.amplitudes().to_vec();
        for base in 0..psi.dim() {
            if base & stride != 0 {
                continue;
            }
            let a0 = out[base];
            let a1 = out[base | stride];
            out[base] = u[(0, 0)] * a0 + u[(0, 1)] * a1;
            out[base | stride] = u[(1, 0)] * a0 + u[(1, 1)] * a1;
        }
        StateVector::new(out)
    }
}

/// Functional form of [`Gate::apply`].
pub fn apply_gate(gate: &Gate, target: usize, psi: &StateVector) -> Result<StateVector> {
    gate.apply(target, psi)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: &StateVector, b: &[Complex64]) -> bool {
        a.amplitudes()
            .iter()
            .zip(b)
            .all(|(x, y)| (x - y).norm() < 1e-14)
    }

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn gates_are_unitary() {
        for g in [Gate::h(), Gate::x(), Gate::u3(1.1, -0.3, 2.4), Gate::z()] {
            assert!(g.matrix().is_unitary(1e-10), "{:?}", g.kind());
        }
    }

    #[test]
    fn x_flips_zero() {
        let zero = StateVector::basis(&[0]).unwrap();
        let out = Gate::x().apply(0, &zero).unwrap();
        assert!(close(&out, &[c(0.0), c(1.0)]));
    }

    #[test]
    fn hadamard_after_x() {
        let zero = StateVector::basis(&[0]).unwrap();
        let out = Gate::h()
            .apply(0, &Gate::x().apply(0, &zero).unwrap())
            .unwrap();
        assert!(close(&out, &[c(FRAC_1_SQRT_2), c(-FRAC_1_SQRT_2)]));
    }

    #[test]
    fn phase_gate_on_minus_state() {
        let phi = 0.9;
        let minus = Gate::h()
            .apply(0, &StateVector::basis(&[1]).unwrap())
            .unwrap();
        let out = Gate::phase(phi).apply(0, &minus).unwrap();
        let expected = [c(FRAC_1_SQRT_2), -Complex64::from_polar(FRAC_1_SQRT_2, phi)];
        assert!(close(&out, &expected));
    }

    #[test]
    fn targets_follow_msb_convention() {
        // X on qubit 2 of |000⟩ gives |001⟩ at index 1.
        let psi = StateVector::basis(&[0, 0, 0]).unwrap();
        let out = Gate::x().apply(2, &psi).unwrap();
        assert_eq!(out.amplitude(1), c(1.0));
        assert!(matches!(
            Gate::x().apply(3, &psi),
            Err(Error::QubitIndex {
                index: 3,
                qubits: 3
            })
        ));
    }

    #[test]
    fn norm_is_preserved() {
        let psi = StateVector::normalized(vec![
            Complex64::new(0.3, 0.1),
            Complex64::new(-0.2, 0.5),
            Complex64::new(0.7, 0.0),
            Complex64::new(0.1, -0.4),
        ])
        .unwrap();
        for g in [Gate::h(), Gate::x(), Gate::u3(0.4, 1.0, 2.0)] {
            for t in 0..2 {
                assert!((g.apply(t, &psi).unwrap().norm_sqr() - 1.0).abs() < 1e-14);
            }
        }
    }
}
