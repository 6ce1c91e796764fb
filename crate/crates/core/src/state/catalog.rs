//! Constructors for every state family used by the scenarios.

use std::f64::consts::FRAC_1_SQRT_2;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::{check_budget, ComplexMatrix};
use crate::state::{DensityMatrix, Gate, StateVector};

/// Computational basis state from a bit list (`[0, 1, 0]` is `|010⟩`).
pub fn make_cb_state(bits: &[u8]) -> Result<StateVector> {
    StateVector::basis(bits)
}

/// `U3(θ, φ, 0)|0⟩ = cos(θ/2)|0⟩ + e^{iφ} sin(θ/2)|1⟩`.
pub fn make_u3_state(theta: f64, phi: f64) -> StateVector {
    let zero = StateVector::basis(&[0]).expect("one qubit");
    Gate::u3(theta, phi, 0.0)
        .apply(0, &zero)
        .expect("single-qubit target")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BellKind {
    PhiPlus,
    PhiMinus,
    PsiPlus,
    PsiMinus,
}

impl BellKind {
    pub const ALL: [BellKind; 4] = [
        BellKind::PhiPlus,
        BellKind::PhiMinus,
        BellKind::PsiPlus,
        BellKind::PsiMinus,
    ];

    pub fn label(self) -> &'static str {
        match self {
            BellKind::PhiPlus => "Phi+",
            BellKind::PhiMinus => "Phi-",
            BellKind::PsiPlus => "Psi+",
            BellKind::PsiMinus => "Psi-",
        }
    }

    /// Amplitudes over `|00⟩, |01⟩, |10⟩, |11⟩`.
    pub fn amplitudes(self) -> [f64; 4] {
        let s = FRAC_1_SQRT_2;
        match self {
            BellKind::PhiPlus => [s, 0.0, 0.0, s],
            BellKind::PhiMinus => [s, 0.0, 0.0, -s],
            BellKind::PsiPlus => [0.0, s, s, 0.0],
            BellKind::PsiMinus => [0.0, s, -s, 0.0],
        }
    }
}

impl fmt::Display for BellKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for BellKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BellKind::ALL
            .into_iter()
            .find(|k| k.label().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::MalformedLabels(format!("unknown Bell state `{s}`")))
    }
}

/// One of the four Bell states.
pub fn make_bell(kind: BellKind) -> StateVector {
    let amps = kind.amplitudes().map(|a| Complex64::new(a, 0.0)).to_vec();
    StateVector::new(amps).expect("Bell amplitudes are normalized")
}

fn require_multi(m: usize) -> Result<()> {
    if m < 2 {
        return Err(Error::OutOfRange {
            what: "qubit count",
            value: m as f64,
            range: "m ≥ 2",
        });
    }
    if m >= usize::BITS as usize {
        return Err(Error::DimensionBudget {
            requested: usize::MAX,
            limit: crate::matrix::DIMENSION_BUDGET,
        });
    }
    check_budget(1usize << m)
}

/// `(|0…0⟩ + |1…1⟩)/√2` on `m ≥ 2` qubits.
pub fn make_ghz(m: usize) -> Result<StateVector> {
    require_multi(m)?;
    let dim = 1usize << m;
    let mut amps = vec![Complex64::new(0.0, 0.0); dim];
    amps[0] = Complex64::new(FRAC_1_SQRT_2, 0.0);
    amps[dim - 1] = Complex64::new(FRAC_1_SQRT_2, 0.0);
    StateVector::new(amps)
}

/// Equal superposition of the `m` single-excitation basis states.
pub fn make_w(m: usize) -> Result<StateVector> {
    require_multi(m)?;
    let dim = 1usize << m;
    let a = Complex64::new((m as f64).sqrt().recip(), 0.0);
    let mut amps = vec![Complex64::new(0.0, 0.0); dim];
    for k in 0..m {
        amps[1 << k] = a;
    }
    StateVector::new(amps)
}

pub const WERNER_ALPHA_MIN: f64 = -1.0 / 3.0;
pub const WERNER_ALPHA_MAX: f64 = 1.0;

/// `α|Ψ⁻⟩⟨Ψ⁻| + (1 − α) I₄/4` for `−1/3 ≤ α ≤ 1`.
pub fn make_werner(alpha: f64) -> Result<DensityMatrix> {
    if !(WERNER_ALPHA_MIN - 1e-12..=WERNER_ALPHA_MAX + 1e-12).contains(&alpha) {
        return Err(Error::OutOfRange {
            what: "alpha",
            value: alpha,
            range: "[-1/3, 1]",
        });
    }
    let psi = make_bell(BellKind::PsiMinus);
    let singlet = ComplexMatrix::outer(psi.amplitudes(), psi.amplitudes())?;
    let noise = ComplexMatrix::identity(4)?.scale_real((1.0 - alpha) / 4.0);
    let m = singlet.scale_real(alpha).add(&noise)?;
    DensityMatrix::validate(m, vec![2, 2])
}

/// Maximally mixed state `I/2^m` on `m ≥ 1` qubits.
pub fn make_mms(m: usize) -> Result<DensityMatrix> {
    if m < 1 {
        return Err(Error::OutOfRange {
            what: "qubit count",
            value: 0.0,
            range: "m ≥ 1",
        });
    }
    if m >= usize::BITS as usize {
        return Err(Error::DimensionBudget {
            requested: usize::MAX,
            limit: crate::matrix::DIMENSION_BUDGET,
        });
    }
    let dim = 1usize << m;
    check_budget(dim)?;
    let mm = ComplexMatrix::identity(dim)?.scale_real((dim as f64).recip());
    DensityMatrix::validate(mm, vec![2; m])
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn re(z: Complex64) -> f64 {
        assert!(z.im.abs() < 1e-15);
        z.re
    }

    #[test]
    fn cb_states() {
        assert_eq!(
            make_cb_state(&[0]).unwrap().amplitudes(),
            &[Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)]
        );
        let s = make_cb_state(&[1, 1]).unwrap();
        assert_eq!(s.amplitude(3), Complex64::new(1.0, 0.0));
        let s = make_cb_state(&[0, 1, 0]).unwrap();
        assert_eq!(s.dim(), 8);
        assert_eq!(s.amplitude(2), Complex64::new(1.0, 0.0));
        assert!(make_cb_state(&[]).is_err());
    }

    #[test]
    fn u3_states() {
        let s = make_u3_state(0.0, 1.234);
        assert!((s.amplitude(0) - Complex64::new(1.0, 0.0)).norm() < 1e-15);
        assert!(s.amplitude(1).norm() < 1e-15);

        let phi = 0.77;
        let s = make_u3_state(PI / 2.0, phi);
        assert!((s.amplitude(0) - Complex64::new(FRAC_1_SQRT_2, 0.0)).norm() < 1e-15);
        assert!((s.amplitude(1) - Complex64::from_polar(FRAC_1_SQRT_2, phi)).norm() < 1e-15);

        let s = make_u3_state(PI / 3.0, 0.0);
        assert!((re(s.amplitude(0)) - 3f64.sqrt() / 2.0).abs() < 1e-15);
        assert!((re(s.amplitude(1)) - 0.5).abs() < 1e-15);
    }

    #[test]
    fn bell_states_are_orthonormal() {
        for a in BellKind::ALL {
            for b in BellKind::ALL {
                let ip = make_bell(a).inner(&make_bell(b)).unwrap();
                let expected = if a == b { 1.0 } else { 0.0 };
                assert!((ip - Complex64::new(expected, 0.0)).norm() < 1e-15);
            }
        }
        let psi_minus = make_bell(BellKind::PsiMinus);
        assert!(re(psi_minus.amplitude(1)) > 0.0 && re(psi_minus.amplitude(2)) < 0.0);
        assert_eq!("psi-".parse::<BellKind>().unwrap(), BellKind::PsiMinus);
    }

    #[test]
    fn ghz_family() {
        let g3 = make_ghz(3).unwrap();
        assert!((re(g3.amplitude(0)) - FRAC_1_SQRT_2).abs() < 1e-15);
        assert!((re(g3.amplitude(7)) - FRAC_1_SQRT_2).abs() < 1e-15);
        assert_eq!(make_ghz(2).unwrap(), make_bell(BellKind::PhiPlus));
        let g5 = make_ghz(5).unwrap();
        assert_eq!(g5.amplitudes().iter().filter(|z| z.norm() > 0.0).count(), 2);
        assert!(make_ghz(1).is_err());
        assert!(matches!(make_ghz(13), Err(Error::DimensionBudget { .. })));
    }

    #[test]
    fn w_family() {
        let w3 = make_w(3).unwrap();
        for idx in [1, 2, 4] {
            assert!((re(w3.amplitude(idx)) - 3f64.sqrt().recip()).abs() < 1e-15);
        }
        let w2 = make_w(2).unwrap();
        assert!((w2.fidelity(&make_bell(BellKind::PsiPlus)).unwrap() - 1.0).abs() < 1e-15);
        let w4 = make_w(4).unwrap();
        let nz: Vec<f64> = w4
            .amplitudes()
            .iter()
            .filter(|z| z.norm() > 0.0)
            .map(|z| z.re)
            .collect();
        assert_eq!(nz, vec![0.5; 4]);
        assert!(make_w(0).is_err());
    }

    #[test]
    fn werner_family() {
        let mms = make_werner(0.0).unwrap();
        assert!(
            mms.matrix()
                .max_abs_diff(&ComplexMatrix::identity(4).unwrap().scale_real(0.25))
                .unwrap()
                < 1e-15
        );
        let pure = make_werner(1.0).unwrap();
        assert!((pure.purity() - 1.0).abs() < 1e-12);
        let third = make_werner(1.0 / 3.0).unwrap();
        let expected = [0.5, 1.0 / 6.0, 1.0 / 6.0, 1.0 / 6.0];
        for (l, x) in third.eigenvalues().iter().zip(expected) {
            assert!((l - x).abs() < 1e-9);
        }
        assert!(make_werner(-0.34).is_err());
        assert!(make_werner(1.01).is_err());
        assert!(make_werner(-1.0 / 3.0).is_ok());
    }

    #[test]
    fn werner_spectrum_matches_closed_form() {
        for k in 0..=40 {
            let alpha = -1.0 / 3.0 + k as f64 * (4.0 / 3.0) / 40.0;
            let rho = make_werner(alpha).unwrap();
            let mut expected = vec![
                (1.0 + 3.0 * alpha) / 4.0,
                (1.0 - alpha) / 4.0,
                (1.0 - alpha) / 4.0,
                (1.0 - alpha) / 4.0,
            ];
            expected.sort_by(|a, b| b.total_cmp(a));
            for (l, x) in rho.eigenvalues().iter().zip(&expected) {
                assert!((l - x.max(0.0)).abs() < 1e-9, "alpha {alpha}: {l} vs {x}");
            }
        }
    }

    #[test]
    fn mms_family() {
        let m1 = make_mms(1).unwrap();
        assert!(
            m1.matrix()
                .max_abs_diff(&ComplexMatrix::diagonal(&[0.5, 0.5]).unwrap())
                .unwrap()
                == 0.0
        );
        assert_eq!(make_mms(2).unwrap().dims(), &[2, 2]);
        for m in 1..=5 {
            assert!((make_mms(m).unwrap().purity() - 0.5f64.powi(m as i32)).abs() < 1e-15);
        }
        assert!(make_mms(0).is_err());
        assert!(make_mms(13).is_err());
    }
}
