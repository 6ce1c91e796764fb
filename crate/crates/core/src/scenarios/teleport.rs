use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::measurement::{born_pmf_mixed, realized_density, MeasurementBasis};
use crate::metrics::{von_neumann_entropy, LogBase};
use crate::state::{make_bell, BellKind, Gate, StateVector, NORM_TOL};

/// What Bob sees for one of Alice's Bell outcomes.
#[derive(Debug, Clone, PartialEq)]
pub struct TeleportOutcome {
    pub kind: BellKind,
    pub probability: f64,
    /// Bob's normalized state before correction.
    pub conditional: StateVector,
    pub corrected: StateVector,
    /// `|⟨ψ|corrected⟩|²`.
    pub fidelity: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TeleportationReport {
    pub alice_entropy: f64,
    pub alice_retrievability: f64,
    pub alice_loss: f64,
    pub classical_bits: u32,
    pub outcomes: Vec<TeleportOutcome>,
}

impl TeleportationReport {
    pub fn bell_probabilities(&self) -> Vec<f64> {
        self.outcomes.iter().map(|o| o.probability).collect()
    }

    pub fn min_fidelity(&self) -> f64 {
        self.outcomes
            .iter()
            .map(|o| o.fidelity)
            .fold(f64::INFINITY, f64::min)
    }
}

/// Gates Bob applies, in order, after learning Alice's outcome.
pub fn correction(kind: BellKind) -> Vec<Gate> {
    match kind {
        BellKind::PhiPlus => vec![],
        BellKind::PhiMinus => vec![Gate::z()],
        BellKind::PsiPlus => vec![Gate::x()],
        BellKind::PsiMinus => vec![Gate::x(), Gate::z()],
    }
}

/// Teleports `a|0⟩ + b|1⟩` from photon C to photon D through the pair
/// `Φ+` shared on (B, D). Qubit order is C, B, D.
pub fn teleportation_report(
    a: Complex64,
    b: Complex64,
    base: LogBase,
) -> Result<TeleportationReport> {
    let norm_sqr = a.norm_sqr() + b.norm_sqr();
    if (norm_sqr - 1.0).abs() > NORM_TOL {
        return Err(Error::NotNormalized { norm_sqr });
    }
    let target = StateVector::new(vec![a, b])?;
    let full = target.tensor(&make_bell(BellKind::PhiPlus))?;

    let bell = MeasurementBasis::bell();
    let pmf = born_pmf_mixed(&full.reduced_density(&[0, 1])?, &bell)?;
    let alice = realized_density(&pmf, &bell)?;
    let alice_entropy = von_neumann_entropy(&alice, base);
    let alice_retrievability = base.pow(-alice_entropy);

    let amps = full.amplitudes();
    let outcomes = BellKind::ALL
        .iter()
        .zip(pmf.probs())
        .map(|(&kind, &probability)| {
            let chi = kind.amplitudes();
            let phi: Vec<Complex64> = (0..2)
                .map(|d| (0..4).map(|cb| amps[2 * cb + d] * chi[cb]).sum())
                .collect();
            let conditional = StateVector::normalized(phi)?;
            let corrected = correction(kind)
                .iter()
                .try_fold(conditional.clone(), |psi, g| g.apply(0, &psi))?;
            let fidelity = target.fidelity(&corrected)?;
            Ok(TeleportOutcome {
                kind,
                probability,
                conditional,
                corrected,
                fidelity,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    Ok(TeleportationReport {
        alice_entropy,
        alice_retrievability,
        alice_loss: 1.0 - alice_retrievability,
        classical_bits: (bell.dim() as f64).log2().round() as u32,
        outcomes,
    })
}
