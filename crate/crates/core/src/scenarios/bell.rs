use crate::error::Result;
use crate::measurement::{bell_joint_pmf_mixed, BellSetting};
use crate::state::{make_bell, make_mms, BellKind, DensityMatrix};

/// Slack on the strict inequality `lhs > rhs`.
pub const VIOLATION_MARGIN: f64 = 1e-12;

/// `P(H,H') ≤ P(H',H'') + P(H,V'')` evaluated at one angle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BellInequalityVerdict {
    pub theta: f64,
    pub lhs: f64,
    pub rhs: f64,
    pub violated: bool,
}

/// First outcome of each factor is the `H`-type state, second the `V`-type.
fn joint(rho: &DensityMatrix, alice: f64, bob: f64, a: usize, b: usize) -> Result<f64> {
    let pmf = bell_joint_pmf_mixed(rho, BellSetting::new(alice, bob)?)?;
    Ok(pmf.probs()[2 * a + b])
}

/// The inequality for an arbitrary two-qubit state.
pub fn bell_inequality_check_state(
    rho: &DensityMatrix,
    theta: f64,
) -> Result<BellInequalityVerdict> {
    let lhs = joint(rho, theta, 0.0, 0, 0)?;
    let rhs = joint(rho, theta, -theta, 0, 0)? + joint(rho, 0.0, -theta, 0, 1)?;
    Ok(BellInequalityVerdict {
        theta,
        lhs,
        rhs,
        violated: lhs > rhs + VIOLATION_MARGIN,
    })
}

/// The inequality for `Φ+`.
pub fn bell_inequality_check(theta: f64) -> Result<BellInequalityVerdict> {
    let rho = DensityMatrix::pure(&make_bell(BellKind::PhiPlus))?;
    bell_inequality_check_state(&rho, theta)
}

/// The inequality with `Φ+` replaced by the two-qubit maximally mixed state.
pub fn bell_inequality_check_mms(theta: f64) -> Result<BellInequalityVerdict> {
    bell_inequality_check_state(&make_mms(2)?, theta)
}
