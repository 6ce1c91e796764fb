use crate::error::Result;
use crate::measurement::{bell_joint_pmf, realized_density, BellSetting};
use crate::metrics::{von_neumann_entropy, LogBase, Transition};
use crate::state::{make_bell, make_cb_state, BellKind, DensityMatrix, StateVector};

/// A product state measured in its own basis next to `Φ+` under the same setting.
#[derive(Debug, Clone, PartialEq)]
pub struct SeparableReport {
    pub pmf: Vec<f64>,
    /// Largest entry of `|ρ_after − ρ_before|`.
    pub state_change: f64,
    pub transition: Transition,
    pub contrast: Transition,
}

fn measured(psi: &StateVector, setting: BellSetting) -> Result<(Vec<f64>, DensityMatrix)> {
    let pmf = bell_joint_pmf(psi, setting)?;
    let rho = realized_density(&pmf, &setting.basis())?;
    Ok((pmf.probs().to_vec(), rho))
}

pub fn separable_state_check(base: LogBase) -> Result<SeparableReport> {
    let setting = BellSetting::new(0.0, 0.0)?;
    let hh = make_cb_state(&[0, 0])?;
    let before = DensityMatrix::pure(&hh)?;
    let (pmf, after) = measured(&hh, setting)?;
    let state_change = after.matrix().max_abs_diff(before.matrix())?;
    let transition = Transition::new(
        von_neumann_entropy(&before, base),
        von_neumann_entropy(&after, base),
        base,
    );

    let (_, bell_after) = measured(&make_bell(BellKind::PhiPlus), setting)?;
    let contrast = Transition::new(0.0, von_neumann_entropy(&bell_after, base), base);
    Ok(SeparableReport {
        pmf,
        state_change,
        transition,
        contrast,
    })
}
