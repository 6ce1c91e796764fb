use crate::error::{Error, Result};
use crate::measurement::{
    bell_joint_pmf, born_pmf, marginal_pmf, realized_density, BellSetting, MeasurementBasis,
};
use crate::metrics::{polar_bias, shannon_entropy, von_neumann_entropy, LogBase};
use crate::state::{make_bell, make_u3_state, BellKind};

/// One point of an entropy sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub theta: f64,
    pub entropy: f64,
    pub retrievability: f64,
    pub loss: f64,
    pub bias: f64,
}

impl SweepRow {
    fn new(theta: f64, entropy: f64, base: LogBase) -> Self {
        let retrievability = base.pow(-entropy);
        Self {
            theta,
            entropy,
            retrievability,
            loss: 1.0 - retrievability,
            bias: polar_bias(theta),
        }
    }
}

fn nonempty(grid: &[f64]) -> Result<()> {
    if grid.is_empty() {
        return Err(Error::InvalidShape("empty angle grid".into()));
    }
    Ok(())
}

/// `U3(θ, 0)|0⟩` measured in the computational basis.
pub fn single_qubit_row(theta: f64, base: LogBase) -> Result<SweepRow> {
    let basis = MeasurementBasis::computational();
    let pmf = born_pmf(&make_u3_state(theta, 0.0), &basis)?;
    let rho = realized_density(&pmf, &basis)?;
    Ok(SweepRow::new(theta, von_neumann_entropy(&rho, base), base))
}

pub fn single_qubit_sweep(grid: &[f64], base: LogBase) -> Result<Vec<SweepRow>> {
    nonempty(grid)?;
    grid.iter().map(|&t| single_qubit_row(t, base)).collect()
}

/// Binary entropy of `x = sin²(θ/2)`.
pub fn single_qubit_entropy(theta: f64, base: LogBase) -> f64 {
    let x = (theta / 2.0).sin().powi(2);
    let h = |p: f64| if p <= 0.0 { 0.0 } else { -p * base.log(p) };
    h(x) + h(1.0 - x)
}

/// `Φ+` measured with Alice at `θ` and Bob in the computational basis.
pub fn bell_sweep_row(theta: f64, base: LogBase) -> Result<SweepRow> {
    let setting = BellSetting::new(theta, 0.0)?;
    let pmf = bell_joint_pmf(&make_bell(BellKind::PhiPlus), setting)?;
    let rho = realized_density(&pmf, &setting.basis())?;
    Ok(SweepRow::new(theta, von_neumann_entropy(&rho, base), base))
}

pub fn bell_sweep(grid: &[f64], base: LogBase) -> Result<Vec<SweepRow>> {
    nonempty(grid)?;
    grid.iter().map(|&t| bell_sweep_row(t, base)).collect()
}

/// `−[c·log(c/2) + s·log(s/2)]` with `c = cos²(θ/2)`, `s = sin²(θ/2)`.
pub fn bell_sweep_entropy(theta: f64, base: LogBase) -> f64 {
    let (s, c) = (theta / 2.0).sin_cos();
    let term = |w: f64| {
        if w <= 0.0 {
            0.0
        } else {
            -w * base.log(w / 2.0)
        }
    };
    term(c * c) + term(s * s)
}

/// Marginal and joint entropies of the `(θ, 0)` measurement on `Φ+` when
/// Alice and Bob do not compare results.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NoCommRow {
    pub theta: f64,
    pub alice_entropy: f64,
    pub bob_entropy: f64,
    pub joint_entropy: f64,
    /// `S_A + S_B − S_AB`, zero or more.
    pub extra_entropy: f64,
}

pub fn no_comm_row(theta: f64, base: LogBase) -> Result<NoCommRow> {
    let setting = BellSetting::new(theta, 0.0)?;
    let joint = bell_joint_pmf(&make_bell(BellKind::PhiPlus), setting)?;
    let alice_entropy = shannon_entropy(&marginal_pmf(&joint, 0, &[2, 2])?, base);
    let bob_entropy = shannon_entropy(&marginal_pmf(&joint, 1, &[2, 2])?, base);
    let joint_entropy = bell_sweep_row(theta, base)?.entropy;
    Ok(NoCommRow {
        theta,
        alice_entropy,
        bob_entropy,
        joint_entropy,
        extra_entropy: (alice_entropy + bob_entropy - joint_entropy).max(0.0),
    })
}

/// `2·log 2 − S(θ)`.
pub fn no_comm_extra_entropy(theta: f64, base: LogBase) -> Result<f64> {
    no_comm_row(theta, base).map(|r| r.extra_entropy)
}
