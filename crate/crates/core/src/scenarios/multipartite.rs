use crate::error::{Error, Result};
use crate::metrics::{InfoReport, LogBase};
use crate::state::{make_ghz, make_w, StateVector};

/// Largest `m` for which the reduced state is built and diagonalized.
/// Beyond it only the closed forms are evaluated.
pub const NUMERIC_MAX_QUBITS: usize = 10;

/// Agreement required between the numeric and closed-form routes.
pub const CROSS_CHECK_TOL: f64 = 1e-9;

fn check_m(m: usize) -> Result<()> {
    if m < 3 {
        return Err(Error::OutOfRange {
            what: "qubit count",
            value: m as f64,
            range: "m >= 3",
        });
    }
    Ok(())
}

/// Report on the remaining `m − 1` qubits after qubit 0 is traced out.
fn measure_one(psi: &StateVector, base: LogBase) -> Result<InfoReport> {
    let rest: Vec<usize> = (1..psi.qubit_count()).collect();
    Ok(InfoReport::from_density(&psi.reduced_density(&rest)?, base))
}

/// Closed-form report from the two nonzero eigenvalues `(w, 1 − w)`.
fn two_level_report(w: f64, base: LogBase) -> InfoReport {
    let h = |p: f64| if p <= 0.0 { 0.0 } else { -p * base.log(p) };
    let entropy = h(w) + h(1.0 - w);
    let retrievability = base.pow(-entropy);
    InfoReport {
        entropy,
        retrievability,
        loss: 1.0 - retrievability,
        bias: None,
        purity: w * w + (1.0 - w) * (1.0 - w),
        base,
    }
}

fn cross_checked(
    m: usize,
    analytic: InfoReport,
    psi: impl FnOnce() -> Result<StateVector>,
) -> Result<InfoReport> {
    if m > NUMERIC_MAX_QUBITS {
        return Ok(analytic);
    }
    let numeric = measure_one(&psi()?, analytic.base)?;
    let gap = (numeric.entropy - analytic.entropy).abs();
    if gap > CROSS_CHECK_TOL {
        return Err(Error::Inconsistent(format!(
            "m={m}: numeric entropy {} vs closed form {}",
            numeric.entropy, analytic.entropy
        )));
    }
    Ok(numeric)
}

/// `log 2` for every `m`.
pub fn ghz_entropy_closed_form(m: usize, base: LogBase) -> Result<f64> {
    check_m(m)?;
    Ok(two_level_report(0.5, base).entropy)
}

/// `log[m / (m−1)^{1−1/m}]`.
pub fn w_entropy_closed_form(m: usize, base: LogBase) -> Result<f64> {
    check_m(m)?;
    let m = m as f64;
    Ok(base.log(m) - (1.0 - 1.0 / m) * base.log(m - 1.0))
}

/// `(1/m)·(m−1)^{1−1/m}` in natural units.
pub fn w_retrievability_closed_form(m: usize) -> Result<f64> {
    check_m(m)?;
    let m = m as f64;
    Ok((m - 1.0).powf(1.0 - 1.0 / m) / m)
}

/// GHZ_m with one qubit measured (traced out).
pub fn ghz_measure_one(m: usize, base: LogBase) -> Result<InfoReport> {
    check_m(m)?;
    cross_checked(m, two_level_report(0.5, base), || make_ghz(m))
}

/// W_m with one qubit measured (traced out).
pub fn w_measure_one(m: usize, base: LogBase) -> Result<InfoReport> {
    check_m(m)?;
    let w = 1.0 / m as f64;
    cross_checked(m, two_level_report(w, base), || make_w(m))
}
