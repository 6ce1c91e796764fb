use crate::error::{Error, Result};
use crate::metrics::{comparative_ir, von_neumann_entropy, LogBase};
use crate::state::{make_werner, WERNER_ALPHA_MAX, WERNER_ALPHA_MIN};

/// PPT boundary: the Werner state is separable iff `α ≤ 1/3`.
pub const PPT_ALPHA: f64 = 1.0 / 3.0;

const FLAG_TOL: f64 = 1e-12;
const CROSS_CHECK_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WernerRow {
    pub alpha: f64,
    pub s_alpha: f64,
    pub ir_bell_to_werner: f64,
    pub ir_werner_to_mms: f64,
    pub ir_bell_to_mms: f64,
    pub separable_ppt: bool,
    /// `S_α ≥ log 2`, necessary for separability.
    pub separable_vnei_necessary: bool,
}

impl WernerRow {
    /// Entropy gained going from the Werner state to the maximally mixed state.
    pub fn entropy_gap_to_mms(&self, base: LogBase) -> f64 {
        2.0 * base.log(2.0) - self.s_alpha
    }
}

fn check_alpha(alpha: f64) -> Result<()> {
    if !(WERNER_ALPHA_MIN - FLAG_TOL..=WERNER_ALPHA_MAX + FLAG_TOL).contains(&alpha) {
        return Err(Error::OutOfRange {
            what: "Werner alpha",
            value: alpha,
            range: "[-1/3, 1]",
        });
    }
    Ok(())
}

/// Entropy from the eigenvalues `(1+3α)/4` and `(1−α)/4` (three times).
pub fn werner_entropy_closed_form(alpha: f64, base: LogBase) -> Result<f64> {
    check_alpha(alpha)?;
    let h = |p: f64| if p <= 0.0 { 0.0 } else { -p * base.log(p) };
    Ok(h((1.0 + 3.0 * alpha) / 4.0) + 3.0 * h((1.0 - alpha) / 4.0))
}

pub fn werner_row(alpha: f64, base: LogBase) -> Result<WernerRow> {
    check_alpha(alpha)?;
    let s_alpha = von_neumann_entropy(&make_werner(alpha)?, base);
    let closed = werner_entropy_closed_form(alpha, base)?;
    if (s_alpha - closed).abs() > CROSS_CHECK_TOL {
        return Err(Error::Inconsistent(format!(
            "alpha={alpha}: spectral entropy {s_alpha} vs closed form {closed}"
        )));
    }
    let s_mms = 2.0 * base.log(2.0);
    Ok(WernerRow {
        alpha,
        s_alpha,
        ir_bell_to_werner: comparative_ir(s_alpha, 0.0, base),
        ir_werner_to_mms: comparative_ir(s_mms, s_alpha, base),
        ir_bell_to_mms: comparative_ir(s_mms, 0.0, base),
        separable_ppt: alpha <= PPT_ALPHA + FLAG_TOL,
        separable_vnei_necessary: s_alpha >= base.log(2.0) - FLAG_TOL,
    })
}

pub fn werner_report(alphas: &[f64], base: LogBase) -> Result<Vec<WernerRow>> {
    alphas.iter().map(|&a| werner_row(a, base)).collect()
}

/// The `α` in `[1/3, 1]` at which `S_α = ln 2`, by bisection on the closed form.
pub fn solve_vnei_alpha() -> f64 {
    let f = |a: f64| {
        werner_entropy_closed_form(a, LogBase::Natural).expect("in range") - std::f64::consts::LN_2
    };
    let (mut lo, mut hi) = (PPT_ALPHA, 1.0);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if f(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}
