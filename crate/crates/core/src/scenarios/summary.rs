use crate::error::{Error, Result};
use crate::metrics::LogBase;
use crate::scenarios::grid::bell_grid;
use crate::scenarios::multipartite::ghz_measure_one;
use crate::scenarios::sweeps::bell_sweep;
use crate::scenarios::werner::{solve_vnei_alpha, werner_row};

const AGREEMENT_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct Witness {
    pub name: String,
    pub entropy: f64,
}

/// Minimal entanglement entropy gain shared by the entangled families, and
/// the matching information loss.
#[derive(Debug, Clone, PartialEq)]
pub struct MeeMeiSummary {
    pub mee: f64,
    pub mei: f64,
    pub witnesses: Vec<Witness>,
}

pub fn mee_mei_summary(base: LogBase) -> Result<MeeMeiSummary> {
    let bell_min = bell_sweep(&bell_grid(), base)?
        .iter()
        .map(|r| r.entropy)
        .fold(f64::INFINITY, f64::min);
    let mut witnesses = vec![Witness {
        name: "bell".into(),
        entropy: bell_min,
    }];
    for m in [3, 5, 8] {
        witnesses.push(Witness {
            name: format!("ghz_{m}"),
            entropy: ghz_measure_one(m, base)?.entropy,
        });
    }
    witnesses.push(Witness {
        name: "werner_vnei".into(),
        entropy: werner_row(solve_vnei_alpha(), base)?.s_alpha,
    });

    let mee = base.log(2.0);
    if let Some(w) = witnesses
        .iter()
        .find(|w| (w.entropy - mee).abs() > AGREEMENT_TOL)
    {
        return Err(Error::Inconsistent(format!(
            "{} gives {} instead of {mee}",
            w.name, w.entropy
        )));
    }
    Ok(MeeMeiSummary {
        mee,
        mei: 1.0 - base.pow(-mee),
        witnesses,
    })
}
