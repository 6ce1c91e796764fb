use qinfo_core::scenarios::{
    self, bell_grid, single_qubit_grid, theta_grid, SweepRow, DEFAULT_POINTS,
};
use qinfo_core::{InfoReport, LogBase, Result as CoreResult};
use rayon::prelude::*;

use crate::args::{Command, GridArgs};
use crate::parse;
use crate::table::{Cell, OutputTable};
use crate::Failure;

/// Evaluates `f` on every item, in parallel when `jobs > 1`, keeping input
/// order. The first error in input order wins.
fn rows<T, U, F>(items: &[T], jobs: usize, f: F) -> Result<Vec<U>, Failure>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> CoreResult<U> + Sync + Send,
{
    let results: Vec<CoreResult<U>> = if jobs <= 1 {
        items.iter().map(&f).collect()
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Failure::Domain(e.to_string()))?
            .install(|| items.par_iter().map(&f).collect())
    };
    results
        .into_iter()
        .map(|r| r.map_err(Failure::from))
        .collect()
}

fn grid(args: &GridArgs, den: u64) -> Result<Vec<f64>, Failure> {
    if !args.theta.is_empty() {
        return args
            .theta
            .iter()
            .map(|t| parse::angle(t, args.degrees).map_err(Failure::Usage))
            .collect();
    }
    let points = args.points.map_or(DEFAULT_POINTS, |p| p as usize);
    let g = match (points, den) {
        (DEFAULT_POINTS, 1) => single_qubit_grid(),
        (DEFAULT_POINTS, 2) => bell_grid(),
        _ => theta_grid(points, 1, den)?,
    };
    Ok(g)
}

fn sweep_table(rows: &[SweepRow]) -> OutputTable {
    let mut t = OutputTable::new(vec!["theta", "S", "iR", "iL", "beta"]);
    for r in rows {
        t.push(vec![
            r.theta.into(),
            r.entropy.into(),
            r.retrievability.into(),
            r.loss.into(),
            r.bias.into(),
        ]);
    }
    t
}

fn report_table(rows: &[(usize, InfoReport)]) -> OutputTable {
    let mut t = OutputTable::new(vec!["m", "S", "iR", "iL", "purity"]);
    for (m, r) in rows {
        t.push(vec![
            (*m).into(),
            r.entropy.into(),
            r.retrievability.into(),
            r.loss.into(),
            r.purity.into(),
        ]);
    }
    t
}

fn alpha(token: &str) -> Result<f64, Failure> {
    if token.trim().eq_ignore_ascii_case("vnei") {
        return Ok(scenarios::solve_vnei_alpha());
    }
    parse::fraction(token).map_err(Failure::Usage)
}

pub fn table(command: &Command, base: LogBase, jobs: usize) -> Result<OutputTable, Failure> {
    let table = match command {
        Command::SweepOneQubit(g) => {
            let g = grid(g, 1)?;
            sweep_table(&rows(&g, jobs, |&t| scenarios::single_qubit_row(t, base))?)
        }
        Command::BellSweep(g) => {
            let g = grid(g, 2)?;
            sweep_table(&rows(&g, jobs, |&t| scenarios::bell_sweep_row(t, base))?)
        }
        Command::BellIneq { grid: g, mms } => {
            let g = grid(g, 2)?;
            let check = if *mms {
                scenarios::bell_inequality_check_mms
            } else {
                scenarios::bell_inequality_check
            };
            let verdicts = rows(&g, jobs, |&t| check(t))?;
            let mut t = OutputTable::new(vec!["theta", "lhs", "rhs", "violated"]);
            for v in verdicts {
                t.push(vec![
                    v.theta.into(),
                    v.lhs.into(),
                    v.rhs.into(),
                    v.violated.into(),
                ]);
            }
            t
        }
        Command::NoComm(g) => {
            let g = grid(g, 2)?;
            let out = rows(&g, jobs, |&t| scenarios::no_comm_row(t, base))?;
            let mut t = OutputTable::new(vec!["theta", "S_A", "S_B", "S_AB", "dS"]);
            for r in out {
                t.push(vec![
                    r.theta.into(),
                    r.alice_entropy.into(),
                    r.bob_entropy.into(),
                    r.joint_entropy.into(),
                    r.extra_entropy.into(),
                ]);
            }
            t
        }
        Command::Teleport { a, b } => {
            let r = scenarios::teleportation_report(*a, *b, base)?;
            let mut t = OutputTable::new(vec![
                "alice_entropy",
                "alice_ir",
                "alice_il",
                "classical_bits",
                "p_phi_plus",
                "p_phi_minus",
                "p_psi_plus",
                "p_psi_minus",
                "min_fidelity",
            ]);
            let mut row: Vec<Cell> = vec![
                r.alice_entropy.into(),
                r.alice_retrievability.into(),
                r.alice_loss.into(),
                r.classical_bits.into(),
            ];
            row.extend(r.bell_probabilities().into_iter().map(Cell::from));
            row.push(r.min_fidelity().into());
            t.push(row);
            t
        }
        Command::Ghz { m } => report_table(&rows(m, jobs, |&m| {
            scenarios::ghz_measure_one(m, base).map(|r| (m, r))
        })?),
        Command::W { m } => report_table(&rows(m, jobs, |&m| {
            scenarios::w_measure_one(m, base).map(|r| (m, r))
        })?),
        Command::Werner { alpha: tokens } => {
            let alphas: Vec<f64> = if tokens.is_empty() {
                vec![0.0, 1.0 / 3.0, scenarios::solve_vnei_alpha(), 1.0]
            } else {
                tokens.iter().map(|s| alpha(s)).collect::<Result<_, _>>()?
            };
            let out = rows(&alphas, jobs, |&a| scenarios::werner_row(a, base))?;
            let mut t = OutputTable::new(vec![
                "alpha",
                "S_alpha",
                "ir_bell_to_werner",
                "dS_werner_to_mms",
                "ir_werner_to_mms",
                "ir_bell_to_mms",
                "separable_ppt",
                "separable_vnei_necessary",
            ]);
            for r in out {
                t.push(vec![
                    r.alpha.into(),
                    r.s_alpha.into(),
                    r.ir_bell_to_werner.into(),
                    r.entropy_gap_to_mms(base).into(),
                    r.ir_werner_to_mms.into(),
                    r.ir_bell_to_mms.into(),
                    r.separable_ppt.into(),
                    r.separable_vnei_necessary.into(),
                ]);
            }
            t
        }
        Command::Mee => {
            let s = scenarios::mee_mei_summary(base)?;
            let mut t = OutputTable::new(vec!["witness", "entropy", "loss"]);
            for w in &s.witnesses {
                t.push(vec![
                    w.name.as_str().into(),
                    w.entropy.into(),
                    (1.0 - base.pow(-w.entropy)).into(),
                ]);
            }
            t.push(vec!["common".into(), s.mee.into(), s.mei.into()]);
            t
        }
        Command::Selftest { .. } => unreachable!("selftest does not produce a table"),
    };
    Ok(table)
}
