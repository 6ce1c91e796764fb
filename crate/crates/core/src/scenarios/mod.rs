//! End-to-end analyses built from the state, measurement and metric layers.
//!
//! Every per-angle or per-parameter function is pure, so callers may evaluate
//! grid points in any order or in parallel and reassemble them by index.

mod bell;
mod grid;
mod multipartite;
mod separable;
mod summary;
mod sweeps;
mod teleport;
mod werner;

pub use bell::{
    bell_inequality_check, bell_inequality_check_mms, bell_inequality_check_state,
    BellInequalityVerdict, VIOLATION_MARGIN,
};
pub use grid::{bell_grid, pi_fraction, single_qubit_grid, theta_grid, DEFAULT_POINTS};
pub use multipartite::{
    ghz_entropy_closed_form, ghz_measure_one, w_entropy_closed_form, w_measure_one,
    w_retrievability_closed_form, NUMERIC_MAX_QUBITS,
};
pub use separable::{separable_state_check, SeparableReport};
pub use summary::{mee_mei_summary, MeeMeiSummary, Witness};
pub use sweeps::{
    bell_sweep, bell_sweep_entropy, bell_sweep_row, no_comm_extra_entropy, no_comm_row,
    single_qubit_entropy, single_qubit_row, single_qubit_sweep, NoCommRow, SweepRow,
};
pub use teleport::{correction, teleportation_report, TeleportOutcome, TeleportationReport};
pub use werner::{
    solve_vnei_alpha, werner_entropy_closed_form, werner_report, werner_row, WernerRow, PPT_ALPHA,
};
