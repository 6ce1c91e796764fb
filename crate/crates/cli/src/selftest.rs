//! Golden values and seeded randomized identities, one line per check.

use std::f64::consts::{LN_2, PI};

use num_complex::Complex64;
use qinfo_core::measurement::{bell_joint_pmf, born_pmf, marginal_pmf, pmf_induced_state, Pmf};
use qinfo_core::metrics::{mutual_quantum_entropy, von_neumann_entropy};
use qinfo_core::scenarios;
use qinfo_core::state::{make_bell, BellKind};
use qinfo_core::{
    hermitian_eigensystem, sample, BellSetting, DensityMatrix, LogBase, MeasurementBasis,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 0x5eed_1e55;
const SAMPLES: usize = 200;

pub struct Suite {
    lines: Vec<String>,
    failed: usize,
    /// Added to every entropy before it is compared; a negative control.
    offset: f64,
}

impl Suite {
    fn new(offset: f64) -> Self {
        Self {
            lines: Vec::new(),
            failed: 0,
            offset,
        }
    }

    fn value(&mut self, name: &str, got: f64, expected: f64, tol: f64) {
        let ok = (got - expected).abs() <= tol;
        self.record(name, ok, || {
            format!("got {got:.10}, expected {expected:.10} ± {tol:e}")
        });
    }

    fn entropy(&mut self, name: &str, got: f64, expected: f64, tol: f64) {
        self.value(name, got + self.offset, expected, tol);
    }

    fn flag(&mut self, name: &str, ok: bool, detail: impl FnOnce() -> String) {
        self.record(name, ok, detail);
    }

    fn record(&mut self, name: &str, ok: bool, detail: impl FnOnce() -> String) {
        if ok {
            self.lines.push(format!("PASS {name}"));
        } else {
            self.failed += 1;
            self.lines.push(format!("FAIL {name}: {}", detail()));
        }
    }

    fn attempt<T>(&mut self, name: &str, r: qinfo_core::Result<T>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.failed += 1;
                self.lines.push(format!("FAIL {name}: {e}"));
                None
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }

    pub fn render(&self) -> String {
        let mut s = self.lines.join("\n");
        s.push('\n');
        if self.passed() {
            s.push_str("all checks passed\n");
        } else {
            s.push_str(&format!(
                "{} of {} checks failed\n",
                self.failed,
                self.lines.len()
            ));
        }
        s
    }
}

// printed four-digit values are compared as printed
#[allow(clippy::approx_constant)]
fn golden(s: &mut Suite) {
    let e = LogBase::Natural;
    let table = [
        ("0", 0.0, [0.0, 1.0, 0.0, 1.0]),
        ("pi/3", PI / 3.0, [0.5623, 0.5699, 0.4301, 0.25]),
        ("pi/2", PI / 2.0, [LN_2, 0.5, 0.5, 0.0]),
    ];
    for (label, theta, [ent, ir, il, beta]) in table {
        if let Some(r) = s.attempt("sweep_1q", scenarios::single_qubit_row(theta, e)) {
            s.entropy(&format!("sweep_1q S({label})"), r.entropy, ent, 5e-5);
            s.value(&format!("sweep_1q iR({label})"), r.retrievability, ir, 5e-5);
            s.value(&format!("sweep_1q iL({label})"), r.loss, il, 5e-5);
            s.value(&format!("sweep_1q beta({label})"), r.bias, beta, 5e-5);
        }
    }

    for (label, theta, ir, tol) in [
        ("0", 0.0, 0.5, 1e-12),
        ("pi/3", PI / 3.0, 0.285, 5e-4),
        ("pi/2", PI / 2.0, 0.25, 1e-12),
    ] {
        if let Some(r) = s.attempt("bell_sweep", scenarios::bell_sweep_row(theta, e)) {
            s.value(
                &format!("bell_sweep iR({label})"),
                (-(r.entropy + s.offset)).exp(),
                ir,
                tol,
            );
            s.value(
                &format!("bell_sweep iL({label})"),
                r.loss,
                1.0 - r.retrievability,
                1e-15,
            );
        }
    }

    if let Some(v) = s.attempt("bell_ineq", scenarios::bell_inequality_check(PI / 3.0)) {
        s.value("bell_ineq lhs(pi/3)", v.lhs, 0.375, 1e-12);
        s.value("bell_ineq rhs(pi/3)", v.rhs, 0.25, 1e-12);
        s.flag("bell_ineq violated(pi/3)", v.violated, || {
            "not violated".into()
        });
    }
    if let Some(v) = s.attempt(
        "bell_ineq mms",
        scenarios::bell_inequality_check_mms(PI / 3.0),
    ) {
        s.value("bell_ineq mms lhs", v.lhs, 0.25, 1e-12);
        s.value("bell_ineq mms rhs", v.rhs, 0.5, 1e-12);
        s.flag("bell_ineq mms holds", !v.violated, || "violated".into());
    }

    if let Some(d) = s.attempt("no_comm", scenarios::no_comm_extra_entropy(0.0, e)) {
        s.value("no_comm dS(0)", d - s.offset, LN_2, 1e-12);
    }

    let phi = DensityMatrix::pure(&make_bell(BellKind::PhiPlus));
    if let Some(mqe) = s.attempt("mqe", phi.and_then(|rho| mutual_quantum_entropy(&rho, e))) {
        s.entropy("mqe(Phi+)", mqe, 4f64.ln(), 1e-9);
        s.value(
            "mqi loss(Phi+)",
            1.0 - (-(mqe + s.offset)).exp(),
            0.75,
            5e-7,
        );
    }

    if let Some(r) = s.attempt(
        "teleport",
        scenarios::teleportation_report(Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0), e),
    ) {
        s.entropy("teleport alice S", r.alice_entropy, 4f64.ln(), 1e-9);
        s.value("teleport alice iR", r.alice_retrievability, 0.25, 1e-12);
        let max_dev = r
            .bell_probabilities()
            .iter()
            .map(|p| (p - 0.25).abs())
            .fold(0.0, f64::max);
        s.value("teleport bell probabilities", max_dev, 0.0, 1e-12);
        s.value("teleport fidelity", r.min_fidelity(), 1.0, 1e-10);
        s.flag("teleport classical bits", r.classical_bits == 2, || {
            format!("{}", r.classical_bits)
        });
    }

    for m in 3..=10 {
        if let Some(r) = s.attempt("ghz", scenarios::ghz_measure_one(m, e)) {
            s.entropy(&format!("ghz_{m} S"), r.entropy, LN_2, 1e-9);
        }
    }
    if let Some(r) = s.attempt("w_3", scenarios::w_measure_one(3, e)) {
        s.entropy("w_3 S", r.entropy, 0.6365, 5e-5);
        s.value("w_3 iR", r.retrievability, 0.5291, 5e-5);
        s.value("w_3 iL", r.loss, 0.4709, 5e-5);
    }
    let w: Vec<f64> = (3..=64)
        .filter_map(|m| scenarios::w_measure_one(m, e).ok())
        .map(|r| r.entropy)
        .collect();
    s.flag(
        "w entropy decreasing m=3..64",
        w.len() == 62 && w.windows(2).all(|p| p[1] < p[0]),
        || "not strictly decreasing".into(),
    );

    let vnei = scenarios::solve_vnei_alpha();
    s.value("werner vnei alpha", vnei, 0.7476, 5e-5);
    for (label, a, ds, ir) in [
        ("0", 0.0, 1.386, 0.25),
        ("1/3", 1.0 / 3.0, 1.242, 0.2887),
        ("vnei", vnei, 0.6931, 0.5),
        ("1", 1.0, 0.0, 1.0),
    ] {
        if let Some(r) = s.attempt("werner", scenarios::werner_row(a, e)) {
            s.entropy(&format!("werner dS({label})"), r.s_alpha, ds, 5e-4);
            s.value(
                &format!("werner iR({label})"),
                r.ir_bell_to_werner,
                ir,
                5e-4,
            );
            s.value(
                &format!("werner chain({label})"),
                r.ir_bell_to_mms,
                r.ir_bell_to_werner * r.ir_werner_to_mms,
                1e-12,
            );
        }
    }

    if let Some(m) = s.attempt("mee", scenarios::mee_mei_summary(e)) {
        s.entropy("mee", m.mee, LN_2, 1e-9);
        s.value("mei", m.mei, 0.5, 1e-9);
    }

    if let Some(r) = s.attempt("separable", scenarios::separable_state_check(e)) {
        s.value("separable loss", r.transition.loss(), 0.0, 1e-15);
        s.value("separable P(HH)", r.pmf[0], 1.0, 1e-15);
        s.value("entangled contrast loss", r.contrast.loss(), 0.5, 1e-12);
    }
}

fn properties(s: &mut Suite) {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let e = LogBase::Natural;

    let mut worst = 0.0f64;
    for _ in 0..SAMPLES {
        let (da, db) = (rng.gen_range(2..=4), rng.gen_range(2..=4));
        let (Ok(a), Ok(b)) = (
            sample::random_density(&mut rng, da),
            sample::random_density(&mut rng, db),
        ) else {
            worst = f64::INFINITY;
            continue;
        };
        let sum = von_neumann_entropy(&a, e) + von_neumann_entropy(&b, e);
        worst = match a.tensor(&b) {
            Ok(ab) => worst.max((von_neumann_entropy(&ab, e) + s.offset - sum).abs()),
            Err(_) => f64::INFINITY,
        };
    }
    s.value("entropy additivity", worst, 0.0, 1e-9);

    let mut worst = 0.0f64;
    for _ in 0..SAMPLES {
        let dim = rng.gen_range(2..=8);
        let Ok(rho) = sample::random_density(&mut rng, dim) else {
            worst = f64::INFINITY;
            continue;
        };
        let product: f64 = rho
            .eigenvalues()
            .iter()
            .filter(|&&l| l > 0.0)
            .map(|&l| l.powf(l))
            .product();
        let ir = (-(von_neumann_entropy(&rho, e) + s.offset)).exp();
        worst = worst.max((product - ir).abs());
    }
    s.value("spectral retrievability", worst, 0.0, 1e-9);

    let mut worst = 0.0f64;
    for _ in 0..SAMPLES {
        let n = rng.gen_range(1..=3);
        let basis = MeasurementBasis::computational_qubits(n).expect("small");
        let probs = sample::random_probabilities(&mut rng, basis.dim());
        let phases: Vec<f64> = (0..basis.dim())
            .map(|_| rng.gen_range(0.0..2.0 * PI))
            .collect();
        let round_trip = Pmf::for_basis(&basis, probs.clone())
            .and_then(|pmf| pmf_induced_state(&pmf, &phases, &basis))
            .and_then(|psi| born_pmf(&psi, &basis));
        worst = match round_trip {
            Ok(back) => back
                .probs()
                .iter()
                .zip(&probs)
                .map(|(x, y)| (x - y).abs())
                .fold(worst, f64::max),
            Err(_) => f64::INFINITY,
        };
    }
    s.value("pmf round trip", worst, 0.0, 1e-10);

    let mut worst = 0.0f64;
    for _ in 0..SAMPLES {
        let n = rng.gen_range(1..=16);
        let recon = sample::random_hermitian(&mut rng, n).and_then(|m| {
            hermitian_eigensystem(&m).and_then(|sp| sp.reconstruct().max_abs_diff(&m))
        });
        worst = worst.max(recon.unwrap_or(f64::INFINITY));
    }
    s.value("eigen reconstruction", worst, 0.0, 1e-9);

    let mut worst = 0.0f64;
    for _ in 0..50 {
        let setting =
            BellSetting::new(rng.gen_range(-PI..PI), rng.gen_range(-PI..PI)).expect("finite");
        for kind in BellKind::ALL {
            let marginals = bell_joint_pmf(&make_bell(kind), setting)
                .and_then(|j| Ok([marginal_pmf(&j, 0, &[2, 2])?, marginal_pmf(&j, 1, &[2, 2])?]));
            worst = match marginals {
                Ok(ms) => ms
                    .iter()
                    .flat_map(|m| m.probs().iter())
                    .map(|p| (p - 0.5).abs())
                    .fold(worst, f64::max),
                Err(_) => f64::INFINITY,
            };
        }
    }
    s.value("bell marginals", worst, 0.0, 1e-12);
}

pub fn run(offset: f64) -> Suite {
    let mut suite = Suite::new(offset);
    golden(&mut suite);
    properties(&mut suite);
    suite
}
