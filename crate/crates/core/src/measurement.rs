//! Born-rule measurement: PMFs, realized density matrices, PMF-induced states
//! and the rotated polarization bases of the two-photon Bell test.
//!
//! Every [`Pmf`] remembers the identifier of the basis that produced it, and
//! only that basis can turn it back into a density matrix or an induced state.
//! Composite outcome labels join the factor labels with `,` (e.g. `H',V''`).

use std::f64::consts::FRAC_1_SQRT_2;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;
use crate::state::{BellKind, DensityMatrix, StateVector};

/// Orthonormality tolerance for basis vectors.
pub const ORTHONORMAL_TOL: f64 = 1e-10;
/// Normalization tolerance for PMFs.
pub const PMF_SUM_TOL: f64 = 1e-10;
/// Probabilities below this are set to exactly zero.
pub const PROB_FLOOR: f64 = 1e-12;

const LABEL_SEP: char = ',';
const ID_SEP: &str = "⊗";
const CB_ID: &str = "cb";

/// Maps polarization spellings onto computational-basis digits
/// (`H` ↔ `0`, `V` ↔ `1`), keeping any prime marks.
pub fn canonical_label(label: &str) -> String {
    label
        .split(LABEL_SEP)
        .map(|part| {
            let (head, primes) = part.split_at(part.find('\'').unwrap_or(part.len()));
            let head = match head {
                "H" => "0",
                "V" => "1",
                other => other,
            };
            format!("{head}{primes}")
        })
        .collect::<Vec<_>>()
        .join(",")
}

/// An orthonormal measurement basis; the columns of `vectors` are the kets.
#[derive(Debug, Clone, PartialEq)]
pub struct MeasurementBasis {
    id: String,
    labels: Vec<String>,
    vectors: ComplexMatrix,
    dims: Vec<usize>,
}

impl MeasurementBasis {
    pub fn new(
        id: impl Into<String>,
        labels: Vec<String>,
        vectors: ComplexMatrix,
        dims: Vec<usize>,
    ) -> Result<Self> {
        let n = vectors.rows();
        if !vectors.is_square() {
            return Err(Error::InvalidBasis(format!(
                "expected {n} basis vectors, got {}",
                vectors.cols()
            )));
        }
        if labels.len() != n {
            return Err(Error::InvalidBasis(format!(
                "{} labels for {n} outcomes",
                labels.len()
            )));
        }
        let mut sorted = labels.clone();
        sorted.sort();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidBasis("duplicate outcome labels".into()));
        }
        if dims.iter().product::<usize>() != n {
            return Err(Error::InvalidBasis(format!(
                "dims {dims:?} do not factor {n}"
            )));
        }
        if !vectors.is_unitary(ORTHONORMAL_TOL) {
            return Err(Error::InvalidBasis("vectors are not orthonormal".into()));
        }
        Ok(Self {
            id: id.into(),
            labels,
            vectors,
            dims,
        })
    }

    fn qubit(id: &str, labels: [&str; 2], columns: [[f64; 2]; 2]) -> Self {
        let vectors = ComplexMatrix::from_columns(
            &columns.map(|c| c.map(|x| Complex64::new(x, 0.0)).to_vec()),
        )
        .expect("2x2");
        Self::new(id, labels.map(String::from).to_vec(), vectors, vec![2])
            .expect("orthonormal by construction")
    }

    /// `{|0⟩, |1⟩}`.
    pub fn computational() -> Self {
        Self::qubit(CB_ID, ["0", "1"], [[1.0, 0.0], [0.0, 1.0]])
    }

    /// `{|H⟩, |V⟩}`, the same basis as [`computational`](Self::computational).
    pub fn horizontal_vertical() -> Self {
        Self::qubit(CB_ID, ["H", "V"], [[1.0, 0.0], [0.0, 1.0]])
    }

    /// Computational basis on `m` qubits, outcomes in binary order.
    pub fn computational_qubits(m: usize) -> Result<Self> {
        let mut basis = Self::computational();
        for _ in 1..m {
            basis = basis.tensor(&Self::computational())?;
        }
        Ok(basis)
    }

    /// Eigenbasis of σ_x, `{|↑x⟩, |↓x⟩}` labelled `+x`, `-x`.
    pub fn sigma_x() -> Self {
        let s = FRAC_1_SQRT_2;
        Self::qubit("x", ["+x", "-x"], [[s, s], [s, -s]])
    }

    /// Polarization basis rotated by `angle`:
    /// `|H_a⟩ = cos(a/2)|H⟩ − sin(a/2)|V⟩`, `|V_a⟩ = sin(a/2)|H⟩ + cos(a/2)|V⟩`.
    ///
    /// Positive angles are labelled with one prime, negative with two, and a
    /// zero angle is the computational basis.
    pub fn rotated(angle: f64) -> Self {
        let primes = if angle > 0.0 {
            "'"
        } else if angle < 0.0 {
            "''"
        } else {
            ""
        };
        Self::rotated_with_marks(angle, primes)
    }

    fn rotated_with_marks(angle: f64, primes: &str) -> Self {
        if angle == 0.0 {
            return Self::horizontal_vertical();
        }
        let (s, c) = (angle / 2.0).sin_cos();
        let id = format!("pol({angle:?})");
        let h = format!("H{primes}");
        let v = format!("V{primes}");
        Self::qubit(&id, [h.as_str(), v.as_str()], [[c, -s], [s, c]])
    }

    /// The four Bell states on two qubits, labelled `Phi+`, `Phi-`, `Psi+`, `Psi-`.
    pub fn bell() -> Self {
        let columns: Vec<Vec<Complex64>> = BellKind::ALL
            .iter()
            .map(|k| k.amplitudes().map(|a| Complex64::new(a, 0.0)).to_vec())
            .collect();
        let vectors = ComplexMatrix::from_columns(&columns).expect("4x4");
        let labels = BellKind::ALL
            .iter()
            .map(|k| k.label().to_string())
            .collect();
        Self::new("bell", labels, vectors, vec![2, 2]).expect("Bell states are orthonormal")
    }

    /// Product basis; outcomes ordered with `self` varying slowest.
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        let vectors = self.vectors.kron(&other.vectors)?;
        let labels = self
            .labels
            .iter()
            .flat_map(|a| {
                other
                    .labels
                    .iter()
                    .map(move |b| format!("{a}{LABEL_SEP}{b}"))
            })
            .collect();
        let dims = self.dims.iter().chain(&other.dims).copied().collect();
        Self::new(
            format!("{}{ID_SEP}{}", self.id, other.id),
            labels,
            vectors,
            dims,
        )
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn vectors(&self) -> &ComplexMatrix {
        &self.vectors
    }

    pub fn vector(&self, k: usize) -> Vec<Complex64> {
        self.vectors.column_vec(k)
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    /// Hilbert-space subsystem dimensions the basis acts on.
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    fn matches(&self, pmf: &Pmf) -> bool {
        self.id == pmf.basis_id
            && self.labels.len() == pmf.labels.len()
            && self
                .labels
                .iter()
                .zip(&pmf.labels)
                .all(|(a, b)| canonical_label(a) == canonical_label(b))
    }
}

/// Which of the two rotated polarization bases of the Bell test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolarizationVariant {
    /// `{H', V'}`, rotation by `+θ`.
    Primed,
    /// `{H'', V''}`, rotation by `−θ`.
    DoublePrimed,
}

pub fn polarization_basis(theta: f64, variant: PolarizationVariant) -> MeasurementBasis {
    match variant {
        PolarizationVariant::Primed => MeasurementBasis::rotated_with_marks(theta, "'"),
        PolarizationVariant::DoublePrimed => MeasurementBasis::rotated_with_marks(-theta, "''"),
    }
}

/// Probability mass function over the outcomes of one declared basis.
#[derive(Debug, Clone, PartialEq)]
pub struct Pmf {
    labels: Vec<String>,
    probs: Vec<f64>,
    basis_id: String,
}

impl Pmf {
    /// Checks normalization; entries below [`PROB_FLOOR`] become exactly zero.
    pub fn new(labels: Vec<String>, probs: Vec<f64>, basis_id: impl Into<String>) -> Result<Self> {
        if labels.len() != probs.len() {
            return Err(Error::LengthMismatch {
                expected: labels.len(),
                got: probs.len(),
            });
        }
        if probs.is_empty() {
            return Err(Error::InvalidPmf("no outcomes".into()));
        }
        if let Some(&p) = probs
            .iter()
            .find(|&&p| !p.is_finite() || !(-PROB_FLOOR..=1.0 + PMF_SUM_TOL).contains(&p))
        {
            return Err(Error::InvalidPmf(format!("probability {p} outside [0, 1]")));
        }
        let total: f64 = probs.iter().sum();
        if (total - 1.0).abs() > PMF_SUM_TOL {
            return Err(Error::InvalidPmf(format!("probabilities sum to {total}")));
        }
        let probs = probs
            .into_iter()
            .map(|p| if p < PROB_FLOOR { 0.0 } else { p })
            .collect();
        Ok(Self {
            labels,
            probs,
            basis_id: basis_id.into(),
        })
    }

    /// PMF over the outcomes of `basis`.
    pub fn for_basis(basis: &MeasurementBasis, probs: Vec<f64>) -> Result<Self> {
        Self::new(basis.labels.clone(), probs, basis.id.clone())
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    pub fn basis_id(&self) -> &str {
        &self.basis_id
    }

    pub fn len(&self) -> usize {
        self.probs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.probs.is_empty()
    }

    /// Probability of an outcome; `H`/`V` and `0`/`1` spellings are interchangeable.
    pub fn prob(&self, label: &str) -> Option<f64> {
        let want = canonical_label(label);
        self.labels
            .iter()
            .position(|l| canonical_label(l) == want)
            .map(|k| self.probs[k])
    }
}

fn check_dim(op: &'static str, basis: &MeasurementBasis, dim: usize) -> Result<()> {
    if basis.dim() != dim {
        return Err(Error::DimensionMismatch {
            op,
            left: (basis.dim(), basis.dim()),
            right: (dim, dim),
        });
    }
    Ok(())
}

/// `P(α) = |⟨χ_α|Ψ⟩|²`.
pub fn born_pmf(psi: &StateVector, basis: &MeasurementBasis) -> Result<Pmf> {
    check_dim("born_pmf", basis, psi.dim())?;
    let amps = psi.amplitudes();
    let probs = (0..basis.dim())
        .map(|k| {
            (0..basis.dim())
                .map(|i| basis.vectors[(i, k)].conj() * amps[i])
                .sum::<Complex64>()
                .norm_sqr()
        })
        .collect();
    Pmf::for_basis(basis, probs)
}

/// `P(α) = ⟨χ_α|ρ|χ_α⟩`.
pub fn born_pmf_mixed(rho: &DensityMatrix, basis: &MeasurementBasis) -> Result<Pmf> {
    check_dim("born_pmf_mixed", basis, rho.dim())?;
    let probs = (0..basis.dim())
        .map(|k| rho.expectation_in(&basis.vector(k)))
        .collect::<Result<Vec<_>>>()?;
    Pmf::for_basis(basis, probs)
}

/// The collapsed, unread ensemble `Σ_α p_α |χ_α⟩⟨χ_α|`.
pub fn realized_density(pmf: &Pmf, basis: &MeasurementBasis) -> Result<DensityMatrix> {
    if !basis.matches(pmf) {
        return Err(Error::BasisMismatch {
            pmf: pmf.basis_id.clone(),
            basis: basis.id.clone(),
        });
    }
    let n = basis.dim();
    let mut m = ComplexMatrix::zeros(n, n)?;
    for (k, &p) in pmf.probs.iter().enumerate() {
        if p == 0.0 {
            continue;
        }
        let v = basis.vector(k);
        m = m.add(&ComplexMatrix::outer(&v, &v)?.scale_real(p))?;
    }
    DensityMatrix::validate(m, basis.dims.clone())
}

/// `Σ_α √p_α e^{iφ_α} |χ_α⟩`, a pure state reproducing `pmf` in `basis`.
pub fn pmf_induced_state(
    pmf: &Pmf,
    phases: &[f64],
    basis: &MeasurementBasis,
) -> Result<StateVector> {
    if phases.len() != pmf.len() {
        return Err(Error::LengthMismatch {
            expected: pmf.len(),
            got: phases.len(),
        });
    }
    if !basis.matches(pmf) {
        return Err(Error::BasisMismatch {
            pmf: pmf.basis_id.clone(),
            basis: basis.id.clone(),
        });
    }
    let n = basis.dim();
    let mut amps = vec![Complex64::new(0.0, 0.0); n];
    for (k, (&p, &phi)) in pmf.probs.iter().zip(phases).enumerate() {
        let coeff = Complex64::from_polar(p.sqrt(), phi);
        for (i, a) in amps.iter_mut().enumerate() {
            *a += coeff * basis.vectors[(i, k)];
        }
    }
    StateVector::normalized(amps)
}

/// Marginal over factor `keep` of a joint PMF whose outcomes form the product
/// of factors with `dims` outcomes each (first factor varying slowest).
pub fn marginal_pmf(joint: &Pmf, keep: usize, dims: &[usize]) -> Result<Pmf> {
    if keep >= dims.len() {
        return Err(Error::InvalidSubsystem(format!(
            "factor {keep} of {}",
            dims.len()
        )));
    }
    if dims.iter().product::<usize>() != joint.len() {
        return Err(Error::MalformedLabels(format!(
            "{} outcomes do not factor as {dims:?}",
            joint.len()
        )));
    }
    let parts: Vec<Vec<&str>> = joint
        .labels
        .iter()
        .map(|l| l.split(LABEL_SEP).collect())
        .collect();
    if parts.iter().any(|p| p.len() != dims.len()) {
        return Err(Error::MalformedLabels(format!(
            "labels do not have {} components",
            dims.len()
        )));
    }
    let stride: usize = dims[keep + 1..].iter().product();
    let mut labels = vec![String::new(); dims[keep]];
    let mut probs = vec![0.0; dims[keep]];
    for (idx, (p, label)) in joint.probs.iter().zip(&parts).enumerate() {
        let digit = (idx / stride) % dims[keep];
        let component = label[keep];
        if labels[digit].is_empty() {
            labels[digit] = component.to_string();
        } else if labels[digit] != component {
            return Err(Error::MalformedLabels(format!(
                "outcome {} disagrees with product structure",
                joint.labels[idx]
            )));
        }
        probs[digit] += p;
    }
    let ids: Vec<&str> = joint.basis_id.split(ID_SEP).collect();
    let basis_id = if ids.len() == dims.len() {
        ids[keep].to_string()
    } else {
        format!("{}[{keep}]", joint.basis_id)
    };
    Pmf::new(labels, probs, basis_id)
}

/// EOM rotation angles at Alice and Bob. Zero is the computational basis,
/// `+θ` the primed basis and `−θ` the double-primed basis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BellSetting {
    pub alice_angle: f64,
    pub bob_angle: f64,
}

impl BellSetting {
    pub fn new(alice_angle: f64, bob_angle: f64) -> Result<Self> {
        for (what, v) in [("alice_angle", alice_angle), ("bob_angle", bob_angle)] {
            if !v.is_finite() {
                return Err(Error::OutOfRange {
                    what,
                    value: v,
                    range: "finite angles",
                });
            }
        }
        Ok(Self {
            alice_angle,
            bob_angle,
        })
    }

    /// Alice's basis ⊗ Bob's basis.
    pub fn basis(&self) -> MeasurementBasis {
        MeasurementBasis::rotated(self.alice_angle)
            .tensor(&MeasurementBasis::rotated(self.bob_angle))
            .expect("4x4 product basis")
    }
}

/// Joint four-outcome PMF `P(a, b) = |(⟨a|_A ⊗ ⟨b|_B)|ψ⟩|²` for a two-qubit state.
pub fn bell_joint_pmf(state: &StateVector, setting: BellSetting) -> Result<Pmf> {
    if state.qubit_count() != 2 {
        return Err(Error::InvalidShape(format!(
            "Bell test needs 2 qubits, got {}",
            state.qubit_count()
        )));
    }
    born_pmf(state, &setting.basis())
}

/// Mixed-state version of [`bell_joint_pmf`].
pub fn bell_joint_pmf_mixed(rho: &DensityMatrix, setting: BellSetting) -> Result<Pmf> {
    born_pmf_mixed(rho, &setting.basis())
}
