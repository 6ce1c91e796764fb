//! Entropies, information retrievability and loss, polar bias and mutual
//! quantum entropy.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::measurement::{Pmf, PROB_FLOOR};
use crate::state::DensityMatrix;

/// Logarithm base for entropies. Retrievability is `base^(−S)` in either base,
/// so it does not depend on the choice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum LogBase {
    /// Nats.
    #[default]
    Natural,
    /// Bits.
    Two,
}

impl LogBase {
    pub fn log(self, x: f64) -> f64 {
        match self {
            LogBase::Natural => x.ln(),
            LogBase::Two => x.log2(),
        }
    }

    pub fn pow(self, x: f64) -> f64 {
        match self {
            LogBase::Natural => x.exp(),
            LogBase::Two => x.exp2(),
        }
    }
}

impl fmt::Display for LogBase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LogBase::Natural => "e",
            LogBase::Two => "2",
        })
    }
}

impl FromStr for LogBase {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "e" | "natural" => Ok(LogBase::Natural),
            "2" | "two" => Ok(LogBase::Two),
            other => Err(format!("unknown log base `{other}` (expected e or 2)")),
        }
    }
}

/// `−Σ p log p` with `0 log 0 = 0`.
fn entropy_of(weights: &[f64], base: LogBase) -> f64 {
    let s: f64 = weights
        .iter()
        .filter(|&&p| p >= PROB_FLOOR)
        .map(|&p| -p * base.log(p))
        .sum();
    s.max(0.0)
}

/// `S(ρ) = −Σ η_k log η_k` over the cached spectrum.
pub fn von_neumann_entropy(rho: &DensityMatrix, base: LogBase) -> f64 {
    entropy_of(rho.eigenvalues(), base)
}

/// Classical entropy of a PMF.
pub fn shannon_entropy(pmf: &Pmf, base: LogBase) -> f64 {
    entropy_of(pmf.probs(), base)
}

/// `iR(S) = base^(−S)`; `iR(0) = 1`.
pub fn retrievability(entropy: f64, base: LogBase) -> Result<f64> {
    if entropy < -1e-12 || entropy.is_nan() {
        return Err(Error::NegativeEntropy(entropy));
    }
    Ok(base.pow(-entropy.max(0.0)))
}

/// `iL(S) = 1 − iR(S)`.
pub fn loss(entropy: f64, base: LogBase) -> Result<f64> {
    retrievability(entropy, base).map(|r| 1.0 - r)
}

/// Comparative retrievability `base^(S_i − S_f)`. Exceeds one when the
/// entropy decreased; see [`Transition::entropy_decreased`].
pub fn comparative_ir(s_final: f64, s_initial: f64, base: LogBase) -> f64 {
    base.pow(s_initial - s_final)
}

/// `1 − comparative_ir`.
pub fn info_loss(s_final: f64, s_initial: f64, base: LogBase) -> f64 {
    1.0 - comparative_ir(s_final, s_initial, base)
}

/// Entropy change between an initial and a final state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Transition {
    pub s_initial: f64,
    pub s_final: f64,
    pub base: LogBase,
}

impl Transition {
    pub fn new(s_initial: f64, s_final: f64, base: LogBase) -> Self {
        Self {
            s_initial,
            s_final,
            base,
        }
    }

    pub fn entropy_gain(&self) -> f64 {
        self.s_final - self.s_initial
    }

    pub fn retrievability(&self) -> f64 {
        comparative_ir(self.s_final, self.s_initial, self.base)
    }

    pub fn loss(&self) -> f64 {
        info_loss(self.s_final, self.s_initial, self.base)
    }

    pub fn entropy_decreased(&self) -> bool {
        self.s_final < self.s_initial
    }
}

/// Polar bias `[cos²(θ/2) − sin²(θ/2)]² = cos²θ`.
pub fn polar_bias(theta: f64) -> f64 {
    theta.cos().powi(2)
}

/// `S(ρ_A) + S(ρ_B) − S(ρ_AB)` for a state with exactly two subsystems.
pub fn mutual_quantum_entropy(rho_ab: &DensityMatrix, base: LogBase) -> Result<f64> {
    if rho_ab.dims().len() != 2 {
        return Err(Error::InvalidSubsystem(format!(
            "mutual entropy needs a bipartite state, dims are {:?}",
            rho_ab.dims()
        )));
    }
    let a = rho_ab.partial_trace(&[0])?;
    let b = rho_ab.partial_trace(&[1])?;
    let mqe = von_neumann_entropy(&a, base) + von_neumann_entropy(&b, base)
        - von_neumann_entropy(rho_ab, base);
    Ok(mqe.max(0.0))
}

/// `Σ h_i p_i`.
pub fn expectation_value(pmf: &Pmf, values: &[f64]) -> Result<f64> {
    if values.len() != pmf.len() {
        return Err(Error::LengthMismatch {
            expected: pmf.len(),
            got: values.len(),
        });
    }
    Ok(pmf.probs().iter().zip(values).map(|(p, h)| p * h).sum())
}

/// Entropy, retrievability, loss, optional polar bias and purity of one state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InfoReport {
    pub entropy: f64,
    pub retrievability: f64,
    pub loss: f64,
    pub bias: Option<f64>,
    pub purity: f64,
    pub base: LogBase,
}

impl InfoReport {
    /// Report for a state relative to a pure initial state.
    pub fn from_density(rho: &DensityMatrix, base: LogBase) -> Self {
        let entropy = von_neumann_entropy(rho, base);
        let retrievability = base.pow(-entropy);
        Self {
            entropy,
            retrievability,
            loss: 1.0 - retrievability,
            bias: None,
            purity: rho.purity(),
            base,
        }
    }

    pub fn with_bias(mut self, bias: f64) -> Self {
        self.bias = Some(bias);
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::ComplexMatrix;
    use crate::measurement::{born_pmf, MeasurementBasis};
    use crate::sample;
    use crate::state::{make_bell, make_mms, make_werner, pure_density, BellKind};
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use std::f64::consts::{LN_2, PI};

    const LN_4: f64 = 2.0 * LN_2;

    fn diag(values: &[f64]) -> DensityMatrix {
        DensityMatrix::from_matrix(ComplexMatrix::diagonal(values).unwrap()).unwrap()
    }

    #[test]
    fn entropy_examples() {
        let rho = pure_density(&make_bell(BellKind::PsiMinus)).unwrap();
        assert!(von_neumann_entropy(&rho, LogBase::Natural).abs() < 1e-12);
        for m in 1..=4 {
            let mms = make_mms(m).unwrap();
            assert!((von_neumann_entropy(&mms, LogBase::Natural) - m as f64 * LN_2).abs() < 1e-12);
            assert!((von_neumann_entropy(&mms, LogBase::Two) - m as f64).abs() < 1e-12);
        }
        let s = von_neumann_entropy(&diag(&[0.75, 0.25]), LogBase::Natural);
        assert!((s - 0.5623).abs() < 5e-5);
    }

    #[test]
    fn shannon_examples() {
        for m in 1..=3usize {
            let n = 1 << m;
            let pmf = Pmf::new(
                (0..n).map(|k| k.to_string()).collect(),
                vec![1.0 / n as f64; n],
                "cb",
            )
            .unwrap();
            assert!((shannon_entropy(&pmf, LogBase::Two) - m as f64).abs() < 1e-12);
        }
        let one_hot = Pmf::new(vec!["0".into(), "1".into()], vec![1.0, 0.0], "cb").unwrap();
        assert_eq!(shannon_entropy(&one_hot, LogBase::Natural), 0.0);
        let p = Pmf::new(vec!["0".into(), "1".into()], vec![0.75, 0.25], "cb").unwrap();
        let vn = von_neumann_entropy(&diag(&[0.75, 0.25]), LogBase::Natural);
        assert!((shannon_entropy(&p, LogBase::Natural) - vn).abs() < 1e-12);
    }

    #[test]
    fn retrievability_examples() {
        assert!((retrievability(LN_2, LogBase::Natural).unwrap() - 0.5).abs() < 1e-15);
        assert_eq!(retrievability(0.0, LogBase::Natural).unwrap(), 1.0);
        assert!((retrievability(LN_4, LogBase::Natural).unwrap() - 0.25).abs() < 1e-15);
        assert!((retrievability(2.0, LogBase::Two).unwrap() - 0.25).abs() < 1e-15);
        assert!(matches!(
            retrievability(-0.1, LogBase::Natural),
            Err(Error::NegativeEntropy(_))
        ));
    }

    #[test]
    fn comparative_examples() {
        let n = LogBase::Natural;
        assert!((comparative_ir(LN_4, 0.0, n) - 0.25).abs() < 1e-15);
        assert_eq!(comparative_ir(0.7, 0.7, n), 1.0);
        assert!((comparative_ir(LN_4, 1.242, n) - 0.866).abs() < 5e-4);
        assert!((info_loss(LN_2, 0.0, n) - 0.5).abs() < 1e-15);
        assert_eq!(info_loss(0.0, 0.0, n), 0.0);
        assert!((info_loss(LN_4, 0.0, n) - 0.75).abs() < 1e-15);

        let t = Transition::new(LN_4, LN_2, n);
        assert!(t.entropy_decreased());
        assert!(t.retrievability() > 1.0);
    }

    #[test]
    fn polar_bias_examples() {
        assert_eq!(polar_bias(0.0), 1.0);
        assert!((polar_bias(PI / 3.0) - 0.25).abs() < 1e-15);
        assert!(polar_bias(PI / 2.0) < 1e-30);
        let theta = 0.9f64;
        let direct = ((theta / 2.0).cos().powi(2) - (theta / 2.0).sin().powi(2)).powi(2);
        assert!((polar_bias(theta) - direct).abs() < 1e-15);
    }

    #[test]
    fn mqe_examples() {
        for kind in BellKind::ALL {
            let rho = pure_density(&make_bell(kind)).unwrap();
            assert!((mutual_quantum_entropy(&rho, LogBase::Natural).unwrap() - LN_4).abs() < 1e-9);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let a = sample::random_density(&mut rng, 2).unwrap();
        let b = sample::random_density(&mut rng, 2).unwrap();
        assert!(mutual_quantum_entropy(&a.tensor(&b).unwrap(), LogBase::Natural).unwrap() < 1e-9);

        let w = make_werner(0.5).unwrap();
        let ev = [(1.0 + 1.5) / 4.0, 0.125, 0.125, 0.125];
        let s_alpha: f64 = ev.iter().map(|&l: &f64| -l * l.ln()).sum();
        let expected = 2.0 * LN_2 - s_alpha;
        assert!((mutual_quantum_entropy(&w, LogBase::Natural).unwrap() - expected).abs() < 1e-9);

        assert!(mutual_quantum_entropy(&make_mms(3).unwrap(), LogBase::Natural).is_err());
    }

    #[test]
    fn expectation_examples() {
        let l = vec!["0".to_string(), "1".to_string()];
        let det = Pmf::new(l.clone(), vec![1.0, 0.0], "cb").unwrap();
        assert_eq!(expectation_value(&det, &[1.0, -1.0]).unwrap(), 1.0);
        let fair = Pmf::new(l, vec![0.5, 0.5], "cb").unwrap();
        assert_eq!(expectation_value(&fair, &[1.0, -1.0]).unwrap(), 0.0);
        assert!(expectation_value(&fair, &[1.0]).is_err());

        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let psi = sample::random_state(&mut rng, 1).unwrap();
        let pmf = born_pmf(&psi, &MeasurementBasis::computational()).unwrap();
        let a = psi.amplitudes();
        let sigma_z = a[0].norm_sqr() - a[1].norm_sqr();
        assert!((expectation_value(&pmf, &[1.0, -1.0]).unwrap() - sigma_z).abs() < 1e-12);
    }

    #[test]
    fn report_identities() {
        let r = InfoReport::from_density(&make_werner(0.2).unwrap(), LogBase::Two);
        assert!((r.retrievability - 2f64.powf(-r.entropy)).abs() < 1e-12);
        assert!((r.loss - (1.0 - r.retrievability)).abs() < 1e-12);
    }

    proptest! {
        #[test]
        fn additivity(seed in any::<u64>(), da in 2usize..4, db in 2usize..4) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let a = sample::random_density(&mut rng, da).unwrap();
            let b = sample::random_density(&mut rng, db).unwrap();
            let n = LogBase::Natural;
            let joint = von_neumann_entropy(&a.tensor(&b).unwrap(), n);
            prop_assert!((joint - von_neumann_entropy(&a, n) - von_neumann_entropy(&b, n)).abs() < 1e-9);
        }

        #[test]
        fn retrievability_is_spectral_product(seed in any::<u64>(), dim in 2usize..6) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let rho = sample::random_density(&mut rng, dim).unwrap();
            let product: f64 = rho.eigenvalues().iter().map(|&l| if l > 0.0 { l.powf(l) } else { 1.0 }).product();
            let natural = retrievability(von_neumann_entropy(&rho, LogBase::Natural), LogBase::Natural).unwrap();
            let bits = retrievability(von_neumann_entropy(&rho, LogBase::Two), LogBase::Two).unwrap();
            prop_assert!((natural - product).abs() < 1e-9);
            prop_assert!((natural - bits).abs() < 1e-12);
        }

        #[test]
        fn entropy_bounds(seed in any::<u64>(), dim in 2usize..6) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let rho = sample::random_density(&mut rng, dim).unwrap();
            let s = von_neumann_entropy(&rho, LogBase::Natural);
            prop_assert!(s >= 0.0 && s <= (dim as f64).ln() + 1e-12);
        }

        #[test]
        fn comparative_chain_rule(a in 0.0f64..2.0, b in 0.0f64..2.0, c in 0.0f64..2.0) {
            let n = LogBase::Natural;
            let direct = comparative_ir(c, a, n);
            let chained = comparative_ir(c, b, n) * comparative_ir(b, a, n);
            prop_assert!((direct - chained).abs() <= 1e-12 * direct.max(1.0));
        }

        #[test]
        fn pure_bipartite_mqe_is_twice_marginal(seed in any::<u64>()) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let psi = sample::random_state(&mut rng, 2).unwrap();
            let rho = pure_density(&psi).unwrap();
            let s_a = von_neumann_entropy(&rho.partial_trace(&[0]).unwrap(), LogBase::Natural);
            let mqe = mutual_quantum_entropy(&rho, LogBase::Natural).unwrap();
            prop_assert!((mqe - 2.0 * s_a).abs() < 1e-9);
        }
    }
}
