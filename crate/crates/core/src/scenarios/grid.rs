use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Points in the default sweep grids.
pub const DEFAULT_POINTS: usize = 181;

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// `π·num/den` with the fraction reduced first, so `pi_fraction(60, 180)` and
/// `pi_fraction(1, 3)` are the same float.
pub fn pi_fraction(num: u64, den: u64) -> Result<f64> {
    if den == 0 {
        return Err(Error::InvalidShape("zero denominator".into()));
    }
    let g = gcd(num, den).max(1);
    Ok(PI * (num / g) as f64 / (den / g) as f64)
}

/// `points` evenly spaced angles on `[0, π·num/den]`.
///
/// Each angle is computed from its own reduced fraction of π rather than by
/// accumulating a step, so grid points that land on `π/3` or `π/2` are bit-identical
/// to those constants.
pub fn theta_grid(points: usize, num: u64, den: u64) -> Result<Vec<f64>> {
    if points == 0 {
        return Err(Error::InvalidShape("grid needs at least one point".into()));
    }
    if points == 1 {
        return Ok(vec![0.0]);
    }
    let steps = (points - 1) as u64;
    (0..points as u64)
        .map(|i| pi_fraction(i * num, steps * den))
        .collect()
}

/// `[0, π]` with [`DEFAULT_POINTS`] points.
pub fn single_qubit_grid() -> Vec<f64> {
    theta_grid(DEFAULT_POINTS, 1, 1).expect("nonempty")
}

/// `[0, π/2]` with [`DEFAULT_POINTS`] points.
pub fn bell_grid() -> Vec<f64> {
    theta_grid(DEFAULT_POINTS, 1, 2).expect("nonempty")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_angles_are_exact_grid_points() {
        let g = single_qubit_grid();
        assert_eq!(g.len(), 181);
        assert_eq!(g[0], 0.0);
        assert_eq!(g[60], PI / 3.0);
        assert_eq!(g[90], PI / 2.0);
        assert_eq!(g[180], PI);
        let b = bell_grid();
        assert_eq!(b[120], PI / 3.0);
        assert_eq!(b[180], PI / 2.0);
    }

    #[test]
    fn evenly_spaced_and_increasing() {
        let g = theta_grid(7, 1, 1).unwrap();
        for (i, w) in g.windows(2).enumerate() {
            assert!(w[1] > w[0]);
            assert!((w[1] - w[0] - PI / 6.0).abs() < 1e-15, "step {i}");
        }
        assert_eq!(theta_grid(1, 1, 1).unwrap(), vec![0.0]);
        assert!(theta_grid(0, 1, 1).is_err());
        assert!(pi_fraction(1, 0).is_err());
    }
}
