//! Named state families: GHZ, W, anti-W, EPR ⊗ single qubit, and the two
//! three-qubit superpositions of W with anti-W and of GHZ with W.

use super::PureState;
use crate::{Complex64, Error, Result, NORM_TOLERANCE};

fn qubits(m: usize, support: impl Iterator<Item = usize>) -> Result<PureState> {
    let mut amps = vec![Complex64::new(0.0, 0.0); 1 << m];
    for offset in support {
        amps[offset] = Complex64::new(1.0, 0.0);
    }
    PureState::normalized(vec![2; m], amps)
}

fn check_m(m: usize) -> Result<()> {
    if !(2..=24).contains(&m) {
        return Err(Error::InvalidParameter(format!(
            "number of qubits must be in 2..=24, got {m}"
        )));
    }
    Ok(())
}

fn check_s(s: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&s) {
        return Err(Error::InvalidParameter(format!(
            "s must lie in [0, 1], got {s}"
        )));
    }
    Ok(())
}

/// (|0…0⟩ + |1…1⟩)/√2 on `m` qubits.
pub fn ghz(m: usize) -> Result<PureState> {
    check_m(m)?;
    qubits(m, [0, (1 << m) - 1].into_iter())
}

/// Equal superposition of all `m`-qubit kets with exactly one `0`,
/// e.g. (|110⟩ + |101⟩ + |011⟩)/√3 for m = 3.
pub fn w(m: usize) -> Result<PureState> {
    check_m(m)?;
    qubits(
        m,
        (0..1usize << m).filter(|x| x.count_ones() as usize == m - 1),
    )
}

/// Equal superposition of all `m`-qubit kets with exactly one `1`,
/// e.g. (|001⟩ + |010⟩ + |100⟩)/√3 for m = 3.
pub fn anti_w(m: usize) -> Result<PureState> {
    check_m(m)?;
    qubits(m, (0..1usize << m).filter(|x| x.count_ones() == 1))
}

/// (|00⟩ + |11⟩)/√2 ⊗ (α|0⟩ + β|1⟩).
pub fn epr_times_single(alpha: Complex64, beta: Complex64) -> Result<PureState> {
    let norm = alpha.norm_sqr() + beta.norm_sqr();
    if (norm - 1.0).abs() > NORM_TOLERANCE {
        return Err(Error::InvalidParameter(format!(
            "|alpha|^2 + |beta|^2 must be 1, got {norm}"
        )));
    }
    let single = PureState::new(vec![2], vec![alpha, beta])?;
    Ok(ghz(2)?.tensor(&single))
}

fn superpose(first: PureState, second: PureState, s: f64, phi: f64) -> Result<PureState> {
    check_s(s)?;
    if !phi.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "phi must be finite, got {phi}"
        )));
    }
    let a = s.sqrt();
    let b = Complex64::from_polar((1.0 - s).sqrt(), phi);
    let amps = first
        .amps()
        .iter()
        .zip(second.amps())
        .map(|(x, y)| x * a + y * b)
        .collect();
    // W, anti-W and GHZ have disjoint supports, so no renormalization needed.
    PureState::new(first.dims().to_vec(), amps)
}

/// √s |W₃⟩ + √(1−s) e^{iφ} |W̃₃⟩.
pub fn ww_superposition(s: f64, phi: f64) -> Result<PureState> {
    superpose(w(3)?, anti_w(3)?, s, phi)
}

/// √s |GHZ₃⟩ + √(1−s) e^{iφ} |W₃⟩.
pub fn gw_superposition(s: f64, phi: f64) -> Result<PureState> {
    superpose(ghz(3)?, w(3)?, s, phi)
}

/// Tensor product of single-subsystem states, each given by its amplitudes.
/// Every factor is normalized independently.
pub fn product(factors: &[Vec<Complex64>]) -> Result<PureState> {
    let mut iter = factors.iter();
    let first = iter
        .next()
        .ok_or_else(|| Error::InvalidParameter("product needs at least one factor".into()))?;
    let mut state = PureState::normalized(vec![first.len()], first.clone())?;
    for f in iter {
        state = state.tensor(&PureState::normalized(vec![f.len()], f.clone())?);
    }
    Ok(state)
}

/// A named family with its parameters.
#[derive(Debug, Clone, PartialEq)]
pub enum Family {
    Ghz { m: usize },
    W { m: usize },
    AntiW { m: usize },
    EprTimesSingle { alpha: Complex64, beta: Complex64 },
    WwSuperposition { s: f64, phi: f64 },
    GwSuperposition { s: f64, phi: f64 },
    Product { factors: Vec<Vec<Complex64>> },
}

impl Family {
    pub fn build(&self) -> Result<PureState> {
        match self {
            Family::Ghz { m } => ghz(*m),
            Family::W { m } => w(*m),
            Family::AntiW { m } => anti_w(*m),
            Family::EprTimesSingle { alpha, beta } => epr_times_single(*alpha, *beta),
            Family::WwSuperposition { s, phi } => ww_superposition(*s, *phi),
            Family::GwSuperposition { s, phi } => gw_superposition(*s, *phi),
            Family::Product { factors } => product(factors),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_1_SQRT_2, PI};

    fn assert_close(a: &PureState, b: &PureState) {
        assert_eq!(a.dims(), b.dims());
        for (x, y) in a.amps().iter().zip(b.amps()) {
            assert!((x - y).norm() < 1e-15, "{x} vs {y}");
        }
    }

    #[test]
    fn ghz3_amplitudes() {
        let g = ghz(3).unwrap();
        assert!((g.amplitude(&[0, 0, 0]).unwrap().re - FRAC_1_SQRT_2).abs() < 1e-15);
        assert!((g.amplitude(&[1, 1, 1]).unwrap().re - FRAC_1_SQRT_2).abs() < 1e-15);
        assert_eq!(g.amps().iter().filter(|a| a.norm() > 0.0).count(), 2);
    }

    #[test]
    fn w3_support() {
        let s3 = 1.0 / 3f64.sqrt();
        let w3 = w(3).unwrap();
        for idx in [[1, 1, 0], [1, 0, 1], [0, 1, 1]] {
            assert!((w3.amplitude(&idx).unwrap().re - s3).abs() < 1e-15);
        }
        let aw = anti_w(3).unwrap();
        for idx in [[0, 0, 1], [0, 1, 0], [1, 0, 0]] {
            assert!((aw.amplitude(&idx).unwrap().re - s3).abs() < 1e-15);
        }
    }

    #[test]
    fn superposition_endpoints() {
        assert_close(&ww_superposition(1.0, 2.3).unwrap(), &w(3).unwrap());
        assert_close(&gw_superposition(0.0, 0.0).unwrap(), &w(3).unwrap());
        assert_close(&gw_superposition(1.0, PI).unwrap(), &ghz(3).unwrap());
    }

    #[test]
    fn all_families_normalized() {
        let states = [
            ghz(2).unwrap(),
            ghz(6).unwrap(),
            w(4).unwrap(),
            anti_w(5).unwrap(),
            epr_times_single(Complex64::new(0.6, 0.0), Complex64::new(0.0, 0.8)).unwrap(),
            ww_superposition(0.3, 1.0).unwrap(),
            gw_superposition(0.7, PI).unwrap(),
            product(&[
                vec![Complex64::new(1.0, 0.0), Complex64::new(2.0, 1.0)],
                vec![Complex64::new(0.0, 1.0); 3],
            ])
            .unwrap(),
        ];
        for s in &states {
            assert!((s.norm() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn invalid_parameters() {
        assert!(ghz(1).is_err());
        assert!(w(0).is_err());
        assert!(ww_superposition(1.5, 0.0).is_err());
        assert!(gw_superposition(-0.1, 0.0).is_err());
        assert!(epr_times_single(Complex64::new(1.0, 0.0), Complex64::new(1.0, 0.0)).is_err());
        assert!(product(&[]).is_err());
        assert!(product(&[vec![Complex64::new(1.0, 0.0)]]).is_err());
    }
}
