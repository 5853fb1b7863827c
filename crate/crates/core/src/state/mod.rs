//! Dense multipartite pure states.
//!
//! Amplitudes are stored row-major over the subsystem dimensions: the index
//! of the last subsystem varies fastest. All indices are 0-based.

mod catalog;

pub use catalog::{
    anti_w, epr_times_single, ghz, gw_superposition, product, w, ww_superposition, Family,
};

use crate::{Complex64, Error, Result, NORM_TOLERANCE};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

/// A normalized (or, for intermediate results, unnormalized) pure state.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    dims: Vec<usize>,
    amps: Vec<Complex64>,
}

/// Checks that there is at least one subsystem and every dimension is ≥ 2.
pub fn validate_dims(dims: &[usize]) -> Result<()> {
    if dims.is_empty() {
        return Err(Error::InvalidDims(
            "at least one subsystem is required".into(),
        ));
    }
    if let Some(&d) = dims.iter().find(|&&d| d < 2) {
        return Err(Error::InvalidDims(format!(
            "subsystem dimension must be >= 2 (got {d})"
        )));
    }
    dims.iter()
        .try_fold(1usize, |acc, &d| acc.checked_mul(d))
        .ok_or_else(|| Error::InvalidDims("total dimension overflows".into()))?;
    Ok(())
}

/// Row-major strides: `strides[k] = Π_{r>k} dims[r]`.
pub fn strides(dims: &[usize]) -> Vec<usize> {
    let mut out = vec![1; dims.len()];
    for k in (0..dims.len().saturating_sub(1)).rev() {
        out[k] = out[k + 1] * dims[k + 1];
    }
    out
}

pub fn flatten(dims: &[usize], index: &[usize]) -> Result<usize> {
    if index.len() != dims.len() || index.iter().zip(dims).any(|(&i, &d)| i >= d) {
        return Err(Error::IndexOutOfRange {
            index: index.to_vec(),
            dims: dims.to_vec(),
        });
    }
    Ok(index.iter().zip(dims).fold(0, |acc, (&i, &d)| acc * d + i))
}

pub fn unflatten(dims: &[usize], offset: usize) -> Result<Vec<usize>> {
    let size: usize = dims.iter().product();
    if offset >= size {
        return Err(Error::OffsetOutOfRange { offset, size });
    }
    let mut rest = offset;
    let mut index = vec![0; dims.len()];
    for k in (0..dims.len()).rev() {
        index[k] = rest % dims[k];
        rest /= dims[k];
    }
    Ok(index)
}

fn norm_of(amps: &[Complex64]) -> f64 {
    amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
}

impl PureState {
    /// Builds a state from a dense amplitude vector that must already be
    /// normalized to within [`NORM_TOLERANCE`].
    pub fn new(dims: Vec<usize>, amps: Vec<Complex64>) -> Result<Self> {
        let state = Self::unnormalized(dims, amps)?;
        let norm = state.norm();
        if (norm - 1.0).abs() > NORM_TOLERANCE {
            return Err(Error::NotNormalized(norm));
        }
        Ok(state)
    }

    /// Builds a state and divides it by its Euclidean norm.
    pub fn normalized(dims: Vec<usize>, amps: Vec<Complex64>) -> Result<Self> {
        let mut state = Self::unnormalized(dims, amps)?;
        let norm = state.norm();
        if norm == 0.0 {
            return Err(Error::ZeroVector);
        }
        state.amps.iter_mut().for_each(|a| *a /= norm);
        Ok(state)
    }

    /// Builds a vector without any norm check. Used for intermediate results
    /// such as a generator applied to a state.
    pub fn unnormalized(dims: Vec<usize>, amps: Vec<Complex64>) -> Result<Self> {
        validate_dims(&dims)?;
        let size: usize = dims.iter().product();
        if amps.len() != size {
            return Err(Error::InvalidDims(format!(
                "expected {size} amplitudes for dims {dims:?}, got {}",
                amps.len()
            )));
        }
        if let Some(pos) = amps
            .iter()
            .position(|a| !a.re.is_finite() || !a.im.is_finite())
        {
            return Err(Error::NonFinite(pos));
        }
        Ok(Self { dims, amps })
    }

    /// Builds a state from sparse `(index, amplitude)` entries; unspecified
    /// amplitudes are zero.
    pub fn from_entries(
        dims: Vec<usize>,
        entries: &[(Vec<usize>, Complex64)],
        normalize: bool,
    ) -> Result<Self> {
        validate_dims(&dims)?;
        let size: usize = dims.iter().product();
        let mut amps = vec![Complex64::new(0.0, 0.0); size];
        let mut seen = vec![false; size];
        for (index, amp) in entries {
            let offset = flatten(&dims, index)?;
            if seen[offset] {
                return Err(Error::DuplicateIndex(index.clone()));
            }
            seen[offset] = true;
            amps[offset] = *amp;
        }
        if let Some(pos) = amps
            .iter()
            .position(|a| !a.re.is_finite() || !a.im.is_finite())
        {
            return Err(Error::NonFinite(pos));
        }
        if amps.iter().all(|a| a.norm_sqr() == 0.0) {
            return Err(Error::ZeroVector);
        }
        if normalize {
            Self::normalized(dims, amps)
        } else {
            Self::new(dims, amps)
        }
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn amps(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn num_subsystems(&self) -> usize {
        self.dims.len()
    }

    pub fn len(&self) -> usize {
        self.amps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.amps.is_empty()
    }

    pub fn amplitude(&self, index: &[usize]) -> Result<Complex64> {
        Ok(self.amps[flatten(&self.dims, index)?])
    }

    pub fn norm(&self) -> f64 {
        norm_of(&self.amps)
    }

    /// |ψ*⟩: every amplitude complex-conjugated in the standard basis.
    pub fn conjugate(&self) -> Self {
        Self {
            dims: self.dims.clone(),
            amps: self.amps.iter().map(|a| a.conj()).collect(),
        }
    }

    /// ⟨self|other⟩ = Σ conj(a_x) b_x.
    pub fn inner(&self, other: &Self) -> Result<Complex64> {
        if self.dims != other.dims {
            return Err(Error::DimensionMismatch {
                expected: self.dims.clone(),
                found: other.dims.clone(),
            });
        }
        Ok(self
            .amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    /// |self⟩ ⊗ |other⟩, subsystems of `other` appended after those of `self`.
    pub fn tensor(&self, other: &Self) -> Self {
        let mut dims = self.dims.clone();
        dims.extend_from_slice(&other.dims);
        let amps = self
            .amps
            .iter()
            .flat_map(|a| other.amps.iter().map(move |b| a * b))
            .collect();
        Self { dims, amps }
    }

    /// Applies the square matrix `op` (row-major, `dims[axis]²` entries) to
    /// one subsystem, identity elsewhere.
    pub fn apply_local(&self, axis: usize, op: &[Complex64]) -> Result<Self> {
        let n = *self.dims.get(axis).ok_or_else(|| {
            Error::InvalidDims(format!(
                "axis {axis} out of range for {} subsystems",
                self.dims.len()
            ))
        })?;
        if op.len() != n * n {
            return Err(Error::InvalidDims(format!(
                "operator on axis {axis} must be {n}x{n}, got {} entries",
                op.len()
            )));
        }
        let stride = strides(&self.dims)[axis];
        let block = stride * n;
        let mut out = vec![Complex64::new(0.0, 0.0); self.amps.len()];
        for base in (0..self.amps.len()).step_by(block) {
            for inner in 0..stride {
                let at = |r: usize| base + r * stride + inner;
                for r in 0..n {
                    out[at(r)] = (0..n).map(|c| op[r * n + c] * self.amps[at(c)]).sum();
                }
            }
        }
        Ok(Self {
            dims: self.dims.clone(),
            amps: out,
        })
    }

    /// Reorders subsystems: subsystem `k` of the result is subsystem
    /// `perm[k]` of `self`.
    pub fn permute(&self, perm: &[usize]) -> Result<Self> {
        let m = self.dims.len();
        let mut seen = vec![false; m];
        if perm.len() != m
            || perm
                .iter()
                .any(|&p| p >= m || std::mem::replace(&mut seen[p], true))
        {
            return Err(Error::InvalidParameter(format!(
                "{perm:?} is not a permutation of {m} subsystems"
            )));
        }
        let dims: Vec<usize> = perm.iter().map(|&p| self.dims[p]).collect();
        let mut amps = vec![Complex64::new(0.0, 0.0); self.amps.len()];
        let mut old = vec![0; m];
        for (offset, slot) in amps.iter_mut().enumerate() {
            let new = unflatten(&dims, offset)?;
            for (k, &p) in perm.iter().enumerate() {
                old[p] = new[k];
            }
            *slot = self.amps[flatten(&self.dims, &old)?];
        }
        Ok(Self { dims, amps })
    }
}

/// Haar-random pure state: independent standard complex Gaussian amplitudes
/// from a ChaCha8 stream seeded with `seed`, then normalized.
pub fn random_state(dims: &[usize], seed: u64) -> Result<PureState> {
    validate_dims(dims)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let size: usize = dims.iter().product();
    let amps = (0..size)
        .map(|_| {
            let re: f64 = StandardNormal.sample(&mut rng);
            let im: f64 = StandardNormal.sample(&mut rng);
            Complex64::new(re, im)
        })
        .collect();
    PureState::normalized(dims.to_vec(), amps)
}

/// Haar-random `n×n` unitary (row-major): a complex Gaussian matrix whose
/// columns are orthonormalized by modified Gram-Schmidt.
pub fn random_unitary(n: usize, seed: u64) -> Vec<Complex64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cols: Vec<Vec<Complex64>> = (0..n)
        .map(|_| {
            (0..n)
                .map(|_| {
                    let re: f64 = StandardNormal.sample(&mut rng);
                    let im: f64 = StandardNormal.sample(&mut rng);
                    Complex64::new(re, im)
                })
                .collect()
        })
        .collect();
    for c in 0..n {
        let (done, rest) = cols.split_at_mut(c);
        let col = &mut rest[0];
        for prev in done.iter() {
            let proj: Complex64 = prev.iter().zip(col.iter()).map(|(p, x)| p.conj() * x).sum();
            for (x, p) in col.iter_mut().zip(prev) {
                *x -= proj * p;
            }
        }
        let norm = norm_of(&cols[c]);
        cols[c].iter_mut().for_each(|x| *x /= norm);
    }
    let mut out = vec![Complex64::new(0.0, 0.0); n * n];
    for (c, col) in cols.iter().enumerate() {
        for (r, &x) in col.iter().enumerate() {
            out[r * n + c] = x;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn flatten_examples() {
        assert_eq!(flatten(&[2, 3], &[1, 2]).unwrap(), 5);
        assert_eq!(flatten(&[2, 2, 2], &[1, 0, 1]).unwrap(), 5);
        assert_eq!(flatten(&[4], &[0]).unwrap(), 0);
        assert!(flatten(&[2, 3], &[0, 3]).is_err());
        assert!(flatten(&[2, 3], &[0]).is_err());
        assert!(unflatten(&[2, 3], 6).is_err());
    }

    #[test]
    fn flatten_roundtrip_exhaustive() {
        for dims in [
            vec![2, 3, 4],
            vec![4, 4, 4, 4],
            vec![2, 2, 2, 2, 2, 2, 2, 2],
            vec![7, 5],
        ] {
            let size: usize = dims.iter().product();
            assert!(size <= 256);
            for offset in 0..size {
                let idx = unflatten(&dims, offset).unwrap();
                assert_eq!(flatten(&dims, &idx).unwrap(), offset);
            }
        }
    }

    #[test]
    fn make_state_bell_and_ghz() {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let bell = PureState::from_entries(
            vec![2, 2],
            &[(vec![0, 0], c(h, 0.0)), (vec![1, 1], c(h, 0.0))],
            false,
        )
        .unwrap();
        assert!((bell.norm() - 1.0).abs() < 1e-15);

        let ghz = PureState::from_entries(
            vec![2, 2, 2],
            &[(vec![0, 0, 0], c(1.0, 0.0)), (vec![1, 1, 1], c(1.0, 0.0))],
            true,
        )
        .unwrap();
        assert!((ghz.amplitude(&[0, 0, 0]).unwrap().re - h).abs() < 1e-15);
        assert!((ghz.amplitude(&[1, 1, 1]).unwrap().re - h).abs() < 1e-15);
    }

    #[test]
    fn make_state_errors() {
        let one = c(1.0, 0.0);
        assert!(matches!(
            PureState::from_entries(vec![2, 2], &[(vec![0, 0], one), (vec![1, 1], one)], false),
            Err(Error::NotNormalized(_))
        ));
        assert!(matches!(
            PureState::from_entries(vec![2, 2], &[(vec![0, 2], one)], true),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            PureState::from_entries(vec![2, 2], &[(vec![0, 1], one), (vec![0, 1], one)], true),
            Err(Error::DuplicateIndex(_))
        ));
        assert!(matches!(
            PureState::from_entries(vec![2, 2], &[(vec![0, 1], c(0.0, 0.0))], true),
            Err(Error::ZeroVector)
        ));
        assert!(matches!(
            PureState::from_entries(vec![2, 1], &[(vec![0, 0], one)], true),
            Err(Error::InvalidDims(_))
        ));
        assert!(matches!(
            PureState::from_entries(vec![2], &[(vec![0], c(f64::NAN, 0.0))], true),
            Err(Error::NonFinite(0))
        ));
    }

    #[test]
    fn conjugate_examples() {
        let s = PureState::new(vec![2], vec![c(0.0, 1.0), c(0.0, 0.0)]).unwrap();
        assert_eq!(s.conjugate().amps()[0], c(0.0, -1.0));
        let g = ghz(3).unwrap();
        assert_eq!(g.conjugate(), g);
        let r = random_state(&[3, 2], 5).unwrap();
        assert_eq!(r.conjugate().conjugate(), r);
    }

    #[test]
    fn inner_examples() {
        let r = random_state(&[2, 3, 2], 11).unwrap();
        let one = r.inner(&r).unwrap();
        assert!((one.re - 1.0).abs() < 1e-12 && one.im.abs() < 1e-15);

        let k00 = PureState::from_entries(vec![2, 2], &[(vec![0, 0], c(1.0, 0.0))], false).unwrap();
        let k11 = PureState::from_entries(vec![2, 2], &[(vec![1, 1], c(1.0, 0.0))], false).unwrap();
        assert_eq!(k00.inner(&k11).unwrap(), c(0.0, 0.0));
        assert!(k00.inner(&r).is_err());
    }

    #[test]
    fn random_state_is_deterministic_and_normalized() {
        let a = random_state(&[2, 3], 42).unwrap();
        let b = random_state(&[2, 3], 42).unwrap();
        assert_eq!(a, b);
        assert!((a.norm() - 1.0).abs() < 1e-12);
        assert_ne!(a, random_state(&[2, 3], 43).unwrap());
    }

    #[test]
    fn random_state_snapshot() {
        let frozen = [
            (0.14175537211187367, 0.3956466501265552),
            (-0.06253694236243156, 0.14127068181968414),
            (-0.1518712260234411, -0.27699091933943093),
            (-0.2972761959917623, 0.27185582521985324),
            (0.6291981031005189, -0.21310031008665037),
            (0.009306060288853205, 0.309910801775503),
        ];
        let s = random_state(&[2, 3], 42).unwrap();
        for (a, (re, im)) in s.amps().iter().zip(frozen) {
            assert_eq!((a.re, a.im), (re, im));
        }
    }

    #[test]
    fn random_unitary_is_unitary() {
        for n in 2..6 {
            let u = random_unitary(n, n as u64);
            for a in 0..n {
                for b in 0..n {
                    let dot: Complex64 = (0..n).map(|r| u[r * n + a].conj() * u[r * n + b]).sum();
                    let expect = if a == b { 1.0 } else { 0.0 };
                    assert!((dot - expect).norm() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn apply_local_matches_tensor_structure() {
        let a = random_state(&[3], 1).unwrap();
        let b = random_state(&[2], 2).unwrap();
        let u = random_unitary(2, 3);
        let lhs = a.tensor(&b).apply_local(1, &u).unwrap();
        let rhs = a.tensor(&b.apply_local(0, &u).unwrap());
        for (x, y) in lhs.amps().iter().zip(rhs.amps()) {
            assert!((x - y).norm() < 1e-14);
        }
        assert!(a.apply_local(1, &u).is_err());
        assert!(a.apply_local(0, &u).is_err());
    }

    #[test]
    fn permute_swaps_tensor_factors() {
        let a = random_state(&[3], 1).unwrap();
        let b = random_state(&[2], 2).unwrap();
        let swapped = a.tensor(&b).permute(&[1, 0]).unwrap();
        assert_eq!(swapped, b.tensor(&a));
        assert!(a.tensor(&b).permute(&[0, 0]).is_err());
    }
}
