//! Defining-representation generators of SO(N).
//!
//! Each generator is the real antisymmetric matrix with exactly two nonzero
//! entries, `+sign` at `(k, l)` and `-sign` at `(l, k)`, `k < l`. The sign is
//! the Levi-Civita symbol `ε[c₁ … c_{N−2} k l]` with `c` the sorted complement
//! of `{k, l}` and `ε[0 1 … N−1] = +1`. That permutation has `2N − 3 − k − l`
//! inversions, so the sign reduces to `(−1)^(k+l+1)` for every `N`.

use crate::state::{strides, PureState};
use crate::{Complex64, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SonGenerator {
    pub n: usize,
    pub k: usize,
    pub l: usize,
    pub sign: i8,
}

/// Levi-Civita sign attached to the generator supported on `(k, l)`.
pub fn generator_sign(n: usize, k: usize, l: usize) -> Result<i8> {
    if !(k < l && l < n) {
        return Err(Error::InvalidGenerator(format!(
            "need 0 <= k < l < n, got n={n}, k={k}, l={l}"
        )));
    }
    Ok(if (k + l) % 2 == 1 { 1 } else { -1 })
}

/// All `n(n−1)/2` generators of SO(n), lexicographic in `(k, l)`.
pub fn enumerate_generators(n: usize) -> Result<Vec<SonGenerator>> {
    if n < 2 {
        return Err(Error::InvalidGenerator(format!(
            "SO(n) needs n >= 2, got {n}"
        )));
    }
    let mut out = Vec::with_capacity(n * (n - 1) / 2);
    for k in 0..n {
        for l in k + 1..n {
            out.push(SonGenerator::new(n, k, l)?);
        }
    }
    Ok(out)
}

/// Number of generators of SO(n).
pub fn generator_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

impl SonGenerator {
    pub fn new(n: usize, k: usize, l: usize) -> Result<Self> {
        let sign = generator_sign(n, k, l)?;
        Ok(Self { n, k, l, sign })
    }

    /// Looks up generator `alpha` in enumeration order.
    pub fn nth(n: usize, alpha: usize) -> Result<Self> {
        enumerate_generators(n)?.get(alpha).copied().ok_or_else(|| {
            Error::InvalidGenerator(format!(
                "generator index {alpha} out of range for SO({n}) ({} generators)",
                generator_count(n)
            ))
        })
    }

    pub fn entry(&self, row: usize, col: usize) -> i32 {
        let s = i32::from(self.sign);
        if (row, col) == (self.k, self.l) {
            s
        } else if (row, col) == (self.l, self.k) {
            -s
        } else {
            0
        }
    }

    /// Row-major `n×n` matrix.
    pub fn to_dense(&self) -> Vec<i32> {
        (0..self.n * self.n)
            .map(|x| self.entry(x / self.n, x % self.n))
            .collect()
    }
}

/// Applies `g` to subsystem `axis` of `state`, identity on the others.
/// The result is in general unnormalized.
pub fn apply_generator_axis(state: &PureState, axis: usize, g: &SonGenerator) -> Result<PureState> {
    let dims = state.dims();
    match dims.get(axis) {
        Some(&d) if d == g.n => {}
        _ => {
            return Err(Error::DimensionMismatch {
                expected: vec![g.n],
                found: dims.get(axis).map(|&d| vec![d]).unwrap_or_default(),
            })
        }
    }
    let stride = strides(dims)[axis];
    let block = stride * g.n;
    let sign = f64::from(g.sign);
    let amps = state.amps();
    let mut out = vec![Complex64::new(0.0, 0.0); amps.len()];
    for base in (0..amps.len()).step_by(block) {
        for inner in 0..stride {
            let at_k = base + g.k * stride + inner;
            let at_l = base + g.l * stride + inner;
            out[at_k] = amps[at_l] * sign;
            out[at_l] = -amps[at_k] * sign;
        }
    }
    PureState::unnormalized(dims.to_vec(), out)
}
