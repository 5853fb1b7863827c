//! Two-party pure states: the concurrence vector
//! `C_αβ = ⟨ψ| (L_α ⊗ L_β) |ψ*⟩` and the measures it is checked against.

use crate::linalg::hermitian_eigenvalues;
use crate::son::{apply_generator_axis, enumerate_generators};
use crate::state::PureState;
use crate::{Complex64, Error, Result};

/// Components indexed by generator pairs `(α, β)` of SO(N₁) × SO(N₂), in
/// enumeration order, stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct BipartiteConcurrenceVector {
    pub n1: usize,
    pub n2: usize,
    pub components: Vec<Complex64>,
}

impl BipartiteConcurrenceVector {
    /// `(N₁(N₁−1)/2, N₂(N₂−1)/2)`.
    pub fn shape(&self) -> (usize, usize) {
        (self.n1 * (self.n1 - 1) / 2, self.n2 * (self.n2 - 1) / 2)
    }

    pub fn component(&self, alpha: usize, beta: usize) -> Complex64 {
        self.components[alpha * self.shape().1 + beta]
    }

    pub fn norm(&self) -> f64 {
        self.components
            .iter()
            .map(|c| c.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }
}

fn bipartite_dims(psi: &PureState) -> Result<(usize, usize)> {
    match psi.dims() {
        &[n1, n2] => Ok((n1, n2)),
        d => Err(Error::Arity {
            expected: "2".into(),
            found: d.len(),
        }),
    }
}

pub fn concurrence_vector(psi: &PureState) -> Result<BipartiteConcurrenceVector> {
    let (n1, n2) = bipartite_dims(psi)?;
    let conj = psi.conjugate();
    let second = enumerate_generators(n2)?;
    let mut components = Vec::with_capacity(second.len() * n1 * (n1 - 1) / 2);
    for ga in enumerate_generators(n1)? {
        let half = apply_generator_axis(&conj, 0, &ga)?;
        for gb in &second {
            let tilde = apply_generator_axis(&half, 1, gb)?;
            components.push(psi.inner(&tilde)?);
        }
    }
    Ok(BipartiteConcurrenceVector { n1, n2, components })
}

/// Euclidean norm of the concurrence vector.
pub fn concurrence_norm(psi: &PureState) -> Result<f64> {
    Ok(concurrence_vector(psi)?.norm())
}

/// `2 √(Σ_{i<j} Σ_{k<l} |a_ik a_jl − a_il a_jk|²)`.
pub fn concurrence_closed_form(psi: &PureState) -> Result<f64> {
    let (n1, n2) = bipartite_dims(psi)?;
    let a = |i: usize, k: usize| psi.amps()[i * n2 + k];
    let mut sum = 0.0;
    for i in 0..n1 {
        for j in i + 1..n1 {
            for k in 0..n2 {
                for l in k + 1..n2 {
                    sum += (a(i, k) * a(j, l) - a(i, l) * a(j, k)).norm_sqr();
                }
            }
        }
    }
    Ok(2.0 * sum.sqrt())
}

/// Which subsystem a reduced density matrix keeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    First,
    Second,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ReducedDensity {
    pub n: usize,
    /// Row-major `n×n`.
    pub entries: Vec<Complex64>,
}

impl ReducedDensity {
    pub fn entry(&self, r: usize, c: usize) -> Complex64 {
        self.entries[r * self.n + c]
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.n).map(|i| self.entry(i, i)).sum()
    }

    /// Tr ρ², evaluated as Σ |ρ_rc|² (valid for Hermitian ρ).
    pub fn purity(&self) -> f64 {
        self.entries.iter().map(|e| e.norm_sqr()).sum()
    }

    /// Eigenvalues in descending order.
    pub fn eigenvalues(&self) -> Vec<f64> {
        hermitian_eigenvalues(&self.entries, self.n)
    }
}

/// Partial trace of `|ψ⟩⟨ψ|` over the subsystem not named by `side`.
pub fn reduced_density(psi: &PureState, side: Side) -> Result<ReducedDensity> {
    let (n1, n2) = bipartite_dims(psi)?;
    let amps = psi.amps();
    let (n, traced) = match side {
        Side::First => (n1, n2),
        Side::Second => (n2, n1),
    };
    let a = |kept: usize, other: usize| match side {
        Side::First => amps[kept * n2 + other],
        Side::Second => amps[other * n2 + kept],
    };
    let mut entries = vec![Complex64::new(0.0, 0.0); n * n];
    for r in 0..n {
        for c in 0..n {
            entries[r * n + c] = (0..traced).map(|k| a(r, k) * a(c, k).conj()).sum();
        }
    }
    Ok(ReducedDensity { n, entries })
}

/// `√(2 (1 − Tr ρ_A²))`.
pub fn i_concurrence(psi: &PureState) -> Result<f64> {
    let purity = reduced_density(psi, Side::First)?.purity();
    Ok((2.0 * (1.0 - purity)).max(0.0).sqrt())
}

/// `√(N/(N−1) (1 − Tr ρ_A²))` with `N = min(N₁, N₂)`; equals 1 on maximally
/// entangled states.
pub fn fei_concurrence(psi: &PureState) -> Result<f64> {
    let (n1, n2) = bipartite_dims(psi)?;
    let n = n1.min(n2) as f64;
    let purity = reduced_density(psi, Side::First)?.purity();
    Ok((n / (n - 1.0) * (1.0 - purity)).max(0.0).sqrt())
}

/// `2 |a₀₀ a₁₁ − a₀₁ a₁₀|` for two qubits.
pub fn wootters_two_qubit(psi: &PureState) -> Result<f64> {
    if psi.dims() != [2, 2] {
        return Err(Error::DimensionMismatch {
            expected: vec![2, 2],
            found: psi.dims().to_vec(),
        });
    }
    let a = psi.amps();
    Ok(2.0 * (a[0] * a[3] - a[1] * a[2]).norm())
}

/// Entanglement entropy in bits, from the spectrum of the smaller reduced
/// density matrix.
pub fn von_neumann_entropy(psi: &PureState) -> Result<f64> {
    let (n1, n2) = bipartite_dims(psi)?;
    let side = if n1 <= n2 { Side::First } else { Side::Second };
    let rho = reduced_density(psi, side)?;
    Ok(rho
        .eigenvalues()
        .into_iter()
        .filter(|&x| x > 0.0)
        .map(|x| -x * x.log2())
        .sum())
}

/// Binary entropy in bits; `H(0) = H(1) = 0`.
pub fn binary_entropy(x: f64) -> f64 {
    [x, 1.0 - x]
        .into_iter()
        .filter(|&p| p > 0.0)
        .map(|p| -p * p.log2())
        .sum()
}

/// Entanglement of formation `H(½ + ½√(1 − C²))` in bits. Only defined when
/// one subsystem is a qubit.
pub fn eof(psi: &PureState) -> Result<f64> {
    let (n1, n2) = bipartite_dims(psi)?;
    if n1.min(n2) != 2 {
        return Err(Error::InvalidParameter(format!(
            "entanglement of formation from concurrence needs a qubit factor, got dims [{n1}, {n2}]"
        )));
    }
    let c = concurrence_norm(psi)?;
    Ok(binary_entropy(0.5 + 0.5 * (1.0 - c * c).max(0.0).sqrt()))
}
