//! Dense evaluation of the operator definition of the pairwise components:
//! `C^{ij}_{α_i α_j} = √⟨ψ| M ρ^{T_ij} M |ψ⟩` with `ρ = |ψ⟩⟨ψ|`,
//! `ρ^{T_ij}` the partial transpose on subsystems `i` and `j`, and
//! `M = I ⊗ … ⊗ L_{α_i} ⊗ … ⊗ L_{α_j} ⊗ … ⊗ I`.
//!
//! Everything here works on `D×D` matrices and never conjugates a
//! multipartite ket directly. It exists to check [`crate::multipartite`]
//! and is limited to `D ≤ 256`.

use crate::son::{enumerate_generators, SonGenerator};
use crate::state::{flatten, unflatten, PureState};
use crate::{Complex64, Error, Result};

/// Largest total dimension the oracle accepts.
pub const ORACLE_MAX_DIM: usize = 256;

const REALNESS_TOL: f64 = 1e-10;

/// Row-major `D×D` density matrix with rows and columns indexed by
/// [`flatten`] offsets.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    pub dims: Vec<usize>,
    pub entries: Vec<Complex64>,
}

impl DensityMatrix {
    pub fn size(&self) -> usize {
        self.dims.iter().product()
    }

    pub fn entry(&self, r: usize, c: usize) -> Complex64 {
        self.entries[r * self.size() + c]
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.size()).map(|x| self.entry(x, x)).sum()
    }

    pub fn mul_vec(&self, v: &[Complex64]) -> Vec<Complex64> {
        let d = self.size();
        (0..d)
            .map(|r| (0..d).map(|c| self.entries[r * d + c] * v[c]).sum())
            .collect()
    }
}

fn guard(dims: &[usize]) -> Result<usize> {
    let size: usize = dims.iter().product();
    if size > ORACLE_MAX_DIM {
        return Err(Error::ScaleGuard {
            size,
            limit: ORACLE_MAX_DIM,
        });
    }
    Ok(size)
}

/// `|ψ⟩⟨ψ|`.
pub fn density_of(psi: &PureState) -> Result<DensityMatrix> {
    guard(psi.dims())?;
    let amps = psi.amps();
    let entries = amps
        .iter()
        .flat_map(|a| amps.iter().map(move |b| a * b.conj()))
        .collect();
    Ok(DensityMatrix {
        dims: psi.dims().to_vec(),
        entries,
    })
}

fn check_pair(dims: &[usize], i: usize, j: usize) -> Result<()> {
    if !(i < j && j < dims.len()) {
        return Err(Error::InvalidPair {
            i,
            j,
            m: dims.len(),
        });
    }
    Ok(())
}

/// `ρ^{T_ij}`: the `(x, y)` entry is `ρ(x', y')` where `x'` is `x` with its
/// `i`, `j` components taken from `y`, and `y'` is `y` with its `i`, `j`
/// components taken from `x`.
pub fn partial_transpose_pair(rho: &DensityMatrix, i: usize, j: usize) -> Result<DensityMatrix> {
    let dims = &rho.dims;
    check_pair(dims, i, j)?;
    let d = guard(dims)?;
    let mut entries = vec![Complex64::new(0.0, 0.0); d * d];
    for x in 0..d {
        let xi = unflatten(dims, x)?;
        for y in 0..d {
            let yi = unflatten(dims, y)?;
            let mut xs = xi.clone();
            let mut ys = yi.clone();
            for t in [i, j] {
                xs[t] = yi[t];
                ys[t] = xi[t];
            }
            entries[x * d + y] = rho.entries[flatten(dims, &xs)? * d + flatten(dims, &ys)?];
        }
    }
    Ok(DensityMatrix {
        dims: dims.clone(),
        entries,
    })
}

/// `(A ⊗ B)_{(a,b),(c,d)} = A_ac B_bd` for square row-major matrices.
fn kron(a: &[f64], na: usize, b: &[f64], nb: usize) -> Vec<f64> {
    let n = na * nb;
    let mut out = vec![0.0; n * n];
    for ar in 0..na {
        for ac in 0..na {
            let x = a[ar * na + ac];
            if x == 0.0 {
                continue;
            }
            for br in 0..nb {
                for bc in 0..nb {
                    out[(ar * nb + br) * n + ac * nb + bc] = x * b[br * nb + bc];
                }
            }
        }
    }
    out
}

fn identity(n: usize) -> Vec<f64> {
    (0..n * n)
        .map(|x| if x / n == x % n { 1.0 } else { 0.0 })
        .collect()
}

/// Dense `M^{ij}_{α_i α_j}` as a real row-major `D×D` matrix.
pub fn m_operator(
    dims: &[usize],
    i: usize,
    j: usize,
    alpha_i: usize,
    alpha_j: usize,
) -> Result<Vec<f64>> {
    check_pair(dims, i, j)?;
    guard(dims)?;
    let gi = SonGenerator::nth(dims[i], alpha_i)?;
    let gj = SonGenerator::nth(dims[j], alpha_j)?;
    let mut acc = vec![1.0];
    let mut size = 1;
    for (axis, &n) in dims.iter().enumerate() {
        let factor: Vec<f64> = if axis == i {
            gi.to_dense().into_iter().map(f64::from).collect()
        } else if axis == j {
            gj.to_dense().into_iter().map(f64::from).collect()
        } else {
            identity(n)
        };
        acc = kron(&acc, size, &factor, n);
        size *= n;
    }
    Ok(acc)
}

fn real_mul_vec(m: &[f64], v: &[Complex64]) -> Vec<Complex64> {
    let d = v.len();
    (0..d)
        .map(|r| (0..d).map(|c| v[c] * m[r * d + c]).sum())
        .collect()
}

/// `⟨ψ| M ρ^{T_ij} M |ψ⟩` by dense matrix-vector products.
pub fn definitional_expectation(
    psi: &PureState,
    i: usize,
    j: usize,
    alpha_i: usize,
    alpha_j: usize,
) -> Result<Complex64> {
    let rho_t = partial_transpose_pair(&density_of(psi)?, i, j)?;
    let m = m_operator(psi.dims(), i, j, alpha_i, alpha_j)?;
    let right = real_mul_vec(&m, &rho_t.mul_vec(&real_mul_vec(&m, psi.amps())));
    Ok(psi
        .amps()
        .iter()
        .zip(&right)
        .map(|(a, b)| a.conj() * b)
        .sum())
}

/// `C^{ij}_{α_i α_j}` from the operator definition. Fails if the expectation
/// is not real and nonnegative to within `1e-10`.
pub fn definitional_component(
    psi: &PureState,
    i: usize,
    j: usize,
    alpha_i: usize,
    alpha_j: usize,
) -> Result<f64> {
    let value = definitional_expectation(psi, i, j, alpha_i, alpha_j)?;
    if value.im.abs() > REALNESS_TOL {
        return Err(Error::NonRealExpectation {
            re: value.re,
            im: value.im,
        });
    }
    if value.re < -REALNESS_TOL {
        return Err(Error::NegativeExpectation(value.re));
    }
    Ok(value.re.max(0.0).sqrt())
}

#[derive(Debug, Clone, PartialEq)]
pub struct ComponentCheck {
    pub i: usize,
    pub j: usize,
    pub alpha_i: usize,
    pub alpha_j: usize,
    pub definitional: f64,
    pub closed_form: f64,
}

impl ComponentCheck {
    pub fn deviation(&self) -> f64 {
        (self.definitional - self.closed_form).abs()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub checks: Vec<ComponentCheck>,
    pub max_deviation: f64,
}

impl VerificationReport {
    pub fn passes(&self, tol: f64) -> bool {
        self.max_deviation <= tol
    }
}

/// Compares every pairwise component of `psi` from the operator definition
/// against `closed_form`, which normally is
/// [`crate::multipartite::pairwise_component`].
pub fn verify_components<F>(psi: &PureState, closed_form: F) -> Result<VerificationReport>
where
    F: Fn(&PureState, usize, usize, usize, usize) -> Result<f64>,
{
    let dims = psi.dims();
    guard(dims)?;
    if dims.len() < 2 {
        return Err(Error::Arity {
            expected: ">= 2".into(),
            found: dims.len(),
        });
    }
    let mut checks = Vec::new();
    for i in 0..dims.len() {
        for j in i + 1..dims.len() {
            let ni = enumerate_generators(dims[i])?.len();
            let nj = enumerate_generators(dims[j])?.len();
            for alpha_i in 0..ni {
                for alpha_j in 0..nj {
                    checks.push(ComponentCheck {
                        i,
                        j,
                        alpha_i,
                        alpha_j,
                        definitional: definitional_component(psi, i, j, alpha_i, alpha_j)?,
                        closed_form: closed_form(psi, i, j, alpha_i, alpha_j)?,
                    });
                }
            }
        }
    }
    let max_deviation = checks
        .iter()
        .map(ComponentCheck::deviation)
        .fold(0.0, f64::max);
    Ok(VerificationReport {
        checks,
        max_deviation,
    })
}
