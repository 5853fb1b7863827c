//! Pairwise concurrence subvectors and the total concurrence of an
//! m-partite pure state.
//!
//! For a pair of subsystems `(i, j)` and generators supported on
//! `(k_i, l_i)` and `(k_j, l_j)`, the component is `√(Σ_{K,L} |G(K,L)|²)`
//! where `K`, `L` run over the joint indices of the spectator subsystems and
//!
//! ```text
//! G(K,L) = σ_i σ_j ( a[k_i k_j K] a[l_i l_j L] − a[k_i l_j K] a[l_i k_j L]
//!                  − a[l_i k_j K] a[k_i l_j L] + a[l_i l_j K] a[k_i k_j L] )
//! ```
//!
//! This equals `√⟨ψ| M ρ^{T_ij} M |ψ⟩` with `M = L_{α_i} ⊗ L_{α_j}` on the
//! pair and identity elsewhere; see [`crate::oracle`] for the dense version.
//! Cost per pair is `O(N_i² N_j² D_rest²)`, `D_rest` the spectator dimension.

use crate::son::{enumerate_generators, SonGenerator};
use crate::state::{strides, PureState};
use crate::{Complex64, Error, Result};

/// Subvector `C^{ij}` for one pair. Components are row-major over
/// `(α_i, α_j)` in generator enumeration order.
#[derive(Debug, Clone, PartialEq)]
pub struct PairwiseSubvector {
    pub i: usize,
    pub j: usize,
    pub rows: usize,
    pub cols: usize,
    pub components: Vec<f64>,
    pub norm: f64,
}

impl PairwiseSubvector {
    pub fn component(&self, alpha_i: usize, alpha_j: usize) -> f64 {
        self.components[alpha_i * self.cols + alpha_j]
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PairNorm {
    pub i: usize,
    pub j: usize,
    pub norm: f64,
}

/// All pairwise norms in lexicographic `(i, j)` order and their
/// root-sum-square total.
#[derive(Debug, Clone, PartialEq)]
pub struct ConcurrenceReport {
    pub dims: Vec<usize>,
    pub pairwise: Vec<PairNorm>,
    pub total: f64,
}

impl ConcurrenceReport {
    pub fn pair(&self, i: usize, j: usize) -> Option<f64> {
        self.pairwise
            .iter()
            .find(|p| p.i == i && p.j == j)
            .map(|p| p.norm)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Separability {
    /// Two parties with vanishing concurrence: a product state.
    SeparableCertified,
    Entangled,
    /// Three or more parties with vanishing concurrence. A zero total is
    /// necessary for full separability but does not certify it.
    Inconclusive,
}

/// Flat-offset layout of one subsystem pair.
struct PairLayout {
    stride_i: usize,
    stride_j: usize,
    /// Offsets with the pair's components set to zero, one per spectator index.
    bases: Vec<usize>,
}

impl PairLayout {
    fn new(dims: &[usize], i: usize, j: usize) -> Result<Self> {
        let m = dims.len();
        if !(i < j && j < m) {
            return Err(Error::InvalidPair { i, j, m });
        }
        let st = strides(dims);
        let size: usize = dims.iter().product();
        let bases = (0..size)
            .filter(|&x| (x / st[i]).is_multiple_of(dims[i]) && (x / st[j]).is_multiple_of(dims[j]))
            .collect();
        Ok(Self {
            stride_i: st[i],
            stride_j: st[j],
            bases,
        })
    }

    /// Σ_{K,L} |G(K,L)|² for one generator pair.
    fn component_sq(&self, amps: &[Complex64], gi: &SonGenerator, gj: &SonGenerator) -> f64 {
        let sign = f64::from(gi.sign * gj.sign);
        let off = |p: usize, q: usize| p * self.stride_i + q * self.stride_j;
        let (kk, kl, lk, ll) = (
            off(gi.k, gj.k),
            off(gi.k, gj.l),
            off(gi.l, gj.k),
            off(gi.l, gj.l),
        );
        let mut sum = 0.0;
        for &x in &self.bases {
            let (a_kk, a_kl, a_lk, a_ll) = (amps[x + kk], amps[x + kl], amps[x + lk], amps[x + ll]);
            for &y in &self.bases {
                let g = a_kk * amps[y + ll] - a_kl * amps[y + lk] - a_lk * amps[y + kl]
                    + a_ll * amps[y + kk];
                sum += (g * sign).norm_sqr();
            }
        }
        sum
    }
}

fn require_multipartite(psi: &PureState) -> Result<()> {
    if psi.num_subsystems() < 2 {
        return Err(Error::Arity {
            expected: ">= 2".into(),
            found: psi.num_subsystems(),
        });
    }
    Ok(())
}

/// Single component `C^{ij}_{α_i α_j}`.
pub fn pairwise_component(
    psi: &PureState,
    i: usize,
    j: usize,
    alpha_i: usize,
    alpha_j: usize,
) -> Result<f64> {
    require_multipartite(psi)?;
    let layout = PairLayout::new(psi.dims(), i, j)?;
    let gi = SonGenerator::nth(psi.dims()[i], alpha_i)?;
    let gj = SonGenerator::nth(psi.dims()[j], alpha_j)?;
    Ok(layout.component_sq(psi.amps(), &gi, &gj).sqrt())
}

pub fn pairwise_subvector(psi: &PureState, i: usize, j: usize) -> Result<PairwiseSubvector> {
    require_multipartite(psi)?;
    let layout = PairLayout::new(psi.dims(), i, j)?;
    let gens_i = enumerate_generators(psi.dims()[i])?;
    let gens_j = enumerate_generators(psi.dims()[j])?;
    let mut components = Vec::with_capacity(gens_i.len() * gens_j.len());
    let mut norm_sq = 0.0;
    for gi in &gens_i {
        for gj in &gens_j {
            let sq = layout.component_sq(psi.amps(), gi, gj);
            norm_sq += sq;
            components.push(sq.sqrt());
        }
    }
    Ok(PairwiseSubvector {
        i,
        j,
        rows: gens_i.len(),
        cols: gens_j.len(),
        components,
        norm: norm_sq.sqrt(),
    })
}

/// `C^{ij} = |C^{ij}|`, the entanglement contribution of pair `(i, j)`.
pub fn pairwise_norm(psi: &PureState, i: usize, j: usize) -> Result<f64> {
    Ok(pairwise_subvector(psi, i, j)?.norm)
}

pub fn total_concurrence(psi: &PureState) -> Result<ConcurrenceReport> {
    require_multipartite(psi)?;
    let m = psi.num_subsystems();
    let mut pairwise = Vec::with_capacity(m * (m - 1) / 2);
    for i in 0..m {
        for j in i + 1..m {
            pairwise.push(PairNorm {
                i,
                j,
                norm: pairwise_norm(psi, i, j)?,
            });
        }
    }
    let total = pairwise.iter().map(|p| p.norm * p.norm).sum::<f64>().sqrt();
    Ok(ConcurrenceReport {
        dims: psi.dims().to_vec(),
        pairwise,
        total,
    })
}

pub fn separability_flag(psi: &PureState, tol: f64) -> Result<Separability> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let total = total_concurrence(psi)?.total;
    Ok(match (psi.num_subsystems(), total < tol) {
        (_, false) => Separability::Entangled,
        (2, true) => Separability::SeparableCertified,
        (_, true) => Separability::Inconclusive,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bipartite::{concurrence_norm, concurrence_vector};
    use crate::state::{
        anti_w, epr_times_single, ghz, gw_superposition, random_state, w, ww_superposition,
    };
    use crate::DEFAULT_SEPARABILITY_TOL;
    use std::f64::consts::{FRAC_1_SQRT_2, PI};

    fn basis(dims: Vec<usize>, idx: Vec<usize>) -> PureState {
        PureState::from_entries(dims, &[(idx, Complex64::new(1.0, 0.0))], false).unwrap()
    }

    #[test]
    fn ghz3_values() {
        let g = ghz(3).unwrap();
        assert!((pairwise_component(&g, 0, 1, 0, 0).unwrap() - FRAC_1_SQRT_2).abs() < 1e-15);
        let r = total_concurrence(&g).unwrap();
        for p in &r.pairwise {
            assert!((p.norm - FRAC_1_SQRT_2).abs() < 1e-15);
        }
        assert!((r.total - 1.5f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn w_family_values() {
        for s in [w(3).unwrap(), anti_w(3).unwrap()] {
            let r = total_concurrence(&s).unwrap();
            assert_eq!(r.pairwise.len(), 3);
            for p in &r.pairwise {
                assert!((p.norm - 2.0 / 3.0).abs() < 1e-15);
            }
            assert!((r.total - 2.0 / 3f64.sqrt()).abs() < 1e-15);
        }
    }

    #[test]
    fn epr_times_single_values() {
        let s = epr_times_single(Complex64::new(0.6, 0.0), Complex64::new(0.0, 0.8)).unwrap();
        let r = total_concurrence(&s).unwrap();
        assert!((r.pair(0, 1).unwrap() - 1.0).abs() < 1e-15);
        assert!(r.pair(0, 2).unwrap() < 1e-15);
        assert!(r.pair(1, 2).unwrap() < 1e-15);
        assert!((r.total - 1.0).abs() < 1e-15);
    }

    #[test]
    fn ghz4_total() {
        let r = total_concurrence(&ghz(4).unwrap()).unwrap();
        assert!((r.total - 3f64.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn superposition_values() {
        // (2/3)√(5/8) at s = 1/2
        let ww = ww_superposition(0.5, 0.3).unwrap();
        assert!((pairwise_norm(&ww, 0, 2).unwrap() - 0.527046276694730).abs() < 1e-12);
        for phi in [0.0, 1.0, PI] {
            let s: f64 = 0.4;
            let expect = (s * (5.0 * s - 4.0) + 8.0).sqrt() / (3.0 * 2f64.sqrt());
            let gw = gw_superposition(s, phi).unwrap();
            assert!((pairwise_norm(&gw, 1, 2).unwrap() - expect).abs() < 1e-12);
        }
    }

    #[test]
    fn product_is_zero() {
        let p = basis(vec![2, 2, 2], vec![0, 0, 0]);
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            assert_eq!(pairwise_norm(&p, i, j).unwrap(), 0.0);
        }
    }

    #[test]
    fn bipartite_agreement() {
        for dims in [[2, 2], [2, 3], [3, 4], [4, 3]] {
            let psi = random_state(&dims, 17).unwrap();
            let sub = pairwise_subvector(&psi, 0, 1).unwrap();
            let vec = concurrence_vector(&psi).unwrap();
            assert!((sub.norm - concurrence_norm(&psi).unwrap()).abs() < 1e-12);
            for (x, y) in sub.components.iter().zip(&vec.components) {
                assert!((x - y.norm()).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn subvector_shape_and_norm() {
        let psi = random_state(&[3, 2, 4], 2).unwrap();
        let sub = pairwise_subvector(&psi, 0, 2).unwrap();
        assert_eq!((sub.rows, sub.cols), (3, 6));
        let rss = sub.components.iter().map(|c| c * c).sum::<f64>().sqrt();
        assert!((rss - sub.norm).abs() < 1e-12);
        assert!(sub.components.iter().all(|&c| c >= 0.0));
        assert_eq!(
            sub.component(1, 4),
            pairwise_component(&psi, 0, 2, 1, 4).unwrap()
        );
    }

    #[test]
    fn separability_flags() {
        let tol = DEFAULT_SEPARABILITY_TOL;
        let p2 = basis(vec![2, 2], vec![0, 0]);
        assert_eq!(
            separability_flag(&p2, tol).unwrap(),
            Separability::SeparableCertified
        );
        assert_eq!(
            separability_flag(&ghz(3).unwrap(), tol).unwrap(),
            Separability::Entangled
        );
        assert_eq!(
            separability_flag(&ghz(2).unwrap(), tol).unwrap(),
            Separability::Entangled
        );
        let p3 = basis(vec![2, 3, 2], vec![1, 2, 0]);
        assert_eq!(
            separability_flag(&p3, tol).unwrap(),
            Separability::Inconclusive
        );
        assert!(separability_flag(&p3, 0.0).is_err());
    }

    #[test]
    fn invalid_arguments() {
        let g = ghz(3).unwrap();
        assert!(matches!(
            pairwise_norm(&g, 1, 1),
            Err(Error::InvalidPair { .. })
        ));
        assert!(matches!(
            pairwise_norm(&g, 2, 1),
            Err(Error::InvalidPair { .. })
        ));
        assert!(matches!(
            pairwise_norm(&g, 0, 3),
            Err(Error::InvalidPair { .. })
        ));
        assert!(pairwise_component(&g, 0, 1, 1, 0).is_err());
        let single = random_state(&[4], 0).unwrap();
        assert!(total_concurrence(&single).is_err());
    }
}
