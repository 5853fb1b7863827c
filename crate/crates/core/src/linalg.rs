//! Eigenvalues of small Hermitian matrices by cyclic Jacobi rotations.

use crate::Complex64;

/// Sweeps stop once the off-diagonal Frobenius norm falls below this.
pub const JACOBI_OFF_DIAGONAL_TOL: f64 = 1e-12;
pub const JACOBI_MAX_SWEEPS: usize = 100;

fn off_diagonal_norm(a: &[Complex64], n: usize) -> f64 {
    let mut sum = 0.0;
    for p in 0..n {
        for q in 0..n {
            if p != q {
                sum += a[p * n + q].norm_sqr();
            }
        }
    }
    sum.sqrt()
}

/// Eigenvalues of the Hermitian `n×n` matrix `a` (row-major), sorted in
/// descending order. Only the Hermitian part of `a` is meaningful.
pub fn hermitian_eigenvalues(a: &[Complex64], n: usize) -> Vec<f64> {
    assert_eq!(a.len(), n * n, "matrix must be {n}x{n}");
    let mut a = a.to_vec();
    for _ in 0..JACOBI_MAX_SWEEPS {
        if off_diagonal_norm(&a, n) < JACOBI_OFF_DIAGONAL_TOL {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, n, p, q);
            }
        }
    }
    let mut eig: Vec<f64> = (0..n).map(|i| a[i * n + i].re).collect();
    eig.sort_by(|x, y| y.total_cmp(x));
    eig
}

/// One unitary rotation A ← U† A U zeroing the (p, q) entry. With
/// a_pq = |a_pq| e^{iθ}, U equals the identity except
/// U_pp = U_qq = c, U_pq = s e^{iθ}, U_qp = −s e^{−iθ}.
fn rotate(a: &mut [Complex64], n: usize, p: usize, q: usize) {
    let apq = a[p * n + q];
    let mag = apq.norm();
    if mag == 0.0 {
        return;
    }
    let phase = apq / mag;
    let app = a[p * n + p].re;
    let aqq = a[q * n + q].re;
    let tau = (aqq - app) / (2.0 * mag);
    let t = if tau >= 0.0 {
        1.0 / (tau + (1.0 + tau * tau).sqrt())
    } else {
        -1.0 / (-tau + (1.0 + tau * tau).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;
    let s_fwd = phase * s;
    let s_back = phase.conj() * s;

    // A ← A U (columns p, q)
    for r in 0..n {
        let x = a[r * n + p];
        let y = a[r * n + q];
        a[r * n + p] = x * c - y * s_back;
        a[r * n + q] = x * s_fwd + y * c;
    }
    // A ← U† A (rows p, q)
    for col in 0..n {
        let x = a[p * n + col];
        let y = a[q * n + col];
        a[p * n + col] = x * c - y * s_fwd;
        a[q * n + col] = x * s_back + y * c;
    }
    a[p * n + q] = Complex64::new(0.0, 0.0);
    a[q * n + p] = Complex64::new(0.0, 0.0);
    a[p * n + p].im = 0.0;
    a[q * n + q].im = 0.0;
}
