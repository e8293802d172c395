//! Dense 8×8 complex matrices and a cyclic Jacobi eigensolver.
//!
//! Only the oracles and round-trip tests use dense matrices; the deciders work
//! on the compact X-state representation.

use num_complex::Complex64;

pub type Dense8 = [[Complex64; 8]; 8];

pub const ZERO8: Dense8 = [[Complex64::new(0.0, 0.0); 8]; 8];

/// Which tensor factor of `M_2 ⊗ M_2 ⊗ M_2` an operation acts on.
/// Basis index `k = 4i + 2j + l` for `|i⟩⊗|j⟩⊗|l⟩`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum Subsystem {
    A,
    B,
    C,
}

impl Subsystem {
    pub const ALL: [Subsystem; 3] = [Subsystem::A, Subsystem::B, Subsystem::C];

    pub fn bit(self) -> usize {
        match self {
            Subsystem::A => 4,
            Subsystem::B => 2,
            Subsystem::C => 1,
        }
    }
}

impl std::fmt::Display for Subsystem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Subsystem::A => "A",
            Subsystem::B => "B",
            Subsystem::C => "C",
        };
        f.write_str(s)
    }
}

/// Transpose on one tensor factor: swaps that factor's bit between row and column.
pub fn partial_transpose_dense(m: &Dense8, sys: Subsystem) -> Dense8 {
    let bit = sys.bit();
    let mut out = ZERO8;
    for (r, row) in out.iter_mut().enumerate() {
        for (c, entry) in row.iter_mut().enumerate() {
            let r2 = (r & !bit) | (c & bit);
            let c2 = (c & !bit) | (r & bit);
            *entry = m[r2][c2];
        }
    }
    out
}

pub fn transpose(m: &Dense8) -> Dense8 {
    let mut out = ZERO8;
    for r in 0..8 {
        for c in 0..8 {
            out[r][c] = m[c][r];
        }
    }
    out
}

pub fn matmul(x: &Dense8, y: &Dense8) -> Dense8 {
    let mut out = ZERO8;
    for r in 0..8 {
        for k in 0..8 {
            let xr = x[r][k];
            if xr == Complex64::new(0.0, 0.0) {
                continue;
            }
            for c in 0..8 {
                out[r][c] += xr * y[k][c];
            }
        }
    }
    out
}

pub fn trace(m: &Dense8) -> Complex64 {
    (0..8).map(|i| m[i][i]).sum()
}

/// Kronecker product of three 2×2 matrices in `A ⊗ B ⊗ C` order.
pub fn kron3(a: &[[Complex64; 2]; 2], b: &[[Complex64; 2]; 2], c: &[[Complex64; 2]; 2]) -> Dense8 {
    let mut out = ZERO8;
    for r in 0..8 {
        for col in 0..8 {
            let (ri, rj, rk) = (r >> 2 & 1, r >> 1 & 1, r & 1);
            let (ci, cj, ck) = (col >> 2 & 1, col >> 1 & 1, col & 1);
            out[r][col] = a[ri][ci] * b[rj][cj] * c[rk][ck];
        }
    }
    out
}

/// `x ⊗ y ⊗ z` as an 8-vector.
pub fn kron_vec3(x: &[Complex64; 2], y: &[Complex64; 2], z: &[Complex64; 2]) -> [Complex64; 8] {
    let mut out = [Complex64::new(0.0, 0.0); 8];
    for (k, slot) in out.iter_mut().enumerate() {
        *slot = x[k >> 2 & 1] * y[k >> 1 & 1] * z[k & 1];
    }
    out
}

/// `|v⟩⟨v|`.
pub fn outer(v: &[Complex64; 8]) -> Dense8 {
    let mut out = ZERO8;
    for r in 0..8 {
        for c in 0..8 {
            out[r][c] = v[r] * v[c].conj();
        }
    }
    out
}

pub fn frobenius_distance(x: &Dense8, y: &Dense8) -> f64 {
    let mut acc = 0.0;
    for r in 0..8 {
        for c in 0..8 {
            acc += (x[r][c] - y[r][c]).norm_sqr();
        }
    }
    acc.sqrt()
}

/// Eigenvalues of a real symmetric `n×n` matrix (row-major), ascending.
///
/// Cyclic Jacobi sweeps until the off-diagonal Frobenius norm drops below
/// `1e-13` times the matrix norm (or 100 sweeps).
pub fn symmetric_eigenvalues(mut a: Vec<f64>, n: usize) -> Vec<f64> {
    assert_eq!(a.len(), n * n);
    let norm = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    let threshold = 1e-13 * norm.max(f64::MIN_POSITIVE);

    for _sweep in 0..100 {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i * n + j] * a[i * n + j])
            .sum::<f64>()
            .sqrt();
        if off <= threshold {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
            }
        }
    }
    let mut eig: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    eig.sort_by(|x, y| x.total_cmp(y));
    eig
}

/// Eigenvalues of a Hermitian 8×8 matrix, ascending.
///
/// Uses the real symmetric embedding `[[Re, -Im], [Im, Re]]`, whose spectrum
/// is the Hermitian spectrum with every eigenvalue doubled.
pub fn hermitian_eigenvalues(m: &Dense8) -> [f64; 8] {
    let n = 16;
    let mut emb = vec![0.0; n * n];
    for r in 0..8 {
        for c in 0..8 {
            let z = m[r][c];
            emb[r * n + c] = z.re;
            emb[(r + 8) * n + (c + 8)] = z.re;
            emb[r * n + (c + 8)] = -z.im;
            emb[(r + 8) * n + c] = z.im;
        }
    }
    let eig = symmetric_eigenvalues(emb, n);
    let mut out = [0.0; 8];
    for (i, slot) in out.iter_mut().enumerate() {
        *slot = 0.5 * (eig[2 * i] + eig[2 * i + 1]);
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
    fn jacobi_small_known_spectrum() {
        let eig = symmetric_eigenvalues(vec![2.0, 1.0, 1.0, 2.0], 2);
        assert!((eig[0] - 1.0).abs() < 1e-14 && (eig[1] - 3.0).abs() < 1e-14);
    }

    #[test]
    fn hermitian_spectrum_of_rank_one_projector() {
        let v = [
            c(0.5, 0.0),
            c(0.0, 0.5),
            c(0.5, 0.0),
            c(0.0, -0.5),
            c(0.0, 0.0),
            c(0.0, 0.0),
            c(0.0, 0.0),
            c(0.0, 0.0),
        ];
        let eig = hermitian_eigenvalues(&outer(&v));
        assert!((eig[7] - 1.0).abs() < 1e-13);
        for e in &eig[..7] {
            assert!(e.abs() < 1e-13);
        }
    }

    #[test]
    fn partial_transpose_of_product_transposes_one_factor() {
        let x = [[c(1.0, 0.0), c(0.3, 0.2)], [c(0.3, -0.2), c(0.5, 0.0)]];
        let y = [[c(0.7, 0.0), c(0.0, 0.4)], [c(0.0, -0.4), c(0.2, 0.0)]];
        let z = [[c(0.1, 0.0), c(0.6, 0.6)], [c(0.6, -0.6), c(0.9, 0.0)]];
        let t = |m: &[[Complex64; 2]; 2]| [[m[0][0], m[1][0]], [m[0][1], m[1][1]]];
        let m = kron3(&x, &y, &z);
        assert_eq!(partial_transpose_dense(&m, Subsystem::A), kron3(&t(&x), &y, &z));
        assert_eq!(partial_transpose_dense(&m, Subsystem::B), kron3(&x, &t(&y), &z));
        assert_eq!(partial_transpose_dense(&m, Subsystem::C), kron3(&x, &y, &t(&z)));
    }
}
