//! Best-effort explicit separable decomposition of GHZ-diagonal states.
//!
//! The GHZ stabilizer group `{III, ZZI, ZIZ, IZZ, XXX, YYX, YXY, XYY}` acts by
//! local Paulis, and averaging a product projector over it gives its
//! GHZ-diagonal part. So a GHZ-diagonal state is separable iff it lies in the
//! convex hull of twirled product projectors `G(ξ)`, which live in the
//! 8-dimensional space of `(a, c)`. The search is a fully corrective
//! conditional-gradient loop in that space; each accepted `G(ξ)` expands back
//! into eight weighted product vectors for the certificate.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::exec::{map_range, Execution};
use crate::linalg::{frobenius_distance, kron_vec3, outer, Dense8, ZERO8};
use crate::search::nnls;
use crate::states::{GhzDiagonalState, XState};
use crate::{Error, Result};

use super::{haar_qubit, stream_rng, Qubit};

pub const DEFAULT_ATOM_BUDGET: usize = 5000;

const RANDOM_STARTS: usize = 6;
const ALTERNATING_SWEEPS: usize = 60;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProductAtom {
    pub weight: f64,
    pub x: Qubit,
    pub y: Qubit,
    pub z: Qubit,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DecompositionCertificate {
    pub atoms: Vec<ProductAtom>,
    /// Frobenius distance between the state and `Σ wₖ |xyz⟩⟨xyz|`, recomputed densely.
    pub residual: f64,
    /// Conditional-gradient iterations used.
    pub iterations: usize,
}

impl DecompositionCertificate {
    pub fn synthesize(&self) -> Dense8 {
        let mut m = ZERO8;
        for atom in &self.atoms {
            let p = outer(&kron_vec3(&atom.x, &atom.y, &atom.z));
            for i in 0..8 {
                for j in 0..8 {
                    m[i][j] += p[i][j] * atom.weight;
                }
            }
        }
        m
    }
}

/// Outcome of [`decompose`]. Failure to find a decomposition is never
/// evidence of entanglement.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum Decomposition {
    Success(DecompositionCertificate),
    Inconclusive { residual: f64, iterations: usize },
}

type Product = [Qubit; 3];

fn pauli(v: &Qubit, p: u8) -> Qubit {
    let i = Complex64::new(0.0, 1.0);
    match p {
        b'X' => [v[1], v[0]],
        b'Y' => [-i * v[1], i * v[0]],
        b'Z' => [v[0], -v[1]],
        _ => *v,
    }
}

const STABILIZERS: [&[u8; 3]; 8] = [b"III", b"ZZI", b"ZIZ", b"IZZ", b"XXX", b"YYX", b"YXY", b"XYY"];

fn stabilizer_orbit(xi: &Product) -> [Product; 8] {
    STABILIZERS.map(|g| [pauli(&xi[0], g[0]), pauli(&xi[1], g[1]), pauli(&xi[2], g[2])])
}

fn amplitudes(xi: &Product) -> [Complex64; 8] {
    kron_vec3(&xi[0], &xi[1], &xi[2])
}

/// `√2·(a, c)` of the twirled projector, so the Euclidean product equals the
/// Frobenius product of the matrices.
fn twirl_coords(xi: &Product) -> [f64; 8] {
    let v = amplitudes(xi);
    let mut out = [0.0; 8];
    for i in 0..4 {
        out[i] = (v[i].norm_sqr() + v[7 - i].norm_sqr()) / 2.0 * std::f64::consts::SQRT_2;
        out[4 + i] = (v[i] * v[7 - i].conj()).re * std::f64::consts::SQRT_2;
    }
    out
}

fn state_coords(s: &GhzDiagonalState) -> [f64; 8] {
    let r2 = std::f64::consts::SQRT_2;
    let mut out = [0.0; 8];
    for i in 0..4 {
        out[i] = s.a[i] * r2;
        out[4 + i] = s.c[i] * r2;
    }
    out
}

fn residual_matrix(r: &[f64; 8]) -> Dense8 {
    let r2 = std::f64::consts::SQRT_2;
    let a = [r[0], r[1], r[2], r[3]].map(|v| v / r2);
    let c = [r[4], r[5], r[6], r[7]].map(|v| Complex64::new(v / r2, 0.0));
    XState::new(a, a, c).to_dense()
}

fn expectation(m: &Dense8, v: &[Complex64; 8]) -> f64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for i in 0..8 {
        for j in 0..8 {
            acc += v[i].conj() * m[i][j] * v[j];
        }
    }
    acc.re
}

fn top_eigenvector(h: [[Complex64; 2]; 2]) -> Qubit {
    let (p, s, r) = (h[0][0].re, h[1][1].re, h[0][1]);
    let lambda = (p + s) / 2.0 + (((p - s) / 2.0).powi(2) + r.norm_sqr()).sqrt();
    let one = Complex64::new(1.0, 0.0);
    let zero = Complex64::new(0.0, 0.0);
    let v = if r.norm() > 1e-300 {
        [r, Complex64::new(lambda - p, 0.0)]
    } else if p >= s {
        [one, zero]
    } else {
        [zero, one]
    };
    let n = (v[0].norm_sqr() + v[1].norm_sqr()).sqrt();
    [v[0] / n, v[1] / n]
}

/// Alternating single-qubit updates for `max ⟨ξ|M|ξ⟩` over product `ξ`.
fn ascend(m: &Dense8, mut xi: Product) -> (f64, Product) {
    let mut value = expectation(m, &amplitudes(&xi));
    for _ in 0..ALTERNATING_SWEEPS {
        for q in 0..3 {
            let shift = 2 - q;
            let mut h = [[Complex64::new(0.0, 0.0); 2]; 2];
            for i in 0..8 {
                for j in 0..8 {
                    let (si, sj) = ((i >> shift) & 1, (j >> shift) & 1);
                    let mut wi = Complex64::new(1.0, 0.0);
                    let mut wj = Complex64::new(1.0, 0.0);
                    for o in (0..3).filter(|&o| o != q) {
                        let so = 2 - o;
                        wi *= xi[o][(i >> so) & 1].conj();
                        wj *= xi[o][(j >> so) & 1];
                    }
                    h[si][sj] += wi * m[i][j] * wj;
                }
            }
            xi[q] = top_eigenvector(h);
        }
        let next = expectation(m, &amplitudes(&xi));
        let done = next - value <= 1e-15 * next.abs().max(1e-300);
        value = value.max(next);
        if done {
            break;
        }
    }
    (value, xi)
}

fn best_product(m: &Dense8, seed: u64, iteration: usize, exec: Execution) -> (f64, Product) {
    let one = Complex64::new(1.0, 0.0);
    let zero = Complex64::new(0.0, 0.0);
    let h = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
    let basis = |b: usize| if b == 0 { [one, zero] } else { [zero, one] };
    let mut starts: Vec<Product> = (0..8)
        .map(|k| [basis(k >> 2), basis((k >> 1) & 1), basis(k & 1)])
        .collect();
    starts.push([[h, h]; 3]);
    let mut rng = stream_rng(seed, iteration as u64);
    for _ in 0..RANDOM_STARTS {
        starts.push([haar_qubit(&mut rng), haar_qubit(&mut rng), haar_qubit(&mut rng)]);
    }
    map_range(exec, starts.len(), |k| ascend(m, starts[k]))
        .into_iter()
        .fold((f64::NEG_INFINITY, starts[0]), |best, cand| {
            if cand.0 > best.0 {
                cand
            } else {
                best
            }
        })
}

fn same_ray(p: &Product, q: &Product) -> bool {
    let fid = (0..3)
        .map(|k| (p[k][0].conj() * q[k][0] + p[k][1].conj() * q[k][1]).norm_sqr())
        .product::<f64>();
    fid > 1.0 - 1e-12
}

fn expand(products: &[Product], weights: &[f64], scale: f64) -> Vec<ProductAtom> {
    let mut atoms: Vec<ProductAtom> = Vec::new();
    for (xi, &w) in products.iter().zip(weights) {
        for image in stabilizer_orbit(xi) {
            let weight = scale * w / 8.0;
            match atoms.iter_mut().find(|a| same_ray(&[a.x, a.y, a.z], &image)) {
                Some(a) => a.weight += weight,
                None => atoms.push(ProductAtom {
                    weight,
                    x: image[0],
                    y: image[1],
                    z: image[2],
                }),
            }
        }
    }
    atoms
}

/// Searches for `s = Σ wₖ |xₖyₖzₖ⟩⟨xₖyₖzₖ|` with at most `atoms`
/// conditional-gradient iterations. Success iff the recomputed residual is at
/// most `tol`.
pub fn decompose(s: &GhzDiagonalState, atoms: usize, tol: f64, seed: u64, exec: Execution) -> Result<Decomposition> {
    if !s.is_positive() {
        return Err(Error::NonPositiveState);
    }
    let trace = s.trace();
    if trace.is_nan() || trace <= 0.0 {
        return Err(Error::NonPositiveState);
    }
    let target = state_coords(&s.scaled(1.0 / trace));
    let target_vec = DVector::from_row_slice(&target);

    let one = Complex64::new(1.0, 0.0);
    let zero = Complex64::new(0.0, 0.0);
    let basis = |b: usize| if b == 0 { [one, zero] } else { [zero, one] };
    let mut products: Vec<Product> = (0..4).map(|k| [basis(0), basis(k >> 1), basis(k & 1)]).collect();
    let mut columns: Vec<[f64; 8]> = products.iter().map(twirl_coords).collect();

    let mut weights: Vec<f64>;
    let mut iterations = 0;
    let internal_tol = 0.25 * tol / trace;
    loop {
        let a = DMatrix::from_fn(8, columns.len(), |i, j| columns[j][i]);
        let w = nnls(&a, &target_vec);
        let r = &target_vec - &a * &w;

        let keep: Vec<usize> = (0..columns.len()).filter(|&j| w[j] > 0.0).collect();
        products = keep.iter().map(|&j| products[j]).collect();
        columns = keep.iter().map(|&j| columns[j]).collect();
        weights = keep.iter().map(|&j| w[j]).collect();

        if r.norm() <= internal_tol || iterations >= atoms {
            break;
        }
        let r_arr: [f64; 8] = std::array::from_fn(|i| r[i]);
        let (gain, xi) = best_product(&residual_matrix(&r_arr), seed, iterations, exec);
        let current: f64 = (0..8).map(|i| r_arr[i] * (&a * &w)[i]).sum();
        if gain - current <= 1e-16 {
            break;
        }
        products.push(xi);
        columns.push(twirl_coords(&xi));
        iterations += 1;
    }

    let cert_atoms = expand(&products, &weights, trace);
    let mut cert = DecompositionCertificate {
        atoms: cert_atoms,
        residual: 0.0,
        iterations,
    };
    cert.residual = frobenius_distance(&cert.synthesize(), &s.to_xstate().to_dense());
    if cert.residual <= tol {
        Ok(Decomposition::Success(cert))
    } else {
        Ok(Decomposition::Inconclusive {
            residual: cert.residual,
            iterations,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decider::rho_pq;

    #[test]
    fn twirl_matches_x_part() {
        let mut rng = stream_rng(11, 0);
        for _ in 0..20 {
            let xi = [haar_qubit(&mut rng), haar_qubit(&mut rng), haar_qubit(&mut rng)];
            let mut m = ZERO8;
            for image in stabilizer_orbit(&xi) {
                let p = outer(&amplitudes(&image));
                for i in 0..8 {
                    for j in 0..8 {
                        m[i][j] += p[i][j] / 8.0;
                    }
                }
            }
            let c = twirl_coords(&xi).map(|v| v / std::f64::consts::SQRT_2);
            let expect = XState::new(
                [c[0], c[1], c[2], c[3]],
                [c[0], c[1], c[2], c[3]],
                [c[4], c[5], c[6], c[7]].map(|v| Complex64::new(v, 0.0)),
            );
            assert!(frobenius_distance(&m, &expect.to_dense()) < 1e-14);
        }
    }

    #[test]
    fn examples() {
        let ex = Execution::default();
        match decompose(&GhzDiagonalState::maximally_mixed(), 5000, 1e-10, 1, ex).unwrap() {
            Decomposition::Success(cert) => {
                assert!(cert.atoms.len() <= 8);
                assert!(cert.residual <= 1e-10);
            }
            other => panic!("{other:?}"),
        }
        match decompose(&rho_pq(0.5, 0.5), 5000, 1e-8, 1, ex).unwrap() {
            Decomposition::Success(cert) => {
                assert!(cert.atoms.iter().all(|a| a.weight >= 0.0));
                assert!(cert.residual <= 1e-8);
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            decompose(&GhzDiagonalState::ghz(), 200, 1e-3, 1, ex).unwrap(),
            Decomposition::Inconclusive { .. }
        ));
        assert_eq!(
            decompose(
                &GhzDiagonalState::new([1.0, 0.0, 0.0, 0.0], [2.0, 0.0, 0.0, 0.0]),
                10,
                1e-8,
                1,
                ex
            ),
            Err(Error::NonPositiveState)
        );
    }
}
