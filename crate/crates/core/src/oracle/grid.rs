use nalgebra::{Matrix3, Vector3};
use num_complex::Complex64;

use crate::exec::{map_range, map_slice, Execution};
use crate::search::golden_max;
use crate::witness::b_value;

pub const DEFAULT_GRID: usize = 128;

const REFINE_CANDIDATES: usize = 32;
const GOLDEN_SWEEPS: usize = 4;
const NEWTON_STEPS: usize = 40;

/// `F(z) = Re(z₁e^{i(α+β+γ)} + z₂e^{iα} + z₃e^{iβ} + z₄e^{iγ})`.
fn f_angles(z: &[Complex64; 4], ang: &[f64; 3]) -> f64 {
    let [a, b, g] = *ang;
    let e = |t: f64| Complex64::from_polar(1.0, t);
    (z[0] * e(a + b + g) + z[1] * e(a) + z[2] * e(b) + z[3] * e(g)).re
}

fn grad_hess(z: &[Complex64; 4], ang: &[f64; 3]) -> (Vector3<f64>, Matrix3<f64>) {
    let [a, b, g] = *ang;
    let e = |t: f64| Complex64::from_polar(1.0, t);
    let w = [z[0] * e(a + b + g), z[1] * e(a), z[2] * e(b), z[3] * e(g)];
    let grad = Vector3::new(-w[0].im - w[1].im, -w[0].im - w[2].im, -w[0].im - w[3].im);
    let r = -w[0].re;
    let hess = Matrix3::new(r - w[1].re, r, r, r, r - w[2].re, r, r, r, r - w[3].re);
    (grad, hess)
}

/// Local ascent of `sign·F` from a grid point: coordinatewise golden
/// sections on shrinking brackets, then a guarded Newton polish.
fn refine(z: &[Complex64; 4], sign: f64, start: [f64; 3], h: f64) -> f64 {
    let g = |ang: &[f64; 3]| sign * f_angles(z, ang);
    let mut x = start;
    let mut best = g(&x);
    let mut width = h;
    for _ in 0..GOLDEN_SWEEPS {
        for d in 0..3 {
            let (t, v) = golden_max(
                |t| {
                    let mut y = x;
                    y[d] = t;
                    g(&y)
                },
                x[d] - width,
                x[d] + width,
                1e-10,
            );
            if v > best {
                best = v;
                x[d] = t;
            }
        }
        width *= 0.25;
    }
    for _ in 0..NEWTON_STEPS {
        let (grad, hess) = grad_hess(z, &x);
        let (grad, hess) = (grad * sign, hess * sign);
        let mut directions: Vec<Vector3<f64>> = Vec::new();
        match hess.try_inverse() {
            Some(inv) if (-hess).cholesky().is_some() => directions.push(-(inv * grad)),
            _ => {
                // Saddle or flat spot: follow positive curvature both ways, then the gradient.
                let eig = hess.symmetric_eigen();
                let k = eig.eigenvalues.imax();
                if eig.eigenvalues[k] > 0.0 {
                    let v: Vector3<f64> = eig.eigenvectors.column(k).into();
                    directions.push(v * h);
                    directions.push(-v * h);
                }
                if grad.norm() > 0.0 {
                    directions.push(grad * (h / grad.norm()));
                }
            }
        }
        let mut moved = false;
        'dirs: for step in &directions {
            let mut scale = 1.0;
            for _ in 0..30 {
                let y = [x[0] + scale * step[0], x[1] + scale * step[1], x[2] + scale * step[2]];
                let v = g(&y);
                if v > best {
                    let tiny = step.norm() * scale < 1e-15;
                    best = v;
                    x = y;
                    moved = !tiny;
                    break 'dirs;
                }
                scale *= 0.5;
            }
        }
        if !moved {
            break;
        }
    }
    best
}

/// `sup |F(z)|` over `(α, β, γ)`: exhaustive `grid³` lattice on `[0, 2π)³`
/// followed by local refinement of the best grid-local maxima. Always a lower
/// bound on the true supremum.
pub fn c_grid_oracle_complex(z: &[Complex64; 4], grid: usize, exec: Execution) -> f64 {
    let n = grid.max(4);
    let h = std::f64::consts::TAU / n as f64;
    let table = |zi: Complex64, len: usize| -> Vec<f64> {
        (0..len)
            .map(|k| (zi * Complex64::from_polar(1.0, (k % n) as f64 * h)).re)
            .collect()
    };
    // The z₁ term depends on (i + j + k) mod n; doubling its table removes the modulus.
    let t1 = table(z[0], 2 * n);
    let (t2, t3, t4) = (table(z[1], n), table(z[2], n), table(z[3], n));

    // Per (i, j): the best k and the signed value of F there.
    let rows: Vec<Vec<(f64, usize)>> = map_range(exec, n, |i| {
        (0..n)
            .map(|j| {
                let base = (i + j) % n;
                let off = t2[i] + t3[j];
                let seg = &t1[base..base + n];
                let mut best = (0.0f64, 0usize);
                for k in 0..n {
                    let v = seg[k] + t4[k] + off;
                    if v.abs() > best.0.abs() {
                        best = (v, k);
                    }
                }
                best
            })
            .collect()
    });

    let at = |i: usize, j: usize| rows[i % n][j % n].0.abs();
    let mut peaks: Vec<(f64, usize, usize)> = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let v = at(i, j);
            let is_peak = (0..3).all(|di| (0..3).all(|dj| at(i + n + di - 1, j + n + dj - 1) <= v));
            if is_peak {
                peaks.push((v, i, j));
            }
        }
    }
    peaks.sort_by(|p, q| q.0.total_cmp(&p.0));
    peaks.truncate(REFINE_CANDIDATES);
    let grid_best = peaks.first().map_or(0.0, |p| p.0);

    let refined = map_slice(exec, &peaks, |&(_, i, j)| {
        let (v, k) = rows[i][j];
        let sign = if v < 0.0 { -1.0 } else { 1.0 };
        refine(z, sign, [i as f64 * h, j as f64 * h, k as f64 * h], h)
    });
    refined.into_iter().fold(grid_best, f64::max)
}

/// Real-`z` form of [`c_grid_oracle_complex`].
pub fn c_grid_oracle(z: &[f64; 4], grid: usize, exec: Execution) -> f64 {
    c_grid_oracle_complex(&z.map(|v| Complex64::new(v, 0.0)), grid, exec)
}

/// `(sup |F(z)|, B(z₁, z₂, z₃, z̄₄))`, which should agree.
pub fn c_equals_b_probe(z: &[Complex64; 4], exec: Execution) -> (f64, f64) {
    let oracle = c_grid_oracle_complex(z, DEFAULT_GRID, exec);
    (oracle, b_value(&[z[0], z[1], z[2], z[3].conj()]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::witness::c_value;

    #[test]
    fn examples() {
        let ex = Execution::default();
        assert!((c_grid_oracle(&[1.0; 4], 128, ex) - 4.0).abs() < 1e-12);
        assert!((c_grid_oracle(&[-1.0, 2.0, 2.0, 2.0], 128, ex) - 27f64.sqrt()).abs() < 1e-6);
        assert!((c_grid_oracle(&[-1.0, 3.0, 3.0, 3.0], 128, ex) - 8.0).abs() < 1e-6);
        let (o, b) = c_equals_b_probe(&[Complex64::new(1.0, 0.0); 4], ex);
        assert!((o - 4.0).abs() < 1e-12 && (b - 4.0).abs() < 1e-12);
        let z = [-1.0, 2.0, 2.0, 2.0].map(|v| Complex64::new(v, 0.0));
        let (o, b) = c_equals_b_probe(&z, ex);
        assert!((o - b).abs() < 1e-8);
    }

    #[test]
    fn paths_agree_and_bound_closed_form() {
        let z = [0.3, -1.2, 0.7, 0.9];
        let s = c_grid_oracle(&z, 64, Execution::Sequential);
        let p = c_grid_oracle(&z, 64, Execution::Parallel);
        assert_eq!(s, p);
        assert!(s <= c_value(&z).unwrap() + 1e-9);
        assert!((s - c_value(&z).unwrap()).abs() < 1e-6);
    }
}
