use rand::Rng;

use crate::decider::{critical_point, f_eval};
use crate::exec::{map_slice, Execution};
use crate::search::NelderMead;

use super::stream_rng;

pub const DEFAULT_STARTS: usize = 64;

fn f_or_floor(c: &[f64; 4], z: &[f64]) -> f64 {
    f_eval(c, &[z[0], z[1], z[2], z[3]]).unwrap_or(f64::NEG_INFINITY)
}

/// Multi-start Nelder–Mead maximization of `f(z) = (c·z)/C(z)`.
///
/// Starts: the eight signed coordinate vectors, the interior critical point
/// when it exists, and `starts` random points spread round-robin over the 16
/// orthants. Returns the best value found.
pub fn f_max_oracle(c: &[f64; 4], starts: usize, seed: u64, exec: Execution) -> f64 {
    let mut points: Vec<[f64; 4]> = Vec::with_capacity(starts + 9);
    for i in 0..4 {
        for s in [1.0, -1.0] {
            let mut z = [0.0; 4];
            z[i] = s;
            points.push(z);
        }
    }
    if let Ok(s) = critical_point(c) {
        points.push(s);
    }
    let mut rng = stream_rng(seed, 0);
    for k in 0..starts {
        let mut z = [0.0; 4];
        for (i, zi) in z.iter_mut().enumerate() {
            let mag: f64 = rng.random_range(0.01..1.0);
            *zi = if (k >> i) & 1 == 1 { -mag } else { mag };
        }
        let n: f64 = z.iter().map(|v| v.abs()).sum();
        points.push(z.map(|v| v / n));
    }

    best_from(c, &points, exec)
}

fn best_from(c: &[f64; 4], points: &[[f64; 4]], exec: Execution) -> f64 {
    let nm = NelderMead {
        initial_step: 0.1,
        max_evals: 3000,
        f_tol: 1e-15,
    };
    map_slice(exec, points, |z0| {
        let (_, v) = nm.minimize(|z| -f_or_floor(c, z), z0);
        (-v).max(f_or_floor(c, z0))
    })
    .into_iter()
    .fold(f64::NEG_INFINITY, f64::max)
}
