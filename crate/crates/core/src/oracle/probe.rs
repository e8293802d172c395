use num_complex::Complex64;

use crate::exec::{min_range, Execution};
use crate::states::XState;

use super::{haar_qubit, stream_rng, Qubit};

const CHUNK: usize = 1024;

/// `⟨ξ ξ†, W⟩` for `ξ = x ⊗ y ⊗ z`, touching only the X-shaped entries.
pub fn product_pairing(w: &XState, x: &Qubit, y: &Qubit, z: &Qubit) -> f64 {
    let mut xi = [Complex64::new(0.0, 0.0); 8];
    for (idx, v) in xi.iter_mut().enumerate() {
        *v = x[idx >> 2] * y[(idx >> 1) & 1] * z[idx & 1];
    }
    let diag = [w.a[0], w.a[1], w.a[2], w.a[3], w.b[3], w.b[2], w.b[1], w.b[0]];
    let mut total: f64 = (0..8).map(|i| xi[i].norm_sqr() * diag[i]).sum();
    for i in 0..4 {
        // Bilinear pairing: entry (i, 7−i) of W is cᵢ, mirrored entry c̄ᵢ.
        total += 2.0 * (xi[i] * xi[7 - i].conj() * w.c[i]).re;
    }
    total
}

fn sign_flip(v: &Qubit, minus: bool) -> Qubit {
    if minus {
        [v[0], -v[1]]
    } else {
        *v
    }
}

/// Minimum of `⟨ξ ξ†, W⟩` over `samples` Haar-random product vectors
/// `x ⊗ y ⊗ z`, each also tried in all eight sign variants `x± ⊗ y± ⊗ z±`
/// (where `v± = (v₀, ±v₁)`).
pub fn product_probe(w: &XState, samples: usize, seed: u64, exec: Execution) -> f64 {
    let chunks = samples.div_ceil(CHUNK);
    min_range(exec, chunks, |ch| {
        let mut rng = stream_rng(seed, ch as u64);
        let count = CHUNK.min(samples - ch * CHUNK);
        let mut best = f64::INFINITY;
        for _ in 0..count {
            let (x, y, z) = (haar_qubit(&mut rng), haar_qubit(&mut rng), haar_qubit(&mut rng));
            for bits in 0..8 {
                let v = product_pairing(
                    w,
                    &sign_flip(&x, bits & 4 != 0),
                    &sign_flip(&y, bits & 2 != 0),
                    &sign_flip(&z, bits & 1 != 0),
                );
                best = best.min(v);
            }
        }
        best
    })
}
