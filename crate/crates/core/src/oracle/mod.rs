//! Brute-force validators for the closed forms.
//!
//! None of these are used by the decider; they exist to cross-check it. All
//! stochastic oracles take an explicit seed and give identical results on the
//! sequential and parallel paths.

mod decompose;
mod fmax;
mod grid;
mod ppt;
mod probe;

pub use decompose::{decompose, Decomposition, DecompositionCertificate, ProductAtom, DEFAULT_ATOM_BUDGET};
pub use fmax::{f_max_oracle, DEFAULT_STARTS};
pub use grid::{c_equals_b_probe, c_grid_oracle, c_grid_oracle_complex, DEFAULT_GRID};
pub use ppt::{eigen_positive, eigen_ppt_oracle, min_eigenvalue, EIGEN_CUTOFF};
pub use probe::{product_pairing, product_probe};

use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

pub type Qubit = [Complex64; 2];

/// Haar-random pure qubit state.
pub fn haar_qubit<R: Rng + ?Sized>(rng: &mut R) -> Qubit {
    loop {
        let v = [0; 2].map(|_| Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal)));
        let n = (v[0].norm_sqr() + v[1].norm_sqr()).sqrt();
        if n > 1e-12 {
            return v.map(|x| x / n);
        }
    }
}

/// Independent RNG stream `stream` of a seeded family, so that chunked
/// parallel loops draw the same numbers as sequential ones.
pub(crate) fn stream_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}
