//! X-shaped three-qubit matrices and GHZ-diagonal states.
//!
//! `X(a, b, c)` is the 8×8 Hermitian matrix whose only nonzero entries are the
//! diagonal `(a₁, a₂, a₃, a₄, b₄, b₃, b₂, b₁)` and the anti-diagonal, with
//! `cᵢ` at row `i`, column `9 − i` (1-based) and `c̄ᵢ` mirrored below.
//! A GHZ-diagonal state is `X(a, a, c)` with real `c`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::linalg::{Dense8, Subsystem, ZERO8};
use crate::{Error, Result};

/// Conjugate-symmetry tolerance accepted by [`x_part`].
pub const HERMITIAN_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct XState {
    pub a: [f64; 4],
    /// Stored so that `b[i]` pairs with `a[i]` and `c[i]`; it sits at dense row `7 − i`.
    pub b: [f64; 4],
    pub c: [Complex64; 4],
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GhzDiagonalState {
    pub a: [f64; 4],
    pub c: [f64; 4],
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GhzWeights {
    pub p: [f64; 8],
}

/// Coefficients of the seven Pauli words in the expansion
/// `X(a,a,c) = ⅛ (Tr·I + Σ λ_k P_k)`, named by their word in `A⊗B⊗C` order.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PauliCoefficients {
    pub zzi: f64,
    pub ziz: f64,
    pub izz: f64,
    pub xxx: f64,
    pub yyx: f64,
    pub yxy: f64,
    pub xyy: f64,
}

impl XState {
    pub fn new(a: [f64; 4], b: [f64; 4], c: [Complex64; 4]) -> Self {
        XState { a, b, c }
    }

    pub fn trace(&self) -> f64 {
        self.a.iter().sum::<f64>() + self.b.iter().sum::<f64>()
    }

    pub fn to_dense(&self) -> Dense8 {
        let mut m = ZERO8;
        for i in 0..4 {
            m[i][i] = Complex64::new(self.a[i], 0.0);
            m[7 - i][7 - i] = Complex64::new(self.b[i], 0.0);
            m[i][7 - i] = self.c[i];
            m[7 - i][i] = self.c[i].conj();
        }
        m
    }

    /// 2×2 block criterion: `aᵢ, bᵢ ≥ 0` and `aᵢbᵢ ≥ |cᵢ|²`.
    pub fn is_positive(&self) -> bool {
        (0..4).all(|i| self.a[i] >= 0.0 && self.b[i] >= 0.0 && self.a[i] * self.b[i] >= self.c[i].norm_sqr())
    }

    /// Closed-form partial transpose; diagonals stay, anti-diagonal entries permute.
    pub fn partial_transpose(&self, sys: Subsystem) -> XState {
        let c = self.c;
        let c = match sys {
            Subsystem::C => [c[1], c[0], c[3], c[2]],
            Subsystem::B => [c[2], c[3], c[0], c[1]],
            Subsystem::A => [c[3].conj(), c[2].conj(), c[1].conj(), c[0].conj()],
        };
        XState {
            a: self.a,
            b: self.b,
            c,
        }
    }

    /// Positivity of the partial transpose on each of A, B, C.
    pub fn partial_transposes_positive(&self) -> [bool; 3] {
        Subsystem::ALL.map(|s| self.partial_transpose(s).is_positive())
    }

    /// PPT iff positive and `min √(aᵢbᵢ) ≥ max |c_j|`: the three partial
    /// transposes act on `c` as the Klein four-group, which moves every `c_j`
    /// into every block.
    pub fn is_ppt(&self) -> bool {
        if !self.is_positive() {
            return false;
        }
        let min_ab = (0..4).map(|i| self.a[i] * self.b[i]).fold(f64::INFINITY, f64::min);
        let max_c2 = self.c.iter().map(|z| z.norm_sqr()).fold(0.0, f64::max);
        min_ab >= max_c2
    }

    /// GHZ twirl `X((a+b)/2, (a+b)/2, Re c)`.
    pub fn symmetrize(&self) -> XState {
        let mut a = [0.0; 4];
        let mut c = [Complex64::new(0.0, 0.0); 4];
        for i in 0..4 {
            a[i] = 0.5 * (self.a[i] + self.b[i]);
            c[i] = Complex64::new(self.c[i].re, 0.0);
        }
        XState { a, b: a, c }
    }

    /// `Some` when `a = b` and `c` is real.
    pub fn as_ghz_diagonal(&self) -> Option<GhzDiagonalState> {
        if self.a == self.b && self.c.iter().all(|z| z.im == 0.0) {
            Some(GhzDiagonalState {
                a: self.a,
                c: self.c.map(|z| z.re),
            })
        } else {
            None
        }
    }
}

/// Projection onto X shape: keeps the diagonal and anti-diagonal of a Hermitian matrix.
pub fn x_part(m: &Dense8) -> Result<XState> {
    for r in 0..8 {
        for c in r..8 {
            let dev = (m[r][c] - m[c][r].conj()).norm();
            if !dev.is_finite() || dev > HERMITIAN_TOL {
                return Err(Error::NotHermitian {
                    row: r,
                    col: c,
                    deviation: dev,
                });
            }
        }
    }
    let mut a = [0.0; 4];
    let mut b = [0.0; 4];
    let mut c = [Complex64::new(0.0, 0.0); 4];
    for i in 0..4 {
        a[i] = m[i][i].re;
        b[i] = m[7 - i][7 - i].re;
        c[i] = m[i][7 - i];
    }
    Ok(XState { a, b, c })
}

impl GhzDiagonalState {
    pub fn new(a: [f64; 4], c: [f64; 4]) -> Self {
        GhzDiagonalState { a, c }
    }

    pub fn maximally_mixed() -> Self {
        GhzDiagonalState {
            a: [0.125; 4],
            c: [0.0; 4],
        }
    }

    /// `|ξ₁⟩⟨ξ₁|` with `ξ₁ = (|000⟩ + |111⟩)/√2`.
    pub fn ghz() -> Self {
        GhzDiagonalState {
            a: [0.5, 0.0, 0.0, 0.0],
            c: [0.5, 0.0, 0.0, 0.0],
        }
    }

    pub fn from_ghz_weights(w: &GhzWeights) -> Result<Self> {
        for (index, &value) in w.p.iter().enumerate() {
            if !value.is_finite() {
                return Err(Error::NonFinite);
            }
            if value < 0.0 {
                return Err(Error::NegativeWeight {
                    index: index + 1,
                    value,
                });
            }
        }
        let p = &w.p;
        let mut a = [0.0; 4];
        let mut c = [0.0; 4];
        for i in 0..4 {
            a[i] = 0.5 * (p[i] + p[7 - i]);
            c[i] = 0.5 * (p[i] - p[7 - i]);
        }
        Ok(GhzDiagonalState { a, c })
    }

    /// Inverse of [`from_ghz_weights`](Self::from_ghz_weights).
    pub fn to_ghz_weights(&self) -> GhzWeights {
        let mut p = [0.0; 8];
        for i in 0..4 {
            p[i] = self.a[i] + self.c[i];
            p[7 - i] = self.a[i] - self.c[i];
        }
        GhzWeights { p }
    }

    pub fn to_xstate(&self) -> XState {
        XState {
            a: self.a,
            b: self.a,
            c: self.c.map(|x| Complex64::new(x, 0.0)),
        }
    }

    pub fn trace(&self) -> f64 {
        2.0 * self.a.iter().sum::<f64>()
    }

    pub fn min_a(&self) -> f64 {
        self.a.iter().copied().fold(f64::INFINITY, f64::min)
    }

    pub fn max_abs_c(&self) -> f64 {
        self.c.iter().map(|x| x.abs()).fold(0.0, f64::max)
    }

    pub fn is_positive(&self) -> bool {
        (0..4).all(|i| self.a[i] >= 0.0 && self.a[i] >= self.c[i].abs())
    }

    pub fn is_ppt(&self) -> bool {
        self.to_xstate().is_ppt()
    }

    pub fn scaled(&self, factor: f64) -> Self {
        GhzDiagonalState {
            a: self.a.map(|x| x * factor),
            c: self.c.map(|x| x * factor),
        }
    }

    pub fn pauli_coefficients(&self) -> PauliCoefficients {
        let [a1, a2, a3, a4] = self.a;
        let [c1, c2, c3, c4] = self.c;
        PauliCoefficients {
            zzi: 2.0 * (a1 + a2 - a3 - a4),
            ziz: 2.0 * (a1 - a2 + a3 - a4),
            izz: 2.0 * (a1 - a2 - a3 + a4),
            xxx: 2.0 * (c1 + c2 + c3 + c4),
            yyx: 2.0 * (-c1 - c2 + c3 + c4),
            yxy: 2.0 * (-c1 + c2 - c3 + c4),
            xyy: 2.0 * (-c1 + c2 + c3 - c4),
        }
    }
}

impl PauliCoefficients {
    /// `(λ₂, …, λ₈)`.
    pub fn to_array(&self) -> [f64; 7] {
        [self.zzi, self.ziz, self.izz, self.xxx, self.yyx, self.yxy, self.xyy]
    }

    pub fn from_array(l: [f64; 7]) -> Self {
        PauliCoefficients {
            zzi: l[0],
            ziz: l[1],
            izz: l[2],
            xxx: l[3],
            yyx: l[4],
            yxy: l[5],
            xyy: l[6],
        }
    }

    /// The anti-diagonal sector `(λ₅, λ₆, λ₇, λ₈)`.
    pub fn anti_diagonal(&self) -> [f64; 4] {
        [self.xxx, self.yyx, self.yxy, self.xyy]
    }

    /// Recovers the state from the coefficients and its trace.
    pub fn to_state(&self, trace: f64) -> GhzDiagonalState {
        let s = 0.5 * trace;
        let (l2, l3, l4) = (0.5 * self.zzi, 0.5 * self.ziz, 0.5 * self.izz);
        let (l5, l6, l7, l8) = (0.5 * self.xxx, 0.5 * self.yyx, 0.5 * self.yxy, 0.5 * self.xyy);
        GhzDiagonalState {
            a: [
                0.25 * (s + l2 + l3 + l4),
                0.25 * (s + l2 - l3 - l4),
                0.25 * (s - l2 + l3 - l4),
                0.25 * (s - l2 - l3 + l4),
            ],
            c: [
                0.25 * (l5 - l6 - l7 - l8),
                0.25 * (l5 - l6 + l7 + l8),
                0.25 * (l5 + l6 - l7 + l8),
                0.25 * (l5 + l6 + l7 - l8),
            ],
        }
    }
}
