//! X-shaped entanglement witnesses.
//!
//! A non-positive `W = X(s, t, u)` is an entanglement witness iff
//! `A(s, t) ≥ B(u)`, where
//!
//! ```text
//! A(s,t) = inf_{r>0} √((s₁/r + t₄r)(s₄/r + t₁r)) + √((s₂/r + t₃r)(s₃/r + t₂r))
//! B(u)   = max_θ |u₁e^{iθ} + ū₄| + |u₂e^{iθ} + ū₃|
//! ```
//!
//! For real `z`, `C(z) = B(z₁, z₂, z₃, z̄₄)` has the piecewise closed form in
//! [`c_value`], governed by the sign of `z₁z₂z₃z₄` and whether the reciprocals
//! `1/|zᵢ|` form a quadrangle.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::search::{golden_max, golden_min};
use crate::states::XState;
use crate::{Error, Result};

/// Slack allowed in `A ≥ B` when testing witness validity.
pub const WITNESS_TOL: f64 = 1e-12;

const A_THETA_RANGE: f64 = 40.0;
const A_THETA_TOL: f64 = 1e-12;
const B_GRID: usize = 4096;
const B_REFINE_CANDIDATES: usize = 8;

/// Region of `ℝ⁴ \ {0}` selecting the closed form of `C(z)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Region {
    /// `z₁z₂z₃z₄ ≥ 0`.
    Positive,
    /// Negative product and `1/|zᵢ| ≥ Σ_{j≠i} 1/|z_j|` for the 0-based index `i`.
    Dominant(usize),
    /// Negative product and the reciprocals `1/|zᵢ|` form a quadrangle.
    Quadrangle,
}

impl std::fmt::Display for Region {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Region::Positive => write!(f, "Ω+"),
            Region::Dominant(i) => write!(f, "Ω-{}", i + 1),
            Region::Quadrangle => write!(f, "Ω-0"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WitnessCertificate {
    pub w: XState,
    /// `⟨ρ, W⟩` for the state the witness was built for.
    pub pairing_value: f64,
    pub a_value: f64,
    pub b_value: f64,
}

fn check_nonnegative(v: &[f64; 4]) -> Result<()> {
    for (index, &value) in v.iter().enumerate() {
        if !value.is_finite() {
            return Err(Error::NonFinite);
        }
        if value < 0.0 {
            return Err(Error::NegativeComponent { index, value });
        }
    }
    Ok(())
}

/// Evaluates the `A(s,t)` objective at `r = e^θ`.
fn a_objective(s: &[f64; 4], t: &[f64; 4], theta: f64) -> f64 {
    let r = theta.exp();
    let ri = (-theta).exp();
    ((s[0] * ri + t[3] * r) * (s[3] * ri + t[0] * r)).sqrt() + ((s[1] * ri + t[2] * r) * (s[2] * ri + t[1] * r)).sqrt()
}

/// `A(s, t)` for nonnegative `s, t`.
///
/// In `θ = ln r` each square root is `√(p e^{-2θ} + m + q e^{2θ})` with
/// nonnegative coefficients, which is convex; the sum is therefore unimodal
/// and golden-section search on `θ ∈ [-40, 40]` finds the infimum. The limits
/// `r → 0` and `r → ∞` are evaluated exactly and compete with the interior
/// minimum.
pub fn a_value(s: &[f64; 4], t: &[f64; 4]) -> Result<f64> {
    check_nonnegative(s)?;
    check_nonnegative(t)?;

    // r → 0: √(s₁s₄/r² + …) diverges unless s₁s₄ = 0, leaving √(s₁t₁ + s₄t₄).
    let m14 = s[0] * t[0] + s[3] * t[3];
    let m23 = s[1] * t[1] + s[2] * t[2];
    let limit = |p14: f64, p23: f64| {
        if p14 > 0.0 || p23 > 0.0 {
            f64::INFINITY
        } else {
            m14.sqrt() + m23.sqrt()
        }
    };
    let at_zero = limit(s[0] * s[3], s[1] * s[2]);
    let at_infinity = limit(t[0] * t[3], t[1] * t[2]);

    let (_, interior) = golden_min(|th| a_objective(s, t, th), -A_THETA_RANGE, A_THETA_RANGE, A_THETA_TOL);
    Ok(interior.min(at_zero).min(at_infinity))
}

/// The `B(u)` objective at angle `θ`.
pub fn b_objective(u: &[Complex64; 4], theta: f64) -> f64 {
    let e = Complex64::from_polar(1.0, theta);
    (u[0] * e + u[3].conj()).norm() + (u[1] * e + u[2].conj()).norm()
}

/// `B(u) = max_θ |u₁e^{iθ} + ū₄| + |u₂e^{iθ} + ū₃|`.
///
/// Each modulus is `√(αₖ + βₖ cos(θ + φₖ))`; the sum is sampled on a
/// 4096-point circle and the best grid-local maxima are refined by
/// golden-section search on their bracketing cells.
pub fn b_value(u: &[Complex64; 4]) -> f64 {
    let h = std::f64::consts::TAU / B_GRID as f64;
    let vals: Vec<f64> = (0..B_GRID).map(|k| b_objective(u, k as f64 * h)).collect();
    let best_grid = vals.iter().copied().fold(f64::NEG_INFINITY, f64::max);

    let mut peaks: Vec<usize> = (0..B_GRID)
        .filter(|&k| {
            let prev = vals[(k + B_GRID - 1) % B_GRID];
            let next = vals[(k + 1) % B_GRID];
            vals[k] >= prev && vals[k] >= next
        })
        .collect();
    peaks.sort_by(|&i, &j| vals[j].total_cmp(&vals[i]));
    peaks.truncate(B_REFINE_CANDIDATES);

    peaks
        .into_iter()
        .map(|k| {
            let center = k as f64 * h;
            golden_max(|th| b_objective(u, th), center - h, center + h, 1e-13).1
        })
        .fold(best_grid, f64::max)
}

fn check_nonzero(z: &[f64; 4]) -> Result<()> {
    if z.iter().any(|x| !x.is_finite()) {
        return Err(Error::NonFinite);
    }
    if z.iter().all(|&x| x == 0.0) {
        return Err(Error::ZeroVector);
    }
    Ok(())
}

/// Region of `z` for the piecewise form of `C`. Boundary points
/// `1/|zᵢ| = Σ_{j≠i} 1/|z_j|` are assigned to [`Region::Dominant`].
///
/// Comparisons are made with cleared denominators: `1/|zᵢ| ≥ Σ 1/|z_j|`
/// becomes `Π_{k≠i}|z_k| ≥ Σ_{j≠i} Π_{k≠j}|z_k|`.
pub fn classify_region(z: &[f64; 4]) -> Result<Region> {
    check_nonzero(z)?;
    let neg = z.iter().filter(|&&x| x < 0.0).count();
    if z.contains(&0.0) || neg % 2 == 0 {
        return Ok(Region::Positive);
    }
    let abs = z.map(f64::abs);
    let others = |i: usize| -> f64 { (0..4).filter(|&k| k != i).map(|k| abs[k]).product() };
    let p: [f64; 4] = [others(0), others(1), others(2), others(3)];
    let total: f64 = p.iter().sum();
    for i in 0..4 {
        if p[i] >= total - p[i] {
            return Ok(Region::Dominant(i));
        }
    }
    Ok(Region::Quadrangle)
}

/// `Σ|z_j| − 2|zᵢ|`, the closed form of `C` on the dominant region of index `i`.
pub fn c_dominant_piece(z: &[f64; 4], i: usize) -> f64 {
    z.iter().map(|x| x.abs()).sum::<f64>() - 2.0 * z[i].abs()
}

/// `√((z₁z₂−z₃z₄)(z₂z₄−z₁z₃)(z₁z₄−z₂z₃) / (−z₁z₂z₃z₄))`, the closed form of `C`
/// on the quadrangle region.
pub fn c_quadrangle_piece(z: &[f64; 4]) -> f64 {
    let [z1, z2, z3, z4] = *z;
    let num = (z1 * z2 - z3 * z4) * (z2 * z4 - z1 * z3) * (z1 * z4 - z2 * z3);
    let den = -(z1 * z2 * z3 * z4);
    (num / den).max(0.0).sqrt()
}

/// Closed-form `C(z) = sup_{α,β,γ} |F(z)|` for real `z ≠ 0`.
pub fn c_value(z: &[f64; 4]) -> Result<f64> {
    Ok(match classify_region(z)? {
        Region::Positive => z.iter().map(|x| x.abs()).sum(),
        Region::Dominant(i) => c_dominant_piece(z, i),
        Region::Quadrangle => c_quadrangle_piece(z),
    })
}

/// `C(z)` for complex `z`, as `B(z₁, z₂, z₃, z̄₄)`. Real inputs use the closed form.
pub fn c_value_complex(z: &[Complex64; 4]) -> Result<f64> {
    if z.iter().any(|x| !x.re.is_finite() || !x.im.is_finite()) {
        return Err(Error::NonFinite);
    }
    if z.iter().all(|x| x.im == 0.0) {
        return c_value(&z.map(|x| x.re));
    }
    Ok(b_value(&[z[0], z[1], z[2], z[3].conj()]))
}

/// `⟨ρ, W⟩ = Tr(ρ Wᵀ) = Σ aᵢsᵢ + Σ bᵢtᵢ + 2 Re Σ cᵢuᵢ`.
pub fn pair(rho: &XState, w: &XState) -> f64 {
    let mut acc = 0.0;
    for i in 0..4 {
        acc += rho.a[i] * w.a[i] + rho.b[i] * w.b[i] + 2.0 * (rho.c[i] * w.c[i]).re;
    }
    acc
}

/// `L(ρ, z) = Re(z₁c₁ + z₂c₂ + z₃c₃ + z₄c̄₄)`.
pub fn guhne_l(rho: &XState, z: &[Complex64; 4]) -> f64 {
    (z[0] * rho.c[0] + z[1] * rho.c[1] + z[2] * rho.c[2] + z[3] * rho.c[3].conj()).re
}

/// The six diagonal candidates whose minimum is `Δ_ρ`: `√(aᵢbᵢ)` for
/// `i = 1..4`, then `⁴√(a₁b₂b₃a₄)` and `⁴√(b₁a₂a₃b₄)`.
pub fn delta_candidates(rho: &XState) -> Result<[f64; 6]> {
    check_nonnegative(&rho.a)?;
    check_nonnegative(&rho.b)?;
    let (a, b) = (rho.a, rho.b);
    Ok([
        (a[0] * b[0]).sqrt(),
        (a[1] * b[1]).sqrt(),
        (a[2] * b[2]).sqrt(),
        (a[3] * b[3]).sqrt(),
        (a[0] * b[1] * b[2] * a[3]).sqrt().sqrt(),
        (b[0] * a[1] * a[2] * b[3]).sqrt().sqrt(),
    ])
}

/// `Δ_ρ`, the diagonal factor in the necessary separability inequality `L ≤ C·Δ`.
pub fn delta_rho(rho: &XState) -> Result<f64> {
    Ok(delta_candidates(rho)?.into_iter().fold(f64::INFINITY, f64::min))
}

/// `W = X(x/A(x,y), y/A(x,y), −(z₁, z₂, z₃, z̄₄)/C(z))`.
///
/// The result sits on the witness boundary `A(s,t) = B(u) = 1`.
pub fn make_witness(x: &[f64; 4], y: &[f64; 4], z: &[Complex64; 4]) -> Result<XState> {
    let a = a_value(x, y)?;
    if a.is_nan() || a <= 0.0 || a.is_infinite() {
        return Err(Error::DegenerateWitness("A(x, y) is zero"));
    }
    if z.iter().all(|v| *v == Complex64::new(0.0, 0.0)) {
        return Err(Error::ZeroVector);
    }
    let c = c_value_complex(z)?;
    if c.is_nan() || c <= 0.0 {
        return Err(Error::DegenerateWitness("C(z) is zero"));
    }
    let u = [z[0], z[1], z[2], z[3].conj()].map(|v| -v / c);
    Ok(XState {
        a: x.map(|v| v / a),
        b: y.map(|v| v / a),
        c: u,
    })
}

/// Whether the X-shaped `w` is an entanglement witness: non-positive,
/// nonnegative diagonal and `A(s,t) ≥ B(u) − 1e-12`.
pub fn is_witness(w: &XState) -> bool {
    if w.is_positive() {
        return false;
    }
    match a_value(&w.a, &w.b) {
        Ok(a) => a >= b_value(&w.c) - WITNESS_TOL,
        Err(_) => false,
    }
}

/// Builds a certificate for `w` against `rho`.
pub fn certify(rho: &XState, w: XState) -> Result<WitnessCertificate> {
    Ok(WitnessCertificate {
        pairing_value: pair(rho, &w),
        a_value: a_value(&w.a, &w.b)?,
        b_value: b_value(&w.c),
        w,
    })
}
