//! Cross-validation suites, one per acceptance criterion.
//!
//! `Level::Full` runs each suite at its acceptance size; `Level::Quick` runs
//! reduced sizes for a fast smoke check. Every numeric tolerance is multiplied
//! by `tolerance_scale` (1 in normal use; 0 is a fault-injection switch that
//! must make the harness fail).

use std::f64::consts::{SQRT_2, TAU};
use std::time::Instant;

use ghzsep::decider::{
    classify_case_c, critical_point, decide, f_eval, guhne_bound, maximize_f, necessary_check, rho_pq, t_vector, Case,
    NecessaryVerdict,
};
use ghzsep::num_complex::Complex64;
use ghzsep::oracle::{
    c_equals_b_probe, c_grid_oracle, decompose, eigen_positive, eigen_ppt_oracle, f_max_oracle, product_probe,
    Decomposition, DEFAULT_ATOM_BUDGET, DEFAULT_STARTS,
};
use ghzsep::states::{GhzDiagonalState, XState};
use ghzsep::witness::{
    b_value, c_dominant_piece, c_quadrangle_piece, c_value, classify_region, is_witness, pair, WitnessCertificate,
};
use ghzsep::Execution;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::svg;
use crate::sweep::sweep;

pub const DEFAULT_SEED: u64 = 20_240_917;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum Level {
    Quick,
    Full,
}

#[derive(Debug, Clone, Copy)]
pub struct Config {
    pub seed: u64,
    pub level: Level,
    pub tolerance_scale: f64,
    pub exec: Execution,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            seed: DEFAULT_SEED,
            level: Level::Full,
            tolerance_scale: 1.0,
            exec: Execution::default(),
        }
    }
}

impl Config {
    fn size(&self, quick: usize, full: usize) -> usize {
        match self.level {
            Level::Quick => quick,
            Level::Full => full,
        }
    }

    fn tol(&self, t: f64) -> f64 {
        t * self.tolerance_scale
    }

    fn rng(&self, suite: usize) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(suite as u64))
    }

    fn full(&self) -> bool {
        self.level == Level::Full
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteResult {
    pub id: usize,
    pub name: String,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
}

impl SuiteResult {
    pub fn line(&self) -> String {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        format!(
            "[{tag}] AC{} {}: {} ({:.2} s)",
            self.id, self.name, self.detail, self.seconds
        )
    }
}

pub const SUITES: [(usize, &str); 11] = [
    (1, "closed-form C vs angle-grid oracle"),
    (2, "C equals B identity"),
    (3, "region boundary continuity"),
    (4, "Kay family thresholds"),
    (5, "GHZ white-noise threshold"),
    (6, "rho_pq plane regions"),
    (7, "critical-point identities"),
    (8, "PPT closed form vs eigensolver"),
    (9, "witness soundness"),
    (10, "f_max vs multi-start search"),
    (11, "best-effort decomposition"),
];

type Outcome = (bool, String);

pub fn run_suite(id: usize, cfg: &Config) -> SuiteResult {
    let start = Instant::now();
    let (passed, detail) = match id {
        1 => c_vs_grid(cfg),
        2 => c_equals_b(cfg),
        3 => continuity(cfg),
        4 => kay_thresholds(cfg),
        5 => white_noise(cfg),
        6 => pq_plane(cfg),
        7 => identities(cfg),
        8 => ppt_vs_eigen(cfg),
        9 => witness_soundness(cfg),
        10 => f_max_search(cfg),
        11 => decomposition(cfg),
        _ => (false, format!("no suite {id}")),
    };
    let name = SUITES.iter().find(|s| s.0 == id).map_or("unknown", |s| s.1).to_string();
    SuiteResult {
        id,
        name,
        passed,
        detail,
        seconds: start.elapsed().as_secs_f64(),
    }
}

pub fn run_all(cfg: &Config) -> Vec<SuiteResult> {
    SUITES.iter().map(|&(id, _)| run_suite(id, cfg)).collect()
}

fn uniform4(rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> [f64; 4] {
    std::array::from_fn(|_| rng.random_range(lo..hi))
}

fn as_complex(z: &[f64; 4]) -> [Complex64; 4] {
    z.map(|v| Complex64::new(v, 0.0))
}

fn c_vs_grid(cfg: &Config) -> Outcome {
    let n = cfg.size(25, 1000);
    let grid = if cfg.full() { 128 } else { 64 };
    let mut rng = cfg.rng(1);
    let zs: Vec<[f64; 4]> = (0..n).map(|_| uniform4(&mut rng, -1.0, 1.0)).collect();
    let start = Instant::now();
    let (mut worst, mut overshoot) = (0.0f64, f64::NEG_INFINITY);
    for z in &zs {
        let oracle = c_grid_oracle(z, grid, cfg.exec);
        let closed = c_value(z).unwrap_or(f64::NAN);
        worst = worst.max((oracle - closed).abs());
        overshoot = overshoot.max(oracle - closed);
    }
    let secs = start.elapsed().as_secs_f64();
    let on_time = !cfg.full() || secs <= 120.0;
    (
        worst <= cfg.tol(1e-6) && overshoot <= cfg.tol(1e-9) && on_time,
        format!(
            "{n} z on a {grid}^3 grid: max |C - oracle| = {worst:.2e}, oracle overshoot {overshoot:.2e}, {secs:.1} s"
        ),
    )
}

fn c_equals_b(cfg: &Config) -> Outcome {
    let (n_real, n_complex) = (cfg.size(200, 1000), cfg.size(20, 200));
    let mut rng = cfg.rng(2);
    let mut worst_real = 0.0f64;
    for _ in 0..n_real {
        let z = uniform4(&mut rng, -1.0, 1.0);
        let b = b_value(&as_complex(&z));
        worst_real = worst_real.max((c_value(&z).unwrap_or(f64::NAN) - b).abs());
    }
    let mut worst_complex = 0.0f64;
    for _ in 0..n_complex {
        let z: [Complex64; 4] =
            std::array::from_fn(|_| Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)));
        let (oracle, b) = c_equals_b_probe(&z, cfg.exec);
        worst_complex = worst_complex.max((oracle - b).abs());
    }
    (
        worst_real <= cfg.tol(1e-10) && worst_complex <= cfg.tol(1e-8),
        format!(
            "{n_real} real z: max |C - B| = {worst_real:.2e}; {n_complex} complex z: max |oracle - B| = {worst_complex:.2e}"
        ),
    )
}

fn continuity(cfg: &Config) -> Outcome {
    let mut rng = cfg.rng(3);
    let mut worst = 0.0f64;
    let mut sets = 0;
    for i in 0..4 {
        for mask in (0u32..16).filter(|m| m.count_ones() % 2 == 1) {
            sets += 1;
            for _ in 0..100 {
                let mut z = [0.0; 4];
                let mut inv_sum = 0.0;
                for j in (0..4).filter(|&j| j != i) {
                    z[j] = rng.random_range(0.2..2.0);
                    inv_sum += 1.0 / z[j];
                }
                z[i] = 1.0 / inv_sum;
                for (j, zj) in z.iter_mut().enumerate() {
                    if mask >> j & 1 == 1 {
                        *zj = -*zj;
                    }
                }
                worst = worst.max((c_dominant_piece(&z, i) - c_quadrangle_piece(&z)).abs());
            }
        }
    }
    let anchor = [-1.0, 3.0, 3.0, 3.0];
    let anchor_ok = (c_dominant_piece(&anchor, 0) - 8.0).abs() <= cfg.tol(1e-10)
        && (c_quadrangle_piece(&anchor) - 8.0).abs() <= cfg.tol(1e-10)
        && (c_value(&anchor).unwrap_or(f64::NAN) - 8.0).abs() <= cfg.tol(1e-10);
    (
        worst <= cfg.tol(1e-10) && anchor_ok,
        format!("{sets} boundary sets x 100 points: max |linear - radical| = {worst:.2e}; anchor (-1,3,3,3) -> 8 both ways: {anchor_ok}"),
    )
}

fn kay(alpha: f64) -> GhzDiagonalState {
    GhzDiagonalState::new([4.0 + alpha, alpha, alpha, alpha], [2.0, 2.0, -2.0, 2.0])
}

/// Smallest `x` in `[lo, hi]` with `pred(x)`, for a predicate monotone in `x`.
fn bisect(mut lo: f64, mut hi: f64, pred: impl Fn(f64) -> bool) -> f64 {
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if pred(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    hi
}

fn kay_thresholds(cfg: &Config) -> Outcome {
    let root8 = 2.0 * SQRT_2;
    let mut mismatches = 0;
    let mut count = 0;
    for k in 0..=250 {
        let alpha = 1.5 + 0.01 * k as f64;
        let v = decide(&kay(alpha));
        count += 1;
        let sep_expected = alpha >= root8;
        if v.case != Case::III
            || v.ppt != (alpha >= 2.0)
            || ((alpha - root8).abs() > 1e-9 && v.separable != sep_expected)
        {
            mismatches += 1;
        }
    }
    let ppt_at = bisect(1.0, 3.0, |a| decide(&kay(a)).ppt);
    let sep_at = bisect(2.0, 4.0, |a| decide(&kay(a)).separable);
    let oracle = f_max_oracle(&[2.0, 2.0, -2.0, 2.0], DEFAULT_STARTS, cfg.seed, cfg.exec);
    let pass = mismatches == 0
        && (ppt_at - 2.0).abs() <= cfg.tol(1e-9)
        && (sep_at - root8).abs() <= cfg.tol(1e-9)
        && (oracle - root8).abs() <= cfg.tol(1e-6);
    (
        pass,
        format!(
            "{count} alpha samples, {mismatches} mismatches; PPT from alpha = {ppt_at:.12}, separable from {sep_at:.12} (2√2 = {root8:.12}); f_max oracle {oracle:.12}"
        ),
    )
}

fn noisy_ghz(w: f64) -> GhzDiagonalState {
    let n = (1.0 - w) / 8.0;
    GhzDiagonalState::new([n + w / 2.0, n, n, n], [w / 2.0, 0.0, 0.0, 0.0])
}

fn white_noise(cfg: &Config) -> Outcome {
    let mut mismatches = 0;
    for k in 0..=1000 {
        if k == 200 {
            continue;
        }
        let v = decide(&noisy_ghz(k as f64 / 1000.0));
        if v.case != Case::I || v.separable != (k < 200) || !v.positive {
            mismatches += 1;
        }
    }
    // w = 1/5 exactly: a = (1/5, 1/10, 1/10, 1/10), c₁ = 1/10.
    let edge = decide(&GhzDiagonalState::new([0.2, 0.1, 0.1, 0.1], [0.1, 0.0, 0.0, 0.0]));
    let edge_ok = edge.case == Case::I && edge.separable;
    let at = bisect(0.0, 1.0, |w| !decide(&noisy_ghz(w)).separable);
    (
        mismatches == 0 && edge_ok && (at - 0.2).abs() <= cfg.tol(1e-9),
        format!("1000 w samples, {mismatches} mismatches; w = 1/5 separable: {edge_ok}; entangled above w = {at:.12}"),
    )
}

/// Case tag and separability of `ρ_{p,q}` at `p = P/d`, `q = Q/d`, in exact integer arithmetic.
pub fn pq_expected(pn: i64, qn: i64, d: i64) -> (Case, bool) {
    let (p, q, d) = (pn as i128, qn as i128, d as i128);
    let a = (p - q) * (3 * p + q);
    let case = if a <= 0 {
        Case::I
    } else if p * (2 * p + q) <= 0 {
        Case::II
    } else {
        Case::III
    };
    let in_box = p.abs() <= d && q.abs() <= d;
    // 4p³/(3p+q) ≤ 1 with p = P/d, q = Q/d, i.e. 4P³ ≤ d²(3P+Q) scaled by the sign of 3P+Q.
    let sufficient = a > 0 && {
        let (lhs, rhs) = (4 * p * p * p, d * d * (3 * p + q));
        if 3 * p + q > 0 {
            lhs <= rhs
        } else {
            lhs >= rhs
        }
    };
    let separable = in_box && (sufficient || case != Case::III);
    (case, separable)
}

fn pq_plane(cfg: &Config) -> Outcome {
    let n = cfg.size(51, 201);
    let d = (n - 1) as i64;
    let start = Instant::now();
    let records = sweep(n, cfg.exec);
    let svg_text = svg::render(&records, n);
    let secs = start.elapsed().as_secs_f64();

    let (mut case_bad, mut sep_bad, mut not_ppt) = (0, 0, 0);
    for (k, r) in records.iter().enumerate() {
        let (pn, qn) = (2 * (k / n) as i64 - d, 2 * (k % n) as i64 - d);
        let (case, separable) = pq_expected(pn, qn, d);
        case_bad += usize::from(r.case != case);
        sep_bad += usize::from(r.separable != separable);
        not_ppt += usize::from(!(r.ppt && r.positive));
    }
    let cells = svg::parse_cells(&svg_text);
    let svg_bad = cells.len() != records.len()
        || records
            .iter()
            .zip(&cells)
            .any(|(r, (p, q, class))| (r.p, r.q) != (*p, *q) || svg::cell_class(r) != class);
    let corner = decide(&rho_pq(1.0, -1.0));
    let inner = decide(&rho_pq(0.8, 0.8));
    let examples_ok = corner.ppt && !corner.separable && inner.separable;
    let on_time = !cfg.full() || secs <= 30.0;
    (
        case_bad == 0 && sep_bad == 0 && not_ppt == 0 && !svg_bad && examples_ok && on_time,
        format!(
            "{n}x{n} grid: {case_bad} case-tag and {sep_bad} separability mismatches, {not_ppt} non-PPT cells, SVG consistent: {}, {secs:.2} s",
            !svg_bad
        ),
    )
}

fn rel_err(x: f64, y: f64, scale: f64) -> f64 {
    (x - y).abs() / x.abs().max(y.abs()).max(scale).max(f64::MIN_POSITIVE)
}

fn lambdas(c: &[f64; 4]) -> [f64; 4] {
    GhzDiagonalState::new([0.0; 4], *c).pauli_coefficients().anti_diagonal()
}

fn identities(cfg: &Config) -> Outcome {
    let n = cfg.size(200, 1000);
    let mut rng = cfg.rng(7);
    let mut worst_t = 0.0f64;
    for _ in 0..n {
        let c = uniform4(&mut rng, -1.0, 1.0);
        let t = t_vector(&c).0;
        let [l5, l6, l7, l8] = lambdas(&c);
        // Both sides are sextic in c; compare relative to max|cᵢ|⁶.
        let scale = c.iter().map(|v| v.abs()).fold(0.0, f64::max).powi(6);
        let lhs1 = (t[1] + t[2]).powi(2) - (t[0] + t[3]).powi(2);
        let lhs2 = (t[0] - t[3]).powi(2) - (t[1] - t[2]).powi(2);
        worst_t = worst_t.max(rel_err(lhs1, l5 * l8 * (l6 * l7).powi(2) / 64.0, scale));
        worst_t = worst_t.max(rel_err(lhs2, l6 * l7 * (l5 * l8).powi(2) / 64.0, scale));
    }
    let (mut worst_b, mut worst_f, mut found, mut errors) = (0.0f64, 0.0f64, 0, 0);
    while found < n {
        let c = uniform4(&mut rng, -1.0, 1.0);
        if classify_case_c(&c) != Case::III {
            continue;
        }
        found += 1;
        let l = GhzDiagonalState::new([0.0; 4], c).pauli_coefficients();
        let [l5, l6, l7, l8] = l.anti_diagonal();
        let (Ok(bound), Ok(s)) = (guhne_bound(&l), critical_point(&c)) else {
            errors += 1;
            continue;
        };
        let t = t_vector(&c).0;
        for i in 0..4 {
            let rhs = c[i] * c[i] + 16.0 * t[i] * t[i] / (l5 * l6 * l7 * l8);
            worst_b = worst_b.max(rel_err(bound * bound, rhs, 0.0));
        }
        let in_quadrangle = matches!(classify_region(&s), Ok(ghzsep::witness::Region::Quadrangle));
        match f_eval(&c, &s) {
            Ok(f) if in_quadrangle => worst_f = worst_f.max(rel_err(f, bound, 0.0)),
            _ => errors += 1,
        }
    }
    (
        worst_t <= cfg.tol(1e-9) && worst_b <= cfg.tol(1e-9) && worst_f <= cfg.tol(1e-9) && errors == 0,
        format!(
            "{n} c: t-λ identities max rel err {worst_t:.2e}; {n} case-III c: bound² identity {worst_b:.2e}, f(critical point) vs bound {worst_f:.2e}, {errors} errors"
        ),
    )
}

fn random_xstate(rng: &mut ChaCha8Rng, k: usize) -> XState {
    let a = uniform4(rng, 0.0, 1.0);
    let scale = [0.3, 0.6, 1.0][k % 3];
    if k % 4 == 0 {
        let c = uniform4(rng, -scale, scale);
        return GhzDiagonalState::new(a, c).to_xstate();
    }
    let b = uniform4(rng, 0.0, 1.0);
    let c = std::array::from_fn(|_| Complex64::from_polar(rng.random_range(0.0..scale), rng.random_range(0.0..TAU)));
    XState::new(a, b, c)
}

fn ppt_vs_eigen(cfg: &Config) -> Outcome {
    let n = cfg.size(1000, 10_000);
    let mut rng = cfg.rng(8);
    let (mut disagree, mut pos_disagree, mut ppt, mut positive) = (0, 0, 0, 0);
    for k in 0..n {
        let x = random_xstate(&mut rng, k);
        let closed = x.is_ppt();
        disagree += usize::from(closed != eigen_ppt_oracle(&x));
        pos_disagree += usize::from(x.is_positive() != eigen_positive(&x));
        ppt += usize::from(closed);
        positive += usize::from(x.is_positive());
    }
    (
        disagree == 0 && pos_disagree == 0 && ppt > 0 && ppt < n,
        format!(
            "{n} X-states ({positive} positive, {ppt} PPT): {disagree} PPT and {pos_disagree} positivity disagreements"
        ),
    )
}

fn witness_soundness(cfg: &Config) -> Outcome {
    let samples = cfg.size(2_000, 100_000);
    let mut rng = cfg.rng(9);
    let mut certs: Vec<(XState, WitnessCertificate)> = Vec::new();
    let take = |s: &GhzDiagonalState, certs: &mut Vec<(XState, WitnessCertificate)>| {
        if let Some(w) = decide(s).witness {
            certs.push((s.to_xstate(), w));
        }
    };
    for alpha in [2.0, 2.2, 2.5, 2.8] {
        take(&kay(alpha), &mut certs);
    }
    take(&GhzDiagonalState::ghz(), &mut certs);
    for w in [0.25, 0.5, 0.9] {
        take(&noisy_ghz(w), &mut certs);
    }
    let m = cfg.size(7, 21);
    for i in 0..m {
        for j in 0..m {
            take(
                &rho_pq(crate::sweep::grid_value(i, m), crate::sweep::grid_value(j, m)),
                &mut certs,
            );
        }
    }
    let target = certs.len() + cfg.size(10, 80);
    let mut tries = 0;
    while certs.len() < target && tries < 100_000 {
        tries += 1;
        let s = GhzDiagonalState::new(uniform4(&mut rng, 0.0, 1.0), uniform4(&mut rng, -1.0, 1.0));
        if s.is_positive() {
            take(&s, &mut certs);
        }
    }
    // General X-states: witnesses from the necessary-condition search.
    let general = cfg.size(2, 10);
    let mut found = 0;
    for k in 0..2000 {
        if found >= general {
            break;
        }
        let mut x = kay(rng.random_range(2.0..2.8)).to_xstate();
        x.b[k % 4] *= rng.random_range(0.9..1.1);
        let phase = Complex64::from_polar(1.0, rng.random_range(-0.2..0.2));
        x.c[0] *= phase;
        x.c[3] *= phase;
        if !x.is_positive() {
            continue;
        }
        if let Ok(r) = necessary_check(&x, 256, cfg.seed + k as u64) {
            if r.verdict == NecessaryVerdict::EntangledCertified {
                certs.push((x, r.witness.expect("certified checks carry a witness")));
                found += 1;
            }
        }
    }

    let (mut bad_witness, mut bad_pairing, mut bad_probe) = (0, 0, 0);
    let (mut min_probe, mut max_pairing) = (f64::INFINITY, f64::NEG_INFINITY);
    for (k, (rho, cert)) in certs.iter().enumerate() {
        bad_witness += usize::from(!is_witness(&cert.w));
        let p = pair(rho, &cert.w);
        max_pairing = max_pairing.max(p);
        bad_pairing += usize::from(!(p < 0.0 && cert.pairing_value < 0.0));
        let probe = product_probe(&cert.w, samples, cfg.seed ^ k as u64, cfg.exec);
        min_probe = min_probe.min(probe);
        bad_probe += usize::from(probe < -cfg.tol(1e-10));
    }
    (
        bad_witness == 0 && bad_pairing == 0 && bad_probe == 0 && found == general,
        format!(
            "{} witnesses ({found} from general X-states), {samples} product samples each: {bad_witness} not witnesses, {bad_pairing} non-negative pairings (max {max_pairing:.3e}), {bad_probe} probe violations (min probe {min_probe:.3e})",
            certs.len()
        ),
    )
}

fn f_max_search(cfg: &Config) -> Outcome {
    let n = cfg.size(60, 500);
    let mut rng = cfg.rng(10);
    let mut cases = [0usize; 3];
    let (mut under, mut over) = (0.0f64, f64::NEG_INFINITY);
    for k in 0..n {
        let c = uniform4(&mut rng, -1.0, 1.0);
        cases[classify_case_c(&c) as usize] += 1;
        let closed = maximize_f(&c).0;
        let oracle = f_max_oracle(&c, DEFAULT_STARTS, cfg.seed.wrapping_add(k as u64), cfg.exec);
        under = under.max(closed - oracle);
        over = over.max(oracle - closed);
    }
    (
        under <= cfg.tol(1e-4) && over <= cfg.tol(1e-6) && cases.iter().all(|&k| k > 0),
        format!(
            "{n} c (cases I/II/III: {}/{}/{}): oracle below f_max by at most {under:.2e}, above by at most {over:.2e}",
            cases[0], cases[1], cases[2]
        ),
    )
}

fn decomposition(cfg: &Config) -> Outcome {
    let n = cfg.size(3, 50);
    let tol = cfg.tol(1e-8);
    let mut rng = cfg.rng(11);
    let (mut ok, mut worst, mut max_atoms, mut cert_bad) = (0, 0.0f64, 0, 0);
    let mut sampled = 0;
    while sampled < n {
        let (p, q) = (rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
        let s = rho_pq(p, q);
        let v = decide(&s);
        // Strictly separable: min a clears f_max by 5% of min a.
        if !(v.separable && v.min_a - v.f_max >= 0.05 * v.min_a) {
            continue;
        }
        sampled += 1;
        match decompose(
            &s,
            DEFAULT_ATOM_BUDGET,
            tol,
            cfg.seed.wrapping_add(sampled as u64),
            cfg.exec,
        ) {
            Ok(Decomposition::Success(cert)) => {
                ok += 1;
                worst = worst.max(cert.residual);
                max_atoms = max_atoms.max(cert.atoms.len());
                let unit = |v: &[Complex64; 2]| (v[0].norm_sqr() + v[1].norm_sqr() - 1.0).abs() <= 1e-12;
                let recomputed = ghzsep::linalg::frobenius_distance(&cert.synthesize(), &s.to_xstate().to_dense());
                if cert
                    .atoms
                    .iter()
                    .any(|a| a.weight < 0.0 || !unit(&a.x) || !unit(&a.y) || !unit(&a.z))
                    || recomputed > cert.residual + 1e-15
                    || !s.is_ppt()
                {
                    cert_bad += 1;
                }
            }
            Ok(Decomposition::Inconclusive { residual, .. }) => worst = worst.max(residual),
            Err(_) => {}
        }
    }
    let mut entangled: Vec<GhzDiagonalState> = vec![GhzDiagonalState::ghz(), kay(2.5)];
    while entangled.len() < 2 + cfg.size(1, 10) {
        let s = rho_pq(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
        if !decide(&s).separable {
            entangled.push(s);
        }
    }
    let false_success = entangled
        .iter()
        .filter(|s| {
            matches!(
                decompose(s, DEFAULT_ATOM_BUDGET, 1e-8, cfg.seed, cfg.exec),
                Ok(Decomposition::Success(_))
            )
        })
        .count();
    (
        ok == n && cert_bad == 0 && false_success == 0,
        format!(
            "{ok}/{n} strictly separable points decomposed (max residual {worst:.2e}, at most {max_atoms} product atoms, {cert_bad} bad certificates); {} entangled inputs, {false_success} reported decomposable",
            entangled.len()
        ),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expected_tags_match_the_closed_form_examples() {
        assert_eq!(pq_expected(200, -200, 200), (Case::III, false));
        assert_eq!(pq_expected(160, 160, 200), (Case::I, true));
        assert_eq!(pq_expected(100, -200, 200), (Case::II, true));
        assert_eq!(pq_expected(0, 0, 200), (Case::I, true));
    }

    #[test]
    fn injected_fault_fails() {
        let cfg = Config {
            level: Level::Quick,
            tolerance_scale: 0.0,
            ..Config::default()
        };
        assert!(!run_suite(3, &cfg).passed);
    }
}
