//! `classify` reports.

use std::fmt::Write as _;

use ghzsep::decider::{decide, necessary_check, NecessaryCheck, NecessaryVerdict, Verdict};
use ghzsep::linalg::Subsystem;
use ghzsep::states::XState;
use ghzsep::witness::WitnessCertificate;
use serde::{Deserialize, Serialize};

use crate::statefile::Input;
use crate::CliError;

/// Random starts for the complex-`z` search on general X-states.
pub const NECESSARY_SAMPLES: usize = 4096;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ClassifyReport {
    GhzDiagonal {
        label: String,
        verdict: Verdict,
    },
    /// A non-GHZ-diagonal X-state: PPT is exact, entanglement beyond NPT is
    /// only detected when the necessary condition fails.
    General {
        label: String,
        positive: bool,
        ppt: bool,
        partial_transposes_positive: [bool; 3],
        npt_direction: Option<Subsystem>,
        necessary: Option<NecessaryCheck>,
    },
}

fn general_report(x: &XState, seed: u64) -> Result<ClassifyReport, CliError> {
    let positive = x.is_positive();
    let pts = x.partial_transposes_positive();
    let ppt = x.is_ppt();
    let npt_direction = if positive && !ppt {
        Subsystem::ALL.iter().zip(pts).find(|(_, ok)| !ok).map(|(s, _)| *s)
    } else {
        None
    };
    let necessary = if positive {
        Some(necessary_check(x, NECESSARY_SAMPLES, seed)?)
    } else {
        None
    };
    let certified = necessary
        .as_ref()
        .is_some_and(|n| n.verdict == NecessaryVerdict::EntangledCertified);
    let label = match (positive, ppt, certified) {
        (false, _, _) => "invalid-state",
        (true, false, _) => "npt-entangled",
        (true, true, true) => "ppt-entangled",
        (true, true, false) => "undetermined",
    };
    Ok(ClassifyReport::General {
        label: label.to_string(),
        positive,
        ppt,
        partial_transposes_positive: pts,
        npt_direction,
        necessary,
    })
}

pub fn classify(input: &Input, seed: u64) -> Result<ClassifyReport, CliError> {
    match input {
        Input::GhzDiagonal(s) => {
            let verdict = decide(s);
            Ok(ClassifyReport::GhzDiagonal {
                label: verdict.label().to_string(),
                verdict,
            })
        }
        Input::General(x) => general_report(x, seed),
    }
}

impl ClassifyReport {
    pub fn label(&self) -> &str {
        match self {
            ClassifyReport::GhzDiagonal { label, .. } | ClassifyReport::General { label, .. } => label,
        }
    }

    pub fn witness(&self) -> Option<&WitnessCertificate> {
        match self {
            ClassifyReport::GhzDiagonal { verdict, .. } => verdict.witness.as_ref(),
            ClassifyReport::General { necessary, .. } => necessary.as_ref().and_then(|n| n.witness.as_ref()),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let pts = |p: &[bool; 3]| format!("PT_A {}, PT_B {}, PT_C {}", p[0], p[1], p[2]);
        match self {
            ClassifyReport::GhzDiagonal { label, verdict: v } => {
                let _ = writeln!(out, "input        GHZ-diagonal");
                let _ = writeln!(out, "verdict      {label}");
                let _ = writeln!(out, "positive     {}", v.positive);
                let _ = writeln!(out, "ppt          {} ({})", v.ppt, pts(&v.partial_transposes_positive));
                if let Some(d) = v.npt_direction {
                    let _ = writeln!(out, "npt along    {d}");
                }
                let l = &v.lambda;
                let _ = writeln!(out, "lambda       ZZI {} ZIZ {} IZZ {}", l.zzi, l.ziz, l.izz);
                let _ = writeln!(
                    out,
                    "             XXX {} YYX {} YXY {} XYY {}",
                    l.xxx, l.yyx, l.yxy, l.xyy
                );
                let _ = writeln!(out, "t            {:?}", v.t.0);
                let _ = writeln!(out, "case         {}", v.case);
                let _ = writeln!(out, "f_max        {}", v.f_max);
                let _ = writeln!(out, "min a        {}", v.min_a);
                let _ = writeln!(out, "trace        {}", v.trace);
            }
            ClassifyReport::General {
                label,
                positive,
                ppt,
                partial_transposes_positive,
                npt_direction,
                necessary,
            } => {
                let _ = writeln!(out, "input        general X-state");
                let _ = writeln!(out, "verdict      {label}");
                let _ = writeln!(out, "positive     {positive}");
                let _ = writeln!(out, "ppt          {ppt} ({})", pts(partial_transposes_positive));
                if let Some(d) = npt_direction {
                    let _ = writeln!(out, "npt along    {d}");
                }
                if let Some(n) = necessary {
                    let _ = writeln!(out, "delta        {}", n.delta);
                    let _ = writeln!(out, "best L/C-Δ   {}", n.best_gap);
                    let _ = writeln!(out, "necessary    {:?}", n.verdict);
                }
            }
        }
        if let Some(w) = self.witness() {
            let _ = writeln!(
                out,
                "witness      pairing {} (A = {}, B = {})",
                w.pairing_value, w.a_value, w.b_value
            );
            let _ = writeln!(out, "  W.a        {:?}", w.w.a);
            let _ = writeln!(out, "  W.b        {:?}", w.w.b);
            let re: Vec<f64> = w.w.c.iter().map(|c| c.re).collect();
            let im: Vec<f64> = w.w.c.iter().map(|c| c.im).collect();
            let _ = writeln!(out, "  W.c re     {re:?}");
            let _ = writeln!(out, "  W.c im     {im:?}");
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ghzsep::states::GhzDiagonalState;

    #[test]
    fn json_round_trip_is_identical() {
        for s in [
            GhzDiagonalState::new([6.5, 2.5, 2.5, 2.5], [2.0, 2.0, -2.0, 2.0]),
            GhzDiagonalState::ghz(),
            GhzDiagonalState::maximally_mixed(),
            GhzDiagonalState::new([0.1, 0.3, 0.05, 0.2], [0.07, -0.02, 0.04, 0.011]),
        ] {
            let r = classify(&Input::GhzDiagonal(s), 0).unwrap();
            let back: ClassifyReport = serde_json::from_str(&r.to_json()).unwrap();
            assert_eq!(back, r);
        }
    }
}
