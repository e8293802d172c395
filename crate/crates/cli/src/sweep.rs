//! The `ρ_{p,q}` plane sweep.

use std::io::{Read, Write};

use ghzsep::decider::{decide, rho_pq, Case};
use ghzsep::exec::{map_range, Execution};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRecord {
    pub p: f64,
    pub q: f64,
    pub case: Case,
    pub positive: bool,
    pub ppt: bool,
    pub separable: bool,
    pub f_max: f64,
}

/// `i`-th of `n` equally spaced points on `[-1, 1]`, endpoints exact.
pub fn grid_value(i: usize, n: usize) -> f64 {
    let d = (n - 1) as f64;
    (2.0 * i as f64 - d) / d
}

/// Row-major over `(p, q)`: `p` outer, `q` inner.
pub fn sweep(n: usize, exec: Execution) -> Vec<SweepRecord> {
    map_range(exec, n * n, |k| {
        let (p, q) = (grid_value(k / n, n), grid_value(k % n, n));
        let v = decide(&rho_pq(p, q));
        SweepRecord {
            p,
            q,
            case: v.case,
            positive: v.positive,
            ppt: v.ppt,
            separable: v.separable,
            f_max: v.f_max,
        }
    })
}

pub fn write_csv<W: Write>(records: &[SweepRecord], out: W) -> Result<(), CliError> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out);
    for r in records {
        w.serialize(r).map_err(|e| CliError::Parse(format!("csv: {e}")))?;
    }
    w.flush().map_err(|e| CliError::Parse(format!("csv: {e}")))
}

pub fn read_csv<R: Read>(input: R) -> Result<Vec<SweepRecord>, CliError> {
    csv::Reader::from_reader(input)
        .deserialize()
        .collect::<Result<Vec<SweepRecord>, _>>()
        .map_err(|e| CliError::Parse(format!("csv: {e}")))
}
