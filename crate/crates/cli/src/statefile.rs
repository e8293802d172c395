//! JSON state files.
//!
//! ```json
//! {"ghz_weights": [1, 0, 0, 0, 0, 0, 0, 0]}
//! {"ghz_diagonal": {"a": [...], "c": [...]}}
//! {"x_state": {"a": [...], "b": [...], "c_re": [...], "c_im": [...]}}
//! ```

use std::path::Path;

use ghzsep::num_complex::Complex64;
use ghzsep::states::{GhzDiagonalState, GhzWeights, XState};
use ghzsep::witness::WitnessCertificate;
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum StateFile {
    GhzWeights([f64; 8]),
    GhzDiagonal { a: [f64; 4], c: [f64; 4] },
    XState(XStateFields),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct XStateFields {
    pub a: [f64; 4],
    pub b: [f64; 4],
    pub c_re: [f64; 4],
    pub c_im: [f64; 4],
}

impl From<&XState> for XStateFields {
    fn from(x: &XState) -> Self {
        XStateFields {
            a: x.a,
            b: x.b,
            c_re: x.c.map(|v| v.re),
            c_im: x.c.map(|v| v.im),
        }
    }
}

impl From<&XStateFields> for XState {
    fn from(f: &XStateFields) -> Self {
        XState::new(f.a, f.b, std::array::from_fn(|i| Complex64::new(f.c_re[i], f.c_im[i])))
    }
}

/// What the analysis runs on: the exact decider applies to GHZ-diagonal input,
/// general X-states only get the necessary-condition test.
#[derive(Debug, Clone, PartialEq)]
pub enum Input {
    GhzDiagonal(GhzDiagonalState),
    General(XState),
}

fn check_finite(field: &str, values: &[f64]) -> Result<(), CliError> {
    match values.iter().position(|v| !v.is_finite()) {
        Some(i) => Err(CliError::Parse(format!("field `{field}[{i}]` is not a finite number"))),
        None => Ok(()),
    }
}

impl StateFile {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let file: StateFile = serde_json::from_str(text).map_err(|e| CliError::Parse(format!("state file: {e}")))?;
        match &file {
            StateFile::GhzWeights(p) => check_finite("ghz_weights", p)?,
            StateFile::GhzDiagonal { a, c } => {
                check_finite("ghz_diagonal.a", a)?;
                check_finite("ghz_diagonal.c", c)?;
            }
            StateFile::XState(x) => {
                check_finite("x_state.a", &x.a)?;
                check_finite("x_state.b", &x.b)?;
                check_finite("x_state.c_re", &x.c_re)?;
                check_finite("x_state.c_im", &x.c_im)?;
            }
        }
        Ok(file)
    }

    pub fn read(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        Self::parse(&text).map_err(|e| match e {
            CliError::Parse(msg) => CliError::Parse(format!("{}: {msg}", path.display())),
            other => other,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("state files always serialize")
    }

    pub fn to_input(&self) -> Result<Input, CliError> {
        match self {
            StateFile::GhzWeights(p) => GhzDiagonalState::from_ghz_weights(&GhzWeights { p: *p })
                .map(Input::GhzDiagonal)
                .map_err(|e| CliError::Parse(format!("ghz_weights: {e}"))),
            StateFile::GhzDiagonal { a, c } => Ok(Input::GhzDiagonal(GhzDiagonalState::new(*a, *c))),
            StateFile::XState(f) => {
                let x = XState::from(f);
                Ok(match x.as_ghz_diagonal() {
                    Some(g) => Input::GhzDiagonal(g),
                    None => Input::General(x),
                })
            }
        }
    }
}

/// Output of the `witness` command: the witness as a state-file `x_state`
/// plus its pairing with the input and its boundary values.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WitnessFile {
    pub x_state: XStateFields,
    pub pairing_value: f64,
    pub a_value: f64,
    pub b_value: f64,
}

impl From<&WitnessCertificate> for WitnessFile {
    fn from(cert: &WitnessCertificate) -> Self {
        WitnessFile {
            x_state: XStateFields::from(&cert.w),
            pairing_value: cert.pairing_value,
            a_value: cert.a_value,
            b_value: cert.b_value,
        }
    }
}

impl WitnessFile {
    pub fn witness(&self) -> XState {
        XState::from(&self.x_state)
    }

    /// The witness alone, as a state file.
    pub fn as_state_file(&self) -> StateFile {
        StateFile::XState(self.x_state.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_each_variant() {
        let w = StateFile::parse(r#"{"ghz_weights": [1, 0, 0, 0, 0, 0, 0, 0]}"#).unwrap();
        assert_eq!(w.to_input().unwrap(), Input::GhzDiagonal(GhzDiagonalState::ghz()));
        let d = StateFile::parse(r#"{"ghz_diagonal": {"a": [1,1,1,1], "c": [0,0,0,0]}}"#).unwrap();
        assert!(matches!(d.to_input().unwrap(), Input::GhzDiagonal(_)));
        let x = StateFile::parse(
            r#"{"x_state": {"a": [1,1,1,1], "b": [1,1,1,1], "c_re": [0,0,0,0], "c_im": [0.5,0,0,0]}}"#,
        )
        .unwrap();
        assert!(matches!(x.to_input().unwrap(), Input::General(_)));
    }

    #[test]
    fn diagnostics_name_the_problem() {
        let e = StateFile::parse(r#"{"ghz_weights": [1, 2, 3]}"#)
            .unwrap_err()
            .to_string();
        assert!(e.contains("line 1") && e.contains("length"), "{e}");
        let e = StateFile::parse("{\n  \"ghz_diagonal\": {\"a\": [1,1,1,1]}\n}")
            .unwrap_err()
            .to_string();
        assert!(e.contains("missing field `c`"), "{e}");
        let e = StateFile::parse(r#"{"ghz_weights": [1, 0, 0, 0, 0, 0, 0, -1]}"#)
            .unwrap()
            .to_input()
            .unwrap_err();
        assert!(e.to_string().contains("negative"), "{e}");
        assert!(StateFile::parse(r#"{"ghz_weights": [1,0,0,0,0,0,0,0], "extra": 1}"#).is_err());
    }

    #[test]
    fn round_trips() {
        let f = StateFile::XState(XStateFields {
            a: [0.1, 0.2, 0.3, 0.4],
            b: [1.0 / 3.0, 0.25, 0.125, 0.0625],
            c_re: [0.1, -0.2, 0.0, 1e-300],
            c_im: [0.0, 0.3, -0.7, 2.5e-17],
        });
        assert_eq!(StateFile::parse(&f.to_json()).unwrap(), f);
    }
}
