//! Exact separability classification for three-qubit GHZ-diagonal states.
//!
//! A GHZ-diagonal state is an X-shaped 8×8 density matrix `X(a, a, c)` with a
//! real anti-diagonal. This crate decides in closed form whether such a state
//! is separable, PPT-entangled or NPT-entangled, and attaches an explicit
//! entanglement witness to every entangled verdict.
//!
//! Every closed form is paired with a brute-force oracle in [`oracle`]:
//! angle-grid evaluation of `C(z)`, multi-start maximization of `f`, dense
//! eigenvalue PPT checks, Monte-Carlo product-state probing of witnesses and a
//! best-effort explicit separable decomposition.
//!
//! ```
//! use ghzsep::{decider, states::GhzDiagonalState};
//!
//! // Kay's family: PPT for α ≥ 2 but separable only for α ≥ 2√2.
//! let alpha = 2.5;
//! let state = GhzDiagonalState::new([4.0 + alpha, alpha, alpha, alpha], [2.0, 2.0, -2.0, 2.0]);
//! let verdict = decider::decide(&state);
//! assert!(verdict.ppt && !verdict.separable);
//! assert!(verdict.witness.unwrap().pairing_value < 0.0);
//! ```

#![allow(clippy::needless_range_loop)]

pub mod decider;
mod error;
pub mod exec;
pub mod linalg;
pub mod oracle;
pub mod search;
pub mod states;
pub mod witness;

pub use error::{Error, Result};
pub use exec::Execution;
pub use num_complex;
