//! Sequence machinery for ultrametric approximation schemes.
//!
//! - [`SequenceSpec`] and [`JumpSpec`] describe a target rate `ε_n` and a
//!   jump function `K` (or `h`) through a small text grammar.
//! - [`regularize`] replaces `ε` by a plateau sequence `ξ >= ε` that loses at
//!   most a factor 2 along `h`.
//! - [`dichotomy`] holds the recurrence `r_{s+1} = 2(r_s - 1)`, the stretched
//!   exponential rate bound and the product inequality checker.

pub mod dichotomy;
pub mod regularize;
pub mod sequence;

pub use dichotomy::{
    dichotomy_bound, dichotomy_cascade, dichotomy_recurrence, product_inequality_check, rate_exponent,
    CascadeStep, DichotomyTrace, ExponentBound,
};
pub use regularize::{
    check_jump_condition, regularize, sanitize_jump, uniform_bound_violations, Plateau, RegularizedSequence,
};
pub use sequence::{JumpSpec, Sequence, SequenceSpec};
