//! Nonlinear sequence transformations for convergence acceleration and the
//! summation of divergent series.
//!
//! Every transform takes a [`SequenceSample`] and produces a table of
//! approximants `T_k^(n)`; entries whose recursion hit a vanishing
//! denominator are marked invalid instead of carrying a number.

pub mod classic;
pub mod error;
#[cfg(feature = "extended")]
pub mod extended;
pub mod guard;
pub mod interpolatory;
pub mod levin;
mod linalg;
pub mod pade;
pub mod reference;
mod rhombus;
pub mod sample;
pub mod scalar;
pub mod table;

pub use error::{Error, Result};
pub use guard::GuardPolicy;
pub use rhombus::EvenOrderTable;
pub use sample::{classify_convergence, make_partial_sums, Convergence, SequenceSample};
pub use scalar::{rel_diff, Scalar};
pub use table::{extract_path, PathCell, PathEntry, PathSpec, TransformTable};
