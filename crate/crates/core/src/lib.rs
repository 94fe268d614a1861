//! Exact solver for the constrained bi-criteria pairwise-comparison rating
//! problem in max-times (tropical) algebra.
//!
//! Given two positive symmetrically reciprocal comparison matrices `A`, `B`
//! and a nonnegative constraint matrix `C`, the library computes the full
//! Pareto frontier of the bi-objective log-Chebyshev approximation problem
//!
//! ```text
//! minimize ( max_ij a_ij x_j / x_i ,  max_ij b_ij x_j / x_i )
//! subject to  max_j c_ij x_j <= x_i
//! ```
//!
//! together with all Pareto-optimal rating vectors in parametric generator
//! form. The frontier is either a single point or a piecewise power-law
//! segment `beta = G(alpha)`; at any frontier point the optimal vectors are
//! the column span of a Kleene star matrix.
//!
//! Modules, bottom up:
//!
//! - [`scalar`], [`matrix`]: the max-times semifield and its dense linear
//!   algebra.
//! - [`linsys`]: tropical determinant `Tr`, spectral radius, Kleene star,
//!   and the classic inequalities `Ax <= d` and `Ax <= x`.
//! - [`poly`], [`frontier`]: bivariate tropical polynomial expansion of
//!   `Tr(a⁻¹A ⊕ b⁻¹B ⊕ C)` and the exact frontier built from its upper
//!   envelope.
//! - [`decision`]: the pairwise-comparison layer (validation, solving,
//!   generator extraction, normalization).
//! - [`oracle`]: independent brute-force verifiers used by the test suites
//!   and the hidden CLI diagnostics.

pub mod decision;
mod error;
#[cfg(test)]
pub(crate) mod fixtures;
pub mod frontier;
pub mod linsys;
pub mod matrix;
pub mod oracle;
pub mod poly;
pub mod scalar;

pub use error::{Error, Result};
pub use frontier::{FrontierDescription, FrontierKind, FrontierPiece};
pub use linsys::StarMatrix;
pub use matrix::{TropMatrix, TropVector};
pub use poly::TropPoly2;
pub use scalar::TropScalar;

/// Default absolute comparison tolerance in log scale.
///
/// Frontier data involves irrational powers such as `24^(1/3)`, so every
/// equality and order test carries this slack.
pub const DEFAULT_TOL: f64 = 1e-9;

/// Largest matrix order accepted by the polynomial frontier expansion.
///
/// Beyond this the symbolic trace polynomial still terminates but its
/// monomial counts make the run time unattractive, so the cap is enforced
/// with an explicit error instead of silent slowness.
pub const DEFAULT_MAX_ORDER: usize = 24;

/// Rounds to `digits` significant decimal digits (half-even, via the
/// decimal representation). Non-finite values pass through.
pub fn round_sig(x: f64, digits: usize) -> f64 {
    if x == 0.0 || !x.is_finite() || digits == 0 {
        return x;
    }
    format!("{:.*e}", digits - 1, x).parse().unwrap_or(x)
}

/// Execution strategy for the data-parallel inner loops.
///
/// `Auto` picks the parallel path for large inputs when the `parallel`
/// feature is enabled. `Parallel` falls back to sequential execution when
/// the feature is compiled out, so the choice never changes results, only
/// scheduling.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ExecMode {
    #[default]
    Auto,
    Sequential,
    Parallel,
}
