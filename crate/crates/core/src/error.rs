//! Error type shared by all library modules.

use crate::decision::Violation;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong below the CLI layer.
///
/// Domain failures (infeasible constraints, off-frontier parameters) are
/// ordinary variants so callers can map them to exit codes or messages;
/// none of them abort the process.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("shape mismatch: {left_rows}x{left_cols} vs {right_rows}x{right_cols}")]
    ShapeMismatch {
        left_rows: usize,
        left_cols: usize,
        right_rows: usize,
        right_cols: usize,
    },

    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: {left} vs {right}")]
    DimMismatch { left: usize, right: usize },

    #[error("matrix is not column-regular: column {col} has no positive entry")]
    NotColumnRegular { col: usize },

    #[error("vector must be regular (positive), entry {index} is zero")]
    NotRegular { index: usize },

    #[error("vector is identically zero")]
    ZeroVector,

    #[error("Kleene star undefined: Tr exceeds one by {excess:.3e} in log scale")]
    StarUndefined { excess: f64 },

    #[error("polynomial has no mixed terms in both variables")]
    NoMixedTerms,

    #[error("constraints admit no positive solution: Tr(C) exceeds one")]
    InfeasibleConstraints,

    #[error("objective matrix has zero spectral radius")]
    DegenerateObjective,

    #[error("alpha must lie in [{alpha_min}, {alpha_max}]")]
    NotOnFrontier { alpha_min: f64, alpha_max: f64 },

    #[error("order {order} exceeds the supported maximum {max}")]
    OrderCapExceeded { order: usize, max: usize },

    #[error("index out of range: {what}")]
    IndexOutOfRange { what: String },

    #[error("grid of {points} points exceeds the budget of {budget}")]
    GridTooLarge { points: u128, budget: u128 },

    #[error("invalid problem: {}", format_violations(.violations))]
    InvalidProblem { violations: Vec<Violation> },
}

fn format_violations(violations: &[Violation]) -> String {
    let head: Vec<String> = violations.iter().take(3).map(|v| v.to_string()).collect();
    let mut text = head.join("; ");
    if violations.len() > 3 {
        text.push_str(&format!("; and {} more", violations.len() - 3));
    }
    text
}
