//! Tropical linear inequalities and closures.
//!
//! The key quantity is the determinant analogue `Tr(A) = tr A ⊕ … ⊕ tr Aⁿ`:
//! the inequality `Ax <= x` has regular solutions exactly when `Tr(A) <= 1`,
//! and then the solution set is the column span of the Kleene star
//! `A* = I ⊕ A ⊕ … ⊕ A^(n-1)`.

use crate::error::{Error, Result};
use crate::matrix::{TropMatrix, TropVector};
use crate::scalar::TropScalar;

/// A matrix together with its Kleene star.
///
/// Construction goes through [`kleene_star`], which checks `Tr(base) <= 1`;
/// holding both sides keeps the provenance of a generator matrix explicit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarMatrix {
    base: TropMatrix,
    star: TropMatrix,
}

impl StarMatrix {
    pub fn base(&self) -> &TropMatrix {
        &self.base
    }

    pub fn star(&self) -> &TropMatrix {
        &self.star
    }

    pub fn into_star(self) -> TropMatrix {
        self.star
    }
}

/// Tropical determinant analogue `Tr(A) = tr A ⊕ tr A² ⊕ … ⊕ tr Aⁿ`.
pub fn tr_det(a: &TropMatrix) -> Result<TropScalar> {
    let n = a.order()?;
    let mut acc = TropScalar::ZERO;
    let mut power = a.clone();
    for k in 1..=n {
        acc = acc.oplus(power.trace()?);
        if k < n {
            power = power.mul(a)?;
        }
    }
    Ok(acc)
}

/// Spectral radius `λ = ⊕_k tr^(1/k)(Aᵏ)`, the maximum geometric cycle mean.
pub fn spectral_radius(a: &TropMatrix) -> Result<TropScalar> {
    let n = a.order()?;
    let mut acc = TropScalar::ZERO;
    let mut power = a.clone();
    for k in 1..=n {
        let tr = power.trace()?;
        if !tr.is_zero() {
            acc = acc.oplus(tr.powf(1.0 / k as f64));
        }
        if k < n {
            power = power.mul(a)?;
        }
    }
    Ok(acc)
}

/// Kleene star `A* = I ⊕ A ⊕ … ⊕ A^(n-1)`, defined when `Tr(A) <= 1`.
///
/// The boundary `Tr(A) = 1` is legitimate and common, so the check allows a
/// log-scale slack of `tol`.
pub fn kleene_star(a: &TropMatrix, tol: f64) -> Result<StarMatrix> {
    let n = a.order()?;
    let tr = tr_det(a)?;
    if !tr.leq(TropScalar::ONE, tol) {
        return Err(Error::StarUndefined { excess: tr.log() });
    }
    let mut star = TropMatrix::identity(n);
    let mut power = TropMatrix::identity(n);
    for _ in 1..n {
        power = power.mul(a)?;
        star = star.add(&power)?;
    }
    Ok(StarMatrix {
        base: a.clone(),
        star,
    })
}

/// Maximal solution of `Ax <= d`: `x̄ = (d‾A)‾`.
///
/// Every `x <= x̄` solves the inequality and conversely. Requires `A`
/// column-regular and `d` regular.
pub fn solve_upper(a: &TropMatrix, d: &TropVector) -> Result<TropVector> {
    if let Some(col) = a.first_irregular_column() {
        return Err(Error::NotColumnRegular { col });
    }
    if a.rows() != d.dim() {
        return Err(Error::DimMismatch {
            left: a.rows(),
            right: d.dim(),
        });
    }
    if let Some(index) = d.first_zero_entry() {
        return Err(Error::NotRegular { index });
    }
    // (d‾A)_j = max_i a_ij / d_i; conjugating gives the componentwise bound.
    let bound = (0..a.cols())
        .map(|j| {
            let row_max = (0..a.rows())
                .map(|i| a.get(i, j).otimes(d.get(i).inverse().expect("d regular")))
                .fold(TropScalar::ZERO, TropScalar::oplus);
            row_max.inverse().expect("column-regular")
        })
        .collect();
    Ok(TropVector::from_scalars(bound))
}

/// Whether `Ax <= x` has regular solutions, i.e. `Tr(A) <= 1` within `tol`.
///
/// When true, the full solution set is `{A* u : u regular}`.
pub fn regular_solutions_exist(a: &TropMatrix, tol: f64) -> Result<bool> {
    Ok(tr_det(a)?.leq(TropScalar::ONE, tol))
}
