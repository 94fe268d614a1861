//! Shared fixtures and random generators for the integration suites.
#![allow(dead_code)] // each suite uses its own subset

use rand::rngs::StdRng;
use rand::Rng;
use tropirank_core::decision::DecisionProblem;
use tropirank_core::{TropMatrix, TropScalar, TropVector};

pub fn mat(rows: &[Vec<f64>]) -> TropMatrix {
    TropMatrix::from_values(rows).unwrap()
}

/// The worked 2x2 problem: reciprocal A, B and one upper-triangular bound.
pub fn small_problem() -> (TropMatrix, TropMatrix, TropMatrix) {
    (
        mat(&[vec![1.0, 2.0], vec![0.5, 1.0]]),
        mat(&[vec![1.0, 1.0 / 3.0], vec![3.0, 1.0]]),
        mat(&[vec![0.0, 1.0], vec![0.0, 0.0]]),
    )
}

/// The worked 4x4 problem with the single constraint x4 <= x2.
pub fn four_problem() -> (TropMatrix, TropMatrix, TropMatrix) {
    let a = mat(&[
        vec![1.0, 3.0, 4.0, 2.0],
        vec![1.0 / 3.0, 1.0, 0.5, 1.0 / 3.0],
        vec![0.25, 2.0, 1.0, 4.0],
        vec![0.5, 3.0, 0.25, 1.0],
    ]);
    let b = mat(&[
        vec![1.0, 2.0, 4.0, 2.0],
        vec![0.5, 1.0, 1.0 / 3.0, 0.5],
        vec![0.25, 3.0, 1.0, 4.0],
        vec![0.5, 2.0, 0.25, 1.0],
    ]);
    let mut c = TropMatrix::zeros(4, 4);
    c.set(1, 3, TropScalar::ONE);
    (a, b, c)
}

/// Positive reciprocal comparison matrix with off-diagonal ratios in
/// `[1/scale, scale]`; reciprocity is exact in log scale.
pub fn random_reciprocal(n: usize, scale: f64, rng: &mut StdRng) -> TropMatrix {
    let bound = scale.ln();
    let mut m = TropMatrix::identity(n);
    for i in 0..n {
        for j in i + 1..n {
            let log = rng.random_range(-bound..bound);
            m.set(i, j, TropScalar::from_log(log));
            m.set(j, i, TropScalar::from_log(-log));
        }
    }
    m
}

/// Sparse constraint matrix with entries in `(0, 1]`; every cycle weight is
/// then at most 1, so `Tr(C) <= 1` holds by construction.
pub fn random_constraints(n: usize, density: f64, rng: &mut StdRng) -> TropMatrix {
    let mut c = TropMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            if i != j && rng.random_range(0.0..1.0) < density {
                c.set(i, j, TropScalar::from_log(rng.random_range(-2.0..=0.0)));
            }
        }
    }
    c
}

/// Dense positive matrix with log entries in `[-range, range]`.
pub fn random_positive(n: usize, range: f64, rng: &mut StdRng) -> TropMatrix {
    TropMatrix::from_fn(n, n, |_, _| {
        TropScalar::from_log(rng.random_range(-range..range))
    })
}

/// Positive matrix where each entry is zero with probability `zero_prob`.
pub fn random_sparse(n: usize, range: f64, zero_prob: f64, rng: &mut StdRng) -> TropMatrix {
    TropMatrix::from_fn(n, n, |_, _| {
        if rng.random_range(0.0..1.0) < zero_prob {
            TropScalar::ZERO
        } else {
            TropScalar::from_log(rng.random_range(-range..range))
        }
    })
}

pub fn random_regular_vector(n: usize, range: f64, rng: &mut StdRng) -> TropVector {
    TropVector::from_scalars(
        (0..n)
            .map(|_| TropScalar::from_log(rng.random_range(-range..range)))
            .collect(),
    )
}

/// A random valid decision problem of order `n`.
pub fn random_problem(n: usize, rng: &mut StdRng) -> DecisionProblem {
    let a = random_reciprocal(n, 9.0, rng);
    let b = random_reciprocal(n, 9.0, rng);
    let c = random_constraints(n, 0.35, rng);
    DecisionProblem::new(None, a, b, Some(c)).expect("generated problems are valid")
}
