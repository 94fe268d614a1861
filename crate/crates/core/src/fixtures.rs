//! Shared matrices for the in-crate unit tests: the worked two-alternative
//! and four-alternative rating problems with their known intermediate
//! values.

use crate::matrix::TropMatrix;

pub fn mat(rows: &[Vec<f64>]) -> TropMatrix {
    TropMatrix::from_values(rows).unwrap()
}

/// 2x2 problem: A, B reciprocal, C upper triangular with c_12 = 1.
pub fn small_problem() -> (TropMatrix, TropMatrix, TropMatrix) {
    (
        mat(&[vec![1.0, 2.0], vec![0.5, 1.0]]),
        mat(&[vec![1.0, 1.0 / 3.0], vec![3.0, 1.0]]),
        mat(&[vec![0.0, 1.0], vec![0.0, 0.0]]),
    )
}

/// 4x4 problem: two comparison matrices plus the single constraint x4 <= x2.
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
    c.set(1, 3, crate::scalar::TropScalar::ONE);
    (a, b, c)
}
