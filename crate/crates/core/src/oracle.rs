//! Independent brute-force verifiers.
//!
//! Everything here is deliberately naive: direct enumeration of the trace
//! words behind the σ/θ and `r_{k,l,m}` scalars, the binomial trace
//! identity, a Karp-style maximum cycle mean, and a grid-search Pareto
//! oracle over rating vectors. The production path never calls into this
//! module; tests cross-check the two against each other.

use std::collections::BTreeMap;

use crate::decision::DecisionProblem;
use crate::error::{Error, Result};
use crate::linsys::tr_det;
use crate::matrix::TropMatrix;
use crate::scalar::TropScalar;
use crate::ExecMode;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Order cap for the word enumerations; weak-composition counts explode
/// beyond this.
pub const ORACLE_MAX_ORDER: usize = 8;

/// Point budget for the grid oracle.
pub const GRID_BUDGET: u128 = 20_000_000;

/// Grid-search parameters: `points_per_axis` log-even points on
/// `[-log_range, log_range]` per free coordinate, with the first coordinate
/// pinned to 1 when `fixed_first` is set.
///
/// Cost is `points_per_axis^(n-1)`, so the defaults are practical only for
/// `n <= 4`.
#[derive(Clone, Copy, Debug)]
pub struct GridSpec {
    pub points_per_axis: usize,
    pub log_range: f64,
    pub fixed_first: bool,
}

impl Default for GridSpec {
    fn default() -> GridSpec {
        GridSpec {
            points_per_axis: 61,
            log_range: 3.0,
            fixed_first: true,
        }
    }
}

impl GridSpec {
    /// Log distance between neighbouring grid values on one axis.
    pub fn log_step(&self) -> f64 {
        2.0 * self.log_range / (self.points_per_axis - 1) as f64
    }
}

fn check_cap(n: usize) -> Result<()> {
    if n > ORACLE_MAX_ORDER {
        return Err(Error::OrderCapExceeded {
            order: n,
            max: ORACLE_MAX_ORDER,
        });
    }
    Ok(())
}

/// Calls `f` with every weak composition of `total` into `parts` parts.
fn for_each_composition(total: usize, parts: usize, f: &mut impl FnMut(&[usize])) {
    fn rec(
        buf: &mut Vec<usize>,
        remaining: usize,
        parts_left: usize,
        f: &mut impl FnMut(&[usize]),
    ) {
        if parts_left == 1 {
            buf.push(remaining);
            f(buf);
            buf.pop();
            return;
        }
        for head in 0..=remaining {
            buf.push(head);
            rec(buf, remaining - head, parts_left - 1, f);
            buf.pop();
        }
    }
    let mut buf = Vec::with_capacity(parts);
    rec(&mut buf, total, parts, f);
}

fn matrix_powers(a: &TropMatrix, up_to: usize) -> Result<Vec<TropMatrix>> {
    let n = a.order()?;
    let mut pows = vec![TropMatrix::identity(n)];
    for k in 1..=up_to {
        pows.push(pows[k - 1].mul(a)?);
    }
    Ok(pows)
}

/// Trace of `A^{i_1} X_1 A^{i_2} X_2 … A^{i_k} X_k`.
fn word_trace(a_pows: &[TropMatrix], factors: &[&TropMatrix], comp: &[usize]) -> TropScalar {
    let mut acc = a_pows[comp[0]].mul(factors[0]).expect("square factors");
    for (i, factor) in factors.iter().enumerate().skip(1) {
        acc = acc.mul(&a_pows[comp[i]]).expect("square factors");
        acc = acc.mul(factor).expect("square factors");
    }
    acc.trace().expect("square word")
}

/// Direct evaluation of the constraint-interaction scalar
/// `σ = ⊕_k ⊕_m ⊕_{i_1+…+i_k=m} tr^{1/m}(A^{i_1}C … A^{i_k}C)` by explicit
/// enumeration of all weak compositions. Pass `B, C` for θ.
pub fn enum_sigma_theta(a: &TropMatrix, c: &TropMatrix) -> Result<TropScalar> {
    let n = a.order()?;
    check_cap(n)?;
    if c.order()? != n {
        return Err(Error::DimMismatch {
            left: n,
            right: c.rows(),
        });
    }
    let a_pows = matrix_powers(a, n)?;
    let mut best = TropScalar::ZERO;
    for k in 1..n {
        let factors: Vec<&TropMatrix> = vec![c; k];
        for m in 1..=n - k {
            for_each_composition(m, k, &mut |comp| {
                let tr = word_trace(&a_pows, &factors, comp);
                if !tr.is_zero() {
                    best = best.oplus(tr.powf(1.0 / m as f64));
                }
            });
        }
    }
    Ok(best)
}

/// Direct evaluation of `r_{k,l,m}`: the max trace over all words
/// `A^{i_1} X_1 … A^{i_k} X_k` with `i_1+…+i_k = m` and exactly `l` of the
/// `X` factors equal to `B`, the rest `C`.
pub fn enum_rklm(
    a: &TropMatrix,
    b: &TropMatrix,
    c: &TropMatrix,
    k: usize,
    l: usize,
    m: usize,
) -> Result<TropScalar> {
    let n = a.order()?;
    check_cap(n)?;
    if !(1..n).contains(&k) || !(1..=k).contains(&l) || !(1..=n - k).contains(&m) {
        return Err(Error::IndexOutOfRange {
            what: format!("(k, l, m) = ({k}, {l}, {m}) for order {n}"),
        });
    }
    let a_pows = matrix_powers(a, n)?;
    let mut best = TropScalar::ZERO;
    for mask in 0u32..(1 << k) {
        if mask.count_ones() as usize != l {
            continue;
        }
        let factors: Vec<&TropMatrix> = (0..k)
            .map(|slot| if mask >> slot & 1 == 1 { b } else { c })
            .collect();
        for_each_composition(m, k, &mut |comp| {
            best = best.oplus(word_trace(&a_pows, &factors, comp));
        });
    }
    Ok(best)
}

/// Max trace of every nonempty word over `{A, B, C}` up to length `n`,
/// bucketed by `(number of A factors, number of B factors)`. Buckets with
/// zero trace are omitted. This is the fully expanded counterpart of the
/// polynomial trace expansion.
pub fn enum_all_word_traces(
    a: &TropMatrix,
    b: &TropMatrix,
    c: &TropMatrix,
) -> Result<BTreeMap<(u32, u32), TropScalar>> {
    let n = a.order()?;
    check_cap(n)?;
    let mut buckets = BTreeMap::new();
    // words as base-3 digit strings, one product per word
    for len in 1..=n {
        let count = 3usize.pow(len as u32);
        for code in 0..count {
            let mut word = TropMatrix::identity(n);
            let mut rem = code;
            let mut m = 0u32;
            let mut l = 0u32;
            for _ in 0..len {
                let digit = rem % 3;
                rem /= 3;
                let factor = match digit {
                    0 => {
                        m += 1;
                        a
                    }
                    1 => {
                        l += 1;
                        b
                    }
                    _ => c,
                };
                word = word.mul(factor)?;
            }
            let tr = word.trace()?;
            if !tr.is_zero() {
                buckets
                    .entry((m, l))
                    .and_modify(|best: &mut TropScalar| *best = best.oplus(tr))
                    .or_insert(tr);
            }
        }
    }
    Ok(buckets)
}

/// Verifies the binomial trace identity: `Tr(A ⊕ B)` computed directly
/// equals `Tr(A) ⊕ (mixed word traces) ⊕ Tr(B)`.
pub fn check_trace_binomial(a: &TropMatrix, b: &TropMatrix, tol: f64) -> Result<bool> {
    let n = a.order()?;
    check_cap(n)?;
    let lhs = tr_det(&a.add(b)?)?;
    let a_pows = matrix_powers(a, n)?;
    let mut rhs = tr_det(a)?.oplus(tr_det(b)?);
    for k in 1..n {
        let factors: Vec<&TropMatrix> = vec![b; k];
        for m in 1..=n - k {
            for_each_composition(m, k, &mut |comp| {
                rhs = rhs.oplus(word_trace(&a_pows, &factors, comp));
            });
        }
    }
    Ok(lhs.approx_eq(rhs, tol))
}

/// Maximum geometric cycle mean by a Karp-style dynamic program over walk
/// lengths `0..n` with all-vertex sources. Returns zero for acyclic
/// matrices.
pub fn karp_radius(a: &TropMatrix) -> Result<TropScalar> {
    let n = a.order()?;
    let mut levels = Vec::with_capacity(n + 1);
    levels.push(vec![0.0f64; n]);
    for k in 1..=n {
        let prev = &levels[k - 1];
        let mut next = vec![f64::NEG_INFINITY; n];
        for (u, &du) in prev.iter().enumerate() {
            if du == f64::NEG_INFINITY {
                continue;
            }
            for (v, slot) in next.iter_mut().enumerate() {
                let w = a.get(u, v).log();
                if w == f64::NEG_INFINITY {
                    continue;
                }
                let cand = du + w;
                if cand > *slot {
                    *slot = cand;
                }
            }
        }
        levels.push(next);
    }
    let mut radius = f64::NEG_INFINITY;
    for v in 0..n {
        let full = levels[n][v];
        if full == f64::NEG_INFINITY {
            continue;
        }
        let mut worst = f64::INFINITY;
        for (j, level) in levels.iter().enumerate().take(n) {
            if level[v] == f64::NEG_INFINITY {
                continue;
            }
            worst = worst.min((full - level[v]) / (n - j) as f64);
        }
        radius = radius.max(worst);
    }
    Ok(if radius == f64::NEG_INFINITY {
        TropScalar::ZERO
    } else {
        TropScalar::from_log(radius)
    })
}

/// Enumerates rating vectors on the log grid, keeps the feasible ones
/// (`Cx <= x`), and returns the nondominated objective pairs, sorted by α.
pub fn grid_pareto(
    problem: &DecisionProblem,
    grid: &GridSpec,
) -> Result<Vec<(TropScalar, TropScalar)>> {
    grid_pareto_with(problem, grid, ExecMode::Auto)
}

/// [`grid_pareto`] with an explicit execution mode. Shards are merged by a
/// full sort before the dominance sweep, so scheduling never changes the
/// result.
pub fn grid_pareto_with(
    problem: &DecisionProblem,
    grid: &GridSpec,
    mode: ExecMode,
) -> Result<Vec<(TropScalar, TropScalar)>> {
    assert!(
        grid.points_per_axis >= 3,
        "grid needs at least 3 points per axis"
    );
    let n = problem.order();
    let axes = n - usize::from(grid.fixed_first);
    let total = (grid.points_per_axis as u128).pow(axes as u32);
    if total > GRID_BUDGET {
        return Err(Error::GridTooLarge {
            points: total,
            budget: GRID_BUDGET,
        });
    }
    let total = total as usize;

    let a_log: Vec<f64> = problem.a().entries().iter().map(|e| e.log()).collect();
    let b_log: Vec<f64> = problem.b().entries().iter().map(|e| e.log()).collect();
    let c_log: Vec<f64> = problem.c().entries().iter().map(|e| e.log()).collect();
    let ppa = grid.points_per_axis;
    let step = grid.log_step();
    let lo = -grid.log_range;

    let eval_range = |range: std::ops::Range<usize>| -> Vec<(f64, f64)> {
        let mut x = vec![0.0f64; n];
        let mut out = Vec::new();
        'point: for idx in range {
            let mut rem = idx;
            let offset = usize::from(grid.fixed_first);
            if grid.fixed_first {
                x[0] = 0.0;
            }
            for axis in 0..axes {
                x[axis + offset] = lo + step * (rem % ppa) as f64;
                rem /= ppa;
            }
            // feasibility: max_j c_ij x_j <= x_i
            for i in 0..n {
                for j in 0..n {
                    let c = c_log[i * n + j];
                    if c != f64::NEG_INFINITY && c + x[j] > x[i] + 1e-12 {
                        continue 'point;
                    }
                }
            }
            let mut alpha = f64::NEG_INFINITY;
            let mut beta = f64::NEG_INFINITY;
            for i in 0..n {
                for j in 0..n {
                    let shift = x[j] - x[i];
                    let av = a_log[i * n + j];
                    if av != f64::NEG_INFINITY && av + shift > alpha {
                        alpha = av + shift;
                    }
                    let bv = b_log[i * n + j];
                    if bv != f64::NEG_INFINITY && bv + shift > beta {
                        beta = bv + shift;
                    }
                }
            }
            out.push((alpha, beta));
        }
        out
    };

    let run_parallel = match mode {
        ExecMode::Sequential => false,
        ExecMode::Parallel => cfg!(feature = "parallel"),
        ExecMode::Auto => cfg!(feature = "parallel") && total >= 10_000,
    };
    let mut pairs: Vec<(f64, f64)> = if run_parallel {
        eval_sharded(total, &eval_range)
    } else {
        eval_range(0..total)
    };

    pairs.sort_unstable_by(|p, q| p.0.total_cmp(&q.0).then(p.1.total_cmp(&q.1)));
    pairs.dedup();
    let mut frontier = Vec::new();
    let mut best_beta = f64::INFINITY;
    for (alpha, beta) in pairs {
        if beta < best_beta {
            best_beta = beta;
            frontier.push((TropScalar::from_log(alpha), TropScalar::from_log(beta)));
        }
    }
    Ok(frontier)
}

#[cfg(feature = "parallel")]
fn eval_sharded(
    total: usize,
    eval_range: &(impl Fn(std::ops::Range<usize>) -> Vec<(f64, f64)> + Sync),
) -> Vec<(f64, f64)> {
    let shard = (total / (8 * rayon::current_num_threads().max(1))).max(1024);
    (0..total.div_ceil(shard))
        .into_par_iter()
        .flat_map_iter(|chunk| eval_range(chunk * shard..((chunk + 1) * shard).min(total)))
        .collect()
}

#[cfg(not(feature = "parallel"))]
fn eval_sharded(
    total: usize,
    eval_range: &(impl Fn(std::ops::Range<usize>) -> Vec<(f64, f64)> + Sync),
) -> Vec<(f64, f64)> {
    eval_range(0..total)
}
