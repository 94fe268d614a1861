//! Bivariate tropical polynomials in `α⁻¹` and `β⁻¹`, and the symbolic
//! expansion of `Tr(α⁻¹A ⊕ β⁻¹B ⊕ C)` into one.
//!
//! The expansion multiplies matrices whose entries are polynomials: the
//! symbolic base matrix holds `{α⁻¹ a_ij, β⁻¹ b_ij, c_ij}` and its `k`-th
//! power collects every length-`k` word over `{A, B, C}`. Exponent pairs
//! `(m, l)` count the `A` and `B` factors of a word, so every monomial of
//! `Tr` satisfies `m + l <= n` and the polynomial stays polynomially sized
//! even though the number of contributing words is combinatorial.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::matrix::TropMatrix;
use crate::scalar::TropScalar;
use crate::{ExecMode, DEFAULT_MAX_ORDER};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// A tropical polynomial `p(α, β) = ⊕ coeff · α^{-m} β^{-l}` with finitely
/// many monomials, duplicates merged by max.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TropPoly2 {
    order: usize,
    monomials: BTreeMap<(u32, u32), TropScalar>,
}

impl TropPoly2 {
    /// Order `n` of the matrices the polynomial was expanded from; all
    /// exponents satisfy `m + l <= n`.
    pub fn order(&self) -> usize {
        self.order
    }

    /// Coefficient at `(m, l)`; absent monomials are zero.
    pub fn coeff(&self, m: u32, l: u32) -> TropScalar {
        self.monomials
            .get(&(m, l))
            .copied()
            .unwrap_or(TropScalar::ZERO)
    }

    /// All monomials in sorted exponent order.
    pub fn monomials(&self) -> impl Iterator<Item = (u32, u32, TropScalar)> + '_ {
        self.monomials.iter().map(|(&(m, l), &c)| (m, l, c))
    }

    /// Monomials with both exponents positive.
    pub fn mixed_monomials(&self) -> impl Iterator<Item = (u32, u32, TropScalar)> + '_ {
        self.monomials().filter(|&(m, l, _)| m >= 1 && l >= 1)
    }

    pub fn has_mixed_terms(&self) -> bool {
        self.mixed_monomials().next().is_some()
    }

    /// The parameter lower bounds `(λ⊕σ, μ⊕θ)` read off the pure monomials:
    /// `⊕_m coeff(m,0)^{1/m}` and `⊕_l coeff(0,l)^{1/l}`.
    pub fn bounds(&self) -> (TropScalar, TropScalar) {
        let mut alpha = TropScalar::ZERO;
        let mut beta = TropScalar::ZERO;
        for (m, l, c) in self.monomials() {
            if l == 0 && m >= 1 {
                alpha = alpha.oplus(c.powf(1.0 / m as f64));
            } else if m == 0 && l >= 1 {
                beta = beta.oplus(c.powf(1.0 / l as f64));
            }
        }
        (alpha, beta)
    }

    /// `G(s) = ⊕ coeff(m,l)^{1/l} s^{-m/l}` over the mixed monomials.
    pub fn eval_g(&self, s: TropScalar) -> Result<TropScalar> {
        assert!(!s.is_zero(), "G is defined for positive arguments only");
        let mut best = TropScalar::ZERO;
        let mut seen = false;
        for (m, l, c) in self.mixed_monomials() {
            seen = true;
            let v = (c.log() - m as f64 * s.log()) / l as f64;
            best = best.oplus(TropScalar::from_log(v));
        }
        if seen {
            Ok(best)
        } else {
            Err(Error::NoMixedTerms)
        }
    }

    /// `H(t) = ⊕ coeff(m,l)^{1/m} t^{-l/m}`, the inverse of `G`.
    pub fn eval_h(&self, t: TropScalar) -> Result<TropScalar> {
        assert!(!t.is_zero(), "H is defined for positive arguments only");
        let mut best = TropScalar::ZERO;
        let mut seen = false;
        for (m, l, c) in self.mixed_monomials() {
            seen = true;
            let v = (c.log() - l as f64 * t.log()) / m as f64;
            best = best.oplus(TropScalar::from_log(v));
        }
        if seen {
            Ok(best)
        } else {
            Err(Error::NoMixedTerms)
        }
    }
}

/// Expands `Tr(α⁻¹A ⊕ β⁻¹B ⊕ C)` as an exact tropical polynomial.
pub fn expand_tr_poly(a: &TropMatrix, b: &TropMatrix, c: &TropMatrix) -> Result<TropPoly2> {
    expand_tr_poly_with(a, b, c, DEFAULT_MAX_ORDER, ExecMode::Auto)
}

/// [`expand_tr_poly`] with an explicit order cap and execution mode.
pub fn expand_tr_poly_with(
    a: &TropMatrix,
    b: &TropMatrix,
    c: &TropMatrix,
    max_order: usize,
    mode: ExecMode,
) -> Result<TropPoly2> {
    let n = a.order()?;
    for m in [b, c] {
        let other = m.order()?;
        if other != n {
            return Err(Error::DimMismatch {
                left: n,
                right: other,
            });
        }
    }
    if n > max_order {
        return Err(Error::OrderCapExceeded {
            order: n,
            max: max_order,
        });
    }

    let tri = Triangle::new(n);
    let base = SymbolicBase::build(a, b, c);
    // below this order the per-power parallel regions are too short to
    // amortize thread wake-ups (measured in benches/parallel_vs_seq.rs)
    let run_parallel = match mode {
        ExecMode::Sequential => false,
        ExecMode::Parallel => cfg!(feature = "parallel"),
        ExecMode::Auto => cfg!(feature = "parallel") && n >= 16,
    };

    // power = base as a polynomial matrix; entries accumulate into the trace
    let mut power: Vec<Vec<f64>> = (0..n * n)
        .map(|e| {
            let mut p = tri.empty();
            for &(dm, dl, v) in &base.entries[e] {
                let idx = tri.idx(dm as u32, dl as u32);
                if v > p[idx] {
                    p[idx] = v;
                }
            }
            p
        })
        .collect();

    let mut trace = tri.empty();
    for k in 1..=n {
        for i in 0..n {
            merge_max(&mut trace, &power[i * n + i]);
        }
        if k < n {
            power = poly_mat_mul(&power, &base, &tri, n, run_parallel);
        }
    }

    let mut monomials = BTreeMap::new();
    for d in 0..=n as u32 {
        for l in 0..=d {
            let v = trace[tri.idx(d - l, l)];
            if v > f64::NEG_INFINITY {
                monomials.insert((d - l, l), TropScalar::from_log(v));
            }
        }
    }
    Ok(TropPoly2 {
        order: n,
        monomials,
    })
}

/// The constraint-interaction scalar `σ` for a pair `(A, C)`: the max over
/// all trace words mixing `m >= 1` copies of `A` with at least one `C`, each
/// taken to the power `1/m`.
///
/// Computed through the polynomial route by tracking `C` as the second
/// variable, where it equals `H` evaluated at one. Returns zero when `C`
/// never meets `A` in a cycle (in particular for `C = 0`).
pub fn interaction_sigma(a: &TropMatrix, c: &TropMatrix) -> Result<TropScalar> {
    let n = a.order()?;
    let p = expand_tr_poly(a, c, &TropMatrix::zeros(n, n))?;
    match p.eval_h(TropScalar::ONE) {
        Ok(v) => Ok(v),
        Err(Error::NoMixedTerms) => Ok(TropScalar::ZERO),
        Err(e) => Err(e),
    }
}

/// Triangular layout for dense polynomials with exponent sum at most `n`.
#[derive(Clone, Copy)]
struct Triangle {
    n: usize,
}

impl Triangle {
    fn new(n: usize) -> Triangle {
        Triangle { n }
    }

    fn size(&self) -> usize {
        (self.n + 1) * (self.n + 2) / 2
    }

    #[inline]
    fn idx(&self, m: u32, l: u32) -> usize {
        let d = (m + l) as usize;
        d * (d + 1) / 2 + l as usize
    }

    fn empty(&self) -> Vec<f64> {
        vec![f64::NEG_INFINITY; self.size()]
    }
}

/// The degree-one factor matrix: per entry up to three monomials
/// `(m, l, log coeff)` taken from `A`, `B`, `C`.
struct SymbolicBase {
    entries: Vec<Vec<(u8, u8, f64)>>,
}

impl SymbolicBase {
    fn build(a: &TropMatrix, b: &TropMatrix, c: &TropMatrix) -> SymbolicBase {
        let n = a.rows();
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut e = Vec::with_capacity(3);
                if !a.get(i, j).is_zero() {
                    e.push((1u8, 0u8, a.get(i, j).log()));
                }
                if !b.get(i, j).is_zero() {
                    e.push((0, 1, b.get(i, j).log()));
                }
                if !c.get(i, j).is_zero() {
                    e.push((0, 0, c.get(i, j).log()));
                }
                entries.push(e);
            }
        }
        SymbolicBase { entries }
    }
}

fn merge_max(dst: &mut [f64], src: &[f64]) {
    for (d, &s) in dst.iter_mut().zip(src) {
        if s > *d {
            *d = s;
        }
    }
}

/// One entry of `power · base`: every monomial of `power[i][k]` shifted by
/// each of the (at most three) monomials of `base[k][j]`, merged by max.
/// Max is exact in floating point, so the result does not depend on the
/// evaluation order and the parallel path is bitwise identical.
fn poly_mat_entry(
    power: &[Vec<f64>],
    base: &SymbolicBase,
    tri: &Triangle,
    n: usize,
    i: usize,
    j: usize,
) -> Vec<f64> {
    let mut out = tri.empty();
    for k in 0..n {
        let p = &power[i * n + k];
        for &(dm, dl, dv) in &base.entries[k * n + j] {
            // source (m, l) with degree d maps to (m + dm, l + dl)
            for d in 0..=tri.n {
                let td = d + dm as usize + dl as usize;
                if td > tri.n {
                    break;
                }
                let src = d * (d + 1) / 2;
                let dst = td * (td + 1) / 2 + dl as usize;
                for l in 0..=d {
                    let v = p[src + l];
                    if v == f64::NEG_INFINITY {
                        continue;
                    }
                    let tv = v + dv;
                    if tv > out[dst + l] {
                        out[dst + l] = tv;
                    }
                }
            }
        }
    }
    out
}

fn poly_mat_mul(
    power: &[Vec<f64>],
    base: &SymbolicBase,
    tri: &Triangle,
    n: usize,
    run_parallel: bool,
) -> Vec<Vec<f64>> {
    if run_parallel {
        #[cfg(feature = "parallel")]
        {
            // one task per row keeps the grain coarse enough to amortize
            // the scheduling cost
            return (0..n)
                .into_par_iter()
                .flat_map_iter(|i| (0..n).map(move |j| poly_mat_entry(power, base, tri, n, i, j)))
                .collect();
        }
    }
    (0..n * n)
        .map(|e| poly_mat_entry(power, base, tri, n, e / n, e % n))
        .collect()
}
