//! The exact Pareto frontier of the constrained bi-objective problem.
//!
//! Feasible objective pairs `(α, β)` are exactly those with
//! `Tr(α⁻¹A ⊕ β⁻¹B ⊕ C) <= 1`. Expanding the trace polynomial splits that
//! condition into `α >= λ⊕σ`, `β >= μ⊕θ` and `β >= G(α)`, so the frontier is
//! either the corner point or the part of the curve `β = G(α)` cut out by
//! the two bounds. `G` is a finite max of power laws, i.e. an upper envelope
//! of lines in log-log coordinates, which this module computes exactly.

use crate::error::{Error, Result};
use crate::linsys::{kleene_star, spectral_radius, tr_det, StarMatrix};
use crate::matrix::TropMatrix;
use crate::poly::{expand_tr_poly, TropPoly2};
use crate::scalar::TropScalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FrontierKind {
    Point,
    Segment,
}

/// One power-law piece `β = coeff^{1/l} α^{-m/l}` active on
/// `[alpha_lo, alpha_hi]`.
#[derive(Clone, Debug, PartialEq)]
pub struct FrontierPiece {
    pub alpha_lo: TropScalar,
    pub alpha_hi: TropScalar,
    pub m: u32,
    pub l: u32,
    pub coeff: TropScalar,
}

impl FrontierPiece {
    /// Slope of the piece in log-log coordinates.
    pub fn exponent(&self) -> f64 {
        -(self.m as f64) / self.l as f64
    }

    pub fn beta_at(&self, alpha: TropScalar) -> TropScalar {
        TropScalar::from_log((self.coeff.log() - self.m as f64 * alpha.log()) / self.l as f64)
    }
}

/// Point or piecewise power-law description of the Pareto frontier.
///
/// For a point, `alpha_min = alpha_max = lambda_sigma` and the β value is
/// `mu_theta`. For a segment the pieces tile `[alpha_min, alpha_max]` with
/// `β` continuous and strictly decreasing, ending at `β = mu_theta`.
#[derive(Clone, Debug, PartialEq)]
pub struct FrontierDescription {
    pub kind: FrontierKind,
    pub alpha_min: TropScalar,
    pub alpha_max: TropScalar,
    pub beta_at_alpha_max: TropScalar,
    pub pieces: Vec<FrontierPiece>,
    pub lambda_sigma: TropScalar,
    pub mu_theta: TropScalar,
}

impl FrontierDescription {
    pub fn is_point(&self) -> bool {
        self.kind == FrontierKind::Point
    }

    fn off_frontier(&self) -> Error {
        Error::NotOnFrontier {
            alpha_min: crate::round_sig(self.alpha_min.value(), 12),
            alpha_max: crate::round_sig(self.alpha_max.value(), 12),
        }
    }

    /// β on the frontier at the given α, within `tol` of the valid range.
    pub fn beta_at(&self, alpha: TropScalar, tol: f64) -> Result<TropScalar> {
        if alpha.is_zero() {
            return Err(self.off_frontier());
        }
        match self.kind {
            FrontierKind::Point => {
                if alpha.approx_eq(self.alpha_min, tol) {
                    Ok(self.mu_theta)
                } else {
                    Err(self.off_frontier())
                }
            }
            FrontierKind::Segment => {
                let lo = self.alpha_min.log();
                let hi = self.alpha_max.log();
                let x = alpha.log();
                if x < lo - tol || x > hi + tol {
                    return Err(self.off_frontier());
                }
                let x = x.clamp(lo, hi);
                if x >= hi {
                    return Ok(self.beta_at_alpha_max);
                }
                let piece = self
                    .pieces
                    .iter()
                    .find(|p| x <= p.alpha_hi.log())
                    .unwrap_or_else(|| self.pieces.last().expect("segment has pieces"));
                Ok(piece.beta_at(TropScalar::from_log(x)))
            }
        }
    }

    /// Whether `(alpha, beta)` lies on the frontier within `tol`.
    pub fn contains(&self, alpha: TropScalar, beta: TropScalar, tol: f64) -> bool {
        match self.beta_at(alpha, tol) {
            Ok(expected) => beta.approx_eq(expected, tol),
            Err(_) => false,
        }
    }

    /// `count` log-evenly spaced `(α, β)` samples along the frontier.
    ///
    /// A point frontier yields the single point for any `count >= 1`.
    pub fn sample(&self, count: usize) -> Vec<(TropScalar, TropScalar)> {
        if count == 0 {
            return Vec::new();
        }
        if self.is_point() || count == 1 {
            return vec![(
                self.alpha_min,
                if self.is_point() {
                    self.mu_theta
                } else {
                    self.beta_at(self.alpha_min, 0.0).expect("on frontier")
                },
            )];
        }
        let lo = self.alpha_min.log();
        let hi = self.alpha_max.log();
        (0..count)
            .map(|i| {
                // the endpoint arithmetic may overshoot hi by one ulp
                let x = (lo + (hi - lo) * i as f64 / (count - 1) as f64).clamp(lo, hi);
                let alpha = TropScalar::from_log(x);
                let beta = self.beta_at(alpha, 0.0).expect("on frontier");
                (alpha, beta)
            })
            .collect()
    }

    /// The piece boundary points, endpoints included.
    pub fn breakpoints(&self) -> Vec<(TropScalar, TropScalar)> {
        if self.is_point() {
            return vec![(self.alpha_min, self.mu_theta)];
        }
        let mut out: Vec<(TropScalar, TropScalar)> = self
            .pieces
            .iter()
            .map(|p| (p.alpha_lo, p.beta_at(p.alpha_lo)))
            .collect();
        out.push((self.alpha_max, self.beta_at_alpha_max));
        out
    }
}

/// Computes the Pareto frontier for matrices `A`, `B` under constraints `C`.
pub fn frontier(
    a: &TropMatrix,
    b: &TropMatrix,
    c: &TropMatrix,
    tol: f64,
) -> Result<FrontierDescription> {
    if spectral_radius(a)?.is_zero() || spectral_radius(b)?.is_zero() {
        return Err(Error::DegenerateObjective);
    }
    if !tr_det(c)?.leq(TropScalar::ONE, tol) {
        return Err(Error::InfeasibleConstraints);
    }
    let poly = expand_tr_poly(a, b, c)?;
    frontier_from_poly(&poly, tol)
}

/// Frontier of the unconstrained problem, i.e. [`frontier`] with `C = 0`.
pub fn frontier_unconstrained(
    a: &TropMatrix,
    b: &TropMatrix,
    tol: f64,
) -> Result<FrontierDescription> {
    let n = a.order()?;
    frontier(a, b, &TropMatrix::zeros(n, n), tol)
}

fn frontier_from_poly(poly: &TropPoly2, tol: f64) -> Result<FrontierDescription> {
    let (lambda_sigma, mu_theta) = poly.bounds();
    let point = |ls: TropScalar, mt: TropScalar| FrontierDescription {
        kind: FrontierKind::Point,
        alpha_min: ls,
        alpha_max: ls,
        beta_at_alpha_max: mt,
        pieces: Vec::new(),
        lambda_sigma: ls,
        mu_theta: mt,
    };
    if !poly.has_mixed_terms() {
        return Ok(point(lambda_sigma, mu_theta));
    }
    let h = poly.eval_h(mu_theta)?;
    if h.leq(lambda_sigma, tol) {
        return Ok(point(lambda_sigma, mu_theta));
    }
    let mixed: Vec<(u32, u32, TropScalar)> = poly.mixed_monomials().collect();
    let pieces = upper_envelope(&mixed, lambda_sigma.log(), h.log());
    Ok(FrontierDescription {
        kind: FrontierKind::Segment,
        alpha_min: lambda_sigma,
        alpha_max: h,
        beta_at_alpha_max: mu_theta,
        pieces,
        lambda_sigma,
        mu_theta,
    })
}

/// Generator matrix for an on-frontier pair: the Kleene star of
/// `α⁻¹A ⊕ β⁻¹B ⊕ C`. Every `star · u` with regular `u` is Pareto-optimal
/// at `(α, β)`.
pub fn generator_matrix(
    a: &TropMatrix,
    b: &TropMatrix,
    c: &TropMatrix,
    alpha: TropScalar,
    beta: TropScalar,
    tol: f64,
) -> Result<StarMatrix> {
    let description = frontier(a, b, c, tol)?;
    if !description.contains(alpha, beta, tol) {
        return Err(description.off_frontier());
    }
    generator_star(a, b, c, alpha, beta, tol)
}

/// The star construction itself, for callers that already verified frontier
/// membership. The `Tr <= 1` check inside [`kleene_star`] still guards
/// against inconsistent inputs.
pub(crate) fn generator_star(
    a: &TropMatrix,
    b: &TropMatrix,
    c: &TropMatrix,
    alpha: TropScalar,
    beta: TropScalar,
    tol: f64,
) -> Result<StarMatrix> {
    let inv_alpha = alpha.inverse().ok_or(Error::DegenerateObjective)?;
    let inv_beta = beta.inverse().ok_or(Error::DegenerateObjective)?;
    let s = a.scale(inv_alpha).add(&b.scale(inv_beta))?.add(c)?;
    kleene_star(&s, tol.max(1e-12))
}

/// Upper envelope of the mixed-monomial lines in log-log coordinates,
/// clipped to `[x_lo, x_hi]`.
///
/// Each monomial `(m, l, c)` is the line `y = log(c)/l - (m/l) x`. Lines
/// are sorted by slope, reduced to the best intercept per slope, and run
/// through the usual convex-hull scan.
fn upper_envelope(mixed: &[(u32, u32, TropScalar)], x_lo: f64, x_hi: f64) -> Vec<FrontierPiece> {
    #[derive(Clone, Copy)]
    struct Line {
        slope: f64,
        intercept: f64,
        m: u32,
        l: u32,
        coeff: TropScalar,
    }

    let mut lines: Vec<Line> = mixed
        .iter()
        .map(|&(m, l, coeff)| Line {
            slope: -(m as f64) / l as f64,
            intercept: coeff.log() / l as f64,
            m,
            l,
            coeff,
        })
        .collect();
    // slope ascending; per slope keep the highest intercept, ties going to
    // the lowest exponent pair so the output is deterministic
    lines.sort_by(|a, b| {
        a.slope
            .total_cmp(&b.slope)
            .then(b.intercept.total_cmp(&a.intercept))
            .then((a.m, a.l).cmp(&(b.m, b.l)))
    });
    lines.dedup_by(|next, kept| next.slope == kept.slope);

    // equal rational slopes compare equal as floats (same real quotient), so
    // after dedup the slopes are strictly increasing
    let cross = |a: &Line, b: &Line| (b.intercept - a.intercept) / (a.slope - b.slope);
    let mut hull: Vec<Line> = Vec::with_capacity(lines.len());
    for line in lines {
        while hull.len() >= 2 {
            let last = hull[hull.len() - 1];
            let prev = hull[hull.len() - 2];
            if cross(&prev, &line) <= cross(&prev, &last) {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(line);
    }

    let mut pieces = Vec::new();
    let mut start = x_lo;
    for (idx, line) in hull.iter().enumerate() {
        let end = if idx + 1 < hull.len() {
            cross(line, &hull[idx + 1]).min(x_hi)
        } else {
            x_hi
        };
        if end > start + 1e-15 {
            pieces.push(FrontierPiece {
                alpha_lo: TropScalar::from_log(start),
                alpha_hi: TropScalar::from_log(end),
                m: line.m,
                l: line.l,
                coeff: line.coeff,
            });
            start = end;
        }
        if start >= x_hi {
            break;
        }
    }
    debug_assert!(!pieces.is_empty());
    pieces
}
