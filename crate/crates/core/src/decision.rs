//! The pairwise-comparison layer: problem validation and assembly,
//! log-Chebyshev error evaluation, single- and bi-criteria solving,
//! minimal generator extraction and rating normalization.

use std::fmt;

use crate::error::{Error, Result};
use crate::frontier::{frontier, generator_star, FrontierDescription, FrontierKind};
use crate::linsys::{kleene_star, spectral_radius, tr_det};
use crate::matrix::{TropMatrix, TropVector};
use crate::poly::expand_tr_poly;
use crate::scalar::TropScalar;
use crate::DEFAULT_TOL;

/// Default relative tolerance for the reciprocity checks, linear scale.
/// Survey data is noisy; exact reciprocity is the ideal, not the rule.
pub const DEFAULT_RECIPROCITY_TOL: f64 = 1e-6;

/// What to do with comparison matrices that fail the reciprocity check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ReciprocityMode {
    /// Refuse to build the problem; violations become an error.
    #[default]
    Strict,
    /// Repair a positive matrix by `m_ij <- sqrt(m_ij / m_ji)`, which also
    /// forces a unit diagonal. Positivity violations are never repaired.
    Symmetrize,
}

/// How rating vectors are scaled for presentation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum NormalizePolicy {
    /// Largest entry becomes 1.
    #[default]
    MaxOne,
    /// Entries sum to 1 in linear scale.
    SumOne,
    /// First entry becomes 1.
    FirstOne,
}

/// Options for [`DecisionProblem::with_options`].
#[derive(Clone, Copy, Debug)]
pub struct ProblemOptions {
    pub reciprocity_tol: f64,
    pub mode: ReciprocityMode,
    /// Log-scale comparison tolerance used for the constraint check.
    pub tol: f64,
}

impl Default for ProblemOptions {
    fn default() -> ProblemOptions {
        ProblemOptions {
            reciprocity_tol: DEFAULT_RECIPROCITY_TOL,
            mode: ReciprocityMode::Strict,
            tol: DEFAULT_TOL,
        }
    }
}

/// One data problem in a validation report.
#[derive(Clone, Debug, PartialEq)]
pub struct Violation {
    /// Zero-based indices of the offending entry (or the cycle start).
    pub row: usize,
    pub col: usize,
    pub kind: ViolationKind,
}

#[derive(Clone, Debug, PartialEq)]
pub enum ViolationKind {
    /// The matrix is not square.
    NotSquare { rows: usize, cols: usize },
    /// Comparison entries must be positive.
    NonPositive { value: f64 },
    /// Diagonal comparison entries must equal 1.
    DiagonalNotUnit { value: f64 },
    /// `m_ij * m_ji` must equal 1.
    NotReciprocal { product: f64 },
    /// `Tr(C) > 1`: the constraints admit no positive rating vector.
    /// Carries the offending value and a witness cycle (zero-based nodes).
    ConstraintCycle { tr: f64, cycle: Vec<usize> },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // report with 1-based indices, the convention of the input data
        let (i, j) = (self.row + 1, self.col + 1);
        match &self.kind {
            ViolationKind::NotSquare { rows, cols } => {
                write!(f, "matrix must be square, got {rows}x{cols}")
            }
            ViolationKind::NonPositive { value } => {
                write!(f, "entry ({i},{j}) must be positive, got {value}")
            }
            ViolationKind::DiagonalNotUnit { value } => {
                write!(f, "diagonal entry ({i},{j}) must be 1, got {value}")
            }
            ViolationKind::NotReciprocal { product } => {
                write!(
                    f,
                    "reciprocity violated at ({i},{j}): the product with the mirror entry is {product}"
                )
            }
            ViolationKind::ConstraintCycle { tr, cycle } => {
                let mut path: Vec<String> = cycle.iter().map(|&v| (v + 1).to_string()).collect();
                path.push((cycle[0] + 1).to_string());
                write!(
                    f,
                    "constraint cycle {} has weight {tr} > 1",
                    path.join("->")
                )
            }
        }
    }
}

/// A validated input triple with alternative labels.
#[derive(Clone, Debug, PartialEq)]
pub struct DecisionProblem {
    labels: Vec<String>,
    a: TropMatrix,
    b: TropMatrix,
    c: TropMatrix,
}

impl DecisionProblem {
    /// Builds a problem under the default (strict) options. Missing labels
    /// default to `A1..An`; a missing constraint matrix means `C = 0`.
    pub fn new(
        labels: Option<Vec<String>>,
        a: TropMatrix,
        b: TropMatrix,
        c: Option<TropMatrix>,
    ) -> Result<DecisionProblem> {
        DecisionProblem::with_options(labels, a, b, c, &ProblemOptions::default())
    }

    pub fn with_options(
        labels: Option<Vec<String>>,
        a: TropMatrix,
        b: TropMatrix,
        c: Option<TropMatrix>,
        options: &ProblemOptions,
    ) -> Result<DecisionProblem> {
        let n = a.order()?;
        if b.order()? != n {
            return Err(Error::DimMismatch {
                left: n,
                right: b.rows(),
            });
        }
        let c = match c {
            Some(c) => {
                if c.order()? != n {
                    return Err(Error::DimMismatch {
                        left: n,
                        right: c.rows(),
                    });
                }
                c
            }
            None => TropMatrix::zeros(n, n),
        };
        let labels = match labels {
            Some(labels) => {
                if labels.len() != n {
                    return Err(Error::DimMismatch {
                        left: labels.len(),
                        right: n,
                    });
                }
                labels
            }
            None => (1..=n).map(|i| format!("A{i}")).collect(),
        };

        let prepare = |m: TropMatrix| -> std::result::Result<TropMatrix, Vec<Violation>> {
            let violations = validate_pairwise(&m, options.reciprocity_tol);
            if violations.is_empty() {
                return Ok(m);
            }
            if options.mode == ReciprocityMode::Symmetrize
                && violations
                    .iter()
                    .all(|v| !matches!(v.kind, ViolationKind::NonPositive { .. }))
            {
                return Ok(symmetrize(&m));
            }
            Err(violations)
        };

        let mut violations = Vec::new();
        let a = prepare(a).unwrap_or_else(|mut v| {
            violations.append(&mut v);
            TropMatrix::zeros(n, n)
        });
        let b = prepare(b).unwrap_or_else(|mut v| {
            violations.append(&mut v);
            TropMatrix::zeros(n, n)
        });
        violations.extend(validate_constraints(&c, options.tol));
        if !violations.is_empty() {
            return Err(Error::InvalidProblem { violations });
        }
        Ok(DecisionProblem { labels, a, b, c })
    }

    pub fn order(&self) -> usize {
        self.a.rows()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn a(&self) -> &TropMatrix {
        &self.a
    }

    pub fn b(&self) -> &TropMatrix {
        &self.b
    }

    pub fn c(&self) -> &TropMatrix {
        &self.c
    }
}

/// Replaces `m_ij` by `sqrt(m_ij / m_ji)`; exact self-inverse on the
/// diagonal. Requires a positive matrix.
fn symmetrize(m: &TropMatrix) -> TropMatrix {
    TropMatrix::from_fn(m.rows(), m.cols(), |i, j| {
        TropScalar::from_log((m.get(i, j).log() - m.get(j, i).log()) / 2.0)
    })
}

/// Checks that a comparison matrix is positive with a unit diagonal and
/// `m_ij * m_ji = 1` within `tol_rel` (relative, linear scale).
///
/// Violations are data, not errors; an empty report means a valid matrix.
pub fn validate_pairwise(m: &TropMatrix, tol_rel: f64) -> Vec<Violation> {
    let mut out = Vec::new();
    let n = match m.order() {
        Ok(n) => n,
        Err(_) => {
            return vec![Violation {
                row: 0,
                col: 0,
                kind: ViolationKind::NotSquare {
                    rows: m.rows(),
                    cols: m.cols(),
                },
            }]
        }
    };
    for i in 0..n {
        for j in 0..n {
            if m.get(i, j).is_zero() {
                out.push(Violation {
                    row: i,
                    col: j,
                    kind: ViolationKind::NonPositive { value: 0.0 },
                });
            }
        }
    }
    if !out.is_empty() {
        return out;
    }
    for i in 0..n {
        let v = m.get(i, i).value();
        if (v - 1.0).abs() > tol_rel {
            out.push(Violation {
                row: i,
                col: i,
                kind: ViolationKind::DiagonalNotUnit { value: v },
            });
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            let product = (m.get(i, j).log() + m.get(j, i).log()).exp();
            if (product - 1.0).abs() > tol_rel {
                out.push(Violation {
                    row: i,
                    col: j,
                    kind: ViolationKind::NotReciprocal { product },
                });
            }
        }
    }
    out
}

/// Checks `Tr(C) <= 1`; on failure reports one violation carrying the
/// offending value and a witness cycle.
pub fn validate_constraints(c: &TropMatrix, tol: f64) -> Vec<Violation> {
    match tr_det(c) {
        Ok(tr) if tr.leq(TropScalar::ONE, tol) => Vec::new(),
        Ok(_) => {
            let (tr, cycle) = max_cycle_witness(c).expect("Tr > 1 implies a cycle");
            vec![Violation {
                row: cycle[0],
                col: cycle[0],
                kind: ViolationKind::ConstraintCycle {
                    tr: tr.value(),
                    cycle,
                },
            }]
        }
        Err(_) => vec![Violation {
            row: 0,
            col: 0,
            kind: ViolationKind::NotSquare {
                rows: c.rows(),
                cols: c.cols(),
            },
        }],
    }
}

/// Heaviest closed walk over lengths `1..=n`, with one witness node list.
/// The maximum weight equals `Tr(C)`.
fn max_cycle_witness(c: &TropMatrix) -> Option<(TropScalar, Vec<usize>)> {
    let n = c.rows();
    let mut dist = vec![f64::NEG_INFINITY; n * n];
    for i in 0..n {
        dist[i * n + i] = 0.0;
    }
    let mut parents: Vec<Vec<usize>> = Vec::with_capacity(n);
    let mut levels: Vec<Vec<f64>> = Vec::with_capacity(n);
    for _ in 1..=n {
        let mut next = vec![f64::NEG_INFINITY; n * n];
        let mut parent = vec![usize::MAX; n * n];
        for i in 0..n {
            for t in 0..n {
                let d = dist[i * n + t];
                if d == f64::NEG_INFINITY {
                    continue;
                }
                for j in 0..n {
                    let w = c.get(t, j).log();
                    if w == f64::NEG_INFINITY {
                        continue;
                    }
                    if d + w > next[i * n + j] {
                        next[i * n + j] = d + w;
                        parent[i * n + j] = t;
                    }
                }
            }
        }
        parents.push(parent);
        levels.push(next.clone());
        dist = next;
    }

    let mut best = f64::NEG_INFINITY;
    let mut best_at = None;
    for (k, level) in levels.iter().enumerate() {
        for i in 0..n {
            if level[i * n + i] > best {
                best = level[i * n + i];
                best_at = Some((k, i));
            }
        }
    }
    let (k, start) = best_at?;
    let mut rev = vec![start];
    let mut cur = start;
    for level in (0..=k).rev() {
        cur = parents[level][start * n + cur];
        rev.push(cur);
    }
    rev.reverse();
    rev.pop(); // the walk closes back on `start`
    Some((TropScalar::from_log(best), rev))
}

/// The Chebyshev approximation error of `x` for a comparison matrix:
/// `max_ij m_ij x_j / x_i`. Its natural log is the worst absolute log
/// difference between `M` and the consistent matrix built from `x`.
pub fn chebyshev_error(m: &TropMatrix, x: &TropVector) -> Result<TropScalar> {
    x.quad_form(m)
}

/// Minimal generating set of a column span: the leftmost column of each
/// collinearity class, in column order.
pub fn minimal_generators(s: &TropMatrix, tol: f64) -> Vec<TropVector> {
    let mut kept: Vec<TropVector> = Vec::new();
    for j in 0..s.cols() {
        let col = s.col(j);
        if !kept.iter().any(|g| g.collinear(&col, tol)) {
            kept.push(col);
        }
    }
    kept
}

/// Scales a regular vector according to the policy.
pub fn normalize(x: &TropVector, policy: NormalizePolicy) -> TropVector {
    assert!(x.is_regular(), "normalization requires a regular vector");
    match policy {
        NormalizePolicy::MaxOne => {
            let max = x.entries().iter().copied().max().expect("non-empty");
            x.scale(max.inverse().expect("regular"))
        }
        NormalizePolicy::SumOne => {
            // log-sum-exp keeps the arithmetic sum stable for extreme logs
            let max = x.entries().iter().copied().max().expect("non-empty");
            let sum: f64 = x
                .entries()
                .iter()
                .map(|e| (e.log() - max.log()).exp())
                .sum();
            x.scale(TropScalar::from_log(-max.log() - sum.ln()))
        }
        NormalizePolicy::FirstOne => x.scale(x.get(0).inverse().expect("regular")),
    }
}

/// A solved problem: the frontier plus everything needed to materialize
/// ratings at any on-frontier α. Immutable and freely shareable.
#[derive(Clone, Debug)]
pub struct RatingFactory {
    problem: DecisionProblem,
    frontier: FrontierDescription,
    tol: f64,
}

/// Ratings at one frontier point.
#[derive(Clone, Debug)]
pub struct RatingSolution {
    pub frontier: FrontierDescription,
    pub chosen_alpha: TropScalar,
    pub chosen_beta: TropScalar,
    /// Pairwise non-collinear generators, each normalized.
    pub generators: Vec<TropVector>,
    /// The designated representative (the first generator).
    pub ratings: TropVector,
    /// True when α was not supplied and the documented default was used.
    pub alpha_defaulted: bool,
}

impl RatingFactory {
    pub fn frontier(&self) -> &FrontierDescription {
        &self.frontier
    }

    pub fn problem(&self) -> &DecisionProblem {
        &self.problem
    }

    /// The α used when the caller does not pick one: the frontier point
    /// itself, or the geometric midpoint of a segment. Every segment point
    /// is equally optimal, so the midpoint is only a neutral default; it is
    /// flagged in the solution.
    pub fn default_alpha(&self) -> TropScalar {
        match self.frontier.kind {
            FrontierKind::Point => self.frontier.alpha_min,
            FrontierKind::Segment => TropScalar::from_log(
                (self.frontier.alpha_min.log() + self.frontier.alpha_max.log()) / 2.0,
            ),
        }
    }

    /// Ratings at [`RatingFactory::default_alpha`]. The midpoint pick on a
    /// segment is flagged; the forced α of a point frontier is not.
    pub fn rating_default(&self, policy: NormalizePolicy) -> Result<RatingSolution> {
        let mut solution = self.rating_at(self.default_alpha(), policy)?;
        solution.alpha_defaulted = self.frontier.kind == FrontierKind::Segment;
        Ok(solution)
    }

    pub fn rating_at(&self, alpha: TropScalar, policy: NormalizePolicy) -> Result<RatingSolution> {
        let beta = self.frontier.beta_at(alpha, self.tol)?;
        let star = generator_star(
            self.problem.a(),
            self.problem.b(),
            self.problem.c(),
            alpha,
            beta,
            self.tol,
        )?;
        let generators: Vec<TropVector> = minimal_generators(star.star(), self.tol)
            .iter()
            .map(|g| normalize(g, policy))
            .collect();
        let ratings = generators.first().expect("star is column-regular").clone();
        Ok(RatingSolution {
            frontier: self.frontier.clone(),
            chosen_alpha: alpha,
            chosen_beta: beta,
            generators,
            ratings,
            alpha_defaulted: false,
        })
    }
}

/// Solves a validated problem: the Pareto frontier plus a rating factory.
pub fn solve(problem: &DecisionProblem, tol: f64) -> Result<(FrontierDescription, RatingFactory)> {
    let description = frontier(problem.a(), problem.b(), problem.c(), tol)?;
    Ok((
        description.clone(),
        RatingFactory {
            problem: problem.clone(),
            frontier: description,
            tol,
        },
    ))
}

/// Constrained single-criterion solve: the least error
/// `Δ = ⊕_m coeff(m)^{1/m}` with `Tr(Δ⁻¹A ⊕ C) = 1`, and the minimal
/// generators of `(Δ⁻¹A ⊕ C)*`.
pub fn solve_single(
    a: &TropMatrix,
    c: &TropMatrix,
    tol: f64,
) -> Result<(TropScalar, Vec<TropVector>)> {
    let n = a.order()?;
    if spectral_radius(a)?.is_zero() {
        return Err(Error::DegenerateObjective);
    }
    if !tr_det(c)?.leq(TropScalar::ONE, tol) {
        return Err(Error::InfeasibleConstraints);
    }
    let poly = expand_tr_poly(a, &TropMatrix::zeros(n, n), c)?;
    let (delta, _) = poly.bounds();
    let s = a.scale(delta.inverse().expect("positive delta")).add(c)?;
    let star = kleene_star(&s, tol.max(1e-12))?;
    Ok((delta, minimal_generators(star.star(), tol)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{four_problem, mat, small_problem};

    fn four_decision() -> DecisionProblem {
        let (a, b, c) = four_problem();
        DecisionProblem::new(None, a, b, Some(c)).unwrap()
    }

    fn consistent_from(x: &[f64]) -> TropMatrix {
        let n = x.len();
        TropMatrix::from_fn(n, n, |i, j| TropScalar::new(x[i] / x[j]))
    }

    #[test]
    fn valid_matrices_produce_no_violations() {
        let (a, b, _) = four_problem();
        assert!(validate_pairwise(&a, DEFAULT_RECIPROCITY_TOL).is_empty());
        assert!(validate_pairwise(&b, DEFAULT_RECIPROCITY_TOL).is_empty());
    }

    #[test]
    fn reciprocity_violation_is_reported_once() {
        let m = mat(&[vec![1.0, 2.0], vec![1.0 / 3.0, 1.0]]);
        let violations = validate_pairwise(&m, DEFAULT_RECIPROCITY_TOL);
        assert_eq!(violations.len(), 1);
        assert_eq!((violations[0].row, violations[0].col), (0, 1));
        assert!(matches!(
            violations[0].kind,
            ViolationKind::NotReciprocal { .. }
        ));
    }

    #[test]
    fn positivity_violation_is_reported() {
        let m = mat(&[vec![1.0, 0.0], vec![5.0, 1.0]]);
        let violations = validate_pairwise(&m, DEFAULT_RECIPROCITY_TOL);
        assert_eq!(violations.len(), 1);
        assert_eq!((violations[0].row, violations[0].col), (0, 1));
        assert!(matches!(
            violations[0].kind,
            ViolationKind::NonPositive { .. }
        ));
    }

    #[test]
    fn symmetrize_mode_repairs_reciprocity() {
        let skew = mat(&[vec![1.0, 3.0], vec![0.5, 1.0]]);
        let options = ProblemOptions {
            mode: ReciprocityMode::Symmetrize,
            ..ProblemOptions::default()
        };
        let problem =
            DecisionProblem::with_options(None, skew.clone(), skew, None, &options).unwrap();
        // repaired entry is sqrt(3 / 0.5)
        let fixed = problem.a().get(0, 1);
        assert!(fixed.approx_eq(TropScalar::new(6f64.sqrt()), DEFAULT_TOL));
        assert!(validate_pairwise(problem.a(), DEFAULT_RECIPROCITY_TOL).is_empty());
    }

    #[test]
    fn constraint_cycle_witness() {
        let c = mat(&[vec![0.0, 2.0], vec![1.0, 0.0]]);
        let violations = validate_constraints(&c, DEFAULT_TOL);
        assert_eq!(violations.len(), 1);
        match &violations[0].kind {
            ViolationKind::ConstraintCycle { tr, cycle } => {
                assert!((tr - 2.0).abs() < 1e-12);
                assert_eq!(cycle.len(), 2);
            }
            other => panic!("unexpected kind {other:?}"),
        }
        assert!(validate_constraints(&TropMatrix::zeros(3, 3), DEFAULT_TOL).is_empty());
        let (_, _, small_c) = small_problem();
        assert!(validate_constraints(&small_c, DEFAULT_TOL).is_empty());
    }

    #[test]
    fn chebyshev_error_against_reference_values() {
        let (a, b, _) = four_problem();
        let x = TropVector::from_values(&[1.0, 0.25, 0.5, 0.25]);
        assert!(chebyshev_error(&a, &x)
            .unwrap()
            .approx_eq(TropScalar::new(3.0), DEFAULT_TOL));
        assert!(chebyshev_error(&b, &x)
            .unwrap()
            .approx_eq(TropScalar::new(2.0), DEFAULT_TOL));
        // the alpha = 2 endpoint generator of the unconstrained problem
        // pays beta = 3 on criterion B (and exactly 2 on criterion A)
        let x1 = TropVector::from_values(&[1.0, 1.0 / 6.0, 0.5, 0.25]);
        assert!(chebyshev_error(&b, &x1)
            .unwrap()
            .approx_eq(TropScalar::new(3.0), DEFAULT_TOL));
        assert!(chebyshev_error(&a, &x1)
            .unwrap()
            .approx_eq(TropScalar::new(2.0), DEFAULT_TOL));
    }

    #[test]
    fn consistent_matrix_has_unit_error() {
        let x = [1.0, 0.3, 4.0];
        let m = consistent_from(&x);
        let err = chebyshev_error(&m, &TropVector::from_values(&x)).unwrap();
        assert!(err.approx_eq(TropScalar::ONE, DEFAULT_TOL));
    }

    #[test]
    fn four_problem_solution_matches_reference_ratings() {
        let problem = four_decision();
        let (frontier, factory) = solve(&problem, DEFAULT_TOL).unwrap();
        assert!(frontier.is_point());
        let solution = factory.rating_default(NormalizePolicy::MaxOne).unwrap();
        assert!(solution
            .chosen_alpha
            .approx_eq(TropScalar::new(3.0), DEFAULT_TOL));
        assert!(solution
            .chosen_beta
            .approx_eq(TropScalar::new(2.0), DEFAULT_TOL));
        assert_eq!(solution.generators.len(), 1);
        let expected = TropVector::from_values(&[1.0, 0.25, 0.5, 0.25]);
        assert!(solution.ratings.approx_eq(&expected, DEFAULT_TOL));
        // the binding constraint x4 <= x2 holds with equality
        assert_eq!(solution.ratings.get(1), solution.ratings.get(3));
    }

    #[test]
    fn small_problem_generator_at_right_end() {
        let (a, b, c) = small_problem();
        let problem = DecisionProblem::new(None, a, b, Some(c)).unwrap();
        let (_, factory) = solve(&problem, DEFAULT_TOL).unwrap();
        let solution = factory
            .rating_at(TropScalar::new(2.0), NormalizePolicy::MaxOne)
            .unwrap();
        assert_eq!(solution.generators.len(), 1);
        assert!(solution
            .ratings
            .approx_eq(&TropVector::from_values(&[1.0, 1.0]), DEFAULT_TOL));
    }

    #[test]
    fn unconstrained_four_problem_endpoint_generators() {
        let (a, b, _) = four_problem();
        let problem = DecisionProblem::new(None, a, b, None).unwrap();
        let (_, factory) = solve(&problem, DEFAULT_TOL).unwrap();
        let at2 = factory
            .rating_at(TropScalar::new(2.0), NormalizePolicy::MaxOne)
            .unwrap();
        assert!(at2.ratings.approx_eq(
            &TropVector::from_values(&[1.0, 1.0 / 6.0, 0.5, 0.25]),
            DEFAULT_TOL
        ));
        let at3 = factory
            .rating_at(TropScalar::new(3.0), NormalizePolicy::MaxOne)
            .unwrap();
        assert!(at3.ratings.approx_eq(
            &TropVector::from_values(&[1.0, 0.25, 0.5, 0.25]),
            DEFAULT_TOL
        ));
    }

    #[test]
    fn solve_single_small_problem_unconstrained() {
        let (a, _, _) = small_problem();
        let zero = TropMatrix::zeros(2, 2);
        let (delta, generators) = solve_single(&a, &zero, DEFAULT_TOL).unwrap();
        assert!(delta.approx_eq(TropScalar::ONE, DEFAULT_TOL));
        assert_eq!(generators.len(), 1);
        assert!(generators[0].approx_eq(&TropVector::from_values(&[1.0, 0.5]), DEFAULT_TOL));
    }

    #[test]
    fn solve_single_four_problem() {
        let (a, _, c) = four_problem();
        let (delta, _) = solve_single(&a, &c, DEFAULT_TOL).unwrap();
        assert!(delta.approx_eq(TropScalar::new(3.0), DEFAULT_TOL));
        let zero = TropMatrix::zeros(4, 4);
        let (delta0, _) = solve_single(&a, &zero, DEFAULT_TOL).unwrap();
        assert!(delta0.approx_eq(TropScalar::new(2.0), DEFAULT_TOL));
        // the unconstrained minimum is the spectral radius
        assert!(delta0.approx_eq(spectral_radius(&a).unwrap(), DEFAULT_TOL));
    }

    #[test]
    fn solve_single_consistent_matrix() {
        let x = [2.0, 0.5, 1.0];
        let m = consistent_from(&x);
        let zero = TropMatrix::zeros(3, 3);
        let (delta, generators) = solve_single(&m, &zero, DEFAULT_TOL).unwrap();
        assert!(delta.approx_eq(TropScalar::ONE, DEFAULT_TOL));
        assert_eq!(generators.len(), 1);
        assert!(generators[0].collinear(&TropVector::from_values(&x), DEFAULT_TOL));
    }

    #[test]
    fn minimal_generators_collapse_collinear_columns() {
        let star = mat(&[
            vec![1.0, 4.0, 2.0, 4.0],
            vec![0.25, 1.0, 0.5, 1.0],
            vec![0.5, 2.0, 1.0, 2.0],
            vec![0.25, 1.0, 0.5, 1.0],
        ]);
        let generators = minimal_generators(&star, DEFAULT_TOL);
        assert_eq!(generators.len(), 1);
        assert!(
            normalize(&generators[0], NormalizePolicy::MaxOne).approx_eq(
                &TropVector::from_values(&[1.0, 0.25, 0.5, 0.25]),
                DEFAULT_TOL
            )
        );
        assert_eq!(
            minimal_generators(&TropMatrix::identity(2), DEFAULT_TOL).len(),
            2
        );
        // reduced 2x2 generator [[1, 2/alpha], [alpha/2, 1]] at any alpha
        for alpha in [1.0, 1.5, 2.0] {
            let reduced = mat(&[vec![1.0, 2.0 / alpha], vec![alpha / 2.0, 1.0]]);
            assert_eq!(minimal_generators(&reduced, DEFAULT_TOL).len(), 1);
        }
    }

    #[test]
    fn normalization_policies() {
        let x = TropVector::from_values(&[2.0, 0.5, 1.0, 0.5]);
        assert!(normalize(&x, NormalizePolicy::MaxOne).approx_eq(
            &TropVector::from_values(&[1.0, 0.25, 0.5, 0.25]),
            DEFAULT_TOL
        ));
        let two = TropVector::from_values(&[1.0, 1.0]);
        assert!(normalize(&two, NormalizePolicy::SumOne)
            .approx_eq(&TropVector::from_values(&[0.5, 0.5]), DEFAULT_TOL));
        let y = TropVector::from_values(&[4.0, 1.0, 2.0, 1.0]);
        assert!(normalize(&y, NormalizePolicy::FirstOne).approx_eq(
            &TropVector::from_values(&[1.0, 0.25, 0.5, 0.25]),
            DEFAULT_TOL
        ));
    }

    #[test]
    fn ranking_is_invariant_under_normalization() {
        let x = TropVector::from_values(&[0.7, 2.0, 1.1, 0.4]);
        let rank = |v: &TropVector| {
            let mut idx: Vec<usize> = (0..v.dim()).collect();
            idx.sort_by_key(|&i| v.get(i));
            idx
        };
        let reference = rank(&x);
        for policy in [
            NormalizePolicy::MaxOne,
            NormalizePolicy::SumOne,
            NormalizePolicy::FirstOne,
        ] {
            assert_eq!(rank(&normalize(&x, policy)), reference);
        }
    }

    #[test]
    fn invalid_problem_is_refused_in_strict_mode() {
        let skew = mat(&[vec![1.0, 3.0], vec![0.5, 1.0]]);
        let err = DecisionProblem::new(None, skew.clone(), skew, None).unwrap_err();
        assert!(matches!(err, Error::InvalidProblem { .. }));
    }
}
