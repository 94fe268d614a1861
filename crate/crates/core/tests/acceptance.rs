//! Acceptance gate: one test per criterion, each printing a PASS line with
//! its timing (visible with `--nocapture`). Tolerances are fixed at 1e-9 in
//! log scale throughout.

mod common;

use std::time::Instant;

use common::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use tropirank_core::decision::{self, DecisionProblem, NormalizePolicy};
use tropirank_core::frontier::{frontier, frontier_unconstrained, FrontierKind};
use tropirank_core::linsys::{spectral_radius, tr_det};
use tropirank_core::oracle;
use tropirank_core::poly::{expand_tr_poly, interaction_sigma};
use tropirank_core::{TropScalar, TropVector};

const TOL: f64 = 1e-9;

fn assert_value(actual: TropScalar, expected: f64, what: &str) {
    assert!(
        actual.approx_eq(TropScalar::new(expected), TOL),
        "{what}: expected {expected}, got {actual}"
    );
}

#[test]
fn criterion_1_two_alternative_segment() {
    let started = Instant::now();
    let (a, b, c) = small_problem();

    assert_value(spectral_radius(&a).unwrap(), 1.0, "lambda");
    assert_value(spectral_radius(&b).unwrap(), 1.0, "mu");
    assert_value(a.mul(&b).unwrap().trace().unwrap(), 6.0, "tr(AB)");
    assert_value(a.mul(&c).unwrap().trace().unwrap(), 0.5, "tr(AC)");
    assert_value(b.mul(&c).unwrap().trace().unwrap(), 3.0, "tr(BC)");

    let f = frontier(&a, &b, &c, TOL).unwrap();
    assert_eq!(f.kind, FrontierKind::Segment);
    assert_value(f.alpha_min, 1.0, "alpha_min");
    assert_value(f.alpha_max, 2.0, "alpha_max");
    for (alpha, beta) in f.sample(10) {
        let expected = TropScalar::new(6.0).otimes(alpha.inverse().unwrap());
        assert!(
            beta.approx_eq(expected, TOL),
            "beta = 6/alpha failed at {alpha}"
        );
        let star =
            tropirank_core::frontier::generator_matrix(&a, &b, &c, alpha, beta, TOL).unwrap();
        let reference =
            TropVector::from_scalars(vec![TropScalar::ONE, alpha.otimes(TropScalar::new(0.5))]);
        for j in 0..2 {
            assert!(
                star.star().col(j).collinear(&reference, TOL),
                "generator column {j} at alpha {alpha}"
            );
        }
    }

    let elapsed = started.elapsed();
    assert!(elapsed.as_secs_f64() < 0.1, "took {elapsed:?}, limit 0.1s");
    println!("ACCEPTANCE criterion 1: PASS ({elapsed:?})");
}

#[test]
fn criterion_2_four_alternative_point() {
    let started = Instant::now();
    let (a, b, c) = four_problem();

    assert_value(spectral_radius(&a).unwrap(), 2.0, "lambda");
    assert_value(spectral_radius(&b).unwrap(), 2.0, "mu");
    assert_value(interaction_sigma(&a, &c).unwrap(), 3.0, "sigma");
    assert_value(interaction_sigma(&b, &c).unwrap(), 2.0, "theta");
    assert!(
        tr_det(&c).unwrap().is_zero(),
        "Tr(C) must be the zero scalar"
    );

    let reference: [(usize, usize, usize, f64); 10] = [
        (1, 1, 1, 1.5),
        (1, 1, 2, 8.0),
        (1, 1, 3, 24.0),
        (2, 1, 1, 3.0),
        (2, 1, 2, 6.0),
        (2, 2, 1, 8.0),
        (2, 2, 2, 24.0),
        (3, 1, 1, 6.0),
        (3, 2, 1, 6.0),
        (3, 3, 1, 24.0),
    ];
    for (k, l, m, expected) in reference {
        let r = oracle::enum_rklm(&a, &b, &c, k, l, m).unwrap();
        assert_value(r, expected, &format!("r_{{{k},{l},{m}}}"));
    }

    let poly = expand_tr_poly(&a, &b, &c).unwrap();
    assert_value(poly.eval_h(TropScalar::new(2.0)).unwrap(), 3.0, "H(2)");

    let problem = DecisionProblem::new(None, a, b, Some(c)).unwrap();
    let (f, factory) = decision::solve(&problem, TOL).unwrap();
    assert_eq!(f.kind, FrontierKind::Point);
    assert_value(f.alpha_min, 3.0, "frontier alpha");
    assert_value(f.mu_theta, 2.0, "frontier beta");

    let solution = factory.rating_default(NormalizePolicy::MaxOne).unwrap();
    let star = tropirank_core::frontier::generator_matrix(
        problem.a(),
        problem.b(),
        problem.c(),
        solution.chosen_alpha,
        solution.chosen_beta,
        TOL,
    )
    .unwrap();
    let expected_star = mat(&[
        vec![1.0, 4.0, 2.0, 4.0],
        vec![0.25, 1.0, 0.5, 1.0],
        vec![0.5, 2.0, 1.0, 2.0],
        vec![0.25, 1.0, 0.5, 1.0],
    ]);
    assert!(
        star.star().approx_eq(&expected_star, TOL),
        "generator star differs from the reference matrix"
    );
    let ratings = TropVector::from_values(&[1.0, 0.25, 0.5, 0.25]);
    assert!(solution.ratings.approx_eq(&ratings, TOL));

    let elapsed = started.elapsed();
    assert!(elapsed.as_secs_f64() < 0.5, "took {elapsed:?}, limit 0.5s");
    println!("ACCEPTANCE criterion 2: PASS ({elapsed:?})");
}

#[test]
fn criterion_3_unconstrained_four_alternative_segment() {
    let started = Instant::now();
    let (a, b, _) = four_problem();

    let f = frontier_unconstrained(&a, &b, TOL).unwrap();
    assert_eq!(f.kind, FrontierKind::Segment);
    assert_value(f.alpha_min, 2.0, "alpha_min");
    assert_value(f.alpha_max, 3.0, "alpha_max");
    for (alpha, beta) in f.sample(20) {
        let first = TropScalar::new(24.0).otimes(alpha.powf(-3.0));
        let second = TropScalar::new(24.0)
            .powf(1.0 / 3.0)
            .otimes(alpha.powf(-1.0 / 3.0));
        assert!(
            beta.approx_eq(first.oplus(second), TOL),
            "beta mismatch at alpha {alpha}"
        );
    }

    let problem = DecisionProblem::new(None, a, b, None).unwrap();
    let (_, factory) = decision::solve(&problem, TOL).unwrap();
    let left = factory
        .rating_at(TropScalar::new(2.0), NormalizePolicy::MaxOne)
        .unwrap();
    assert!(left
        .ratings
        .approx_eq(&TropVector::from_values(&[1.0, 1.0 / 6.0, 0.5, 0.25]), TOL));
    let right = factory
        .rating_at(TropScalar::new(3.0), NormalizePolicy::MaxOne)
        .unwrap();
    assert!(right
        .ratings
        .approx_eq(&TropVector::from_values(&[1.0, 0.25, 0.5, 0.25]), TOL));

    let elapsed = started.elapsed();
    println!("ACCEPTANCE criterion 3: PASS ({elapsed:?})");
}

#[test]
fn criterion_4_oracle_equivalence_and_grid_domination() {
    let started = Instant::now();
    let mut rng = StdRng::seed_from_u64(42);
    let grid = oracle::GridSpec::default();
    let band = 1.5 * grid.log_step();

    for round in 0..100 {
        let n = 3 + round % 3;
        let problem = random_problem(n, &mut rng);
        let poly = expand_tr_poly(problem.a(), problem.b(), problem.c()).unwrap();

        // every aggregated coefficient equals the brute-force word maximum
        let buckets = oracle::enum_all_word_traces(problem.a(), problem.b(), problem.c()).unwrap();
        for (m, l, coeff) in poly.monomials() {
            let brute = buckets.get(&(m, l)).copied().unwrap_or(TropScalar::ZERO);
            assert!(
                coeff.approx_eq(brute, TOL),
                "coefficient ({m},{l}) {coeff} vs enumeration {brute} (n = {n}, round {round})"
            );
        }
        for (&(m, l), &brute) in &buckets {
            assert!(poly.coeff(m, l).approx_eq(brute, TOL));
        }
        // mixed coefficients also match the max over k of r_{k,l,m}
        for (m, l, coeff) in poly.mixed_monomials() {
            let mut aggregated = TropScalar::ZERO;
            for k in l as usize..n {
                if (m as usize) <= n - k {
                    aggregated = aggregated.oplus(
                        oracle::enum_rklm(
                            problem.a(),
                            problem.b(),
                            problem.c(),
                            k,
                            l as usize,
                            m as usize,
                        )
                        .unwrap(),
                    );
                }
            }
            assert!(coeff.approx_eq(aggregated, TOL));
        }
        // spectral radii plus enumerated sigma/theta reproduce the bounds
        let (ls, mt) = poly.bounds();
        let sigma = oracle::enum_sigma_theta(problem.a(), problem.c()).unwrap();
        let theta = oracle::enum_sigma_theta(problem.b(), problem.c()).unwrap();
        assert!(ls.approx_eq(spectral_radius(problem.a()).unwrap().oplus(sigma), TOL));
        assert!(mt.approx_eq(spectral_radius(problem.b()).unwrap().oplus(theta), TOL));

        // grid oracle: no feasible point dominates the analytic frontier
        if n <= 4 {
            let f = frontier(problem.a(), problem.b(), problem.c(), TOL).unwrap();
            let points = oracle::grid_pareto(&problem, &grid).unwrap();
            for (alpha, beta) in points {
                assert!(
                    alpha.log() >= f.lambda_sigma.log() - band,
                    "alpha {alpha} dominates the frontier (n = {n}, round {round})"
                );
                assert!(
                    beta.log() >= f.mu_theta.log() - band,
                    "beta {beta} dominates the frontier (n = {n}, round {round})"
                );
                let floor = poly.eval_g(alpha).unwrap();
                assert!(
                    beta.log() >= floor.log() - band,
                    "({alpha}, {beta}) dominates the curve (n = {n}, round {round})"
                );
            }
        }
    }

    let elapsed = started.elapsed();
    println!("ACCEPTANCE criterion 4: PASS ({elapsed:?})");
}

#[test]
fn criterion_5_property_suites() {
    let started = Instant::now();
    let mut rng = StdRng::seed_from_u64(43);

    // binomial trace identity on 200 random positive 4x4 pairs
    for _ in 0..200 {
        let x = random_positive(4, 2.0, &mut rng);
        let y = random_positive(4, 2.0, &mut rng);
        assert!(oracle::check_trace_binomial(&x, &y, TOL).unwrap());
    }

    // problem cohort: the two worked examples, the unconstrained variant,
    // and random problems
    let mut problems: Vec<DecisionProblem> = Vec::new();
    let (a, b, c) = small_problem();
    problems.push(DecisionProblem::new(None, a, b, Some(c)).unwrap());
    let (a, b, c) = four_problem();
    problems.push(DecisionProblem::new(None, a.clone(), b.clone(), Some(c)).unwrap());
    problems.push(DecisionProblem::new(None, a, b, None).unwrap());
    for _ in 0..20 {
        problems.push(random_problem(rng.random_range(2..=5), &mut rng));
    }

    for problem in &problems {
        let poly = expand_tr_poly(problem.a(), problem.b(), problem.c()).unwrap();

        // H(G(s)) = s on 100 random positive arguments
        for _ in 0..100 {
            let s = TropScalar::from_log(rng.random_range(-3.0..3.0));
            let g = poly.eval_g(s).unwrap();
            let back = poly.eval_h(g).unwrap();
            assert!(back.approx_eq(s, TOL), "H(G({s})) = {back}");
        }

        let f = frontier(problem.a(), problem.b(), problem.c(), TOL).unwrap();
        let samples = f.sample(20);
        for &(alpha, beta) in &samples {
            // tightness: Tr = 1 on the frontier
            let s = problem
                .a()
                .scale(alpha.inverse().unwrap())
                .add(&problem.b().scale(beta.inverse().unwrap()))
                .unwrap()
                .add(problem.c())
                .unwrap();
            let tr = tr_det(&s).unwrap();
            assert!(tr.approx_eq(TropScalar::ONE, TOL), "Tr = {tr} off one");

            // strictness: shrinking alpha by e^(-1e-6) breaks feasibility
            let shrunk = alpha.otimes(TropScalar::from_log(-1e-6));
            let s_bad = problem
                .a()
                .scale(shrunk.inverse().unwrap())
                .add(&problem.b().scale(beta.inverse().unwrap()))
                .unwrap()
                .add(problem.c())
                .unwrap();
            assert!(
                !tr_det(&s_bad).unwrap().leq(TropScalar::ONE, TOL),
                "Tr stayed feasible after shrinking alpha"
            );

            // attainment for 10 random generator combinations
            let star = tropirank_core::frontier::generator_matrix(
                problem.a(),
                problem.b(),
                problem.c(),
                alpha,
                beta,
                TOL,
            )
            .unwrap();
            for _ in 0..10 {
                let u = random_regular_vector(problem.order(), 1.0, &mut rng);
                let x = star.star().mul_vec(&u).unwrap();
                assert!(x.quad_form(problem.a()).unwrap().approx_eq(alpha, TOL));
                assert!(x.quad_form(problem.b()).unwrap().approx_eq(beta, TOL));
                assert!(problem.c().mul_vec(&x).unwrap().leq(&x, TOL));
            }
        }

        // scaling covariance: frontier(cA, B, C) is frontier(A, B, C) with
        // alpha scaled by c and beta untouched
        for scale in [0.5, 2.0, 10.0] {
            let cs = TropScalar::new(scale);
            let scaled = frontier(&problem.a().scale(cs), problem.b(), problem.c(), TOL).unwrap();
            assert_eq!(scaled.kind, f.kind);
            assert!(scaled
                .lambda_sigma
                .approx_eq(f.lambda_sigma.otimes(cs), TOL));
            assert!(scaled.mu_theta.approx_eq(f.mu_theta, TOL));
            assert!(scaled.alpha_max.approx_eq(f.alpha_max.otimes(cs), TOL));
            for &(alpha, beta) in &samples {
                let moved = scaled.beta_at(alpha.otimes(cs), TOL).unwrap();
                assert!(moved.approx_eq(beta, TOL));
            }
        }
    }

    let elapsed = started.elapsed();
    println!("ACCEPTANCE criterion 5: PASS ({elapsed:?})");
}

#[test]
fn criterion_6_spectral_radius_against_karp() {
    let started = Instant::now();
    let mut rng = StdRng::seed_from_u64(44);
    for round in 0..200 {
        let n = rng.random_range(2..=8);
        let a = match round % 3 {
            0 => random_positive(n, 3.0, &mut rng),
            1 => random_sparse(n, 3.0, 0.4, &mut rng),
            _ => random_reciprocal(n, 9.0, &mut rng),
        };
        let direct = spectral_radius(&a).unwrap();
        let karp = oracle::karp_radius(&a).unwrap();
        assert!(
            direct.approx_eq(karp, TOL),
            "spectral {direct} vs karp {karp} (n = {n}, round {round})"
        );
    }
    let elapsed = started.elapsed();
    println!("ACCEPTANCE criterion 6: PASS ({elapsed:?})");
}
