//! Acceptance gate: the ten headline criteria, one test each, with the
//! stated tolerances and runtime budgets. Each test prints a single
//! PASS line (visible with --nocapture); cargo's own per-test verdicts
//! mirror them.

use std::time::Instant;

use num_bigint::{BigInt, BigUint};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use polychrome::bounds::{check_root_bound_with_budget, fp_constant, sokal_constant, sokal_objective};
use polychrome::chromatic::{
    Budgets, blowup_eval, chromatic_polynomial, chromatic_polynomial_with_budget,
    count_colorings_bruteforce, count_colorings_bruteforce_with_budget,
    inclusion_exclusion_poly_with_budget,
};
use polychrome::concavity::{
    linear_factor_check, logcc_scan, modified_example_check, quadratic_factor_check,
    seymour_report, threshold_q0,
};
use polychrome::graph::{Graph, seymour_base, seymour_h};
use polychrome::poly::Polynomial;
use polychrome::verify::{random_ensemble, verify_ensemble};

const SEED_ORACLE: u64 = 20_260_815;
const SEED_ROOTS: u64 = 20_260_816;
const SEED_ALGEBRA: u64 = 20_260_817;
const SEED_SUITE: u64 = 20_260_818;

fn oracle_budgets() -> Budgets {
    Budgets {
        max_edges: 21,
        ..Budgets::default()
    }
}

#[test]
fn criterion_01_constants() {
    let t = Instant::now();
    let at_two_fifths = sokal_objective(0.4).unwrap();
    assert!(
        (at_two_fifths - 7.964).abs() <= 1e-3,
        "objective at 2/5 = {at_two_fifths}"
    );
    let k = sokal_constant(1e-6).unwrap();
    assert!(k.value < 8.0, "first constant = {}", k.value);
    assert!(k.value <= at_two_fifths);

    let kstar = fp_constant(1e-6).unwrap();
    assert!(
        (kstar.value - 6.907).abs() <= 1e-3,
        "second constant = {}",
        kstar.value
    );
    assert!(kstar.value < 7.0);

    let elapsed = t.elapsed();
    assert!(elapsed.as_secs_f64() < 1.0, "took {elapsed:?}");
    println!(
        "criterion 01 constants: PASS ({:.5} < 8, {:.5} < 7, {} ms)",
        k.value,
        kstar.value,
        elapsed.as_millis()
    );
}

#[test]
fn criterion_02_oracle_triangle() {
    let t = Instant::now();
    let budgets = oracle_budgets();
    let graphs = random_ensemble(200, 7, SEED_ORACLE);
    let mut comparisons = 0usize;
    for g in &graphs {
        let poly = chromatic_polynomial_with_budget(g, &budgets).unwrap();
        let ie = inclusion_exclusion_poly_with_budget(g, &budgets).unwrap();
        assert_eq!(poly, ie, "route mismatch on {g:?}");
        for q in 0..=5u32 {
            let by_poly = poly.eval(&BigInt::from(q));
            let by_count =
                BigInt::from(count_colorings_bruteforce_with_budget(g, q, &budgets).unwrap());
            assert_eq!(by_poly, by_count, "count mismatch on {g:?} at q={q}");
            comparisons += 1;
        }
    }
    let elapsed = t.elapsed();
    assert!(elapsed.as_secs_f64() < 120.0, "took {elapsed:?}");
    println!(
        "criterion 02 oracle triangle: PASS ({} graphs, {comparisons} comparisons, {} ms)",
        graphs.len(),
        elapsed.as_millis()
    );
}

#[test]
fn criterion_03_closed_forms() {
    let t = Instant::now();
    let budgets = oracle_budgets();

    // Complete graphs: falling factorial, confirmed by the subset oracle.
    for n in 1..=6usize {
        let g = Graph::complete(n);
        let expected = Polynomial::falling_factorial(n);
        assert_eq!(chromatic_polynomial(&g).unwrap(), expected, "K_{n}");
        assert_eq!(
            inclusion_exclusion_poly_with_budget(&g, &budgets).unwrap(),
            expected,
            "K_{n} via subsets"
        );
    }

    // Trees: q(q-1)^(n-1) for paths, stars, and random attachment trees.
    let q_minus_1 = Polynomial::from_i64_coeffs(&[-1, 1]);
    for n in 1..=8usize {
        let mut expected = Polynomial::monomial(1);
        for _ in 1..n {
            expected = &expected * &q_minus_1;
        }
        let mut trees = vec![Graph::path(n), Graph::star(n)];
        for seed in 0..3u64 {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let edges: Vec<(usize, usize)> =
                (1..n).map(|v| (rng.random_range(0..v), v)).collect();
            trees.push(Graph::new(n, &edges).unwrap());
        }
        for g in &trees {
            assert_eq!(chromatic_polynomial(g).unwrap(), expected, "tree on {n}");
            assert_eq!(
                inclusion_exclusion_poly_with_budget(g, &budgets).unwrap(),
                expected,
                "tree on {n} via subsets"
            );
        }
    }

    // Cycles: (q-1)^n + (-1)^n (q-1).
    for n in 3..=8usize {
        let mut power = Polynomial::one();
        for _ in 0..n {
            power = &power * &q_minus_1;
        }
        let expected = if n % 2 == 0 {
            &power + &q_minus_1
        } else {
            &power - &q_minus_1
        };
        let g = Graph::cycle(n).unwrap();
        assert_eq!(chromatic_polynomial(&g).unwrap(), expected, "C_{n}");
    }

    let elapsed = t.elapsed();
    assert!(elapsed.as_secs_f64() < 1.0, "took {elapsed:?}");
    println!(
        "criterion 03 closed forms: PASS (complete/tree/cycle families, {} ms)",
        elapsed.as_millis()
    );
}

#[test]
fn criterion_04_root_bound() {
    let t = Instant::now();
    let kstar = fp_constant(1e-9).unwrap().value;
    let budgets = oracle_budgets();
    let graphs = random_ensemble(100, 9, SEED_ROOTS);
    for g in &graphs {
        let report = check_root_bound_with_budget(g, kstar, 1e-6, &budgets).unwrap();
        assert!(
            report.pass,
            "max modulus {} over bound {} on {g:?}",
            report.max_modulus, report.bound
        );
    }
    let elapsed = t.elapsed();
    assert!(elapsed.as_secs_f64() < 60.0, "took {elapsed:?}");
    println!(
        "criterion 04 root bound: PASS ({} graphs, zero failures, {} ms)",
        graphs.len(),
        elapsed.as_millis()
    );
}

#[test]
fn criterion_05_concavity_above_threshold() {
    let t = Instant::now();
    let kstar = fp_constant(1e-9).unwrap().value;
    let budgets = oracle_budgets();
    let graphs = random_ensemble(100, 9, SEED_ROOTS);
    let mut scanned = 0usize;
    for g in &graphs {
        let poly = chromatic_polynomial_with_budget(g, &budgets).unwrap();
        let delta = g.max_degree();
        let hi = threshold_q0(delta, kstar) + 20;
        let scan = logcc_scan(&poly, 0, hi, delta, kstar).unwrap();
        assert!(
            scan.contradictions.is_empty(),
            "contradictions {:?} on {g:?}",
            scan.contradictions
        );
        scanned += scan.results.len();
    }
    let elapsed = t.elapsed();
    assert!(elapsed.as_secs_f64() < 60.0, "took {elapsed:?}");
    println!(
        "criterion 05 concavity above threshold: PASS ({} graphs, {scanned} checks, {} ms)",
        graphs.len(),
        elapsed.as_millis()
    );
}

#[test]
fn criterion_06_proof_algebra() {
    let t = Instant::now();
    let kstar = fp_constant(1e-9).unwrap().value;
    let mut rng = ChaCha8Rng::seed_from_u64(SEED_ALGEBRA);
    let samples = 10_000usize;
    for _ in 0..samples {
        let delta = rng.random_range(1..=10usize);
        let s = kstar * delta as f64;
        let q0 = std::f64::consts::SQRT_2 * s + 1.0;

        let alpha = rng.random_range(-s..=s);
        let q = q0 + rng.random::<f64>() * 10.0 * s + 1e-9;
        assert!(
            linear_factor_check(alpha, delta, kstar, q).unwrap(),
            "linear check failed at alpha={alpha}, delta={delta}, q={q}"
        );

        let r = if rng.random::<bool>() {
            s * (1.0 - 1e-9)
        } else {
            s * rng.random::<f64>().sqrt()
        };
        let theta = rng.random::<f64>() * std::f64::consts::TAU;
        let q = q0 + rng.random::<f64>() * 10.0 * s + 1e-9;
        assert!(
            quadratic_factor_check(r * theta.cos(), r * theta.sin(), delta, kstar, q).unwrap(),
            "quadratic check failed at r={r}, theta={theta}, delta={delta}, q={q}"
        );
    }
    let elapsed = t.elapsed();
    assert!(elapsed.as_secs_f64() < 5.0, "took {elapsed:?}");
    println!(
        "criterion 06 proof algebra: PASS ({samples} samples per check, zero failures, {} ms)",
        elapsed.as_millis()
    );
}

#[test]
fn criterion_07_seymour_family() {
    let t = Instant::now();
    let report = seymour_report(1, 200).unwrap();
    assert_eq!(report.rows.len(), 200);
    for row in &report.rows {
        assert!(
            row.bounds_hold.iter().all(|&b| b),
            "displayed bound fails at n = {}",
            row.n
        );
    }
    // Derived value, frozen: the concavity-failure inequality first holds
    // at n = 28 and persists through 200.
    assert_eq!(report.n_star, Some(28));
    for row in &report.rows {
        assert_eq!(row.inequality_holds, row.n >= 28, "verdict at n = {}", row.n);
    }
    let elapsed = t.elapsed();
    assert!(elapsed.as_secs_f64() < 120.0, "took {elapsed:?}");
    println!(
        "criterion 07 counterexample family: PASS (bounds hold on [1,200], n* = 28, {} ms)",
        elapsed.as_millis()
    );
}

#[test]
fn criterion_08_blowup_cross_check() {
    let t = Instant::now();
    let base = seymour_base();
    let h1 = seymour_h(1).unwrap();
    for q in 3..=7u32 {
        assert_eq!(
            blowup_eval(&base, 1, q).unwrap(),
            count_colorings_bruteforce(&h1, q).unwrap(),
            "n=1, q={q}"
        );
    }
    let h2 = seymour_h(2).unwrap();
    assert_eq!(
        blowup_eval(&base, 2, 5).unwrap(),
        count_colorings_bruteforce(&h2, 5).unwrap(),
        "n=2, q=5"
    );
    let elapsed = t.elapsed();
    assert!(elapsed.as_secs_f64() < 120.0, "took {elapsed:?}");
    println!(
        "criterion 08 small-n cross-check: PASS (n=1 q=3..7 and n=2 q=5, {} ms)",
        elapsed.as_millis()
    );
}

#[test]
fn criterion_09_modified_family() {
    let t = Instant::now();
    for k in 5..=9u64 {
        assert!(modified_example_check(6, k).unwrap(), "(6, {k})");
    }
    for k in 10..=14u64 {
        assert!(modified_example_check(7, k).unwrap(), "(7, {k})");
    }
    // Generalized small case: two universal vertices over the 6-vertex
    // pattern, counted by brute force.
    let g = seymour_h(1).unwrap().add_universal_vertices(2);
    let direct = count_colorings_bruteforce(&g, 5).unwrap();
    let peeled = BigUint::from(5u32 * 4)
        * count_colorings_bruteforce(&seymour_h(1).unwrap(), 3).unwrap();
    assert_eq!(direct, peeled);
    let elapsed = t.elapsed();
    assert!(elapsed.as_secs_f64() < 60.0, "took {elapsed:?}");
    println!(
        "criterion 09 modified family: PASS (identity on both ranges plus brute force, {} ms)",
        elapsed.as_millis()
    );
}

#[test]
fn criterion_10_theorem_coverage_note() {
    let t = Instant::now();
    // The two general theorems are mathematical statements, not numeric
    // tables; their conclusions are exercised by the ensemble suites
    // (criteria 4-6). This run re-confirms that machinery end to end.
    let summary = verify_ensemble(SEED_SUITE, 25).unwrap();
    assert!(summary.all_passed, "suite summary: {summary:?}");
    let elapsed = t.elapsed();
    println!(
        "criterion 10 theorem coverage: PASS (covered by ensemble suites; spot run of {} graphs, {} ms)",
        summary.oracle_graphs + summary.root_bound_graphs,
        elapsed.as_millis()
    );
}
