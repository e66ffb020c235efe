//! Seeded ensemble verification: the oracle triangle, the root-modulus
//! bound, integer log-concavity above the threshold, and the proof-algebra
//! sweeps. One ChaCha8 stream per run makes every summary a pure function
//! of (seed, count).

use num_bigint::BigInt;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::bounds::{check_root_bound_with_budget, fp_constant};
use crate::chromatic::{
    Budgets, chromatic_polynomial_with_budget, count_colorings_bruteforce_with_budget,
    inclusion_exclusion_poly_with_budget,
};
use crate::concavity::{linear_factor_check, logcc_scan, quadratic_factor_check, threshold_q0};
use crate::error::Result;
use crate::graph::{Graph, chromatic_number};

/// Counts from one verification run; `all_passed` is the headline verdict.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationSummary {
    pub seed: u64,
    /// Constant used for root bounds and thresholds.
    pub kstar: f64,
    pub oracle_graphs: usize,
    /// Triple agreement comparisons (three routes, q = 0..=5).
    pub oracle_checks: usize,
    pub oracle_failures: usize,
    /// P(chi) > 0 and P(chi - 1) = 0 checks.
    pub chi_checks: usize,
    pub chi_failures: usize,
    pub root_bound_graphs: usize,
    pub root_bound_failures: usize,
    pub concavity_scans: usize,
    /// Violations at or above the threshold; must stay zero.
    pub concavity_contradictions: usize,
    pub linear_samples: usize,
    pub linear_failures: usize,
    pub quadratic_samples: usize,
    pub quadratic_failures: usize,
    pub all_passed: bool,
}

/// Deterministic random graphs: `count` samples with n in [1, max_n] and
/// uniform edge probability, all drawn from one seeded stream.
pub fn random_ensemble(count: usize, max_n: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.random_range(1..=max_n);
            let p = rng.random::<f64>();
            let gseed = rng.random::<u64>();
            Graph::random(n, p, gseed).expect("probability is in range")
        })
        .collect()
}

/// Runs every suite at the given size: `count` oracle graphs (n <= 7),
/// `count` root-bound/concavity graphs (n <= 9), and 50 * `count` samples
/// per proof-algebra check.
pub fn verify_ensemble(seed: u64, count: usize) -> Result<VerificationSummary> {
    let kstar = fp_constant(1e-9)?.value;
    let budgets = Budgets {
        // K7 has 21 edges; keep the full n <= 7 range eligible.
        max_edges: 21,
        ..Budgets::default()
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let mut summary = VerificationSummary {
        seed,
        kstar,
        oracle_graphs: 0,
        oracle_checks: 0,
        oracle_failures: 0,
        chi_checks: 0,
        chi_failures: 0,
        root_bound_graphs: 0,
        root_bound_failures: 0,
        concavity_scans: 0,
        concavity_contradictions: 0,
        linear_samples: 0,
        linear_failures: 0,
        quadratic_samples: 0,
        quadratic_failures: 0,
        all_passed: false,
    };

    // Oracle triangle: three independent routes agree exactly.
    for _ in 0..count {
        let n = rng.random_range(1..=7);
        let p = rng.random::<f64>();
        let gseed = rng.random::<u64>();
        let g = Graph::random(n, p, gseed).expect("probability is in range");
        summary.oracle_graphs += 1;

        let poly = chromatic_polynomial_with_budget(&g, &budgets)?;
        let ie = inclusion_exclusion_poly_with_budget(&g, &budgets)?;
        for q in 0..=5u32 {
            let by_poly = poly.eval(&BigInt::from(q));
            let by_ie = ie.eval(&BigInt::from(q));
            let by_count =
                BigInt::from(count_colorings_bruteforce_with_budget(&g, q, &budgets)?);
            summary.oracle_checks += 1;
            if by_poly != by_count || by_ie != by_count {
                summary.oracle_failures += 1;
            }
        }
        if !poly.has_chromatic_shape(g.n()) {
            summary.oracle_failures += 1;
        }

        let chi = chromatic_number(&g);
        summary.chi_checks += 1;
        let at_chi = poly.eval_i64(chi as i64);
        let below = if chi > 0 {
            poly.eval_i64(chi as i64 - 1)
        } else {
            BigInt::from(0)
        };
        if at_chi <= BigInt::from(0) || (chi > 0 && below != BigInt::from(0)) {
            summary.chi_failures += 1;
        }
    }

    // Root bound and concavity above the threshold, on one n <= 9 ensemble.
    for _ in 0..count {
        let n = rng.random_range(1..=9);
        let p = rng.random::<f64>();
        let gseed = rng.random::<u64>();
        let g = Graph::random(n, p, gseed).expect("probability is in range");
        summary.root_bound_graphs += 1;

        let report = check_root_bound_with_budget(&g, kstar, 1e-6, &budgets)?;
        if !report.pass {
            summary.root_bound_failures += 1;
        }

        let poly = chromatic_polynomial_with_budget(&g, &budgets)?;
        let delta = g.max_degree();
        let hi = threshold_q0(delta, kstar) + 20;
        let scan = logcc_scan(&poly, 0, hi, delta, kstar)?;
        summary.concavity_scans += 1;
        summary.concavity_contradictions += scan.contradictions.len();
    }

    // Proof algebra: randomized samples inside the hypothesis region, with
    // half the quadratic samples pinned to the disk boundary.
    for _ in 0..count * 50 {
        let delta = rng.random_range(1..=10usize);
        let s = kstar * delta as f64;
        let q0 = std::f64::consts::SQRT_2 * s + 1.0;

        let alpha = rng.random_range(-s..=s);
        let q = q0 + rng.random::<f64>() * 10.0 * s + 1e-9;
        summary.linear_samples += 1;
        if !linear_factor_check(alpha, delta, kstar, q)? {
            summary.linear_failures += 1;
        }

        // Boundary samples sit a hair inside the disk so that cos/sin
        // rounding cannot push a^2 + b^2 past s^2.
        let r = if rng.random::<bool>() {
            s * (1.0 - 1e-9)
        } else {
            s * rng.random::<f64>().sqrt()
        };
        let theta = rng.random::<f64>() * std::f64::consts::TAU;
        let q = q0 + rng.random::<f64>() * 10.0 * s + 1e-9;
        summary.quadratic_samples += 1;
        if !quadratic_factor_check(r * theta.cos(), r * theta.sin(), delta, kstar, q)? {
            summary.quadratic_failures += 1;
        }
    }

    summary.all_passed = summary.oracle_failures == 0
        && summary.chi_failures == 0
        && summary.root_bound_failures == 0
        && summary.concavity_contradictions == 0
        && summary.linear_failures == 0
        && summary.quadratic_failures == 0;
    Ok(summary)
}
