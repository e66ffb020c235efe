//! Log-concavity of chromatic polynomials at integer arguments: exact
//! checks, the degree-based threshold above which concavity is guaranteed,
//! the six-class counterexample family below it, and the modified family
//! that restores concavity at the cost of unbounded chromatic number.
//!
//! Every verdict here is computed over exact integers. Floating point
//! appears only in the threshold formula, which feeds the scan range, never
//! a verdict.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::chromatic::{BlowupEvaluator, binomial, blowup_eval};
use crate::error::{Error, Result};
use crate::graph::seymour_base;
use crate::poly::Polynomial;

/// Verdicts of P(q-1)P(q+1) <= P(q)^2 over an integer range.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LogConcavityReport {
    pub q_range: (i64, i64),
    /// One (q, holds) verdict per integer in the range.
    pub results: Vec<(i64, bool)>,
    pub violations: Vec<i64>,
    /// Concavity is guaranteed at q >= this threshold.
    pub threshold_q0: i64,
    /// Violations at or above the threshold. Any entry here is a bug in
    /// this toolkit, never a mathematical discovery.
    pub contradictions: Vec<i64>,
}

/// One row of the six-class family scan: exact counts at q = 5, 6, 7, the
/// three displayed bound values, and the verdicts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeymourRow {
    pub n: u32,
    #[serde(with = "crate::serde_big::biguint_dec")]
    pub p5: BigUint,
    #[serde(with = "crate::serde_big::biguint_dec")]
    pub p6: BigUint,
    #[serde(with = "crate::serde_big::biguint_dec")]
    pub p7: BigUint,
    /// 27^n.
    #[serde(with = "crate::serde_big::biguint_dec")]
    pub lb5: BigUint,
    /// 217^n.
    #[serde(with = "crate::serde_big::biguint_dec")]
    pub lb7: BigUint,
    /// 1080*72^n + 210*64^n + 360*48^n + 360*36^n + 90*16^n.
    #[serde(with = "crate::serde_big::biguint_dec")]
    pub ub6: BigUint,
    /// p5 * p7 > p6^2: log-concavity fails at q = 6.
    pub inequality_holds: bool,
    /// p5 >= lb5, p6 <= ub6, p7 >= lb7.
    pub bounds_hold: [bool; 3],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeymourReport {
    pub rows: Vec<SeymourRow>,
    /// Least n in range from which p5*p7 > p6^2 holds through the end of
    /// the range; None if the final row still fails.
    pub n_star: Option<u32>,
    /// Observed maximum degree of the family is this coefficient times n.
    pub max_degree_coefficient: usize,
    pub degree_note: String,
}

/// One row of the ratio table (n^2-6n+7)/(n^2-1).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RatioRow {
    pub n: u32,
    pub numerator: u64,
    pub denominator: u64,
    pub ratio: f64,
    /// |ratio - 1| < 6/(n-1), checked exactly.
    pub within_bound: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RatioReport {
    pub rows: Vec<RatioRow>,
    pub monotone_increasing: bool,
    pub all_within_bound: bool,
}

/// True iff P(q-1)P(q+1) <= P(q)^2, over exact integers.
pub fn logcc_check(p: &Polynomial, q: i64) -> bool {
    let left = p.eval_i64(q - 1) * p.eval_i64(q + 1);
    let mid = p.eval_i64(q);
    left <= &mid * &mid
}

/// Integer threshold above which log-concavity is guaranteed for maximum
/// degree `delta`: ceil(sqrt(2) * C * delta + 1), with the constant rounded
/// up to four decimals so rounding never weakens the guarantee.
pub fn threshold_q0(delta: usize, kstar: f64) -> i64 {
    let up = (kstar * 1e4).ceil() / 1e4;
    (std::f64::consts::SQRT_2 * up * delta as f64 + 1.0).ceil() as i64
}

/// Scans P(q-1)P(q+1) <= P(q)^2 for q in [lo, hi], recording violations and
/// flagging any at or above the threshold for `delta` and `kstar`.
pub fn logcc_scan(
    p: &Polynomial,
    lo: i64,
    hi: i64,
    delta: usize,
    kstar: f64,
) -> Result<LogConcavityReport> {
    if lo > hi {
        return Err(Error::InvalidParameter(format!(
            "scan range is empty: lo = {lo}, hi = {hi}"
        )));
    }
    let threshold = threshold_q0(delta, kstar);
    let mut results = Vec::with_capacity((hi - lo + 1) as usize);
    let mut violations = Vec::new();
    for q in lo..=hi {
        let holds = logcc_check(p, q);
        results.push((q, holds));
        if !holds {
            violations.push(q);
        }
    }
    let contradictions = violations
        .iter()
        .copied()
        .filter(|&q| q >= threshold)
        .collect();
    Ok(LogConcavityReport {
        q_range: (lo, hi),
        results,
        violations,
        threshold_q0: threshold,
        contradictions,
    })
}

fn check_hypotheses(r2: f64, delta: usize, kstar: f64, q: f64) -> Result<f64> {
    let s = kstar * delta as f64;
    if r2 > s * s {
        return Err(Error::Domain(format!(
            "root modulus exceeds the bound: |root|^2 = {r2}, bound^2 = {}",
            s * s
        )));
    }
    let q0 = std::f64::consts::SQRT_2 * s + 1.0;
    if q <= q0 {
        return Err(Error::Domain(format!(
            "q = {q} is not above the threshold {q0}"
        )));
    }
    Ok(s)
}

/// The real-root step of the concavity argument: for |alpha| <= kstar*delta
/// and q above the threshold, (q-1-alpha)(q+1-alpha) is positive and
/// strictly below (q-alpha)^2.
pub fn linear_factor_check(alpha: f64, delta: usize, kstar: f64, q: f64) -> Result<bool> {
    check_hypotheses(alpha * alpha, delta, kstar, q)?;
    let left = (q - 1.0 - alpha) * (q + 1.0 - alpha);
    let right = (q - alpha) * (q - alpha);
    Ok(left < right && left > 0.0 && right > 0.0)
}

/// The conjugate-pair step: for a^2 + b^2 <= (kstar*delta)^2 and q above
/// the threshold, ((q-1-a)^2+b^2)((q+1-a)^2+b^2) <= ((q-a)^2+b^2)^2.
pub fn quadratic_factor_check(a: f64, b: f64, delta: usize, kstar: f64, q: f64) -> Result<bool> {
    check_hypotheses(a * a + b * b, delta, kstar, q)?;
    let left = ((q - 1.0 - a).powi(2) + b * b) * ((q + 1.0 - a).powi(2) + b * b);
    let right = ((q - a).powi(2) + b * b).powi(2);
    Ok(left <= right)
}

/// Exact scan of the six-class family: counts at q = 5, 6, 7 for each class
/// size n in [n_lo, n_hi], the displayed bounds, and the concavity-failure
/// inequality p5*p7 > p6^2.
pub fn seymour_report(n_lo: u32, n_hi: u32) -> Result<SeymourReport> {
    if n_lo < 1 || n_lo > n_hi {
        return Err(Error::InvalidParameter(format!(
            "need 1 <= n_lo <= n_hi, got [{n_lo}, {n_hi}]"
        )));
    }
    let base = seymour_base();
    let eval5 = BlowupEvaluator::new(&base, 5)?;
    let eval6 = BlowupEvaluator::new(&base, 6)?;
    let eval7 = BlowupEvaluator::new(&base, 7)?;

    let mut rows = Vec::with_capacity((n_hi - n_lo + 1) as usize);
    for n in n_lo..=n_hi {
        let p5 = eval5.eval(n);
        let p6 = eval6.eval(n);
        let p7 = eval7.eval(n);
        let lb5 = BigUint::from(27u32).pow(n);
        let lb7 = BigUint::from(217u32).pow(n);
        let ub6 = BigUint::from(1080u32) * BigUint::from(72u32).pow(n)
            + BigUint::from(210u32) * BigUint::from(64u32).pow(n)
            + BigUint::from(360u32) * BigUint::from(48u32).pow(n)
            + BigUint::from(360u32) * BigUint::from(36u32).pow(n)
            + BigUint::from(90u32) * BigUint::from(16u32).pow(n);
        let inequality_holds = &p5 * &p7 > &p6 * &p6;
        let bounds_hold = [p5 >= lb5, p6 <= ub6, p7 >= lb7];
        rows.push(SeymourRow {
            n,
            p5,
            p6,
            p7,
            lb5,
            lb7,
            ub6,
            inequality_holds,
            bounds_hold,
        });
    }

    // Least n whose inequality verdict is true and stays true to the end.
    let mut n_star = None;
    for row in rows.iter().rev() {
        if row.inequality_holds {
            n_star = Some(row.n);
        } else {
            break;
        }
    }

    let max_degree_coefficient = base.max_degree();
    Ok(SeymourReport {
        rows,
        n_star,
        max_degree_coefficient,
        degree_note: format!(
            "Maximum degree counted from the nine-pair construction is {max_degree_coefficient}n \
             (classes 1-3 each meet four classes of size n, classes 4-6 two); \
             the figure 5n-5 sometimes quoted for this family does not match the construction."
        ),
    })
}

/// Verifies the universal-vertex coloring identity for the modified family:
/// with m = n^2 - 6n universal vertices added to the six-class graph,
/// counts at k split as k(k-1)...(k-m+1) times the six-class count at k-m.
///
/// Left side: peel universal vertices one at a time, each takes one of the
/// remaining colors. Right side: the displayed form, binomial(k, m) * m!
/// times the six-class count. The shifted argument is read as k - (n^2-6n);
/// reading it as k - n^2 - 6n would make the color count negative.
pub fn modified_example_check(n: u32, k: u64) -> Result<bool> {
    if n < 6 {
        return Err(Error::Domain(format!(
            "the modified family needs n >= 6, got {n}"
        )));
    }
    let m = n as u64 * (n as u64 - 6);
    if k < m {
        return Err(Error::Domain(format!(
            "need k >= n^2 - 6n = {m}, got k = {k}"
        )));
    }
    let residual_q: u32 = (k - m).try_into().map_err(|_| {
        Error::InvalidParameter(format!("k - m = {} does not fit u32", k - m))
    })?;
    let base = seymour_base();

    let mut left = BigUint::from(1u32);
    for i in 0..m {
        left *= BigUint::from(k - i);
    }
    left *= BlowupEvaluator::new(&base, residual_q)?.eval(n);

    let mut m_factorial = BigUint::from(1u32);
    for i in 2..=m {
        m_factorial *= BigUint::from(i);
    }
    let right = binomial(k, m) * m_factorial * blowup_eval(&base, n, residual_q)?;

    Ok(left == right)
}

/// Ratio table (n^2-6n+7)/(n^2-1) for n = 7..n_hi: the chromatic number of
/// the modified family over its vertex-based concavity threshold, tending
/// to 1. Monotonicity and the 6/(n-1) distance bound are checked exactly.
pub fn asymptotic_ratio_report(n_hi: u32) -> Result<RatioReport> {
    if n_hi < 7 {
        return Err(Error::InvalidParameter(format!(
            "ratio table starts at n = 7, got n_hi = {n_hi}"
        )));
    }
    let mut rows = Vec::new();
    let mut monotone_increasing = true;
    let mut all_within_bound = true;
    let mut prev: Option<(u64, u64)> = None;
    for n in 7..=n_hi {
        let n = n as u64;
        let numerator = n * n - 6 * n + 7;
        let denominator = n * n - 1;
        // |ratio - 1| = (6n - 8)/(n^2 - 1) < 6/(n - 1), cross-multiplied.
        let within_bound = (6 * n - 8) * (n - 1) < 6 * denominator;
        all_within_bound &= within_bound;
        if let Some((pn, pd)) = prev {
            // numerator/denominator > pn/pd, cross-multiplied.
            monotone_increasing &= (numerator as u128) * (pd as u128)
                > (pn as u128) * (denominator as u128);
        }
        prev = Some((numerator, denominator));
        rows.push(RatioRow {
            n: n as u32,
            numerator,
            denominator,
            ratio: numerator as f64 / denominator as f64,
            within_bound,
        });
    }
    Ok(RatioReport {
        rows,
        monotone_increasing,
        all_within_bound,
    })
}
