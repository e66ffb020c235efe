//! Root-bound constants by 1-D minimization and a complex root solver for
//! chromatic polynomials.
//!
//! Both objectives use the natural logarithm; that choice reproduces the
//! reference values 7.964 and 6.907. Floating point stays inside this
//! module: nothing here feeds back into exact-arithmetic code paths.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::chromatic::{Budgets, chromatic_polynomial_with_budget};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::Polynomial;

/// A minimized constant with enough context to reproduce it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundConstant {
    pub value: f64,
    pub argmin: f64,
    /// Interval the golden-section search started from.
    pub bracket: (f64, f64),
    pub tolerance: f64,
}

/// All complex roots of one polynomial, with multiplicity.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RootSet {
    /// Sorted by real part, then imaginary part.
    pub roots: Vec<Complex64>,
    /// |P(root)| scaled by a local derivative estimate; exactly 0.0 for
    /// roots deflated in integer arithmetic.
    pub residuals: Vec<f64>,
    pub degree: usize,
}

impl RootSet {
    pub fn max_modulus(&self) -> f64 {
        self.roots.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Largest distance from any non-real root to its best conjugate match.
    pub fn conjugate_defect(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for z in &self.roots {
            if z.im == 0.0 {
                continue;
            }
            let best = self
                .roots
                .iter()
                .map(|w| (w - z.conj()).norm())
                .fold(f64::INFINITY, f64::min);
            worst = worst.max(best);
        }
        worst
    }
}

/// Outcome of checking all roots of one chromatic polynomial against a
/// modulus bound proportional to the maximum degree.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RootBoundReport {
    pub n: usize,
    pub max_degree: usize,
    pub c: f64,
    /// c times the maximum degree.
    pub bound: f64,
    pub max_modulus: f64,
    pub margin: f64,
    pub pass: bool,
    pub roots: RootSet,
}

/// (a + e^a) / ln(1 + a e^{-a}), defined for a > 0.
pub fn sokal_objective(a: f64) -> Result<f64> {
    if !(a > 0.0) {
        return Err(Error::Domain(format!(
            "objective needs a > 0, got {a}"
        )));
    }
    Ok((a + a.exp()) / (a * (-a).exp()).ln_1p())
}

/// y / ((2 - y) ln y), defined for 1 < y < 2.
pub fn fp_objective(y: f64) -> Result<f64> {
    if !(y > 1.0 && y < 2.0) {
        return Err(Error::Domain(format!(
            "objective needs 1 < y < 2, got {y}"
        )));
    }
    Ok(y / ((2.0 - y) * y.ln()))
}

/// Brackets the minimum on a 1000-point grid, then narrows by golden
/// section until the abscissa interval is below the tolerance.
fn minimize(f: impl Fn(f64) -> f64, lo: f64, hi: f64, tolerance: f64) -> (f64, f64, (f64, f64)) {
    const GRID: usize = 1000;
    let step = (hi - lo) / GRID as f64;
    let mut best_i = 0;
    let mut best_v = f64::INFINITY;
    for i in 0..=GRID {
        let x = lo + step * i as f64;
        let v = f(x);
        if v < best_v {
            best_v = v;
            best_i = i;
        }
    }
    let b_lo = lo + step * best_i.saturating_sub(1) as f64;
    let b_hi = lo + step * (best_i + 1).min(GRID) as f64;
    let bracket = (b_lo, b_hi);

    const INVPHI: f64 = 0.618_033_988_749_894_8;
    let (mut a, mut b) = bracket;
    let mut x1 = b - INVPHI * (b - a);
    let mut x2 = a + INVPHI * (b - a);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    for _ in 0..500 {
        if b - a <= tolerance {
            break;
        }
        if f1 <= f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - INVPHI * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + INVPHI * (b - a);
            f2 = f(x2);
        }
    }
    let argmin = 0.5 * (a + b);
    (f(argmin), argmin, bracket)
}

/// Minimum of `sokal_objective` over a in (0, 4]. The objective diverges at
/// 0+ and grows past the minimum, so the grid bracket is reliable.
pub fn sokal_constant(tolerance: f64) -> Result<BoundConstant> {
    check_tolerance(tolerance)?;
    let f = |a: f64| sokal_objective(a).unwrap_or(f64::INFINITY);
    let (value, argmin, bracket) = minimize(f, 1e-9, 4.0, tolerance);
    Ok(BoundConstant {
        value,
        argmin,
        bracket,
        tolerance,
    })
}

/// Minimum of `fp_objective` over (1, 2), inset by epsilon at both open ends.
pub fn fp_constant(tolerance: f64) -> Result<BoundConstant> {
    check_tolerance(tolerance)?;
    let f = |y: f64| fp_objective(y).unwrap_or(f64::INFINITY);
    let (value, argmin, bracket) = minimize(f, 1.0 + 1e-9, 2.0 - 1e-9, tolerance);
    Ok(BoundConstant {
        value,
        argmin,
        bracket,
        tolerance,
    })
}

fn check_tolerance(tolerance: f64) -> Result<()> {
    if !(tolerance > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "tolerance must be positive, got {tolerance}"
        )));
    }
    Ok(())
}

/// All complex roots of P, with multiplicity.
///
/// Integer roots of modulus at most 64 (which covers every integer root a
/// chromatic polynomial in scope can have) are deflated by exact synthetic
/// division and reported with residual 0. The rest go through Aberth
/// simultaneous iteration in double precision; degrees 1 and 2 use closed
/// forms.
pub fn poly_roots(p: &Polynomial, tolerance: f64) -> Result<RootSet> {
    check_tolerance(tolerance)?;
    let degree = match p.degree() {
        Some(d) if d >= 1 => d,
        _ => {
            return Err(Error::InvalidParameter(
                "root solving needs a nonzero polynomial of degree >= 1".into(),
            ));
        }
    };

    let mut exact: Vec<Complex64> = Vec::new();
    let mut work = p.clone();
    for r in 0..=64i64 {
        let candidates = if r == 0 { vec![0] } else { vec![r, -r] };
        for c in candidates {
            let root = BigInt::from(c);
            while let Some(q) = work.divide_by_linear(&root) {
                exact.push(Complex64::new(c as f64, 0.0));
                work = q;
            }
        }
    }

    let mut roots: Vec<(Complex64, f64)> = exact.into_iter().map(|z| (z, 0.0)).collect();
    let rem_degree = work.degree().expect("quotient of nonzero is nonzero");
    if rem_degree > 0 {
        let coeffs = work.coeffs_f64().ok_or_else(|| {
            Error::Domain("coefficients overflow double precision".into())
        })?;
        let lead = coeffs[rem_degree];
        let monic: Vec<f64> = coeffs.iter().map(|c| c / lead).collect();
        for (z, r) in float_roots(&monic, tolerance)? {
            roots.push((z, r));
        }
    }

    roots.sort_by(|a, b| {
        (a.0.re, a.0.im)
            .partial_cmp(&(b.0.re, b.0.im))
            .expect("roots are finite")
    });
    let (roots, residuals) = roots.into_iter().unzip();
    Ok(RootSet {
        roots,
        residuals,
        degree,
    })
}

/// Roots of a monic polynomial given by f64 coefficients, lowest first.
fn float_roots(monic: &[f64], tolerance: f64) -> Result<Vec<(Complex64, f64)>> {
    let d = monic.len() - 1;
    let eval = |z: Complex64| {
        let mut acc = Complex64::zero();
        for &c in monic.iter().rev() {
            acc = acc * z + c;
        }
        acc
    };
    let eval_d = |z: Complex64| {
        let mut acc = Complex64::zero();
        for (i, &c) in monic.iter().enumerate().skip(1).rev() {
            acc = acc * z + c * i as f64;
        }
        acc
    };
    let residual_at = |z: Complex64| eval(z).norm() / eval_d(z).norm().max(1.0);

    if d == 1 {
        let z = Complex64::new(-monic[0], 0.0);
        return Ok(vec![(z, residual_at(z))]);
    }
    if d == 2 {
        let (b, c) = (monic[1], monic[0]);
        let disc = b * b - 4.0 * c;
        let pair = if disc >= 0.0 {
            // Avoid cancellation: compute the large-magnitude root first.
            let s = -0.5 * (b + b.signum() * disc.sqrt());
            if s == 0.0 {
                (Complex64::zero(), Complex64::zero())
            } else {
                (Complex64::new(s, 0.0), Complex64::new(c / s, 0.0))
            }
        } else {
            let re = -b / 2.0;
            let im = (-disc).sqrt() / 2.0;
            (Complex64::new(re, im), Complex64::new(re, -im))
        };
        return Ok(vec![
            (pair.0, residual_at(pair.0)),
            (pair.1, residual_at(pair.1)),
        ]);
    }

    // Aberth simultaneous iteration from a circle just outside the Cauchy
    // root bound, with deterministic angular jitter to break symmetry.
    let radius = 1.0 + monic[..d].iter().fold(0.0f64, |m, c| m.max(c.abs()));
    let mut z: Vec<Complex64> = (0..d)
        .map(|j| {
            let theta = std::f64::consts::TAU * (j as f64 + 0.25) / d as f64 + 0.004 * j as f64;
            Complex64::from_polar(radius, theta)
        })
        .collect();

    let internal = tolerance.min(1e-12);
    let max_iter = 1000;
    let mut iterations = 0;
    for _ in 0..max_iter {
        iterations += 1;
        let mut worst: f64 = 0.0;
        for j in 0..d {
            worst = worst.max(residual_at(z[j]));
        }
        if worst <= internal {
            break;
        }
        for j in 0..d {
            let pv = eval(z[j]);
            let mut dv = eval_d(z[j]);
            if dv.norm() < 1e-300 {
                let nudge = Complex64::new(1e-8 * (1.0 + z[j].norm()), 1e-8);
                z[j] += nudge;
                dv = eval_d(z[j]);
            }
            let w = pv / dv;
            let mut sum = Complex64::zero();
            for k in 0..d {
                if k != j {
                    let diff = z[j] - z[k];
                    if diff.norm() > 1e-300 {
                        sum += diff.inv();
                    }
                }
            }
            let denom = Complex64::new(1.0, 0.0) - w * sum;
            if denom.norm() > 1e-300 {
                z[j] -= w / denom;
            } else {
                z[j] -= w;
            }
        }
    }

    let residuals: Vec<f64> = z.iter().map(|&zj| residual_at(zj)).collect();
    let max_residual = residuals.iter().fold(0.0f64, |m, &r| m.max(r));
    if max_residual > tolerance {
        return Err(Error::Convergence {
            iterations,
            max_residual,
            roots: z.iter().map(|w| (w.re, w.im)).collect(),
            residuals,
        });
    }
    Ok(z.into_iter().zip(residuals).collect())
}

/// Checks every root of the chromatic polynomial of g against modulus
/// c times the maximum degree. Passing is the expected outcome; a failure
/// here indicates a solver or construction bug, not a refutation.
pub fn check_root_bound(g: &Graph, c: f64, tolerance: f64) -> Result<RootBoundReport> {
    check_root_bound_with_budget(g, c, tolerance, &Budgets::default())
}

pub fn check_root_bound_with_budget(
    g: &Graph,
    c: f64,
    tolerance: f64,
    budgets: &Budgets,
) -> Result<RootBoundReport> {
    check_tolerance(tolerance)?;
    if !(c > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "bound constant must be positive, got {c}"
        )));
    }
    let p = chromatic_polynomial_with_budget(g, budgets)?;
    let roots = if p.degree().unwrap_or(0) >= 1 {
        poly_roots(&p, tolerance)?
    } else {
        // Zero-vertex graph: constant polynomial, nothing to check.
        RootSet {
            roots: Vec::new(),
            residuals: Vec::new(),
            degree: 0,
        }
    };
    let max_degree = g.max_degree();
    let bound = c * max_degree as f64;
    let max_modulus = roots.max_modulus();
    Ok(RootBoundReport {
        n: g.n(),
        max_degree,
        c,
        bound,
        max_modulus,
        margin: bound - max_modulus,
        pass: max_modulus <= bound + tolerance,
        roots,
    })
}
