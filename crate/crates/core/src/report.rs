//! Report emission: CSV tables with stable columns and a static SVG root
//! plot. Big integers are always emitted as decimal strings.

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use std::fmt::Write as _;

use crate::bounds::{RootBoundReport, RootSet};
use crate::concavity::{LogConcavityReport, RatioReport, SeymourReport};

/// Columns: n, p5, p6, p7, lb5, ub6, lb7,
/// p5_ge_lb5, p6_le_ub6, p7_ge_lb7, inequality_holds.
pub fn seymour_csv(report: &SeymourReport) -> String {
    let mut out = String::from(
        "n,p5,p6,p7,lb5,ub6,lb7,p5_ge_lb5,p6_le_ub6,p7_ge_lb7,inequality_holds\n",
    );
    for r in &report.rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{},{}",
            r.n,
            r.p5,
            r.p6,
            r.p7,
            r.lb5,
            r.ub6,
            r.lb7,
            r.bounds_hold[0],
            r.bounds_hold[1],
            r.bounds_hold[2],
            r.inequality_holds
        );
    }
    out
}

/// Columns: q, holds.
pub fn logcc_csv(report: &LogConcavityReport) -> String {
    let mut out = String::from("q,holds\n");
    for (q, holds) in &report.results {
        let _ = writeln!(out, "{q},{holds}");
    }
    out
}

/// Columns: re, im.
pub fn roots_csv(set: &RootSet) -> String {
    let mut out = String::from("re,im\n");
    for z in &set.roots {
        let _ = writeln!(out, "{},{}", z.re, z.im);
    }
    out
}

/// Columns: n, numerator, denominator, ratio, within_bound.
pub fn ratio_csv(report: &RatioReport) -> String {
    let mut out = String::from("n,numerator,denominator,ratio,within_bound\n");
    for r in &report.rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{}",
            r.n, r.numerator, r.denominator, r.ratio, r.within_bound
        );
    }
    out
}

/// Static SVG of the roots in the complex plane with the disk of radius
/// c * max_degree. No scripts, no external references.
pub fn root_plot_svg(report: &RootBoundReport) -> String {
    const SIZE: f64 = 480.0;
    const HALF: f64 = SIZE / 2.0;
    const PLOT: f64 = 210.0;
    let world = report.bound.max(report.max_modulus).max(1.0) * 1.15;
    let x = |re: f64| HALF + re / world * PLOT;
    let y = |im: f64| HALF - im / world * PLOT;

    let mut svg = String::new();
    let _ = write!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {SIZE} {SIZE}" width="{SIZE}" height="{SIZE}">"#
    );
    let _ = write!(svg, r#"<rect width="{SIZE}" height="{SIZE}" fill="white"/>"#);
    let _ = write!(
        svg,
        r##"<line x1="0" y1="{HALF}" x2="{SIZE}" y2="{HALF}" stroke="#bbb" stroke-width="1"/>"##
    );
    let _ = write!(
        svg,
        r##"<line x1="{HALF}" y1="0" x2="{HALF}" y2="{SIZE}" stroke="#bbb" stroke-width="1"/>"##
    );
    if report.bound > 0.0 {
        let _ = write!(
            svg,
            r##"<circle cx="{HALF}" cy="{HALF}" r="{:.2}" fill="none" stroke="#2266cc" stroke-width="1.5" stroke-dasharray="6 4"/>"##,
            report.bound / world * PLOT
        );
    }
    for z in &report.roots.roots {
        let _ = write!(
            svg,
            r##"<circle cx="{:.2}" cy="{:.2}" r="4" fill="#cc3322" fill-opacity="0.8"/>"##,
            x(z.re),
            y(z.im)
        );
    }
    let _ = write!(
        svg,
        r#"<text x="8" y="20" font-family="monospace" font-size="13">max |root| = {:.6}, bound = {:.6}, pass = {}</text>"#,
        report.max_modulus, report.bound, report.pass
    );
    svg.push_str("</svg>");
    svg
}

/// log10 of a big integer, accurate to double precision.
/// Returns negative infinity for zero.
pub fn log10_big(x: &BigUint) -> f64 {
    if x.is_zero() {
        return f64::NEG_INFINITY;
    }
    let bits = x.bits();
    if bits <= 53 {
        return x.to_f64().expect("fits in f64").log10();
    }
    let shift = bits - 53;
    let top = (x >> shift).to_f64().expect("53 bits fit in f64");
    top.log10() + shift as f64 * std::f64::consts::LOG10_2
}
