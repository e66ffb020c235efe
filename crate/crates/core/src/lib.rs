//! Exact chromatic polynomials, their complex roots, and log-concavity
//! diagnostics, including the blow-up families that separate the two.

pub mod bounds;
pub mod chromatic;
pub mod concavity;
pub mod error;
pub mod graph;
pub mod poly;
pub mod report;
mod serde_big;
pub mod verify;

pub use bounds::{
    BoundConstant, RootBoundReport, RootSet, check_root_bound, fp_constant, fp_objective,
    poly_roots, sokal_constant, sokal_objective,
};
pub use chromatic::{
    BigCount, BlowupEvaluator, Budgets, blowup_eval, chromatic_polynomial,
    count_colorings_bruteforce, inclusion_exclusion_poly,
};
pub use concavity::{
    LogConcavityReport, RatioReport, SeymourReport, SeymourRow, asymptotic_ratio_report,
    linear_factor_check, logcc_check, logcc_scan, modified_example_check, quadratic_factor_check,
    seymour_report, threshold_q0,
};
pub use error::{Error, Result};
pub use graph::{Graph, chromatic_number, modified_s, parse_graph, serialize_graph, seymour_h};
pub use poly::Polynomial;
pub use report::{log10_big, logcc_csv, ratio_csv, root_plot_svg, roots_csv, seymour_csv};
pub use verify::{VerificationSummary, random_ensemble, verify_ensemble};
