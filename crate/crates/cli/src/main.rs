//! polychrome: exact chromatic polynomials, their complex roots, and
//! log-concavity reports from the command line.
//!
//! Exit codes: 0 success, 2 usage or parse error, 3 resource budget
//! exceeded, 4 internal verification failure (a failed check here means
//! a bug in the toolkit, never a mathematical discovery).

use std::fs;
use std::io::{self, Read as _, Write as _};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use polychrome::bounds::{check_root_bound_with_budget, fp_constant, sokal_constant};
use polychrome::chromatic::{Budgets, chromatic_polynomial_with_budget};
use polychrome::concavity::{
    RatioReport, asymptotic_ratio_report, logcc_scan, modified_example_check, seymour_report,
    threshold_q0,
};
use polychrome::error::Error;
use polychrome::graph::{Graph, parse_graph};
use polychrome::report::{log10_big, logcc_csv, root_plot_svg, roots_csv, seymour_csv};
use polychrome::verify::verify_ensemble;

#[derive(Parser)]
#[command(
    name = "polychrome",
    version,
    about = "Exact chromatic polynomials, roots, and log-concavity reports"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Graph input file; stdin when omitted.
    #[arg(long, global = true)]
    input: Option<PathBuf>,

    /// Output file; stdout when omitted.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Output format. Text is human-oriented; json and csv are stable.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Vertex budget for the exact algorithms.
    #[arg(long, global = true)]
    budget_vertices: Option<usize>,

    /// Edge budget for the subset-expansion route.
    #[arg(long, global = true)]
    budget_edges: Option<usize>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the exact chromatic polynomial of a graph.
    Poly,
    /// Find all chromatic roots and check them against the degree bound.
    Roots {
        /// Residual tolerance for accepting a root.
        #[arg(long, default_value_t = 1e-9)]
        tolerance: f64,
        /// Also write a static SVG plot of roots and the bounding disk.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Scan P(q-1)P(q+1) <= P(q)^2 over an integer range.
    Logcc {
        #[arg(long, default_value_t = 0)]
        lo: i64,
        /// Defaults to the guarantee threshold plus 20.
        #[arg(long)]
        hi: Option<i64>,
    },
    /// Tabulate the six-class family: exact counts at q = 5, 6, 7,
    /// displayed bounds, and the concavity-failure verdict.
    Seymour {
        #[arg(long, default_value_t = 1)]
        n_lo: u32,
        #[arg(long, default_value_t = 50)]
        n_hi: u32,
    },
    /// Check the dominant-vertex identity and the limiting ratio for the
    /// family with n^2-6n extra universal vertices.
    Modified {
        /// Class size of the underlying family; at least 6.
        #[arg(long, default_value_t = 7)]
        n: u32,
        /// Lowest color count to check; defaults just above the number of
        /// universal vertices.
        #[arg(long)]
        k_lo: Option<u64>,
        /// Highest color count to check.
        #[arg(long)]
        k_hi: Option<u64>,
        /// Upper end of the ratio table.
        #[arg(long, default_value_t = 100)]
        ratio_hi: u32,
    },
    /// Compute both root-bound constants by golden-section search.
    Constants {
        #[arg(long, default_value_t = 1e-6)]
        tolerance: f64,
    },
    /// Run the randomized cross-verification suites.
    Verify {
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        count: usize,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        let code = match err {
            Error::Parse { .. }
            | Error::InvalidParameter(_)
            | Error::InvalidVertex { .. }
            | Error::SelfLoop(_)
            | Error::Domain(_) => 2,
            Error::ResourceLimit(_) => 3,
            Error::Convergence { .. } => 4,
        };
        Failure {
            code,
            message: err.to_string(),
        }
    }
}

fn usage_failure(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

fn check_failure(message: impl Into<String>) -> Failure {
    Failure {
        code: 4,
        message: message.into(),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let budgets = budgets_from(&cli)?;
    match &cli.command {
        Command::Poly => cmd_poly(&cli, &budgets),
        Command::Roots { tolerance, svg } => cmd_roots(&cli, &budgets, *tolerance, svg.as_ref()),
        Command::Logcc { lo, hi } => cmd_logcc(&cli, &budgets, *lo, *hi),
        Command::Seymour { n_lo, n_hi } => cmd_seymour(&cli, *n_lo, *n_hi),
        Command::Modified {
            n,
            k_lo,
            k_hi,
            ratio_hi,
        } => cmd_modified(&cli, *n, *k_lo, *k_hi, *ratio_hi),
        Command::Constants { tolerance } => cmd_constants(&cli, *tolerance),
        Command::Verify { seed, count } => cmd_verify(&cli, *seed, *count),
    }
}

fn budgets_from(cli: &Cli) -> Result<Budgets, Failure> {
    let mut budgets = Budgets::default();
    if let Some(v) = cli.budget_vertices {
        if v == 0 {
            return Err(usage_failure("--budget-vertices must be positive"));
        }
        budgets.max_vertices = v;
    }
    if let Some(e) = cli.budget_edges {
        if e == 0 {
            return Err(usage_failure("--budget-edges must be positive"));
        }
        budgets.max_edges = e;
    }
    Ok(budgets)
}

fn load_graph(cli: &Cli) -> Result<Graph, Failure> {
    let text = match &cli.input {
        Some(path) => fs::read_to_string(path)
            .map_err(|e| usage_failure(format!("cannot read {}: {e}", path.display())))?,
        None => {
            let mut buf = String::new();
            io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| usage_failure(format!("cannot read stdin: {e}")))?;
            buf
        }
    };
    Ok(parse_graph(&text)?)
}

/// Writes `content` (newline-terminated) to the chosen sink.
fn emit(cli: &Cli, content: &str) -> Result<(), Failure> {
    let mut owned;
    let text = if content.ends_with('\n') {
        content
    } else {
        owned = String::with_capacity(content.len() + 1);
        owned.push_str(content);
        owned.push('\n');
        &owned
    };
    match &cli.output {
        Some(path) => fs::write(path, text)
            .map_err(|e| usage_failure(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(text.as_bytes())
                .and_then(|()| out.flush())
                .map_err(|e| usage_failure(format!("cannot write stdout: {e}")))
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> Result<String, Failure> {
    serde_json::to_string_pretty(value)
        .map_err(|e| check_failure(format!("serialization failed: {e}")))
}

fn cmd_poly(cli: &Cli, budgets: &Budgets) -> Result<(), Failure> {
    let g = load_graph(cli)?;
    let poly = chromatic_polynomial_with_budget(&g, budgets)?;
    let content = match cli.format {
        Format::Text => poly.to_string(),
        Format::Json => to_json(&poly)?,
        Format::Csv => {
            let mut s = String::from("power,coefficient\n");
            for (k, c) in poly.coeffs().iter().enumerate() {
                s.push_str(&format!("{k},{c}\n"));
            }
            s
        }
    };
    emit(cli, &content)
}

fn cmd_roots(
    cli: &Cli,
    budgets: &Budgets,
    tolerance: f64,
    svg: Option<&PathBuf>,
) -> Result<(), Failure> {
    let kstar = fp_constant(1e-9)?.value;
    let g = load_graph(cli)?;
    let report = check_root_bound_with_budget(&g, kstar, tolerance, budgets)?;
    let content = match cli.format {
        Format::Json => to_json(&report)?,
        Format::Csv => roots_csv(&report.roots),
        Format::Text => {
            let mut s = format!(
                "graph            n = {}, max degree = {}\n\
                 degree           {}\n\
                 max |root|       {:.6}\n\
                 bound            {:.6} (constant {:.6})\n\
                 margin           {:.6}\n\
                 pass             {}\n",
                report.n,
                report.max_degree,
                report.roots.degree,
                report.max_modulus,
                report.bound,
                report.c,
                report.margin,
                if report.pass { "yes" } else { "NO" }
            );
            for (z, r) in report.roots.roots.iter().zip(&report.roots.residuals) {
                s.push_str(&format!(
                    "root             {:+.9} {:+.9}i  (residual {:.1e})\n",
                    z.re, z.im, r
                ));
            }
            s
        }
    };
    emit(cli, &content)?;
    if let Some(path) = svg {
        fs::write(path, root_plot_svg(&report))
            .map_err(|e| usage_failure(format!("cannot write {}: {e}", path.display())))?;
    }
    if report.pass {
        Ok(())
    } else {
        Err(check_failure(format!(
            "root modulus {} exceeds bound {}; this indicates a solver bug",
            report.max_modulus, report.bound
        )))
    }
}

fn cmd_logcc(cli: &Cli, budgets: &Budgets, lo: i64, hi: Option<i64>) -> Result<(), Failure> {
    let kstar = fp_constant(1e-9)?.value;
    let g = load_graph(cli)?;
    let poly = chromatic_polynomial_with_budget(&g, budgets)?;
    let delta = g.max_degree();
    let hi = hi.unwrap_or_else(|| threshold_q0(delta, kstar) + 20);
    let report = logcc_scan(&poly, lo, hi, delta, kstar)?;
    let content = match cli.format {
        Format::Json => to_json(&report)?,
        Format::Csv => logcc_csv(&report),
        Format::Text => {
            let list = |qs: &[i64]| {
                if qs.is_empty() {
                    "none".to_string()
                } else {
                    qs.iter()
                        .map(|q| q.to_string())
                        .collect::<Vec<_>>()
                        .join(", ")
                }
            };
            format!(
                "q range          [{}, {}]\n\
                 threshold q0     {}\n\
                 violations       {}\n\
                 contradictions   {}\n",
                report.q_range.0,
                report.q_range.1,
                report.threshold_q0,
                list(&report.violations),
                list(&report.contradictions)
            )
        }
    };
    emit(cli, &content)?;
    if report.contradictions.is_empty() {
        Ok(())
    } else {
        Err(check_failure(format!(
            "log-concavity violated at or above the threshold (q = {:?}); \
             this indicates a bug in the toolkit",
            report.contradictions
        )))
    }
}

fn cmd_seymour(cli: &Cli, n_lo: u32, n_hi: u32) -> Result<(), Failure> {
    let report = seymour_report(n_lo, n_hi)?;
    let content = match cli.format {
        Format::Json => to_json(&report)?,
        Format::Csv => seymour_csv(&report),
        Format::Text => {
            let mut s = String::from(
                "   n  log10(p5)  log10(p6)  log10(p7)  p5*p7>p6^2  bounds\n",
            );
            for row in &report.rows {
                s.push_str(&format!(
                    "{:>4}  {:>9.3}  {:>9.3}  {:>9.3}  {:>10}  {}\n",
                    row.n,
                    log10_big(&row.p5),
                    log10_big(&row.p6),
                    log10_big(&row.p7),
                    if row.inequality_holds { "yes" } else { "no" },
                    if row.bounds_hold.iter().all(|&b| b) {
                        "ok"
                    } else {
                        "FAIL"
                    }
                ));
            }
            match report.n_star {
                Some(n) => s.push_str(&format!(
                    "concavity failure at q = 6 holds from n = {n} through {}\n",
                    report.rows.last().map_or(n, |r| r.n)
                )),
                None => s.push_str("concavity failure not yet reached in this range\n"),
            }
            s.push_str(&format!("note: {}\n", report.degree_note));
            s
        }
    };
    emit(cli, &content)?;
    if report
        .rows
        .iter()
        .all(|row| row.bounds_hold.iter().all(|&b| b))
    {
        Ok(())
    } else {
        Err(check_failure(
            "a displayed bound failed; this indicates a bug in the toolkit",
        ))
    }
}

#[derive(Serialize)]
struct IdentityRow {
    k: u64,
    holds: bool,
}

#[derive(Serialize)]
struct ModifiedOutput {
    n: u32,
    universal_vertices: u64,
    identity: Vec<IdentityRow>,
    ratio: RatioReport,
}

fn cmd_modified(
    cli: &Cli,
    n: u32,
    k_lo: Option<u64>,
    k_hi: Option<u64>,
    ratio_hi: u32,
) -> Result<(), Failure> {
    let m = u64::from(n) * u64::from(n.saturating_sub(6));
    let k_lo = k_lo.unwrap_or(m + 3);
    let k_hi = k_hi.unwrap_or(m + 7);
    if k_lo > k_hi {
        return Err(usage_failure(format!(
            "color range is empty: k_lo = {k_lo}, k_hi = {k_hi}"
        )));
    }
    let mut identity = Vec::new();
    for k in k_lo..=k_hi {
        identity.push(IdentityRow {
            k,
            holds: modified_example_check(n, k)?,
        });
    }
    let ratio = asymptotic_ratio_report(ratio_hi)?;
    let output = ModifiedOutput {
        n,
        universal_vertices: m,
        identity,
        ratio,
    };
    let content = match cli.format {
        Format::Json => to_json(&output)?,
        // Single-table format: the identity verdicts. The ratio table is
        // available in the json output.
        Format::Csv => {
            let mut s = String::from("k,identity_holds\n");
            for row in &output.identity {
                s.push_str(&format!("{},{}\n", row.k, row.holds));
            }
            s
        }
        Format::Text => {
            let mut s = format!(
                "family           class size {n} plus {m} universal vertices\n"
            );
            for row in &output.identity {
                s.push_str(&format!(
                    "identity at k={:<4} {}\n",
                    row.k,
                    if row.holds { "holds" } else { "FAILS" }
                ));
            }
            let last = output.ratio.rows.last();
            s.push_str(&format!(
                "ratio            {} rows through n = {}; monotone {}, within 6/(n-1) {}\n",
                output.ratio.rows.len(),
                last.map_or(0, |r| r.n),
                if output.ratio.monotone_increasing { "yes" } else { "NO" },
                if output.ratio.all_within_bound { "yes" } else { "NO" }
            ));
            if let Some(r) = last {
                s.push_str(&format!(
                    "ratio at n={:<5} {}/{} = {:.6}\n",
                    r.n, r.numerator, r.denominator, r.ratio
                ));
            }
            s
        }
    };
    emit(cli, &content)?;
    let identity_ok = output.identity.iter().all(|r| r.holds);
    if identity_ok && output.ratio.monotone_increasing && output.ratio.all_within_bound {
        Ok(())
    } else {
        Err(check_failure(
            "an identity or ratio check failed; this indicates a bug in the toolkit",
        ))
    }
}

#[derive(Serialize)]
struct ConstantsOutput {
    sokal: polychrome::bounds::BoundConstant,
    fernandez_procacci: polychrome::bounds::BoundConstant,
}

fn cmd_constants(cli: &Cli, tolerance: f64) -> Result<(), Failure> {
    let output = ConstantsOutput {
        sokal: sokal_constant(tolerance)?,
        fernandez_procacci: fp_constant(tolerance)?,
    };
    let content = match cli.format {
        Format::Json => to_json(&output)?,
        Format::Csv => {
            let mut s = String::from("name,value,argmin,bracket_lo,bracket_hi,tolerance\n");
            for (name, c) in [
                ("sokal", &output.sokal),
                ("fernandez_procacci", &output.fernandez_procacci),
            ] {
                s.push_str(&format!(
                    "{name},{},{},{},{},{}\n",
                    c.value, c.argmin, c.bracket.0, c.bracket.1, c.tolerance
                ));
            }
            s
        }
        Format::Text => format!(
            "sokal constant                {:.6} (< 8) at a = {:.6}, bracket ({:.6}, {:.6})\n\
             fernandez-procacci constant   {:.6} (< 7) at y = {:.6}, bracket ({:.6}, {:.6})\n",
            output.sokal.value,
            output.sokal.argmin,
            output.sokal.bracket.0,
            output.sokal.bracket.1,
            output.fernandez_procacci.value,
            output.fernandez_procacci.argmin,
            output.fernandez_procacci.bracket.0,
            output.fernandez_procacci.bracket.1
        ),
    };
    emit(cli, &content)
}

fn cmd_verify(cli: &Cli, seed: u64, count: usize) -> Result<(), Failure> {
    let summary = verify_ensemble(seed, count)?;
    let content = match cli.format {
        Format::Json => to_json(&summary)?,
        Format::Csv => {
            let mut s = String::from("field,value\n");
            let rows: &[(&str, String)] = &[
                ("seed", summary.seed.to_string()),
                ("kstar", summary.kstar.to_string()),
                ("oracle_graphs", summary.oracle_graphs.to_string()),
                ("oracle_checks", summary.oracle_checks.to_string()),
                ("oracle_failures", summary.oracle_failures.to_string()),
                ("chi_checks", summary.chi_checks.to_string()),
                ("chi_failures", summary.chi_failures.to_string()),
                ("root_bound_graphs", summary.root_bound_graphs.to_string()),
                (
                    "root_bound_failures",
                    summary.root_bound_failures.to_string(),
                ),
                ("concavity_scans", summary.concavity_scans.to_string()),
                (
                    "concavity_contradictions",
                    summary.concavity_contradictions.to_string(),
                ),
                ("linear_samples", summary.linear_samples.to_string()),
                ("linear_failures", summary.linear_failures.to_string()),
                ("quadratic_samples", summary.quadratic_samples.to_string()),
                ("quadratic_failures", summary.quadratic_failures.to_string()),
                ("all_passed", summary.all_passed.to_string()),
            ];
            for (name, value) in rows {
                s.push_str(&format!("{name},{value}\n"));
            }
            s
        }
        Format::Text => format!(
            "seed             {}\n\
             constant         {:.6}\n\
             oracle           {} graphs, {} checks, {} failures\n\
             chi              {} checks, {} failures\n\
             root bound       {} graphs, {} failures\n\
             concavity        {} scans, {} contradictions\n\
             linear algebra   {} samples, {} failures\n\
             quadratic        {} samples, {} failures\n\
             all passed       {}\n",
            summary.seed,
            summary.kstar,
            summary.oracle_graphs,
            summary.oracle_checks,
            summary.oracle_failures,
            summary.chi_checks,
            summary.chi_failures,
            summary.root_bound_graphs,
            summary.root_bound_failures,
            summary.concavity_scans,
            summary.concavity_contradictions,
            summary.linear_samples,
            summary.linear_failures,
            summary.quadratic_samples,
            summary.quadratic_failures,
            if summary.all_passed { "yes" } else { "NO" }
        ),
    };
    emit(cli, &content)?;
    if summary.all_passed {
        Ok(())
    } else {
        Err(check_failure(
            "verification suite failed; this indicates a bug in the toolkit",
        ))
    }
}
