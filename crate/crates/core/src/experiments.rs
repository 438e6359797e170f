//! Convergence sweeps over frame size, limit detection and table rendering.

use std::fmt::Write as _;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dimension::{information_dimension_profile_in, DimensionReport};
use crate::entropy::LogBase;
use crate::error::{Error, Result};
use crate::families::Family;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConvergenceRow {
    #[serde(rename = "N")]
    pub n: usize,
    #[serde(rename = "entropy_bits")]
    pub entropy: f64,
    #[serde(rename = "split_scale_bits")]
    pub split_scale: f64,
    pub dimension: f64,
}

impl ConvergenceRow {
    fn from_report(n: usize, report: DimensionReport) -> Self {
        Self {
            n,
            entropy: report.entropy,
            split_scale: report.split_scale,
            dimension: report.dimension,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceTable {
    pub family: Family,
    pub rows: Vec<ConvergenceRow>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConvergenceVerdict {
    pub converged: bool,
    pub limit_estimate: f64,
    pub achieved_at_n: Option<usize>,
    pub tolerance: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Csv,
    Markdown,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Self::Json),
            "csv" => Ok(Self::Csv),
            "markdown" | "md" => Ok(Self::Markdown),
            other => Err(Error::UnknownFormat(other.to_string())),
        }
    }
}

pub fn run_convergence(family: Family, n_min: usize, n_max: usize) -> Result<ConvergenceTable> {
    run_convergence_in(family, n_min, n_max, LogBase::TWO)
}

/// One row per frame size in `n_min..=n_max`.
///
/// Rows are evaluated in parallel; each row is a sequential sum over
/// ascending cardinality, so the table is identical for any thread count.
pub fn run_convergence_in(
    family: Family,
    n_min: usize,
    n_max: usize,
    base: LogBase,
) -> Result<ConvergenceTable> {
    if n_min == 0 || n_min > n_max {
        return Err(Error::InvalidRange { n_min, n_max });
    }
    // fail fast on the largest frame before spawning work
    family.profile(n_max)?;
    let rows = (n_min..=n_max)
        .into_par_iter()
        .map(|n| {
            let profile = family.profile(n)?;
            Ok(ConvergenceRow::from_report(
                n,
                information_dimension_profile_in(&profile, base),
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ConvergenceTable { family, rows })
}

/// Checks whether the trailing `window` dimensions sit within `tol` of the
/// dimension at the largest frame size.
pub fn detect_limit(
    table: &ConvergenceTable,
    window: usize,
    tol: f64,
) -> Result<ConvergenceVerdict> {
    if window < 2 {
        return Err(Error::InvalidWindow(window));
    }
    if !(tol.is_finite() && tol > 0.0) {
        return Err(Error::InvalidTolerance(tol));
    }
    let rows = &table.rows;
    if rows.len() < window {
        return Err(Error::InsufficientRows {
            rows: rows.len(),
            window,
        });
    }
    let limit = rows[rows.len() - 1].dimension;
    let within = |r: &ConvergenceRow| (r.dimension - limit).abs() <= tol;
    let converged = rows[rows.len() - window..].iter().all(within);
    let tail = rows.iter().rev().take_while(|r| within(r)).count();
    Ok(ConvergenceVerdict {
        converged,
        limit_estimate: limit,
        achieved_at_n: converged.then(|| rows[rows.len() - tail].n),
        tolerance: tol,
    })
}

/// Fixed-point decimal with ties to even, never printing `-0`.
pub fn format_decimal(value: f64, decimals: usize) -> String {
    let s = format!("{value:.decimals$}");
    match s.strip_prefix('-') {
        Some(rest) if rest.bytes().all(|b| b == b'0' || b == b'.') => rest.to_string(),
        _ => s,
    }
}

fn check_decimals(decimals: usize) -> Result<()> {
    if (1..=15).contains(&decimals) {
        Ok(())
    } else {
        Err(Error::InvalidDecimals(decimals))
    }
}

pub const CSV_HEADER: &str = "N,entropy_bits,split_scale_bits,dimension";

/// Renders a table; JSON carries full precision and ignores `decimals`.
pub fn render_table(
    table: &ConvergenceTable,
    format: OutputFormat,
    decimals: usize,
) -> Result<String> {
    check_decimals(decimals)?;
    let f = |x: f64| format_decimal(x, decimals);
    let mut out = String::new();
    match format {
        OutputFormat::Csv => {
            writeln!(out, "{CSV_HEADER}").unwrap();
            for r in &table.rows {
                writeln!(
                    out,
                    "{},{},{},{}",
                    r.n,
                    f(r.entropy),
                    f(r.split_scale),
                    f(r.dimension)
                )
                .unwrap();
            }
        }
        OutputFormat::Markdown => {
            writeln!(out, "| N | H_D | split scale | D_m |").unwrap();
            writeln!(out, "|---:|---:|---:|---:|").unwrap();
            for r in &table.rows {
                writeln!(
                    out,
                    "| {} | {} | {} | {} |",
                    r.n,
                    f(r.entropy),
                    f(r.split_scale),
                    f(r.dimension)
                )
                .unwrap();
            }
        }
        OutputFormat::Json => {
            #[derive(Serialize)]
            struct Doc<'a> {
                family: &'a str,
                rows: &'a [ConvergenceRow],
            }
            out = serde_json::to_string_pretty(&Doc {
                family: table.family.id(),
                rows: &table.rows,
            })
            .expect("tables always serialize");
            out.push('\n');
        }
    }
    Ok(out)
}

pub fn render_report(
    report: &DimensionReport,
    format: OutputFormat,
    decimals: usize,
) -> Result<String> {
    check_decimals(decimals)?;
    let f = |x: f64| format_decimal(x, decimals);
    Ok(match format {
        OutputFormat::Json => serde_json::to_string_pretty(report).expect("reports always serialize") + "\n",
        OutputFormat::Csv => format!(
            "entropy_bits,split_scale_bits,dimension,degenerate\n{},{},{},{}\n",
            f(report.entropy),
            f(report.split_scale),
            f(report.dimension),
            report.degenerate
        ),
        OutputFormat::Markdown => format!(
            "| H_D | split scale | D_m | degenerate |\n|---:|---:|---:|:---:|\n| {} | {} | {} | {} |\n",
            f(report.entropy),
            f(report.split_scale),
            f(report.dimension),
            report.degenerate
        ),
    })
}

/// One-line summary, e.g. `converged limit=1.0000 achieved_at_n=2 tol=1e-9`.
pub fn render_verdict(verdict: &ConvergenceVerdict, decimals: usize) -> String {
    let status = if verdict.converged {
        "converged"
    } else {
        "not-converged"
    };
    let at = verdict
        .achieved_at_n
        .map_or_else(|| "none".to_string(), |n| n.to_string());
    format!(
        "{status} limit={} achieved_at_n={at} tol={:e}",
        format_decimal(verdict.limit_estimate, decimals),
        verdict.tolerance
    )
}

/// Scatter data for entropy against split scale, full precision.
pub fn plot_data(table: &ConvergenceTable) -> String {
    let mut out = String::from("split_scale_bits,entropy_bits,N\n");
    for r in &table.rows {
        writeln!(out, "{},{},{}", r.split_scale, r.entropy, r.n).unwrap();
    }
    out
}
