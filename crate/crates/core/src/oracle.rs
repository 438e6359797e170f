//! Brute-force reference evaluation.
//!
//! Walks the focal elements one by one with naive arithmetic: cardinality by
//! scanning frame indices, `2^|A| - 1` by repeated doubling, powers through
//! `powf`, logarithms through `log2`. None of the grouped or log-domain code
//! used by the main path is reused here.

use crate::dimension::DimensionReport;
use crate::error::{Error, Result};
use crate::evidence::MassFunction;

/// Largest frame the oracle will evaluate.
pub const ORACLE_LIMIT: usize = 20;

pub fn brute_force_report(mass: &MassFunction) -> Result<DimensionReport> {
    let n = mass.frame().size();
    if n > ORACLE_LIMIT {
        return Err(Error::FrameTooLarge {
            size: n,
            limit: ORACLE_LIMIT,
        });
    }

    let mut entropy = 0.0f64;
    let mut split_sum = 0.0f64;
    let mut focal_count = 0usize;
    let mut last_cardinality = 0usize;
    for (subset, m) in mass.iter() {
        let mut cardinality = 0usize;
        for i in 0..n {
            if (subset.mask() >> i) & 1 == 1 {
                cardinality += 1;
            }
        }
        let mut splits = 1.0f64;
        for _ in 0..cardinality {
            splits *= 2.0;
        }
        splits -= 1.0;

        entropy += -m * (m / splits).log2();
        split_sum += splits.powf(m);
        focal_count += 1;
        last_cardinality = cardinality;
    }

    if focal_count == 1 && last_cardinality == 1 {
        return Ok(DimensionReport::DEGENERATE);
    }
    let split_scale = split_sum.log2();
    Ok(DimensionReport {
        entropy,
        split_scale,
        dimension: entropy / split_scale,
        degenerate: false,
    })
}

/// Degenerate flags equal and every numeric field within `tol`.
pub fn compare_reports(a: &DimensionReport, b: &DimensionReport, tol: f64) -> bool {
    a.degenerate == b.degenerate
        && (a.entropy - b.entropy).abs() <= tol
        && (a.split_scale - b.split_scale).abs() <= tol
        && (a.dimension - b.dimension).abs() <= tol
}
