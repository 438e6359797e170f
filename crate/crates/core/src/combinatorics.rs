//! Exact and log-domain counting helpers for power-set layers.
//!
//! Binomial coefficients are exact (`u64`) up to `n = 64` via a cached
//! Pascal triangle; past that only their natural logarithm is available.

use std::sync::OnceLock;

/// Largest `n` for which [`binomial`] returns an exact value.
pub const EXACT_BINOMIAL_LIMIT: usize = 64;

/// Largest `n` for which [`three_pow_minus_two_pow`] is evaluated exactly.
pub const EXACT_POWER_SUM_LIMIT: u32 = 40;

fn pascal() -> &'static [Vec<u64>] {
    static TABLE: OnceLock<Vec<Vec<u64>>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut rows: Vec<Vec<u64>> = Vec::with_capacity(EXACT_BINOMIAL_LIMIT + 1);
        rows.push(vec![1]);
        for n in 1..=EXACT_BINOMIAL_LIMIT {
            let prev = &rows[n - 1];
            let mut row = vec![1u64; n + 1];
            for k in 1..n {
                row[k] = prev[k - 1] + prev[k];
            }
            rows.push(row);
        }
        rows
    })
}

/// Exact `C(n, k)` for `n ≤ 64`; `None` beyond the exact range.
pub fn binomial(n: usize, k: usize) -> Option<u64> {
    if n > EXACT_BINOMIAL_LIMIT {
        return None;
    }
    if k > n {
        return Some(0);
    }
    Some(pascal()[n][k])
}

/// `ln C(n, k)` for `k = 0..=n`.
///
/// Exact rows are converted directly; larger rows accumulate
/// `ln((n - k + 1) / k)` from `ln C(n, 0) = 0`.
pub fn ln_binomial_row(n: usize) -> Vec<f64> {
    if n <= EXACT_BINOMIAL_LIMIT {
        return pascal()[n].iter().map(|&c| (c as f64).ln()).collect();
    }
    let mut row = Vec::with_capacity(n + 1);
    let mut acc = 0.0f64;
    row.push(acc);
    for k in 1..=n {
        acc += ((n - k + 1) as f64).ln() - (k as f64).ln();
        row.push(acc);
    }
    // symmetry removes the drift of the running sum
    for k in (n / 2 + 1)..=n {
        row[k] = row[n - k];
    }
    row
}

/// `ln C(n, k)`; `-inf` when `k > n`.
pub fn ln_binomial(n: usize, k: usize) -> f64 {
    if k > n {
        return f64::NEG_INFINITY;
    }
    match binomial(n, k) {
        Some(c) => (c as f64).ln(),
        None => ln_binomial_row(n)[k],
    }
}

/// `ln(2^k - 1)`, the log of the number of nonempty subsets of a `k`-set.
pub fn ln_pow2_minus1(k: usize) -> f64 {
    match k {
        0 => f64::NEG_INFINITY,
        1 => 0.0,
        2..=53 => (((1u64 << k) - 1) as f64).ln(),
        _ => k as f64 * std::f64::consts::LN_2 + (-(0.5f64).powi(k as i32)).ln_1p(),
    }
}

/// Exact `3^n - 2^n` for `n ≤ 40`.
///
/// This is `Σ_{k=1..n} C(n,k)(2^k - 1)`, the total split size of the full
/// power set of an `n`-element frame.
pub fn three_pow_minus_two_pow(n: u32) -> Option<u128> {
    if n > EXACT_POWER_SUM_LIMIT {
        return None;
    }
    Some(3u128.pow(n) - 2u128.pow(n))
}

/// `ln(3^n - 2^n)`, exact-integer backed up to `n = 40`.
pub fn ln_three_pow_minus_two_pow(n: u32) -> f64 {
    if n == 0 {
        return f64::NEG_INFINITY;
    }
    match three_pow_minus_two_pow(n) {
        Some(v) => (v as f64).ln(),
        None => n as f64 * 3f64.ln() + (-(2.0f64 / 3.0).powi(n as i32)).ln_1p(),
    }
}

/// Stable `ln Σ exp(x_i)` accumulated in the given order.
pub(crate) fn log_sum_exp(terms: &[f64]) -> f64 {
    let max = terms.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if max == f64::NEG_INFINITY {
        return max;
    }
    let mut sum = 0.0;
    for &t in terms {
        sum += (t - max).exp();
    }
    max + sum.ln()
}
