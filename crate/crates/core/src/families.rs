//! The four parametric mass-function families used in convergence sweeps.

use std::fmt;
use std::str::FromStr;

use crate::combinatorics::{
    binomial, ln_binomial_row, ln_pow2_minus1, ln_three_pow_minus_two_pow, three_pow_minus_two_pow,
    EXACT_BINOMIAL_LIMIT,
};
use crate::error::{Error, Result};
use crate::profile::{CardinalityProfile, ProfileRow, SetCount};

/// Largest frame size the power-set families accept.
pub const PROFILE_LIMIT: usize = 1024;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// `m(Θ) = 1`.
    Vacuous,
    /// `m({ω_i}) = 1/n`.
    UniformBayesian,
    /// `m(A) = 1/(2^n - 1)` for every nonempty `A`.
    UniformPowerset,
    /// `m(A) ∝ 2^|A| - 1`, the Deng-entropy maximizer.
    MaxDeng,
}

impl Family {
    pub const ALL: [Family; 4] = [
        Family::Vacuous,
        Family::UniformBayesian,
        Family::UniformPowerset,
        Family::MaxDeng,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Family::Vacuous => "vacuous",
            Family::UniformBayesian => "uniform-bayesian",
            Family::UniformPowerset => "uniform-powerset",
            Family::MaxDeng => "max-deng",
        }
    }

    pub fn profile(self, n: usize) -> Result<CardinalityProfile> {
        match self {
            Family::Vacuous => vacuous(n),
            Family::UniformBayesian => uniform_bayesian(n),
            Family::UniformPowerset => uniform_powerset(n),
            Family::MaxDeng => max_deng(n),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.id() == s)
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

fn check_size(n: usize, limit: usize) -> Result<()> {
    if n == 0 {
        Err(Error::ZeroFrameSize)
    } else if n > limit {
        Err(Error::FrameTooLarge { size: n, limit })
    } else {
        Ok(())
    }
}

fn layer_count(n: usize, k: usize, ln_row: Option<&[f64]>) -> SetCount {
    match (binomial(n, k), ln_row) {
        (Some(c), _) => SetCount::Exact(c),
        (None, Some(row)) => SetCount::Log(row[k]),
        (None, None) => unreachable!("log row is built whenever n exceeds the exact range"),
    }
}

pub fn vacuous(n: usize) -> Result<CardinalityProfile> {
    check_size(n, usize::MAX)?;
    CardinalityProfile::new(n, vec![ProfileRow::new(n, SetCount::Exact(1), 1.0)])
}

pub fn uniform_bayesian(n: usize) -> Result<CardinalityProfile> {
    check_size(n, usize::MAX)?;
    let row = ProfileRow::new(1, SetCount::Exact(n as u64), 1.0 / n as f64);
    CardinalityProfile::new(n, vec![row])
}

pub fn uniform_powerset(n: usize) -> Result<CardinalityProfile> {
    check_size(n, PROFILE_LIMIT)?;
    let ln_row = (n > EXACT_BINOMIAL_LIMIT).then(|| ln_binomial_row(n));
    let ln_mass = -ln_pow2_minus1(n);
    let exact_mass = (n <= 53).then(|| 1.0 / ((1u64 << n) - 1) as f64);
    let rows = (1..=n)
        .map(|k| {
            let count = layer_count(n, k, ln_row.as_deref());
            match exact_mass {
                Some(m) => ProfileRow::new(k, count, m),
                None => ProfileRow::with_ln_mass(k, count, ln_mass),
            }
        })
        .collect();
    CardinalityProfile::new(n, rows)
}

pub fn max_deng(n: usize) -> Result<CardinalityProfile> {
    check_size(n, PROFILE_LIMIT)?;
    let ln_row = (n > EXACT_BINOMIAL_LIMIT).then(|| ln_binomial_row(n));
    let total = three_pow_minus_two_pow(n as u32);
    let ln_total = ln_three_pow_minus_two_pow(n as u32);
    let rows = (1..=n)
        .map(|k| {
            let count = layer_count(n, k, ln_row.as_deref());
            match total {
                Some(t) => ProfileRow::new(k, count, ((1u64 << k) - 1) as f64 / t as f64),
                None => ProfileRow::with_ln_mass(k, count, ln_pow2_minus1(k) - ln_total),
            }
        })
        .collect();
    CardinalityProfile::new(n, rows)
}
