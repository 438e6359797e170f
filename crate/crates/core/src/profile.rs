//! Compressed mass functions whose focal sets of equal cardinality share
//! one mass.
//!
//! A row stores how many `k`-subsets are focal and the mass each carries.
//! Counts are exact up to a 64-element frame and log-domain past that; the
//! per-set mass is kept alongside its logarithm so tiny masses of very
//! large frames survive underflow.

use std::collections::BTreeMap;

use crate::combinatorics::{binomial, ln_binomial};
use crate::error::{Error, Result};
use crate::evidence::{Frame, MassFunction, Subset, DEFAULT_TOLERANCE};

/// Largest frame a profile may be expanded into explicit form for.
pub const EXPLICIT_LIMIT: usize = 20;

/// Relative tolerance for "equal mass" within a cardinality layer.
pub const SYMMETRY_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SetCount {
    Exact(u64),
    /// Natural logarithm of a count too large for `u64`.
    Log(f64),
}

impl SetCount {
    pub fn ln(self) -> f64 {
        match self {
            SetCount::Exact(c) => (c as f64).ln(),
            SetCount::Log(l) => l,
        }
    }

    pub fn exact(self) -> Option<u64> {
        match self {
            SetCount::Exact(c) => Some(c),
            SetCount::Log(_) => None,
        }
    }

    pub fn is_zero(self) -> bool {
        matches!(self, SetCount::Exact(0))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProfileRow {
    cardinality: usize,
    count: SetCount,
    mass: f64,
    ln_mass: f64,
}

impl ProfileRow {
    pub fn new(cardinality: usize, count: SetCount, per_set_mass: f64) -> Self {
        Self {
            cardinality,
            count,
            mass: per_set_mass,
            ln_mass: per_set_mass.ln(),
        }
    }

    /// Row whose per-set mass is given by its natural logarithm.
    pub fn with_ln_mass(cardinality: usize, count: SetCount, ln_mass: f64) -> Self {
        Self {
            cardinality,
            count,
            mass: ln_mass.exp(),
            ln_mass,
        }
    }

    pub fn cardinality(&self) -> usize {
        self.cardinality
    }

    pub fn count(&self) -> SetCount {
        self.count
    }

    pub fn per_set_mass(&self) -> f64 {
        self.mass
    }

    pub fn ln_per_set_mass(&self) -> f64 {
        self.ln_mass
    }

    /// Total mass of the layer, `count · per_set_mass`.
    pub fn layer_mass(&self) -> f64 {
        match self.count {
            SetCount::Exact(c) if self.mass.is_normal() => c as f64 * self.mass,
            count => (count.ln() + self.ln_mass).exp(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CardinalityProfile {
    frame_size: usize,
    rows: Vec<ProfileRow>,
}

impl CardinalityProfile {
    pub fn new(frame_size: usize, rows: Vec<ProfileRow>) -> Result<Self> {
        Self::with_tolerance(frame_size, rows, DEFAULT_TOLERANCE)
    }

    /// Validates the rows; empty layers (count 0) are dropped.
    pub fn with_tolerance(
        frame_size: usize,
        rows: Vec<ProfileRow>,
        tolerance: f64,
    ) -> Result<Self> {
        if frame_size == 0 {
            return Err(Error::ZeroFrameSize);
        }
        if !(tolerance.is_finite() && tolerance > 0.0) {
            return Err(Error::InvalidTolerance(tolerance));
        }
        let mut layers: BTreeMap<usize, ProfileRow> = BTreeMap::new();
        for row in rows.into_iter().filter(|r| !r.count.is_zero()) {
            let k = row.cardinality;
            if k == 0 || k > frame_size {
                return Err(Error::InvalidProfile(format!(
                    "cardinality {k} outside 1..={frame_size}"
                )));
            }
            let ln_count = row.count.ln();
            if !ln_count.is_finite() {
                return Err(Error::InvalidProfile(format!(
                    "non-finite count at cardinality {k}"
                )));
            }
            let within_layer = match (row.count, binomial(frame_size, k)) {
                (SetCount::Exact(c), Some(full)) => c <= full,
                _ => ln_count <= ln_binomial(frame_size, k) + 1e-9,
            };
            if !within_layer {
                return Err(Error::InvalidProfile(format!(
                    "more than C({frame_size},{k}) sets at cardinality {k}"
                )));
            }
            if !(row.ln_mass.is_finite() && row.mass >= 0.0 && row.ln_mass <= 0.0) {
                return Err(Error::InvalidProfile(format!(
                    "per-set mass at cardinality {k} must lie in (0, 1]"
                )));
            }
            if layers.insert(k, row).is_some() {
                return Err(Error::InvalidProfile(format!(
                    "cardinality {k} listed twice"
                )));
            }
        }
        let rows: Vec<ProfileRow> = layers.into_values().collect();
        let total: f64 = rows.iter().map(ProfileRow::layer_mass).sum();
        if (total - 1.0).abs() > tolerance {
            return Err(Error::NonUnitTotal { total, tolerance });
        }
        Ok(Self { frame_size, rows })
    }

    pub fn frame_size(&self) -> usize {
        self.frame_size
    }

    /// Populated layers in ascending cardinality.
    pub fn rows(&self) -> &[ProfileRow] {
        &self.rows
    }

    pub fn row(&self, cardinality: usize) -> Option<&ProfileRow> {
        self.rows.iter().find(|r| r.cardinality == cardinality)
    }

    pub fn total_mass(&self) -> f64 {
        self.rows.iter().map(ProfileRow::layer_mass).sum()
    }

    /// A single singleton focal element carrying all mass.
    pub fn is_deterministic(&self) -> bool {
        matches!(
            self.rows.as_slice(),
            [row] if row.cardinality == 1 && row.count == SetCount::Exact(1)
        )
    }
}

/// Groups a cardinality-symmetric mass function into layers.
pub fn mass_to_profile(mass: &MassFunction) -> Result<CardinalityProfile> {
    let mut layers: BTreeMap<usize, (u64, f64)> = BTreeMap::new();
    for (subset, m) in mass.iter() {
        let k = subset.cardinality();
        let (count, shared) = layers.entry(k).or_insert((0, m));
        if (m - *shared).abs() > SYMMETRY_TOLERANCE * shared.max(m) {
            return Err(Error::NotCardinalitySymmetric { cardinality: k });
        }
        *count += 1;
    }
    let rows = layers
        .into_iter()
        .map(|(k, (count, m))| ProfileRow::new(k, SetCount::Exact(count), m))
        .collect();
    CardinalityProfile::new(mass.frame().size(), rows)
}

/// Expands a full-layer profile over a frame labelled `w1 … wn`.
pub fn profile_to_mass(profile: &CardinalityProfile) -> Result<MassFunction> {
    profile_to_mass_with_limit(profile, EXPLICIT_LIMIT)
}

pub fn profile_to_mass_with_limit(
    profile: &CardinalityProfile,
    limit: usize,
) -> Result<MassFunction> {
    let n = profile.frame_size;
    if n > limit.min(crate::evidence::MAX_FRAME_SIZE) {
        return Err(Error::FrameTooLarge { size: n, limit });
    }
    let frame = Frame::with_size(n)?;
    let mut per_layer = vec![None; n + 1];
    for row in &profile.rows {
        let full = binomial(n, row.cardinality).expect("n ≤ 64 has exact binomials");
        match row.count.exact() {
            Some(c) if c == full => per_layer[row.cardinality] = Some(row.mass),
            other => {
                return Err(Error::PartialLayerUnsupported {
                    cardinality: row.cardinality,
                    count: other.unwrap_or(u64::MAX),
                    full,
                })
            }
        }
    }
    let top = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let assignments = (1..=top).filter_map(|mask| {
        per_layer[mask.count_ones() as usize].map(|m| {
            (
                Subset::from_mask(&frame, mask).expect("mask within frame"),
                m,
            )
        })
    });
    // total already validated on the profile
    crate::evidence::mass_from_assignments(frame.clone(), assignments, 1e-6)
}
