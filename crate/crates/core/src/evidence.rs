//! Frames of discernment, subsets and mass functions.
//!
//! A [`MassFunction`] maps nonempty subsets of a [`Frame`] to strictly
//! positive masses summing to one. Subsets are bitmasks over frame indices,
//! so explicit frames hold at most 64 elements.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default tolerance for the unit-total check.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// Maximum number of elements in an explicit frame.
pub const MAX_FRAME_SIZE: usize = 64;

/// Ordered, duplicate-free set of element labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Frame {
    labels: Vec<String>,
}

impl Frame {
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(Error::EmptyFrame);
        }
        if labels.len() > MAX_FRAME_SIZE {
            return Err(Error::FrameTooLarge {
                size: labels.len(),
                limit: MAX_FRAME_SIZE,
            });
        }
        for (i, label) in labels.iter().enumerate() {
            if label.is_empty() {
                return Err(Error::EmptyLabel);
            }
            if labels[..i].contains(label) {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        Ok(Self { labels })
    }

    /// Frame labelled `w1, w2, …, wn`.
    pub fn with_size(n: usize) -> Result<Self> {
        Self::new((1..=n).map(|i| format!("w{i}")))
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// The whole frame as a subset.
    pub fn full(&self) -> Subset {
        Subset::full(self.size())
    }

    pub fn subset<S: AsRef<str>>(&self, labels: &[S]) -> Result<Subset> {
        subset_from_labels(self, labels)
    }

    pub(crate) fn describe(&self, subset: Subset) -> String {
        let names: Vec<&str> = subset.indices().map(|i| self.labels[i].as_str()).collect();
        format!("{{{}}}", names.join(", "))
    }
}

/// Nonempty subset of a frame, stored as a membership mask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subset(u64);

impl Subset {
    pub fn from_indices(frame: &Frame, indices: &[usize]) -> Result<Self> {
        let mut mask = 0u64;
        for &index in indices {
            if index >= frame.size() {
                return Err(Error::IndexOutOfRange {
                    index,
                    size: frame.size(),
                });
            }
            mask |= 1 << index;
        }
        if mask == 0 {
            return Err(Error::EmptySubset);
        }
        Ok(Self(mask))
    }

    pub fn from_mask(frame: &Frame, mask: u64) -> Result<Self> {
        if mask == 0 {
            return Err(Error::EmptySubset);
        }
        let size = frame.size();
        if size < 64 && mask >> size != 0 {
            return Err(Error::IndexOutOfRange {
                index: 63 - mask.leading_zeros() as usize,
                size,
            });
        }
        Ok(Self(mask))
    }

    pub(crate) fn full(n: usize) -> Self {
        debug_assert!((1..=64).contains(&n));
        Self(if n == 64 { u64::MAX } else { (1u64 << n) - 1 })
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn cardinality(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, index: usize) -> bool {
        index < 64 && self.0 & (1 << index) != 0
    }

    pub fn indices(self) -> impl Iterator<Item = usize> {
        let mask = self.0;
        (0..64).filter(move |i| mask & (1 << i) != 0)
    }
}

pub fn subset_from_labels<S: AsRef<str>>(frame: &Frame, labels: &[S]) -> Result<Subset> {
    let mut mask = 0u64;
    for label in labels {
        let label = label.as_ref();
        let index = frame
            .index_of(label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))?;
        mask |= 1 << index;
    }
    if mask == 0 {
        return Err(Error::EmptySubset);
    }
    Ok(Subset(mask))
}

/// Basic probability assignment over a frame.
///
/// Only focal elements (strictly positive mass) are stored, keyed by mask.
#[derive(Debug, Clone, PartialEq)]
pub struct MassFunction {
    frame: Frame,
    focal: BTreeMap<Subset, f64>,
}

impl MassFunction {
    /// Validates and builds a mass function with the default tolerance.
    pub fn new<I>(frame: Frame, assignments: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Subset, f64)>,
    {
        mass_from_assignments(frame, assignments, DEFAULT_TOLERANCE)
    }

    /// `m(Θ) = 1`.
    pub fn vacuous(frame: Frame) -> Self {
        let full = frame.full();
        Self {
            frame,
            focal: BTreeMap::from([(full, 1.0)]),
        }
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    pub fn len(&self) -> usize {
        self.focal.len()
    }

    pub fn is_empty(&self) -> bool {
        self.focal.is_empty()
    }

    /// Focal elements and masses in ascending mask order.
    pub fn iter(&self) -> impl Iterator<Item = (Subset, f64)> + '_ {
        self.focal.iter().map(|(&s, &m)| (s, m))
    }

    pub fn mass(&self, subset: Subset) -> f64 {
        self.focal.get(&subset).copied().unwrap_or(0.0)
    }

    pub fn total(&self) -> f64 {
        self.focal.values().sum()
    }

    pub fn is_bayesian(&self) -> bool {
        mass_is_bayesian(self)
    }

    /// True when the only focal element is a singleton carrying all mass.
    pub fn is_deterministic(&self) -> bool {
        self.focal.len() == 1 && self.focal.keys().all(|s| s.cardinality() == 1)
    }

    /// Relabels frame element `i` as element `permutation[i]`.
    ///
    /// Frame labels are permuted alongside, so the result describes the same
    /// evidence under a different element order.
    pub fn permuted(&self, permutation: &[usize]) -> Result<Self> {
        let n = self.frame.size();
        let mut seen = vec![false; n];
        if permutation.len() != n
            || permutation
                .iter()
                .any(|&p| p >= n || std::mem::replace(&mut seen[p], true))
        {
            return Err(Error::InvalidPermutation(permutation.to_vec()));
        }
        let mut labels = vec![String::new(); n];
        for (i, &p) in permutation.iter().enumerate() {
            labels[p] = self.frame.labels[i].clone();
        }
        let focal = self
            .focal
            .iter()
            .map(|(s, &m)| {
                let mask = s.indices().fold(0u64, |acc, i| acc | (1 << permutation[i]));
                (Subset(mask), m)
            })
            .collect();
        Ok(Self {
            frame: Frame { labels },
            focal,
        })
    }
}

pub fn mass_from_assignments<I>(
    frame: Frame,
    assignments: I,
    tolerance: f64,
) -> Result<MassFunction>
where
    I: IntoIterator<Item = (Subset, f64)>,
{
    if !(tolerance.is_finite() && tolerance > 0.0) {
        return Err(Error::InvalidTolerance(tolerance));
    }
    let mut seen = BTreeMap::new();
    for (subset, mass) in assignments {
        let subset = Subset::from_mask(&frame, subset.mask())?;
        if !mass.is_finite() {
            return Err(Error::NonFiniteMass(mass));
        }
        if mass < 0.0 {
            return Err(Error::NegativeMass {
                subset: frame.describe(subset),
                mass,
            });
        }
        if seen.insert(subset, mass).is_some() {
            return Err(Error::DuplicateSubset(frame.describe(subset)));
        }
    }
    seen.retain(|_, m| *m > 0.0);
    let total: f64 = seen.values().sum();
    if (total - 1.0).abs() > tolerance {
        return Err(Error::NonUnitTotal { total, tolerance });
    }
    Ok(MassFunction { frame, focal: seen })
}

pub fn mass_is_bayesian(mass: &MassFunction) -> bool {
    mass.focal.keys().all(|s| s.cardinality() == 1)
}

/// The probability distribution carried by a Bayesian mass function.
///
/// Outcomes are the focal singletons in frame order; frame elements with no
/// mass do not appear.
pub fn mass_as_probability(mass: &MassFunction) -> Result<ProbabilityDistribution> {
    if let Some(s) = mass.focal.keys().find(|s| s.cardinality() != 1) {
        return Err(Error::NotBayesian(mass.frame.describe(*s)));
    }
    // singleton masks ascend with the frame index
    Ok(ProbabilityDistribution {
        probabilities: mass.focal.values().copied().collect(),
    })
}

/// Finite distribution with strictly positive probabilities.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbabilityDistribution {
    probabilities: Vec<f64>,
}

impl ProbabilityDistribution {
    pub fn new(probabilities: Vec<f64>) -> Result<Self> {
        Self::with_tolerance(probabilities, DEFAULT_TOLERANCE)
    }

    pub fn with_tolerance(probabilities: Vec<f64>, tolerance: f64) -> Result<Self> {
        if !(tolerance.is_finite() && tolerance > 0.0) {
            return Err(Error::InvalidTolerance(tolerance));
        }
        if probabilities.is_empty() {
            return Err(Error::EmptyFrame);
        }
        if let Some(&p) = probabilities.iter().find(|p| !(p.is_finite() && **p > 0.0)) {
            return Err(Error::InvalidProbability(p));
        }
        let total: f64 = probabilities.iter().sum();
        if (total - 1.0).abs() > tolerance {
            return Err(Error::NonUnitTotal { total, tolerance });
        }
        Ok(Self { probabilities })
    }

    pub fn uniform(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyFrame);
        }
        Ok(Self {
            probabilities: vec![1.0 / n as f64; n],
        })
    }

    pub fn outcomes(&self) -> usize {
        self.probabilities.len()
    }

    pub fn probabilities(&self) -> &[f64] {
        &self.probabilities
    }
}

impl fmt::Display for ProbabilityDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.probabilities.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// On-disk JSON form of a mass function.
///
/// ```json
/// { "frame": ["ω1", "ω2"],
///   "focal": [ {"elements": ["ω1"], "mass": 0.8333333333333334},
///              {"elements": ["ω1", "ω2"], "mass": 0.16666666666666666} ] }
/// ```
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MassDocument {
    pub frame: Vec<String>,
    pub focal: Vec<FocalEntry>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FocalEntry {
    pub elements: Vec<String>,
    pub mass: f64,
}

impl MassDocument {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("mass documents always serialize")
    }

    pub fn to_mass(&self, tolerance: f64) -> Result<MassFunction> {
        let frame = Frame::new(self.frame.iter().cloned())?;
        let assignments = self
            .focal
            .iter()
            .map(|entry| Ok((subset_from_labels(&frame, &entry.elements)?, entry.mass)))
            .collect::<Result<Vec<_>>>()?;
        mass_from_assignments(frame, assignments, tolerance)
    }
}

impl From<&MassFunction> for MassDocument {
    fn from(mass: &MassFunction) -> Self {
        let frame = mass.frame();
        Self {
            frame: frame.labels().to_vec(),
            focal: mass
                .iter()
                .map(|(s, m)| FocalEntry {
                    elements: s.indices().map(|i| frame.labels()[i].clone()).collect(),
                    mass: m,
                })
                .collect(),
        }
    }
}
