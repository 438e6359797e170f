//! Information fractal dimension of a mass function.
//!
//! The dimension is the Deng entropy divided by the split scale
//! `log Σ_A (2^|A| - 1)^m(A)`. Both are logarithms in the same base, so the
//! ratio does not depend on it.
//!
//! The 0/0 case is decided structurally. Every focal term
//! `(2^|A| - 1)^m(A)` is at least 1, so the sum inside the split scale is at
//! least the number of focal elements. It equals 1 only when there is one
//! focal element and `2^|A| - 1 = 1`, i.e. a single singleton carrying all
//! mass; that mass function is deterministic and its Deng entropy is 0 as
//! well. Its dimension is defined as 0. In every other case the split scale
//! is strictly positive.

use serde::{Deserialize, Serialize};

use crate::combinatorics::{ln_pow2_minus1, log_sum_exp};
use crate::entropy::{deng_nats, deng_profile_nats, shannon_nats, LogBase};
use crate::evidence::{MassFunction, ProbabilityDistribution};
use crate::profile::CardinalityProfile;

/// Entropy, split scale and their ratio.
///
/// `entropy` and `split_scale` are expressed in the base the report was
/// computed with (base 2 unless stated otherwise); `dimension` is base-free.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DimensionReport {
    #[serde(rename = "entropy_bits")]
    pub entropy: f64,
    #[serde(rename = "split_scale_bits")]
    pub split_scale: f64,
    pub dimension: f64,
    pub degenerate: bool,
}

impl DimensionReport {
    pub const DEGENERATE: DimensionReport = DimensionReport {
        entropy: 0.0,
        split_scale: 0.0,
        dimension: 0.0,
        degenerate: true,
    };

    fn from_nats(entropy: f64, split_scale: f64, base: LogBase) -> Self {
        debug_assert!(split_scale > 0.0);
        Self {
            entropy: base.from_nats(entropy),
            split_scale: base.from_nats(split_scale),
            dimension: entropy / split_scale,
            degenerate: false,
        }
    }
}

fn split_nats(mass: &MassFunction) -> f64 {
    let mut sum = 0.0;
    for (subset, m) in mass.iter() {
        sum += (m * ln_pow2_minus1(subset.cardinality())).exp();
    }
    sum.ln().max(0.0)
}

fn split_profile_nats(profile: &CardinalityProfile) -> f64 {
    let terms: Vec<f64> = profile
        .rows()
        .iter()
        .map(|row| row.count().ln() + row.per_set_mass() * ln_pow2_minus1(row.cardinality()))
        .collect();
    log_sum_exp(&terms).max(0.0)
}

/// `log Σ_A (2^|A| - 1)^m(A)` over the focal elements.
pub fn split_scale(mass: &MassFunction, base: LogBase) -> f64 {
    base.from_nats(split_nats(mass))
}

/// Split scale from a profile: `log Σ_k count_k · (2^k - 1)^m_k`.
pub fn split_scale_profile(profile: &CardinalityProfile, base: LogBase) -> f64 {
    base.from_nats(split_profile_nats(profile))
}

pub fn information_dimension(mass: &MassFunction) -> DimensionReport {
    information_dimension_in(mass, LogBase::TWO)
}

pub fn information_dimension_in(mass: &MassFunction, base: LogBase) -> DimensionReport {
    if mass.is_deterministic() {
        return DimensionReport::DEGENERATE;
    }
    DimensionReport::from_nats(deng_nats(mass), split_nats(mass), base)
}

pub fn information_dimension_profile(profile: &CardinalityProfile) -> DimensionReport {
    information_dimension_profile_in(profile, LogBase::TWO)
}

pub fn information_dimension_profile_in(
    profile: &CardinalityProfile,
    base: LogBase,
) -> DimensionReport {
    if profile.is_deterministic() {
        return DimensionReport::DEGENERATE;
    }
    DimensionReport::from_nats(
        deng_profile_nats(profile),
        split_profile_nats(profile),
        base,
    )
}

/// Dimension of a probability distribution, `H(P) / log N`.
pub fn probability_dimension(dist: &ProbabilityDistribution) -> DimensionReport {
    probability_dimension_in(dist, LogBase::TWO)
}

pub fn probability_dimension_in(dist: &ProbabilityDistribution, base: LogBase) -> DimensionReport {
    let n = dist.outcomes();
    if n == 1 {
        return DimensionReport::DEGENERATE;
    }
    DimensionReport::from_nats(shannon_nats(dist), (n as f64).ln(), base)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::evidence::{Frame, Subset};
    use crate::profile::{ProfileRow, SetCount};

    fn example_one() -> MassFunction {
        let frame = Frame::new(["ω1", "ω2"]).unwrap();
        let a = frame.subset(&["ω1"]).unwrap();
        let b = frame.full();
        MassFunction::new(frame, [(a, 5.0 / 6.0), (b, 1.0 / 6.0)]).unwrap()
    }

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn example_one_split_and_dimension() {
        let m = example_one();
        assert!(close(split_scale(&m, LogBase::TWO), 1.1381, 5e-5));
        let r = information_dimension(&m);
        assert!(!r.degenerate);
        assert!(close(r.entropy, 0.9142, 5e-5));
        assert!(close(r.split_scale, 1.1381, 5e-5));
        // 0.8033 is the ratio of the rounded entropy and split scale
        assert!(close(r.dimension, 0.8033, 5e-4));
        assert!(close(r.dimension, 0.8032409492049104, 1e-12));
        assert!(close(r.dimension * r.split_scale, r.entropy, 1e-12));
    }

    #[test]
    fn deterministic_mass_is_degenerate() {
        let frame = Frame::new(["a", "b"]).unwrap();
        let a = frame.subset(&["a"]).unwrap();
        let m = MassFunction::new(frame, [(a, 1.0)]).unwrap();
        assert_eq!(split_scale(&m, LogBase::TWO), 0.0);
        assert_eq!(information_dimension(&m), DimensionReport::DEGENERATE);
    }

    #[test]
    fn vacuous_seven_has_unit_dimension() {
        let r = information_dimension(&MassFunction::vacuous(Frame::with_size(7).unwrap()));
        assert!(close(r.entropy, 6.9887, 5e-5));
        assert!(close(r.dimension, 1.0, 1e-12));
    }

    #[test]
    fn split_scale_uniform_powerset_two() {
        let frame = Frame::with_size(2).unwrap();
        let assignments: Vec<_> = (1u64..4)
            .map(|mask| (Subset::from_mask(&frame, mask).unwrap(), 1.0 / 3.0))
            .collect();
        let m = MassFunction::new(frame, assignments).unwrap();
        assert!(close(split_scale(&m, LogBase::TWO), 1.7834, 5e-5));
    }

    #[test]
    fn split_scale_profiles() {
        let max_deng2 = CardinalityProfile::new(
            2,
            vec![
                ProfileRow::new(1, SetCount::Exact(2), 0.2),
                ProfileRow::new(2, SetCount::Exact(1), 0.6),
            ],
        )
        .unwrap();
        assert!(close(
            split_scale_profile(&max_deng2, LogBase::TWO),
            1.9757,
            5e-5
        ));
        let vac4 =
            CardinalityProfile::new(4, vec![ProfileRow::new(4, SetCount::Exact(1), 1.0)]).unwrap();
        assert!(close(
            split_scale_profile(&vac4, LogBase::TWO),
            15f64.log2(),
            1e-12
        ));
        assert!(close(
            split_scale_profile(&vac4, LogBase::TWO),
            3.9069,
            5e-5
        ));
    }

    #[test]
    fn probability_dimension_values() {
        let u5 = ProbabilityDistribution::uniform(5).unwrap();
        assert!(close(probability_dimension(&u5).dimension, 1.0, 1e-12));
        let one = ProbabilityDistribution::new(vec![1.0]).unwrap();
        assert_eq!(probability_dimension(&one), DimensionReport::DEGENERATE);
        // -0.9 log2 0.9 - 0.1 log2 0.1 = 0.46899559358928117, denominator log2 2 = 1
        let skew = ProbabilityDistribution::new(vec![0.9, 0.1]).unwrap();
        let r = probability_dimension(&skew);
        assert!(close(r.dimension, 0.46899559358928117, 1e-12));
        assert!(close(r.dimension, 0.4690, 5e-5));
    }

    #[test]
    fn reports_in_other_bases_keep_the_dimension() {
        let m = example_one();
        let two = information_dimension_in(&m, LogBase::TWO);
        let ten = information_dimension_in(&m, LogBase::TEN);
        assert_eq!(two.dimension, ten.dimension);
        assert!(close(ten.entropy, two.entropy * 2f64.log10(), 1e-12));
    }

    #[test]
    fn report_json_keys() {
        let json = serde_json::to_string(&information_dimension(&example_one())).unwrap();
        for key in [
            "entropy_bits",
            "split_scale_bits",
            "dimension",
            "degenerate",
        ] {
            assert!(json.contains(&format!("\"{key}\"")), "{json}");
        }
    }
}
