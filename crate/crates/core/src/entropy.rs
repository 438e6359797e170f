//! Shannon and Deng entropies.
//!
//! Everything is computed in nats and converted to the requested
//! [`LogBase`] at the end, so changing base only rescales results.

use std::fmt;
use std::str::FromStr;

use crate::combinatorics::{ln_pow2_minus1, ln_three_pow_minus_two_pow};
use crate::error::{Error, Result};
use crate::evidence::{MassFunction, ProbabilityDistribution};
use crate::profile::CardinalityProfile;

/// Base of the logarithm used for entropy-valued outputs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogBase(f64);

impl LogBase {
    pub const TWO: LogBase = LogBase(2.0);
    pub const E: LogBase = LogBase(std::f64::consts::E);
    pub const TEN: LogBase = LogBase(10.0);

    pub fn new(base: f64) -> Result<Self> {
        if base.is_finite() && base > 1.0 {
            Ok(Self(base))
        } else {
            Err(Error::InvalidBase(base))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn ln(self) -> f64 {
        if self == Self::TWO {
            std::f64::consts::LN_2
        } else if self == Self::E {
            1.0
        } else if self == Self::TEN {
            std::f64::consts::LN_10
        } else {
            self.0.ln()
        }
    }

    /// Converts a quantity measured in nats into this base.
    pub fn from_nats(self, nats: f64) -> f64 {
        if self == Self::E {
            nats
        } else {
            nats / self.ln()
        }
    }
}

impl Default for LogBase {
    fn default() -> Self {
        Self::TWO
    }
}

impl FromStr for LogBase {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "2" => Ok(Self::TWO),
            "e" => Ok(Self::E),
            "10" => Ok(Self::TEN),
            other => Err(Error::UnknownBase(other.to_string())),
        }
    }
}

impl fmt::Display for LogBase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if *self == Self::E {
            write!(f, "e")
        } else {
            write!(f, "{}", self.0)
        }
    }
}

pub(crate) fn shannon_nats(dist: &ProbabilityDistribution) -> f64 {
    let mut h = 0.0;
    for &p in dist.probabilities() {
        h -= p * p.ln();
    }
    h.max(0.0)
}

pub(crate) fn deng_nats(mass: &MassFunction) -> f64 {
    let mut h = 0.0;
    for (subset, m) in mass.iter() {
        h += m * (ln_pow2_minus1(subset.cardinality()) - m.ln());
    }
    h.max(0.0)
}

pub(crate) fn deng_profile_nats(profile: &CardinalityProfile) -> f64 {
    let mut h = 0.0;
    for row in profile.rows() {
        let layer = row.layer_mass();
        if layer == 0.0 {
            continue;
        }
        h += layer * (ln_pow2_minus1(row.cardinality()) - row.ln_per_set_mass());
    }
    h.max(0.0)
}

pub fn shannon_entropy(dist: &ProbabilityDistribution, base: LogBase) -> f64 {
    base.from_nats(shannon_nats(dist))
}

/// `log(n)`, attained by the uniform distribution over `n` outcomes.
pub fn shannon_max(n: usize, base: LogBase) -> f64 {
    assert!(n >= 1, "shannon_max needs at least one outcome");
    base.from_nats((n as f64).ln())
}

/// `-Σ m(A) log(m(A) / (2^|A| - 1))` over the focal elements.
pub fn deng_entropy(mass: &MassFunction, base: LogBase) -> f64 {
    base.from_nats(deng_nats(mass))
}

/// Deng entropy from a profile, one term per cardinality layer.
pub fn deng_entropy_profile(profile: &CardinalityProfile, base: LogBase) -> f64 {
    base.from_nats(deng_profile_nats(profile))
}

/// `log(3^n - 2^n)`: the largest Deng entropy over an `n`-element frame.
pub fn max_deng_entropy(n: usize, base: LogBase) -> f64 {
    assert!(n >= 1, "max_deng_entropy needs a nonempty frame");
    let n = u32::try_from(n).expect("frame size fits in u32");
    base.from_nats(ln_three_pow_minus_two_pow(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::evidence::Frame;
    use crate::profile::{ProfileRow, SetCount};

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    #[allow(clippy::approx_constant)]
    fn shannon_values() {
        let u4 = ProbabilityDistribution::uniform(4).unwrap();
        assert!(close(shannon_entropy(&u4, LogBase::TWO), 2.0, 1e-12));
        let det = ProbabilityDistribution::new(vec![1.0]).unwrap();
        assert_eq!(shannon_entropy(&det, LogBase::TWO), 0.0);
        assert_eq!(shannon_entropy(&det, LogBase::E), 0.0);
        let u10 = ProbabilityDistribution::uniform(10).unwrap();
        assert!(close(shannon_entropy(&u10, LogBase::TWO), 3.3219, 5e-5));
    }

    #[test]
    fn shannon_max_values() {
        assert!(close(shannon_max(8, LogBase::TWO), 3.0, 1e-12));
        assert_eq!(shannon_max(1, LogBase::TWO), 0.0);
        assert!(close(shannon_max(3, LogBase::TWO), 1.5850, 5e-5));
    }

    #[test]
    fn deng_values() {
        let frame = Frame::new(["ω1", "ω2"]).unwrap();
        let a = frame.subset(&["ω1"]).unwrap();
        let b = frame.full();
        let m = MassFunction::new(frame, [(a, 5.0 / 6.0), (b, 1.0 / 6.0)]).unwrap();
        assert!(close(deng_entropy(&m, LogBase::TWO), 0.9142, 5e-5));

        let vac = MassFunction::vacuous(Frame::with_size(3).unwrap());
        assert!(close(deng_entropy(&vac, LogBase::TWO), 2.8074, 5e-5));

        let single = MassFunction::vacuous(Frame::new(["a"]).unwrap());
        assert_eq!(deng_entropy(&single, LogBase::TWO), 0.0);
    }

    #[test]
    fn deng_profile_values() {
        let powerset2 = CardinalityProfile::new(
            2,
            vec![
                ProfileRow::new(1, SetCount::Exact(2), 1.0 / 3.0),
                ProfileRow::new(2, SetCount::Exact(1), 1.0 / 3.0),
            ],
        )
        .unwrap();
        assert!(close(
            deng_entropy_profile(&powerset2, LogBase::TWO),
            2.1133,
            5e-5
        ));
        let vac1 =
            CardinalityProfile::new(1, vec![ProfileRow::new(1, SetCount::Exact(1), 1.0)]).unwrap();
        assert_eq!(deng_entropy_profile(&vac1, LogBase::TWO), 0.0);
    }

    #[test]
    fn max_deng_values() {
        assert!(close(max_deng_entropy(2, LogBase::TWO), 2.3219, 5e-5));
        assert_eq!(max_deng_entropy(1, LogBase::TWO), 0.0);
        assert!(close(max_deng_entropy(10, LogBase::TWO), 15.8244, 5e-5));
        // continuous across the exact/asymptotic switch
        let at40 = max_deng_entropy(40, LogBase::E);
        let at41 = max_deng_entropy(41, LogBase::E);
        assert!(close(at41 - at40, 3f64.ln(), 1e-6));
    }

    #[test]
    fn base_parsing() {
        assert_eq!("2".parse::<LogBase>().unwrap(), LogBase::TWO);
        assert_eq!("e".parse::<LogBase>().unwrap(), LogBase::E);
        assert_eq!("10".parse::<LogBase>().unwrap(), LogBase::TEN);
        assert!("3".parse::<LogBase>().is_err());
        assert!(LogBase::new(1.0).is_err());
        assert!(LogBase::new(f64::NAN).is_err());
        assert_eq!(LogBase::new(3.0).unwrap().value(), 3.0);
        assert_eq!(LogBase::E.to_string(), "e");
    }
}
