//! Information fractal dimension of Dempster-Shafer mass functions.
//!
//! A mass function assigns belief to nonempty subsets of a frame of
//! discernment. Its information dimension is
//!
//! ```text
//! D_m = H_D / log Σ_A (2^|A| - 1)^m(A)
//! ```
//!
//! where `H_D = -Σ_A m(A) log(m(A) / (2^|A| - 1))` is the Deng entropy. The
//! dimension is 0 for a single certain outcome, 1 for total ignorance and for
//! uniform probability, and tends to `log2(3) ≈ 1.585` for the mass function
//! of maximum Deng entropy.
//!
//! ```
//! use massdim::{information_dimension, Frame, MassFunction};
//!
//! let frame = Frame::new(["w1", "w2"]).unwrap();
//! let w1 = frame.subset(&["w1"]).unwrap();
//! let both = frame.full();
//! let mass = MassFunction::new(frame, [(w1, 5.0 / 6.0), (both, 1.0 / 6.0)]).unwrap();
//!
//! let report = information_dimension(&mass);
//! assert!((report.dimension - 0.8033).abs() < 1e-4);
//! ```
//!
//! Families whose focal sets of equal size share a mass are evaluated from a
//! [`CardinalityProfile`] in `O(N)`, which keeps frames of hundreds of
//! elements cheap; [`oracle`] re-derives the same numbers by enumeration.

pub mod combinatorics;
pub mod dimension;
pub mod entropy;
mod error;
pub mod evidence;
pub mod experiments;
pub mod families;
pub mod oracle;
pub mod profile;

pub use dimension::{
    information_dimension, information_dimension_in, information_dimension_profile,
    information_dimension_profile_in, probability_dimension, probability_dimension_in, split_scale,
    split_scale_profile, DimensionReport,
};
pub use entropy::{
    deng_entropy, deng_entropy_profile, max_deng_entropy, shannon_entropy, shannon_max, LogBase,
};
pub use error::{Error, Result};
pub use evidence::{
    mass_as_probability, mass_from_assignments, mass_is_bayesian, subset_from_labels, Frame,
    MassDocument, MassFunction, ProbabilityDistribution, Subset, DEFAULT_TOLERANCE,
};
pub use experiments::{
    detect_limit, render_table, run_convergence, run_convergence_in, ConvergenceTable,
    ConvergenceVerdict, OutputFormat,
};
pub use families::Family;
pub use oracle::{brute_force_report, compare_reports};
pub use profile::{mass_to_profile, profile_to_mass, CardinalityProfile, ProfileRow, SetCount};
