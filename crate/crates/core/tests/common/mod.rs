#![allow(dead_code)]

use massdim::{Frame, MassFunction, Subset};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::Rng;

/// Random mass function over a frame of `n` elements: a random nonempty set
/// of focal subsets with random positive masses normalized to one.
pub fn random_mass(rng: &mut StdRng, n: usize) -> MassFunction {
    let frame = Frame::with_size(n).unwrap();
    let top = (1u64 << n) - 1;
    let mut masks: Vec<u64> = (1..=top).collect();
    masks.shuffle(rng);
    let focal = rng.gen_range(1..=masks.len());
    masks.truncate(focal);
    let weights: Vec<f64> = masks.iter().map(|_| rng.gen_range(0.01..1.0)).collect();
    let total: f64 = weights.iter().sum();
    let assignments: Vec<_> = masks
        .iter()
        .zip(&weights)
        .map(|(&mask, &w)| (Subset::from_mask(&frame, mask).unwrap(), w / total))
        .collect();
    MassFunction::new(frame, assignments).unwrap()
}

/// Random positive masses on every nonempty subset.
pub fn random_full_powerset_mass(rng: &mut StdRng, n: usize) -> MassFunction {
    let frame = Frame::with_size(n).unwrap();
    let top = (1u64 << n) - 1;
    let weights: Vec<f64> = (1..=top).map(|_| rng.gen_range(1e-3..1.0)).collect();
    let total: f64 = weights.iter().sum();
    let assignments: Vec<_> = (1..=top)
        .zip(&weights)
        .map(|(mask, &w)| (Subset::from_mask(&frame, mask).unwrap(), w / total))
        .collect();
    MassFunction::new(frame, assignments).unwrap()
}

/// Random Bayesian mass function on `n` elements (all singletons focal).
pub fn random_bayesian(rng: &mut StdRng, n: usize) -> MassFunction {
    let frame = Frame::with_size(n).unwrap();
    let weights: Vec<f64> = (0..n).map(|_| rng.gen_range(0.01..1.0)).collect();
    let total: f64 = weights.iter().sum();
    let assignments: Vec<_> = (0..n)
        .map(|i| {
            (
                Subset::from_indices(&frame, &[i]).unwrap(),
                weights[i] / total,
            )
        })
        .collect();
    MassFunction::new(frame, assignments).unwrap()
}

pub fn random_permutation(rng: &mut StdRng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}
