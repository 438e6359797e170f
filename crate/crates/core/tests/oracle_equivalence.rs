mod common;

use massdim::families::{max_deng, uniform_powerset};
use massdim::{
    brute_force_report, compare_reports, information_dimension, information_dimension_profile,
    profile_to_mass, Family,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

#[test]
fn families_match_enumeration_up_to_sixteen() {
    for family in Family::ALL {
        for n in 1..=16 {
            let profile = family.profile(n).unwrap();
            let grouped = information_dimension_profile(&profile);
            let enumerated = brute_force_report(&profile_to_mass(&profile).unwrap()).unwrap();
            assert!(
                compare_reports(&grouped, &enumerated, 1e-9),
                "{family} n={n}: {grouped:?} vs {enumerated:?}"
            );
        }
    }
}

#[test]
fn uniform_powerset_twelve_over_all_focal_sets() {
    let profile = uniform_powerset(12).unwrap();
    let mass = profile_to_mass(&profile).unwrap();
    assert_eq!(mass.len(), 4095);
    let enumerated = brute_force_report(&mass).unwrap();
    assert!(compare_reports(
        &information_dimension_profile(&profile),
        &enumerated,
        1e-10
    ));
}

#[test]
fn max_deng_ten_over_all_focal_sets() {
    let profile = max_deng(10).unwrap();
    let mass = profile_to_mass(&profile).unwrap();
    assert_eq!(mass.len(), 1023);
    let enumerated = brute_force_report(&mass).unwrap();
    assert!(compare_reports(
        &information_dimension_profile(&profile),
        &enumerated,
        1e-9
    ));
}

#[test]
fn random_masses_match_enumeration() {
    let mut rng = StdRng::seed_from_u64(2021);
    for _ in 0..500 {
        let n = rng.gen_range(2..=6);
        let mass = common::random_mass(&mut rng, n);
        let main = information_dimension(&mass);
        let oracle = brute_force_report(&mass).unwrap();
        assert!(
            compare_reports(&main, &oracle, 1e-10),
            "{mass:?}: {main:?} vs {oracle:?}"
        );
    }
}
