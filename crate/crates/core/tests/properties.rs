//! Randomized and exhaustive property suites for the series layer and the characters.

mod common;

#[test]
fn theta_sum_equals_product() {
    common::theta_sum_equals_product().unwrap();
}

#[test]
fn puiseux_ring_axioms() {
    common::puiseux_ring_axioms().unwrap();
}

#[test]
fn eisenstein_trivial_twist_is_untwisted() {
    common::eisenstein_trivial_twist().unwrap();
}

#[test]
fn flow_composition() {
    common::flow_composition().unwrap();
}

#[test]
fn twisted_characters_symmetric_under_j_reflection() {
    common::twisted_reflection_symmetry().unwrap();
}

#[test]
fn twisted_characters_finite_untwisted_poles() {
    common::twisted_finite_untwisted_poles().unwrap();
}

#[test]
fn limits_are_direction_independent() {
    common::limits_direction_independent().unwrap();
}
