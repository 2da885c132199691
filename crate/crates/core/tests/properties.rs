//! Standalone runs of the randomized suites in `common`, one test per
//! invariant so a failure names the broken law directly.

mod common;

const CASES: usize = 1000;

#[test]
fn paf_symmetry() {
    common::paf_symmetry_suite(CASES);
}

#[test]
fn wiener_khinchin_consistency() {
    common::wiener_khinchin_suite(CASES);
}

#[test]
fn affine_map_homomorphism() {
    common::affine_homomorphism_suite(CASES);
}

#[test]
fn transform_group_axioms() {
    common::transform_group_suite(CASES);
}

#[test]
fn canonical_form_idempotence_and_invariance() {
    common::canonical_form_suite(CASES);
}
