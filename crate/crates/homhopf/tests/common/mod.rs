//! Shared fixtures for the integration tests.

#![allow(dead_code)]

use std::sync::Arc;

use homhopf::hopf::HomHopfAlgebra;
use homhopf::registry::{build_h4, h4_automorphism};
use homhopf::scalar::{int, one, zero, Scalar};
use homhopf::yd::AutPair;

pub fn h4(c: i64) -> Arc<HomHopfAlgebra> {
    Arc::new(build_h4(&int(c)).unwrap())
}

pub fn pair(h: &Arc<HomHopfAlgebra>, a: i64, b: i64) -> AutPair {
    AutPair::new(
        h4_automorphism(h, &int(a)).unwrap(),
        h4_automorphism(h, &int(b)).unwrap(),
    )
    .unwrap()
}

/// Character with value `-1` on the group-like `g` of the four-dimensional
/// algebra.
pub fn theta_minus() -> Vec<Scalar> {
    vec![one(), -one(), zero(), zero()]
}

/// Coefficients of the group-like `g`.
pub fn g_vec() -> Vec<Scalar> {
    vec![zero(), one(), zero(), zero()]
}
