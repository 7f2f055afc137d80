//! Search for and verification of Pólya certificates, and their refutation
//! by simplex counterexamples.
//!
//! A matrix form `B` *strictly has positive definite coefficients* when
//! every coefficient `P_alpha` over all `|alpha| = d` is positive definite,
//! absent (zero) coefficients included. If `B(x)` is positive definite on
//! the whole standard simplex then some `Sigma^m * B` has this property, and
//! conversely such an `m` certifies pointwise definiteness. The search walks
//! `m = 0, 1, ...` and returns the first exponent that works, so the
//! reported `m` is minimal.

mod grid;
mod pure_state;
mod search;
mod strict;

use std::collections::BTreeMap;

use crate::poly::MultiIndex;
use crate::psd::PdWitness;
use crate::rational::Rational;

pub use grid::{counterexample_search, margin_estimate, simplex_grid, simplex_grid_size};
pub use pure_state::{pure_state_evaluate, pure_state_scan, PureStateScan};
pub use search::{polya_exponent_search, SearchOptions};
pub use strict::{has_strict_pd_coefficients, verify_certificate, Strictness};

/// Exact evidence that `Sigma^m * B` strictly has positive definite
/// coefficients: one minor witness per multi-index of length `degree`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyaCertificate {
    pub m: u32,
    pub degree: u32,
    pub witnesses: BTreeMap<MultiIndex, PdWitness>,
}

/// A simplex point and a direction with `direction^T B(point) direction <= 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub point: Vec<Rational>,
    pub direction: Vec<Rational>,
    pub value: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Certified(PolyaCertificate),
    Refuted(Counterexample),
    Inconclusive,
}

/// First failing coefficient for one exponent that did not certify.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExponentFailure {
    pub m: u32,
    pub alpha: MultiIndex,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchReport {
    pub outcome: Outcome,
    /// Number of exponents examined.
    pub m_tried: u32,
    pub m_max: u32,
    /// Deepest grid explored for counterexamples.
    pub grid_depth: u32,
    pub failures: Vec<ExponentFailure>,
    /// Grid-minimum lower bound on `lambda_min(B(x))`; diagnostic only.
    pub margin: Option<Rational>,
}

impl SearchReport {
    pub fn certificate(&self) -> Option<&PolyaCertificate> {
        match &self.outcome {
            Outcome::Certified(c) => Some(c),
            _ => None,
        }
    }

    pub fn counterexample(&self) -> Option<&Counterexample> {
        match &self.outcome {
            Outcome::Refuted(c) => Some(c),
            _ => None,
        }
    }
}
