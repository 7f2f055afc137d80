//! Exact Pólya positivity certificates for symmetric matrices of forms.
//!
//! Given a symmetric matrix `B` whose entries are forms of one degree, the
//! crate searches for the least `m` such that every coefficient of the
//! entrywise product `(x_1 + ... + x_n)^m * B` is a positive definite
//! matrix. Such an `m` proves that `B(x)` is positive definite on the
//! standard simplex; when none exists the search instead returns an exact
//! simplex point and direction on which `B` fails to be definite.
//!
//! All certificates are exact: coefficients are arbitrary-precision
//! rationals and definiteness is decided by Sylvester's criterion.

pub mod certify;
pub mod cli;
pub mod error;
pub mod io;
pub mod matrix_form;
pub mod poly;
pub mod psd;
pub mod rational;

pub use certify::{
    counterexample_search, has_strict_pd_coefficients, margin_estimate, polya_exponent_search,
    pure_state_evaluate, verify_certificate, Counterexample, Outcome, PolyaCertificate,
    SearchOptions, SearchReport,
};
pub use error::{Error, Result};
pub use matrix_form::{order_unit_shift, MatrixForm, SymMatrixQ, WeightedNormalForm};
pub use poly::{multinomial, MultiIndex, ScalarForm};
pub use psd::{is_pd_exact, is_psd_exact, min_eig_float, rayleigh, PdWitness};
pub use rational::Rational;
