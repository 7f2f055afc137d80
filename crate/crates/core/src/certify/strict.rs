use num_bigint::BigUint;
use rayon::prelude::*;

use super::PolyaCertificate;
use crate::error::{Error, Result};
use crate::matrix_form::MatrixForm;
use crate::poly::MultiIndex;
use crate::psd::{self, PdCheck};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Strictness {
    /// Every coefficient is positive definite; the certificate has `m = 0`.
    Strict(PolyaCertificate),
    /// The graded-lex first coefficient that is not positive definite.
    NotStrict { alpha: MultiIndex, check: PdCheck },
}

impl Strictness {
    pub fn is_strict(&self) -> bool {
        matches!(self, Strictness::Strict(_))
    }
}

fn check_all(b: &MatrixForm) -> Vec<(MultiIndex, PdCheck)> {
    b.all_coefficients()
        .into_par_iter()
        .map(|(alpha, p)| {
            let check = psd::is_pd_exact(&p);
            (alpha, check)
        })
        .collect()
}

/// Tests every coefficient over all `|alpha| = deg B`; absent coefficients
/// are zero matrices and fail.
pub fn has_strict_pd_coefficients(b: &MatrixForm) -> Strictness {
    let checks = check_all(b);
    if let Some((alpha, check)) = checks.iter().find(|(_, c)| !c.is_definite()) {
        return Strictness::NotStrict {
            alpha: alpha.clone(),
            check: check.clone(),
        };
    }
    let witnesses = checks
        .into_iter()
        .map(|(alpha, c)| (alpha, c.into_witness().expect("checked definite")))
        .collect();
    Strictness::Strict(PolyaCertificate {
        m: 0,
        degree: b.degree(),
        witnesses,
    })
}

/// Recomputes `Sigma^m * B` from scratch and re-checks every coefficient
/// against the stored minors.
pub fn verify_certificate(b: &MatrixForm, cert: &PolyaCertificate) -> Result<bool> {
    let expected_degree = b.degree() + cert.m;
    if cert.degree != expected_degree {
        return Err(Error::CertificateDegree {
            expected: expected_degree,
            found: cert.degree,
        });
    }
    let expected_count = MultiIndex::count_of_degree(b.n_vars(), expected_degree);
    if BigUint::from(cert.witnesses.len()) != expected_count {
        return Err(Error::WitnessCount {
            expected: usize::try_from(expected_count).unwrap_or(usize::MAX),
            found: cert.witnesses.len(),
        });
    }
    for alpha in cert.witnesses.keys() {
        if alpha.n_vars() != b.n_vars() || alpha.degree() != expected_degree {
            return Err(Error::LengthMismatch {
                alpha: alpha.clone(),
                expected: expected_degree,
                found: alpha.degree(),
            });
        }
    }

    let expanded = b.sigma_pow_mul(cert.m);
    let checks = check_all(&expanded);
    Ok(checks.into_iter().all(|(alpha, check)| {
        let Some(witness) = cert.witnesses.get(&alpha) else {
            return false;
        };
        check.is_definite() && witness.all_positive() && witness.minors == check.minors
    }))
}
