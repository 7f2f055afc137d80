use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use super::{MatrixForm, SymMatrixQ};
use crate::poly::{multinomial, MultiIndex};
use crate::psd;
use crate::rational::{self, Rational};

/// `B` rewritten as `sum_{|alpha| = d} A'_alpha * binom(d, alpha) x^alpha`.
///
/// Holds an entry for every multi-index of length `d`, zero matrices
/// included.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedNormalForm {
    n_vars: usize,
    size: usize,
    degree: u32,
    coeffs: BTreeMap<MultiIndex, SymMatrixQ>,
}

impl WeightedNormalForm {
    pub fn new(b: &MatrixForm) -> Self {
        let d = b.degree();
        let coeffs = b
            .all_coefficients()
            .into_iter()
            .map(|(alpha, p)| {
                let w = multinomial(d, &alpha).expect("alpha has length d");
                let inv = Rational::new(BigInt::one(), BigInt::from(w));
                (alpha, p.scale(&inv))
            })
            .collect();
        WeightedNormalForm {
            n_vars: b.n_vars(),
            size: b.size(),
            degree: d,
            coeffs,
        }
    }

    /// Builds a normal form directly from weighted coefficients. Absent
    /// multi-indices are zero.
    pub fn from_weighted(
        n_vars: usize,
        size: usize,
        degree: u32,
        weighted: impl IntoIterator<Item = (MultiIndex, SymMatrixQ)>,
    ) -> crate::Result<Self> {
        let given = MatrixForm::new(n_vars, size, degree, weighted)?;
        let coeffs = given.all_coefficients().into_iter().collect();
        Ok(WeightedNormalForm {
            n_vars,
            size,
            degree,
            coeffs,
        })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn weighted_coefficient(&self, alpha: &MultiIndex) -> Option<&SymMatrixQ> {
        self.coeffs.get(alpha)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &SymMatrixQ)> {
        self.coeffs.iter()
    }

    /// Multiplies each `A'_alpha` back by its multinomial weight.
    pub fn reconstruct(&self) -> MatrixForm {
        let terms = self.coeffs.iter().map(|(alpha, a)| {
            let w = multinomial(self.degree, alpha).expect("alpha has length d");
            (
                alpha.clone(),
                a.scale(&Rational::from_integer(BigInt::from(w))),
            )
        });
        MatrixForm::new(self.n_vars, self.size, self.degree, terms)
            .expect("normal form is structurally valid")
    }

    /// True iff `shift * I + A'_alpha` is positive semidefinite for every
    /// `alpha`.
    pub fn shift_is_psd(&self, shift: &BigUint) -> bool {
        let s = Rational::from_integer(BigInt::from(shift.clone()));
        self.coeffs
            .values()
            .all(|a| psd::is_psd_exact(&a.shift_diagonal(&s)))
    }
}

/// Least integer `N >= 0` with `N * I + A'_alpha` positive semidefinite for
/// every `alpha`.
///
/// A floating bound on `max lambda_max(-A'_alpha)` seeds the search; the
/// answer is settled by exact PSD tests, which are monotone in `N`.
pub fn order_unit_shift(nf: &WeightedNormalForm) -> BigUint {
    let seed = nf
        .coeffs
        .values()
        .filter(|a| !a.is_zero())
        .map(|a| -psd::min_eig_float(a))
        .fold(0.0f64, f64::max)
        .ceil();
    let mut n = rational::from_f64(seed)
        .map(|r| r.to_integer())
        .filter(|v| !v.is_negative())
        .and_then(|v| v.to_biguint())
        .unwrap_or_default();

    let passes = |k: &BigUint| nf.shift_is_psd(k);

    let (mut fail, mut ok) = if passes(&n) {
        if n.is_zero() {
            return n;
        }
        let below = &n - 1u32;
        if !passes(&below) {
            return n;
        }
        if passes(&BigUint::zero()) {
            return BigUint::zero();
        }
        (BigUint::zero(), below)
    } else {
        let mut step = BigUint::one();
        let mut lo = n.clone();
        loop {
            n = &lo + &step;
            if passes(&n) {
                break (lo, n);
            }
            lo = n;
            step *= 2u32;
        }
    };
    // Invariant: `fail` fails, `ok` passes.
    while &ok - &fail > BigUint::one() {
        let mid = (&fail + &ok) / 2u32;
        if passes(&mid) {
            ok = mid;
        } else {
            fail = mid;
        }
    }
    ok
}
