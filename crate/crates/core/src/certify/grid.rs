use num_bigint::{BigInt, BigUint};
use num_traits::Signed;
use rayon::prelude::*;

use super::Counterexample;
use crate::error::{Error, Result};
use crate::matrix_form::{MatrixForm, SymMatrixQ};
use crate::poly::MultiIndex;
use crate::psd;
use crate::rational::{self, Rational};

/// Points `beta / depth` for all `|beta| = depth`, in graded-lex order of
/// `beta` (starting at the vertex `e_1`).
pub fn simplex_grid(n_vars: usize, depth: u32) -> Vec<Vec<Rational>> {
    let den = BigInt::from(depth);
    MultiIndex::all_of_degree(n_vars, depth)
        .into_iter()
        .map(|beta| {
            beta.exponents()
                .iter()
                .map(|&e| Rational::new(BigInt::from(e), den.clone()))
                .collect()
        })
        .collect()
}

pub fn simplex_grid_size(n_vars: usize, depth: u32) -> BigUint {
    MultiIndex::count_of_degree(n_vars, depth)
}

/// Evaluates `B` exactly on the barycentric grid of the given depth and
/// returns a refutation at the first grid point where `B(x)` is not
/// positive definite.
pub fn counterexample_search(b: &MatrixForm, depth: u32) -> Result<Option<Counterexample>> {
    if depth == 0 {
        return Err(Error::ZeroDepth);
    }
    let found = simplex_grid(b.n_vars(), depth)
        .into_par_iter()
        .find_map_first(|x| {
            let value = b.eval(&x).expect("grid point has n_vars coordinates");
            psd::nonpositive_direction(&value).map(|(direction, value)| Counterexample {
                point: x,
                direction,
                value,
            })
        });
    Ok(found)
}

/// Rational lower bound on `lambda_min(a)` for a positive definite `a`,
/// close to the floating estimate. Checked exactly: `a - q I` is PSD.
fn certified_lower_eigenvalue(a: &SymMatrixQ) -> Rational {
    let lambda = psd::min_eig_float(a);
    let scale = psd::max_eig_float(a).abs().max(1.0);
    let mut tol = 1e-9 * scale;
    let mut hi = lambda + tol;
    loop {
        let lo = lambda - tol;
        let (Some(lo_q), Some(hi_q)) = (rational::from_f64(lo), rational::from_f64(hi)) else {
            return Rational::default();
        };
        let q = rational::simplest_between(&lo_q, &hi_q);
        if !q.is_positive() || psd::is_psd_exact(&a.shift_diagonal(&-&q)) {
            return q.max(Rational::default());
        }
        // Search strictly below the last window.
        hi = lo;
        tol *= 4.0;
    }
}

/// Grid minimum of `lambda_min(B(x))`, rounded down to a nearby rational.
///
/// Each per-point value is an exact lower bound at that point, but the
/// minimum is only over the grid, not the whole simplex.
pub fn margin_estimate(b: &MatrixForm, depth: u32) -> Result<Rational> {
    if depth == 0 {
        return Err(Error::ZeroDepth);
    }
    let per_point: Vec<Option<Rational>> = simplex_grid(b.n_vars(), depth)
        .into_par_iter()
        .map(|x| {
            let value = b.eval(&x).expect("grid point has n_vars coordinates");
            psd::is_pd_exact(&value)
                .is_definite()
                .then(|| certified_lower_eigenvalue(&value))
        })
        .collect();
    let mut best: Option<Rational> = None;
    for v in per_point {
        let v = v.ok_or(Error::CounterexampleAtDepth { depth })?;
        best = Some(match best {
            Some(b) if b <= v => b,
            _ => v,
        });
    }
    Ok(best.expect("grid is nonempty"))
}
