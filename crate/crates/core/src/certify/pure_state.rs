use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use super::grid::simplex_grid;
use crate::error::{Error, Result};
use crate::matrix_form::MatrixForm;
use crate::poly::PowerTable;
use crate::psd;
use crate::rational::Rational;

/// Value of the pure state attached to a simplex point `x` and a direction
/// `v`: `sum_alpha (v^T P_alpha v) x^alpha / (v^T v)`.
///
/// Works coefficient by coefficient, without forming `B(x)`.
pub fn pure_state_evaluate(b: &MatrixForm, x: &[Rational], v: &[Rational]) -> Result<Rational> {
    if x.len() != b.n_vars() {
        return Err(Error::DimensionMismatch {
            expected: b.n_vars(),
            found: x.len(),
        });
    }
    if v.len() != b.size() {
        return Err(Error::DimensionMismatch {
            expected: b.size(),
            found: v.len(),
        });
    }
    if x.iter().any(Signed::is_negative) || x.iter().sum::<Rational>() != Rational::one() {
        return Err(Error::OffSimplex);
    }
    let norm_sq: Rational = v.iter().map(|vi| vi * vi).sum();
    if norm_sq.is_zero() {
        return Err(Error::ZeroDirection);
    }
    let powers = PowerTable::new(x, b.degree());
    let mut acc = Rational::zero();
    for (alpha, p) in b.terms() {
        let weight = powers.monomial(alpha);
        if weight.is_zero() {
            continue;
        }
        acc += psd::rayleigh(p, v)? * weight;
    }
    Ok(acc / norm_sq)
}

/// Smallest pure-state value found by [`pure_state_scan`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PureStateScan {
    pub point: Vec<Rational>,
    pub direction: Vec<Rational>,
    pub value: Rational,
    pub evaluations: usize,
}

/// Integer directions `e_i`, `e_i + e_j` and `e_i - e_j` (`i < j`).
fn probe_directions(r: usize) -> Vec<Vec<Rational>> {
    let unit = |i: usize| {
        let mut v = vec![Rational::zero(); r];
        v[i] = Rational::one();
        v
    };
    let mut out: Vec<Vec<Rational>> = (0..r).map(unit).collect();
    for i in 0..r {
        for j in i + 1..r {
            for sign in [Rational::one(), -Rational::one()] {
                let mut v = unit(i);
                v[j] = sign;
                out.push(v);
            }
        }
    }
    out
}

/// Evaluates the pure-state functional over the simplex grid of the given
/// depth and a fixed family of probe directions, returning the minimum
/// (first in grid then direction order on ties).
pub fn pure_state_scan(b: &MatrixForm, depth: u32) -> Result<PureStateScan> {
    if depth == 0 {
        return Err(Error::ZeroDepth);
    }
    let directions = probe_directions(b.size());
    let grid = simplex_grid(b.n_vars(), depth);
    let evaluations = grid.len() * directions.len();
    let per_point: Vec<(Vec<Rational>, usize, Rational)> = grid
        .into_par_iter()
        .map(|x| {
            let (k, value) = directions
                .iter()
                .enumerate()
                .map(|(k, v)| (k, pure_state_evaluate(b, &x, v).expect("valid probe")))
                .reduce(|best, cand| if cand.1 < best.1 { cand } else { best })
                .expect("at least one direction");
            (x, k, value)
        })
        .collect();
    let (point, k, value) = per_point
        .into_iter()
        .reduce(|best, cand| if cand.2 < best.2 { cand } else { best })
        .expect("grid is nonempty");
    Ok(PureStateScan {
        point,
        direction: directions[k].clone(),
        value,
        evaluations,
    })
}
