use num_bigint::BigUint;

use super::grid::{counterexample_search, margin_estimate, simplex_grid_size};
use super::strict::{has_strict_pd_coefficients, Strictness};
use super::{ExponentFailure, Outcome, SearchReport};
use crate::error::Result;
use crate::matrix_form::MatrixForm;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOptions {
    pub m_max: u32,
    pub grid_depth: u32,
    /// After `m_max` is exhausted the grid depth is doubled at most this
    /// many times while looking for a counterexample.
    pub refinements: u32,
    /// Doubling stops once a grid would hold more points than this.
    pub grid_point_budget: u64,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            m_max: 50,
            grid_depth: 16,
            refinements: 2,
            grid_point_budget: 200_000,
        }
    }
}

/// Finds the least `m <= m_max` for which `Sigma^m * B` strictly has
/// positive definite coefficients, or a simplex counterexample.
pub fn polya_exponent_search(b: &MatrixForm, opts: &SearchOptions) -> Result<SearchReport> {
    b.validate()?;
    let mut report = SearchReport {
        outcome: Outcome::Inconclusive,
        m_tried: 0,
        m_max: opts.m_max,
        grid_depth: opts.grid_depth,
        failures: Vec::new(),
        margin: None,
    };

    if let Some(cx) = counterexample_search(b, opts.grid_depth)? {
        report.outcome = Outcome::Refuted(cx);
        return Ok(report);
    }
    report.margin = margin_estimate(b, opts.grid_depth).ok();

    let mut current = b.clone();
    for m in 0..=opts.m_max {
        report.m_tried = m + 1;
        match has_strict_pd_coefficients(&current) {
            Strictness::Strict(mut cert) => {
                cert.m = m;
                report.outcome = Outcome::Certified(cert);
                return Ok(report);
            }
            Strictness::NotStrict { alpha, .. } => {
                report.failures.push(ExponentFailure { m, alpha })
            }
        }
        if m < opts.m_max {
            current = current.sigma_mul();
        }
    }

    let mut depth = opts.grid_depth;
    for _ in 0..opts.refinements {
        let Some(next) = depth.checked_mul(2) else {
            break;
        };
        if simplex_grid_size(b.n_vars(), next) > BigUint::from(opts.grid_point_budget) {
            break;
        }
        depth = next;
        report.grid_depth = depth;
        if let Some(cx) = counterexample_search(b, depth)? {
            report.outcome = Outcome::Refuted(cx);
            return Ok(report);
        }
    }
    Ok(report)
}
