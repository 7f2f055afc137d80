use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exponent vector of a monomial `x_1^a_1 ... x_n^a_n`.
///
/// Multi-indices are totally ordered by graded lexicographic order with
/// `x_1 > x_2 > ... > x_n`, listed from the heaviest power of `x_1` down.
/// Among degree-2 monomials in two variables the order is `x^2, xy, y^2`;
/// "first" and "smallest" always refer to this listing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MultiIndex(Vec<u32>);

impl MultiIndex {
    pub fn new(exponents: Vec<u32>) -> Self {
        MultiIndex(exponents)
    }

    pub fn zeros(n_vars: usize) -> Self {
        MultiIndex(vec![0; n_vars])
    }

    /// The exponent vector of `x_i`.
    pub fn unit(n_vars: usize, i: usize) -> Self {
        let mut e = vec![0; n_vars];
        e[i] = 1;
        MultiIndex(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn n_vars(&self) -> usize {
        self.0.len()
    }

    /// Length `|alpha|`, the total degree of the monomial.
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn plus_unit(&self, i: usize) -> Self {
        let mut e = self.0.clone();
        e[i] += 1;
        MultiIndex(e)
    }

    pub fn minus_unit(&self, i: usize) -> Option<Self> {
        if self.0[i] == 0 {
            return None;
        }
        let mut e = self.0.clone();
        e[i] -= 1;
        Some(MultiIndex(e))
    }

    pub fn add(&self, other: &MultiIndex) -> Self {
        debug_assert_eq!(self.n_vars(), other.n_vars());
        MultiIndex(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Every multi-index in `n_vars` variables of length `degree`, in
    /// ascending order.
    pub fn all_of_degree(n_vars: usize, degree: u32) -> Vec<MultiIndex> {
        let mut out = Vec::new();
        let mut current = vec![0u32; n_vars];
        if n_vars > 0 {
            fill_compositions(&mut current, 0, degree, &mut out);
        }
        out
    }

    /// Number of monomials of the given degree, `C(n + d - 1, d)`.
    pub fn count_of_degree(n_vars: usize, degree: u32) -> BigUint {
        if n_vars == 0 {
            return if degree == 0 {
                BigUint::one()
            } else {
                BigUint::default()
            };
        }
        binomial(n_vars as u64 - 1 + degree as u64, degree as u64)
    }
}

fn fill_compositions(current: &mut [u32], pos: usize, remaining: u32, out: &mut Vec<MultiIndex>) {
    if pos + 1 == current.len() {
        current[pos] = remaining;
        out.push(MultiIndex(current.to_vec()));
        return;
    }
    for e in (0..=remaining).rev() {
        current[pos] = e;
        fill_compositions(current, pos + 1, remaining - e, out);
    }
    current[pos] = 0;
}

fn binomial(n: u64, k: u64) -> BigUint {
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

impl Ord for MultiIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for MultiIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

impl From<Vec<u32>> for MultiIndex {
    fn from(v: Vec<u32>) -> Self {
        MultiIndex(v)
    }
}

/// Multinomial coefficient `d! / (a_1! ... a_n!)`.
pub fn multinomial(degree: u32, alpha: &MultiIndex) -> Result<BigUint> {
    let found = alpha.degree();
    if found != degree {
        return Err(Error::LengthMismatch {
            alpha: alpha.clone(),
            expected: degree,
            found,
        });
    }
    // Product of binomials C(a_1 + ... + a_i, a_i).
    let mut acc = BigUint::one();
    let mut running = 0u64;
    for &a in alpha.exponents() {
        running += a as u64;
        acc *= binomial(running, a as u64);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mi(v: &[u32]) -> MultiIndex {
        MultiIndex::new(v.to_vec())
    }

    #[test]
    fn multinomial_values() {
        assert_eq!(multinomial(3, &mi(&[2, 1])).unwrap(), BigUint::from(3u32));
        assert_eq!(multinomial(0, &mi(&[0, 0, 0])).unwrap(), BigUint::one());
        assert_eq!(multinomial(4, &mi(&[2, 2])).unwrap(), BigUint::from(6u32));
    }

    #[test]
    fn multinomial_rejects_wrong_length() {
        let err = multinomial(3, &mi(&[1, 1])).unwrap_err();
        assert!(matches!(
            err,
            Error::LengthMismatch {
                expected: 3,
                found: 2,
                ..
            }
        ));
    }

    #[test]
    fn multinomial_row_sums_to_power() {
        for n in 1..=4usize {
            for d in 0..=6u32 {
                let total: BigUint = MultiIndex::all_of_degree(n, d)
                    .iter()
                    .map(|a| multinomial(d, a).unwrap())
                    .sum();
                assert_eq!(total, BigUint::from(n).pow(d), "n={n} d={d}");
            }
        }
    }

    #[test]
    fn enumeration_is_sorted_and_complete() {
        let all = MultiIndex::all_of_degree(3, 4);
        assert_eq!(BigUint::from(all.len()), MultiIndex::count_of_degree(3, 4));
        assert_eq!(all.len(), 15);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(all[0], mi(&[4, 0, 0]));
        assert_eq!(all[14], mi(&[0, 0, 4]));
    }

    #[test]
    fn graded_order() {
        assert!(mi(&[2, 0]) < mi(&[1, 1]));
        assert!(mi(&[1, 1]) < mi(&[0, 2]));
        assert!(mi(&[0, 2]) < mi(&[3, 0]));
        assert_eq!(mi(&[1, 2]), mi(&[1, 2]));
        assert_ne!(mi(&[1, 2]), mi(&[2, 1]));
    }

    #[test]
    fn degree_zero_single_monomial() {
        assert_eq!(MultiIndex::all_of_degree(3, 0), vec![mi(&[0, 0, 0])]);
    }
}
