use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::MultiIndex;
use crate::error::{Error, Result};
use crate::rational::Rational;

/// A homogeneous polynomial with exact rational coefficients.
///
/// Zero coefficients are never stored. The degree is carried explicitly so
/// the zero form still has a well-defined degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScalarForm {
    n_vars: usize,
    degree: u32,
    coeffs: BTreeMap<MultiIndex, Rational>,
}

impl ScalarForm {
    /// Builds a form from `(alpha, coefficient)` terms. Repeated monomials
    /// are summed.
    pub fn new(
        n_vars: usize,
        degree: u32,
        terms: impl IntoIterator<Item = (MultiIndex, Rational)>,
    ) -> Result<Self> {
        if n_vars == 0 {
            return Err(Error::NoVariables);
        }
        let mut coeffs = BTreeMap::new();
        for (alpha, c) in terms {
            if alpha.n_vars() != n_vars {
                return Err(Error::DimensionMismatch {
                    expected: n_vars,
                    found: alpha.n_vars(),
                });
            }
            if alpha.degree() != degree {
                return Err(Error::MixedDegree {
                    found: alpha.degree(),
                    alpha,
                    degree,
                });
            }
            accumulate(&mut coeffs, alpha, c);
        }
        Ok(ScalarForm {
            n_vars,
            degree,
            coeffs,
        })
    }

    pub fn zero(n_vars: usize, degree: u32) -> Self {
        ScalarForm {
            n_vars,
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    /// The constant form `1` of degree zero.
    pub fn one(n_vars: usize) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(MultiIndex::zeros(n_vars), Rational::one());
        ScalarForm {
            n_vars,
            degree: 0,
            coeffs,
        }
    }

    /// The linear form `x_1 + ... + x_n`.
    pub fn sigma(n_vars: usize) -> Self {
        let coeffs = (0..n_vars)
            .map(|i| (MultiIndex::unit(n_vars, i), Rational::one()))
            .collect();
        ScalarForm {
            n_vars,
            degree: 1,
            coeffs,
        }
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `x^alpha`, zero when absent.
    pub fn coefficient(&self, alpha: &MultiIndex) -> Rational {
        self.coeffs
            .get(alpha)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Nonzero terms in graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &Rational)> {
        self.coeffs.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn mul(&self, other: &ScalarForm) -> Result<ScalarForm> {
        if self.n_vars != other.n_vars {
            return Err(Error::VariableCountMismatch {
                left: self.n_vars,
                right: other.n_vars,
            });
        }
        let mut coeffs = BTreeMap::new();
        for (a, fa) in &self.coeffs {
            for (b, gb) in &other.coeffs {
                accumulate(&mut coeffs, a.add(b), fa * gb);
            }
        }
        Ok(ScalarForm {
            n_vars: self.n_vars,
            degree: self.degree + other.degree,
            coeffs,
        })
    }

    /// Multiplies by `x_1 + ... + x_n`.
    pub fn sigma_mul(&self) -> ScalarForm {
        let mut coeffs = BTreeMap::new();
        for (alpha, c) in &self.coeffs {
            for i in 0..self.n_vars {
                accumulate(&mut coeffs, alpha.plus_unit(i), c.clone());
            }
        }
        ScalarForm {
            n_vars: self.n_vars,
            degree: self.degree + 1,
            coeffs,
        }
    }

    pub fn eval(&self, x: &[Rational]) -> Result<Rational> {
        if x.len() != self.n_vars {
            return Err(Error::DimensionMismatch {
                expected: self.n_vars,
                found: x.len(),
            });
        }
        let powers = PowerTable::new(x, self.degree);
        Ok(self
            .coeffs
            .iter()
            .map(|(alpha, c)| c * powers.monomial(alpha))
            .sum())
    }
}

fn accumulate(map: &mut BTreeMap<MultiIndex, Rational>, key: MultiIndex, value: Rational) {
    use std::collections::btree_map::Entry;
    if value.is_zero() {
        return;
    }
    match map.entry(key) {
        Entry::Vacant(e) => {
            e.insert(value);
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += value;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

/// Cached powers `x_i^k` for `k <= degree`.
pub(crate) struct PowerTable {
    powers: Vec<Vec<Rational>>,
}

impl PowerTable {
    pub(crate) fn new(x: &[Rational], degree: u32) -> Self {
        let powers = x
            .iter()
            .map(|xi| {
                let mut row = Vec::with_capacity(degree as usize + 1);
                row.push(Rational::one());
                for k in 1..=degree as usize {
                    let next = &row[k - 1] * xi;
                    row.push(next);
                }
                row
            })
            .collect();
        PowerTable { powers }
    }

    pub(crate) fn monomial(&self, alpha: &MultiIndex) -> Rational {
        alpha
            .exponents()
            .iter()
            .zip(&self.powers)
            .map(|(&e, row)| &row[e as usize])
            .fold(Rational::one(), |acc, p| acc * p)
    }
}
