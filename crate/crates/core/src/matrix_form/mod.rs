//! Symmetric matrices of forms `B = sum_{|alpha| = d} P_alpha x^alpha`.

mod normal_form;
mod sym;

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::poly::{MultiIndex, PowerTable, ScalarForm};
use crate::rational::Rational;

pub use normal_form::{order_unit_shift, WeightedNormalForm};
pub use sym::SymMatrixQ;

/// A symmetric `r x r` matrix whose entries are forms of one degree in
/// `n_vars` variables, stored by coefficient matrix. Zero coefficient
/// matrices are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixForm {
    n_vars: usize,
    size: usize,
    degree: u32,
    coeffs: BTreeMap<MultiIndex, SymMatrixQ>,
}

impl MatrixForm {
    /// Builds and validates a matrix form. Repeated keys are summed.
    pub fn new(
        n_vars: usize,
        size: usize,
        degree: u32,
        coeffs: impl IntoIterator<Item = (MultiIndex, SymMatrixQ)>,
    ) -> Result<Self> {
        let form = MatrixForm::zero(n_vars, size, degree);
        form.validate_header()?;
        let mut map: BTreeMap<MultiIndex, SymMatrixQ> = BTreeMap::new();
        for (alpha, p) in coeffs {
            form.validate_entry(&alpha, &p)?;
            match map.get_mut(&alpha) {
                Some(existing) => *existing += &p,
                None => {
                    map.insert(alpha, p);
                }
            }
        }
        map.retain(|_, p| !p.is_zero());
        Ok(MatrixForm {
            coeffs: map,
            ..form
        })
    }

    /// `P * f`: every entry of `P` multiplied by the scalar form `f`.
    pub fn from_scalar(f: &ScalarForm, p: &SymMatrixQ) -> Result<Self> {
        MatrixForm::new(
            f.n_vars(),
            p.size(),
            f.degree(),
            f.terms().map(|(alpha, c)| (alpha.clone(), p.scale(c))),
        )
    }

    /// Builds a matrix form from a symmetric table of scalar forms.
    /// Only the upper triangle is read.
    pub fn from_entries(entries: &[Vec<ScalarForm>]) -> Result<Self> {
        let size = entries.len();
        if size == 0 {
            return Err(Error::EmptyMatrix);
        }
        let n_vars = entries[0][0].n_vars();
        let degree = entries[0][0].degree();
        let mut by_alpha: BTreeMap<MultiIndex, Vec<(usize, usize, Rational)>> = BTreeMap::new();
        for (i, row) in entries.iter().enumerate() {
            if row.len() != size {
                return Err(Error::DimensionMismatch {
                    expected: size,
                    found: row.len(),
                });
            }
            for (j, f) in row.iter().enumerate() {
                if f.n_vars() != n_vars {
                    return Err(Error::VariableCountMismatch {
                        left: n_vars,
                        right: f.n_vars(),
                    });
                }
                if f.degree() != degree && !f.is_zero() {
                    let alpha = f.terms().next().map(|(a, _)| a.clone()).unwrap();
                    return Err(Error::MixedDegree {
                        found: f.degree(),
                        alpha,
                        degree,
                    });
                }
                if j < i {
                    if entries[j][i] != *f {
                        return Err(Error::Asymmetric { row: j, col: i });
                    }
                    continue;
                }
                for (alpha, c) in f.terms() {
                    by_alpha
                        .entry(alpha.clone())
                        .or_default()
                        .push((i, j, c.clone()));
                }
            }
        }
        let coeffs = by_alpha.into_iter().map(|(alpha, cells)| {
            let mut upper = vec![vec![Rational::default(); size]; size];
            for (i, j, c) in cells {
                upper[i][j] = c;
            }
            (
                alpha,
                SymMatrixQ::from_upper(size, |i, j| upper[i][j].clone()),
            )
        });
        MatrixForm::new(n_vars, size, degree, coeffs)
    }

    pub fn zero(n_vars: usize, size: usize, degree: u32) -> Self {
        MatrixForm {
            n_vars,
            size,
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    /// Re-checks every structural invariant.
    pub fn validate(&self) -> Result<()> {
        self.validate_header()?;
        for (alpha, p) in &self.coeffs {
            self.validate_entry(alpha, p)?;
        }
        Ok(())
    }

    fn validate_header(&self) -> Result<()> {
        if self.n_vars == 0 {
            return Err(Error::NoVariables);
        }
        if self.size == 0 {
            return Err(Error::EmptyMatrix);
        }
        Ok(())
    }

    fn validate_entry(&self, alpha: &MultiIndex, p: &SymMatrixQ) -> Result<()> {
        if alpha.n_vars() != self.n_vars {
            return Err(Error::DimensionMismatch {
                expected: self.n_vars,
                found: alpha.n_vars(),
            });
        }
        if alpha.degree() != self.degree {
            return Err(Error::MixedDegree {
                alpha: alpha.clone(),
                degree: self.degree,
                found: alpha.degree(),
            });
        }
        if p.size() != self.size {
            return Err(Error::SizeMismatch {
                alpha: alpha.clone(),
                expected: self.size,
                found: p.size(),
            });
        }
        Ok(())
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Stored (nonzero) coefficients in graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &SymMatrixQ)> {
        self.coeffs.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    /// `P_alpha`, the zero matrix when absent.
    pub fn coefficient(&self, alpha: &MultiIndex) -> Result<SymMatrixQ> {
        if alpha.n_vars() != self.n_vars {
            return Err(Error::DimensionMismatch {
                expected: self.n_vars,
                found: alpha.n_vars(),
            });
        }
        if alpha.degree() != self.degree {
            return Err(Error::LengthMismatch {
                alpha: alpha.clone(),
                expected: self.degree,
                found: alpha.degree(),
            });
        }
        Ok(self
            .coeffs
            .get(alpha)
            .cloned()
            .unwrap_or_else(|| SymMatrixQ::zero(self.size)))
    }

    /// Every coefficient over all `|alpha| = d`, absent ones as zero
    /// matrices, in graded-lex order.
    pub fn all_coefficients(&self) -> Vec<(MultiIndex, SymMatrixQ)> {
        MultiIndex::all_of_degree(self.n_vars, self.degree)
            .into_iter()
            .map(|alpha| {
                let p = self
                    .coeffs
                    .get(&alpha)
                    .cloned()
                    .unwrap_or_else(|| SymMatrixQ::zero(self.size));
                (alpha, p)
            })
            .collect()
    }

    /// Entrywise product with `x_1 + ... + x_n`. The coefficient at `beta`
    /// is the sum of `P_{beta - e_i}` over the valid shifts.
    pub fn sigma_mul(&self) -> MatrixForm {
        let n = self.n_vars;
        let mut targets: Vec<MultiIndex> = self
            .coeffs
            .keys()
            .flat_map(|alpha| (0..n).map(move |i| alpha.plus_unit(i)))
            .collect();
        targets.sort();
        targets.dedup();
        let coeffs: BTreeMap<MultiIndex, SymMatrixQ> = targets
            .into_par_iter()
            .filter_map(|beta| {
                let mut acc = SymMatrixQ::zero(self.size);
                for i in 0..n {
                    if let Some(p) = beta.minus_unit(i).and_then(|a| self.coeffs.get(&a)) {
                        acc += p;
                    }
                }
                (!acc.is_zero()).then_some((beta, acc))
            })
            .collect();
        MatrixForm {
            n_vars: n,
            size: self.size,
            degree: self.degree + 1,
            coeffs,
        }
    }

    /// `Sigma^m * B`.
    pub fn sigma_pow_mul(&self, m: u32) -> MatrixForm {
        (0..m).fold(self.clone(), |acc, _| acc.sigma_mul())
    }

    /// `B(x)`, exactly.
    pub fn eval(&self, x: &[Rational]) -> Result<SymMatrixQ> {
        if x.len() != self.n_vars {
            return Err(Error::DimensionMismatch {
                expected: self.n_vars,
                found: x.len(),
            });
        }
        let powers = PowerTable::new(x, self.degree);
        let mut acc = SymMatrixQ::zero(self.size);
        for (alpha, p) in &self.coeffs {
            acc += &p.scale(&powers.monomial(alpha));
        }
        Ok(acc)
    }

    /// The `(i, j)` entry as a scalar form.
    pub fn entry(&self, i: usize, j: usize) -> ScalarForm {
        ScalarForm::new(
            self.n_vars,
            self.degree,
            self.coeffs
                .iter()
                .map(|(a, p)| (a.clone(), p.get(i, j).clone())),
        )
        .expect("coefficients are degree-consistent")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn mi(v: &[u32]) -> MultiIndex {
        MultiIndex::new(v.to_vec())
    }

    fn m(rows: &[&[i64]]) -> SymMatrixQ {
        SymMatrixQ::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| int(v)).collect())
                .collect(),
        )
        .unwrap()
    }

    fn f_times_identity() -> MatrixForm {
        let f = ScalarForm::new(
            2,
            2,
            [
                (mi(&[2, 0]), int(1)),
                (mi(&[1, 1]), int(-1)),
                (mi(&[0, 2]), int(1)),
            ],
        )
        .unwrap();
        MatrixForm::from_scalar(&f, &SymMatrixQ::identity(2)).unwrap()
    }

    fn tridiag_example() -> MatrixForm {
        // [[2x + y, x], [x, x + 2y]]
        MatrixForm::new(
            2,
            2,
            1,
            [
                (mi(&[1, 0]), m(&[&[2, 1], &[1, 1]])),
                (mi(&[0, 1]), m(&[&[1, 0], &[0, 2]])),
            ],
        )
        .unwrap()
    }

    #[test]
    fn validation() {
        let id = MatrixForm::new(2, 2, 0, [(mi(&[0, 0]), SymMatrixQ::identity(2))]).unwrap();
        assert!(id.validate().is_ok());

        let err = MatrixForm::new(
            2,
            1,
            1,
            [(mi(&[1, 0]), m(&[&[1]])), (mi(&[1, 1]), m(&[&[1]]))],
        )
        .unwrap_err();
        assert!(matches!(
            err,
            Error::MixedDegree {
                degree: 1,
                found: 2,
                ..
            }
        ));

        assert_eq!(
            MatrixForm::new(2, 0, 1, []).unwrap_err(),
            Error::EmptyMatrix
        );
        let err = MatrixForm::new(2, 2, 1, [(mi(&[1, 0]), m(&[&[1]]))]).unwrap_err();
        assert!(matches!(err, Error::SizeMismatch { .. }));
    }

    #[test]
    fn from_entries_rejects_asymmetric_table() {
        let x = ScalarForm::new(2, 1, [(mi(&[1, 0]), int(1))]).unwrap();
        let y = ScalarForm::new(2, 1, [(mi(&[0, 1]), int(1))]).unwrap();
        let err = MatrixForm::from_entries(&[vec![x.clone(), x.clone()], vec![y, x]]).unwrap_err();
        assert_eq!(err, Error::Asymmetric { row: 0, col: 1 });
    }

    #[test]
    fn sigma_step_cancels_middle_terms() {
        let s = f_times_identity().sigma_mul();
        assert_eq!(s.degree(), 3);
        let keys: Vec<_> = s.terms().map(|(a, _)| a.clone()).collect();
        assert_eq!(keys, vec![mi(&[3, 0]), mi(&[0, 3])]);
        assert_eq!(s.coefficient(&mi(&[2, 1])).unwrap(), SymMatrixQ::zero(2));
        assert_eq!(
            s.coefficient(&mi(&[3, 0])).unwrap(),
            SymMatrixQ::identity(2)
        );
    }

    #[test]
    fn sigma_step_single_term() {
        let p = m(&[&[1, 2], &[2, 7]]);
        let b = MatrixForm::new(2, 2, 3, [(mi(&[2, 1]), p.clone())]).unwrap();
        let s = b.sigma_mul();
        let terms: Vec<_> = s.terms().map(|(a, q)| (a.clone(), q.clone())).collect();
        assert_eq!(terms, vec![(mi(&[3, 1]), p.clone()), (mi(&[2, 2]), p)]);
        assert!(MatrixForm::zero(2, 2, 1).sigma_mul().is_zero());
    }

    #[test]
    fn coefficient_lookup() {
        let b = MatrixForm::from_scalar(&ScalarForm::sigma(2), &SymMatrixQ::identity(2)).unwrap();
        assert_eq!(
            b.coefficient(&mi(&[1, 0])).unwrap(),
            SymMatrixQ::identity(2)
        );
        assert!(matches!(
            b.coefficient(&mi(&[0, 2])),
            Err(Error::LengthMismatch {
                expected: 1,
                found: 2,
                ..
            })
        ));
    }

    #[test]
    fn evaluation() {
        let id = MatrixForm::new(2, 2, 0, [(mi(&[0, 0]), SymMatrixQ::identity(2))]).unwrap();
        assert_eq!(
            id.eval(&[ratio(3, 7), int(5)]).unwrap(),
            SymMatrixQ::identity(2)
        );
        assert_eq!(
            tridiag_example().eval(&[int(1), int(0)]).unwrap(),
            m(&[&[2, 1], &[1, 1]])
        );
        assert_eq!(
            f_times_identity()
                .eval(&[ratio(1, 2), ratio(1, 2)])
                .unwrap(),
            SymMatrixQ::scalar(2, ratio(1, 4))
        );
        assert!(tridiag_example().eval(&[int(1)]).is_err());
    }

    #[test]
    fn entry_roundtrip() {
        let b = tridiag_example();
        let table: Vec<Vec<ScalarForm>> = (0..2)
            .map(|i| (0..2).map(|j| b.entry(i, j)).collect())
            .collect();
        assert_eq!(MatrixForm::from_entries(&table).unwrap(), b);
    }
}
