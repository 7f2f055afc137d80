use std::ops::{Add, AddAssign};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Symmetric `r x r` matrix of exact rationals, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymMatrixQ {
    size: usize,
    entries: Vec<Rational>,
}

impl SymMatrixQ {
    /// Builds a matrix from rows, rejecting ragged or asymmetric input.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let size = rows.len();
        if size == 0 {
            return Err(Error::EmptyMatrix);
        }
        let mut entries = Vec::with_capacity(size * size);
        for row in rows {
            if row.len() != size {
                return Err(Error::DimensionMismatch {
                    expected: size,
                    found: row.len(),
                });
            }
            entries.extend(row);
        }
        let m = SymMatrixQ { size, entries };
        m.check_symmetric()?;
        Ok(m)
    }

    /// Builds a matrix from its upper triangle; `f(i, j)` is called for
    /// `i <= j` only.
    pub fn from_upper(size: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut entries = vec![Rational::zero(); size * size];
        for i in 0..size {
            for j in i..size {
                let v = f(i, j);
                entries[j * size + i] = v.clone();
                entries[i * size + j] = v;
            }
        }
        SymMatrixQ { size, entries }
    }

    pub fn zero(size: usize) -> Self {
        SymMatrixQ {
            size,
            entries: vec![Rational::zero(); size * size],
        }
    }

    pub fn identity(size: usize) -> Self {
        Self::scalar(size, Rational::one())
    }

    pub fn scalar(size: usize, value: Rational) -> Self {
        Self::from_upper(size, |i, j| {
            if i == j {
                value.clone()
            } else {
                Rational::zero()
            }
        })
    }

    /// The rank-one matrix `v v^T`.
    pub fn outer(v: &[Rational]) -> Self {
        Self::from_upper(v.len(), |i, j| &v[i] * &v[j])
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.size + j]
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.size..(i + 1) * self.size]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Rational]> {
        self.entries.chunks(self.size)
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        SymMatrixQ {
            size: self.size,
            entries: self.entries.iter().map(|e| e * factor).collect(),
        }
    }

    /// `self + shift * I`.
    pub fn shift_diagonal(&self, shift: &Rational) -> Self {
        let mut out = self.clone();
        for i in 0..self.size {
            out.entries[i * self.size + i] += shift;
        }
        out
    }

    pub fn to_nalgebra(&self) -> nalgebra::DMatrix<f64> {
        nalgebra::DMatrix::from_fn(self.size, self.size, |i, j| {
            crate::rational::to_f64(self.get(i, j))
        })
    }

    fn check_symmetric(&self) -> Result<()> {
        for i in 0..self.size {
            for j in i + 1..self.size {
                if self.get(i, j) != self.get(j, i) {
                    return Err(Error::Asymmetric { row: i, col: j });
                }
            }
        }
        Ok(())
    }
}

impl AddAssign<&SymMatrixQ> for SymMatrixQ {
    fn add_assign(&mut self, rhs: &SymMatrixQ) {
        assert_eq!(self.size, rhs.size, "matrix sizes differ");
        for (a, b) in self.entries.iter_mut().zip(&rhs.entries) {
            *a += b;
        }
    }
}

impl Add for &SymMatrixQ {
    type Output = SymMatrixQ;

    fn add(self, rhs: &SymMatrixQ) -> SymMatrixQ {
        let mut out = self.clone();
        out += rhs;
        out
    }
}
