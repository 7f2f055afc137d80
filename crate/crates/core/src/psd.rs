//! Exact definiteness tests for rational symmetric matrices.
//!
//! Positive definiteness is certified by Sylvester's criterion: the leading
//! principal minors are produced by fraction-free (Bareiss) elimination on
//! the integer matrix obtained by clearing denominators, then rescaled.
//! Semidefiniteness uses the same elimination with diagonal pivoting.
//! Floating eigenvalues are only ever a search heuristic.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix_form::SymMatrixQ;
use crate::rational::{self, Rational};

/// Leading principal minors of a matrix found positive definite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PdWitness {
    pub minors: Vec<Rational>,
}

impl PdWitness {
    /// True iff every minor is strictly positive.
    pub fn all_positive(&self) -> bool {
        self.minors.iter().all(Signed::is_positive)
    }
}

/// Outcome of [`is_pd_exact`].
///
/// `minors` holds the leading principal minors computed so far; elimination
/// stops at the first nonpositive one, whose 0-based position is
/// `first_nonpositive`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PdCheck {
    pub minors: Vec<Rational>,
    pub first_nonpositive: Option<usize>,
}

impl PdCheck {
    pub fn is_definite(&self) -> bool {
        self.first_nonpositive.is_none()
    }

    pub fn into_witness(self) -> Option<PdWitness> {
        self.is_definite().then_some(PdWitness {
            minors: self.minors,
        })
    }
}

/// Scales `a` by the lcm of its denominators; returns the integer matrix
/// (row-major) and the scale.
fn integer_scaled(a: &SymMatrixQ) -> (Vec<Vec<BigInt>>, BigInt) {
    let scale = rational::common_denominator(a.entries());
    let rows = a
        .rows()
        .map(|row| {
            row.iter()
                .map(|v| v.numer() * (&scale / v.denom()))
                .collect()
        })
        .collect();
    (rows, scale)
}

fn exact_div(num: &BigInt, den: &BigInt) -> BigInt {
    let (q, r) = num.div_rem(den);
    debug_assert!(r.is_zero(), "Bareiss division must be exact");
    q
}

/// Exact positive-definiteness decision with its minor witness.
pub fn is_pd_exact(a: &SymMatrixQ) -> PdCheck {
    let r = a.size();
    let (mut m, scale) = integer_scaled(a);
    let mut minors = Vec::with_capacity(r);
    let mut prev = BigInt::one();
    let mut scale_pow = BigInt::one();
    for k in 0..r {
        let pivot = m[k][k].clone();
        scale_pow *= &scale;
        minors.push(Rational::new(pivot.clone(), scale_pow.clone()));
        if !pivot.is_positive() {
            return PdCheck {
                minors,
                first_nonpositive: Some(k),
            };
        }
        for i in k + 1..r {
            for j in k + 1..r {
                let v = &m[i][j] * &pivot - &m[i][k] * &m[k][j];
                m[i][j] = exact_div(&v, &prev);
            }
        }
        prev = pivot;
    }
    PdCheck {
        minors,
        first_nonpositive: None,
    }
}

/// Exact positive-semidefiniteness decision.
pub fn is_psd_exact(a: &SymMatrixQ) -> bool {
    let (mut m, _) = integer_scaled(a);
    let mut active: Vec<usize> = (0..a.size()).collect();
    let mut prev = BigInt::one();
    while !active.is_empty() {
        if active.iter().any(|&i| m[i][i].is_negative()) {
            return false;
        }
        let Some(pos) = active.iter().position(|&i| m[i][i].is_positive()) else {
            // Zero diagonal: PSD only if the whole remaining block vanishes.
            return active
                .iter()
                .all(|&i| active.iter().all(|&j| m[i][j].is_zero()));
        };
        let p = active.remove(pos);
        let pivot = m[p][p].clone();
        for &i in &active {
            for &j in &active {
                let v = &m[i][j] * &pivot - &m[i][p] * &m[p][j];
                m[i][j] = exact_div(&v, &prev);
            }
        }
        prev = pivot;
    }
    true
}

/// Approximate smallest eigenvalue; never used as a certificate.
pub fn min_eig_float(a: &SymMatrixQ) -> f64 {
    let eig = nalgebra::SymmetricEigen::new(a.to_nalgebra());
    eig.eigenvalues
        .iter()
        .copied()
        .fold(f64::INFINITY, f64::min)
}

/// Approximate largest eigenvalue.
pub fn max_eig_float(a: &SymMatrixQ) -> f64 {
    let eig = nalgebra::SymmetricEigen::new(a.to_nalgebra());
    eig.eigenvalues
        .iter()
        .copied()
        .fold(f64::NEG_INFINITY, f64::max)
}

/// `v^T A v`, exactly.
pub fn rayleigh(a: &SymMatrixQ, v: &[Rational]) -> Result<Rational> {
    if v.len() != a.size() {
        return Err(Error::DimensionMismatch {
            expected: a.size(),
            found: v.len(),
        });
    }
    let mut acc = Rational::zero();
    for (i, vi) in v.iter().enumerate() {
        if vi.is_zero() {
            continue;
        }
        let row: Rational = a.row(i).iter().zip(v).map(|(aij, vj)| aij * vj).sum();
        acc += vi * row;
    }
    Ok(acc)
}

/// For a matrix that fails [`is_pd_exact`], an integer direction `v` with
/// `v^T A v <= 0`, together with that value.
///
/// If the first nonpositive leading minor sits at position `k`, the leading
/// `k x k` block is positive definite and `v = (-B^{-1} b, 1, 0, ..., 0)`,
/// with `B` that block and `b` the next column, attains the Schur
/// complement `minor_{k+1} / minor_k`. When that minor is zero, `v` spans the
/// kernel of the leading `(k+1) x (k+1)` block.
pub fn nonpositive_direction(a: &SymMatrixQ) -> Option<(Vec<Rational>, Rational)> {
    let k = is_pd_exact(a).first_nonpositive?;
    let mut v = vec![Rational::zero(); a.size()];
    if k > 0 {
        let block: Vec<Vec<Rational>> = (0..k).map(|i| a.row(i)[..k].to_vec()).collect();
        let rhs: Vec<Rational> = (0..k).map(|i| -a.get(i, k)).collect();
        let y = solve_definite(block, rhs);
        v[..k].clone_from_slice(&y);
    }
    v[k] = Rational::one();

    // Clear denominators to a primitive integer vector.
    let den = rational::common_denominator(v.iter());
    let mut ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&den / x.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in &mut ints {
            *x = &*x / &g;
        }
    }
    let v: Vec<Rational> = ints.into_iter().map(Rational::from_integer).collect();
    let value = rayleigh(a, &v).expect("direction has matching dimension");
    debug_assert!(!value.is_positive());
    Some((v, value))
}

/// Gaussian elimination without pivoting; valid for positive definite
/// systems, whose pivots are all positive.
fn solve_definite(mut m: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Vec<Rational> {
    let n = b.len();
    for k in 0..n {
        let pivot = m[k][k].clone();
        for i in k + 1..n {
            if m[i][k].is_zero() {
                continue;
            }
            let factor = &m[i][k] / &pivot;
            let (upper, lower) = m.split_at_mut(i);
            for (dst, src) in lower[0][k..].iter_mut().zip(&upper[k][k..]) {
                *dst -= &factor * src;
            }
            let delta = &factor * &b[k];
            b[i] -= delta;
        }
    }
    let mut x = vec![Rational::zero(); n];
    for i in (0..n).rev() {
        let tail: Rational = (i + 1..n).map(|j| &m[i][j] * &x[j]).sum();
        x[i] = (&b[i] - tail) / &m[i][i];
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn m(rows: &[&[i64]]) -> SymMatrixQ {
        SymMatrixQ::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| int(v)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn pd_examples() {
        let c = is_pd_exact(&m(&[&[2, 1], &[1, 1]]));
        assert!(c.is_definite());
        assert_eq!(c.minors, vec![int(2), int(1)]);

        let c = is_pd_exact(&m(&[&[1, 2], &[2, 1]]));
        assert_eq!(c.first_nonpositive, Some(1));
        assert_eq!(c.minors[1], int(-3));

        let c = is_pd_exact(&m(&[&[0]]));
        assert_eq!(c.first_nonpositive, Some(0));
        assert_eq!(c.minors, vec![int(0)]);
    }

    #[test]
    fn pd_minors_of_rational_matrix() {
        let a = SymMatrixQ::from_rows(vec![
            vec![ratio(1, 2), ratio(1, 3)],
            vec![ratio(1, 3), ratio(1, 4)],
        ])
        .unwrap();
        let c = is_pd_exact(&a);
        assert!(c.is_definite());
        // det = 1/8 - 1/9 = 1/72
        assert_eq!(c.minors, vec![ratio(1, 2), ratio(1, 72)]);
    }

    #[test]
    fn psd_examples() {
        assert!(is_psd_exact(&m(&[&[1, 1], &[1, 1]])));
        assert!(!is_psd_exact(&m(&[&[0, 1], &[1, 0]])));
        assert!(is_psd_exact(&m(&[&[0, 0], &[0, 0]])));
        assert!(!is_psd_exact(&m(&[&[1, 0], &[0, -1]])));
        // Zero leading diagonal with a PSD trailing block.
        assert!(is_psd_exact(&m(&[&[0, 0, 0], &[0, 2, 1], &[0, 1, 1]])));
        // Rank-deficient Schur complement with a nonzero off-diagonal.
        assert!(!is_psd_exact(&m(&[&[1, 1, 0], &[1, 1, 1], &[0, 1, 0]])));
    }

    #[test]
    fn float_eigenvalues() {
        assert!((min_eig_float(&SymMatrixQ::identity(3)) - 1.0).abs() < 1e-12);
        assert!((min_eig_float(&m(&[&[0, 1], &[1, 0]])) + 1.0).abs() < 1e-12);
        let expected = 2.0 - 2f64.sqrt();
        assert!((min_eig_float(&m(&[&[3, 1], &[1, 1]])) - expected).abs() < 1e-9);
    }

    #[test]
    fn rayleigh_examples() {
        assert_eq!(
            rayleigh(&SymMatrixQ::identity(2), &[int(1), int(0)]).unwrap(),
            int(1)
        );
        assert_eq!(
            rayleigh(&m(&[&[0, 1], &[1, 0]]), &[int(1), int(1)]).unwrap(),
            int(2)
        );
        assert_eq!(
            rayleigh(&m(&[&[2, 1], &[1, 1]]), &[int(1), int(-1)]).unwrap(),
            int(1)
        );
        assert!(matches!(
            rayleigh(&SymMatrixQ::identity(2), &[int(1)]),
            Err(Error::DimensionMismatch {
                expected: 2,
                found: 1
            })
        ));
    }

    #[test]
    fn refuting_directions() {
        let (v, value) = nonpositive_direction(&m(&[&[1, 0], &[0, 0]])).unwrap();
        assert_eq!(v, vec![int(0), int(1)]);
        assert_eq!(value, int(0));

        let a = m(&[&[1, 2], &[2, 1]]);
        let (v, value) = nonpositive_direction(&a).unwrap();
        assert_eq!(v, vec![int(-2), int(1)]);
        assert_eq!(value, int(-3));

        let (v, value) = nonpositive_direction(&m(&[&[-1, 0], &[0, 5]])).unwrap();
        assert_eq!(v, vec![int(1), int(0)]);
        assert_eq!(value, int(-1));

        assert!(nonpositive_direction(&SymMatrixQ::identity(3)).is_none());
    }

    #[test]
    fn refuting_direction_hits_schur_complement() {
        // minors 4, 4*3 - 1 = 11, det = -...; third minor nonpositive.
        let a = m(&[&[4, 1, 2], &[1, 3, 0], &[2, 0, 1]]);
        let check = is_pd_exact(&a);
        assert_eq!(check.first_nonpositive, Some(2));
        let (v, value) = nonpositive_direction(&a).unwrap();
        assert!(value <= int(0));
        assert_eq!(rayleigh(&a, &v).unwrap(), value);
    }
}
