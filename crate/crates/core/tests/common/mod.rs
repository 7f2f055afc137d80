//! Independent oracles and random generators shared by the integration tests.
//!
//! Nothing here calls into the elimination, expansion or evaluation code of
//! the library; forms are read back only through `terms()`.

#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use polya_cert::{MatrixForm, MultiIndex, Rational, ScalarForm, SymMatrixQ};

pub type Poly = BTreeMap<Vec<u32>, Rational>;

pub fn q(p: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(d))
}

pub fn mi(v: &[u32]) -> MultiIndex {
    MultiIndex::new(v.to_vec())
}

pub fn poly_of(f: &ScalarForm) -> Poly {
    f.terms()
        .map(|(a, c)| (a.exponents().to_vec(), c.clone()))
        .collect()
}

/// Schoolbook product of two sparse polynomials.
pub fn naive_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *out.entry(e).or_insert_with(Rational::zero) += ca * cb;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

pub fn sigma_poly(n: usize) -> Poly {
    (0..n)
        .map(|i| {
            let mut e = vec![0; n];
            e[i] = 1;
            (e, Rational::one())
        })
        .collect()
}

pub fn naive_sigma_pow(n: usize, f: &Poly, m: u32) -> Poly {
    let s = sigma_poly(n);
    (0..m).fold(f.clone(), |acc, _| naive_mul(&acc, &s))
}

/// Every exponent vector of length `n` summing to `d`, starting at `x1^d`
/// and moving weight towards later variables.
pub fn exponents_of_degree(n: usize, d: u32) -> Vec<Vec<u32>> {
    if n == 1 {
        return vec![vec![d]];
    }
    let mut out = Vec::new();
    for first in (0..=d).rev() {
        for mut rest in exponents_of_degree(n - 1, d - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Exact determinant by Gaussian elimination over the rationals.
pub fn det(mut a: Vec<Vec<Rational>>) -> Rational {
    let n = a.len();
    let mut sign = Rational::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Rational::zero();
        };
        if p != col {
            a.swap(p, col);
            sign = -sign;
        }
        for r in col + 1..n {
            let f = &a[r][col] / &a[col][col];
            for c in col..n {
                let t = &f * &a[col][c];
                a[r][c] -= t;
            }
        }
    }
    (0..n).fold(sign, |acc, i| acc * &a[i][i])
}

pub fn rows_of(m: &SymMatrixQ) -> Vec<Vec<Rational>> {
    m.rows().map(|r| r.to_vec()).collect()
}

/// Leading principal minors computed one determinant at a time.
pub fn leading_minors(a: &[Vec<Rational>]) -> Vec<Rational> {
    (1..=a.len())
        .map(|k| det(a[..k].iter().map(|r| r[..k].to_vec()).collect()))
        .collect()
}

pub fn sylvester_pd(a: &[Vec<Rational>]) -> bool {
    leading_minors(a).iter().all(|m| m.is_positive())
}

/// PSD iff every principal minor is nonnegative.
pub fn principal_minors_psd(a: &[Vec<Rational>]) -> bool {
    let n = a.len();
    (1u32..(1 << n)).all(|mask| {
        let idx: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        let sub = idx
            .iter()
            .map(|&i| idx.iter().map(|&j| a[i][j].clone()).collect())
            .collect();
        !det(sub).is_negative()
    })
}

/// `B(x)` summed straight from the stored terms.
pub fn eval_terms(b: &MatrixForm, x: &[Rational]) -> Vec<Vec<Rational>> {
    let r = b.size();
    let mut out = vec![vec![Rational::zero(); r]; r];
    for (alpha, p) in b.terms() {
        let mono = alpha
            .exponents()
            .iter()
            .zip(x)
            .fold(Rational::one(), |acc, (&e, xi)| {
                acc * num_traits::pow(xi.clone(), e as usize)
            });
        for i in 0..r {
            for j in 0..r {
                out[i][j] += &mono * p.get(i, j);
            }
        }
    }
    out
}

pub fn quad(a: &[Vec<Rational>], v: &[Rational]) -> Rational {
    let mut acc = Rational::zero();
    for i in 0..v.len() {
        for j in 0..v.len() {
            acc += &v[i] * &a[i][j] * &v[j];
        }
    }
    acc
}

pub fn random_rational<R: Rng>(rng: &mut R, bound: i64, max_den: i64) -> Rational {
    let d = rng.gen_range(1..=max_den);
    q(rng.gen_range(-bound * d..=bound * d), d)
}

pub fn random_sym<R: Rng>(rng: &mut R, r: usize, bound: i64, max_den: i64) -> SymMatrixQ {
    SymMatrixQ::from_upper(r, |_, _| random_rational(rng, bound, max_den))
}

/// `sum_k u_k u_k^T + delta I` with integer `u_k`: positive definite.
pub fn random_pd<R: Rng>(rng: &mut R, r: usize) -> SymMatrixQ {
    let mut acc = SymMatrixQ::scalar(r, q(rng.gen_range(1..=4), 4));
    for _ in 0..rng.gen_range(0..=r) {
        let u: Vec<Rational> = (0..r).map(|_| q(rng.gen_range(-3..=3), 1)).collect();
        acc += &SymMatrixQ::outer(&u);
    }
    acc
}

pub fn random_form<R: Rng>(
    rng: &mut R,
    n: usize,
    r: usize,
    d: u32,
    mut coeff: impl FnMut(&mut R) -> SymMatrixQ,
) -> MatrixForm {
    let terms: Vec<_> = exponents_of_degree(n, d)
        .into_iter()
        .map(|e| (MultiIndex::new(e), coeff(rng)))
        .collect();
    MatrixForm::new(n, r, d, terms).expect("well-formed random form")
}

/// A rational point of the simplex with denominator at most `n * scale`.
pub fn random_simplex_point<R: Rng>(rng: &mut R, n: usize, scale: i64) -> Vec<Rational> {
    loop {
        let w: Vec<i64> = (0..n)
            .map(|_| {
                if rng.gen_bool(0.15) {
                    0
                } else {
                    rng.gen_range(0..=scale)
                }
            })
            .collect();
        let total: i64 = w.iter().sum();
        if total > 0 {
            return w.into_iter().map(|wi| q(wi, total)).collect();
        }
    }
}

pub fn random_direction<R: Rng>(rng: &mut R, r: usize) -> Vec<Rational> {
    loop {
        let v: Vec<Rational> = (0..r).map(|_| random_rational(rng, 4, 3)).collect();
        if v.iter().any(|c| !c.is_zero()) {
            return v;
        }
    }
}
