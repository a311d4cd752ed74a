//! Generating functions for constraint vectors with total sum 1.
//!
//! The inverse B of the constraint matrix has nonnegative integer entries,
//! so each descent class is a simplicial cone generated by the columns of B
//! and the whole generating function is a single sum over permutations.

use num_bigint::BigInt;

use crate::algebra::{ExpVector, FactoredGF, GfTerm, LaurentPoly, MultiGF};
use crate::constraint::ConstraintVector;
use crate::error::{Error, Result};
use crate::permstat::{algorithm_g, Permutation};

pub const DEFAULT_MULTI_GUARD: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorMatrixT1 {
    /// Column-generator matrix, b[i][j] with 0-based indices.
    b: Vec<Vec<i64>>,
}

impl GeneratorMatrixT1 {
    pub fn entries(&self) -> &[Vec<i64>] {
        &self.b
    }

    /// Column j as a vector (1-based column index).
    pub fn column(&self, j: usize) -> Vec<i64> {
        (0..self.b.len()).map(|i| self.b[i][j - 1]).collect()
    }
}

/// Rows 1..n-1: order constraints lambda_j >= lambda_{j+1}; row n: a.
fn constraint_matrix(a: &ConstraintVector) -> Vec<Vec<i64>> {
    let n = a.n();
    let mut c = vec![vec![0i64; n]; n];
    for j in 0..n - 1 {
        c[j][j] = 1;
        c[j][j + 1] = -1;
    }
    c[n - 1].copy_from_slice(a.a());
    c
}

/// Inverse of the constraint matrix:
/// b_{i,j} = 1 if j = n; -prefix_j if i > j; 1 - prefix_j if i <= j < n.
pub fn generator_matrix_t1(a: &ConstraintVector) -> Result<GeneratorMatrixT1> {
    if a.sum() != 1 {
        return Err(Error::SumNotOne { s: a.sum() });
    }
    let n = a.n();
    let mut b = vec![vec![0i64; n]; n];
    for i in 1..=n {
        for j in 1..=n {
            b[i - 1][j - 1] = if j == n {
                1
            } else if i > j {
                -a.prefix(j)
            } else {
                1 - a.prefix(j)
            };
            assert!(b[i - 1][j - 1] >= 0);
        }
    }
    // C * B = I
    let c = constraint_matrix(a);
    for i in 0..n {
        for j in 0..n {
            let dot: i64 = (0..n).map(|k| c[i][k] * b[k][j]).sum();
            assert_eq!(dot, i64::from(i == j), "C * B != I at ({i},{j})");
        }
    }
    Ok(GeneratorMatrixT1 { b })
}

/// Denominator exponents of F(q): `n` together with `j - n * prefix_j`
/// for 1 <= j <= n-1.
pub fn denominator_exponents_t1(a: &ConstraintVector) -> Vec<i64> {
    let n = a.n() as i64;
    let mut out = vec![n];
    for j in 1..a.n() {
        out.push(j as i64 - n * a.prefix(j));
    }
    out
}

/// `F(q)` via Algorithm G with weights `u_j = q^{j - n * prefix_j}`.
pub fn gf_q_t1(a: &ConstraintVector) -> Result<FactoredGF> {
    if a.sum() != 1 {
        return Err(Error::SumNotOne { s: a.sum() });
    }
    let n = a.n() as i64;
    let u: Vec<LaurentPoly> = (1..a.n())
        .map(|j| LaurentPoly::q_pow(j as i64 - n * a.prefix(j)))
        .collect();
    let numerator = algorithm_g(a.n(), &u);
    Ok(FactoredGF::new(numerator, denominator_exponents_t1(a)))
}

/// Exponent vector of `z_pi^B_j`: coordinate i of the column lands on
/// variable pi(i).
fn permuted_exponents(pi: &Permutation, col: &[i64]) -> ExpVector {
    let mut v = vec![0i64; col.len()];
    for (i, &b) in col.iter().enumerate() {
        v[pi.one_line()[i] - 1] += b;
    }
    v
}

/// The multivariate `F(z_1, ..., z_n)` as one term per permutation.
pub fn gf_multi_t1(a: &ConstraintVector, n_guard: usize) -> Result<MultiGF> {
    if a.sum() != 1 {
        return Err(Error::SumNotOne { s: a.sum() });
    }
    if a.n() > n_guard {
        return Err(Error::GuardExceeded { n: a.n(), guard: n_guard });
    }
    let n = a.n();
    let b = generator_matrix_t1(a)?;
    let columns: Vec<Vec<i64>> = (1..=n).map(|j| b.column(j)).collect();
    let mut terms = Vec::new();
    for pi in Permutation::all(n) {
        let mut num = vec![0i64; n];
        for j in pi.descent_set() {
            for (v, w) in num.iter_mut().zip(permuted_exponents(&pi, &columns[j - 1])) {
                *v += w;
            }
        }
        let denominators = columns
            .iter()
            .map(|col| permuted_exponents(&pi, col))
            .collect();
        terms.push(GfTerm {
            numerator: vec![(BigInt::from(1), num)],
            denominators,
        });
    }
    Ok(MultiGF { n, terms })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constraint::validate_sum_one;

    #[test]
    fn matrix_triangle() {
        let cv = validate_sum_one(&[-1, 1, 1]).unwrap();
        let b = generator_matrix_t1(&cv).unwrap();
        assert_eq!(
            b.entries(),
            &[vec![2, 1, 1], vec![1, 1, 1], vec![1, 0, 1]]
        );
    }

    #[test]
    fn matrix_putnam() {
        let cv = validate_sum_one(&[-1, 2]).unwrap();
        let b = generator_matrix_t1(&cv).unwrap();
        assert_eq!(b.entries(), &[vec![2, 1], vec![1, 1]]);
    }

    #[test]
    fn matrix_dimension_one() {
        let cv = validate_sum_one(&[1]).unwrap();
        let b = generator_matrix_t1(&cv).unwrap();
        assert_eq!(b.entries(), &[vec![1]]);
    }

    #[test]
    fn gf_q_triangle() {
        let cv = validate_sum_one(&[-1, 1, 1]).unwrap();
        let gf = gf_q_t1(&cv).unwrap();
        assert_eq!(gf.denom_exponents, vec![2, 3, 4]);
        let mut num = LaurentPoly::one();
        num.add_term(2, &BigInt::from(2));
        num.add_term(4, &BigInt::from(2));
        num.add_term(6, &BigInt::from(1));
        assert_eq!(gf.numerator, num);
    }

    #[test]
    fn gf_q_putnam() {
        let cv = validate_sum_one(&[-1, 2]).unwrap();
        let gf = gf_q_t1(&cv).unwrap();
        assert_eq!(gf.denom_exponents, vec![2, 3]);
        let mut num = LaurentPoly::one();
        num.add_term(3, &BigInt::from(1));
        assert_eq!(gf.numerator, num);
    }

    #[test]
    fn gf_q_dimension_one() {
        let cv = validate_sum_one(&[1]).unwrap();
        let gf = gf_q_t1(&cv).unwrap();
        assert_eq!(gf.denom_exponents, vec![1]);
        assert!(gf.numerator.is_one());
    }

    #[test]
    fn gf_multi_dimension_one() {
        let cv = validate_sum_one(&[1]).unwrap();
        let gf = gf_multi_t1(&cv, DEFAULT_MULTI_GUARD).unwrap();
        assert_eq!(gf.terms.len(), 1);
        assert_eq!(gf.terms[0].denominators, vec![vec![1]]);
    }

    #[test]
    fn gf_multi_guard() {
        let cv = validate_sum_one(&[-1, 1, 1]).unwrap();
        assert!(matches!(
            gf_multi_t1(&cv, 2),
            Err(Error::GuardExceeded { n: 3, guard: 2 })
        ));
    }
}
