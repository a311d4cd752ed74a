//! Constraint vectors `a` defining the symmetric system
//! `sum_i a_i lambda_{pi(i)} >= 0` for all permutations `pi`.
//!
//! By symmetry the vector is stored sorted ascending; prefix sums and the
//! total are precomputed since both theorems are phrased in terms of them.

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstraintVector {
    a: Vec<i64>,
    prefix: Vec<i64>,
    s: i64,
}

impl ConstraintVector {
    /// Sort and compute prefix sums; no admissibility check.
    pub fn new(raw: &[i64]) -> Result<Self> {
        if raw.is_empty() {
            return Err(Error::EmptyVector);
        }
        let mut a = raw.to_vec();
        a.sort_unstable();
        let mut prefix = Vec::with_capacity(a.len());
        let mut acc = 0i64;
        for &x in &a {
            acc += x;
            prefix.push(acc);
        }
        Ok(Self { a, s: acc, prefix })
    }

    pub fn n(&self) -> usize {
        self.a.len()
    }

    pub fn a(&self) -> &[i64] {
        &self.a
    }

    /// `a_1 + ... + a_j` for 1 <= j <= n.
    pub fn prefix(&self, j: usize) -> i64 {
        self.prefix[j - 1]
    }

    pub fn sum(&self) -> i64 {
        self.s
    }

    /// Theorem-2 admissibility: all intermediate prefix sums nonpositive.
    pub fn prefixes_nonpositive(&self) -> bool {
        (1..self.n()).all(|j| self.prefix(j) <= 0)
    }
}

/// Accept exactly the vectors with total sum 1 (sum-one engine inputs).
pub fn validate_sum_one(raw: &[i64]) -> Result<ConstraintVector> {
    let cv = ConstraintVector::new(raw)?;
    if cv.sum() != 1 {
        return Err(Error::SumNotOne { s: cv.sum() });
    }
    // Sorted with s = 1 forces every intermediate prefix sum <= 0.
    assert!(cv.prefixes_nonpositive());
    Ok(cv)
}

/// Accept vectors with s >= 1 and nonpositive intermediate prefix sums
/// (general engine inputs).
pub fn validate_general(raw: &[i64]) -> Result<ConstraintVector> {
    let cv = ConstraintVector::new(raw)?;
    if cv.sum() <= 0 {
        return Err(Error::SumNotPositive { s: cv.sum() });
    }
    for j in 1..cv.n() {
        if cv.prefix(j) > 0 {
            return Err(Error::PositivePrefix { j, prefix: cv.prefix(j) });
        }
    }
    Ok(cv)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sum_one_sorts_and_accepts() {
        let cv = validate_sum_one(&[1, -1, 1]).unwrap();
        assert_eq!(cv.a(), &[-1, 1, 1]);
        assert_eq!(cv.sum(), 1);
        assert_eq!(cv.prefix(1), -1);
        assert_eq!(cv.prefix(2), 0);
    }

    #[test]
    fn sum_one_rejects_other_sums() {
        assert!(matches!(
            validate_sum_one(&[-1, 3]),
            Err(Error::SumNotOne { s: 2 })
        ));
    }

    #[test]
    fn sum_one_single_entry() {
        let cv = validate_sum_one(&[1]).unwrap();
        assert_eq!(cv.n(), 1);
    }

    #[test]
    fn general_accepts_putnam_like() {
        let cv = validate_general(&[-1, 3]).unwrap();
        assert_eq!(cv.sum(), 2);
    }

    #[test]
    fn general_rejects_positive_prefix() {
        assert!(matches!(
            validate_general(&[1, 1]),
            Err(Error::PositivePrefix { j: 1, prefix: 1 })
        ));
    }

    #[test]
    fn general_accepts_example4_vector() {
        let cv = validate_general(&[-2, 1, 2]).unwrap();
        assert_eq!(cv.sum(), 1);
        assert_eq!(cv.prefix(1), -2);
        assert_eq!(cv.prefix(2), -1);
    }

    #[test]
    fn empty_rejected() {
        assert!(matches!(ConstraintVector::new(&[]), Err(Error::EmptyVector)));
    }
}
