//! Brute-force ground truth: enumerate compositions by weight and test the
//! symmetric constraints directly. Works on arbitrary integer vectors,
//! sorted or not, including those both engines reject.

use itertools::Itertools;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckMode {
    /// Rearrangement test: `a` ascending paired with `lambda` descending
    /// minimizes the form, so one dot product decides all n! constraints.
    Fast,
    /// Exhaustive test over all n! permutations.
    Full,
}

/// Does `lambda` satisfy `sum_i a_i lambda_{pi(i)} >= 0` for every `pi`?
pub fn is_valid(lambda: &[i64], a: &[i64], mode: CheckMode) -> Result<bool> {
    if lambda.len() != a.len() {
        return Err(Error::DimensionMismatch {
            lambda_len: lambda.len(),
            a_len: a.len(),
        });
    }
    debug_assert!(lambda.iter().all(|&x| x >= 0));
    match mode {
        CheckMode::Fast => {
            let mut a_sorted = a.to_vec();
            a_sorted.sort_unstable();
            let mut lam_sorted = lambda.to_vec();
            lam_sorted.sort_unstable_by(|x, y| y.cmp(x));
            let dot: i64 = a_sorted.iter().zip(&lam_sorted).map(|(&x, &y)| x * y).sum();
            Ok(dot >= 0)
        }
        CheckMode::Full => {
            for perm in (0..a.len()).permutations(a.len()) {
                let dot: i64 = a.iter().zip(&perm).map(|(&x, &i)| x * lambda[i]).sum();
                if dot < 0 {
                    return Ok(false);
                }
            }
            Ok(true)
        }
    }
}

/// Visit all compositions of `weight` into `n` nonnegative parts in
/// lexicographic order.
fn for_each_composition(n: usize, weight: i64, f: &mut impl FnMut(&[i64])) {
    let mut parts = vec![0i64; n];
    fn rec(parts: &mut Vec<i64>, pos: usize, left: i64, f: &mut impl FnMut(&[i64])) {
        if pos + 1 == parts.len() {
            parts[pos] = left;
            f(parts);
            return;
        }
        for v in 0..=left {
            parts[pos] = v;
            rec(parts, pos + 1, left - v, f);
        }
    }
    rec(&mut parts, 0, weight, f);
}

/// Entry M counts the valid compositions of weight M, 0 <= M <= m_max.
pub fn count_by_weight(a: &[i64], m_max: usize) -> Result<Vec<u64>> {
    let mut out = Vec::with_capacity(m_max + 1);
    for m in 0..=m_max as i64 {
        let mut count = 0u64;
        let mut err = None;
        for_each_composition(a.len(), m, &mut |lam| {
            match is_valid(lam, a, CheckMode::Fast) {
                Ok(true) => count += 1,
                Ok(false) => {}
                Err(e) => err = Some(e),
            }
        });
        if let Some(e) = err {
            return Err(e);
        }
        out.push(count);
    }
    Ok(out)
}

/// All valid compositions of weight <= m_max, lexicographic within each weight.
pub fn valid_set(a: &[i64], m_max: usize) -> Result<Vec<Vec<i64>>> {
    let mut out = Vec::new();
    for m in 0..=m_max as i64 {
        for_each_composition(a.len(), m, &mut |lam| {
            if matches!(is_valid(lam, a, CheckMode::Fast), Ok(true)) {
                out.push(lam.to_vec());
            }
        });
    }
    Ok(out)
}
