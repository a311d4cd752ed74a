//! Multivariate generating functions as sums of terms
//! `numerator / prod_j (1 - z^{v_j})`, kept per permutation and never
//! combined over a common denominator.
//!
//! Closed-form comparisons happen at the level of truncated multivariate
//! series, indexed by exponent vectors up to a total-degree bound.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use super::gf::FactoredGF;
use super::laurent::LaurentPoly;
use crate::error::Result;

/// Exponent vector of a monomial z_1^{b_1} ... z_n^{b_n}; entries >= 0.
pub type ExpVector = Vec<i64>;

/// Truncated multivariate power series: monomial exponent vector -> coefficient.
pub type MultiSeries = BTreeMap<ExpVector, BigInt>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GfTerm {
    /// Numerator as a sum of monomials with integer coefficients.
    pub numerator: Vec<(BigInt, ExpVector)>,
    /// Each vector v stands for a denominator factor (1 - z^v).
    pub denominators: Vec<ExpVector>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiGF {
    pub n: usize,
    pub terms: Vec<GfTerm>,
}

fn total(v: &[i64]) -> i64 {
    v.iter().sum()
}

impl MultiGF {
    /// Expand to all monomials of total degree <= `degree`.
    pub fn series(&self, degree: i64) -> MultiSeries {
        let mut out = MultiSeries::new();
        for term in &self.terms {
            debug_assert_eq!(term.denominators.len(), self.n);
            let mut acc = MultiSeries::new();
            for (c, mono) in &term.numerator {
                if total(mono) <= degree {
                    let entry = acc.entry(mono.clone()).or_insert_with(BigInt::zero);
                    *entry += c;
                }
            }
            for v in &term.denominators {
                let step = total(v);
                assert!(step >= 1, "denominator vector with zero total degree");
                // Multiply by the geometric series sum_k z^{kv}.
                let mut next = MultiSeries::new();
                for (mono, c) in &acc {
                    let mut shifted = mono.clone();
                    let mut deg = total(mono);
                    while deg <= degree {
                        let entry = next.entry(shifted.clone()).or_insert_with(BigInt::zero);
                        *entry += c;
                        for (s, d) in shifted.iter_mut().zip(v) {
                            *s += d;
                        }
                        deg += step;
                    }
                }
                acc = next;
            }
            for (mono, c) in acc {
                if c.is_zero() {
                    continue;
                }
                let entry = out.entry(mono).or_insert_with(BigInt::zero);
                *entry += c;
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    /// Coefficients of q^0 .. q^m after the specialization z_1 = ... = z_n = q.
    pub fn q_series(&self, m: usize) -> Result<Vec<BigInt>> {
        let mut out = vec![BigInt::zero(); m + 1];
        for term in &self.terms {
            let mut num = LaurentPoly::zero();
            for (c, mono) in &term.numerator {
                num.add_term(total(mono), c);
            }
            let denoms = term.denominators.iter().map(|v| total(v)).collect();
            let part = FactoredGF::new(num, denoms).series(m)?;
            for (o, p) in out.iter_mut().zip(part) {
                *o += p;
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_geometric_term() {
        // 1 / (1 - z1) in one variable
        let gf = MultiGF {
            n: 1,
            terms: vec![GfTerm {
                numerator: vec![(BigInt::from(1), vec![0])],
                denominators: vec![vec![1]],
            }],
        };
        let s = gf.series(3);
        assert_eq!(s.len(), 4);
        for k in 0..=3 {
            assert_eq!(s[&vec![k]], BigInt::from(1));
        }
        let qs = gf.q_series(3).unwrap();
        assert!(qs.iter().all(|c| *c == BigInt::from(1)));
    }

    #[test]
    fn putnam_closed_form_series() {
        // (1 + xy + x^2 y^2) / ((1 - x y^2)(1 - x^2 y))
        let gf = MultiGF {
            n: 2,
            terms: vec![GfTerm {
                numerator: vec![
                    (BigInt::from(1), vec![0, 0]),
                    (BigInt::from(1), vec![1, 1]),
                    (BigInt::from(1), vec![2, 2]),
                ],
                denominators: vec![vec![1, 2], vec![2, 1]],
            }],
        };
        let s = gf.series(4);
        // weight-0, (1,1), (1,2), (2,1), (2,2) all admissible with coefficient 1
        assert_eq!(s[&vec![0, 0]], BigInt::from(1));
        assert_eq!(s[&vec![1, 1]], BigInt::from(1));
        assert_eq!(s[&vec![1, 2]], BigInt::from(1));
        assert_eq!(s[&vec![2, 1]], BigInt::from(1));
        assert_eq!(s[&vec![2, 2]], BigInt::from(1));
        // (1,0) violates 2*lambda_2 >= lambda_1
        assert!(!s.contains_key(&vec![1, 0]));
    }
}
