//! Factored rational generating functions `numerator / prod_j (1 - q^{e_j})`
//! and their exact power-series expansion.

use num_bigint::BigInt;

use super::laurent::LaurentPoly;
use crate::error::Result;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoredGF {
    pub numerator: LaurentPoly,
    /// Multiset {e_1, ..., e_m}, kept sorted; each e_j >= 1.
    pub denom_exponents: Vec<i64>,
}

impl FactoredGF {
    pub fn new(numerator: LaurentPoly, mut denom_exponents: Vec<i64>) -> Self {
        assert!(
            denom_exponents.iter().all(|&e| e >= 1),
            "denominator exponents must be positive"
        );
        denom_exponents.sort_unstable();
        Self { numerator, denom_exponents }
    }

    /// Coefficients of q^0 .. q^m of the formal power series.
    ///
    /// The numerator must have nonnegative minimal exponent; Laurent
    /// numerators are the caller's responsibility to normalize first.
    pub fn series(&self, m: usize) -> Result<Vec<BigInt>> {
        let mut coeffs = self.numerator.dense(m)?;
        // 1/(1 - q^e) as the cumulative recurrence c_i += c_{i-e}.
        for &e in &self.denom_exponents {
            let e = e as usize;
            for i in e..=m {
                let prev = coeffs[i - e].clone();
                coeffs[i] += prev;
            }
        }
        Ok(coeffs)
    }
}
