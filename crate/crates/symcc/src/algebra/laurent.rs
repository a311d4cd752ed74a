//! Sparse Laurent polynomials in `q` with arbitrary-precision integer
//! coefficients.
//!
//! Exponents may be negative; the zero polynomial is the empty term map and
//! no stored coefficient is ever zero.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(0, c)
    }

    /// `c * q^exp`
    pub fn monomial(exp: i64, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Self { terms }
    }

    /// `q^exp`
    pub fn q_pow(exp: i64) -> Self {
        Self::monomial(exp, 1)
    }

    /// `1 - q^e`
    pub fn one_minus_q_pow(e: i64) -> Self {
        &Self::one() - &Self::q_pow(e)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.coeff(0).is_one()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Multiply by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(&e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// Substitute `q -> q^k` (exponent inflation). `k` must be nonzero to
    /// stay invertible; `k = 1` is the identity.
    pub fn inflate(&self, k: i64) -> Self {
        assert!(k != 0, "inflation by 0 collapses exponents");
        Self {
            terms: self.terms.iter().map(|(&e, c)| (e * k, c.clone())).collect(),
        }
    }

    pub fn add_term(&mut self, exp: i64, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    /// Exact division; fails if the remainder is nonzero or a coefficient
    /// quotient is not integral.
    pub fn exact_div(&self, d: &Self) -> Result<Self> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let d_min = d.min_exp().unwrap();
        let d_min_coeff = d.coeff(d_min);
        // Exponent of the highest possible quotient term.
        let q_max = self.max_exp().unwrap() - d.max_exp().unwrap();

        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some(r_min) = rem.min_exp() {
            let q_exp = r_min - d_min;
            let r_coeff = rem.coeff(r_min);
            let (q_coeff, leftover) = num_integer::div_rem(r_coeff.clone(), d_min_coeff.clone());
            if !leftover.is_zero() || q_exp > q_max {
                return Err(Error::NonExactDivision {
                    exp: r_min,
                    coeff: r_coeff.to_string(),
                });
            }
            let term = Self::monomial(q_exp, q_coeff);
            rem = &rem - &(&term * d);
            quot = &quot + &term;
        }
        Ok(quot)
    }

    /// Dense coefficients of q^0 .. q^m; requires min exponent >= 0.
    pub fn dense(&self, m: usize) -> Result<Vec<BigInt>> {
        if let Some(min) = self.min_exp() {
            if min < 0 {
                return Err(Error::NegativeMinExponent { min_exp: min });
            }
        }
        let mut out = vec![BigInt::zero(); m + 1];
        for (e, c) in self.terms() {
            if e <= m as i64 {
                out[e as usize] = c.clone();
            }
        }
        Ok(out)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c);
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, &(-c));
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(e1 + e2, &(c1 * c2));
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            if first {
                first = false;
            } else {
                write!(f, " + ")?;
            }
            match e {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*q")?,
                _ => write!(f, "{c}*q^{e}")?,
            }
        }
        Ok(())
    }
}

/// `[n]_q! = prod_{i=1}^{n} (1 - q^i) / (1 - q)`, computed by exact division.
pub fn q_factorial(n: usize) -> LaurentPoly {
    assert!(n >= 1);
    let one_minus_q = LaurentPoly::one_minus_q_pow(1);
    let mut out = LaurentPoly::one();
    for i in 1..=n as i64 {
        let q_int = LaurentPoly::one_minus_q_pow(i)
            .exact_div(&one_minus_q)
            .expect("1 - q^i is divisible by 1 - q");
        out = &out * &q_int;
    }
    out
}
