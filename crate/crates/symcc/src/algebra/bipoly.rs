//! Bivariate polynomials in `x` and `q`: integer coefficients, nonnegative
//! `x`-exponents, integer (possibly negative) `q`-exponents.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::Zero;

use super::laurent::LaurentPoly;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BiPoly {
    // key: (x-exponent, q-exponent)
    terms: BTreeMap<(u32, i64), BigInt>,
}

impl BiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, 1)
    }

    /// `c * x^xe * q^qe`
    pub fn monomial(xe: u32, qe: i64, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((xe, qe), c);
        }
        Self { terms }
    }

    pub fn from_laurent(p: &LaurentPoly) -> Self {
        let mut out = Self::zero();
        for (e, c) in p.terms() {
            out.add_term(0, e, c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, i64), &BigInt)> {
        self.terms.iter().map(|(&k, c)| (k, c))
    }

    pub fn add_term(&mut self, xe: u32, qe: i64, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((xe, qe)).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(xe, qe));
        }
    }

    /// Substitute `x -> q^k`: each term `c x^a q^b` becomes `c q^{ak+b}`.
    pub fn substitute_x(&self, k: i64) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for ((xe, qe), c) in self.terms() {
            out.add_term(xe as i64 * k + qe, c);
        }
        out
    }

    /// The result when the polynomial has no `x` dependence.
    pub fn as_laurent(&self) -> Option<LaurentPoly> {
        if self.terms.keys().all(|&(xe, _)| xe == 0) {
            Some(self.substitute_x(0))
        } else {
            None
        }
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for ((xe, qe), c) in rhs.terms() {
            out.add_term(xe, qe, c);
        }
        out
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for ((xe, qe), c) in rhs.terms() {
            out.add_term(xe, qe, &(-c));
        }
        out
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for ((x1, q1), c1) in self.terms() {
            for ((x2, q2), c2) in rhs.terms() {
                out.add_term(x1 + x2, q1 + q2, &(c1 * c2));
            }
        }
        out
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((xe, qe), c) in self.terms() {
            if first {
                first = false;
            } else {
                write!(f, " + ")?;
            }
            write!(f, "{c}")?;
            if xe > 0 {
                write!(f, "*x^{xe}")?;
            }
            if qe != 0 {
                write!(f, "*q^{qe}")?;
            }
        }
        Ok(())
    }
}

/// `(x^{x_degree} q^k; q)_n = prod_{i=0}^{n-1} (1 - x^{x_degree} q^{k+i})`.
pub fn q_pochhammer(k: i64, n: u32, x_degree: u32) -> BiPoly {
    let mut out = BiPoly::one();
    for i in 0..n as i64 {
        let factor = &BiPoly::one() - &BiPoly::monomial(x_degree, k + i, 1);
        out = &out * &factor;
    }
    out
}
