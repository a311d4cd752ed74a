//! The four reference families of constraint vectors and their closed-form
//! generating functions, used as regression targets against the engines.
//!
//! Families 1 and 2 have polynomial numerators and are returned factored;
//! families 3 and 4 involve genuine rational structure and are exposed as
//! truncated series.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::algebra::{FactoredGF, LaurentPoly};
use crate::error::{Error, Result};
use crate::permstat::carlitz;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExampleParams {
    /// `(nb-b+1) lambda_{pi(n)} >= b (lambda_{pi(1)} + ... + lambda_{pi(n-1)})`
    Family1 { n: usize, b: i64 },
    /// `b (lambda_{pi(2)} + ... + lambda_{pi(n)}) >= (nb-b-1) lambda_{pi(1)}`
    Family2 { n: usize, b: i64 },
    /// `(b+1) lambda_{pi(n)} >= b lambda_{pi(1)}`
    Family3 { n: usize, b: i64 },
    /// `k lambda_{pi(n-1)} + l lambda_{pi(n)} >= (k+l-1) lambda_{pi(1)}`
    Family4 { n: usize, k: i64, l: i64 },
}

impl ExampleParams {
    fn check(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidParams(msg));
        match *self {
            ExampleParams::Family1 { n, b } | ExampleParams::Family3 { n, b } => {
                if n < 2 || b < 1 {
                    return bad(format!("family needs n >= 2, b >= 1; got n={n}, b={b}"));
                }
            }
            ExampleParams::Family2 { n, b } => {
                if n < 2 || b < 1 || (n as i64) * b - 1 < 1 {
                    return bad(format!(
                        "family 2 needs n >= 2, b >= 1, nb - 1 >= 1; got n={n}, b={b}"
                    ));
                }
            }
            ExampleParams::Family4 { n, k, l } => {
                if n < 3 || k < 1 || k > l {
                    return bad(format!(
                        "family 4 needs n >= 3, 1 <= k <= l; got n={n}, k={k}, l={l}"
                    ));
                }
            }
        }
        Ok(())
    }
}

/// The family's raw constraint vector; always sums to 1.
pub fn example_vector(p: ExampleParams) -> Result<Vec<i64>> {
    p.check()?;
    let v = match p {
        ExampleParams::Family1 { n, b } => {
            let mut v = vec![-b; n - 1];
            v.push(n as i64 * b - b + 1);
            v
        }
        ExampleParams::Family2 { n, b } => {
            let mut v = vec![-(n as i64 * b - b - 1)];
            v.extend(std::iter::repeat(b).take(n - 1));
            v
        }
        ExampleParams::Family3 { n, b } => {
            let mut v = vec![-b];
            v.extend(std::iter::repeat(0).take(n - 2));
            v.push(b + 1);
            v
        }
        ExampleParams::Family4 { n, k, l } => {
            let m = k + l - 1;
            let mut v = vec![-m];
            v.extend(std::iter::repeat(0).take(n - 3));
            v.push(k);
            v.push(l);
            v
        }
    };
    debug_assert_eq!(v.iter().sum::<i64>(), 1);
    Ok(v)
}

/// `(1 - q^{n(nb+1)}) / ((1 - q^n)(1 - q^{nb+1})^n)`
pub fn example1_gf(n: usize, b: i64) -> Result<FactoredGF> {
    ExampleParams::Family1 { n, b }.check()?;
    let e = n as i64 * b + 1;
    let num = LaurentPoly::one_minus_q_pow(n as i64 * e);
    let mut denoms = vec![n as i64];
    denoms.extend(std::iter::repeat(e).take(n));
    Ok(FactoredGF::new(num, denoms))
}

/// `(1 - q^{n(nb-1)}) / ((1 - q^n)(1 - q^{nb-1})^n)`
pub fn example2_gf(n: usize, b: i64) -> Result<FactoredGF> {
    ExampleParams::Family2 { n, b }.check()?;
    let e = n as i64 * b - 1;
    let num = LaurentPoly::one_minus_q_pow(n as i64 * e);
    let mut denoms = vec![n as i64];
    denoms.extend(std::iter::repeat(e).take(n));
    Ok(FactoredGF::new(num, denoms))
}

fn binomial(n: usize, k: usize) -> BigInt {
    let mut out = BigInt::from(1);
    for i in 0..k {
        out = out * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    out
}

fn mul_truncated(a: &[BigInt], b: &[BigInt], m: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); m + 1];
    for (i, ca) in a.iter().enumerate().take(m + 1) {
        if ca.is_zero() {
            continue;
        }
        for (j, cb) in b.iter().enumerate().take(m + 1 - i) {
            out[i + j] += ca * cb;
        }
    }
    out
}

/// Series of the family-3 closed form
/// `(1-q^{bn})(1-q^{bn+n}) / ((1-q^n)(1-q)^n) * sum_i C(n,i) (-q)^i / (1-q^{bn+i})`,
/// cross-checked against the unsimplified form
/// `C_n(q^{bn}, q) / ((1-q^n) prod_{j=1}^{n-1} (1-q^{j+bn}))`.
pub fn example3_gf(n: usize, b: i64, m: usize) -> Result<Vec<BigInt>> {
    ExampleParams::Family3 { n, b }.check()?;
    let bn = b * n as i64;

    // Displayed closed form.
    let prefactor_num = &LaurentPoly::one_minus_q_pow(bn)
        * &LaurentPoly::one_minus_q_pow(bn + n as i64);
    let mut prefactor_denoms = vec![n as i64];
    prefactor_denoms.extend(std::iter::repeat(1).take(n));
    let prefactor = FactoredGF::new(prefactor_num, prefactor_denoms).series(m)?;

    let mut summed = vec![BigInt::zero(); m + 1];
    for i in 0..=n {
        let c = binomial(n, i);
        let sign = if i % 2 == 0 { c } else { -c };
        // (-q)^i / (1 - q^{bn+i}) = sign * q^i * sum_k q^{k(bn+i)}
        let step = (bn + i as i64) as usize;
        let mut e = i;
        while e <= m {
            summed[e] += &sign;
            e += step;
        }
    }
    let closed = mul_truncated(&prefactor, &summed, m);

    // Pre-simplification form through the Carlitz substitution.
    let num = carlitz(n)?.substitute_x(bn);
    let mut denoms = vec![n as i64];
    denoms.extend((1..n as i64).map(|j| j + bn));
    let unsimplified = FactoredGF::new(num, denoms).series(m)?;
    assert_eq!(closed, unsimplified, "family-3 closed form disagrees with Carlitz route");
    Ok(closed)
}

/// Series of the family-4 closed form with m = k + l - 1:
/// numerator `C_n(q^{nm},q)(1-q^{nl-1}) - C_{n-1}(q^{nm},q) n q^{nm+n-1}(1-q^{-nk})`
/// over `(1-q^n)(1-q^{nl-1})(q^{nm+1};q)_{n-1}`.
pub fn example4_gf(n: usize, k: i64, l: i64, order: usize) -> Result<Vec<BigInt>> {
    ExampleParams::Family4 { n, k, l }.check()?;
    let m = k + l - 1;
    let nm = n as i64 * m;
    let nl = n as i64 * l;
    let nk = n as i64 * k;

    let cn = carlitz(n)?.substitute_x(nm);
    let cn1 = carlitz(n - 1)?.substitute_x(nm);
    let first = &cn * &LaurentPoly::one_minus_q_pow(nl - 1);
    // q^{nm+n-1} (1 - q^{-nk}) = q^{nm+n-1} - q^{nm+n-1-nk}
    let tail = &LaurentPoly::q_pow(nm + n as i64 - 1) - &LaurentPoly::q_pow(nm + n as i64 - 1 - nk);
    let second = &(&cn1 * &tail) * &LaurentPoly::constant(n as i64);
    let mut numerator = &first - &second;

    let mut denoms = vec![n as i64, nl - 1];
    denoms.extend((1..n as i64).map(|j| nm + j));

    // nm + n - 1 - nk = n(l-1) + n - 1 >= 0, so no normalization is needed,
    // but clear a negative minimal exponent defensively against parameter
    // extensions: shifting numerator and dropping a matching q^{-t} from the
    // denominator is not possible with factored denominators, so assert.
    if let Some(min) = numerator.min_exp() {
        assert!(min >= 0, "family-4 numerator has negative exponent {min}");
    }
    if numerator.is_zero() {
        numerator = LaurentPoly::zero();
    }
    FactoredGF::new(numerator, denoms).series(order)
}
