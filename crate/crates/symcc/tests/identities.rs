//! Permutation-statistics identities and algebra invariants, checked as
//! exact polynomial equalities.

use num_bigint::BigInt;
use proptest::prelude::*;

use symcc::algebra::{q_factorial, q_pochhammer, BiPoly, FactoredGF, LaurentPoly};
use symcc::permstat::{algorithm_g, carlitz, carlitz_nodesc, descent_sum_direct, Permutation};

fn binomial(n: usize, k: usize) -> BigInt {
    let mut out = BigInt::from(1);
    for i in 0..k {
        out = out * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    out
}

#[test]
fn maj_distribution_is_q_factorial() {
    for n in 1..=8 {
        let mut dist = LaurentPoly::zero();
        for pi in Permutation::all(n) {
            dist.add_term(pi.maj(), &BigInt::from(1));
        }
        assert_eq!(dist, q_factorial(n), "maj distribution != [n]_q! at n={n}");
    }
}

#[test]
fn carlitz_rational_form_cleared() {
    // C_n(x,q) (1-q)^n (x;q)_{n+1}
    //   = (x;q)_{n+1} sum_i C(n,i) (-q)^i prod_{j != i} (1 - q^j x)
    for n in 1..=6usize {
        let cn = carlitz(n).unwrap();
        let poch = q_pochhammer(0, n as u32 + 1, 1); // (x;q)_{n+1}
        let mut one_minus_q_pow_n = BiPoly::one();
        for _ in 0..n {
            one_minus_q_pow_n =
                &one_minus_q_pow_n * &BiPoly::from_laurent(&LaurentPoly::one_minus_q_pow(1));
        }
        let lhs = &(&cn * &one_minus_q_pow_n) * &poch;

        let mut sum = BiPoly::zero();
        for i in 0..=n {
            let c = binomial(n, i);
            let sign = if i % 2 == 0 { c } else { -c };
            let mut term = BiPoly::monomial(0, i as i64, sign);
            for j in 0..=n {
                if j != i {
                    term = &term * &(&BiPoly::one() - &BiPoly::monomial(1, j as i64, 1));
                }
            }
            sum = &sum + &term;
        }
        let rhs = &poch * &sum;
        assert_eq!(lhs, rhs, "cleared Carlitz rational form fails at n={n}");
    }
}

#[test]
fn limit_identity() {
    // (1-q)^n C_n(q^{-n}, q) = (-q)^n (q^{-n}; q)_n
    for n in 1..=6usize {
        let lhs = {
            let mut p = carlitz(n).unwrap().substitute_x(-(n as i64));
            for _ in 0..n {
                p = &p * &LaurentPoly::one_minus_q_pow(1);
            }
            p
        };
        let sign = if n % 2 == 0 { 1 } else { -1 };
        let rhs = &LaurentPoly::monomial(n as i64, sign)
            * &q_pochhammer(-(n as i64), n as u32, 0).as_laurent().unwrap();
        assert_eq!(lhs, rhs, "limit identity fails at n={n}");
    }
}

#[test]
fn single_restricted_descent_identity() {
    // (1 - x q^{n-1}) C_n^{(1)} = C_n - n x q^{n-1} C_{n-1}
    for n in 2..=6usize {
        let lhs = &(&BiPoly::one() - &BiPoly::monomial(1, n as i64 - 1, 1))
            * &carlitz_nodesc(n, 1).unwrap();
        let rhs = &carlitz(n).unwrap()
            - &(&BiPoly::monomial(1, n as i64 - 1, n as i64) * &carlitz(n - 1).unwrap());
        assert_eq!(lhs, rhs, "C1 identity fails at n={n}");
    }
}

#[test]
fn restricted_descent_identity_general() {
    // Clearing (x q^{n-i}; q)_i from
    //   C_n^{(i)} = C_n / (xq^{n-i};q)_i
    //            - sum_k C(n,k) x q^{n-k} C_{n-k} / (xq^{n-i};q)_{i-k+1}
    // leaves the ratio (xq^{n-i};q)_i / (xq^{n-i};q)_{i-k+1}
    //   = (x q^{n-k+1}; q)_{k-1} on each summand.
    for n in 2..=5usize {
        for i in 1..=n - 1 {
            let poch_full = q_pochhammer((n - i) as i64, i as u32, 1);
            let lhs = &carlitz_nodesc(n, i).unwrap() * &poch_full;
            let mut rhs = carlitz(n).unwrap();
            for k in 1..=i {
                let coeff = BiPoly::monomial(1, (n - k) as i64, binomial(n, k));
                let ratio = q_pochhammer((n - k + 1) as i64, k as u32 - 1, 1);
                let term = &(&coeff * &carlitz(n - k).unwrap()) * &ratio;
                rhs = &rhs - &term;
            }
            assert_eq!(lhs, rhs, "restricted-descent identity fails at n={n}, i={i}");
        }
    }
}

#[test]
fn algorithm_g_matches_direct_sum_random_weights() {
    let mut seed = 0x243f6a88u64;
    let mut next = move || {
        seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        seed
    };
    for n in 1..=8usize {
        for _ in 0..3 {
            let u: Vec<LaurentPoly> = (0..n.saturating_sub(1))
                .map(|_| {
                    let exp = (next() % 21) as i64 - 10;
                    let coeff = (next() % 5) as i64 + 1;
                    LaurentPoly::monomial(exp, coeff)
                })
                .collect();
            assert_eq!(
                algorithm_g(n, &u),
                descent_sum_direct(n, &u),
                "Algorithm G disagrees with the n!-sum at n={n}"
            );
        }
    }
}

#[test]
fn algorithm_g_polynomial_weights() {
    for n in 2..=6usize {
        let u: Vec<LaurentPoly> = (1..n)
            .map(|j| {
                let mut p = LaurentPoly::one();
                p.add_term(j as i64, &BigInt::from(2));
                p.add_term(-(j as i64), &BigInt::from(-1));
                p
            })
            .collect();
        assert_eq!(algorithm_g(n, &u), descent_sum_direct(n, &u));
    }
}

// --- proptest invariants ---------------------------------------------------

fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-8i64..=8, -9i64..=9), 0..6).prop_map(|terms| {
        let mut p = LaurentPoly::zero();
        for (e, c) in terms {
            p.add_term(e, &BigInt::from(c));
        }
        p
    })
}

proptest! {
    #[test]
    fn mul_commutative(p in arb_poly(), r in arb_poly()) {
        prop_assert_eq!(&p * &r, &r * &p);
    }

    #[test]
    fn mul_associative(p in arb_poly(), r in arb_poly(), s in arb_poly()) {
        prop_assert_eq!(&(&p * &r) * &s, &p * &(&r * &s));
    }

    #[test]
    fn mul_distributes_over_add(p in arb_poly(), r in arb_poly(), s in arb_poly()) {
        prop_assert_eq!(&p * &(&r + &s), &(&p * &r) + &(&p * &s));
    }

    #[test]
    fn exact_div_inverts_mul(p in arb_poly(), d in arb_poly()) {
        prop_assume!(!d.is_zero());
        let prod = &p * &d;
        prop_assert_eq!(prod.exact_div(&d).unwrap(), p);
    }

    #[test]
    fn series_prefix_stable(
        exps in prop::collection::vec(1i64..=6, 1..4),
        num in arb_poly(),
        m in 0usize..30,
    ) {
        let num = match num.min_exp() {
            Some(min) if min < 0 => num.shift(-min),
            _ => num,
        };
        let gf = FactoredGF::new(num, exps);
        let long = gf.series(m + 10).unwrap();
        let short = gf.series(m).unwrap();
        prop_assert_eq!(&long[..=m], &short[..]);
    }
}
