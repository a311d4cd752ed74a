//! Engine output against brute-force enumeration, plus the oracle's own
//! internal consistency properties.

use num_bigint::BigInt;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use symcc::constraint::{validate_general, validate_sum_one};
use symcc::general::{generator_matrix_t2, gf_multi_general, gf_q_general, parallelepiped_points};
use symcc::oracle::{self, CheckMode};
use symcc::sum_one::{gf_multi_t1, gf_q_t1};

fn to_bigints(counts: &[u64]) -> Vec<BigInt> {
    counts.iter().map(|&c| BigInt::from(c)).collect()
}

#[test]
fn sum_one_engine_matches_oracle_examples() {
    for raw in [
        vec![-1i64, 1, 1],
        vec![-1, 2],
        vec![1],
        vec![-2, 1, 2],
        vec![-1, 0, 2],
        vec![-3, -1, 2, 3],
        vec![-5, 1, 1, 4],
    ] {
        let cv = validate_sum_one(&raw).unwrap();
        let series = gf_q_t1(&cv).unwrap().series(15).unwrap();
        let counts = oracle::count_by_weight(&raw, 15).unwrap();
        assert_eq!(series, to_bigints(&counts), "mismatch for {raw:?}");
    }
}

#[test]
fn sum_one_engine_matches_oracle_random() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut done = 0;
    while done < 25 {
        let n = rng.gen_range(2..=5usize);
        let mut raw: Vec<i64> = (0..n - 1).map(|_| rng.gen_range(-5..=5)).collect();
        let last = 1 - raw.iter().sum::<i64>();
        if last < -5 || last > 5 {
            continue;
        }
        raw.push(last);
        let cv = validate_sum_one(&raw).unwrap();
        let series = gf_q_t1(&cv).unwrap().series(12).unwrap();
        let counts = oracle::count_by_weight(&raw, 12).unwrap();
        assert_eq!(series, to_bigints(&counts), "mismatch for {raw:?}");
        done += 1;
    }
}

#[test]
fn general_engine_matches_oracle_both_variants() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut done = 0;
    while done < 15 {
        let n = rng.gen_range(2..=4usize);
        let raw: Vec<i64> = (0..n).map(|_| rng.gen_range(-5..=5)).collect();
        let cv = match validate_general(&raw) {
            Ok(cv) if cv.sum() <= 4 => cv,
            _ => continue,
        };
        let counts = to_bigints(&oracle::count_by_weight(&raw, 12).unwrap());
        let reduced = gf_q_general(&cv, true).unwrap().series(12).unwrap();
        let unreduced = gf_q_general(&cv, false).unwrap().series(12).unwrap();
        assert_eq!(reduced, counts, "reduced engine mismatch for {raw:?}");
        assert_eq!(unreduced, counts, "unreduced engine mismatch for {raw:?}");

        // |P| = s^{n-1} without reduction.
        let m = generator_matrix_t2(&cv, false).unwrap();
        let pts = parallelepiped_points(&m).unwrap();
        assert_eq!(
            BigInt::from(pts.points.len()),
            BigInt::from(cv.sum()).pow(n as u32 - 1)
        );
        done += 1;
    }
}

#[test]
fn multivariate_series_matches_valid_set() {
    for raw in [vec![-1i64, 1, 1], vec![-1, 2]] {
        let cv = validate_sum_one(&raw).unwrap();
        let gf = gf_multi_t1(&cv, 8).unwrap();
        let series = gf.series(6);
        let valid = oracle::valid_set(&raw, 6).unwrap();
        assert_eq!(series.len(), valid.len(), "term count mismatch for {raw:?}");
        for lam in valid {
            assert_eq!(
                series.get(&lam),
                Some(&BigInt::from(1)),
                "missing composition {lam:?} for {raw:?}"
            );
        }
    }
}

#[test]
fn multivariate_general_matches_valid_set() {
    for raw in [vec![-1i64, 3], vec![-1, -1, 4], vec![2]] {
        let cv = validate_general(&raw).unwrap();
        let gf = gf_multi_general(&cv, 6, true).unwrap();
        let series = gf.series(8);
        let valid = oracle::valid_set(&raw, 8).unwrap();
        assert_eq!(series.len(), valid.len(), "term count mismatch for {raw:?}");
        for lam in valid {
            assert_eq!(series.get(&lam), Some(&BigInt::from(1)), "{raw:?} / {lam:?}");
        }
    }
}

#[test]
fn multivariate_q_specialization_consistent() {
    for raw in [vec![-1i64, 1, 1], vec![-1, 2], vec![-2, 1, 1, 1]] {
        let cv = validate_sum_one(&raw).unwrap();
        let multi = gf_multi_t1(&cv, 8).unwrap().q_series(12).unwrap();
        let uni = gf_q_t1(&cv).unwrap().series(12).unwrap();
        assert_eq!(multi, uni, "specialization mismatch for {raw:?}");
    }
}

#[test]
fn multivariate_series_is_symmetric() {
    use itertools::Itertools;
    for raw in [vec![-1i64, 1, 1], vec![-1, 2], vec![-2, 1, 1, 1]] {
        let cv = validate_sum_one(&raw).unwrap();
        let series = gf_multi_t1(&cv, 8).unwrap().series(8);
        let n = raw.len();
        for perm in (0..n).permutations(n) {
            for (mono, coeff) in &series {
                let permuted: Vec<i64> = perm.iter().map(|&i| mono[i]).collect();
                assert_eq!(
                    series.get(&permuted),
                    Some(coeff),
                    "series not symmetric for {raw:?}"
                );
            }
        }
    }
}

#[test]
fn numerator_term_count_bounded() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..20 {
        let n = rng.gen_range(2..=7usize);
        let mut raw: Vec<i64> = (0..n - 1).map(|_| rng.gen_range(-5..=0)).collect();
        raw.push(1 - raw.iter().sum::<i64>());
        let cv = validate_sum_one(&raw).unwrap();
        let gf = gf_q_t1(&cv).unwrap();
        assert!(
            gf.numerator.num_terms() <= 1 << (n - 1),
            "numerator of {raw:?} has {} terms",
            gf.numerator.num_terms()
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn fast_equals_full(
        a in prop::collection::vec(-6i64..=6, 1..=4),
        lam in prop::collection::vec(0i64..=5, 1..=4),
    ) {
        prop_assume!(a.len() == lam.len());
        let fast = oracle::is_valid(&lam, &a, CheckMode::Fast).unwrap();
        let full = oracle::is_valid(&lam, &a, CheckMode::Full).unwrap();
        prop_assert_eq!(fast, full);
    }

    #[test]
    fn validity_closed_under_permutation_and_scaling(
        a in prop::collection::vec(-5i64..=5, 2..=4),
        lam in prop::collection::vec(0i64..=4, 2..=4),
        k in 1i64..=4,
    ) {
        use itertools::Itertools;
        prop_assume!(a.len() == lam.len());
        if oracle::is_valid(&lam, &a, CheckMode::Fast).unwrap() {
            for perm in (0..lam.len()).permutations(lam.len()) {
                let permuted: Vec<i64> = perm.iter().map(|&i| lam[i]).collect();
                prop_assert!(oracle::is_valid(&permuted, &a, CheckMode::Fast).unwrap());
            }
            let scaled: Vec<i64> = lam.iter().map(|&x| k * x).collect();
            prop_assert!(oracle::is_valid(&scaled, &a, CheckMode::Fast).unwrap());
        }
    }
}
