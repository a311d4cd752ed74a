//! Generating functions for the general case `s = sum a_i >= 1`, via the
//! cone generator matrix A and lattice-point enumeration in its half-open
//! fundamental parallelepiped.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::algebra::{ExpVector, FactoredGF, GfTerm, LaurentPoly, MultiGF};
use crate::constraint::ConstraintVector;
use crate::error::{Error, Result};
use crate::intmat::{adj_mul, adjugate, determinant};
use crate::permstat::{algorithm_g, Permutation};

pub const DEFAULT_MULTI_GUARD: usize = 6;
pub const DEFAULT_POINT_CAP: u64 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorMatrixT2 {
    /// a[i][j], 0-based; columns generate the order cone.
    a: Vec<Vec<i64>>,
    column_divisors: Vec<i64>,
    det: BigInt,
}

impl GeneratorMatrixT2 {
    pub fn entries(&self) -> &[Vec<i64>] {
        &self.a
    }

    pub fn n(&self) -> usize {
        self.a.len()
    }

    pub fn column(&self, j: usize) -> Vec<i64> {
        (0..self.n()).map(|i| self.a[i][j - 1]).collect()
    }

    /// |A_j|, the column sum (1-based j).
    pub fn column_sum(&self, j: usize) -> i64 {
        (0..self.n()).map(|i| self.a[i][j - 1]).sum()
    }

    pub fn column_divisors(&self) -> &[i64] {
        &self.column_divisors
    }

    pub fn det(&self) -> &BigInt {
        &self.det
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Parallelepiped {
    pub points: Vec<ExpVector>,
    pub matrix: GeneratorMatrixT2,
}

/// Build the Theorem-2 generator matrix: column j < n has the suffix sum
/// `a_{j+1} + ... + a_n` in rows 1..j and `-(a_1 + ... + a_j)` below;
/// column n is all ones. With `reduce`, each column is divided by the gcd
/// of its entries.
pub fn generator_matrix_t2(cv: &ConstraintVector, reduce: bool) -> Result<GeneratorMatrixT2> {
    if cv.sum() <= 0 {
        return Err(Error::SumNotPositive { s: cv.sum() });
    }
    for j in 1..cv.n() {
        if cv.prefix(j) > 0 {
            return Err(Error::PositivePrefix { j, prefix: cv.prefix(j) });
        }
    }
    let n = cv.n();
    let s = cv.sum();
    let mut a = vec![vec![0i64; n]; n];
    for j in 1..=n {
        for i in 1..=n {
            a[i - 1][j - 1] = if j == n {
                1
            } else if i <= j {
                s - cv.prefix(j)
            } else {
                -cv.prefix(j)
            };
            assert!(a[i - 1][j - 1] >= 0);
        }
    }

    // C * A = s * I, with C the order-cone constraint matrix.
    for i in 0..n {
        for j in 0..n {
            let dot: i64 = if i < n - 1 {
                a[i][j] - a[i + 1][j]
            } else {
                (0..n).map(|k| cv.a()[k] * a[k][j]).sum()
            };
            assert_eq!(dot, s * i64::from(i == j), "C * A != s * I at ({i},{j})");
        }
    }
    // Structural form used by the tiling argument: within a column all
    // entries agree except for one strict drop at the diagonal.
    for j in 1..n {
        assert!(a[j - 1][j - 1] > a[j][j - 1]);
        for i in 1..n {
            if i != j {
                assert_eq!(a[i - 1][j - 1], a[i][j - 1]);
            }
        }
    }

    let mut column_divisors = vec![1i64; n];
    if reduce {
        for j in 0..n {
            let d = (0..n).fold(0i64, |g, i| g.gcd(&a[i][j]));
            if d > 1 {
                for row in a.iter_mut() {
                    row[j] /= d;
                }
                column_divisors[j] = d;
            }
        }
    }
    let det = determinant(&a);
    assert!(det > BigInt::zero());
    if !reduce {
        let expect = BigInt::from(s).pow(n as u32 - 1);
        assert_eq!(det, expect, "unreduced det(A) != s^(n-1)");
    }
    Ok(GeneratorMatrixT2 { a, column_divisors, det })
}

/// Lower-triangular column Hermite form of `a` (positive diagonal), via
/// integer column operations. The diagonal product equals |det(a)|.
fn hermite_lower(a: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    let n = a.len();
    let mut h: Vec<Vec<BigInt>> = a
        .iter()
        .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    for col in 0..n {
        // Clear row `col` to the right of the pivot by gcd elimination.
        loop {
            let pick = (col..n)
                .filter(|&j| !h[col][j].is_zero())
                .min_by_key(|&j| h[col][j].magnitude().clone());
            let Some(pivot) = pick else { break };
            if pivot != col {
                for row in h.iter_mut() {
                    row.swap(col, pivot);
                }
            }
            let mut again = false;
            for j in col + 1..n {
                if !h[col][j].is_zero() {
                    let q = BigInt::from(&h[col][j] / &h[col][col]);
                    for row in h.iter_mut() {
                        let sub = &q * &row[col];
                        row[j] -= sub;
                    }
                    again = again || !h[col][j].is_zero();
                }
            }
            if !again {
                break;
            }
        }
        if h[col][col] < BigInt::zero() {
            for row in h.iter_mut() {
                row[col] = -row[col].clone();
            }
        }
        assert!(!h[col][col].is_zero(), "singular generator matrix");
    }
    h
}

/// Enumerate the integer points of `P = sum_j [0,1) A_j`.
///
/// The Hermite-form diagonal box gives one representative per coset of
/// `A Z^n`; each is reduced into `P` by subtracting `A floor(A^{-1} r)`,
/// computed exactly through the adjugate. Exactly `det(A)` points result.
pub fn parallelepiped_points(matrix: &GeneratorMatrixT2) -> Result<Parallelepiped> {
    parallelepiped_points_capped(matrix, DEFAULT_POINT_CAP)
}

pub fn parallelepiped_points_capped(
    matrix: &GeneratorMatrixT2,
    cap: u64,
) -> Result<Parallelepiped> {
    let n = matrix.n();
    let a = matrix.entries();
    let det = matrix.det().clone();
    match det.to_u64() {
        Some(d) if d <= cap => {}
        _ => return Err(Error::PointCapExceeded { cap }),
    }
    let adj = adjugate(a);
    let h = hermite_lower(a);
    let bounds: Vec<i64> = (0..n)
        .map(|i| h[i][i].to_i64().expect("diagonal bounded by det"))
        .collect();

    let mut points = Vec::new();
    let mut r = vec![0i64; n];
    'outer: loop {
        // p = r - A * floor(adj(A) r / det) lies in P and is congruent to r.
        let coords = adj_mul(&adj, &r);
        let flo: Vec<BigInt> = coords.iter().map(|c| c.div_floor(&det)).collect();
        let p: Vec<i64> = (0..n)
            .map(|i| {
                let shift: BigInt = (0..n).map(|j| BigInt::from(a[i][j]) * &flo[j]).sum();
                let v = BigInt::from(r[i]) - shift;
                v.to_i64().expect("parallelepiped coordinate fits i64")
            })
            .collect();
        debug_assert!(adj_mul(&adj, &p)
            .iter()
            .all(|c| c >= &BigInt::zero() && c < &det));
        points.push(p);

        let mut i = n;
        loop {
            if i == 0 {
                break 'outer;
            }
            i -= 1;
            r[i] += 1;
            if r[i] < bounds[i] {
                break;
            }
            r[i] = 0;
        }
    }
    points.sort();
    points.dedup();
    let found = points.len() as u64;
    if BigInt::from(found) != det {
        return Err(Error::PointCountMismatch {
            found,
            expected: det.to_string(),
        });
    }
    Ok(Parallelepiped { points, matrix: matrix.clone() })
}

/// Algorithm-G weights for one parallelepiped point:
/// `u_i = q^{|A_i|}` when `p_i = p_{i+1}`, else 1.
fn point_weights(matrix: &GeneratorMatrixT2, p: &[i64]) -> Vec<LaurentPoly> {
    (1..matrix.n())
        .map(|i| {
            if p[i - 1] == p[i] {
                LaurentPoly::q_pow(matrix.column_sum(i))
            } else {
                LaurentPoly::one()
            }
        })
        .collect()
}

/// `F(q)` for the general case, summing `q^{|p|} G_n(u^{(p)})` over the
/// parallelepiped points.
pub fn gf_q_general(cv: &ConstraintVector, reduce: bool) -> Result<FactoredGF> {
    let matrix = generator_matrix_t2(cv, reduce)?;
    let pts = parallelepiped_points(&matrix)?;
    let n = cv.n();
    let mut numerator = LaurentPoly::zero();
    for p in &pts.points {
        let weight: i64 = p.iter().sum();
        let g = algorithm_g(n, &point_weights(&matrix, p));
        numerator = &numerator + &g.shift(weight);
    }
    let denoms = (1..=n).map(|j| matrix.column_sum(j)).collect();
    Ok(FactoredGF::new(numerator, denoms))
}

fn permuted_exponents(pi: &Permutation, col: &[i64]) -> ExpVector {
    let mut v = vec![0i64; col.len()];
    for (i, &b) in col.iter().enumerate() {
        v[pi.one_line()[i] - 1] += b;
    }
    v
}

/// The multivariate `F(z)`: one term per (parallelepiped point, permutation).
pub fn gf_multi_general(
    cv: &ConstraintVector,
    n_guard: usize,
    reduce: bool,
) -> Result<MultiGF> {
    if cv.n() > n_guard {
        return Err(Error::GuardExceeded { n: cv.n(), guard: n_guard });
    }
    let matrix = generator_matrix_t2(cv, reduce)?;
    let pts = parallelepiped_points(&matrix)?;
    let n = cv.n();
    let columns: Vec<Vec<i64>> = (1..=n).map(|j| matrix.column(j)).collect();
    let mut terms = Vec::new();
    for p in &pts.points {
        for pi in Permutation::all(n) {
            let mut num = permuted_exponents(&pi, p);
            for i in pi.descent_set() {
                if p[i - 1] == p[i] {
                    for (v, w) in num.iter_mut().zip(permuted_exponents(&pi, &columns[i - 1])) {
                        *v += w;
                    }
                }
            }
            let denominators = columns
                .iter()
                .map(|col| permuted_exponents(&pi, col))
                .collect();
            terms.push(GfTerm {
                numerator: vec![(BigInt::one(), num)],
                denominators,
            });
        }
    }
    Ok(MultiGF { n, terms })
}
