//! Permutation statistics (descents, major index), Carlitz q-Eulerian
//! polynomials, and the memoized dynamic program computing
//! `G_n = sum_{pi in S_n} prod_{j in D_pi} u_j` without enumerating `S_n`.

use itertools::Itertools;
use num_bigint::BigInt;

use crate::algebra::{BiPoly, LaurentPoly};
use crate::error::{Error, Result};

/// Guard for the direct n! enumerations.
pub const ENUMERATION_GUARD: usize = 10;

/// One-line notation, entries a permutation of 1..=n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(one_line: Vec<usize>) -> Self {
        let n = one_line.len();
        let mut seen = vec![false; n + 1];
        for &v in &one_line {
            assert!(v >= 1 && v <= n && !seen[v], "not a permutation of 1..={n}");
            seen[v] = true;
        }
        Self(one_line)
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn one_line(&self) -> &[usize] {
        &self.0
    }

    /// Positions j (1-based) with pi(j) > pi(j+1).
    pub fn descent_set(&self) -> Vec<usize> {
        (1..self.0.len())
            .filter(|&j| self.0[j - 1] > self.0[j])
            .collect()
    }

    pub fn des(&self) -> usize {
        self.descent_set().len()
    }

    pub fn maj(&self) -> i64 {
        self.descent_set().iter().map(|&j| j as i64).sum()
    }

    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        (1..=n).permutations(n).map(Permutation)
    }
}

/// Joint distribution of des and maj over `S_n`:
/// `C_n(x, q) = sum_pi x^{des(pi)} q^{maj(pi)}`, by direct enumeration.
pub fn carlitz(n: usize) -> Result<BiPoly> {
    if n < 1 || n > ENUMERATION_GUARD {
        return Err(Error::GuardExceeded { n, guard: ENUMERATION_GUARD });
    }
    let mut out = BiPoly::zero();
    for pi in Permutation::all(n) {
        out.add_term(pi.des() as u32, pi.maj(), &BigInt::from(1));
    }
    Ok(out)
}

/// Same sum restricted to permutations with no descent in positions
/// `n-i .. n-1` (the last `i` positions). `i = 0` is unrestricted.
pub fn carlitz_nodesc(n: usize, i: usize) -> Result<BiPoly> {
    if n < 1 || n > ENUMERATION_GUARD {
        return Err(Error::GuardExceeded { n, guard: ENUMERATION_GUARD });
    }
    if i > n - 1 {
        return Err(Error::InvalidParams(format!(
            "restricted-descent index {i} out of range 0..={}",
            n - 1
        )));
    }
    let mut out = BiPoly::zero();
    for pi in Permutation::all(n) {
        let d = pi.descent_set();
        if d.iter().any(|&j| j >= n - i) {
            continue;
        }
        out.add_term(d.len() as u32, d.iter().map(|&j| j as i64).sum(), &BigInt::from(1));
    }
    Ok(out)
}

/// `G_n = sum_{pi in S_n} prod_{j in D_pi} u_j` via the O(n^2)-entry
/// recurrence over permutations grouped by last entry:
/// row k holds G_k^{(1..k)} where G_k^{(i)} sums over permutations of [k]
/// ending in i, with
/// `G_k^{(1)} = u_{k-1} * sum_j G_{k-1}^{(j)}` and
/// `G_k^{(i)} = G_k^{(i-1)} + (1 - u_{k-1}) G_{k-1}^{(i-1)}`.
///
/// The paper states `G_n = G_{n+1}^{(n+1)}`; the extra weight `u_n` cancels
/// out of that entry, which reduces to `sum_j G_n^{(j)}`. We compute that
/// sum directly so only `u_1 .. u_{n-1}` are required (the direct-sum
/// oracle in the tests confirms the cancellation).
pub fn algorithm_g(n: usize, u: &[LaurentPoly]) -> LaurentPoly {
    assert!(n >= 1);
    assert_eq!(u.len(), n - 1, "need weights u_1..u_{{n-1}}");
    let mut row = vec![LaurentPoly::one()];
    for k in 2..=n {
        let w = &u[k - 2];
        let one_minus_w = &LaurentPoly::one() - w;
        let row_sum = row.iter().fold(LaurentPoly::zero(), |acc, g| &acc + g);
        let mut next = Vec::with_capacity(k);
        next.push(w * &row_sum);
        for i in 2..=k {
            let g = &next[i - 2] + &(&one_minus_w * &row[i - 2]);
            next.push(g);
        }
        row = next;
    }
    row.iter().fold(LaurentPoly::zero(), |acc, g| &acc + g)
}

/// The n!-term definition of `G_n`; test oracle for `algorithm_g`.
pub fn descent_sum_direct(n: usize, u: &[LaurentPoly]) -> LaurentPoly {
    assert_eq!(u.len(), n - 1);
    let mut out = LaurentPoly::zero();
    for pi in Permutation::all(n) {
        let mut prod = LaurentPoly::one();
        for j in pi.descent_set() {
            prod = &prod * &u[j - 1];
        }
        out = &out + &prod;
    }
    out
}
