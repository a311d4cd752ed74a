//! Exact generating functions for symmetrically constrained compositions:
//! nonnegative integer n-tuples `lambda` with
//! `sum_i a_i lambda_{pi(i)} >= 0` for every permutation `pi`.
//!
//! The sum-one engine handles `sum a_i = 1`, the general engine handles
//! `sum a_i >= 1` with nonpositive prefix sums via lattice-point
//! enumeration in a fundamental parallelepiped, and a brute-force oracle
//! provides ground truth for both. All arithmetic is exact.

pub mod algebra;
pub mod cli;
pub mod closed_forms;
pub mod constraint;
pub mod error;
pub mod general;
pub mod intmat;
pub mod oracle;
pub mod permstat;
pub mod sum_one;

pub use algebra::{BiPoly, FactoredGF, LaurentPoly, MultiGF};
pub use constraint::{validate_general, validate_sum_one, ConstraintVector};
pub use error::{Error, Result};
