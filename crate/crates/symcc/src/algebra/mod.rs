//! Exact integer polynomial arithmetic: Laurent polynomials in `q`,
//! bivariate polynomials in `(x, q)`, factored rational generating
//! functions, and their series expansions.

pub mod bipoly;
pub mod gf;
pub mod laurent;
pub mod multi;

pub use bipoly::{q_pochhammer, BiPoly};
pub use gf::FactoredGF;
pub use laurent::{q_factorial, LaurentPoly};
pub use multi::{ExpVector, GfTerm, MultiGF, MultiSeries};
