//! Exact computations in the Hopf algebra of iterated integrals, the decorated
//! plane-tree Hopf algebra, the path-algebra automorphism model and the
//! multiple-polylogarithm generating-series layer.

pub mod arith;
pub mod coeff;
pub mod dec;
pub mod error;
pub mod ideal;
pub mod iterint;
pub mod linalg;
pub mod numeric;
pub mod path;
pub mod polylog;
pub mod series;
pub mod tree;
pub mod word;

pub use coeff::{Generator, LinComb, Monomial, TensorK, Wedge2};
pub use dec::{Dec, Q};
pub use error::{Error, Result};
pub use word::IterWord;
