pub mod cli;
pub mod constructions;
pub mod error;
pub mod extremal;
pub mod graphs;
pub mod inverse;
pub mod oneuniform;
pub mod patterns;

pub use error::{Error, Result};
pub use patterns::Pattern;

/// Arbitrary-precision rational used for every exact constant.
pub type Rational = num_rational::BigRational;
