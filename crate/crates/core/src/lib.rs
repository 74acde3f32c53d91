pub mod abelian;
pub mod cover;
pub mod datasets;
pub mod eisenstein;
pub mod error;
pub mod group_algebra;
pub mod kulikov;
pub mod linalg;
pub mod picard;
pub mod presentation;
pub mod report;
pub mod scalar;
pub mod words;

pub use error::{Error, Result};

use num_bigint::BigInt;
use num_rational::BigRational;

/// A large prime used for modular cross-checks of rational computations.
pub type F1000003 = scalar::Fp<1_000_003>;

pub type IntMatrix = linalg::Matrix<BigInt>;
pub type RationalMatrix = linalg::Matrix<BigRational>;
pub type RationalRowSpace = linalg::RowSpace<BigRational>;
pub type RationalGroupAlgebraElement = group_algebra::GroupAlgebraElement<BigRational>;
pub type ModularGroupAlgebraElement = group_algebra::GroupAlgebraElement<F1000003>;
