pub mod eqmod;
pub mod error;
pub mod koszul_oracle;
pub mod partitions;
pub mod rep_ring;
pub mod report;
pub mod resolutions;
pub mod suites;
pub mod tensor_lab;

pub use error::{Error, Result};

/// Exact rationals; the default coefficient field.
pub type Rational = num_rational::BigRational;
/// Arbitrary-precision integers, for fraction-free elimination.
pub type Integer = num_bigint::BigInt;
/// Sparse tensor with rational coefficients.
pub type QVec = tensor_lab::TensorVec<Rational>;
/// Linear map with rational coefficients.
pub type QMap = tensor_lab::LinMap<Rational>;
