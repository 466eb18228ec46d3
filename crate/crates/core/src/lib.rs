//! Odd-primary orders of Samelson products `<ε_a, ε_b> : ΣCP^a ∧ ΣCP^b → SU(n)`.
//!
//! The order of a Samelson product is reduced to a question about integer
//! lattices: the image of ordinary K-theory under the Chern character spans a
//! lattice in `Z^r`, and the order is the least `d` with `d·(1, …, 1)` inside
//! it. Everything here is exact; there is no floating point anywhere.
//!
//! The algebra in [`numeric`], [`chern`] and [`lattice`] is generic over an
//! exact integer [`Scalar`] (machine integers for small problems, [`BigInt`]
//! for everything the topology needs). The concrete aliases below are what the
//! rest of the crate uses.

pub mod applications;
pub mod chern;
pub mod lattice;
pub mod numeric;
pub mod samelson;
pub mod scalar;
pub mod tables;

pub use num_bigint::BigInt;

pub use scalar::Scalar;

/// Arbitrary-precision integer used by all topology-facing code.
pub type Integer = BigInt;
/// Reduced fraction over [`Integer`]; the denominator is always positive.
pub type Rational = num_rational::Ratio<Integer>;
/// Dense integer matrix over [`Integer`].
pub type IntegerMatrix = lattice::Matrix<Integer>;
/// Smith decomposition over [`Integer`].
pub type SnfDecomposition = lattice::SmithDecomposition<Integer>;
/// Minimal-multiple result over [`Integer`].
pub type MinimalMultipleResult = lattice::MinimalMultiple<Integer>;
/// Odd-prime factorization over [`Integer`].
pub type Factorization = numeric::Factorization<Integer>;
/// Truncated Chern-character series with [`Rational`] coefficients.
pub type TruncatedSeries = chern::TruncatedSeries<Integer>;

pub use applications::{
    gauge_type_bound, homotopy_commutative, su4_commutator_order, CommutativityVerdict, Verdict,
};
pub use samelson::{
    generator_matrix, row_basis, samelson_order, target_vector, GeneratorMatrix, OrderResult,
    ProductProblem, RowIndex, SamelsonError, Validity,
};
