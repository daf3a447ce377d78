//! Exact arithmetic and combinatorial primitives.

mod multipoly;
mod numbers;
mod partition;
mod permutation;
mod setpartition;
mod tpoly;

pub use multipoly::MultiPoly;
pub use numbers::{
    bell, binomial, euler_phi, factorial, moebius, pow_big, stirling, stirling_first_abs,
    stirling_second, StirlingKind,
};
pub use partition::{integer_partitions, partitions_up_to, z_lambda, IntPartition};
pub use permutation::{permutations_of_cycle_type, Permutation};
pub use setpartition::{set_partitions, SetPartition};
pub use tpoly::TPoly;

pub use num_bigint::BigInt;
pub use num_rational::BigRational as BigRat;

/// Rational from a pair of machine integers.
pub fn rat(num: i64, den: i64) -> BigRat {
    BigRat::new(BigInt::from(num), BigInt::from(den))
}

/// Rational from an integer.
pub fn rat_int<T: Into<BigInt>>(n: T) -> BigRat {
    BigRat::from_integer(n.into())
}
