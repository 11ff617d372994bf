//! Exact integer scalars.
//!
//! Every computation in this crate — cone membership, lattice kernels,
//! simplicial homology ranks, Hilbert-series numerators — is carried out in
//! exact arithmetic. The [`Scalar`] trait abstracts the signed integer type
//! those computations run over, and is blanket-implemented for everything
//! with the right `num` capabilities, in particular `i64`, `i128`, and
//! [`num_bigint::BigInt`].
//!
//! Floating-point types do not qualify (they are not [`num_integer::Integer`])
//! and deliberately so: a facet inequality or a homology rank decided by a
//! rounded value is not a result. Where division is genuinely needed (cone
//! facets, homology over ℚ) the crate layers [`num_rational::Ratio`] on top of
//! the same scalar.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::ops::{AddAssign, MulAssign, SubAssign};

use num_integer::Integer;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// Signed integer scalar with exact arithmetic.
///
/// The supertraits give ring arithmetic, Euclidean division and gcd
/// ([`Integer`]), signs ([`Signed`]), conversions to and from machine
/// integers, and the plumbing (`Clone`, `Hash`, `Display`, threading bounds)
/// the library needs to store scalars in sets and print them.
///
/// The crate root exports concrete aliases ([`crate::Int`],
/// [`crate::Vector`], …) fixing the default instantiation to
/// [`num_bigint::BigInt`]; generic code should stay in terms of `Scalar`.
pub trait Scalar:
    Integer
    + Signed
    + FromPrimitive
    + ToPrimitive
    + AddAssign
    + SubAssign
    + MulAssign
    + Clone
    + Hash
    + Debug
    + Display
    + Send
    + Sync
    + 'static
{
}

impl<T> Scalar for T where
    T: Integer
        + Signed
        + FromPrimitive
        + ToPrimitive
        + AddAssign
        + SubAssign
        + MulAssign
        + Clone
        + Hash
        + Debug
        + Display
        + Send
        + Sync
        + 'static
{
}

/// Converts a machine integer literal to any [`Scalar`].
///
/// Every supported scalar can represent every `i64`, so this never fails.
pub fn int<T: Scalar>(x: i64) -> T {
    T::from_i64(x).expect("every Scalar represents all of i64")
}

/// Converts a nonnegative scalar to `usize` for indexing.
///
/// Returns `None` when the value is negative or too large for the platform;
/// callers that have already bounded the value may `expect` the result.
pub fn to_index<T: Scalar>(x: &T) -> Option<usize> {
    if x.is_negative() {
        None
    } else {
        x.to_usize()
    }
}
