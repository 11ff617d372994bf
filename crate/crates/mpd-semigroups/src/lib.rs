//! Invariants of affine semigroups of maximal projective dimension.
//!
//! An affine semigroup S ⊆ ℕ^d, minimally generated by a₁,…,aₙ, has a
//! semigroup ring k[S] presented by a toric ideal I_S ⊆ k[x₁,…,xₙ]. This
//! crate computes, in exact arithmetic, the invariants that govern the
//! extremal case pdim k[S] = n − 1 ("maximal projective dimension", MPD):
//!
//! * the **gap set** H(S) = (cone(S) ∖ S) ∩ ℕ^d, with certified finiteness
//!   where possible ([`gaps`]);
//! * **pseudo-Frobenius elements** PF(S) = { f ∈ H(S) : f + S∖{0} ⊆ S } and
//!   term-order **Frobenius elements** F(S)≺ = max≺ H(S) ([`gaps`]);
//! * **multigraded Betti numbers** via squarefree divisor complexes, minimal
//!   resolution length, and the multigraded **K-polynomial** (Hilbert-series
//!   numerator) ([`resolution`]);
//! * the **toric ideal**: Gröbner bases, minimal binomial generators, fiber
//!   graphs, indispensability, genericity, Apéry sets ([`toric`]);
//! * **RF-matrices** ("row-factorization" matrices) of pseudo-Frobenius
//!   elements, their determinants and the binomial RF-relations they induce
//!   ([`rf`]);
//! * **gluings** S = S₁ +_d S₂, pseudo-Frobenius elements and RF-matrices of
//!   gluings ([`gluing`]);
//! * symmetry classes (≺-symmetric, ≺-pseudo-symmetric, ≺-almost symmetric),
//!   an extended Wilf-inequality checker, and quasi-Frobenius elements of
//!   simplicial semigroups ([`classify`]).
//!
//! # Exactness
//!
//! No floating point is used anywhere: coordinates are arbitrary-precision
//! integers by default (see [`Int`]), cones and homology ranks are computed
//! over ℚ with fraction-free eliminations, and every certified status in a
//! result type is backed by a finite check that proves it.
//!
//! # Scalars and aliases
//!
//! Core types are generic over the exact integer scalar through
//! [`scalar::Scalar`]; the crate root fixes the blessed instantiation:
//!
//! ```
//! use mpd_semigroups::{Semigroup, Vector};
//!
//! let s = Semigroup::new(vec![
//!     Vector::from_i64s(&[0, 1]),
//!     Vector::from_i64s(&[2, 0]),
//!     Vector::from_i64s(&[3, 0]),
//!     Vector::from_i64s(&[1, 3]),
//! ])
//! .unwrap();
//! assert!(s.contains(&Vector::from_i64s(&[2, 1])));
//! assert!(!s.contains(&Vector::from_i64s(&[1, 0])));
//! ```

#![forbid(unsafe_code)]

pub mod apery;
pub mod classify;
pub mod cone;
pub mod gaps;
pub mod gluing;
pub mod groebner;
pub mod json;
pub mod lattice;
pub mod order;
pub mod resolution;
pub mod rf;
pub mod scalar;
pub mod semigroup;
pub mod toric;
pub mod vector;

pub use order::{OrderError, OrderKind, TermOrder};
pub use scalar::Scalar;
pub use semigroup::{AffineSemigroup, SemigroupError};

/// Default exact scalar: arbitrary-precision signed integers.
pub type Int = num_bigint::BigInt;

/// Multidegree / exponent vector over the default scalar.
pub type Vector = vector::GradedVector<Int>;

/// Affine semigroup over the default scalar.
pub type Semigroup = semigroup::AffineSemigroup<Int>;
