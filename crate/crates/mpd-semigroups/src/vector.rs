//! Multidegrees and exponent vectors.
//!
//! A [`GradedVector`] is a point of ℤ^d. It plays two roles that share all
//! their arithmetic:
//!
//! * a **multidegree** in the ambient grading group ℤ^d of an affine
//!   semigroup S ⊆ ℕ^d (generators, gaps, pseudo-Frobenius elements, Betti
//!   degrees), and
//! * an **exponent vector** in ℕ^n — a factorization of a semigroup element
//!   over the generators, or a monomial of the polynomial ring k[x₁,…,xₙ].
//!
//! Coordinates are any exact [`Scalar`]; the crate-root alias
//! [`crate::Vector`] fixes arbitrary-precision integers. The derived `Ord` is
//! the lexicographic order on coordinates and is used only to report sets in
//! a canonical ascending order — the mathematically meaningful comparisons
//! (componentwise [`GradedVector::le_c`], term orders from
//! [`crate::order::TermOrder`], divisibility of semigroup elements) are
//! separate methods.

use std::fmt;

use crate::scalar::{int, to_index, Scalar};

/// Point of ℤ^d: a multidegree or an exponent vector.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GradedVector<T: Scalar> {
    coords: Vec<T>,
}

impl<T: Scalar> GradedVector<T> {
    /// Wraps a coordinate vector.
    pub fn new(coords: Vec<T>) -> Self {
        GradedVector { coords }
    }

    /// The zero vector of dimension `dim`.
    pub fn zeros(dim: usize) -> Self {
        GradedVector {
            coords: vec![T::zero(); dim],
        }
    }

    /// Builds a vector from machine-integer literals (fixtures, tests, CLI).
    pub fn from_i64s(coords: &[i64]) -> Self {
        GradedVector {
            coords: coords.iter().map(|&c| int(c)).collect(),
        }
    }

    /// Number of coordinates.
    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    /// Coordinate access.
    pub fn coord(&self, i: usize) -> &T {
        &self.coords[i]
    }

    /// All coordinates.
    pub fn coords(&self) -> &[T] {
        &self.coords
    }

    /// Consumes the vector into its coordinates.
    pub fn into_coords(self) -> Vec<T> {
        self.coords
    }

    /// Iterates over coordinates.
    pub fn iter(&self) -> std::slice::Iter<'_, T> {
        self.coords.iter()
    }

    /// Componentwise sum.
    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.dim(), other.dim());
        GradedVector {
            coords: self
                .iter()
                .zip(other.iter())
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    /// Componentwise difference over ℤ (may leave ℕ^d).
    pub fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.dim(), other.dim());
        GradedVector {
            coords: self
                .iter()
                .zip(other.iter())
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }

    /// Componentwise difference if it stays in ℕ^d, `None` otherwise.
    ///
    /// This is the "divisibility" test of the semigroup partial order ≤_S
    /// restricted to the ambient coordinates: `b.checked_sub_nonneg(a)` is the
    /// candidate witness for a ≤_c b.
    pub fn checked_sub_nonneg(&self, other: &Self) -> Option<Self> {
        debug_assert_eq!(self.dim(), other.dim());
        let mut coords = Vec::with_capacity(self.dim());
        for (a, b) in self.iter().zip(other.iter()) {
            if a < b {
                return None;
            }
            coords.push(a.clone() - b.clone());
        }
        Some(GradedVector { coords })
    }

    /// Scalar multiple.
    pub fn scaled(&self, k: &T) -> Self {
        GradedVector {
            coords: self.iter().map(|a| a.clone() * k.clone()).collect(),
        }
    }

    /// Componentwise maximum (the lcm of two monomials' exponent vectors).
    pub fn max_c(&self, other: &Self) -> Self {
        debug_assert_eq!(self.dim(), other.dim());
        GradedVector {
            coords: self
                .iter()
                .zip(other.iter())
                .map(|(a, b)| if a >= b { a.clone() } else { b.clone() })
                .collect(),
        }
    }

    /// Componentwise minimum (the gcd of two monomials' exponent vectors).
    pub fn min_c(&self, other: &Self) -> Self {
        debug_assert_eq!(self.dim(), other.dim());
        GradedVector {
            coords: self
                .iter()
                .zip(other.iter())
                .map(|(a, b)| if a <= b { a.clone() } else { b.clone() })
                .collect(),
        }
    }

    /// Componentwise order: `self ≤_c other` iff every coordinate is ≤.
    ///
    /// For exponent vectors this is monomial divisibility.
    pub fn le_c(&self, other: &Self) -> bool {
        debug_assert_eq!(self.dim(), other.dim());
        self.iter().zip(other.iter()).all(|(a, b)| a <= b)
    }

    /// True when every coordinate is ≥ 0, i.e. the point lies in ℕ^d.
    pub fn is_nonnegative(&self) -> bool {
        self.iter().all(|a| !a.is_negative())
    }

    /// True for the zero vector.
    pub fn is_zero(&self) -> bool {
        self.iter().all(|a| a.is_zero())
    }

    /// Sum of coordinates (the total degree of a monomial; the standard
    /// grading used by graded term orders).
    pub fn total(&self) -> T {
        self.iter().fold(T::zero(), |acc, a| acc + a.clone())
    }

    /// Indices of nonzero coordinates (the support of a monomial).
    pub fn support(&self) -> Vec<usize> {
        self.iter()
            .enumerate()
            .filter(|(_, a)| !a.is_zero())
            .map(|(i, _)| i)
            .collect()
    }

    /// True when no index is nonzero in both vectors.
    pub fn disjoint_support(&self, other: &Self) -> bool {
        self.iter().zip(other.iter()).all(|(a, b)| a.is_zero() || b.is_zero())
    }

    /// Converts nonnegative coordinates to `usize` indices (for dense tables).
    ///
    /// Returns `None` if any coordinate is negative or exceeds the platform.
    pub fn as_indices(&self) -> Option<Vec<usize>> {
        self.iter().map(to_index).collect()
    }

    /// Maps coordinates into another scalar type (e.g. `i64` fixtures into
    /// arbitrary precision).
    pub fn map_scalar<U: Scalar>(&self, f: impl Fn(&T) -> U) -> GradedVector<U> {
        GradedVector {
            coords: self.iter().map(f).collect(),
        }
    }
}

/// Sum of a family of vectors; `dim` disambiguates the empty family.
pub fn sum_of<T: Scalar>(vectors: &[GradedVector<T>], dim: usize) -> GradedVector<T> {
    vectors
        .iter()
        .fold(GradedVector::zeros(dim), |acc, v| acc.add(v))
}

impl<T: Scalar> fmt::Display for GradedVector<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl<T: Scalar> fmt::Debug for GradedVector<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
