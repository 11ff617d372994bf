//! Term orders on ℕ^d.
//!
//! A term order ≺ is a total order on ℕ^d that is compatible with addition
//! (a ≺ b implies a + c ≺ b + c) and has 0 as its minimum. Term orders serve
//! two distinct purposes here:
//!
//! * on the **ambient degrees** ℕ^d they select Frobenius elements
//!   F(S)≺ = max≺ H(S) and drive the symmetry classification;
//! * on **exponent vectors** ℕ^n they order monomials of k[x₁,…,xₙ] for
//!   Gröbner-basis computations on the defining toric ideal.
//!
//! The supported kinds are lexicographic, graded lexicographic, graded
//! reverse lexicographic, and weighted orders with an explicit tiebreak. A
//! `permutation` lists coordinates by priority: comparison happens on the
//! reordered view `v'ᵢ = v[permutation[i]]`, so `permutation[0]` is the most
//! significant coordinate. Weighted orders read their weight vector in that
//! same prioritized frame and fall back to an arbitrary further term order on
//! ties.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::scalar::Scalar;
use crate::vector::GradedVector;

/// Ways a term order description can be malformed.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrderError {
    /// The permutation is not a bijection of `{0, …, dim−1}`.
    #[error("permutation {permutation:?} is not a permutation of 0..{dim}")]
    InvalidPermutation { permutation: Vec<usize>, dim: usize },
    /// A weight vector's length differs from the order's dimension.
    #[error("weight vector has length {got}, expected {expected}")]
    WeightDimensionMismatch { got: usize, expected: usize },
    /// A tiebreak order's dimension differs from the weighted order's.
    #[error("tiebreak order has dimension {got}, expected {expected}")]
    TiebreakDimensionMismatch { got: usize, expected: usize },
}

/// The comparison rule of a [`TermOrder`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum OrderKind {
    /// Lexicographic on the prioritized coordinates.
    Lex,
    /// Total degree first, then lexicographic.
    GradedLex,
    /// Total degree first, then reverse lexicographic: on a tie the vector
    /// with the *smaller* entry in the least significant differing coordinate
    /// is the larger one.
    GradedReverseLex,
    /// Weighted degree `Σᵢ weights[i]·v'ᵢ` first (in the prioritized frame),
    /// then the tiebreak order.
    Weighted {
        weights: Vec<u64>,
        tiebreak: Box<TermOrder>,
    },
}

/// A term order on ℕ^d.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermOrder {
    kind: OrderKind,
    /// Coordinates listed by priority; `permutation[0]` is most significant.
    permutation: Vec<usize>,
}

impl TermOrder {
    /// Lexicographic order with natural coordinate priority.
    pub fn lex(dim: usize) -> Self {
        TermOrder {
            kind: OrderKind::Lex,
            permutation: (0..dim).collect(),
        }
    }

    /// Graded lexicographic order with natural coordinate priority.
    pub fn grlex(dim: usize) -> Self {
        TermOrder {
            kind: OrderKind::GradedLex,
            permutation: (0..dim).collect(),
        }
    }

    /// Graded reverse lexicographic order with natural coordinate priority.
    pub fn grevlex(dim: usize) -> Self {
        TermOrder {
            kind: OrderKind::GradedReverseLex,
            permutation: (0..dim).collect(),
        }
    }

    /// Weighted order; `weights` are read in the tiebreak's ambient dimension
    /// with natural priority.
    pub fn weighted(weights: Vec<u64>, tiebreak: TermOrder) -> Result<Self, OrderError> {
        if weights.len() != tiebreak.dim() {
            return Err(OrderError::WeightDimensionMismatch {
                got: weights.len(),
                expected: tiebreak.dim(),
            });
        }
        let dim = weights.len();
        Ok(TermOrder {
            kind: OrderKind::Weighted {
                weights,
                tiebreak: Box::new(tiebreak),
            },
            permutation: (0..dim).collect(),
        })
    }

    /// Replaces the coordinate priority, validating it is a permutation.
    pub fn with_permutation(mut self, permutation: Vec<usize>) -> Result<Self, OrderError> {
        let dim = self.dim();
        let mut seen = vec![false; dim];
        let valid = permutation.len() == dim
            && permutation.iter().all(|&i| {
                if i < dim && !seen[i] {
                    seen[i] = true;
                    true
                } else {
                    false
                }
            });
        if !valid {
            return Err(OrderError::InvalidPermutation { permutation, dim });
        }
        self.permutation = permutation;
        Ok(self)
    }

    /// Dimension of the vectors this order compares.
    pub fn dim(&self) -> usize {
        self.permutation.len()
    }

    /// The comparison rule.
    pub fn kind(&self) -> &OrderKind {
        &self.kind
    }

    /// The coordinate priority list.
    pub fn permutation(&self) -> &[usize] {
        &self.permutation
    }

    /// True when the order refines total degree, i.e. `|a| < |b|` forces
    /// a ≺ b. Graded orders guarantee that region enumerations below a fixed
    /// element (sporadic-element counts, Frobenius searches) are finite.
    pub fn is_graded(&self) -> bool {
        match &self.kind {
            OrderKind::GradedLex | OrderKind::GradedReverseLex => true,
            OrderKind::Lex => false,
            // A uniform positive weight vector is total degree in disguise.
            OrderKind::Weighted { weights, .. } => {
                weights.iter().all(|&w| w == weights[0]) && weights[0] > 0
            }
        }
    }

    /// Compares two vectors under this order. Both must have dimension
    /// [`TermOrder::dim`].
    pub fn compare<T: Scalar>(&self, a: &GradedVector<T>, b: &GradedVector<T>) -> Ordering {
        self.compare_slices(a.coords(), b.coords())
    }

    /// Slice form of [`TermOrder::compare`], for callers that hold raw
    /// coordinate storage (e.g. blocks of a longer exponent vector).
    pub fn compare_slices<T: Scalar>(&self, a: &[T], b: &[T]) -> Ordering {
        debug_assert_eq!(a.len(), self.dim());
        debug_assert_eq!(b.len(), self.dim());
        match &self.kind {
            OrderKind::Lex => self.lex_on_view(a, b),
            OrderKind::GradedLex => total(a)
                .cmp(&total(b))
                .then_with(|| self.lex_on_view(a, b)),
            OrderKind::GradedReverseLex => total(a)
                .cmp(&total(b))
                .then_with(|| self.revlex_on_view(a, b)),
            OrderKind::Weighted { weights, tiebreak } => {
                let wa = self.weighted_total(weights, a);
                let wb = self.weighted_total(weights, b);
                wa.cmp(&wb).then_with(|| tiebreak.compare_slices(a, b))
            }
        }
    }

    /// Maximum of a nonempty iterator under this order.
    pub fn max_of<'v, T: Scalar>(
        &self,
        items: impl IntoIterator<Item = &'v GradedVector<T>>,
    ) -> Option<&'v GradedVector<T>> {
        items
            .into_iter()
            .max_by(|a, b| self.compare(a, b))
    }

    fn lex_on_view<T: Scalar>(&self, a: &[T], b: &[T]) -> Ordering {
        for &i in &self.permutation {
            let ord = a[i].cmp(&b[i]);
            if ord != Ordering::Equal {
                return ord;
            }
        }
        Ordering::Equal
    }

    fn revlex_on_view<T: Scalar>(&self, a: &[T], b: &[T]) -> Ordering {
        for &i in self.permutation.iter().rev() {
            let ord = a[i].cmp(&b[i]);
            if ord != Ordering::Equal {
                // Smaller trailing coordinate wins under reverse lex.
                return ord.reverse();
            }
        }
        Ordering::Equal
    }

    fn weighted_total<T: Scalar>(&self, weights: &[u64], v: &[T]) -> T {
        self.permutation
            .iter()
            .zip(weights.iter())
            .fold(T::zero(), |acc, (&i, &w)| {
                acc + v[i].clone() * T::from_u64(w).expect("weight fits scalar")
            })
    }
}

/// Total degree of a raw coordinate slice.
fn total<T: Scalar>(v: &[T]) -> T {
    v.iter().fold(T::zero(), |acc, c| acc + c.clone())
}
