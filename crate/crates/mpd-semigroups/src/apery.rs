//! Apéry sets of affine semigroups, enumerated by a certifying search.
//!
//! The Apéry set of `S` relative to `x ∈ S ∖ {0}` is
//! `Ap(S, x) = {y ∈ S : y - x ∉ S}`. It is downward closed under the order
//! `z ≤_S y ⟺ y - z ∈ S`: if `y - x ∉ S` and `z ≤_S y`, then `z - x ∈ S`
//! would force `y - x = (z - x) + (y - z) ∈ S`. Every nonzero `y ∈ Ap(S, x)`
//! therefore stays inside the set while any generator with `y - a_j ∈ S` is
//! subtracted, so a breadth-first search from `0` that only crosses edges
//! `y → y + a_j` staying in the set reaches all of it. When the search
//! frontier exhausts, the enumeration is *certified complete*; Apéry sets of
//! genuinely affine semigroups can be infinite, so the search carries a node
//! budget and reports an honest failure when it is exceeded.
//!
//! Intersections `∩_i Ap(S, x_i)` are downward closed for the same reason
//! and are enumerated by the same search with the conjunction predicate;
//! they are the route to quasi-Frobenius elements of simplicial semigroups,
//! where single Apéry sets are typically infinite but the intersection over
//! the extremal rays is finite.
//!
//! The strict-gap variant keeps only the members whose defect `y - x` is an
//! actual gap (a nonnegative cone point outside `S`), discarding those where
//! `y - x` already fails nonnegativity or leaves the cone.

use std::collections::{HashSet, VecDeque};

use thiserror::Error;

use crate::scalar::Scalar;
use crate::semigroup::AffineSemigroup;
use crate::vector::GradedVector;

/// Default node budget for the Apéry search.
pub const DEFAULT_APERY_NODE_BUDGET: usize = 1 << 20;

/// Errors from Apéry-set enumeration.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum AperyError {
    /// The base point must be a nonzero element of the semigroup.
    #[error("the Apéry base point {0} is not a nonzero element of the semigroup")]
    XNotInSemigroup(String),
    /// The search exceeded its node budget before the frontier exhausted;
    /// the set may be infinite.
    #[error("Apéry enumeration exceeded its budget of {budget} nodes; the set may be infinite")]
    UncertifiedApery { budget: usize },
}

/// Which members of the Apéry set to report.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AperyStyle {
    /// All of `{y ∈ S : y - x ∉ S}`.
    Classical,
    /// Only the members whose defect `y - x` is a gap of `S` (a nonnegative
    /// cone point outside the semigroup).
    StrictGap,
}

fn certified_downward_closed_search<T: Scalar>(
    s: &AffineSemigroup<T>,
    budget: usize,
    mut keep: impl FnMut(&GradedVector<T>) -> bool,
) -> Result<Vec<GradedVector<T>>, AperyError> {
    let mut seen: HashSet<GradedVector<T>> = HashSet::new();
    let mut queue: VecDeque<GradedVector<T>> = VecDeque::new();
    let zero = GradedVector::zeros(s.dim());
    if !keep(&zero) {
        return Ok(Vec::new());
    }
    seen.insert(zero.clone());
    queue.push_back(zero);
    while let Some(y) = queue.pop_front() {
        for a in s.generators() {
            let next = y.add(a);
            if seen.contains(&next) || !keep(&next) {
                continue;
            }
            if seen.len() >= budget {
                return Err(AperyError::UncertifiedApery { budget });
            }
            seen.insert(next.clone());
            queue.push_back(next);
        }
    }
    let mut out: Vec<GradedVector<T>> = seen.into_iter().collect();
    out.sort();
    Ok(out)
}

/// Enumerates `Ap(S, x)` with a certifying search. `budget` defaults to
/// [`DEFAULT_APERY_NODE_BUDGET`]; exceeding it yields
/// [`AperyError::UncertifiedApery`] rather than a silently truncated set.
pub fn apery_set<T: Scalar>(
    s: &AffineSemigroup<T>,
    x: &GradedVector<T>,
    style: AperyStyle,
    budget: Option<usize>,
) -> Result<Vec<GradedVector<T>>, AperyError> {
    if x.is_zero() || !s.contains(x) {
        return Err(AperyError::XNotInSemigroup(x.to_string()));
    }
    let budget = budget.unwrap_or(DEFAULT_APERY_NODE_BUDGET);
    let mut membership = s.membership();
    // A defect that fails nonnegativity is certainly outside S.
    let classical = certified_downward_closed_search(s, budget, |y| {
        y.checked_sub_nonneg(x)
            .map_or(true, |diff| !membership.contains(&diff))
    })?;
    match style {
        AperyStyle::Classical => Ok(classical),
        AperyStyle::StrictGap => {
            let mut membership = s.membership();
            Ok(classical
                .into_iter()
                .filter(|y| {
                    y.checked_sub_nonneg(x).map_or(false, |diff| {
                        s.cone_contains(&diff) && !membership.contains(&diff)
                    })
                })
                .collect())
        }
    }
}

/// Enumerates `∩_i Ap(S, x_i)` with the same certifying search.
pub fn apery_intersection<T: Scalar>(
    s: &AffineSemigroup<T>,
    xs: &[GradedVector<T>],
    budget: Option<usize>,
) -> Result<Vec<GradedVector<T>>, AperyError> {
    for x in xs {
        if x.is_zero() || !s.contains(x) {
            return Err(AperyError::XNotInSemigroup(x.to_string()));
        }
    }
    let budget = budget.unwrap_or(DEFAULT_APERY_NODE_BUDGET);
    let mut membership = s.membership();
    certified_downward_closed_search(s, budget, |y| {
        xs.iter().all(|x| {
            y.checked_sub_nonneg(x)
                .map_or(true, |diff| !membership.contains(&diff))
        })
    })
}
