//! Affine semigroups: construction, membership, factorizations.
//!
//! An affine semigroup here is a finitely generated submonoid S = ⟨a₁,…,aₙ⟩
//! of ℕ^d, always presented by its (unique) minimal generating set. The
//! constructor validates minimality — multiplicity e(S) = n, pseudo-Frobenius
//! counts and RF-matrix shapes all presuppose it — and caches two derived
//! structures used throughout the crate:
//!
//! * the facet system of cone(S) (exact Fourier–Motzkin, [`crate::cone`]),
//! * a Hermite-normal-form basis of the group G(S) = ℤ-span of the
//!   generators ([`crate::lattice`]).
//!
//! Membership b ∈ S is decided by the recursion "b = 0, or b − aⱼ ∈ S for
//! some j with b − aⱼ ∈ ℕ^d", memoized either sparsely ([`Membership`]) or
//! densely over a box ([`MembershipTable`]); both prune points outside
//! cone(S). Factorization enumeration is a depth-first search over exponent
//! vectors in input-generator order, so its output order is deterministic:
//! ascending lexicographic in the exponents. Several operations (RF-matrix
//! row choices in particular) document and rely on that order.

use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use thiserror::Error;

use crate::cone::{facet_system, FacetSystem};
use crate::lattice;
use crate::scalar::Scalar;
use crate::vector::GradedVector;

/// Ways a generator list can fail to define a minimally generated affine
/// semigroup.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemigroupError {
    /// No generators were given.
    #[error("a semigroup needs at least one generator")]
    EmptyGenerators,
    /// A generator's dimension differs from the first generator's.
    #[error("generator #{index} has dimension {got}, expected {expected}")]
    DimensionMismatch {
        index: usize,
        got: usize,
        expected: usize,
    },
    /// A generator has a negative coordinate, so it lies outside ℕ^d.
    #[error("generator #{index} has a negative coordinate")]
    NegativeGenerator { index: usize },
    /// The zero vector generates nothing and is never part of a minimal set.
    #[error("generator #{index} is zero")]
    ZeroGenerator { index: usize },
    /// The indicated generator is a ℕ-combination of the others.
    #[error("generating set is not minimal: generator #{index} is redundant")]
    NonMinimalGeneratingSet { index: usize },
}

/// A dense membership table would not fit in memory.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableError {
    /// The requested box has more cells than the configured maximum.
    #[error("membership box with {cells} cells exceeds the {limit} cell limit")]
    BoxTooLarge { cells: u128, limit: u128 },
    /// The bound has a negative coordinate.
    #[error("membership box bound must be componentwise nonnegative")]
    NegativeBound,
}

/// Finitely generated submonoid of ℕ^d with cached cone and group data.
#[derive(Debug)]
pub struct AffineSemigroup<T: Scalar> {
    generators: Vec<GradedVector<T>>,
    dim: usize,
    cone: FacetSystem<T>,
    group_basis: Vec<GradedVector<T>>,
    /// Facet systems of cone(aⱼ, …, aₙ) for each suffix, used to prune the
    /// factorization search; filled on first use.
    suffix_cones: OnceLock<Vec<FacetSystem<T>>>,
}

impl<T: Scalar> Clone for AffineSemigroup<T> {
    fn clone(&self) -> Self {
        AffineSemigroup {
            generators: self.generators.clone(),
            dim: self.dim,
            cone: self.cone.clone(),
            group_basis: self.group_basis.clone(),
            suffix_cones: OnceLock::new(),
        }
    }
}

impl<T: Scalar> PartialEq for AffineSemigroup<T> {
    fn eq(&self, other: &Self) -> bool {
        self.generators == other.generators
    }
}

impl<T: Scalar> Eq for AffineSemigroup<T> {}

impl<T: Scalar> AffineSemigroup<T> {
    /// Builds a semigroup from a **minimal** generating set, rejecting
    /// redundant generators (the reported index is a redundant one).
    pub fn new(generators: Vec<GradedVector<T>>) -> Result<Self, SemigroupError> {
        let s = Self::new_allowing_redundant(generators)?;
        for i in 0..s.generators.len() {
            let others: Vec<GradedVector<T>> = s
                .generators
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, g)| g.clone())
                .collect();
            if !others.is_empty() && member_over(&others, &s.generators[i]) {
                return Err(SemigroupError::NonMinimalGeneratingSet { index: i });
            }
        }
        Ok(s)
    }

    /// Builds a semigroup without the minimality check. Every documented
    /// invariant computation assumes minimal generators; this escape hatch is
    /// for intermediate constructions that guarantee minimality by other
    /// means (e.g. subsets of an already-minimal generating set).
    pub fn new_allowing_redundant(
        generators: Vec<GradedVector<T>>,
    ) -> Result<Self, SemigroupError> {
        if generators.is_empty() {
            return Err(SemigroupError::EmptyGenerators);
        }
        let dim = generators[0].dim();
        for (index, g) in generators.iter().enumerate() {
            if g.dim() != dim {
                return Err(SemigroupError::DimensionMismatch {
                    index,
                    got: g.dim(),
                    expected: dim,
                });
            }
            if !g.is_nonnegative() {
                return Err(SemigroupError::NegativeGenerator { index });
            }
            if g.is_zero() {
                return Err(SemigroupError::ZeroGenerator { index });
            }
        }
        let cone = facet_system(&generators);
        let group_basis = lattice::lattice_basis(&generators);
        Ok(AffineSemigroup {
            generators,
            dim,
            cone,
            group_basis,
            suffix_cones: OnceLock::new(),
        })
    }

    /// The minimal generators, in input order.
    pub fn generators(&self) -> &[GradedVector<T>] {
        &self.generators
    }

    /// Ambient dimension d.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of minimal generators n = e(S) (the multiplicity/embedding
    /// dimension of the MPD theory).
    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    /// Cached facet system of cone(S).
    pub fn cone(&self) -> &FacetSystem<T> {
        &self.cone
    }

    /// True iff b lies in the rational cone spanned by the generators.
    pub fn cone_contains(&self, b: &GradedVector<T>) -> bool {
        self.cone.contains(b)
    }

    /// Hermite-normal-form basis of the group G(S) ⊆ ℤ^d generated by S.
    pub fn group_basis(&self) -> &[GradedVector<T>] {
        &self.group_basis
    }

    /// Rank of G(S) (the integer-matrix rank of the generator matrix).
    pub fn group_rank(&self) -> usize {
        self.group_basis.len()
    }

    /// Componentwise sum of the generators, Σᵢ aᵢ — the degree shift that
    /// relates last Betti degrees b to pseudo-Frobenius elements b − Σᵢ aᵢ.
    pub fn generator_sum(&self) -> GradedVector<T> {
        crate::vector::sum_of(&self.generators, self.dim)
    }

    /// Componentwise maximum of the generators.
    pub fn generator_max(&self) -> GradedVector<T> {
        self.generators
            .iter()
            .fold(GradedVector::zeros(self.dim), |acc, g| acc.max_c(g))
    }

    /// The sub-semigroup generated by the chosen generator indices.
    ///
    /// A subset of a minimal generating set is minimal for the semigroup it
    /// generates (a redundancy among fewer generators would be one among
    /// all), so no re-validation is needed.
    pub fn restriction(&self, indices: &[usize]) -> AffineSemigroup<T> {
        let gens = indices
            .iter()
            .map(|&i| self.generators[i].clone())
            .collect();
        Self::new_allowing_redundant(gens)
            .expect("restriction of a valid generating set stays valid")
    }

    /// One-shot membership test; negative coordinates return false
    /// immediately. For repeated queries prefer [`AffineSemigroup::membership`]
    /// which keeps its memo across calls.
    pub fn contains(&self, b: &GradedVector<T>) -> bool {
        self.membership().contains(b)
    }

    /// A reusable memoized membership oracle.
    pub fn membership(&self) -> Membership<'_, T> {
        Membership {
            semigroup: self,
            memo: HashMap::new(),
        }
    }

    /// Dense membership table over the box [0, bound].
    pub fn membership_table(
        &self,
        bound: &GradedVector<T>,
    ) -> Result<MembershipTable, TableError> {
        MembershipTable::build(self, bound)
    }

    /// All factorizations of b over the generators: every m ∈ ℕⁿ with
    /// Σⱼ mⱼaⱼ = b, in ascending lexicographic order of the exponent vector.
    ///
    /// Depth-first search in input-generator order; the exponent of generator
    /// j is bounded by min over coordinates k with a_{j,k} > 0 of
    /// ⌊b_k/a_{j,k}⌋, and branches whose residual leaves ℕ^d or the cone of
    /// the remaining generators are pruned. The empty result is exactly the
    /// statement b ∉ S.
    pub fn factorizations(&self, b: &GradedVector<T>) -> Vec<GradedVector<T>> {
        let mut out = Vec::new();
        if b.dim() != self.dim || !b.is_nonnegative() || !self.cone.contains(b) {
            return out;
        }
        let mut exponents: Vec<T> = Vec::with_capacity(self.generators.len());
        self.factorization_dfs(0, b.clone(), &mut exponents, &mut out);
        out
    }

    fn factorization_dfs(
        &self,
        j: usize,
        residual: GradedVector<T>,
        exponents: &mut Vec<T>,
        out: &mut Vec<GradedVector<T>>,
    ) {
        let n = self.generators.len();
        if j + 1 == n {
            if let Some(m) = exact_multiple(&self.generators[j], &residual) {
                exponents.push(m);
                out.push(GradedVector::new(exponents.clone()));
                exponents.pop();
            }
            return;
        }
        let g = &self.generators[j];
        let bound = exponent_bound(g, &residual);
        let suffix = &self.suffix_cones()[j + 1];
        let mut m = T::zero();
        let mut r = residual;
        let mut was_inside = false;
        loop {
            // Membership of the residual in the suffix cone is an interval in
            // m (a line segment meets a convex cone in a segment), so after
            // leaving the cone once inside, no larger m can succeed.
            if suffix.contains(&r) {
                was_inside = true;
                exponents.push(m.clone());
                self.factorization_dfs(j + 1, r.clone(), exponents, out);
                exponents.pop();
            } else if was_inside {
                break;
            }
            if m == bound {
                break;
            }
            m += T::one();
            r = r.sub(g);
        }
    }

    fn suffix_cones(&self) -> &Vec<FacetSystem<T>> {
        self.suffix_cones.get_or_init(|| {
            (0..self.generators.len())
                .map(|j| facet_system(&self.generators[j..]))
                .collect()
        })
    }
}

impl<T: Scalar> fmt::Display for AffineSemigroup<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, "⟩")
    }
}

/// Largest m with m·g ≤ b componentwise (g ≠ 0, b ≥ 0).
fn exponent_bound<T: Scalar>(g: &GradedVector<T>, b: &GradedVector<T>) -> T {
    let mut bound: Option<T> = None;
    for (gk, bk) in g.iter().zip(b.iter()) {
        if gk.is_positive() {
            let q = bk.div_floor(gk);
            bound = Some(match bound {
                Some(cur) if cur <= q => cur,
                _ => q,
            });
        }
    }
    bound.expect("generators are nonzero")
}

/// The unique m ≥ 0 with m·g = b, if it exists.
fn exact_multiple<T: Scalar>(g: &GradedVector<T>, b: &GradedVector<T>) -> Option<T> {
    if b.is_zero() {
        return Some(T::zero());
    }
    let k = (0..g.dim()).find(|&k| !g.coord(k).is_zero())?;
    let (m, rem) = b.coord(k).div_rem(g.coord(k));
    if !rem.is_zero() || m.is_negative() {
        return None;
    }
    if g.scaled(&m) == *b {
        Some(m)
    } else {
        None
    }
}

/// Membership of `target` in the semigroup generated by `gens` (not
/// necessarily minimal); used by the constructor's minimality check, where no
/// [`AffineSemigroup`] for the subset exists yet.
fn member_over<T: Scalar>(gens: &[GradedVector<T>], target: &GradedVector<T>) -> bool {
    fn rec<T: Scalar>(
        gens: &[GradedVector<T>],
        b: &GradedVector<T>,
        memo: &mut HashMap<GradedVector<T>, bool>,
    ) -> bool {
        if b.is_zero() {
            return true;
        }
        if let Some(&known) = memo.get(b) {
            return known;
        }
        memo.insert(b.clone(), false); // cycle-safe: revisits read false
        let result = gens.iter().any(|g| {
            b.checked_sub_nonneg(g)
                .is_some_and(|r| rec(gens, &r, memo))
        });
        memo.insert(b.clone(), result);
        result
    }
    rec(gens, target, &mut HashMap::new())
}

/// Sparse memoized membership oracle for scattered queries.
pub struct Membership<'s, T: Scalar> {
    semigroup: &'s AffineSemigroup<T>,
    memo: HashMap<GradedVector<T>, bool>,
}

impl<T: Scalar> Membership<'_, T> {
    /// True iff b ∈ S. Points outside ℕ^d or cone(S) are rejected without
    /// recursion.
    pub fn contains(&mut self, b: &GradedVector<T>) -> bool {
        if b.dim() != self.semigroup.dim || !b.is_nonnegative() {
            return false;
        }
        self.contains_rec(b)
    }

    fn contains_rec(&mut self, b: &GradedVector<T>) -> bool {
        if b.is_zero() {
            return true;
        }
        if !self.semigroup.cone.contains(b) {
            return false;
        }
        if let Some(&known) = self.memo.get(b) {
            return known;
        }
        // Copy the semigroup reference out so the generator loop does not
        // hold a borrow of `self` across the recursive call.
        let s: &AffineSemigroup<T> = self.semigroup;
        let mut result = false;
        for g in &s.generators {
            if let Some(r) = b.checked_sub_nonneg(g) {
                if self.contains_rec(&r) {
                    result = true;
                    break;
                }
            }
        }
        self.memo.insert(b.clone(), result);
        result
    }
}

/// Dense membership table over a coordinate box [0, bound] ⊆ ℕ^d.
///
/// Cell (c₁,…,c_d) is true iff the point lies in S; the fill is a single
/// lexicographic sweep using `b ∈ S ⟺ b = 0 ∨ ∃j: b − aⱼ ∈ S`, with every
/// b − aⱼ visited before b.
pub struct MembershipTable {
    dims: Vec<usize>,
    strides: Vec<usize>,
    table: Vec<bool>,
}

impl MembershipTable {
    /// Cell-count guard: boxes beyond this are refused, not attempted.
    pub const MAX_CELLS: u128 = 400_000_000;

    fn build<T: Scalar>(
        s: &AffineSemigroup<T>,
        bound: &GradedVector<T>,
    ) -> Result<Self, TableError> {
        if !bound.is_nonnegative() {
            return Err(TableError::NegativeBound);
        }
        let dims: Vec<usize> = bound
            .as_indices()
            .ok_or(TableError::BoxTooLarge {
                cells: u128::MAX,
                limit: Self::MAX_CELLS,
            })?
            .into_iter()
            .map(|b| b + 1)
            .collect();
        let cells = dims.iter().map(|&x| x as u128).product::<u128>();
        if cells > Self::MAX_CELLS {
            return Err(TableError::BoxTooLarge {
                cells,
                limit: Self::MAX_CELLS,
            });
        }
        let cells = cells as usize;
        let mut strides = vec![1usize; dims.len()];
        for i in (0..dims.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * dims[i + 1];
        }
        // Generators as index offsets; those that fit in the box at all.
        let gen_offsets: Vec<(Vec<usize>, usize)> = s
            .generators()
            .iter()
            .filter_map(|g| {
                let idx = g.as_indices()?;
                if idx.iter().zip(&dims).all(|(gi, di)| gi < di) {
                    let off = idx.iter().zip(&strides).map(|(gi, st)| gi * st).sum();
                    Some((idx, off))
                } else {
                    None
                }
            })
            .collect();

        let mut table = vec![false; cells];
        let mut coords = vec![0usize; dims.len()];
        for idx in 0..cells {
            if idx == 0 {
                table[0] = true;
            } else {
                table[idx] = gen_offsets.iter().any(|(g, off)| {
                    coords.iter().zip(g).all(|(c, gi)| c >= gi) && table[idx - off]
                });
            }
            // Odometer increment of the multi-index.
            for i in (0..coords.len()).rev() {
                coords[i] += 1;
                if coords[i] < dims[i] {
                    break;
                }
                coords[i] = 0;
            }
        }
        Ok(MembershipTable {
            dims,
            strides,
            table,
        })
    }

    /// Membership for a point inside the box; `None` when the point has a
    /// negative coordinate or lies outside the box.
    pub fn contains<T: Scalar>(&self, b: &GradedVector<T>) -> Option<bool> {
        let idx = b.as_indices()?;
        if idx.iter().zip(&self.dims).any(|(c, d)| c >= d) {
            return None;
        }
        Some(self.table[self.linear_index(&idx)])
    }

    /// Membership by multi-index (must be within the box).
    pub fn contains_indices(&self, idx: &[usize]) -> bool {
        self.table[self.linear_index(idx)]
    }

    /// The box shape (each bound + 1).
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    fn linear_index(&self, idx: &[usize]) -> usize {
        idx.iter().zip(&self.strides).map(|(c, s)| c * s).sum()
    }
}
