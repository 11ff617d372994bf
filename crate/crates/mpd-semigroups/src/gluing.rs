//! Gluings of affine semigroups and the transfer of invariants across them.
//!
//! A semigroup `S = ⟨a_1, …, a_n⟩` is a *gluing* `S = S₁ +_d S₂` when the
//! generators split into two nonempty parts generating `S₁` and `S₂`, and
//! there is a common element `d ∈ S₁ ∩ S₂` whose multiples are exactly the
//! intersection of the two groups: `G(S₁) ∩ G(S₂) = dℤ`.
//!
//! Gluings compose invariants:
//!
//! * the pseudo-Frobenius set is the sumset
//!   `PF(S) = {f₁ + f₂ + d : f₁ ∈ PF(S₁), f₂ ∈ PF(S₂)}`, so its size
//!   multiplies ([`pf_of_gluing`]);
//! * RF-matrices assemble blockwise: component RF-matrices sit on the
//!   diagonal and the off-diagonal blocks repeat factorizations of
//!   `f₂ + d` and `f₁ + d` ([`rf_of_gluing`]);
//! * when both component toric ideals are generated by RF-relations, so is
//!   the toric ideal of `S`: the only new minimal generator is the bridging
//!   binomial `x^α - x^β` (with `α`, `β` factorizations of `d` in `S₁` and
//!   `S₂`), and it arises as an RF-relation of `f₁ + f₂ + d`. The witness
//!   rows certifying this are searched by [`rf_generation_transfer`].
//!
//! A free component on a single generator `⟨a⟩` has no pseudo-Frobenius
//! element in the literal sense; following the classical rank-one
//! convention `F(ℕ) = -1`, it contributes the shift `-a`. Free components
//! on several generators admit no such convention and are rejected.

use thiserror::Error;

use crate::gaps::{pseudo_frobenius, EnumerationStatus, PfMethod, PfSet};
use crate::lattice::{lattice_basis, left_kernel, rows_from_vectors, Matrix};
use crate::rf::{generated_by_rf, rf_matrix, RFMatrix, RfError, RfGeneration};
use crate::scalar::Scalar;
use crate::semigroup::AffineSemigroup;
use crate::toric::{exponent_degree, Binomial};
use crate::vector::GradedVector;

/// Largest number of generators for which [`find_gluings`] enumerates all
/// `2^{n-1} - 1` bipartitions.
pub const MAX_GLUING_GENERATORS: usize = 15;

/// Errors from gluing decompositions and transfers.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum GluingError {
    /// Both sides of the generator partition must be nonempty.
    #[error("both sides of the partition must be nonempty")]
    NonTrivialPartitionRequired,
    /// A partition index was out of range or listed twice.
    #[error("partition index {0} is out of range or repeated")]
    InvalidPartitionIndex(usize),
    /// The bipartition search is capped at [`MAX_GLUING_GENERATORS`].
    #[error("{0} generators exceed the bipartition search budget of 2^14 partitions")]
    TooManyGenerators(usize),
    /// The proposed partition and common element do not satisfy the gluing
    /// conditions.
    #[error("the partition and common element do not form a gluing")]
    NotAGluing,
    /// A component's pseudo-Frobenius set could not be certified complete.
    #[error("component {0} has an uncertified pseudo-Frobenius set")]
    UncertifiedComponentPF(usize),
    /// A free component on several generators has no pseudo-Frobenius
    /// convention to contribute.
    #[error("component {0} is free on several generators; no pseudo-Frobenius shift applies")]
    UnsupportedFreeComponent(usize),
    /// The transfer hypothesis asks every component toric ideal to be
    /// generated by its RF-relations.
    #[error("component {0} is not generated by its RF-relations")]
    ComponentNotRFGenerated(usize),
    /// No pair of component rows absorbs a factorization of `d`.
    #[error("no transfer witness rows exist")]
    NoTransferWitness,
    /// An RF-matrix step on a component or on the glued semigroup failed.
    #[error(transparent)]
    Rf(#[from] RfError),
}

/// A verified gluing `S = S₁ +_d S₂`: the generator indices of each side,
/// the common element `d`, and the two component semigroups.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GluingDecomposition<T: Scalar> {
    left: Vec<usize>,
    right: Vec<usize>,
    d: GradedVector<T>,
    s1: AffineSemigroup<T>,
    s2: AffineSemigroup<T>,
}

impl<T: Scalar> GluingDecomposition<T> {
    /// Generator indices of the left component, ascending.
    pub fn left_indices(&self) -> &[usize] {
        &self.left
    }

    /// Generator indices of the right component, ascending.
    pub fn right_indices(&self) -> &[usize] {
        &self.right
    }

    /// The common element with `G(S₁) ∩ G(S₂) = dℤ`.
    pub fn d(&self) -> &GradedVector<T> {
        &self.d
    }

    /// The left component `S₁`.
    pub fn left_component(&self) -> &AffineSemigroup<T> {
        &self.s1
    }

    /// The right component `S₂`.
    pub fn right_component(&self) -> &AffineSemigroup<T> {
        &self.s2
    }
}

/// Splits `left` against the full index range, validating that it names a
/// nontrivial bipartition. Returns both sides sorted ascending.
fn split_partition<T: Scalar>(
    s: &AffineSemigroup<T>,
    left: &[usize],
) -> Result<(Vec<usize>, Vec<usize>), GluingError> {
    let n = s.num_generators();
    let mut seen = vec![false; n];
    for &i in left {
        if i >= n || seen[i] {
            return Err(GluingError::InvalidPartitionIndex(i));
        }
        seen[i] = true;
    }
    let left_sorted: Vec<usize> = (0..n).filter(|&i| seen[i]).collect();
    let right: Vec<usize> = (0..n).filter(|&i| !seen[i]).collect();
    if left_sorted.is_empty() || right.is_empty() {
        return Err(GluingError::NonTrivialPartitionRequired);
    }
    Ok((left_sorted, right))
}

/// Basis of the intersection of the lattices spanned by the two row sets.
///
/// A vector lies in both lattices exactly when it is `u·B₁ = -w·B₂` for a
/// row `(u | w)` of the left kernel of the stacked matrix `[B₁; B₂]`, so
/// the images of the kernel rows through `B₁` generate the intersection.
fn lattice_intersection<T: Scalar>(
    b1: &[GradedVector<T>],
    b2: &[GradedVector<T>],
) -> Vec<GradedVector<T>> {
    if b1.is_empty() || b2.is_empty() {
        return Vec::new();
    }
    let mut stacked: Matrix<T> = rows_from_vectors(b1);
    stacked.extend(rows_from_vectors(b2));
    let kernel = left_kernel(&stacked);
    let dim = b1[0].dim();
    let images: Vec<GradedVector<T>> = kernel
        .iter()
        .map(|row| {
            let mut x = GradedVector::zeros(dim);
            for (basis_row, c) in b1.iter().zip(row.iter()) {
                if !c.is_zero() {
                    x = x.add(&basis_row.scaled(c));
                }
            }
            x
        })
        .collect();
    lattice_basis(&images)
}

/// Whether `d` is a gluing element for the two components: nonzero, in
/// both semigroups, and a generator of `G(S₁) ∩ G(S₂)`.
fn is_gluing_common_element<T: Scalar>(
    s1: &AffineSemigroup<T>,
    s2: &AffineSemigroup<T>,
    d: &GradedVector<T>,
) -> bool {
    if d.is_zero() || !s1.contains(d) || !s2.contains(d) {
        return false;
    }
    let inter = lattice_intersection(s1.group_basis(), s2.group_basis());
    inter.len() == 1 && (&inter[0] == d || inter[0] == GradedVector::zeros(d.dim()).sub(d))
}

/// Checks the gluing conditions for the bipartition whose left side is
/// `left` (the right side is the complement) and the common element `d`.
pub fn verify_gluing<T: Scalar>(
    s: &AffineSemigroup<T>,
    left: &[usize],
    d: &GradedVector<T>,
) -> Result<bool, GluingError> {
    let (left, right) = split_partition(s, left)?;
    Ok(is_gluing_common_element(
        &s.restriction(&left),
        &s.restriction(&right),
        d,
    ))
}

/// Builds the verified decomposition for an explicit partition and common
/// element, or reports that they do not glue.
pub fn decompose<T: Scalar>(
    s: &AffineSemigroup<T>,
    left: &[usize],
    d: &GradedVector<T>,
) -> Result<GluingDecomposition<T>, GluingError> {
    let (left, right) = split_partition(s, left)?;
    let s1 = s.restriction(&left);
    let s2 = s.restriction(&right);
    if !is_gluing_common_element(&s1, &s2, d) {
        return Err(GluingError::NotAGluing);
    }
    Ok(GluingDecomposition {
        left,
        right,
        d: d.clone(),
        s1,
        s2,
    })
}

/// Enumerates every gluing decomposition of `S`.
///
/// All `2^{n-1} - 1` bipartitions are tried (the first generator stays on
/// the left, so each unordered partition appears once, in ascending order
/// of the right-side membership mask). For each, the intersection lattice
/// of the component groups is computed; a gluing needs it to have rank
/// one with its canonical generator lying in both components.
pub fn find_gluings<T: Scalar>(
    s: &AffineSemigroup<T>,
) -> Result<Vec<GluingDecomposition<T>>, GluingError> {
    let n = s.num_generators();
    if n > MAX_GLUING_GENERATORS {
        return Err(GluingError::TooManyGenerators(n));
    }
    let mut out = Vec::new();
    for mask in 0usize..(1usize << (n - 1)) {
        let left: Vec<usize> = std::iter::once(0)
            .chain((1..n).filter(|i| mask & (1 << (i - 1)) != 0))
            .collect();
        let right: Vec<usize> = (1..n).filter(|i| mask & (1 << (i - 1)) == 0).collect();
        if right.is_empty() {
            continue;
        }
        let s1 = s.restriction(&left);
        let s2 = s.restriction(&right);
        let inter = lattice_intersection(s1.group_basis(), s2.group_basis());
        if inter.len() != 1 {
            continue;
        }
        let mut d = inter[0].clone();
        if let Some(first) = d.iter().find(|c| !c.is_zero()) {
            if first < &T::zero() {
                d = GradedVector::zeros(d.dim()).sub(&d);
            }
        }
        if !d.is_nonnegative() || !s1.contains(&d) || !s2.contains(&d) {
            continue;
        }
        out.push(GluingDecomposition {
            left,
            right,
            d,
            s1,
            s2,
        });
    }
    Ok(out)
}

/// The pseudo-Frobenius contribution of one component: either a certified
/// pseudo-Frobenius set, or the rank-one free shift `-a`.
enum ComponentPf<T: Scalar> {
    Free(GradedVector<T>),
    Mpd(PfSet<T>),
}

impl<T: Scalar> ComponentPf<T> {
    fn elements(&self) -> &[GradedVector<T>] {
        match self {
            ComponentPf::Free(shift) => std::slice::from_ref(shift),
            ComponentPf::Mpd(pf) => pf.elements(),
        }
    }
}

/// Whether the generators are ℤ-linearly independent, i.e. the toric ideal
/// is zero and the semigroup free.
fn is_free<T: Scalar>(s: &AffineSemigroup<T>) -> bool {
    s.group_rank() == s.num_generators()
}

fn component_pf<T: Scalar>(
    comp: &AffineSemigroup<T>,
    which: usize,
) -> Result<ComponentPf<T>, GluingError> {
    if is_free(comp) {
        if comp.num_generators() == 1 {
            let shift = GradedVector::zeros(comp.dim()).sub(&comp.generator_sum());
            Ok(ComponentPf::Free(shift))
        } else {
            Err(GluingError::UnsupportedFreeComponent(which))
        }
    } else {
        let pf = pseudo_frobenius(comp);
        if pf.is_certified() {
            Ok(ComponentPf::Mpd(pf))
        } else {
            Err(GluingError::UncertifiedComponentPF(which))
        }
    }
}

/// The pseudo-Frobenius set of a glued semigroup, composed from its parts:
/// `PF(S) = {f₁ + f₂ + d : f₁ ∈ PF(S₁), f₂ ∈ PF(S₂)}`.
///
/// In particular `|PF(S)| = |PF(S₁)| · |PF(S₂)|`, so the type of a gluing
/// multiplies. Components must have certified pseudo-Frobenius sets; a
/// free component on one generator contributes its shift `-a`.
pub fn pf_of_gluing<T: Scalar>(
    dec: &GluingDecomposition<T>,
) -> Result<PfSet<T>, GluingError> {
    let pf1 = component_pf(&dec.s1, 1)?;
    let pf2 = component_pf(&dec.s2, 2)?;
    let mut elements = Vec::new();
    for f1 in pf1.elements() {
        for f2 in pf2.elements() {
            let f = f1.add(f2).add(&dec.d);
            debug_assert!(f.is_nonnegative(), "composed pseudo-Frobenius element must be a gap");
            elements.push(f);
        }
    }
    elements.sort();
    elements.dedup();
    Ok(PfSet::assemble(
        elements,
        PfMethod::GluingComposition,
        EnumerationStatus::CertifiedComplete,
    ))
}

/// Scatters a component-coordinate vector into the ambient exponent space.
fn scatter<T: Scalar>(n: usize, indices: &[usize], comp: &GradedVector<T>) -> GradedVector<T> {
    let mut coords = vec![T::zero(); n];
    for (k, &j) in indices.iter().enumerate() {
        coords[j] = comp.coord(k).clone();
    }
    GradedVector::new(coords)
}

/// The block RF-matrix of `f = f₁ + f₂ + d` assembled from component data.
///
/// Rows indexed by the left part place the canonical RF-matrix of `f₁` on
/// the left block and repeat the first factorization of `f₂ + d` on the
/// right; rows indexed by the right part repeat the first factorization of
/// `f₁ + d` on the left and place the canonical RF-matrix of `f₂` on the
/// right. Every row is revalidated against the glued semigroup.
pub fn rf_of_gluing<T: Scalar>(
    s: &AffineSemigroup<T>,
    dec: &GluingDecomposition<T>,
    f1: &GradedVector<T>,
    f2: &GradedVector<T>,
) -> Result<RFMatrix<T>, GluingError> {
    let n = s.num_generators();
    let rf1 = rf_matrix(&dec.s1, f1)?;
    let rf2 = rf_matrix(&dec.s2, f2)?;
    let lift2 = dec
        .s2
        .factorizations(&f2.add(&dec.d))
        .into_iter()
        .next()
        .expect("f₂ + d lies in S₂ because d does and f₂ is pseudo-Frobenius");
    let lift1 = dec
        .s1
        .factorizations(&f1.add(&dec.d))
        .into_iter()
        .next()
        .expect("f₁ + d lies in S₁ because d does and f₁ is pseudo-Frobenius");
    let mut rows = vec![GradedVector::zeros(n); n];
    for (p, &i) in dec.left.iter().enumerate() {
        rows[i] = scatter(n, &dec.left, rf1.row(p)).add(&scatter(n, &dec.right, &lift2));
    }
    for (q, &j) in dec.right.iter().enumerate() {
        rows[j] = scatter(n, &dec.left, &lift1).add(&scatter(n, &dec.right, rf2.row(q)));
    }
    let f = f1.add(f2).add(&dec.d);
    RFMatrix::new(s, &f, rows).map_err(Into::into)
}

/// A pair of component RF-matrix rows that absorb factorizations of `d`.
///
/// `left_row + α ≥ 0` for a factorization `α` of `d` in `S₁` makes
/// `left_lift = left_row + α` a factorization of `left_pf + d`, and
/// symmetrically on the right. Such a pair certifies that the bridging
/// binomial of the gluing appears, after cancellation, as an RF-relation
/// of `left_pf + right_pf + d`, so RF-generation transfers from the
/// components to the glued semigroup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransferWitness<T: Scalar> {
    /// The left pseudo-Frobenius element (or free shift) used.
    pub left_pf: GradedVector<T>,
    /// A row of an RF-matrix of `left_pf`, in left-component coordinates.
    pub left_row: GradedVector<T>,
    /// `left_row + α`: the certified factorization of `left_pf + d`.
    pub left_lift: GradedVector<T>,
    /// The right pseudo-Frobenius element (or free shift) used.
    pub right_pf: GradedVector<T>,
    /// A row of an RF-matrix of `right_pf`, in right-component coordinates.
    pub right_row: GradedVector<T>,
    /// `right_row + β`: the certified factorization of `right_pf + d`.
    pub right_lift: GradedVector<T>,
}

/// Result of a successful RF-generation transfer across a gluing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransferReport<T: Scalar> {
    /// The bridging binomial `x^α - x^β` built from the first
    /// factorizations of `d` in the two components, in ambient exponents.
    pub bridge: Binomial<T>,
    /// Every witness pair, in deterministic search order.
    pub witnesses: Vec<TransferWitness<T>>,
}

impl<T: Scalar> TransferReport<T> {
    /// The first witness in search order.
    pub fn first(&self) -> &TransferWitness<T> {
        &self.witnesses[0]
    }
}

/// One side's witness candidates: rows of RF-matrices of the component's
/// pseudo-Frobenius elements whose diagonal deficit is absorbed by a
/// factorization of `d`.
struct SideCandidate<T: Scalar> {
    f: GradedVector<T>,
    row: GradedVector<T>,
    lift: GradedVector<T>,
}

fn side_candidates<T: Scalar>(
    comp: &AffineSemigroup<T>,
    elements: &[GradedVector<T>],
    d: &GradedVector<T>,
) -> Vec<SideCandidate<T>> {
    let alphas = comp.factorizations(d);
    let mut out: Vec<SideCandidate<T>> = Vec::new();
    for f in elements {
        for (i, a) in comp.generators().iter().enumerate() {
            for p in comp.factorizations(&f.add(a)) {
                let mut coords: Vec<T> = p.iter().cloned().collect();
                coords[i] = coords[i].clone() - T::one();
                let row = GradedVector::new(coords);
                for alpha in &alphas {
                    if alpha.coord(i) > &T::zero() {
                        let lift = row.add(alpha);
                        debug_assert!(lift.is_nonnegative());
                        debug_assert_eq!(exponent_degree(comp, &lift), f.add(d));
                        let duplicate = out.iter().any(|c| {
                            &c.f == f && c.row == row && c.lift == lift
                        });
                        if !duplicate {
                            out.push(SideCandidate {
                                f: f.clone(),
                                row: row.clone(),
                                lift,
                            });
                        }
                    }
                }
            }
        }
    }
    out
}

/// Transfers RF-generation across a gluing.
///
/// Both component toric ideals must be generated by their RF-relations
/// (a free component is vacuously so). The search then lists every pair
/// of component RF-matrix rows absorbing a factorization of `d` — each
/// pair witnesses that the bridging binomial is an RF-relation of the
/// glued element `f₁ + f₂ + d`, which together with the component
/// relations generates the whole toric ideal of `S`.
pub fn rf_generation_transfer<T: Scalar>(
    s: &AffineSemigroup<T>,
    dec: &GluingDecomposition<T>,
) -> Result<TransferReport<T>, GluingError> {
    let mut sides: Vec<Vec<SideCandidate<T>>> = Vec::with_capacity(2);
    for (which, comp) in [(1usize, &dec.s1), (2usize, &dec.s2)] {
        let pf = component_pf(comp, which)?;
        if let ComponentPf::Mpd(ref set) = pf {
            match generated_by_rf(comp, set)? {
                RfGeneration::Generated | RfGeneration::VacuouslyGenerated => {}
                RfGeneration::NotGenerated { .. } => {
                    return Err(GluingError::ComponentNotRFGenerated(which));
                }
            }
        }
        sides.push(side_candidates(comp, pf.elements(), &dec.d));
    }
    let n = s.num_generators();
    let alpha = dec
        .s1
        .factorizations(&dec.d)
        .into_iter()
        .next()
        .expect("d lies in S₁");
    let beta = dec
        .s2
        .factorizations(&dec.d)
        .into_iter()
        .next()
        .expect("d lies in S₂");
    let bridge = Binomial::new(
        s,
        &scatter(n, &dec.left, &alpha),
        &scatter(n, &dec.right, &beta),
    )
    .expect("both monomials express d");
    let mut witnesses = Vec::new();
    for c1 in &sides[0] {
        for c2 in &sides[1] {
            witnesses.push(TransferWitness {
                left_pf: c1.f.clone(),
                left_row: c1.row.clone(),
                left_lift: c1.lift.clone(),
                right_pf: c2.f.clone(),
                right_row: c2.row.clone(),
                right_lift: c2.lift.clone(),
            });
        }
    }
    if witnesses.is_empty() {
        return Err(GluingError::NoTransferWitness);
    }
    Ok(TransferReport { bridge, witnesses })
}
