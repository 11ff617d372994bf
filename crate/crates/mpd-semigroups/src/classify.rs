//! Symmetry classification, a Wilf-style inequality, and quasi-Frobenius
//! elements of C-semigroups.
//!
//! Let `S` be a C-semigroup with gap set `H(S)` and Frobenius element
//! `F = max_≺ H(S)`. The involution `z ↦ F - z` pairs gaps with semigroup
//! elements below `F`; how far the pairing succeeds stratifies `S`:
//!
//! * **symmetric** — every gap `g` has `F - g ∈ S`;
//! * **pseudo-symmetric** — every gap pairs except the single gap `F/2`;
//! * **almost symmetric** — every unpaired gap is pseudo-Frobenius;
//! * otherwise the semigroup carries no of these symmetries.
//!
//! The Wilf-style check compares the count of semigroup elements preceding
//! `F` against the size of the whole cone region up to `F`: writing
//! `n = |{s ∈ S : s ≺ F}|` and `𝒩 = |{x ∈ cone(S) ∩ ℕ^d : x ⪯ F}|`
//! (so `𝒩 = |H(S)| + n`), the inequality `e(S) · n ≥ 𝒩` generalizes the
//! numerical statement `e(S) · n(F) ≥ F + 1`. It is stated for graded
//! term orders, where every point weakly preceding `F` lives in the box of
//! side `total(F)`.
//!
//! Quasi-Frobenius elements generalize the Frobenius element to simplicial
//! semigroups whose extremal rays each carry exactly one minimal generator
//! `r_1, …, r_d`: the set
//! `QF(S) = {w - (r_1 + … + r_d) : w maximal in ∩_i Ap(S, r_i) under ≤_S}`
//! collects the shifted maxima of the intersection of the ray Apéry sets.
//! For a symmetric numerical semigroup this recovers `{F(S)}`.

use std::cmp::Ordering;

use thiserror::Error;

use crate::apery::{apery_intersection, AperyError};
use crate::gaps::{gaps, pseudo_frobenius, scan_box, PfSet};
use crate::lattice;
use crate::order::TermOrder;
use crate::scalar::{int, to_index, Scalar};
use crate::semigroup::AffineSemigroup;
use crate::vector::GradedVector;

/// Errors from classification queries.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ClassifyError {
    /// The gap set could not be certified finite.
    #[error("the gap set is not certified finite; the semigroup may not be a C-semigroup")]
    NotCSemigroup,
    /// The gap set is empty, so no Frobenius element exists.
    #[error("the gap set is empty; no Frobenius element exists")]
    NoFrobeniusElement,
    /// The Wilf-style count is stated for graded term orders only.
    #[error("this check is stated for graded term orders only")]
    NonGradedOrder,
    /// Quasi-Frobenius elements need a simplicial cone with exactly one
    /// minimal generator on each extremal ray.
    #[error("the cone is not simplicial with one minimal generator per extremal ray")]
    NotSimplicial,
    /// An Apéry enumeration exhausted its node budget.
    #[error("Apéry enumeration exceeded its budget of {budget} nodes")]
    UncertifiedApery {
        /// The budget that was exhausted.
        budget: usize,
    },
}

/// The symmetry stratum of a C-semigroup.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SymmetryClass {
    /// Every gap `g` pairs: `F - g ∈ S`.
    Symmetric,
    /// Every gap pairs except the single gap `F/2`.
    PseudoSymmetric,
    /// Every unpaired gap is pseudo-Frobenius.
    AlmostSymmetric,
    /// None of the above.
    None,
}

/// Outcome of [`classify_symmetry`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetryReport<T: Scalar> {
    /// The stratum reached by the gap pairing.
    pub classification: SymmetryClass,
    /// The Frobenius element `max_≺ H(S)` used for the pairing.
    pub frobenius: GradedVector<T>,
    /// The certified pseudo-Frobenius set.
    pub pf: PfSet<T>,
    /// The gaps `g` with `F - g ∉ S`, ascending; empty exactly for
    /// symmetric semigroups.
    pub unpaired: Vec<GradedVector<T>>,
}

/// Classifies a C-semigroup by how completely `z ↦ F - z` pairs its gaps
/// with semigroup elements.
///
/// `F` is the `≺`-maximal gap. A gap `g` is *unpaired* when `F - g`
/// either leaves `ℕ^d` or lands in another gap. No unpaired gap means
/// symmetric; exactly the middle gap `F/2` unpaired means
/// pseudo-symmetric; all unpaired gaps pseudo-Frobenius means almost
/// symmetric.
pub fn classify_symmetry<T: Scalar>(
    s: &AffineSemigroup<T>,
    order: &TermOrder,
) -> Result<SymmetryReport<T>, ClassifyError> {
    assert_eq!(
        order.dim(),
        s.dim(),
        "term order must match the ambient dimension"
    );
    let gap_set = gaps(s, None);
    if !gap_set.is_certified() {
        return Err(ClassifyError::NotCSemigroup);
    }
    if gap_set.elements().is_empty() {
        return Err(ClassifyError::NoFrobeniusElement);
    }
    let frobenius = order
        .max_of(gap_set.elements())
        .expect("gap set is nonempty")
        .clone();
    let pf = pseudo_frobenius(s);
    debug_assert!(pf.is_certified(), "certified gaps give certified maximals");
    let mut membership = s.membership();
    let unpaired: Vec<GradedVector<T>> = gap_set
        .elements()
        .iter()
        .filter(|g| {
            frobenius
                .checked_sub_nonneg(g)
                .map_or(true, |diff| !membership.contains(&diff))
        })
        .cloned()
        .collect();
    let classification = if unpaired.is_empty() {
        SymmetryClass::Symmetric
    } else if unpaired.len() == 1 && unpaired[0].add(&unpaired[0]) == frobenius {
        SymmetryClass::PseudoSymmetric
    } else if unpaired.iter().all(|g| pf.elements().contains(g)) {
        SymmetryClass::AlmostSymmetric
    } else {
        SymmetryClass::None
    };
    Ok(SymmetryReport {
        classification,
        frobenius,
        pf,
        unpaired,
    })
}

/// Outcome of [`wilf_check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WilfReport<T: Scalar> {
    /// The Frobenius element `max_≺ H(S)`.
    pub frobenius: GradedVector<T>,
    /// `|H(S)|`.
    pub gap_count: usize,
    /// `n = |{s ∈ S : s ≺ F}|`.
    pub below: usize,
    /// `𝒩 = |{x ∈ cone(S) ∩ ℕ^d : x ⪯ F}| = gap_count + below`.
    pub region: usize,
    /// Whether `e(S) · below ≥ region`.
    pub holds: bool,
}

/// Evaluates the Wilf-style inequality `e(S) · n ≥ 𝒩` for a graded term
/// order, where `n` counts semigroup elements strictly preceding the
/// Frobenius element and `𝒩` counts all cone lattice points weakly
/// preceding it.
pub fn wilf_check<T: Scalar>(
    s: &AffineSemigroup<T>,
    order: &TermOrder,
) -> Result<WilfReport<T>, ClassifyError> {
    assert_eq!(
        order.dim(),
        s.dim(),
        "term order must match the ambient dimension"
    );
    if !order.is_graded() {
        return Err(ClassifyError::NonGradedOrder);
    }
    let gap_set = gaps(s, None);
    if !gap_set.is_certified() {
        return Err(ClassifyError::NotCSemigroup);
    }
    if gap_set.elements().is_empty() {
        return Err(ClassifyError::NoFrobeniusElement);
    }
    let frobenius = order
        .max_of(gap_set.elements())
        .expect("gap set is nonempty")
        .clone();
    // For a graded order, x ⪯ F forces total(x) ≤ total(F), so the box of
    // side total(F) sweeps the whole region.
    let side = to_index(&frobenius.total()).expect("Frobenius total fits the addressable range");
    let dims = vec![side + 1; s.dim()];
    let mut membership = s.membership();
    let mut below = 0usize;
    let mut gaps_seen = 0usize;
    scan_box(&dims, |idx| {
        if idx.iter().sum::<usize>() > side {
            return;
        }
        let x = GradedVector::new(
            idx.iter()
                .map(|&k| int::<T>(k as i64))
                .collect::<Vec<T>>(),
        );
        match order.compare(&x, &frobenius) {
            Ordering::Less => {
                if membership.contains(&x) {
                    below += 1;
                } else if s.cone_contains(&x) {
                    gaps_seen += 1;
                }
            }
            Ordering::Equal => gaps_seen += 1,
            Ordering::Greater => {}
        }
    });
    assert_eq!(
        gaps_seen,
        gap_set.elements().len(),
        "every gap weakly precedes the Frobenius element"
    );
    let region = gap_set.elements().len() + below;
    let holds = s.num_generators() * below >= region;
    Ok(WilfReport {
        frobenius,
        gap_count: gap_set.elements().len(),
        below,
        region,
        holds,
    })
}

/// Whether two nonzero vectors span the same ray.
fn parallel<T: Scalar>(a: &GradedVector<T>, b: &GradedVector<T>) -> bool {
    let d = a.dim();
    for i in 0..d {
        for j in (i + 1)..d {
            if a.coord(i).clone() * b.coord(j).clone() != a.coord(j).clone() * b.coord(i).clone()
            {
                return false;
            }
        }
    }
    true
}

/// The minimal generators spanning the extremal rays of a full-dimensional
/// simplicial cone, one per ray, in generator order.
///
/// A generator is extremal exactly when the facets it is tight on have
/// normals of rank `d - 1`. Errors unless there are exactly `d` extremal
/// rays, each carrying a single minimal generator.
fn extremal_ray_generators<T: Scalar>(
    s: &AffineSemigroup<T>,
) -> Result<Vec<GradedVector<T>>, ClassifyError> {
    let d = s.dim();
    let cone = s.cone();
    if cone.rank != d {
        return Err(ClassifyError::NotSimplicial);
    }
    let mut classes: Vec<(GradedVector<T>, usize)> = Vec::new();
    for (i, g) in s.generators().iter().enumerate() {
        let normals: lattice::Matrix<T> = cone
            .facets
            .iter()
            .filter(|f| f.tight.binary_search(&i).is_ok())
            .map(|f| f.normal.coords().to_vec())
            .collect();
        let tight_rank = if normals.is_empty() {
            0
        } else {
            lattice::rank(&normals)
        };
        if tight_rank == d - 1 {
            match classes.iter_mut().find(|(rep, _)| parallel(rep, g)) {
                Some(entry) => entry.1 += 1,
                None => classes.push((g.clone(), 1)),
            }
        }
    }
    if classes.len() != d || classes.iter().any(|(_, count)| *count != 1) {
        return Err(ClassifyError::NotSimplicial);
    }
    Ok(classes.into_iter().map(|(g, _)| g).collect())
}

/// Outcome of [`quasi_frobenius`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QfReport<T: Scalar> {
    /// The single minimal generator on each extremal ray.
    pub rays: Vec<GradedVector<T>>,
    /// The `≤_S`-maximal elements of `∩_i Ap(S, r_i)`.
    pub apery_maxima: Vec<GradedVector<T>>,
    /// The quasi-Frobenius elements `w - Σ_i r_i`, ascending.
    pub elements: Vec<GradedVector<T>>,
}

/// Computes the quasi-Frobenius set of a simplicial semigroup whose
/// extremal rays carry one minimal generator each.
///
/// The intersection of the ray Apéry sets is enumerated exhaustively (it
/// is downward closed under `≤_S`); its `≤_S`-maximal elements, shifted
/// by the negated ray sum, are the quasi-Frobenius elements.
pub fn quasi_frobenius<T: Scalar>(
    s: &AffineSemigroup<T>,
    budget: Option<usize>,
) -> Result<QfReport<T>, ClassifyError> {
    let rays = extremal_ray_generators(s)?;
    let inter = apery_intersection(s, &rays, budget).map_err(|e| match e {
        AperyError::UncertifiedApery { budget } => ClassifyError::UncertifiedApery { budget },
        AperyError::XNotInSemigroup(x) => {
            unreachable!("ray generators are nonzero semigroup elements: {x}")
        }
    })?;
    let mut membership = s.membership();
    let apery_maxima: Vec<GradedVector<T>> = inter
        .iter()
        .filter(|w| {
            !inter.iter().any(|other| {
                other != *w
                    && other
                        .checked_sub_nonneg(w)
                        .map_or(false, |diff| membership.contains(&diff))
            })
        })
        .cloned()
        .collect();
    let shift = rays
        .iter()
        .fold(GradedVector::zeros(s.dim()), |acc, r| acc.add(r));
    let mut elements: Vec<GradedVector<T>> =
        apery_maxima.iter().map(|w| w.sub(&shift)).collect();
    elements.sort();
    Ok(QfReport {
        rays,
        apery_maxima,
        elements,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type V = GradedVector<BigInt>;
    type S = AffineSemigroup<BigInt>;

    fn v(coords: &[i64]) -> V {
        V::from_i64s(coords)
    }

    fn sg(gens: &[&[i64]]) -> S {
        S::new(gens.iter().map(|g| v(g)).collect()).unwrap()
    }

    /// `⟨pq, q(p+1), p(p+1), p(p+1)+q⟩` with `q = 2h-1`, `p = 2h`, embedded
    /// on the line `x + y = p(p+1)+q` together with the two axis points.
    fn bresinsky(h: i64) -> S {
        let q = 2 * h - 1;
        let p = 2 * h;
        let n = [p * q, q * (p + 1), p * (p + 1), p * (p + 1) + q];
        let top = n[3];
        let mut gens = vec![v(&[0, top])];
        for nk in &n[..3] {
            gens.push(v(&[*nk, top - *nk]));
        }
        gens.push(v(&[top, 0]));
        S::new(gens).unwrap()
    }

    #[test]
    fn planar_semigroups_with_paired_gaps_are_symmetric() {
        let grlex = TermOrder::grlex(2);
        let s = sg(&[&[0, 1], &[2, 0], &[3, 0], &[1, 3]]);
        let report = classify_symmetry(&s, &grlex).unwrap();
        assert_eq!(report.classification, SymmetryClass::Symmetric);
        assert_eq!(report.frobenius, v(&[1, 2]));
        assert!(report.unpaired.is_empty());
        assert_eq!(report.pf.elements(), &[v(&[1, 2])]);

        let s = sg(&[&[0, 1], &[3, 0], &[5, 0], &[1, 3], &[2, 3]]);
        let report = classify_symmetry(&s, &grlex).unwrap();
        assert_eq!(report.classification, SymmetryClass::Symmetric);
        assert_eq!(report.frobenius, v(&[7, 2]));
        assert_eq!(report.pf.elements(), &[v(&[7, 2])]);
    }

    #[test]
    fn six_generator_example_is_pseudo_symmetric() {
        let grlex = TermOrder::grlex(2);
        let s = sg(&[&[0, 1], &[3, 0], &[4, 0], &[1, 4], &[5, 0], &[2, 7]]);
        let report = classify_symmetry(&s, &grlex).unwrap();
        assert_eq!(report.classification, SymmetryClass::PseudoSymmetric);
        assert_eq!(report.frobenius, v(&[2, 6]));
        assert_eq!(report.unpaired, vec![v(&[1, 3])]);
        assert_eq!(report.pf.elements(), &[v(&[1, 3]), v(&[2, 6])]);
    }

    #[test]
    fn numerical_almost_symmetric_classification() {
        let grlex = TermOrder::grlex(1);
        let s = sg(&[&[4], &[6], &[7], &[9]]);
        let report = classify_symmetry(&s, &grlex).unwrap();
        assert_eq!(report.classification, SymmetryClass::AlmostSymmetric);
        assert_eq!(report.frobenius, v(&[5]));
        assert_eq!(report.unpaired, vec![v(&[2]), v(&[3])]);
        assert_eq!(report.pf.elements(), &[v(&[2]), v(&[3]), v(&[5])]);
        // Count oracle for almost-symmetric numerical semigroups:
        // 2·|H| = F + type.
        assert_eq!(2 * 4usize, 5 + report.pf.len());
    }

    #[test]
    fn unpaired_non_pf_gap_defeats_every_class() {
        let grlex = TermOrder::grlex(1);
        let s = sg(&[&[5], &[6], &[8]]);
        let report = classify_symmetry(&s, &grlex).unwrap();
        assert_eq!(report.classification, SymmetryClass::None);
        assert_eq!(report.frobenius, v(&[9]));
        assert_eq!(report.unpaired, vec![v(&[2]), v(&[7])]);
    }

    #[test]
    fn symmetric_full_cone_counting_identity() {
        // For a symmetric full-cone C-semigroup, g ↦ F - g is a bijection
        // between the gaps and {s ∈ S : s ≤ F componentwise}.
        let grlex = TermOrder::grlex(2);
        let s = sg(&[&[0, 1], &[2, 0], &[3, 0], &[1, 3]]);
        let report = classify_symmetry(&s, &grlex).unwrap();
        assert_eq!(report.classification, SymmetryClass::Symmetric);
        let f = &report.frobenius;
        let mut membership = s.membership();
        let mut paired = 0usize;
        scan_box(&[2, 3], |idx| {
            let x = v(&[idx[0] as i64, idx[1] as i64]);
            if x.le_c(f) && membership.contains(&x) {
                paired += 1;
            }
        });
        assert_eq!(paired, gaps(&s, None).elements().len());
    }

    #[test]
    fn wilf_inequality_on_c_semigroup_fixtures() {
        let one = TermOrder::grlex(1);
        let report = wilf_check(&sg(&[&[2], &[3]]), &one).unwrap();
        assert_eq!(report.frobenius, v(&[1]));
        assert_eq!(report.gap_count, 1);
        assert_eq!(report.below, 1);
        assert_eq!(report.region, 2);
        assert!(report.holds);

        let two = TermOrder::grlex(2);
        let report = wilf_check(
            &sg(&[&[0, 1], &[3, 0], &[4, 0], &[1, 4], &[5, 0], &[2, 7]]),
            &two,
        )
        .unwrap();
        assert_eq!(report.frobenius, v(&[2, 6]));
        assert_eq!(report.gap_count, 11);
        assert_eq!(report.below, 28);
        assert_eq!(report.region, 39);
        assert!(report.holds);
    }

    #[test]
    fn wilf_preconditions_are_enforced() {
        let s = sg(&[&[2], &[3]]);
        assert_eq!(
            wilf_check(&s, &TermOrder::lex(1)),
            Err(ClassifyError::NonGradedOrder)
        );
        // The ray (1,5)–(5,1) semigroup has infinitely many gaps along the
        // boundary, so its gap set never certifies.
        let five = sg(&[&[1, 3], &[1, 5], &[2, 1], &[2, 3], &[5, 1]]);
        assert_eq!(
            wilf_check(&five, &TermOrder::grlex(2)),
            Err(ClassifyError::NotCSemigroup)
        );
    }

    #[test]
    fn quasi_frobenius_of_symmetric_numerical_semigroup_is_frobenius() {
        // ⟨2, 3⟩ is simplicial in dimension one; Ap(S, 2) = {0, 3} has
        // maximum 3 and QF = {3 - 2} = {F}.
        let s = sg(&[&[2], &[3]]);
        // Two generators on the single extremal ray: not simplicial.
        assert_eq!(
            quasi_frobenius(&s, None),
            Err(ClassifyError::NotSimplicial)
        );
    }

    #[test]
    fn quasi_frobenius_of_bresinsky_semigroups() {
        let s = bresinsky(2);
        let report = quasi_frobenius(&s, None).unwrap();
        assert_eq!(report.rays, vec![v(&[0, 23]), v(&[23, 0])]);
        assert_eq!(report.elements.len(), 8);
        let pf = pseudo_frobenius(&s);
        assert!(pf.is_certified());
        assert_eq!(pf.elements(), &[v(&[117, 21])]);
        for q in &report.elements {
            assert!(!pf.elements().contains(q));
        }
    }

    #[test]
    fn degenerate_cones_are_rejected() {
        let diagonal = sg(&[&[8, 8], &[10, 10]]);
        assert_eq!(
            quasi_frobenius(&diagonal, None),
            Err(ClassifyError::NotSimplicial)
        );
        let doubled_ray = sg(&[&[2, 0], &[3, 0], &[0, 1]]);
        assert_eq!(
            quasi_frobenius(&doubled_ray, None),
            Err(ClassifyError::NotSimplicial)
        );
    }
}
