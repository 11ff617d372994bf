//! Rational polyhedral cones spanned by semigroup generators.
//!
//! For an affine semigroup S = ⟨a₁,…,aₙ⟩ ⊆ ℕ^d, the cone
//! cone(S) = { Σᵢ λᵢaᵢ : λᵢ ∈ ℚ≥0 } is the ambient region whose lattice
//! points may fail to be semigroup elements — the gap set lives in
//! cone(S) ∩ ℕ^d. This module computes an exact H-representation of cone(S)
//! by Fourier–Motzkin elimination:
//!
//! * start from the homogeneous system `x = Σᵢ λᵢaᵢ, λ ≥ 0` in the variables
//!   (x, λ);
//! * use the d defining equalities to substitute away d of the λᵢ;
//! * eliminate the remaining λᵢ one at a time by combining every positive
//!   occurrence with every negative one.
//!
//! The surviving inequalities mention x alone and cut out exactly the
//! projection, i.e. the cone. Everything stays in ℤ — combinations are
//! cross-multiplied and re-normalized to primitive integer vectors, so no
//! rounding can occur.
//!
//! The final system is reduced to a geometrically minimal one: the span of
//! the generators contributes equality constraints (the integer kernel of the
//! coordinate functionals), and an inequality is kept as a **facet** exactly
//! when its tight set of generators has rank `rank(S) − 1`. Membership
//! testing checks the equalities and facet inequalities; both lists are part
//! of the public [`FacetSystem`].

use std::collections::HashSet;


use crate::lattice;
use crate::scalar::Scalar;
use crate::vector::GradedVector;

/// One facet of the cone: the primitive inner normal together with the
/// indices of the generators lying on the facet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Facet<T: Scalar> {
    /// Primitive integer normal c with c·x ≥ 0 valid on the cone.
    pub normal: GradedVector<T>,
    /// Indices i with c·aᵢ = 0, sorted ascending.
    pub tight: Vec<usize>,
}

/// Exact H-representation of cone(S).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FacetSystem<T: Scalar> {
    /// Ambient dimension d.
    pub dim: usize,
    /// Rank of the generator matrix (dimension of the linear span).
    pub rank: usize,
    /// Primitive normals e with e·x = 0 on the span of the generators;
    /// empty iff the cone is full-dimensional.
    pub equalities: Vec<GradedVector<T>>,
    /// Facet inequalities, canonically ordered.
    pub facets: Vec<Facet<T>>,
}

impl<T: Scalar> FacetSystem<T> {
    /// Exact membership of a rational-free point: x ∈ cone(S) iff x satisfies
    /// every equality and every facet inequality.
    pub fn contains(&self, x: &GradedVector<T>) -> bool {
        debug_assert_eq!(x.dim(), self.dim);
        self.equalities.iter().all(|e| dot(e, x).is_zero())
            && self.facets.iter().all(|f| !dot(&f.normal, x).is_negative())
    }
}

fn dot<T: Scalar>(a: &GradedVector<T>, b: &GradedVector<T>) -> T {
    a.iter()
        .zip(b.iter())
        .fold(T::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

/// Computes the facet system of cone(a₁,…,aₙ) by Fourier–Motzkin
/// elimination. Generators must be nonzero points of ℕ^d (the cone is then
/// pointed, so facets through the origin describe it completely).
pub fn facet_system<T: Scalar>(generators: &[GradedVector<T>]) -> FacetSystem<T> {
    let n = generators.len();
    let d = generators[0].dim();

    // Equalities: primitive basis of {c : c·aᵢ = 0 for all i}, the normals of
    // the generators' linear span. These are the rows x with x·Mᵀ = 0 where M
    // has the generators as rows.
    let transposed: lattice::Matrix<T> = (0..d)
        .map(|k| generators.iter().map(|g| g.coord(k).clone()).collect())
        .collect();
    let equalities: Vec<GradedVector<T>> = lattice::left_kernel(&transposed)
        .into_iter()
        .map(|row| GradedVector::new(normalize_primitive(row)))
        .collect();
    let rank = d - equalities.len();

    // Columns 0..d are the x-coordinates, columns d..d+n the λᵢ.
    let width = d + n;
    let mut eqs: Vec<Vec<T>> = Vec::with_capacity(d);
    for k in 0..d {
        let mut row = vec![T::zero(); width];
        row[k] = T::one();
        for (i, g) in generators.iter().enumerate() {
            row[d + i] = -g.coord(k).clone();
        }
        eqs.push(row);
    }
    let mut ineqs: Vec<Vec<T>> = (0..n)
        .map(|i| {
            let mut row = vec![T::zero(); width];
            row[d + i] = T::one();
            row
        })
        .collect();

    // Phase 1: each equality eliminates one λ column by substitution.
    for e_idx in 0..eqs.len() {
        let eq = eqs[e_idx].clone();
        // Pick the λ column with the smallest nonzero coefficient to slow
        // entry growth.
        let pivot = (d..width)
            .filter(|&j| !eq[j].is_zero())
            .min_by_key(|&j| eq[j].abs());
        let Some(pivot) = pivot else {
            // The equality involves x alone; it is implied by the span
            // equalities computed above, so it carries no new information.
            continue;
        };
        for row in eqs.iter_mut().skip(e_idx + 1).chain(ineqs.iter_mut()) {
            substitute(row, &eq, pivot);
            *row = normalize_primitive(std::mem::take(row));
        }
    }

    // Phase 2: Fourier–Motzkin on the remaining λ columns.
    for col in d..width {
        if ineqs.iter().all(|r| r[col].is_zero()) {
            continue;
        }
        let mut kept: Vec<Vec<T>> = Vec::new();
        let mut pos: Vec<Vec<T>> = Vec::new();
        let mut neg: Vec<Vec<T>> = Vec::new();
        for row in ineqs.drain(..) {
            if row[col].is_zero() {
                kept.push(row);
            } else if row[col].is_positive() {
                pos.push(row);
            } else {
                neg.push(row);
            }
        }
        let mut seen: HashSet<Vec<T>> = kept.iter().cloned().collect();
        for p in &pos {
            for nrow in &neg {
                // p[col]·n − n[col]·p has a zero col-entry and keeps ≥.
                let combined: Vec<T> = (0..width)
                    .map(|j| {
                        p[col].clone() * nrow[j].clone() - nrow[col].clone() * p[j].clone()
                    })
                    .collect();
                let combined = normalize_primitive(combined);
                if combined.iter().any(|x| !x.is_zero()) && seen.insert(combined.clone()) {
                    kept.push(combined);
                }
            }
        }
        ineqs = kept;
    }

    // Surviving inequalities are supported on the x block. Keep those whose
    // tight generator set has rank exactly rank − 1: the facets.
    let mut facets: Vec<Facet<T>> = Vec::new();
    let mut seen_tight: HashSet<Vec<usize>> = HashSet::new();
    let mut candidates: Vec<GradedVector<T>> = ineqs
        .into_iter()
        .filter(|row| row[d..].iter().all(|x| x.is_zero()))
        .map(|row| GradedVector::new(normalize_primitive(row[..d].to_vec())))
        .filter(|c| !c.is_zero())
        .collect();
    candidates.sort();
    candidates.dedup();
    for c in candidates {
        let mut tight = Vec::new();
        let mut valid = true;
        for (i, g) in generators.iter().enumerate() {
            let v = dot(&c, g);
            if v.is_zero() {
                tight.push(i);
            } else if v.is_negative() {
                valid = false;
                break;
            }
        }
        debug_assert!(valid, "Fourier–Motzkin emitted an invalid inequality");
        if !valid {
            continue;
        }
        let tight_gens: Vec<GradedVector<T>> =
            tight.iter().map(|&i| generators[i].clone()).collect();
        let tight_rank = if tight_gens.is_empty() {
            0
        } else {
            lattice::rank(&lattice::rows_from_vectors(&tight_gens))
        };
        if tight_rank + 1 == rank && seen_tight.insert(tight.clone()) {
            facets.push(Facet { normal: c, tight });
        }
    }
    facets.sort_by(|a, b| (&a.tight, &a.normal).cmp(&(&b.tight, &b.normal)));

    FacetSystem {
        dim: d,
        rank,
        equalities,
        facets,
    }
}

/// Substitutes the `pivot` column of `row` away using the equality `eq`
/// (which has a nonzero pivot coefficient), preserving inequality direction.
fn substitute<T: Scalar>(row: &mut Vec<T>, eq: &[T], pivot: usize) {
    if row[pivot].is_zero() {
        return;
    }
    let p = eq[pivot].clone();
    let scale = p.abs();
    let factor = if p.is_negative() {
        -row[pivot].clone()
    } else {
        row[pivot].clone()
    };
    for (j, x) in row.iter_mut().enumerate() {
        *x = x.clone() * scale.clone() - factor.clone() * eq[j].clone();
    }
    debug_assert!(row[pivot].is_zero());
}

/// Divides by the gcd of all entries, mapping 0-rows to themselves.
fn normalize_primitive<T: Scalar>(row: Vec<T>) -> Vec<T> {
    let mut g = T::zero();
    for x in &row {
        g = g.gcd(x);
    }
    if g.is_zero() || g == T::one() {
        return row;
    }
    row.into_iter().map(|x| x / g.clone()).collect()
}
