//! The toric ideal of an affine semigroup: Gröbner bases, minimal
//! generators, genericity, and factorization fibers.
//!
//! Sending `x_i ↦ t^{a_i}` presents the semigroup ring of
//! `S = ⟨a_1,…,a_n⟩` as `k[x_1,…,x_n]/I_S`, where the toric ideal `I_S` is
//! prime and generated by the pure binomials `x^u - x^v` with
//! `deg_S(u) = deg_S(v)` (the degree of an exponent vector being
//! `Σ_i u_i·a_i`). This module exposes the ideal through [`Binomial`]
//! values that remember both their exponents and their common `S`-degree.
//!
//! # Fibers
//!
//! The *fiber* of a degree `b ∈ S` is its finite set of factorizations. Two
//! factorizations are adjacent when their supports meet; the ideal needs
//! exactly `(number of connected components) - 1` minimal generators in
//! degree `b`, one binomial bridging each extra component. This yields
//! minimal generating sets ([`minimal_generators`]), detects binomials no
//! generating set can avoid ([`is_indispensable`] — the fiber is exactly the
//! two monomials, necessarily with disjoint supports), and locates the
//! degrees where unique factorization first fails
//! ([`uf_complement_minimals`]).
//!
//! # Genericity
//!
//! The ideal is *generic* when some minimal generating set consists of
//! binomials with full support; since every minimal generator of a generic
//! ideal is indispensable, the check reports any minimal generator with
//! missing support or a fiber larger than two as a violation witness.

use std::fmt;

use thiserror::Error;

use crate::groebner::toric_exponent_basis;
use crate::order::TermOrder;
use crate::scalar::{int, Scalar};
use crate::semigroup::AffineSemigroup;
use crate::vector::GradedVector;

/// Errors from toric-ideal queries.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ToricError {
    /// The two exponent vectors have different `S`-degrees, so their
    /// difference does not lie in the toric ideal.
    #[error("x^{0} - x^{1} is not in the toric ideal: the monomials have different degrees")]
    BinomialNotInIdeal(String, String),
}

/// A pure binomial `x^plus - x^minus` of the toric ideal, reduced so that
/// the two exponent vectors have disjoint supports, together with the common
/// `S`-degree of its monomials.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Binomial<T: Scalar> {
    plus: GradedVector<T>,
    minus: GradedVector<T>,
    degree: GradedVector<T>,
}

impl<T: Scalar> Binomial<T> {
    /// Builds the binomial `x^u - x^v`, cancelling any common factor and
    /// checking that both sides carry the same `S`-degree.
    pub fn new(
        s: &AffineSemigroup<T>,
        u: &GradedVector<T>,
        v: &GradedVector<T>,
    ) -> Result<Binomial<T>, ToricError> {
        let common = u.min_c(v);
        let plus = u.sub(&common);
        let minus = v.sub(&common);
        let du = exponent_degree(s, &plus);
        let dv = exponent_degree(s, &minus);
        if du != dv {
            return Err(ToricError::BinomialNotInIdeal(
                u.to_string(),
                v.to_string(),
            ));
        }
        Ok(Binomial {
            plus,
            minus,
            degree: du,
        })
    }

    pub(crate) fn from_reduced_parts(
        plus: GradedVector<T>,
        minus: GradedVector<T>,
        degree: GradedVector<T>,
    ) -> Binomial<T> {
        debug_assert!(plus.disjoint_support(&minus));
        Binomial {
            plus,
            minus,
            degree,
        }
    }

    /// Exponent vector of the leading monomial.
    pub fn plus(&self) -> &GradedVector<T> {
        &self.plus
    }

    /// Exponent vector of the trailing monomial.
    pub fn minus(&self) -> &GradedVector<T> {
        &self.minus
    }

    /// The common `S`-degree of both monomials.
    pub fn degree(&self) -> &GradedVector<T> {
        &self.degree
    }

    /// Whether every variable appears in one of the two monomials.
    pub fn has_full_support(&self) -> bool {
        let n = self.plus.dim();
        (0..n).all(|i| !self.plus.coord(i).is_zero() || !self.minus.coord(i).is_zero())
    }

    /// Equality up to a global sign (swapping the two monomials).
    pub fn same_up_to_sign(&self, other: &Binomial<T>) -> bool {
        (self.plus == other.plus && self.minus == other.minus)
            || (self.plus == other.minus && self.minus == other.plus)
    }
}

fn monomial_string<T: Scalar>(e: &GradedVector<T>) -> String {
    let parts: Vec<String> = e
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| {
            if c == &T::one() {
                format!("x{}", i + 1)
            } else {
                format!("x{}^{}", i + 1, c)
            }
        })
        .collect();
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

impl<T: Scalar> fmt::Display for Binomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} - {}",
            monomial_string(&self.plus),
            monomial_string(&self.minus)
        )
    }
}

/// The `S`-degree of an exponent vector: `Σ_i e_i · a_i`.
pub fn exponent_degree<T: Scalar>(
    s: &AffineSemigroup<T>,
    e: &GradedVector<T>,
) -> GradedVector<T> {
    let mut degree = GradedVector::zeros(s.dim());
    for (a, c) in s.generators().iter().zip(e.iter()) {
        if !c.is_zero() {
            degree = degree.add(&a.scaled(c));
        }
    }
    degree
}

/// The reduced Gröbner basis of the toric ideal under the given term order,
/// leading monomials first.
pub fn toric_groebner<T: Scalar>(
    s: &AffineSemigroup<T>,
    order: &TermOrder,
) -> Vec<Binomial<T>> {
    assert_eq!(
        order.dim(),
        s.num_generators(),
        "the term order lives on one variable per generator"
    );
    toric_exponent_basis(s, order)
        .into_iter()
        .map(|(plus, minus)| {
            let degree = exponent_degree(s, &plus);
            debug_assert_eq!(degree, exponent_degree(s, &minus));
            Binomial::from_reduced_parts(plus, minus, degree)
        })
        .collect()
}

/// Connected components of a fiber under the shared-support relation.
/// Returns, for each factorization, the index of its component root.
fn fiber_components<T: Scalar>(fiber: &[GradedVector<T>]) -> Vec<usize> {
    let mut parent: Vec<usize> = (0..fiber.len()).collect();
    fn find(parent: &mut Vec<usize>, mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    for i in 0..fiber.len() {
        for j in (i + 1)..fiber.len() {
            if !fiber[i].disjoint_support(&fiber[j]) {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                if ri != rj {
                    parent[ri.max(rj)] = ri.min(rj);
                }
            }
        }
    }
    (0..fiber.len()).map(|i| find(&mut parent, i)).collect()
}

/// Degrees that can carry minimal generators, each with its fiber: the
/// `S`-degrees of the reduced Gröbner basis, ascending by total degree then
/// lexicographically.
fn candidate_fibers<T: Scalar>(
    s: &AffineSemigroup<T>,
) -> Vec<(GradedVector<T>, Vec<GradedVector<T>>)> {
    let gb = toric_groebner(s, &TermOrder::grevlex(s.num_generators()));
    let mut degrees: Vec<GradedVector<T>> = gb.into_iter().map(|b| b.degree).collect();
    degrees.sort_by(|a, b| a.total().cmp(&b.total()).then_with(|| a.cmp(b)));
    degrees.dedup();
    degrees
        .into_iter()
        .map(|d| {
            let fiber = s.factorizations(&d);
            (d, fiber)
        })
        .collect()
}

/// A minimal generating set of the toric ideal.
///
/// Every degree whose fiber graph is disconnected contributes one binomial
/// per component beyond the first, bridging the lexicographically smallest
/// member of that component to the lexicographically smallest member of the
/// component containing the overall smallest factorization. The degrees that
/// can contribute are exactly the Gröbner degrees (a minimal generator
/// reduces to zero against the reduced basis, and the first reduction step
/// in its own degree uses a basis element of that full degree). Leading
/// monomials are oriented by graded reverse lexicographic order.
pub fn minimal_generators<T: Scalar>(s: &AffineSemigroup<T>) -> Vec<Binomial<T>> {
    let order = TermOrder::grevlex(s.num_generators());
    let mut out = Vec::new();
    for (degree, fiber) in candidate_fibers(s) {
        let roots = fiber_components(&fiber);
        // Representative of each component: its lex-smallest member (the
        // fiber enumeration is ascending, so first occurrence wins).
        let mut reps: Vec<usize> = Vec::new();
        let mut seen: Vec<usize> = Vec::new();
        for (i, &r) in roots.iter().enumerate() {
            if !seen.contains(&r) {
                seen.push(r);
                reps.push(i);
            }
        }
        if reps.len() < 2 {
            continue;
        }
        // The component of the overall lex-smallest factorization is the
        // base; fiber[0] is lex-smallest, so the base is the first rep.
        let base = fiber[reps[0]].clone();
        for &rep in &reps[1..] {
            let (u, v) = if order.compare(&fiber[rep], &base) == std::cmp::Ordering::Greater {
                (fiber[rep].clone(), base.clone())
            } else {
                (base.clone(), fiber[rep].clone())
            };
            out.push(Binomial::from_reduced_parts(u, v, degree.clone()));
        }
    }
    out
}

/// Whether `x^u - x^v` is indispensable: it appears, up to sign, in every
/// minimal binomial generating set of the toric ideal. Equivalent to its
/// fiber being exactly `{u, v}` with disjoint supports.
pub fn is_indispensable<T: Scalar>(
    s: &AffineSemigroup<T>,
    u: &GradedVector<T>,
    v: &GradedVector<T>,
) -> Result<bool, ToricError> {
    let b = Binomial::new(s, u, v)?;
    if !b.plus().disjoint_support(b.minus()) {
        // A common factor was cancelled: the fiber of the original degree
        // contains a third point, or the two monomials share support.
        return Ok(false);
    }
    let fiber = s.factorizations(b.degree());
    if fiber.len() != 2 {
        return Ok(false);
    }
    Ok(fiber.contains(b.plus()) && fiber.contains(b.minus()))
}

/// Outcome of the genericity test, with violating minimal generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenericityReport<T: Scalar> {
    /// True when every minimal generator has full support (and hence the
    /// ideal is generic).
    pub is_generic: bool,
    /// Minimal generators missing at least one variable.
    pub missing_support: Vec<Binomial<T>>,
    /// Minimal generators whose fiber admits an alternative choice.
    pub dispensable: Vec<Binomial<T>>,
}

/// Tests whether the toric ideal is generic: minimally generated by
/// binomials with full support. Violations are reported both for support
/// (some variable absent from a minimal generator) and for dispensability
/// (a fiber with more than two factorizations, so the generator is not
/// forced).
pub fn is_generic<T: Scalar>(s: &AffineSemigroup<T>) -> GenericityReport<T> {
    let gens = minimal_generators(s);
    let mut missing_support = Vec::new();
    let mut dispensable = Vec::new();
    for g in &gens {
        if !g.has_full_support() {
            missing_support.push(g.clone());
        }
        if s.factorizations(g.degree()).len() != 2 {
            dispensable.push(g.clone());
        }
    }
    GenericityReport {
        is_generic: missing_support.is_empty(),
        missing_support,
        dispensable,
    }
}

/// The minimal degrees (under `x ≤_S y ⟺ y - x ∈ S`) at which unique
/// factorization fails — equivalently, the minimal degrees of disconnected
/// fibers, which are exactly the minimal degrees of minimal generators of
/// the toric ideal.
///
/// Degrees are searched ascending by total degree inside `[0, bound]`; the
/// default bound doubles the componentwise maximum of the minimal-generator
/// degrees, which contains every minimal element (any degree of a minimal
/// generator works as a certificate, and minimality is checked against the
/// collected set).
pub fn uf_complement_minimals<T: Scalar>(
    s: &AffineSemigroup<T>,
    bound: Option<&GradedVector<T>>,
) -> Vec<GradedVector<T>> {
    let default_bound = minimal_generators(s)
        .iter()
        .fold(GradedVector::zeros(s.dim()), |acc, g| acc.max_c(g.degree()))
        .scaled(&int(2));
    let bound = bound.cloned().unwrap_or(default_bound);

    // All S-elements in the box, ascending by total then lex, so that any
    // S-divisor of a degree is visited before it.
    let mut points = Vec::new();
    let mut membership = s.membership();
    let dims: Vec<usize> = bound
        .iter()
        .map(|c| crate::scalar::to_index(c).expect("bound fits index range") + 1)
        .collect();
    if dims.iter().any(|&d| d == 0) {
        return Vec::new();
    }
    let mut idx = vec![0usize; dims.len()];
    loop {
        let p = GradedVector::new(idx.iter().map(|&c| int(c as i64)).collect());
        if membership.contains(&p) {
            points.push(p);
        }
        let mut pos = dims.len();
        let done = loop {
            if pos == 0 {
                break true;
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < dims[pos] {
                break false;
            }
            idx[pos] = 0;
        };
        if done {
            break;
        }
    }
    points.sort_by(|a, b| a.total().cmp(&b.total()).then_with(|| a.cmp(b)));

    let mut minimals: Vec<GradedVector<T>> = Vec::new();
    for p in points {
        if minimals.iter().any(|m| {
            p.checked_sub_nonneg(m)
                .map_or(false, |diff| membership.contains(&diff))
        }) {
            continue;
        }
        let fiber = s.factorizations(&p);
        let roots = fiber_components(&fiber);
        let components = {
            let mut seen: Vec<usize> = Vec::new();
            for &r in &roots {
                if !seen.contains(&r) {
                    seen.push(r);
                }
            }
            seen.len()
        };
        if components >= 2 {
            minimals.push(p);
        }
    }
    minimals.sort();
    minimals
}
