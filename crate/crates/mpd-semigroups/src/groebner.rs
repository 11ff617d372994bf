//! Gröbner bases for pure-difference binomial ideals.
//!
//! Every ideal this crate manipulates is generated by differences of
//! monomials, `x^u - x^v`. That class is closed under S-polynomials and
//! reduction, so Buchberger's algorithm never leaves it: an S-polynomial of
//! two differences is a difference, and reducing a difference by a difference
//! yields a difference or zero. This module exploits that closure to run the
//! whole computation on pairs of exponent vectors — no polynomial arithmetic,
//! no coefficient growth, and monomial normal forms stay monomials.
//!
//! Two consumers drive the design:
//!
//! * **Toric ideals.** The defining ideal of an affine semigroup ring is the
//!   kernel of `x_i ↦ t^{a_i}`. [`toric_exponent_basis`] computes it from an
//!   integer basis of the exponent lattice `ker(a_1, …, a_n)` followed by one
//!   saturation round per variable: for a positively graded binomial ideal,
//!   a Gröbner basis under a grading-compatible reverse-lex order with `x_i`
//!   cheapest turns into a basis of the colon ideal by `x_i^∞` after dividing
//!   each element by its `x_i` content. Saturating by each variable once, in
//!   any order, yields the full (prime) toric ideal.
//! * **Subideal membership.** Checking that a binomial lies in the ideal
//!   spanned by a given list of differences (for example, the relations read
//!   off rows of RF-matrices) reduces to comparing monomial normal forms:
//!   `x^u - x^v` lies in the ideal iff `u` and `v` have the same normal form.
//!
//! The engine is generic over the monomial order, passed as a plain
//! comparator on exponent vectors; any total order compatible with
//! multiplication and with `1` as least monomial is admissible. Orientation
//! is maintained as an invariant: every [`OrientedBinomial`] stores its
//! order-larger monomial in `plus`. The basis returned by [`reduced_basis`]
//! is the unique reduced Gröbner basis of the input ideal (up to the global
//! sign fixed by that orientation), so output is deterministic and directly
//! comparable across runs.

use std::cmp::Ordering;

use crate::lattice::{left_kernel, rows_from_vectors};
use crate::order::TermOrder;
use crate::scalar::Scalar;
use crate::semigroup::AffineSemigroup;
use crate::vector::GradedVector;

/// A difference of monomials `x^plus - x^minus` with `plus ≻ minus` in the
/// governing monomial order. The two exponent vectors are always distinct.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrientedBinomial<T: Scalar> {
    plus: GradedVector<T>,
    minus: GradedVector<T>,
}

impl<T: Scalar> OrientedBinomial<T> {
    /// Orients `u - v` under `cmp`, returning `None` when the difference is
    /// zero.
    pub fn oriented(
        u: GradedVector<T>,
        v: GradedVector<T>,
        cmp: &impl MonomialOrder<T>,
    ) -> Option<OrientedBinomial<T>> {
        match cmp.compare(&u, &v) {
            Ordering::Greater => Some(OrientedBinomial { plus: u, minus: v }),
            Ordering::Less => Some(OrientedBinomial { plus: v, minus: u }),
            Ordering::Equal => None,
        }
    }

    /// The order-larger monomial (the leading term up to sign).
    pub fn plus(&self) -> &GradedVector<T> {
        &self.plus
    }

    /// The order-smaller monomial.
    pub fn minus(&self) -> &GradedVector<T> {
        &self.minus
    }

    /// Consumes the binomial into its `(plus, minus)` exponent pair.
    pub fn into_pair(self) -> (GradedVector<T>, GradedVector<T>) {
        (self.plus, self.minus)
    }
}

/// A total order on exponent vectors of a fixed dimension, compatible with
/// addition and with the zero vector as minimum — exactly the axioms of a
/// monomial order, expressed on exponents.
pub trait MonomialOrder<T: Scalar> {
    /// Three-way comparison of two exponent vectors.
    fn compare(&self, a: &GradedVector<T>, b: &GradedVector<T>) -> Ordering;
}

impl<T: Scalar> MonomialOrder<T> for TermOrder {
    fn compare(&self, a: &GradedVector<T>, b: &GradedVector<T>) -> Ordering {
        TermOrder::compare(self, a, b)
    }
}

/// The order used for saturation rounds: weighted degree first (the positive
/// grading under which the ideal is homogeneous), ties broken by pure reverse
/// lex scanning the designated cheap variable first. Within one weighted
/// degree, monomials with a higher power of the cheap variable come earlier,
/// which forces the key property behind colon-by-a-variable: if the cheap
/// variable divides the leading monomial of a homogeneous binomial, it
/// divides the trailing one too.
struct SaturationOrder<T: Scalar> {
    weights: Vec<T>,
    /// Reverse-lex scan order: `cheap` first, then remaining coordinates in
    /// descending index order.
    scan: Vec<usize>,
}

impl<T: Scalar> SaturationOrder<T> {
    fn new(weights: Vec<T>, cheap: usize) -> SaturationOrder<T> {
        let mut scan: Vec<usize> = vec![cheap];
        scan.extend((0..weights.len()).rev().filter(|&i| i != cheap));
        SaturationOrder { weights, scan }
    }

    fn weighted_total(&self, v: &GradedVector<T>) -> T {
        v.iter()
            .zip(self.weights.iter())
            .fold(T::zero(), |acc, (c, w)| acc + c.clone() * w.clone())
    }
}

impl<T: Scalar> MonomialOrder<T> for SaturationOrder<T> {
    fn compare(&self, a: &GradedVector<T>, b: &GradedVector<T>) -> Ordering {
        self.weighted_total(a)
            .cmp(&self.weighted_total(b))
            .then_with(|| {
                for &i in &self.scan {
                    let ord = a.coord(i).cmp(b.coord(i));
                    if ord != Ordering::Equal {
                        // Reverse lex: more of an early-scanned variable
                        // makes the monomial smaller.
                        return ord.reverse();
                    }
                }
                Ordering::Equal
            })
    }
}

/// Rewrites `m` by `g` at its maximal power: `m - k·g.plus + k·g.minus`,
/// where `k = min_i ⌊m_i / plus_i⌋` over the support of `g.plus`. Requires
/// `g.plus ≤ m` componentwise (so `k ≥ 1`). Jumping `k` steps at once is a
/// valid chain of single rewrites — every intermediate stays divisible on the
/// support of `g.plus`, and other coordinates only grow — and collapses the
/// long chains that arise when one relation is applied many times in a row.
fn apply<T: Scalar>(m: &GradedVector<T>, g: &OrientedBinomial<T>) -> GradedVector<T> {
    let mut k: Option<T> = None;
    for i in g.plus.support() {
        let q = num_integer::Integer::div_floor(m.coord(i), g.plus.coord(i));
        k = Some(match k {
            None => q,
            Some(cur) => cur.min(q),
        });
    }
    let k = k.expect("reducer has a nonzero head");
    debug_assert!(k >= T::one());
    m.sub(&g.plus.scaled(&k)).add(&g.minus.scaled(&k))
}

/// Fully reduces the monomial `m` modulo `basis`: applies order-decreasing
/// rewrites until no leading monomial of the basis divides the result. For a
/// Gröbner basis this is the unique normal form, so two monomials reduce to
/// the same vector iff their difference lies in the ideal.
pub fn monomial_normal_form<T: Scalar>(
    mut m: GradedVector<T>,
    basis: &[OrientedBinomial<T>],
) -> GradedVector<T> {
    'rewrite: loop {
        for g in basis {
            if g.plus.le_c(&m) {
                m = apply(&m, g);
                continue 'rewrite;
            }
        }
        return m;
    }
}

/// Fully reduces a binomial modulo the working basis: the larger monomial is
/// rewritten (re-orienting as needed) until irreducible, then the smaller
/// monomial is brought to normal form. Returns `None` when the binomial
/// reduces to zero. Every rewrite subtracts a monomial multiple of a basis
/// element, so the result is congruent to the input modulo the ideal.
fn reduce_entries<T: Scalar>(
    mut b: OrientedBinomial<T>,
    basis: &[Entry<T>],
    cmp: &impl MonomialOrder<T>,
) -> Option<OrientedBinomial<T>> {
    'head: loop {
        let hmask = support_mask(&b.plus);
        for e in basis {
            if divides(e, hmask, &b.plus) {
                let rewritten = apply(&b.plus, &e.b);
                if rewritten == b.minus {
                    return None;
                }
                b = OrientedBinomial::oriented(rewritten, b.minus, cmp)
                    .expect("distinct monomials orient");
                continue 'head;
            }
        }
        break;
    }
    'tail: loop {
        let tmask = support_mask(&b.minus);
        for e in basis {
            if divides(e, tmask, &b.minus) {
                b.minus = apply(&b.minus, &e.b);
                continue 'tail;
            }
        }
        break;
    }
    debug_assert_ne!(b.plus, b.minus, "tail reduction stays below the head");
    Some(b)
}

/// The least common multiple of the two leading monomials.
fn pair_lcm<T: Scalar>(f: &OrientedBinomial<T>, g: &OrientedBinomial<T>) -> GradedVector<T> {
    f.plus.max_c(&g.plus)
}

/// The S-polynomial of two oriented binomials, itself a difference of
/// monomials (or `None` when it cancels to zero).
fn s_pair<T: Scalar>(
    f: &OrientedBinomial<T>,
    g: &OrientedBinomial<T>,
    cmp: &impl MonomialOrder<T>,
) -> Option<OrientedBinomial<T>> {
    let l = pair_lcm(f, g);
    let u = l.sub(&f.plus).add(&f.minus);
    let v = l.sub(&g.plus).add(&g.minus);
    OrientedBinomial::oriented(u, v, cmp)
}

/// Support bitmask of an exponent vector: bit `i` set iff coordinate `i` is
/// positive. Divisibility requires support containment, so masks give an
/// O(1) pre-filter before the componentwise comparison.
fn support_mask<T: Scalar>(v: &GradedVector<T>) -> u64 {
    debug_assert!(v.dim() <= 64);
    let mut m = 0u64;
    for (i, c) in v.iter().enumerate() {
        if !c.is_zero() {
            m |= 1 << i;
        }
    }
    m
}

/// A basis element bundled with the support mask of its leading monomial.
struct Entry<T: Scalar> {
    b: OrientedBinomial<T>,
    mask: u64,
}

fn divides<T: Scalar>(e: &Entry<T>, mask: u64, m: &GradedVector<T>) -> bool {
    e.mask & !mask == 0 && e.b.plus.le_c(m)
}

/// Computes the reduced Gröbner basis of the ideal generated by the input
/// differences `u - v` under `cmp`.
///
/// Buchberger's algorithm with the normal selection strategy (pairs processed
/// by increasing lcm) and the Gebauer–Möller criteria applied when pairs are
/// scheduled: among the pairs a new element forms with the existing basis,
/// those whose lcm strictly contains another new lcm are dropped, one
/// representative survives per repeated lcm (none if some member of the group
/// has coprime leading monomials), and older pairs strictly subsumed by the
/// new leading monomial are discarded. The final basis is inter-reduced:
/// leading monomials are pairwise non-divisible and every trailing monomial
/// is in normal form, which makes the result the canonical reduced basis,
/// sorted by increasing leading monomial.
pub fn reduced_basis<T: Scalar>(
    input: Vec<(GradedVector<T>, GradedVector<T>)>,
    cmp: &impl MonomialOrder<T>,
) -> Vec<OrientedBinomial<T>> {
    let mut basis: Vec<Entry<T>> = Vec::new();
    struct Pending<T: Scalar> {
        lcm: GradedVector<T>,
        mask: u64,
        i: usize,
        j: usize,
    }
    let mut pending: Vec<Pending<T>> = Vec::new();

    // Schedules the pairs of `basis[t]` against everything before it,
    // applying the Gebauer–Möller criteria to the combined pending set.
    let schedule = |pending: &mut Vec<Pending<T>>, basis: &[Entry<T>], t: usize| {
        let new_entry = &basis[t];
        let mut fresh: Vec<Pending<T>> = (0..t)
            .map(|k| {
                let lcm = pair_lcm(&basis[k].b, &new_entry.b);
                let mask = support_mask(&lcm);
                Pending { lcm, mask, i: k, j: t }
            })
            .collect();

        // Older pairs whose lcm the new leading monomial divides strictly
        // (their lcm differs from both lcms with the new element) are
        // redundant.
        pending.retain(|p| {
            !(divides(new_entry, p.mask, &p.lcm)
                && fresh[p.i].lcm != p.lcm
                && fresh[p.j].lcm != p.lcm)
        });

        // Among the fresh pairs: drop any whose lcm strictly divides into
        // another fresh lcm, then collapse equal lcms to one representative —
        // or to none when some member of the group is a coprime pair.
        let mut keep: Vec<bool> = vec![true; fresh.len()];
        for a in 0..fresh.len() {
            if !keep[a] {
                continue;
            }
            for b in 0..fresh.len() {
                if a == b || !keep[b] {
                    continue;
                }
                if fresh[b].lcm != fresh[a].lcm
                    && fresh[b].mask & !fresh[a].mask == 0
                    && fresh[b].lcm.le_c(&fresh[a].lcm)
                {
                    keep[a] = false;
                    break;
                }
            }
        }
        let mut groups: Vec<usize> = (0..fresh.len()).filter(|&a| keep[a]).collect();
        groups.sort_by(|&a, &b| {
            cmp.compare(&fresh[a].lcm, &fresh[b].lcm)
                .then_with(|| a.cmp(&b))
        });
        let mut chosen: Vec<usize> = Vec::new();
        let mut g = 0;
        while g < groups.len() {
            let mut h = g + 1;
            while h < groups.len() && fresh[groups[h]].lcm == fresh[groups[g]].lcm {
                h += 1;
            }
            let coprime = (g..h).any(|k| {
                let p = &fresh[groups[k]];
                basis[p.i].b.plus.min_c(&basis[p.j].b.plus).is_zero()
            });
            if !coprime {
                chosen.push(groups[g]);
            }
            g = h;
        }
        chosen.sort_unstable();
        let mut idx = 0;
        for (a, p) in fresh.drain(..).enumerate() {
            if idx < chosen.len() && chosen[idx] == a {
                pending.push(p);
                idx += 1;
            }
        }
    };

    for (u, v) in input {
        if let Some(b) = OrientedBinomial::oriented(u, v, cmp) {
            if basis.iter().any(|e| e.b == b) {
                continue;
            }
            let mask = support_mask(&b.plus);
            basis.push(Entry { b, mask });
            schedule(&mut pending, &basis, basis.len() - 1);
        }
    }

    // Smallest lcm last, so each pop is O(1); re-sorting after a batch of
    // insertions works on an almost-sorted vector.
    let resort = |pending: &mut Vec<Pending<T>>| {
        pending.sort_unstable_by(|a, b| {
            cmp.compare(&b.lcm, &a.lcm)
                .then_with(|| (b.i, b.j).cmp(&(a.i, a.j)))
        });
    };
    resort(&mut pending);

    while let Some(Pending { i, j, .. }) = pending.pop() {
        if basis[i].b.plus.min_c(&basis[j].b.plus).is_zero() {
            continue;
        }
        if let Some(s) = s_pair(&basis[i].b, &basis[j].b, cmp) {
            if let Some(r) = reduce_entries(s, &basis, cmp) {
                let mask = support_mask(&r.plus);
                basis.push(Entry { b: r, mask });
                schedule(&mut pending, &basis, basis.len() - 1);
                resort(&mut pending);
            }
        }
    }

    interreduce(basis.into_iter().map(|e| e.b).collect(), cmp)
}

/// Minimalizes and tail-reduces a Gröbner basis into the reduced basis.
fn interreduce<T: Scalar>(
    basis: Vec<OrientedBinomial<T>>,
    cmp: &impl MonomialOrder<T>,
) -> Vec<OrientedBinomial<T>> {
    // Keep only elements whose leading monomial no other survivor divides;
    // among equal leading monomials the first occurrence stays.
    let mut keep: Vec<bool> = vec![true; basis.len()];
    for i in 0..basis.len() {
        if !keep[i] {
            continue;
        }
        for j in 0..basis.len() {
            if i == j || !keep[j] {
                continue;
            }
            if basis[j].plus.le_c(&basis[i].plus) && (basis[j].plus != basis[i].plus || j < i) {
                keep[i] = false;
                break;
            }
        }
    }
    let minimal: Vec<OrientedBinomial<T>> = basis
        .into_iter()
        .zip(keep)
        .filter_map(|(b, k)| k.then_some(b))
        .collect();

    let mut reduced: Vec<OrientedBinomial<T>> = minimal
        .iter()
        .map(|b| {
            let tail = monomial_normal_form(b.minus.clone(), &minimal);
            debug_assert_ne!(b.plus, tail);
            debug_assert_eq!(
                cmp.compare(&tail, &b.plus),
                Ordering::Less,
                "normal form of the tail stays below the head"
            );
            OrientedBinomial {
                plus: b.plus.clone(),
                minus: tail,
            }
        })
        .collect();
    reduced.sort_by(|a, b| cmp.compare(&a.plus, &b.plus));
    reduced
}

/// Divides both sides of each pair by the largest common power of variable
/// `i` — the binomial analogue of stripping `x_i` content.
fn strip_variable<T: Scalar>(
    pairs: Vec<(GradedVector<T>, GradedVector<T>)>,
    i: usize,
) -> Vec<(GradedVector<T>, GradedVector<T>)> {
    pairs
        .into_iter()
        .map(|(p, m)| {
            let c = p.coord(i).clone().min(m.coord(i).clone());
            if c.is_zero() {
                (p, m)
            } else {
                let mut pc = p.into_coords();
                let mut mc = m.into_coords();
                pc[i] = pc[i].clone() - c.clone();
                mc[i] = mc[i].clone() - c;
                (GradedVector::new(pc), GradedVector::new(mc))
            }
        })
        .collect()
}

/// Reduced Gröbner basis of the toric ideal of `s` in the monomial order
/// `x_order`, as pairs of exponent vectors over the `n` generators.
///
/// Starts from binomials of an integer basis of the exponent lattice
/// `{u ∈ ℤ^n : Σ u_i a_i = 0}` and saturates one variable at a time: a
/// reduced basis under [`SaturationOrder`] with `x_i` cheapest, with `x_i`
/// content stripped from every element, generates the colon ideal by
/// `x_i^∞`; one pass over all variables reaches the full toric ideal, which
/// equals the saturation of the lattice-basis ideal because the exponent
/// lattice of a kernel is saturated. A final reduction pass converts to the
/// requested order. Every returned pair satisfies
/// `Σ plus_i · a_i = Σ minus_i · a_i` (both sides factor the same semigroup
/// element); callers cross-check that invariant where it matters.
pub fn toric_exponent_basis<T: Scalar>(
    s: &AffineSemigroup<T>,
    x_order: &TermOrder,
) -> Vec<(GradedVector<T>, GradedVector<T>)> {
    let n = s.num_generators();
    debug_assert_eq!(x_order.dim(), n);

    let kernel = left_kernel(&rows_from_vectors(s.generators()));
    let mut current: Vec<(GradedVector<T>, GradedVector<T>)> = kernel
        .into_iter()
        .map(|u| {
            let plus: Vec<T> = u
                .iter()
                .map(|c| if c.is_positive() { c.clone() } else { T::zero() })
                .collect();
            let minus: Vec<T> = u
                .iter()
                .map(|c| if c.is_negative() { -c.clone() } else { T::zero() })
                .collect();
            (GradedVector::new(plus), GradedVector::new(minus))
        })
        .collect();
    if current.is_empty() {
        return Vec::new();
    }

    // The toric ideal is homogeneous for the positive grading by total
    // degree of the images, deg x_i = |a_i| ≥ 1.
    let weights: Vec<T> = s.generators().iter().map(|a| a.total()).collect();
    for i in 0..n {
        let ord = SaturationOrder::new(weights.clone(), i);
        let gb = reduced_basis(current, &ord);
        current = strip_variable(gb.into_iter().map(OrientedBinomial::into_pair).collect(), i);
    }

    reduced_basis(current, x_order)
        .into_iter()
        .map(OrientedBinomial::into_pair)
        .collect()
}

/// Reduced Gröbner basis of the ideal generated by the given `x`-space
/// differences, under `x_order`.
pub fn subideal_basis<T: Scalar>(
    relations: Vec<(GradedVector<T>, GradedVector<T>)>,
    x_order: &TermOrder,
) -> Vec<OrientedBinomial<T>> {
    reduced_basis(relations, x_order)
}

/// Whether `x^u - x^v` lies in the ideal presented by the reduced basis:
/// true iff both monomials share a normal form.
pub fn binomial_in_ideal<T: Scalar>(
    u: &GradedVector<T>,
    v: &GradedVector<T>,
    basis: &[OrientedBinomial<T>],
) -> bool {
    monomial_normal_form(u.clone(), basis) == monomial_normal_form(v.clone(), basis)
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

    /// Independent membership oracle for toric ideals: a difference of
    /// monomials lies in the toric ideal iff both exponent vectors factor the
    /// same semigroup element.
    fn same_degree(s: &S, u: &V, v: &V) -> bool {
        let deg = |e: &V| -> V {
            let mut acc = V::zeros(s.dim());
            for (i, a) in s.generators().iter().enumerate() {
                acc = acc.add(&a.scaled(e.coord(i)));
            }
            acc
        };
        deg(u) == deg(v)
    }

    #[test]
    fn planar_two_generator_kernel_is_principal() {
        let s = sg(&[&[2, 0], &[3, 0]]);
        let gb = toric_exponent_basis(&s, &TermOrder::grevlex(2));
        assert_eq!(gb.len(), 1);
        assert_eq!(gb[0], (v(&[3, 0]), v(&[0, 2])));
    }

    #[test]
    fn free_semigroup_has_zero_ideal() {
        let s = sg(&[&[1, 0], &[0, 1]]);
        assert!(toric_exponent_basis(&s, &TermOrder::grevlex(2)).is_empty());
    }

    #[test]
    fn numerical_complete_intersection_basis() {
        let s = sg(&[&[4], &[6], &[9]]);
        let gb = toric_exponent_basis(&s, &TermOrder::grevlex(3));
        let pairs: Vec<(V, V)> = gb.clone();
        assert!(pairs.contains(&(v(&[3, 0, 0]), v(&[0, 2, 0]))));
        assert!(pairs.contains(&(v(&[0, 3, 0]), v(&[0, 0, 2]))));
        for (p, m) in &gb {
            assert!(same_degree(&s, p, m));
        }

        // Membership by normal form agrees with the degree oracle on a grid
        // of exponent pairs.
        let basis = subideal_basis(gb, &TermOrder::grevlex(3));
        for a in 0..4_i64 {
            for b in 0..4_i64 {
                for c in 0..3_i64 {
                    let u = v(&[a, b, c]);
                    let w = v(&[b, c, a % 2]);
                    assert_eq!(
                        binomial_in_ideal(&u, &w, &basis),
                        same_degree(&s, &u, &w),
                        "membership mismatch at {u} vs {w}"
                    );
                }
            }
        }
    }

    #[test]
    fn four_generator_basis_is_degree_homogeneous_and_deterministic() {
        let s = sg(&[&[2, 11], &[3, 0], &[5, 9], &[7, 4]]);
        let gb = toric_exponent_basis(&s, &TermOrder::grevlex(4));
        assert!(!gb.is_empty());
        for (p, m) in &gb {
            assert!(same_degree(&s, p, m));
            assert!(p.min_c(m).is_zero(), "reduced toric basis is coprime");
        }
        let again = toric_exponent_basis(&s, &TermOrder::grevlex(4));
        assert_eq!(gb, again);
    }

    #[test]
    fn four_generator_membership_matches_degree_oracle() {
        let s = sg(&[&[2, 11], &[3, 0], &[5, 9], &[7, 4]]);
        let basis = subideal_basis(
            toric_exponent_basis(&s, &TermOrder::grevlex(4)),
            &TermOrder::grevlex(4),
        );
        // Exhaustive small grid plus a few structured pairs of equal degree.
        for a in 0..3_i64 {
            for b in 0..3_i64 {
                for c in 0..3_i64 {
                    let u = v(&[a, b, c, 1]);
                    let w = v(&[c, a, b, 0]);
                    assert_eq!(
                        binomial_in_ideal(&u, &w, &basis),
                        same_degree(&s, &u, &w),
                        "membership mismatch at {u} vs {w}"
                    );
                }
            }
        }
    }

    #[test]
    fn normal_form_is_stable_under_repeat() {
        let s = sg(&[&[2, 11], &[3, 0], &[5, 9], &[7, 4]]);
        let gb = subideal_basis(
            toric_exponent_basis(&s, &TermOrder::grevlex(4)),
            &TermOrder::grevlex(4),
        );
        let m = v(&[9, 4, 0, 3]);
        let nf = monomial_normal_form(m, &gb);
        assert_eq!(nf.clone(), monomial_normal_form(nf.clone(), &gb));
    }

    #[test]
    fn high_degree_four_generator_basis_completes() {
        // Exponents in this kernel reach the hundreds; the basis must still
        // come out quickly and degree-homogeneous.
        let s = sg(&[&[20, 0], &[24, 1], &[1, 25], &[0, 31]]);
        let gb = toric_exponent_basis(&s, &TermOrder::grevlex(4));
        assert!(gb.len() >= 12);
        for (p, m) in &gb {
            assert!(same_degree(&s, p, m));
            assert!(p.min_c(m).is_zero());
        }
    }

    #[test]
    fn five_generator_symmetric_degrees_basis_completes() {
        let s = sg(&[&[0, 47], &[30, 17], &[35, 12], &[42, 5], &[47, 0]]);
        let gb = toric_exponent_basis(&s, &TermOrder::grevlex(5));
        assert!(!gb.is_empty());
        for (p, m) in &gb {
            assert!(same_degree(&s, p, m));
        }
    }

    #[test]
    fn twelve_generator_basis_completes() {
        let s = sg(&[
            &[18, 9],
            &[18, 3],
            &[4, 1],
            &[20, 8],
            &[23, 10],
            &[8, 3],
            &[11, 5],
            &[11, 2],
            &[10, 3],
            &[14, 3],
            &[7, 2],
            &[7, 3],
        ]);
        let gb = toric_exponent_basis(&s, &TermOrder::grevlex(12));
        assert!(!gb.is_empty());
        for (p, m) in &gb {
            assert!(same_degree(&s, p, m));
        }
    }

    #[test]
    fn saturation_order_makes_cheap_variable_smallest() {
        // Equal weighted degree 6 under weights (2, 3): x1^3 vs x2^2. With
        // x1 cheapest, the monomial holding more x1 is smaller.
        let ord = SaturationOrder::new(vec![BigInt::from(2), BigInt::from(3)], 0);
        assert_eq!(ord.compare(&v(&[3, 0]), &v(&[0, 2])), Ordering::Less);
        // Weighted degree still dominates.
        assert_eq!(ord.compare(&v(&[4, 0]), &v(&[0, 2])), Ordering::Greater);
    }
}
