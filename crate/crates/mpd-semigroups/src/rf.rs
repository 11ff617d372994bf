//! Row-factorization matrices of pseudo-Frobenius elements and the
//! binomial relations they induce.
//!
//! For a pseudo-Frobenius element `f` of `S = ⟨a_1,…,a_n⟩`, each shifted
//! point `f + a_i` lies in `S`, and every factorization of it misses `a_i`
//! (an `a_i` in the factorization would put `f` itself in `S`). A
//! *row-factorization matrix* (RF-matrix) of `f` stacks one such
//! factorization per row, recentred so the diagonal is `-1`: row `i` is
//! `P_i - e_i` where `P_i` is a factorization of `f + a_i`. Every row is a
//! signed expression of the same element, `Σ_j m_{ij} a_j = f`, so the rows
//! differ by kernel vectors of the generator matrix — for groups of rank at
//! least two the matrix is singular.
//!
//! # RF-relations
//!
//! Two rows `i ≠ j` of (possibly different) RF-matrices of `f` witness
//! monomial identities in the semigroup ring: `x^{P_i + e_j}` and
//! `x^{P_j + e_i}` both have degree `f + a_i + a_j`, so their difference is
//! a binomial of the toric ideal, the *RF-relation* `φ_{ij}`. After
//! cancelling common factors, its degree is at most `f + a_i + a_j` with
//! equality exactly when the two monomials have disjoint supports. The
//! relations harvested over a certified pseudo-Frobenius set frequently
//! generate the whole toric ideal ([`generated_by_rf`] decides this with a
//! Gröbner basis of the subideal).
//!
//! # Zero pattern
//!
//! For pseudo-Frobenius elements `f, f'` with `f + f' ∉ S`, opposite
//! entries of their RF-matrices annihilate: `m_{ij} · m'_{ji} = 0` for all
//! `i ≠ j` and every choice of rows. Otherwise `a_i` and `a_j` could be
//! cancelled between the two signed expressions, writing `f + f'` as a
//! nonnegative combination. [`check_zero_pattern`] verifies the pattern
//! exhaustively over all row choices.

use thiserror::Error;

use crate::gaps::PfSet;
use crate::groebner::{binomial_in_ideal, subideal_basis};
use crate::lattice::determinant;
use crate::order::TermOrder;
use crate::scalar::Scalar;
use crate::semigroup::AffineSemigroup;
use crate::toric::{minimal_generators, Binomial};
use crate::vector::GradedVector;

/// Errors from RF-matrix computations.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum RfError {
    /// RF-matrices attach to pseudo-Frobenius elements only.
    #[error("{0} is not a pseudo-Frobenius element")]
    NotPseudoFrobenius(String),
    /// The zero-pattern theorem assumes the two elements do not add up into
    /// the semigroup.
    #[error("f + f' = {0} lies in the semigroup; the zero-pattern statement does not apply")]
    SumInSemigroup(String),
    /// The operation needs a certified pseudo-Frobenius set.
    #[error("this operation requires a certified pseudo-Frobenius set")]
    UncertifiedPF,
    /// A supplied row is not a valid recentred factorization of `f + a_i`.
    #[error("row {0} is not a recentred factorization of f + a_{0}")]
    InvalidRowChoice(usize),
}

/// A row-factorization matrix: square, `-1` on the diagonal, nonnegative
/// elsewhere, every row a signed expression of the same pseudo-Frobenius
/// element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RFMatrix<T: Scalar> {
    rows: Vec<GradedVector<T>>,
}

impl<T: Scalar> RFMatrix<T> {
    /// Validates and wraps explicit rows: row `i` must have `-1` in column
    /// `i`, nonnegative entries elsewhere, and satisfy
    /// `Σ_j m_{ij} a_j = f`.
    pub fn new(
        s: &AffineSemigroup<T>,
        f: &GradedVector<T>,
        rows: Vec<GradedVector<T>>,
    ) -> Result<RFMatrix<T>, RfError> {
        let n = s.num_generators();
        if rows.len() != n {
            return Err(RfError::InvalidRowChoice(rows.len().min(n.saturating_sub(1))));
        }
        let minus_one = T::zero() - T::one();
        for (i, row) in rows.iter().enumerate() {
            if row.dim() != n || row.coord(i) != &minus_one {
                return Err(RfError::InvalidRowChoice(i));
            }
            if row
                .iter()
                .enumerate()
                .any(|(j, c)| j != i && c < &T::zero())
            {
                return Err(RfError::InvalidRowChoice(i));
            }
            let mut combination = GradedVector::zeros(s.dim());
            for (a, c) in s.generators().iter().zip(row.iter()) {
                combination = combination.add(&a.scaled(c));
            }
            if &combination != f {
                return Err(RfError::InvalidRowChoice(i));
            }
        }
        Ok(RFMatrix { rows })
    }

    pub(crate) fn from_factorizations(rows: Vec<GradedVector<T>>) -> RFMatrix<T> {
        RFMatrix { rows }
    }

    /// Matrix size (one row and column per generator).
    pub fn size(&self) -> usize {
        self.rows.len()
    }

    /// Row `i` (diagonal entry `-1` included).
    pub fn row(&self, i: usize) -> &GradedVector<T> {
        &self.rows[i]
    }

    /// All rows.
    pub fn rows(&self) -> &[GradedVector<T>] {
        &self.rows
    }

    /// Single entry `m_{ij}`.
    pub fn entry(&self, i: usize, j: usize) -> &T {
        self.rows[i].coord(j)
    }

    /// The factorization of `f + a_i` encoded by row `i` (the row with the
    /// diagonal recentred away: `row_i + e_i`).
    pub fn shift_factorization(&self, i: usize) -> GradedVector<T> {
        let mut coords: Vec<T> = self.rows[i].iter().cloned().collect();
        coords[i] = coords[i].clone() + T::one();
        GradedVector::new(coords)
    }

    /// Exact determinant (fraction-free elimination).
    pub fn determinant(&self) -> T {
        let entries: Vec<Vec<T>> = self
            .rows
            .iter()
            .map(|r| r.iter().cloned().collect())
            .collect();
        determinant(&entries)
    }
}

impl<T: Scalar> std::fmt::Display for RFMatrix<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{row}")?;
        }
        write!(f, "]")
    }
}

fn require_pseudo_frobenius<T: Scalar>(
    s: &AffineSemigroup<T>,
    f: &GradedVector<T>,
) -> Result<(), RfError> {
    let mut membership = s.membership();
    let is_pf = !membership.contains(f)
        && s.generators()
            .iter()
            .all(|a| membership.contains(&f.add(a)));
    if is_pf {
        Ok(())
    } else {
        Err(RfError::NotPseudoFrobenius(f.to_string()))
    }
}

/// The factorization fibers of all shifts `f + a_i`, with the absence of
/// `a_i` in each asserted.
fn shift_fibers<T: Scalar>(
    s: &AffineSemigroup<T>,
    f: &GradedVector<T>,
) -> Result<Vec<Vec<GradedVector<T>>>, RfError> {
    require_pseudo_frobenius(s, f)?;
    let fibers: Vec<Vec<GradedVector<T>>> = s
        .generators()
        .iter()
        .map(|a| s.factorizations(&f.add(a)))
        .collect();
    for (i, fiber) in fibers.iter().enumerate() {
        debug_assert!(!fiber.is_empty());
        assert!(
            fiber.iter().all(|u| u.coord(i).is_zero()),
            "no factorization of f + a_i may use a_i when f is outside S"
        );
    }
    Ok(fibers)
}

fn recenter<T: Scalar>(factorization: &GradedVector<T>, i: usize) -> GradedVector<T> {
    let mut coords: Vec<T> = factorization.iter().cloned().collect();
    coords[i] = coords[i].clone() - T::one();
    GradedVector::new(coords)
}

/// The number of RF-matrices of `f`: the product of the fiber sizes of the
/// shifts `f + a_i`.
pub fn rf_matrix_count<T: Scalar>(
    s: &AffineSemigroup<T>,
    f: &GradedVector<T>,
) -> Result<u128, RfError> {
    let fibers = shift_fibers(s, f)?;
    Ok(fibers.iter().map(|fb| fb.len() as u128).product())
}

/// The canonical RF-matrix of `f`: each row recentres the first
/// factorization of `f + a_i` in ascending lexicographic order.
pub fn rf_matrix<T: Scalar>(
    s: &AffineSemigroup<T>,
    f: &GradedVector<T>,
) -> Result<RFMatrix<T>, RfError> {
    let fibers = shift_fibers(s, f)?;
    Ok(RFMatrix::from_factorizations(
        fibers
            .iter()
            .enumerate()
            .map(|(i, fiber)| recenter(&fiber[0], i))
            .collect(),
    ))
}

/// All RF-matrices of `f`, ordered by the row choices (first factorization
/// first), so the leading matrix is the canonical one of [`rf_matrix`].
pub fn rf_matrices<T: Scalar>(
    s: &AffineSemigroup<T>,
    f: &GradedVector<T>,
) -> Result<Vec<RFMatrix<T>>, RfError> {
    let fibers = shift_fibers(s, f)?;
    let mut choices = vec![0usize; fibers.len()];
    let mut out = Vec::new();
    loop {
        out.push(RFMatrix::from_factorizations(
            choices
                .iter()
                .enumerate()
                .map(|(i, &c)| recenter(&fibers[i][c], i))
                .collect(),
        ));
        let mut pos = fibers.len();
        let done = loop {
            if pos == 0 {
                break true;
            }
            pos -= 1;
            choices[pos] += 1;
            if choices[pos] < fibers[pos].len() {
                break false;
            }
            choices[pos] = 0;
        };
        if done {
            return Ok(out);
        }
    }
}

/// All RF-relations of a single pseudo-Frobenius element: for every pair
/// `i < j` and every choice of factorizations `P_i` of `f + a_i` and `P_j`
/// of `f + a_j`, the binomial `x^{P_i + e_j} - x^{P_j + e_i}` (common
/// factors cancelled), deduplicated up to sign and with trivial differences
/// dropped.
pub fn rf_relations_of<T: Scalar>(
    s: &AffineSemigroup<T>,
    f: &GradedVector<T>,
) -> Result<Vec<Binomial<T>>, RfError> {
    let fibers = shift_fibers(s, f)?;
    let n = fibers.len();
    let unit = |k: usize| {
        let mut coords = vec![T::zero(); n];
        coords[k] = T::one();
        GradedVector::new(coords)
    };
    let mut out: Vec<Binomial<T>> = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            for pi in &fibers[i] {
                for pj in &fibers[j] {
                    let u = pi.add(&unit(j));
                    let v = pj.add(&unit(i));
                    if u == v {
                        continue;
                    }
                    let b = Binomial::new(s, &u, &v)
                        .expect("both sides have degree f + a_i + a_j by construction");
                    if !out.iter().any(|known| known.same_up_to_sign(&b)) {
                        out.push(b);
                    }
                }
            }
        }
    }
    Ok(out)
}

/// The RF-relations harvested over a whole certified pseudo-Frobenius set,
/// deduplicated up to sign.
pub fn rf_relations<T: Scalar>(
    s: &AffineSemigroup<T>,
    pf: &PfSet<T>,
) -> Result<Vec<Binomial<T>>, RfError> {
    if !pf.is_certified() {
        return Err(RfError::UncertifiedPF);
    }
    let mut out: Vec<Binomial<T>> = Vec::new();
    for f in pf.elements() {
        for b in rf_relations_of(s, f)? {
            if !out.iter().any(|known| known.same_up_to_sign(&b)) {
                out.push(b);
            }
        }
    }
    Ok(out)
}

/// Whether an RF-relation kept its full degree `f + a_i + a_j` — no common
/// factor was cancelled, equivalently the two monomials have disjoint
/// supports and still carry `x_j` and `x_i` respectively.
pub fn relation_has_full_degree<T: Scalar>(
    s: &AffineSemigroup<T>,
    f: &GradedVector<T>,
    i: usize,
    j: usize,
    relation: &Binomial<T>,
) -> bool {
    let full = f
        .add(&s.generators()[i])
        .add(&s.generators()[j]);
    relation.degree() == &full
}

/// Verifies the zero pattern for a pair of pseudo-Frobenius elements with
/// `f + f' ∉ S`: over every choice of rows, `m_{ij} · m'_{ji} = 0` for all
/// `i ≠ j`. Returns the theorem's verdict (always true — a counterexample
/// would disprove it) or an error when the hypothesis fails.
pub fn check_zero_pattern<T: Scalar>(
    s: &AffineSemigroup<T>,
    f: &GradedVector<T>,
    f_prime: &GradedVector<T>,
) -> Result<bool, RfError> {
    let sum = f.add(f_prime);
    if s.contains(&sum) {
        return Err(RfError::SumInSemigroup(sum.to_string()));
    }
    let fibers = shift_fibers(s, f)?;
    let fibers_prime = shift_fibers(s, f_prime)?;
    let n = fibers.len();
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            for pi in &fibers[i] {
                for qj in &fibers_prime[j] {
                    // m_ij = (P_i)_j and m'_ji = (P'_j)_i: off-diagonal
                    // entries equal the factorization exponents directly.
                    if !pi.coord(j).is_zero() && !qj.coord(i).is_zero() {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

/// Outcome of testing whether RF-relations generate the toric ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RfGeneration<T: Scalar> {
    /// Every minimal generator reduces to zero against the RF-relation
    /// subideal.
    Generated,
    /// The toric ideal is zero and the pseudo-Frobenius set empty; nothing
    /// to generate.
    VacuouslyGenerated,
    /// Minimal generators outside the subideal spanned by the RF-relations.
    NotGenerated { missing: Vec<Binomial<T>> },
}

/// Decides whether the RF-relations of a certified pseudo-Frobenius set
/// generate the toric ideal: a Gröbner basis of the subideal they span is
/// computed, and every minimal generator of the toric ideal is tested for
/// membership by normal-form equality of its two monomials.
pub fn generated_by_rf<T: Scalar>(
    s: &AffineSemigroup<T>,
    pf: &PfSet<T>,
) -> Result<RfGeneration<T>, RfError> {
    let relations = rf_relations(s, pf)?;
    let generators = minimal_generators(s);
    if relations.is_empty() {
        return Ok(if generators.is_empty() {
            RfGeneration::VacuouslyGenerated
        } else {
            RfGeneration::NotGenerated {
                missing: generators,
            }
        });
    }
    let order = TermOrder::grevlex(s.num_generators());
    let basis = subideal_basis(
        relations
            .iter()
            .map(|b| (b.plus().clone(), b.minus().clone()))
            .collect(),
        &order,
    );
    let missing: Vec<Binomial<T>> = generators
        .into_iter()
        .filter(|g| !binomial_in_ideal(g.plus(), g.minus(), &basis))
        .collect();
    if missing.is_empty() {
        Ok(RfGeneration::Generated)
    } else {
        Ok(RfGeneration::NotGenerated { missing })
    }
}
