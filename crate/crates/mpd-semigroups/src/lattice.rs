//! Exact integer linear algebra: Hermite normal form, integer kernels,
//! fraction-free determinants and ranks.
//!
//! These primitives back the group-theoretic side of the library: the group
//! G(S) generated by an affine semigroup, lattice intersections for gluing
//! checks (G(S₁) ∩ G(S₂) = dℤ), determinants of RF-matrices, and rational
//! ranks of boundary maps in simplicial homology.
//!
//! Everything is fraction-free or carried out over exact integers; the only
//! divisions performed are exact by construction (Bareiss pivots, gcd
//! normalizations). Entry growth is real — callers instantiate these at
//! arbitrary precision (see [`crate::Int`]) unless the inputs are provably
//! tiny.

use crate::scalar::Scalar;
use crate::vector::GradedVector;

/// Dense row-major matrix as a plain nested `Vec`.
pub type Matrix<T> = Vec<Vec<T>>;

/// Converts a slice of vectors into matrix rows.
pub fn rows_from_vectors<T: Scalar>(vs: &[GradedVector<T>]) -> Matrix<T> {
    vs.iter().map(|v| v.coords().to_vec()).collect()
}

/// Row-style Hermite normal form.
///
/// Returns `(h, u)` with `u · a = h`, `u` unimodular, and `h` in row echelon
/// form: pivots positive, entries above each pivot reduced into `[0, pivot)`,
/// zero rows at the bottom. The nonzero rows of `h` are a canonical basis of
/// the row lattice of `a`.
pub fn hermite_normal_form<T: Scalar>(a: &Matrix<T>) -> (Matrix<T>, Matrix<T>) {
    let m = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut h = a.clone();
    let mut u: Matrix<T> = (0..m)
        .map(|i| {
            (0..m)
                .map(|j| if i == j { T::one() } else { T::zero() })
                .collect()
        })
        .collect();

    let mut pivot_row = 0;
    for col in 0..cols {
        if pivot_row == m {
            break;
        }
        // Euclidean reduction in this column until a single nonzero survives
        // among rows pivot_row..
        loop {
            // Row with the smallest nonzero |entry| in this column.
            let mut best: Option<usize> = None;
            for i in pivot_row..m {
                if !h[i][col].is_zero()
                    && best.is_none_or(|b| h[i][col].abs() < h[b][col].abs())
                {
                    best = Some(i);
                }
            }
            let Some(best) = best else { break };
            h.swap(pivot_row, best);
            u.swap(pivot_row, best);
            let mut done = true;
            for i in pivot_row + 1..m {
                if h[i][col].is_zero() {
                    continue;
                }
                let q = h[i][col].div_floor(&h[pivot_row][col]);
                row_axpy(&mut h, i, pivot_row, &q);
                row_axpy(&mut u, i, pivot_row, &q);
                if !h[i][col].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h[pivot_row][col].is_zero() {
            continue;
        }
        if h[pivot_row][col].is_negative() {
            negate_row(&mut h, pivot_row);
            negate_row(&mut u, pivot_row);
        }
        // Reduce the entries above the pivot into [0, pivot).
        for i in 0..pivot_row {
            let q = h[i][col].div_floor(&h[pivot_row][col]);
            if !q.is_zero() {
                row_axpy(&mut h, i, pivot_row, &q);
                row_axpy(&mut u, i, pivot_row, &q);
            }
        }
        pivot_row += 1;
    }
    (h, u)
}

/// Canonical basis of the lattice generated by the given vectors: the nonzero
/// rows of the Hermite normal form.
pub fn lattice_basis<T: Scalar>(vs: &[GradedVector<T>]) -> Vec<GradedVector<T>> {
    let (h, _) = hermite_normal_form(&rows_from_vectors(vs));
    h.into_iter()
        .filter(|row| row.iter().any(|x| !x.is_zero()))
        .map(GradedVector::new)
        .collect()
}

/// Basis of the left integer kernel `{x ∈ ℤ^m : x · a = 0}`.
///
/// These are the unimodular-transform rows that map to zero rows of the
/// Hermite normal form.
pub fn left_kernel<T: Scalar>(a: &Matrix<T>) -> Matrix<T> {
    let (h, u) = hermite_normal_form(a);
    h.iter()
        .zip(u)
        .filter(|(hrow, _)| hrow.iter().all(|x| x.is_zero()))
        .map(|(_, urow)| urow)
        .collect()
}

/// Rank over ℚ of an integer matrix (= number of nonzero HNF rows).
pub fn rank<T: Scalar>(a: &Matrix<T>) -> usize {
    let (h, _) = hermite_normal_form(a);
    h.iter()
        .filter(|row| row.iter().any(|x| !x.is_zero()))
        .count()
}

/// Determinant by the Bareiss fraction-free algorithm.
///
/// Exact over any [`Scalar`]; interior divisions are exact by the Sylvester
/// identity. Square input required.
pub fn determinant<T: Scalar>(a: &Matrix<T>) -> T {
    let n = a.len();
    assert!(a.iter().all(|r| r.len() == n), "determinant needs a square matrix");
    if n == 0 {
        return T::one();
    }
    let mut m = a.clone();
    let mut sign = T::one();
    let mut prev = T::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return T::zero();
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[i][j].clone() * m[k][k].clone() - m[i][k].clone() * m[k][j].clone();
                let (q, r) = num.div_rem(&prev);
                debug_assert!(r.is_zero(), "Bareiss division must be exact");
                m[i][j] = q;
            }
            m[i][k] = T::zero();
        }
        prev = m[k][k].clone();
    }
    sign * m[n - 1][n - 1].clone()
}

fn row_axpy<T: Scalar>(m: &mut Matrix<T>, target: usize, source: usize, q: &T) {
    if q.is_zero() {
        return;
    }
    for j in 0..m[target].len() {
        let delta = q.clone() * m[source][j].clone();
        m[target][j] -= delta;
    }
}

fn negate_row<T: Scalar>(m: &mut Matrix<T>, row: usize) {
    for x in &mut m[row] {
        *x = -x.clone();
    }
}
