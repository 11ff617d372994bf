//! Shared fixtures and oracles for the integration suites, named by their
//! structure.

#![allow(dead_code)]

use std::cmp::Ordering;

use mpd_semigroups::order::TermOrder;
use mpd_semigroups::{Semigroup, Vector};
use num_traits::{Signed, ToPrimitive};

/// Builds a vector from machine integers.
pub fn v(coords: &[i64]) -> Vector {
    Vector::from_i64s(coords)
}

/// Builds a semigroup from slices of machine integers.
pub fn sg(gens: &[&[i64]]) -> Semigroup {
    Semigroup::new(gens.iter().map(|g| v(g)).collect()).expect("fixture generators are minimal")
}

/// Builds a numerical semigroup (dimension one).
pub fn numerical(gens: &[i64]) -> Semigroup {
    Semigroup::new(gens.iter().map(|&g| v(&[g])).collect())
        .expect("fixture generators are minimal")
}

/// Four generators in ℕ², MPD with PF = {(64,69), (77,58)}.
pub fn four_gen_mpd() -> Semigroup {
    sg(&[&[2, 11], &[3, 0], &[5, 9], &[7, 4]])
}

/// Twelve generators in ℕ², MPD with PF = {(13,4)}; the gap set is
/// infinite (the ray through (6,1) meets cone(S) ∖ S unboundedly).
pub fn twelve_gen_mpd() -> Semigroup {
    sg(&[
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
    ])
}

/// Six generators in ℕ², a pseudo-symmetric C-semigroup with 11 gaps,
/// PF = {(1,3), (2,6)}, and Frobenius element (2,6) under grlex.
pub fn pseudo_symmetric_six_gen() -> Semigroup {
    sg(&[&[0, 1], &[3, 0], &[4, 0], &[1, 4], &[5, 0], &[2, 7]])
}

/// Four generators in ℕ², a symmetric C-semigroup with gap set
/// {(1,0), (1,1), (1,2)} and Frobenius element (1,2).
pub fn symmetric_four_gen() -> Semigroup {
    sg(&[&[0, 1], &[2, 0], &[3, 0], &[1, 3]])
}

/// Five generators in ℕ², a symmetric C-semigroup with PF = {(7,2)}.
pub fn symmetric_five_gen() -> Semigroup {
    sg(&[&[0, 1], &[3, 0], &[5, 0], &[1, 3], &[2, 3]])
}

/// Six generators in ℕ² forming a gluing of the first four and the last
/// two with common element d = (18,18); PF = {(49,49)}.
pub fn glued_six_gen() -> Semigroup {
    sg(&[&[0, 9], &[18, 0], &[27, 0], &[9, 18], &[8, 8], &[10, 10]])
}

/// Four generators in ℕ² whose defining ideal is generic (12 minimal
/// generators, all of full support); PF has nine elements.
pub fn generic_four_gen() -> Semigroup {
    sg(&[&[20, 0], &[24, 1], &[1, 25], &[0, 31]])
}

/// Five generators in ℕ² with three pseudo-Frobenius elements
/// {(5,13), (6,11), (9,6)}; the gap set is infinite.
pub fn five_gen_three_pf() -> Semigroup {
    sg(&[&[1, 3], &[1, 5], &[2, 1], &[2, 3], &[5, 1]])
}

/// The numerical generators `(pq, q(p+1), p(p+1), p(p+1)+q)` for
/// `q = 2h−1`, `p = 2h`.
pub fn bresinsky_numerical_gens(h: i64) -> [i64; 4] {
    let q = 2 * h - 1;
    let p = 2 * h;
    [p * q, q * (p + 1), p * (p + 1), p * (p + 1) + q]
}

/// The planar embedding of the Bresinsky family: the four numerical
/// generators lifted to the line x + y = p(p+1)+q, plus the two axis
/// points. Simplicial with rays (0, n₄) and (n₄, 0); |QF| = 4h and
/// PF = {(16h³−6h+1, 8h²−6h+1)}.
pub fn bresinsky(h: i64) -> Semigroup {
    let n = bresinsky_numerical_gens(h);
    let top = n[3];
    let mut gens = vec![v(&[0, top])];
    for nk in &n[..3] {
        gens.push(v(&[*nk, top - *nk]));
    }
    gens.push(v(&[top, 0]));
    Semigroup::new(gens).expect("the lifted generators are minimal")
}

/// Every C-semigroup fixture whose cone is the full orthant, so the pairing
/// `g ↦ F − g` stays inside ℕ^d.
pub fn full_cone_c_fixtures() -> Vec<(&'static str, Semigroup)> {
    vec![
        ("symmetric_four_gen", symmetric_four_gen()),
        ("symmetric_five_gen", symmetric_five_gen()),
        ("pseudo_symmetric_six_gen", pseudo_symmetric_six_gen()),
        ("numerical_2_3", numerical(&[2, 3])),
        ("numerical_3_4_5", numerical(&[3, 4, 5])),
        ("numerical_4_6_9", numerical(&[4, 6, 9])),
        ("numerical_4_6_7_9", numerical(&[4, 6, 7, 9])),
        ("numerical_5_6_8", numerical(&[5, 6, 8])),
    ]
}

/// Asserts the term-order laws on one triple: reflexive equality,
/// antisymmetry, transitivity, translation invariance, and minimality of 0.
pub fn assert_order_laws(order: &TermOrder, a: &Vector, b: &Vector, c: &Vector) {
    assert_eq!(order.compare(a, a), Ordering::Equal, "reflexivity");
    assert_eq!(
        order.compare(a, b),
        order.compare(b, a).reverse(),
        "antisymmetry on {a} vs {b}"
    );
    let ab = order.compare(a, b);
    let bc = order.compare(b, c);
    if ab != Ordering::Greater && bc != Ordering::Greater {
        assert_ne!(
            order.compare(a, c),
            Ordering::Greater,
            "transitivity on {a} ≼ {b} ≼ {c}"
        );
    }
    assert_eq!(
        ab,
        order.compare(&a.add(c), &b.add(c)),
        "translation invariance by {c}"
    );
    let zero = Vector::zeros(a.dim());
    assert_ne!(order.compare(&zero, a), Ordering::Greater, "0 is minimal");
    if order.compare(a, b) == Ordering::Equal {
        assert_eq!(a, b, "the order must be total on distinct vectors");
    }
}

/// Independent factorization oracle: a plain odometer over the exponent box
/// `∏ [0, cap_i]`, where `cap_i` bounds how often generator `i` fits under
/// `b` in any positive coordinate. Returns the exponent vectors with
/// `Σ e_i·gens_i = b`, sorted ascending.
pub fn brute_force_factorizations(gens: &[Vector], b: &Vector) -> Vec<Vector> {
    let d = b.dim();
    let caps: Vec<i64> = gens
        .iter()
        .map(|g| {
            (0..d)
                .filter(|&j| g.coord(j).is_positive())
                .map(|j| {
                    let gj = g.coord(j).to_i64().expect("fixture-sized coordinate");
                    let bj = b.coord(j).to_i64().expect("fixture-sized coordinate");
                    bj / gj
                })
                .min()
                .expect("generators are nonzero")
        })
        .collect();
    let small = |x: &Vector| -> Vec<i64> {
        x.coords()
            .iter()
            .map(|c| c.to_i64().expect("fixture-sized coordinate"))
            .collect()
    };
    let gens_i64: Vec<Vec<i64>> = gens.iter().map(&small).collect();
    let target = small(b);
    let mut counters = vec![0i64; gens.len()];
    let mut found = Vec::new();
    'odometer: loop {
        let mut sum = vec![0i64; d];
        for (e, g) in counters.iter().zip(&gens_i64) {
            for (sj, gj) in sum.iter_mut().zip(g) {
                *sj += e * gj;
            }
        }
        if sum == target {
            found.push(Vector::from_i64s(&counters));
        }
        for i in 0..counters.len() {
            if counters[i] < caps[i] {
                counters[i] += 1;
                counters[..i].iter_mut().for_each(|c| *c = 0);
                continue 'odometer;
            }
        }
        break;
    }
    found.sort();
    found
}

/// Visits every index tuple in the box `∏ [0, dims_i)` in odometer order.
pub fn for_each_box(dims: &[usize], visit: &mut dyn FnMut(&[usize])) {
    if dims.iter().any(|&d| d == 0) {
        return;
    }
    let mut idx = vec![0usize; dims.len()];
    'odometer: loop {
        visit(&idx);
        for i in 0..idx.len() {
            if idx[i] + 1 < dims[i] {
                idx[i] += 1;
                idx[..i].iter_mut().for_each(|c| *c = 0);
                continue 'odometer;
            }
        }
        return;
    }
}

/// Deterministic family of small numerical gluings `⟨k₂·A, k₁·B⟩` with
/// `k₁ ∈ A`, `k₂ ∈ B`, `gcd(k₁, k₂) = 1`, glued along `d = k₁·k₂`.
/// Returns `(semigroup, left indices, d)` triples; combinations whose
/// union fails to be a minimal generating set are skipped.
pub fn numerical_gluing_fixtures(count: usize) -> Vec<(Semigroup, Vec<usize>, Vector)> {
    let seeds: &[&[i64]] = &[&[2, 3], &[2, 5], &[3, 4], &[3, 5], &[4, 5], &[3, 4, 5]];
    let elements = |gens: &[i64], up_to: i64| -> Vec<i64> {
        let s = numerical(gens);
        (2..=up_to)
            .filter(|&x| s.contains(&v(&[x])))
            .collect()
    };
    let gcd = |mut a: i64, mut b: i64| {
        while b != 0 {
            (a, b) = (b, a % b);
        }
        a
    };
    let mut out = Vec::new();
    for a_seed in seeds {
        for b_seed in seeds {
            for k1 in elements(a_seed, 9) {
                for k2 in elements(b_seed, 9) {
                    if gcd(k1, k2) != 1 {
                        continue;
                    }
                    let gens: Vec<Vector> = a_seed
                        .iter()
                        .map(|&a| v(&[k2 * a]))
                        .chain(b_seed.iter().map(|&b| v(&[k1 * b])))
                        .collect();
                    let Ok(s) = Semigroup::new(gens) else {
                        continue;
                    };
                    let left: Vec<usize> = (0..a_seed.len()).collect();
                    out.push((s, left, v(&[k1 * k2])));
                    if out.len() == count {
                        return out;
                    }
                }
            }
        }
    }
    out
}

/// A tiny deterministic generator for reproducible pseudo-random integers.
pub struct Lcg(u64);

impl Lcg {
    pub fn new(seed: u64) -> Self {
        Lcg(seed.wrapping_mul(2862933555777941757).wrapping_add(3037000493))
    }

    /// The next value in `[0, m)`.
    pub fn below(&mut self, m: u64) -> u64 {
        self.0 = self
            .0
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        (self.0 >> 33) % m
    }

    /// A vector of `dim` coordinates drawn from `[0, m)`.
    pub fn vector(&mut self, dim: usize, m: u64) -> Vector {
        let coords: Vec<i64> = (0..dim).map(|_| self.below(m) as i64).collect();
        Vector::from_i64s(&coords)
    }
}

/// Asserts the gap-pairing identity on a full-cone C-semigroup: under
/// `g ↦ F − g` the paired gaps biject with `{s ∈ S : s ≤_c F}`, so
/// `|H(S)| = |{s ∈ S : s ≤_c F}| + #unpaired`, with no unpaired gaps
/// exactly in the symmetric case.
pub fn assert_pairing_identity(name: &str, s: &Semigroup) {
    use mpd_semigroups::classify::{classify_symmetry, SymmetryClass};
    let order = TermOrder::grlex(s.dim());
    let report = classify_symmetry(s, &order).expect("fixtures are C-semigroups");
    let g = mpd_semigroups::gaps::gaps(s, None);
    let dims: Vec<usize> = report
        .frobenius
        .coords()
        .iter()
        .map(|c| c.to_usize().expect("fixture-sized Frobenius element") + 1)
        .collect();
    let mut membership = s.membership();
    let mut below = 0usize;
    for_each_box(&dims, &mut |idx| {
        let coords: Vec<i64> = idx.iter().map(|&k| k as i64).collect();
        if membership.contains(&Vector::from_i64s(&coords)) {
            below += 1;
        }
    });
    assert_eq!(
        g.len(),
        below + report.unpaired.len(),
        "pairing count on {name}"
    );
    assert_eq!(
        report.classification == SymmetryClass::Symmetric,
        report.unpaired.is_empty(),
        "symmetry criterion on {name}"
    );
    if report.classification == SymmetryClass::Symmetric {
        assert_eq!(g.len(), below, "equality characterizes symmetry on {name}");
    }
}

/// When the fixture is symmetric or pseudo-symmetric, asserts that the
/// Wilf-style count holds under both graded orders and returns `true`;
/// returns `false` for other classes without asserting anything.
pub fn assert_wilf_if_symmetric(name: &str, s: &Semigroup) -> bool {
    use mpd_semigroups::classify::{classify_symmetry, wilf_check, SymmetryClass};
    let grlex = TermOrder::grlex(s.dim());
    let class = classify_symmetry(s, &grlex)
        .expect("fixtures are C-semigroups")
        .classification;
    if !matches!(
        class,
        SymmetryClass::Symmetric | SymmetryClass::PseudoSymmetric
    ) {
        return false;
    }
    for order in [grlex, TermOrder::grevlex(s.dim())] {
        let report = wilf_check(s, &order).expect("graded order on a C-semigroup");
        assert!(report.holds, "count fails on {name}");
    }
    true
}

/// Asserts the zero pattern on every ordered pseudo-Frobenius pair `(f, f')`
/// with `f + f' ∉ S`: all factorization pairs have `m_{ij}·m'_{ji} = 0`.
/// Returns how many pairs satisfied the hypothesis.
pub fn assert_zero_pattern_on_pf_pairs(s: &Semigroup, pf: &[Vector]) -> usize {
    let mut checked = 0;
    for f in pf {
        for fp in pf {
            if s.contains(&f.add(fp)) {
                continue;
            }
            assert!(
                mpd_semigroups::rf::check_zero_pattern(s, f, fp).expect("hypothesis was checked"),
                "zero pattern must hold for f = {f}, f' = {fp}"
            );
            checked += 1;
        }
    }
    checked
}
