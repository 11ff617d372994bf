//! The release gate: every criterion below must hold, each within its time
//! budget. One `PASS`/`FAIL` line is printed per criterion; the gate fails
//! if any criterion does.

mod common;

use std::any::Any;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use common::*;
use mpd_semigroups::classify::quasi_frobenius;
use mpd_semigroups::gaps::{
    frobenius_element, gaps, pseudo_frobenius, pseudo_frobenius_within,
};
use mpd_semigroups::gluing::{
    decompose, find_gluings, pf_of_gluing, rf_generation_transfer, verify_gluing,
};
use mpd_semigroups::order::TermOrder;
use mpd_semigroups::resolution::{
    betti_table, frobenius_from_hilbert, k_polynomial, KPolyStrategy,
};
use mpd_semigroups::rf::{
    generated_by_rf, rf_matrices, rf_matrix, rf_relations_of, RFMatrix, RfGeneration,
};
use mpd_semigroups::toric::{is_generic, minimal_generators, Binomial};
use mpd_semigroups::{Int, Semigroup, Vector};
use num_traits::Zero;

/// Asserts that an RF-matrix has exactly the given rows.
fn assert_rf_rows(m: &RFMatrix<Int>, rows: &[&[i64]]) {
    assert_eq!(m.size(), rows.len(), "matrix size");
    for (i, row) in rows.iter().enumerate() {
        assert_eq!(m.row(i), &v(row), "row {i}");
    }
}

/// Asserts that `got` equals the listed binomials up to sign, each matched
/// exactly once.
fn assert_generators_match(
    s: &Semigroup,
    got: &[Binomial<Int>],
    expected: &[(&[i64], &[i64])],
) {
    assert_eq!(got.len(), expected.len(), "generator count");
    for (plus, minus) in expected {
        let want = Binomial::new(s, &v(plus), &v(minus))
            .expect("the listed binomial lies in the toric ideal");
        assert_eq!(
            got.iter().filter(|g| g.same_up_to_sign(&want)).count(),
            1,
            "expected exactly one generator matching {want}"
        );
    }
}

/// Criterion 1: the four-generator fixture has certified
/// PF = {(64,69), (77,58)}.
fn c1_pf_of_four_generators() {
    let s = four_gen_mpd();
    let pf = pseudo_frobenius(&s);
    assert!(pf.is_certified());
    assert_eq!(pf.elements(), &[v(&[64, 69]), v(&[77, 58])]);
}

/// Criterion 2: the twelve-generator fixture has certified PF = {(13,4)},
/// and a direct definition scan below twice the generator sum agrees.
fn c2_pf_of_twelve_generators() {
    let s = twelve_gen_mpd();
    let pf = pseudo_frobenius(&s);
    assert!(pf.is_certified());
    assert_eq!(pf.elements(), &[v(&[13, 4])]);

    let bound = s.generator_sum().scaled(&Int::from(2));
    assert_eq!(bound, v(&[302, 104]));
    let within = pseudo_frobenius_within(&s, &bound);
    assert!(!within.is_certified());
    assert_eq!(within.elements(), &[v(&[13, 4])]);
}

/// Criterion 3: exact gap sets and Frobenius elements of the symmetric
/// four-generator and pseudo-symmetric six-generator fixtures.
fn c3_gap_sets_and_frobenius() {
    let grlex = TermOrder::grlex(2);

    let s4 = symmetric_four_gen();
    let g4 = gaps(&s4, None);
    assert!(g4.is_certified());
    assert_eq!(g4.elements(), &[v(&[1, 0]), v(&[1, 1]), v(&[1, 2])]);
    let f4 = frobenius_element(&s4, &grlex, None).unwrap();
    assert!(f4.status.is_certified());
    assert_eq!(f4.element, v(&[1, 2]));

    let s6 = pseudo_symmetric_six_gen();
    let g6 = gaps(&s6, None);
    assert!(g6.is_certified());
    assert_eq!(
        g6.elements(),
        &[
            v(&[1, 0]),
            v(&[1, 1]),
            v(&[1, 2]),
            v(&[1, 3]),
            v(&[2, 0]),
            v(&[2, 1]),
            v(&[2, 2]),
            v(&[2, 3]),
            v(&[2, 4]),
            v(&[2, 5]),
            v(&[2, 6]),
        ]
    );
    let pf6 = pseudo_frobenius(&s6);
    assert!(pf6.is_certified());
    assert_eq!(pf6.elements(), &[v(&[1, 3]), v(&[2, 6])]);
    let f6 = frobenius_element(&s6, &grlex, None).unwrap();
    assert_eq!(f6.element, v(&[2, 6]));
}

/// Criterion 4: all K-polynomial strategies produce the same ten terms on
/// the symmetric four-generator fixture, and the Hilbert-series route
/// recovers the Frobenius element.
fn c4_k_polynomial_strategies_agree() {
    let s = symmetric_four_gen();
    let expected: Vec<(Vector, i64)> = vec![
        (v(&[0, 0]), 1),
        (v(&[2, 6]), -1),
        (v(&[3, 3]), -1),
        (v(&[4, 3]), -1),
        (v(&[4, 6]), 1),
        (v(&[5, 6]), 1),
        (v(&[6, 0]), -1),
        (v(&[6, 3]), 1),
        (v(&[7, 3]), 1),
        (v(&[7, 6]), -1),
    ];
    for strategy in [
        KPolyStrategy::BettiSum,
        KPolyStrategy::FullConeIdentity,
        KPolyStrategy::TruncatedSeries,
    ] {
        let k = k_polynomial(&s, strategy).unwrap();
        let got: Vec<(Vector, i64)> = k.terms().map(|(e, c)| (e.clone(), c)).collect();
        assert_eq!(got, expected, "strategy {strategy:?}");
    }

    let grlex = TermOrder::grlex(2);
    let k = k_polynomial(&s, KPolyStrategy::FullConeIdentity).unwrap();
    assert_eq!(k.support_max(&grlex), Some(&v(&[7, 6])));
    assert_eq!(frobenius_from_hilbert(&s, &grlex).unwrap(), v(&[1, 2]));
    assert_eq!(v(&[7, 6]).sub(&s.generator_sum()), v(&[1, 2]));
}

/// Criterion 5: multigraded Betti tables — totals (1,5,6,2) with top
/// degrees {(81,93), (94,82)} on the four-generator fixture, and a length-5
/// resolution topped by (121,94) on the glued fixture.
fn c5_betti_tables() {
    let s = four_gen_mpd();
    let t = betti_table(&s).unwrap();
    assert_eq!(t.totals(), vec![1, 5, 6, 2]);
    assert_eq!(t.resolution_length(), 3);
    let top: Vec<(Vector, u64)> = t
        .in_homological_degree(3)
        .iter()
        .map(|e| (e.degree.clone(), e.value))
        .collect();
    assert_eq!(top, vec![(v(&[81, 93]), 1), (v(&[94, 82]), 1)]);

    let glued = glued_six_gen();
    let tg = betti_table(&glued).unwrap();
    assert_eq!(tg.resolution_length(), 5);
    let top: Vec<(Vector, u64)> = tg
        .in_homological_degree(5)
        .iter()
        .map(|e| (e.degree.clone(), e.value))
        .collect();
    assert_eq!(top, vec![(v(&[121, 94]), 1)]);
}

/// Criterion 6: minimal toric generators match the listed binomials up to
/// sign, and genericity is decided correctly on all three fixtures.
fn c6_toric_generators_and_genericity() {
    let s = four_gen_mpd();
    assert_generators_match(
        &s,
        &minimal_generators(&s),
        &[
            (&[0, 5, 3, 0], &[1, 0, 0, 4]),
            (&[6, 13, 0, 0], &[0, 0, 6, 3]),
            (&[5, 18, 0, 0], &[0, 0, 3, 7]),
            (&[4, 23, 0, 0], &[0, 0, 0, 11]),
            (&[0, 0, 9, 0], &[7, 8, 0, 1]),
        ],
    );

    let g = generic_four_gen();
    assert_generators_match(
        &g,
        &minimal_generators(&g),
        &[
            (&[0, 24, 4, 0], &[29, 0, 0, 4]),
            (&[12, 0, 24, 0], &[0, 11, 0, 19]),
            (&[0, 13, 28, 0], &[17, 0, 0, 23]),
            (&[41, 0, 20, 0], &[0, 35, 0, 15]),
            (&[0, 2, 52, 0], &[5, 0, 0, 42]),
            (&[70, 0, 16, 0], &[0, 59, 0, 11]),
            (&[7, 0, 76, 0], &[0, 9, 0, 61]),
            (&[99, 0, 12, 0], &[0, 83, 0, 7]),
            (&[128, 0, 8, 0], &[0, 107, 0, 3]),
            (&[0, 131, 0, 0], &[157, 0, 4, 1]),
            (&[2, 0, 128, 0], &[0, 7, 0, 103]),
            (&[0, 0, 180, 0], &[3, 5, 0, 145]),
        ],
    );

    assert!(is_generic(&g).is_generic);
    assert!(!is_generic(&s).is_generic);
    assert!(!is_generic(&glued_six_gen()).is_generic);
}

/// Criterion 7: row-factorization matrices match the listed ones entry for
/// entry, their determinants obey the rank criterion, the row-difference
/// relations have the stated monomials and degrees, and the generic fixture
/// has a unique RF-matrix per pseudo-Frobenius element.
fn c7_rf_matrices_and_relations() {
    // Rank-one group: a nonzero determinant is possible.
    let n469 = numerical(&[4, 6, 9]);
    let pf = pseudo_frobenius(&n469);
    assert_eq!(pf.elements(), &[v(&[11])]);
    let m11 = rf_matrix(&n469, &v(&[11])).unwrap();
    assert_rf_rows(&m11, &[&[-1, 1, 1], &[2, -1, 1], &[2, 2, -1]]);
    assert_eq!(m11.determinant(), Int::from(11));

    // Rank-two group: every determinant vanishes.
    let s5 = five_gen_three_pf();
    let m513 = rf_matrix(&s5, &v(&[5, 13])).unwrap();
    assert_rf_rows(
        &m513,
        &[
            &[-1, 2, 0, 2, 0],
            &[6, -1, 0, 0, 0],
            &[0, 1, -1, 3, 0],
            &[5, 0, 1, -1, 0],
            &[0, 2, 4, 0, -1],
        ],
    );
    assert!(m513.determinant().is_zero());

    // Row differences m_i − m_j split into the listed relations x^{b⁺} − x^{b⁻}.
    let listed: &[(usize, usize, &[i64], &[i64], [i64; 2])] = &[
        (0, 1, &[0, 3, 0, 2, 0], &[7, 0, 0, 0, 0], [7, 21]),
        (0, 2, &[0, 1, 1, 0, 0], &[1, 0, 0, 1, 0], [3, 6]),
        (0, 3, &[0, 2, 0, 3, 0], &[6, 0, 1, 0, 0], [8, 19]),
        (0, 4, &[0, 0, 0, 2, 1], &[1, 0, 4, 0, 0], [9, 7]),
        (1, 2, &[6, 0, 1, 0, 0], &[0, 2, 0, 3, 0], [8, 19]),
        (1, 3, &[1, 0, 0, 1, 0], &[0, 1, 1, 0, 0], [3, 6]),
        (1, 4, &[6, 0, 0, 0, 1], &[0, 3, 4, 0, 0], [11, 19]),
        (2, 3, &[0, 1, 0, 4, 0], &[5, 0, 2, 0, 0], [9, 17]),
        (2, 4, &[0, 0, 0, 3, 1], &[0, 1, 5, 0, 0], [11, 10]),
        (3, 4, &[5, 0, 0, 0, 1], &[0, 2, 3, 1, 0], [10, 16]),
    ];
    let harvested = rf_relations_of(&s5, &v(&[5, 13])).unwrap();
    let zero = Vector::zeros(5);
    for (i, j, plus, minus, degree) in listed {
        let diff = m513.row(*i).sub(m513.row(*j));
        let got_plus = diff.max_c(&zero);
        let got_minus = got_plus.sub(&diff);
        assert_eq!(got_plus, v(plus), "rows {i},{j}");
        assert_eq!(got_minus, v(minus), "rows {i},{j}");
        let relation = Binomial::new(&s5, &got_plus, &got_minus).unwrap();
        assert_eq!(relation.degree(), &v(degree), "degree of rows {i},{j}");
        assert!(
            harvested.iter().any(|r| r.same_up_to_sign(&relation)),
            "rows {i},{j} must be harvested as a relation"
        );
    }

    // Four-generator fixture: both listed matrices, both singular.
    let s4 = four_gen_mpd();
    let m64 = rf_matrix(&s4, &v(&[64, 69])).unwrap();
    assert_rf_rows(
        &m64,
        &[
            &[-1, 4, 8, 2],
            &[0, -1, 5, 6],
            &[6, 12, -1, 3],
            &[5, 17, 2, -1],
        ],
    );
    assert!(m64.determinant().is_zero());
    let m77 = rf_matrix(&s4, &v(&[77, 58])).unwrap();
    assert_rf_rows(
        &m77,
        &[
            &[-1, 4, 5, 6],
            &[0, -1, 2, 10],
            &[5, 17, -1, 3],
            &[4, 22, 2, -1],
        ],
    );
    assert!(m77.determinant().is_zero());

    // Pseudo-symmetric six-generator fixture.
    let s6 = pseudo_symmetric_six_gen();
    let m13 = rf_matrix(&s6, &v(&[1, 3])).unwrap();
    assert_rf_rows(
        &m13,
        &[
            &[-1, 0, 0, 1, 0, 0],
            &[3, -1, 1, 0, 0, 0],
            &[3, 0, -1, 0, 1, 0],
            &[0, 0, 0, -1, 0, 1],
            &[3, 2, 0, 0, -1, 0],
            &[10, 1, 0, 0, 0, -1],
        ],
    );
    assert!(m13.determinant().is_zero());

    // Generic fixture: nine pseudo-Frobenius elements, one RF-matrix each.
    let g = generic_four_gen();
    let pf = pseudo_frobenius(&g);
    assert!(pf.is_certified());
    let listed: &[([i64; 2], [[i64; 4]; 4])] = &[
        (
            [223, 4445],
            [[-1, 8, 51, 102], [6, -1, 127, 41], [4, 6, -1, 144], [1, 1, 179, -1]],
        ),
        (
            [271, 3145],
            [[-1, 10, 51, 60], [11, -1, 75, 41], [4, 8, -1, 102], [6, 1, 127, -1]],
        ),
        (
            [319, 1845],
            [[-1, 12, 51, 18], [16, -1, 23, 41], [4, 10, -1, 60], [11, 1, 75, -1]],
        ),
        (
            [559, 1256],
            [[-1, 23, 27, 18], [28, -1, 23, 22], [16, 10, -1, 41], [11, 12, 51, -1]],
        ),
        (
            [799, 667],
            [[-1, 34, 3, 18], [40, -1, 23, 3], [28, 10, -1, 22], [11, 23, 27, -1]],
        ),
        (
            [1375, 567],
            [[-1, 58, 3, 14], [69, -1, 19, 3], [28, 34, -1, 18], [40, 23, 23, -1]],
        ),
        (
            [1951, 467],
            [[-1, 82, 3, 10], [98, -1, 15, 3], [28, 58, -1, 14], [69, 23, 19, -1]],
        ),
        (
            [2527, 367],
            [[-1, 106, 3, 6], [127, -1, 11, 3], [28, 82, -1, 10], [98, 23, 15, -1]],
        ),
        (
            [3103, 267],
            [[-1, 130, 3, 2], [156, -1, 7, 3], [28, 106, -1, 6], [127, 23, 11, -1]],
        ),
    ];
    assert_eq!(
        pf.elements(),
        listed.iter().map(|(f, _)| v(f)).collect::<Vec<_>>()
    );
    let mut seen: Vec<Vec<Vector>> = Vec::new();
    for (f, rows) in listed {
        let all = rf_matrices(&g, &v(f)).unwrap();
        assert_eq!(all.len(), 1, "the RF-matrix of {:?} is unique", f);
        let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
        assert_rf_rows(&all[0], &refs);
        assert!(all[0].determinant().is_zero());
        for j in 0..4 {
            for i in 0..4 {
                for k in (i + 1)..4 {
                    assert_ne!(
                        all[0].entry(i, j),
                        all[0].entry(k, j),
                        "column {j} of the matrix of {:?} has distinct entries",
                        f
                    );
                }
            }
        }
        seen.push(all[0].rows().to_vec());
    }
    for i in 0..seen.len() {
        for j in (i + 1)..seen.len() {
            assert_ne!(seen[i], seen[j], "the nine matrices are pairwise distinct");
        }
    }
}

/// Criterion 8: the toric ideals of the four-generator and glued fixtures
/// are generated by RF-relations, and the transfer report across the
/// gluing carries the expected rows.
fn c8_generation_by_rf_relations() {
    let s = four_gen_mpd();
    let pf = pseudo_frobenius(&s);
    assert!(matches!(
        generated_by_rf(&s, &pf).unwrap(),
        RfGeneration::Generated
    ));

    let glued = glued_six_gen();
    let pfg = pseudo_frobenius(&glued);
    assert!(matches!(
        generated_by_rf(&glued, &pfg).unwrap(),
        RfGeneration::Generated
    ));

    let dec = decompose(&glued, &[0, 1, 2, 3], &v(&[18, 18])).unwrap();
    let transfer = rf_generation_transfer(&glued, &dec).unwrap();
    assert_eq!(transfer.bridge.plus(), &v(&[2, 1, 0, 0, 0, 0]));
    assert_eq!(transfer.bridge.minus(), &v(&[0, 0, 0, 0, 1, 1]));
    assert_eq!(transfer.witnesses.len(), 4);
    assert!(transfer
        .witnesses
        .iter()
        .any(|w| w.left_row == v(&[1, -1, 1, 0])));
    assert!(transfer
        .witnesses
        .iter()
        .any(|w| w.right_row == v(&[-1, 3])));
    for w in &transfer.witnesses {
        assert!(w.left_lift.is_nonnegative(), "left lift is a factorization");
        assert!(
            w.right_lift.is_nonnegative(),
            "right lift is a factorization"
        );
    }
}

/// Criterion 9: gluing recognition, and composition of pseudo-Frobenius
/// sets across twenty constructed numerical gluings (type multiplies).
fn c9_gluing_pf_composition() {
    let glued = glued_six_gen();
    assert!(verify_gluing(&glued, &[0, 1, 2, 3], &v(&[18, 18])).unwrap());
    let found = find_gluings(&glued).unwrap();
    assert_eq!(found.len(), 1);

    let dec = decompose(&glued, &[0, 1, 2, 3], &v(&[18, 18])).unwrap();
    let composed = pf_of_gluing(&dec).unwrap();
    assert_eq!(composed.elements(), &[v(&[49, 49])]);
    assert_eq!(composed.elements(), pseudo_frobenius(&glued).elements());

    let fixtures = numerical_gluing_fixtures(20);
    assert_eq!(fixtures.len(), 20);
    for (s, left, d) in fixtures {
        assert!(verify_gluing(&s, &left, &d).unwrap());
        let dec = decompose(&s, &left, &d).unwrap();
        let composed = pf_of_gluing(&dec).unwrap();
        let direct = pseudo_frobenius(&s);
        assert!(direct.is_certified());
        assert_eq!(composed.elements(), direct.elements());
        let t1 = pseudo_frobenius(dec.left_component()).elements().len();
        let t2 = pseudo_frobenius(dec.right_component()).elements().len();
        assert_eq!(direct.elements().len(), t1 * t2, "type multiplies");
    }
}

/// Criterion 10: the Bresinsky-style planar family at h = 2, 3 — one
/// pseudo-Frobenius element, 4h quasi-Frobenius elements, the sets
/// disjoint — each h within its time budget.
fn c10_bresinsky_quasi_frobenius() {
    for (h, f, top) in [(2i64, [117, 21], 23), (3, [415, 55], 47)] {
        let start = Instant::now();
        let s = bresinsky(h);
        let pf = pseudo_frobenius(&s);
        assert!(pf.is_certified());
        assert_eq!(pf.elements(), &[v(&f)]);

        let qf = quasi_frobenius(&s, None).unwrap();
        assert_eq!(qf.rays, vec![v(&[0, top]), v(&[top, 0])]);
        assert_eq!(qf.elements.len(), 4 * h as usize);
        assert!(
            !qf.elements.contains(&v(&f)),
            "quasi- and pseudo-Frobenius sets are disjoint"
        );
        let elapsed = start.elapsed();
        assert!(
            elapsed <= Duration::from_secs(300),
            "h = {h} exceeded its 300 s budget ({:.1}s)",
            elapsed.as_secs_f64()
        );
    }
}

/// Criterion 11: the deterministic property suites — term-order laws on a
/// thousand triples, factorization exhaustiveness against the odometer
/// oracle on a hundred cases, the gap-pairing identity, the zero pattern,
/// the Wilf-style count, and non-genericity of constructed gluings.
fn c11_property_suites() {
    let mut rng = Lcg::new(0xACCE55);

    let argsort = |keys: &[u64]| {
        let mut idx: Vec<usize> = (0..keys.len()).collect();
        idx.sort_by_key(|&i| (keys[i], i));
        idx
    };
    for _ in 0..1000 {
        let dim = 1 + rng.below(4) as usize;
        let base = match rng.below(4) {
            0 => TermOrder::lex(dim),
            1 => TermOrder::grlex(dim),
            2 => TermOrder::grevlex(dim),
            _ => {
                let weights: Vec<u64> = (0..dim).map(|_| 1 + rng.below(5)).collect();
                TermOrder::weighted(weights, TermOrder::grevlex(dim)).unwrap()
            }
        };
        let keys: Vec<u64> = (0..dim).map(|_| rng.below(1 << 30)).collect();
        let order = base.with_permutation(argsort(&keys)).unwrap();
        let (a, b, c) = (
            rng.vector(dim, 40),
            rng.vector(dim, 40),
            rng.vector(dim, 40),
        );
        assert_order_laws(&order, &a, &b, &c);
    }

    for _ in 0..100 {
        let n = 2 + rng.below(4) as usize;
        let gens: Vec<Vector> = (0..n)
            .map(|_| loop {
                let g = rng.vector(2, 6);
                if g != Vector::zeros(2) {
                    break g;
                }
            })
            .collect();
        let b = rng.vector(2, 13);
        let s = Semigroup::new_allowing_redundant(gens.clone()).unwrap();
        let mut fast = s.factorizations(&b);
        fast.sort();
        assert_eq!(fast, brute_force_factorizations(&gens, &b));
    }

    for (name, s) in full_cone_c_fixtures() {
        assert_pairing_identity(name, &s);
    }

    let mut zero_pattern_pairs = 0usize;
    for s in [
        four_gen_mpd(),
        five_gen_three_pf(),
        pseudo_symmetric_six_gen(),
    ] {
        let pf = pseudo_frobenius(&s);
        assert!(pf.is_certified());
        zero_pattern_pairs += assert_zero_pattern_on_pf_pairs(&s, pf.elements());
    }
    assert!(zero_pattern_pairs > 0);

    let wilf_checked = full_cone_c_fixtures()
        .iter()
        .filter(|(name, s)| assert_wilf_if_symmetric(name, s))
        .count();
    assert!(wilf_checked >= 5);

    assert!(!is_generic(&glued_six_gen()).is_generic);
    assert!(!is_generic(&numerical(&[4, 6, 9])).is_generic);
    assert!(!is_generic(&numerical(&[8, 10, 12, 15])).is_generic);
    for (s, left, d) in numerical_gluing_fixtures(20) {
        assert!(verify_gluing(&s, &left, &d).unwrap());
        if s.num_generators() >= 3 {
            assert!(!is_generic(&s).is_generic);
        }
    }
}

fn panic_text(payload: Box<dyn Any + Send>) -> String {
    let text = if let Some(s) = payload.downcast_ref::<&str>() {
        (*s).to_string()
    } else if let Some(s) = payload.downcast_ref::<String>() {
        s.clone()
    } else {
        "panicked".to_string()
    };
    let first = text.lines().next().unwrap_or("panicked");
    if first.chars().count() > 200 {
        format!("{}…", first.chars().take(200).collect::<String>())
    } else {
        first.to_string()
    }
}

#[test]
fn all_release_criteria_pass() {
    type Criterion = (usize, &'static str, Option<u64>, fn());
    let criteria: Vec<Criterion> = vec![
        (1, "pseudo-Frobenius set of the four-generator fixture", Some(10), c1_pf_of_four_generators),
        (2, "certified pseudo-Frobenius set with twelve generators", Some(60), c2_pf_of_twelve_generators),
        (3, "gap sets and Frobenius elements", None, c3_gap_sets_and_frobenius),
        (4, "K-polynomial strategies agree and recover the Frobenius element", None, c4_k_polynomial_strategies_agree),
        (5, "multigraded Betti tables", Some(120), c5_betti_tables),
        (6, "toric minimal generators and genericity", None, c6_toric_generators_and_genericity),
        (7, "row-factorization matrices and relations", None, c7_rf_matrices_and_relations),
        (8, "generation by RF-relations and its gluing transfer", None, c8_generation_by_rf_relations),
        (9, "gluing recognition and pseudo-Frobenius composition", None, c9_gluing_pf_composition),
        (10, "quasi-Frobenius sets of the planar Bresinsky-style family", Some(600), c10_bresinsky_quasi_frobenius),
        (11, "deterministic property suites", None, c11_property_suites),
    ];

    let previous_hook = std::panic::take_hook();
    std::panic::set_hook(Box::new(|_| {}));
    let mut failures = Vec::new();
    for (number, title, limit, run) in &criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run));
        let elapsed = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) if limit.map_or(true, |l| elapsed <= l as f64) => {
                println!("PASS criterion {number}: {title} ({elapsed:.1}s)");
            }
            Ok(()) => {
                let l = limit.unwrap();
                println!(
                    "FAIL criterion {number}: {title} — exceeded the {l} s budget ({elapsed:.1}s)"
                );
                failures.push(*number);
            }
            Err(payload) => {
                println!(
                    "FAIL criterion {number}: {title} — {} ({elapsed:.1}s)",
                    panic_text(payload)
                );
                failures.push(*number);
            }
        }
    }
    std::panic::set_hook(previous_hook);
    assert!(failures.is_empty(), "criteria failed: {failures:?}");
}
