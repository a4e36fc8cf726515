//! Invariants checked on random inputs and on generated sequences.

use bchlab::lattice::{
    bareiss_det, dkdv_evolve, dodgson_condense, knight_evolve, octa2d_verify, ones_grid, symbolic_grid, Grid2D,
    Indeterminate, Matrix, Window,
};
use bchlab::rings::{int, rat, LaurentPoly, Monomial, VarId, ZPoly};
use bchlab::sequences::{self, dodgson, QRoute, Relation, TauSequence};
use bchlab::Rational;
use proptest::prelude::*;

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    let term = (-6i64..7, 1i64..4, -2i32..3, -1i32..3, 0i32..2);
    proptest::collection::vec(term, 0..5).prop_map(|ts| {
        LaurentPoly::from_terms(ts.into_iter().map(|(p, q, a, b, e)| {
            (Monomial::from_pairs([(VarId::q(1), a), (VarId::q(2), b), (VarId::t(3), e)]), rat(p, q))
        }))
    })
}

fn nonzero_laurent() -> impl Strategy<Value = LaurentPoly> {
    laurent().prop_filter("nonzero", |p| !p.is_zero())
}

fn zpoly() -> impl Strategy<Value = ZPoly> {
    proptest::collection::vec(laurent(), 0..4).prop_map(ZPoly::from_coeffs)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn exact_division_round_trip(a in laurent(), b in nonzero_laurent()) {
        prop_assert_eq!((&a * &b).exact_div(&b).unwrap(), a);
    }

    #[test]
    fn shift_is_a_group_action(p in zpoly(), a in -3i64..4, b in -3i64..4) {
        prop_assert_eq!(p.shift(a).shift(b), p.shift(a + b));
        prop_assert_eq!(p.shift(0), p.clone());
    }

    #[test]
    fn operators_commute(p in zpoly(), h in -3i64..4) {
        prop_assert_eq!(p.shift(h).delta(), p.delta().shift(h));
        prop_assert_eq!(p.shift(h).derive(), p.derive().shift(h));
    }

    #[test]
    fn leibniz_rule(p in zpoly(), q in zpoly()) {
        prop_assert_eq!((&p * &q).derive(), &(&p.derive() * &q) + &(&p * &q.derive()));
    }

    #[test]
    fn delta_lowers_degree(p in zpoly()) {
        if let Some(d) = p.degree().filter(|&d| d > 0) {
            prop_assert_eq!(p.delta().degree(), Some(d - 1));
        }
    }

    #[test]
    fn weight_components_partition(p in zpoly()) {
        let mut total = ZPoly::zero();
        for w in p.all_weights() {
            let part = p.weight_component(w);
            prop_assert_eq!(part.all_weights(), vec![w]);
            total = &total + &part;
        }
        prop_assert_eq!(total, p);
    }

    #[test]
    fn condensation_equals_bareiss(n in 2usize..6, entries in proptest::collection::vec(-9i64..10, 36)) {
        let rows: Vec<Vec<i64>> = (0..n).map(|i| entries[i * n..(i + 1) * n].to_vec()).collect();
        let a: Matrix<Rational> = Matrix::from_ints(&rows).unwrap();
        prop_assert_eq!(dodgson_condense(&a).0, bareiss_det(&a));
    }
}

#[test]
fn corrupted_member_is_detected() {
    let q = sequences::gen_q_q(3).unwrap();
    let mut entries = q.entries().to_vec();
    entries[3] = &entries[3] + &ZPoly::one();
    let bad = TauSequence::new(q.kind, q.coords, entries);
    let report = sequences::verify_relation(Relation::Dbch, &bad);
    assert!(!report.holds());
    assert!(report.failures().any(|r| r.n == 1 || r.n == 2));
}

#[test]
fn constraint_propagates() {
    let q = sequences::chain_q(5).unwrap();
    assert!(dodgson::phi_all(&q).iter().all(ZPoly::is_zero));
    // Q itself satisfies the relation with 2 R^2 on the right
    assert!(sequences::verify_relation(Relation::ModifiedDodgson, &q).holds());
}

#[test]
fn sequences_have_the_expected_degree_and_leading_term() {
    let q = sequences::gen_q_q(5).unwrap();
    let p = sequences::gen_p_c(5).unwrap();
    for n in 1..=5i64 {
        let d = (n * (n + 1) / 2) as usize;
        assert_eq!(q.get(n).degree(), Some(d));
        assert_eq!(p.get(n).degree(), Some(d));
        assert!(sequences::convert::leading_is_inverse_normalizer(&q, n));
        assert!(sequences::convert::leading_is_inverse_normalizer(&p, n));
        assert_eq!(q.get(n).at_zero(), LaurentPoly::var(VarId::q(n as u32)));
    }
}

#[test]
fn constants_are_weight_homogeneous() {
    let q = sequences::gen_q_t(5, QRoute::Det3).unwrap();
    for (k, qk) in sequences::q_from_t(&q) {
        assert_eq!(qk.weights().into_iter().collect::<Vec<_>>(), vec![(k * (k + 1) / 2) as i64]);
    }
    for n in 1..=5i64 {
        assert_eq!(q.get(n).max_weight(), Some(n * (n + 1) / 2));
    }
}

#[test]
fn independent_of_even_times() {
    let raw = sequences::gen_x(7);
    let even = sequences::xseq::gen_x_even(7).unwrap();
    for n in 1..=4 {
        let a = sequences::q_det3(&raw, n);
        assert!(a.coeffs().iter().all(|c| c.variables().iter().all(|v| v.index % 2 == 1)), "n = {n}");
        assert_eq!(a, sequences::q_det3(&even, n));
    }
}

#[test]
fn knight_with_unit_coefficients_is_dkdv() {
    let w = Window::FIGURE4;
    let fill = Indeterminate::Fill(int(1));
    let a = knight_evolve(&int(1), &int(-1), &w, |_| int(1), &fill).unwrap();
    assert_eq!(a, dkdv_evolve(&w, |_| int(1), &fill).unwrap());
}

#[test]
fn figure4_point_symmetry() {
    let g = ones_grid(&Window::FIGURE4).unwrap();
    for ((m, n), v) in g.iter() {
        assert_eq!(g.get(-m, -1 - n), Some(v), "({m}, {n})");
    }
}

#[test]
fn symbolic_cells_are_integer_laurent() {
    let g = symbolic_grid(&Window::parse("4x4").unwrap()).unwrap();
    assert!(g.iter().all(|(_, v)| v.has_integer_coeffs()));
    let ones = g.specialize(|_| Some(int(1))).unwrap();
    assert!(ones.iter().all(|(_, v)| v.is_integer()));
}

/// Sites where the specialized symbolic lattice and the all-ones table
/// differ. The table resolves the `0/0` at `(-2, 3)` by 1, while the
/// symbolic cell specializes to `Q_3(-2) = -3`; the difference spreads to the
/// cells computed from it.
#[test]
fn symbolic_specialization_against_the_numeric_table() {
    let w = Window::new(-6..=6, -1..=6).unwrap();
    let sym = symbolic_grid(&w).unwrap().specialize(|_| Some(int(1))).unwrap();
    let num = ones_grid(&w).unwrap();
    assert_eq!(num.singular, vec![(-2, 3)]);
    let differ: Vec<(i64, i64)> = sym.iter().filter(|&((m, n), v)| num.get(m, n) != Some(v)).map(|(k, _)| k).collect();
    assert!(differ.contains(&(-2, 3)));
    assert_eq!(sym.get(-2, 3), Some(&int(-3)));
    assert!(differ.iter().all(|&(m, n)| m <= -2 && n >= 3), "{differ:?}");
    for m in -1..=6 {
        for n in -1..=6 {
            assert_eq!(sym.get(m, n), num.get(m, n), "({m}, {n})");
        }
    }
}

#[test]
fn lattice_rows_interpolate_with_the_expected_degree() {
    for n in 1..=3i64 {
        let d = (n * (n + 1) / 2) as usize;
        let w = Window::new(0..=d as i64 + 1, -1..=n).unwrap();
        let g = symbolic_grid(&w).unwrap();
        let mut diffs: Vec<LaurentPoly> = (0..=d as i64 + 1).map(|m| g.get(m, n).unwrap().clone()).collect();
        for _ in 0..d {
            diffs = diffs.windows(2).map(|p| &p[1] - &p[0]).collect();
        }
        assert_eq!(diffs.len(), 2);
        assert!(!diffs[0].is_zero(), "n = {n}");
        assert_eq!(diffs[0], diffs[1], "n = {n}");
    }
}

#[test]
fn dodgson_values_satisfy_the_planar_octahedron() {
    let r = sequences::to_dodgson_r(&sequences::gen_q_q(4).unwrap()).unwrap();
    let w = Window::new(-4..=4, -1..=4).unwrap();
    let g: Grid2D<LaurentPoly> = Grid2D::from_fn(w, |m, n| r.get(n).eval_z_int(m));
    assert!(octa2d_verify(&g).is_empty());
    let mut bad = g.clone();
    bad.set(1, 2, &g.get(1, 2).unwrap().clone() + &LaurentPoly::one());
    assert!(octa2d_verify(&bad).contains(&(1, 2)));
}
