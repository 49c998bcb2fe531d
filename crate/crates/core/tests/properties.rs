//! Property suites, 200 cases each.

use knotforge::cfk::{
    canceling_check, euler_characteristic, hat, hat_homology, mirror_dual, reduce, symmetry_check, tensor,
    transpose, validate,
};
use knotforge::f2core::{homology_dims_f2, rank_f2, smith_form_fu, F2Poly, F2UMatrix, FreeSummand, SparseF2Matrix};
use knotforge::grid::{grid_hfk, grid_tilde_homology, GridDiagram, DEFAULT_MAX_GRID};
use knotforge::invariants::{
    dval, hbar, hfk_minus, lspace_check, obstruction_check, rank3_enumerate, rank3_model, staircase_complex, tau,
    torus_delta,
};
use knotforge::kh::{basepoint_cone, jones, kh_reduced, kh_reduced_bounded, skein_triple_at, skein_triple_check, stilde, turner_ss, KhGroup};
use knotforge::knots::{alexander_from_pd, band_family, catalog_all, connected_sum, kanenobu, mirror, six_one_template};
use knotforge::{sample, BigradedGroup, CfkComplex, LaurentPoly};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn hat_h(c: &CfkComplex) -> BigradedGroup {
    hat_homology(&hat(c).unwrap()).unwrap()
}

fn hat_ranks(c: &CfkComplex) -> BigradedGroup {
    hat(c).unwrap().group()
}

fn some_complex(r: &mut ChaCha8Rng) -> CfkComplex {
    if r.gen_bool(0.3) {
        sample::tensor_complex(r)
    } else {
        sample::builder_complex(r)
    }
}

fn dense_rank(mut rows: Vec<Vec<bool>>, cols: usize) -> usize {
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][c]) else { continue };
        rows.swap(rank, p);
        for r in 0..rows.len() {
            if r != rank && rows[r][c] {
                let pivot = rows[rank].clone();
                rows[r].iter_mut().zip(pivot).for_each(|(x, y)| *x ^= y);
            }
        }
        rank += 1;
    }
    rank
}

fn matrix_strategy(max: usize) -> impl Strategy<Value = (usize, usize, Vec<(usize, usize)>)> {
    (1..=max, 1..=max, 0.0f64..0.6).prop_flat_map(|(r, c, density)| {
        let cells = proptest::collection::vec(proptest::bool::weighted(density.max(0.01)), r * c);
        cells.prop_map(move |bits| {
            let e = bits.iter().enumerate().filter(|(_, &b)| b).map(|(k, _)| (k / c, k % c)).collect();
            (r, c, e)
        })
    })
}

fn poly_strategy() -> impl Strategy<Value = F2Poly> {
    prop_oneof![
        2 => Just(F2Poly::zero()),
        3 => proptest::collection::btree_set(0usize..4, 0..4)
            .prop_map(|s| F2Poly::from_exponents(&s.into_iter().collect::<Vec<_>>())),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn rank_matches_dense_elimination((rows, cols, entries) in matrix_strategy(200)) {
        let mut dense = vec![vec![false; cols]; rows];
        for &(i, j) in &entries {
            dense[i][j] = true;
        }
        let m = SparseF2Matrix::from_entries(rows, cols, entries).unwrap();
        prop_assert_eq!(rank_f2(&m), dense_rank(dense, cols));
    }

    #[test]
    fn smith_form_reconstructs(rows in 0usize..6, cols in 0usize..6, cells in proptest::collection::vec(poly_strategy(), 36)) {
        let dense: Vec<Vec<F2Poly>> = (0..rows).map(|i| (0..cols).map(|j| cells[i * 6 + j].clone()).collect()).collect();
        let m = F2UMatrix::from_dense(&dense).unwrap();
        let s = smith_form_fu(&m);
        let diag = F2UMatrix::diagonal(m.rows(), m.cols(), &s.invariant_factors).unwrap();
        prop_assert_eq!(s.row_transform.mul(&diag).unwrap().mul(&s.col_transform).unwrap(), m);
        for w in s.invariant_factors.windows(2) {
            prop_assert!(w[0].divides(&w[1]));
        }
    }

    #[test]
    fn canceling_pair_keeps_homology(seed in any::<u64>()) {
        // random d1: A -> B with d2 = 0, then append x -> y at (A, B)
        let mut r = rng(seed);
        let (a, b) = (r.gen_range(1..12usize), r.gen_range(1..12usize));
        let e1: Vec<(usize, usize)> = (0..b).flat_map(|i| (0..a).map(move |j| (i, j))).filter(|_| r.gen_bool(0.3)).collect();
        let d1 = SparseF2Matrix::from_entries(b, a, e1.iter().copied()).unwrap();
        let d2 = SparseF2Matrix::zeros(0, b);
        let h = homology_dims_f2(&d1, &d2).unwrap();
        let d1x = SparseF2Matrix::from_entries(b + 1, a + 1, e1.into_iter().chain([(b, a)])).unwrap();
        let d2x = SparseF2Matrix::zeros(0, b + 1);
        prop_assert_eq!(homology_dims_f2(&d1x, &d2x).unwrap(), h);
    }

    #[test]
    fn reduce_preserves_hat_homology(seed in any::<u64>()) {
        let c = some_complex(&mut rng(seed));
        let r = reduce(&c).unwrap();
        prop_assert!(validate(&r).is_valid());
        prop_assert_eq!(hat_h(&r), hat_h(&c));
        prop_assert_eq!(reduce(&r).unwrap().canonical(), r.canonical());
    }

    #[test]
    fn builders_symmetric_and_canceling(seed in any::<u64>()) {
        let c = sample::builder_complex(&mut rng(seed));
        prop_assert!(validate(&c).is_valid());
        prop_assert!(symmetry_check(&hat_ranks(&c)));
        prop_assert!(canceling_check(&hat_h(&c)));
        let chi = euler_characteristic(&hat_ranks(&c));
        prop_assert!(chi.is_symmetric());
        prop_assert_eq!(chi.eval_one(), 1);
    }

    #[test]
    fn tensor_unit_commutative_associative(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (a, b, c) = (sample::builder_complex(&mut r), sample::builder_complex(&mut r), sample::builder_complex(&mut r));
        let u = CfkComplex::unknot();
        prop_assert_eq!(hat_ranks(&tensor(&a, &u).unwrap()), hat_ranks(&a));
        prop_assert_eq!(hat_ranks(&tensor(&u, &a).unwrap()), hat_ranks(&a));
        prop_assert_eq!(hat_ranks(&tensor(&a, &b).unwrap()), hat_ranks(&tensor(&b, &a).unwrap()));
        let l = tensor(&tensor(&a, &b).unwrap(), &c).unwrap();
        let rr = tensor(&a, &tensor(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(hat_ranks(&l), hat_ranks(&rr));
        prop_assert_eq!(tau(&tensor(&a, &b).unwrap()).unwrap(), tau(&a).unwrap() + tau(&b).unwrap());
    }

    #[test]
    fn mirror_and_transpose(seed in any::<u64>()) {
        let c = some_complex(&mut rng(seed));
        let m = mirror_dual(&c).unwrap();
        let neg = BigradedGroup::from_ranks(hat_ranks(&c).iter().map(|((x, y), k)| ((-x, -y), k)));
        prop_assert_eq!(hat_ranks(&m), neg);
        prop_assert_eq!(tau(&m).unwrap(), -tau(&c).unwrap());
        prop_assert_eq!(hat_ranks(&transpose(&transpose(&c).unwrap()).unwrap()), hat_ranks(&c));
        prop_assert_eq!(hat_ranks(&transpose(&c).unwrap()), hat_ranks(&c));
    }

    #[test]
    fn minus_free_part_and_d_values(seed in any::<u64>()) {
        let c = some_complex(&mut rng(seed));
        let t = tau(&c).unwrap();
        let h = hfk_minus(&c).unwrap();
        prop_assert_eq!(h.free_summands, vec![FreeSummand { maslov: -2 * t, alexander: -t }]);
        let g = hat_ranks(&c).max_alexander().unwrap();
        let ds: Vec<i64> = (-g - 1..=g + 1).map(|s| dval(&c, s).unwrap()).collect();
        prop_assert!(ds.windows(2).all(|w| w[0] <= w[1]), "{:?}", ds);
        prop_assert_eq!(*ds.last().unwrap(), 0);
        let hb: Vec<i64> = (0..=g + 1).map(|m| hbar(&c, m).unwrap()).collect();
        prop_assert!(hb.windows(2).all(|w| w[0] >= w[1]), "{:?}", hb);
    }

    #[test]
    fn obstruction_carries_contradiction(seed in any::<u64>()) {
        let mut r = rng(seed);
        let c = if r.gen_bool(0.5) { rank3_model(r.gen_range(1..8)) } else { some_complex(&mut r) };
        let rep = obstruction_check(&c).unwrap();
        if rep.obstructed {
            prop_assert!(rep.certificate.unwrap().contradiction);
        }
    }

    #[test]
    fn staircases_pass_lspace(p in 2u32..6, q in 2u32..9) {
        prop_assume!(gcd(p, q) == 1);
        let d = torus_delta(p, q);
        let s = staircase_complex(&d).unwrap();
        prop_assert!(lspace_check(&hat_ranks(&s)).unwrap().passes);
        prop_assert_eq!(euler_characteristic(&hat_ranks(&s)), d);
    }

    #[test]
    fn rank3_independent_of_bound(g in 1i64..12) {
        prop_assert_eq!(rank3_enumerate(g), rank3_enumerate(1));
    }

    #[test]
    fn grid_moves_keep_hfk(seed in any::<u64>()) {
        let mut r = rng(seed);
        let grids: Vec<GridDiagram> = catalog_all().unwrap().into_iter().filter_map(|e| e.grid).filter(|g| g.size <= 7).collect();
        let g = &grids[r.gen_range(0..grids.len())];
        let h = grid_hfk(g).unwrap();
        prop_assert!(symmetry_check(&h));
        let t = g.translate(r.gen_range(0..g.size), r.gen_range(0..g.size));
        prop_assert_eq!(grid_hfk(&t).unwrap(), h.clone());
        if let Some(c) = t.commute_columns(r.gen_range(0..g.size)) {
            prop_assert_eq!(grid_hfk(&c).unwrap(), h.clone());
        }
        let tilde = grid_tilde_homology(g, DEFAULT_MAX_GRID).unwrap();
        prop_assert_eq!(tilde.total_rank(), h.total_rank() << (g.size - 1));
    }

    #[test]
    fn kh_basepoint_and_mirror(seed in any::<u64>()) {
        let mut r = rng(seed);
        let d = sample::knot_diagram(&mut r, 4, 9);
        let kh = kh_reduced(&d).unwrap();
        let mut moved = d.clone();
        let edges: Vec<u32> = d.edges().into_iter().collect();
        moved.basepoints = vec![edges[r.gen_range(0..edges.len())]];
        prop_assert_eq!(kh_reduced(&moved).unwrap(), kh.clone());
        let m = kh_reduced(&mirror(&d)).unwrap();
        prop_assert_eq!(m, KhGroup::from_ranks(kh.iter().map(|((a, q), k)| ((-a, -q), k))));
        prop_assert_eq!(stilde(&mirror(&d)).unwrap(), -stilde(&d).unwrap());
    }

    #[test]
    fn turner_pages_shrink(seed in any::<u64>()) {
        let d = sample::knot_diagram(&mut rng(seed), 4, 9);
        let ss = turner_ss(&d).unwrap();
        prop_assert!(ss.pages.len() <= ss.collapse_page + 1);
        prop_assert_eq!(&ss.pages[0], &kh_reduced(&d).unwrap());
        for w in ss.pages.windows(2) {
            let (a, b) = (w[0].total_rank(), w[1].total_rank());
            prop_assert!(b <= a && (a - b) % 2 == 0);
        }
        let last = ss.pages.last().unwrap();
        prop_assert_eq!(last, &KhGroup::from_ranks([(ss.survivor, 1)]));
        prop_assert_eq!(ss.survivor.1, stilde(&d).unwrap());
    }

    #[test]
    fn skein_triples_hold(seed in any::<u64>()) {
        let mut r = rng(seed);
        let d = sample::knot_diagram(&mut r, 4, 8);
        let i = r.gen_range(0..d.n_crossings());
        let (p, m, z) = skein_triple_at(&d, i).unwrap();
        let rep = skein_triple_check(&p, &m, &z).unwrap();
        prop_assert!(rep.holds, "{:?}", rep.violations);
        prop_assert!(rep.skein_relation && rep.euler_identity);
    }

    #[test]
    fn unlink_cone_constant(seed in any::<u64>()) {
        let d = sample::unlink_diagram(&mut rng(seed));
        let c = basepoint_cone(&d).unwrap().integral();
        prop_assert_eq!(c, Some(KhGroup::from_ranks([((0, 0), 1), ((-1, 2), 1)])));
    }

    #[test]
    fn alexander_multiplies_under_sum(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (a, b) = (sample::knot_diagram(&mut r, 3, 6), sample::knot_diagram(&mut r, 3, 6));
        let s = connected_sum(&a, &b).unwrap();
        let want = alexander_from_pd(&a).unwrap().mul(&alexander_from_pd(&b).unwrap()).unwrap();
        prop_assert_eq!(alexander_from_pd(&s).unwrap(), want);
        prop_assert_eq!(jones(&kh_reduced(&s).unwrap()), jones(&kh_reduced(&a).unwrap()).mul(&jones(&kh_reduced(&b).unwrap())).unwrap());
    }

    #[test]
    fn band_family_polynomials(i in -3i64..=3, j in -3i64..=3) {
        let t = six_one_template();
        let (ki, kj) = (band_family(&t, i), band_family(&t, j));
        prop_assert_eq!(alexander_from_pd(&ki).unwrap(), alexander_from_pd(&kj).unwrap());
        let one = LaurentPoly::one();
        let (vi, vj) = (jones(&kh_reduced(&ki).unwrap()), jones(&kh_reduced(&kj).unwrap()));
        prop_assert_eq!(vi.sub(&one), vj.sub(&one).shift(2 * (j - i)));
    }

    #[test]
    fn kanenobu_depends_on_sum(p in -2i64..=2, q in -2i64..=2, k in -2i64..=2) {
        let (a, b) = (kanenobu(p, q), kanenobu(p + k, q - k));
        prop_assert_eq!(alexander_from_pd(&a).unwrap(), alexander_from_pd(&b).unwrap());
        prop_assert_eq!(jones(&kh_reduced_bounded(&a, 32).unwrap()), jones(&kh_reduced_bounded(&b, 32).unwrap()));
    }

    #[test]
    fn json_round_trips(seed in any::<u64>()) {
        let mut r = rng(seed);
        let c = some_complex(&mut r);
        prop_assert_eq!(CfkComplex::from_json(&c.to_json()).unwrap().canonical(), c.canonical());
        let g = hat_h(&c);
        prop_assert_eq!(serde_json::from_str::<BigradedGroup>(&serde_json::to_string(&g).unwrap()).unwrap(), g);
        let h = hfk_minus(&c).unwrap();
        prop_assert_eq!(serde_json::from_str::<knotforge::f2core::UModule>(&serde_json::to_string(&h).unwrap()).unwrap(), h);
        let d = sample::knot_diagram(&mut r, 3, 6);
        prop_assert_eq!(knotforge::pd::PlanarDiagram::from_json(&d.to_json()).unwrap(), d.clone());
        let kh = kh_reduced(&d).unwrap();
        prop_assert_eq!(serde_json::from_str::<KhGroup>(&serde_json::to_string(&kh).unwrap()).unwrap(), kh);
        let ss = turner_ss(&d).unwrap();
        prop_assert_eq!(serde_json::from_str::<knotforge::kh::SsPages>(&serde_json::to_string(&ss).unwrap()).unwrap(), ss);
        let a = alexander_from_pd(&d).unwrap();
        prop_assert_eq!(serde_json::from_str::<LaurentPoly>(&serde_json::to_string(&a).unwrap()).unwrap(), a);
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
