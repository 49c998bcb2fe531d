use super::*;
use crate::pd::braid_closure;

fn kink(sign: i8) -> PlanarDiagram {
    if sign > 0 {
        PlanarDiagram::new(vec![[1, 1, 2, 2]], vec![1])
    } else {
        PlanarDiagram::new(vec![[1, 2, 2, 1]], vec![-1])
    }
}

fn lp(t: &[(i64, i64)]) -> LaurentPoly {
    LaurentPoly::from_terms(t.iter().copied())
}

#[test]
fn unknots() {
    let one = KhGroup::from_ranks([((0, 0), 1)]);
    assert_eq!(kh_reduced(&PlanarDiagram::circle()).unwrap(), one);
    assert_eq!(kh_reduced(&kink(1)).unwrap(), one);
    assert_eq!(kh_reduced(&kink(-1)).unwrap(), one);
    for w in [[1, -2], [-1, -2], [1, 2]] {
        let u = braid_closure(3, &w).unwrap();
        assert_eq!(kh_reduced(&u).unwrap(), one);
        assert_eq!(turner_ss(&u).unwrap().collapse_page, 1);
    }
}

#[test]
fn trefoil_jones() {
    let t = braid_closure(2, &[1, 1, 1]).unwrap();
    let g = kh_reduced(&t).unwrap();
    assert_eq!(jones(&g), lp(&[(1, 1), (3, 1), (4, -1)]));
    let m = crate::knots::mirror(&t);
    assert_eq!(jones(&kh_reduced(&m).unwrap()), lp(&[(-1, 1), (-3, 1), (-4, -1)]));
    assert_eq!(stilde(&t).unwrap(), 1);
    assert_eq!(stilde(&m).unwrap(), -1);
}

#[test]
fn mirror_8_19() {
    let t = braid_closure(3, &[1, 2, 1, 2, 1, 2, 1, 2]).unwrap();
    let m = crate::knots::mirror(&t);
    let g = kh_reduced(&m).unwrap();
    let want = KhGroup::from_ranks([((2, -6), 1), ((3, -8), 1), ((3, -6), 1), ((3, -5), 1), ((3, -3), 1)]);
    assert_eq!(g, want);
    assert_eq!(jones(&g), lp(&[(-3, 1), (-5, 1), (-8, -1)]));
    let ss = turner_ss(&m).unwrap();
    assert_eq!((ss.collapse_page, ss.survivor), (2, (3, -3)));
    assert_eq!(ss.pages[0], g);
    assert_eq!(stilde(&t).unwrap(), 3);
}

#[test]
fn cone_on_unlink() {
    let mut u = braid_closure(2, &[]).unwrap();
    u.basepoints = vec![1, 2];
    let c = basepoint_cone(&u).unwrap();
    assert_eq!(c.integral().unwrap(), KhGroup::from_ranks([((0, 0), 1), ((-1, 2), 1)]));
    u.basepoints = vec![1];
    assert_eq!(basepoint_cone(&u), Err(Error::NoSecondBasepoint));
}

#[test]
fn skein_triples() {
    for d in [
        braid_closure(2, &[1, 1, 1]).unwrap(),
        braid_closure(3, &[1, -2, 1, -2]).unwrap(),
        braid_closure(3, &[1, 2, 1, 2, 1, 2, 1, 2]).unwrap(),
    ] {
        for i in 0..d.n_crossings() {
            let (p, m, z) = skein_triple_at(&d, i).unwrap();
            let r = skein_triple_check(&p, &m, &z).unwrap();
            assert!(r.holds, "crossing {i}: {r:?}");
        }
    }
}

#[test]
fn scanning_keeps_d_squared_zero() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
    let mut seen = 0;
    while seen < 12 {
        let n = rng.gen_range(2..5);
        let len = rng.gen_range(1..9);
        let w: Vec<i32> = (0..len).map(|_| rng.gen_range(1..n as i32) * if rng.gen() { 1 } else { -1 }).collect();
        let d = braid_closure(n, &w).unwrap();
        if !d.is_knot().unwrap() {
            continue;
        }
        seen += 1;
        let mut d2 = d.clone();
        crate::knots::simplify_joins(&mut d2);
        let ps = pieces(&d2, d2.basepoints[0], None).unwrap();
        let mut cx = Complex::new();
        for p in &ps {
            cx = cx.attach(p);
            assert!(cx.check(), "{w:?}");
        }
        assert!(cx.len() >= 1);
        // mirror reverses gradings
        let g = kh_reduced(&d).unwrap();
        let m = kh_reduced(&crate::knots::mirror(&d)).unwrap();
        assert_eq!(m, KhGroup::from_ranks(g.iter().map(|((a, q), r)| ((-a, -q), r))), "{w:?}");
        assert_eq!(stilde(&crate::knots::mirror(&d)).unwrap(), -stilde(&d).unwrap());
    }
}
