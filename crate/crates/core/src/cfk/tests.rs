use super::*;

fn trefoil() -> CfkComplex {
    CfkComplex::build(&[("a", 0, 1), ("b", -1, 0), ("c", -2, -1)], &[("b", "a", 1), ("b", "c", 0)])
}

fn fig5_right() -> CfkComplex {
    CfkComplex::build(&[("a", 0, 2), ("b", -3, 0), ("c", -4, -2)], &[("b", "a", 2), ("b", "c", 0)])
}

fn ranks(pairs: &[((i64, i64), usize)]) -> BigradedGroup {
    BigradedGroup::from_ranks(pairs.iter().copied())
}

#[test]
fn validate_examples() {
    assert!(validate(&trefoil()).is_valid());
    let bad = CfkComplex::build(&[("a", 0, 1), ("b", -1, 0), ("c", -2, -1)], &[("b", "a", 0), ("b", "c", 0)]);
    let r = validate(&bad);
    assert!(r.violations.iter().any(|v| matches!(v, Violation::MaslovDrop { .. })));
    let chain = CfkComplex::build(&[("x", 0, 0), ("y", -1, 0), ("z", -2, 0)], &[("x", "y", 0), ("y", "z", 0)]);
    let r = validate(&chain);
    assert!(r.violations.iter().any(|v| matches!(v, Violation::DSquared { .. })));
    let filt = CfkComplex::build(&[("x", 0, 0), ("y", -1, 1)], &[("x", "y", 0)]);
    assert!(validate(&filt).violations.iter().any(|v| matches!(v, Violation::Filtration { .. })));
    let unknown = CfkComplex::build(&[("x", 0, 0)], &[("x", "q", 0)]);
    assert!(!validate(&unknown).is_valid());
}

#[test]
fn reduce_examples() {
    assert_eq!(reduce(&trefoil()).unwrap(), trefoil());
    let mut extra = trefoil();
    extra.generators.push(CfkGenerator { name: "d".into(), maslov: 0, alexander: 1 });
    extra.generators.push(CfkGenerator { name: "e".into(), maslov: -1, alexander: 1 });
    extra.differential.push(CfkTerm { from: "d".into(), to: "e".into(), upower: 0 });
    assert_eq!(reduce(&extra).unwrap().canonical(), trefoil().canonical());
    let pair = CfkComplex::build(&[("x", 0, 0), ("y", -1, 0)], &[("x", "y", 0)]);
    assert!(reduce(&pair).unwrap().is_empty());
}

#[test]
fn reduce_reroutes_through_cancelled_pair() {
    // w -> y, x -> y, x -> z with x -> y canceled: w must now hit z.
    let c = CfkComplex::build(
        &[("w", 1, 1), ("x", 1, 0), ("y", 0, 0), ("z", 0, -1)],
        &[("w", "y", 0), ("x", "y", 0), ("x", "z", 0)],
    );
    assert!(validate(&c).is_valid());
    let r = reduce(&c).unwrap();
    // w -> y (k = 0, a 1 -> 0) is not a candidate; x -> y is.
    assert_eq!(r.generators.len(), 2);
    assert_eq!(r.differential, vec![CfkTerm { from: "w".into(), to: "z".into(), upower: 0 }]);
}

#[test]
fn hat_examples() {
    let v = hat(&trefoil()).unwrap();
    assert_eq!(v.group(), ranks(&[((0, 1), 1), ((-1, 0), 1), ((-2, -1), 1)]));
    assert_eq!(v.differential, vec![VerticalTerm { from: "b".into(), to: "c".into() }]);
    let h = hat_homology(&v).unwrap();
    assert_eq!(h, ranks(&[((0, 1), 1)]));
    assert!(canceling_check(&h));

    let u = hat(&CfkComplex::unknot()).unwrap();
    assert_eq!(hat_homology(&u).unwrap(), ranks(&[((0, 0), 1)]));

    let f = hat(&fig5_right()).unwrap();
    assert_eq!(f.group(), ranks(&[((0, 2), 1), ((-3, 0), 1), ((-4, -2), 1)]));
    assert_eq!(hat_homology(&f).unwrap(), ranks(&[((0, 2), 1)]));
}

#[test]
fn hat_homology_minimal_alexander() {
    // Two m = 0 cycles x (a=2) and y (a=0) homologous through z (m=1, a=3).
    let v = VerticalComplex {
        generators: vec![
            CfkGenerator { name: "x".into(), maslov: 0, alexander: 2 },
            CfkGenerator { name: "y".into(), maslov: 0, alexander: 0 },
            CfkGenerator { name: "z".into(), maslov: 1, alexander: 3 },
        ],
        differential: vec![
            VerticalTerm { from: "z".into(), to: "x".into() },
            VerticalTerm { from: "z".into(), to: "y".into() },
        ],
    };
    assert_eq!(hat_homology(&v).unwrap(), ranks(&[((0, 0), 1)]));
}

#[test]
fn mirror_and_transpose() {
    let m = mirror_dual(&trefoil()).unwrap();
    assert!(validate(&m).is_valid());
    assert_eq!(hat(&m).unwrap().group(), ranks(&[((0, -1), 1), ((1, 0), 1), ((2, 1), 1)]));
    assert_eq!(mirror_dual(&CfkComplex::unknot()).unwrap(), CfkComplex::unknot());
    assert_eq!(mirror_dual(&m).unwrap(), trefoil());

    for c in [trefoil(), fig5_right(), CfkComplex::unknot()] {
        let t = transpose(&c).unwrap();
        assert!(validate(&t).is_valid());
        assert_eq!(hat(&t).unwrap().group(), hat(&c).unwrap().group());
        assert_eq!(transpose(&t).unwrap(), c);
    }
}

#[test]
fn tensor_examples() {
    let t = trefoil();
    let tu = tensor(&t, &CfkComplex::unknot()).unwrap();
    assert_eq!(hat(&tu).unwrap().group(), hat(&t).unwrap().group());

    let tt = tensor(&t, &t).unwrap();
    assert!(validate(&tt).is_valid());
    let by_a = hat(&tt).unwrap().group().by_alexander();
    assert_eq!(by_a.into_iter().collect::<Vec<_>>(), vec![(-2, 1), (-1, 2), (0, 3), (1, 2), (2, 1)]);

    let tm = tensor(&t, &mirror_dual(&t).unwrap()).unwrap();
    let g = hat(&tm).unwrap().group();
    assert_eq!(g.total_rank(), 9);
    let delta = LaurentPoly::from_terms([(1, 1), (0, -1), (-1, 1)]);
    assert_eq!(euler_characteristic(&g), delta.mul(&delta.invert()).unwrap());
}

#[test]
fn json_round_trip() {
    let c = fig5_right();
    let back = CfkComplex::from_json(&c.to_json()).unwrap();
    assert_eq!(back, c.canonical());
}
