use super::*;
use crate::group::{symmetry_check, BigradedGroup};
use crate::invariants::{staircase_complex, torus_delta};
use crate::knots::alexander_from_pd;
use crate::laurent::LaurentPoly;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn group(pairs: &[((i64, i64), usize)]) -> BigradedGroup {
    BigradedGroup::from_ranks(pairs.iter().copied())
}

fn unknot() -> GridDiagram {
    GridDiagram::new(vec![0, 1], vec![1, 0])
}

fn trefoil_rh() -> GridDiagram {
    GridDiagram::torus(5, 2).mirror()
}

fn fig8() -> GridDiagram {
    GridDiagram::new(vec![0, 5, 1, 2, 4, 3], vec![4, 2, 3, 0, 1, 5])
}

#[test]
fn validation() {
    assert!(validate_grid(&unknot()).is_valid());
    let same = GridDiagram::new(vec![0, 1, 2], vec![0, 1, 2]);
    assert!(validate_grid(&same).violations.contains(&GridViolation::SharedCell { column: 0 }));
    let two = GridDiagram::new(vec![0, 1, 2, 3], vec![1, 0, 3, 2]);
    assert_eq!(validate_grid(&two).violations, vec![GridViolation::MultiComponent { components: 2 }]);
    assert!(matches!(grid_hfk(&two), Err(Error::NotAKnot(_))));
    let bad = GridDiagram::new(vec![0, 0], vec![1, 1]);
    assert!(matches!(grid_hfk(&bad), Err(Error::InvalidGrid(_))));
    let big = GridDiagram::torus(10, 3);
    assert_eq!(grid_hfk(&big), Err(Error::GridTooLarge { size: 10, bound: 9 }));
}

#[test]
fn small_knots() {
    assert_eq!(grid_hfk(&unknot()).unwrap(), group(&[((0, 0), 1)]));
    assert_eq!(alexander_from_grid(&unknot()).unwrap(), LaurentPoly::one());
    let rh = grid_hfk(&trefoil_rh()).unwrap();
    assert_eq!(rh, group(&[((0, 1), 1), ((-1, 0), 1), ((-2, -1), 1)]));
    let lh = grid_hfk(&GridDiagram::torus(5, 2)).unwrap();
    assert_eq!(lh, rh.negate());
    assert_eq!(alexander_from_grid(&trefoil_rh()).unwrap(), torus_delta(2, 3));
    let f = grid_hfk(&fig8()).unwrap();
    assert_eq!(f.by_alexander().into_iter().collect::<Vec<_>>(), vec![(-1, 1), (0, 3), (1, 1)]);
    assert!(symmetry_check(&f));
}

#[test]
fn torus_grids_match_staircases() {
    for (p, q) in [(2, 5), (3, 4)] {
        let g = GridDiagram::torus((p + q) as usize, p as usize).mirror();
        let h = grid_hfk(&g).unwrap();
        assert_eq!(h, staircase_complex(&torus_delta(p, q)).unwrap().generator_group(), "T({p},{q})");
    }
}

#[test]
fn tilde_rank_and_invariance() {
    let g = fig8();
    let t = grid_tilde_homology(&g, DEFAULT_MAX_GRID).unwrap();
    let h = grid_hfk(&g).unwrap();
    assert_eq!(t.total_rank(), h.total_rank() << (g.size - 1));
    for (dc, dr) in [(1, 0), (0, 1), (2, 3), (5, 5)] {
        assert_eq!(grid_hfk(&g.translate(dc, dr)).unwrap(), h);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut moved = 0;
    while moved < 20 {
        let mut xs: Vec<usize> = (0..6).collect();
        let mut os: Vec<usize> = (0..6).collect();
        xs.shuffle(&mut rng);
        os.shuffle(&mut rng);
        let g = GridDiagram::new(xs, os);
        if !validate_grid(&g).is_valid() {
            continue;
        }
        let Some(c) = (0..6).find(|&c| g.commute_columns(c).is_some()) else { continue };
        let h = grid_hfk(&g).unwrap();
        assert_eq!(grid_hfk(&g.commute_columns(c).unwrap()).unwrap(), h, "{g:?}");
        moved += 1;
    }
}

#[test]
fn pd_conversion() {
    let d = grid_to_pd(&trefoil_rh()).unwrap();
    assert_eq!((d.n_crossings(), d.writhe()), (3, 3));
    assert_eq!(grid_to_pd(&unknot()).unwrap(), crate::pd::PlanarDiagram::circle());
    for g in [trefoil_rh(), fig8(), GridDiagram::torus(7, 3)] {
        let d = grid_to_pd(&g).unwrap();
        assert_eq!(alexander_from_pd(&d).unwrap(), alexander_from_grid(&g).unwrap());
    }
}

#[test]
fn json_round_trip() {
    let g = fig8();
    assert_eq!(GridDiagram::from_json(&g.to_json()).unwrap(), g);
    assert_eq!(g.to_json(), r#"{"size":6,"xs":[0,5,1,2,4,3],"os":[4,2,3,0,1,5]}"#);
}
