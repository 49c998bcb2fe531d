//! Seeded random inputs for the property suites and `verify`.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::cfk::{mirror_dual, tensor, CfkComplex};
use crate::invariants::{staircase_complex, thin_complex, torus_delta};
use crate::laurent::LaurentPoly;
use crate::pd::{braid_closure, PlanarDiagram};

/// Torus knot parameters with staircases of at most 9 generators.
const TORUS: &[(u32, u32)] = &[(2, 3), (2, 5), (2, 7), (2, 9), (3, 4), (3, 5), (3, 7), (4, 5)];

/// (Alexander polynomial, signature) of some alternating knots.
fn thin_table() -> Vec<(LaurentPoly, i64)> {
    let lp = |t: &[(i64, i64)]| LaurentPoly::from_terms(t.iter().copied());
    vec![
        (lp(&[(1, -1), (0, 3), (-1, -1)]), 0),
        (lp(&[(1, -2), (0, 5), (-1, -2)]), 0),
        (lp(&[(1, 2), (0, -3), (-1, 2)]), -2),
        (lp(&[(2, -1), (1, 3), (0, -3), (-1, 3), (-2, -1)]), -2),
        (lp(&[(1, -3), (0, 7), (-1, -3)]), 0),
        (lp(&[(1, 3), (0, -5), (-1, 3)]), -2),
        (lp(&[(2, 1), (1, -3), (0, 5), (-1, -3), (-2, 1)]), 0),
    ]
}

/// One builder output: a torus staircase, a thin model, or a mirror of either.
pub fn builder_complex<R: Rng>(rng: &mut R) -> CfkComplex {
    let c = if rng.gen_bool(0.5) {
        let &(p, q) = TORUS.choose(rng).expect("nonempty");
        staircase_complex(&torus_delta(p, q)).expect("torus staircase")
    } else {
        let table = thin_table();
        let (d, s) = table.choose(rng).expect("nonempty");
        thin_complex(d, *s).expect("thin model")
    };
    if rng.gen_bool(0.5) {
        mirror_dual(&c).expect("valid complex")
    } else {
        c
    }
}

/// Tensor product of two small builder outputs.
pub fn tensor_complex<R: Rng>(rng: &mut R) -> CfkComplex {
    tensor(&builder_complex(rng), &builder_complex(rng)).expect("valid complexes")
}

fn random_word<R: Rng>(rng: &mut R, strands: usize, len: usize) -> Vec<i32> {
    (0..len)
        .map(|_| rng.gen_range(1..strands as i32) * if rng.gen() { 1 } else { -1 })
        .collect()
}

/// Closure of a random braid that happens to be a knot.
pub fn knot_diagram<R: Rng>(rng: &mut R, max_strands: usize, max_len: usize) -> PlanarDiagram {
    loop {
        let n = rng.gen_range(2..=max_strands.max(2));
        let len = rng.gen_range(1..=max_len.max(1));
        let d = braid_closure(n, &random_word(rng, n, len)).expect("valid word");
        if d.is_knot().expect("valid diagram") {
            return d;
        }
    }
}

/// A two-component unlink diagram with a basepoint on each component.
///
/// The braid uses every generator but one exactly once, with a few
/// cancelling pairs spliced in.
pub fn unlink_diagram<R: Rng>(rng: &mut R) -> PlanarDiagram {
    let n = rng.gen_range(2..=4usize);
    let skip = rng.gen_range(1..n as i32);
    let mut word: Vec<i32> = (1..n as i32).filter(|&k| k != skip).map(|k| if rng.gen() { k } else { -k }).collect();
    word.shuffle(rng);
    for _ in 0..rng.gen_range(0..3) {
        let k = rng.gen_range(1..n as i32) * if rng.gen() { 1 } else { -1 };
        let at = rng.gen_range(0..=word.len());
        word.splice(at..at, [k, -k]);
    }
    let mut d = braid_closure(n, &word).expect("valid word");
    let comps = d.components().expect("valid diagram");
    debug_assert_eq!(comps.len(), 2);
    d.basepoints = comps.iter().map(|c| *c.choose(rng).expect("nonempty")).collect();
    d
}
