//! The 6_1 band family and the Kanenobu knots.

use super::bands::{insert_twists, relocate, BandTemplate};
use crate::pd::PlanarDiagram;

/// 6_1 drawn with one extra clasp so that its ribbon band is a face between
/// two strands. Cutting the band at the site gives the 2-component unlink.
pub fn six_one_template() -> BandTemplate {
    let pd = PlanarDiagram {
        crossings: vec![
            [1, 13, 2, 5],
            [7, 10, 8, 11],
            [3, 9, 4, 8],
            [9, 3, 10, 2],
            [5, 12, 6, 1],
            [11, 16, 12, 7],
            [15, 14, 16, 4],
            [6, 14, 15, 13],
        ],
        signs: vec![-1, -1, 1, 1, -1, -1, 1, -1],
        basepoints: vec![1],
        joins: vec![],
    };
    BandTemplate::new("6_1", pd, [9, 15]).expect("fixed template")
}

/// 4_1 # 4_1 drawn as the union of two figure-eights with two twist sites,
/// one on each side of the summing sphere.
fn kanenobu_base() -> (PlanarDiagram, [[u32; 2]; 2]) {
    let pd = PlanarDiagram {
        crossings: vec![
            [12, 2, 13, 1],
            [10, 15, 11, 16],
            [16, 14, 1, 13],
            [14, 11, 15, 12],
            [7, 2, 8, 3],
            [5, 9, 6, 8],
            [3, 6, 4, 7],
            [9, 5, 10, 4],
        ],
        signs: vec![1, -1, 1, -1, -1, 1, -1, 1],
        basepoints: vec![2],
        joins: vec![],
    };
    (pd, [[4, 16], [7, 13]])
}

/// K_{p,q}: `p` and `q` full twists at the two sites, with the same twist
/// convention as `band_family`.
pub fn kanenobu(p: i64, q: i64) -> PlanarDiagram {
    let (base, [s1, s2]) = kanenobu_base();
    let a = insert_twists(&base, s1, p).expect("fixed site");
    let s2 = relocate(&base, &a, s2).expect("sites are disjoint");
    insert_twists(&a, s2, q).expect("fixed site")
}
