//! Benchmark fixtures.

use knotforge::grid::GridDiagram;
use knotforge::knots::{band_family, catalog, kanenobu, six_one_template};
use knotforge::pd::PlanarDiagram;

pub fn grid(name: &str) -> GridDiagram {
    catalog(name).expect("catalog entry").grid.expect("entry has a grid")
}

pub fn pd(name: &str) -> PlanarDiagram {
    catalog(name).expect("catalog entry").pd
}

/// Diagrams for the Khovanov benches, smallest first.
pub fn kh_inputs() -> Vec<(String, PlanarDiagram)> {
    vec![
        ("8_19m".into(), pd("8_19m")),
        ("T(3,5)".into(), pd("T(3,5)")),
        ("6_1 K2".into(), band_family(&six_one_template(), 2)),
        ("kanenobu(2,-2)".into(), kanenobu(2, -2)),
    ]
}
