//! The ten acceptance criteria. Every comparison is exact (tolerance 0);
//! runtime limits are part of the pass condition where one is set.

use knotforge::verify::{run_check, DEFAULT_SEED};

fn criterion(id: u32) {
    let r = run_check(id, DEFAULT_SEED).expect("known check");
    let limit = r.limit_ms.map(|l| format!(" limit {l} ms")).unwrap_or_default();
    println!(
        "criterion {id:>2} [{}] {}: tolerance 0 (exact), {} ms{limit}; {}",
        if r.passed { "PASS" } else { "FAIL" },
        r.name,
        r.millis,
        r.detail
    );
    assert!(r.passed, "criterion {id} failed: {}", r.detail);
}

#[test]
fn c01_grid_trefoil() {
    criterion(1);
}

#[test]
fn c02_obstruction_certificate() {
    criterion(2);
}

#[test]
fn c03_rank3_enumeration() {
    criterion(3);
}

#[test]
fn c04_lspace_condition() {
    criterion(4);
}

#[test]
fn c05_kh_mirror_8_19() {
    criterion(5);
}

#[test]
fn c06_band_family_kh() {
    criterion(6);
}

#[test]
fn c07_band_family_alexander() {
    criterion(7);
}

#[test]
fn c08_kanenobu() {
    criterion(8);
}

#[test]
fn c09_property_suites() {
    criterion(9);
}

#[test]
fn c10_cross_oracle() {
    criterion(10);
}
