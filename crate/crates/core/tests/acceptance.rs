//! One test per acceptance criterion; each prints a single PASS/FAIL line.

use coarse_geom::suite::run_criterion;

fn check(id: u8) {
    let r = run_criterion(id);
    println!("{}", r.line());
    assert!(r.passed, "criterion {} failed", id);
}

#[test]
fn criterion_01_ball_sizes() {
    check(1);
}

#[test]
fn criterion_02_coend_stability() {
    check(2);
}

#[test]
fn criterion_03_infinite_coends() {
    check(3);
}

#[test]
fn criterion_04_commensurizer() {
    check(4);
}

#[test]
fn criterion_05_cover_equivalence() {
    check(5);
}

#[test]
fn criterion_06_root_uniqueness() {
    check(6);
}

#[test]
fn criterion_07_commuting_criterion() {
    check(7);
}

#[test]
fn criterion_08_fbc_verdicts() {
    check(8);
}

#[test]
fn criterion_09_irrational_slope() {
    check(9);
}

#[test]
fn criterion_10_distortion() {
    check(10);
}

#[test]
fn criterion_11_quasiline_invariants() {
    check(11);
}

#[test]
fn criterion_12_constants() {
    check(12);
}
