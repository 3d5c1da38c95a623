//! Acceptance suite: one test per criterion, each printing its pass/fail
//! line (visible with `--nocapture`). The `check-all` subcommand runs the
//! same battery.

use spherotrop::checks;

fn assert_criterion(result: spherotrop::checks::CheckResult) {
    println!("{}", result.line());
    assert!(result.pass, "{}", result.line());
}

#[test]
fn criterion_1_punctured_plane_tropical_sets() {
    assert_criterion(checks::check_sl2_hypersurfaces());
}

#[test]
fn criterion_2_gl2_borel_chart_sets() {
    assert_criterion(checks::check_gl2_borel());
}

#[test]
fn criterion_3_smith_normal_form_agreement() {
    assert_criterion(checks::check_snf_agreement());
}

#[test]
fn criterion_4_svd_limit_law() {
    assert_criterion(checks::check_svd_limit());
}

#[test]
fn criterion_5_fundamental_theorem_harness() {
    assert_criterion(checks::check_fundamental_line());
}

#[test]
fn criterion_6_groebner_engine_properties() {
    assert_criterion(checks::check_groebner_properties());
}

#[test]
fn criterion_7_fan_equals_newton_normal_fan() {
    assert_criterion(checks::check_fan_vs_newton());
}

#[test]
fn criterion_8_generic_translate_estimator() {
    assert_criterion(checks::check_sumihiro());
}

#[test]
fn criterion_9_invariance_suite() {
    assert_criterion(checks::check_invariance());
}
