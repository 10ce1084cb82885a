//! Acceptance suite: one test per verification criterion, all at full scale.
//!
//! Every comparison is exact symbolic equality in the rational function
//! field; there are no tolerances anywhere. Each test prints a PASS/FAIL
//! line so `cargo test --test acceptance -- --nocapture` gives a report.

use qbernoulli::verify::{self, full_bounds as fb};

fn report(name: &str, pass: bool) {
    println!("{} {}", if pass { "PASS" } else { "FAIL" }, name);
    assert!(pass, "criterion failed: {name}");
}

#[test]
fn criterion_01_beta_values_match_displayed_fractions() {
    report("1. beta_0..beta_4 equal the displayed fractions", verify::check_beta_values());
}

#[test]
fn criterion_02_beta_at_q1_is_classical_bernoulli() {
    report(
        "2. beta_n at q=1 equals classical Bernoulli (n <= 12)",
        verify::check_beta_classical(fb::BETA_CLASSICAL),
    );
}

#[test]
fn criterion_03_defining_relation_residual() {
    report(
        "3. defining relation residual is (q-1, 1, 0, ...) (n <= 20)",
        verify::check_defining_relation(fb::DEFINING_RELATION),
    );
}

#[test]
fn criterion_04_functional_equation_residuals() {
    report(
        "4. OGF and EGF residuals equal (q-1) + x to order 12",
        verify::check_functional_equations(fb::SERIES_ORDER),
    );
}

#[test]
fn criterion_05_psi_evaluation_lemmas() {
    report(
        "5. Psi lemma closed forms (d <= 6; d,e <= 4)",
        verify::check_psi_lemmas(fb::LEMMA_BETA_D, fb::LEMMA_ALPHA_DE),
    );
}

#[test]
fn criterion_06_hahn_moments() {
    report(
        "6. q-Hahn moments are shifted beta sequences (n <= 16)",
        verify::check_hahn_moments(fb::HAHN_MOMENTS),
    );
}

#[test]
fn criterion_07_legendre_moments() {
    report(
        "7. Legendre moments equal integrated beta polynomials (n <= 10)",
        verify::check_legendre_moments(fb::LEGENDRE_MOMENTS),
    );
}

#[test]
fn criterion_08_hankel_closed_forms() {
    report(
        "8. Hankel closed forms: shifts 0-3 (n <= 7), z-case (n <= 5)",
        verify::check_hankel_closed_forms(fb::HANKEL_SHIFT_N, fb::HANKEL_Z_N),
    );
}

#[test]
fn criterion_09_shifted_determinant_factorization() {
    report(
        "9. shifted determinants via q_n and p_n(0) (n <= 6)",
        verify::check_shifted_determinants(fb::SHIFTED_DET_N),
    );
}

#[test]
fn criterion_10_sfraction_contractions_and_expansions() {
    report(
        "10. S-fraction contractions (n <= 12) and expansions (order 12)",
        verify::check_sfractions(fb::CONTRACTION_N, fb::SFRACTION_ORDER),
    );
}

#[test]
fn criterion_11_general_four_parameter_family() {
    report(
        "11. general family moments, symmetries, determinant (n <= 8/5/4)",
        verify::check_general_family(fb::GENERAL_MOMENTS, fb::GENERAL_SYMMETRY, fb::GENERAL_DET_N),
    );
}

#[test]
fn criterion_12_hypergeometric_and_orthogonality() {
    report(
        "12. hypergeometric P_n match recurrences (n <= 8), orthogonality (n <= 6)",
        verify::check_hypergeometric(fb::HYPER_MATCH_N, fb::ORTHOGONALITY_N),
    );
}

#[test]
fn criterion_13_q_vandermonde_vanishing() {
    report(
        "13. q-Vandermonde vanishing (n <= 10, m in 1..3)",
        verify::check_vandermonde(fb::VANDERMONDE_N),
    );
}
