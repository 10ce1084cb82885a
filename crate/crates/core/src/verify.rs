//! Batch verification of the crate's symbolic identities.
//!
//! Every check compares two independently computed exact values, so a check
//! either passes identically or fails; there are no tolerances. The same
//! checks back the `verify` CLI subcommand and the acceptance test suite.

use num::{One, Zero};

use crate::bernoulli::{
    beta_number, beta_numbers, classical_bernoulli, functional_residual_egf,
    functional_residual_ogf, general_functional, legendre_moment, lemma_alpha_rhs,
    lemma_beta_rhs, moment_general, normalization_constant, psi, GeneralParams,
};
use crate::contfrac::{
    closed_c, closed_sfraction, closed_sfraction_z, contract, moment_ogf, moment_ogf_z,
    sfraction_series, SeriesId,
};
use crate::hankel::{
    closed_form_shift, closed_form_z, det, general_det_closed_form, general_moment_matrix,
    hankel_det, shifted_det_formula,
};
use crate::orthopoly::{
    generate_polys, hahn_pn, hahn_recurrence, jacobi_pn, jacobi_recurrence, legendre_pn,
    legendre_pn_cleared, legendre_recurrence, moments_from_recurrence, Recurrence,
};
use crate::qcombinat::{phi21_terminating, qbase};
use crate::ratfunc::{
    binomial, eval_at_q, rat_int, ArithError, FieldQ, FieldQZ, Poly, QScalar,
};

/// Verification scale: `Quick` shrinks every index bound, `Full` runs the
/// acceptance bounds.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Profile {
    Quick,
    Full,
}

struct Bounds {
    beta_classical: usize,
    defining_relation: usize,
    series_order: usize,
    lemma_beta_d: u32,
    lemma_alpha_de: u32,
    hahn_moments: usize,
    legendre_moments: usize,
    hankel_shift_n: usize,
    hankel_z_n: usize,
    shifted_det_n: usize,
    contraction_n: usize,
    sfraction_order: usize,
    general_moments: usize,
    general_symmetry: usize,
    general_det_n: usize,
    hyper_match_n: usize,
    orthogonality_n: usize,
    vandermonde_n: u32,
}

impl Profile {
    fn bounds(self) -> Bounds {
        match self {
            Profile::Full => Bounds {
                beta_classical: 12,
                defining_relation: 20,
                series_order: 12,
                lemma_beta_d: 6,
                lemma_alpha_de: 4,
                hahn_moments: 16,
                legendre_moments: 10,
                hankel_shift_n: 7,
                hankel_z_n: 5,
                shifted_det_n: 6,
                contraction_n: 12,
                sfraction_order: 12,
                general_moments: 8,
                general_symmetry: 5,
                general_det_n: 4,
                hyper_match_n: 8,
                orthogonality_n: 6,
                vandermonde_n: 10,
            },
            Profile::Quick => Bounds {
                beta_classical: 6,
                defining_relation: 8,
                series_order: 6,
                lemma_beta_d: 3,
                lemma_alpha_de: 2,
                hahn_moments: 6,
                legendre_moments: 4,
                hankel_shift_n: 4,
                hankel_z_n: 3,
                shifted_det_n: 3,
                contraction_n: 6,
                sfraction_order: 6,
                general_moments: 4,
                general_symmetry: 3,
                general_det_n: 2,
                hyper_match_n: 4,
                orthogonality_n: 3,
                vandermonde_n: 4,
            },
        }
    }
}

/// Outcome of one verification item.
#[derive(Clone, Debug)]
pub struct CheckResult {
    pub name: &'static str,
    pub pass: bool,
}

fn fq(num: &[i64], den: &[i64]) -> FieldQ {
    let p = |cs: &[i64]| Poly::from_coeffs(cs.iter().map(|&c| rat_int(c)).collect());
    FieldQ::new(p(num), p(den)).expect("nonzero denominator")
}

/// Criterion 1: the first five beta numbers match their displayed fractions.
pub fn check_beta_values() -> bool {
    let expected = [
        FieldQ::one(),
        fq(&[-1], &[1, 1]),
        fq(&[0, 1], &[1, 2, 2, 1]),
        // -q(q-1) / ((q+1)(q^2+q+1)(q^2+1))
        fq(&[0, 1, -1], &[1, 2, 3, 3, 2, 1]),
        // q(q^4 - q^3 - 2q^2 - q + 1) / ((q+1)(q^2+q+1)(q^2+1)(q^4+q^3+q^2+q+1))
        fq(
            &[0, 1, -1, -2, -1, 1],
            &[1, 3, 6, 9, 11, 11, 9, 6, 3, 1],
        ),
    ];
    (0..=4).all(|n| beta_number(n) == expected[n])
}

/// Criterion 2: at `q = 1` the beta numbers are the Bernoulli numbers from
/// the independent classical recurrence.
pub fn check_beta_classical(n_max: usize) -> bool {
    (0..=n_max).all(|n| {
        eval_at_q(&beta_number(n), &rat_int(1)).map_or(false, |v| v == classical_bernoulli(n))
    })
}

/// Criterion 3: the defining relation has residual exactly `(q-1, 1, 0, ...)`.
pub fn check_defining_relation(n_max: usize) -> bool {
    (0..=n_max).all(|n| {
        let mut lhs = FieldQ::zero();
        for k in 0..=n {
            let c = FieldQ::constant(binomial(n as u32, k as u32));
            lhs = &lhs + &(&(&c * &FieldQ::q_pow(k as i64 + 1)) * &beta_number(k));
        }
        lhs = &lhs - &beta_number(n);
        let expected = match n {
            0 => &FieldQ::q_pow(1) - &FieldQ::one(),
            1 => FieldQ::one(),
            _ => FieldQ::zero(),
        };
        lhs == expected
    })
}

/// Criterion 4: both generating-series functional equations have residual
/// exactly `(q - 1) + x` to the given order.
pub fn check_functional_equations(order: usize) -> bool {
    let qm1 = &FieldQ::q_pow(1) - &FieldQ::one();
    let is_expected = |s: &crate::ratfunc::Series<FieldQ>| {
        s.coeff(0) == &qm1
            && (order < 2 || s.coeff(1).is_one())
            && (2..order).all(|i| s.coeff(i).is_zero())
    };
    is_expected(&functional_residual_ogf(order)) && is_expected(&functional_residual_egf(order))
}

/// Criterion 5: the closed forms of the two evaluation lemmas match the
/// expansion of `Psi` on q-binomial polynomials.
pub fn check_psi_lemmas(d_max: u32, de_max: u32) -> bool {
    for d in 0..=d_max {
        for i in 0..=d {
            if psi(&qbase::<FieldQ>(i, d)) != lemma_beta_rhs(i, d) {
                return false;
            }
        }
    }
    for d in 0..=de_max {
        for i in 0..=d {
            for e in 0..=de_max {
                for j in 0..=e {
                    let prod = &qbase::<FieldQ>(i, d) * &qbase::<FieldQ>(j, e);
                    if psi(&prod) != lemma_alpha_rhs(i, d, j, e) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Criterion 6: recurrence moments of the three q-Hahn families are the
/// shifted beta sequences.
pub fn check_hahn_moments(n_max: usize) -> bool {
    let count = n_max + 1;
    let m00 = moments_from_recurrence(&hahn_recurrence(0, 0), count);
    let m01 = moments_from_recurrence(&hahn_recurrence(0, 1), count);
    let m11 = moments_from_recurrence(&hahn_recurrence(1, 1), count);
    (0..count).all(|n| {
        m00[n] == beta_number(n)
            && m01[n] == &beta_number(n + 1) / &beta_number(1)
            && m11[n] == &beta_number(n + 2) / &beta_number(2)
    })
}

/// Criterion 7: Legendre-recurrence moments are the integrated beta
/// polynomials, and specialize to `beta_n` at `z = 0`.
pub fn check_legendre_moments(n_max: usize) -> bool {
    let moments = moments_from_recurrence(&legendre_recurrence(), n_max + 1);
    moments.iter().enumerate().all(|(n, m)| {
        let poly = legendre_moment(n);
        m == &FieldQZ::from_poly(poly.clone())
            && poly.coeff(0) == beta_number(n)
    })
}

/// Criterion 8: Hankel determinants of beta with shifts 0-3 match the closed
/// forms, and the z-parameterized determinant matches its closed form.
pub fn check_hankel_closed_forms(n_shift: usize, n_z: usize) -> bool {
    let betas = beta_numbers(2 * n_shift.max(1) - 2 + 3);
    for shift in 0..=3usize {
        for n in 0..=n_shift {
            if hankel_det(&betas, n, shift) != closed_form_shift(shift, n) {
                return false;
            }
        }
    }
    let z_moments: Vec<FieldQZ> = (0..2 * n_z.max(1) - 1)
        .map(|n| FieldQZ::from_poly(legendre_moment(n)))
        .collect();
    (0..=n_z).all(|n| hankel_det(&z_moments, n, 0) == closed_form_z(n))
}

/// Criterion 9: the shifted-determinant factorization, both through the
/// `q_n` recurrence and through `(-1)^n p_n(0)`, matches direct determinants
/// for the three q-Hahn families.
pub fn check_shifted_determinants(n_max: usize) -> bool {
    let shifts: [(Recurrence<FieldQ>, Box<dyn Fn(usize) -> FieldQ>); 3] = [
        (hahn_recurrence(0, 0), Box::new(beta_number)),
        (
            hahn_recurrence(0, 1),
            Box::new(|n| &beta_number(n + 1) / &beta_number(1)),
        ),
        (
            hahn_recurrence(1, 1),
            Box::new(|n| &beta_number(n + 2) / &beta_number(2)),
        ),
    ];
    for (rec, moment) in &shifts {
        let moments: Vec<FieldQ> = (0..=2 * n_max).map(moment).collect();
        let polys = generate_polys(rec, n_max + 1);
        let qn = crate::hankel::qn_sequence(rec, n_max + 1);
        for n in 0..=n_max {
            let direct = hankel_det(&moments, n, 1);
            if shifted_det_formula(rec, n) != direct {
                return false;
            }
            // q_n = (-1)^n p_n(0)
            let mut pn0 = polys[n].coeff(0);
            if n % 2 == 1 {
                pn0 = -pn0;
            }
            if qn[n] != pn0 {
                return false;
            }
        }
    }
    true
}

/// Criterion 10: the four closed S-fractions contract onto their recurrences
/// and expand to the moment generating series; the shift-2 coefficients have
/// genuine poles at `q = 1`.
pub fn check_sfractions(n_max: usize, order: usize) -> bool {
    let pairs: [(SeriesId, Recurrence<FieldQ>); 3] = [
        (SeriesId::B, hahn_recurrence(0, 0)),
        (SeriesId::B1, hahn_recurrence(0, 1)),
        (SeriesId::B2, hahn_recurrence(1, 1)),
    ];
    for (id, rec) in &pairs {
        let j = contract(&closed_sfraction(*id, 2 * n_max + 1));
        for n in 0..=n_max {
            if j.a[n] != rec.a(n) {
                return false;
            }
            if n >= 1 && j.b[n] != rec.b(n) {
                return false;
            }
        }
        let s = closed_sfraction(*id, order + 1);
        if sfraction_series(&s, order) != moment_ogf(*id, order) {
            return false;
        }
    }
    // z-parameterized series
    let leg = legendre_recurrence();
    let jz = contract(&closed_sfraction_z(2 * n_max + 1));
    for n in 0..=n_max {
        if jz.a[n] != leg.a(n) {
            return false;
        }
        if n >= 1 && jz.b[n] != leg.b(n) {
            return false;
        }
    }
    let sz = closed_sfraction_z(order + 1);
    if sfraction_series(&sz, order) != moment_ogf_z(order) {
        return false;
    }
    // the shift-2 expansion has no classical limit: c_3 has a pole at q = 1
    eval_at_q(&closed_c(SeriesId::B2, 3), &rat_int(1)) == Err(ArithError::Pole)
}

/// Applies the linear functional with the given moments to a polynomial.
fn psi_like(p: &Poly<FieldQZ>, moments: &[FieldQZ]) -> FieldQZ {
    let mut value = FieldQZ::zero();
    for (k, coeff) in p.coeffs().iter().enumerate() {
        value = &value + &(coeff * &moments[k]);
    }
    value
}

fn general_param_grid() -> Vec<GeneralParams> {
    let mut out = Vec::new();
    for a in 1..=2u32 {
        for b in 1..=2u32 {
            for c in 0..=1u32 {
                for d in 0..=1u32 {
                    out.push(GeneralParams::new(a, b, c, d));
                }
            }
        }
    }
    out
}

/// Criterion 11: the general four-parameter family. Moments agree between
/// the functional and the recurrence; the a/b and c/d symmetries hold; the
/// determinant of `M(n)` matches its closed form; and the normalization
/// constant specializes to the first three families' values.
pub fn check_general_family(n_moments: usize, n_symmetry: usize, n_det: usize) -> bool {
    for p in general_param_grid() {
        let rec = jacobi_recurrence(&p);
        let moments = moments_from_recurrence(&rec, n_moments + 1);
        for (n, m) in moments.iter().enumerate() {
            if m != &moment_general(n, &p) {
                return false;
            }
        }
        let swapped_ab = GeneralParams::new(p.b(), p.a(), p.c(), p.d());
        let swapped_cd = GeneralParams::new(p.a(), p.b(), p.d(), p.c());
        for n in 0..=n_symmetry {
            let m = moment_general(n, &p);
            if m != moment_general(n, &swapped_ab) || m != moment_general(n, &swapped_cd) {
                return false;
            }
        }
        for n in 0..=n_det {
            if det(general_moment_matrix(&p, n)) != general_det_closed_form(&p, n) {
                return false;
            }
        }
    }
    let c00 = normalization_constant(&GeneralParams::new(1, 1, 0, 0));
    let c01 = normalization_constant(&GeneralParams::new(1, 1, 0, 1));
    let c11 = normalization_constant(&GeneralParams::new(1, 1, 1, 1));
    c00.is_one() && c01 == -beta_number(1) && c11 == beta_number(2)
}

/// Criterion 12: monicized hypergeometric polynomials match the recurrence
/// output, and each family's moment functional annihilates its `P_n`.
pub fn check_hypergeometric(n_match: usize, n_orth: usize) -> bool {
    for (c, d) in [(0u32, 0u32), (0, 1), (1, 1)] {
        let polys = generate_polys(&hahn_recurrence(c, d), n_match + 1);
        for (n, p) in polys.iter().enumerate() {
            if &hahn_pn(c, d, n).monic() != p {
                return false;
            }
        }
        // Psi(x^{c+d} P_n) vanishes for n >= 1 and is beta_{c+d} at n = 0
        let power = (c + d) as usize;
        for n in 0..=n_orth {
            let value = psi(&hahn_pn(c, d, n).mul_x_pow(power));
            let ok = if n == 0 { value == beta_number(power) } else { value.is_zero() };
            if !ok {
                return false;
            }
        }
    }
    // Legendre: the integral-moment functional annihilates P_n. Evaluated on
    // the denominator-cleared scalar multiple of P_n, which annihilates at
    // exactly the same n; the n = 0 value check runs on P_0 itself.
    let mu: Vec<FieldQZ> = (0..=n_orth)
        .map(|n| FieldQZ::from_poly(legendre_moment(n)))
        .collect();
    if !psi_like(&legendre_pn(0), &mu).is_one() {
        return false;
    }
    for n in 1..=n_orth {
        if !psi_like(&legendre_pn_cleared(n), &mu).is_zero() {
            return false;
        }
    }
    // general family: the unnormalized functional annihilates P_n
    for p in general_param_grid() {
        for n in 0..=n_orth {
            let value = general_functional(&p, &jacobi_pn(&p, n));
            let ok = if n == 0 {
                value == normalization_constant(&p)
            } else {
                value.is_zero()
            };
            if !ok {
                return false;
            }
        }
    }
    true
}

/// Criterion 13: the q-Vandermonde vanishing instances used by the
/// orthogonality proofs.
pub fn check_vandermonde(n_max: u32) -> bool {
    for m in 1..=3i64 {
        for n in 1..=n_max {
            if !phi21_terminating(n, n as i64 + m, m + 1).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Runs every criterion at the given profile, in order.
pub fn run_all(profile: Profile) -> Vec<CheckResult> {
    let b = profile.bounds();
    vec![
        CheckResult { name: "beta values match displayed fractions", pass: check_beta_values() },
        CheckResult {
            name: "beta at q=1 equals classical Bernoulli",
            pass: check_beta_classical(b.beta_classical),
        },
        CheckResult {
            name: "defining relation residual",
            pass: check_defining_relation(b.defining_relation),
        },
        CheckResult {
            name: "OGF/EGF functional equations",
            pass: check_functional_equations(b.series_order),
        },
        CheckResult {
            name: "Psi evaluation lemmas",
            pass: check_psi_lemmas(b.lemma_beta_d, b.lemma_alpha_de),
        },
        CheckResult { name: "q-Hahn moments", pass: check_hahn_moments(b.hahn_moments) },
        CheckResult {
            name: "big q-Legendre moments",
            pass: check_legendre_moments(b.legendre_moments),
        },
        CheckResult {
            name: "Hankel closed forms (shifts 0-3, z)",
            pass: check_hankel_closed_forms(b.hankel_shift_n, b.hankel_z_n),
        },
        CheckResult {
            name: "shifted determinant factorization",
            pass: check_shifted_determinants(b.shifted_det_n),
        },
        CheckResult {
            name: "S-fraction contractions and expansions",
            pass: check_sfractions(b.contraction_n, b.sfraction_order),
        },
        CheckResult {
            name: "general four-parameter family",
            pass: check_general_family(b.general_moments, b.general_symmetry, b.general_det_n),
        },
        CheckResult {
            name: "hypergeometric forms and orthogonality",
            pass: check_hypergeometric(b.hyper_match_n, b.orthogonality_n),
        },
        CheckResult { name: "q-Vandermonde vanishing", pass: check_vandermonde(b.vandermonde_n) },
    ]
}

/// Convenience: full-profile bound values, used by the acceptance tests so
/// test and CLI bounds cannot drift apart.
pub mod full_bounds {
    pub const BETA_CLASSICAL: usize = 12;
    pub const DEFINING_RELATION: usize = 20;
    pub const SERIES_ORDER: usize = 12;
    pub const LEMMA_BETA_D: u32 = 6;
    pub const LEMMA_ALPHA_DE: u32 = 4;
    pub const HAHN_MOMENTS: usize = 16;
    pub const LEGENDRE_MOMENTS: usize = 10;
    pub const HANKEL_SHIFT_N: usize = 7;
    pub const HANKEL_Z_N: usize = 5;
    pub const SHIFTED_DET_N: usize = 6;
    pub const CONTRACTION_N: usize = 12;
    pub const SFRACTION_ORDER: usize = 12;
    pub const GENERAL_MOMENTS: usize = 8;
    pub const GENERAL_SYMMETRY: usize = 5;
    pub const GENERAL_DET_N: usize = 4;
    pub const HYPER_MATCH_N: usize = 8;
    pub const ORTHOGONALITY_N: usize = 6;
    pub const VANDERMONDE_N: u32 = 10;
}
