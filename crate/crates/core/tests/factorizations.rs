//! Cross-module checks of the Hankel factorization through the recurrence
//! coefficients: `det(mu_{i+j}) = prod b_k^{n-k}` for all four families, and
//! the shifted variant through the auxiliary sequence.

use num::One;

use qbernoulli::bernoulli::legendre_moment;
use qbernoulli::contfrac::{jfraction_series, JFraction};
use qbernoulli::hankel::{hankel_det, product_formula, shifted_det_formula};
use qbernoulli::orthopoly::{
    hahn_recurrence, legendre_recurrence, moments_from_recurrence,
};
use qbernoulli::ratfunc::{FieldQZ, Series};

#[test]
fn unshifted_hankel_factorization_all_four_families() {
    let n_max = 7usize;
    for (c, d) in [(0u32, 0u32), (0, 1), (1, 1)] {
        let rec = hahn_recurrence(c, d);
        let moments = moments_from_recurrence(&rec, 2 * n_max);
        for n in 0..=n_max {
            assert_eq!(
                hankel_det(&moments, n, 0),
                product_formula(&rec, n),
                "({c},{d}) n = {n}"
            );
        }
    }
    let rec = legendre_recurrence();
    let moments: Vec<FieldQZ> = (0..2 * n_max)
        .map(|k| FieldQZ::from_poly(legendre_moment(k)))
        .collect();
    for n in 0..=n_max {
        assert_eq!(
            hankel_det(&moments, n, 0),
            product_formula(&rec, n),
            "legendre n = {n}"
        );
    }
}

#[test]
fn shifted_hankel_factorization_via_qn() {
    for (c, d) in [(0u32, 0u32), (0, 1), (1, 1)] {
        let rec = hahn_recurrence(c, d);
        let moments = moments_from_recurrence(&rec, 13);
        for n in 0..=6usize {
            assert_eq!(
                hankel_det(&moments, n, 1),
                shifted_det_formula(&rec, n),
                "({c},{d}) n = {n}"
            );
        }
    }
}

#[test]
fn jfraction_of_each_recurrence_expands_to_its_moments() {
    let order = 9usize;
    for (c, d) in [(0u32, 0u32), (0, 1), (1, 1)] {
        let rec = hahn_recurrence(c, d);
        let moments = moments_from_recurrence(&rec, order);
        let j = JFraction::from_recurrence(&rec, order);
        assert_eq!(
            jfraction_series(&j, order),
            Series::new(order, moments),
            "({c},{d})"
        );
    }
    let rec = legendre_recurrence();
    let moments = moments_from_recurrence(&rec, order);
    let j = JFraction::from_recurrence(&rec, order);
    assert_eq!(jfraction_series(&j, order), Series::new(order, moments), "legendre");
    assert!(moments_from_recurrence(&hahn_recurrence(0, 0), 1)[0].is_one());
}
