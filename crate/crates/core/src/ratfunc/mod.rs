//! Exact arithmetic foundation: big rationals, univariate polynomials,
//! reduced rational functions of `q`, the `z` tower field, and truncated
//! formal power series.
//!
//! Every type here is an immutable value with canonical representation, so
//! structural equality decides equality in the corresponding field.

mod field;
mod fraction;
mod gcd;
mod poly;
mod series;

pub use field::{binomial, rat, rat_int, ArithError, Field, Rat};
pub use fraction::{
    eval_at_q, fieldq_from_json, fieldq_to_json, fieldqz_to_json, integer_cleared, FieldQ,
    FieldQZ, QScalar, RatFunc,
};
pub use poly::Poly;
pub use series::Series;

#[cfg(test)]
mod proptests {
    use super::*;
    use num::{One, Zero};
    use proptest::prelude::*;

    fn small_poly() -> impl Strategy<Value = Poly<Rat>> {
        prop::collection::vec(-6i64..=6, 0..4)
            .prop_map(|cs| Poly::from_coeffs(cs.into_iter().map(rat_int).collect()))
    }

    fn nonzero_poly() -> impl Strategy<Value = Poly<Rat>> {
        small_poly().prop_filter("nonzero", |p| !p.is_zero())
    }

    fn fieldq() -> impl Strategy<Value = FieldQ> {
        (small_poly(), nonzero_poly()).prop_map(|(n, d)| FieldQ::new(n, d).unwrap())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(128))]

        #[test]
        fn field_axioms(a in fieldq(), b in fieldq(), c in fieldq()) {
            // associativity
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            // commutativity
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            // distributivity
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            // identities and inverses
            prop_assert_eq!(&a + &FieldQ::zero(), a.clone());
            prop_assert_eq!(&a * &FieldQ::one(), a.clone());
            prop_assert_eq!(&a - &a, FieldQ::zero());
            if !a.is_zero() {
                prop_assert_eq!(&a * &a.try_inv().unwrap(), FieldQ::one());
            }
        }

        #[test]
        fn normalization_is_canonical(a in fieldq(), s in nonzero_poly()) {
            // (num*s)/(den*s) reduces to exactly the same representation
            let scaled = FieldQ::new(a.num() * &s, a.den() * &s).unwrap();
            prop_assert_eq!(&scaled, &a);
            prop_assert_eq!(scaled.num(), a.num());
            prop_assert_eq!(scaled.den(), a.den());
        }

        #[test]
        fn invariants_hold(a in fieldq(), b in fieldq()) {
            for f in [&a + &b, &a * &b, &a - &b] {
                // reduced and monic denominator
                prop_assert!(Poly::gcd(f.num(), f.den()).is_one() || f.num().is_zero());
                prop_assert!(f.den().leading().unwrap().is_one());
            }
        }

        #[test]
        fn eval_commutes_away_from_poles(a in fieldq(), b in fieldq(), n in -4i64..=4) {
            let v = rat_int(n);
            let prod = &a * &b;
            if let (Ok(ea), Ok(eb), Ok(ep)) = (a.eval(&v), b.eval(&v), prod.eval(&v)) {
                prop_assert_eq!(ep, ea * eb);
            }
        }

        #[test]
        fn series_mul_matches_truncated_poly_mul(a in small_poly(), b in small_poly()) {
            let n = 6;
            let sa = Series::from_poly(n, &a);
            let sb = Series::from_poly(n, &b);
            let prod = &a * &b;
            prop_assert_eq!(&sa * &sb, Series::from_poly(n, &prod));
        }
    }
}
