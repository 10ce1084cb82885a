//! Structure-aware polynomial GCDs.
//!
//! Naive Euclidean remainders over a fraction field suffer severe coefficient
//! growth (each remainder step compounds the fractions of the previous one).
//! Clearing denominators and running a primitive pseudo-remainder sequence
//! keeps every intermediate a polynomial with content removed, which bounds
//! the growth. The same scheme runs at both levels of the tower: over `Z[q]`
//! for polynomials in `q`, and over `(Q[q])[z]` for polynomials in `z`.

use num::{BigInt, One, Signed, Zero};

use super::field::Rat;
use super::fraction::FieldQ;
use super::poly::Poly;

/// Coefficient domain of a primitive pseudo-remainder sequence.
trait PrsRing: Clone {
    fn is_zero(&self) -> bool;
    fn mul(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn gcd(a: &Self, b: &Self) -> Self;
    fn exact_div(&self, d: &Self) -> Self;
    fn is_unit(&self) -> bool;
}

impl PrsRing for BigInt {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn gcd(a: &Self, b: &Self) -> Self {
        num::integer::gcd(a.clone(), b.clone())
    }
    fn exact_div(&self, d: &Self) -> Self {
        self / d
    }
    fn is_unit(&self) -> bool {
        self.abs().is_one()
    }
}

impl PrsRing for Poly<Rat> {
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn gcd(a: &Self, b: &Self) -> Self {
        Poly::gcd(a, b)
    }
    fn exact_div(&self, d: &Self) -> Self {
        Poly::exact_div(self, d)
    }
    fn is_unit(&self) -> bool {
        self.deg() == Some(0)
    }
}

fn trim<R: PrsRing>(v: &mut Vec<R>) {
    while v.last().map_or(false, |c| c.is_zero()) {
        v.pop();
    }
}

fn content<R: PrsRing>(v: &[R]) -> R {
    let mut acc: Option<R> = None;
    for c in v {
        if c.is_zero() {
            continue;
        }
        acc = Some(match acc {
            None => c.clone(),
            Some(g) => R::gcd(&g, c),
        });
        if acc.as_ref().map_or(false, |g| g.is_unit()) {
            break;
        }
    }
    acc.expect("content of the zero polynomial")
}

fn make_primitive<R: PrsRing>(v: &mut [R]) {
    let c = content(v);
    if c.is_unit() {
        return;
    }
    for e in v.iter_mut() {
        *e = e.exact_div(&c);
    }
}

/// `lc(v)^k u - (...) v` elimination until `deg < deg v`; the exact power of
/// `lc(v)` picked up is irrelevant because contents are removed afterwards.
fn pseudo_rem<R: PrsRing>(mut r: Vec<R>, v: &[R]) -> Vec<R> {
    let dv = v.len() - 1;
    let lc = v.last().expect("nonzero divisor");
    while r.len() > dv {
        let t = r.pop().expect("nonempty");
        if t.is_zero() {
            trim(&mut r);
            continue;
        }
        let dr = r.len(); // degree of the eliminated term
        for c in r.iter_mut() {
            *c = c.mul(lc);
        }
        for (j, vc) in v.iter().take(dv).enumerate() {
            let idx = dr - dv + j;
            r[idx] = r[idx].sub(&t.mul(vc));
        }
        trim(&mut r);
    }
    r
}

/// Primitive-PRS GCD of two nonzero, nonconstant polynomials given by
/// ascending coefficient vectors over the ring `R`. The result is primitive.
fn primitive_gcd<R: PrsRing>(mut a: Vec<R>, mut b: Vec<R>) -> Vec<R> {
    make_primitive(&mut a);
    make_primitive(&mut b);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    loop {
        if b.is_empty() {
            return a;
        }
        if b.len() == 1 {
            // a nonzero constant divides everything up to content
            return vec![b.pop().expect("nonempty")];
        }
        let mut r = pseudo_rem(a, &b);
        if !r.is_empty() {
            make_primitive(&mut r);
        }
        a = b;
        b = r;
    }
}

/// GCD over `Q[q]` through the primitive PRS on `Z[q]`; returns the monic GCD.
pub(crate) fn gcd_rat_coeff(a: &Poly<Rat>, b: &Poly<Rat>) -> Poly<Rat> {
    let ints = |p: &Poly<Rat>| -> Vec<BigInt> {
        let mut l = BigInt::one();
        for c in p.coeffs() {
            l = num::integer::lcm(l, c.denom().clone());
        }
        p.coeffs().iter().map(|c| c.numer() * (&l / c.denom())).collect()
    };
    let g = primitive_gcd(ints(a), ints(b));
    Poly::from_coeffs(g.into_iter().map(Rat::from).collect()).monic()
}

/// GCD over `(Q(q))[z]` through the primitive PRS on `(Q[q])[z]`; returns the
/// monic GCD (monic in `z`, with rational-function leading normalization).
pub(crate) fn gcd_fieldq_coeff(a: &Poly<FieldQ>, b: &Poly<FieldQ>) -> Poly<FieldQ> {
    let cleared = |p: &Poly<FieldQ>| -> Vec<Poly<Rat>> {
        let mut l = Poly::<Rat>::one();
        for c in p.coeffs() {
            let g = Poly::gcd(&l, c.den());
            l = &l * &c.den().exact_div(&g);
        }
        p.coeffs()
            .iter()
            .map(|c| c.num() * &l.exact_div(c.den()))
            .collect()
    };
    let g = primitive_gcd(cleared(a), cleared(b));
    Poly::from_coeffs(g.into_iter().map(FieldQ::from_poly).collect()).monic()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratfunc::field::rat_int;
    use proptest::prelude::*;

    fn p(coeffs: &[i64]) -> Poly<Rat> {
        Poly::from_coeffs(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    /// Reference implementation: plain monic Euclid.
    fn euclid(a: &Poly<Rat>, b: &Poly<Rat>) -> Poly<Rat> {
        let mut a = a.clone();
        let mut b = b.clone();
        while !b.is_zero() {
            let r = a.divrem(&b).1.monic();
            a = b;
            b = r;
        }
        a.monic()
    }

    #[test]
    fn agrees_with_euclid_on_structured_input() {
        let f = p(&[-1, 1]);
        let g = p(&[1, 1, 1]);
        let h = p(&[2, 0, 1]);
        let a = &(&f * &g) * &h;
        let b = &(&f * &g) * &p(&[-3, 1]);
        assert_eq!(gcd_rat_coeff(&a, &b), euclid(&a, &b));
        assert_eq!(gcd_rat_coeff(&a, &b), (&f * &g).monic());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(96))]

        #[test]
        fn matches_euclid(
            xs in prop::collection::vec(-5i64..=5, 1..5),
            ys in prop::collection::vec(-5i64..=5, 1..5),
            common in prop::collection::vec(-4i64..=4, 1..4),
        ) {
            let a = &p(&xs) * &p(&common);
            let b = &p(&ys) * &p(&common);
            prop_assume!(!a.is_zero() && !b.is_zero());
            prop_assert_eq!(gcd_rat_coeff(&a, &b), euclid(&a, &b));
        }
    }
}
