//! Truncated formal power series in `x` with exact coefficients.

use std::ops::{Add, Mul, Sub};

use super::field::{ArithError, Field};
use super::poly::Poly;

/// Power series truncated at a fixed order `N`: exactly `N` stored
/// coefficients, for `x^0 ... x^{N-1}`. All arithmetic truncates at `N`.
#[derive(Clone, PartialEq, Debug)]
pub struct Series<K: Field> {
    coeffs: Vec<K>,
}

impl<K: Field> Series<K> {
    /// Builds a series of the given order; `coeffs` is padded with zeros or
    /// truncated to exactly `order` entries.
    pub fn new(order: usize, mut coeffs: Vec<K>) -> Self {
        assert!(order >= 1, "series order must be at least 1");
        coeffs.truncate(order);
        coeffs.resize_with(order, K::zero);
        Series { coeffs }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> K) -> Self {
        Series::new(order, (0..order).map(f).collect())
    }

    pub fn zero(order: usize) -> Self {
        Series::new(order, vec![])
    }

    pub fn one(order: usize) -> Self {
        Series::new(order, vec![K::one()])
    }

    /// The monomial `x` as a series.
    pub fn x(order: usize) -> Self {
        Series::from_fn(order, |i| if i == 1 { K::one() } else { K::zero() })
    }

    pub fn from_poly(order: usize, p: &Poly<K>) -> Self {
        Series::new(order, p.coeffs().to_vec())
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, i: usize) -> &K {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[K] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    fn check_order(&self, rhs: &Self) -> Result<(), ArithError> {
        if self.order() != rhs.order() {
            return Err(ArithError::OrderMismatch(self.order(), rhs.order()));
        }
        Ok(())
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self, ArithError> {
        self.check_order(rhs)?;
        Ok(Series {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        })
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self, ArithError> {
        self.check_order(rhs)?;
        Ok(Series {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        })
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self, ArithError> {
        self.check_order(rhs)?;
        let n = self.order();
        let mut coeffs = vec![K::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(n - i).enumerate() {
                if b.is_zero() {
                    continue;
                }
                let t = coeffs[i + j].clone() + a.clone() * b.clone();
                coeffs[i + j] = t;
            }
        }
        Ok(Series { coeffs })
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn recip(&self) -> Result<Self, ArithError> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(ArithError::RecipConstantTerm);
        }
        let a0_inv = a0.inv();
        let n = self.order();
        let mut out = vec![K::zero(); n];
        out[0] = a0_inv.clone();
        for i in 1..n {
            let mut acc = K::zero();
            for k in 1..=i {
                if self.coeffs[k].is_zero() || out[i - k].is_zero() {
                    continue;
                }
                acc = acc + self.coeffs[k].clone() * out[i - k].clone();
            }
            out[i] = -(acc * a0_inv.clone());
        }
        Ok(Series { coeffs: out })
    }

    /// Composition `self(inner)`; requires `inner` to have zero constant term.
    pub fn compose(&self, inner: &Self) -> Result<Self, ArithError> {
        self.check_order(inner)?;
        if !inner.coeffs[0].is_zero() {
            return Err(ArithError::ComposeConstantTerm);
        }
        let n = self.order();
        // Horner in the inner series
        let mut acc = Series::zero(n);
        for c in self.coeffs.iter().rev() {
            acc = acc.checked_mul(inner)?;
            let t = acc.coeffs[0].clone() + c.clone();
            acc.coeffs[0] = t;
        }
        Ok(acc)
    }

    pub fn scale(&self, k: &K) -> Self {
        Series {
            coeffs: self.coeffs.iter().map(|c| c.clone() * k.clone()).collect(),
        }
    }

    /// Truncates (or zero-pads) to a new order.
    pub fn with_order(&self, order: usize) -> Self {
        Series::new(order, self.coeffs.clone())
    }
}

impl<K: Field> Add for &Series<K> {
    type Output = Series<K>;
    fn add(self, rhs: &Series<K>) -> Series<K> {
        self.checked_add(rhs).expect("series order mismatch")
    }
}

impl<K: Field> Sub for &Series<K> {
    type Output = Series<K>;
    fn sub(self, rhs: &Series<K>) -> Series<K> {
        self.checked_sub(rhs).expect("series order mismatch")
    }
}

impl<K: Field> Mul for &Series<K> {
    type Output = Series<K>;
    fn mul(self, rhs: &Series<K>) -> Series<K> {
        self.checked_mul(rhs).expect("series order mismatch")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratfunc::field::{rat_int, Rat};

    fn s(order: usize, coeffs: &[i64]) -> Series<Rat> {
        Series::new(order, coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    #[test]
    fn mul_truncates() {
        // (1+x)(1-x) at order 3 = 1 - x^2
        let a = s(3, &[1, 1]);
        let b = s(3, &[1, -1]);
        assert_eq!(&a * &b, s(3, &[1, 0, -1]));
    }

    #[test]
    fn recip_of_one_is_one() {
        assert_eq!(Series::<Rat>::one(5).recip().unwrap(), Series::one(5));
    }

    #[test]
    fn recip_geometric() {
        // 1/(1-x) = 1 + x + x^2 + x^3
        let a = s(4, &[1, -1]);
        assert_eq!(a.recip().unwrap(), s(4, &[1, 1, 1, 1]));
    }

    #[test]
    fn recip_requires_unit_constant_term() {
        assert_eq!(s(3, &[0, 1]).recip(), Err(ArithError::RecipConstantTerm));
    }

    #[test]
    fn compose_identity_and_zero() {
        let f = s(5, &[2, -1, 3, 0, 7]);
        let x = Series::x(5);
        assert_eq!(f.compose(&x).unwrap(), f);
        let zero = Series::zero(5);
        assert_eq!(f.compose(&zero).unwrap(), s(5, &[2]));
    }

    #[test]
    fn compose_rejects_nonzero_constant() {
        let f = s(3, &[1, 1]);
        assert_eq!(f.compose(&s(3, &[1, 1])), Err(ArithError::ComposeConstantTerm));
    }

    #[test]
    fn order_mismatch_is_reported() {
        assert_eq!(
            s(3, &[1]).checked_add(&s(4, &[1])),
            Err(ArithError::OrderMismatch(3, 4))
        );
    }

    #[test]
    fn exactly_order_coefficients_are_stored() {
        let a = s(3, &[1, 2, 3, 4, 5]);
        assert_eq!(a.order(), 3);
        assert_eq!(a.coeffs(), &[rat_int(1), rat_int(2), rat_int(3)]);
    }
}
