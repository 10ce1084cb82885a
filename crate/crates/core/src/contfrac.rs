//! J-fraction and S-fraction machinery: exact series expansion, the
//! contraction identities linking the two, and the closed c-coefficient
//! sequences for the four moment generating series.

use num::One;

use crate::bernoulli::{beta_number, legendre_moment};
use crate::orthopoly::Recurrence;
use crate::qcombinat::qint;
use crate::ratfunc::{Field, FieldQ, FieldQZ, QScalar, Series};

/// Coefficients of the J-fraction
/// `1/(1 + a_0 x - b_1 x^2/(1 + a_1 x - b_2 x^2/(...)))`.
///
/// `a[n]` holds `a_n` (from `n = 0`); `b[n]` holds `b_n` (from `n = 1`,
/// `b[0]` is an unused placeholder zero).
#[derive(Clone, Debug)]
pub struct JFraction<K: Field> {
    pub a: Vec<K>,
    pub b: Vec<K>,
}

/// Coefficients of the S-fraction `1/(1 + c_1 x/(1 + c_2 x/(1 + ...)))`
/// in its canonical form with all partial denominators 1.
///
/// `c[i]` holds `c_{i+1}`.
#[derive(Clone, Debug)]
pub struct SFraction<K: Field> {
    pub c: Vec<K>,
}

impl<K: Field> JFraction<K> {
    pub fn from_recurrence(rec: &Recurrence<K>, len: usize) -> Self {
        let a = (0..len).map(|n| rec.a(n)).collect();
        let b = (0..len).map(|n| if n == 0 { K::zero() } else { rec.b(n) }).collect();
        JFraction { a, b }
    }
}

impl<K: Field> SFraction<K> {
    /// `c_k` for `k >= 1`.
    pub fn c(&self, k: usize) -> &K {
        assert!(k >= 1, "S-fraction coefficients start at c_1");
        &self.c[k - 1]
    }
}

/// Contraction of an S-fraction into the J-fraction with the same expansion:
/// `a_0 = c_1`, `a_n = c_{2n} + c_{2n+1}`, `b_n = c_{2n-1} c_{2n}`.
/// Coefficients beyond the stored list count as zero.
pub fn contract<K: Field>(s: &SFraction<K>) -> JFraction<K> {
    let m = s.c.len();
    let at = |k: usize| if k <= m { s.c(k).clone() } else { K::zero() };
    let mut a = Vec::new();
    let mut b = vec![K::zero()];
    if m >= 1 {
        a.push(s.c(1).clone());
    }
    let mut n = 1;
    while 2 * n <= m {
        a.push(at(2 * n) + at(2 * n + 1));
        b.push(at(2 * n - 1) * at(2 * n));
        n += 1;
    }
    JFraction { a, b }
}

fn level_order(order: usize, level: usize, step: usize) -> usize {
    order.saturating_sub(level * step).max(1)
}

/// Expands a J-fraction to a series of the given truncation order, using
/// `depth` levels with the innermost tail replaced by 1. Each level only
/// carries the coefficients that can still reach the top, so deeper levels
/// shrink; the result is exact in all `order` stored coefficients once
/// `depth >= ceil(order/2) + 1`, and stable for any larger depth.
pub fn jfraction_series_with_depth<K: Field>(
    j: &JFraction<K>,
    order: usize,
    depth: usize,
) -> Series<K> {
    let mut tail: Series<K> = Series::one(level_order(order, depth, 2));
    for level in (0..depth).rev() {
        let m = level_order(order, level, 2);
        let mut den = vec![K::zero(); m];
        den[0] = K::one();
        if m >= 2 {
            den[1] = j.a.get(level).cloned().unwrap_or_else(K::zero);
        }
        if m >= 3 {
            let b_next = j.b.get(level + 1).cloned().unwrap_or_else(K::zero);
            for i in 2..m {
                den[i] = den[i].clone() - b_next.clone() * tail.coeff(i - 2).clone();
            }
        }
        tail = Series::new(m, den).recip().expect("constant term is 1");
    }
    tail.with_order(order)
}

/// J-fraction expansion at the default depth `ceil(order/2) + 1`.
pub fn jfraction_series<K: Field>(j: &JFraction<K>, order: usize) -> Series<K> {
    jfraction_series_with_depth(j, order, order.div_ceil(2) + 1)
}

/// Expands an S-fraction to a series of the given truncation order with
/// `depth` levels (level `k` carries `c_k`); exact once `depth >= order + 1`.
pub fn sfraction_series_with_depth<K: Field>(
    s: &SFraction<K>,
    order: usize,
    depth: usize,
) -> Series<K> {
    let mut tail: Series<K> = Series::one(level_order(order, depth, 1));
    for k in (1..=depth).rev() {
        let m = level_order(order, k - 1, 1);
        let c_k = s.c.get(k - 1).cloned().unwrap_or_else(K::zero);
        let mut den = vec![K::zero(); m];
        den[0] = K::one();
        for i in 1..m {
            den[i] = c_k.clone() * tail.coeff(i - 1).clone();
        }
        tail = Series::new(m, den).recip().expect("constant term is 1");
    }
    tail.with_order(order)
}

/// S-fraction expansion at the default depth `order + 1`.
pub fn sfraction_series<K: Field>(s: &SFraction<K>, order: usize) -> Series<K> {
    sfraction_series_with_depth(s, order, order + 1)
}

/// The four moment generating series with closed S-fraction coefficients.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SeriesId {
    /// `sum beta_n x^n`
    B,
    /// `(1/beta_1) sum beta_{n+1} x^n`
    B1,
    /// `(1/beta_2) sum beta_{n+2} x^n`
    B2,
}

/// Closed-form S-fraction coefficient `c_k` (for `k >= 1`) of the series.
pub fn closed_c(id: SeriesId, k: usize) -> FieldQ {
    assert!(k >= 1);
    let odd = k % 2 == 1;
    let n = if odd { (k + 1) / 2 } else { k / 2 } as i64;
    match id {
        SeriesId::B => {
            if odd {
                // q^{n-1} [n]^2 / ((q^n + 1)[2n-1])
                let num = &FieldQ::q_pow(n - 1) * &qint(n).pow(2).unwrap();
                let den = &(&FieldQ::q_pow(n) + &FieldQ::one()) * &qint(2 * n - 1);
                &num / &den
            } else {
                // -[n]^2 / ((q^n + 1)[2n+1])
                let num = qint(n).pow(2).unwrap();
                let den = &(&FieldQ::q_pow(n) + &FieldQ::one()) * &qint(2 * n + 1);
                -(&num / &den)
            }
        }
        SeriesId::B1 => {
            if odd {
                // q^n [n]^2 [n+1] / ([2n][2n+1])
                let num = &(&FieldQ::q_pow(n) * &qint(n).pow(2).unwrap()) * &qint(n + 1);
                let den = &qint(2 * n) * &qint(2 * n + 1);
                &num / &den
            } else {
                // -[n][n+1]^2 / ([2n+1][2n+2])
                let num = &qint(n) * &qint(n + 1).pow(2).unwrap();
                let den = &qint(2 * n + 1) * &qint(2 * n + 2);
                -(&num / &den)
            }
        }
        SeriesId::B2 => {
            // cyclotomic-like factors q^{binom(m,2)} + (-1)^m
            let t = |m: i64| {
                let sign = if m % 2 == 0 { FieldQ::one() } else { -FieldQ::one() };
                &FieldQ::q_pow(m * (m - 1) / 2) + &sign
            };
            if odd {
                // [n][n+1]^2/([2n+1][2n+2]) * t(n+2)/t(n+1)
                let num = &(&qint(n) * &qint(n + 1).pow(2).unwrap()) * &t(n + 2);
                let den = &(&qint(2 * n + 1) * &qint(2 * n + 2)) * &t(n + 1);
                &num / &den
            } else {
                // -q^{n+1}[n+1]^2[n+2]/([2n+2][2n+3]) * t(n+1)/t(n+2)
                let num = &(&(&FieldQ::q_pow(n + 1) * &qint(n + 1).pow(2).unwrap())
                    * &qint(n + 2))
                    * &t(n + 1);
                let den = &(&qint(2 * n + 2) * &qint(2 * n + 3)) * &t(n + 2);
                -(&num / &den)
            }
        }
    }
}

/// Closed-form S-fraction coefficient `c_k` of the z-parameterized series
/// `sum_n ((1/z) int_0^z beta_n) x^n`.
pub fn closed_c_z(k: usize) -> FieldQZ {
    assert!(k >= 1);
    let odd = k % 2 == 1;
    let n = if odd { (k + 1) / 2 } else { k / 2 } as i64;
    let z = FieldQZ::z();
    let bracket = FieldQZ::from_q(qint(n));
    if odd {
        // q^{n-1} [n]([n] - z) / ((q^n + 1)[2n-1])
        let num = &(&FieldQZ::q_pow(n - 1) * &bracket) * &(&bracket - &z);
        let den = &(&FieldQZ::q_pow(n) + &FieldQZ::one()) * &FieldQZ::from_q(qint(2 * n - 1));
        &num / &den
    } else {
        // -[n]([n] + q^n z) / ((q^n + 1)[2n+1])
        let num = &bracket * &(&bracket + &(&FieldQZ::q_pow(n) * &z));
        let den = &(&FieldQZ::q_pow(n) + &FieldQZ::one()) * &FieldQZ::from_q(qint(2 * n + 1));
        -(&num / &den)
    }
}

/// The first `len` closed-form coefficients `c_1 ... c_len`.
pub fn closed_sfraction(id: SeriesId, len: usize) -> SFraction<FieldQ> {
    SFraction { c: (1..=len).map(|k| closed_c(id, k)).collect() }
}

/// The first `len` closed-form coefficients of the z-parameterized series.
pub fn closed_sfraction_z(len: usize) -> SFraction<FieldQZ> {
    SFraction { c: (1..=len).map(closed_c_z).collect() }
}

/// The moment generating series the S-fraction of `id` must expand to.
pub fn moment_ogf(id: SeriesId, order: usize) -> Series<FieldQ> {
    match id {
        SeriesId::B => Series::from_fn(order, |n| beta_number(n)),
        SeriesId::B1 => Series::from_fn(order, |n| &beta_number(n + 1) / &beta_number(1)),
        SeriesId::B2 => Series::from_fn(order, |n| &beta_number(n + 2) / &beta_number(2)),
    }
}

/// The z-parameterized moment generating series.
pub fn moment_ogf_z(order: usize) -> Series<FieldQZ> {
    Series::from_fn(order, |n| FieldQZ::from_poly(legendre_moment(n)))
}
