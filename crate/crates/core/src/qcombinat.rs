//! q-combinatorial primitives: q-integers, q-factorials, q-binomials,
//! q-Pochhammer symbols, q-binomial polynomials, ascending/descending
//! products, and terminating basic hypergeometric sums.

use num::{One, Zero};

use crate::ratfunc::{Field, FieldQ, Poly, QScalar, Rat};

/// The q-integer `[n]_q = (q^n - 1)/(q - 1)`, defined for any integer `n`.
///
/// For `n >= 0` this is the polynomial `1 + q + ... + q^{n-1}`; negative
/// indices satisfy `[-n]_q = -q^{-n} [n]_q`.
pub fn qint(n: i64) -> FieldQ {
    if n >= 0 {
        let coeffs = vec![Rat::one(); n as usize];
        FieldQ::from_poly(Poly::from_coeffs(coeffs))
    } else {
        let pos = qint(-n);
        -(&pos * &FieldQ::q_pow(n))
    }
}

/// The q-factorial `[n]!_q = [1]_q [2]_q ... [n]_q`.
pub fn qfact(n: u32) -> FieldQ {
    let mut acc = FieldQ::one();
    for i in 1..=n {
        acc = &acc * &qint(i as i64);
    }
    acc
}

/// The Gaussian binomial coefficient `[n]!_q / ([m]!_q [n-m]!_q)`.
///
/// Panics if `m > n`. The quotient always reduces to a polynomial in `q`.
pub fn qbinom(n: u32, m: u32) -> FieldQ {
    assert!(m <= n, "qbinom requires m <= n, got m={m}, n={n}");
    &qfact(n) / &(&qfact(m) * &qfact(n - m))
}

/// The q-Pochhammer symbol `(q^m; q)_k = prod_{i=0}^{k-1} (1 - q^{m+i})`.
pub fn qpoch(base_exponent: i64, length: u32) -> FieldQ {
    let mut acc = FieldQ::one();
    for i in 0..length {
        let factor = &FieldQ::one() - &FieldQ::q_pow(base_exponent + i as i64);
        acc = &acc * &factor;
    }
    acc
}

/// `(a; q)_k` for an arbitrary scalar argument `a`.
pub fn qpoch_scalar<K: QScalar>(a: &K, k: u32) -> K {
    let mut acc = K::one();
    let mut shifted = a.clone();
    for _ in 0..k {
        acc = acc * (K::one() - shifted.clone());
        shifted = shifted * K::q_pow(1);
    }
    acc
}

/// The degree-`k` polynomial `(q^a (1 + (q-1)x); q)_k` in `x`.
pub fn qpoch_linear<K: QScalar>(k: u32, a_shift: u32) -> Poly<K> {
    assert!(a_shift >= 1, "qpoch_linear requires a_shift >= 1");
    let mut acc = Poly::one();
    for i in 0..k {
        let p = K::q_pow((a_shift + i) as i64);
        let qm1 = K::q_pow(1) - K::one();
        // 1 - q^{a+i} (1 + (q-1)x)
        let factor = Poly::from_coeffs(vec![K::one() - p.clone(), -(p * qm1)]);
        acc = &acc * &factor;
    }
    acc
}

/// The q-binomial polynomial: degree-`d` analogue of `binom(i + x, d)`,
/// `(1/[d]!_q) * prod_{t=i-d+1}^{i} ([t]_q + q^t x)`.
pub fn qbase<K: QScalar>(i: u32, d: u32) -> Poly<K> {
    let mut acc = Poly::one();
    let i = i as i64;
    let d = d as i64;
    for t in (i - d + 1)..=i {
        let factor = Poly::from_coeffs(vec![K::from_q(qint(t)), K::q_pow(t)]);
        acc = &acc * &factor;
    }
    let norm = K::from_q(Field::inv(&qfact(d as u32)));
    acc.scale(&norm)
}

/// `Asc(x, a) = prod_{i=1}^{a} ([i]_q + q^i x)`, with `Asc(x, 0) = 1`.
pub fn asc<K: QScalar>(a: u32) -> Poly<K> {
    let mut acc = Poly::one();
    for i in 1..=a as i64 {
        let factor = Poly::from_coeffs(vec![K::from_q(qint(i)), K::q_pow(i)]);
        acc = &acc * &factor;
    }
    acc
}

/// `Desc(x, a) = prod_{i=1}^{a} ([i]_q - x)`, with `Desc(x, 0) = 1`.
///
/// The Laurent case `Desc(x, -1) = -1/x` is handled where it is consumed,
/// in the general moment functional.
pub fn desc<K: QScalar>(a: u32) -> Poly<K> {
    let mut acc = Poly::one();
    for i in 1..=a as i64 {
        let factor = Poly::from_coeffs(vec![K::from_q(qint(i)), -K::one()]);
        acc = &acc * &factor;
    }
    acc
}

/// Terminating basic hypergeometric sum
/// `sum_{k=0}^{n} (q^{-n};q)_k (q^t;q)_k q^k / ((q;q)_k (q^b;q)_k)`,
/// the `2phi1(q^{-n}, q^t; q^b)` convention used by the vanishing lemmas.
pub fn phi21_terminating(n: u32, top_exp: i64, bottom_exp: i64) -> FieldQ {
    let mut sum = FieldQ::zero();
    for k in 0..=n {
        let num = &(&qpoch(-(n as i64), k) * &qpoch(top_exp, k)) * &FieldQ::q_pow(k as i64);
        let den = &qpoch(1, k) * &qpoch(bottom_exp, k);
        sum = &sum + &(&num / &den);
    }
    sum
}
