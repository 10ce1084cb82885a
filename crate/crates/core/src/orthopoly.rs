//! Three-term recurrences for the q-Hahn, big q-Legendre and big q-Jacobi
//! families (at the affine argument), monic polynomial generation, moment
//! extraction, and the hypergeometric closed forms.
//!
//! Convention throughout: monic orthogonal polynomials satisfy
//! `p_{n+1} = (a_n + x) p_n - b_n p_{n-1}` with `p_{-1} = 0`, `p_0 = 1`.
//! The displayed specializations that carry a plus sign in front of the
//! `p_{n-1}` term store the negated coefficient here.

use std::sync::Arc;

use num::{One, Zero};

use crate::bernoulli::GeneralParams;
use crate::qcombinat::{qfact, qint, qpoch, qpoch_linear};
use crate::ratfunc::{binomial, Field, FieldQ, FieldQZ, Poly, QScalar};

/// Coefficient sequences `n -> a_n` (n >= 0) and `n -> b_n` (n >= 1) of a
/// monic three-term recurrence. `b(0)` multiplies `p_{-1} = 0`; generators
/// return zero there.
#[derive(Clone)]
pub struct Recurrence<K: Field> {
    a: Arc<dyn Fn(usize) -> K + Send + Sync>,
    b: Arc<dyn Fn(usize) -> K + Send + Sync>,
}

impl<K: Field> Recurrence<K> {
    pub fn new(
        a: impl Fn(usize) -> K + Send + Sync + 'static,
        b: impl Fn(usize) -> K + Send + Sync + 'static,
    ) -> Self {
        Recurrence { a: Arc::new(a), b: Arc::new(b) }
    }

    pub fn a(&self, n: usize) -> K {
        (self.a)(n)
    }

    pub fn b(&self, n: usize) -> K {
        (self.b)(n)
    }
}

/// Change of variables `p_n(x) = q_n(Ax + B)/A^n`: the transformed family is
/// again orthogonal with `a'_n = (a_n + B)/A` and `b'_n = b_n / A^2`.
pub fn affine_transform<K: Field + Send + Sync + 'static>(
    rec: &Recurrence<K>,
    scale: K,
    shift: K,
) -> Recurrence<K> {
    assert!(!scale.is_zero(), "affine change of variables needs A != 0");
    let scale_sq = scale.clone() * scale.clone();
    let a_rec = rec.clone();
    let b_rec = rec.clone();
    let a_scale = scale;
    Recurrence::new(
        move |n| (a_rec.a(n) + shift.clone()) / a_scale.clone(),
        move |n| b_rec.b(n) / scale_sq.clone(),
    )
}

/// Moment side of the same change of variables:
/// `mu_n = A^{-n} sum_k binom(n,k) (-B)^{n-k} nu_k`.
pub fn affine_moment_transform<K: QScalar>(nu: &[K], scale: &K, shift: &K) -> Vec<K> {
    let mut out = Vec::with_capacity(nu.len());
    let scale_inv = Field::inv(scale);
    let mut scale_pow = K::one();
    for n in 0..nu.len() {
        let mut acc = K::zero();
        for (k, nu_k) in nu.iter().take(n + 1).enumerate() {
            let mut term = nu_k.clone() * K::from_rat(binomial(n as u32, k as u32));
            for _ in 0..(n - k) {
                term = term * -shift.clone();
            }
            acc = acc + term;
        }
        out.push(acc * scale_pow.clone());
        scale_pow = scale_pow * scale_inv.clone();
    }
    out
}

fn one_minus_q_pow(e: i64) -> FieldQ {
    &FieldQ::one() - &FieldQ::q_pow(e)
}

fn hahn_an_cn(c: u32, d: u32, n: usize) -> (FieldQ, FieldQ) {
    let n = n as i64;
    let (c, d) = (c as i64, d as i64);
    let a_num = &(&one_minus_q_pow(n + d + 1) * &one_minus_q_pow(n + c + 1))
        * &one_minus_q_pow(n + c + d + 1);
    let a_den = &one_minus_q_pow(2 * n + c + d + 1) * &one_minus_q_pow(2 * n + c + d + 2);
    let a = &a_num / &a_den;
    // the (1 - q^n) factor kills C_0; at (c,d) = (0,0) the denominator
    // degenerates as well, and 0 is the value consistent with the closed forms
    let cc = if n == 0 {
        FieldQ::zero()
    } else {
        let c_num = &(&(&FieldQ::q_pow(n + c + d + 1) * &one_minus_q_pow(n))
            * &one_minus_q_pow(n + c))
            * &one_minus_q_pow(n + d);
        let c_den = &one_minus_q_pow(2 * n + c + d) * &one_minus_q_pow(2 * n + c + d + 1);
        -(&c_num / &c_den)
    };
    (a, cc)
}

/// The q-Hahn recurrence before the affine change of variables:
/// `a_n = A_n + C_n - 1`, `b_n = A_{n-1} C_n`.
pub fn hahn_raw_recurrence(c: u32, d: u32) -> Recurrence<FieldQ> {
    let a = move |n: usize| {
        let (an, cn) = hahn_an_cn(c, d, n);
        &(&an + &cn) - &FieldQ::one()
    };
    let b = move |n: usize| {
        if n == 0 {
            return FieldQ::zero();
        }
        let (a_prev, _) = hahn_an_cn(c, d, n - 1);
        let (_, c_n) = hahn_an_cn(c, d, n);
        &a_prev * &c_n
    };
    Recurrence::new(a, b)
}

/// The q-Hahn family at the argument `q(1 + (q-1)x)`: the affine transform of
/// [`hahn_raw_recurrence`] with `A = q(q-1)`, `B = q`.
pub fn hahn_recurrence(c: u32, d: u32) -> Recurrence<FieldQ> {
    let big_a = &FieldQ::q_pow(1) * &(&FieldQ::q_pow(1) - &FieldQ::one());
    affine_transform(&hahn_raw_recurrence(c, d), big_a, FieldQ::q_pow(1))
}

/// Specialized closed form of the `(c,d) = (0,0)` recurrence.
pub fn hahn_recurrence_00() -> Recurrence<FieldQ> {
    let a = |n: usize| {
        let n = n as i64;
        let three = FieldQ::constant(crate::ratfunc::rat_int(3));
        let num = &(&qint(2 * n + 1) + &qint(n + 1)) - &(&three * &qint(n));
        let den = &(&FieldQ::one() + &FieldQ::q_pow(n))
            * &(&FieldQ::one() + &FieldQ::q_pow(n + 1));
        &num / &den
    };
    let b = |n: usize| {
        if n == 0 {
            return FieldQ::zero();
        }
        let n = n as i64;
        let num = &FieldQ::q_pow(n - 1) * &qint(n).pow(6).unwrap();
        let den = &(&qint(2 * n - 1) * &qint(2 * n).pow(2).unwrap()) * &qint(2 * n + 1);
        -(&num / &den)
    };
    Recurrence::new(a, b)
}

/// Specialized `(c,d) = (0,1)` recurrence; `a_n` has no simplified display
/// and comes from the general coefficients.
pub fn hahn_recurrence_01() -> Recurrence<FieldQ> {
    let general = hahn_recurrence(0, 1);
    let a = move |n: usize| general.a(n);
    let b = |n: usize| {
        if n == 0 {
            return FieldQ::zero();
        }
        let n = n as i64;
        let num = &FieldQ::q_pow(n) * &(&qint(n).pow(3).unwrap() * &qint(n + 1).pow(3).unwrap());
        let den = &(&qint(2 * n) * &qint(2 * n + 1).pow(2).unwrap()) * &qint(2 * n + 2);
        -(&num / &den)
    };
    Recurrence::new(a, b)
}

/// Specialized closed form of the `(c,d) = (1,1)` recurrence.
pub fn hahn_recurrence_11() -> Recurrence<FieldQ> {
    let a = |n: usize| {
        let n = n as i64;
        let num = &(&(&FieldQ::q_pow(1) - &FieldQ::one()) * &qint(n + 1)) * &qint(n + 2);
        let den = &(&FieldQ::one() + &FieldQ::q_pow(n + 1))
            * &(&FieldQ::one() + &FieldQ::q_pow(n + 2));
        &num / &den
    };
    let b = |n: usize| {
        if n == 0 {
            return FieldQ::zero();
        }
        let n = n as i64;
        let num = &(&FieldQ::q_pow(n + 1) * &qint(n))
            * &(&qint(n + 1).pow(4).unwrap() * &qint(n + 2));
        let den = &(&qint(2 * n + 1) * &qint(2 * n + 2).pow(2).unwrap()) * &qint(2 * n + 3);
        -(&num / &den)
    };
    Recurrence::new(a, b)
}

/// The big q-Legendre recurrence with symbolic parameter `z`.
pub fn legendre_recurrence() -> Recurrence<FieldQZ> {
    let a = |n: usize| {
        let n = n as i64;
        let z = FieldQZ::z();
        let three = FieldQ::constant(crate::ratfunc::rat_int(3));
        let two = FieldQ::constant(crate::ratfunc::rat_int(2));
        let brackets = &(&qint(2 * n + 1) + &qint(n + 1)) - &(&three * &qint(n));
        let num = &FieldQZ::from_q(brackets)
            - &(&z * &FieldQZ::from_q(&two * &FieldQ::q_pow(n)));
        let den = &(&FieldQ::one() + &FieldQ::q_pow(n)) * &(&FieldQ::one() + &FieldQ::q_pow(n + 1));
        &num / &FieldQZ::from_q(den)
    };
    let b = |n: usize| {
        if n == 0 {
            return FieldQZ::zero();
        }
        let n = n as i64;
        let z = FieldQZ::z();
        let bracket = FieldQZ::from_q(qint(n));
        let factor1 = &bracket - &z;
        let factor2 = &bracket + &(&z * &FieldQZ::from_q(FieldQ::q_pow(n)));
        let scalar = &(&FieldQ::q_pow(n - 1) * &qint(n).pow(4).unwrap())
            / &(&(&qint(2 * n - 1) * &qint(2 * n).pow(2).unwrap()) * &qint(2 * n + 1));
        -(&(&factor1 * &factor2) * &FieldQZ::from_q(scalar))
    };
    Recurrence::new(a, b)
}

fn jacobi_an_cn(p: &GeneralParams, n: usize) -> (FieldQ, FieldQ) {
    let n = n as i64;
    let (a, b, c, d) = (p.a() as i64, p.b() as i64, p.c() as i64, p.d() as i64);
    let s = a + b + c + d;
    let a_num = &(&one_minus_q_pow(n + a + d) * &one_minus_q_pow(n + a + c))
        * &one_minus_q_pow(n + s - 1);
    let a_den = &one_minus_q_pow(2 * n + s - 1) * &one_minus_q_pow(2 * n + s);
    let an = &a_num / &a_den;
    let cn = if n == 0 {
        FieldQ::zero()
    } else {
        let c_num = &(&(&FieldQ::q_pow(n + 2 * a + c + d - 1) * &one_minus_q_pow(n))
            * &one_minus_q_pow(n + b + d - 1))
            * &one_minus_q_pow(n + b + c - 1);
        let c_den = &one_minus_q_pow(2 * n + s - 2) * &one_minus_q_pow(2 * n + s - 1);
        -(&c_num / &c_den)
    };
    (an, cn)
}

/// The big q-Jacobi recurrence at the argument `q^a(1 + (q-1)x)`.
pub fn jacobi_recurrence(p: &GeneralParams) -> Recurrence<FieldQ> {
    let params = *p;
    let raw_a = move |n: usize| {
        let (an, cn) = jacobi_an_cn(&params, n);
        &(&an + &cn) - &FieldQ::one()
    };
    let raw_b = move |n: usize| {
        if n == 0 {
            return FieldQ::zero();
        }
        let (a_prev, _) = jacobi_an_cn(&params, n - 1);
        let (_, c_n) = jacobi_an_cn(&params, n);
        &a_prev * &c_n
    };
    let big_a = &FieldQ::q_pow(p.a() as i64) * &(&FieldQ::q_pow(1) - &FieldQ::one());
    affine_transform(
        &Recurrence::new(raw_a, raw_b),
        big_a,
        FieldQ::q_pow(p.a() as i64),
    )
}

/// Closed form for the `b_n` of [`jacobi_recurrence`].
pub fn jacobi_bn_closed(p: &GeneralParams, n: usize) -> FieldQ {
    if n == 0 {
        return FieldQ::zero();
    }
    let n = n as i64;
    let (a, b, c, d) = (p.a() as i64, p.b() as i64, p.c() as i64, p.d() as i64);
    let s = a + b + c + d;
    let num = &(&(&(&qint(n) * &qint(a + c + n - 1)) * &qint(b + c + n - 1))
        * &(&qint(a + d + n - 1) * &qint(b + d + n - 1)))
        * &qint(s + n - 2);
    let den = &(&qint(s + 2 * n - 3) * &qint(s + 2 * n - 2).pow(2).unwrap())
        * &qint(s + 2 * n - 1);
    -(&(&FieldQ::q_pow(n + c + d - 1) * &num) / &den)
}

/// Monic `p_0 ... p_{count-1}` from a three-term recurrence.
pub fn generate_polys<K: Field>(rec: &Recurrence<K>, count: usize) -> Vec<Poly<K>> {
    let mut out: Vec<Poly<K>> = Vec::with_capacity(count);
    for n in 0..count {
        let p = match n {
            0 => Poly::one(),
            _ => {
                let x_plus_a = Poly::from_coeffs(vec![rec.a(n - 1), K::one()]);
                let mut p = &x_plus_a * &out[n - 1];
                if n >= 2 {
                    p = &p - &out[n - 2].scale(&rec.b(n - 1));
                }
                p
            }
        };
        out.push(p);
    }
    out
}

/// Evaluates the coefficient sequences once: `(a_0..a_{count-1}, b_0..b_{count-1})`.
fn coefficient_tables<K: Field>(rec: &Recurrence<K>, count: usize) -> (Vec<K>, Vec<K>) {
    let a = (0..count).map(|n| rec.a(n)).collect();
    let b = (0..count)
        .map(|n| if n == 0 { K::zero() } else { rec.b(n) })
        .collect();
    (a, b)
}

/// Moments `mu_0 ... mu_{count-1}` (normalized `mu_0 = 1`) by iterating the
/// multiplication-by-`x` operator in the `p`-basis,
/// `x p_k = p_{k+1} - a_k p_k + b_k p_{k-1}`, and reading the `p_0` coordinate.
pub fn moments_from_recurrence<K: Field>(rec: &Recurrence<K>, count: usize) -> Vec<K> {
    let mut moments = Vec::with_capacity(count);
    if count == 0 {
        return moments;
    }
    // evaluate each coefficient once: the iteration revisits them many times
    let (a, b) = coefficient_tables(rec, count);
    // coordinates of x^n over the p-basis; starts at x^0 = p_0
    let mut coords = vec![K::one()];
    moments.push(K::one());
    for _ in 1..count {
        let len = coords.len();
        let mut next = vec![K::zero(); len + 1];
        for (k, v) in coords.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            next[k + 1] = next[k + 1].clone() + v.clone();
            next[k] = next[k].clone() - a[k].clone() * v.clone();
            if k >= 1 {
                next[k - 1] = next[k - 1].clone() + b[k].clone() * v.clone();
            }
        }
        coords = next;
        moments.push(coords[0].clone());
    }
    moments
}

/// Hypergeometric form of the q-Hahn polynomial `P_n` with parameters `c, d`:
/// the terminating sum with numerator Pochhammers `(q^{-n}, q^{n+c+d+1}; q)_k`
/// and denominator `(q, q^{c+1}, q^{d+1}; q)_k` against `(q(1+(q-1)x); q)_k`.
pub fn hahn_pn(c: u32, d: u32, n: usize) -> Poly<FieldQ> {
    let mut acc = Poly::zero();
    for k in 0..=n as u32 {
        let num = &(&qpoch(-(n as i64), k) * &qpoch(n as i64 + (c + d) as i64 + 1, k))
            * &FieldQ::q_pow(k as i64);
        let den = &(&qpoch(1, k) * &qpoch(c as i64 + 1, k)) * &qpoch(d as i64 + 1, k);
        let scalar = &num / &den;
        acc = &acc + &qpoch_linear::<FieldQ>(k, 1).scale(&scalar);
    }
    acc
}

fn legendre_pn_parts(n: usize) -> (Poly<FieldQZ>, FieldQZ) {
    let qm1 = &FieldQ::q_pow(1) - &FieldQ::one();
    let c = &FieldQZ::one() + &(&FieldQZ::z() * &FieldQZ::from_q(qm1));
    // (cq; q)_k = prod_{i=1}^{k} (1 - c q^i)
    let factors: Vec<FieldQZ> = (1..=n as i64)
        .map(|i| &FieldQZ::one() - &(&c * &FieldQZ::q_pow(i)))
        .collect();
    // suffix[k] = prod_{i=k+1}^{n} (1 - c q^i)
    let mut suffix = vec![FieldQZ::one(); n + 1];
    for k in (0..n).rev() {
        suffix[k] = &suffix[k + 1] * &factors[k];
    }
    let mut acc = Poly::zero();
    for k in 0..=n as u32 {
        let num = &(&qpoch(-(n as i64), k) * &qpoch(n as i64 + 1, k)) * &FieldQ::q_pow(k as i64);
        let den = qpoch(1, k).pow(2).unwrap();
        let scalar = &FieldQZ::from_q(&num / &den) * &suffix[k as usize];
        acc = &acc + &qpoch_linear::<FieldQZ>(k, 1).scale(&scalar);
    }
    let full = suffix.into_iter().next().expect("nonempty");
    (acc, full)
}

/// Hypergeometric form of the big q-Legendre polynomial `P_n` (symbolic `z`):
/// denominator Pochhammers `(q, q, cq; q)_k` with `c = 1 + (q-1)z`.
///
/// The terms are accumulated over the common denominator `(cq; q)_n` (each
/// term carries the complementary suffix product), which keeps every
/// intermediate a plain polynomial in `z`; the single division happens last.
pub fn legendre_pn(n: usize) -> Poly<FieldQZ> {
    let (cleared, full) = legendre_pn_parts(n);
    cleared.scale(&Field::inv(&full))
}

/// `(cq; q)_n * P_n` for the big q-Legendre family: the same polynomial up
/// to a nonzero scalar, with every coefficient a plain polynomial in `z`.
/// Linear functionals annihilate `P_n` iff they annihilate this variant, and
/// evaluating them here avoids fraction arithmetic in the tower entirely.
pub fn legendre_pn_cleared(n: usize) -> Poly<FieldQZ> {
    legendre_pn_parts(n).0
}

/// Hypergeometric form of the general four-parameter polynomial `P_n`:
/// numerator `(q^{-n}, q^{n+a+b+c+d-1}; q)_k`, denominator
/// `(q, q^{a+c}, q^{a+d}; q)_k`, against `(q^a(1+(q-1)x); q)_k`.
pub fn jacobi_pn(p: &GeneralParams, n: usize) -> Poly<FieldQ> {
    let (a, b, c, d) = (p.a() as i64, p.b() as i64, p.c() as i64, p.d() as i64);
    let mut acc = Poly::zero();
    for k in 0..=n as u32 {
        let num = &(&qpoch(-(n as i64), k) * &qpoch(n as i64 + a + b + c + d - 1, k))
            * &FieldQ::q_pow(k as i64);
        let den = &(&qpoch(1, k) * &qpoch(a + c, k)) * &qpoch(a + d, k);
        let scalar = &num / &den;
        acc = &acc + &qpoch_linear::<FieldQ>(k, p.a()).scale(&scalar);
    }
    acc
}

/// Leading coefficient of the monic q-Hahn `p_n` at zero:
/// `p_n(0) = q^{binom(n,2)} [n]!^3 / [2n]!` for `(c,d) = (0,0)`.
pub fn hahn00_pn_at_zero(n: usize) -> FieldQ {
    let n = n as i64;
    let num = &FieldQ::q_pow(n * (n - 1) / 2) * &qfact(n as u32).pow(3).unwrap();
    &num / &qfact(2 * n as u32)
}
