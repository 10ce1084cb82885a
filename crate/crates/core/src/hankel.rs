//! Exact Hankel determinants of moment sequences and their closed-form
//! factorizations: shifts 0 through 3, the z-parameterized case, and the
//! general four-parameter determinant.

use num::One;

use crate::bernoulli::{general_functional, normalization_constant, GeneralParams};
use crate::orthopoly::Recurrence;
use crate::qcombinat::{qfact, qint};
use crate::ratfunc::{Field, FieldQ, FieldQZ, Poly, QScalar, Rat, RatFunc};

fn binom2(n: i64) -> i64 {
    n * (n - 1) / 2
}

fn binom3(n: i64) -> i64 {
    n * (n - 1) * (n - 2) / 6
}

/// Entry domains with a structure-aware exact determinant. The default is
/// fraction-free (Bareiss) elimination directly over the field; the two
/// rational-function fields clear denominators row by row first so the
/// elimination runs entirely inside a polynomial ring, where every Bareiss
/// division is an exact synthetic division.
pub trait DetScalar: Field {
    fn det_matrix(m: Vec<Vec<Self>>) -> Self {
        bareiss_over_field(m)
    }
}

impl DetScalar for Rat {}

impl DetScalar for FieldQ {
    fn det_matrix(m: Vec<Vec<Self>>) -> Self {
        let (rows, factor) = clear_rows(m);
        let d = bareiss(rows);
        FieldQ::new(d, factor).expect("row multipliers are nonzero")
    }
}

impl DetScalar for FieldQZ {
    fn det_matrix(m: Vec<Vec<Self>>) -> Self {
        det_cleared_z(m)
    }
}

/// Exact determinant; the empty matrix has determinant 1.
pub fn det<K: DetScalar>(m: Vec<Vec<K>>) -> K {
    if m.is_empty() {
        return K::one();
    }
    K::det_matrix(m)
}

fn bareiss_over_field<K: Field>(mut m: Vec<Vec<K>>) -> K {
    let n = m.len();
    let mut negated = false;
    let mut prev = K::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    negated = !negated;
                }
                None => return K::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = m[k][k].clone() * m[i][j].clone() - m[i][k].clone() * m[k][j].clone();
                m[i][j] = t / prev.clone();
            }
            m[i][k] = K::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negated {
        -d
    } else {
        d
    }
}

/// Ring entries for the fraction-free elimination.
trait BareissEntry: Clone {
    fn b_is_zero(&self) -> bool;
    fn b_one() -> Self;
    fn b_zero() -> Self;
    fn b_mul(&self, o: &Self) -> Self;
    fn b_sub(&self, o: &Self) -> Self;
    fn b_neg(&self) -> Self;
    fn b_exact_div(&self, d: &Self) -> Self;
}

impl<K: Field> BareissEntry for Poly<K> {
    fn b_is_zero(&self) -> bool {
        self.is_zero()
    }
    fn b_one() -> Self {
        Poly::one()
    }
    fn b_zero() -> Self {
        Poly::zero()
    }
    fn b_mul(&self, o: &Self) -> Self {
        self * o
    }
    fn b_sub(&self, o: &Self) -> Self {
        self - o
    }
    fn b_neg(&self) -> Self {
        -self
    }
    fn b_exact_div(&self, d: &Self) -> Self {
        self.exact_div(d)
    }
}

/// Bivariate polynomials in `(Q[q])[z]`, ascending in `z`; exact division is
/// synthetic division whose leading-coefficient steps are exact in `Q[q]`.
#[derive(Clone, PartialEq, Debug)]
struct BiPoly(Vec<Poly<Rat>>);

impl BiPoly {
    fn trim(mut v: Vec<Poly<Rat>>) -> Self {
        while v.last().map_or(false, |c| c.is_zero()) {
            v.pop();
        }
        BiPoly(v)
    }
}

impl BareissEntry for BiPoly {
    fn b_is_zero(&self) -> bool {
        self.0.is_empty()
    }
    fn b_one() -> Self {
        BiPoly(vec![Poly::one()])
    }
    fn b_zero() -> Self {
        BiPoly(Vec::new())
    }
    fn b_mul(&self, o: &Self) -> Self {
        if self.b_is_zero() || o.b_is_zero() {
            return Self::b_zero();
        }
        let mut out = vec![Poly::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.0.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        BiPoly::trim(out)
    }
    fn b_sub(&self, o: &Self) -> Self {
        let n = self.0.len().max(o.0.len());
        let zero = Poly::zero();
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.0.get(i).unwrap_or(&zero);
            let b = o.0.get(i).unwrap_or(&zero);
            out.push(a - b);
        }
        BiPoly::trim(out)
    }
    fn b_neg(&self) -> Self {
        BiPoly(self.0.iter().map(|c| -c).collect())
    }
    fn b_exact_div(&self, d: &Self) -> Self {
        assert!(!d.b_is_zero(), "bivariate division by zero");
        if self.b_is_zero() {
            return Self::b_zero();
        }
        let dd = d.0.len() - 1;
        let lead = d.0.last().expect("nonzero divisor");
        let mut rem = self.0.clone();
        assert!(rem.len() > dd, "inexact bivariate division");
        let qlen = rem.len() - dd;
        let mut quot = vec![Poly::zero(); qlen];
        for qi in (0..qlen).rev() {
            if rem[qi + dd].is_zero() {
                continue;
            }
            let c = rem[qi + dd].exact_div(lead);
            for (di, dc) in d.0.iter().enumerate() {
                rem[qi + di] = &rem[qi + di] - &(&c * dc);
            }
            quot[qi] = c;
        }
        debug_assert!(rem.iter().all(|c| c.is_zero()), "inexact bivariate division");
        BiPoly::trim(quot)
    }
}

fn bareiss<E: BareissEntry>(mut m: Vec<Vec<E>>) -> E {
    let n = m.len();
    let mut negated = false;
    let mut prev = E::b_one();
    for k in 0..n - 1 {
        if m[k][k].b_is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].b_is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    negated = !negated;
                }
                None => return E::b_zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = m[k][k].b_mul(&m[i][j]).b_sub(&m[i][k].b_mul(&m[k][j]));
                m[i][j] = t.b_exact_div(&prev);
            }
            m[i][k] = E::b_zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negated {
        d.b_neg()
    } else {
        d
    }
}

/// Multiplies each row through by the least common denominator of its
/// entries, returning the cleared rows and the product of the multipliers.
fn clear_rows<K: Field>(m: Vec<Vec<RatFunc<K>>>) -> (Vec<Vec<Poly<K>>>, Poly<K>) {
    let mut factor = Poly::one();
    let mut rows = Vec::with_capacity(m.len());
    for row in m {
        let mut lcd = Poly::one();
        for e in &row {
            let g = Poly::gcd(&lcd, e.den());
            lcd = &lcd * &e.den().exact_div(&g);
        }
        let cleared = row.iter().map(|e| e.num() * &lcd.exact_div(e.den())).collect();
        factor = &factor * &lcd;
        rows.push(cleared);
    }
    (rows, factor)
}

/// The z-field determinant clears two levels (z-denominators, then the
/// q-denominators of every coefficient) so the elimination works on
/// bivariate polynomials with no fraction arithmetic at all.
fn det_cleared_z(m: Vec<Vec<FieldQZ>>) -> FieldQZ {
    let (rows, z_factor) = clear_rows(m);
    let mut q_factor = Poly::<Rat>::one();
    let rows: Vec<Vec<BiPoly>> = rows
        .into_iter()
        .map(|row| {
            let mut lcd = Poly::<Rat>::one();
            for e in &row {
                for c in e.coeffs() {
                    let g = Poly::gcd(&lcd, c.den());
                    lcd = &lcd * &c.den().exact_div(&g);
                }
            }
            let cleared = row
                .iter()
                .map(|e| {
                    BiPoly::trim(
                        e.coeffs()
                            .iter()
                            .map(|c| c.num() * &lcd.exact_div(c.den()))
                            .collect(),
                    )
                })
                .collect();
            q_factor = &q_factor * &lcd;
            cleared
        })
        .collect();
    let d = bareiss(rows);
    // undo both clearings: divide by the q-multiplier and the z-multiplier
    let scalar = Field::inv(&FieldQ::from_poly(q_factor));
    let num = Poly::from_coeffs(d.0.into_iter().map(|c| &FieldQ::from_poly(c) * &scalar).collect());
    &FieldQZ::from_poly(num) / &FieldQZ::from_poly(z_factor)
}

/// Determinant of the `n x n` matrix with entry `(i, j) = moments[i+j+shift]`.
pub fn hankel_det<K: DetScalar>(moments: &[K], n: usize, shift: usize) -> K {
    if n == 0 {
        return K::one();
    }
    assert!(
        moments.len() >= 2 * n - 1 + shift,
        "need at least {} moments, got {}",
        2 * n - 1 + shift,
        moments.len()
    );
    let m = (0..n)
        .map(|i| (0..n).map(|j| moments[i + j + shift].clone()).collect())
        .collect();
    det(m)
}

/// `prod_{k=1}^{n-1} b_k^{n-k}`, the unshifted Hankel factorization.
pub fn product_formula<K: Field>(rec: &Recurrence<K>, n: usize) -> K {
    let mut acc = K::one();
    for k in 1..n {
        let bk = rec.b(k);
        for _ in 0..(n - k) {
            acc = acc * bk.clone();
        }
    }
    acc
}

/// The sequence `q_0 = 1, q_1 = -a_0, q_{n+1} = -a_n q_n - b_n q_{n-1}`.
pub fn qn_sequence<K: Field>(rec: &Recurrence<K>, count: usize) -> Vec<K> {
    let mut out: Vec<K> = Vec::with_capacity(count);
    for n in 0..count {
        let value = match n {
            0 => K::one(),
            1 => -rec.a(0),
            _ => {
                let t = -(rec.a(n - 1) * out[n - 1].clone());
                t - rec.b(n - 1) * out[n - 2].clone()
            }
        };
        out.push(value);
    }
    out
}

/// Shifted Hankel factorization `d_n^{(1)} = q_n prod_{k=1}^{n-1} b_k^{n-k}`.
pub fn shifted_det_formula<K: Field>(rec: &Recurrence<K>, n: usize) -> K {
    let qn = qn_sequence(rec, n + 1).pop().expect("nonempty");
    qn * product_formula(rec, n)
}

/// Closed forms for the Hankel determinants of the `beta` sequence with
/// shifts 0 through 3. The empty determinant (`n = 0`) is 1 for every shift.
pub fn closed_form_shift(shift: usize, n: usize) -> FieldQ {
    assert!(shift <= 3, "closed forms exist only for shifts 0..=3");
    if n == 0 {
        return FieldQ::one();
    }
    let n = n as i64;
    let sign = |e: i64| if e % 2 == 0 { FieldQ::one() } else { -FieldQ::one() };
    match shift {
        0 => {
            let mut acc = &sign(binom2(n)) * &FieldQ::q_pow(binom3(n));
            for i in 1..n as u32 {
                let num = qfact(i).pow(6).unwrap();
                let den = &qfact(2 * i) * &qfact(2 * i + 1);
                acc = &acc * &(&num / &den);
            }
            acc
        }
        1 => {
            let mut acc = &(&sign(binom2(n + 1)) / &qint(2)) * &FieldQ::q_pow(binom3(n + 1));
            for i in 1..n as u32 {
                let num = &qfact(i).pow(3).unwrap() * &qfact(i + 1).pow(3).unwrap();
                let den = &qfact(2 * i + 1) * &qfact(2 * i + 2);
                acc = &acc * &(&num / &den);
            }
            acc
        }
        2 => {
            let front = &sign(binom2(n)) / &(&qint(2) * &qint(3));
            let mut acc = &front * &FieldQ::q_pow(binom3(n + 2));
            for i in 1..n as u32 {
                let num = &(&qfact(i) * &qfact(i + 1).pow(4).unwrap()) * &qfact(i + 2);
                let den = &qfact(2 * i + 2) * &qfact(2 * i + 3);
                acc = &acc * &(&num / &den);
            }
            acc
        }
        _ => {
            let front = &sign(binom2(n + 1)) / &(&qint(3).pow(2).unwrap() * &qint(4));
            let cyclo = &FieldQ::q_pow(binom2(n + 2)) + &sign(n);
            let mut acc = &(&front * &FieldQ::q_pow(binom3(n + 2))) * &cyclo;
            for i in 1..n as u32 {
                let num = &qfact(i + 1).pow(3).unwrap() * &qfact(i + 2).pow(3).unwrap();
                let den = &qfact(2 * i + 3) * &qfact(2 * i + 4);
                acc = &acc * &(&num / &den);
            }
            acc
        }
    }
}

/// Scalar `Asc(z, a) = prod_{i=1}^{a} ([i]_q + q^i z)` in the z-field.
pub fn asc_z(a: u32) -> FieldQZ {
    let z = FieldQZ::z();
    let mut acc = FieldQZ::one();
    for i in 1..=a as i64 {
        let factor = &FieldQZ::from_q(qint(i)) + &(&FieldQZ::q_pow(i) * &z);
        acc = &acc * &factor;
    }
    acc
}

/// Scalar `Desc(z, a) = prod_{i=1}^{a} ([i]_q - z)` in the z-field.
pub fn desc_z(a: u32) -> FieldQZ {
    let z = FieldQZ::z();
    let mut acc = FieldQZ::one();
    for i in 1..=a as i64 {
        let factor = &FieldQZ::from_q(qint(i)) - &z;
        acc = &acc * &factor;
    }
    acc
}

/// Closed form for the Hankel determinant of the Legendre integral-moments:
/// `(-1)^{binom(n,2)} q^{binom(n,3)}
///  prod_{i=1}^{n-1} [i]!^4 Asc(z,i) Desc(z,i) / ([2i]! [2i+1]!)`.
pub fn closed_form_z(n: usize) -> FieldQZ {
    if n <= 1 {
        return FieldQZ::one();
    }
    let n = n as i64;
    // accumulate the scalar prefactor and the z-polynomial separately; one
    // final scale avoids carrying large denominators through the products
    let sign = if binom2(n) % 2 == 0 { FieldQ::one() } else { -FieldQ::one() };
    let mut scalar = &sign * &FieldQ::q_pow(binom3(n));
    let mut zpoly = FieldQZ::one();
    for i in 1..n as u32 {
        scalar = &scalar * &(&qfact(i).pow(4).unwrap() / &(&qfact(2 * i) * &qfact(2 * i + 1)));
        zpoly = &zpoly * &(&asc_z(i) * &desc_z(i));
    }
    &zpoly * &FieldQZ::from_q(scalar)
}

/// The matrix `M(n)` of unnormalized general moments,
/// entry `(i, j) = Psi(x^{i+j+2} Asc(x,a-1) Asc(x,b-1) Desc(x,c-1) Desc(x,d-1))`.
pub fn general_moment_matrix(p: &GeneralParams, n: usize) -> Vec<Vec<FieldQ>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| general_functional(p, &Poly::monomial(FieldQ::one(), i + j)))
                .collect()
        })
        .collect()
}

/// Closed form for `det M(n)`:
/// `(-q^{c+d})^{binom(n,2)} q^{binom(n,3)} C^n prod_{i=1}^{n-1} r_i^{n-i}`
/// with the q-integer ratio `r_i` of the general `b` coefficients.
pub fn general_det_closed_form(p: &GeneralParams, n: usize) -> FieldQ {
    if n == 0 {
        return FieldQ::one();
    }
    let (a, b, c, d) = (p.a() as i64, p.b() as i64, p.c() as i64, p.d() as i64);
    let s = a + b + c + d;
    let n = n as i64;
    let sign = if binom2(n) % 2 == 0 { FieldQ::one() } else { -FieldQ::one() };
    let mut acc = &(&sign * &FieldQ::q_pow((c + d) * binom2(n))) * &FieldQ::q_pow(binom3(n));
    acc = &acc * &normalization_constant(p).pow(n).unwrap();
    for i in 1..n {
        let num = &(&(&qint(i) * &qint(a + c + i - 1)) * &qint(b + c + i - 1))
            * &(&(&qint(a + d + i - 1) * &qint(b + d + i - 1)) * &qint(s + i - 2));
        let den = &(&qint(s + 2 * i - 3) * &qint(s + 2 * i - 2).pow(2).unwrap())
            * &qint(s + 2 * i - 1);
        let ratio = &num / &den;
        acc = &acc * &ratio.pow(n - i).unwrap();
    }
    acc
}
