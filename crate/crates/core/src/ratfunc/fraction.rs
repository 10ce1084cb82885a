//! Reduced rational functions over an exact field, and the q / z tower.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num::{BigInt, One, Signed, Zero};

use super::field::{ArithError, Field, Rat};
use super::poly::Poly;

/// Rational function `num/den` over `K[t]`, kept fully reduced with a monic
/// denominator. Zero is `0/1`. Equality is structural, which the canonical
/// form makes equivalent to equality in the field of fractions.
#[derive(Clone, PartialEq, Debug)]
pub struct RatFunc<K: Field> {
    num: Poly<K>,
    den: Poly<K>,
}

/// Rational functions of the formal variable `q` over the rationals: the base
/// scalar field of the crate.
pub type FieldQ = RatFunc<Rat>;

/// Rational functions of the formal variable `z` with `FieldQ` coefficients:
/// the scalar field when the parameter `z` stays symbolic.
pub type FieldQZ = RatFunc<FieldQ>;

impl<K: Field> RatFunc<K> {
    /// Builds `num/den`, reducing by the GCD and normalizing the denominator
    /// to be monic. Fails only when `den` is zero.
    pub fn new(num: Poly<K>, den: Poly<K>) -> Result<Self, ArithError> {
        if den.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(Self::reduced(num, den))
    }

    fn reduced(num: Poly<K>, den: Poly<K>) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return RatFunc { num: Poly::zero(), den: Poly::one() };
        }
        let (num, den) = if den.is_one() {
            (num, den)
        } else {
            let g = Poly::gcd(&num, &den);
            if g.is_one() {
                (num, den)
            } else {
                (num.exact_div(&g), den.exact_div(&g))
            }
        };
        // monic denominator makes the representation canonical
        let lead = den.leading().expect("nonzero denominator").clone();
        if lead.is_one() {
            RatFunc { num, den }
        } else {
            let inv = lead.inv();
            RatFunc { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }

    pub fn from_poly(p: Poly<K>) -> Self {
        RatFunc { num: p, den: Poly::one() }
    }

    pub fn constant(c: K) -> Self {
        RatFunc::from_poly(Poly::constant(c))
    }

    /// The variable of this level of the tower.
    pub fn var() -> Self {
        RatFunc::from_poly(Poly::var())
    }

    pub fn num(&self) -> &Poly<K> {
        &self.num
    }

    pub fn den(&self) -> &Poly<K> {
        &self.den
    }

    /// True when the denominator is 1.
    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn try_inv(&self) -> Result<Self, ArithError> {
        if self.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        // already reduced; only the monic normalization moves
        let lead = self.num.leading().expect("nonzero numerator").clone();
        if lead.is_one() {
            Ok(RatFunc { num: self.den.clone(), den: self.num.clone() })
        } else {
            let inv = lead.inv();
            Ok(RatFunc { num: self.den.scale(&inv), den: self.num.scale(&inv) })
        }
    }

    pub fn try_div(&self, rhs: &Self) -> Result<Self, ArithError> {
        Ok(self * &rhs.try_inv()?)
    }

    /// Integer power; negative exponents invert (zero base then errors).
    pub fn pow(&self, e: i64) -> Result<Self, ArithError> {
        let base = if e < 0 { self.try_inv()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// Evaluates at a point of `K`. The stored form is already reduced, so a
    /// vanishing denominator is a genuine pole.
    pub fn eval(&self, v: &K) -> Result<K, ArithError> {
        let d = self.den.eval(v);
        if d.is_zero() {
            return Err(ArithError::Pole);
        }
        Ok(self.num.eval(v) / d)
    }
}

impl<K: Field> From<Poly<K>> for RatFunc<K> {
    fn from(p: Poly<K>) -> Self {
        RatFunc::from_poly(p)
    }
}

impl<K: Field> Zero for RatFunc<K> {
    fn zero() -> Self {
        RatFunc { num: Poly::zero(), den: Poly::one() }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl<K: Field> One for RatFunc<K> {
    fn one() -> Self {
        RatFunc { num: Poly::one(), den: Poly::one() }
    }
    fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }
}

impl<K: Field> Add for &RatFunc<K> {
    type Output = RatFunc<K>;
    fn add(self, rhs: &RatFunc<K>) -> RatFunc<K> {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            let num = &self.num + &rhs.num;
            return RatFunc::reduced(num, self.den.clone());
        }
        // Henrici: with a/b and c/d reduced and g = gcd(b, d), the sum
        // (a(d/g) + c(b/g)) / (b(d/g)) only needs reduction against g.
        let g = Poly::gcd(&self.den, &rhs.den);
        if g.is_one() {
            let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
            let den = &self.den * &rhs.den;
            // coprime denominators: the sum is already reduced
            return RatFunc { num, den };
        }
        let b_red = self.den.exact_div(&g);
        let d_red = rhs.den.exact_div(&g);
        let t = &(&self.num * &d_red) + &(&rhs.num * &b_red);
        if t.is_zero() {
            return RatFunc::zero();
        }
        let h = Poly::gcd(&t, &g);
        if h.is_one() {
            RatFunc { num: t, den: &b_red * &rhs.den }
        } else {
            let num = t.exact_div(&h);
            let den = &b_red * &rhs.den.exact_div(&h);
            RatFunc { num, den }
        }
    }
}

impl<K: Field> Sub for &RatFunc<K> {
    type Output = RatFunc<K>;
    fn sub(self, rhs: &RatFunc<K>) -> RatFunc<K> {
        self + &(-rhs)
    }
}

impl<K: Field> Mul for &RatFunc<K> {
    type Output = RatFunc<K>;
    fn mul(self, rhs: &RatFunc<K>) -> RatFunc<K> {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        // cross-cancel first so the result needs no further reduction
        let g1 = if rhs.den.is_one() { Poly::one() } else { Poly::gcd(&self.num, &rhs.den) };
        let g2 = if self.den.is_one() { Poly::one() } else { Poly::gcd(&rhs.num, &self.den) };
        let a = if g1.is_one() { self.num.clone() } else { self.num.exact_div(&g1) };
        let d = if g1.is_one() { rhs.den.clone() } else { rhs.den.exact_div(&g1) };
        let c = if g2.is_one() { rhs.num.clone() } else { rhs.num.exact_div(&g2) };
        let b = if g2.is_one() { self.den.clone() } else { self.den.exact_div(&g2) };
        let num = &a * &c;
        let den = &b * &d;
        let lead = den.leading().expect("nonzero denominator").clone();
        if lead.is_one() {
            RatFunc { num, den }
        } else {
            let inv = lead.inv();
            RatFunc { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }
}

impl<K: Field> Neg for &RatFunc<K> {
    type Output = RatFunc<K>;
    fn neg(self) -> RatFunc<K> {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl<K: Field> Div for &RatFunc<K> {
    type Output = RatFunc<K>;
    fn div(self, rhs: &RatFunc<K>) -> RatFunc<K> {
        self.try_div(rhs).expect("rational function division by zero")
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl<K: Field> $trait for RatFunc<K> {
            type Output = RatFunc<K>;
            fn $method(self, rhs: RatFunc<K>) -> RatFunc<K> {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl<K: Field> Neg for RatFunc<K> {
    type Output = RatFunc<K>;
    fn neg(self) -> RatFunc<K> {
        -(&self)
    }
}

impl Field for FieldQ {
    fn poly_gcd(a: &Poly<Self>, b: &Poly<Self>) -> Poly<Self> {
        super::gcd::gcd_fieldq_coeff(a, b)
    }
}

// the x-polynomials over the z-field are never reduced against each other,
// so the default Euclid is enough at this level
impl Field for FieldQZ {}

/// Scalar domains that contain the rational functions of `q`.
pub trait QScalar: Field {
    fn from_q(f: FieldQ) -> Self;

    fn from_rat(r: Rat) -> Self {
        Self::from_q(FieldQ::constant(r))
    }

    fn from_int(n: i64) -> Self {
        Self::from_rat(super::field::rat_int(n))
    }

    /// `q^m`, with negative exponents allowed.
    fn q_pow(m: i64) -> Self {
        let q = FieldQ::var();
        Self::from_q(q.pow(m).expect("q is invertible"))
    }
}

impl QScalar for FieldQ {
    fn from_q(f: FieldQ) -> Self {
        f
    }
}

impl QScalar for FieldQZ {
    fn from_q(f: FieldQ) -> Self {
        FieldQZ::constant(f)
    }
}

impl FieldQZ {
    /// The symbolic Legendre parameter `z`.
    pub fn z() -> Self {
        FieldQZ::var()
    }

    /// Substitutes a `FieldQ` value for `z`.
    pub fn eval_z(&self, v: &FieldQ) -> Result<FieldQ, ArithError> {
        self.eval(v)
    }
}

/// Evaluates a rational function of `q` at a rational point. Reduction has
/// already happened at construction time, so removable singularities never
/// reach this check.
pub fn eval_at_q(f: &FieldQ, v: &Rat) -> Result<Rat, ArithError> {
    f.eval(v)
}

// ---------------------------------------------------------------------------
// rendering
// ---------------------------------------------------------------------------

/// Scales `num` and `den` of a `FieldQ` by the same rational so both have
/// integer, jointly primitive coefficients. The monic denominator keeps the
/// sign convention: its leading coefficient stays positive.
pub fn integer_cleared(f: &FieldQ) -> (Vec<BigInt>, Vec<BigInt>) {
    if f.is_zero() {
        return (vec![], vec![BigInt::one()]);
    }
    let mut l = BigInt::one();
    for c in f.num().coeffs().iter().chain(f.den().coeffs()) {
        l = num::integer::lcm(l, c.denom().clone());
    }
    let ints = |p: &Poly<Rat>| -> Vec<BigInt> {
        p.coeffs().iter().map(|c| c.numer() * (&l / c.denom())).collect()
    };
    let num = ints(f.num());
    let den = ints(f.den());
    let mut g = BigInt::zero();
    for c in num.iter().chain(den.iter()) {
        g = num::integer::gcd(g, c.abs());
    }
    if g.is_one() || g.is_zero() {
        (num, den)
    } else {
        (
            num.into_iter().map(|c| c / &g).collect(),
            den.into_iter().map(|c| c / &g).collect(),
        )
    }
}

fn fmt_int_poly(f: &mut fmt::Formatter<'_>, coeffs: &[BigInt], var: &str) -> fmt::Result {
    if coeffs.is_empty() {
        return write!(f, "0");
    }
    let mut first = true;
    for (e, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        if first {
            if c.is_negative() {
                write!(f, "-")?;
            }
            first = false;
        } else if c.is_negative() {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        match (e, mag.is_one()) {
            (0, _) => write!(f, "{mag}")?,
            (1, true) => write!(f, "{var}")?,
            (1, false) => write!(f, "{mag}*{var}")?,
            (_, true) => write!(f, "{var}^{e}")?,
            (_, false) => write!(f, "{mag}*{var}^{e}")?,
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

struct IntPoly<'a>(&'a [BigInt]);

impl fmt::Display for IntPoly<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_int_poly(f, self.0, "q")
    }
}

fn needs_parens(s: &str) -> bool {
    s.contains(' ')
}

impl fmt::Display for FieldQ {
    /// `num / den` in descending powers of `q` with integer-cleared
    /// coefficients; the denominator is omitted when it is 1.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (num, den) = integer_cleared(self);
        let num_s = IntPoly(&num).to_string();
        if den.len() == 1 && den[0].is_one() {
            return write!(f, "{num_s}");
        }
        let den_s = IntPoly(&den).to_string();
        if needs_parens(&num_s) {
            write!(f, "({num_s})")?;
        } else {
            write!(f, "{num_s}")?;
        }
        write!(f, " / ")?;
        if needs_parens(&den_s) {
            write!(f, "({den_s})")
        } else {
            write!(f, "{den_s}")
        }
    }
}

fn fmt_qz_poly(f: &mut fmt::Formatter<'_>, p: &Poly<FieldQ>) -> fmt::Result {
    if p.is_zero() {
        return write!(f, "0");
    }
    let mut first = true;
    for (e, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        if !first {
            write!(f, " + ")?;
        }
        first = false;
        let c_s = c.to_string();
        let wrapped = if needs_parens(&c_s) || c_s.contains('/') {
            format!("({c_s})")
        } else {
            c_s
        };
        match e {
            0 => write!(f, "{wrapped}")?,
            1 => write!(f, "{wrapped}*z")?,
            _ => write!(f, "{wrapped}*z^{e}")?,
        }
    }
    Ok(())
}

impl fmt::Display for FieldQZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            return fmt_qz_poly(f, self.num());
        }
        write!(f, "(")?;
        fmt_qz_poly(f, self.num())?;
        write!(f, ") / (")?;
        fmt_qz_poly(f, self.den())?;
        write!(f, ")")
    }
}

// ---------------------------------------------------------------------------
// JSON: {"num": ["p/q", ...], "den": ["p/q", ...]}, ascending degree
// ---------------------------------------------------------------------------

fn rat_from_str(s: &str) -> Option<Rat> {
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().ok()?;
    let d: BigInt = d.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(Rat::new(n, d))
}

pub fn fieldq_to_json(f: &FieldQ) -> serde_json::Value {
    let poly = |p: &Poly<Rat>| -> serde_json::Value {
        serde_json::Value::Array(
            p.coeffs().iter().map(|c| serde_json::Value::String(c.to_string())).collect(),
        )
    };
    serde_json::json!({ "num": poly(f.num()), "den": poly(f.den()) })
}

pub fn fieldq_from_json(v: &serde_json::Value) -> Option<FieldQ> {
    let poly = |v: &serde_json::Value| -> Option<Poly<Rat>> {
        let arr = v.as_array()?;
        let mut coeffs = Vec::with_capacity(arr.len());
        for c in arr {
            coeffs.push(rat_from_str(c.as_str()?)?);
        }
        Some(Poly::from_coeffs(coeffs))
    };
    let num = poly(v.get("num")?)?;
    let den = poly(v.get("den")?)?;
    RatFunc::new(num, den).ok()
}

pub fn fieldqz_to_json(f: &FieldQZ) -> serde_json::Value {
    let poly = |p: &Poly<FieldQ>| -> serde_json::Value {
        serde_json::Value::Array(p.coeffs().iter().map(fieldq_to_json).collect())
    };
    serde_json::json!({ "num": poly(f.num()), "den": poly(f.den()) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratfunc::field::{rat, rat_int};

    fn qp(coeffs: &[i64]) -> Poly<Rat> {
        Poly::from_coeffs(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    #[test]
    fn construction_reduces_and_normalizes() {
        // (q^2 - 1)/(q - 1) -> q + 1
        let f = FieldQ::new(qp(&[-1, 0, 1]), qp(&[-1, 1])).unwrap();
        assert_eq!(f, FieldQ::from_poly(qp(&[1, 1])));
        assert!(f.is_polynomial());
    }

    #[test]
    fn canonical_form_is_structural() {
        let a = FieldQ::new(qp(&[-1, 0, 1]), qp(&[-1, 1])).unwrap();
        let b = FieldQ::new(qp(&[1, 1]), qp(&[1])).unwrap();
        assert_eq!(a, b);
        // denominator normalized monic: (2q+2)/(2q-2) == (q+1)/(q-1)
        let c = FieldQ::new(qp(&[2, 2]), qp(&[-2, 2])).unwrap();
        let d = FieldQ::new(qp(&[1, 1]), qp(&[-1, 1])).unwrap();
        assert_eq!(c, d);
    }

    #[test]
    fn zero_denominator_is_an_error() {
        assert_eq!(FieldQ::new(qp(&[1]), qp(&[])), Err(ArithError::DivisionByZero));
        let one = FieldQ::one();
        assert_eq!(one.try_div(&FieldQ::zero()), Err(ArithError::DivisionByZero));
    }

    #[test]
    fn beta1_squared() {
        // (-1/(q+1)) * (-1/(q+1)) = 1/(q^2 + 2q + 1)
        let b1 = FieldQ::new(qp(&[-1]), qp(&[1, 1])).unwrap();
        let sq = &b1 * &b1;
        assert_eq!(sq, FieldQ::new(qp(&[1]), qp(&[1, 2, 1])).unwrap());
    }

    #[test]
    fn add_identity() {
        let a = FieldQ::new(qp(&[3, 5]), qp(&[1, 0, 2])).unwrap();
        assert_eq!(&a + &FieldQ::zero(), a);
    }

    #[test]
    fn eval_reduces_before_checking_pole() {
        let f = FieldQ::new(qp(&[-1, 0, 1]), qp(&[-1, 1])).unwrap();
        assert_eq!(eval_at_q(&f, &rat_int(1)).unwrap(), rat_int(2));
        let pole = FieldQ::new(qp(&[1]), qp(&[-1, 1])).unwrap();
        assert_eq!(eval_at_q(&pole, &rat_int(1)), Err(ArithError::Pole));
        assert_eq!(eval_at_q(&pole, &rat_int(2)).unwrap(), rat_int(1));
    }

    #[test]
    fn eval_commutes_with_arithmetic() {
        let a = FieldQ::new(qp(&[1, 2]), qp(&[3, 0, 1])).unwrap();
        let b = FieldQ::new(qp(&[-1, 1, 1]), qp(&[2, 1])).unwrap();
        let v = rat(1, 2);
        let lhs = eval_at_q(&(&a * &b), &v).unwrap();
        let rhs = eval_at_q(&a, &v).unwrap() * eval_at_q(&b, &v).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn tower_field_basics() {
        let z = FieldQZ::z();
        let q = FieldQZ::from_q(FieldQ::var());
        let e = &(&z * &z) - &(&q * &q);
        let d = &z - &q;
        let quot = &e / &d;
        assert_eq!(quot, &z + &q);
        assert_eq!(e.eval_z(&FieldQ::var()).unwrap(), FieldQ::zero());
    }

    #[test]
    fn display_integer_cleared() {
        let half_q = FieldQ::new(
            Poly::from_coeffs(vec![rat(0, 1), rat(1, 2)]),
            qp(&[1, 1]),
        )
        .unwrap();
        assert_eq!(half_q.to_string(), "q / (2*q + 2)");
        let b2 = FieldQ::new(qp(&[0, 1]), qp(&[1, 2, 2, 1])).unwrap();
        assert_eq!(b2.to_string(), "q / (q^3 + 2*q^2 + 2*q + 1)");
        assert_eq!(FieldQ::zero().to_string(), "0");
        assert_eq!(FieldQ::one().to_string(), "1");
    }

    #[test]
    fn json_round_trip() {
        let f = FieldQ::new(qp(&[-1, 0, 3]), qp(&[2, 1])).unwrap();
        let v = fieldq_to_json(&f);
        assert_eq!(fieldq_from_json(&v).unwrap(), f);
        assert_eq!(serde_json::to_string(&v).unwrap(), r#"{"num":["-1","0","3"],"den":["2","1"]}"#);
    }
}
