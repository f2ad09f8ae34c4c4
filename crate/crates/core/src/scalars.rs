//! Exact arithmetic in cyclotomic fields ℚ(ζ_N).
//!
//! A [`CycScalar`] stores a polynomial in ζ_N of degree below deg Φ_N with
//! rational coefficients, reduced eagerly after every product so that
//! equality is coefficient equality. Scalars of different conductors are
//! pushed into the field of the least common conductor before combining.
//! Rationals live in conductor 1, which keeps integer matrices cheap.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

type Poly = Vec<BigRational>;

fn trim(p: &mut Poly) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Poly {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        let x = a.get(k).cloned().unwrap_or_else(BigRational::zero);
        let y = b.get(k).cloned().unwrap_or_else(BigRational::zero);
        out.push(x - y);
    }
    trim(&mut out);
    out
}

/// Quotient and remainder of `a` by a nonzero trimmed `b`.
fn poly_divrem(a: &[BigRational], b: &[BigRational]) -> (Poly, Poly) {
    let mut r: Poly = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lead = &b[db];
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let mut q = vec![BigRational::zero(); r.len() - db];
    while r.len() >= b.len() {
        let k = r.len() - 1 - db;
        let c = &r[r.len() - 1] / lead;
        for (j, bj) in b.iter().enumerate() {
            r[k + j] -= &c * bj;
        }
        q[k] = c;
        trim(&mut r);
    }
    (q, r)
}

/// Inverse of `a` modulo the irreducible `m`, by the extended Euclidean algorithm.
fn poly_inv_mod(a: &[BigRational], m: &[BigRational]) -> Option<Poly> {
    let (mut r0, mut r1) = (m.to_vec(), a.to_vec());
    trim(&mut r1);
    let (mut t0, mut t1): (Poly, Poly) = (Vec::new(), vec![BigRational::one()]);
    while !r1.is_empty() {
        let (q, r) = poly_divrem(&r0, &r1);
        let t2 = poly_sub(&t0, &poly_mul(&q, &t1));
        r0 = std::mem::replace(&mut r1, r);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if r0.len() != 1 {
        return None;
    }
    let c = r0[0].clone();
    Some(t0.into_iter().map(|x| x / &c).collect())
}

fn phi_cache() -> &'static Mutex<HashMap<u32, Arc<Poly>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Poly>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn phi(n: u32) -> Arc<Poly> {
    assert!(n >= 1, "conductor must be positive");
    if let Some(p) = phi_cache().lock().unwrap().get(&n) {
        return p.clone();
    }
    let mut num = vec![BigRational::zero(); n as usize + 1];
    num[0] = -BigRational::one();
    num[n as usize] = BigRational::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            let (q, r) = poly_divrem(&num, &phi(d));
            debug_assert!(r.is_empty());
            num = q;
        }
    }
    let p = Arc::new(num);
    phi_cache().lock().unwrap().insert(n, p.clone());
    p
}

/// The `n`-th cyclotomic polynomial, coefficients from the constant term up.
pub fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    phi(n).iter().map(|c| c.to_integer()).collect()
}

/// Degree of Φ_n, i.e. Euler's totient of `n`.
pub fn cyclotomic_degree(n: u32) -> usize {
    phi(n).len() - 1
}

/// Conductor that holds ı, √2 and e^{πı/(ℓ+1)} simultaneously.
pub fn field_conductor(rank: usize) -> u32 {
    8u32.lcm(&(2 * (rank as u32 + 1)))
}

fn reduce(mut p: Poly, n: u32) -> Poly {
    let m = phi(n);
    let d = m.len() - 1;
    while p.len() > d {
        let top = p.pop().unwrap();
        if top.is_zero() {
            continue;
        }
        let k = p.len() - d;
        for j in 0..d {
            if !m[j].is_zero() {
                p[k + j] -= &top * &m[j];
            }
        }
    }
    p.resize(d, BigRational::zero());
    p
}

/// Format a rational as `p/q` with `q ≥ 1`.
pub fn rational_to_string(q: &BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Element of ℚ(ζ_N) in the power basis 1, ζ, …, ζ^{d−1}, d = deg Φ_N.
#[derive(Clone, Debug)]
pub struct CycScalar {
    conductor: u32,
    coeffs: Vec<BigRational>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScalarOp {
    Add,
    Sub,
    Mul,
    Div,
    Conj,
}

/// Dispatch a field operation; `b` is ignored for `Conj`.
pub fn scalar_arith(op: ScalarOp, a: &CycScalar, b: &CycScalar) -> Result<CycScalar> {
    Ok(match op {
        ScalarOp::Add => a + b,
        ScalarOp::Sub => a - b,
        ScalarOp::Mul => a * b,
        ScalarOp::Div => a.checked_div(b)?,
        ScalarOp::Conj => a.conj(),
    })
}

impl CycScalar {
    pub fn zero() -> Self {
        Self::from_rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Self::from_rational(BigRational::one())
    }

    pub fn from_rational(q: BigRational) -> Self {
        CycScalar {
            conductor: 1,
            coeffs: vec![q],
        }
    }

    pub fn from_int(k: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(k)))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_rational(BigRational::new(num.into(), den.into()))
    }

    /// Build from raw power-basis coefficients, reducing modulo Φ_N.
    pub fn from_coeffs(conductor: u32, coeffs: Vec<BigRational>) -> Self {
        CycScalar {
            conductor,
            coeffs: reduce(coeffs, conductor),
        }
    }

    /// ζ_n^k for any integer `k`.
    pub fn zeta_pow(n: u32, k: i64) -> Self {
        let e = k.rem_euclid(n as i64) as usize;
        let mut p = vec![BigRational::zero(); e + 1];
        p[e] = BigRational::one();
        Self::from_coeffs(n, p)
    }

    /// The primitive root ζ_n = e^{2πı/n}.
    pub fn zeta(n: u32) -> Self {
        Self::zeta_pow(n, 1)
    }

    /// ı = ζ_4.
    pub fn imag_unit() -> Self {
        Self::zeta(4)
    }

    /// √2 = ζ_8 + ζ_8^{-1}.
    pub fn sqrt2() -> Self {
        &Self::zeta(8) + &Self::zeta_pow(8, -1)
    }

    /// 1/√2 = √2/2.
    pub fn inv_sqrt2() -> Self {
        &Self::sqrt2() * &Self::from_ratio(1, 2)
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.as_rational().is_some_and(|q| q.is_one())
    }

    /// The rational value if the element lies in ℚ.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Embed into ℚ(ζ_target); `target` must be a multiple of the conductor.
    pub fn lift_to(&self, target: u32) -> Self {
        assert!(
            target.is_multiple_of(self.conductor),
            "conductor {} does not divide {}",
            self.conductor,
            target
        );
        if target == self.conductor {
            return self.clone();
        }
        let step = (target / self.conductor) as usize;
        if let Some(q) = self.as_rational() {
            let mut p = vec![BigRational::zero(); cyclotomic_degree(target)];
            p[0] = q;
            return CycScalar {
                conductor: target,
                coeffs: p,
            };
        }
        let mut p = vec![BigRational::zero(); (self.coeffs.len() - 1) * step + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            p[k * step] = c.clone();
        }
        Self::from_coeffs(target, p)
    }

    fn aligned(&self, other: &Self) -> (std::borrow::Cow<'_, Self>, u32, Option<Self>) {
        if self.conductor == other.conductor {
            return (std::borrow::Cow::Borrowed(self), self.conductor, None);
        }
        let n = self.conductor.lcm(&other.conductor);
        let b = if other.conductor == n {
            None
        } else {
            Some(other.lift_to(n))
        };
        let a = if self.conductor == n {
            std::borrow::Cow::Borrowed(self)
        } else {
            std::borrow::Cow::Owned(self.lift_to(n))
        };
        (a, n, b)
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&BigRational, &BigRational) -> BigRational) -> Self {
        let (a, n, lifted) = self.aligned(other);
        let b = lifted.as_ref().unwrap_or(other);
        CycScalar {
            conductor: n,
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| f(x, y)).collect(),
        }
    }

    fn scale(&self, q: &BigRational) -> Self {
        CycScalar {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    fn zero_in(n: u32) -> Self {
        CycScalar {
            conductor: n,
            coeffs: vec![BigRational::zero(); cyclotomic_degree(n)],
        }
    }

    fn mul_ref(&self, other: &Self) -> Self {
        let n = self.conductor.lcm(&other.conductor);
        if self.is_zero() || other.is_zero() {
            return Self::zero_in(n);
        }
        if let Some(q) = self.as_rational() {
            return other.lift_to(n).scale(&q);
        }
        if let Some(q) = other.as_rational() {
            return self.lift_to(n).scale(&q);
        }
        let (a, n, lifted) = self.aligned(other);
        let b = lifted.as_ref().unwrap_or(other);
        Self::from_coeffs(n, poly_mul(&a.coeffs, &b.coeffs))
    }

    /// Multiplicative inverse.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(q) = self.as_rational() {
            return Ok(CycScalar {
                conductor: self.conductor,
                coeffs: reduce(vec![q.recip()], self.conductor),
            });
        }
        let m = phi(self.conductor);
        let u = poly_inv_mod(&self.coeffs, &m).ok_or(Error::DivisionByZero)?;
        Ok(Self::from_coeffs(self.conductor, u))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    /// The automorphism ζ ↦ ζ^{-1}, complex conjugation under the standard embedding.
    pub fn conj(&self) -> Self {
        let n = self.conductor as usize;
        if self.as_rational().is_some() {
            return self.clone();
        }
        let mut p = vec![BigRational::zero(); n];
        for (k, c) in self.coeffs.iter().enumerate() {
            p[(n - k) % n] += c;
        }
        Self::from_coeffs(self.conductor, p)
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = CycScalar::one();
        let mut sq = base;
        let mut k = e.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &sq;
            }
            sq = &sq * &sq;
            k >>= 1;
        }
        Ok(acc)
    }

    /// Numeric value under ζ_N ↦ e^{2πı/N}, rounded to `precision` decimal digits.
    pub fn to_complex(&self, precision: u32) -> (f64, f64) {
        let n = self.conductor as f64;
        let (mut re, mut im) = (0.0, 0.0);
        for (k, c) in self.coeffs.iter().enumerate() {
            let v = c.to_f64().unwrap_or(f64::NAN);
            let t = 2.0 * std::f64::consts::PI * k as f64 / n;
            re += v * t.cos();
            im += v * t.sin();
        }
        let scale = 10f64.powi(precision.min(15) as i32);
        let round = |x: f64| {
            let r = (x * scale).round() / scale;
            if r == 0.0 {
                0.0
            } else {
                r
            }
        };
        (round(re), round(im))
    }

    /// Canonical byte encoding at a fixed conductor, used as a hash key.
    pub fn encode_into(&self, out: &mut Vec<u8>) {
        for c in &self.coeffs {
            let (sn, num) = c.numer().to_bytes_le();
            let (_, den) = c.denom().to_bytes_le();
            out.push(match sn {
                num_bigint::Sign::Minus => 2,
                num_bigint::Sign::NoSign => 0,
                num_bigint::Sign::Plus => 1,
            });
            out.extend_from_slice(&(num.len() as u32).to_le_bytes());
            out.extend_from_slice(&num);
            out.extend_from_slice(&(den.len() as u32).to_le_bytes());
            out.extend_from_slice(&den);
        }
    }
}

impl PartialEq for CycScalar {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        (self - other).is_zero()
    }
}

impl Eq for CycScalar {}

impl Default for CycScalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for CycScalar {
    fn from(k: i64) -> Self {
        Self::from_int(k)
    }
}

impl From<BigRational> for CycScalar {
    fn from(q: BigRational) -> Self {
        Self::from_rational(q)
    }
}

impl Add for &CycScalar {
    type Output = CycScalar;
    fn add(self, rhs: &CycScalar) -> CycScalar {
        self.zip_with(rhs, |x, y| x + y)
    }
}

impl Sub for &CycScalar {
    type Output = CycScalar;
    fn sub(self, rhs: &CycScalar) -> CycScalar {
        self.zip_with(rhs, |x, y| x - y)
    }
}

impl Mul for &CycScalar {
    type Output = CycScalar;
    fn mul(self, rhs: &CycScalar) -> CycScalar {
        self.mul_ref(rhs)
    }
}

impl Neg for &CycScalar {
    type Output = CycScalar;
    fn neg(self) -> CycScalar {
        CycScalar {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for CycScalar {
            type Output = CycScalar;
            fn $m(self, rhs: CycScalar) -> CycScalar {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&CycScalar> for CycScalar {
            type Output = CycScalar;
            fn $m(self, rhs: &CycScalar) -> CycScalar {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for CycScalar {
    type Output = CycScalar;
    fn neg(self) -> CycScalar {
        -&self
    }
}

impl fmt::Display for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = self.as_rational() {
            return write!(f, "{q}");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            let z = format!("ζ{}", self.conductor);
            match (k, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => write!(f, "{z}")?,
                (1, false) => write!(f, "{a}*{z}")?,
                (_, true) => write!(f, "{z}^{k}")?,
                (_, false) => write!(f, "{a}*{z}^{k}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for CycScalar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("CycScalar", 2)?;
        st.serialize_field("conductor", &self.conductor)?;
        let coeffs: Vec<String> = self.coeffs.iter().map(rational_to_string).collect();
        st.serialize_field("coeffs", &coeffs)?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&k| BigInt::from(k)).collect()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), ints(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(2), ints(&[1, 1]));
        assert_eq!(cyclotomic_polynomial(4), ints(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(8), ints(&[1, 0, 0, 0, 1]));
        assert_eq!(cyclotomic_polynomial(6), ints(&[1, -1, 1]));
        assert_eq!(cyclotomic_polynomial(12), ints(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn degrees_are_totients() {
        let totient = |n: u32| (1..=n).filter(|k| k.gcd(&n) == 1).count();
        for n in 1..=40 {
            assert_eq!(cyclotomic_degree(n), totient(n), "n = {n}");
        }
    }

    #[test]
    fn imaginary_unit_squares_to_minus_one() {
        let i = CycScalar::imag_unit();
        assert_eq!(&i * &i, CycScalar::from_int(-1));
    }

    #[test]
    fn sqrt2_squares_to_two() {
        let r = CycScalar::sqrt2();
        assert_eq!(&r * &r, CycScalar::from_int(2));
        assert_eq!(&r * &CycScalar::inv_sqrt2(), CycScalar::one());
    }

    #[test]
    fn one_over_i() {
        let i = CycScalar::imag_unit();
        assert_eq!(CycScalar::one().checked_div(&i).unwrap(), -&i);
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(
            CycScalar::one().checked_div(&CycScalar::zero()),
            Err(Error::DivisionByZero)
        );
        assert_eq!(
            scalar_arith(ScalarOp::Div, &CycScalar::zeta(8), &CycScalar::zero()),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn half_turn_roots() {
        for m in 2..=6u32 {
            let z = CycScalar::zeta(2 * m);
            assert_eq!(z.pow(m as i64).unwrap(), CycScalar::from_int(-1), "m = {m}");
        }
    }

    #[test]
    fn mixed_conductors_meet_in_the_lcm() {
        let s = &CycScalar::imag_unit() + &CycScalar::zeta(3);
        assert_eq!(s.conductor(), 12);
        assert_eq!(CycScalar::zeta(4), CycScalar::zeta_pow(12, 3));
        assert_eq!(CycScalar::zeta(8).lift_to(24), CycScalar::zeta_pow(24, 3));
    }

    #[test]
    fn conj_inverts_roots_of_unity() {
        let z = CycScalar::zeta(12);
        assert_eq!(&z * &z.conj(), CycScalar::one());
        assert_eq!(CycScalar::imag_unit().conj(), -&CycScalar::imag_unit());
        assert_eq!(CycScalar::sqrt2().conj(), CycScalar::sqrt2());
    }

    #[test]
    fn complex_embedding() {
        assert_eq!(CycScalar::imag_unit().to_complex(10), (0.0, 1.0));
        assert_eq!(CycScalar::zero().to_complex(10), (0.0, 0.0));
        let (re, im) = CycScalar::sqrt2().to_complex(8);
        assert_eq!((re, im), ((std::f64::consts::SQRT_2 * 1e8).round() / 1e8, 0.0));
    }

    #[test]
    fn inverse_of_generic_element() {
        let a = &(&CycScalar::zeta(24) + &CycScalar::from_int(3)) * &CycScalar::zeta_pow(24, 5);
        let b = a.inv().unwrap();
        assert_eq!(&a * &b, CycScalar::one());
    }

    #[test]
    fn json_shape() {
        let v = serde_json::to_value(CycScalar::inv_sqrt2()).unwrap();
        assert_eq!(v["conductor"], 8);
        assert_eq!(v["coeffs"], serde_json::json!(["0/1", "1/2", "0/1", "-1/2"]));
    }
}
