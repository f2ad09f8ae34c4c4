//! Rational quaternions, quaternionic matrices, the embedding of H into 2×2
//! complex matrices, the covering SU(2) → SO(3), and the finite groups used
//! to exhibit the non-split extension of W(C_m) by signs.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactmat::{closure_from, ClosureResult, ExactMatrix, GroupElement};
use crate::report::SuiteReport;
use crate::scalars::{rational_to_string, CycScalar};

/// Largest matrix size accepted by the quaternionic closure and normalizer checks.
pub const QUAT_MAX_DIM: usize = 3;

/// q0 + q1 ı + q2 ȷ + q3 k with rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Quaternion {
    pub q: [BigRational; 4],
}

fn rat(k: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(k))
}

impl Quaternion {
    pub fn new(q0: BigRational, q1: BigRational, q2: BigRational, q3: BigRational) -> Self {
        Quaternion { q: [q0, q1, q2, q3] }
    }

    pub fn from_ints(q0: i64, q1: i64, q2: i64, q3: i64) -> Self {
        Self::new(rat(q0), rat(q1), rat(q2), rat(q3))
    }

    pub fn real(r: BigRational) -> Self {
        Self::new(r, BigRational::zero(), BigRational::zero(), BigRational::zero())
    }

    pub fn zero() -> Self {
        Self::from_ints(0, 0, 0, 0)
    }

    pub fn one() -> Self {
        Self::from_ints(1, 0, 0, 0)
    }

    pub fn i() -> Self {
        Self::from_ints(0, 1, 0, 0)
    }

    pub fn j() -> Self {
        Self::from_ints(0, 0, 1, 0)
    }

    pub fn k() -> Self {
        Self::from_ints(0, 0, 0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.q.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// True when the ȷ and k parts vanish, so the element lies in C = R + Rı.
    pub fn is_complex(&self) -> bool {
        self.q[2].is_zero() && self.q[3].is_zero()
    }

    pub fn conj(&self) -> Self {
        let [a, b, c, d] = &self.q;
        Self::new(a.clone(), -b, -c, -d)
    }

    /// Nm(q) = q q̄ = q0² + q1² + q2² + q3².
    pub fn norm(&self) -> BigRational {
        self.q.iter().map(|x| x * x).fold(BigRational::zero(), |a, b| a + b)
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm();
        let c = self.conj();
        Ok(Quaternion {
            q: c.q.map(|x| x / &n),
        })
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        Quaternion {
            q: self.q.clone().map(|x| x * r),
        }
    }
}

impl Mul for &Quaternion {
    type Output = Quaternion;

    fn mul(self, o: &Quaternion) -> Quaternion {
        let [a1, b1, c1, d1] = &self.q;
        let [a2, b2, c2, d2] = &o.q;
        Quaternion::new(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )
    }
}

impl Add for &Quaternion {
    type Output = Quaternion;

    fn add(self, o: &Quaternion) -> Quaternion {
        Quaternion {
            q: std::array::from_fn(|t| &self.q[t] + &o.q[t]),
        }
    }
}

impl Sub for &Quaternion {
    type Output = Quaternion;

    fn sub(self, o: &Quaternion) -> Quaternion {
        Quaternion {
            q: std::array::from_fn(|t| &self.q[t] - &o.q[t]),
        }
    }
}

impl Neg for &Quaternion {
    type Output = Quaternion;

    fn neg(self) -> Quaternion {
        Quaternion {
            q: self.q.clone().map(|x| -x),
        }
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;

    fn neg(self) -> Quaternion {
        -&self
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (c, unit) in self.q.iter().zip(["", "i", "j", "k"]) {
            if c.is_zero() {
                continue;
            }
            let coeff = if unit.is_empty() || c.abs() != BigRational::one() {
                c.to_string()
            } else if c.is_negative() {
                "-".to_string()
            } else {
                String::new()
            };
            parts.push(format!("{coeff}{unit}"));
        }
        if parts.is_empty() {
            return write!(f, "0");
        }
        let mut out = parts[0].clone();
        for p in &parts[1..] {
            match p.strip_prefix('-') {
                Some(rest) => out.push_str(&format!(" - {rest}")),
                None => out.push_str(&format!(" + {p}")),
            }
        }
        write!(f, "{out}")
    }
}

impl Serialize for Quaternion {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<String> = self.q.iter().map(rational_to_string).collect();
        v.serialize(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuatOp {
    Mul,
    Conj,
    Norm,
    Inv,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QuatValue {
    Quaternion(Quaternion),
    Rational(BigRational),
}

/// One arithmetic operation; `b` is required only for `Mul`.
pub fn quat_arith(op: QuatOp, a: &Quaternion, b: Option<&Quaternion>) -> Result<QuatValue> {
    Ok(match op {
        QuatOp::Mul => {
            let b = b.ok_or_else(|| Error::Unsupported("multiplication needs two operands".into()))?;
            QuatValue::Quaternion(a * b)
        }
        QuatOp::Conj => QuatValue::Quaternion(a.conj()),
        QuatOp::Norm => QuatValue::Rational(a.norm()),
        QuatOp::Inv => QuatValue::Quaternion(a.inv()?),
    })
}

fn gaussian(re: &BigRational, im: &BigRational) -> CycScalar {
    &CycScalar::from_rational(re.clone()) + &(&CycScalar::from_rational(im.clone()) * &CycScalar::imag_unit())
}

/// 2×2 complex matrix of q: [[q0 + q1ı, q2 + q3ı], [−q2 + q3ı, q0 − q1ı]].
pub fn hat_embedding(q: &Quaternion) -> ExactMatrix {
    let [a, b, c, d] = &q.q;
    ExactMatrix::new(vec![
        vec![gaussian(a, b), gaussian(c, d)],
        vec![gaussian(&-c, d), gaussian(a, &-b)],
    ])
    .expect("square")
    .lift_to(4)
}

/// Quaternion with the given hat matrix, if the block has the right shape.
fn from_hat_block(a: &CycScalar, b: &CycScalar, c: &CycScalar, d: &CycScalar) -> Option<Quaternion> {
    let parts = |z: &CycScalar| -> Option<(BigRational, BigRational)> {
        let re = (&(z + &z.conj()) * &CycScalar::from_ratio(1, 2)).as_rational()?;
        let im = (&(&(z - &z.conj()) * &CycScalar::imag_unit()) * &CycScalar::from_ratio(-1, 2)).as_rational()?;
        Some((re, im))
    };
    let (q0, q1) = parts(a)?;
    let (q2, q3) = parts(b)?;
    let q = Quaternion::new(q0, q1, q2, q3);
    let back = hat_embedding(&q);
    (*back.get(1, 0) == *c && *back.get(1, 1) == *d).then_some(q)
}

/// Matrix of the rotation x ↦ q x q^{-1} of the span of ı, ȷ, k.
pub fn su2_to_so3(q: &Quaternion) -> Result<ExactMatrix> {
    if !q.norm().is_one() {
        return Err(Error::NotUnit(q.to_string()));
    }
    let qi = q.conj();
    let basis = [Quaternion::i(), Quaternion::j(), Quaternion::k()];
    let mut rows = vec![vec![CycScalar::zero(); 3]; 3];
    for (c, e) in basis.iter().enumerate() {
        let img = &(q * e) * &qi;
        for r in 0..3 {
            rows[r][c] = CycScalar::from_rational(img.q[r + 1].clone());
        }
    }
    ExactMatrix::new(rows)
}

fn rational_sqrt(x: &BigRational) -> Option<BigRational> {
    if x.is_negative() {
        return None;
    }
    let (n, d) = (x.numer(), x.denom());
    let (rn, rd) = (n.sqrt(), d.sqrt());
    (&rn * &rn == *n && &rd * &rd == *d).then(|| BigRational::new(rn, rd))
}

/// Unit quaternion q, normalized so its first nonzero coefficient is positive,
/// with su2_to_so3(q) = R.
pub fn so3_lift(r: &ExactMatrix) -> Result<Quaternion> {
    if r.n() != 3 {
        return Err(Error::DimensionMismatch { expected: 3, got: r.n() });
    }
    let mut m = vec![vec![BigRational::zero(); 3]; 3];
    for (i, row) in m.iter_mut().enumerate() {
        for (j, x) in row.iter_mut().enumerate() {
            *x = r
                .get(i, j)
                .as_rational()
                .ok_or_else(|| Error::NoRationalLift(format!("entry ({i},{j}) is not rational")))?;
        }
    }
    if !(&r.transpose() * r).is_identity() || !r.det().is_one() {
        return Err(Error::NoRationalLift("not a rotation".into()));
    }
    let quarter = BigRational::new(BigInt::from(1), BigInt::from(4));
    let one = BigRational::one();
    let squares = [
        (&one + &m[0][0] + &m[1][1] + &m[2][2]) * &quarter,
        (&one + &m[0][0] - &m[1][1] - &m[2][2]) * &quarter,
        (&one - &m[0][0] + &m[1][1] - &m[2][2]) * &quarter,
        (&one - &m[0][0] - &m[1][1] + &m[2][2]) * &quarter,
    ];
    let (p, big) = squares
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(&a.0)))
        .expect("four entries");
    let root = rational_sqrt(big).ok_or_else(|| Error::NoRationalLift(format!("coefficient squared is {}", rational_to_string(big))))?;
    // 4 q_a q_b for every pair a < b.
    let pair = |a: usize, b: usize| -> BigRational {
        match (a, b) {
            (0, 1) => &m[2][1] - &m[1][2],
            (0, 2) => &m[0][2] - &m[2][0],
            (0, 3) => &m[1][0] - &m[0][1],
            (1, 2) => &m[0][1] + &m[1][0],
            (1, 3) => &m[0][2] + &m[2][0],
            _ => &m[1][2] + &m[2][1],
        }
    };
    let mut q: [BigRational; 4] = std::array::from_fn(|_| BigRational::zero());
    for (t, slot) in q.iter_mut().enumerate() {
        *slot = if t == p {
            root.clone()
        } else {
            pair(t.min(p), t.max(p)) * &quarter / &root
        };
    }
    let mut q = Quaternion { q };
    if q.q.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
        q = -q;
    }
    if su2_to_so3(&q)? != *r {
        return Err(Error::NoRationalLift("reconstruction mismatch".into()));
    }
    Ok(q)
}

/// Square matrix with quaternion entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuatMatrix {
    m: usize,
    entries: Vec<Vec<Quaternion>>,
}

impl QuatMatrix {
    pub fn new(entries: Vec<Vec<Quaternion>>) -> Result<Self> {
        let m = entries.len();
        if let Some(row) = entries.iter().find(|r| r.len() != m) {
            return Err(Error::DimensionMismatch { expected: m, got: row.len() });
        }
        Ok(QuatMatrix { m, entries })
    }

    pub fn identity(m: usize) -> Self {
        Self::diag(&vec![Quaternion::one(); m])
    }

    pub fn diag(d: &[Quaternion]) -> Self {
        let m = d.len();
        let mut entries = vec![vec![Quaternion::zero(); m]; m];
        for (i, q) in d.iter().enumerate() {
            entries[i][i] = q.clone();
        }
        QuatMatrix { m, entries }
    }

    /// Matrix sending basis vector j to basis vector perm[j].
    pub fn permutation(perm: &[usize]) -> Self {
        let m = perm.len();
        let mut entries = vec![vec![Quaternion::zero(); m]; m];
        for (j, &i) in perm.iter().enumerate() {
            entries[i][j] = Quaternion::one();
        }
        QuatMatrix { m, entries }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn get(&self, i: usize, j: usize) -> &Quaternion {
        &self.entries[i][j]
    }

    pub fn try_mul(&self, o: &Self) -> Result<Self> {
        if self.m != o.m {
            return Err(Error::DimensionMismatch { expected: self.m, got: o.m });
        }
        let mut entries = vec![vec![Quaternion::zero(); self.m]; self.m];
        for (i, row) in entries.iter_mut().enumerate() {
            for (k, a) in self.entries[i].iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (j, slot) in row.iter_mut().enumerate() {
                    *slot = &*slot + &(a * &o.entries[k][j]);
                }
            }
        }
        Ok(QuatMatrix { m: self.m, entries })
    }

    /// The 2m×2m complex matrix built from the hat blocks.
    pub fn hat(&self) -> ExactMatrix {
        let n = 2 * self.m;
        let mut rows = vec![vec![CycScalar::zero(); n]; n];
        for i in 0..self.m {
            for j in 0..self.m {
                let h = hat_embedding(&self.entries[i][j]);
                for a in 0..2 {
                    for b in 0..2 {
                        rows[2 * i + a][2 * j + b] = h.get(a, b).clone();
                    }
                }
            }
        }
        ExactMatrix::new(rows).expect("square").lift_to(4)
    }

    pub fn from_hat(h: &ExactMatrix) -> Result<Self> {
        if !h.n().is_multiple_of(2) {
            return Err(Error::Unsupported("odd-sized complex matrix".into()));
        }
        let m = h.n() / 2;
        let mut entries = vec![vec![Quaternion::zero(); m]; m];
        for (i, row) in entries.iter_mut().enumerate() {
            for (j, slot) in row.iter_mut().enumerate() {
                let g = |a: usize, b: usize| h.get(2 * i + a, 2 * j + b);
                *slot = from_hat_block(g(0, 0), g(0, 1), g(1, 0), g(1, 1))
                    .ok_or_else(|| Error::Unsupported(format!("block ({i},{j}) is not quaternionic")))?;
            }
        }
        Ok(QuatMatrix { m, entries })
    }

    pub fn is_invertible(&self) -> bool {
        !self.hat().det().is_zero()
    }

    pub fn inverse(&self) -> Result<Self> {
        Self::from_hat(&self.hat().inverse()?)
    }

    /// M D M^{-1}.
    pub fn conjugate(&self, d: &Self) -> Result<Self> {
        self.try_mul(d)?.try_mul(&self.inverse()?)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.m).all(|i| (0..self.m).all(|j| i == j || self.entries[i][j].is_zero()))
    }

    pub fn is_monomial(&self) -> bool {
        let ok = |count: usize| count == 1;
        (0..self.m).all(|i| ok(self.entries[i].iter().filter(|q| !q.is_zero()).count()))
            && (0..self.m).all(|j| ok((0..self.m).filter(|&i| !self.entries[i][j].is_zero()).count()))
    }

    pub fn key(&self) -> Vec<u8> {
        let mut out = Vec::new();
        for q in self.entries.iter().flatten() {
            for c in &q.q {
                CycScalar::from_rational(c.clone()).encode_into(&mut out);
            }
        }
        out
    }
}

impl GroupElement for QuatMatrix {
    fn group_mul(&self, other: &Self) -> Self {
        self.try_mul(other).expect("closure generators share a size")
    }

    fn group_key(&self) -> Vec<u8> {
        self.key()
    }
}

impl fmt::Display for QuatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .entries
            .iter()
            .map(|r| format!("[{}]", r.iter().map(|q| q.to_string()).collect::<Vec<_>>().join(", ")))
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

impl Serialize for QuatMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("QuatMatrix", 2)?;
        st.serialize_field("m", &self.m)?;
        st.serialize_field("entries", &self.entries)?;
        st.end()
    }
}

/// ȷ z ȷ^{-1} against z̄ and ı z ı^{-1} against z for a fixed set of complex z.
pub fn quat_conj_complex_check() -> SuiteReport {
    let mut r = SuiteReport::new("quat-complex", None, None);
    let j = Quaternion::j();
    let j_inv = j.inv().expect("nonzero");
    let i = Quaternion::i();
    let i_inv = i.inv().expect("nonzero");
    let r5 = |a: i64, b: i64| BigRational::new(BigInt::from(a), BigInt::from(b));
    let zs = [
        Quaternion::one(),
        Quaternion::i(),
        Quaternion::new(r5(3, 5), r5(4, 5), rat(0), rat(0)),
        Quaternion::from_ints(2, -7, 0, 0),
        Quaternion::new(r5(-1, 2), r5(1, 3), rat(0), rat(0)),
    ];
    for z in &zs {
        let got = &(&j * z) * &j_inv;
        r.check(format!("j ({z}) j^-1 == conj({z})"), got == z.conj(), got.to_string());
        let fixed = &(&i * z) * &i_inv;
        r.check(format!("i ({z}) i^-1 == {z}"), fixed == *z, fixed.to_string());
    }
    let not_complex = [Quaternion::j(), Quaternion::k(), Quaternion::from_ints(1, 0, 1, 1)];
    for q in &not_complex {
        let moved = &(&i * q) * &i_inv;
        r.check(format!("i ({q}) i^-1 != {q}"), moved != *q, moved.to_string());
    }
    r.finish()
}

/// ȷ placed at position t of an otherwise identity diagonal.
pub fn j_flip(m: usize, t: usize) -> QuatMatrix {
    let mut d = vec![Quaternion::one(); m];
    d[t] = Quaternion::j();
    QuatMatrix::diag(&d)
}

/// Permutation matrices of adjacent transpositions followed by the ȷ-flips.
pub fn quat_weyl_generators(m: usize) -> Vec<QuatMatrix> {
    let mut gens = Vec::new();
    for a in 0..m.saturating_sub(1) {
        let mut p: Vec<usize> = (0..m).collect();
        p.swap(a, a + 1);
        gens.push(QuatMatrix::permutation(&p));
    }
    gens.extend((0..m).map(|t| j_flip(m, t)));
    gens
}

/// Image in W(C_m): the permutation and the set of positions holding ±ȷ.
fn weyl_image(g: &QuatMatrix) -> Option<(Vec<usize>, Vec<bool>)> {
    let m = g.m();
    let mut perm = vec![0; m];
    let mut flips = vec![false; m];
    for j in 0..m {
        let i = (0..m).find(|&i| !g.get(i, j).is_zero())?;
        let q = g.get(i, j);
        perm[j] = i;
        flips[j] = if *q == Quaternion::one() || *q == -Quaternion::one() {
            false
        } else if *q == Quaternion::j() || *q == -Quaternion::j() {
            true
        } else {
            return None;
        };
    }
    Some((perm, flips))
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// Closure of the quaternionic lift of W(C_m) with its structural checks.
pub fn quat_weyl_closure(m: usize, cap: usize) -> Result<(ClosureResult<QuatMatrix>, SuiteReport)> {
    if m == 0 || m > QUAT_MAX_DIM {
        return Err(Error::Unsupported(format!("quaternionic closure needs 1 <= m <= {QUAT_MAX_DIM}, got {m}")));
    }
    let gens = quat_weyl_generators(m);
    let cl = closure_from(QuatMatrix::identity(m), &gens, cap)?;
    let mut r = SuiteReport::new("quat-weyl", Some('C'), Some(m));
    let w = (1usize << m) * factorial(m);
    r.check(format!("|<P, J_t>| == {}", w << m), cl.order == w << m, cl.order.to_string());
    let minus = QuatMatrix::diag(&vec![-Quaternion::one(); m]);
    r.check("-Id in <P, J_t>", cl.elements.contains(&minus), "");
    let images: Option<BTreeSet<(Vec<usize>, Vec<bool>)>> = cl.elements.iter().map(weyl_image).collect();
    match images {
        Some(images) => {
            r.check(format!("image in W(C_{m}) has order {w}"), images.len() == w, images.len().to_string());
            let kernel = cl
                .elements
                .iter()
                .filter(|g| weyl_image(g).is_some_and(|(p, f)| p.iter().enumerate().all(|(a, b)| a == *b) && !f.contains(&true)))
                .count();
            r.check(format!("kernel has order 2^{m}"), kernel == 1 << m, kernel.to_string());
        }
        None => {
            r.check("every element is a signed monomial in 1, j", false, "");
        }
    };
    let id = QuatMatrix::identity(m);
    for t in 0..m {
        let lifts_of_flip: Vec<&QuatMatrix> = cl
            .elements
            .iter()
            .filter(|g| {
                weyl_image(g).is_some_and(|(p, f)| {
                    p.iter().enumerate().all(|(a, b)| a == *b) && f.iter().enumerate().all(|(s, x)| *x == (s == t))
                })
            })
            .collect();
        let split = lifts_of_flip.iter().any(|g| g.try_mul(g).is_ok_and(|sq| sq == id));
        r.check(
            format!("no lift of the sign change at {} squares to Id", t + 1),
            !split && !lifts_of_flip.is_empty(),
            format!("{} lifts", lifts_of_flip.len()),
        );
    }
    if m == 1 {
        let j = &gens[0];
        let powers: Vec<QuatMatrix> = (1..=4)
            .scan(QuatMatrix::identity(1), |acc, _| {
                *acc = acc.try_mul(j).expect("1x1");
                Some(acc.clone())
            })
            .collect();
        let cyclic = powers[3] == id && powers[..3].iter().all(|p| *p != id);
        r.check("<j> is cyclic of order 4", cyclic && cl.order == 4, "");
    }
    if m >= 2 {
        let mut p: Vec<usize> = (0..m).collect();
        p.swap(0, 1);
        let swap = QuatMatrix::permutation(&p);
        let moved = swap.try_mul(&j_flip(m, 1))?.try_mul(&swap)?;
        r.check("swap J_2 swap == J_1", moved == j_flip(m, 0), moved.to_string());
    }
    Ok((cl, r.finish()))
}

fn random_quaternion(rng: &mut ChaCha8Rng) -> Quaternion {
    Quaternion {
        q: std::array::from_fn(|_| BigRational::new(BigInt::from(rng.gen_range(-5..=5)), BigInt::from(rng.gen_range(1..=4)))),
    }
}

fn random_nonzero(rng: &mut ChaCha8Rng) -> Quaternion {
    loop {
        let q = random_quaternion(rng);
        if !q.is_zero() {
            return q;
        }
    }
}

/// Monomial matrices conjugate diagonals to diagonals; specific non-monomial
/// matrices move some diagonal off the diagonal. Randomness is seeded, so the
/// report is reproducible.
pub fn monomial_normalizer_check(m: usize, trials: usize) -> Result<SuiteReport> {
    if m == 0 || m > QUAT_MAX_DIM {
        return Err(Error::Unsupported(format!("normalizer check needs 1 <= m <= {QUAT_MAX_DIM}, got {m}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0000 + m as u64);
    let mut r = SuiteReport::new("quat-normalizer", None, Some(m));
    let mut failures = 0usize;
    for _ in 0..trials {
        let mut perm: Vec<usize> = (0..m).collect();
        for a in (1..m).rev() {
            perm.swap(a, rng.gen_range(0..=a));
        }
        let d: Vec<Quaternion> = (0..m).map(|_| random_nonzero(&mut rng)).collect();
        let mono = QuatMatrix::permutation(&perm).try_mul(&QuatMatrix::diag(&d))?;
        let diag = QuatMatrix::diag(&(0..m).map(|_| random_quaternion(&mut rng)).collect::<Vec<_>>());
        if !mono.conjugate(&diag)?.is_diagonal() {
            failures += 1;
        }
    }
    r.check(
        "monomial M: M D M^-1 is diagonal",
        failures == 0,
        format!("{trials} trials, {failures} failures"),
    );
    let probes: Vec<QuatMatrix> = [Quaternion::i(), Quaternion::j(), Quaternion::from_ints(2, 0, 0, 0)]
        .into_iter()
        .map(|q| {
            let mut d = vec![Quaternion::one(); m];
            d[0] = q;
            QuatMatrix::diag(&d)
        })
        .collect();
    for witness in non_monomial_corpus(m) {
        let found = probes
            .iter()
            .find(|d| witness.conjugate(d).is_ok_and(|c| !c.is_diagonal()));
        r.check(
            format!("non-monomial {witness}: some M D M^-1 is not diagonal"),
            found.is_some(),
            found.map(|d| format!("D = {d}")).unwrap_or_default(),
        );
    }
    Ok(r.finish())
}

/// Invertible non-monomial test matrices, padded with an identity block.
fn non_monomial_corpus(m: usize) -> Vec<QuatMatrix> {
    if m < 2 {
        return Vec::new();
    }
    let q = |a, b, c, d| Quaternion::from_ints(a, b, c, d);
    let blocks = [
        [[q(1, 0, 0, 0), q(1, 0, 0, 0)], [q(0, 0, 0, 0), q(1, 0, 0, 0)]],
        [[q(1, 0, 0, 0), q(0, 0, 1, 0)], [q(0, 0, 0, 0), q(1, 0, 0, 0)]],
        [[q(1, 0, 0, 0), q(1, 0, 0, 0)], [q(1, 0, 0, 0), q(-1, 0, 0, 0)]],
        [[q(0, 0, 0, 0), q(1, 0, 0, 0)], [q(1, 0, 0, 0), q(0, 0, 0, 1)]],
    ];
    blocks
        .iter()
        .map(|b| {
            let mut e = QuatMatrix::identity(m).entries;
            for a in 0..2 {
                for c in 0..2 {
                    e[a][c] = b[a][c].clone();
                }
            }
            QuatMatrix { m, entries: e }
        })
        .filter(QuatMatrix::is_invertible)
        .collect()
}

/// Arithmetic, embedding, covering map, lifting and closure checks at size m.
pub fn verify_quat_suite(m: usize) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("quat", None, Some(m));
    let (i, j, k) = (Quaternion::i(), Quaternion::j(), Quaternion::k());
    let minus_one = -Quaternion::one();
    r.check("j^2 == -1", &j * &j == minus_one, (&j * &j).to_string());
    r.check("i j == k", &i * &j == k, (&i * &j).to_string());
    r.check("j i == -k", &j * &i == -&k, (&j * &i).to_string());
    let n = Quaternion::from_ints(1, 1, 1, 1).norm();
    r.check("Nm(1 + i + j + k) == 4", n == rat(4), rational_to_string(&n));
    let jhat = hat_embedding(&j);
    r.check("hat(j) == [[0, 1], [-1, 0]]", jhat == ExactMatrix::from_ints(&[vec![0, 1], vec![-1, 0]])?, jhat.to_string());
    let mut rng = ChaCha8Rng::seed_from_u64(0x4a41_4d45);
    let mut det_bad = 0;
    let mut hom_bad = 0;
    for _ in 0..200 {
        let a = random_quaternion(&mut rng);
        let b = random_quaternion(&mut rng);
        if hat_embedding(&a).det() != CycScalar::from_rational(a.norm()) {
            det_bad += 1;
        }
        if hat_embedding(&(&a * &b)) != &hat_embedding(&a) * &hat_embedding(&b) {
            hom_bad += 1;
        }
    }
    r.check("det hat(q) == Nm(q)", det_bad == 0, format!("200 samples, {det_bad} failures"));
    r.check("hat(a b) == hat(a) hat(b)", hom_bad == 0, format!("200 samples, {hom_bad} failures"));
    let rot = su2_to_so3(&j)?;
    r.check("su2_to_so3(j) == diag(-1, 1, -1)", rot == ExactMatrix::diag_ints(&[-1, 1, -1]), rot.to_string());
    r.check_result(
        "so3_lift(diag(-1, 1, -1)) == j",
        so3_lift(&ExactMatrix::diag_ints(&[-1, 1, -1])).map(|q| (q == j, q.to_string())),
    );
    r.check_result(
        "so3_lift(diag(-1, -1, 1)) == k",
        so3_lift(&ExactMatrix::diag_ints(&[-1, -1, 1])).map(|q| (q == k, q.to_string())),
    );
    r.check(
        "su2_to_so3(-q) == su2_to_so3(q)",
        su2_to_so3(&-&j)? == rot && su2_to_so3(&minus_one)?.is_identity(),
        "",
    );
    r.extend(quat_conj_complex_check());
    let (_, closure) = quat_weyl_closure(m, crate::exactmat::DEFAULT_CLOSURE_CAP)?;
    r.extend(closure);
    r.extend(monomial_normalizer_check(m, 50)?);
    Ok(r.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64, c: i64, d: i64) -> Quaternion {
        Quaternion::from_ints(a, b, c, d)
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(&Quaternion::j() * &Quaternion::j(), q(-1, 0, 0, 0));
        assert_eq!(&Quaternion::i() * &Quaternion::j(), Quaternion::k());
        assert_eq!(q(1, 1, 1, 1).norm(), rat(4));
        assert!(Quaternion::zero().inv().is_err());
        let a = q(1, 2, -3, 4);
        assert!((&a * &a.inv().unwrap()).is_one());
        assert_eq!(
            quat_arith(QuatOp::Norm, &a, None).unwrap(),
            QuatValue::Rational(rat(30))
        );
        assert_eq!(q(1, -1, 0, 2).to_string(), "1 - i + 2k");
        assert_eq!(q(0, 0, -1, 0).to_string(), "-j");
    }

    #[test]
    fn hat_examples() {
        let h = hat_embedding(&Quaternion::k());
        let i = CycScalar::imag_unit();
        assert_eq!(h, ExactMatrix::new(vec![vec![CycScalar::zero(), i.clone()], vec![i.clone(), CycScalar::zero()]]).unwrap());
        let z = q(3, 4, 0, 0);
        assert_eq!(hat_embedding(&z), ExactMatrix::diag(&[CycScalar::from_int(3) + &i * &CycScalar::from_int(4), CycScalar::from_int(3) - &i * &CycScalar::from_int(4)]));
        assert!(hat_embedding(&Quaternion::i()).det().is_one());
        let m = QuatMatrix::new(vec![vec![q(1, 2, 0, 0), q(0, 0, 1, 1)], vec![q(0, 0, 0, 0), q(1, 0, 0, 0)]]).unwrap();
        assert_eq!(QuatMatrix::from_hat(&m.hat()).unwrap(), m);
        assert_eq!(m.try_mul(&m.inverse().unwrap()).unwrap(), QuatMatrix::identity(2));
    }

    #[test]
    fn rotations() {
        assert!(su2_to_so3(&Quaternion::one()).unwrap().is_identity());
        assert_eq!(su2_to_so3(&Quaternion::i()).unwrap(), ExactMatrix::diag_ints(&[1, -1, -1]));
        assert!(matches!(su2_to_so3(&q(1, 1, 0, 0)), Err(Error::NotUnit(_))));
        assert_eq!(so3_lift(&ExactMatrix::identity(3)).unwrap(), Quaternion::one());
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        let u = q(1, 1, 1, 1).scale(&half);
        assert_eq!(so3_lift(&su2_to_so3(&u).unwrap()).unwrap(), u);
        // Rotation by π/2 about the ı axis needs √2 in its lift.
        let quarter_turn = ExactMatrix::from_ints(&[vec![1, 0, 0], vec![0, 0, -1], vec![0, 1, 0]]).unwrap();
        assert!(matches!(so3_lift(&quarter_turn), Err(Error::NoRationalLift(_))));
    }

    #[test]
    fn closures() {
        let (c1, r1) = quat_weyl_closure(1, 100).unwrap();
        assert_eq!(c1.order, 4);
        assert!(r1.passed(), "{r1}");
        let (c2, r2) = quat_weyl_closure(2, 1000).unwrap();
        assert_eq!(c2.order, 32);
        assert!(r2.passed(), "{r2}");
        assert!(matches!(quat_weyl_closure(2, 10), Err(Error::CapExceeded { cap: 10, .. })));
    }

    #[test]
    fn normalizer_and_suite() {
        let r = monomial_normalizer_check(2, 20).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(r.checks.len(), 5);
        assert!(quat_conj_complex_check().passed());
        let s = verify_quat_suite(1).unwrap();
        assert!(s.passed(), "{s}");
    }
}
