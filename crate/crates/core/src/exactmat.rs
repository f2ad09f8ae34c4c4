//! Dense square matrices over the cyclotomic field, the involutions θ_G of
//! GL_n, and a breadth-first closure engine for finite matrix groups.
//!
//! Every entry of an [`ExactMatrix`] is stored at one common conductor, so
//! products stay in the same field and the byte encoding used for
//! deduplication is canonical.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rootdata::{SignedPerm, TypeLabel};
use crate::scalars::CycScalar;

#[derive(Debug, Clone)]
pub struct ExactMatrix {
    n: usize,
    conductor: u32,
    entries: Vec<CycScalar>,
}

impl ExactMatrix {
    /// Build from rows, lifting all entries to the lcm of their conductors.
    pub fn new(rows: Vec<Vec<CycScalar>>) -> Result<Self> {
        let n = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: bad.len(),
            });
        }
        let conductor = rows
            .iter()
            .flatten()
            .fold(1u32, |acc, x| acc.lcm(&x.conductor()));
        let entries = rows.into_iter().flatten().map(|x| x.lift_to(conductor)).collect();
        Ok(ExactMatrix {
            n,
            conductor,
            entries,
        })
    }

    pub fn from_ints(rows: &[Vec<i64>]) -> Result<Self> {
        Self::new(
            rows.iter()
                .map(|r| r.iter().map(|&x| CycScalar::from_int(x)).collect())
                .collect(),
        )
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, &CycScalar::one())
    }

    pub fn zero(n: usize) -> Self {
        Self::scalar(n, &CycScalar::zero())
    }

    /// c·Id_n.
    pub fn scalar(n: usize, c: &CycScalar) -> Self {
        let z = CycScalar::zero().lift_to(c.conductor());
        let mut entries = vec![z; n * n];
        for i in 0..n {
            entries[i * n + i] = c.clone();
        }
        ExactMatrix {
            n,
            conductor: c.conductor(),
            entries,
        }
    }

    pub fn diag(d: &[CycScalar]) -> Self {
        let n = d.len();
        let mut rows = vec![vec![CycScalar::zero(); n]; n];
        for (i, x) in d.iter().enumerate() {
            rows[i][i] = x.clone();
        }
        Self::new(rows).expect("square by construction")
    }

    pub fn diag_ints(d: &[i64]) -> Self {
        Self::diag(&d.iter().map(|&x| CycScalar::from_int(x)).collect::<Vec<_>>())
    }

    /// Matrix unit E_{ij} (0-based) scaled by `c`.
    pub fn unit(n: usize, i: usize, j: usize, c: &CycScalar) -> Self {
        let mut m = Self::zero(n).lift_to(c.conductor());
        m.set(i, j, c.clone());
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// Entry (i, j), 0-based.
    pub fn get(&self, i: usize, j: usize) -> &CycScalar {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: CycScalar) {
        let c = self.conductor.lcm(&x.conductor());
        if c != self.conductor {
            *self = self.lift_to(c);
        }
        self.entries[i * self.n + j] = x.lift_to(c);
    }

    pub fn rows(&self) -> Vec<Vec<CycScalar>> {
        self.entries.chunks(self.n.max(1)).map(|r| r.to_vec()).collect()
    }

    pub fn lift_to(&self, target: u32) -> Self {
        if target == self.conductor {
            return self.clone();
        }
        ExactMatrix {
            n: self.n,
            conductor: target,
            entries: self.entries.iter().map(|x| x.lift_to(target)).collect(),
        }
    }

    fn aligned(a: &Self, b: &Self) -> (Self, Self) {
        let c = a.conductor.lcm(&b.conductor);
        (a.lift_to(c), b.lift_to(c))
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: other.n,
            });
        }
        Ok(())
    }

    /// Product skipping zero entries; monomial products cost O(n²).
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let (a, b) = if self.conductor == other.conductor {
            (std::borrow::Cow::Borrowed(self), std::borrow::Cow::Borrowed(other))
        } else {
            let (a, b) = Self::aligned(self, other);
            (std::borrow::Cow::Owned(a), std::borrow::Cow::Owned(b))
        };
        let n = self.n;
        let mut out = Self::zero(n).lift_to(a.conductor);
        let nz_b: Vec<Vec<usize>> = (0..n)
            .map(|k| (0..n).filter(|&j| !b.get(k, j).is_zero()).collect())
            .collect();
        for i in 0..n {
            for k in 0..n {
                let x = a.get(i, k);
                if x.is_zero() {
                    continue;
                }
                for &j in &nz_b[k] {
                    let idx = i * n + j;
                    let prod = x * b.get(k, j);
                    out.entries[idx] = if out.entries[idx].is_zero() {
                        prod
                    } else {
                        &out.entries[idx] + &prod
                    };
                }
            }
        }
        Ok(out)
    }

    fn zip(&self, other: &Self, f: impl Fn(&CycScalar, &CycScalar) -> CycScalar) -> Result<Self> {
        self.check_dim(other)?;
        let (a, b) = Self::aligned(self, other);
        Ok(ExactMatrix {
            n: a.n,
            conductor: a.conductor,
            entries: a.entries.iter().zip(&b.entries).map(|(x, y)| f(x, y)).collect(),
        })
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.zip(other, |x, y| x + y)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.zip(other, |x, y| x - y)
    }

    pub fn scale(&self, c: &CycScalar) -> Self {
        let target = self.conductor.lcm(&c.conductor());
        let m = self.lift_to(target);
        ExactMatrix {
            n: m.n,
            conductor: target,
            entries: m.entries.iter().map(|x| (x * c).lift_to(target)).collect(),
        }
    }

    /// Lie bracket [a, b] = ab − ba.
    pub fn bracket(&self, other: &Self) -> Result<Self> {
        self.try_mul(other)?.try_sub(&other.try_mul(self)?)
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let mut entries = self.entries.clone();
        for i in 0..n {
            for j in 0..n {
                entries[j * n + i] = self.entries[i * n + j].clone();
            }
        }
        ExactMatrix { entries, ..*self }
    }

    /// Entry-wise complex conjugation.
    pub fn conj(&self) -> Self {
        ExactMatrix {
            n: self.n,
            conductor: self.conductor,
            entries: self.entries.iter().map(|x| x.conj()).collect(),
        }
    }

    pub fn trace(&self) -> CycScalar {
        (0..self.n).fold(CycScalar::zero(), |acc, i| &acc + self.get(i, i))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(CycScalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.scalar_value().is_some_and(|c| c.is_one())
    }

    /// The scalar c if the matrix equals c·Id.
    pub fn scalar_value(&self) -> Option<CycScalar> {
        let n = self.n;
        let c = self.get(0, 0).clone();
        for i in 0..n {
            for j in 0..n {
                let x = self.get(i, j);
                let ok = if i == j { *x == c } else { x.is_zero() };
                if !ok {
                    return None;
                }
            }
        }
        Some(c)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| i == j || self.get(i, j).is_zero()))
    }

    fn monomial_inverse(&self) -> Option<Result<Self>> {
        let (perm, d) = monomial_decompose(self).ok()?;
        let n = self.n;
        let mut out = Self::zero(n).lift_to(self.conductor);
        for (j, &i) in perm.iter().enumerate() {
            match d[i].inv() {
                Ok(x) => out.entries[j * n + i] = x.lift_to(self.conductor),
                Err(e) => return Some(Err(e)),
            }
        }
        Some(Ok(out))
    }

    /// Exact inverse; monomial matrices take a direct path, others use Gauss–Jordan.
    pub fn inverse(&self) -> Result<Self> {
        if let Some(r) = self.monomial_inverse() {
            return r.map_err(|_| Error::Singular);
        }
        let n = self.n;
        let mut a = self.rows();
        let mut inv = Self::identity(n).lift_to(self.conductor).rows();
        for col in 0..n {
            let p = (col..n).find(|&r| !a[r][col].is_zero()).ok_or(Error::Singular)?;
            a.swap(col, p);
            inv.swap(col, p);
            let piv = a[col][col].inv()?;
            for x in a[col].iter_mut().chain(inv[col].iter_mut()) {
                *x = &*x * &piv;
            }
            for r in 0..n {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let f = a[r][col].clone();
                for j in 0..n {
                    let d = &f * &a[col][j];
                    a[r][j] = &a[r][j] - &d;
                    let d = &f * &inv[col][j];
                    inv[r][j] = &inv[r][j] - &d;
                }
            }
        }
        Ok(Self::new(inv)?.lift_to(self.conductor))
    }

    /// Determinant by Gaussian elimination over the field.
    pub fn det(&self) -> CycScalar {
        let n = self.n;
        let mut a = self.rows();
        let mut det = CycScalar::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
                return CycScalar::zero();
            };
            if p != col {
                a.swap(col, p);
                det = -det;
            }
            det = &det * &a[col][col];
            let piv = a[col][col].inv().expect("nonzero pivot");
            for r in col + 1..n {
                if a[r][col].is_zero() {
                    continue;
                }
                let f = &a[r][col] * &piv;
                for j in col..n {
                    let d = &f * &a[col][j];
                    a[r][j] = &a[r][j] - &d;
                }
            }
        }
        det
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut acc = Self::identity(self.n).lift_to(self.conductor);
        let mut sq = base;
        let mut k = e.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &sq;
            }
            k >>= 1;
            if k > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// a·b·a^{-1}.
    pub fn conjugate(&self, b: &Self) -> Result<Self> {
        Ok(&(self * b) * &self.inverse()?)
    }

    /// Canonical byte key for deduplication.
    pub fn key(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(self.entries.len() * 8);
        out.extend_from_slice(&self.conductor.to_le_bytes());
        for x in &self.entries {
            x.encode_into(&mut out);
        }
        out
    }

    /// Signed permutation if every entry is 0 or ±1 in monomial position.
    pub fn to_signed_perm(&self) -> Option<SignedPerm> {
        let (perm, d) = monomial_decompose(self).ok()?;
        let mut signs = Vec::with_capacity(d.len());
        for x in &d {
            let q = x.as_rational()?;
            if q == num_rational::BigRational::from_integer(1.into()) {
                signs.push(1);
            } else if q == num_rational::BigRational::from_integer((-1).into()) {
                signs.push(-1);
            } else {
                return None;
            }
        }
        Some(SignedPerm { perm, signs })
    }

    pub fn from_signed_perm(p: &SignedPerm) -> Self {
        let d: Vec<CycScalar> = p.signs.iter().map(|&s| CycScalar::from_int(s as i64)).collect();
        monomial_compose(&p.perm, &d).expect("consistent lengths")
    }
}

impl PartialEq for ExactMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.entries == other.entries
    }
}

impl Eq for ExactMatrix {}

macro_rules! matrix_op {
    ($tr:ident, $m:ident, $f:ident) => {
        impl $tr for &ExactMatrix {
            type Output = ExactMatrix;
            fn $m(self, rhs: &ExactMatrix) -> ExactMatrix {
                self.$f(rhs).expect("matrix dimensions agree")
            }
        }
        impl $tr for ExactMatrix {
            type Output = ExactMatrix;
            fn $m(self, rhs: ExactMatrix) -> ExactMatrix {
                (&self).$f(&rhs).expect("matrix dimensions agree")
            }
        }
    };
}

matrix_op!(Mul, mul, try_mul);
matrix_op!(Add, add, try_add);
matrix_op!(Sub, sub, try_sub);

impl Neg for &ExactMatrix {
    type Output = ExactMatrix;
    fn neg(self) -> ExactMatrix {
        ExactMatrix {
            n: self.n,
            conductor: self.conductor,
            entries: self.entries.iter().map(|x| -x).collect(),
        }
    }
}

impl Neg for ExactMatrix {
    type Output = ExactMatrix;
    fn neg(self) -> ExactMatrix {
        -&self
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl Serialize for ExactMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("ExactMatrix", 3)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("conductor", &self.conductor)?;
        st.serialize_field("entries", &self.rows())?;
        st.end()
    }
}

/// Reflection at the opposite diagonal: (g^τ)_{ij} = g_{n+1−j, n+1−i}.
pub fn antidiag_transpose(g: &ExactMatrix) -> ExactMatrix {
    let n = g.n;
    let mut out = g.clone();
    for i in 0..n {
        for j in 0..n {
            out.entries[i * n + j] = g.get(n - 1 - j, n - 1 - i).clone();
        }
    }
    out
}

/// Split a monomial matrix as g = D·P, with P e_j = e_{perm[j]} and D = diag(d).
pub fn monomial_decompose(g: &ExactMatrix) -> Result<(Vec<usize>, Vec<CycScalar>)> {
    let n = g.n;
    let mut perm = vec![0; n];
    let mut d = vec![CycScalar::zero(); n];
    let mut used = vec![false; n];
    for j in 0..n {
        let nz: Vec<usize> = (0..n).filter(|&i| !g.get(i, j).is_zero()).collect();
        if nz.len() != 1 {
            return Err(Error::NotMonomial(format!("column {} has {} nonzero entries", j + 1, nz.len())));
        }
        let i = nz[0];
        if used[i] {
            return Err(Error::NotMonomial(format!("row {} has several nonzero entries", i + 1)));
        }
        used[i] = true;
        perm[j] = i;
        d[i] = g.get(i, j).clone();
    }
    Ok((perm, d))
}

/// Inverse of [`monomial_decompose`].
pub fn monomial_compose(perm: &[usize], d: &[CycScalar]) -> Result<ExactMatrix> {
    let n = perm.len();
    if d.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: d.len(),
        });
    }
    let mut rows = vec![vec![CycScalar::zero(); n]; n];
    for (j, &i) in perm.iter().enumerate() {
        rows[i][j] = d[i].clone();
    }
    ExactMatrix::new(rows)
}

/// Which diagonal form of the type-D twisting matrix to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DForm {
    /// S_D = S_C·η with η = diag(Id_ℓ, −Id_ℓ).
    #[default]
    Eta,
    /// S_D = diag(1, −1, …, (−1)^{ℓ−1}; (−1)^{ℓ−1}, …, 1).
    Mirrored,
}

/// θ_G(g) = S_G (g^τ)^{-1} S_G^{-1} on GL_{2ℓ+1} (type B) or GL_{2ℓ} (types C, D).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThetaInvolution {
    pub type_label: TypeLabel,
    pub rank: usize,
    pub n: usize,
    pub s: ExactMatrix,
    s_inv: ExactMatrix,
}

impl ThetaInvolution {
    pub fn new(t: TypeLabel, rank: usize) -> Result<Self> {
        Self::with_form(t, rank, DForm::Eta)
    }

    pub fn with_form(t: TypeLabel, rank: usize, form: DForm) -> Result<Self> {
        t.check_rank(rank)?;
        let n = t.gl_dim(rank);
        let alt = |i: usize| if i.is_multiple_of(2) { 1 } else { -1 };
        let d: Vec<i64> = match t {
            TypeLabel::A => {
                return Err(Error::Unsupported("θ is defined for types B, C, D".into()));
            }
            TypeLabel::B | TypeLabel::C => (0..n).map(alt).collect(),
            TypeLabel::D => match form {
                DForm::Eta => (0..n).map(|i| alt(i) * if i < rank { 1 } else { -1 }).collect(),
                DForm::Mirrored => (0..n).map(|i| alt(i.min(n - 1 - i))).collect(),
            },
        };
        let s = ExactMatrix::diag_ints(&d);
        Ok(ThetaInvolution {
            type_label: t,
            rank,
            n,
            s_inv: s.clone(),
            s,
        })
    }

    pub fn apply(&self, g: &ExactMatrix) -> Result<ExactMatrix> {
        if g.n != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: g.n,
            });
        }
        let gi = antidiag_transpose(g).inverse()?;
        Ok(&(&self.s * &gi) * &self.s_inv)
    }

    pub fn is_fixed(&self, g: &ExactMatrix) -> Result<bool> {
        Ok(self.apply(g)? == *g)
    }

    /// The differential X ↦ −S_G X^τ S_G^{-1} on 𝔤𝔩_n.
    pub fn apply_lie(&self, x: &ExactMatrix) -> ExactMatrix {
        -(&(&self.s * &antidiag_transpose(x)) * &self.s_inv)
    }

    pub fn is_fixed_lie(&self, x: &ExactMatrix) -> bool {
        self.apply_lie(x) == *x
    }
}

/// θ applied to `g`.
pub fn theta(inv: &ThetaInvolution, g: &ExactMatrix) -> Result<ExactMatrix> {
    inv.apply(g)
}

/// Elements the closure engine can multiply and deduplicate.
pub trait GroupElement: Clone {
    fn group_mul(&self, other: &Self) -> Self;
    /// Canonical encoding; equal elements must produce equal keys.
    fn group_key(&self) -> Vec<u8>;
}

impl GroupElement for ExactMatrix {
    fn group_mul(&self, other: &Self) -> Self {
        self * other
    }

    fn group_key(&self) -> Vec<u8> {
        self.key()
    }
}

#[derive(Debug, Clone)]
pub struct ClosureResult<T = ExactMatrix> {
    pub order: usize,
    /// Sorted by canonical byte key.
    pub elements: Vec<T>,
    /// Shortest word (0-based generator indices) for each element, aligned with `elements`.
    pub words: Vec<Vec<usize>>,
}

impl ClosureResult<ExactMatrix> {
    pub fn contains(&self, g: &ExactMatrix) -> bool {
        let c = self.elements.first().map_or(g.conductor, |e| e.conductor);
        let k = g.lift_to(c.lcm(&g.conductor)).key();
        self.elements.iter().any(|e| e.lift_to(c.lcm(&g.conductor)).key() == k)
    }
}

pub const DEFAULT_CLOSURE_CAP: usize = 2_000_000;

/// Breadth-first closure of the group generated by `gens`.
pub fn group_closure(gens: &[ExactMatrix], cap: usize) -> Result<ClosureResult> {
    let Some(first) = gens.first() else {
        return Ok(ClosureResult {
            order: 1,
            elements: vec![],
            words: vec![vec![]],
        });
    };
    let conductor = gens.iter().fold(1u32, |acc, g| acc.lcm(&g.conductor));
    let gens: Vec<ExactMatrix> = gens
        .iter()
        .map(|g| {
            first.check_dim(g)?;
            Ok(g.lift_to(conductor))
        })
        .collect::<Result<_>>()?;
    let id = ExactMatrix::identity(first.n).lift_to(conductor);
    closure_from(id, &gens, cap)
}

/// Breadth-first closure starting from `identity`. Words are shortest in the
/// generators, and ties go to the generator listed first.
pub fn closure_from<T: GroupElement>(identity: T, gens: &[T], cap: usize) -> Result<ClosureResult<T>> {
    let mut index: HashMap<Vec<u8>, usize> = HashMap::new();
    index.insert(identity.group_key(), 0);
    let mut elements = vec![identity];
    let mut words: Vec<Vec<usize>> = vec![vec![]];
    let mut frontier = vec![0usize];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &x in &frontier {
            for (gi, g) in gens.iter().enumerate() {
                let y = elements[x].group_mul(g);
                let k = y.group_key();
                if index.contains_key(&k) {
                    continue;
                }
                if elements.len() >= cap {
                    return Err(Error::CapExceeded {
                        cap,
                        partial: elements.len(),
                    });
                }
                let mut w = words[x].clone();
                w.push(gi);
                index.insert(k, elements.len());
                elements.push(y);
                words.push(w);
                next.push(elements.len() - 1);
            }
        }
        frontier = next;
    }
    let mut keyed: Vec<(Vec<u8>, T, Vec<usize>)> = elements
        .into_iter()
        .zip(words)
        .map(|(e, w)| (e.group_key(), e, w))
        .collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    let order = keyed.len();
    let (elements, words) = keyed.into_iter().map(|(_, e, w)| (e, w)).unzip();
    Ok(ClosureResult {
        order,
        elements,
        words,
    })
}
