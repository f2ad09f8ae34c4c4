//! Root data of the classical types, their Weyl groups as signed
//! permutations, and the embedding of B/C/D reflections into type A.
//!
//! Type A uses the GL coordinates ε_1, …, ε_{ℓ+1}. Types B, C, D use folded
//! coordinates ε^G_1, …, ε^G_ℓ, which sit inside the GL coordinates as
//! ε^B_k = ε_{ℓ+1−k} − ε_{ℓ+1+k} (in ℝ^{2ℓ+1}) and
//! ε^C_k = ε^D_k = ε_{ℓ+1−k} − ε_{ℓ+k} (in ℝ^{2ℓ}).

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::scalars::rational_to_string;

pub type RatVec = Vec<BigRational>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TypeLabel {
    A,
    B,
    C,
    D,
}

impl TypeLabel {
    pub fn min_rank(self) -> usize {
        match self {
            TypeLabel::D => 2,
            _ => 1,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            TypeLabel::A => 'A',
            TypeLabel::B => 'B',
            TypeLabel::C => 'C',
            TypeLabel::D => 'D',
        }
    }

    /// Dimension of the GL representation carrying the type.
    pub fn gl_dim(self, rank: usize) -> usize {
        match self {
            TypeLabel::A => rank + 1,
            TypeLabel::B => 2 * rank + 1,
            TypeLabel::C | TypeLabel::D => 2 * rank,
        }
    }

    pub fn check_rank(self, rank: usize) -> Result<()> {
        if rank < self.min_rank() {
            return Err(Error::RankTooSmall {
                type_label: self.as_char(),
                rank,
                min: self.min_rank(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

impl FromStr for TypeLabel {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(TypeLabel::A),
            "B" => Ok(TypeLabel::B),
            "C" => Ok(TypeLabel::C),
            "D" => Ok(TypeLabel::D),
            other => Err(format!("unknown type label {other:?}")),
        }
    }
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn unit(dim: usize, k: usize) -> RatVec {
    let mut v = vec![BigRational::zero(); dim];
    v[k] = BigRational::one();
    v
}

fn lin(terms: &[(i64, i64, usize)], dim: usize) -> RatVec {
    let mut v = vec![BigRational::zero(); dim];
    for &(n, d, k) in terms {
        v[k] += rat(n, d);
    }
    v
}

/// Sum ε_k + … + ε_ℓ (0-based `from`), scaled by `n/d`.
fn tail_sum(from: usize, dim: usize, n: i64, d: i64) -> RatVec {
    let mut v = vec![BigRational::zero(); dim];
    for x in v.iter_mut().skip(from) {
        *x = rat(n, d);
    }
    v
}

pub fn dot(a: &[BigRational], b: &[BigRational]) -> BigRational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn axpy(y: &[BigRational], c: &BigRational, x: &[BigRational]) -> RatVec {
    y.iter().zip(x).map(|(a, b)| a + c * b).collect()
}

/// Exact inverse of a square rational matrix by Gauss–Jordan elimination.
pub fn rational_inverse(m: &[Vec<BigRational>]) -> Result<Vec<Vec<BigRational>>> {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m.to_vec();
    let mut inv: Vec<Vec<BigRational>> = (0..n).map(|i| unit(n, i)).collect();
    for col in 0..n {
        let p = (col..n).find(|&r| !a[r][col].is_zero()).ok_or(Error::Singular)?;
        a.swap(col, p);
        inv.swap(col, p);
        let piv = a[col][col].clone();
        for x in a[col].iter_mut() {
            *x /= &piv;
        }
        for x in inv[col].iter_mut() {
            *x /= &piv;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                let (ra, rc) = (a[col].clone(), inv[col].clone());
                for (x, y) in a[r].iter_mut().zip(&ra) {
                    *x -= &f * y;
                }
                for (x, y) in inv[r].iter_mut().zip(&rc) {
                    *x -= &f * y;
                }
            }
        }
    }
    Ok(inv)
}

/// Rank of a rational matrix by row reduction.
pub fn rational_rank(m: &[Vec<BigRational>]) -> usize {
    let mut a: Vec<Vec<BigRational>> = m.to_vec();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let piv = a[rank][col].clone();
        for r in rank + 1..rows {
            if a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] / &piv;
            let src = a[rank].clone();
            for (x, y) in a[r].iter_mut().zip(&src).skip(col) {
                *x -= &f * y;
            }
        }
        rank += 1;
    }
    rank
}

pub fn rational_matmul(a: &[Vec<BigRational>], b: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
    let (n, m, k) = (a.len(), b[0].len(), b.len());
    (0..n)
        .map(|i| (0..m).map(|j| (0..k).map(|t| &a[i][t] * &b[t][j]).sum()).collect())
        .collect()
}

pub fn rational_transpose(a: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
    if a.is_empty() {
        return Vec::new();
    }
    (0..a[0].len()).map(|j| a.iter().map(|row| row[j].clone()).collect()).collect()
}

pub fn int_matrix_to_rational(a: &[Vec<i64>]) -> Vec<Vec<BigRational>> {
    a.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootDatum {
    pub type_label: TypeLabel,
    pub rank: usize,
    pub ambient_dim: usize,
    pub simple_roots: Vec<RatVec>,
    pub simple_coroots: Vec<RatVec>,
    pub fundamental_weights: Vec<RatVec>,
    pub fundamental_coweights: Vec<RatVec>,
    /// a_ij = ⟨α_j, α_i∨⟩.
    pub cartan: Vec<Vec<i64>>,
    /// A^{-1}, so that ϖ_i∨ = Σ_j c_ij α_j∨.
    pub inverse_cartan: Vec<Vec<BigRational>>,
}

/// Root datum of the given classical type and rank.
pub fn build_root_datum(t: TypeLabel, rank: usize) -> Result<RootDatum> {
    t.check_rank(rank)?;
    let l = rank;
    let (dim, roots, coroots, weights, coweights) = match t {
        TypeLabel::A => {
            let dim = l + 1;
            let roots: Vec<RatVec> = (0..l).map(|i| lin(&[(1, 1, i), (-1, 1, i + 1)], dim)).collect();
            let weights: Vec<RatVec> = (1..=l)
                .map(|k| (0..dim).map(|j| if j < k { int(1) } else { int(0) }).collect())
                .collect();
            (dim, roots.clone(), roots, weights.clone(), weights)
        }
        TypeLabel::B => {
            let mut roots = vec![unit(l, 0)];
            let mut coroots = vec![lin(&[(2, 1, 0)], l)];
            let mut weights = vec![tail_sum(0, l, 1, 2)];
            let mut coweights = vec![tail_sum(0, l, 1, 1)];
            for k in 1..l {
                let a = lin(&[(1, 1, k), (-1, 1, k - 1)], l);
                roots.push(a.clone());
                coroots.push(a);
                weights.push(tail_sum(k, l, 1, 1));
                coweights.push(tail_sum(k, l, 1, 1));
            }
            (l, roots, coroots, weights, coweights)
        }
        TypeLabel::C => {
            let mut roots = vec![lin(&[(2, 1, 0)], l)];
            let mut coroots = vec![unit(l, 0)];
            let mut weights = vec![tail_sum(0, l, 1, 1)];
            let mut coweights = vec![tail_sum(0, l, 1, 2)];
            for k in 1..l {
                let a = lin(&[(1, 1, k), (-1, 1, k - 1)], l);
                roots.push(a.clone());
                coroots.push(a);
                weights.push(tail_sum(k, l, 1, 1));
                coweights.push(tail_sum(k, l, 1, 1));
            }
            (l, roots, coroots, weights, coweights)
        }
        TypeLabel::D => {
            let mut roots = vec![lin(&[(1, 1, 0), (1, 1, 1)], l)];
            let mut weights = vec![tail_sum(0, l, 1, 2)];
            let mut w2 = tail_sum(0, l, 1, 2);
            w2[0] = rat(-1, 2);
            weights.push(w2);
            for k in 1..l {
                roots.push(lin(&[(1, 1, k), (-1, 1, k - 1)], l));
                if k >= 2 {
                    weights.push(tail_sum(k, l, 1, 1));
                }
            }
            (l, roots.clone(), roots, weights.clone(), weights)
        }
    };
    let cartan: Vec<Vec<i64>> = (0..l)
        .map(|i| {
            (0..l)
                .map(|j| {
                    let v = dot(&roots[j], &coroots[i]);
                    debug_assert!(v.is_integer());
                    v.to_integer().to_i64().expect("small Cartan entry")
                })
                .collect()
        })
        .collect();
    let inverse_cartan = rational_inverse(&int_matrix_to_rational(&cartan))?;
    Ok(RootDatum {
        type_label: t,
        rank: l,
        ambient_dim: dim,
        simple_roots: roots,
        simple_coroots: coroots,
        fundamental_weights: weights,
        fundamental_coweights: coweights,
        cartan,
        inverse_cartan,
    })
}

impl RootDatum {
    fn index(&self, i: usize) -> Result<usize> {
        if i == 0 || i > self.rank {
            return Err(Error::IndexOutOfRange {
                index: i,
                rank: self.rank,
            });
        }
        Ok(i - 1)
    }

    /// Traceless weights ε^A_1 + … + ε^A_k of 𝔰𝔩_{ℓ+1}; only meaningful for type A.
    pub fn traceless_weights(&self) -> Vec<RatVec> {
        let n = self.ambient_dim as i64;
        (1..=self.rank as i64)
            .map(|k| {
                (0..n)
                    .map(|j| {
                        let base = if j < k { int(1) } else { int(0) };
                        base - rat(k, n)
                    })
                    .collect()
            })
            .collect()
    }

    pub fn to_json(&self) -> Value {
        let vecs = |vs: &[RatVec]| -> Value {
            vs.iter()
                .map(|v| v.iter().map(rational_to_string).collect::<Vec<_>>())
                .collect::<Vec<_>>()
                .into()
        };
        json!({
            "type_label": self.type_label.to_string(),
            "rank": self.rank,
            "ambient_dim": self.ambient_dim,
            "simple_roots": vecs(&self.simple_roots),
            "simple_coroots": vecs(&self.simple_coroots),
            "fundamental_weights": vecs(&self.fundamental_weights),
            "fundamental_coweights": vecs(&self.fundamental_coweights),
            "cartan": self.cartan,
            "inverse_cartan": vecs(&self.inverse_cartan),
        })
    }
}

/// λ − ⟨λ, α_i∨⟩ α_i.
pub fn reflect(datum: &RootDatum, i: usize, lambda: &[BigRational]) -> Result<RatVec> {
    let i = datum.index(i)?;
    if lambda.len() != datum.ambient_dim {
        return Err(Error::DimensionMismatch {
            expected: datum.ambient_dim,
            got: lambda.len(),
        });
    }
    let c = -dot(lambda, &datum.simple_coroots[i]);
    Ok(axpy(lambda, &c, &datum.simple_roots[i]))
}

/// All roots, obtained by closing the simple roots under simple reflections.
pub fn generate_root_system(datum: &RootDatum) -> BTreeSet<RatVec> {
    let mut seen: BTreeSet<RatVec> = datum.simple_roots.iter().cloned().collect();
    let mut queue: VecDeque<RatVec> = seen.iter().cloned().collect();
    while let Some(v) = queue.pop_front() {
        for i in 1..=datum.rank {
            let w = reflect(datum, i, &v).expect("valid index");
            if seen.insert(w.clone()) {
                queue.push_back(w);
            }
        }
    }
    seen
}

/// Smith normal form diagonal of an integer matrix.
pub fn smith_diagonal(m: &[Vec<i64>]) -> Vec<i64> {
    let mut a: Vec<Vec<i64>> = m.to_vec();
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut diag = Vec::new();
    for t in 0..rows.min(cols) {
        loop {
            let pivot = (t..rows)
                .flat_map(|i| (t..cols).map(move |j| (i, j)))
                .filter(|&(i, j)| a[i][j] != 0)
                .min_by_key(|&(i, j)| a[i][j].abs());
            let Some((pi, pj)) = pivot else {
                return diag_finish(diag, rows.min(cols));
            };
            a.swap(t, pi);
            for row in a.iter_mut() {
                row.swap(t, pj);
            }
            let p = a[t][t];
            let mut clean = true;
            for i in t + 1..rows {
                let q = a[i][t] / p;
                for j in t..cols {
                    a[i][j] -= q * a[t][j];
                }
                clean &= a[i][t] == 0;
            }
            for j in t + 1..cols {
                let q = a[t][j] / p;
                for i in t..rows {
                    a[i][j] -= q * a[i][t];
                }
                clean &= a[t][j] == 0;
            }
            if !clean {
                continue;
            }
            let bad = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| a[i][j] % p != 0);
            if let Some((i, _)) = bad {
                for j in t..cols {
                    a[t][j] += a[i][j];
                }
                continue;
            }
            diag.push(p.abs());
            break;
        }
    }
    diag_finish(diag, rows.min(cols))
}

fn diag_finish(mut diag: Vec<i64>, n: usize) -> Vec<i64> {
    diag.resize(n, 0);
    diag
}

/// Invariants of Λ_W/Λ_R: the Smith diagonal of the Cartan matrix with units dropped.
pub fn fundamental_group(t: TypeLabel, rank: usize) -> Result<Vec<i64>> {
    let datum = build_root_datum(t, rank)?;
    Ok(smith_diagonal(&datum.cartan).into_iter().filter(|&d| d != 1).collect())
}

/// Signed permutation ε_j ↦ signs[perm[j]] · ε_{perm[j]} (0-based).
///
/// Signs are indexed by the target coordinate, so the matrix factors as
/// D·P with the diagonal on the left. The product `a.mul(&b)` is the
/// composite a∘b, matching matrix multiplication.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPerm {
    pub perm: Vec<usize>,
    pub signs: Vec<i8>,
}

impl SignedPerm {
    pub fn identity(m: usize) -> Self {
        SignedPerm {
            perm: (0..m).collect(),
            signs: vec![1; m],
        }
    }

    pub fn len(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }

    pub fn mul(&self, other: &SignedPerm) -> SignedPerm {
        let m = self.len();
        let mut perm = vec![0; m];
        let mut signs = vec![1; m];
        for j in 0..m {
            let mid = other.perm[j];
            let t = self.perm[mid];
            perm[j] = t;
            signs[t] = self.signs[t] * other.signs[mid];
        }
        SignedPerm { perm, signs }
    }

    pub fn apply(&self, v: &[BigRational]) -> RatVec {
        let mut out = vec![BigRational::zero(); v.len()];
        for (j, x) in v.iter().enumerate() {
            let t = self.perm[j];
            out[t] = if self.signs[t] < 0 { -x } else { x.clone() };
        }
        out
    }

    pub fn negative_count(&self) -> usize {
        self.signs.iter().filter(|&&s| s < 0).count()
    }

    /// Read a linear map given by the images of the basis vectors.
    pub fn from_images(images: &[RatVec]) -> Option<SignedPerm> {
        let m = images.len();
        let mut perm = vec![0; m];
        let mut signs = vec![1i8; m];
        let mut used = vec![false; m];
        for (j, img) in images.iter().enumerate() {
            let nz: Vec<usize> = (0..m).filter(|&t| !img[t].is_zero()).collect();
            if nz.len() != 1 || used[nz[0]] {
                return None;
            }
            let t = nz[0];
            if img[t].abs() != BigRational::one() {
                return None;
            }
            used[t] = true;
            perm[j] = t;
            signs[t] = if img[t].is_negative() { -1 } else { 1 };
        }
        Some(SignedPerm { perm, signs })
    }
}

/// Simple reflection s_i as a signed permutation of the ambient coordinates.
pub fn simple_reflection(datum: &RootDatum, i: usize) -> Result<SignedPerm> {
    let images: Vec<RatVec> = (0..datum.ambient_dim)
        .map(|k| reflect(datum, i, &unit(datum.ambient_dim, k)))
        .collect::<Result<_>>()?;
    SignedPerm::from_images(&images)
        .ok_or_else(|| Error::NotMonomial(format!("s_{i} of {}", datum.type_label)))
}

pub const DEFAULT_WEYL_CAP: usize = 1_000_000;

/// All elements of the Weyl group, sorted.
pub fn weyl_enumerate(t: TypeLabel, rank: usize, cap: usize) -> Result<Vec<SignedPerm>> {
    let datum = build_root_datum(t, rank)?;
    let gens: Vec<SignedPerm> = (1..=rank).map(|i| simple_reflection(&datum, i)).collect::<Result<_>>()?;
    let id = SignedPerm::identity(datum.ambient_dim);
    let mut seen: HashSet<SignedPerm> = HashSet::from([id.clone()]);
    let mut frontier = vec![id];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for x in &frontier {
            for g in &gens {
                let y = x.mul(g);
                if !seen.contains(&y) {
                    if seen.len() >= cap {
                        return Err(Error::CapExceeded {
                            cap,
                            partial: seen.len(),
                        });
                    }
                    seen.insert(y.clone());
                    next.push(y);
                }
            }
        }
        frontier = next;
    }
    let mut all: Vec<SignedPerm> = seen.into_iter().collect();
    all.sort();
    Ok(all)
}

/// The classical reflection s^G_k as a word in type-A simple reflections (1-based).
pub fn embed_in_type_a(t: TypeLabel, rank: usize, k: usize) -> Result<Vec<usize>> {
    t.check_rank(rank)?;
    if k == 0 || k > rank {
        return Err(Error::IndexOutOfRange { index: k, rank });
    }
    let l = rank;
    Ok(match (t, k) {
        (TypeLabel::A, _) => {
            return Err(Error::Unsupported("type A embeds into itself".into()));
        }
        (TypeLabel::B, 1) => vec![l, l + 1, l],
        (TypeLabel::B, _) => vec![l + 1 - k, l + k],
        (TypeLabel::C, 1) => vec![l],
        (TypeLabel::C, _) => vec![l + 1 - k, l - 1 + k],
        (TypeLabel::D, 1) => vec![l, l - 1, l + 1, l],
        (TypeLabel::D, _) => vec![l + 1 - k, l - 1 + k],
    })
}

/// The outer generator R = s_ℓ of O_{2ℓ} as a type-A word.
pub fn outer_word_d(rank: usize) -> Result<Vec<usize>> {
    TypeLabel::D.check_rank(rank)?;
    Ok(vec![rank])
}

/// Folded basis vector ε^G_k (1-based) in GL coordinates.
pub fn folded_basis_vector(t: TypeLabel, rank: usize, k: usize) -> RatVec {
    let n = t.gl_dim(rank);
    let l = rank;
    match t {
        TypeLabel::A => unit(n, k - 1),
        TypeLabel::B => lin(&[(1, 1, l - k), (-1, 1, l + k)], n),
        TypeLabel::C | TypeLabel::D => lin(&[(1, 1, l - k), (-1, 1, l + k - 1)], n),
    }
}

/// Express a folded vector Σ v_k ε^G_k in GL coordinates.
pub fn unfold(t: TypeLabel, rank: usize, v: &[BigRational]) -> RatVec {
    let n = t.gl_dim(rank);
    let mut out = vec![BigRational::zero(); n];
    for (k, c) in v.iter().enumerate() {
        if !c.is_zero() {
            out = axpy(&out, c, &folded_basis_vector(t, rank, k + 1));
        }
    }
    out
}

/// Apply a type-A word s_{a_1} ⋯ s_{a_m} to a GL vector (rightmost letter first).
pub fn apply_type_a_word(word: &[usize], v: &[BigRational]) -> RatVec {
    let mut out = v.to_vec();
    for &a in word.iter().rev() {
        out.swap(a - 1, a);
    }
    out
}

/// Whether the type-A word for s^G_k reproduces the folded reflection on every ε^G_j.
pub fn verify_embedding(t: TypeLabel, rank: usize, k: usize) -> Result<bool> {
    let datum = build_root_datum(t, rank)?;
    let word = embed_in_type_a(t, rank, k)?;
    for j in 1..=rank {
        let e = unit(rank, j - 1);
        let lhs = apply_type_a_word(&word, &unfold(t, rank, &e));
        let rhs = unfold(t, rank, &reflect(&datum, k, &e)?);
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        rat(n, d)
    }

    #[test]
    fn cartan_examples() {
        let a3 = build_root_datum(TypeLabel::A, 3).unwrap();
        assert_eq!(a3.cartan, vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]]);
        let b2 = build_root_datum(TypeLabel::B, 2).unwrap();
        assert_eq!(b2.cartan, vec![vec![2, -2], vec![-1, 2]]);
        assert_eq!(b2.inverse_cartan, vec![vec![q(1, 1), q(1, 1)], vec![q(1, 2), q(1, 1)]]);
        let c2 = build_root_datum(TypeLabel::C, 2).unwrap();
        assert_eq!(c2.cartan, vec![vec![2, -1], vec![-2, 2]]);
    }

    #[test]
    fn rank_minimums() {
        assert!(build_root_datum(TypeLabel::A, 0).is_err());
        assert!(build_root_datum(TypeLabel::D, 1).is_err());
        assert!(build_root_datum(TypeLabel::D, 2).is_ok());
    }

    #[test]
    fn root_counts() {
        let count = |t, l| generate_root_system(&build_root_datum(t, l).unwrap()).len();
        assert_eq!(count(TypeLabel::A, 2), 6);
        assert_eq!(count(TypeLabel::B, 2), 8);
        assert_eq!(count(TypeLabel::D, 3), 12);
        for l in 1..=5 {
            assert_eq!(count(TypeLabel::A, l), l * (l + 1));
            assert_eq!(count(TypeLabel::B, l), 2 * l * l);
            assert_eq!(count(TypeLabel::C, l), 2 * l * l);
            if l >= 2 {
                assert_eq!(count(TypeLabel::D, l), 2 * l * (l - 1));
            }
        }
    }

    #[test]
    fn b2_roots_include_short_roots() {
        let roots = generate_root_system(&build_root_datum(TypeLabel::B, 2).unwrap());
        for s in [1, -1] {
            assert!(roots.contains(&vec![q(s, 1), q(0, 1)]));
            assert!(roots.contains(&vec![q(0, 1), q(s, 1)]));
        }
    }

    #[test]
    fn reflection_examples() {
        let a2 = build_root_datum(TypeLabel::A, 2).unwrap();
        let sum = axpy(&a2.simple_roots[0], &q(1, 1), &a2.simple_roots[1]);
        assert_eq!(reflect(&a2, 1, &a2.simple_roots[1]).unwrap(), sum);
        let b2 = build_root_datum(TypeLabel::B, 2).unwrap();
        assert_eq!(reflect(&b2, 1, &[q(1, 1), q(0, 1)]).unwrap(), vec![q(-1, 1), q(0, 1)]);
        assert!(matches!(
            reflect(&b2, 1, &[q(1, 1)]),
            Err(Error::DimensionMismatch { expected: 2, got: 1 })
        ));
    }

    #[test]
    fn fundamental_group_examples() {
        assert_eq!(fundamental_group(TypeLabel::A, 4).unwrap(), vec![5]);
        assert_eq!(fundamental_group(TypeLabel::D, 4).unwrap(), vec![2, 2]);
        assert_eq!(fundamental_group(TypeLabel::D, 3).unwrap(), vec![4]);
    }

    #[test]
    fn smith_of_known_matrices() {
        assert_eq!(smith_diagonal(&[vec![2, 4], vec![6, 8]]), vec![2, 4]);
        assert_eq!(smith_diagonal(&[vec![0, 0], vec![0, 0]]), vec![0, 0]);
        assert_eq!(smith_diagonal(&[vec![6]]), vec![6]);
        assert_eq!(smith_diagonal(&[vec![2, 0], vec![0, 3]]), vec![1, 6]);
    }

    #[test]
    fn weyl_group_orders() {
        let n = |t, l| weyl_enumerate(t, l, DEFAULT_WEYL_CAP).unwrap().len();
        assert_eq!(n(TypeLabel::A, 3), 24);
        assert_eq!(n(TypeLabel::B, 3), 48);
        assert_eq!(n(TypeLabel::D, 3), 24);
        assert!(matches!(
            weyl_enumerate(TypeLabel::B, 3, 10),
            Err(Error::CapExceeded { cap: 10, .. })
        ));
    }

    #[test]
    fn type_a_words() {
        assert_eq!(embed_in_type_a(TypeLabel::B, 3, 1).unwrap(), vec![3, 4, 3]);
        assert_eq!(embed_in_type_a(TypeLabel::C, 3, 1).unwrap(), vec![3]);
        assert_eq!(embed_in_type_a(TypeLabel::D, 3, 1).unwrap(), vec![3, 2, 4, 3]);
        assert!(embed_in_type_a(TypeLabel::A, 3, 1).is_err());
    }

    #[test]
    fn json_rationals_are_strings() {
        let v = build_root_datum(TypeLabel::B, 2).unwrap().to_json();
        assert_eq!(v["inverse_cartan"][1][0], "1/2");
        assert_eq!(v["cartan"][0][1], -2);
    }
}
