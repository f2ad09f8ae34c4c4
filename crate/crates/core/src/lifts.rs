//! Explicit lifts of Weyl groups into GL_n: the permutation and Tits
//! generators of GL_n, the θ-fixed lifts for types B, C and D, and the
//! central-extension lifts into SL_{ℓ+1} and SO_{2ℓ+1}.
//!
//! Indices in the public accessors are 1-based, matching the usual
//! numbering of simple roots.

use crate::error::{Error, Result};
use crate::exactmat::{group_closure, monomial_decompose, ExactMatrix, ThetaInvolution, DEFAULT_CLOSURE_CAP};
use crate::liealg::chevalley_generators;
use crate::report::SuiteReport;
use crate::rootdata::{build_root_datum, folded_basis_vector, reflect, TypeLabel};
use crate::scalars::CycScalar;

fn block(n: usize, i: usize, b: [i64; 4]) -> ExactMatrix {
    let mut rows: Vec<Vec<i64>> = (0..n).map(|r| (0..n).map(|c| (r == c) as i64).collect()).collect();
    let k = i - 1;
    rows[k][k] = b[0];
    rows[k][k + 1] = b[1];
    rows[k + 1][k] = b[2];
    rows[k + 1][k + 1] = b[3];
    ExactMatrix::from_ints(&rows).expect("square")
}

fn product(ms: &[&ExactMatrix]) -> ExactMatrix {
    let mut it = ms.iter();
    let first = (*it.next().expect("nonempty word")).clone();
    it.fold(first, |acc, m| &acc * *m)
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// Generators of the Tits group of GL_n.
#[derive(Debug, Clone)]
pub struct GlGenerators {
    pub n: usize,
    s: Vec<ExactMatrix>,
    sbar: Vec<ExactMatrix>,
    t: Vec<ExactMatrix>,
    sdot: Vec<ExactMatrix>,
}

impl GlGenerators {
    /// Permutation matrix of the transposition (i, i+1).
    pub fn s(&self, i: usize) -> &ExactMatrix {
        &self.s[i - 1]
    }

    /// T_i S_i T_i^{-1}, the transposition block with both entries −1.
    pub fn sbar(&self, i: usize) -> &ExactMatrix {
        &self.sbar[i - 1]
    }

    /// diag(1, …, −1, …, 1) with −1 at position k.
    pub fn t(&self, k: usize) -> &ExactMatrix {
        &self.t[k - 1]
    }

    /// The rotation block [[0, −1], [1, 0]] at (i, i+1).
    pub fn sdot(&self, i: usize) -> &ExactMatrix {
        &self.sdot[i - 1]
    }

    pub fn rank(&self) -> usize {
        self.n - 1
    }

    pub fn all_s(&self) -> &[ExactMatrix] {
        &self.s
    }

    pub fn all_t(&self) -> &[ExactMatrix] {
        &self.t
    }
}

pub fn gl_generators(n: usize) -> Result<GlGenerators> {
    if n < 2 {
        return Err(Error::RankTooSmall {
            type_label: 'A',
            rank: n.saturating_sub(1),
            min: 1,
        });
    }
    let mut t = Vec::with_capacity(n);
    for k in 0..n {
        let d: Vec<i64> = (0..n).map(|j| if j == k { -1 } else { 1 }).collect();
        t.push(ExactMatrix::diag_ints(&d));
    }
    Ok(GlGenerators {
        n,
        s: (1..n).map(|i| block(n, i, [0, 1, 1, 0])).collect(),
        sbar: (1..n).map(|i| block(n, i, [0, -1, -1, 0])).collect(),
        sdot: (1..n).map(|i| block(n, i, [0, -1, 1, 0])).collect(),
        t,
    })
}

/// Relations of the GL_n Tits group in terms of S_i, S̄_i, T_k, plus closure orders for n ≤ 4.
pub fn verify_gl_tits_presentation(n: usize) -> Result<SuiteReport> {
    let g = gl_generators(n)?;
    let l = g.rank();
    let id = ExactMatrix::identity(n);
    let mut r = SuiteReport::new("gl", Some('A'), Some(l));
    r.check(
        "S_i^2 == Id",
        (1..=l).all(|i| (g.s(i) * g.s(i)) == id),
        format!("i = 1..{l}"),
    );
    r.check(
        "T_k^2 == Id",
        (1..=n).all(|k| (g.t(k) * g.t(k)) == id),
        format!("k = 1..{n}"),
    );
    r.check(
        "T_k T_m == T_m T_k",
        (1..=n).all(|a| (1..=n).all(|b| (g.t(a) * g.t(b)) == (g.t(b) * g.t(a)))),
        "",
    );
    let mut cox = true;
    for i in 1..=l {
        for j in i + 1..=l {
            let m = if j - i == 1 { 3 } else { 2 };
            cox &= (g.s(i) * g.s(j)).pow(m)?.is_identity();
        }
    }
    r.check("(S_i S_j)^m == Id", cox, "m = 3 for adjacent, 2 otherwise");
    let mut exch = true;
    for i in 1..=l {
        for k in 1..=n {
            let sk = if k == i {
                i + 1
            } else if k == i + 1 {
                i
            } else {
                k
            };
            exch &= (g.s(i) * g.t(k)) == (g.t(sk) * g.s(i));
        }
    }
    r.check("S_i T_k == T_{s_i(k)} S_i", exch, "");
    r.check(
        "Sbar_i^2 == Id",
        (1..=l).all(|i| (g.sbar(i) * g.sbar(i)) == id),
        "",
    );
    r.check(
        "S_i Sbar_i == Sbar_i S_i == T_i T_{i+1}",
        (1..=l).all(|i| {
            let tt = g.t(i) * g.t(i + 1);
            (g.s(i) * g.sbar(i)) == tt && (g.sbar(i) * g.s(i)) == tt
        }),
        "",
    );
    r.check(
        "Sbar_i == T_i S_i T_i^{-1}",
        (1..=l).all(|i| product(&[g.t(i), g.s(i), g.t(i)]) == *g.sbar(i)),
        "",
    );
    let mut far = true;
    let mut near = true;
    for i in 1..=l {
        for j in 1..=l {
            if i.abs_diff(j) > 1 {
                far &= (g.s(i) * g.sbar(j)).pow(2)?.is_identity()
                    && (g.sbar(i) * g.sbar(j)).pow(2)?.is_identity();
            } else if i.abs_diff(j) == 1 {
                near &= (g.sbar(i) * g.sbar(j)).pow(3)?.is_identity()
                    && product(&[g.s(i), g.s(j), g.s(i)]) == product(&[g.sbar(j), g.sbar(i), g.sbar(j)]);
            }
        }
    }
    r.check("(S_i Sbar_j)^2 == (Sbar_i Sbar_j)^2 == Id, |i-j| > 1", far, "");
    r.check(
        "(Sbar_i Sbar_j)^3 == Id and S_i S_j S_i == Sbar_j Sbar_i Sbar_j, |i-j| = 1",
        near,
        "",
    );
    r.check(
        "sdot_i^2 == T_i T_{i+1}^{-1}",
        (1..=l).all(|i| (g.sdot(i) * g.sdot(i)) == (g.t(i) * g.t(i + 1))),
        "",
    );
    r.check(
        "S_i == T_i sdot_i == sdot_i T_{i+1}",
        (1..=l).all(|i| (g.t(i) * g.sdot(i)) == *g.s(i) && (g.sdot(i) * g.t(i + 1)) == *g.s(i)),
        "",
    );
    r.check(
        "Sbar_i == T_{i+1} sdot_i == sdot_i T_i",
        (1..=l).all(|i| (g.t(i + 1) * g.sdot(i)) == *g.sbar(i) && (g.sdot(i) * g.t(i)) == *g.sbar(i)),
        "",
    );
    if n <= 6 {
        let order = group_closure(g.all_s(), DEFAULT_CLOSURE_CAP)?.order;
        let want = factorial(n);
        r.check("|<S_i>| == n!", order == want, format!("{order} (expected {want})"));
    }
    if n <= 4 {
        let gens: Vec<ExactMatrix> = g.all_s().iter().chain(g.all_t()).cloned().collect();
        let order = group_closure(&gens, DEFAULT_CLOSURE_CAP)?.order;
        let want = (1usize << n) * factorial(n);
        r.check("|<S_i, T_k>| == 2^n n!", order == want, format!("{order} (expected {want})"));
    }
    Ok(r.finish())
}

/// θ-fixed lifts of the simple reflections of a classical type into GL_{2ℓ+1} or GL_{2ℓ}.
#[derive(Debug, Clone)]
pub struct ClassicalLifts {
    pub type_label: TypeLabel,
    pub rank: usize,
    pub n: usize,
    /// S^G_1, …, S^G_ℓ.
    pub s: Vec<ExactMatrix>,
    /// T^G_1, …, T^G_ℓ.
    pub t: Vec<ExactMatrix>,
    /// T^B_0 = T_{ℓ+1}, generating the centre of the type-B Tits group.
    pub t0: Option<ExactMatrix>,
    /// Tits generators ṡ^G_1, …, ṡ^G_ℓ as words in the GL_n Tits generators.
    pub sdot: Vec<ExactMatrix>,
    /// S̃^C_1 = S_ℓ S̄_ℓ.
    pub s_tilde_1: Option<ExactMatrix>,
    /// S_ℓ, the reflection in O_{2ℓ} exchanging the two fork nodes.
    pub outer: Option<ExactMatrix>,
    pub theta: ThetaInvolution,
}

impl ClassicalLifts {
    /// Every named member with a label, for fixedness checks.
    pub fn members(&self) -> Vec<(String, &ExactMatrix)> {
        let g = self.type_label.as_char();
        let mut out = Vec::new();
        for (i, m) in self.s.iter().enumerate() {
            out.push((format!("S^{g}_{}", i + 1), m));
        }
        for (i, m) in self.t.iter().enumerate() {
            out.push((format!("T^{g}_{}", i + 1), m));
        }
        for (i, m) in self.sdot.iter().enumerate() {
            out.push((format!("sdot^{g}_{}", i + 1), m));
        }
        if let Some(m) = &self.t0 {
            out.push(("T^B_0".into(), m));
        }
        if let Some(m) = &self.s_tilde_1 {
            out.push(("S~^C_1".into(), m));
        }
        if let Some(m) = &self.outer {
            out.push((format!("S_{}", self.rank), m));
        }
        out
    }

    /// Identifications S^G_i = (torus element) · ṡ^G_i, as (label, lhs, rhs).
    pub fn identifications(&self) -> Vec<(String, ExactMatrix, ExactMatrix)> {
        let g = self.type_label.as_char();
        let mut out = Vec::new();
        for k in 1..=self.rank {
            let (tlabel, torus) = match (self.type_label, k) {
                (TypeLabel::B, 1) => ("T^B_0".to_string(), self.t0.clone().expect("type B")),
                (TypeLabel::C, 1) => ("Id".to_string(), ExactMatrix::identity(self.n)),
                (TypeLabel::D, 1) => ("T^D_2".to_string(), self.t[1].clone()),
                _ => (format!("T^{g}_{k}"), self.t[k - 1].clone()),
            };
            let rhs = &torus * &self.sdot[k - 1];
            out.push((format!("S^{g}_{k} == {tlabel} sdot^{g}_{k}"), self.s[k - 1].clone(), rhs));
        }
        out
    }
}

/// ṡ^D_1 built from the word ṡ_ℓ ṡ_{ℓ−1} ṡ_{ℓ+1}^{-1} ṡ_ℓ^{-1}.
fn sdot_d1(g: &GlGenerators, l: usize) -> Result<ExactMatrix> {
    Ok(product(&[
        g.sdot(l),
        g.sdot(l - 1),
        &g.sdot(l + 1).inverse()?,
        &g.sdot(l).inverse()?,
    ]))
}

/// The alternative word ṡ_{ℓ−1} ṡ_ℓ ṡ_{ℓ+1}^{-1} ṡ_{ℓ−1}^{-1}; it does not satisfy S^D_1 = T^D_2 ṡ^D_1.
pub fn sdot_d1_alternative_word(rank: usize) -> Result<ExactMatrix> {
    TypeLabel::D.check_rank(rank)?;
    let g = gl_generators(2 * rank)?;
    let l = rank;
    Ok(product(&[
        g.sdot(l - 1),
        g.sdot(l),
        &g.sdot(l + 1).inverse()?,
        &g.sdot(l - 1).inverse()?,
    ]))
}

fn build_lifts(t: TypeLabel, rank: usize) -> Result<ClassicalLifts> {
    t.check_rank(rank)?;
    let l = rank;
    let n = t.gl_dim(l);
    let g = gl_generators(n)?;
    let theta = ThetaInvolution::new(t, l)?;
    let mut s = Vec::with_capacity(l);
    let mut sdot = Vec::with_capacity(l);
    let (mut t0, mut s_tilde_1, mut outer) = (None, None, None);
    let tg: Vec<ExactMatrix> = match t {
        TypeLabel::B => (1..=l).map(|i| g.t(l + 1 - i) * g.t(l + 1 + i)).collect(),
        _ => (1..=l).map(|i| g.t(l + 1 - i) * g.t(l + i)).collect(),
    };
    match t {
        TypeLabel::A => return Err(Error::Unsupported("classical lifts are for types B, C, D".into())),
        TypeLabel::B => {
            s.push(product(&[g.s(l + 1), g.s(l), g.s(l + 1)]));
            sdot.push(product(&[g.sdot(l), g.sdot(l + 1), g.sdot(l)]));
            for k in 2..=l {
                s.push(g.s(l + 1 - k) * g.sbar(l + k));
                sdot.push(g.sdot(l + 1 - k) * g.sdot(l + k));
            }
            t0 = Some(g.t(l + 1).clone());
        }
        TypeLabel::C => {
            s.push(g.t(l) * g.s(l));
            sdot.push(g.sdot(l).clone());
            for k in 2..=l {
                s.push(g.s(l + 1 - k) * g.sbar(l - 1 + k));
                sdot.push(g.sdot(l + 1 - k) * g.sdot(l - 1 + k));
            }
            s_tilde_1 = Some(g.s(l) * g.sbar(l));
        }
        TypeLabel::D => {
            s.push(product(&[g.s(l), g.s(l - 1), g.sbar(l + 1), g.s(l)]));
            sdot.push(sdot_d1(&g, l)?);
            for k in 2..=l {
                s.push(g.s(l + 1 - k) * g.sbar(l - 1 + k));
                sdot.push(g.sdot(l + 1 - k) * g.sdot(l - 1 + k));
            }
            outer = Some(g.s(l).clone());
        }
    }
    Ok(ClassicalLifts {
        type_label: t,
        rank: l,
        n,
        s,
        t: tg,
        t0,
        sdot,
        s_tilde_1,
        outer,
        theta,
    })
}

/// Build the lifts and confirm θ-fixedness and the torus identifications.
pub fn classical_generators(t: TypeLabel, rank: usize) -> Result<ClassicalLifts> {
    let lifts = build_lifts(t, rank)?;
    for (name, m) in lifts.members() {
        if !lifts.theta.is_fixed(m)? {
            return Err(Error::Identification(format!("{name} is not θ_{t}-fixed")));
        }
    }
    for (name, lhs, rhs) in lifts.identifications() {
        if lhs != rhs {
            return Err(Error::Identification(name));
        }
    }
    Ok(lifts)
}

/// Expected order of ⟨S^G_i⟩: 2^ℓℓ! for B, 4^ℓℓ! for C, 2^{ℓ−1}ℓ! for D.
pub fn expected_lift_order(t: TypeLabel, rank: usize) -> usize {
    let f = factorial(rank);
    match t {
        TypeLabel::A => factorial(rank + 1),
        TypeLabel::B => (1 << rank) * f,
        TypeLabel::C => (1 << (2 * rank)) * f,
        TypeLabel::D => (1 << (rank - 1)) * f,
    }
}

/// Largest rank whose closure is computed by [`verify_classical_suite`].
pub const CLASSICAL_CLOSURE_MAX_RANK: usize = 4;

pub(crate) fn coxeter_m(a: &[Vec<i64>], i: usize, j: usize) -> u32 {
    match a[i][j] * a[j][i] {
        0 => 2,
        1 => 3,
        2 => 4,
        _ => 6,
    }
}

/// Relations, identifications, θ-fixedness and closure order of the classical lifts.
pub fn verify_classical_suite(t: TypeLabel, rank: usize) -> Result<SuiteReport> {
    let lifts = build_lifts(t, rank)?;
    let datum = build_root_datum(t, rank)?;
    let g = t.as_char();
    let l = rank;
    let n = lifts.n;
    let id = ExactMatrix::identity(n);
    let mut r = SuiteReport::new("classical", Some(g), Some(l));

    for (name, m) in lifts.members() {
        r.check_result(
            format!("theta_{g}({name}) == {name}"),
            lifts.theta.is_fixed(m).map(|ok| (ok, String::new())),
        );
    }
    for (name, lhs, rhs) in lifts.identifications() {
        r.check(name, lhs == rhs, "");
    }

    let s = &lifts.s;
    for i in 1..=l {
        let sq = &s[i - 1] * &s[i - 1];
        if t == TypeLabel::C && i == 1 {
            r.check("(S^C_1)^2 == T^C_1", sq == lifts.t[0], "");
            r.check("(S^C_1)^2 != Id", sq != id, "non-splitting witness");
        } else {
            r.check(format!("(S^{g}_{i})^2 == Id"), sq == id, "");
        }
    }
    for i in 0..l {
        for j in i + 1..l {
            let (a, b) = (&s[i], &s[j]);
            let (x, y) = (i + 1, j + 1);
            match coxeter_m(&datum.cartan, i, j) {
                2 => {
                    r.check(format!("S^{g}_{x} S^{g}_{y} == S^{g}_{y} S^{g}_{x}"), (a * b) == (b * a), "");
                }
                3 => {
                    r.check(
                        format!("S^{g}_{x} S^{g}_{y} S^{g}_{x} == S^{g}_{y} S^{g}_{x} S^{g}_{y}"),
                        product(&[a, b, a]) == product(&[b, a, b]),
                        "",
                    );
                }
                _ if t == TypeLabel::C => {
                    for (p, q, u, v) in [(a, b, x, y), (b, a, y, x)] {
                        let fourth = (p * q).pow(4)?;
                        let detail = if fourth.is_identity() {
                            String::new()
                        } else {
                            format!("value {}", diagonal_or_full(&fourth))
                        };
                        r.check(format!("(S^C_{u} S^C_{v})^4 == Id"), fourth.is_identity(), detail);
                    }
                    r.check(
                        format!("S^C_{x} S^C_{y} S^C_{x} S^C_{y} == S^C_{y} S^C_{x} S^C_{y} S^C_{x}"),
                        product(&[a, b, a, b]) == product(&[b, a, b, a]),
                        "",
                    );
                }
                _ => {
                    r.check(
                        format!("S^{g}_{x} S^{g}_{y} S^{g}_{x} S^{g}_{y} == S^{g}_{y} S^{g}_{x} S^{g}_{y} S^{g}_{x}"),
                        product(&[a, b, a, b]) == product(&[b, a, b, a]),
                        "",
                    );
                }
            }
        }
    }

    for k in 1..=l {
        r.check_result(
            format!("S^{g}_{k} projects to s_{k}"),
            projection_matches(t, l, k, &s[k - 1]).map(|ok| (ok, String::new())),
        );
    }

    let gl = gl_generators(n)?;
    let theta_action = match t {
        TypeLabel::B => (1..=l).all(|i| lifts.theta.apply(gl.s(i)).ok().as_ref() == Some(gl.sbar(2 * l + 1 - i))),
        TypeLabel::C => (1..=l).all(|i| lifts.theta.apply(gl.s(i)).ok().as_ref() == Some(gl.sbar(2 * l - i))),
        _ => {
            (1..l).all(|i| lifts.theta.apply(gl.s(i)).ok().as_ref() == Some(gl.sbar(2 * l - i)))
                && lifts.theta.apply(gl.s(l)).ok().as_ref() == Some(gl.s(l))
        }
    };
    r.check(format!("theta_{g} action on S_i"), theta_action, "");

    if l <= CLASSICAL_CLOSURE_MAX_RANK {
        let want = expected_lift_order(t, l);
        r.check_result(
            format!("|<S^{g}_i>| == {want}"),
            group_closure(s, DEFAULT_CLOSURE_CAP).map(|c| (c.order == want, c.order.to_string())),
        );
        if let Some(st) = &lifts.s_tilde_1 {
            let mut gens = vec![st.clone()];
            gens.extend(s[1..].iter().cloned());
            let weyl = expected_lift_order(TypeLabel::B, l);
            r.check_result(
                format!("|<S~^C_1, S^C_k>| divides {weyl}"),
                group_closure(&gens, DEFAULT_CLOSURE_CAP).map(|c| {
                    let proper = if c.order < weyl { "proper" } else { "not proper" };
                    (weyl.is_multiple_of(c.order), format!("{} ({proper})", c.order))
                }),
            );
        }
    }
    Ok(r.finish())
}

fn diagonal_or_full(m: &ExactMatrix) -> String {
    if m.is_diagonal() {
        let d: Vec<String> = (0..m.n()).map(|i| m.get(i, i).to_string()).collect();
        format!("diag({})", d.join(", "))
    } else {
        m.to_string().trim_end().replace('\n', " ")
    }
}

/// Whether the permutation part of `m` acts on the folded basis like the simple reflection s_k.
fn projection_matches(t: TypeLabel, rank: usize, k: usize, m: &ExactMatrix) -> Result<bool> {
    let datum = build_root_datum(t, rank)?;
    let (perm, _) = monomial_decompose(m)?;
    for j in 1..=rank {
        let v = folded_basis_vector(t, rank, j);
        let mut moved = vec![num_rational::BigRational::from_integer(0.into()); v.len()];
        for (src, x) in v.iter().enumerate() {
            moved[perm[src]] = x.clone();
        }
        let mut e = vec![num_rational::BigRational::from_integer(0.into()); rank];
        e[j - 1] = num_rational::BigRational::from_integer(1.into());
        let image = reflect(&datum, k, &e)?;
        let want = crate::rootdata::unfold(t, rank, &image);
        if moved != want {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Number of permutations w of {1..n} whose permutation matrix S_w satisfies θ(S_w) ∈ H·S_w.
pub fn theta_fixed_weyl_order(t: TypeLabel, rank: usize) -> Result<usize> {
    const MAX_N: usize = 8;
    let theta = ThetaInvolution::new(t, rank)?;
    let n = theta.n;
    if n > MAX_N {
        return Err(Error::CapExceeded {
            cap: factorial(MAX_N),
            partial: 0,
        });
    }
    let mut perm: Vec<usize> = (0..n).collect();
    let ones = vec![CycScalar::one(); n];
    let mut count = 0;
    loop {
        let m = crate::exactmat::monomial_compose(&perm, &ones)?;
        let (p, _) = monomial_decompose(&theta.apply(&m)?)?;
        if p == perm {
            count += 1;
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    Ok(count)
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let Some(i) = (0..n - 1).rev().find(|&i| p[i] < p[i + 1]) else {
        return false;
    };
    let j = (i + 1..n).rev().find(|&j| p[j] > p[i]).expect("successor exists");
    p.swap(i, j);
    p[i + 1..].reverse();
    true
}

/// σ_i = ζ_{2(ℓ+1)} S_i in SL_{ℓ+1}.
pub fn sl_lift(rank: usize) -> Result<(Vec<ExactMatrix>, SuiteReport)> {
    TypeLabel::A.check_rank(rank)?;
    let n = rank + 1;
    let g = gl_generators(n)?;
    let phase = CycScalar::zeta(2 * n as u32);
    let sigma: Vec<ExactMatrix> = g.all_s().iter().map(|m| m.scale(&phase)).collect();
    let zeta = CycScalar::zeta(n as u32);
    let zeta_id = ExactMatrix::scalar(n, &zeta);
    let mut r = SuiteReport::new("sl", Some('A'), Some(rank));
    r.check("det sigma_i == 1", sigma.iter().all(|m| m.det().is_one()), "");
    r.check("sigma_i^2 == zeta Id", sigma.iter().all(|m| (m * m) == zeta_id), format!("zeta = {zeta}"));
    r.check("zeta^(l+1) == 1", zeta.pow(n as i64)?.is_one(), "");
    let mut comm = true;
    let mut braid = true;
    for i in 0..rank {
        for j in i + 1..rank {
            let (a, b) = (&sigma[i], &sigma[j]);
            if j == i + 1 {
                braid &= product(&[a, b, a]) == product(&[b, a, b]);
            } else {
                comm &= (a * b) == (b * a);
            }
        }
    }
    r.check("sigma_i sigma_j == sigma_j sigma_i, |i-j| > 1", comm, "");
    r.check("sigma_i sigma_j sigma_i == sigma_j sigma_i sigma_j, |i-j| = 1", braid, "");
    if rank <= 3 {
        let want = n * factorial(n);
        r.check_result(
            format!("|<sigma_i>| == {want}"),
            group_closure(&sigma, DEFAULT_CLOSURE_CAP).map(|c| (c.order == want, c.order.to_string())),
        );
    }
    Ok((sigma, r.finish()))
}

/// σ_1 = z S^B_1 with z = −Id, σ_k = S^B_k, all in SO_{2ℓ+1}.
pub fn so_odd_lift(rank: usize) -> Result<(Vec<ExactMatrix>, SuiteReport)> {
    let lifts = classical_generators(TypeLabel::B, rank)?;
    let n = lifts.n;
    let z = lifts
        .t
        .iter()
        .fold(lifts.t0.clone().expect("type B"), |acc, m| &acc * m);
    let mut r = SuiteReport::new("so", Some('B'), Some(rank));
    r.check("z == -Id", z == -ExactMatrix::identity(n), "z = T^B_0 T^B_1 ... T^B_l");
    let mut sigma = lifts.s.clone();
    sigma[0] = &z * &sigma[0];
    r.check("det sigma_i == 1", sigma.iter().all(|m| m.det().is_one()), "");
    r.check("sigma_i^2 == Id", sigma.iter().all(|m| (m * m).is_identity()), "");
    let datum = build_root_datum(TypeLabel::B, rank)?;
    let mut rel = true;
    for i in 0..rank {
        for j in i + 1..rank {
            let m = coxeter_m(&datum.cartan, i, j);
            rel &= (&sigma[i] * &sigma[j]).pow(m as i64)?.is_identity();
        }
    }
    r.check("(sigma_i sigma_j)^m_ij == Id", rel, "");
    if rank <= 3 {
        let want = expected_lift_order(TypeLabel::B, rank);
        r.check_result(
            format!("|<sigma_i>| == {want}"),
            group_closure(&sigma, DEFAULT_CLOSURE_CAP).map(|c| (c.order == want, c.order.to_string())),
        );
    }
    Ok((sigma, r.finish()))
}

/// S_ℓ in O_{2ℓ}: determinant −1, θ_D-fixed, exchanging the fork generators.
pub fn outer_rep_d(rank: usize) -> Result<(ExactMatrix, SuiteReport)> {
    TypeLabel::D.check_rank(rank)?;
    let n = 2 * rank;
    let g = gl_generators(n)?;
    let m = g.s(rank).clone();
    let theta = ThetaInvolution::new(TypeLabel::D, rank)?;
    let ch = chevalley_generators(TypeLabel::D, rank)?;
    let mut r = SuiteReport::new("outer", Some('D'), Some(rank));
    r.check("det S_l == -1", m.det() == CycScalar::from_int(-1), "");
    r.check("S_l^2 == Id", (&m * &m).is_identity(), "");
    r.check("theta_D(S_l) == S_l", theta.is_fixed(&m)?, "");
    let ad = |x: &ExactMatrix| -> Result<ExactMatrix> { m.conjugate(x) };
    r.check(
        "Ad_{S_l} e_1 == e_2 and Ad_{S_l} e_2 == e_1",
        ad(&ch.e[0])? == ch.e[1] && ad(&ch.e[1])? == ch.e[0],
        "",
    );
    r.check(
        "Ad_{S_l} f_1 == f_2 and Ad_{S_l} f_2 == f_1",
        ad(&ch.f[0])? == ch.f[1] && ad(&ch.f[1])? == ch.f[0],
        "",
    );
    Ok((m, r.finish()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> ExactMatrix {
        ExactMatrix::from_ints(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn gl_generator_blocks() {
        let g = gl_generators(2).unwrap();
        assert_eq!(*g.s(1), m(&[&[0, 1], &[1, 0]]));
        assert_eq!(*g.sdot(1), m(&[&[0, -1], &[1, 0]]));
        assert_eq!(g.sdot(1) * g.sdot(1), -ExactMatrix::identity(2));
        let g3 = gl_generators(3).unwrap();
        assert_eq!(*g3.sbar(2), m(&[&[1, 0, 0], &[0, 0, -1], &[0, -1, 0]]));
        assert!(gl_generators(1).is_err());
    }

    #[test]
    fn gl_presentation_small() {
        let r = verify_gl_tits_presentation(3).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(r.find("|<S_i, T_k>| == 2^n n!").unwrap().detail, "48 (expected 48)");
        let r4 = verify_gl_tits_presentation(4).unwrap();
        assert_eq!(r4.find("|<S_i>| == n!").unwrap().detail, "24 (expected 24)");
    }

    #[test]
    fn lift_examples() {
        let b1 = classical_generators(TypeLabel::B, 1).unwrap();
        assert_eq!(b1.s[0], m(&[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]]));
        let c1 = classical_generators(TypeLabel::C, 1).unwrap();
        assert_eq!(c1.s[0], m(&[&[0, -1], &[1, 0]]));
        let d2 = classical_generators(TypeLabel::D, 2).unwrap();
        let g = gl_generators(4).unwrap();
        assert_eq!(d2.s[1], g.s(1) * g.sbar(3));
    }

    #[test]
    fn alternative_d_word_fails_identification() {
        for l in 2..=4 {
            let lifts = classical_generators(TypeLabel::D, l).unwrap();
            let alt = sdot_d1_alternative_word(l).unwrap();
            assert_ne!(lifts.s[0], &lifts.t[1] * &alt);
        }
    }

    #[test]
    fn classical_suites_small() {
        for (t, l) in [(TypeLabel::B, 3), (TypeLabel::C, 1), (TypeLabel::D, 3)] {
            let r = verify_classical_suite(t, l).unwrap();
            assert!(r.passed(), "{r}");
        }
        let c1 = verify_classical_suite(TypeLabel::C, 1).unwrap();
        assert_eq!(c1.find("|<S^C_i>| == 4").unwrap().detail, "4");
    }

    #[test]
    fn symplectic_fourth_power_is_a_torus_element() {
        let r = verify_classical_suite(TypeLabel::C, 2).unwrap();
        let fourth = r.find("(S^C_1 S^C_2)^4 == Id").unwrap();
        assert_eq!(fourth.status, crate::report::Status::Fail);
        assert_eq!(fourth.detail, "value diag(-1, -1, -1, -1)");
        assert_eq!(r.failures().len(), 2, "{r}");
        assert!(r.find("S^C_1 S^C_2 S^C_1 S^C_2 == S^C_2 S^C_1 S^C_2 S^C_1").is_some());
    }

    #[test]
    fn theta_fixed_counts() {
        assert_eq!(theta_fixed_weyl_order(TypeLabel::B, 2).unwrap(), 8);
        assert_eq!(theta_fixed_weyl_order(TypeLabel::C, 2).unwrap(), 8);
        assert_eq!(theta_fixed_weyl_order(TypeLabel::D, 2).unwrap(), 8);
    }

    #[test]
    fn sl_examples() {
        let (sigma, r) = sl_lift(1).unwrap();
        assert!(r.passed(), "{r}");
        let i = CycScalar::imag_unit();
        assert_eq!(sigma[0], m(&[&[0, 1], &[1, 0]]).scale(&i));
        let (_, r2) = sl_lift(2).unwrap();
        assert_eq!(r2.find("|<sigma_i>| == 18").unwrap().detail, "18");
    }

    #[test]
    fn so_examples() {
        let (sigma, r) = so_odd_lift(1).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(sigma[0], -m(&[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]]));
        let (_, r2) = so_odd_lift(2).unwrap();
        assert!(r2.passed(), "{r2}");
    }

    #[test]
    fn outer_examples() {
        let (m, r) = outer_rep_d(2).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(m.det(), CycScalar::from_int(-1));
    }
}
