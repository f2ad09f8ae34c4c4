//! Acceptance criteria, one test per criterion. Every comparison is exact.
//!
//! Each test writes a single `criterion N: PASS|FAIL ...` line straight to
//! stderr so the summary shows up even when the harness captures output, then
//! asserts. Expected values are written out here from closed forms or group
//! orders, independently of the library code under test.

use std::io::Write;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use weyl_lifts::clifford::{
    clifford_closure, pin_weyl_lift, spin_lift_b, verify_pin_gl_suite, verify_pin_suite, verify_spin_suite,
    CliffordElement,
};
use weyl_lifts::exactmat::{group_closure, ExactMatrix, DEFAULT_CLOSURE_CAP};
use weyl_lifts::lifts::{
    classical_generators, gl_generators, sl_lift, so_odd_lift, theta_fixed_weyl_order, verify_classical_suite,
    verify_gl_tits_presentation,
};
use weyl_lifts::liealg::{exp_quarter_j, theta_fixed_dimension, verify_adjoint_suite, verify_serre};
use weyl_lifts::quat::{hat_embedding, quat_weyl_closure, so3_lift, su2_to_so3, Quaternion};
use weyl_lifts::report::SuiteReport;
use weyl_lifts::rootdata::{build_root_datum, fundamental_group, rational_matmul, rational_transpose, TypeLabel};
use weyl_lifts::scalars::{rational_to_string, CycScalar};

use TypeLabel::{A, B, C, D};

fn record(n: u32, title: &str, failures: &[String]) {
    let status = if failures.is_empty() { "PASS" } else { "FAIL" };
    let mut line = format!("criterion {n:>2}: {status} {title}");
    if !failures.is_empty() {
        line.push_str(&format!(" ({} failing: {})", failures.len(), failures.join("; ")));
    }
    let _ = writeln!(std::io::stderr(), "{line}");
    assert!(failures.is_empty(), "{line}");
}

fn suite_failures(label: &str, r: &SuiteReport, out: &mut Vec<String>) {
    for c in r.failures() {
        if c.detail.is_empty() {
            out.push(format!("{label}: {}", c.name));
        } else {
            out.push(format!("{label}: {} [{}]", c.name, c.detail));
        }
    }
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// Printed Cartan matrix, a_ij = ⟨α_j, α_i∨⟩.
fn printed_cartan(t: TypeLabel, l: usize) -> Vec<Vec<i64>> {
    let mut a = vec![vec![0i64; l]; l];
    for i in 0..l {
        a[i][i] = 2;
        if i + 1 < l {
            a[i][i + 1] = -1;
            a[i + 1][i] = -1;
        }
    }
    match t {
        B => a[0][1] = -2,
        C => a[1][0] = -2,
        D => {
            a[0][1] = 0;
            a[1][0] = 0;
            if l >= 3 {
                for (i, j) in [(0, 2), (2, 0), (1, 2), (2, 1)] {
                    a[i][j] = -1;
                }
            }
        }
        A => {}
    }
    a
}

/// Printed closed form of the inverse Cartan matrix, entries as (numerator, denominator).
fn printed_inverse(t: TypeLabel, l: usize) -> Vec<Vec<(i64, i64)>> {
    let li = l as i64;
    let tail = |i: i64, j: i64| (li + 1 - i).min(li + 1 - j);
    (1..=li)
        .map(|i| {
            (1..=li)
                .map(|j| match t {
                    A => (i.min(j) * (li + 1 - i.max(j)), li + 1),
                    B if j == 1 => (li + 1 - i, 2),
                    C if i == 1 => (li + 1 - j, 2),
                    D if i <= 2 && j <= 2 => (if i == j { li } else { li - 2 }, 4),
                    D if i <= 2 => (li + 1 - j, 2),
                    D if j <= 2 => (li + 1 - i, 2),
                    _ => (tail(i, j), 1),
                })
                .collect()
        })
        .collect()
}

fn ratio(n: i64, d: i64) -> num_rational::BigRational {
    num_rational::BigRational::new(n.into(), d.into())
}

#[test]
fn criterion_01_cartan_matrices_and_inverses() {
    let mut bad = Vec::new();
    for t in [A, B, C, D] {
        for l in 2..=5 {
            if t == D && l < 3 {
                // The printed D matrix has the fork at nodes 1, 2 joined to node 3.
                continue;
            }
            let datum = build_root_datum(t, l).unwrap();
            if datum.cartan != printed_cartan(t, l) {
                bad.push(format!("{t}{l} Cartan {:?}", datum.cartan));
            }
            let printed: Vec<Vec<_>> = printed_inverse(t, l)
                .into_iter()
                .map(|row| row.into_iter().map(|(n, d)| ratio(n, d)).collect())
                .collect();
            if datum.inverse_cartan != printed {
                bad.push(format!("{t}{l} inverse differs from the printed closed form"));
            }
            let a: Vec<Vec<_>> = datum.cartan.iter().map(|r| r.iter().map(|&x| ratio(x, 1)).collect()).collect();
            let prod = rational_matmul(&a, &rational_transpose(&printed));
            let is_id = prod
                .iter()
                .enumerate()
                .all(|(i, r)| r.iter().enumerate().all(|(j, x)| *x == ratio((i == j) as i64, 1)));
            if !is_id {
                let row0: Vec<String> = prod[0].iter().map(rational_to_string).collect();
                bad.push(format!("{t}{l} A*C^T != Id (row 1 = [{}])", row0.join(", ")));
            }
        }
    }
    record(1, "Cartan matrices, printed inverses, A*C^T = Id", &bad);
}

#[test]
fn criterion_02_fundamental_groups() {
    let mut bad = Vec::new();
    for l in 2..=6 {
        let want = [
            (A, vec![l as i64 + 1]),
            (B, vec![2]),
            (C, vec![2]),
            (D, if l % 2 == 0 { vec![2, 2] } else { vec![4] }),
        ];
        for (t, w) in want {
            let got = fundamental_group(t, l).unwrap();
            if got != w {
                bad.push(format!("{t}{l}: {got:?} (expected {w:?})"));
            }
        }
    }
    record(2, "fundamental group invariants", &bad);
}

#[test]
fn criterion_03_gl_presentation() {
    let mut bad = Vec::new();
    for n in 2..=6 {
        let r = verify_gl_tits_presentation(n).unwrap();
        suite_failures(&format!("GL{n}"), &r, &mut bad);
        let g = gl_generators(n).unwrap();
        if n <= 4 {
            let s = group_closure(g.all_s(), DEFAULT_CLOSURE_CAP).unwrap().order;
            if s != factorial(n) {
                bad.push(format!("GL{n}: |<S_i>| = {s}"));
            }
            let gens: Vec<ExactMatrix> = g.all_s().iter().chain(g.all_t()).cloned().collect();
            let st = group_closure(&gens, DEFAULT_CLOSURE_CAP).unwrap().order;
            if st != (1 << n) * factorial(n) {
                bad.push(format!("GL{n}: |<S_i, T_k>| = {st}"));
            }
        }
    }
    record(3, "GL_n Tits presentation and closure orders", &bad);
}

#[test]
fn criterion_04_splitting_for_b_and_d() {
    let mut bad = Vec::new();
    for (t, l, want) in [(B, 2, 8), (B, 3, 48), (D, 2, 4), (D, 3, 24), (D, 4, 192)] {
        let lifts = classical_generators(t, l).unwrap();
        let order = group_closure(&lifts.s, DEFAULT_CLOSURE_CAP).unwrap().order;
        if order != want {
            bad.push(format!("{t}{l}: order {order} (expected {want})"));
        }
    }
    for (t, ls) in [(B, 1..=4), (D, 2..=4)] {
        for l in ls {
            let lifts = classical_generators(t, l).unwrap();
            for (i, s) in lifts.s.iter().enumerate() {
                if !(s * s).is_identity() {
                    bad.push(format!("{t}{l}: (S_{})^2 != Id", i + 1));
                }
            }
            suite_failures(&format!("{t}{l}"), &verify_classical_suite(t, l).unwrap(), &mut bad);
        }
    }
    record(4, "B and D lifts split", &bad);
}

#[test]
fn criterion_05_non_splitting_for_c() {
    let mut bad = Vec::new();
    for l in 1..=4 {
        let lifts = classical_generators(C, l).unwrap();
        let sq = &lifts.s[0] * &lifts.s[0];
        if sq != lifts.t[0] || sq.is_identity() {
            bad.push(format!("C{l}: (S_1)^2 is not T_1 != Id"));
        }
        if l >= 2 {
            let p = &lifts.s[0] * &lifts.s[1];
            let fourth = p.pow(4).unwrap();
            if !fourth.is_identity() {
                let d: Vec<String> = (0..fourth.n()).map(|i| fourth.get(i, i).to_string()).collect();
                bad.push(format!("C{l}: (S_1 S_2)^4 = diag({})", d.join(", ")));
            }
        }
        if l <= 3 {
            let want = 4usize.pow(l as u32) * factorial(l);
            let order = group_closure(&lifts.s, DEFAULT_CLOSURE_CAP).unwrap().order;
            if order != want {
                bad.push(format!("C{l}: order {order} (expected {want})"));
            }
        }
        let r = verify_classical_suite(C, l).unwrap();
        suite_failures(&format!("C{l} suite"), &r, &mut bad);
    }
    record(5, "C lifts do not split; relation suite incl. (S_1 S_2)^4 = 1", &bad);
}

#[test]
fn criterion_06_theta_machinery() {
    let mut bad = Vec::new();
    for t in [B, C, D] {
        for l in t.min_rank().max(1)..=4 {
            let lifts = classical_generators(t, l).unwrap();
            for (name, m) in lifts.members() {
                if !lifts.theta.is_fixed(m).unwrap() {
                    bad.push(format!("{t}{l}: {name} not theta-fixed"));
                }
            }
        }
    }
    for (t, ls) in [(B, 1..=3), (C, 1..=4), (D, 2..=4)] {
        for l in ls {
            let want = (1 << l) * factorial(l);
            let got = theta_fixed_weyl_order(t, l).unwrap();
            if got != want {
                bad.push(format!("{t}{l}: {got} theta-fixed permutations (expected {want})"));
            }
        }
    }
    record(6, "theta-fixedness and theta-fixed Weyl permutations", &bad);
}

#[test]
fn criterion_07_tits_identification() {
    let mut bad = Vec::new();
    for l in 1..=4 {
        let g = gl_generators(l + 1).unwrap();
        for i in 1..=l {
            if exp_quarter_j(A, l, i).unwrap() != *g.sdot(i) {
                bad.push(format!("A{l}: exp(pi/2 J_{i}) != sdot_{i}"));
            }
        }
    }
    for t in [B, C, D] {
        for l in t.min_rank()..=4 {
            let lifts = classical_generators(t, l).unwrap();
            for i in 1..=l {
                match exp_quarter_j(t, l, i) {
                    Ok(m) if m == lifts.sdot[i - 1] => {}
                    Ok(_) => bad.push(format!("{t}{l}: exp(pi/2 J_{i}) != sdot_{i}")),
                    Err(e) => bad.push(format!("{t}{l}: exp(pi/2 J_{i}): {e}")),
                }
            }
            for (name, lhs, rhs) in lifts.identifications() {
                if lhs != rhs {
                    bad.push(format!("{t}{l}: {name}"));
                }
            }
        }
    }
    record(7, "exp(pi/2 J_i) equals the Tits generators", &bad);
}

#[test]
fn criterion_08_lie_algebra() {
    let mut bad = Vec::new();
    for t in [A, B, C, D] {
        for l in t.min_rank()..=4 {
            suite_failures(&format!("{t}{l}"), &verify_serre(t, l).unwrap(), &mut bad);
            let want = match t {
                A => continue,
                B | C => l * (2 * l + 1),
                D => l * (2 * l - 1),
            };
            let got = theta_fixed_dimension(t, l).unwrap();
            if got != want {
                bad.push(format!("{t}{l}: theta-fixed dimension {got} (expected {want})"));
            }
        }
    }
    record(8, "Serre relations and theta-fixed subalgebra dimensions", &bad);
}

#[test]
fn criterion_09_adjoint_tables() {
    let mut bad = Vec::new();
    let mut errata = 0;
    for t in [A, B, C, D] {
        for l in t.min_rank()..=4 {
            let r = verify_adjoint_suite(t, l).unwrap();
            errata += r.checks.iter().filter(|c| c.detail.contains("erratum")).count();
            suite_failures(&format!("{t}{l}"), &r, &mut bad);
        }
    }
    let _ = writeln!(std::io::stderr(), "note: {errata} adjoint checks carry an erratum flag");
    record(9, "adjoint case tables against exact conjugation", &bad);
}

#[test]
fn criterion_10_sl_and_so_lifts() {
    let mut bad = Vec::new();
    for l in 1..=3 {
        let (sigma, r) = sl_lift(l).unwrap();
        suite_failures(&format!("SL{}", l + 1), &r, &mut bad);
        let sq = &sigma[0] * &sigma[0];
        match sq.scalar_value() {
            Some(z) if z.pow(l as i64 + 1).unwrap().is_one() => {}
            _ => bad.push(format!("SL{}: sigma_1^2 is not a root of unity times Id", l + 1)),
        }
        let want = (l + 1) * factorial(l + 1);
        let order = group_closure(&sigma, DEFAULT_CLOSURE_CAP).unwrap().order;
        if order != want {
            bad.push(format!("SL{}: order {order} (expected {want})", l + 1));
        }
        let (so, r) = so_odd_lift(l).unwrap();
        suite_failures(&format!("SO{}", 2 * l + 1), &r, &mut bad);
        if so.iter().any(|m| !m.det().is_one()) {
            bad.push(format!("SO{}: determinant != 1", 2 * l + 1));
        }
        let want = (1 << l) * factorial(l);
        let order = group_closure(&so, DEFAULT_CLOSURE_CAP).unwrap().order;
        if order != want {
            bad.push(format!("SO{}: order {order} (expected {want})", 2 * l + 1));
        }
    }
    record(10, "SL and odd SO lifts", &bad);
}

#[test]
fn criterion_11_pin_and_spin() {
    let mut bad = Vec::new();
    for n in 2..=7 {
        suite_failures(&format!("Pin-GL{n}"), &verify_pin_gl_suite(n).unwrap(), &mut bad);
    }
    for (t, l, want) in [(B, 2, 16), (B, 3, 96), (D, 2, 8), (D, 3, 48)] {
        let lift = pin_weyl_lift(t, l).unwrap();
        let order = clifford_closure(&lift.gens, DEFAULT_CLOSURE_CAP).unwrap().order;
        if order != want {
            bad.push(format!("Pin {t}{l}: order {order} (expected {want})"));
        }
        suite_failures(&format!("Pin {t}{l}"), &verify_pin_suite(t, l).unwrap(), &mut bad);
    }
    // B_1 has no double-cover order to compare, only the relation suite.
    suite_failures("Pin B1", &verify_pin_suite(B, 1).unwrap(), &mut bad);
    for l in 2..=3 {
        let lift = spin_lift_b(l).unwrap();
        let one = CliffordElement::one(2 * l + 1).unwrap();
        let want = if l % 2 == 0 { one.clone() } else { -&one };
        if lift.gens[0].try_mul(&lift.gens[0]).unwrap() != want {
            bad.push(format!("Spin B{l}: (S~_1)^2 != (-1)^{l}"));
        }
        if !lift.gens.iter().all(CliffordElement::is_even) {
            bad.push(format!("Spin B{l}: odd generator"));
        }
        suite_failures(&format!("Spin B{l}"), &verify_spin_suite(l).unwrap(), &mut bad);
    }
    record(11, "Pin and Spin lifts", &bad);
}

#[test]
fn criterion_12_quaternions() {
    let mut bad = Vec::new();
    let j = Quaternion::j();
    if &j * &j != -Quaternion::one() {
        bad.push("j^2 != -1".into());
    }
    let rot = su2_to_so3(&j).unwrap();
    if rot != ExactMatrix::diag_ints(&[-1, 1, -1]) {
        bad.push(format!("su2_to_so3(j) = {rot}"));
    }
    match so3_lift(&rot) {
        Ok(q) if q == j || q == -&j => {}
        other => bad.push(format!("so3_lift(diag(-1, 1, -1)) = {other:?}")),
    }
    let (c, _) = quat_weyl_closure(1, 100).unwrap();
    if c.order != 4 {
        bad.push(format!("quaternionic closure for m = 1 has order {}", c.order));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let mut det_bad = 0;
    for _ in 0..10_000 {
        let q = Quaternion::from_ints(
            rng.gen_range(-1000..=1000),
            rng.gen_range(-1000..=1000),
            rng.gen_range(-1000..=1000),
            rng.gen_range(-1000..=1000),
        );
        let norm: i64 = q.q.iter().map(|x| x.to_integer()).map(|x| i64::try_from(&x * &x).unwrap()).sum();
        if hat_embedding(&q).det() != CycScalar::from_int(norm) {
            det_bad += 1;
        }
    }
    if det_bad > 0 {
        bad.push(format!("det hat(q) != Nm(q) for {det_bad} of 10000 samples"));
    }
    record(12, "quaternions, SU(2) -> SO(3), hat embedding", &bad);
}
