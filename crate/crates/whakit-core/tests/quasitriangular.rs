mod common;

use common::{cert, face, sw, zn};
use whakit_core::face_algebra::face_index;
use whakit_core::linalg::SVec;
use whakit_core::quasitriangular::{check_derived_r_identities, check_quasitriangular, solve_r_bar};
use whakit_core::Scalar;

/// `R = Σ_{i,j,p} X^i_j(p) ⊗ X^j_{j+p}(i−j) ω^{−p(i−j)}`, built from the
/// displayed formula.
fn face_r(n: usize) -> SVec<Scalar> {
    let d = n * n * n;
    let mut r = SVec::new();
    for i in 0..n {
        for j in 0..n {
            for p in 0..n {
                let ij = (i + n - j) % n;
                let left = face_index(n, i, j, p);
                let right = face_index(n, j, j + p, ij);
                r.add_at(left * d + right, Scalar::root_of_unity(n as u32, -((p * ij) as i64)));
            }
        }
    }
    r
}

#[test]
fn face_r_matrix_is_the_displayed_one() {
    for n in 2..=4 {
        let q = face(n);
        assert_eq!(q.r(), &face_r(n), "N = {n}");
    }
}

#[test]
fn quasitriangular_checks_pass() {
    for q in [face(2), face(3), sw(), zn(3), zn(5)] {
        let rep = check_quasitriangular(cert(&q), q.r(), q.r_bar());
        assert!(rep.passed(), "{rep}");
        assert!(rep.checks.iter().any(|c| c.name.contains("Yang-Baxter")), "Yang-Baxter is checked");
        let derived = check_derived_r_identities(cert(&q), q.r());
        assert!(derived.passed(), "{derived}");
    }
}

#[test]
fn triangularity_flags() {
    for n in [1, 2, 4] {
        assert!(zn(n).is_triangular());
    }
    assert!(sw().is_triangular());
    assert!(!face(3).is_triangular());
}

#[test]
fn solved_weak_inverse_agrees_with_the_supplied_one() {
    for q in [face(2), face(3), sw()] {
        assert_eq!(solve_r_bar(cert(&q), q.r()).as_ref(), Some(q.r_bar()));
    }
}

#[test]
fn perturbed_r_matrix_fails() {
    let q = face(2);
    let mut r = q.r().clone();
    let k = r.indices().next().unwrap();
    r.add_at(k, Scalar::int(1));
    let rep = check_quasitriangular(cert(&q), &r, q.r_bar());
    assert!(!rep.passed());
    assert!(rep.first_failure().unwrap().witness.is_some());
}

#[test]
fn sweedler_r_matrix_is_hard_coded_r0() {
    // R₀ = ½(1⊗1 + 1⊗g + g⊗1 − g⊗g) on the basis 1, g, h, gh.
    let half = Scalar::rational(1, 2);
    let r0 = SVec::from_pairs([(0, half.clone()), (1, half.clone()), (4, half.clone()), (5, -half)]);
    let q = sw();
    assert_eq!(q.r(), &r0);
    assert_eq!(q.r_bar(), &r0);
}
