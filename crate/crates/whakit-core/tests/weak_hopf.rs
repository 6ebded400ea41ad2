mod common;

use common::{cert, face, int, one_i, sample_vec, sw, x, zn};
use num_traits::Zero;
use whakit_core::face_algebra::face_index;
use whakit_core::linalg::{LinMap, SVec};
use whakit_core::rng::Lcg;
use whakit_core::weak_hopf::WeakHopfAlgebra;
use whakit_core::Scalar;

#[test]
fn face_multiplication_composes_paths() {
    let q = face(4);
    let h = cert(&q);
    assert_eq!(h.multiply(&x(4, 1, 2, 0), &x(4, 2, 3, 0)), x(4, 1, 3, 0));
    assert!(h.multiply(&x(4, 1, 2, 0), &x(4, 3, 3, 0)).is_zero());
    assert!(h.multiply(&x(4, 1, 2, 0), &x(4, 2, 3, 1)).is_zero());
}

#[test]
fn sweedler_relations() {
    let q = sw();
    let h = cert(&q);
    let (g, hh) = (SVec::unit(1), SVec::unit(2));
    assert_eq!(h.multiply(&g, &hh), h.multiply(&hh, &g).scaled(&int(-1)));
    assert!(h.multiply(&hh, &hh).is_zero());
    assert_eq!(h.multiply(&g, &g), SVec::unit(0));
    assert_eq!(h.antipode(&hh), SVec::unit(3));
}

#[test]
fn unit_is_neutral() {
    for q in [face(2), face(3), sw(), zn(4)] {
        let h = cert(&q);
        for i in 0..h.dim() {
            let e = SVec::unit(i);
            assert_eq!(h.multiply(h.unit(), &e), e);
            assert_eq!(h.multiply(&e, h.unit()), e);
        }
    }
}

#[test]
fn face_unit_is_sum_of_diagonal_paths() {
    for n in 2..=4 {
        let q = face(n);
        let one = (0..n).fold(SVec::new(), |acc, i| acc.sum(&one_i(n, i)));
        assert_eq!(cert(&q).unit(), &one);
    }
}

#[test]
fn full_checks_pass() {
    for q in [face(2), face(3), sw(), zn(3)] {
        let rep = cert(&q).check();
        assert!(rep.passed(), "{rep}");
    }
    assert!(cert(&sw()).is_hopf());
    assert!(!cert(&face(2)).is_hopf());
    assert!(cert(&face(3)).is_regular());
}

#[test]
fn identity_antipode_breaks_axiom_iv_at_h() {
    let q = sw();
    let bad: WeakHopfAlgebra<Scalar> = cert(&q).algebra().with_antipode(LinMap::identity(4));
    let rep = bad.check();
    let fail = rep.first_failure().expect("identity is not an antipode");
    assert!(fail.name.starts_with("axiom (iv)"), "{}", fail.name);
    assert_eq!(fail.witness.as_ref().unwrap().labels, vec!["h".to_string()]);
}

/// `ε_t(h) = ε(1₁h)1₂` from the face algebra formulas, computed directly:
/// `Δ(1) = Σ_{i,u,v} X^i_i(u) ⊗ X^{i+u}_{i+u}(v)`.
fn face_eps_t_oracle(n: usize, i: usize, _j: usize, s: usize) -> SVec<Scalar> {
    let mut out = SVec::new();
    for a in 0..n {
        for u in 0..n {
            // X^a_a(u) X^i_j(s) = δ_{a,i} δ_{u,s} X^a_j(u), counit δ_{u,0}.
            if a == i && u == s && u == 0 {
                for v in 0..n {
                    out.add_at(face_index(n, a + u, a + u, v), int(1));
                }
            }
        }
    }
    out
}

#[test]
fn face_target_map_matches_direct_evaluation() {
    for n in 2..=3 {
        let q = face(n);
        let h = cert(&q);
        for (i, j, s) in (0..n).flat_map(|i| (0..n).flat_map(move |j| (0..n).map(move |s| (i, j, s)))) {
            assert_eq!(h.epsilon_t(&x(n, i, j, s)), face_eps_t_oracle(n, i, j, s), "eps_t(X{i}_{j}({s}))");
        }
    }
    // Frozen: ε_t(X⁰₀(1)) = 0 and ε_t(X⁰₀(0)) = 1⁰ for N = 2.
    let q = face(2);
    assert!(cert(&q).epsilon_t(&x(2, 0, 0, 1)).is_zero());
    assert_eq!(cert(&q).epsilon_t(&x(2, 0, 0, 0)), one_i(2, 0));
}

#[test]
fn target_and_source_dimensions() {
    for n in 2..=4 {
        let q = face(n);
        let h = cert(&q);
        assert_eq!(h.target().dim(), n);
        for i in 0..n {
            assert!(h.target().contains(&one_i(n, i)));
        }
    }
    for q in [sw(), zn(2), zn(5)] {
        let h = cert(&q);
        assert_eq!(h.target().dim(), 1);
        assert_eq!(h.source().dim(), 1);
        assert!(h.target().contains(h.unit()));
    }
    let q = sw();
    assert_eq!(cert(&q).epsilon_t(&SVec::unit(1)), SVec::unit(0));
}

#[test]
fn operations_are_multilinear() {
    let q = face(3);
    let h = cert(&q);
    let d = h.dim();
    let mut rng = Lcg::new(7);
    for _ in 0..100 {
        let a = sample_vec(&mut rng, d, 3);
        let b = sample_vec(&mut rng, d, 3);
        let y = sample_vec(&mut rng, d, 3);
        let c = int(rng.small_int(5));
        let lin = a.sum(&b.scaled(&c));
        assert_eq!(h.multiply(&lin, &y), h.multiply(&a, &y).sum(&h.multiply(&b, &y).scaled(&c)));
        assert_eq!(h.multiply(&y, &lin), h.multiply(&y, &a).sum(&h.multiply(&y, &b).scaled(&c)));
        assert_eq!(h.comultiply(&lin), h.comultiply(&a).sum(&h.comultiply(&b).scaled(&c)));
        assert_eq!(h.antipode(&lin), h.antipode(&a).sum(&h.antipode(&b).scaled(&c)));
        assert_eq!(h.counit(&lin), h.counit(&a) + &(h.counit(&b) * &c));
    }
    assert!(h.counit(&SVec::new()).is_zero());
}

#[test]
fn constants_round_trip() {
    let q = face(2);
    let sc = cert(&q).to_constants();
    let again = WeakHopfAlgebra::from_constants(sc.clone()).unwrap().to_constants();
    assert_eq!(sc, again);
}
