mod common;

use common::{cert, face, sw, zn};
use whakit_core::linalg::{LinMap, VectorSpace};
use whakit_core::module_cat::{
    braiding_c, check_module, check_monoidal_coherence, left_unitor_ambient, truncated_tensor, unitors, HModule,
};
use whakit_core::Scalar;

#[test]
fn regular_and_unit_modules_are_modules() {
    for q in [face(2), sw(), zn(3)] {
        let h = cert(&q);
        assert!(check_module(h, &HModule::regular(h)).passed());
        assert!(check_module(h, &HModule::unit_object(h)).passed());
    }
}

#[test]
fn transposed_regular_action_is_not_a_module() {
    let q = sw();
    let h = cert(&q);
    let reg = HModule::regular(h);
    let action = reg.actions().iter().map(LinMap::transpose).collect();
    let bad = HModule::new("transposed", h, VectorSpace::numbered("e", 4), action).unwrap();
    let rep = check_module(h, &bad);
    assert!(!rep.passed());
    assert!(rep.first_failure().unwrap().witness.is_some());
}

#[test]
fn truncated_tensor_dimensions() {
    // Δ(1) = Σ X^i_i(u) ⊗ X^{i+u}_{i+u}(v) keeps X^a_b(s) ⊗ X^c_d(t) exactly
    // when c = a + s, so the regular square has dimension N⁵.
    for n in 2..=3usize {
        let q = face(n);
        let h = cert(&q);
        let reg = HModule::regular(h);
        let t = truncated_tensor(h, &reg, &reg).unwrap();
        assert_eq!(t.dim(), n.pow(5));
        assert_eq!(t.ambient_dim(), n.pow(6));
    }
    let q = sw();
    let h = cert(&q);
    let reg = HModule::regular(h);
    assert_eq!(truncated_tensor(h, &reg, &reg).unwrap().dim(), 16);
}

#[test]
fn unitors_are_inverse_pairs() {
    for q in [face(2), sw()] {
        let h = cert(&q);
        for m in [HModule::regular(h), HModule::unit_object(h)] {
            let u = unitors(h, &m).unwrap();
            assert!(u.left.compose(&u.left_inv).unwrap().is_identity());
            assert!(u.left_inv.compose(&u.left).unwrap().is_identity());
            assert!(u.right.compose(&u.right_inv).unwrap().is_identity());
            assert!(u.right_inv.compose(&u.right).unwrap().is_identity());
        }
    }
}

#[test]
fn unit_object_left_unitor_is_multiplication() {
    let q = face(2);
    let h = cert(&q);
    let ht = h.target();
    let unit = HModule::unit_object(h);
    let l = left_unitor_ambient(h, &unit);
    let dt = ht.dim();
    for a in 0..dt {
        for b in 0..dt {
            let prod = h.multiply(ht.basis_vector(a), ht.basis_vector(b));
            let got = ht.inclusion().apply(l.column(a * dt + b));
            assert_eq!(got, prod);
        }
    }
}

#[test]
fn trivial_r_braiding_is_the_flip() {
    let q = zn(3);
    let h = cert(&q);
    let reg = HModule::regular(h);
    let c = braiding_c(&q, &reg, &reg).unwrap();
    assert!(c.map.map_eq(&LinMap::swap(3, 3)));
}

#[test]
fn triangular_braiding_squares_to_identity() {
    let q = sw();
    let h = cert(&q);
    let reg = HModule::regular(h);
    let c = braiding_c(&q, &reg, &reg).unwrap();
    assert!(c.map.compose(&c.map).unwrap().is_identity());
    assert!(c.map.compose(&c.inverse).unwrap().is_identity());
}

#[test]
fn face_braiding_inverse_comes_from_r_bar() {
    let q = face(2);
    let h = cert(&q);
    let reg = HModule::regular(h);
    let c = braiding_c(&q, &reg, &reg).unwrap();
    assert_eq!(c.map.rank(), c.source.dim());
    assert!(c.map.compose(&c.inverse).unwrap().is_identity());
    assert!(c.inverse.compose(&c.map).unwrap().is_identity());
    assert_eq!(c.map.compose(&c.map).unwrap().is_identity(), q.is_triangular());
}

#[test]
fn face_braiding_is_not_symmetric_for_n_3() {
    let q = face(3);
    let h = cert(&q);
    let reg = HModule::regular(h);
    let c = braiding_c(&q, &reg, &reg).unwrap();
    assert!(!q.is_triangular());
    assert!(!c.map.compose(&c.map).unwrap().is_identity());
}

#[test]
fn monoidal_coherence() {
    for q in [face(2), sw(), zn(3)] {
        let h = cert(&q);
        let samples: Vec<HModule<Scalar>> = vec![HModule::regular(h), HModule::unit_object(h)];
        let rep = check_monoidal_coherence(&q, &samples, 0);
        assert!(rep.passed(), "{rep}");
    }
}
