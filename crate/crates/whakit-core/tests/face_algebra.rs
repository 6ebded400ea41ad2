mod common;

use common::{cert, face, int, rh, x};
use whakit_core::face_algebra::{
    build_face_algebra, certified_cocycle_object, check_expected_tables, check_omega_roundtrip, check_block_decomposition,
    cocycle_galois_object, cocycle_group_probe, component_hopf_algebra, face_index, face_label, omega_project,
    same_class, FaceError,
};
use whakit_core::weak_hopf::WeakHopfAlgebra;
use whakit_core::Scalar;

#[test]
fn face_algebra_shapes() {
    let inst = build_face_algebra(2);
    assert_eq!(inst.constants.labels.len(), 8);
    assert_eq!(face_index(3, 0, 1, 2), 5);
    assert_eq!(face_label(0, 1, 2), "X0_1(2)");
    let q = face(3);
    let h = cert(&q);
    // Δ(X^0_1(2)) has the three terms p + q = 2 mod 3.
    assert_eq!(h.comultiply(&x(3, 0, 1, 2)).nnz(), 3);
}

#[test]
fn transmutation_matches_closed_form() {
    for n in 2..=4 {
        let q = face(n);
        let rep = check_expected_tables(&rh(&q)).unwrap();
        assert!(rep.passed(), "{rep}");
    }
}

#[test]
fn block_decomposition() {
    for n in 2..=4 {
        let rep = check_block_decomposition(n).unwrap();
        assert!(rep.passed(), "{rep}");
    }
}

#[test]
fn components_are_hopf_algebras() {
    let q = face(3);
    let b = rh(&q);
    for i in 0..3 {
        let sc = component_hopf_algebra(&b, i).unwrap();
        assert_eq!(sc.labels.len(), 3);
        let h = WeakHopfAlgebra::from_constants(sc).unwrap();
        let rep = h.check();
        assert!(rep.passed(), "{rep}");
        assert!(h.is_hopf());
    }
    assert!(matches!(component_hopf_algebra(&b, 3), Err(FaceError::BadComponent { .. })));
}

#[test]
fn cocycle_objects_certify() {
    for (n, a) in [(2, int(1)), (2, int(2)), (2, int(-1)), (3, int(1)), (3, int(2))] {
        let b = rh(&face(n));
        let g = certified_cocycle_object(&b, 0, &a).unwrap();
        assert!(g.is_qc_galois(), "{}", g.report);
        assert_eq!(g.algebra.dim(), n * n);
    }
}

#[test]
fn zero_parameter_is_rejected() {
    let b = rh(&face(2));
    assert!(cocycle_galois_object(&b, 0, &int(0)).is_err());
    assert!(matches!(cocycle_galois_object(&b, 2, &int(1)), Err(FaceError::BadComponent { .. })));
}

#[test]
fn omega_round_trip() {
    let b = rh(&face(2));
    for a in [int(1), int(2)] {
        let rep = check_omega_roundtrip(&b, 0, &a).unwrap();
        assert!(rep.passed(), "{rep}");
    }
    let a = cocycle_galois_object(&b, 0, &int(2)).unwrap();
    let block = omega_project(&b, &a, 1).unwrap();
    assert_eq!(block.space.dim(), 2);
    assert_eq!(block.hopf.dim(), 2);
}

#[test]
fn group_probe_multiplies_parameters() {
    let b = rh(&face(2));
    let obj = |a: &Scalar| cocycle_galois_object(&b, 0, a).unwrap();
    let half = Scalar::rational(1, 2);
    let pairs = [(int(1), int(1), int(1)), (int(2), int(3), int(6)), (int(2), half, int(1)), (int(-1), int(-1), int(1))];
    for (p, r, expected) in pairs {
        assert_eq!(cocycle_group_probe(&b, &obj(&p), &obj(&r)).unwrap(), expected);
    }
    let b3 = rh(&face(3));
    let a = cocycle_galois_object(&b3, 0, &int(2)).unwrap();
    let c = cocycle_galois_object(&b3, 0, &int(5)).unwrap();
    assert_eq!(cocycle_group_probe(&b3, &a, &c).unwrap(), int(10));
}

#[test]
fn class_comparison() {
    assert_eq!(same_class(&int(2), &int(8), 2), Some(true));
    assert_eq!(same_class(&int(2), &int(3), 2), Some(false));
    assert_eq!(same_class(&int(-1), &int(1), 3), Some(true));
    assert_eq!(same_class(&int(2), &int(1), 3), Some(false));
    assert_eq!(same_class(&int(2), &int(1), 4), None);
    assert_eq!(same_class(&Scalar::rational(9, 4), &int(1), 2), Some(true));
    assert_eq!(same_class(&int(0), &int(1), 2), None);
}
