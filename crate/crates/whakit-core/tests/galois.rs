mod common;

use common::{cert, face, int, rh, sw};
use whakit_core::examples::group_z2z2;
use whakit_core::face_algebra::cocycle_galois_object;
use whakit_core::galois::{
    certify_galois, check_autoequivalence_diagram, check_group_law, check_identity_cotensor, check_identity_law,
    check_inverse_law, check_trivializable, coinvariants, cotensor, counit_map, galois_map_beta, inverse_galois_object,
    is_cocommutative, is_quantum_commutative, twisted_klein_algebra, xi_iso, ComoduleAlgebra, Side,
};
use whakit_core::linalg::{LinMap, SVec};
use whakit_core::module_cat::HModule;
use whakit_core::yetter_drinfeld::{default_comodule_samples, RhComodule};
use whakit_core::Scalar;

fn klein() -> whakit_core::quasitriangular::QtAlgebra<Scalar> {
    group_z2z2().certify().unwrap()
}

#[test]
fn regular_object_is_qc_galois() {
    for q in [face(2), face(3), sw()] {
        let b = rh(&q);
        let g = certify_galois(&b, ComoduleAlgebra::regular(&b));
        assert!(g.is_galois, "{}", g.report);
        assert!(g.quantum_commutative && g.cocommutative);
        assert!(g.is_qc_galois());
    }
}

#[test]
fn base_algebra_is_not_galois() {
    let q = face(2);
    let b = rh(&q);
    let a = ComoduleAlgebra::base_algebra(&b);
    assert!(!certify_galois(&b, a.clone()).is_galois);
    let beta = galois_map_beta(&b, &a, Side::Left).unwrap();
    assert!(beta.rank() < beta.cols().max(beta.rows()));
}

#[test]
fn regular_coinvariants_are_the_unit_object() {
    for n in [2, 3] {
        let q = face(n);
        let b = rh(&q);
        let a = ComoduleAlgebra::regular(&b);
        for side in [Side::Left, Side::Right] {
            let co = coinvariants(&b, &a, side).unwrap();
            assert_eq!(co.dim(), n);
            assert!(co.same_as(&a.unit.image()));
        }
    }
}

#[test]
fn cotensor_with_regular_is_identity() {
    for q in [face(2), sw()] {
        let b = rh(&q);
        let reg = ComoduleAlgebra::regular(&b);
        for n in default_comodule_samples(&b) {
            let cot = cotensor(&b, &reg, &n).unwrap();
            assert_eq!(cot.dim(), n.dim());
            let eps = counit_map(&b, &cot, &n.module).unwrap();
            assert_eq!(eps.rank(), n.dim());
        }
        let rep = check_identity_cotensor(&b, &default_comodule_samples(&b));
        assert!(rep.passed(), "{rep}");
    }
}

#[test]
fn xi_is_an_isomorphism() {
    let q = face(2);
    let b = rh(&q);
    let reg = RhComodule::regular(&b);
    for a in [ComoduleAlgebra::regular(&b), cocycle_galois_object(&b, 0, &int(2)).unwrap()] {
        let xi = xi_iso(&b, &a, &reg, &reg).unwrap();
        assert_eq!(xi.map.rank(), xi.source.dim());
    }
}

#[test]
fn autoequivalence_diagram_commutes() {
    let q = face(2);
    let b = rh(&q);
    let reg = RhComodule::regular(&b);
    let triv = RhComodule::trivial(&b, &HModule::regular(cert(&q)));
    for a in [ComoduleAlgebra::regular(&b), cocycle_galois_object(&b, 0, &int(-1)).unwrap()] {
        for n in [&reg, &triv] {
            let c = check_autoequivalence_diagram(&b, &a, &reg, n);
            assert!(c.passed, "{}", c.name);
        }
    }
}

#[test]
fn clifford_control_is_galois_but_breaks_the_diagram() {
    let q = klein();
    let b = rh(&q);
    let a = twisted_klein_algebra(&b).unwrap();
    let g = certify_galois(&b, a.clone());
    assert!(g.is_galois, "{}", g.report);
    assert!(g.cocommutative);
    assert!(!g.quantum_commutative);
    assert!(!is_quantum_commutative(&b, &a).unwrap());
    let reg = RhComodule::regular(&b);
    let c = check_autoequivalence_diagram(&b, &a, &reg, &reg);
    assert!(!c.passed);
    assert!(c.witness.is_some());
}

#[test]
fn perturbed_face_multiplication_does_not_certify() {
    let q = face(2);
    let b = rh(&q);
    let a = cocycle_galois_object(&b, 0, &int(2)).unwrap();
    let d = a.dim();
    // e0_1 · e0_1 = 2 e0_0 becomes 3 e0_0 in block 0 only.
    let mult = LinMap::from_fn(d, d * d, |col| {
        if col == d + 1 {
            SVec::single(0, int(3))
        } else {
            a.mult.column(col).clone()
        }
    });
    let bad = ComoduleAlgebra::new(&b, a.module.clone(), mult, a.unit.clone(), a.left.clone(), a.right.clone()).unwrap();
    let g = certify_galois(&b, bad);
    assert!(!g.is_galois);
    assert_eq!(g.report.first_failure().unwrap().name, "algebra A[2]: multiplication is H-linear");
}

#[test]
fn regular_object_flags() {
    let q = sw();
    let b = rh(&q);
    let a = ComoduleAlgebra::regular(&b);
    assert!(is_quantum_commutative(&b, &a).unwrap());
    assert!(is_cocommutative(&b, &a).unwrap());
}

#[test]
fn group_identity_and_inverse_laws() {
    for q in [face(2), sw()] {
        let b = rh(&q);
        let reg = ComoduleAlgebra::regular(&b);
        let (rep, prod) = check_group_law(&b, &reg, &reg);
        assert!(rep.passed(), "{rep}");
        assert_eq!(prod.unwrap().algebra.dim(), b.dim());
        let rep = check_identity_law(&b, &reg);
        assert!(rep.passed(), "{rep}");
        let rep = check_inverse_law(&b, &reg);
        assert!(rep.passed(), "{rep}");
    }
    let q = face(2);
    let b = rh(&q);
    let a = cocycle_galois_object(&b, 0, &int(2)).unwrap();
    let inv = inverse_galois_object(&b, &a).unwrap();
    assert_eq!(inv.dim(), a.dim());
    assert!(check_inverse_law(&b, &a).passed());
    assert!(check_identity_law(&b, &a).passed());
}

#[test]
fn qc_objects_are_trivializable() {
    let q = face(2);
    let b = rh(&q);
    let h = cert(&q);
    let samples = vec![HModule::regular(h), b.unit_object().clone()];
    for a in [ComoduleAlgebra::regular(&b), cocycle_galois_object(&b, 0, &int(2)).unwrap()] {
        let rep = check_trivializable(&b, &a, &samples, 7);
        assert!(rep.passed(), "{rep}");
    }
}
