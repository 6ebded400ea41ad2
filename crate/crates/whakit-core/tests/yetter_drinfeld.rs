mod common;

use common::{cert, face, rh, sw, zn};
use whakit_core::linalg::{LinMap, SVec};
use whakit_core::module_cat::{braiding_c, HModule};
use whakit_core::yetter_drinfeld::{
    check_comodule_braiding, check_equivalence_roundtrip, check_induced_braiding, check_rh_comodule, check_yd,
    comodule_braiding, comodule_tensor, default_comodule_samples, functor_f, functor_g, induced_yd, RhComodule,
    YdModule,
};
use whakit_core::Scalar;

#[test]
fn induced_modules_are_yetter_drinfeld() {
    for q in [face(2), face(3), sw(), zn(3)] {
        let h = cert(&q);
        for m in [HModule::regular(h), HModule::unit_object(h)] {
            let rep = check_yd(h, &induced_yd(&q, &m));
            assert!(rep.passed(), "{rep}");
        }
    }
}

#[test]
fn naive_coaction_on_face_regular_module_fails() {
    let q = face(2);
    let h = cert(&q);
    let reg = HModule::regular(h);
    let d = h.dim();
    let coaction = LinMap::from_fn(d * d, d, |j| h.unit().kron(&SVec::unit(j), d));
    let y = YdModule::new(h, reg, coaction).unwrap();
    assert!(!check_yd(h, &y).passed());
}

#[test]
fn trivial_r_induces_the_trivial_coaction() {
    let q = zn(3);
    let h = cert(&q);
    let reg = HModule::regular(h);
    let y = induced_yd(&q, &reg);
    let expected = LinMap::from_fn(9, 3, |j| h.unit().kron(&SVec::unit(j), 3));
    assert!(y.coaction.map_eq(&expected));
}

#[test]
fn face_induced_coaction_is_the_r_contraction() {
    // Oracle: ρ(m) = Σ R² ⊗ R¹m with R read off its terms and multiplied in H.
    let q = face(2);
    let h = cert(&q);
    let d = h.dim();
    let y = induced_yd(&q, &HModule::regular(h));
    for j in 0..d {
        let mut expected = SVec::new();
        for (r1, r2, c) in q.r_terms() {
            expected.add_scaled(&SVec::unit(r2).kron(&h.multiply(&SVec::unit(r1), &SVec::unit(j)), d), &c);
        }
        assert_eq!(y.coaction.column(j), &expected);
    }
}

#[test]
fn g_of_an_induced_module_is_trivial() {
    for q in [face(2), face(3), sw()] {
        let b = rh(&q);
        let h = cert(&q);
        for m in [HModule::regular(h), HModule::unit_object(h)] {
            let g = functor_g(&b, &induced_yd(&q, &m)).unwrap();
            assert_eq!(g, RhComodule::trivial(&b, &m));
        }
    }
}

#[test]
fn f_of_a_trivial_comodule_is_induced() {
    for q in [face(2), sw()] {
        let b = rh(&q);
        let h = cert(&q);
        let m = HModule::regular(h);
        assert_eq!(functor_f(&b, &RhComodule::trivial(&b, &m)), induced_yd(&q, &m));
    }
}

#[test]
fn f_of_the_regular_comodule_is_yetter_drinfeld() {
    for q in [face(2), face(3), sw()] {
        let b = rh(&q);
        let x = RhComodule::regular(&b);
        assert!(check_rh_comodule(&b, &x).passed());
        let rep = check_yd(cert(&q), &functor_f(&b, &x));
        assert!(rep.passed(), "{rep}");
    }
}

#[test]
fn zero_module_goes_to_zero_module() {
    let q = face(2);
    let b = rh(&q);
    let zero = HModule::zero(cert(&q));
    let y = functor_f(&b, &RhComodule::trivial(&b, &zero));
    assert_eq!(y.dim(), 0);
    assert_eq!(functor_g(&b, &y).unwrap().dim(), 0);
}

#[test]
fn equivalence_round_trip() {
    for q in [face(2), face(3), sw(), zn(3)] {
        let b = rh(&q);
        let rep = check_equivalence_roundtrip(&b, &default_comodule_samples(&b));
        assert!(rep.passed(), "{rep}");
    }
}

#[test]
fn tensor_of_trivial_comodules_is_trivial() {
    let q = face(2);
    let b = rh(&q);
    let h = cert(&q);
    let reg = RhComodule::trivial(&b, &HModule::regular(h));
    let ht = RhComodule::trivial(&b, b.unit_object());
    let (t, _) = comodule_tensor(&b, &reg, &ht).unwrap();
    assert_eq!(t, RhComodule::trivial(&b, &t.module));
    let (rr, tt) = comodule_tensor(&b, &RhComodule::regular(&b), &RhComodule::regular(&b)).unwrap();
    assert_eq!(tt.dim(), 8);
    assert!(check_rh_comodule(&b, &rr).passed());
}

#[test]
fn comodule_braiding_on_trivial_comodules_is_the_module_braiding() {
    for q in [face(2), sw(), zn(3)] {
        let b = rh(&q);
        let h = cert(&q);
        let m = HModule::regular(h);
        let n = b.unit_object().clone();
        let (fwd, _) = comodule_braiding(&b, &RhComodule::trivial(&b, &m), &RhComodule::trivial(&b, &n)).unwrap();
        assert!(fwd.map_eq(&braiding_c(&q, &m, &n).unwrap().map));
    }
    let q = zn(3);
    let b = rh(&q);
    let t = RhComodule::trivial(&b, &HModule::regular(cert(&q)));
    let (fwd, _) = comodule_braiding(&b, &t, &t).unwrap();
    assert!(fwd.map_eq(&LinMap::swap(3, 3)));
}

#[test]
fn regular_comodule_braiding_is_invertible() {
    let q = face(2);
    let b = rh(&q);
    let r = RhComodule::regular(&b);
    let (fwd, bwd) = comodule_braiding(&b, &r, &r).unwrap();
    assert_eq!(fwd.rank(), 8);
    assert!(fwd.compose(&bwd).unwrap().is_identity());
    assert!(bwd.compose(&fwd).unwrap().is_identity());
}

#[test]
fn braiding_checks_pass() {
    for q in [face(2), sw()] {
        let b = rh(&q);
        let samples = default_comodule_samples(&b);
        let rep = check_comodule_braiding(&b, &samples, 0);
        assert!(rep.passed(), "{rep}");
        let h = cert(&q);
        let plain: Vec<HModule<Scalar>> = vec![HModule::regular(h), HModule::unit_object(h)];
        let rep = check_induced_braiding(&q, &plain);
        assert!(rep.passed(), "{rep}");
    }
}
