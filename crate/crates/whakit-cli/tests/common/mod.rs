#![allow(dead_code)]

use std::path::PathBuf;

use whakit_cli::bundle::{to_canonical_json, AlgebraBundle, ComoduleAlgebraBundle, ModuleBundle};
use whakit_cli::catalog::catalog_bundle;
use whakit_core::examples::QtInstance;
use whakit_core::face_algebra::cocycle_galois_object;
use whakit_core::galois::{twisted_klein_algebra, ComoduleAlgebra};
use whakit_core::module_cat::HModule;
use whakit_core::transmutation::{transmute, BraidedHopf};
use whakit_core::weak_hopf::Certified;
use whakit_core::yetter_drinfeld::RhComodule;
use whakit_core::Scalar;

pub fn fixture_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("fixtures")
}

pub fn fixture(name: &str) -> String {
    fixture_dir().join(name).to_string_lossy().into_owned()
}

pub fn algebra(name: &str) -> AlgebraBundle {
    catalog_bundle(name).expect("catalog name")
}

pub fn braided(base: &AlgebraBundle) -> BraidedHopf<Scalar> {
    transmute(&base.to_qt().expect("certifies")).expect("transmutes")
}

fn cocycle(base: &AlgebraBundle, b: &BraidedHopf<Scalar>, i: usize, a: &str) -> String {
    let a = Scalar::parse(a, base.field_desc()).expect("scalar");
    let obj = cocycle_galois_object(b, i, &a).expect("cocycle object");
    to_canonical_json(&ComoduleAlgebraBundle::from_algebra(base.clone(), b, &obj))
}

/// The twenty fixture bundles, built from the library.
pub fn fixture_set() -> Vec<(String, String)> {
    let mut out = Vec::new();
    let mut push = |name: &str, text: String| out.push((name.to_string(), text));
    for (file, name) in [
        ("sweedler.json", "sweedler"),
        ("group_z1.json", "group_zn:1"),
        ("group_z2.json", "group_zn:2"),
        ("group_z3.json", "group_zn:3"),
        ("group_z5.json", "group_zn:5"),
        ("group_z2z2.json", "group_z2z2"),
        ("face_2.json", "face:2"),
        ("face_3.json", "face:3"),
        ("face_4.json", "face:4"),
    ] {
        push(file, to_canonical_json(&algebra(name)));
    }

    let face2 = algebra("face:2");
    let b2 = braided(&face2);
    for (file, a) in [("face_2_A_1.json", "1"), ("face_2_A_2.json", "2"), ("face_2_A_-1.json", "-1"), ("face_2_A_1_2.json", "1/2")] {
        push(file, cocycle(&face2, &b2, 0, a));
    }
    let face3 = algebra("face:3");
    let b3 = braided(&face3);
    for (file, a) in [("face_3_A_1.json", "1"), ("face_3_A_2.json", "2")] {
        push(file, cocycle(&face3, &b3, 0, a));
    }

    let klein = algebra("group_z2z2");
    let bk = braided(&klein);
    let clifford = twisted_klein_algebra(&bk).expect("control algebra");
    push("clifford_z2z2.json", to_canonical_json(&ComoduleAlgebraBundle::from_algebra(klein, &bk, &clifford)));

    let sw = algebra("sweedler");
    let bs = braided(&sw);
    let reg = ComoduleAlgebra::regular(&bs).with_name("R(sweedler)");
    push("sweedler_rh.json", to_canonical_json(&ComoduleAlgebraBundle::from_algebra(sw, &bs, &reg)));

    let h2: &Certified<Scalar> = b2.base();
    push("face_2_regular_module.json", to_canonical_json(&ModuleBundle::from_module(&HModule::regular(h2))));
    let ht = b2.unit_object().clone();
    let triv = RhComodule::trivial(&b2, &ht);
    push("face_2_ht_module.json", to_canonical_json(&ModuleBundle::from_module(&ht).with_coaction_rh(&triv.coaction)));
    let hs: &Certified<Scalar> = bs.base();
    push("sweedler_regular_module.json", to_canonical_json(&ModuleBundle::from_module(&HModule::regular(hs))));
    out
}

/// Load into core structures and serialize again.
pub fn reserialize(name: &str, text: &str) -> String {
    let v: serde_json::Value = serde_json::from_str(text).unwrap();
    if v.get("base").is_some() {
        let cb: ComoduleAlgebraBundle = serde_json::from_str(text).unwrap();
        let b = braided(&cb.base);
        let a = cb.to_algebra(&b).unwrap();
        to_canonical_json(&ComoduleAlgebraBundle::from_algebra(cb.base.clone(), &b, &a))
    } else if v.get("action").is_some() {
        let mb: ModuleBundle = serde_json::from_str(text).unwrap();
        let base = algebra(&mb.algebra);
        let b = braided(&base);
        let h: &Certified<Scalar> = b.base();
        let m: HModule<Scalar> = mb.to_module(h, base.field_desc()).unwrap();
        let mut out = ModuleBundle::from_module(&m);
        if let Some(t) = &mb.coaction_rh {
            out = out.with_coaction_rh(&mb.coaction_map(t, b.dim(), base.field_desc()).unwrap());
        }
        to_canonical_json(&out)
    } else {
        let ab = AlgebraBundle::from_json(text).unwrap();
        let (constants, r) = ab.to_instance().unwrap();
        let (r, r_bar) = r.unwrap_or_else(|| panic!("{name} has no R-matrix"));
        let inst = QtInstance { constants, r, r_bar: r_bar.unwrap() };
        to_canonical_json(&AlgebraBundle::from_instance(&inst, ab.field_desc()))
    }
}
