#![allow(dead_code)]

use whakit_core::examples::{group_zn, sweedler};
use whakit_core::face_algebra::{build_face_algebra, face_index};
use whakit_core::linalg::SVec;
use whakit_core::quasitriangular::QtAlgebra;
use whakit_core::transmutation::{transmute, BraidedHopf};
use whakit_core::weak_hopf::Certified;
use whakit_core::Scalar;

pub fn face(n: usize) -> QtAlgebra<Scalar> {
    build_face_algebra(n).certify().expect("face algebra certifies")
}

pub fn sw() -> QtAlgebra<Scalar> {
    sweedler().certify().expect("sweedler certifies")
}

pub fn zn(n: usize) -> QtAlgebra<Scalar> {
    group_zn(n).certify().expect("group algebra certifies")
}

pub fn rh(q: &QtAlgebra<Scalar>) -> BraidedHopf<Scalar> {
    transmute(q).expect("transmutes")
}

pub fn cert(q: &QtAlgebra<Scalar>) -> &Certified<Scalar> {
    q
}

pub fn int(n: i64) -> Scalar {
    Scalar::int(n)
}

/// `X^i_j(s)` as a vector.
pub fn x(n: usize, i: usize, j: usize, s: usize) -> SVec<Scalar> {
    SVec::unit(face_index(n, i, j, s))
}

/// `1^i = Σ_p X^i_i(p)`.
pub fn one_i(n: usize, i: usize) -> SVec<Scalar> {
    (0..n).fold(SVec::new(), |acc, p| acc.sum(&x(n, i, i, p)))
}

/// A pseudo-random vector with small integer coefficients.
pub fn sample_vec(rng: &mut whakit_core::rng::Lcg, dim: usize, terms: usize) -> SVec<Scalar> {
    let mut v = SVec::new();
    for _ in 0..terms {
        let i = rng.below(dim as u32) as usize;
        v.add_at(i, int(rng.small_int(4)));
    }
    v
}
