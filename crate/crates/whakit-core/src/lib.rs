//! Exact-arithmetic toolkit for finite-dimensional quasitriangular weak Hopf
//! algebras, their module and comodule categories, and their Galois objects.

pub mod examples;
pub mod galois;
pub mod face_algebra;
pub mod linalg;
pub mod quasitriangular;
pub mod module_cat;
pub mod report;
pub mod rng;
pub mod scalar;
pub mod transmutation;
pub mod weak_hopf;
pub mod yetter_drinfeld;

pub use num_rational::BigRational as Rational;
pub use scalar::{Field, FieldDesc, Scalar};

/// A weak Hopf algebra over the exact scalars used by the CLI.
pub type Algebra = weak_hopf::WeakHopfAlgebra<Scalar>;
/// A weak Hopf algebra over the rationals.
pub type QAlgebra = weak_hopf::WeakHopfAlgebra<Rational>;
