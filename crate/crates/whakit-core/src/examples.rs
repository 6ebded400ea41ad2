//! Small named instances: Sweedler's four-dimensional algebra, cyclic group
//! algebras and the Klein four-group algebra.

use thiserror::Error;

use crate::linalg::SVec;
use crate::quasitriangular::{QtAlgebra, QtError};
use crate::scalar::Scalar;
use crate::weak_hopf::{StructureConstants, WeakHopfAlgebra, WhaError};

/// Structure constants plus an R-matrix and its weak inverse, both on `H ⊗ H`.
#[derive(Debug, Clone)]
pub struct QtInstance {
    pub constants: StructureConstants<Scalar>,
    pub r: SVec<Scalar>,
    pub r_bar: SVec<Scalar>,
}

#[derive(Debug, Clone, Error)]
pub enum InstanceError {
    #[error(transparent)]
    WeakHopf(#[from] WhaError),
    #[error(transparent)]
    Quasitriangular(#[from] QtError),
}

impl QtInstance {
    /// Certifies the algebra and then the R-matrix pair.
    pub fn certify(self) -> Result<QtAlgebra<Scalar>, InstanceError> {
        let alg = WeakHopfAlgebra::from_constants(self.constants)?.certify()?;
        Ok(QtAlgebra::certify(alg, self.r, Some(self.r_bar))?)
    }
}

fn q(n: i64, d: i64) -> Scalar {
    Scalar::rational(n, d)
}

/// Sweedler's algebra with basis `1, g, h, gh` and the triangular structure
/// `R₀ = ½(1⊗1 + 1⊗g + g⊗1 − g⊗g)`.
pub fn sweedler() -> QtInstance {
    // Words in g, h reduced with g² = 1, h² = 0, hg = -gh.
    // Basis index: 0 = 1, 1 = g, 2 = h, 3 = gh.
    let word = |i: usize| -> (usize, usize) { (i & 1, i >> 1) }; // (g power, h power)
    let mut mult = Vec::new();
    for a in 0..4 {
        for b in 0..4 {
            let (ga, ha) = word(a);
            let (gb, hb) = word(b);
            if ha + hb > 1 {
                continue;
            }
            // g^ga h^ha g^gb h^hb = (-1)^(ha*gb) g^(ga+gb) h^(ha+hb)
            let sign = if ha * gb == 1 { -1 } else { 1 };
            let k = ((ga + gb) % 2) | ((ha + hb) << 1);
            mult.push((a, b, k, Scalar::int(sign)));
        }
    }
    let one = Scalar::int(1);
    let comult = vec![
        (0, 0, 0, one.clone()),
        (1, 1, 1, one.clone()),
        // Δ(h) = 1⊗h + h⊗g
        (2, 0, 2, one.clone()),
        (2, 2, 1, one.clone()),
        // Δ(gh) = g⊗gh + gh⊗1
        (3, 1, 3, one.clone()),
        (3, 3, 0, one.clone()),
    ];
    let antipode = vec![
        (0, 0, one.clone()),
        (1, 1, one.clone()),
        (2, 3, one.clone()),
        (3, 2, Scalar::int(-1)),
    ];
    let antipode_inverse = vec![
        (0, 0, one.clone()),
        (1, 1, one.clone()),
        (2, 3, Scalar::int(-1)),
        (3, 2, one.clone()),
    ];
    let constants = StructureConstants {
        name: "sweedler".into(),
        labels: ["1", "g", "h", "gh"].iter().map(|s| s.to_string()).collect(),
        mult,
        unit: vec![(0, one.clone())],
        comult,
        counit: vec![(0, one.clone()), (1, one.clone())],
        antipode,
        antipode_inverse: Some(antipode_inverse),
    };
    let r = SVec::from_pairs([(0, q(1, 2)), (1, q(1, 2)), (4, q(1, 2)), (5, q(-1, 2))]);
    QtInstance { constants, r: r.clone(), r_bar: r }
}

/// The group algebra of `Z_n` with `R = R̄ = 1⊗1`.
pub fn group_zn(n: usize) -> QtInstance {
    let one = Scalar::int(1);
    let mut mult = Vec::new();
    let mut comult = Vec::new();
    let mut antipode = Vec::new();
    for a in 0..n {
        for b in 0..n {
            mult.push((a, b, (a + b) % n, one.clone()));
        }
        comult.push((a, a, a, one.clone()));
        antipode.push((a, (n - a) % n, one.clone()));
    }
    let constants = StructureConstants {
        name: format!("group_zn:{n}"),
        labels: (0..n).map(|a| format!("g{a}")).collect(),
        mult,
        unit: vec![(0, one.clone())],
        comult,
        counit: (0..n).map(|a| (a, one.clone())).collect(),
        antipode,
        antipode_inverse: None,
    };
    let r = SVec::single(0, one);
    QtInstance { constants, r: r.clone(), r_bar: r }
}

/// The group algebra of `Z_2 × Z_2` with `R = R̄ = 1⊗1`.
pub fn group_z2z2() -> QtInstance {
    let one = Scalar::int(1);
    let mut mult = Vec::new();
    let mut comult = Vec::new();
    let mut antipode = Vec::new();
    for a in 0..4usize {
        for b in 0..4usize {
            mult.push((a, b, a ^ b, one.clone()));
        }
        comult.push((a, a, a, one.clone()));
        antipode.push((a, a, one.clone()));
    }
    let constants = StructureConstants {
        name: "group_z2z2".into(),
        labels: ["e", "x", "y", "xy"].iter().map(|s| s.to_string()).collect(),
        mult,
        unit: vec![(0, one.clone())],
        comult,
        counit: (0..4).map(|a| (a, one.clone())).collect(),
        antipode,
        antipode_inverse: None,
    };
    let r = SVec::single(0, one);
    QtInstance { constants, r: r.clone(), r_bar: r }
}
