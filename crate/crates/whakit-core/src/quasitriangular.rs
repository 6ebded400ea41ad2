//! R-matrices on certified weak Hopf algebras.

use std::ops::Deref;

use thiserror::Error;

use crate::linalg::{LinMap, SVec};
use crate::report::{first_witness, CheckResult, VerificationReport, Witness};
use crate::scalar::Field;
use crate::weak_hopf::Certified;

#[derive(Debug, Clone, Error)]
pub enum QtError {
    #[error("no weak inverse supplied for the R-matrix")]
    MissingInverse,
    #[error("the weak inverse of the R-matrix could not be solved for")]
    InverseUnsolvable,
    #[error("antipode of {0} is not invertible")]
    AntipodeNotInvertible(String),
    #[error("R-matrix on {name} failed certification: {first}")]
    NotCertified { name: String, first: String, report: Box<VerificationReport> },
}

/// A certified quasitriangular weak Hopf algebra `(H, R, R̄)`.
#[derive(Clone, Debug)]
pub struct QtAlgebra<F> {
    alg: Certified<F>,
    r: SVec<F>,
    r_bar: SVec<F>,
    triangular: bool,
    report: VerificationReport,
}

impl<F: Field> Deref for QtAlgebra<F> {
    type Target = Certified<F>;

    fn deref(&self) -> &Self::Target {
        &self.alg
    }
}

fn vec_witness<F: Field>(h: &Certified<F>, legs: usize, lhs: &SVec<F>, rhs: &SVec<F>) -> Option<Witness> {
    (lhs != rhs).then(|| Witness::new(vec![], vec![], h.render(lhs, legs), h.render(rhs, legs)))
}

fn basis_witness<F: Field>(
    h: &Certified<F>,
    i: usize,
    legs: usize,
    lhs: &SVec<F>,
    rhs: &SVec<F>,
) -> Option<Witness> {
    (lhs != rhs).then(|| Witness::new(vec![i], vec![h.label(i).to_string()], h.render(lhs, legs), h.render(rhs, legs)))
}

fn element_witness<F: Field>(h: &Certified<F>, name: &str, x: &SVec<F>, lhs: &SVec<F>, rhs: &SVec<F>) -> Option<Witness> {
    (lhs != rhs).then(|| {
        Witness::new(vec![], vec![format!("{name} = {}", h.render(x, 1))], h.render(lhs, 2), h.render(rhs, 2))
    })
}

/// Checks the defining conditions of a quasitriangular structure together
/// with the weak-inverse sandwich identities and Yang–Baxter.
pub fn check_quasitriangular<F: Field>(h: &Certified<F>, r: &SVec<F>, r_bar: &SVec<F>) -> VerificationReport {
    let d = h.dim();
    let mut rep = VerificationReport::new(format!("quasitriangular structure on {}", h.name()));
    let d1 = h.delta_one_cached().clone();
    let d1_cop = h.flip(&d1);
    let r_cop = h.flip(r);
    rep.push(CheckResult::from_witness(
        "R lies in Delta^cop(1) (H (x) H) Delta(1)",
        vec_witness(h, 2, &h.tmul(&h.tmul(&d1_cop, r, 2), &d1, 2), r),
    ));
    let r12 = h.insert_unit(r, 2, 2);
    let r13 = h.insert_unit(r, 2, 1);
    let r23 = h.insert_unit(r, 2, 0);
    rep.push(CheckResult::from_witness(
        "(id (x) Delta) R = R13 R12",
        vec_witness(h, 3, &h.comul_leg(r, 2, 1), &h.tmul(&r13, &r12, 3)),
    ));
    rep.push(CheckResult::from_witness(
        "(Delta (x) id) R = R13 R23",
        vec_witness(h, 3, &h.comul_leg(r, 2, 0), &h.tmul(&r13, &r23, 3)),
    ));
    rep.push(CheckResult::from_witness(
        "Delta^cop(h) R = R Delta(h)",
        first_witness(d, |i| {
            let dh = h.coprod(i);
            basis_witness(h, i, 2, &h.tmul(&h.flip(dh), r, 2), &h.tmul(r, dh, 2))
        }),
    ));
    rep.push(CheckResult::from_witness(
        "Rbar lies in Delta(1) (H (x) H) Delta^cop(1)",
        vec_witness(h, 2, &h.tmul(&h.tmul(&d1, r_bar, 2), &d1_cop, 2), r_bar),
    ));
    rep.push(CheckResult::from_witness(
        "R Rbar = Delta^op(1)",
        vec_witness(h, 2, &h.tmul(r, r_bar, 2), &d1_cop),
    ));
    rep.push(CheckResult::from_witness(
        "Rbar R = Delta(1)",
        vec_witness(h, 2, &h.tmul(r_bar, r, 2), &d1),
    ));
    rep.push(
        CheckResult::from_witness(
            "R Rbar R = R and Rbar R Rbar = Rbar",
            vec_witness(h, 2, &h.tmul(&h.tmul(r, r_bar, 2), r, 2), r)
                .or_else(|| vec_witness(h, 2, &h.tmul(&h.tmul(r_bar, r, 2), r_bar, 2), r_bar)),
        )
        .internal(),
    );
    rep.push(
        CheckResult::from_witness(
            "Yang-Baxter R12 R13 R23 = R23 R13 R12",
            vec_witness(
                h,
                3,
                &h.tmul(&h.tmul(&r12, &r13, 3), &r23, 3),
                &h.tmul(&h.tmul(&r23, &r13, 3), &r12, 3),
            ),
        )
        .internal(),
    );
    rep.flag("triangular", *r_bar == r_cop);
    rep
}

/// Identities that follow from the quasitriangular axioms: how `R` absorbs
/// elements of `H_s`, `H_t` and the images of `R` under the counital maps.
pub fn check_derived_r_identities<F: Field>(h: &Certified<F>, r: &SVec<F>) -> VerificationReport {
    let d = h.dim();
    let mut rep = VerificationReport::new(format!("derived R identities on {}", h.name()));
    let one = h.unit().clone();
    let hs = h.source();
    let ht = h.target();
    let s = h.antipode_map();
    let both = |name: &str, f: &(dyn Fn(&SVec<F>) -> (SVec<F>, SVec<F>) + Sync), basis: &crate::linalg::Subspace<F>, var: &str| {
        CheckResult::from_witness(
            name.to_string(),
            first_witness(basis.dim(), |k| {
                let x = basis.basis_vector(k);
                let (l, r) = f(x);
                element_witness(h, var, x, &l, &r)
            }),
        )
        .internal()
    };
    let t = |a: &SVec<F>, b: &SVec<F>| a.kron(b, d);
    rep.push(both(
        "(1 (x) z) R = R (z (x) 1) for z in H_t",
        &|z| (h.tmul(&t(&one, z), r, 2), h.tmul(r, &t(z, &one), 2)),
        ht,
        "z",
    ));
    rep.push(both(
        "(y (x) 1) R = R (1 (x) y) for y in H_s",
        &|y| (h.tmul(&t(y, &one), r, 2), h.tmul(r, &t(&one, y), 2)),
        hs,
        "y",
    ));
    rep.push(both(
        "(z (x) 1) R = (1 (x) S(z)) R for z in H_t",
        &|z| (h.tmul(&t(z, &one), r, 2), h.tmul(&t(&one, &s.apply(z)), r, 2)),
        ht,
        "z",
    ));
    rep.push(both(
        "(1 (x) y) R = (S(y) (x) 1) R for y in H_s",
        &|y| (h.tmul(&t(&one, y), r, 2), h.tmul(&t(&s.apply(y), &one), r, 2)),
        hs,
        "y",
    ));
    rep.push(both(
        "R (y (x) 1) = R (1 (x) S(y)) for y in H_s",
        &|y| (h.tmul(r, &t(y, &one), 2), h.tmul(r, &t(&one, &s.apply(y)), 2)),
        hs,
        "y",
    ));
    rep.push(both(
        "R (1 (x) z) = R (S(z) (x) 1) for z in H_t",
        &|z| (h.tmul(r, &t(&one, z), 2), h.tmul(r, &t(&s.apply(z), &one), 2)),
        ht,
        "z",
    ));
    let d1 = h.delta_one_cached().clone();
    let d1_cop = h.flip(&d1);
    let et = h.epsilon_t_map();
    let es = h.epsilon_s_map();
    let cases: [(&str, SVec<F>, SVec<F>); 4] = [
        ("(eps_s (x) id) R = Delta(1)", h.map_leg(r, 2, 0, &es), d1.clone()),
        ("(id (x) eps_s) R = (S (x) id) Delta^cop(1)", h.map_leg(r, 2, 1, &es), h.map_leg(&d1_cop, 2, 0, s)),
        ("(eps_t (x) id) R = Delta^cop(1)", h.map_leg(r, 2, 0, &et), d1_cop.clone()),
        ("(id (x) eps_t) R = (S (x) id) Delta(1)", h.map_leg(r, 2, 1, &et), h.map_leg(&d1, 2, 0, s)),
    ];
    for (name, l, rr) in cases {
        rep.push(CheckResult::from_witness(name, vec_witness(h, 2, &l, &rr)).internal());
    }
    rep
}

/// Solves `R̄` from `R R̄ = Δ^op(1)`, `R̄ R = Δ(1)` and the membership
/// `R̄ = Δ(1) R̄ Δ^cop(1)`, all linear in `R̄`.
pub fn solve_r_bar<F: Field>(h: &Certified<F>, r: &SVec<F>) -> Option<SVec<F>> {
    let d = h.dim();
    let dd = d * d;
    let d1 = h.delta_one_cached().clone();
    let d1_cop = h.flip(&d1);
    let cols = (0..dd)
        .map(|k| {
            let x = SVec::unit(k);
            let a = h.tmul(r, &x, 2);
            let b = h.tmul(&x, r, 2).remap(|i| i + dd);
            let c = h.tmul(&h.tmul(&d1, &x, 2), &d1_cop, 2).sub(&x).remap(|i| i + 2 * dd);
            a.sum(&b).sum(&c)
        })
        .collect();
    let system = LinMap::from_columns(3 * dd, cols);
    let rhs = d1_cop.sum(&d1.remap(|i| i + dd));
    system.solve(&rhs)
}

impl<F: Field> QtAlgebra<F> {
    /// Certifies `(H, R, R̄)`; when `r_bar` is `None` it is solved for.
    pub fn certify(alg: Certified<F>, r: SVec<F>, r_bar: Option<SVec<F>>) -> Result<Self, QtError> {
        if alg.antipode_inverse().is_none() {
            return Err(QtError::AntipodeNotInvertible(alg.name().to_string()));
        }
        let r_bar = match r_bar {
            Some(rb) => rb,
            None => solve_r_bar(&alg, &r).ok_or(QtError::InverseUnsolvable)?,
        };
        let mut report = check_quasitriangular(&alg, &r, &r_bar);
        if report.passed() {
            report.absorb(check_derived_r_identities(&alg, &r));
        }
        if !report.passed() {
            let first = report.first_failure().map(|c| c.name.clone()).unwrap_or_default();
            return Err(QtError::NotCertified { name: alg.name().to_string(), first, report: Box::new(report) });
        }
        let triangular = report.flag_value("triangular").unwrap_or(false);
        Ok(QtAlgebra { alg, r, r_bar, triangular, report })
    }

    pub fn algebra(&self) -> &Certified<F> {
        &self.alg
    }

    pub fn r(&self) -> &SVec<F> {
        &self.r
    }

    pub fn r_bar(&self) -> &SVec<F> {
        &self.r_bar
    }

    pub fn is_triangular(&self) -> bool {
        self.triangular
    }

    pub fn report(&self) -> &VerificationReport {
        &self.report
    }

    /// Terms `(i, j, c)` of `R = Σ c e_i ⊗ e_j`.
    pub fn r_terms(&self) -> Vec<(usize, usize, F)> {
        let d = self.dim();
        self.r.iter().map(|(k, c)| (k / d, k % d, c.clone())).collect()
    }

    pub fn r_bar_terms(&self) -> Vec<(usize, usize, F)> {
        let d = self.dim();
        self.r_bar.iter().map(|(k, c)| (k / d, k % d, c.clone())).collect()
    }
}
