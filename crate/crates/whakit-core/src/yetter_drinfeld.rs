//! Yetter–Drinfeld modules, comodules over the transmuted algebra inside the
//! module category, the functors between them, and their braidings.

use thiserror::Error;

use crate::linalg::{LinMap, SVec, Subspace};
use crate::module_cat::{
    check_module, first_h_linearity_failure, on_legs, random_combination, solve_linear_maps, tensor_action,
    tensor_labels, truncated_tensor, unitors, HModule, ModuleError, TruncatedTensor,
};
use crate::quasitriangular::QtAlgebra;
use crate::report::{render_vec, CheckResult, VerificationReport, Witness};
use crate::rng::Lcg;
use crate::scalar::Field;
use crate::transmutation::BraidedHopf;
use crate::weak_hopf::Certified;

#[derive(Debug, Clone, Error)]
pub enum YdError {
    #[error("coaction of basis vector {0} leaves the transmuted carrier")]
    CoactionEscapesCarrier(usize),
    #[error("the antipode is not invertible")]
    AntipodeNotInvertible,
    #[error("coaction table has shape {got:?}, expected {expected:?}")]
    BadCoactionShape { expected: (usize, usize), got: (usize, usize) },
    #[error(transparent)]
    Module(#[from] ModuleError),
}

/// A module with a left `H`-coaction `M → H ⊗ M`.
#[derive(Debug, Clone, PartialEq)]
pub struct YdModule<F> {
    pub module: HModule<F>,
    pub coaction: LinMap<F>,
}

/// A module with a left coaction `M → B ⊗ M` of the transmuted algebra `B`,
/// the first leg in carrier coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct RhComodule<F> {
    pub module: HModule<F>,
    pub coaction: LinMap<F>,
}

impl<F: Field> YdModule<F> {
    pub fn new(h: &Certified<F>, module: HModule<F>, coaction: LinMap<F>) -> Result<Self, YdError> {
        let expected = (h.dim() * module.dim(), module.dim());
        let got = (coaction.rows(), coaction.cols());
        if expected != got {
            return Err(YdError::BadCoactionShape { expected, got });
        }
        Ok(YdModule { module, coaction })
    }

    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    pub fn name(&self) -> &str {
        self.module.name()
    }
}

impl<F: Field> RhComodule<F> {
    pub fn new(b: &BraidedHopf<F>, module: HModule<F>, coaction: LinMap<F>) -> Result<Self, YdError> {
        let expected = (b.dim() * module.dim(), module.dim());
        let got = (coaction.rows(), coaction.cols());
        if expected != got {
            return Err(YdError::BadCoactionShape { expected, got });
        }
        Ok(RhComodule { module, coaction })
    }

    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    pub fn name(&self) -> &str {
        self.module.name()
    }

    /// `B` coacting on itself by its comultiplication.
    pub fn regular(b: &BraidedHopf<F>) -> Self {
        RhComodule { module: b.module().clone(), coaction: b.comult_ambient().clone() }
    }

    /// `m ↦ 1 ⊗_t m`, i.e. `Δ(1)·(1_B ⊗ m)`.
    pub fn trivial(b: &BraidedHopf<F>, m: &HModule<F>) -> Self {
        let d1 = tensor_action(b.base(), &[b.module(), m], b.base().delta_one_cached());
        let one = b.one();
        let coaction = LinMap::from_fn(b.dim() * m.dim(), m.dim(), |j| d1.apply(&one.kron(&SVec::unit(j), m.dim())));
        RhComodule { module: m.clone(), coaction }
    }
}

/// Iterates the terms `(first, second, coefficient)` of a vector on `X ⊗ M`.
fn terms<F: Field>(v: &SVec<F>, dm: usize) -> impl Iterator<Item = (usize, usize, &F)> + '_ {
    v.iter().map(move |(k, c)| (k / dm, k % dm, c))
}

fn labelled_witness<F: Field>(
    labels: &[String],
    col_labels: &[String],
    lhs: &LinMap<F>,
    rhs: &LinMap<F>,
) -> Option<Witness> {
    lhs.first_difference(rhs).map(|k| {
        Witness::new(
            vec![k],
            vec![col_labels.get(k).cloned().unwrap_or_else(|| format!("vector {k}"))],
            render_vec(lhs.column(k), |i| labels[i].clone()),
            render_vec(rhs.column(k), |i| labels[i].clone()),
        )
    })
}

/// The Yetter–Drinfeld conditions on all basis elements.
pub fn check_yd<F: Field>(h: &Certified<F>, y: &YdModule<F>) -> VerificationReport {
    let d = h.dim();
    let m = &y.module;
    let dm = m.dim();
    let rho = &y.coaction;
    let mut rep = VerificationReport::new(format!("Yetter-Drinfeld module {}", m.name()));
    rep.absorb(check_module(h, m));
    let labels2 = tensor_labels(&[h.space().labels(), m.labels()]);
    let labels3 = tensor_labels(&[h.space().labels(), h.space().labels(), m.labels()]);
    let mlabels = m.labels().to_vec();
    let regular = HModule::regular(h);

    let d1 = tensor_action(h, &[&regular, m], h.delta_one_cached());
    let lhs = d1.compose(rho).expect("shapes");
    rep.push(CheckResult::from_witness(
        "coaction lands in H (x)_t M",
        labelled_witness(&labels2, &mlabels, &lhs, rho),
    ));

    let left: Vec<LinMap<F>> = (0..d).map(|i| h.left_mult_map(&SVec::unit(i))).collect();
    let s = h.antipode_map();
    let s_right: Vec<LinMap<F>> = (0..d).map(|c| h.right_mult_map(s.column(c))).collect();
    let mut compat = None;
    for i in 0..d {
        let lhs = rho.compose(m.action(i)).expect("shapes");
        let mut rhs_map = LinMap::zero(d * dm, d * dm);
        let d2 = h.comul_leg(h.coprod(i), 2, 0);
        for (abc, coef) in d2.iter() {
            let (a, b, c) = (abc / (d * d), (abc / d) % d, abc % d);
            let first = left[a].compose(&s_right[c]).expect("shapes");
            rhs_map.add_scaled(&first.tensor(m.action(b)), coef);
        }
        let rhs = rhs_map.compose(rho).expect("shapes");
        if let Some(mut w) = labelled_witness(&labels2, &mlabels, &lhs, &rhs) {
            w.labels.insert(0, h.label(i).to_string());
            w.indices.insert(0, i);
            compat = Some(w);
            break;
        }
    }
    rep.push(CheckResult::from_witness("coaction of h.m is h1 m[-1] S(h3) (x) h2.m[0]", compat));

    let comult = LinMap::from_fn(d * d, d, |i| h.coprod(i).clone());
    let lhs = comult.tensor(&LinMap::identity(dm)).compose(rho).expect("shapes");
    let rhs = LinMap::identity(d).tensor(rho).compose(rho).expect("shapes");
    rep.push(CheckResult::from_witness("coaction is coassociative", labelled_witness(&labels3, &mlabels, &lhs, &rhs)));

    let counit = LinMap::from_columns(1, (0..d).map(|i| SVec::from_pairs([(0, h.counit_of(i).clone())])).collect());
    let lhs = counit.tensor(&LinMap::identity(dm)).compose(rho).expect("shapes");
    rep.push(CheckResult::from_bool("coaction is counital", lhs.is_identity(), || {
        format!("(eps (x) id) rho differs from id at {:?}", lhs.first_difference(&LinMap::identity(dm)))
    }));

    let mut absorb = LinMap::zero(d * dm, d * dm);
    for (ab, coef) in h.delta_one_cached().iter() {
        let (a, b) = (ab / d, ab % d);
        absorb.add_scaled(&s_right[b].tensor(m.action(a)), coef);
    }
    let rhs = absorb.compose(rho).expect("shapes");
    rep.push(CheckResult::from_witness(
        "m[-1] (x) m[0] = m[-1] S(1_2) (x) 1_1.m[0]",
        labelled_witness(&labels2, &mlabels, rho, &rhs),
    ));
    rep
}

/// `ρ(m) = R² ⊗ R¹·m`.
pub fn induced_yd<F: Field>(q: &QtAlgebra<F>, m: &HModule<F>) -> YdModule<F> {
    let dm = m.dim();
    let d = q.dim();
    let r = q.r_terms();
    let coaction = LinMap::from_fn(d * dm, dm, |j| {
        let mut out = SVec::new();
        for (r1, r2, c) in &r {
            out.add_scaled(&SVec::unit(*r2).kron(m.action(*r1).column(j), dm), c);
        }
        out
    });
    YdModule { module: m.clone(), coaction }
}

/// `ρ(n) = n[-1] S(R²) ⊗ R¹·n[0]`.
pub fn functor_g<F: Field>(b: &BraidedHopf<F>, y: &YdModule<F>) -> Result<RhComodule<F>, YdError> {
    let q = b.base();
    let h: &Certified<F> = q;
    let m = &y.module;
    let dm = m.dim();
    let c = b.dim();
    let r = q.r_terms();
    let s = h.antipode_map();
    let mut cols = Vec::with_capacity(dm);
    for j in 0..dm {
        let mut amb = SVec::new();
        for (x, m0, k) in terms(y.coaction.column(j), dm) {
            for (r1, r2, rc) in &r {
                let left = h.multiply(&SVec::unit(x), s.column(*r2));
                if left.is_zero() {
                    continue;
                }
                let right = m.action(*r1).column(m0);
                if right.is_zero() {
                    continue;
                }
                amb.add_scaled(&left.kron(right, dm), &(k.clone() * rc));
            }
        }
        let mut out = SVec::new();
        let mut by_m: std::collections::BTreeMap<usize, SVec<F>> = Default::default();
        for (x, m0, k) in terms(&amb, dm) {
            by_m.entry(m0).or_default().add_at(x, k.clone());
        }
        for (m0, hv) in by_m {
            let cv = b.carrier().coords(&hv).ok_or(YdError::CoactionEscapesCarrier(j))?;
            out.add_vec(&cv.kron(&SVec::unit(m0), dm));
        }
        cols.push(out);
    }
    Ok(RhComodule { module: m.clone(), coaction: LinMap::from_columns(c * dm, cols) })
}

/// `ρ(m) = m(-1) R² ⊗ R¹·m(0)`.
pub fn functor_f<F: Field>(b: &BraidedHopf<F>, x: &RhComodule<F>) -> YdModule<F> {
    let q = b.base();
    let h: &Certified<F> = q;
    let m = &x.module;
    let dm = m.dim();
    let d = h.dim();
    let r = q.r_terms();
    let coaction = LinMap::from_fn(d * dm, dm, |j| {
        let mut out = SVec::new();
        for (y, m0, k) in terms(x.coaction.column(j), dm) {
            let hy = b.embed(&SVec::unit(y));
            for (r1, r2, rc) in &r {
                let left = h.multiply(&hy, &SVec::unit(*r2));
                if left.is_zero() {
                    continue;
                }
                let right = m.action(*r1).column(m0);
                if right.is_zero() {
                    continue;
                }
                out.add_scaled(&left.kron(right, dm), &(k.clone() * rc));
            }
        }
        out
    });
    YdModule { module: m.clone(), coaction }
}

/// Comodule axioms over `B`, `H`-linearity of the coaction.
pub fn check_rh_comodule<F: Field>(b: &BraidedHopf<F>, x: &RhComodule<F>) -> VerificationReport {
    let h: &Certified<F> = b.base();
    let m = &x.module;
    let dm = m.dim();
    let c = b.dim();
    let rho = &x.coaction;
    let mut rep = VerificationReport::new(format!("comodule {}", m.name()));
    rep.absorb(check_module(h, m));
    let labels3 = tensor_labels(&[b.module().labels(), b.module().labels(), m.labels()]);
    let mlabels = m.labels().to_vec();
    let lhs = b.comult_ambient().tensor(&LinMap::identity(dm)).compose(rho).expect("shapes");
    let rhs = LinMap::identity(c).tensor(rho).compose(rho).expect("shapes");
    rep.push(CheckResult::from_witness("coaction is coassociative", labelled_witness(&labels3, &mlabels, &lhs, &rhs)));
    let counit = counit_action(b, m);
    let lhs = counit.compose(rho).expect("shapes");
    rep.push(CheckResult::from_bool("eps_t(m(-1)).m(0) = m", lhs.is_identity(), || {
        format!("differs at column {:?}", lhs.first_difference(&LinMap::identity(dm)))
    }));
    let failure = (0..h.dim()).find_map(|i| {
        let a = rho.compose(m.action(i)).expect("shapes");
        let act = tensor_action(h, &[b.module(), m], h.coprod(i));
        let z = act.compose(rho).expect("shapes");
        a.first_difference(&z).map(|k| (i, k))
    });
    rep.push(CheckResult::from_witness(
        "coaction is H-linear",
        failure.map(|(i, k)| Witness::new(vec![i, k], vec![h.label(i).to_string(), mlabels[k].clone()], String::new(), String::new())),
    ));
    rep
}

/// `y ⊗ m ↦ ε_t(y)·m` on `B ⊗ M`.
fn counit_action<F: Field>(b: &BraidedHopf<F>, m: &HModule<F>) -> LinMap<F> {
    let h: &Certified<F> = b.base();
    let dm = m.dim();
    LinMap::from_fn(dm, b.dim() * dm, |col| {
        let (y, j) = (col / dm, col % dm);
        m.act(&h.epsilon_t(&b.embed(&SVec::unit(y))), &SVec::unit(j))
    })
}

/// The tensor product of comodules, on the carrier of `U ⊗_t V`:
/// `u ⊗ v ↦ μ̄(u(-1) ⊗ R²·v(-1)) ⊗ R¹·u(0) ⊗ v(0)`.
pub fn comodule_tensor<F: Field>(
    b: &BraidedHopf<F>,
    u: &RhComodule<F>,
    v: &RhComodule<F>,
) -> Result<(RhComodule<F>, TruncatedTensor<F>), YdError> {
    let q = b.base();
    let h: &Certified<F> = q;
    let (du, dv, c) = (u.dim(), v.dim(), b.dim());
    let tt = truncated_tensor(h, &u.module, &v.module)?;
    let both = u.coaction.tensor(&v.coaction);
    let braid = on_legs(&[c, du, c, dv], 1, 2, &crate::module_cat::braiding_ambient(q, &u.module, b.module()), &[c, du]);
    let mult = on_legs(&[c, c, du, dv], 0, 2, b.mult_ambient(), &[c]);
    let amb = mult
        .compose(&braid)
        .and_then(|x| x.compose(&both))
        .and_then(|x| x.compose(tt.carrier.inclusion()))
        .map_err(ModuleError::from)?;
    let target = carrier_pushforward(c, &tt.carrier);
    let coaction = target.restrict_codomain(&amb).map_err(YdError::CoactionEscapesCarrier)?;
    Ok((RhComodule { module: tt.module.clone(), coaction }, tt))
}

fn carrier_pushforward<F: Field>(c: usize, s: &Subspace<F>) -> Subspace<F> {
    s.left_tensor(c)
}

/// The tensor product of Yetter–Drinfeld modules:
/// `v ⊗ w ↦ v[-1] w[-1] ⊗ v[0] ⊗ w[0]` on `V ⊗_t W`.
pub fn yd_tensor<F: Field>(h: &Certified<F>, v: &YdModule<F>, w: &YdModule<F>) -> Result<(YdModule<F>, TruncatedTensor<F>), YdError> {
    let d = h.dim();
    let (dv, dw) = (v.dim(), w.dim());
    let tt = truncated_tensor(h, &v.module, &w.module)?;
    let both = v.coaction.tensor(&w.coaction);
    let swap = on_legs(&[d, dv, d, dw], 1, 2, &LinMap::swap(dv, d), &[d, dv]);
    let mult = LinMap::from_fn(d, d * d, |k| h.prod(k / d, k % d).clone());
    let mult = on_legs(&[d, d, dv, dw], 0, 2, &mult, &[d]);
    let amb = mult
        .compose(&swap)
        .and_then(|x| x.compose(&both))
        .and_then(|x| x.compose(tt.carrier.inclusion()))
        .map_err(ModuleError::from)?;
    let target = carrier_pushforward(d, &tt.carrier);
    let coaction = target.restrict_codomain(&amb).map_err(YdError::CoactionEscapesCarrier)?;
    Ok((YdModule { module: tt.module.clone(), coaction }, tt))
}

/// `C(v ⊗ w) = v[-1]·w ⊗ v[0]` on ambient `V ⊗ W`, landing in `W ⊗ V`.
pub fn yd_braiding_ambient<F: Field>(h: &Certified<F>, v: &YdModule<F>, w: &YdModule<F>) -> LinMap<F> {
    let (dv, dw) = (v.dim(), w.dim());
    let d = h.dim();
    let act = LinMap::from_fn(dw, d * dw, |k| w.module.action(k / dw).column(k % dw).clone());
        let coact = v.coaction.tensor(&LinMap::identity(dw));
    let mv = on_legs(&[d, dv, dw], 0, 2, &LinMap::swap(d, dv), &[dv, d]);
    let acted = LinMap::identity(dv).tensor(&act);
    LinMap::swap(dv, dw).compose(&acted).and_then(|x| x.compose(&mv)).and_then(|x| x.compose(&coact)).expect("shapes")
}

/// `w ⊗ v ↦ v[0] ⊗ S⁻¹(v[-1])·w`, the inverse YD braiding, on ambient `W ⊗ V`.
pub fn yd_braiding_inverse_ambient<F: Field>(h: &Certified<F>, v: &YdModule<F>, w: &YdModule<F>) -> Result<LinMap<F>, YdError> {
    let sinv = h.antipode_inverse().ok_or(YdError::AntipodeNotInvertible)?;
    let (dv, dw) = (v.dim(), w.dim());
    let d = h.dim();
    let act = LinMap::from_fn(dw, d * dw, |k| w.module.act(sinv.column(k / dw), &SVec::unit(k % dw)));
    let coact = LinMap::identity(dw).tensor(&v.coaction); // W ⊗ H ⊗ V
    // W ⊗ H ⊗ V → V ⊗ H ⊗ W
    let to_vhw = LinMap::permute_legs(&[dw, d, dv], &[2, 1, 0]);
    let hw = LinMap::identity(dv).tensor(&act);
    Ok(hw.compose(&to_vhw).and_then(|x| x.compose(&coact)).expect("shapes"))
}

/// Restricts an ambient map between tensors to truncated carriers.
fn restrict<F: Field>(amb: &LinMap<F>, src: &TruncatedTensor<F>, dst: &TruncatedTensor<F>) -> Result<LinMap<F>, YdError> {
    let m = amb.compose(src.carrier.inclusion()).map_err(ModuleError::from)?;
    dst.carrier.restrict_codomain(&m).map_err(YdError::CoactionEscapesCarrier)
}

/// The braiding of Yetter–Drinfeld modules on carriers with its inverse.
pub fn yd_braiding<F: Field>(h: &Certified<F>, v: &YdModule<F>, w: &YdModule<F>) -> Result<(LinMap<F>, LinMap<F>), YdError> {
    let src = truncated_tensor(h, &v.module, &w.module)?;
    let dst = truncated_tensor(h, &w.module, &v.module)?;
    let fwd = restrict(&yd_braiding_ambient(h, v, w), &src, &dst)?;
    let bwd = restrict(&yd_braiding_inverse_ambient(h, v, w)?, &dst, &src)?;
    Ok((fwd, bwd))
}

/// `C̃(u ⊗ v) = u(-1)R²·v ⊗ R¹·u(0)` on ambient `U ⊗ V`, landing in `V ⊗ U`.
pub fn comodule_braiding_ambient<F: Field>(b: &BraidedHopf<F>, u: &RhComodule<F>, v: &RhComodule<F>) -> LinMap<F> {
    let q = b.base();
    let h: &Certified<F> = q;
    let (du, dv) = (u.dim(), v.dim());
    let r = q.r_terms();
    LinMap::from_fn(dv * du, du * dv, |col| {
        let (i, j) = (col / dv, col % dv);
        let mut out = SVec::new();
        for (y, u0, k) in terms(u.coaction.column(i), du) {
            let hy = b.embed(&SVec::unit(y));
            for (r1, r2, rc) in &r {
                let acting = h.multiply(&hy, &SVec::unit(*r2));
                if acting.is_zero() {
                    continue;
                }
                let left = v.module.act(&acting, &SVec::unit(j));
                if left.is_zero() {
                    continue;
                }
                let right = u.module.action(*r1).column(u0);
                out.add_scaled(&left.kron(right, du), &(k.clone() * rc));
            }
        }
        out
    })
}

/// `v ⊗ u ↦ R¹·u(0) ⊗ S⁻¹(u(-1)R²)·v` on ambient `V ⊗ U`, landing in `U ⊗ V`.
pub fn comodule_braiding_inverse_ambient<F: Field>(
    b: &BraidedHopf<F>,
    u: &RhComodule<F>,
    v: &RhComodule<F>,
) -> Result<LinMap<F>, YdError> {
    let q = b.base();
    let h: &Certified<F> = q;
    let sinv = h.antipode_inverse().ok_or(YdError::AntipodeNotInvertible)?;
    let (du, dv) = (u.dim(), v.dim());
    let r = q.r_terms();
    Ok(LinMap::from_fn(du * dv, dv * du, |col| {
        let (j, i) = (col / du, col % du);
        let mut out = SVec::new();
        for (y, u0, k) in terms(u.coaction.column(i), du) {
            let hy = b.embed(&SVec::unit(y));
            for (r1, r2, rc) in &r {
                let x = h.multiply(&hy, &SVec::unit(*r2));
                if x.is_zero() {
                    continue;
                }
                let right = v.module.act(&sinv.apply(&x), &SVec::unit(j));
                if right.is_zero() {
                    continue;
                }
                let left = u.module.action(*r1).column(u0);
                out.add_scaled(&left.kron(&right, dv), &(k.clone() * rc));
            }
        }
        out
    }))
}

/// The braiding of comodules on carriers with its displayed inverse.
pub fn comodule_braiding<F: Field>(
    b: &BraidedHopf<F>,
    u: &RhComodule<F>,
    v: &RhComodule<F>,
) -> Result<(LinMap<F>, LinMap<F>), YdError> {
    let h: &Certified<F> = b.base();
    let src = truncated_tensor(h, &u.module, &v.module)?;
    let dst = truncated_tensor(h, &v.module, &u.module)?;
    let fwd = restrict(&comodule_braiding_ambient(b, u, v), &src, &dst)?;
    let bwd = restrict(&comodule_braiding_inverse_ambient(b, u, v)?, &dst, &src)?;
    Ok((fwd, bwd))
}

/// The sample comodules `{trivial(regular), trivial(H_t), B}`.
pub fn default_comodule_samples<F: Field>(b: &BraidedHopf<F>) -> Vec<RhComodule<F>> {
    let h: &Certified<F> = b.base();
    vec![
        RhComodule::trivial(b, &HModule::regular(h)),
        RhComodule::trivial(b, b.unit_object()),
        RhComodule::regular(b),
    ]
}

fn push_map_eq<F: Field>(rep: &mut VerificationReport, name: String, lhs: &LinMap<F>, rhs: &LinMap<F>) {
    rep.push(CheckResult::from_bool(name, lhs.map_eq(rhs), || format!("first differing column {:?}", lhs.first_difference(rhs))));
}

/// `G∘F = id`, `F∘G = id` on coaction tables and `G(U ⊗ V) = G(U) ⊗ G(V)`.
pub fn check_equivalence_roundtrip<F: Field>(b: &BraidedHopf<F>, samples: &[RhComodule<F>]) -> VerificationReport {
    let q = b.base();
    let h: &Certified<F> = q;
    let mut rep = VerificationReport::new(format!("module/comodule equivalence on {}", q.name()));
    let yds: Vec<YdModule<F>> = samples.iter().map(|x| functor_f(b, x)).collect();
    for (x, y) in samples.iter().zip(&yds) {
        rep.absorb(check_rh_comodule(b, x));
        rep.absorb(check_yd(h, y));
        match functor_g(b, y) {
            Ok(gx) => push_map_eq(&mut rep, format!("G(F({})) = {}", x.name(), x.name()), &gx.coaction, &x.coaction),
            Err(e) => rep.push(CheckResult::from_bool(format!("G(F({}))", x.name()), false, || e.to_string())),
        }
    }
    // F∘G on Yetter–Drinfeld modules, including the induced ones.
    let mut yd_samples = yds.clone();
    yd_samples.push(induced_yd(q, &HModule::regular(h)));
    yd_samples.push(induced_yd(q, b.unit_object()));
    for y in &yd_samples {
        match functor_g(b, y) {
            Ok(gy) => {
                push_map_eq(&mut rep, format!("F(G({})) = {}", y.name(), y.name()), &functor_f(b, &gy).coaction, &y.coaction)
            }
            Err(e) => rep.push(CheckResult::from_bool(format!("F(G({}))", y.name()), false, || e.to_string())),
        }
    }
    // Induced YD modules go to trivial comodules.
    for m in [HModule::regular(h), b.unit_object().clone()] {
        let name = format!("G(induced {}) is trivial", m.name());
        match functor_g(b, &induced_yd(q, &m)) {
            Ok(g) => push_map_eq(&mut rep, name, &g.coaction, &RhComodule::trivial(b, &m).coaction),
            Err(e) => rep.push(CheckResult::from_bool(name, false, || e.to_string())),
        }
    }
    // Monoidality.
    for u in &yds {
        for v in &yds {
            let name = format!("G({} (x) {}) = G({}) (x) G({})", u.name(), v.name(), u.name(), v.name());
            let run = || -> Result<bool, YdError> {
                let (uv, _) = yd_tensor(h, u, v)?;
                let g_uv = functor_g(b, &uv)?;
                let (guv, _) = comodule_tensor(b, &functor_g(b, u)?, &functor_g(b, v)?)?;
                Ok(g_uv.coaction.map_eq(&guv.coaction))
            };
            match run() {
                Ok(ok) => rep.push(CheckResult::from_bool(name, ok, || "coaction tables differ".into())),
                Err(e) => rep.push(CheckResult::from_bool(name, false, || e.to_string())),
            }
        }
    }
    // Right unitor respects coactions.
    let unit_comod = RhComodule::trivial(b, b.unit_object());
    for x in samples {
        let name = format!("right unitor of {} is colinear", x.name());
        let run = || -> Result<bool, YdError> {
            let (xt, _) = comodule_tensor(b, x, &unit_comod)?;
            let u = unitors(h, &x.module)?;
            let lhs = LinMap::identity(b.dim()).tensor(&u.right).compose(&xt.coaction).map_err(ModuleError::from)?;
            let rhs = x.coaction.compose(&u.right).map_err(ModuleError::from)?;
            Ok(lhs.map_eq(&rhs))
        };
        match run() {
            Ok(ok) => rep.push(CheckResult::from_bool(name, ok, || "coaction tables differ".into())),
            Err(e) => rep.push(CheckResult::from_bool(name, false, || e.to_string())),
        }
    }
    rep
}

/// Basis of the `H`-linear, `B`-colinear maps `U → V`.
pub fn comodule_morphisms<F: Field>(b: &BraidedHopf<F>, u: &RhComodule<F>, v: &RhComodule<F>) -> Vec<LinMap<F>> {
    let c = b.dim();
    solve_linear_maps(v.dim(), u.dim(), |f| {
        let mut eqs: Vec<LinMap<F>> = u
            .module
            .actions()
            .iter()
            .zip(v.module.actions())
            .map(|(au, av)| f.compose(au).expect("shapes").sub(&av.compose(f).expect("shapes")).expect("shapes"))
            .collect();
        let lhs = LinMap::identity(c).tensor(f).compose(&u.coaction).expect("shapes");
        let rhs = v.coaction.compose(f).expect("shapes");
        eqs.push(lhs.sub(&rhs).expect("shapes"));
        eqs
    })
}

/// Invertibility with the displayed inverse, agreement with the YD braiding
/// under `F`, both hexagons and naturality for the comodule braiding.
pub fn check_comodule_braiding<F: Field>(b: &BraidedHopf<F>, samples: &[RhComodule<F>], seed: u64) -> VerificationReport {
    let q = b.base();
    let h: &Certified<F> = q;
    let mut rep = VerificationReport::new(format!("comodule braiding on {}", q.name()));
    let mut rng = Lcg::new(seed);
    for u in samples {
        for v in samples {
            let pair = format!("{}, {}", u.name(), v.name());
            let run = |rep: &mut VerificationReport| -> Result<(), YdError> {
                let (fwd, bwd) = comodule_braiding(b, u, v)?;
                let ok = fwd.compose(&bwd).map(|x| x.is_identity()).unwrap_or(false)
                    && bwd.compose(&fwd).map(|x| x.is_identity()).unwrap_or(false);
                rep.push(CheckResult::from_bool(format!("braiding of {pair} has the displayed inverse"), ok, || {
                    "C C^-1 or C^-1 C differs from id".into()
                }));
                let src = truncated_tensor(h, &u.module, &v.module)?;
                let dst = truncated_tensor(h, &v.module, &u.module)?;
                rep.push(CheckResult::from_bool(
                    format!("braiding of {pair} is H-linear"),
                    first_h_linearity_failure(&fwd, &src.module, &dst.module).is_none(),
                    || "braiding does not commute with the action".into(),
                ));
                let (yfwd, _) = yd_braiding(h, &functor_f(b, u), &functor_f(b, v))?;
                push_map_eq(rep, format!("braiding of {pair} equals the YD braiding through F"), &fwd, &yfwd);
                Ok(())
            };
            if let Err(e) = run(&mut rep) {
                rep.push(CheckResult::from_bool(format!("braiding of {pair}"), false, || e.to_string()));
            }
        }
    }
    for u in samples {
        for v in samples {
            for w in samples {
                rep.absorb(check_comodule_hexagons(b, u, v, w));
            }
        }
    }
    for u in samples {
        for v in samples {
            let f = random_combination(&comodule_morphisms(b, u, u), u.dim(), u.dim(), &mut rng);
            let g = random_combination(&comodule_morphisms(b, v, v), v.dim(), v.dim(), &mut rng);
            let name = format!("braiding natural for comodule morphisms on {}, {}", u.name(), v.name());
            let run = || -> Result<bool, YdError> {
                let src = truncated_tensor(h, &u.module, &v.module)?;
                let lhs = comodule_braiding_ambient(b, u, v)
                    .compose(&f.tensor(&g))
                    .and_then(|x| x.compose(src.carrier.inclusion()))
                    .map_err(ModuleError::from)?;
                let rhs = g
                    .tensor(&f)
                    .compose(&comodule_braiding_ambient(b, u, v))
                    .and_then(|x| x.compose(src.carrier.inclusion()))
                    .map_err(ModuleError::from)?;
                Ok(lhs.map_eq(&rhs))
            };
            match run() {
                Ok(ok) => rep.push(CheckResult::from_bool(name, ok, || "naturality square fails".into())),
                Err(e) => rep.push(CheckResult::from_bool(name, false, || e.to_string())),
            }
        }
    }
    rep
}

fn check_comodule_hexagons<F: Field>(
    b: &BraidedHopf<F>,
    u: &RhComodule<F>,
    v: &RhComodule<F>,
    w: &RhComodule<F>,
) -> VerificationReport {
    let h: &Certified<F> = b.base();
    let names = format!("{}, {}, {}", u.name(), v.name(), w.name());
    let mut rep = VerificationReport::new("");
    let run = |rep: &mut VerificationReport| -> Result<(), YdError> {
        let (du, dv, dw) = (u.dim(), v.dim(), w.dim());
        let cube = Subspace::split_idempotent(&tensor_action(
            h,
            &[&u.module, &v.module, &w.module],
            &h.comul_leg(h.delta_one_cached(), 2, 0),
        ))
        .map_err(ModuleError::from)?;
        let (uv, uv_tt) = comodule_tensor(b, u, v)?;
        let c_uv_w = comodule_braiding_ambient(b, &uv, w); // (UV) ⊗ W → W ⊗ (UV), carrier coords for UV
        let lhs = LinMap::identity(dw)
            .tensor(uv_tt.carrier.inclusion())
            .compose(&c_uv_w)
            .and_then(|x| x.compose(&uv_tt.carrier.projection().tensor(&LinMap::identity(dw))))
            .and_then(|x| x.compose(cube.inclusion()))
            .map_err(ModuleError::from)?;
        let step1 = on_legs(&[du, dv, dw], 1, 2, &comodule_braiding_ambient(b, v, w), &[dw, dv]);
        let step2 = on_legs(&[du, dw, dv], 0, 2, &comodule_braiding_ambient(b, u, w), &[dw, du]);
        let rhs = step2.compose(&step1).and_then(|x| x.compose(cube.inclusion())).map_err(ModuleError::from)?;
        push_map_eq(rep, format!("first comodule hexagon for {names}"), &lhs, &rhs);

        let (vw, vw_tt) = comodule_tensor(b, v, w)?;
        let c_u_vw = comodule_braiding_ambient(b, u, &vw);
        let lhs = vw_tt
            .carrier
            .inclusion()
            .tensor(&LinMap::identity(du))
            .compose(&c_u_vw)
            .and_then(|x| x.compose(&LinMap::identity(du).tensor(vw_tt.carrier.projection())))
            .and_then(|x| x.compose(cube.inclusion()))
            .map_err(ModuleError::from)?;
        let step1 = on_legs(&[du, dv, dw], 0, 2, &comodule_braiding_ambient(b, u, v), &[dv, du]);
        let step2 = on_legs(&[dv, du, dw], 1, 2, &comodule_braiding_ambient(b, u, w), &[dw, du]);
        let rhs = step2.compose(&step1).and_then(|x| x.compose(cube.inclusion())).map_err(ModuleError::from)?;
        push_map_eq(rep, format!("second comodule hexagon for {names}"), &lhs, &rhs);
        Ok(())
    };
    if let Err(e) = run(&mut rep) {
        rep.push(CheckResult::from_bool(format!("comodule hexagons for {names}"), false, || e.to_string()));
    }
    rep
}

/// On induced Yetter–Drinfeld modules the YD braiding is the braiding of
/// the module category.
pub fn check_induced_braiding<F: Field>(q: &QtAlgebra<F>, samples: &[HModule<F>]) -> VerificationReport {
    let h: &Certified<F> = q;
    let mut rep = VerificationReport::new("induced YD braiding");
    for m in samples {
        for n in samples {
            let name = format!("YD braiding of induced {}, {} equals C", m.name(), n.name());
            let run = || -> Result<bool, YdError> {
                let (y, _) = yd_braiding(h, &induced_yd(q, m), &induced_yd(q, n))?;
                let c = crate::module_cat::braiding_c(q, m, n)?;
                Ok(y.map_eq(&c.map))
            };
            match run() {
                Ok(ok) => rep.push(CheckResult::from_bool(name, ok, || "maps differ".into())),
                Err(e) => rep.push(CheckResult::from_bool(name, false, || e.to_string())),
            }
        }
    }
    rep
}
