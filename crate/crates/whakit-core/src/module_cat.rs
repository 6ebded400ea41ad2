//! Left modules over a weak Hopf algebra, the truncated tensor product, the
//! unit object `H_t`, unitors and the braiding coming from an R-matrix.

use thiserror::Error;

use crate::linalg::{join_index, split_index, LinMap, LinalgError, SVec, Subspace, VectorSpace};
use crate::quasitriangular::QtAlgebra;
use crate::report::{first_witness, render_vec, CheckResult, VerificationReport, Witness};
use crate::rng::Lcg;
use crate::scalar::Field;
use crate::weak_hopf::{Certified, WeakHopfAlgebra};

#[derive(Debug, Clone, Error)]
pub enum ModuleError {
    #[error("action table has {got} maps, algebra has dimension {expected}")]
    WrongActionCount { expected: usize, got: usize },
    #[error("action map for basis element {index} is not square of size {dim}")]
    BadActionShape { index: usize, dim: usize },
    #[error("the action of Delta(1) on {0} is not idempotent")]
    IdempotentFailure(String),
    #[error("modules live over different algebras: {0} vs {1}")]
    AlgebraMismatch(String, String),
    #[error("map does not land in the truncated tensor product at column {0}")]
    EscapesCarrier(usize),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// A finite-dimensional left module, given by the action of each basis
/// element of the algebra.
#[derive(Debug, Clone, PartialEq)]
pub struct HModule<F> {
    name: String,
    algebra: String,
    space: VectorSpace,
    action: Vec<LinMap<F>>,
}

impl<F: Field> HModule<F> {
    pub fn new(
        name: impl Into<String>,
        h: &WeakHopfAlgebra<F>,
        space: VectorSpace,
        action: Vec<LinMap<F>>,
    ) -> Result<Self, ModuleError> {
        if action.len() != h.dim() {
            return Err(ModuleError::WrongActionCount { expected: h.dim(), got: action.len() });
        }
        let m = space.dim();
        if let Some(index) = action.iter().position(|a| a.rows() != m || a.cols() != m) {
            return Err(ModuleError::BadActionShape { index, dim: m });
        }
        Ok(HModule { name: name.into(), algebra: h.name().to_string(), space, action })
    }

    /// `H` acting on itself by left multiplication.
    pub fn regular(h: &WeakHopfAlgebra<F>) -> Self {
        let action = (0..h.dim()).map(|i| h.left_mult_map(&SVec::unit(i))).collect();
        HModule { name: "regular".into(), algebra: h.name().to_string(), space: h.space().clone(), action }
    }

    /// The unit object `H_t` with `h·z = ε_t(hz)`, in coordinates of the
    /// computed basis of `H_t`.
    pub fn unit_object(h: &Certified<F>) -> Self {
        let ht = h.target();
        let labels = (0..ht.dim()).map(|k| format!("t{k}")).collect();
        let action = (0..h.dim())
            .map(|i| {
                LinMap::from_fn(ht.dim(), ht.dim(), |k| {
                    let z = ht.basis_vector(k);
                    let v = h.epsilon_t(&h.multiply(&SVec::unit(i), z));
                    ht.coords(&v).expect("eps_t lands in H_t")
                })
            })
            .collect();
        HModule {
            name: "H_t".into(),
            algebra: h.name().to_string(),
            space: VectorSpace::new(labels).expect("distinct labels"),
            action,
        }
    }

    /// The zero module.
    pub fn zero(h: &WeakHopfAlgebra<F>) -> Self {
        HModule {
            name: "zero".into(),
            algebra: h.name().to_string(),
            space: VectorSpace::numbered("z", 0),
            action: vec![LinMap::zero(0, 0); h.dim()],
        }
    }

    /// The submodule or quotient-free restriction of `self` to an invariant
    /// subspace (checked).
    pub fn restrict(&self, sub: &Subspace<F>, name: impl Into<String>) -> Result<Self, ModuleError> {
        let action = self
            .action
            .iter()
            .map(|a| {
                let m = a.compose(sub.inclusion())?;
                sub.restrict_codomain(&m).map_err(ModuleError::EscapesCarrier)
            })
            .collect::<Result<Vec<_>, _>>()?;
        let labels = (0..sub.dim()).map(|k| format!("s{k}")).collect();
        Ok(HModule {
            name: name.into(),
            algebra: self.algebra.clone(),
            space: VectorSpace::new(labels).expect("distinct labels"),
            action,
        })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, LinalgError> {
        if labels.len() != self.dim() {
            return Err(LinalgError::DimensionMismatch(format!(
                "{} labels for a module of dimension {}",
                labels.len(),
                self.dim()
            )));
        }
        self.space = VectorSpace::new(labels)?;
        Ok(self)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn algebra_name(&self) -> &str {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn space(&self) -> &VectorSpace {
        &self.space
    }

    pub fn labels(&self) -> &[String] {
        self.space.labels()
    }

    pub fn action(&self, i: usize) -> &LinMap<F> {
        &self.action[i]
    }

    pub fn actions(&self) -> &[LinMap<F>] {
        &self.action
    }

    /// `x · v` for an algebra element `x`.
    pub fn act(&self, x: &SVec<F>, v: &SVec<F>) -> SVec<F> {
        let mut out = SVec::new();
        for (i, c) in x.iter() {
            out.add_scaled(&self.action[i].apply(v), c);
        }
        out
    }

    /// The action of `x` as a linear map.
    pub fn act_map(&self, x: &SVec<F>) -> LinMap<F> {
        let mut m = LinMap::zero(self.dim(), self.dim());
        for (i, c) in x.iter() {
            m.add_scaled(&self.action[i], c);
        }
        m
    }

    pub fn render(&self, v: &SVec<F>) -> String {
        render_vec(v, |i| self.space.label(i).to_string())
    }
}

/// Module axioms: `1·m = m` and `e_i·(e_j·m) = (e_i e_j)·m`.
pub fn check_module<F: Field>(h: &WeakHopfAlgebra<F>, m: &HModule<F>) -> VerificationReport {
    let d = h.dim();
    let mut rep = VerificationReport::new(format!("module axioms for {}", m.name()));
    let one = m.act_map(h.unit());
    rep.push(CheckResult::from_bool("unit acts as identity", one.is_identity(), || {
        format!("1 acts as a map differing from id in column {:?}", one.first_difference(&LinMap::identity(m.dim())))
    }));
    rep.push(CheckResult::from_witness(
        "action is multiplicative",
        first_witness(d * d, |t| {
            let (i, j) = (t / d, t % d);
            let lhs = m.action(i).compose(m.action(j)).expect("square maps");
            let rhs = m.act_map(h.prod(i, j));
            lhs.first_difference(&rhs).map(|col| {
                Witness::new(
                    vec![i, j, col],
                    vec![h.label(i).to_string(), h.label(j).to_string(), m.space().label(col).to_string()],
                    m.render(lhs.column(col)),
                    m.render(rhs.column(col)),
                )
            })
        }),
    ));
    rep
}

/// Whether `f: M → N` commutes with the actions.
pub fn is_h_linear<F: Field>(f: &LinMap<F>, m: &HModule<F>, n: &HModule<F>) -> bool {
    first_h_linearity_failure(f, m, n).is_none()
}

/// First `(basis index of H, column)` where `f(h·x) ≠ h·f(x)`.
pub fn first_h_linearity_failure<F: Field>(f: &LinMap<F>, m: &HModule<F>, n: &HModule<F>) -> Option<(usize, usize)> {
    (0..m.action.len()).find_map(|i| {
        let a = f.compose(m.action(i)).ok()?;
        let b = n.action(i).compose(f).ok()?;
        a.first_difference(&b).map(|c| (i, c))
    })
}

/// A basis of the maps `f: M → N` (as `rows × cols` matrices) with
/// `constraints(f) = 0`, where `constraints` is linear in `f`.
pub fn solve_linear_maps<F: Field>(
    rows: usize,
    cols: usize,
    constraints: impl Fn(&LinMap<F>) -> Vec<LinMap<F>>,
) -> Vec<LinMap<F>> {
    let unknowns = rows * cols;
    let mut equations = Vec::with_capacity(unknowns);
    for u in 0..unknowns {
        let mut cs = vec![SVec::new(); cols];
        cs[u / rows] = SVec::unit(u % rows);
        let e = LinMap::from_columns(rows, cs);
        let mut flat = SVec::new();
        let mut offset = 0;
        for m in constraints(&e) {
            for (k, col) in m.columns().iter().enumerate() {
                flat.add_vec(&col.remap(|r| offset + k * m.rows() + r));
            }
            offset += m.rows() * m.cols();
        }
        equations.push((flat, offset));
    }
    let height = equations.iter().map(|(_, o)| *o).max().unwrap_or(0);
    let system = LinMap::from_columns(height, equations.into_iter().map(|(v, _)| v).collect());
    system
        .kernel()
        .inclusion()
        .columns()
        .iter()
        .map(|v| {
            let mut cs = vec![SVec::new(); cols];
            for (u, x) in v.iter() {
                cs[u / rows].add_at(u % rows, x.clone());
            }
            LinMap::from_columns(rows, cs)
        })
        .collect()
}

/// A basis of `Hom_H(M, N)`, each element a `dim N × dim M` map.
pub fn module_morphisms<F: Field>(m: &HModule<F>, n: &HModule<F>) -> Vec<LinMap<F>> {
    solve_linear_maps(n.dim(), m.dim(), |f| {
        m.action
            .iter()
            .zip(&n.action)
            .map(|(am, an)| f.compose(am).expect("shapes").sub(&an.compose(f).expect("shapes")).expect("shapes"))
            .collect()
    })
}

/// A pseudo-random element of `Hom_H(M, N)` with small integer coefficients.
pub fn random_morphism<F: Field>(m: &HModule<F>, n: &HModule<F>, rng: &mut Lcg) -> LinMap<F> {
    random_combination(&module_morphisms(m, n), n.dim(), m.dim(), rng)
}

/// A combination of `basis` with coefficients in `-3..=3`.
pub fn random_combination<F: Field>(basis: &[LinMap<F>], rows: usize, cols: usize, rng: &mut Lcg) -> LinMap<F> {
    let mut f = LinMap::zero(rows, cols);
    for b in basis {
        let c = F::from_i64(rng.small_int(3));
        f.add_scaled(b, &c);
    }
    f
}

/// The action of `x ∈ H^{⊗k}` on `M_1 ⊗ … ⊗ M_k`, as a linear map.
pub fn tensor_action<F: Field>(h: &WeakHopfAlgebra<F>, mods: &[&HModule<F>], x: &SVec<F>) -> LinMap<F> {
    let k = mods.len();
    let hdims = vec![h.dim(); k];
    let mdims: Vec<usize> = mods.iter().map(|m| m.dim()).collect();
    let total: usize = mdims.iter().product();
    let terms: Vec<(Vec<usize>, &F)> = x.iter().map(|(i, c)| (split_index(i, &hdims), c)).collect();
    LinMap::from_fn_par(total, total, |col| {
        let parts = split_index(col, &mdims);
        let mut out = SVec::new();
        'term: for (a, c) in &terms {
            let mut acc = SVec::single(0, (*c).clone());
            for leg in 0..k {
                let v = mods[leg].action(a[leg]).column(parts[leg]);
                if v.is_zero() {
                    continue 'term;
                }
                acc = acc.kron(v, mdims[leg]);
            }
            out.add_vec(&acc);
        }
        out
    })
}

/// `M ⊗_t N` as a subspace of `M ⊗ N`, with its module structure in carrier
/// coordinates.
#[derive(Debug, Clone)]
pub struct TruncatedTensor<F> {
    pub module: HModule<F>,
    pub carrier: Subspace<F>,
    pub left_dim: usize,
    pub right_dim: usize,
}

impl<F: Field> TruncatedTensor<F> {
    pub fn dim(&self) -> usize {
        self.carrier.dim()
    }

    pub fn ambient_dim(&self) -> usize {
        self.left_dim * self.right_dim
    }
}

pub fn truncated_tensor<F: Field>(
    h: &Certified<F>,
    m: &HModule<F>,
    n: &HModule<F>,
) -> Result<TruncatedTensor<F>, ModuleError> {
    if m.algebra_name() != n.algebra_name() {
        return Err(ModuleError::AlgebraMismatch(m.algebra_name().into(), n.algebra_name().into()));
    }
    let p = tensor_action(h, &[m, n], h.delta_one_cached());
    let carrier = Subspace::split_idempotent(&p)
        .map_err(|_| ModuleError::IdempotentFailure(format!("{} (x) {}", m.name(), n.name())))?;
    let action = (0..h.dim())
        .map(|i| {
            let a = tensor_action(h, &[m, n], h.coprod(i));
            carrier.projection().compose(&a.compose(carrier.inclusion())?)
        })
        .collect::<Result<Vec<_>, _>>()?;
    let amb: Vec<String> = m
        .labels()
        .iter()
        .flat_map(|a| n.labels().iter().map(move |b| format!("{a}(x){b}")))
        .collect();
    let labels = (0..carrier.dim())
        .map(|k| render_vec(carrier.basis_vector(k), |i| amb[i].clone()))
        .enumerate()
        .map(|(k, s)| if s.len() <= 40 { s } else { format!("c{k}") })
        .collect::<Vec<_>>();
    let labels = dedupe(labels);
    let module = HModule {
        name: format!("({}) (x)_t ({})", m.name(), n.name()),
        algebra: m.algebra.clone(),
        space: VectorSpace::new(labels).expect("deduplicated"),
        action,
    };
    Ok(TruncatedTensor { module, carrier, left_dim: m.dim(), right_dim: n.dim() })
}

fn dedupe(labels: Vec<String>) -> Vec<String> {
    let mut seen = std::collections::HashSet::new();
    labels
        .into_iter()
        .enumerate()
        .map(|(k, s)| if seen.insert(s.clone()) { s } else { format!("{s}#{k}") })
        .collect()
}

/// Unitors of `M` as `(iso, inverse)` pairs on carriers.
#[derive(Debug, Clone)]
pub struct Unitors<F> {
    pub left_tensor: TruncatedTensor<F>,
    pub right_tensor: TruncatedTensor<F>,
    /// `H_t ⊗_t M → M`, `z ⊗ m ↦ z·m`.
    pub left: LinMap<F>,
    pub left_inv: LinMap<F>,
    /// `M ⊗_t H_t → M`, `m ⊗ z ↦ S(z)·m`.
    pub right: LinMap<F>,
    pub right_inv: LinMap<F>,
}

/// `z ⊗ m ↦ z·m` on the ambient `H_t ⊗ M`.
pub fn left_unitor_ambient<F: Field>(h: &Certified<F>, m: &HModule<F>) -> LinMap<F> {
    let ht = h.target();
    let dm = m.dim();
    LinMap::from_fn(dm, ht.dim() * dm, |col| {
        let (z, x) = (col / dm, col % dm);
        m.act(ht.basis_vector(z), &SVec::unit(x))
    })
}

/// `m ⊗ z ↦ S(z)·m` on the ambient `M ⊗ H_t`.
pub fn right_unitor_ambient<F: Field>(h: &Certified<F>, m: &HModule<F>) -> LinMap<F> {
    let ht = h.target();
    let dt = ht.dim();
    LinMap::from_fn(m.dim(), m.dim() * dt, |col| {
        let (x, z) = (col / dt, col % dt);
        m.act(&h.antipode(ht.basis_vector(z)), &SVec::unit(x))
    })
}

pub fn unitors<F: Field>(h: &Certified<F>, m: &HModule<F>) -> Result<Unitors<F>, ModuleError> {
    let unit = HModule::unit_object(h);
    let lt = truncated_tensor(h, &unit, m)?;
    let rt = truncated_tensor(h, m, &unit)?;
    let one_t = h.target().coords(h.unit()).expect("1 lies in H_t");
    let dm = m.dim();
    let dt = unit.dim();
    let left = left_unitor_ambient(h, m).compose(lt.carrier.inclusion())?;
    let d1_lt = tensor_action(h, &[&unit, m], h.delta_one_cached());
    let left_inv = LinMap::from_fn(lt.dim(), dm, |x| lt.carrier.projection().apply(&d1_lt.apply(&one_t.kron(&SVec::unit(x), dm))));
    let right = right_unitor_ambient(h, m).compose(rt.carrier.inclusion())?;
    let d1_rt = tensor_action(h, &[m, &unit], h.delta_one_cached());
    let right_inv =
        LinMap::from_fn(rt.dim(), dm, |x| rt.carrier.projection().apply(&d1_rt.apply(&SVec::unit(x).kron(&one_t, dt))));
    Ok(Unitors { left_tensor: lt, right_tensor: rt, left, left_inv, right, right_inv })
}

/// `m ⊗ n ↦ R²·n ⊗ R¹·m` on the ambient `M ⊗ N`, landing in `N ⊗ M`.
pub fn braiding_ambient<F: Field>(q: &QtAlgebra<F>, m: &HModule<F>, n: &HModule<F>) -> LinMap<F> {
    let act = tensor_action(q, &[n, m], &q.flip(q.r()));
    act.compose(&LinMap::swap(m.dim(), n.dim())).expect("shapes agree")
}

/// `n ⊗ m ↦ R̄¹·m ⊗ R̄²·n` on the ambient `N ⊗ M`, landing in `M ⊗ N`.
pub fn braiding_inverse_ambient<F: Field>(q: &QtAlgebra<F>, m: &HModule<F>, n: &HModule<F>) -> LinMap<F> {
    let act = tensor_action(q, &[m, n], q.r_bar());
    act.compose(&LinMap::swap(n.dim(), m.dim())).expect("shapes agree")
}

/// The braiding `C_{M,N}` and its inverse on the carriers.
#[derive(Debug, Clone)]
pub struct Braiding<F> {
    pub source: TruncatedTensor<F>,
    pub target: TruncatedTensor<F>,
    pub map: LinMap<F>,
    pub inverse: LinMap<F>,
}

pub fn braiding_c<F: Field>(q: &QtAlgebra<F>, m: &HModule<F>, n: &HModule<F>) -> Result<Braiding<F>, ModuleError> {
    let source = truncated_tensor(q, m, n)?;
    let target = truncated_tensor(q, n, m)?;
    let fwd = braiding_ambient(q, m, n).compose(source.carrier.inclusion())?;
    let map = target.carrier.restrict_codomain(&fwd).map_err(ModuleError::EscapesCarrier)?;
    let bwd = braiding_inverse_ambient(q, m, n).compose(target.carrier.inclusion())?;
    let inverse = source.carrier.restrict_codomain(&bwd).map_err(ModuleError::EscapesCarrier)?;
    Ok(Braiding { source, target, map, inverse })
}

fn map_witness<F: Field>(labels: &[String], a: &LinMap<F>, b: &LinMap<F>, col_label: impl Fn(usize) -> String) -> Option<Witness> {
    a.first_difference(b).map(|c| {
        let lab = |i: usize| labels.get(i).cloned().unwrap_or_else(|| format!("e{i}"));
        Witness::new(vec![c], vec![col_label(c)], render_vec(a.column(c), lab), render_vec(b.column(c), lab))
    })
}

/// Applies an ambient map to legs `[leg, leg + width)` of a tensor of
/// modules with dimensions `dims`, producing legs with dimensions `out`.
pub fn on_legs<F: Field>(dims: &[usize], leg: usize, width: usize, f: &LinMap<F>, out: &[usize]) -> LinMap<F> {
    let before: usize = dims[..leg].iter().product();
    let after: usize = dims[leg + width..].iter().product();
    debug_assert_eq!(f.cols(), dims[leg..leg + width].iter().product::<usize>());
    debug_assert_eq!(f.rows(), out.iter().product::<usize>());
    LinMap::identity(before).tensor(f).tensor(&LinMap::identity(after))
}

/// Monoidal and braided coherence on sample modules: nested carriers agree,
/// triangle identity, both hexagons, braiding invertibility and H-linearity,
/// and naturality on sampled morphisms.
pub fn check_monoidal_coherence<F: Field>(
    q: &QtAlgebra<F>,
    samples: &[HModule<F>],
    seed: u64,
) -> VerificationReport {
    let mut rep = VerificationReport::new(format!("monoidal coherence on {}", q.name()));
    let h: &Certified<F> = q;
    let mut rng = Lcg::new(seed);
    let unit = HModule::unit_object(h);
    for m in samples {
        rep.absorb(check_module(h, m));
        match unitors(h, m) {
            Ok(u) => {
                let ok = u.left.compose(&u.left_inv).map(|x| x.is_identity()).unwrap_or(false)
                    && u.left_inv.compose(&u.left).map(|x| x.is_identity()).unwrap_or(false)
                    && u.right.compose(&u.right_inv).map(|x| x.is_identity()).unwrap_or(false)
                    && u.right_inv.compose(&u.right).map(|x| x.is_identity()).unwrap_or(false);
                rep.push(CheckResult::from_bool(format!("unitors of {} are mutually inverse", m.name()), ok, || {
                    "l l^-1, l^-1 l, r r^-1 or r^-1 r differs from id".into()
                }));
                let lin = is_h_linear(&u.left, &u.left_tensor.module, m) && is_h_linear(&u.right, &u.right_tensor.module, m);
                rep.push(CheckResult::from_bool(format!("unitors of {} are H-linear", m.name()), lin, || {
                    "l or r does not commute with the action".into()
                }));
            }
            Err(e) => rep.push(CheckResult::from_bool(format!("unitors of {}", m.name()), false, || e.to_string())),
        }
    }
    for m in samples {
        for n in samples {
            let name = format!("{}, {}", m.name(), n.name());
            match braiding_c(q, m, n) {
                Ok(b) => {
                    let inv = b.map.compose(&b.inverse).map(|x| x.is_identity()).unwrap_or(false)
                        && b.inverse.compose(&b.map).map(|x| x.is_identity()).unwrap_or(false);
                    rep.push(CheckResult::from_bool(format!("braiding C({name}) inverse from Rbar"), inv, || {
                        "C C^-1 or C^-1 C differs from id".into()
                    }));
                    rep.push(CheckResult::from_bool(
                        format!("braiding C({name}) is H-linear"),
                        is_h_linear(&b.map, &b.source.module, &b.target.module),
                        || format!("{:?}", first_h_linearity_failure(&b.map, &b.source.module, &b.target.module)),
                    ));
                }
                Err(e) => rep.push(CheckResult::from_bool(format!("braiding C({name})"), false, || e.to_string())),
            }
        }
    }
    // Triangle identity and hexagons on triples.
    for m in samples {
        for n in samples {
            rep.push(check_triangle(h, m, n, &unit));
            for p in samples {
                rep.absorb(check_triple(q, m, n, p));
            }
        }
    }
    // Naturality on sampled morphisms.
    for m in samples {
        for n in samples {
            let f = random_morphism(m, m, &mut rng);
            let g = random_morphism(n, n, &mut rng);
            rep.push(check_naturality(q, m, n, m, n, &f, &g));
        }
    }
    rep
}

fn check_triangle<F: Field>(h: &Certified<F>, m: &HModule<F>, n: &HModule<F>, unit: &HModule<F>) -> CheckResult {
    let name = format!("triangle identity for {}, {}", m.name(), n.name());
    let run = || -> Result<Option<Witness>, ModuleError> {
        let dims = [m.dim(), unit.dim(), n.dim()];
        let p = tensor_action(h, &[m, unit, n], &h.comul_leg(h.delta_one_cached(), 2, 0));
        let carrier = Subspace::split_idempotent(&p)?;
        let lhs = on_legs(&dims, 1, 2, &left_unitor_ambient(h, n), &[n.dim()]).compose(carrier.inclusion())?;
        let rhs = on_legs(&dims, 0, 2, &right_unitor_ambient(h, m), &[m.dim()]).compose(carrier.inclusion())?;
        let labels = tensor_labels(&[m.labels(), n.labels()]);
        Ok(map_witness(&labels, &lhs, &rhs, |c| format!("carrier vector {c}")))
    };
    match run() {
        Ok(w) => CheckResult::from_witness(name, w),
        Err(e) => CheckResult::from_bool(name, false, || e.to_string()),
    }
}

/// Labels of a tensor product of labelled bases.
pub fn tensor_labels(parts: &[&[String]]) -> Vec<String> {
    let mut out = vec![String::new()];
    for (k, labels) in parts.iter().enumerate() {
        out = out
            .iter()
            .flat_map(|a| labels.iter().map(move |b| if k == 0 { b.clone() } else { format!("{a}(x){b}") }))
            .collect();
    }
    out
}

fn check_triple<F: Field>(q: &QtAlgebra<F>, m: &HModule<F>, n: &HModule<F>, p: &HModule<F>) -> VerificationReport {
    let h: &Certified<F> = q;
    let names = format!("{}, {}, {}", m.name(), n.name(), p.name());
    let mut rep = VerificationReport::new("");
    let run = |rep: &mut VerificationReport| -> Result<(), ModuleError> {
        let (dm, dn, dp) = (m.dim(), n.dim(), p.dim());
        let mn = truncated_tensor(h, m, n)?;
        let np = truncated_tensor(h, n, p)?;
        let mn_p = truncated_tensor(h, &mn.module, p)?;
        let m_np = truncated_tensor(h, m, &np.module)?;
        let left_amb = mn.carrier.inclusion().tensor(&LinMap::identity(dp)).compose(mn_p.carrier.inclusion())?;
        let right_amb = LinMap::identity(dm).tensor(np.carrier.inclusion()).compose(m_np.carrier.inclusion())?;
        let delta2 = h.comul_leg(h.delta_one_cached(), 2, 0);
        let cube = Subspace::split_idempotent(&tensor_action(h, &[m, n, p], &delta2))?;
        let a = Subspace::span(dm * dn * dp, left_amb.columns().to_vec());
        let b = Subspace::span(dm * dn * dp, right_amb.columns().to_vec());
        rep.push(CheckResult::from_bool(
            format!("nested carriers agree for {names}"),
            a.same_as(&b) && a.same_as(&cube),
            || format!("dims {} / {} / {}", a.dim(), b.dim(), cube.dim()),
        ));
        // Hexagon: C_{M⊗N,P} = (C_{M,P} ⊗ id_N)(id_M ⊗ C_{N,P}), compared in P⊗M⊗N.
        let c_mn_p = braiding_c(q, &mn.module, p)?;
        let lhs = LinMap::identity(dp)
            .tensor(mn.carrier.inclusion())
            .compose(c_mn_p.target.carrier.inclusion())?
            .compose(&c_mn_p.map)?
            .compose(mn_p.carrier.projection())?
            .compose(&mn.carrier.projection().tensor(&LinMap::identity(dp)))?
            .compose(cube.inclusion())?;
        let step1 = on_legs(&[dm, dn, dp], 1, 2, &braiding_ambient(q, n, p), &[dp, dn]);
        let step2 = on_legs(&[dm, dp, dn], 0, 2, &braiding_ambient(q, m, p), &[dp, dm]);
        let rhs = step2.compose(&step1)?.compose(cube.inclusion())?;
        let labels = tensor_labels(&[p.labels(), m.labels(), n.labels()]);
        rep.push(CheckResult::from_witness(
            format!("first hexagon for {names}"),
            map_witness(&labels, &lhs, &rhs, |c| format!("cube vector {c}")),
        ));
        // Hexagon: C_{M,N⊗P} = (id_N ⊗ C_{M,P})(C_{M,N} ⊗ id_P), compared in N⊗P⊗M.
        let c_m_np = braiding_c(q, m, &np.module)?;
        let lhs = np
            .carrier
            .inclusion()
            .tensor(&LinMap::identity(dm))
            .compose(c_m_np.target.carrier.inclusion())?
            .compose(&c_m_np.map)?
            .compose(m_np.carrier.projection())?
            .compose(&LinMap::identity(dm).tensor(np.carrier.projection()))?
            .compose(cube.inclusion())?;
        let step1 = on_legs(&[dm, dn, dp], 0, 2, &braiding_ambient(q, m, n), &[dn, dm]);
        let step2 = on_legs(&[dn, dm, dp], 1, 2, &braiding_ambient(q, m, p), &[dp, dm]);
        let rhs = step2.compose(&step1)?.compose(cube.inclusion())?;
        let labels = tensor_labels(&[n.labels(), p.labels(), m.labels()]);
        rep.push(CheckResult::from_witness(
            format!("second hexagon for {names}"),
            map_witness(&labels, &lhs, &rhs, |c| format!("cube vector {c}")),
        ));
        Ok(())
    };
    if let Err(e) = run(&mut rep) {
        rep.push(CheckResult::from_bool(format!("coherence for {names}"), false, || e.to_string()));
    }
    rep
}

/// `C_{M',N'} ∘ (f ⊗ g) = (g ⊗ f) ∘ C_{M,N}` on the carrier of `M ⊗_t N`.
pub fn check_naturality<F: Field>(
    q: &QtAlgebra<F>,
    m: &HModule<F>,
    n: &HModule<F>,
    m2: &HModule<F>,
    n2: &HModule<F>,
    f: &LinMap<F>,
    g: &LinMap<F>,
) -> CheckResult {
    let name = format!("braiding natural for morphisms on {}, {}", m.name(), n.name());
    let run = || -> Result<Option<Witness>, ModuleError> {
        let src = truncated_tensor(q, m, n)?;
        let lhs = braiding_ambient(q, m2, n2).compose(&f.tensor(g))?.compose(src.carrier.inclusion())?;
        let rhs = g.tensor(f).compose(&braiding_ambient(q, m, n))?.compose(src.carrier.inclusion())?;
        let labels = tensor_labels(&[n2.labels(), m2.labels()]);
        Ok(map_witness(&labels, &lhs, &rhs, |c| format!("carrier vector {c}")))
    };
    match run() {
        Ok(w) => CheckResult::from_witness(name, w),
        Err(e) => CheckResult::from_bool(name, false, || e.to_string()),
    }
}

/// Label helper for flat indices of `M ⊗ N`.
pub fn pair_label<F: Field>(m: &HModule<F>, n: &HModule<F>, idx: usize) -> String {
    let parts = split_index(idx, &[m.dim(), n.dim()]);
    format!("{}(x){}", m.space().label(parts[0]), n.space().label(parts[1]))
}

/// Index of `e_a ⊗ e_b` in `M ⊗ N`.
pub fn pair_index(dm: usize, dn: usize, a: usize, b: usize) -> usize {
    join_index(&[a, b], &[dm, dn])
}
