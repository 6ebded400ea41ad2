//! JSON bundles for algebras, modules, comodule algebras and transmuted
//! algebras, with a canonical byte-stable writer.
//!
//! Every table is a list of index tuples followed by a scalar string, sorted
//! by index. Scalars use the canonical rendering of [`Scalar::render`].

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;
use whakit_core::examples::QtInstance;
use whakit_core::galois::ComoduleAlgebra;
use whakit_core::linalg::{LinMap, LinalgError, SVec, VectorSpace};
use whakit_core::module_cat::{HModule, ModuleError};
use whakit_core::scalar::ScalarError;
use whakit_core::transmutation::BraidedHopf;
use whakit_core::quasitriangular::QtAlgebra;
use whakit_core::weak_hopf::{Certified, StructureConstants, WeakHopfAlgebra};
use whakit_core::{FieldDesc, Scalar};

#[derive(Debug, Error)]
pub enum BundleError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("bad scalar {text:?}: {source}")]
    Scalar { text: String, source: ScalarError },
    #[error("{0}")]
    Shape(String),
    #[error(transparent)]
    Module(#[from] ModuleError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("{0} carries no r_matrix")]
    MissingR(String),
    #[error("{0}")]
    NotCertified(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum FieldJson {
    Rational,
    Cyclotomic { order: u32 },
}

impl From<FieldJson> for FieldDesc {
    fn from(f: FieldJson) -> Self {
        match f {
            FieldJson::Rational => FieldDesc::Rational,
            FieldJson::Cyclotomic { order } => FieldDesc::Cyclotomic { order },
        }
    }
}

impl From<FieldDesc> for FieldJson {
    fn from(f: FieldDesc) -> Self {
        match f {
            FieldDesc::Rational => FieldJson::Rational,
            FieldDesc::Cyclotomic { order } => FieldJson::Cyclotomic { order },
        }
    }
}

type T1 = (usize, String);
type T2 = (usize, usize, String);
type T3 = (usize, usize, usize, String);

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AlgebraBundle {
    pub name: String,
    pub field: FieldJson,
    pub dim: usize,
    pub basis_labels: Vec<String>,
    pub mult: Vec<T3>,
    pub unit: Vec<T1>,
    pub comult: Vec<T3>,
    pub counit: Vec<T1>,
    pub antipode: Vec<T2>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub antipode_inverse: Option<Vec<T2>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r_matrix: Option<Vec<T2>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r_inverse: Option<Vec<T2>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModuleBundle {
    pub name: String,
    pub algebra: String,
    pub dim: usize,
    pub basis_labels: Vec<String>,
    /// `[h, row, col, c]`: the action of `e_h` has entry `c` at `(row, col)`.
    pub action: Vec<T3>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coaction_h: Option<Vec<T3>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coaction_rh: Option<Vec<T3>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComoduleAlgebraBundle {
    pub base: AlgebraBundle,
    pub carrier_dim: usize,
    #[serde(flatten)]
    pub module: ModuleBundle,
    /// `[i, j, k, c]`: `e_i e_j ∋ c e_k` on the ambient `A ⊗ A`.
    pub mult: Vec<T3>,
    /// `[z, k, c]`: the unit sends the `z`-th basis vector of `H_t` to `Σ c e_k`.
    pub unit: Vec<T2>,
    /// `[m, b, n, c]`: `ρ^l(e_m) ∋ c b ⊗ e_n`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub left_coaction: Option<Vec<T3>>,
    /// `[m, n, b, c]`: `ρ^r(e_m) ∋ c e_n ⊗ b`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub right_coaction: Option<Vec<T3>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BraidedBundle {
    pub name: String,
    pub base: String,
    pub field: FieldJson,
    pub carrier_dim: usize,
    pub basis_labels: Vec<String>,
    /// `[ambient, k, c]`: carrier basis vector `k` has coefficient `c` on `e_ambient`.
    pub carrier_inclusion: Vec<T2>,
    pub mult: Vec<T3>,
    pub unit: Vec<T2>,
    /// `[k, i, j, c]`: `Δ̄(b_k) ∋ c b_i ⊗ b_j`.
    pub comult: Vec<T3>,
    /// `[k, z, c]`: `ε_t(b_k) ∋ c t_z`.
    pub counit: Vec<T2>,
    pub antipode: Vec<T2>,
}

/// Pretty JSON with a trailing newline. Arrays of scalars stay on one line,
/// field order is the struct order and every table is sorted, so equal values
/// give equal bytes.
pub fn to_canonical_json<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("bundles serialize");
    let mut out = String::new();
    write_value(&mut out, &v, 0);
    out.push('\n');
    out
}

fn is_flat(v: &Value) -> bool {
    !matches!(v, Value::Array(_) | Value::Object(_))
}

fn write_value(out: &mut String, v: &Value, depth: usize) {
    let pad = |out: &mut String, d: usize| out.push_str(&"  ".repeat(d));
    match v {
        Value::Array(items) if items.is_empty() => out.push_str("[]"),
        Value::Array(items) if items.iter().all(is_flat) => {
            let parts: Vec<String> = items.iter().map(|x| x.to_string()).collect();
            out.push('[');
            out.push_str(&parts.join(", "));
            out.push(']');
        }
        Value::Array(items) => {
            out.push_str("[\n");
            for (k, x) in items.iter().enumerate() {
                pad(out, depth + 1);
                write_value(out, x, depth + 1);
                out.push_str(if k + 1 < items.len() { ",\n" } else { "\n" });
            }
            pad(out, depth);
            out.push(']');
        }
        Value::Object(map) if map.is_empty() => out.push_str("{}"),
        Value::Object(map) => {
            out.push_str("{\n");
            for (k, (key, x)) in map.iter().enumerate() {
                pad(out, depth + 1);
                out.push_str(&Value::String(key.clone()).to_string());
                out.push_str(": ");
                write_value(out, x, depth + 1);
                out.push_str(if k + 1 < map.len() { ",\n" } else { "\n" });
            }
            pad(out, depth);
            out.push('}');
        }
        scalar => out.push_str(&scalar.to_string()),
    }
}

fn parse(text: &str, field: FieldDesc) -> Result<Scalar, BundleError> {
    Scalar::parse(text, field).map_err(|source| BundleError::Scalar { text: text.to_string(), source })
}

fn check_index(what: &str, i: usize, bound: usize) -> Result<usize, BundleError> {
    if i < bound {
        Ok(i)
    } else {
        Err(BundleError::Shape(format!("index {i} out of range {bound} in {what}")))
    }
}

/// Sums repeated keys, drops zeros and renders in key order.
fn merged<K: Ord + Clone>(terms: impl IntoIterator<Item = (K, Scalar)>) -> Vec<(K, String)> {
    let mut acc: BTreeMap<K, Scalar> = BTreeMap::new();
    for (k, c) in terms {
        let e = acc.entry(k).or_insert_with(Scalar::zero);
        *e = e.clone() + &c;
    }
    acc.into_iter().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (k, c.render())).collect()
}

fn t1(v: &[(usize, Scalar)]) -> Vec<T1> {
    merged(v.iter().cloned())
}

fn t2(v: &[(usize, usize, Scalar)]) -> Vec<T2> {
    merged(v.iter().map(|(i, j, c)| ((*i, *j), c.clone()))).into_iter().map(|((i, j), c)| (i, j, c)).collect()
}

fn t3(v: &[(usize, usize, usize, Scalar)]) -> Vec<T3> {
    merged(v.iter().map(|(i, j, k, c)| ((*i, *j, *k), c.clone()))).into_iter().map(|((i, j, k), c)| (i, j, k, c)).collect()
}

fn vec_terms(v: &SVec<Scalar>, d: usize) -> Vec<(usize, usize, Scalar)> {
    v.iter().map(|(k, c)| (k / d, k % d, c.clone())).collect()
}

/// `[col, row, c]` entries of a map, column-major.
fn map_entries(m: &LinMap<Scalar>) -> Vec<(usize, usize, Scalar)> {
    m.columns().iter().enumerate().flat_map(|(j, col)| col.iter().map(move |(i, c)| (j, i, c.clone()))).collect()
}

/// A map `X → Y ⊗ Z` as `[x, y, z, c]`.
fn split_entries(m: &LinMap<Scalar>, dz: usize) -> Vec<(usize, usize, usize, Scalar)> {
    map_entries(m).into_iter().map(|(x, k, c)| (x, k / dz, k % dz, c)).collect()
}

/// A map `X ⊗ Y → Z` as `[x, y, z, c]`.
fn merge_entries(m: &LinMap<Scalar>, dy: usize) -> Vec<(usize, usize, usize, Scalar)> {
    map_entries(m).into_iter().map(|(k, z, c)| (k / dy, k % dy, z, c)).collect()
}

/// `r_matrix` with `r_inverse` when present.
pub type RMatrices = (SVec<Scalar>, Option<SVec<Scalar>>);

impl AlgebraBundle {
    pub fn from_instance(inst: &QtInstance, field: FieldDesc) -> Self {
        let sc = &inst.constants;
        let d = sc.labels.len();
        AlgebraBundle {
            name: sc.name.clone(),
            field: field.into(),
            dim: d,
            basis_labels: sc.labels.clone(),
            mult: t3(&sc.mult),
            unit: t1(&sc.unit),
            comult: t3(&sc.comult),
            counit: t1(&sc.counit),
            antipode: t2(&sc.antipode),
            antipode_inverse: sc.antipode_inverse.as_ref().map(|a| t2(a)),
            r_matrix: Some(t2(&vec_terms(&inst.r, d))),
            r_inverse: Some(t2(&vec_terms(&inst.r_bar, d))),
        }
    }

    pub fn field_desc(&self) -> FieldDesc {
        self.field.into()
    }

    /// Parses every table; the R-matrix pair is returned when present.
    pub fn to_instance(&self) -> Result<(StructureConstants<Scalar>, Option<RMatrices>), BundleError> {
        let f = self.field_desc();
        let d = self.dim;
        if self.basis_labels.len() != d {
            return Err(BundleError::Shape(format!("{} basis labels for dimension {d}", self.basis_labels.len())));
        }
        let p1 = |what: &str, v: &[T1]| -> Result<Vec<(usize, Scalar)>, BundleError> {
            v.iter().map(|(i, c)| Ok((check_index(what, *i, d)?, parse(c, f)?))).collect()
        };
        let p2 = |what: &str, v: &[T2]| -> Result<Vec<(usize, usize, Scalar)>, BundleError> {
            v.iter().map(|(i, j, c)| Ok((check_index(what, *i, d)?, check_index(what, *j, d)?, parse(c, f)?))).collect()
        };
        let p3 = |what: &str, v: &[T3]| -> Result<Vec<(usize, usize, usize, Scalar)>, BundleError> {
            v.iter()
                .map(|(i, j, k, c)| Ok((check_index(what, *i, d)?, check_index(what, *j, d)?, check_index(what, *k, d)?, parse(c, f)?)))
                .collect()
        };
        let sc = StructureConstants {
            name: self.name.clone(),
            labels: self.basis_labels.clone(),
            mult: p3("mult", &self.mult)?,
            unit: p1("unit", &self.unit)?,
            comult: p3("comult", &self.comult)?,
            counit: p1("counit", &self.counit)?,
            antipode: p2("antipode", &self.antipode)?,
            antipode_inverse: self.antipode_inverse.as_ref().map(|a| p2("antipode_inverse", a)).transpose()?,
        };
        let to_vec = |terms: Vec<(usize, usize, Scalar)>| {
            let mut v = SVec::new();
            for (i, j, c) in terms {
                v.add_at(i * d + j, c);
            }
            v
        };
        let r = match &self.r_matrix {
            Some(r) => {
                let rb = self.r_inverse.as_ref().map(|x| p2("r_inverse", x)).transpose()?.map(to_vec);
                Some((to_vec(p2("r_matrix", r)?), rb))
            }
            None => None,
        };
        Ok((sc, r))
    }

    /// Parses and certifies the algebra and its R-matrix.
    pub fn to_qt(&self) -> Result<QtAlgebra<Scalar>, BundleError> {
        let (sc, r) = self.to_instance()?;
        let (r, r_bar) = r.ok_or_else(|| BundleError::MissingR(self.name.clone()))?;
        let alg = WeakHopfAlgebra::from_constants(sc).map_err(|e| BundleError::Shape(e.to_string()))?;
        let cert = alg.certify().map_err(|e| BundleError::NotCertified(e.to_string()))?;
        QtAlgebra::certify(cert, r, r_bar).map_err(|e| BundleError::NotCertified(e.to_string()))
    }

    pub fn from_json(text: &str) -> Result<Self, BundleError> {
        Ok(serde_json::from_str(text)?)
    }
}

fn module_tables(m: &HModule<Scalar>) -> Vec<T3> {
    let mut out = Vec::new();
    for (h, a) in m.actions().iter().enumerate() {
        for (col, row, c) in map_entries(a) {
            out.push((h, row, col, c));
        }
    }
    t3(&out)
}

impl ModuleBundle {
    pub fn from_module(m: &HModule<Scalar>) -> Self {
        ModuleBundle {
            name: m.name().to_string(),
            algebra: m.algebra_name().to_string(),
            dim: m.dim(),
            basis_labels: m.labels().to_vec(),
            action: module_tables(m),
            coaction_h: None,
            coaction_rh: None,
        }
    }

    pub fn with_coaction_rh(mut self, coaction: &LinMap<Scalar>) -> Self {
        self.coaction_rh = Some(t3(&split_entries(coaction, self.dim)));
        self
    }

    pub fn with_coaction_h(mut self, coaction: &LinMap<Scalar>) -> Self {
        self.coaction_h = Some(t3(&split_entries(coaction, self.dim)));
        self
    }

    pub fn to_module(&self, h: &Certified<Scalar>, field: FieldDesc) -> Result<HModule<Scalar>, BundleError> {
        if self.algebra != h.name() {
            return Err(BundleError::Shape(format!("module over {} used with algebra {}", self.algebra, h.name())));
        }
        let d = self.dim;
        let mut cols = vec![vec![SVec::new(); d]; h.dim()];
        for (i, row, col, c) in &self.action {
            let i = check_index("action", *i, h.dim())?;
            let (row, col) = (check_index("action", *row, d)?, check_index("action", *col, d)?);
            cols[i][col].add_at(row, parse(c, field)?);
        }
        let action = cols.into_iter().map(|cs| LinMap::from_columns(d, cs)).collect();
        let space = VectorSpace::new(self.basis_labels.clone())?;
        Ok(HModule::new(self.name.clone(), h, space, action)?)
    }

    /// A coaction table `[m, x, n, c]` as a map `M → X ⊗ M`.
    pub fn coaction_map(&self, table: &[T3], dx: usize, field: FieldDesc) -> Result<LinMap<Scalar>, BundleError> {
        parse_split(table, self.dim, dx, self.dim, field, false)
    }
}

/// `[m, x, n, c]` (or `[m, n, x, c]` when `right`) into a map `M → X ⊗ N` (or `N ⊗ X`).
fn parse_split(table: &[T3], dm: usize, dx: usize, dn: usize, field: FieldDesc, right: bool) -> Result<LinMap<Scalar>, BundleError> {
    let mut cols = vec![SVec::new(); dm];
    for (m, a, b, c) in table {
        let m = check_index("coaction", *m, dm)?;
        let k = if right {
            check_index("coaction", *a, dn)? * dx + check_index("coaction", *b, dx)?
        } else {
            check_index("coaction", *a, dx)? * dn + check_index("coaction", *b, dn)?
        };
        cols[m].add_at(k, parse(c, field)?);
    }
    Ok(LinMap::from_columns(dx * dn, cols))
}

impl ComoduleAlgebraBundle {
    pub fn from_algebra(base: AlgebraBundle, b: &BraidedHopf<Scalar>, a: &ComoduleAlgebra<Scalar>) -> Self {
        let da = a.dim();
        let c = b.dim();
        let module = ModuleBundle::from_module(&a.module);
        let unit = map_entries(&a.unit);
        let right = a.right.as_ref().map(|r| {
            let e: Vec<_> = map_entries(r).into_iter().map(|(m, k, v)| (m, k / c, k % c, v)).collect();
            t3(&e)
        });
        ComoduleAlgebraBundle {
            base,
            carrier_dim: c,
            module,
            mult: t3(&merge_entries(&a.mult, da)),
            unit: t2(&unit),
            left_coaction: a.left.as_ref().map(|l| t3(&split_entries(l, da))),
            right_coaction: right,
        }
    }

    pub fn to_algebra(&self, b: &BraidedHopf<Scalar>) -> Result<ComoduleAlgebra<Scalar>, BundleError> {
        let field = self.base.field_desc();
        let h: &Certified<Scalar> = b.base();
        if self.carrier_dim != b.dim() {
            return Err(BundleError::Shape(format!("carrier dimension {} but the transmutation has {}", self.carrier_dim, b.dim())));
        }
        let module = self.module.to_module(h, field)?;
        let da = module.dim();
        let c = b.dim();
        let dt = h.target().dim();
        let mut mult = vec![SVec::new(); da * da];
        for (i, j, k, s) in &self.mult {
            let col = check_index("mult", *i, da)? * da + check_index("mult", *j, da)?;
            mult[col].add_at(check_index("mult", *k, da)?, parse(s, field)?);
        }
        let mut unit = vec![SVec::new(); dt];
        for (z, k, s) in &self.unit {
            unit[check_index("unit", *z, dt)?].add_at(check_index("unit", *k, da)?, parse(s, field)?);
        }
        let left = self.left_coaction.as_ref().map(|t| parse_split(t, da, c, da, field, false)).transpose()?;
        let right = self.right_coaction.as_ref().map(|t| parse_split(t, da, c, da, field, true)).transpose()?;
        ComoduleAlgebra::new(b, module, LinMap::from_columns(da, mult), LinMap::from_columns(da, unit), left, right)
            .map_err(|e| BundleError::Shape(e.to_string()))
    }
}

impl BraidedBundle {
    pub fn from_braided(b: &BraidedHopf<Scalar>, field: FieldDesc) -> Self {
        let c = b.dim();
        BraidedBundle {
            name: format!("R({})", b.base().name()),
            base: b.base().name().to_string(),
            field: field.into(),
            carrier_dim: c,
            basis_labels: (0..c).map(|k| b.label(k).to_string()).collect(),
            carrier_inclusion: t2(&map_entries(b.carrier().inclusion()).into_iter().map(|(k, a, v)| (a, k, v)).collect::<Vec<_>>()),
            mult: t3(&merge_entries(b.mult_ambient(), c)),
            unit: t2(&map_entries(b.unit())),
            comult: t3(&split_entries(b.comult_ambient(), c)),
            counit: t2(&map_entries(b.counit())),
            antipode: t2(&map_entries(b.antipode())),
        }
    }
}
