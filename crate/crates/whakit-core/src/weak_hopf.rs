//! Weak Hopf algebras presented by structure constants.
//!
//! Every Sweedler-notation identity is evaluated by explicit contractions of
//! the constant tables on tensor powers of `H`. All identity checks are
//! multilinear, so running them on basis tuples proves them on the whole space.

use std::ops::Deref;
use std::sync::Arc;

use thiserror::Error;

use crate::linalg::{join_index, split_index, LinMap, SVec, Subspace, VectorSpace};
use crate::report::{first_witness, render_vec, tensor_label, CheckResult, VerificationReport, Witness};
use crate::scalar::Field;

#[derive(Debug, Clone, Error)]
pub enum WhaError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("index {index} out of range for dimension {dim} in {table}")]
    IndexOutOfRange { table: &'static str, index: usize, dim: usize },
    #[error("algebra {name} failed certification: {first}")]
    NotCertified { name: String, first: String, report: Box<VerificationReport> },
}

/// Raw structure constants, as read from a bundle.
#[derive(Debug, Clone, PartialEq)]
pub struct StructureConstants<F> {
    pub name: String,
    pub labels: Vec<String>,
    /// `(i, j, k, c)`: `e_i e_j ∋ c e_k`.
    pub mult: Vec<(usize, usize, usize, F)>,
    pub unit: Vec<(usize, F)>,
    /// `(i, j, k, c)`: `Δ(e_i) ∋ c e_j ⊗ e_k`.
    pub comult: Vec<(usize, usize, usize, F)>,
    pub counit: Vec<(usize, F)>,
    /// `(i, j, c)`: `S(e_i) ∋ c e_j`.
    pub antipode: Vec<(usize, usize, F)>,
    pub antipode_inverse: Option<Vec<(usize, usize, F)>>,
}

/// A weak Hopf algebra given by structure constants; not yet verified.
#[derive(Debug, Clone, PartialEq)]
pub struct WeakHopfAlgebra<F> {
    name: String,
    space: VectorSpace,
    mult: Vec<SVec<F>>,
    unit: SVec<F>,
    comult: Vec<SVec<F>>,
    counit: Vec<F>,
    antipode: LinMap<F>,
    antipode_inverse: Option<LinMap<F>>,
}

fn nonzero<F: Field>(c: F) -> Option<F> {
    (!c.is_zero()).then_some(c)
}

fn check_idx(table: &'static str, index: usize, dim: usize) -> Result<(), WhaError> {
    if index >= dim {
        Err(WhaError::IndexOutOfRange { table, index, dim })
    } else {
        Ok(())
    }
}

fn map_from_pairs<F: Field>(
    table: &'static str,
    d: usize,
    pairs: &[(usize, usize, F)],
) -> Result<LinMap<F>, WhaError> {
    let mut cols = vec![SVec::new(); d];
    for (i, j, c) in pairs {
        check_idx(table, *i, d)?;
        check_idx(table, *j, d)?;
        cols[*i].add_at(*j, c.clone());
    }
    Ok(LinMap::from_columns(d, cols))
}

fn pairs_from_map<F: Field>(m: &LinMap<F>) -> Vec<(usize, usize, F)> {
    let mut out = Vec::new();
    for (i, col) in m.columns().iter().enumerate() {
        for (j, c) in col.iter() {
            out.push((i, j, c.clone()));
        }
    }
    out
}

impl<F: Field> WeakHopfAlgebra<F> {
    pub fn from_constants(sc: StructureConstants<F>) -> Result<Self, WhaError> {
        let d = sc.labels.len();
        let space = VectorSpace::new(sc.labels).map_err(|e| WhaError::DimensionMismatch(e.to_string()))?;
        let mut mult = vec![SVec::new(); d * d];
        for (i, j, k, c) in sc.mult {
            check_idx("mult", i, d)?;
            check_idx("mult", j, d)?;
            check_idx("mult", k, d)?;
            mult[i * d + j].add_at(k, c);
        }
        let mut unit = SVec::new();
        for (i, c) in sc.unit {
            check_idx("unit", i, d)?;
            unit.add_at(i, c);
        }
        let mut comult = vec![SVec::new(); d];
        for (i, j, k, c) in sc.comult {
            check_idx("comult", i, d)?;
            check_idx("comult", j, d)?;
            check_idx("comult", k, d)?;
            comult[i].add_at(j * d + k, c);
        }
        let mut counit = vec![F::zero(); d];
        for (i, c) in sc.counit {
            check_idx("counit", i, d)?;
            counit[i] = counit[i].clone() + &c;
        }
        let antipode = map_from_pairs("antipode", d, &sc.antipode)?;
        let antipode_inverse = sc
            .antipode_inverse
            .map(|p| map_from_pairs("antipode_inverse", d, &p))
            .transpose()?;
        Ok(WeakHopfAlgebra { name: sc.name, space, mult, unit, comult, counit, antipode, antipode_inverse })
    }

    /// The structure constants in sorted index order.
    pub fn to_constants(&self) -> StructureConstants<F> {
        let d = self.dim();
        let mut mult = Vec::new();
        for (ij, v) in self.mult.iter().enumerate() {
            for (k, c) in v.iter() {
                mult.push((ij / d, ij % d, k, c.clone()));
            }
        }
        let mut comult = Vec::new();
        for (i, v) in self.comult.iter().enumerate() {
            for (jk, c) in v.iter() {
                comult.push((i, jk / d, jk % d, c.clone()));
            }
        }
        StructureConstants {
            name: self.name.clone(),
            labels: self.space.labels().to_vec(),
            mult,
            unit: self.unit.iter().map(|(i, c)| (i, c.clone())).collect(),
            comult,
            counit: self
                .counit
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i, c.clone()))
                .collect(),
            antipode: pairs_from_map(&self.antipode),
            antipode_inverse: self.antipode_inverse.as_ref().map(pairs_from_map),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn space(&self) -> &VectorSpace {
        &self.space
    }

    pub fn label(&self, i: usize) -> &str {
        self.space.label(i)
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn unit(&self) -> &SVec<F> {
        &self.unit
    }

    pub fn antipode_map(&self) -> &LinMap<F> {
        &self.antipode
    }

    pub fn antipode_inverse_map(&self) -> Option<&LinMap<F>> {
        self.antipode_inverse.as_ref()
    }

    /// Returns a copy with a different antipode (used for negative controls).
    pub fn with_antipode(&self, s: LinMap<F>) -> Self {
        WeakHopfAlgebra { antipode: s, antipode_inverse: None, ..self.clone() }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// `e_i e_j`.
    pub fn prod(&self, i: usize, j: usize) -> &SVec<F> {
        &self.mult[i * self.dim() + j]
    }

    pub fn coprod(&self, i: usize) -> &SVec<F> {
        &self.comult[i]
    }

    pub fn counit_of(&self, i: usize) -> &F {
        &self.counit[i]
    }

    pub fn multiply(&self, a: &SVec<F>, b: &SVec<F>) -> SVec<F> {
        let mut out = SVec::new();
        for (i, x) in a.iter() {
            for (j, y) in b.iter() {
                let p = self.prod(i, j);
                if !p.is_zero() {
                    out.add_scaled(p, &(x.clone() * y));
                }
            }
        }
        out
    }

    pub fn comultiply(&self, a: &SVec<F>) -> SVec<F> {
        let mut out = SVec::new();
        for (i, x) in a.iter() {
            out.add_scaled(&self.comult[i], x);
        }
        out
    }

    pub fn counit(&self, a: &SVec<F>) -> F {
        a.iter().fold(F::zero(), |acc, (i, x)| acc + &(x.clone() * &self.counit[i]))
    }

    pub fn antipode(&self, a: &SVec<F>) -> SVec<F> {
        self.antipode.apply(a)
    }

    /// Left multiplication by `a` as a linear map.
    pub fn left_mult_map(&self, a: &SVec<F>) -> LinMap<F> {
        LinMap::from_fn(self.dim(), self.dim(), |j| self.multiply(a, &SVec::unit(j)))
    }

    /// Right multiplication by `a` as a linear map.
    pub fn right_mult_map(&self, a: &SVec<F>) -> LinMap<F> {
        LinMap::from_fn(self.dim(), self.dim(), |j| self.multiply(&SVec::unit(j), a))
    }

    pub fn delta_one(&self) -> SVec<F> {
        self.comultiply(&self.unit)
    }

    /// ε_t(h) = ε(1₁h)1₂.
    pub fn epsilon_t(&self, h: &SVec<F>) -> SVec<F> {
        let d = self.dim();
        let mut out = SVec::new();
        for (jk, c) in self.delta_one().iter() {
            let e = self.counit(&self.multiply(&SVec::unit(jk / d), h));
            if !e.is_zero() {
                out.add_at(jk % d, c.clone() * &e);
            }
        }
        out
    }

    /// ε_s(h) = 1₁ε(h1₂).
    pub fn epsilon_s(&self, h: &SVec<F>) -> SVec<F> {
        let d = self.dim();
        let mut out = SVec::new();
        for (jk, c) in self.delta_one().iter() {
            let e = self.counit(&self.multiply(h, &SVec::unit(jk % d)));
            if !e.is_zero() {
                out.add_at(jk / d, c.clone() * &e);
            }
        }
        out
    }

    pub fn epsilon_t_map(&self) -> LinMap<F> {
        LinMap::from_fn(self.dim(), self.dim(), |i| self.epsilon_t(&SVec::unit(i)))
    }

    pub fn epsilon_s_map(&self) -> LinMap<F> {
        LinMap::from_fn(self.dim(), self.dim(), |i| self.epsilon_s(&SVec::unit(i)))
    }

    pub fn target_space(&self) -> Subspace<F> {
        self.epsilon_t_map().image()
    }

    pub fn source_space(&self) -> Subspace<F> {
        self.epsilon_s_map().image()
    }

    /// Δ(1) = 1 ⊗ 1.
    pub fn is_hopf(&self) -> bool {
        self.delta_one() == self.unit.kron(&self.unit, self.dim())
    }

    // ---- tensor-power contractions ------------------------------------

    /// Replaces `width` legs starting at `leg` by the image `f(legs)`, a
    /// vector on `out_width` legs.
    pub fn transform_legs(
        &self,
        v: &SVec<F>,
        n: usize,
        leg: usize,
        width: usize,
        out_width: usize,
        f: impl Fn(&[usize]) -> SVec<F>,
    ) -> SVec<F> {
        let d = self.dim();
        let dims = vec![d; n];
        let out_n = n - width + out_width;
        let out_dims = vec![d; out_n];
        let block_dims = vec![d; out_width];
        let mut out = SVec::new();
        for (idx, c) in v.iter() {
            let parts = split_index(idx, &dims);
            let image = f(&parts[leg..leg + width]);
            for (j, x) in image.iter() {
                let mut new_parts = Vec::with_capacity(out_n);
                new_parts.extend_from_slice(&parts[..leg]);
                new_parts.extend(split_index(j, &block_dims));
                new_parts.extend_from_slice(&parts[leg + width..]);
                out.add_at(join_index(&new_parts, &out_dims), x.clone() * c);
            }
        }
        out
    }

    /// Applies a linear map of `H` to one leg.
    pub fn map_leg(&self, v: &SVec<F>, n: usize, leg: usize, m: &LinMap<F>) -> SVec<F> {
        self.transform_legs(v, n, leg, 1, 1, |p| m.column(p[0]).clone())
    }

    pub fn antipode_leg(&self, v: &SVec<F>, n: usize, leg: usize) -> SVec<F> {
        self.map_leg(v, n, leg, &self.antipode)
    }

    pub fn comul_leg(&self, v: &SVec<F>, n: usize, leg: usize) -> SVec<F> {
        self.transform_legs(v, n, leg, 1, 2, |p| self.comult[p[0]].clone())
    }

    /// Multiplies leg `leg` with leg `leg + 1`.
    pub fn mul_legs(&self, v: &SVec<F>, n: usize, leg: usize) -> SVec<F> {
        self.transform_legs(v, n, leg, 2, 1, |p| self.prod(p[0], p[1]).clone())
    }

    pub fn counit_leg(&self, v: &SVec<F>, n: usize, leg: usize) -> SVec<F> {
        self.transform_legs(v, n, leg, 1, 0, |p| SVec::single(0, self.counit[p[0]].clone()))
    }

    /// Inserts a leg holding `1_H` at position `pos`.
    pub fn insert_unit(&self, v: &SVec<F>, n: usize, pos: usize) -> SVec<F> {
        self.insert_leg(v, n, pos, &self.unit)
    }

    /// Inserts a leg holding `x` at position `pos`.
    pub fn insert_leg(&self, v: &SVec<F>, n: usize, pos: usize, x: &SVec<F>) -> SVec<F> {
        let d = self.dim();
        let dims = vec![d; n];
        let out_dims = vec![d; n + 1];
        let mut out = SVec::new();
        for (idx, c) in v.iter() {
            let parts = split_index(idx, &dims);
            for (j, y) in x.iter() {
                let mut np = parts.clone();
                np.insert(pos, j);
                out.add_at(join_index(&np, &out_dims), c.clone() * y);
            }
        }
        out
    }

    /// Moves input leg `k` to output position `perm[k]`.
    pub fn permute(&self, v: &SVec<F>, n: usize, perm: &[usize]) -> SVec<F> {
        let dims = vec![self.dim(); n];
        v.remap(|idx| {
            let parts = split_index(idx, &dims);
            let mut out = vec![0; n];
            for (k, &p) in perm.iter().enumerate() {
                out[p] = parts[k];
            }
            join_index(&out, &dims)
        })
    }

    /// The flip on `H ⊗ H`.
    pub fn flip(&self, v: &SVec<F>) -> SVec<F> {
        self.permute(v, 2, &[1, 0])
    }

    /// Legwise product in `H^{⊗n}`.
    pub fn tmul(&self, x: &SVec<F>, y: &SVec<F>, n: usize) -> SVec<F> {
        let d = self.dim();
        let dims = vec![d; n];
        if n == 0 {
            return SVec::single(0, x.coeff(0) * &y.coeff(0));
        }
        // Terms of y grouped by their first leg.
        let mut groups: std::collections::BTreeMap<usize, Vec<(Vec<usize>, &F)>> = Default::default();
        for (iy, cy) in y.iter() {
            let py = split_index(iy, &dims);
            groups.entry(py[0]).or_default().push((py, cy));
        }
        let mut out = SVec::new();
        for (ix, cx) in x.iter() {
            let px = split_index(ix, &dims);
            for (&b, terms) in &groups {
                let first = self.prod(px[0], b);
                if first.is_zero() {
                    continue;
                }
                'term: for (py, cy) in terms {
                    let mut acc = first.clone();
                    for k in 1..n {
                        let p = self.prod(px[k], py[k]);
                        if p.is_zero() {
                            continue 'term;
                        }
                        acc = acc.kron(p, d);
                    }
                    out.add_scaled(&acc, &(cx.clone() * *cy));
                }
            }
        }
        out
    }

    pub fn tensor_label(&self, legs: usize, idx: usize) -> String {
        tensor_label(self.space.labels(), legs, idx)
    }

    pub fn render(&self, v: &SVec<F>, legs: usize) -> String {
        render_vec(v, |i| self.tensor_label(legs, i))
    }

    fn witness(&self, idx: &[usize], lhs: &SVec<F>, rhs: &SVec<F>, legs: usize) -> Option<Witness> {
        (lhs != rhs).then(|| {
            Witness::new(
                idx.to_vec(),
                idx.iter().map(|&i| self.label(i).to_string()).collect(),
                self.render(lhs, legs),
                self.render(rhs, legs),
            )
        })
    }

    fn witness_scalar(&self, idx: &[usize], lhs: &F, rhs: &F) -> Option<Witness> {
        (lhs != rhs).then(|| {
            Witness::new(
                idx.to_vec(),
                idx.iter().map(|&i| self.label(i).to_string()).collect(),
                lhs.to_string(),
                rhs.to_string(),
            )
        })
    }

    // ---- verification ---------------------------------------------------

    /// Checks every weak Hopf axiom and the standard identities on all basis tuples.
    pub fn check(&self) -> VerificationReport {
        let d = self.dim();
        let mut rep = VerificationReport::new(format!("weak Hopf axioms for {}", self.name));
        let e = |i: usize| SVec::<F>::unit(i);
        let one = &self.unit;
        let delta1 = self.delta_one();

        rep.push(CheckResult::from_witness(
            "algebra associativity",
            first_witness(d * d * d, |t| {
                let (h, k, l) = (t / (d * d), (t / d) % d, t % d);
                let lhs = self.multiply(self.prod(h, k), &e(l));
                let rhs = self.multiply(&e(h), self.prod(k, l));
                self.witness(&[h, k, l], &lhs, &rhs, 1)
            }),
        ));
        rep.push(CheckResult::from_witness(
            "algebra unit",
            first_witness(d, |i| {
                let a = self.multiply(one, &e(i));
                let b = self.multiply(&e(i), one);
                self.witness(&[i], &a, &e(i), 1).or_else(|| self.witness(&[i], &b, &e(i), 1))
            }),
        ));
        rep.push(CheckResult::from_witness(
            "coalgebra coassociativity",
            first_witness(d, |i| {
                let dh = &self.comult[i];
                self.witness(&[i], &self.comul_leg(dh, 2, 0), &self.comul_leg(dh, 2, 1), 3)
            }),
        ));
        rep.push(CheckResult::from_witness(
            "coalgebra counit",
            first_witness(d, |i| {
                let dh = &self.comult[i];
                self.witness(&[i], &self.counit_leg(dh, 2, 0), &e(i), 1)
                    .or_else(|| self.witness(&[i], &self.counit_leg(dh, 2, 1), &e(i), 1))
            }),
        ));
        rep.push(CheckResult::from_witness(
            "axiom (i) comultiplication is multiplicative",
            first_witness(d * d, |t| {
                let (h, k) = (t / d, t % d);
                let lhs = self.comultiply(self.prod(h, k));
                let rhs = self.tmul(&self.comult[h], &self.comult[k], 2);
                self.witness(&[h, k], &lhs, &rhs, 2)
            }),
        ));
        let d2 = self.comul_leg(&delta1, 2, 0);
        let left = self.insert_unit(&delta1, 2, 2);
        let right = self.insert_unit(&delta1, 2, 0);
        rep.push(CheckResult::from_witness(
            "axiom (ii) comultiplication of the unit",
            self.witness(&[], &d2, &self.tmul(&left, &right, 3), 3)
                .or_else(|| self.witness(&[], &d2, &self.tmul(&right, &left, 3), 3)),
        ));
        // ε(e_i e_j) by rows and by columns.
        let eps_rows: Vec<SVec<F>> = (0..d)
            .map(|i| (0..d).filter_map(|j| nonzero(self.counit(self.prod(i, j))).map(|c| (j, c))).collect())
            .collect();
        let mut eps_cols: Vec<SVec<F>> = vec![SVec::new(); d];
        for (i, row) in eps_rows.iter().enumerate() {
            for (j, c) in row.iter() {
                eps_cols[j].add_at(i, c.clone());
            }
        }
        let eps_pair = |i: usize, j: usize| eps_rows[i].coeff(j);
        rep.push(CheckResult::from_witness(
            "axiom (iii) weak multiplicativity of the counit",
            // For fixed k compare the d×d tables (h, l) of the three expressions.
            first_witness(d, |k| {
                let mut lhs = SVec::new();
                for h in 0..d {
                    for (m, c) in self.prod(h, k).iter() {
                        lhs.add_scaled(&eps_rows[m].remap(|l| h * d + l), c);
                    }
                }
                let mut r1 = SVec::new();
                let mut r2 = SVec::new();
                for (ab, c) in self.comult[k].iter() {
                    let (a, b) = (ab / d, ab % d);
                    r1.add_scaled(&eps_cols[a].kron(&eps_rows[b], d), c);
                    r2.add_scaled(&eps_cols[b].kron(&eps_rows[a], d), c);
                }
                let bad = |other: &SVec<F>| {
                    lhs.sub(other).indices().next().map(|hl| {
                        let (h, l) = (hl / d, hl % d);
                        Witness::new(
                            vec![h, k, l],
                            [h, k, l].iter().map(|&i| self.label(i).to_string()).collect(),
                            lhs.coeff(hl).to_string(),
                            other.coeff(hl).to_string(),
                        )
                    })
                };
                match (bad(&r1), bad(&r2)) {
                    (Some(w1), Some(w2)) => Some(if w1.indices <= w2.indices { w1 } else { w2 }),
                    (w1, w2) => w1.or(w2),
                }
            }),
        ));
        let eps_t: Vec<SVec<F>> = (0..d).map(|i| self.epsilon_t(&e(i))).collect();
        let eps_s: Vec<SVec<F>> = (0..d).map(|i| self.epsilon_s(&e(i))).collect();
        let delta2: Vec<SVec<F>> = (0..d).map(|i| self.comul_leg(&self.comult[i], 2, 0)).collect();
        rep.push(CheckResult::from_witness(
            "axiom (iv) h1 S(h2) = eps_t(h)",
            first_witness(d, |i| {
                let lhs = self.mul_legs(&self.antipode_leg(&self.comult[i], 2, 1), 2, 0);
                self.witness(&[i], &lhs, &eps_t[i], 1)
            }),
        ));
        rep.push(CheckResult::from_witness(
            "axiom (iv) S(h1) h2 = eps_s(h)",
            first_witness(d, |i| {
                let lhs = self.mul_legs(&self.antipode_leg(&self.comult[i], 2, 0), 2, 0);
                self.witness(&[i], &lhs, &eps_s[i], 1)
            }),
        ));
        rep.push(CheckResult::from_witness(
            "axiom (iv) S(h) = S(h1) h2 S(h3)",
            first_witness(d, |i| {
                let t = self.antipode_leg(&self.antipode_leg(&delta2[i], 3, 0), 3, 2);
                let lhs = self.mul_legs(&self.mul_legs(&t, 3, 0), 2, 0);
                self.witness(&[i], &self.antipode(&e(i)), &lhs, 1)
            }),
        ));
        let id_s = self.map_leg(&delta1, 2, 1, &self.antipode);
        let s_id = self.map_leg(&delta1, 2, 0, &self.antipode);
        rep.push(CheckResult::from_witness(
            "h1 (x) h2 S(h3) = 1_1 h (x) 1_2",
            first_witness(d, |i| {
                let lhs = self.mul_legs(&self.antipode_leg(&delta2[i], 3, 2), 3, 1);
                let rhs = self.tmul(&delta1, &e(i).kron(one, d), 2);
                self.witness(&[i], &lhs, &rhs, 2)
            }),
        ));
        rep.push(CheckResult::from_witness(
            "S(h1) h2 (x) h3 = 1_1 (x) h 1_2",
            first_witness(d, |i| {
                let lhs = self.mul_legs(&self.antipode_leg(&delta2[i], 3, 0), 3, 0);
                let rhs = self.tmul(&one.kron(&e(i), d), &delta1, 2);
                self.witness(&[i], &lhs, &rhs, 2)
            }),
        ));
        rep.push(CheckResult::from_witness(
            "h1 (x) S(h2) h3 = h 1_1 (x) S(1_2)",
            first_witness(d, |i| {
                let lhs = self.mul_legs(&self.antipode_leg(&delta2[i], 3, 1), 3, 1);
                let rhs = self.tmul(&e(i).kron(one, d), &id_s, 2);
                self.witness(&[i], &lhs, &rhs, 2)
            }),
        ));
        rep.push(CheckResult::from_witness(
            "h1 S(h2) (x) h3 = S(1_1) (x) 1_2 h",
            first_witness(d, |i| {
                let lhs = self.mul_legs(&self.antipode_leg(&delta2[i], 3, 1), 3, 0);
                let rhs = self.tmul(&s_id, &one.kron(&e(i), d), 2);
                self.witness(&[i], &lhs, &rhs, 2)
            }),
        ));
        rep.push(CheckResult::from_witness(
            "eps(g eps_t(h)) = eps(gh) = eps(eps_s(g) h)",
            first_witness(d * d, |t| {
                let (g, h) = (t / d, t % d);
                let mid = eps_pair(g, h);
                let a = self.counit(&self.multiply(&e(g), &eps_t[h]));
                let b = self.counit(&self.multiply(&eps_s[g], &e(h)));
                self.witness_scalar(&[g, h], &a, &mid).or_else(|| self.witness_scalar(&[g, h], &b, &mid))
            }),
        ));
        let hs = self.source_space();
        let ht = self.target_space();
        rep.push(CheckResult::from_witness(
            "y 1_1 (x) S(1_2) = 1_1 (x) S(1_2) y for y in H_s",
            first_witness(hs.dim(), |k| {
                let y = hs.basis_vector(k);
                let lhs = self.tmul(&y.kron(one, d), &id_s, 2);
                let rhs = self.tmul(&id_s, &one.kron(y, d), 2);
                self.witness(&[], &lhs, &rhs, 2).map(|mut w| {
                    w.labels = vec![format!("y = {}", self.render(y, 1))];
                    w
                })
            }),
        ));
        rep.push(CheckResult::from_witness(
            "z S(1_1) (x) 1_2 = S(1_1) (x) 1_2 z for z in H_t",
            first_witness(ht.dim(), |k| {
                let z = ht.basis_vector(k);
                let lhs = self.tmul(&z.kron(one, d), &s_id, 2);
                let rhs = self.tmul(&s_id, &one.kron(z, d), 2);
                self.witness(&[], &lhs, &rhs, 2).map(|mut w| {
                    w.labels = vec![format!("z = {}", self.render(z, 1))];
                    w
                })
            }),
        ));
        let et = self.epsilon_t_map();
        let es = self.epsilon_s_map();
        rep.push(CheckResult::from_bool(
            "eps_t and eps_s are idempotent",
            et.compose(&et).map(|m| m.map_eq(&et)).unwrap_or(false)
                && es.compose(&es).map(|m| m.map_eq(&es)).unwrap_or(false),
            || "eps_t or eps_s is not idempotent".into(),
        ));
        rep.push(CheckResult::from_bool(
            "S maps H_t bijectively onto H_s",
            {
                let img = self.antipode.compose(ht.inclusion()).expect("shapes").image();
                img.same_as(&hs)
            },
            || "S(H_t) differs from H_s".into(),
        ));
        if let Some(sinv) = &self.antipode_inverse {
            let ok = sinv.compose(&self.antipode).map(|m| m.is_identity()).unwrap_or(false)
                && self.antipode.compose(sinv).map(|m| m.is_identity()).unwrap_or(false);
            rep.push(CheckResult::from_bool("antipode inverse is two-sided", ok, || {
                "S^-1 S or S S^-1 differs from id".into()
            }));
        }
        rep
    }

    /// S² = id on the subalgebra generated by H_t and H_s.
    pub fn is_regular(&self) -> bool {
        let d = self.dim();
        let mut gens: Vec<SVec<F>> = self.target_space().inclusion().columns().to_vec();
        gens.extend(self.source_space().inclusion().columns().iter().cloned());
        let mut span = Subspace::span(d, gens.clone());
        loop {
            let basis: Vec<SVec<F>> = span.inclusion().columns().to_vec();
            let mut all = basis.clone();
            for a in &basis {
                for b in &basis {
                    all.push(self.multiply(a, b));
                }
            }
            let next = Subspace::span(d, all);
            if next.dim() == span.dim() {
                break;
            }
            span = next;
        }
        span.inclusion()
            .columns()
            .iter()
            .all(|x| self.antipode(&self.antipode(x)) == *x)
    }

    /// Runs [`WeakHopfAlgebra::check`] and, if everything passes, returns a
    /// certified handle that downstream constructions accept.
    pub fn certify(self) -> Result<Certified<F>, WhaError> {
        let report = self.check();
        if !report.passed() {
            let first = report.first_failure().map(|c| c.name.clone()).unwrap_or_default();
            return Err(WhaError::NotCertified { name: self.name.clone(), first, report: Box::new(report) });
        }
        Ok(Certified::new_unchecked(self, report))
    }
}

struct CertifiedInner<F> {
    alg: WeakHopfAlgebra<F>,
    report: VerificationReport,
    delta_one: SVec<F>,
    target: Subspace<F>,
    source: Subspace<F>,
    antipode_inverse: Option<LinMap<F>>,
}

/// A weak Hopf algebra whose axioms have all been verified.
#[derive(Clone)]
pub struct Certified<F> {
    inner: Arc<CertifiedInner<F>>,
}

impl<F: Field> Certified<F> {
    fn new_unchecked(alg: WeakHopfAlgebra<F>, report: VerificationReport) -> Self {
        let antipode_inverse =
            alg.antipode_inverse.clone().or_else(|| alg.antipode.inverse());
        Certified {
            inner: Arc::new(CertifiedInner {
                delta_one: alg.delta_one(),
                target: alg.target_space(),
                source: alg.source_space(),
                antipode_inverse,
                alg,
                report,
            }),
        }
    }

    pub fn algebra(&self) -> &WeakHopfAlgebra<F> {
        &self.inner.alg
    }

    pub fn report(&self) -> &VerificationReport {
        &self.inner.report
    }

    pub fn delta_one_cached(&self) -> &SVec<F> {
        &self.inner.delta_one
    }

    /// H_t as a subspace of H.
    pub fn target(&self) -> &Subspace<F> {
        &self.inner.target
    }

    /// H_s as a subspace of H.
    pub fn source(&self) -> &Subspace<F> {
        &self.inner.source
    }

    /// S⁻¹, from the input data or computed by inversion.
    pub fn antipode_inverse(&self) -> Option<&LinMap<F>> {
        self.inner.antipode_inverse.as_ref()
    }

    pub fn ptr_eq(&self, other: &Certified<F>) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
    }
}

impl<F: Field> Deref for Certified<F> {
    type Target = WeakHopfAlgebra<F>;

    fn deref(&self) -> &Self::Target {
        &self.inner.alg
    }
}

impl<F> std::fmt::Debug for Certified<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Certified({})", self.inner.alg.name)
    }
}
