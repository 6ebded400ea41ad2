//! Exact sparse linear algebra: vectors, maps, elimination and subspaces.
//!
//! Tensor products use one convention throughout the crate: the basis of
//! `M ⊗ N` is ordered lexicographically with the `M` index major, so
//! `e_i ⊗ e_j` has index `i * dim(N) + j`.

use std::collections::{BTreeMap, HashMap};

use thiserror::Error;

use crate::scalar::Field;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("map is not idempotent")]
    NotIdempotent,
    #[error("vectors are linearly dependent")]
    Dependent,
}

/// A sparse vector with no stored zeros.
#[derive(Clone, PartialEq)]
pub struct SVec<F> {
    entries: BTreeMap<usize, F>,
}

impl<F> Default for SVec<F> {
    fn default() -> Self {
        SVec { entries: BTreeMap::new() }
    }
}

impl<F: std::fmt::Debug> std::fmt::Debug for SVec<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_map().entries(self.entries.iter()).finish()
    }
}

impl<F: Field> SVec<F> {
    pub fn new() -> Self {
        SVec { entries: BTreeMap::new() }
    }

    pub fn unit(i: usize) -> Self {
        let mut v = Self::new();
        v.entries.insert(i, F::one());
        v
    }

    pub fn single(i: usize, c: F) -> Self {
        let mut v = Self::new();
        v.add_at(i, c);
        v
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, F)>) -> Self {
        let mut v = Self::new();
        for (i, c) in pairs {
            v.add_at(i, c);
        }
        v
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize) -> Option<&F> {
        self.entries.get(&i)
    }

    pub fn coeff(&self, i: usize) -> F {
        self.entries.get(&i).cloned().unwrap_or_else(F::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &F)> + '_ {
        self.entries.iter().map(|(&i, c)| (i, c))
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.entries.keys().copied()
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.keys().next_back().copied()
    }

    /// Adds `c` at position `i`, dropping the entry if it cancels.
    pub fn add_at(&mut self, i: usize, c: F) {
        if c.is_zero() {
            return;
        }
        match self.entries.entry(i) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().clone() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn remove(&mut self, i: usize) -> Option<F> {
        self.entries.remove(&i)
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &SVec<F>, c: &F) {
        if c.is_zero() {
            return;
        }
        for (&i, x) in &other.entries {
            self.add_at(i, x.clone() * c);
        }
    }

    pub fn add_vec(&mut self, other: &SVec<F>) {
        for (&i, x) in &other.entries {
            self.add_at(i, x.clone());
        }
    }

    pub fn scaled(&self, c: &F) -> SVec<F> {
        if c.is_zero() {
            return SVec::new();
        }
        SVec { entries: self.entries.iter().map(|(&i, x)| (i, x.clone() * c)).collect() }
    }

    pub fn sub(&self, other: &SVec<F>) -> SVec<F> {
        let mut out = self.clone();
        out.add_scaled(other, &-F::one());
        out
    }

    pub fn sum(&self, other: &SVec<F>) -> SVec<F> {
        let mut out = self.clone();
        out.add_vec(other);
        out
    }

    pub fn dot(&self, other: &SVec<F>) -> F {
        let (small, large) = if self.nnz() <= other.nnz() { (self, other) } else { (other, self) };
        let mut acc = F::zero();
        for (i, x) in small.iter() {
            if let Some(y) = large.get(i) {
                acc = acc + &(x.clone() * y);
            }
        }
        acc
    }

    /// Kronecker product with `other`, whose ambient dimension is `dim_other`.
    pub fn kron(&self, other: &SVec<F>, dim_other: usize) -> SVec<F> {
        let mut out = SVec::new();
        for (i, x) in self.iter() {
            for (j, y) in other.iter() {
                out.entries.insert(i * dim_other + j, x.clone() * y);
            }
        }
        out
    }

    /// Reindexes every entry through `f`, summing collisions.
    pub fn remap(&self, f: impl Fn(usize) -> usize) -> SVec<F> {
        SVec::from_pairs(self.iter().map(|(i, c)| (f(i), c.clone())))
    }

    pub fn to_dense(&self, dim: usize) -> Vec<F> {
        let mut v = vec![F::zero(); dim];
        for (i, c) in self.iter() {
            v[i] = c.clone();
        }
        v
    }
}

impl<F: Field> FromIterator<(usize, F)> for SVec<F> {
    fn from_iter<T: IntoIterator<Item = (usize, F)>>(iter: T) -> Self {
        SVec::from_pairs(iter)
    }
}

/// A basis-labelled vector space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VectorSpace {
    labels: Vec<String>,
}

impl VectorSpace {
    pub fn new(labels: Vec<String>) -> Result<Self, LinalgError> {
        let mut seen = std::collections::HashSet::new();
        for l in &labels {
            if !seen.insert(l) {
                return Err(LinalgError::DimensionMismatch(format!("duplicate label {l}")));
            }
        }
        Ok(VectorSpace { labels })
    }

    pub fn numbered(prefix: &str, dim: usize) -> Self {
        VectorSpace { labels: (0..dim).map(|i| format!("{prefix}{i}")).collect() }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }
}

/// A linear map stored as sparse columns.
#[derive(Clone, PartialEq, Debug)]
pub struct LinMap<F> {
    rows: usize,
    cols: Vec<SVec<F>>,
}

impl<F: Field> LinMap<F> {
    /// A map from a `cols`-dimensional space to a `rows`-dimensional one,
    /// column `j` being the image of basis vector `j`.
    pub fn from_columns(rows: usize, cols: Vec<SVec<F>>) -> Self {
        debug_assert!(cols.iter().all(|c| c.max_index().is_none_or(|m| m < rows)));
        LinMap { rows, cols }
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize) -> SVec<F>) -> Self {
        Self::from_columns(rows, (0..cols).map(f).collect())
    }

    pub fn from_fn_par(rows: usize, cols: usize, f: impl Fn(usize) -> SVec<F> + Sync + Send) -> Self {
        use rayon::prelude::*;
        Self::from_columns(rows, (0..cols).into_par_iter().map(f).collect())
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Self::from_columns(rows, vec![SVec::new(); cols])
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, SVec::unit)
    }

    /// The flip `M ⊗ N → N ⊗ M`.
    pub fn swap(m: usize, n: usize) -> Self {
        Self::from_fn(m * n, m * n, |idx| SVec::unit((idx % n) * m + idx / n))
    }

    /// Permutes tensor legs: input leg `k` becomes output leg `perm[k]`.
    pub fn permute_legs(dims: &[usize], perm: &[usize]) -> Self {
        let total: usize = dims.iter().product();
        let mut out_dims = vec![0; dims.len()];
        for (k, &p) in perm.iter().enumerate() {
            out_dims[p] = dims[k];
        }
        Self::from_fn(total, total, |idx| {
            let parts = split_index(idx, dims);
            let mut out = vec![0; dims.len()];
            for (k, &p) in perm.iter().enumerate() {
                out[p] = parts[k];
            }
            SVec::unit(join_index(&out, &out_dims))
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols.len()
    }

    pub fn column(&self, j: usize) -> &SVec<F> {
        &self.cols[j]
    }

    pub fn columns(&self) -> &[SVec<F>] {
        &self.cols
    }

    pub fn into_columns(self) -> Vec<SVec<F>> {
        self.cols
    }

    pub fn entry(&self, r: usize, c: usize) -> F {
        self.cols[c].coeff(r)
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(SVec::nnz).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(SVec::is_zero)
    }

    pub fn apply(&self, v: &SVec<F>) -> SVec<F> {
        let mut out = SVec::new();
        for (j, c) in v.iter() {
            out.add_scaled(&self.cols[j], c);
        }
        out
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LinMap<F>) -> Result<LinMap<F>, LinalgError> {
        if self.cols() != other.rows {
            return Err(LinalgError::DimensionMismatch(format!(
                "compose {}x{} after {}x{}",
                self.rows,
                self.cols(),
                other.rows,
                other.cols()
            )));
        }
        Ok(LinMap::from_columns(self.rows, other.cols.iter().map(|c| self.apply(c)).collect()))
    }

    /// Composition that panics on mismatched shapes; used where the shapes
    /// are fixed by construction.
    pub fn then(&self, after: &LinMap<F>) -> LinMap<F> {
        after.compose(self).expect("composable maps")
    }

    pub fn tensor(&self, other: &LinMap<F>) -> LinMap<F> {
        let mut cols = Vec::with_capacity(self.cols() * other.cols());
        for a in &self.cols {
            for b in &other.cols {
                cols.push(a.kron(b, other.rows));
            }
        }
        LinMap::from_columns(self.rows * other.rows, cols)
    }

    pub fn add(&self, other: &LinMap<F>) -> Result<LinMap<F>, LinalgError> {
        self.check_same_shape(other)?;
        Ok(LinMap::from_columns(
            self.rows,
            self.cols.iter().zip(&other.cols).map(|(a, b)| a.sum(b)).collect(),
        ))
    }

    pub fn sub(&self, other: &LinMap<F>) -> Result<LinMap<F>, LinalgError> {
        self.check_same_shape(other)?;
        Ok(LinMap::from_columns(
            self.rows,
            self.cols.iter().zip(&other.cols).map(|(a, b)| a.sub(b)).collect(),
        ))
    }

    /// Accumulates `c * other` into `self`.
    pub fn add_scaled(&mut self, other: &LinMap<F>, c: &F) {
        assert_eq!((self.rows, self.cols()), (other.rows, other.cols()), "shape mismatch");
        for (a, b) in self.cols.iter_mut().zip(&other.cols) {
            a.add_scaled(b, c);
        }
    }

    pub fn scaled(&self, c: &F) -> LinMap<F> {
        LinMap::from_columns(self.rows, self.cols.iter().map(|v| v.scaled(c)).collect())
    }

    fn check_same_shape(&self, other: &LinMap<F>) -> Result<(), LinalgError> {
        if self.rows != other.rows || self.cols() != other.cols() {
            return Err(LinalgError::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows,
                self.cols(),
                other.rows,
                other.cols()
            )));
        }
        Ok(())
    }

    /// Exact entrywise equality, `false` on shape mismatch.
    pub fn map_eq(&self, other: &LinMap<F>) -> bool {
        self.rows == other.rows && self.cols == other.cols
    }

    /// First column where the two maps differ.
    pub fn first_difference(&self, other: &LinMap<F>) -> Option<usize> {
        (0..self.cols().max(other.cols()))
            .find(|&j| self.cols.get(j) != other.cols.get(j))
    }

    pub fn transpose(&self) -> LinMap<F> {
        let mut cols = vec![SVec::new(); self.rows];
        for (j, col) in self.cols.iter().enumerate() {
            for (i, c) in col.iter() {
                cols[i].add_at(j, c.clone());
            }
        }
        LinMap::from_columns(self.cols(), cols)
    }

    /// Restricts to the given columns.
    pub fn select_columns(&self, idx: &[usize]) -> LinMap<F> {
        LinMap::from_columns(self.rows, idx.iter().map(|&j| self.cols[j].clone()).collect())
    }

    pub fn hstack(&self, other: &LinMap<F>) -> Result<LinMap<F>, LinalgError> {
        if self.rows != other.rows {
            return Err(LinalgError::DimensionMismatch("hstack".into()));
        }
        let mut cols = self.cols.clone();
        cols.extend(other.cols.iter().cloned());
        Ok(LinMap::from_columns(self.rows, cols))
    }

    /// Stacks maps with a common domain into one map to the direct sum.
    pub fn vstack(maps: &[&LinMap<F>]) -> Result<LinMap<F>, LinalgError> {
        let n = maps.first().map_or(0, |m| m.cols());
        if maps.iter().any(|m| m.cols() != n) {
            return Err(LinalgError::DimensionMismatch("vstack".into()));
        }
        let mut offset = 0;
        let mut cols = vec![SVec::new(); n];
        for m in maps {
            for (j, col) in m.cols.iter().enumerate() {
                for (i, c) in col.iter() {
                    cols[j].add_at(offset + i, c.clone());
                }
            }
            offset += m.rows;
        }
        Ok(LinMap::from_columns(offset, cols))
    }

    pub fn rank(&self) -> usize {
        let mut e = Echelon::new(false);
        for c in &self.cols {
            e.insert(c.clone(), None);
        }
        e.rank()
    }

    /// Kernel as a subspace of the domain.
    pub fn kernel(&self) -> Subspace<F> {
        let mut e = Echelon::new(true);
        let mut null = Vec::new();
        for (j, c) in self.cols.iter().enumerate() {
            if let Insert::Dependent(tag) = e.insert(c.clone(), Some(SVec::unit(j))) {
                null.push(tag);
            }
        }
        Subspace::span(self.cols(), null)
    }

    /// Image as a subspace of the codomain.
    pub fn image(&self) -> Subspace<F> {
        Subspace::span(self.rows, self.cols.clone())
    }

    /// Some `x` with `self(x) = y`, if one exists.
    pub fn solve(&self, y: &SVec<F>) -> Option<SVec<F>> {
        let mut e = Echelon::new(true);
        for (j, c) in self.cols.iter().enumerate() {
            e.insert(c.clone(), Some(SVec::unit(j)));
        }
        e.express(y)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols() && self.cols.iter().enumerate().all(|(j, c)| *c == SVec::unit(j))
    }

    /// Two-sided inverse of a square map, if it is invertible.
    pub fn inverse(&self) -> Option<LinMap<F>> {
        if self.rows != self.cols() {
            return None;
        }
        let mut e = Echelon::new(true);
        for (j, c) in self.cols.iter().enumerate() {
            e.insert(c.clone(), Some(SVec::unit(j)));
        }
        if e.rank() != self.rows {
            return None;
        }
        let cols: Option<Vec<_>> = (0..self.rows).map(|i| e.express(&SVec::unit(i))).collect();
        Some(LinMap::from_columns(self.cols(), cols?))
    }
}

/// Splits a flat tensor index into per-leg indices (first leg major).
pub fn split_index(mut idx: usize, dims: &[usize]) -> Vec<usize> {
    let mut out = vec![0; dims.len()];
    for k in (0..dims.len()).rev() {
        out[k] = idx % dims[k];
        idx /= dims[k];
    }
    out
}

pub fn join_index(parts: &[usize], dims: &[usize]) -> usize {
    parts.iter().zip(dims).fold(0, |acc, (&p, &d)| acc * d + p)
}

/// Outcome of inserting a vector into an [`Echelon`].
pub enum Insert<F> {
    /// The vector was independent and became basis element `pos`.
    Added(usize),
    /// The vector reduced to zero; the payload is the reduced tag.
    Dependent(SVec<F>),
}

/// Incrementally built fully reduced echelon basis.
///
/// Every basis vector has coefficient 1 at its pivot and 0 at every other
/// pivot. Pivots are chosen to minimize fill-in: among the nonzero positions
/// of a new vector, the one occupied by the fewest existing basis vectors.
/// Optional tags track each basis vector as a combination of the inserted
/// vectors, which yields kernels and solutions.
pub struct Echelon<F> {
    basis: Vec<SVec<F>>,
    tags: Vec<SVec<F>>,
    pivots: Vec<usize>,
    pivot_of: HashMap<usize, usize>,
    occupancy: HashMap<usize, usize>,
    track: bool,
}

impl<F: Field> Echelon<F> {
    pub fn new(track: bool) -> Self {
        Echelon {
            basis: Vec::new(),
            tags: Vec::new(),
            pivots: Vec::new(),
            pivot_of: HashMap::new(),
            occupancy: HashMap::new(),
            track,
        }
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[SVec<F>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn tags(&self) -> &[SVec<F>] {
        &self.tags
    }

    /// Reduces `v` (and its tag) against the basis.
    fn reduce(&self, v: &mut SVec<F>, tag: &mut SVec<F>) {
        let hits: Vec<(usize, F)> = v
            .iter()
            .filter_map(|(i, c)| self.pivot_of.get(&i).map(|&k| (k, c.clone())))
            .collect();
        for (k, c) in hits {
            let neg = -c;
            v.add_scaled(&self.basis[k], &neg);
            if self.track {
                tag.add_scaled(&self.tags[k], &neg);
            }
        }
    }

    fn occupy(&mut self, v: &SVec<F>, delta: isize) {
        for i in v.indices() {
            let e = self.occupancy.entry(i).or_insert(0);
            *e = (*e as isize + delta) as usize;
        }
    }

    pub fn insert(&mut self, mut v: SVec<F>, tag: Option<SVec<F>>) -> Insert<F> {
        let mut tag = tag.unwrap_or_default();
        self.reduce(&mut v, &mut tag);
        if v.is_zero() {
            return Insert::Dependent(tag);
        }
        let pivot = v
            .indices()
            .min_by_key(|i| (self.occupancy.get(i).copied().unwrap_or(0), *i))
            .expect("nonzero vector");
        let inv = v.coeff(pivot).inv().expect("nonzero pivot");
        let v = v.scaled(&inv);
        let tag = tag.scaled(&inv);
        for k in 0..self.basis.len() {
            if let Some(c) = self.basis[k].get(pivot).cloned() {
                let old = std::mem::take(&mut self.basis[k]);
                self.occupy(&old, -1);
                let mut nb = old;
                nb.add_scaled(&v, &-c.clone());
                self.occupy(&nb, 1);
                self.basis[k] = nb;
                if self.track {
                    self.tags[k].add_scaled(&tag, &-c);
                }
            }
        }
        self.occupy(&v, 1);
        let pos = self.basis.len();
        self.pivot_of.insert(pivot, pos);
        self.pivots.push(pivot);
        self.basis.push(v);
        self.tags.push(tag);
        Insert::Added(pos)
    }

    /// Writes `y` as a combination of the inserted vectors (via tags).
    pub fn express(&self, y: &SVec<F>) -> Option<SVec<F>> {
        let mut out = SVec::new();
        for (i, c) in y.iter() {
            if let Some(&k) = self.pivot_of.get(&i) {
                out.add_scaled(&self.tags[k], c);
            }
        }
        // Verify the remainder is zero.
        let mut check = y.clone();
        let mut scratch = SVec::new();
        self.reduce(&mut check, &mut scratch);
        check.is_zero().then_some(out)
    }

    /// Coordinates of `y` with respect to the reduced basis, if `y` lies in the span.
    pub fn coordinates(&self, y: &SVec<F>) -> Option<SVec<F>> {
        let coords: SVec<F> = y
            .iter()
            .filter_map(|(i, c)| self.pivot_of.get(&i).map(|&k| (k, c.clone())))
            .collect();
        let mut rebuilt = SVec::new();
        for (k, c) in coords.iter() {
            rebuilt.add_scaled(&self.basis[k], c);
        }
        (rebuilt == *y).then_some(coords)
    }
}

/// A subspace with an inclusion (columns are a basis) and a projection with
/// `projection ∘ inclusion = id`.
#[derive(Clone, Debug, PartialEq)]
pub struct Subspace<F> {
    inclusion: LinMap<F>,
    projection: LinMap<F>,
}

impl<F: Field> Subspace<F> {
    /// Span of arbitrary vectors, with a reduced echelon basis and the
    /// pivot-selection projection.
    pub fn span(ambient: usize, vectors: Vec<SVec<F>>) -> Self {
        let mut e = Echelon::new(false);
        for v in vectors {
            e.insert(v, None);
        }
        let k = e.rank();
        let projection = LinMap::from_fn(k, ambient, |i| {
            e.pivot_of.get(&i).map(|&p| SVec::unit(p)).unwrap_or_default()
        });
        Subspace { inclusion: LinMap::from_columns(ambient, e.basis), projection }
    }

    /// Subspace with a prescribed basis given as the columns of `inclusion`.
    pub fn with_basis(inclusion: LinMap<F>) -> Result<Self, LinalgError> {
        let mut e = Echelon::new(true);
        for (j, c) in inclusion.columns().iter().enumerate() {
            if let Insert::Dependent(_) = e.insert(c.clone(), Some(SVec::unit(j))) {
                return Err(LinalgError::Dependent);
            }
        }
        let k = inclusion.cols();
        let projection = LinMap::from_fn(k, inclusion.rows(), |i| {
            e.pivot_of.get(&i).map(|&p| e.tags[p].clone()).unwrap_or_default()
        });
        Ok(Subspace { inclusion, projection })
    }

    /// Splits an idempotent: the subspace is its image and `P = incl ∘ proj`.
    pub fn split_idempotent(p: &LinMap<F>) -> Result<Self, LinalgError> {
        if p.rows() != p.cols() {
            return Err(LinalgError::DimensionMismatch("idempotent must be square".into()));
        }
        if !p.compose(p)?.map_eq(p) {
            return Err(LinalgError::NotIdempotent);
        }
        let span = Subspace::span(p.rows(), p.columns().to_vec());
        let projection = span.projection.compose(p)?;
        Ok(Subspace { inclusion: span.inclusion, projection })
    }

    pub fn full(n: usize) -> Self {
        Subspace { inclusion: LinMap::identity(n), projection: LinMap::identity(n) }
    }

    pub fn zero(n: usize) -> Self {
        Subspace { inclusion: LinMap::zero(n, 0), projection: LinMap::zero(0, n) }
    }

    pub fn dim(&self) -> usize {
        self.inclusion.cols()
    }

    pub fn ambient_dim(&self) -> usize {
        self.inclusion.rows()
    }

    pub fn inclusion(&self) -> &LinMap<F> {
        &self.inclusion
    }

    pub fn projection(&self) -> &LinMap<F> {
        &self.projection
    }

    pub fn basis_vector(&self, k: usize) -> &SVec<F> {
        self.inclusion.column(k)
    }

    pub fn contains(&self, v: &SVec<F>) -> bool {
        self.inclusion.apply(&self.projection.apply(v)) == *v
    }

    /// Coordinates of `v` in the subspace basis, `None` if `v` is outside.
    pub fn coords(&self, v: &SVec<F>) -> Option<SVec<F>> {
        let c = self.projection.apply(v);
        (self.inclusion.apply(&c) == *v).then_some(c)
    }

    /// Re-expresses every column of `f` (a map into the ambient space) in
    /// subspace coordinates; `Err(j)` names the first column that escapes.
    pub fn restrict_codomain(&self, f: &LinMap<F>) -> Result<LinMap<F>, usize> {
        let mut cols = Vec::with_capacity(f.cols());
        for (j, c) in f.columns().iter().enumerate() {
            cols.push(self.coords(c).ok_or(j)?);
        }
        Ok(LinMap::from_columns(self.dim(), cols))
    }

    pub fn contains_subspace(&self, other: &Subspace<F>) -> bool {
        other.inclusion.columns().iter().all(|v| self.contains(v))
    }

    /// Equality as subspaces of the same ambient space.
    pub fn same_as(&self, other: &Subspace<F>) -> bool {
        self.ambient_dim() == other.ambient_dim()
            && self.dim() == other.dim()
            && self.contains_subspace(other)
    }

    /// `k^n ⊗ S` inside `k^n ⊗ V`.
    pub fn left_tensor(&self, n: usize) -> Subspace<F> {
        Subspace {
            inclusion: LinMap::identity(n).tensor(&self.inclusion),
            projection: LinMap::identity(n).tensor(&self.projection),
        }
    }

    /// `S ⊗ k^n` inside `V ⊗ k^n`.
    pub fn right_tensor(&self, n: usize) -> Subspace<F> {
        Subspace {
            inclusion: self.inclusion.tensor(&LinMap::identity(n)),
            projection: self.projection.tensor(&LinMap::identity(n)),
        }
    }

    /// Composes with an inner subspace given in this subspace's coordinates.
    pub fn nested(&self, inner: &Subspace<F>) -> Subspace<F> {
        Subspace {
            inclusion: self.inclusion.compose(&inner.inclusion).expect("inner subspace lives in these coordinates"),
            projection: inner.projection.compose(&self.projection).expect("inner subspace lives in these coordinates"),
        }
    }

    /// Embeds this subspace into a larger ambient along `outer`.
    pub fn pushforward(&self, outer: &LinMap<F>) -> Result<Subspace<F>, LinalgError> {
        Subspace::with_basis(outer.compose(&self.inclusion)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type Q = BigRational;

    fn q(n: i64) -> Q {
        Q::from_integer(n.into())
    }

    fn dense(rows: &[&[i64]]) -> LinMap<Q> {
        let r = rows.len();
        let c = rows[0].len();
        LinMap::from_fn(r, c, |j| SVec::from_pairs((0..r).map(|i| (i, q(rows[i][j])))))
    }

    #[test]
    fn tensor_of_identities() {
        let a = LinMap::<Q>::identity(2).tensor(&LinMap::identity(3));
        assert!(a.map_eq(&LinMap::identity(6)));
    }

    #[test]
    fn compose_with_identity() {
        let f = dense(&[&[1, 2], &[3, 4], &[0, 5]]);
        assert!(f.compose(&LinMap::identity(2)).unwrap().map_eq(&f));
        assert!(f.compose(&LinMap::identity(3)).is_err());
    }

    #[test]
    fn one_by_one_tensor() {
        let a = dense(&[&[2]]);
        let b = dense(&[&[5]]);
        assert!(a.tensor(&b).map_eq(&dense(&[&[10]])));
    }

    #[test]
    fn kernel_of_zero_map() {
        let z = LinMap::<Q>::zero(2, 3);
        assert_eq!(z.kernel().dim(), 3);
        assert_eq!(LinMap::<Q>::identity(4).rank(), 4);
    }

    #[test]
    fn solve_scalar_equation() {
        let f = dense(&[&[2]]);
        let x = f.solve(&SVec::single(0, q(3))).unwrap();
        assert_eq!(x, SVec::single(0, Q::new(3.into(), 2.into())));
        let g = dense(&[&[1, 1], &[1, 1]]);
        assert!(g.solve(&SVec::single(0, q(1))).is_none());
    }

    #[test]
    fn split_diagonal_idempotent() {
        let p = dense(&[&[1, 0, 0], &[0, 0, 0], &[0, 0, 1]]);
        let s = Subspace::split_idempotent(&p).unwrap();
        assert_eq!(s.dim(), 2);
        assert!(s.inclusion().compose(s.projection()).unwrap().map_eq(&p));
        assert!(s.projection().compose(s.inclusion()).unwrap().is_identity());
        assert!(s.contains(&SVec::unit(0)) && s.contains(&SVec::unit(2)));
        assert!(!s.contains(&SVec::unit(1)));
        assert!(Subspace::split_idempotent(&dense(&[&[2]])).is_err());
        assert_eq!(Subspace::split_idempotent(&LinMap::<Q>::identity(3)).unwrap().dim(), 3);
        assert_eq!(Subspace::split_idempotent(&LinMap::<Q>::zero(3, 3)).unwrap().dim(), 0);
    }

    #[test]
    fn swap_and_permute_agree() {
        let s = LinMap::<Q>::swap(2, 3);
        let p = LinMap::<Q>::permute_legs(&[2, 3], &[1, 0]);
        assert!(s.map_eq(&p));
        assert!(LinMap::<Q>::swap(3, 2).compose(&s).unwrap().is_identity());
    }

    #[test]
    fn inverse_of_invertible() {
        let f = dense(&[&[1, 2], &[3, 4]]);
        let g = f.inverse().unwrap();
        assert!(f.compose(&g).unwrap().is_identity());
        assert!(dense(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn prescribed_basis_projection() {
        let incl = dense(&[&[1, 1], &[1, -1], &[0, 0]]);
        let s = Subspace::with_basis(incl).unwrap();
        assert!(s.projection().compose(s.inclusion()).unwrap().is_identity());
        assert_eq!(s.coords(&SVec::unit(0)).unwrap(), SVec::from_pairs([(0, Q::new(1.into(), 2.into())), (1, Q::new(1.into(), 2.into()))]));
        assert!(s.coords(&SVec::unit(2)).is_none());
    }
}
