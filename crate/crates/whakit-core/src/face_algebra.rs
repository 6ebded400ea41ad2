//! The face algebra `H(N, ω)` with basis `X^i_j(s)`, `i, j, s ∈ Z_N`.

use num_traits::Zero;
use thiserror::Error;

use crate::examples::{InstanceError, QtInstance};
use crate::galois::{certify_galois, cotensor_algebra, ComoduleAlgebra, GaloisError, GaloisObject};
use crate::linalg::{LinMap, LinalgError, SVec, Subspace, VectorSpace};
use crate::module_cat::{HModule, ModuleError};
use crate::quasitriangular::QtAlgebra;
use crate::report::{render_vec, tensor_label, CheckResult, VerificationReport, Witness};
use crate::scalar::{rational_nth_root, Field, Scalar};
use crate::transmutation::{transmute, BraidedHopf, TransmutationError};
use crate::weak_hopf::{Certified, StructureConstants, WeakHopfAlgebra};

#[derive(Debug, Clone, Error)]
pub enum FaceError {
    #[error("cocycle parameter must be nonzero")]
    ZeroParameter,
    #[error("component index {index} out of range for N = {n}")]
    BadComponent { index: usize, n: usize },
    #[error("degree-one generator not found in the cotensor product")]
    GeneratorNotFound,
    #[error("N-th power of the generator is not a multiple of the unit: {0}")]
    PowerNotScalar(String),
    #[error("block decomposition failed: {0}")]
    BlockDecompositionFailed(String),
    #[error(transparent)]
    Galois(#[from] GaloisError),
    #[error(transparent)]
    Instance(#[from] InstanceError),
    #[error(transparent)]
    Transmutation(#[from] TransmutationError),
}

impl From<ModuleError> for FaceError {
    fn from(e: ModuleError) -> Self {
        FaceError::Galois(e.into())
    }
}

impl From<LinalgError> for FaceError {
    fn from(e: LinalgError) -> Self {
        FaceError::Galois(e.into())
    }
}

/// Flat index of `X^i_j(s)`.
pub fn face_index(n: usize, i: usize, j: usize, s: usize) -> usize {
    ((i % n) * n + (j % n)) * n + (s % n)
}

pub fn face_label(i: usize, j: usize, s: usize) -> String {
    format!("X{i}_{j}({s})")
}

/// ω^k with ω = e^{2πi/N}.
fn omega(n: usize, k: i64) -> Scalar {
    Scalar::root_of_unity(n as u32, k)
}

/// Builds `H(N, ω)` with its R-matrix and the weak inverse.
pub fn build_face_algebra(n: usize) -> QtInstance {
    assert!(n >= 2, "face algebra needs N >= 2");
    let one = Scalar::int(1);
    let idx = |i: usize, j: usize, s: usize| face_index(n, i, j, s);
    let mut labels = Vec::with_capacity(n * n * n);
    for i in 0..n {
        for j in 0..n {
            for s in 0..n {
                labels.push(face_label(i, j, s));
            }
        }
    }
    let mut mult = Vec::new();
    let mut comult = Vec::new();
    let mut counit = Vec::new();
    let mut antipode = Vec::new();
    let mut unit = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for p in 0..n {
                for l in 0..n {
                    mult.push((idx(i, j, p), idx(j, l, p), idx(i, l, p), one.clone()));
                }
                for q in 0..n {
                    let s = (p + q) % n;
                    comult.push((idx(i, j, s), idx(i, j, p), idx(i + p, j + p, q), one.clone()));
                }
                antipode.push((idx(i, j, p), idx(j + p, i + p, n - p), one.clone()));
            }
            counit.push((idx(i, j, 0), one.clone()));
        }
        for p in 0..n {
            unit.push((idx(i, i, p), one.clone()));
        }
    }
    let constants = StructureConstants {
        name: format!("face:{n}"),
        labels,
        mult,
        unit,
        comult,
        counit,
        antipode,
        antipode_inverse: None,
    };
    let d = n * n * n;
    let mut r = SVec::new();
    let mut r_bar = SVec::new();
    for i in 0..n {
        for j in 0..n {
            for p in 0..n {
                let diff = (i + n - j) % n;
                let w = omega(n, -((p * diff) as i64));
                let right = idx(j, j + p, diff);
                r.add_at(idx(i, j, p) * d + right, w.clone());
                r_bar.add_at(idx(j + p, i + p, n - p) * d + right, w);
            }
        }
    }
    QtInstance { constants, r, r_bar }
}

/// Index of `X^k_k(p)` in the diagonal basis of the transmuted algebra.
fn diag(n: usize, k: usize, p: usize) -> usize {
    (k % n) * n + p % n
}

fn diag_label(n: usize, j: usize) -> String {
    face_label(j / n, j / n, j % n)
}

/// The transmuted structure predicted in closed form, on the basis
/// `X^k_k(p)` (index `k·N + p`). `counit` lands in the basis `1^k` of `H_t`.
#[derive(Debug, Clone, PartialEq)]
pub struct ExpectedTransmutation {
    pub n: usize,
    pub mult: LinMap<Scalar>,
    pub comult: LinMap<Scalar>,
    pub counit: LinMap<Scalar>,
    pub antipode: LinMap<Scalar>,
    pub one: SVec<Scalar>,
}

pub fn expected_transmutation(n: usize) -> ExpectedTransmutation {
    let d = n * n;
    let one = Scalar::int(1);
    let mult = LinMap::from_fn(d, d * d, |col| {
        let (x, y) = (col / d, col % d);
        if x == y { SVec::single(x, one.clone()) } else { SVec::new() }
    });
    let comult = LinMap::from_fn(d * d, d, |x| {
        let (k, s) = (x / n, x % n);
        SVec::from_pairs((0..n).map(|w| (diag(n, k, w) * d + diag(n, k, s + n - w), one.clone())))
    });
    let counit = LinMap::from_fn(n, d, |x| if x % n == 0 { SVec::single(x / n, one.clone()) } else { SVec::new() });
    let antipode = LinMap::from_fn(d, d, |x| SVec::single(diag(n, x / n, n - x % n), one.clone()));
    let unit_vec = SVec::from_pairs((0..d).map(|x| (x, one.clone())));
    ExpectedTransmutation { n, mult, comult, counit, antipode, one: unit_vec }
}

/// The `H`-side data needed to compare `B` with the closed forms: carrier
/// coordinates of `X^k_k(p)` and `H_t` coordinates of `1^k`.
struct DiagonalFrame {
    n: usize,
    basis: LinMap<Scalar>,
    inverse: LinMap<Scalar>,
    units: LinMap<Scalar>,
}

fn diagonal_frame(b: &BraidedHopf<Scalar>) -> Result<DiagonalFrame, FaceError> {
    let h: &Certified<Scalar> = b.base();
    let n = (1..=h.dim()).find(|m| m * m * m == h.dim()).ok_or_else(|| {
        FaceError::BlockDecompositionFailed(format!("dimension {} is not a cube", h.dim()))
    })?;
    let fail = |what: String| FaceError::BlockDecompositionFailed(what);
    let cols = (0..n * n)
        .map(|x| {
            b.carrier()
                .coords(&SVec::unit(face_index(n, x / n, x / n, x % n)))
                .ok_or_else(|| fail(format!("{} is not in the carrier", diag_label(n, x))))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let basis = LinMap::from_columns(b.dim(), cols);
    let inverse = basis.inverse().ok_or_else(|| fail("diagonal elements do not form a basis of the carrier".into()))?;
    let units = (0..n)
        .map(|k| {
            let v = SVec::from_pairs((0..n).map(|p| (face_index(n, k, k, p), Scalar::int(1))));
            h.target().coords(&v).ok_or_else(|| fail(format!("1^{k} is not in H_t")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let units = LinMap::from_columns(h.target().dim(), units);
    Ok(DiagonalFrame { n, basis, inverse, units })
}

fn table_check(name: &str, lhs: &LinMap<Scalar>, rhs: &LinMap<Scalar>, col: impl Fn(usize) -> String, row: impl Fn(usize) -> String) -> CheckResult {
    let w = lhs.first_difference(rhs).map(|k| {
        Witness::new(vec![k], vec![col(k)], render_vec(lhs.column(k), &row), render_vec(rhs.column(k), &row))
    });
    CheckResult::from_witness(name, w)
}

/// Compares every structure map of `b` with [`expected_transmutation`].
pub fn check_expected_tables(b: &BraidedHopf<Scalar>) -> Result<VerificationReport, FaceError> {
    let f = diagonal_frame(b)?;
    let n = f.n;
    let e = expected_transmutation(n);
    let d = n * n;
    let mut rep = VerificationReport::new("transmuted tables");
    let t2 = f.basis.tensor(&f.basis);
    let l1 = |k: usize| diag_label(n, k);
    let l2 = |k: usize| format!("{}(x){}", diag_label(n, k / d), diag_label(n, k % d));
    let carrier_label = |k: usize| b.label(k).to_string();
    let carrier_label2 = |k: usize| format!("{}(x){}", b.label(k / b.dim()), b.label(k % b.dim()));
    rep.push(table_check("product", &b.mult_ambient().compose(&t2)?, &f.basis.compose(&e.mult)?, l2, carrier_label));
    rep.push(table_check("coproduct", &b.comult_ambient().compose(&f.basis)?, &t2.compose(&e.comult)?, l1, carrier_label2));
    let h: &Certified<Scalar> = b.base();
    let tl = |k: usize| h.render(h.target().basis_vector(k), 1);
    rep.push(table_check("counit", &b.counit().compose(&f.basis)?, &f.units.compose(&e.counit)?, l1, tl));
    rep.push(table_check("antipode", &b.antipode().compose(&f.basis)?, &f.basis.compose(&e.antipode)?, l1, carrier_label));
    let unit_lhs = b.unit().compose(&f.units)?;
    let unit_rhs = LinMap::from_fn(d, n, |k| SVec::from_pairs((0..n).map(|p| (diag(n, k, p), Scalar::int(1)))));
    rep.push(table_check("unit", &unit_lhs, &f.basis.compose(&unit_rhs)?, |k| format!("1^{k}"), carrier_label));
    let one = f.basis.apply(&e.one);
    rep.push(CheckResult::from_bool("unit element", b.one() == one, || b.render(&b.one(), 1)));
    Ok(rep)
}

/// The `i`-th block `H^i = span{X^i_i(p)}` read off from the transmuted
/// structure maps, as an ordinary Hopf algebra over `k` after identifying
/// `k·1^i` with `k`. Fails if some structure map leaves the block.
pub fn component_hopf_algebra(b: &BraidedHopf<Scalar>, i: usize) -> Result<StructureConstants<Scalar>, FaceError> {
    let f = diagonal_frame(b)?;
    component_from_frame(b, &f, i)
}

fn component_from_frame(b: &BraidedHopf<Scalar>, f: &DiagonalFrame, i: usize) -> Result<StructureConstants<Scalar>, FaceError> {
    let n = f.n;
    if i >= n {
        return Err(FaceError::BadComponent { index: i, n });
    }
    let d = n * n;
    let leave = |what: &str, p: usize| FaceError::BlockDecompositionFailed(format!("{what} of {} leaves block {i}", diag_label(n, diag(n, i, p))));
    let in_block = |x: usize| x / n == i;
    let inv2 = f.inverse.tensor(&f.inverse);
    let mut mult = Vec::new();
    let mut comult = Vec::new();
    let mut counit = Vec::new();
    let mut antipode = Vec::new();
    for p in 0..n {
        let xp = f.basis.column(diag(n, i, p));
        for q in 0..n {
            let xq = f.basis.column(diag(n, i, q));
            let prod = f.inverse.apply(&b.mult_ambient().apply(&xp.kron(xq, b.dim())));
            for (x, c) in prod.iter() {
                if !in_block(x) {
                    return Err(leave("product", p));
                }
                mult.push((p, q, x % n, c.clone()));
            }
        }
        for (x, c) in inv2.apply(&b.comult_ambient().apply(xp)).iter() {
            let (l, r) = (x / d, x % d);
            if !in_block(l) || !in_block(r) {
                return Err(leave("coproduct", p));
            }
            comult.push((p, l % n, r % n, c.clone()));
        }
        let eps = f.units.solve(&b.counit().apply(xp)).ok_or_else(|| leave("counit", p))?;
        for (k, c) in eps.iter() {
            if k != i {
                return Err(leave("counit", p));
            }
            counit.push((p, c.clone()));
        }
        for (x, c) in f.inverse.apply(&b.antipode().apply(xp)).iter() {
            if !in_block(x) {
                return Err(leave("antipode", p));
            }
            antipode.push((p, x % n, c.clone()));
        }
    }
    let unit_col = f.inverse.apply(&b.unit().apply(f.units.column(i)));
    let mut unit = Vec::new();
    for (x, c) in unit_col.iter() {
        if !in_block(x) {
            return Err(FaceError::BlockDecompositionFailed(format!("1^{i} leaves block {i}")));
        }
        unit.push((x % n, c.clone()));
    }
    Ok(StructureConstants {
        name: format!("H^{i}"),
        labels: (0..n).map(|p| face_label(i, i, p)).collect(),
        mult,
        unit,
        comult,
        counit,
        antipode,
        antipode_inverse: None,
    })
}

fn same_tables(x: &StructureConstants<Scalar>, y: &StructureConstants<Scalar>) -> bool {
    let sorted = |mut v: Vec<(usize, usize, usize, Scalar)>| {
        v.sort_by_key(|t| (t.0, t.1, t.2));
        v
    };
    let sorted2 = |mut v: Vec<(usize, usize, Scalar)>| {
        v.sort_by_key(|t| (t.0, t.1));
        v
    };
    let sorted1 = |mut v: Vec<(usize, Scalar)>| {
        v.sort_by_key(|t| t.0);
        v
    };
    sorted(x.mult.clone()) == sorted(y.mult.clone())
        && sorted(x.comult.clone()) == sorted(y.comult.clone())
        && sorted1(x.unit.clone()) == sorted1(y.unit.clone())
        && sorted1(x.counit.clone()) == sorted1(y.counit.clone())
        && sorted2(x.antipode.clone()) == sorted2(y.antipode.clone())
}

/// The closed-form tables of the transmutation, the block decomposition of
/// `B` and of `B ⊗_t B`, the Hopf axioms on each block and the block
/// identifications `X^i_i(p) ↦ X^j_j(p)`.
pub fn check_block_decomposition(n: usize) -> Result<VerificationReport, FaceError> {
    let q = build_face_algebra(n).certify()?;
    let b = transmute(&q)?;
    check_face_transmutation(&b)
}

pub fn check_face_transmutation(b: &BraidedHopf<Scalar>) -> Result<VerificationReport, FaceError> {
    let h: &Certified<Scalar> = b.base();
    let f = diagonal_frame(b)?;
    let n = f.n;
    let mut rep = VerificationReport::new(format!("face algebra N={n}"));
    let dims = [
        ("dim H", h.dim(), n * n * n),
        ("dim H_t", h.target().dim(), n),
        ("dim B", b.dim(), n * n),
        ("dim B (x)_t B", b.square().dim(), n * n * n),
    ];
    for (name, got, want) in dims {
        rep.push(CheckResult::from_bool(name, got == want, || format!("{got}, expected {want}")));
    }
    rep.absorb(check_expected_tables(b)?);

    let inv2 = f.inverse.tensor(&f.inverse);
    let d = n * n;
    let square = b.square().carrier.inclusion();
    let off_block = (0..square.cols()).find_map(|k| {
        inv2.apply(square.column(k)).indices().find(|x| (x / d) / n != (x % d) / n).map(|x| (k, x))
    });
    rep.push(CheckResult::from_bool("B (x)_t B is the sum of the blocks H^i (x) H^i", off_block.is_none(), || {
        let (k, x) = off_block.unwrap_or_default();
        format!("square basis vector {k} has a component on {}", tensor_label(&(0..d).map(|j| diag_label(n, j)).collect::<Vec<_>>(), 2, x))
    }));

    let mut blocks = Vec::with_capacity(n);
    for i in 0..n {
        let name = format!("block {i}");
        match component_from_frame(b, &f, i) {
            Ok(sc) => {
                rep.push(CheckResult::pass(format!("{name} is closed under the structure maps")));
                match WeakHopfAlgebra::from_constants(sc.clone()) {
                    Ok(alg) => {
                        let check = alg.check();
                        let hopf = alg.is_hopf();
                        let commutative = (0..n).all(|p| (0..n).all(|q| alg.prod(p, q) == alg.prod(q, p)));
                        let cocommutative = (0..n).all(|p| alg.flip(alg.coprod(p)) == *alg.coprod(p));
                        let mut sub = check;
                        sub.title = format!("H^{i}");
                        rep.absorb(sub);
                        rep.push(CheckResult::from_bool(format!("H^{i} is a Hopf algebra"), hopf, || "Delta(1) != 1 (x) 1".into()));
                        rep.push(CheckResult::from_bool(format!("H^{i} is commutative"), commutative, String::new));
                        rep.push(CheckResult::from_bool(format!("H^{i} is cocommutative"), cocommutative, String::new));
                    }
                    Err(e) => rep.push(CheckResult::from_bool(format!("H^{i} structure constants"), false, || e.to_string())),
                }
                blocks.push(Some(sc));
            }
            Err(e) => {
                rep.push(CheckResult::from_bool(format!("{name} is closed under the structure maps"), false, || e.to_string()));
                blocks.push(None);
            }
        }
    }
    for j in 1..n {
        if let (Some(x), Some(y)) = (&blocks[0], &blocks[j]) {
            rep.push(CheckResult::from_bool(format!("iota^{j}_0 is a Hopf isomorphism"), same_tables(x, y), || {
                format!("tables of H^0 and H^{j} differ")
            }));
        }
    }
    Ok(rep)
}

/// `H^i` as a certified quasitriangular Hopf algebra with `R = 1 ⊗ 1`,
/// transmuted (the transmutation is `H^i` itself with the trivial action).
pub fn component_braided(b: &BraidedHopf<Scalar>, i: usize) -> Result<BraidedHopf<Scalar>, FaceError> {
    let sc = component_hopf_algebra(b, i)?;
    let one = sc.unit.iter().fold(SVec::new(), |mut v, (k, c)| {
        v.add_at(*k, c.clone());
        v
    });
    let d = sc.labels.len();
    let r = one.kron(&one, d);
    let alg = WeakHopfAlgebra::from_constants(sc).map_err(InstanceError::from)?.certify().map_err(InstanceError::from)?;
    let q = QtAlgebra::certify(alg, r.clone(), Some(r)).map_err(InstanceError::from)?;
    Ok(transmute(&q)?)
}

/// Checks that `a ≠ 0` and returns `a` in the scalar field.
fn nonzero(a: &Scalar) -> Result<(), FaceError> {
    if a.is_zero() { Err(FaceError::ZeroParameter) } else { Ok(()) }
}

/// `A′ = k⟨u⟩/(u^N = a)` over `H^i`, graded by the characters
/// `g_r = Σ_p ω^{pr} X^i_i(p)`: `ρ(u^r) = g_r ⊗ u^r` on both sides.
pub fn component_cocycle_algebra(bi: &BraidedHopf<Scalar>, n: usize, i: usize, a: &Scalar) -> Result<ComoduleAlgebra<Scalar>, FaceError> {
    nonzero(a)?;
    let h: &Certified<Scalar> = bi.base();
    let labels = (0..n).map(|r| format!("u^{r}")).collect();
    let action = (0..h.dim()).map(|p| LinMap::identity(n).scaled(h.counit_of(p))).collect();
    let module = HModule::new(format!("A'[{}]^{i}", a.render()), h, VectorSpace::new(labels)?, action)?;
    let mult = LinMap::from_fn(n, n * n, |col| {
        let (r, t) = (col / n, col % n);
        let c = if r + t >= n { a.clone() } else { Scalar::int(1) };
        SVec::single((r + t) % n, c)
    });
    let unit = LinMap::from_fn(n, h.target().dim(), |z| SVec::single(0, h.counit(h.target().basis_vector(z))));
    let character = |r: usize| -> Result<SVec<Scalar>, FaceError> {
        let g = SVec::from_pairs((0..n).map(|p| (p, omega(n, (p * r) as i64))));
        bi.carrier().coords(&g).ok_or_else(|| FaceError::BlockDecompositionFailed(format!("character {r} is not in H^{i}")))
    };
    let chars = (0..n).map(character).collect::<Result<Vec<_>, _>>()?;
    let c = bi.dim();
    let left = LinMap::from_fn(c * n, n, |r| chars[r].kron(&SVec::unit(r), n));
    let right = LinMap::from_fn(n * c, n, |r| SVec::unit(r).kron(&chars[r], c));
    Ok(ComoduleAlgebra::new(bi, module, mult, unit, Some(left), Some(right))?)
}

/// The assembled object `⊕_k A′^k` over the face algebra's `B`, with basis
/// `e_{k,r}` (index `k·N + r`). `X^c_d(s)` maps `e_{d,r}` to `δ_{s,0} e_{c,r}`,
/// the product is that of `A′` inside each summand, and the left coaction is
/// `e_{k,r} ↦ Σ_p ω^{pr} X^k_k(p) ⊗ e_{k,r}`. The right coaction is induced
/// through the half-braiding.
pub fn cocycle_galois_object(b: &BraidedHopf<Scalar>, i: usize, a: &Scalar) -> Result<ComoduleAlgebra<Scalar>, FaceError> {
    nonzero(a)?;
    let f = diagonal_frame(b)?;
    let n = f.n;
    if i >= n {
        return Err(FaceError::BadComponent { index: i, n });
    }
    let h: &Certified<Scalar> = b.base();
    let d = n * n;
    let labels = (0..d).map(|x| format!("e{}_{}", x / n, x % n)).collect();
    let action = (0..h.dim())
        .map(|x| {
            let (c, dd, s) = (x / d, (x / n) % n, x % n);
            LinMap::from_fn(d, d, |y| if s == 0 && y / n == dd { SVec::unit(c * n + y % n) } else { SVec::new() })
        })
        .collect();
    let module = HModule::new(format!("A[{}]", a.render()), h, VectorSpace::new(labels)?, action)?;
    let mult = LinMap::from_fn(d, d * d, |col| {
        let (x, y) = (col / d, col % d);
        let (k, r, l, t) = (x / n, x % n, y / n, y % n);
        if k != l {
            return SVec::new();
        }
        let c = if r + t >= n { a.clone() } else { Scalar::int(1) };
        SVec::single(k * n + (r + t) % n, c)
    });
    let unit = LinMap::from_fn(d, h.target().dim(), |z| {
        let v = h.target().basis_vector(z);
        SVec::from_pairs((0..n).map(|k| (k * n, v.coeff(face_index(n, k, k, 0)))).filter(|(_, c)| !c.is_zero()))
    });
    let c = b.dim();
    let left = LinMap::from_fn(c * d, d, |x| {
        let (k, r) = (x / n, x % n);
        let mut g = SVec::new();
        for p in 0..n {
            g.add_scaled(f.basis.column(diag(n, k, p)), &omega(n, (p * r) as i64));
        }
        g.kron(&SVec::unit(x), d)
    });
    let alg = ComoduleAlgebra::new(b, module, mult, unit, Some(left), None)?.with_induced_right(b)?;
    Ok(alg)
}

/// Builds and certifies `A_a`.
pub fn certified_cocycle_object(b: &BraidedHopf<Scalar>, i: usize, a: &Scalar) -> Result<GaloisObject<Scalar>, FaceError> {
    Ok(certify_galois(b, cocycle_galois_object(b, i, a)?))
}

/// The `i`-th block of a comodule algebra over the face algebra's `B`.
#[derive(Debug, Clone)]
pub struct Block {
    /// `H^i` with `R = 1 ⊗ 1`, transmuted.
    pub hopf: BraidedHopf<Scalar>,
    /// The block `A^i` inside `A`.
    pub space: Subspace<Scalar>,
    pub algebra: ComoduleAlgebra<Scalar>,
}

/// `A^i`: the image of `m ↦ m_(0) φ_i(m_(1))`, where `φ_i(x) 1^i = ε_t(1^i x)`,
/// as a comodule algebra over `H^i`. Coactions are those of `A` with the
/// `B`-leg projected onto `H^i`; a component outside the block is an error.
pub fn omega_project(b: &BraidedHopf<Scalar>, a: &ComoduleAlgebra<Scalar>, i: usize) -> Result<Block, FaceError> {
    let f = diagonal_frame(b)?;
    let n = f.n;
    if i >= n {
        return Err(FaceError::BadComponent { index: i, n });
    }
    let fail = |s: String| FaceError::BlockDecompositionFailed(s);
    let right = a.right.as_ref().ok_or_else(|| fail("right coaction missing".into()))?;
    let left = a.left.as_ref().ok_or_else(|| fail("left coaction missing".into()))?;
    let (da, c) = (a.dim(), b.dim());
    let one_i = f.basis.apply(&SVec::from_pairs((0..n).map(|p| (diag(n, i, p), Scalar::int(1)))));
    let phi_row = |x: &SVec<Scalar>| -> Scalar {
        let eps = b.counit().apply(&b.multiply(&one_i, x));
        f.units.solve(&eps).map(|v| v.coeff(i)).unwrap_or_else(Scalar::zero)
    };
    let phi: Vec<Scalar> = (0..c).map(|k| phi_row(&SVec::unit(k))).collect();
    let proj = LinMap::from_fn(da, da, |m| {
        let mut out = SVec::new();
        for (x, coef) in right.column(m).iter() {
            let (am, bk) = (x / c, x % c);
            let w = &phi[bk];
            if !w.is_zero() {
                out.add_at(am, coef.clone() * w.clone());
            }
        }
        out
    });
    let space = proj.image();
    let hopf = component_braided(b, i)?;
    let hi: &Certified<Scalar> = hopf.base();
    let ci = hopf.dim();
    // B-leg: carrier coordinates of B onto carrier coordinates of transmuted H^i.
    let to_block = LinMap::from_fn(ci, c, |k| {
        let x = f.inverse.apply(&SVec::unit(k));
        let mut v = SVec::new();
        for (j, coef) in x.iter() {
            if j / n == i {
                v.add_at(j % n, coef.clone());
            }
        }
        hopf.carrier().coords(&v).unwrap_or_default()
    });
    let db = space.dim();
    let restrict = |m: &LinMap<Scalar>, what: &str| -> Result<LinMap<Scalar>, FaceError> {
        space.restrict_codomain(m).map_err(|k| fail(format!("{what} leaves the block at column {k}")))
    };
    let mult_amb = a.mult.compose(&space.inclusion().tensor(space.inclusion()))?;
    let mult = restrict(&mult_amb, "product")?;
    let one_a = a.one(b.base());
    let one_block = proj.apply(&one_a);
    let one_coords = space.coords(&one_block).ok_or_else(|| fail("unit projection".into()))?;
    let unit = LinMap::from_fn(db, hi.target().dim(), |z| one_coords.scaled(&hi.counit(hi.target().basis_vector(z))));
    let left_amb = to_block.tensor(&LinMap::identity(da)).compose(left)?.compose(space.inclusion())?;
    let left_b = space
        .left_tensor(ci)
        .restrict_codomain(&left_amb)
        .map_err(|k| fail(format!("left coaction leaves the block at column {k}")))?;
    let right_amb = LinMap::identity(da).tensor(&to_block).compose(right)?.compose(space.inclusion())?;
    let right_b = space
        .right_tensor(ci)
        .restrict_codomain(&right_amb)
        .map_err(|k| fail(format!("right coaction leaves the block at column {k}")))?;
    let labels = (0..db).map(|k| format!("{}^{i}[{k}]", a.name())).collect();
    let action = (0..hi.dim()).map(|p| LinMap::identity(db).scaled(hi.counit_of(p))).collect();
    let module = HModule::new(format!("{}^{i}", a.name()), hi, VectorSpace::new(labels)?, action)?;
    let algebra = ComoduleAlgebra::new(&hopf, module, mult, unit, Some(left_b), Some(right_b))?;
    Ok(Block { hopf, space, algebra })
}

/// Compares `Ω(Ω′(A′))` with `A′` through the identification
/// `u^r ↦ e_{i,r}`, and `Ω(B)` with `H^i` through `X^i_i(p) ↦ X^i_i(p)`.
pub fn check_omega_roundtrip(b: &BraidedHopf<Scalar>, i: usize, a: &Scalar) -> Result<VerificationReport, FaceError> {
    let f = diagonal_frame(b)?;
    let n = f.n;
    let mut rep = VerificationReport::new(format!("block {i} round trip, a = {}", a.render()));
    let assembled = cocycle_galois_object(b, i, a)?;
    let block = omega_project(b, &assembled, i)?;
    let direct = component_cocycle_algebra(&block.hopf, n, i, a)?;
    let gens: Vec<SVec<Scalar>> = (0..n).map(|r| SVec::unit(i * n + r)).collect();
    compare_blocks(&mut rep, "cocycle block", &block, &direct, &gens);
    let galois = certify_galois(&block.hopf, block.algebra.clone());
    rep.push(CheckResult::from_bool("cocycle block is Galois over H^i", galois.is_galois, || {
        galois.report.first_failure().map(|c| c.name.clone()).unwrap_or_default()
    }));

    let regular = ComoduleAlgebra::regular(b);
    let rblock = omega_project(b, &regular, i)?;
    let hi = ComoduleAlgebra::regular(&rblock.hopf);
    let gens: Vec<SVec<Scalar>> = (0..n).map(|p| f.basis.column(diag(n, i, p)).clone()).collect();
    let hi_gens = (0..n).map(SVec::unit).collect::<Vec<_>>();
    let hi_gens: Vec<SVec<Scalar>> = hi_gens.iter().map(|v| rblock.hopf.carrier().coords(v).unwrap_or_default()).collect();
    compare_blocks_in(&mut rep, "regular block", &rblock, &hi, &gens, &hi_gens);
    Ok(rep)
}

fn compare_blocks(rep: &mut VerificationReport, what: &str, block: &Block, direct: &ComoduleAlgebra<Scalar>, gens: &[SVec<Scalar>]) {
    let unit_basis: Vec<SVec<Scalar>> = (0..direct.dim()).map(SVec::unit).collect();
    compare_blocks_in(rep, what, block, direct, gens, &unit_basis);
}

/// `gens[k]` (ambient in `A`) should correspond to `direct_gens[k]`
/// (coordinates in `direct`).
fn compare_blocks_in(
    rep: &mut VerificationReport,
    what: &str,
    block: &Block,
    direct: &ComoduleAlgebra<Scalar>,
    gens: &[SVec<Scalar>],
    direct_gens: &[SVec<Scalar>],
) {
    let name = format!("{what} matches the direct construction");
    let coords: Option<Vec<SVec<Scalar>>> = gens.iter().map(|g| block.space.coords(g)).collect();
    let Some(coords) = coords else {
        rep.push(CheckResult::from_bool(name, false, || "a generator is outside the block".into()));
        return;
    };
    let db = block.space.dim();
    let phi = LinMap::from_columns(db, coords);
    let src = LinMap::from_columns(direct.dim(), direct_gens.to_vec());
    let Some(src_inv) = src.inverse() else {
        rep.push(CheckResult::from_bool(name, false, || "direct generators are not a basis".into()));
        return;
    };
    // phi ∘ src⁻¹ : direct → block
    let iso = match phi.compose(&src_inv) {
        Ok(m) if m.rows() == m.cols() && m.rank() == m.cols() => m,
        _ => {
            rep.push(CheckResult::from_bool(name, false, || "generator map is not bijective".into()));
            return;
        }
    };
    let c = block.hopf.dim();
    let ba = &block.algebra;
    let checks = [
        ("product", ba.mult.compose(&iso.tensor(&iso)).ok(), iso.compose(&direct.mult).ok()),
        ("unit", Some(ba.unit.clone()), iso.compose(&direct.unit).ok()),
        (
            "left coaction",
            ba.left.as_ref().and_then(|l| l.compose(&iso).ok()),
            direct.left.as_ref().and_then(|l| LinMap::identity(c).tensor(&iso).compose(l).ok()),
        ),
        (
            "right coaction",
            ba.right.as_ref().and_then(|r| r.compose(&iso).ok()),
            direct.right.as_ref().and_then(|r| iso.tensor(&LinMap::identity(c)).compose(r).ok()),
        ),
    ];
    for (part, lhs, rhs) in checks {
        let ok = matches!((&lhs, &rhs), (Some(x), Some(y)) if x.map_eq(y));
        rep.push(CheckResult::from_bool(format!("{what}: {part}"), ok, || format!("{part} differs")));
    }
}

/// Locates `u = Σ_k e_{k,1} ⊗ e_{k,1}` in `A_a □ A_b` and returns `c` with
/// `u^N = c·1`.
pub fn cocycle_group_probe(b: &BraidedHopf<Scalar>, x: &ComoduleAlgebra<Scalar>, y: &ComoduleAlgebra<Scalar>) -> Result<Scalar, FaceError> {
    let n = diagonal_frame(b)?.n;
    let (prod, cot) = cotensor_algebra(b, x, y)?;
    let d = y.dim();
    let u = SVec::from_pairs((0..n).map(|k| ((k * n + 1) * d + k * n + 1, Scalar::int(1))));
    let u = cot.space.coords(&u).ok_or(FaceError::GeneratorNotFound)?;
    let mut power = u.clone();
    for _ in 1..n {
        power = prod.multiply(&power, &u);
    }
    let one = prod.one(b.base());
    let (k, c1) = one.iter().next().map(|(k, c)| (k, c.clone())).ok_or_else(|| FaceError::PowerNotScalar("unit is zero".into()))?;
    let c = power.coeff(k) * c1.inv().expect("nonzero coefficient");
    if power == one.scaled(&c) {
        Ok(c)
    } else {
        Err(FaceError::PowerNotScalar(prod.module.render(&power)))
    }
}

/// Whether `a` and `b` define the same class in `k^×/(k^×)^N`. Decided when
/// `a/b` is a rational N-th power, and when both are rational and `N` is
/// prime (a root of `x^N − a/b` has degree `N` over `ℚ`, too large for `ℚ(ω)`).
pub fn same_class(a: &Scalar, b: &Scalar, n: u32) -> Option<bool> {
    let (a, b) = (a.to_rational()?, b.to_rational()?);
    if a.is_zero() || b.is_zero() {
        return None;
    }
    let ratio = a / b;
    if rational_nth_root(&ratio, n).is_some() {
        return Some(true);
    }
    let prime = n >= 2 && (2..n).take_while(|p| p * p <= n).all(|p| !n.is_multiple_of(p));
    if prime { Some(false) } else { None }
}
