//! Hom and Ext between finitely presented modules, stable Hom modulo maps
//! through free modules, and MCM tests.
//!
//! A map `M -> N` is a `g_N x g_M` matrix `X`; it is stored as a vector in
//! `S^{g_N g_M}` with entry `(row, col)` in component `col * g_N + row`.

use std::collections::{BTreeMap, HashMap, VecDeque};

use std::sync::Arc;

use crate::algebra::{Field, FieldElement, FieldMatrix, FiniteDimAlgebra, Monomial, MonomialOrder, PolyRing, Polynomial, SparseEchelon};
use crate::error::{Error, Result};

use super::gb::{groebner, normal_form};
use super::matrix::Matrix;
use super::module::{graded_basis, FPModule};
use super::resolution::{resolve, FreeResolution};
use super::ring::QuotientRing;
use super::syzygy::preimage;
use super::vector::{VTerm, Vector};

/// Largest quotient dimension explored before a space is declared
/// infinite-dimensional.
pub const DIMENSION_CAP: usize = 4000;

/// Which part of a Hom or Ext space to compute.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Grading {
    /// The whole space, which must be finite-dimensional over the field.
    Total,
    /// Maps of the given degree between graded modules.
    Degree(i64),
}

type Key = (usize, Monomial);

/// A finite-dimensional quotient `K / J` of submodules of a free module,
/// with normal-form representatives and coordinates.
#[derive(Clone, Debug)]
pub(crate) struct Quotient {
    pub(crate) basis: Vec<Vector>,
    gb: Vec<Vector>,
    order: MonomialOrder,
    echelon: SparseEchelon<Key>,
}

fn sparse(v: &Vector) -> BTreeMap<Key, FieldElement> {
    v.terms().iter().map(|t| ((t.comp, t.mon.clone()), t.coeff.clone())).collect()
}

impl Quotient {
    /// Keeps the normal forms of `candidates` that are independent modulo
    /// the span of the earlier ones.
    pub(crate) fn from_candidates(ring: &QuotientRing, gb: Vec<Vector>, candidates: &[Vector]) -> Quotient {
        let order = ring.order();
        let field = ring.field();
        let mut echelon = SparseEchelon::new(field, true);
        let mut basis = Vec::new();
        for c in candidates {
            let v = normal_form(c, &gb, order);
            if !v.is_zero() && echelon.insert(sparse(&v)) {
                basis.push(v);
            } else {
                // keep tracked indices aligned with `basis`
                echelon = rebuild(field, &basis);
            }
        }
        Quotient { basis, gb, order, echelon }
    }

    /// The quotient `K / J` for `K` generated by `gens`: saturates the
    /// normal forms under multiplication by the variables.
    pub(crate) fn saturate(
        ring: &QuotientRing,
        gens: &[Vector],
        gb: Vec<Vector>,
        what: &str,
    ) -> Result<Quotient> {
        let order = ring.order();
        let nv = ring.nvars();
        let field = ring.field();
        let mut probe: SparseEchelon<Key> = SparseEchelon::new(field, false);
        let mut basis = Vec::new();
        let mut queue: VecDeque<Vector> = gens.iter().map(|g| normal_form(g, &gb, order)).collect();
        let one = field.one();
        while let Some(v) = queue.pop_front() {
            if v.is_zero() || !probe.insert(sparse(&v)) {
                continue;
            }
            if basis.len() >= DIMENSION_CAP {
                return Err(Error::InfiniteDimension {
                    what: what.to_string(),
                    cap: DIMENSION_CAP,
                });
            }
            for x in 0..nv {
                let xv = v.mul_term(&Monomial::var(nv, x), &one, 0);
                let r = normal_form(&xv, &gb, order);
                if !r.is_zero() {
                    queue.push_back(r);
                }
            }
            basis.push(v);
        }
        let echelon = rebuild(field, &basis);
        Ok(Quotient { basis, gb, order, echelon })
    }

    pub(crate) fn dim(&self) -> usize {
        self.basis.len()
    }

    pub(crate) fn coordinates(&self, v: &Vector) -> Option<Vec<FieldElement>> {
        let r = normal_form(v, &self.gb, self.order);
        let hist = self.echelon.express(sparse(&r))?;
        let mut out = vec![self.echelon.field().zero(); self.basis.len()];
        for (i, c) in hist {
            out[i] = c;
        }
        Some(out)
    }

    pub(crate) fn is_zero(&self, v: &Vector) -> bool {
        normal_form(v, &self.gb, self.order).is_zero()
    }
}

fn rebuild(field: &Field, basis: &[Vector]) -> SparseEchelon<Key> {
    let mut e = SparseEchelon::new(field, true);
    for b in basis {
        e.insert(sparse(b));
    }
    e
}

/// The map `X -> X * d` on vectorized `g_n x rows(d)` matrices.
pub(crate) fn lift_map(d: &Matrix, g_n: usize) -> Matrix {
    let order = d.ring.order;
    let mut cols = Vec::with_capacity(g_n * d.nrows);
    for row in d.rows() {
        for j in 0..g_n {
            let mut terms = Vec::new();
            for (c, p) in row.iter().enumerate() {
                for (m, a) in p.terms() {
                    terms.push(VTerm {
                        comp: c * g_n + j,
                        mon: m.clone(),
                        coeff: a.clone(),
                    });
                }
            }
            cols.push(Vector::from_terms(terms, order));
        }
    }
    Matrix::from_columns(&d.ring, g_n * d.ncols(), cols)
}

/// `copies` shifted copies of `gens`, each shifted by a multiple of `width`.
fn blocks(gens: &[Vector], width: usize, copies: usize) -> Vec<Vector> {
    let mut out = Vec::with_capacity(gens.len() * copies);
    for i in 0..copies {
        for g in gens {
            out.push(shift(g, i * width));
        }
    }
    out
}

fn shift(v: &Vector, by: usize) -> Vector {
    Vector::from_terms_unchecked(
        v.terms()
            .iter()
            .map(|t| VTerm {
                comp: t.comp + by,
                mon: t.mon.clone(),
                coeff: t.coeff.clone(),
            })
            .collect(),
    )
}

/// Vectorizes a `g_n x c` matrix.
pub fn matrix_to_vector(x: &Matrix) -> Vector {
    let g = x.nrows;
    let terms = x
        .cols
        .iter()
        .enumerate()
        .flat_map(|(c, col)| shift(col, c * g).terms().to_vec())
        .collect();
    Vector::from_terms(terms, x.ring.order)
}

/// Inverse of [`matrix_to_vector`].
pub fn vector_to_matrix(v: &Vector, ring: &Arc<PolyRing>, g_n: usize, ncols: usize) -> Matrix {
    let cols = (0..ncols).map(|c| v.slice(c * g_n, (c + 1) * g_n)).collect();
    Matrix::from_columns(ring, g_n, cols)
}

fn check_same_ring(m: &FPModule, n: &FPModule) -> Result<()> {
    if m.ring != n.ring {
        return Err(Error::RingMismatch("modules over different rings".into()));
    }
    Ok(())
}

/// A basis of homomorphisms `M -> N` (or of classes of them).
#[derive(Clone, Debug)]
pub struct MorphismSpace {
    pub source: FPModule,
    pub target: FPModule,
    pub grading: Grading,
    /// True for the quotient by maps that factor through a free module.
    pub stable: bool,
    /// `g_N x g_M` matrices.
    pub basis: Vec<Matrix>,
    quotient: Quotient,
}

impl MorphismSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Whether `x` sends the relations of the source into those of the target.
    pub fn is_morphism(&self, x: &Matrix) -> bool {
        let Ok(prod) = x.mul(&self.source.rels) else {
            return false;
        };
        prod.cols.iter().all(|c| self.target.is_zero_element(c))
    }

    /// Coordinates of the class of `x` in the basis.
    pub fn coordinates(&self, x: &Matrix) -> Option<Vec<FieldElement>> {
        self.quotient.coordinates(&matrix_to_vector(x))
    }

    /// Whether `x` is zero in this space.
    pub fn is_zero(&self, x: &Matrix) -> bool {
        self.quotient.is_zero(&matrix_to_vector(x))
    }

    /// The endomorphism algebra under composition, `a * b = a ∘ b`.
    pub fn algebra(&self) -> Result<FiniteDimAlgebra> {
        if self.source != self.target {
            return Err(Error::Invalid("composition needs source = target".into()));
        }
        let n = self.dim();
        if n == 0 {
            return Err(Error::Invalid("zero endomorphism space has no unit".into()));
        }
        let field = self.source.ring.field().clone();
        let missing = || Error::Invalid("product left the morphism space".into());
        let mut table = Vec::with_capacity(n);
        for a in &self.basis {
            let mut row = Vec::with_capacity(n);
            for b in &self.basis {
                let ab = a.mul(b)?;
                row.push(self.coordinates(&ab).ok_or_else(missing)?);
            }
            table.push(row);
        }
        let id = Matrix::identity(&self.source.ring.poly, self.source.ngens);
        let unit = self.coordinates(&id).ok_or_else(missing)?;
        let labels = basis_labels(&unit, n);
        FiniteDimAlgebra::new(&field, labels, table, unit)
    }
}

fn basis_labels(unit: &[FieldElement], n: usize) -> Vec<String> {
    let unit_first = unit[0].is_one() && unit[1..].iter().all(|c| c.is_zero());
    (0..n)
        .map(|i| match (unit_first, i, n) {
            (true, 0, _) => "1".to_string(),
            (true, 1, 2) => "t".to_string(),
            (true, _, _) => format!("t{i}"),
            (false, _, _) => format!("h{}", i + 1),
        })
        .collect()
}

/// The space of homomorphisms `M -> N`.
pub fn hom_space(m: &FPModule, n: &FPModule, grading: Grading) -> Result<MorphismSpace> {
    check_same_ring(m, n)?;
    let ring = &m.ring;
    let g_n = n.ngens;
    let j_gb = blocks(n.gb(), g_n, m.ngens);
    let quotient = match grading {
        Grading::Total => {
            let psi = lift_map(&m.rels, g_n);
            let k = preimage(&psi, &blocks(n.gb(), g_n, m.rels.ncols()));
            let seeds = endomorphism_seed(m, n, k);
            Quotient::saturate(ring, &seeds, j_gb, "Hom")?
        }
        Grading::Degree(d) => {
            let res = resolve(m, 1);
            let cands = graded_cocycles(&res, n, 0, d)?;
            Quotient::from_candidates(ring, j_gb, &cands)
        }
    };
    Ok(finish(m, n, grading, false, quotient))
}

/// Puts the identity first when computing endomorphisms so that it becomes
/// the first basis element.
fn endomorphism_seed(m: &FPModule, n: &FPModule, k: Vec<Vector>) -> Vec<Vector> {
    if m != n {
        return k;
    }
    let id = matrix_to_vector(&Matrix::identity(&m.ring.poly, m.ngens));
    std::iter::once(id).chain(k).collect()
}

fn finish(m: &FPModule, n: &FPModule, grading: Grading, stable: bool, quotient: Quotient) -> MorphismSpace {
    let basis = quotient
        .basis
        .iter()
        .map(|v| vector_to_matrix(v, &m.ring.poly, n.ngens, m.ngens))
        .collect();
    MorphismSpace {
        source: m.clone(),
        target: n.clone(),
        grading,
        stable,
        basis,
        quotient,
    }
}

/// Homomorphisms `M -> N` modulo those factoring through a free module.
/// Both modules must be maximal Cohen-Macaulay.
pub fn stable_hom(m: &FPModule, n: &FPModule) -> Result<MorphismSpace> {
    check_same_ring(m, n)?;
    for x in [m, n] {
        if let Some(degree) = is_mcm(x)?.witness {
            return Err(Error::NotMcm { degree });
        }
    }
    let ring = &m.ring;
    let g_n = n.ngens;
    let r = m.rels.ncols();
    let psi = lift_map(&m.rels, g_n);
    let k = preimage(&psi, &blocks(n.gb(), g_n, r));
    let through_free = preimage(&psi, &ring.ideal_module(g_n * r));
    let mut j = blocks(n.gb(), g_n, m.ngens);
    j.extend(through_free);
    let j_gb = groebner(&j, ring.order());
    let seeds = endomorphism_seed(m, n, k);
    let quotient = Quotient::saturate(ring, &seeds, j_gb, "stable Hom")?;
    Ok(finish(m, n, Grading::Total, true, quotient))
}

/// Cocycles and coboundaries of `Hom(F_p, N)` in total form: the kernel
/// generators of `delta^p` and a Gröbner basis of the coboundaries plus
/// `U_N^{r_p}`.
fn total_cochains(res: &FreeResolution, n: &FPModule, p: usize) -> (Vec<Vector>, Vec<Vector>) {
    let g_n = n.ngens;
    let ring = &res.ring;
    let r_p = res.rank(p);
    let next = res.d(p + 1);
    let k = preimage(&lift_map(&next, g_n), &blocks(n.gb(), g_n, next.ncols()));
    let mut j = blocks(n.gb(), g_n, r_p);
    if p > 0 {
        j.extend(lift_map(&res.d(p), g_n).cols);
    }
    (k, groebner(&j, ring.order()))
}

/// Gröbner basis of the coboundaries in `Hom(F_1, N)` for the
/// presentation `F_1 -> F_0` of `M`, together with `U_N^{r_1}`.
pub(crate) fn total_ext1_coboundaries(m: &FPModule, n: &FPModule) -> Vec<Vector> {
    let g_n = n.ngens;
    let mut j = blocks(n.gb(), g_n, m.rels.ncols());
    j.extend(lift_map(&m.rels, g_n).cols);
    groebner(&j, m.ring.order())
}

/// Basis of `C^p_d = (+)_l N_{a_l + d}` as vectors in `S^{g_N r_p}`.
fn graded_cochain_basis(res: &FreeResolution, n: &FPModule, p: usize, d: i64) -> Result<Vec<Vector>> {
    let degs = res
        .basis_degrees(p)
        .ok_or_else(|| Error::NotHomogeneous("source module is not graded".into()))?;
    if n.degrees.is_none() {
        return Err(Error::NotHomogeneous("target module is not graded".into()));
    }
    let one = res.ring.field().one();
    let mut out = Vec::new();
    for (l, a) in degs.iter().enumerate() {
        for (j, mon) in graded_basis(n, a + d) {
            out.push(Vector::from_terms_unchecked(vec![VTerm {
                comp: l * n.ngens + j,
                mon,
                coeff: one.clone(),
            }]));
        }
    }
    Ok(out)
}

/// Matrix of `delta^p: C^p_d -> C^{p+1}_d` in the standard-monomial bases.
fn graded_differential(
    res: &FreeResolution,
    n: &FPModule,
    p: usize,
    d: i64,
) -> Result<(Vec<Vector>, FieldMatrix)> {
    let src = graded_cochain_basis(res, n, p, d)?;
    let tgt = graded_cochain_basis(res, n, p + 1, d)?;
    let index: HashMap<Key, usize> = tgt
        .iter()
        .enumerate()
        .map(|(i, v)| {
            let t = &v.terms()[0];
            ((t.comp, t.mon.clone()), i)
        })
        .collect();
    let g_n = n.ngens;
    let next = res.d(p + 1);
    let psi = lift_map(&next, g_n);
    let gb = blocks(n.gb(), g_n, next.ncols());
    let order = res.ring.order();
    let field = res.ring.field();
    let mut m = FieldMatrix::zeros(field, tgt.len(), src.len());
    for (c, v) in src.iter().enumerate() {
        let image = normal_form(&psi.apply(v), &gb, order);
        for t in image.terms() {
            let Some(&r) = index.get(&(t.comp, t.mon.clone())) else {
                return Err(Error::NotHomogeneous(format!("differential d_{} is not homogeneous", p + 1)));
            };
            m.set(r, c, t.coeff.clone());
        }
    }
    Ok((src, m))
}

/// Cocycles of `C^p_d` spanning `ker delta^p`.
fn graded_cocycles(res: &FreeResolution, n: &FPModule, p: usize, d: i64) -> Result<Vec<Vector>> {
    let (src, m) = graded_differential(res, n, p, d)?;
    if src.is_empty() {
        return Ok(Vec::new());
    }
    let ker = m.kernel_basis();
    let order = res.ring.order();
    Ok((0..ker.cols)
        .map(|c| {
            let terms = src
                .iter()
                .enumerate()
                .filter(|(r, _)| !ker.get(*r, c).is_zero())
                .map(|(r, v)| {
                    let t = &v.terms()[0];
                    VTerm {
                        comp: t.comp,
                        mon: t.mon.clone(),
                        coeff: ker.get(r, c).clone(),
                    }
                })
                .collect();
            Vector::from_terms(terms, order)
        })
        .collect())
}

fn graded_rank(res: &FreeResolution, n: &FPModule, p: usize, d: i64) -> Result<(usize, usize)> {
    let (src, m) = graded_differential(res, n, p, d)?;
    let rank = if src.is_empty() || m.rows == 0 { 0 } else { m.rank() };
    Ok((src.len(), rank))
}

/// `dim Ext^p(M, N)` for `p = 0..=p_max`.
pub fn ext_dims(m: &FPModule, n: &FPModule, p_max: usize, grading: Grading) -> Result<Vec<usize>> {
    check_same_ring(m, n)?;
    let res = resolve(m, p_max + 1);
    ext_dims_from(&res, n, p_max, grading)
}

/// [`ext_dims`] from a precomputed resolution of the first argument.
pub fn ext_dims_from(res: &FreeResolution, n: &FPModule, p_max: usize, grading: Grading) -> Result<Vec<usize>> {
    match grading {
        Grading::Total => (0..=p_max)
            .map(|p| {
                let (k, j) = total_cochains(res, n, p);
                Quotient::saturate(&res.ring, &k, j, &format!("Ext^{p}")).map(|q| q.dim())
            })
            .collect(),
        Grading::Degree(d) => {
            let mut prev_rank = 0;
            let mut out = Vec::with_capacity(p_max + 1);
            for p in 0..=p_max {
                let (dim, rank) = graded_rank(res, n, p, d)?;
                out.push(dim - rank - prev_rank);
                prev_rank = rank;
            }
            Ok(out)
        }
    }
}

/// `dim Ext^p(M, N)` for `p = 1..=p_max`, skipping `Hom`, which is often
/// infinite-dimensional in total grading.
pub fn higher_ext_dims(m: &FPModule, n: &FPModule, p_max: usize, grading: Grading) -> Result<Vec<usize>> {
    check_same_ring(m, n)?;
    let res = resolve(m, p_max + 1);
    match grading {
        Grading::Total => (1..=p_max)
            .map(|p| {
                let (k, j) = total_cochains(&res, n, p);
                Quotient::saturate(&res.ring, &k, j, &format!("Ext^{p}")).map(|q| q.dim())
            })
            .collect(),
        Grading::Degree(_) => Ok(ext_dims_from(&res, n, p_max, grading)?[1..].to_vec()),
    }
}

/// Whether `Ext^p(M, N)` vanishes, without requiring finite dimension.
pub fn ext_vanishes(res: &FreeResolution, n: &FPModule, p: usize) -> bool {
    let (k, j) = total_cochains(res, n, p);
    k.iter().all(|v| normal_form(v, &j, res.ring.order()).is_zero())
}

/// Representatives of a basis of `Ext^1(M, N)`: `g_N x r_1` matrices
/// `X` with `X * d_2 = 0` in `N`, where `d_1` is the presentation of `M`.
pub fn ext1_cocycles(m: &FPModule, n: &FPModule, grading: Grading) -> Result<Vec<Matrix>> {
    check_same_ring(m, n)?;
    let res = resolve(m, 2);
    let (k, j) = total_cochains(&res, n, 1);
    let q = match grading {
        Grading::Total => Quotient::saturate(&res.ring, &k, j, "Ext^1")?,
        Grading::Degree(d) => {
            let cands = graded_cocycles(&res, n, 1, d)?;
            Quotient::from_candidates(&res.ring, j, &cands)
        }
    };
    let r1 = res.rank(1);
    Ok(q.basis
        .iter()
        .map(|v| vector_to_matrix(v, &res.ring.poly, n.ngens, r1))
        .collect())
}

/// Result of an MCM test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct McmReport {
    pub mcm: bool,
    /// First `i > 0` with `Ext^i(M, R) != 0`.
    pub witness: Option<usize>,
}

/// Tests `Ext^i(M, R) = 0` for `0 < i <= dim R`, which characterizes
/// maximal Cohen-Macaulay modules over a Gorenstein ring.
pub fn is_mcm(m: &FPModule) -> Result<McmReport> {
    let bound = m.ring.krull_dim();
    let res = resolve(m, bound + 1);
    let r = FPModule::free(&m.ring, 1);
    let witness = (1..=bound).find(|&i| !ext_vanishes(&res, &r, i));
    Ok(McmReport {
        mcm: witness.is_none(),
        witness,
    })
}

/// `dim_k M / mM` for a maximal ideal `m` given by generators.
pub fn fiber_generators(m: &FPModule, point_ideal: &[Polynomial]) -> Result<usize> {
    let ring = &m.ring;
    let mut j: Vec<Vector> = m.gb().to_vec();
    for p in point_ideal {
        for c in 0..m.ngens {
            j.push(Vector::from_poly(p, c));
        }
    }
    let j_gb = groebner(&j, ring.order());
    let one = ring.field().one();
    let gens: Vec<Vector> = (0..m.ngens)
        .map(|c| {
            Vector::from_terms_unchecked(vec![VTerm {
                comp: c,
                mon: Monomial::one(ring.nvars()),
                coeff: one.clone(),
            }])
        })
        .collect();
    Quotient::saturate(ring, &gens, j_gb, "fiber").map(|q| q.dim())
}

/// Dimensions `dim Ext^p(M_i, M_j)` for a list of modules.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ExtTable {
    pub entries: BTreeMap<(usize, usize, usize), usize>,
}

impl ExtTable {
    pub fn compute(modules: &[FPModule], p_max: usize, grading: Grading) -> Result<ExtTable> {
        let mut entries = BTreeMap::new();
        for (i, m) in modules.iter().enumerate() {
            let res = resolve(m, p_max + 1);
            for (j, n) in modules.iter().enumerate() {
                check_same_ring(m, n)?;
                for (p, d) in ext_dims_from(&res, n, p_max, grading)?.into_iter().enumerate() {
                    entries.insert((i, j, p), d);
                }
            }
        }
        Ok(ExtTable { entries })
    }

    pub fn get(&self, i: usize, j: usize, p: usize) -> Option<usize> {
        self.entries.get(&(i, j, p)).copied()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(s: &str) -> Arc<QuotientRing> {
        QuotientRing::parse(s).unwrap()
    }

    fn module(s: &str, r: &Arc<QuotientRing>) -> FPModule {
        FPModule::parse(s, Some(r)).unwrap()
    }

    #[test]
    fn ext_of_residue_field_over_dual_numbers() {
        let a = ring("Q[z]/(z^2)");
        let k = module("A/(z)", &a);
        assert_eq!(ext_dims(&k, &k, 4, Grading::Total).unwrap(), vec![1, 1, 1, 1, 1]);
    }

    #[test]
    fn ext_from_free_vanishes() {
        let r = ring("Q[x,y,z,w]/(x*y+z*w)");
        let f = FPModule::free(&r, 1);
        let i1 = module("ideal (x, z)", &r);
        let dims = ext_dims(&f, &i1, 3, Grading::Degree(0)).unwrap();
        assert_eq!(&dims[1..], &[0, 0, 0]);
    }

    #[test]
    fn cone_ideals_ext_alternates() {
        let r = ring("Q[x,y,z,w]/(x*y+z*w)");
        let i1 = module("ideal (x, z)", &r);
        let i2 = module("ideal (x, w)", &r);
        let res = resolve(&i1, 5);
        let d12: Vec<usize> = (1..=4).map(|p| {
            let (k, j) = total_cochains(&res, &i2, p);
            Quotient::saturate(&r, &k, j, "Ext").unwrap().dim()
        }).collect();
        assert_eq!(d12, vec![1, 0, 1, 0]);
        let d11: Vec<usize> = (1..=4).map(|p| {
            let (k, j) = total_cochains(&res, &i1, p);
            Quotient::saturate(&r, &k, j, "Ext").unwrap().dim()
        }).collect();
        assert_eq!(d11, vec![0, 1, 0, 1]);
    }

    #[test]
    fn total_hom_over_cone_is_infinite() {
        let r = ring("Q[x,y,z,w]/(x*y+z*w)");
        let i1 = module("ideal (x, z)", &r);
        assert!(matches!(
            hom_space(&i1, &i1, Grading::Total),
            Err(Error::InfiniteDimension { .. })
        ));
    }

    #[test]
    fn degree_zero_homs_between_cone_ideals() {
        let r = ring("Q[x,y,z,w]/(x*y+z*w)");
        let i1 = module("ideal (x, z)", &r);
        let i2 = module("ideal (x, w)", &r);
        assert_eq!(hom_space(&i1, &i2, Grading::Degree(0)).unwrap().dim(), 0);
        let end = hom_space(&i1, &i1, Grading::Degree(0)).unwrap();
        assert_eq!(end.dim(), 1);
        assert!(end.is_morphism(&end.basis[0]));
    }

    #[test]
    fn stable_endomorphisms() {
        let a = ring("Q[z]/(z^2)");
        let v1 = module("A/(z)", &a);
        let e = stable_hom(&v1, &v1).unwrap();
        assert_eq!(e.dim(), 1);
        assert_eq!(e.algebra().unwrap().labels, vec!["1"]);

        let b = ring("Q[z,w]/(z*w)");
        let mz = module("B/(w)", &b);
        let mw = module("B/(z)", &b);
        assert_eq!(stable_hom(&mz, &mw).unwrap().dim(), 0);
        assert_eq!(stable_hom(&mz, &mz).unwrap().dim(), 1);
    }

    #[test]
    fn stable_endomorphisms_of_nodal_cubic_module() {
        let c = ring("Q[z,w]/(z^2+z^3+w^2)");
        let cp = module(
            "module over Q[z,w]/(z^2+z^3+w^2) generators e,t relations [[w,-z],[z^2+z,w]]",
            &c,
        );
        let e = stable_hom(&cp, &cp).unwrap();
        assert_eq!(e.dim(), 2);
        let alg = e.algebra().unwrap();
        assert!(alg.is_quadratic_minus_one());
        assert_eq!(alg.idempotents().unwrap().len(), 2);
    }

    #[test]
    fn mcm_tests() {
        let r = ring("Q[x,y,z,w]/(x*y+z*w)");
        assert!(is_mcm(&module("ideal (x, z)", &r)).unwrap().mcm);
        let ol = is_mcm(&module("R/(x, w)", &r)).unwrap();
        assert!(!ol.mcm);
        assert_eq!(ol.witness, Some(1));
        assert!(is_mcm(&FPModule::free(&r, 2)).unwrap().mcm);
    }

    #[test]
    fn fiber_generator_counts() {
        let r = ring("Q[x,y,z,w]/(x*y+z*w)");
        let origin: Vec<Polynomial> = ["x", "y", "z", "w"].iter().map(|v| r.var(v).unwrap()).collect();
        assert_eq!(fiber_generators(&module("ideal (x^2, x*z, z^2)", &r), &origin).unwrap(), 3);
        assert_eq!(fiber_generators(&module("ideal (x, z)", &r), &origin).unwrap(), 2);
        assert_eq!(fiber_generators(&FPModule::free(&r, 3), &origin).unwrap(), 3);
    }
}
