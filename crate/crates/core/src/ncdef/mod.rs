//! Non-commutative deformations of simple collections by iterated
//! universal extensions.
//!
//! A collection `L_1, ..., L_r` with `Hom(L_i, L_j) = k^{delta_ij}` is
//! deformed one component at a time: `F^(i)` starts as `L_i` and each step
//! replaces it by the universal extension
//! `0 -> (+)_j L_j (x) Ext^1(F^(i), L_j)^* -> F'^(i) -> F^(i) -> 0`.
//! The parameter algebra is the algebra of endomorphisms of
//! `F = (+)_i F^(i)` that preserve the filtration by extension layers.

use serde::Serialize;

use crate::algebra::fdalg::Element;
use crate::algebra::{FieldMatrix, FiniteDimAlgebra, Monomial};
use crate::error::{Error, Result};
use crate::groebner::gb::{groebner, normal_form};
use crate::groebner::{ext1_cocycles, ext_dims, hom_space, yoneda_extension, FPModule, Grading, Matrix, MorphismSpace, Vector};

/// Default iteration bound for [`run`].
pub const DEFAULT_MAX_ITER: usize = 8;

/// `dim Hom(L_i, L_j)` for all pairs and whether it is the identity matrix.
pub fn simple_check(modules: &[FPModule], grading: Grading) -> Result<(bool, Vec<Vec<usize>>)> {
    let mut m = vec![vec![0; modules.len()]; modules.len()];
    for (i, a) in modules.iter().enumerate() {
        for (j, b) in modules.iter().enumerate() {
            m[i][j] = hom_space(a, b, grading)?.dim();
        }
    }
    let simple = m
        .iter()
        .enumerate()
        .all(|(i, row)| row.iter().enumerate().all(|(j, &d)| d == usize::from(i == j)));
    Ok((simple, m))
}

#[derive(Clone, Debug)]
pub struct SimpleCollection {
    pub modules: Vec<FPModule>,
    pub grading: Grading,
    pub hom: Vec<Vec<usize>>,
}

impl SimpleCollection {
    /// Admits the collection only if it is simple.
    pub fn new(modules: Vec<FPModule>, grading: Grading) -> Result<SimpleCollection> {
        if modules.is_empty() {
            return Err(Error::Invalid("empty collection".into()));
        }
        if modules.iter().any(|m| m.ring != modules[0].ring) {
            return Err(Error::RingMismatch("collection modules live over different rings".into()));
        }
        let (simple, hom) = simple_check(&modules, grading)?;
        if !simple {
            return Err(Error::Invalid(format!("not a simple collection: Hom dimensions {hom:?}")));
        }
        Ok(SimpleCollection { modules, grading, hom })
    }

    pub fn len(&self) -> usize {
        self.modules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.modules.is_empty()
    }
}

/// A block of generators of a component forming one copy of `L_factor`,
/// added at step `level`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Layer {
    pub factor: usize,
    pub level: usize,
    pub start: usize,
    pub len: usize,
}

#[derive(Clone, Debug)]
pub struct Component {
    pub module: FPModule,
    pub layers: Vec<Layer>,
    /// `ext1[j]`: cocycles spanning `Ext^1(module, L_j)`.
    pub ext1: Vec<Vec<Matrix>>,
}

#[derive(Clone, Debug)]
pub struct DeformationState {
    pub n: usize,
    pub collection: SimpleCollection,
    pub components: Vec<Component>,
    /// `F = (+)_i F^(i)`.
    pub module: FPModule,
    /// Filtration-preserving endomorphisms of `F`.
    pub algebra: FiniteDimAlgebra,
    /// Projections onto the components, as elements of `algebra`.
    pub idempotents: Vec<Element>,
    /// Dimension of all of `End(F)`.
    pub full_end_dim: usize,
    end: MorphismSpace,
    /// Columns: coordinates in `end` of the basis of `algebra`.
    embedding: FieldMatrix,
}

impl DeformationState {
    pub fn initial(c: &SimpleCollection) -> Result<DeformationState> {
        let components = c
            .modules
            .iter()
            .enumerate()
            .map(|(i, l)| {
                component(
                    c,
                    l.clone(),
                    vec![Layer {
                        factor: i,
                        level: 0,
                        start: 0,
                        len: l.ngens,
                    }],
                )
            })
            .collect::<Result<Vec<_>>>()?;
        assemble(c.clone(), 0, components)
    }

    /// `dim Ext^1(F^(i), L_j)`.
    pub fn ext1_dims(&self) -> Vec<Vec<usize>> {
        self.components
            .iter()
            .map(|c| c.ext1.iter().map(Vec::len).collect())
            .collect()
    }

    pub fn is_terminal(&self) -> bool {
        self.ext1_dims().iter().flatten().all(|&d| d == 0)
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// Total number of layers.
    pub fn filtration_length(&self) -> usize {
        self.components.iter().map(|c| c.layers.len()).sum()
    }

    /// Coordinates in the parameter algebra of an endomorphism of `F`, if it
    /// preserves the filtration.
    pub fn element_of(&self, x: &Matrix) -> Option<Element> {
        let v = self.end.coordinates(x)?;
        self.embedding.solve(&v)
    }

    /// Recomputes `Ext^1(F^(i), L_j)` from scratch.
    pub fn fresh_ext1(&self) -> Result<Vec<Vec<usize>>> {
        self.components
            .iter()
            .map(|c| {
                self.collection
                    .modules
                    .iter()
                    .map(|l| Ok(ext_dims(&c.module, l, 1, self.collection.grading)?[1]))
                    .collect()
            })
            .collect()
    }

    /// `dim Ext^p(F, F)` for `p = 0..=p_max`, summed over component pairs.
    pub fn self_ext(&self, p_max: usize) -> Result<Vec<usize>> {
        let mut total = vec![0; p_max + 1];
        for a in &self.components {
            for b in &self.components {
                for (t, d) in total.iter_mut().zip(ext_dims(&a.module, &b.module, p_max, self.collection.grading)?) {
                    *t += d;
                }
            }
        }
        Ok(total)
    }
}

fn component(c: &SimpleCollection, module: FPModule, layers: Vec<Layer>) -> Result<Component> {
    let ext1 = c
        .modules
        .iter()
        .map(|l| ext1_cocycles(&module, l, c.grading))
        .collect::<Result<Vec<_>>>()?;
    Ok(Component { module, layers, ext1 })
}

fn assemble(collection: SimpleCollection, n: usize, components: Vec<Component>) -> Result<DeformationState> {
    let mut module = components[0].module.clone();
    for c in &components[1..] {
        module = module.direct_sum(&c.module)?;
    }
    let end = hom_space(&module, &module, collection.grading)?;
    let full = end.algebra()?;
    let mut offsets = Vec::new();
    let mut layers = Vec::new();
    let mut off = 0;
    for c in &components {
        offsets.push(off);
        for l in &c.layers {
            layers.push(Layer { start: l.start + off, ..l.clone() });
        }
        off += c.module.ngens;
    }
    let embedding = compatible_subspace(&end, &module, &layers);
    let algebra = subalgebra(&full, &embedding)?;
    let poly = &module.ring.poly;
    let mut idempotents = Vec::new();
    for (c, &o) in components.iter().zip(&offsets) {
        let mut p = Matrix::zero(poly, module.ngens, module.ngens);
        for g in o..o + c.module.ngens {
            p = p.add(&unit_matrix(poly, module.ngens, g))?;
        }
        let v = end.coordinates(&p).ok_or_else(|| Error::Invalid("projection is not a morphism".into()))?;
        let e = embedding
            .solve(&v)
            .ok_or_else(|| Error::Invalid("projection does not preserve the filtration".into()))?;
        idempotents.push(e);
    }
    Ok(DeformationState {
        n,
        collection,
        full_end_dim: end.dim(),
        components,
        module,
        algebra,
        idempotents,
        end,
        embedding,
    })
}

fn unit_matrix(poly: &std::sync::Arc<crate::algebra::PolyRing>, n: usize, g: usize) -> Matrix {
    let one = crate::algebra::Polynomial::one(poly);
    let cols = (0..n)
        .map(|c| if c == g { Vector::from_poly(&one, g) } else { Vector::zero() })
        .collect();
    Matrix::from_columns(poly, n, cols)
}

/// Coordinates (as columns) of a basis of the endomorphisms mapping every
/// filtration step `Fil_k` (generated by layers of level `>= k`) into itself.
fn compatible_subspace(end: &MorphismSpace, module: &FPModule, layers: &[Layer]) -> FieldMatrix {
    let field = module.ring.field().clone();
    let order = module.ring.order();
    let top = layers.iter().map(|l| l.level).max().unwrap_or(0);
    let mut rows: Vec<Vec<crate::algebra::FieldElement>> = Vec::new();
    for k in 1..=top {
        let gens: Vec<usize> = layers
            .iter()
            .filter(|l| l.level >= k)
            .flat_map(|l| l.start..l.start + l.len)
            .collect();
        let mut sub: Vec<Vector> = module.gb().to_vec();
        sub.extend(gens.iter().map(|&g| Vector::from_poly(&module.ring.one(), g)));
        let gb = groebner(&sub, order);
        let images: Vec<Vec<Vector>> = end
            .basis
            .iter()
            .map(|b| gens.iter().map(|&g| normal_form(&b.cols[g], &gb, order)).collect())
            .collect();
        // one row per (generator, component, monomial) appearing anywhere
        let mut keys = Vec::new();
        for per in &images {
            for v in per.iter() {
                for t in v.terms() {
                    keys.push((t.comp, t.mon.clone()));
                }
            }
        }
        keys.sort();
        keys.dedup();
        for gi in 0..gens.len() {
            for key in &keys {
                let row: Vec<_> = images
                    .iter()
                    .map(|per| {
                        per[gi]
                            .terms()
                            .iter()
                            .find(|t| t.comp == key.0 && t.mon == key.1)
                            .map_or(field.zero(), |t| t.coeff.clone())
                    })
                    .collect();
                if row.iter().any(|c| !c.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let n = end.dim();
    if rows.is_empty() {
        return FieldMatrix::identity(&field, n);
    }
    FieldMatrix::from_rows(&field, rows).kernel_basis()
}

/// Structure constants of the subalgebra spanned by the columns of `emb`.
fn subalgebra(full: &FiniteDimAlgebra, emb: &FieldMatrix) -> Result<FiniteDimAlgebra> {
    let k = emb.cols;
    if k == full.dim() && *emb == FieldMatrix::identity(&full.field, k) {
        return Ok(full.clone());
    }
    let basis: Vec<Element> = (0..k).map(|c| emb.column(c)).collect();
    let coords = |x: &Element| {
        emb.solve(x)
            .ok_or_else(|| Error::Invalid("filtered endomorphisms are not closed under composition".into()))
    };
    let mut table = Vec::with_capacity(k);
    for a in &basis {
        let mut row = Vec::with_capacity(k);
        for b in &basis {
            row.push(coords(&full.mul(a, b))?);
        }
        table.push(row);
    }
    let unit = coords(&full.unit())?;
    let labels = (0..k).map(|i| format!("r{i}")).collect();
    FiniteDimAlgebra::new(&full.field, labels, table, unit)
}

/// One universal-extension step applied to every component.
pub fn deform_step(s: &DeformationState) -> Result<DeformationState> {
    if s.is_terminal() {
        return Ok(s.clone());
    }
    let c = &s.collection;
    let mut next = Vec::with_capacity(s.components.len());
    for comp in &s.components {
        if comp.ext1.iter().all(Vec::is_empty) {
            next.push(comp.clone());
            continue;
        }
        let mut sub: Option<FPModule> = None;
        let mut classes: Vec<&Matrix> = Vec::new();
        let mut layers = comp.layers.clone();
        let mut start = comp.module.ngens;
        for (j, cls) in comp.ext1.iter().enumerate() {
            let l = &c.modules[j];
            for x in cls {
                sub = Some(match sub {
                    None => l.clone(),
                    Some(m) => m.direct_sum(l)?,
                });
                classes.push(x);
                layers.push(Layer {
                    factor: j,
                    level: s.n + 1,
                    start,
                    len: l.ngens,
                });
                start += l.ngens;
            }
        }
        let grid: Vec<Vec<&Matrix>> = classes.iter().map(|x| vec![*x]).collect();
        let stacked = Matrix::blocks(&grid)?;
        let ext = yoneda_extension(&stacked, sub.as_ref().unwrap(), &comp.module, false)?;
        next.push(component(c, ext.module, layers)?);
    }
    assemble(c.clone(), s.n + 1, next)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum Outcome {
    Terminated { step: usize },
    NonTerminated { bound: usize },
}

#[derive(Clone, Debug)]
pub struct TerminationReport {
    pub outcome: Outcome,
    /// `dim R` at steps `0, 1, ...`.
    pub dims: Vec<usize>,
    /// All states visited, the last one being the final state.
    pub states: Vec<DeformationState>,
}

impl TerminationReport {
    pub fn terminated(&self) -> bool {
        matches!(self.outcome, Outcome::Terminated { .. })
    }

    pub fn final_state(&self) -> &DeformationState {
        self.states.last().expect("at least the initial state")
    }
}

/// Iterates [`deform_step`] until `Ext^1(F, L_j) = 0` for all `j`, visiting
/// at most `max_iter` states.
pub fn run(c: &SimpleCollection, max_iter: usize) -> Result<TerminationReport> {
    if max_iter == 0 {
        return Err(Error::Invalid("iteration bound must be positive".into()));
    }
    let mut states = vec![DeformationState::initial(c)?];
    loop {
        let s = states.last().unwrap();
        if s.is_terminal() {
            let step = s.n;
            return Ok(report(Outcome::Terminated { step }, states));
        }
        if states.len() == max_iter {
            return Ok(report(Outcome::NonTerminated { bound: max_iter }, states));
        }
        let next = deform_step(s)?;
        if next.dim() <= s.dim() {
            return Err(Error::Invalid(format!(
                "parameter algebra did not grow at step {}: {} -> {}",
                next.n,
                s.dim(),
                next.dim()
            )));
        }
        states.push(next);
    }
}

fn report(outcome: Outcome, states: Vec<DeformationState>) -> TerminationReport {
    TerminationReport {
        outcome,
        dims: states.iter().map(DeformationState::dim).collect(),
        states,
    }
}

/// Result of [`flatness_filtration_check`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FlatnessReport {
    pub flat: bool,
    /// Number of layers isomorphic to `L_j`, over all components.
    pub multiplicities: Vec<usize>,
    /// `dim R e_j`.
    pub expected: Vec<usize>,
    /// First `(i, j)` with `[F^(i) : L_j] != dim e_i R e_j`.
    pub failure: Option<(usize, usize)>,
}

/// Compares the layer counts of each component with the Peirce
/// decomposition of the parameter algebra: `F^(i)` must contain `L_j` exactly
/// `dim e_i R e_j` times, and the total length must be `dim R`.
pub fn flatness_filtration_check(s: &DeformationState) -> FlatnessReport {
    let r = s.collection.len();
    let a = &s.algebra;
    let peirce = |i: usize, j: usize| -> usize {
        let elems: Vec<Element> = (0..a.dim())
            .map(|b| a.mul(&a.mul(&s.idempotents[i], &a.basis(b)), &s.idempotents[j]))
            .collect();
        a.rank_of(&elems)
    };
    let mut multiplicities = vec![0; r];
    let mut expected = vec![0; r];
    let mut failure = None;
    for i in 0..r {
        for j in 0..r {
            let count = s.components[i].layers.iter().filter(|l| l.factor == j).count();
            let want = peirce(i, j);
            multiplicities[j] += count;
            expected[j] += want;
            if count != want && failure.is_none() {
                failure = Some((i, j));
            }
        }
    }
    let flat = failure.is_none() && s.filtration_length() == a.dim();
    FlatnessReport {
        flat,
        multiplicities,
        expected,
        failure,
    }
}

/// `k[x,y]/(xy, (x,y)^{n+1})` with basis `1, x, ..., x^n, y, ..., y^n`.
pub fn node_truncation(field: &crate::algebra::Field, n: usize) -> Result<FiniteDimAlgebra> {
    let mut basis = vec![Monomial::one(2)];
    for e in 1..=n as u16 {
        basis.push(Monomial::from_exponents(&[e, 0]));
    }
    for e in 1..=n as u16 {
        basis.push(Monomial::from_exponents(&[0, e]));
    }
    FiniteDimAlgebra::monomial_quotient(field, &["x", "y"], basis)
}

/// Whether the parameter algebra of a one-module state over `k[x,y]/(xy)`
/// is isomorphic to the truncation of order `s.n`, via `x^a |-> x^a * id`.
pub fn matches_node_truncation(s: &DeformationState) -> Result<bool> {
    let ring = &s.module.ring;
    let trunc = node_truncation(ring.field(), s.n)?;
    let (x, y) = (ring.var("x")?, ring.var("y")?);
    let g = s.module.ngens;
    let mut images = Vec::with_capacity(trunc.dim());
    let mut push = |p: &crate::algebra::Polynomial| -> bool {
        match s.element_of(&Matrix::scalar(&ring.poly, g, p)) {
            Some(e) => {
                images.push(e);
                true
            }
            None => false,
        }
    };
    if !push(&ring.one()) {
        return Ok(false);
    }
    for v in [&x, &y] {
        let mut p = ring.one();
        for _ in 0..s.n {
            p = p.mul(v);
            if !push(&p) {
                return Ok(false);
            }
        }
    }
    Ok(trunc.is_isomorphism(&s.algebra, &images))
}

/// Whether the parameter algebra of a two-module state is the path algebra
/// of a two-cycle modulo paths of length two, with vertices given by the
/// component idempotents.
pub fn matches_two_cycle(s: &DeformationState) -> bool {
    if s.idempotents.len() != 2 {
        return false;
    }
    let a = &s.algebra;
    let corner = |i: usize, j: usize| -> Vec<Element> {
        let mut out: Vec<Element> = Vec::new();
        for b in 0..a.dim() {
            let e = a.mul(&a.mul(&s.idempotents[i], &a.basis(b)), &s.idempotents[j]);
            if !FiniteDimAlgebra::is_zero(&e) && a.rank_of(&[out.clone(), vec![e.clone()]].concat()) > out.len() {
                out.push(e);
            }
        }
        out
    };
    // t12 = e2 t12 e1 under composition
    let (t12, t21) = (corner(1, 0), corner(0, 1));
    if t12.len() != 1 || t21.len() != 1 {
        return false;
    }
    let model = FiniteDimAlgebra::two_cycle_square_zero(&a.field);
    let images = vec![
        s.idempotents[0].clone(),
        s.idempotents[1].clone(),
        t12[0].clone(),
        t21[0].clone(),
    ];
    model.is_isomorphism(a, &images)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::QuotientRing;

    fn node_point() -> SimpleCollection {
        let a = QuotientRing::parse("Q[x,y]/(x*y)").unwrap();
        let k = FPModule::parse("A/(x, y)", Some(&a)).unwrap();
        SimpleCollection::new(vec![k], Grading::Total).unwrap()
    }

    #[test]
    fn duplicate_module_is_not_simple() {
        let a = QuotientRing::parse("Q[x,y]/(x*y)").unwrap();
        let k = FPModule::parse("A/(x, y)", Some(&a)).unwrap();
        let (simple, hom) = simple_check(&[k.clone(), k], Grading::Total).unwrap();
        assert!(!simple);
        assert_eq!(hom, vec![vec![1, 1], vec![1, 1]]);
    }

    #[test]
    fn rigid_module_is_a_fixed_point() {
        let r = QuotientRing::parse("Q[x]").unwrap();
        let k = FPModule::parse("A/(x)", Some(&r)).unwrap();
        let c = SimpleCollection::new(vec![k], Grading::Total).unwrap();
        let s = DeformationState::initial(&c).unwrap();
        // Ext^1(k, k) = k over Q[x]: one step gives Q[x]/(x^2)
        assert_eq!(s.ext1_dims(), vec![vec![1]]);
        let rep = run(&c, 3).unwrap();
        assert_eq!(rep.dims, vec![1, 2, 3]);
        assert!(!rep.terminated());
        let free = FPModule::free(&r, 1);
        let c = SimpleCollection::new(vec![free], Grading::Degree(0)).unwrap();
        let rep = run(&c, 4).unwrap();
        assert_eq!(rep.outcome, Outcome::Terminated { step: 0 });
        assert_eq!(rep.dims, vec![1]);
        assert!(flatness_filtration_check(rep.final_state()).flat);
    }

    #[test]
    fn node_first_steps_follow_truncations() {
        let rep = run(&node_point(), 3).unwrap();
        assert_eq!(rep.dims, vec![1, 3, 5]);
        for s in &rep.states {
            assert_eq!(s.filtration_length(), s.dim());
            assert!(matches_node_truncation(s).unwrap(), "step {}", s.n);
            assert!(flatness_filtration_check(s).flat);
        }
    }

    #[test]
    fn dropped_layer_breaks_flatness() {
        let rep = run(&node_point(), 2).unwrap();
        let mut s = rep.final_state().clone();
        s.components[0].layers.pop();
        let f = flatness_filtration_check(&s);
        assert!(!f.flat);
        assert_eq!(f.failure, Some((0, 0)));
    }
}
