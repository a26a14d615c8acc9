//! Finitely presented modules `coker(P: R^r -> R^g)` over a quotient ring.

use std::fmt;
use std::sync::Arc;

use crate::algebra::{Monomial, Polynomial};
use crate::error::{Error, Result};
use crate::parse::{self, Cursor};

use super::gb::{groebner, normal_form};
use super::matrix::Matrix;
use super::ring::QuotientRing;
use super::syzygy::{prune, syzygies};
use super::vector::Vector;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FPModule {
    pub ring: Arc<QuotientRing>,
    pub ngens: usize,
    /// `ngens x r`; columns are relations, entries in normal form.
    pub rels: Matrix,
    /// Degree of each generator, when the module is graded.
    pub degrees: Option<Vec<i64>>,
    pub names: Vec<String>,
    /// Gröbner basis of `im(rels) + I * S^ngens`.
    gb: Vec<Vector>,
}

impl FPModule {
    pub fn new(ring: &Arc<QuotientRing>, ngens: usize, rels: Matrix) -> Result<FPModule> {
        if rels.nrows != ngens {
            return Err(Error::SizeMismatch(format!(
                "relation matrix has {} rows for {ngens} generators",
                rels.nrows
            )));
        }
        if rels.ring != ring.poly {
            return Err(Error::RingMismatch("relation matrix over another ring".into()));
        }
        let rels = rels.reduce(ring);
        let cols: Vec<Vector> = rels.cols.iter().filter(|c| !c.is_zero()).cloned().collect();
        let rels = Matrix::from_columns(&ring.poly, ngens, cols);
        let mut gens = rels.cols.clone();
        gens.extend(ring.ideal_module(ngens));
        let gb = groebner(&gens, ring.order());
        Ok(FPModule {
            ring: ring.clone(),
            ngens,
            rels,
            degrees: None,
            names: (1..=ngens).map(|i| format!("g{i}")).collect(),
            gb,
        })
    }

    /// Attaches generator degrees; fails unless every relation is homogeneous.
    pub fn with_degrees(mut self, degrees: Vec<i64>) -> Result<FPModule> {
        if degrees.len() != self.ngens {
            return Err(Error::SizeMismatch("one degree per generator".into()));
        }
        let w = &self.ring.poly.weights;
        for c in &self.rels.cols {
            if !c.is_homogeneous(w, &degrees) {
                return Err(Error::NotHomogeneous(format!(
                    "relation {} for generator degrees {degrees:?}",
                    fmt_column(&self.rels, c)
                )));
            }
        }
        self.degrees = Some(degrees);
        Ok(self)
    }

    pub fn with_names(mut self, names: Vec<String>) -> FPModule {
        self.names = names;
        self
    }

    pub fn free(ring: &Arc<QuotientRing>, n: usize) -> FPModule {
        let m = FPModule::new(ring, n, Matrix::zero(&ring.poly, n, 0)).expect("free module");
        if ring.is_graded() {
            m.with_degrees(vec![0; n]).expect("free module is graded")
        } else {
            m
        }
    }

    /// `R / (polys)`.
    pub fn cyclic(ring: &Arc<QuotientRing>, polys: &[Polynomial]) -> Result<FPModule> {
        let cols = polys.iter().map(|p| Vector::from_poly(p, 0)).collect();
        let m = FPModule::new(ring, 1, Matrix::from_columns(&ring.poly, 1, cols))?;
        Ok(m.graded_if_possible(vec![0]))
    }

    /// The ideal generated by `polys`, as a module with one generator per
    /// polynomial.
    pub fn ideal(ring: &Arc<QuotientRing>, polys: &[Polynomial]) -> Result<FPModule> {
        let row = Matrix::from_rows(&ring.poly, &[polys.iter().map(|p| ring.nf(p)).collect()])?;
        let syz = syzygies(&row, ring);
        let m = FPModule::new(ring, polys.len(), syz)?;
        let degrees: Option<Vec<i64>> = polys
            .iter()
            .map(|p| p.is_homogeneous().then(|| p.weighted_degree()).flatten())
            .collect();
        Ok(match degrees {
            Some(d) => m.graded_if_possible(d),
            None => m,
        })
    }

    fn graded_if_possible(self, degrees: Vec<i64>) -> FPModule {
        if !self.ring.is_graded() {
            return self;
        }
        let fallback = self.clone();
        self.with_degrees(degrees).unwrap_or(fallback)
    }

    pub fn gb(&self) -> &[Vector] {
        &self.gb
    }

    /// Normal form of an element of `S^ngens` in the module.
    pub fn nf(&self, v: &Vector) -> Vector {
        normal_form(v, &self.gb, self.ring.order())
    }

    pub fn is_zero_element(&self, v: &Vector) -> bool {
        self.nf(v).is_zero()
    }

    pub fn is_graded(&self) -> bool {
        self.degrees.is_some()
    }

    pub fn is_free(&self) -> bool {
        self.rels.ncols() == 0
    }

    /// Generators of `im(rels) + I * S^ngens` (not necessarily a basis).
    pub fn submodule_gens(&self) -> Vec<Vector> {
        self.gb.clone()
    }

    pub fn direct_sum(&self, other: &FPModule) -> Result<FPModule> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch("direct sum over different rings".into()));
        }
        let rels = self.rels.block_diag(&other.rels);
        let mut m = FPModule::new(&self.ring, self.ngens + other.ngens, rels)?;
        let mut names = self.names.clone();
        names.extend(other.names.iter().cloned());
        m.names = names;
        if let (Some(a), Some(b)) = (&self.degrees, &other.degrees) {
            let mut d = a.clone();
            d.extend(b);
            m = m.with_degrees(d)?;
        }
        Ok(m)
    }

    /// The same module with generator degrees shifted by `s` (i.e. `M(-s)`).
    pub fn shift_degrees(&self, s: i64) -> FPModule {
        let mut m = self.clone();
        if let Some(d) = &mut m.degrees {
            for x in d.iter_mut() {
                *x += s;
            }
        }
        m
    }

    /// The same presentation with generators permuted by `perm`
    /// (new generator `k` is old generator `perm[k]`).
    pub fn permute_generators(&self, perm: &[usize]) -> Result<FPModule> {
        let mut inv = vec![0; perm.len()];
        for (k, &p) in perm.iter().enumerate() {
            inv[p] = k;
        }
        let order = self.ring.order();
        let cols = self
            .rels
            .cols
            .iter()
            .map(|c| c.map_components(|i| inv[i], order))
            .collect();
        let mut m = FPModule::new(&self.ring, self.ngens, Matrix::from_columns(&self.ring.poly, self.ngens, cols))?;
        m.names = perm.iter().map(|&p| self.names[p].clone()).collect();
        if let Some(d) = &self.degrees {
            m = m.with_degrees(perm.iter().map(|&p| d[p]).collect())?;
        }
        Ok(m)
    }

    /// Same module with the relation columns reordered.
    pub fn permute_relations(&self, perm: &[usize]) -> Result<FPModule> {
        let rels = self.rels.select_columns(perm);
        let mut m = FPModule::new(&self.ring, self.ngens, rels)?;
        m.names = self.names.clone();
        if let Some(d) = &self.degrees {
            m = m.with_degrees(d.clone())?;
        }
        Ok(m)
    }

    /// Presentation with redundant relations removed.
    pub fn pruned(&self) -> Result<FPModule> {
        let cols = prune(self.rels.cols.clone(), &self.ring, self.ngens, self.degrees.as_deref());
        let mut m = FPModule::new(&self.ring, self.ngens, Matrix::from_columns(&self.ring.poly, self.ngens, cols))?;
        m.names = self.names.clone();
        if let Some(d) = &self.degrees {
            m = m.with_degrees(d.clone())?;
        }
        Ok(m)
    }

    /// Whether `M/mM` vanishes in every component, i.e. the module is zero
    /// near the origin; only used for sanity checks.
    pub fn is_zero(&self) -> bool {
        (0..self.ngens).all(|j| {
            let e = Vector::from_poly(&self.ring.one(), j);
            self.is_zero_element(&e)
        })
    }

    /// Parses the module grammar.
    ///
    /// ```text
    /// module over <ring> generators g1,g2 relations [[p11,p21],[p12,p22]] [degrees [0,0]]
    /// <name>/(p, q)          cyclic module R/(p, q) over `ring`
    /// ideal (p, q)           the ideal (p, q) of `ring`
    /// free <n>               R^n
    /// ```
    ///
    /// Relation lists are columns. `ring` supplies the base ring for the
    /// short forms and must match the `over` clause of the long form.
    pub fn parse(s: &str, ring: Option<&Arc<QuotientRing>>) -> Result<FPModule> {
        let mut c = Cursor::new(s);
        let m = parse_module_at(&mut c, ring)?;
        if !c.at_end() {
            return c.err("unexpected trailing input");
        }
        Ok(m)
    }
}

fn fmt_column(m: &Matrix, c: &Vector) -> String {
    let single = Matrix::from_columns(&m.ring, m.nrows, vec![c.clone()]);
    single.transpose().to_string()
}

fn parse_module_at(c: &mut Cursor, ring: Option<&Arc<QuotientRing>>) -> Result<FPModule> {
    let need_ring = |c: &Cursor| -> Result<Arc<QuotientRing>> {
        match ring {
            Some(r) => Ok(r.clone()),
            None => c.err("this module form needs a base ring"),
        }
    };
    if c.eat_keyword("module") {
        if !c.eat_keyword("over") {
            return c.err("expected `over`");
        }
        let (poly, ideal) = parse::parse_ring_at(c)?;
        let r = QuotientRing::new(&poly, ideal)?;
        if let Some(given) = ring {
            if given.poly.vars != r.poly.vars || given.ideal != r.ideal {
                return c.err(format!("module ring {r} differs from {given}"));
            }
        }
        let r = match ring {
            Some(g) => g.clone(),
            None => r,
        };
        if !c.eat_keyword("generators") {
            return c.err("expected `generators`");
        }
        let mut names = vec![c.ident()?];
        while c.eat(',') {
            names.push(c.ident()?);
        }
        if !c.eat_keyword("relations") {
            return c.err("expected `relations`");
        }
        let at = c.position();
        let cols = parse::parse_poly_matrix_at(c, &r.poly)?;
        let n = names.len();
        let mut vecs = Vec::new();
        for col in &cols {
            if col.len() != n {
                return Err(Error::Parse {
                    pos: at,
                    msg: format!("relation has {} entries for {n} generators", col.len()),
                });
            }
            vecs.push(Vector::from_polys(col, 0));
        }
        let mut m = FPModule::new(&r, n, Matrix::from_columns(&r.poly, n, vecs))?.with_names(names);
        if c.eat_keyword("degrees") {
            c.expect('[')?;
            let mut d = Vec::new();
            loop {
                let v = c.integer()?;
                d.push(i64::try_from(v).map_err(|_| Error::Invalid("degree too large".into()))?);
                if c.eat(']') {
                    break;
                }
                c.expect(',')?;
            }
            m = m.with_degrees(d)?;
        } else if r.is_graded() {
            m = m.clone().with_degrees(vec![0; n]).unwrap_or(m);
        }
        return Ok(m);
    }
    if c.eat_keyword("ideal") {
        let r = need_ring(c)?;
        c.expect('(')?;
        let mut polys = Vec::new();
        loop {
            polys.push(parse::parse_poly_at(c, &r.poly)?);
            if c.eat(')') {
                break;
            }
            c.expect(',')?;
        }
        return FPModule::ideal(&r, &polys);
    }
    if c.eat_keyword("free") {
        let r = need_ring(c)?;
        let n = c.integer()?;
        let n = usize::try_from(n).map_err(|_| Error::Invalid("bad rank".into()))?;
        return Ok(FPModule::free(&r, n));
    }
    let r = need_ring(c)?;
    c.ident()?;
    if !c.eat('/') {
        return Ok(FPModule::free(&r, 1));
    }
    c.expect('(')?;
    let mut polys = Vec::new();
    loop {
        polys.push(parse::parse_poly_at(c, &r.poly)?);
        if c.eat(')') {
            break;
        }
        c.expect(',')?;
    }
    FPModule::cyclic(&r, &polys)
}

impl fmt::Display for FPModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cols: Vec<String> = (0..self.rels.ncols())
            .map(|j| {
                let e: Vec<String> = self.rels.column_entries(j).iter().map(|p| p.to_string()).collect();
                format!("[{}]", e.join(", "))
            })
            .collect();
        write!(
            f,
            "module over {} generators {} relations [{}]",
            self.ring,
            self.names.join(","),
            cols.join(", ")
        )?;
        if let Some(d) = &self.degrees {
            let d: Vec<String> = d.iter().map(|x| x.to_string()).collect();
            write!(f, " degrees [{}]", d.join(","))?;
        }
        Ok(())
    }
}

/// The graded pieces of a graded module: the standard monomials of its
/// Gröbner basis in each component with total degree `d`.
pub fn graded_basis(m: &FPModule, d: i64) -> Vec<(usize, Monomial)> {
    let degs = m.degrees.as_ref().expect("graded module");
    let leads: Vec<(usize, &Monomial)> = m
        .gb()
        .iter()
        .map(|g| {
            let t = g.leading().unwrap();
            (t.comp, &t.mon)
        })
        .collect();
    let mut out = Vec::new();
    for (j, &dj) in degs.iter().enumerate() {
        for mon in Monomial::all_of_degree(&m.ring.poly.weights, d - dj) {
            if !leads.iter().any(|(c, l)| *c == j && l.divides(&mon)) {
                out.push((j, mon));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_long_form() {
        let r = QuotientRing::parse("Q[z,w]/(z^2+z^3+w^2)").unwrap();
        let m = FPModule::parse(
            "module over Q[z,w]/(z^2+z^3+w^2) generators e,t relations [[w,-z],[z^2+z,w]]",
            Some(&r),
        )
        .unwrap();
        assert_eq!(m.ngens, 2);
        assert_eq!(m.rels.ncols(), 2);
        assert!(!m.is_graded());
    }

    #[test]
    fn parse_short_forms() {
        let b = QuotientRing::parse("Q[z,w]/(z*w)").unwrap();
        let mz = FPModule::parse("B/(w)", Some(&b)).unwrap();
        assert_eq!((mz.ngens, mz.rels.ncols()), (1, 1));
        assert_eq!(mz.degrees, Some(vec![0]));
        let i = FPModule::parse("ideal (z, w)", Some(&b)).unwrap();
        assert_eq!(i.ngens, 2);
        assert!(FPModule::parse("B/(q)", Some(&b)).is_err());
        assert!(FPModule::parse("B/(w)", None).is_err());
    }

    #[test]
    fn graded_pieces_of_a_cyclic_module() {
        let r = QuotientRing::parse("Q[x,y]").unwrap();
        let m = FPModule::cyclic(&r, &[r.parse_poly("x^2").unwrap()]).unwrap();
        assert_eq!(graded_basis(&m, 3).len(), 2);
    }
}
