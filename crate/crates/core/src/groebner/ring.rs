//! Quotient rings `S / I` of a polynomial ring by an ideal.

use std::fmt;
use std::sync::Arc;

use crate::algebra::{Field, FieldElement, Monomial, MonomialOrder, PolyRing, Polynomial};
use crate::error::{Error, Result};
use crate::parse;

use super::gb::{groebner, normal_form};
use super::vector::Vector;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuotientRing {
    pub poly: Arc<PolyRing>,
    /// Defining generators as given.
    pub ideal: Vec<Polynomial>,
    /// Reduced Gröbner basis of the ideal, as rank-one vectors.
    gb: Vec<Vector>,
    /// The defining equation when the ideal is principal and nonzero.
    pub hypersurface: Option<Polynomial>,
}

impl QuotientRing {
    pub fn new(poly: &Arc<PolyRing>, ideal: Vec<Polynomial>) -> Result<Arc<QuotientRing>> {
        for p in &ideal {
            if p.ring() != poly {
                return Err(Error::RingMismatch(format!(
                    "ideal generator {p} is not in {}",
                    poly.describe()
                )));
            }
        }
        let ideal: Vec<Polynomial> = ideal.into_iter().filter(|p| !p.is_zero()).collect();
        let vecs: Vec<Vector> = ideal.iter().map(|p| Vector::from_poly(p, 0)).collect();
        let gb = groebner(&vecs, poly.order);
        let hypersurface = (ideal.len() == 1 && gb.len() == 1).then(|| ideal[0].clone());
        Ok(Arc::new(QuotientRing {
            poly: poly.clone(),
            ideal,
            gb,
            hypersurface,
        }))
    }

    /// The polynomial ring itself.
    pub fn free(poly: &Arc<PolyRing>) -> Arc<QuotientRing> {
        QuotientRing::new(poly, Vec::new()).expect("empty ideal")
    }

    /// Parses `Q[x,y]/(x*y)` and similar.
    pub fn parse(s: &str) -> Result<Arc<QuotientRing>> {
        let (poly, ideal) = parse::parse_ring(s)?;
        QuotientRing::new(&poly, ideal)
    }

    pub fn field(&self) -> &Field {
        &self.poly.field
    }

    pub fn nvars(&self) -> usize {
        self.poly.nvars()
    }

    pub fn order(&self) -> MonomialOrder {
        self.poly.order
    }

    pub fn gb(&self) -> &[Vector] {
        &self.gb
    }

    pub fn gb_polys(&self) -> Vec<Polynomial> {
        self.gb
            .iter()
            .map(|v| Polynomial::from_vector(&self.poly, v.clone()))
            .collect()
    }

    pub fn parse_poly(&self, s: &str) -> Result<Polynomial> {
        Ok(self.nf(&parse::parse_poly(&self.poly, s)?))
    }

    pub fn var(&self, name: &str) -> Result<Polynomial> {
        self.poly
            .var_index(name)
            .map(|i| Polynomial::var(&self.poly, i))
            .ok_or_else(|| Error::Invalid(format!("no variable `{name}`")))
    }

    pub fn nf(&self, p: &Polynomial) -> Polynomial {
        Polynomial::from_vector(&self.poly, normal_form(&p.vec, &self.gb, self.order()))
    }

    /// Normal form of a vector modulo `I * S^n` (component-wise).
    pub fn nf_vector(&self, v: &Vector) -> Vector {
        normal_form(v, &self.module_gens_single(v), self.order())
    }

    fn module_gens_single(&self, v: &Vector) -> Vec<Vector> {
        let n = v.max_comp().map_or(0, |c| c + 1);
        self.ideal_module(n)
    }

    /// Gröbner basis of `I * S^n`: the ideal basis copied into every component.
    pub fn ideal_module(&self, n: usize) -> Vec<Vector> {
        let mut out = Vec::with_capacity(n * self.gb.len());
        for c in 0..n {
            for g in &self.gb {
                out.push(g.mul_term(&Monomial::one(self.nvars()), &self.field().one(), c));
            }
        }
        out
    }

    pub fn is_zero_ring(&self) -> bool {
        self.gb.iter().any(|g| g.leading().unwrap().mon.is_one())
    }

    /// Whether the defining ideal is homogeneous for the variable weights.
    pub fn is_graded(&self) -> bool {
        self.ideal.iter().all(|p| p.is_homogeneous())
    }

    /// Krull dimension, read off the leading-term ideal.
    pub fn krull_dim(&self) -> usize {
        let n = self.nvars();
        let leads: Vec<&Monomial> = self.gb.iter().map(|g| &g.leading().unwrap().mon).collect();
        let mut best = 0;
        for mask in 0u32..(1 << n) {
            let size = mask.count_ones() as usize;
            if size <= best {
                continue;
            }
            let independent = leads.iter().all(|m| {
                m.0.iter()
                    .enumerate()
                    .any(|(i, &e)| e > 0 && mask & (1 << i) == 0)
            });
            if independent {
                best = size;
            }
        }
        best
    }

    /// Monomials of the given weighted degree that are not in the leading-term
    /// ideal: a basis of the degree-`d` piece of a graded quotient.
    pub fn standard_monomials(&self, d: i64) -> Vec<Monomial> {
        Monomial::all_of_degree(&self.poly.weights, d)
            .into_iter()
            .filter(|m| !self.gb.iter().any(|g| g.leading().unwrap().mon.divides(m)))
            .collect()
    }

    /// Same presentation over a different coefficient field.
    pub fn with_field(&self, field: Field) -> Result<Arc<QuotientRing>> {
        let poly = self.poly.with_field(field);
        let ideal = self
            .ideal
            .iter()
            .map(|p| p.change_field(&poly))
            .collect::<Result<Vec<_>>>()?;
        QuotientRing::new(&poly, ideal)
    }

    pub fn constant(&self, c: FieldElement) -> Polynomial {
        Polynomial::constant(&self.poly, c)
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial::zero(&self.poly)
    }

    pub fn one(&self) -> Polynomial {
        Polynomial::one(&self.poly)
    }
}

impl fmt::Display for QuotientRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.poly.describe())?;
        if !self.ideal.is_empty() {
            let gens: Vec<String> = self.ideal.iter().map(|p| p.to_string()).collect();
            write!(f, "/({})", gens.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cone_ring_basics() {
        let r = QuotientRing::parse("Q[x,y,z,w]/(x*y+z*w)").unwrap();
        assert!(r.hypersurface.is_some());
        assert_eq!(r.krull_dim(), 3);
        assert!(r.is_graded());
        let p = r.parse_poly("x*y").unwrap();
        assert_eq!(p.to_string(), "-z*w");
        // degree-2 piece of the cone ring: 10 monomials minus one relation
        assert_eq!(r.standard_monomials(2).len(), 9);
    }

    #[test]
    fn dual_numbers() {
        let a = QuotientRing::parse("Q[z]/(z^2)").unwrap();
        assert_eq!(a.krull_dim(), 0);
        assert!(a.parse_poly("z^3 + z").unwrap().to_string() == "z");
    }

    #[test]
    fn non_graded_ring() {
        let c = QuotientRing::parse("Q[z,w]/(z^2+z^3+w^2)").unwrap();
        assert!(!c.is_graded());
        assert_eq!(c.krull_dim(), 1);
    }
}
