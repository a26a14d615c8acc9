//! Sparse vectors in a free module `S^n` over a polynomial ring.
//!
//! Terms are ordered position-over-term: a smaller component index always
//! dominates, ties are broken by the monomial order. With this order a
//! Gröbner basis eliminates the leading components first, which is what the
//! kernel computations rely on.

use std::cmp::Ordering;

use crate::algebra::field::FieldElement;
use crate::algebra::poly::{Monomial, MonomialOrder, Polynomial};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VTerm {
    pub comp: usize,
    pub mon: Monomial,
    pub coeff: FieldElement,
}

pub fn cmp_terms(a: (usize, &Monomial), b: (usize, &Monomial), order: MonomialOrder) -> Ordering {
    if a.0 != b.0 {
        return b.0.cmp(&a.0);
    }
    order.cmp(a.1, b.1)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Vector {
    terms: Vec<VTerm>,
}

impl Vector {
    pub fn zero() -> Vector {
        Vector { terms: Vec::new() }
    }

    /// Sorts, combines like terms and drops zeros.
    pub fn from_terms(mut terms: Vec<VTerm>, order: MonomialOrder) -> Vector {
        terms.sort_by(|a, b| cmp_terms((b.comp, &b.mon), (a.comp, &a.mon), order));
        let mut out: Vec<VTerm> = Vec::with_capacity(terms.len());
        for t in terms {
            if let Some(last) = out.last_mut() {
                if last.comp == t.comp && last.mon == t.mon {
                    last.coeff = last.coeff.add(&t.coeff);
                    continue;
                }
            }
            out.push(t);
        }
        out.retain(|t| !t.coeff.is_zero());
        Vector { terms: out }
    }

    pub(crate) fn from_terms_unchecked(terms: Vec<VTerm>) -> Vector {
        Vector { terms }
    }

    /// `p * e_comp`.
    pub fn from_poly(p: &Polynomial, comp: usize) -> Vector {
        Vector {
            terms: p
                .vec
                .terms
                .iter()
                .map(|t| VTerm {
                    comp,
                    mon: t.mon.clone(),
                    coeff: t.coeff.clone(),
                })
                .collect(),
        }
    }

    /// Column vector `sum_i polys[i] * e_{offset + i}`.
    pub fn from_polys(polys: &[Polynomial], offset: usize) -> Vector {
        let mut terms = Vec::new();
        for (i, p) in polys.iter().enumerate() {
            for t in &p.vec.terms {
                terms.push(VTerm {
                    comp: offset + i,
                    mon: t.mon.clone(),
                    coeff: t.coeff.clone(),
                });
            }
        }
        Vector { terms }
    }

    pub fn terms(&self) -> &[VTerm] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<&VTerm> {
        self.terms.first()
    }

    /// Largest component index carrying a term.
    pub fn max_comp(&self) -> Option<usize> {
        self.terms.iter().map(|t| t.comp).max()
    }

    /// Entry `comp` as a list of terms (still in descending order).
    pub fn component_terms(&self, comp: usize) -> impl Iterator<Item = &VTerm> {
        self.terms.iter().filter(move |t| t.comp == comp)
    }

    fn merge(&self, other: &Vector, scale: Option<&FieldElement>, order: MonomialOrder) -> Vector {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let sc = |c: &FieldElement| match scale {
            Some(s) => c.mul(s),
            None => c.clone(),
        };
        while i < self.terms.len() && j < other.terms.len() {
            let a = &self.terms[i];
            let b = &other.terms[j];
            match cmp_terms((a.comp, &a.mon), (b.comp, &b.mon), order) {
                Ordering::Greater => {
                    out.push(a.clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = sc(&b.coeff);
                    if !c.is_zero() {
                        out.push(VTerm {
                            comp: b.comp,
                            mon: b.mon.clone(),
                            coeff: c,
                        });
                    }
                    j += 1;
                }
                Ordering::Equal => {
                    let c = a.coeff.add(&sc(&b.coeff));
                    if !c.is_zero() {
                        out.push(VTerm {
                            comp: a.comp,
                            mon: a.mon.clone(),
                            coeff: c,
                        });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        for b in &other.terms[j..] {
            let c = sc(&b.coeff);
            if !c.is_zero() {
                out.push(VTerm {
                    comp: b.comp,
                    mon: b.mon.clone(),
                    coeff: c,
                });
            }
        }
        Vector { terms: out }
    }

    pub fn add(&self, other: &Vector, order: MonomialOrder) -> Vector {
        self.merge(other, None, order)
    }

    pub fn sub(&self, other: &Vector, order: MonomialOrder) -> Vector {
        match other.terms.first() {
            None => self.clone(),
            Some(t) => self.merge(other, Some(&t.coeff.field().from_i64(-1)), order),
        }
    }

    /// `self + c * other`.
    pub fn add_scaled(&self, other: &Vector, c: &FieldElement, order: MonomialOrder) -> Vector {
        if c.is_zero() {
            return self.clone();
        }
        self.merge(other, Some(c), order)
    }

    pub fn neg(&self) -> Vector {
        Vector {
            terms: self
                .terms
                .iter()
                .map(|t| VTerm {
                    comp: t.comp,
                    mon: t.mon.clone(),
                    coeff: t.coeff.neg(),
                })
                .collect(),
        }
    }

    pub fn scale(&self, c: &FieldElement) -> Vector {
        if c.is_zero() {
            return Vector::zero();
        }
        Vector {
            terms: self
                .terms
                .iter()
                .map(|t| VTerm {
                    comp: t.comp,
                    mon: t.mon.clone(),
                    coeff: t.coeff.mul(c),
                })
                .collect(),
        }
    }

    /// `c * mon * self` with every component index shifted by `offset`.
    /// Multiplying by a monomial preserves the term order.
    pub fn mul_term(&self, mon: &Monomial, c: &FieldElement, offset: usize) -> Vector {
        if c.is_zero() {
            return Vector::zero();
        }
        Vector {
            terms: self
                .terms
                .iter()
                .map(|t| VTerm {
                    comp: t.comp + offset,
                    mon: t.mon.mul(mon),
                    coeff: t.coeff.mul(c),
                })
                .collect(),
        }
    }

    /// `self - c * mon * (other shifted by offset)`.
    pub fn sub_scaled_shifted(
        &self,
        other: &Vector,
        mon: &Monomial,
        c: &FieldElement,
        offset: usize,
        order: MonomialOrder,
    ) -> Vector {
        let shifted = other.mul_term(mon, &c.neg(), offset);
        self.add(&shifted, order)
    }

    pub fn mul_poly(&self, p: &Polynomial, order: MonomialOrder) -> Vector {
        let mut acc = Vector::zero();
        for t in &p.vec.terms {
            acc = acc.add(&self.mul_term(&t.mon, &t.coeff, 0), order);
        }
        acc
    }

    /// Reindexes components through `f`; the map must be injective on the
    /// components in use. Re-sorts the terms.
    pub fn map_components(&self, f: impl Fn(usize) -> usize, order: MonomialOrder) -> Vector {
        Vector::from_terms(
            self.terms
                .iter()
                .map(|t| VTerm {
                    comp: f(t.comp),
                    mon: t.mon.clone(),
                    coeff: t.coeff.clone(),
                })
                .collect(),
            order,
        )
    }

    /// Keeps only the components in `lo..hi`, renumbered from zero.
    pub fn slice(&self, lo: usize, hi: usize) -> Vector {
        Vector {
            terms: self
                .terms
                .iter()
                .filter(|t| t.comp >= lo && t.comp < hi)
                .map(|t| VTerm {
                    comp: t.comp - lo,
                    mon: t.mon.clone(),
                    coeff: t.coeff.clone(),
                })
                .collect(),
        }
    }

    /// Makes the leading coefficient one.
    pub fn monic(&self) -> Vector {
        match self.terms.first() {
            None => Vector::zero(),
            Some(t) if t.coeff.is_one() => self.clone(),
            Some(t) => self.scale(&t.coeff.inv().expect("nonzero leading coefficient")),
        }
    }

    /// Weighted degree of the vector for a grading with `shifts[comp]`
    /// attached to each basis vector; `None` for the zero vector.
    pub fn degree(&self, weights: &[i64], shifts: &[i64]) -> Option<i64> {
        self.terms
            .first()
            .map(|t| t.mon.weighted_degree(weights) + shifts[t.comp])
    }

    pub fn is_homogeneous(&self, weights: &[i64], shifts: &[i64]) -> bool {
        let mut it = self
            .terms
            .iter()
            .map(|t| t.mon.weighted_degree(weights) + shifts[t.comp]);
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }
}
