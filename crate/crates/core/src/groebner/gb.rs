//! Buchberger's algorithm for submodules of `S^n`; ideals are the rank-one case.

use std::collections::{BTreeSet, HashMap, HashSet};

use crate::algebra::poly::{Monomial, MonomialOrder};

use super::vector::Vector;

/// Full reduction of `v` modulo `basis` (every term of the result is
/// irreducible).
pub fn normal_form(v: &Vector, basis: &[Vector], order: MonomialOrder) -> Vector {
    if basis.is_empty() || v.is_zero() {
        return v.clone();
    }
    let index = LeadIndex::new(basis);
    index.reduce(v, basis, order)
}

/// Divisor lookup grouped by leading component.
pub(crate) struct LeadIndex {
    by_comp: HashMap<usize, Vec<usize>>,
}

impl LeadIndex {
    pub(crate) fn new(basis: &[Vector]) -> LeadIndex {
        let mut by_comp: HashMap<usize, Vec<usize>> = HashMap::new();
        for (i, g) in basis.iter().enumerate() {
            if let Some(t) = g.leading() {
                by_comp.entry(t.comp).or_default().push(i);
            }
        }
        LeadIndex { by_comp }
    }

    fn push(&mut self, basis: &[Vector], i: usize) {
        let t = basis[i].leading().expect("nonzero basis element");
        self.by_comp.entry(t.comp).or_default().push(i);
    }

    fn divisor(&self, basis: &[Vector], comp: usize, mon: &Monomial) -> Option<usize> {
        self.by_comp.get(&comp)?.iter().copied().find(|&i| {
            basis[i]
                .leading()
                .is_some_and(|t| t.mon.divides(mon))
        })
    }

    pub(crate) fn reduce(&self, v: &Vector, basis: &[Vector], order: MonomialOrder) -> Vector {
        let mut rem = v.clone();
        let mut out = Vec::new();
        while let Some(t) = rem.leading().cloned() {
            match self.divisor(basis, t.comp, &t.mon) {
                Some(i) => {
                    let g = &basis[i];
                    let lt = g.leading().unwrap();
                    let c = t.coeff.div(&lt.coeff).expect("nonzero leading coefficient");
                    let m = t.mon.div(&lt.mon);
                    rem = rem.sub_scaled_shifted(g, &m, &c, 0, order);
                }
                None => {
                    out.push(t);
                    rem = Vector::from_terms_unchecked(rem.terms()[1..].to_vec());
                }
            }
        }
        Vector::from_terms_unchecked(out)
    }

    /// Reduces only while the leading term is reducible.
    fn top_reduce(&self, v: &Vector, basis: &[Vector], order: MonomialOrder) -> Vector {
        let mut rem = v.clone();
        while let Some(t) = rem.leading().cloned() {
            let Some(i) = self.divisor(basis, t.comp, &t.mon) else {
                break;
            };
            let g = &basis[i];
            let lt = g.leading().unwrap();
            let c = t.coeff.div(&lt.coeff).expect("nonzero leading coefficient");
            rem = rem.sub_scaled_shifted(g, &t.mon.div(&lt.mon), &c, 0, order);
        }
        rem
    }
}

/// Whether every term lives in the leading component.
fn single_component(v: &Vector) -> bool {
    match v.leading() {
        None => true,
        Some(l) => v.terms().iter().all(|t| t.comp == l.comp),
    }
}

fn s_vector(f: &Vector, g: &Vector, order: MonomialOrder) -> Vector {
    let lf = f.leading().unwrap();
    let lg = g.leading().unwrap();
    let l = lf.mon.lcm(&lg.mon);
    let a = f.mul_term(&l.div(&lf.mon), &lf.coeff.inv().unwrap(), 0);
    let b = g.mul_term(&l.div(&lg.mon), &lg.coeff.inv().unwrap(), 0);
    a.sub(&b, order)
}

/// Reduced Gröbner basis of the submodule generated by `gens`, sorted by
/// descending leading term. Every element is monic. The result does not
/// depend on the order of `gens`.
pub fn groebner(gens: &[Vector], order: MonomialOrder) -> Vec<Vector> {
    let mut basis: Vec<Vector> = Vec::new();
    let mut index = LeadIndex::new(&basis);
    let mut pending: BTreeSet<(u32, usize, usize)> = BTreeSet::new();
    let mut pending_set: HashSet<(usize, usize)> = HashSet::new();

    let add = |v: Vector,
                   basis: &mut Vec<Vector>,
                   index: &mut LeadIndex,
                   pending: &mut BTreeSet<(u32, usize, usize)>,
                   pending_set: &mut HashSet<(usize, usize)>| {
        let v = v.monic();
        let j = basis.len();
        let lj = v.leading().unwrap().clone();
        basis.push(v);
        index.push(basis, j);
        for i in 0..j {
            let li = basis[i].leading().unwrap();
            if li.comp != lj.comp {
                continue;
            }
            let deg = li.mon.lcm(&lj.mon).degree();
            pending.insert((deg, j, i));
            pending_set.insert((i, j));
        }
    };

    let mut sorted: Vec<Vector> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    sorted.sort_by(|a, b| {
        let (la, lb) = (a.leading().unwrap(), b.leading().unwrap());
        super::vector::cmp_terms((la.comp, &la.mon), (lb.comp, &lb.mon), order)
    });
    for g in sorted {
        let r = index.reduce(&g, &basis, order);
        if !r.is_zero() {
            add(r, &mut basis, &mut index, &mut pending, &mut pending_set);
        }
    }

    while let Some((_, j, i)) = pending.pop_first() {
        pending_set.remove(&(i, j));
        let (fi, fj) = (&basis[i], &basis[j]);
        let (li, lj) = (fi.leading().unwrap(), fj.leading().unwrap());
        if li.mon.coprime(&lj.mon) && single_component(fi) && single_component(fj) {
            continue;
        }
        let l = li.mon.lcm(&lj.mon);
        let chain = (0..basis.len()).any(|k| {
            if k == i || k == j {
                return false;
            }
            let lk = basis[k].leading().unwrap();
            lk.comp == li.comp
                && lk.mon.divides(&l)
                && !pending_set.contains(&(i.min(k), i.max(k)))
                && !pending_set.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let s = s_vector(fi, fj, order);
        let r = index.top_reduce(&s, &basis, order);
        if !r.is_zero() {
            let r = index.reduce(&r, &basis, order);
            add(r, &mut basis, &mut index, &mut pending, &mut pending_set);
        }
    }
    interreduce(basis, order)
}

/// Turns a Gröbner basis into the reduced one.
fn interreduce(basis: Vec<Vector>, order: MonomialOrder) -> Vec<Vector> {
    let mut keep: Vec<Vector> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let lg = g.leading().unwrap();
        let redundant = basis.iter().enumerate().any(|(k, h)| {
            if k == i {
                return false;
            }
            let lh = h.leading().unwrap();
            lh.comp == lg.comp && lh.mon.divides(&lg.mon) && (lh.mon != lg.mon || k < i)
        });
        if !redundant {
            keep.push(g.clone());
        }
    }
    let mut out = Vec::with_capacity(keep.len());
    for i in 0..keep.len() {
        let others: Vec<Vector> = keep
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != i)
            .map(|(_, v)| v.clone())
            .collect();
        out.push(normal_form(&keep[i], &others, order).monic());
    }
    out.sort_by(|a, b| {
        let (la, lb) = (a.leading().unwrap(), b.leading().unwrap());
        super::vector::cmp_terms((lb.comp, &lb.mon), (la.comp, &la.mon), order)
    });
    out
}

/// Whether `v` lies in the module with Gröbner basis `gb`.
pub fn is_member(v: &Vector, gb: &[Vector], order: MonomialOrder) -> bool {
    normal_form(v, gb, order).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::Field;
    use crate::algebra::poly::{PolyRing, Polynomial};

    fn xy() -> std::sync::Arc<PolyRing> {
        PolyRing::new(Field::Rational, &["x", "y"])
    }

    #[test]
    fn two_generator_example() {
        let r = xy();
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let gens = vec![
            Vector::from_poly(&x.mul(&x), 0),
            Vector::from_poly(&x.mul(&y).add(&y.mul(&y)), 0),
        ];
        let gb = groebner(&gens, r.order);
        let polys: Vec<String> = gb
            .iter()
            .map(|v| Polynomial::from_vector(&r, v.clone()).to_string())
            .collect();
        assert_eq!(polys, vec!["y^3", "x^2", "x*y + y^2"]);
    }

    #[test]
    fn input_order_does_not_matter() {
        let r = xy();
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let a = Vector::from_poly(&x.mul(&x).sub(&y), 0);
        let b = Vector::from_poly(&x.mul(&y).sub(&x), 0);
        let g1 = groebner(&[a.clone(), b.clone()], r.order);
        let g2 = groebner(&[b, a], r.order);
        assert_eq!(g1, g2);
    }

    #[test]
    fn module_elimination() {
        // kernel of (x, y): R^2 -> R via GB in R^{1+2}
        let r = xy();
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let one = Polynomial::one(&r);
        let g1 = Vector::from_polys(&[x.clone(), one.clone(), Polynomial::zero(&r)], 0);
        let g2 = Vector::from_polys(&[y.clone(), Polynomial::zero(&r), one], 0);
        let gb = groebner(&[g1, g2], r.order);
        let syz: Vec<&Vector> = gb.iter().filter(|v| v.leading().unwrap().comp > 0).collect();
        assert_eq!(syz.len(), 1);
        let expect = Vector::from_polys(&[Polynomial::zero(&r), y, x.neg()], 0).monic();
        assert_eq!(syz[0].monic(), expect);
    }
}
