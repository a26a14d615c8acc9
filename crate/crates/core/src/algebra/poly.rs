//! Multivariate polynomials over an exact field.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use smallvec::SmallVec;

use super::field::{Field, FieldElement};
use crate::error::{Error, Result};
use crate::groebner::vector::{VTerm, Vector};

pub type Exponents = SmallVec<[u16; 6]>;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Monomial(pub Exponents);

impl Monomial {
    pub fn one(nvars: usize) -> Monomial {
        Monomial(SmallVec::from_elem(0, nvars))
    }

    pub fn var(nvars: usize, i: usize) -> Monomial {
        let mut m = Monomial::one(nvars);
        m.0[i] = 1;
        m
    }

    pub fn from_exponents(e: &[u16]) -> Monomial {
        Monomial(SmallVec::from_slice(e))
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn weighted_degree(&self, weights: &[i64]) -> i64 {
        self.0
            .iter()
            .zip(weights)
            .map(|(&e, &w)| e as i64 * w)
            .sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| a + b).collect())
    }

    /// `self / other`, assuming `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| a - b).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// All monomials in `nvars` variables of the given weighted degree
    /// (weights must be positive).
    pub fn all_of_degree(weights: &[i64], degree: i64) -> Vec<Monomial> {
        let mut out = Vec::new();
        if degree < 0 {
            return out;
        }
        let n = weights.len();
        let mut cur = Monomial::one(n);
        fn rec(i: usize, left: i64, w: &[i64], cur: &mut Monomial, out: &mut Vec<Monomial>) {
            if i == w.len() {
                if left == 0 {
                    out.push(cur.clone());
                }
                return;
            }
            let mut e = 0;
            while e * w[i] <= left {
                cur.0[i] = e as u16;
                rec(i + 1, left - e * w[i], w, cur, out);
                e += 1;
            }
            cur.0[i] = 0;
        }
        if n == 0 {
            if degree == 0 {
                out.push(cur);
            }
            return out;
        }
        rec(0, degree, weights, &mut cur, &mut out);
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    #[default]
    GrevLex,
    Lex,
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => a.0.cmp(&b.0),
            MonomialOrder::GrevLex => {
                let (da, db) = (a.degree(), b.degree());
                if da != db {
                    return da.cmp(&db);
                }
                for (x, y) in a.0.iter().zip(b.0.iter()).rev() {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }
        }
    }
}

/// Ambient polynomial ring `field[vars]` with a monomial order and a grading.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyRing {
    pub field: Field,
    pub vars: Vec<String>,
    pub order: MonomialOrder,
    /// Positive weight per variable; all ones unless set explicitly.
    pub weights: Vec<i64>,
}

impl PolyRing {
    pub fn new(field: Field, vars: &[&str]) -> Arc<PolyRing> {
        Self::with_order(field, vars, MonomialOrder::GrevLex)
    }

    pub fn with_order(field: Field, vars: &[&str], order: MonomialOrder) -> Arc<PolyRing> {
        Arc::new(PolyRing {
            field,
            vars: vars.iter().map(|s| s.to_string()).collect(),
            order,
            weights: vec![1; vars.len()],
        })
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Same ring over a different coefficient field.
    pub fn with_field(&self, field: Field) -> Arc<PolyRing> {
        Arc::new(PolyRing {
            field,
            ..self.clone()
        })
    }

    /// Appends fresh variables (weight 1).
    pub fn extend(&self, names: &[&str]) -> Result<Arc<PolyRing>> {
        let mut r = self.clone();
        for n in names {
            if r.var_index(n).is_some() {
                return Err(Error::VariableCollision(n.to_string()));
            }
            r.vars.push(n.to_string());
            r.weights.push(1);
        }
        Ok(Arc::new(r))
    }

    pub fn describe(&self) -> String {
        format!("{}[{}]", self.field, self.vars.join(","))
    }

    pub(crate) fn fmt_monomial(&self, m: &Monomial) -> String {
        let parts: Vec<String> = m
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    self.vars[i].clone()
                } else {
                    format!("{}^{}", self.vars[i], e)
                }
            })
            .collect();
        parts.join("*")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    ring: Arc<PolyRing>,
    /// Single-component vector; terms sorted descending, no zero coefficients.
    pub(crate) vec: Vector,
}

impl Polynomial {
    pub fn zero(ring: &Arc<PolyRing>) -> Polynomial {
        Polynomial {
            ring: ring.clone(),
            vec: Vector::zero(),
        }
    }

    pub fn constant(ring: &Arc<PolyRing>, c: FieldElement) -> Polynomial {
        let mut p = Polynomial::zero(ring);
        if !c.is_zero() {
            p.vec = Vector::from_terms_unchecked(vec![VTerm {
                comp: 0,
                mon: Monomial::one(ring.nvars()),
                coeff: c,
            }]);
        }
        p
    }

    pub fn one(ring: &Arc<PolyRing>) -> Polynomial {
        Polynomial::constant(ring, ring.field.one())
    }

    pub fn var(ring: &Arc<PolyRing>, i: usize) -> Polynomial {
        Polynomial::monomial(ring, Monomial::var(ring.nvars(), i), ring.field.one())
    }

    pub fn monomial(ring: &Arc<PolyRing>, mon: Monomial, c: FieldElement) -> Polynomial {
        let mut p = Polynomial::zero(ring);
        if !c.is_zero() {
            p.vec = Vector::from_terms_unchecked(vec![VTerm { comp: 0, mon, coeff: c }]);
        }
        p
    }

    pub fn from_terms(ring: &Arc<PolyRing>, terms: Vec<(Monomial, FieldElement)>) -> Polynomial {
        let v = Vector::from_terms(
            terms
                .into_iter()
                .map(|(mon, coeff)| VTerm { comp: 0, mon, coeff })
                .collect(),
            ring.order,
        );
        Polynomial {
            ring: ring.clone(),
            vec: v,
        }
    }

    pub(crate) fn from_vector(ring: &Arc<PolyRing>, vec: Vector) -> Polynomial {
        debug_assert!(vec.terms().iter().all(|t| t.comp == 0));
        Polynomial {
            ring: ring.clone(),
            vec,
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.vec.is_zero()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &FieldElement)> {
        self.vec.terms().iter().map(|t| (&t.mon, &t.coeff))
    }

    pub fn num_terms(&self) -> usize {
        self.vec.len()
    }

    pub fn leading(&self) -> Option<(&Monomial, &FieldElement)> {
        self.vec.terms().first().map(|t| (&t.mon, &t.coeff))
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms().map(|(m, _)| m.degree()).max()
    }

    pub fn weighted_degree(&self) -> Option<i64> {
        self.terms()
            .map(|(m, _)| m.weighted_degree(&self.ring.weights))
            .max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms().map(|(m, _)| m.weighted_degree(&self.ring.weights));
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    /// The constant term, if the polynomial is constant.
    pub fn as_constant(&self) -> Option<FieldElement> {
        match self.vec.len() {
            0 => Some(self.ring.field.zero()),
            1 if self.vec.terms()[0].mon.is_one() => Some(self.vec.terms()[0].coeff.clone()),
            _ => None,
        }
    }

    fn check(&self, other: &Polynomial) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch(format!(
                "{} vs {}",
                self.ring.describe(),
                other.ring.describe()
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        Ok(self.add(other))
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        Ok(self.mul(other))
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        Polynomial::from_vector(&self.ring, self.vec.add(&other.vec, self.ring.order))
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        Polynomial::from_vector(&self.ring, self.vec.sub(&other.vec, self.ring.order))
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial::from_vector(&self.ring, self.vec.neg())
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        Polynomial::from_vector(&self.ring, self.vec.mul_poly(other, self.ring.order))
    }

    pub fn scale(&self, c: &FieldElement) -> Polynomial {
        Polynomial::from_vector(&self.ring, self.vec.scale(c))
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exact division by `d`; `None` if the division leaves a remainder.
    pub fn exact_div(&self, d: &Polynomial) -> Option<Polynomial> {
        let (lm, lc) = d.leading()?;
        let lc_inv = lc.inv().ok()?;
        let order = self.ring.order;
        let mut rem = self.vec.clone();
        let mut quot = Vec::new();
        while let Some(t) = rem.terms().first() {
            if !lm.divides(&t.mon) {
                return None;
            }
            let m = t.mon.div(lm);
            let c = t.coeff.mul(&lc_inv);
            rem = rem.sub_scaled_shifted(&d.vec, &m, &c, 0, order);
            quot.push((m, c));
        }
        Some(Polynomial::from_terms(&self.ring, quot))
    }

    /// Substitutes into a ring with the same variables listed first.
    pub fn embed(&self, target: &Arc<PolyRing>) -> Polynomial {
        let n = target.nvars();
        let terms = self
            .terms()
            .map(|(m, c)| {
                let mut e = Monomial::one(n);
                e.0[..m.nvars()].copy_from_slice(&m.0);
                (e, c.clone())
            })
            .collect();
        Polynomial::from_terms(target, terms)
    }

    /// Maps coefficients into another field (e.g. `Q -> F_p` or `Q -> Q(i)`).
    pub fn change_field(&self, target: &Arc<PolyRing>) -> Result<Polynomial> {
        let mut terms = Vec::with_capacity(self.num_terms());
        for (m, c) in self.terms() {
            terms.push((m.clone(), convert_coeff(c, &target.field)?));
        }
        Ok(Polynomial::from_terms(target, terms))
    }
}

pub(crate) fn convert_coeff(c: &FieldElement, to: &Field) -> Result<FieldElement> {
    if &c.field() == to {
        return Ok(c.clone());
    }
    match (c, to) {
        (FieldElement::Rational(q), _) => to.from_rational(q),
        (FieldElement::Gaussian(a, b), _) if num_traits::Zero::is_zero(b) => to.from_rational(a),
        _ => Err(Error::Invalid(format!(
            "cannot map {c} from {} into {to}",
            c.field()
        ))),
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (m, c) in self.terms() {
            let neg = c.is_negative_display();
            let abs = if neg { c.neg() } else { c.clone() };
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let ms = self.ring.fmt_monomial(m);
            let cs = if abs.is_compound() {
                format!("({abs})")
            } else {
                abs.to_string()
            };
            if ms.is_empty() {
                f.write_str(&cs)?;
            } else if abs.is_one() {
                f.write_str(&ms)?;
            } else {
                write!(f, "{cs}*{ms}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xyzw() -> Arc<PolyRing> {
        PolyRing::new(Field::Rational, &["x", "y", "z", "w"])
    }

    #[test]
    fn grevlex_order() {
        let o = MonomialOrder::GrevLex;
        let m = |e: &[u16]| Monomial::from_exponents(e);
        // x*y > z^2 in grevlex on (x,y,z)
        assert_eq!(o.cmp(&m(&[1, 1, 0]), &m(&[0, 0, 2])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[2, 0, 0]), &m(&[1, 1, 0])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0, 0, 3]), &m(&[2, 0, 0])), Ordering::Greater);
    }

    #[test]
    fn difference_of_squares() {
        let r = xyzw();
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let p = x.add(&y).mul(&x.sub(&y));
        assert_eq!(p.to_string(), "x^2 - y^2");
    }

    #[test]
    fn cancellation() {
        let r = xyzw();
        let xy = Polynomial::var(&r, 0).mul(&Polynomial::var(&r, 1));
        let zw = Polynomial::var(&r, 2).mul(&Polynomial::var(&r, 3));
        assert_eq!(xy.add(&zw).add(&zw.neg()), xy);
    }

    #[test]
    fn mod_five_product() {
        let f5 = Field::prime(5).unwrap();
        let r = PolyRing::new(f5.clone(), &["x", "y"]);
        let x = Polynomial::var(&r, 0);
        let p = x.scale(&f5.from_i64(2)).mul(&x.scale(&f5.from_i64(3)));
        assert_eq!(p.to_string(), "x^2");
    }

    #[test]
    fn ring_mismatch_is_rejected() {
        let a = Polynomial::var(&xyzw(), 0);
        let b = Polynomial::var(&PolyRing::new(Field::Rational, &["x", "y"]), 0);
        assert!(matches!(a.try_add(&b), Err(Error::RingMismatch(_))));
    }

    #[test]
    fn exact_division() {
        let r = xyzw();
        let x = Polynomial::var(&r, 0);
        let z = Polynomial::var(&r, 2);
        let p = x.mul(&x).sub(&z.mul(&z));
        let q = p.exact_div(&x.add(&z)).unwrap();
        assert_eq!(q, x.sub(&z));
        assert!(p.exact_div(&x).is_none());
    }

    #[test]
    fn degree_enumeration() {
        assert_eq!(Monomial::all_of_degree(&[1, 1, 1], 2).len(), 6);
        assert_eq!(Monomial::all_of_degree(&[1, 1], 0).len(), 1);
    }
}
