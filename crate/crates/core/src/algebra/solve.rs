//! Points of zero-dimensional polynomial systems with coordinates in the
//! base field (rationals or a prime field).

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::field::{Field, FieldElement};
use super::poly::{MonomialOrder, PolyRing, Polynomial};
use crate::error::{Error, Result};
use crate::groebner::gb::groebner;
use crate::groebner::vector::Vector;

/// All solutions of `polys = 0` with every coordinate in the base field.
/// The system must have finitely many solutions over the algebraic closure;
/// otherwise an error is returned.
pub fn base_field_points(ring: &Arc<PolyRing>, polys: &[Polynomial]) -> Result<Vec<Vec<FieldElement>>> {
    if matches!(ring.field, Field::GaussianRational) {
        return Err(Error::Invalid("solve over Q(i) by splitting into real and imaginary parts".into()));
    }
    let names: Vec<&str> = ring.vars.iter().map(|s| s.as_str()).collect();
    let lex = PolyRing::with_order(ring.field.clone(), &names, MonomialOrder::Lex);
    let polys: Vec<Polynomial> = polys
        .iter()
        .map(|p| Polynomial::from_terms(&lex, p.terms().map(|(m, c)| (m.clone(), c.clone())).collect()))
        .collect();
    let mut out = Vec::new();
    let mut partial = vec![None; lex.nvars()];
    solve_rec(&lex, polys, lex.nvars(), &mut partial, &mut out)?;
    out.sort_by_key(|pt: &Vec<FieldElement>| pt.iter().map(|c| c.to_string()).collect::<Vec<_>>());
    Ok(out)
}

/// Solves for variables `0..n` (the remaining ones are already substituted).
fn solve_rec(
    ring: &Arc<PolyRing>,
    polys: Vec<Polynomial>,
    n: usize,
    partial: &mut Vec<Option<FieldElement>>,
    out: &mut Vec<Vec<FieldElement>>,
) -> Result<()> {
    let vecs: Vec<Vector> = polys.iter().filter(|p| !p.is_zero()).map(|p| Vector::from_poly(p, 0)).collect();
    let gb = groebner(&vecs, MonomialOrder::Lex);
    let gb: Vec<Polynomial> = gb.into_iter().map(|v| Polynomial::from_vector(ring, v)).collect();
    if gb.iter().any(|g| g.as_constant().is_some_and(|c| !c.is_zero())) {
        return Ok(());
    }
    if n == 0 {
        out.push(partial.iter().map(|c| c.clone().unwrap()).collect());
        return Ok(());
    }
    let v = n - 1;
    // lex with x_0 > x_1 > ...: the elimination ideal in x_{n-1} alone
    let uni = gb.iter().find(|g| {
        g.terms().all(|(m, _)| m.0.iter().enumerate().all(|(i, &e)| e == 0 || i == v))
    });
    let Some(uni) = uni else {
        if gb.is_empty() || gb.iter().all(|g| g.is_zero()) {
            return Err(Error::Invalid("polynomial system has infinitely many solutions".into()));
        }
        return Err(Error::Invalid("polynomial system is not zero-dimensional".into()));
    };
    let coeffs = univariate_coeffs(uni, v);
    for r in roots(&ring.field, &coeffs)? {
        partial[v] = Some(r.clone());
        let sub: Vec<Polynomial> = gb.iter().map(|g| substitute(ring, g, v, &r)).collect();
        solve_rec(ring, sub, v, partial, out)?;
        partial[v] = None;
    }
    Ok(())
}

/// Coefficients `c_0..c_d` of a polynomial in the single variable `v`.
fn univariate_coeffs(p: &Polynomial, v: usize) -> Vec<FieldElement> {
    let d = p.terms().map(|(m, _)| m.0[v] as usize).max().unwrap_or(0);
    let f = &p.ring().field;
    let mut c = vec![f.zero(); d + 1];
    for (m, a) in p.terms() {
        c[m.0[v] as usize] = a.clone();
    }
    c
}

fn substitute(ring: &Arc<PolyRing>, p: &Polynomial, v: usize, val: &FieldElement) -> Polynomial {
    let terms = p
        .terms()
        .map(|(m, c)| {
            let mut e = m.clone();
            let k = e.0[v] as u32;
            e.0[v] = 0;
            (e, c.mul(&val.pow(k)))
        })
        .collect();
    Polynomial::from_terms(ring, terms)
}

fn eval(coeffs: &[FieldElement], x: &FieldElement) -> FieldElement {
    let mut acc = x.field().zero();
    for c in coeffs.iter().rev() {
        acc = acc.mul(x).add(c);
    }
    acc
}

/// Roots in the base field of `sum c_i x^i` (nonzero polynomial).
pub fn roots(field: &Field, coeffs: &[FieldElement]) -> Result<Vec<FieldElement>> {
    let mut coeffs = coeffs.to_vec();
    while coeffs.last().is_some_and(|c| c.is_zero()) {
        coeffs.pop();
    }
    if coeffs.is_empty() {
        return Err(Error::Invalid("zero polynomial has every element as a root".into()));
    }
    match field {
        Field::Prime(_) => Ok(field
            .elements()
            .unwrap()
            .into_iter()
            .filter(|x| eval(&coeffs, x).is_zero())
            .collect()),
        Field::Rational => Ok(rational_roots(&coeffs)),
        Field::GaussianRational => Err(Error::Invalid("root finding over Q(i)".into())),
    }
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut out = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            out.push(d.clone());
            let q = &n / &d;
            if q != d {
                out.push(q);
            }
        }
        d += 1;
    }
    out
}

fn rational_roots(coeffs: &[FieldElement]) -> Vec<FieldElement> {
    let qs: Vec<BigRational> = coeffs.iter().map(|c| c.as_rational().unwrap()).collect();
    let den = qs.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let ints: Vec<BigInt> = qs.iter().map(|q| (q * BigRational::from_integer(den.clone())).to_integer()).collect();
    let mut found = Vec::new();
    // factor out x^k
    let low = ints.iter().position(|c| !c.is_zero()).unwrap();
    if low > 0 {
        found.push(BigRational::zero());
    }
    let ints = &ints[low..];
    if ints.len() > 1 {
        let a0 = &ints[0];
        let an = ints.last().unwrap();
        for p in divisors(a0) {
            for q in divisors(an) {
                for s in [1, -1] {
                    let r = BigRational::new(&p * s, q.clone());
                    let v = ints
                        .iter()
                        .rev()
                        .fold(BigRational::zero(), |acc, c| acc * &r + BigRational::from_integer(c.clone()));
                    if v.is_zero() && !found.contains(&r) {
                        found.push(r);
                    }
                }
            }
        }
    }
    found.sort();
    found.into_iter().map(FieldElement::Rational).collect()
}

/// Whether a rational number is the square of a rational.
pub fn rational_sqrt(q: &BigRational) -> Option<BigRational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    (&n * &n == *q.numer() && &d * &d == *q.denom()).then(|| BigRational::new(n, d))
}

/// Whether `a` is a square in its field (zero counts).
pub fn is_square(a: &FieldElement) -> bool {
    match a {
        FieldElement::Rational(q) => rational_sqrt(q).is_some(),
        FieldElement::Prime { .. } => a
            .field()
            .elements()
            .unwrap()
            .iter()
            .any(|x| &x.mul(x) == a),
        FieldElement::Gaussian(re, im) => {
            // (u + iv)^2 = re + i im  <=>  u^2 - v^2 = re, 2uv = im
            let norm = re * re + im * im;
            let Some(r) = rational_sqrt(&norm) else {
                return false;
            };
            let two = BigRational::from_integer(2.into());
            let u2 = (re + &r) / &two;
            let v2 = (&r - re) / &two;
            rational_sqrt(&u2).is_some() && rational_sqrt(&v2).is_some()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    #[test]
    fn rational_points_of_a_finite_system() {
        let r = PolyRing::new(Field::Rational, &["a", "b"]);
        let eqs = [
            parse_poly(&r, "a^2 - b^2 - a").unwrap(),
            parse_poly(&r, "2*a*b - b").unwrap(),
        ];
        let pts = base_field_points(&r, &eqs).unwrap();
        let shown: Vec<String> = pts.iter().map(|p| format!("{},{}", p[0], p[1])).collect();
        assert_eq!(shown, vec!["0,0", "1,0"]);
    }

    #[test]
    fn prime_field_points() {
        let f5 = Field::prime(5).unwrap();
        let r = PolyRing::new(f5, &["a", "b"]);
        let eqs = [
            parse_poly(&r, "a^2 - b^2 - a").unwrap(),
            parse_poly(&r, "2*a*b - b").unwrap(),
        ];
        assert_eq!(base_field_points(&r, &eqs).unwrap().len(), 4);
    }

    #[test]
    fn squares() {
        let q = |a: i64, b: i64| FieldElement::Rational(BigRational::new(a.into(), b.into()));
        assert!(is_square(&q(9, 4)));
        assert!(!is_square(&q(-1, 1)));
        let g = FieldElement::Gaussian(BigRational::from_integer((-1).into()), BigRational::zero());
        assert!(is_square(&g));
        assert_eq!(rational_roots(&[q(-1, 1), q(0, 1), q(4, 1)]).len(), 2);
    }
}
