//! Kernels and preimages by elimination in position-over-term order.

use crate::algebra::Monomial;

use super::gb::{groebner, normal_form};
use super::matrix::Matrix;
use super::ring::QuotientRing;
use super::vector::Vector;

/// Generators of `{ v in S^a : phi(v) in Q }` where `phi: S^a -> S^b` is given
/// by the columns of `phi` and `Q` is generated by `q_gens`. The result is a
/// Gröbner basis of that submodule of `S^a`.
pub fn preimage(phi: &Matrix, q_gens: &[Vector]) -> Vec<Vector> {
    let b = phi.nrows;
    let a = phi.ncols();
    let order = phi.ring.order;
    let one = Monomial::one(phi.ring.nvars());
    let unit = phi.ring.field.one();
    let mut gens = Vec::with_capacity(a + q_gens.len());
    for (i, col) in phi.cols.iter().enumerate() {
        let e = Vector::from_terms_unchecked(vec![super::vector::VTerm {
            comp: b + i,
            mon: one.clone(),
            coeff: unit.clone(),
        }]);
        gens.push(col.add(&e, order));
    }
    gens.extend(q_gens.iter().cloned());
    groebner(&gens, order)
        .into_iter()
        .filter(|g| g.leading().unwrap().comp >= b)
        .map(|g| g.slice(b, b + a))
        .collect()
}

/// Columns generating the kernel of `m: R^a -> R^b` over the quotient ring,
/// reduced modulo the ideal and pruned of redundant generators.
pub fn syzygies(m: &Matrix, ring: &QuotientRing) -> Matrix {
    kernel(m, ring, None)
}

/// [`syzygies`] for a map whose target basis has the given degrees; the
/// degrees only steer which redundant generators are dropped.
pub fn kernel(m: &Matrix, ring: &QuotientRing, target_degrees: Option<&[i64]>) -> Matrix {
    let a = m.ncols();
    let ker = preimage(m, &ring.ideal_module(m.nrows));
    let reduced: Vec<Vector> = ker.iter().map(|v| ring.nf_vector(v)).filter(|v| !v.is_zero()).collect();
    let zeros = vec![0; m.nrows];
    let shifts = column_degrees(m, ring, target_degrees.unwrap_or(&zeros));
    let cols = prune(reduced, ring, a, shifts.as_deref());
    Matrix::from_columns(&m.ring, a, cols)
}

/// Degrees of the source basis making `m` homogeneous for the given target
/// degrees, when such degrees exist. Zero columns get degree zero.
pub fn column_degrees(m: &Matrix, ring: &QuotientRing, target: &[i64]) -> Option<Vec<i64>> {
    if !ring.is_graded() {
        return None;
    }
    m.cols
        .iter()
        .map(|c| {
            if !c.is_homogeneous(&ring.poly.weights, target) {
                return None;
            }
            Some(c.degree(&ring.poly.weights, target).unwrap_or(0))
        })
        .collect()
}

/// Removes generators that lie in the submodule spanned by the others plus
/// `I * S^n`. With `degrees` (shifts of the ambient basis) the candidates are
/// tried from the highest degree down, which yields a minimal generating set
/// for graded input.
pub fn prune(cols: Vec<Vector>, ring: &QuotientRing, n: usize, degrees: Option<&[i64]>) -> Vec<Vector> {
    let order = ring.order();
    let weights = &ring.poly.weights;
    let mut cols: Vec<Vector> = cols.into_iter().filter(|c| !c.is_zero()).collect();
    cols.dedup();
    let key = |v: &Vector| -> (i64, u32) {
        let d = match degrees {
            Some(s) => v.degree(weights, s).unwrap_or(0),
            None => 0,
        };
        (d, v.leading().map_or(0, |t| t.mon.degree()))
    };
    cols.sort_by_key(|v| key(v));
    let ideal = ring.ideal_module(n);
    let mut keep = vec![true; cols.len()];
    for i in (0..cols.len()).rev() {
        let mut gens: Vec<Vector> = cols
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != i && keep[*k])
            .map(|(_, v)| v.clone())
            .collect();
        gens.extend(ideal.iter().cloned());
        let gb = groebner(&gens, order);
        if normal_form(&cols[i], &gb, order).is_zero() {
            keep[i] = false;
        }
    }
    cols.into_iter()
        .zip(keep)
        .filter(|(_, k)| *k)
        .map(|(v, _)| v)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Polynomial;

    fn row(ring: &QuotientRing, entries: &[&str]) -> Matrix {
        let polys: Vec<Polynomial> = entries.iter().map(|s| ring.parse_poly(s).unwrap()).collect();
        Matrix::from_rows(&ring.poly, &[polys]).unwrap()
    }

    fn check_kernel(m: &Matrix, s: &Matrix, ring: &QuotientRing) {
        let prod = m.mul(s).unwrap().reduce(ring);
        assert!(prod.is_zero(), "M*S = {prod}");
    }

    #[test]
    fn koszul_syzygy() {
        let r = QuotientRing::parse("Q[x,y]").unwrap();
        let m = row(&r, &["x", "y"]);
        let s = syzygies(&m, &r);
        assert_eq!(s.ncols(), 1);
        check_kernel(&m, &s, &r);
        let col = s.column_entries(0);
        assert_eq!(col[0].to_string(), "y");
        assert_eq!(col[1].to_string(), "-x");
    }

    #[test]
    fn dual_numbers_kernel() {
        let a = QuotientRing::parse("Q[z]/(z^2)").unwrap();
        let m = row(&a, &["z"]);
        let s = syzygies(&m, &a);
        assert_eq!(s.to_string(), "[[z]]");
    }

    #[test]
    fn cone_ring_kernel() {
        let r = QuotientRing::parse("Q[x,y,z,w]/(x*y+z*w)").unwrap();
        let m = row(&r, &["x", "z"]);
        let s = syzygies(&m, &r);
        check_kernel(&m, &s, &r);
        assert_eq!(s.ncols(), 2);
        // (z, -x) and (y, w) must lie in the span
        let gens: Vec<Vector> = s.cols.iter().cloned().chain(r.ideal_module(2)).collect();
        let gb = groebner(&gens, r.order());
        for want in [["z", "-x"], ["y", "w"]] {
            let v = Vector::from_polys(
                &[r.parse_poly(want[0]).unwrap(), r.parse_poly(want[1]).unwrap()],
                0,
            );
            assert!(normal_form(&v, &gb, r.order()).is_zero());
        }
    }
}
