//! Matrix factorizations `A * B = B * A = f * I` of a polynomial `f`.
//!
//! A factorization is the two-periodic complex `X_0 -B-> X_1 -A-> X_0` of
//! free modules; `coker A` is the associated MCM module over `S / f`.

use std::fmt;
use std::sync::Arc;

use crate::algebra::{PolyRing, Polynomial};
use crate::error::{Error, Result};
use crate::groebner::hom::Quotient;
use crate::groebner::{groebner, preimage, resolve, FPModule, Matrix, QuotientRing, VTerm, Vector};
use crate::parse::{self, Cursor};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixFactorization {
    pub ring: Arc<PolyRing>,
    pub potential: Polynomial,
    pub a: Matrix,
    pub b: Matrix,
}

/// Whether `A * B = B * A = f * I` holds exactly.
pub fn mf_check(a: &Matrix, b: &Matrix, f: &Polynomial) -> Result<bool> {
    let n = a.nrows;
    if a.ncols() != n || b.nrows != n || b.ncols() != n {
        return Err(Error::SizeMismatch(format!(
            "factorization needs square matrices of one size, got {}x{} and {}x{}",
            a.nrows,
            a.ncols(),
            b.nrows,
            b.ncols()
        )));
    }
    let target = Matrix::scalar(&a.ring, n, f);
    Ok(a.mul(b)? == target && b.mul(a)? == target)
}

impl MatrixFactorization {
    pub fn new(a: Matrix, b: Matrix, potential: Polynomial) -> Result<MatrixFactorization> {
        if !mf_check(&a, &b, &potential)? {
            return Err(Error::Invalid(format!("A*B and B*A are not ({potential})*I")));
        }
        Ok(MatrixFactorization {
            ring: a.ring.clone(),
            potential,
            a,
            b,
        })
    }

    /// The zero object: two empty matrices.
    pub fn zero(ring: &Arc<PolyRing>, potential: &Polynomial) -> MatrixFactorization {
        MatrixFactorization {
            ring: ring.clone(),
            potential: potential.clone(),
            a: Matrix::zero(ring, 0, 0),
            b: Matrix::zero(ring, 0, 0),
        }
    }

    pub fn size(&self) -> usize {
        self.a.nrows
    }

    pub fn is_valid(&self) -> bool {
        mf_check(&self.a, &self.b, &self.potential).unwrap_or(false)
    }

    pub fn direct_sum(&self, other: &MatrixFactorization) -> Result<MatrixFactorization> {
        if self.ring != other.ring || self.potential != other.potential {
            return Err(Error::RingMismatch("factorizations of different potentials".into()));
        }
        Ok(MatrixFactorization {
            ring: self.ring.clone(),
            potential: self.potential.clone(),
            a: self.a.block_diag(&other.a),
            b: self.b.block_diag(&other.b),
        })
    }

    /// `coker A` as a module over `S / f`.
    pub fn module(&self) -> Result<FPModule> {
        let q = QuotientRing::new(&self.ring, vec![self.potential.clone()])?;
        FPModule::new(&q, self.size(), self.a.clone())
    }

    /// The odd differential on `X_0 (+) X_1`: `[[0, A], [B, 0]]`.
    fn differential(&self) -> Matrix {
        let n = self.size();
        let z = Matrix::zero(&self.ring, n, n);
        Matrix::blocks(&[vec![&z, &self.a], vec![&self.b, &z]]).expect("square blocks")
    }

    /// Parses `mf over <ring> potential <f> A=[[...]] B=[[...]]`; matrices
    /// are given by rows.
    pub fn parse(s: &str) -> Result<MatrixFactorization> {
        let mut c = Cursor::new(s);
        if !c.eat_keyword("mf") || !c.eat_keyword("over") {
            return c.err("expected `mf over <ring>`");
        }
        let (ring, ideal) = parse::parse_ring_at(&mut c)?;
        if !ideal.is_empty() {
            return c.err("factorizations live over a polynomial ring without relations");
        }
        if !c.eat_keyword("potential") {
            return c.err("expected `potential`");
        }
        let f = parse::parse_poly_at(&mut c, &ring)?;
        let read = |name: char, c: &mut Cursor| -> Result<Matrix> {
            c.skip_ws();
            c.expect(name)?;
            c.expect('=')?;
            let rows = parse::parse_poly_matrix_at(c, &ring)?;
            if rows.is_empty() {
                return Ok(Matrix::zero(&ring, 0, 0));
            }
            Matrix::from_rows(&ring, &rows)
        };
        let a = read('A', &mut c)?;
        let b = read('B', &mut c)?;
        if !c.at_end() {
            return c.err("unexpected trailing input");
        }
        MatrixFactorization::new(a, b, f)
    }
}

impl fmt::Display for MatrixFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "mf over {} potential {} A={} B={}",
            self.ring.describe(),
            self.potential,
            self.a,
            self.b
        )
    }
}

/// Swaps the two factors, the shift functor.
pub fn mf_shift(x: &MatrixFactorization) -> MatrixFactorization {
    MatrixFactorization {
        ring: x.ring.clone(),
        potential: x.potential.clone(),
        a: x.b.clone(),
        b: x.a.clone(),
    }
}

/// Determinant by fraction-free elimination.
fn determinant(m: &Matrix) -> Polynomial {
    let n = m.nrows;
    let mut a = m.rows();
    let mut sign = false;
    let mut prev = Polynomial::one(&m.ring);
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else {
            return Polynomial::zero(&m.ring);
        };
        if p != k {
            a.swap(p, k);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[i][j].mul(&a[k][k]).sub(&a[i][k].mul(&a[k][j]));
                a[i][j] = num.exact_div(&prev).expect("Bareiss division is exact");
            }
        }
        prev = a[k][k].clone();
    }
    let d = if n == 0 { Polynomial::one(&m.ring) } else { a[n - 1][n - 1].clone() };
    if sign {
        d.neg()
    } else {
        d
    }
}

fn minor(m: &[Vec<Polynomial>], skip_r: usize, skip_c: usize) -> Vec<Vec<Polynomial>> {
    m.iter()
        .enumerate()
        .filter(|(r, _)| *r != skip_r)
        .map(|(_, row)| {
            row.iter()
                .enumerate()
                .filter(|(c, _)| *c != skip_c)
                .map(|(_, p)| p.clone())
                .collect()
        })
        .collect()
}

/// The unique `B` with `A * B = f * I`, when `A` is square with nonzero
/// determinant dividing `f * adj(A)`.
fn complementary_factor(a: &Matrix, f: &Polynomial) -> Result<Matrix> {
    let n = a.nrows;
    let ring = &a.ring;
    let det = determinant(a);
    if det.is_zero() {
        return Err(Error::Invalid("singular matrix has no complementary factor".into()));
    }
    let rows = a.rows();
    let mut out = vec![vec![Polynomial::zero(ring); n]; n];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, slot) in row.iter_mut().enumerate() {
            // adj(A)[i][j] = (-1)^{i+j} det(minor(j, i))
            let sub = minor(&rows, j, i);
            let cof = if n == 1 {
                Polynomial::one(ring)
            } else {
                determinant(&Matrix::from_rows(ring, &sub)?)
            };
            let cof = if (i + j) % 2 == 1 { cof.neg() } else { cof };
            *slot = f
                .mul(&cof)
                .exact_div(&det)
                .ok_or_else(|| Error::Invalid("determinant does not divide f * adj(A)".into()))?;
        }
    }
    Matrix::from_rows(ring, &out)
}

/// The factorization read off the two-periodic tail of a resolution of an
/// MCM module over a hypersurface ring. Free modules give the zero object.
pub fn mf_from_module(m: &FPModule) -> Result<MatrixFactorization> {
    let f = m
        .ring
        .hypersurface
        .clone()
        .ok_or_else(|| Error::Invalid("factorizations need a hypersurface ring".into()))?;
    let m = m.pruned()?;
    if m.rels.ncols() == 0 {
        return Ok(MatrixFactorization::zero(&m.ring.poly, &f));
    }
    let bound = 2 * m.ring.nvars() + 4;
    let res = resolve(&m, bound);
    let start = res.periodic_from.ok_or(Error::NotPeriodic(bound))?;
    // odd steps have cokernel stably isomorphic to M
    let i = if start % 2 == 1 { start } else { start + 1 };
    let a = res.d(i);
    if a.nrows != a.ncols() {
        return Err(Error::NotPeriodic(bound));
    }
    let b = complementary_factor(&a, &f)?;
    MatrixFactorization::new(a, b, f)
}

/// The Knörrer factorization of `f + x*y` over `S[x, y]`:
/// `A' = [[A, -y], [x, B]]`, `B' = [[B, y], [-x, A]]`.
pub fn knorrer(m: &MatrixFactorization, x: &str, y: &str) -> Result<MatrixFactorization> {
    let ring = m.ring.extend(&[x, y])?;
    let n = m.size();
    let xv = Polynomial::var(&ring, ring.nvars() - 2);
    let yv = Polynomial::var(&ring, ring.nvars() - 1);
    let a = m.a.embed(&ring);
    let b = m.b.embed(&ring);
    let xi = Matrix::scalar(&ring, n, &xv);
    let yi = Matrix::scalar(&ring, n, &yv);
    let a2 = Matrix::blocks(&[vec![&a, &yi.neg()], vec![&xi, &b]])?;
    let b2 = Matrix::blocks(&[vec![&b, &yi], vec![&xi.neg(), &a]])?;
    let f = m.potential.embed(&ring).add(&xv.mul(&yv));
    MatrixFactorization::new(a2, b2, f)
}

/// Homotopy classes of morphisms between two factorizations.
#[derive(Clone, Debug)]
pub struct MfHom {
    pub even: usize,
    pub odd: usize,
    /// Block matrices on `X_0 (+) X_1 -> Y_0 (+) Y_1`.
    pub even_basis: Vec<Matrix>,
    pub odd_basis: Vec<Matrix>,
}

/// Dimensions of the even and odd cohomology of the Hom complex
/// `D(phi) = d_Y phi - (-1)^|phi| phi d_X`, computed as quotients of
/// polynomial modules.
pub fn mf_stable_hom(x: &MatrixFactorization, y: &MatrixFactorization) -> Result<MfHom> {
    if x.ring != y.ring || x.potential != y.potential {
        return Err(Error::RingMismatch("factorizations of different potentials".into()));
    }
    let (n, m) = (x.size(), y.size());
    let positions = |even: bool| -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for c in 0..2 * n {
            for r in 0..2 * m {
                if ((r < m) == (c < n)) == even {
                    out.push((r, c));
                }
            }
        }
        out
    };
    let even_pos = positions(true);
    let odd_pos = positions(false);
    let dx = x.differential();
    let dy = y.differential();
    let ring = QuotientRing::free(&x.ring);
    let order = x.ring.order;
    // D restricted to one parity, as a matrix into the other parity's coordinates
    let d_matrix = |src: &[(usize, usize)], tgt: &[(usize, usize)], sign_odd: bool| -> Matrix {
        let index: std::collections::HashMap<(usize, usize), usize> =
            tgt.iter().enumerate().map(|(i, &p)| (p, i)).collect();
        let dy_rows = dy.rows();
        let dx_rows = dx.rows();
        let cols = src
            .iter()
            .map(|&(r, c)| {
                let mut terms = Vec::new();
                // d_Y E_rc: column c is column r of d_Y
                for (i, row) in dy_rows.iter().enumerate().filter(|(_, row)| !row[r].is_zero()) {
                    push_terms(&mut terms, &row[r], index[&(i, c)], false);
                }
                // E_rc d_X: row r is row c of d_X
                for (j, p) in dx_rows[c].iter().enumerate().filter(|(_, p)| !p.is_zero()) {
                    push_terms(&mut terms, p, index[&(r, j)], !sign_odd);
                }
                Vector::from_terms(terms, order)
            })
            .collect();
        Matrix::from_columns(&x.ring, tgt.len(), cols)
    };
    let d_even = d_matrix(&even_pos, &odd_pos, false);
    let d_odd = d_matrix(&odd_pos, &even_pos, true);
    let classes = |d: &Matrix, prev: &Matrix, what: &str| -> Result<Quotient> {
        let k = preimage(d, &[]);
        let j = groebner(&prev.cols, order);
        Quotient::saturate(&ring, &k, j, what)
    };
    let even = classes(&d_even, &d_odd, "even homotopy classes")?;
    let odd = classes(&d_odd, &d_even, "odd homotopy classes")?;
    let to_blocks = |q: &Quotient, pos: &[(usize, usize)]| -> Vec<Matrix> {
        q.basis
            .iter()
            .map(|v| {
                let mut rows = vec![vec![Polynomial::zero(&x.ring); 2 * n]; 2 * m];
                for t in v.terms() {
                    let (r, c) = pos[t.comp];
                    rows[r][c] = rows[r][c].add(&Polynomial::monomial(&x.ring, t.mon.clone(), t.coeff.clone()));
                }
                block_matrix(&x.ring, 2 * m, 2 * n, rows)
            })
            .collect()
    };
    Ok(MfHom {
        even: even.dim(),
        odd: odd.dim(),
        even_basis: to_blocks(&even, &even_pos),
        odd_basis: to_blocks(&odd, &odd_pos),
    })
}

fn block_matrix(ring: &Arc<PolyRing>, nrows: usize, ncols: usize, rows: Vec<Vec<Polynomial>>) -> Matrix {
    if nrows == 0 {
        return Matrix::zero(ring, 0, ncols);
    }
    Matrix::from_rows(ring, &rows).expect("rectangular rows")
}

fn push_terms(out: &mut Vec<VTerm>, p: &Polynomial, comp: usize, negate: bool) {
    for (mon, c) in p.terms() {
        out.push(VTerm {
            comp,
            mon: mon.clone(),
            coeff: if negate { c.neg() } else { c.clone() },
        });
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Field;
    use crate::parse::parse_poly;

    fn mf(s: &str) -> MatrixFactorization {
        MatrixFactorization::parse(s).unwrap()
    }

    #[test]
    fn check_examples() {
        let r = PolyRing::new(Field::Rational, &["x", "y", "z", "w"]);
        let rows = |s: &str| Matrix::from_rows(&r, &parse::parse_poly_matrix(&r, s).unwrap()).unwrap();
        let f = parse_poly(&r, "x*y+z*w").unwrap();
        assert!(mf_check(&rows("[[x,-w],[z,y]]"), &rows("[[y,w],[-z,x]]"), &f).unwrap());
        let r1 = PolyRing::new(Field::Rational, &["z"]);
        let z = Matrix::from_rows(&r1, &[vec![parse_poly(&r1, "z").unwrap()]]).unwrap();
        assert!(mf_check(&z, &z, &parse_poly(&r1, "z^2").unwrap()).unwrap());
        assert!(!mf_check(&z, &z, &parse_poly(&r1, "z^3").unwrap()).unwrap());
        assert!(mf_check(&z, &rows("[[x,y]]"), &parse_poly(&r1, "z^2").unwrap()).is_err());
    }

    #[test]
    fn from_modules() {
        let a = QuotientRing::parse("Q[z]/(z^2)").unwrap();
        let v1 = FPModule::parse("A/(z)", Some(&a)).unwrap();
        let x = mf_from_module(&v1).unwrap();
        assert_eq!((x.a.to_string(), x.b.to_string()), ("[[z]]".into(), "[[z]]".into()));

        let r = QuotientRing::parse("Q[x,y,z,w]/(x*y+z*w)").unwrap();
        let i1 = FPModule::parse("ideal (x, z)", Some(&r)).unwrap();
        let x1 = mf_from_module(&i1).unwrap();
        assert_eq!(x1.size(), 2);
        assert!(x1.is_valid());

        let free = mf_from_module(&FPModule::free(&r, 1)).unwrap();
        assert_eq!(free.size(), 0);
    }

    #[test]
    fn shift_and_knorrer() {
        let x = mf("mf over Q[z] potential z^2 A=[[z]] B=[[z]]");
        assert_eq!(mf_shift(&x), x);
        let k = knorrer(&x, "x", "y").unwrap();
        assert_eq!(k.size(), 2);
        assert!(k.is_valid());
        assert_eq!(k.potential.to_string(), "z^2 + x*y");
        assert!(matches!(knorrer(&x, "z", "y"), Err(Error::VariableCollision(_))));
    }

    #[test]
    fn homotopy_classes() {
        let v = mf("mf over Q[z] potential z^2 A=[[z]] B=[[z]]");
        let h = mf_stable_hom(&v, &v).unwrap();
        assert_eq!((h.even, h.odd), (1, 1));

        let mz = mf("mf over Q[z,w] potential z*w A=[[w]] B=[[z]]");
        let mw = mf_shift(&mz);
        let h = mf_stable_hom(&mz, &mw).unwrap();
        assert_eq!((h.even, h.odd), (0, 1));
        let h = mf_stable_hom(&mz, &mz).unwrap();
        assert_eq!((h.even, h.odd), (1, 0));
    }

    #[test]
    fn display_round_trip() {
        let x = mf("mf over Q[z,w] potential z*w A=[[w]] B=[[z]]");
        assert_eq!(MatrixFactorization::parse(&x.to_string()).unwrap(), x);
    }

    #[test]
    fn knorrer_preserves_homotopy_dimensions() {
        let v = mf("mf over Q[z] potential z^2 A=[[z]] B=[[z]]");
        let mz = mf("mf over Q[z,w] potential z*w A=[[w]] B=[[z]]");
        let mw = mf_shift(&mz);
        for (x, y) in [(&v, &v), (&mz, &mw), (&mz, &mz), (&mw, &mz)] {
            let before = mf_stable_hom(x, y).unwrap();
            let (kx, ky) = (knorrer(x, "x", "y").unwrap(), knorrer(y, "x", "y").unwrap());
            let after = mf_stable_hom(&kx, &ky).unwrap();
            assert_eq!((before.even, before.odd), (after.even, after.odd));
        }
    }
}
