//! Polynomial matrices, stored column by column.

use std::fmt;
use std::sync::Arc;

use crate::algebra::{FieldElement, Monomial, PolyRing, Polynomial};
use crate::error::{Error, Result};

use super::ring::QuotientRing;
use super::vector::{VTerm, Vector};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    pub ring: Arc<PolyRing>,
    pub nrows: usize,
    pub cols: Vec<Vector>,
}

impl Matrix {
    pub fn zero(ring: &Arc<PolyRing>, nrows: usize, ncols: usize) -> Matrix {
        Matrix {
            ring: ring.clone(),
            nrows,
            cols: vec![Vector::zero(); ncols],
        }
    }

    pub fn identity(ring: &Arc<PolyRing>, n: usize) -> Matrix {
        Matrix::scalar(ring, n, &Polynomial::one(ring))
    }

    /// `p * I_n`.
    pub fn scalar(ring: &Arc<PolyRing>, n: usize, p: &Polynomial) -> Matrix {
        Matrix {
            ring: ring.clone(),
            nrows: n,
            cols: (0..n).map(|i| Vector::from_poly(p, i)).collect(),
        }
    }

    pub fn from_columns(ring: &Arc<PolyRing>, nrows: usize, cols: Vec<Vector>) -> Matrix {
        debug_assert!(cols.iter().all(|c| c.max_comp().map_or(true, |m| m < nrows)));
        Matrix {
            ring: ring.clone(),
            nrows,
            cols,
        }
    }

    pub fn from_rows(ring: &Arc<PolyRing>, rows: &[Vec<Polynomial>]) -> Result<Matrix> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::SizeMismatch("ragged matrix rows".into()));
        }
        let mut cols = vec![Vec::new(); ncols];
        for (i, row) in rows.iter().enumerate() {
            for (j, p) in row.iter().enumerate() {
                for (m, c) in p.terms() {
                    cols[j].push(VTerm {
                        comp: i,
                        mon: m.clone(),
                        coeff: c.clone(),
                    });
                }
            }
        }
        Ok(Matrix {
            ring: ring.clone(),
            nrows,
            cols: cols
                .into_iter()
                .map(|t| Vector::from_terms(t, ring.order))
                .collect(),
        })
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn entry(&self, r: usize, c: usize) -> Polynomial {
        let terms = self.cols[c]
            .component_terms(r)
            .map(|t| (t.mon.clone(), t.coeff.clone()))
            .collect();
        Polynomial::from_terms(&self.ring, terms)
    }

    pub fn rows(&self) -> Vec<Vec<Polynomial>> {
        (0..self.nrows)
            .map(|r| (0..self.ncols()).map(|c| self.entry(r, c)).collect())
            .collect()
    }

    /// Column `j` as a list of entries.
    pub fn column_entries(&self, j: usize) -> Vec<Polynomial> {
        (0..self.nrows).map(|r| self.entry(r, j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_zero())
    }

    /// `self * v` for a column vector `v` with `ncols` components.
    pub fn apply(&self, v: &Vector) -> Vector {
        let order = self.ring.order;
        let mut acc = Vector::zero();
        for t in v.terms() {
            acc = acc.add(&self.cols[t.comp].mul_term(&t.mon, &t.coeff, 0), order);
        }
        acc
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.ncols() != other.nrows {
            return Err(Error::SizeMismatch(format!(
                "{}x{} times {}x{}",
                self.nrows,
                self.ncols(),
                other.nrows,
                other.ncols()
            )));
        }
        Ok(Matrix {
            ring: self.ring.clone(),
            nrows: self.nrows,
            cols: other.cols.iter().map(|c| self.apply(c)).collect(),
        })
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same_shape(other)?;
        let order = self.ring.order;
        Ok(Matrix {
            ring: self.ring.clone(),
            nrows: self.nrows,
            cols: self
                .cols
                .iter()
                .zip(&other.cols)
                .map(|(a, b)| a.add(b, order))
                .collect(),
        })
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Matrix {
        Matrix {
            ring: self.ring.clone(),
            nrows: self.nrows,
            cols: self.cols.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn scale_poly(&self, p: &Polynomial) -> Matrix {
        let order = self.ring.order;
        Matrix {
            ring: self.ring.clone(),
            nrows: self.nrows,
            cols: self.cols.iter().map(|c| c.mul_poly(p, order)).collect(),
        }
    }

    pub fn scale(&self, c: &FieldElement) -> Matrix {
        Matrix {
            ring: self.ring.clone(),
            nrows: self.nrows,
            cols: self.cols.iter().map(|v| v.scale(c)).collect(),
        }
    }

    fn check_same_shape(&self, other: &Matrix) -> Result<()> {
        if self.nrows != other.nrows || self.ncols() != other.ncols() {
            return Err(Error::SizeMismatch(format!(
                "{}x{} vs {}x{}",
                self.nrows,
                self.ncols(),
                other.nrows,
                other.ncols()
            )));
        }
        Ok(())
    }

    pub fn transpose(&self) -> Matrix {
        let mut cols = vec![Vec::new(); self.nrows];
        for (j, c) in self.cols.iter().enumerate() {
            for t in c.terms() {
                cols[t.comp].push(VTerm {
                    comp: j,
                    mon: t.mon.clone(),
                    coeff: t.coeff.clone(),
                });
            }
        }
        Matrix {
            ring: self.ring.clone(),
            nrows: self.ncols(),
            cols: cols
                .into_iter()
                .map(|t| Vector::from_terms(t, self.ring.order))
                .collect(),
        }
    }

    /// Entries reduced modulo the defining ideal of `q`.
    pub fn reduce(&self, q: &QuotientRing) -> Matrix {
        Matrix {
            ring: self.ring.clone(),
            nrows: self.nrows,
            cols: self.cols.iter().map(|c| q.nf_vector(c)).collect(),
        }
    }

    /// `[self | other]`.
    pub fn hconcat(&self, other: &Matrix) -> Result<Matrix> {
        if self.nrows != other.nrows {
            return Err(Error::SizeMismatch("row counts differ".into()));
        }
        let mut cols = self.cols.clone();
        cols.extend(other.cols.iter().cloned());
        Ok(Matrix {
            ring: self.ring.clone(),
            nrows: self.nrows,
            cols,
        })
    }

    /// `[[self, 0], [0, other]]`.
    pub fn block_diag(&self, other: &Matrix) -> Matrix {
        let n = self.nrows;
        let order = self.ring.order;
        let mut cols = self.cols.clone();
        cols.extend(other.cols.iter().map(|c| c.map_components(|k| k + n, order)));
        Matrix {
            ring: self.ring.clone(),
            nrows: n + other.nrows,
            cols,
        }
    }

    /// Block matrix from a grid of equally shaped blocks.
    pub fn blocks(grid: &[Vec<&Matrix>]) -> Result<Matrix> {
        let ring = grid[0][0].ring.clone();
        let order = ring.order;
        let row_heights: Vec<usize> = grid.iter().map(|r| r[0].nrows).collect();
        let col_widths: Vec<usize> = grid[0].iter().map(|b| b.ncols()).collect();
        for (i, r) in grid.iter().enumerate() {
            for (j, b) in r.iter().enumerate() {
                if b.nrows != row_heights[i] || b.ncols() != col_widths[j] {
                    return Err(Error::SizeMismatch("block grid shapes".into()));
                }
            }
        }
        let nrows = row_heights.iter().sum();
        let mut cols = Vec::new();
        for (j, &w) in col_widths.iter().enumerate() {
            for c in 0..w {
                let mut v = Vector::zero();
                let mut off = 0;
                for (i, r) in grid.iter().enumerate() {
                    let shifted = r[j].cols[c].map_components(|k| k + off, order);
                    v = v.add(&shifted, order);
                    off += row_heights[i];
                }
                cols.push(v);
            }
        }
        Ok(Matrix {
            ring,
            nrows,
            cols,
        })
    }

    /// Whether every entry is a constant.
    pub fn is_constant(&self) -> bool {
        self.cols
            .iter()
            .all(|c| c.terms().iter().all(|t| t.mon.is_one()))
    }

    /// Evaluates every variable at zero.
    pub fn constant_part(&self) -> Matrix {
        let one = Monomial::one(self.ring.nvars());
        Matrix {
            ring: self.ring.clone(),
            nrows: self.nrows,
            cols: self
                .cols
                .iter()
                .map(|c| {
                    Vector::from_terms_unchecked(
                        c.terms().iter().filter(|t| t.mon == one).cloned().collect(),
                    )
                })
                .collect(),
        }
    }

    /// Maximal total degree of an entry.
    pub fn max_degree(&self) -> u32 {
        self.cols
            .iter()
            .flat_map(|c| c.terms().iter().map(|t| t.mon.degree()))
            .max()
            .unwrap_or(0)
    }

    pub fn embed(&self, target: &Arc<PolyRing>) -> Matrix {
        let rows: Vec<Vec<Polynomial>> = self
            .rows()
            .iter()
            .map(|r| r.iter().map(|p| p.embed(target)).collect())
            .collect();
        let mut m = Matrix::from_rows(target, &rows).expect("rectangular");
        m.cols.resize(self.ncols(), Vector::zero());
        m
    }

    pub fn change_field(&self, target: &Arc<PolyRing>) -> Result<Matrix> {
        let mut rows = Vec::with_capacity(self.nrows);
        for r in self.rows() {
            rows.push(r.iter().map(|p| p.change_field(target)).collect::<Result<Vec<_>>>()?);
        }
        let mut m = Matrix::from_rows(target, &rows)?;
        m.cols.resize(self.ncols(), Vector::zero());
        Ok(m)
    }

    /// Keeps the listed columns.
    pub fn select_columns(&self, idx: &[usize]) -> Matrix {
        Matrix {
            ring: self.ring.clone(),
            nrows: self.nrows,
            cols: idx.iter().map(|&i| self.cols[i].clone()).collect(),
        }
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows()
            .iter()
            .map(|r| {
                let e: Vec<String> = r.iter().map(|p| p.to_string()).collect();
                format!("[{}]", e.join(", "))
            })
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Field;
    use crate::parse::parse_poly_matrix;

    #[test]
    fn product_and_transpose() {
        let r = PolyRing::new(Field::Rational, &["x", "y", "z", "w"]);
        let a = Matrix::from_rows(&r, &parse_poly_matrix(&r, "[[x, -w],[z, y]]").unwrap()).unwrap();
        let b = Matrix::from_rows(&r, &parse_poly_matrix(&r, "[[y, w],[-z, x]]").unwrap()).unwrap();
        let f = crate::parse::parse_poly(&r, "x*y+z*w").unwrap();
        assert_eq!(a.mul(&b).unwrap(), Matrix::scalar(&r, 2, &f));
        assert_eq!(a.transpose().entry(0, 1), a.entry(1, 0));
        assert_eq!(a.transpose().transpose(), a);
    }

    #[test]
    fn blocks_layout() {
        let r = PolyRing::new(Field::Rational, &["x"]);
        let i = Matrix::identity(&r, 1);
        let z = Matrix::zero(&r, 1, 1);
        let m = Matrix::blocks(&[vec![&i, &z], vec![&z, &i]]).unwrap();
        assert_eq!(m, Matrix::identity(&r, 2));
    }
}
