//! Exact linear algebra over a [`Field`].

use std::collections::BTreeMap;
use std::fmt;

use super::field::{Field, FieldElement};

/// Dense `rows x cols` matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldMatrix {
    pub field: Field,
    pub rows: usize,
    pub cols: usize,
    data: Vec<FieldElement>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SolveMode {
    Rank,
    KernelBasis,
    Rref,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolveOutput {
    Rank(usize),
    Matrix(FieldMatrix),
}

impl FieldMatrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> FieldMatrix {
        FieldMatrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: &Field, n: usize) -> FieldMatrix {
        let mut m = FieldMatrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: &Field, rows: Vec<Vec<FieldElement>>) -> FieldMatrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged matrix");
        FieldMatrix {
            field: field.clone(),
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64(field: &Field, rows: &[&[i64]]) -> FieldMatrix {
        FieldMatrix::from_rows(
            field,
            rows.iter()
                .map(|r| r.iter().map(|&v| field.from_i64(v)).collect())
                .collect(),
        )
    }

    pub fn get(&self, r: usize, c: usize) -> &FieldElement {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: FieldElement) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[FieldElement] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<FieldElement> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn transpose(&self) -> FieldMatrix {
        let mut t = FieldMatrix::zeros(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &FieldMatrix) -> FieldMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = FieldMatrix::zeros(&self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j).add(&a.mul(b));
                        out.set(i, j, v);
                    }
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (FieldMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            if p != row {
                for c in 0..m.cols {
                    m.data.swap(p * m.cols + c, row * m.cols + c);
                }
            }
            let inv = m.get(row, col).inv().expect("nonzero pivot");
            for c in col..m.cols {
                let v = m.get(row, c).mul(&inv);
                m.set(row, c, v);
            }
            for r in 0..m.rows {
                if r == row {
                    continue;
                }
                let f = m.get(r, col).clone();
                if f.is_zero() {
                    continue;
                }
                for c in col..m.cols {
                    let v = m.get(r, c).sub(&f.mul(m.get(row, c)));
                    m.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel, as the columns of a `cols x k` matrix.
    pub fn kernel_basis(&self) -> FieldMatrix {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut k = FieldMatrix::zeros(&self.field, self.cols, free.len());
        for (j, &f) in free.iter().enumerate() {
            k.set(f, j, self.field.one());
            for (i, &p) in pivots.iter().enumerate() {
                k.set(p, j, r.get(i, f).neg());
            }
        }
        k
    }

    pub fn solve_mode(&self, mode: SolveMode) -> SolveOutput {
        match mode {
            SolveMode::Rank => SolveOutput::Rank(self.rank()),
            SolveMode::KernelBasis => SolveOutput::Matrix(self.kernel_basis()),
            SolveMode::Rref => SolveOutput::Matrix(self.rref().0),
        }
    }

    /// Some `x` with `self * x = b`, if the system is consistent.
    pub fn solve(&self, b: &[FieldElement]) -> Option<Vec<FieldElement>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = FieldMatrix::zeros(&self.field, self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, self.cols, b[r].clone());
        }
        let (m, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = m.get(i, self.cols).clone();
        }
        Some(x)
    }
}

impl fmt::Display for FieldMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for r in 0..self.rows {
            if r > 0 {
                f.write_str(", ")?;
            }
            let row: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            write!(f, "[{}]", row.join(", "))?;
        }
        f.write_str("]")
    }
}

/// Incrementally maintained echelon basis of a subspace of the vector space
/// with basis indexed by `K`. Each stored row has a distinct pivot, its
/// largest key, normalized to one.
///
/// With `track` enabled every row also records its expression in terms of
/// the inserted vectors, so that membership tests can return coordinates.
#[derive(Clone, Debug)]
pub struct SparseEchelon<K: Ord + Clone> {
    field: Field,
    rows: BTreeMap<K, (BTreeMap<K, FieldElement>, BTreeMap<usize, FieldElement>)>,
    inserted: usize,
    track: bool,
}

pub type SparseVec<K> = BTreeMap<K, FieldElement>;

fn axpy<K: Ord + Clone>(y: &mut BTreeMap<K, FieldElement>, a: &FieldElement, x: &BTreeMap<K, FieldElement>) {
    for (k, v) in x {
        let nv = match y.get(k) {
            Some(old) => old.add(&a.mul(v)),
            None => a.mul(v),
        };
        if nv.is_zero() {
            y.remove(k);
        } else {
            y.insert(k.clone(), nv);
        }
    }
}

impl<K: Ord + Clone> SparseEchelon<K> {
    pub fn new(field: &Field, track: bool) -> SparseEchelon<K> {
        SparseEchelon {
            field: field.clone(),
            rows: BTreeMap::new(),
            inserted: 0,
            track,
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the stored rows. Returns the remainder and the
    /// combination of inserted vectors that was subtracted.
    pub fn reduce(&self, mut v: SparseVec<K>) -> (SparseVec<K>, SparseVec<usize>) {
        let mut hist = BTreeMap::new();
        let mut done: BTreeMap<K, FieldElement> = BTreeMap::new();
        while let Some((k, c)) = v.pop_last() {
            match self.rows.get(&k) {
                Some((row, h)) => {
                    let a = c.neg();
                    let mut rest = row.clone();
                    rest.remove(&k);
                    axpy(&mut v, &a, &rest);
                    if self.track {
                        axpy(&mut hist, &c, h);
                    }
                }
                None => {
                    done.insert(k, c);
                }
            }
        }
        (done, hist)
    }

    /// Inserts `v`; returns true when it was independent of the stored rows.
    pub fn insert(&mut self, v: SparseVec<K>) -> bool {
        let idx = self.inserted;
        self.inserted += 1;
        let (rem, hist) = self.reduce(v);
        let Some((pk, pc)) = rem.last_key_value() else {
            return false;
        };
        let pk = pk.clone();
        let inv = pc.inv().expect("nonzero pivot");
        let mut row = BTreeMap::new();
        axpy(&mut row, &inv, &rem);
        let mut h = BTreeMap::new();
        if self.track {
            // row = inv * (v - sum hist) in terms of inserted vectors
            h.insert(idx, inv.clone());
            axpy(&mut h, &inv.neg(), &hist);
        }
        self.rows.insert(pk, (row, h));
        true
    }

    /// Coordinates of `v` in terms of the inserted vectors, if `v` lies in
    /// the span. Requires tracking.
    pub fn express(&self, v: SparseVec<K>) -> Option<SparseVec<usize>> {
        assert!(self.track, "coordinate tracking disabled");
        let (rem, hist) = self.reduce(v);
        rem.is_empty().then_some(hist)
    }

    pub fn contains(&self, v: SparseVec<K>) -> bool {
        self.reduce(v).0.is_empty()
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// The stored rows, in pivot order.
    pub fn rows(&self) -> impl Iterator<Item = &SparseVec<K>> {
        self.rows.values().map(|(r, _)| r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_rank() {
        assert_eq!(FieldMatrix::identity(&Field::Rational, 3).rank(), 3);
    }

    #[test]
    fn zero_kernel() {
        let k = FieldMatrix::zeros(&Field::Rational, 2, 3).kernel_basis();
        assert_eq!((k.rows, k.cols), (3, 3));
        assert_eq!(k.rank(), 3);
    }

    #[test]
    fn proportional_rows() {
        let m = FieldMatrix::from_i64(&Field::Rational, &[&[1, 2], &[2, 4]]);
        assert_eq!(m.solve_mode(SolveMode::Rank), SolveOutput::Rank(1));
        let k = m.kernel_basis();
        assert!(m.mul(&k).is_zero());
    }

    #[test]
    fn solve_consistent_and_not() {
        let f = Field::Rational;
        let m = FieldMatrix::from_i64(&f, &[&[1, 1], &[1, -1]]);
        let x = m.solve(&[f.from_i64(3), f.from_i64(1)]).unwrap();
        assert_eq!(x, vec![f.from_i64(2), f.from_i64(1)]);
        let s = FieldMatrix::from_i64(&f, &[&[1, 1], &[2, 2]]);
        assert!(s.solve(&[f.from_i64(1), f.from_i64(3)]).is_none());
    }

    #[test]
    fn echelon_coordinates() {
        let f = Field::Rational;
        let mut e: SparseEchelon<u32> = SparseEchelon::new(&f, true);
        let v = |a: &[(u32, i64)]| a.iter().map(|&(k, c)| (k, f.from_i64(c))).collect::<SparseVec<u32>>();
        assert!(e.insert(v(&[(0, 1), (1, 1)])));
        assert!(e.insert(v(&[(1, 1), (2, 1)])));
        assert!(!e.insert(v(&[(0, 1), (2, -1)])));
        let coords = e.express(v(&[(0, 2), (1, 3), (2, 1)])).unwrap();
        assert_eq!(coords.get(&0), Some(&f.from_i64(2)));
        assert_eq!(coords.get(&1), Some(&f.from_i64(1)));
    }
}
