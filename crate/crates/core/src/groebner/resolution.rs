//! Free resolutions by iterated syzygies.

use std::sync::Arc;

use super::matrix::Matrix;
use super::module::FPModule;
use super::ring::QuotientRing;
use super::syzygy::{column_degrees, kernel};

#[derive(Clone, Debug)]
pub struct FreeResolution {
    pub ring: Arc<QuotientRing>,
    /// `maps[i]` is `d_{i+1}: F_{i+1} -> F_i`.
    pub maps: Vec<Matrix>,
    /// Rank of `F_0, F_1, ...`.
    pub ranks: Vec<usize>,
    /// Basis degrees of each `F_i`, for graded modules.
    pub degrees: Option<Vec<Vec<i64>>>,
    /// Smallest `i` (one-based) with `d_{i+2} = d_i`, if found.
    pub periodic_from: Option<usize>,
}

impl FreeResolution {
    /// `d_i` for `i >= 1`; zero maps past the end of a finite resolution.
    pub fn d(&self, i: usize) -> Matrix {
        match self.maps.get(i - 1) {
            Some(m) => m.clone(),
            None => {
                let rows = self.rank(i - 1);
                Matrix::zero(&self.ring.poly, rows, self.rank(i))
            }
        }
    }

    pub fn rank(&self, i: usize) -> usize {
        self.ranks.get(i).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }

    /// Basis degrees of `F_i` (empty past the end).
    pub fn basis_degrees(&self, i: usize) -> Option<Vec<i64>> {
        self.degrees
            .as_ref()
            .map(|d| d.get(i).cloned().unwrap_or_default())
    }

    /// Whether `d_i * d_{i+1} = 0` modulo the ring ideal for every pair.
    pub fn is_complex(&self) -> bool {
        self.maps.windows(2).all(|w| {
            w[0].mul(&w[1])
                .map(|p| p.reduce(&self.ring).is_zero())
                .unwrap_or(false)
        })
    }
}

/// Resolution of `m` with `n >= 1` differentials (fewer if it becomes
/// finite). The first differential is the presentation matrix of `m`.
pub fn resolve(m: &FPModule, n: usize) -> FreeResolution {
    let ring = m.ring.clone();
    let mut maps = vec![m.rels.clone()];
    let mut ranks = vec![m.ngens, m.rels.ncols()];
    let mut degrees = m.degrees.clone().map(|d0| {
        let d1 = column_degrees(&m.rels, &ring, &d0).unwrap_or_else(|| vec![0; m.rels.ncols()]);
        vec![d0, d1]
    });
    while maps.len() < n {
        let last = maps.last().unwrap();
        if last.ncols() == 0 {
            break;
        }
        let target = degrees.as_ref().map(|d| d[d.len() - 2].clone());
        let next = kernel(last, &ring, target.as_deref());
        if let Some(ds) = degrees.as_mut() {
            let src = column_degrees(&next, &ring, ds.last().unwrap());
            match src {
                Some(s) => ds.push(s),
                None => degrees = None,
            }
        }
        ranks.push(next.ncols());
        maps.push(next);
    }
    let periodic_from = (0..maps.len().saturating_sub(2))
        .find(|&i| maps[i] == maps[i + 2] && maps[i].ncols() > 0)
        .map(|i| i + 1);
    FreeResolution {
        ring,
        maps,
        ranks,
        degrees,
        periodic_from,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn residue_field_of_dual_numbers() {
        let a = QuotientRing::parse("Q[z]/(z^2)").unwrap();
        let v1 = FPModule::parse("A/(z)", Some(&a)).unwrap();
        let res = resolve(&v1, 5);
        assert!(res.is_complex());
        for i in 1..=5 {
            assert_eq!(res.d(i).to_string(), "[[z]]");
        }
        assert_eq!(res.periodic_from, Some(1));
    }

    #[test]
    fn node_alternates() {
        let b = QuotientRing::parse("Q[z,w]/(z*w)").unwrap();
        let mz = FPModule::parse("B/(w)", Some(&b)).unwrap();
        let res = resolve(&mz, 4);
        assert_eq!(res.d(1).to_string(), "[[w]]");
        assert_eq!(res.d(2).to_string(), "[[z]]");
        assert_eq!(res.d(3).to_string(), "[[w]]");
        assert_eq!(res.periodic_from, Some(1));
    }

    #[test]
    fn free_module_resolution() {
        let r = QuotientRing::parse("Q[x,y]").unwrap();
        let f = FPModule::free(&r, 2);
        let res = resolve(&f, 3);
        assert_eq!(res.len(), 1);
        assert!(res.d(1).is_zero());
        assert_eq!(res.rank(1), 0);
    }

    #[test]
    fn cone_ideal_resolution_is_two_periodic() {
        let r = QuotientRing::parse("Q[x,y,z,w]/(x*y+z*w)").unwrap();
        let i1 = FPModule::parse("ideal (x, z)", Some(&r)).unwrap();
        let res = resolve(&i1, 6);
        assert!(res.is_complex());
        assert!(res.ranks.iter().skip(1).all(|&k| k == 2), "{:?}", res.ranks);
        assert!(res.periodic_from.is_some());
    }
}
