//! Sheaf cohomology of torus-invariant divisors.
//!
//! For `D = sum a_rho D_rho` on a complete toric variety,
//! `H^p(X, O(D))_m` is the reduced cohomology `H~^{p-1}` of the simplicial
//! complex on the rays with `<m, u_rho> < -a_rho`, generated by the subsets
//! lying in a common maximal cone. Degrees `m` with nonzero contribution lie
//! in bounded chambers of the hyperplane arrangement `<m, u_rho> = -a_rho`,
//! so scanning the integer bounding box of its vertices is exhaustive.

use std::collections::{BTreeSet, HashMap};

use num_integer::Integer;
use num_traits::ToPrimitive;

use super::fan::{dot, solve_rays, subsets, Fan, TDivisor};
use crate::algebra::{Field, FieldMatrix};
use crate::error::{Error, Result};

/// Bounding boxes larger than this many lattice points are refused.
pub const BOX_CAP: u64 = 5_000_000;

/// `dim H~^q(K)` for `q = -1, 0, ..., dim K`, indexed by `q + 1`, for the
/// simplicial complex generated by `faces`. The empty complex has
/// `H~^{-1} = 1`.
pub fn reduced_betti(faces: &[Vec<usize>]) -> Vec<usize> {
    let mut all: BTreeSet<Vec<usize>> = BTreeSet::new();
    for f in faces {
        for k in 1..=f.len() {
            for s in subsets(f, k) {
                all.insert(s);
            }
        }
    }
    let top = all.iter().map(|s| s.len()).max().unwrap_or(0);
    // by_size[k] = faces with k vertices; k = 0 is the empty face
    let mut by_size: Vec<Vec<Vec<usize>>> = vec![Vec::new(); top + 1];
    by_size[0].push(Vec::new());
    for s in all {
        by_size[s.len()].push(s);
    }
    let index: Vec<HashMap<&Vec<usize>, usize>> = by_size
        .iter()
        .map(|fs| fs.iter().enumerate().map(|(i, f)| (f, i)).collect())
        .collect();
    // rank of the boundary from k-vertex faces to (k-1)-vertex faces
    let mut ranks = vec![0usize; top + 2];
    for k in 1..=top {
        let mut m = FieldMatrix::zeros(&Field::Rational, by_size[k - 1].len(), by_size[k].len());
        for (j, f) in by_size[k].iter().enumerate() {
            for drop in 0..f.len() {
                let mut g = f.clone();
                g.remove(drop);
                let sign = if drop % 2 == 0 { 1 } else { -1 };
                m.set(index[k - 1][&g], j, Field::Rational.from_i64(sign));
            }
        }
        ranks[k] = m.rank();
    }
    (0..=top)
        .map(|k| by_size[k].len() - ranks[k] - ranks[k + 1])
        .collect()
}

/// Lattice points of the bounding box of all vertices of the arrangement
/// `<m, u_rho> = -a_rho`.
fn candidate_box(fan: &Fan, d: &TDivisor) -> Result<Vec<(i64, i64)>> {
    let n = fan.rank;
    let all: Vec<usize> = (0..fan.rays.len()).collect();
    let mut lo = vec![i64::MAX; n];
    let mut hi = vec![i64::MIN; n];
    for sub in subsets(&all, n) {
        let rays: Vec<&Vec<i64>> = sub.iter().map(|&i| &fan.rays[i]).collect();
        let b: Vec<i64> = sub.iter().map(|&i| -d.coeffs[i]).collect();
        if super::fan::rational_matrix(&rays).rank() < n {
            continue;
        }
        let m = solve_rays(&rays, &b).expect("independent rays give a vertex");
        for (k, q) in m.iter().enumerate() {
            lo[k] = lo[k].min(q.floor().to_integer().to_i64().unwrap());
            hi[k] = hi[k].max(q.ceil().to_integer().to_i64().unwrap());
        }
    }
    if lo.iter().any(|&x| x == i64::MAX) {
        return Err(Error::Fan("rays do not span the lattice".into()));
    }
    let size: u64 = lo.iter().zip(&hi).map(|(l, h)| (h - l + 1) as u64).product();
    if size > BOX_CAP {
        return Err(Error::Fan(format!("cohomology search box has {size} points")));
    }
    Ok(lo.into_iter().zip(hi).collect())
}

/// Degrees `m` with nonzero contribution and the `H^p` dimensions there.
pub fn cohomology_by_degree(fan: &Fan, d: &TDivisor) -> Result<Vec<(Vec<i64>, Vec<usize>)>> {
    if !fan.is_complete() {
        return Err(Error::Fan(format!("{} is not complete", fan.name)));
    }
    if d.coeffs.len() != fan.rays.len() {
        return Err(Error::SizeMismatch(format!(
            "divisor has {} coefficients for {} rays",
            d.coeffs.len(),
            fan.rays.len()
        )));
    }
    let n = fan.rank;
    let bounds = candidate_box(fan, d)?;
    let mut cache: HashMap<Vec<bool>, Vec<usize>> = HashMap::new();
    let mut out = Vec::new();
    let mut m: Vec<i64> = bounds.iter().map(|b| b.0).collect();
    loop {
        let neg: Vec<bool> = fan
            .rays
            .iter()
            .zip(&d.coeffs)
            .map(|(u, &a)| dot(&m, u) < -a)
            .collect();
        let h = cache
            .entry(neg.clone())
            .or_insert_with(|| {
                let faces: Vec<Vec<usize>> = fan
                    .cones
                    .iter()
                    .map(|c| c.iter().copied().filter(|&i| neg[i]).collect::<Vec<_>>())
                    .filter(|f| !f.is_empty())
                    .collect();
                let betti = reduced_betti(&faces);
                let mut h = vec![0; n + 1];
                for (q1, &b) in betti.iter().enumerate() {
                    if q1 <= n {
                        h[q1] = b;
                    }
                }
                h
            })
            .clone();
        if h.iter().any(|&x| x > 0) {
            out.push((m.clone(), h));
        }
        let mut k = 0;
        loop {
            if k == n {
                return Ok(out);
            }
            if m[k] < bounds[k].1 {
                m[k] += 1;
                break;
            }
            m[k] = bounds[k].0;
            k += 1;
        }
    }
}

/// `dim H^p(X, O(D))` for `p = 0..=rank`.
pub fn cohomology(fan: &Fan, d: &TDivisor) -> Result<Vec<usize>> {
    let mut total = vec![0; fan.rank + 1];
    for (_, h) in cohomology_by_degree(fan, d)? {
        for (t, x) in total.iter_mut().zip(h) {
            *t += x;
        }
    }
    Ok(total)
}

/// Euler characteristic `sum (-1)^p h^p`.
pub fn euler_characteristic(h: &[usize]) -> i64 {
    h.iter()
        .enumerate()
        .map(|(p, &x)| if p.is_even() { x as i64 } else { -(x as i64) })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn betti_of_small_complexes() {
        assert_eq!(reduced_betti(&[]), vec![1]);
        assert_eq!(reduced_betti(&[vec![0]]), vec![0, 0]);
        assert_eq!(reduced_betti(&[vec![0], vec![1]]), vec![0, 1]);
        // boundary of a triangle
        assert_eq!(reduced_betti(&[vec![0, 1], vec![1, 2], vec![0, 2]]), vec![0, 0, 1]);
    }

    #[test]
    fn projective_line() {
        let f = Fan::new("P1", 1, vec![vec![1], vec![-1]], vec![vec![0], vec![1]]).unwrap();
        for (a, want) in [(0, vec![1, 0]), (3, vec![4, 0]), (-1, vec![0, 0]), (-4, vec![0, 3])] {
            assert_eq!(cohomology(&f, &TDivisor::new(vec![a, 0])).unwrap(), want, "O({a})");
        }
    }
}
