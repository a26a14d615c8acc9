//! Class groups, Cartier divisors and intersection numbers with curves.


use super::fan::{solve_rays, Fan, TDivisor, Wall};
use crate::error::{Error, Result};

/// `Cl(X) = Z^rays / M`, presented by the Smith form of the ray matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassGroup {
    /// Invariant factors greater than one.
    pub torsion: Vec<i64>,
    pub free_rank: usize,
    /// Unimodular row transform `U` with `U * rays` in Smith form.
    u: Vec<Vec<i64>>,
    diag: Vec<i64>,
}

/// Smith form of an integer matrix: returns the diagonal and the row
/// transform `U`.
pub fn smith_normal_form(mut a: Vec<Vec<i64>>) -> (Vec<i64>, Vec<Vec<i64>>) {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut u: Vec<Vec<i64>> = (0..rows).map(|i| (0..rows).map(|j| i64::from(i == j)).collect()).collect();
    let mut diag = Vec::new();
    for t in 0..rows.min(cols) {
        loop {
            let pivot = (t..rows)
                .flat_map(|i| (t..cols).map(move |j| (i, j)))
                .filter(|&(i, j)| a[i][j] != 0)
                .min_by_key(|&(i, j)| a[i][j].abs());
            let Some((pi, pj)) = pivot else {
                return (diag, u);
            };
            a.swap(t, pi);
            u.swap(t, pi);
            for row in a.iter_mut() {
                row.swap(t, pj);
            }
            let p = a[t][t];
            let mut clean = true;
            for i in t + 1..rows {
                let q = a[i][t] / p;
                if q != 0 {
                    for j in 0..cols {
                        a[i][j] -= q * a[t][j];
                    }
                    for j in 0..rows {
                        u[i][j] -= q * u[t][j];
                    }
                }
                clean &= a[i][t] == 0;
            }
            for j in t + 1..cols {
                let q = a[t][j] / p;
                if q != 0 {
                    for row in a.iter_mut() {
                        row[j] -= q * row[t];
                    }
                }
                clean &= a[t][j] == 0;
            }
            if !clean {
                continue;
            }
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| a[i][j] % p != 0));
            match bad {
                Some(i) => {
                    for j in 0..cols {
                        a[t][j] += a[i][j];
                    }
                    for j in 0..rows {
                        u[t][j] += u[i][j];
                    }
                }
                None => break,
            }
        }
        if a[t][t] < 0 {
            a[t][t] = -a[t][t];
            for x in u[t].iter_mut() {
                *x = -*x;
            }
        }
        diag.push(a[t][t]);
    }
    (diag, u)
}

impl ClassGroup {
    pub fn of(fan: &Fan) -> ClassGroup {
        let (diag, u) = smith_normal_form(fan.rays.clone());
        ClassGroup {
            torsion: diag.iter().copied().filter(|&d| d > 1).collect(),
            free_rank: fan.rays.len() - diag.len(),
            u,
            diag,
        }
    }

    /// Coordinates of the class of `d`: torsion parts first, reduced into
    /// `[0, d_i)`, then the free part.
    pub fn class_of(&self, d: &TDivisor) -> Vec<i64> {
        let v: Vec<i64> = self
            .u
            .iter()
            .map(|row| row.iter().zip(&d.coeffs).map(|(a, b)| a * b).sum())
            .collect();
        let mut out = Vec::new();
        for (i, &di) in self.diag.iter().enumerate() {
            if di > 1 {
                out.push(v[i].rem_euclid(di));
            }
        }
        out.extend_from_slice(&v[self.diag.len()..]);
        out
    }

    pub fn linearly_equivalent(&self, a: &TDivisor, b: &TDivisor) -> bool {
        self.class_of(a) == self.class_of(b)
    }
}

impl std::fmt::Display for ClassGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts: Vec<String> = self.torsion.iter().map(|d| format!("Z/{d}")).collect();
        if self.free_rank > 0 {
            parts.push(if self.free_rank == 1 { "Z".into() } else { format!("Z^{}", self.free_rank) });
        }
        if parts.is_empty() {
            parts.push("0".into());
        }
        f.write_str(&parts.join(" + "))
    }
}

/// Whether `d` is Cartier: on every maximal cone some integral `m` has
/// `<m, u_rho> = -a_rho` for all rays of the cone.
pub fn weil_is_cartier(fan: &Fan, d: &TDivisor) -> bool {
    fan.cones.iter().all(|c| {
        let rays: Vec<&Vec<i64>> = c.iter().map(|&i| &fan.rays[i]).collect();
        let b: Vec<i64> = c.iter().map(|&i| -d.coeffs[i]).collect();
        solve_rays(&rays, &b).is_some_and(|m| m.iter().all(|q| q.is_integer()))
    })
}

/// Intersection number `D . C` with the curve of a wall between two smooth
/// maximal cones: writing `u_a + u_b + sum b_i u_i = 0` over the rays of the
/// wall, `D . C = a_a + a_b + sum a_i b_i`.
pub fn intersect_curve(fan: &Fan, d: &TDivisor, wall: &Wall) -> Result<i64> {
    for &c in &wall.cones {
        if !fan.is_unimodular(&fan.cones[c]) {
            return Err(Error::Fan(format!(
                "cone {:?} next to wall {:?} is not smooth",
                fan.cones[c], wall.rays
            )));
        }
    }
    let rays: Vec<Vec<i64>> = (0..fan.rank)
        .map(|r| wall.rays.iter().map(|&i| fan.rays[i][r]).collect())
        .collect();
    let refs: Vec<&Vec<i64>> = rays.iter().collect();
    let rhs: Vec<i64> = (0..fan.rank)
        .map(|r| -(fan.rays[wall.a][r] + fan.rays[wall.b][r]))
        .collect();
    let b = solve_rays(&refs, &rhs)
        .filter(|b| b.iter().all(|q| q.is_integer()))
        .ok_or_else(|| Error::Fan(format!("no integral wall relation for {:?}", wall.rays)))?;
    let mut total = d.coeffs[wall.a] + d.coeffs[wall.b];
    for (&i, q) in wall.rays.iter().zip(&b) {
        let bi: i64 = q.to_integer().try_into().map_err(|_| Error::Fan("wall relation overflow".into()))?;
        total += d.coeffs[i] * bi;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smith_form_of_weighted_projective_plane() {
        // P(1,1,2): rays e1, e2, -e1-2e2
        let f = Fan::new("P112", 2, vec![vec![1, 0], vec![0, 1], vec![-1, -2]], vec![vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        let cl = ClassGroup::of(&f);
        assert_eq!(cl.to_string(), "Z");
        // D_2 is not Cartier, 2 D_2 is
        assert!(!weil_is_cartier(&f, &TDivisor::new(vec![0, 0, 1])));
        assert!(weil_is_cartier(&f, &TDivisor::new(vec![0, 0, 2])));
    }

    #[test]
    fn torsion_class_group() {
        // P^2 / (Z/3): rays with a torsion quotient
        let f = Fan::new("Q", 2, vec![vec![1, 0], vec![1, 3], vec![-2, -3]], vec![vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        let (diag, _) = smith_normal_form(f.rays.clone());
        assert_eq!(diag.iter().product::<i64>(), 3);
        assert_eq!(ClassGroup::of(&f).to_string(), "Z/3 + Z");
    }
}
