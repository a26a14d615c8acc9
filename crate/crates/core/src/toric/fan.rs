//! Complete fans, torus-invariant divisors and their text formats.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::algebra::{Field, FieldMatrix};
use crate::error::{Error, Result};

/// A fan in `N = Z^rank` given by primitive rays and its maximal cones.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fan {
    pub name: String,
    pub rank: usize,
    pub rays: Vec<Vec<i64>>,
    /// Maximal cones as sorted lists of ray indices.
    pub cones: Vec<Vec<usize>>,
    /// Named divisors as coefficient vectors on the rays.
    pub divisors: BTreeMap<String, Vec<i64>>,
    complete: bool,
}

/// A torus-invariant Weil divisor `sum a_rho D_rho`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TDivisor {
    pub coeffs: Vec<i64>,
}

/// A torus-invariant curve: the wall `tau` shared by two maximal cones, with
/// `a` and `b` the rays of those cones outside `tau`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Wall {
    pub rays: Vec<usize>,
    pub a: usize,
    pub b: usize,
    pub cones: [usize; 2],
}

impl TDivisor {
    pub fn new(coeffs: Vec<i64>) -> TDivisor {
        TDivisor { coeffs }
    }

    pub fn zero(n: usize) -> TDivisor {
        TDivisor { coeffs: vec![0; n] }
    }

    pub fn add(&self, o: &TDivisor) -> TDivisor {
        TDivisor::new(self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, o: &TDivisor) -> TDivisor {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> TDivisor {
        self.scale(-1)
    }

    pub fn scale(&self, k: i64) -> TDivisor {
        TDivisor::new(self.coeffs.iter().map(|a| a * k).collect())
    }
}

impl fmt::Display for TDivisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|a| a.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

pub(crate) fn rational_matrix(rows: &[&Vec<i64>]) -> FieldMatrix {
    let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
    FieldMatrix::from_i64(&Field::Rational, &refs)
}

/// Solves `U m = b` where the rows of `U` are the given rays. `None` if the
/// system is inconsistent.
pub(crate) fn solve_rays(rays: &[&Vec<i64>], b: &[i64]) -> Option<Vec<BigRational>> {
    let u = rational_matrix(rays);
    let rhs: Vec<_> = b.iter().map(|&v| Field::Rational.from_i64(v)).collect();
    u.solve(&rhs)
        .map(|x| x.into_iter().map(|e| e.as_rational().unwrap()).collect())
}

/// Integer determinant by fraction-free elimination.
pub(crate) fn determinant(mut m: Vec<Vec<i64>>) -> i64 {
    let n = m.len();
    let mut sign = 1;
    let mut prev = 1i64;
    for k in 0..n {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&r| m[r][k] != 0) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    if n == 0 {
        1
    } else {
        sign * m[n - 1][n - 1]
    }
}

pub(crate) fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Integer points of `[-r, r]^n` without the origin.
fn small_vectors(n: usize, r: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut v = vec![-r; n];
    loop {
        if v.iter().any(|&x| x != 0) {
            out.push(v.clone());
        }
        let mut i = 0;
        loop {
            if i == n {
                return out;
            }
            if v[i] < r {
                v[i] += 1;
                break;
            }
            v[i] = -r;
            i += 1;
        }
    }
}

pub(crate) fn subsets(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(items: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            cur.push(items[i]);
            go(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    go(items, k, 0, &mut cur, &mut out);
    out
}

impl Fan {
    /// Validates primitivity, strong convexity and dimension of every cone,
    /// and that no facet is shared by more than two cones. Completeness is
    /// recorded rather than required.
    pub fn new(name: &str, rank: usize, rays: Vec<Vec<i64>>, cones: Vec<Vec<usize>>) -> Result<Fan> {
        for (i, r) in rays.iter().enumerate() {
            if r.len() != rank {
                return Err(Error::Fan(format!("ray {i} has length {}, expected {rank}", r.len())));
            }
            let g = r.iter().fold(0i64, |g, &x| g.gcd(&x));
            if g != 1 {
                return Err(Error::Fan(format!("ray {i} = {r:?} is not primitive")));
            }
        }
        let mut sorted = Vec::with_capacity(cones.len());
        for c in cones {
            let mut c = c;
            c.sort_unstable();
            c.dedup();
            if let Some(&bad) = c.iter().find(|&&i| i >= rays.len()) {
                return Err(Error::Fan(format!("cone refers to missing ray {bad}")));
            }
            sorted.push(c);
        }
        let mut fan = Fan {
            name: name.to_string(),
            rank,
            rays,
            cones: sorted,
            divisors: BTreeMap::new(),
            complete: false,
        };
        for c in &fan.cones {
            let vs: Vec<&Vec<i64>> = c.iter().map(|&i| &fan.rays[i]).collect();
            if rational_matrix(&vs).rank() != rank {
                return Err(Error::Fan(format!("cone {c:?} is not full-dimensional")));
            }
            if !fan.strongly_convex(c) {
                return Err(Error::Fan(format!("cone {c:?} is not strongly convex")));
            }
        }
        let mut facet_count: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
        for c in &fan.cones {
            for f in fan.facets(c) {
                *facet_count.entry(f).or_default() += 1;
            }
        }
        if let Some((f, _)) = facet_count.iter().find(|(_, &n)| n > 2) {
            return Err(Error::Fan(format!("facet {f:?} lies in more than two cones")));
        }
        let closed = facet_count.values().all(|&n| n == 2);
        fan.complete = closed && fan.covers_sample();
        Ok(fan)
    }

    pub fn with_divisor(mut self, name: &str, coeffs: Vec<i64>) -> Result<Fan> {
        if coeffs.len() != self.rays.len() {
            return Err(Error::SizeMismatch(format!(
                "divisor {name} has {} coefficients for {} rays",
                coeffs.len(),
                self.rays.len()
            )));
        }
        self.divisors.insert(name.to_string(), coeffs);
        Ok(self)
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn is_simplicial(&self) -> bool {
        self.cones.iter().all(|c| c.len() == self.rank)
    }

    /// Every maximal cone is generated by a basis of the lattice.
    pub fn is_smooth(&self) -> bool {
        self.cones.iter().all(|c| self.is_unimodular(c))
    }

    pub fn is_unimodular(&self, cone: &[usize]) -> bool {
        if cone.len() != self.rank {
            return false;
        }
        let vs: Vec<Vec<i64>> = cone.iter().map(|&i| self.rays[i].clone()).collect();
        determinant(vs).abs() == 1
    }

    fn strongly_convex(&self, cone: &[usize]) -> bool {
        (1..=4).any(|r| {
            small_vectors(self.rank, r)
                .iter()
                .any(|m| cone.iter().all(|&i| dot(m, &self.rays[i]) > 0))
        })
    }

    /// Facets of a full-dimensional cone, as sorted ray index sets.
    fn facets(&self, cone: &[usize]) -> Vec<Vec<usize>> {
        let mut out = BTreeSet::new();
        for sub in subsets(cone, self.rank - 1) {
            let vs: Vec<&Vec<i64>> = sub.iter().map(|&i| &self.rays[i]).collect();
            let k = rational_matrix(&vs).kernel_basis();
            if k.cols != 1 {
                continue;
            }
            let h: Vec<BigRational> = (0..self.rank).map(|r| k.get(r, 0).as_rational().unwrap()).collect();
            let side = |i: usize| -> BigRational {
                h.iter()
                    .zip(&self.rays[i])
                    .map(|(a, &b)| a * BigRational::from_integer(b.into()))
                    .fold(BigRational::zero(), |s, x| s + x)
            };
            let vals: Vec<BigRational> = cone.iter().map(|&i| side(i)).collect();
            let pos = vals.iter().any(|v| v.is_positive());
            let neg = vals.iter().any(|v| v.is_negative());
            if pos && neg {
                continue;
            }
            let facet: Vec<usize> = cone.iter().zip(&vals).filter(|(_, v)| v.is_zero()).map(|(&i, _)| i).collect();
            out.insert(facet);
        }
        out.into_iter().collect()
    }

    /// Whether `v` lies in the cone, by Carathéodory over bases of rays.
    pub fn cone_contains(&self, cone: &[usize], v: &[i64]) -> bool {
        subsets(cone, self.rank).iter().any(|sub| {
            let vs: Vec<Vec<i64>> = (0..self.rank)
                .map(|r| sub.iter().map(|&i| self.rays[i][r]).collect())
                .collect();
            let refs: Vec<&Vec<i64>> = vs.iter().collect();
            let m = rational_matrix(&refs);
            if m.rank() != self.rank {
                return false;
            }
            let rhs: Vec<_> = v.iter().map(|&x| Field::Rational.from_i64(x)).collect();
            match m.solve(&rhs) {
                Some(l) => l.iter().all(|x| !x.as_rational().unwrap().is_negative()),
                None => false,
            }
        })
    }

    fn covers_sample(&self) -> bool {
        let r = if self.rank <= 3 { 2 } else { 1 };
        small_vectors(self.rank, r)
            .iter()
            .all(|v| self.cones.iter().any(|c| self.cone_contains(c, v)))
    }

    /// All walls between pairs of maximal cones.
    pub fn walls(&self) -> Vec<Wall> {
        let mut owners: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
        for (ci, c) in self.cones.iter().enumerate() {
            for f in self.facets(c) {
                owners.entry(f).or_default().push(ci);
            }
        }
        owners
            .into_iter()
            .filter(|(_, cs)| cs.len() == 2)
            .filter_map(|(f, cs)| {
                let outside = |ci: usize| -> Vec<usize> {
                    self.cones[ci].iter().copied().filter(|i| !f.contains(i)).collect()
                };
                let (oa, ob) = (outside(cs[0]), outside(cs[1]));
                if oa.len() != 1 || ob.len() != 1 {
                    return None;
                }
                Some(Wall {
                    rays: f,
                    a: oa[0],
                    b: ob[0],
                    cones: [cs[0], cs[1]],
                })
            })
            .collect()
    }

    /// The wall whose rays are exactly `rays`.
    pub fn wall(&self, rays: &[usize]) -> Result<Wall> {
        let mut want = rays.to_vec();
        want.sort_unstable();
        self.walls()
            .into_iter()
            .find(|w| w.rays == want)
            .ok_or_else(|| Error::Fan(format!("{want:?} is not a wall between two maximal cones")))
    }

    /// The divisor `D_i` of a single ray.
    pub fn ray_divisor(&self, i: usize) -> TDivisor {
        let mut c = vec![0; self.rays.len()];
        c[i] = 1;
        TDivisor::new(c)
    }

    /// `K = -sum D_rho`.
    pub fn canonical(&self) -> TDivisor {
        TDivisor::new(vec![-1; self.rays.len()])
    }

    /// `div(chi^m) = sum <m, u_rho> D_rho`.
    pub fn principal(&self, m: &[i64]) -> TDivisor {
        TDivisor::new(self.rays.iter().map(|u| dot(m, u)).collect())
    }

    /// Parses a divisor: either a coefficient list `[a_0, ..., a_r]` or an
    /// integer combination of named divisors such as `-H+2E1+E2`. Besides
    /// the named divisors, `D<i>` is the divisor of ray `i` and `K` is the
    /// canonical divisor.
    pub fn divisor(&self, expr: &str) -> Result<TDivisor> {
        let s: String = expr.chars().filter(|c| !c.is_whitespace()).collect();
        if s.starts_with('[') {
            let coeffs: Vec<i64> = serde_json::from_str(&s)
                .map_err(|e| Error::Parse { pos: e.column().saturating_sub(1), msg: e.to_string() })?;
            if coeffs.len() != self.rays.len() {
                return Err(Error::SizeMismatch(format!(
                    "divisor has {} coefficients for {} rays",
                    coeffs.len(),
                    self.rays.len()
                )));
            }
            return Ok(TDivisor::new(coeffs));
        }
        let bytes = s.as_bytes();
        let mut total = TDivisor::zero(self.rays.len());
        let mut pos = 0;
        if s.is_empty() {
            return Err(Error::Parse { pos: 0, msg: "empty divisor".into() });
        }
        while pos < bytes.len() {
            let start = pos;
            let mut sign = 1;
            if bytes[pos] == b'+' || bytes[pos] == b'-' {
                if bytes[pos] == b'-' {
                    sign = -1;
                }
                pos += 1;
            } else if start > 0 {
                return Err(Error::Parse { pos, msg: "expected + or -".into() });
            }
            let ds = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            let coef: i64 = if pos > ds { s[ds..pos].parse().unwrap() } else { 1 };
            if pos < bytes.len() && bytes[pos] == b'*' {
                pos += 1;
            }
            let ns = pos;
            while pos < bytes.len() && (bytes[pos].is_ascii_alphanumeric() || bytes[pos] == b'_' || bytes[pos] == b'\'') {
                pos += 1;
            }
            let name = &s[ns..pos];
            let term = if name.is_empty() {
                if pos == ds {
                    return Err(Error::Parse { pos, msg: "expected a term".into() });
                }
                if coef != 0 {
                    return Err(Error::Parse { pos, msg: "bare integers other than 0 are not divisors".into() });
                }
                TDivisor::zero(self.rays.len())
            } else {
                self.named(name).ok_or_else(|| Error::Parse {
                    pos: ns,
                    msg: format!("unknown divisor `{name}` on {}", self.name),
                })?
            };
            total = total.add(&term.scale(sign * coef));
        }
        Ok(total)
    }

    fn named(&self, name: &str) -> Option<TDivisor> {
        if let Some(c) = self.divisors.get(name) {
            return Some(TDivisor::new(c.clone()));
        }
        if name == "K" {
            return Some(self.canonical());
        }
        let i: usize = name.strip_prefix('D')?.parse().ok()?;
        (i < self.rays.len()).then(|| self.ray_divisor(i))
    }

    /// Parses `fan rank=3 rays=[[...]] cones=[[...]]`, optionally followed by
    /// `name=<id>` and any number of `divisor <NAME>=[...]` entries.
    pub fn parse(text: &str) -> Result<Fan> {
        let body = text.trim();
        let rest = body
            .strip_prefix("fan")
            .ok_or_else(|| Error::Parse { pos: 0, msg: "fan description must start with `fan`".into() })?;
        let mut rank = None;
        let mut rays: Option<Vec<Vec<i64>>> = None;
        let mut cones: Option<Vec<Vec<usize>>> = None;
        let mut name = "custom".to_string();
        let mut divisors = Vec::new();
        let mut pending_divisor = false;
        let offset = body.len() - rest.len();
        let mut pos = 0;
        let b = rest.as_bytes();
        while pos < b.len() {
            if b[pos].is_ascii_whitespace() {
                pos += 1;
                continue;
            }
            let ks = pos;
            while pos < b.len() && b[pos] != b'=' && !b[pos].is_ascii_whitespace() {
                pos += 1;
            }
            let key = &rest[ks..pos];
            if key == "divisor" {
                pending_divisor = true;
                continue;
            }
            if pos >= b.len() || b[pos] != b'=' {
                return Err(Error::Parse { pos: offset + pos, msg: format!("expected `=` after `{key}`") });
            }
            pos += 1;
            let vs = pos;
            if pos < b.len() && b[pos] == b'[' {
                let mut depth = 0;
                while pos < b.len() {
                    match b[pos] {
                        b'[' => depth += 1,
                        b']' => {
                            depth -= 1;
                            if depth == 0 {
                                pos += 1;
                                break;
                            }
                        }
                        _ => {}
                    }
                    pos += 1;
                }
                if depth != 0 {
                    return Err(Error::Parse { pos: offset + vs, msg: "unbalanced brackets".into() });
                }
            } else {
                while pos < b.len() && !b[pos].is_ascii_whitespace() {
                    pos += 1;
                }
            }
            let value = &rest[vs..pos];
            let json_err = |e: serde_json::Error| Error::Parse { pos: offset + vs, msg: e.to_string() };
            if pending_divisor {
                let coeffs: Vec<i64> = serde_json::from_str(value).map_err(json_err)?;
                divisors.push((key.to_string(), coeffs));
                pending_divisor = false;
                continue;
            }
            match key {
                "rank" => {
                    rank = Some(value.parse::<usize>().map_err(|e| Error::Parse {
                        pos: offset + vs,
                        msg: e.to_string(),
                    })?)
                }
                "rays" => rays = Some(serde_json::from_str(value).map_err(json_err)?),
                "cones" => cones = Some(serde_json::from_str(value).map_err(json_err)?),
                "name" => name = value.to_string(),
                _ => return Err(Error::Parse { pos: offset + ks, msg: format!("unknown key `{key}`") }),
            }
        }
        let missing = |k: &str| Error::Parse { pos: 0, msg: format!("fan description lacks `{k}`") };
        let rays = rays.ok_or_else(|| missing("rays"))?;
        let cones = cones.ok_or_else(|| missing("cones"))?;
        let rank = rank.or_else(|| rays.first().map(|r| r.len())).ok_or_else(|| missing("rank"))?;
        let mut fan = Fan::new(&name, rank, rays, cones)?;
        for (n, c) in divisors {
            fan = fan.with_divisor(&n, c)?;
        }
        Ok(fan)
    }
}

impl fmt::Display for Fan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "fan name={} rank={} rays={} cones={}",
            self.name,
            self.rank,
            serde_json::to_string(&self.rays).unwrap(),
            serde_json::to_string(&self.cones).unwrap()
        )?;
        for (n, c) in &self.divisors {
            write!(f, " divisor {n}={}", serde_json::to_string(c).unwrap())?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p2() -> Fan {
        Fan::new("P2", 2, vec![vec![1, 0], vec![0, 1], vec![-1, -1]], vec![vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap()
    }

    #[test]
    fn p2_is_complete_and_smooth() {
        let f = p2();
        assert!(f.is_complete());
        assert!(f.is_smooth());
        assert_eq!(f.walls().len(), 3);
    }

    #[test]
    fn rejects_bad_fans() {
        assert!(Fan::new("x", 2, vec![vec![2, 0], vec![0, 1]], vec![vec![0, 1]]).is_err());
        assert!(Fan::new("x", 2, vec![vec![1, 0], vec![-1, 0]], vec![vec![0, 1]]).is_err());
        let half = Fan::new("x", 2, vec![vec![1, 0], vec![0, 1]], vec![vec![0, 1]]).unwrap();
        assert!(!half.is_complete());
    }

    #[test]
    fn divisor_expressions() {
        let f = p2().with_divisor("H", vec![0, 0, 1]).unwrap();
        assert_eq!(f.divisor("-3H").unwrap().coeffs, vec![0, 0, -3]);
        assert_eq!(f.divisor("D0 - 2*D1 + K").unwrap().coeffs, vec![0, -3, -1]);
        assert_eq!(f.divisor("[1,2,3]").unwrap().coeffs, vec![1, 2, 3]);
        assert_eq!(f.divisor("0").unwrap().coeffs, vec![0, 0, 0]);
        assert!(f.divisor("Q").is_err());
    }

    #[test]
    fn text_round_trip() {
        let f = p2().with_divisor("H", vec![0, 0, 1]).unwrap();
        let g = Fan::parse(&f.to_string()).unwrap();
        assert_eq!(f, g);
        let h = Fan::parse("fan rank=2 rays=[[1,0],[0,1],[-1,-1]] cones=[[0,1],[1,2],[0,2]]").unwrap();
        assert!(h.is_complete());
    }
}
