//! Audit of the hypotheses that make a pair of rank-one reflexive sheaves
//! on a 3-fold with one node deform to a tilting-type object.
//!
//! Global conditions are computed on fans (a small resolution `Y` and the
//! singular `X`); local ones on the node `xy + zw = 0`, where the two
//! sheaves are the ideals of the two planes through the vertex.

use serde::Serialize;

use super::les::{les_propagate, Annotation, LesComputation, RankClaim, Variance};
use crate::error::Result;
use crate::groebner::{ext_dims, FPModule, Grading, QuotientRing};
use crate::ncdef::{flatness_filtration_check, matches_two_cycle, run, SimpleCollection};
use crate::toric::{cohomology, intersect_curve, library, Fan, TDivisor};

#[derive(Clone, Debug)]
pub struct LocalModel {
    pub ring: String,
    pub l1: String,
    pub l2: String,
    pub grading: Grading,
}

impl LocalModel {
    /// The node with an extra variable so that degree-zero parts see the
    /// projective cone over `P^1 x P^1`.
    pub fn node() -> LocalModel {
        LocalModel {
            ring: "Q[x,y,z,w,v]/(x*y+z*w)".into(),
            l1: "ideal (x, z)".into(),
            l2: "ideal (x, w)".into(),
            grading: Grading::Degree(0),
        }
    }

    pub fn modules(&self) -> Result<[FPModule; 2]> {
        let r = QuotientRing::parse(&self.ring)?;
        Ok([FPModule::parse(&self.l1, Some(&r))?, FPModule::parse(&self.l2, Some(&r))?])
    }
}

#[derive(Clone, Debug)]
pub struct OdpBundle {
    pub name: String,
    /// Small resolution.
    pub y: Fan,
    /// The singular variety; same rays as `y`.
    pub x: Fan,
    /// Rays of the wall of `y` whose curve is contracted.
    pub line: Vec<usize>,
    /// `L_i = f_* O_Y(-D_i)`.
    pub d: [TDivisor; 2],
    pub local: LocalModel,
}

impl OdpBundle {
    /// The projective cone over `P^1 x P^1` with `D_1` of class `(0,1)` and
    /// `D_2` of class `(1,0)`.
    pub fn quadric_cone() -> Result<OdpBundle> {
        let y = library("coneP1xP1_smallres")?;
        let d = [y.divisor("B")?, y.divisor("A")?];
        Ok(OdpBundle {
            name: "quadric cone".into(),
            x: library("coneP1xP1_projective")?,
            y,
            line: vec![1, 3],
            d,
            local: LocalModel::node(),
        })
    }

    /// `P^3` blown up in two points with the line through them contracted,
    /// `D_1 = -H + E1 + E2`, `D_2 = -E1`.
    pub fn blowup_p3() -> Result<OdpBundle> {
        let y = library("blowupP3_2pts")?;
        let d = [y.divisor("-H+E1+E2")?, y.divisor("-E1")?];
        Ok(OdpBundle {
            name: "two-point blowup of P3".into(),
            x: library("contractP3_2pts")?,
            y,
            line: vec![0, 1],
            d,
            local: LocalModel::node(),
        })
    }

    /// Same bundle with `D_i` replaced.
    pub fn with_divisor(mut self, i: usize, expr: &str) -> Result<OdpBundle> {
        self.d[i] = self.y.divisor(expr)?;
        self.name = format!("{} with D{} = {expr}", self.name, i + 1);
        Ok(self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: &str, passed: bool, detail: String) -> Check {
        Check {
            name: name.into(),
            passed,
            detail,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OdpAudit {
    pub bundle: String,
    pub conditions: Vec<Check>,
    pub conclusions: Vec<Check>,
    /// `dim End(F)` at the node when the deformation terminates.
    pub dim_r: Option<usize>,
    /// `local_ext[i][j][p] = dim Ext^p(L_i, L_j)` at the node.
    pub local_ext: Vec<Vec<Vec<usize>>>,
    pub assembly_rule: String,
}

impl OdpAudit {
    pub fn passed(&self) -> bool {
        self.conditions.iter().chain(&self.conclusions).all(|c| c.passed)
    }

    pub fn failed_conditions(&self) -> Vec<&Check> {
        self.conditions.iter().filter(|c| !c.passed).collect()
    }
}

pub const ASSEMBLY_RULE: &str = "Ext^p_X(L_i, L_j) = H^0(X, Ext^p(L_i, L_j)) once H^q(X, Hom(L_i, L_j)) = 0 for q > 0; \
the local sheaves Ext^p are supported at the node and computed there";

/// Checks the intersection numbers with the contracted curve, simplicity,
/// and vanishing of higher cohomology of `Hom(L_i, L_j)`, then runs the
/// local deformation and records its conclusions.
pub fn verify_odp_hypotheses(b: &OdpBundle) -> Result<OdpAudit> {
    let mut conditions = Vec::new();
    let wall = b.y.wall(&b.line)?;
    let dl: Vec<i64> = b
        .d
        .iter()
        .map(|d| intersect_curve(&b.y, d, &wall))
        .collect::<Result<_>>()?;
    conditions.push(Check::new(
        "intersection with the exceptional curve",
        dl == [1, -1],
        format!("(D1, l) = {}, (D2, l) = {}", dl[0], dl[1]),
    ));

    // Hom(L_i, L_j) = H^0(X, O_X(D_i - D_j)) for reflexive rank-one sheaves
    let mut hom = [[0usize; 2]; 2];
    let mut higher = Vec::new();
    for i in 0..2 {
        for j in 0..2 {
            let h = cohomology(&b.x, &b.d[i].sub(&b.d[j]))?;
            hom[i][j] = h[0];
            if h[1..].iter().any(|&v| v != 0) {
                higher.push(format!("H^*(X, D{} - D{}) = {h:?}", i + 1, j + 1));
            }
        }
    }
    conditions.push(Check::new(
        "simple collection",
        hom == [[1, 0], [0, 1]],
        format!("dim Hom(L_i, L_j) = {hom:?}"),
    ));
    conditions.push(Check::new(
        "no higher cohomology of Hom(L_i, L_j)",
        higher.is_empty(),
        if higher.is_empty() {
            "H^p(X, O_X(D_i - D_j)) = 0 for p > 0, all i, j".into()
        } else {
            higher.join("; ")
        },
    ));
    let y12 = cohomology(&b.y, &b.d[1].sub(&b.d[0]))?;
    let y21 = cohomology(&b.y, &b.d[0].sub(&b.d[1]))?;
    conditions.push(Check::new(
        "cohomology on the resolution",
        y12[0] == 0 && y21[0] == 0,
        format!("H^*(Y, -D1 + D2) = {y12:?}, H^*(Y, D1 - D2) = {y21:?}"),
    ));

    let [l1, l2] = b.local.modules()?;
    let ls = [l1, l2];
    let p_max = 4;
    let mut local_ext = vec![vec![Vec::new(); 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            local_ext[i][j] = ext_dims(&ls[i], &ls[j], p_max + 1, b.local.grading)?;
        }
    }
    let mut conclusions = Vec::new();
    let mut dim_r = None;
    if conditions.iter().all(|c| c.passed) {
        let c = SimpleCollection::new(ls.to_vec(), b.local.grading)?;
        let rep = run(&c, crate::ncdef::DEFAULT_MAX_ITER)?;
        let s = rep.final_state();
        conclusions.push(Check::new(
            "deformation terminates",
            rep.terminated(),
            format!("{:?}, dim R trajectory {:?}", rep.outcome, rep.dims),
        ));
        if rep.terminated() {
            dim_r = Some(s.dim());
            conclusions.push(Check::new(
                "parameter algebra",
                s.dim() == 4 && s.algebra.radical_square_zero() && matches_two_cycle(s),
                format!("dim R = {}, two arrows with all paths of length two zero", s.dim()),
            ));
            let f = flatness_filtration_check(s);
            conclusions.push(Check::new(
                "flat over R",
                f.flat,
                format!("multiplicities {:?}", f.multiplicities),
            ));
            let ff = s.self_ext(3)?;
            conclusions.push(Check::new(
                "Ext^p(F, F) = 0 for p = 1, 2, 3",
                ff[1..].iter().all(|&d| d == 0),
                format!("dim Ext^p(F, F) = {ff:?}"),
            ));
            conclusions.push(les_cross_check(&s.components.iter().map(|c| c.module.clone()).collect::<Vec<_>>(), &ls, &local_ext, b.local.grading, p_max)?);
        }
    }
    Ok(OdpAudit {
        bundle: b.name.clone(),
        conditions,
        conclusions,
        dim_r,
        local_ext,
        assembly_rule: ASSEMBLY_RULE.into(),
    })
}

/// Derives `Ext^p(F_i, L_j)` from the local table along
/// `0 -> L_{i'} -> F_i -> L_i -> 0`, using that the connecting maps are
/// Yoneda products with the nonzero extension class, and compares with a
/// direct computation.
fn les_cross_check(
    f: &[FPModule],
    ls: &[FPModule; 2],
    table: &[Vec<Vec<usize>>],
    grading: Grading,
    p_max: usize,
) -> Result<Check> {
    let mut derived = vec![vec![Vec::new(); 2]; 2];
    let mut direct = vec![vec![Vec::new(); 2]; 2];
    for i in 0..2 {
        let other = 1 - i;
        for j in 0..2 {
            let annotations = (0..=p_max)
                .map(|p| {
                    if p == 0 && j == other {
                        Annotation::new(0, RankClaim::Injective, "the identity of L_j maps to the extension class", "nonzero extension")
                    } else {
                        Annotation::new(p, RankClaim::Bijective, "Yoneda product with the class is an isomorphism", "2-periodicity at the node")
                    }
                })
                .filter(|a| {
                    let y = table[other][j].get(a.degree).copied().unwrap_or(0);
                    let x = table[i][j].get(a.degree + 1).copied().unwrap_or(0);
                    y > 0 || x > 0
                })
                .collect();
            let r = les_propagate(&LesComputation {
                variance: Variance::Contravariant,
                sub: table[other][j].clone(),
                quotient: table[i][j].clone(),
                annotations,
            })?;
            derived[i][j] = r.dims.iter().take(p_max).map(|d| d.to_string()).collect::<Vec<_>>();
            direct[i][j] = ext_dims(&f[i], &ls[j], p_max - 1, grading)?
                .iter()
                .map(|d| d.to_string())
                .collect::<Vec<_>>();
        }
    }
    Ok(Check::new(
        "Ext(F_i, L_j) by exactness agrees with direct computation",
        derived == direct,
        format!("derived {derived:?}, direct {direct:?}"),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn broken_divisor_fails_intersection() {
        let b = OdpBundle::blowup_p3().unwrap().with_divisor(1, "-2E1").unwrap();
        let a = verify_odp_hypotheses(&b).unwrap();
        let c = &a.conditions[0];
        assert!(!c.passed);
        assert!(c.detail.contains("(D2, l) = -2"), "{}", c.detail);
        assert!(a.conclusions.is_empty());
    }
}
