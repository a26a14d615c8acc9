//! Ordered collections of objects and their pairwise Ext matrices.

use serde::Serialize;

use super::les::{les_propagate, Annotation, Dim, LesComputation, Variance};
use crate::error::{Error, Result};
use crate::groebner::{ext_dims, FPModule, Grading};
use crate::toric::{cohomology, Fan, TDivisor};

/// An object of a collection.
#[derive(Clone, Debug)]
pub enum SodObject {
    /// `O(D)`; Ext groups are `H^p(D_j - D_i)` on the collection's fan.
    Divisor { label: String, divisor: TDivisor },
    /// A module over the collection's ring, Ext computed in the collection's grading.
    Module { label: String, module: FPModule },
    /// `0 -> sub -> E -> quotient -> 0` for earlier objects `sub`, `quotient`.
    Extension {
        label: String,
        sub: usize,
        quotient: usize,
        annotations: Vec<ExtensionNote>,
    },
}

/// A connecting-map statement for the sequence of `Ext(E, other)`
/// (contravariant) or `Ext(other, E)` (covariant).
#[derive(Clone, Debug)]
pub struct ExtensionNote {
    pub other: String,
    pub variance: Variance,
    pub annotation: Annotation,
}

impl SodObject {
    pub fn label(&self) -> &str {
        match self {
            SodObject::Divisor { label, .. } | SodObject::Module { label, .. } | SodObject::Extension { label, .. } => label,
        }
    }
}

#[derive(Clone, Debug)]
pub struct CollectionSpec {
    pub name: String,
    pub fan: Option<Fan>,
    pub grading: Grading,
    pub objects: Vec<SodObject>,
    pub p_max: usize,
}

impl CollectionSpec {
    /// Line bundles `O(D)` on a fan, given as divisor expressions.
    pub fn line_bundles(name: &str, fan: &Fan, divisors: &[&str]) -> Result<CollectionSpec> {
        let objects = divisors
            .iter()
            .map(|d| {
                Ok(SodObject::Divisor {
                    label: format!("O({d})"),
                    divisor: fan.divisor(d)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(CollectionSpec {
            name: name.to_string(),
            fan: Some(fan.clone()),
            grading: Grading::Total,
            objects,
            p_max: fan.rank,
        })
    }

    pub fn index(&self, label: &str) -> Option<usize> {
        self.objects.iter().position(|o| o.label() == label)
    }

    /// Checks that references point at earlier objects and kinds are
    /// supported on the collection's geometry.
    pub fn validate(&self) -> Result<()> {
        for (k, o) in self.objects.iter().enumerate() {
            match o {
                SodObject::Divisor { label, divisor } => {
                    let fan = self.fan.as_ref().ok_or_else(|| Error::Invalid(format!("{label}: no fan registered")))?;
                    if divisor.coeffs.len() != fan.rays.len() {
                        return Err(Error::SizeMismatch(format!("{label}: wrong number of coefficients")));
                    }
                }
                SodObject::Module { .. } => {}
                SodObject::Extension { label, sub, quotient, .. } => {
                    if *sub >= k || *quotient >= k {
                        return Err(Error::Invalid(format!("{label}: extension must refer to earlier objects")));
                    }
                }
            }
        }
        Ok(())
    }
}

fn exact_row(row: &[Dim], what: &str) -> Result<Vec<usize>> {
    row.iter()
        .map(|d| d.exact().ok_or_else(|| Error::Invalid(format!("{what} is only bounded: {d}"))))
        .collect()
}

/// `dim Ext^p(obj_i, obj_j)` for `p = 0..=p_max`.
pub fn ext_provider(c: &CollectionSpec, i: usize, j: usize, p_max: usize) -> Result<Vec<Dim>> {
    let (oi, oj) = match (c.objects.get(i), c.objects.get(j)) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err(Error::Invalid(format!("no object {i} or {j} in {}", c.name))),
    };
    if let SodObject::Extension { sub, quotient, annotations, .. } = oj {
        let a = exact_row(&ext_provider(c, i, *sub, p_max + 1)?, "Ext into the submodule")?;
        let b = exact_row(&ext_provider(c, i, *quotient, p_max + 1)?, "Ext into the quotient")?;
        return propagate(Variance::Covariant, a, b, annotations, oi.label(), p_max);
    }
    if let SodObject::Extension { sub, quotient, annotations, .. } = oi {
        let a = exact_row(&ext_provider(c, *sub, j, p_max + 1)?, "Ext from the submodule")?;
        let b = exact_row(&ext_provider(c, *quotient, j, p_max + 1)?, "Ext from the quotient")?;
        return propagate(Variance::Contravariant, a, b, annotations, oj.label(), p_max);
    }
    match (oi, oj) {
        (SodObject::Divisor { divisor: a, .. }, SodObject::Divisor { divisor: b, .. }) => {
            let fan = c.fan.as_ref().ok_or_else(|| Error::Invalid("no fan registered".into()))?;
            let h = cohomology(fan, &b.sub(a))?;
            Ok((0..=p_max).map(|p| Dim::Exact(h.get(p).copied().unwrap_or(0))).collect())
        }
        (SodObject::Module { module: a, .. }, SodObject::Module { module: b, .. }) => {
            Ok(ext_dims(a, b, p_max, c.grading)?.into_iter().map(Dim::Exact).collect())
        }
        _ => Err(Error::Invalid(format!(
            "cannot compare {} and {}: different kinds of object",
            oi.label(),
            oj.label()
        ))),
    }
}

fn propagate(
    variance: Variance,
    sub: Vec<usize>,
    quotient: Vec<usize>,
    notes: &[ExtensionNote],
    other: &str,
    p_max: usize,
) -> Result<Vec<Dim>> {
    let annotations = notes
        .iter()
        .filter(|n| n.variance == variance && n.other == other)
        .map(|n| n.annotation.clone())
        .collect();
    let r = les_propagate(&LesComputation {
        variance,
        sub,
        quotient,
        annotations,
    })?;
    Ok(r.dims.into_iter().take(p_max + 1).collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    /// `(i, j)` for `Ext^p(obj_i, obj_j)`.
    pub pair: (usize, usize),
    pub degree: usize,
    pub dim: Dim,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SodReport {
    pub collection: String,
    pub labels: Vec<String>,
    /// `matrix[i][j][p] = dim Ext^p(obj_i, obj_j)`.
    pub matrix: Vec<Vec<Vec<Dim>>>,
    pub exceptional: bool,
    pub strong: bool,
    pub semiorthogonal_to_f: Option<bool>,
    pub witnesses: Vec<Witness>,
    pub notes: Vec<String>,
}

impl SodReport {
    pub fn passed(&self) -> bool {
        self.exceptional && self.semiorthogonal_to_f != Some(false)
    }

    /// Recomputes the verdicts from the matrix.
    pub fn verdicts(matrix: &[Vec<Vec<Dim>>]) -> (bool, bool, Vec<Witness>) {
        let n = matrix.len();
        let mut witnesses = Vec::new();
        let mut exceptional = true;
        let mut strong = true;
        for i in 0..n {
            for j in 0..n {
                for (p, d) in matrix[i][j].iter().enumerate() {
                    let expected_one = i == j && p == 0;
                    let ok = if expected_one { *d == Dim::Exact(1) } else { d.is_zero() };
                    if ok {
                        continue;
                    }
                    if i == j || i > j {
                        exceptional = false;
                        let reason = if i == j {
                            "endomorphisms must be k with no self-extensions".to_string()
                        } else {
                            "maps from a later object to an earlier one".to_string()
                        };
                        witnesses.push(Witness { pair: (i, j), degree: p, dim: *d, reason });
                    } else if p > 0 {
                        strong = false;
                        witnesses.push(Witness {
                            pair: (i, j),
                            degree: p,
                            dim: *d,
                            reason: "higher extension in the allowed direction".into(),
                        });
                    }
                }
            }
        }
        (exceptional, exceptional && strong, witnesses)
    }
}

fn ext_matrix(c: &CollectionSpec) -> Result<Vec<Vec<Vec<Dim>>>> {
    use rayon::prelude::*;
    let n = c.objects.len();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect();
    let rows: Vec<Result<Vec<Dim>>> = pairs.par_iter().map(|&(i, j)| ext_provider(c, i, j, c.p_max)).collect();
    let mut matrix = vec![vec![Vec::new(); n]; n];
    for ((i, j), r) in pairs.into_iter().zip(rows) {
        matrix[i][j] = r?;
    }
    Ok(matrix)
}

/// Computes all pairwise Ext dimensions and decides whether the collection
/// is exceptional and strong exceptional.
pub fn check_exceptional(c: &CollectionSpec) -> Result<SodReport> {
    c.validate()?;
    let matrix = ext_matrix(c)?;
    let (exceptional, strong, witnesses) = SodReport::verdicts(&matrix);
    Ok(SodReport {
        collection: c.name.clone(),
        labels: c.objects.iter().map(|o| o.label().to_string()).collect(),
        matrix,
        exceptional,
        strong,
        semiorthogonal_to_f: None,
        witnesses,
        notes: Vec::new(),
    })
}

/// `Ext^p(L_i, O(C_j)) = H^p(Y, C'_j + D_i)` for `L_i = f_* O_Y(-D_i)` and
/// `O(C_j)` pulled back to `O(C'_j)`, then `Ext^p(F_i, O(C_j))` through the
/// sequences `0 -> L_{i'} -> F_i -> L_i -> 0`. The collection must consist
/// of divisors on the fan of `Y`.
pub fn check_orthogonal_to_f(c: &CollectionSpec, d: &[TDivisor; 2]) -> Result<SodReport> {
    let mut report = check_exceptional(c)?;
    let fan = c.fan.as_ref().ok_or_else(|| Error::Invalid("no fan registered".into()))?;
    let mut l_rows: Vec<Vec<Vec<usize>>> = Vec::new();
    let mut ok = true;
    for (i, di) in d.iter().enumerate() {
        let mut row = Vec::new();
        for (j, o) in c.objects.iter().enumerate() {
            let SodObject::Divisor { divisor, label } = o else {
                return Err(Error::Invalid(format!("{}: orthogonality needs line bundles", o.label())));
            };
            let h = cohomology(fan, &divisor.add(di))?;
            for (p, &x) in h.iter().enumerate() {
                if x != 0 {
                    ok = false;
                    report.witnesses.push(Witness {
                        pair: (i, j),
                        degree: p,
                        dim: Dim::Exact(x),
                        reason: format!("Ext^{p}(L_{}, {label}) != 0", i + 1),
                    });
                }
            }
            report
                .notes
                .push(format!("Ext(L_{}, {label}) = {h:?}", i + 1));
            row.push(h);
        }
        l_rows.push(row);
    }
    for i in 0..2 {
        let other = 1 - i;
        for (j, o) in c.objects.iter().enumerate() {
            let r = les_propagate(&LesComputation {
                variance: Variance::Contravariant,
                sub: l_rows[other][j].clone(),
                quotient: l_rows[i][j].clone(),
                annotations: Vec::new(),
            })?;
            if !r.dims.iter().all(Dim::is_zero) {
                ok = false;
                let p = r.dims.iter().position(|d| !d.is_zero()).unwrap();
                report.witnesses.push(Witness {
                    pair: (i, j),
                    degree: p,
                    dim: r.dims[p],
                    reason: format!("Ext^{p}(F_{}, {}) not forced to vanish", i + 1, o.label()),
                });
            }
        }
    }
    report.notes.push("Ext(F_i, -) derived from Ext(L_1, -) and Ext(L_2, -) by exactness".into());
    report.semiorthogonal_to_f = Some(ok);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::toric::library;

    #[test]
    fn backwards_pair_on_p3_fails() {
        let p3 = library("P3").unwrap();
        let c = CollectionSpec::line_bundles("backwards", &p3, &["H", "0"]).unwrap();
        let r = check_exceptional(&c).unwrap();
        assert!(!r.exceptional);
        let w = &r.witnesses[0];
        assert_eq!((w.pair, w.degree, w.dim), ((1, 0), 0, Dim::Exact(4)));
        let forward = CollectionSpec::line_bundles("forward", &p3, &["0", "H"]).unwrap();
        let r = check_exceptional(&forward).unwrap();
        assert!(r.exceptional && r.strong);
    }

    #[test]
    fn beilinson_collection() {
        let p3 = library("P3").unwrap();
        let c = CollectionSpec::line_bundles("Beilinson", &p3, &["0", "H", "2H", "3H"]).unwrap();
        let r = check_exceptional(&c).unwrap();
        assert!(r.strong, "{:?}", r.witnesses);
        assert_eq!(r.matrix[0][3][0], Dim::Exact(20));
    }
}
