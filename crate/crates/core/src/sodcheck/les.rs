//! Dimension bookkeeping along the long exact Ext sequence of a short
//! exact sequence `0 -> A -> E -> B -> 0`.
//!
//! Writing the sequence as `... -> X_p -> Ext^p(E) -> Y_p -> X_{p+1} -> ...`
//! with connecting maps `delta_p: Y_p -> X_{p+1}` of rank `c_p`, we get
//! `dim Ext^p(E) = x_p + y_p - c_{p-1} - c_p`. For `Ext(E, T)` the roles are
//! `X = Ext(B, T)`, `Y = Ext(A, T)`; for `Ext(T, E)` they are
//! `X = Ext(T, A)`, `Y = Ext(T, B)`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Variance {
    /// `Ext^p(E, T)`.
    Contravariant,
    /// `Ext^p(T, E)`.
    Covariant,
}

/// A dimension that is either determined or only bounded.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(untagged)]
pub enum Dim {
    Exact(usize),
    Range { lo: usize, hi: usize },
}

impl Dim {
    pub fn range(lo: usize, hi: usize) -> Dim {
        if lo == hi {
            Dim::Exact(lo)
        } else {
            Dim::Range { lo, hi }
        }
    }

    pub fn exact(&self) -> Option<usize> {
        match *self {
            Dim::Exact(d) => Some(d),
            Dim::Range { .. } => None,
        }
    }

    pub fn lo(&self) -> usize {
        match *self {
            Dim::Exact(d) => d,
            Dim::Range { lo, .. } => lo,
        }
    }

    pub fn hi(&self) -> usize {
        match *self {
            Dim::Exact(d) => d,
            Dim::Range { hi, .. } => hi,
        }
    }

    pub fn is_zero(&self) -> bool {
        *self == Dim::Exact(0)
    }
}

impl fmt::Display for Dim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dim::Exact(d) => write!(f, "{d}"),
            Dim::Range { lo, hi } => write!(f, "{lo}..{hi}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum RankClaim {
    Rank(usize),
    Zero,
    Injective,
    Surjective,
    Bijective,
}

/// An externally justified statement about the connecting map `delta_p`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Annotation {
    pub degree: usize,
    pub claim: RankClaim,
    pub statement: String,
    /// Where the claim comes from.
    pub source: String,
}

impl Annotation {
    pub fn new(degree: usize, claim: RankClaim, statement: &str, source: &str) -> Annotation {
        Annotation {
            degree,
            claim,
            statement: statement.to_string(),
            source: source.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LesComputation {
    pub variance: Variance,
    /// Ext dimensions involving `A`, indexed by `p`.
    pub sub: Vec<usize>,
    /// Ext dimensions involving `B`, indexed by `p`.
    pub quotient: Vec<usize>,
    pub annotations: Vec<Annotation>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LesResult {
    /// `dim Ext^p` involving `E`.
    pub dims: Vec<Dim>,
    /// Rank of `delta_p`.
    pub connecting: Vec<Dim>,
    /// Annotations that decided a rank, rendered for the report.
    pub used: Vec<String>,
}

/// Propagates dimensions along the sequence. Ranks are fixed when exactness
/// forces them (a zero end) or an annotation states them; otherwise the
/// result is an interval. Outputs cover `p < min(len(sub), len(quotient))`.
pub fn les_propagate(l: &LesComputation) -> Result<LesResult> {
    let (x, y) = match l.variance {
        Variance::Contravariant => (&l.quotient, &l.sub),
        Variance::Covariant => (&l.sub, &l.quotient),
    };
    let n = x.len().min(y.len());
    let mut ranks = Vec::with_capacity(n);
    let mut used = Vec::new();
    for p in 0..n {
        let next = x.get(p + 1).copied();
        let hi = next.map_or(y[p], |nx| y[p].min(nx));
        let notes: Vec<&Annotation> = l.annotations.iter().filter(|a| a.degree == p).collect();
        let mut fixed: Option<usize> = if hi == 0 { Some(0) } else { None };
        for a in notes {
            let bad = |msg: String| Error::Annotation { degree: p, msg };
            let r = match a.claim {
                RankClaim::Rank(r) => r,
                RankClaim::Zero => 0,
                RankClaim::Injective => y[p],
                RankClaim::Surjective => next.ok_or_else(|| bad("target dimension unknown".into()))?,
                RankClaim::Bijective => {
                    let nx = next.ok_or_else(|| bad("target dimension unknown".into()))?;
                    if nx != y[p] {
                        return Err(bad(format!("bijection between spaces of dimension {} and {nx}", y[p])));
                    }
                    nx
                }
            };
            if r > hi {
                return Err(bad(format!("rank {r} exceeds the bound {hi} ({})", a.statement)));
            }
            if matches!(a.claim, RankClaim::Injective) && next.is_some_and(|nx| nx < y[p]) {
                return Err(bad(format!("injective map into a smaller space ({})", a.statement)));
            }
            if let Some(f) = fixed {
                if f != r {
                    return Err(bad(format!("rank {r} contradicts rank {f} ({})", a.statement)));
                }
            }
            fixed = Some(r);
            used.push(format!("delta_{p}: {} [{}]", a.statement, a.source));
        }
        ranks.push(match fixed {
            Some(r) => Dim::Exact(r),
            None => Dim::range(0, hi),
        });
    }
    let dims = (0..n)
        .map(|p| {
            let base = x[p] + y[p];
            let (plo, phi) = if p == 0 { (0, 0) } else { (ranks[p - 1].lo(), ranks[p - 1].hi()) };
            Dim::range(base - phi - ranks[p].hi(), base - plo - ranks[p].lo())
        })
        .collect();
    Ok(LesResult {
        dims,
        connecting: ranks,
        used,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn les(variance: Variance, sub: &[usize], quotient: &[usize], ann: Vec<Annotation>) -> LesComputation {
        LesComputation {
            variance,
            sub: sub.to_vec(),
            quotient: quotient.to_vec(),
            annotations: ann,
        }
    }

    #[test]
    fn split_sequence_adds() {
        let zero = (0..3).map(|p| Annotation::new(p, RankClaim::Zero, "split", "test")).collect();
        let r = les_propagate(&les(Variance::Contravariant, &[1, 0, 2], &[0, 3, 0], zero)).unwrap();
        assert_eq!(r.dims, vec![Dim::Exact(1), Dim::Exact(3), Dim::Exact(2)]);
    }

    #[test]
    fn unforced_rank_gives_interval() {
        let r = les_propagate(&les(Variance::Contravariant, &[1, 0], &[0, 1], vec![])).unwrap();
        assert_eq!(r.dims[0], Dim::range(0, 1));
        assert_eq!(r.dims[1], Dim::range(0, 1));
        let ann = vec![Annotation::new(0, RankClaim::Injective, "class is nonzero", "test")];
        let r = les_propagate(&les(Variance::Contravariant, &[1, 0], &[0, 1], ann)).unwrap();
        assert_eq!(r.dims, vec![Dim::Exact(0), Dim::Exact(0)]);
    }

    #[test]
    fn inconsistent_annotation_names_degree() {
        let ann = vec![Annotation::new(1, RankClaim::Rank(2), "too big", "test")];
        let e = les_propagate(&les(Variance::Covariant, &[0, 0, 1], &[0, 1, 0], ann)).unwrap_err();
        assert_eq!(e, Error::Annotation { degree: 1, msg: "rank 2 exceeds the bound 1 (too big)".into() });
    }
}
