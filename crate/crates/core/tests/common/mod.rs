//! Property checks shared by the proptest suite and the acceptance target.
#![allow(dead_code)]

use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};

use singcat::algebra::{Field, FieldMatrix, FiniteDimAlgebra};
use singcat::groebner::{higher_ext_dims, resolve, FPModule, Grading, QuotientRing};
use singcat::matfac::{mf_shift, mf_stable_hom, MatrixFactorization};
use singcat::parse::{parse_poly, parse_ring};
use singcat::sodcheck::{les_propagate, Annotation, Dim, LesComputation, RankClaim, Variance};
use singcat::toric::{cohomology, euler_characteristic, library, Fan, TDivisor};

pub type Check = Result<(), TestCaseError>;

/// Polynomial text from `(coefficient, exponents)` terms in `x, y, z`.
pub fn poly_text(terms: &[(i64, [u8; 3])]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let parts: Vec<String> = terms
        .iter()
        .map(|(c, e)| {
            let mut s = format!("({c})");
            for (v, k) in ["x", "y", "z"].iter().zip(e) {
                if *k > 0 {
                    s.push_str(&format!("*{v}^{k}"));
                }
            }
            s
        })
        .collect();
    parts.join(" + ")
}

pub fn poly_terms() -> impl Strategy<Value = Vec<(i64, [u8; 3])>> {
    prop::collection::vec((-5i64..=5, [0u8..3, 0u8..3, 0u8..3]), 0..4)
}

pub fn poly_associative(a: &str, b: &str, c: &str) -> Check {
    let (r, _) = parse_ring("Q[x,y,z]").unwrap();
    let (a, b, c) = (parse_poly(&r, a).unwrap(), parse_poly(&r, b).unwrap(), parse_poly(&r, c).unwrap());
    prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
    Ok(())
}

pub fn small_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..5, 1usize..5).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-2i64..=2, c), r))
}

pub fn rank_nullity(rows: &[Vec<i64>]) -> Check {
    let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
    let m = FieldMatrix::from_i64(&Field::Rational, &refs);
    let k = m.kernel_basis();
    prop_assert_eq!(m.rank() + k.cols, m.cols);
    prop_assert!(m.mul(&k).is_zero());
    Ok(())
}

/// `k[t]/(t^2+1)` over `F_p` splits exactly when `-1` is a square mod `p`,
/// i.e. `p = 2` or `p = 1 mod 4`; at `p = 2` it is local.
pub fn idempotent_count(p: u64) -> Check {
    let f = Field::prime(p).unwrap();
    let a = FiniteDimAlgebra::quadratic_minus_one(&f);
    let idem = a.idempotents().unwrap();
    prop_assert!(idem.iter().all(|e| a.is_idempotent(e)));
    let expected = if p % 4 == 1 { 4 } else { 2 };
    prop_assert_eq!(idem.len(), expected, "p = {}", p);
    let s = FiniteDimAlgebra::split(&f);
    prop_assert_eq!(s.idempotents().unwrap().len(), 4);
    Ok(())
}

pub const CONE: &str = "Q[x,y,z,w]/(x*y+z*w)";

/// Monomial or binomial generators for a cyclic module over the cone ring.
pub fn cone_generators() -> impl Strategy<Value = Vec<String>> {
    let var = prop::sample::select(vec!["x", "y", "z", "w"]);
    let mono = (var.clone(), 1u8..3).prop_map(|(v, k)| format!("{v}^{k}"));
    let bino = (var.clone(), var).prop_map(|(a, b)| format!("{a}*{b} + {b}^2"));
    prop::collection::vec(prop_oneof![mono, bino], 1..3)
}

pub fn resolution_is_complex(gens: &[String]) -> Check {
    let r = QuotientRing::parse(CONE).unwrap();
    let m = FPModule::parse(&format!("R/({})", gens.join(", ")), Some(&r)).unwrap();
    let res = resolve(&m, 4);
    prop_assert!(res.is_complex(), "R/({})", gens.join(", "));
    Ok(())
}

const NODE_SUMMANDS: [&str; 4] = ["R/(x)", "R/(y)", "R/(x, y)", "R/(x^2, y)"];

fn node_module(idx: &[usize]) -> FPModule {
    let r = QuotientRing::parse("Q[x,y]/(x*y)").unwrap();
    let mut m = FPModule::parse(NODE_SUMMANDS[idx[0]], Some(&r)).unwrap();
    for &i in &idx[1..] {
        m = m.direct_sum(&FPModule::parse(NODE_SUMMANDS[i], Some(&r)).unwrap()).unwrap();
    }
    m
}

/// Summand choices for two modules over `k[x,y]/(xy)` plus permutation
/// seeds for the generators and relations of the first.
pub fn shuffle_case() -> impl Strategy<Value = (Vec<usize>, Vec<usize>, u64, u64)> {
    (
        prop::collection::vec(0usize..4, 1..3),
        prop::collection::vec(0usize..4, 1..3),
        any::<u64>(),
        any::<u64>(),
    )
}

fn permutation(n: usize, seed: u64) -> Vec<usize> {
    // Fisher-Yates driven by a linear congruential sequence
    let mut p: Vec<usize> = (0..n).collect();
    let mut s = seed;
    for i in (1..n).rev() {
        s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        p.swap(i, (s >> 33) as usize % (i + 1));
    }
    p
}

pub fn ext_shuffle_invariant(m_idx: &[usize], n_idx: &[usize], gen_seed: u64, rel_seed: u64) -> Check {
    let m = node_module(m_idx);
    let n = node_module(n_idx);
    let shuffled = m
        .permute_generators(&permutation(m.ngens, gen_seed))
        .unwrap()
        .permute_relations(&permutation(m.rels.ncols(), rel_seed))
        .unwrap();
    let a = higher_ext_dims(&m, &n, 3, Grading::Total).unwrap();
    let b = higher_ext_dims(&shuffled, &n, 3, Grading::Total).unwrap();
    prop_assert_eq!(a, b);
    Ok(())
}

/// `A = [[w, z^i], [-z^(n-i), w]]`, `B = [[w, -z^i], [z^(n-i), w]]` for
/// the `A_(n-1)` curve `z^n + w^2`.
pub fn a_type_mf(n: u32, i: u32) -> MatrixFactorization {
    MatrixFactorization::parse(&format!(
        "mf over Q[z,w] potential z^{n} + w^2 A=[[w, z^{i}], [-z^{}, w]] B=[[w, -z^{i}], [z^{}, w]]",
        n - i,
        n - i
    ))
    .unwrap()
}

pub fn mf_case() -> impl Strategy<Value = (u32, u32, u32)> {
    (2u32..6).prop_flat_map(|n| (Just(n), 1..n, 1..n))
}

pub fn mf_shift_properties(n: u32, i: u32, j: u32) -> Check {
    let (x, y) = (a_type_mf(n, i), a_type_mf(n, j));
    prop_assert!(x.is_valid() && y.is_valid());
    prop_assert_eq!(mf_shift(&mf_shift(&x)), x.clone());
    let h = mf_stable_hom(&x, &y).unwrap();
    let hs = mf_stable_hom(&x, &mf_shift(&y)).unwrap();
    prop_assert_eq!((h.even, h.odd), (hs.odd, hs.even));
    Ok(())
}

pub const SMOOTH_FANS: [&str; 5] = ["P2", "P1xP1", "P3", "blowupP3_1pt", "coneP1xP1_smallres"];

pub fn divisor_case() -> impl Strategy<Value = (usize, Vec<i64>, Vec<i64>)> {
    (0..SMOOTH_FANS.len()).prop_flat_map(|k| {
        let f = library(SMOOTH_FANS[k]).unwrap();
        (
            Just(k),
            prop::collection::vec(-2i64..=2, f.rays.len()),
            prop::collection::vec(-2i64..=2, f.rank),
        )
    })
}

pub fn serre_duality(k: usize, coeffs: &[i64]) -> Check {
    let f: Fan = library(SMOOTH_FANS[k]).unwrap();
    let d = TDivisor::new(coeffs.to_vec());
    let h = cohomology(&f, &d).unwrap();
    let dual = cohomology(&f, &f.canonical().sub(&d)).unwrap();
    let n = f.rank;
    for p in 0..=n {
        prop_assert_eq!(h[p], dual[n - p], "{} D = {:?}", SMOOTH_FANS[k], coeffs);
    }
    Ok(())
}

pub fn class_invariance(k: usize, coeffs: &[i64], m: &[i64]) -> Check {
    let f: Fan = library(SMOOTH_FANS[k]).unwrap();
    let d = TDivisor::new(coeffs.to_vec());
    let moved = d.add(&f.principal(m));
    prop_assert_eq!(cohomology(&f, &d).unwrap(), cohomology(&f, &moved).unwrap());
    Ok(())
}

fn binom(n: i64, k: i64) -> i64 {
    // generalized binomial for the Hilbert polynomial of P^k
    let mut num = 1i64;
    let mut den = 1i64;
    for i in 0..k {
        num *= n - i;
        den *= i + 1;
    }
    num / den
}

/// Riemann-Roch on projective spaces and `P1 x P1` as an independent
/// oracle for the Euler characteristic.
pub fn euler_characteristic_matches_riemann_roch(k: usize, coeffs: &[i64]) -> Check {
    let name = SMOOTH_FANS[k];
    let f = library(name).unwrap();
    let d = TDivisor::new(coeffs.to_vec());
    let chi = euler_characteristic(&cohomology(&f, &d).unwrap());
    let expected = match name {
        "P2" | "P3" => {
            let deg: i64 = coeffs.iter().sum();
            binom(deg + f.rank as i64, f.rank as i64)
        }
        "P1xP1" => {
            let (a, b) = (f.divisor("H1").unwrap(), f.divisor("H2").unwrap());
            let class = singcat::toric::ClassGroup::of(&f);
            let c = class.class_of(&d);
            let (ca, cb) = (class.class_of(&a), class.class_of(&b));
            // solve c = s*ca + t*cb in the free rank-two class group
            let det = ca[0] * cb[1] - ca[1] * cb[0];
            let s = (c[0] * cb[1] - c[1] * cb[0]) / det;
            let t = (ca[0] * c[1] - ca[1] * c[0]) / det;
            (s + 1) * (t + 1)
        }
        _ => return Ok(()),
    };
    prop_assert_eq!(chi, expected, "{} D = {:?}", name, coeffs);
    Ok(())
}

pub fn les_case() -> impl Strategy<Value = (Vec<usize>, Vec<usize>, usize)> {
    (1usize..6).prop_flat_map(|n| {
        (
            prop::collection::vec(0usize..3, n),
            prop::collection::vec(0usize..3, n),
            1usize..4,
        )
    })
}

/// Padding both sequences with trailing zeros never changes the interior
/// values and only sharpens the last one.
pub fn les_padding(sub: &[usize], quotient: &[usize], pad: usize) -> Check {
    let split: Vec<Annotation> = (0..sub.len() + pad)
        .map(|p| Annotation::new(p, RankClaim::Zero, "split sequence", "direct sum"))
        .collect();
    let base = |s: &[usize], q: &[usize], ann: &[Annotation]| {
        les_propagate(&LesComputation {
            variance: Variance::Contravariant,
            sub: s.to_vec(),
            quotient: q.to_vec(),
            annotations: ann.iter().filter(|a| a.degree < s.len()).cloned().collect(),
        })
        .unwrap()
    };
    let mut ps = sub.to_vec();
    let mut pq = quotient.to_vec();
    ps.extend(std::iter::repeat_n(0, pad));
    pq.extend(std::iter::repeat_n(0, pad));
    for ann in [Vec::new(), split] {
        let a = base(sub, quotient, &ann);
        let b = base(&ps, &pq, &ann);
        let n = sub.len();
        prop_assert_eq!(&a.dims[..n - 1], &b.dims[..n - 1]);
        let (lo, hi) = (a.dims[n - 1].lo(), a.dims[n - 1].hi());
        prop_assert!(lo <= b.dims[n - 1].lo() && b.dims[n - 1].hi() <= hi);
        prop_assert!(b.dims[n..].iter().all(|d| *d == Dim::Exact(0)));
        if !ann.is_empty() {
            for p in 0..n {
                prop_assert_eq!(b.dims[p], Dim::Exact(sub[p] + quotient[p]));
            }
        }
    }
    Ok(())
}

/// Runs a strategy through a fixed number of cases, for use outside the
/// `proptest!` macro.
pub fn run_cases<S: Strategy>(cases: u32, s: S, f: impl Fn(S::Value) -> Check) -> Result<(), String>
where
    S::Value: std::fmt::Debug,
{
    let mut runner = TestRunner::new(Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    });
    runner.run(&s, f).map_err(|e| e.to_string())
}
