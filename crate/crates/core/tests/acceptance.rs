//! The ten end-to-end acceptance checks. Each prints one line with its
//! verdict and elapsed time against its budget; the process fails if any
//! check fails or runs over budget.

mod common;

use std::time::{Duration, Instant};

use singcat::groebner::{
    ext1_cocycles, fiber_generators, higher_ext_dims, hom_space, stable_hom, yoneda_extension, FPModule, Grading,
    QuotientRing,
};
use singcat::matfac::{knorrer, mf_check, mf_from_module, mf_stable_hom, MatrixFactorization};
use singcat::ncdef::{flatness_filtration_check, matches_node_truncation, matches_two_cycle, run, Outcome, SimpleCollection};
use singcat::sodcheck::{check_exceptional, check_orthogonal_to_f, CollectionSpec, LocalModel};
use singcat::toric::{cohomology, intersect_curve, library, weil_is_cartier};

type Res = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn e<E: std::fmt::Display>(x: E) -> String {
    x.to_string()
}

fn module(ring: &str, m: &str) -> Result<FPModule, String> {
    let r = QuotientRing::parse(ring).map_err(e)?;
    FPModule::parse(m, Some(&r)).map_err(e)
}

fn normalization(field: &str) -> Result<FPModule, String> {
    let ring = format!("{field}[z,w]/(z^2+z^3+w^2)");
    module(&ring, &format!("module over {ring} generators e,t relations [[w,-z],[z^2+z,w]]"))
}

fn stable_hom_suite() -> Res {
    let k = module("Q[z]/(z^2)", "A/(z)")?;
    let d = stable_hom(&k, &k).map_err(e)?.dim();
    ensure!(d == 1, "End(V1) has dim {d}");
    let mz = module("Q[z,w]/(z*w)", "B/(w)")?;
    let mw = FPModule::parse("B/(z)", Some(&mz.ring)).map_err(e)?;
    let d = stable_hom(&mz, &mw).map_err(e)?.dim();
    ensure!(d == 0, "Hom(M_z, M_w) has dim {d}");
    let d = stable_hom(&mz, &mz).map_err(e)?.dim();
    ensure!(d == 1, "End(M_z) has dim {d}");
    let c = normalization("Q")?;
    let end = stable_hom(&c, &c).map_err(e)?;
    ensure!(end.dim() == 2, "End(C') has dim {}", end.dim());
    let alg = end.algebra().map_err(e)?;
    ensure!(alg.is_quadratic_minus_one(), "End(C') is not k[t]/(t^2+1)");
    let n = alg.idempotents().map_err(e)?.len();
    ensure!(n == 2, "{n} idempotents over Q");
    let c5 = normalization("F5")?;
    let n = stable_hom(&c5, &c5).map_err(e)?.algebra().map_err(e)?.idempotents().map_err(e)?.len();
    ensure!(n == 4, "{n} idempotents over F5");
    Ok(())
}

fn pair(x: &MatrixFactorization, y: &MatrixFactorization) -> Result<(usize, usize), String> {
    let h = mf_stable_hom(x, y).map_err(e)?;
    Ok((h.even, h.odd))
}

fn knorrer_doubling() -> Res {
    let x0 = mf_from_module(&module("Q[z]/(z^2)", "A/(z)")?).map_err(e)?;
    let mz = mf_from_module(&module("Q[z,w]/(z*w)", "B/(w)")?).map_err(e)?;
    let mw = mf_from_module(&module("Q[z,w]/(z*w)", "B/(z)")?).map_err(e)?;
    let sources = [vec![x0], vec![mz, mw]];
    for src in &sources {
        let doubled: Vec<MatrixFactorization> = src.iter().map(|x| knorrer(x, "x", "y")).collect::<Result<_, _>>().map_err(e)?;
        for m in src.iter().chain(&doubled) {
            ensure!(mf_check(&m.a, &m.b, &m.potential).map_err(e)?, "AB = BA = f fails for {m}");
        }
        for i in 0..src.len() {
            for j in 0..src.len() {
                let (a, b) = (pair(&src[i], &src[j])?, pair(&doubled[i], &doubled[j])?);
                ensure!(a == b, "stable Hom {a:?} became {b:?}");
            }
        }
    }
    Ok(())
}

fn ext_table() -> Res {
    let r = "Q[x,y,z,w]/(x*y+z*w)";
    let ls = [module(r, "ideal (x, z)")?, module(r, "ideal (x, w)")?];
    for i in 0..2 {
        for j in 0..2 {
            let dims = higher_ext_dims(&ls[i], &ls[j], 6, Grading::Total).map_err(e)?;
            // self pairs live in even degree, mixed pairs in odd degree
            let expected: Vec<usize> = (1..=6).map(|p| usize::from((p % 2 == 0) == (i == j))).collect();
            ensure!(dims == expected, "Ext(I{}, I{}) = {dims:?}", i + 1, j + 1);
            ensure!(dims[3] == dims[5], "no 2-periodicity for Ext(I{}, I{})", i + 1, j + 1);
        }
    }
    let g = Grading::Degree(0);
    let ls = LocalModel::node().modules().map_err(e)?;
    for (k, (sub, q)) in [(0usize, 1usize), (1, 0)].into_iter().enumerate() {
        let cls = ext1_cocycles(&ls[q], &ls[sub], g).map_err(e)?;
        let first = cls.first().ok_or("Ext^1 between the ideals vanishes")?;
        let gk = yoneda_extension(first, &ls[sub], &ls[q], true).map_err(e)?.module;
        for j in 0..2 {
            let higher = higher_ext_dims(&gk, &ls[j], 4, g).map_err(e)?;
            ensure!(higher.iter().all(|&d| d == 0), "Ext(G{}, L{}) = {higher:?}", k + 1, j + 1);
            let hom = hom_space(&gk, &ls[j], g).map_err(e)?.dim();
            ensure!(hom == usize::from(j == q), "Hom(G{}, L{}) = {hom}", k + 1, j + 1);
        }
    }
    Ok(())
}

fn odp_local_model() -> Res {
    let ls = LocalModel::node().modules().map_err(e)?;
    let rep = run(&SimpleCollection::new(ls.to_vec(), Grading::Degree(0)).map_err(e)?, 8).map_err(e)?;
    ensure!(rep.outcome == Outcome::Terminated { step: 1 }, "outcome {:?}", rep.outcome);
    let s = rep.final_state();
    ensure!(s.dim() == 4, "dim R = {}", s.dim());
    ensure!(s.algebra.radical_square_zero() && matches_two_cycle(s), "R has the wrong structure constants");
    ensure!(flatness_filtration_check(s).flat, "F is not flat");
    let ext = s.self_ext(3).map_err(e)?;
    ensure!(ext[1..] == [0, 0, 0], "Ext(F, F) = {ext:?}");
    Ok(())
}

const ACYCLIC: [&str; 23] = [
    "E1-E2", "-H+E1", "-H+E2", "-2H+E1+E2", "-2H+2E2", "-2H+2E1", "-3H+2E1+E2", "-3H+E1+2E2",
    "-4H+3E1+2E2", "-3H+E1+E2", "-4H+2E1+3E2", "-3H+2E2", "-3H+2E1+2E2", "-2H+E2", "-2H+E1",
    "-2H+2E1+E2", "-2H+E1+2E2", "-2H+2E1+2E2", "-H", "-H+E1+E2", "-E1", "-E2", "-H+2E1+E2",
];

fn blowup_cohomology() -> Res {
    let y = library("blowupP3_2pts").map_err(e)?;
    let h = |d: &str| cohomology(&y, &y.divisor(d).map_err(e)?).map_err(e);
    for d in ACYCLIC {
        let v = h(d)?;
        ensure!(v.iter().all(|&x| x == 0), "H^*({d}) = {v:?}");
    }
    for d in ["-E1+E2", "H-E1", "H-E2", "2H-E1-E2", "2H-2E2", "3H-2E1-E2", "3H-E1-2E2"] {
        let v = h(d)?;
        ensure!(v[1..].iter().all(|&x| x == 0), "H^*({d}) = {v:?}");
    }
    let v = h("H-E1")?;
    ensure!(v[0] == 3, "h0(H-E1) = {}", v[0]);
    let d = y.divisor("-E1").map_err(e)?.sub(&y.divisor("-H+E1+E2").map_err(e)?);
    let v = cohomology(&y, &d).map_err(e)?;
    ensure!(v == [0, 1, 0, 0], "H^*(-D1+D2) = {v:?}");
    Ok(())
}

const PULLBACKS: [&str; 5] = ["-3H+2E1+E2", "-3H+E1+2E2", "-2H+E1+E2", "-H+E1", "0"];

fn collections() -> Res {
    let y = library("blowupP3_2pts").map_err(e)?;
    let eight = ["-3H+2E1+E2", "-3H+E1+2E2", "-2H+E1+E2", "-H+E1", "-H+E2", "-H+E1+E2", "0", "H-E1-E2"];
    let r = check_exceptional(&CollectionSpec::line_bundles("eight", &y, &eight).map_err(e)?).map_err(e)?;
    ensure!(r.exceptional, "eight bundles: {:?}", r.witnesses);
    let five = CollectionSpec::line_bundles("five", &y, &PULLBACKS).map_err(e)?;
    let r = check_exceptional(&five).map_err(e)?;
    ensure!(r.strong, "five bundles: {:?}", r.witnesses);
    let f = [y.divisor("-H+E1+E2").map_err(e)?, y.divisor("-E1").map_err(e)?];
    let r = check_orthogonal_to_f(&five, &f).map_err(e)?;
    let checks = r.notes.iter().filter(|n| n.starts_with("Ext(L_")).count();
    ensure!(r.semiorthogonal_to_f == Some(true) && checks == 10, "{checks} checks, {:?}", r.witnesses);
    Ok(())
}

fn intersections() -> Res {
    let y = library("blowupP3_2pts").map_err(e)?;
    let l = y.wall(&[0, 1]).map_err(e)?;
    let d1 = intersect_curve(&y, &y.divisor("-H+E1+E2").map_err(e)?, &l).map_err(e)?;
    let d2 = intersect_curve(&y, &y.divisor("-E1").map_err(e)?, &l).map_err(e)?;
    ensure!((d1, d2) == (1, -1), "(D1.l, D2.l) = ({d1}, {d2})");
    let s = library("coneP1xP1_smallres").map_err(e)?;
    let c = s.wall(&[1, 3]).map_err(e)?;
    let d1 = intersect_curve(&s, &s.divisor("B").map_err(e)?, &c).map_err(e)?;
    let d2 = intersect_curve(&s, &s.divisor("A").map_err(e)?, &c).map_err(e)?;
    ensure!((d1, d2) == (1, -1), "(D1'.C, D2'.C) = ({d1}, {d2})");
    let x = library("coneP1xP1_projective").map_err(e)?;
    let (a, b) = (x.divisor("A").map_err(e)?, x.divisor("B").map_err(e)?);
    for i in -3..=3 {
        for j in -3..=3 {
            let cartier = weil_is_cartier(&x, &a.scale(i).add(&b.scale(j)));
            ensure!(cartier == (i == j), "{i}A + {j}B: Cartier = {cartier}");
        }
    }
    Ok(())
}

fn node_nontermination() -> Res {
    let k = module("Q[x,y]/(x*y)", "R/(x, y)")?;
    let rep = run(&SimpleCollection::new(vec![k], Grading::Total).map_err(e)?, 5).map_err(e)?;
    ensure!(!rep.terminated(), "terminated: {:?}", rep.outcome);
    ensure!(rep.dims == [1, 3, 5, 7, 9], "dims {:?}", rep.dims);
    for (n, st) in rep.states.iter().enumerate() {
        ensure!(matches_node_truncation(st).map_err(e)?, "step {n} differs from the truncation");
    }
    Ok(())
}

fn generator_counts() -> Res {
    let r = QuotientRing::parse("Q[x,y,z,w]/(x*y+z*w)").map_err(e)?;
    let origin = ["x", "y", "z", "w"].iter().map(|v| r.var(v)).collect::<Result<Vec<_>, _>>().map_err(e)?;
    for m in 1..=4u32 {
        let gens: Vec<String> = (0..=m).map(|k| format!("x^{}*z^{k}", m - k)).collect();
        let ideal = FPModule::parse(&format!("ideal ({})", gens.join(", ")), Some(&r)).map_err(e)?;
        let n = fiber_generators(&ideal, &origin).map_err(e)?;
        ensure!(n == m as usize + 1, "m = {m}: {n} generators");
    }
    Ok(())
}

fn property_suites() -> Res {
    use common::*;
    run_cases(20, cone_generators(), |g| resolution_is_complex(&g))?;
    run_cases(20, shuffle_case(), |(m, n, gs, rs)| ext_shuffle_invariant(&m, &n, gs, rs))?;
    run_cases(40, divisor_case(), |(k, d, _)| serre_duality(k, &d))?;
    run_cases(40, divisor_case(), |(k, d, m)| class_invariance(k, &d, &m))?;
    run_cases(20, mf_case(), |(n, i, j)| mf_shift_properties(n, i, j))?;
    Ok(())
}

fn main() {
    let criteria: [(&str, u64, fn() -> Res); 10] = [
        ("stable Hom suite", 10, stable_hom_suite),
        ("Knorrer periodicity", 10, knorrer_doubling),
        ("Ext table at the node", 60, ext_table),
        ("deformation at the local model", 60, odp_local_model),
        ("blowup cohomology", 120, blowup_cohomology),
        ("exceptional collections", 60, collections),
        ("intersection numbers", 10, intersections),
        ("non-termination at the curve node", 30, node_nontermination),
        ("m+1 generators", 10, generator_counts),
        ("property suites", 120, property_suites),
    ];
    let mut failed = 0;
    for (n, (name, budget, f)) in criteria.into_iter().enumerate() {
        let t0 = Instant::now();
        let res = f();
        let dt = t0.elapsed();
        let over = dt > Duration::from_secs(budget);
        let verdict = match (&res, over) {
            (Ok(()), false) => "PASS".to_string(),
            (Ok(()), true) => "FAIL (over budget)".to_string(),
            (Err(msg), _) => format!("FAIL: {msg}"),
        };
        if verdict != "PASS" {
            failed += 1;
        }
        println!("criterion {:>2} {name:<36} {:>8.2}s / {budget:>3}s  {verdict}", n + 1, dt.as_secs_f64());
    }
    println!("{} of 10 criteria passed", 10 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
