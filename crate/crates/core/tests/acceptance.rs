//! Acceptance suite: one line per criterion, exact arithmetic throughout.
//! Runs without the libtest harness so every line is printed.

mod common;

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use quiver_slope::catalog::{find_stability_certificate, sl2_block, sl2_slope_at, sl3_data};
use quiver_slope::moduli::{krull_schmidt_moduli, moduli_set};
use quiver_slope::ordered::OrderedVector;
use quiver_slope::rational::{q, qf, Q};
use quiver_slope::rep::{end_dimension, indecomposable_projective, is_isomorphic, is_short_exact, loewy_structure};
use quiver_slope::stability::{classify_by_character, classify_stability, hn_filtration};
use quiver_slope::{EnumerationOrder, FieldSpec, K0Class, Representation, SlopeData, SlopeValue, Verdict};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{random_slope, sl2, sl2_over, sl2_universe, x2_slope, GUARD};

type Outcome = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn class(v: &[i64]) -> K0Class {
    K0Class::new(v.to_vec())
}

/// Exact equality of slope values by cross-multiplication.
fn same_slope(a: &SlopeValue, b: &SlopeValue) -> bool {
    a.determinant(b).is_zero()
}

fn expected(value: Q) -> SlopeValue {
    SlopeValue { numerator: OrderedVector::new(vec![value]), denominator: q(1) }
}

fn slope_table() -> Outcome {
    let cat = sl2_block();
    for x2 in [-2, -1, 1, 3] {
        let s = sl2_slope_at(q(x2));
        let x = q(x2);
        let want = [
            ("L(0)", q(0)),
            ("L(-2)", q(-2) * &x),
            ("M(0)", -x.clone()),
            ("M*(0)", -x.clone()),
            ("P(-2)", qf(-4, 3) * &x),
        ];
        for (name, value) in want {
            let got = s.slope_value(&cat.get(name).unwrap().dimension_vector()).map_err(|e| e.to_string())?;
            ensure!(same_slope(&got, &expected(value.clone())), "x2={x2}: slope of {name} is {got}, expected {value}");
        }
    }
    Ok(())
}

fn phase_diagram() -> Outcome {
    let alg = sl2();
    for p in [2, 3] {
        for x2 in [-2i64, -1, 0, 1, 3] {
            let s = x2_slope(x2);
            let verdict = |name: &str| classify_stability(&alg, &sl2_over(p, name), &s, GUARD).unwrap();
            let m = verdict("M(0)");
            let ms = verdict("M*(0)");
            let pp = verdict("P(-2)");
            ensure!((m == Verdict::Stable) == (x2 > 0), "p={p} x2={x2}: M(0) is {m}");
            ensure!((ms == Verdict::Stable) == (x2 < 0), "p={p} x2={x2}: M*(0) is {ms}");
            let want = if x2 == 0 { Verdict::StrictlySemistable } else { Verdict::Unstable };
            ensure!(pp == want, "p={p} x2={x2}: P(-2) is {pp}");
            if x2 == 0 {
                let cat = sl2_block();
                for (a, ra) in &cat.representations {
                    ensure!(verdict(a).is_semistable(), "x2=0: {a} not semistable");
                    for (b, rb) in &cat.representations {
                        let o = s.compare_slopes(&ra.dimension_vector(), &rb.dimension_vector()).unwrap();
                        ensure!(o == std::cmp::Ordering::Equal, "x2=0: {a} vs {b} is {o:?}");
                    }
                }
            }
        }
    }
    Ok(())
}

fn catalog_integrity() -> Outcome {
    let cat = sl2_block();
    ensure!(cat.algebra.dimension() == 5, "algebra dimension {}", cat.algebra.dimension());
    ensure!(cat.sequences.len() == 4, "{} exact sequences", cat.sequences.len());
    for entry in [cat.clone(), cat.reduce_mod(2).unwrap(), cat.reduce_mod(3).unwrap()] {
        for s in &entry.sequences {
            let [a, b, c] = s.terms.each_ref().map(|n| entry.get(n).unwrap());
            let ok = is_short_exact(&entry.algebra, (a, b, c), &s.f, &s.g).map_err(|e| e.to_string())?;
            ensure!(ok, "sequence {:?} not exact over {}", s.terms, b.field());
        }
    }
    for field in [FieldSpec::Rationals, FieldSpec::Prime(2), FieldSpec::Prime(3)] {
        let layers = |v: usize| -> Vec<K0Class> {
            loewy_structure(&cat.algebra, &indecomposable_projective(&cat.algebra, v, field).unwrap()).unwrap()
        };
        ensure!(layers(0) == vec![class(&[1, 0]), class(&[0, 1]), class(&[1, 0])], "Loewy layers of P(1): {:?}", layers(0));
        ensure!(layers(1) == vec![class(&[0, 1]), class(&[1, 0])], "Loewy layers of P(2): {:?}", layers(1));
    }
    Ok(())
}

fn random_effective(rng: &mut impl Rng, n: usize) -> K0Class {
    loop {
        let c = K0Class::new((0..n).map(|_| rng.gen_range(0..4)).collect());
        if !c.is_zero() {
            return c;
        }
    }
}

fn seesaw() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for i in 0..1000 {
        let n = rng.gen_range(1..=4);
        let s = random_slope(&mut rng, n);
        let a = random_effective(&mut rng, n);
        let c = random_effective(&mut rng, n);
        let b = a.checked_add(&c).unwrap();
        ensure!(s.seesaw_verify(&a, &b, &c).unwrap(), "instance {i}: seesaw fails for {a} + {c}");
    }
    Ok(())
}

/// Slopes used to drive the HN and Schur suites.
fn suite_slopes() -> Vec<SlopeData> {
    let mut out: Vec<SlopeData> = [-2, -1, 0, 1, 3].iter().map(|&x| x2_slope(x)).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    out.extend((0..5).map(|_| random_slope(&mut rng, 2)));
    out
}

fn hn_suite() -> Outcome {
    let alg = sl2();
    let universe = sl2_universe(2, 2);
    for s in suite_slopes() {
        for v in &universe {
            let hn = hn_filtration(&alg, v, &s, GUARD, EnumerationOrder::Canonical).map_err(|e| e.to_string())?;
            let classes = hn.factor_classes();
            let total = classes.iter().try_fold(K0Class::zero(2), |acc, c| acc.checked_add(c)).unwrap();
            ensure!(total == v.dimension_vector(), "factor classes {classes:?} do not sum to {}", v.dimension_vector());
            for w in hn.steps.windows(2) {
                ensure!(w[0].factor_slope > w[1].factor_slope, "slopes not strictly decreasing for {v:?}");
            }
            for step in &hn.steps {
                let verdict = classify_stability(&alg, &step.factor, &s, GUARD).unwrap();
                ensure!(verdict.is_semistable(), "factor {} is unstable", step.factor_class);
            }
            for seed in 0..10 {
                let shuffled = hn_filtration(&alg, v, &s, GUARD, EnumerationOrder::Shuffled(seed)).unwrap();
                ensure!(shuffled.factor_classes() == classes, "shuffle {seed} changes HN classes of {v:?}");
            }
        }
    }
    Ok(())
}

fn integerization() -> Outcome {
    let alg = sl2();
    let universe = sl2_universe(2, 2);
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for gamma in [class(&[1, 1]), class(&[2, 1]), class(&[2, 2])] {
        let members: Vec<&Representation> = universe.iter().filter(|v| v.dimension_vector() == gamma).collect();
        ensure!(!members.is_empty(), "no representations of class {gamma}");
        for i in 0..50 {
            let s = random_slope(&mut rng, 2);
            let theta = s.integerize_character(&gamma).map_err(|e| format!("{gamma}, slope {i}: {e}"))?;
            for v in &members {
                let a = classify_stability(&alg, v, &s, GUARD).unwrap();
                let b = classify_by_character(&alg, v, &theta, GUARD).unwrap();
                ensure!(a == b, "{gamma}, slope {i}: slope verdict {a}, character verdict {b}");
            }
        }
    }
    Ok(())
}

fn moduli_sets() -> Outcome {
    let alg = sl2();
    let gamma = class(&[1, 1]);
    let iso = |a: &Representation, b: &Representation| is_isomorphic(&alg, a, b, 1_000_000).unwrap();
    for (x2, name) in [(1, "M(0)"), (-1, "M*(0)")] {
        let m = moduli_set(&alg, &gamma, 2, &x2_slope(x2), GUARD).map_err(|e| e.to_string())?;
        ensure!(m.classes.len() == 1, "x2={x2}: {} S-classes", m.classes.len());
        ensure!(iso(&m.classes[0].representative, &sl2_over(2, name)), "x2={x2}: representative is not {name}");
    }
    let m = moduli_set(&alg, &gamma, 2, &x2_slope(0), GUARD).map_err(|e| e.to_string())?;
    ensure!(m.classes.len() == 1 && m.classes[0].absorbed == 3, "x2=0: {:?}", m.classes);
    let gamma = class(&[2, 2]);
    let s = x2_slope(1);
    let ms = moduli_set(&alg, &gamma, 2, &s, GUARD).map_err(|e| e.to_string())?;
    let cat = sl2_block().reduce_mod(2).unwrap();
    let inds: Vec<Representation> = cat.representations.iter().map(|(_, r)| r.clone()).collect();
    let ks = krull_schmidt_moduli(&alg, &inds, &gamma, &s, GUARD).map_err(|e| e.to_string())?;
    ensure!(ms.classes.len() == 1 && ks.classes.len() == 1, "class counts {} vs {}", ms.classes.len(), ks.classes.len());
    ensure!(ms.classes[0].factors == ks.classes[0].factors, "factor multisets differ");
    let m0 = sl2_over(2, "M(0)");
    let sum = m0.direct_sum(&m0).unwrap();
    ensure!(iso(&ms.classes[0].representative, &sum), "moduli representative is not M(0)+M(0)");
    ensure!(iso(&ks.classes[0].representative, &sum), "Krull-Schmidt representative is not M(0)+M(0)");
    Ok(())
}

fn schur() -> Outcome {
    let alg = sl2();
    let mut stables = 0;
    for s in suite_slopes() {
        for v in sl2_universe(2, 2) {
            if classify_stability(&alg, &v, &s, GUARD).unwrap() == Verdict::Stable {
                stables += 1;
                let d = end_dimension(&alg, &v).unwrap();
                ensure!(d == 1, "stable {v:?} has End of dimension {d}");
            }
        }
    }
    ensure!(stables > 0, "no stable representations found");
    Ok(())
}

fn sl3_certificates() -> Outcome {
    let d = sl3_data();
    for k in 0..6 {
        let start = Instant::now();
        let x = find_stability_certificate(&d.verma_classes[k], &d.default_subobjects[k], &d.weights)
            .map_err(|e| e.to_string())?;
        let took = start.elapsed();
        let x = x.ok_or_else(|| format!("no certificate for M(λ{k})"))?;
        let verdict = d.weights.slope(&x).unwrap().k0_verdict(&d.verma_classes[k], &d.default_subobjects[k]).unwrap();
        ensure!(verdict == Verdict::Stable, "certificate for M(λ{k}) gives {verdict}");
        ensure!(took < Duration::from_secs(1), "M(λ{k}) took {took:?}");
    }
    Ok(())
}

fn pull_back() -> Outcome {
    let alg = sl2();
    // New vertex 0 is old vertex 1 and vice versa.
    let perm = [1usize, 0];
    let relabeled = alg.relabel_vertices(&perm).map_err(|e| e.to_string())?;
    let swap = |c: &K0Class| K0Class::new(vec![c.mults()[1], c.mults()[0]]);
    for x2 in [-1, 0, 1] {
        let s = x2_slope(x2);
        // Column j is the class in the original K0 of new simple j.
        let k0_map = vec![vec![0, 1], vec![1, 0]];
        let pulled = s.pull_back(&k0_map, relabeled.quiver().vertex_labels().to_vec()).map_err(|e| e.to_string())?;
        for p in [2, 3] {
            for gamma in [class(&[1, 1]), class(&[2, 1]), class(&[1, 2]), class(&[2, 2])] {
                let a = moduli_set(&alg, &gamma, p, &s, GUARD).map_err(|e| e.to_string())?;
                let b = moduli_set(&relabeled, &swap(&gamma), p, &pulled, GUARD).map_err(|e| e.to_string())?;
                let mut fa: Vec<Vec<K0Class>> = a
                    .classes
                    .iter()
                    .map(|c| {
                        let mut f: Vec<K0Class> = c.factors.iter().map(swap).collect();
                        f.sort();
                        f
                    })
                    .collect();
                fa.sort();
                let fb: Vec<Vec<K0Class>> = b.classes.iter().map(|c| c.factors.clone()).collect();
                ensure!(fa == fb, "x2={x2} p={p} {gamma}: factor multisets {fa:?} vs {fb:?}");
                let absorbed = |m: &quiver_slope::ModuliSet| {
                    m.classes.iter().map(|c| c.absorbed).collect::<Vec<_>>().iter().sum::<usize>()
                };
                ensure!(absorbed(&a) == absorbed(&b), "x2={x2} p={p} {gamma}: absorbed counts differ");
                for c in &b.classes {
                    let back = c.representative.relabel_vertices(&perm);
                    let in_a = a.classes.iter().any(|d| is_isomorphic(&alg, &d.representative, &back, 1_000_000).unwrap());
                    ensure!(in_a, "x2={x2} p={p} {gamma}: relabeled representative has no partner");
                }
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("slope table", slope_table),
        ("stability phase diagram over F2, F3", phase_diagram),
        ("catalog integrity", catalog_integrity),
        ("seesaw on 1000 random instances", seesaw),
        ("HN suite, dims <= (2,2) over F2, 10 shuffles", hn_suite),
        ("integer characters reproduce verdicts", integerization),
        ("moduli sets", moduli_sets),
        ("Schur property of stables", schur),
        ("sl3 certificates", sl3_certificates),
        ("pull-back bijection of moduli sets", pull_back),
    ];
    let mut results = BTreeMap::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        let line = match &outcome {
            Ok(()) => format!("criterion {:>2} PASS  {name} ({:.2?})", i + 1, start.elapsed()),
            Err(msg) => format!("criterion {:>2} FAIL  {name}: {msg}", i + 1),
        };
        println!("{line}");
        results.insert(i + 1, outcome.is_ok());
    }
    let failed = results.values().filter(|ok| !**ok).count();
    println!("acceptance: {} passed, {failed} failed", results.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
