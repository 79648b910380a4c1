//! Prints one PASS or FAIL line per acceptance criterion; exits nonzero on any failure.

mod common;

use std::collections::BTreeSet;
use std::time::Instant;

use nutgraph::catalog::{self, all_seeds};
use nutgraph::constructions::{
    antiprism, antiprism_kernel_closed_form, antiprism_nullity, antiprism_propagate, circulant_eigenvalues, cycle,
    fowler, subdivide_4fold, CirculantSpec,
};
use nutgraph::enumeration::{enumerate_all, run_census, CensusOptions, CensusReport, Universe};
use nutgraph::synthesis::{certify, construct_regular_nut, membership, Membership};
use nutgraph::{classify, kernel, ClassTag};

use common::{rational_nullity, random_graph, reference_member, rng, same_span, BruteCanon};

/// Near-zero threshold for floating eigenvalues.
const EIGEN_TOL: f64 = 1e-9;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn census(n: usize, universe: Universe, long_run: bool) -> CensusReport {
    let options = CensusOptions {
        jobs: 1,
        long_run,
        collect_nuts: true,
    };
    run_census(n, universe, options).expect("census within bounds")
}

fn expect_nuts(n: usize, universe: Universe, want: usize, long_run: bool) -> Result<String, String> {
    let r = census(n, universe, long_run);
    let got = r.count(ClassTag::Nut);
    ensure(got == want, || format!("{universe} n={n}: {got} nut graphs, expected {want}"))?;
    Ok(format!("{n}:{got}/{} ({:.1}s)", r.examined, r.elapsed.as_secs_f64()))
}

fn small_census() -> Outcome {
    let mut parts = Vec::new();
    for n in 2..=6 {
        parts.push(expect_nuts(n, Universe::All, 0, false)?);
    }
    parts.push(expect_nuts(7, Universe::All, 3, false)?);
    parts.push(expect_nuts(8, Universe::All, 13, false)?);
    Ok(format!("all graphs, order:nuts/examined {}", parts.join(" ")))
}

fn cubic_census() -> Outcome {
    let mut parts = Vec::new();
    for n in [4, 6, 8, 10] {
        parts.push(expect_nuts(n, Universe::Regular(3), 0, false)?);
    }
    parts.push(expect_nuts(12, Universe::Regular(3), 9, false)?);
    parts.push(expect_nuts(14, Universe::Regular(3), 0, false)?);
    parts.push(expect_nuts(16, Universe::Regular(3), 0, false)?);
    Ok(format!("connected cubic {}", parts.join(" ")))
}

fn quartic_census() -> Outcome {
    let mut parts = Vec::new();
    parts.push(expect_nuts(12, Universe::Regular(4), 269, false)?);
    for n in [5, 7, 9, 11, 13] {
        parts.push(expect_nuts(n, Universe::Regular(4), 0, false)?);
    }
    let r = census(15, Universe::Regular(4), true);
    let got = r.count(ClassTag::Nut);
    ensure(got == 1, || format!("quartic n=15: {got} nut graphs, expected 1"))?;
    let seed = catalog::seed("quartic15").unwrap().graph.canonical_form();
    ensure(r.nuts[0].canonical_form() == seed, || "quartic n=15: the nut graph is not the quartic15 seed".into())?;
    parts.push(format!("15:{got}/{} ({:.1}s, isomorphic to seed quartic15)", r.examined, r.elapsed.as_secs_f64()));
    Ok(format!("connected quartic {}", parts.join(" ")))
}

fn fowler_invariance() -> Outcome {
    let mut checked = 0;
    for s in all_seeds() {
        let g = &s.graph;
        ensure(classify(g).tag == ClassTag::Nut, || format!("seed {} is not nut", s.name))?;
        for v in 0..g.order() {
            let rho = g.degree(v).unwrap();
            let f = fowler(g, v).unwrap();
            let class = classify(&f);
            let degrees_kept = (0..g.order()).all(|w| f.degree(w).unwrap() == g.degree(w).unwrap())
                && (g.order()..f.order()).all(|w| f.degree(w).unwrap() == rho);
            let regular_kept = s.expected_degree.is_none_or(|d| f.is_regular(d));
            ensure(
                class.nullity() == 1
                    && class.tag == ClassTag::Nut
                    && f.order() == g.order() + 2 * rho
                    && degrees_kept
                    && regular_kept,
                || format!("seed {} vertex {v}: {} nullity {}", s.name, class.tag, class.nullity()),
            )?;
            checked += 1;
        }
    }
    Ok(format!("{checked} (seed, vertex) pairs over {} seeds", catalog::SEED_NAMES.len()))
}

fn synthesis_coverage() -> Outcome {
    let mut built = 0;
    for rho in [3, 4] {
        for n in 1..=80 {
            if !reference_member(rho, n) {
                continue;
            }
            let (g, cert, plan) = construct_regular_nut(rho, n).map_err(|e| format!("({rho},{n}): {e}"))?;
            let report = certify(&g, rho);
            ensure(
                report.is_regular_nut()
                    && report.order == n
                    && report.nullity == 1
                    && report.certificate.as_ref() == Some(&cert)
                    && plan.seed_order + plan.steps * 2 * rho == n,
                || format!("({rho},{n}): certify disagrees: {report:?}"),
            )?;
            built += 1;
        }
    }
    let mut decided = 0;
    for rho in 2..=4 {
        for n in 1..=200 {
            let m = membership(rho, n);
            ensure(
                m.is_member() == reference_member(rho, n) && !matches!(m, Membership::Unknown(_)),
                || format!("membership({rho},{n}) = {m:?}"),
            )?;
            decided += 1;
        }
    }
    Ok(format!("{built} certified constructions up to order 80, {decided} membership verdicts up to 200"))
}

fn antiprism_theory() -> Outcome {
    for n in 3..=15 {
        let g = antiprism(n).unwrap();
        let k = kernel(&g);
        let want = if n % 3 == 0 { 3 } else { 1 };
        ensure(k.nullity == want && antiprism_nullity(n) == want, || {
            format!("A_{n}: exact nullity {}", k.nullity)
        })?;
        let closed = antiprism_kernel_closed_form(n);
        ensure(
            closed.iter().all(|x| g.annihilates(x)) && same_span(&closed, &k.basis),
            || format!("A_{n}: closed-form vectors do not span the kernel"),
        )?;
    }
    for n in 3..=24 {
        let ev = circulant_eigenvalues(&CirculantSpec::antiprism(n).unwrap());
        let zeros = ev.iter().filter(|l| l.abs() < EIGEN_TOL).count();
        let exact = kernel(&antiprism(n).unwrap()).nullity;
        ensure(zeros == exact, || format!("A_{n}: {zeros} near-zero eigenvalues, nullity {exact}"))?;
    }
    for k in [2i64, 3] {
        let printed: [[[i64; 4]; 4]; 3] = [
            [[-2 * k, 0, 0, -2 * k], [0; 4], [0; 4], [-2 * k, 0, 0, -2 * k]],
            [
                [-2 * k - 1, 0, 1, -2 * k],
                [-1, -1, 1, 1],
                [-1, -2, -1, 0],
                [-2 * k - 1, -1, -1, -2 * k - 1],
            ],
            [
                [-2 * k - 2, -1, 0, -2 * k - 1],
                [-1, -2, -1, 0],
                [0, -1, -2, -1],
                [-2 * k - 1, 0, -1, -2 * k - 2],
            ],
        ];
        for (i, want) in printed.iter().enumerate() {
            let n = (3 * k) as usize + i;
            let (_, q) = antiprism_propagate(n).unwrap();
            ensure(q == *want, || format!("Q for n={n}: {q:?}"))?;
        }
    }
    Ok(format!("nullity 3..=15, eigenvalues 3..=24 at |l| < {EIGEN_TOL:e}, Q at k=2,3"))
}

fn cycles_and_subdivision() -> Outcome {
    for n in 3..=32 {
        let class = classify(&cycle(n).unwrap());
        let singular = class.nullity() > 0;
        ensure(singular == (n % 4 == 0), || format!("C_{n}: nullity {}", class.nullity()))?;
        ensure(!singular || class.tag == ClassTag::CoreNonNut, || {
            format!("C_{n}: {}", class.tag)
        })?;
    }
    let mut edges = 0;
    for name in ["nut7_a", "nut7_b", "nut7_c"] {
        let g = catalog::seed(name).unwrap().graph;
        for &e in g.edges() {
            let h = subdivide_4fold(&g, e).unwrap();
            ensure(classify(&h).tag == ClassTag::Nut, || format!("{name} edge {e:?}"))?;
            edges += 1;
        }
    }
    Ok(format!("cycles 3..=32, {edges} subdivided edges of the 7-vertex seeds"))
}

fn oracle_equivalence() -> Outcome {
    for n in 1..=6 {
        let brute = BruteCanon::new(n);
        let generated = enumerate_all(n).unwrap();
        let codes: BTreeSet<u64> = generated.iter().map(|g| brute.code(g)).collect();
        ensure(codes.len() == generated.len(), || format!("n={n}: duplicate isomorphism classes"))?;
        let forms: BTreeSet<_> = generated.iter().map(|g| g.canonical_form()).collect();
        ensure(forms.len() == generated.len(), || format!("n={n}: duplicate canonical forms"))?;
        ensure(codes == brute.all_classes(), || format!("n={n}: class sets differ"))?;
    }
    let mut r = rng(0x5eed);
    let mut singular = 0;
    for i in 0..100 {
        let n = 1 + i % 10;
        let g = random_graph(&mut r, n, 0.2 + 0.6 * (i % 7) as f64 / 6.0);
        let (a, b) = (kernel(&g).nullity, rational_nullity(&g));
        ensure(a == b, || format!("random graph {}: Bareiss {a}, rational {b}", g.to_graph6()))?;
        singular += usize::from(a > 0);
    }
    Ok(format!("class sets n<=6 match; 100 random graphs ({singular} singular) agree on nullity"))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("small-order census", small_census),
        ("cubic census", cubic_census),
        ("quartic census", quartic_census),
        ("Fowler invariance", fowler_invariance),
        ("synthesis coverage", synthesis_coverage),
        ("antiprism theory", antiprism_theory),
        ("cycles and subdivision", cycles_and_subdivision),
        ("oracle equivalence", oracle_equivalence),
    ];
    let mut failed = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match &outcome {
            Ok(detail) => println!("criterion {}: PASS {name} [{secs:.1}s] {detail}", i + 1),
            Err(why) => {
                println!("criterion {}: FAIL {name} [{secs:.1}s] {why}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    if !failed.is_empty() {
        println!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
