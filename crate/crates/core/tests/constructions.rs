mod common;

use nutgraph::catalog::{self, CUBIC28_AS_DRAWN_EDGES};
use nutgraph::constructions::{
    antiprism, antiprism_eigenvalue, antiprism_propagate, circulant, circulant_eigenvalues, cycle, fowler,
    CirculantSpec, ConstructionError, LinearForm,
};
use nutgraph::synthesis::{certify, construct_regular_nut, membership, plan, Membership, SynthesisError};
use nutgraph::{classify, kernel, ClassTag, Graph};

use common::reference_member;

#[test]
fn antiprism_symbolic_prefix() {
    let printed = [
        "a", "b", "c", "d", "(-a-b-d)", "(a-c+d)", "(-a-2d)", "(2a+b+2d)", "(-2a+c-2d)", "(2a+3d)", "(-3a-b-3d)",
        "(3a-c+3d)", "(-3a-4d)", "(4a+b+4d)", "(-4a+c-4d)", "(4a+5d)", "(-5a-b-5d)", "(5a-c+5d)",
    ];
    for n in [9, 12, 20] {
        let (x, _) = antiprism_propagate(n).unwrap();
        assert_eq!(x.len(), 2 * n);
        let shown: Vec<String> = x[..printed.len()].iter().map(LinearForm::to_string).collect();
        assert_eq!(shown, printed, "n={n}");
    }
}

#[test]
fn propagated_forms_solve_the_system_on_q_kernel() {
    // any (a,b,c,d) in ker Q extends to a kernel vector of A_n
    for n in 3..=15 {
        let (x, q) = antiprism_propagate(n).unwrap();
        let g = antiprism(n).unwrap();
        let params: [[i64; 4]; 2] = if n % 3 == 0 { [[1, 0, 0, -1], [2, 5, -3, -2]] } else { [[1, -1, 1, -1], [3, -3, 3, -3]] };
        for p in params {
            assert!(q.iter().all(|row| row.iter().zip(p).map(|(a, b)| a * b).sum::<i64>() == 0));
            let v: Vec<i64> = x.iter().map(|f| f.eval(p)).collect();
            assert!(g.annihilates(&common::big(&v)), "n={n} p={p:?}");
        }
    }
}

#[test]
fn antiprism_eigenvalue_closed_form() {
    for n in 3..=24 {
        let ev = circulant_eigenvalues(&CirculantSpec::antiprism(n).unwrap());
        for (r, l) in ev.iter().enumerate() {
            assert!((l - antiprism_eigenvalue(n, r)).abs() < 1e-9, "n={n} r={r}");
        }
    }
}

#[test]
fn antiprism_classes() {
    for n in 3..=12 {
        let want = if n % 3 == 0 { ClassTag::CoreNonNut } else { ClassTag::Nut };
        let g = antiprism(n).unwrap();
        assert!(g.is_regular(4) && g.is_connected());
        assert_eq!(classify(&g).tag, want, "A_{n}");
    }
    assert_eq!(
        antiprism(2),
        Err(ConstructionError::OrderTooSmall {
            family: "antiprism",
            n: 2,
            min: 3
        })
    );
}

#[test]
fn catalog_antiprism_is_a4() {
    let seed = catalog::seed("antiprism4").unwrap().graph;
    assert_eq!(seed.canonical_form(), antiprism(4).unwrap().canonical_form());
}

#[test]
fn cubic28_as_drawn_differs_from_the_seed() {
    let drawn = Graph::new(28, CUBIC28_AS_DRAWN_EDGES).unwrap();
    assert_eq!(kernel(&drawn).nullity, 0);
    let seed = catalog::seed("cubic28").unwrap().graph;
    assert_eq!(seed.canonical_form(), fowler(&catalog::seed("cubic22").unwrap().graph, 0).unwrap().canonical_form());
}

#[test]
fn seeds_round_trip_through_graph6() {
    for s in catalog::all_seeds() {
        assert_eq!(s.graph.to_graph6(), s.graph6);
        assert_eq!(Graph::from_graph6(s.graph6).unwrap(), s.graph);
    }
    assert!(catalog::seed("petersen").is_err());
}

#[test]
fn circulants() {
    let k5 = circulant(&CirculantSpec::new(5, &[1, 2]).unwrap());
    assert_eq!(k5.size(), 10);
    assert_eq!(classify(&k5).tag, ClassTag::NonSingular);
    let spec = CirculantSpec::new(10, &[2, 5, 1]).unwrap();
    assert_eq!(spec.offsets(), &[1, 2, 5]);
    let g = circulant(&spec);
    assert!(g.is_regular(5));
    let zeros = circulant_eigenvalues(&spec).iter().filter(|l| l.abs() < 1e-9).count();
    assert_eq!(zeros, kernel(&g).nullity);
}

#[test]
fn cycle_classes() {
    for n in 3..=32 {
        let c = classify(&cycle(n).unwrap());
        let want = if n % 4 == 0 { ClassTag::CoreNonNut } else { ClassTag::NonSingular };
        assert_eq!(c.tag, want, "C_{n}");
        assert_eq!(c.nullity(), if n % 4 == 0 { 2 } else { 0 });
    }
}

#[test]
fn membership_edges() {
    assert!(matches!(membership(2, 8), Membership::NonMember(r) if r.contains("degree two")));
    assert!(matches!(membership(5, 20), Membership::Unknown(r) if r.starts_with("open problem")));
    assert!(matches!(membership(0, 1), Membership::NonMember(_)));
    assert!(matches!(membership(1, 2), Membership::NonMember(_)));
    assert!(matches!(membership(7, 100), Membership::Unknown(_)));
    for rho in 2..=4 {
        for n in 1..=200 {
            assert_eq!(membership(rho, n).is_member(), reference_member(rho, n), "({rho},{n})");
        }
    }
}

#[test]
fn seed_residues_cover_every_member() {
    for rho in [3, 4] {
        for n in 1..=200 {
            if reference_member(rho, n) {
                let p = plan(rho, n).unwrap();
                assert_eq!(p.seed_order + p.steps * 2 * rho, n);
                assert_eq!(p.vertex_rule, "vertex 0");
            }
        }
    }
}

#[test]
fn constructions_are_deterministic_and_certified() {
    for (rho, n) in [(3, 18), (3, 24), (3, 40), (4, 8), (4, 14), (4, 23), (4, 31)] {
        let (g, cert, _) = construct_regular_nut(rho, n).unwrap();
        let (h, _, _) = construct_regular_nut(rho, n).unwrap();
        assert_eq!(g.to_graph6(), h.to_graph6());
        assert!(cert.verify(&g));
        let report = certify(&g, rho);
        assert!(report.is_regular_nut() && report.order == n, "({rho},{n})");
    }
    assert_eq!(plan(3, 18).unwrap().seed_name, "frucht");
    assert_eq!(plan(4, 8).unwrap().steps, 0);
    assert!(matches!(construct_regular_nut(5, 20), Err(SynthesisError::Unknown { .. })));
    assert!(matches!(construct_regular_nut(3, 14), Err(SynthesisError::NonMember { .. })));
}

#[test]
fn certify_examples() {
    let c6 = certify(&cycle(6).unwrap(), 2);
    assert!(c6.regular && c6.class == ClassTag::NonSingular && c6.certificate.is_none());
    let frucht = certify(&catalog::seed("frucht").unwrap().graph, 4);
    assert!(!frucht.regular && frucht.class == ClassTag::Nut);
    assert!(!frucht.is_regular_nut());
}
