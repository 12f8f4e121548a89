mod common;

use std::collections::{BTreeMap, BTreeSet};

use annigraph::invariants::{chromatic_number, clique_number, diameter, girth, Diameter};
use annigraph::theorems::corpus::random_graph;
use annigraph::{
    build_ag, build_zd, enumerate_ideals, make_family, nilradical, zero_divisor_set, FiniteRing,
    InvariantReport, Limits, RingSpec, SimpleGraph,
};
use common::*;

fn ring(spec: RingSpec) -> FiniteRing {
    spec.build().unwrap()
}

fn member_list(lattice: &annigraph::IdealLattice, i: usize) -> Vec<usize> {
    lattice.ideal(i).elements().collect()
}

#[test]
fn zmod_ideal_counts_are_divisor_counts() {
    for n in 2..=100u64 {
        let r = ring(RingSpec::zmod(n));
        let lattice = enumerate_ideals(&r).unwrap();
        assert_eq!(lattice.len(), divisor_count(n), "Z{n}");
        // every ideal of Z_n is principal
        let principal = brute_principal_ideals(&r);
        let all: BTreeSet<Vec<usize>> = (0..lattice.len())
            .map(|i| member_list(&lattice, i))
            .collect();
        assert_eq!(all, principal, "Z{n}");
    }
}

#[test]
fn product_lattice_is_cartesian() {
    let factors = [
        RingSpec::zmod(4),
        RingSpec::zmod(6),
        RingSpec::zmod(8),
        RingSpec::zmod(9),
        RingSpec::poly_quotient(2, vec![0, 0, 1]),
        RingSpec::poly_quotient(2, vec![1, 1, 1]).with_name("F4"),
    ];
    for a in &factors {
        for b in &factors {
            let (ra, rb) = (ring(a.clone()), ring(b.clone()));
            let prod = ring(RingSpec::product(vec![a.clone(), b.clone()]));
            let (la, lb, lp) = (
                enumerate_ideals(&ra).unwrap(),
                enumerate_ideals(&rb).unwrap(),
                enumerate_ideals(&prod).unwrap(),
            );
            assert_eq!(lp.len(), la.len() * lb.len(), "{}", prod.name());
            let by_label: BTreeMap<&str, usize> = prod
                .labels()
                .iter()
                .enumerate()
                .map(|(i, l)| (l.as_str(), i))
                .collect();
            let mut found = BTreeSet::new();
            for i in 0..la.len() {
                for j in 0..lb.len() {
                    let mut members = Vec::new();
                    for x in la.ideal(i).elements() {
                        for y in lb.ideal(j).elements() {
                            let l = format!("({},{})", ra.label(x), rb.label(y));
                            members.push(by_label[l.as_str()]);
                        }
                    }
                    let ideal = prod.ideal_from_members(members).unwrap();
                    found.insert(lp.position(&ideal).expect("I × J is in the lattice"));
                }
            }
            assert_eq!(found.len(), lp.len());
        }
    }
}

#[test]
fn nilradical_is_intersection_of_primes() {
    let corpus = load_default_corpus();
    for spec in corpus.rings.iter().filter(|s| s.name != "Z625") {
        let r = spec.build().unwrap();
        let lattice = enumerate_ideals(&r).unwrap();
        let mut meet: BTreeSet<usize> = r.elements().collect();
        for p in lattice.primes() {
            let members: BTreeSet<usize> = lattice.ideal(p).elements().collect();
            meet = &meet & &members;
        }
        let nil: BTreeSet<usize> = lattice.ideal(nilradical(&r, &lattice)).elements().collect();
        assert_eq!(meet, nil, "{}", r.name());
        assert_eq!(brute_nilpotents(&r), nil, "{}", r.name());
    }
}

#[test]
fn annihilators_match_scans() {
    let corpus = load_default_corpus();
    for spec in corpus.rings.iter().filter(|s| s.name != "Z625") {
        let r = spec.build().unwrap();
        let lattice = enumerate_ideals(&r).unwrap();
        for i in 0..lattice.len() {
            let members = member_list(&lattice, i);
            let ann: BTreeSet<usize> = lattice.ideal(lattice.annihilator(i)).elements().collect();
            assert_eq!(
                ann,
                brute_annihilator(&r, &members),
                "{} ideal {i}",
                r.name()
            );
        }
        let zd = zero_divisor_set(&r, &lattice);
        for a in r.elements() {
            let brute = r
                .elements()
                .any(|b| b != r.zero() && r.mul(a, b) == r.zero());
            assert_eq!(zd.contains(a), brute, "{} element {a}", r.name());
        }
    }
}

fn small_graphs() -> Vec<SimpleGraph> {
    let corpus = load_default_corpus();
    let mut out: Vec<SimpleGraph> = corpus
        .families
        .iter()
        .map(|f| make_family(f).unwrap())
        .filter(|g| g.order() <= 8)
        .collect();
    out.extend(
        corpus
            .graphs
            .iter()
            .map(|e| e.build().unwrap())
            .filter(|g| g.order() <= 8),
    );
    let r = corpus.random_graphs.unwrap();
    out.extend(
        (0..r.count)
            .map(|i| random_graph(&r, i))
            .filter(|g| g.order() <= 8),
    );
    for spec in &corpus.rings {
        let rg = spec.build().unwrap();
        let ag = build_ag(&rg, &enumerate_ideals(&rg).unwrap());
        if ag.order() <= 8 {
            out.push(ag);
        }
        if rg.order() <= 16 {
            let zd = build_zd(&rg);
            if zd.order() <= 8 {
                out.push(zd);
            }
        }
    }
    out
}

#[test]
fn coloring_and_cliques_match_brute_force() {
    let limits = Limits::default();
    let graphs = small_graphs();
    assert!(graphs.len() > 300);
    for g in &graphs {
        assert_eq!(
            chromatic_number(g, &limits).unwrap(),
            brute_chromatic(g),
            "{}",
            g.name()
        );
        assert_eq!(
            clique_number(g, &limits).unwrap(),
            brute_clique_number(g),
            "{}",
            g.name()
        );
    }
}

#[test]
fn s_vertices_match_brute_force() {
    for g in small_graphs() {
        let report = InvariantReport::compute_basic(&g);
        assert_eq!(report.s_vertex_set(), brute_s_vertices(&g), "{}", g.name());
    }
}

#[test]
fn metrics_match_floyd_warshall() {
    for g in small_graphs() {
        let d = all_pairs(&g);
        let n = g.order();
        let reach = (0..n).all(|i| (0..n).all(|j| d[i][j].is_some()));
        let expected = (0..n).flat_map(|i| d[i].iter().flatten().copied()).max();
        match diameter(&g) {
            Diameter::Undefined => assert_eq!(n, 0),
            Diameter::Infinite { .. } => assert!(!reach, "{}", g.name()),
            Diameter::Finite { value, .. } => {
                assert!(reach);
                assert_eq!(Some(value), expected, "{}", g.name());
            }
        }
        // girth: shortest cycle through an edge (u, v) is d'(u, v) + 1 with
        // the edge removed
        let mut best: Option<usize> = None;
        for (u, v) in g.edges() {
            let mut h = g.clone();
            h.remove_edge(u, v);
            if let Some(k) = all_pairs(&h)[u][v] {
                best = Some(best.map_or(k + 1, |b: usize| b.min(k + 1)));
            }
        }
        assert_eq!(girth(&g).value(), best, "{}", g.name());
    }
}
