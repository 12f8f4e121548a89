//! One PASS/FAIL line per acceptance criterion; exits nonzero if any fails.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use annigraph::invariants::{maximal_cliques, Girth};
use annigraph::theorems::corpus::weak2_spec;
use annigraph::theorems::{CorpusReport, Outcome, RingAnalysis};
use annigraph::{make_family, run_corpus, Family, InvariantReport, Limits, RingSpec, Shape};
use common::*;

type Check = std::result::Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn analyse(spec: RingSpec) -> RingAnalysis {
    RingAnalysis::new(spec.build().expect("ring builds"), &Limits::default()).expect("analysis")
}

fn criterion_1() -> Check {
    let start = Instant::now();
    let a = analyse(weak2_spec());
    let g = &a.ag;
    let want = ["(2)", "(x)", "(y)", "(y+z)"];
    let mut clique: Vec<usize> = want
        .iter()
        .map(|l| g.vertex_by_label(l).ok_or(format!("no vertex {l}")))
        .collect::<std::result::Result<_, _>>()?;
    clique.sort_unstable();
    ensure(a.ag_cliques.contains(&clique), || {
        "clique not maximal".into()
    })?;
    let omega = a.ag_report.clique_number;
    let chi = a.ag_report.chromatic_number;
    ensure(omega == Some(4) && chi == Some(4), || {
        format!("ω = {omega:?}, χ = {chi:?}")
    })?;
    ensure(brute_clique_number(g) == 4, || "ω oracle disagrees".into())?;
    let z = g.vertex_by_label("(z)").ok_or("no vertex (z)")?;
    let links = clique.iter().filter(|&&c| g.adjacent(c, z)).count();
    ensure(!clique.contains(&z) && links == 2, || {
        format!("(z) meets {links} clique vertices")
    })?;
    for &c in &clique {
        ensure(a.ag_report.is_s_vertex(c), || {
            format!("{} is not an S-vertex", g.label(c))
        })?;
        ensure(has_witness_through(g, c, z), || {
            format!("no (z)-witness for {}", g.label(c))
        })?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(10), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!(
        "clique {{(2),(x),(y),(y+z)}}, ω = χ = 4, (z) meets 2 of 4, {elapsed:.2?}"
    ))
}

fn criterion_2() -> Check {
    let z2 = RingSpec::zmod(2);
    let z4 = RingSpec::zmod(4);
    let cases = [
        (RingSpec::product(vec![z2.clone(), z2.clone()]), "K_{1,1}"),
        (RingSpec::product(vec![z2, z4.clone()]), "P_4"),
        (z4, "K_1"),
        (RingSpec::zmod(16), "K_{1,2}"),
    ];
    for (spec, want) in cases {
        let a = analyse(spec.clone());
        let shape = &a.ag_report.shape;
        ensure(shape.to_string() == want, || {
            format!("AG({}) is {shape}", spec.name)
        })?;
    }
    let a = analyse(RingSpec::product(vec![
        RingSpec::zmod(2),
        RingSpec::zmod(2),
    ]));
    ensure(a.ag_report.shape.is_k2(), || "AG(Z2xZ2) is not K2".into())?;
    let a = analyse(RingSpec::zmod(16));
    let Shape::Star { center, .. } = a.ag_report.shape else {
        return Err("AG(Z16) is not a star".into());
    };
    let z = a.zero_divisors.ideal.ok_or("Z(Z16) is not an ideal")?;
    ensure(
        a.ag.source(center) == a.lattice.annihilator(z) && a.ag.label(center) == "(8)",
        || format!("hub is {}", a.ag.label(center)),
    )?;
    Ok("K2, P4, K1, K_{1,2} with hub (8) = Ann(Z(R))".into())
}

fn criterion_3() -> Check {
    let corpus = load_default_corpus();
    let mut checked = 0;
    for spec in &corpus.rings {
        let a = RingAnalysis::new(
            spec.build_with(&corpus.limits).map_err(|e| e.to_string())?,
            &corpus.limits,
        )
        .map_err(|e| e.to_string())?;
        for (g, r) in [(&a.ag, &a.ag_report), (&a.zd, &a.zd_report)] {
            if g.is_empty() {
                continue;
            }
            checked += 1;
            let d = all_pairs(g);
            let diam = d
                .iter()
                .flatten()
                .map(|x| x.unwrap_or(usize::MAX))
                .max()
                .unwrap_or(0);
            ensure(r.connected && diam <= 3, || {
                format!("{}: diameter {diam}", g.name())
            })?;
            ensure(r.diameter.value() == Some(diam), || {
                format!("{}: diameter mismatch", g.name())
            })?;
            ensure(
                matches!(r.girth, Girth::Infinite) || matches!(r.girth.value(), Some(3 | 4)),
                || format!("{}: girth {}", g.name(), r.girth),
            )?;
        }
        ensure(a.ag_report.girth.value() != Some(4), || {
            format!("AG({}) has girth 4", spec.name)
        })?;
    }
    Ok(format!(
        "{} rings, {checked} nonempty graphs",
        corpus.rings.len()
    ))
}

fn criterion_4(report: &CorpusReport, elapsed: Duration) -> Check {
    let violations: Vec<_> = report.violations().collect();
    let mut problems = Vec::new();
    if !violations.is_empty() {
        let mut ids: Vec<&str> = violations.iter().map(|v| v.theorem_id.as_str()).collect();
        ids.dedup();
        problems.push(format!(
            "{} VIOLATED ({}), first: {}",
            violations.len(),
            ids.join(", "),
            violations[0]
        ));
    }
    if !report.failures.is_empty() {
        problems.push(format!(
            "{} subjects failed to build",
            report.failures.len()
        ));
    }
    for id in [
        "prop.bipartite_reduced",
        "thm.girthinf_reduced",
        "thm.complete_equivalence",
        "thm.diam2_equivalence",
    ] {
        let s = report.summary.get(id).copied().unwrap_or_default();
        if s.holds_true == 0 || s.holds_false == 0 {
            problems.push(format!(
                "{id} lacks coverage ({}/{})",
                s.holds_true, s.holds_false
            ));
        }
    }
    if elapsed >= Duration::from_secs(300) {
        problems.push(format!("took {elapsed:?}"));
    }
    let summary = format!(
        "{} subjects, {} verdicts, {elapsed:.2?}",
        report.subjects,
        report.verdicts.len()
    );
    if problems.is_empty() {
        Ok(summary)
    } else {
        Err(format!("{summary}; {}", problems.join("; ")))
    }
}

fn criterion_5() -> Check {
    let mut cases: Vec<(Family, Vec<usize>)> = Vec::new();
    for n in 1..=8 {
        cases.push((Family::Complete(n), vec![]));
        cases.push((Family::Star(n), vec![]));
    }
    for m in 1..=5 {
        for n in m..=5 {
            cases.push((Family::CompleteBipartite(m, n), vec![]));
        }
    }
    cases.push((Family::Cycle(4), vec![]));
    for a in 1..=4 {
        for b in a..=4 {
            cases.push((Family::Bistar(a, b), vec![0, 1]));
        }
    }
    for n in 5..=12 {
        cases.push((Family::Cycle(n), (0..n).collect()));
    }
    // complete r-partite: one part of size ≥ 2 makes every vertex outside
    // it an S-vertex; two such parts make every vertex one
    for parts in [
        vec![2, 1, 1],
        vec![3, 1, 1],
        vec![2, 2, 1],
        vec![3, 2, 1],
        vec![2, 1, 1, 1],
        vec![3, 3, 3],
        vec![1, 1, 1],
        vec![2, 2, 2, 2],
    ] {
        let total: usize = parts.iter().sum();
        let big = parts.iter().filter(|&&p| p >= 2).count();
        let want = match big {
            0 => vec![],
            1 => (parts[0]..total).collect(),
            _ => (0..total).collect(),
        };
        cases.push((Family::CompleteMultipartite(parts), want));
    }
    for s in 3..=5 {
        for t in 0..=s {
            let want = if (1..=s - 2).contains(&t) {
                (0..s).collect()
            } else if t == s - 1 {
                (0..t).collect()
            } else {
                vec![]
            };
            cases.push((
                Family::CliquePlusVertex {
                    clique: s,
                    attached: t,
                },
                want,
            ));
        }
    }
    let total = cases.len();
    for (f, want) in cases {
        let g = make_family(&f).map_err(|e| e.to_string())?;
        let got = InvariantReport::compute_basic(&g).s_vertex_set();
        ensure(got == want, || {
            format!("{f}: expected {want:?}, got {got:?}")
        })?;
        ensure(brute_s_vertices(&g) == want, || {
            format!("{f}: oracle disagrees")
        })?;
    }
    Ok(format!("{total} family instances"))
}

fn criterion_6() -> Check {
    let limits = Limits::default();
    for n in 2..=100u64 {
        let r = RingSpec::zmod(n).build().map_err(|e| e.to_string())?;
        let l = annigraph::enumerate_ideals(&r).map_err(|e| e.to_string())?;
        ensure(l.len() == divisor_count(n), || {
            format!("Z{n}: {} ideals", l.len())
        })?;
    }
    let corpus = load_default_corpus();
    let mut graphs = 0;
    for spec in corpus.rings.iter().filter(|s| s.name != "Z625") {
        let r = spec.build().map_err(|e| e.to_string())?;
        let l = annigraph::enumerate_ideals(&r).map_err(|e| e.to_string())?;
        let nil: std::collections::BTreeSet<usize> =
            l.ideal(annigraph::nilradical(&r, &l)).elements().collect();
        let mut meet: std::collections::BTreeSet<usize> = r.elements().collect();
        for p in l.primes() {
            meet.retain(|&x| l.ideal(p).contains(x));
        }
        ensure(meet == nil && brute_nilpotents(&r) == nil, || {
            format!("{}: nil(R)", r.name())
        })?;
        for i in 0..l.len() {
            let members: Vec<usize> = l.ideal(i).elements().collect();
            let ann: std::collections::BTreeSet<usize> =
                l.ideal(l.annihilator(i)).elements().collect();
            ensure(ann == brute_annihilator(&r, &members), || {
                format!("{}: Ann", r.name())
            })?;
        }
        let ag = annigraph::build_ag(&r, &l);
        if ag.order() <= 8 {
            graphs += 1;
            let chi =
                annigraph::invariants::chromatic_number(&ag, &limits).map_err(|e| e.to_string())?;
            ensure(chi == brute_chromatic(&ag), || format!("{}: χ", ag.name()))?;
        }
    }
    for f in &corpus.families {
        let g = make_family(f).map_err(|e| e.to_string())?;
        if g.order() <= 8 {
            graphs += 1;
            let chi =
                annigraph::invariants::chromatic_number(&g, &limits).map_err(|e| e.to_string())?;
            ensure(chi == brute_chromatic(&g), || format!("{f}: χ"))?;
        }
    }
    let rg = corpus.random_graphs.ok_or("no random graphs")?;
    for i in 0..rg.count {
        let g = annigraph::theorems::corpus::random_graph(&rg, i);
        if g.order() <= 8 {
            graphs += 1;
            let chi =
                annigraph::invariants::chromatic_number(&g, &limits).map_err(|e| e.to_string())?;
            ensure(chi == brute_chromatic(&g), || format!("{}: χ", g.name()))?;
        }
    }
    // product lattices: |L(A × B)| = |L(A)|·|L(B)|
    for (a, b) in [(4, 6), (8, 9), (12, 4), (9, 9)] {
        let la = annigraph::enumerate_ideals(&RingSpec::zmod(a).build().unwrap()).unwrap();
        let lb = annigraph::enumerate_ideals(&RingSpec::zmod(b).build().unwrap()).unwrap();
        let p = RingSpec::product(vec![RingSpec::zmod(a), RingSpec::zmod(b)])
            .build()
            .unwrap();
        let lp = annigraph::enumerate_ideals(&p).unwrap();
        ensure(lp.len() == la.len() * lb.len(), || {
            format!("{}: lattice size", p.name())
        })?;
    }
    Ok(format!(
        "divisors n ≤ 100, nil/Ann over corpus, χ on {graphs} graphs"
    ))
}

fn criterion_7(report: &CorpusReport) -> Check {
    let corpus = load_default_corpus();
    for id in ["thm.complete_equivalence", "thm.diam2_equivalence"] {
        for spec in &corpus.rings {
            let v = report
                .verdict(id, &spec.name)
                .ok_or(format!("{id} missing for {}", spec.name))?;
            let items = v
                .sides
                .iter()
                .filter(|s| !s.name.starts_with("hyp:"))
                .count();
            ensure(items == 3, || {
                format!("{id} on {}: {items} items", spec.name)
            })?;
        }
    }
    let s = report
        .summary
        .get("corollary.girth_not_4")
        .copied()
        .unwrap_or_default();
    ensure(s.violated == 0 && s.holds > 0, || {
        "girth-4 corollary".into()
    })?;
    for m in 1..=5 {
        for n in m..=5 {
            let name = Family::CompleteBipartite(m, n).to_string();
            let v = report
                .verdict("thm.bipart.2", &name)
                .ok_or(format!("thm.bipart.2 missing for {name}"))?;
            ensure(v.verdict == Outcome::Holds, || format!("{v}"))?;
        }
    }
    for d in 2..=4 {
        let g = annigraph::theorems::corpus::figure1_graph(d);
        let r = InvariantReport::compute_basic(&g);
        ensure(
            matches!(r.shape, Shape::Figure1 { .. }) && r.girth.value() == Some(4),
            || format!("{}: {} girth {}", g.name(), r.shape, r.girth),
        )?;
        let limits = Limits::default();
        let full = InvariantReport::compute(&g, &limits).map_err(|e| e.to_string())?;
        let cliques = maximal_cliques(&g, &limits).map_err(|e| e.to_string())?;
        for v in annigraph::theorems::graph_verdicts(&g, &full, Some(&cliques), None) {
            ensure(!v.is_violated(), || format!("{v}"))?;
        }
    }
    Ok("base-ring items (1), (5), (9); girth ≠ 4 corpus-wide; synthetic bipartite and Figure 1 analogues".into())
}

fn main() -> ExitCode {
    let corpus = load_default_corpus();
    let start = Instant::now();
    let report = run_corpus(&corpus, 1).expect("corpus runs");
    let elapsed = start.elapsed();

    let results: Vec<(usize, &str, Check)> = vec![
        (1, "weak2 clique, ω = χ = 4, S-vertices", criterion_1()),
        (2, "named small graphs", criterion_2()),
        (3, "global diameter and girth bounds", criterion_3()),
        (4, "theorem corpus gate", criterion_4(&report, elapsed)),
        (5, "S-vertex families", criterion_5()),
        (6, "oracle equivalences", criterion_6()),
        (7, "substituted statements", criterion_7(&report)),
    ];
    let mut failed = 0;
    for (n, title, r) in &results {
        match r {
            Ok(detail) => println!("PASS criterion {n}: {title} — {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {n}: {title} — {why}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
