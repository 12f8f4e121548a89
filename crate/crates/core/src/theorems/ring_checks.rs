//! Checks evaluated on a ring through its lattice, `AG(R)` and `Γ(R)`.

use crate::invariants::{Diameter, Girth, InvariantReport, Shape};
use crate::theorems::analysis::RingAnalysis;
use crate::theorems::verdict::{equivalence, implication, side, TheoremVerdict};

pub fn ring_verdicts(a: &RingAnalysis) -> Vec<TheoremVerdict> {
    let mut out = vec![
        bounds("bounds.ag", a.ag.name(), &a.ag_report),
        bounds("bounds.zd", a.zd.name(), &a.zd_report),
        equivalence(
            "ag_empty_iff_domain",
            a.name(),
            &[],
            vec![
                side("AG empty", a.ag.is_empty()),
                side("integral domain", a.ring.is_integral_domain()),
            ],
        ),
        complete_equivalence(a),
        diam2_equivalence(a),
        lemma_p1_cap_p2(a),
        bipartite_reduced(a),
        girth4_reduced(a),
        girthinf_reduced(a),
    ];
    out.extend(girthinf_nonreduced(a));
    out.push(girth4_nonreduced(a));
    out.push(no_girth_four(a));
    out.push(clique_svertices(a));
    out.push(lemma_direct(a));
    out.extend(artinian(a));
    out.extend(lemma_red(a));
    out.extend(reduced_svertex(a));
    out.extend(remark_diameter(a));
    out.push(bipart_one(a));
    out
}

fn girth_is(r: &InvariantReport, k: usize) -> bool {
    r.girth.value() == Some(k)
}

fn diam_is(r: &InvariantReport, k: usize) -> bool {
    r.diameter.value() == Some(k)
}

fn nonempty_acyclic(r: &InvariantReport) -> bool {
    r.vertices > 0 && r.girth.is_infinite()
}

fn is_k2(r: &InvariantReport) -> bool {
    r.vertices == 2 && r.edges == 1
}

fn is_complete(r: &InvariantReport) -> bool {
    r.edges == r.vertices * r.vertices.saturating_sub(1) / 2
}

fn bounds(id: &str, subject: &str, r: &InvariantReport) -> TheoremVerdict {
    let girth_ok = matches!(r.girth, Girth::Infinite) || matches!(r.girth.value(), Some(3 | 4));
    let diam_ok = matches!(r.diameter, Diameter::Finite { value, .. } if value <= 3);
    implication(
        id,
        subject,
        side("nonempty", r.vertices > 0),
        side(
            "connected, diam ≤ 3, girth ∈ {3, 4, ∞}",
            r.connected && diam_ok && girth_ok,
        ),
        || {
            format!(
                "connected={}, diam={}, girth={}",
                r.connected, r.diameter, r.girth
            )
        },
    )
}

fn not_k2(a: &RingAnalysis) -> crate::theorems::verdict::Side {
    side("AG ≇ K2", !is_k2(&a.ag_report))
}

fn complete_equivalence(a: &RingAnalysis) -> TheoremVerdict {
    let v = equivalence(
        "thm.complete_equivalence",
        a.name(),
        &[not_k2(a)],
        vec![
            side("AG complete", is_complete(&a.ag_report)),
            side("Γ complete", is_complete(&a.zd_report)),
            side("Z(R)² = 0", a.profile.zsq_zero),
        ],
    );
    if a.ag.is_empty() {
        v.with_note("empty graphs count as complete")
    } else {
        v
    }
}

fn diam2_equivalence(a: &RingAnalysis) -> TheoremVerdict {
    equivalence(
        "thm.diam2_equivalence",
        a.name(),
        &[side("Noetherian", true), not_k2(a)],
        vec![
            side("diam(AG) = 2", diam_is(&a.ag_report, 2)),
            side("diam(Γ) = 2", diam_is(&a.zd_report, 2)),
            side(
                "Z(R) = P1 ∪ P2 with P1 ∩ P2 = 0, or Z(R) prime with Z(R)² ≠ 0",
                a.profile.diameter_two_condition(),
            ),
        ],
    )
}

fn lemma_p1_cap_p2(a: &RingAnalysis) -> TheoremVerdict {
    let cover = a
        .zero_divisors
        .prime_cover
        .as_ref()
        .filter(|c| c.len() == 2);
    let premise = diam_is(&a.ag_report, 2) && cover.is_some();
    let meet = cover.map(|c| a.lattice.intersection(c[0], c[1]));
    implication(
        "lemma.p1_cap_p2_zero",
        a.name(),
        side("diam(AG) = 2 and Z(R) = P1 ∪ P2", premise),
        side("P1 ∩ P2 = 0", meet == Some(a.lattice.zero_index())),
        || {
            let c = cover.expect("premise holds");
            format!(
                "P1 = {}, P2 = {}, P1 ∩ P2 = {}",
                a.lattice.label(&a.ring, c[0]),
                a.lattice.label(&a.ring, c[1]),
                a.lattice.label(&a.ring, meet.expect("cover exists"))
            )
        },
    )
}

fn reduced(a: &RingAnalysis) -> crate::theorems::verdict::Side {
    side("reduced", a.reduced)
}

fn non_reduced(a: &RingAnalysis) -> crate::theorems::verdict::Side {
    side("non-reduced", !a.reduced)
}

fn bipartite_reduced(a: &RingAnalysis) -> TheoremVerdict {
    equivalence(
        "prop.bipartite_reduced",
        a.name(),
        &[reduced(a)],
        vec![
            side(
                "Z(R) = P1 ∪ P2 with P1 ∩ P2 = 0",
                a.profile.z_union_two_primes_meet_zero,
            ),
            side(
                "AG complete bipartite",
                a.ag_report.shape.is_complete_bipartite(),
            ),
        ],
    )
}

fn girth4_reduced(a: &RingAnalysis) -> TheoremVerdict {
    let counts_ok = a
        .profile
        .sub_ideal_counts
        .is_some_and(|(p, q)| p >= 3 && q >= 3);
    equivalence(
        "thm.girth4_reduced",
        a.name(),
        &[reduced(a)],
        vec![
            side("gr(AG) = 4", girth_is(&a.ag_report, 4)),
            side(
                "AG ≅ K_{m,n}, m, n ≥ 2",
                matches!(a.ag_report.shape, Shape::CompleteBipartite { .. }),
            ),
            side(
                "Z(R) = P1 ∪ P2, P1 ∩ P2 = 0, |𝕀(P1)|, |𝕀(P2)| ≥ 3",
                a.profile.z_union_two_primes_meet_zero && counts_ok,
            ),
        ],
    )
}

fn girthinf_reduced(a: &RingAnalysis) -> TheoremVerdict {
    let n = a.ag.order();
    let universal = (0..n).any(|v| a.ag.degree(v) == n - 1);
    let field_times_domain = a
        .splittings
        .iter()
        .any(|s| s.left.is_field && s.right.is_domain);
    equivalence(
        "thm.girthinf_reduced",
        a.name(),
        &[reduced(a)],
        vec![
            side("AG nonempty, gr(AG) = ∞", nonempty_acyclic(&a.ag_report)),
            side("a vertex adjacent to every other vertex", universal),
            side("R ≅ K × D", field_times_domain),
            side("AG star", a.ag_report.shape.is_star()),
        ],
    )
}

/// Ideal index of `Ann(Z(R))` when `Z(R)` is an annihilating ideal.
fn ann_of_z(a: &RingAnalysis) -> Option<usize> {
    let z = a.zero_divisors.ideal?;
    a.lattice
        .is_annihilating(z)
        .then(|| a.lattice.annihilator(z))
}

/// `Z(R)` is an annihilating ideal and every edge of `AG` meets `Ann(Z(R))`.
fn condition_2c(a: &RingAnalysis) -> bool {
    ann_of_z(a).is_some_and(|hub| {
        a.ag.edges()
            .iter()
            .all(|&(u, v)| a.ag.source(u) == hub || a.ag.source(v) == hub)
    })
}

fn girthinf_nonreduced(a: &RingAnalysis) -> Vec<TheoremVerdict> {
    let c2a = a.has_single_annihilating_ideal();
    let c2b = a
        .splittings
        .iter()
        .any(|s| s.left.is_field && s.right.annihilating_ideals == 1);
    let c2c = condition_2c(a);
    let shape = &a.ag_report.shape;
    let small_shape = matches!(shape, Shape::K1 | Shape::Star { .. })
        || matches!(shape, Shape::Path { vertices } if vertices.len() == 4);
    let main = equivalence(
        "thm.girthinf_nonreduced",
        a.name(),
        &[non_reduced(a)],
        vec![
            side("AG nonempty, gr(AG) = ∞", nonempty_acyclic(&a.ag_report)),
            side("(2a) or (2b) or (2c)", c2a || c2b || c2c),
            side("AG ≅ K1, P4 or K_{1,n}", small_shape),
        ],
    )
    .with_note(format!("2a={c2a}, 2b={c2b}, 2c={c2c}"));
    let star_like = matches!(shape, Shape::K1 | Shape::Star { .. });
    let local = equivalence(
        "thm.girthinf_nonreduced.c",
        a.name(),
        &[
            non_reduced(a),
            side("Z(R) ideal", a.zero_divisors.is_ideal()),
        ],
        vec![side("(2c)", c2c), side("AG ≅ K1 or K_{1,n}", star_like)],
    );
    vec![main, local]
}

fn girth4_nonreduced(a: &RingAnalysis) -> TheoremVerdict {
    let split = a
        .splittings
        .iter()
        .any(|s| s.left.annihilating_ideals == 1 && s.right.is_domain && !s.right.is_field);
    equivalence(
        "thm.girth4_nonreduced",
        a.name(),
        &[non_reduced(a)],
        vec![
            side("AG nonempty, gr(AG) = 4", girth_is(&a.ag_report, 4)),
            side(
                "R ≅ R1 × D, |A(R1)*| = 1, D a domain but not a field",
                split,
            ),
            side(
                "AG ≅ Figure 1",
                matches!(a.ag_report.shape, Shape::Figure1 { .. }),
            ),
        ],
    )
}

/// Finite domains are fields, so no finite ring reaches girth 4 in `AG`.
fn no_girth_four(a: &RingAnalysis) -> TheoremVerdict {
    let r = &a.ag_report;
    implication(
        "corollary.girth_not_4",
        a.name(),
        side("AG nonempty", r.vertices > 0),
        side(
            "gr(AG) ≠ 4, AG not Figure 1",
            !girth_is(r, 4) && !matches!(r.shape, Shape::Figure1 { .. }),
        ),
        || format!("girth {}, shape {}", r.girth, r.shape),
    )
}

/// Maximal cliques `{I_1..I_n}`, `n ≥ 3`, meeting one of the four
/// conditions must consist of S-vertices. The weaker count reading
/// (`|S(AG)| ≥ n`) is noted whenever the two disagree.
fn clique_svertices(a: &RingAnalysis) -> TheoremVerdict {
    let g = &a.ag;
    let lat = &a.lattice;
    let sq_nonzero = |v: usize| !g.is_square_zero(v);
    // I_j ⊄ I_i
    let escapes = |j: usize, i: usize| !lat.contains(g.source(i), g.source(j));
    let qualifies = |c: &Vec<usize>| -> bool {
        c.len() >= 3
            && (a.reduced
                || c.iter().any(|&i| {
                    sq_nonzero(i)
                        && c.iter()
                            .any(|&j| j != i && (sq_nonzero(j) || escapes(j, i)))
                }))
    };
    let qualifying: Vec<&Vec<usize>> = a.ag_cliques.iter().filter(|c| qualifies(c)).collect();
    let s_count = a.ag_report.s_vertices.len();
    let non_s = |c: &Vec<usize>| -> Vec<usize> {
        c.iter()
            .copied()
            .filter(|&x| !a.ag_report.is_s_vertex(x))
            .collect()
    };
    let offender = qualifying.iter().find(|c| !non_s(c).is_empty());
    let mut v = implication(
        "prop.clique_svertices",
        a.name(),
        side(
            "maximal clique, n ≥ 3, meeting one of conditions (1)-(4)",
            !qualifying.is_empty(),
        ),
        side(
            "every vertex of such a clique is an S-vertex",
            offender.is_none(),
        ),
        || {
            let c = offender.expect("an offending clique");
            format!(
                "clique {} has non-S members {}",
                a.ag_labels(c),
                a.ag_labels(&non_s(c))
            )
        },
    );
    if let Some(c) = offender {
        if s_count >= c.len() {
            v = v.with_note(format!(
                "count reading holds: {s_count} S-vertices ≥ {}",
                c.len()
            ));
        }
    }
    v
}

fn lemma_direct(a: &RingAnalysis) -> TheoremVerdict {
    let no_s = !a.ag_report.has_s_vertex();
    let decomposable = a.primitive_idempotents >= 2;
    let conclusion = a.primitive_idempotents == 2
        && a.splittings
            .iter()
            .all(|s| s.left.is_domain && s.right.is_domain);
    implication(
        "lemma.direct",
        a.name(),
        side(
            "R a product of ≥ 2 rings, AG without S-vertices",
            decomposable && no_s,
        ),
        side("exactly two factors, both domains", conclusion),
        || format!("{} local factors", a.primitive_idempotents),
    )
}

fn artinian(a: &RingAnalysis) -> Vec<TheoremVerdict> {
    let one = equivalence(
        "prop.artinian.1",
        a.name(),
        &[side("Artinian", true), side("non-local", !a.is_local())],
        vec![
            side("AG without S-vertices", !a.ag_report.has_s_vertex()),
            side("R ≅ F1 × F2", a.is_product_of_two_fields()),
        ],
    );
    let two = implication(
        "prop.artinian.2",
        a.name(),
        side("gr(AG) = 4", girth_is(&a.ag_report, 4)),
        side("non-local", !a.is_local()),
        || "local ring with girth 4".to_string(),
    );
    vec![one, two]
}

fn lemma_red(a: &RingAnalysis) -> Vec<TheoremVerdict> {
    let s_ag = a.ag_report.s_vertex_set();
    let s_zd = a.zd_report.s_vertex_set();
    let existence = implication(
        "lemma.red.existence",
        a.name(),
        side("reduced, Γ has an S-vertex", a.reduced && !s_zd.is_empty()),
        side("AG has an S-vertex", !s_ag.is_empty()),
        || format!("S(Γ) = {}", a.zd_labels(&s_zd)),
    );
    let count = implication(
        "lemma.red.count",
        a.name(),
        reduced(a),
        side("|S(Γ)| ≤ |S(AG)|", s_zd.len() <= s_ag.len()),
        || {
            format!(
                "|S(Γ)| = {} > |S(AG)| = {}; S(Γ) = {}, S(AG) = {}",
                s_zd.len(),
                s_ag.len(),
                a.zd_labels(&s_zd),
                a.ag_labels(&s_ag)
            )
        },
    );
    vec![existence, count]
}

fn reduced_svertex(a: &RingAnalysis) -> Vec<TheoremVerdict> {
    let ag_s = a.ag_report.has_s_vertex();
    let zd_s = a.zd_report.has_s_vertex();
    let minimal = a.lattice.minimal_primes().len();
    let no_s_witness = || {
        a.ag_report
            .s_vertices
            .first()
            .map(|w| format!("{} is an S-vertex", a.ag.label(w.vertex)))
            .unwrap_or_default()
    };
    vec![
        implication(
            "thm.reduced_svertex.1",
            a.name(),
            side("reduced, ≥ 3 minimal primes", a.reduced && minimal >= 3),
            side("Γ and AG have S-vertices", ag_s && zd_s),
            || format!("{minimal} minimal primes, S in AG: {ag_s}, S in Γ: {zd_s}"),
        ),
        implication(
            "thm.reduced_svertex.2",
            a.name(),
            side(
                "reduced, Z(R) = P1 ∪ P2 with P1 ∩ P2 = 0",
                a.reduced && a.profile.z_union_two_primes_meet_zero,
            ),
            side("AG without S-vertices", !ag_s),
            no_s_witness,
        ),
        implication(
            "thm.reduced_svertex.3",
            a.name(),
            side(
                "reduced, gr(AG) = 4",
                a.reduced && girth_is(&a.ag_report, 4),
            ),
            side("AG without S-vertices", !ag_s),
            no_s_witness,
        ),
        implication(
            "thm.reduced_svertex.4",
            a.name(),
            side(
                "reduced, AG nonempty with gr(AG) = ∞",
                a.reduced && nonempty_acyclic(&a.ag_report),
            ),
            side("AG without S-vertices", !ag_s),
            no_s_witness,
        ),
    ]
}

fn remark_diameter(a: &RingAnalysis) -> Vec<TheoremVerdict> {
    let ag = &a.ag_report;
    let zd = &a.zd_report;
    vec![
        implication(
            "remark.diam_no_svertex.ag",
            a.name(),
            side("AG without S-vertices", !ag.has_s_vertex()),
            side(
                "diam(AG) ≤ 2 and diam(Γ) ≤ 2",
                ag.diameter.at_most(2) && zd.diameter.at_most(2),
            ),
            || format!("diam(AG) = {}, diam(Γ) = {}", ag.diameter, zd.diameter),
        ),
        implication(
            "remark.diam_no_svertex.zd",
            a.name(),
            side("Γ without S-vertices", !zd.has_s_vertex()),
            side("diam(Γ) ≤ 2", zd.diameter.at_most(2)),
            || format!("diam(Γ) = {}", zd.diameter),
        ),
    ]
}

/// A 4-cycle through a vertex `I` with `I² ≠ 0`.
fn four_cycle_through_nonnilpotent(a: &RingAnalysis) -> bool {
    let g = &a.ag;
    (0..g.order()).filter(|&i| !g.is_square_zero(i)).any(|i| {
        let nbrs: Vec<usize> = g.neighbors(i).ones().collect();
        nbrs.iter().enumerate().any(|(k, &j)| {
            nbrs[k + 1..].iter().any(|&l| {
                let mut common = g.neighbors(j).clone();
                common.intersect_with(g.neighbors(l));
                common.set(i, false);
                common.count_ones(..) > 0
            })
        })
    })
}

fn bipart_one(a: &RingAnalysis) -> TheoremVerdict {
    let premise = girth_is(&a.ag_report, 4)
        && four_cycle_through_nonnilpotent(a)
        && !a.ag_report.has_s_vertex();
    implication(
        "thm.bipart.1",
        a.name(),
        side(
            "gr(AG) = 4 via a cycle through I with I² ≠ 0, no S-vertices",
            premise,
        ),
        side(
            "AG complete bipartite",
            a.ag_report.shape.is_complete_bipartite(),
        ),
        || format!("shape {}", a.ag_report.shape),
    )
}
