use std::collections::BTreeSet;

use super::figures::FIGURES;
use super::{Claim, Context, Outcome, Witness};
use crate::arith::Factorization;
use crate::builders::{build, build_sii};
use crate::graph::{find_isomorphism, verify_map_isomorphism, Extended, GraphKind, IdealGraph};
use crate::ring::{Ideal, RingSpec};
use crate::{PredicateMode, Result};

/// Upper bound on component permutations tried per ring.
const MAX_PERMUTATIONS: usize = 120;

pub(super) static REGISTRY: &[Claim] = &[
    Claim {
        id: "D-sii",
        statement: "closed-form and element-level edge predicates give the same SII, PIS and intersection graphs",
        scope: "rings with at least one vertex and order within the oracle cap",
        check: d_sii,
    },
    Claim {
        id: "E-fig",
        statement: "SII and PIS edge sets of Z_24, Z_36, Z_30, Z_12, Z_18 equal the reference drawings; SII(Z_12) and SII(Z_18) are isomorphic",
        scope: "Z_12, Z_18, Z_24, Z_30, Z_36",
        check: e_fig,
    },
    Claim {
        id: "E-star",
        statement: "SII(Z_{p^k}) is a star centered at <p^(k-1)>",
        scope: "Z_{p^k}, k >= 2",
        check: e_star,
    },
    Claim {
        id: "P-girth-a",
        statement: "for n = p1...pk, k >= 3, <p1...p(k-1)>, <p1...p(k-2)>, <p(k-1)> form a triangle in SII(Z_n)",
        scope: "cyclic, squarefree, at least three primes",
        check: p_girth_a,
    },
    Claim {
        id: "P-girth-b",
        statement: "for n = p1^3 p2...pk, k >= 2, <p1^2 p2...pk>, <p2...pk>, <p1^2> form a triangle in SII(Z_n)",
        scope: "cyclic, one cubed prime, all other primes simple",
        check: p_girth_b,
    },
    Claim {
        id: "R-sub",
        statement: "every SII edge is an intersection-graph edge; for n = p^3 q the edge <q>--<pq> of the intersection graph is missing from SII",
        scope: "rings with at least one vertex",
        check: r_sub,
    },
    Claim {
        id: "R-euler",
        statement: "SII(Z_n) is Eulerian for squarefree n, not Eulerian for n = p^2 q^2; the intersection graph of Z_n is Eulerian iff n is squarefree or every exponent is even",
        scope: "cyclic with at least one edge in the graph being tested",
        check: r_euler,
    },
    Claim {
        id: "T-univ",
        statement: "SII(R) has a universal vertex iff R has one minimal ideal, or two whose sum is maximal and contains no non-zero non-second proper subideal",
        scope: "rings with at least one vertex",
        check: t_univ,
    },
    Claim {
        id: "R-socle",
        statement: "sec(R) is adjacent to every second ideal other than itself",
        scope: "rings that are not coreduced",
        check: r_socle,
    },
    Claim {
        id: "C-socle",
        statement: "sec(R) is the only minimal ideal iff sec(R) is a universal vertex of SII(R)",
        scope: "rings that are not coreduced",
        check: c_socle,
    },
    Claim {
        id: "T-isol",
        statement: "the isolated vertices of SII(R) are exactly the ideals that are both minimal and maximal",
        scope: "rings with at least one vertex",
        check: t_isol,
    },
    Claim {
        id: "T-comp",
        statement: "SII(R) is complete iff R has one minimal ideal and every vertex is second or maximal",
        scope: "rings with at least one vertex",
        check: t_comp,
    },
    Claim {
        id: "E-noncomplete",
        statement: "in Z_{p^k}, k >= 4, <p^2> is neither second nor maximal and SII is not complete",
        scope: "Z_{p^k}, k >= 4",
        check: e_noncomplete,
    },
    Claim {
        id: "C-comp-Zn",
        statement: "SII(Z_n) is complete iff n = p^2 or n = p^3",
        scope: "cyclic",
        check: c_comp_zn,
    },
    Claim {
        id: "T-disc-Zn",
        statement: "SII(Z_n) is disconnected iff n = pq for distinct primes",
        scope: "cyclic",
        check: t_disc_zn,
    },
    Claim {
        id: "T-conn",
        statement: "SII(R) is connected iff R is not the direct sum of two minimal ideals, and then its diameter is at most 2",
        scope: "rings with at least one vertex",
        check: t_conn,
    },
    Claim {
        id: "C-comult",
        statement: "SII(R) has diameter at most 2 for comultiplication rings that are not a direct sum of two minimal ideals",
        scope: "rings with Ann(Ann(I)) = I for every ideal, not a sum of two minimal ideals",
        check: c_comult,
    },
    Claim {
        id: "T-pis-conn",
        statement: "PIS(R) is connected iff R is not a direct sum of two fields, and then its diameter is at most 2",
        scope: "rings with at least one vertex",
        check: t_pis_conn,
    },
    Claim {
        id: "T-girth3",
        statement: "if two non-comparable vertices are adjacent in SII(R) then its girth is 3",
        scope: "rings with at least one vertex",
        check: t_girth3,
    },
    Claim {
        id: "C-edge-sec",
        statement: "if SII(R) is acyclic or has girth above 3, every edge joins comparable ideals one of which is second",
        scope: "rings with at least one vertex",
        check: c_edge_sec,
    },
    Claim {
        id: "T-count",
        statement: "if SII(R) has finite girth g, R has at least floor(g/2) second ideals",
        scope: "rings with at least one vertex",
        check: t_count,
    },
    Claim {
        id: "C-2k",
        statement: "SII(R) is acyclic or has girth at most twice the number of second ideals",
        scope: "rings with at least one vertex",
        check: c_2k,
    },
    Claim {
        id: "T-dom",
        statement: "the minimal ideals form a minimal dominating set of SII(R); gamma <= their number, gamma = 1 iff a universal vertex exists by the T-univ conditions, gamma = 2 for two minimal ideals failing them",
        scope: "rings with at least one vertex; gamma part within the domination cap",
        check: t_dom,
    },
    Claim {
        id: "R-dom-strict",
        statement: "in SII(Z_pqr), {<p>,<qr>}, {<r>,<pq>}, {<q>,<pr>} dominate, so gamma is below the three minimal ideals",
        scope: "cyclic, squarefree, exactly three primes",
        check: r_dom_strict,
    },
    Claim {
        id: "P-iso-rings",
        statement: "isomorphic rings have isomorphic SII graphs (component reorderings and the prime-power splitting)",
        scope: "rings with more than one component or more than one prime",
        check: p_iso_rings,
    },
    Claim {
        id: "P-ann-adj",
        statement: "SII and PIS adjacency agree on pairs with Ann(I cap J) = I + J, on mutually annihilating pairs, and on pairs I, Ann(I)",
        scope: "comultiplication rings",
        check: p_ann_adj,
    },
    Claim {
        id: "T-ann-iso",
        statement: "I -> Ann(I) is a graph isomorphism from PIS(R) to SII(R)",
        scope: "comultiplication rings",
        check: t_ann_iso,
    },
    Claim {
        id: "C-ann-iso-Zn",
        statement: "I -> Ann(I) is a graph isomorphism from PIS(Z_n) to SII(Z_n)",
        scope: "cyclic",
        check: c_ann_iso_zn,
    },
    Claim {
        id: "E-integers",
        statement: "SII of the integers has no edges (documented, not computed)",
        scope: "none",
        check: e_integers,
    },
];

fn pass() -> Result<Outcome> {
    Ok(Outcome::Pass(None))
}

fn pass_note(note: impl Into<String>) -> Result<Outcome> {
    Ok(Outcome::Pass(Some(note.into())))
}

fn skip(reason: impl Into<String>) -> Result<Outcome> {
    Ok(Outcome::Skip(reason.into()))
}

fn fail(
    reason: impl Into<String>,
    ideals: Vec<String>,
    edges: Vec<(String, String)>,
) -> Result<Outcome> {
    Ok(Outcome::Fail(Witness {
        reason: reason.into(),
        ideals,
        edges,
    }))
}

fn names<'a>(ideals: impl IntoIterator<Item = &'a Ideal>) -> Vec<String> {
    ideals.into_iter().map(ToString::to_string).collect()
}

fn pair(a: &Ideal, b: &Ideal) -> (String, String) {
    (a.to_string(), b.to_string())
}

fn cyclic<'a>(ctx: &Context<'a>) -> Option<&'a Factorization> {
    ctx.ring.is_cyclic().then(|| ctx.ring.factorization(0))
}

fn edge_set(g: &IdealGraph) -> BTreeSet<(String, String)> {
    g.edge_labels()
        .into_iter()
        .map(|(a, b)| if a <= b { (a, b) } else { (b, a) })
        .collect()
}

fn diameter_at_most_two(g: &IdealGraph) -> Result<Option<Outcome>> {
    let d = g.graph().diameter()?;
    Ok(match d {
        Extended::Finite(d) if d <= 2 => None,
        _ => Some(Outcome::Fail(Witness {
            reason: format!("{} is connected with diameter {d}", g.kind()),
            ..Witness::default()
        })),
    })
}

/// One minimal ideal, or two whose sum `S` is a maximal ideal with no
/// non-zero non-second ideal properly inside `S`.
pub(super) fn universal_condition(ring: &RingSpec, vertices: &[Ideal]) -> bool {
    match ring.minimal_ideals().as_slice() {
        [_] => true,
        [a, b] => {
            let s = ring.sum(a, b);
            ring.is_maximal(&s)
                && !vertices
                    .iter()
                    .any(|j| j != &s && ring.contains(&s, j) && !ring.is_second(j))
        }
        _ => false,
    }
}

fn d_sii(ctx: &Context) -> Result<Outcome> {
    for kind in GraphKind::ALL {
        let fast = ctx.graph(kind)?;
        let oracle = build(ctx.ring, kind, PredicateMode::Oracle, ctx.caps)?;
        if *fast != oracle {
            let (a, b) = (edge_set(fast), edge_set(&oracle));
            return fail(
                format!("{kind}: closed-form and element-level edge sets differ"),
                vec![],
                a.symmetric_difference(&b).cloned().collect(),
            );
        }
    }
    pass()
}

fn e_fig(ctx: &Context) -> Result<Outcome> {
    let n = ctx.ring.order();
    let figures: Vec<_> = FIGURES.iter().filter(|f| f.n == n).collect();
    if !ctx.ring.is_cyclic() || figures.is_empty() {
        return skip("no figure for this ring");
    }
    let mut notes = Vec::new();
    for fig in figures {
        let g = ctx.graph(fig.kind)?;
        let cyclic = |d: u64| format!("<{d}>");
        let want_vertices: BTreeSet<String> = fig.vertices.iter().map(|&d| cyclic(d)).collect();
        let have_vertices: BTreeSet<String> = names(g.labels()).into_iter().collect();
        if want_vertices != have_vertices {
            return fail(
                format!("figure {}: vertex set differs", fig.name),
                want_vertices
                    .symmetric_difference(&have_vertices)
                    .cloned()
                    .collect(),
                vec![],
            );
        }
        let want: BTreeSet<(String, String)> = fig
            .edges
            .iter()
            .map(|&(a, b)| {
                let (a, b) = (cyclic(a), cyclic(b));
                if a <= b {
                    (a, b)
                } else {
                    (b, a)
                }
            })
            .collect();
        let have = edge_set(g);
        if want != have {
            return fail(
                format!("figure {}: {} edge set differs", fig.name, fig.kind),
                vec![],
                want.symmetric_difference(&have).cloned().collect(),
            );
        }
        notes.push(format!(
            "figure {}: {} {} edges matched",
            fig.name,
            fig.kind,
            want.len()
        ));
    }
    if n == 12 || n == 18 {
        let other = RingSpec::cyclic(30 - n)?;
        let h = build_sii(&other, ctx.caps)?;
        let g = ctx.sii()?;
        match find_isomorphism(g.graph(), h.graph(), ctx.caps.isomorphism)? {
            Some(map) if verify_map_isomorphism(g.graph(), h.graph(), &map)? => {
                notes.push(format!("SII({}) isomorphic to SII({other})", ctx.ring));
            }
            _ => {
                return fail(
                    format!("SII({}) and SII({other}) are not isomorphic", ctx.ring),
                    vec![],
                    vec![],
                )
            }
        }
    }
    pass_note(notes.join("; "))
}

fn e_star(ctx: &Context) -> Result<Outcome> {
    let Some(f) = cyclic(ctx).filter(|f| f.distinct() == 1 && f.total() >= 2) else {
        return skip("not Z_{p^k} with k >= 2");
    };
    let (p, k) = f.pairs()[0];
    let center = ctx.ring.ideal(&[p.pow(k - 1)])?;
    let g = ctx.sii()?;
    let c = g
        .index_of(&center)
        .expect("proper non-zero ideal is a vertex");
    let stray: Vec<(String, String)> = g
        .graph()
        .edges()
        .filter(|&(a, b)| a != c && b != c)
        .map(|(a, b)| (g.label(a), g.label(b)))
        .collect();
    let missing: Vec<String> = (0..g.labels().len())
        .filter(|&v| v != c && !g.graph().has_edge(v, c))
        .map(|v| g.label(v))
        .collect();
    if !stray.is_empty() || !missing.is_empty() {
        return fail(
            format!("not a star centered at {center}: listed vertices miss the center, listed edges avoid it"),
            missing,
            stray,
        );
    }
    pass()
}

fn check_triangle(ctx: &Context, triangle: [Ideal; 3]) -> Result<Outcome> {
    let g = ctx.sii()?;
    let [i, j, k] = &triangle;
    if !ctx.ring.is_second(i) {
        return fail(format!("{i} is not second"), names([i]), vec![]);
    }
    let missing: Vec<(String, String)> = [(i, j), (j, k), (k, i)]
        .into_iter()
        .filter(|(a, b)| a == b || !g.adjacent(a, b))
        .map(|(a, b)| pair(a, b))
        .collect();
    if !missing.is_empty() {
        return fail("named triangle is incomplete", names(&triangle), missing);
    }
    pass_note(format!("triangle {i}, {j}, {k}"))
}

fn p_girth_a(ctx: &Context) -> Result<Outcome> {
    let Some(f) = cyclic(ctx).filter(|f| f.is_squarefree() && f.distinct() >= 3) else {
        return skip("not a squarefree n with at least three primes");
    };
    let ps: Vec<u64> = f.primes().collect();
    let k = ps.len();
    let i: u64 = ps[..k - 1].iter().product();
    let j: u64 = ps[..k - 2].iter().product();
    let r = ctx.ring;
    check_triangle(
        ctx,
        [r.ideal(&[i])?, r.ideal(&[j])?, r.ideal(&[ps[k - 2]])?],
    )
}

fn p_girth_b(ctx: &Context) -> Result<Outcome> {
    let Some(f) = cyclic(ctx) else {
        return skip("not cyclic");
    };
    let cubed: Vec<u64> = f
        .pairs()
        .iter()
        .filter(|&&(_, e)| e == 3)
        .map(|&(p, _)| p)
        .collect();
    let simple = f.pairs().iter().filter(|&&(_, e)| e == 1).count();
    if cubed.len() != 1 || simple + 1 != f.distinct() || f.distinct() < 2 {
        return skip("not of the form p1^3 p2...pk with k >= 2");
    }
    let p = cubed[0];
    let rest: u64 = f.primes().filter(|&q| q != p).product();
    let r = ctx.ring;
    check_triangle(
        ctx,
        [
            r.ideal(&[p * p * rest])?,
            r.ideal(&[rest])?,
            r.ideal(&[p * p])?,
        ],
    )
}

fn r_sub(ctx: &Context) -> Result<Outcome> {
    let (sii, gamma) = (ctx.sii()?, ctx.gamma()?);
    let extra: Vec<(String, String)> = sii
        .graph()
        .edges()
        .filter(|&(a, b)| !gamma.graph().has_edge(a, b))
        .map(|(a, b)| (sii.label(a), sii.label(b)))
        .collect();
    if !extra.is_empty() {
        return fail(
            "SII edges missing from the intersection graph",
            vec![],
            extra,
        );
    }
    let Some(f) = cyclic(ctx) else {
        return pass();
    };
    let mut exps: Vec<u32> = f.exponents().collect();
    exps.sort_unstable();
    if exps != [1, 3] {
        return pass();
    }
    let p = f
        .pairs()
        .iter()
        .find(|&&(_, e)| e == 3)
        .expect("cubed prime")
        .0;
    let q = f
        .pairs()
        .iter()
        .find(|&&(_, e)| e == 1)
        .expect("simple prime")
        .0;
    let (iq, ipq) = (ctx.ring.ideal(&[q])?, ctx.ring.ideal(&[p * q])?);
    if !gamma.adjacent(&iq, &ipq) || sii.adjacent(&iq, &ipq) {
        return fail(
            "expected an intersection-graph edge that SII lacks",
            vec![],
            vec![pair(&iq, &ipq)],
        );
    }
    pass_note(format!("{iq}--{ipq} is in the intersection graph only"))
}

fn r_euler(ctx: &Context) -> Result<Outcome> {
    let Some(f) = cyclic(ctx) else {
        return skip("not cyclic");
    };
    let m = f.distinct();
    let squarefree = f.is_squarefree();
    let mut checked = Vec::new();
    let sii = ctx.sii()?;
    if squarefree && m >= 3 {
        if !sii.graph().is_eulerian() {
            return fail("SII is not Eulerian for squarefree n", vec![], vec![]);
        }
        checked.push("SII Eulerian");
    }
    if m == 2 && f.exponents().all(|e| e == 2) {
        if sii.graph().is_eulerian() {
            return fail("SII is Eulerian for n = p^2 q^2", vec![], vec![]);
        }
        checked.push("SII not Eulerian");
    }
    let gamma = ctx.gamma()?;
    if gamma.graph().edge_count() > 0 {
        let expected = squarefree || f.exponents().all(|e| e % 2 == 0);
        if gamma.graph().is_eulerian() != expected {
            return fail(
                format!(
                    "intersection graph Eulerian = {}, expected {expected}",
                    !expected
                ),
                vec![],
                vec![],
            );
        }
        checked.push(if expected {
            "intersection graph Eulerian"
        } else {
            "intersection graph not Eulerian"
        });
    }
    if checked.is_empty() {
        return skip("edgeless");
    }
    pass_note(checked.join("; "))
}

fn t_univ(ctx: &Context) -> Result<Outcome> {
    let g = ctx.sii()?;
    let universal = g.graph().universal_vertices();
    let condition = universal_condition(ctx.ring, ctx.vertices()?);
    if universal.is_empty() == condition {
        let mut ideals: Vec<String> = universal.iter().map(|&v| g.label(v)).collect();
        ideals.extend(names(&ctx.ring.minimal_ideals()));
        return fail(
            format!(
                "universal vertex exists = {}, minimal-ideal condition = {condition}",
                !universal.is_empty()
            ),
            ideals,
            vec![],
        );
    }
    pass()
}

/// The second socle, when the ring is not coreduced and it is a vertex.
fn socle_vertex(ctx: &Context) -> std::result::Result<Ideal, &'static str> {
    if ctx.ring.is_coreduced() {
        return Err("coreduced");
    }
    let sec = ctx.ring.second_socle();
    if !ctx.ring.is_vertex(&sec) {
        return Err("second socle is zero or the whole ring");
    }
    Ok(sec)
}

fn r_socle(ctx: &Context) -> Result<Outcome> {
    let sec = match socle_vertex(ctx) {
        Ok(sec) => sec,
        Err(reason) => return skip(reason),
    };
    let g = ctx.sii()?;
    let missing: Vec<(String, String)> = ctx
        .ring
        .second_ideals()
        .iter()
        .filter(|s| **s != sec && !g.adjacent(&sec, s))
        .map(|s| pair(&sec, s))
        .collect();
    if !missing.is_empty() {
        return fail(
            format!("sec(R) = {sec} misses second ideals"),
            names([&sec]),
            missing,
        );
    }
    if ctx.ring.is_second(&sec) {
        return pass_note(format!(
            "sec(R) = {sec} is itself second; self-pair excluded"
        ));
    }
    pass()
}

fn c_socle(ctx: &Context) -> Result<Outcome> {
    let sec = match socle_vertex(ctx) {
        Ok(sec) => sec,
        Err(reason) => return skip(reason),
    };
    let minimal = ctx.ring.minimal_ideals();
    let only_minimal = minimal == [sec.clone()];
    let g = ctx.sii()?;
    let universal = g.graph().degree(g.index_of(&sec).expect("vertex")) + 1 == g.labels().len();
    if only_minimal != universal {
        let mut ideals = names([&sec]);
        ideals.extend(names(&minimal));
        return fail(
            format!(
                "sec(R) = {sec}: only minimal ideal = {only_minimal}, universal vertex = {universal}"
            ),
            ideals,
            vec![],
        );
    }
    pass()
}

fn t_isol(ctx: &Context) -> Result<Outcome> {
    let g = ctx.sii()?;
    let isolated = g.graph().isolated_vertices();
    let expected: Vec<usize> = (0..g.labels().len())
        .filter(|&v| {
            let i = &g.labels()[v];
            ctx.ring.is_minimal(i) && ctx.ring.is_maximal(i)
        })
        .collect();
    if isolated != expected {
        let differ: BTreeSet<usize> = isolated
            .iter()
            .copied()
            .collect::<BTreeSet<_>>()
            .symmetric_difference(&expected.iter().copied().collect())
            .copied()
            .collect();
        return fail(
            "isolated vertices differ from minimal-and-maximal ideals",
            differ.into_iter().map(|v| g.label(v)).collect(),
            vec![],
        );
    }
    pass()
}

fn t_comp(ctx: &Context) -> Result<Outcome> {
    let g = ctx.sii()?;
    let r = ctx.ring;
    let complete = g.graph().is_complete();
    let offending: Vec<&Ideal> = ctx
        .vertices()?
        .iter()
        .filter(|j| !r.is_second(j) && !r.is_maximal(j))
        .collect();
    let minimal = r.minimal_ideals();
    let condition = minimal.len() == 1 && offending.is_empty();
    if complete != condition {
        let mut ideals = names(&minimal);
        ideals.extend(names(offending));
        return fail(
            format!("complete = {complete}, characterization = {condition}"),
            ideals,
            vec![],
        );
    }
    pass()
}

fn e_noncomplete(ctx: &Context) -> Result<Outcome> {
    let Some(f) = cyclic(ctx).filter(|f| f.distinct() == 1 && f.total() >= 4) else {
        return skip("not Z_{p^k} with k >= 4");
    };
    let p = f.pairs()[0].0;
    let i = ctx.ring.ideal(&[p * p])?;
    if ctx.ring.is_second(&i) || ctx.ring.is_maximal(&i) {
        return fail(format!("{i} is second or maximal"), names([&i]), vec![]);
    }
    if ctx.sii()?.graph().is_complete() {
        return fail("SII is complete", vec![], vec![]);
    }
    pass()
}

fn c_comp_zn(ctx: &Context) -> Result<Outcome> {
    let Some(f) = cyclic(ctx) else {
        return skip("not cyclic");
    };
    let complete = ctx.sii()?.graph().is_complete();
    let expected = f.distinct() == 1 && matches!(f.total(), 2 | 3);
    if complete != expected {
        return fail(
            format!("complete = {complete}, n in {{p^2, p^3}} = {expected}"),
            vec![],
            vec![],
        );
    }
    pass()
}

fn t_disc_zn(ctx: &Context) -> Result<Outcome> {
    let Some(f) = cyclic(ctx) else {
        return skip("not cyclic");
    };
    let g = ctx.sii()?;
    let disconnected = !g.graph().is_connected()?;
    let expected = f.distinct() == 2 && f.is_squarefree();
    if disconnected != expected {
        return fail(
            format!("disconnected = {disconnected}, n = pq = {expected}"),
            vec![],
            vec![],
        );
    }
    pass()
}

fn t_conn(ctx: &Context) -> Result<Outcome> {
    let g = ctx.sii()?;
    let connected = g.graph().is_connected()?;
    let split = ctx.ring.is_sum_of_two_minimal();
    if connected == split {
        return fail(
            format!("connected = {connected}, direct sum of two minimal ideals = {split}"),
            names(&ctx.ring.minimal_ideals()),
            vec![],
        );
    }
    if connected {
        if let Some(f) = diameter_at_most_two(g)? {
            return Ok(f);
        }
    }
    pass()
}

fn c_comult(ctx: &Context) -> Result<Outcome> {
    if let Some(i) = ctx.ring.comultiplication_violation(ctx.caps.ideals)? {
        return skip(format!("not comultiplication: Ann(Ann({i})) != {i}"));
    }
    if ctx.ring.is_sum_of_two_minimal() {
        return skip("direct sum of two minimal ideals");
    }
    let g = ctx.sii()?;
    if !g.graph().is_connected()? {
        return fail("SII is disconnected", vec![], vec![]);
    }
    match diameter_at_most_two(g)? {
        Some(f) => Ok(f),
        None => pass(),
    }
}

fn t_pis_conn(ctx: &Context) -> Result<Outcome> {
    let g = ctx.pis()?;
    let connected = g.graph().is_connected()?;
    let two_fields = ctx.ring.is_direct_sum_of_two_fields();
    if connected == two_fields {
        return fail(
            format!("PIS connected = {connected}, direct sum of two fields = {two_fields}"),
            vec![],
            vec![],
        );
    }
    if connected {
        if let Some(f) = diameter_at_most_two(g)? {
            return Ok(f);
        }
    }
    pass()
}

fn t_girth3(ctx: &Context) -> Result<Outcome> {
    let g = ctx.sii()?;
    let labels = g.labels();
    let pair = g
        .graph()
        .edges()
        .find(|&(a, b)| !ctx.ring.comparable(&labels[a], &labels[b]));
    let Some((a, b)) = pair else {
        return pass_note("no adjacent non-comparable pair");
    };
    let girth = g.graph().girth();
    if girth != Extended::Finite(3) {
        return fail(
            format!("adjacent non-comparable pair but girth {girth}"),
            vec![],
            vec![(g.label(a), g.label(b))],
        );
    }
    pass()
}

fn c_edge_sec(ctx: &Context) -> Result<Outcome> {
    let g = ctx.sii()?;
    let girth = g.graph().girth();
    if girth.finite().is_some_and(|x| x <= 3) {
        return pass_note("girth 3, hypothesis not met");
    }
    let labels = g.labels();
    let r = ctx.ring;
    let bad: Vec<(String, String)> = g
        .graph()
        .edges()
        .filter(|&(a, b)| {
            let (i, j) = (&labels[a], &labels[b]);
            !r.comparable(i, j) || !(r.is_second(i) || r.is_second(j))
        })
        .map(|(a, b)| (g.label(a), g.label(b)))
        .collect();
    if !bad.is_empty() {
        return fail(
            format!("girth {girth}: edges that are non-comparable or have no second endpoint"),
            vec![],
            bad,
        );
    }
    pass()
}

fn t_count(ctx: &Context) -> Result<Outcome> {
    let g = ctx.sii()?;
    let Some(girth) = g.graph().girth().finite() else {
        return pass_note("acyclic");
    };
    let second = ctx.ring.second_ideals();
    if second.len() < girth / 2 {
        return fail(
            format!("girth {girth} but {} second ideals", second.len()),
            names(&second),
            vec![],
        );
    }
    pass()
}

fn c_2k(ctx: &Context) -> Result<Outcome> {
    let g = ctx.sii()?;
    let second = ctx.ring.second_ideals();
    match g.graph().girth() {
        Extended::Finite(girth) if girth > 2 * second.len() => fail(
            format!(
                "girth {girth} exceeds twice the {} second ideals",
                second.len()
            ),
            names(&second),
            vec![],
        ),
        _ => pass(),
    }
}

fn t_dom(ctx: &Context) -> Result<Outcome> {
    let g = ctx.sii()?;
    let minimal = ctx.ring.minimal_ideals();
    let set: Vec<usize> = minimal
        .iter()
        .map(|m| g.index_of(m).expect("minimal ideals are vertices"))
        .collect();
    if !g.graph().is_dominating_set(&set) {
        return fail("minimal ideals do not dominate", names(&minimal), vec![]);
    }
    if !g.graph().is_minimal_dominating_set(&set) {
        return fail(
            "minimal ideals are not a minimal dominating set",
            names(&minimal),
            vec![],
        );
    }
    let gamma = g.graph().domination_number(ctx.caps.domination)?;
    if gamma > minimal.len() {
        return fail(
            format!("gamma = {gamma} exceeds {} minimal ideals", minimal.len()),
            names(&minimal),
            vec![],
        );
    }
    let condition = universal_condition(ctx.ring, ctx.vertices()?);
    if (gamma == 1) != condition {
        return fail(
            format!("gamma = {gamma}, universal-vertex condition = {condition}"),
            names(&minimal),
            vec![],
        );
    }
    if minimal.len() == 2 && !condition && gamma != 2 {
        return fail(
            format!("two minimal ideals failing the condition but gamma = {gamma}"),
            names(&minimal),
            vec![],
        );
    }
    let note = if ctx.ring.is_sum_of_two_minimal() {
        format!("gamma = {gamma}; direct-sum case")
    } else {
        format!("gamma = {gamma}")
    };
    pass_note(note)
}

fn r_dom_strict(ctx: &Context) -> Result<Outcome> {
    let Some(f) = cyclic(ctx).filter(|f| f.is_squarefree() && f.distinct() == 3) else {
        return skip("not n = pqr");
    };
    let ps: Vec<u64> = f.primes().collect();
    let (p, q, r) = (ps[0], ps[1], ps[2]);
    let g = ctx.sii()?;
    for (a, b) in [(p, q * r), (r, p * q), (q, p * r)] {
        let (ia, ib) = (ctx.ring.ideal(&[a])?, ctx.ring.ideal(&[b])?);
        let set = [
            g.index_of(&ia).expect("vertex"),
            g.index_of(&ib).expect("vertex"),
        ];
        if !g.graph().is_dominating_set(&set) {
            return fail("listed pair does not dominate", names([&ia, &ib]), vec![]);
        }
    }
    let minimal = ctx.ring.minimal_ideals();
    let gamma = g.graph().domination_number(ctx.caps.domination)?;
    if minimal.len() != 3 || gamma >= 3 {
        return fail(
            format!("gamma = {gamma}, {} minimal ideals", minimal.len()),
            names(&minimal),
            vec![],
        );
    }
    pass_note(format!("gamma = {gamma}"))
}

/// Rearranges `v` into the next lexicographic permutation; false after the last.
fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len())
        .rev()
        .find(|&j| v[j] > v[i - 1])
        .expect("successor exists");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Checks that `image` maps the vertices of `g` onto those of `h` isomorphically.
fn check_ring_map(
    g: &IdealGraph,
    h: &IdealGraph,
    image: impl Fn(&Ideal) -> Ideal,
) -> Result<Option<Outcome>> {
    let map: Option<Vec<usize>> = g.labels().iter().map(|i| h.index_of(&image(i))).collect();
    let ok = match map {
        Some(map) if g.labels().len() == h.labels().len() => {
            let mut seen = map.clone();
            seen.sort_unstable();
            seen.dedup();
            seen.len() == map.len() && verify_map_isomorphism(g.graph(), h.graph(), &map)?
        }
        _ => false,
    };
    Ok((!ok).then(|| {
        Outcome::Fail(Witness {
            reason: "induced vertex map is not an isomorphism".into(),
            ..Witness::default()
        })
    }))
}

fn p_iso_rings(ctx: &Context) -> Result<Outcome> {
    let ring = ctx.ring;
    let primary = ring.primary_decomposition();
    if ring.components() == 1 && primary.components() == 1 {
        return skip("no other presentation of this ring");
    }
    let g = ctx.sii()?;
    let mut checked = 0;
    let mut total = 0;
    let mut target: Vec<u64> = ring.moduli().to_vec();
    target.sort_unstable();
    loop {
        total += 1;
        if checked < MAX_PERMUTATIONS && target.as_slice() != ring.moduli() {
            let mut used = vec![false; target.len()];
            let perm: Vec<usize> = target
                .iter()
                .map(|&m| {
                    let j = (0..used.len())
                        .find(|&j| !used[j] && ring.moduli()[j] == m)
                        .expect("target is a rearrangement");
                    used[j] = true;
                    j
                })
                .collect();
            let other = RingSpec::new(target.clone())?;
            let h = build_sii(&other, ctx.caps)?;
            if let Some(Outcome::Fail(mut w)) =
                check_ring_map(g, &h, |i| ring.permute_ideal(i, &perm))?
            {
                w.reason = format!("reordering to {other}: {}", w.reason);
                return Ok(Outcome::Fail(w));
            }
            checked += 1;
        }
        if !next_permutation(&mut target) {
            break;
        }
    }
    let mut notes = vec![format!("{checked} of {} reorderings checked", total - 1)];
    if primary != *ring {
        let h = build_sii(&primary, ctx.caps)?;
        if let Some(Outcome::Fail(mut w)) = check_ring_map(g, &h, |i| ring.primary_image(i))? {
            w.reason = format!("splitting into {primary}: {}", w.reason);
            return Ok(Outcome::Fail(w));
        }
        notes.push(format!("prime-power split {primary} checked"));
        if g.labels().len() <= ctx.caps.isomorphism
            && find_isomorphism(g.graph(), h.graph(), ctx.caps.isomorphism)?.is_none()
        {
            return fail(
                format!("search finds no isomorphism to SII({primary})"),
                vec![],
                vec![],
            );
        }
    }
    pass_note(notes.join("; "))
}

fn comultiplication_skip(ctx: &Context) -> Result<Option<Outcome>> {
    Ok(ctx
        .ring
        .comultiplication_violation(ctx.caps.ideals)?
        .map(|i| Outcome::Skip(format!("not comultiplication: Ann(Ann({i})) != {i}"))))
}

fn p_ann_adj(ctx: &Context) -> Result<Outcome> {
    if let Some(s) = comultiplication_skip(ctx)? {
        return Ok(s);
    }
    let (sii, pis) = (ctx.sii()?, ctx.pis()?);
    let r = ctx.ring;
    let vs = ctx.vertices()?;
    let mut counts = [0usize; 3];
    for (a, i) in vs.iter().enumerate() {
        for j in &vs[a + 1..] {
            let agree = sii.adjacent(i, j) == pis.adjacent(i, j);
            let hyp_a = r.annihilator(&r.intersect(i, j)) == r.sum(i, j);
            let hyp_b = &r.annihilator(i) == j && &r.annihilator(j) == i;
            for (case, hyp) in [("a", hyp_a), ("b", hyp_b)] {
                if hyp {
                    if !agree {
                        return fail(
                            format!("case ({case}): SII and PIS adjacency differ"),
                            vec![],
                            vec![pair(i, j)],
                        );
                    }
                    counts[if case == "a" { 0 } else { 1 }] += 1;
                }
            }
        }
        let ann = r.annihilator(i);
        if r.is_vertex(&ann) && ann != *i {
            if sii.adjacent(i, &ann) != pis.adjacent(i, &ann) {
                return fail(
                    "case (c): SII and PIS adjacency differ",
                    vec![],
                    vec![pair(i, &ann)],
                );
            }
            counts[2] += 1;
        }
    }
    pass_note(format!(
        "pairs checked: (a) {}, (b) {}, (c) {}",
        counts[0], counts[1], counts[2]
    ))
}

fn annihilator_iso(ctx: &Context) -> Result<Outcome> {
    let (sii, pis) = (ctx.sii()?, ctx.pis()?);
    match check_ring_map(pis, sii, |i| ctx.ring.annihilator(i))? {
        Some(Outcome::Fail(mut w)) => {
            w.reason = "annihilator map from PIS to SII is not an isomorphism".into();
            w.edges = pis
                .graph()
                .edges()
                .filter(|&(a, b)| {
                    let (i, j) = (&pis.labels()[a], &pis.labels()[b]);
                    !sii.adjacent(&ctx.ring.annihilator(i), &ctx.ring.annihilator(j))
                })
                .map(|(a, b)| (pis.label(a), pis.label(b)))
                .collect();
            Ok(Outcome::Fail(w))
        }
        _ => pass(),
    }
}

fn t_ann_iso(ctx: &Context) -> Result<Outcome> {
    if let Some(s) = comultiplication_skip(ctx)? {
        return Ok(s);
    }
    annihilator_iso(ctx)
}

fn c_ann_iso_zn(ctx: &Context) -> Result<Outcome> {
    if !ctx.ring.is_cyclic() {
        return skip("not cyclic");
    }
    annihilator_iso(ctx)
}

fn e_integers(_: &Context) -> Result<Outcome> {
    skip("infinite vertex set")
}
