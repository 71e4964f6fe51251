use idealgraph::graph::{find_isomorphism, verify_map_isomorphism};
use idealgraph::theorems::product_specs;
use idealgraph::{build, Caps, Extended, GraphKind, IdealGraph, PredicateMode, RingSpec};

fn swept_graphs() -> Vec<IdealGraph> {
    let caps = Caps::default();
    let mut rings: Vec<RingSpec> = (4..=200).map(|n| RingSpec::cyclic(n).unwrap()).collect();
    rings.extend(product_specs(128));
    rings
        .iter()
        .flat_map(|r| GraphKind::ALL.map(|k| build(r, k, PredicateMode::Fast, &caps)))
        .filter_map(Result::ok)
        .collect()
}

fn has_triangle_cubic(g: &idealgraph::Graph) -> bool {
    let n = g.vertex_count();
    (0..n).any(|a| {
        (a + 1..n)
            .any(|b| g.has_edge(a, b) && (b + 1..n).any(|c| g.has_edge(a, c) && g.has_edge(b, c)))
    })
}

#[test]
fn invariant_consistency() {
    for ig in swept_graphs() {
        let g = ig.graph();
        let n = g.vertex_count();
        assert_eq!(g.diameter().unwrap().is_finite(), g.is_connected().unwrap());
        assert_eq!(g.is_complete(), g.edge_count() == n * (n - 1) / 2);
        if g.is_eulerian() {
            assert!(g.degree_sequence().iter().all(|d| d % 2 == 0));
        }
        if n <= 60 {
            assert_eq!(g.girth() == Extended::Finite(3), has_triangle_cubic(g));
        }
    }
}

#[test]
fn domination_against_verified_sets() {
    for ig in swept_graphs()
        .into_iter()
        .filter(|g| g.graph().vertex_count() <= 24)
    {
        let g = ig.graph();
        let best = g.minimum_dominating_set(40).unwrap();
        assert!(g.is_dominating_set(&best));
        assert!(g.is_minimal_dominating_set(&best));
        let all: Vec<usize> = (0..g.vertex_count()).collect();
        assert!(best.len() <= all.len());
        for drop in 0..best.len() {
            let mut smaller = best.clone();
            smaller.remove(drop);
            assert!(!g.is_dominating_set(&smaller));
        }
    }
}

#[test]
fn verified_maps_are_found_by_search() {
    let caps = Caps::default();
    for n in 4..=120u64 {
        let ring = RingSpec::cyclic(n).unwrap();
        let (Ok(sii), Ok(pis)) = (
            build(&ring, GraphKind::Sii, PredicateMode::Fast, &caps),
            build(&ring, GraphKind::Pis, PredicateMode::Fast, &caps),
        ) else {
            continue;
        };
        let map: Vec<usize> = pis
            .labels()
            .iter()
            .map(|i| sii.index_of(&ring.annihilator(i)).unwrap())
            .collect();
        assert!(verify_map_isomorphism(pis.graph(), sii.graph(), &map).unwrap());
        if pis.graph().vertex_count() <= 32 {
            let found = find_isomorphism(pis.graph(), sii.graph(), 32)
                .unwrap()
                .unwrap();
            assert!(verify_map_isomorphism(pis.graph(), sii.graph(), &found).unwrap());
        }
    }
}

#[test]
fn sii_is_a_subgraph_of_the_intersection_graph() {
    let caps = Caps::default();
    let mut rings: Vec<RingSpec> = (4..=300).map(|n| RingSpec::cyclic(n).unwrap()).collect();
    rings.extend(product_specs(256));
    for ring in rings {
        let Ok(sii) = build(&ring, GraphKind::Sii, PredicateMode::Fast, &caps) else {
            continue;
        };
        let gamma = build(&ring, GraphKind::Gamma, PredicateMode::Fast, &caps).unwrap();
        assert_eq!(sii.labels(), gamma.labels());
        assert!(
            sii.graph()
                .edges()
                .all(|(a, b)| gamma.graph().has_edge(a, b)),
            "{ring}"
        );
    }
}

#[test]
fn non_induced_pair_for_p_cubed_q() {
    let caps = Caps::default();
    for (p, q) in [(2u64, 3u64), (3, 2), (2, 5), (5, 2), (3, 7), (2, 11)] {
        let ring = RingSpec::cyclic(p * p * p * q).unwrap();
        let sii = build(&ring, GraphKind::Sii, PredicateMode::Fast, &caps).unwrap();
        let gamma = build(&ring, GraphKind::Gamma, PredicateMode::Fast, &caps).unwrap();
        let (a, b) = (ring.ideal(&[q]).unwrap(), ring.ideal(&[p * q]).unwrap());
        assert!(gamma.adjacent(&a, &b) && !sii.adjacent(&a, &b), "{ring}");
    }
}

#[test]
fn rebuilds_are_identical() {
    let caps = Caps::default();
    for spec in ["360", "4x9x5", "2x2x2x3"] {
        let ring: RingSpec = spec.parse().unwrap();
        for kind in GraphKind::ALL {
            let a = build(&ring, kind, PredicateMode::Fast, &caps).unwrap();
            let b = build(&ring, kind, PredicateMode::Fast, &caps).unwrap();
            assert_eq!(a, b);
            assert_eq!(a.edge_labels(), b.edge_labels());
        }
    }
}
