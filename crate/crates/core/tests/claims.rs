use std::collections::BTreeSet;

use idealgraph::theorems::{
    product_specs, registry, sweep, verify_claim, ClaimResult, RingFamily, Status,
};
use idealgraph::{build_sii, Caps, RingSpec};

fn all_ids() -> Vec<&'static str> {
    registry().iter().map(|c| c.id).collect()
}

fn family() -> RingFamily {
    RingFamily::cyclic(200).with_products(product_specs(256))
}

#[test]
fn registry_covers_every_numbered_item() {
    let expected: BTreeSet<&str> = [
        "D-sii",
        "E-fig",
        "E-star",
        "P-girth-a",
        "P-girth-b",
        "R-sub",
        "R-euler",
        "T-univ",
        "R-socle",
        "C-socle",
        "T-isol",
        "T-comp",
        "E-noncomplete",
        "C-comp-Zn",
        "T-disc-Zn",
        "T-conn",
        "C-comult",
        "T-pis-conn",
        "T-girth3",
        "C-edge-sec",
        "T-count",
        "C-2k",
        "T-dom",
        "R-dom-strict",
        "P-iso-rings",
        "P-ann-adj",
        "T-ann-iso",
        "C-ann-iso-Zn",
        "E-integers",
    ]
    .into_iter()
    .collect();
    assert_eq!(all_ids().into_iter().collect::<BTreeSet<_>>(), expected);
}

#[test]
fn reports_are_byte_identical() {
    let ids = all_ids();
    let caps = Caps::default();
    let small = RingFamily::cyclic(60).with_products(product_specs(48));
    let a = serde_json::to_string(&sweep(&ids, &small, &caps).unwrap()).unwrap();
    let b = serde_json::to_string(&sweep(&ids, &small, &caps).unwrap()).unwrap();
    assert_eq!(a, b);
    let ring: RingSpec = "2x2x9".parse().unwrap();
    for id in &ids {
        assert_eq!(
            verify_claim(id, &ring, &caps).unwrap(),
            verify_claim(id, &ring, &caps).unwrap()
        );
    }
}

#[test]
fn results_are_ordered_by_ring_then_claim() {
    let ids = ["T-conn", "T-isol"];
    let report = sweep(&ids, &family(), &Caps::default()).unwrap();
    let rings = family().rings().unwrap();
    assert_eq!(report.results.len(), rings.len() * ids.len());
    for (chunk, ring) in report.results.chunks(2).zip(&rings) {
        assert_eq!(chunk[0].ring, ring.to_string());
        assert_eq!(
            (chunk[0].claim.as_str(), chunk[1].claim.as_str()),
            ("T-conn", "T-isol")
        );
    }
    let s = report.summary;
    assert_eq!(s.pass + s.fail + s.skipped + s.capped, report.results.len());
}

/// Re-evaluates a C-socle failure from the witness alone: the first ideal must
/// be the second socle and a universal vertex while not the only minimal ideal,
/// or the other way round.
fn recheck_socle(result: &ClaimResult) -> bool {
    let ring: RingSpec = result.ring.parse().unwrap();
    let w = result.witness.as_ref().unwrap();
    let sec = ring.parse_ideal(&w.ideals[0]).unwrap();
    let minimal: Vec<_> = w.ideals[1..]
        .iter()
        .map(|s| ring.parse_ideal(s).unwrap())
        .collect();
    assert_eq!(sec, ring.second_socle());
    assert_eq!(minimal, ring.minimal_ideals());
    let g = build_sii(&ring, &Caps::default()).unwrap();
    let others = g.labels().iter().filter(|j| **j != sec);
    let universal = others.clone().all(|j| g.adjacent(&sec, j));
    universal != (minimal == [sec])
}

#[test]
fn failures_carry_checkable_witnesses() {
    let report = sweep(&all_ids(), &family(), &Caps::default()).unwrap();
    for r in report.failures() {
        let ring: RingSpec = r.ring.parse().unwrap();
        let w = r.witness.as_ref().expect("failures carry witnesses");
        assert!(!w.reason.is_empty());
        for name in w
            .ideals
            .iter()
            .chain(w.edges.iter().flat_map(|(a, b)| [a, b]))
        {
            assert!(ring.parse_ideal(name).is_ok(), "{name} in {}", r.ring);
        }
        assert_eq!(r.claim, "C-socle", "unexpected failure {r:?}");
        assert!(recheck_socle(r), "{r:?}");
    }
    for r in &report.results {
        assert_eq!(r.status == Status::Fail, r.witness.is_some());
        if r.status == Status::Capped {
            assert_eq!(r.claim, "T-dom");
        }
    }
}

#[test]
fn socle_claim_counterexamples_are_p_squared_q() {
    let report = sweep(&["C-socle"], &RingFamily::cyclic(200), &Caps::default()).unwrap();
    let failing: Vec<u64> = report.failures().map(|r| r.ring.parse().unwrap()).collect();
    let expected: Vec<u64> = (2..=200u64)
        .filter(|&n| {
            let f = idealgraph::arith::factorize(n).unwrap();
            let mut e: Vec<u32> = f.exponents().collect();
            e.sort_unstable();
            e == [1, 2]
        })
        .collect();
    assert_eq!(failing, expected);
}
