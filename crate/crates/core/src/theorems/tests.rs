use super::*;

fn ring(s: &str) -> RingSpec {
    s.parse().unwrap()
}

fn status(id: &str, spec: &str) -> ClaimResult {
    verify_claim(id, &ring(spec), &Caps::default()).unwrap()
}

#[test]
fn spec_examples() {
    assert_eq!(status("T-disc-Zn", "15").status, Status::Pass);
    assert_eq!(status("T-conn", "2x2").status, Status::Pass);
    let fig = status("E-fig", "36");
    assert_eq!(fig.status, Status::Pass);
    let note = fig.note.unwrap();
    assert!(
        note.contains("pis 12 edges matched") && note.contains("sii 12 edges matched"),
        "{note}"
    );
}

#[test]
fn unknown_claim() {
    assert!(matches!(
        verify_claim("T-nope", &ring("12"), &Caps::default()),
        Err(Error::UnknownClaim(_))
    ));
}

#[test]
fn fields_are_skipped() {
    for c in registry() {
        let r = status(c.id, "7");
        assert_eq!(r.status, Status::Skipped, "{}", c.id);
    }
}

#[test]
fn applicability() {
    assert_eq!(
        status("E-integers", "12").note.as_deref(),
        Some("infinite vertex set")
    );
    assert_eq!(status("R-euler", "6").note.as_deref(), Some("edgeless"));
    assert_eq!(status("R-euler", "30").status, Status::Pass);
    assert_eq!(status("R-euler", "36").status, Status::Pass);
    assert_eq!(status("C-comp-Zn", "2x2").status, Status::Skipped);
    assert_eq!(status("R-socle", "30").note.as_deref(), Some("coreduced"));
    assert_eq!(status("E-star", "12").status, Status::Skipped);
    assert_eq!(status("E-fig", "20").status, Status::Skipped);
}

#[test]
fn remark_examples_pass() {
    for (id, spec) in [
        ("R-sub", "24"),
        ("E-star", "32"),
        ("P-girth-a", "30"),
        ("P-girth-a", "210"),
        ("P-girth-b", "24"),
        ("P-girth-b", "120"),
        ("R-dom-strict", "30"),
        ("E-noncomplete", "16"),
        ("T-dom", "12"),
        ("T-ann-iso", "4x2"),
        ("P-iso-rings", "12"),
        ("P-iso-rings", "2x4x3"),
        ("E-fig", "12"),
        ("E-fig", "18"),
        ("D-sii", "4x6"),
    ] {
        let r = status(id, spec);
        assert_eq!(r.status, Status::Pass, "{id} on {spec}: {r:?}");
    }
    assert!(status("R-sub", "24").note.unwrap().contains("<3>--<6>"));
}

#[test]
fn socle_claim_fails_on_z12() {
    let r = status("C-socle", "12");
    assert_eq!(r.status, Status::Fail);
    let w = r.witness.unwrap();
    assert_eq!(w.ideals, ["<2>", "<4>", "<6>"]);
    assert!(w.reason.contains("universal vertex = true"));
}

#[test]
fn domination_cap_reports_capped() {
    let caps = Caps {
        domination: 2,
        ..Caps::default()
    };
    let r = verify_claim("T-dom", &ring("30"), &caps).unwrap();
    assert_eq!(r.status, Status::Capped);
}

#[test]
fn registry_shape() {
    assert_eq!(registry().len(), 29);
    assert!(registry()
        .iter()
        .all(|c| !c.statement.is_empty() && !c.scope.is_empty()));
}

#[test]
fn verify_claims_matches_single_calls() {
    let ids: Vec<&str> = registry().iter().map(|c| c.id).collect();
    let r = ring("2x9");
    let all = verify_claims(&ids, &r, &Caps::default()).unwrap();
    for (res, id) in all.iter().zip(&ids) {
        assert_eq!(res, &verify_claim(id, &r, &Caps::default()).unwrap());
    }
}
