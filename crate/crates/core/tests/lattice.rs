use idealgraph::ring::oracle::{maximal_by_lattice, minimal_by_lattice, ElementRing};
use idealgraph::theorems::product_specs;
use idealgraph::RingSpec;
use proptest::prelude::*;

fn sample_rings() -> Vec<RingSpec> {
    let mut rings: Vec<RingSpec> = (2..=300).map(|n| RingSpec::cyclic(n).unwrap()).collect();
    rings.extend(product_specs(256));
    rings
}

#[test]
fn closed_forms_match_element_level_definitions() {
    for ring in sample_rings() {
        let er = ElementRing::new(&ring, 10_000).unwrap();
        assert_eq!(
            ring.is_coreduced(),
            er.is_coreduced(),
            "coreduced on {ring}"
        );
        for ideal in ring.enumerate_ideals(100_000).unwrap() {
            let set = er.ideal_set(&ideal);
            assert_eq!(
                ring.is_second(&ideal),
                er.is_second_set(&set),
                "second {ideal} in {ring}"
            );
            assert_eq!(
                ring.is_prime_ideal(&ideal),
                er.is_prime_set(&set),
                "prime {ideal} in {ring}"
            );
        }
    }
}

#[test]
fn ideal_arithmetic_matches_element_sets() {
    for spec in ["36", "60", "4x6", "2x2x4", "9x3", "8x12"] {
        let ring: RingSpec = spec.parse().unwrap();
        let er = ElementRing::new(&ring, 10_000).unwrap();
        let ideals = ring.enumerate_ideals(1000).unwrap();
        for a in &ideals {
            let sa = er.ideal_set(a);
            assert_eq!(
                er.ideal_set(&ring.annihilator(a)),
                er.annihilator(&sa),
                "Ann {a} in {spec}"
            );
            for b in &ideals {
                let sb = er.ideal_set(b);
                assert_eq!(
                    er.ideal_set(&ring.intersect(a, b)),
                    er.intersection(&sa, &sb)
                );
                assert_eq!(er.ideal_set(&ring.sum(a, b)), er.sum(&sa, &sb));
                assert_eq!(ring.contains(a, b), sb.is_subset(&sa));
            }
        }
    }
}

#[test]
fn minimal_and_maximal_match_lattice_scans() {
    for ring in sample_rings().into_iter().filter(|r| r.order() <= 128) {
        let er = ElementRing::new(&ring, 10_000).unwrap();
        let ideals = ring.enumerate_ideals(1000).unwrap();
        assert_eq!(
            ring.minimal_ideals(),
            minimal_by_lattice(&er, &ideals),
            "minimal in {ring}"
        );
        assert_eq!(
            ring.maximal_ideals(),
            maximal_by_lattice(&er, &ideals),
            "maximal in {ring}"
        );
    }
}

#[test]
fn structural_laws_on_sample() {
    for ring in sample_rings() {
        let ideals = ring.enumerate_ideals(100_000).unwrap();
        let minimal = ring.minimal_ideals();
        for m in &minimal {
            assert!(ring.is_second(m), "minimal {m} of {ring} is second");
        }
        for i in &ideals {
            assert_eq!(
                &ring.annihilator(&ring.annihilator(i)),
                i,
                "Ann involution in {ring}"
            );
            if !ring.is_zero(i) {
                assert!(
                    minimal.iter().any(|m| ring.contains(i, m))
                        || ring.is_minimal(i)
                        || (ring.is_unit(i) && minimal.is_empty()),
                    "{i} in {ring} contains no minimal ideal"
                );
            }
        }
    }
}

fn ring_strategy() -> impl Strategy<Value = RingSpec> {
    proptest::collection::vec(2u64..40, 1..4).prop_map(|m| RingSpec::new(m).unwrap())
}

proptest! {
    #[test]
    fn lattice_laws(ring in ring_strategy(), picks in proptest::collection::vec(any::<prop::sample::Index>(), 3)) {
        let ideals = ring.enumerate_ideals(100_000).unwrap();
        let [a, b, c] = [0, 1, 2].map(|i| picks[i].get(&ideals).clone());
        prop_assert_eq!(ring.intersect(&a, &b), ring.intersect(&b, &a));
        prop_assert_eq!(ring.sum(&a, &b), ring.sum(&b, &a));
        prop_assert_eq!(ring.intersect(&ring.intersect(&a, &b), &c), ring.intersect(&a, &ring.intersect(&b, &c)));
        prop_assert_eq!(ring.sum(&ring.sum(&a, &b), &c), ring.sum(&a, &ring.sum(&b, &c)));
        prop_assert_eq!(ring.intersect(&a, &a), a.clone());
        prop_assert_eq!(ring.sum(&a, &a), a.clone());
        let meet = ring.intersect(&a, &b);
        let join = ring.sum(&a, &b);
        prop_assert!(ring.contains(&a, &meet) && ring.contains(&join, &a));
        // duality of the annihilator
        prop_assert_eq!(
            ring.annihilator(&join),
            ring.intersect(&ring.annihilator(&a), &ring.annihilator(&b))
        );
    }
}
