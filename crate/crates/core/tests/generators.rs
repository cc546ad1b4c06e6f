use ptg_core::generate::{edge_flip, gen_apollonian, gen_fan, gen_random_near, gen_w_delta, Family, GenSpec};
use ptg_core::instance::{parse_instance, serialize_instance};
use ptg_core::{
    decompose, find_external_chords, find_odd_hole, find_separating_triangles, is_chordal, split_on, validate,
    LeafClass, NearTriangulation, DEFAULT_BUDGET,
};
use proptest::prelude::*;

fn arb_random_near() -> impl Strategy<Value = NearTriangulation> {
    (3usize..10, 0usize..8, 0usize..40, any::<u64>())
        .prop_map(|(t, n_i, flips, seed)| gen_random_near(t, n_i, flips, seed).unwrap())
}

#[test]
fn apollonian_leaves_are_small() {
    let t = gen_apollonian(10, 4).unwrap();
    let tree = decompose(&t).unwrap();
    assert!(tree.leaves().iter().all(|(_, c)| matches!(c, LeafClass::K4Leaf | LeafClass::TriangleLeaf)));
    for n in 4..=20 {
        let t = gen_apollonian(n, n as u64).unwrap();
        assert!(is_chordal(&t).unwrap().is_chordal());
        assert!(find_odd_hole(t.adjacency(), DEFAULT_BUDGET).unwrap().found.is_none());
    }
}

#[test]
fn w_delta_family_shape() {
    for dx in [6, 8, 10] {
        for dy in [6, 8, 10] {
            for dz in [6, 8, 10] {
                let t = gen_w_delta(dx, dy, dz).unwrap();
                assert_eq!(t.outer().len(), dx + dy + dz - 9);
                assert_eq!(t.internal_vertices().len(), 3);
                let degrees: Vec<usize> = t.internal_vertices().iter().map(|&u| t.degree(u)).collect();
                assert_eq!(degrees, [dx, dy, dz]);
                assert!(find_external_chords(&t).is_empty() && find_separating_triangles(&t).is_empty());
                assert!(t.stats().all_identities_hold());
            }
        }
    }
    assert!(gen_w_delta(6, 7, 6).is_err());
}

#[test]
fn spec_dispatch_matches_direct_calls() {
    let spec = GenSpec { family: Family::RandomNear { t: 7, n_i: 4, flips: 12 }, seed: 99 };
    assert_eq!(spec.generate().unwrap().graph(), gen_random_near(7, 4, 12, 99).unwrap().graph());
    assert_eq!(spec.to_string(), "random-near(7,4,12) seed=99");
    let fan = GenSpec { family: Family::Fan { t: 6 }, seed: 0 };
    assert_eq!(fan.generate().unwrap().graph(), gen_fan(6).unwrap().graph());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn outputs_validate_and_satisfy_identities(t in arb_random_near()) {
        let s = t.stats();
        prop_assert!(s.all_identities_hold(), "{}", s);
        prop_assert!(validate(t.graph().clone()).is_ok());
    }

    #[test]
    fn same_seed_same_bytes(t in 3usize..9, n_i in 0usize..8, flips in 0usize..40, seed in any::<u64>()) {
        let a = serialize_instance(gen_random_near(t, n_i, flips, seed).unwrap().graph());
        let b = serialize_instance(gen_random_near(t, n_i, flips, seed).unwrap().graph());
        prop_assert_eq!(a, b);
    }

    #[test]
    fn serialization_round_trips(t in arb_random_near()) {
        let text = serialize_instance(t.graph());
        let back = parse_instance(&text).unwrap();
        prop_assert_eq!(serialize_instance(&back), text);
        prop_assert_eq!(back, t.graph().canonical());
    }

    #[test]
    fn flips_preserve_stats_and_invert(t in arb_random_near(), pick in any::<prop::sample::Index>()) {
        let edges = t.graph().rotation().edges();
        let (a, b) = edges[pick.index(edges.len())];
        if let Ok(f) = edge_flip(&t, a, b) {
            prop_assert_eq!(f.stats(), t.stats());
            let (c, d) = f
                .graph()
                .rotation()
                .edges()
                .into_iter()
                .find(|&(c, d)| !t.adjacent(c, d))
                .expect("flip adds an edge");
            let back = edge_flip(&f, c, d).unwrap();
            prop_assert_eq!(back.graph().canonical(), t.graph().canonical());
        }
    }

    #[test]
    fn splits_account_for_every_face(t in arb_random_near()) {
        for s in find_external_chords(&t) {
            let (l, r) = split_on(&t, &s).unwrap();
            prop_assert_eq!(l.stats().f + r.stats().f, t.stats().f);
            prop_assert_eq!(l.vertex_count() + r.vertex_count(), t.vertex_count() + 2);
        }
        for s in find_separating_triangles(&t) {
            let (l, r) = split_on(&t, &s).unwrap();
            prop_assert_eq!(l.stats().f + r.stats().f, t.stats().f + 1);
            prop_assert_eq!(l.vertex_count() + r.vertex_count(), t.vertex_count() + 3);
        }
    }

    #[test]
    fn leaves_are_separator_free(t in arb_random_near()) {
        let tree = decompose(&t).unwrap();
        let mut labels = 0;
        for (leaf, _) in tree.leaves() {
            prop_assert!(find_external_chords(leaf).is_empty());
            prop_assert!(find_separating_triangles(leaf).is_empty());
            for u in leaf.graph().vertices() {
                for &w in leaf.graph().neighbors(u) {
                    prop_assert!(t.adjacent(leaf.origin(u), leaf.origin(w)));
                }
            }
            labels += leaf.vertex_count();
        }
        prop_assert!(labels >= t.vertex_count());
    }
}
