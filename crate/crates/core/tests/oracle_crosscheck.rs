//! The path-search oracle against plain subset enumeration.

use ptg_core::generate::{gen_apollonian, gen_random_near, gen_w_delta, gen_wheel};
use ptg_core::oracle::induced_cycles;
use ptg_core::{find_chordless_cycle, find_odd_hole, NearTriangulation, SimpleGraph, DEFAULT_BUDGET};
use proptest::prelude::*;

/// Lengths of all induced cycles (length >= 4), one entry per vertex set.
fn brute_force_hole_lengths(g: &SimpleGraph) -> Vec<usize> {
    let n = g.vertex_count();
    assert!(n <= 16);
    let ids: Vec<_> = g.vertices().collect();
    let mut lengths = Vec::new();
    for mask in 0u32..(1 << n) {
        let k = mask.count_ones() as usize;
        if k < 4 {
            continue;
        }
        let members: Vec<_> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| ids[i]).collect();
        let inside = |u| members.contains(&u);
        if !members.iter().all(|&u| g.neighbors(u).iter().filter(|&&w| inside(w)).count() == 2) {
            continue;
        }
        // 2-regular: a single cycle iff connected
        let mut seen = vec![members[0]];
        let mut i = 0;
        while i < seen.len() {
            for &w in g.neighbors(seen[i]) {
                if inside(w) && !seen.contains(&w) {
                    seen.push(w);
                }
            }
            i += 1;
        }
        if seen.len() == k {
            lengths.push(k);
        }
    }
    lengths.sort_unstable();
    lengths
}

fn compare(t: &NearTriangulation) {
    let g = t.adjacency();
    let expected = brute_force_hole_lengths(g);
    let mut got: Vec<usize> = induced_cycles(g, DEFAULT_BUDGET).unwrap().iter().map(Vec::len).collect();
    got.sort_unstable();
    assert_eq!(got, expected);
    let has_hole = !expected.is_empty();
    let has_odd = expected.iter().any(|&k| k % 2 == 1);
    assert_eq!(find_chordless_cycle(g, 4, DEFAULT_BUDGET).unwrap().found.is_some(), has_hole);
    assert_eq!(find_odd_hole(g, DEFAULT_BUDGET).unwrap().found.is_some(), has_odd);
}

#[test]
fn named_instances() {
    for k in 4..=12 {
        compare(&gen_wheel(k).unwrap());
    }
    compare(&gen_w_delta(6, 6, 6).unwrap());
    compare(&gen_apollonian(14, 1).unwrap());
}

#[test]
fn twelve_vertex_w_delta_holes() {
    let lengths = brute_force_hole_lengths(gen_w_delta(6, 6, 6).unwrap().adjacency());
    assert!(lengths.contains(&9));
    assert!(lengths.contains(&6));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]
    #[test]
    fn random_near_instances(t in 3usize..10, n_i in 0usize..6, flips in 0usize..30, seed in any::<u64>()) {
        compare(&gen_random_near(t, n_i, flips, seed).unwrap());
    }
}
