use lincolor::explore::{enumerate_degenerate, explore_conjecture, SmallGraph};
use lincolor::verify::{exact_two_coloring, verify_linear, SearchOutcome};
use lincolor::{Exec, MutableGraph};
use std::collections::HashSet;

fn degeneracy_at_most(n: usize, adj: &[u16], t: u32) -> bool {
    let mut gone = 0u16;
    loop {
        let alive = (0..n).filter(|&v| gone >> v & 1 == 0);
        let next = alive.clone().find(|&v| (adj[v] & !gone).count_ones() <= t);
        match next {
            Some(v) => gone |= 1 << v,
            None => return alive.count() == 0,
        }
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Unlabeled graph counts by brute force: every labeled graph, filtered,
/// reduced to the smallest relabeled edge mask.
fn naive_count(n: usize, t: u32, dmax: u32, edges_wanted: Option<usize>) -> usize {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let perms = permutations(n);
    let mut seen = HashSet::new();
    for mask in 0u32..1 << pairs.len() {
        if edges_wanted.is_some_and(|m| mask.count_ones() as usize != m) {
            continue;
        }
        let mut adj = vec![0u16; n];
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
            }
        }
        if adj.iter().any(|a| a.count_ones() > dmax) || !degeneracy_at_most(n, &adj, t) {
            continue;
        }
        let canon = perms
            .iter()
            .map(|p| {
                let mut m = 0u32;
                for (i, &(u, v)) in pairs.iter().enumerate() {
                    let (a, b) = (p[u].min(p[v]), p[u].max(p[v]));
                    if mask >> i & 1 == 1 {
                        let j = pairs.iter().position(|&q| q == (a, b)).expect("pair exists");
                        m |= 1 << j;
                    }
                }
                m
            })
            .min()
            .expect("at least one permutation");
        seen.insert(canon);
    }
    seen.len()
}

#[test]
fn small_levels_match_known_counts() {
    let all = enumerate_degenerate(4, 3, 9, Exec::Sequential);
    let counts: Vec<usize> = all.iter().map(|l| l.len()).collect();
    assert_eq!(counts, vec![1, 2, 4, 11]);
}

#[test]
fn levels_match_naive_enumeration() {
    let lv = enumerate_degenerate(6, 2, 4, Exec::default());
    for n in 1..=6 {
        assert_eq!(lv[n - 1].len(), naive_count(n, 2, 4, None), "2-degenerate, n = {n}");
    }
    let lv3 = enumerate_degenerate(6, 3, 6, Exec::default());
    for n in 1..=6 {
        assert_eq!(lv3[n - 1].len(), naive_count(n, 3, 6, None), "3-degenerate, n = {n}");
    }
}

#[test]
fn maximal_graphs_match_naive_enumeration() {
    let lv = enumerate_degenerate(6, 2, 4, Exec::default());
    for n in 3..=6 {
        let ours = lv[n - 1].iter().filter(|g| g.edge_count() == 2 * n - 3).count();
        assert_eq!(ours, naive_count(n, 2, 4, Some(2 * n - 3)), "n = {n}");
    }
}

#[test]
fn parallel_and_sequential_enumeration_agree() {
    let a = enumerate_degenerate(7, 2, 4, Exec::Sequential);
    let b = enumerate_degenerate(7, 2, 4, Exec::Parallel);
    assert_eq!(a, b);
}

#[test]
fn isomorphism_test_sees_through_relabeling() {
    let c6 = |order: [usize; 6]| {
        let mut g = SmallGraph::empty(6);
        for i in 0..6 {
            g.add_edge(order[i], order[(i + 1) % 6]);
        }
        g
    };
    let a = c6([0, 1, 2, 3, 4, 5]);
    let b = c6([3, 0, 5, 1, 4, 2]);
    assert_eq!(a.invariant(), b.invariant());
    assert!(a.is_isomorphic(&b));
    // two triangles have the same degrees as C6
    let mut tt = SmallGraph::empty(6);
    for (u, v) in [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)] {
        tt.add_edge(u, v);
    }
    assert!(!a.is_isomorphic(&tt));
    assert!(!tt.is_connected());
}

#[test]
fn no_counterexample_up_to_four() {
    let rep = explore_conjecture(4, Exec::default()).unwrap();
    assert!(rep.counterexamples.is_empty());
    assert_eq!(rep.write(), "none 4\n");
}

#[test]
fn k24_is_enumerated_and_colorable() {
    let k24 = MutableGraph::from_edges(6, &[(0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (1, 3), (1, 4), (1, 5)]).unwrap();
    let target = SmallGraph::from_graph(&k24);
    let lv = enumerate_degenerate(6, 2, 4, Exec::default());
    assert!(lv[5].iter().any(|g| g.is_isomorphic(&target)));
    match exact_two_coloring(&k24, usize::MAX, None, 1_000_000) {
        SearchOutcome::Found(c) => verify_linear(&k24, &c).unwrap(),
        other => panic!("K_2,4 not colored: {other:?}"),
    }
    let rep = explore_conjecture(6, Exec::default()).unwrap();
    assert!(rep.counterexamples.is_empty() && rep.undecided.is_empty());
}

#[test]
fn paths_and_cycles_are_out_of_scope() {
    let rep = explore_conjecture(5, Exec::default()).unwrap();
    // P5 and C5
    assert_eq!(rep.levels[4].low_degree, 2);
    let l = &rep.levels[4];
    assert_eq!(l.connected, l.low_degree + l.searched);
}

#[test]
fn rejects_too_large() {
    assert!(explore_conjecture(11, Exec::Sequential).is_err());
}
