use lincolor::gen::{gen_random_tdeg, rng};
use lincolor::verify::*;
use lincolor::{LinearColoring, MutableGraph, PairConstraints};
use rand::Rng;

fn graph(n: usize, edges: &[(u32, u32)]) -> MutableGraph {
    MutableGraph::from_edges(n, edges).unwrap()
}

fn complete(n: usize) -> MutableGraph {
    let edges: Vec<(u32, u32)> = (0..n as u32).flat_map(|u| (u + 1..n as u32).map(move |v| (u, v))).collect();
    graph(n, &edges)
}

/// Every color class has max degree 2 and no cycle, by DFS.
fn linear_by_dfs(g: &MutableGraph, c: &LinearColoring) -> bool {
    let edges = g.edge_list();
    for col in 1..=c.k {
        let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); g.n()];
        for (e, &(u, v)) in edges.iter().enumerate() {
            if c.colors[e] == col {
                adj[u as usize].push((v as usize, e));
                adj[v as usize].push((u as usize, e));
            }
        }
        if adj.iter().any(|a| a.len() > 2) {
            return false;
        }
        let mut seen = vec![false; g.n()];
        for s in 0..g.n() {
            if seen[s] {
                continue;
            }
            let mut stack = vec![(s, usize::MAX)];
            while let Some((x, via)) = stack.pop() {
                if seen[x] {
                    return false;
                }
                seen[x] = true;
                for &(y, e) in &adj[x] {
                    if e != via {
                        stack.push((y, e));
                    }
                }
            }
        }
    }
    true
}

#[test]
fn verifier_agrees_with_dfs() {
    let mut r = rng(99);
    let mut valid = 0;
    for seed in 0..1000 {
        let g = gen_random_tdeg(5 + (seed % 12) as usize, 2, 4, seed).unwrap();
        let k = r.random_range(1..=3u16);
        let colors = (0..g.edge_count()).map(|_| r.random_range(1..=k)).collect();
        let c = LinearColoring { k, colors };
        let ours = verify_linear(&g, &c).is_ok();
        assert_eq!(ours, linear_by_dfs(&g, &c), "seed {seed}");
        assert_eq!(ours, color_classes_acyclic(&g, &c) && ours);
        valid += usize::from(ours);
    }
    assert!(valid > 50 && valid < 950);
}

#[test]
fn verifier_reports_each_violation() {
    let tri = complete(3);
    let c = |colors: Vec<u16>| LinearColoring { k: 2, colors };
    assert!(matches!(verify_linear(&tri, &c(vec![1, 1, 1])), Err(Violation::Cycle { .. })));
    assert!(matches!(verify_linear(&tri, &c(vec![1, 3, 1])), Err(Violation::ColorRange { .. })));
    assert!(matches!(verify_linear(&tri, &c(vec![1, 1])), Err(Violation::EdgeCount { .. })));
    let star = graph(4, &[(0, 1), (0, 2), (0, 3)]);
    assert!(matches!(verify_linear(&star, &c(vec![1, 1, 1])), Err(Violation::Degree { .. })));
    verify_linear(&tri, &c(vec![1, 1, 2])).unwrap();
}

#[test]
fn brute_force_known_values() {
    assert_eq!(brute_force_chi_l(&complete(4), 4).unwrap(), Some(2));
    assert_eq!(brute_force_chi_l(&complete(5), 4).unwrap(), Some(3));
    let p = graph(4, &[(0, 1), (1, 2), (2, 3)]);
    assert_eq!(brute_force_chi_l(&p, 4).unwrap(), Some(1));
    let c5 = graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
    assert_eq!(brute_force_chi_l(&c5, 4).unwrap(), Some(2));
    assert_eq!(brute_force_chi_l(&c5, 1).unwrap(), None);
    let star5 = graph(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)]);
    assert_eq!(brute_force_chi_l(&star5, 4).unwrap(), Some(3));
    assert!(brute_force_chi_l(&complete(6), 4).is_err());
    let w = brute_force_coloring(&complete(4), 4).unwrap().unwrap();
    verify_linear(&complete(4), &w).unwrap();
}

#[test]
fn exact_two_coloring_limits() {
    let tri = complete(3);
    assert_eq!(exact_two_coloring(&tri, 0, None, 1000), SearchOutcome::Infeasible);
    assert!(matches!(exact_two_coloring(&tri, 1, None, 1000), SearchOutcome::Found(_)));
    assert_eq!(exact_two_coloring(&complete(5), usize::MAX, None, 1_000_000), SearchOutcome::Infeasible);
    let c4 = graph(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
    let pairs = PairConstraints { pairs: vec![(0, 2), (1, 3)] };
    match exact_two_coloring(&c4, usize::MAX, Some(&pairs), 1000) {
        SearchOutcome::Found(c) => {
            let (_, ok) = count_mono_and_pairs(&c4, &c, Some(&pairs));
            assert!(ok);
        }
        other => panic!("{other:?}"),
    }
    assert_eq!(exact_two_coloring(&complete(4), 0, None, 1), SearchOutcome::BudgetExhausted);
}

#[test]
fn class_recognition() {
    let k4 = complete(4);
    assert!(!is_partial_2tree(4, &k4.edge_list()));
    let r = class_checks(&k4);
    assert_eq!((r.degeneracy, r.max_degree, r.f_index), (3, 3, 2));
    let c5 = graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
    assert!(!is_bipartite(5, &c5.edge_list()));
    assert!(is_partial_2tree(5, &c5.edge_list()));
    let k23 = graph(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]);
    let r = class_checks(&k23);
    assert!(r.bipartite && r.partial_2tree && !r.maximal_2deg);
    let fan = graph(4, &[(0, 1), (1, 2), (0, 2), (2, 3), (1, 3)]);
    assert!(class_checks(&fan).maximal_2deg);
}
