use lincolor::gen::*;
use lincolor::verify::class_checks;
use lincolor::{parse_graph, MutableGraph};

#[test]
fn golden_tdeg_graph() {
    let g = gen_random_tdeg(6, 3, 5, 7).unwrap();
    let frozen = parse_graph(include_bytes!("data/tdeg_6_3_5_7.gr")).unwrap();
    assert_eq!(g.write_graph(), frozen.write_graph());
    let r = class_checks(&g);
    assert!(r.degeneracy <= 3 && r.max_degree <= 5);
}

#[test]
fn tdeg_respects_its_bounds() {
    for seed in 0..100 {
        for t in 1..=3 {
            let dmax = t + 1 + (seed % 5) as u32;
            let g = gen_random_tdeg(40, t, dmax, seed).unwrap();
            let r = class_checks(&g);
            assert!(r.degeneracy <= t && r.max_degree <= dmax, "seed {seed} t {t}");
            assert_eq!(g, gen_random_tdeg(40, t, dmax, seed).unwrap());
        }
    }
    assert_eq!(gen_random_tdeg(1, 3, 5, 0).unwrap().edge_count(), 0);
}

#[test]
fn maximal_2deg_graphs() {
    for seed in 0..100 {
        let n = 3 + (seed % 60) as usize;
        let g = gen_maximal_2deg_maxdeg4(n, seed).unwrap();
        let r = class_checks(&g);
        assert!(r.maximal_2deg && r.max_degree <= 4 && r.m == 2 * n - 3, "seed {seed}");
    }
    let tri = gen_maximal_2deg_maxdeg4(3, 0).unwrap();
    assert_eq!(tri.edge_count(), 3);
    assert_eq!(gen_maximal_2deg_maxdeg4(4, 0).unwrap().edge_count(), 5);
    assert!(gen_maximal_2deg_maxdeg4(2, 0).is_err());
}

fn complete(n: usize) -> MutableGraph {
    let edges: Vec<(u32, u32)> = (0..n as u32).flat_map(|u| (u + 1..n as u32).map(move |v| (u, v))).collect();
    MutableGraph::from_edges(n, &edges).unwrap()
}

#[test]
fn subdivisions() {
    let s4 = gen_subdivision(&complete(4));
    let r = class_checks(&s4);
    assert_eq!((r.n, r.m, r.max_degree), (10, 12, 3));
    assert!(r.bipartite && r.degeneracy <= 2);
    let s5 = gen_subdivision(&complete(5));
    let r = class_checks(&s5);
    assert_eq!((r.n, r.m, r.degeneracy), (15, 20, 2));
    assert!(!r.partial_2tree);
    let path = MutableGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
    let sp = gen_subdivision(&path);
    assert_eq!((sp.n(), sp.edge_count(), sp.max_degree()), (5, 4, 2));
}

#[test]
fn cubic_graphs() {
    for seed in 0..100 {
        let n = 4 + 2 * (seed % 20) as usize;
        let g = gen_random_cubic(n, seed).unwrap();
        assert!((0..n as u32).all(|v| g.degree(v) == 3), "seed {seed}");
        let s = class_checks(&gen_subdivision(&g));
        assert!(s.bipartite && s.degeneracy == 2);
    }
    assert!(gen_random_cubic(5, 0).is_err());
}

#[test]
fn partial_2trees() {
    for seed in 0..100 {
        let n = 3 + (seed % 50) as usize;
        let g = gen_partial2tree_maxdeg4(n, 0.2, seed).unwrap();
        let r = class_checks(&g);
        assert!(r.partial_2tree && r.max_degree <= 4, "seed {seed}");
    }
    let tri = gen_partial2tree_maxdeg4(3, 0.0, 1).unwrap();
    assert_eq!(tri.edge_count(), 3);
}

#[test]
fn bipartite_2deg_graphs() {
    for seed in 0..100 {
        let n = 2 + (seed % 50) as usize;
        let g = gen_bipartite_2deg(n, 4, seed).unwrap();
        let r = class_checks(&g);
        assert!(r.bipartite && r.degeneracy <= 2 && r.max_degree <= 4, "seed {seed}");
    }
}

#[test]
fn random_pairs_are_maximal() {
    for seed in 0..100 {
        let g = gen_partial2tree_maxdeg4(30, 0.1, seed).unwrap();
        let p = gen_random_pairs(&g, seed);
        p.validate(&g).unwrap();
        let deg2 = (0..g.n() as u32).filter(|&v| g.degree(v) == 2).count();
        assert_eq!(p.pairs.len(), deg2 / 2);
    }
}

#[test]
fn dropping_edges_keeps_degrees_positive() {
    let g = gen_maximal_2deg_maxdeg4(50, 3).unwrap();
    let h = drop_random_edges(&g, 5, 3);
    assert!(h.edge_count() >= g.edge_count() - 5);
    assert!((0..h.n() as u32).all(|v| h.degree(v) > 0));
}
