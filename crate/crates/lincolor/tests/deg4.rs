use lincolor::deg4::{color_2deg_dense, color_bipartite_2deg, hamiltonian_path_from};
use lincolor::gen::{drop_random_edges, gen_bipartite_2deg, gen_maximal_2deg_maxdeg4, gen_random_cubic, gen_subdivision};
use lincolor::verify::{exact_two_coloring, verify_linear, SearchOutcome};
use lincolor::{ColorError, MutableGraph};

fn cycle(n: u32) -> MutableGraph {
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    MutableGraph::from_edges(n as usize, &edges).unwrap()
}

fn complete(n: u32) -> MutableGraph {
    let edges: Vec<_> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    MutableGraph::from_edges(n as usize, &edges).unwrap()
}

fn k24() -> MutableGraph {
    let edges: Vec<_> = (0..2).flat_map(|a| (2..6).map(move |b| (a, b))).collect();
    MutableGraph::from_edges(6, &edges).unwrap()
}

fn dense_ok(g: &MutableGraph, audit: bool) -> lincolor::deg4::DenseOutcome {
    let out = color_2deg_dense(g, audit).unwrap_or_else(|e| panic!("{e}\n{}", g.write_graph()));
    verify_linear(g, &out.outcome.coloring).unwrap();
    assert!(out.mono.count() <= 1, "{:?}", out.mono);
    out
}

#[test]
fn triangle_has_one_mono_vertex() {
    let out = dense_ok(&complete(3), true);
    assert_eq!(out.mono.count(), 1);
}

#[test]
fn even_cycle_alternates() {
    let out = dense_ok(&cycle(6), true);
    assert_eq!(out.mono.count(), 0);
    let (_, mono) = color_bipartite_2deg(&cycle(6), true).unwrap();
    assert_eq!(mono.count(), 0);
}

#[test]
fn maximal_graphs_with_audit() {
    let mut restarts = 0;
    let mut exact = 0;
    for seed in 0..600u64 {
        let n = 3 + (seed % 60) as usize;
        let g = gen_maximal_2deg_maxdeg4(n, seed).unwrap();
        let g = drop_random_edges(&g, (seed % 3) as usize, seed);
        let out = dense_ok(&g, seed % 4 == 0);
        restarts += u32::from(out.attempts > 1);
        exact += u32::from(out.exact);
    }
    assert!(exact <= 6, "{exact} instances needed the exact fallback ({restarts} restarted)");
}

#[test]
fn large_maximal_graphs() {
    for seed in 0..20u64 {
        let g = gen_maximal_2deg_maxdeg4(2000, seed).unwrap();
        let g = drop_random_edges(&g, (seed % 3) as usize, seed + 7);
        dense_ok(&g, false);
    }
}

#[test]
fn agrees_with_exhaustive_search_on_small_graphs() {
    for seed in 0..300u64 {
        let n = 3 + (seed % 7) as usize;
        let g = gen_maximal_2deg_maxdeg4(n, seed).unwrap();
        let g = drop_random_edges(&g, (seed % 3) as usize, seed);
        assert!(matches!(exact_two_coloring(&g, 1, None, u64::MAX), SearchOutcome::Found(_)));
        dense_ok(&g, true);
    }
}

#[test]
fn hamiltonian_paths_of_maximal_graphs() {
    for seed in 0..200u64 {
        let n = 3 + (seed % 50) as usize;
        let g = gen_maximal_2deg_maxdeg4(n, seed).unwrap();
        let out = dense_ok(&g, false);
        let path = hamiltonian_path_from(&g, &out.outcome.coloring).unwrap();
        assert_eq!(path.len(), n);
        let mut seen = vec![false; n];
        for w in path.windows(2) {
            assert!(g.find_edge(w[0], w[1]).is_some());
        }
        for &v in &path {
            assert!(!seen[v as usize]);
            seen[v as usize] = true;
        }
    }
}

#[test]
fn hamiltonian_path_on_triangle_with_apex() {
    let g = MutableGraph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 3)]).unwrap();
    let out = dense_ok(&g, true);
    assert_eq!(hamiltonian_path_from(&g, &out.outcome.coloring).unwrap().len(), 4);
}

#[test]
fn hamiltonian_path_rejects_non_maximal() {
    let g = k24();
    let out = dense_ok(&g, true);
    assert!(hamiltonian_path_from(&g, &out.outcome.coloring).is_err());
}

#[test]
fn dense_rejects_bad_inputs() {
    let star: Vec<_> = (1..6).map(|i| (0, i)).collect();
    let g = MutableGraph::from_edges(6, &star).unwrap();
    assert!(matches!(color_2deg_dense(&g, false), Err(ColorError::DegreeTooLarge { .. })));
    assert!(matches!(color_2deg_dense(&complete(5), false), Err(ColorError::NotDegenerate { .. })));
    assert!(matches!(color_2deg_dense(&complete(4), false), Err(ColorError::NotDegenerate { .. })));
    // a spider with three long legs
    let mut legs = vec![(0, 1), (0, 4), (0, 7)];
    legs.extend([(1, 2), (2, 3), (4, 5), (5, 6), (7, 8), (8, 9)]);
    let g = MutableGraph::from_edges(10, &legs).unwrap();
    assert!(matches!(color_2deg_dense(&g, false), Err(ColorError::TooSparse { .. })));
}

fn bip_ok(g: &MutableGraph, audit: bool) {
    let (out, mono) = color_bipartite_2deg(g, audit).unwrap_or_else(|e| panic!("{e}\n{}", g.write_graph()));
    verify_linear(g, &out.coloring).unwrap();
    assert_eq!(mono.count(), 0);
    assert!(lincolor::coloring::mono_vertices(g, &out.coloring).mono.is_empty());
}

#[test]
fn bipartite_named_graphs() {
    bip_ok(&k24(), true);
    bip_ok(&gen_subdivision(&complete(4)), true);
    bip_ok(&gen_subdivision(&complete(5)), true);
    bip_ok(&cycle(8), true);
}

#[test]
fn bipartite_random_graphs() {
    for seed in 0..400u64 {
        let n = 2 + (seed % 70) as usize;
        bip_ok(&gen_bipartite_2deg(n, 2 + (seed % 3) as u32, seed).unwrap(), seed % 3 == 0);
        let c = gen_random_cubic(4 + 2 * (seed % 20) as usize, seed).unwrap();
        bip_ok(&gen_subdivision(&c), seed % 3 == 0);
    }
}

#[test]
fn bipartite_rejects_odd_cycles() {
    assert!(matches!(color_bipartite_2deg(&cycle(5), false), Err(ColorError::NotBipartite)));
    assert!(matches!(color_bipartite_2deg(&complete(3), false), Err(ColorError::NotBipartite)));
}
