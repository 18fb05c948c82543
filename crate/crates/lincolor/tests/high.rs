use lincolor::gen::gen_random_tdeg;
use lincolor::high::{color_2deg_high, high_k};
use lincolor::verify::{brute_force_chi_l, verify_linear};
use lincolor::{ColorError, MutableGraph};

fn check(g: &MutableGraph, k: u16, audit: bool) -> usize {
    let out = color_2deg_high(g, k, audit).unwrap_or_else(|e| panic!("{e}\n{}", g.write_graph()));
    verify_linear(g, &out.coloring).unwrap();
    assert!(out.coloring.max_color() <= k);
    out.coloring.colors_used()
}

#[test]
fn random_2deg_graphs_with_audit() {
    for seed in 0..1500u64 {
        let n = 6 + (seed % 80) as usize;
        let dmax = 5 + (seed % 8) as u32;
        let g = gen_random_tdeg(n, 2, dmax, seed).unwrap();
        let k = high_k(g.max_degree());
        check(&g, k, seed % 3 == 0);
    }
}

#[test]
fn extra_colors_are_accepted() {
    for seed in 0..200u64 {
        let g = gen_random_tdeg(40, 2, 6, seed).unwrap();
        check(&g, high_k(g.max_degree()) + 1 + (seed % 3) as u16, true);
    }
}

#[test]
fn wheel_like_instance_with_six_spokes() {
    // hub 0 joined to a 6-path 1..6, plus pendant edges to reach degree 6
    let mut edges: Vec<(u32, u32)> = (1..7).map(|i| (0, i)).collect();
    edges.extend((1..6).map(|i| (i, i + 1)));
    let g = MutableGraph::from_edges(7, &edges).unwrap();
    assert_eq!(g.max_degree(), 6);
    assert_eq!(check(&g, 3, true), 3);
    assert_eq!(brute_force_chi_l(&g, 4).unwrap(), Some(3));
}

#[test]
fn matches_brute_force_on_small_instances() {
    let mut tried = 0;
    for seed in 0..4000u64 {
        let g = gen_random_tdeg(7 + (seed % 3) as usize, 2, 6, seed).unwrap();
        let d = g.max_degree();
        if d < 5 || g.edge_list().len() > 12 {
            continue;
        }
        tried += 1;
        let k = high_k(d);
        assert_eq!(check(&g, k, true), k as usize);
        assert_eq!(brute_force_chi_l(&g, k).unwrap(), Some(k));
    }
    assert!(tried > 20, "only {tried} instances");
}

#[test]
fn rejects_bad_inputs() {
    let k24: Vec<(u32, u32)> = (0..2).flat_map(|a| (2..6).map(move |b| (a, b))).collect();
    let g = MutableGraph::from_edges(6, &k24).unwrap();
    assert!(matches!(color_2deg_high(&g, 2, false), Err(ColorError::BadK(2))));
    let k4 = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    let g = MutableGraph::from_edges(4, &k4).unwrap();
    assert!(matches!(color_2deg_high(&g, 3, false), Err(ColorError::NotDegenerate { .. })));
    let star: Vec<(u32, u32)> = (1..9).map(|i| (0, i)).collect();
    let g = MutableGraph::from_edges(9, &star).unwrap();
    assert!(matches!(color_2deg_high(&g, 3, false), Err(ColorError::DegreeTooLarge { .. })));
    assert_eq!(check(&g, 4, true), 4);
}
