use lincolor::coloring::mono_vertices;
use lincolor::gen::{gen_partial2tree_maxdeg4, gen_random_pairs};
use lincolor::p2tree::{color_partial2tree, find_configuration};
use lincolor::verify::{exact_two_coloring, verify_linear, SearchOutcome};
use lincolor::{ColorError, MutableGraph, PairConstraints};

fn graph(n: usize, edges: &[(u32, u32)]) -> MutableGraph {
    MutableGraph::from_edges(n, edges).unwrap()
}

fn check(g: &MutableGraph, pairs: &PairConstraints) -> usize {
    let (out, mono) = color_partial2tree(g, pairs, true).unwrap();
    assert_eq!(out.coloring.k, 2);
    verify_linear(g, &out.coloring).unwrap();
    assert_eq!(mono, mono_vertices(g, &out.coloring));
    assert!(pairs.violated(&mono, g.n()).is_empty());
    mono.count()
}

#[test]
fn configuration_kinds_on_small_graphs() {
    let edge = graph(2, &[(0, 1)]);
    assert_eq!(find_configuration(&edge).unwrap().kind(), 'a');
    let tri = graph(3, &[(0, 1), (1, 2), (2, 0)]);
    assert_eq!(find_configuration(&tri).unwrap().kind(), 'b');
    // K_{2,3}: two degree-3 hubs, three degree-2 vertices sharing them
    let k23 = graph(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]);
    assert_eq!(find_configuration(&k23).unwrap().kind(), 'c');
    let fan = graph(5, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (2, 4), (3, 4)]);
    assert_eq!(find_configuration(&fan).unwrap().kind(), 'd');
    assert!(find_configuration(&graph(3, &[])).is_none());
}

#[test]
fn bowtie_between_degree_four_vertices() {
    // a=0 with triangles 0-1-2 and 0-3-4; 2 and 4 both see the edge 5-6
    let g = graph(7, &[(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4), (2, 5), (2, 6), (4, 5), (4, 6), (5, 6)]);
    assert_eq!(find_configuration(&g).unwrap().kind(), 'e');
    for pairs in [vec![], vec![(1, 3)]] {
        check(&g, &PairConstraints { pairs });
    }
}

#[test]
fn cycles_with_pairs() {
    let c4 = graph(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
    for pairs in [vec![], vec![(0, 2)], vec![(0, 2), (1, 3)], vec![(0, 1), (2, 3)]] {
        check(&c4, &PairConstraints { pairs });
    }
    let c5 = graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
    check(&c5, &PairConstraints { pairs: vec![(0, 2), (1, 3)] });
}

#[test]
fn random_partial_2trees_with_maximal_pairs() {
    for seed in 0..1500u64 {
        let n = 3 + (seed % 40) as usize;
        let drop = [0.0, 0.1, 0.3][(seed % 3) as usize];
        let g = gen_partial2tree_maxdeg4(n, drop, seed).unwrap();
        let pairs = gen_random_pairs(&g, seed.wrapping_mul(31));
        check(&g, &pairs);
    }
}

#[test]
fn large_partial_2trees() {
    for seed in 0..20u64 {
        let g = gen_partial2tree_maxdeg4(3000, 0.05, seed).unwrap();
        let pairs = gen_random_pairs(&g, seed);
        let (out, mono) = color_partial2tree(&g, &pairs, false).unwrap();
        verify_linear(&g, &out.coloring).unwrap();
        assert!(pairs.violated(&mono, g.n()).is_empty());
    }
}

#[test]
fn agrees_with_exhaustive_search_on_small_graphs() {
    for seed in 0..400u64 {
        let n = 3 + (seed % 6) as usize;
        let g = gen_partial2tree_maxdeg4(n, 0.2, seed).unwrap();
        let pairs = gen_random_pairs(&g, seed + 7);
        assert!(matches!(exact_two_coloring(&g, usize::MAX, Some(&pairs), 10_000_000), SearchOutcome::Found(_)));
        check(&g, &pairs);
    }
}

#[test]
fn rejects_bad_inputs() {
    let k4 = graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
    assert!(matches!(color_partial2tree(&k4, &PairConstraints::default(), false), Err(ColorError::NotPartial2Tree)));
    let star = graph(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)]);
    assert!(matches!(
        color_partial2tree(&star, &PairConstraints::default(), false),
        Err(ColorError::DegreeTooLarge { .. })
    ));
    let path = graph(3, &[(0, 1), (1, 2)]);
    let bad = PairConstraints { pairs: vec![(0, 1)] };
    assert!(matches!(color_partial2tree(&path, &bad, false), Err(ColorError::Pairs(_))));
}
