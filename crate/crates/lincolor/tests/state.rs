mod common;

use lincolor::state::{recompute_segments, ColoringState, Hint};
use lincolor::MutableGraph;
use proptest::prelude::*;

#[test]
fn fixed_mutation_sequences() {
    let mut steps = 0;
    for seed in 0..2000 {
        steps += common::run_sequence(seed).unwrap_or_else(|e| panic!("seed {seed}: {e}"));
    }
    assert!(steps > 20_000);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]
    #[test]
    fn random_mutation_sequences(seed in any::<u64>()) {
        prop_assert!(common::run_sequence(seed).is_ok(), "{:?}", common::run_sequence(seed));
    }
}

#[test]
fn path_segments_fuse_and_report_far_ends() {
    let mut g = MutableGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
    let mut st = ColoringState::new(&g, 2).unwrap();
    st.set_audit(true);
    st.assign_color(&mut g, 0, 0, 1, Hint::Missing).unwrap();
    st.assign_color(&mut g, 3, 2, 1, Hint::Missing).unwrap();
    assert_eq!(st.live_segments().count(), 2);
    st.assign_color(&mut g, 1, 1, 1, Hint::Scan).unwrap();
    assert_eq!(st.live_segments().count(), 1);
    let end = g.node_at(0, 0);
    assert_eq!(g.node_owner(st.far_terminal(end).unwrap()), 3);
    assert_eq!(recompute_segments(&g).unwrap().len(), 1);
    assert_eq!(st.onc_len(1), 0);
    assert_eq!(st.miss_colors(1, 4), vec![2]);
}

#[test]
fn closing_a_clean_cycle_is_refused() {
    let mut g = MutableGraph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
    let mut st = ColoringState::new(&g, 2).unwrap();
    st.assign_color(&mut g, 0, 0, 1, Hint::Missing).unwrap();
    st.assign_color(&mut g, 1, 1, 1, Hint::Scan).unwrap();
    assert!(st.assign_color(&mut g, 0, 2, 1, Hint::Scan).is_err());
    st.assign_color(&mut g, 0, 2, 2, Hint::Scan).unwrap();
    st.check(&g).unwrap();
}

#[test]
fn stale_hints_are_rejected() {
    let mut g = MutableGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
    let mut st = ColoringState::new(&g, 2).unwrap();
    st.set_audit(true);
    st.assign_color(&mut g, 0, 0, 1, Hint::Missing).unwrap();
    // color 1 is already at vertex 1, so Missing is a lie
    assert!(st.assign_color(&mut g, 2, 1, 1, Hint::Missing).is_err());
}
