//! Randomized mutation sequences over a graph and its coloring state. The
//! incremental structures are compared with a from-scratch recomputation
//! after every step.

#![allow(dead_code)]

use lincolor::gen::{gen_random_tdeg, rng};
use lincolor::graph::Mutation;
use lincolor::state::{ColoringState, Hint};
use lincolor::{EdgeId, MutableGraph, Vertex};
use rand::seq::IndexedRandom;
use rand::Rng;

fn audit(g: &MutableGraph, st: Option<&ColoringState>, step: usize, what: &str) -> Result<(), String> {
    g.check_invariants().map_err(|e| format!("step {step} ({what}): graph: {e}"))?;
    if let Some(st) = st {
        st.check(g).map_err(|e| format!("step {step} ({what}): state: {e}"))?;
    }
    Ok(())
}

/// `u` and `v` joined by a path of color `c`, by a union-find pass over the
/// current colors.
fn joined(g: &MutableGraph, c: u16, u: Vertex, v: Vertex) -> bool {
    let mut parent: Vec<usize> = (0..g.n()).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for e in 0..g.edge_count() as EdgeId {
        if g.is_alive(e) && g.color(e) == c {
            let [a, b] = g.ends(e);
            let (ra, rb) = (find(&mut parent, a as usize), find(&mut parent, b as usize));
            parent[ra] = rb;
        }
    }
    find(&mut parent, u as usize) == find(&mut parent, v as usize)
}

fn count_at(g: &MutableGraph, v: Vertex, c: u16) -> Vec<u32> {
    g.incidences(v).filter(|&nd| g.edge_color_at(nd) == c).collect()
}

/// Color the uncolored alive edge `e` with a random color that keeps every
/// class a linear forest, using a random applicable hint. Returns false if
/// no endpoint has degree at most 3 or no color fits.
fn color_edge(g: &mut MutableGraph, st: &mut ColoringState, e: EdgeId, k: u16, r: &mut impl Rng) -> Result<bool, String> {
    let [a, b] = g.ends(e);
    let (u, v) = if g.degree(a) <= 3 && (g.degree(b) > 3 || r.random_bool(0.5)) { (a, b) } else { (b, a) };
    if g.degree(u) > 3 {
        return Ok(false);
    }
    let fits: Vec<u16> = (1..=k)
        .filter(|&c| count_at(g, u, c).len() < 2 && count_at(g, v, c).len() < 2 && !joined(g, c, u, v))
        .collect();
    let Some(&c) = fits.choose(r) else { return Ok(false) };
    let at_v = count_at(g, v, c);
    let mut hints = vec![if at_v.is_empty() { Hint::Missing } else { Hint::Once(at_v[0]) }];
    if g.degree(v) <= 4 {
        hints.push(Hint::Scan);
    }
    let hint = *hints.choose(r).expect("at least one hint");
    st.assign_color(g, u, e, c, hint).map_err(|err| format!("assign_color({u}, {e}, {c}, {hint:?}): {err}"))?;
    Ok(true)
}

/// One sequence: random removals, identifications and dummy additions, then
/// a coloring state over what is left, then interleaved undo and coloring
/// steps until the journal is empty. Returns the number of audited steps.
pub fn run_sequence(seed: u64) -> Result<usize, String> {
    let mut r = rng(seed ^ 0x6d75_7461);
    let n = r.random_range(3..=18);
    let t = r.random_range(1..=3);
    let dmax = r.random_range(t + 1..=7);
    let base = gen_random_tdeg(n, t, dmax, seed).map_err(|e| e.to_string())?;
    let mut g = base.rebuilt(r.random_range(1..=3));
    let mut step = 0;
    audit(&g, None, step, "build")?;

    let mut olds: Vec<bool> = Vec::new();
    let peel = r.random_range(0..=2 * g.edge_count() + 2);
    for _ in 0..peel {
        step += 1;
        match r.random_range(0..10) {
            0..=5 => {
                let alive: Vec<EdgeId> = (0..g.edge_count() as EdgeId).filter(|&e| g.is_alive(e)).collect();
                if let Some(&e) = alive.choose(&mut r) {
                    g.remove_edge(e).map_err(|e| e.to_string())?;
                }
            }
            6..=8 => {
                let vs = g.n() as Vertex;
                let mut cands = Vec::new();
                for w in 0..vs {
                    if g.degree(w) > 1 {
                        continue;
                    }
                    let y = g.neighbors(w).next();
                    for u in 0..vs {
                        let grow = u32::from(y.is_some());
                        if u == w || g.degree(u) > 2 || g.degree(u) + grow > g.orig_degree(u) {
                            continue;
                        }
                        if let Some(y) = y {
                            if y == u || g.find_edge(u, y).is_some() {
                                continue;
                            }
                        }
                        cands.push((u, w));
                    }
                }
                if let Some(&(u, w)) = cands.choose(&mut r) {
                    g.identify(u, w).map_err(|e| e.to_string())?;
                    // the moved incidence stays special until the split
                    if let Some(&Mutation::Identify { edge, side, .. }) = g.journal_top() {
                        olds.push(g.set_special(MutableGraph::node(edge, side), true));
                    }
                }
            }
            _ => {
                let u = r.random_range(0..g.n() as Vertex);
                g.add_dummy(u);
            }
        }
        audit(&g, None, step, "peel")?;
    }

    let k = r.random_range(2..=4);
    let mut st = ColoringState::new(&g, k).map_err(|e| e.to_string())?;
    if r.random_bool(0.5) {
        st.set_audit(true);
    }
    let mut stuck = 0;
    loop {
        step += 1;
        let uncolored: Vec<EdgeId> =
            (0..g.edge_count() as EdgeId).filter(|&e| g.is_alive(e) && g.color(e) == 0).collect();
        if !uncolored.is_empty() && r.random_bool(0.4) {
            let e = *uncolored.choose(&mut r).expect("nonempty");
            color_edge(&mut g, &mut st, e, k, &mut r)?;
            audit(&g, Some(&st), step, "color")?;
            continue;
        }
        let Some(top) = g.journal_top().copied() else {
            stuck += 1;
            if uncolored.is_empty() || stuck > 4 * uncolored.len() + 4 {
                break;
            }
            continue;
        };
        match top {
            Mutation::Remove(e) => {
                g.restore_edge(e).map_err(|e| e.to_string())?;
                audit(&g, Some(&st), step, "restore")?;
                if r.random_bool(0.7) {
                    step += 1;
                    color_edge(&mut g, &mut st, e, k, &mut r)?;
                    audit(&g, Some(&st), step, "color restored")?;
                }
            }
            Mutation::Identify { u, w, .. } => {
                let old = olds.pop().expect("one flag per identification");
                st.split(&mut g, u, w, old).map_err(|e| format!("split({u}, {w}): {e}"))?;
                audit(&g, Some(&st), step, "split")?;
            }
            Mutation::IdentifyIsolated { u, w } => {
                st.split(&mut g, u, w, false).map_err(|e| format!("split({u}, {w}): {e}"))?;
                audit(&g, Some(&st), step, "split")?;
            }
            Mutation::AddDummy { .. } => {
                st.remove_dummy(&mut g).map_err(|e| format!("remove_dummy: {e}"))?;
                audit(&g, Some(&st), step, "remove dummy")?;
            }
        }
    }
    Ok(step)
}
