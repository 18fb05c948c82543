//! Linear `k`-colorings of 2-degenerate graphs with `Δ <= 2k`, `k >= 3`.
//!
//! Pivot edges are peeled one at a time; a pivot of full degree `2k` gives
//! up three of its low edges at once. No vertex is ever identified, so every
//! segment stays clean.

use crate::coloring::{ColorOutcome, LinearColoring};
use crate::error::ColorError;
use crate::graph::{EdgeId, GraphError, MutableGraph, NodeId, Vertex};
use crate::state::{ColoringState, Hint};

#[derive(Clone, Copy, Debug)]
enum Frame {
    One { u: Vertex, v: Vertex, e: EdgeId },
    Three { v: Vertex, low: [Vertex; 3], es: [EdgeId; 3] },
}

fn contract(msg: impl Into<String>) -> ColorError {
    ColorError::Graph(GraphError::Contract(msg.into()))
}

/// `⌈Δ/2⌉`, clamped to the smallest `k` this algorithm accepts.
pub fn high_k(max_degree: u32) -> u16 {
    max_degree.div_ceil(2).max(3) as u16
}

pub fn color_2deg_high(g: &MutableGraph, k: u16, audit: bool) -> Result<ColorOutcome, ColorError> {
    if k < 3 {
        return Err(ColorError::BadK(k));
    }
    let maxd = g.max_degree();
    if maxd > 2 * k as u32 {
        return Err(ColorError::DegreeTooLarge { max_degree: maxd, k, limit: 2 * k as u32 });
    }
    let (dg, _) = g.degeneracy_order();
    if dg > 2 {
        return Err(ColorError::NotDegenerate { found: dg, limit: 2 });
    }
    let mut g = g.rebuilt(2);
    let mut frames = Vec::new();
    while let Some((v, u, e)) = g.find_pivot_edge() {
        if g.degree(v) < 2 * k as u32 {
            g.remove_edge(e)?;
            frames.push(Frame::One { u, v, e });
        } else {
            let mut low = [u, 0, 0];
            let mut es = [e, 0, 0];
            let mut got = 1;
            for nd in g.incidences(v) {
                let y = g.node_other(nd);
                if y != u && g.degree(y) <= 2 {
                    low[got] = y;
                    es[got] = MutableGraph::node_edge(nd);
                    got += 1;
                    if got == 3 {
                        break;
                    }
                }
            }
            if got < 3 {
                return Err(contract(format!("pivot {v} of degree {} has too few low neighbours", 2 * k)));
            }
            for ed in es {
                g.remove_edge(ed)?;
            }
            frames.push(Frame::Three { v, low, es });
        }
        if audit {
            g.check_invariants().map_err(contract)?;
        }
    }
    if g.alive_edges() > 0 {
        return Err(contract("peeling stopped with edges left"));
    }
    let mut st = ColoringState::new(&g, k)?;
    st.set_audit(audit);
    while let Some(f) = frames.pop() {
        match f {
            Frame::One { u, v, e } => {
                g.restore_edge(e)?;
                color_one(&mut g, &mut st, u, v, e)?;
            }
            Frame::Three { v, low, es } => {
                for ed in es.iter().rev() {
                    g.restore_edge(*ed)?;
                }
                color_three(&mut g, &mut st, v, low, es)?;
            }
        }
    }
    let coloring = LinearColoring::from_graph(&g, k);
    Ok(ColorOutcome { coloring, ops: g.ops() + st.ops() })
}

fn color_one(g: &mut MutableGraph, st: &mut ColoringState, u: Vertex, v: Vertex, e: EdgeId) -> Result<(), ColorError> {
    if let Some(&c) = st.miss_colors(v, 1).first() {
        st.assign_color(g, u, e, c, Hint::Missing)?;
        return Ok(());
    }
    let at_u: Vec<u16> =
        g.incidences(u).map(|nd| g.edge_color_at(nd)).filter(|&c| c != 0).collect();
    let nd = st
        .onc_nodes(v, at_u.len() + 1)
        .into_iter()
        .find(|&nd| !at_u.contains(&g.edge_color_at(nd)))
        .ok_or_else(|| contract(format!("no color for pivot edge at {v}")))?;
    st.assign_color(g, u, e, g.edge_color_at(nd), Hint::Once(nd))?;
    Ok(())
}

/// Far end of the segment of color leaving `v` through `nd`, if it is one
/// of the three low vertices.
fn path_end(g: &MutableGraph, st: &ColoringState, nd: NodeId, low: &[Vertex; 3]) -> Option<usize> {
    let far = st.far_terminal(nd)?;
    let owner = g.node_owner(far);
    low.iter().position(|&z| z == owner)
}

fn color_three(
    g: &mut MutableGraph,
    st: &mut ColoringState,
    v: Vertex,
    low: [Vertex; 3],
    es: [EdgeId; 3],
) -> Result<(), ColorError> {
    let onc = st.onc_nodes(v, 3);
    if onc.len() == 3 {
        let mut f = [usize::MAX; 3];
        let mut taken = [false; 3];
        for (j, &nd) in onc.iter().enumerate() {
            if let Some(z) = path_end(g, st, nd, &low) {
                f[z] = j;
                taken[j] = true;
            }
        }
        for fz in f.iter_mut().filter(|fz| **fz == usize::MAX) {
            let j = (0..3).find(|&j| !taken[j]).expect("three indices for three vertices");
            *fz = j;
            taken[j] = true;
        }
        for z in 0..3 {
            let nd = onc[(f[z] + 1) % 3];
            st.assign_color(g, low[z], es[z], g.edge_color_at(nd), Hint::Once(nd))?;
        }
        return Ok(());
    }
    let a = *st.miss_colors(v, 1).first().ok_or_else(|| contract(format!("Miss({v}) empty at a full pivot")))?;
    let nb = *onc.first().ok_or_else(|| contract(format!("Once({v}) empty at a full pivot")))?;
    // low vertices joined by an a-colored path form at most one pair
    let mut paired = [false; 3];
    for (i, &z) in low.iter().enumerate() {
        for nd in g.incidences(z) {
            if g.edge_color_at(nd) == a {
                if let Some(j) = st.far_terminal(nd).and_then(|far| low.iter().position(|&y| y == g.node_owner(far))) {
                    if j != i {
                        paired[i] = true;
                        paired[j] = true;
                    }
                }
            }
        }
    }
    let z0 = (0..3).find(|&i| !paired[i]).ok_or_else(|| contract("all three low vertices paired in color a"))?;
    let others: Vec<usize> = (0..3).filter(|&i| i != z0).collect();
    let b_end = path_end(g, st, nb, &low);
    let (wi, xi) = if b_end == Some(others[0]) { (others[1], others[0]) } else { (others[0], others[1]) };
    st.assign_color(g, low[z0], es[z0], a, Hint::Missing)?;
    let again = g.node_at(es[z0], v);
    st.assign_color(g, low[xi], es[xi], a, Hint::Once(again))?;
    st.assign_color(g, low[wi], es[wi], g.edge_color_at(nb), Hint::Once(nb))?;
    Ok(())
}
