//! 2-linear colorings of 2-degenerate graphs with `Δ <= 4`: few
//! monochromatic vertices for dense graphs, none for bipartite ones.
//!
//! Reductions are found through lazily validated stacks, one per kind of
//! reducible vertex. A stack entry is re-classified when popped, and every
//! vertex whose neighbourhood changed is pushed again.

use crate::coloring::{mono_vertices, ColorOutcome, LinearColoring, MonoReport};
use crate::error::ColorError;
use crate::graph::{EdgeId, GraphError, MutableGraph, Vertex};
use crate::state::{ColoringState, Hint};
use crate::verify::{exact_two_coloring, SearchOutcome};
use rand::seq::SliceRandom;

/// Seeded restarts of the dense algorithm before the exact fallback.
pub const DENSE_RESTARTS: u32 = 64;
/// Node budget of the exact fallback search.
pub const EXACT_BUDGET: u64 = 5_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Mode {
    Dense,
    Bipartite,
}

#[derive(Clone, Debug)]
enum Frame {
    Leaf { u: Vertex, v: Vertex, e: EdgeId },
    Deg3 { u: Vertex, v: Vertex, x: Vertex, uv: EdgeId, ux: EdgeId },
    Deg3Edge { u: Vertex, uv: EdgeId },
    C4 { u: Vertex, w: Vertex, v: Vertex, x: Vertex, es: [EdgeId; 4] },
    Ident { v: Vertex, u: Vertex, w: Vertex, uv: EdgeId, vw: EdgeId, ux: EdgeId, moved: EdgeId, old: bool },
    Hat { v: Vertex, u: Vertex, w: Vertex, vu: EdgeId, vw: EdgeId, uw: EdgeId },
    Cycle { verts: Vec<Vertex>, edges: Vec<EdgeId> },
}

const LEAF: usize = 0;
const P3_GOOD: usize = 1;
const P3: usize = 2;
const P4: usize = 3;
const HAT: usize = 4;

fn contract(msg: impl Into<String>) -> ColorError {
    ColorError::Graph(GraphError::Contract(msg.into()))
}

fn flip(c: u16) -> u16 {
    3 - c
}

/// Result of the dense algorithm with the search effort it took.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenseOutcome {
    pub outcome: ColorOutcome,
    pub mono: MonoReport,
    /// Reduction runs tried, including the successful one.
    pub attempts: u32,
    /// True if the coloring came from the exact fallback search.
    pub exact: bool,
}

fn precheck(g: &MutableGraph) -> Result<(), ColorError> {
    let maxd = g.max_degree();
    if maxd > 4 {
        return Err(ColorError::DegreeTooLarge { max_degree: maxd, k: 2, limit: 4 });
    }
    let (dg, _) = g.degeneracy_order();
    if dg > 2 {
        return Err(ColorError::NotDegenerate { found: dg, limit: 2 });
    }
    Ok(())
}

/// At most one monochromatic vertex; needs `|E| >= 2|V| - 5` counted over
/// non-isolated vertices. Graphs with `Δ <= 2` are exempt from the bound.
pub fn color_2deg_dense(g: &MutableGraph, audit: bool) -> Result<DenseOutcome, ColorError> {
    precheck(g)?;
    let m = g.edge_list().len();
    let bound = 2 * g.nonisolated() as i64 - 5;
    if (m as i64) < bound && g.max_degree() > 2 {
        return Err(ColorError::TooSparse { m, bound });
    }
    let mut ops = 0;
    for attempt in 0..DENSE_RESTARTS {
        if let Ok((coloring, mono, used)) = run(g, Mode::Dense, attempt, audit) {
            ops += used;
            if mono.count() <= 1 {
                return Ok(DenseOutcome {
                    outcome: ColorOutcome { coloring, ops },
                    mono,
                    attempts: attempt + 1,
                    exact: false,
                });
            }
        }
    }
    match exact_two_coloring(g, 1, None, EXACT_BUDGET) {
        SearchOutcome::Found(coloring) => {
            let mono = mono_vertices(g, &coloring);
            Ok(DenseOutcome { outcome: ColorOutcome { coloring, ops }, mono, attempts: DENSE_RESTARTS, exact: true })
        }
        SearchOutcome::Infeasible => Err(ColorError::NoSolution),
        SearchOutcome::BudgetExhausted => Err(ColorError::SearchExhausted),
    }
}

/// No monochromatic vertex; needs a bipartite input.
pub fn color_bipartite_2deg(g: &MutableGraph, audit: bool) -> Result<(ColorOutcome, MonoReport), ColorError> {
    precheck(g)?;
    if !crate::verify::is_bipartite(g.n(), &g.edge_list()) {
        return Err(ColorError::NotBipartite);
    }
    let (coloring, mono, ops) = run(g, Mode::Bipartite, 0, audit)?;
    if mono.count() > 0 {
        return Err(contract(format!("{} monochromatic vertices in a bipartite coloring", mono.count())));
    }
    Ok((ColorOutcome { coloring, ops }, mono))
}

/// The color class with `|V| - 1` edges of a 2-linear coloring of a maximal
/// 2-degenerate graph, as a vertex sequence.
pub fn hamiltonian_path_from(g: &MutableGraph, c: &LinearColoring) -> Result<Vec<Vertex>, ColorError> {
    let n = g.n_input();
    let edges = g.edge_list();
    if n < 2 || edges.len() + 3 != 2 * n {
        return Err(contract(format!("{} edges on {n} vertices is not maximal 2-degenerate", edges.len())));
    }
    if c.colors.len() != edges.len() {
        return Err(contract("coloring does not cover the graph"));
    }
    for class in 1..=2u16 {
        let mine: Vec<(Vertex, Vertex)> =
            edges.iter().zip(&c.colors).filter(|&(_, &col)| col == class).map(|(&e, _)| e).collect();
        if mine.len() + 1 != n {
            continue;
        }
        let mut adj: Vec<Vec<Vertex>> = vec![Vec::new(); n];
        for &(a, b) in &mine {
            adj[a as usize].push(b);
            adj[b as usize].push(a);
        }
        if adj.iter().any(|a| a.len() > 2) {
            return Err(contract(format!("color {class} is not a linear forest")));
        }
        let start = (0..n).find(|&v| adj[v].len() == 1).ok_or_else(|| contract("class has no endpoint"))?;
        let mut path = vec![start as Vertex];
        let mut prev = usize::MAX;
        let mut cur = start;
        while let Some(&nx) = adj[cur].iter().find(|&&y| y as usize != prev) {
            prev = cur;
            cur = nx as usize;
            path.push(nx);
            if path.len() > n {
                return Err(contract(format!("color {class} contains a cycle")));
            }
        }
        if path.len() != n {
            return Err(contract(format!("color {class} is not connected")));
        }
        return Ok(path);
    }
    Err(contract("no color class has |V| - 1 edges"))
}

fn run(g: &MutableGraph, mode: Mode, seed: u32, audit: bool) -> Result<(LinearColoring, MonoReport, u64), ColorError> {
    let mut r = Run {
        g: g.rebuilt(2),
        st: ColoringState::new(&MutableGraph::new(0), 2)?,
        mode,
        want: vec![0; g.n()],
        frames: Vec::new(),
        stacks: Default::default(),
        audit,
    };
    let mut order: Vec<Vertex> = (0..g.n() as Vertex).collect();
    if seed > 0 {
        order.shuffle(&mut crate::gen::rng(seed as u64));
    }
    for v in order.into_iter().rev() {
        r.push(v);
    }
    r.peel()?;
    r.st = ColoringState::new(&r.g, 2)?;
    r.st.set_audit(audit);
    while let Some(f) = r.frames.pop() {
        if audit {
            let fd = format!("{f:?}");
            r.color_frame(f).map_err(|e| contract(format!("{fd}: {e}")))?;
        } else {
            r.color_frame(f)?;
        }
    }
    let coloring = LinearColoring::from_graph(&r.g, 2);
    let mono = mono_vertices(g, &coloring);
    Ok((coloring, mono, r.g.ops() + r.st.ops()))
}

struct Run {
    g: MutableGraph,
    st: ColoringState,
    mode: Mode,
    want: Vec<u32>,
    frames: Vec<Frame>,
    stacks: [Vec<Vertex>; 5],
    audit: bool,
}

impl Run {
    fn lows(&self, v: Vertex) -> Vec<Vertex> {
        self.g.neighbors(v).filter(|&y| self.g.degree(y) == 2).collect()
    }

    fn adjacent(&self, a: Vertex, b: Vertex) -> bool {
        self.g.find_edge(a, b).is_some()
    }

    fn classify(&self, v: Vertex) -> Option<usize> {
        let d = self.g.degree(v);
        if d == 1 {
            return Some(LEAF);
        }
        if d < 3 {
            return None;
        }
        let high = self.g.neighbors(v).filter(|&y| self.g.degree(y) > 2).count();
        if high > 2 {
            return None;
        }
        let lows = self.lows(v);
        if d == 3 {
            let good = self.mode == Mode::Bipartite || lows.iter().any(|&u| self.want[u as usize] == 0);
            return Some(if good { P3_GOOD } else { P3 });
        }
        let spread = (0..lows.len()).any(|i| (i + 1..lows.len()).any(|j| !self.adjacent(lows[i], lows[j])));
        Some(if spread { P4 } else { HAT })
    }

    fn push(&mut self, v: Vertex) {
        if let Some(k) = self.classify(v) {
            self.stacks[k].push(v);
        }
    }

    fn touch(&mut self, vs: &[Vertex]) {
        for &y in vs {
            self.push(y);
            let nb: Vec<Vertex> = self.g.neighbors(y).collect();
            for z in nb {
                self.push(z);
            }
        }
    }

    fn next_reducible(&mut self) -> Option<(usize, Vertex)> {
        for k in 0..self.stacks.len() {
            while let Some(v) = self.stacks[k].pop() {
                match self.classify(v) {
                    Some(c) if c == k => return Some((k, v)),
                    Some(c) if c > k => self.stacks[c].push(v),
                    _ => {}
                }
            }
        }
        None
    }

    fn other_neighbor(&self, u: Vertex, not: Vertex) -> Result<(Vertex, EdgeId), ColorError> {
        self.g
            .incidences(u)
            .map(|nd| (self.g.node_other(nd), MutableGraph::node_edge(nd)))
            .find(|&(y, _)| y != not)
            .ok_or_else(|| contract(format!("vertex {u} has no second neighbour")))
    }

    fn edge(&self, a: Vertex, b: Vertex) -> Result<EdgeId, ColorError> {
        self.g.find_edge(a, b).ok_or_else(|| contract(format!("no edge {a}-{b}")))
    }

    fn audit_step(&self) -> Result<(), ColorError> {
        if self.audit {
            self.g.check_invariants().map_err(contract)?;
            if self.mode == Mode::Dense && self.g.max_degree() > 2 {
                let f = 2 * self.g.nonisolated() as i64 - self.g.alive_edges() as i64;
                if f > 5 {
                    return Err(contract(format!("intermediate graph has 2|V| - |E| = {f}")));
                }
            }
        }
        Ok(())
    }

    fn peel(&mut self) -> Result<(), ColorError> {
        while let Some((kind, v)) = self.next_reducible() {
            match kind {
                LEAF => {
                    let (x, e) = self.other_neighbor(v, crate::graph::NIL)?;
                    self.g.remove_edge(e)?;
                    self.frames.push(Frame::Leaf { u: v, v: x, e });
                    self.touch(&[v, x]);
                }
                P3_GOOD | P3 => {
                    let lows = self.lows(v);
                    let u = *lows
                        .iter()
                        .find(|&&u| self.want[u as usize] == 0)
                        .or(lows.first())
                        .ok_or_else(|| contract(format!("degree-3 pivot {v} has no degree-2 neighbour")))?;
                    let uv = self.edge(u, v)?;
                    let (x, ux) = self.other_neighbor(u, v)?;
                    self.g.remove_edge(uv)?;
                    if self.mode == Mode::Dense {
                        self.g.remove_edge(ux)?;
                        self.frames.push(Frame::Deg3 { u, v, x, uv, ux });
                        self.touch(&[u, v, x]);
                    } else {
                        self.frames.push(Frame::Deg3Edge { u, uv });
                        self.touch(&[u, v]);
                    }
                }
                P4 => self.peel_p4(v)?,
                _ => {
                    if self.mode == Mode::Bipartite {
                        return Err(ColorError::NotBipartite);
                    }
                    let lows = self.lows(v);
                    let (u, w) = (lows[0], lows[1]);
                    let (vu, vw, uw) = (self.edge(v, u)?, self.edge(v, w)?, self.edge(u, w)?);
                    for e in [vu, vw, uw] {
                        self.g.remove_edge(e)?;
                    }
                    self.want[v as usize] += 1;
                    self.frames.push(Frame::Hat { v, u, w, vu, vw, uw });
                    self.touch(&[u, w, v]);
                }
            }
            self.audit_step()?;
        }
        self.peel_cycles()
    }

    fn peel_p4(&mut self, v: Vertex) -> Result<(), ColorError> {
        let lows = self.lows(v);
        let (u, w) = (0..lows.len())
            .flat_map(|i| (i + 1..lows.len()).map(move |j| (i, j)))
            .map(|(i, j)| (lows[i], lows[j]))
            .find(|&(a, b)| !self.adjacent(a, b))
            .ok_or_else(|| contract(format!("pivot {v} has no two non-adjacent low neighbours")))?;
        let (xu, ux) = self.other_neighbor(u, v)?;
        let (xw, wx) = self.other_neighbor(w, v)?;
        let (uv, wv) = (self.edge(u, v)?, self.edge(w, v)?);
        if xu == xw {
            let es = [uv, ux, wv, wx];
            for e in es {
                self.g.remove_edge(e)?;
            }
            self.frames.push(Frame::C4 { u, w, v, x: xu, es });
            self.touch(&[u, w, v, xu]);
        } else {
            self.g.remove_edge(uv)?;
            self.g.remove_edge(wv)?;
            self.g.identify(u, w)?;
            let nd = self.g.node_at(wx, u);
            let old = self.g.set_special(nd, true);
            self.frames.push(Frame::Ident { v, u, w, uv, vw: wv, ux, moved: wx, old });
            self.touch(&[u, w, v, xu, xw]);
        }
        Ok(())
    }

    /// Whatever is left must be vertex-disjoint cycles.
    fn peel_cycles(&mut self) -> Result<(), ColorError> {
        for s in 0..self.g.n() as Vertex {
            let d = self.g.degree(s);
            if d == 0 {
                continue;
            }
            if d != 2 {
                return Err(contract(format!("no reduction applies and vertex {s} has degree {d}")));
            }
            let mut verts = vec![s];
            let mut edges = Vec::new();
            let mut prev = crate::graph::NIL;
            let mut cur = s;
            loop {
                let (nx, e) = self.other_neighbor(cur, prev)?;
                edges.push(e);
                if nx == s {
                    break;
                }
                verts.push(nx);
                prev = cur;
                cur = nx;
            }
            if verts.len() % 2 == 1 {
                if self.mode == Mode::Bipartite {
                    return Err(ColorError::NotBipartite);
                }
                if let Some(r) = verts.iter().position(|&y| self.want[y as usize] > 0) {
                    // rotate so the wanted vertex comes last
                    let l = verts.len();
                    let k = (r + 1) % l;
                    verts.rotate_left(k);
                    edges.rotate_left(k);
                }
            }
            for &e in &edges {
                self.g.remove_edge(e)?;
            }
            self.frames.push(Frame::Cycle { verts, edges });
        }
        Ok(())
    }

    // ----- coloring ---------------------------------------------------------

    fn colors_at(&self, v: Vertex) -> Vec<u16> {
        self.g.incidences(v).map(|nd| self.g.edge_color_at(nd)).filter(|&c| c != 0).collect()
    }

    fn put(&mut self, low: Vertex, e: EdgeId, c: u16) -> Result<(), ColorError> {
        self.st.assign_color(&mut self.g, low, e, c, Hint::Scan)?;
        Ok(())
    }

    fn mono_now(&self, v: Vertex) -> Option<u16> {
        let cs = self.colors_at(v);
        (cs.len() == 2 && cs[0] == cs[1]).then(|| cs[0])
    }

    /// True if the `c`-colored segment leaving `a` ends at `b`.
    fn path(&self, a: Vertex, c: u16, b: Vertex) -> bool {
        self.g.incidences(a).any(|nd| {
            self.g.edge_color_at(nd) == c
                && self.st.far_terminal(nd).is_some_and(|far| self.g.node_owner(far) == b)
        })
    }

    /// Of two vertices, the wanted one first, ties broken by lower id.
    fn wanted_first(&self, a: Vertex, b: Vertex) -> (Vertex, Vertex) {
        let (wa, wb) = (self.want[a as usize] > 0, self.want[b as usize] > 0);
        if wa != wb {
            return if wa { (a, b) } else { (b, a) };
        }
        (a.min(b), a.max(b))
    }

    fn color_frame(&mut self, f: Frame) -> Result<(), ColorError> {
        let dense = self.mode == Mode::Dense;
        match f {
            Frame::Leaf { u, v, e } => {
                self.g.restore_edge(e)?;
                let cs = self.colors_at(v);
                let c = if dense && cs.len() == 1 && self.want[v as usize] > 0 {
                    cs[0]
                } else if cs.len() <= 1 {
                    if cs.first() == Some(&1) { 2 } else { 1 }
                } else if cs.iter().filter(|&&c| c == 1).count() < 2 {
                    1
                } else {
                    2
                };
                self.put(u, e, c)
            }
            Frame::Deg3 { u, v, x, uv, ux } => {
                self.g.restore_edge(ux)?;
                self.g.restore_edge(uv)?;
                let (cx, cv) = (self.colors_at(x), self.colors_at(v));
                let cnt = |cs: &[u16], p: u16| cs.iter().filter(|&&c| c == p).count();
                if self.want[u as usize] > 0 {
                    for p in 1..=2 {
                        let x_mono = self.g.degree(x) == 2 && cx == [p];
                        if cnt(&cx, p) < 2 && cnt(&cv, p) < 2 && !x_mono && !self.path(x, p, v) {
                            self.put(u, ux, p)?;
                            return self.put(u, uv, p);
                        }
                    }
                }
                let p = (1..=2)
                    .find(|&p| if cx.len() <= 1 { cnt(&cx, p) == 0 } else { cnt(&cx, p) < 2 })
                    .ok_or_else(|| contract(format!("no color for {u}-{x}")))?;
                self.put(u, ux, p)?;
                let q = match self.mono_now(v) {
                    Some(c) => flip(c),
                    None => flip(p),
                };
                self.put(u, uv, q)
            }
            Frame::Deg3Edge { u, uv } => {
                self.g.restore_edge(uv)?;
                let cu = self.colors_at(u);
                self.put(u, uv, if cu.first() == Some(&1) { 2 } else { 1 })
            }
            Frame::C4 { u, w, v, x, es } => {
                for &e in es.iter().rev() {
                    self.g.restore_edge(e)?;
                }
                let (mv, mx) = (self.mono_now(v), self.mono_now(x));
                let (vv, xx) = match (mv, mx) {
                    (Some(_), Some(_)) => return Err(contract(format!("both {v} and {x} monochromatic"))),
                    (Some(_), None) => (x, v),
                    (None, Some(_)) => (v, x),
                    (None, None) => (v.min(x), v.max(x)),
                };
                let (uu, ww) = if dense { self.wanted_first(u, w) } else { (u, w) };
                let (a, b, c, d) = match self.mono_now(xx) {
                    Some(c) => (flip(c), flip(c), flip(c), c),
                    None => (1, 2, 2, 1),
                };
                let (xu, xw, uv, vw) = (self.edge(xx, uu)?, self.edge(xx, ww)?, self.edge(uu, vv)?, self.edge(vv, ww)?);
                self.put(uu, xu, a)?;
                self.put(ww, xw, b)?;
                self.put(uu, uv, c)?;
                self.put(ww, vw, d)
            }
            Frame::Ident { v, u, w, uv, vw, ux, moved, old } => {
                self.st.split(&mut self.g, u, w, old)?;
                self.g.restore_edge(vw)?;
                self.g.restore_edge(uv)?;
                let (cu, cw) = (self.g.color(ux), self.g.color(moved));
                let (a, b) = if let Some(c) = self.mono_now(v) {
                    (flip(c), flip(c))
                } else if cu == cw {
                    if !dense {
                        return Err(contract(format!("identified vertex {u} was monochromatic")));
                    }
                    let nd = self.g.node_at(ux, u);
                    let to_v = self.st.far_terminal(nd).is_some_and(|far| self.g.node_owner(far) == v);
                    if to_v { (flip(cu), cu) } else { (cu, flip(cu)) }
                } else {
                    (cw, cu)
                };
                self.put(u, uv, a)?;
                self.put(w, vw, b)
            }
            Frame::Hat { v, u, w, vu, vw, uw } => {
                for e in [uw, vw, vu] {
                    self.g.restore_edge(e)?;
                }
                self.want[v as usize] -= 1;
                if let Some(c) = self.mono_now(v) {
                    self.put(u, uw, c)?;
                    self.put(u, vu, flip(c))?;
                    self.put(w, vw, flip(c))
                } else {
                    let (a, b) = self.wanted_first(u, w);
                    let (av, bv, ab) = (self.edge(a, v)?, self.edge(b, v)?, self.edge(a, b)?);
                    self.put(a, av, 1)?;
                    self.put(b, bv, 2)?;
                    self.put(a, ab, 1)
                }
            }
            Frame::Cycle { verts, edges } => {
                for &e in edges.iter().rev() {
                    self.g.restore_edge(e)?;
                }
                let l = verts.len();
                for (i, (&a, &e)) in verts.iter().zip(&edges).enumerate() {
                    let c = if l % 2 == 1 && i == l - 1 { 2 } else { 1 + (i % 2) as u16 };
                    self.put(a, e, c)?;
                }
                Ok(())
            }
        }
    }
}
