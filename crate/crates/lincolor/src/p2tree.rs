//! 2-linear colorings of partial 2-trees with `Δ <= 4` that satisfy a
//! disjoint collection of pairs of degree-2 vertices: at most one vertex of
//! each pair may end up monochromatic.
//!
//! Every step removes one of five local configurations. Candidate anchors
//! sit on one lazily validated stack per configuration kind; after each
//! step every vertex within distance 2 of a changed vertex is pushed again.
//! Pairs are kept as a mate array and rewritten when a step is peeled.

use crate::coloring::{mono_vertices, ColorOutcome, LinearColoring, MonoReport, PairConstraints};
use crate::error::ColorError;
use crate::graph::{EdgeId, GraphError, MutableGraph, Vertex, NIL};
use crate::state::{ColoringState, Hint};

/// A reducible configuration, named by its vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Configuration {
    /// `u` has degree 1 and neighbour `v`.
    A { u: Vertex, v: Vertex },
    /// Adjacent vertices `u`, `v` of degree 2.
    B { u: Vertex, v: Vertex },
    /// Non-adjacent degree-2 vertices `u`, `v` with `N(u) = N(v) = {x, y}`.
    C { u: Vertex, v: Vertex, x: Vertex, y: Vertex },
    /// Triangle `uvw` with `d(u) = 2`, `d(v) = 3`, `d(w) >= 3`.
    D { u: Vertex, v: Vertex, w: Vertex },
    /// Triangles `aux` and `avy` sharing only `a`, with `d(a) = 4`,
    /// `d(u) = d(v) = 2` and `d(x) = d(y) = 4`.
    E { a: Vertex, u: Vertex, v: Vertex, x: Vertex, y: Vertex },
}

impl Configuration {
    pub fn kind(&self) -> char {
        match self {
            Configuration::A { .. } => 'a',
            Configuration::B { .. } => 'b',
            Configuration::C { .. } => 'c',
            Configuration::D { .. } => 'd',
            Configuration::E { .. } => 'e',
        }
    }

    fn rank(&self) -> usize {
        (self.kind() as u8 - b'a') as usize
    }
}

/// The best configuration anchored at `s`, if any.
fn config_at(g: &MutableGraph, s: Vertex) -> Option<Configuration> {
    let d = g.degree(s);
    if d == 1 {
        return Some(Configuration::A { u: s, v: g.neighbors(s).next()? });
    }
    if d == 2 {
        let mut it = g.neighbors(s);
        let (p, q) = (it.next()?, it.next()?);
        for z in [p, q] {
            if g.degree(z) == 2 {
                return Some(Configuration::B { u: s, v: z });
            }
        }
        for z in g.neighbors(p) {
            if z != s && g.degree(z) == 2 && g.find_edge(z, q).is_some() {
                return Some(Configuration::C { u: s, v: z, x: p, y: q });
            }
        }
        if g.find_edge(p, q).is_some() {
            let (dp, dq) = (g.degree(p), g.degree(q));
            if dp == 3 && dq >= 3 {
                return Some(Configuration::D { u: s, v: p, w: q });
            }
            if dq == 3 && dp >= 3 {
                return Some(Configuration::D { u: s, v: q, w: p });
            }
        }
        return None;
    }
    if d == 4 {
        // degree-2 neighbours whose other neighbour is a degree-4 neighbour of s
        let mut tri: Vec<(Vertex, Vertex)> = Vec::new();
        for u in g.neighbors(s) {
            if g.degree(u) != 2 {
                continue;
            }
            let Some(x) = g.neighbors(u).find(|&z| z != s) else { continue };
            if g.degree(x) == 4 && g.find_edge(s, x).is_some() {
                tri.push((u, x));
            }
        }
        for i in 0..tri.len() {
            for j in i + 1..tri.len() {
                let ((u, x), (v, y)) = (tri[i], tri[j]);
                if x != y {
                    return Some(Configuration::E { a: s, u, v, x, y });
                }
            }
        }
    }
    None
}

/// Some configuration of `g`, preferring kinds earlier in the alphabet.
pub fn find_configuration(g: &MutableGraph) -> Option<Configuration> {
    (0..g.n() as Vertex).filter_map(|s| config_at(g, s)).min_by_key(|c| c.rank())
}

#[derive(Clone, Copy, Debug)]
enum Frame {
    A { u: Vertex, v: Vertex, e: EdgeId },
    B { u: Vertex, v: Vertex, e: EdgeId, up: Vertex },
    C { u: Vertex, v: Vertex, x: Vertex, y: Vertex, es: [EdgeId; 4], up: Vertex },
    D { u: Vertex, v: Vertex, w: Vertex, uv: EdgeId, uw: EdgeId },
    E { a: Vertex, u: Vertex, v: Vertex, x: Vertex, y: Vertex, es: [EdgeId; 6] },
}

fn contract(msg: impl Into<String>) -> ColorError {
    ColorError::Graph(GraphError::Contract(msg.into()))
}

fn flip(c: u16) -> u16 {
    3 - c
}

pub fn color_partial2tree(
    g: &MutableGraph,
    pairs: &PairConstraints,
    audit: bool,
) -> Result<(ColorOutcome, MonoReport), ColorError> {
    let maxd = g.max_degree();
    if maxd > 4 {
        return Err(ColorError::DegreeTooLarge { max_degree: maxd, k: 2, limit: 4 });
    }
    pairs.validate(g)?;
    let mut r = Run { g: g.rebuilt(2), st: ColoringState::new(&MutableGraph::new(0), 2)?, mate: pairs.mates(g.n()), frames: Vec::new(), stacks: Default::default(), audit };
    for s in (0..g.n() as Vertex).rev() {
        r.push(s);
    }
    r.peel()?;
    r.st = ColoringState::new(&r.g, 2)?;
    r.st.set_audit(audit);
    while let Some(f) = r.frames.pop() {
        if audit {
            r.color_frame(f).map_err(|e| contract(format!("{f:?}: {e}")))?;
        } else {
            r.color_frame(f)?;
        }
    }
    let coloring = LinearColoring::from_graph(&r.g, 2);
    let mono = mono_vertices(g, &coloring);
    let bad = pairs.violated(&mono, g.n());
    if let Some(&(a, b)) = bad.first() {
        return Err(contract(format!("pair {} {} has both vertices monochromatic", a + 1, b + 1)));
    }
    Ok((ColorOutcome { coloring, ops: r.g.ops() + r.st.ops() }, mono))
}

/// Colors of `ax, ay, ux, vy, ua, va` given the mono colors of `x` and `y`
/// in the reduced graph. `u` is left non-monochromatic unless only `y` is
/// mono, and `v` unless only `x` is.
fn bowtie_colors(mx: Option<u16>, my: Option<u16>) -> [u16; 6] {
    match (mx, my) {
        (Some(cx), Some(cy)) => [flip(cx), flip(cy), flip(cx), flip(cy), cx, cy],
        (None, None) => [1, 2, 2, 1, 1, 2],
        (None, Some(cy)) => [flip(cy), flip(cy), cy, flip(cy), cy, cy],
        (Some(cx), None) => [flip(cx), flip(cx), flip(cx), cx, cx, cx],
    }
}

struct Run {
    g: MutableGraph,
    st: ColoringState,
    mate: Vec<Vertex>,
    frames: Vec<Frame>,
    stacks: [Vec<Vertex>; 5],
    audit: bool,
}

impl Run {
    fn push(&mut self, s: Vertex) {
        if let Some(c) = config_at(&self.g, s) {
            self.stacks[c.rank()].push(s);
        }
    }

    /// Push every vertex within distance 2 of the changed vertices.
    fn touch(&mut self, vs: &[Vertex]) {
        let mut near: Vec<Vertex> = Vec::with_capacity(24 * vs.len());
        for &y in vs {
            near.push(y);
            for z in self.g.neighbors(y) {
                near.push(z);
                near.extend(self.g.neighbors(z));
            }
        }
        for s in near {
            self.push(s);
        }
    }

    fn next_config(&mut self) -> Option<Configuration> {
        for k in 0..self.stacks.len() {
            while let Some(s) = self.stacks[k].pop() {
                match config_at(&self.g, s) {
                    Some(c) if c.rank() == k => return Some(c),
                    Some(c) if c.rank() > k => self.stacks[c.rank()].push(s),
                    _ => {}
                }
            }
        }
        None
    }

    fn edge(&self, a: Vertex, b: Vertex) -> Result<EdgeId, ColorError> {
        self.g.find_edge(a, b).ok_or_else(|| contract(format!("no edge {a}-{b}")))
    }

    fn unpair(&mut self, v: Vertex) {
        let m = self.mate[v as usize];
        if m != NIL {
            self.mate[m as usize] = NIL;
            self.mate[v as usize] = NIL;
        }
    }

    fn pair(&mut self, a: Vertex, b: Vertex) {
        self.mate[a as usize] = b;
        self.mate[b as usize] = a;
    }

    /// Shared pair rewriting of the two degree-2 removals: the mates of `u`
    /// and `v` become a pair. Returns `u'` unless it is absent or `v`.
    fn merge_mates(&mut self, u: Vertex, v: Vertex) -> Vertex {
        let (up, vp) = (self.mate[u as usize], self.mate[v as usize]);
        self.unpair(u);
        self.unpair(v);
        if up == v {
            return NIL;
        }
        if up != NIL && vp != NIL {
            self.pair(up, vp);
        }
        up
    }

    fn check_pairs(&self) -> Result<(), ColorError> {
        for (v, &m) in self.mate.iter().enumerate() {
            if m != NIL && (self.mate[m as usize] != v as Vertex || self.g.degree(v as Vertex) != 2) {
                return Err(contract(format!("pair invariant broken at vertex {v}")));
            }
        }
        Ok(())
    }

    fn peel(&mut self) -> Result<(), ColorError> {
        while let Some(c) = self.next_config() {
            match c {
                Configuration::A { u, v } => {
                    let e = self.edge(u, v)?;
                    self.g.remove_edge(e)?;
                    self.unpair(v);
                    self.frames.push(Frame::A { u, v, e });
                    self.touch(&[u, v]);
                }
                Configuration::B { u, v } => {
                    let e = self.edge(u, v)?;
                    self.g.remove_edge(e)?;
                    let up = self.merge_mates(u, v);
                    self.frames.push(Frame::B { u, v, e, up });
                    self.touch(&[u, v]);
                }
                Configuration::C { u, v, x, y } => {
                    let es = [self.edge(u, x)?, self.edge(u, y)?, self.edge(v, x)?, self.edge(v, y)?];
                    for e in es {
                        self.g.remove_edge(e)?;
                    }
                    let up = self.merge_mates(u, v);
                    if self.g.degree(x) == 2 && self.g.degree(y) == 2 {
                        self.pair(x, y);
                    }
                    self.frames.push(Frame::C { u, v, x, y, es, up });
                    self.touch(&[u, v, x, y]);
                }
                Configuration::D { u, v, w } => {
                    let (uv, uw) = (self.edge(u, v)?, self.edge(u, w)?);
                    self.g.remove_edge(uv)?;
                    self.g.remove_edge(uw)?;
                    let up = self.mate[u as usize];
                    self.unpair(u);
                    if up != NIL {
                        self.pair(v, up);
                    }
                    self.frames.push(Frame::D { u, v, w, uv, uw });
                    self.touch(&[u, v, w]);
                }
                Configuration::E { a, u, v, x, y } => {
                    let es = [
                        self.edge(u, a)?,
                        self.edge(u, x)?,
                        self.edge(v, a)?,
                        self.edge(v, y)?,
                        self.edge(a, x)?,
                        self.edge(a, y)?,
                    ];
                    for e in es {
                        self.g.remove_edge(e)?;
                    }
                    let up = self.mate[u as usize];
                    if up != NIL && up != v {
                        self.unpair(u);
                        self.pair(y, up);
                    }
                    let vp = self.mate[v as usize];
                    if vp != NIL && vp != u {
                        self.unpair(v);
                        self.pair(x, vp);
                    }
                    self.unpair(u);
                    self.frames.push(Frame::E { a, u, v, x, y, es });
                    self.touch(&[a, u, v, x, y]);
                }
            }
            if self.audit {
                self.g.check_invariants().map_err(contract)?;
                self.check_pairs()?;
            }
        }
        if self.g.alive_edges() > 0 {
            return Err(ColorError::NotPartial2Tree);
        }
        Ok(())
    }

    // ----- coloring ---------------------------------------------------------

    fn colors_at(&self, v: Vertex) -> Vec<u16> {
        self.g.incidences(v).map(|nd| self.g.edge_color_at(nd)).filter(|&c| c != 0).collect()
    }

    fn mono_now(&self, v: Vertex) -> Option<u16> {
        let cs = self.colors_at(v);
        (self.g.degree(v) == 2 && cs.len() == 2 && cs[0] == cs[1]).then(|| cs[0])
    }

    fn put(&mut self, low: Vertex, e: EdgeId, c: u16) -> Result<(), ColorError> {
        self.st.assign_color(&mut self.g, low, e, c, Hint::Scan)?;
        Ok(())
    }

    fn free_at(&self, v: Vertex) -> u16 {
        if self.colors_at(v).iter().filter(|&&c| c == 1).count() < 2 {
            1
        } else {
            2
        }
    }

    /// Keep `v` non-monochromatic unless `u'` is present and monochromatic.
    fn spare_v(&self, up: Vertex) -> bool {
        up == NIL || self.mono_now(up).is_none()
    }

    fn color_frame(&mut self, f: Frame) -> Result<(), ColorError> {
        match f {
            Frame::A { u, v, e } => {
                self.g.restore_edge(e)?;
                let c = if self.g.degree(v) == 2 {
                    flip(*self.colors_at(v).first().ok_or_else(|| contract("degree-2 vertex without color"))?)
                } else {
                    self.free_at(v)
                };
                self.put(u, e, c)
            }
            Frame::B { u, v, e, up } => {
                self.g.restore_edge(e)?;
                let cu = self.colors_at(u)[0];
                let cv = self.colors_at(v)[0];
                let c = if self.spare_v(up) { flip(cv) } else { flip(cu) };
                self.put(u, e, c)
            }
            Frame::C { u, v, x, y, es, up } => {
                for &e in es.iter().rev() {
                    self.g.restore_edge(e)?;
                }
                let keep = if self.spare_v(up) { v } else { u };
                self.color_square(u, v, x, y, es, keep)
            }
            Frame::D { u, v, w, uv, uw } => {
                self.g.restore_edge(uw)?;
                self.g.restore_edge(uv)?;
                let p = self.free_at(w);
                self.put(u, uw, p)?;
                let q = match self.mono_now_without(v, uv) {
                    Some(c) => flip(c),
                    None => flip(p),
                };
                self.put(u, uv, q)
            }
            Frame::E { a, u, v, x, y, es } => {
                let [ua, ux, va, vy, ax, ay] = es;
                let cols = bowtie_colors(self.mono_now(x), self.mono_now(y));
                self.g.restore_edge(ay)?;
                self.g.restore_edge(ax)?;
                self.put(a, ax, cols[0])?;
                self.put(a, ay, cols[1])?;
                self.g.restore_edge(vy)?;
                self.g.restore_edge(va)?;
                self.put(v, vy, cols[3])?;
                self.put(v, va, cols[5])?;
                self.g.restore_edge(ux)?;
                self.g.restore_edge(ua)?;
                self.put(u, ux, cols[2])?;
                self.put(u, ua, cols[4])
            }
        }
    }

    /// Mono color of `v` over its colored edges other than `skip`, when
    /// exactly two remain.
    fn mono_now_without(&self, v: Vertex, skip: EdgeId) -> Option<u16> {
        let cs: Vec<u16> = self
            .g
            .incidences(v)
            .filter(|&nd| MutableGraph::node_edge(nd) != skip)
            .map(|nd| self.g.edge_color_at(nd))
            .filter(|&c| c != 0)
            .collect();
        (cs.len() == 2 && cs[0] == cs[1]).then(|| cs[0])
    }

    /// Color `ux, uy, vx, vy` so that `keep` is not monochromatic.
    fn color_square(
        &mut self,
        u: Vertex,
        v: Vertex,
        x: Vertex,
        y: Vertex,
        es: [EdgeId; 4],
        keep: Vertex,
    ) -> Result<(), ColorError> {
        let cx = self.colors_at(x);
        let cy = self.colors_at(y);
        let cnt = |cs: &[u16], c: u16| cs.iter().filter(|&&d| d == c).count();
        let linked = |c: u16| {
            self.g.incidences(x).any(|nd| {
                self.g.edge_color_at(nd) == c
                    && self.st.far_terminal(nd).is_some_and(|far| self.g.node_owner(far) == y)
            })
        };
        for mask in 0..16u16 {
            let col = [1 + (mask & 1), 1 + ((mask >> 1) & 1), 1 + ((mask >> 2) & 1), 1 + ((mask >> 3) & 1)];
            let [ux, uy, vx, vy] = col;
            let (ku, kv) = (ux != uy, vx != vy);
            if (keep == u && !ku) || (keep == v && !kv) {
                continue;
            }
            let fits = (1..=2).all(|c| {
                let at_x = cnt(&cx, c) + usize::from(ux == c) + usize::from(vx == c);
                let at_y = cnt(&cy, c) + usize::from(uy == c) + usize::from(vy == c);
                // a c-path x..y closes with any new x-*-y path of color c
                let through = usize::from(ux == c && uy == c) + usize::from(vx == c && vy == c);
                at_x <= 2 && at_y <= 2 && through + usize::from(linked(c)) <= 1
            });
            if fits {
                for (i, &(low, e)) in [(u, es[0]), (u, es[1]), (v, es[2]), (v, es[3])].iter().enumerate() {
                    self.put(low, e, col[i])?;
                }
                return Ok(());
            }
        }
        Err(contract(format!("no coloring of the square {u} {x} {v} {y} keeps {keep} clean")))
    }
}
