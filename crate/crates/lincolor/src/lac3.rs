//! Linear `k`-colorings of 3-degenerate graphs with `Δ <= 2k - 1`.
//!
//! The peel phase repeatedly takes a pivot edge and shrinks the graph by
//! deleting a few edges (and, in one case, identifying two vertices),
//! pushing a frame per step. The color phase pops frames in reverse,
//! undoes each reduction and colors the restored edges in O(1) using the
//! palettes and segments kept by [`ColoringState`].

use crate::coloring::{ColorOutcome, LinearColoring};
use crate::error::ColorError;
use crate::graph::{EdgeId, GraphError, MutableGraph, NodeId, Vertex};
use crate::state::{ColoringState, Hint};

#[derive(Clone, Copy, Debug)]
enum Frame {
    One { u: Vertex, v: Vertex, e: EdgeId },
    Adjacent { u: Vertex, v: Vertex, w: Vertex, x: Vertex, y: Vertex, ux: EdgeId, uv: EdgeId, uw: EdgeId, vw: EdgeId, wy: EdgeId, made: u8 },
    Common { u: Vertex, v: Vertex, w: Vertex, z: Vertex, x: Vertex, y: Vertex, uv: EdgeId, uz: EdgeId, ux: EdgeId, vw: EdgeId, wz: EdgeId, wy: EdgeId, made: u8 },
    Identify { u: Vertex, v: Vertex, w: Vertex, x: Vertex, uv: EdgeId, vw: EdgeId, wx: EdgeId, wy: EdgeId, old: bool, made: u8 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Pick {
    c: u16,
    hint: Hint,
}

fn contract(msg: impl Into<String>) -> ColorError {
    ColorError::Graph(GraphError::Contract(msg.into()))
}

/// `k = ⌈(Δ + 1) / 2⌉`, the smallest `k` with `Δ <= 2k - 1`.
pub fn default_k(max_degree: u32) -> u16 {
    (max_degree / 2 + 1) as u16
}

/// Color a 3-degenerate graph with `k` colors; requires `Δ <= 2k - 1`.
/// With `audit` set, every state mutation is followed by a full recheck.
pub fn color_3deg(g: &MutableGraph, k: u16, audit: bool) -> Result<ColorOutcome, ColorError> {
    let maxd = g.max_degree();
    if maxd == 0 {
        return Ok(ColorOutcome { coloring: LinearColoring { k, colors: Vec::new() }, ops: 0 });
    }
    if k == 0 {
        return Err(ColorError::BadK(k));
    }
    if maxd > 2 * k as u32 - 1 {
        return Err(ColorError::DegreeTooLarge { max_degree: maxd, k, limit: 2 * k as u32 - 1 });
    }
    let (dg, _) = g.degeneracy_order();
    if dg > 3 {
        return Err(ColorError::NotDegenerate { found: dg, limit: 3 });
    }
    if k == 1 {
        let m = g.edge_list().len();
        return Ok(ColorOutcome { coloring: LinearColoring { k, colors: vec![1; m] }, ops: m as u64 });
    }
    let mut run = Run::new(g.rebuilt(3), k, audit)?;
    run.peel()?;
    run.st = ColoringState::new(&run.g, k)?;
    run.st.set_audit(audit);
    run.color()?;
    let coloring = LinearColoring::from_graph(&run.g, k);
    Ok(ColorOutcome { coloring, ops: run.g.ops() + run.st.ops() })
}

struct Run {
    g: MutableGraph,
    st: ColoringState,
    k: u16,
    audit: bool,
    frames: Vec<Frame>,
}

impl Run {
    fn new(g: MutableGraph, k: u16, audit: bool) -> Result<Self, ColorError> {
        let st = ColoringState::new(&MutableGraph::new(0), k)?;
        Ok(Run { g, st, k, audit, frames: Vec::new() })
    }

    fn check_graph(&self) -> Result<(), ColorError> {
        if self.audit {
            self.g.check_invariants().map_err(contract)?;
        }
        Ok(())
    }

    /// The neighbour of `a` outside `skip`, or a fresh dummy (counted in
    /// `made`).
    fn third(&mut self, a: Vertex, skip: &[Vertex], made: &mut u8) -> (Vertex, EdgeId) {
        let found = self
            .g
            .incidences(a)
            .find(|&nd| !skip.contains(&self.g.node_other(nd)))
            .map(|nd| (self.g.node_other(nd), MutableGraph::node_edge(nd)));
        found.unwrap_or_else(|| {
            *made += 1;
            self.g.add_dummy(a)
        })
    }

    fn peel(&mut self) -> Result<(), ColorError> {
        let big = 2 * self.k as u32 - 1;
        while let Some((v, u, e)) = self.g.find_pivot_edge() {
            if self.g.degree(v) < big {
                self.g.remove_edge(e)?;
                self.frames.push(Frame::One { u, v, e });
                self.check_graph()?;
                continue;
            }
            let (w, vw) = self
                .g
                .incidences(v)
                .map(|nd| (self.g.node_other(nd), MutableGraph::node_edge(nd)))
                .find(|&(y, _)| y != u && self.g.degree(y) <= 3)
                .ok_or_else(|| contract(format!("pivot {v} has a single low neighbour")))?;
            let mut made = 0u8;
            let common = {
                let g = &self.g;
                g.neighbors(u).find(|&z| z != v && g.find_edge(z, w).is_some())
            };
            if let Some(uw) = self.g.find_edge(u, w) {
                let (x, ux) = self.third(u, &[v, w], &mut made);
                let (y, wy) = self.third(w, &[u, v], &mut made);
                for ed in [ux, e, uw, vw, wy] {
                    self.g.remove_edge(ed)?;
                }
                self.frames.push(Frame::Adjacent { u, v, w, x, y, ux, uv: e, uw, vw, wy, made });
            } else if let Some(z) = common {
                let uz = self.g.find_edge(u, z).expect("z is a neighbour of u");
                let wz = self.g.find_edge(w, z).expect("z is a neighbour of w");
                let (x, ux) = self.third(u, &[v, z], &mut made);
                let (y, wy) = self.third(w, &[v, z], &mut made);
                for ed in [e, uz, ux, vw, wz, wy] {
                    self.g.remove_edge(ed)?;
                }
                self.frames.push(Frame::Common { u, v, w, z, x, y, uv: e, uz, ux, vw, wz, wy, made });
            } else {
                let (x, wx) = self.third(w, &[v], &mut made);
                let (_, wy) = self.third(w, &[v, x], &mut made);
                for ed in [e, vw, wx] {
                    self.g.remove_edge(ed)?;
                }
                self.g.identify(u, w)?;
                let nd = self.g.node_at(wy, u);
                let old = self.g.set_special(nd, true);
                self.frames.push(Frame::Identify { u, v, w, x, uv: e, vw, wx, wy, old, made });
            }
            self.check_graph()?;
        }
        if self.g.alive_edges() > 0 {
            return Err(contract("peeling stopped with edges left"));
        }
        Ok(())
    }

    fn color(&mut self) -> Result<(), ColorError> {
        while let Some(f) = self.frames.pop() {
            if self.audit {
                self.st.check(&self.g).map_err(|e| contract(format!("before {f:?}: {e}")))?;
            }
            let r = self.color_frame(f);
            if self.audit {
                r.map_err(|e| contract(format!("{f:?}: {e}")))?;
            } else {
                r?;
            }
            self.check_graph()?;
        }
        Ok(())
    }

    fn color_frame(&mut self, f: Frame) -> Result<(), ColorError> {
        {
            match f {
                Frame::One { u, v, e } => {
                    self.g.restore_edge(e)?;
                    self.color_one(u, v, e)?;
                }
                Frame::Adjacent { u, v, w, x, y, ux, uv, uw, vw, wy, made } => {
                    for ed in [wy, vw, uw, uv, ux] {
                        self.g.restore_edge(ed)?;
                    }
                    self.color_adjacent(u, v, w, x, y, [ux, uv, uw, vw, wy])?;
                    self.drop_dummies(made)?;
                }
                Frame::Common { u, v, w, z, x, y, uv, uz, ux, vw, wz, wy, made } => {
                    for ed in [wy, wz, vw, ux, uz, uv] {
                        self.g.restore_edge(ed)?;
                    }
                    self.color_common(u, v, w, z, x, y, [uv, uz, ux, vw, wz, wy])?;
                    self.drop_dummies(made)?;
                }
                Frame::Identify { u, v, w, x, uv, vw, wx, wy, old, made } => {
                    self.st.split(&mut self.g, u, w, old)?;
                    for ed in [wx, vw, uv] {
                        self.g.restore_edge(ed)?;
                    }
                    self.color_identify(u, v, w, x, uv, vw, wx, wy)?;
                    self.drop_dummies(made)?;
                }
            }
        }
        Ok(())
    }

    // ----- helpers ----------------------------------------------------------

    /// Undo the dummies this frame added, in reverse order of creation.
    fn drop_dummies(&mut self, made: u8) -> Result<(), ColorError> {
        for _ in 0..made {
            self.st.remove_dummy(&mut self.g)?;
        }
        Ok(())
    }

    fn put(&mut self, low: Vertex, e: EdgeId, p: Pick) -> Result<(), ColorError> {
        self.st.assign_color(&mut self.g, low, e, p.c, p.hint)?;
        Ok(())
    }

    fn once(&self, v: Vertex, limit: usize) -> Vec<Pick> {
        self.st
            .onc_nodes(v, limit)
            .into_iter()
            .map(|nd| Pick { c: self.g.edge_color_at(nd), hint: Hint::Once(nd) })
            .collect()
    }

    fn miss(&self, v: Vertex, limit: usize) -> Vec<Pick> {
        self.st.miss_colors(v, limit).into_iter().map(|c| Pick { c, hint: Hint::Missing }).collect()
    }

    /// After `e` got color `c` at `v`, the pick that reuses it there.
    fn reuse(&self, e: EdgeId, v: Vertex) -> Pick {
        let nd = self.g.node_at(e, v);
        Pick { c: self.g.color(e), hint: Hint::Once(nd) }
    }

    /// True if `e = low-far` may take `p.c` without breaking the state's
    /// preconditions at the low end.
    fn admissible(&self, low: Vertex, p: Pick) -> bool {
        let mut at_low = None;
        let mut count = 0;
        for nd in self.g.incidences(low) {
            if self.g.edge_color_at(nd) == p.c {
                count += 1;
                at_low = Some(nd);
            }
        }
        if count >= 2 {
            return false;
        }
        match (at_low, p.hint) {
            (Some(a), Hint::Once(b)) => {
                !(self.st.far_terminal(a) == Some(b)
                    && !self.g.is_special(a)
                    && !self.g.is_special(b))
            }
            _ => true,
        }
    }

    /// A color for the edge from `low` to `far`: Miss(far) first, then
    /// Once(far) minus `avoid`.
    fn choose(&self, low: Vertex, far: Vertex, avoid: &[u16]) -> Result<Pick, ColorError> {
        let mut cands = self.miss(far, 3);
        cands.extend(self.once(far, avoid.len() + 3).into_iter().filter(|p| !avoid.contains(&p.c)));
        cands
            .into_iter()
            .find(|&p| self.admissible(low, p))
            .ok_or_else(|| contract(format!("no color for edge {low}-{far}")))
    }

    fn twice_at(&self, a: Vertex) -> Vec<u16> {
        crate::state::small_palette(&self.g, a).twice
    }

    fn colors_at(&self, a: Vertex) -> Vec<u16> {
        crate::state::small_palette(&self.g, a).colors
    }

    // ----- frame colorings --------------------------------------------------

    fn color_one(&mut self, u: Vertex, v: Vertex, e: EdgeId) -> Result<(), ColorError> {
        let pal = self.st.low_degree_palette(&self.g, u)?;
        let pick = if let Some(p) = self.once(v, 3).into_iter().find(|p| !pal.has(p.c)) {
            p
        } else {
            let ms = self.miss(v, 2);
            match ms.first() {
                Some(&p) if !pal.is_twice(p.c) => p,
                _ => match ms.get(1) {
                    Some(&p) => p,
                    None => *self
                        .once(v, 1)
                        .first()
                        .ok_or_else(|| contract(format!("vertex {v} has no free color")))?,
                },
            }
        };
        self.put(u, e, pick)
    }

    fn color_adjacent(
        &mut self,
        u: Vertex,
        v: Vertex,
        w: Vertex,
        x: Vertex,
        y: Vertex,
        [ux, uv, uw, vw, wy]: [EdgeId; 5],
    ) -> Result<(), ColorError> {
        let pi = self.choose(u, x, &[])?;
        self.put(u, ux, pi)?;
        let i = pi.c;
        let onc = self.once(v, 3);
        if onc.len() >= 3 {
            let mut rest: Vec<Pick> = onc.iter().copied().filter(|p| p.c != i).collect();
            let first_two: Vec<Pick> = rest.drain(..2).collect();
            let used = [first_two[0].c, first_two[1].c];
            let pj = *onc
                .iter()
                .find(|p| !used.contains(&p.c))
                .ok_or_else(|| contract("Once(v) has fewer than three colors"))?;
            self.put(u, uv, first_two[0])?;
            self.put(u, uw, Pick { c: first_two[1].c, hint: Hint::Scan })?;
            self.put(w, vw, pj)?;
            let pt = self.choose(w, y, &[pj.c])?;
            self.put(w, wy, pt)
        } else {
            let m = *self.miss(v, 1).first().ok_or_else(|| contract(format!("Miss({v}) empty")))?;
            let o = *onc.first().ok_or_else(|| contract(format!("Once({v}) empty")))?;
            self.put(u, uv, m)?;
            self.put(u, uw, Pick { c: o.c, hint: Hint::Scan })?;
            let again = self.reuse(uv, v);
            self.put(w, vw, again)?;
            let pt = self.choose(w, y, &[i])?;
            self.put(w, wy, pt)
        }
    }

    fn missing_type(&self, a: Vertex) -> bool {
        let m = self.st.miss_len(a);
        m >= 1 && (m >= 2 || self.st.onc_len(a) >= 1)
    }

    /// Second choice at a missing-type vertex: another Miss color, else a
    /// Once color.
    fn second(&self, a: Vertex) -> Result<Pick, ColorError> {
        let ms = self.miss(a, 2);
        if let Some(&p) = ms.get(1) {
            return Ok(p);
        }
        self.once(a, 1).first().copied().ok_or_else(|| contract(format!("vertex {a} has one free color")))
    }

    #[allow(clippy::too_many_arguments)]
    fn color_common(
        &mut self,
        u: Vertex,
        v: Vertex,
        w: Vertex,
        z: Vertex,
        x: Vertex,
        y: Vertex,
        [uv, uz, ux, vw, wz, wy]: [EdgeId; 6],
    ) -> Result<(), ColorError> {
        if x == y {
            return self.color_local(&[(u, v, uv), (u, z, uz), (u, x, ux), (w, v, vw), (w, z, wz), (w, x, wy)]);
        }
        let (mv, mz) = (self.missing_type(v), self.missing_type(z));
        if !mv && self.st.onc_len(v) < 3 || !mz && self.st.onc_len(z) < 3 {
            return Err(contract("common-neighbour step without enough free colors"));
        }
        if mv && mz {
            let pi = self.miss(v, 1)[0];
            let pj = self.second(v)?;
            let pp = self.miss(z, 1)[0];
            let pq = self.second(z)?;
            let (r, l);
            if pi.c != pp.c {
                self.put(u, uv, pi)?;
                let p = self.reuse(uv, v);
                self.put(w, vw, p)?;
                self.put(w, wz, pp)?;
                let p = self.reuse(wz, z);
                self.put(u, uz, p)?;
                r = pi.c;
                l = pp.c;
            } else {
                self.put(u, uv, pi)?;
                self.put(w, wz, pp)?;
                self.put(w, vw, pj)?;
                self.put(u, uz, pq)?;
                r = pj.c;
                l = pq.c;
            }
            let pt = self.choose(w, y, &[r])?;
            self.put(w, wy, pt)?;
            let ps = self.choose(u, x, &[l])?;
            self.put(u, ux, ps)
        } else if mv || mz {
            let (a, b, ua, wa, ub, wb) = if mv { (v, z, uv, vw, uz, wz) } else { (z, v, uz, wz, uv, vw) };
            let pi = self.miss(a, 1)[0];
            let pj = self.second(a)?;
            let trip = self.once(b, 3);
            self.put(u, ua, pi)?;
            self.put(w, wa, pj)?;
            let pt = self.choose(w, y, &[pj.c])?;
            self.put(w, wy, pt)?;
            let ps = self.choose(u, x, &[])?;
            self.put(u, ux, ps)?;
            let pl = *trip
                .iter()
                .find(|p| p.c != pt.c && p.c != pj.c)
                .ok_or_else(|| contract("no color left for w-b"))?;
            self.put(w, wb, pl)?;
            let pu = *trip
                .iter()
                .find(|p| p.c != ps.c && p.c != pl.c)
                .ok_or_else(|| contract("no color left for u-b"))?;
            self.put(u, ub, pu)
        } else {
            let ov = self.once(v, 3);
            let oz = self.once(z, 3);
            let (pi, pj, pl) = (ov[0], ov[1], ov[2]);
            self.put(w, vw, pj)?;
            let pt = self.choose(w, y, &[pj.c])?;
            self.put(w, wy, pt)?;
            let ph = if pi.c != pt.c { pi } else { pl };
            self.put(u, uv, ph)?;
            let ps = self.choose(u, x, &[ph.c])?;
            self.put(u, ux, ps)?;
            let pf = match oz.iter().find(|p| p.c == ph.c) {
                Some(&p) => p,
                None => *oz
                    .iter()
                    .find(|p| p.c != pt.c && p.c != pj.c)
                    .ok_or_else(|| contract("no color left for w-z"))?,
            };
            self.put(w, wz, pf)?;
            let pu = *oz
                .iter()
                .find(|p| p.c != pf.c && p.c != ps.c)
                .ok_or_else(|| contract("no color left for u-z"))?;
            self.put(u, uz, pu)
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn color_identify(
        &mut self,
        u: Vertex,
        v: Vertex,
        w: Vertex,
        x: Vertex,
        uv: EdgeId,
        vw: EdgeId,
        wx: EdgeId,
        wy: EdgeId,
    ) -> Result<(), ColorError> {
        let cy = self.g.color(wy);
        let px = self.choose(w, x, &[cy])?;
        self.put(w, wx, px)?;
        let tu = self.twice_at(u);
        let tw = self.twice_at(w);
        let onc = self.once(v, 3);
        let (cu, cw): (Pick, Pick);
        if onc.len() == 1 {
            let pi = *self.miss(v, 1).first().ok_or_else(|| contract(format!("Miss({v}) empty")))?;
            let pj = onc[0];
            if tu.contains(&pi.c) {
                self.put(u, uv, pj)?;
                self.put(w, vw, pi)?;
                return Ok(());
            }
            if tw.contains(&pi.c) {
                self.put(u, uv, pi)?;
                self.put(w, vw, pj)?;
                return Ok(());
            }
            if tu.contains(&pj.c) || tw.contains(&pj.c) {
                self.put(u, uv, pi)?;
                let p = self.reuse(uv, v);
                self.put(w, vw, p)?;
                return Ok(());
            }
            let Hint::Once(nj) = pj.hint else { unreachable!() };
            (cu, cw) = if self.path_to(u, nj) { (pi, pj) } else { (pj, pi) };
        } else {
            let l: Vec<Pick> = onc.iter().copied().filter(|p| self.path_to(u, node(p))).collect();
            if l.len() == 2 {
                let pv = *l
                    .iter()
                    .find(|p| !tw.contains(&p.c))
                    .ok_or_else(|| contract("both path colors twice at w"))?;
                let pu = *onc
                    .iter()
                    .find(|p| !l.iter().any(|q| q.c == p.c))
                    .ok_or_else(|| contract("no color outside L"))?;
                (cu, cw) = (pu, pv);
            } else {
                let colw = self.colors_at(w);
                let pr = *onc
                    .iter()
                    .find(|p| !colw.contains(&p.c))
                    .ok_or_else(|| contract("every Once(v) color is present at w"))?;
                let pu = *onc
                    .iter()
                    .find(|p| p.c != pr.c && !tu.contains(&p.c) && !l.iter().any(|q| q.c == p.c))
                    .ok_or_else(|| contract("no color left for u-v"))?;
                (cu, cw) = (pu, pr);
            }
        }
        self.put(u, uv, cu)?;
        self.put(w, vw, cw)
    }

    /// Exhaustive choice over a handful of candidate colors per edge, for
    /// the case where the two low vertices have the same three neighbours.
    /// Low ends must be uncolored; cycles are checked with a local union-find
    /// over the far vertices and their clean segments.
    fn color_local(&mut self, slots: &[(Vertex, Vertex, EdgeId)]) -> Result<(), ColorError> {
        let mut verts: Vec<Vertex> = Vec::new();
        for &(l, f, _) in slots {
            for x in [l, f] {
                if !verts.contains(&x) {
                    verts.push(x);
                }
            }
        }
        let idx = |x: Vertex, verts: &[Vertex]| verts.iter().position(|&y| y == x).unwrap();
        // per far vertex: candidate (color, once-node or NIL)
        let mut cands: Vec<Vec<(u16, NodeId)>> = vec![Vec::new(); verts.len()];
        for &(l, f, _) in slots {
            if self.g.incidences(l).any(|nd| self.g.edge_color_at(nd) != 0) {
                return Err(contract("local search needs uncolored low ends"));
            }
            let fi = idx(f, &verts);
            if cands[fi].is_empty() {
                for c in self.st.miss_colors(f, 2) {
                    cands[fi].push((c, crate::graph::NIL));
                }
                for nd in self.st.onc_nodes(f, 3) {
                    cands[fi].push((self.g.edge_color_at(nd), nd));
                }
            }
        }
        let mut pick = vec![0usize; slots.len()];
        let mut cnt: Vec<Vec<(u16, u8)>> = vec![Vec::new(); verts.len()];
        let found = self.local_dfs(slots, &verts, &cands, 0, &mut pick, &mut cnt);
        if !found {
            return Err(contract("local search found no coloring"));
        }
        for (i, &(l, f, e)) in slots.iter().enumerate() {
            let fi = idx(f, &verts);
            let (c, nd) = cands[fi][pick[i]];
            let earlier = slots[..i]
                .iter()
                .enumerate()
                .find(|&(j, &(_, f2, _))| f2 == f && cands[fi][pick[j]].0 == c)
                .map(|(_, &(_, _, e2))| e2);
            let hint = match earlier {
                Some(e2) => Hint::Once(self.g.node_at(e2, f)),
                None if nd != crate::graph::NIL => Hint::Once(nd),
                None => Hint::Missing,
            };
            self.put(l, e, Pick { c, hint })?;
        }
        Ok(())
    }

    #[allow(clippy::too_many_arguments)]
    fn local_dfs(
        &self,
        slots: &[(Vertex, Vertex, EdgeId)],
        verts: &[Vertex],
        cands: &[Vec<(u16, NodeId)>],
        at: usize,
        pick: &mut Vec<usize>,
        cnt: &mut Vec<Vec<(u16, u8)>>,
    ) -> bool {
        let idx = |x: Vertex| verts.iter().position(|&y| y == x).unwrap();
        if at == slots.len() {
            return self.local_acyclic(slots, verts, cands, pick);
        }
        let (l, f, _) = slots[at];
        let (li, fi) = (idx(l), idx(f));
        for (ci, &(c, nd)) in cands[fi].iter().enumerate() {
            let base = u8::from(nd != crate::graph::NIL);
            let get = |v: &Vec<(u16, u8)>| v.iter().find(|p| p.0 == c).map(|p| p.1).unwrap_or(0);
            if get(&cnt[li]) >= 2 || get(&cnt[fi]) + base >= 2 {
                continue;
            }
            for x in [li, fi] {
                match cnt[x].iter_mut().find(|p| p.0 == c) {
                    Some(p) => p.1 += 1,
                    None => cnt[x].push((c, 1)),
                }
            }
            pick[at] = ci;
            if self.local_dfs(slots, verts, cands, at + 1, pick, cnt) {
                return true;
            }
            for x in [li, fi] {
                cnt[x].iter_mut().find(|p| p.0 == c).unwrap().1 -= 1;
            }
        }
        false
    }

    fn local_acyclic(
        &self,
        slots: &[(Vertex, Vertex, EdgeId)],
        verts: &[Vertex],
        cands: &[Vec<(u16, NodeId)>],
        pick: &[usize],
    ) -> bool {
        let idx = |x: Vertex| verts.iter().position(|&y| y == x).unwrap();
        let mut colors: Vec<u16> = Vec::new();
        for (i, &(_, f, _)) in slots.iter().enumerate() {
            let c = cands[idx(f)][pick[i]].0;
            if !colors.contains(&c) {
                colors.push(c);
            }
        }
        for c in colors {
            let mut parent: Vec<usize> = (0..verts.len()).collect();
            fn find(p: &mut [usize], mut x: usize) -> usize {
                while p[x] != x {
                    x = p[x];
                }
                x
            }
            let join = |p: &mut Vec<usize>, a: usize, b: usize| -> bool {
                let (ra, rb) = (find(p, a), find(p, b));
                if ra == rb {
                    return false;
                }
                p[ra] = rb;
                true
            };
            let mut links: Vec<(usize, usize)> = Vec::new();
            for (fi, list) in cands.iter().enumerate() {
                let Some(&(_, nd)) = list.iter().find(|p| p.0 == c && p.1 != crate::graph::NIL) else {
                    continue;
                };
                let Some(far) = self.st.far_terminal(nd) else { continue };
                let owner = self.g.node_owner(far);
                if let Some(oi) = verts.iter().position(|&y| y == owner) {
                    let key = (fi.min(oi), fi.max(oi));
                    if oi != fi && !links.contains(&key) && self.st.clean_segment_between(&self.g, owner, nd) {
                        links.push(key);
                    }
                }
            }
            for (a, b) in links {
                if !join(&mut parent, a, b) {
                    return false;
                }
            }
            for (i, &(l, f, _)) in slots.iter().enumerate() {
                if cands[idx(f)][pick[i]].0 == c && !join(&mut parent, idx(l), idx(f)) {
                    return false;
                }
            }
        }
        true
    }

    fn path_to(&self, u: Vertex, nd: NodeId) -> bool {
        self.st.clean_segment_between(&self.g, u, nd)
    }
}

fn node(p: &Pick) -> NodeId {
    match p.hint {
        Hint::Once(nd) => nd,
        _ => crate::graph::NIL,
    }
}
