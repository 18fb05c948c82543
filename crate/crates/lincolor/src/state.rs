//! Per-vertex palettes and monochromatic segment objects for pseudo-linear
//! colorings.
//!
//! Colors live in the graph's edge records (0 = uncolored). The state keeps,
//! for every vertex, the list `Onc` of incidence nodes whose color appears
//! exactly once at that vertex and the capped list `Miss` of missing colors.
//! `Miss` nodes are fixed slots (one per color up to the cap), so the slot
//! index doubles as the `Ptrs` entry.

use crate::graph::{EdgeId, GraphError, MutableGraph, NodeId, Vertex, NIL};

/// Where the caller found color `i` at the far endpoint `v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Hint {
    /// `i` is missing at `v` (in `Miss(v)` or above its cap).
    Missing,
    /// `i` is carried once at `v`, by this incidence node.
    Once(NodeId),
    /// Find out by scanning `Adj(v)`; only for `d_G(v) <= 4`.
    Scan,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Segment {
    pub ends: [NodeId; 2],
    pub color: u16,
    pub live: bool,
}

/// Once/Twice/Colors of a vertex of degree at most 3, as small color lists.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Palette {
    pub once: Vec<u16>,
    pub twice: Vec<u16>,
    pub colors: Vec<u16>,
}

impl Palette {
    pub fn has(&self, c: u16) -> bool {
        self.colors.contains(&c)
    }
    pub fn is_twice(&self, c: u16) -> bool {
        self.twice.contains(&c)
    }
}

#[derive(Clone, Debug)]
pub struct ColoringState {
    k: u16,
    seg: Vec<u32>,
    onc_prev: Vec<u32>,
    onc_next: Vec<u32>,
    in_onc: Vec<bool>,
    onc_head: Vec<u32>,
    onc_tail: Vec<u32>,
    onc_len: Vec<u32>,
    miss_off: Vec<u32>,
    miss_prev: Vec<u32>,
    miss_next: Vec<u32>,
    in_miss: Vec<bool>,
    miss_head: Vec<u32>,
    miss_len: Vec<u32>,
    segs: Vec<Segment>,
    audit: bool,
    ops: u64,
}

fn contract(msg: String) -> GraphError {
    GraphError::Contract(msg)
}

impl ColoringState {
    /// Fresh state: nothing colored, `Miss(u) = {1..min(d(u)+2, k)}`.
    pub fn new(g: &MutableGraph, k: u16) -> Result<Self, GraphError> {
        if k == 0 {
            return Err(contract("k must be positive".into()));
        }
        let n = g.n();
        let nodes = 2 * g.edge_count();
        let mut miss_off = Vec::with_capacity(n + 1);
        let mut total = 0u32;
        for v in 0..n as Vertex {
            miss_off.push(total);
            total += (g.orig_degree(v) + 2).min(k as u32);
        }
        miss_off.push(total);
        let slots = total as usize;
        let mut st = ColoringState {
            k,
            seg: vec![NIL; nodes],
            onc_prev: vec![NIL; nodes],
            onc_next: vec![NIL; nodes],
            in_onc: vec![false; nodes],
            onc_head: vec![NIL; n],
            onc_tail: vec![NIL; n],
            onc_len: vec![0; n],
            miss_off,
            miss_prev: vec![NIL; slots],
            miss_next: vec![NIL; slots],
            in_miss: vec![true; slots],
            miss_head: vec![NIL; n],
            miss_len: vec![0; n],
            segs: Vec::new(),
            audit: false,
            ops: 0,
        };
        for v in 0..n {
            let (a, b) = (st.miss_off[v], st.miss_off[v + 1]);
            if a == b {
                continue;
            }
            st.miss_head[v] = a;
            st.miss_len[v] = b - a;
            for s in a..b {
                st.miss_prev[s as usize] = if s == a { NIL } else { s - 1 };
                st.miss_next[s as usize] = if s + 1 == b { NIL } else { s + 1 };
            }
        }
        st.ops = (n + slots) as u64;
        for e in 0..g.edge_count() as EdgeId {
            if g.color(e) != 0 {
                return Err(contract(format!("edge {e} already colored at init")));
            }
        }
        Ok(st)
    }

    /// Recompute and compare the whole state after every mutation.
    pub fn set_audit(&mut self, on: bool) {
        self.audit = on;
    }

    pub fn audit_enabled(&self) -> bool {
        self.audit
    }

    pub fn k(&self) -> u16 {
        self.k
    }

    pub fn ops(&self) -> u64 {
        self.ops
    }

    pub fn cap(&self, v: Vertex) -> u32 {
        self.miss_off[v as usize + 1] - self.miss_off[v as usize]
    }

    // ----- Onc ------------------------------------------------------------

    pub fn onc_len(&self, v: Vertex) -> u32 {
        self.onc_len[v as usize]
    }

    /// The first `limit` Onc(v) nodes, in list order.
    pub fn onc_nodes(&self, v: Vertex, limit: usize) -> Vec<NodeId> {
        let mut out = Vec::with_capacity(limit.min(4));
        let mut nd = self.onc_head[v as usize];
        while nd != NIL && out.len() < limit {
            out.push(nd);
            nd = self.onc_next[nd as usize];
        }
        out
    }

    fn onc_push(&mut self, v: Vertex, nd: NodeId) {
        self.ops += 1;
        debug_assert!(!self.in_onc[nd as usize]);
        let vi = v as usize;
        self.in_onc[nd as usize] = true;
        self.onc_prev[nd as usize] = self.onc_tail[vi];
        self.onc_next[nd as usize] = NIL;
        if self.onc_tail[vi] == NIL {
            self.onc_head[vi] = nd;
        } else {
            self.onc_next[self.onc_tail[vi] as usize] = nd;
        }
        self.onc_tail[vi] = nd;
        self.onc_len[vi] += 1;
    }

    fn onc_remove(&mut self, v: Vertex, nd: NodeId) {
        self.ops += 1;
        debug_assert!(self.in_onc[nd as usize]);
        let vi = v as usize;
        let (p, n) = (self.onc_prev[nd as usize], self.onc_next[nd as usize]);
        if p == NIL {
            self.onc_head[vi] = n;
        } else {
            self.onc_next[p as usize] = n;
        }
        if n == NIL {
            self.onc_tail[vi] = p;
        } else {
            self.onc_prev[n as usize] = p;
        }
        self.in_onc[nd as usize] = false;
        self.onc_prev[nd as usize] = NIL;
        self.onc_next[nd as usize] = NIL;
        self.onc_len[vi] -= 1;
    }

    // ----- Miss / Ptrs -----------------------------------------------------

    pub fn miss_len(&self, v: Vertex) -> u32 {
        self.miss_len[v as usize]
    }

    /// The first `limit` colors of Miss(v).
    pub fn miss_colors(&self, v: Vertex, limit: usize) -> Vec<u16> {
        let base = self.miss_off[v as usize];
        let mut out = Vec::with_capacity(limit.min(4));
        let mut s = self.miss_head[v as usize];
        while s != NIL && out.len() < limit {
            out.push((s - base + 1) as u16);
            s = self.miss_next[s as usize];
        }
        out
    }

    /// `Ptrs(v)[c]`: the Miss slot holding `c`, if present.
    pub fn ptr(&self, v: Vertex, c: u16) -> Option<u32> {
        if c == 0 || c as u32 > self.cap(v) {
            return None;
        }
        let s = self.miss_off[v as usize] + c as u32 - 1;
        self.in_miss[s as usize].then_some(s)
    }

    /// A color of Miss(v) outside `avoid`, looking at no more than two nodes.
    pub fn pick_missing(&self, v: Vertex, avoid: Option<u16>) -> Option<u16> {
        self.miss_colors(v, 2).into_iter().find(|&c| Some(c) != avoid)
    }

    fn miss_remove(&mut self, v: Vertex, c: u16) {
        let Some(s) = self.ptr(v, c) else { return };
        self.ops += 1;
        let vi = v as usize;
        let (p, n) = (self.miss_prev[s as usize], self.miss_next[s as usize]);
        if p == NIL {
            self.miss_head[vi] = n;
        } else {
            self.miss_next[p as usize] = n;
        }
        if n != NIL {
            self.miss_prev[n as usize] = p;
        }
        self.in_miss[s as usize] = false;
        self.miss_prev[s as usize] = NIL;
        self.miss_next[s as usize] = NIL;
        self.miss_len[vi] -= 1;
    }

    fn miss_push_front(&mut self, v: Vertex, c: u16) {
        if c as u32 > self.cap(v) {
            return;
        }
        self.ops += 1;
        let vi = v as usize;
        let s = self.miss_off[vi] + c as u32 - 1;
        debug_assert!(!self.in_miss[s as usize]);
        let h = self.miss_head[vi];
        self.miss_prev[s as usize] = NIL;
        self.miss_next[s as usize] = h;
        if h != NIL {
            self.miss_prev[h as usize] = s;
        }
        self.miss_head[vi] = s;
        self.in_miss[s as usize] = true;
        self.miss_len[vi] += 1;
    }

    // ----- palettes ---------------------------------------------------------

    /// Once/Twice/Colors of `u`; contract error when `d_G(u) > 3`.
    pub fn low_degree_palette(&self, g: &MutableGraph, u: Vertex) -> Result<Palette, GraphError> {
        if g.degree(u) > 3 {
            return Err(contract(format!("palette of vertex {u} with degree {}", g.degree(u))));
        }
        Ok(small_palette(g, u))
    }

    // ----- segments ---------------------------------------------------------

    pub fn segment_of(&self, nd: NodeId) -> Option<Segment> {
        let s = self.seg[nd as usize];
        (s != NIL).then(|| self.segs[s as usize])
    }

    /// Far terminal of the segment ending at `nd`.
    pub fn far_terminal(&self, nd: NodeId) -> Option<NodeId> {
        let s = self.segment_of(nd)?;
        Some(if s.ends[0] == nd { s.ends[1] } else { s.ends[0] })
    }

    pub fn live_segments(&self) -> impl Iterator<Item = &Segment> {
        self.segs.iter().filter(|s| s.live)
    }

    /// True iff a segment ends at `inc`, its other terminal lies at `u`, and
    /// neither terminal incidence is special.
    pub fn clean_segment_between(&self, g: &MutableGraph, u: Vertex, inc: NodeId) -> bool {
        let Some(far) = self.far_terminal(inc) else { return false };
        g.node_owner(far) == u
            && g.is_alive(MutableGraph::node_edge(far))
            && !g.is_special(inc)
            && !g.is_special(far)
    }

    fn fuse(&mut self, a: NodeId, b: NodeId) {
        self.ops += 1;
        let sa = self.seg[a as usize];
        let sb = self.seg[b as usize];
        debug_assert!(sa != NIL && sb != NIL && sa != sb);
        let oa = other(&self.segs[sa as usize], a);
        let ob = other(&self.segs[sb as usize], b);
        self.segs[sa as usize].ends = [oa, ob];
        self.segs[sb as usize].live = false;
        self.seg[ob as usize] = sa;
        self.seg[a as usize] = NIL;
        self.seg[b as usize] = NIL;
    }

    /// Color `e = uv` with `i`, where `u` is the endpoint of degree at most 3.
    pub fn assign_color(
        &mut self,
        g: &mut MutableGraph,
        u: Vertex,
        e: EdgeId,
        i: u16,
        hint: Hint,
    ) -> Result<(), GraphError> {
        if !g.is_alive(e) || g.color(e) != 0 {
            return Err(contract(format!("edge {e} is dead or already colored")));
        }
        if i == 0 || i > self.k {
            return Err(contract(format!("color {i} outside 1..={}", self.k)));
        }
        if g.degree(u) > 3 {
            return Err(contract(format!("low endpoint {u} has degree {}", g.degree(u))));
        }
        let v = g.other_end(e, u);
        let nu = g.node_at(e, u);
        let nv = g.node_at(e, v);

        let mut e_u = NIL;
        for nd in g.incidences(u) {
            self.ops += 1;
            if g.edge_color_at(nd) == i {
                if e_u != NIL {
                    return Err(contract(format!("color {i} already twice at {u}")));
                }
                e_u = nd;
            }
        }

        let e_v = match hint {
            Hint::Missing => NIL,
            Hint::Once(nd) => {
                if g.node_owner(nd) != v || g.edge_color_at(nd) != i || !self.in_onc[nd as usize] {
                    return Err(contract(format!("stale Once hint for color {i} at {v}")));
                }
                nd
            }
            Hint::Scan => {
                if g.degree(v) > 4 {
                    return Err(contract(format!("scan at vertex {v} of degree {}", g.degree(v))));
                }
                let mut found = NIL;
                for nd in g.incidences(v) {
                    self.ops += 1;
                    if g.edge_color_at(nd) == i {
                        if found != NIL {
                            return Err(contract(format!("color {i} already twice at {v}")));
                        }
                        found = nd;
                    }
                }
                found
            }
        };
        if self.audit {
            let cnt = g.incidences(v).filter(|&nd| g.edge_color_at(nd) == i).count();
            let expect = usize::from(e_v != NIL);
            if cnt != expect {
                return Err(contract(format!("hint for color {i} at {v} disagrees with Adj")));
            }
        }

        if e_u != NIL && e_v != NIL {
            let su = self.seg[e_u as usize];
            let sv = self.seg[e_v as usize];
            if su != NIL
                && su == sv
                && !g.is_special(e_u)
                && !g.is_special(e_v)
                && !g.is_special(nu)
                && !g.is_special(nv)
            {
                return Err(contract(format!(
                    "coloring {u}-{v} with {i} closes a cycle with no special incidence"
                )));
            }
        }

        g.set_color(e, i);
        let sid = self.segs.len() as u32;
        self.segs.push(Segment { ends: [nu, nv], color: i, live: true });
        self.seg[nu as usize] = sid;
        self.seg[nv as usize] = sid;
        self.ops += 1;

        if e_u != NIL {
            if !g.is_special(e_u) && !g.is_special(nu) {
                self.fuse(e_u, nu);
            }
            self.onc_remove(u, e_u);
        } else {
            self.miss_remove(u, i);
            self.onc_push(u, nu);
        }
        if e_v != NIL {
            if !g.is_special(e_v) && !g.is_special(nv) {
                self.fuse(e_v, nv);
            }
            self.onc_remove(v, e_v);
        } else {
            self.miss_remove(v, i);
            self.onc_push(v, nv);
        }

        if self.audit {
            self.check(g).map_err(contract)?;
        }
        Ok(())
    }

    /// Split `w` back out of `u`, moving the palette entry of the transferred
    /// edge, then restore the moved node's previous special flag.
    pub fn split(
        &mut self,
        g: &mut MutableGraph,
        u: Vertex,
        w: Vertex,
        old_special: bool,
    ) -> Result<Option<EdgeId>, GraphError> {
        let Some(&crate::graph::Mutation::Identify { edge, side, .. }) = g.journal_top() else {
            return g.split(u, w);
        };
        let nd = MutableGraph::node(edge, side);
        let c = g.color(edge);
        if c != 0 {
            let twin = g
                .incidences(u)
                .find(|&x| x != nd && g.edge_color_at(x) == c);
            match twin {
                Some(t) => self.onc_push(u, t),
                None => {
                    self.onc_remove(u, nd);
                    self.miss_push_front(u, c);
                }
            }
        }
        let r = g.split(u, w)?;
        if c != 0 {
            if g.degree(w) != 1 {
                return Err(contract(format!("split vertex {w} has degree {}", g.degree(w))));
            }
            self.miss_remove(w, c);
            self.onc_push(w, nd);
        }
        g.set_special(nd, old_special);
        if self.audit {
            self.check(g).map_err(contract)?;
        }
        Ok(r)
    }

    /// Uncolor and drop the most recently added dummy edge, shrinking the
    /// segment that ends at the dummy.
    pub fn remove_dummy(&mut self, g: &mut MutableGraph) -> Result<(), GraphError> {
        let Some(&crate::graph::Mutation::AddDummy { x, e }) = g.journal_top() else {
            return g.remove_dummy().map(|_| ());
        };
        let c = g.color(e);
        if c != 0 && g.is_alive(e) {
            let u = g.other_end(e, x);
            let nu = g.node_at(e, u);
            let nx = g.node_at(e, x);
            let sid = self.seg[nx as usize];
            let twin = g.incidences(u).find(|&t| t != nu && g.edge_color_at(t) == c);
            if self.seg[nu as usize] == sid {
                self.segs[sid as usize].live = false;
                self.seg[nu as usize] = NIL;
            } else {
                let t = twin.ok_or_else(|| contract(format!("dummy edge {e} is interior without a twin")))?;
                let s = &mut self.segs[sid as usize];
                let i = usize::from(s.ends[1] == nx);
                s.ends[i] = t;
                self.seg[t as usize] = sid;
            }
            self.seg[nx as usize] = NIL;
            match twin {
                Some(t) => self.onc_push(u, t),
                None => {
                    self.onc_remove(u, nu);
                    self.miss_push_front(u, c);
                }
            }
            self.onc_remove(x, nx);
            self.miss_push_front(x, c);
            g.set_color(e, 0);
        }
        g.remove_dummy()?;
        if self.audit {
            self.check(g).map_err(contract)?;
        }
        Ok(())
    }

    /// Full recomputation of palettes and segments from the edge colors.
    pub fn check(&self, g: &MutableGraph) -> Result<(), String> {
        let n = g.n();
        for v in 0..n as Vertex {
            let mut count = vec![0u32; self.k as usize + 1];
            let mut carrier = vec![NIL; self.k as usize + 1];
            for nd in g.incidences(v) {
                let c = g.edge_color_at(nd) as usize;
                if c != 0 {
                    count[c] += 1;
                    carrier[c] = nd;
                }
            }
            if let Some(c) = (1..=self.k as usize).find(|&c| count[c] > 2) {
                return Err(format!("color {c} appears {} times at {v}", count[c]));
            }
            let mut want: Vec<NodeId> =
                (1..=self.k as usize).filter(|&c| count[c] == 1).map(|c| carrier[c]).collect();
            want.sort_unstable();
            let mut have = self.onc_nodes(v, usize::MAX);
            if have.len() as u32 != self.onc_len[v as usize] {
                return Err(format!("Onc({v}) length counter is stale"));
            }
            have.sort_unstable();
            if want != have {
                return Err(format!("Onc({v}) = {have:?}, expected {want:?}"));
            }
            let cap = self.cap(v) as usize;
            let mut want_m: Vec<u16> = (1..=cap).filter(|&c| count[c] == 0).map(|c| c as u16).collect();
            want_m.sort_unstable();
            let mut have_m = self.miss_colors(v, usize::MAX);
            if have_m.len() as u32 != self.miss_len[v as usize] {
                return Err(format!("Miss({v}) length counter is stale"));
            }
            have_m.sort_unstable();
            if want_m != have_m {
                return Err(format!("Miss({v}) = {have_m:?}, expected {want_m:?}"));
            }
            for c in 1..=cap as u16 {
                let slot = self.miss_off[v as usize] + c as u32 - 1;
                if self.in_miss[slot as usize] != (count[c as usize] == 0) {
                    return Err(format!("Ptrs({v})[{c}] is stale"));
                }
            }
            let missing_all = (1..=self.k as usize).filter(|&c| count[c] == 0).count();
            if want_m.len() != missing_all && want_m.len() < 2 {
                return Err(format!("Miss({v}) is short of Missing({v}) with fewer than 2 entries"));
            }
        }
        let expected = recompute_segments(g)?;
        let mut have: Vec<[NodeId; 2]> = Vec::new();
        for (sid, s) in self.segs.iter().enumerate() {
            if !s.live {
                continue;
            }
            for &end in &s.ends {
                if self.seg[end as usize] != sid as u32 {
                    return Err(format!("terminal {end} does not point back at segment {sid}"));
                }
            }
            let mut p = s.ends;
            p.sort_unstable();
            have.push(p);
        }
        have.sort_unstable();
        let mut want: Vec<[NodeId; 2]> = expected.iter().map(|s| s.0).collect();
        want.sort_unstable();
        if have != want {
            return Err(format!("segments {have:?} differ from recomputation {want:?}"));
        }
        let terminal: std::collections::HashSet<NodeId> =
            want.iter().flat_map(|p| p.iter().copied()).collect();
        for (nd, &s) in self.seg.iter().enumerate() {
            if s != NIL && !terminal.contains(&(nd as NodeId)) {
                return Err(format!("node {nd} points at a segment but is not a terminal"));
            }
        }
        Ok(())
    }
}

fn other(s: &Segment, nd: NodeId) -> NodeId {
    if s.ends[0] == nd {
        s.ends[1]
    } else {
        s.ends[0]
    }
}

pub(crate) fn small_palette(g: &MutableGraph, u: Vertex) -> Palette {
    let mut cs: Vec<u16> = g.incidences(u).map(|nd| g.edge_color_at(nd)).filter(|&c| c != 0).collect();
    cs.sort_unstable();
    let mut p = Palette::default();
    let mut i = 0;
    while i < cs.len() {
        let mut j = i;
        while j < cs.len() && cs[j] == cs[i] {
            j += 1;
        }
        p.colors.push(cs[i]);
        if j - i == 1 {
            p.once.push(cs[i]);
        } else {
            p.twice.push(cs[i]);
        }
        i = j;
    }
    p
}

/// Monochromatic segments of the current coloring, recomputed from scratch:
/// two same-colored edges at a vertex are joined unless either incidence is
/// special. Returns sorted terminal pairs with their color. An unbroken
/// cycle is an error.
pub fn recompute_segments(g: &MutableGraph) -> Result<Vec<([NodeId; 2], u16)>, String> {
    let nodes = 2 * g.edge_count();
    let mut partner = vec![NIL; nodes];
    for v in 0..g.n() as Vertex {
        let inc: Vec<NodeId> = g.incidences(v).filter(|&nd| g.edge_color_at(nd) != 0).collect();
        for (a, &x) in inc.iter().enumerate() {
            for &y in &inc[a + 1..] {
                if g.edge_color_at(x) == g.edge_color_at(y) && !g.is_special(x) && !g.is_special(y) {
                    partner[x as usize] = y;
                    partner[y as usize] = x;
                }
            }
        }
    }
    let mut seen = vec![false; g.edge_count()];
    let mut out = Vec::new();
    for e in 0..g.edge_count() as EdgeId {
        if !g.is_alive(e) || g.color(e) == 0 || seen[e as usize] {
            continue;
        }
        // walk to one end: leave each edge through the node opposite the entry
        let mut ends = [NIL; 2];
        for (dir, start) in [(0usize, MutableGraph::node(e, 0)), (1, MutableGraph::node(e, 1))] {
            let mut nd = start;
            let mut steps = 0usize;
            loop {
                let p = partner[nd as usize];
                if p == NIL {
                    ends[dir] = nd;
                    break;
                }
                // continue along p's edge, exiting through its far node
                nd = p ^ 1;
                steps += 1;
                if MutableGraph::node_edge(nd) == e || steps > nodes {
                    return Err(format!("monochromatic cycle through edge {e} with no special incidence"));
                }
            }
        }
        // mark all edges of the segment
        let mut nd = ends[0];
        loop {
            seen[MutableGraph::node_edge(nd) as usize] = true;
            let far = nd ^ 1;
            let p = partner[far as usize];
            if p == NIL {
                break;
            }
            nd = p;
        }
        let mut pair = ends;
        pair.sort_unstable();
        out.push((pair, g.color(e)));
    }
    Ok(out)
}
