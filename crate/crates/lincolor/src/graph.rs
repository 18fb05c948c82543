//! Mutable graph with O(1) edge splicing, vertex identification and an
//! incrementally maintained pivot list.
//!
//! Edges live in an arena indexed by [`EdgeId`]. Every edge owns two
//! incidence nodes, `2 * e` (at `ends[0]`) and `2 * e + 1` (at `ends[1]`),
//! threaded into per-vertex doubly linked adjacency lists. Removed nodes keep
//! their links so they can be put back in place.

use thiserror::Error;

pub type Vertex = u32;
pub type EdgeId = u32;
pub type NodeId = u32;

pub const NIL: u32 = u32::MAX;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {0} out of range")]
    VertexOutOfRange(Vertex),
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(Vertex, Vertex),
    #[error("edge {0} is not alive")]
    DeadEdge(EdgeId),
    #[error("edge {0} is already alive")]
    AliveEdge(EdgeId),
    #[error("undo out of order: expected {expected}, journal top is {found}")]
    OutOfOrder { expected: String, found: String },
    #[error("contract violated: {0}")]
    Contract(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("input is not valid UTF-8")]
    Utf8,
    #[error("missing `p <n> <m>` header")]
    MissingHeader,
    #[error("line {line}: malformed header")]
    MalformedHeader { line: usize },
    #[error("line {line}: malformed edge line")]
    MalformedEdge { line: usize },
    #[error("line {line}: vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { line: usize, vertex: u64, n: u32 },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: u32 },
    #[error("line {line}: duplicate edge {u} {v}")]
    DuplicateEdge { line: usize, u: u32, v: u32 },
    #[error("header declares {declared} edges, found {found}")]
    EdgeCount { declared: usize, found: usize },
}

/// One entry of the mutation journal. Only undoable mutations are recorded.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mutation {
    Remove(EdgeId),
    Identify { u: Vertex, w: Vertex, edge: EdgeId, side: u8 },
    IdentifyIsolated { u: Vertex, w: Vertex },
    AddDummy { x: Vertex, e: EdgeId },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
struct Pivots {
    head: u32,
    tail: u32,
    prev: Vec<u32>,
    next: Vec<u32>,
    member: Vec<bool>,
    len: u32,
}

impl Pivots {
    fn push_vertex(&mut self) {
        self.prev.push(NIL);
        self.next.push(NIL);
        self.member.push(false);
    }

    fn insert(&mut self, v: Vertex) {
        let vi = v as usize;
        if self.member[vi] {
            return;
        }
        self.member[vi] = true;
        self.prev[vi] = self.tail;
        self.next[vi] = NIL;
        if self.tail == NIL {
            self.head = v;
        } else {
            self.next[self.tail as usize] = v;
        }
        self.tail = v;
        self.len += 1;
    }

    fn remove(&mut self, v: Vertex) {
        let vi = v as usize;
        if !self.member[vi] {
            return;
        }
        self.member[vi] = false;
        let (p, n) = (self.prev[vi], self.next[vi]);
        if p == NIL {
            self.head = n;
        } else {
            self.next[p as usize] = n;
        }
        if n == NIL {
            self.tail = p;
        } else {
            self.prev[n as usize] = p;
        }
        self.prev[vi] = NIL;
        self.next[vi] = NIL;
        self.len -= 1;
    }
}

#[derive(Clone, Debug)]
pub struct MutableGraph {
    n_input: u32,
    t: u32,
    ends: Vec<[Vertex; 2]>,
    color: Vec<u16>,
    alive: Vec<bool>,
    nprev: Vec<u32>,
    nnext: Vec<u32>,
    special: Vec<bool>,
    head: Vec<u32>,
    tail: Vec<u32>,
    deg: Vec<u32>,
    orig: Vec<u32>,
    low: Vec<u32>,
    dummy: Vec<bool>,
    pivots: Pivots,
    journal: Vec<Mutation>,
    nonisolated: u32,
    ops: u64,
}

impl PartialEq for MutableGraph {
    /// Structural equality. The operation counter, the journal and the order
    /// of the pivot list are ignored.
    fn eq(&self, o: &Self) -> bool {
        self.n_input == o.n_input
            && self.t == o.t
            && self.ends == o.ends
            && self.color == o.color
            && self.alive == o.alive
            && self.nprev == o.nprev
            && self.nnext == o.nnext
            && self.special == o.special
            && self.head == o.head
            && self.tail == o.tail
            && self.deg == o.deg
            && self.orig == o.orig
            && self.low == o.low
            && self.dummy == o.dummy
            && self.pivots.member == o.pivots.member
            && self.nonisolated == o.nonisolated
    }
}

impl MutableGraph {
    /// Empty graph on `n` vertices with the default pivot threshold 3.
    pub fn new(n: usize) -> Self {
        Self::with_threshold(n, 3)
    }

    pub fn with_threshold(n: usize, t: u32) -> Self {
        let mut g = MutableGraph {
            n_input: n as u32,
            t,
            ends: Vec::new(),
            color: Vec::new(),
            alive: Vec::new(),
            nprev: Vec::new(),
            nnext: Vec::new(),
            special: Vec::new(),
            head: Vec::new(),
            tail: Vec::new(),
            deg: Vec::new(),
            orig: Vec::new(),
            low: Vec::new(),
            dummy: Vec::new(),
            pivots: Pivots { head: NIL, tail: NIL, ..Default::default() },
            journal: Vec::new(),
            nonisolated: 0,
            ops: 0,
        };
        for _ in 0..n {
            g.push_vertex(false);
        }
        g
    }

    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self, GraphError> {
        let mut g = Self::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Copy of this graph's alive, non-dummy edges under a new pivot threshold.
    pub fn rebuilt(&self, t: u32) -> Self {
        let mut g = Self::with_threshold(self.n_input as usize, t);
        for e in 0..self.ends.len() {
            if self.alive[e] && !self.is_dummy_edge(e as EdgeId) {
                let [a, b] = self.ends[e];
                g.add_edge(a, b).expect("source graph is simple");
            }
        }
        g
    }

    fn push_vertex(&mut self, dummy: bool) -> Vertex {
        let v = self.head.len() as Vertex;
        self.head.push(NIL);
        self.tail.push(NIL);
        self.deg.push(0);
        self.orig.push(0);
        self.low.push(0);
        self.dummy.push(dummy);
        self.pivots.push_vertex();
        v
    }

    fn push_edge(&mut self, u: Vertex, v: Vertex) -> EdgeId {
        let e = self.ends.len() as EdgeId;
        self.ends.push([u, v]);
        self.color.push(0);
        self.alive.push(false);
        for w in [u, v] {
            self.nprev.push(self.tail[w as usize]);
            self.nnext.push(NIL);
            self.special.push(false);
        }
        e
    }

    /// Build-time insertion. Rejects loops and parallel edges.
    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<EdgeId, GraphError> {
        let n = self.n() as Vertex;
        if u >= n {
            return Err(GraphError::VertexOutOfRange(u));
        }
        if v >= n {
            return Err(GraphError::VertexOutOfRange(v));
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        let (s, o) = if self.deg[u as usize] <= self.deg[v as usize] { (u, v) } else { (v, u) };
        if self.neighbors(s).any(|x| x == o) {
            return Err(GraphError::DuplicateEdge(u, v));
        }
        let e = self.push_edge(u, v);
        self.orig[u as usize] += 1;
        self.orig[v as usize] += 1;
        self.attach(e);
        Ok(e)
    }

    /// Attach a fresh degree-1 dummy vertex to `u`. Dummies are real vertices
    /// above the input range; they count toward `u`'s original degree. The
    /// addition is journaled and undone by [`remove_dummy`](Self::remove_dummy).
    pub fn add_dummy(&mut self, u: Vertex) -> (Vertex, EdgeId) {
        let x = self.push_vertex(true);
        let e = self.push_edge(u, x);
        self.orig[u as usize] += 1;
        self.orig[x as usize] = 1;
        self.attach(e);
        self.journal.push(Mutation::AddDummy { x, e });
        (x, e)
    }

    /// Undo the most recent [`add_dummy`](Self::add_dummy). The dummy vertex
    /// stays behind, isolated; its edge record stays dead.
    pub fn remove_dummy(&mut self) -> Result<(Vertex, EdgeId), GraphError> {
        match self.journal.last().copied() {
            Some(Mutation::AddDummy { x, e }) if self.alive[e as usize] => {
                self.journal.pop();
                self.detach(e);
                Ok((x, e))
            }
            other => Err(GraphError::OutOfOrder {
                expected: "AddDummy".into(),
                found: format!("{other:?}"),
            }),
        }
    }

    // ----- accessors -------------------------------------------------------

    /// Total vertex count, dummies included.
    pub fn n(&self) -> usize {
        self.head.len()
    }

    pub fn n_input(&self) -> usize {
        self.n_input as usize
    }

    /// Total edge-record count, dead and dummy edges included.
    pub fn edge_count(&self) -> usize {
        self.ends.len()
    }

    pub fn alive_edges(&self) -> usize {
        self.alive.iter().filter(|&&a| a).count()
    }

    pub fn threshold(&self) -> u32 {
        self.t
    }

    pub fn degree(&self, v: Vertex) -> u32 {
        self.deg[v as usize]
    }

    pub fn orig_degree(&self, v: Vertex) -> u32 {
        self.orig[v as usize]
    }

    /// d'(v): number of neighbours whose current degree is at most the threshold.
    pub fn low_count(&self, v: Vertex) -> u32 {
        self.low[v as usize]
    }

    pub fn is_dummy(&self, v: Vertex) -> bool {
        self.dummy[v as usize]
    }

    pub fn is_dummy_edge(&self, e: EdgeId) -> bool {
        let [a, b] = self.ends[e as usize];
        self.dummy[a as usize] || self.dummy[b as usize]
    }

    pub fn nonisolated(&self) -> u32 {
        self.nonisolated
    }

    pub fn ops(&self) -> u64 {
        self.ops
    }

    pub fn journal_top(&self) -> Option<&Mutation> {
        self.journal.last()
    }

    pub fn journal_len(&self) -> usize {
        self.journal.len()
    }

    pub fn ends(&self, e: EdgeId) -> [Vertex; 2] {
        self.ends[e as usize]
    }

    pub fn is_alive(&self, e: EdgeId) -> bool {
        self.alive[e as usize]
    }

    pub fn color(&self, e: EdgeId) -> u16 {
        self.color[e as usize]
    }

    pub(crate) fn set_color(&mut self, e: EdgeId, c: u16) {
        self.color[e as usize] = c;
    }

    pub fn node(e: EdgeId, side: u8) -> NodeId {
        2 * e + side as u32
    }

    pub fn node_edge(node: NodeId) -> EdgeId {
        node >> 1
    }

    pub fn node_owner(&self, node: NodeId) -> Vertex {
        self.ends[(node >> 1) as usize][(node & 1) as usize]
    }

    pub fn node_other(&self, node: NodeId) -> Vertex {
        self.ends[(node >> 1) as usize][(1 - (node & 1)) as usize]
    }

    /// The incidence node of `e` at endpoint `v`.
    pub fn node_at(&self, e: EdgeId, v: Vertex) -> NodeId {
        let [a, b] = self.ends[e as usize];
        debug_assert!(a == v || b == v, "vertex {v} not on edge {e}");
        if a == v {
            2 * e
        } else {
            debug_assert_eq!(b, v);
            2 * e + 1
        }
    }

    pub fn other_end(&self, e: EdgeId, v: Vertex) -> Vertex {
        let [a, b] = self.ends[e as usize];
        if a == v {
            b
        } else {
            a
        }
    }

    pub fn edge_color_at(&self, node: NodeId) -> u16 {
        self.color[(node >> 1) as usize]
    }

    pub fn is_special(&self, node: NodeId) -> bool {
        self.special[node as usize]
    }

    /// Set the special flag of an incidence node; returns the previous value.
    pub fn set_special(&mut self, node: NodeId, on: bool) -> bool {
        self.ops += 1;
        std::mem::replace(&mut self.special[node as usize], on)
    }

    pub fn first_node(&self, v: Vertex) -> NodeId {
        self.head[v as usize]
    }

    pub fn next_node(&self, node: NodeId) -> NodeId {
        self.nnext[node as usize]
    }

    /// Incidence nodes of `v` in list order.
    pub fn incidences(&self, v: Vertex) -> Incidences<'_> {
        Incidences { g: self, cur: self.head[v as usize] }
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.incidences(v).map(move |nd| self.node_other(nd))
    }

    pub fn edges_at(&self, v: Vertex) -> impl Iterator<Item = EdgeId> + '_ {
        self.incidences(v).map(|nd| nd >> 1)
    }

    /// The alive edge joining `u` and `v`, scanning the shorter list.
    pub fn find_edge(&self, u: Vertex, v: Vertex) -> Option<EdgeId> {
        let (s, o) = if self.deg[u as usize] <= self.deg[v as usize] { (u, v) } else { (v, u) };
        self.incidences(s).find(|&nd| self.node_other(nd) == o).map(|nd| nd >> 1)
    }

    pub fn max_degree(&self) -> u32 {
        self.deg.iter().copied().max().unwrap_or(0)
    }

    /// Alive edges between input vertices, as `(u, v)` in edge-id order.
    pub fn edge_list(&self) -> Vec<(Vertex, Vertex)> {
        (0..self.ends.len())
            .filter(|&e| self.alive[e] && !self.is_dummy_edge(e as EdgeId))
            .map(|e| (self.ends[e][0], self.ends[e][1]))
            .collect()
    }

    pub fn is_pivot(&self, v: Vertex) -> bool {
        self.pivots.member[v as usize]
    }

    pub fn pivot_count(&self) -> usize {
        self.pivots.len as usize
    }

    pub fn pivots_head(&self) -> Option<Vertex> {
        (self.pivots.head != NIL).then_some(self.pivots.head)
    }

    pub fn pivot_list(&self) -> Vec<Vertex> {
        let mut out = Vec::with_capacity(self.pivots.len as usize);
        let mut v = self.pivots.head;
        while v != NIL {
            out.push(v);
            v = self.pivots.next[v as usize];
        }
        out
    }

    #[inline]
    fn is_low(&self, v: Vertex) -> bool {
        self.deg[v as usize] <= self.t
    }

    // ----- list plumbing ---------------------------------------------------

    fn unlink(&mut self, node: NodeId) {
        self.ops += 1;
        let owner = self.node_owner(node) as usize;
        let (p, n) = (self.nprev[node as usize], self.nnext[node as usize]);
        if p == NIL {
            self.head[owner] = n;
        } else {
            self.nnext[p as usize] = n;
        }
        if n == NIL {
            self.tail[owner] = p;
        } else {
            self.nprev[n as usize] = p;
        }
    }

    /// Dancing-links reinsertion after the node's retained predecessor. The
    /// successor is read from the current list, so nodes appended since the
    /// removal (dummies) stay linked.
    fn relink(&mut self, node: NodeId) {
        self.ops += 1;
        let owner = self.node_owner(node) as usize;
        let p = self.nprev[node as usize];
        let n = if p == NIL { self.head[owner] } else { self.nnext[p as usize] };
        self.nnext[node as usize] = n;
        if p == NIL {
            self.head[owner] = node;
        } else {
            self.nnext[p as usize] = node;
        }
        if n == NIL {
            self.tail[owner] = node;
        } else {
            self.nprev[n as usize] = node;
        }
    }

    fn refresh(&mut self, v: Vertex) {
        self.ops += 1;
        let vi = v as usize;
        let want = self.low[vi] >= 1 && self.deg[vi] - self.low[vi] <= self.t;
        if want {
            self.pivots.insert(v);
        } else {
            self.pivots.remove(v);
        }
    }

    fn bump_neighbors(&mut self, v: Vertex, up: bool) {
        let mut nd = self.head[v as usize];
        while nd != NIL {
            let y = self.node_other(nd);
            if up {
                self.low[y as usize] += 1;
            } else {
                self.low[y as usize] -= 1;
            }
            self.refresh(y);
            nd = self.nnext[nd as usize];
        }
    }

    fn detach(&mut self, e: EdgeId) {
        let [a, b] = self.ends[e as usize];
        let (la, lb) = (self.is_low(a), self.is_low(b));
        self.unlink(2 * e);
        self.unlink(2 * e + 1);
        self.alive[e as usize] = false;
        for (x, y, lx) in [(a, b, la), (b, a, lb)] {
            self.deg[x as usize] -= 1;
            if lx {
                self.low[y as usize] -= 1;
            }
            if self.deg[x as usize] == 0 {
                self.nonisolated -= 1;
            }
        }
        if !la && self.is_low(a) {
            self.bump_neighbors(a, true);
        }
        if !lb && self.is_low(b) {
            self.bump_neighbors(b, true);
        }
        self.refresh(a);
        self.refresh(b);
    }

    fn attach(&mut self, e: EdgeId) {
        let [a, b] = self.ends[e as usize];
        for x in [a, b] {
            if self.deg[x as usize] == self.t {
                self.bump_neighbors(x, false);
            }
        }
        self.relink(2 * e);
        self.relink(2 * e + 1);
        self.alive[e as usize] = true;
        for x in [a, b] {
            self.deg[x as usize] += 1;
            if self.deg[x as usize] == 1 {
                self.nonisolated += 1;
            }
        }
        if self.is_low(a) {
            self.low[b as usize] += 1;
        }
        if self.is_low(b) {
            self.low[a as usize] += 1;
        }
        self.refresh(a);
        self.refresh(b);
    }

    // ----- journaled mutations --------------------------------------------

    pub fn remove_edge(&mut self, e: EdgeId) -> Result<(), GraphError> {
        if e as usize >= self.ends.len() || !self.alive[e as usize] {
            return Err(GraphError::DeadEdge(e));
        }
        self.detach(e);
        self.journal.push(Mutation::Remove(e));
        Ok(())
    }

    pub fn restore_edge(&mut self, e: EdgeId) -> Result<(), GraphError> {
        match self.journal.last() {
            Some(Mutation::Remove(x)) if *x == e => {}
            other => {
                return Err(GraphError::OutOfOrder {
                    expected: format!("Remove({e})"),
                    found: format!("{other:?}"),
                })
            }
        }
        self.journal.pop();
        self.attach(e);
        Ok(())
    }

    /// Merge `w` (degree ≤ 1) into `u` (degree ≤ 2); w's edge is rewired to u.
    pub fn identify(&mut self, u: Vertex, w: Vertex) -> Result<(), GraphError> {
        let n = self.n() as Vertex;
        if u >= n || w >= n || u == w {
            return Err(GraphError::Contract(format!("identify({u},{w}): bad vertices")));
        }
        if self.deg[w as usize] > 1 || self.deg[u as usize] > 2 {
            return Err(GraphError::Contract(format!(
                "identify({u},{w}): degrees {} and {}",
                self.deg[u as usize], self.deg[w as usize]
            )));
        }
        let nw = self.head[w as usize];
        if nw == NIL {
            self.journal.push(Mutation::IdentifyIsolated { u, w });
            return Ok(());
        }
        let y = self.node_other(nw);
        if y == u || self.neighbors(u).any(|x| x == y) {
            return Err(GraphError::Contract(format!(
                "identify({u},{w}): would create a loop or parallel edge"
            )));
        }
        let e = nw >> 1;
        let side = (nw & 1) as u8;
        self.detach(e);
        self.ends[e as usize][side as usize] = u;
        self.nprev[nw as usize] = self.tail[u as usize];
        self.nnext[nw as usize] = NIL;
        self.attach(e);
        self.journal.push(Mutation::Identify { u, w, edge: e, side });
        Ok(())
    }

    /// Exact inverse of the most recent [`identify`](Self::identify).
    pub fn split(&mut self, u: Vertex, w: Vertex) -> Result<Option<EdgeId>, GraphError> {
        let top = self.journal.last().copied();
        match top {
            Some(Mutation::IdentifyIsolated { u: a, w: b }) if a == u && b == w => {
                self.journal.pop();
                Ok(None)
            }
            Some(Mutation::Identify { u: a, w: b, edge, side }) if a == u && b == w => {
                self.journal.pop();
                let nd = 2 * edge + side as u32;
                self.detach(edge);
                self.ends[edge as usize][side as usize] = w;
                self.nprev[nd as usize] = NIL;
                self.nnext[nd as usize] = NIL;
                self.attach(edge);
                Ok(Some(edge))
            }
            other => Err(GraphError::OutOfOrder {
                expected: format!("Identify({u},{w})"),
                found: format!("{other:?}"),
            }),
        }
    }

    /// The pivot at the head of the list and a low neighbour found within
    /// the first `t + 1` incidence nodes.
    pub fn find_pivot_edge(&mut self) -> Option<(Vertex, Vertex, EdgeId)> {
        let v = self.pivots_head()?;
        let mut nd = self.head[v as usize];
        let mut scanned = 0;
        while nd != NIL {
            self.ops += 1;
            scanned += 1;
            let u = self.node_other(nd);
            if self.is_low(u) {
                return Some((v, u, nd >> 1));
            }
            nd = self.nnext[nd as usize];
        }
        unreachable!("pivot {v} has no low neighbour after {scanned} nodes");
    }

    // ----- analysis --------------------------------------------------------

    /// Degeneracy and a peeling order in which every vertex has at most `t`
    /// neighbours later in the order. Bucket queue, O(n + m).
    pub fn degeneracy_order(&self) -> (u32, Vec<Vertex>) {
        let n = self.n();
        let mut d: Vec<u32> = self.deg.clone();
        let maxd = d.iter().copied().max().unwrap_or(0) as usize;
        let mut bin = vec![0usize; maxd + 2];
        for &x in &d {
            bin[x as usize] += 1;
        }
        let mut start = 0;
        for b in bin.iter_mut() {
            let c = *b;
            *b = start;
            start += c;
        }
        let mut pos = vec![0usize; n];
        let mut vert = vec![0 as Vertex; n];
        for v in 0..n {
            let b = d[v] as usize;
            pos[v] = bin[b];
            vert[bin[b]] = v as Vertex;
            bin[b] += 1;
        }
        for b in (1..bin.len()).rev() {
            bin[b] = bin[b - 1];
        }
        bin[0] = 0;
        let mut t = 0;
        for i in 0..n {
            let v = vert[i];
            t = t.max(d[v as usize]);
            for u in self.neighbors(v) {
                let ui = u as usize;
                if d[ui] > d[v as usize] {
                    let du = d[ui] as usize;
                    let pu = pos[ui];
                    let pw = bin[du];
                    let w = vert[pw];
                    if w != u {
                        vert[pu] = w;
                        pos[w as usize] = pu;
                        vert[pw] = u;
                        pos[ui] = pw;
                    }
                    bin[du] += 1;
                    d[ui] -= 1;
                }
            }
        }
        (t, vert)
    }

    /// Pivot set recomputed from scratch, sorted.
    pub fn recompute_pivots(&self) -> Vec<Vertex> {
        (0..self.n() as Vertex)
            .filter(|&v| {
                let low = self.neighbors(v).filter(|&y| self.is_low(y)).count() as u32;
                low >= 1 && self.deg[v as usize] - low <= self.t
            })
            .collect()
    }

    /// Full structural audit; `Err` describes the first inconsistency.
    pub fn check_invariants(&self) -> Result<(), String> {
        for v in 0..self.n() as Vertex {
            let vi = v as usize;
            let mut count = 0;
            let mut prev = NIL;
            let mut nd = self.head[vi];
            while nd != NIL {
                if self.node_owner(nd) != v {
                    return Err(format!("node {nd} in Adj({v}) owned by {}", self.node_owner(nd)));
                }
                if !self.alive[(nd >> 1) as usize] {
                    return Err(format!("dead edge {} listed at {v}", nd >> 1));
                }
                if self.nprev[nd as usize] != prev {
                    return Err(format!("broken back link at node {nd}"));
                }
                prev = nd;
                count += 1;
                nd = self.nnext[nd as usize];
            }
            if self.tail[vi] != prev {
                return Err(format!("tail of {v} is stale"));
            }
            if count != self.deg[vi] {
                return Err(format!("deg({v}) = {} but list has {count}", self.deg[vi]));
            }
            if self.deg[vi] > self.orig[vi] {
                return Err(format!("deg({v}) exceeds original degree"));
            }
            let low = self.neighbors(v).filter(|&y| self.is_low(y)).count() as u32;
            if low != self.low[vi] {
                return Err(format!("d'({v}) = {} but recount is {low}", self.low[vi]));
            }
        }
        let alive = (0..self.ends.len()).filter(|&e| self.alive[e]).count() as u32;
        let listed: u32 = self.deg.iter().sum();
        if listed != 2 * alive {
            return Err("alive edges and adjacency sizes disagree".into());
        }
        if self.nonisolated != self.deg.iter().filter(|&&d| d > 0).count() as u32 {
            return Err("non-isolated counter is stale".into());
        }
        let mut incr = self.pivot_list();
        if incr.len() != self.pivots.len as usize {
            return Err("pivot list length mismatch".into());
        }
        incr.sort_unstable();
        if incr != self.recompute_pivots() {
            return Err("pivot list differs from recomputation".into());
        }
        Ok(())
    }

    /// Text form: `p n m` then `e u v` lines, 1-indexed with `u < v`.
    pub fn write_graph(&self) -> String {
        let edges = self.edge_list();
        let mut s = format!("p {} {}\n", self.n_input, edges.len());
        for (a, b) in edges {
            let (x, y) = if a < b { (a, b) } else { (b, a) };
            s.push_str(&format!("e {} {}\n", x + 1, y + 1));
        }
        s
    }
}

pub struct Incidences<'a> {
    g: &'a MutableGraph,
    cur: NodeId,
}

impl Iterator for Incidences<'_> {
    type Item = NodeId;
    fn next(&mut self) -> Option<NodeId> {
        if self.cur == NIL {
            return None;
        }
        let nd = self.cur;
        self.cur = self.g.nnext[nd as usize];
        Some(nd)
    }
}

/// Parse the `p n m` / `e u v` edge-list format. Lines starting with `c` are
/// comments; blank lines are ignored.
pub fn parse_graph(text: &[u8]) -> Result<MutableGraph, ParseError> {
    let text = std::str::from_utf8(text).map_err(|_| ParseError::Utf8)?;
    let mut g: Option<MutableGraph> = None;
    let mut declared = 0usize;
    let mut found = 0usize;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let s = raw.trim();
        if s.is_empty() || s.starts_with('c') {
            continue;
        }
        let mut it = s.split_ascii_whitespace();
        let tag = it.next().unwrap_or("");
        match (&mut g, tag) {
            (None, "p") => {
                let n = it.next().and_then(|x| x.parse::<u32>().ok());
                let m = it.next().and_then(|x| x.parse::<usize>().ok());
                match (n, m, it.next()) {
                    (Some(n), Some(m), None) => {
                        declared = m;
                        g = Some(MutableGraph::new(n as usize));
                    }
                    _ => return Err(ParseError::MalformedHeader { line }),
                }
            }
            (None, _) => return Err(ParseError::MissingHeader),
            (Some(_), "p") => return Err(ParseError::MalformedHeader { line }),
            (Some(gr), "e") => {
                let a = it.next().and_then(|x| x.parse::<u64>().ok());
                let b = it.next().and_then(|x| x.parse::<u64>().ok());
                let (a, b) = match (a, b, it.next()) {
                    (Some(a), Some(b), None) => (a, b),
                    _ => return Err(ParseError::MalformedEdge { line }),
                };
                let n = gr.n_input;
                for x in [a, b] {
                    if x == 0 || x > n as u64 {
                        return Err(ParseError::VertexOutOfRange { line, vertex: x, n });
                    }
                }
                let (u, v) = (a as u32 - 1, b as u32 - 1);
                match gr.add_edge(u, v) {
                    Ok(_) => found += 1,
                    Err(GraphError::SelfLoop(_)) => {
                        return Err(ParseError::SelfLoop { line, vertex: a as u32 })
                    }
                    Err(GraphError::DuplicateEdge(..)) => {
                        return Err(ParseError::DuplicateEdge { line, u: a as u32, v: b as u32 })
                    }
                    Err(_) => return Err(ParseError::MalformedEdge { line }),
                }
            }
            (Some(_), _) => return Err(ParseError::MalformedEdge { line }),
        }
    }
    let g = g.ok_or(ParseError::MissingHeader)?;
    if found != declared {
        return Err(ParseError::EdgeCount { declared, found });
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tri() -> MutableGraph {
        MutableGraph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    #[test]
    fn remove_restore_round_trip() {
        let mut g = tri();
        let before = g.clone();
        g.remove_edge(0).unwrap();
        assert_eq!((g.degree(0), g.degree(1), g.degree(2)), (1, 1, 2));
        g.check_invariants().unwrap();
        g.restore_edge(0).unwrap();
        assert_eq!(g, before);
    }

    #[test]
    fn restore_out_of_order_is_rejected() {
        let mut g = tri();
        g.remove_edge(0).unwrap();
        g.remove_edge(1).unwrap();
        assert!(matches!(g.restore_edge(0), Err(GraphError::OutOfOrder { .. })));
    }

    #[test]
    fn identify_and_split() {
        let mut g = MutableGraph::from_edges(5, &[(0, 1), (2, 3), (3, 4)]).unwrap();
        let before = g.clone();
        g.remove_edge(2).unwrap();
        g.identify(3, 1).unwrap();
        assert_eq!(g.degree(1), 0);
        assert!(g.find_edge(0, 3).is_some());
        g.check_invariants().unwrap();
        g.split(3, 1).unwrap();
        g.restore_edge(2).unwrap();
        assert_eq!(g, before);
    }

    #[test]
    fn degeneracy_small() {
        assert_eq!(tri().degeneracy_order().0, 2);
        let k4 = MutableGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(k4.degeneracy_order().0, 3);
        let p4 = MutableGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(p4.degeneracy_order().0, 1);
    }
}
