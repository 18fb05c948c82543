//! Independent checks: linear-coloring verification, exact oracles and
//! graph class recognition. Nothing here shares code with the coloring
//! algorithms beyond the graph container.

use crate::coloring::{mono_vertices, LinearColoring, MonoReport, PairConstraints};
use crate::graph::{MutableGraph, Vertex, NIL};
use std::collections::{HashSet, VecDeque};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Violation {
    #[error("coloring has {found} colors for {expected} edges")]
    EdgeCount { expected: usize, found: usize },
    #[error("edge {edge} has color {color} outside 1..={k}")]
    ColorRange { edge: usize, color: u16, k: u16 },
    #[error("vertex {vertex} has degree {count} in color {color}")]
    Degree { vertex: Vertex, color: u16, count: u32 },
    #[error("color {color} contains a cycle through edge {edge}")]
    Cycle { color: u16, edge: usize },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("brute force is limited to {limit} edges, graph has {m}")]
    TooLarge { m: usize, limit: usize },
}

pub const BRUTE_FORCE_EDGE_LIMIT: usize = 14;

struct Dsu {
    parent: Vec<u32>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu { parent: (0..n as u32).collect() }
    }
    fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let p = self.parent[x as usize];
            self.parent[x as usize] = self.parent[p as usize];
            x = p;
        }
        x
    }
}

/// Union-find without path compression, so unions can be undone.
struct RollbackDsu {
    parent: Vec<u32>,
    size: Vec<u32>,
    log: Vec<u32>,
}

impl RollbackDsu {
    fn new(n: usize) -> Self {
        RollbackDsu { parent: (0..n as u32).collect(), size: vec![1; n], log: Vec::new() }
    }
    fn find(&self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            x = self.parent[x as usize];
        }
        x
    }
    /// Joins the classes of `a` and `b`, which must differ.
    fn union(&mut self, a: u32, b: u32) {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if self.size[ra as usize] < self.size[rb as usize] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb as usize] = ra;
        self.size[ra as usize] += self.size[rb as usize];
        self.log.push(rb);
    }
    fn undo(&mut self) {
        let rb = self.log.pop().expect("undo without union");
        let ra = self.parent[rb as usize];
        self.size[ra as usize] -= self.size[rb as usize];
        self.parent[rb as usize] = rb;
    }
}

/// Checks that every color class is a linear forest: each vertex has at most
/// two edges of a color and no color class contains a cycle.
pub fn verify_linear(g: &MutableGraph, c: &LinearColoring) -> Result<(), Violation> {
    let edges = g.edge_list();
    if edges.len() != c.colors.len() {
        return Err(Violation::EdgeCount { expected: edges.len(), found: c.colors.len() });
    }
    let n = g.n();
    let mut by_color: Vec<usize> = (0..edges.len()).collect();
    for (e, &col) in c.colors.iter().enumerate() {
        if col == 0 || col > c.k {
            return Err(Violation::ColorRange { edge: e, color: col, k: c.k });
        }
    }
    by_color.sort_by_key(|&e| (c.colors[e], e));
    let mut dsu = Dsu::new(n);
    let mut cnt = vec![0u32; n];
    let mut touched: Vec<u32> = Vec::new();
    let mut i = 0;
    while i < by_color.len() {
        let col = c.colors[by_color[i]];
        let mut j = i;
        while j < by_color.len() && c.colors[by_color[j]] == col {
            let e = by_color[j];
            let (u, v) = edges[e];
            for x in [u, v] {
                cnt[x as usize] += 1;
                touched.push(x);
                if cnt[x as usize] > 2 {
                    return Err(Violation::Degree { vertex: x, color: col, count: cnt[x as usize] });
                }
            }
            let (ru, rv) = (dsu.find(u), dsu.find(v));
            if ru == rv {
                return Err(Violation::Cycle { color: col, edge: e });
            }
            dsu.parent[ru as usize] = rv;
            j += 1;
        }
        for &x in &touched {
            cnt[x as usize] = 0;
            dsu.parent[x as usize] = x;
        }
        touched.clear();
        i = j;
    }
    Ok(())
}

/// Second, structurally different acyclicity check: DFS over each color class.
pub fn color_classes_acyclic(g: &MutableGraph, c: &LinearColoring) -> bool {
    let edges = g.edge_list();
    if edges.len() != c.colors.len() {
        return false;
    }
    let n = g.n();
    let k = c.max_color() as usize;
    for col in 1..=k as u16 {
        let mut adj: Vec<Vec<(u32, usize)>> = vec![Vec::new(); n];
        for (e, &(u, v)) in edges.iter().enumerate() {
            if c.colors[e] == col {
                adj[u as usize].push((v, e));
                adj[v as usize].push((u, e));
            }
        }
        let mut seen = vec![false; n];
        for s in 0..n {
            if seen[s] || adj[s].is_empty() {
                continue;
            }
            seen[s] = true;
            let mut stack = vec![(s as u32, usize::MAX)];
            while let Some((x, via)) = stack.pop() {
                for &(y, e) in &adj[x as usize] {
                    if e == via {
                        continue;
                    }
                    if seen[y as usize] {
                        return false;
                    }
                    seen[y as usize] = true;
                    stack.push((y, e));
                }
            }
        }
    }
    true
}

/// Mono vertices of the coloring and whether every pair keeps a non-mono vertex.
pub fn count_mono_and_pairs(
    g: &MutableGraph,
    c: &LinearColoring,
    pairs: Option<&PairConstraints>,
) -> (MonoReport, bool) {
    let r = mono_vertices(g, c);
    let ok = pairs.map(|p| p.violated(&r, g.n()).is_empty()).unwrap_or(true);
    (r, ok)
}

type EdgesAndIds = (Vec<(Vertex, Vertex)>, Vec<u32>);

fn oracle_edges(g: &MutableGraph) -> Result<EdgesAndIds, OracleError> {
    let edges = g.edge_list();
    if edges.len() > BRUTE_FORCE_EDGE_LIMIT {
        return Err(OracleError::TooLarge { m: edges.len(), limit: BRUTE_FORCE_EDGE_LIMIT });
    }
    let mut deg = vec![0u32; g.n()];
    for &(u, v) in &edges {
        deg[u as usize] += 1;
        deg[v as usize] += 1;
    }
    Ok((edges, deg))
}

/// Exhaustive linear arboricity for graphs with at most 14 edges: the least
/// `k <= max_colors` admitting a linear `k`-coloring, or `None`.
pub fn brute_force_chi_l(g: &MutableGraph, max_colors: u16) -> Result<Option<u16>, OracleError> {
    Ok(brute_force_coloring(g, max_colors)?.map(|c| c.k))
}

/// Like [`brute_force_chi_l`] but returns a witness coloring.
pub fn brute_force_coloring(
    g: &MutableGraph,
    max_colors: u16,
) -> Result<Option<LinearColoring>, OracleError> {
    let (edges, deg) = oracle_edges(g)?;
    if edges.is_empty() {
        return Ok(Some(LinearColoring { k: 0, colors: Vec::new() }));
    }
    let mut order: Vec<usize> = (0..edges.len()).collect();
    order.sort_by_key(|&e| {
        let (u, v) = edges[e];
        (std::cmp::Reverse(deg[u as usize].max(deg[v as usize])), e)
    });
    for k in 1..=max_colors {
        let mut s = Search::new(g.n(), k as usize);
        if s.run(&edges, &order, 0, 0) {
            return Ok(Some(LinearColoring { k, colors: s.col[..edges.len()].iter().map(|&c| c as u16 + 1).collect() }));
        }
    }
    Ok(None)
}

struct Search {
    n: usize,
    k: usize,
    cnt: Vec<u8>,
    dsu: RollbackDsu,
    col: Vec<u8>,
}

impl Search {
    fn new(n: usize, k: usize) -> Self {
        Search { n, k, cnt: vec![0; n * k], dsu: RollbackDsu::new(n * k), col: vec![0; BRUTE_FORCE_EDGE_LIMIT] }
    }

    fn run(&mut self, edges: &[(Vertex, Vertex)], order: &[usize], at: usize, used: usize) -> bool {
        if at == order.len() {
            return true;
        }
        let e = order[at];
        let (u, v) = edges[e];
        let top = (used + 1).min(self.k);
        for c in 0..top {
            let (iu, iv) = (c * self.n + u as usize, c * self.n + v as usize);
            if self.cnt[iu] >= 2 || self.cnt[iv] >= 2 {
                continue;
            }
            if self.dsu.find(iu as u32) == self.dsu.find(iv as u32) {
                continue;
            }
            self.cnt[iu] += 1;
            self.cnt[iv] += 1;
            self.dsu.union(iu as u32, iv as u32);
            self.col[e] = c as u8;
            if self.run(edges, order, at + 1, used.max(c + 1)) {
                return true;
            }
            self.dsu.undo();
            self.cnt[iu] -= 1;
            self.cnt[iv] -= 1;
        }
        false
    }
}

/// Result of a budgeted exact search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(LinearColoring),
    Infeasible,
    BudgetExhausted,
}

/// Exact search for a linear 2-coloring with at most `max_mono` mono
/// vertices and no pair of `pairs` fully mono, visiting at most `budget`
/// search nodes.
pub fn exact_two_coloring(
    g: &MutableGraph,
    max_mono: usize,
    pairs: Option<&PairConstraints>,
    budget: u64,
) -> SearchOutcome {
    let edges = g.edge_list();
    let n = g.n();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (e, &(u, v)) in edges.iter().enumerate() {
        adj[u as usize].push(e);
        adj[v as usize].push(e);
    }
    let mut order = Vec::with_capacity(edges.len());
    let mut eseen = vec![false; edges.len()];
    let mut vseen = vec![false; n];
    for s in 0..n {
        if vseen[s] {
            continue;
        }
        vseen[s] = true;
        let mut q = VecDeque::from([s]);
        while let Some(x) = q.pop_front() {
            for &e in &adj[x] {
                if !eseen[e] {
                    eseen[e] = true;
                    order.push(e);
                }
                let (a, b) = edges[e];
                let y = if a as usize == x { b } else { a } as usize;
                if !vseen[y] {
                    vseen[y] = true;
                    q.push_back(y);
                }
            }
        }
    }
    let mate = pairs.map(|p| p.mates(n)).unwrap_or_else(|| vec![NIL; n]);
    let deg: Vec<usize> = adj.iter().map(|a| a.len()).collect();
    let mut cnt = vec![[0u8; 2]; n];
    let mut dsu = [RollbackDsu::new(n), RollbackDsu::new(n)];
    let mut col = vec![0u8; edges.len()];
    let mut is_mono = vec![false; n];
    let mut mono = 0usize;
    let mut visited = 0u64;
    // choice[d] is the next color to try at depth d; 2 means exhausted
    let mut choice = vec![0u8; edges.len() + 1];
    let mut added: Vec<[u32; 2]> = vec![[NIL; 2]; edges.len()];
    let mut d = 0usize;
    loop {
        if d == order.len() {
            return SearchOutcome::Found(LinearColoring {
                k: 2,
                colors: col.iter().map(|&c| c as u16 + 1).collect(),
            });
        }
        let e = order[d];
        let (u, v) = edges[e];
        let mut advanced = false;
        while choice[d] < 2 {
            let c = choice[d] as usize;
            choice[d] += 1;
            visited += 1;
            if visited > budget {
                return SearchOutcome::BudgetExhausted;
            }
            if cnt[u as usize][c] >= 2 || cnt[v as usize][c] >= 2 {
                continue;
            }
            if dsu[c].find(u) == dsu[c].find(v) {
                continue;
            }
            let mut newm = [NIL; 2];
            let mut add = 0;
            for (slot, x) in [u, v].into_iter().enumerate() {
                if deg[x as usize] == 2 && cnt[x as usize][c] == 1 {
                    newm[slot] = x;
                    add += 1;
                }
            }
            let bad = newm.iter().any(|&x| {
                x != NIL && {
                    let m = mate[x as usize];
                    m != NIL && (is_mono[m as usize] || newm.contains(&m))
                }
            });
            if bad || mono + add > max_mono {
                continue;
            }
            cnt[u as usize][c] += 1;
            cnt[v as usize][c] += 1;
            dsu[c].union(u, v);
            col[e] = c as u8;
            for &x in &newm {
                if x != NIL {
                    is_mono[x as usize] = true;
                }
            }
            mono += add;
            added[d] = newm;
            advanced = true;
            break;
        }
        if advanced {
            d += 1;
            choice[d] = 0;
            continue;
        }
        if d == 0 {
            return SearchOutcome::Infeasible;
        }
        d -= 1;
        let e = order[d];
        let (u, v) = edges[e];
        let c = col[e] as usize;
        cnt[u as usize][c] -= 1;
        cnt[v as usize][c] -= 1;
        dsu[c].undo();
        for &x in &added[d] {
            if x != NIL {
                is_mono[x as usize] = false;
                mono -= 1;
            }
        }
        added[d] = [NIL; 2];
    }
}

/// Structural facts about a graph used to pick and check an algorithm.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassReport {
    pub n: usize,
    pub m: usize,
    pub max_degree: u32,
    pub degeneracy: u32,
    pub bipartite: bool,
    pub partial_2tree: bool,
    /// Degeneracy at most 2 and `|E| = 2|V| - 3` over non-isolated vertices.
    pub maximal_2deg: bool,
    /// `2|V| - |E|` over non-isolated vertices.
    pub f_index: i64,
}

pub fn class_checks(g: &MutableGraph) -> ClassReport {
    let edges = g.edge_list();
    let n = g.n();
    let (degeneracy, _) = g.degeneracy_order();
    let nonisolated = (0..n as Vertex).filter(|&v| g.degree(v) > 0).count() as i64;
    let f_index = 2 * nonisolated - edges.len() as i64;
    ClassReport {
        n,
        m: edges.len(),
        max_degree: g.max_degree(),
        degeneracy,
        bipartite: is_bipartite(n, &edges),
        partial_2tree: is_partial_2tree(n, &edges),
        maximal_2deg: degeneracy <= 2 && nonisolated >= 2 && f_index == 3,
        f_index,
    }
}

pub fn is_bipartite(n: usize, edges: &[(Vertex, Vertex)]) -> bool {
    let mut adj: Vec<Vec<u32>> = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u as usize].push(v);
        adj[v as usize].push(u);
    }
    let mut side = vec![u8::MAX; n];
    for s in 0..n {
        if side[s] != u8::MAX {
            continue;
        }
        side[s] = 0;
        let mut q = VecDeque::from([s as u32]);
        while let Some(x) = q.pop_front() {
            for &y in &adj[x as usize] {
                if side[y as usize] == u8::MAX {
                    side[y as usize] = 1 - side[x as usize];
                    q.push_back(y);
                } else if side[y as usize] == side[x as usize] {
                    return false;
                }
            }
        }
    }
    true
}

/// Treewidth at most 2, by series-parallel reduction: delete vertices of
/// degree at most 1 and suppress vertices of degree 2 until nothing is left.
pub fn is_partial_2tree(n: usize, edges: &[(Vertex, Vertex)]) -> bool {
    let mut adj: Vec<HashSet<u32>> = vec![HashSet::new(); n];
    for &(u, v) in edges {
        adj[u as usize].insert(v);
        adj[v as usize].insert(u);
    }
    let mut gone = vec![false; n];
    let mut q: Vec<u32> = (0..n as u32).filter(|&v| adj[v as usize].len() <= 2).collect();
    while let Some(x) = q.pop() {
        let xi = x as usize;
        if gone[xi] || adj[xi].len() > 2 {
            continue;
        }
        gone[xi] = true;
        let nb: Vec<u32> = adj[xi].drain().collect();
        for &y in &nb {
            adj[y as usize].remove(&x);
        }
        if nb.len() == 2 {
            let (a, b) = (nb[0], nb[1]);
            adj[a as usize].insert(b);
            adj[b as usize].insert(a);
        }
        for &y in &nb {
            if adj[y as usize].len() <= 2 {
                q.push(y);
            }
        }
    }
    gone.iter().all(|&g| g)
}
