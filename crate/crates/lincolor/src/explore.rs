//! Exhaustive enumeration of small degenerate graphs up to isomorphism, and
//! a search for 2-degenerate graphs with `Δ ∈ {3, 4}` that have no 2-linear
//! coloring.
//!
//! Level `n` comes from level `n - 1` by adding one vertex joined to at most
//! `t` old vertices. Every `t`-degenerate graph has a vertex of degree at most
//! `t` whose removal leaves a `t`-degenerate graph, so no class member is
//! missed. Duplicates are dropped by bucketing on a 3-round color-refinement
//! hash and testing isomorphism inside a bucket.

use crate::batch::{map, Exec};
use crate::graph::{MutableGraph, Vertex};
use crate::verify::{exact_two_coloring, verify_linear, SearchOutcome};
use std::collections::HashMap;
use std::fmt::Write as _;
use thiserror::Error;

pub const MAX_VERTICES: usize = 16;
pub const EXPLORE_MAX_N: usize = 10;
pub const SEARCH_BUDGET: u64 = 50_000_000;

/// A graph on at most 16 vertices as adjacency bitmasks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SmallGraph {
    n: u8,
    adj: [u16; MAX_VERTICES],
}

impl SmallGraph {
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_VERTICES);
        SmallGraph { n: n as u8, adj: [0; MAX_VERTICES] }
    }

    pub fn from_graph(g: &MutableGraph) -> Self {
        let mut s = SmallGraph::empty(g.n());
        for (u, v) in g.edge_list() {
            s.add_edge(u as usize, v as usize);
        }
        s
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn degree(&self, v: usize) -> u32 {
        self.adj[v].count_ones()
    }

    pub fn edge_count(&self) -> usize {
        self.adj[..self.n()].iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn max_degree(&self) -> u32 {
        (0..self.n()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::new();
        for u in 0..self.n() {
            for v in u + 1..self.n() {
                if self.has_edge(u, v) {
                    out.push((u as Vertex, v as Vertex));
                }
            }
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let all = if self.n() == 16 { u16::MAX } else { (1u16 << self.n) - 1 };
        let (mut seen, mut frontier) = (1u16, 1u16);
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let new = self.adj[v] & !seen;
            seen |= new;
            frontier |= new;
        }
        seen == all
    }

    pub fn to_graph(&self) -> MutableGraph {
        MutableGraph::from_edges(self.n(), &self.edges()).expect("bitmask graphs are simple")
    }

    /// Per-vertex colors after three rounds of neighbourhood refinement.
    fn refined(&self) -> Vec<u64> {
        let n = self.n();
        let mut col: Vec<u64> = (0..n).map(|v| self.degree(v) as u64).collect();
        for _ in 0..3 {
            col = (0..n)
                .map(|v| {
                    let mut nb: Vec<u64> = (0..n).filter(|&w| self.has_edge(v, w)).map(|w| col[w]).collect();
                    nb.sort_unstable();
                    nb.iter().fold(mix(col[v] ^ 0x5bd1_e995), |h, &c| mix(h ^ c))
                })
                .collect();
        }
        col
    }

    /// Isomorphism-invariant hash.
    pub fn invariant(&self) -> u64 {
        let mut col = self.refined();
        col.sort_unstable();
        col.iter().fold(mix(self.n as u64 ^ (self.edge_count() as u64) << 8), |h, &c| mix(h ^ c))
    }

    pub fn is_isomorphic(&self, other: &SmallGraph) -> bool {
        if self.n != other.n || self.edge_count() != other.edge_count() {
            return false;
        }
        let (ca, cb) = (self.refined(), other.refined());
        let mut sa = ca.clone();
        let mut sb = cb.clone();
        sa.sort_unstable();
        sb.sort_unstable();
        if sa != sb {
            return false;
        }
        let n = self.n();
        // map vertices of self in order of increasing class size
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (sa.iter().filter(|&&c| c == ca[v]).count(), v));
        let mut map = vec![usize::MAX; n];
        let mut used = 0u16;
        self.extend_iso(other, &ca, &cb, &order, 0, &mut map, &mut used)
    }

    #[allow(clippy::too_many_arguments)]
    fn extend_iso(
        &self,
        other: &SmallGraph,
        ca: &[u64],
        cb: &[u64],
        order: &[usize],
        depth: usize,
        map: &mut [usize],
        used: &mut u16,
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let v = order[depth];
        for w in 0..other.n() {
            if *used >> w & 1 == 1 || cb[w] != ca[v] {
                continue;
            }
            let fits = order[..depth].iter().all(|&p| self.has_edge(v, p) == other.has_edge(w, map[p]));
            if !fits {
                continue;
            }
            map[v] = w;
            *used |= 1 << w;
            if self.extend_iso(other, ca, cb, order, depth + 1, map, used) {
                return true;
            }
            *used &= !(1 << w);
        }
        map[v] = usize::MAX;
        false
    }
}

fn mix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Graphs kept up to isomorphism.
#[derive(Default)]
struct Store {
    buckets: HashMap<u64, Vec<usize>>,
    graphs: Vec<SmallGraph>,
}

impl Store {
    fn insert(&mut self, g: SmallGraph, hash: u64) {
        let bucket = self.buckets.entry(hash).or_default();
        if bucket.iter().any(|&i| self.graphs[i].is_isomorphic(&g)) {
            return;
        }
        bucket.push(self.graphs.len());
        self.graphs.push(g);
    }
}

/// All `t`-degenerate graphs with `Δ <= dmax`, one per isomorphism class,
/// on 1 to `max_n` vertices; entry `i` holds the graphs on `i + 1` vertices.
/// Disconnected graphs are included.
pub fn enumerate_degenerate(max_n: usize, t: u32, dmax: u32, exec: Exec) -> Vec<Vec<SmallGraph>> {
    assert!(max_n <= MAX_VERTICES);
    let mut levels: Vec<Vec<SmallGraph>> = Vec::new();
    if max_n == 0 {
        return levels;
    }
    levels.push(vec![SmallGraph::empty(1)]);
    for n in 2..=max_n {
        let prev = levels.last().expect("level n-1 exists");
        let grown: Vec<Vec<(SmallGraph, u64)>> = map(exec, prev, |h| {
            let old = n - 1;
            let free: Vec<usize> = (0..old).filter(|&v| h.degree(v) < dmax).collect();
            let mut out = Vec::new();
            let mut pick = Vec::new();
            attach(h, old, &free, t as usize, 0, &mut pick, &mut out);
            out.into_iter().map(|g| (g, g.invariant())).collect()
        });
        let mut store = Store::default();
        for (g, hash) in grown.into_iter().flatten() {
            store.insert(g, hash);
        }
        levels.push(store.graphs);
    }
    levels
}

fn attach(
    h: &SmallGraph,
    new: usize,
    free: &[usize],
    left: usize,
    from: usize,
    pick: &mut Vec<usize>,
    out: &mut Vec<SmallGraph>,
) {
    let mut g = *h;
    g.n = new as u8 + 1;
    for &p in pick.iter() {
        g.add_edge(p, new);
    }
    out.push(g);
    if left == 0 {
        return;
    }
    for i in from..free.len() {
        pick.push(free[i]);
        attach(h, new, free, left - 1, i + 1, pick, out);
        pick.pop();
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LevelStats {
    pub n: usize,
    /// 2-degenerate graphs with `Δ <= 4`, up to isomorphism.
    pub graphs: usize,
    pub connected: usize,
    /// Connected with `Δ < 3`: paths and cycles, outside the conjecture.
    pub low_degree: usize,
    /// Connected with `Δ ∈ {3, 4}`; each was searched.
    pub searched: usize,
}

#[derive(Clone, Debug, Default)]
pub struct ExploreReport {
    pub max_n: usize,
    pub levels: Vec<LevelStats>,
    pub counterexamples: Vec<MutableGraph>,
    /// Graphs whose search ran out of budget.
    pub undecided: Vec<MutableGraph>,
}

impl ExploreReport {
    pub fn searched(&self) -> usize {
        self.levels.iter().map(|l| l.searched).sum()
    }

    /// Counterexamples in graph format, one after another, or `none <maxN>`.
    pub fn write(&self) -> String {
        if self.counterexamples.is_empty() {
            return format!("none {}\n", self.max_n);
        }
        let mut s = String::new();
        for g in &self.counterexamples {
            let _ = write!(s, "{}", g.write_graph());
        }
        s
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExploreError {
    #[error("max n must be at most {EXPLORE_MAX_N}, got {0}")]
    TooLarge(usize),
    #[error("search returned an invalid coloring: {0}")]
    BadColoring(String),
}

enum Verdict {
    Colorable,
    Counterexample,
    Undecided,
    Broken(String),
}

/// Search every connected 2-degenerate graph with `Δ ∈ {3, 4}` on at most
/// `max_n` vertices for a 2-linear coloring. Each coloring found is checked
/// by the verifier.
pub fn explore_conjecture(max_n: usize, exec: Exec) -> Result<ExploreReport, ExploreError> {
    if max_n > EXPLORE_MAX_N {
        return Err(ExploreError::TooLarge(max_n));
    }
    let levels = enumerate_degenerate(max_n, 2, 4, exec);
    let mut report = ExploreReport { max_n, ..Default::default() };
    for (i, level) in levels.iter().enumerate() {
        let mut stats = LevelStats { n: i + 1, graphs: level.len(), ..Default::default() };
        let conn: Vec<&SmallGraph> = level.iter().filter(|g| g.is_connected()).collect();
        stats.connected = conn.len();
        let (hi, lo): (Vec<&SmallGraph>, Vec<&SmallGraph>) = conn.into_iter().partition(|g| g.max_degree() >= 3);
        stats.low_degree = lo.len();
        stats.searched = hi.len();
        let verdicts = map(exec, &hi, |sg| {
            let g = sg.to_graph();
            match exact_two_coloring(&g, usize::MAX, None, SEARCH_BUDGET) {
                SearchOutcome::Found(c) => match verify_linear(&g, &c) {
                    Ok(()) => Verdict::Colorable,
                    Err(e) => Verdict::Broken(format!("{e} on\n{}", g.write_graph())),
                },
                SearchOutcome::Infeasible => Verdict::Counterexample,
                SearchOutcome::BudgetExhausted => Verdict::Undecided,
            }
        });
        for (sg, v) in hi.iter().zip(verdicts) {
            match v {
                Verdict::Colorable => {}
                Verdict::Counterexample => report.counterexamples.push(sg.to_graph()),
                Verdict::Undecided => report.undecided.push(sg.to_graph()),
                Verdict::Broken(msg) => return Err(ExploreError::BadColoring(msg)),
            }
        }
        report.levels.push(stats);
    }
    Ok(report)
}
