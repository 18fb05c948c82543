//! Seeded random generators for the graph classes the algorithms accept.

use crate::graph::{MutableGraph, Vertex};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenError {
    #[error("no graph with these parameters found after {attempts} attempts")]
    Infeasible { attempts: u32 },
    #[error("invalid parameters: {0}")]
    Params(String),
}

const ATTEMPTS: u32 = 32;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn build(n: usize, edges: &[(Vertex, Vertex)]) -> MutableGraph {
    MutableGraph::from_edges(n, edges).expect("generator emits simple graphs")
}

/// Vertex `i > 0` attaches to between 1 and `t` distinct earlier vertices,
/// chosen uniformly among those whose degree is still below `dmax`.
pub fn gen_random_tdeg(n: usize, t: u32, dmax: u32, seed: u64) -> Result<MutableGraph, GenError> {
    if t == 0 || dmax == 0 {
        return Err(GenError::Params("t and dmax must be positive".into()));
    }
    let mut r = rng(seed);
    'attempt: for _ in 0..ATTEMPTS {
        let mut deg = vec![0u32; n];
        let mut edges = Vec::new();
        // earlier vertices with degree below dmax, in no particular order
        let mut elig: Vec<Vertex> = if n > 0 { vec![0] } else { Vec::new() };
        for i in 1..n {
            if elig.is_empty() {
                continue 'attempt;
            }
            let want = (r.random_range(1..=t) as usize).min(elig.len());
            let mut picks = rand::seq::index::sample(&mut r, elig.len(), want).into_vec();
            picks.sort_unstable_by(|a, b| b.cmp(a));
            for p in picks {
                let j = elig[p];
                edges.push((j, i as Vertex));
                deg[j as usize] += 1;
                deg[i] += 1;
                if deg[j as usize] >= dmax {
                    elig.swap_remove(p);
                }
            }
            if deg[i] < dmax {
                elig.push(i as Vertex);
            }
        }
        return Ok(build(n, &edges));
    }
    Err(GenError::Infeasible { attempts: ATTEMPTS })
}

/// A 2-degenerate graph with `Δ <= 4` and exactly `2n - 3` edges: start from
/// a triangle, then join every new vertex to two vertices of degree at most 3.
pub fn gen_maximal_2deg_maxdeg4(n: usize, seed: u64) -> Result<MutableGraph, GenError> {
    if n < 3 {
        return Err(GenError::Params("need n >= 3".into()));
    }
    let mut r = rng(seed);
    let mut deg = vec![0u32; n];
    let mut edges = vec![(0, 1), (1, 2), (0, 2)];
    // open vertices are those of degree <= 3, kept with their positions
    let mut open: Vec<Vertex> = vec![0, 1, 2];
    let mut pos: Vec<usize> = vec![usize::MAX; n];
    for (i, p) in pos.iter_mut().enumerate().take(3) {
        *p = i;
    }
    for d in deg.iter_mut().take(3) {
        *d = 2;
    }
    for x in 3..n as Vertex {
        let a = r.random_range(0..open.len());
        let mut b = r.random_range(0..open.len() - 1);
        if b >= a {
            b += 1;
        }
        let (va, vb) = (open[a], open[b]);
        for (y, z) in [(va, x), (vb, x)] {
            edges.push((y, z));
        }
        for y in [va, vb] {
            deg[y as usize] += 1;
            if deg[y as usize] == 4 {
                let p = pos[y as usize];
                let last = *open.last().unwrap();
                open.swap_remove(p);
                if last != y {
                    pos[last as usize] = p;
                }
                pos[y as usize] = usize::MAX;
            }
        }
        deg[x as usize] = 2;
        pos[x as usize] = open.len();
        open.push(x);
    }
    Ok(build(n, &edges))
}

/// Replace every edge by a path of length 2.
pub fn gen_subdivision(g: &MutableGraph) -> MutableGraph {
    let edges = g.edge_list();
    let n = g.n_input();
    let mut out = Vec::with_capacity(2 * edges.len());
    for (i, &(u, v)) in edges.iter().enumerate() {
        let s = (n + i) as Vertex;
        out.push((u, s));
        out.push((s, v));
    }
    build(n + edges.len(), &out)
}

/// Random simple cubic graph on `n` vertices (configuration model with
/// rejection). `n` must be even and at least 4.
pub fn gen_random_cubic(n: usize, seed: u64) -> Result<MutableGraph, GenError> {
    if n < 4 || n % 2 == 1 {
        return Err(GenError::Params("cubic graphs need even n >= 4".into()));
    }
    let mut r = rng(seed);
    for _ in 0..ATTEMPTS * 32 {
        let mut pts: Vec<Vertex> = (0..n as Vertex).flat_map(|v| [v, v, v]).collect();
        pts.shuffle(&mut r);
        let mut seen = std::collections::HashSet::new();
        let mut edges = Vec::with_capacity(3 * n / 2);
        let mut ok = true;
        for c in pts.chunks(2) {
            let (a, b) = (c[0].min(c[1]), c[0].max(c[1]));
            if a == b || !seen.insert((a, b)) {
                ok = false;
                break;
            }
            edges.push((a, b));
        }
        if ok {
            return Ok(build(n, &edges));
        }
    }
    Err(GenError::Infeasible { attempts: ATTEMPTS * 32 })
}

/// A partial 2-tree with `Δ <= 4`: grow a 2-tree by stacking vertices on
/// edges whose endpoints have degree at most 3, then drop each edge with
/// probability `drop`.
pub fn gen_partial2tree_maxdeg4(n: usize, drop: f64, seed: u64) -> Result<MutableGraph, GenError> {
    if n < 2 {
        return Err(GenError::Params("need n >= 2".into()));
    }
    let mut r = rng(seed);
    let mut deg = vec![0u32; n];
    let mut edges: Vec<(Vertex, Vertex)> = vec![(0, 1)];
    deg[0] = 1;
    deg[1] = 1;
    for x in 2..n as Vertex {
        let mut pick = None;
        for _ in 0..24 {
            let (a, b) = edges[r.random_range(0..edges.len())];
            if deg[a as usize] <= 3 && deg[b as usize] <= 3 {
                pick = Some((a, b));
                break;
            }
        }
        if pick.is_none() {
            let cands: Vec<_> =
                edges.iter().copied().filter(|&(a, b)| deg[a as usize] <= 3 && deg[b as usize] <= 3).collect();
            if !cands.is_empty() {
                pick = Some(cands[r.random_range(0..cands.len())]);
            }
        }
        match pick {
            Some((a, b)) => {
                edges.push((a, x));
                edges.push((b, x));
                deg[a as usize] += 1;
                deg[b as usize] += 1;
                deg[x as usize] = 2;
            }
            None => {
                let open: Vec<Vertex> = (0..x).filter(|&y| deg[y as usize] <= 3).collect();
                let y = open[r.random_range(0..open.len())];
                edges.push((y, x));
                deg[y as usize] += 1;
                deg[x as usize] = 1;
            }
        }
    }
    let kept: Vec<_> = edges.into_iter().filter(|_| !r.random_bool(drop.clamp(0.0, 1.0))).collect();
    Ok(build(n, &kept))
}

/// 2-degenerate bipartite graph with `Δ <= dmax`: vertices get random sides
/// and attach to at most two earlier vertices across the bipartition.
pub fn gen_bipartite_2deg(n: usize, dmax: u32, seed: u64) -> Result<MutableGraph, GenError> {
    let mut r = rng(seed);
    let mut side = vec![false; n];
    let mut deg = vec![0u32; n];
    let mut edges = Vec::new();
    for i in 0..n {
        side[i] = r.random_bool(0.5);
        let mut elig: Vec<Vertex> =
            (0..i as Vertex).filter(|&j| side[j as usize] != side[i] && deg[j as usize] < dmax).collect();
        let want = r.random_range(1..=2usize);
        let (chosen, _) = elig.partial_shuffle(&mut r, want);
        for &j in chosen.iter() {
            edges.push((j, i as Vertex));
            deg[j as usize] += 1;
            deg[i] += 1;
        }
    }
    Ok(build(n, &edges))
}

/// A maximal disjoint set of pairs of degree-2 vertices, in random order.
pub fn gen_random_pairs(g: &MutableGraph, seed: u64) -> crate::coloring::PairConstraints {
    let mut r = rng(seed);
    let mut deg2: Vec<Vertex> = (0..g.n() as Vertex).filter(|&v| g.degree(v) == 2).collect();
    deg2.shuffle(&mut r);
    let pairs = deg2.chunks_exact(2).map(|c| (c[0], c[1])).collect();
    crate::coloring::PairConstraints { pairs }
}

/// Remove up to `count` random edges whose removal keeps every vertex of
/// positive degree.
pub fn drop_random_edges(g: &MutableGraph, count: usize, seed: u64) -> MutableGraph {
    let mut r = rng(seed);
    let mut edges = g.edge_list();
    let mut deg = vec![0u32; g.n()];
    for &(u, v) in &edges {
        deg[u as usize] += 1;
        deg[v as usize] += 1;
    }
    for _ in 0..count {
        for _ in 0..16 {
            if edges.is_empty() {
                break;
            }
            let i = r.random_range(0..edges.len());
            let (u, v) = edges[i];
            if deg[u as usize] > 1 && deg[v as usize] > 1 {
                deg[u as usize] -= 1;
                deg[v as usize] -= 1;
                edges.swap_remove(i);
                break;
            }
        }
    }
    build(g.n_input(), &edges)
}
