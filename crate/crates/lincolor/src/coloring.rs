//! Colorings of input graphs, monochromatic-vertex reports and pair
//! constraints, with their text formats.

use crate::graph::{MutableGraph, Vertex};
use std::fmt::Write as _;
use thiserror::Error;

/// One color in `1..=k` per input edge, indexed by edge id.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearColoring {
    pub k: u16,
    pub colors: Vec<u16>,
}

/// A coloring together with the work counter of the run that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColorOutcome {
    pub coloring: LinearColoring,
    pub ops: u64,
}

/// Degree-2 vertices whose two edges share a color.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MonoReport {
    pub mono: Vec<Vertex>,
}

impl MonoReport {
    pub fn count(&self) -> usize {
        self.mono.len()
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ColoringParseError {
    #[error("input is not valid UTF-8")]
    Utf8,
    #[error("missing `k <k>` header")]
    MissingHeader,
    #[error("line {line}: malformed coloring line")]
    Malformed { line: usize },
    #[error("line {line}: edge {u} {v} does not match input edge {eu} {ev}")]
    EdgeMismatch { line: usize, u: u32, v: u32, eu: u32, ev: u32 },
    #[error("coloring lists {found} edges, graph has {expected}")]
    EdgeCount { expected: usize, found: usize },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PairError {
    #[error("input is not valid UTF-8")]
    Utf8,
    #[error("line {line}: malformed pair line")]
    Malformed { line: usize },
    #[error("line {line}: vertex {vertex} out of range")]
    OutOfRange { line: usize, vertex: u64 },
    #[error("pair {u} {v}: a vertex cannot be paired with itself")]
    SelfPair { u: u32, v: u32 },
    #[error("vertex {0} appears in more than one pair")]
    NotDisjoint(u32),
    #[error("vertex {vertex} has degree {degree}, pairs need degree 2")]
    Degree { vertex: u32, degree: u32 },
}

impl LinearColoring {
    /// Colors of the input edges of `g`, read back from its edge records.
    pub fn from_graph(g: &MutableGraph, k: u16) -> Self {
        let m = (0..g.edge_count() as u32).filter(|&e| !g.is_dummy_edge(e)).count();
        LinearColoring { k, colors: (0..m as u32).map(|e| g.color(e)).collect() }
    }

    pub fn colors_used(&self) -> usize {
        let mut seen = vec![false; self.k as usize + 1];
        for &c in &self.colors {
            if (c as usize) < seen.len() {
                seen[c as usize] = true;
            }
        }
        seen.iter().skip(1).filter(|&&b| b).count()
    }

    /// Largest color that appears, 0 for an empty graph.
    pub fn max_color(&self) -> u16 {
        self.colors.iter().copied().max().unwrap_or(0)
    }

    pub fn write(&self, g: &MutableGraph, mono: Option<&MonoReport>) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "k {}", self.k);
        for (e, &c) in self.colors.iter().enumerate() {
            let [u, v] = g.ends(e as u32);
            let _ = writeln!(s, "{} {} {}", u + 1, v + 1, c);
        }
        if let Some(r) = mono {
            for &v in &r.mono {
                let _ = writeln!(s, "c mono {}", v + 1);
            }
        }
        s
    }

    /// Parse a coloring whose edge lines follow the input order of `g`.
    pub fn parse(text: &[u8], g: &MutableGraph) -> Result<Self, ColoringParseError> {
        let text = std::str::from_utf8(text).map_err(|_| ColoringParseError::Utf8)?;
        let mut k = None;
        let mut colors = Vec::new();
        let m = g.edge_list().len();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let t = raw.trim();
            if t.is_empty() || t.starts_with('c') {
                continue;
            }
            let toks: Vec<&str> = t.split_whitespace().collect();
            if k.is_none() {
                if toks.len() != 2 || toks[0] != "k" {
                    return Err(ColoringParseError::MissingHeader);
                }
                k = Some(toks[1].parse::<u16>().map_err(|_| ColoringParseError::Malformed { line })?);
                continue;
            }
            if toks.len() != 3 {
                return Err(ColoringParseError::Malformed { line });
            }
            let nums: Result<Vec<u32>, _> = toks.iter().map(|x| x.parse::<u32>()).collect();
            let nums = nums.map_err(|_| ColoringParseError::Malformed { line })?;
            let e = colors.len();
            if e >= m {
                return Err(ColoringParseError::EdgeCount { expected: m, found: e + 1 });
            }
            let [a, b] = g.ends(e as u32);
            let (u, v) = (nums[0], nums[1]);
            let ok = (u == a + 1 && v == b + 1) || (u == b + 1 && v == a + 1);
            if !ok {
                return Err(ColoringParseError::EdgeMismatch { line, u, v, eu: a + 1, ev: b + 1 });
            }
            if nums[2] > u16::MAX as u32 {
                return Err(ColoringParseError::Malformed { line });
            }
            colors.push(nums[2] as u16);
        }
        let k = k.ok_or(ColoringParseError::MissingHeader)?;
        if colors.len() != m {
            return Err(ColoringParseError::EdgeCount { expected: m, found: colors.len() });
        }
        Ok(LinearColoring { k, colors })
    }
}

/// Vertices of degree 2 whose two edges have the same color.
pub fn mono_vertices(g: &MutableGraph, c: &LinearColoring) -> MonoReport {
    let n = g.n_input();
    let mut first = vec![0u16; n];
    let mut deg = vec![0u32; n];
    let mut same = vec![false; n];
    for (e, &(u, v)) in g.edge_list().iter().enumerate() {
        let col = c.colors[e];
        for x in [u as usize, v as usize] {
            deg[x] += 1;
            if deg[x] == 1 {
                first[x] = col;
            } else if deg[x] == 2 {
                same[x] = first[x] == col;
            }
        }
    }
    MonoReport { mono: (0..n).filter(|&x| deg[x] == 2 && same[x]).map(|x| x as Vertex).collect() }
}

/// A set of disjoint vertex pairs; the coloring may make at most one vertex
/// of each pair monochromatic.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PairConstraints {
    pub pairs: Vec<(Vertex, Vertex)>,
}

impl PairConstraints {
    pub fn parse(text: &[u8], n: usize) -> Result<Self, PairError> {
        let text = std::str::from_utf8(text).map_err(|_| PairError::Utf8)?;
        let mut pairs = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let t = raw.trim();
            if t.is_empty() || t.starts_with('c') {
                continue;
            }
            let toks: Vec<&str> = t.split_whitespace().collect();
            if toks.len() != 2 {
                return Err(PairError::Malformed { line });
            }
            let mut vs = [0u32; 2];
            for (i, tok) in toks.iter().enumerate() {
                let x: u64 = tok.parse().map_err(|_| PairError::Malformed { line })?;
                if x == 0 || x > n as u64 {
                    return Err(PairError::OutOfRange { line, vertex: x });
                }
                vs[i] = (x - 1) as u32;
            }
            pairs.push((vs[0], vs[1]));
        }
        Ok(PairConstraints { pairs })
    }

    pub fn write(&self) -> String {
        let mut s = String::new();
        for &(u, v) in &self.pairs {
            let _ = writeln!(s, "{} {}", u + 1, v + 1);
        }
        s
    }

    /// Pairs must be disjoint and consist of distinct degree-2 vertices.
    pub fn validate(&self, g: &MutableGraph) -> Result<(), PairError> {
        let mut used = vec![false; g.n()];
        for &(u, v) in &self.pairs {
            if u == v {
                return Err(PairError::SelfPair { u: u + 1, v: v + 1 });
            }
            for x in [u, v] {
                if x as usize >= g.n() {
                    return Err(PairError::OutOfRange { line: 0, vertex: x as u64 + 1 });
                }
                if used[x as usize] {
                    return Err(PairError::NotDisjoint(x + 1));
                }
                used[x as usize] = true;
                if g.degree(x) != 2 {
                    return Err(PairError::Degree { vertex: x + 1, degree: g.degree(x) });
                }
            }
        }
        Ok(())
    }

    /// `mate[v]` is the partner of `v`, or `NIL`.
    pub fn mates(&self, n: usize) -> Vec<Vertex> {
        let mut m = vec![crate::graph::NIL; n];
        for &(u, v) in &self.pairs {
            m[u as usize] = v;
            m[v as usize] = u;
        }
        m
    }

    /// Pairs with both vertices monochromatic.
    pub fn violated(&self, mono: &MonoReport, n: usize) -> Vec<(Vertex, Vertex)> {
        let mut is_mono = vec![false; n];
        for &v in &mono.mono {
            is_mono[v as usize] = true;
        }
        self.pairs.iter().copied().filter(|&(u, v)| is_mono[u as usize] && is_mono[v as usize]).collect()
    }
}
