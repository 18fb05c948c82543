//! Scaling measurements: generate, color and verify one instance per size.

use crate::batch::{color_instance, Class};
use crate::gen::{
    gen_bipartite_2deg, gen_maximal_2deg_maxdeg4, gen_partial2tree_maxdeg4, gen_random_pairs, gen_random_tdeg,
    GenError,
};
use crate::graph::MutableGraph;
use crate::verify::verify_linear;
use std::fmt::Write as _;
use std::time::Instant;
use thiserror::Error;

/// Timed runs per size; the fastest one is reported.
pub const REPEATS: usize = 7;

#[derive(Clone, Debug, PartialEq)]
pub struct BenchRow {
    pub n: usize,
    pub m: usize,
    pub millis: f64,
    pub ops: u64,
}

impl BenchRow {
    pub fn ops_per_size(&self) -> f64 {
        self.ops as f64 / (self.n + self.m) as f64
    }
}

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("sizes must be ascending")]
    Unsorted,
    #[error("generator failed at n = {n}: {source}")]
    Gen { n: usize, source: GenError },
    #[error("n = {n}: {reason}\n{graph}")]
    Failed { n: usize, reason: String, graph: String },
}

/// The instance the benchmark uses for `class` at size `n`.
pub fn bench_instance(class: Class, n: usize, seed: u64) -> Result<MutableGraph, GenError> {
    match class {
        Class::ThreeDeg => gen_random_tdeg(n, 3, 9, seed),
        Class::TwoDeg => gen_random_tdeg(n, 2, 10, seed),
        Class::TwoDegDense => gen_maximal_2deg_maxdeg4(n, seed),
        Class::Bipartite => gen_bipartite_2deg(n, 4, seed),
        Class::P2Tree => gen_partial2tree_maxdeg4(n, 0.05, seed),
    }
}

pub fn bench_linear_scaling(sizes: &[usize], class: Class, seed: u64) -> Result<Vec<BenchRow>, BenchError> {
    if sizes.windows(2).any(|w| w[0] > w[1]) {
        return Err(BenchError::Unsorted);
    }
    let mut cases = Vec::with_capacity(sizes.len());
    for &n in sizes {
        let g = bench_instance(class, n, seed).map_err(|source| BenchError::Gen { n, source })?;
        let pairs = (class == Class::P2Tree).then(|| gen_random_pairs(&g, seed));
        cases.push((n, g, pairs));
    }
    let mut best = vec![f64::INFINITY; cases.len()];
    let mut ops = vec![0u64; cases.len()];
    // sizes take turns so that a slow stretch of the machine hits all of them
    for _ in 0..REPEATS {
        for (i, (n, g, pairs)) in cases.iter().enumerate() {
            let fail = |reason: String| BenchError::Failed { n: *n, reason, graph: g.write_graph() };
            let t0 = Instant::now();
            let out = color_instance(g, class, None, pairs.as_ref(), false).map_err(|e| fail(e.to_string()))?;
            best[i] = best[i].min(t0.elapsed().as_secs_f64() * 1e3);
            verify_linear(g, &out.coloring).map_err(|e| fail(e.to_string()))?;
            ops[i] = out.ops;
        }
    }
    Ok(cases
        .iter()
        .enumerate()
        .map(|(i, (n, g, _))| BenchRow { n: *n, m: g.edge_count(), millis: best[i], ops: ops[i] })
        .collect())
}

/// Least-squares slope of ops against `n + m`.
pub fn ops_slope(rows: &[BenchRow]) -> Option<f64> {
    if rows.len() < 2 {
        return None;
    }
    let pts: Vec<(f64, f64)> = rows.iter().map(|r| ((r.n + r.m) as f64, r.ops as f64)).collect();
    let k = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / k;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / k;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}

/// TSV with columns `n m millis ops`.
pub fn write_table(rows: &[BenchRow]) -> String {
    let mut s = String::new();
    for r in rows {
        let _ = writeln!(s, "{}\t{}\t{:.3}\t{}", r.n, r.m, r.millis, r.ops);
    }
    s
}
