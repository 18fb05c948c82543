//! One front door per graph class, and a map over independent instances.
//!
//! With the `parallel` feature (on by default) [`Exec::Parallel`] spreads
//! instances over the rayon pool; without it every batch runs in order on
//! the calling thread. Each instance is still colored by a single thread.

use crate::coloring::{mono_vertices, LinearColoring, MonoReport, PairConstraints};
use crate::deg4::{color_2deg_dense, color_bipartite_2deg};
use crate::error::ColorError;
use crate::graph::MutableGraph;
use crate::high::{color_2deg_high, high_k};
use crate::lac3::{color_3deg, default_k};
use crate::p2tree::color_partial2tree;
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Class {
    ThreeDeg,
    TwoDeg,
    TwoDegDense,
    Bipartite,
    P2Tree,
}

impl Class {
    pub const ALL: [Class; 5] = [Class::ThreeDeg, Class::TwoDeg, Class::TwoDegDense, Class::Bipartite, Class::P2Tree];

    pub fn name(self) -> &'static str {
        match self {
            Class::ThreeDeg => "3deg",
            Class::TwoDeg => "2deg",
            Class::TwoDegDense => "2deg-dense",
            Class::Bipartite => "bipartite",
            Class::P2Tree => "p2tree",
        }
    }

    /// The `k` used when the caller does not ask for one.
    pub fn default_k(self, g: &MutableGraph) -> u16 {
        match self {
            Class::ThreeDeg => default_k(g.max_degree()),
            Class::TwoDeg => high_k(g.max_degree()),
            _ => 2,
        }
    }
}

impl fmt::Display for Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Class {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Class::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| format!("unknown class `{s}` (expected 3deg, 2deg, 2deg-dense, bipartite or p2tree)"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Colored {
    pub coloring: LinearColoring,
    pub mono: MonoReport,
    pub ops: u64,
}

/// Color `g` with the algorithm for `class`. `k` may raise the number of
/// colors for the `3deg` and `2deg` classes; the other classes use exactly 2.
/// `pairs` only applies to `p2tree`.
pub fn color_instance(
    g: &MutableGraph,
    class: Class,
    k: Option<u16>,
    pairs: Option<&PairConstraints>,
    audit: bool,
) -> Result<Colored, ColorError> {
    let base = class.default_k(g);
    let k = k.unwrap_or(base);
    let (out, mono) = match class {
        Class::ThreeDeg | Class::TwoDeg => {
            if k < base {
                return Err(ColorError::BadK(k));
            }
            let out = if class == Class::ThreeDeg { color_3deg(g, k, audit)? } else { color_2deg_high(g, k, audit)? };
            let mono = mono_vertices(g, &out.coloring);
            (out, mono)
        }
        _ if k != 2 => return Err(ColorError::BadK(k)),
        Class::TwoDegDense => {
            let d = color_2deg_dense(g, audit)?;
            (d.outcome, d.mono)
        }
        Class::Bipartite => color_bipartite_2deg(g, audit)?,
        Class::P2Tree => color_partial2tree(g, pairs.unwrap_or(&PairConstraints::default()), audit)?,
    };
    Ok(Colored { coloring: out.coloring, mono, ops: out.ops })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    Parallel,
}

impl Default for Exec {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Exec::Parallel
        } else {
            Exec::Sequential
        }
    }
}

/// `items.iter().map(f)`, in input order.
pub fn map<T, R, F>(exec: Exec, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Exec::Parallel => {
            use rayon::prelude::*;
            items.par_iter().map(f).collect()
        }
        _ => items.iter().map(f).collect(),
    }
}

/// `f(seed)` for every seed in `seeds`, in order.
pub fn map_seeds<R, F>(exec: Exec, seeds: std::ops::Range<u64>, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(u64) -> R + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Exec::Parallel => {
            use rayon::prelude::*;
            seeds.into_par_iter().map(f).collect()
        }
        _ => seeds.map(f).collect(),
    }
}

/// Color every graph of a batch with the same class settings.
pub fn color_batch(
    exec: Exec,
    graphs: &[MutableGraph],
    class: Class,
    k: Option<u16>,
) -> Vec<Result<Colored, ColorError>> {
    map(exec, graphs, |g| color_instance(g, class, k, None, false))
}
