use crate::coloring::PairError;
use crate::graph::GraphError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ColorError {
    #[error("graph has degeneracy {found}, this algorithm needs at most {limit}")]
    NotDegenerate { found: u32, limit: u32 },
    #[error("maximum degree {max_degree} exceeds {limit} for k = {k}")]
    DegreeTooLarge { max_degree: u32, k: u16, limit: u32 },
    #[error("k = {0} is not supported by this algorithm")]
    BadK(u16),
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("not a partial 2-tree of max degree at most 4")]
    NotPartial2Tree,
    #[error("graph has {m} edges, fewer than 2n - 5 = {bound}")]
    TooSparse { m: usize, bound: i64 },
    #[error("invalid pairs: {0}")]
    Pairs(#[from] PairError),
    #[error("no coloring with at most one monochromatic vertex found within the search budget")]
    SearchExhausted,
    #[error("no coloring with at most one monochromatic vertex exists")]
    NoSolution,
    #[error(transparent)]
    Graph(#[from] GraphError),
}
