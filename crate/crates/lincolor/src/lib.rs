//! Linear-forest edge colorings of low-degeneracy graphs.

pub mod batch;
pub mod bench;
pub mod coloring;
pub mod deg4;
pub mod error;
pub mod explore;
pub mod gen;
pub mod graph;
pub mod high;
pub mod lac3;
pub mod p2tree;
pub mod state;
pub mod verify;

pub use batch::{color_instance, Class, Colored, Exec};
pub use coloring::{ColorOutcome, LinearColoring, MonoReport, PairConstraints};
pub use error::ColorError;
pub use graph::{parse_graph, EdgeId, GraphError, MutableGraph, NodeId, ParseError, Vertex, NIL};
