//! Independence number, core and corona of graphs with at most two odd
//! cycles, computed through the critical-set decomposition, together with
//! exact brute-force counterparts for checking them.

pub mod corecorona;
pub mod graph;
pub mod larson;
pub mod matching;
pub mod oddcycles;
pub mod oracle;

pub use corecorona::{analyze, AnalysisError, CoreCoronaReport, SumPrediction};
pub use graph::io::{Format, ParseError};
pub use graph::{Bipartition, Cycle, Graph, GraphError, Vertex, VertexMap, VertexSet};
pub use larson::LarsonDecomposition;
pub use matching::Matching;
pub use oddcycles::{CycleKind, OddCycleProfile};
