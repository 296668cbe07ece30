//! Label matrices, matrix-labeled graph families, and exact checks for
//! local antimagic colorings.
//!
//! A local antimagic labeling of a graph with `m` edges is a bijection from
//! the edges onto `1..=m` such that adjacent vertices get different sums of
//! incident labels. Those sums color the vertices; the fewest colors any
//! such labeling achieves is the local antimagic chromatic number.

pub mod document;
pub mod dot;
pub mod families;
pub mod graph;
pub mod matrix;
pub mod search;
pub mod verify;

pub use document::{DocumentError, GraphDocument};
pub use families::{BuiltFamily, ColorClaim, ExpectedColors, Family, FamilyError};
pub use graph::{EdgeId, GraphError, LabeledEdge, LabeledGraph, MergePlan, VertexId, VertexName};
pub use matrix::{LabelMatrix, MatrixError, MatrixKind, ValidationReport};
pub use search::{chi_la_exact, SearchOptions, SearchOutcome, SearchResult};
pub use verify::{check_expected, induced_coloring, lower_bound, two_color_gate, ColorReport, LemmaVerdict};
