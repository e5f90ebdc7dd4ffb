//! Zero divisor graphs of the rings `Z_n`.
//!
//! Builds the graph on the nonzero zero divisors of `Z_n` (explicitly, or
//! compressed to its divisor-class quotient), computes minimum degree, edge
//! connectivity and vertex connectivity exactly, and compares them with the
//! closed forms that depend only on the factorization of `n`.
//!
//! ```
//! use zdgraph::{analyze, Oracle};
//!
//! let row = analyze(105, Oracle::Flow);
//! assert_eq!(row.kappa, Some(2));
//! assert!(row.is_match);
//! ```

pub mod arith;
pub mod connectivity;
pub mod error;
mod flow;
pub mod formulas;
pub mod graph;
pub mod harness;
pub mod zdg;

pub use arith::{divisors, factorize, totient, Factorization};
pub use connectivity::{
    edge_connectivity, exhaustive_edge_connectivity, exhaustive_vertex_connectivity, is_connected,
    is_edge_cut, is_vertex_cut, min_degree, vertex_connectivity, ConnectivityReport, EdgeCut,
    VertexCut, DEFAULT_EXHAUSTIVE_BUDGET,
};
pub use error::{Result, ZdgError};
pub use formulas::{
    predict_edge_connectivity, predict_min_degree, predict_vertex_connectivity, witness_cut,
    Prediction, Quantity, TheoremTag,
};
pub use graph::Graph;
pub use harness::{analyze, audit, sweep, AuditFinding, AuditSummary, Format, Oracle, SkipReason};
pub use zdg::{
    build_compressed, build_explicit, degree_profile, export_dot, CompressedZdg, DegreeProfile,
    DivisorClass, ZeroDivisorGraph,
};
