//! Exact restricted edge-connectivity for direct-product graphs.
//!
//! The crate builds the graph families and direct products used in the
//! study of `lambda_3(G x C_n)`, `lambda_3(G x K_n)` and `lambda_3(G x T_n)`,
//! computes `lambda_k` for `k <= 3` by a max-flow method and by an
//! exhaustive oracle, and checks closed-form predictions against both.

pub mod connectivity;
pub mod count;
pub mod edgelist;
pub mod error;
pub mod generators;
pub mod graph;
pub mod product;
pub mod theorems;

pub use connectivity::{
    classify, enumerate_min_k_cuts, has_lambda3_cut, lambda_k, lambda_k_bruteforce,
    max_flow_min_cut, min_boundary_over_sizes, xi, xi3, ClassificationReport, CutResult,
    Decision, DEFAULT_CEILING,
};
pub use count::ExtendedCount;
pub use edgelist::{parse_edge_list, write_edge_list};
pub use error::{Error, Result};
pub use generators::{generate, random_regular, Family, FamilySpec};
pub use graph::{DegreeStats, Edge, Graph, VertexSet};
pub use product::{direct_product, inter_layer_multiplicity, ProductGraph};
