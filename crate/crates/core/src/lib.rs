//! Local structure of the partition graph `G_n`.
//!
//! Vertices of `G_n` are the partitions of `n`; two are adjacent when one
//! cell of the Ferrers diagram moves from a removable corner to an addable
//! corner. Around a fixed partition everything is governed by its block
//! form: the admissible moves form a bipartite graph on corners, the
//! neighborhood is that graph's line graph, and degree and clique data
//! follow from a pair of bit vectors.
//!
//! The [`oracle`] module replays all of this against brute force.

pub mod cli;
pub mod error;
pub mod graph;
pub mod local_model;
pub mod oracle;
pub mod partition;
pub mod transfer;

pub use error::{Error, Result};
pub use graph::{
    build_partition_graph, classify_clique, cliques_through, induced_neighborhood, line_graph,
    maximal_cliques, verify_line_graph_theorem, CliqueClass, CliqueClassification, LineGraphReport,
    SimpleGraph,
};
pub use local_model::{
    admissibility_graph, degree_formula, local_clique_number, local_dimension, local_type,
    side_degrees, AdmissibilityGraph, LocalSummary, LocalType, SideDegrees,
};
pub use partition::{enumerate_partitions, partition_count, Block, Partition};
pub use transfer::{
    addable_corner_columns, apply_transfer, are_adjacent, conjugate_delta, is_admissible,
    neighbors, removable_corner_columns, Obstruction, TransferMove,
};
