//! Ground truth at the vertex level: explicit graphs, a dense symmetric
//! eigensolver and exact evolution `e^{-iAt}|root⟩`.

mod cayley;
mod eigen;
mod evolve;
mod graph;
mod quantum;

pub use cayley::{cayley_graph, MAX_CAYLEY_SYMMETRIC};
pub use eigen::{jacobi_eigen, SymmetricEigen};
pub use evolve::{check_stratum_uniformity, exact_walk, stratum_series, UniformityReport, VertexEvolution};
pub use graph::{bfs_strata, build_graph, DistancePartition, VertexGraph, MAX_VERTICES};
pub use quantum::{quantum_decomposition, QuantumDecomposition};
