//! Measures how close a network's shortest-path metric is to a tree metric.
//!
//! The crate ingests an edge list, keeps the largest connected component,
//! and offers:
//!
//! - [`graph`]: compressed adjacency storage, BFS, exact diameter/radius,
//!   connectivity and biconnectivity, pair sampling;
//! - [`layering`]: layering partitions, cluster-diameter and cluster-radius;
//! - [`trees`]: the canonic tree built from a layering partition, its
//!   uniformly weighted and Steiner-augmented variants, exact tree
//!   distances and compact distance labels;
//! - [`distortion`]: the six embedding-distortion measures, the distortion
//!   CDF, and the tree-distortion lower bound;
//! - [`hyperbolicity`]: exact four-point hyperbolicity with biconnected
//!   decomposition and pruning, and quadruplet delta histograms;
//! - [`decomposition`]: the tree-decomposition obtained by expanding the
//!   layering tree, validity checking, breadth/length, tree-breadth bounds;
//! - [`estimation`]: iterated-BFS diameter/radius estimation.
//!
//! All graphs are finite, unweighted, undirected, loopless and simple.
//! Distances are hop counts stored in 16-bit cells; tree distances and
//! hyperbolicity values are kept in half-units so that half-integral
//! quantities stay exact integers.

pub mod decomposition;
pub mod distortion;
pub mod estimation;
pub mod graph;
pub mod hyperbolicity;
pub mod layering;
pub mod trees;

/// Errors produced by ingestion and by operations with checked preconditions.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("no edges in input")]
    NoEdges,
    #[error("line {line}: expected 2 tokens, found {found}")]
    MalformedLine { line: usize, found: usize },
    #[error("operation needs at least {need} vertices, graph has {have}")]
    TooFewVertices { need: usize, have: usize },
    #[error("uniform tree weight must be at least 1")]
    ZeroWeight,
    #[error("node {0} is a Steiner point; graph-pair queries take graph vertices only")]
    SteinerQuery(u32),
    #[error("tree-distortion lower bound needs a report against the Steiner-augmented tree, got {got}")]
    WrongTreeKind { got: &'static str },
    #[error("invalid tree-decomposition: {0}")]
    InvalidDecomposition(String),
    #[error("distance matrix for n={n} needs {bytes} bytes, limit is {limit}")]
    MatrixTooLarge { n: usize, bytes: usize, limit: usize },
    #[error("exhaustive quadruplet enumeration is limited to n <= {limit}, graph has {n}")]
    ExhaustiveTooLarge { n: usize, limit: usize },
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("corrupt file: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;
