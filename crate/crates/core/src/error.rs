use thiserror::Error;

use crate::dense::GrowthState;
use crate::packing::PartitionCertificate;
use crate::trifree::CaseFrame;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("edge set is not a spanning tree on {n} vertices")]
    NotATree { n: usize },
    #[error("vertex {vertex} out of range for order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("part sizes must be even and at least 2, got ({0}, {1})")]
    ParityArgument(usize, usize),
    #[error("witness does not apply: {0}")]
    BadWitness(String),
    #[error("graph has odd order {0}; no graph with all degrees odd has odd order")]
    OddOrder(usize),
    #[error("{what} is {actual}, above the brute-force cap of {limit}")]
    SizeCap { what: &'static str, limit: usize, actual: usize },
    #[error("no two edge-disjoint spanning trees: partition into {} parts has {} crossing edges", .0.parts.len(), .0.cross_edges)]
    NoTreePacking(PartitionCertificate),
    #[error("minimum degree {min_degree} is below the required {bound}")]
    MinDegreeTooLow { min_degree: usize, bound: usize },
    #[error("greedy growth stalled with {} of {} vertices covered", .0.inside_count(), .0.order())]
    GreedyStalled(Box<GrowthState>),
    #[error("clique side has a single vertex")]
    DegenerateClique,
    #[error("not a split partition of this graph: {0}")]
    InvalidSplitPartition(String),
    #[error("the split no-tree condition holds; no odd spanning tree exists")]
    ConditionHolds,
    #[error("diameter {0} is below 4")]
    DiameterTooSmall(usize),
    #[error("graph contains a triangle")]
    NotTriangleFree,
    #[error("every vertex has odd degree; use the odd-graph construction")]
    GIsOdd,
    #[error("no construction branch applies ({branch})")]
    ExhaustedCases { branch: &'static str, frame: Box<CaseFrame> },
}

impl Error {
    /// True for failures that indicate a bug rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::GreedyStalled(_) | Error::ExhaustedCases { .. })
    }
}
