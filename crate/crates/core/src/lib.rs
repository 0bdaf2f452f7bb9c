//! Certificate-producing structural graph algorithms: disjoint-path linkages
//! with 3-planar witnesses, cycles through three vertices with Watkins–Mesner
//! obstructions, chain-of-blocks searches and constrained TK5 detection.
//!
//! Every search that can blow up takes a [`Budget`] and reports
//! [`Error::BudgetExhausted`] instead of guessing.

pub mod bitset;
pub mod blocks;
pub mod bridges;
pub mod budget;
pub mod connectivity;
pub mod cycles;
pub mod error;
mod flow;
pub mod graph;
pub mod graph6;
mod induced;
pub mod linkage;
pub mod planarity;
pub mod structure;
pub mod subdivision;

pub use bitset::{Vertex, VertexSet, MAX_VERTICES};
pub use blocks::{block_decomposition, is_biconnected, Block, BlockDecomposition};
pub use bridges::{bridges_of, Bridge, BridgeDecomposition};
pub use budget::{Budget, CancelToken, Meter};
pub use connectivity::{
    independent_fan, is_k_a_connected, max_fan_size, reroute_fan, vertex_connectivity, PathFan,
};
pub use cycles::{
    cycle_through_three, validate_obstruction, CycleOutcome, ObstructionKind, WatkinsObstruction,
};
pub use error::{Error, FanShortfall, Result};
pub use graph::{Cycle, Edge, Graph, Path, PathError, Separation};
pub use linkage::{
    find_linkage, fold_small_cuts, society_dichotomy, two_disjoint_paths, CrossingQuadruple,
    Linkage, Society, TwoPaths,
};
pub use planarity::{
    cofacial_cycle, fan_to_boundary, is_planar, p_reduction, planar_embed, plane_with_boundary,
    validate_three_planar, PlaneEmbedding, ThreePlanarWitness,
};
pub use structure::{
    chain_dichotomy_search, chain_of_blocks, check_k4_minus_roles, classify_path_search,
    cyclic_orders, planar_side, planar_with_set, separations_around, side_graph,
    validate_chain_outcome, validate_classified_path, BlockChain, ChainOutcome,
};
pub use subdivision::{
    assemble_tk5, check_tk5, find_k4_minus, find_tk5, verify_tk5, AssemblyError, K4MinusWitness,
    K4Mode, SubdivisionWitness, TKConstraints, TkError, K5_PAIRS,
};
