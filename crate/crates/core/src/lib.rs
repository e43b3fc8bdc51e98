//! Minimum weighted coloring of (P5, co-P5, C5)-free graphs by modular
//! decomposition.
//!
//! The pipeline decomposes a graph into a binary tree of modules and
//! quotients ([`build_tree`]), colors every leaf directly ([`prime`]) and
//! glues the colorings back together up the tree ([`merge_color`]).
//! [`oracle`] is an independent exact solver for small instances.

pub mod bench;
pub mod coloring;
pub mod generate;
pub mod graph;
pub mod instance;
pub mod modules;
pub mod oracle;
pub mod par;
pub mod prime;
pub mod recognition;
pub mod tree;

pub use coloring::{
    color, color_seeded, merge_color, solve, solve_seeded, substitute_f, validate_coloring,
    ColorClass, ColorError, WeightedColoring,
};
pub use generate::{generate, GenerateError};
pub use graph::{Graph, GraphError, WeightedGraph};
pub use instance::{parse_instance, write_instance, ParseError};
pub use modules::{is_module, maximal_strong_modules, quotient_substitute, ModuleError, Quotient};
pub use oracle::{brute_force_chi_w, brute_force_chi_w_budget, OracleError};
pub use par::Parallelism;
pub use prime::{color_prime, max_weighted_clique, strong_stable_set};
pub use recognition::{find_induced, is_in_class, is_prime, Pattern};
pub use tree::{build_tree, DecompTree, NodeId};
