//! Solvers for `f_k(G)`: the fewest vertices whose deletion leaves a graph
//! with `k` vertices of maximum degree, or with fewer than `k` vertices.
//!
//! * [`dp`] computes `f_k` exactly on forests.
//! * [`oracle`] is the exhaustive reference for small graphs of any kind.
//! * [`constructive`] produces bounded-size deletion sets for forests and
//!   graphs of girth at least five.
//! * [`bounds`] evaluates the known upper bounds and the extremal star forests.
//! * [`generate`], [`verify`] and [`bench`] drive corpus-scale checks.

pub mod bench;
pub mod bounds;
pub mod certificate;
pub mod constructive;
pub mod dp;
pub mod generate;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod rng;
pub mod verify;

pub use certificate::{Method, RemovalCertificate};
pub use dp::{compute_fk_forest, max_subforest_order, FkSolution, Value};
pub use graph::{check_fk_condition, DegreeProfile, Girth, Graph};
pub use io::{parse_graph, write_edge_list};
pub use oracle::{brute_force_fk, brute_force_subforest};
