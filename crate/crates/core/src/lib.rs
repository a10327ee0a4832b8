//! Kernelization for paw-free completion and paw-free edge deletion.
//!
//! A paw is a triangle with a pendant vertex attached to one of its corners.
//! Given a graph and a budget `k`, the completion problem asks for at most
//! `k` edge additions, and the deletion problem for at most `k` edge
//! deletions, that leave no induced paw.
//!
//! - [`kernelize_completion`] shrinks a completion instance to at most `38k`
//!   vertices or decides it outright.
//! - [`kernelize_deletion`] shrinks a deletion instance to `O(k^4)` vertices,
//!   with the explicit bound in [`DeletionBound`].
//! - [`solve_exact`] and [`solve_by_enumeration`] are independent exact
//!   solvers used to check both kernels.
//!
//! ```
//! use pawfree::{kernelize_completion, Graph, Instance, Outcome, Problem};
//!
//! // a triangle with a pendant, budget 1
//! let g = Graph::from_edges(4, [(0, 1), (0, 2), (1, 2), (2, 3)]);
//! let report = kernelize_completion(&Instance::new(g, 1, Problem::Completion)).unwrap();
//! assert_eq!(report.outcome, Outcome::Reduced);
//! ```

pub mod completion;
pub mod decomposition;
pub mod deletion;
pub mod error;
pub mod generate;
pub mod graph;
pub mod harness;
pub mod instance;
pub mod io;
pub mod oracle;
mod reduction;
pub mod report;
pub mod structure;

pub use completion::{build_completion_modulator, kernelize_completion};
pub use decomposition::{classify_components, verify_modulator, ComponentClass, ComponentKind, Modulator};
pub use deletion::{build_paw_packing, kernelize_deletion, PawPacking};
pub use error::{DecompositionError, GenerateError, OracleError, ParseError, RuleError};
pub use generate::{generate_random_instance, PlantedItem, PlantedSpec};
pub use graph::{edge, vertex_set, Edge, Graph, VertexMap, VertexSet};
pub use harness::{kernelize, run_equivalence, EquivConfig, EquivStats};
pub use instance::{Instance, Problem};
pub use io::{parse_instance, write_instance};
pub use oracle::{minimum_solution, solve_by_enumeration, solve_exact, Solution};
pub use reduction::{rule_drop_paw_free_components, RuleApplication};
pub use report::{
    Certificate, CompletionCertificate, Decision, DeletionBound, DeletionCertificate, InstanceSize, KernelReport,
    MultipartiteShape, Outcome, Rule, RuleCounts,
};
pub use structure::{enumerate_paws, false_twin_classes, is_paw_free, Paw};
