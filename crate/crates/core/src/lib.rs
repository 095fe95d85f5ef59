//! Graphs, derived-graph transforms, exact coloring and packing metrics for
//! e-injective coloring.
//!
//! A coloring is e-injective when the two ends of every simple path on four
//! distinct vertices get different colors. All four supported modes reduce to
//! proper coloring of a derived graph on the same vertex set, see
//! [`transform::derived_graph`].

pub mod coloring;
pub mod error;
pub mod family;
pub mod graph;
pub mod io;
pub mod metrics;
pub mod solve;
pub mod transform;

pub use coloring::{Coloring, Mode};
pub use error::{Error, Result};
pub use family::{FamilySpec, Fixture, ProductKind};
pub use graph::{Diameter, Graph, Vertex};
pub use solve::{chromatic_number, verify_coloring, Budget, SolveResult, Violation};
pub use transform::{derived_graph, three_step_graph, StructurePredicate};
