//! Exact computations with edge ideals of weighted oriented graphs: vertex
//! covers and their strong/minimal classification, irreducible decompositions,
//! symbolic powers, and the invariants `α`, Waldschmidt constant, graded Betti
//! numbers and Castelnuovo-Mumford regularity.

pub mod covers;
pub mod edge_ideals;
pub mod error;
pub mod graph;
pub mod ideal;
pub mod invariants;
pub mod monomial;
pub mod symbolic;
pub mod vertex_set;

pub use error::{Error, Result};
pub use graph::{VertexKind, WeightedOrientedGraph};
pub use ideal::MonomialIdeal;
pub use monomial::Monomial;
pub use vertex_set::VertexSet;
