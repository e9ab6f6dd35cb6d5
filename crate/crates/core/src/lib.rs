//! Multigraded first and second cotangent cohomology of Stanley-Reisner rings,
//! with the combinatorial tooling around it: simplicial complexes, cohomology
//! of face posets, graphs and matroids.

pub mod complex;
pub mod cotangent;
pub mod graphs1d;
pub mod homology;
mod linalg;
pub mod matroids;

pub use complex::{CanonicalForm, ComplexError, SimplicialComplex, VertexSet};
pub use cotangent::{ClassDims, TDims};
pub use homology::{CohomologyDims, FieldChoice};
pub use linalg::SparseMatrix;
