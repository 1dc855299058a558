pub mod decomp;
pub mod error;
pub mod family;
pub mod graph;
pub mod homology;
pub mod ideal;
pub mod io;
pub mod monomial;
pub mod resolution;
pub mod summary;

pub use error::{Error, Result};
pub use graph::{Graph, Vertex, VertexSet};
pub use monomial::{Monomial, MonomialIdeal};
