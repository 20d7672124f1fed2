//! Exact constructions and checks for homomorphisms into Kneser, Schrijver and helical graphs,
//! graph powers, subdivisions and the chromatic parameters around them.

pub mod bitset;
pub mod caps;
pub mod chromatics;
pub mod error;
pub mod families;
pub mod graph;
pub mod harness;
pub mod hom;

pub use caps::Caps;
pub use error::{Error, Result};
pub use graph::Graph;
pub use hom::VertexMap;
