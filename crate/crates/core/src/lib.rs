//! Exact divisor theory on finite simple graphs.
//!
//! Chip-firing on a graph `G` acts on integer vectors (divisors) through the
//! Laplacian `Q`. This crate computes reduced divisors, linear equivalence,
//! Baker-Norine rank and gonality by exhaustive search, alongside closed-form
//! gonality values for fans, graphs with a universal vertex and chains of
//! cycles, so that every formula can be checked against the search.
//!
//! ```
//! use gonal::{families, gonality};
//!
//! let fan = families::fan(9)?;
//! assert_eq!(gonality::fan_gonality(9)?, 4);
//! assert_eq!(gonality::gonality(&fan, 9)?.value, 4);
//! # Ok::<(), gonal::Error>(())
//! ```

#![forbid(unsafe_code)]

pub mod divisor;
pub mod enumerate;
mod error;
pub mod families;
pub mod gonality;
pub mod graph;
pub mod lattice;
pub mod reduction;
pub mod treewidth;

pub use divisor::{Divisor, FiringScript};
pub use error::{Error, Result};
pub use graph::{Graph, IntMatrix, VertexSet};
