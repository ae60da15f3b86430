//! Exact zero forcing numbers and cospectral graph constructions.
//!
//! Graphs have at most 64 vertices and are stored as one bit mask per
//! adjacency row. On top of that the crate provides
//!
//! * exact characteristic polynomials of the adjacency, Laplacian and
//!   signless Laplacian matrices ([`spectra`]),
//! * standard, skew and PSD zero forcing closures with replayable
//!   certificates, and an exact minimum search ([`forcing`]),
//! * Godsil–McKay switching and the families of cospectral pairs with
//!   different zero forcing numbers ([`constructions`]),
//! * exact skew-symmetric rank and maximum nullity witnesses ([`skew_rank`]),
//! * a suite of named claims that re-checks all of the above ([`claims`]).
//!
//! ```
//! use zfforge::forcing::{zero_forcing_number, Rule};
//! use zfforge::graph::{build_named, GraphName};
//!
//! let g = build_named(GraphName::Fig1Left, &[]).unwrap();
//! assert_eq!(zero_forcing_number(&g, Rule::Standard).unwrap().value, 6);
//! ```

pub mod claims;
pub mod cli;
pub mod constructions;
pub mod error;
pub mod forcing;
pub mod graph;
pub mod poly;
pub mod skew_rank;
pub mod spectra;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
