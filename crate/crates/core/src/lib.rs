//! Core algorithms for the `cwlab` workbench.
//!
//! The crate is `no_std` (it only needs `alloc`) and is split along the
//! lines of the objects it manipulates:
//!
//! * [`words`]: finitely described infinite words over `{0,1,2,3}`.
//! * [`graph`]: small simple graphs, grid builders, isomorphism, embeddings,
//!   modules and similarity classes.
//! * [`cliquewidth`]: clique-width expressions, constructive upper bounds and
//!   an exact oracle for small graphs.
//! * [`vertexminor`]: local complementation, pivots, cut-rank, exact
//!   rank-width and the grid reduction operations.
//! * [`clusters`]: cluster graphs, Menger separators and the bar-partition
//!   pipeline.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod bitset;
pub mod cliquewidth;
pub mod clusters;
pub mod error;
pub mod graph;
pub mod vertexminor;
pub mod words;

pub use error::{Error, Result};
