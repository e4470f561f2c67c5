//! Knot mosaics: `n x n` matrices of the eleven standard tiles.
//!
//! The crate validates mosaics, follows strands through them, extracts
//! planar diagram codes, evaluates the Kauffman bracket and Jones
//! polynomial by a state sum over crossing smoothings, builds rational
//! tangle mosaics, and generates or enumerates suitably connected mosaics.
//!
//! The `parallel` feature (on by default) evaluates state sums, enumeration
//! subtrees and generation attempts with rayon. Results are identical with
//! the feature disabled.

pub mod error;
pub mod generator;
pub mod invariants;
pub mod io;
pub mod mosaic;
mod par;
pub mod pdcode;
pub mod render;
pub mod tangles;
pub mod tiles;
pub mod traversal;

pub use error::{MosaicError, Result};
pub use mosaic::{Mosaic, PartialMosaic, Position};
pub use par::Execution;
pub use tiles::{Direction, Side, TileId};
