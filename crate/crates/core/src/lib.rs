//! Cubic partial cubes from simplicial arrangements of lines and pseudolines.
//!
//! The pipeline runs from an arrangement (exact integer lines, a wiring
//! diagram, or one of the generated families) to its cell complex on the
//! sphere, then to the dual graph, which is checked for the partial-cube
//! property. Zonotopal drawings, tiling gluing and zonohedra live in
//! [`tiling`] and [`zonohedron`].

#![allow(clippy::needless_range_loop)]

pub mod brute;
pub mod complex;
pub mod duals;
pub mod error;
pub mod families;
pub mod geom;
pub mod graph;
pub mod io;
pub mod partialcube;
pub mod pseudoline;
pub mod reproduce;
pub mod tiling;
pub mod zonohedron;

pub use complex::{CrossingStructure, Port, SphereComplex};
pub use error::{Error, Result};
pub use geom::HomCoord;
pub use graph::{Label, LabeledGraph};
