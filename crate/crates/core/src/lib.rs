//! Submodular cones, generalized permutahedra and fertile compositions.

pub mod arith;
pub mod cli;
pub mod error;
pub mod fixtures;
pub mod grower;
pub mod io;
pub mod polymat;
pub mod raycone;
pub mod seeds;
pub mod submod;

pub use arith::Rat;
pub use error::{Error, Result};
pub use submod::{Point, SetFunction, Subset, TightTriple};
