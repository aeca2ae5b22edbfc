//! Exact computations with Leibniz algebras: cohomology, Ext groups between
//! simple bimodules and Gabriel quivers, over the rationals.

pub mod algebra;
pub mod bimodule;
pub mod cli;
pub mod cohomology;
pub mod error;
pub mod ext;
pub mod linear;
pub mod quiver;
pub mod repsl2;

pub use error::{Error, Result};
pub use linear::{Mat, Scalar, SubspaceBasis};
