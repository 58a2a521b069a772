//! Complex unit hypergraphs and their spectra.
//!
//! A complex unit hypergraph labels every vertex-edge incidence with a
//! complex number of modulus 1. This crate builds the associated operators
//! (incidence, adjacency, Kirchhoff and normalized Laplacians plus their
//! duals), computes their spectra with a self-contained dense Hermitian
//! eigensolver, applies hypergraph transformations (duality, weak deletion,
//! switching), and machine-verifies the spectral identities and eigenvalue
//! bounds these operators satisfy.
//!
//! Start from [`hypergraph::Hypergraph`], the operator constructors in
//! [`operators`], and the check suite in [`analysis`]. The `cuhg` binary and
//! the crate examples cover the same ground from the command line.

pub mod analysis;
pub mod cli;
pub mod eigen;
pub mod error;
pub mod fixtures;
pub mod generate;
pub mod hypergraph;
pub mod io;
pub mod matrix;
pub mod operators;
pub mod phase;

pub use error::Error;
pub use hypergraph::{DegreeProfile, Hypergraph, SwitchKind, SwitchingFunction};
pub use phase::Phase;

pub type Result<T> = std::result::Result<T, Error>;
