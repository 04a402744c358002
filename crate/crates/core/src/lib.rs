//! Exact J-colouring analysis of small simple graphs.
//!
//! The crate computes chromatic numbers, rainbow neighbourhood counts, J
//! and J* numbers of connected graphs, their per-component (componenta)
//! maxima J^c and J*^c for arbitrary graphs, and rainbow connectivity under
//! vertex colourings. Everything is exhaustive and intended for graphs of
//! at most a few dozen vertices; the theorem checker sweeps all
//! non-isomorphic graphs up to order 8.

pub mod analysis;
pub mod checker;
pub mod colouring;
pub mod connectivity;
pub mod dot;
mod error;
pub mod families;
pub mod graph;
pub mod io;
pub mod jcolouring;
pub mod rainbow;
mod search;

pub use colouring::{
    chromatic_number, convention_colouring, enumerate_proper_colourings, inverse_colouring,
    is_proper, Chromatic, Colouring,
};
pub use connectivity::{
    is_chi_rainbow_connected, is_jc_rainbow_connected, min_rainbow_path_lengths,
    rainbow_path_exists, ChiMode, ConnectivityReport, JcMode, RainbowWitness,
};
pub use error::{Error, Result};
pub use families::{enumerate_graphs, Family, FamilyOracle, OracleValue};
pub use graph::{decompose, degree_profile, ComponentDecomposition, DegreeProfile, Graph};
pub use jcolouring::{
    is_j_colouring, is_j_star_colouring, j_number, j_star_number, jc_number, jstarc_number,
    maximise_colouring, minimise_colouring, ComponentaResult, JResult,
};
pub use rainbow::{rainbow_neighbourhood_number, yields_rainbow, RainbowMode, RainbowReport};
