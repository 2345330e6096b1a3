//! Regular spanning subgraphs of balanced bipartite graphs.
//!
//! The crate is split along the lines of the underlying argument:
//!
//! * [`graph`] holds the balanced bipartite graph type and its generators.
//! * [`factor`] finds f-factors constructively with a max-flow reduction and
//!   computes the largest degree of a regular spanning subgraph.
//! * [`gale_ryser`] checks the Gale–Ryser f-factor conditions by exhaustive
//!   enumeration, reporting a violating pair of subsets when they fail.
//! * [`certificate`] evaluates the minimum-degree bound on the integer grid in
//!   exact arithmetic. A passing grid certifies that *every* graph with the
//!   given minimum degree has the regular factor.
//! * [`extremal`] builds the four-block graphs that show the bound is nearly
//!   tight, together with an exact edge-counting cap.
//!
//! Everything here is `no_std` with `alloc`. File formats and the command line
//! live in the `regfactor-cli` crate.

#![no_std]

extern crate alloc;

pub mod certificate;
mod error;
pub mod extremal;
pub mod factor;
pub mod flow;
pub mod gale_ryser;
pub mod graph;

pub use certificate::{
    discriminant_scaled, g_scaled, grid_check, p_poly_scaled, rho_ceil, rho_floor,
    theorem_certificate, CertificateInstance, CertificateRoute, GridVerdict, TheoremCertificate,
};
pub use error::{Error, Result};
pub use extremal::{
    build_extremal, counting_upper_bound, derive_params, tightness_report, ExtremalParams,
    ExtremalReport,
};
pub use factor::{
    decompose_into_matchings, find_f_factor, find_regular_factor, max_regular_degree,
    max_regular_factor, FactorSpec,
};
pub use gale_ryser::{check_condition, check_condition_full, check_sum_condition, GaleRyserVerdict};
pub use graph::{circulant_regular, random_min_degree, BipartiteGraph, Side, Vertex, VertexSubset};
