//! Entropic Wasserstein barycenters on discrete measures.
//!
//! The crate is organized in four layers:
//!
//! - [`core_ot`]: discrete optimal transport primitives — entropy, transport
//!   cost, a log-domain Sinkhorn solver and an exact min-cost-flow solver
//!   used as an oracle.
//! - [`barycenter`]: fixed-support entropic barycenter solver (iterative
//!   Bregman projections in log domain) with first-order and dual-potential
//!   verifiers, plus cost-perturbation stability diagnostics.
//! - [`geometry`]: manifold sampling, random geometric graphs, hop-count
//!   shortest paths and geodesic cost estimation `(h * SP)^p`.
//! - [`harness`]: configuration, experiment sweeps and CSV emission tying
//!   the other layers together behind the `geobary` CLI.

pub mod barycenter;
pub mod core_ot;
pub mod error;
pub mod geometry;
pub mod harness;

pub use error::{Error, Result};
