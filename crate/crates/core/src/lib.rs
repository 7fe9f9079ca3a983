//! Glauber dynamics for hypergraph independent sets.
//!
//! The crate covers the sampler itself, a certificate for the grand
//! coupling together with the space-time percolation structure that
//! explains why it coalesces, exact and approximate counting of independent
//! sets, and reproducible experiment drivers. Brute-force oracles for every
//! quantity live next to the fast paths so that small instances can be
//! checked exactly.

pub mod counting;
pub mod dynamics;
pub mod error;
pub mod experiments;
pub mod hypergraph;
pub mod percolation;
pub mod rng;
pub mod stats;

pub use counting::{exact_count, fpras_count, CountEstimate, ExactCount, FprasConfig};
pub use dynamics::{
    CouplingReport, CouplingTime, SpinConfig, Ternary, TernaryConfig, UpdateEvent, UpdateStream,
};
pub use error::{Error, Result};
pub use hypergraph::{parse_hypergraph, serialize_hypergraph, Hypergraph, ValidationReport};
pub use percolation::{PercolationVariant, SiteMap, SitePath};
