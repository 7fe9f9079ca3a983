//! Instances shared by the criterion benchmarks in `benches/`.

use hypermix_core::hypergraph::generate_random_regular;
use hypermix_core::Hypergraph;

/// Sizes for the certificate benchmark, on 2-regular 5-uniform instances.
pub const CERTIFICATE_SIZES: [usize; 3] = [100, 400, 1600];

/// Sizes for the exact-count benchmark, on 2-regular 3-uniform instances.
pub const EXACT_SIZES: [usize; 3] = [12, 18, 24];

pub fn regular(n: usize, d: usize, k: usize) -> Hypergraph {
    generate_random_regular(n, d, k, 1).expect("benchmark instance")
}

pub fn horizon(n: usize) -> f64 {
    20.0 * (n as f64 + 1.0).ln() + 40.0
}
