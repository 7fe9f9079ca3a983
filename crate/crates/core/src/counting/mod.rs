//! Independent-set counting: an exact branch-and-prune counter and the
//! randomized estimator built on the Glauber sampler.

mod exact;
mod fpras;

pub use exact::{
    exact_count, exact_count_exhaustive, exact_count_with_cap, ExactCount, DEFAULT_EXACT_CAP,
    EXHAUSTIVE_CAP,
};
pub use fpras::{
    burn_in_steps, estimate_marginal_zero, fpras_count, sample_parameters, CountEstimate,
    FprasConfig, MarginalEstimate,
};
