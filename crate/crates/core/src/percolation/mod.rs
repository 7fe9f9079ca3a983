//! Space-time percolation on hyperedge × time-block sites.
//!
//! Time is cut into blocks `[T_i, T_{i+1})` with `T_i = i k`. A site
//! `(a, i)` is *active* if `i = 0` or `a` is `T_{i-1}`-activated during
//! its block, *susceptible* if some vertex of `a` is not updated during
//! its block, and *bad* if it is active or sits on top of an active site
//! through a run of susceptible ones. Whenever the grand coupling has not
//! coalesced by `T_{M+1}`, an oriented all-bad path crosses rows `0..=M`.

mod estimate;
mod lsrw;
mod paths;
mod sites;
mod threshold;

pub use estimate::{
    activation_bound, estimate_activation_prob, susceptibility_bound, ActivationEstimate,
};
pub use lsrw::{lsrw_exact, lsrw_expected_visits, LsrwMode, LsrwStart};
pub use paths::{
    find_bad_path, minimize_path, path_count_bound, PercolationVariant, SiteAdjacency, SitePath,
};
pub use sites::{classify_sites, site_active, site_susceptible, Site, SiteMap};
pub use threshold::{pc_value, poisson_log_upper_tail, r_star};
