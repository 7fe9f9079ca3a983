//! Continuous-time Glauber dynamics driven by a shared marked Poisson
//! update stream, the dominating all-ones chain, deactivation/activation
//! times, and two routes to the grand-coupling time: a conservative
//! ternary certificate and an exhaustive evolution of every state.
//!
//! The discrete-time chain (uniform vertex, then a fair proposal) is
//! exposed through [`DiscreteKernel`] and [`DiscreteGlauber`]. Mixing times
//! of the two chains satisfy `t_mix(eps) <= 4 n t_mix_cont(eps / 2)`.

mod chain;
mod config;
mod coupling;
mod stream;
mod times;

pub use chain::{
    apply_update, enumerate_independent_sets, evolve_x, evolve_y, is_blocked, DiscreteGlauber,
    DiscreteKernel,
};
pub use config::{SpinConfig, Ternary, TernaryConfig};
pub use coupling::{
    coupling_certificate, coupling_report, t_coup_exhaustive, CertificateRun, CouplingReport,
    CouplingTime, DEFAULT_STATE_CAP,
};
pub use stream::{parse_stream, sample_update_stream, serialize_stream, UpdateEvent, UpdateStream};
pub use times::{is_activated, t_plus, t_plus_edge, t_plus_rel, y_value};
