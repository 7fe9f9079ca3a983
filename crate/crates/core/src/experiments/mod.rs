//! Reproducible experiment drivers. Each driver returns an
//! [`ExperimentRecord`]: raw per-replica rows (emitted as CSV) plus a
//! summary (emitted as JSON) that can always be recomputed from the rows.
//! Replicas run in parallel under per-replica derived seeds and are kept in
//! replica order, so records do not depend on thread count.

mod fpras_accuracy;
mod mixing;
mod record;
mod sweep;
mod tv;

pub use fpras_accuracy::{
    fpras_accuracy, FprasAccuracyParams, FprasAccuracyRecord, FprasAccuracyReplica,
    FprasAccuracySummary, FprasInstanceSummary,
};
pub use mixing::{
    default_horizon, mixing_scaling, MixingReplica, MixingScalingParams, MixingScalingRecord,
    MixingSummary, MixingSummaryRow,
};
pub use record::{ExperimentRecord, Summarize, SCHEMA_VERSION};
pub use sweep::{
    percolation_sweep, PercolationCell, PercolationSweepParams, PercolationSweepRecord,
    PercolationSweepSummary,
};
pub use tv::{tv_curve_from, tv_distance_continuous, tv_distance_exact, TvPoint, TV_STATE_CAP};
