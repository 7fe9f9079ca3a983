//! Visits to the all-ones corner by the lazy random walk on `{0,1}^m`
//! (pick a coordinate uniformly, refresh it with a fair bit) before every
//! coordinate that started at 1 has been refreshed.

use rand::Rng as _;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::rng::child_rng;
use crate::stats::Estimate;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LsrwStart {
    /// `(1, 1, ..., 1)`
    AllOnes,
    /// `(0, 1, ..., 1)`, the worst start other than all-ones.
    OneZero,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LsrwMode {
    Exact,
    MonteCarlo { trials: u64, seed: u64 },
}

/// Closed forms. From all-ones, `sum_{i<m} 2^-i m / (m - i)`: while exactly
/// `i` coordinates have been refreshed the walk sits at all-ones with
/// probability `2^-i`, for a Geometric((m-i)/m) number of steps. From
/// `(0,1,...,1)` the expectation is that value minus `2 - 2^-(m-1)`.
pub fn lsrw_exact(m: u32, start: LsrwStart) -> f64 {
    let mf = f64::from(m);
    let e: f64 = (0..m)
        .map(|i| 2f64.powi(-(i as i32)) * mf / (mf - f64::from(i)))
        .sum();
    match start {
        LsrwStart::AllOnes => e,
        LsrwStart::OneZero => e - 2.0 + 2f64.powi(-(m as i32 - 1)),
    }
}

fn simulate_once(m: u32, start: LsrwStart, rng: &mut crate::rng::Rng) -> u64 {
    let full: u64 = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
    let mut z = match start {
        LsrwStart::AllOnes => full,
        LsrwStart::OneZero => full & !1,
    };
    let mut pending = z;
    let mut visits = 0;
    while pending != 0 {
        if z == full {
            visits += 1;
        }
        let c = rng.random_range(0..m);
        let bit = 1u64 << c;
        if rng.random::<bool>() {
            z |= bit;
        } else {
            z &= !bit;
        }
        pending &= !bit;
    }
    visits
}

/// Expected number of visits to all-ones strictly before the refresh time.
/// Monte Carlo mode reports a standard error; exact mode reports zero.
pub fn lsrw_expected_visits(m: u32, start: LsrwStart, mode: LsrwMode) -> Result<Estimate> {
    if m == 0 {
        return Err(Error::InvalidArgument("dimension m must be >= 1".into()));
    }
    match mode {
        LsrwMode::Exact => Ok(Estimate {
            mean: lsrw_exact(m, start),
            stderr: 0.0,
            samples: 0,
        }),
        LsrwMode::MonteCarlo { trials, seed } => {
            if m > 64 || trials == 0 {
                return Err(Error::InvalidArgument(
                    "Monte Carlo needs 1 <= m <= 64 and at least one trial".into(),
                ));
            }
            const CHUNK: u64 = 4096;
            let chunks = trials.div_ceil(CHUNK);
            let xs: Vec<f64> = (0..chunks)
                .into_par_iter()
                .flat_map_iter(|c| {
                    let mut rng = child_rng(seed, c);
                    let len = CHUNK.min(trials - c * CHUNK);
                    (0..len)
                        .map(|_| simulate_once(m, start, &mut rng) as f64)
                        .collect::<Vec<_>>()
                })
                .collect();
            Ok(Estimate::from_samples(&xs))
        }
    }
}
