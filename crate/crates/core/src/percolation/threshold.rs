//! The cycle-branching threshold
//! `p_c(r) = e^-k + k sum_{m >= r} (Delta k)^m P(Pois(k) >= m - 2)`
//! and the radius `R* = ceil(e Delta k^2) + 1` beyond which
//! `p_c(r) <= 2 e^-k` for every `r >= 2 R*`.

use crate::error::{Error, Result};

const MAX_TERMS: usize = 1_000_000;
const REL_TOL: f64 = 1e-18;

fn ln_factorial(j: u64) -> f64 {
    (2..=j).map(|l| (l as f64).ln()).sum()
}

/// `ln P(Pois(lambda) >= j)`, summed upward from the pmf at `j` relative to
/// that pmf, so no cancellation occurs in the far tail.
pub fn poisson_log_upper_tail(lambda: f64, j: i64) -> f64 {
    if j <= 0 {
        return 0.0;
    }
    let j = j as u64;
    let log_pmf = -lambda + j as f64 * lambda.ln() - ln_factorial(j);
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut l = j;
    loop {
        l += 1;
        term *= lambda / l as f64;
        sum += term;
        if term < 1e-17 * sum && (l as f64) > lambda {
            break;
        }
    }
    (log_pmf + sum.ln()).min(0.0)
}

pub fn r_star(max_degree: u64, k: u64) -> u64 {
    let x = std::f64::consts::E * max_degree as f64 * (k * k) as f64;
    x.ceil() as u64 + 1
}

/// Sums the series until the remaining tail, bounded geometrically by the
/// ratio of consecutive terms, falls below `1e-18` of the partial sum.
pub fn pc_value(r: u64, max_degree: u64, k: u64) -> Result<f64> {
    if k == 0 || max_degree == 0 {
        return Err(Error::InvalidArgument(
            "k and max degree must be positive".into(),
        ));
    }
    let kf = k as f64;
    let log_base = (max_degree as f64 * kf).ln();
    let mut sum = 0.0f64;
    let mut prev_log: Option<f64> = None;
    for (count, m) in (r..).enumerate() {
        if count >= MAX_TERMS {
            return Err(Error::NonConvergence(MAX_TERMS));
        }
        let log_term = m as f64 * log_base + poisson_log_upper_tail(kf, m as i64 - 2);
        if log_term > 700.0 {
            return Err(Error::Overflow(format!("p_c series term at m = {m}")));
        }
        let term = log_term.exp();
        sum += term;
        if let Some(p) = prev_log {
            let ratio = (log_term - p).exp();
            // Consecutive-term ratios shrink once m exceeds Delta k^2, so a
            // ratio below one bounds the rest of the series geometrically.
            if ratio < 1.0 && (m as f64) > max_degree as f64 * kf * kf + 2.0 {
                let tail = term * ratio / (1.0 - ratio);
                if tail <= REL_TOL * sum || sum == 0.0 {
                    break;
                }
            }
        }
        prev_log = Some(log_term);
    }
    Ok((-kf).exp() + kf * sum)
}
