//! Frequency distributions, power-law exponent estimation, and the
//! Bradford concentration curve.

use crate::error::AnalyticsError;
use crate::net::{NodeVector, Side, TwoModeNetwork};

/// Frequency table of an integer-valued statistic: `rows` holds
/// (value, frequency f, cumulative tail g) sorted by value; `zero_count`
/// reports nodes with value 0 separately.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistributionTable {
    pub rows: Vec<(u64, u64, u64)>,
    pub zero_count: u64,
}

impl DistributionTable {
    pub fn frequencies(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.rows.iter().map(|&(v, f, _)| (v, f))
    }

    pub fn tail(&self, value: u64) -> u64 {
        self.rows
            .iter()
            .find(|&&(v, _, _)| v >= value)
            .map_or(0, |&(_, _, g)| g)
    }
}

/// Distribution of a node statistic, rounding values to integers.
pub fn distribution(vec: &NodeVector) -> DistributionTable {
    distribution_of(vec.values().iter().map(|&v| v.round() as u64))
}

pub fn distribution_of(values: impl IntoIterator<Item = u64>) -> DistributionTable {
    let mut freq = std::collections::BTreeMap::new();
    let mut zero_count = 0;
    for v in values {
        if v == 0 {
            zero_count += 1;
        } else {
            *freq.entry(v).or_insert(0u64) += 1;
        }
    }
    let mut rows: Vec<(u64, u64, u64)> = freq.into_iter().map(|(v, f)| (v, f, 0)).collect();
    let mut tail = 0;
    for row in rows.iter_mut().rev() {
        tail += row.1;
        row.2 = tail;
    }
    DistributionTable { rows, zero_count }
}

/// Maximum-likelihood exponent of a discrete power law, using the
/// continuous approximation α = 1 + n · [Σ ln(xᵢ/(x_min − ½))]⁻¹ over
/// samples ≥ x_min.
pub fn powerlaw_alpha(samples: &[u64], x_min: u64) -> Result<f64, AnalyticsError> {
    let shift = x_min as f64 - 0.5;
    let mut n = 0u64;
    let mut spread = false;
    let mut log_sum = 0.0;
    for &x in samples.iter().filter(|&&x| x >= x_min) {
        n += 1;
        spread |= x > x_min;
        log_sum += (x as f64 / shift).ln();
    }
    if n == 0 {
        return Err(AnalyticsError::NoSamplesAboveXmin(x_min));
    }
    if !spread || log_sum <= 0.0 {
        return Err(AnalyticsError::DegenerateSample(x_min));
    }
    Ok(1.0 + n as f64 / log_sum)
}

/// Journals ranked by indexed-work count (descending, ties by label)
/// with cumulative work sums — the data behind a Bradford plot.
pub fn bradford_curve(wj: &TwoModeNetwork) -> Vec<(usize, String, u64, u64)> {
    let counts = wj.degrees(Side::Cols, false);
    let mut journals: Vec<(String, u64)> = counts
        .values()
        .iter()
        .enumerate()
        .map(|(j, &c)| (wj.cols().label(j).to_string(), c as u64))
        .collect();
    journals.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
    let mut cumulative = 0;
    journals
        .into_iter()
        .enumerate()
        .map(|(rank, (label, count))| {
            cumulative += count;
            (rank + 1, label, count, cumulative)
        })
        .collect()
}
