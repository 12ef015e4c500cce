//! Robust outlier screening of nearest-neighbour distances and derivation of
//! the global integer threshold.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::geometry::MinsVector;

/// Scale constant relating the MAD to a standard-deviation estimate.
pub const MODIFIED_Z_SCALE: f64 = 0.6745;

/// Companion constant for the mean-absolute-deviation fallback when the MAD
/// is zero (Iglewicz & Hoaglin).
pub const MEAN_AD_SCALE: f64 = 1.253314;

/// Default rejection threshold on |Modified Z-score|. Deliberately lenient so
/// that cluster edge points survive while distant anomalies are dropped.
pub const DEFAULT_Z_THRESHOLD: f64 = 10.0;

/// Result of a Modified Z-score pass over a value sequence.
#[derive(Debug, Clone, PartialEq)]
pub struct OutlierReport {
    pub scores: Vec<f64>,
    /// Indices with |score| above the threshold, ascending.
    pub outlier_indices: Vec<usize>,
    pub median: f64,
    pub mad: f64,
    /// True when MAD was zero and the MeanAD fallback was used.
    pub fallback_used: bool,
    /// True when removing the flagged entries would have emptied the vector,
    /// so nothing was removed.
    pub filter_skipped: bool,
}

fn median_of(sorted: &[f64]) -> f64 {
    let n = sorted.len();
    if n % 2 == 1 {
        sorted[n / 2]
    } else {
        0.5 * (sorted[n / 2 - 1] + sorted[n / 2])
    }
}

/// Modified Z-scores with the MAD-zero fallback.
///
/// score = 0.6745 (x - median) / MAD; when MAD = 0 the MeanAD estimator with
/// scale 1.253314 replaces it, and when MeanAD is also zero all scores are 0.
pub fn modified_z_scores(values: &[f64], z_threshold: f64) -> Result<OutlierReport> {
    if values.is_empty() {
        return Err(Error::InvalidInput("modified z-scores of an empty sequence".into()));
    }
    if values.iter().any(|x| !x.is_finite()) {
        return Err(Error::InvalidInput("non-finite value in z-score input".into()));
    }
    let mut sorted: Vec<f64> = values.to_vec();
    sorted.sort_unstable_by(|a, b| a.partial_cmp(b).unwrap());
    let median = median_of(&sorted);

    let mut abs_dev: Vec<f64> = values.iter().map(|x| (x - median).abs()).collect();
    abs_dev.sort_unstable_by(|a, b| a.partial_cmp(b).unwrap());
    let mad = median_of(&abs_dev);

    let mut fallback_used = false;
    let scores: Vec<f64> = if mad > 0.0 {
        values.iter().map(|x| MODIFIED_Z_SCALE * (x - median) / mad).collect()
    } else {
        fallback_used = true;
        let mean_ad = abs_dev.iter().sum::<f64>() / abs_dev.len() as f64;
        if mean_ad > 0.0 {
            values.iter().map(|x| (x - median) / (MEAN_AD_SCALE * mean_ad)).collect()
        } else {
            // Constant input: nothing can be an outlier.
            values.iter().map(|_| 0.0).collect()
        }
    };

    let outlier_indices = scores
        .iter()
        .enumerate()
        .filter(|(_, s)| s.abs() > z_threshold)
        .map(|(i, _)| i)
        .collect();

    Ok(OutlierReport {
        scores,
        outlier_indices,
        median,
        mad,
        fallback_used,
        filter_skipped: false,
    })
}

/// Screens the nearest-neighbour distances, returning the surviving entries
/// and the score report. If every entry were flagged the filter is skipped
/// so the threshold computation still has data.
pub fn filter_outlier_mins(mins: &MinsVector, z_threshold: f64) -> Result<(Vec<f64>, OutlierReport)> {
    let mut report = modified_z_scores(mins.as_slice(), z_threshold)?;
    if report.outlier_indices.len() == mins.len() {
        report.filter_skipped = true;
        return Ok((mins.as_slice().to_vec(), report));
    }
    let filtered = mins
        .as_slice()
        .iter()
        .enumerate()
        .filter(|(i, _)| report.outlier_indices.binary_search(i).is_err())
        .map(|(_, &v)| v)
        .collect();
    Ok((filtered, report))
}

/// Threshold statistics derived from the filtered nearest-neighbour minima.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ThresholdStats {
    /// Smallest strictly positive filtered minimum.
    pub sigma_opt: f64,
    /// Largest filtered minimum.
    pub l: f64,
    /// Integer threshold ceil((l / sigma_opt) / 2), always >= 1.
    pub t: u64,
}

impl ThresholdStats {
    /// Effective neighbourhood radius 2 * T * sigma_opt.
    pub fn radius(&self) -> f64 {
        2.0 * self.t as f64 * self.sigma_opt
    }
}

/// Derives sigma_opt, L and T from the filtered minima. Zero entries (exact
/// duplicates) are tolerated but cannot define sigma_opt; all-zero input is
/// rejected.
pub fn compute_threshold(filtered_mins: &[f64]) -> Result<ThresholdStats> {
    if filtered_mins.is_empty() {
        return Err(Error::InvalidInput("no minimum distances to derive a threshold from".into()));
    }
    let mut sigma_opt = f64::INFINITY;
    let mut l = f64::NEG_INFINITY;
    for &m in filtered_mins {
        if m > 0.0 && m < sigma_opt {
            sigma_opt = m;
        }
        if m > l {
            l = m;
        }
    }
    if !sigma_opt.is_finite() {
        return Err(Error::DegenerateData(
            "every point coincides with its nearest neighbour (all minimum distances are zero); \
             remove duplicate points"
                .into(),
        ));
    }
    let t = libm::ceil((l / sigma_opt) / 2.0) as u64;
    debug_assert!(t >= 1);
    Ok(ThresholdStats { sigma_opt, l, t })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    // Per-element oracle: straight transcription of the score formula.
    fn oracle_scores(values: &[f64]) -> Vec<f64> {
        let mut s = values.to_vec();
        s.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let med = median_of(&s);
        let mut dev: Vec<f64> = values.iter().map(|x| (x - med).abs()).collect();
        dev.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let mad = median_of(&dev);
        values.iter().map(|x| 0.6745 * (x - med) / mad).collect()
    }

    #[test]
    fn hand_evaluated_example() {
        let values = [1.0, 2.0, 3.0, 4.0, 100.0];
        let r = modified_z_scores(&values, 10.0).unwrap();
        assert_eq!(r.median, 3.0);
        assert_eq!(r.mad, 1.0);
        let expected = [-1.349, -0.6745, 0.0, 0.6745, 65.4265];
        for (got, want) in r.scores.iter().zip(expected) {
            assert!((got - want).abs() < 1e-12, "{got} vs {want}");
        }
        for (got, want) in r.scores.iter().zip(oracle_scores(&values)) {
            assert_eq!(*got, want);
        }
        assert_eq!(r.outlier_indices, vec![4]);
        assert!(!r.fallback_used);
    }

    #[test]
    fn constant_input_all_zero_scores() {
        let r = modified_z_scores(&[5.0, 5.0, 5.0, 5.0], 10.0).unwrap();
        assert!(r.fallback_used);
        assert!(r.scores.iter().all(|&s| s == 0.0));
        assert!(r.outlier_indices.is_empty());
    }

    #[test]
    fn half_constant_uses_mean_ad_fallback() {
        // Median and MAD both sit on the constant block; MeanAD is positive.
        let mut values = vec![1.0; 13];
        values.push(1000.0);
        let r = modified_z_scores(&values, 10.0).unwrap();
        assert!(r.fallback_used);
        assert!(r.mad == 0.0);
        // Oracle: (1000 - 1) / (1.253314 * 999/14) = 11.17...
        let expected = 999.0 / (MEAN_AD_SCALE * (999.0 / 14.0));
        assert!((r.scores[13] - expected).abs() < 1e-12);
        assert_eq!(r.outlier_indices, vec![13]);
    }

    #[test]
    fn scores_antisymmetric_for_symmetric_input() {
        let c = 10.0;
        let xs = [-3.0, -1.0, 0.0, 1.0, 3.0];
        let values: Vec<f64> = xs.iter().map(|x| c + x).collect();
        let r = modified_z_scores(&values, 10.0).unwrap();
        for i in 0..xs.len() {
            let j = xs.len() - 1 - i;
            assert!((r.scores[i] + r.scores[j]).abs() < 1e-12);
        }
    }

    #[test]
    fn empty_input_rejected() {
        assert!(matches!(modified_z_scores(&[], 10.0), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn filter_drops_flagged_entry() {
        // MAD is positive here (spread values), so the main formula applies
        // and the far entry scores well above 10.
        let mins = MinsVector(vec![0.9, 1.0, 1.0, 1.1, 50.0]);
        let (filtered, report) = filter_outlier_mins(&mins, 10.0).unwrap();
        assert_eq!(filtered, vec![0.9, 1.0, 1.0, 1.1]);
        assert_eq!(report.outlier_indices, vec![4]);
        assert!(!report.filter_skipped);
    }

    // A lone extreme among four constants cannot exceed the threshold under
    // the MeanAD fallback: the score is bounded by n / 1.253314.
    #[test]
    fn fallback_score_bounded_for_small_n() {
        let mins = MinsVector(vec![1.0, 1.0, 1.0, 1.0, 50.0]);
        let (filtered, report) = filter_outlier_mins(&mins, 10.0).unwrap();
        assert!(report.fallback_used);
        let expected = 49.0 / (MEAN_AD_SCALE * (49.0 / 5.0));
        assert!((report.scores[4] - expected).abs() < 1e-12);
        assert!(report.outlier_indices.is_empty());
        assert_eq!(filtered.len(), 5);
    }

    #[test]
    fn filter_keeps_clean_input() {
        let mins = MinsVector(vec![1.0, 1.0, 1.0, 1.0]);
        let (filtered, report) = filter_outlier_mins(&mins, 10.0).unwrap();
        assert_eq!(filtered, vec![1.0, 1.0, 1.0, 1.0]);
        assert!(report.outlier_indices.is_empty());
    }

    #[test]
    fn filter_keeps_mild_spread() {
        let mins = MinsVector(vec![0.9, 1.0, 1.1, 1.2]);
        let (filtered, report) = filter_outlier_mins(&mins, 10.0).unwrap();
        assert_eq!(filtered.len(), 4);
        assert!(report.outlier_indices.is_empty());
        assert!(report.scores.iter().all(|s| s.abs() < 10.0));
    }

    #[test]
    fn threshold_examples() {
        let s = compute_threshold(&[1.0, 1.0, 2.0]).unwrap();
        assert_eq!((s.sigma_opt, s.l, s.t), (1.0, 2.0, 1));
        let s = compute_threshold(&[0.5, 0.5, 3.0]).unwrap();
        assert_eq!((s.sigma_opt, s.l, s.t), (0.5, 3.0, 3));
        let s = compute_threshold(&[2.0, 2.0, 2.0]).unwrap();
        assert_eq!((s.sigma_opt, s.l, s.t), (2.0, 2.0, 1));
    }

    #[test]
    fn threshold_ignores_zero_entries() {
        let s = compute_threshold(&[0.0, 1.0, 4.0]).unwrap();
        assert_eq!((s.sigma_opt, s.l, s.t), (1.0, 4.0, 2));
    }

    #[test]
    fn all_zero_mins_is_degenerate() {
        let err = compute_threshold(&[0.0, 0.0]).unwrap_err();
        assert!(matches!(err, Error::DegenerateData(_)));
        assert!(alloc::format!("{err}").contains("duplicate"));
    }

    #[test]
    fn scale_invariance_of_scores() {
        let values = [0.5, 1.0, 2.0, 2.5, 30.0];
        let r1 = modified_z_scores(&values, 10.0).unwrap();
        let scaled: Vec<f64> = values.iter().map(|x| x * 1e6).collect();
        let r2 = modified_z_scores(&scaled, 10.0).unwrap();
        for (a, b) in r1.scores.iter().zip(&r2.scores) {
            assert!((a - b).abs() < 1e-9 * a.abs().max(1.0));
        }
        assert_eq!(r1.outlier_indices, r2.outlier_indices);
    }
}
