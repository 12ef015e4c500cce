//! Internal and external cluster-validity indices.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::dataset::Dataset;
use crate::error::{Error, Result};
use crate::geometry::{self, pairwise_distances};

/// The six indices, bundled. External metrics are present only when ground
/// truth was supplied; points labelled -1 are dropped first and counted.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct EvaluationReport {
    pub silhouette: f64,
    pub calinski_harabasz: f64,
    pub davies_bouldin: f64,
    #[cfg_attr(feature = "serde", serde(skip_serializing_if = "Option::is_none"))]
    pub ari: Option<f64>,
    #[cfg_attr(feature = "serde", serde(skip_serializing_if = "Option::is_none"))]
    pub ami: Option<f64>,
    #[cfg_attr(feature = "serde", serde(skip_serializing_if = "Option::is_none"))]
    pub completeness: Option<f64>,
    pub excluded_points: usize,
}

fn check_lengths(truth: &[i32], predicted: &[i32]) -> Result<()> {
    if truth.len() != predicted.len() {
        return Err(Error::InvalidInput(alloc::format!(
            "label length mismatch: {} vs {}",
            truth.len(),
            predicted.len()
        )));
    }
    if truth.len() < 2 {
        return Err(Error::InvalidInput("need at least 2 labelled points".into()));
    }
    Ok(())
}

/// Cluster sizes and the sorted list of distinct labels.
fn class_counts(labels: &[i32]) -> BTreeMap<i32, u64> {
    let mut counts = BTreeMap::new();
    for &l in labels {
        *counts.entry(l).or_insert(0u64) += 1;
    }
    counts
}

fn contingency(truth: &[i32], predicted: &[i32]) -> BTreeMap<(i32, i32), u64> {
    let mut table = BTreeMap::new();
    for (&t, &p) in truth.iter().zip(predicted) {
        *table.entry((t, p)).or_insert(0u64) += 1;
    }
    table
}

fn comb2(n: u64) -> f64 {
    n as f64 * (n as f64 - 1.0) / 2.0
}

/// Pair-counting Adjusted Rand Index. 1 for identical partitions, ~0 for
/// independent random ones. Degenerate cases where the correction term
/// equals the maximum (both partitions trivial) return 1.
pub fn adjusted_rand_index(truth: &[i32], predicted: &[i32]) -> Result<f64> {
    check_lengths(truth, predicted)?;
    let n = truth.len() as u64;
    let table = contingency(truth, predicted);
    let rows = class_counts(truth);
    let cols = class_counts(predicted);

    let index: f64 = table.values().map(|&c| comb2(c)).sum();
    let sum_rows: f64 = rows.values().map(|&c| comb2(c)).sum();
    let sum_cols: f64 = cols.values().map(|&c| comb2(c)).sum();
    let expected = sum_rows * sum_cols / comb2(n);
    let max_index = 0.5 * (sum_rows + sum_cols);
    if (max_index - expected).abs() < f64::EPSILON {
        return Ok(1.0);
    }
    Ok((index - expected) / (max_index - expected))
}

fn entropy(counts: &BTreeMap<i32, u64>, n: u64) -> f64 {
    let n = n as f64;
    counts
        .values()
        .filter(|&&c| c > 0)
        .map(|&c| {
            let p = c as f64 / n;
            -p * libm::log(p)
        })
        .sum()
}

fn mutual_information(
    table: &BTreeMap<(i32, i32), u64>,
    rows: &BTreeMap<i32, u64>,
    cols: &BTreeMap<i32, u64>,
    n: u64,
) -> f64 {
    let n = n as f64;
    let mut mi = 0.0;
    for (&(t, p), &c) in table {
        if c == 0 {
            continue;
        }
        let joint = c as f64 / n;
        let pt = rows[&t] as f64 / n;
        let pp = cols[&p] as f64 / n;
        mi += joint * libm::log(joint / (pt * pp));
    }
    mi
}

fn ln_factorial(x: u64) -> f64 {
    libm::lgamma(x as f64 + 1.0)
}

/// Expected mutual information between two labellings under the
/// hypergeometric model of random contingency tables with fixed marginals.
fn expected_mutual_information(rows: &[u64], cols: &[u64], n: u64) -> f64 {
    let nf = n as f64;
    let ln_n = ln_factorial(n);
    let mut emi = 0.0;
    for &a in rows {
        for &b in cols {
            let start = 1.max((a + b).saturating_sub(n));
            let end = a.min(b);
            for nij in start..=end {
                let term_ln = ln_factorial(a) + ln_factorial(b) + ln_factorial(n - a)
                    + ln_factorial(n - b)
                    - ln_n
                    - ln_factorial(nij)
                    - ln_factorial(a - nij)
                    - ln_factorial(b - nij)
                    - ln_factorial(n + nij - a - b);
                let weight = nij as f64 / nf;
                let log_ratio = libm::log(nf * nij as f64 / (a as f64 * b as f64));
                emi += weight * log_ratio * libm::exp(term_ln);
            }
        }
    }
    emi
}

/// Adjusted Mutual Information with the hypergeometric expected-MI
/// correction, normalized by max(H(truth), H(predicted)).
pub fn adjusted_mutual_information(truth: &[i32], predicted: &[i32]) -> Result<f64> {
    check_lengths(truth, predicted)?;
    let n = truth.len() as u64;
    let rows = class_counts(truth);
    let cols = class_counts(predicted);
    if rows.len() == 1 && cols.len() == 1 {
        return Ok(1.0);
    }
    let table = contingency(truth, predicted);
    // Identical partitions up to renaming score exactly 1; the general
    // formula can lose that through a near-zero denominator.
    if table.len() == rows.len() && table.len() == cols.len() {
        return Ok(1.0);
    }
    let h_true = entropy(&rows, n);
    let h_pred = entropy(&cols, n);
    let mi = mutual_information(&table, &rows, &cols, n);
    let row_counts: Vec<u64> = rows.values().copied().collect();
    let col_counts: Vec<u64> = cols.values().copied().collect();
    let emi = expected_mutual_information(&row_counts, &col_counts, n);
    let normalizer = h_true.max(h_pred);
    let mut denominator = normalizer - emi;
    // Clamp away from zero, preserving sign, as the usual implementations do.
    if denominator >= 0.0 {
        denominator = denominator.max(f64::EPSILON);
    } else {
        denominator = denominator.min(-f64::EPSILON);
    }
    Ok((mi - emi) / denominator)
}

/// Completeness: 1 - H(predicted | truth) / H(predicted), with the
/// convention that a labelling with zero entropy is fully complete.
pub fn completeness(truth: &[i32], predicted: &[i32]) -> Result<f64> {
    check_lengths(truth, predicted)?;
    let n = truth.len() as u64;
    let cols = class_counts(predicted);
    let h_pred = entropy(&cols, n);
    if h_pred == 0.0 {
        return Ok(1.0);
    }
    let rows = class_counts(truth);
    let table = contingency(truth, predicted);
    let nf = n as f64;
    let mut h_pred_given_true = 0.0;
    for (&(t, _), &c) in &table {
        let joint = c as f64 / nf;
        let pt = rows[&t] as f64 / nf;
        h_pred_given_true -= joint * libm::log(joint / pt);
    }
    Ok(1.0 - h_pred_given_true / h_pred)
}

struct Grouping {
    /// Sorted distinct cluster ids.
    ids: Vec<i32>,
    /// For each point, position of its cluster id in `ids`.
    cluster_of: Vec<usize>,
    sizes: Vec<usize>,
}

fn group(labels: &[i32]) -> Grouping {
    let mut ids: Vec<i32> = labels.to_vec();
    ids.sort_unstable();
    ids.dedup();
    let cluster_of: Vec<usize> =
        labels.iter().map(|l| ids.binary_search(l).unwrap()).collect();
    let mut sizes = vec![0usize; ids.len()];
    for &c in &cluster_of {
        sizes[c] += 1;
    }
    Grouping { ids, cluster_of, sizes }
}

fn require_clusters(labels: &[i32], data: &Dataset) -> Result<Grouping> {
    if labels.len() != data.len() {
        return Err(Error::InvalidInput("label length does not match dataset".into()));
    }
    let g = group(labels);
    if g.ids.len() < 2 {
        return Err(Error::MetricUndefined(
            "index needs at least 2 clusters".into(),
        ));
    }
    Ok(g)
}

/// Mean silhouette coefficient. Singleton clusters contribute 0, as does the
/// degenerate a = b = 0 case.
pub fn silhouette(data: &Dataset, labels: &[i32]) -> Result<f64> {
    let g = require_clusters(labels, data)?;
    let n = data.len();
    let k = g.ids.len();
    let dist = pairwise_distances(data);

    let mut total = 0.0;
    let mut sums = vec![0.0; k];
    for i in 0..n {
        for s in sums.iter_mut() {
            *s = 0.0;
        }
        let row = dist.row(i);
        for (j, &d) in row.iter().enumerate() {
            sums[g.cluster_of[j]] += d;
        }
        let own = g.cluster_of[i];
        if g.sizes[own] == 1 {
            continue; // contributes 0
        }
        let a = sums[own] / (g.sizes[own] - 1) as f64;
        let mut b = f64::INFINITY;
        for c in 0..k {
            if c != own && g.sizes[c] > 0 {
                b = b.min(sums[c] / g.sizes[c] as f64);
            }
        }
        let denom = a.max(b);
        if denom > 0.0 {
            total += (b - a) / denom;
        }
    }
    Ok(total / n as f64)
}

fn centroids_of(data: &Dataset, g: &Grouping) -> Vec<Vec<f64>> {
    let dim = data.dim();
    let mut means = vec![vec![0.0; dim]; g.ids.len()];
    for (i, &c) in g.cluster_of.iter().enumerate() {
        for (m, &x) in means[c].iter_mut().zip(data.point(i)) {
            *m += x;
        }
    }
    for (mean, &size) in means.iter_mut().zip(&g.sizes) {
        for m in mean.iter_mut() {
            *m /= size as f64;
        }
    }
    means
}

/// Calinski-Harabasz index: between-cluster over within-cluster dispersion,
/// each normalized by its degrees of freedom. Zero within-dispersion yields
/// the +infinity sentinel.
pub fn calinski_harabasz(data: &Dataset, labels: &[i32]) -> Result<f64> {
    let g = require_clusters(labels, data)?;
    let n = data.len();
    let k = g.ids.len();
    if n == k {
        return Err(Error::MetricUndefined(
            "Calinski-Harabasz undefined when every cluster is a singleton".into(),
        ));
    }
    let dim = data.dim();
    let means = centroids_of(data, &g);
    let mut grand = vec![0.0; dim];
    for p in data.points() {
        for (gm, &x) in grand.iter_mut().zip(p) {
            *gm += x;
        }
    }
    for gm in grand.iter_mut() {
        *gm /= n as f64;
    }

    let mut within = 0.0;
    for (i, &c) in g.cluster_of.iter().enumerate() {
        for (x, m) in data.point(i).iter().zip(&means[c]) {
            within += (x - m) * (x - m);
        }
    }
    let mut between = 0.0;
    for (c, mean) in means.iter().enumerate() {
        let mut sq = 0.0;
        for (m, gm) in mean.iter().zip(&grand) {
            sq += (m - gm) * (m - gm);
        }
        between += g.sizes[c] as f64 * sq;
    }
    if within == 0.0 {
        return Ok(f64::INFINITY);
    }
    Ok((between / (k - 1) as f64) / (within / (n - k) as f64))
}

/// Davies-Bouldin index: mean over clusters of the worst
/// (s_i + s_j) / d(mu_i, mu_j) ratio. Coincident centroids make the pair's
/// ratio +infinity.
pub fn davies_bouldin(data: &Dataset, labels: &[i32]) -> Result<f64> {
    let g = require_clusters(labels, data)?;
    let k = g.ids.len();
    let means = centroids_of(data, &g);
    let mut scatter = vec![0.0; k];
    for (i, &c) in g.cluster_of.iter().enumerate() {
        scatter[c] += geometry::euclidean(data.point(i), &means[c]);
    }
    for (s, &size) in scatter.iter_mut().zip(&g.sizes) {
        *s /= size as f64;
    }
    let mut total = 0.0;
    for i in 0..k {
        let mut worst: f64 = 0.0;
        for j in 0..k {
            if i == j {
                continue;
            }
            let sep = geometry::euclidean(&means[i], &means[j]);
            let ratio = if sep > 0.0 {
                (scatter[i] + scatter[j]) / sep
            } else {
                f64::INFINITY
            };
            worst = worst.max(ratio);
        }
        total += worst;
    }
    Ok(total / k as f64)
}

/// Computes the full report: internal indices always, external ones when
/// ground truth is attached to the dataset. Points labelled -1 are dropped
/// and counted in `excluded_points`.
pub fn evaluate(data: &Dataset, labels: &[i32]) -> Result<EvaluationReport> {
    if labels.len() != data.len() {
        return Err(Error::InvalidInput("label length does not match dataset".into()));
    }
    let keep: Vec<usize> =
        (0..labels.len()).filter(|&i| labels[i] != -1).collect();
    let excluded_points = labels.len() - keep.len();
    if keep.len() < 2 {
        return Err(Error::MetricUndefined(
            "fewer than 2 points remain after dropping excluded ones".into(),
        ));
    }
    let sub_points: Vec<Vec<f64>> = keep.iter().map(|&i| data.point(i).to_vec()).collect();
    let sub_truth = data
        .truth_labels()
        .map(|t| keep.iter().map(|&i| t[i]).collect::<Vec<i32>>());
    let sub_data = Dataset::new(sub_points, sub_truth.clone())?;
    let sub_labels: Vec<i32> = keep.iter().map(|&i| labels[i]).collect();

    let silhouette = silhouette(&sub_data, &sub_labels)?;
    let calinski_harabasz = calinski_harabasz(&sub_data, &sub_labels)?;
    let davies_bouldin = davies_bouldin(&sub_data, &sub_labels)?;
    let (ari, ami, comp) = match &sub_truth {
        Some(truth) => (
            Some(adjusted_rand_index(truth, &sub_labels)?),
            Some(adjusted_mutual_information(truth, &sub_labels)?),
            Some(completeness(truth, &sub_labels)?),
        ),
        None => (None, None, None),
    };
    Ok(EvaluationReport {
        silhouette,
        calinski_harabasz,
        davies_bouldin,
        ari,
        ami,
        completeness: comp,
        excluded_points,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SplitMix64;

    #[test]
    fn ari_identical_is_one() {
        let l = [0, 0, 1, 1, 2, 2];
        assert_eq!(adjusted_rand_index(&l, &l).unwrap(), 1.0);
    }

    // All 6 pairs enumerated by hand: no pair agrees in both partitions
    // beyond chance, giving exactly -0.5.
    #[test]
    fn ari_crossed_pairs() {
        let truth = [0, 0, 1, 1];
        let predicted = [0, 1, 0, 1];
        let ari = adjusted_rand_index(&truth, &predicted).unwrap();
        assert!((ari - (-0.5)).abs() < 1e-12, "{ari}");
    }

    #[test]
    fn ari_invariant_under_renaming() {
        let truth = [0, 0, 1, 1, 2];
        let predicted = [7, 7, 3, 3, 9];
        assert!((adjusted_rand_index(&truth, &predicted).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn ari_length_mismatch() {
        assert!(adjusted_rand_index(&[0, 1], &[0, 1, 2]).is_err());
    }

    #[test]
    fn ami_identical_is_one() {
        let l = [0, 0, 1, 1, 2, 2];
        assert!((adjusted_mutual_information(&l, &l).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn ami_constant_prediction_is_nonpositive() {
        let truth = [0, 0, 1, 1, 2, 2];
        let predicted = [5, 5, 5, 5, 5, 5];
        let ami = adjusted_mutual_information(&truth, &predicted).unwrap();
        assert!(ami <= 1e-9, "{ami}");
    }

    #[test]
    fn completeness_single_cluster_is_one() {
        let truth = [0, 0, 1, 1];
        let predicted = [3, 3, 3, 3];
        assert_eq!(completeness(&truth, &predicted).unwrap(), 1.0);
    }

    #[test]
    fn completeness_identical_is_one() {
        let l = [0, 1, 1, 2];
        assert!((completeness(&l, &l).unwrap() - 1.0).abs() < 1e-12);
    }

    // Entropy-formula oracle: H(pred|truth) = ln 2, H(pred) = ln 4,
    // completeness = 1 - ln2/ln4 = 0.5. Each class is split in two, so the
    // labelling is only half complete.
    #[test]
    fn completeness_split_classes() {
        let truth = [0, 0, 1, 1];
        let predicted = [0, 1, 2, 3];
        let c = completeness(&truth, &predicted).unwrap();
        assert!((c - 0.5).abs() < 1e-12, "{c}");
    }

    #[test]
    fn silhouette_two_tight_far_pairs() {
        let data = Dataset::new(
            alloc::vec![
                alloc::vec![0.0],
                alloc::vec![0.1],
                alloc::vec![10.0],
                alloc::vec![10.1]
            ],
            None,
        )
        .unwrap();
        let s = silhouette(&data, &[1, 1, 2, 2]).unwrap();
        assert!(s > 0.98, "{s}");
    }

    #[test]
    fn silhouette_identical_points_zero() {
        let data = Dataset::new(
            alloc::vec![alloc::vec![1.0], alloc::vec![1.0], alloc::vec![1.0], alloc::vec![1.0]],
            None,
        )
        .unwrap();
        let s = silhouette(&data, &[1, 1, 2, 2]).unwrap();
        assert_eq!(s, 0.0);
    }

    #[test]
    fn silhouette_single_cluster_undefined() {
        let data = Dataset::new(alloc::vec![alloc::vec![0.0], alloc::vec![1.0]], None).unwrap();
        assert!(matches!(
            silhouette(&data, &[1, 1]),
            Err(Error::MetricUndefined(_))
        ));
    }

    #[test]
    fn silhouette_random_labels_near_zero() {
        let mut rng = SplitMix64::new(12);
        let pts: Vec<Vec<f64>> =
            (0..80).map(|_| alloc::vec![rng.next_f64(), rng.next_f64()]).collect();
        let data = Dataset::new(pts, None).unwrap();
        let mut acc = 0.0;
        let trials = 20;
        for _ in 0..trials {
            let labels: Vec<i32> = (0..80).map(|_| rng.next_index(3) as i32).collect();
            acc += silhouette(&data, &labels).unwrap();
        }
        assert!((acc / trials as f64).abs() < 0.2);
    }

    #[test]
    fn ch_separated_beats_random() {
        let mut rng = SplitMix64::new(2);
        let mut pts = Vec::new();
        let mut labels = Vec::new();
        for c in 0..2 {
            for _ in 0..30 {
                pts.push(alloc::vec![
                    c as f64 * 50.0 + rng.next_gaussian(),
                    rng.next_gaussian()
                ]);
                labels.push(c as i32);
            }
        }
        let data = Dataset::new(pts, None).unwrap();
        let good = calinski_harabasz(&data, &labels).unwrap();
        let random: Vec<i32> = (0..60).map(|_| rng.next_index(2) as i32).collect();
        let bad = calinski_harabasz(&data, &random).unwrap();
        assert!(good > 10.0 * bad, "good {good}, bad {bad}");
    }

    #[test]
    fn ch_zero_within_dispersion_is_infinite() {
        let data = Dataset::new(
            alloc::vec![alloc::vec![0.0], alloc::vec![0.0], alloc::vec![5.0], alloc::vec![5.0]],
            None,
        )
        .unwrap();
        assert_eq!(calinski_harabasz(&data, &[1, 1, 2, 2]).unwrap(), f64::INFINITY);
    }

    #[test]
    fn ch_all_singletons_undefined() {
        let data = Dataset::new(alloc::vec![alloc::vec![0.0], alloc::vec![1.0]], None).unwrap();
        assert!(calinski_harabasz(&data, &[1, 2]).is_err());
    }

    #[test]
    fn db_point_mass_clusters_zero() {
        let data = Dataset::new(
            alloc::vec![alloc::vec![0.0], alloc::vec![0.0], alloc::vec![5.0], alloc::vec![5.0]],
            None,
        )
        .unwrap();
        assert_eq!(davies_bouldin(&data, &[1, 1, 2, 2]).unwrap(), 0.0);
    }

    #[test]
    fn db_coincident_centroids_infinite() {
        // Two clusters with the same mean.
        let data = Dataset::new(
            alloc::vec![
                alloc::vec![-1.0, 0.0],
                alloc::vec![1.0, 0.0],
                alloc::vec![0.0, -1.0],
                alloc::vec![0.0, 1.0]
            ],
            None,
        )
        .unwrap();
        assert_eq!(davies_bouldin(&data, &[1, 1, 2, 2]).unwrap(), f64::INFINITY);
    }

    // Straight transcription of the definition as an oracle.
    #[test]
    fn db_matches_formula_oracle() {
        let mut rng = SplitMix64::new(77);
        let mut pts = Vec::new();
        let mut labels = Vec::new();
        for c in 0..3 {
            for _ in 0..12 {
                pts.push(alloc::vec![
                    c as f64 * 8.0 + rng.next_gaussian(),
                    rng.next_gaussian()
                ]);
                labels.push(c as i32 + 1);
            }
        }
        let data = Dataset::new(pts.clone(), None).unwrap();
        let got = davies_bouldin(&data, &labels).unwrap();

        let k = 3usize;
        let mut mu = alloc::vec![alloc::vec![0.0; 2]; k];
        let mut count = alloc::vec![0.0; k];
        for (p, &l) in pts.iter().zip(&labels) {
            let c = (l - 1) as usize;
            mu[c][0] += p[0];
            mu[c][1] += p[1];
            count[c] += 1.0;
        }
        for c in 0..k {
            mu[c][0] /= count[c];
            mu[c][1] /= count[c];
        }
        let mut s = alloc::vec![0.0; k];
        for (p, &l) in pts.iter().zip(&labels) {
            let c = (l - 1) as usize;
            s[c] += libm::sqrt(
                (p[0] - mu[c][0]) * (p[0] - mu[c][0]) + (p[1] - mu[c][1]) * (p[1] - mu[c][1]),
            );
        }
        for c in 0..k {
            s[c] /= count[c];
        }
        let mut expected = 0.0;
        for i in 0..k {
            let mut worst: f64 = 0.0;
            for j in 0..k {
                if i != j {
                    let sep = libm::sqrt(
                        (mu[i][0] - mu[j][0]) * (mu[i][0] - mu[j][0])
                            + (mu[i][1] - mu[j][1]) * (mu[i][1] - mu[j][1]),
                    );
                    worst = worst.max((s[i] + s[j]) / sep);
                }
            }
            expected += worst;
        }
        expected /= k as f64;
        assert!((got - expected).abs() < 1e-9);
    }

    #[test]
    fn expected_ari_near_zero_monte_carlo() {
        let mut rng = SplitMix64::new(100);
        let trials = 1000;
        let n = 100;
        let mut acc = 0.0;
        for _ in 0..trials {
            let truth: Vec<i32> = (0..n).map(|_| rng.next_index(4) as i32).collect();
            let predicted: Vec<i32> = (0..n).map(|_| rng.next_index(4) as i32).collect();
            acc += adjusted_rand_index(&truth, &predicted).unwrap();
        }
        assert!((acc / trials as f64).abs() < 0.05);
    }

    #[test]
    fn expected_ami_near_zero_monte_carlo() {
        let mut rng = SplitMix64::new(200);
        let trials = 200;
        let n = 100;
        let mut acc = 0.0;
        for _ in 0..trials {
            let truth: Vec<i32> = (0..n).map(|_| rng.next_index(4) as i32).collect();
            let predicted: Vec<i32> = (0..n).map(|_| rng.next_index(4) as i32).collect();
            acc += adjusted_mutual_information(&truth, &predicted).unwrap();
        }
        assert!((acc / trials as f64).abs() < 0.05);
    }

    #[test]
    fn evaluate_drops_excluded_points() {
        let data = Dataset::new(
            alloc::vec![
                alloc::vec![0.0],
                alloc::vec![0.1],
                alloc::vec![10.0],
                alloc::vec![10.1],
                alloc::vec![500.0]
            ],
            Some(alloc::vec![0, 0, 1, 1, 2]),
        )
        .unwrap();
        let report = evaluate(&data, &[1, 1, 2, 2, -1]).unwrap();
        assert_eq!(report.excluded_points, 1);
        assert!((report.ari.unwrap() - 1.0).abs() < 1e-12);
        assert!(report.silhouette > 0.9);
    }

    #[test]
    fn evaluate_without_truth_has_no_external_metrics() {
        let data = Dataset::new(
            alloc::vec![alloc::vec![0.0], alloc::vec![0.1], alloc::vec![9.0], alloc::vec![9.1]],
            None,
        )
        .unwrap();
        let report = evaluate(&data, &[1, 1, 2, 2]).unwrap();
        assert!(report.ari.is_none());
        assert!(report.ami.is_none());
        assert!(report.completeness.is_none());
    }
}
