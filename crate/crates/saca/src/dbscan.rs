//! Reference DBSCAN (Ester et al. semantics) for head-to-head comparisons.

use alloc::vec;
use alloc::vec::Vec;

use crate::dataset::Dataset;
use crate::error::{Error, Result};
use crate::geometry::pairwise_distances;
use crate::metrics::adjusted_rand_index;

/// Classical DBSCAN. Cluster ids are 1..=k, noise is -1. Core points have at
/// least `min_pts` neighbours within `eps` (self-inclusive). Expansion
/// proceeds in point-index order, which fixes the classical border-point
/// ambiguity deterministically.
pub fn dbscan(data: &Dataset, eps: f64, min_pts: usize) -> Result<Vec<i32>> {
    if !(eps > 0.0) {
        return Err(Error::InvalidInput("eps must be positive".into()));
    }
    if min_pts < 1 {
        return Err(Error::InvalidInput("min_pts must be at least 1".into()));
    }
    let n = data.len();
    let dist = pairwise_distances(data);

    let neighborhoods: Vec<Vec<usize>> = (0..n)
        .map(|i| {
            dist.row(i)
                .iter()
                .enumerate()
                .filter(|(_, &d)| d <= eps)
                .map(|(j, _)| j)
                .collect()
        })
        .collect();
    let is_core: Vec<bool> = neighborhoods.iter().map(|nb| nb.len() >= min_pts).collect();

    let mut labels = vec![0i32; n]; // 0 = unvisited
    let mut cluster = 0i32;
    let mut queue: Vec<usize> = Vec::new();
    for start in 0..n {
        if labels[start] != 0 || !is_core[start] {
            continue;
        }
        cluster += 1;
        labels[start] = cluster;
        queue.clear();
        queue.push(start);
        let mut head = 0;
        while head < queue.len() {
            let i = queue[head];
            head += 1;
            for &j in &neighborhoods[i] {
                if labels[j] == 0 {
                    labels[j] = cluster;
                    // Only core points continue the expansion.
                    if is_core[j] {
                        queue.push(j);
                    }
                }
            }
        }
    }
    for l in labels.iter_mut() {
        if *l == 0 {
            *l = -1;
        }
    }
    Ok(labels)
}

/// Exhaustive grid search maximizing ARI against ground truth. Noise points
/// are kept as their own label for scoring, so leaving everything as noise
/// cannot win by forfeit. Ties resolve to the smaller eps, then the smaller
/// min_pts.
pub fn dbscan_grid_search(
    data: &Dataset,
    truth: &[i32],
    eps_grid: &[f64],
    min_pts_grid: &[usize],
) -> Result<(f64, usize, f64)> {
    if eps_grid.is_empty() || min_pts_grid.is_empty() {
        return Err(Error::InvalidInput("grid search needs non-empty grids".into()));
    }
    let mut best: Option<(f64, usize, f64)> = None;
    for &eps in eps_grid {
        for &min_pts in min_pts_grid {
            let labels = dbscan(data, eps, min_pts)?;
            let ari = adjusted_rand_index(truth, &labels)?;
            let better = match best {
                None => true,
                Some((be, bm, ba)) => {
                    ari > ba || (ari == ba && (eps < be || (eps == be && min_pts < bm)))
                }
            };
            if better {
                best = Some((eps, min_pts, ari));
            }
        }
    }
    Ok(best.unwrap())
}

/// Evenly spaced eps candidates spanning the data's pairwise-distance range.
pub fn eps_grid_from_data(data: &Dataset, cells: usize) -> Vec<f64> {
    let dist = pairwise_distances(data);
    let n = dist.n();
    let mut lo = f64::INFINITY;
    let mut hi = 0.0f64;
    for i in 0..n {
        for j in (i + 1)..n {
            let d = dist.get(i, j);
            if d > 0.0 && d < lo {
                lo = d;
            }
            if d > hi {
                hi = d;
            }
        }
    }
    if !lo.is_finite() {
        lo = 1e-12;
    }
    (1..=cells)
        .map(|i| lo + (hi - lo) * i as f64 / (cells + 1) as f64)
        .collect()
}
