//! The selective-attention clustering pipeline: in-radius neighbour graph,
//! dense/sparse partition, breadth-first core labelling and noise
//! reassignment.

use alloc::vec;
use alloc::vec::Vec;

use crate::dataset::Dataset;
use crate::error::{Error, Result};
use crate::geometry::{self, DistanceMatrix};
use crate::outlier::{self, ThresholdStats, DEFAULT_Z_THRESHOLD};
use crate::rng::SplitMix64;

/// Tuning knobs for a clustering run.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SacaConfig {
    /// Attention Selectivity Coefficient: points with neighbour weight <= c
    /// are pruned before core formation. Higher values reveal finer
    /// sub-structure.
    pub c: u64,
    /// Reassign pruned points to the nearest core centroid instead of the
    /// nearest core point. Suited to convex clusters.
    pub use_center: bool,
    /// Modified Z-score rejection threshold for the outlier screen.
    pub z_threshold: f64,
    /// Keep outlier-flagged points out of the final clusters (label -1).
    pub exclude_outliers: bool,
    /// Optional seed for a shuffled core-labelling order. `None` uses the
    /// lowest unlabelled index, which is already deterministic.
    pub seed: Option<u64>,
}

impl Default for SacaConfig {
    fn default() -> Self {
        Self {
            c: 1,
            use_center: false,
            z_threshold: DEFAULT_Z_THRESHOLD,
            exclude_outliers: false,
            seed: None,
        }
    }
}

impl SacaConfig {
    fn validate(&self) -> Result<()> {
        if self.c < 1 {
            return Err(Error::InvalidInput("attention selectivity coefficient must be >= 1".into()));
        }
        if !(self.z_threshold > 0.0) {
            return Err(Error::InvalidInput("z-threshold must be positive".into()));
        }
        Ok(())
    }
}

/// In-radius neighbour sets (self-inclusive) and their cardinalities.
#[derive(Debug, Clone, PartialEq)]
pub struct NeighborGraph {
    neighbors: Vec<Vec<usize>>,
}

impl NeighborGraph {
    pub fn n(&self) -> usize {
        self.neighbors.len()
    }

    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.neighbors[i]
    }

    pub fn weight(&self, i: usize) -> u64 {
        self.neighbors[i].len() as u64
    }

    pub fn weights(&self) -> Vec<u64> {
        self.neighbors.iter().map(|n| n.len() as u64).collect()
    }
}

/// Final labelling plus the intermediate structure a caller may want to
/// inspect: which points were pruned, which formed cores, and the core
/// centroids when centroid reassignment was used.
#[derive(Debug, Clone, PartialEq)]
pub struct ClusterAssignment {
    /// Cluster ids 1..=k, or -1 for permanently excluded points.
    pub labels: Vec<i32>,
    /// Points pruned in the dense/sparse partition, before reassignment.
    pub pre_reassignment_noise: Vec<usize>,
    /// Points labelled during core formation.
    pub core_indices: Vec<usize>,
    pub num_clusters: usize,
    /// Mean coordinates of the core points of each cluster, indexed by
    /// cluster id - 1. Populated when centroid reassignment ran.
    pub centroids: Option<Vec<Vec<f64>>>,
}

/// Builds the neighbour sets: j is a neighbour of i when
/// (d_ij / sigma_opt) / 2 < T. The diagonal always satisfies the strict
/// predicate, so every point is its own neighbour and weights are >= 1.
pub fn build_neighbor_graph(dist: &DistanceMatrix, stats: &ThresholdStats) -> NeighborGraph {
    let n = dist.n();
    let t = stats.t as f64;
    let mut neighbors = Vec::with_capacity(n);
    for i in 0..n {
        let row = dist.row(i);
        let mut set = Vec::new();
        for (j, &d) in row.iter().enumerate() {
            if (d / stats.sigma_opt) / 2.0 < t {
                set.push(j);
            }
        }
        neighbors.push(set);
    }
    NeighborGraph { neighbors }
}

/// Splits indices into dense cores (weight > c) and sparse noise
/// (weight <= c). An empty core set aborts with the `Decrease C` diagnostic.
pub fn partition_dense_sparse(graph: &NeighborGraph, c: u64) -> Result<(Vec<usize>, Vec<usize>)> {
    let mut core = Vec::new();
    let mut noise = Vec::new();
    for i in 0..graph.n() {
        if graph.weight(i) <= c {
            noise.push(i);
        } else {
            core.push(i);
        }
    }
    if core.is_empty() {
        return Err(Error::DecreaseC);
    }
    Ok((core, noise))
}

/// Labels the connected components of the neighbour graph restricted to the
/// core set via breadth-first expansion. Non-core points keep label 0.
///
/// With `seed` set, the order in which unlabelled seeds are picked is
/// shuffled; labels are then renumbered by first occurrence over point
/// indices, so the partition (and the final ids) are seed-independent.
pub fn label_cores(graph: &NeighborGraph, core: &[usize], seed: Option<u64>) -> Vec<i32> {
    let n = graph.n();
    let mut is_core = vec![false; n];
    for &i in core {
        is_core[i] = true;
    }
    let mut labels = vec![0i32; n];

    let mut seed_order: Vec<usize> = core.to_vec();
    if let Some(s) = seed {
        SplitMix64::new(s).shuffle(&mut seed_order);
    }

    let mut next = 0i32;
    let mut queue: Vec<usize> = Vec::new();
    for &start in &seed_order {
        if labels[start] != 0 {
            continue;
        }
        next += 1;
        labels[start] = next;
        queue.clear();
        queue.push(start);
        let mut head = 0;
        while head < queue.len() {
            let i = queue[head];
            head += 1;
            for &j in graph.neighbors(i) {
                if is_core[j] && labels[j] == 0 {
                    labels[j] = next;
                    queue.push(j);
                }
            }
        }
    }

    // Renumber by first occurrence so ids are contiguous and order-stable.
    let mut remap = vec![0i32; next as usize + 1];
    let mut assigned = 0i32;
    for &l in labels.iter() {
        if l > 0 && remap[l as usize] == 0 {
            assigned += 1;
            remap[l as usize] = assigned;
        }
    }
    for l in labels.iter_mut() {
        if *l > 0 {
            *l = remap[*l as usize];
        }
    }
    labels
}

fn core_centroids(data: &Dataset, labels: &[i32], num_clusters: usize) -> Vec<Vec<f64>> {
    let dim = data.dim();
    let mut sums = vec![vec![0.0; dim]; num_clusters];
    let mut counts = vec![0usize; num_clusters];
    for (i, &l) in labels.iter().enumerate() {
        if l > 0 {
            let c = (l - 1) as usize;
            counts[c] += 1;
            for (s, &x) in sums[c].iter_mut().zip(data.point(i)) {
                *s += x;
            }
        }
    }
    for (sum, &count) in sums.iter_mut().zip(&counts) {
        for s in sum.iter_mut() {
            *s /= count as f64;
        }
    }
    sums
}

/// Reassigns pruned points in a single pass against the fixed core set:
/// nearest core point, or nearest core centroid when `use_center`. Ties go to
/// the lowest point index (respectively lowest cluster id).
pub fn reassign_noise(
    labels: Vec<i32>,
    noise: &[usize],
    dist: &DistanceMatrix,
    data: &Dataset,
    use_center: bool,
) -> ClusterAssignment {
    let mut labels = labels;
    let core_indices: Vec<usize> = labels
        .iter()
        .enumerate()
        .filter(|(_, &l)| l > 0)
        .map(|(i, _)| i)
        .collect();
    let num_clusters = labels.iter().copied().max().unwrap_or(0).max(0) as usize;

    let mut centroids = None;
    if use_center {
        let means = core_centroids(data, &labels, num_clusters);
        for &i in noise {
            let mut best = f64::INFINITY;
            let mut best_cluster = 0i32;
            for (c, mu) in means.iter().enumerate() {
                let d = geometry::euclidean(data.point(i), mu);
                if d < best {
                    best = d;
                    best_cluster = c as i32 + 1;
                }
            }
            labels[i] = best_cluster;
        }
        centroids = Some(means);
    } else {
        for &i in noise {
            let mut best = f64::INFINITY;
            let mut best_label = 0i32;
            for &j in &core_indices {
                let d = dist.get(i, j);
                if d < best {
                    best = d;
                    best_label = labels[j];
                }
            }
            labels[i] = best_label;
        }
    }

    ClusterAssignment {
        labels,
        pre_reassignment_noise: noise.to_vec(),
        core_indices,
        num_clusters,
        centroids,
    }
}

/// Runs the whole pipeline: distances, nearest-neighbour minima, outlier
/// screen, threshold, neighbour graph, partition, core labelling and noise
/// reassignment. Deterministic for a given (data, config).
pub fn saca_cluster(data: &Dataset, config: &SacaConfig) -> Result<ClusterAssignment> {
    config.validate()?;
    let dist = geometry::pairwise_distances(data);
    saca_cluster_with_distances(data, &dist, config).map(|(a, _)| a)
}

/// Same pipeline, reusing a precomputed distance matrix and also returning
/// the derived threshold statistics.
pub fn saca_cluster_with_distances(
    data: &Dataset,
    dist: &DistanceMatrix,
    config: &SacaConfig,
) -> Result<(ClusterAssignment, ThresholdStats)> {
    config.validate()?;
    let mins = geometry::nearest_neighbor_distances(dist)?;
    let (filtered, report) = outlier::filter_outlier_mins(&mins, config.z_threshold)?;
    let stats = outlier::compute_threshold(&filtered)?;
    let graph = build_neighbor_graph(dist, &stats);
    let (core, noise) = partition_dense_sparse(&graph, config.c)?;
    let labels = label_cores(&graph, &core, config.seed);
    let mut assignment = reassign_noise(labels, &noise, dist, data, config.use_center);
    if config.exclude_outliers {
        for &i in &report.outlier_indices {
            assignment.labels[i] = -1;
        }
    }
    Ok((assignment, stats))
}

/// Single-linkage margin between one pair of clusters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClusterPairMargin {
    pub a: i32,
    pub b: i32,
    pub margin: f64,
}

/// Minimum pairwise point distance for every unordered pair of distinct
/// clusters (labels -1 are skipped).
pub fn intercluster_margin(data: &Dataset, labels: &[i32]) -> Result<Vec<ClusterPairMargin>> {
    if labels.len() != data.len() {
        return Err(Error::InvalidInput("label length does not match dataset".into()));
    }
    let mut ids: Vec<i32> = labels.iter().copied().filter(|&l| l != -1).collect();
    ids.sort_unstable();
    ids.dedup();
    if ids.len() < 2 {
        return Err(Error::InvalidInput("inter-cluster margins need at least 2 clusters".into()));
    }
    let mut out = Vec::new();
    for (ai, &a) in ids.iter().enumerate() {
        for &b in &ids[ai + 1..] {
            let mut best = f64::INFINITY;
            for (i, &li) in labels.iter().enumerate() {
                if li != a {
                    continue;
                }
                for (j, &lj) in labels.iter().enumerate() {
                    if lj != b {
                        continue;
                    }
                    let d = geometry::euclidean(data.point(i), data.point(j));
                    if d < best {
                        best = d;
                    }
                }
            }
            out.push(ClusterPairMargin { a, b, margin: best });
        }
    }
    Ok(out)
}

/// Checks, per cluster pair, whether the margin strictly exceeds the
/// effective neighbour radius 2 * T * sigma_opt. When every pair satisfies
/// this, points at the edge of one cluster cannot reach the other and no
/// parameter tuning is needed.
pub fn margin_condition_satisfied(
    margins: &[ClusterPairMargin],
    stats: &ThresholdStats,
) -> Vec<(i32, i32, bool)> {
    let radius = stats.radius();
    margins
        .iter()
        .map(|m| (m.a, m.b, m.margin > radius))
        .collect()
}
