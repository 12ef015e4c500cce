//! Dense pairwise-distance computation and nearest-neighbour extraction.

use alloc::vec;
use alloc::vec::Vec;

use crate::dataset::Dataset;
use crate::error::{Error, Result};

/// Symmetric N x N Euclidean distance matrix with zero diagonal.
#[derive(Debug, Clone, PartialEq)]
pub struct DistanceMatrix {
    n: usize,
    values: Vec<f64>,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.values[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.values[i * self.n..(i + 1) * self.n]
    }
}

/// Per-point nearest-neighbour distances (diagonal excluded).
#[derive(Debug, Clone, PartialEq)]
pub struct MinsVector(pub Vec<f64>);

impl MinsVector {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }
}

#[inline]
pub fn euclidean(a: &[f64], b: &[f64]) -> f64 {
    let mut acc = 0.0;
    for (x, y) in a.iter().zip(b) {
        let d = x - y;
        acc += d * d;
    }
    libm::sqrt(acc)
}

/// Computes the full pairwise Euclidean distance matrix. Each distance is
/// evaluated once on the upper triangle and mirrored, so the result is
/// exactly symmetric.
pub fn pairwise_distances(data: &Dataset) -> DistanceMatrix {
    let n = data.len();
    let mut values = vec![0.0; n * n];
    for i in 0..n {
        let pi = data.point(i);
        for j in (i + 1)..n {
            let d = euclidean(pi, data.point(j));
            values[i * n + j] = d;
            values[j * n + i] = d;
        }
    }
    DistanceMatrix { n, values }
}

/// Extracts each row's minimum over the off-diagonal entries.
pub fn nearest_neighbor_distances(dist: &DistanceMatrix) -> Result<MinsVector> {
    let n = dist.n();
    if n < 2 {
        return Err(Error::InvalidInput(
            "nearest-neighbour distances need at least 2 points".into(),
        ));
    }
    let mut mins = Vec::with_capacity(n);
    for i in 0..n {
        let row = dist.row(i);
        let mut best = f64::INFINITY;
        for (j, &d) in row.iter().enumerate() {
            if j != i && d < best {
                best = d;
            }
        }
        mins.push(best);
    }
    Ok(MinsVector(mins))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SplitMix64;
    use alloc::vec;

    fn random_dataset(n: usize, dim: usize, seed: u64) -> Dataset {
        let mut rng = SplitMix64::new(seed);
        let pts = (0..n)
            .map(|_| (0..dim).map(|_| rng.next_f64() * 10.0).collect())
            .collect();
        Dataset::new(pts, None).unwrap()
    }

    #[test]
    fn three_four_five_triangle() {
        let d = Dataset::new(vec![vec![0.0, 0.0], vec![3.0, 4.0]], None).unwrap();
        let m = pairwise_distances(&d);
        assert_eq!(m.get(0, 1), 5.0);
        assert_eq!(m.get(1, 0), 5.0);
        assert_eq!(m.get(0, 0), 0.0);
    }

    #[test]
    fn identical_points_distance_zero() {
        let d = Dataset::new(vec![vec![1.0, 1.0], vec![1.0, 1.0]], None).unwrap();
        let m = pairwise_distances(&d);
        assert_eq!(m.get(0, 1), 0.0);
    }

    // Independent double-loop oracle over the plain definition.
    #[test]
    fn matches_elementwise_recomputation() {
        let data = random_dataset(20, 3, 7);
        let m = pairwise_distances(&data);
        for i in 0..20 {
            for j in 0..20 {
                let mut acc = 0.0;
                for k in 0..3 {
                    let diff = data.point(i)[k] - data.point(j)[k];
                    acc += diff * diff;
                }
                let expected = libm::sqrt(acc);
                assert!((m.get(i, j) - expected).abs() <= 1e-12 * expected.max(1.0));
            }
        }
    }

    #[test]
    fn mins_by_inspection() {
        let d = Dataset::new(vec![vec![0.0], vec![1.0], vec![3.0]], None).unwrap();
        let mins = nearest_neighbor_distances(&pairwise_distances(&d)).unwrap();
        assert_eq!(mins.as_slice(), &[1.0, 1.0, 2.0]);
    }

    #[test]
    fn mins_of_duplicates_are_zero() {
        let d = Dataset::new(vec![vec![2.0, 2.0], vec![2.0, 2.0]], None).unwrap();
        let mins = nearest_neighbor_distances(&pairwise_distances(&d)).unwrap();
        assert_eq!(mins.as_slice(), &[0.0, 0.0]);
    }

    // Exhaustive row-minimum scan as the oracle.
    #[test]
    fn mins_match_brute_force() {
        let data = random_dataset(30, 2, 11);
        let m = pairwise_distances(&data);
        let mins = nearest_neighbor_distances(&m).unwrap();
        for i in 0..30 {
            let mut best = f64::INFINITY;
            for j in 0..30 {
                if j != i {
                    best = best.min(m.get(i, j));
                }
            }
            assert_eq!(mins.as_slice()[i], best);
        }
    }

    #[test]
    fn global_min_agrees() {
        let data = random_dataset(25, 2, 3);
        let m = pairwise_distances(&data);
        let mins = nearest_neighbor_distances(&m).unwrap();
        let vec_min = mins.as_slice().iter().cloned().fold(f64::INFINITY, f64::min);
        let mut mat_min = f64::INFINITY;
        for i in 0..25 {
            for j in 0..25 {
                if i != j {
                    mat_min = mat_min.min(m.get(i, j));
                }
            }
        }
        assert_eq!(vec_min, mat_min);
    }
}
