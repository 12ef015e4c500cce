//! Selective attention-based density clustering.
//!
//! The pipeline derives a neighbourhood radius from the data itself: pairwise
//! Euclidean distances give per-point nearest-neighbour distances, a Modified
//! Z-score screen removes outlying minima, and the surviving minima yield an
//! integer threshold `T`. Points with at most `C` in-radius neighbours are
//! pruned, the remaining dense cores are labelled by breadth-first expansion,
//! and pruned points are reassigned to the nearest core point or centroid.
//!
//! The crate is `no_std` (with `alloc`); file IO, dataset loading and the
//! command-line front end live in the companion `saca-cli` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod cluster;
pub mod dataset;
pub mod dbscan;
pub mod error;
pub mod geometry;
pub mod metrics;
pub mod outlier;
pub mod rng;
pub mod synth;

pub use cluster::{saca_cluster, saca_cluster_with_distances, ClusterAssignment, NeighborGraph, SacaConfig};
pub use dataset::Dataset;
pub use error::{Error, Result};
pub use geometry::{nearest_neighbor_distances, pairwise_distances, DistanceMatrix, MinsVector};
pub use metrics::EvaluationReport;
pub use outlier::{compute_threshold, filter_outlier_mins, OutlierReport, ThresholdStats};
