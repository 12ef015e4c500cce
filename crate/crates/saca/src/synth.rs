//! Deterministic generators for the author-made benchmark datasets, plus a
//! generic Gaussian-blob generator for property tests.
//!
//! All randomness flows through [`SplitMix64`], so a (preset, seed) pair
//! yields a bit-identical dataset on every run and on every platform with
//! IEEE-754 doubles.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::dataset::Dataset;
use crate::error::{Error, Result};
use crate::rng::SplitMix64;

/// Preset descriptor: sample/feature/cluster counts plus the generator seed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DatasetSpec {
    pub name: String,
    pub n_samples: usize,
    pub n_features: usize,
    pub n_clusters: usize,
    pub seed: u64,
}

pub const PRESET_NAMES: &[&str] = &[
    "noisy-circles",
    "rings",
    "noisy-spiral",
    "moons-stars",
    "3compound",
    "unbalanced",
];

fn normalize(name: &str) -> String {
    name.trim().to_lowercase().replace('_', "-")
}

/// Looks up a preset by name and returns its descriptor.
pub fn preset_spec(name: &str, seed: u64) -> Result<DatasetSpec> {
    let key = normalize(name);
    let (n_samples, n_features, n_clusters) = match key.as_str() {
        "noisy-circles" => (2400, 2, 7),
        "rings" => (7200, 2, 36),
        "noisy-spiral" => (800, 2, 2),
        "moons-stars" => (1200, 3, 4),
        "3compound" => (1500, 2, 3),
        "unbalanced" => (1500, 2, 6),
        _ => {
            return Err(Error::InvalidInput(format!(
                "unknown preset '{name}'; available presets: {}",
                PRESET_NAMES.join(", ")
            )))
        }
    };
    Ok(DatasetSpec { name: key, n_samples, n_features, n_clusters, seed })
}

/// Generates the dataset described by `spec`.
pub fn generate(spec: &DatasetSpec) -> Result<Dataset> {
    let expected = preset_spec(&spec.name, spec.seed)?;
    if (spec.n_samples, spec.n_features, spec.n_clusters)
        != (expected.n_samples, expected.n_features, expected.n_clusters)
    {
        return Err(Error::InvalidInput(format!(
            "preset '{}' is {} samples x {} features with {} clusters; \
             the spec asked for {} x {} with {}",
            spec.name,
            expected.n_samples,
            expected.n_features,
            expected.n_clusters,
            spec.n_samples,
            spec.n_features,
            spec.n_clusters
        )));
    }
    let mut rng = SplitMix64::new(spec.seed);
    let mut data = match spec.name.as_str() {
        "noisy-circles" => noisy_circles(&mut rng),
        "rings" => rings(&mut rng),
        "noisy-spiral" => noisy_spiral(&mut rng),
        "moons-stars" => moons_stars(&mut rng),
        "3compound" => compound3(&mut rng),
        "unbalanced" => unbalanced(&mut rng),
        _ => unreachable!(),
    }?;
    data.name = Some(spec.name.clone());
    debug_assert_eq!(data.len(), spec.n_samples);
    debug_assert_eq!(data.dim(), spec.n_features);
    Ok(data)
}

/// Convenience wrapper: generate a preset by name.
pub fn generate_preset(name: &str, seed: u64) -> Result<Dataset> {
    generate(&preset_spec(name, seed)?)
}

/// `k` spherical Gaussian blobs of `n_per_cluster` points each. Centers sit
/// on a circle sized so every pairwise center distance is at least
/// `separation`.
pub fn gaussian_blobs(
    k: usize,
    n_per_cluster: usize,
    separation: f64,
    sigma: f64,
    seed: u64,
) -> Result<Dataset> {
    if k < 1 || n_per_cluster < 1 {
        return Err(Error::InvalidInput("gaussian_blobs needs k >= 1 and n >= 1".into()));
    }
    if !(separation > 0.0) || !(sigma > 0.0) {
        return Err(Error::InvalidInput("separation and sigma must be positive".into()));
    }
    let mut rng = SplitMix64::new(seed);
    let radius = if k == 1 {
        0.0
    } else {
        // Adjacent chord equals `separation`; all other pairs are farther.
        separation / (2.0 * libm::sin(core::f64::consts::PI / k as f64))
    };
    let mut points = Vec::with_capacity(k * n_per_cluster);
    let mut labels = Vec::with_capacity(k * n_per_cluster);
    for c in 0..k {
        let angle = 2.0 * core::f64::consts::PI * c as f64 / k as f64;
        let (cx, cy) = (radius * libm::cos(angle), radius * libm::sin(angle));
        for _ in 0..n_per_cluster {
            points.push(alloc::vec![
                cx + sigma * rng.next_gaussian(),
                cy + sigma * rng.next_gaussian()
            ]);
            labels.push(c as i32);
        }
    }
    let mut data = Dataset::new(points, Some(labels))?;
    data.name = Some("gaussian-blobs".to_string());
    Ok(data)
}

fn push_blob(
    points: &mut Vec<Vec<f64>>,
    labels: &mut Vec<i32>,
    rng: &mut SplitMix64,
    center: (f64, f64),
    sigma: f64,
    n: usize,
    label: i32,
) {
    for _ in 0..n {
        points.push(alloc::vec![
            center.0 + sigma * rng.next_gaussian(),
            center.1 + sigma * rng.next_gaussian()
        ]);
        labels.push(label);
    }
}

fn push_ring(
    points: &mut Vec<Vec<f64>>,
    labels: &mut Vec<i32>,
    rng: &mut SplitMix64,
    center: (f64, f64),
    radius: f64,
    jitter: f64,
    n: usize,
    label: i32,
) {
    for _ in 0..n {
        let a = 2.0 * core::f64::consts::PI * rng.next_f64();
        let r = radius + jitter * rng.next_gaussian();
        points.push(alloc::vec![
            center.0 + r * libm::cos(a),
            center.1 + r * libm::sin(a)
        ]);
        labels.push(label);
    }
}

/// Seven noisy circle-shaped clusters on a loose grid. 2400 x 2, 7 clusters.
fn noisy_circles(rng: &mut SplitMix64) -> Result<Dataset> {
    let centers = [
        (0.0, 0.0),
        (8.0, 0.0),
        (16.0, 0.0),
        (0.0, 8.0),
        (8.0, 8.0),
        (16.0, 8.0),
        (8.0, 16.0),
    ];
    let sizes = [343, 343, 343, 343, 343, 343, 342];
    let mut points = Vec::new();
    let mut labels = Vec::new();
    for (c, (&center, &n)) in centers.iter().zip(&sizes).enumerate() {
        push_ring(&mut points, &mut labels, rng, center, 2.0, 0.12, n, c as i32);
    }
    Dataset::new(points, Some(labels))
}

/// Spacing-to-sigma ratio of adjacent blobs along each ring. Governs how
/// strongly the 36 sub-clusters blend into the two rings.
const RING_BLOB_SPACING_SIGMA: f64 = 5.6;

/// Radial truncation of the ring blobs, in sigma units. Bounded support
/// keeps stray tail points from forming their own tiny components.
const RING_BLOB_TRUNCATION_SIGMA: f64 = 2.2;

/// Points in the sparse chain linking each pair of adjacent blobs.
const RING_BRIDGE_POINTS: usize = 12;

/// Fraction of the blob-to-blob span covered by the chain. The ends reach
/// into the blob supports so the link to the dense mass is not left to tail
/// luck; the middle stays sparse enough to be pruned at high selectivity.
const RING_BRIDGE_SPAN: (f64, f64) = (0.10, 0.90);

/// Radial scatter of chain points, in sigma units.
const RING_BRIDGE_JITTER_SIGMA: f64 = 0.05;

fn push_truncated_blob(
    points: &mut Vec<Vec<f64>>,
    labels: &mut Vec<i32>,
    rng: &mut SplitMix64,
    center: (f64, f64),
    sigma: f64,
    max_radius_sigma: f64,
    n: usize,
    label: i32,
) {
    let mut remaining = n;
    while remaining > 0 {
        let (dx, dy) = (rng.next_gaussian(), rng.next_gaussian());
        if dx * dx + dy * dy > max_radius_sigma * max_radius_sigma {
            continue;
        }
        points.push(alloc::vec![center.0 + sigma * dx, center.1 + sigma * dy]);
        labels.push(label);
        remaining -= 1;
    }
}

/// Two concentric circles of 18 truncated-Gaussian blobs each, adjacent
/// blobs joined by sparse chains of points along the circle. The outer ring
/// is the inner one scaled by 2 with four times the points per blob, so both
/// rings share one point density. At low selectivity the chains keep each
/// ring a single connected cluster; at high selectivity the chains are
/// pruned and the 36 blobs separate. 7200 x 2, 36 clusters.
fn rings(rng: &mut SplitMix64) -> Result<Dataset> {
    let blobs_per_ring = 18usize;
    let sigma_inner = 1.0;
    let chord = RING_BLOB_SPACING_SIGMA * sigma_inner;
    let r_inner = chord / (2.0 * libm::sin(core::f64::consts::PI / blobs_per_ring as f64));
    let bridge_total = 2 * blobs_per_ring * RING_BRIDGE_POINTS;
    let per_pair = (7200 - bridge_total) / blobs_per_ring;
    // Equal density across the two rings: the outer blob holds 4x the points
    // of the inner one.
    let n_inner = libm::round(per_pair as f64 / 5.0) as usize;
    let n_outer = per_pair - n_inner;
    let step = 2.0 * core::f64::consts::PI / blobs_per_ring as f64;
    let mut points = Vec::new();
    let mut labels = Vec::new();
    for (ring, (scale, n_per_blob)) in [(0usize, (1.0, n_inner)), (1, (2.0, n_outer))] {
        let radius = r_inner * scale;
        let sigma = sigma_inner * scale;
        let base = (ring * blobs_per_ring) as i32;
        for b in 0..blobs_per_ring {
            let a = step * b as f64;
            let center = (radius * libm::cos(a), radius * libm::sin(a));
            push_truncated_blob(
                &mut points,
                &mut labels,
                rng,
                center,
                sigma,
                RING_BLOB_TRUNCATION_SIGMA,
                n_per_blob,
                base + b as i32,
            );
        }
        let (lo, hi) = RING_BRIDGE_SPAN;
        for b in 0..blobs_per_ring {
            let a0 = step * b as f64;
            for j in 0..RING_BRIDGE_POINTS {
                let f = lo + (hi - lo) * (j as f64 + 0.5) / RING_BRIDGE_POINTS as f64;
                let a = a0 + f * step;
                let r = radius + RING_BRIDGE_JITTER_SIGMA * sigma * rng.next_gaussian();
                points.push(alloc::vec![r * libm::cos(a), r * libm::sin(a)]);
                let owner = if f < 0.5 { b } else { (b + 1) % blobs_per_ring };
                labels.push(base + owner as i32);
            }
        }
    }
    Dataset::new(points, Some(labels))
}

/// Two interleaved Archimedean spirals with radial jitter. 800 x 2, 2 clusters.
fn noisy_spiral(rng: &mut SplitMix64) -> Result<Dataset> {
    let mut points = Vec::new();
    let mut labels = Vec::new();
    for c in 0..2 {
        let phase = c as f64 * core::f64::consts::PI;
        for i in 0..400 {
            let t = 1.5 * core::f64::consts::PI * (0.3 + i as f64 / 400.0);
            let r = 2.0 * t;
            let a = t + phase;
            points.push(alloc::vec![
                r * libm::cos(a) + 0.25 * rng.next_gaussian(),
                r * libm::sin(a) + 0.25 * rng.next_gaussian()
            ]);
            labels.push(c);
        }
    }
    Dataset::new(points, Some(labels))
}

/// Two crescent moons in the z = 0 plane plus two star-like blobs lifted
/// along z. 1200 x 3, 4 clusters.
fn moons_stars(rng: &mut SplitMix64) -> Result<Dataset> {
    let mut points = Vec::new();
    let mut labels = Vec::new();
    // Moons: opposed half circles, the classic interleaved pair.
    for c in 0..2 {
        for _ in 0..300 {
            let t = core::f64::consts::PI * rng.next_f64();
            let (x, y) = if c == 0 {
                (libm::cos(t), libm::sin(t))
            } else {
                (1.0 - libm::cos(t), 0.5 - libm::sin(t))
            };
            points.push(alloc::vec![
                4.0 * x + 0.1 * rng.next_gaussian(),
                4.0 * y + 0.1 * rng.next_gaussian(),
                0.1 * rng.next_gaussian()
            ]);
            labels.push(c);
        }
    }
    // Stars: spiky blobs well above the moon plane.
    for (c, &(cx, cy, cz)) in [(12.0, 0.0, 8.0), (-8.0, 2.0, 8.0)].iter().enumerate() {
        for _ in 0..300 {
            let a = 2.0 * core::f64::consts::PI * rng.next_f64();
            // Five-pointed radial modulation.
            let spike = 1.0 + 0.6 * libm::cos(5.0 * a);
            let r = spike * rng.next_f64();
            points.push(alloc::vec![
                cx + r * libm::cos(a),
                cy + r * libm::sin(a),
                cz + 0.3 * rng.next_gaussian()
            ]);
            labels.push(c as i32 + 2);
        }
    }
    Dataset::new(points, Some(labels))
}

/// A blob nested inside a ring, plus a separate blob. 1500 x 2, 3 clusters.
fn compound3(rng: &mut SplitMix64) -> Result<Dataset> {
    let mut points = Vec::new();
    let mut labels = Vec::new();
    push_blob(&mut points, &mut labels, rng, (0.0, 0.0), 0.8, 500, 0);
    push_ring(&mut points, &mut labels, rng, (0.0, 0.0), 6.0, 0.25, 500, 1);
    push_blob(&mut points, &mut labels, rng, (18.0, 0.0), 1.0, 500, 2);
    Dataset::new(points, Some(labels))
}

/// Six Gaussian blobs of 250 points; clusters 5 and 6 shrink sigma by
/// 1/sqrt(2), doubling their density relative to clusters 1-4.
/// 1500 x 2, 6 clusters.
fn unbalanced(rng: &mut SplitMix64) -> Result<Dataset> {
    let centers = [
        (0.0, 0.0),
        (14.0, 0.0),
        (28.0, 0.0),
        (0.0, 14.0),
        (14.0, 14.0),
        (28.0, 14.0),
    ];
    let mut points = Vec::new();
    let mut labels = Vec::new();
    for (c, &center) in centers.iter().enumerate() {
        let sigma = if c >= 4 { 1.0 / libm::sqrt(2.0) } else { 1.0 };
        push_blob(&mut points, &mut labels, rng, center, sigma, 250, c as i32);
    }
    Dataset::new(points, Some(labels))
}
