use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// A set of N points in d-dimensional space, stored row-major, with optional
/// ground-truth labels.
#[derive(Debug, Clone, PartialEq)]
pub struct Dataset {
    coords: Vec<f64>,
    n: usize,
    dim: usize,
    truth_labels: Option<Vec<i32>>,
    pub name: Option<String>,
}

impl Dataset {
    /// Builds a dataset from per-point coordinate vectors, checking that all
    /// rows share one dimension and every coordinate is finite.
    pub fn new(points: Vec<Vec<f64>>, truth_labels: Option<Vec<i32>>) -> Result<Self> {
        if points.len() < 2 {
            return Err(Error::InvalidInput(format!(
                "need at least 2 points, got {}",
                points.len()
            )));
        }
        let dim = points[0].len();
        if dim == 0 {
            return Err(Error::InvalidInput("points have zero dimension".into()));
        }
        let mut coords = Vec::with_capacity(points.len() * dim);
        for (i, p) in points.iter().enumerate() {
            if p.len() != dim {
                return Err(Error::InvalidInput(format!(
                    "point {i} has dimension {}, expected {dim}",
                    p.len()
                )));
            }
            for &x in p {
                if !x.is_finite() {
                    return Err(Error::InvalidInput(format!(
                        "point {i} has a non-finite coordinate"
                    )));
                }
                coords.push(x);
            }
        }
        let n = points.len();
        Self::from_flat(coords, n, dim, truth_labels)
    }

    /// Builds a dataset from an already-flat row-major buffer.
    pub fn from_flat(
        coords: Vec<f64>,
        n: usize,
        dim: usize,
        truth_labels: Option<Vec<i32>>,
    ) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidInput(format!("need at least 2 points, got {n}")));
        }
        if dim == 0 || coords.len() != n * dim {
            return Err(Error::InvalidInput(format!(
                "coordinate buffer length {} does not match {n} x {dim}",
                coords.len()
            )));
        }
        if let Some(bad) = coords.iter().position(|x| !x.is_finite()) {
            return Err(Error::InvalidInput(format!(
                "point {} has a non-finite coordinate",
                bad / dim
            )));
        }
        if let Some(labels) = &truth_labels {
            if labels.len() != n {
                return Err(Error::InvalidInput(format!(
                    "{} truth labels for {n} points",
                    labels.len()
                )));
            }
        }
        Ok(Self { coords, n, dim, truth_labels, name: None })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn point(&self, i: usize) -> &[f64] {
        &self.coords[i * self.dim..(i + 1) * self.dim]
    }

    pub fn points(&self) -> impl Iterator<Item = &[f64]> {
        self.coords.chunks_exact(self.dim)
    }

    pub fn truth_labels(&self) -> Option<&[i32]> {
        self.truth_labels.as_deref()
    }

    /// Copy with every coordinate multiplied by `factor`.
    pub fn scaled(&self, factor: f64) -> Dataset {
        let mut out = self.clone();
        for x in &mut out.coords {
            *x *= factor;
        }
        out
    }
}
