//! Points and piecewise-linear paths in parameter space.

use std::f64::consts::TAU;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A point λ of the parameter space.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ParameterPoint(Vec<f64>);

impl ParameterPoint {
    pub fn new(coordinates: Vec<f64>) -> Result<Self> {
        if coordinates.is_empty() {
            return Err(Error::InvalidPath { reason: "empty parameter point".into() });
        }
        if coordinates.iter().any(|c| !c.is_finite()) {
            return Err(Error::NonFinite { what: "parameter point" });
        }
        Ok(ParameterPoint(coordinates))
    }

    /// Two-dimensional point; panics on non-finite input.
    pub fn xy(x: f64, y: f64) -> Self {
        assert!(x.is_finite() && y.is_finite(), "non-finite coordinate");
        ParameterPoint(vec![x, y])
    }

    pub fn coords(&self) -> &[f64] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn distance(&self, other: &ParameterPoint) -> f64 {
        self.0.iter().zip(&other.0).map(|(a, b)| (a - b) * (a - b)).sum::<f64>().sqrt()
    }

    /// `(1 − t)·self + t·other`
    pub fn lerp(&self, other: &ParameterPoint, t: f64) -> ParameterPoint {
        if t == 1.0 {
            return other.clone();
        }
        ParameterPoint(self.0.iter().zip(&other.0).map(|(a, b)| a + (b - a) * t).collect())
    }
}

/// A piecewise-linear curve through an ordered list of samples.
///
/// Repeated consecutive samples are allowed and describe zero-length
/// segments; a path made of one repeated point is the constant path.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Path {
    samples: Vec<ParameterPoint>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
}

impl Path {
    pub fn new(samples: Vec<ParameterPoint>) -> Result<Self> {
        if samples.len() < 2 {
            return Err(Error::InvalidPath { reason: "a path needs at least two samples".into() });
        }
        let d = samples[0].dim();
        if let Some(bad) = samples.iter().find(|p| p.dim() != d) {
            return Err(Error::SizeMismatch { expected: d, found: bad.dim() });
        }
        Ok(Path { samples, name: None })
    }

    pub fn from_xy(points: &[(f64, f64)]) -> Result<Self> {
        Path::new(points.iter().map(|&(x, y)| ParameterPoint::xy(x, y)).collect())
    }

    /// The path that stays at `point`.
    pub fn constant(point: ParameterPoint) -> Self {
        Path { samples: vec![point.clone(), point], name: None }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn samples(&self) -> &[ParameterPoint] {
        &self.samples
    }

    pub fn dim(&self) -> usize {
        self.samples[0].dim()
    }

    pub fn start(&self) -> &ParameterPoint {
        &self.samples[0]
    }

    pub fn end(&self) -> &ParameterPoint {
        self.samples.last().unwrap()
    }

    /// Exact equality of the first and last sample.
    pub fn is_closed(&self) -> bool {
        self.start() == self.end()
    }

    /// `first` followed by `second`; the shared junction sample appears once.
    pub fn concat(&self, second: &Path) -> Result<Path> {
        if self.end() != second.start() {
            return Err(Error::EndpointMismatch {
                left: self.end().coords().to_vec(),
                right: second.start().coords().to_vec(),
            });
        }
        let mut samples = self.samples.clone();
        samples.extend_from_slice(&second.samples[1..]);
        Ok(Path { samples, name: None })
    }

    /// The same curve traversed backwards.
    pub fn reverse(&self) -> Path {
        let mut samples = self.samples.clone();
        samples.reverse();
        Path { samples, name: self.name.as_ref().map(|n| format!("{n}^-1")) }
    }

    /// Inserts the midpoint of every segment, halving all sample spacings.
    pub fn refine(&self) -> Path {
        let mut samples = Vec::with_capacity(2 * self.samples.len() - 1);
        for w in self.samples.windows(2) {
            samples.push(w[0].clone());
            samples.push(w[0].lerp(&w[1], 0.5));
        }
        samples.push(self.end().clone());
        Path { samples, name: self.name.clone() }
    }

    /// Cumulative arc length at every sample, starting at 0.
    pub fn cumulative_lengths(&self) -> Vec<f64> {
        let mut acc = 0.0;
        let mut out = Vec::with_capacity(self.samples.len());
        out.push(0.0);
        for w in self.samples.windows(2) {
            acc += w[0].distance(&w[1]);
            out.push(acc);
        }
        out
    }

    pub fn length(&self) -> f64 {
        *self.cumulative_lengths().last().unwrap()
    }

    /// The point at fraction `s ∈ [0, 1]` of the total arc length.
    ///
    /// `s = 0` and `s = 1` return the end samples exactly. A zero-length path
    /// returns its start.
    pub fn point_at_fraction(&self, s: f64) -> ParameterPoint {
        let lengths = self.cumulative_lengths();
        let total = *lengths.last().unwrap();
        if s <= 0.0 || total == 0.0 {
            return self.start().clone();
        }
        if s >= 1.0 {
            return self.end().clone();
        }
        let target = s * total;
        // first sample whose cumulative length reaches the target
        let k = lengths.partition_point(|&l| l < target).max(1);
        let seg = lengths[k] - lengths[k - 1];
        let t = if seg > 0.0 { (target - lengths[k - 1]) / seg } else { 1.0 };
        self.samples[k - 1].lerp(&self.samples[k], t)
    }

    /// Points at `k/M` of the arc length for `k = 0..=M`.
    pub fn arclength_schedule(&self, steps: usize) -> Vec<ParameterPoint> {
        (0..=steps).map(|k| self.point_at_fraction(k as f64 / steps as f64)).collect()
    }
}

/// Polyline builders for the punctured plane.
pub mod builders {
    use super::*;

    /// Circular arc from `start_angle` to `end_angle` (radians, either
    /// direction) with `segments` equal steps.
    pub fn arc(
        center: (f64, f64),
        radius: f64,
        start_angle: f64,
        end_angle: f64,
        segments: usize,
    ) -> Result<Path> {
        radial_arc(center, |_| radius, start_angle, end_angle, segments)
    }

    /// Arc whose radius varies with the fractional position `t ∈ [0, 1]`.
    pub fn radial_arc(
        center: (f64, f64),
        radius: impl Fn(f64) -> f64,
        start_angle: f64,
        end_angle: f64,
        segments: usize,
    ) -> Result<Path> {
        if segments == 0 {
            return Err(Error::InvalidPath { reason: "an arc needs at least one segment".into() });
        }
        let points = (0..=segments)
            .map(|k| {
                let t = k as f64 / segments as f64;
                let theta = start_angle + (end_angle - start_angle) * t;
                let r = radius(t);
                ParameterPoint::xy(center.0 + r * theta.cos(), center.1 + r * theta.sin())
            })
            .collect();
        Path::new(points)
    }

    /// Closed circle traversed `turns` times (negative = clockwise). The last
    /// sample is the first one, bit for bit.
    pub fn circle(
        center: (f64, f64),
        radius: f64,
        start_angle: f64,
        turns: i32,
        segments_per_turn: usize,
    ) -> Result<Path> {
        if turns == 0 {
            return Err(Error::InvalidPath { reason: "a circle needs a nonzero turn count".into() });
        }
        let segments = segments_per_turn * turns.unsigned_abs() as usize;
        let end = start_angle + TAU * f64::from(turns);
        let mut path = arc(center, radius, start_angle, end, segments)?;
        let first = path.samples[0].clone();
        *path.samples.last_mut().unwrap() = first;
        Ok(path)
    }
}
