//! Continuation of eigenframes along paths.
//!
//! [`lift_path`] carries an ordered frame from the first sample of a path to
//! the last, keeping the identity of every slot continuous. Between samples it
//! diagonalizes afresh and matches against the carried frame; a step whose
//! match is ambiguous, or merely poor, is bisected until it resolves.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::frame::{
    apply_permutation, frame_at_with_gap, match_frames, EigenFrame, Order, SpectralFamily,
    DEFAULT_GAP_MIN,
};
use crate::path::{ParameterPoint, Path};
use crate::permutation::Permutation;

/// Tuning knobs for [`lift_path`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, serde::Deserialize)]
#[serde(default)]
pub struct LiftOptions {
    /// Spectral gap below which a point counts as degenerate.
    pub gap_min: f64,
    /// A step is accepted only if every matched overlap reaches this value;
    /// otherwise it is bisected. Must be above one half.
    pub step_overlap: f64,
    /// Maximal number of nested bisections of one path segment.
    pub max_depth: u32,
}

impl Default for LiftOptions {
    fn default() -> Self {
        LiftOptions { gap_min: DEFAULT_GAP_MIN, step_overlap: 0.9, max_depth: 40 }
    }
}

/// Outcome of lifting a path.
#[derive(Debug, Clone, PartialEq)]
pub struct LiftResult {
    /// Slot `n` continues slot `n` of the initial frame.
    pub final_frame: EigenFrame,
    /// The lift in canonical coordinates: lifting the eigenvalue-ordered
    /// frame at the start ends at `apply_permutation(R_f, permutation)`, with
    /// `R_f` the eigenvalue-ordered frame at the end. For a closed path this
    /// is the monodromy.
    pub permutation: Permutation,
    pub steps_used: usize,
    pub min_gap_seen: f64,
    pub min_overlap_seen: f64,
}

/// One accepted continuation step.
#[derive(Debug, Clone, PartialEq)]
pub struct LiftStep {
    pub arclength: f64,
    pub point: ParameterPoint,
    pub frame: EigenFrame,
    pub gap: f64,
}

struct Lifter<'a> {
    family: &'a dyn SpectralFamily,
    options: LiftOptions,
    carried: EigenFrame,
    steps_used: usize,
    min_gap: f64,
    min_overlap: f64,
    trace: Option<Vec<LiftStep>>,
}

impl Lifter<'_> {
    fn record(&mut self, arclength: f64) {
        if let Some(trace) = self.trace.as_mut() {
            trace.push(LiftStep {
                arclength,
                point: self.carried.point().clone(),
                frame: self.carried.clone(),
                gap: self.carried.min_gap(),
            });
        }
    }

    fn frame(&self, point: &ParameterPoint) -> Result<EigenFrame> {
        frame_at_with_gap(self.family, point, Order::ByEigenvalue, self.options.gap_min).map_err(
            |e| match e {
                Error::DegenerateSpectrum { point, gap, .. } => Error::DegeneracyOnPath { point, gap },
                Error::PunctureHit { point } => Error::DegeneracyOnPath { point, gap: 0.0 },
                Error::OriginExcluded => {
                    Error::DegeneracyOnPath { point: point.coords().to_vec(), gap: 0.0 }
                }
                other => other,
            },
        )
    }

    fn advance(
        &mut self,
        from: &ParameterPoint,
        to: &ParameterPoint,
        s: (f64, f64),
        depth: u32,
    ) -> Result<()> {
        let target = self.frame(to)?;
        if let Ok(m) = match_frames(&self.carried, &target) {
            if m.min_overlap >= self.options.step_overlap {
                self.carried = apply_permutation(&target, &m.sigma.inverse())?;
                self.steps_used += 1;
                self.min_gap = self.min_gap.min(target.min_gap());
                self.min_overlap = self.min_overlap.min(m.min_overlap);
                self.record(s.1);
                return Ok(());
            }
        }
        if depth >= self.options.max_depth {
            return Err(Error::DepthExceeded { depth, point: to.coords().to_vec() });
        }
        let mid = from.lerp(to, 0.5);
        let s_mid = 0.5 * (s.0 + s.1);
        self.advance(from, &mid, (s.0, s_mid), depth + 1)?;
        self.advance(&mid, to, (s_mid, s.1), depth + 1)
    }
}

fn lift_impl(
    family: &dyn SpectralFamily,
    path: &Path,
    initial: &EigenFrame,
    options: LiftOptions,
    traced: bool,
) -> Result<(LiftResult, Vec<LiftStep>)> {
    if initial.point().distance(path.start()) > 1e-12 || initial.point().dim() != path.dim() {
        return Err(Error::InitialFrameMismatch);
    }
    // samples themselves must be admissible points
    for sample in path.samples() {
        if family.punctures().iter().any(|p| p.distance(sample) <= 1e-12) {
            return Err(Error::PunctureHit { point: sample.coords().to_vec() });
        }
    }
    let start_ref = frame_at_with_gap(family, path.start(), Order::ByEigenvalue, options.gap_min)?;
    let tau = match_frames(&start_ref, initial)
        .map_err(|_| Error::InitialFrameMismatch)?
        .sigma;

    let mut lifter = Lifter {
        family,
        options,
        carried: initial.clone(),
        steps_used: 0,
        min_gap: start_ref.min_gap(),
        min_overlap: 1.0,
        trace: traced.then(Vec::new),
    };
    lifter.record(0.0);

    let lengths = path.cumulative_lengths();
    for (k, w) in path.samples().windows(2).enumerate() {
        if w[0] == w[1] {
            lifter.record(lengths[k + 1]);
            continue;
        }
        lifter.advance(&w[0], &w[1], (lengths[k], lengths[k + 1]), 0)?;
    }

    let end_ref = frame_at_with_gap(family, path.end(), Order::ByEigenvalue, options.gap_min)?;
    let relative = match_frames(&end_ref, &lifter.carried)?.sigma;
    let permutation = relative.compose(&tau.inverse());

    let result = LiftResult {
        final_frame: lifter.carried,
        permutation,
        steps_used: lifter.steps_used,
        min_gap_seen: lifter.min_gap,
        min_overlap_seen: lifter.min_overlap,
    };
    Ok((result, lifter.trace.unwrap_or_default()))
}

/// Continues `initial` along `path`.
pub fn lift_path(family: &dyn SpectralFamily, path: &Path, initial: &EigenFrame) -> Result<LiftResult> {
    lift_path_with(family, path, initial, LiftOptions::default())
}

pub fn lift_path_with(
    family: &dyn SpectralFamily,
    path: &Path,
    initial: &EigenFrame,
    options: LiftOptions,
) -> Result<LiftResult> {
    lift_impl(family, path, initial, options, false).map(|(r, _)| r)
}

/// Like [`lift_path_with`], also returning every accepted step (the first
/// entry is the initial frame at arc length 0).
pub fn lift_path_traced(
    family: &dyn SpectralFamily,
    path: &Path,
    initial: &EigenFrame,
    options: LiftOptions,
) -> Result<(LiftResult, Vec<LiftStep>)> {
    lift_impl(family, path, initial, options, true)
}

/// Monodromy permutation of a closed loop.
pub fn monodromy(family: &dyn SpectralFamily, loop_path: &Path, initial: &EigenFrame) -> Result<Permutation> {
    monodromy_with(family, loop_path, initial, LiftOptions::default())
}

pub fn monodromy_with(
    family: &dyn SpectralFamily,
    loop_path: &Path,
    initial: &EigenFrame,
    options: LiftOptions,
) -> Result<Permutation> {
    if !loop_path.is_closed() {
        return Err(Error::NotClosed);
    }
    Ok(lift_path_with(family, loop_path, initial, options)?.permutation)
}

/// Two open paths compared through their lifts and through the loop
/// `c1 · c2⁻¹`.
#[derive(Debug, Clone, PartialEq)]
pub struct PathComparison {
    /// `σ(c2)⁻¹ ∘ σ(c1)` from the two separate lifts.
    pub discrepancy: Permutation,
    /// Monodromy of `concat(c1, reverse(c2))`.
    pub composite_monodromy: Permutation,
    pub first: LiftResult,
    pub second: LiftResult,
    pub composite_loop: Path,
}

impl PathComparison {
    /// Whether both routes agree, as the composition law demands.
    pub fn is_consistent(&self) -> bool {
        self.discrepancy == self.composite_monodromy
    }
}

pub fn compare_paths(
    family: &dyn SpectralFamily,
    c1: &Path,
    c2: &Path,
    initial: &EigenFrame,
) -> Result<PathComparison> {
    compare_paths_with(family, c1, c2, initial, LiftOptions::default())
}

pub fn compare_paths_with(
    family: &dyn SpectralFamily,
    c1: &Path,
    c2: &Path,
    initial: &EigenFrame,
    options: LiftOptions,
) -> Result<PathComparison> {
    for (a, b) in [(c1.start(), c2.start()), (c1.end(), c2.end())] {
        if a != b {
            return Err(Error::EndpointMismatch { left: a.coords().to_vec(), right: b.coords().to_vec() });
        }
    }
    let first = lift_path_with(family, c1, initial, options)?;
    let second = lift_path_with(family, c2, initial, options)?;
    let discrepancy = second.permutation.inverse().compose(&first.permutation);
    let composite_loop = c1.concat(&c2.reverse())?;
    let composite_monodromy = monodromy_with(family, &composite_loop, initial, options)?;
    Ok(PathComparison { discrepancy, composite_monodromy, first, second, composite_loop })
}
