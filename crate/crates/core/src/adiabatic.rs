//! Stroboscopic evolution under a slowly modulated Floquet operator.
//!
//! The parameter is frozen during each driving period and advanced between
//! periods: after `M` periods along a path, the state is
//! `U(λ_M) ⋯ U(λ_2) U(λ_1) ψ_0` with `λ_k` at arc-length fraction `k/M`.
//! As `M` grows the final state approaches the lifted eigenprojector, which
//! is how the permutation computed by [`lift_path`] is checked against
//! actual dynamics.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::frame::{EigenFrame, FamilyKind, SpectralFamily};
use crate::lift::{lift_path_with, LiftOptions, LiftResult};
use crate::linalg::{unitary_eig, Projector};
use crate::path::Path;

/// Normalized state vector.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector(Vec<Complex64>);

impl StateVector {
    pub const NORM_TOL: f64 = 1e-12;

    pub fn new(amplitudes: Vec<Complex64>) -> Result<Self> {
        let norm = norm(&amplitudes);
        if (norm - 1.0).abs() > Self::NORM_TOL {
            return Err(Error::NotNormalized { norm });
        }
        Ok(StateVector(amplitudes))
    }

    pub fn normalized(amplitudes: Vec<Complex64>) -> Result<Self> {
        let norm = norm(&amplitudes);
        if !(norm > 0.0 && norm.is_finite()) {
            return Err(Error::NotNormalized { norm });
        }
        Ok(StateVector(amplitudes.into_iter().map(|a| a / norm).collect()))
    }

    /// A unit vector in the range of `p`.
    pub fn from_projector(p: &Projector) -> Self {
        StateVector(p.range_vector())
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.0
    }

    pub fn norm(&self) -> f64 {
        norm(&self.0)
    }
}

fn norm(v: &[Complex64]) -> f64 {
    v.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
}

/// `⟨ψ|P|ψ⟩`, clamped to [0, 1].
pub fn adiabatic_fidelity(psi: &StateVector, p: &Projector) -> f64 {
    let pv = p.matrix().mul_vec(&psi.0);
    let f: Complex64 = psi.0.iter().zip(&pv).map(|(a, b)| a.conj() * b).sum();
    f.re.clamp(0.0, 1.0)
}

/// Result of one stroboscopic run.
#[derive(Debug, Clone, PartialEq)]
pub struct EvolutionReport {
    pub final_state: StateVector,
    /// Fidelity against the target projector, if one was given.
    pub fidelity: Option<f64>,
    pub steps: usize,
    /// Smallest eigenphase gap met along the schedule.
    pub min_gap_seen: f64,
    /// Largest `|‖ψ_k‖ − 1|` over all periods.
    pub max_norm_error: f64,
}

fn check_floquet(family: &dyn SpectralFamily, psi0: &StateVector) -> Result<()> {
    if family.kind() != FamilyKind::Floquet {
        return Err(Error::WrongFamilyKind { expected: FamilyKind::Floquet });
    }
    if psi0.0.len() != family.size() {
        return Err(Error::SizeMismatch { expected: family.size(), found: psi0.0.len() });
    }
    Ok(())
}

/// Applies `M` periods of the family along `path`; the parameter at period
/// `k` sits at arc-length fraction `k/M`.
pub fn evolve_state(
    family: &dyn SpectralFamily,
    path: &Path,
    psi0: &StateVector,
    periods: usize,
) -> Result<StateVector> {
    check_floquet(family, psi0)?;
    if periods == 0 {
        return Err(Error::InvalidSchedule { reason: "at least one period is required".into() });
    }
    let mut psi = psi0.0.clone();
    for point in path.arclength_schedule(periods).iter().skip(1) {
        psi = family.evaluate(point)?.mul_vec(&psi);
    }
    Ok(StateVector(psi))
}

/// [`evolve_state`] with per-period bookkeeping of norm and spectral gap.
pub fn evolve_with_report(
    family: &dyn SpectralFamily,
    path: &Path,
    psi0: &StateVector,
    periods: usize,
    target: Option<&Projector>,
) -> Result<EvolutionReport> {
    check_floquet(family, psi0)?;
    if periods == 0 {
        return Err(Error::InvalidSchedule { reason: "at least one period is required".into() });
    }
    let mut psi = psi0.0.clone();
    let mut min_gap = f64::INFINITY;
    let mut max_norm_error: f64 = 0.0;
    for point in path.arclength_schedule(periods).iter().skip(1) {
        let u = family.evaluate(point)?;
        let phases = unitary_eig(&u)?.eigenphases;
        for i in 0..phases.len() {
            for j in i + 1..phases.len() {
                min_gap = min_gap.min(crate::frame::circular_distance(phases[i], phases[j]));
            }
        }
        psi = u.mul_vec(&psi);
        max_norm_error = max_norm_error.max((norm(&psi) - 1.0).abs());
    }
    let final_state = StateVector(psi);
    Ok(EvolutionReport {
        fidelity: target.map(|p| adiabatic_fidelity(&final_state, p)),
        final_state,
        steps: periods,
        min_gap_seen: min_gap,
        max_norm_error,
    })
}

/// One row of a convergence scan.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ScanRow {
    pub periods: usize,
    pub infidelity: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceScan {
    pub slot: usize,
    pub rows: Vec<ScanRow>,
    /// Least-squares slope of ln(infidelity) against ln(M), over rows with
    /// nonzero infidelity. `None` with fewer than two such rows.
    pub exponent: Option<f64>,
    /// Slot of the lifted final frame that the evolved state overlaps most at
    /// the largest M, with that fidelity.
    pub selected_slot: usize,
    pub selected_fidelity: f64,
    pub lift: LiftResult,
}

impl ConvergenceScan {
    /// Whether brute-force evolution ends in the slot the lift predicts.
    pub fn agrees_with_lift(&self) -> bool {
        self.selected_slot == self.slot && self.selected_fidelity > 0.9
    }
}

/// Evolves the eigenstate in `slot` of `initial` along `path` for each period
/// count in `periods` and records the infidelity against the lifted slot.
pub fn convergence_scan(
    family: &dyn SpectralFamily,
    path: &Path,
    initial: &EigenFrame,
    slot: usize,
    periods: &[usize],
) -> Result<ConvergenceScan> {
    convergence_scan_with(family, path, initial, slot, periods, LiftOptions::default())
}

pub fn convergence_scan_with(
    family: &dyn SpectralFamily,
    path: &Path,
    initial: &EigenFrame,
    slot: usize,
    periods: &[usize],
    options: LiftOptions,
) -> Result<ConvergenceScan> {
    if periods.is_empty() {
        return Err(Error::InvalidSchedule { reason: "empty period list".into() });
    }
    if periods.windows(2).any(|w| w[1] <= w[0]) || periods[0] == 0 {
        return Err(Error::InvalidSchedule { reason: "period counts must increase from 1".into() });
    }
    if slot >= initial.size() {
        return Err(Error::SlotOutOfRange { slot, n: initial.size() });
    }
    let lift = lift_path_with(family, path, initial, options)?;
    let target = &lift.final_frame.projectors()[slot];
    let psi0 = StateVector::from_projector(&initial.projectors()[slot]);

    let mut rows = Vec::with_capacity(periods.len());
    let mut last_state = None;
    for &m in periods {
        let psi = evolve_state(family, path, &psi0, m)?;
        rows.push(ScanRow { periods: m, infidelity: (1.0 - adiabatic_fidelity(&psi, target)).max(0.0) });
        last_state = Some(psi);
    }
    let last_state = last_state.unwrap();
    let (selected_slot, selected_fidelity) = lift
        .final_frame
        .projectors()
        .iter()
        .map(|p| adiabatic_fidelity(&last_state, p))
        .enumerate()
        .fold((0, f64::NEG_INFINITY), |acc, x| if x.1 > acc.1 { x } else { acc });

    Ok(ConvergenceScan {
        slot,
        exponent: log_log_slope(&rows),
        rows,
        selected_slot,
        selected_fidelity,
        lift,
    })
}

fn log_log_slope(rows: &[ScanRow]) -> Option<f64> {
    let pts: Vec<(f64, f64)> = rows
        .iter()
        .filter(|r| r.infidelity > 0.0)
        .map(|r| ((r.periods as f64).ln(), r.infidelity.ln()))
        .collect();
    if pts.len() < 2 {
        return None;
    }
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    Some(sxy / sxx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::ComplexMatrix;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn fidelity_cases() {
        let up = StateVector::new(vec![c(1.0, 0.0), c(0.0, 0.0)]).unwrap();
        let p_up = Projector::new(ComplexMatrix::from_diagonal(&[c(1.0, 0.0), c(0.0, 0.0)])).unwrap();
        let p_down = Projector::new(ComplexMatrix::from_diagonal(&[c(0.0, 0.0), c(1.0, 0.0)])).unwrap();
        assert_eq!(adiabatic_fidelity(&up, &p_up), 1.0);
        assert_eq!(adiabatic_fidelity(&up, &p_down), 0.0);
        // a = e_x against P(e_z): (1 + cos 90°)/2
        let plus_x = StateVector::normalized(vec![c(1.0, 0.0), c(1.0, 0.0)]).unwrap();
        assert!((adiabatic_fidelity(&plus_x, &p_up) - 0.5).abs() < 1e-15);
    }

    #[test]
    fn state_normalization() {
        assert!(StateVector::new(vec![c(1.0, 0.0), c(1.0, 0.0)]).is_err());
        assert!(StateVector::normalized(vec![c(0.0, 0.0)]).is_err());
        let s = StateVector::normalized(vec![c(3.0, 0.0), c(0.0, 4.0)]).unwrap();
        assert!((s.norm() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn slope_fit() {
        let rows: Vec<ScanRow> = [10usize, 100, 1000]
            .iter()
            .map(|&m| ScanRow { periods: m, infidelity: 3.0 / (m as f64).powi(2) })
            .collect();
        assert!((log_log_slope(&rows).unwrap() + 2.0).abs() < 1e-12);
        assert_eq!(log_log_slope(&rows[..1]), None);
    }
}
