//! Ordered eigenprojector frames over a parameter point.
//!
//! An [`EigenFrame`] is one element of the fiber over its point: the full set
//! of rank-1 eigenprojectors in a particular order. Reordering by a
//! [`Permutation`] moves between elements of the same fiber, and
//! [`match_frames`] recognises which reordering relates two frames that sit
//! over nearby points.

use std::f64::consts::TAU;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{self, ComplexMatrix, Projector};
use crate::path::ParameterPoint;
use crate::permutation::Permutation;

/// Minimal eigenvalue separation accepted by [`frame_at`].
pub const DEFAULT_GAP_MIN: f64 = 1e-6;

/// Overlaps at or below this make a frame match ambiguous.
pub const AMBIGUITY_THRESHOLD: f64 = 0.5;

/// Whether a family produces Hamiltonians or one-period evolution operators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyKind {
    Hermitian,
    Floquet,
}

/// A parameter-dependent operator family λ ↦ H(λ) or λ ↦ U(λ).
///
/// Implementations must be stateless: `evaluate` is called from lifting and
/// evolution loops, possibly on several threads.
pub trait SpectralFamily: Send + Sync {
    fn kind(&self) -> FamilyKind;

    /// Matrix size N.
    fn size(&self) -> usize;

    /// Dimension of the parameter space.
    fn parameter_dim(&self) -> usize;

    /// Excluded points of the parameter space.
    fn punctures(&self) -> Vec<ParameterPoint> {
        Vec::new()
    }

    fn evaluate(&self, point: &ParameterPoint) -> Result<ComplexMatrix>;
}

impl<F: SpectralFamily + ?Sized> SpectralFamily for &F {
    fn kind(&self) -> FamilyKind {
        (**self).kind()
    }
    fn size(&self) -> usize {
        (**self).size()
    }
    fn parameter_dim(&self) -> usize {
        (**self).parameter_dim()
    }
    fn punctures(&self) -> Vec<ParameterPoint> {
        (**self).punctures()
    }
    fn evaluate(&self, point: &ParameterPoint) -> Result<ComplexMatrix> {
        (**self).evaluate(point)
    }
}

/// How [`frame_at`] orders the eigenprojectors.
#[derive(Debug, Clone, PartialEq)]
pub enum Order {
    /// Ascending eigenvalue, or ascending principal eigenphase for Floquet
    /// families.
    ByEigenvalue,
    /// The `ByEigenvalue` frame reordered by the given permutation.
    Explicit(Permutation),
}

/// Ordered eigenprojectors and their eigenvalues at one parameter point.
///
/// For Floquet families `eigenvalues` holds eigenphases θ with eigenvalue
/// `e^{iθ}`.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenFrame {
    point: ParameterPoint,
    kind: FamilyKind,
    projectors: Vec<Projector>,
    eigenvalues: Vec<f64>,
}

impl EigenFrame {
    /// Assembles a frame after checking completeness and orthogonality.
    pub fn new(
        point: ParameterPoint,
        kind: FamilyKind,
        projectors: Vec<Projector>,
        eigenvalues: Vec<f64>,
    ) -> Result<Self> {
        if projectors.len() != eigenvalues.len() {
            return Err(Error::SizeMismatch { expected: projectors.len(), found: eigenvalues.len() });
        }
        let frame = EigenFrame { point, kind, projectors, eigenvalues };
        let completeness = frame.completeness_error();
        let orthogonality = frame.orthogonality_error();
        if completeness > 1e-10 || orthogonality > 1e-10 {
            return Err(Error::NotAProjector {
                reason: format!(
                    "frame not a resolution of identity (completeness {completeness:.3e}, \
                     orthogonality {orthogonality:.3e})"
                ),
            });
        }
        Ok(frame)
    }

    pub fn point(&self) -> &ParameterPoint {
        &self.point
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    pub fn projectors(&self) -> &[Projector] {
        &self.projectors
    }

    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn size(&self) -> usize {
        self.projectors.len()
    }

    /// Minimal separation between eigenvalues; circular distance for
    /// eigenphases. Infinite for N = 1.
    pub fn min_gap(&self) -> f64 {
        spectral_gap(self.kind, &self.eigenvalues)
    }

    /// `‖Σ P_i − I‖_max`
    pub fn completeness_error(&self) -> f64 {
        let n = self.projectors.first().map_or(0, Projector::dim);
        let sum = self
            .projectors
            .iter()
            .fold(ComplexMatrix::zeros(n), |acc, p| &acc + p.matrix());
        sum.max_abs_diff(&ComplexMatrix::identity(n))
    }

    /// `max_{i,j} ‖P_i P_j − δ_ij P_i‖_max`
    pub fn orthogonality_error(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for (i, p) in self.projectors.iter().enumerate() {
            for (j, q) in self.projectors.iter().enumerate() {
                let prod = p.matrix() * q.matrix();
                let err = if i == j {
                    prod.max_abs_diff(p.matrix())
                } else {
                    prod.max_abs()
                };
                worst = worst.max(err);
            }
        }
        worst
    }

    /// `Σ e_i P_i`, or `Σ e^{iθ_i} P_i` for Floquet frames.
    pub fn reconstruct(&self) -> ComplexMatrix {
        let values: Vec<Complex64> = match self.kind {
            FamilyKind::Hermitian => self.eigenvalues.iter().map(|&e| Complex64::new(e, 0.0)).collect(),
            FamilyKind::Floquet => self.eigenvalues.iter().map(|&t| Complex64::from_polar(1.0, t)).collect(),
        };
        linalg::reconstruct(&values, &self.projectors)
    }

    /// `p_σ`: slot `n` of the result holds slot `σ(n)` of `self`.
    pub fn permuted(&self, sigma: &Permutation) -> Result<EigenFrame> {
        apply_permutation(self, sigma)
    }
}

/// Circular distance between two angles.
pub fn circular_distance(a: f64, b: f64) -> f64 {
    let d = (a - b).rem_euclid(TAU);
    d.min(TAU - d)
}

fn spectral_gap(kind: FamilyKind, values: &[f64]) -> f64 {
    let mut gap = f64::INFINITY;
    for i in 0..values.len() {
        for j in i + 1..values.len() {
            let d = match kind {
                FamilyKind::Hermitian => (values[i] - values[j]).abs(),
                FamilyKind::Floquet => circular_distance(values[i], values[j]),
            };
            gap = gap.min(d);
        }
    }
    gap
}

fn check_puncture(family: &dyn SpectralFamily, point: &ParameterPoint) -> Result<()> {
    if point.dim() != family.parameter_dim() {
        return Err(Error::SizeMismatch { expected: family.parameter_dim(), found: point.dim() });
    }
    if family.punctures().iter().any(|p| p.distance(point) <= 1e-12) {
        return Err(Error::PunctureHit { point: point.coords().to_vec() });
    }
    Ok(())
}

/// Frame over `point` with the default gap threshold.
pub fn frame_at(family: &dyn SpectralFamily, point: &ParameterPoint, order: Order) -> Result<EigenFrame> {
    frame_at_with_gap(family, point, order, DEFAULT_GAP_MIN)
}

/// Diagonalizes the family at `point` and orders the eigenprojectors.
pub fn frame_at_with_gap(
    family: &dyn SpectralFamily,
    point: &ParameterPoint,
    order: Order,
    gap_min: f64,
) -> Result<EigenFrame> {
    check_puncture(family, point)?;
    let matrix = family.evaluate(point)?;
    let kind = family.kind();
    let (eigenvalues, projectors) = match kind {
        FamilyKind::Hermitian => {
            let eig = linalg::hermitian_eig(&matrix)?;
            (eig.eigenvalues, eig.projectors)
        }
        FamilyKind::Floquet => {
            let eig = linalg::unitary_eig(&matrix)?;
            (eig.eigenphases, eig.projectors)
        }
    };
    let gap = spectral_gap(kind, &eigenvalues);
    if gap <= gap_min {
        return Err(Error::DegenerateSpectrum { point: point.coords().to_vec(), gap, gap_min });
    }
    let frame = EigenFrame { point: point.clone(), kind, projectors, eigenvalues };
    match order {
        Order::ByEigenvalue => Ok(frame),
        Order::Explicit(sigma) => apply_permutation(&frame, &sigma),
    }
}

/// `p_σ`: slot `n` of the result is slot `σ(n)` of `frame`.
pub fn apply_permutation(frame: &EigenFrame, sigma: &Permutation) -> Result<EigenFrame> {
    if sigma.len() != frame.size() {
        return Err(Error::SizeMismatch { expected: frame.size(), found: sigma.len() });
    }
    Ok(EigenFrame {
        point: frame.point.clone(),
        kind: frame.kind,
        projectors: sigma.images().iter().map(|&k| frame.projectors[k].clone()).collect(),
        eigenvalues: sigma.images().iter().map(|&k| frame.eigenvalues[k]).collect(),
    })
}

/// All N! orderings of `frame`, indexed like [`Permutation::all`].
pub fn enumerate_fiber(frame: &EigenFrame) -> Result<Vec<EigenFrame>> {
    let n = frame.size();
    if n > 6 {
        return Err(Error::TooLarge { n });
    }
    Permutation::all(n).iter().map(|s| apply_permutation(frame, s)).collect()
}

/// `O[i][j] = Tr(P^a_i P^b_j)`
pub fn overlap_matrix(a: &EigenFrame, b: &EigenFrame) -> Vec<Vec<f64>> {
    a.projectors
        .iter()
        .map(|p| b.projectors.iter().map(|q| p.overlap(q)).collect())
        .collect()
}

/// The reordering that relates two frames.
#[derive(Debug, Clone, PartialEq)]
pub struct FrameMatch {
    /// `b ≈ apply_permutation(a, σ)`, i.e. slot `n` of `b` continues slot
    /// `σ(n)` of `a`.
    pub sigma: Permutation,
    /// Smallest matched overlap `Tr(P^b_n P^a_{σ(n)})`.
    pub min_overlap: f64,
}

/// Identifies `b` as a reordering of `a` by maximal projector overlap.
///
/// Each slot of `b` takes the slot of `a` it overlaps most. Since the overlap
/// matrix of two complete rank-1 sets is doubly stochastic, an overlap above
/// one half can only be achieved by a single partner, so the greedy choice is
/// the optimal assignment whenever it succeeds.
pub fn match_frames(a: &EigenFrame, b: &EigenFrame) -> Result<FrameMatch> {
    if a.size() != b.size() {
        return Err(Error::SizeMismatch { expected: a.size(), found: b.size() });
    }
    let overlaps = overlap_matrix(a, b);
    let n = a.size();
    let mut images = Vec::with_capacity(n);
    let mut min_overlap: f64 = 1.0;
    for col in 0..n {
        let (best, value) = overlaps
            .iter()
            .map(|r| r[col])
            .enumerate()
            .fold((0, f64::NEG_INFINITY), |acc, x| if x.1 > acc.1 { x } else { acc });
        min_overlap = min_overlap.min(value);
        images.push(best);
    }
    if min_overlap <= AMBIGUITY_THRESHOLD {
        return Err(Error::AmbiguousMatch { min_overlap });
    }
    let sigma = Permutation::new(images).map_err(|_| Error::AmbiguousMatch { min_overlap })?;
    Ok(FrameMatch { sigma, min_overlap: min_overlap.min(1.0) })
}

#[cfg(test)]
mod tests {
    use super::*;

    struct Diagonal;

    impl SpectralFamily for Diagonal {
        fn kind(&self) -> FamilyKind {
            FamilyKind::Hermitian
        }
        fn size(&self) -> usize {
            2
        }
        fn parameter_dim(&self) -> usize {
            1
        }
        fn evaluate(&self, _: &ParameterPoint) -> Result<ComplexMatrix> {
            Ok(ComplexMatrix::from_diagonal(&[Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)]))
        }
    }

    struct ThreeLevel;

    impl SpectralFamily for ThreeLevel {
        fn kind(&self) -> FamilyKind {
            FamilyKind::Hermitian
        }
        fn size(&self) -> usize {
            3
        }
        fn parameter_dim(&self) -> usize {
            1
        }
        fn punctures(&self) -> Vec<ParameterPoint> {
            vec![ParameterPoint::new(vec![5.0]).unwrap()]
        }
        fn evaluate(&self, p: &ParameterPoint) -> Result<ComplexMatrix> {
            let x = p.coords()[0];
            let c = |re, im| Complex64::new(re, im);
            Ok(ComplexMatrix::from_array([
                [c(-1.0, 0.0), c(0.3 * x, 0.1), c(0.0, 0.0)],
                [c(0.3 * x, -0.1), c(0.2, 0.0), c(0.0, 0.2 * x)],
                [c(0.0, 0.0), c(0.0, -0.2 * x), c(1.5, 0.0)],
            ]))
        }
    }

    fn pt(x: f64) -> ParameterPoint {
        ParameterPoint::new(vec![x]).unwrap()
    }

    #[test]
    fn diagonal_family_orders_ascending() {
        let f = frame_at(&Diagonal, &pt(0.0), Order::ByEigenvalue).unwrap();
        assert_eq!(f.eigenvalues(), &[0.0, 1.0]);
        let e11 = ComplexMatrix::from_diagonal(&[Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)]);
        assert!(f.projectors()[0].matrix().max_abs_diff(&e11) < 1e-15);
    }

    #[test]
    fn explicit_order_permutes() {
        let sigma = Permutation::transposition(2, 0, 1);
        let f = frame_at(&Diagonal, &pt(0.0), Order::Explicit(sigma)).unwrap();
        assert_eq!(f.eigenvalues(), &[1.0, 0.0]);
    }

    #[test]
    fn puncture_and_degeneracy() {
        assert!(matches!(
            frame_at(&ThreeLevel, &pt(5.0), Order::ByEigenvalue),
            Err(Error::PunctureHit { .. })
        ));
        assert!(matches!(
            frame_at_with_gap(&Diagonal, &pt(0.0), Order::ByEigenvalue, 2.0),
            Err(Error::DegenerateSpectrum { .. })
        ));
    }

    #[test]
    fn frame_invariants_hold() {
        let f = frame_at(&ThreeLevel, &pt(0.7), Order::ByEigenvalue).unwrap();
        assert!(f.completeness_error() < 1e-10);
        assert!(f.orthogonality_error() < 1e-10);
        let h = ThreeLevel.evaluate(&pt(0.7)).unwrap();
        assert!(f.reconstruct().max_abs_diff(&h) < 1e-9);
    }

    #[test]
    fn fiber_sizes() {
        let f2 = frame_at(&Diagonal, &pt(0.0), Order::ByEigenvalue).unwrap();
        assert_eq!(enumerate_fiber(&f2).unwrap().len(), 2);
        let f3 = frame_at(&ThreeLevel, &pt(0.3), Order::ByEigenvalue).unwrap();
        let fiber = enumerate_fiber(&f3).unwrap();
        assert_eq!(fiber.len(), 6);
        // each element is reached by exactly one permutation
        for element in &fiber {
            let hits = Permutation::all(3)
                .iter()
                .filter(|s| apply_permutation(&f3, s).unwrap() == *element)
                .count();
            assert_eq!(hits, 1);
            assert_eq!(element.point(), f3.point());
        }
    }

    #[test]
    fn match_recovers_relabeling() {
        let f = frame_at(&ThreeLevel, &pt(0.3), Order::ByEigenvalue).unwrap();
        let m = match_frames(&f, &f).unwrap();
        assert!(m.sigma.is_identity());
        assert_eq!(m.min_overlap, 1.0);
        for tau in Permutation::all(3) {
            let g = apply_permutation(&f, &tau).unwrap();
            let m = match_frames(&f, &g).unwrap();
            assert_eq!(m.sigma, tau);
            assert!((m.min_overlap - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn match_detects_ambiguity() {
        // frames of σx and σz overlap exactly one half everywhere
        struct Rot;
        impl SpectralFamily for Rot {
            fn kind(&self) -> FamilyKind {
                FamilyKind::Hermitian
            }
            fn size(&self) -> usize {
                2
            }
            fn parameter_dim(&self) -> usize {
                1
            }
            fn evaluate(&self, p: &ParameterPoint) -> Result<ComplexMatrix> {
                let [sx, _, sz] = linalg::pauli();
                Ok(if p.coords()[0] > 0.0 { sx } else { sz })
            }
        }
        let a = frame_at(&Rot, &pt(-1.0), Order::ByEigenvalue).unwrap();
        let b = frame_at(&Rot, &pt(1.0), Order::ByEigenvalue).unwrap();
        assert!(matches!(match_frames(&a, &b), Err(Error::AmbiguousMatch { .. })));
    }

    #[test]
    fn fiber_guard() {
        struct Big;
        impl SpectralFamily for Big {
            fn kind(&self) -> FamilyKind {
                FamilyKind::Hermitian
            }
            fn size(&self) -> usize {
                7
            }
            fn parameter_dim(&self) -> usize {
                1
            }
            fn evaluate(&self, _: &ParameterPoint) -> Result<ComplexMatrix> {
                let d: Vec<Complex64> = (0..7).map(|k| Complex64::new(k as f64, 0.0)).collect();
                Ok(ComplexMatrix::from_diagonal(&d))
            }
        }
        let f = frame_at(&Big, &pt(0.0), Order::ByEigenvalue).unwrap();
        assert!(matches!(enumerate_fiber(&f), Err(Error::TooLarge { n: 7 })));
    }

    #[test]
    fn size_mismatch() {
        let f = frame_at(&Diagonal, &pt(0.0), Order::ByEigenvalue).unwrap();
        assert!(matches!(
            apply_permutation(&f, &Permutation::identity(3)),
            Err(Error::SizeMismatch { .. })
        ));
        let g = frame_at(&ThreeLevel, &pt(0.0), Order::ByEigenvalue).unwrap();
        assert!(matches!(match_frames(&f, &g), Err(Error::SizeMismatch { .. })));
    }

    #[test]
    fn circular_distance_wraps() {
        assert!((circular_distance(3.1, -3.1) - (TAU - 6.2)).abs() < 1e-12);
        assert_eq!(circular_distance(0.5, 0.5), 0.0);
    }
}
