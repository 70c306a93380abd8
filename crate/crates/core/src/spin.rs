//! Periodically kicked spin-½ in an in-plane magnetic field.
//!
//! The one-period evolution operator is
//!
//! ```text
//! U(B) = exp(−iλ(1 − σz)/2) · exp(−i B·σ/2),   B = B (cos φ, sin φ, 0)
//! ```
//!
//! with the kick strength locked to the field angle, λ = φ. U is then
//! single-valued on the plane with the origin removed, while its eigenphases
//! `−(φ ± Δ)/2` and eigenvectors are not: going once around the origin swaps
//! the two eigenprojectors.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::frame::{FamilyKind, SpectralFamily};
use crate::linalg::{ComplexMatrix, Projector};
use crate::path::{builders, ParameterPoint, Path};

/// Samples per preset path (segments).
pub const PRESET_SEGMENTS: usize = 256;

/// Radius of the bulged arc C_a′ at its midpoint, in units of π.
pub const PRESET_BULGE: f64 = 1.5;

/// Guard on |sin(Δ/2)| for [`analytic_bloch`].
pub const BLOCH_GUARD: f64 = 1e-8;

/// A point (Bx, By) of the punctured field plane.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FieldPoint {
    pub bx: f64,
    pub by: f64,
}

impl FieldPoint {
    pub fn new(bx: f64, by: f64) -> Self {
        FieldPoint { bx, by }
    }

    pub fn from_polar(b: f64, phi: f64) -> Self {
        FieldPoint { bx: b * phi.cos(), by: b * phi.sin() }
    }

    pub fn from_parameter(p: &ParameterPoint) -> Result<Self> {
        match p.coords() {
            &[bx, by] => Ok(FieldPoint { bx, by }),
            c => Err(Error::SizeMismatch { expected: 2, found: c.len() }),
        }
    }

    pub fn to_parameter(self) -> ParameterPoint {
        ParameterPoint::xy(self.bx, self.by)
    }

    /// Field magnitude B.
    pub fn magnitude(self) -> f64 {
        self.bx.hypot(self.by)
    }

    /// Field angle φ in (−π, π].
    pub fn angle(self) -> f64 {
        let phi = self.by.atan2(self.bx);
        if phi <= -PI {
            phi + 2.0 * PI
        } else {
            phi
        }
    }

    fn checked_polar(self) -> Result<(f64, f64)> {
        let b = self.magnitude();
        if b == 0.0 {
            return Err(Error::OriginExcluded);
        }
        Ok((b, self.angle()))
    }
}

/// Unit vector on the Bloch sphere.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BlochVector([f64; 3]);

impl BlochVector {
    pub const NORM_TOL: f64 = 1e-10;

    pub fn new(a: [f64; 3]) -> Result<Self> {
        let norm = (a[0] * a[0] + a[1] * a[1] + a[2] * a[2]).sqrt();
        if !norm.is_finite() || (norm - 1.0).abs() > Self::NORM_TOL {
            return Err(Error::NotNormalized { norm });
        }
        Ok(BlochVector(a))
    }

    /// Rescales any nonzero vector onto the sphere.
    pub fn normalized(a: [f64; 3]) -> Result<Self> {
        let norm = (a[0] * a[0] + a[1] * a[1] + a[2] * a[2]).sqrt();
        if !(norm > 0.0 && norm.is_finite()) {
            return Err(Error::NotNormalized { norm });
        }
        Ok(BlochVector([a[0] / norm, a[1] / norm, a[2] / norm]))
    }

    pub fn components(self) -> [f64; 3] {
        self.0
    }

    pub fn dot(self, other: BlochVector) -> f64 {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn distance(self, other: BlochVector) -> f64 {
        self.0.iter().zip(&other.0).map(|(a, b)| (a - b).powi(2)).sum::<f64>().sqrt()
    }
}

impl std::ops::Neg for BlochVector {
    type Output = BlochVector;
    fn neg(self) -> BlochVector {
        BlochVector([-self.0[0], -self.0[1], -self.0[2]])
    }
}

/// `U = e^{−iφ(1−σz)/2} e^{−iB·σ/2}` at the given field.
pub fn floquet_operator(p: FieldPoint) -> Result<ComplexMatrix> {
    let (b, phi) = p.checked_polar()?;
    let (c, s) = ((b / 2.0).cos(), (b / 2.0).sin());
    // exp(−iB·σ/2) = cos(B/2) I − i sin(B/2)(cos φ σx + sin φ σy)
    //              = [[c, −i s e^{−iφ}], [−i s e^{iφ}, c]]
    let minus_i = Complex64::new(0.0, -1.0);
    let rot = ComplexMatrix::from_array([
        [Complex64::new(c, 0.0), minus_i * s * Complex64::from_polar(1.0, -phi)],
        [minus_i * s * Complex64::from_polar(1.0, phi), Complex64::new(c, 0.0)],
    ]);
    let kick = ComplexMatrix::from_diagonal(&[Complex64::new(1.0, 0.0), Complex64::from_polar(1.0, -phi)]);
    Ok(&kick * &rot)
}

/// `Δ = 2 arccos(cos(φ/2) cos(B/2)) ∈ [0, 2π]`.
pub fn analytic_delta(p: FieldPoint) -> Result<f64> {
    let (b, phi) = p.checked_polar()?;
    Ok(2.0 * ((phi / 2.0).cos() * (b / 2.0).cos()).clamp(-1.0, 1.0).acos())
}

/// Eigenphases `(−(φ + Δ)/2, −(φ − Δ)/2)` of the Floquet operator, unreduced.
/// The first belongs to `P(a)`, the second to `P(−a)`.
pub fn analytic_eigenphases(p: FieldPoint) -> Result<(f64, f64)> {
    let delta = analytic_delta(p)?;
    let phi = p.angle();
    Ok((-(phi + delta) / 2.0, -(phi - delta) / 2.0))
}

/// Bloch vector `a` of the eigenprojector `P(a)` belonging to `e^{−i(φ+Δ)/2}`.
pub fn analytic_bloch(p: FieldPoint) -> Result<BlochVector> {
    let (b, phi) = p.checked_polar()?;
    let delta = analytic_delta(p)?;
    let sin_half = (delta / 2.0).sin();
    if sin_half.abs() < BLOCH_GUARD {
        return Err(Error::DegeneratePoint { delta, sin_half_delta: sin_half });
    }
    let (sb, cb) = ((b / 2.0).sin(), (b / 2.0).cos());
    let (sp, cp) = ((phi / 2.0).sin(), (phi / 2.0).cos());
    let e_rho = [phi.cos(), phi.sin(), 0.0];
    let e_phi = [-phi.sin(), phi.cos(), 0.0];
    let a = [
        (sb * (cp * e_rho[0] - sp * e_phi[0])) / sin_half,
        (sb * (cp * e_rho[1] - sp * e_phi[1])) / sin_half,
        (-sp * cb) / sin_half,
    ];
    // unit up to rounding; renormalize to keep the invariant tight
    BlochVector::normalized(a)
}

/// `P(a) = (I + a·σ)/2`.
pub fn bloch_projector(a: BlochVector) -> Projector {
    let [x, y, z] = a.0;
    let half = Complex64::new(0.5, 0.0);
    let mat = ComplexMatrix::from_array([
        [half * (1.0 + z), half * Complex64::new(x, -y)],
        [half * Complex64::new(x, y), half * (1.0 - z)],
    ]);
    Projector::new(mat).expect("unit Bloch vector gives a projector")
}

/// Inverse of [`bloch_projector`]: `a_i = Tr(P σ_i)`.
pub fn projector_to_bloch(p: &Projector) -> Result<BlochVector> {
    if p.dim() != 2 {
        return Err(Error::NotAProjector { reason: format!("expected 2x2, got {}x{}", p.dim(), p.dim()) });
    }
    let m = p.matrix();
    let a = [
        2.0 * m[(0, 1)].re,
        -2.0 * m[(0, 1)].im,
        (m[(0, 0)] - m[(1, 1)]).re,
    ];
    BlochVector::new(a).or_else(|_| BlochVector::normalized(a))
}

/// The driven spin as a Floquet family on the (Bx, By) plane.
#[derive(Debug, Clone, Copy, Default)]
pub struct SpinModel;

impl SpectralFamily for SpinModel {
    fn kind(&self) -> FamilyKind {
        FamilyKind::Floquet
    }

    fn size(&self) -> usize {
        2
    }

    fn parameter_dim(&self) -> usize {
        2
    }

    fn punctures(&self) -> Vec<ParameterPoint> {
        vec![ParameterPoint::xy(0.0, 0.0)]
    }

    fn evaluate(&self, point: &ParameterPoint) -> Result<ComplexMatrix> {
        floquet_operator(FieldPoint::from_parameter(point)?)
    }
}

/// Start of every preset path, `(π, 0)`.
pub fn preset_start() -> ParameterPoint {
    ParameterPoint::xy(PI, 0.0)
}

/// End of every preset path, `(−π, 0)`.
pub fn preset_end() -> ParameterPoint {
    ParameterPoint::xy(-PI, 0.0)
}

fn pin_endpoints(path: Path) -> Path {
    let mut samples = path.samples().to_vec();
    samples[0] = preset_start();
    *samples.last_mut().unwrap() = preset_end();
    Path::new(samples).expect("preset has many samples")
}

/// Upper semicircle of radius π, counterclockwise through (0, π).
pub fn preset_c_a() -> Path {
    let p = builders::arc((0.0, 0.0), PI, 0.0, PI, PRESET_SEGMENTS).expect("valid arc");
    pin_endpoints(p).with_name("C_a")
}

/// Upper arc bulging out to radius 1.5π at its middle; homotopic to C_a.
pub fn preset_c_a_prime() -> Path {
    let p = builders::radial_arc(
        (0.0, 0.0),
        |t| PI * (1.0 + (PRESET_BULGE - 1.0) * (PI * t).sin()),
        0.0,
        PI,
        PRESET_SEGMENTS,
    )
    .expect("valid arc");
    pin_endpoints(p).with_name("C_a'")
}

/// Lower semicircle of radius π, clockwise through (0, −π).
pub fn preset_c_c() -> Path {
    let p = builders::arc((0.0, 0.0), PI, 0.0, -PI, PRESET_SEGMENTS).expect("valid arc");
    pin_endpoints(p).with_name("C_c")
}

/// The three preset paths keyed by name: `C_a`, `C_a'`, `C_c`.
pub fn preset_paths() -> BTreeMap<String, Path> {
    [preset_c_a(), preset_c_a_prime(), preset_c_c()]
        .into_iter()
        .map(|p| (p.name().unwrap().to_string(), p))
        .collect()
}
