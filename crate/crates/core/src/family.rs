//! Matrix-valued families given by explicit coefficient matrices.

use crate::error::{Error, Result};
use crate::frame::{FamilyKind, SpectralFamily};
use crate::linalg::{unitary_from_hermitian, ComplexMatrix};
use crate::path::ParameterPoint;

/// `H(λ) = H_0 + Σ_i λ_i H_i`, or `U(λ) = exp(−i H(λ))` for the Floquet kind.
///
/// All coefficient matrices must be Hermitian and of the same size.
#[derive(Debug, Clone)]
pub struct AffineFamily {
    kind: FamilyKind,
    base: ComplexMatrix,
    terms: Vec<ComplexMatrix>,
    punctures: Vec<ParameterPoint>,
}

impl AffineFamily {
    pub fn new(
        kind: FamilyKind,
        base: ComplexMatrix,
        terms: Vec<ComplexMatrix>,
        punctures: Vec<ParameterPoint>,
    ) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::SizeMismatch { expected: 1, found: 0 });
        }
        let n = base.dim();
        for m in std::iter::once(&base).chain(&terms) {
            if m.dim() != n {
                return Err(Error::SizeMismatch { expected: n, found: m.dim() });
            }
            let deviation = m.hermitian_deviation();
            if deviation > 1e-12 {
                return Err(Error::NotHermitian { deviation });
            }
        }
        if let Some(p) = punctures.iter().find(|p| p.dim() != terms.len()) {
            return Err(Error::SizeMismatch { expected: terms.len(), found: p.dim() });
        }
        Ok(AffineFamily { kind, base, terms, punctures })
    }

    /// The Hermitian generator `H(λ)`.
    pub fn generator(&self, point: &ParameterPoint) -> Result<ComplexMatrix> {
        if point.dim() != self.terms.len() {
            return Err(Error::SizeMismatch { expected: self.terms.len(), found: point.dim() });
        }
        Ok(point.coords().iter().zip(&self.terms).fold(self.base.clone(), |acc, (&x, m)| {
            &acc + &m.scale(num_complex::Complex64::new(x, 0.0))
        }))
    }
}

impl SpectralFamily for AffineFamily {
    fn kind(&self) -> FamilyKind {
        self.kind
    }

    fn size(&self) -> usize {
        self.base.dim()
    }

    fn parameter_dim(&self) -> usize {
        self.terms.len()
    }

    fn punctures(&self) -> Vec<ParameterPoint> {
        self.punctures.clone()
    }

    fn evaluate(&self, point: &ParameterPoint) -> Result<ComplexMatrix> {
        let h = self.generator(point)?;
        match self.kind {
            FamilyKind::Hermitian => Ok(h),
            FamilyKind::Floquet => unitary_from_hermitian(&h, 1.0),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::pauli;
    use num_complex::Complex64;

    #[test]
    fn affine_hermitian_and_floquet() {
        let [sx, sy, sz] = pauli();
        let h = AffineFamily::new(FamilyKind::Hermitian, sz.clone(), vec![sx.clone(), sy.clone()], vec![]).unwrap();
        let m = h.evaluate(&ParameterPoint::xy(2.0, 0.0)).unwrap();
        let expected = &sz + &sx.scale(Complex64::new(2.0, 0.0));
        assert!(m.max_abs_diff(&expected) < 1e-15);

        let u = AffineFamily::new(FamilyKind::Floquet, sz, vec![sx, sy], vec![]).unwrap();
        assert!(u.evaluate(&ParameterPoint::xy(0.3, -0.4)).unwrap().is_unitary(1e-12));
        assert!(u.evaluate(&ParameterPoint::new(vec![1.0]).unwrap()).is_err());
    }

    #[test]
    fn rejects_non_hermitian_terms() {
        let a = ComplexMatrix::from_array([
            [Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)],
            [Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0)],
        ]);
        let r = AffineFamily::new(FamilyKind::Hermitian, ComplexMatrix::zeros(2), vec![a], vec![]);
        assert!(matches!(r, Err(Error::NotHermitian { .. })));
    }
}
