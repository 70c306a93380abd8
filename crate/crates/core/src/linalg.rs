//! Small dense complex linear algebra.
//!
//! Everything here is sized for N of a handful: matrices are stored row-major
//! in a flat `Vec`, and the Hermitian eigensolver is a cyclic complex Jacobi
//! iteration. Unitary (more generally normal) matrices are diagonalized through
//! their commuting Hermitian parts `A = (U + U†)/2` and `B = (U − U†)/2i`.

use std::f64::consts::PI;
use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Eigenvalues of `A` closer than this are treated as one block when
/// diagonalizing a unitary matrix.
pub const DEGENERACY_BLOCK_TOL: f64 = 1e-8;

const JACOBI_MAX_SWEEPS: usize = 100;

/// Square complex matrix, row-major.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix {
    dim: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn zeros(dim: usize) -> Self {
        ComplexMatrix { dim, data: vec![ZERO; dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = ONE;
        }
        m
    }

    pub fn from_diagonal(diag: &[Complex64]) -> Self {
        let mut m = Self::zeros(diag.len());
        for (i, &d) in diag.iter().enumerate() {
            m[(i, i)] = d;
        }
        m
    }

    /// Builds a matrix from rows; every row must have as many entries as
    /// there are rows.
    pub fn from_rows(rows: &[Vec<Complex64>]) -> Result<Self> {
        let dim = rows.len();
        let mut data = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(Error::SizeMismatch { expected: dim, found: row.len() });
            }
            data.extend_from_slice(row);
        }
        let m = ComplexMatrix { dim, data };
        if !m.is_finite() {
            return Err(Error::NonFinite { what: "matrix" });
        }
        Ok(m)
    }

    /// Convenience constructor for fixed-size literals.
    pub fn from_array<const N: usize>(rows: [[Complex64; N]; N]) -> Self {
        ComplexMatrix { dim: N, data: rows.iter().flatten().copied().collect() }
    }

    /// `|v⟩⟨w|`
    pub fn outer(v: &[Complex64], w: &[Complex64]) -> Self {
        assert_eq!(v.len(), w.len());
        let dim = v.len();
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            for j in 0..dim {
                m[(i, j)] = v[i] * w[j].conj();
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rows(&self) -> Vec<Vec<Complex64>> {
        self.data.chunks(self.dim.max(1)).map(|r| r.to_vec()).collect()
    }

    pub fn adjoint(&self) -> Self {
        let n = self.dim;
        let mut m = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                m[(j, i)] = self[(i, j)].conj();
            }
        }
        m
    }

    pub fn scale(&self, s: Complex64) -> Self {
        ComplexMatrix { dim: self.dim, data: self.data.iter().map(|&x| x * s).collect() }
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|i| self[(i, i)]).sum()
    }

    /// `Tr(self · other)` without forming the product.
    pub fn trace_product(&self, other: &ComplexMatrix) -> Complex64 {
        assert_eq!(self.dim, other.dim);
        let n = self.dim;
        let mut acc = ZERO;
        for i in 0..n {
            for j in 0..n {
                acc += self[(i, j)] * other[(j, i)];
            }
        }
        acc
    }

    pub fn mul_vec(&self, v: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(self.dim, v.len());
        self.data
            .chunks(self.dim)
            .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Largest entrywise modulus of `self − other`.
    pub fn max_abs_diff(&self, other: &ComplexMatrix) -> f64 {
        assert_eq!(self.dim, other.dim);
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|x| x.norm()).fold(0.0, f64::max)
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|x| x.re.is_finite() && x.im.is_finite())
    }

    pub fn hermitian_deviation(&self) -> f64 {
        self.max_abs_diff(&self.adjoint())
    }

    pub fn unitary_deviation(&self) -> f64 {
        (&self.adjoint() * self).max_abs_diff(&Self::identity(self.dim))
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermitian_deviation() <= tol
    }

    /// `‖U†U − I‖_max ≤ tol`
    pub fn is_unitary(&self, tol: f64) -> bool {
        self.unitary_deviation() <= tol
    }

    fn column(&self, j: usize) -> Vec<Complex64> {
        (0..self.dim).map(|i| self[(i, j)]).collect()
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[i * self.dim + j]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.data[i * self.dim + j]
    }
}

impl<'a> Mul<&'a ComplexMatrix> for &'a ComplexMatrix {
    type Output = ComplexMatrix;
    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim);
        let n = self.dim;
        let mut out = ComplexMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                if a == ZERO {
                    continue;
                }
                for j in 0..n {
                    out[(i, j)] += a * rhs[(k, j)];
                }
            }
        }
        out
    }
}

impl<'a> Add<&'a ComplexMatrix> for &'a ComplexMatrix {
    type Output = ComplexMatrix;
    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim);
        ComplexMatrix {
            dim: self.dim,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<'a> Sub<&'a ComplexMatrix> for &'a ComplexMatrix {
    type Output = ComplexMatrix;
    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim);
        ComplexMatrix {
            dim: self.dim,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix({}x{}) [", self.dim, self.dim)?;
        for row in self.data.chunks(self.dim.max(1)) {
            write!(f, "  ")?;
            for x in row {
                write!(f, "{:>+.6}{:>+.6}i  ", x.re, x.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// Pauli matrices σx, σy, σz.
pub fn pauli() -> [ComplexMatrix; 3] {
    let i = Complex64::i();
    [
        ComplexMatrix::from_array([[ZERO, ONE], [ONE, ZERO]]),
        ComplexMatrix::from_array([[ZERO, -i], [i, ZERO]]),
        ComplexMatrix::from_array([[ONE, ZERO], [ZERO, -ONE]]),
    ]
}

/// Rank-1 orthogonal projector.
#[derive(Debug, Clone, PartialEq)]
pub struct Projector(ComplexMatrix);

impl Projector {
    pub const HERMITIAN_TOL: f64 = 1e-12;
    pub const IDEMPOTENT_TOL: f64 = 1e-10;
    pub const TRACE_TOL: f64 = 1e-10;

    /// Validates Hermiticity, idempotency and unit trace.
    pub fn new(matrix: ComplexMatrix) -> Result<Self> {
        if !matrix.is_finite() {
            return Err(Error::NonFinite { what: "projector" });
        }
        let herm = matrix.hermitian_deviation();
        if herm > Self::HERMITIAN_TOL {
            return Err(Error::NotAProjector { reason: format!("not Hermitian ({herm:.3e})") });
        }
        let idem = (&matrix * &matrix).max_abs_diff(&matrix);
        if idem > Self::IDEMPOTENT_TOL {
            return Err(Error::NotAProjector { reason: format!("not idempotent ({idem:.3e})") });
        }
        let tr = (matrix.trace() - ONE).norm();
        if tr > Self::TRACE_TOL {
            return Err(Error::NotAProjector { reason: format!("trace off by {tr:.3e}") });
        }
        Ok(Projector(matrix))
    }

    /// `|v⟩⟨v| / ⟨v|v⟩`. Hermitian to the last bit by construction.
    pub fn from_vector(v: &[Complex64]) -> Self {
        let norm_sq: f64 = v.iter().map(|x| x.norm_sqr()).sum();
        let inv = 1.0 / norm_sq.sqrt();
        let u: Vec<Complex64> = v.iter().map(|x| x * inv).collect();
        Projector(ComplexMatrix::outer(&u, &u))
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.dim
    }

    /// `Tr(P Q)`, the squared fidelity between the two rays.
    pub fn overlap(&self, other: &Projector) -> f64 {
        self.0.trace_product(&other.0).re
    }

    /// A unit vector spanning the range, normalized so that its largest
    /// component is real and positive.
    pub fn range_vector(&self) -> Vec<Complex64> {
        let n = self.0.dim;
        let k = (0..n)
            .max_by(|&a, &b| self.0[(a, a)].re.total_cmp(&self.0[(b, b)].re))
            .unwrap_or(0);
        let col = self.0.column(k);
        let norm = col.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
        col.iter().map(|x| x / norm).collect()
    }
}

/// Spectral decomposition of a Hermitian matrix, eigenvalues ascending.
#[derive(Debug, Clone)]
pub struct HermitianEig {
    pub eigenvalues: Vec<f64>,
    pub projectors: Vec<Projector>,
}

/// Spectral decomposition of a unitary matrix, eigenphases ascending in (−π, π].
#[derive(Debug, Clone)]
pub struct UnitaryEig {
    pub eigenphases: Vec<f64>,
    pub projectors: Vec<Projector>,
}

/// Eigenvalues and eigenvectors (columns of the returned matrix), unsorted.
fn jacobi_eigen(h: &ComplexMatrix) -> (Vec<f64>, ComplexMatrix) {
    let n = h.dim;
    let mut a = h.clone();
    // exact Hermitian start: average with the adjoint
    for i in 0..n {
        a[(i, i)] = Complex64::new(a[(i, i)].re, 0.0);
        for j in i + 1..n {
            let avg = (a[(i, j)] + a[(j, i)].conj()) * 0.5;
            a[(i, j)] = avg;
            a[(j, i)] = avg.conj();
        }
    }
    let mut v = ComplexMatrix::identity(n);
    let scale = a.max_abs().max(f64::MIN_POSITIVE);

    for _ in 0..JACOBI_MAX_SWEEPS {
        let off: f64 = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .map(|(i, j)| a[(i, j)].norm_sqr())
            .sum();
        if off.sqrt() <= f64::EPSILON * 1e-2 * scale {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[(p, q)];
                let r = apq.norm();
                if r <= f64::EPSILON * 1e-3 * scale {
                    a[(p, q)] = ZERO;
                    a[(q, p)] = ZERO;
                    continue;
                }
                let phase = apq / r;
                let app = a[(p, p)].re;
                let aqq = a[(q, q)].re;
                let tau = (aqq - app) / (2.0 * r);
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    -1.0 / (-tau + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                // G = diag(1, e^{-iα}) · [[c, s], [-s, c]] restricted to (p, q)
                let g_pp = Complex64::new(c, 0.0);
                let g_pq = Complex64::new(s, 0.0);
                let g_qp = -phase.conj() * s;
                let g_qq = phase.conj() * c;

                // A ← A G (columns p, q)
                for k in 0..n {
                    let akp = a[(k, p)];
                    let akq = a[(k, q)];
                    a[(k, p)] = akp * g_pp + akq * g_qp;
                    a[(k, q)] = akp * g_pq + akq * g_qq;
                }
                // A ← G† A (rows p, q)
                for k in 0..n {
                    let apk = a[(p, k)];
                    let aqk = a[(q, k)];
                    a[(p, k)] = g_pp.conj() * apk + g_qp.conj() * aqk;
                    a[(q, k)] = g_pq.conj() * apk + g_qq.conj() * aqk;
                }
                a[(p, q)] = ZERO;
                a[(q, p)] = ZERO;
                a[(p, p)] = Complex64::new(a[(p, p)].re, 0.0);
                a[(q, q)] = Complex64::new(a[(q, q)].re, 0.0);
                // V ← V G
                for k in 0..n {
                    let vkp = v[(k, p)];
                    let vkq = v[(k, q)];
                    v[(k, p)] = vkp * g_pp + vkq * g_qp;
                    v[(k, q)] = vkp * g_pq + vkq * g_qq;
                }
            }
        }
    }
    let values = (0..n).map(|i| a[(i, i)].re).collect();
    (values, v)
}

/// Ascending order of `values`; ties keep their original index order.
fn ascending_order(values: &[f64]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..values.len()).collect();
    idx.sort_by(|&i, &j| values[i].total_cmp(&values[j]).then(i.cmp(&j)));
    idx
}

/// Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.
pub fn hermitian_eig(h: &ComplexMatrix) -> Result<HermitianEig> {
    if !h.is_finite() {
        return Err(Error::NonFinite { what: "matrix" });
    }
    let deviation = h.hermitian_deviation();
    if deviation > 1e-10 {
        return Err(Error::NotHermitian { deviation });
    }
    if h.dim == 0 {
        return Err(Error::SizeMismatch { expected: 1, found: 0 });
    }
    let (values, vectors) = jacobi_eigen(h);
    let order = ascending_order(&values);
    Ok(HermitianEig {
        eigenvalues: order.iter().map(|&k| values[k]).collect(),
        projectors: order.iter().map(|&k| Projector::from_vector(&vectors.column(k))).collect(),
    })
}

/// Principal eigenphase in (−π, π].
pub fn principal_phase(z: Complex64) -> f64 {
    let theta = z.im.atan2(z.re);
    if theta <= -PI {
        theta + 2.0 * PI
    } else {
        theta
    }
}

/// Eigendecomposition of a unitary matrix.
///
/// `A = (U + U†)/2` is diagonalized first; inside each block of A-eigenvalues
/// closer than [`DEGENERACY_BLOCK_TOL`] the restriction of `B = (U − U†)/2i`
/// is diagonalized to split the block.
pub fn unitary_eig(u: &ComplexMatrix) -> Result<UnitaryEig> {
    if !u.is_finite() {
        return Err(Error::NonFinite { what: "matrix" });
    }
    let deviation = u.unitary_deviation();
    if deviation > 1e-10 {
        return Err(Error::NotUnitary { deviation });
    }
    let n = u.dim;
    if n == 0 {
        return Err(Error::SizeMismatch { expected: 1, found: 0 });
    }
    let ud = u.adjoint();
    let a = (u + &ud).scale(Complex64::new(0.5, 0.0));
    let b = (u - &ud).scale(Complex64::new(0.0, -0.5));

    let (a_vals, a_vecs) = jacobi_eigen(&a);
    let order = ascending_order(&a_vals);
    let mut vectors: Vec<Vec<Complex64>> = Vec::with_capacity(n);

    let mut start = 0;
    while start < n {
        let mut end = start + 1;
        while end < n && a_vals[order[end]] - a_vals[order[end - 1]] < DEGENERACY_BLOCK_TOL {
            end += 1;
        }
        let block: Vec<Vec<Complex64>> =
            order[start..end].iter().map(|&k| a_vecs.column(k)).collect();
        if block.len() == 1 {
            vectors.push(block.into_iter().next().unwrap());
        } else {
            // B restricted to the block: Bᵣ[i][j] = ⟨v_i| B |v_j⟩
            let k = block.len();
            let mut restricted = ComplexMatrix::zeros(k);
            let b_cols: Vec<Vec<Complex64>> = block.iter().map(|v| b.mul_vec(v)).collect();
            for i in 0..k {
                for j in 0..k {
                    restricted[(i, j)] =
                        block[i].iter().zip(&b_cols[j]).map(|(x, y)| x.conj() * y).sum();
                }
            }
            let (_, w) = jacobi_eigen(&restricted);
            for col in 0..k {
                let mut v = vec![ZERO; n];
                for (i, bv) in block.iter().enumerate() {
                    let coef = w[(i, col)];
                    for (vr, x) in v.iter_mut().zip(bv) {
                        *vr += coef * x;
                    }
                }
                vectors.push(v);
            }
        }
        start = end;
    }

    let phases: Vec<f64> = vectors
        .iter()
        .map(|v| {
            let uv = u.mul_vec(v);
            let z: Complex64 = v.iter().zip(&uv).map(|(x, y)| x.conj() * y).sum();
            principal_phase(z)
        })
        .collect();
    let order = ascending_order(&phases);
    Ok(UnitaryEig {
        eigenphases: order.iter().map(|&k| phases[k]).collect(),
        projectors: order.iter().map(|&k| Projector::from_vector(&vectors[k])).collect(),
    })
}

/// `e^{−iHt} = Σ e^{−i e_k t} P_k`
pub fn unitary_from_hermitian(h: &ComplexMatrix, t: f64) -> Result<ComplexMatrix> {
    let eig = hermitian_eig(h)?;
    let mut out = ComplexMatrix::zeros(h.dim);
    for (e, p) in eig.eigenvalues.iter().zip(&eig.projectors) {
        let z = Complex64::from_polar(1.0, -e * t);
        out = &out + &p.matrix().scale(z);
    }
    Ok(out)
}

/// `Σ λ_k P_k`
pub fn reconstruct(values: &[Complex64], projectors: &[Projector]) -> ComplexMatrix {
    let dim = projectors.first().map_or(0, Projector::dim);
    projectors
        .iter()
        .zip(values)
        .fold(ComplexMatrix::zeros(dim), |acc, (p, &z)| &acc + &p.matrix().scale(z))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn identity_eig() {
        let eig = hermitian_eig(&ComplexMatrix::identity(2)).unwrap();
        assert_eq!(eig.eigenvalues, vec![1.0, 1.0]);
        let sum = &eig.projectors[0].matrix().clone() + eig.projectors[1].matrix();
        assert!(sum.max_abs_diff(&ComplexMatrix::identity(2)) < 1e-12);
        assert!(eig.projectors[0].overlap(&eig.projectors[1]).abs() < 1e-12);
    }

    #[test]
    fn sigma_x_eig() {
        let [sx, _, _] = pauli();
        let eig = hermitian_eig(&sx).unwrap();
        assert!((eig.eigenvalues[0] + 1.0).abs() < 1e-14);
        assert!((eig.eigenvalues[1] - 1.0).abs() < 1e-14);
        let id = ComplexMatrix::identity(2);
        let minus = (&id - &sx).scale(c(0.5, 0.0));
        let plus = (&id + &sx).scale(c(0.5, 0.0));
        assert!(eig.projectors[0].matrix().max_abs_diff(&minus) < 1e-12);
        assert!(eig.projectors[1].matrix().max_abs_diff(&plus) < 1e-12);
    }

    #[test]
    fn rejects_non_hermitian() {
        let m = ComplexMatrix::from_array([[ONE, ONE], [ZERO, ONE]]);
        assert!(matches!(hermitian_eig(&m), Err(Error::NotHermitian { .. })));
        assert!(matches!(unitary_from_hermitian(&m, 1.0), Err(Error::NotHermitian { .. })));
    }

    #[test]
    fn rejects_non_unitary() {
        let m = ComplexMatrix::from_diagonal(&[ONE, c(2.0, 0.0)]);
        assert!(matches!(unitary_eig(&m), Err(Error::NotUnitary { .. })));
    }

    #[test]
    fn diagonal_unitary() {
        let u = ComplexMatrix::from_diagonal(&[ONE, Complex64::i()]);
        let eig = unitary_eig(&u).unwrap();
        assert!(eig.eigenphases[0].abs() < 1e-15);
        assert!((eig.eigenphases[1] - PI / 2.0).abs() < 1e-15);
        let e00 = ComplexMatrix::from_diagonal(&[ONE, ZERO]);
        let e11 = ComplexMatrix::from_diagonal(&[ZERO, ONE]);
        assert!(eig.projectors[0].matrix().max_abs_diff(&e00) < 1e-14);
        assert!(eig.projectors[1].matrix().max_abs_diff(&e11) < 1e-14);
    }

    #[test]
    fn minus_i_sigma_x() {
        let [sx, _, _] = pauli();
        let u = sx.scale(c(0.0, -1.0));
        let eig = unitary_eig(&u).unwrap();
        assert!((eig.eigenphases[0] + PI / 2.0).abs() < 1e-14);
        assert!((eig.eigenphases[1] - PI / 2.0).abs() < 1e-14);
        // eigenvalue −i ↔ (1, 1)/√2
        let plus = (&ComplexMatrix::identity(2) + &sx).scale(c(0.5, 0.0));
        assert!(eig.projectors[0].matrix().max_abs_diff(&plus) < 1e-12);
    }

    #[test]
    fn minus_identity_phase_is_pi() {
        let u = ComplexMatrix::identity(2).scale(c(-1.0, -0.0));
        let eig = unitary_eig(&u).unwrap();
        assert_eq!(eig.eigenphases, vec![PI, PI]);
    }

    #[test]
    fn exponential_cases() {
        let zero = ComplexMatrix::zeros(3);
        let u = unitary_from_hermitian(&zero, 2.7).unwrap();
        assert!(u.max_abs_diff(&ComplexMatrix::identity(3)) < 1e-15);

        let [sx, _, _] = pauli();
        let u = unitary_from_hermitian(&sx, PI).unwrap();
        assert!(u.max_abs_diff(&ComplexMatrix::identity(2).scale(c(-1.0, 0.0))) < 1e-12);

        // B·σ/2 with B = π e_x, t = 1 → cos(π/2) I − i sin(π/2) σx
        let h = sx.scale(c(PI / 2.0, 0.0));
        let u = unitary_from_hermitian(&h, 1.0).unwrap();
        assert!(u.max_abs_diff(&sx.scale(c(0.0, -1.0))) < 1e-12);
        assert!(u.is_unitary(1e-12));
    }

    #[test]
    fn projector_validation() {
        let p = ComplexMatrix::from_diagonal(&[ONE, ZERO]);
        assert!(Projector::new(p).is_ok());
        let not_idem = ComplexMatrix::from_diagonal(&[c(0.5, 0.0), c(0.5, 0.0)]);
        assert!(matches!(Projector::new(not_idem), Err(Error::NotAProjector { .. })));
        let rank2 = ComplexMatrix::identity(2);
        assert!(matches!(Projector::new(rank2), Err(Error::NotAProjector { .. })));
    }

    #[test]
    fn from_rows_checks_shape() {
        let bad = ComplexMatrix::from_rows(&[vec![ONE, ZERO], vec![ONE]]);
        assert!(matches!(bad, Err(Error::SizeMismatch { .. })));
        let nan = ComplexMatrix::from_rows(&[vec![c(f64::NAN, 0.0)]]);
        assert!(matches!(nan, Err(Error::NonFinite { .. })));
    }

    #[test]
    fn repeated_calls_are_bit_identical() {
        let u = ComplexMatrix::from_array([
            [c(0.6, 0.0), c(0.0, 0.8)],
            [c(0.0, 0.8), c(0.6, 0.0)],
        ]);
        let a = unitary_eig(&u).unwrap();
        let b = unitary_eig(&u).unwrap();
        assert_eq!(a.eigenphases, b.eigenphases);
        assert_eq!(a.projectors, b.projectors);
    }
}
