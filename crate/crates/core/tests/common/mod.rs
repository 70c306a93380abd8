#![allow(dead_code)]

use std::f64::consts::TAU;

use monodromy_core::{ComplexMatrix, FamilyKind, ParameterPoint, Projector, Result, SpectralFamily};
use num_complex::Complex64;
use rand::Rng;

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub fn random_complex<R: Rng>(rng: &mut R) -> Complex64 {
    c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
}

pub fn random_hermitian<R: Rng>(rng: &mut R, n: usize) -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(n);
    for i in 0..n {
        m[(i, i)] = c(rng.gen_range(-2.0..2.0), 0.0);
        for j in i + 1..n {
            let z = random_complex(rng);
            m[(i, j)] = z;
            m[(j, i)] = z.conj();
        }
    }
    m
}

/// Unitary from modified Gram–Schmidt on the columns of a random complex
/// matrix; independent of any eigensolver.
pub fn random_unitary<R: Rng>(rng: &mut R, n: usize) -> ComplexMatrix {
    let mut cols: Vec<Vec<Complex64>> = (0..n).map(|_| (0..n).map(|_| random_complex(rng)).collect()).collect();
    for k in 0..n {
        for j in 0..k {
            let proj: Complex64 = cols[j].iter().zip(&cols[k]).map(|(a, b)| a.conj() * b).sum();
            let cj = cols[j].clone();
            for (x, y) in cols[k].iter_mut().zip(&cj) {
                *x -= proj * y;
            }
        }
        let norm = cols[k].iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
        for x in cols[k].iter_mut() {
            *x /= norm;
        }
    }
    let mut m = ComplexMatrix::zeros(n);
    for (j, col) in cols.iter().enumerate() {
        for (i, &x) in col.iter().enumerate() {
            m[(i, j)] = x;
        }
    }
    m
}

/// `e^{−iHt}` by scaling and squaring of a truncated Taylor series.
pub fn taylor_exp_minus_i(h: &ComplexMatrix, t: f64) -> ComplexMatrix {
    let n = h.dim();
    let norm = h.max_abs() * n as f64 * t.abs();
    let squarings = (norm.max(1.0).log2().ceil() as i32 + 4).max(0);
    let scale = t / 2f64.powi(squarings);
    let a = h.scale(c(0.0, -scale));
    let mut term = ComplexMatrix::identity(n);
    let mut sum = ComplexMatrix::identity(n);
    for k in 1..30 {
        term = (&term * &a).scale(c(1.0 / k as f64, 0.0));
        sum = &sum + &term;
    }
    for _ in 0..squarings {
        sum = &sum * &sum;
    }
    sum
}

/// Closed-form spectral data of a 2×2 matrix: eigenvalues from the
/// characteristic polynomial and eigenvector projectors from the adjugate.
pub fn two_by_two_eig(m: &ComplexMatrix) -> [(Complex64, ComplexMatrix); 2] {
    let tr = m[(0, 0)] + m[(1, 1)];
    let det = m[(0, 0)] * m[(1, 1)] - m[(0, 1)] * m[(1, 0)];
    let disc = (tr * tr - det * 4.0).sqrt();
    let zs = [(tr + disc) / 2.0, (tr - disc) / 2.0];
    zs.map(|z| {
        // pick the better-conditioned null vector of (m − z)
        let v1 = [m[(0, 1)], z - m[(0, 0)]];
        let v2 = [z - m[(1, 1)], m[(1, 0)]];
        let n1 = v1[0].norm_sqr() + v1[1].norm_sqr();
        let n2 = v2[0].norm_sqr() + v2[1].norm_sqr();
        let v = if n1 >= n2 { v1 } else { v2 };
        (z, Projector::from_vector(&v).matrix().clone())
    })
}

pub fn circ_dist(a: f64, b: f64) -> f64 {
    let d = (a - b).rem_euclid(TAU);
    d.min(TAU - d)
}

/// A generic three-level Hermitian family on the plane.
pub struct ThreeLevel;

impl SpectralFamily for ThreeLevel {
    fn kind(&self) -> FamilyKind {
        FamilyKind::Hermitian
    }
    fn size(&self) -> usize {
        3
    }
    fn parameter_dim(&self) -> usize {
        2
    }
    fn evaluate(&self, p: &ParameterPoint) -> Result<ComplexMatrix> {
        let (x, y) = (p.coords()[0], p.coords()[1]);
        Ok(ComplexMatrix::from_array([
            [c(-2.0 + 0.3 * x, 0.0), c(0.4 * x, 0.2 * y), c(0.1 * y, 0.0)],
            [c(0.4 * x, -0.2 * y), c(0.1 * y, 0.0), c(0.3 * x, -0.3 * y)],
            [c(0.1 * y, 0.0), c(0.3 * x, 0.3 * y), c(2.0 - 0.2 * x, 0.0)],
        ]))
    }
}

/// Three-level clock model: `U(λ) = S · diag(1, 1, e^{iφ})` with `S` the
/// cyclic shift and φ the polar angle of λ. Its eigenvalues are the cube
/// roots of `e^{iφ}`, so one turn around the origin cycles all three
/// eigenprojectors.
pub struct ClockModel;

impl SpectralFamily for ClockModel {
    fn kind(&self) -> FamilyKind {
        FamilyKind::Floquet
    }
    fn size(&self) -> usize {
        3
    }
    fn parameter_dim(&self) -> usize {
        2
    }
    fn punctures(&self) -> Vec<ParameterPoint> {
        vec![ParameterPoint::xy(0.0, 0.0)]
    }
    fn evaluate(&self, p: &ParameterPoint) -> Result<ComplexMatrix> {
        let (x, y) = (p.coords()[0], p.coords()[1]);
        let r = x.hypot(y);
        let e = c(x / r, y / r);
        let z = c(0.0, 0.0);
        let o = c(1.0, 0.0);
        // rows of S·D with S e_k = e_{k+1}
        Ok(ComplexMatrix::from_array([[z, z, e], [o, z, z], [z, o, z]]))
    }
}
