//! Shared inputs for the criterion benchmarks.

use std::f64::consts::PI;

use monodromy_core::path::builders;
use monodromy_core::{frame_at, ComplexMatrix, EigenFrame, Order, Path, SpinModel};
use num_complex::Complex64;

/// A dense Hermitian matrix with no special structure.
pub fn hermitian_fixture(n: usize) -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(n);
    for i in 0..n {
        m[(i, i)] = Complex64::new(i as f64 - 0.3 * (i * i) as f64, 0.0);
        for j in i + 1..n {
            let z = Complex64::new(((i + 2 * j) as f64).sin(), ((3 * i + j) as f64).cos() * 0.5);
            m[(i, j)] = z;
            m[(j, i)] = z.conj();
        }
    }
    m
}

/// Circle of radius π around the origin with its eigenvalue-ordered start frame.
pub fn spin_loop(segments: usize) -> (Path, EigenFrame) {
    let path = builders::circle((0.0, 0.0), PI, 0.0, 1, segments).expect("valid circle");
    let frame = frame_at(&SpinModel, path.start(), Order::ByEigenvalue).expect("regular point");
    (path, frame)
}
