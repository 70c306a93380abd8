//! Homotopy classes of loops in a punctured plane.
//!
//! A loop in the plane with punctures p_1..p_k is classified, as far as an
//! abelian monodromy can tell, by its winding numbers about each puncture.

use std::f64::consts::TAU;

use crate::error::{Error, Result};
use crate::path::{ParameterPoint, Path};
use crate::permutation::Permutation;

/// Samples (and segments) closer than this to the puncture are rejected.
pub const PUNCTURE_CLEARANCE: f64 = 1e-9;

fn segment_distance(a: (f64, f64), b: (f64, f64), p: (f64, f64)) -> f64 {
    let (dx, dy) = (b.0 - a.0, b.1 - a.1);
    let len_sq = dx * dx + dy * dy;
    let t = if len_sq > 0.0 {
        (((p.0 - a.0) * dx + (p.1 - a.1) * dy) / len_sq).clamp(0.0, 1.0)
    } else {
        0.0
    };
    let (cx, cy) = (a.0 + t * dx, a.1 + t * dy);
    ((p.0 - cx).powi(2) + (p.1 - cy).powi(2)).sqrt()
}

/// Signed number of times a closed planar polygon winds around `puncture`.
pub fn winding_number(path: &Path, puncture: &ParameterPoint) -> Result<i64> {
    if path.dim() != 2 || puncture.dim() != 2 {
        return Err(Error::SizeMismatch { expected: 2, found: path.dim().max(puncture.dim()) });
    }
    if !path.is_closed() {
        return Err(Error::NotClosed);
    }
    let p = (puncture.coords()[0], puncture.coords()[1]);
    let mut total = 0.0;
    for w in path.samples().windows(2) {
        let a = (w[0].coords()[0], w[0].coords()[1]);
        let b = (w[1].coords()[0], w[1].coords()[1]);
        if segment_distance(a, b, p) < PUNCTURE_CLEARANCE {
            return Err(Error::PunctureOnPath { puncture: puncture.coords().to_vec() });
        }
        let (ux, uy) = (a.0 - p.0, a.1 - p.1);
        let (vx, vy) = (b.0 - p.0, b.1 - p.1);
        total += (ux * vy - uy * vx).atan2(ux * vx + uy * vy);
    }
    let turns = total / TAU;
    let rounded = turns.round();
    if (turns - rounded).abs() >= 1e-6 {
        return Err(Error::NonIntegerWinding { value: turns });
    }
    Ok(rounded as i64)
}

/// Monodromy predicted from winding data: `Π_i g_i^{w_i}`.
///
/// The generators must commute pairwise, otherwise the order of the factors
/// is not fixed by winding numbers alone and the prediction is refused.
pub fn predict_monodromy(windings: &[i64], generators: &[Permutation]) -> Result<Permutation> {
    if windings.len() != generators.len() {
        return Err(Error::GeneratorCount { expected: windings.len(), found: generators.len() });
    }
    let Some(first) = generators.first() else {
        return Err(Error::GeneratorCount { expected: 1, found: 0 });
    };
    let n = first.len();
    if let Some(bad) = generators.iter().find(|g| g.len() != n) {
        return Err(Error::SizeMismatch { expected: n, found: bad.len() });
    }
    for (i, g) in generators.iter().enumerate() {
        for h in &generators[i + 1..] {
            if g.compose(h) != h.compose(g) {
                return Err(Error::NonAbelianGenerators);
            }
        }
    }
    Ok(generators
        .iter()
        .zip(windings)
        .fold(Permutation::identity(n), |acc, (g, &w)| acc.compose(&g.pow(w))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::path::builders;

    fn origin() -> ParameterPoint {
        ParameterPoint::xy(0.0, 0.0)
    }

    #[test]
    fn unit_circle_windings() {
        let ccw = builders::circle((0.0, 0.0), 1.0, 0.0, 1, 64).unwrap();
        assert_eq!(winding_number(&ccw, &origin()).unwrap(), 1);
        let cw = builders::circle((0.0, 0.0), 1.0, 0.0, -1, 64).unwrap();
        assert_eq!(winding_number(&cw, &origin()).unwrap(), -1);
        let twice = builders::circle((0.0, 0.0), 1.0, 0.0, 2, 64).unwrap();
        assert_eq!(winding_number(&twice, &origin()).unwrap(), 2);
    }

    #[test]
    fn distant_square_has_zero_winding() {
        let sq = Path::from_xy(&[(3.0, 3.0), (4.0, 3.0), (4.0, 4.0), (3.0, 4.0), (3.0, 3.0)]).unwrap();
        assert_eq!(winding_number(&sq, &origin()).unwrap(), 0);
    }

    #[test]
    fn rejects_open_and_touching_loops() {
        let open = Path::from_xy(&[(1.0, 0.0), (0.0, 1.0)]).unwrap();
        assert!(matches!(winding_number(&open, &origin()), Err(Error::NotClosed)));
        let through = Path::from_xy(&[(-1.0, 0.0), (1.0, 0.0), (1.0, 1.0), (-1.0, 0.0)]).unwrap();
        assert!(matches!(
            winding_number(&through, &origin()),
            Err(Error::PunctureOnPath { .. })
        ));
    }

    #[test]
    fn prediction_from_parity() {
        let t = Permutation::transposition(2, 0, 1);
        let g = std::slice::from_ref(&t);
        assert!(predict_monodromy(&[0], g).unwrap().is_identity());
        assert_eq!(predict_monodromy(&[1], g).unwrap(), t);
        assert_eq!(predict_monodromy(&[5], g).unwrap(), t);
        assert_eq!(predict_monodromy(&[-3], g).unwrap(), t);
        assert!(predict_monodromy(&[2], &[t]).unwrap().is_identity());
    }

    #[test]
    fn refuses_non_commuting_generators() {
        let a = Permutation::transposition(3, 0, 1);
        let b = Permutation::transposition(3, 1, 2);
        assert!(matches!(predict_monodromy(&[1, 1], &[a, b]), Err(Error::NonAbelianGenerators)));
        let c = Permutation::cycle(3);
        let p = predict_monodromy(&[1, 1], &[c.clone(), c.clone()]).unwrap();
        assert_eq!(p, c.pow(2));
    }
}
