//! Random polygonal paths in the punctured field plane.
//!
//! The generators keep every vertex and every edge inside the annulus
//! `0.4π < B < 1.6π`, well clear of the spin model's degeneracies at the
//! origin and at (2π, 0).

use std::f64::consts::{PI, TAU};

use rand::Rng;

use crate::path::{ParameterPoint, Path};

const R_MIN: f64 = 0.5 * PI;
const R_MAX: f64 = 1.4 * PI;

fn polar(r: f64, theta: f64) -> ParameterPoint {
    ParameterPoint::xy(r * theta.cos(), r * theta.sin())
}

/// Random increments summing to `total`, each between 0.6 and 1.4 times the
/// mean.
fn increments<R: Rng + ?Sized>(rng: &mut R, count: usize, total: f64) -> Vec<f64> {
    let weights: Vec<f64> = (0..count).map(|_| rng.gen_range(0.6..1.4)).collect();
    let sum: f64 = weights.iter().sum();
    weights.iter().map(|w| total * w / sum).collect()
}

/// A random star-shaped closed polygon winding `winding` times around the
/// origin. Loops with winding 0 circle a center away from the origin.
/// The last sample equals the first exactly.
pub fn random_loop<R: Rng + ?Sized>(rng: &mut R, winding: i32) -> Path {
    let mut samples = Vec::new();
    if winding == 0 {
        let dist = 3.2;
        let c_angle = rng.gen_range(0.0..TAU);
        let (cx, cy) = (dist * c_angle.cos(), dist * c_angle.sin());
        let direction = if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
        let count = rng.gen_range(10..18);
        let mut theta = rng.gen_range(0.0..TAU);
        for inc in increments(rng, count, TAU * direction) {
            let r = rng.gen_range(0.6..1.8);
            samples.push(ParameterPoint::xy(cx + r * theta.cos(), cy + r * theta.sin()));
            theta += inc;
        }
    } else {
        let turns = winding.unsigned_abs() as usize;
        let count = turns * rng.gen_range(12..20);
        let total = TAU * f64::from(winding);
        let mut theta = rng.gen_range(0.0..TAU);
        for inc in increments(rng, count, total) {
            samples.push(polar(rng.gen_range(R_MIN..R_MAX), theta));
            theta += inc;
        }
    }
    samples.push(samples[0].clone());
    Path::new(samples).expect("loop has many samples")
}

/// Random winding in `-3..=3` together with a loop realizing it.
pub fn random_winding_loop<R: Rng + ?Sized>(rng: &mut R) -> (i32, Path) {
    let w = rng.gen_range(-3..=3);
    (w, random_loop(rng, w))
}

fn open_path<R: Rng + ?Sized>(
    rng: &mut R,
    start: &ParameterPoint,
    end: &ParameterPoint,
    start_angle: f64,
    sweep: f64,
) -> Path {
    let segments = ((sweep.abs() / (PI / 6.0)).ceil() as usize).max(3);
    let mut samples = vec![start.clone()];
    let incs = increments(rng, segments, sweep);
    let mut theta = start_angle;
    for inc in &incs[..segments - 1] {
        theta += inc;
        samples.push(polar(rng.gen_range(R_MIN..R_MAX), theta));
    }
    samples.push(end.clone());
    Path::new(samples).expect("open path has many samples")
}

/// Two random open paths sharing both endpoints; each may go around the
/// origin up to once in either direction.
pub fn random_path_pair<R: Rng + ?Sized>(rng: &mut R) -> (Path, Path) {
    let a0 = rng.gen_range(-PI..PI);
    let a1 = rng.gen_range(-PI..PI);
    let start = polar(rng.gen_range(R_MIN..R_MAX), a0);
    let end = polar(rng.gen_range(R_MIN..R_MAX), a1);
    let mut sweep = || (a1 - a0) + TAU * f64::from(rng.gen_range(-1..=1));
    let (s1, s2) = (sweep(), sweep());
    let c1 = open_path(rng, &start, &end, a0, s1);
    let c2 = open_path(rng, &start, &end, a0, s2);
    (c1, c2)
}

/// A single random open path.
pub fn random_open_path<R: Rng + ?Sized>(rng: &mut R) -> Path {
    random_path_pair(rng).0
}
