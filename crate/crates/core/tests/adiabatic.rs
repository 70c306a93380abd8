mod common;

use std::f64::consts::PI;

use common::ThreeLevel;
use monodromy_core::adiabatic::{convergence_scan, evolve_with_report};
use monodromy_core::path::builders;
use monodromy_core::sampling::random_open_path;
use monodromy_core::spin::{preset_c_a, preset_c_c, preset_paths, preset_start};
use monodromy_core::{
    adiabatic_fidelity, evolve_state, frame_at, lift_path, Error, Order, Path, SpinModel, StateVector,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn constant_path_keeps_the_eigenstate() {
    let init = frame_at(&SpinModel, &preset_start(), Order::ByEigenvalue).unwrap();
    let psi0 = StateVector::from_projector(&init.projectors()[0]);
    let psi = evolve_state(&SpinModel, &Path::constant(preset_start()), &psi0, 100).unwrap();
    assert!((adiabatic_fidelity(&psi, &init.projectors()[0]) - 1.0).abs() < 1e-12);
}

#[test]
fn presets_are_followed_at_large_period_counts() {
    let init = frame_at(&SpinModel, &preset_start(), Order::ByEigenvalue).unwrap();
    for path in [preset_c_a(), preset_c_c()] {
        let lift = lift_path(&SpinModel, &path, &init).unwrap();
        let psi0 = StateVector::from_projector(&init.projectors()[0]);
        let report =
            evolve_with_report(&SpinModel, &path, &psi0, 4096, Some(&lift.final_frame.projectors()[0])).unwrap();
        assert!(report.fidelity.unwrap() >= 0.99);
        assert!(report.max_norm_error < 1e-12);
        assert!(report.min_gap_seen > 1.0);
    }
}

#[test]
fn one_turn_carries_slot_zero_into_slot_one() {
    let path = builders::circle((0.0, 0.0), PI, 0.0, 1, 256).unwrap();
    let init = frame_at(&SpinModel, path.start(), Order::ByEigenvalue).unwrap();
    let psi0 = StateVector::from_projector(&init.projectors()[0]);
    let psi = evolve_state(&SpinModel, &path, &psi0, 4097).unwrap();
    assert!(adiabatic_fidelity(&psi, &init.projectors()[1]) > 0.99);
}

#[test]
fn brute_force_slot_matches_the_lift() {
    let init = frame_at(&SpinModel, &preset_start(), Order::ByEigenvalue).unwrap();
    for (name, path) in preset_paths() {
        for slot in 0..2 {
            let scan = convergence_scan(&SpinModel, &path, &init, slot, &[4096]).unwrap();
            assert!(scan.agrees_with_lift(), "{name} slot {slot}");
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for i in 0..20 {
        let path = random_open_path(&mut rng);
        let init = frame_at(&SpinModel, path.start(), Order::ByEigenvalue).unwrap();
        let scan = convergence_scan(&SpinModel, &path, &init, 0, &[4096]).unwrap();
        assert!(scan.agrees_with_lift(), "random path {i}: {}", scan.selected_fidelity);
    }
}

#[test]
fn odd_period_counts_converge_on_the_upper_semicircle() {
    let init = frame_at(&SpinModel, &preset_start(), Order::ByEigenvalue).unwrap();
    let scan = convergence_scan(&SpinModel, &preset_c_a(), &init, 0, &[63, 255, 1023, 4095]).unwrap();
    assert!(scan.rows.windows(2).all(|w| w[1].infidelity < w[0].infidelity), "{:?}", scan.rows);
    let slope = scan.exponent.unwrap();
    assert!(slope < -1.5, "slope {slope}");
}

#[test]
fn hermitian_families_are_refused() {
    let path = builders::arc((0.0, 0.0), 1.0, 0.0, 1.0, 8).unwrap();
    let init = frame_at(&ThreeLevel, path.start(), Order::ByEigenvalue).unwrap();
    let psi0 = StateVector::from_projector(&init.projectors()[0]);
    assert!(matches!(evolve_state(&ThreeLevel, &path, &psi0, 10), Err(Error::WrongFamilyKind { .. })));
}

#[test]
fn schedules_are_validated() {
    let init = frame_at(&SpinModel, &preset_start(), Order::ByEigenvalue).unwrap();
    let path = preset_c_a();
    assert!(convergence_scan(&SpinModel, &path, &init, 0, &[]).is_err());
    assert!(convergence_scan(&SpinModel, &path, &init, 0, &[64, 16]).is_err());
    assert!(convergence_scan(&SpinModel, &path, &init, 2, &[64]).is_err());
    let psi0 = StateVector::from_projector(&init.projectors()[0]);
    assert!(evolve_state(&SpinModel, &path, &psi0, 0).is_err());
}
