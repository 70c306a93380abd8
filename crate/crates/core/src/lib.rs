//! Adiabatic lifting of eigenprojector frames.
//!
//! Given a family of Hermitian or unitary (Floquet) operators over a
//! parameter space, this crate continues the ordered set of eigenprojectors
//! along paths, reads off the permutation of eigenspaces a path induces, and
//! checks that the permutation depends only on the homotopy class of the
//! path. The kicked spin-½ in [`spin`] is the worked example: its two
//! eigenprojectors are exchanged by every loop that winds an odd number of
//! times around the origin of the field plane.
//!
//! ```
//! use monodromy_core::{frame_at, monodromy, Order, Path, SpinModel};
//! use monodromy_core::path::builders;
//!
//! let loop_path = builders::circle((0.0, 0.0), std::f64::consts::PI, 0.0, 1, 128).unwrap();
//! let initial = frame_at(&SpinModel, loop_path.start(), Order::ByEigenvalue).unwrap();
//! let sigma = monodromy(&SpinModel, &loop_path, &initial).unwrap();
//! assert_eq!(sigma.images(), &[1, 0]);
//! ```

pub mod adiabatic;
pub mod error;
pub mod family;
pub mod frame;
pub mod homotopy;
pub mod lift;
pub mod linalg;
pub mod path;
pub mod permutation;
pub mod sampling;
pub mod spin;

pub use adiabatic::{
    adiabatic_fidelity, convergence_scan, evolve_state, ConvergenceScan, EvolutionReport, StateVector,
};
pub use error::{Error, ErrorClass, Result};
pub use family::AffineFamily;
pub use frame::{
    apply_permutation, enumerate_fiber, frame_at, match_frames, EigenFrame, FamilyKind, FrameMatch, Order,
    SpectralFamily,
};
pub use homotopy::{predict_monodromy, winding_number};
pub use lift::{compare_paths, lift_path, monodromy, LiftOptions, LiftResult, PathComparison};
pub use linalg::{hermitian_eig, unitary_eig, unitary_from_hermitian, ComplexMatrix, Projector};
pub use path::{ParameterPoint, Path};
pub use permutation::Permutation;
pub use spin::{BlochVector, FieldPoint, SpinModel};
