use thiserror::Error;

/// Errors raised anywhere in the engine.
///
/// Variants are grouped loosely by the layer that raises them; callers that
/// need a coarse classification (the CLI's exit codes, for one) can use
/// [`Error::class`].
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is not Hermitian (max deviation {deviation:.3e})")]
    NotHermitian { deviation: f64 },
    #[error("matrix is not unitary (max deviation of U†U from I {deviation:.3e})")]
    NotUnitary { deviation: f64 },
    #[error("matrix is not a rank-1 projector: {reason}")]
    NotAProjector { reason: String },
    #[error("vector is not normalized (norm {norm})")]
    NotNormalized { norm: f64 },
    #[error("dimension mismatch: expected {expected}, got {found}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("{images:?} is not a permutation")]
    InvalidPermutation { images: Vec<usize> },
    #[error("non-finite entry in {what}")]
    NonFinite { what: &'static str },

    #[error("degenerate spectrum at {point:?}: gap {gap:.3e} <= gap_min {gap_min:.3e}")]
    DegenerateSpectrum { point: Vec<f64>, gap: f64, gap_min: f64 },
    #[error("parameter point {point:?} is an excluded puncture")]
    PunctureHit { point: Vec<f64> },
    #[error("frames cannot be matched unambiguously (best overlap {min_overlap:.3e} <= 0.5)")]
    AmbiguousMatch { min_overlap: f64 },
    #[error("fiber enumeration refused for N = {n} (limit 6)")]
    TooLarge { n: usize },

    #[error("invalid path: {reason}")]
    InvalidPath { reason: String },
    #[error("path endpoints do not match: {left:?} vs {right:?}")]
    EndpointMismatch { left: Vec<f64>, right: Vec<f64> },
    #[error("path is not closed")]
    NotClosed,
    #[error("initial frame does not sit over the first path sample")]
    InitialFrameMismatch,
    #[error("spectral degeneracy on path near {point:?} (gap {gap:.3e})")]
    DegeneracyOnPath { point: Vec<f64>, gap: f64 },
    #[error("bisection depth {depth} exceeded near {point:?}")]
    DepthExceeded { depth: u32, point: Vec<f64> },
    #[error("loop passes through or too close to the puncture {puncture:?}")]
    PunctureOnPath { puncture: Vec<f64> },
    #[error("winding sum {value} is not close to an integer")]
    NonIntegerWinding { value: f64 },
    #[error("monodromy generators do not commute")]
    NonAbelianGenerators,
    #[error("expected {expected} generators, got {found}")]
    GeneratorCount { expected: usize, found: usize },

    #[error("operation needs a {expected:?} family")]
    WrongFamilyKind { expected: crate::frame::FamilyKind },
    #[error("invalid step schedule: {reason}")]
    InvalidSchedule { reason: String },
    #[error("slot {slot} out of range for N = {n}")]
    SlotOutOfRange { slot: usize, n: usize },

    #[error("the origin B = 0 is excluded from the spin model")]
    OriginExcluded,
    #[error("analytic Bloch vector undefined: |sin(Δ/2)| = {sin_half_delta:.3e} (Δ = {delta})")]
    DegeneratePoint { delta: f64, sin_half_delta: f64 },
}

/// Coarse classification of an [`Error`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    /// Bad input to a model or a domain violation.
    Domain,
    /// The spectrum closes along a path.
    DegeneracyOnPath,
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        match self {
            Error::DegeneracyOnPath { .. } | Error::DepthExceeded { .. } => {
                ErrorClass::DegeneracyOnPath
            }
            _ => ErrorClass::Domain,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
