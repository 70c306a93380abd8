//! Job configuration: model, named paths and per-command options.
//!
//! Every section has defaults, so an empty object `{}` is a valid config for
//! the spin model.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use monodromy_core::path::builders;
use monodromy_core::spin::preset_paths;
use monodromy_core::{
    AffineFamily, ComplexMatrix, FamilyKind, LiftOptions, ParameterPoint, Path, Permutation, SpectralFamily,
    SpinModel,
};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::CliError;

pub const SCHEMA_VERSION: u32 = 1;

/// Name of the built-in loop winding once around the origin at radius π.
pub const DEFAULT_LOOP: &str = "circle";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobConfig {
    #[serde(default = "schema_version")]
    pub schema_version: u32,
    #[serde(default)]
    pub model: ModelSpec,
    /// User paths; preset names and [`DEFAULT_LOOP`] are always available.
    #[serde(default)]
    pub paths: BTreeMap<String, PathSpec>,
    #[serde(default)]
    pub lift_options: LiftOptions,
    #[serde(default)]
    pub decompose: DecomposeOptions,
    #[serde(default)]
    pub lift: LiftCommand,
    #[serde(default)]
    pub monodromy: MonodromyOptions,
    #[serde(default)]
    pub compare: CompareOptions,
    #[serde(default)]
    pub verify: VerifyOptions,
    #[serde(default)]
    pub sweep: SweepOptions,
}

fn schema_version() -> u32 {
    SCHEMA_VERSION
}

impl Default for JobConfig {
    fn default() -> Self {
        serde_json::from_str("{}").expect("defaults deserialize")
    }
}

/// Complex entries are written `[re, im]`.
pub type MatrixSpec = Vec<Vec<[f64; 2]>>;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
pub enum ModelSpec {
    /// The built-in spin. `generators` overrides the transposition that a
    /// loop around the origin induces; only useful to exercise the
    /// violation path.
    Spin {
        #[serde(default)]
        generators: Option<Vec<Vec<usize>>>,
    },
    /// `H(λ) = base + Σ λ_i terms[i]`; the Floquet kind uses `exp(−iH)`.
    Matrix {
        kind: FamilyKind,
        base: MatrixSpec,
        terms: Vec<MatrixSpec>,
        #[serde(default)]
        punctures: Vec<Vec<f64>>,
        /// Monodromy generator of a small loop around each puncture, as an
        /// image list. Optional; enables winding-based predictions.
        #[serde(default)]
        generators: Option<Vec<Vec<usize>>>,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", deny_unknown_fields)]
pub enum PathSpec {
    Preset(String),
    Samples(Vec<Vec<f64>>),
    Circle {
        #[serde(default)]
        center: [f64; 2],
        radius: f64,
        #[serde(default)]
        start_angle: f64,
        #[serde(default = "one")]
        turns: i32,
        #[serde(default = "default_segments")]
        segments: usize,
    },
    Arc {
        #[serde(default)]
        center: [f64; 2],
        radius: f64,
        start_angle: f64,
        end_angle: f64,
        #[serde(default = "default_segments")]
        segments: usize,
    },
    Concat(Vec<String>),
    Reverse(String),
}

fn one() -> i32 {
    1
}

fn default_segments() -> usize {
    256
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct DecomposeOptions {
    pub points: Vec<Vec<f64>>,
}

impl Default for DecomposeOptions {
    fn default() -> Self {
        DecomposeOptions { points: vec![vec![PI, 0.0]] }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct LiftCommand {
    pub path: String,
    /// Reordering of the eigenvalue-ordered start frame.
    pub initial_order: Option<Vec<usize>>,
}

impl Default for LiftCommand {
    fn default() -> Self {
        LiftCommand { path: "C_a".into(), initial_order: None }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct MonodromyOptions {
    pub loops: Vec<String>,
}

impl Default for MonodromyOptions {
    fn default() -> Self {
        MonodromyOptions { loops: vec![DEFAULT_LOOP.into()] }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct CompareOptions {
    pub pairs: Vec<(String, String)>,
}

impl Default for CompareOptions {
    fn default() -> Self {
        CompareOptions { pairs: vec![("C_a".into(), "C_a'".into()), ("C_a".into(), "C_c".into())] }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct VerifyOptions {
    pub path: String,
    pub slot: usize,
    pub periods: Vec<usize>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { path: "C_a".into(), slot: 0, periods: vec![64, 256, 1024, 4096] }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SweepOptions {
    pub loops: usize,
    pub seed: u64,
    pub threads: usize,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions { loops: 100, seed: 42, threads: 4 }
    }
}

impl JobConfig {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        let config: JobConfig = serde_json::from_str(text).map_err(|e| CliError::Config(e.to_string()))?;
        if config.schema_version != SCHEMA_VERSION {
            return Err(CliError::Config(format!(
                "unsupported schema_version {} (expected {SCHEMA_VERSION})",
                config.schema_version
            )));
        }
        Ok(config)
    }

    /// Canonical JSON of the effective configuration.
    pub fn canonical_json(&self) -> String {
        serde_json::to_string(self).expect("config serializes")
    }
}

impl Default for ModelSpec {
    fn default() -> Self {
        ModelSpec::Spin { generators: None }
    }
}

/// A resolved model.
pub enum Model {
    Spin(Vec<Permutation>),
    Matrix(AffineFamily, Option<Vec<Permutation>>),
}

impl Model {
    pub fn family(&self) -> &dyn SpectralFamily {
        match self {
            Model::Spin(_) => &SpinModel,
            Model::Matrix(f, _) => f,
        }
    }

    /// Generators of the monodromy around each puncture, when known.
    pub fn generators(&self) -> Option<Vec<Permutation>> {
        match self {
            Model::Spin(g) => Some(g.clone()),
            Model::Matrix(_, g) => g.clone(),
        }
    }

    pub fn is_spin(&self) -> bool {
        matches!(self, Model::Spin(_))
    }
}

fn matrix(spec: &MatrixSpec) -> Result<ComplexMatrix, CliError> {
    let rows: Vec<Vec<Complex64>> =
        spec.iter().map(|r| r.iter().map(|&[re, im]| Complex64::new(re, im)).collect()).collect();
    ComplexMatrix::from_rows(&rows).map_err(|e| CliError::Config(format!("matrix: {e}")))
}

pub fn point(coords: &[f64]) -> Result<ParameterPoint, CliError> {
    ParameterPoint::new(coords.to_vec()).map_err(|e| CliError::Config(format!("point {coords:?}: {e}")))
}

fn generators(list: &[Vec<usize>], punctures: usize, size: usize) -> Result<Vec<Permutation>, CliError> {
    if list.len() != punctures {
        return Err(CliError::Config(format!("{} generators given for {punctures} punctures", list.len())));
    }
    let perms = list
        .iter()
        .map(|g| Permutation::new(g.clone()))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| CliError::Config(format!("generator: {e}")))?;
    if perms.iter().any(|p| p.len() != size) {
        return Err(CliError::Config("generator size differs from model size".into()));
    }
    Ok(perms)
}

pub fn build_model(spec: &ModelSpec) -> Result<Model, CliError> {
    match spec {
        ModelSpec::Spin { generators: None } => Ok(Model::Spin(vec![Permutation::transposition(2, 0, 1)])),
        ModelSpec::Spin { generators: Some(list) } => Ok(Model::Spin(generators(list, 1, 2)?)),
        ModelSpec::Matrix { kind, base, terms, punctures, generators: gens } => {
            let terms = terms.iter().map(matrix).collect::<Result<Vec<_>, _>>()?;
            let punctures = punctures.iter().map(|p| point(p)).collect::<Result<Vec<_>, _>>()?;
            let n_punctures = punctures.len();
            let family = AffineFamily::new(*kind, matrix(base)?, terms, punctures)
                .map_err(|e| CliError::Config(format!("model: {e}")))?;
            let gens = match gens {
                None => None,
                Some(list) => Some(generators(list, n_punctures, family.size())?),
            };
            Ok(Model::Matrix(family, gens))
        }
    }
}

/// Resolves path names against the user paths, the presets and the default
/// loop, in that order.
pub struct PathResolver<'a> {
    specs: &'a BTreeMap<String, PathSpec>,
}

impl<'a> PathResolver<'a> {
    pub fn new(specs: &'a BTreeMap<String, PathSpec>) -> Self {
        PathResolver { specs }
    }

    pub fn resolve(&self, name: &str) -> Result<Path, CliError> {
        self.resolve_depth(name, 0).map(|p| p.with_name(name))
    }

    fn resolve_depth(&self, name: &str, depth: usize) -> Result<Path, CliError> {
        if depth > 32 {
            return Err(CliError::Config(format!("path '{name}' refers to itself")));
        }
        let Some(spec) = self.specs.get(name) else {
            return builtin(name).ok_or_else(|| CliError::Config(format!("unknown path '{name}'")));
        };
        let invalid = |e: monodromy_core::Error| CliError::Config(format!("path '{name}': {e}"));
        match spec {
            PathSpec::Preset(preset) => {
                builtin(preset).ok_or_else(|| CliError::Config(format!("unknown preset '{preset}'")))
            }
            PathSpec::Samples(samples) => {
                let points = samples.iter().map(|s| point(s)).collect::<Result<Vec<_>, _>>()?;
                Path::new(points).map_err(invalid)
            }
            PathSpec::Circle { center, radius, start_angle, turns, segments } => {
                builders::circle((center[0], center[1]), *radius, *start_angle, *turns, *segments).map_err(invalid)
            }
            PathSpec::Arc { center, radius, start_angle, end_angle, segments } => {
                builders::arc((center[0], center[1]), *radius, *start_angle, *end_angle, *segments).map_err(invalid)
            }
            PathSpec::Concat(parts) => {
                let mut iter = parts.iter();
                let first = iter.next().ok_or_else(|| CliError::Config(format!("path '{name}': empty concat")))?;
                let mut path = self.resolve_depth(first, depth + 1)?;
                for part in iter {
                    path = path.concat(&self.resolve_depth(part, depth + 1)?).map_err(invalid)?;
                }
                Ok(path)
            }
            PathSpec::Reverse(inner) => Ok(self.resolve_depth(inner, depth + 1)?.reverse()),
        }
    }
}

fn builtin(name: &str) -> Option<Path> {
    if name == DEFAULT_LOOP {
        return Some(builders::circle((0.0, 0.0), PI, 0.0, 1, 256).expect("valid circle"));
    }
    preset_paths().remove(name)
}
