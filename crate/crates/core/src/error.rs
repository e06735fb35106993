use thiserror::Error;

/// Errors surfaced by the numerical routines in this crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid principal-curvature spectrum: {0}")]
    InvalidSpectrum(String),

    #[error("normal sectional list has length {got}, expected {expected_entries} (one per entry) or {expected_dim} (one per direction)")]
    SectionalLengthMismatch {
        got: usize,
        expected_entries: usize,
        expected_dim: usize,
    },

    #[error("shape-operator component matrices must be symmetric (block {block}, entry ({i},{j}))")]
    NonSymmetric { block: usize, i: usize, j: usize },

    #[error("normal index {index} out of range for {count} normal directions")]
    NormalIndexOutOfRange { index: usize, count: usize },

    #[error("parameter t = {t} outside the open interval (0, pi/4)")]
    AngleOutOfRange { t: f64 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("tangent pair is not orthonormal (|u|^2 = {nu}, |v|^2 = {nv}, <u,v> = {uv})")]
    NonOrthonormal { nu: f64, nv: f64, uv: f64 },

    #[error("curvature-vector decomposition failed: {0}")]
    DecompositionFailure(String),

    #[error("r = {r} outside the integrated grid [0, {r_max}]")]
    OutsideGrid { r: f64, r_max: f64 },

    #[error("integration step {step} too large: constraint drift {drift:.3e} exceeds {limit:.3e}")]
    StepTooLarge { step: f64, drift: f64, limit: f64 },

    #[error("criticality function has no sign change on the grid (profile too short?)")]
    NoSignChange,

    #[error("criticality function changes sign {0} times on the grid, expected exactly one")]
    MultipleSignChanges(usize),

    #[error("quadrature failed to converge: {0}")]
    QuadratureNonConvergence(String),
}

pub type Result<T> = std::result::Result<T, Error>;
