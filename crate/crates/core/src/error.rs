//! Error type shared by all modules.

use thiserror::Error;

/// Errors raised by kinematics, state, observable, and CHSH operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Boost speed outside the physical range `[0, 1)`.
    #[error("boost speed must satisfy 0 <= beta < 1, got {beta}")]
    NonPhysicalBoost { beta: f64 },

    /// A direction or axis with (numerically) zero length.
    #[error("cannot normalize a zero-length vector")]
    ZeroVector,

    /// Mass must be strictly positive.
    #[error("mass must be positive, got {mass}")]
    NonPositiveMass { mass: f64 },

    /// Four-momentum does not satisfy `p·p = m²` within tolerance.
    #[error("four-momentum is off shell: normalized defect {defect:.3e} exceeds {tolerance:.1e}")]
    OffShell { defect: f64, tolerance: f64 },

    /// Matrix does not preserve the Minkowski metric (or is not proper
    /// orthochronous).
    #[error("not a proper orthochronous Lorentz matrix: defect {defect:.3e}")]
    NotLorentz { defect: f64 },

    /// A little-group element moved the rest momentum.
    #[error("little-group element moves the rest momentum by {defect:.3e}")]
    LittleGroupDefect { defect: f64 },

    /// Spatial block of a supposed rotation fails orthogonality.
    #[error("spatial block is not a rotation: orthogonality defect {defect:.3e}")]
    NotARotation { defect: f64 },

    /// A spin transform expected to be unitary is not.
    #[error("spin transform is not unitary: defect {defect:.3e}")]
    NotUnitary { defect: f64 },

    /// State vector is not normalized.
    #[error("state is not normalized: |norm - 1| = {defect:.3e}")]
    NotNormalized { defect: f64 },

    /// An expectation value came out with a non-negligible imaginary part.
    #[error("expectation value has imaginary residual {residual:.3e}")]
    ImaginaryResidual { residual: f64 },

    /// Scalar argument outside its documented domain.
    #[error("{name} = {value} outside domain {domain}")]
    Domain {
        name: &'static str,
        value: f64,
        domain: &'static str,
    },

    /// The CHSH curve never reaches |C| = 2 on the scanned β range.
    #[error("CHSH curve never crosses |C| = 2 for delta = {delta}")]
    NoCrossing { delta: f64 },

    /// Alternating axis optimization failed to stall within the iteration cap.
    #[error("axis optimization did not converge within {iterations} iterations")]
    NoConvergence { iterations: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
