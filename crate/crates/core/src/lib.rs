//! Covariant Bell/CHSH analysis for Lorentz-boosted spin-1/2 pairs.
//!
//! The crate builds the full chain from special-relativistic kinematics to
//! CHSH values:
//!
//! * [`lorentz`] — four-vectors, boost matrices, the standard boost `L(p)`,
//!   Wigner's little-group element `W = L⁻¹(Λp) Λ L(p)`, and the closed-form
//!   Wigner angle `tan Ω = sinh α sinh δ / (cosh α + cosh δ)`.
//! * [`spinstate`] — two-qubit Bell states, the spin-1/2 representation
//!   `D(W)` of Wigner rotations, and the boost action `D_A ⊗ D_B` on spin
//!   amplitudes.
//! * [`observables`] — the covariant spin observable via Wigner-rotated
//!   measurement axes, numeric and closed-form correlations, and the
//!   boost-dependent CHSH curve of the non-covariant (Czachor-style)
//!   observable.
//! * [`chsh`] — the CHSH functional, canonical maximal-violation axes, the
//!   Horodecki bound, an alternating axis optimizer, and the critical-β
//!   root finder for the non-covariant curve.
//! * [`oracle`] — brute-force validators that certify every closed form
//!   against the explicit 4×4 matrix pipeline before it is trusted.
//!
//! All types are immutable values and all operations are pure functions, so
//! everything here is safe to use from any number of threads.

pub mod chsh;
pub mod error;
pub mod lorentz;
pub mod observables;
pub mod oracle;
pub mod spinstate;
pub mod tol;

pub use chsh::{
    canonical_axes, chsh_value, critical_beta, horodecki_max, optimize_axes,
    optimize_axes_from, ChshReport, ChshSetting, ObservableKind,
};
pub use error::{Error, Result};
pub use lorentz::{
    boost_matrix, extract_rotation, little_group_element, standard_boost,
    wigner_angle_closed_form, BoostParams, FourVector, LorentzMatrix, ParticleKinematics,
    WignerRotation,
};
pub use observables::{
    correlation_closed_form, correlation_matrix_of, correlation_numeric,
    correlation_numeric_with_tolerance, czachor_chsh, observable_matrix, rotate_axis_a,
    rotate_axis_b, CorrelationMatrix, CovariantObservable, MeasurementAxis,
};
pub use oracle::{
    oracle_boosted_state, oracle_expectation, oracle_wigner_angle, run_suite, GridDensity,
    OracleReport, SuiteConfig, SuiteReport,
};
pub use spinstate::{
    bell_state, boost_state, boosted_bell_analytic, su2_from_rotation, BellKind, Spinor2Matrix,
    TwoQubitState,
};
