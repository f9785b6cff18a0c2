//! Numerical tolerances shared by the library, the verification suite, and
//! the CLI, so all three agree on what "equal" means.

/// Defects allowed at construction time: norms, unitarity, metric
/// preservation. Exact arithmetic plus a few rounding steps.
pub const CONSTRUCTION: f64 = 1e-12;

/// Internal consistency guards on composed results: little-group fixpoint,
/// unitarity of supplied spin transforms, imaginary residuals of
/// expectation values. Looser than [`CONSTRUCTION`] because matrix chains
/// at large rapidity accumulate rounding.
pub const CONSISTENCY: f64 = 1e-9;

/// Agreement between the closed-form Wigner angle and the angle extracted
/// from the 4×4 little-group pipeline.
pub const ANGLE_MATCH: f64 = 1e-10;

/// Per-amplitude agreement between the analytic boosted Bell states and the
/// full little-group + spinor pipeline.
pub const AMPLITUDE_MATCH: f64 = 1e-12;

/// Agreement between numeric correlations on boosted states and the
/// frame-invariant closed-form bilinears.
pub const CORRELATION_MATCH: f64 = 1e-10;

/// Agreement between two algebraically independent evaluations of the same
/// closed form.
pub const DUAL_PATH: f64 = 1e-12;

/// Axis optimizer stops once the CHSH value changes by less than this
/// between iterations.
pub const OPTIMIZER_STALL: f64 = 1e-12;

/// Converged optimizer value must match the Horodecki bound this closely.
pub const BOUND_MATCH: f64 = 1e-9;

/// Slack on the Tsirelson bound 2√2 for sanity checks.
pub const TSIRELSON_SLACK: f64 = 1e-9;

/// Bisection width in β for the critical-β root finder.
pub const BETA_BISECTION: f64 = 1e-10;

/// Allowed residual | |C(β_c, δ)| − 2 | at the returned critical β.
pub const CRITICAL_RESIDUAL: f64 = 1e-8;

/// Tolerance for asymptotic limits checked at finite large/small parameters.
pub const LIMIT_CHECK: f64 = 1e-3;
