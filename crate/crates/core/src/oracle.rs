//! Brute-force validators for the closed forms: the full 4×4 little-group
//! pipeline and explicit 4×4 matrix expectation values.
//!
//! The oracle side never touches the closed-form expressions it checks: the
//! Wigner angle comes out of matrix extraction, the boosted states out of
//! the spinor pipeline, and expectation values out of an explicitly
//! assembled Kronecker-product matrix. Only public results of the
//! kinematics/state/observable modules are consumed.

use nalgebra::Vector3;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::Result;
use crate::lorentz::{
    boost_matrix, extract_rotation, little_group_element, wigner_angle_closed_form, BoostParams,
    ParticleKinematics,
};
use crate::observables::{
    correlation_closed_form, observable_matrix, rotate_axis_a, rotate_axis_b, MeasurementAxis,
};
use crate::spinstate::{bell_state, boost_state, su2_from_rotation, BellKind, TwoQubitState};
use crate::tol;

/// One closed-form-versus-brute-force comparison.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OracleReport {
    /// What was compared, with the parameters spelled out.
    pub quantity: String,
    pub closed_form: f64,
    pub brute_force: f64,
    pub abs_error: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl OracleReport {
    fn compare(quantity: String, closed_form: f64, brute_force: f64, tolerance: f64) -> Self {
        let abs_error = (closed_form - brute_force).abs();
        Self {
            quantity,
            closed_form,
            brute_force,
            abs_error,
            tolerance,
            pass: abs_error <= tolerance,
        }
    }
}

/// Shared frame setup: boost of speed β along x̂ acting on a unit-mass
/// particle of rapidity δ along ±ẑ.
struct Frame {
    boost: crate::lorentz::LorentzMatrix,
    p: crate::lorentz::FourVector,
}

impl Frame {
    fn new(beta: f64, delta: f64) -> Result<Self> {
        let boost = boost_matrix(&BoostParams::from_beta(beta, Vector3::x())?);
        let p = ParticleKinematics::new(1.0, Vector3::z(), delta)?.momentum();
        Ok(Self { boost, p })
    }

    /// Signed Wigner angle about ŷ for the particle with momentum `p` or
    /// its parity image, straight from the 4×4 pipeline.
    fn pipeline_angle(&self, parity: bool) -> Result<f64> {
        let momentum = if parity { self.p.parity() } else { self.p };
        let w = little_group_element(&self.boost, &momentum, 1.0)?;
        Ok(extract_rotation(&w)?.angle_about(&Vector3::y()))
    }

    /// Boosted Bell state through the little-group + spinor pipeline.
    fn pipeline_state(&self, kind: BellKind) -> Result<TwoQubitState> {
        let rot_a = extract_rotation(&little_group_element(&self.boost, &self.p, 1.0)?)?;
        let rot_b =
            extract_rotation(&little_group_element(&self.boost, &self.p.parity(), 1.0)?)?;
        let d_a = su2_from_rotation(&rot_a);
        let d_b = su2_from_rotation(&rot_b);
        boost_state(
            &bell_state(kind, self.p, self.p.parity()),
            &d_a,
            &d_b,
            &self.boost,
        )
    }
}

/// Compare the closed-form Wigner angle against the angle extracted from
/// `W = L⁻¹(Λp) Λ L(p)` for the canonical geometry (boost x̂, momentum ẑ).
pub fn oracle_wigner_angle(beta: f64, delta: f64, tolerance: f64) -> Result<OracleReport> {
    let closed = wigner_angle_closed_form(beta.atanh(), delta)?;
    let brute = Frame::new(beta, delta)?.pipeline_angle(false)?;
    Ok(OracleReport::compare(
        format!("wigner_angle(beta={beta:.6}, delta={delta:.6})"),
        closed,
        brute,
        tolerance,
    ))
}

/// Compare a boosted Bell state built by the full pipeline (two little-group
/// elements, spinor representations, tensor action) against the analytic
/// closed form, amplitude by amplitude. `abs_error` is the largest
/// per-amplitude deviation; the scalar fields carry the moduli at that
/// component.
pub fn oracle_boosted_state(
    kind: BellKind,
    beta: f64,
    delta: f64,
    tolerance: f64,
) -> Result<OracleReport> {
    let frame = Frame::new(beta, delta)?;
    let brute_state = frame.pipeline_state(kind)?;
    let omega = wigner_angle_closed_form(beta.atanh(), delta)?;
    let analytic = crate::spinstate::boosted_bell_analytic(kind, omega);

    let mut worst = 0.0;
    let mut at = 0;
    for i in 0..4 {
        let dev = (brute_state.amplitudes()[i] - analytic.amplitudes()[i]).norm();
        if dev > worst {
            worst = dev;
            at = i;
        }
    }
    let quantity = format!("boosted_state({kind}, beta={beta:.6}, delta={delta:.6})");
    Ok(OracleReport {
        quantity,
        closed_form: analytic.amplitudes()[at].norm(),
        brute_force: brute_state.amplitudes()[at].norm(),
        abs_error: worst,
        tolerance,
        pass: worst <= tolerance,
    })
}

/// Compare the closed-form correlation against the expectation value of an
/// explicitly assembled 4×4 Hermitian matrix `M(a_R) ⊗ M(b_R)` acting on
/// the pipeline-boosted amplitudes, with the rotation angle also taken from
/// the pipeline.
pub fn oracle_expectation(
    kind: BellKind,
    a: &MeasurementAxis,
    b: &MeasurementAxis,
    beta: f64,
    delta: f64,
    tolerance: f64,
) -> Result<OracleReport> {
    let frame = Frame::new(beta, delta)?;
    let state = frame.pipeline_state(kind)?;
    let omega = frame.pipeline_angle(false)?;

    let m_a = observable_matrix(&rotate_axis_a(a, omega));
    let m_b = observable_matrix(&rotate_axis_b(b, omega));
    let big = m_a.matrix().kronecker(m_b.matrix());
    let brute = state.amplitudes().dotc(&(big * state.amplitudes())).re;
    let closed = correlation_closed_form(kind, a, b);

    Ok(OracleReport::compare(
        format!("expectation({kind}, beta={beta:.6}, delta={delta:.6})"),
        closed,
        brute,
        tolerance,
    ))
}

/// Grid density for [`run_suite`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum GridDensity {
    /// 10×10 angle grid, 5×5 state grid, 100 random expectation trials.
    Coarse,
    /// 50×50 angle grid, 20×20 state grid, 1000 random expectation trials.
    Default,
}

impl GridDensity {
    fn angle_grid(&self) -> usize {
        match self {
            GridDensity::Coarse => 10,
            GridDensity::Default => 50,
        }
    }

    fn state_grid(&self) -> usize {
        match self {
            GridDensity::Coarse => 5,
            GridDensity::Default => 20,
        }
    }

    fn expectation_trials(&self) -> usize {
        match self {
            GridDensity::Coarse => 100,
            GridDensity::Default => 1000,
        }
    }
}

/// Configuration of the verification suite.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteConfig {
    pub grid: GridDensity,
    pub angle_tolerance: f64,
    pub amplitude_tolerance: f64,
    pub correlation_tolerance: f64,
    /// Seed of the deterministic RNG behind the random expectation trials.
    pub seed: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            grid: GridDensity::Default,
            angle_tolerance: tol::ANGLE_MATCH,
            amplitude_tolerance: tol::AMPLITUDE_MATCH,
            correlation_tolerance: tol::CORRELATION_MATCH,
            seed: 7,
        }
    }
}

impl SuiteConfig {
    /// Override every comparison tolerance with the same value.
    pub fn with_uniform_tolerance(mut self, tolerance: f64) -> Self {
        self.angle_tolerance = tolerance;
        self.amplitude_tolerance = tolerance;
        self.correlation_tolerance = tolerance;
        self
    }
}

/// Outcome of a full verification run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub config: SuiteConfig,
    pub reports: Vec<OracleReport>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.reports.iter().all(|r| r.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &OracleReport> {
        self.reports.iter().filter(|r| !r.pass)
    }

    pub fn len(&self) -> usize {
        self.reports.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reports.is_empty()
    }
}

const BETA_GRID_MAX: f64 = 0.99;
const DELTA_GRID_MAX: f64 = 5.0;

/// Run the whole oracle suite over (β, δ) grids and random expectation
/// trials. Deterministic for a fixed config.
pub fn run_suite(config: &SuiteConfig) -> Result<SuiteReport> {
    let mut reports = Vec::new();

    let n = config.grid.angle_grid();
    for i in 0..n {
        for j in 0..n {
            let beta = BETA_GRID_MAX * (i as f64) / ((n - 1) as f64);
            let delta = DELTA_GRID_MAX * (j as f64) / ((n - 1) as f64);
            reports.push(oracle_wigner_angle(beta, delta, config.angle_tolerance)?);
        }
    }

    let n = config.grid.state_grid();
    for kind in BellKind::ALL {
        for i in 0..n {
            for j in 0..n {
                let beta = BETA_GRID_MAX * (i as f64) / ((n - 1) as f64);
                let delta = DELTA_GRID_MAX * (j as f64) / ((n - 1) as f64);
                reports.push(oracle_boosted_state(
                    kind,
                    beta,
                    delta,
                    config.amplitude_tolerance,
                )?);
            }
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    for _ in 0..config.grid.expectation_trials() {
        let kind = BellKind::ALL[rng.random_range(0..4)];
        let a = random_axis(&mut rng);
        let b = random_axis(&mut rng);
        let beta: f64 = rng.random_range(0.0..BETA_GRID_MAX);
        let delta: f64 = rng.random_range(0.0..DELTA_GRID_MAX);
        reports.push(oracle_expectation(
            kind,
            &a,
            &b,
            beta,
            delta,
            config.correlation_tolerance,
        )?);
    }

    Ok(SuiteReport {
        config: config.clone(),
        reports,
    })
}

fn random_axis(rng: &mut ChaCha8Rng) -> MeasurementAxis {
    let u: f64 = rng.random_range(-1.0..1.0);
    let phi: f64 = rng.random_range(0.0..std::f64::consts::TAU);
    let r = (1.0 - u * u).sqrt();
    MeasurementAxis::from_components(r * phi.cos(), r * phi.sin(), u)
        .expect("spherical coordinates give a unit vector")
}
