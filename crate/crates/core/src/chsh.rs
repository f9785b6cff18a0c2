//! The CHSH functional, the canonical maximal-violation axes, the Horodecki
//! bound, a deterministic alternating axis optimizer, and the critical-β
//! root finder for the non-covariant CHSH curve.

use nalgebra::{Matrix3, Vector3};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::observables::{
    correlation_numeric, czachor_chsh, CorrelationMatrix, MeasurementAxis,
};
use crate::spinstate::{boosted_bell_analytic, BellKind};
use crate::tol;

const TSIRELSON: f64 = 2.0 * std::f64::consts::SQRT_2;

/// Which observable produced a CHSH value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ObservableKind {
    /// The covariant spin observable (axes Wigner-rotate with the frame).
    Covariant,
    /// The closed-form curve of the non-covariant Czachor-style observable.
    CzachorClosedForm,
}

/// A CHSH measurement setting: two axes per side.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChshSetting {
    pub a1: MeasurementAxis,
    pub a2: MeasurementAxis,
    pub b1: MeasurementAxis,
    pub b2: MeasurementAxis,
}

/// A CHSH evaluation: the value, the four correlations it combines (absent
/// for the Czachor closed form, which only yields the aggregate), and the
/// frame parameters it was evaluated at. `beta`/`delta` stay `None` when
/// only the Wigner angle is known.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ChshReport {
    pub observable: ObservableKind,
    pub value: f64,
    pub correlations: Option<[f64; 4]>,
    pub omega: f64,
    pub beta: Option<f64>,
    pub delta: Option<f64>,
}

impl ChshReport {
    fn covariant(correlations: [f64; 4], omega: f64) -> Result<Self> {
        let value = correlations[0] + correlations[1] + correlations[2] - correlations[3];
        if value.abs() > TSIRELSON + tol::TSIRELSON_SLACK {
            return Err(Error::Domain {
                name: "chsh value",
                value,
                domain: "[-2*sqrt(2), 2*sqrt(2)]",
            });
        }
        Ok(Self {
            observable: ObservableKind::Covariant,
            value,
            correlations: Some(correlations),
            omega,
            beta: None,
            delta: None,
        })
    }

    /// Report for the Czachor closed-form curve at a concrete frame.
    pub fn czachor(beta: f64, delta: f64, omega: f64, value: f64) -> Self {
        Self {
            observable: ObservableKind::CzachorClosedForm,
            value,
            correlations: None,
            omega,
            beta: Some(beta),
            delta: Some(delta),
        }
    }

    /// Attach the frame parameters behind a Wigner angle.
    pub fn with_frame(mut self, beta: f64, delta: f64) -> Self {
        self.beta = Some(beta);
        self.delta = Some(delta);
        self
    }
}

/// CHSH value `E(a₁,b₁) + E(a₁,b₂) + E(a₂,b₁) − E(a₂,b₂)` of the boosted
/// Bell state under the covariant observable, evaluated numerically.
pub fn chsh_value(kind: BellKind, setting: &ChshSetting, omega: f64) -> Result<ChshReport> {
    let state = boosted_bell_analytic(kind, omega);
    let correlations = [
        correlation_numeric(&state, &setting.a1, &setting.b1, omega)?,
        correlation_numeric(&state, &setting.a1, &setting.b2, omega)?,
        correlation_numeric(&state, &setting.a2, &setting.b1, omega)?,
        correlation_numeric(&state, &setting.a2, &setting.b2, omega)?,
    ];
    ChshReport::covariant(correlations, omega)
}

/// The per-state axes achieving the maximal violation 2√2, with
/// `b₁ = (0,1,0)` and `b₂ = (1,0,0)` shared by all Bell states.
pub fn canonical_axes(kind: BellKind) -> ChshSetting {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let pair = |x1: f64, y1: f64, x2: f64, y2: f64| {
        (
            MeasurementAxis::from_components(x1, y1, 0.0).expect("unit axis"),
            MeasurementAxis::from_components(x2, y2, 0.0).expect("unit axis"),
        )
    };
    let (a1, a2) = match kind {
        BellKind::PhiPlus => pair(h, -h, -h, -h),
        BellKind::PhiMinus => pair(-h, h, h, h),
        BellKind::PsiPlus => pair(h, h, -h, h),
        BellKind::PsiMinus => pair(-h, -h, h, -h),
    };
    ChshSetting {
        a1,
        a2,
        b1: MeasurementAxis::y_axis(),
        b2: MeasurementAxis::x_axis(),
    }
}

/// Horodecki criterion: the maximal CHSH value of a two-qubit state is
/// `2√(s₁² + s₂²)` over the two largest singular values of its correlation
/// tensor.
pub fn horodecki_max(t: &CorrelationMatrix) -> f64 {
    let s = t.singular_values();
    2.0 * (s[0] * s[0] + s[1] * s[1]).sqrt()
}

/// [`optimize_axes_from`] seeded with `a₁ = x̂`, `a₂ = ŷ`.
pub fn optimize_axes(kind: BellKind, omega: f64) -> Result<(ChshSetting, f64)> {
    optimize_axes_from(
        kind,
        omega,
        MeasurementAxis::x_axis(),
        MeasurementAxis::y_axis(),
    )
}

/// Deterministic alternating maximization of the CHSH value over the four
/// axes, for the boosted Bell state under the covariant observable.
///
/// With `E(a, b) = aᵀ T̃ b`, each sweep sets
/// `b₁ ∝ T̃ᵀ(a₁+a₂)`, `b₂ ∝ T̃ᵀ(a₁−a₂)` and then
/// `a₁ ∝ T̃(b₁+b₂)`, `a₂ ∝ T̃(b₁−b₂)`; degenerate directions (for example a
/// seed with `a₁ = a₂`) are replaced by the coordinate axis most orthogonal
/// to the sibling vector. Stops when the value changes by less than
/// [`tol::OPTIMIZER_STALL`]; converges to the Horodecki bound.
pub fn optimize_axes_from(
    kind: BellKind,
    omega: f64,
    a1_seed: MeasurementAxis,
    a2_seed: MeasurementAxis,
) -> Result<(ChshSetting, f64)> {
    const MAX_ITERATIONS: usize = 100;

    // Effective bilinear form assembled from the numeric correlation path.
    let state = boosted_bell_analytic(kind, omega);
    let basis = [
        MeasurementAxis::x_axis(),
        MeasurementAxis::y_axis(),
        MeasurementAxis::z_axis(),
    ];
    let mut t = Matrix3::zeros();
    for (i, ei) in basis.iter().enumerate() {
        for (j, ej) in basis.iter().enumerate() {
            t[(i, j)] = correlation_numeric(&state, ei, ej, omega)?;
        }
    }

    let mut a1 = a1_seed.vector();
    let mut a2 = a2_seed.vector();
    let mut b2 = Vector3::x();
    let mut previous = f64::NEG_INFINITY;
    for _ in 0..MAX_ITERATIONS {
        let b1 = direction_or_fallback(t.transpose() * (a1 + a2), &b2);
        b2 = direction_or_fallback(t.transpose() * (a1 - a2), &b1);
        a1 = direction_or_fallback(t * (b1 + b2), &a2);
        a2 = direction_or_fallback(t * (b1 - b2), &a1);
        let value = (a1.dot(&(t * b1))) + (a1.dot(&(t * b2))) + (a2.dot(&(t * b1)))
            - (a2.dot(&(t * b2)));
        if (value - previous).abs() < tol::OPTIMIZER_STALL {
            let setting = ChshSetting {
                a1: MeasurementAxis::new(a1)?,
                a2: MeasurementAxis::new(a2)?,
                b1: MeasurementAxis::new(b1)?,
                b2: MeasurementAxis::new(b2)?,
            };
            return Ok((setting, value));
        }
        previous = value;
    }
    Err(Error::NoConvergence {
        iterations: MAX_ITERATIONS,
    })
}

/// Normalize `v`, falling back to the coordinate axis most orthogonal to
/// `sibling` when `v` is numerically zero.
fn direction_or_fallback(v: Vector3<f64>, sibling: &Vector3<f64>) -> Vector3<f64> {
    let n = v.norm();
    if n > 1e-12 {
        return v / n;
    }
    let candidates = [Vector3::x(), Vector3::y(), Vector3::z()];
    candidates
        .into_iter()
        .min_by(|u, w| u.dot(sibling).abs().total_cmp(&w.dot(sibling).abs()))
        .expect("non-empty candidate list")
}

/// Number of scan points used to bracket the |C| = 2 crossing.
const CRITICAL_SCAN_POINTS: usize = 10_000;
/// Upper end of the β scan; czachor_chsh stays well conditioned here.
const CRITICAL_SCAN_MAX: f64 = 0.999_999_9;

/// Smallest boost speed at which the Czachor curve satisfies |C| = 2,
/// located by a grid scan and bisection to [`tol::BETA_BISECTION`] in β.
///
/// Errors with [`Error::NoCrossing`] when |C| > 2 across the whole scan.
pub fn critical_beta(delta: f64) -> Result<f64> {
    if delta < 0.0 || !delta.is_finite() {
        return Err(Error::Domain {
            name: "delta",
            value: delta,
            domain: "[0, inf)",
        });
    }
    let f = |beta: f64| -> Result<f64> { Ok(czachor_chsh(beta, delta)?.abs() - 2.0) };
    let grid = |i: usize| CRITICAL_SCAN_MAX * (i as f64) / ((CRITICAL_SCAN_POINTS - 1) as f64);

    let mut lo = 0.0;
    let mut f_lo = f(lo)?;
    let mut bracket = None;
    for i in 1..CRITICAL_SCAN_POINTS {
        let hi = grid(i);
        let f_hi = f(hi)?;
        if f_lo > 0.0 && f_hi <= 0.0 {
            bracket = Some((lo, hi));
            break;
        }
        lo = hi;
        f_lo = f_hi;
    }
    let (mut lo, mut hi) = bracket.ok_or(Error::NoCrossing { delta })?;
    while hi - lo > tol::BETA_BISECTION {
        let mid = 0.5 * (lo + hi);
        if f(mid)? > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::observables::correlation_matrix_of;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::FRAC_PI_2;

    // Regression constants from the first bisection runs.
    const BETA_C_DELTA_1: f64 = 0.822217872654;
    const BETA_C_DELTA_3: f64 = 0.559869910683;

    #[test]
    fn canonical_axes_components() {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let s = canonical_axes(BellKind::PhiPlus);
        assert_abs_diff_eq!(s.a1.vector()[0], h, epsilon = 1e-15);
        assert_abs_diff_eq!(s.a1.vector()[1], -h, epsilon = 1e-15);
        assert_abs_diff_eq!(s.a2.vector()[0], -h, epsilon = 1e-15);
        let s = canonical_axes(BellKind::PsiMinus);
        assert_abs_diff_eq!(s.a1.vector()[0], -h, epsilon = 1e-15);
        assert_abs_diff_eq!(s.a1.vector()[1], -h, epsilon = 1e-15);
        assert_abs_diff_eq!(s.a2.vector()[0], h, epsilon = 1e-15);
        for kind in BellKind::ALL {
            let s = canonical_axes(kind);
            for axis in [s.a1, s.a2, s.b1, s.b2] {
                assert_abs_diff_eq!(axis.vector().norm(), 1.0, epsilon = 1e-15);
            }
        }
    }

    #[test]
    fn canonical_axes_reach_tsirelson_at_any_boost() {
        for kind in BellKind::ALL {
            for omega in [0.0, 0.3, 1.2, FRAC_PI_2] {
                let report = chsh_value(kind, &canonical_axes(kind), omega).unwrap();
                assert_abs_diff_eq!(report.value, TSIRELSON, epsilon = 1e-10);
                let c = report.correlations.unwrap();
                assert_abs_diff_eq!(
                    report.value,
                    c[0] + c[1] + c[2] - c[3],
                    epsilon = 1e-12
                );
            }
        }
    }

    #[test]
    fn degenerate_setting_is_bounded_by_two() {
        let a = MeasurementAxis::from_components(0.6, 0.0, 0.8).unwrap();
        let b = MeasurementAxis::from_components(0.0, 1.0, 0.0).unwrap();
        let setting = ChshSetting {
            a1: a,
            a2: a,
            b1: b,
            b2: b,
        };
        for kind in BellKind::ALL {
            let report = chsh_value(kind, &setting, 0.4).unwrap();
            let c = report.correlations.unwrap();
            assert_abs_diff_eq!(report.value, 2.0 * c[0], epsilon = 1e-12);
            assert!(report.value.abs() <= 2.0 + 1e-12);
        }
    }

    #[test]
    fn horodecki_for_known_tensors() {
        let singlet = CorrelationMatrix::new(Matrix3::from_diagonal(&Vector3::new(
            -1.0, -1.0, -1.0,
        )))
        .unwrap();
        assert_abs_diff_eq!(horodecki_max(&singlet), TSIRELSON, epsilon = 1e-12);
        let product_like =
            CorrelationMatrix::new(Matrix3::from_diagonal(&Vector3::new(1.0, 0.0, 0.0)))
                .unwrap();
        assert_abs_diff_eq!(horodecki_max(&product_like), 2.0, epsilon = 1e-12);
    }

    #[test]
    fn horodecki_is_boost_invariant() {
        for omega in [0.0, 0.5, 1.0, FRAC_PI_2] {
            let t = correlation_matrix_of(&boosted_bell_analytic(BellKind::PhiPlus, omega))
                .unwrap();
            assert_abs_diff_eq!(horodecki_max(&t), TSIRELSON, epsilon = 1e-10);
        }
    }

    #[test]
    fn optimizer_reaches_the_bound() {
        for (kind, omega) in [
            (BellKind::PsiMinus, 0.0),
            (BellKind::PhiPlus, 0.7),
            (BellKind::PhiMinus, 1.2),
            (BellKind::PsiPlus, FRAC_PI_2),
        ] {
            let (setting, value) = optimize_axes(kind, omega).unwrap();
            assert_abs_diff_eq!(value, TSIRELSON, epsilon = 1e-9);
            assert!(value <= TSIRELSON + tol::TSIRELSON_SLACK);
            let check = chsh_value(kind, &setting, omega).unwrap();
            assert_abs_diff_eq!(check.value, value, epsilon = 1e-9);
        }
    }

    #[test]
    fn optimizer_matches_horodecki_bound() {
        for kind in BellKind::ALL {
            for i in 0..8 {
                let omega = FRAC_PI_2 * f64::from(i) / 7.0;
                let (_, value) = optimize_axes(kind, omega).unwrap();
                let t = correlation_matrix_of(&boosted_bell_analytic(kind, omega)).unwrap();
                assert!((value - horodecki_max(&t)).abs() < tol::BOUND_MATCH);
            }
        }
    }

    #[test]
    fn optimizer_recovers_from_a_degenerate_seed() {
        let axis = MeasurementAxis::from_components(0.0, 0.0, 1.0).unwrap();
        let (_, value) = optimize_axes_from(BellKind::PsiMinus, 0.0, axis, axis).unwrap();
        assert_abs_diff_eq!(value, TSIRELSON, epsilon = 1e-9);
    }

    #[test]
    fn optimizer_value_never_exceeds_chsh_for_its_setting() {
        // Horodecki bound dominates any explicit setting on the same state.
        let t = correlation_matrix_of(&boosted_bell_analytic(BellKind::PhiMinus, 0.9)).unwrap();
        let bound = horodecki_max(&t);
        let report = chsh_value(BellKind::PhiMinus, &canonical_axes(BellKind::PhiMinus), 0.9)
            .unwrap();
        assert!(report.value <= bound + tol::BOUND_MATCH);
    }

    #[test]
    fn critical_beta_regression_values() {
        let bc1 = critical_beta(1.0).unwrap();
        assert_abs_diff_eq!(bc1, BETA_C_DELTA_1, epsilon = 1e-8);
        let bc3 = critical_beta(3.0).unwrap();
        assert_abs_diff_eq!(bc3, BETA_C_DELTA_3, epsilon = 1e-8);
        let residual = (czachor_chsh(bc3, 3.0).unwrap().abs() - 2.0).abs();
        assert!(residual < tol::CRITICAL_RESIDUAL);
    }

    #[test]
    fn critical_beta_brackets_the_crossing() {
        let bc = critical_beta(3.0).unwrap();
        assert!(czachor_chsh(bc - 0.01, 3.0).unwrap() > 2.0);
        assert!(czachor_chsh(bc + 0.01, 3.0).unwrap() < 2.0);
    }

    #[test]
    fn critical_beta_reports_missing_crossings() {
        // At δ = 0 the curve stays strictly above 2 on [0, 1).
        assert!(matches!(
            critical_beta(0.0),
            Err(Error::NoCrossing { .. })
        ));
        assert!(matches!(critical_beta(-1.0), Err(Error::Domain { .. })));
    }

    #[test]
    fn czachor_crosses_two_exactly_once_on_the_band() {
        for i in 0..9 {
            let delta = 1.0 + 4.0 * f64::from(i) / 8.0;
            let mut crossings = 0;
            let mut prev = czachor_chsh(0.0, delta).unwrap().abs() - 2.0;
            for j in 1..10_000 {
                let beta = CRITICAL_SCAN_MAX * f64::from(j) / 9_999.0;
                let cur = czachor_chsh(beta, delta).unwrap().abs() - 2.0;
                if prev > 0.0 && cur <= 0.0 || prev <= 0.0 && cur > 0.0 {
                    crossings += 1;
                }
                prev = cur;
            }
            assert_eq!(crossings, 1, "delta = {delta}");
        }
    }
}
