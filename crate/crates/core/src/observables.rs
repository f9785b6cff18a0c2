//! The covariant spin observable via Wigner-rotated measurement axes,
//! numeric and closed-form two-qubit correlations, and the closed-form CHSH
//! curve of the non-covariant (Czachor-style) observable.
//!
//! Boosting the covariant observable is equivalent to Wigner-rotating the
//! measurement axes: `Ô′(a, b) = Ô(a_R, b_R)` with the rest-frame matrix
//! `2 a⃗·S⃗ = a⃗·σ⃗`. Particle A's axis rotates by +Ω about ŷ, particle B's by
//! −Ω, matching the little-group sign convention for momenta ±ẑ.

use nalgebra::{Matrix2, Matrix3, Vector3, Vector4};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::spinstate::{BellKind, Spinor2Matrix, TwoQubitState};
use crate::tol;

/// A unit spatial measurement axis: the spatial part of `a^μ = (0, a⃗)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeasurementAxis(Vector3<f64>);

impl MeasurementAxis {
    /// Normalizes the given vector; rejects (numerically) zero input.
    pub fn new(v: Vector3<f64>) -> Result<Self> {
        let n = v.norm();
        if n < 1e-14 || !n.is_finite() {
            return Err(Error::ZeroVector);
        }
        Ok(Self(v / n))
    }

    pub fn from_components(x: f64, y: f64, z: f64) -> Result<Self> {
        Self::new(Vector3::new(x, y, z))
    }

    pub fn x_axis() -> Self {
        Self(Vector3::x())
    }

    pub fn y_axis() -> Self {
        Self(Vector3::y())
    }

    pub fn z_axis() -> Self {
        Self(Vector3::z())
    }

    pub fn vector(&self) -> Vector3<f64> {
        self.0
    }
}

/// Wigner-rotated axis for particle A (momentum +ẑ):
/// `a_R = (a_x cos Ω + a_z sin Ω, a_y, −a_x sin Ω + a_z cos Ω)`.
pub fn rotate_axis_a(a: &MeasurementAxis, omega: f64) -> MeasurementAxis {
    let v = a.vector();
    let (s, c) = omega.sin_cos();
    MeasurementAxis(Vector3::new(v[0] * c + v[2] * s, v[1], -v[0] * s + v[2] * c))
}

/// Wigner-rotated axis for particle B (momentum −ẑ, opposite sense):
/// `b_R = (b_x cos Ω − b_z sin Ω, b_y, b_x sin Ω + b_z cos Ω)`.
pub fn rotate_axis_b(b: &MeasurementAxis, omega: f64) -> MeasurementAxis {
    let v = b.vector();
    let (s, c) = omega.sin_cos();
    MeasurementAxis(Vector3::new(v[0] * c - v[2] * s, v[1], v[0] * s + v[2] * c))
}

/// The covariant single-particle spin observable along an axis. Its
/// rest-frame matrix `a⃗·σ⃗` is Hermitian, traceless and involutive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CovariantObservable {
    axis: MeasurementAxis,
}

impl CovariantObservable {
    pub fn new(axis: MeasurementAxis) -> Self {
        Self { axis }
    }

    pub fn axis(&self) -> &MeasurementAxis {
        &self.axis
    }

    /// Rest-frame 2×2 matrix; eigenvalues ±1.
    pub fn matrix(&self) -> Spinor2Matrix {
        observable_matrix(&self.axis)
    }
}

/// Rest-frame observable matrix `a⃗·σ⃗` (i.e. `2 a⃗·S⃗` with `S = σ/2`).
pub fn observable_matrix(a: &MeasurementAxis) -> Spinor2Matrix {
    Spinor2Matrix::pauli_dot(&a.vector())
}

/// Apply `m_a ⊗ m_b` to a two-qubit amplitude vector.
fn apply_pair(
    m_a: &Matrix2<Complex64>,
    m_b: &Matrix2<Complex64>,
    v: &Vector4<Complex64>,
) -> Vector4<Complex64> {
    let mut out = Vector4::from_element(Complex64::new(0.0, 0.0));
    for ia in 0..2 {
        for ib in 0..2 {
            let mut acc = Complex64::new(0.0, 0.0);
            for ja in 0..2 {
                for jb in 0..2 {
                    acc += m_a[(ia, ja)] * m_b[(ib, jb)] * v[2 * ja + jb];
                }
            }
            out[2 * ia + ib] = acc;
        }
    }
    out
}

/// Numeric correlation `⟨state| (a_R·σ⃗) ⊗ (b_R·σ⃗) |state⟩` where the axes
/// are Wigner-rotated with the same Ω that produced the boosted state.
///
/// The result is real for consistent inputs; an imaginary residual above
/// [`tol::CONSISTENCY`] is reported as an error and discarded otherwise.
pub fn correlation_numeric(
    state: &TwoQubitState,
    a: &MeasurementAxis,
    b: &MeasurementAxis,
    omega: f64,
) -> Result<f64> {
    correlation_numeric_with_tolerance(state, a, b, omega, tol::CONSISTENCY)
}

/// [`correlation_numeric`] with an explicit imaginary-residual threshold.
pub fn correlation_numeric_with_tolerance(
    state: &TwoQubitState,
    a: &MeasurementAxis,
    b: &MeasurementAxis,
    omega: f64,
    residual_tolerance: f64,
) -> Result<f64> {
    let m_a = observable_matrix(&rotate_axis_a(a, omega));
    let m_b = observable_matrix(&rotate_axis_b(b, omega));
    let transformed = apply_pair(m_a.matrix(), m_b.matrix(), state.amplitudes());
    let value = state.amplitudes().dotc(&transformed);
    if value.im.abs() > residual_tolerance {
        return Err(Error::ImaginaryResidual { residual: value.im });
    }
    Ok(value.re)
}

/// Frame-invariant closed-form correlations of the boosted Bell states:
///
/// * Φ⁺: `a_x b_x − a_y b_y + a_z b_z`
/// * Φ⁻: `−a_x b_x + a_y b_y + a_z b_z`
/// * Ψ⁺: `a_x b_x + a_y b_y − a_z b_z`
/// * Ψ⁻: `−a⃗·b⃗`
///
/// Independent of Ω by construction.
pub fn correlation_closed_form(kind: BellKind, a: &MeasurementAxis, b: &MeasurementAxis) -> f64 {
    let (a, b) = (a.vector(), b.vector());
    match kind {
        BellKind::PhiPlus => a[0] * b[0] - a[1] * b[1] + a[2] * b[2],
        BellKind::PhiMinus => -a[0] * b[0] + a[1] * b[1] + a[2] * b[2],
        BellKind::PsiPlus => a[0] * b[0] + a[1] * b[1] - a[2] * b[2],
        BellKind::PsiMinus => -a.dot(&b),
    }
}

/// The two-qubit correlation tensor `T_ij = ⟨σ_i ⊗ σ_j⟩`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CorrelationMatrix(Matrix3<f64>);

impl CorrelationMatrix {
    /// Validates that entries lie in [−1, 1] and singular values in [0, 1],
    /// both within [`tol::CONSISTENCY`].
    pub fn new(matrix: Matrix3<f64>) -> Result<Self> {
        let max_entry = matrix.abs().max();
        if max_entry > 1.0 + tol::CONSISTENCY {
            return Err(Error::Domain {
                name: "correlation entry",
                value: max_entry,
                domain: "[-1, 1]",
            });
        }
        let candidate = Self(matrix);
        let s = candidate.singular_values();
        if s[0] > 1.0 + tol::CONSISTENCY {
            return Err(Error::Domain {
                name: "correlation singular value",
                value: s[0],
                domain: "[0, 1]",
            });
        }
        Ok(candidate)
    }

    pub fn matrix(&self) -> &Matrix3<f64> {
        &self.0
    }

    pub fn entry(&self, i: usize, j: usize) -> f64 {
        self.0[(i, j)]
    }

    /// Singular values in descending order.
    pub fn singular_values(&self) -> [f64; 3] {
        let sv = self.0.svd(false, false).singular_values;
        let mut s = [sv[0], sv[1], sv[2]];
        s.sort_by(|a, b| b.total_cmp(a));
        s
    }
}

/// Assemble the correlation tensor of a state from the nine Pauli pairs.
pub fn correlation_matrix_of(state: &TwoQubitState) -> Result<CorrelationMatrix> {
    let paulis = [
        Spinor2Matrix::pauli_x(),
        Spinor2Matrix::pauli_y(),
        Spinor2Matrix::pauli_z(),
    ];
    let mut t = Matrix3::zeros();
    for (i, pa) in paulis.iter().enumerate() {
        for (j, pb) in paulis.iter().enumerate() {
            let transformed = apply_pair(pa.matrix(), pb.matrix(), state.amplitudes());
            let value = state.amplitudes().dotc(&transformed);
            if value.im.abs() > tol::CONSTRUCTION {
                return Err(Error::ImaginaryResidual { residual: value.im });
            }
            t[(i, j)] = value.re;
        }
    }
    CorrelationMatrix::new(t)
}

/// Closed-form CHSH value of the non-covariant (Czachor-style) spin
/// observable for the singlet Ψ⁻ with its canonical axes:
///
/// `C′(β, δ) = 2/√(2−β²) · (√(1−β²) + cos 2Ω)`, `Ω = Ω(α(β), δ)`.
///
/// Equals 2√2 at β = 0 and decays to `4 sech²δ − 2` as β → 1, so the
/// violation is lost beyond a critical boost speed. `cos 2Ω` is evaluated
/// through `tan Ω` as `(1 − tan²Ω)/(1 + tan²Ω)` to avoid angle wrapping
/// near Ω = π/2.
pub fn czachor_chsh(beta: f64, delta: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&beta) {
        return Err(Error::NonPhysicalBoost { beta });
    }
    if delta < 0.0 || !delta.is_finite() {
        return Err(Error::Domain {
            name: "delta",
            value: delta,
            domain: "[0, inf)",
        });
    }
    let alpha = beta.atanh();
    let tan_omega = alpha.sinh() * delta.sinh() / (alpha.cosh() + delta.cosh());
    let t2 = tan_omega * tan_omega;
    let cos_2omega = (1.0 - t2) / (1.0 + t2);
    Ok(2.0 / (2.0 - beta * beta).sqrt() * ((1.0 - beta * beta).sqrt() + cos_2omega))
}
