//! Two-qubit spin states, the Bell basis, the spin-1/2 representation of
//! Wigner rotations, and the Lorentz action on Bell states.
//!
//! Amplitudes are ordered (↑↑, ↑↓, ↓↑, ↓↓); particle A (the first factor)
//! carries momentum `p`, particle B carries the parity image `Pp`. Momentum
//! labels ride along as inert metadata: with sharp momenta the states factor
//! as `|p, Pp⟩ ⊗ |Φ⟩`, so the amplitude algebra stays four-dimensional.

use std::fmt;
use std::str::FromStr;

use nalgebra::{Matrix2, Vector3, Vector4};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lorentz::{FourVector, LorentzMatrix, WignerRotation};
use crate::tol;

const FRAC_1_SQRT_2: f64 = std::f64::consts::FRAC_1_SQRT_2;

fn re(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// A complex 2×2 matrix acting on a single spin-1/2 factor. Rotation
/// representations built by [`su2_from_rotation`] are unitary with
/// determinant +1; observables (`a⃗·σ⃗`) are Hermitian involutions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Spinor2Matrix(Matrix2<Complex64>);

impl Spinor2Matrix {
    pub fn identity() -> Self {
        Self(Matrix2::identity())
    }

    pub fn from_matrix(matrix: Matrix2<Complex64>) -> Self {
        Self(matrix)
    }

    /// Pauli σ_x.
    pub fn pauli_x() -> Self {
        Self(Matrix2::new(re(0.0), re(1.0), re(1.0), re(0.0)))
    }

    /// Pauli σ_y.
    pub fn pauli_y() -> Self {
        Self(Matrix2::new(
            re(0.0),
            Complex64::new(0.0, -1.0),
            Complex64::new(0.0, 1.0),
            re(0.0),
        ))
    }

    /// Pauli σ_z.
    pub fn pauli_z() -> Self {
        Self(Matrix2::new(re(1.0), re(0.0), re(0.0), re(-1.0)))
    }

    /// `v⃗·σ⃗` for an arbitrary real 3-vector.
    pub fn pauli_dot(v: &Vector3<f64>) -> Self {
        Self(Matrix2::new(
            re(v[2]),
            Complex64::new(v[0], -v[1]),
            Complex64::new(v[0], v[1]),
            re(-v[2]),
        ))
    }

    pub fn matrix(&self) -> &Matrix2<Complex64> {
        &self.0
    }

    /// Largest entry of `U†U − I`.
    pub fn unitarity_defect(&self) -> f64 {
        let d = self.0.adjoint() * self.0 - Matrix2::identity();
        d.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    pub fn determinant(&self) -> Complex64 {
        self.0[(0, 0)] * self.0[(1, 1)] - self.0[(0, 1)] * self.0[(1, 0)]
    }
}

impl std::ops::Mul for Spinor2Matrix {
    type Output = Spinor2Matrix;
    fn mul(self, rhs: Self) -> Self {
        Self(self.0 * rhs.0)
    }
}

/// The SU(2) representation `D = cos(θ/2)·I − i sin(θ/2)·n̂·σ⃗` of a spatial
/// rotation. Conjugation rotates the Pauli vector with the right-hand rule:
/// `D (σ⃗·v⃗) D⁻¹ = σ⃗·(R v⃗)`. For axis ŷ this is the real matrix
/// `[[cos θ/2, −sin θ/2], [sin θ/2, cos θ/2]]`.
pub fn su2_from_rotation(r: &WignerRotation) -> Spinor2Matrix {
    let half = 0.5 * r.angle();
    let c = re(half.cos());
    let s = Complex64::new(0.0, -half.sin());
    let n = r.axis();
    Spinor2Matrix(Matrix2::identity() * c + *Spinor2Matrix::pauli_dot(&n).matrix() * s)
}

/// The four Bell states. The order is fixed (and used for CSV/report
/// columns): Φ⁺, Φ⁻, Ψ⁺, Ψ⁻.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum BellKind {
    /// (|↑↑⟩ + |↓↓⟩)/√2
    PhiPlus,
    /// (|↑↑⟩ − |↓↓⟩)/√2
    PhiMinus,
    /// (|↑↓⟩ + |↓↑⟩)/√2
    PsiPlus,
    /// (|↑↓⟩ − |↓↑⟩)/√2
    PsiMinus,
}

impl BellKind {
    pub const ALL: [BellKind; 4] = [
        BellKind::PhiPlus,
        BellKind::PhiMinus,
        BellKind::PsiPlus,
        BellKind::PsiMinus,
    ];

    pub fn label(&self) -> &'static str {
        match self {
            BellKind::PhiPlus => "phi+",
            BellKind::PhiMinus => "phi-",
            BellKind::PsiPlus => "psi+",
            BellKind::PsiMinus => "psi-",
        }
    }
}

impl fmt::Display for BellKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for BellKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "phi+" => Ok(BellKind::PhiPlus),
            "phi-" => Ok(BellKind::PhiMinus),
            "psi+" => Ok(BellKind::PsiPlus),
            "psi-" => Ok(BellKind::PsiMinus),
            other => Err(format!(
                "unknown Bell state {other:?} (expected phi+, phi-, psi+ or psi-)"
            )),
        }
    }
}

/// A normalized two-qubit spin state with optional momentum labels.
#[derive(Debug, Clone, PartialEq)]
pub struct TwoQubitState {
    amplitudes: Vector4<Complex64>,
    momenta: Option<(FourVector, FourVector)>,
}

impl TwoQubitState {
    /// Build from amplitudes ordered (↑↑, ↑↓, ↓↑, ↓↓); rejects vectors whose
    /// norm deviates from 1 beyond [`tol::CONSTRUCTION`].
    pub fn new(
        amplitudes: Vector4<Complex64>,
        momenta: Option<(FourVector, FourVector)>,
    ) -> Result<Self> {
        let defect = (amplitudes.norm() - 1.0).abs();
        if defect > tol::CONSTRUCTION {
            return Err(Error::NotNormalized { defect });
        }
        Ok(Self {
            amplitudes,
            momenta,
        })
    }

    pub fn amplitudes(&self) -> &Vector4<Complex64> {
        &self.amplitudes
    }

    pub fn momenta(&self) -> Option<(FourVector, FourVector)> {
        self.momenta
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes.norm()
    }

    /// Inner product ⟨self|other⟩ (conjugate-linear in `self`).
    pub fn inner(&self, other: &Self) -> Complex64 {
        self.amplitudes.dotc(&other.amplitudes)
    }

    /// Largest per-amplitude deviation from `other`.
    pub fn amplitude_distance(&self, other: &Self) -> f64 {
        (0..4)
            .map(|i| (self.amplitudes[i] - other.amplitudes[i]).norm())
            .fold(0.0, f64::max)
    }
}

/// A Bell state with the two momentum labels `(p, Pp)` attached.
pub fn bell_state(kind: BellKind, p: FourVector, pp: FourVector) -> TwoQubitState {
    TwoQubitState {
        amplitudes: bell_amplitudes(kind),
        momenta: Some((p, pp)),
    }
}

fn bell_amplitudes(kind: BellKind) -> Vector4<Complex64> {
    let h = re(FRAC_1_SQRT_2);
    let zero = re(0.0);
    match kind {
        BellKind::PhiPlus => Vector4::new(h, zero, zero, h),
        BellKind::PhiMinus => Vector4::new(h, zero, zero, -h),
        BellKind::PsiPlus => Vector4::new(zero, h, h, zero),
        BellKind::PsiMinus => Vector4::new(zero, h, -h, zero),
    }
}

/// Apply the two-particle spin action `d_a ⊗ d_b` and map the momentum
/// labels through `boost` (`p → Λp`, `Pp → ΛPp`).
///
/// Rejects `d_a`/`d_b` whose unitarity defect exceeds [`tol::CONSISTENCY`].
pub fn boost_state(
    state: &TwoQubitState,
    d_a: &Spinor2Matrix,
    d_b: &Spinor2Matrix,
    boost: &LorentzMatrix,
) -> Result<TwoQubitState> {
    for d in [d_a, d_b] {
        let defect = d.unitarity_defect();
        if defect > tol::CONSISTENCY {
            return Err(Error::NotUnitary { defect });
        }
    }
    let (a, b) = (d_a.matrix(), d_b.matrix());
    let input = state.amplitudes();
    let mut out = Vector4::from_element(re(0.0));
    for ia in 0..2 {
        for ib in 0..2 {
            let mut acc = re(0.0);
            for ja in 0..2 {
                for jb in 0..2 {
                    acc += a[(ia, ja)] * b[(ib, jb)] * input[2 * ja + jb];
                }
            }
            out[2 * ia + ib] = acc;
        }
    }
    let momenta = state
        .momenta
        .map(|(p, pp)| (boost.apply(&p), boost.apply(&pp)));
    Ok(TwoQubitState {
        amplitudes: out,
        momenta,
    })
}

/// Closed form of a Bell state boosted through Wigner angle Ω:
///
/// * Φ⁺ → cos Ω · Φ⁺ − sin Ω · Ψ⁻
/// * Φ⁻ → Φ⁻  (invariant)
/// * Ψ⁺ → Ψ⁺  (invariant)
/// * Ψ⁻ → sin Ω · Φ⁺ + cos Ω · Ψ⁻
///
/// Equivalent to [`boost_state`] with `d_a = D(ŷ, Ω)`, `d_b = D(ŷ, −Ω)`;
/// carries no momentum labels.
pub fn boosted_bell_analytic(kind: BellKind, omega: f64) -> TwoQubitState {
    let phi_plus = bell_amplitudes(BellKind::PhiPlus);
    let psi_minus = bell_amplitudes(BellKind::PsiMinus);
    let (c, s) = (re(omega.cos()), re(omega.sin()));
    let amplitudes = match kind {
        BellKind::PhiPlus => phi_plus * c - psi_minus * s,
        BellKind::PhiMinus => bell_amplitudes(BellKind::PhiMinus),
        BellKind::PsiPlus => bell_amplitudes(BellKind::PsiPlus),
        BellKind::PsiMinus => phi_plus * s + psi_minus * c,
    };
    TwoQubitState {
        amplitudes,
        momenta: None,
    }
}
