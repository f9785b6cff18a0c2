//! Exact special-relativistic kinematics: four-vectors, boost matrices, the
//! standard boost `L(p)`, Wigner's little-group element, and the closed-form
//! Wigner angle.
//!
//! Conventions: metric signature (+,−,−,−), natural units `c = ħ = 1`, and
//! active transformations (a boost with speed β along `n̂` takes a rest
//! particle to momentum `m γ β n̂`).

use nalgebra::{Matrix3, Matrix4, Vector3, Vector4};

use crate::error::{Error, Result};
use crate::tol;

/// A Minkowski four-vector `(t, x, y, z)` with signature (+,−,−,−).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FourVector {
    pub t: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl FourVector {
    pub const fn new(t: f64, x: f64, y: f64, z: f64) -> Self {
        Self { t, x, y, z }
    }

    /// The rest momentum `k = (m, 0, 0, 0)`.
    pub const fn rest(mass: f64) -> Self {
        Self::new(mass, 0.0, 0.0, 0.0)
    }

    /// Minkowski norm `t² − x² − y² − z²`.
    pub fn minkowski_norm_sq(&self) -> f64 {
        self.t * self.t - self.x * self.x - self.y * self.y - self.z * self.z
    }

    /// Minkowski inner product with signature (+,−,−,−).
    pub fn minkowski_dot(&self, other: &Self) -> f64 {
        self.t * other.t - self.x * other.x - self.y * other.y - self.z * other.z
    }

    /// Spatial part as a 3-vector.
    pub fn spatial(&self) -> Vector3<f64> {
        Vector3::new(self.x, self.y, self.z)
    }

    /// Parity image `(t, −x, −y, −z)`. Involutive: `p.parity().parity() == p`.
    pub fn parity(&self) -> Self {
        Self::new(self.t, -self.x, -self.y, -self.z)
    }

    /// Normalized on-shell defect `|p·p − m²| / max(m², t²)`.
    pub fn on_shell_defect(&self, mass: f64) -> f64 {
        let scale = (mass * mass).max(self.t * self.t);
        (self.minkowski_norm_sq() - mass * mass).abs() / scale
    }

    /// Largest absolute component difference.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        (self.t - other.t)
            .abs()
            .max((self.x - other.x).abs())
            .max((self.y - other.y).abs())
            .max((self.z - other.z).abs())
    }

    fn to_vector4(self) -> Vector4<f64> {
        Vector4::new(self.t, self.x, self.y, self.z)
    }

    fn from_vector4(v: Vector4<f64>) -> Self {
        Self::new(v[0], v[1], v[2], v[3])
    }
}

/// Boost parameters: speed `β ∈ [0, 1)` along a unit direction, with the
/// rapidity `α = artanh β` (so `cosh α = γ`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoostParams {
    beta: f64,
    direction: Vector3<f64>,
}

impl BoostParams {
    /// Boost with speed `beta` along `direction` (normalized here).
    pub fn from_beta(beta: f64, direction: Vector3<f64>) -> Result<Self> {
        if !(0.0..1.0).contains(&beta) {
            return Err(Error::NonPhysicalBoost { beta });
        }
        Ok(Self {
            beta,
            direction: unit(direction)?,
        })
    }

    /// Boost with rapidity `alpha ≥ 0` along `direction`; `β = tanh α`.
    pub fn from_rapidity(alpha: f64, direction: Vector3<f64>) -> Result<Self> {
        if alpha < 0.0 || !alpha.is_finite() {
            return Err(Error::Domain {
                name: "alpha",
                value: alpha,
                domain: "[0, inf)",
            });
        }
        Self::from_beta(alpha.tanh(), direction)
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// Rapidity `α = artanh β`.
    pub fn alpha(&self) -> f64 {
        self.beta.atanh()
    }

    /// Lorentz factor `γ = cosh α = 1/√(1−β²)`.
    pub fn gamma(&self) -> f64 {
        1.0 / (1.0 - self.beta * self.beta).sqrt()
    }

    pub fn direction(&self) -> Vector3<f64> {
        self.direction
    }
}

/// On-shell kinematics of a massive particle: mass, momentum direction, and
/// particle rapidity `δ` with `cosh δ = p⁰/m`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParticleKinematics {
    mass: f64,
    direction: Vector3<f64>,
    delta: f64,
}

impl ParticleKinematics {
    pub fn new(mass: f64, direction: Vector3<f64>, delta: f64) -> Result<Self> {
        if mass <= 0.0 || !mass.is_finite() {
            return Err(Error::NonPositiveMass { mass });
        }
        if delta < 0.0 || !delta.is_finite() {
            return Err(Error::Domain {
                name: "delta",
                value: delta,
                domain: "[0, inf)",
            });
        }
        Ok(Self {
            mass,
            direction: unit(direction)?,
            delta,
        })
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }

    pub fn direction(&self) -> Vector3<f64> {
        self.direction
    }

    /// Particle speed `v_p = tanh δ`.
    pub fn speed(&self) -> f64 {
        self.delta.tanh()
    }

    /// The on-shell four-momentum `(m cosh δ, m sinh δ p̂)`.
    pub fn momentum(&self) -> FourVector {
        let p = self.mass * self.delta.sinh() * self.direction;
        FourVector::new(self.mass * self.delta.cosh(), p[0], p[1], p[2])
    }
}

/// A 4×4 real matrix satisfying `ΛᵀηΛ = η`, `det Λ = +1`, `Λ⁰₀ ≥ 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LorentzMatrix(Matrix4<f64>);

impl LorentzMatrix {
    pub fn identity() -> Self {
        Self(Matrix4::identity())
    }

    /// Wrap an externally supplied matrix, validating the proper
    /// orthochronous Lorentz conditions within [`tol::CONSTRUCTION`].
    pub fn from_matrix(matrix: Matrix4<f64>) -> Result<Self> {
        let candidate = Self(matrix);
        let defect = candidate
            .metric_defect()
            .max((matrix.determinant() - 1.0).abs());
        if defect > tol::CONSTRUCTION || matrix[(0, 0)] < 1.0 - tol::CONSTRUCTION {
            return Err(Error::NotLorentz { defect });
        }
        Ok(candidate)
    }

    #[cfg(test)]
    pub(crate) fn from_matrix_unchecked(matrix: Matrix4<f64>) -> Self {
        Self(matrix)
    }

    pub fn matrix(&self) -> &Matrix4<f64> {
        &self.0
    }

    /// Largest entry of `ΛᵀηΛ − η`.
    pub fn metric_defect(&self) -> f64 {
        let eta = Matrix4::from_diagonal(&Vector4::new(1.0, -1.0, -1.0, -1.0));
        (self.0.transpose() * eta * self.0 - eta).abs().max()
    }

    /// Apply to a four-vector (active transformation).
    pub fn apply(&self, v: &FourVector) -> FourVector {
        FourVector::from_vector4(precise::matvec(&self.0, &v.to_vector4()))
    }

    /// Exact algebraic inverse `Λ⁻¹ = η Λᵀ η`.
    pub fn inverse(&self) -> Self {
        let mut m = self.0.transpose();
        for i in 1..4 {
            m[(0, i)] = -m[(0, i)];
            m[(i, 0)] = -m[(i, 0)];
        }
        Self(m)
    }

    /// Matrix product `self · other` (apply `other` first).
    pub fn compose(&self, other: &Self) -> Self {
        Self(self.0 * other.0)
    }

    /// The spatial 3×3 block.
    pub fn spatial_block(&self) -> Matrix3<f64> {
        self.0.fixed_view::<3, 3>(1, 1).into_owned()
    }
}

/// A spatial rotation as axis + angle. Extraction canonicalizes the angle
/// into (−π, π] with the axis component of largest magnitude positive, and
/// fixes the degenerate angle-0 axis to ẑ. Constructors accept angles
/// outside (−π, π] unchanged, so spinor double-cover arguments like 2π keep
/// their meaning.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WignerRotation {
    axis: Vector3<f64>,
    angle: f64,
}

impl WignerRotation {
    pub fn new(axis: Vector3<f64>, angle: f64) -> Result<Self> {
        Ok(Self {
            axis: unit(axis)?,
            angle,
        })
    }

    pub fn identity() -> Self {
        Self {
            axis: Vector3::z(),
            angle: 0.0,
        }
    }

    pub fn axis(&self) -> Vector3<f64> {
        self.axis
    }

    pub fn angle(&self) -> f64 {
        self.angle
    }

    /// Signed angle taking `about` as the reference axis: the stored angle
    /// if the axis points along `about`, its negative if opposite.
    pub fn angle_about(&self, about: &Vector3<f64>) -> f64 {
        if self.angle == 0.0 {
            0.0
        } else {
            self.angle * self.axis.dot(about).signum()
        }
    }

    /// The SO(3) matrix (Rodrigues form, right-hand rule).
    pub fn rotation_matrix(&self) -> Matrix3<f64> {
        let k = skew(&self.axis);
        Matrix3::identity() + self.angle.sin() * k + (1.0 - self.angle.cos()) * (k * k)
    }

    /// Embed as a 4×4 Lorentz matrix fixing the rest momentum exactly.
    pub fn to_lorentz(&self) -> LorentzMatrix {
        let r = self.rotation_matrix();
        let mut m = Matrix4::identity();
        m.fixed_view_mut::<3, 3>(1, 1).copy_from(&r);
        LorentzMatrix(m)
    }
}

fn unit(v: Vector3<f64>) -> Result<Vector3<f64>> {
    let n = v.norm();
    if n < 1e-14 || !n.is_finite() {
        return Err(Error::ZeroVector);
    }
    Ok(v / n)
}

/// Compensated 4×4 products. Little-group elements multiply matrices with
/// entries of order γ·cosh δ that cancel down to O(1) rotation entries, so
/// plain double products lose up to ~1e-11 near the corners of the working
/// (β, δ) range. Carrying error terms through the chain keeps the final
/// entries correctly rounded.
mod precise {
    use nalgebra::{Matrix4, Vector4};

    #[inline]
    fn two_sum(a: f64, b: f64) -> (f64, f64) {
        let s = a + b;
        let bb = s - a;
        (s, (a - (s - bb)) + (b - bb))
    }

    #[inline]
    fn two_prod(a: f64, b: f64) -> (f64, f64) {
        let p = a * b;
        (p, a.mul_add(b, -p))
    }

    /// Product of a (value, error) matrix pair with a plain matrix,
    /// returning a (value, error) pair.
    pub fn mul(a: &(Matrix4<f64>, Matrix4<f64>), b: &Matrix4<f64>) -> (Matrix4<f64>, Matrix4<f64>) {
        let mut hi = Matrix4::zeros();
        let mut lo = Matrix4::zeros();
        for i in 0..4 {
            for j in 0..4 {
                let mut sum = 0.0;
                let mut err = 0.0;
                for k in 0..4 {
                    let (p, pe) = two_prod(a.0[(i, k)], b[(k, j)]);
                    let (s, se) = two_sum(sum, p);
                    sum = s;
                    err += se + pe + a.1[(i, k)] * b[(k, j)];
                }
                let (v, ve) = two_sum(sum, err);
                hi[(i, j)] = v;
                lo[(i, j)] = ve;
            }
        }
        (hi, lo)
    }

    pub fn promote(m: &Matrix4<f64>) -> (Matrix4<f64>, Matrix4<f64>) {
        (*m, Matrix4::zeros())
    }

    pub fn collapse(m: (Matrix4<f64>, Matrix4<f64>)) -> Matrix4<f64> {
        m.0 + m.1
    }

    /// Compensated matrix-vector product.
    pub fn matvec(a: &Matrix4<f64>, v: &Vector4<f64>) -> Vector4<f64> {
        let mut out = Vector4::zeros();
        for i in 0..4 {
            let mut sum = 0.0;
            let mut err = 0.0;
            for k in 0..4 {
                let (p, pe) = two_prod(a[(i, k)], v[k]);
                let (s, se) = two_sum(sum, p);
                sum = s;
                err += se + pe;
            }
            out[i] = sum + err;
        }
        out
    }
}

fn skew(n: &Vector3<f64>) -> Matrix3<f64> {
    Matrix3::new(0.0, -n[2], n[1], n[2], 0.0, -n[0], -n[1], n[0], 0.0)
}

/// The symmetric pure boost for the given parameters: the active transform
/// taking a rest particle to speed β along `direction` (equivalently, the
/// coordinate map into a frame moving with velocity −β·direction).
pub fn boost_matrix(b: &BoostParams) -> LorentzMatrix {
    let gamma = b.gamma();
    let gb = gamma * b.beta();
    let n = b.direction();
    let mut m = Matrix4::identity();
    m[(0, 0)] = gamma;
    for i in 0..3 {
        m[(0, i + 1)] = gb * n[i];
        m[(i + 1, 0)] = gb * n[i];
        for j in 0..3 {
            m[(i + 1, j + 1)] = if i == j { 1.0 } else { 0.0 } + (gamma - 1.0) * n[i] * n[j];
        }
    }
    LorentzMatrix(m)
}

/// The standard boost `L(p)` taking the rest momentum `k = (m,0,0,0)` to
/// `p`: `L(p)·k = p`. Pure boost, so the spatial block is symmetric.
pub fn standard_boost(p: &FourVector, mass: f64) -> Result<LorentzMatrix> {
    if mass <= 0.0 || !mass.is_finite() {
        return Err(Error::NonPositiveMass { mass });
    }
    let defect = p.on_shell_defect(mass);
    if defect > tol::CONSISTENCY || p.t <= 0.0 {
        return Err(Error::OffShell {
            defect,
            tolerance: tol::CONSISTENCY,
        });
    }
    let e = p.t;
    let pv = p.spatial();
    let mut m = Matrix4::identity();
    m[(0, 0)] = e / mass;
    for i in 0..3 {
        m[(0, i + 1)] = pv[i] / mass;
        m[(i + 1, 0)] = pv[i] / mass;
        for j in 0..3 {
            m[(i + 1, j + 1)] =
                if i == j { 1.0 } else { 0.0 } + pv[i] * pv[j] / (mass * (e + mass));
        }
    }
    Ok(LorentzMatrix(m))
}

/// Wigner's little-group element `W(Λ, p) = L⁻¹(Λp) · Λ · L(p)`.
///
/// `W` fixes the rest momentum; the result is checked against
/// [`tol::CONSISTENCY`] and an internal inconsistency is reported if the
/// fixpoint fails.
pub fn little_group_element(
    boost: &LorentzMatrix,
    p: &FourVector,
    mass: f64,
) -> Result<LorentzMatrix> {
    let q = boost.apply(p);
    let l_p = standard_boost(p, mass)?;
    let l_q = standard_boost(&q, mass)?;
    let partial = precise::mul(&precise::promote(l_q.inverse().matrix()), boost.matrix());
    let w = LorentzMatrix(precise::collapse(precise::mul(&partial, l_p.matrix())));
    let k = FourVector::rest(mass);
    let defect = w.apply(&k).max_abs_diff(&k) / mass;
    if defect > tol::CONSISTENCY {
        return Err(Error::LittleGroupDefect { defect });
    }
    Ok(w)
}

/// Extract axis and angle from a Lorentz matrix that fixes the rest
/// momentum (time row/column `(1,0,0,0)` within [`tol::CONSISTENCY`]).
///
/// Uses the largest-pivot quaternion extraction, which stays accurate for
/// angles anywhere in (−π, π]; the angle-0 axis is fixed to ẑ and the axis
/// sign is canonicalized so its largest-magnitude component is positive.
pub fn extract_rotation(w: &LorentzMatrix) -> Result<WignerRotation> {
    let m = w.matrix();
    let time_defect = (m[(0, 0)] - 1.0)
        .abs()
        .max(m[(0, 1)].abs())
        .max(m[(0, 2)].abs())
        .max(m[(0, 3)].abs())
        .max(m[(1, 0)].abs())
        .max(m[(2, 0)].abs())
        .max(m[(3, 0)].abs());
    if time_defect > tol::CONSISTENCY {
        return Err(Error::LittleGroupDefect {
            defect: time_defect,
        });
    }
    let r = w.spatial_block();
    let ortho_defect = (r.transpose() * r - Matrix3::identity())
        .abs()
        .max()
        .max((r.determinant() - 1.0).abs());
    if ortho_defect > tol::CONSISTENCY {
        return Err(Error::NotARotation {
            defect: ortho_defect,
        });
    }

    // Skew part gives sin θ · n̂ and cancels symmetric perturbations of a
    // noisy input; the quaternion branch takes over near θ = π where the
    // skew part degenerates.
    let v = Vector3::new(
        (r[(2, 1)] - r[(1, 2)]) / 2.0,
        (r[(0, 2)] - r[(2, 0)]) / 2.0,
        (r[(1, 0)] - r[(0, 1)]) / 2.0,
    );
    let s = v.norm();
    let c = (r.trace() - 1.0) / 2.0;
    let (mut axis, mut angle) = if c > -0.9 {
        if s < 1e-15 {
            return Ok(WignerRotation::identity());
        }
        (v / s, s.atan2(c))
    } else {
        let (w0, qv) = quaternion_of(&r);
        let vn = qv.norm();
        (qv / vn, 2.0 * vn.atan2(w0))
    };

    // Canonical axis sign: largest-|component| positive.
    let lead = (0..3).max_by(|&i, &j| axis[i].abs().total_cmp(&axis[j].abs())).unwrap();
    if axis[lead] < 0.0 {
        axis = -axis;
        angle = -angle;
    }
    if angle <= -std::f64::consts::PI {
        angle += 2.0 * std::f64::consts::PI;
    }
    Ok(WignerRotation { axis, angle })
}

/// Unit quaternion (w, v) of a rotation matrix, Shepperd's largest-pivot
/// branch selection, normalized to w ≥ 0.
fn quaternion_of(r: &Matrix3<f64>) -> (f64, Vector3<f64>) {
    let trace = r.trace();
    let (w, x, y, z);
    if trace > 0.0 {
        let s = (trace + 1.0).sqrt() * 2.0;
        w = 0.25 * s;
        x = (r[(2, 1)] - r[(1, 2)]) / s;
        y = (r[(0, 2)] - r[(2, 0)]) / s;
        z = (r[(1, 0)] - r[(0, 1)]) / s;
    } else if r[(0, 0)] >= r[(1, 1)] && r[(0, 0)] >= r[(2, 2)] {
        let s = (1.0 + r[(0, 0)] - r[(1, 1)] - r[(2, 2)]).sqrt() * 2.0;
        w = (r[(2, 1)] - r[(1, 2)]) / s;
        x = 0.25 * s;
        y = (r[(0, 1)] + r[(1, 0)]) / s;
        z = (r[(0, 2)] + r[(2, 0)]) / s;
    } else if r[(1, 1)] >= r[(2, 2)] {
        let s = (1.0 + r[(1, 1)] - r[(0, 0)] - r[(2, 2)]).sqrt() * 2.0;
        w = (r[(0, 2)] - r[(2, 0)]) / s;
        x = (r[(0, 1)] + r[(1, 0)]) / s;
        y = 0.25 * s;
        z = (r[(1, 2)] + r[(2, 1)]) / s;
    } else {
        let s = (1.0 + r[(2, 2)] - r[(0, 0)] - r[(1, 1)]).sqrt() * 2.0;
        w = (r[(1, 0)] - r[(0, 1)]) / s;
        x = (r[(0, 2)] + r[(2, 0)]) / s;
        y = (r[(1, 2)] + r[(2, 1)]) / s;
        z = 0.25 * s;
    }
    if w < 0.0 {
        (-w, Vector3::new(-x, -y, -z))
    } else {
        (w, Vector3::new(x, y, z))
    }
}

/// Closed-form Wigner angle `tan Ω = sinh α sinh δ / (cosh α + cosh δ)` for
/// a boost perpendicular to the particle momentum (boost x̂, momentum ẑ).
///
/// Returns Ω ∈ [0, π/2), monotone nondecreasing in each argument.
pub fn wigner_angle_closed_form(alpha: f64, delta: f64) -> Result<f64> {
    if alpha < 0.0 || !alpha.is_finite() {
        return Err(Error::Domain {
            name: "alpha",
            value: alpha,
            domain: "[0, inf)",
        });
    }
    if delta < 0.0 || !delta.is_finite() {
        return Err(Error::Domain {
            name: "delta",
            value: delta,
            domain: "[0, inf)",
        });
    }
    Ok((alpha.sinh() * delta.sinh()).atan2(alpha.cosh() + delta.cosh()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::{FRAC_PI_2, PI};

    // atan(sinh²(1) / (2 cosh 1)), the Wigner angle at α = δ = 1.
    const OMEGA_1_1: f64 = 0.42078396163807286;

    fn x_boost(beta: f64) -> LorentzMatrix {
        boost_matrix(&BoostParams::from_beta(beta, Vector3::x()).unwrap())
    }

    fn z_momentum(delta: f64) -> FourVector {
        ParticleKinematics::new(1.0, Vector3::z(), delta)
            .unwrap()
            .momentum()
    }

    #[test]
    fn zero_boost_is_identity() {
        let l = x_boost(0.0);
        assert_eq!(l.matrix(), LorentzMatrix::identity().matrix());
    }

    #[test]
    fn boost_of_rest_momentum() {
        // γ = 1.25 and γβ = 0.75 at β = 0.6.
        let m = 2.0;
        let l = x_boost(0.6);
        let p = l.apply(&FourVector::rest(m));
        assert_abs_diff_eq!(p.t, 1.25 * m, epsilon = 1e-12);
        assert_abs_diff_eq!(p.x, 0.75 * m, epsilon = 1e-12);
        assert_abs_diff_eq!(p.y, 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(p.z, 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(p.minkowski_norm_sq(), m * m, epsilon = 1e-12);
    }

    #[test]
    fn opposite_boosts_compose_to_identity() {
        let fwd = boost_matrix(&BoostParams::from_beta(0.77, Vector3::x()).unwrap());
        let bwd = boost_matrix(&BoostParams::from_beta(0.77, -Vector3::x()).unwrap());
        let prod = fwd.compose(&bwd);
        assert!((prod.matrix() - Matrix4::identity()).abs().max() < 1e-12);
    }

    #[test]
    fn boost_params_reject_unphysical_speeds() {
        assert!(matches!(
            BoostParams::from_beta(1.0, Vector3::x()),
            Err(Error::NonPhysicalBoost { .. })
        ));
        assert!(matches!(
            BoostParams::from_beta(-0.1, Vector3::x()),
            Err(Error::NonPhysicalBoost { .. })
        ));
        assert!(matches!(
            BoostParams::from_beta(0.5, Vector3::zeros()),
            Err(Error::ZeroVector)
        ));
    }

    #[test]
    fn rapidity_speed_conversions_agree() {
        let b = BoostParams::from_rapidity(1.0, Vector3::x()).unwrap();
        assert_abs_diff_eq!(b.beta(), 1.0f64.tanh(), epsilon = 0.0);
        assert_abs_diff_eq!(b.alpha(), 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(b.gamma(), b.alpha().cosh(), epsilon = 1e-12);
        let k = ParticleKinematics::new(2.0, Vector3::z(), 0.7).unwrap();
        assert_abs_diff_eq!(k.speed(), 0.7f64.tanh(), epsilon = 0.0);
        let p = k.momentum();
        assert_abs_diff_eq!(p.spatial().norm() / p.t, k.speed(), epsilon = 1e-12);
    }

    #[test]
    fn standard_boost_of_rest_is_identity() {
        let l = standard_boost(&FourVector::rest(1.5), 1.5).unwrap();
        assert!((l.matrix() - Matrix4::identity()).abs().max() < 1e-15);
    }

    #[test]
    fn standard_boost_reaches_target_momentum() {
        let p = z_momentum(1.0);
        let l = standard_boost(&p, 1.0).unwrap();
        let image = l.apply(&FourVector::rest(1.0));
        assert!(image.max_abs_diff(&p) < 1e-12);
    }

    #[test]
    fn standard_boost_rejects_bad_input() {
        let off = FourVector::new(2.0, 0.0, 0.0, 0.1);
        assert!(matches!(
            standard_boost(&off, 1.0),
            Err(Error::OffShell { .. })
        ));
        assert!(matches!(
            standard_boost(&FourVector::rest(1.0), 0.0),
            Err(Error::NonPositiveMass { .. })
        ));
    }

    #[test]
    fn little_group_of_identity_boost_is_identity() {
        let w = little_group_element(&LorentzMatrix::identity(), &z_momentum(0.7), 1.0).unwrap();
        assert!((w.matrix() - Matrix4::identity()).abs().max() < 1e-12);
    }

    #[test]
    fn little_group_matches_closed_form_angle() {
        // α = 1 (β = tanh 1) along x̂, δ = 1 along ẑ.
        let boost = boost_matrix(&BoostParams::from_rapidity(1.0, Vector3::x()).unwrap());
        let w = little_group_element(&boost, &z_momentum(1.0), 1.0).unwrap();
        let rot = extract_rotation(&w).unwrap();
        assert!(rot.axis().dot(&Vector3::y()) > 1.0 - 1e-12);
        assert_abs_diff_eq!(rot.angle(), OMEGA_1_1, epsilon = 1e-10);
        assert_abs_diff_eq!(
            wigner_angle_closed_form(1.0, 1.0).unwrap(),
            OMEGA_1_1,
            epsilon = 1e-12
        );
    }

    #[test]
    fn opposite_momentum_flips_the_angle_sign() {
        // Fixes the sign convention used by the boosted Bell states.
        let boost = boost_matrix(&BoostParams::from_rapidity(1.0, Vector3::x()).unwrap());
        let w = little_group_element(&boost, &z_momentum(1.0).parity(), 1.0).unwrap();
        let rot = extract_rotation(&w).unwrap();
        assert!(rot.axis().dot(&Vector3::y()) > 1.0 - 1e-12);
        assert_abs_diff_eq!(rot.angle(), -OMEGA_1_1, epsilon = 1e-10);
    }

    #[test]
    fn extract_rotation_round_trips() {
        let rot = WignerRotation::new(Vector3::y(), 0.3).unwrap();
        let back = extract_rotation(&rot.to_lorentz()).unwrap();
        assert!(back.axis().dot(&Vector3::y()) > 1.0 - 1e-12);
        assert_abs_diff_eq!(back.angle(), 0.3, epsilon = 1e-12);
    }

    #[test]
    fn extract_rotation_identity_uses_z_axis_convention() {
        let rot = extract_rotation(&LorentzMatrix::identity()).unwrap();
        assert_eq!(rot.angle(), 0.0);
        assert_eq!(rot.axis(), Vector3::z());
    }

    #[test]
    fn extract_rotation_rejects_non_rotations() {
        let mut m = Matrix4::identity();
        m[(1, 1)] = 1.5;
        let bad = LorentzMatrix::from_matrix_unchecked(m);
        assert!(matches!(
            extract_rotation(&bad),
            Err(Error::NotARotation { .. })
        ));
        let boost = x_boost(0.5);
        assert!(matches!(
            extract_rotation(&boost),
            Err(Error::LittleGroupDefect { .. })
        ));
    }

    #[test]
    fn extract_rotation_handles_angles_near_pi() {
        for &angle in &[PI, PI - 1e-9, -PI + 1e-9, 2.9] {
            let axis = Vector3::new(0.3, -0.5, 0.81).normalize();
            let rot = WignerRotation::new(axis, angle).unwrap();
            let back = extract_rotation(&rot.to_lorentz()).unwrap();
            let diff = (back.rotation_matrix() - rot.rotation_matrix()).abs().max();
            assert!(diff < 1e-10, "angle {angle}: defect {diff:.3e}");
        }
    }

    #[test]
    fn closed_form_angle_limits() {
        assert_eq!(wigner_angle_closed_form(0.0, 3.0).unwrap(), 0.0);
        // α, δ → ∞ pushes Ω → π/2; δ → 0 pushes Ω → 0.
        let high = wigner_angle_closed_form(20.0, 20.0).unwrap();
        assert!((high - FRAC_PI_2).abs() < 1e-3);
        let low = wigner_angle_closed_form(20.0, 1e-4).unwrap();
        assert!(low.abs() < 1e-3);
        assert!(matches!(
            wigner_angle_closed_form(-0.1, 1.0),
            Err(Error::Domain { .. })
        ));
    }

    #[test]
    fn closed_form_angle_is_monotone() {
        let mut prev = 0.0;
        for i in 0..50 {
            let a = 0.1 * f64::from(i);
            let omega = wigner_angle_closed_form(a, 2.0).unwrap();
            assert!(omega >= prev);
            prev = omega;
        }
    }

    #[test]
    fn lorentz_inverse_is_exact_algebra() {
        let l = x_boost(0.9);
        let prod = l.compose(&l.inverse());
        assert!((prod.matrix() - Matrix4::identity()).abs().max() < 1e-12);
    }

    #[test]
    fn from_matrix_validates() {
        assert!(LorentzMatrix::from_matrix(Matrix4::identity()).is_ok());
        let mut bad = Matrix4::identity();
        bad[(1, 2)] = 0.1;
        assert!(matches!(
            LorentzMatrix::from_matrix(bad),
            Err(Error::NotLorentz { .. })
        ));
    }

    #[test]
    fn parity_examples() {
        let p = FourVector::new(3.0, 0.0, 0.0, 2.0);
        assert_eq!(p.parity(), FourVector::new(3.0, 0.0, 0.0, -2.0));
        assert_eq!(p.parity().parity(), p);
        let k = FourVector::rest(1.0);
        assert_eq!(k.parity(), k);
    }
}
