//! Quaternion scalar type and transform-axis configuration.
//!
//! Scalar-first component order: `q = w + x·i + y·j + z·k` with the Hamilton
//! rules `ij = k`, `jk = i`, `ki = j`, `i² = j² = k² = -1`. Everything in the
//! crate that mixes axes goes through [`AxisConfig`], which fixes an ordered
//! pair of perpendicular unit pure quaternions `(u1, u2)` and derives
//! `u3 = u1·u2`.

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Quaternion {
    pub w: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

// ── Constructors ───────────────────────────────────────────────────────────

impl Quaternion {
    #[inline]
    pub const fn new(w: f64, x: f64, y: f64, z: f64) -> Self {
        Self { w, x, y, z }
    }

    #[inline]
    pub const fn zero() -> Self {
        Self::new(0.0, 0.0, 0.0, 0.0)
    }

    #[inline]
    pub const fn one() -> Self {
        Self::new(1.0, 0.0, 0.0, 0.0)
    }

    #[inline]
    pub const fn i() -> Self {
        Self::new(0.0, 1.0, 0.0, 0.0)
    }

    #[inline]
    pub const fn j() -> Self {
        Self::new(0.0, 0.0, 1.0, 0.0)
    }

    #[inline]
    pub const fn k() -> Self {
        Self::new(0.0, 0.0, 0.0, 1.0)
    }

    #[inline]
    pub const fn from_scalar(w: f64) -> Self {
        Self::new(w, 0.0, 0.0, 0.0)
    }

    /// `cos(angle) + u·sin(angle)` for a unit pure `u`; the building block of
    /// every transform kernel in the crate.
    #[inline]
    pub fn rotor(u: Quaternion, angle: f64) -> Self {
        let (s, c) = angle.sin_cos();
        Self::new(c, u.x * s, u.y * s, u.z * s)
    }
}

// ── Algebra ────────────────────────────────────────────────────────────────

impl Quaternion {
    /// Scalar part `Sc(q) = w`.
    #[inline]
    pub const fn sc(&self) -> f64 {
        self.w
    }

    /// Pure (vector) part, as a quaternion with zero scalar part.
    #[inline]
    pub const fn vec(&self) -> Self {
        Self::new(0.0, self.x, self.y, self.z)
    }

    #[inline]
    pub const fn conj(&self) -> Self {
        Self::new(self.w, -self.x, -self.y, -self.z)
    }

    /// Squared Euclidean norm, `q·conj(q)`.
    #[inline]
    pub fn norm_sq(&self) -> f64 {
        self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z
    }

    #[inline]
    pub fn norm(&self) -> f64 {
        self.norm_sq().sqrt()
    }

    /// Componentwise 4D dot product; equals `Sc(p·conj(q))`.
    #[inline]
    pub fn dot(&self, rhs: &Quaternion) -> f64 {
        self.w * rhs.w + self.x * rhs.x + self.y * rhs.y + self.z * rhs.z
    }

    /// Multiplicative inverse `conj(q)/|q|²`. Zero has none.
    pub fn inv(&self) -> Result<Self> {
        let n2 = self.norm_sq();
        if n2 == 0.0 {
            return Err(Error::Domain("inverse of zero quaternion".into()));
        }
        Ok(self.conj() * (1.0 / n2))
    }

    /// Exponential. Closed form `e^w (cos|v| + v/|v| sin|v|)` with a series
    /// guard for `|v| < 1e-8`, where `v` is the pure part.
    pub fn exp(&self) -> Self {
        let ew = self.w.exp();
        let vn = (self.x * self.x + self.y * self.y + self.z * self.z).sqrt();
        // sin|v|/|v| loses nothing to cancellation, but dividing by a
        // denormal-scale |v| does; the quadratic truncation is exact to
        // f64 below the guard.
        let s = if vn < 1e-8 {
            1.0 - vn * vn / 6.0
        } else {
            vn.sin() / vn
        };
        Self::new(ew * vn.cos(), ew * s * self.x, ew * s * self.y, ew * s * self.z)
    }

    /// Symplectic split with respect to an axis pair: `q = z1 + u2·z2` with
    /// both parts in the plane spanned by `{1, u1}`.
    pub fn split(&self, axis: &AxisConfig) -> (Quaternion, Quaternion) {
        let c = axis.components(*self);
        let z1 = Quaternion::from_scalar(c[0]) + axis.u1 * c[1];
        let z2 = Quaternion::from_scalar(c[2]) - axis.u1 * c[3];
        (z1, z2)
    }
}

// ── Operators ──────────────────────────────────────────────────────────────

impl std::ops::Add for Quaternion {
    type Output = Self;
    #[inline]
    fn add(self, rhs: Self) -> Self {
        Self::new(self.w + rhs.w, self.x + rhs.x, self.y + rhs.y, self.z + rhs.z)
    }
}

impl std::ops::Sub for Quaternion {
    type Output = Self;
    #[inline]
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.w - rhs.w, self.x - rhs.x, self.y - rhs.y, self.z - rhs.z)
    }
}

impl std::ops::Neg for Quaternion {
    type Output = Self;
    #[inline]
    fn neg(self) -> Self {
        Self::new(-self.w, -self.x, -self.y, -self.z)
    }
}

impl std::ops::Mul for Quaternion {
    type Output = Self;
    /// Hamilton product.
    #[inline]
    fn mul(self, r: Self) -> Self {
        Self::new(
            self.w * r.w - self.x * r.x - self.y * r.y - self.z * r.z,
            self.w * r.x + self.x * r.w + self.y * r.z - self.z * r.y,
            self.w * r.y - self.x * r.z + self.y * r.w + self.z * r.x,
            self.w * r.z + self.x * r.y - self.y * r.x + self.z * r.w,
        )
    }
}

impl std::ops::Mul<f64> for Quaternion {
    type Output = Self;
    #[inline]
    fn mul(self, s: f64) -> Self {
        Self::new(self.w * s, self.x * s, self.y * s, self.z * s)
    }
}

impl std::ops::AddAssign for Quaternion {
    #[inline]
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

// ── Axis configuration ─────────────────────────────────────────────────────

/// Ordered pair of perpendicular unit pure quaternions with the derived third
/// axis `u3 = u1·u2`. The triple is an orthonormal basis of the pure
/// quaternions, so converting to frame components and back is an isometry.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AxisConfig {
    u1: Quaternion,
    u2: Quaternion,
    u3: Quaternion,
}

const AXIS_TOL: f64 = 1e-12;

impl AxisConfig {
    /// Validates and stores an axis pair. Inputs are re-normalized to unit
    /// length; purity and perpendicularity must hold within 1e-12.
    pub fn new(u1: Quaternion, u2: Quaternion) -> Result<Self> {
        let norm1 = u1.norm();
        let norm2 = u2.norm();
        if !(norm1.is_finite() && norm2.is_finite()) || norm1 < AXIS_TOL || norm2 < AXIS_TOL {
            return Err(Error::Axis("axis quaternions must be nonzero and finite".into()));
        }
        let u1 = u1 * (1.0 / norm1);
        let u2 = u2 * (1.0 / norm2);
        if u1.sc().abs() > AXIS_TOL || u2.sc().abs() > AXIS_TOL {
            return Err(Error::Axis("axis quaternions must be pure".into()));
        }
        if (u1 * u2.conj()).sc().abs() > AXIS_TOL {
            return Err(Error::Axis("axis quaternions must be perpendicular".into()));
        }
        let u3 = u1 * u2;
        Ok(Self { u1, u2, u3 })
    }

    /// The default frame `(i, j)` with `u3 = k`.
    pub fn canonical() -> Self {
        Self {
            u1: Quaternion::i(),
            u2: Quaternion::j(),
            u3: Quaternion::k(),
        }
    }

    #[inline]
    pub fn u1(&self) -> Quaternion {
        self.u1
    }

    #[inline]
    pub fn u2(&self) -> Quaternion {
        self.u2
    }

    #[inline]
    pub fn u3(&self) -> Quaternion {
        self.u3
    }

    /// Frame components `(a, b, c, d)` of `q = a + b·u1 + c·u2 + d·u3`.
    #[inline]
    pub fn components(&self, q: Quaternion) -> [f64; 4] {
        [
            q.sc(),
            q.x * self.u1.x + q.y * self.u1.y + q.z * self.u1.z,
            q.x * self.u2.x + q.y * self.u2.y + q.z * self.u2.z,
            q.x * self.u3.x + q.y * self.u3.y + q.z * self.u3.z,
        ]
    }

    /// Rebuilds a quaternion from frame components.
    #[inline]
    pub fn from_components(&self, c: [f64; 4]) -> Quaternion {
        Quaternion::new(
            c[0],
            c[1] * self.u1.x + c[2] * self.u2.x + c[3] * self.u3.x,
            c[1] * self.u1.y + c[2] * self.u2.y + c[3] * self.u3.y,
            c[1] * self.u1.z + c[2] * self.u2.z + c[3] * self.u3.z,
        )
    }

    /// True for the exact `(i, j)` frame, where component conversion is the
    /// identity and can be skipped.
    pub fn is_canonical(&self) -> bool {
        *self == Self::canonical()
    }
}
