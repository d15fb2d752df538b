//! Sampled quaternion-valued signals on uniform 2D (and 1D) grids.
//!
//! Index conventions used throughout the crate:
//!
//! * storage is row-major, `idx = i1 * n + i2`, with `i1` along the first
//!   axis (`m` samples, spacing `dx1`) and `i2` along the second;
//! * coordinate of index `i1` is `x1_0 + i1 * dx1`;
//! * on a periodic axis of length `M`, the reflection `-x` of index `i` is
//!   index `(M - i) % M`; index 0 is the fixed point;
//! * frequency grids derived from a spatial axis have step `2π/(M·dx)` and
//!   origin 0, and bin `k` carries the wrapped signed value `s(k)·dω` with
//!   `s(k) = k` for `k ≤ M/2`, else `k − M` (the Nyquist bin stays positive).

use crate::error::{Error, Result};
use crate::quat::Quaternion;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::f64::consts::PI;

// ── Grids ──────────────────────────────────────────────────────────────────

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid2D {
    pub m: usize,
    pub n: usize,
    pub dx1: f64,
    pub dx2: f64,
    pub x1_0: f64,
    pub x2_0: f64,
}

impl Grid2D {
    pub fn new(m: usize, n: usize, dx1: f64, dx2: f64, x1_0: f64, x2_0: f64) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::Grid("grid must have at least one sample per axis".into()));
        }
        if !(dx1 > 0.0 && dx2 > 0.0 && dx1.is_finite() && dx2.is_finite()) {
            return Err(Error::Grid("grid steps must be positive and finite".into()));
        }
        if !(x1_0.is_finite() && x2_0.is_finite()) {
            return Err(Error::Grid("grid origin must be finite".into()));
        }
        Ok(Self { m, n, dx1, dx2, x1_0, x2_0 })
    }

    /// Unit-step grid with origin 0.
    pub fn unit(m: usize, n: usize) -> Self {
        Self::new(m, n, 1.0, 1.0, 0.0, 0.0).unwrap()
    }

    /// Grid centered on the origin: `x1_0 = -floor(m/2)·dx1`. Even sizes are
    /// wrap-symmetric, odd sizes are not.
    pub fn centered(m: usize, n: usize, dx1: f64, dx2: f64) -> Result<Self> {
        Self::new(
            m,
            n,
            dx1,
            dx2,
            -((m / 2) as f64) * dx1,
            -((n / 2) as f64) * dx2,
        )
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.m * self.n
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    pub fn idx(&self, i1: usize, i2: usize) -> usize {
        i1 * self.n + i2
    }

    #[inline]
    pub fn coord1(&self, i1: usize) -> f64 {
        self.x1_0 + i1 as f64 * self.dx1
    }

    #[inline]
    pub fn coord2(&self, i2: usize) -> f64 {
        self.x2_0 + i2 as f64 * self.dx2
    }

    /// Signed wrap of an index: `k` for `k ≤ len/2`, else `k − len`.
    #[inline]
    pub fn wrap(k: usize, len: usize) -> i64 {
        if 2 * k <= len {
            k as i64
        } else {
            k as i64 - len as i64
        }
    }

    /// Coordinate of bin `k` under the wrapped signed reading of axis 1.
    /// On a frequency grid (origin 0) this is the signed frequency.
    #[inline]
    pub fn signed_coord1(&self, k: usize) -> f64 {
        self.x1_0 + Self::wrap(k, self.m) as f64 * self.dx1
    }

    #[inline]
    pub fn signed_coord2(&self, k: usize) -> f64 {
        self.x2_0 + Self::wrap(k, self.n) as f64 * self.dx2
    }

    #[inline]
    pub fn cell(&self) -> f64 {
        self.dx1 * self.dx2
    }

    /// Frequency grid derived from this spatial grid: same sample counts,
    /// steps `2π/(M·dx)`, origin 0.
    pub fn frequency_grid(&self) -> Grid2D {
        Grid2D {
            m: self.m,
            n: self.n,
            dx1: 2.0 * PI / (self.m as f64 * self.dx1),
            dx2: 2.0 * PI / (self.n as f64 * self.dx2),
            x1_0: 0.0,
            x2_0: 0.0,
        }
    }

    /// True when index reflection `(M−i) % M` represents coordinate negation,
    /// i.e. `2·x0` is an integer multiple of the period on both axes.
    pub fn is_wrap_symmetric(&self) -> bool {
        let ok = |x0: f64, step: f64, len: usize| {
            let period = step * len as f64;
            let r = 2.0 * x0 / period;
            (r - r.round()).abs() <= 1e-9
        };
        ok(self.x1_0, self.dx1, self.m) && ok(self.x2_0, self.dx2, self.n)
    }

    /// Tolerant equality for plan/signal agreement checks.
    pub fn approx_eq(&self, other: &Grid2D) -> bool {
        let near = |a: f64, b: f64| (a - b).abs() <= 1e-9 * a.abs().max(b.abs()).max(1.0);
        self.m == other.m
            && self.n == other.n
            && near(self.dx1, other.dx1)
            && near(self.dx2, other.dx2)
            && near(self.x1_0, other.x1_0)
            && near(self.x2_0, other.x2_0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid1D {
    pub len: usize,
    pub dt: f64,
    pub t0: f64,
}

impl Grid1D {
    pub fn new(len: usize, dt: f64, t0: f64) -> Result<Self> {
        if len == 0 {
            return Err(Error::Grid("1D grid must have at least one sample".into()));
        }
        if !(dt > 0.0 && dt.is_finite() && t0.is_finite()) {
            return Err(Error::Grid("1D grid step must be positive and finite".into()));
        }
        Ok(Self { len, dt, t0 })
    }

    #[inline]
    pub fn coord(&self, i: usize) -> f64 {
        self.t0 + i as f64 * self.dt
    }

    #[inline]
    pub fn signed_coord(&self, k: usize) -> f64 {
        self.t0 + Grid2D::wrap(k, self.len) as f64 * self.dt
    }

    pub fn frequency_grid(&self) -> Grid1D {
        Grid1D {
            len: self.len,
            dt: 2.0 * PI / (self.len as f64 * self.dt),
            t0: 0.0,
        }
    }

    /// Tolerant equality, mirroring [`Grid2D::approx_eq`].
    pub fn approx_eq(&self, other: &Grid1D) -> bool {
        let near = |a: f64, b: f64| (a - b).abs() <= 1e-9 * a.abs().max(b.abs()).max(1.0);
        self.len == other.len && near(self.dt, other.dt) && near(self.t0, other.t0)
    }
}

// ── Signals ────────────────────────────────────────────────────────────────

#[derive(Debug, Clone, PartialEq)]
pub struct QSignal2D {
    pub grid: Grid2D,
    pub data: Vec<Quaternion>,
}

impl QSignal2D {
    pub fn new(grid: Grid2D, data: Vec<Quaternion>) -> Result<Self> {
        if data.len() != grid.len() {
            return Err(Error::Grid(format!(
                "data length {} does not match grid {}x{}",
                data.len(),
                grid.m,
                grid.n
            )));
        }
        Ok(Self { grid, data })
    }

    pub fn zeros(grid: Grid2D) -> Self {
        Self { grid, data: vec![Quaternion::zero(); grid.len()] }
    }

    #[inline]
    pub fn at(&self, i1: usize, i2: usize) -> Quaternion {
        self.data[self.grid.idx(i1, i2)]
    }

    #[inline]
    pub fn set(&mut self, i1: usize, i2: usize, q: Quaternion) {
        let idx = self.grid.idx(i1, i2);
        self.data[idx] = q;
    }

    /// Builds a signal by evaluating `f(x1, x2)` at every grid point.
    pub fn from_fn(grid: Grid2D, mut f: impl FnMut(f64, f64) -> Quaternion) -> Self {
        let mut data = Vec::with_capacity(grid.len());
        for i1 in 0..grid.m {
            let x1 = grid.coord1(i1);
            for i2 in 0..grid.n {
                data.push(f(x1, grid.coord2(i2)));
            }
        }
        Self { grid, data }
    }

    /// Unit impulse at index (0, 0).
    pub fn delta(grid: Grid2D) -> Self {
        let mut s = Self::zeros(grid);
        s.data[0] = Quaternion::one();
        s
    }

    pub fn constant(grid: Grid2D, q: Quaternion) -> Self {
        Self { grid, data: vec![q; grid.len()] }
    }

    /// Isotropic Gaussian `amp · e^{-((x1-c1)² + (x2-c2)²)/(2σ²)}`.
    pub fn gaussian(grid: Grid2D, sigma: f64, center: (f64, f64), amp: Quaternion) -> Result<Self> {
        if !(sigma > 0.0 && sigma.is_finite()) {
            return Err(Error::Domain("gaussian sigma must be positive".into()));
        }
        let inv = 1.0 / (2.0 * sigma * sigma);
        Ok(Self::from_fn(grid, |x1, x2| {
            let r2 = (x1 - center.0).powi(2) + (x2 - center.1).powi(2);
            amp * (-r2 * inv).exp()
        }))
    }

    /// Unit-modulus quadratic-phase test signal
    /// `e^{i·γ·x1²} · e^{j·γ·x2²}`.
    pub fn quadratic_chirp(grid: Grid2D, gamma: f64) -> Self {
        Self::from_fn(grid, |x1, x2| {
            Quaternion::rotor(Quaternion::i(), gamma * x1 * x1)
                * Quaternion::rotor(Quaternion::j(), gamma * x2 * x2)
        })
    }

    /// Reproducible noise, all four components uniform on [-1, 1].
    pub fn random(grid: Grid2D, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let data = (0..grid.len())
            .map(|_| {
                Quaternion::new(
                    rng.gen_range(-1.0..=1.0),
                    rng.gen_range(-1.0..=1.0),
                    rng.gen_range(-1.0..=1.0),
                    rng.gen_range(-1.0..=1.0),
                )
            })
            .collect();
        Self { grid, data }
    }

    pub fn norm_l2(&self) -> f64 {
        lp_norm(self, LpNorm::L2)
    }

    /// Pointwise map, keeping the grid.
    pub fn map(&self, f: impl Fn(Quaternion) -> Quaternion) -> Self {
        Self {
            grid: self.grid,
            data: self.data.iter().map(|&q| f(q)).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct QSignal1D {
    pub grid: Grid1D,
    pub data: Vec<Quaternion>,
}

impl QSignal1D {
    pub fn new(grid: Grid1D, data: Vec<Quaternion>) -> Result<Self> {
        if data.len() != grid.len {
            return Err(Error::Grid("1D data length does not match grid".into()));
        }
        Ok(Self { grid, data })
    }

    pub fn norm_l2(&self) -> f64 {
        (self.data.iter().map(|q| q.norm_sq()).sum::<f64>() * self.grid.dt).sqrt()
    }
}

// ── Norms and inner products ───────────────────────────────────────────────

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LpNorm {
    L1,
    L2,
    LInf,
}

/// Quaternion inner product `Σ f·conj(g)·dx1·dx2` (conjugate on the right).
pub fn inner_product(f: &QSignal2D, g: &QSignal2D) -> Result<Quaternion> {
    if !f.grid.approx_eq(&g.grid) {
        return Err(Error::Grid("inner product needs matching grids".into()));
    }
    let mut acc = Quaternion::zero();
    for (a, b) in f.data.iter().zip(&g.data) {
        acc += *a * b.conj();
    }
    Ok(acc * f.grid.cell())
}

/// Discrete Lp norm; L1 and L2 carry the cell measure, L∞ does not.
pub fn lp_norm(f: &QSignal2D, p: LpNorm) -> f64 {
    match p {
        LpNorm::L1 => f.data.iter().map(|q| q.norm()).sum::<f64>() * f.grid.cell(),
        LpNorm::L2 => (f.data.iter().map(|q| q.norm_sq()).sum::<f64>() * f.grid.cell()).sqrt(),
        LpNorm::LInf => f.data.iter().map(|q| q.norm()).fold(0.0, f64::max),
    }
}

// ── Componentwise reflections ──────────────────────────────────────────────

#[inline]
fn refl(i: usize, len: usize) -> usize {
    (len - i) % len
}

/// Componentwise reflections in the canonical frame:
/// `w` kept, `x` from `(x1, -x2)`, `y` from `(-x1, x2)`, `z` from
/// `(-x1, -x2)`. Reflection is index-wise; an involution and an isometry on
/// any grid, and it matches coordinate negation on wrap-symmetric grids.
pub fn alpha(f: &QSignal2D) -> QSignal2D {
    let g = f.grid;
    let mut out = QSignal2D::zeros(g);
    for i1 in 0..g.m {
        let r1 = refl(i1, g.m);
        for i2 in 0..g.n {
            let r2 = refl(i2, g.n);
            let q = Quaternion::new(
                f.at(i1, i2).w,
                f.at(i1, r2).x,
                f.at(r1, i2).y,
                f.at(r1, r2).z,
            );
            out.set(i1, i2, q);
        }
    }
    out
}

/// Like [`alpha`] but only the `y` and `z` components reflect, and only in
/// the first argument.
pub fn beta(f: &QSignal2D) -> QSignal2D {
    let g = f.grid;
    let mut out = QSignal2D::zeros(g);
    for i1 in 0..g.m {
        let r1 = refl(i1, g.m);
        for i2 in 0..g.n {
            let q = Quaternion::new(
                f.at(i1, i2).w,
                f.at(i1, i2).x,
                f.at(r1, i2).y,
                f.at(r1, i2).z,
            );
            out.set(i1, i2, q);
        }
    }
    out
}

/// `conj(f(-x1, -x2))`, index-wise reflection in both arguments.
pub fn reflect_conj(f: &QSignal2D) -> QSignal2D {
    let g = f.grid;
    let mut out = QSignal2D::zeros(g);
    for i1 in 0..g.m {
        let r1 = refl(i1, g.m);
        for i2 in 0..g.n {
            out.set(i1, i2, f.at(r1, refl(i2, g.n)).conj());
        }
    }
    out
}

// ── Convolution and kernels ────────────────────────────────────────────────

/// Circular convolution `Σ_y f(y)·g(x−y)·dx1·dx2`. Quaternion products keep
/// the written order.
pub fn convolve(f: &QSignal2D, g: &QSignal2D) -> Result<QSignal2D> {
    if !f.grid.approx_eq(&g.grid) {
        return Err(Error::Grid("convolution needs matching grids".into()));
    }
    let gr = f.grid;
    let (m, n) = (gr.m, gr.n);
    let mut out = QSignal2D::zeros(gr);
    for o1 in 0..m {
        for o2 in 0..n {
            let mut acc = Quaternion::zero();
            for y1 in 0..m {
                let d1 = (o1 + m - y1) % m;
                for y2 in 0..n {
                    let d2 = (o2 + n - y2) % n;
                    acc += f.at(y1, y2) * g.at(d1, d2);
                }
            }
            out.set(o1, o2, acc * gr.cell());
        }
    }
    Ok(out)
}

/// Product Poisson kernel
/// `p_ε(x1,x2) = ε² / (π² (ε²+x1²)(ε²+x2²))`, sampled at grid coordinates.
pub fn poisson_kernel(grid: Grid2D, eps: f64) -> Result<QSignal2D> {
    if !(eps > 0.0 && eps.is_finite()) {
        return Err(Error::Domain("poisson kernel needs eps > 0".into()));
    }
    let e2 = eps * eps;
    Ok(QSignal2D::from_fn(grid, |x1, x2| {
        Quaternion::from_scalar(e2 / (PI * PI * (e2 + x1 * x1) * (e2 + x2 * x2)))
    }))
}

/// Abel weights `e^{-ε|ω1| - ε|ω2|}` sampled at the wrapped signed
/// frequencies of `grid`.
pub fn abel_weights(grid: Grid2D, eps: f64) -> Result<QSignal2D> {
    if !(eps > 0.0 && eps.is_finite()) {
        return Err(Error::Domain("abel weights need eps > 0".into()));
    }
    let mut out = QSignal2D::zeros(grid);
    for k1 in 0..grid.m {
        let w1 = grid.signed_coord1(k1);
        for k2 in 0..grid.n {
            let w2 = grid.signed_coord2(k2);
            out.set(
                k1,
                k2,
                Quaternion::from_scalar((-eps * (w1.abs() + w2.abs())).exp()),
            );
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: Quaternion, b: Quaternion, tol: f64) -> bool {
        (a - b).norm() <= tol
    }

    #[test]
    fn grid_rejects_bad_geometry() {
        assert!(Grid2D::new(0, 4, 1.0, 1.0, 0.0, 0.0).is_err());
        assert!(Grid2D::new(4, 4, -1.0, 1.0, 0.0, 0.0).is_err());
        assert!(Grid2D::new(4, 4, 1.0, f64::NAN, 0.0, 0.0).is_err());
    }

    #[test]
    fn wrap_symmetry() {
        assert!(Grid2D::unit(8, 8).is_wrap_symmetric());
        assert!(Grid2D::centered(8, 6, 0.5, 0.25).unwrap().is_wrap_symmetric());
        assert!(!Grid2D::centered(5, 5, 1.0, 1.0).unwrap().is_wrap_symmetric());
        assert!(!Grid2D::new(4, 4, 1.0, 1.0, 0.3, 0.0).unwrap().is_wrap_symmetric());
    }

    #[test]
    fn signed_frequency_ordering() {
        let g = Grid2D::unit(8, 4).frequency_grid();
        let dw = 2.0 * PI / 8.0;
        assert!((g.signed_coord1(0) - 0.0).abs() < 1e-15);
        assert!((g.signed_coord1(4) - 4.0 * dw).abs() < 1e-12); // Nyquist positive
        assert!((g.signed_coord1(5) + 3.0 * dw).abs() < 1e-12);
        assert!((g.signed_coord1(7) + dw).abs() < 1e-12);
    }

    #[test]
    fn inner_product_examples() {
        let g = Grid2D::unit(4, 4);
        let f = QSignal2D::delta(g);
        assert!(close(inner_product(&f, &f).unwrap(), Quaternion::one(), 1e-15));

        let mut a = QSignal2D::zeros(g);
        a.set(1, 2, Quaternion::one());
        assert!(close(inner_product(&f, &a).unwrap(), Quaternion::zero(), 1e-15));

        let fi = f.map(|q| Quaternion::i() * q);
        let fj = f.map(|q| Quaternion::j() * q);
        assert!(close(inner_product(&fi, &fj).unwrap(), -Quaternion::k(), 1e-15));
    }

    #[test]
    fn inner_product_grid_mismatch() {
        let f = QSignal2D::delta(Grid2D::unit(4, 4));
        let g = QSignal2D::delta(Grid2D::unit(4, 5));
        assert!(matches!(inner_product(&f, &g), Err(Error::Grid(_))));
    }

    #[test]
    fn norms() {
        let g = Grid2D::unit(3, 5);
        let one = QSignal2D::constant(g, Quaternion::one());
        assert!((lp_norm(&one, LpNorm::L2) - 15.0_f64.sqrt()).abs() < 1e-12);
        assert!((lp_norm(&one, LpNorm::L1) - 15.0).abs() < 1e-12);
        assert!((lp_norm(&one, LpNorm::LInf) - 1.0).abs() < 1e-15);

        let f = QSignal2D::random(Grid2D::unit(8, 8), 7);
        let ip = inner_product(&f, &f).unwrap();
        assert!((lp_norm(&f, LpNorm::L2).powi(2) - ip.sc()).abs() < 1e-10);
        assert!(ip.vec().norm() < 1e-12);
    }

    #[test]
    fn alpha_reflects_components() {
        let g = Grid2D::unit(6, 4);
        let mut f = QSignal2D::zeros(g);
        f.set(2, 3, Quaternion::k());
        let a = alpha(&f);
        assert!(close(a.at(4, 1), Quaternion::k(), 1e-15));
        assert!(close(a.at(2, 3), Quaternion::zero(), 1e-15));

        let real = QSignal2D::random(g, 3).map(|q| Quaternion::from_scalar(q.w));
        assert_eq!(alpha(&real), real);
    }

    #[test]
    fn beta_reflects_only_second_pair_in_x1() {
        let g = Grid2D::unit(6, 4);
        let mut f = QSignal2D::zeros(g);
        f.set(2, 3, Quaternion::j());
        let b = beta(&f);
        assert!(close(b.at(4, 3), Quaternion::j(), 1e-15));

        // C_i-valued signals are fixed points.
        let ci = QSignal2D::random(g, 5).map(|q| Quaternion::new(q.w, q.x, 0.0, 0.0));
        assert_eq!(beta(&ci), ci);
    }

    #[test]
    fn alpha_beta_are_involutive_isometries() {
        let f = QSignal2D::random(Grid2D::unit(6, 4), 11);
        assert_eq!(alpha(&alpha(&f)), f);
        assert_eq!(beta(&beta(&f)), f);
        assert!((lp_norm(&alpha(&f), LpNorm::L2) - f.norm_l2()).abs() < 1e-12);
        assert!((lp_norm(&beta(&f), LpNorm::L2) - f.norm_l2()).abs() < 1e-12);
    }

    #[test]
    fn reflect_conj_examples() {
        let g = Grid2D::unit(6, 4);
        let mut f = QSignal2D::zeros(g);
        f.set(1, 1, Quaternion::new(0.0, 2.0, 0.0, 0.0));
        let r = reflect_conj(&f);
        assert!(close(r.at(5, 3), Quaternion::new(0.0, -2.0, 0.0, 0.0), 1e-15));
        assert_eq!(reflect_conj(&r), f);
    }

    #[test]
    fn convolve_with_delta_is_identity() {
        let g = Grid2D::new(5, 4, 0.5, 0.25, 0.0, 0.0).unwrap();
        let f = QSignal2D::random(g, 9);
        let mut d = QSignal2D::zeros(g);
        d.data[0] = Quaternion::from_scalar(1.0 / g.cell());
        let fd = convolve(&f, &d).unwrap();
        for (a, b) in fd.data.iter().zip(&f.data) {
            assert!(close(*a, *b, 1e-12));
        }
    }

    #[test]
    fn convolve_constants() {
        let g = Grid2D::unit(3, 4);
        let one = QSignal2D::constant(g, Quaternion::one());
        let c = convolve(&one, &one).unwrap();
        for q in &c.data {
            assert!(close(*q, Quaternion::from_scalar(12.0), 1e-12));
        }
    }

    #[test]
    fn convolve_matches_shift_accumulate_oracle() {
        let g = Grid2D::new(5, 3, 0.7, 1.3, -1.0, 0.0).unwrap();
        let f = QSignal2D::random(g, 21);
        let h = QSignal2D::random(g, 22);
        // Independent oracle: accumulate f(y)·(g shifted by y).
        let mut want = QSignal2D::zeros(g);
        for y1 in 0..g.m {
            for y2 in 0..g.n {
                let fy = f.at(y1, y2);
                for x1 in 0..g.m {
                    for x2 in 0..g.n {
                        let q = want.at(x1, x2)
                            + fy * h.at((x1 + g.m - y1) % g.m, (x2 + g.n - y2) % g.n) * g.cell();
                        want.set(x1, x2, q);
                    }
                }
            }
        }
        let got = convolve(&f, &h).unwrap();
        for (a, b) in got.data.iter().zip(&want.data) {
            assert!(close(*a, *b, 1e-11));
        }
    }

    #[test]
    fn poisson_kernel_peak_and_mass() {
        let eps = 1.0;
        let g = Grid2D::centered(1280, 1280, 0.5, 0.5).unwrap();
        let p = poisson_kernel(g, eps).unwrap();
        // Peak at the origin sample.
        let peak = p.at(640, 640);
        assert!((peak.sc() - 1.0 / (PI * PI * eps * eps)).abs() < 1e-12);
        // Riemann mass close to 1; the kernel has fat tails so 1e-2 is the
        // honest bound at this extent.
        let mass: f64 = p.data.iter().map(|q| q.w).sum::<f64>() * g.cell();
        assert!((mass - 1.0).abs() < 1e-2, "mass = {mass}");
        assert!(poisson_kernel(g, 0.0).is_err());
    }

    #[test]
    fn abel_weights_at_zero_frequency() {
        let g = Grid2D::unit(8, 8).frequency_grid();
        let w = abel_weights(g, 0.7).unwrap();
        assert!(close(w.at(0, 0), Quaternion::one(), 1e-15));
        // Symmetric in ±ω away from Nyquist.
        assert!(close(w.at(3, 2), w.at(5, 6), 1e-15));
        assert!(lp_norm(&w, LpNorm::LInf) <= 1.0 + 1e-15);
    }

    #[test]
    fn random_is_seed_deterministic() {
        let g = Grid2D::unit(6, 6);
        assert_eq!(QSignal2D::random(g, 42).data, QSignal2D::random(g, 42).data);
        assert_ne!(QSignal2D::random(g, 42).data, QSignal2D::random(g, 43).data);
    }

    #[test]
    fn gaussian_peaks_at_center() {
        let g = Grid2D::centered(64, 64, 0.25, 0.25).unwrap();
        let f = QSignal2D::gaussian(g, 0.5, (0.0, 0.0), Quaternion::one()).unwrap();
        assert!(close(f.at(32, 32), Quaternion::one(), 1e-15));
        assert!(f.at(0, 0).norm() < 1e-15);
    }
}
