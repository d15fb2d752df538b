//! Quaternion linear canonical transforms on 2D grids.
//!
//! Each axis carries a real 2x2 parameter matrix with unit determinant. An
//! axis with `b != 0` contributes a chirped Fourier kernel in that axis's
//! complex plane; an axis with `b = 0` degenerates to coordinate scaling
//! with a chirp factor and no integral. The two-sided form places the first
//! axis's factor left of the sample and the second right; the right-sided
//! form places both on the right.
//!
//! Discretization: on a `b != 0` axis the output bins hold frequencies
//! `ω(k) = b·s(k)·2π/(len·dx)` with `s` the signed wrap, so the chirp, DFT,
//! and chirp stages compose bin-for-bin with the plain transforms and the
//! inverse closes exactly. On a `b = 0` axis the output grid is chosen so
//! every scaled coordinate `d·ω` lands exactly on an input sample: step
//! `dx/|d|`, origin `x0/d` for `d > 0` and `x(len−1)/d` for `d < 0` (the
//! order reverses). Square roots of negative `d` take the branch `u·√|d|`
//! forward and `−u·√|d|` in the inverse machinery, and each axis's scale
//! factor rides with that axis's chirp so round trips close for every sign
//! combination; for `d > 0` this reduces to the plain scalar prefactor.
//!
//! `sqlct` and `rqlct_direct` evaluate the defining sums literally and are
//! the oracles; `rqlct`, `irqlct`, `isqlct` run the per-axis stage cascade
//! mirroring the inversion proofs; `sqlct_fast` is the chirp–DQFT–chirp
//! route. All agree to roundoff.

use crate::error::{Error, Result};
use crate::fft::{bin_phase, dft_inplace, split_stage, Side, UnitSel};
use crate::qft::{self, NormalizationMode, TransformKind, TransformPlan};
use crate::quat::{AxisConfig, Quaternion};
use crate::signal::{Grid1D, Grid2D, QSignal1D, QSignal2D};
use num_complex::Complex64;
use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI, TAU};

const DET_TOL: f64 = 1e-12;

// ── Parameters ─────────────────────────────────────────────────────────────

/// One axis's parameter matrix (a, b; c, d), determinant 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LCTParams {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

impl LCTParams {
    pub fn new(a: f64, b: f64, c: f64, d: f64) -> Result<Self> {
        let p = Self { a, b, c, d };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        let vals = [self.a, self.b, self.c, self.d];
        if vals.iter().any(|v| !v.is_finite()) {
            return Err(Error::Param("transform parameters must be finite".into()));
        }
        if (self.det() - 1.0).abs() > DET_TOL {
            return Err(Error::Param(format!(
                "parameter matrix must have determinant 1, got {}",
                self.det()
            )));
        }
        Ok(())
    }

    pub fn det(&self) -> f64 {
        self.a * self.d - self.b * self.c
    }

    pub fn identity() -> Self {
        Self { a: 1.0, b: 0.0, c: 0.0, d: 1.0 }
    }

    /// (d, −b; −c, a): the matrix of the inverse transform.
    pub fn inverse(&self) -> Self {
        Self { a: self.d, b: -self.b, c: -self.c, d: self.a }
    }
}

/// Parameter matrices for both axes plus the frame and normalization.
#[derive(Debug, Clone, Copy)]
pub struct QLCTConfig {
    pub a1: LCTParams,
    pub a2: LCTParams,
    pub axis: AxisConfig,
    pub mode: NormalizationMode,
}

impl QLCTConfig {
    pub fn new(a1: LCTParams, a2: LCTParams, axis: AxisConfig, mode: NormalizationMode) -> Result<Self> {
        a1.validate()?;
        a2.validate()?;
        Ok(Self { a1, a2, axis, mode })
    }

    pub fn validate(&self) -> Result<()> {
        self.a1.validate()?;
        self.a2.validate()
    }

    /// Grid the transform of a signal on `spatial` lives on. A `b != 0` axis
    /// gets bins at `|b|·2π/(len·dx)` from origin 0; a `b = 0` axis gets the
    /// exactly representable scaled coordinates.
    pub fn output_grid(&self, spatial: &Grid2D) -> Grid2D {
        let (s1, o1) = out_axis(&self.a1, spatial.m, spatial.dx1, spatial.x1_0);
        let (s2, o2) = out_axis(&self.a2, spatial.n, spatial.dx2, spatial.x2_0);
        Grid2D { m: spatial.m, n: spatial.n, dx1: s1, dx2: s2, x1_0: o1, x2_0: o2 }
    }
}

fn out_axis(p: &LCTParams, len: usize, dx: f64, x0: f64) -> (f64, f64) {
    if p.b != 0.0 {
        (p.b.abs() * TAU / (len as f64 * dx), 0.0)
    } else {
        let step = dx / p.d.abs();
        let origin = if p.d > 0.0 { x0 / p.d } else { (x0 + (len - 1) as f64 * dx) / p.d };
        (step, origin)
    }
}

/// Frequency held by bin `k` of a `b != 0` output axis: `b·s(k)·2π/(len·dx)`,
/// expressed through the output grid as `sign(b)` times its signed coordinate.
fn bin_freq(p: &LCTParams, out_step: f64, k: usize, len: usize) -> f64 {
    p.b.signum() * Grid2D::wrap(k, len) as f64 * out_step
}

// ── Kernel ─────────────────────────────────────────────────────────────────

fn kernel_raw(p: &LCTParams, u: Quaternion, x: f64, w: f64) -> Quaternion {
    let half = 0.5 / p.b;
    let angle = half * (p.a * x * x + p.d * w * w) - x * w / p.b;
    let branch = -p.b.signum() * FRAC_PI_4;
    Quaternion::rotor(u, angle + branch) * (1.0 / (TAU * p.b.abs()).sqrt())
}

/// Chirped kernel value in the plane of `u`; modulus `1/√(2π|b|)`.
pub fn kernel_eval(p: &LCTParams, u: Quaternion, x: f64, w: f64) -> Result<Quaternion> {
    p.validate()?;
    if p.b == 0.0 {
        return Err(Error::Domain(
            "kernel is undefined for b = 0; that axis degenerates to chirp-scaling".into(),
        ));
    }
    if u.sc().abs() > 1e-9 || (u.norm() - 1.0).abs() > 1e-9 {
        return Err(Error::Param("kernel unit must be a unit pure quaternion".into()));
    }
    Ok(kernel_raw(p, u, x, w))
}

// ── Degenerate-axis factor ─────────────────────────────────────────────────

// Scale-and-chirp factor of a b = 0 axis at output coordinate w. `branch`
// is +1 forward, -1 for inverse machinery; it selects the √d branch for
// d < 0 so that the two factors multiply back to +1.
fn degenerate_factor(p: &LCTParams, u: Quaternion, w: f64, branch: f64, mode: NormalizationMode) -> Quaternion {
    let amp = match mode {
        NormalizationMode::Analytic => p.d.abs().sqrt(),
        NormalizationMode::Unitary => 1.0,
    };
    let mut angle = 0.5 * p.c * p.d * w * w;
    if p.d < 0.0 {
        angle += branch * FRAC_PI_2;
    }
    Quaternion::rotor(u, angle) * amp
}

// Source index of output bin k on a b = 0 axis: the derived grid makes the
// mapping an exact permutation (identity for d > 0, reversal for d < 0).
#[inline]
fn degenerate_src(p: &LCTParams, k: usize, len: usize) -> usize {
    if p.d > 0.0 {
        k
    } else {
        len - 1 - k
    }
}

// ── Stage cascade ──────────────────────────────────────────────────────────

struct LctStage {
    axis_dim: usize,
    unit: UnitSel,
    side: Side,
    p: LCTParams,
}

fn lct_stages(cfg: &QLCTConfig, kind: TransformKind, inverse: bool) -> [LctStage; 2] {
    let s = |axis_dim, unit, side, p| LctStage { axis_dim, unit, side, p };
    match kind {
        // first-axis factor left of the sample, second right; sides commute
        TransformKind::TwoSided => [
            s(0, UnitSel::U1, Side::LeftMul, cfg.a1),
            s(1, UnitSel::U2, Side::RightMul, cfg.a2),
        ],
        // both right: forward applies the first-axis factor first, the
        // inverse peels them off innermost-first
        TransformKind::RightSided if !inverse => [
            s(0, UnitSel::U1, Side::RightMul, cfg.a1),
            s(1, UnitSel::U2, Side::RightMul, cfg.a2),
        ],
        TransformKind::RightSided => [
            s(1, UnitSel::U2, Side::RightMul, cfg.a2),
            s(0, UnitSel::U1, Side::RightMul, cfg.a1),
        ],
        TransformKind::LeftSided => unreachable!("no left-sided linear canonical transform"),
    }
}

fn lct_cascade(
    input: &QSignal2D,
    cfg: &QLCTConfig,
    kind: TransformKind,
    inverse: bool,
    spatial: Grid2D,
) -> Result<QSignal2D> {
    cfg.validate()?;
    let (m, n) = (spatial.m, spatial.n);
    let spectral = cfg.output_grid(&spatial);
    let expected_in = if inverse { &spectral } else { &spatial };
    if !input.grid.approx_eq(expected_in) {
        return Err(if inverse && (cfg.a1.b == 0.0 || cfg.a2.b == 0.0) {
            Error::Resample("spectrum grid does not match the derived scaled grid".into())
        } else {
            Error::Grid("signal grid does not match the transform grids".into())
        });
    }
    let mut c = qft::to_planes(input, &cfg.axis);
    for st in lct_stages(cfg, kind, inverse) {
        let (len, dx, x0) = if st.axis_dim == 0 {
            (m, spatial.dx1, spatial.x1_0)
        } else {
            (n, spatial.dx2, spatial.x2_0)
        };
        let p = st.p;
        if p.b != 0.0 {
            let dw_base = TAU / (len as f64 * dx);
            let dwp = p.b.abs() * dw_base;
            let half_a = 0.5 * p.a / p.b;
            let half_d = 0.5 * p.d / p.b;
            let quarter = p.b.signum() * FRAC_PI_4;
            let amp = {
                let norm = (TAU * p.b.abs()).sqrt();
                match (cfg.mode, inverse) {
                    (NormalizationMode::Unitary, _) => (dx * dwp).sqrt() / norm,
                    (NormalizationMode::Analytic, false) => dx / norm,
                    (NormalizationMode::Analytic, true) => dwp / norm,
                }
            };
            if !inverse {
                split_stage(&mut c, m, n, st.axis_dim, st.unit, st.side, |line, sigma| {
                    for (i, v) in line.iter_mut().enumerate() {
                        let x = x0 + i as f64 * dx;
                        *v *= Complex64::from_polar(1.0, sigma * half_a * x * x);
                    }
                    dft_inplace(line, -sigma);
                    bin_phase(line, -sigma, dw_base, x0);
                    for (k, v) in line.iter_mut().enumerate() {
                        let w = p.b * Grid2D::wrap(k, len) as f64 * dw_base;
                        *v *= Complex64::from_polar(amp, sigma * (half_d * w * w - quarter));
                    }
                });
            } else {
                split_stage(&mut c, m, n, st.axis_dim, st.unit, st.side, |line, sigma| {
                    for (k, v) in line.iter_mut().enumerate() {
                        let w = p.b * Grid2D::wrap(k, len) as f64 * dw_base;
                        *v *= Complex64::from_polar(1.0, -sigma * half_d * w * w);
                    }
                    bin_phase(line, sigma, dw_base, x0);
                    dft_inplace(line, sigma);
                    for (i, v) in line.iter_mut().enumerate() {
                        let x = x0 + i as f64 * dx;
                        *v *= Complex64::from_polar(amp, sigma * (quarter - half_a * x * x));
                    }
                });
            }
        } else {
            // degenerate axis: permutation plus pointwise factor
            let (q, branch, in_step, in_origin) = if inverse {
                let (s_in, o_in) = out_axis(&p, len, dx, x0);
                (p.inverse(), -1.0, s_in, o_in)
            } else {
                (p, 1.0, dx, x0)
            };
            let (out_step, out_origin) = out_axis(&q, len, in_step, in_origin);
            let amp = match cfg.mode {
                NormalizationMode::Analytic => q.d.abs().sqrt(),
                NormalizationMode::Unitary => 1.0,
            };
            let extra = if q.d < 0.0 { branch * FRAC_PI_2 } else { 0.0 };
            let half_cd = 0.5 * q.c * q.d;
            split_stage(&mut c, m, n, st.axis_dim, st.unit, st.side, |line, sigma| {
                if q.d < 0.0 {
                    line.reverse();
                }
                for (k, v) in line.iter_mut().enumerate() {
                    let w = out_origin + k as f64 * out_step;
                    *v *= Complex64::from_polar(amp, sigma * (half_cd * w * w + extra));
                }
            });
        }
    }
    let out_grid = if inverse { spatial } else { spectral };
    Ok(qft::from_planes(&c, &cfg.axis, out_grid))
}

// ── Two-sided transform ────────────────────────────────────────────────────

/// Two-sided transform by literal summation of the defining cases: the
/// first-axis factor (kernel, or scale-and-chirp when `b1 = 0`) multiplies
/// from the left, the second-axis factor from the right. Quadratic in the
/// sample count; this is the oracle the fast paths are checked against.
pub fn sqlct(f: &QSignal2D, cfg: &QLCTConfig) -> Result<QSignal2D> {
    cfg.validate()?;
    let g = f.grid;
    let og = cfg.output_grid(&g);
    let (u1, u2) = (cfg.axis.u1(), cfg.axis.u2());
    let (w1, w2) = axis_weights(cfg, &g, &og);
    let mut out = QSignal2D::zeros(og);
    for k1 in 0..g.m {
        for k2 in 0..g.n {
            let v = match (cfg.a1.b != 0.0, cfg.a2.b != 0.0) {
                (true, true) => {
                    let f1 = bin_freq(&cfg.a1, og.dx1, k1, g.m);
                    let f2 = bin_freq(&cfg.a2, og.dx2, k2, g.n);
                    let mut acc = Quaternion::zero();
                    for m1 in 0..g.m {
                        let k1v = kernel_raw(&cfg.a1, u1, g.coord1(m1), f1);
                        for m2 in 0..g.n {
                            let k2v = kernel_raw(&cfg.a2, u2, g.coord2(m2), f2);
                            acc += k1v * f.at(m1, m2) * k2v;
                        }
                    }
                    acc * (w1 * w2)
                }
                (false, true) => {
                    let s1 = degenerate_factor(&cfg.a1, u1, og.coord1(k1), 1.0, cfg.mode);
                    let r1 = degenerate_src(&cfg.a1, k1, g.m);
                    let f2 = bin_freq(&cfg.a2, og.dx2, k2, g.n);
                    let mut acc = Quaternion::zero();
                    for m2 in 0..g.n {
                        acc += f.at(r1, m2) * kernel_raw(&cfg.a2, u2, g.coord2(m2), f2);
                    }
                    s1 * acc * w2
                }
                (true, false) => {
                    let f1 = bin_freq(&cfg.a1, og.dx1, k1, g.m);
                    let s2 = degenerate_factor(&cfg.a2, u2, og.coord2(k2), 1.0, cfg.mode);
                    let r2 = degenerate_src(&cfg.a2, k2, g.n);
                    let mut acc = Quaternion::zero();
                    for m1 in 0..g.m {
                        acc += kernel_raw(&cfg.a1, u1, g.coord1(m1), f1) * f.at(m1, r2);
                    }
                    acc * w1 * s2
                }
                (false, false) => {
                    let s1 = degenerate_factor(&cfg.a1, u1, og.coord1(k1), 1.0, cfg.mode);
                    let s2 = degenerate_factor(&cfg.a2, u2, og.coord2(k2), 1.0, cfg.mode);
                    let r1 = degenerate_src(&cfg.a1, k1, g.m);
                    let r2 = degenerate_src(&cfg.a2, k2, g.n);
                    s1 * f.at(r1, r2) * s2
                }
            };
            out.set(k1, k2, v);
        }
    }
    Ok(out)
}

// Summation weight of a b != 0 axis (1 for a degenerate axis, whose factor
// already carries its normalization).
fn axis_weights(cfg: &QLCTConfig, g: &Grid2D, og: &Grid2D) -> (f64, f64) {
    let pick = |p: &LCTParams, dx: f64, dw: f64| {
        if p.b == 0.0 {
            1.0
        } else {
            match cfg.mode {
                NormalizationMode::Analytic => dx,
                NormalizationMode::Unitary => (dx * dw).sqrt(),
            }
        }
    };
    (pick(&cfg.a1, g.dx1, og.dx1), pick(&cfg.a2, g.dx2, og.dx2))
}

/// Chirp–DQFT–chirp evaluation of the two-sided transform, for `b1·b2 ≠ 0`:
/// pre-chirp the signal on both sides, run the Analytic two-sided DQFT, and
/// post-chirp each bin. The output bins hold `ω/b` at exactly the DQFT bin
/// frequencies, so the identity is exact bin-for-bin.
pub fn sqlct_fast(f: &QSignal2D, cfg: &QLCTConfig) -> Result<QSignal2D> {
    cfg.validate()?;
    if cfg.a1.b == 0.0 || cfg.a2.b == 0.0 {
        return Err(Error::Domain("fast path needs b != 0 on both axes; use sqlct".into()));
    }
    let g = f.grid;
    let og = cfg.output_grid(&g);
    let (u1, u2) = (cfg.axis.u1(), cfg.axis.u2());
    let ha1 = 0.5 * cfg.a1.a / cfg.a1.b;
    let ha2 = 0.5 * cfg.a2.a / cfg.a2.b;
    let h = QSignal2D {
        grid: g,
        data: (0..g.m)
            .flat_map(|m1| (0..g.n).map(move |m2| (m1, m2)))
            .map(|(m1, m2)| {
                let x1 = g.coord1(m1);
                let x2 = g.coord2(m2);
                Quaternion::rotor(u1, ha1 * x1 * x1) * f.at(m1, m2) * Quaternion::rotor(u2, ha2 * x2 * x2)
            })
            .collect(),
    };
    let plan = TransformPlan::new(TransformKind::TwoSided, cfg.axis, NormalizationMode::Analytic, g);
    let spec = qft::dqft(&h, &plan)?;
    let hd1 = 0.5 * cfg.a1.d / cfg.a1.b;
    let hd2 = 0.5 * cfg.a2.d / cfg.a2.b;
    let c1 = 1.0 / cfg.a1.b.abs().sqrt();
    let c2 = 1.0 / cfg.a2.b.abs().sqrt();
    let mode_fix = match cfg.mode {
        NormalizationMode::Analytic => 1.0,
        NormalizationMode::Unitary => (og.dx1 / g.dx1).sqrt() * (og.dx2 / g.dx2).sqrt(),
    };
    let mut out = QSignal2D::zeros(og);
    for k1 in 0..g.m {
        let f1 = bin_freq(&cfg.a1, og.dx1, k1, g.m);
        let l = Quaternion::rotor(u1, hd1 * f1 * f1 - cfg.a1.b.signum() * FRAC_PI_4) * (c1 * mode_fix);
        for k2 in 0..g.n {
            let f2 = bin_freq(&cfg.a2, og.dx2, k2, g.n);
            let r = Quaternion::rotor(u2, hd2 * f2 * f2 - cfg.a2.b.signum() * FRAC_PI_4) * c2;
            out.set(k1, k2, l * spec.at(k1, k2) * r);
        }
    }
    Ok(out)
}

/// Inverse of the two-sided transform: per-axis inverse stages (conjugate
/// branch constants, inverse parameter matrices on degenerate axes) that
/// reconstruct onto `spatial`, which must regenerate `spectrum`'s grid.
pub fn isqlct(spectrum: &QSignal2D, cfg: &QLCTConfig, spatial: &Grid2D) -> Result<QSignal2D> {
    lct_cascade(spectrum, cfg, TransformKind::TwoSided, true, *spatial)
}

// ── Right-sided transform ──────────────────────────────────────────────────

/// Right-sided transform as a two-stage cascade: the first-axis stage maps
/// every row through the chirp–DFT–chirp (or scale-and-chirp) step, then the
/// second-axis stage does the same per column, both factors multiplying from
/// the right in order.
pub fn rqlct(f: &QSignal2D, cfg: &QLCTConfig) -> Result<QSignal2D> {
    lct_cascade(f, cfg, TransformKind::RightSided, false, f.grid)
}

/// Literal summation oracle for [`rqlct`]: both factors right of the sample,
/// first-axis factor innermost.
pub fn rqlct_direct(f: &QSignal2D, cfg: &QLCTConfig) -> Result<QSignal2D> {
    cfg.validate()?;
    let g = f.grid;
    let og = cfg.output_grid(&g);
    let (u1, u2) = (cfg.axis.u1(), cfg.axis.u2());
    let (w1, w2) = axis_weights(cfg, &g, &og);
    let mut out = QSignal2D::zeros(og);
    for k1 in 0..g.m {
        for k2 in 0..g.n {
            let v = match (cfg.a1.b != 0.0, cfg.a2.b != 0.0) {
                (true, true) => {
                    let f1 = bin_freq(&cfg.a1, og.dx1, k1, g.m);
                    let f2 = bin_freq(&cfg.a2, og.dx2, k2, g.n);
                    let mut acc = Quaternion::zero();
                    for m1 in 0..g.m {
                        let k1v = kernel_raw(&cfg.a1, u1, g.coord1(m1), f1);
                        for m2 in 0..g.n {
                            let k2v = kernel_raw(&cfg.a2, u2, g.coord2(m2), f2);
                            acc += f.at(m1, m2) * k1v * k2v;
                        }
                    }
                    acc * (w1 * w2)
                }
                (false, true) => {
                    let s1 = degenerate_factor(&cfg.a1, u1, og.coord1(k1), 1.0, cfg.mode);
                    let r1 = degenerate_src(&cfg.a1, k1, g.m);
                    let f2 = bin_freq(&cfg.a2, og.dx2, k2, g.n);
                    let mut acc = Quaternion::zero();
                    for m2 in 0..g.n {
                        acc += f.at(r1, m2) * s1 * kernel_raw(&cfg.a2, u2, g.coord2(m2), f2);
                    }
                    acc * w2
                }
                (true, false) => {
                    let f1 = bin_freq(&cfg.a1, og.dx1, k1, g.m);
                    let s2 = degenerate_factor(&cfg.a2, u2, og.coord2(k2), 1.0, cfg.mode);
                    let r2 = degenerate_src(&cfg.a2, k2, g.n);
                    let mut acc = Quaternion::zero();
                    for m1 in 0..g.m {
                        acc += f.at(m1, r2) * kernel_raw(&cfg.a1, u1, g.coord1(m1), f1);
                    }
                    acc * w1 * s2
                }
                (false, false) => {
                    let s1 = degenerate_factor(&cfg.a1, u1, og.coord1(k1), 1.0, cfg.mode);
                    let s2 = degenerate_factor(&cfg.a2, u2, og.coord2(k2), 1.0, cfg.mode);
                    let r1 = degenerate_src(&cfg.a1, k1, g.m);
                    let r2 = degenerate_src(&cfg.a2, k2, g.n);
                    f.at(r1, r2) * s1 * s2
                }
            };
            out.set(k1, k2, v);
        }
    }
    Ok(out)
}

/// Inverse of the right-sided transform: peels the second-axis factor off
/// first, then the first-axis factor, reconstructing onto `spatial`.
pub fn irqlct(spectrum: &QSignal2D, cfg: &QLCTConfig, spatial: &Grid2D) -> Result<QSignal2D> {
    lct_cascade(spectrum, cfg, TransformKind::RightSided, true, *spatial)
}

/// Right-sided transform built from the symplectic split: write
/// `f = z1 + u2·z2` with both parts valued in the `u1` complex plane, apply
/// the two-sided transform to each part, and recombine as
/// `sqlct(z1) + u2·sqlct(z2)`. Equals [`rqlct`] because the two-sided and
/// right-sided transforms agree on `C_{u1}`-valued signals and the
/// right-kernel transform is left-linear.
pub fn rqlct_via_split(f: &QSignal2D, cfg: &QLCTConfig) -> Result<QSignal2D> {
    let axis = cfg.axis;
    let z1 = f.map(|q| q.split(&axis).0);
    let z2 = f.map(|q| q.split(&axis).1);
    let t1 = sqlct(&z1, cfg)?;
    let t2 = sqlct(&z2, cfg)?;
    let u2 = axis.u2();
    Ok(QSignal2D {
        grid: t1.grid,
        data: t1.data.iter().zip(&t2.data).map(|(a, b)| *a + u2 * *b).collect(),
    })
}

// ── 1D right-kernel transform ──────────────────────────────────────────────

fn companion_axis(u: Quaternion) -> Result<AxisConfig> {
    if u.sc().abs() > 1e-9 || (u.norm() - 1.0).abs() > 1e-9 {
        return Err(Error::Param("transform unit must be a unit pure quaternion".into()));
    }
    // least-aligned canonical basis vector, projected perpendicular to u
    let basis = [Quaternion::i(), Quaternion::j(), Quaternion::k()];
    let e = basis
        .into_iter()
        .min_by(|p, q| p.dot(&u).abs().partial_cmp(&q.dot(&u).abs()).unwrap())
        .unwrap();
    let perp = e - u * u.dot(&e);
    AxisConfig::new(u, perp)
}

fn oned_planes(f: &[Quaternion], axis: &AxisConfig) -> [Vec<f64>; 4] {
    let mut c: [Vec<f64>; 4] = Default::default();
    for q in f {
        let comps = axis.components(*q);
        for (plane, v) in c.iter_mut().zip(comps) {
            plane.push(v);
        }
    }
    c
}

/// 1D transform with the kernel `e^{−u·t·ξ}` on the right and the symmetric
/// `1/√(2π)` constant in Analytic mode. The spectrum lives on the derived
/// frequency grid.
pub fn oned_transform(f: &QSignal1D, u: Quaternion, mode: NormalizationMode) -> Result<QSignal1D> {
    let axis = companion_axis(u)?;
    let grid = f.grid;
    let dw = grid.frequency_grid().dt;
    let mut c = oned_planes(&f.data, &axis);
    let scale = match mode {
        NormalizationMode::Unitary => 1.0 / (grid.len as f64).sqrt(),
        NormalizationMode::Analytic => grid.dt / (TAU).sqrt(),
    };
    split_stage(&mut c, grid.len, 1, 0, UnitSel::U1, Side::RightMul, |line, sigma| {
        dft_inplace(line, -sigma);
        bin_phase(line, -sigma, dw, grid.t0);
        for v in line.iter_mut() {
            *v *= scale;
        }
    });
    let data = (0..grid.len)
        .map(|i| axis.from_components([c[0][i], c[1][i], c[2][i], c[3][i]]))
        .collect();
    QSignal1D::new(grid.frequency_grid(), data)
}

/// Inverse of [`oned_transform`], reconstructing onto `grid` (which must
/// derive the spectrum's frequency grid).
pub fn oned_transform_inv(
    spectrum: &QSignal1D,
    u: Quaternion,
    mode: NormalizationMode,
    grid: Grid1D,
) -> Result<QSignal1D> {
    let axis = companion_axis(u)?;
    if !spectrum.grid.approx_eq(&grid.frequency_grid()) {
        return Err(Error::Grid("spectrum grid does not match the target's frequency grid".into()));
    }
    let dw = grid.frequency_grid().dt;
    let mut c = oned_planes(&spectrum.data, &axis);
    let scale = match mode {
        NormalizationMode::Unitary => 1.0 / (grid.len as f64).sqrt(),
        NormalizationMode::Analytic => dw / (TAU).sqrt(),
    };
    split_stage(&mut c, grid.len, 1, 0, UnitSel::U1, Side::RightMul, |line, sigma| {
        bin_phase(line, sigma, dw, grid.t0);
        dft_inplace(line, sigma);
        for v in line.iter_mut() {
            *v *= scale;
        }
    });
    let data = (0..grid.len)
        .map(|i| axis.from_components([c[0][i], c[1][i], c[2][i], c[3][i]]))
        .collect();
    QSignal1D::new(grid, data)
}
