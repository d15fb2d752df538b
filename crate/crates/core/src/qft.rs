//! Discrete quaternion Fourier transforms on 2D grids.
//!
//! Three kernel placements are supported: both factors right of the sample,
//! both left, and one on each side. The first kernel factor always carries
//! `u1` and the first axis, the second carries `u2` and the second axis.
//! Forward kernels use `e^{-u·ω·x}`; frequencies are the wrapped signed
//! values of the derived grid and coordinates are the true grid coordinates,
//! so fast path and direct summation agree for any grid origin.
//!
//! `dqft_direct` and `idqft_direct` evaluate the defining sums literally in
//! the exact quaternion order; they are the oracles the fast cascades are
//! tested against.

use crate::error::{Error, Result};
use crate::fft::{bin_phase, dft_inplace, split_stage, Side, UnitSel};
use crate::quat::{AxisConfig, Quaternion};
use crate::signal::{self, lp_norm, Grid2D, LpNorm, QSignal2D};
use std::f64::consts::PI;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TransformKind {
    RightSided,
    LeftSided,
    TwoSided,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NormalizationMode {
    /// 1/√(MN) in both directions; discrete Plancherel and round trips are
    /// exact up to rounding.
    Unitary,
    /// Riemann-sum weights dx1·dx2/(2π) forward and dω1·dω2/(2π) inverse;
    /// matches integral-style constants while staying exactly invertible.
    Analytic,
}

#[derive(Debug, Clone, Copy)]
pub struct TransformPlan {
    pub kind: TransformKind,
    pub axis: AxisConfig,
    pub mode: NormalizationMode,
    pub grid: Grid2D,
}

impl TransformPlan {
    pub fn new(kind: TransformKind, axis: AxisConfig, mode: NormalizationMode, grid: Grid2D) -> Self {
        Self { kind, axis, mode, grid }
    }

    /// Grid the spectrum lives on: same sample counts, steps 2π/(M·dx),
    /// origin 0, bins read through the signed wrap.
    pub fn freq_grid(&self) -> Grid2D {
        self.grid.frequency_grid()
    }

    fn forward_scale(&self) -> f64 {
        match self.mode {
            NormalizationMode::Unitary => 1.0 / ((self.grid.m * self.grid.n) as f64).sqrt(),
            NormalizationMode::Analytic => self.grid.cell() / (2.0 * PI),
        }
    }

    fn inverse_scale(&self) -> f64 {
        match self.mode {
            NormalizationMode::Unitary => 1.0 / ((self.grid.m * self.grid.n) as f64).sqrt(),
            NormalizationMode::Analytic => self.freq_grid().cell() / (2.0 * PI),
        }
    }
}

// ── Frame-plane conversion ─────────────────────────────────────────────────

pub(crate) fn to_planes(f: &QSignal2D, axis: &AxisConfig) -> [Vec<f64>; 4] {
    let len = f.data.len();
    let mut c: [Vec<f64>; 4] = [
        Vec::with_capacity(len),
        Vec::with_capacity(len),
        Vec::with_capacity(len),
        Vec::with_capacity(len),
    ];
    for q in &f.data {
        let comps = axis.components(*q);
        for (plane, v) in c.iter_mut().zip(comps) {
            plane.push(v);
        }
    }
    c
}

pub(crate) fn from_planes(c: &[Vec<f64>; 4], axis: &AxisConfig, grid: Grid2D) -> QSignal2D {
    let data = (0..grid.len())
        .map(|i| axis.from_components([c[0][i], c[1][i], c[2][i], c[3][i]]))
        .collect();
    QSignal2D { grid, data }
}

// ── Stage cascade ──────────────────────────────────────────────────────────

struct Stage {
    axis_dim: usize,
    unit: UnitSel,
    side: Side,
}

fn stages(kind: TransformKind, inverse: bool) -> [Stage; 2] {
    use Side::*;
    use UnitSel::*;
    let s = |axis_dim, unit, side| Stage { axis_dim, unit, side };
    match (kind, inverse) {
        // Right-sided: f·E1·E2. Inverse multiplies back in reversed order.
        (TransformKind::RightSided, false) => [s(0, U1, RightMul), s(1, U2, RightMul)],
        (TransformKind::RightSided, true) => [s(1, U2, RightMul), s(0, U1, RightMul)],
        // Two-sided: E1·f·E2. The sides commute, order is conventional.
        (TransformKind::TwoSided, _) => [s(0, U1, LeftMul), s(1, U2, RightMul)],
        // Left-sided: E1·E2·f, so the inner (second-axis) factor applies first.
        (TransformKind::LeftSided, false) => [s(1, U2, LeftMul), s(0, U1, LeftMul)],
        (TransformKind::LeftSided, true) => [s(0, U1, LeftMul), s(1, U2, LeftMul)],
    }
}

fn run_cascade(f: &QSignal2D, plan: &TransformPlan, inverse: bool) -> QSignal2D {
    let grid = plan.grid;
    let (m, n) = (grid.m, grid.n);
    let kernel_sign = if inverse { 1.0 } else { -1.0 };
    let mut c = to_planes(f, &plan.axis);
    for st in stages(plan.kind, inverse) {
        let (len, dx, x0) = if st.axis_dim == 0 {
            (m, grid.dx1, grid.x1_0)
        } else {
            (n, grid.dx2, grid.x2_0)
        };
        let dw = 2.0 * PI / (len as f64 * dx);
        split_stage(&mut c, m, n, st.axis_dim, st.unit, st.side, |line, sigma| {
            let sgn = kernel_sign * sigma;
            if inverse {
                // reconstruct at true coordinates: origin phase first
                bin_phase(line, sgn, dw, x0);
                dft_inplace(line, sgn);
            } else {
                dft_inplace(line, sgn);
                bin_phase(line, sgn, dw, x0);
            }
        });
    }
    let scale = if inverse { plan.inverse_scale() } else { plan.forward_scale() };
    for plane in &mut c {
        for v in plane.iter_mut() {
            *v *= scale;
        }
    }
    let out_grid = if inverse { plan.grid } else { plan.freq_grid() };
    from_planes(&c, &plan.axis, out_grid)
}

/// Forward transform of `f` under `plan`; output on the derived frequency
/// grid.
pub fn dqft(f: &QSignal2D, plan: &TransformPlan) -> Result<QSignal2D> {
    if !f.grid.approx_eq(&plan.grid) {
        return Err(Error::Grid("signal grid does not match plan grid".into()));
    }
    Ok(run_cascade(f, plan, false))
}

/// Inverse transform; `spectrum` must live on the plan's frequency grid.
pub fn idqft(spectrum: &QSignal2D, plan: &TransformPlan) -> Result<QSignal2D> {
    if !spectrum.grid.approx_eq(&plan.freq_grid()) {
        return Err(Error::Grid("spectrum grid does not match plan frequency grid".into()));
    }
    Ok(run_cascade(spectrum, plan, true))
}

// ── Direct-summation oracles ───────────────────────────────────────────────

/// Literal quadruple-loop evaluation in the exact quaternion order of the
/// definitions. Quadratic in the sample count; the reference for `dqft`.
pub fn dqft_direct(f: &QSignal2D, plan: &TransformPlan) -> Result<QSignal2D> {
    if !f.grid.approx_eq(&plan.grid) {
        return Err(Error::Grid("signal grid does not match plan grid".into()));
    }
    let g = plan.grid;
    let fg = plan.freq_grid();
    let (u1, u2) = (plan.axis.u1(), plan.axis.u2());
    let scale = plan.forward_scale();
    let mut out = QSignal2D::zeros(fg);
    for k1 in 0..g.m {
        let w1 = fg.signed_coord1(k1);
        for k2 in 0..g.n {
            let w2 = fg.signed_coord2(k2);
            let mut acc = Quaternion::zero();
            for m1 in 0..g.m {
                let e1 = Quaternion::rotor(u1, -w1 * g.coord1(m1));
                for m2 in 0..g.n {
                    let e2 = Quaternion::rotor(u2, -w2 * g.coord2(m2));
                    let fv = f.at(m1, m2);
                    acc += match plan.kind {
                        TransformKind::RightSided => fv * e1 * e2,
                        TransformKind::TwoSided => e1 * fv * e2,
                        TransformKind::LeftSided => e1 * e2 * fv,
                    };
                }
            }
            out.set(k1, k2, acc * scale);
        }
    }
    Ok(out)
}

/// Literal inverse sums, kernel order reversed per kind.
pub fn idqft_direct(spectrum: &QSignal2D, plan: &TransformPlan) -> Result<QSignal2D> {
    if !spectrum.grid.approx_eq(&plan.freq_grid()) {
        return Err(Error::Grid("spectrum grid does not match plan frequency grid".into()));
    }
    let g = plan.grid;
    let fg = plan.freq_grid();
    let (u1, u2) = (plan.axis.u1(), plan.axis.u2());
    let scale = plan.inverse_scale();
    let mut out = QSignal2D::zeros(g);
    for m1 in 0..g.m {
        let x1 = g.coord1(m1);
        for m2 in 0..g.n {
            let x2 = g.coord2(m2);
            let mut acc = Quaternion::zero();
            for k1 in 0..g.m {
                let e1 = Quaternion::rotor(u1, fg.signed_coord1(k1) * x1);
                for k2 in 0..g.n {
                    let e2 = Quaternion::rotor(u2, fg.signed_coord2(k2) * x2);
                    let sv = spectrum.at(k1, k2);
                    acc += match plan.kind {
                        TransformKind::RightSided => sv * e2 * e1,
                        TransformKind::TwoSided => e1 * sv * e2,
                        TransformKind::LeftSided => e2 * e1 * sv,
                    };
                }
            }
            out.set(m1, m2, acc * scale);
        }
    }
    Ok(out)
}

// ── Componentwise reflections in an arbitrary frame ────────────────────────

fn map_in_frame(f: &QSignal2D, axis: &AxisConfig, op: impl Fn(&QSignal2D) -> QSignal2D) -> QSignal2D {
    if axis.is_canonical() {
        return op(f);
    }
    let framed = f.map(|q| {
        let c = axis.components(q);
        Quaternion::new(c[0], c[1], c[2], c[3])
    });
    op(&framed).map(|q| axis.from_components([q.w, q.x, q.y, q.z]))
}

/// [`signal::alpha`] taken componentwise in the frame of `axis`.
pub fn alpha_in(f: &QSignal2D, axis: &AxisConfig) -> QSignal2D {
    map_in_frame(f, axis, |g| signal::alpha(g))
}

/// [`signal::beta`] taken componentwise in the frame of `axis`.
pub fn beta_in(f: &QSignal2D, axis: &AxisConfig) -> QSignal2D {
    map_in_frame(f, axis, |g| signal::beta(g))
}

// ── Identity checks ────────────────────────────────────────────────────────

/// Residual of the two-sided/right-sided exchange
/// `‖F_two(f) − F_right(β f)‖₂ / ‖f‖₂`. Exact (up to rounding) on
/// wrap-symmetric grids.
pub fn beta_relation_check(f: &QSignal2D, plan: &TransformPlan) -> Result<f64> {
    let two = TransformPlan { kind: TransformKind::TwoSided, ..*plan };
    let right = TransformPlan { kind: TransformKind::RightSided, ..*plan };
    let lhs = dqft(f, &two)?;
    let rhs = dqft(&beta_in(f, &plan.axis), &right)?;
    let mut num = 0.0;
    for (a, b) in lhs.data.iter().zip(&rhs.data) {
        num += (*a - *b).norm_sq();
    }
    let num = (num * lhs.grid.cell()).sqrt();
    let den = lp_norm(f, LpNorm::L2).max(f64::MIN_POSITIVE);
    Ok(num / den)
}

/// Inner product in the pairing the given normalization preserves exactly:
/// the plain bin sum `Σ f·conj(g)` for [`NormalizationMode::Unitary`], the
/// cell-weighted Riemann sum for [`NormalizationMode::Analytic`]. Spatial
/// signals and spectra each contribute their own grid's cell.
pub fn mode_inner_product(f: &QSignal2D, g: &QSignal2D, mode: NormalizationMode) -> Result<Quaternion> {
    if !f.grid.approx_eq(&g.grid) {
        return Err(Error::Grid("inner product needs one shared grid".into()));
    }
    match mode {
        NormalizationMode::Unitary => {
            let mut acc = Quaternion::zero();
            for (a, b) in f.data.iter().zip(&g.data) {
                acc += *a * b.conj();
            }
            Ok(acc)
        }
        NormalizationMode::Analytic => signal::inner_product(f, g),
    }
}

/// `‖f‖` in the norm the mode preserves; see [`mode_inner_product`].
pub fn mode_norm(f: &QSignal2D, mode: NormalizationMode) -> f64 {
    mode_inner_product(f, f, mode).map(|q| q.w.max(0.0).sqrt()).unwrap_or(0.0)
}

/// Transpose identity for the right-sided transform: the plain (unconjugated)
/// sum of `F_right(f)` against `g` equals that of `f` against
/// `F_right(α g)`, index-aligned. Returns `|LHS − RHS| / (|LHS| + 1)`.
/// Exact (up to rounding) in Unitary mode on grids with origin 0.
pub fn multiplication_check(f: &QSignal2D, g: &QSignal2D, plan: &TransformPlan) -> Result<f64> {
    if !f.grid.approx_eq(&g.grid) {
        return Err(Error::Grid("multiplication check needs one shared grid".into()));
    }
    let right = TransformPlan { kind: TransformKind::RightSided, ..*plan };
    let ff = dqft(f, &right)?;
    let hh = dqft(&alpha_in(g, &plan.axis), &right)?;
    let (w_lhs, w_rhs) = match plan.mode {
        NormalizationMode::Unitary => (1.0, 1.0),
        NormalizationMode::Analytic => (right.freq_grid().cell(), right.grid.cell()),
    };
    let mut lhs = Quaternion::zero();
    for (a, b) in ff.data.iter().zip(&g.data) {
        lhs += *a * *b;
    }
    lhs = lhs * w_lhs;
    let mut rhs = Quaternion::zero();
    for (a, b) in f.data.iter().zip(&hh.data) {
        rhs += *a * *b;
    }
    rhs = rhs * w_rhs;
    Ok((lhs - rhs).norm() / (lhs.norm() + 1.0))
}

// ── Spectral derivatives and Poisson smoothing ─────────────────────────────

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PartialKind {
    /// right-multiply by u1·ω1
    D1,
    /// right-multiply by u2·ω2
    D2,
    /// right-multiply by u3·ω1·ω2
    D12,
}

/// Right-multiplies each spectrum sample by the signed-frequency factor of
/// the requested derivative.
pub fn spectral_partial(spectrum: &QSignal2D, which: PartialKind, plan: &TransformPlan) -> Result<QSignal2D> {
    let fg = plan.freq_grid();
    if !spectrum.grid.approx_eq(&fg) {
        return Err(Error::Grid("spectrum grid does not match plan frequency grid".into()));
    }
    let mut out = QSignal2D::zeros(spectrum.grid);
    for k1 in 0..fg.m {
        let w1 = fg.signed_coord1(k1);
        for k2 in 0..fg.n {
            let w2 = fg.signed_coord2(k2);
            let factor = match which {
                PartialKind::D1 => plan.axis.u1() * w1,
                PartialKind::D2 => plan.axis.u2() * w2,
                PartialKind::D12 => plan.axis.u3() * (w1 * w2),
            };
            out.set(k1, k2, spectrum.at(k1, k2) * factor);
        }
    }
    Ok(out)
}

/// Abel-weighted reconstruction: inverse transform of the spectrum with each
/// bin scaled by `e^{-ε(|ω1|+|ω2|)}`. Equals circular convolution with the
/// periodized Poisson kernel up to truncation of its tails.
pub fn poisson_smooth(f: &QSignal2D, eps: f64, plan: &TransformPlan) -> Result<QSignal2D> {
    if plan.kind != TransformKind::RightSided {
        return Err(Error::Param("poisson smoothing is defined for the right-sided transform".into()));
    }
    let weights = signal::abel_weights(plan.freq_grid(), eps)?;
    let spectrum = dqft(f, plan)?;
    let weighted = QSignal2D {
        grid: spectrum.grid,
        data: spectrum
            .data
            .iter()
            .zip(&weights.data)
            .map(|(q, w)| *q * w.w)
            .collect(),
    };
    idqft(&weighted, plan)
}
