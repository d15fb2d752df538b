//! Internal complex line-transform engine.
//!
//! Every 2D quaternion transform in this crate factors into per-axis stages.
//! A stage splits the four frame components of the data into two complex
//! planes, runs an independent 1D transform over every line of each plane,
//! and writes the results back into the same component slots. The split and
//! the relative transform signs are fixed by which frame unit the kernel
//! uses and which side of the sample it multiplies:
//!
//! * kernel in u1, right-multiplied: (c0,c1) as written, (c2,c3) conjugated;
//! * kernel in u1, left-multiplied: both pairs as written;
//! * kernel in u2, right-multiplied: (c0,c2) and (c1,c3) both as written;
//! * kernel in u2, left-multiplied: (c0,c2) as written, (c1,c3) conjugated.
//!
//! "Conjugated" means the line sees the kernel with its unit negated; the
//! line operation receives that as `sigma = -1`.

use crate::signal::Grid2D;
use num_complex::Complex64;
use std::f64::consts::TAU;

// ── 1D DFT ─────────────────────────────────────────────────────────────────

/// Unnormalized DFT in place: `out[k] = Σ_m buf[m]·e^{sign·i·2πkm/len}`.
/// Radix-2 for power-of-two lengths, direct summation otherwise.
pub(crate) fn dft_inplace(buf: &mut [Complex64], sign: f64) {
    let n = buf.len();
    if n <= 1 {
        return;
    }
    if n.is_power_of_two() {
        fft_pow2(buf, sign);
    } else {
        dft_direct(buf, sign);
    }
}

fn fft_pow2(buf: &mut [Complex64], sign: f64) {
    let n = buf.len();
    let mut j = 0usize;
    for i in 1..n {
        let mut bit = n >> 1;
        while j & bit != 0 {
            j ^= bit;
            bit >>= 1;
        }
        j |= bit;
        if i < j {
            buf.swap(i, j);
        }
    }
    let mut len = 2;
    while len <= n {
        let half = len / 2;
        let step = sign * TAU / len as f64;
        for start in (0..n).step_by(len) {
            for t in 0..half {
                // from_polar per twiddle keeps each angle exact; no running
                // products that would accumulate error across a long line.
                let w = Complex64::from_polar(1.0, step * t as f64);
                let a = buf[start + t];
                let b = buf[start + t + half] * w;
                buf[start + t] = a + b;
                buf[start + t + half] = a - b;
            }
        }
        len <<= 1;
    }
}

fn dft_direct(buf: &mut [Complex64], sign: f64) {
    let n = buf.len();
    let tw: Vec<Complex64> = (0..n)
        .map(|r| Complex64::from_polar(1.0, sign * TAU * r as f64 / n as f64))
        .collect();
    let mut out = vec![Complex64::new(0.0, 0.0); n];
    for (k, o) in out.iter_mut().enumerate() {
        let mut acc = Complex64::new(0.0, 0.0);
        for (m, &v) in buf.iter().enumerate() {
            acc += v * tw[(k * m) % n];
        }
        *o = acc;
    }
    buf.copy_from_slice(&out);
}

/// Multiplies bin `k` by `e^{i·sign·s(k)·dw·x0}` where `s` is the signed
/// wrap. This is the origin correction: a transform against true spatial
/// coordinates equals this phase times the index-space DFT.
pub(crate) fn bin_phase(buf: &mut [Complex64], sign: f64, dw: f64, x0: f64) {
    if x0 == 0.0 {
        return;
    }
    let len = buf.len();
    for (k, v) in buf.iter_mut().enumerate() {
        let ang = sign * Grid2D::wrap(k, len) as f64 * dw * x0;
        *v *= Complex64::from_polar(1.0, ang);
    }
}

// ── Component-split stages ─────────────────────────────────────────────────

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum UnitSel {
    U1,
    U2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Side {
    LeftMul,
    RightMul,
}

/// Runs `line_op` over every line (along `axis_dim`: 0 = first index,
/// 1 = second) of the two complex planes the (unit, side) pair selects from
/// the four frame-component planes. `line_op` gets the line and its sigma
/// (+1 kernel as written, -1 conjugated).
pub(crate) fn split_stage<F>(
    c: &mut [Vec<f64>; 4],
    m: usize,
    n: usize,
    axis_dim: usize,
    unit: UnitSel,
    side: Side,
    mut line_op: F,
) where
    F: FnMut(&mut [Complex64], f64),
{
    let (pair_a, pair_b) = match unit {
        UnitSel::U1 => ((0usize, 1usize), (2usize, 3usize)),
        UnitSel::U2 => ((0, 2), (1, 3)),
    };
    let sigma_b = match (unit, side) {
        (UnitSel::U1, Side::RightMul) | (UnitSel::U2, Side::LeftMul) => -1.0,
        _ => 1.0,
    };
    run_lines(c, m, n, axis_dim, pair_a, 1.0, &mut line_op);
    run_lines(c, m, n, axis_dim, pair_b, sigma_b, &mut line_op);
}

fn run_lines<F>(
    c: &mut [Vec<f64>; 4],
    m: usize,
    n: usize,
    axis_dim: usize,
    (pre, pim): (usize, usize),
    sigma: f64,
    line_op: &mut F,
) where
    F: FnMut(&mut [Complex64], f64),
{
    let (n_lines, len, stride, line_stride) = if axis_dim == 0 {
        (n, m, n, 1)
    } else {
        (m, n, 1, n)
    };
    let mut buf = vec![Complex64::new(0.0, 0.0); len];
    for l in 0..n_lines {
        let base = l * line_stride;
        for (t, v) in buf.iter_mut().enumerate() {
            let idx = base + t * stride;
            *v = Complex64::new(c[pre][idx], c[pim][idx]);
        }
        line_op(&mut buf, sigma);
        for (t, v) in buf.iter().enumerate() {
            let idx = base + t * stride;
            c[pre][idx] = v.re;
            c[pim][idx] = v.im;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn naive_dft(input: &[Complex64], sign: f64) -> Vec<Complex64> {
        let n = input.len();
        (0..n)
            .map(|k| {
                input
                    .iter()
                    .enumerate()
                    .map(|(m, &v)| {
                        v * Complex64::from_polar(1.0, sign * TAU * (k * m) as f64 / n as f64)
                    })
                    .sum()
            })
            .collect()
    }

    fn ramp(n: usize) -> Vec<Complex64> {
        (0..n)
            .map(|t| Complex64::new((t as f64 * 0.7).sin(), (t as f64 * 1.3).cos()))
            .collect()
    }

    #[test]
    fn radix2_matches_naive_sum() {
        for &n in &[1usize, 2, 4, 8, 16, 64] {
            for &sign in &[-1.0, 1.0] {
                let mut buf = ramp(n);
                let want = naive_dft(&buf, sign);
                dft_inplace(&mut buf, sign);
                for (a, b) in buf.iter().zip(&want) {
                    assert!((a - b).norm() < 1e-11, "n={n} sign={sign}");
                }
            }
        }
    }

    #[test]
    fn direct_matches_naive_sum() {
        for &n in &[3usize, 5, 6, 12, 15] {
            let mut buf = ramp(n);
            let want = naive_dft(&buf, -1.0);
            dft_inplace(&mut buf, -1.0);
            for (a, b) in buf.iter().zip(&want) {
                assert!((a - b).norm() < 1e-11, "n={n}");
            }
        }
    }

    #[test]
    fn forward_backward_is_scaled_identity() {
        let orig = ramp(24);
        let mut buf = orig.clone();
        dft_inplace(&mut buf, -1.0);
        dft_inplace(&mut buf, 1.0);
        for (a, b) in buf.iter().zip(&orig) {
            assert!((a - b * 24.0).norm() < 1e-10);
        }
    }

    #[test]
    fn bin_phase_is_unit_modulus_and_signed() {
        let mut buf = vec![Complex64::new(1.0, 0.0); 8];
        bin_phase(&mut buf, -1.0, 0.25, 2.0);
        for v in &buf {
            assert!((v.norm() - 1.0).abs() < 1e-15);
        }
        // bin 5 wraps to -3
        assert!((buf[5] - Complex64::from_polar(1.0, -1.0 * -3.0 * 0.25 * 2.0)).norm() < 1e-14);
    }

    #[test]
    fn split_stage_visits_expected_planes() {
        let m = 2;
        let n = 3;
        let mut c = [
            vec![1.0; m * n],
            vec![2.0; m * n],
            vec![3.0; m * n],
            vec![4.0; m * n],
        ];
        let mut seen = Vec::new();
        split_stage(&mut c, m, n, 1, UnitSel::U2, Side::LeftMul, |line, sigma| {
            seen.push((line[0].re, line[0].im, sigma));
        });
        // pair (c0,c2) with sigma +1, pair (c1,c3) with sigma -1, m lines each
        assert_eq!(seen, vec![(1.0, 3.0, 1.0), (1.0, 3.0, 1.0), (2.0, 4.0, -1.0), (2.0, 4.0, -1.0)]);
    }
}
