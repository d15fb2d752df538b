//! Quaternion Fourier and linear canonical transforms on sampled 2D signals.
//!
//! The crate provides quaternion arithmetic ([`quat`]), grids and signal
//! containers ([`signal`]), the discrete quaternion Fourier transforms in
//! right-, left-, and two-sided form with their inverses and identity checks
//! ([`qft`]), and the quaternion linear canonical transforms generalizing
//! them with chirp factors ([`qlct`]).
//!
//! Every fast path has an O(N²)-per-output direct-summation counterpart used
//! as an oracle in the test suites; the fast and direct routes agree to
//! roundoff for any grid origin and any admissible axis pair.

pub mod error;
mod fft;
pub mod qft;
// pub mod qlct;
pub mod quat;
pub mod signal;

pub use error::{Error, Result};
pub use qft::{
    alpha_in, beta_in, beta_relation_check, dqft, dqft_direct, idqft, idqft_direct,
    mode_inner_product, mode_norm, multiplication_check, poisson_smooth, spectral_partial,
    NormalizationMode, PartialKind, TransformKind, TransformPlan,
};
// pub use qlct::{
//     irqlct, isqlct, oned_transform, oned_transform_inv, rqlct, rqlct_direct, rqlct_via_split,
//     sqlct, sqlct_fast, LCTParams, QLCTConfig,
// };
pub use quat::{AxisConfig, Quaternion};
pub use signal::{
    abel_weights, alpha, beta, convolve, inner_product, lp_norm, poisson_kernel, reflect_conj,
    Grid1D, Grid2D, LpNorm, QSignal1D, QSignal2D,
};
