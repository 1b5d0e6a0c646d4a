//! Scalar element types for tensors.
//!
//! Tensors store `f32` in normal operation; every reduction accumulates in
//! `f64` and rounds back on store. Instantiating the engine with `T = f64`
//! gives the 64-bit mode used by the finite-difference gradient checks.

/// Tensor element. Implemented for `f32` (storage) and `f64` (check mode).
pub trait Elem: Copy + Send + Sync + PartialOrd + std::fmt::Debug + 'static {
    const ZERO: Self;
    const ONE: Self;
    fn from_f64(v: f64) -> Self;
    fn to_f64(self) -> f64;
}

impl Elem for f32 {
    const ZERO: Self = 0.0;
    const ONE: Self = 1.0;
    #[inline(always)]
    fn from_f64(v: f64) -> Self {
        v as f32
    }
    #[inline(always)]
    fn to_f64(self) -> f64 {
        self as f64
    }
}

impl Elem for f64 {
    const ZERO: Self = 0.0;
    const ONE: Self = 1.0;
    #[inline(always)]
    fn from_f64(v: f64) -> Self {
        v
    }
    #[inline(always)]
    fn to_f64(self) -> f64 {
        self
    }
}
