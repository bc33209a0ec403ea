//! Float math that works with and without `std`.
//!
//! Transcendental `f64` methods live in `std`, not `core`. Importing
//! [`num_traits::Float`] makes the method syntax (`x.exp()`, `x.ln()`, ...)
//! resolve everywhere: to the `std` intrinsics when the `std` feature is on
//! (inherent methods win) and to `libm` otherwise. Functions missing from the
//! `Float` trait are re-exported from `libm` directly.

pub use num_traits::Float;

/// Error function.
#[inline]
pub fn erf(x: f64) -> f64 {
    libm::erf(x)
}

/// Natural log of the absolute value of the gamma function.
#[inline]
pub fn ln_gamma(x: f64) -> f64 {
    libm::lgamma(x)
}
