//! Rational squares in unit intervals.
//!
//! For a positive integer `a`, `σ(a)` is the least denominator `s` for which some
//! `t/s` satisfies `a < (t/s)² < a + 1`, and `τ_s(a)` counts the numerators `t`
//! that work for a given `s`. This crate computes both exactly, together with
//! the bounding curves `σ_k`, the on-bound criterion, zero-windows of `τ`, and a
//! harness of empirical sweeps over `σ`.

pub mod analysis;
pub mod confrac;
pub mod exactmath;
pub mod sigmacore;

mod error;

pub use confrac::Fraction;
pub use error::Error;
pub use exactmath::{Natural, Surd};
