//! Scalar abstraction for the numeric parts of the crate.
//!
//! Everything numeric is generic over [`Real`], a small umbrella trait over
//! the `num-traits` hierarchy satisfied by `f32` and `f64`. The crate root
//! exports `f64`-concrete type aliases for the common case; choose `f32`
//! explicitly only when memory pressure matters more than the tolerances
//! (most default tolerances sit below `f32` resolution).

use std::fmt;

use ndarray::ScalarOperand;
use num_traits::{Float, FloatConst, FromPrimitive, NumAssign};

/// Floating-point scalar usable for walk operators, spectra and amplitudes.
///
/// A blanket of the `num-traits` capabilities the crate relies on:
/// ordinary arithmetic with assignment operators, floating-point
/// classification, π and friends, conversions from primitive types, and
/// matrix-by-scalar products.
pub trait Real:
    Float
    + FloatConst
    + FromPrimitive
    + NumAssign
    + ScalarOperand
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
{
    /// Converts an `f64` constant (tolerances, literals) into `Self`.
    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("finite f64 constant must be representable")
    }

    /// Converts a count or index into `Self`.
    fn of_usize(n: usize) -> Self {
        Self::from_usize(n).expect("usize must be representable in the scalar type")
    }

    /// Converts a signed integer (eigenvalues, character sums) into `Self`.
    fn of_i64(n: i64) -> Self {
        Self::from_i64(n).expect("i64 must be representable in the scalar type")
    }
}

impl Real for f32 {}
impl Real for f64 {}
