//! Exact-arithmetic toolkit for combinatorial sequences and polynomial
//! families: generators, Hankel/Toeplitz/compound matrices, fraction-free
//! determinants, and finite-order positivity certificates (total positivity,
//! moment-sequence criteria, log-convexity operators, q-analogues).
//!
//! Everything is computed over arbitrary-precision rationals; no operation
//! in this crate ever rounds. All values are immutable after construction
//! and all operations are pure, so they are safe to share across threads.

pub mod error;
pub mod families;
pub mod matrix;
pub mod operators;
pub mod positivity;
pub mod qpoly;
pub mod recursive;
pub mod scalar;

pub use error::Error;
pub use matrix::Matrix;
pub use positivity::{Certificate, Outcome, Property, Witness};
pub use qpoly::QPoly;
pub use scalar::{int, rat, Int, Rat};
