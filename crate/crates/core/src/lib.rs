//! Desk-scale numerical laboratory for Brody reparametrization and its
//! neighbours: Fubini–Study length/area analysis of holomorphic discs,
//! empirical Ahlfors currents, Lelong monotonicity, the five-line polyhedron
//! reduction in `P⁴`, the six-plane sextic deformation and the dense-line
//! blow-up example on the square torus.
//!
//! The crate is `no_std` and only needs `alloc`. Everything touching files,
//! command lines or output formats lives in the `brody-lab` companion crate.

#![no_std]
#![forbid(unsafe_code)]
// `!(x > 0.0)` is used on purpose so that NaN fails the check
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;

pub mod brody;
pub mod complexgeom;
pub mod error;
pub mod greenpoly;
pub mod holomap;
pub mod hompoly;
pub mod lelong;
pub mod lengtharea;
pub mod linalg;
pub mod poly;
pub mod quadrature;
pub mod roots;
pub mod sexticdeform;
pub mod winkelmann;

pub use error::{Error, ErrorKind, Result};
pub use num_complex::Complex64;

/// Shorthand used throughout the crate.
pub type C64 = Complex64;

/// Complex number from real and imaginary parts.
#[inline]
pub fn c64(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}
