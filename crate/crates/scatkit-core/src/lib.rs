//! Exact symbolic engine for rank-2 scattering diagrams.
//!
//! Everything here is exact: lattice vectors and unimodular maps over `i64`,
//! Laurent polynomials with `BigInt` coefficients, angles as rational
//! multiples of pi, and truncated power series over `BigRational`. The crate
//! is `no_std` (it allocates, nothing more); IO, floating-point numerics and
//! the command-line surface live in the companion `scatkit` crate.

#![no_std]

extern crate alloc;

pub mod affine;
pub mod angle;
pub mod cases;
pub mod coeff;
pub mod lattice;
pub mod laurent;
pub mod rng;
pub mod series;
pub mod theta;
pub mod wallcross;

use core::fmt;

/// Errors shared across the engine modules.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// The pentagon identity requires the two wall classes to pair to 1.
    PairingNotOne { got: i64 },
    /// The focus-focus composite is only defined for primitive classes.
    NotPrimitive,
    /// Attempted to invert a rational function with zero numerator.
    ZeroToNegativePower,
    /// A monodromy did not factor as the claimed product of shears.
    FactorizationMismatch,
    /// Coefficient data for this case is not available.
    CoeffsUnavailable(&'static str),
    /// An affine structure needs at least three rays.
    TooFewRays { got: usize },
    /// A series operation was called outside its domain.
    SeriesDomain(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::PairingNotOne { got } => {
                write!(f, "wall classes must pair to 1, got {got}")
            }
            Error::NotPrimitive => write!(f, "lattice vector must be primitive"),
            Error::ZeroToNegativePower => {
                write!(f, "zero rational function has no negative powers")
            }
            Error::FactorizationMismatch => {
                write!(f, "monodromy does not factor as the claimed shear product")
            }
            Error::CoeffsUnavailable(why) => write!(f, "{why}"),
            Error::TooFewRays { got } => {
                write!(f, "affine structure needs at least 3 rays, got {got}")
            }
            Error::SeriesDomain(why) => write!(f, "{why}"),
        }
    }
}

impl core::error::Error for Error {}
