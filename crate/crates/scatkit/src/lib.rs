//! Numeric and IO companion to `scatkit-core`: floating-point charge
//! geometry, period quadrature, JSON reports, and SVG rendering.

pub mod charges;
pub mod periods;
pub mod report;
pub mod svg;
