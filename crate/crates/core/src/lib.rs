//! Sums of unit vectors in normed planes.
//!
//! The crate evaluates polygonal and Euclidean norms exactly, checks the
//! Helly-type statements about sums of (at most) unit vectors on concrete
//! instances, runs the constructive procedures behind them (rotation
//! reduction, sign choice, general-position perturbation), decides central
//! symmetry of convex polygons with explicit violation witnesses, and drives
//! all of it from a deterministic, seeded trial harness.
//!
//! Everything is generic over [`Scalar`]: use [`Rational`] for exact work and
//! [`Float`] for tolerance-based work.

pub mod algorithms;
pub mod error;
pub mod geometry;
pub mod harness;
pub mod io;
pub mod norms;
pub mod sample;
pub mod scalar;
pub mod svg;
pub mod symmetry;
pub mod theorems;
pub mod vector;

pub use error::{Error, Result};
pub use geometry::OriginPosition;
pub use norms::{symmetric_hull, EdgeFunctional, UnitBall};
pub use scalar::{Float, Rational, Scalar};
pub use vector::{Vec2, VectorMultiset};
