//! Constructive procedures: rotation reduction, sign choice and
//! general-position perturbation.

pub mod generic;
pub mod ginzburg;
pub mod signs;

pub use generic::{make_generic, norm_collision};
pub use ginzburg::{ginzburg_reduce, RotationStep, RotationTrace, Turn};
pub use signs::{choose_signs, verify_signs, SignCheck, SignVector};
