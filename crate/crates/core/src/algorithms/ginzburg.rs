//! Rotation reduction for Euclidean unit vectors in a closed halfplane.
//!
//! The frame is turned so that `u = (0, 1)`; every vector is then an angle in
//! `[0, pi]`. A vector is fixed once it is `(1, 0)` or `(-1, 0)`. Each step
//! rotates all moving vectors together, in the direction in which the norm
//! of the sum does not grow, until one of them reaches an axis point; that
//! vector becomes fixed. After `n` steps every vector is fixed and the sum is
//! an odd integer multiple of `(1, 0)`.
//!
//! With fixed sum `f = (f_x, 0)` and moving sum `m`, the derivative of
//! `|f + R(phi) m|^2` is `-2 f_x (R(phi) m)_y`. The moving vectors stay in
//! the closed upper halfplane, so the sign of that derivative never flips
//! during a step.

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::Float;
use crate::vector::{Vec2, VectorMultiset};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Turn {
    Counterclockwise,
    Clockwise,
}

/// State `V_i` before step `i`, plus the move taken from it.
#[derive(Clone, Debug, Serialize)]
pub struct RotationStep {
    pub step: usize,
    pub moving: Vec<usize>,
    pub fixed: Vec<usize>,
    /// Current positions of all vectors, in the normalized frame.
    pub vectors: Vec<[f64; 2]>,
    pub sum: [f64; 2],
    pub norm: f64,
    pub turn: Turn,
    /// Rotation angle applied to the moving vectors in this step.
    pub angle: f64,
    /// Index of the vector that becomes fixed.
    pub fixes: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct RotationTrace {
    pub steps: Vec<RotationStep>,
    pub final_vectors: Vec<[f64; 2]>,
    pub final_sum: [f64; 2],
    pub final_norm: f64,
}

fn norm(v: [f64; 2]) -> f64 {
    v[0].hypot(v[1])
}

impl RotationTrace {
    /// Checks monotonicity, that every final vector is `(+-1, 0)` and that the
    /// final norm is an odd integer at least 1, all within `tol`.
    pub fn check(&self, tol: f64) -> std::result::Result<(), String> {
        let norms: Vec<f64> = self
            .steps
            .iter()
            .map(|s| s.norm)
            .chain(std::iter::once(self.final_norm))
            .collect();
        if let Some(i) = (1..norms.len()).find(|&i| norms[i] > norms[i - 1] + tol) {
            return Err(format!(
                "norm increased at step {i}: {} -> {}",
                norms[i - 1],
                norms[i]
            ));
        }
        if let Some(i) = self
            .final_vectors
            .iter()
            .position(|v| (v[0].abs() - 1.0).abs() > tol || v[1].abs() > tol)
        {
            return Err(format!("vector {i} did not end on an axis point"));
        }
        let k = self.final_norm.round();
        if (self.final_norm - k).abs() > tol || k < 1.0 || (k as i64) % 2 == 0 {
            return Err(format!(
                "final norm {} is not an odd integer",
                self.final_norm
            ));
        }
        if self.final_norm < 1.0 - tol {
            return Err(format!("final norm {} below 1", self.final_norm));
        }
        Ok(())
    }
}

/// Runs the rotation reduction. Requires an odd number of Euclidean unit
/// vectors with `u . v_i >= 0` (both within the float tolerance).
pub fn ginzburg_reduce(vectors: &VectorMultiset<Float>, u: &Vec2<Float>) -> Result<RotationTrace> {
    let tol = Float::tolerance();
    let n = vectors.len();
    if n.is_multiple_of(2) {
        return Err(Error::EvenCardinality(n));
    }
    if u.is_zero() {
        return Err(Error::ZeroDirection);
    }
    for (i, v) in vectors.iter().enumerate() {
        if (v.x.0.hypot(v.y.0) - 1.0).abs() > tol {
            return Err(Error::NotUnitVectors(i));
        }
        if u.dot(v).0 / u.x.0.hypot(u.y.0) < -tol {
            return Err(Error::HalfplaneViolated(i));
        }
    }
    let base = u.y.0.atan2(u.x.0) - PI / 2.0;
    let mut theta: Vec<f64> = vectors
        .iter()
        .map(|v| {
            let mut a = (v.y.0.atan2(v.x.0) - base).rem_euclid(2.0 * PI);
            if a > 1.5 * PI {
                a -= 2.0 * PI;
            }
            a.clamp(0.0, PI)
        })
        .collect();
    let mut fixed = vec![false; n];
    let position = |a: f64| -> [f64; 2] {
        if a == 0.0 {
            [1.0, 0.0]
        } else if a == PI {
            [-1.0, 0.0]
        } else {
            [a.cos(), a.sin()]
        }
    };
    let sum_of = |theta: &[f64]| -> [f64; 2] {
        theta.iter().fold([0.0, 0.0], |acc, &a| {
            let p = position(a);
            [acc[0] + p[0], acc[1] + p[1]]
        })
    };

    let mut steps = Vec::with_capacity(n);
    for step in 0..n {
        let moving: Vec<usize> = (0..n).filter(|&j| !fixed[j]).collect();
        let fixed_idx: Vec<usize> = (0..n).filter(|&j| fixed[j]).collect();
        let f_x: f64 = fixed_idx.iter().map(|&j| position(theta[j])[0]).sum();
        let turn = if f_x > tol {
            Turn::Counterclockwise
        } else if f_x < -tol {
            Turn::Clockwise
        } else {
            // Flat: turn toward the axis point nearest to any moving vector.
            let (j, _) = moving
                .iter()
                .map(|&j| (j, theta[j].min(PI - theta[j])))
                .fold((moving[0], f64::INFINITY), |best, c| {
                    if c.1 < best.1 {
                        c
                    } else {
                        best
                    }
                });
            if theta[j] <= PI - theta[j] {
                Turn::Clockwise
            } else {
                Turn::Counterclockwise
            }
        };
        let time = |j: usize| match turn {
            Turn::Counterclockwise => PI - theta[j],
            Turn::Clockwise => theta[j],
        };
        let angle = moving
            .iter()
            .map(|&j| time(j))
            .fold(f64::INFINITY, f64::min);
        let fixes = *moving
            .iter()
            .find(|&&j| time(j) <= angle + 1e-12)
            .expect("at least one moving vector");
        let s = sum_of(&theta);
        steps.push(RotationStep {
            step,
            vectors: theta.iter().map(|&a| position(a)).collect(),
            moving: moving.clone(),
            fixed: fixed_idx,
            sum: s,
            norm: norm(s),
            turn,
            angle,
            fixes,
        });
        for &j in &moving {
            theta[j] = match turn {
                Turn::Counterclockwise => (theta[j] + angle).min(PI),
                Turn::Clockwise => (theta[j] - angle).max(0.0),
            };
        }
        theta[fixes] = match turn {
            Turn::Counterclockwise => PI,
            Turn::Clockwise => 0.0,
        };
        fixed[fixes] = true;
    }
    let final_sum = sum_of(&theta);
    Ok(RotationTrace {
        steps,
        final_vectors: theta.iter().map(|&a| position(a)).collect(),
        final_sum,
        final_norm: norm(final_sum),
    })
}
