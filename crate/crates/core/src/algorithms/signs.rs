//! Signs that make every odd-size signed subsum of unit vectors have norm at
//! least 1.
//!
//! Flipping every vector into the closed halfplane `y >= 0` is enough: each
//! odd subset of the flipped vectors satisfies the halfplane theorem.

use std::cmp::Ordering;

use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::norms::UnitBall;
use crate::sample::rng_from_seed;
use crate::scalar::Scalar;
use crate::vector::{Vec2, VectorMultiset};

/// Largest input size checked over all odd subsets.
pub const EXHAUSTIVE_LIMIT: usize = 15;
/// Number of random odd subsets checked above [`EXHAUSTIVE_LIMIT`].
pub const SAMPLED_SUBSETS: usize = 1000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct SignVector {
    pub signs: Vec<i8>,
}

impl SignVector {
    pub fn len(&self) -> usize {
        self.signs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.signs.is_empty()
    }

    pub fn apply<S: Scalar>(&self, vectors: &VectorMultiset<S>) -> VectorMultiset<S> {
        vectors
            .iter()
            .zip(&self.signs)
            .map(|(v, &s)| if s < 0 { -v } else { v.clone() })
            .collect()
    }
}

/// Summary of the odd-subset check.
#[derive(Clone, Debug, Serialize)]
#[serde(bound = "")]
pub struct SignCheck<S: Scalar> {
    pub exhaustive: bool,
    pub subsets_checked: usize,
    #[serde(serialize_with = "crate::io::ser_scalar")]
    pub min_norm: S,
    pub min_subset: Vec<usize>,
    pub failures: Vec<Vec<usize>>,
}

impl<S: Scalar> SignCheck<S> {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Chooses `+1` for vectors with `y >= 0` and `-1` otherwise, then checks
/// every odd-size signed subsum (sampled above [`EXHAUSTIVE_LIMIT`]).
pub fn choose_signs<S: Scalar>(
    ball: &UnitBall<S>,
    vectors: &VectorMultiset<S>,
) -> Result<SignVector> {
    if let Some(i) = (0..vectors.len()).find(|&i| !ball.is_unit(&vectors[i])) {
        return Err(Error::NotUnitVectors(i));
    }
    let signs = SignVector {
        signs: vectors
            .iter()
            .map(|v| if v.y.is_negative() { -1 } else { 1 })
            .collect(),
    };
    let check = verify_signs(ball, vectors, &signs);
    if !check.passed() {
        return Err(Error::TheoremFalsified(format!(
            "odd subset {:?} has signed sum of norm below 1",
            check.failures[0]
        )));
    }
    Ok(signs)
}

fn mask_indices(mask: u64, n: usize) -> Vec<usize> {
    (0..n).filter(|&i| mask >> i & 1 == 1).collect()
}

/// Checks `‖Σ_{i∈W} ε_i v_i‖ >= 1` for odd subsets `W`.
pub fn verify_signs<S: Scalar>(
    ball: &UnitBall<S>,
    vectors: &VectorMultiset<S>,
    signs: &SignVector,
) -> SignCheck<S> {
    let signed = signs.apply(vectors);
    let n = signed.len();
    let one = S::one();
    let masks: Vec<u64> = if n <= EXHAUSTIVE_LIMIT {
        (1u64..1 << n).filter(|m| m.count_ones() % 2 == 1).collect()
    } else {
        let mut rng = rng_from_seed(0x5167_0000 ^ n as u64);
        (0..SAMPLED_SUBSETS)
            .map(|_| loop {
                let m: u64 = rng.gen::<u64>() & ((1u64 << n.min(63)) - 1);
                if m.count_ones() % 2 == 1 {
                    break m;
                }
            })
            .collect()
    };
    let mut min: Option<(S, u64)> = None;
    let mut failures = Vec::new();
    for &m in &masks {
        let idx = mask_indices(m, n);
        let s: Vec2<S> = signed.subset_sum(&idx);
        if ball.cmp_gauge(&s, &one) == Ordering::Less {
            failures.push(idx);
        }
        let g = ball.gauge(&s);
        if min
            .as_ref()
            .is_none_or(|(best, _)| g.compare(best) == Ordering::Less)
        {
            min = Some((g, m));
        }
    }
    let (min_norm, min_mask) = min.unwrap_or((S::zero(), 0));
    SignCheck {
        exhaustive: n <= EXHAUSTIVE_LIMIT,
        subsets_checked: masks.len(),
        min_norm,
        min_subset: mask_indices(min_mask, n),
        failures,
    }
}
