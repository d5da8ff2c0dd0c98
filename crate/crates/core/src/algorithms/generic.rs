//! Perturbation into general position with respect to a polygonal norm.
//!
//! Vectors `u_1, u_2, ...` are drawn one at a time from the gauge
//! neighbourhood of radius `epsilon` around `lambda * v_i`. A draw is kept when,
//! over all index subsets `S != T` of size at most five, no edge functional
//! value at `σ(S)` equals any edge functional value at `σ(T)`. The rejected set
//! is a finite union of lines, so rejection sampling terminates quickly. As a
//! consequence all norms of subsums of size at most five are pairwise
//! distinct; in particular no two 3-sums and no 3-sum and 5-sum share a norm.

use std::cmp::Ordering;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::norms::{EdgeFunctional, UnitBall};
use crate::sample::{boundary_point, rng_from_seed, unit_interval};
use crate::scalar::Scalar;
use crate::vector::{Vec2, VectorMultiset};

pub const DEFAULT_RETRY_BUDGET: usize = 10_000;
/// Largest subset size constrained by the genericity conditions.
pub const MAX_SUBSET: usize = 5;

fn small_subsets(k: usize) -> Vec<Vec<usize>> {
    (0..=MAX_SUBSET.min(k))
        .flat_map(|s| (0..k).combinations(s))
        .collect()
}

/// True when `ℓ_e(σ(S, U)) != ℓ_f(σ(T, U))` for all edge functionals `e, f`
/// and all distinct subsets `S, T` of size at most [`MAX_SUBSET`].
pub fn edge_values_distinct<S: Scalar>(edges: &[EdgeFunctional<S>], vectors: &[Vec2<S>]) -> bool {
    let subsets = small_subsets(vectors.len());
    let mut values: Vec<(S, usize)> = Vec::with_capacity(subsets.len() * edges.len());
    for (id, s) in subsets.iter().enumerate() {
        let sum = s.iter().fold(Vec2::zero(), |acc, &i| &acc + &vectors[i]);
        values.extend(edges.iter().map(|e| (e.eval(&sum), id)));
    }
    values.sort_by(|a, b| a.0.compare(&b.0));
    values
        .windows(2)
        .all(|w| w[0].1 == w[1].1 || w[0].0.compare(&w[1].0) != Ordering::Equal)
}

/// Two distinct subsets of size 3 or 5 whose sums have equal norm, if any.
pub fn norm_collision<S: Scalar>(
    ball: &UnitBall<S>,
    vectors: &VectorMultiset<S>,
) -> Option<(Vec<usize>, Vec<usize>)> {
    let n = vectors.len();
    let mut norms: Vec<(S, Vec<usize>)> = [3usize, 5]
        .into_iter()
        .filter(|&k| k <= n)
        .flat_map(|k| (0..n).combinations(k))
        .map(|s| (ball.gauge(&vectors.subset_sum(&s)), s))
        .collect();
    norms.sort_by(|a, b| a.0.compare(&b.0));
    norms
        .windows(2)
        .find(|w| w[0].0.compare(&w[1].0) == Ordering::Equal)
        .map(|w| (w[0].1.clone(), w[1].1.clone()))
}

/// [`make_generic_with_budget`] with [`DEFAULT_RETRY_BUDGET`] draws per
/// vector.
pub fn make_generic<S: Scalar>(
    ball: &UnitBall<S>,
    vectors: &VectorMultiset<S>,
    lambda: &S,
    epsilon: &S,
    seed: u64,
) -> Result<VectorMultiset<S>> {
    make_generic_with_budget(ball, vectors, lambda, epsilon, seed, DEFAULT_RETRY_BUDGET)
}

pub fn make_generic_with_budget<S: Scalar>(
    ball: &UnitBall<S>,
    vectors: &VectorMultiset<S>,
    lambda: &S,
    epsilon: &S,
    seed: u64,
    budget: usize,
) -> Result<VectorMultiset<S>> {
    let edges = ball.edge_functionals()?;
    if !lambda.is_positive() || lambda.compare(&S::one()) != Ordering::Less {
        return Err(Error::PreconditionFailed(format!(
            "lambda = {lambda} must lie in (0, 1)"
        )));
    }
    if !epsilon.is_positive() {
        return Err(Error::PreconditionFailed(format!(
            "epsilon = {epsilon} must be positive"
        )));
    }
    for (i, v) in vectors.iter().enumerate() {
        let reach = lambda.clone() * ball.gauge(v) + epsilon.clone();
        if reach.compare(&S::one()) == Ordering::Greater {
            return Err(Error::EpsilonTooLarge(i));
        }
    }
    let mut rng = rng_from_seed(seed);
    let mut chosen: Vec<Vec2<S>> = Vec::with_capacity(vectors.len());
    for (i, v) in vectors.iter().enumerate() {
        let centre = v.scale(lambda);
        let mut accepted = false;
        for _ in 0..budget {
            let r: S = unit_interval(&mut rng, 1000);
            let offset = boundary_point(ball, &mut rng).scale(&(r * epsilon.clone()));
            chosen.push(&centre + &offset);
            if edge_values_distinct(edges, &chosen) {
                accepted = true;
                break;
            }
            chosen.pop();
        }
        if !accepted {
            return Err(Error::SamplingExhausted {
                index: i,
                attempts: budget,
            });
        }
    }
    let result = VectorMultiset::new(chosen);
    if let Some((s, t)) = norm_collision(ball, &result) {
        return Err(Error::TheoremFalsified(format!(
            "subsets {s:?} and {t:?} have equal norms after perturbation"
        )));
    }
    Ok(result)
}
