//! The two Helly-type statements (3-sums control the full sum) and the
//! k-sum corollary.

use std::cmp::Ordering;

use itertools::Itertools;

use super::ksum::KSum;
use super::report::{TheoremId, VerifyReport};
use crate::error::{Error, Result};
use crate::geometry::all_collinear_with_origin;
use crate::norms::UnitBall;
use crate::scalar::Scalar;
use crate::vector::{Vec2, VectorMultiset};

/// Vectors on a common line through the origin, as signed coordinates along a
/// fixed direction. The ball meets the line in `[-m, m]` with `m = 1 / ‖dir‖`;
/// comparisons against `m` go through the ball so they stay exact.
pub struct LineInstance<'a, S: Scalar> {
    ball: &'a UnitBall<S>,
    dir: Vec2<S>,
    pub coords: Vec<S>,
}

impl<'a, S: Scalar> LineInstance<'a, S> {
    /// `None` unless every vector lies on one line through the origin.
    pub fn new(ball: &'a UnitBall<S>, vectors: &VectorMultiset<S>) -> Option<Self> {
        if !all_collinear_with_origin(vectors.as_slice()) {
            return None;
        }
        let dir = vectors
            .iter()
            .find(|v| !v.is_zero())
            .cloned()
            .unwrap_or_else(|| Vec2::from_ints(1, 0));
        let n2 = dir.norm_squared();
        let coords = vectors.iter().map(|v| v.dot(&dir) / n2.clone()).collect();
        Some(Self { ball, dir, coords })
    }

    /// Compares `|t|` with the half-length `m` of the ball's chord.
    pub fn cmp_half_length(&self, t: &S) -> Ordering {
        self.ball.cmp_gauge(&self.dir.scale(&t.abs()), &S::one())
    }

    pub fn point(&self, t: &S) -> Vec2<S> {
        self.dir.scale(t)
    }
}

fn check_odd_at_least_three(n: usize) -> Result<()> {
    if n < 3 {
        return Err(Error::TooFew { need: 3, got: n });
    }
    if n.is_multiple_of(2) {
        return Err(Error::EvenCardinality(n));
    }
    Ok(())
}

/// Checks a Helly-type instance.
///
/// `strict = false`: all vectors are unit vectors and every 3-sum has norm at
/// least 1, so the full sum has norm at least 1.
/// `strict = true`: all vectors lie in the ball and every 3-sum has norm
/// larger than 1, so the full sum has norm larger than 1.
///
/// Collinear inputs are evaluated on signed coordinates along their line.
pub fn verify_helly<S: Scalar>(
    ball: &UnitBall<S>,
    vectors: &VectorMultiset<S>,
    strict: bool,
) -> Result<VerifyReport<S>> {
    check_odd_at_least_three(vectors.len())?;
    match LineInstance::new(ball, vectors) {
        Some(line) => Ok(verify_helly_on_line(&line, vectors, strict)),
        None => Ok(verify_helly_planar(ball, vectors, strict)),
    }
}

fn theorem_id(strict: bool) -> TheoremId {
    if strict {
        TheoremId::T3
    } else {
        TheoremId::T2
    }
}

/// Whether a vector with the given comparison against 1 passes the
/// membership part of the hypothesis.
fn member_ok(cmp: Ordering, strict: bool) -> bool {
    if strict {
        cmp != Ordering::Greater
    } else {
        cmp == Ordering::Equal
    }
}

/// Whether a 3-sum (or the total) with the given comparison against 1 is
/// large enough.
fn large_ok(cmp: Ordering, strict: bool) -> bool {
    if strict {
        cmp == Ordering::Greater
    } else {
        cmp != Ordering::Less
    }
}

fn assemble<S: Scalar>(
    ball: &UnitBall<S>,
    vectors: &VectorMultiset<S>,
    strict: bool,
    members_bad: Vec<usize>,
    triples_bad: Vec<Vec<usize>>,
    total_cmp: Ordering,
    notes: Vec<String>,
) -> VerifyReport<S> {
    let hypothesis_holds = members_bad.is_empty() && triples_bad.is_empty();
    let conclusion_holds = large_ok(total_cmp, strict);
    let mut notes = notes;
    if !members_bad.is_empty() {
        let what = if strict {
            "outside the ball"
        } else {
            "not unit"
        };
        notes.push(format!("vectors {what}: {members_bad:?}"));
    }
    if !triples_bad.is_empty() {
        notes.push(format!("{} violating 3-sums", triples_bad.len()));
    }
    let mut witnesses: Vec<KSum<S>> = triples_bad
        .into_iter()
        .map(|s| KSum::of(vectors, s))
        .collect();
    if hypothesis_holds && !conclusion_holds {
        witnesses.push(KSum::of(vectors, (0..vectors.len()).collect()));
    }
    let total = vectors.total();
    VerifyReport {
        theorem: theorem_id(strict),
        hypothesis_holds,
        conclusion_holds,
        total_norm: ball.gauge(&total),
        total,
        witnesses,
        notes: notes.join("; "),
    }
}

fn verify_helly_planar<S: Scalar>(
    ball: &UnitBall<S>,
    vectors: &VectorMultiset<S>,
    strict: bool,
) -> VerifyReport<S> {
    let one = S::one();
    let members_bad = (0..vectors.len())
        .filter(|&i| !member_ok(ball.cmp_gauge(&vectors[i], &one), strict))
        .collect();
    let triples_bad = (0..vectors.len())
        .combinations(3)
        .filter(|s| !large_ok(ball.cmp_gauge(&vectors.subset_sum(s), &one), strict))
        .collect();
    let total_cmp = ball.cmp_gauge(&vectors.total(), &one);
    assemble(
        ball,
        vectors,
        strict,
        members_bad,
        triples_bad,
        total_cmp,
        Vec::new(),
    )
}

fn verify_helly_on_line<S: Scalar>(
    line: &LineInstance<'_, S>,
    vectors: &VectorMultiset<S>,
    strict: bool,
) -> VerifyReport<S> {
    let x = &line.coords;
    let members_bad = (0..x.len())
        .filter(|&i| !member_ok(line.cmp_half_length(&x[i]), strict))
        .collect();
    let triples_bad = (0..x.len())
        .combinations(3)
        .filter(|s| {
            let t = s.iter().fold(S::zero(), |a, &i| a + x[i].clone());
            !large_ok(line.cmp_half_length(&t), strict)
        })
        .collect();
    let total = x.iter().cloned().fold(S::zero(), |a, b| a + b);
    let total_cmp = line.cmp_half_length(&total);
    let mut notes = vec!["collinear instance".to_string()];
    if strict {
        if let Some(bound) = sorted_line_bound(line) {
            notes.push(format!("x1 + x(n-1) + xn = {bound}"));
        }
    }
    assemble(
        line.ball,
        vectors,
        strict,
        members_bad,
        triples_bad,
        total_cmp,
        notes,
    )
}

/// For collinear input sorted as `x1 >= ... >= xn` and oriented so that
/// `x1 >= |xn|`, the 3-sum `x1 + x(n-1) + xn`, which bounds the full sum
/// from below once `x(n-1) > 0`.
pub fn sorted_line_bound<S: Scalar>(line: &LineInstance<'_, S>) -> Option<S> {
    let mut x = line.coords.clone();
    let n = x.len();
    if n < 3 {
        return None;
    }
    x.sort_by(|a, b| b.compare(a));
    if x[0].compare(&x[n - 1].abs()) == Ordering::Less {
        x = x.into_iter().rev().map(|t| -t).collect();
    }
    Some(x[0].clone() + x[n - 2].clone() + x[n - 1].clone())
}

/// Checks the corollary: if every vector lies in the ball and every 3-sum is
/// outside it, then every odd `k`-sum with `k > 3` is outside it too.
pub fn corollary_check<S: Scalar>(
    ball: &UnitBall<S>,
    vectors: &VectorMultiset<S>,
    k: usize,
) -> Result<VerifyReport<S>> {
    let n = vectors.len();
    if n < 5 {
        return Err(Error::TooFew { need: 5, got: n });
    }
    if k.is_multiple_of(2) || k <= 3 || k > n {
        return Err(Error::BadK { k, n });
    }
    let one = S::one();
    let members_bad: Vec<usize> = (0..n).filter(|&i| !ball.contains(&vectors[i])).collect();
    let triples_bad: Vec<Vec<usize>> = (0..n)
        .combinations(3)
        .filter(|s| ball.cmp_gauge(&vectors.subset_sum(s), &one) != Ordering::Greater)
        .collect();
    let hypothesis_holds = members_bad.is_empty() && triples_bad.is_empty();
    let failing_k: Vec<Vec<usize>> = (0..n)
        .combinations(k)
        .filter(|s| ball.cmp_gauge(&vectors.subset_sum(s), &one) != Ordering::Greater)
        .collect();
    let conclusion_holds = failing_k.is_empty();
    let mut notes = vec![format!("k = {k}")];
    if !members_bad.is_empty() {
        notes.push(format!("vectors outside the ball: {members_bad:?}"));
    }
    if !triples_bad.is_empty() {
        notes.push(format!("{} 3-sums inside the ball", triples_bad.len()));
    }
    if !failing_k.is_empty() {
        notes.push(format!("{} {k}-sums inside the ball", failing_k.len()));
    }
    let witnesses = triples_bad
        .into_iter()
        .chain(failing_k)
        .map(|s| KSum::of(vectors, s))
        .collect();
    let total = vectors.total();
    Ok(VerifyReport {
        theorem: TheoremId::Corollary,
        hypothesis_holds,
        conclusion_holds,
        total_norm: ball.gauge(&total),
        total,
        witnesses,
        notes: notes.join("; "),
    })
}
