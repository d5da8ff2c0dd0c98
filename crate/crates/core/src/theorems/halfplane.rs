//! Odd sums of unit vectors lying in a closed halfplane, and the projection
//! certificate that proves their sum has norm at least 1.

use std::cmp::Ordering;

use serde::Serialize;

use super::ksum::KSum;
use super::report::{TheoremId, VerifyReport};
use crate::error::{Error, Result};
use crate::norms::{EdgeFunctional, UnitBall};
use crate::scalar::Scalar;
use crate::vector::{Vec2, VectorMultiset};

struct HalfplaneHypothesis {
    odd: bool,
    non_unit: Vec<usize>,
    outside: Vec<usize>,
}

impl HalfplaneHypothesis {
    fn check<S: Scalar>(ball: &UnitBall<S>, v: &VectorMultiset<S>, u: &Vec2<S>) -> Self {
        Self {
            odd: v.len() % 2 == 1,
            non_unit: (0..v.len()).filter(|&i| !ball.is_unit(&v[i])).collect(),
            outside: (0..v.len())
                .filter(|&i| u.dot(&v[i]).is_negative())
                .collect(),
        }
    }

    fn holds(&self) -> bool {
        self.odd && self.non_unit.is_empty() && self.outside.is_empty()
    }

    fn describe(&self) -> String {
        let mut parts = Vec::new();
        if !self.odd {
            parts.push("even number of vectors".to_string());
        }
        if !self.non_unit.is_empty() {
            parts.push(format!("non-unit vectors {:?}", self.non_unit));
        }
        if !self.outside.is_empty() {
            parts.push(format!("vectors outside the halfplane {:?}", self.outside));
        }
        parts.join("; ")
    }
}

/// Checks an instance of the halfplane theorem: an odd number of unit
/// vectors with `u . v_i >= 0` sums to a vector of norm at least 1.
pub fn verify_theorem1<S: Scalar>(
    ball: &UnitBall<S>,
    vectors: &VectorMultiset<S>,
    u: &Vec2<S>,
) -> Result<VerifyReport<S>> {
    if u.is_zero() {
        return Err(Error::ZeroDirection);
    }
    let hyp = HalfplaneHypothesis::check(ball, vectors, u);
    let total = vectors.total();
    let total_norm = ball.gauge(&total);
    let conclusion_holds = ball.cmp_gauge(&total, &S::one()) != Ordering::Less;
    let mut bad: Vec<usize> = hyp.non_unit.iter().chain(&hyp.outside).copied().collect();
    bad.sort_unstable();
    bad.dedup();
    let mut witnesses: Vec<KSum<S>> = bad
        .into_iter()
        .map(|i| KSum::of(vectors, vec![i]))
        .collect();
    if hyp.holds() && !conclusion_holds {
        witnesses.push(KSum::of(vectors, (0..vectors.len()).collect()));
    }
    Ok(VerifyReport {
        theorem: TheoremId::T1,
        hypothesis_holds: hyp.holds(),
        conclusion_holds,
        total,
        total_norm,
        witnesses,
        notes: hyp.describe(),
    })
}

/// Projection certificate for an instance of the halfplane theorem.
///
/// `tangent` supports the ball at the middle vector (in angular order); the
/// projection of a vector onto the line through that vector, along the
/// tangent line, has signed length `tangent.eval(v)`. A projection sum of at
/// least 1 places the total in the halfplane beyond the tangent line, hence
/// outside the open unit ball.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(bound = "")]
pub struct Certificate<S: Scalar> {
    /// Input index of the middle vector.
    pub k: usize,
    /// Input indices in angular order.
    pub order: Vec<usize>,
    pub u: Vec2<S>,
    pub tangent: EdgeFunctional<S>,
    /// Projections in input order.
    #[serde(serialize_with = "ser_scalars")]
    pub projections: Vec<S>,
    #[serde(serialize_with = "crate::io::ser_scalar")]
    pub projection_sum: S,
}

fn ser_scalars<S: Scalar, Z: serde::Serializer>(v: &[S], s: Z) -> Result<Z::Ok, Z::Error> {
    s.collect_seq(v.iter().map(|x| x.to_string()))
}

/// Angular order inside the closed halfplane `u . p >= 0`, starting from `u`
/// turned clockwise by a quarter and sweeping counterclockwise. Vectors on the
/// starting ray come first, those on the opposite ray last; ties keep input
/// order.
pub fn halfplane_order<S: Scalar>(vectors: &[Vec2<S>], u: &Vec2<S>) -> Vec<usize> {
    let start = Vec2::new(u.y.clone(), -u.x.clone());
    let class = |p: &Vec2<S>| -> u8 {
        if u.dot(p).is_positive() {
            1
        } else if start.dot(p).is_positive() {
            0
        } else {
            2
        }
    };
    let mut order: Vec<usize> = (0..vectors.len()).collect();
    order.sort_by(|&i, &j| {
        let (a, b) = (&vectors[i], &vectors[j]);
        class(a).cmp(&class(b)).then_with(|| {
            if class(a) == 1 {
                b.cross(a).sign()
            } else {
                Ordering::Equal
            }
        })
    });
    order
}

/// Builds the projection certificate; fails when the hypothesis of the
/// halfplane theorem does not hold.
pub fn halfplane_certificate<S: Scalar>(
    ball: &UnitBall<S>,
    vectors: &VectorMultiset<S>,
    u: &Vec2<S>,
) -> Result<Certificate<S>> {
    if u.is_zero() {
        return Err(Error::ZeroDirection);
    }
    let hyp = HalfplaneHypothesis::check(ball, vectors, u);
    if !hyp.holds() {
        return Err(Error::HypothesisFailed(hyp.describe()));
    }
    let order = halfplane_order(vectors.as_slice(), u);
    let k = order[vectors.len() / 2];
    let tangent = ball.supporting_functional(&vectors[k]);
    let projections: Vec<S> = vectors.iter().map(|v| tangent.eval(v)).collect();
    let projection_sum = projections.iter().cloned().fold(S::zero(), |a, b| a + b);
    if projection_sum.compare(&S::one()) == Ordering::Less {
        return Err(Error::TheoremFalsified(format!(
            "projection sum {projection_sum} < 1"
        )));
    }
    // The tangent functional is dominated by the norm.
    let total = vectors.total();
    if ball.cmp_gauge(&total, &projection_sum) == Ordering::Less
        || ball.cmp_gauge(&total, &S::one()) == Ordering::Less
    {
        return Err(Error::TheoremFalsified(format!(
            "norm of the sum {total} is below the projection sum {projection_sum}"
        )));
    }
    Ok(Certificate {
        k,
        order,
        u: u.clone(),
        tangent,
        projections,
        projection_sum,
    })
}
