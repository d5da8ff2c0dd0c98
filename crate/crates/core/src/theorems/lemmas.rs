//! The triangle lemma, the six-vector lemma and the 12-triplet count.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::geometry::in_hull;
use crate::norms::UnitBall;
use crate::scalar::Scalar;
use crate::vector::{Vec2, VectorMultiset};

/// For unit vectors `a, b, c` returns `(0 ∈ T, a + b + c ∈ T)` with
/// `T = conv{a, b, c}` closed. The two flags always agree.
pub fn lemma_conv_check<S: Scalar>(
    ball: &UnitBall<S>,
    a: &Vec2<S>,
    b: &Vec2<S>,
    c: &Vec2<S>,
) -> Result<(bool, bool)> {
    for (i, p) in [a, b, c].into_iter().enumerate() {
        if !ball.is_unit(p) {
            return Err(Error::NotOnBoundary(i));
        }
    }
    let tri = [a.clone(), b.clone(), c.clone()];
    let h = &(a + b) + c;
    Ok((in_hull(&tri, &Vec2::zero()), in_hull(&tri, &h)))
}

/// Lexicographically first triple of six zero-sum vectors in the ball whose
/// sum lies in the ball.
pub fn lemma_main_witness<S: Scalar>(
    ball: &UnitBall<S>,
    z: &VectorMultiset<S>,
) -> Result<[usize; 3]> {
    if z.len() != 6 {
        return Err(Error::PreconditionFailed(format!(
            "expected 6 vectors, got {}",
            z.len()
        )));
    }
    if !z.total().is_zero() {
        return Err(Error::PreconditionFailed(
            "vectors do not sum to zero".into(),
        ));
    }
    if let Some(i) = (0..6).find(|&i| !ball.contains(&z[i])) {
        return Err(Error::PreconditionFailed(format!(
            "vector {i} is outside the ball"
        )));
    }
    (0..6)
        .combinations(3)
        .find(|s| ball.contains(&z.subset_sum(s)))
        .map(|s| [s[0], s[1], s[2]])
        .ok_or_else(|| {
            Error::TheoremFalsified("no 3-sum of the six vectors lies in the ball".into())
        })
}

/// All triples of six zero-sum reals in `[-1, 1]` whose sum is in `[-1, 1]`,
/// in lexicographic order. There are always at least 12.
pub fn claim1_triplets<S: Scalar>(x: &[S]) -> Result<Vec<[usize; 3]>> {
    if x.len() != 6 {
        return Err(Error::PreconditionFailed(format!(
            "expected 6 numbers, got {}",
            x.len()
        )));
    }
    let in_unit = |t: &S| t.abs().compare(&S::one()) != std::cmp::Ordering::Greater;
    if let Some(i) = x.iter().position(|t| !in_unit(t)) {
        return Err(Error::PreconditionFailed(format!(
            "x[{i}] is outside [-1, 1]"
        )));
    }
    let total = x.iter().cloned().fold(S::zero(), |a, b| a + b);
    if !total.is_zero() {
        return Err(Error::PreconditionFailed(
            "numbers do not sum to zero".into(),
        ));
    }
    Ok((0..6)
        .combinations(3)
        .filter(|s| in_unit(&(x[s[0]].clone() + x[s[1]].clone() + x[s[2]].clone())))
        .map(|s| [s[0], s[1], s[2]])
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{Float, Rational};

    fn q(n: i64, d: i64) -> Rational {
        Rational::from_ratio(n, d)
    }

    #[test]
    fn conv_check_examples() {
        let e = UnitBall::<Rational>::Euclidean;
        let r = lemma_conv_check(
            &e,
            &Vec2::from_ints(1, 0),
            &Vec2::from_ints(0, 1),
            &Vec2::from_ints(-1, 0),
        );
        assert_eq!(r.unwrap(), (true, true));

        let s = std::f64::consts::FRAC_1_SQRT_2;
        let ef = UnitBall::<Float>::Euclidean;
        let r = lemma_conv_check(
            &ef,
            &Vec2::new(Float(1.0), Float(0.0)),
            &Vec2::new(Float(0.0), Float(1.0)),
            &Vec2::new(Float(s), Float(s)),
        );
        assert_eq!(r.unwrap(), (false, false));

        let sq = UnitBall::<Rational>::max_norm();
        let r = lemma_conv_check(
            &sq,
            &Vec2::from_ints(1, 1),
            &Vec2::from_ints(-1, 1),
            &Vec2::from_ints(0, -1),
        );
        assert_eq!(r.unwrap(), (true, true));

        let r = lemma_conv_check(
            &sq,
            &Vec2::from_ints(1, 1),
            &Vec2::zero(),
            &Vec2::from_ints(0, -1),
        );
        assert_eq!(r, Err(Error::NotOnBoundary(1)));
    }

    #[test]
    fn main_witness_examples() {
        let sq = UnitBall::<Rational>::max_norm();
        let zeros: VectorMultiset<Rational> = vec![Vec2::zero(); 6].into();
        assert_eq!(lemma_main_witness(&sq, &zeros).unwrap(), [0, 1, 2]);

        let v = Vec2::<Rational>::from_ints(1, 0);
        let z: VectorMultiset<Rational> =
            vec![v.clone(), v.clone(), v.clone(), -&v, -&v, -&v].into();
        assert_eq!(
            lemma_main_witness(&UnitBall::Euclidean, &z).unwrap(),
            [0, 1, 3]
        );

        let mut items = vec![Vec2::from_ints(1, 1), Vec2::from_ints(-1, 1)];
        items.extend(std::iter::repeat_n(Vec2::new(q(0, 1), q(-1, 2)), 4));
        let w = lemma_main_witness(&sq, &items.into()).unwrap();
        assert_eq!(w, [0, 2, 3]);
    }

    #[test]
    fn main_witness_preconditions() {
        let sq = UnitBall::<Rational>::max_norm();
        let z: VectorMultiset<Rational> = vec![Vec2::from_ints(1, 0); 6].into();
        assert!(matches!(
            lemma_main_witness(&sq, &z),
            Err(Error::PreconditionFailed(_))
        ));
        let mut items = vec![Vec2::from_ints(2, 0), Vec2::from_ints(-2, 0)];
        items.extend(std::iter::repeat_n(Vec2::zero(), 4));
        assert!(matches!(
            lemma_main_witness(&sq, &items.into()),
            Err(Error::PreconditionFailed(_))
        ));
    }

    #[test]
    fn claim1_examples() {
        let zeros = vec![q(0, 1); 6];
        assert_eq!(claim1_triplets(&zeros).unwrap().len(), 20);
        let x = vec![q(1, 1), q(-1, 1), q(0, 1), q(0, 1), q(0, 1), q(0, 1)];
        assert_eq!(claim1_triplets(&x).unwrap().len(), 20);
        let bad = vec![q(2, 1), q(-2, 1), q(0, 1), q(0, 1), q(0, 1), q(0, 1)];
        assert!(claim1_triplets(&bad).is_err());
        let nonzero = vec![q(1, 2); 6];
        assert!(claim1_triplets(&nonzero).is_err());
    }
}
