//! Seeded instance generators. Every generator is a pure function of its
//! arguments.

use std::cmp::Ordering;

use rand::Rng;

use crate::norms::{symmetric_hull, UnitBall};
use crate::sample::{
    ball_point, boundary_point, ratio_in, rng_from_seed, unit_interval, SeededRng,
};
use crate::scalar::Scalar;
use crate::vector::{Vec2, VectorMultiset};

/// `n` vectors of gauge exactly 1 (exactly on a polygon, exactly on the
/// circle in exact mode). With `halfplane = Some(u)` every vector satisfies
/// `u . v >= 0`; vectors on the wrong side are negated.
pub fn gen_unit_vectors<S: Scalar>(
    ball: &UnitBall<S>,
    n: usize,
    seed: u64,
    halfplane: Option<&Vec2<S>>,
) -> VectorMultiset<S> {
    let mut rng = rng_from_seed(seed);
    unit_vectors_from(ball, n, &mut rng, halfplane)
}

pub(crate) fn unit_vectors_from<S: Scalar>(
    ball: &UnitBall<S>,
    n: usize,
    rng: &mut SeededRng,
    halfplane: Option<&Vec2<S>>,
) -> VectorMultiset<S> {
    (0..n)
        .map(|_| {
            let v = boundary_point(ball, rng);
            match halfplane {
                Some(u) if u.dot(&v).is_negative() => -v,
                _ => v,
            }
        })
        .collect()
}

/// A random 0-symmetric polygon with at most `max_vertices` vertices.
pub fn gen_random_ball<S: Scalar>(seed: u64, max_vertices: usize) -> UnitBall<S> {
    assert!(
        max_vertices >= 4,
        "a symmetric polygon needs at least 4 vertices"
    );
    let mut rng = rng_from_seed(seed);
    loop {
        let m = rng.gen_range(2..=max_vertices / 2);
        let near_circle = rng.gen_bool(0.5);
        let pts: Vec<Vec2<S>> = (0..m)
            .map(|_| {
                if near_circle {
                    let r: S = ratio_in(&mut rng, 1, 2, 8);
                    crate::sample::circle_point::<S, _>(&mut rng).scale(&(r / S::from_i64(2)))
                } else {
                    Vec2::new(ratio_in(&mut rng, -2, 2, 8), ratio_in(&mut rng, -2, 2, 8))
                }
            })
            .collect();
        if let Ok(ball) = symmetric_hull(&pts) {
            return ball;
        }
    }
}

/// Six vectors in the ball with exactly zero sum.
pub fn gen_zero_sum_six<S: Scalar>(ball: &UnitBall<S>, seed: u64) -> VectorMultiset<S> {
    let mut rng = rng_from_seed(seed);
    loop {
        let mut z: Vec<Vec2<S>> = (0..5).map(|_| ball_point(ball, &mut rng)).collect();
        let last = -crate::vector::sum(&z);
        if ball.cmp_gauge(&last, &S::one()) != Ordering::Greater {
            z.push(last);
            return z.into();
        }
    }
}

/// Six reals in `[-1, 1]` with exactly zero sum.
pub fn gen_zero_sum_reals<S: Scalar>(seed: u64) -> Vec<S> {
    let mut rng = rng_from_seed(seed);
    loop {
        let mut x: Vec<S> = (0..5).map(|_| ratio_in(&mut rng, -1, 1, 24)).collect();
        let last = -x.iter().cloned().fold(S::zero(), |a, b| a + b);
        if last.abs().compare(&S::one()) != Ordering::Greater {
            x.push(last);
            return x;
        }
    }
}

/// Three boundary points.
pub fn gen_boundary_triple<S: Scalar>(ball: &UnitBall<S>, seed: u64) -> [Vec2<S>; 3] {
    let mut rng = rng_from_seed(seed);
    [(); 3].map(|_| boundary_point(ball, &mut rng))
}

/// Unit vectors whose 3-sums all have norm at least 1: halfplane-constrained
/// unit vectors, optionally with an antipodal pair on the bounding line.
pub fn gen_unit_helly<S: Scalar>(
    ball: &UnitBall<S>,
    n: usize,
    seed: u64,
    antipodal: bool,
) -> VectorMultiset<S> {
    let mut rng = rng_from_seed(seed);
    if antipodal && n >= 3 {
        // `u` is chosen perpendicular to a unit vector `v`, so both `v` and
        // `-v` lie on the bounding line.
        let v = boundary_point(ball, &mut rng);
        let u = v.perp();
        let mut rest = unit_vectors_from(ball, n - 2, &mut rng, Some(&u)).into_vec();
        let at = rng.gen_range(0..=rest.len());
        rest.insert(at, -&v);
        rest.insert(rng.gen_range(0..=rest.len()), v);
        return rest.into();
    }
    let u = crate::sample::direction(&mut rng);
    unit_vectors_from(ball, n, &mut rng, Some(&u))
}

/// Collinear unit vectors `+-v`.
pub fn gen_collinear_unit<S: Scalar>(ball: &UnitBall<S>, n: usize, seed: u64) -> VectorMultiset<S> {
    let mut rng = rng_from_seed(seed);
    let v = boundary_point(ball, &mut rng);
    (0..n)
        .map(|_| if rng.gen_bool(0.5) { v.clone() } else { -&v })
        .collect()
}

/// Candidate vectors in the ball for the strict statement. `attempt` widens
/// the search: early attempts use halfplane unit vectors shrunk slightly,
/// later ones narrower cones. The caller checks the hypothesis.
pub fn gen_ball_candidate<S: Scalar>(
    ball: &UnitBall<S>,
    n: usize,
    seed: u64,
    attempt: usize,
    collinear: bool,
) -> VectorMultiset<S> {
    let mut rng = rng_from_seed(seed ^ (attempt as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    if collinear {
        let v = boundary_point(ball, &mut rng);
        let neg = 0.35 / (1.0 + attempt as f64);
        return (0..n)
            .map(|_| {
                let t: S = ratio_in(&mut rng, 0, 1, 12);
                let t = t.max_of(S::from_ratio(1, 12));
                if rng.gen_bool(neg) {
                    v.scale(&-t)
                } else {
                    v.scale(&t)
                }
            })
            .collect();
    }
    let u = crate::sample::direction(&mut rng);
    let shrink_floor = if attempt < 4 { 9 } else { 6 };
    let base = unit_vectors_from(ball, n, &mut rng, Some(&u));
    // From the fourth attempt on, pull every vector toward the first one.
    let pull: S = if attempt < 4 {
        S::zero()
    } else {
        unit_interval(&mut rng, 4)
    };
    base.iter()
        .map(|v| {
            let r: S = ratio_in(&mut rng, shrink_floor, 10, 1);
            let r = r / S::from_i64(10);
            let w = &v.scale(&(S::one() - pull.clone())) + &base[0].scale(&pull);
            // `w` is in the ball by convexity; scaling keeps it there.
            w.scale(&r)
        })
        .collect()
}

/// A symmetric convex polygon (as a vertex list) from random points.
pub fn gen_symmetric_polygon<S: Scalar>(seed: u64, max_vertices: usize) -> Vec<Vec2<S>> {
    match gen_random_ball::<S>(seed, max_vertices) {
        UnitBall::Polygonal(p) => p.vertices().to_vec(),
        UnitBall::Euclidean => unreachable!("random balls are polygonal"),
    }
}

/// A symmetric polygon with one vertex pushed outward by a factor in
/// `[11/10, 3/2]`, which breaks its pairing with the opposite vertex.
pub fn gen_asymmetric_polygon<S: Scalar>(seed: u64, max_vertices: usize) -> Vec<Vec2<S>> {
    let mut verts = gen_symmetric_polygon::<S>(seed, max_vertices);
    let mut rng = rng_from_seed(seed.rotate_left(17));
    let i = rng.gen_range(0..verts.len());
    let r: S = ratio_in(&mut rng, 11, 15, 1);
    verts[i] = verts[i].scale(&(r / S::from_i64(10)));
    verts
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{Float, Rational};

    #[test]
    fn unit_vectors_are_exact_and_in_halfplane() {
        let sq = UnitBall::<Rational>::max_norm();
        let u = Vec2::from_ints(0, 1);
        let v = gen_unit_vectors(&sq, 3, 5, Some(&u));
        assert_eq!(v.len(), 3);
        for p in v.iter() {
            assert_eq!(sq.gauge(p), Rational::from_i64(1));
            assert!(!u.dot(p).is_negative());
        }
        assert_eq!(v, gen_unit_vectors(&sq, 3, 5, Some(&u)));
        let e = gen_unit_vectors(&UnitBall::<Rational>::Euclidean, 9, 1, None);
        assert!(e.iter().all(|p| p.norm_squared() == Rational::from_i64(1)));
    }

    #[test]
    fn random_ball_is_valid_and_deterministic() {
        for seed in 0..50 {
            let b = gen_random_ball::<Rational>(seed, 12);
            let p = b.as_polygon().unwrap();
            assert!(p.vertices().len() <= 12 && p.vertices().len() >= 4);
            assert_eq!(b, gen_random_ball(seed, 12));
        }
    }

    #[test]
    fn zero_sum_six() {
        let b = gen_random_ball::<Rational>(3, 8);
        let z = gen_zero_sum_six(&b, 9);
        assert!(z.total().is_zero());
        assert!(z.iter().all(|p| b.contains(p)));
        let f = gen_zero_sum_six(&UnitBall::<Float>::Euclidean, 9);
        assert!(f.total().is_zero());
    }

    #[test]
    fn zero_sum_reals() {
        let x = gen_zero_sum_reals::<Rational>(4);
        assert!(x
            .iter()
            .cloned()
            .fold(Rational::from_i64(0), |a, b| a + b)
            .is_zero());
    }

    #[test]
    fn antipodal_instances_keep_the_hypothesis() {
        let b = gen_random_ball::<Rational>(8, 10);
        let v = gen_unit_helly(&b, 5, 2, true);
        assert_eq!(v.len(), 5);
        assert!(v.iter().all(|p| b.is_unit(p)));
        assert!((0..5).any(|i| (0..5).any(|j| (&v[i] + &v[j]).is_zero())));
    }

    #[test]
    fn asymmetric_polygon_is_asymmetric() {
        use crate::symmetry::{is_centrally_symmetric, ConvexBody};
        for seed in 0..30 {
            let s = ConvexBody::new(&gen_symmetric_polygon::<Rational>(seed, 12)).unwrap();
            assert!(is_centrally_symmetric(&s));
            let a = ConvexBody::new(&gen_asymmetric_polygon::<Rational>(seed, 12)).unwrap();
            assert!(!is_centrally_symmetric(&a));
        }
    }
}
