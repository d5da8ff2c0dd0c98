//! Seeded random sampling of scalars and boundary points.
//!
//! Exact scalars get small-denominator rationals so that sampled points sit
//! exactly where they should (on the boundary, inside the ball).

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::norms::UnitBall;
use crate::scalar::Scalar;
use crate::vector::Vec2;

pub type SeededRng = ChaCha8Rng;

pub fn rng_from_seed(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A rational `a / den` with `a` uniform in `lo*den ..= hi*den`.
pub fn ratio_in<S: Scalar, R: Rng>(rng: &mut R, lo: i64, hi: i64, den: i64) -> S {
    S::from_ratio(rng.gen_range(lo * den..=hi * den), den)
}

/// A number in `[0, 1]` with a random denominator up to `max_den`.
pub fn unit_interval<S: Scalar, R: Rng>(rng: &mut R, max_den: i64) -> S {
    let den = rng.gen_range(1..=max_den);
    S::from_ratio(rng.gen_range(0..=den), den)
}

/// A uniformly chosen point exactly on the unit circle (rational over exact
/// scalars, by the tangent half-angle parametrization).
pub fn circle_point<S: Scalar, R: Rng>(rng: &mut R) -> Vec2<S> {
    if S::EXACT {
        let den = rng.gen_range(1..=12i64);
        let t: S = S::from_ratio(rng.gen_range(-4 * den..=4 * den), den);
        let t2 = t.clone() * t.clone();
        let d = S::one() + t2.clone();
        let p = Vec2::new((S::one() - t2) / d.clone(), (S::from_i64(2) * t) / d);
        if rng.gen_bool(0.5) {
            -p
        } else {
            p
        }
    } else {
        let a: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
        Vec2::new(S::from_f64(a.cos()), S::from_f64(a.sin()))
    }
}

/// A point on the boundary of the ball. Polygon samples are rational convex
/// combinations of adjacent vertices; a quarter of them are vertices.
pub fn boundary_point<S: Scalar, R: Rng>(ball: &UnitBall<S>, rng: &mut R) -> Vec2<S> {
    match ball {
        UnitBall::Euclidean => circle_point(rng),
        UnitBall::Polygonal(p) => {
            let verts = p.vertices();
            let i = rng.gen_range(0..verts.len());
            if rng.gen_bool(0.25) {
                return verts[i].clone();
            }
            let (a, b) = (&verts[i], &verts[(i + 1) % verts.len()]);
            let t: S = unit_interval(rng, 16);
            a + &(b - a).scale(&t)
        }
    }
}

/// A point of the ball: a boundary point scaled by a rational in `[0, 1]`.
pub fn ball_point<S: Scalar, R: Rng>(ball: &UnitBall<S>, rng: &mut R) -> Vec2<S> {
    let r: S = unit_interval(rng, 12);
    boundary_point(ball, rng).scale(&r)
}

/// A non-zero direction with small integer coordinates.
pub fn direction<S: Scalar, R: Rng>(rng: &mut R) -> Vec2<S> {
    loop {
        let (x, y) = (rng.gen_range(-6..=6i64), rng.gen_range(-6..=6i64));
        if x != 0 || y != 0 {
            return Vec2::from_ints(x, y);
        }
    }
}
