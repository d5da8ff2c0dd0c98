//! Central symmetry of convex polygons and explicit witnesses against it.
//!
//! For a convex body `K` with `0` in its interior, either of the following
//! forces `K = -K`:
//!
//! * (i) boundary triples in a closed halfplane through `0` never sum into
//!   `int K`;
//! * (ii) boundary triples surrounding `0` always sum into `int K`.
//!
//! The finders run both proofs backwards on an asymmetric polygon. Each
//! starts from a chord `a c` through the origin with `a + c != 0`. Every
//! returned witness is re-checked by [`verify_witness`] before it is handed
//! out.
//!
//! Chords are taken along vertex directions. If every vertex `v` has `-v` on
//! the boundary, then `-K ⊆ K` and the two have equal area, so `K` is
//! symmetric. The scan is therefore a complete test.

use std::cmp::Ordering;

#[cfg(feature = "parallel")]
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{convex_hull, origin_in_hull, point_position, OriginPosition};
use crate::norms::{polygon_functionals, polygon_gauge, start_at_smallest_angle, EdgeFunctional};
use crate::scalar::Scalar;
use crate::vector::Vec2;

/// Iteration cap for the halving and bisection loops.
pub const SEARCH_CAP: usize = 128;

/// Convex polygon with the origin strictly inside; not necessarily symmetric.
#[derive(Clone, Debug, PartialEq)]
pub struct ConvexBody<S: Scalar> {
    vertices: Vec<Vec2<S>>,
    edges: Vec<EdgeFunctional<S>>,
}

impl<S: Scalar> ConvexBody<S> {
    /// Takes the convex hull of `points`; its vertices become the polygon.
    pub fn new(points: &[Vec2<S>]) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::NotConvexBody("no vertices".into()));
        }
        let mut vertices = convex_hull(points);
        if vertices.len() < 3 {
            return Err(Error::NotConvexBody("vertices are collinear".into()));
        }
        if point_position(&vertices, &Vec2::zero()) != OriginPosition::Interior {
            return Err(Error::NotConvexBody("origin is not strictly inside".into()));
        }
        start_at_smallest_angle(&mut vertices);
        let edges = polygon_functionals(&vertices);
        Ok(Self { vertices, edges })
    }

    pub fn vertices(&self) -> &[Vec2<S>] {
        &self.vertices
    }

    pub fn gauge(&self, z: &Vec2<S>) -> S {
        polygon_gauge(&self.edges, z)
    }

    pub fn on_boundary(&self, z: &Vec2<S>) -> bool {
        self.gauge(z).compare(&S::one()) == Ordering::Equal
    }

    pub fn in_interior(&self, z: &Vec2<S>) -> bool {
        self.gauge(z).compare(&S::one()) == Ordering::Less
    }

    /// The boundary point in direction `d`.
    pub fn boundary_point(&self, d: &Vec2<S>) -> Vec2<S> {
        let g = self.gauge(d);
        Vec2::new(d.x.clone() / g.clone(), d.y.clone() / g)
    }

    /// Intersection of the line `n . x = level` with the boundary, as the
    /// two endpoints ordered along `dir`. `None` when the line misses the
    /// interior.
    fn line_section(&self, n: &Vec2<S>, level: &S, dir: &Vec2<S>) -> Option<(Vec2<S>, Vec2<S>)> {
        let k = self.vertices.len();
        let mut hits: Vec<Vec2<S>> = Vec::new();
        for i in 0..k {
            let (p, q) = (&self.vertices[i], &self.vertices[(i + 1) % k]);
            let (fp, fq) = (n.dot(p) - level.clone(), n.dot(q) - level.clone());
            if fp.is_zero() {
                hits.push(p.clone());
            } else if fp.sign() != fq.sign() && !fq.is_zero() {
                let t = fp.clone() / (fp - fq);
                hits.push(p + &(q - p).scale(&t));
            }
        }
        let lo = hits
            .iter()
            .min_by(|a, b| dir.dot(a).compare(&dir.dot(b)))?
            .clone();
        let hi = hits
            .iter()
            .max_by(|a, b| dir.dot(a).compare(&dir.dot(b)))?
            .clone();
        (dir.dot(&lo).compare(&dir.dot(&hi)) == Ordering::Less).then_some((lo, hi))
    }
}

/// True iff the vertex set equals its negation (within the tolerance for
/// floats).
pub fn is_centrally_symmetric<S: Scalar>(body: &ConvexBody<S>) -> bool {
    let v = body.vertices();
    v.iter().all(|p| {
        let m = -p;
        v.iter().any(|q| q.approx_eq(&m))
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum WitnessKind {
    /// `a, b, c` in a closed halfplane through `0` and `h ∈ int K`.
    HalfplaneInteriorSum,
    /// `0 ∈ int conv{a, b, c}` and `h ∉ int K`.
    SurroundingExteriorSum,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(bound = "")]
pub struct ViolationWitness<S: Scalar> {
    pub a: Vec2<S>,
    pub b: Vec2<S>,
    pub c: Vec2<S>,
    pub h: Vec2<S>,
    pub kind: WitnessKind,
}

/// Re-checks the defining predicate of a witness from scratch.
pub fn verify_witness<S: Scalar>(body: &ConvexBody<S>, w: &ViolationWitness<S>) -> bool {
    let pts = [w.a.clone(), w.b.clone(), w.c.clone()];
    let distinct = !w.a.approx_eq(&w.b) && !w.b.approx_eq(&w.c) && !w.a.approx_eq(&w.c);
    let sum = &(&w.a + &w.b) + &w.c;
    if !distinct || !sum.approx_eq(&w.h) || !pts.iter().all(|p| body.on_boundary(p)) {
        return false;
    }
    let surround = origin_in_hull(&pts) == OriginPosition::Interior;
    match w.kind {
        // Three points lie in a closed halfplane through 0 exactly when 0 is
        // not interior to their hull.
        WitnessKind::HalfplaneInteriorSum => !surround && body.in_interior(&w.h),
        WitnessKind::SurroundingExteriorSum => surround && !body.in_interior(&w.h),
    }
}

/// Chords `(a, c)` through the origin with `a + c != 0`, in scan order.
fn asymmetric_chords<S: Scalar>(body: &ConvexBody<S>) -> Vec<(Vec2<S>, Vec2<S>)> {
    body.vertices()
        .iter()
        .map(|d| (body.boundary_point(d), body.boundary_point(&-d)))
        .filter(|(a, c)| !(a + c).is_zero())
        .collect()
}

/// First `Some` in index order; parallel when the feature is on.
fn first_hit<T: Sync, R: Send>(
    items: &[T],
    f: impl Fn(&T) -> Option<R> + Sync + Send,
) -> Option<R> {
    #[cfg(feature = "parallel")]
    {
        items.par_iter().find_map_first(f)
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().find_map(f)
    }
}

fn halfplane_from_chord<S: Scalar>(
    body: &ConvexBody<S>,
    chord: &(Vec2<S>, Vec2<S>),
) -> Option<ViolationWitness<S>> {
    // `a` is the endpoint closer to 0; `a + c` points away from it.
    let (a, c) = if chord.0.norm_squared().compare(&chord.1.norm_squared()) == Ordering::Less {
        (chord.0.clone(), chord.1.clone())
    } else {
        (chord.1.clone(), chord.0.clone())
    };
    let verts = body.vertices();
    let k = verts.len();
    // An edge containing `a` whose ccw end differs from `a`.
    let i = (0..k).find(|&i| {
        let e = EdgeFunctional::through(&verts[i], &verts[(i + 1) % k]);
        e.eval(&a).compare(&S::one()) == Ordering::Equal && !verts[(i + 1) % k].approx_eq(&a)
    })?;
    let step = &verts[(i + 1) % k] - &a;
    let half = S::from_ratio(1, 2);
    let mut t = half.clone();
    for _ in 0..SEARCH_CAP {
        let b = &a + &step.scale(&t);
        let h = &(&a + &b) + &c;
        let w = ViolationWitness {
            a: a.clone(),
            b,
            c: c.clone(),
            h,
            kind: WitnessKind::HalfplaneInteriorSum,
        };
        if verify_witness(body, &w) {
            return Some(w);
        }
        t = t * half.clone();
    }
    None
}

/// A triple in a closed halfplane through `0` whose sum lies in `int K`;
/// `None` exactly when `K` is symmetric.
pub fn find_violation_halfplane<S: Scalar>(
    body: &ConvexBody<S>,
) -> Result<Option<ViolationWitness<S>>> {
    let chords = asymmetric_chords(body);
    if chords.is_empty() {
        return Ok(None);
    }
    first_hit(&chords, |ch| halfplane_from_chord(body, ch))
        .map(Some)
        .ok_or(Error::SearchBudgetExceeded(SEARCH_CAP))
}

/// The unique vertex maximizing `n . x`, if the maximum is not attained on
/// an edge.
fn unique_extreme<S: Scalar>(verts: &[Vec2<S>], n: &Vec2<S>) -> Option<Vec2<S>> {
    let best = verts.iter().max_by(|a, b| n.dot(a).compare(&n.dot(b)))?;
    let m = n.dot(best);
    (verts
        .iter()
        .filter(|v| n.dot(v).compare(&m) == Ordering::Equal)
        .count()
        == 1)
        .then(|| best.clone())
}

fn surrounding_from_chord<S: Scalar>(
    body: &ConvexBody<S>,
    chord: &(Vec2<S>, Vec2<S>),
) -> Option<ViolationWitness<S>> {
    let (a, c) = chord;
    let dir = c - a;
    let verts = body.vertices();
    let normal = dir.perp();
    let (n, b) = [normal.clone(), -&normal]
        .into_iter()
        .find_map(|n| unique_extreme(verts, &n).map(|b| (n, b)))?;
    // Shift the chord line away from `b` by `s`, halving until the sum leaves
    // the interior.
    let depth = verts
        .iter()
        .map(|v| -n.dot(v))
        .fold(S::zero(), |acc, x| acc.max_of(x));
    let half = S::from_ratio(1, 2);
    let mut s = depth * half.clone();
    for _ in 0..SEARCH_CAP {
        if let Some((a1, c1)) = body.line_section(&n, &-s.clone(), &dir) {
            let h = &(&a1 + &b) + &c1;
            let w = ViolationWitness {
                a: a1,
                b: b.clone(),
                c: c1,
                h,
                kind: WitnessKind::SurroundingExteriorSum,
            };
            if verify_witness(body, &w) {
                return Some(w);
            }
        }
        s = s * half.clone();
    }
    None
}

/// A triple surrounding `0` whose sum is outside `int K`, built from an
/// asymmetric chord; `None` when `K` is symmetric.
pub fn find_violation_surrounding<S: Scalar>(
    body: &ConvexBody<S>,
) -> Result<Option<ViolationWitness<S>>> {
    let mut chords = asymmetric_chords(body);
    if chords.is_empty() {
        return Ok(None);
    }
    // Chords through edge midpoints and slightly turned vertex directions
    // cover the case of edges parallel to every vertex chord.
    let verts = body.vertices();
    let k = verts.len();
    let extra: Vec<Vec2<S>> = (0..k)
        .map(|i| (&verts[i] + &verts[(i + 1) % k]).scale(&S::from_ratio(1, 2)))
        .chain((1..=8).flat_map(|j| {
            let eps = S::from_ratio(1, 1 << j);
            verts.iter().map(move |v| v + &v.perp().scale(&eps))
        }))
        .collect();
    chords.extend(
        extra
            .iter()
            .map(|d| (body.boundary_point(d), body.boundary_point(&-d)))
            .filter(|(a, c)| !(a + c).is_zero()),
    );
    first_hit(&chords, |ch| surrounding_from_chord(body, ch))
        .map(Some)
        .ok_or(Error::SearchBudgetExceeded(SEARCH_CAP))
}

/// Output of a full symmetry check.
#[derive(Clone, Debug, Serialize)]
#[serde(bound = "")]
pub struct SymmetryReport<S: Scalar> {
    pub symmetric: bool,
    pub witness_i: Option<ViolationWitness<S>>,
    pub witness_ii: Option<ViolationWitness<S>>,
}

impl<S: Scalar> SymmetryReport<S> {
    /// The decision agrees with both finders.
    pub fn consistent(&self) -> bool {
        self.symmetric == (self.witness_i.is_none() && self.witness_ii.is_none())
    }
}

pub fn check_symmetry<S: Scalar>(body: &ConvexBody<S>) -> Result<SymmetryReport<S>> {
    Ok(SymmetryReport {
        symmetric: is_centrally_symmetric(body),
        witness_i: find_violation_halfplane(body)?,
        witness_ii: find_violation_surrounding(body)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{Float, Rational};

    fn q(n: i64, d: i64) -> Rational {
        Rational::from_ratio(n, d)
    }

    fn body(pts: &[(i64, i64)]) -> ConvexBody<Rational> {
        let v: Vec<Vec2<Rational>> = pts.iter().map(|&(x, y)| Vec2::from_ints(x, y)).collect();
        ConvexBody::new(&v).unwrap()
    }

    fn triangle() -> ConvexBody<Rational> {
        body(&[(2, -1), (-2, -1), (0, 2)])
    }

    #[test]
    fn square_is_symmetric_without_witnesses() {
        let sq = body(&[(1, 1), (-1, 1), (-1, -1), (1, -1)]);
        assert!(is_centrally_symmetric(&sq));
        let r = check_symmetry(&sq).unwrap();
        assert!(r.symmetric && r.witness_i.is_none() && r.witness_ii.is_none());
    }

    #[test]
    fn hexagon_is_symmetric() {
        let v = vec![
            Vec2::from_ints(1, 1),
            Vec2::new(q(-3, 10), q(7, 5)),
            Vec2::from_ints(-1, 0),
            Vec2::from_ints(-1, -1),
            Vec2::new(q(3, 10), q(-7, 5)),
            Vec2::from_ints(1, 0),
        ];
        assert!(is_centrally_symmetric(&ConvexBody::new(&v).unwrap()));
    }

    #[test]
    fn triangle_has_both_witnesses() {
        let t = triangle();
        assert!(!is_centrally_symmetric(&t));
        let w1 = find_violation_halfplane(&t).unwrap().unwrap();
        assert_eq!(w1.kind, WitnessKind::HalfplaneInteriorSum);
        assert!(verify_witness(&t, &w1));
        assert!(t.gauge(&w1.h) < q(1, 1));
        let w2 = find_violation_surrounding(&t).unwrap().unwrap();
        assert_eq!(w2.kind, WitnessKind::SurroundingExteriorSum);
        assert!(verify_witness(&t, &w2));
        assert_eq!(
            origin_in_hull(&[w2.a.clone(), w2.b.clone(), w2.c.clone()]),
            OriginPosition::Interior
        );
    }

    #[test]
    fn max_norm_touching_triple_is_not_strict() {
        // h = (0, 1) lies on the boundary of the square.
        let sq = body(&[(1, 1), (-1, 1), (-1, -1), (1, -1)]);
        let w = ViolationWitness {
            a: Vec2::from_ints(1, 1),
            b: Vec2::from_ints(-1, 1),
            c: Vec2::from_ints(0, -1),
            h: Vec2::from_ints(0, 1),
            kind: WitnessKind::SurroundingExteriorSum,
        };
        assert!(sq.on_boundary(&w.h));
        // It satisfies the predicate, but the finders never report it for a
        // symmetric body.
        assert!(verify_witness(&sq, &w));
        assert!(find_violation_surrounding(&sq).unwrap().is_none());
    }

    #[test]
    fn bad_witnesses_are_rejected() {
        let t = triangle();
        let mut w = find_violation_halfplane(&t).unwrap().unwrap();
        w.h = &w.h + &Vec2::from_ints(0, 1);
        assert!(!verify_witness(&t, &w));
        let mut w = find_violation_halfplane(&t).unwrap().unwrap();
        w.kind = WitnessKind::SurroundingExteriorSum;
        assert!(!verify_witness(&t, &w));
    }

    #[test]
    fn origin_must_be_interior() {
        let v = [
            Vec2::<Rational>::from_ints(0, 0),
            Vec2::from_ints(1, 0),
            Vec2::from_ints(0, 1),
        ];
        assert!(matches!(ConvexBody::new(&v), Err(Error::NotConvexBody(_))));
    }

    #[test]
    fn parallel_edges_fall_back_to_other_chords() {
        // Off-centre rectangle: every vertex chord meets edges parallel to it
        // only by accident; the finders must still succeed.
        let r = body(&[(3, 1), (-1, 1), (-1, -2), (3, -2)]);
        assert!(!is_centrally_symmetric(&r));
        let w = find_violation_surrounding(&r).unwrap().unwrap();
        assert!(verify_witness(&r, &w));
        assert!(verify_witness(
            &r,
            &find_violation_halfplane(&r).unwrap().unwrap()
        ));
    }

    #[test]
    fn float_triangle() {
        let v: Vec<Vec2<Float>> = [(2.0, -1.0), (-2.0, -1.0), (0.0, 2.0)]
            .iter()
            .map(|&(x, y)| Vec2::new(Float(x), Float(y)))
            .collect();
        let t = ConvexBody::new(&v).unwrap();
        let r = check_symmetry(&t).unwrap();
        assert!(!r.symmetric && r.consistent());
    }
}
