//! Analytic intersection routines.
//!
//! These are the only places coordinates of new points are ever computed, and
//! they are shared verbatim by the executor, the verifier and the oracle, so
//! that replaying a trace reproduces bit-identical results. Multi-valued
//! results are always returned in (x, y)-lexicographic order.

use crate::numerics::predicates::NumCtx;
use crate::numerics::{sort_points_lex, Circle2, Line2, NumError, Point2, Scalar, Segment2};

/// Result of intersecting two unbounded lines.
#[derive(Debug, Clone)]
pub enum LineLine {
    Point(Point2),
    Parallel,
    Coincident,
}

/// Result of intersecting two closed segments.
#[derive(Debug, Clone)]
pub enum SegCross {
    One(Point2),
    None,
    /// Collinear segments sharing more than a single point.
    CollinearOverlap,
}

/// The point at distance exactly 1 from `from` in the direction of `toward`.
///
/// This realizes laying a stick with one end at a known point, aimed through a
/// second point that may be nearer or farther than the stick is long.
pub fn unit_point_on_ray(from: &Point2, toward: &Point2, ctx: &NumCtx) -> Result<Point2, NumError> {
    let d = toward.sub(from);
    if ctx.points_equal(from, toward) {
        return Err(NumError::DegenerateDirection);
    }
    let n = d.norm();
    let inv = Scalar::one(n.precision()) / &n;
    Ok(from.add(&d.scale(&inv)))
}

/// Intersection of two unbounded lines with predicate-level parallel test.
pub fn line_line(a: &Line2, b: &Line2, ctx: &NumCtx) -> Result<LineLine, NumError> {
    let denom = a.dir.cross(&b.dir);
    if ctx.scalar_equal(&denom, &Scalar::zero(denom.precision())) {
        let off = a.signed_dist(&b.anchor);
        if ctx.scalar_equal(&off, &Scalar::zero(off.precision())) {
            return Ok(LineLine::Coincident);
        }
        return Ok(LineLine::Parallel);
    }
    // a.anchor + t * a.dir with t = (b.anchor - a.anchor) x b.dir / denom.
    let t = b.anchor.sub(&a.anchor).cross(&b.dir) / &denom;
    Ok(LineLine::Point(a.point_at(&t)))
}

/// Intersection of two closed segments.
pub fn segment_intersection(s: &Segment2, t: &Segment2, ctx: &NumCtx) -> Result<SegCross, NumError> {
    let la = Line2::through(&s.a, &s.b, ctx)?;
    let lb = Line2::through(&t.a, &t.b, ctx)?;
    match line_line(&la, &lb, ctx)? {
        LineLine::Parallel => Ok(SegCross::None),
        LineLine::Coincident => {
            // Project t onto la's coordinate and check interval overlap.
            let (mut s0, mut s1) = (la.param_of(&s.a), la.param_of(&s.b));
            if s0 > s1 {
                std::mem::swap(&mut s0, &mut s1);
            }
            let (mut t0, mut t1) = (la.param_of(&t.a), la.param_of(&t.b));
            if t0 > t1 {
                std::mem::swap(&mut t0, &mut t1);
            }
            let lo = s0.max(t0);
            let hi = s1.min(t1);
            if lo > hi {
                Ok(SegCross::None)
            } else if ctx.scalar_equal(&lo, &hi) {
                Ok(SegCross::One(la.point_at(&lo)))
            } else {
                Ok(SegCross::CollinearOverlap)
            }
        }
        LineLine::Point(p) => {
            if on_segment_param(&la, &s.a, &s.b, &p, ctx) && on_segment_param(&lb, &t.a, &t.b, &p, ctx)
            {
                Ok(SegCross::One(p))
            } else {
                Ok(SegCross::None)
            }
        }
    }
}

fn on_segment_param(l: &Line2, a: &Point2, b: &Point2, p: &Point2, ctx: &NumCtx) -> bool {
    let (mut lo, mut hi) = (l.param_of(a), l.param_of(b));
    if lo > hi {
        std::mem::swap(&mut lo, &mut hi);
    }
    let u = l.param_of(p);
    let e = &ctx.eps_eq;
    u >= &lo - e && u <= &hi + e
}

/// Intersections of the unit circle about `center` with the closed segment
/// `[seg.a, seg.b]`, sorted lexicographically. This is the primitive behind
/// the compass postulate: the stick pivots about `center` and is matched
/// against a single other stick.
pub fn unit_circle_segment(
    center: &Point2,
    seg: &Segment2,
    ctx: &NumCtx,
) -> Result<Vec<Point2>, NumError> {
    let circle = Circle2::new(center.clone(), Scalar::one(ctx.precision));
    let line = Line2::through(&seg.a, &seg.b, ctx)?;
    let mut hits = circle_line(&circle, &line, ctx)?;
    hits.retain(|p| on_segment_param(&line, &seg.a, &seg.b, p, ctx));
    Ok(hits)
}

/// Intersections of a circle with an unbounded line, sorted lexicographically.
///
/// Tangency is decided with the predicate tolerance: if the center-to-line
/// distance is within `eps_eq` of the radius the result is the single foot
/// point.
pub fn circle_line(circle: &Circle2, line: &Line2, ctx: &NumCtx) -> Result<Vec<Point2>, NumError> {
    let foot = line.foot_of(&circle.center);
    let d = line.signed_dist(&circle.center).abs();
    match ctx.cmp_scalar(&d, &circle.radius)? {
        crate::numerics::Cmp::Greater => Ok(vec![]),
        crate::numerics::Cmp::Equal => Ok(vec![foot]),
        crate::numerics::Cmp::Less => {
            let h = (circle.radius.square() - d.square()).sqrt();
            let mut pts = vec![
                foot.add(&line.dir.scale(&h)),
                foot.sub(&line.dir.scale(&h)),
            ];
            sort_points_lex(&mut pts);
            Ok(pts)
        }
    }
}

/// Intersections of two circles, sorted lexicographically.
///
/// Computed via the radical line: the locus of equal power with respect to
/// both circles, intersected with the first circle.
pub fn circle_circle(a: &Circle2, b: &Circle2, ctx: &NumCtx) -> Result<Vec<Point2>, NumError> {
    let delta = b.center.sub(&a.center);
    let d2 = delta.norm2();
    if ctx.points_equal(&a.center, &b.center) {
        if ctx.scalar_equal(&a.radius, &b.radius) {
            return Err(NumError::CoincidentCircles);
        }
        return Ok(vec![]);
    }
    // Radical line: 2 (b-a)·x = |b|^2 - |a|^2 + r_a^2 - r_b^2, rewritten as a
    // line through the point at parameter t along the center line.
    let t = (&d2 + a.radius.square() - b.radius.square()).half() / &d2;
    let anchor = a.center.add(&delta.scale(&t));
    let radical = Line2::from_anchor_dir(anchor, delta.perp());
    circle_line(a, &radical, ctx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::Config;
    use crate::numerics::Cmp;

    fn ctx() -> NumCtx {
        NumCtx::new(&Config::default())
    }

    fn pt(x: f64, y: f64) -> Point2 {
        Point2::from_f64(x, y, 256)
    }

    fn close(p: &Point2, x: f64, y: f64) {
        let q = pt(x, y);
        // Expected values are given as f64 literals, so compare at f64 scale.
        let d = p.dist(&q);
        assert!(d < Scalar::pow2(-40, 64), "{p:?} vs ({x}, {y}), off by {d:?}");
    }

    #[test]
    fn unit_point_on_ray_scales_correctly() {
        let c = ctx();
        let p = unit_point_on_ray(&pt(0.0, 0.0), &pt(3.0, 4.0), &c).unwrap();
        close(&p, 0.6, 0.8);
        // Aiming at a point closer than 1 extends past it.
        let q = unit_point_on_ray(&pt(0.0, 0.0), &pt(0.3, 0.4), &c).unwrap();
        close(&q, 0.6, 0.8);
    }

    #[test]
    fn line_line_cases() {
        let c = ctx();
        let la = Line2::through(&pt(0.0, 0.0), &pt(1.0, 1.0), &c).unwrap();
        let lb = Line2::through(&pt(1.0, 0.0), &pt(0.0, 1.0), &c).unwrap();
        match line_line(&la, &lb, &c).unwrap() {
            LineLine::Point(p) => close(&p, 0.5, 0.5),
            other => panic!("expected point, got {other:?}"),
        }
        let lc = Line2::through(&pt(0.0, 1.0), &pt(1.0, 2.0), &c).unwrap();
        assert!(matches!(line_line(&la, &lc, &c).unwrap(), LineLine::Parallel));
        let ld = Line2::through(&pt(2.0, 2.0), &pt(3.0, 3.0), &c).unwrap();
        assert!(matches!(line_line(&la, &ld, &c).unwrap(), LineLine::Coincident));
    }

    #[test]
    fn segment_intersection_cases() {
        let c = ctx();
        let s = Segment2::new(pt(0.0, 0.0), pt(2.0, 2.0));
        let t = Segment2::new(pt(0.0, 2.0), pt(2.0, 0.0));
        match segment_intersection(&s, &t, &c).unwrap() {
            SegCross::One(p) => close(&p, 1.0, 1.0),
            other => panic!("expected one, got {other:?}"),
        }
        // Crossing point outside one of the segments.
        let u = Segment2::new(pt(3.0, 0.0), pt(3.0, 5.0));
        assert!(matches!(segment_intersection(&s, &u, &c).unwrap(), SegCross::None));
        // Collinear with overlap.
        let v = Segment2::new(pt(1.0, 1.0), pt(3.0, 3.0));
        assert!(matches!(
            segment_intersection(&s, &v, &c).unwrap(),
            SegCross::CollinearOverlap
        ));
        // Collinear touching at a single endpoint.
        let w = Segment2::new(pt(2.0, 2.0), pt(3.0, 3.0));
        match segment_intersection(&s, &w, &c).unwrap() {
            SegCross::One(p) => close(&p, 2.0, 2.0),
            other => panic!("expected touch point, got {other:?}"),
        }
    }

    #[test]
    fn unit_circle_segment_hits() {
        let c = ctx();
        // Vertical chord x = 0.6 of the unit circle at the origin.
        let seg = Segment2::new(pt(0.6, -2.0), pt(0.6, 2.0));
        let hits = unit_circle_segment(&pt(0.0, 0.0), &seg, &c).unwrap();
        assert_eq!(hits.len(), 2);
        close(&hits[0], 0.6, -0.8);
        close(&hits[1], 0.6, 0.8);
        // Clip to a half-chord: only the upper hit remains.
        let seg = Segment2::new(pt(0.6, 0.0), pt(0.6, 2.0));
        let hits = unit_circle_segment(&pt(0.0, 0.0), &seg, &c).unwrap();
        assert_eq!(hits.len(), 1);
        close(&hits[0], 0.6, 0.8);
        // Tangent segment.
        let seg = Segment2::new(pt(1.0, -1.0), pt(1.0, 1.0));
        let hits = unit_circle_segment(&pt(0.0, 0.0), &seg, &c).unwrap();
        assert_eq!(hits.len(), 1);
        close(&hits[0], 1.0, 0.0);
        // Miss.
        let seg = Segment2::new(pt(2.0, -1.0), pt(2.0, 1.0));
        assert!(unit_circle_segment(&pt(0.0, 0.0), &seg, &c).unwrap().is_empty());
    }

    #[test]
    fn circle_line_through_expected_points() {
        let c = ctx();
        // Circle centered (0, 1) through (1, 2): radius sqrt(2); meets y = 0
        // at (-1, 0) and (1, 0).
        let circle = Circle2::new(pt(0.0, 1.0), Scalar::from_i64(2, 256).sqrt());
        let line = Line2::through(&pt(-5.0, 0.0), &pt(5.0, 0.0), &c).unwrap();
        let hits = circle_line(&circle, &line, &c).unwrap();
        assert_eq!(hits.len(), 2);
        close(&hits[0], -1.0, 0.0);
        close(&hits[1], 1.0, 0.0);
    }

    #[test]
    fn circle_circle_through_expected_points() {
        let c = ctx();
        // Circles (0,0,r=2) and (3,0,r=3) meet at (2/3, ±4*sqrt(2)/3).
        let a = Circle2::new(pt(0.0, 0.0), Scalar::from_i64(2, 256));
        let b = Circle2::new(pt(3.0, 0.0), Scalar::from_i64(3, 256));
        let hits = circle_circle(&a, &b, &c).unwrap();
        assert_eq!(hits.len(), 2);
        let y = (Scalar::from_i64(32, 256).sqrt() / Scalar::from_i64(3, 256)).to_f64();
        close(&hits[0], 2.0 / 3.0, -y);
        close(&hits[1], 2.0 / 3.0, y);
        // Each intersection point has equal power with respect to both.
        for p in &hits {
            assert_eq!(c.cmp_distance(p, &a.center, &a.radius).unwrap(), Cmp::Equal);
            assert_eq!(c.cmp_distance(p, &b.center, &b.radius).unwrap(), Cmp::Equal);
        }
        // Disjoint circles.
        let far = Circle2::new(pt(10.0, 0.0), Scalar::one(256));
        assert!(circle_circle(&a, &far, &c).unwrap().is_empty());
        // Coincident circles are an error.
        assert!(matches!(
            circle_circle(&a, &a.clone(), &c),
            Err(NumError::CoincidentCircles)
        ));
    }

    #[test]
    fn circle_circle_agrees_with_distance_check_on_random_pairs() {
        use rand::{Rng, SeedableRng};
        let c = ctx();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        for _ in 0..1000 {
            let a = Circle2::new(
                pt(rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0)),
                Scalar::from_f64(rng.gen_range(0.1..4.0), 256),
            );
            let b = Circle2::new(
                pt(rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0)),
                Scalar::from_f64(rng.gen_range(0.1..4.0), 256),
            );
            let hits = circle_circle(&a, &b, &c).unwrap();
            let d = a.center.dist(&b.center).to_f64();
            let (ra, rb) = (a.radius.to_f64(), b.radius.to_f64());
            let expect = if d > ra + rb + 1e-9 || d < (ra - rb).abs() - 1e-9 {
                0
            } else if (d - (ra + rb)).abs() < 1e-12 || (d - (ra - rb).abs()) < 1e-12 {
                continue; // too close to tangency for an f64 count check
            } else {
                2
            };
            assert_eq!(hits.len(), expect, "circles {a:?} {b:?}");
            for p in &hits {
                assert_eq!(c.cmp_distance(p, &a.center, &a.radius).unwrap(), Cmp::Equal);
                assert_eq!(c.cmp_distance(p, &b.center, &b.radius).unwrap(), Cmp::Equal);
            }
        }
    }
}
