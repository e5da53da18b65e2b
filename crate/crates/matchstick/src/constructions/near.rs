//! Parallel and perpendicular through a point within unit distance of a line.
//!
//! A compass swing from the point onto the line yields a chord `[P, Q]`; the
//! triangle `APQ` is isosceles (`|AP| = |AQ| = 1`), so the perpendicular
//! bisector of the chord passes through `A` and is the perpendicular, and the
//! perpendicular to it at `A` is the parallel.

use crate::numerics::{Cmp, Scalar};
use crate::trace::PointId;

use super::bisector::perpendicular_bisector;
use super::perpendicular::perpendicular_at;
use super::{ConstructionError, LineHandle, Toolkit};

/// Construct the parallel and the perpendicular to `d` through `a`, which
/// must be at distance less than one unit (tangent distance one is allowed).
pub fn parallel_and_perpendicular_near(
    tk: &mut Toolkit,
    d: &mut LineHandle,
    a: PointId,
) -> Result<(LineHandle, LineHandle), ConstructionError> {
    let off = d.carrier.signed_dist(tk.pt(a));
    if tk.ctx().scalar_equal(&off, &Scalar::zero(off.precision())) {
        let perpendicular = perpendicular_at(tk, d, a)?;
        return Ok((d.clone(), perpendicular));
    }
    match tk.ctx().cmp_scalar(&off.abs(), &Scalar::one(off.precision()))? {
        Cmp::Greater => {
            return Err(ConstructionError::NoIntersection(
                "point is farther than one unit from the line".into(),
            ))
        }
        Cmp::Equal => {
            // Tangency: the single compass hit is the foot of `a`.
            let hits = tk.compass_on_line(a, d)?;
            let &foot = hits.first().ok_or_else(|| {
                ConstructionError::DegenerateConfiguration("tangent compass swing found no foot".into())
            })?;
            let (stick, far) = tk.board.lay_stick_from_through(a, foot)?;
            let mut perpendicular = LineHandle::from_endpoints(&*tk, stick, a, far);
            let parallel = perpendicular_at(tk, &mut perpendicular, a)?;
            return Ok((parallel, perpendicular));
        }
        Cmp::Less => {}
    }
    let hits = tk.compass_on_line(a, d)?;
    let (&p, &q) = match hits.as_slice() {
        [p, q] => (p, q),
        _ => {
            return Err(ConstructionError::DegenerateConfiguration(format!(
                "expected a two-point chord, compass found {} points",
                hits.len()
            )))
        }
    };
    let (mut perpendicular, _) = perpendicular_bisector(tk, p, q, d)?;
    let parallel = perpendicular_at(tk, &mut perpendicular, a)?;
    Ok((parallel, perpendicular))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::Config;
    use crate::numerics::Scalar;

    fn sc(text: &str) -> Scalar {
        Scalar::from_decimal(text, 256).unwrap()
    }

    fn x_axis(tk: &mut Toolkit) -> LineHandle {
        let a = tk.board.given_point(&sc("0"), &sc("0"));
        let b = tk.board.given_point(&sc("1"), &sc("0"));
        LineHandle::from_unit_points(tk, a, b).unwrap()
    }

    #[test]
    fn chord_fixture_above_the_axis() {
        // A=(0.5, 0.6): chord P,Q = (0.5∓0.8, 0); perpendicular x=0.5 and
        // parallel y=0.6.
        let mut tk = Toolkit::new(Config::default());
        let mut d = x_axis(&mut tk);
        let a = tk.board.given_point(&sc("0.5"), &sc("0.6"));
        let (par, perp) = parallel_and_perpendicular_near(&mut tk, &mut d, a).unwrap();
        let eps = Scalar::pow2(-128, 256);
        assert!(par.carrier.dir.cross(&d.carrier.dir).abs() < eps);
        assert!(par.carrier.signed_dist(tk.pt(a)).abs() < eps);
        assert!(perp.carrier.dir.dot(&d.carrier.dir).abs() < eps);
        assert!(perp.carrier.signed_dist(tk.pt(a)).abs() < eps);
        let foot = perp.carrier.foot_of(&crate::numerics::Point2::from_i64(0, 0, 256));
        assert!((foot.to_f64().0 - 0.5).abs() < 1e-30);
    }

    #[test]
    fn point_on_the_line_returns_the_line_itself() {
        let mut tk = Toolkit::new(Config::default());
        let mut d = x_axis(&mut tk);
        let a = tk.board.given_point(&sc("0.25"), &sc("0"));
        // Bring the point onto the board's chain first.
        let a = {
            let t = sc("0.25");
            let on = d.point_at_param(&mut tk, &t).unwrap();
            assert_eq!(on, a);
            on
        };
        let (par, perp) = parallel_and_perpendicular_near(&mut tk, &mut d, a).unwrap();
        let eps = Scalar::pow2(-128, 256);
        assert!(par.carrier.signed_dist(&d.carrier.anchor).abs() < eps);
        assert!(perp.carrier.dir.dot(&d.carrier.dir).abs() < eps);
    }

    #[test]
    fn tangent_point_uses_the_single_foot()  {
        let mut tk = Toolkit::new(Config::default());
        let mut d = x_axis(&mut tk);
        let a = tk.board.given_point(&sc("0.3"), &sc("1"));
        let (par, perp) = parallel_and_perpendicular_near(&mut tk, &mut d, a).unwrap();
        let eps = Scalar::pow2(-128, 256);
        assert!(par.carrier.dir.cross(&d.carrier.dir).abs() < eps);
        assert!(par.carrier.signed_dist(tk.pt(a)).abs() < eps);
        assert!(perp.carrier.dir.dot(&d.carrier.dir).abs() < eps);
        // The perpendicular passes through the foot (0.3, 0).
        let res = perp.carrier.signed_dist(&crate::numerics::Point2::new(sc("0.3"), sc("0")));
        assert!(res.abs() < Scalar::pow2(-100, 256), "residual {res}");
    }

    #[test]
    fn distant_point_is_refused() {
        let mut tk = Toolkit::new(Config::default());
        let mut d = x_axis(&mut tk);
        let a = tk.board.given_point(&sc("0.3"), &sc("1.5"));
        assert!(matches!(
            parallel_and_perpendicular_near(&mut tk, &mut d, a),
            Err(ConstructionError::NoIntersection(_))
        ));
    }

    #[test]
    fn slanted_line_fuzz() {
        let mut tk = Toolkit::new(Config::default());
        let p0 = tk.board.given_point(&sc("1.1"), &sc("-0.4"));
        let p1 = tk.board.given_point(&sc("1.7"), &sc("0.4"));
        let mut d = LineHandle::from_unit_points(&mut tk, p0, p1).unwrap();
        for (x, y) in [("2.0", "0.1"), ("0.9", "0.2"), ("1.4", "-0.8")] {
            let a = tk.board.given_point(&sc(x), &sc(y));
            let (par, perp) = parallel_and_perpendicular_near(&mut tk, &mut d, a).unwrap();
            let eps = Scalar::pow2(-128, 256);
            assert!(par.carrier.dir.cross(&d.carrier.dir).abs() < eps, "({x},{y})");
            assert!(par.carrier.signed_dist(tk.pt(a)).abs() < eps, "({x},{y})");
            assert!(perp.carrier.dir.dot(&d.carrier.dir).abs() < eps, "({x},{y})");
            assert!(perp.carrier.signed_dist(tk.pt(a)).abs() < eps, "({x},{y})");
        }
    }
}
