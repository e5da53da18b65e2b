//! Circle intersections through homothety and radical axes.
//!
//! A circle is carried by two board points (center and one circumference
//! point); the compass can only realize *unit* circles, so a general circle is
//! intersected with a line by shrinking the configuration about a reference
//! point `A` of the line with ratio `1/r` (intercept theorem), swinging the
//! unit compass there, and mapping the hits back. Circle–circle intersection
//! reduces to circle–line via the radical axis, located through a power point
//! (Prop 8).

use crate::numerics::{Circle2, Cmp, Orientation, Scalar};
use crate::trace::PointId;

use super::bisector::perpendicular_bisector;
use super::far::{line_through, parallel_through, perpendicular_through};
use super::translate::translate_segment;
use super::{ConstructionError, LineHandle, Toolkit};

/// How many reference-point (or chord) choices to try before reporting a
/// degenerate configuration.
const MAX_RETRIES: usize = 8;

/// A circle as the board knows it: a center and one point on the arc.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CircleSpec {
    pub center: PointId,
    pub on: PointId,
}

impl CircleSpec {
    pub fn new(tk: &Toolkit, center: PointId, on: PointId) -> Result<Self, ConstructionError> {
        if tk.ctx().points_equal(tk.pt(center), tk.pt(on)) {
            return Err(ConstructionError::DegenerateSegment);
        }
        Ok(CircleSpec { center, on })
    }

    pub fn radius(&self, tk: &Toolkit) -> Scalar {
        tk.pt(self.center).dist(tk.pt(self.on))
    }

    /// Analytic view for planning and oracle comparison.
    pub fn circle2(&self, tk: &Toolkit) -> Circle2 {
        Circle2::new(tk.pt(self.center).clone(), self.radius(tk))
    }
}

fn on_line(tk: &Toolkit, l: &LineHandle, p: PointId) -> bool {
    let off = l.carrier.signed_dist(tk.pt(p));
    tk.ctx().scalar_equal(&off, &Scalar::zero(off.precision()))
}

fn sort_ids(tk: &Toolkit, ids: &mut Vec<PointId>) {
    ids.sort_by(|&i, &j| tk.pt(i).lex_cmp(tk.pt(j)));
    ids.dedup();
}

/// Intersect a circle with a line; returns the 0–2 crossing points in
/// lexicographic order. An empty result is still witnessed on the board by a
/// zero-candidate compass record at the shrunk center.
pub fn circle_line_intersect(
    tk: &mut Toolkit,
    circle: &CircleSpec,
    l: &mut LineHandle,
) -> Result<Vec<PointId>, ConstructionError> {
    let (o, s) = (circle.center, circle.on);
    let r_cmp = tk.board.cmp_unit(o, s)?;
    if r_cmp == Cmp::Equal {
        // Unit radius: postulate iii applies directly.
        return tk.compass_on_line(o, l);
    }
    let o_on = on_line(tk, l, o);
    let s_on = on_line(tk, l, s);
    if o_on && s_on {
        // The whole diameter lies on l: the crossings are S and its antipode.
        let anti = translate_segment(tk, s, o, o)?;
        let mut out = vec![s, anti];
        sort_ids(tk, &mut out);
        return Ok(out);
    }

    // S′: the unit point on ray O→S, and the line carrying O and S.
    let (mut line_os, s1) = if r_cmp == Cmp::Less {
        let (stick, far) = tk.board.lay_stick_from_through(o, s)?;
        (LineHandle::from_stick(&*tk, stick), far)
    } else {
        let mut los = line_through(tk, o, s)?;
        let hits = tk.compass_on_line(o, &mut los)?;
        let po = los.param_f(tk.pt(o));
        let side = los.param_f(tk.pt(s)) - po;
        let pick = hits
            .into_iter()
            .find(|&h| (los.param_f(tk.pt(h)) - po) * side > 0.0)
            .ok_or_else(|| {
                ConstructionError::DegenerateConfiguration(
                    "no unit point toward S on the center line".into(),
                )
            })?;
        (los, pick)
    };

    let mut last = String::new();
    for k in reference_params() {
        let a = l.point_at_param(tk, &Scalar::from_i64(k, 256))?;
        if tk.ctx().points_equal(tk.pt(a), tk.pt(o)) {
            continue;
        }
        if tk.ctx().orientation(tk.pt(a), tk.pt(o), tk.pt(s))? == Orientation::On {
            continue;
        }
        match shrink_and_swing(tk, circle, l, a, &mut line_os, s1, o_on) {
            Ok(out) => return Ok(out),
            Err(e) => last = e.to_string(),
        }
    }
    Err(ConstructionError::DegenerateConfiguration(format!(
        "circle-line intersection: every reference point failed (last: {last})"
    )))
}

/// Reference-point parameters along the line, tried in order.
fn reference_params() -> [i64; MAX_RETRIES] {
    [0, 1, -1, 2, -2, 3, -3, 4]
}

/// One attempt of the Prop 7 construction from reference point `a` on `l`.
fn shrink_and_swing(
    tk: &mut Toolkit,
    circle: &CircleSpec,
    l: &mut LineHandle,
    a: PointId,
    line_os: &mut LineHandle,
    s1: PointId,
    o_on: bool,
) -> Result<Vec<PointId>, ConstructionError> {
    let (o, s) = (circle.center, circle.on);
    // Shrink about A with ratio 1/r: S″ = A + (S−A)/r, O′ = A + (O−A)/r.
    let mut line_ao = line_through(tk, a, o)?;
    let mut d = parallel_through(tk, &mut line_ao, s1)?;
    let mut line_as = line_through(tk, a, s)?;
    let s2 = tk.cross_lines(&mut d, &mut line_as)?;
    let mut e = parallel_through(tk, line_os, s2)?;
    let o2 = tk.cross_lines(&mut e, &mut line_ao)?;
    // The unit compass about O′ sees the shrunk configuration; each hit R′
    // maps back to X = A + r·(R′ − A) by a parallel through the unshrunk
    // point (O in general; S when O itself lies on l).
    let hits = tk.compass_on_line(o2, l)?;
    let mut out = Vec::with_capacity(hits.len());
    for rp in hits {
        let x = if !o_on {
            let mut line_or = LineHandle::from_unit_points(tk, o2, rp)?;
            let mut f = parallel_through(tk, &mut line_or, o)?;
            tk.cross_lines(&mut f, l)?
        } else {
            let mut g = line_through(tk, s2, rp)?;
            let mut f = parallel_through(tk, &mut g, s)?;
            tk.cross_lines(&mut f, l)?
        };
        out.push(x);
    }
    sort_ids(tk, &mut out);
    Ok(out)
}

/// The point diametrically opposite `Γ.on`.
pub fn antipodal_on_circle(tk: &mut Toolkit, circle: &CircleSpec) -> Result<PointId, ConstructionError> {
    let mut line_os = line_through(tk, circle.center, circle.on)?;
    let hits = circle_line_intersect(tk, circle, &mut line_os)?;
    hits.into_iter()
        .find(|&h| !tk.ctx().points_equal(tk.pt(h), tk.pt(circle.on)))
        .ok_or_else(|| {
            ConstructionError::DegenerateConfiguration("antipodal point not found".into())
        })
}

/// `Γ.on` rotated by +90° about the center (counterclockwise).
pub fn rotate90_on_circle(tk: &mut Toolkit, circle: &CircleSpec) -> Result<PointId, ConstructionError> {
    let mut line_os = line_through(tk, circle.center, circle.on)?;
    let mut perp = super::perpendicular::perpendicular_at(tk, &mut line_os, circle.center)?;
    let hits = circle_line_intersect(tk, circle, &mut perp)?;
    for h in hits {
        if tk.ctx().orientation(tk.pt(circle.center), tk.pt(circle.on), tk.pt(h))? == Orientation::Left {
            return Ok(h);
        }
    }
    Err(ConstructionError::DegenerateConfiguration(
        "no left-orientation rotation candidate".into(),
    ))
}

/// Intersect two circles; returns the 0–2 common points in lexicographic
/// order.
pub fn circle_circle_intersect(
    tk: &mut Toolkit,
    g1: &CircleSpec,
    g2: &CircleSpec,
) -> Result<Vec<PointId>, ConstructionError> {
    if tk.ctx().points_equal(tk.pt(g1.center), tk.pt(g2.center)) {
        let r1 = g1.radius(tk);
        let r2 = g2.radius(tk);
        if tk.ctx().cmp_scalar(&r1, &r2)? == Cmp::Equal {
            return Err(ConstructionError::CoincidentCircles);
        }
        return Ok(Vec::new());
    }
    // Radius roles: the chord X,Y lives on the smaller circle so that the
    // auxiliary circle of the larger radius always reaches its bisector.
    let r1 = g1.radius(tk);
    let r2 = g2.radius(tk);
    let (big, small) = if tk.ctx().cmp_scalar(&r1, &r2)? == Cmp::Less {
        (*g2, *g1)
    } else {
        (*g1, *g2)
    };
    let r_big = big.radius(tk).to_f64();
    let r_small = small.radius(tk).to_f64();

    let x = small.on;
    let y1 = rotate90_on_circle(tk, &small)?;
    let mut chords = vec![y1, antipodal_on_circle(tk, &CircleSpec { center: small.center, on: y1 })?];
    if r_big > 1.02 * r_small {
        // The diameter chord is usable only when the auxiliary circle cannot
        // end up tangent to the bisector (which would pin O₃ at the center).
        chords.push(antipodal_on_circle(tk, &small)?);
    }

    let (c1x, c1y) = tk.ptf(big.center);
    let (c2x, c2y) = tk.ptf(small.center);
    let center_dir = (c2x - c1x, c2y - c1y);
    let mut last = String::new();
    let mut tried = 0;
    for y in chords {
        if tried >= MAX_RETRIES {
            break;
        }
        tried += 1;
        // The chord must not be perpendicular to the center line (margin in
        // planning arithmetic), or the power point escapes to infinity.
        let (xx, xy) = tk.ptf(x);
        let (yx, yy) = tk.ptf(y);
        let chord = (yx - xx, yy - xy);
        let dot = (chord.0 * center_dir.0 + chord.1 * center_dir.1).abs();
        let norms = (chord.0.hypot(chord.1)) * (center_dir.0.hypot(center_dir.1));
        if dot < 0.10 * norms {
            continue;
        }
        match radical_axis_attempt(tk, &big, &small, x, y) {
            Ok(out) => return Ok(out),
            Err(e) => last = e.to_string(),
        }
    }
    Err(ConstructionError::DegenerateConfiguration(format!(
        "circle-circle intersection: every chord choice failed (last: {last})"
    )))
}

/// One attempt of the Prop 8 construction with chord `[x, y]` on the smaller
/// circle.
fn radical_axis_attempt(
    tk: &mut Toolkit,
    big: &CircleSpec,
    small: &CircleSpec,
    x: PointId,
    y: PointId,
) -> Result<Vec<PointId>, ConstructionError> {
    // Γ₃ = circle(X, r_big): X + the translated big radius.
    let w = translate_segment(tk, big.center, big.on, x)?;
    let g3_seed = CircleSpec::new(tk, x, w)?;
    // O₃ on the perpendicular bisector of [X, Y] at distance r_big from X.
    let mut line_xy = line_through(tk, x, y)?;
    let (mut bis_xy, _) = perpendicular_bisector(tk, x, y, &mut line_xy)?;
    let o3 = circle_line_intersect(tk, &g3_seed, &mut bis_xy)?
        .into_iter()
        .find(|&h| !tk.ctx().points_equal(tk.pt(h), tk.pt(big.center)))
        .ok_or_else(|| {
            ConstructionError::DegenerateConfiguration("auxiliary center O₃ not found".into())
        })?;
    // a₁ = (XY) is the radical axis of Γ₂ and Γ₃ (both pass through X and Y);
    // a₂ = bisector of [O₁, O₃] is the radical axis of Γ₁ and Γ₃ (equal
    // radii). Their crossing P is the power point of all three circles.
    let mut line_oo = line_through(tk, big.center, o3)?;
    let (mut a2, _) = perpendicular_bisector(tk, big.center, o3, &mut line_oo)?;
    let p = tk.cross_lines(&mut line_xy, &mut a2)?;
    // a₃: the radical axis of Γ₁ and Γ₂ — perpendicular to the center line
    // through P.
    let mut centers = line_through(tk, big.center, small.center)?;
    let mut a3 = perpendicular_through(tk, &mut centers, p)?;
    circle_line_intersect(tk, big, &mut a3)
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

    fn pts(tk: &Toolkit, ids: &[PointId]) -> Vec<(f64, f64)> {
        ids.iter().map(|&i| tk.ptf(i)).collect()
    }

    #[test]
    fn radius_root_two_crosses_the_axis_twice() {
        // O=(0,1), S=(1,2) (r=√2) against y=0 → (−1,0) and (1,0).
        let mut tk = Toolkit::new(Config::default());
        let mut l = x_axis(&mut tk);
        let o = tk.board.given_point(&sc("0"), &sc("1"));
        let s = tk.board.given_point(&sc("1"), &sc("2"));
        let c = CircleSpec::new(&tk, o, s).unwrap();
        let hits = circle_line_intersect(&mut tk, &c, &mut l).unwrap();
        let got = pts(&tk, &hits);
        assert_eq!(got.len(), 2);
        assert!((got[0].0 + 1.0).abs() < 1e-30 && got[0].1.abs() < 1e-30, "{got:?}");
        assert!((got[1].0 - 1.0).abs() < 1e-30 && got[1].1.abs() < 1e-30, "{got:?}");
    }

    #[test]
    fn homothety_shrinks_the_center_correctly() {
        // With A=(0,0): O′ = A + (O−A)/r = (0, 1/√2) must appear on the
        // board, and ‖AO′‖·r = ‖AO‖.
        let mut tk = Toolkit::new(Config::default());
        let mut l = x_axis(&mut tk);
        let o = tk.board.given_point(&sc("0"), &sc("1"));
        let s = tk.board.given_point(&sc("1"), &sc("2"));
        let c = CircleSpec::new(&tk, o, s).unwrap();
        circle_line_intersect(&mut tk, &c, &mut l).unwrap();
        let inv_r2 = 0.5f64.sqrt();
        let found = (0..tk.board.point_count() as u32)
            .map(crate::trace::PointId)
            .any(|id| {
                let (px, py) = tk.ptf(id);
                px.abs() < 1e-20 && (py - inv_r2).abs() < 1e-20
            });
        assert!(found, "shrunk center O′ missing");
    }

    #[test]
    fn unit_radius_uses_the_direct_branch() {
        let mut tk = Toolkit::new(Config::default());
        let mut l = x_axis(&mut tk);
        let o = tk.board.given_point(&sc("0"), &sc("1"));
        let s = tk.board.given_point(&sc("1"), &sc("1"));
        let c = CircleSpec::new(&tk, o, s).unwrap();
        let before = tk.board.instruction_count();
        let hits = circle_line_intersect(&mut tk, &c, &mut l).unwrap();
        let got = pts(&tk, &hits);
        assert_eq!(got.len(), 1, "{got:?}");
        assert!(got[0].0.abs() < 1e-30 && got[0].1.abs() < 1e-30);
        // Tangency via a handful of compass records, not the full shrink.
        assert!(tk.board.instruction_count() - before < 12);
    }

    #[test]
    fn distant_circle_misses_with_a_witness() {
        let mut tk = Toolkit::new(Config::default());
        let mut l = x_axis(&mut tk);
        let o = tk.board.given_point(&sc("0"), &sc("3"));
        let s = tk.board.given_point(&sc("1"), &sc("3"));
        let c = CircleSpec::new(&tk, o, s).unwrap();
        let hits = circle_line_intersect(&mut tk, &c, &mut l).unwrap();
        assert!(hits.is_empty());
        // The miss is witnessed by a compass record with zero candidates.
        let witnessed = tk
            .board
            .records()
            .iter()
            .any(|r| matches!(r.instr, crate::trace::Instr::CompassIntersect { .. }) && r.candidates == Some(0));
        assert!(witnessed);
    }

    #[test]
    fn diameter_on_the_line_short_circuits() {
        let mut tk = Toolkit::new(Config::default());
        let mut l = x_axis(&mut tk);
        let o = tk.board.given_point(&sc("2"), &sc("0"));
        let s = tk.board.given_point(&sc("4.5"), &sc("0"));
        let c = CircleSpec::new(&tk, o, s).unwrap();
        let hits = circle_line_intersect(&mut tk, &c, &mut l).unwrap();
        let got = pts(&tk, &hits);
        assert_eq!(got.len(), 2);
        assert!((got[0].0 + 0.5).abs() < 1e-30, "{got:?}");
        assert!((got[1].0 - 4.5).abs() < 1e-30, "{got:?}");
    }

    #[test]
    fn antipodal_and_rotation_helpers() {
        let mut tk = Toolkit::new(Config::default());
        let o = tk.board.given_point(&sc("0"), &sc("0"));
        let s = tk.board.given_point(&sc("0"), &sc("2"));
        let c = CircleSpec::new(&tk, o, s).unwrap();
        let anti = antipodal_on_circle(&mut tk, &c).unwrap();
        let (ax, ay) = tk.ptf(anti);
        assert!(ax.abs() < 1e-30 && (ay + 2.0).abs() < 1e-30, "({ax},{ay})");
        let rot = rotate90_on_circle(&mut tk, &c).unwrap();
        let (rx, ry) = tk.ptf(rot);
        assert!((rx + 2.0).abs() < 1e-30 && ry.abs() < 1e-30, "({rx},{ry})");

        let o2 = tk.board.given_point(&sc("1"), &sc("1"));
        let s2 = tk.board.given_point(&sc("2"), &sc("1"));
        let c2 = CircleSpec::new(&tk, o2, s2).unwrap();
        let anti2 = antipodal_on_circle(&mut tk, &c2).unwrap();
        let (bx, by) = tk.ptf(anti2);
        assert!(bx.abs() < 1e-30 && (by - 1.0).abs() < 1e-30, "({bx},{by})");
    }

    #[test]
    fn two_circles_cross_at_the_known_pair() {
        // (0,0,r=2) and (3,0,r=3) → (2/3, ±4√2/3).
        let mut tk = Toolkit::new(Config::default());
        let o1 = tk.board.given_point(&sc("0"), &sc("0"));
        let s1 = tk.board.given_point(&sc("2"), &sc("0"));
        let o2 = tk.board.given_point(&sc("3"), &sc("0"));
        let s2 = tk.board.given_point(&sc("0"), &sc("0"));
        let g1 = CircleSpec::new(&tk, o1, s1).unwrap();
        let g2 = CircleSpec::new(&tk, o2, s2).unwrap();
        let hits = circle_circle_intersect(&mut tk, &g1, &g2).unwrap();
        let mut got = pts(&tk, &hits);
        got.sort_by(|a, b| a.1.total_cmp(&b.1));
        assert_eq!(got.len(), 2, "{got:?}");
        let yy = 4.0 * 2f64.sqrt() / 3.0;
        assert!((got[0].0 - 2.0 / 3.0).abs() < 1e-15 && (got[0].1 + yy).abs() < 1e-15, "{got:?}");
        assert!((got[1].0 - 2.0 / 3.0).abs() < 1e-15 && (got[1].1 - yy).abs() < 1e-15, "{got:?}");
    }

    #[test]
    fn tangent_circles_touch_once() {
        let mut tk = Toolkit::new(Config::default());
        let o1 = tk.board.given_point(&sc("0"), &sc("0"));
        let s1 = tk.board.given_point(&sc("1"), &sc("0"));
        let o2 = tk.board.given_point(&sc("2"), &sc("0"));
        let g1 = CircleSpec::new(&tk, o1, s1).unwrap();
        let g2 = CircleSpec::new(&tk, o2, s1).unwrap();
        let hits = circle_circle_intersect(&mut tk, &g1, &g2).unwrap();
        let got = pts(&tk, &hits);
        assert_eq!(got.len(), 1, "{got:?}");
        assert!((got[0].0 - 1.0).abs() < 1e-15 && got[0].1.abs() < 1e-15, "{got:?}");
    }

    #[test]
    fn concentric_circles() {
        let mut tk = Toolkit::new(Config::default());
        let o = tk.board.given_point(&sc("0"), &sc("0"));
        let s1 = tk.board.given_point(&sc("1.5"), &sc("0"));
        let s2 = tk.board.given_point(&sc("0"), &sc("2.5"));
        let g1 = CircleSpec::new(&tk, o, s1).unwrap();
        let g2 = CircleSpec::new(&tk, o, s2).unwrap();
        assert!(circle_circle_intersect(&mut tk, &g1, &g2).unwrap().is_empty());
        let s3 = tk.board.given_point(&sc("0"), &sc("1.5"));
        let g3 = CircleSpec::new(&tk, o, s3).unwrap();
        assert!(matches!(
            circle_circle_intersect(&mut tk, &g1, &g3),
            Err(ConstructionError::CoincidentCircles)
        ));
    }
}
