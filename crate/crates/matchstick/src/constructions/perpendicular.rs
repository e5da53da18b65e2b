//! Perpendicular at a point of a line (Thales trials).
//!
//! A trial tilts a unit stick from `A` by an angle θ < 30° against the line,
//! swings the compass from its far end `Q` back onto the line to find `R`, and
//! extends `R` through `Q` by one unit to `S = 2Q − R`. Since `A`, `R`, `S`
//! all lie on the unit circle about `Q` and `RS` is a diameter, the angle at
//! `A` is right: `AS` is the perpendicular, and `|AS| = 2 sin θ < 1` keeps the
//! final stick legal.

use crate::numerics::Scalar;
use crate::trace::PointId;

use super::{ConstructionError, LineHandle, Toolkit};

/// Maximum number of trial angles before giving up (unreachable in practice).
const MAX_TRIALS: usize = 16;

/// Erect the perpendicular to `d` at its point `A`.
///
/// The returned handle is anchored at `A` (mark 0) with mark 1 at unit
/// distance along the perpendicular.
pub fn perpendicular_at(tk: &mut Toolkit, d: &mut LineHandle, a: PointId) -> Result<LineHandle, ConstructionError> {
    let off = d.carrier.signed_dist(tk.pt(a));
    if !tk.ctx().scalar_equal(&off, &Scalar::zero(off.precision())) {
        return Err(ConstructionError::DegenerateConfiguration(
            "perpendicular_at: point is not on the line".into(),
        ));
    }
    let mut trials = Vec::new();
    while trials.len() < MAX_TRIALS {
        trials.extend(tk.choice.trial_slopes());
    }
    for &(slope, side) in trials.iter().take(MAX_TRIALS) {
        if let Some(s) = perpendicular_trial(tk, d, a, slope, side)? {
            // The legality measurement the postulate provides: only lay the
            // A–S stick after the board confirms |AS| is at most one unit.
            if tk.board.cmp_unit(a, s)? == crate::numerics::Cmp::Greater {
                continue;
            }
            let (stick, far) = tk.board.lay_stick_from_through(a, s)?;
            // Anchor the handle at `a` explicitly: the stick may be a reused
            // one whose stored endpoint order starts at the far end.
            return Ok(LineHandle::from_endpoints(&*tk, stick, a, far));
        }
    }
    Err(ConstructionError::TrialExhaustion(
        "perpendicular_at: no trial angle produced a usable S point".into(),
    ))
}

/// One Thales trial: returns `S` on the perpendicular at `A`, at distance
/// `2 sin θ` from `A`, on the chosen side of `d`. `None` if the compass swing
/// failed to return a second point (the trial is then retried).
pub(crate) fn perpendicular_trial(
    tk: &mut Toolkit,
    d: &mut LineHandle,
    a: PointId,
    slope: f64,
    side: bool,
) -> Result<Option<PointId>, ConstructionError> {
    let bits = tk.board.config().precision_bits;
    let cos = 1.0 / (1.0 + slope * slope).sqrt();
    let sin = slope * cos;
    let along = d.carrier.dir.scale(&Scalar::from_f64(cos, bits));
    let normal_len = if side { sin } else { -sin };
    let normal = d.carrier.dir.perp().scale(&Scalar::from_f64(normal_len, bits));
    let aim = tk.pt(a).add(&along).add(&normal);
    // Unit stick from A tilted by θ; its far extremity is Q.
    let (_, q) = tk.board.lay_stick_toward(a, &aim)?;
    // Compass from Q back onto d: the two hits are A itself and R.
    let hits = tk.compass_on_line(q, d)?;
    let r = hits.into_iter().find(|&h| h != a && !tk.ctx().points_equal(tk.pt(h), tk.pt(a)));
    let Some(r) = r else { return Ok(None) };
    // Extend R through Q by one unit: choose an interior point M of the R–Q
    // stick, lay from M through Q, then from Q through that far point.
    let rq = tk.board.lay_stick_both_ends(r, q)?;
    let t = tk.choice.split_param();
    let m = tk.board.choose_point_on_stick(rq, &t, true)?;
    let (_, f) = tk.board.lay_stick_from_through(m, q)?;
    let (_, s) = tk.board.lay_stick_from_through(q, f)?;
    Ok(Some(s))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::{ChoiceStrategy, Config};
    use crate::numerics::Scalar;

    fn sc(text: &str) -> Scalar {
        Scalar::from_decimal(text, 256).unwrap()
    }

    fn x_axis(tk: &mut Toolkit) -> (LineHandle, PointId) {
        let a = tk.board.given_point(&sc("0"), &sc("0"));
        let b = tk.board.given_point(&sc("1"), &sc("0"));
        let h = LineHandle::from_unit_points(tk, a, b).unwrap();
        (h, a)
    }

    #[test]
    fn perpendicular_to_x_axis_is_y_axis() {
        let mut tk = Toolkit::new(Config::default());
        let (mut d, a) = x_axis(&mut tk);
        let p = perpendicular_at(&mut tk, &mut d, a).unwrap();
        assert_eq!(p.mark(0), Some(a));
        let dot = p.carrier.dir.dot(&d.carrier.dir).abs();
        assert!(dot < Scalar::pow2(-64, 256), "dot {dot}");
        let (x, y) = tk.ptf(p.mark(1).unwrap());
        assert!(x.abs() < 1e-12);
        assert!((y.abs() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn first_trial_s_point_matches_the_thales_prediction() {
        // θ = 20°: S = (0, 2 sin 20°) ≈ (0, 0.68404) for the x-axis at the
        // origin with the default (half) trial sequence.
        let mut tk = Toolkit::new(Config::default());
        let (mut d, a) = x_axis(&mut tk);
        let slope = 20f64.to_radians().tan();
        let s = perpendicular_trial(&mut tk, &mut d, a, slope, true).unwrap().unwrap();
        let (x, y) = tk.ptf(s);
        assert!(x.abs() < 1e-12, "S.x = {x}");
        assert!((y - 2.0 * 20f64.to_radians().sin()).abs() < 1e-12, "S.y = {y}");
    }

    #[test]
    fn twenty_nine_degree_trial_is_legal() {
        // |AS| = 2 sin 29° ≈ 0.9696 < 1: the A–S stick may be laid.
        let mut tk = Toolkit::new(Config::default());
        let (mut d, a) = x_axis(&mut tk);
        let slope = 29f64.to_radians().tan();
        let s = perpendicular_trial(&mut tk, &mut d, a, slope, false).unwrap().unwrap();
        assert_eq!(tk.board.cmp_unit(a, s).unwrap(), crate::numerics::Cmp::Less);
        tk.board.lay_stick_from_through(a, s).unwrap();
        let dist = tk.pt(a).dist(tk.pt(s)).to_f64();
        assert!((dist - 2.0 * 29f64.to_radians().sin()).abs() < 1e-12);
    }

    #[test]
    fn thirty_one_degree_s_point_is_too_far_for_a_stick() {
        // 2 sin 31° ≈ 1.0301 > 1: the macro must not emit the A–S stick, and
        // the board refuses it.
        let mut tk = Toolkit::new(Config::default());
        let (mut d, a) = x_axis(&mut tk);
        let slope = 31f64.to_radians().tan();
        let s = perpendicular_trial(&mut tk, &mut d, a, slope, true).unwrap().unwrap();
        assert_eq!(tk.board.cmp_unit(a, s).unwrap(), crate::numerics::Cmp::Greater);
        assert!(tk.board.lay_stick_from_through(a, s).is_err());
    }

    #[test]
    fn seeded_trials_contain_a_same_side_pair() {
        // Pigeonhole over three side choices: at least two trials fall on the
        // same side of the line, whichever strategy provides them.
        for strategy in [ChoiceStrategy::Half, ChoiceStrategy::Random] {
            let mut config = Config::default();
            config.choice_strategy = strategy;
            let mut tk = Toolkit::new(config);
            let trials = tk.choice.trial_slopes();
            assert!(trials.iter().filter(|&&(_, s)| s).count() >= 2
                || trials.iter().filter(|&&(_, s)| !s).count() >= 2);
        }
    }

    #[test]
    fn perpendicular_at_interior_marks_of_slanted_lines() {
        let mut tk = Toolkit::new(Config::default());
        let a = tk.board.given_point(&sc("0.3"), &sc("-0.2"));
        let b = tk.board.given_point(&sc("0.9"), &sc("0.6"));
        let mut d = LineHandle::from_unit_points(&mut tk, a, b).unwrap();
        d.ensure_cover(&mut tk, -1, 3).unwrap();
        for k in [-1i64, 0, 2, 3] {
            let at = d.mark(k).unwrap();
            let p = perpendicular_at(&mut tk, &mut d, at).unwrap();
            let dot = p.carrier.dir.dot(&d.carrier.dir).abs();
            assert!(dot < Scalar::pow2(-64, 256), "mark {k}: dot {dot}");
            assert_eq!(p.mark(0), Some(at));
        }
    }

    #[test]
    fn off_line_point_is_rejected() {
        let mut tk = Toolkit::new(Config::default());
        let (mut d, _) = x_axis(&mut tk);
        let off = tk.board.given_point(&sc("0.5"), &sc("0.5"));
        assert!(matches!(
            perpendicular_at(&mut tk, &mut d, off),
            Err(ConstructionError::DegenerateConfiguration(_))
        ));
    }
}
