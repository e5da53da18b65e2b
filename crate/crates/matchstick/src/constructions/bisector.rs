//! Perpendicular bisector and midpoint via mirrored zig-zag chains.
//!
//! From each endpoint a chain of unit compass steps zig-zags toward the other,
//! alternating between the base line and a parallel at height `h` (and, below
//! the line, a parallel at height `h − 1`). The two upper chains are exact
//! mirror images, so their crossing `P` is equidistant from both endpoints;
//! likewise `Q` below. `P` and `Q` are closer than one unit, so a single stick
//! through both starts the bisector, and its crossing with the base line is
//! the midpoint.

use crate::numerics::{Point2, Scalar};
use crate::trace::PointId;

use super::perpendicular::perpendicular_at;
use super::{ConstructionError, LineHandle, Toolkit};

/// Among compass candidates, the one closest to a planned location.
pub(crate) fn pick_nearest(tk: &Toolkit, ids: &[PointId], plan: (f64, f64)) -> Option<PointId> {
    ids.iter()
        .copied()
        .min_by(|&i, &j| {
            let di = dist2_f64(tk.ptf(i), plan);
            let dj = dist2_f64(tk.ptf(j), plan);
            di.partial_cmp(&dj).expect("planning distances are finite")
        })
}

fn dist2_f64(p: (f64, f64), q: (f64, f64)) -> f64 {
    (p.0 - q.0).powi(2) + (p.1 - q.1).powi(2)
}

/// Advance a zig-zag chain by `steps` unit compass swings, alternating
/// between `off_line` (where `start` lies) and `base`. Returns the chain
/// including `start`.
fn advance_chain(
    tk: &mut Toolkit,
    start: PointId,
    base: &mut LineHandle,
    off_line: &mut LineHandle,
    steps: usize,
    advance: (f64, f64),
) -> Result<Vec<PointId>, ConstructionError> {
    let mut chain = vec![start];
    for k in 1..=steps {
        let prev = *chain.last().unwrap();
        let (px, py) = tk.ptf(prev);
        let plan = (px + advance.0, py + advance.1);
        let target = if k % 2 == 1 { &mut *base } else { &mut *off_line };
        let hits = tk.compass_on_line(prev, target)?;
        let plan_foot = {
            let p = Point2::from_f64(plan.0, plan.1, 64);
            target.carrier.foot_of(&p).to_f64()
        };
        let next = pick_nearest(tk, &hits, plan_foot).ok_or_else(|| {
            ConstructionError::DegenerateConfiguration("zig-zag compass step found no candidate".into())
        })?;
        chain.push(next);
    }
    Ok(chain)
}

/// One mirrored pair of chains; returns their crossing point.
#[allow(clippy::too_many_arguments)]
fn chain_crossing(
    tk: &mut Toolkit,
    line_ab: &mut LineHandle,
    parallel: &mut LineHandle,
    r0: PointId,
    t0: PointId,
    length: f64,
    height: f64,
    u: (f64, f64),
) -> Result<PointId, ConstructionError> {
    let w = (1.0 - height * height).sqrt();
    let steps = (length / (2.0 * w)).ceil().max(1.0) as usize;
    let fwd = advance_chain(tk, r0, line_ab, parallel, steps, (u.0 * w, u.1 * w))?;
    let bwd = advance_chain(tk, t0, line_ab, parallel, steps, (-u.0 * w, -u.1 * w))?;
    let sa = tk.board.lay_stick_both_ends(fwd[steps - 1], fwd[steps])?;
    let sb = tk.board.lay_stick_both_ends(bwd[steps - 1], bwd[steps])?;
    tk.board.mark_crossing(sa, sb)?.ok_or_else(|| {
        ConstructionError::DegenerateConfiguration("mirror chain segments did not cross".into())
    })
}

/// Construct the perpendicular bisector of `[a, b]` and its midpoint.
///
/// `line_ab` must pass through both points. The returned handle's carrier is
/// the bisector; the returned point is the midpoint of `[a, b]`.
pub fn perpendicular_bisector(
    tk: &mut Toolkit,
    a: PointId,
    b: PointId,
    line_ab: &mut LineHandle,
) -> Result<(LineHandle, PointId), ConstructionError> {
    if tk.ctx().points_equal(tk.pt(a), tk.pt(b)) {
        return Err(ConstructionError::DegenerateSegment);
    }
    let mut p_a = perpendicular_at(tk, line_ab, a)?;
    let mut p_b = perpendicular_at(tk, line_ab, b)?;
    let h = tk.choice.chain_height().to_f64();

    // Planning frame: u from a toward b, chains at heights h and h − 1.
    let (ax, ay) = tk.ptf(a);
    let (bx, by) = tk.ptf(b);
    let length = ((bx - ax).powi(2) + (by - ay).powi(2)).sqrt();
    let u = ((bx - ax) / length, (by - ay) / length);

    // Param sign on each perpendicular that lands on the left of a→b.
    let up_param = |perp: &LineHandle, h: f64| -> Scalar {
        let (dx, dy) = perp.carrier.dir.to_f64();
        let sign = if u.0 * dy - u.1 * dx > 0.0 { h } else { -h };
        Scalar::from_f64(sign, 256)
    };
    let r0 = {
        let t = up_param(&p_a, h);
        p_a.point_at_param(tk, &t)?
    };
    let s0 = {
        let t = up_param(&p_a, h - 1.0);
        p_a.point_at_param(tk, &t)?
    };
    let t0 = {
        let t = up_param(&p_b, h);
        p_b.point_at_param(tk, &t)?
    };
    let u0 = {
        let t = up_param(&p_b, h - 1.0);
        p_b.point_at_param(tk, &t)?
    };

    // The two parallels the chains alternate onto.
    let mut r_line = perpendicular_at(tk, &mut p_a, r0)?;
    let mut s_line = perpendicular_at(tk, &mut p_a, s0)?;

    let p = chain_crossing(tk, line_ab, &mut r_line, r0, t0, length, h, u)?;
    let q = chain_crossing(tk, line_ab, &mut s_line, s0, u0, length, 1.0 - h, u)?;
    if tk.ctx().points_equal(tk.pt(p), tk.pt(q)) {
        return Err(ConstructionError::DegenerateConfiguration(
            "upper and lower chain crossings coincide".into(),
        ));
    }

    let mut bis = LineHandle::from_close_points(tk, p, q)?;
    let mid = tk.cross_lines(&mut bis, line_ab)?;
    Ok((bis, mid))
}
