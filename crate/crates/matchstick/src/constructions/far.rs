//! Lines through distant points (intercept-theorem halving).
//!
//! To join two points farther than one unit apart, build axes at `A`, cover
//! `B` with the spiral grid, drop `C` (the corner of `B`'s parallel and `A`'s
//! perpendicular axis), and repeatedly halve: midpoints of `[Aᵢ₋₁, C]` and
//! `[Bᵢ₋₁, C]` shrink the segment by the intercept theorem while keeping it
//! parallel to `AB`. Once the halved segment fits a stick, the answer is the
//! parallel to it through `B`.

use crate::numerics::{Cmp, Scalar};
use crate::trace::PointId;

use super::bisector::perpendicular_bisector;
use super::grid::coordinate_grid;
use super::near::parallel_and_perpendicular_near;
use super::perpendicular::perpendicular_at;
use super::{ConstructionError, LineHandle, Toolkit};

/// Is `p` on the carrier of `l` within the equality tolerance?
fn on_line(tk: &Toolkit, l: &LineHandle, p: PointId) -> bool {
    let off = l.carrier.signed_dist(tk.pt(p));
    tk.ctx().scalar_equal(&off, &Scalar::zero(off.precision()))
}

/// Construct the line through two arbitrary board points.
pub fn line_through(tk: &mut Toolkit, a: PointId, b: PointId) -> Result<LineHandle, ConstructionError> {
    if tk.ctx().points_equal(tk.pt(a), tk.pt(b)) {
        return Err(ConstructionError::DegenerateSegment);
    }
    match tk.board.cmp_unit(a, b)? {
        Cmp::Equal => return LineHandle::from_unit_points(tk, a, b),
        Cmp::Less => return LineHandle::from_close_points(tk, a, b),
        Cmp::Greater => {}
    }

    // Axes at A in a fresh direction; B might happen to lie on one of them.
    let dir = tk.choice.direction();
    let aim = tk.pt(a).add(&dir);
    let mut l = LineHandle::from_direction(tk, a, &aim)?;
    let mut p = perpendicular_at(tk, &mut l, a)?;
    if on_line(tk, &l, b) {
        return Ok(l);
    }
    if on_line(tk, &p, b) {
        return Ok(p);
    }

    let grid = coordinate_grid(tk, a, l.clone(), p.clone(), b)?;
    let (_, by) = grid.frame_of(tk, &tk.pt(b).clone());

    // d: the parallel to l through B, via the nearest horizontal grid line.
    let mut d = {
        let k = by.round() as i64;
        let mut nearest = grid.horizontals[&k].clone();
        parallel_and_perpendicular_near(tk, &mut nearest, b)?.0
    };
    // C: corner of d with A's perpendicular axis.
    let c = tk.cross_lines(&mut d, &mut p)?;

    // Halve toward C until the segment fits a stick.
    let mut ai = a;
    let mut bi = b;
    let mut fit = tk.board.cmp_unit(ai, bi)?;
    while fit == Cmp::Greater {
        ai = perpendicular_bisector(tk, ai, c, &mut p)?.1;
        bi = perpendicular_bisector(tk, bi, c, &mut d)?.1;
        fit = tk.board.cmp_unit(ai, bi)?;
    }
    let mut m = if fit == Cmp::Equal {
        LineHandle::from_unit_points(tk, ai, bi)?
    } else {
        LineHandle::from_close_points(tk, ai, bi)?
    };
    parallel_through(tk, &mut m, b)
}

/// Construct the parallel to `l` through `b` (any distance).
pub fn parallel_through(tk: &mut Toolkit, l: &mut LineHandle, b: PointId) -> Result<LineHandle, ConstructionError> {
    if on_line(tk, l, b) {
        return Ok(l.clone());
    }
    let off = l.carrier.signed_dist(tk.pt(b)).abs();
    if tk.ctx().cmp_scalar(&off, &Scalar::one(off.precision()))? != Cmp::Greater {
        return Ok(parallel_and_perpendicular_near(tk, l, b)?.0);
    }
    let a0 = l.mark(0).expect("handles keep their anchor mark");
    let q = perpendicular_at(tk, l, a0)?;
    let grid = coordinate_grid(tk, a0, l.clone(), q, b)?;
    let (_, by) = grid.frame_of(tk, &tk.pt(b).clone());
    let k = by.round() as i64;
    let mut nearest = grid.horizontals[&k].clone();
    Ok(parallel_and_perpendicular_near(tk, &mut nearest, b)?.0)
}

/// Construct the perpendicular to `p` through `b` (any distance).
pub fn perpendicular_through(tk: &mut Toolkit, p: &mut LineHandle, b: PointId) -> Result<LineHandle, ConstructionError> {
    if on_line(tk, p, b) {
        return perpendicular_at(tk, p, b);
    }
    let off = p.carrier.signed_dist(tk.pt(b)).abs();
    if tk.ctx().cmp_scalar(&off, &Scalar::one(off.precision()))? != Cmp::Greater {
        return Ok(parallel_and_perpendicular_near(tk, p, b)?.1);
    }
    let a0 = p.mark(0).expect("handles keep their anchor mark");
    let q = perpendicular_at(tk, p, a0)?;
    let grid = coordinate_grid(tk, a0, p.clone(), q, b)?;
    let (bx, _) = grid.frame_of(tk, &tk.pt(b).clone());
    let k = bx.round() as i64;
    let mut nearest = grid.verticals[&k].clone();
    Ok(parallel_and_perpendicular_near(tk, &mut nearest, b)?.0)
}

/// Decide whether two constructed lines are parallel: build the parallel to
/// `l1` through a point of `l2` and check coincidence.
pub fn are_parallel(tk: &mut Toolkit, l1: &mut LineHandle, l2: &mut LineHandle) -> Result<bool, ConstructionError> {
    let b = l2.mark(0).expect("handles keep their anchor mark");
    let l3 = parallel_through(tk, l1, b)?;
    // l3 passes through a point of l2, so coincidence reduces to direction.
    let cross = l3.carrier.dir.cross(&l2.carrier.dir);
    let on = l3.carrier.signed_dist(tk.pt(b));
    Ok(tk.ctx().scalar_equal(&cross, &Scalar::zero(cross.precision()))
        && tk.ctx().scalar_equal(&on, &Scalar::zero(on.precision())))
}
