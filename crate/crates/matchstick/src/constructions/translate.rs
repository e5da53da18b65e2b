//! Segment translation via parallelogram construction.
//!
//! `U = T + (Q − P)` is the fourth corner of the parallelogram `P Q U T`:
//! the crossing of the parallel to `(PQ)` through `T` with the parallel to
//! `(PT)` through `Q`. When `T` is collinear with `(PQ)` the parallelogram
//! degenerates, so the translation detours through a point off the line.

use crate::numerics::Scalar;
use crate::trace::PointId;

use super::far::{line_through, parallel_through};
use super::perpendicular::perpendicular_at;
use super::{ConstructionError, Toolkit};

/// Translate `t` by the vector from `p` to `q`.
pub fn translate_segment(tk: &mut Toolkit, p: PointId, q: PointId, t: PointId) -> Result<PointId, ConstructionError> {
    if tk.ctx().points_equal(tk.pt(p), tk.pt(q)) {
        return Err(ConstructionError::DegenerateSegment);
    }
    if tk.ctx().points_equal(tk.pt(t), tk.pt(p)) {
        return Ok(q);
    }
    let mut line_pq = line_through(tk, p, q)?;
    let off = line_pq.carrier.signed_dist(tk.pt(t));
    if tk.ctx().scalar_equal(&off, &Scalar::zero(off.precision())) {
        // T collinear with (PQ): hop one unit off the line and compose two
        // non-degenerate translations.
        let mut perp = perpendicular_at(tk, &mut line_pq, t)?;
        let one = Scalar::one(256);
        let m = perp.point_at_param(tk, &one)?;
        if tk.ctx().points_equal(tk.pt(m), tk.pt(t)) {
            return Err(ConstructionError::DegenerateConfiguration(
                "translation detour failed to leave the line".into(),
            ));
        }
        let shifted = translate_segment(tk, p, q, m)?;
        return translate_segment(tk, m, shifted, t);
    }
    let mut line_pt = line_through(tk, p, t)?;
    let mut through_t = parallel_through(tk, &mut line_pq, t)?;
    let mut through_q = parallel_through(tk, &mut line_pt, q)?;
    tk.cross_lines(&mut through_t, &mut through_q)
}
