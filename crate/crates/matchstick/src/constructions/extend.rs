//! Lines as extendable chains of unit sticks (segment extension).
//!
//! A [`LineHandle`] keeps the collinear chain bookkeeping: a carrier line for
//! planning, points ("marks") at integer parameters along it, and the unit
//! stick covering each covered parameter interval `[k, k+1]`. Extension by one
//! unit costs three instructions: choose an interior point of the outermost
//! stick, lay a stick from it through the outer end, and lay a stick from the
//! outer end through that stick's far extremity.

use std::collections::BTreeMap;

use crate::numerics::{Line2, Point2, Scalar};
use crate::trace::{PointId, StickId};

use super::{ConstructionError, Toolkit};

/// An unbounded line realized as a chain of unit sticks.
#[derive(Debug, Clone)]
pub struct LineHandle {
    /// Planning carrier; the anchor is the mark at parameter 0.
    pub carrier: Line2,
    marks: BTreeMap<i64, PointId>,
    sticks: BTreeMap<i64, StickId>,
}

impl LineHandle {
    pub(crate) fn from_endpoints(tk: &Toolkit, stick: StickId, a: PointId, b: PointId) -> Self {
        let dir = tk.pt(b).sub(tk.pt(a));
        let carrier = Line2::from_anchor_dir(tk.pt(a).clone(), dir);
        let mut marks = BTreeMap::new();
        marks.insert(0, a);
        marks.insert(1, b);
        let mut sticks = BTreeMap::new();
        sticks.insert(0, stick);
        LineHandle { carrier, marks, sticks }
    }

    /// Line through two points at unit distance.
    pub fn from_unit_points(tk: &mut Toolkit, a: PointId, b: PointId) -> Result<Self, ConstructionError> {
        let stick = tk.board.lay_stick_both_ends(a, b)?;
        Ok(LineHandle::from_endpoints(tk, stick, a, b))
    }

    /// Line along an existing stick.
    pub fn from_stick(tk: &Toolkit, stick: StickId) -> Self {
        let (a, b) = tk.board.stick(stick);
        LineHandle::from_endpoints(tk, stick, a, b)
    }

    /// Line from a point in a fresh direction given by an aiming location.
    pub fn from_direction(tk: &mut Toolkit, a: PointId, aim: &Point2) -> Result<Self, ConstructionError> {
        let (stick, far) = tk.board.lay_stick_toward(a, aim)?;
        Ok(LineHandle::from_endpoints(tk, stick, a, far))
    }

    /// Line through two points closer than one unit: a single stick is laid
    /// through both, centered so that each extremity clears the points.
    pub fn from_close_points(tk: &mut Toolkit, a: PointId, b: PointId) -> Result<Self, ConstructionError> {
        if tk.ctx().points_equal(tk.pt(a), tk.pt(b)) {
            return Err(ConstructionError::DegenerateSegment);
        }
        let gap = tk.pt(a).dist(tk.pt(b));
        let t = (Scalar::one(gap.precision()) - &gap).half();
        let (stick, s, e) = tk.board.lay_stick_through_both(a, b, &t)?;
        Ok(LineHandle::from_endpoints(tk, stick, s, e))
    }

    /// The point at integer parameter `k`, if that mark exists.
    pub fn mark(&self, k: i64) -> Option<PointId> {
        self.marks.get(&k).copied()
    }

    /// All integer-parameter marks currently on the chain.
    pub fn mark_points(&self) -> Vec<PointId> {
        self.marks.values().copied().collect()
    }

    /// All sticks currently realizing the chain.
    pub fn stick_ids(&self) -> Vec<StickId> {
        self.sticks.values().copied().collect()
    }

    pub fn covered(&self) -> (i64, i64) {
        let lo = *self.marks.keys().next().expect("handle has marks");
        let hi = *self.marks.keys().next_back().expect("handle has marks");
        (lo, hi)
    }

    /// Planning parameter of a point along the carrier.
    pub fn param_f(&self, p: &Point2) -> f64 {
        self.carrier.param_of(p).to_f64()
    }

    /// Extend the chain until marks `lo..=hi` exist.
    pub fn ensure_cover(&mut self, tk: &mut Toolkit, lo: i64, hi: i64) -> Result<(), ConstructionError> {
        assert!(hi - lo < 1_000_000, "implausible cover request {lo}..{hi}");
        let (mut cur_lo, mut cur_hi) = self.covered();
        while cur_hi < hi {
            let t = tk.choice.split_param();
            let stick = self.sticks[&(cur_hi - 1)];
            let end = self.marks[&cur_hi];
            let p = self.choose_on(tk, stick, cur_hi - 1, &(Scalar::from_i64(cur_hi - 1, t.precision()) + &t))?;
            let (_, f) = tk.board.lay_stick_from_through(p, end)?;
            let (s2, far) = tk.board.lay_stick_from_through(end, f)?;
            self.marks.insert(cur_hi + 1, far);
            self.sticks.insert(cur_hi, s2);
            cur_hi += 1;
        }
        while cur_lo > lo {
            let t = tk.choice.split_param();
            let stick = self.sticks[&cur_lo];
            let end = self.marks[&cur_lo];
            let p = self.choose_on(tk, stick, cur_lo, &(Scalar::from_i64(cur_lo, t.precision()) + &t))?;
            let (_, f) = tk.board.lay_stick_from_through(p, end)?;
            let (s2, far) = tk.board.lay_stick_from_through(end, f)?;
            self.marks.insert(cur_lo - 1, far);
            self.sticks.insert(cur_lo - 1, s2);
            cur_lo -= 1;
        }
        Ok(())
    }

    /// The stick covering parameter `t`, extending the chain if needed.
    pub fn stick_containing(&mut self, tk: &mut Toolkit, t: f64) -> Result<StickId, ConstructionError> {
        let k = t.floor() as i64;
        self.ensure_cover(tk, k, k + 1)?;
        Ok(self.sticks[&k])
    }

    /// Choose the board point at carrier parameter `t` (postulate ii on the
    /// covering stick). Integer parameters return the existing mark.
    pub fn point_at_param(&mut self, tk: &mut Toolkit, t: &Scalar) -> Result<PointId, ConstructionError> {
        let tf = t.to_f64();
        if (tf - tf.round()).abs() < 1e-9 {
            let k = tf.round() as i64;
            self.ensure_cover(tk, k, k)?;
            return Ok(self.marks[&k]);
        }
        let k = tf.floor() as i64;
        self.ensure_cover(tk, k, k + 1)?;
        let stick = self.sticks[&k];
        self.choose_on(tk, stick, k, t)
    }

    /// Choose on `stick` (which covers `[k, k+1]`) the point at carrier
    /// parameter `t`, honoring the stick's stored orientation.
    fn choose_on(&self, tk: &mut Toolkit, stick: StickId, k: i64, t: &Scalar) -> Result<PointId, ConstructionError> {
        let (a, _) = tk.board.stick(stick);
        let frac = t - Scalar::from_i64(k, t.precision());
        let frac = if a == self.marks[&k] {
            frac
        } else {
            Scalar::one(frac.precision()) - frac
        };
        Ok(tk.board.choose_point_on_stick(stick, &frac, false)?)
    }
}

impl Toolkit {
    /// Candidate covering intervals for carrier parameter `t`: normally the
    /// single interval `[⌊t⌋, ⌊t⌋+1]`, both neighbors when `t` is close to an
    /// integer (planning in f64 cannot tell which side it falls on).
    fn intervals_for(t: f64) -> Vec<i64> {
        let k = t.floor() as i64;
        if (t - t.round()).abs() < 1e-6 {
            let r = t.round() as i64;
            vec![r - 1, r]
        } else {
            vec![k]
        }
    }

    /// Mark the crossing point of two (extendable) lines.
    pub fn cross_lines(&mut self, a: &mut LineHandle, b: &mut LineHandle) -> Result<PointId, ConstructionError> {
        let p = match crate::numerics::intersect::line_line(&a.carrier, &b.carrier, self.ctx())? {
            crate::numerics::intersect::LineLine::Point(p) => p,
            _ => {
                return Err(ConstructionError::DegenerateConfiguration(
                    "lines do not cross in a single point".into(),
                ))
            }
        };
        let kas = Self::intervals_for(a.param_f(&p));
        let kbs = Self::intervals_for(b.param_f(&p));
        for &ka in &kas {
            for &kb in &kbs {
                a.ensure_cover(self, ka, ka + 1)?;
                b.ensure_cover(self, kb, kb + 1)?;
                let sa = a.stick_containing(self, ka as f64 + 0.5)?;
                let sb = b.stick_containing(self, kb as f64 + 0.5)?;
                if sa == sb {
                    continue;
                }
                if let Some(id) = self.board.mark_crossing(sa, sb)? {
                    return Ok(id);
                }
            }
        }
        Err(ConstructionError::DegenerateConfiguration(
            "planned crossing not found on the covering sticks".into(),
        ))
    }

    /// All intersections of the unit circle about `center` with `line`,
    /// realized by compass swings against one stick at a time. The candidate
    /// points are returned in lexicographic order; when the circle misses the
    /// line entirely, a single (empty) compass record witnesses it.
    pub fn compass_on_line(&mut self, center: PointId, line: &mut LineHandle) -> Result<Vec<PointId>, ConstructionError> {
        let circle = crate::numerics::Circle2::new(
            self.pt(center).clone(),
            crate::numerics::Scalar::one(self.board.config().precision_bits),
        );
        let hits = crate::numerics::intersect::circle_line(&circle, &line.carrier, self.ctx())?;
        let mut ks: Vec<i64> = Vec::new();
        if hits.is_empty() {
            // Swing against the stick nearest the foot of the center: the
            // recorded zero-candidate compass witnesses the miss.
            ks.extend(Self::intervals_for(line.param_f(&line.carrier.foot_of(self.pt(center)))));
            ks.truncate(1);
        }
        for p in &hits {
            ks.extend(Self::intervals_for(line.param_f(p)));
        }
        ks.sort_unstable();
        ks.dedup();
        let mut ids: Vec<PointId> = Vec::new();
        for k in ks {
            let stick = line.stick_containing(self, k as f64 + 0.5)?;
            for id in self.board.compass_intersect(center, stick)? {
                if !ids.contains(&id) {
                    ids.push(id);
                }
            }
        }
        ids.sort_by(|&i, &j| self.board.point(i).lex_cmp(self.board.point(j)));
        Ok(ids)
    }
}

/// Extend the line carrying `seed` until it covers `length` units beyond the
/// retained extremity (Prop-1 style chain growth).
pub fn extend_line(tk: &mut Toolkit, seed: StickId, forward: bool, length: f64) -> Result<LineHandle, ConstructionError> {
    let mut handle = LineHandle::from_stick(tk, seed);
    if forward {
        handle.ensure_cover(tk, 0, length.ceil() as i64)?;
    } else {
        handle.ensure_cover(tk, 1 - length.ceil() as i64, 1)?;
    }
    Ok(handle)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::Config;
    use crate::numerics::Scalar;

    fn toolkit() -> Toolkit {
        Toolkit::new(Config::default())
    }

    fn sc(text: &str) -> Scalar {
        Scalar::from_decimal(text, 256).unwrap()
    }

    #[test]
    fn extends_to_length_100_within_instruction_budget() {
        let mut tk = toolkit();
        let a = tk.board.given_point(&sc("0"), &sc("0"));
        let b = tk.board.given_point(&sc("1"), &sc("0"));
        let stick = tk.board.lay_stick_both_ends(a, b).unwrap();
        let handle = extend_line(&mut tk, stick, true, 100.0).unwrap();
        let far = handle.mark(100).unwrap();
        let (x, y) = tk.ptf(far);
        assert!((x - 100.0).abs() < 1e-30);
        assert!(y.abs() < 1e-30);
        assert!(
            tk.board.instruction_count() <= 300,
            "used {} instructions",
            tk.board.instruction_count()
        );
    }

    #[test]
    fn extends_backward_and_at_an_angle() {
        let mut tk = toolkit();
        let a = tk.board.given_point(&sc("0"), &sc("0"));
        let b = tk.board.given_point(&sc("0.6"), &sc("0.8"));
        let stick = tk.board.lay_stick_both_ends(a, b).unwrap();
        let mut handle = LineHandle::from_stick(&tk, stick);
        handle.ensure_cover(&mut tk, -2, 3).unwrap();
        let (x, y) = tk.ptf(handle.mark(-2).unwrap());
        assert!((x + 1.2).abs() < 1e-12 && (y + 1.6).abs() < 1e-12);
        let (x, y) = tk.ptf(handle.mark(3).unwrap());
        assert!((x - 1.8).abs() < 1e-12 && (y - 2.4).abs() < 1e-12);
    }

    #[test]
    fn point_at_fractional_param() {
        let mut tk = toolkit();
        let a = tk.board.given_point(&sc("0"), &sc("0"));
        let b = tk.board.given_point(&sc("1"), &sc("0"));
        let stick = tk.board.lay_stick_both_ends(a, b).unwrap();
        let mut handle = LineHandle::from_stick(&tk, stick);
        let p = handle.point_at_param(&mut tk, &sc("-1.25")).unwrap();
        let (x, y) = tk.ptf(p);
        assert!((x + 1.25).abs() < 1e-12 && y.abs() < 1e-12);
        // Integer params return the existing marks without new instructions.
        let before = tk.board.records().len();
        let m = handle.point_at_param(&mut tk, &sc("1")).unwrap();
        assert_eq!(m, b);
        assert_eq!(tk.board.records().len(), before);
    }

    #[test]
    fn repeated_extension_is_deduplicated() {
        let mut tk = toolkit();
        let a = tk.board.given_point(&sc("0"), &sc("0"));
        let b = tk.board.given_point(&sc("1"), &sc("0"));
        let stick = tk.board.lay_stick_both_ends(a, b).unwrap();
        let mut h1 = LineHandle::from_stick(&tk, stick);
        h1.ensure_cover(&mut tk, 0, 5).unwrap();
        let count = tk.board.records().len();
        // A second handle over the same stick re-derives the same points and
        // sticks; unification means no new instructions are recorded.
        let mut h2 = LineHandle::from_stick(&tk, stick);
        h2.ensure_cover(&mut tk, 0, 5).unwrap();
        assert_eq!(tk.board.records().len(), count);
    }

    #[test]
    fn close_points_get_a_centered_stick() {
        let mut tk = toolkit();
        let a = tk.board.given_point(&sc("0.2"), &sc("0"));
        let b = tk.board.given_point(&sc("0.7"), &sc("0"));
        let handle = LineHandle::from_close_points(&mut tk, a, b).unwrap();
        let (lo, hi) = handle.covered();
        let (x0, _) = tk.ptf(handle.mark(lo).unwrap());
        let (x1, _) = tk.ptf(handle.mark(hi).unwrap());
        assert!((x0 + 0.05).abs() < 1e-12, "start at {x0}");
        assert!((x1 - 0.95).abs() < 1e-12, "end at {x1}");
    }
}
