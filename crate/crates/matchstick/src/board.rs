//! The board: executable primitive instruction set.
//!
//! A [`Board`] holds the points and sticks placed so far, executes primitive
//! instructions (the three postulates plus bookkeeping), checks their legality
//! and records every instruction together with its result claims into a
//! [`Trace`].
//!
//! Two invariants matter for reproducibility:
//!
//! * Every numeric parameter (input coordinates, offsets along sticks, aiming
//!   coordinates) is canonicalized through the decimal trace representation
//!   *before* it is used, so executing the recorded trace reproduces the
//!   executor's arithmetic bit for bit.
//! * Points that coincide within the predicate tolerance are unified: the
//!   existing identifier is reused and no duplicate point is created.

use std::collections::HashMap;

use crate::config::Config;
use crate::numerics::predicates::NumCtx;
use crate::numerics::{intersect, Cmp, NumError, Point2, Scalar, Segment2};
use crate::trace::{Header, Instr, PointClaim, PointId, Record, StickClaim, StickId, Trace};

/// Spatial-hash cell size for point unification (planning only; the actual
/// equality test is the exact predicate).
const CELL: f64 = 1.0 / 1024.0;

#[derive(Debug)]
pub struct Board {
    config: Config,
    ctx: NumCtx,
    points: Vec<Point2>,
    sticks: Vec<(PointId, PointId)>,
    records: Vec<Record>,
    cells: HashMap<(i64, i64), Vec<PointId>>,
}

/// Illegal instruction or numeric failure while executing on the board.
#[derive(Debug, thiserror::Error)]
pub enum BoardError {
    #[error("points {a} and {b} are not at unit distance (measured {found})")]
    UnitLength { a: PointId, b: PointId, found: String },
    #[error("points {a} and {b} are farther than the stick is long")]
    TooFar { a: PointId, b: PointId },
    #[error("offset {t} outside the stick (expected {range})")]
    OffsetOutOfRange { t: String, range: &'static str },
    #[error("sticks {a} and {b} are collinear and overlap in more than a point")]
    CollinearSticks { a: StickId, b: StickId },
    #[error("stick cannot pass through both {a} and {b} at offset {t}")]
    DoesNotFit { a: PointId, b: PointId, t: String },
    #[error(transparent)]
    Num(#[from] NumError),
}

impl Board {
    pub fn new(config: Config) -> Self {
        let ctx = NumCtx::new(&config);
        Board { config, ctx, points: Vec::new(), sticks: Vec::new(), records: Vec::new(), cells: HashMap::new() }
    }

    pub fn config(&self) -> &Config {
        &self.config
    }

    pub fn ctx(&self) -> &NumCtx {
        &self.ctx
    }

    pub fn point(&self, id: PointId) -> &Point2 {
        &self.points[id.0 as usize]
    }

    pub fn stick(&self, id: StickId) -> (PointId, PointId) {
        self.sticks[id.0 as usize]
    }

    pub fn stick_segment(&self, id: StickId) -> Segment2 {
        let (a, b) = self.stick(id);
        Segment2::new(self.point(a).clone(), self.point(b).clone())
    }

    pub fn point_count(&self) -> usize {
        self.points.len()
    }

    pub fn stick_count(&self) -> usize {
        self.sticks.len()
    }

    /// Number of physical instructions recorded so far (inputs and output
    /// naming are bookkeeping, not actions on the board).
    pub fn instruction_count(&self) -> usize {
        self.records
            .iter()
            .filter(|r| !matches!(r.instr, Instr::GivenPoint { .. } | Instr::Output { .. }))
            .count()
    }

    pub fn records(&self) -> &[Record] {
        &self.records
    }

    pub fn into_trace(self) -> Trace {
        Trace { header: Header::from_config(&self.config), records: self.records }
    }

    pub fn trace(&self) -> Trace {
        Trace { header: Header::from_config(&self.config), records: self.records.clone() }
    }

    // ----- canonicalization and unification ---------------------------------

    /// Canonical decimal form of a parameter and the value actually used.
    ///
    /// Parameters carry 20 guard digits beyond the claim precision: a line's
    /// direction inherits the quantization error of its defining parameters,
    /// amplified by the distance it is extended, so parameters must be sharper
    /// than the ε_eq contract on derived coordinates.
    fn canon(&self, s: &Scalar) -> (String, Scalar) {
        let text = s.to_decimal_string(self.config.output_digits + 20);
        let value = Scalar::from_decimal(&text, self.config.precision_bits)
            .expect("canonical decimal strings always parse");
        (text, value)
    }

    fn cell_of(p: &Point2) -> (i64, i64) {
        let (x, y) = p.to_f64();
        ((x / CELL).floor() as i64, (y / CELL).floor() as i64)
    }

    /// Existing point coincident with `p`, if any.
    pub fn find_point(&self, p: &Point2) -> Option<PointId> {
        let (cx, cy) = Self::cell_of(p);
        for dx in -1..=1 {
            for dy in -1..=1 {
                if let Some(ids) = self.cells.get(&(cx + dx, cy + dy)) {
                    for &id in ids {
                        if self.ctx.points_equal(self.point(id), p) {
                            return Some(id);
                        }
                    }
                }
            }
        }
        None
    }

    /// Reuse a coincident existing point or insert a new one.
    fn intern_point(&mut self, p: Point2) -> (PointId, bool) {
        if let Some(id) = self.find_point(&p) {
            return (id, false);
        }
        let id = PointId(self.points.len() as u32);
        self.cells.entry(Self::cell_of(&p)).or_default().push(id);
        self.points.push(p);
        (id, true)
    }

    fn find_stick(&self, a: PointId, b: PointId) -> Option<StickId> {
        self.sticks
            .iter()
            .position(|&(p, q)| (p, q) == (a, b) || (p, q) == (b, a))
            .map(|i| StickId(i as u32))
    }

    fn intern_stick(&mut self, a: PointId, b: PointId) -> (StickId, bool) {
        if let Some(id) = self.find_stick(a, b) {
            return (id, false);
        }
        let id = StickId(self.sticks.len() as u32);
        self.sticks.push((a, b));
        (id, true)
    }

    fn push_record(&mut self, instr: Instr, new_points: Vec<PointClaim>, new_sticks: Vec<StickClaim>, candidates: Option<usize>, cmp: Option<String>) {
        let seq = self.records.len() as u32 + 1;
        self.records.push(Record { seq, instr, new_points, new_sticks, candidates, cmp });
    }

    fn point_claim(&self, id: PointId) -> PointClaim {
        let p = self.point(id);
        PointClaim {
            id,
            x: p.x.to_decimal_string(self.config.output_digits),
            y: p.y.to_decimal_string(self.config.output_digits),
        }
    }

    // ----- instructions -----------------------------------------------------

    /// Bring a program input point onto the board.
    pub fn given_point(&mut self, x: &Scalar, y: &Scalar) -> PointId {
        let (xs, xv) = self.canon(x);
        let (ys, yv) = self.canon(y);
        let (id, is_new) = self.intern_point(Point2::new(xv, yv));
        if is_new {
            let claim = self.point_claim(id);
            self.push_record(Instr::GivenPoint { x: xs, y: ys }, vec![claim], vec![], None, None);
        }
        id
    }

    /// Lay a stick with its extremities exactly on `a` and `b`.
    pub fn lay_stick_both_ends(&mut self, a: PointId, b: PointId) -> Result<StickId, BoardError> {
        match self.ctx.cmp_unit_distance(self.point(a), self.point(b))? {
            Cmp::Equal => {}
            _ => {
                let found = self.point(a).dist(self.point(b)).to_decimal_string(12);
                return Err(BoardError::UnitLength { a, b, found });
            }
        }
        let (id, is_new) = self.intern_stick(a, b);
        if is_new {
            self.push_record(
                Instr::LayStickBothEnds { a, b },
                vec![],
                vec![StickClaim { id, a, b }],
                None,
                None,
            );
        }
        Ok(id)
    }

    /// Lay a stick with one extremity on `from`, passing through `through`
    /// (at distance at most one). Returns the stick and its far extremity.
    pub fn lay_stick_from_through(&mut self, from: PointId, through: PointId) -> Result<(StickId, PointId), BoardError> {
        match self.ctx.cmp_unit_distance(self.point(from), self.point(through))? {
            Cmp::Greater => return Err(BoardError::TooFar { a: from, b: through }),
            _ => {}
        }
        let far = intersect::unit_point_on_ray(self.point(from), self.point(through), &self.ctx)?;
        let (far_id, p_new) = self.intern_point(far);
        let (stick_id, s_new) = self.intern_stick(from, far_id);
        if s_new {
            let new_points = if p_new { vec![self.point_claim(far_id)] } else { vec![] };
            self.push_record(
                Instr::LayStickFromThrough { from, through },
                new_points,
                vec![StickClaim { id: stick_id, a: from, b: far_id }],
                None,
                None,
            );
        }
        Ok((stick_id, far_id))
    }

    /// Lay a stick through both `a` and `b`, with `a` at offset `t` from the
    /// near extremity. Requires `t + |ab| <= 1`. Returns the stick and its
    /// two extremities.
    pub fn lay_stick_through_both(&mut self, a: PointId, b: PointId, t: &Scalar) -> Result<(StickId, PointId, PointId), BoardError> {
        let (ts, tv) = self.canon(t);
        if tv.is_negative() || tv > Scalar::one(64) {
            return Err(BoardError::OffsetOutOfRange { t: ts, range: "[0, 1]" });
        }
        let pa = self.point(a).clone();
        let pb = self.point(b).clone();
        let gap = pa.dist(&pb);
        let reach = &Scalar::one(self.config.precision_bits) - &tv;
        match self.ctx.cmp_scalar(&gap, &reach)? {
            Cmp::Greater => return Err(BoardError::DoesNotFit { a, b, t: ts }),
            _ => {}
        }
        let u = pb.sub(&pa);
        let inv = Scalar::one(self.config.precision_bits) / u.norm();
        let u = u.scale(&inv);
        let start = pa.sub(&u.scale(&tv));
        let end = start.add(&u);
        let (s_id, s_is_new) = self.intern_point(start);
        let (e_id, e_is_new) = self.intern_point(end);
        let (stick_id, is_new) = self.intern_stick(s_id, e_id);
        if is_new {
            let mut new_points = Vec::new();
            if s_is_new {
                new_points.push(self.point_claim(s_id));
            }
            if e_is_new {
                new_points.push(self.point_claim(e_id));
            }
            self.push_record(
                Instr::LayStickThroughBoth { a, b, t: ts },
                new_points,
                vec![StickClaim { id: stick_id, a: s_id, b: e_id }],
                None,
                None,
            );
        }
        Ok((stick_id, s_id, e_id))
    }

    /// Lay a stick with one extremity on `from`, aimed through the auxiliary
    /// location `(x, y)`. Only the direction is taken from the location; it
    /// does not become a board point.
    pub fn lay_stick_toward(&mut self, from: PointId, toward: &Point2) -> Result<(StickId, PointId), BoardError> {
        let (xs, xv) = self.canon(&toward.x);
        let (ys, yv) = self.canon(&toward.y);
        let aim = Point2::new(xv, yv);
        let far = intersect::unit_point_on_ray(self.point(from), &aim, &self.ctx)?;
        let (far_id, p_new) = self.intern_point(far);
        let (stick_id, s_new) = self.intern_stick(from, far_id);
        if s_new {
            let new_points = if p_new { vec![self.point_claim(far_id)] } else { vec![] };
            self.push_record(
                Instr::LayStickToward { from, x: xs, y: ys },
                new_points,
                vec![StickClaim { id: stick_id, a: from, b: far_id }],
                None,
                None,
            );
        }
        Ok((stick_id, far_id))
    }

    /// Choose the point at offset `t` along a stick (measured from its first
    /// extremity). With `interior_only` the extremities are excluded.
    pub fn choose_point_on_stick(&mut self, stick: StickId, t: &Scalar, interior_only: bool) -> Result<PointId, BoardError> {
        let (ts, tv) = self.canon(t);
        let one = Scalar::one(64);
        let in_range = if interior_only {
            tv > self.ctx.eps_eq && tv < &one - &self.ctx.eps_eq
        } else {
            !tv.is_negative() && tv <= one
        };
        if !in_range {
            return Err(BoardError::OffsetOutOfRange {
                t: ts,
                range: if interior_only { "(0, 1)" } else { "[0, 1]" },
            });
        }
        let (a, b) = self.stick(stick);
        let pa = self.point(a).clone();
        let pb = self.point(b).clone();
        let p = pa.add(&pb.sub(&pa).scale(&tv));
        let (id, is_new) = self.intern_point(p);
        if is_new {
            let claim = self.point_claim(id);
            self.push_record(
                Instr::ChoosePointOnStick { stick, t: ts, interior_only },
                vec![claim],
                vec![],
                None,
                None,
            );
        }
        Ok(id)
    }

    /// Pivot a unit stick about `center` and mark every point where its far
    /// extremity meets `stick`. One stick at a time — that is the postulate.
    /// Returns the candidate points in lexicographic order.
    pub fn compass_intersect(&mut self, center: PointId, stick: StickId) -> Result<Vec<PointId>, BoardError> {
        let seg = self.stick_segment(stick);
        let hits = intersect::unit_circle_segment(self.point(center), &seg, &self.ctx)?;
        let mut ids = Vec::with_capacity(hits.len());
        let mut claims = Vec::new();
        for p in hits {
            let (id, is_new) = self.intern_point(p);
            if is_new {
                claims.push(self.point_claim(id));
            }
            ids.push(id);
        }
        self.push_record(
            Instr::CompassIntersect { center, sticks: vec![stick] },
            claims,
            vec![],
            Some(ids.len()),
            None,
        );
        Ok(ids)
    }

    /// Mark the crossing point of two sticks, if they cross.
    pub fn mark_crossing(&mut self, a: StickId, b: StickId) -> Result<Option<PointId>, BoardError> {
        let sa = self.stick_segment(a);
        let sb = self.stick_segment(b);
        match intersect::segment_intersection(&sa, &sb, &self.ctx)? {
            intersect::SegCross::CollinearOverlap => Err(BoardError::CollinearSticks { a, b }),
            intersect::SegCross::None => {
                self.push_record(Instr::MarkCrossing { a, b }, vec![], vec![], Some(0), None);
                Ok(None)
            }
            intersect::SegCross::One(p) => {
                let (id, is_new) = self.intern_point(p);
                let claims = if is_new { vec![self.point_claim(id)] } else { vec![] };
                self.push_record(Instr::MarkCrossing { a, b }, claims, vec![], Some(1), None);
                Ok(Some(id))
            }
        }
    }

    /// Compare the distance of two points against the unit.
    pub fn cmp_unit(&mut self, a: PointId, b: PointId) -> Result<Cmp, BoardError> {
        let r = self.ctx.cmp_unit_distance(self.point(a), self.point(b))?;
        self.push_record(Instr::CmpUnit { a, b }, vec![], vec![], None, Some(r.to_string()));
        Ok(r)
    }

    /// Name a set of points and sticks as a program result.
    pub fn output(&mut self, name: &str, points: Vec<PointId>, sticks: Vec<StickId>) {
        self.push_record(
            Instr::Output { name: name.to_owned(), points, sticks },
            vec![],
            vec![],
            None,
            None,
        );
    }
}
