//! Independent trace verification.
//!
//! The verifier replays a trace on its own tables, re-deriving every result
//! from the instruction parameters with the shared `numerics` routines — it
//! never calls the macro library, and it never trusts a recorded coordinate:
//! claims are checked against the recomputation and the *recomputed* values
//! are what later instructions see. A trace is accepted only if every
//! instruction is legal under the postulates and every claim matches.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::config::Config;
use crate::numerics::predicates::NumCtx;
use crate::numerics::{intersect, Cmp, Point2, Scalar, Segment2};
use crate::trace::{Instr, PointClaim, PointId, Record, StickClaim, StickId, Trace, TraceError};

/// Overall outcome of a verification run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Accept,
    Reject,
}

/// Category of a verification failure.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FindingCode {
    /// A referenced point or stick id was never created.
    UnknownId,
    /// A stick whose extremities are not at unit distance, or a lay
    /// instruction whose points the stick cannot reach.
    UnitLengthViolation,
    /// A choose/lay offset outside its legal range.
    OffsetOutOfRange,
    /// Recorded candidate count differs from the recomputed intersection.
    CandidateCountMismatch,
    /// Recorded coordinates differ from the recomputation beyond tolerance.
    CoordinateMismatch,
    /// A compass record pivoting against more than one stick at once.
    SimultaneityViolation,
    /// A recorded comparison outcome that the recomputation contradicts.
    MeasurementMismatch,
    /// A crossing marked on two collinear overlapping sticks.
    CollinearSticks,
    /// A parameter that does not parse as a decimal number.
    Malformed,
}

impl fmt::Display for FindingCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            FindingCode::UnknownId => "UnknownId",
            FindingCode::UnitLengthViolation => "UnitLengthViolation",
            FindingCode::OffsetOutOfRange => "OffsetOutOfRange",
            FindingCode::CandidateCountMismatch => "CandidateCountMismatch",
            FindingCode::CoordinateMismatch => "CoordinateMismatch",
            FindingCode::SimultaneityViolation => "SimultaneityViolation",
            FindingCode::MeasurementMismatch => "MeasurementMismatch",
            FindingCode::CollinearSticks => "CollinearSticks",
            FindingCode::Malformed => "Malformed",
        };
        f.write_str(s)
    }
}

/// One verification failure, attached to the record that caused it.
#[derive(Debug, Clone)]
pub struct Finding {
    pub seq: u32,
    pub code: FindingCode,
    pub message: String,
}

/// Replay statistics.
#[derive(Debug, Clone, Default)]
pub struct VerifyStats {
    /// Instruction counts by operation name.
    pub instr_counts: BTreeMap<String, usize>,
    /// Highest working precision the replay escalated to.
    pub max_precision_bits: usize,
}

/// Result of verifying one trace.
#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub verdict: Verdict,
    pub findings: Vec<Finding>,
    pub stats: VerifyStats,
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.verdict {
            Verdict::Accept => writeln!(f, "ACCEPT")?,
            Verdict::Reject => writeln!(f, "REJECT")?,
        }
        for finding in &self.findings {
            writeln!(f, "  seq {}: {}: {}", finding.seq, finding.code, finding.message)?;
        }
        let total: usize = self.stats.instr_counts.values().sum();
        writeln!(f, "  {} records, max precision {} bits", total, self.stats.max_precision_bits)?;
        for (op, n) in &self.stats.instr_counts {
            writeln!(f, "    {op}: {n}")?;
        }
        Ok(())
    }
}

/// Parse and verify a serialized trace. The replay configuration is taken
/// from the trace header, so the recomputation uses the same arithmetic the
/// producer claims to have used.
pub fn verify_trace(text: &str) -> Result<VerifyReport, TraceError> {
    let trace = Trace::parse(text)?;
    let config = trace.header.to_config()?;
    Ok(verify_parsed(&trace, &config))
}

/// Verify an already-parsed trace under an explicit configuration.
pub fn verify_parsed(trace: &Trace, config: &Config) -> VerifyReport {
    let mut v = Replayer::new(config);
    for rec in &trace.records {
        v.replay(rec);
    }
    v.into_report()
}

struct Replayer {
    ctx: NumCtx,
    bits: usize,
    digits: usize,
    points: HashMap<PointId, Point2>,
    sticks: HashMap<StickId, (PointId, PointId)>,
    findings: Vec<Finding>,
    counts: BTreeMap<String, usize>,
}

impl Replayer {
    fn new(config: &Config) -> Self {
        Replayer {
            ctx: NumCtx::new(config),
            bits: config.precision_bits,
            digits: config.output_digits,
            points: HashMap::new(),
            sticks: HashMap::new(),
            findings: Vec::new(),
            counts: BTreeMap::new(),
        }
    }

    fn into_report(self) -> VerifyReport {
        let verdict = if self.findings.is_empty() { Verdict::Accept } else { Verdict::Reject };
        VerifyReport {
            verdict,
            findings: self.findings,
            stats: VerifyStats {
                instr_counts: self.counts,
                max_precision_bits: self.ctx.max_precision_seen().max(self.bits),
            },
        }
    }

    fn fail(&mut self, seq: u32, code: FindingCode, message: String) {
        self.findings.push(Finding { seq, code, message });
    }

    fn num(&mut self, seq: u32, text: &str) -> Option<Scalar> {
        match Scalar::from_decimal(text, self.bits) {
            Ok(s) => Some(s),
            Err(e) => {
                self.fail(seq, FindingCode::Malformed, e.to_string());
                None
            }
        }
    }

    fn point(&mut self, seq: u32, id: PointId) -> Option<Point2> {
        match self.points.get(&id) {
            Some(p) => Some(p.clone()),
            None => {
                self.fail(seq, FindingCode::UnknownId, format!("point {id} was never created"));
                None
            }
        }
    }

    fn stick(&mut self, seq: u32, id: StickId) -> Option<(PointId, PointId)> {
        match self.sticks.get(&id) {
            Some(&s) => Some(s),
            None => {
                self.fail(seq, FindingCode::UnknownId, format!("stick {id} was never created"));
                None
            }
        }
    }

    fn segment(&mut self, seq: u32, id: StickId) -> Option<Segment2> {
        let (a, b) = self.stick(seq, id)?;
        let pa = self.point(seq, a)?;
        let pb = self.point(seq, b)?;
        Some(Segment2::new(pa, pb))
    }

    /// Tolerance for a claimed coordinate: the predicate tolerance plus one
    /// decimal ulp of the claim (claims are rounded to `output_digits`).
    fn claim_tol(&self, claimed: &Scalar) -> Scalar {
        let mag = claimed.to_f64().abs();
        let quantum = if mag == 0.0 {
            0.0
        } else {
            10f64.powi(mag.log10().floor() as i32 - self.digits as i32 + 1)
        };
        &self.ctx.eps_eq + &Scalar::from_f64(quantum, 64)
    }

    /// Check one claimed point against its recomputed location and register
    /// the *recomputed* value under the claimed id.
    fn take_claim(&mut self, seq: u32, claim: &PointClaim, recomputed: Point2) {
        let cx = self.num(seq, &claim.x);
        let cy = self.num(seq, &claim.y);
        if let (Some(cx), Some(cy)) = (cx, cy) {
            let dx = (&cx - &recomputed.x).abs();
            let dy = (&cy - &recomputed.y).abs();
            if dx > self.claim_tol(&cx) || dy > self.claim_tol(&cy) {
                self.fail(
                    seq,
                    FindingCode::CoordinateMismatch,
                    format!(
                        "claimed {} = ({}, {}), recomputed ({}, {})",
                        claim.id,
                        claim.x,
                        claim.y,
                        recomputed.x.to_decimal_string(self.digits),
                        recomputed.y.to_decimal_string(self.digits)
                    ),
                );
            }
        }
        self.points.insert(claim.id, recomputed);
    }

    /// Match a set of point claims against a set of recomputed points (used
    /// by instructions that may create several points at once). Claims are
    /// matched greedily to the nearest recomputed point.
    fn take_claims(&mut self, seq: u32, claims: &[PointClaim], mut recomputed: Vec<Point2>) {
        for claim in claims {
            if recomputed.is_empty() {
                self.fail(
                    seq,
                    FindingCode::CoordinateMismatch,
                    format!("claimed point {} has no recomputed counterpart", claim.id),
                );
                return;
            }
            let cx = self.num(seq, &claim.x);
            let cy = self.num(seq, &claim.y);
            let best = match (&cx, &cy) {
                (Some(cx), Some(cy)) => {
                    let target = (cx.to_f64(), cy.to_f64());
                    let mut best = 0;
                    let mut best_d = f64::INFINITY;
                    for (i, p) in recomputed.iter().enumerate() {
                        let (px, py) = p.to_f64();
                        let d = (px - target.0).hypot(py - target.1);
                        if d < best_d {
                            best_d = d;
                            best = i;
                        }
                    }
                    best
                }
                _ => 0,
            };
            let chosen = recomputed.swap_remove(best);
            self.take_claim(seq, claim, chosen);
        }
    }

    /// A stick claim must connect the two given (already-checked) endpoints.
    fn take_stick_claim(&mut self, seq: u32, claim: &StickClaim, a: PointId, b: PointId) {
        if !((claim.a, claim.b) == (a, b) || (claim.a, claim.b) == (b, a)) {
            self.fail(
                seq,
                FindingCode::CoordinateMismatch,
                format!("stick {} claims endpoints {}–{}, expected {}–{}", claim.id, claim.a, claim.b, a, b),
            );
        }
        self.sticks.insert(claim.id, (claim.a, claim.b));
    }

    /// A recomputed endpoint that is not in `new_points` must coincide with
    /// an already-known point named by the stick claim.
    fn endpoint_of(&mut self, claim: &StickClaim, recomputed: &Point2, fresh: &[PointClaim]) -> Option<PointId> {
        for id in [claim.a, claim.b] {
            if fresh.iter().any(|c| c.id == id) {
                continue;
            }
            if let Some(p) = self.points.get(&id) {
                if self.ctx.points_equal(p, recomputed) {
                    return Some(id);
                }
            }
        }
        None
    }

    fn replay(&mut self, rec: &Record) {
        *self.counts.entry(rec.instr.op_name().to_owned()).or_insert(0) += 1;
        let seq = rec.seq;
        match &rec.instr {
            Instr::GivenPoint { x, y } => {
                let (Some(x), Some(y)) = (self.num(seq, x), self.num(seq, y)) else { return };
                let p = Point2::new(x, y);
                match rec.new_points.as_slice() {
                    [claim] => self.take_claim(seq, claim, p),
                    other => self.fail(
                        seq,
                        FindingCode::CoordinateMismatch,
                        format!("given_point must claim exactly one point, found {}", other.len()),
                    ),
                }
            }
            Instr::LayStickBothEnds { a, b } => {
                let (Some(pa), Some(pb)) = (self.point(seq, *a), self.point(seq, *b)) else { return };
                match self.ctx.cmp_unit_distance(&pa, &pb) {
                    Ok(Cmp::Equal) => {}
                    Ok(_) => {
                        self.fail(
                            seq,
                            FindingCode::UnitLengthViolation,
                            format!("stick extremities {a} and {b} are at distance {}", pa.dist(&pb).to_decimal_string(12)),
                        );
                    }
                    Err(e) => {
                        self.fail(seq, FindingCode::Malformed, e.to_string());
                        return;
                    }
                }
                for claim in &rec.new_sticks {
                    self.take_stick_claim(seq, claim, *a, *b);
                }
            }
            Instr::LayStickFromThrough { from, through } => {
                let (Some(pf), Some(pt)) = (self.point(seq, *from), self.point(seq, *through)) else { return };
                match self.ctx.cmp_unit_distance(&pf, &pt) {
                    Ok(Cmp::Greater) => {
                        self.fail(
                            seq,
                            FindingCode::UnitLengthViolation,
                            format!("{through} is farther than the stick laid from {from}"),
                        );
                        return;
                    }
                    Ok(_) => {}
                    Err(e) => {
                        self.fail(seq, FindingCode::Malformed, e.to_string());
                        return;
                    }
                }
                let Ok(far) = intersect::unit_point_on_ray(&pf, &pt, &self.ctx) else {
                    self.fail(seq, FindingCode::Malformed, "degenerate ray".into());
                    return;
                };
                self.finish_lay(seq, rec, *from, far);
            }
            Instr::LayStickToward { from, x, y } => {
                let (Some(pf), Some(x), Some(y)) =
                    (self.point(seq, *from), self.num(seq, x), self.num(seq, y))
                else {
                    return;
                };
                let aim = Point2::new(x, y);
                let Ok(far) = intersect::unit_point_on_ray(&pf, &aim, &self.ctx) else {
                    self.fail(seq, FindingCode::Malformed, "degenerate aim direction".into());
                    return;
                };
                self.finish_lay(seq, rec, *from, far);
            }
            Instr::LayStickThroughBoth { a, b, t } => {
                let (Some(pa), Some(pb), Some(tv)) =
                    (self.point(seq, *a), self.point(seq, *b), self.num(seq, t))
                else {
                    return;
                };
                if tv.is_negative() || tv > Scalar::one(64) {
                    self.fail(seq, FindingCode::OffsetOutOfRange, format!("offset {t} outside [0, 1]"));
                    return;
                }
                let gap = pa.dist(&pb);
                let reach = &Scalar::one(self.bits) - &tv;
                match self.ctx.cmp_scalar(&gap, &reach) {
                    Ok(Cmp::Greater) => {
                        self.fail(
                            seq,
                            FindingCode::UnitLengthViolation,
                            format!("stick cannot reach both {a} and {b} at offset {t}"),
                        );
                        return;
                    }
                    Ok(_) => {}
                    Err(e) => {
                        self.fail(seq, FindingCode::Malformed, e.to_string());
                        return;
                    }
                }
                let u = pb.sub(&pa);
                let inv = Scalar::one(self.bits) / u.norm();
                let u = u.scale(&inv);
                let start = pa.sub(&u.scale(&tv));
                let end = start.add(&u);
                let [claim] = rec.new_sticks.as_slice() else {
                    self.fail(seq, FindingCode::Malformed, "lay instruction must claim one stick".into());
                    return;
                };
                let claim = claim.clone();
                // Pair each recomputed extremity with a fresh claim or an
                // existing point the stick claim names.
                let mut fresh: Vec<PointClaim> = rec.new_points.clone();
                let mut ids = Vec::new();
                for p in [start, end] {
                    if let Some(id) = self.endpoint_of(&claim, &p, &rec.new_points) {
                        ids.push(id);
                    } else if !fresh.is_empty() {
                        // Pair each extremity with its nearest claim so the
                        // claim order in the record does not matter.
                        let (px, py) = p.to_f64();
                        let mut best = 0;
                        let mut best_d = f64::INFINITY;
                        for (i, c) in fresh.iter().enumerate() {
                            let cx: f64 = c.x.parse().unwrap_or(f64::INFINITY);
                            let cy: f64 = c.y.parse().unwrap_or(f64::INFINITY);
                            let d = (cx - px).hypot(cy - py);
                            if d < best_d {
                                best_d = d;
                                best = i;
                            }
                        }
                        let c = fresh.swap_remove(best);
                        self.take_claim(seq, &c, p);
                        ids.push(c.id);
                    } else {
                        self.fail(
                            seq,
                            FindingCode::CoordinateMismatch,
                            "stick extremity matches neither a claim nor a known point".into(),
                        );
                        return;
                    }
                }
                self.take_stick_claim(seq, &claim, ids[0], ids[1]);
            }
            Instr::ChoosePointOnStick { stick, t, interior_only } => {
                let (Some((a, b)), Some(tv)) = (self.stick(seq, *stick), self.num(seq, t)) else {
                    return;
                };
                let one = Scalar::one(64);
                let in_range = if *interior_only {
                    tv > self.ctx.eps_eq && tv < &one - &self.ctx.eps_eq
                } else {
                    !tv.is_negative() && tv <= one
                };
                if !in_range {
                    self.fail(
                        seq,
                        FindingCode::OffsetOutOfRange,
                        format!(
                            "offset {t} outside {}",
                            if *interior_only { "(0, 1)" } else { "[0, 1]" }
                        ),
                    );
                    return;
                }
                let (Some(pa), Some(pb)) = (self.point(seq, a), self.point(seq, b)) else { return };
                let p = pa.add(&pb.sub(&pa).scale(&tv));
                self.take_claims(seq, &rec.new_points, vec![p]);
            }
            Instr::CompassIntersect { center, sticks } => {
                let [stick] = sticks.as_slice() else {
                    self.fail(
                        seq,
                        FindingCode::SimultaneityViolation,
                        format!("compass pivoted against {} sticks at once", sticks.len()),
                    );
                    return;
                };
                let (Some(pc), Some(seg)) = (self.point(seq, *center), self.segment(seq, *stick)) else {
                    return;
                };
                let hits = match intersect::unit_circle_segment(&pc, &seg, &self.ctx) {
                    Ok(h) => h,
                    Err(e) => {
                        self.fail(seq, FindingCode::Malformed, e.to_string());
                        return;
                    }
                };
                if rec.candidates != Some(hits.len()) {
                    self.fail(
                        seq,
                        FindingCode::CandidateCountMismatch,
                        format!("recorded {:?} candidates, recomputed {}", rec.candidates, hits.len()),
                    );
                }
                self.take_claims(seq, &rec.new_points, hits);
            }
            Instr::MarkCrossing { a, b } => {
                let (Some(sa), Some(sb)) = (self.segment(seq, *a), self.segment(seq, *b)) else {
                    return;
                };
                match intersect::segment_intersection(&sa, &sb, &self.ctx) {
                    Ok(intersect::SegCross::CollinearOverlap) => {
                        self.fail(
                            seq,
                            FindingCode::CollinearSticks,
                            format!("sticks {a} and {b} overlap in more than a point"),
                        );
                    }
                    Ok(intersect::SegCross::None) => {
                        if rec.candidates != Some(0) {
                            self.fail(
                                seq,
                                FindingCode::CandidateCountMismatch,
                                format!("recorded {:?} candidates, recomputed 0", rec.candidates),
                            );
                        }
                    }
                    Ok(intersect::SegCross::One(p)) => {
                        if rec.candidates != Some(1) {
                            self.fail(
                                seq,
                                FindingCode::CandidateCountMismatch,
                                format!("recorded {:?} candidates, recomputed 1", rec.candidates),
                            );
                        }
                        self.take_claims(seq, &rec.new_points, vec![p]);
                    }
                    Err(e) => self.fail(seq, FindingCode::Malformed, e.to_string()),
                }
            }
            Instr::CmpUnit { a, b } => {
                let (Some(pa), Some(pb)) = (self.point(seq, *a), self.point(seq, *b)) else { return };
                match self.ctx.cmp_unit_distance(&pa, &pb) {
                    Ok(r) => {
                        let recorded = rec.cmp.as_deref().unwrap_or("");
                        if recorded != r.to_string() {
                            self.fail(
                                seq,
                                FindingCode::MeasurementMismatch,
                                format!("recorded {recorded:?}, re-measured {r}"),
                            );
                        }
                    }
                    Err(e) => self.fail(seq, FindingCode::Malformed, e.to_string()),
                }
            }
            Instr::Output { name, points, sticks } => {
                for &p in points {
                    if !self.points.contains_key(&p) {
                        self.fail(seq, FindingCode::UnknownId, format!("output {name:?} names unknown point {p}"));
                    }
                }
                for &s in sticks {
                    if !self.sticks.contains_key(&s) {
                        self.fail(seq, FindingCode::UnknownId, format!("output {name:?} names unknown stick {s}"));
                    }
                }
            }
        }
    }

    /// Shared tail of the one-extremity lay instructions: check the stick
    /// claim and the (optional) far-point claim against the recomputed far
    /// extremity.
    fn finish_lay(&mut self, seq: u32, rec: &Record, from: PointId, far: Point2) {
        let [claim] = rec.new_sticks.as_slice() else {
            self.fail(seq, FindingCode::Malformed, "lay instruction must claim one stick".into());
            return;
        };
        let claim = claim.clone();
        let far_id = match rec.new_points.as_slice() {
            [pc] => {
                let pc = pc.clone();
                self.take_claim(seq, &pc, far);
                pc.id
            }
            [] => match self.endpoint_of(&claim, &far, &[]) {
                Some(id) => id,
                None => {
                    self.fail(
                        seq,
                        FindingCode::CoordinateMismatch,
                        "far extremity matches no claimed or known point".into(),
                    );
                    return;
                }
            },
            other => {
                self.fail(
                    seq,
                    FindingCode::Malformed,
                    format!("lay instruction claims {} points, at most one allowed", other.len()),
                );
                return;
            }
        };
        self.take_stick_claim(seq, &claim, from, far_id);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::board::Board;
    use crate::constructions::{extend_line, Toolkit};

    fn sc(text: &str) -> Scalar {
        Scalar::from_decimal(text, 256).unwrap()
    }

    fn golden() -> Trace {
        let mut tk = Toolkit::new(Config::default());
        let a = tk.board.given_point(&sc("0"), &sc("0"));
        let b = tk.board.given_point(&sc("0.6"), &sc("0.8"));
        let stick = tk.board.lay_stick_both_ends(a, b).unwrap();
        let mut l = extend_line(&mut tk, stick, true, 3.0).unwrap();
        // A perpendicular adds compass and comparison records to the trace.
        crate::constructions::perpendicular_at(&mut tk, &mut l, a).unwrap();
        tk.board.into_trace()
    }

    #[test]
    fn accepts_macro_output() {
        let text = golden().to_string();
        let report = verify_trace(&text).unwrap();
        assert_eq!(report.verdict, Verdict::Accept, "{report}");
        assert!(report.stats.instr_counts["lay_stick_from_through"] >= 4);
        assert!(report.stats.instr_counts.contains_key("compass_intersect"));
    }

    #[test]
    fn rejects_overlong_stick() {
        let mut trace = golden();
        // Stretch the second given point: the first stick is no longer unit.
        let rec = &mut trace.records[1];
        if let Instr::GivenPoint { x, .. } = &mut rec.instr {
            *x = "0.9".into();
        } else {
            panic!("record 2 should be a given point");
        }
        if let Some(c) = rec.new_points.first_mut() {
            c.x = "0.9".into();
        }
        let report = verify_trace(&trace.to_string()).unwrap();
        assert_eq!(report.verdict, Verdict::Reject);
        assert!(report.findings.iter().any(|f| f.code == FindingCode::UnitLengthViolation), "{report}");
    }

    #[test]
    fn rejects_dangling_id() {
        let mut trace = golden();
        for rec in &mut trace.records {
            if let Instr::CompassIntersect { center, .. } = &mut rec.instr {
                *center = PointId(999);
                break;
            }
        }
        let report = verify_trace(&trace.to_string()).unwrap();
        assert_eq!(report.verdict, Verdict::Reject);
        assert!(report.findings.iter().any(|f| f.code == FindingCode::UnknownId), "{report}");
    }

    #[test]
    fn rejects_nudged_coordinate() {
        let mut trace = golden();
        let rec = trace
            .records
            .iter_mut()
            .find(|r| !r.new_points.is_empty() && !matches!(r.instr, Instr::GivenPoint { .. }))
            .unwrap();
        let claim = &mut rec.new_points[0];
        let x = Scalar::from_decimal(&claim.x, 256).unwrap();
        let nudged = &x + &Scalar::from_decimal("1e-30", 256).unwrap();
        claim.x = nudged.to_decimal_string(40);
        let report = verify_trace(&trace.to_string()).unwrap();
        assert_eq!(report.verdict, Verdict::Reject);
        assert!(report.findings.iter().any(|f| f.code == FindingCode::CoordinateMismatch), "{report}");
    }

    #[test]
    fn rejects_two_stick_compass() {
        let mut trace = golden();
        for rec in &mut trace.records {
            if let Instr::CompassIntersect { sticks, .. } = &mut rec.instr {
                let s = sticks[0];
                sticks.push(s);
                break;
            }
        }
        let report = verify_trace(&trace.to_string()).unwrap();
        assert_eq!(report.verdict, Verdict::Reject);
        assert!(report.findings.iter().any(|f| f.code == FindingCode::SimultaneityViolation), "{report}");
    }

    #[test]
    fn rejects_flipped_measurement() {
        let mut board = Board::new(Config::default());
        let a = board.given_point(&sc("0"), &sc("0"));
        let b = board.given_point(&sc("0.25"), &sc("0"));
        board.cmp_unit(a, b).unwrap();
        let mut trace = board.into_trace();
        trace.records.last_mut().unwrap().cmp = Some("greater".into());
        let report = verify_trace(&trace.to_string()).unwrap();
        assert_eq!(report.verdict, Verdict::Reject);
        assert_eq!(report.findings[0].code, FindingCode::MeasurementMismatch);
    }

    #[test]
    fn rejects_wrong_candidate_count() {
        let mut trace = golden();
        for rec in &mut trace.records {
            if matches!(rec.instr, Instr::CompassIntersect { .. }) {
                rec.candidates = rec.candidates.map(|n| n + 1);
                break;
            }
        }
        let report = verify_trace(&trace.to_string()).unwrap();
        assert_eq!(report.verdict, Verdict::Reject);
        assert!(report.findings.iter().any(|f| f.code == FindingCode::CandidateCountMismatch), "{report}");
    }

    #[test]
    fn rejects_out_of_range_offset() {
        let mut trace = golden();
        for rec in &mut trace.records {
            if let Instr::ChoosePointOnStick { t, .. } = &mut rec.instr {
                *t = "1.5".into();
                break;
            }
        }
        let report = verify_trace(&trace.to_string()).unwrap();
        assert_eq!(report.verdict, Verdict::Reject);
        assert!(report.findings.iter().any(|f| f.code == FindingCode::OffsetOutOfRange), "{report}");
    }
}
