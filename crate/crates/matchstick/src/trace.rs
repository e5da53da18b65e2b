//! On-disk trace format.
//!
//! A trace is line-oriented JSON: the first line is the [`Header`] (run
//! configuration), every following line is one [`Record`] — the instruction
//! that was executed plus the executor's claims about its results (new points
//! with decimal coordinates, new sticks, candidate counts, comparison
//! outcomes). The verifier re-derives each claim independently.
//!
//! All numeric instruction parameters are stored as canonical decimal strings
//! at the configured number of output digits, and the executor itself re-reads
//! its parameters through the same canonicalization before using them. Replay
//! from the file therefore reproduces bit-identical coordinates.

use std::fmt;
use std::io::{BufRead, Write};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::config::{ChoiceStrategy, Config};
use crate::numerics::Scalar;

/// Identifier of a point on the board; serialized as `"P<n>"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PointId(pub u32);

/// Identifier of a stick on the board; serialized as `"S<n>"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StickId(pub u32);

impl fmt::Display for PointId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P{}", self.0)
    }
}

impl fmt::Display for StickId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S{}", self.0)
    }
}

macro_rules! id_serde {
    ($ty:ident, $prefix:literal) => {
        impl Serialize for $ty {
            fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                s.serialize_str(&self.to_string())
            }
        }
        impl<'de> Deserialize<'de> for $ty {
            fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
                let text = String::deserialize(d)?;
                let num = text
                    .strip_prefix($prefix)
                    .and_then(|n| n.parse().ok())
                    .ok_or_else(|| {
                        serde::de::Error::custom(format!(
                            "expected {}<n> identifier, got {text:?}",
                            $prefix
                        ))
                    })?;
                Ok($ty(num))
            }
        }
    };
}

id_serde!(PointId, "P");
id_serde!(StickId, "S");

/// First line of a trace file.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Header {
    pub version: u32,
    pub precision_bits: usize,
    pub max_precision_bits: usize,
    pub epsilon_eq: String,
    pub epsilon_cmp: String,
    pub seed: u64,
    pub choice_strategy: ChoiceStrategy,
    pub output_digits: usize,
}

pub const TRACE_VERSION: u32 = 1;

impl Header {
    pub fn from_config(config: &Config) -> Self {
        Header {
            version: TRACE_VERSION,
            precision_bits: config.precision_bits,
            max_precision_bits: config.max_precision_bits,
            epsilon_eq: epsilon_repr(&config.epsilon_eq),
            epsilon_cmp: epsilon_repr(&config.epsilon_cmp),
            seed: config.seed,
            choice_strategy: config.choice_strategy,
            output_digits: config.output_digits,
        }
    }

    pub fn to_config(&self) -> Result<Config, TraceError> {
        let file = crate::config::ConfigFile {
            precision_bits: Some(self.precision_bits),
            max_precision_bits: Some(self.max_precision_bits),
            epsilon_eq: Some(self.epsilon_eq.clone()),
            epsilon_cmp: Some(self.epsilon_cmp.clone()),
            seed: Some(self.seed),
            choice_strategy: Some(self.choice_strategy),
            output_digits: Some(self.output_digits),
        };
        file.apply(Config::default()).map_err(|e| TraceError::BadHeader(e.to_string()))
    }
}

/// Render an epsilon compactly as `2^-k` when it is an exact power of two.
fn epsilon_repr(eps: &Scalar) -> String {
    for k in 1..=512 {
        if *eps == Scalar::pow2(-k, 64) {
            return format!("2^-{k}");
        }
    }
    eps.to_decimal_string(40)
}

/// One primitive instruction, as recorded in the trace.
///
/// Offsets `t` and coordinates are canonical decimal strings; point and stick
/// references use ids assigned by earlier records.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "snake_case")]
pub enum Instr {
    /// A program input point enters the board.
    GivenPoint { x: String, y: String },
    /// Postulate i: lay a stick with its extremities on two known points at
    /// unit distance.
    LayStickBothEnds { a: PointId, b: PointId },
    /// Postulate i: lay a stick with one extremity on `from`, passing through
    /// `through` (which is at distance at most one).
    LayStickFromThrough { from: PointId, through: PointId },
    /// Postulate i: lay a stick through two known points at distance at most
    /// one, starting at signed offset `t` before the first point.
    LayStickThroughBoth { a: PointId, b: PointId, t: String },
    /// Postulate i: lay a stick with one extremity on `from`, aimed through
    /// the auxiliary location `(x, y)`. The location only fixes a direction;
    /// it does not become a board point.
    LayStickToward { from: PointId, x: String, y: String },
    /// Postulate ii: choose the point at offset `t` in `[0, 1]` along a stick.
    ChoosePointOnStick { stick: StickId, t: String, interior_only: bool },
    /// Postulate iii: pivot a unit stick about `center` and mark where its
    /// far extremity meets the listed sticks. Exactly one stick may be
    /// listed; more is a simultaneity violation.
    CompassIntersect { center: PointId, sticks: Vec<StickId> },
    /// Mark the crossing point of two already-placed sticks.
    MarkCrossing { a: StickId, b: StickId },
    /// Postulate i used as a gauge: compare the distance of two points
    /// against the unit without placing a stick.
    CmpUnit { a: PointId, b: PointId },
    /// Name a set of points and sticks as a program result.
    Output { name: String, points: Vec<PointId>, sticks: Vec<StickId> },
}

impl Instr {
    /// Short operation name as it appears in the file.
    pub fn op_name(&self) -> &'static str {
        match self {
            Instr::GivenPoint { .. } => "given_point",
            Instr::LayStickBothEnds { .. } => "lay_stick_both_ends",
            Instr::LayStickFromThrough { .. } => "lay_stick_from_through",
            Instr::LayStickThroughBoth { .. } => "lay_stick_through_both",
            Instr::LayStickToward { .. } => "lay_stick_toward",
            Instr::ChoosePointOnStick { .. } => "choose_point_on_stick",
            Instr::CompassIntersect { .. } => "compass_intersect",
            Instr::MarkCrossing { .. } => "mark_crossing",
            Instr::CmpUnit { .. } => "cmp_unit",
            Instr::Output { .. } => "output",
        }
    }
}

/// Claimed coordinates of a point created by an instruction.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PointClaim {
    pub id: PointId,
    pub x: String,
    pub y: String,
}

/// Claimed endpoints of a stick created by an instruction.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StickClaim {
    pub id: StickId,
    pub a: PointId,
    pub b: PointId,
}

/// One line of the trace: an instruction and the executor's claims.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Record {
    pub seq: u32,
    #[serde(flatten)]
    pub instr: Instr,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub new_points: Vec<PointClaim>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub new_sticks: Vec<StickClaim>,
    /// Number of intersection candidates for compass / crossing instructions.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub candidates: Option<usize>,
    /// Result of a `cmp_unit` instruction: `less`, `equal` or `greater`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cmp: Option<String>,
}

/// A full trace: header plus records.
#[derive(Debug, Clone, PartialEq)]
pub struct Trace {
    pub header: Header,
    pub records: Vec<Record>,
}

impl Trace {
    pub fn write_to<W: Write>(&self, mut w: W) -> Result<(), TraceError> {
        let line = serde_json::to_string(&self.header)?;
        writeln!(w, "{line}")?;
        for rec in &self.records {
            let line = serde_json::to_string(rec)?;
            writeln!(w, "{line}")?;
        }
        Ok(())
    }

    pub fn to_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_to(&mut buf).expect("writing to a Vec cannot fail");
        String::from_utf8(buf).expect("traces are UTF-8")
    }

    pub fn read_from<R: BufRead>(r: R) -> Result<Self, TraceError> {
        let mut lines = r.lines().enumerate();
        let header = loop {
            let (n, line) = lines.next().ok_or(TraceError::Empty)?;
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            break serde_json::from_str::<Header>(&line)
                .map_err(|e| TraceError::BadLine { line: n + 1, reason: e.to_string() })?;
        };
        if header.version != TRACE_VERSION {
            return Err(TraceError::BadHeader(format!(
                "unsupported trace version {}",
                header.version
            )));
        }
        let mut records = Vec::new();
        for (n, line) in lines {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let rec = serde_json::from_str::<Record>(&line)
                .map_err(|e| TraceError::BadLine { line: n + 1, reason: e.to_string() })?;
            records.push(rec);
        }
        Ok(Trace { header, records })
    }

    pub fn parse(text: &str) -> Result<Self, TraceError> {
        Trace::read_from(text.as_bytes())
    }
}

#[derive(Debug, thiserror::Error)]
pub enum TraceError {
    #[error("trace file is empty")]
    Empty,
    #[error("bad trace header: {0}")]
    BadHeader(String),
    #[error("trace line {line}: {reason}")]
    BadLine { line: usize, reason: String },
    #[error("trace serialization failed: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Trace {
        let header = Header::from_config(&Config::default());
        let records = vec![
            Record {
                seq: 1,
                instr: Instr::GivenPoint { x: "0".into(), y: "0".into() },
                new_points: vec![PointClaim { id: PointId(0), x: "0".into(), y: "0".into() }],
                new_sticks: vec![],
                candidates: None,
                cmp: None,
            },
            Record {
                seq: 2,
                instr: Instr::GivenPoint { x: "0.6".into(), y: "0.8".into() },
                new_points: vec![PointClaim { id: PointId(1), x: "0.6".into(), y: "0.8".into() }],
                new_sticks: vec![],
                candidates: None,
                cmp: None,
            },
            Record {
                seq: 3,
                instr: Instr::LayStickBothEnds { a: PointId(0), b: PointId(1) },
                new_points: vec![],
                new_sticks: vec![StickClaim { id: StickId(0), a: PointId(0), b: PointId(1) }],
                candidates: None,
                cmp: None,
            },
            Record {
                seq: 4,
                instr: Instr::CmpUnit { a: PointId(0), b: PointId(1) },
                new_points: vec![],
                new_sticks: vec![],
                candidates: None,
                cmp: Some("equal".into()),
            },
        ];
        Trace { header, records }
    }

    #[test]
    fn round_trip_is_byte_identical() {
        let t = sample();
        let s1 = t.to_string();
        let back = Trace::parse(&s1).unwrap();
        assert_eq!(back, t);
        assert_eq!(back.to_string(), s1);
    }

    #[test]
    fn ids_render_with_prefixes() {
        let t = sample();
        let s = t.to_string();
        assert!(s.contains("\"P0\""));
        assert!(s.contains("\"S0\""));
        assert!(s.contains("\"op\":\"lay_stick_both_ends\""));
    }

    #[test]
    fn header_round_trips_through_config() {
        let h = Header::from_config(&Config::default());
        assert_eq!(h.epsilon_eq, "2^-128");
        let c = h.to_config().unwrap();
        assert_eq!(c.precision_bits, 256);
        assert_eq!(Header::from_config(&c), h);
    }

    #[test]
    fn rejects_unknown_version() {
        let mut t = sample();
        t.header.version = 99;
        let s = t.to_string();
        assert!(matches!(Trace::parse(&s), Err(TraceError::BadHeader(_))));
    }

    #[test]
    fn reports_line_number_on_bad_record() {
        let t = sample();
        let mut s = t.to_string();
        s.push_str("{\"seq\":5,\"op\":\"no_such_op\"}\n");
        match Trace::parse(&s) {
            Err(TraceError::BadLine { line, .. }) => assert_eq!(line, 6),
            other => panic!("expected BadLine, got {other:?}"),
        }
    }
}
