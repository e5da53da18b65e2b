//! Numeric kernel: scalars, geometric values, certified predicates and the
//! analytic intersection routines shared by the executor, the verifier and
//! the oracle.

mod scalar;

pub mod intersect;
pub mod predicates;

pub use intersect::{LineLine, SegCross};
pub use predicates::NumCtx;
pub use scalar::{Scalar, ScalarParseError};

use std::cmp::Ordering;
use std::fmt;

/// Result of comparing a distance against the unit (or another length).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Cmp {
    Less,
    Equal,
    Greater,
}

impl fmt::Display for Cmp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cmp::Less => write!(f, "less"),
            Cmp::Equal => write!(f, "equal"),
            Cmp::Greater => write!(f, "greater"),
        }
    }
}

/// Which side of the directed line p→q the point r lies on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    Left,
    Right,
    On,
}

/// Errors surfaced by the numeric kernel.
#[derive(Debug, Clone, thiserror::Error)]
pub enum NumError {
    #[error("ambiguous predicate at maximum precision: {0}")]
    AmbiguousPredicate(String),
    #[error("degenerate direction: the two points coincide")]
    DegenerateDirection,
    #[error("coincident circles have infinitely many common points")]
    CoincidentCircles,
}

/// A point of the plane; also used for free vectors.
#[derive(Clone, PartialEq, Eq)]
pub struct Point2 {
    pub x: Scalar,
    pub y: Scalar,
}

impl Point2 {
    pub fn new(x: Scalar, y: Scalar) -> Self {
        Point2 { x, y }
    }

    pub fn from_f64(x: f64, y: f64, bits: usize) -> Self {
        Point2::new(Scalar::from_f64(x, bits), Scalar::from_f64(y, bits))
    }

    pub fn from_i64(x: i64, y: i64, bits: usize) -> Self {
        Point2::new(Scalar::from_i64(x, bits), Scalar::from_i64(y, bits))
    }

    pub fn add(&self, v: &Point2) -> Point2 {
        Point2::new(&self.x + &v.x, &self.y + &v.y)
    }

    pub fn sub(&self, other: &Point2) -> Point2 {
        Point2::new(&self.x - &other.x, &self.y - &other.y)
    }

    pub fn scale(&self, k: &Scalar) -> Point2 {
        Point2::new(&self.x * k, &self.y * k)
    }

    pub fn dot(&self, other: &Point2) -> Scalar {
        &self.x * &other.x + &self.y * &other.y
    }

    pub fn cross(&self, other: &Point2) -> Scalar {
        &self.x * &other.y - &self.y * &other.x
    }

    /// Counter-clockwise quarter turn.
    pub fn perp(&self) -> Point2 {
        Point2::new(-&self.y, self.x.clone())
    }

    pub fn norm2(&self) -> Scalar {
        self.dot(self)
    }

    pub fn norm(&self) -> Scalar {
        self.norm2().sqrt()
    }

    pub fn dist(&self, other: &Point2) -> Scalar {
        self.sub(other).norm()
    }

    pub fn dist2(&self, other: &Point2) -> Scalar {
        self.sub(other).norm2()
    }

    pub fn midpoint(&self, other: &Point2) -> Point2 {
        Point2::new((&self.x + &other.x).half(), (&self.y + &other.y).half())
    }

    pub fn with_precision(&self, bits: usize) -> Point2 {
        Point2::new(self.x.with_precision(bits), self.y.with_precision(bits))
    }

    /// Deterministic tie-break order: by x, then by y (exact comparison).
    pub fn lex_cmp(&self, other: &Point2) -> Ordering {
        self.x.cmp(&other.x).then_with(|| self.y.cmp(&other.y))
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (self.x.to_f64(), self.y.to_f64())
    }
}

impl fmt::Debug for Point2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {:?})", self.x, self.y)
    }
}

/// A segment with distinct endpoints.
#[derive(Debug, Clone)]
pub struct Segment2 {
    pub a: Point2,
    pub b: Point2,
}

impl Segment2 {
    pub fn new(a: Point2, b: Point2) -> Self {
        Segment2 { a, b }
    }
}

/// An unbounded line: anchor point plus unit direction.
#[derive(Debug, Clone)]
pub struct Line2 {
    pub anchor: Point2,
    pub dir: Point2,
}

impl Line2 {
    /// Line through two distinct points; the direction is normalized.
    pub fn through(a: &Point2, b: &Point2, ctx: &NumCtx) -> Result<Line2, NumError> {
        let d = b.sub(a);
        let n = d.norm();
        if ctx.points_equal(a, b) {
            return Err(NumError::DegenerateDirection);
        }
        Ok(Line2 { anchor: a.clone(), dir: d.scale(&(Scalar::one(n.precision()) / &n)) })
    }

    pub fn from_anchor_dir(anchor: Point2, dir: Point2) -> Line2 {
        let n = dir.norm();
        let dir = dir.scale(&(Scalar::one(n.precision()) / &n));
        Line2 { anchor, dir }
    }

    /// Signed coordinate of `p` along the line.
    pub fn param_of(&self, p: &Point2) -> Scalar {
        p.sub(&self.anchor).dot(&self.dir)
    }

    pub fn point_at(&self, t: &Scalar) -> Point2 {
        self.anchor.add(&self.dir.scale(t))
    }

    /// Signed distance of `p` from the line (positive on the left of `dir`).
    pub fn signed_dist(&self, p: &Point2) -> Scalar {
        self.dir.cross(&p.sub(&self.anchor))
    }

    pub fn foot_of(&self, p: &Point2) -> Point2 {
        self.point_at(&self.param_of(p))
    }
}

/// A circle with strictly positive radius.
#[derive(Debug, Clone)]
pub struct Circle2 {
    pub center: Point2,
    pub radius: Scalar,
}

impl Circle2 {
    pub fn new(center: Point2, radius: Scalar) -> Self {
        debug_assert!(radius.is_positive());
        Circle2 { center, radius }
    }
}

/// Sort a set of points into the canonical (x, y)-lexicographic order.
pub fn sort_points_lex(points: &mut [Point2]) {
    points.sort_by(|a, b| a.lex_cmp(b));
}
